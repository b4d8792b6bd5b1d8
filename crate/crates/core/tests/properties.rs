mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use twocover::analysis::Analyzer;
use twocover::arith::{invariant_factors, rank_mod2, rank_mod2_sparse, Matrix, OrderedField, QSqrt5, Sign, SparseMatrix};
use twocover::homology::homology;
use twocover::salvetti::{decorate, ZComplex};
use twocover::{FieldElement, OmegaClass, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn element() -> impl Strategy<Value = FieldElement> {
    (-20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6).prop_map(|(a, da, b, db)| QSqrt5::new(q(a, da), q(b, db)))
}

fn approx(x: &FieldElement) -> f64 {
    let f = |r: &Rational| r.numer().to_string().parse::<f64>().unwrap() / r.denom().to_string().parse::<f64>().unwrap();
    f(&x.a) + f(&x.b) * 5f64.sqrt()
}

fn small_matrix(max: usize, bound: i64) -> impl Strategy<Value = Matrix<i64>> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -bound..=bound], c), r)
            .prop_map(|rows| Matrix::from_rows(rows).unwrap())
    })
}

/// Rank over ℚ by Gaussian elimination.
fn rational_rank(m: &Matrix<i64>) -> usize {
    let mut a: Vec<Vec<Rational>> =
        (0..m.rows()).map(|i| m.row(i).iter().map(|&v| Rational::from_integer(v.into())).collect()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        for i in 0..a.len() {
            if i != rank && !a[i][col].is_zero() {
                let f = a[i][col].clone() / a[rank][col].clone();
                for j in col..m.cols() {
                    let v = a[rank][j].clone() * f.clone();
                    a[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over F₂ on plain booleans.
fn bool_rank(m: &Matrix<i64>) -> usize {
    let mut a: Vec<Vec<bool>> = (0..m.rows()).map(|i| m.row(i).iter().map(|v| v.is_odd()).collect()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&i| a[i][col]) else { continue };
        a.swap(rank, p);
        for i in 0..a.len() {
            if i != rank && a[i][col] {
                for j in 0..m.cols() {
                    a[i][j] ^= a[rank][j];
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #[test]
    fn field_axioms(x in element(), y in element(), z in element()) {
        prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(x.clone() - x.clone(), FieldElement::zero());
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * x.inverse().unwrap(), FieldElement::one());
            prop_assert_eq!(y.clone() / x.clone() * x.clone(), y.clone());
        }
    }

    #[test]
    fn sign_is_multiplicative(x in element(), y in element()) {
        prop_assert_eq!((x.clone() * y.clone()).sign(), x.sign() * y.sign());
        prop_assert_eq!((-x.clone()).sign(), x.sign().flip());
    }

    #[test]
    fn sign_agrees_with_floating_point(x in element()) {
        let v = approx(&x);
        let want = if x.is_zero() { Sign::Zero } else if v > 0.0 { Sign::Pos } else { Sign::Neg };
        prop_assert_eq!(x.sign(), want);
    }

    #[test]
    fn display_parses_back(x in element()) {
        let text = x.to_string();
        prop_assert_eq!(text.parse::<FieldElement>().unwrap(), x);
    }

    #[test]
    fn smith_rank_is_rational_rank(m in small_matrix(7, 6)) {
        prop_assert_eq!(invariant_factors(&m).rank(), rational_rank(&m));
    }

    #[test]
    fn odd_factors_count_mod2_rank(m in small_matrix(7, 4)) {
        let odd = invariant_factors(&m).invariant_factors.iter().filter(|d| d.is_odd()).count();
        prop_assert_eq!(odd, bool_rank(&m));
        prop_assert_eq!(rank_mod2(&m), bool_rank(&m));
    }

    #[test]
    fn sparse_and_dense_mod2_rank_agree(m in small_matrix(12, 3)) {
        prop_assert_eq!(rank_mod2_sparse(&SparseMatrix::from_dense(&m)), rank_mod2(&m));
    }

    #[test]
    fn smith_chain_divides(m in small_matrix(6, 9)) {
        let f = invariant_factors(&m).invariant_factors;
        prop_assert!(f.iter().all(|d| d.is_positive()));
        prop_assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
    }

    #[test]
    fn omega_round_trips(bits in prop::collection::vec(any::<bool>(), 1..16)) {
        prop_assume!(bits.iter().any(|&b| b));
        let n = bits.len();
        let w = OmegaClass::new(bits).unwrap();
        prop_assert_eq!(OmegaClass::parse(&w.to_string(), n).unwrap(), w.clone());
        prop_assert_eq!(OmegaClass::from_indices(n, &w.indices()).unwrap(), w);
    }
}

/// `C₂ → C₁ → C₀` with `d₁` supported on the first `s` columns and `d₂` on
/// the remaining rows, then conjugated on `C₁` by elementary operations.
fn chain_complex() -> impl Strategy<Value = (Matrix<i64>, Matrix<i64>)> {
    (1usize..=5, 1usize..=6, 1usize..=5)
        .prop_flat_map(|(r0, r1, r2)| (Just((r0, r1, r2)), 0..=r1))
        .prop_flat_map(|((r0, r1, r2), s)| {
            let d1 = prop::collection::vec(prop::collection::vec(-3i64..=3, s), r0);
            let d2 = prop::collection::vec(prop::collection::vec(-3i64..=3, r2), r1 - s);
            let ops = prop::collection::vec((0..r1, 0..r1, -2i64..=2), 0..8);
            (Just((r0, r1, r2, s)), d1, d2, ops)
        })
        .prop_map(|((r0, r1, r2, s), d1, d2, ops)| {
            let mut a = vec![vec![0i64; r1]; r0];
            for (i, row) in d1.into_iter().enumerate() {
                a[i][..s].copy_from_slice(&row);
            }
            let mut b = vec![vec![0i64; r2]; r1];
            for (i, row) in d2.into_iter().enumerate() {
                b[s + i] = row;
            }
            for (i, j, c) in ops {
                if i == j {
                    continue;
                }
                for row in a.iter_mut() {
                    row[j] += c * row[i];
                }
                for k in 0..r2 {
                    b[i][k] -= c * b[j][k];
                }
            }
            (Matrix::from_rows_with_shape(r0, r1, a).unwrap(), Matrix::from_rows_with_shape(r1, r2, b).unwrap())
        })
}

proptest! {
    #[test]
    fn homology_matches_rank_oracles((d1, d2) in chain_complex()) {
        let ranks = [d1.rows(), d1.cols(), d2.cols()];
        let cx = ZComplex::new(ranks, &d1, &d2).unwrap();
        let h = homology(&cx).unwrap();
        let (q1, q2) = (rational_rank(&d1), rational_rank(&d2));
        let (f1, f2) = (bool_rank(&d1), bool_rank(&d2));
        let betti = [ranks[0] - q1, ranks[1] - q1 - q2, ranks[2] - q2];
        let mod2 = [ranks[0] - f1, ranks[1] - f1 - f2, ranks[2] - f2];
        for k in 0..3 {
            prop_assert_eq!(h.betti(k), betti[k]);
            prop_assert_eq!(h.mod2_rank(k), mod2[k]);
            let below = if k == 0 { 0 } else { h.tau(k - 1) };
            prop_assert_eq!(mod2[k], betti[k] + h.tau(k) + below);
        }
        prop_assert_eq!(h.tau(2), 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// ρ_k from ranks of the t = −1 boundary maps over ℚ.
    #[test]
    fn twisted_ranks_match_rational_oracle(seed in any::<u64>(), pick in any::<u64>()) {
        let arr = common::random_arrangements(1, seed).pop().unwrap();
        let a = Analyzer::new("random", &arr).unwrap();
        let n = a.num_lines();
        let w = OmegaClass::from_mask(n, 1 + pick % ((1u64 << n) - 1)).unwrap();
        let r = a.analyze(&w).unwrap();
        let local = decorate(a.complex(), &w).unwrap().specialize(-1);
        let r1 = rational_rank(&local.d1.to_dense());
        let r2 = rational_rank(&local.d2.to_dense());
        let c = local.ranks;
        let rho = [c[0] - r1, c[1] - r1 - r2, c[2] - r2];
        for k in 0..3 {
            prop_assert_eq!(r.rho(k), rho[k], "k={}", k);
        }
    }
}
