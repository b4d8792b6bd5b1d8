//! Built-in arrangements.
//!
//! `decID` is the fifteen-line deconing of the icosidodecahedral arrangement.
//! Its lines come in five parallel families with normals at angles `72°·k`;
//! family `k` consists of the lines `cos(72°k)·x + sin(72°k)·y = c` for the
//! offsets `c ∈ {cos 36°, (√5−2)/2, −sin 18°}`. After the linear change of
//! coordinates `y ↦ y·sin 72°` every coefficient lies in ℚ(√5).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::arrangement::{Arrangement, CentralArrangement};
use super::decone::cone;
use crate::arith::QSqrt5;
use crate::error::{Error, Result};
use crate::FieldElement;

fn q5(a: (i64, i64), b: (i64, i64)) -> FieldElement {
    let r = |(n, d): (i64, i64)| BigRational::new(BigInt::from(n), BigInt::from(d));
    QSqrt5::new(r(a), r(b))
}

fn int(n: i64) -> FieldElement {
    q5((n, 1), (0, 1))
}

/// Labels per family `k` for the (outer, inner, blue) offsets.
const DECID_LABELS: [[usize; 3]; 5] = [[8, 3, 13], [10, 5, 15], [7, 2, 12], [9, 4, 14], [6, 1, 11]];

pub fn decid() -> Arrangement {
    // cos(72°k) and sin(72°k)/sin 72°
    let cosines = [
        int(1),
        q5((-1, 4), (1, 4)),
        q5((-1, 4), (-1, 4)),
        q5((-1, 4), (-1, 4)),
        q5((-1, 4), (1, 4)),
    ];
    let sines = [int(0), int(1), q5((-1, 2), (1, 2)), q5((1, 2), (-1, 2)), int(-1)];
    let offsets = [q5((1, 4), (1, 4)), q5((-1, 1), (1, 2)), q5((1, 4), (-1, 4))];

    let mut by_label: Vec<Option<(FieldElement, FieldElement, FieldElement)>> = vec![None; 15];
    for k in 0..5 {
        for (o, &label) in DECID_LABELS[k].iter().enumerate() {
            by_label[label - 1] = Some((cosines[k].clone(), sines[k].clone(), offsets[o].clone()));
        }
    }
    Arrangement::new(by_label.into_iter().map(|l| l.expect("every label assigned")).collect())
        .expect("decID lines are distinct")
}

/// The double star: lines 6..15 of decID, keeping their labels.
pub fn double_star() -> Arrangement {
    decid().sub_arrangement(&(6..=15).collect::<Vec<_>>()).expect("positions in range")
}

/// Tangent lines to the parabola `y = x²` at `x = 1..n`: no two parallel,
/// no three concurrent.
pub fn generic(n: usize) -> Arrangement {
    let coeffs = (1..=n as i64).map(|i| (int(2 * i), int(-1), int(i * i))).collect();
    Arrangement::new(coeffs).expect("tangent lines are distinct")
}

/// `n` lines through the origin with slopes `0, 1, …, n−1` (first line
/// `y = 0`).
pub fn pencil(n: usize) -> Arrangement {
    let coeffs = (0..n as i64).map(|i| (int(i), int(-1), FieldElement::zero())).collect();
    Arrangement::new(coeffs).expect("pencil lines are distinct")
}

pub const NAMES: [&str; 4] = ["decID", "DP", "generic(n)", "pencil(n)"];

fn parse_call(name: &str, func: &str) -> Option<Result<usize>> {
    let inner = name.strip_prefix(func)?.strip_prefix('(')?.strip_suffix(')')?;
    Some(
        inner
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::UnknownArrangement(name.to_string())),
    )
}

/// Looks up a built-in affine arrangement by name (without the `@`).
pub fn catalog(name: &str) -> Result<Arrangement> {
    match name {
        "decID" => return Ok(decid()),
        "DP" => return Ok(double_star()),
        _ => {}
    }
    if let Some(n) = parse_call(name, "generic") {
        return Ok(generic(n?));
    }
    if let Some(n) = parse_call(name, "pencil") {
        return Ok(pencil(n?));
    }
    Err(Error::UnknownArrangement(name.to_string()))
}

/// Built-in central arrangements: `cone(NAME)` for any affine built-in.
pub fn central_catalog(name: &str) -> Result<CentralArrangement> {
    let inner = name
        .strip_prefix("cone(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::UnknownArrangement(name.to_string()))?;
    Ok(cone(&catalog(inner)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::intersection_data;

    #[test]
    fn decid_outer_vertical_line() {
        let arr = decid();
        let l8 = &arr.lines()[7];
        assert_eq!((l8.a.clone(), l8.b.clone()), (int(1), int(0)));
        assert_eq!(l8.c, "(1+1*s5)/4".parse().unwrap());
    }

    #[test]
    fn double_star_lines() {
        let dp = double_star();
        assert_eq!(dp.len(), 10);
        assert_eq!(dp.labels(), (6..=15).collect::<Vec<_>>());
        assert_eq!(dp.lines()[0].c, decid().lines()[5].c);
    }

    #[test]
    fn names() {
        assert_eq!(catalog("pencil(3)").unwrap().len(), 3);
        assert_eq!(catalog("generic(4)").unwrap().len(), 4);
        assert!(catalog("nope").is_err());
        assert!(catalog("pencil(x)").is_err());
        assert_eq!(central_catalog("cone(decID)").unwrap().len(), 16);
    }

    #[test]
    fn decid_combinatorics() {
        let arr = decid();
        let d = intersection_data(&arr);
        assert_eq!(d.points.len(), 40);
        assert_eq!(d.multiplicity_histogram(), vec![(2, 30), (4, 10)]);
        assert_eq!(d.parallel_classes.len(), 5);
        assert!(d.parallel_classes.iter().all(|c| c.len() == 3));
        // 30·1 + 10·6 + 5·3 = 105
        assert!(d.pair_count_consistent());
        let p = crate::geometry::face_poset(&arr).unwrap();
        assert_eq!((p.chambers.len(), p.edges.len(), p.vertices.len()), (76, 115, 40));
        let quadruple = (0..40).find(|&v| p.vertex_lines[v].len() == 4).unwrap();
        assert_eq!(p.rotational_order(quadruple).len(), 16);
    }

    #[test]
    fn generic_is_generic() {
        let d = intersection_data(&generic(6));
        assert_eq!(d.points.len(), 15);
        assert!(d.points.iter().all(|p| p.multiplicity() == 2));
        assert_eq!(d.parallel_classes.len(), 6);
    }
}
