
use super::arrangement::{Arrangement, CentralArrangement};
use crate::arith::OrderedField;
use crate::error::{Error, Result};

fn det3<F: OrderedField>(r0: &[F; 3], r1: &[F; 3], r2: &[F; 3]) -> F {
    let m = |a: &F, b: &F| a.clone() * b.clone();
    m(&r0[0], &(m(&r1[1], &r2[2]) - m(&r1[2], &r2[1])))
        - m(&r0[1], &(m(&r1[0], &r2[2]) - m(&r1[2], &r2[0])))
        + m(&r0[2], &(m(&r1[0], &r2[1]) - m(&r1[1], &r2[0])))
}

fn unit<F: OrderedField>(k: usize) -> [F; 3] {
    let mut v = [F::zero(), F::zero(), F::zero()];
    v[k] = F::one();
    v
}

/// Affine chart with the plane at 1-based position `infinity` sent to the
/// line at infinity. The chart coordinates are the first pair of coordinate
/// functionals `(x, y)`, `(x, z)`, `(y, z)` independent of that plane.
pub fn decone<F: OrderedField>(central: &CentralArrangement<F>, infinity: usize) -> Result<Arrangement<F>> {
    let planes = central.planes();
    let h = planes
        .get(infinity.wrapping_sub(1))
        .ok_or(Error::IndexOutOfRange { index: infinity, len: planes.len() })?;
    let (u, v, d) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .map(|(i, j)| {
            let (u, v) = (unit::<F>(i), unit::<F>(j));
            let d = det3(&u, &v, h);
            (u, v, d)
        })
        .find(|(_, _, d)| !d.is_zero())
        .expect("a nonzero plane is independent of some coordinate pair");

    let mut coeffs = Vec::with_capacity(planes.len() - 1);
    for (k, l) in planes.iter().enumerate() {
        if k + 1 == infinity {
            continue;
        }
        // l = α u + β v + γ h  by Cramer's rule
        let alpha = det3(l, &v, h) / d.clone();
        let beta = det3(&u, l, h) / d.clone();
        let gamma = det3(&u, &v, l) / d.clone();
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::DuplicateLine { first: infinity.min(k + 1), second: infinity.max(k + 1) });
        }
        coeffs.push((alpha, beta, -gamma));
    }
    Arrangement::new(coeffs)
}

/// Cone over an affine arrangement: `a·x + b·y = c` becomes
/// `a·x + b·y − c·z = 0`, and the plane `z = 0` is appended last.
pub fn cone<F: OrderedField>(arr: &Arrangement<F>) -> CentralArrangement<F> {
    let mut planes: Vec<[F; 3]> =
        arr.lines().iter().map(|l| [l.a.clone(), l.b.clone(), -l.c.clone()]).collect();
    planes.push(unit(2));
    CentralArrangement::new(planes).expect("cone of a valid arrangement")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::parse_central;
    use crate::FieldElement;
    use num_traits::Zero;

    #[test]
    fn coordinate_cone() {
        let c = parse_central("central\n1 0 0\n0 1 0\n1 -1 0\n0 0 1\n").unwrap();
        let a = decone(&c, 4).unwrap();
        let expected = Arrangement::<FieldElement>::new(vec![
            (FieldElement::from_integer(1), FieldElement::zero(), FieldElement::zero()),
            (FieldElement::zero(), FieldElement::from_integer(1), FieldElement::zero()),
            (FieldElement::from_integer(1), FieldElement::from_integer(-1), FieldElement::zero()),
        ])
        .unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn other_charts() {
        // plane x = 0 at infinity: chart (y, z)
        let c = parse_central("central\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n").unwrap();
        let a = decone(&c, 1).unwrap();
        assert_eq!(a.len(), 3);
        assert!(decone(&c, 9).is_err());
    }

    #[test]
    fn duplicate_of_infinity_rejected() {
        let c = parse_central("central\n1 0 0\n2 0 0\n0 1 0\n").unwrap();
        assert!(matches!(decone(&c, 1), Err(Error::DuplicateLine { .. })));
    }
}
