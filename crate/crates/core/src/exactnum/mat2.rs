use std::fmt;

use super::poly::HomPoly;
use super::scalar::{GaussExt, Radical, Scalar};
use crate::error::{Error, Result};

/// A 2×2 matrix `[[e0, e1], [e2, e3]]` over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2<S> {
    e: [S; 4],
}

impl<S: Scalar> Mat2<S> {
    /// Row-major entries.
    pub fn new(e: [S; 4]) -> Self {
        Mat2 { e }
    }

    pub fn identity() -> Self {
        Self::diag(S::one(), S::one())
    }

    pub fn diag(x: S, y: S) -> Self {
        Mat2 {
            e: [x, S::zero(), S::zero(), y],
        }
    }

    pub fn entries(&self) -> &[S; 4] {
        &self.e
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.e[2 * row + col]
    }

    pub fn det(&self) -> S {
        self.e[0].mul_ref(&self.e[3]) - self.e[1].mul_ref(&self.e[2])
    }

    pub fn trace(&self) -> S {
        self.e[0].clone() + &self.e[3]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &o.e;
        Mat2 {
            e: [
                a.mul_ref(p) + b.mul_ref(r),
                a.mul_ref(q) + b.mul_ref(s),
                c.mul_ref(p) + d.mul_ref(r),
                c.mul_ref(q) + d.mul_ref(s),
            ],
        }
    }

    pub fn conj_transpose(&self) -> Self {
        let [a, b, c, d] = &self.e;
        Mat2 {
            e: [a.conj(), c.conj(), b.conj(), d.conj()],
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        let inv_det = det.inv().ok_or(Error::SingularMatrix)?;
        let [a, b, c, d] = &self.e;
        Ok(Mat2 {
            e: [
                d.mul_ref(&inv_det),
                -b.mul_ref(&inv_det),
                -c.mul_ref(&inv_det),
                a.mul_ref(&inv_det),
            ],
        })
    }

    /// Inverse of a determinant-one matrix; anything else is rejected.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_canonical()));
        }
        let [a, b, c, d] = &self.e;
        Ok(Mat2 {
            e: [d.clone(), -b.clone(), -c.clone(), a.clone()],
        })
    }

    pub fn is_unitary(&self) -> bool {
        self.conj_transpose().mul(self) == Self::identity()
    }

    /// Unitary with determinant one, i.e. an element of SU(2).
    pub fn is_special_unitary(&self) -> bool {
        self.det().is_one() && self.is_unitary()
    }

    pub fn check_special_unitary(&self) -> Result<()> {
        if self.is_special_unitary() {
            Ok(())
        } else {
            Err(Error::NotSpecialUnitary(format!("{self}")))
        }
    }

    /// The rows as linear forms in `(a, c)`: the matrix sends the column
    /// `(a, c)` to `(x, y)`.
    pub fn linear_forms(&self) -> (HomPoly<S>, HomPoly<S>) {
        let [p, q, r, s] = &self.e;
        (
            HomPoly::from_coeffs(vec![p.clone(), q.clone()]),
            HomPoly::from_coeffs(vec![r.clone(), s.clone()]),
        )
    }

    pub fn to_strings(&self) -> [[String; 2]; 2] {
        let s: Vec<String> = self.e.iter().map(Scalar::to_canonical).collect();
        [[s[0].clone(), s[1].clone()], [s[2].clone(), s[3].clone()]]
    }

    pub fn parse_strings(rows: &[[String; 2]; 2]) -> Result<Self> {
        let parse = |s: &String| S::parse_canonical(s).map_err(Error::from);
        Ok(Mat2 {
            e: [
                parse(&rows[0][0])?,
                parse(&rows[0][1])?,
                parse(&rows[1][0])?,
                parse(&rows[1][1])?,
            ],
        })
    }
}

impl<R: Radical> Mat2<GaussExt<R>> {
    /// The image of the quaternion `w + x·i + y·j + z·k` in SU(2):
    /// `[[w + x i, y + z i], [-y + z i, w - x i]]`.
    pub fn from_quaternion(w: GaussExt<R>, x: GaussExt<R>, y: GaussExt<R>, z: GaussExt<R>) -> Self {
        let i = GaussExt::<R>::i();
        Mat2 {
            e: [
                w.clone() + x.mul_ref(&i),
                y.clone() + z.mul_ref(&i),
                -y + z.mul_ref(&i),
                w - x.mul_ref(&i),
            ],
        }
    }
}

impl<S: Scalar> fmt::Display for Mat2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.e;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

impl<S: Scalar> fmt::Debug for Mat2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat2{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::NoRadical;
    use num_traits::{One, Zero};

    type Qi = GaussExt<NoRadical>;

    fn quat(w: i64, x: i64, y: i64, z: i64, den: i64) -> Mat2<Qi> {
        let s = |n| Qi::gaussian_int(n, 0, den);
        Mat2::from_quaternion(s(w), s(x), s(y), s(z))
    }

    #[test]
    fn quaternion_units_multiply() {
        let (i, j, k) = (
            quat(0, 1, 0, 0, 1),
            quat(0, 0, 1, 0, 1),
            quat(0, 0, 0, 1, 1),
        );
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(i.mul(&i), Mat2::diag(-Qi::one(), -Qi::one()));
        for m in [&i, &j, &k] {
            assert!(m.is_special_unitary());
        }
    }

    #[test]
    fn inverse_and_rejections() {
        let g = quat(1, 1, 1, 1, 2);
        assert!(g.is_special_unitary());
        assert_eq!(g.mul(&g.inverse_unimodular().unwrap()), Mat2::identity());
        assert_eq!(g.inverse().unwrap(), g.conj_transpose());
        let doubled = Mat2::diag(Qi::from_i64(2), Qi::from_i64(2));
        assert!(matches!(
            doubled.inverse_unimodular(),
            Err(Error::NotUnimodular(_))
        ));
        assert!(!doubled.is_special_unitary());
        let sing = Mat2::new([Qi::one(), Qi::one(), Qi::zero(), Qi::zero()]);
        assert!(matches!(sing.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn string_round_trip() {
        let g = quat(1, -1, 1, 1, 2);
        let s = g.to_strings();
        assert_eq!(s[0][0], "1/2-1/2*i");
        assert_eq!(Mat2::<Qi>::parse_strings(&s).unwrap(), g);
    }
}
