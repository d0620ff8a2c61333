//! Homogeneous polynomials in the two variables `(a, c)`.

use std::fmt;

use super::mat2::Mat2;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A homogeneous polynomial of fixed degree `n` in `(a, c)`.
///
/// Coefficient `j` multiplies the monomial `a^(n-j) c^j`; the vector always
/// has length `n + 1`, so the zero polynomial still knows its degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> HomPoly<S> {
    pub fn zero(degree: usize) -> Self {
        HomPoly {
            coeffs: vec![S::zero(); degree + 1],
        }
    }

    /// `coeff · a^(degree-j) c^j`.
    pub fn monomial(degree: usize, j: usize, coeff: S) -> Self {
        assert!(j <= degree, "monomial index {j} exceeds degree {degree}");
        let mut p = Self::zero(degree);
        p.coeffs[j] = coeff;
        p
    }

    /// Builds from a non-empty coefficient vector; degree is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a homogeneous polynomial needs at least one coefficient"
        );
        HomPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &S {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }

    /// Truncated convolution: the product has degree `m + n`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree() + other.degree());
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out.coeffs[i + j] += &x.mul_ref(y);
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        HomPoly {
            coeffs: self.coeffs.iter().map(|c| c.mul_ref(s)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        Ok(HomPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x.clone() + y)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        Ok(HomPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x.clone() - y)
                .collect(),
        })
    }

    fn same_degree(&self, other: &Self) -> Result<()> {
        if self.degree() == other.degree() {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            })
        }
    }

    /// Value at the point `(a, c)`.
    pub fn eval(&self, a: &S, c: &S) -> S {
        let n = self.degree();
        let a_pows = powers(a, n);
        let c_pows = powers(c, n);
        let mut acc = S::zero();
        for (j, coeff) in self.coeffs.iter().enumerate() {
            if !coeff.is_zero() {
                acc += &coeff.mul_ref(&a_pows[n - j]).mul_ref(&c_pows[j]);
            }
        }
        acc
    }

    /// Left translation `p ↦ p ∘ g⁻¹`, i.e. `(a, c)` replaced by the entries
    /// of `g⁻¹ · (a, c)ᵀ`. This is a left action:
    /// `substitute(g·h, p) = substitute(g, substitute(h, p))`.
    pub fn substitute(&self, g: &Mat2<S>) -> Result<Self> {
        let ginv = g.inverse_unimodular()?;
        let n = self.degree();
        let (x, y) = ginv.linear_forms();
        let x_pows = linear_form_powers(&x, n);
        let y_pows = linear_form_powers(&y, n);
        let mut out = Self::zero(n);
        for (j, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let term = x_pows[n - j].mul(&y_pows[j]);
            for (slot, t) in out.coeffs.iter_mut().zip(term.coeffs) {
                *slot += &coeff.mul_ref(&t);
            }
        }
        Ok(out)
    }
}

fn powers<S: Scalar>(x: &S, n: usize) -> Vec<S> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(S::one());
    for k in 0..n {
        let next = out[k].mul_ref(x);
        out.push(next);
    }
    out
}

/// `[ℓ⁰, ℓ¹, …, ℓⁿ]` for a linear form ℓ.
pub(crate) fn linear_form_powers<S: Scalar>(form: &HomPoly<S>, n: usize) -> Vec<HomPoly<S>> {
    debug_assert_eq!(form.degree(), 1);
    let mut out = Vec::with_capacity(n + 1);
    out.push(HomPoly::from_coeffs(vec![S::one()]));
    for k in 0..n {
        let next = out[k].mul(form);
        out.push(next);
    }
    out
}

impl<S: Scalar> fmt::Display for HomPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut wrote = false;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            match n - j {
                0 => {}
                1 => f.write_str("a")?,
                e => write!(f, "a^{e}")?,
            }
            match j {
                0 => {}
                1 => f.write_str("c")?,
                e => write!(f, "c^{e}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0 (deg {n})")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for HomPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomPoly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::{GaussExt, NoRadical};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type Qi = GaussExt<NoRadical>;

    fn p(c: &[i64]) -> HomPoly<Qi> {
        HomPoly::from_coeffs(c.iter().map(|&x| Qi::from_i64(x)).collect())
    }

    #[test]
    fn monomial_product() {
        // a · c = ac
        assert_eq!(p(&[1, 0]).mul(&p(&[0, 1])), p(&[0, 1, 0]));
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p(&[1, 1]).mul(&p(&[1, -1])), p(&[1, 0, -1]));
    }

    #[test]
    fn hand_convolution() {
        // (a² + 2ac) · c = a²c + 2ac²
        assert_eq!(p(&[1, 2, 0]).mul(&p(&[0, 1])), p(&[0, 1, 2, 0]));
    }

    #[test]
    fn zero_keeps_degree() {
        let z3 = HomPoly::<Qi>::zero(3);
        assert!(z3.is_zero());
        assert_ne!(z3, HomPoly::<Qi>::zero(2));
        assert!(z3.add(&HomPoly::zero(2)).is_err());
    }

    #[test]
    fn identity_substitution() {
        let f = p(&[3, -1, 0, 7]);
        assert_eq!(f.substitute(&Mat2::identity()).unwrap(), f);
    }

    #[test]
    fn torus_scales_monomials() {
        // diag(t, 1/t) sends a^(n-j) c^j to t^(2j-n) a^(n-j) c^j
        let t = Qi::gaussian_int(3, 4, 5);
        let g = Mat2::diag(t.clone(), t.inv().unwrap());
        for n in 0..5usize {
            for j in 0..=n {
                let m = HomPoly::monomial(n, j, Qi::one());
                let e = 2 * j as i64 - n as i64;
                let mut factor = Qi::one();
                let base = if e >= 0 { t.clone() } else { t.inv().unwrap() };
                for _ in 0..e.unsigned_abs() {
                    factor = factor * &base;
                }
                assert_eq!(m.substitute(&g).unwrap(), HomPoly::monomial(n, j, factor));
            }
        }
    }

    #[test]
    fn singular_rejected() {
        let g = Mat2::new([Qi::one(), Qi::one(), Qi::one(), Qi::one()]);
        assert!(p(&[1, 0]).substitute(&g).is_err());
    }

    #[test]
    fn eval_matches_coefficients() {
        // 3a² + 5ac at (1, 0) is 3; at (1, 1) is 8
        let f = p(&[3, 5, 0]);
        assert_eq!(f.eval(&Qi::one(), &Qi::zero()), Qi::from_i64(3));
        assert_eq!(f.eval(&Qi::one(), &Qi::one()), Qi::from_i64(8));
    }

    fn arb_poly(deg: usize) -> impl Strategy<Value = HomPoly<Qi>> {
        proptest::collection::vec((-9i64..9, -9i64..9), deg + 1).prop_map(|cs| {
            HomPoly::from_coeffs(
                cs.into_iter()
                    .map(|(re, im)| Qi::gaussian_int(re, im, 1))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(
            f in arb_poly(2), g in arb_poly(3), h in arb_poly(1)
        ) {
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert_eq!(f.mul(&g).degree(), 5);
        }
    }
}
