//! Exact scalars: the [`Scalar`] trait every generic routine is written against,
//! its implementation for [`BigRational`], and the Gaussian-rational field
//! ℚ(i), optionally extended by one real radical √d ([`GaussExt`]).

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseScalarError;

/// An exact field element with complex conjugation.
///
/// Everything in this crate (polynomials, 2×2 group elements, dense
/// elimination) is generic over this trait. Implementations must be exact:
/// equality is structural equality of canonical forms.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    /// Complex conjugation (identity on real fields).
    fn conj(&self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Embeds a rational number.
    fn from_rational(q: BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Returns the value as a rational if it lies in ℚ.
    fn to_rational(&self) -> Option<BigRational>;

    /// Product without consuming either operand.
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other
    }

    /// Sum of many terms; implementations may normalize once at the end.
    fn sum_refs<'a>(items: impl IntoIterator<Item = &'a Self>) -> Self
    where
        Self: 'a,
    {
        items.into_iter().fold(Self::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }

    /// Canonical lowest-terms string form, stable across runs.
    fn to_canonical(&self) -> String {
        self.to_string()
    }

    fn parse_canonical(s: &str) -> Result<Self, ParseScalarError>;

    /// The radicand adjoined to ℚ(i), if any. Used only for descriptors.
    fn radicand() -> Option<u32> {
        None
    }
}

impl Scalar for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn parse_canonical(s: &str) -> Result<Self, ParseScalarError> {
        parse_rational(s.trim())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ParseScalarError> {
    let bad = || ParseScalarError(s.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p).map_err(|_| bad())?;
            let q = BigInt::from_str(q).map_err(|_| bad())?;
            if q.is_zero() || q.is_negative() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// Marker for the real radical adjoined to ℚ(i).
pub trait Radical:
    Copy + Clone + fmt::Debug + Default + PartialEq + Eq + Hash + Send + Sync + 'static
{
    /// Square-free radicand `d`, or `None` when no radical is adjoined.
    const RADICAND: Option<u32>;
}

/// Plain ℚ(i).
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NoRadical;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sqrt2;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sqrt5;

impl Radical for NoRadical {
    const RADICAND: Option<u32> = None;
}

impl Radical for Sqrt2 {
    const RADICAND: Option<u32> = Some(2);
}

impl Radical for Sqrt5 {
    const RADICAND: Option<u32> = Some(5);
}

/// Element `(n0 + n1·i + n2·r + n3·i·r) / den` of ℚ(i, r), r = √d.
///
/// Stored over a single positive common denominator with
/// `gcd(n0, n1, n2, n3, den) = 1`, so equal values have equal representations.
/// When `R` is [`NoRadical`] the `r` coordinates are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussExt<R: Radical> {
    num: [BigInt; 4],
    den: BigInt,
    _radical: PhantomData<R>,
}

impl<R: Radical> GaussExt<R> {
    fn from_parts(num: [BigInt; 4], den: BigInt) -> Self {
        let mut v = GaussExt {
            num,
            den,
            _radical: PhantomData,
        };
        v.normalize();
        v
    }

    fn normalize(&mut self) {
        assert!(!self.den.is_zero(), "zero denominator");
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for n in &mut self.num {
                *n = -std::mem::take(n);
            }
        }
        if self.den.is_one() {
            return;
        }
        let tz = self.den.trailing_zeros().unwrap_or(0);
        if self.den.bits() == tz + 1 {
            // power-of-two denominator: cancel by shifting
            let shift = self
                .num
                .iter()
                .filter_map(BigInt::trailing_zeros)
                .fold(tz, u64::min);
            if shift > 0 {
                self.den >>= shift;
                for n in &mut self.num {
                    *n >>= shift;
                }
            }
            return;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if g.is_one() {
                break;
            }
            if !n.is_zero() {
                g = g.gcd(n);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for n in &mut self.num {
                *n /= &g;
            }
        }
    }

    fn d() -> i64 {
        R::RADICAND.map_or(0, i64::from)
    }

    /// Builds `c0 + c1·i + c2·r + c3·i·r`. Fails if radical coordinates are
    /// nonzero and no radical is adjoined.
    pub fn try_new(coords: [BigRational; 4]) -> Option<Self> {
        if R::RADICAND.is_none() && !(coords[2].is_zero() && coords[3].is_zero()) {
            return None;
        }
        let den = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords.map(|c| c.numer() * (&den / c.denom()));
        Some(Self::from_parts(num, den))
    }

    /// `re + im·i` with rational parts.
    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Self::try_new([re, im, BigRational::zero(), BigRational::zero()])
            .expect("gaussian rationals always representable")
    }

    /// `(re + im·i) / den` from small integers.
    pub fn gaussian_int(re: i64, im: i64, den: i64) -> Self {
        Self::from_parts(
            [
                BigInt::from(re),
                BigInt::from(im),
                BigInt::zero(),
                BigInt::zero(),
            ],
            BigInt::from(den),
        )
    }

    /// The adjoined radical √d, if any.
    pub fn radical() -> Option<Self> {
        R::RADICAND.map(|_| {
            Self::from_parts(
                [
                    BigInt::zero(),
                    BigInt::zero(),
                    BigInt::one(),
                    BigInt::zero(),
                ],
                BigInt::one(),
            )
        })
    }

    pub fn i() -> Self {
        Self::gaussian_int(0, 1, 1)
    }

    /// Rational coordinates over the basis `{1, i, r, i·r}`.
    pub fn coords(&self) -> [BigRational; 4] {
        self.num
            .clone()
            .map(|n| BigRational::new(n, self.den.clone()))
    }

    /// True iff the value equals its conjugate.
    pub fn is_real(&self) -> bool {
        self.num[1].is_zero() && self.num[3].is_zero()
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let [a0, a1, a2, a3] = &self.num;
        let [b0, b1, b2, b3] = &o.num;
        let den = &self.den * &o.den;
        if R::RADICAND.is_none() {
            let c0 = a0 * b0 - a1 * b1;
            let c1 = a0 * b1 + a1 * b0;
            return Self::from_parts([c0, c1, BigInt::zero(), BigInt::zero()], den);
        }
        let d = BigInt::from(Self::d());
        let c0 = a0 * b0 - a1 * b1 + &d * (a2 * b2 - a3 * b3);
        let c1 = a0 * b1 + a1 * b0 + &d * (a2 * b3 + a3 * b2);
        let c2 = a0 * b2 + a2 * b0 - (a1 * b3 + a3 * b1);
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        Self::from_parts([c0, c1, c2, c3], den)
    }

    fn add_impl(&self, o: &Self, sign: i8) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign > 0 { o.clone() } else { -o.clone() };
        }
        if self.den == o.den {
            let num = std::array::from_fn(|k| {
                if sign > 0 {
                    &self.num[k] + &o.num[k]
                } else {
                    &self.num[k] - &o.num[k]
                }
            });
            return Self::from_parts(num, self.den.clone());
        }
        let num = std::array::from_fn(|k| {
            let l = &self.num[k] * &o.den;
            let r = &o.num[k] * &self.den;
            if sign > 0 {
                l + r
            } else {
                l - r
            }
        });
        Self::from_parts(num, &self.den * &o.den)
    }

    fn inv_impl(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // z = x + y·i with x, y ∈ ℚ(r); 1/z = (x − y·i) / (x² + y²).
        let [c0, c1, c2, c3] = self.coords();
        let d = BigRational::from_integer(BigInt::from(Self::d()));
        // x² + y² = n0 + n1·r
        let n0 = &c0 * &c0 + &d * &c2 * &c2 + &c1 * &c1 + &d * &c3 * &c3;
        let n1 = BigRational::from_integer(BigInt::from(2)) * (&c0 * &c2 + &c1 * &c3);
        // 1/(n0 + n1 r) = (n0 − n1 r) / (n0² − d n1²)
        let norm = &n0 * &n0 - &d * &n1 * &n1;
        let m0 = &n0 / &norm;
        let m1 = -(&n1 / &norm);
        let conj = Self::try_new([c0, -c1, c2, -c3]).expect("same field");
        let scale =
            Self::try_new([m0, BigRational::zero(), m1, BigRational::zero()]).expect("same field");
        Some(conj.mul_impl(&scale))
    }
}

impl<R: Radical> Zero for GaussExt<R> {
    fn zero() -> Self {
        GaussExt {
            num: Default::default(),
            den: BigInt::one(),
            _radical: PhantomData,
        }
    }

    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }
}

impl<R: Radical> One for GaussExt<R> {
    fn one() -> Self {
        Self::gaussian_int(1, 0, 1)
    }
}

impl<R: Radical> Neg for GaussExt<R> {
    type Output = Self;
    fn neg(self) -> Self {
        GaussExt {
            num: self.num.map(|n| -n),
            den: self.den,
            _radical: PhantomData,
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<R: Radical> $tr for GaussExt<R> {
            type Output = GaussExt<R>;
            fn $method(self, o: Self) -> Self {
                $body(&self, &o)
            }
        }
        impl<'a, R: Radical> $tr<&'a GaussExt<R>> for GaussExt<R> {
            type Output = GaussExt<R>;
            fn $method(self, o: &'a Self) -> Self {
                $body(&self, o)
            }
        }
        impl<'a, 'b, R: Radical> $tr<&'b GaussExt<R>> for &'a GaussExt<R> {
            type Output = GaussExt<R>;
            fn $method(self, o: &'b GaussExt<R>) -> GaussExt<R> {
                $body(self, o)
            }
        }
    };
}

forward_binop!(Add, add, |a: &GaussExt<R>, b: &GaussExt<R>| a
    .add_impl(b, 1));
forward_binop!(Sub, sub, |a: &GaussExt<R>, b: &GaussExt<R>| a
    .add_impl(b, -1));
forward_binop!(Mul, mul, |a: &GaussExt<R>, b: &GaussExt<R>| a.mul_impl(b));
forward_binop!(Div, div, |a: &GaussExt<R>, b: &GaussExt<R>| a
    .mul_impl(&b.inv_impl().expect("division by zero")));

impl<'a, R: Radical> AddAssign<&'a GaussExt<R>> for GaussExt<R> {
    fn add_assign(&mut self, o: &'a Self) {
        *self = self.add_impl(o, 1);
    }
}

impl<'a, R: Radical> SubAssign<&'a GaussExt<R>> for GaussExt<R> {
    fn sub_assign(&mut self, o: &'a Self) {
        *self = self.add_impl(o, -1);
    }
}

const SUFFIXES: [&str; 4] = ["", "*i", "*r", "*i*r"];

impl<R: Radical> fmt::Display for GaussExt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (c, suffix) in self.coords().iter().zip(SUFFIXES) {
            if c.is_zero() {
                continue;
            }
            if !first && !c.is_negative() {
                f.write_str("+")?;
            }
            write!(f, "{c}{suffix}")?;
            first = false;
        }
        Ok(())
    }
}

impl<R: Radical> fmt::Debug for GaussExt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<R: Radical> Scalar for GaussExt<R> {
    fn conj(&self) -> Self {
        let [n0, n1, n2, n3] = &self.num;
        GaussExt {
            num: [n0.clone(), -n1, n2.clone(), -n3],
            den: self.den.clone(),
            _radical: PhantomData,
        }
    }

    fn inv(&self) -> Option<Self> {
        self.inv_impl()
    }

    fn from_rational(q: BigRational) -> Self {
        Self::gaussian(q, BigRational::zero())
    }

    fn to_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }

    fn parse_canonical(s: &str) -> Result<Self, ParseScalarError> {
        let bad = || ParseScalarError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // Split into signed terms at every '+'/'-' that is not leading.
        let mut terms = Vec::new();
        let mut start = 0;
        for (idx, ch) in compact.char_indices() {
            if idx > 0 && (ch == '+' || ch == '-') {
                terms.push(&compact[start..idx]);
                start = idx;
            }
        }
        terms.push(&compact[start..]);

        let mut coords: [BigRational; 4] = Default::default();
        for term in terms {
            let term = term.strip_prefix('+').unwrap_or(term);
            let (slot, coeff) = if let Some(c) = term.strip_suffix("*i*r") {
                (3, c)
            } else if let Some(c) = term.strip_suffix("*i") {
                (1, c)
            } else if let Some(c) = term.strip_suffix("*r") {
                (2, c)
            } else {
                (0, term)
            };
            coords[slot] += parse_rational(coeff).map_err(|_| bad())?;
        }
        Self::try_new(coords).ok_or_else(bad)
    }

    fn radicand() -> Option<u32> {
        R::RADICAND
    }

    fn sum_refs<'a>(items: impl IntoIterator<Item = &'a Self>) -> Self
    where
        Self: 'a,
    {
        let items: Vec<&Self> = items.into_iter().filter(|x| !x.is_zero()).collect();
        let Some(first) = items.first() else {
            return Self::zero();
        };
        let mut den = first.den.clone();
        for x in &items[1..] {
            if x.den != den {
                den = den.lcm(&x.den);
            }
        }
        let mut num: [BigInt; 4] = Default::default();
        for x in &items {
            if x.den == den {
                for (n, m) in num.iter_mut().zip(&x.num) {
                    *n += m;
                }
            } else {
                let f = &den / &x.den;
                for (n, m) in num.iter_mut().zip(&x.num) {
                    *n += m * &f;
                }
            }
        }
        Self::from_parts(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Qi = GaussExt<NoRadical>;
    type Q5 = GaussExt<Sqrt5>;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn q5(c: [(i64, i64); 4]) -> Q5 {
        Q5::try_new(c.map(|(p, d)| q(p, d))).unwrap()
    }

    #[test]
    fn gaussian_basics() {
        let i = Qi::i();
        assert_eq!(i.clone() * &i, -Qi::one());
        assert_eq!(i.conj(), -i.clone());
        let z = Qi::gaussian_int(3, 4, 5);
        assert_eq!(z.clone() * z.conj(), Qi::one());
        assert_eq!(z.inv().unwrap(), z.conj());
        assert!(Qi::zero().inv().is_none());
    }

    #[test]
    fn radical_squares_to_radicand() {
        let r = Q5::radical().unwrap();
        assert_eq!(r.clone() * &r, Q5::from_i64(5));
        assert!(GaussExt::<NoRadical>::radical().is_none());
        // golden ratio satisfies φ² = φ + 1
        let phi = q5([(1, 2), (0, 1), (1, 2), (0, 1)]);
        assert_eq!(phi.clone() * &phi, phi.clone() + Q5::one());
        assert_eq!(phi.inv().unwrap(), phi - Q5::one());
    }

    #[test]
    fn no_radical_rejects_radical_coordinates() {
        assert!(Qi::try_new([q(0, 1), q(0, 1), q(1, 1), q(0, 1)]).is_none());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(Qi::zero().to_canonical(), "0");
        assert_eq!(Qi::gaussian_int(1, -1, 2).to_canonical(), "1/2-1/2*i");
        let x = q5([(0, 1), (-3, 4), (2, 1), (1, 6)]);
        assert_eq!(x.to_canonical(), "-3/4*i+2*r+1/6*i*r");
        assert_eq!(Q5::parse_canonical(&x.to_canonical()).unwrap(), x);
        assert_eq!(
            Qi::parse_canonical("-1/2*i").unwrap(),
            Qi::gaussian_int(0, -1, 2)
        );
        assert!(Qi::parse_canonical("1*r").is_err());
        assert!(Qi::parse_canonical("1/0").is_err());
        assert!(Qi::parse_canonical("").is_err());
        assert_eq!(
            BigRational::parse_canonical("-691/2730").unwrap(),
            q(-691, 2730)
        );
    }

    #[test]
    fn lowest_terms_common_denominator() {
        let a = Qi::gaussian_int(2, 4, 8);
        assert_eq!(a, Qi::gaussian_int(1, 2, 4));
        assert_eq!(a.to_canonical(), "1/4+1/2*i");
        let b = Qi::gaussian_int(1, 0, -3);
        assert_eq!(b.to_canonical(), "-1/3");
    }

    fn arb_q5() -> impl Strategy<Value = Q5> {
        proptest::array::uniform4((-20i64..20, 1i64..9)).prop_map(q5)
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_q5(), b in arb_q5(), c in arb_q5()) {
            prop_assert_eq!((a.clone() * &b) * &c, a.clone() * (b.clone() * &c));
            prop_assert_eq!(a.clone() * (b.clone() + &c), a.clone() * &b + a.clone() * &c);
            prop_assert_eq!(a.clone() * &b, b.clone() * &a);
            prop_assert_eq!((a.clone() + &b) - &b, a.clone());
            prop_assert_eq!((a.clone() * &b).conj(), a.conj() * b.conj());
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inv().unwrap(), Q5::one());
            }
            prop_assert_eq!(Q5::parse_canonical(&a.to_canonical()).unwrap(), a);
        }
    }
}
