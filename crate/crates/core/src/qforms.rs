//! Level-one holomorphic modular forms as exact truncated q-expansions.
//!
//! Weights are the even classical weights `k`; the weight monoid is generated
//! by 4 and 6. Everything lives over ℚ. The Weierstrass invariants relate to
//! the normalized Eisenstein series by `g2 = (4π⁴/3)·E4` and
//! `g3 = (8π⁶/27)·E6`, so
//!
//! ```text
//! g2³ − 27·g3² = (64π¹²/27)·(E4³ − E6²) = (2π)¹²·Δ,   Δ = (E4³ − E6²)/1728.
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{DenseMat, Scalar};

/// `c_0 + c_1 q + … + c_N q^N` tagged with an even weight.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    weight: u32,
    coeffs: Vec<BigRational>,
}

impl QSeries {
    /// `coeffs` holds `c_0 … c_N`, so its length is the precision plus one.
    pub fn new(weight: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        if !weight.is_multiple_of(2) {
            return Err(Error::InvalidWeight(weight.into(), "weight must be even"));
        }
        if coeffs.len() < 2 {
            return Err(Error::InsufficientPrecision {
                have: coeffs.len().saturating_sub(1),
                need: 1,
            });
        }
        Ok(QSeries { weight, coeffs })
    }

    /// The weight-0 constant `c`.
    pub fn constant(c: BigRational, precision: usize) -> Result<Self> {
        let mut coeffs = vec![BigRational::zero(); precision + 1];
        coeffs[0] = c;
        Self::new(0, coeffs)
    }

    pub fn one(precision: usize) -> Result<Self> {
        Self::constant(BigRational::one(), precision)
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn is_cusp(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let n = precision.min(self.precision()).max(1);
        QSeries {
            weight: self.weight,
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        QSeries {
            weight: self.weight,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    fn combine(
        &self,
        o: &Self,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<Self> {
        if self.weight != o.weight {
            return Err(Error::WeightMismatch {
                left: self.weight,
                right: o.weight,
            });
        }
        let n = self.precision().min(o.precision());
        Ok(QSeries {
            weight: self.weight,
            coeffs: (0..=n).map(|i| f(&self.coeffs[i], &o.coeffs[i])).collect(),
        })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.combine(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.combine(o, |a, b| a - b)
    }

    pub fn mul(&self, o: &Self) -> Self {
        qmul(self, o)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(Scalar::to_canonical).collect()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            match n {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match n {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision() + 1)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries(k={}; {self})", self.weight)
    }
}

/// Truncated product; the weights add and the precision is the smaller one.
pub fn qmul(f: &QSeries, g: &QSeries) -> QSeries {
    let n = f.precision().min(g.precision());
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (i, a) in f.coeffs[..=n].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.coeffs[..=n - i].iter().enumerate() {
            coeffs[i + j] += a * b;
        }
    }
    QSeries {
        weight: f.weight + g.weight,
        coeffs,
    }
}

fn binomial_row(m: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for j in 0..m {
        let next = &row[j as usize] * BigInt::from(m - j) / BigInt::from(j + 1);
        row.push(next);
    }
    row
}

/// `B_k` with `B_1 = −1/2`, from `Σ_{j≤m} C(m+1, j)·B_j = 0`.
pub fn bernoulli(k: u32) -> BigRational {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=k {
        let row = binomial_row(m + 1);
        let s: BigRational = (0..m as usize)
            .map(|j| BigRational::from_integer(row[j].clone()) * &b[j])
            .sum();
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b.pop().expect("B_0 is always present")
}

/// `σ_r(n) = Σ_{d | n} d^r`.
pub fn divisor_sum(r: u32, n: u64) -> BigInt {
    let mut s = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            s += BigInt::from(d).pow(r);
            let e = n / d;
            if e != d {
                s += BigInt::from(e).pow(r);
            }
        }
        d += 1;
    }
    s
}

/// `E_k = 1 − (2k/B_k)·Σ σ_{k−1}(n) qⁿ` to precision `N`.
pub fn eisenstein(k: u32, precision: usize) -> Result<QSeries> {
    if !k.is_multiple_of(2) {
        return Err(Error::InvalidWeight(
            k.into(),
            "Eisenstein weight must be even",
        ));
    }
    if k < 4 {
        return Err(Error::InvalidWeight(
            k.into(),
            "Eisenstein weight must be at least 4",
        ));
    }
    let factor = -BigRational::from_integer(BigInt::from(2 * k)) / bernoulli(k);
    let mut coeffs = Vec::with_capacity(precision + 1);
    coeffs.push(BigRational::one());
    for n in 1..=precision as u64 {
        coeffs.push(&factor * BigRational::from_integer(divisor_sum(k - 1, n)));
    }
    QSeries::new(k, coeffs)
}

/// `E4³ − E6²`, whose coefficients are all divisible by 1728.
pub fn discriminant_numerator(precision: usize) -> Result<QSeries> {
    let e4 = eisenstein(4, precision)?;
    let e6 = eisenstein(6, precision)?;
    qmul(&qmul(&e4, &e4), &e4).sub(&qmul(&e6, &e6))
}

/// `Δ = (E4³ − E6²)/1728 = q − 24q² + 252q³ − …`.
pub fn discriminant(precision: usize) -> Result<QSeries> {
    let inv = BigRational::new(BigInt::one(), BigInt::from(1728));
    Ok(discriminant_numerator(precision)?.scale(&inv))
}

/// `dim M_k` for level one.
pub fn dim_formula(k: i64) -> Result<usize> {
    if k < 0 {
        return Err(Error::InvalidWeight(k, "weight must be non-negative"));
    }
    if k % 2 != 0 {
        return Err(Error::InvalidWeight(k, "weight must be even"));
    }
    let base = (k / 12) as usize;
    Ok(if k % 12 == 2 { base } else { base + 1 })
}

/// Exponents `(x, y)` with `4x + 6y = k`, in increasing `y`.
pub fn monomial_exponents(k: u32) -> Vec<(u32, u32)> {
    (0..=k / 6)
        .filter(|y| (k - 6 * y).is_multiple_of(4))
        .map(|y| ((k - 6 * y) / 4, y))
        .collect()
}

fn power(f: &QSeries, e: u32, precision: usize) -> Result<QSeries> {
    let mut acc = QSeries::one(precision)?;
    for _ in 0..e {
        acc = qmul(&acc, f);
    }
    Ok(acc)
}

/// One weight of the ring of level-one forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingRow {
    pub weight: u32,
    pub dim: usize,
    /// `(x, y)` for each monomial `E4^x E6^y`.
    pub exponents: Vec<(u32, u32)>,
    pub monomials: Vec<QSeries>,
    pub rank: usize,
    /// Reduced echelon basis of the monomial span: the `i`-th element is
    /// `q^i + O(q^dim)`, so all but the first are cusp forms.
    pub basis: Vec<QSeries>,
    pub cusp: Vec<bool>,
}

impl RingRow {
    /// Coordinates of `f` in [`RingRow::basis`], or `None` if `f` has another
    /// weight or lies outside the span.
    pub fn coordinates(&self, f: &QSeries) -> Option<Vec<BigRational>> {
        if f.weight() != self.weight {
            return None;
        }
        if self.basis.is_empty() {
            return f.is_zero().then(Vec::new);
        }
        let n = self
            .basis
            .iter()
            .map(QSeries::precision)
            .min()
            .unwrap_or(0)
            .min(f.precision());
        let cols: Vec<Vec<BigRational>> = self
            .basis
            .iter()
            .map(|b| b.coeffs()[..=n].to_vec())
            .collect();
        let m = DenseMat::from_columns(n + 1, &cols).ok()?;
        m.solve(&f.coeffs()[..=n]).ok().flatten()
    }

    pub fn contains(&self, f: &QSeries) -> bool {
        self.coordinates(f).is_some()
    }
}

/// The monomials `E4^x E6^y` of weight `k`, their rank, and an echelon basis.
pub fn monomial_basis(k: u32, precision: usize) -> Result<RingRow> {
    let dim = dim_formula(k.into())?;
    if precision < dim + 1 {
        return Err(Error::InsufficientPrecision {
            have: precision,
            need: dim + 1,
        });
    }
    let exponents = monomial_exponents(k);
    let (e4, e6) = (eisenstein(4, precision)?, eisenstein(6, precision)?);
    let monomials = exponents
        .iter()
        .map(|&(x, y)| Ok(qmul(&power(&e4, x, precision)?, &power(&e6, y, precision)?)))
        .collect::<Result<Vec<_>>>()?;
    let (basis, rank) = if monomials.is_empty() {
        (Vec::new(), 0)
    } else {
        let m = DenseMat::from_rows(monomials.iter().map(|f| f.coeffs().to_vec()).collect())?;
        let rows = m.row_space_basis();
        let rank = rows.len();
        let basis = rows
            .into_iter()
            .map(|r| QSeries::new(k, r))
            .collect::<Result<Vec<_>>>()?;
        (basis, rank)
    };
    let cusp = basis.iter().map(QSeries::is_cusp).collect();
    Ok(RingRow {
        weight: k,
        dim,
        exponents,
        monomials,
        rank,
        basis,
        cusp,
    })
}

/// Rows for every even weight `0..=k_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingTable {
    pub precision: usize,
    pub rows: Vec<RingRow>,
}

impl RingTable {
    pub fn row(&self, k: u32) -> Option<&RingRow> {
        self.rows.iter().find(|r| r.weight == k)
    }
}

pub fn ring_table(k_max: u32, precision: usize) -> Result<RingTable> {
    let rows = (0..=k_max)
        .step_by(2)
        .map(|k| monomial_basis(k, precision))
        .collect::<Result<Vec<_>>>()?;
    Ok(RingTable { precision, rows })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HoloCheckKind {
    Rank,
    Unit,
    Grading,
    Commutativity,
    Associativity,
    CuspIdeal,
    Normalization,
}

impl HoloCheckKind {
    pub fn name(self) -> &'static str {
        match self {
            HoloCheckKind::Rank => "rank",
            HoloCheckKind::Unit => "unit",
            HoloCheckKind::Grading => "grading",
            HoloCheckKind::Commutativity => "commutativity",
            HoloCheckKind::Associativity => "associativity",
            HoloCheckKind::CuspIdeal => "cusp-ideal",
            HoloCheckKind::Normalization => "normalization",
        }
    }
}

/// One check on basis elements, addressed as `(weight, index)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoloCheck {
    pub kind: HoloCheckKind,
    pub inputs: Vec<(u32, usize)>,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoloRingReport {
    pub k_max: u32,
    pub precision: usize,
    pub dims: Vec<(u32, usize)>,
    /// Discrete decomposability of every pair of weights is taken as given,
    /// not computed.
    pub decomposability_assumed: bool,
    pub checks: Vec<HoloCheck>,
}

impl HoloRingReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(
    kind: HoloCheckKind,
    inputs: Vec<(u32, usize)>,
    ok: bool,
    witness: impl FnOnce() -> String,
) -> HoloCheck {
    HoloCheck {
        kind,
        inputs,
        passed: ok,
        witness: (!ok).then(witness),
    }
}

/// Ring axioms on the echelon bases of `M_0 … M_{k_max}`, with membership of
/// products decided by an exact solve against the basis of the target weight.
pub fn verify_holomorphic_ring(k_max: u32, precision: usize) -> Result<HoloRingReport> {
    let table = ring_table(k_max, precision)?;
    let mut checks = Vec::new();
    let one = QSeries::one(precision)?;
    let elems: Vec<(u32, usize, &QSeries)> = table
        .rows
        .iter()
        .flat_map(|r| {
            r.basis
                .iter()
                .enumerate()
                .map(move |(i, b)| (r.weight, i, b))
        })
        .collect();

    for r in &table.rows {
        checks.push(check(
            HoloCheckKind::Rank,
            vec![(r.weight, 0)],
            r.rank == r.dim,
            || format!("rank {} vs dimension {}", r.rank, r.dim),
        ));
    }
    for &(k, i, f) in &elems {
        let p = qmul(&one, f);
        checks.push(check(HoloCheckKind::Unit, vec![(k, i)], &p == f, || {
            format!("1·f = {p:?}, f = {f:?}")
        }));
    }
    for &(k1, i1, f) in &elems {
        for &(k2, i2, g) in &elems {
            if k1 + k2 > k_max {
                continue;
            }
            let fg = qmul(f, g);
            let inputs = vec![(k1, i1), (k2, i2)];
            let target = table.row(k1 + k2).expect("weight in table");
            checks.push(check(
                HoloCheckKind::Grading,
                inputs.clone(),
                fg.weight() == k1 + k2 && target.contains(&fg),
                || format!("product {fg:?} not in M_{}", k1 + k2),
            ));
            if (k1, i1) < (k2, i2) {
                let gf = qmul(g, f);
                checks.push(check(
                    HoloCheckKind::Commutativity,
                    inputs.clone(),
                    fg == gf,
                    || format!("fg = {fg:?}, gf = {gf:?}"),
                ));
            }
            if f.is_cusp() || g.is_cusp() {
                checks.push(check(
                    HoloCheckKind::CuspIdeal,
                    inputs,
                    fg.is_cusp(),
                    || format!("constant term {}", fg.coeff(0)),
                ));
            }
        }
    }
    for &(k1, i1, f) in &elems {
        for &(k2, i2, g) in &elems {
            for &(k3, i3, h) in &elems {
                if k1 + k2 + k3 > k_max {
                    continue;
                }
                let left = qmul(&qmul(f, g), h);
                let right = qmul(f, &qmul(g, h));
                checks.push(check(
                    HoloCheckKind::Associativity,
                    vec![(k1, i1), (k2, i2), (k3, i3)],
                    left == right,
                    || format!("(fg)h = {left:?}, f(gh) = {right:?}"),
                ));
            }
        }
    }
    // Normalized generators multiply without a correction constant wherever
    // the target space is a line.
    for k1 in (4..=k_max).step_by(2) {
        for k2 in (k1..=k_max).step_by(2) {
            if k1 + k2 > k_max || dim_formula((k1 + k2).into())? != 1 {
                continue;
            }
            let p = qmul(&eisenstein(k1, precision)?, &eisenstein(k2, precision)?);
            let e = eisenstein(k1 + k2, precision)?;
            checks.push(check(
                HoloCheckKind::Normalization,
                vec![(k1, 0), (k2, 0)],
                p == e,
                || format!("E_{k1}·E_{k2} = {p:?}, E_{} = {e:?}", k1 + k2),
            ));
        }
    }
    Ok(HoloRingReport {
        k_max,
        precision,
        dims: table.rows.iter().map(|r| (r.weight, r.dim)).collect(),
        decomposability_assumed: true,
        checks,
    })
}

/// True iff every coefficient of `f` is an integer divisible by `d`.
pub fn all_divisible(f: &QSeries, d: i64) -> bool {
    let d = BigInt::from(d);
    f.coeffs()
        .iter()
        .all(|c| c.is_integer() && c.to_integer().is_multiple_of(&d))
}
