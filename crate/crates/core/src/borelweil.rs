//! Borel-Weil sections for SU(2).
//!
//! `H_n` is realized as homogeneous degree-`n` polynomials in the first-column
//! entries `(a, c)` of an element of SL(2, ℂ), with the upper-triangular Borel
//! acting on the right by `t ↦ tⁿ`. SU(2) acts by left translation
//! `[τ(k)h](x) = h(k⁻¹x)`. The Haar inner product (total mass one) is diagonal
//! in the monomial basis:
//!
//! ```text
//! ⟨a^i c^j, a^k c^l⟩ = δ_ik δ_jl · i! j! / (i + j + 1)!
//! ```
//!
//! The highest-weight line is spanned by `aⁿ`; `h_n = aⁿ` has value one at the
//! identity, and its Riesz dual for evaluation at the identity is
//! `h_n^∨ = (n + 1)·aⁿ`.
//!
//! The multiplication map `μ*: H_m ⊗ H_n → H_{m+n}` is the pointwise product,
//! and the comultiplication `μ` is its adjoint for the Haar inner products.
//! Tensor bases are ordered lexicographically in `(j1, j2)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{DenseMat, HomPoly, Mat2, Scalar};

/// A dominant weight of SU(2): a non-negative integer.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(pub u32);

/// Commutative monoid of dominant weights, written additively.
pub trait WeightMonoid: Copy + Eq + Ord + fmt::Debug {
    fn zero() -> Self;
    fn plus(self, other: Self) -> Self;
    /// Dimension of the irreducible representation with this highest weight.
    fn dim(self) -> usize;
}

impl WeightMonoid for Weight {
    fn zero() -> Self {
        Weight(0)
    }

    fn plus(self, other: Self) -> Self {
        Weight(self.0 + other.0)
    }

    fn dim(self) -> usize {
        self.0 as usize + 1
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn dim_weight(w: Weight) -> usize {
    w.dim()
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Haar norm-square of the basis monomial `a^(n-j) c^j`: `(n-j)! j! / (n+1)!`.
pub fn monomial_norm(n: u32, j: u32) -> BigRational {
    assert!(j <= n);
    BigRational::new(factorial(n - j) * factorial(j), factorial(n + 1))
}

/// An element of `H_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Section<S> {
    poly: HomPoly<S>,
}

impl<S: Scalar> Section<S> {
    pub fn new(poly: HomPoly<S>) -> Self {
        Section { poly }
    }

    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        Section::new(HomPoly::from_coeffs(coeffs))
    }

    pub fn zero(w: Weight) -> Self {
        Section::new(HomPoly::zero(w.0 as usize))
    }

    /// The basis monomial `a^(n-j) c^j`.
    pub fn basis(w: Weight, j: usize) -> Self {
        Section::new(HomPoly::monomial(w.0 as usize, j, S::one()))
    }

    pub fn constant(c: S) -> Self {
        Section::new(HomPoly::from_coeffs(vec![c]))
    }

    pub fn weight(&self) -> Weight {
        Weight(self.poly.degree() as u32)
    }

    pub fn poly(&self) -> &HomPoly<S> {
        &self.poly
    }

    pub fn coeffs(&self) -> &[S] {
        self.poly.coeffs()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, s: &S) -> Self {
        Section::new(self.poly.scale(s))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_weight(o)?;
        Ok(Section::new(self.poly.add(&o.poly)?))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check_weight(o)?;
        Ok(Section::new(self.poly.sub(&o.poly)?))
    }

    fn check_weight(&self, o: &Self) -> Result<()> {
        if self.weight() == o.weight() {
            Ok(())
        } else {
            Err(Error::WeightMismatch {
                left: self.weight().0,
                right: o.weight().0,
            })
        }
    }

    /// Value at a group element: the polynomial evaluated at its first column.
    pub fn value_at(&self, g: &Mat2<S>) -> S {
        self.poly.eval(g.get(0, 0), g.get(1, 0))
    }
}

impl<S: Scalar> fmt::Display for Section<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl<S: Scalar> fmt::Debug for Section<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Section(wt {}: {})", self.weight(), self.poly)
    }
}

/// `H_n` with its monomial basis and cached diagonal Gram matrix.
#[derive(Clone, Debug)]
pub struct SectionSpace<S> {
    weight: Weight,
    gram_diag: Vec<S>,
}

impl<S: Scalar> SectionSpace<S> {
    pub fn new(weight: Weight) -> Self {
        let n = weight.0;
        SectionSpace {
            weight,
            gram_diag: (0..=n)
                .map(|j| S::from_rational(monomial_norm(n, j)))
                .collect(),
        }
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn dim(&self) -> usize {
        self.weight.dim()
    }

    /// Haar norm-squares of the basis monomials.
    pub fn gram_diag(&self) -> &[S] {
        &self.gram_diag
    }

    pub fn gram_matrix(&self) -> DenseMat<S> {
        let mut g = DenseMat::zeros(self.dim(), self.dim());
        for (j, x) in self.gram_diag.iter().enumerate() {
            g.set(j, j, x.clone());
        }
        g
    }

    /// Sesquilinear (linear in the first slot) Haar inner product.
    pub fn inner(&self, h1: &Section<S>, h2: &Section<S>) -> Result<S> {
        for h in [h1, h2] {
            if h.weight() != self.weight {
                return Err(Error::WeightMismatch {
                    left: self.weight.0,
                    right: h.weight().0,
                });
            }
        }
        Ok(inner_coeffs(&self.gram_diag, h1.coeffs(), h2.coeffs()))
    }
}

fn inner_coeffs<S: Scalar>(gram: &[S], x: &[S], y: &[S]) -> S {
    let mut acc = S::zero();
    for ((g, a), b) in gram.iter().zip(x).zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc += &a.mul_ref(&b.conj()).mul_ref(g);
        }
    }
    acc
}

/// Haar inner product of two sections of the same weight.
pub fn inner_product<S: Scalar>(h1: &Section<S>, h2: &Section<S>) -> Result<S> {
    SectionSpace::new(h1.weight()).inner(h1, h2)
}

/// `h_n = aⁿ`, the highest-weight vector with value one at the identity.
pub fn highest_weight_vector<S: Scalar>(w: Weight) -> Section<S> {
    Section::basis(w, 0)
}

/// Riesz representative of evaluation at the identity: the unique `h^∨`
/// with `⟨h^∨, h⟩ = h(1)` for all `h ∈ H_n`.
pub fn dual_highest_weight_vector<S: Scalar>(w: Weight) -> Section<S> {
    let space = SectionSpace::<S>::new(w);
    // ⟨x, e_j⟩ = Σ_k x_k G[k,j], so solve Gᵀ x = (e_j(1))_j.
    let gram_t = space.gram_matrix().transpose();
    let rhs: Vec<S> = (0..space.dim())
        .map(|j| evaluate_at_identity(&Section::<S>::basis(w, j)))
        .collect();
    let x = gram_t
        .solve(&rhs)
        .expect("square system")
        .expect("Gram matrix is invertible");
    Section::from_coeffs(x)
}

/// `h(1)`: the coefficient of `aⁿ`.
pub fn evaluate_at_identity<S: Scalar>(h: &Section<S>) -> S {
    h.coeffs()[0].clone()
}

/// `τ(k)h = h ∘ k⁻¹`, for `k ∈ SU(2)`.
pub fn translate<S: Scalar>(k: &Mat2<S>, h: &Section<S>) -> Result<Section<S>> {
    k.check_special_unitary()?;
    Ok(Section::new(h.poly.substitute(k)?))
}

/// `μ*(h1 ⊗ h2) = h1 · h2`.
pub fn multiply_sections<S: Scalar>(h1: &Section<S>, h2: &Section<S>) -> Section<S> {
    Section::new(h1.poly.mul(&h2.poly))
}

/// Index of `e_{j1} ⊗ e_{j2}` in the lexicographic tensor basis.
pub fn tensor_index(w2: Weight, j1: usize, j2: usize) -> usize {
    j1 * w2.dim() + j2
}

/// Matrix of `μ*_{λ1,λ2}`: `d_{λ1+λ2}` rows, `d_{λ1}·d_{λ2}` columns.
pub fn multiplication_matrix<S: Scalar>(w1: Weight, w2: Weight) -> DenseMat<S> {
    let mut m = DenseMat::zeros(w1.plus(w2).dim(), w1.dim() * w2.dim());
    for j1 in 0..w1.dim() {
        for j2 in 0..w2.dim() {
            m.set(j1 + j2, tensor_index(w2, j1, j2), S::one());
        }
    }
    m
}

/// Gram matrix of `H_{λ1} ⊗ H_{λ2}`.
pub fn tensor_gram<S: Scalar>(w1: Weight, w2: Weight) -> DenseMat<S> {
    SectionSpace::<S>::new(w1)
        .gram_matrix()
        .kron(&SectionSpace::<S>::new(w2).gram_matrix())
}

/// The comultiplication obtained by solving the adjoint relation
/// `⟨μ(h), x⟩ = ⟨h, μ*(x)⟩` against the tensor Gram matrix, for any weights.
pub fn comultiplication_by_adjoint<S: Scalar>(w1: Weight, w2: Weight) -> DenseMat<S> {
    let star = multiplication_matrix::<S>(w1, w2);
    let g_sum = SectionSpace::<S>::new(w1.plus(w2)).gram_matrix();
    let g_tensor = tensor_gram::<S>(w1, w2);
    // Gᵀ_T · M = S*ᴴ · Gᵀ_λ
    let rhs = star
        .conj_transpose()
        .matmul(&g_sum.transpose())
        .expect("shapes agree");
    g_tensor
        .transpose()
        .solve_many(&rhs)
        .expect("shapes agree")
        .expect("tensor Gram matrix is invertible")
}

/// `μ_{λ1,λ2}` and `μ*_{λ1,λ2}` as exact matrices in the monomial bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner<S: Scalar> {
    left: Weight,
    right: Weight,
    comul: DenseMat<S>,
    mul: DenseMat<S>,
}

impl<S: Scalar> Intertwiner<S> {
    pub fn left(&self) -> Weight {
        self.left
    }

    pub fn right(&self) -> Weight {
        self.right
    }

    pub fn source(&self) -> Weight {
        self.left.plus(self.right)
    }

    /// `μ`: `d1·d2` rows, `d_{λ1+λ2}` columns.
    pub fn comul_matrix(&self) -> &DenseMat<S> {
        &self.comul
    }

    /// `μ*`: `d_{λ1+λ2}` rows, `d1·d2` columns.
    pub fn mul_matrix(&self) -> &DenseMat<S> {
        &self.mul
    }

    /// `μ(h)` as a coefficient vector in the lexicographic tensor basis.
    pub fn apply(&self, h: &Section<S>) -> Result<Vec<S>> {
        if h.weight() != self.source() {
            return Err(Error::WeightMismatch {
                left: self.source().0,
                right: h.weight().0,
            });
        }
        self.comul.mul_vec(h.coeffs())
    }
}

/// `μ_{λ1,λ2}: H_{λ1+λ2} → H_{λ1} ⊗ H_{λ2}` together with `μ*`.
///
/// A zero factor gives the canonical map `h ↦ 1 ⊗ h` (or `h ⊗ 1`) directly.
pub fn comultiplication<S: Scalar>(w1: Weight, w2: Weight) -> Intertwiner<S> {
    let comul = if w1.0 == 0 || w2.0 == 0 {
        // d1·d2 = d_{λ1+λ2} and the tensor basis lines up with H_{λ1+λ2}.
        DenseMat::identity(w1.plus(w2).dim())
    } else {
        comultiplication_by_adjoint(w1, w2)
    };
    Intertwiner {
        left: w1,
        right: w2,
        comul,
        mul: multiplication_matrix(w1, w2),
    }
}

/// Permutation `e_{j1} ⊗ e_{j2} ↦ e_{j2} ⊗ e_{j1}` from `H1 ⊗ H2` to `H2 ⊗ H1`.
pub fn swap_matrix<S: Scalar>(w1: Weight, w2: Weight) -> DenseMat<S> {
    let n = w1.dim() * w2.dim();
    let mut p = DenseMat::zeros(n, n);
    for j1 in 0..w1.dim() {
        for j2 in 0..w2.dim() {
            p.set(tensor_index(w1, j2, j1), tensor_index(w2, j1, j2), S::one());
        }
    }
    p
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoAxiom {
    CoIdentity,
    CoCommutativity,
    CoAssociativity,
}

impl CoAxiom {
    pub fn name(self) -> &'static str {
        match self {
            CoAxiom::CoIdentity => "co-identity",
            CoAxiom::CoCommutativity => "co-commutativity",
            CoAxiom::CoAssociativity => "co-associativity",
        }
    }
}

/// One exact matrix identity, with both sides kept when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoAxiomCheck {
    pub axiom: CoAxiom,
    pub weights: Vec<u32>,
    pub passed: bool,
    /// `(lhs, rhs)` as canonical strings, present only on failure.
    pub witness: Option<(Vec<Vec<String>>, Vec<Vec<String>>)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoAxiomReport {
    pub checks: Vec<CoAxiomCheck>,
}

impl CoAxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn count(&self, axiom: CoAxiom) -> usize {
        self.checks.iter().filter(|c| c.axiom == axiom).count()
    }
}

fn compare<S: Scalar>(
    axiom: CoAxiom,
    weights: Vec<u32>,
    lhs: &DenseMat<S>,
    rhs: &DenseMat<S>,
) -> CoAxiomCheck {
    let passed = lhs == rhs;
    CoAxiomCheck {
        axiom,
        weights,
        passed,
        witness: (!passed).then(|| (lhs.to_string_rows(), rhs.to_string_rows())),
    }
}

/// Co-axiom checks with one bound for pairs and another for triples.
pub fn verify_co_axioms_bounded<S: Scalar>(max_pair: u32, max_triple: u32) -> CoAxiomReport {
    let mut checks = Vec::new();

    // Co-identity: the canonical map equals the adjoint solution, both sides.
    for n in 0..=max_pair {
        let w = Weight(n);
        let canonical = DenseMat::<S>::identity(w.dim());
        let left = comultiplication::<S>(Weight(0), w);
        checks.push(compare(
            CoAxiom::CoIdentity,
            vec![0, n],
            left.comul_matrix(),
            &comultiplication_by_adjoint(Weight(0), w),
        ));
        checks.push(compare(
            CoAxiom::CoIdentity,
            vec![0, n],
            left.comul_matrix(),
            &canonical,
        ));
        checks.push(compare(
            CoAxiom::CoIdentity,
            vec![n, 0],
            comultiplication::<S>(w, Weight(0)).comul_matrix(),
            &comultiplication_by_adjoint(w, Weight(0)),
        ));
    }

    // Co-commutativity: comm ∘ μ_{λ1,λ2} = μ_{λ2,λ1}.
    for total in 0..=max_pair {
        for l1 in 0..=total {
            let (w1, w2) = (Weight(l1), Weight(total - l1));
            let lhs = swap_matrix::<S>(w1, w2)
                .matmul(comultiplication::<S>(w1, w2).comul_matrix())
                .expect("shapes agree");
            let rhs = comultiplication::<S>(w2, w1).comul_matrix().clone();
            checks.push(compare(
                CoAxiom::CoCommutativity,
                vec![w1.0, w2.0],
                &lhs,
                &rhs,
            ));
        }
    }

    // Co-associativity:
    // (Id ⊗ μ_{λ2,λ3}) ∘ μ_{λ1,λ2+λ3} = (μ_{λ1,λ2} ⊗ Id) ∘ μ_{λ1+λ2,λ3}
    for total in 0..=max_triple {
        for l1 in 0..=total {
            for l2 in 0..=(total - l1) {
                let l3 = total - l1 - l2;
                let (w1, w2, w3) = (Weight(l1), Weight(l2), Weight(l3));
                let lhs = DenseMat::<S>::identity(w1.dim())
                    .kron(comultiplication::<S>(w2, w3).comul_matrix())
                    .matmul(comultiplication::<S>(w1, w2.plus(w3)).comul_matrix())
                    .expect("shapes agree");
                let rhs = comultiplication::<S>(w1, w2)
                    .comul_matrix()
                    .kron(&DenseMat::identity(w3.dim()))
                    .matmul(comultiplication::<S>(w1.plus(w2), w3).comul_matrix())
                    .expect("shapes agree");
                checks.push(compare(
                    CoAxiom::CoAssociativity,
                    vec![l1, l2, l3],
                    &lhs,
                    &rhs,
                ));
            }
        }
    }

    CoAxiomReport { checks }
}

/// Co-identity and co-commutativity for all pairs, co-associativity for all
/// triples, with total weight at most `max_total_weight`.
pub fn verify_co_axioms<S: Scalar>(max_total_weight: u32) -> CoAxiomReport {
    verify_co_axioms_bounded::<S>(max_total_weight, max_total_weight)
}
