//! The graded ring of algebraic modular forms `⊕_n H_n^Γ`.
//!
//! A modular form of weight `n` for finite `Γ ⊂ SU(2)` is identified with its
//! value at the identity, a Γ-invariant `v ∈ H_n`. The classical product is
//! the fiberwise multiplication map. The abstract product goes the long way:
//! each `v` becomes the form `F_v(h)(g) = ⟨τ(g⁻¹)v, h⟩`, the product form is
//! `F(h) = m ∘ (F_1 ⊗ F_2) ∘ μ(h)` evaluated pointwise on sample elements, and
//! the resulting section is recovered by solving for the `v` with `F = F_v`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::groups::FiniteSubgroup;
use super::invariants::{invariant_spaces, is_invariant, representation_matrices, InvariantSpace};
use crate::borelweil::{
    comultiplication, multiply_sections, tensor_index, Section, SectionSpace, Weight, WeightMonoid,
};
use crate::error::{Error, Result};
use crate::exactnum::{DenseMat, GaussExt, Mat2, Radical, Scalar};

fn require_invariant<S: Scalar>(group: &FiniteSubgroup<S>, v: &Section<S>) -> Result<()> {
    if is_invariant(group, v) {
        Ok(())
    } else {
        Err(Error::NotInvariant {
            group: group.name().to_string(),
            weight: v.weight().0,
        })
    }
}

/// `[f1·f2](g) = μ*(f1(g) ⊗ f2(g))`, which on values at the identity is the
/// pointwise product of sections.
pub fn multiply_invariants_classical<S: Scalar>(
    group: &FiniteSubgroup<S>,
    v1: &Section<S>,
    v2: &Section<S>,
) -> Result<Section<S>> {
    require_invariant(group, v1)?;
    require_invariant(group, v2)?;
    Ok(multiply_sections(v1, v2))
}

/// Elements of SU(2) outside any particular Γ, used to probe forms away from
/// the group: three torus elements and one real rotation.
pub fn extra_samples<R: Radical>() -> Vec<Mat2<GaussExt<R>>> {
    let torus = |re: i64, im: i64, den: i64| {
        let t = GaussExt::<R>::gaussian_int(re, im, den);
        Mat2::diag(t.clone(), t.conj())
    };
    let r = |p: i64| GaussExt::<R>::gaussian_int(p, 0, 5);
    vec![
        torus(0, 1, 1),
        torus(3, 4, 5),
        torus(5, 12, 13),
        Mat2::new([r(3), r(4), r(-4), r(3)]),
    ]
}

/// The abstract multiplication route with a fixed sample set.
///
/// Construction precomputes `τ(g⁻¹)` on `H_0 … H_{max_weight}` for every sample
/// and proves that the samples determine a form of each weight.
pub struct AbstractMultiplier<'g, R: Radical> {
    group: &'g FiniteSubgroup<GaussExt<R>>,
    samples: Vec<Mat2<GaussExt<R>>>,
    /// `inverse_reps[s][n]` is the matrix of `τ(g_s⁻¹)` on `H_n`.
    inverse_reps: Vec<Vec<DenseMat<GaussExt<R>>>>,
    /// Per weight, how many leading samples already determine a section.
    determining: Vec<usize>,
    max_weight: u32,
}

impl<'g, R: Radical> AbstractMultiplier<'g, R> {
    pub fn new(group: &'g FiniteSubgroup<GaussExt<R>>, max_weight: u32) -> Result<Self> {
        let mut samples: Vec<_> = group.elements().to_vec();
        samples.extend(extra_samples::<R>());
        let inverse_reps = samples
            .iter()
            .map(|g| representation_matrices(&g.inverse_unimodular()?, max_weight))
            .collect::<Result<Vec<_>>>()?;
        let mut mult = AbstractMultiplier {
            group,
            samples,
            inverse_reps,
            determining: Vec::new(),
            max_weight,
        };
        for n in 0..=max_weight {
            let w = Weight(n);
            let k = (1..=mult.samples.len())
                .find(|&k| mult.reconstruction_system(w, k).rank() == w.dim())
                .ok_or(Error::Reconstruction(n))?;
            mult.determining.push(k);
        }
        Ok(mult)
    }

    pub fn samples(&self) -> &[Mat2<GaussExt<R>>] {
        &self.samples
    }

    /// Rows `(g, j)` for the first `k` samples: the linear functional
    /// `v ↦ ⟨τ(g⁻¹)v, e_j⟩`.
    fn reconstruction_system(&self, w: Weight, k: usize) -> DenseMat<GaussExt<R>> {
        let gram = SectionSpace::<GaussExt<R>>::new(w);
        let mut rows = Vec::with_capacity(k * w.dim());
        for reps in &self.inverse_reps[..k] {
            let rep = &reps[w.0 as usize];
            for (j, g) in gram.gram_diag().iter().enumerate() {
                rows.push(rep.row(j).iter().map(|x| x.mul_ref(g)).collect());
            }
        }
        DenseMat::from_rows(rows).expect("rectangular")
    }

    /// `⟨f_v(g_s), e_j⟩` for every basis vector, where `f_v(g) = τ(g⁻¹)v`.
    fn pairings(&self, s: usize, v: &Section<GaussExt<R>>) -> Vec<GaussExt<R>> {
        let gram = SectionSpace::<GaussExt<R>>::new(v.weight());
        self.inverse_reps[s][v.weight().0 as usize]
            .mul_vec(v.coeffs())
            .expect("dimensions agree")
            .iter()
            .zip(gram.gram_diag())
            .map(|(x, g)| x.mul_ref(g))
            .collect()
    }

    pub fn multiply(
        &self,
        v1: &Section<GaussExt<R>>,
        v2: &Section<GaussExt<R>>,
    ) -> Result<Section<GaussExt<R>>> {
        require_invariant(self.group, v1)?;
        require_invariant(self.group, v2)?;
        let (w1, w2) = (v1.weight(), v2.weight());
        let w = w1.plus(w2);
        if w.0 > self.max_weight {
            return Err(Error::Reconstruction(w.0));
        }
        let mu = comultiplication::<GaussExt<R>>(w1, w2);
        // μ(e_j) only has components e_t1 ⊗ e_t2 with t1 + t2 = j
        let terms: Vec<Vec<(usize, usize, GaussExt<R>)>> = (0..w.dim())
            .map(|j| {
                (0..w1.dim())
                    .filter(|&t1| t1 <= j && j - t1 < w2.dim())
                    .map(|t1| {
                        let c = mu.comul_matrix().get(tensor_index(w2, t1, j - t1), j);
                        (t1, j - t1, c.conj())
                    })
                    .filter(|(_, _, c)| !c.is_zero())
                    .collect()
            })
            .collect();

        // F(e_j)(g) = Σ conj(μ(e_j)_t) · F_1(e_t1)(g) · F_2(e_t2)(g)
        let form_at = |s: usize| -> Vec<GaussExt<R>> {
            let p1 = self.pairings(s, v1);
            let p2 = self.pairings(s, v2);
            terms
                .iter()
                .map(|t| {
                    let prods: Vec<_> = t
                        .iter()
                        .map(|(t1, t2, c)| c.mul_ref(&p1[*t1]).mul_ref(&p2[*t2]))
                        .collect();
                    GaussExt::<R>::sum_refs(&prods)
                })
                .collect()
        };

        let k = self.determining[w.0 as usize];
        let rhs: Vec<_> = (0..k).flat_map(form_at).collect();
        let v = Section::from_coeffs(
            self.reconstruction_system(w, k)
                .solve(&rhs)?
                .ok_or(Error::Reconstruction(w.0))?,
        );
        // the remaining samples must agree with F_v as well
        for s in k..self.samples.len() {
            if self.pairings(s, &v) != form_at(s) {
                return Err(Error::Reconstruction(w.0));
            }
        }
        Ok(v)
    }
}

/// One-shot abstract product with a multiplier sized to the result.
pub fn multiply_invariants_abstract<R: Radical>(
    group: &FiniteSubgroup<GaussExt<R>>,
    v1: &Section<GaussExt<R>>,
    v2: &Section<GaussExt<R>>,
) -> Result<Section<GaussExt<R>>> {
    let w = v1.weight().plus(v2.weight());
    AbstractMultiplier::new(group, w.0)?.multiply(v1, v2)
}

/// A finite sum of invariant sections of different weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement<S: Scalar> {
    components: BTreeMap<u32, Section<S>>,
}

impl<S: Scalar> GradedElement<S> {
    pub fn zero() -> Self {
        GradedElement {
            components: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::homogeneous(Section::constant(S::one()))
    }

    pub fn homogeneous(v: Section<S>) -> Self {
        let mut e = Self::zero();
        e.insert(v);
        e
    }

    fn insert(&mut self, v: Section<S>) {
        let w = v.weight().0;
        let sum = match self.components.remove(&w) {
            Some(old) => old.add(&v).expect("same weight"),
            None => v,
        };
        if !sum.is_zero() {
            self.components.insert(w, sum);
        }
    }

    pub fn component(&self, w: Weight) -> Option<&Section<S>> {
        self.components.get(&w.0)
    }

    pub fn components(&self) -> impl Iterator<Item = &Section<S>> {
        self.components.values()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for v in o.components.values() {
            out.insert(v.clone());
        }
        out
    }

    /// Product in the graded ring; every component must be Γ-invariant.
    pub fn mul(&self, o: &Self, group: &FiniteSubgroup<S>) -> Result<Self> {
        let mut out = Self::zero();
        for a in self.components.values() {
            for b in o.components.values() {
                out.insert(multiply_invariants_classical(group, a, b)?);
            }
        }
        Ok(out)
    }

    pub fn is_invariant(&self, group: &FiniteSubgroup<S>) -> bool {
        self.components.values().all(|v| is_invariant(group, v))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingCheckKind {
    Unit,
    Invariance,
    Grading,
    Commutativity,
    Associativity,
    PathEquality,
}

impl RingCheckKind {
    pub fn name(self) -> &'static str {
        match self {
            RingCheckKind::Unit => "unit",
            RingCheckKind::Invariance => "invariance",
            RingCheckKind::Grading => "grading",
            RingCheckKind::Commutativity => "commutativity",
            RingCheckKind::Associativity => "associativity",
            RingCheckKind::PathEquality => "path-equality",
        }
    }
}

/// One exact check on basis elements `(weight, index)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingCheck {
    pub kind: RingCheckKind,
    pub inputs: Vec<(u32, usize)>,
    pub passed: bool,
    /// Both sides as canonical coefficient strings, present on failure.
    pub witness: Option<(Vec<String>, Vec<String>)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RingReport {
    pub dims: Vec<usize>,
    pub checks: Vec<RingCheck>,
}

impl RingReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn count(&self, kind: RingCheckKind) -> usize {
        self.checks.iter().filter(|c| c.kind == kind).count()
    }
}

fn strings<S: Scalar>(v: &Section<S>) -> Vec<String> {
    v.coeffs().iter().map(Scalar::to_canonical).collect()
}

fn check<S: Scalar>(
    kind: RingCheckKind,
    inputs: Vec<(u32, usize)>,
    lhs: &Section<S>,
    rhs: &Section<S>,
) -> RingCheck {
    let passed = lhs == rhs;
    RingCheck {
        kind,
        inputs,
        passed,
        witness: (!passed).then(|| (strings(lhs), strings(rhs))),
    }
}

fn flag(
    kind: RingCheckKind,
    inputs: Vec<(u32, usize)>,
    passed: bool,
    value: &impl Fn() -> Vec<String>,
) -> RingCheck {
    RingCheck {
        kind,
        inputs,
        passed,
        witness: (!passed).then(|| (value(), Vec::new())),
    }
}

/// Exhaustive graded-ring checks on invariant bases with total weight at
/// most `max_weight`.
pub fn verify_graded_ring<S: Scalar>(
    group: &FiniteSubgroup<S>,
    max_weight: u32,
) -> Result<RingReport> {
    let spaces = invariant_spaces(group, max_weight)?;
    let dims = spaces.iter().map(InvariantSpace::dim).collect();
    let basis = |w: u32| spaces[w as usize].basis();
    let mut checks = Vec::new();

    let one = Section::constant(S::one());
    let unit_ok = spaces[0].basis() == [one.clone()];
    checks.push(flag(RingCheckKind::Unit, vec![(0, 0)], unit_ok, &|| {
        spaces[0].basis().iter().flat_map(strings).collect()
    }));
    for w in 0..=max_weight {
        for (i, v) in basis(w).iter().enumerate() {
            checks.push(check(
                RingCheckKind::Unit,
                vec![(w, i)],
                &multiply_invariants_classical(group, &one, v)?,
                v,
            ));
        }
    }

    let mut products: BTreeMap<((u32, usize), (u32, usize)), Section<S>> = BTreeMap::new();
    for w1 in 0..=max_weight {
        for w2 in 0..=(max_weight - w1) {
            for (i, v1) in basis(w1).iter().enumerate() {
                for (j, v2) in basis(w2).iter().enumerate() {
                    let p = multiply_invariants_classical(group, v1, v2)?;
                    let inputs = vec![(w1, i), (w2, j)];
                    checks.push(flag(
                        RingCheckKind::Invariance,
                        inputs.clone(),
                        is_invariant(group, &p),
                        &|| strings(&p),
                    ));
                    let graded = p.weight().0 == w1 + w2 && spaces[(w1 + w2) as usize].contains(&p);
                    checks.push(flag(
                        RingCheckKind::Grading,
                        inputs.clone(),
                        graded,
                        &|| strings(&p),
                    ));
                    if (w1, i) < (w2, j) {
                        let q = multiply_invariants_classical(group, v2, v1)?;
                        checks.push(check(RingCheckKind::Commutativity, inputs, &p, &q));
                    }
                    products.insert(((w1, i), (w2, j)), p);
                }
            }
        }
    }

    for w1 in 0..=max_weight {
        for w2 in 0..=(max_weight - w1) {
            for w3 in 0..=(max_weight - w1 - w2) {
                for i in 0..basis(w1).len() {
                    for j in 0..basis(w2).len() {
                        for k in 0..basis(w3).len() {
                            let left =
                                multiply_sections(&products[&((w1, i), (w2, j))], &basis(w3)[k]);
                            let right =
                                multiply_sections(&basis(w1)[i], &products[&((w2, j), (w3, k))]);
                            checks.push(check(
                                RingCheckKind::Associativity,
                                vec![(w1, i), (w2, j), (w3, k)],
                                &left,
                                &right,
                            ));
                        }
                    }
                }
            }
        }
    }

    Ok(RingReport { dims, checks })
}

/// Abstract route versus classical route on every pair of invariant basis
/// elements with total weight at most `max_weight`.
pub fn verify_path_equality<R: Radical>(
    group: &FiniteSubgroup<GaussExt<R>>,
    max_weight: u32,
) -> Result<RingReport> {
    let spaces = invariant_spaces(group, max_weight)?;
    let dims = spaces.iter().map(InvariantSpace::dim).collect();
    let multiplier = AbstractMultiplier::new(group, max_weight)?;
    let mut checks = Vec::new();
    for w1 in 0..=max_weight {
        for w2 in 0..=(max_weight - w1) {
            for (i, v1) in spaces[w1 as usize].basis().iter().enumerate() {
                for (j, v2) in spaces[w2 as usize].basis().iter().enumerate() {
                    let classical = multiply_invariants_classical(group, v1, v2)?;
                    let abstract_ = multiplier.multiply(v1, v2)?;
                    checks.push(check(
                        RingCheckKind::PathEquality,
                        vec![(w1, i), (w2, j)],
                        &abstract_,
                        &classical,
                    ));
                }
            }
        }
    }
    Ok(RingReport { dims, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariantforms::groups::{build_group_in, GroupName};
    use crate::{GaussRational as Qi, NoRadical};

    fn q8() -> FiniteSubgroup<Qi> {
        build_group_in::<NoRadical>(&GroupName::Q8).unwrap()
    }

    fn sec(c: &[i64]) -> Section<Qi> {
        Section::from_coeffs(c.iter().map(|&x| Qi::from_i64(x)).collect())
    }

    #[test]
    fn classical_product_of_q8_invariants() {
        let g = q8();
        let f = sec(&[1, 0, 0, 0, 1]);
        let h = sec(&[0, 0, 1, 0, 0]);
        let p = multiply_invariants_classical(&g, &f, &h).unwrap();
        // a⁶c² + a²c⁶
        assert_eq!(p, sec(&[0, 0, 1, 0, 0, 0, 1, 0, 0]));
        assert!(is_invariant(&g, &p));
        let one = sec(&[1]);
        assert_eq!(multiply_invariants_classical(&g, &one, &f).unwrap(), f);
    }

    #[test]
    fn non_invariant_input_rejected() {
        let g = q8();
        let bad = sec(&[1, 0, 0, 0, 0]);
        let f = sec(&[1, 0, 0, 0, 1]);
        assert!(matches!(
            multiply_invariants_classical(&g, &bad, &f),
            Err(Error::NotInvariant { .. })
        ));
        assert!(multiply_invariants_abstract(&g, &f, &bad).is_err());
    }

    #[test]
    fn abstract_route_agrees() {
        let g = q8();
        let f = sec(&[1, 0, 0, 0, 1]);
        let h = sec(&[0, 0, 1, 0, 0]);
        let classical = multiply_invariants_classical(&g, &f, &h).unwrap();
        assert_eq!(multiply_invariants_abstract(&g, &f, &h).unwrap(), classical);
        assert_eq!(multiply_invariants_abstract(&g, &h, &f).unwrap(), classical);
        let c = sec(&[3]);
        let d = sec(&[5]);
        assert_eq!(
            multiply_invariants_abstract(&g, &c, &d).unwrap(),
            sec(&[15])
        );
    }

    #[test]
    fn graded_elements_multiply() {
        let g = q8();
        let x = GradedElement::homogeneous(sec(&[1, 0, 0, 0, 1])).add(&GradedElement::one());
        let y = GradedElement::homogeneous(sec(&[0, 1, 0, 0, 0, -1, 0]));
        let p = x.mul(&y, &g).unwrap();
        assert!(p.is_invariant(&g));
        assert_eq!(p.components().count(), 2);
        assert_eq!(p.component(Weight(6)), Some(&sec(&[0, 1, 0, 0, 0, -1, 0])));
        assert_eq!(x.mul(&GradedElement::one(), &g).unwrap(), x);
        assert_eq!(x.add(&x).component(Weight(0)), Some(&sec(&[2])));
    }

    #[test]
    fn small_ring_report() {
        let report = verify_graded_ring(&q8(), 8).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.dims, vec![1, 0, 0, 0, 2, 0, 1, 0, 3]);
        assert!(report.count(RingCheckKind::Associativity) > 0);
        let paths = verify_path_equality(&q8(), 8).unwrap();
        assert!(paths.all_passed());
    }
}
