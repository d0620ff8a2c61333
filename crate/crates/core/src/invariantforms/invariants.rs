//! Invariant subspaces `H_n^Γ`: Reynolds averaging on one side, the
//! character sum on the other.

use num_rational::BigRational;
use rayon::prelude::*;

use super::groups::FiniteSubgroup;
use crate::borelweil::{translate, Section, Weight};
use crate::error::Result;
use crate::exactnum::{DenseMat, HomPoly, Mat2, Scalar};

/// `χ_0(γ) … χ_{n_max}(γ)` from the trace `t` via `χ_{k+1} = t·χ_k − χ_{k−1}`,
/// which is `Σ_j μ^(k−2j)` for the eigenvalues `μ^{±1}` of γ.
pub fn characters_upto<S: Scalar>(g: &Mat2<S>, n_max: u32) -> Vec<S> {
    let t = g.trace();
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(S::one());
    if n_max >= 1 {
        out.push(t.clone());
    }
    for k in 2..=n_max as usize {
        let next = t.mul_ref(&out[k - 1]) - &out[k - 2];
        out.push(next);
    }
    out
}

fn averaged_character_dims<S: Scalar>(group: &FiniteSubgroup<S>, n_max: u32) -> Vec<usize> {
    let sums = group
        .elements()
        .par_iter()
        .map(|g| characters_upto(g, n_max))
        .reduce(
            || vec![S::zero(); n_max as usize + 1],
            |mut acc, chi| {
                for (a, c) in acc.iter_mut().zip(&chi) {
                    *a += c;
                }
                acc
            },
        );
    let order = BigRational::from_integer(group.order().into());
    sums.into_iter()
        .enumerate()
        .map(|(n, s)| {
            let avg = s
                .to_rational()
                .unwrap_or_else(|| panic!("character sum at weight {n} is not rational"))
                / &order;
            assert!(avg.is_integer(), "character average at weight {n} is {avg}");
            let v = avg.to_integer();
            usize::try_from(v).expect("character average is a non-negative integer")
        })
        .collect()
}

/// `dim H_n^Γ = |Γ|⁻¹ Σ_γ χ_n(γ)`.
pub fn character_dimension<S: Scalar>(group: &FiniteSubgroup<S>, n: Weight) -> usize {
    averaged_character_dims(group, n.0)[n.0 as usize]
}

/// `τ(g)` on `H_0, H_1, …` in the monomial basis, one weight per step:
/// column `j` on `H_n` holds `x^(n−j) y^j`, where `(x, y)` are the rows of
/// `g⁻¹` read as linear forms.
pub struct RepresentationTower<S> {
    x: HomPoly<S>,
    y: HomPoly<S>,
    columns: Vec<HomPoly<S>>,
}

impl<S: Scalar> RepresentationTower<S> {
    pub fn new(g: &Mat2<S>) -> Result<Self> {
        let (x, y) = g.inverse_unimodular()?.linear_forms();
        Ok(RepresentationTower {
            x,
            y,
            columns: Vec::new(),
        })
    }

    /// Columns of the next weight's matrix.
    fn advance(&mut self) -> &[HomPoly<S>] {
        if self.columns.is_empty() {
            self.columns.push(HomPoly::from_coeffs(vec![S::one()]));
        } else {
            let last = self.columns[self.columns.len() - 1].mul(&self.y);
            for p in &mut self.columns {
                *p = p.mul(&self.x);
            }
            self.columns.push(last);
        }
        &self.columns
    }

    pub fn next_matrix(&mut self) -> DenseMat<S> {
        let cols = self.advance();
        let n = cols.len();
        let data: Vec<Vec<S>> = cols.iter().map(|p| p.coeffs().to_vec()).collect();
        DenseMat::from_columns(n, &data).expect("square")
    }
}

/// Matrices of `τ(g)` on `H_0 … H_{n_max}`.
pub fn representation_matrices<S: Scalar>(g: &Mat2<S>, n_max: u32) -> Result<Vec<DenseMat<S>>> {
    let mut tower = RepresentationTower::new(g)?;
    Ok((0..=n_max).map(|_| tower.next_matrix()).collect())
}

/// One element from each pair `{g, −g}` when `−1 ∈ Γ`, otherwise all of Γ.
fn sign_classes<S: Scalar>(group: &FiniteSubgroup<S>) -> (Vec<&Mat2<S>>, bool) {
    let minus = Mat2::diag(-S::one(), -S::one());
    if !group.contains(&minus) {
        return (group.elements().iter().collect(), false);
    }
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for g in group.elements() {
        if seen.insert(g.clone()) {
            seen.insert(g.mul(&minus));
            reps.push(g);
        }
    }
    (reps, true)
}

/// Reynolds projectors `|Γ|⁻¹ Σ_γ τ(γ)` on `H_0 … H_{n_max}`.
///
/// With `−1 ∈ Γ` the odd weights vanish and the even weights need only one
/// element of each pair `±γ`, since `τ(−γ) = (−1)^n τ(γ)`.
pub fn reynolds_projectors<S: Scalar>(
    group: &FiniteSubgroup<S>,
    n_max: u32,
) -> Result<Vec<DenseMat<S>>> {
    let (reps, paired) = sign_classes(group);
    let mut towers = reps
        .iter()
        .map(|g| RepresentationTower::new(g))
        .collect::<Result<Vec<_>>>()?;
    let scale = S::from_rational(BigRational::new(
        (if paired { 2 } else { 1 }).into(),
        group.order().into(),
    ));
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max as usize {
        towers.par_iter_mut().for_each(|t| {
            t.advance();
        });
        if paired && n % 2 == 1 {
            out.push(DenseMat::zeros(n + 1, n + 1));
            continue;
        }
        let entries: Vec<S> = (0..(n + 1) * (n + 1))
            .into_par_iter()
            .map(|k| {
                let (i, j) = (k / (n + 1), k % (n + 1));
                S::sum_refs(towers.iter().map(|t| t.columns[j].coeff(i))).mul_ref(&scale)
            })
            .collect();
        out.push(DenseMat::from_vec(n + 1, n + 1, entries)?);
    }
    Ok(out)
}

pub fn reynolds_projector<S: Scalar>(group: &FiniteSubgroup<S>, n: Weight) -> Result<DenseMat<S>> {
    Ok(reynolds_projectors(group, n.0)?
        .pop()
        .expect("n_max + 1 matrices"))
}

/// `H_n^Γ` with a canonical basis (reduced echelon form in the monomial
/// coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSpace<S: Scalar> {
    weight: Weight,
    basis: Vec<Section<S>>,
}

impl<S: Scalar> InvariantSpace<S> {
    /// Column space of a Reynolds projector on `H_n`.
    pub fn from_projector(weight: Weight, projector: &DenseMat<S>) -> Self {
        let basis = projector
            .transpose()
            .row_space_basis()
            .into_iter()
            .map(Section::from_coeffs)
            .collect();
        InvariantSpace { weight, basis }
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Section<S>] {
        &self.basis
    }

    /// Coordinates of `h` in the basis, or `None` if `h` is outside the span.
    pub fn coordinates(&self, h: &Section<S>) -> Option<Vec<S>> {
        if h.weight() != self.weight {
            return None;
        }
        if self.basis.is_empty() {
            return h.is_zero().then(Vec::new);
        }
        let cols: Vec<Vec<S>> = self.basis.iter().map(|b| b.coeffs().to_vec()).collect();
        let m = DenseMat::from_columns(self.weight.0 as usize + 1, &cols).ok()?;
        m.solve(h.coeffs()).ok().flatten()
    }

    pub fn contains(&self, h: &Section<S>) -> bool {
        self.coordinates(h).is_some()
    }
}

/// Basis of `H_n^Γ` by Reynolds averaging of the monomial basis.
pub fn reynolds_invariants<S: Scalar>(
    group: &FiniteSubgroup<S>,
    n: Weight,
) -> Result<InvariantSpace<S>> {
    Ok(InvariantSpace::from_projector(
        n,
        &reynolds_projector(group, n)?,
    ))
}

/// Invariant spaces for every weight `0..=n_max`.
pub fn invariant_spaces<S: Scalar>(
    group: &FiniteSubgroup<S>,
    n_max: u32,
) -> Result<Vec<InvariantSpace<S>>> {
    Ok(reynolds_projectors(group, n_max)?
        .iter()
        .enumerate()
        .map(|(n, p)| InvariantSpace::from_projector(Weight(n as u32), p))
        .collect())
}

/// True iff `τ(γ)h = h` for every element of the group.
pub fn is_invariant<S: Scalar>(group: &FiniteSubgroup<S>, h: &Section<S>) -> bool {
    group
        .elements()
        .iter()
        .all(|g| translate(g, h).is_ok_and(|t| &t == h))
}

/// Dimensions of `H_n^Γ` by the character sum, for `n = 0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolienTable {
    pub dims: Vec<usize>,
    /// Weights (with multiplicity, at most three) where invariants appear that
    /// are not accounted for by monomials in earlier ones.
    pub generator_weights: Vec<u32>,
}

/// Number of monomials of total weight `n` in generators of the given weights.
fn monomial_count(weights: &[u32], n: u32) -> usize {
    let mut ways = vec![0usize; n as usize + 1];
    ways[0] = 1;
    for &w in weights {
        let w = w as usize;
        for k in w..=n as usize {
            ways[k] += ways[k - w];
        }
    }
    ways[n as usize]
}

pub fn molien_table<S: Scalar>(group: &FiniteSubgroup<S>, n_max: u32) -> MolienTable {
    let dims = averaged_character_dims(group, n_max);
    let mut generator_weights = Vec::new();
    for n in 1..=n_max {
        if generator_weights.len() >= 3 {
            break;
        }
        let explained = monomial_count(&generator_weights, n);
        let d = dims[n as usize];
        if d > explained {
            let extra = (d - explained).min(3 - generator_weights.len());
            generator_weights.extend(std::iter::repeat_n(n, extra));
        }
    }
    MolienTable {
        dims,
        generator_weights,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariantforms::groups::{build_group_in, GroupName};
    use crate::{GaussRational as Qi, NoRadical};
    use num_traits::{One, Zero};

    fn q8() -> FiniteSubgroup<Qi> {
        build_group_in::<NoRadical>(&GroupName::Q8).unwrap()
    }

    fn sec(c: &[i64]) -> Section<Qi> {
        Section::from_coeffs(c.iter().map(|&x| Qi::from_i64(x)).collect())
    }

    /// Direct eigenvalue sum: Q8's eigenvalues are ±1 and ±i, all in ℚ(i).
    #[test]
    fn chebyshev_matches_eigenvalue_sum() {
        for g in q8().elements() {
            let mu = g.get(0, 0).clone();
            let is_diag = g.get(0, 1).is_zero();
            let chi = characters_upto(g, 8);
            for (n, c) in chi.iter().enumerate() {
                if is_diag {
                    let inv = mu.inv().unwrap();
                    let mut sum = Qi::zero();
                    for j in 0..=n {
                        let e = n as i64 - 2 * j as i64;
                        let mut p = Qi::one();
                        for _ in 0..e.unsigned_abs() {
                            p = p * if e > 0 { &mu } else { &inv };
                        }
                        sum += &p;
                    }
                    assert_eq!(&sum, c);
                } else {
                    // off-diagonal Q8 elements have eigenvalues ±i
                    let expected = [1, 0, -1, 0][n % 4];
                    assert_eq!(c, &Qi::from_i64(expected));
                }
            }
        }
    }

    #[test]
    fn q8_character_dimensions() {
        let g = q8();
        assert_eq!(character_dimension(&g, Weight(0)), 1);
        assert_eq!(character_dimension(&g, Weight(4)), 2);
        assert_eq!(character_dimension(&g, Weight(6)), 1);
        for n in (1..20).step_by(2) {
            assert_eq!(character_dimension(&g, Weight(n)), 0);
        }
    }

    #[test]
    fn q8_reynolds_bases() {
        let g = q8();
        let v4 = reynolds_invariants(&g, Weight(4)).unwrap();
        assert_eq!(v4.basis(), &[sec(&[1, 0, 0, 0, 1]), sec(&[0, 0, 1, 0, 0])]);
        let v6 = reynolds_invariants(&g, Weight(6)).unwrap();
        // a⁵c − ac⁵
        assert_eq!(v6.basis(), &[sec(&[0, 1, 0, 0, 0, -1, 0])]);
        for b in v4.basis().iter().chain(v6.basis()) {
            assert!(is_invariant(&g, b));
        }
        assert!(v4.contains(&sec(&[2, 0, 3, 0, 2])));
        assert!(!v4.contains(&sec(&[1, 0, 0, 0, 0])));
    }

    #[test]
    fn representation_is_a_left_action() {
        let g = q8();
        let (a, b) = (&g.elements()[3], &g.elements()[5]);
        let ra = representation_matrices(a, 5).unwrap();
        let rb = representation_matrices(b, 5).unwrap();
        let rab = representation_matrices(&a.mul(b), 5).unwrap();
        for n in 0..=5 {
            assert_eq!(ra[n].matmul(&rb[n]).unwrap(), rab[n]);
            let h = Section::basis(Weight(n as u32), n / 2);
            let via_matrix = ra[n].mul_vec(h.coeffs()).unwrap();
            assert_eq!(translate(a, &h).unwrap().coeffs(), &via_matrix[..]);
        }
    }

    #[test]
    fn projector_idempotent_and_self_adjoint() {
        use crate::borelweil::SectionSpace;
        let g = q8();
        for (n, p) in reynolds_projectors(&g, 8).unwrap().iter().enumerate() {
            assert_eq!(p.matmul(p).unwrap(), *p);
            let gram = SectionSpace::<Qi>::new(Weight(n as u32)).gram_matrix();
            // ⟨Px, y⟩ = ⟨x, Py⟩  ⇔  Pᵀ G = G · conj(P)
            let conj_p = p.conj_transpose().transpose();
            assert_eq!(
                p.transpose().matmul(&gram).unwrap(),
                gram.matmul(&conj_p).unwrap()
            );
        }
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(&[], 0), 1);
        assert_eq!(monomial_count(&[], 3), 0);
        assert_eq!(monomial_count(&[4, 4, 6], 8), 3);
        assert_eq!(monomial_count(&[12, 20], 32), 1);
    }

    #[test]
    fn q8_molien_table() {
        let t = molien_table(&q8(), 8);
        assert_eq!(t.dims, vec![1, 0, 0, 0, 2, 0, 1, 0, 3]);
        assert_eq!(t.generator_weights, vec![4, 4, 6]);
    }

    #[test]
    fn trivial_group_has_everything() {
        let g = build_group_in::<NoRadical>(&GroupName::Cyclic(1)).unwrap();
        let t = molien_table(&g, 6);
        assert_eq!(t.dims, (1..=7).collect::<Vec<_>>());
        assert_eq!(t.generator_weights, vec![1, 1]);
    }
}
