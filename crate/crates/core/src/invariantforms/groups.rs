//! Finite subgroups of SU(2) as explicit element lists.
//!
//! Quaternions `w + x·i + y·j + z·k` are embedded as
//! `[[w + x i, y + z i], [-y + z i, w - x i]]`; every group is the closure of a
//! few unit quaternions whose coordinates live in ℚ, ℚ(√2) or ℚ(√5).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{GaussExt, Mat2, NoRadical, Radical, Scalar, Sqrt2, Sqrt5};

const CLOSURE_LIMIT: usize = 1024;

/// The coefficient field a group is realized over.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    /// ℚ(i)
    Gauss,
    /// ℚ(i, √2)
    Sqrt2,
    /// ℚ(i, √5)
    Sqrt5,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    Cyclic(u32),
    Q8,
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GroupName {
    pub fn order(&self) -> usize {
        match self {
            GroupName::Cyclic(k) => *k as usize,
            GroupName::Q8 => 8,
            GroupName::BinaryDihedral(k) => 4 * *k as usize,
            GroupName::BinaryTetrahedral => 24,
            GroupName::BinaryOctahedral => 48,
            GroupName::BinaryIcosahedral => 120,
        }
    }

    /// Smallest supported field containing the matrix entries, or an error
    /// when the group is not realizable over ℚ(i), ℚ(i, √2) or ℚ(i, √5).
    pub fn field(&self) -> Result<FieldKind> {
        let unsupported = || Error::UnknownGroup(self.to_string());
        Ok(match self {
            GroupName::Cyclic(1 | 2 | 3 | 4 | 6) => FieldKind::Gauss,
            GroupName::Cyclic(8) => FieldKind::Sqrt2,
            GroupName::Cyclic(5 | 10) => FieldKind::Sqrt5,
            GroupName::Cyclic(_) => return Err(unsupported()),
            GroupName::Q8 | GroupName::BinaryTetrahedral => FieldKind::Gauss,
            GroupName::BinaryDihedral(1 | 2) => FieldKind::Gauss,
            GroupName::BinaryDihedral(3 | 4) => FieldKind::Sqrt2,
            GroupName::BinaryDihedral(5) => FieldKind::Sqrt5,
            GroupName::BinaryDihedral(_) => return Err(unsupported()),
            GroupName::BinaryOctahedral => FieldKind::Sqrt2,
            GroupName::BinaryIcosahedral => FieldKind::Sqrt5,
        })
    }

    /// Whether `-1` is an element.
    pub fn contains_minus_one(&self) -> bool {
        !matches!(self, GroupName::Cyclic(k) if k % 2 == 1)
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(k) => write!(f, "cyclic({k})"),
            GroupName::Q8 => f.write_str("Q8"),
            GroupName::BinaryDihedral(k) => write!(f, "binary_dihedral({k})"),
            GroupName::BinaryTetrahedral => f.write_str("2T"),
            GroupName::BinaryOctahedral => f.write_str("2O"),
            GroupName::BinaryIcosahedral => f.write_str("2I"),
        }
    }
}

impl FromStr for GroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownGroup(s.to_string());
        let t = s.trim();
        let param = |prefix: &str| -> Option<u32> {
            let rest = t.strip_prefix(prefix)?;
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| rest.strip_prefix(':'))?;
            inner.trim().parse().ok().filter(|&k| k > 0)
        };
        match t {
            "Q8" | "q8" => return Ok(GroupName::Q8),
            "2T" | "2t" => return Ok(GroupName::BinaryTetrahedral),
            "2O" | "2o" => return Ok(GroupName::BinaryOctahedral),
            "2I" | "2i" => return Ok(GroupName::BinaryIcosahedral),
            _ => {}
        }
        if let Some(k) = param("cyclic") {
            return Ok(GroupName::Cyclic(k));
        }
        if let Some(k) = param("binary_dihedral") {
            return Ok(GroupName::BinaryDihedral(k));
        }
        Err(unknown())
    }
}

/// A finite subgroup of SU(2), stored as its full element list.
#[derive(Clone, Debug)]
pub struct FiniteSubgroup<S: Scalar> {
    name: GroupName,
    elements: Vec<Mat2<S>>,
}

impl<S: Scalar> FiniteSubgroup<S> {
    /// Saturates `generators` under multiplication. The identity comes first
    /// and the remaining order is deterministic.
    pub fn generate(name: GroupName, generators: &[Mat2<S>]) -> Result<Self> {
        for g in generators {
            g.check_special_unitary()?;
        }
        let mut elements = vec![Mat2::identity()];
        let mut seen: HashSet<Mat2<S>> = elements.iter().cloned().collect();
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            frontier += 1;
            for g in generators {
                let next = current.mul(g);
                if seen.insert(next.clone()) {
                    elements.push(next);
                    if elements.len() > CLOSURE_LIMIT {
                        return Err(Error::GroupTooLarge {
                            name: name.to_string(),
                            limit: CLOSURE_LIMIT,
                        });
                    }
                }
            }
        }
        if elements.len() != name.order() {
            return Err(Error::WrongOrder {
                name: name.to_string(),
                found: elements.len(),
                expected: name.order(),
            });
        }
        Ok(FiniteSubgroup { name, elements })
    }

    pub fn name(&self) -> &GroupName {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat2<S>] {
        &self.elements
    }

    pub fn contains(&self, g: &Mat2<S>) -> bool {
        self.elements.contains(g)
    }

    /// Exhaustive check of the group axioms and SU(2) membership.
    pub fn check_closed(&self) -> bool {
        let set: HashSet<&Mat2<S>> = self.elements.iter().collect();
        set.contains(&Mat2::identity())
            && self.elements.iter().all(|g| {
                g.is_special_unitary()
                    && g.inverse().is_ok_and(|inv| set.contains(&inv))
                    && self.elements.iter().all(|h| set.contains(&g.mul(h)))
            })
    }
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// `(p + q·√d) / den` as a real element of ℚ(i, √d).
fn real_with_radical<R: Radical>(p: i64, q: i64, den: i64) -> Result<GaussExt<R>> {
    let base = GaussExt::<R>::from_rational(rat(p, den));
    if q == 0 {
        return Ok(base);
    }
    let r = GaussExt::<R>::radical().ok_or_else(|| {
        Error::UnknownGroup(format!("radical required but field is {:?}", R::RADICAND))
    })?;
    Ok(base + r * GaussExt::from_rational(rat(q, den)))
}

fn quat<R: Radical>(c: [GaussExt<R>; 4]) -> Mat2<GaussExt<R>> {
    let [w, x, y, z] = c;
    Mat2::from_quaternion(w, x, y, z)
}

fn half<R: Radical>(w: i64, x: i64, y: i64, z: i64) -> Mat2<GaussExt<R>> {
    quat([w, x, y, z].map(|n| GaussExt::from_rational(rat(n, 2))))
}

fn needs_radical<R: Radical>(d: u32) -> Result<()> {
    if R::RADICAND == Some(d) {
        Ok(())
    } else {
        Err(Error::UnknownGroup(format!(
            "requires √{d}, field has {:?}",
            R::RADICAND
        )))
    }
}

/// `(1 + i)/√2`, order 8.
fn eighth_turn<R: Radical>() -> Result<Mat2<GaussExt<R>>> {
    needs_radical::<R>(2)?;
    let s = real_with_radical::<R>(0, 1, 2)?;
    Ok(quat([s.clone(), s, GaussExt::zero(), GaussExt::zero()]))
}

/// `(φ + φ⁻¹·i + j)/2`, order 10.
fn tenth_turn<R: Radical>() -> Result<Mat2<GaussExt<R>>> {
    needs_radical::<R>(5)?;
    let phi_half = real_with_radical::<R>(1, 1, 4)?;
    let phi_inv_half = real_with_radical::<R>(-1, 1, 4)?;
    Ok(quat([
        phi_half,
        phi_inv_half,
        GaussExt::from_rational(rat(1, 2)),
        GaussExt::zero(),
    ]))
}

fn minus_one<R: Radical>() -> Mat2<GaussExt<R>> {
    Mat2::diag(-GaussExt::one(), -GaussExt::one())
}

fn unit_i<R: Radical>() -> Mat2<GaussExt<R>> {
    half(0, 2, 0, 0)
}

fn unit_j<R: Radical>() -> Mat2<GaussExt<R>> {
    half(0, 0, 2, 0)
}

fn unit_k<R: Radical>() -> Mat2<GaussExt<R>> {
    half(0, 0, 0, 2)
}

/// Generator of the cyclic group of order `k`.
fn cyclic_generator<R: Radical>(k: u32) -> Result<Option<Mat2<GaussExt<R>>>> {
    Ok(Some(match k {
        1 => return Ok(None),
        2 => minus_one(),
        3 => half(-1, 1, 1, 1),
        4 => unit_i(),
        5 => {
            let g = tenth_turn::<R>()?;
            g.mul(&g)
        }
        6 => half(1, 1, 1, 1),
        8 => eighth_turn()?,
        10 => tenth_turn()?,
        _ => return Err(Error::UnknownGroup(format!("cyclic({k})"))),
    }))
}

/// Builds `name` over ℚ(i, √d) for the radical marker `R`.
pub fn build_group_in<R: Radical>(name: &GroupName) -> Result<FiniteSubgroup<GaussExt<R>>> {
    let gens: Vec<Mat2<GaussExt<R>>> = match name {
        GroupName::Cyclic(k) => cyclic_generator::<R>(*k)?.into_iter().collect(),
        GroupName::Q8 => vec![unit_i(), unit_j()],
        GroupName::BinaryDihedral(k) => {
            let rotation = cyclic_generator::<R>(2 * k)?.expect("order 2k > 1");
            let flip = match k {
                3 => {
                    // (i − j)/√2 is orthogonal to the axis i + j + k
                    let s = real_with_radical::<R>(0, 1, 2)?;
                    quat([GaussExt::zero(), s.clone(), -s, GaussExt::zero()])
                }
                5 => unit_k(),
                _ => unit_j(),
            };
            vec![rotation, flip]
        }
        GroupName::BinaryTetrahedral => vec![unit_i(), unit_j(), half(1, 1, 1, 1)],
        GroupName::BinaryOctahedral => {
            vec![unit_i(), unit_j(), half(1, 1, 1, 1), eighth_turn()?]
        }
        GroupName::BinaryIcosahedral => {
            vec![unit_i(), unit_j(), half(1, 1, 1, 1), tenth_turn()?]
        }
    };
    FiniteSubgroup::generate(name.clone(), &gens)
}

/// A group over whichever field its entries need.
#[derive(Clone, Debug)]
pub enum AnyGroup {
    Gauss(FiniteSubgroup<GaussExt<NoRadical>>),
    Sqrt2(FiniteSubgroup<GaussExt<Sqrt2>>),
    Sqrt5(FiniteSubgroup<GaussExt<Sqrt5>>),
}

impl AnyGroup {
    pub fn name(&self) -> &GroupName {
        match self {
            AnyGroup::Gauss(g) => g.name(),
            AnyGroup::Sqrt2(g) => g.name(),
            AnyGroup::Sqrt5(g) => g.name(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            AnyGroup::Gauss(g) => g.order(),
            AnyGroup::Sqrt2(g) => g.order(),
            AnyGroup::Sqrt5(g) => g.order(),
        }
    }

    pub fn radicand(&self) -> Option<u32> {
        match self {
            AnyGroup::Gauss(_) => None,
            AnyGroup::Sqrt2(_) => Some(2),
            AnyGroup::Sqrt5(_) => Some(5),
        }
    }
}

/// Runs the same generic code whatever field an [`AnyGroup`] lives in.
#[macro_export]
macro_rules! with_group {
    ($any:expr, $g:ident => $body:expr) => {
        match $any {
            $crate::invariantforms::AnyGroup::Gauss($g) => $body,
            $crate::invariantforms::AnyGroup::Sqrt2($g) => $body,
            $crate::invariantforms::AnyGroup::Sqrt5($g) => $body,
        }
    };
}

/// Builds a recognized group over its natural field.
pub fn build_group(name: &GroupName) -> Result<AnyGroup> {
    Ok(match name.field()? {
        FieldKind::Gauss => AnyGroup::Gauss(build_group_in(name)?),
        FieldKind::Sqrt2 => AnyGroup::Sqrt2(build_group_in(name)?),
        FieldKind::Sqrt5 => AnyGroup::Sqrt5(build_group_in(name)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("Q8".parse::<GroupName>().unwrap(), GroupName::Q8);
        assert_eq!(
            "2I".parse::<GroupName>().unwrap(),
            GroupName::BinaryIcosahedral
        );
        assert_eq!(
            "cyclic(6)".parse::<GroupName>().unwrap(),
            GroupName::Cyclic(6)
        );
        assert_eq!(
            "binary_dihedral:3".parse::<GroupName>().unwrap(),
            GroupName::BinaryDihedral(3)
        );
        assert!("3T".parse::<GroupName>().is_err());
        assert!("cyclic(0)".parse::<GroupName>().is_err());
        for name in ["Q8", "2T", "2O", "2I", "cyclic(4)", "binary_dihedral(5)"] {
            let g: GroupName = name.parse().unwrap();
            assert_eq!(g.to_string(), name);
        }
    }

    #[test]
    fn polyhedral_orders() {
        for (name, order) in [("Q8", 8), ("2T", 24), ("2O", 48), ("2I", 120)] {
            let g = build_group(&name.parse().unwrap()).unwrap();
            assert_eq!(g.order(), order, "{name}");
        }
    }

    #[test]
    fn cyclic_and_dihedral_families() {
        for k in [1, 2, 3, 4, 5, 6, 8, 10] {
            let g = build_group(&GroupName::Cyclic(k)).unwrap();
            assert_eq!(g.order(), k as usize);
        }
        for k in 1..=5 {
            let g = build_group(&GroupName::BinaryDihedral(k)).unwrap();
            assert_eq!(g.order(), 4 * k as usize);
        }
        assert!(build_group(&GroupName::Cyclic(7)).is_err());
        assert!(build_group(&GroupName::BinaryDihedral(6)).is_err());
    }

    #[test]
    fn groups_are_closed_subgroups_of_su2() {
        assert!(build_group_in::<NoRadical>(&GroupName::Q8)
            .unwrap()
            .check_closed());
        assert!(build_group_in::<NoRadical>(&GroupName::BinaryTetrahedral)
            .unwrap()
            .check_closed());
        assert!(build_group_in::<Sqrt2>(&GroupName::BinaryOctahedral)
            .unwrap()
            .check_closed());
    }

    #[test]
    fn wrong_field_is_rejected() {
        assert!(build_group_in::<NoRadical>(&GroupName::BinaryIcosahedral).is_err());
        assert!(build_group_in::<Sqrt5>(&GroupName::BinaryOctahedral).is_err());
        // ℚ(i) groups embed in the larger fields
        assert_eq!(
            build_group_in::<Sqrt5>(&GroupName::BinaryTetrahedral)
                .unwrap()
                .order(),
            24
        );
    }

    #[test]
    fn minus_one_membership() {
        let g = build_group_in::<NoRadical>(&GroupName::Q8).unwrap();
        assert!(g.contains(&minus_one()));
        let c3 = build_group_in::<NoRadical>(&GroupName::Cyclic(3)).unwrap();
        assert!(!c3.contains(&minus_one()));
        assert!(!GroupName::Cyclic(3).contains_minus_one());
    }
}
