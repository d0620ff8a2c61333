//! Algebraic modular forms for finite subgroups of SU(2).

pub mod groups;
pub mod invariants;
pub mod ring;

pub use groups::{build_group, build_group_in, AnyGroup, FieldKind, FiniteSubgroup, GroupName};
pub use invariants::{
    character_dimension, characters_upto, invariant_spaces, is_invariant, molien_table,
    representation_matrices, reynolds_invariants, reynolds_projector, reynolds_projectors,
    InvariantSpace, MolienTable, RepresentationTower,
};
pub use ring::{
    multiply_invariants_abstract, multiply_invariants_classical, verify_graded_ring,
    verify_path_equality, AbstractMultiplier, GradedElement, RingCheck, RingCheckKind, RingReport,
};
