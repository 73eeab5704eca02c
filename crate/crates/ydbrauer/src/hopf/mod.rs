//! Hopf algebras, their axioms, automorphisms and distinguished elements.

pub mod algebra;
pub mod morphism;
pub mod standard;

pub use algebra::{
    antipode_inverse, ensure_same_parent, verify_hopf, AxiomCheck, AxiomReport, HopfAlgebra,
};
pub use morphism::{is_hopf_automorphism, AutPair, Character, GroupLikeElement, HopfAutomorphism};
pub use standard::{
    build_standard, cyclic_group_table, cyclic_labels, cyclic_power_automorphism, group_algebra,
    relabel, sweedler, sweedler_phi, taft, taft_phi, StandardAlgebra,
};
