//! Yetter-Drinfeld modules for automorphism pairs.

pub mod builders;
pub mod module;
pub mod transform;

pub use builders::{
    build_fvg, build_h_alpha_beta, build_h_prime_beta, check_pair_in_involution, trivial_module,
};
pub use module::{check_yd, YDModule, YdReport};
pub use transform::{
    conjugate_twist, prime, shift, verify_morphism, MorphismReport, ShiftDirection, YDMorphism,
};
