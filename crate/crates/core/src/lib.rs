//! Exact computation of motivic masses of cyclic group actions, stringy
//! motifs from resolution data, and their Poincaré and Euler
//! realizations, together with a finite-field enumeration of tamely
//! ramified extensions of `F_q((t))`.

pub mod cyclic_reps;
pub mod local_fields;
pub mod motivic_ring;
pub mod stringy;

pub use motivic_ring::{
    EulerValue, Exponent, ExtendedMotivic, MotivicElement, MotivicRational, PoincareFunction,
};
