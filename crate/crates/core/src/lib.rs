//! Equilibrium machinery for a two-player innovation race against a deadline:
//! a present-biased leader who needs one breakthrough races a time-consistent
//! chaser who needs two, under either immediate disclosure of the chaser's
//! first success ("public" regime) or no disclosure until the winner is
//! announced ("hidden" regime).
//!
//! The crate provides
//! - closed-form and implicitly-defined equilibrium cutoffs for both regimes
//!   ([`public`], [`hidden`]),
//! - the expected-start decomposition into motivation and information effects
//!   plus a grid sweep engine ([`effects`]),
//! - a discrete-time dynamic-programming oracle that converges to the
//!   continuous cutoffs and demonstrates chattering under reversible exit
//!   ([`oracle`]),
//! - an event-driven Monte Carlo simulator with one-shot deviation checks
//!   ([`sim`]),
//! - single-agent and stationary variants: present-biased and naive chasers,
//!   exponential discounting, postponed rewards, infinite horizon ([`ext`]).
//!
//! All numeric code is generic over the scalar type through [`real::Real`];
//! the aliases below fix the two floating-point instantiations.

pub mod bisect;
pub mod effects;
pub mod error;
pub mod ext;
pub mod hidden;
pub mod oracle;
pub mod params;
pub mod public;
pub mod real;
pub mod sim;

pub use error::{ChaseError, Result};
pub use real::Real;

/// `f64` instantiations, the default working precision.
pub type Params64 = params::ContestParams<f64>;
pub type Indices64 = params::NormalizedIndices<f64>;
pub type PublicEq64 = public::PublicEquilibrium<f64>;
pub type HiddenEq64 = hidden::HiddenEquilibrium<f64>;
pub type Decomposition64 = effects::EffectDecomposition<f64>;

/// `f32` instantiations, for cheap exploratory sweeps.
pub type Params32 = params::ContestParams<f32>;
pub type Indices32 = params::NormalizedIndices<f32>;
pub type PublicEq32 = public::PublicEquilibrium<f32>;
pub type HiddenEq32 = hidden::HiddenEquilibrium<f32>;
