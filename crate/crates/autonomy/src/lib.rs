//! Exact symbolic toolkit for n-D behavioral systems over Laurent polynomial rings.
//!
//! A linear shift-invariant system on the lattice `Z^n` is presented by a matrix
//! of Laurent polynomials in the shift operators `s1, ..., sn`; its trajectories
//! are the functions annihilated by every row. This crate computes, exactly over
//! the rationals:
//!
//! - the characteristic ideal of such a system (the ideal of maximal minors of
//!   the presenting matrix) and its variety dimension inside the n-torus,
//! - the degree of autonomy, both via the codimension of the characteristic
//!   variety and via the definitional sublattice-restriction oracle,
//! - the strength and efficiency of controllers under interconnection,
//! - empirical frequencies of the generic values of all of the above, by
//!   seeded random sampling of systems with bounded degree and coefficients.
//!
//! The engine underneath is a reduced Gröbner basis implementation
//! (Buchberger's algorithm) over `Q[s1, ..., sn]`, with ideal quotients,
//! saturation, elimination and Krull dimension built on top of it. Laurent
//! ideals are represented by their saturated polynomial contractions.

pub mod behavior;
pub mod control;
pub mod genericity;
pub mod groebner;
pub mod ideal;
pub mod io;
pub mod order;
pub mod poly;

pub use behavior::{analyze, AutonomyDegree, AutonomyReport, SystemMatrix};
pub use control::{
    degree_by_restriction_oracle, interconnect, is_max_efficient, restrict, strength,
    StrengthReport, SublatticeEmbedding,
};
pub use genericity::{ExperimentStats, SampleSpec};
pub use groebner::{buchberger, GroebnerBasis, StepLimitExceeded};
pub use ideal::{is_regular_sequence, LaurentIdeal};
pub use order::MonomialOrder;
pub use poly::{count_monomials, LaurentPoly, Monomial, Rational};
