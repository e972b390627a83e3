//! Exact symbolic engine for polynomial loop invariants.
//!
//! A polynomial loop assigns polynomials to its variables simultaneously
//! while a conjunction of polynomial equations holds. This crate computes,
//! over exact rational arithmetic:
//!
//! - invariant sets of polynomial maps under algebraic guards
//!   ([`invariant_set`]), with forward-invariance certificates;
//! - non-termination decisions and the polynomial-invariant check
//!   ([`nonterminates`], [`check_pi`]);
//! - complete bases of truncated invariant ideals for a fixed initial
//!   value ([`truncated_invariant_ideal`]);
//! - parametric invariant matrices for arbitrary initial values
//!   ([`invariant_matrix`]) and their kernels at rational points;
//! - invariant lifting from one initial value to all of them
//!   ([`lift_invariant`]).
//!
//! Everything is built on a sparse multivariate polynomial core with
//! arbitrary-precision rational coefficients, Buchberger Groebner bases
//! with radical-membership tests, and fraction-free exact linear algebra.
//!
//! ```
//! use loopinv::{parse_loop, truncated_invariant_ideal, Config};
//!
//! let spec = parse_loop(
//!     "vars: x1, x2, x3\n\
//!      init: 2, 1, 1\n\
//!      guard: true\n\
//!      body: x1 <- x2; x2 <- x3; x3 <- 2*x2*x3 - x1",
//! )?;
//! let basis = truncated_invariant_ideal(&spec, 3, None, &Config::default())?;
//! assert_eq!(basis.dimension, 1);
//! assert_eq!(
//!     basis.polynomials[0].to_string(),
//!     "-2 + x1^2 + x2^2 + x3^2 - 2*x1*x2*x3",
//! );
//! # Ok::<(), loopinv::Error>(())
//! ```

pub mod config;
pub mod error;
pub mod groebner;
pub mod invariant_set;
pub mod lifting;
pub mod linalg;
pub mod loop_model;
pub mod map;
pub mod monomial;
pub mod parametric;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod truncated;

pub use config::{BaseOrder, Config};
pub use error::{Error, ParseError, Phase, ResourceError, ResourceKind, Result};
pub use groebner::{groebner_basis, groebner_basis_in, radical_contains_all, radical_membership, GroebnerBasis};
pub use invariant_set::{forward_invariance_certificate, invariant_set, InvariantSetResult, InvariantSetStatus};
pub use lifting::{lift_invariant, LiftOutcome};
pub use loop_model::{check_pi, nonterminates, orbit, orbit_capped, parse_loop, print_loop, LoopSpec, NonTermination, Orbit};
pub use map::PolyMap;
pub use monomial::{binomial, monomial_basis, Monomial, MonomialOrder};
pub use parametric::{generic_template, invariant_matrix, GenericTemplate, PolyMatrix};
pub use parse::parse_polynomial;
pub use poly::{Coeff, Polynomial};
pub use ring::Ring;
pub use truncated::{
    candidate_basis, candidate_system, kernel_basis, span_dimension, span_equal,
    truncated_invariant_ideal, InvariantBasis, LinearSystem, Provenance, TruncatedStats,
};

// The guide chapters double as doctests so the book and the library can
// never drift apart.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }
    chapter!(Polynomials, "../../../book/src/polynomials.md");
    chapter!(GroebnerBases, "../../../book/src/groebner.md");
    chapter!(InvariantSets, "../../../book/src/invariant-sets.md");
    chapter!(LoopDsl, "../../../book/src/loops.md");
    chapter!(TruncatedIdeals, "../../../book/src/truncated-ideals.md");
    chapter!(ParametricInvariants, "../../../book/src/parametric.md");
    chapter!(Lifting, "../../../book/src/lifting.md");
}
