//! Resource governance: iteration caps, coefficient bit ceilings and
//! cooperative deadlines, plus the internal term order choice.
//!
//! Every long-running kernel polls a [`Config`] and returns a typed
//! [`ResourceError`](crate::error::ResourceError) instead of running away.

use std::time::{Duration, Instant};

use crate::error::{Phase, ResourceError, ResourceKind};

/// Term order used for internal Groebner computations.
///
/// GrevLex is the default; Lex is exposed for experiments. The canonical
/// term order used for storage, display and monomial indexing is fixed
/// independently of this choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BaseOrder {
    #[default]
    GrevLex,
    Lex,
}

/// Tunable resource limits threaded through the engine.
#[derive(Debug, Clone)]
pub struct Config {
    /// Cap on invariant-set chain updates. Stabilization can in principle
    /// grow like Ackermann's function; the bundled benchmarks stabilize in
    /// a handful of steps.
    pub max_iterations: usize,
    /// Budget of S-pairs a single Buchberger run may process.
    pub max_spairs: usize,
    /// Ceiling on coefficient sizes in bits (numerator plus denominator).
    /// `None` means unlimited.
    pub max_coeff_bits: Option<u64>,
    /// Cooperative deadline; kernels poll it and return partial state.
    pub deadline: Option<Instant>,
    /// Internal Groebner order.
    pub order: BaseOrder,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_iterations: 64,
            max_spairs: 1_000_000,
            max_coeff_bits: None,
            deadline: None,
            order: BaseOrder::GrevLex,
        }
    }
}

impl Config {
    /// Default configuration with a deadline `secs` seconds from now.
    pub fn with_timeout_secs(secs: u64) -> Self {
        Config { deadline: Some(Instant::now() + Duration::from_secs(secs)), ..Config::default() }
    }

    pub fn deadline_in(mut self, d: Duration) -> Self {
        self.deadline = Some(Instant::now() + d);
        self
    }

    /// Errors out once the deadline has passed.
    pub fn check_deadline(&self, phase: Phase) -> Result<(), ResourceError> {
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                return Err(ResourceError::new(ResourceKind::Deadline, phase, "deadline passed"));
            }
        }
        Ok(())
    }

    /// Errors out if `bits` exceeds the configured coefficient ceiling.
    pub fn check_bits(&self, bits: u64, phase: Phase) -> Result<(), ResourceError> {
        if let Some(cap) = self.max_coeff_bits {
            if bits > cap {
                return Err(ResourceError::new(
                    ResourceKind::CoeffBits,
                    phase,
                    format!("coefficient size {bits} bits exceeds ceiling {cap}"),
                ));
            }
        }
        Ok(())
    }
}
