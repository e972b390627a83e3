//! Polynomial self-maps: the loop body `F = (f1, .., fn)`.

use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial};
use crate::ring::Ring;

/// An n-tuple of polynomials in the same n-variable ring, understood as a
/// map from affine n-space to itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    ring: Ring,
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(ring: &Ring, components: Vec<Polynomial>) -> Result<PolyMap> {
        if components.len() != ring.arity() {
            return Err(Error::ArityMismatch { expected: ring.arity(), got: components.len() });
        }
        for c in &components {
            ring.check_same(c.ring())?;
        }
        Ok(PolyMap { ring: ring.clone(), components })
    }

    pub fn identity(ring: &Ring) -> PolyMap {
        let components = (0..ring.arity()).map(|i| Polynomial::var(ring, i)).collect();
        PolyMap { ring: ring.clone(), components }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// `g(f1, .., fn)`. Extended rings are allowed: `g` may live in an
    /// extension of this map's ring provided the trailing variables are
    /// the extension's own (they map to themselves).
    pub fn apply(&self, g: &Polynomial) -> Result<Polynomial> {
        if g.ring() == &self.ring {
            return g.compose(&self.components);
        }
        Err(Error::RingMismatch(g.ring().describe(), self.ring.describe()))
    }

    /// Image of a rational point.
    pub fn apply_point(&self, point: &[Coeff]) -> Result<Vec<Coeff>> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    /// Extension `(F, id)` to `ring + extra`: original components lifted,
    /// new variables map to themselves. This builds the extended maps used
    /// for template coefficients, fallback combiners and the lifting `t`.
    pub fn extend_identity(&self, extra: Vec<String>) -> PolyMap {
        let ext = self.ring.extend(extra);
        let mut components: Vec<Polynomial> =
            self.components.iter().map(|c| c.lift_to(&ext)).collect();
        for i in self.ring.arity()..ext.arity() {
            components.push(Polynomial::var(&ext, i));
        }
        PolyMap { ring: ext, components }
    }

    pub fn max_component_degree(&self) -> u32 {
        self.components.iter().map(|c| c.total_deg()).max().unwrap_or(0)
    }
}
