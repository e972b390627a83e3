//! Invariant sets of polynomial maps under algebraic guards.
//!
//! Given guards `g` and a self-map `F`, the points of `V(g)` whose entire
//! forward orbit stays inside `V(g)` form an algebraic variety. It is cut
//! out by the stabilized chain `g, g∘F, g∘F^2, ...`, where the chain stops
//! as soon as the next generation lies in the radical of the ideal
//! generated so far.

use crate::config::Config;
use crate::error::{Phase, ResourceError, ResourceKind, Result};
use crate::groebner::{IdealGb, RadicalTester};
use crate::map::PolyMap;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantSetStatus {
    /// The chain stabilized; the generators cut out the invariant set
    /// exactly.
    Stabilized,
    /// A resource ceiling was hit. The partial chain still describes a
    /// superset of the invariant set, which is valid partial information.
    ResourceExhausted { kind: ResourceKind },
}

#[derive(Debug, Clone)]
pub struct InvariantSetResult {
    /// `g, g∘F, .., g∘F^N` in generation order, not inter-reduced.
    pub generators: Vec<Polynomial>,
    /// Number of chain updates performed (N).
    pub iterations: usize,
    pub status: InvariantSetStatus,
}

impl InvariantSetResult {
    pub fn stabilized(&self) -> bool {
        self.status == InvariantSetStatus::Stabilized
    }
}

/// Computes defining equations of the invariant set of `(F, V(guards))`.
///
/// `guards` must be nonempty: an empty guard list means the guard is the
/// whole space, for which the invariant set is the whole space; callers
/// handle that case directly.
pub fn invariant_set(guards: &[Polynomial], map: &PolyMap, cfg: &Config) -> Result<InvariantSetResult> {
    assert!(!guards.is_empty(), "empty guard handled by callers as the full space");
    let ring = map.ring();
    for g in guards {
        ring.check_same(g.ring())?;
    }

    let mut chain: Vec<Polynomial> = guards.to_vec();
    let mut current: Vec<Polynomial> = Vec::with_capacity(guards.len());
    for g in guards {
        current.push(map.apply(g)?);
    }

    let exhausted = |chain: &[Polynomial], iterations: usize, e: ResourceError| InvariantSetResult {
        generators: chain.to_vec(),
        iterations,
        status: InvariantSetStatus::ResourceExhausted { kind: e.kind },
    };

    // Groebner basis of the chain ideal, grown incrementally.
    let mut gb = match IdealGb::new(ring, &chain, cfg) {
        Ok(gb) => gb,
        Err(e) => return Ok(exhausted(&chain, 0, e)),
    };

    let mut iterations = 0usize;
    loop {
        if let Err(e) = cfg.check_deadline(Phase::InvariantChain) {
            return Ok(exhausted(&chain, iterations, e));
        }
        let tester = RadicalTester::from_gb(&gb, cfg);
        match tester.contains_all(&current, cfg) {
            Ok(true) => {
                return Ok(InvariantSetResult {
                    generators: chain,
                    iterations,
                    status: InvariantSetStatus::Stabilized,
                })
            }
            Ok(false) => {}
            Err(e) => return Ok(exhausted(&chain, iterations, e)),
        }
        if iterations >= cfg.max_iterations {
            let e = ResourceError::new(
                ResourceKind::Iterations,
                Phase::InvariantChain,
                format!("no stabilization within {} updates", cfg.max_iterations),
            );
            return Ok(exhausted(&chain, iterations, e));
        }
        iterations += 1;
        gb = match gb.extended(&current, cfg) {
            Ok(gb) => gb,
            Err(e) => return Ok(exhausted(&chain, iterations, e)),
        };
        chain.extend(current.iter().cloned());
        let mut next = Vec::with_capacity(current.len());
        for g in &current {
            let composed = map.apply(g)?;
            if let Err(e) = cfg.check_bits(composed.max_coeff_bits(), Phase::InvariantChain) {
                return Ok(exhausted(&chain, iterations, e));
            }
            next.push(composed);
        }
        current = next;
    }
}

/// Certifies forward invariance of a stabilized result: `s∘F ∈ √⟨S⟩` for
/// every generator `s`, i.e. `F(V(S)) ⊆ V(S)`.
pub fn forward_invariance_certificate(result: &InvariantSetResult, map: &PolyMap, cfg: &Config) -> Result<bool> {
    let tester = RadicalTester::new(map.ring(), &result.generators, cfg)?;
    for s in &result.generators {
        let composed = map.apply(s)?;
        if !tester.contains(&composed, cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::coeff_from_i64 as q;
    use crate::ring::Ring;

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    fn map(ring: &Ring, comps: &[&str]) -> PolyMap {
        PolyMap::new(ring, comps.iter().map(|c| p(ring, c)).collect()).unwrap()
    }

    #[test]
    fn worked_example_stabilizes_after_one_update() {
        let r = Ring::standard(2);
        let f = map(&r, &["10*x1 - 8*x2", "6*x1 - 4*x2"]);
        let g = p(&r, "x1^2 - x1*x2 + 9*x1^3 - 24*x1^2*x2 + 16*x1*x2^2");
        let res = invariant_set(&[g.clone()], &f, &Config::default()).unwrap();
        assert!(res.stabilized());
        assert_eq!(res.iterations, 1);
        assert_eq!(res.generators.len(), 2);
        assert_eq!(res.generators[0], g);
        assert_eq!(
            res.generators[1],
            p(&r, "360*x1^3 - 1248*x1^2*x2 + 40*x1^2 + 1408*x1*x2^2 - 72*x1*x2 - 512*x2^3 + 32*x2^2")
        );
        assert!(forward_invariance_certificate(&res, &f, &Config::default()).unwrap());
    }

    #[test]
    fn forward_invariant_guard_needs_no_update() {
        let r = Ring::standard(2);
        let f = map(&r, &["x1", "x2 + 1"]);
        let res = invariant_set(&[p(&r, "x1")], &f, &Config::default()).unwrap();
        assert!(res.stabilized());
        assert_eq!(res.iterations, 0);
        assert_eq!(res.generators, vec![p(&r, "x1")]);
    }

    #[test]
    fn squaring_map_keeps_fixed_hyperplane() {
        // Guard x1 - 1 with x1 <- x1^2: composing gives x1^2 - 1, already
        // in the ideal. Points with x1 = 1 stay at x1 = 1.
        let r = Ring::standard(2);
        let f = map(&r, &["x1^2", "x2"]);
        let res = invariant_set(&[p(&r, "x1 - 1")], &f, &Config::default()).unwrap();
        assert!(res.stabilized());
        assert_eq!(res.iterations, 0);
        assert_eq!(res.generators, vec![p(&r, "x1 - 1")]);
        // Orbit oracle: sampled points on the variety stay on it.
        for start in [q(1)] {
            let mut pt = vec![start, q(7)];
            for _ in 0..10 {
                pt = f.apply_point(&pt).unwrap();
                assert_eq!(pt[0], q(1));
            }
        }
    }

    #[test]
    fn truncated_chain_fails_certificate() {
        // x1 with x1 <- x1 + 1 never stabilizes on {x1} alone; an
        // artificially truncated chain must fail the certificate.
        let r = Ring::standard(2);
        let f = map(&r, &["x1 + 1", "x2"]);
        let fake = InvariantSetResult {
            generators: vec![p(&r, "x1")],
            iterations: 0,
            status: InvariantSetStatus::Stabilized,
        };
        assert!(!forward_invariance_certificate(&fake, &f, &Config::default()).unwrap());
    }

    #[test]
    fn fixed_point_guard_certificate() {
        let r = Ring::standard(2);
        let f = map(&r, &["0", "0"]);
        let res = invariant_set(&[p(&r, "x1"), p(&r, "x2")], &f, &Config::default()).unwrap();
        assert!(res.stabilized());
        assert_eq!(res.iterations, 0);
        assert!(forward_invariance_certificate(&res, &f, &Config::default()).unwrap());
    }

    #[test]
    fn iteration_cap_yields_partial_chain() {
        let r = Ring::standard(2);
        let f = map(&r, &["x1 + 1", "x2"]);
        let cfg = Config { max_iterations: 0, ..Config::default() };
        let res = invariant_set(&[p(&r, "x1")], &f, &cfg).unwrap();
        assert!(matches!(
            res.status,
            InvariantSetStatus::ResourceExhausted { kind: ResourceKind::Iterations }
        ));
        assert_eq!(res.generators, vec![p(&r, "x1")]);
    }

    #[test]
    fn prefix_property_under_lower_cap() {
        // Chain: x1, x1+1 then the ideal is the unit ideal and the next
        // composition trivially lies in its radical.
        let r = Ring::standard(2);
        let f = map(&r, &["x1 + 1", "x2"]);
        let full = invariant_set(&[p(&r, "x1")], &f, &Config::default()).unwrap();
        assert!(full.stabilized());
        for cap in 0..full.iterations {
            let cfg = Config { max_iterations: cap, ..Config::default() };
            let partial = invariant_set(&[p(&r, "x1")], &f, &cfg).unwrap();
            assert_eq!(partial.generators[..], full.generators[..partial.generators.len()]);
        }
    }
}
