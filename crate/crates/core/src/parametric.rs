//! Truncated invariants for arbitrary (parametric) initial values.
//!
//! A degree-`d` template `g(x, y) = Σ y_i x^(α_i)` with one fresh
//! coefficient variable per monomial is run through the invariant-set
//! computation under the extended map `(F, id_y)`. Every stabilized
//! generator is linear in `y`, so the chain is a polynomial matrix `A(x)`
//! acting on the coefficient vector: for every initial value `a`, the
//! kernel of `A(a)` is exactly the space of degree-`d` invariants of the
//! loop started at `a`.

use num_traits::Zero;

use crate::config::Config;
use crate::error::{Error, Phase, ResourceError, Result};
use crate::invariant_set::{invariant_set, InvariantSetStatus};
use crate::map::PolyMap;
use crate::monomial::{binomial, monomial_basis, Monomial};
use crate::poly::{Coeff, Polynomial};
use crate::ring::Ring;

/// The generic degree-`d` template over `x`-variables and `m` fresh
/// coefficient variables.
#[derive(Debug, Clone)]
pub struct GenericTemplate {
    /// `Σ y_i x^(α_i)` in the joint ring.
    pub template: Polynomial,
    pub degree: u32,
    /// Number of template coefficients, `C(n+d, d)`.
    pub m: usize,
    pub x_ring: Ring,
    pub ext_ring: Ring,
    /// Monomials in canonical indexing order; `y_i` multiplies `mons[i]`.
    pub mons: Vec<Monomial>,
}

/// Builds the generic template for `n` variables and degree `d`.
pub fn generic_template(x_ring: &Ring, d: u32) -> GenericTemplate {
    assert!(d >= 1);
    let n = x_ring.arity();
    let mons = monomial_basis(n, d);
    let m = mons.len();
    debug_assert_eq!(m, binomial(n + d as usize, d as usize));
    let y_names = x_ring.fresh_names("y", m);
    let ext_ring = x_ring.extend(y_names);
    let mut terms = Vec::with_capacity(m);
    for (i, mon) in mons.iter().enumerate() {
        let mut exps = mon.exps().to_vec();
        exps.extend(std::iter::repeat(0).take(m));
        exps[n + i] = 1;
        terms.push((Coeff::from_integer(1.into()), Monomial::from_exps(exps)));
    }
    let template = Polynomial::from_terms(&ext_ring, terms);
    GenericTemplate { template, degree: d, m, x_ring: x_ring.clone(), ext_ring, mons }
}

/// Polynomial matrix whose kernel at a rational point parametrizes the
/// truncated invariant ideal for that initial value.
#[derive(Debug, Clone)]
pub struct PolyMatrix {
    pub x_ring: Ring,
    pub degree: u32,
    pub m: usize,
    pub mons: Vec<Monomial>,
    /// One row per stabilized generator; entries over the `x`-ring.
    pub rows: Vec<Vec<Polynomial>>,
    /// Chain updates the invariant-set computation performed.
    pub iterations: usize,
}

/// Runs the invariant-set computation on the generic template (times the
/// optional disequality `p`) under `(F, id_y)` and extracts the
/// coefficient matrix.
pub fn invariant_matrix(body: &PolyMap, d: u32, diseq: Option<&Polynomial>, cfg: &Config) -> Result<PolyMatrix> {
    let x_ring = body.ring().clone();
    let tpl = generic_template(&x_ring, d);
    let map_ext = body.extend_identity(tpl.ext_ring.vars()[x_ring.arity()..].to_vec());
    // extend_identity rebuilds the same extension ring.
    debug_assert_eq!(map_ext.ring(), &tpl.ext_ring);
    let guard = match diseq {
        Some(p) => {
            x_ring.check_same(p.ring())?;
            p.lift_to(&tpl.ext_ring).mul(&tpl.template)?
        }
        None => tpl.template.clone(),
    };
    let res = invariant_set(&[guard], &map_ext, cfg)?;
    if let InvariantSetStatus::ResourceExhausted { kind } = res.status {
        return Err(Error::from(
            ResourceError::new(kind, Phase::InvariantChain, "template invariant set did not stabilize")
                .with_partial(res.generators),
        ));
    }
    let mut rows = Vec::with_capacity(res.generators.len());
    for h in &res.generators {
        // Linearity certificate: generators are y-linear with no pure-x
        // part; extraction fails loudly otherwise.
        let coeffs = h.linear_block_coefficients(&x_ring)?;
        debug_assert_eq!(coeffs.len(), tpl.m);
        rows.push(coeffs);
    }
    Ok(PolyMatrix {
        x_ring,
        degree: d,
        m: tpl.m,
        mons: tpl.mons,
        rows,
        iterations: res.iterations,
    })
}

impl PolyMatrix {
    /// Evaluates every entry at `a` and returns a basis of the kernel,
    /// mapped back to polynomials: a basis of the degree-`degree`
    /// truncated invariant ideal of the loop started at `a`.
    pub fn kernel_at(&self, a: &[Coeff]) -> Result<Vec<Polynomial>> {
        if a.len() != self.x_ring.arity() {
            return Err(Error::ArityMismatch { expected: self.x_ring.arity(), got: a.len() });
        }
        let mut rows = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut out = Vec::with_capacity(self.m);
            for entry in row {
                out.push(entry.eval(a)?);
            }
            rows.push(out);
        }
        let kern = crate::linalg::kernel_basis(&rows, self.m);
        Ok(kern
            .into_iter()
            .map(|v| {
                let terms: Vec<(Coeff, Monomial)> = v
                    .into_iter()
                    .zip(&self.mons)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, m)| (c, m.clone()))
                    .collect();
                Polynomial::from_terms(&self.x_ring, terms).canonical()
            })
            .collect())
    }

    /// Reconstructs the y-linear generator a row came from; inverse of
    /// the extraction in [`invariant_matrix`].
    pub fn row_as_generator(&self, row: usize, ext_ring: &Ring) -> Result<Polynomial> {
        let n = self.x_ring.arity();
        let mut acc = Polynomial::zero(ext_ring);
        for (j, entry) in self.rows[row].iter().enumerate() {
            let y_j = Polynomial::var(ext_ring, n + j);
            acc = acc.add(&entry.lift_to(ext_ring).mul(&y_j)?)?;
        }
        Ok(acc)
    }

    /// Row-reduced cosmetic view: repeatedly cancels leading terms of
    /// entries between rows using x-monomial multiples of other rows.
    /// Elementary operations only, so the row space over the polynomial
    /// ring is unchanged; kernels at every point agree with the raw
    /// matrix.
    pub fn trimmed(&self) -> PolyMatrix {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| r.iter().position(|e| !e.is_zero()).unwrap_or(self.m));
        rows.dedup();
        let lead_col = |row: &Vec<Polynomial>| row.iter().position(|e| !e.is_zero());
        let mut changed = true;
        let mut guard = 0;
        while changed && guard < 64 {
            changed = false;
            guard += 1;
            for i in 0..rows.len() {
                for k in 0..rows.len() {
                    if i == k {
                        continue;
                    }
                    let (Some(ci), Some(ck)) = (lead_col(&rows[i]), lead_col(&rows[k])) else { continue };
                    if ci != ck {
                        continue;
                    }
                    let (lc_i, lm_i) = match rows[i][ci].leading() {
                        Some(t) => (t.0.clone(), t.1.clone()),
                        None => continue,
                    };
                    let (lc_k, lm_k) = match rows[k][ck].leading() {
                        Some(t) => (t.0.clone(), t.1.clone()),
                        None => continue,
                    };
                    if let Some(shift) = lm_k.try_div(&lm_i) {
                        // rows[k] -= (lc_k/lc_i) * x^shift * rows[i]
                        let scale = &lc_k / &lc_i;
                        let mut new_row = Vec::with_capacity(self.m);
                        for (ek, ei) in rows[k].iter().zip(&rows[i]) {
                            let shifted = ei.mul_monomial(&shift).mul_scalar(&scale);
                            new_row.push(ek.sub(&shifted).expect("same ring"));
                        }
                        if new_row != rows[k] {
                            rows[k] = new_row;
                            changed = true;
                        }
                    }
                }
            }
            rows.retain(|r| r.iter().any(|e| !e.is_zero()));
            rows.sort_by_key(|r| r.iter().position(|e| !e.is_zero()).unwrap_or(self.m));
        }
        PolyMatrix { rows, ..self.clone() }
    }
}
