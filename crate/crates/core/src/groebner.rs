//! Ideal arithmetic: Buchberger's algorithm, normal forms, ideal
//! membership and radical membership via the auxiliary-variable
//! construction.
//!
//! Radical membership `f ∈ √⟨S⟩` is decided by checking whether the ideal
//! `⟨S, 1 - t·f⟩` in the ring extended by a fresh `t` is the unit ideal.
//! The fresh variable always gets a reserved `__t` name and is placed in
//! its own leading block of a block elimination order, so the unit check
//! is immediate.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::config::{BaseOrder, Config};
use crate::error::{Error, Phase, ResourceError, ResourceKind, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Coeff, Polynomial};
use crate::ring::Ring;

/// Comparator actually used inside the engine. Extends the public
/// [`MonomialOrder`] with block orders whose inner order follows the
/// configured base order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Active {
    split: Option<usize>,
    inner: MonomialOrder,
}

impl Active {
    pub(crate) fn plain(order: MonomialOrder) -> Active {
        match order {
            MonomialOrder::BlockElim { split } => {
                Active { split: Some(split), inner: MonomialOrder::GrevLex }
            }
            other => Active { split: None, inner: other },
        }
    }

    pub(crate) fn block(split: usize, base: BaseOrder) -> Active {
        Active { split: Some(split), inner: base_order(base) }
    }

    pub(crate) fn base(base: BaseOrder) -> Active {
        Active { split: None, inner: base_order(base) }
    }

    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.split {
            None => self.inner.cmp(a, b),
            Some(s) => {
                let (ha, ta) = split_mon(a, s);
                let (hb, tb) = split_mon(b, s);
                match self.inner.cmp(&ta, &tb) {
                    Ordering::Equal => self.inner.cmp(&ha, &hb),
                    ord => ord,
                }
            }
        }
    }
}

fn base_order(base: BaseOrder) -> MonomialOrder {
    match base {
        BaseOrder::GrevLex => MonomialOrder::GrevLex,
        BaseOrder::Lex => MonomialOrder::Lex,
    }
}

fn split_mon(m: &Monomial, split: usize) -> (Monomial, Monomial) {
    let exps = m.exps();
    (
        Monomial::from_exps(exps[..split].to_vec()),
        Monomial::from_exps(exps[split..].to_vec()),
    )
}

/// Working polynomial: terms sorted descending under the active order,
/// never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct OrdPoly {
    terms: Vec<(Coeff, Monomial)>,
}

impl OrdPoly {
    fn leading(&self) -> &(Coeff, Monomial) {
        &self.terms[0]
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    fn max_coeff_bits(&self) -> u64 {
        self.terms.iter().map(|(c, _)| crate::poly::coeff_bits(c)).max().unwrap_or(0)
    }

    /// Scales to primitive integer coefficients with positive leading
    /// coefficient. Scaling does not change the generated ideal.
    fn normalize(&mut self) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut den_lcm = BigInt::one();
        for (c, _) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        let nums: Vec<BigInt> =
            self.terms.iter().map(|(c, _)| c.numer() * (&den_lcm / c.denom())).collect();
        for n in &nums {
            content = content.gcd(n);
        }
        if content.is_zero() {
            return;
        }
        if nums[0].is_negative() {
            content = -content;
        }
        for ((c, _), n) in self.terms.iter_mut().zip(nums) {
            *c = Coeff::from_integer(n / &content);
        }
    }
}

fn to_ord(p: &Polynomial, active: &Active) -> Option<OrdPoly> {
    if p.is_zero() {
        return None;
    }
    let mut terms: Vec<(Coeff, Monomial)> = p.terms().to_vec();
    terms.sort_by(|a, b| active.cmp(&b.1, &a.1));
    Some(OrdPoly { terms })
}

fn from_ord(ring: &Ring, p: &OrdPoly) -> Polynomial {
    Polynomial::from_terms(ring, p.terms.clone())
}

/// `a - scale * x^shift * b`, both inputs descending, result descending.
fn sub_scaled(a: &[(Coeff, Monomial)], b: &[(Coeff, Monomial)], scale: &Coeff, shift: &Monomial, active: &Active) -> Vec<(Coeff, Monomial)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        let bm = b[j].1.mul(shift);
        match active.cmp(&a[i].1, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((-(scale * &b[j].0), bm));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].0 - scale * &b[j].0;
                if !c.is_zero() {
                    out.push((c, bm));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((-(scale * &b[j].0), b[j].1.mul(shift)));
        j += 1;
    }
    out
}

/// Full multivariate division remainder of `work` by `basis`.
fn reduce_terms(mut work: Vec<(Coeff, Monomial)>, basis: &[OrdPoly], active: &Active) -> Vec<(Coeff, Monomial)> {
    let mut rem: Vec<(Coeff, Monomial)> = Vec::new();
    'outer: while !work.is_empty() {
        let (lc, lm) = work[0].clone();
        for b in basis {
            let (blc, blm) = b.leading();
            if blm.divides(&lm) {
                let shift = lm.try_div(blm).unwrap();
                let scale = &lc / blc;
                work = sub_scaled(&work, &b.terms, &scale, &shift, active);
                continue 'outer;
            }
        }
        rem.push(work.remove(0));
    }
    rem
}

fn reduce(p: &OrdPoly, basis: &[OrdPoly], active: &Active) -> Option<OrdPoly> {
    let rem = reduce_terms(p.terms.clone(), basis, active);
    if rem.is_empty() {
        None
    } else {
        Some(OrdPoly { terms: rem })
    }
}

fn s_poly(f: &OrdPoly, g: &OrdPoly, active: &Active) -> Option<OrdPoly> {
    let (fc, fm) = f.leading();
    let (gc, gm) = g.leading();
    let lcm = fm.lcm(gm);
    let shift_f = lcm.try_div(fm).unwrap();
    let shift_g = lcm.try_div(gm).unwrap();
    // s = x^shift_f * f - (fc/gc) * x^shift_g * g
    let scaled_f: Vec<(Coeff, Monomial)> =
        f.terms.iter().map(|(c, m)| (c.clone(), m.mul(&shift_f))).collect();
    let scale = fc / gc;
    let terms = sub_scaled(&scaled_f, &g.terms, &scale, &shift_g, active);
    if terms.is_empty() {
        None
    } else {
        Some(OrdPoly { terms })
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Core Buchberger loop.
///
/// `known` marks a prefix of `basis` already known to be a Groebner basis
/// (all pairs inside the prefix are skipped); this makes the incremental
/// uses — growing an ideal by a few generators, or adjoining `1 - t·f` to
/// a lifted basis — much cheaper than starting over.
///
/// With `stop_on_unit`, returns as soon as a constant enters the basis
/// (sufficient for unit-ideal checks).
fn buchberger(
    mut basis: Vec<OrdPoly>,
    known: usize,
    active: &Active,
    cfg: &Config,
    stop_on_unit: bool,
    ring: &Ring,
) -> std::result::Result<Vec<OrdPoly>, ResourceError> {
    let phase = Phase::Groebner;
    let partial = |basis: &[OrdPoly]| -> Vec<Polynomial> {
        basis.iter().map(|p| from_ord(ring, p).canonical()).collect()
    };

    if basis.iter().any(|p| p.is_constant()) {
        return Ok(vec![OrdPoly { terms: vec![(Coeff::one(), Monomial::one(ring.arity()))] }]);
    }

    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push_pair = |pending: &mut Vec<Pair>, pending_set: &mut BTreeSet<(usize, usize)>, basis: &[OrdPoly], i: usize, j: usize| {
        let lcm = basis[i].leading().1.lcm(&basis[j].leading().1);
        pending.push(Pair { i, j, lcm });
        pending_set.insert((i, j));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            if j < known {
                continue;
            }
            push_pair(&mut pending, &mut pending_set, &basis, i, j);
        }
    }

    let mut processed: usize = 0;
    while !pending.is_empty() {
        cfg.check_deadline(phase).map_err(|e| e.with_partial(partial(&basis)))?;
        processed += 1;
        if processed > cfg.max_spairs {
            return Err(ResourceError::new(
                ResourceKind::SPairs,
                phase,
                format!("more than {} S-pairs", cfg.max_spairs),
            )
            .with_partial(partial(&basis)));
        }

        // Normal selection strategy: smallest lcm in the active order,
        // ties by pair index.
        let mut best = 0;
        for k in 1..pending.len() {
            let ord = active
                .cmp(&pending[k].lcm, &pending[best].lcm)
                .then_with(|| (pending[k].i, pending[k].j).cmp(&(pending[best].i, pending[best].j)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        let pair = pending.swap_remove(best);
        pending_set.remove(&(pair.i, pair.j));

        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        // Buchberger's first criterion: coprime leading monomials.
        if fi.leading().1.coprime(&fj.leading().1) {
            continue;
        }
        // Chain criterion: some k with LT(k) | lcm(i,j) whose pairs with
        // both i and j are no longer pending.
        let chain_applies = (0..basis.len()).any(|k| {
            if k == pair.i || k == pair.j {
                return false;
            }
            if !basis[k].leading().1.divides(&pair.lcm) {
                return false;
            }
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            !pending_set.contains(&key(pair.i, k)) && !pending_set.contains(&key(pair.j, k))
        });
        if chain_applies {
            continue;
        }

        let Some(s) = s_poly(fi, fj, active) else { continue };
        let Some(mut r) = reduce(&s, &basis, active) else { continue };
        r.normalize();
        cfg.check_bits(r.max_coeff_bits(), phase)
            .map_err(|e| e.with_partial(partial(&basis)))?;
        if stop_on_unit && r.is_constant() {
            return Ok(vec![OrdPoly { terms: vec![(Coeff::one(), Monomial::one(ring.arity()))] }]);
        }
        let new_idx = basis.len();
        basis.push(r);
        for i in 0..new_idx {
            push_pair(&mut pending, &mut pending_set, &basis, i, new_idx);
        }
    }
    Ok(basis)
}

/// Minimalizes and tail-reduces into the unique reduced basis
/// (up to the fixed primitive scaling), sorted by leading monomial.
fn inter_reduce(mut basis: Vec<OrdPoly>, active: &Active) -> Vec<OrdPoly> {
    basis.sort_by(|a, b| active.cmp(&a.leading().1, &b.leading().1));
    // Minimal basis: drop any element whose leading monomial is divisible
    // by another kept element's leading monomial.
    let mut keep: Vec<OrdPoly> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let lm = &p.leading().1;
        let dominated = basis.iter().enumerate().any(|(j, q)| {
            if i == j {
                return false;
            }
            let qm = &q.leading().1;
            qm.divides(lm) && (qm != lm || j < i)
        });
        if !dominated {
            keep.push(p.clone());
        }
    }
    // Tail-reduce each element against the others. Leading terms are
    // pairwise non-divisible now, so one pass suffices.
    let mut reduced: Vec<OrdPoly> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<OrdPoly> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
        let mut r = match reduce(&keep[i], &others, active) {
            Some(r) => r,
            None => continue,
        };
        r.normalize();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| active.cmp(&a.leading().1, &b.leading().1));
    reduced
}

/// A reduced Groebner basis together with the order it was computed
/// under and the generators it came from.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    source_ideal: Vec<Polynomial>,
    active: Active,
    ord: Vec<OrdPoly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// The reduced basis, canonicalized and sorted by leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn source_ideal(&self) -> &[Polynomial] {
        &self.source_ideal
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Unit ideal check: the reduced basis is exactly `{1}`.
    pub fn is_trivial(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant() && !self.generators[0].is_zero()
    }

    /// Remainder of multivariate division; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(f.ring())?;
        let Some(of) = to_ord(f, &self.active) else {
            return Ok(Polynomial::zero(&self.ring));
        };
        match reduce(&of, &self.ord, &self.active) {
            None => Ok(Polynomial::zero(&self.ring)),
            Some(r) => Ok(from_ord(&self.ring, &r)),
        }
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Buchberger certificate: every S-polynomial of basis pairs reduces
    /// to zero. True for any correct output; exposed so test suites can
    /// assert it exhaustively.
    pub fn s_poly_certificate(&self) -> bool {
        for j in 0..self.ord.len() {
            for i in 0..j {
                if let Some(s) = s_poly(&self.ord[i], &self.ord[j], &self.active) {
                    if reduce(&s, &self.ord, &self.active).is_some() {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn from_ord_basis(ring: &Ring, order: MonomialOrder, active: Active, ord: Vec<OrdPoly>, source: Vec<Polynomial>) -> GroebnerBasis {
        let generators = ord.iter().map(|p| from_ord(ring, p).canonical()).collect();
        GroebnerBasis { ring: ring.clone(), order, generators, source_ideal: source, active, ord }
    }
}

/// Reduced Groebner basis of `⟨gens⟩` under `order`. Deterministic for
/// fixed input and order; the zero ideal gives an empty basis.
pub fn groebner_basis(gens: &[Polynomial], order: MonomialOrder, cfg: &Config) -> Result<GroebnerBasis> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => {
            return Err(Error::Unsupported(
                "cannot infer the ring of an empty generator list; use groebner_basis_in".into(),
            ))
        }
    };
    groebner_basis_in(&ring, gens, order, cfg)
}

/// Like [`groebner_basis`] with an explicit ring, allowing empty `gens`.
pub fn groebner_basis_in(ring: &Ring, gens: &[Polynomial], order: MonomialOrder, cfg: &Config) -> Result<GroebnerBasis> {
    for g in gens {
        ring.check_same(g.ring())?;
    }
    let active = Active::plain(order);
    let mut initial: Vec<OrdPoly> = Vec::new();
    for g in gens {
        if let Some(mut o) = to_ord(g, &active) {
            o.normalize();
            initial.push(o);
        }
    }
    let full = buchberger(initial, 0, &active, cfg, false, ring)?;
    let reduced = inter_reduce(full, &active);
    Ok(GroebnerBasis::from_ord_basis(ring, order, active, reduced, gens.to_vec()))
}

/// Internal (non-reduced-presentation) Groebner basis of a growing ideal,
/// kept in the base ring. Supports cheap extension by new generators and
/// backs the radical tester.
#[derive(Debug, Clone)]
pub(crate) struct IdealGb {
    ring: Ring,
    active: Active,
    elems: Vec<OrdPoly>,
}

impl IdealGb {
    pub(crate) fn new(ring: &Ring, gens: &[Polynomial], cfg: &Config) -> std::result::Result<IdealGb, ResourceError> {
        let active = Active::base(cfg.order);
        let mut initial = Vec::new();
        for g in gens {
            if let Some(mut o) = to_ord(g, &active) {
                o.normalize();
                initial.push(o);
            }
        }
        let elems = buchberger(initial, 0, &active, cfg, false, ring)?;
        Ok(IdealGb { ring: ring.clone(), active, elems: inter_reduce(elems, &active) })
    }

    /// Groebner basis of the ideal enlarged by `extra`.
    pub(crate) fn extended(&self, extra: &[Polynomial], cfg: &Config) -> std::result::Result<IdealGb, ResourceError> {
        let mut basis = self.elems.clone();
        let known = basis.len();
        for g in extra {
            if let Some(mut o) = to_ord(g, &self.active) {
                o.normalize();
                basis.push(o);
            }
        }
        let elems = buchberger(basis, known, &self.active, cfg, false, &self.ring)?;
        Ok(IdealGb { ring: self.ring.clone(), active: self.active, elems: inter_reduce(elems, &self.active) })
    }
}

/// Decides radical membership `f ∈ √⟨S⟩` for many `f` against a fixed
/// generator set: the Groebner basis of `⟨S⟩` is computed once in the
/// base ring and reused for every query.
pub(crate) struct RadicalTester {
    ext: Ring,
    t_index: usize,
    active_ext: Active,
    lifted: Vec<OrdPoly>,
    proper: bool,
}

impl RadicalTester {
    pub(crate) fn new(ring: &Ring, gens: &[Polynomial], cfg: &Config) -> std::result::Result<RadicalTester, ResourceError> {
        let gb = IdealGb::new(ring, gens, cfg)?;
        Ok(RadicalTester::from_gb(&gb, cfg))
    }

    pub(crate) fn from_gb(gb: &IdealGb, cfg: &Config) -> RadicalTester {
        let ring = &gb.ring;
        let t_name = ring.fresh_name("t");
        let ext = ring.extend(vec![t_name]);
        let t_index = ext.arity() - 1;
        // The base-ring basis stays a Groebner basis in the extension:
        // the block order restricted to t-free monomials is the base
        // order, and S-pairs of t-free elements never involve t.
        let lifted: Vec<OrdPoly> = gb
            .elems
            .iter()
            .map(|p| OrdPoly { terms: p.terms.iter().map(|(c, m)| (c.clone(), m.extend(1))).collect() })
            .collect();
        let proper = !lifted.iter().any(|p| p.is_constant());
        RadicalTester {
            ext,
            t_index,
            active_ext: Active::block(t_index, cfg.order),
            lifted,
            proper,
        }
    }

    /// `f ∈ √⟨S⟩`, decided by whether `⟨S, 1 - t·f⟩` is the unit ideal.
    pub(crate) fn contains(&self, f: &Polynomial, cfg: &Config) -> std::result::Result<bool, ResourceError> {
        if f.is_zero() {
            return Ok(true);
        }
        if !self.proper {
            // The unit ideal contains everything.
            return Ok(true);
        }
        let lifted_f = f.lift_to(&self.ext);
        let t = Polynomial::var(&self.ext, self.t_index);
        let witness = Polynomial::one(&self.ext)
            .sub(&t.mul(&lifted_f).expect("same ring"))
            .expect("same ring");
        let mut basis = self.lifted.clone();
        let known = basis.len();
        let mut ow = to_ord(&witness, &self.active_ext).expect("nonzero witness");
        ow.normalize();
        basis.push(ow);
        let out = buchberger(basis, known, &self.active_ext, cfg, true, &self.ext)?;
        Ok(out.iter().any(|p| p.is_constant()))
    }

    pub(crate) fn contains_all(&self, fs: &[Polynomial], cfg: &Config) -> std::result::Result<bool, ResourceError> {
        for f in fs {
            if !self.contains(f, cfg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One-shot radical membership test `f ∈ √⟨gens⟩`.
pub fn radical_membership(f: &Polynomial, gens: &[Polynomial], cfg: &Config) -> Result<bool> {
    for g in gens {
        f.ring().check_same(g.ring())?;
    }
    let tester = RadicalTester::new(f.ring(), gens, cfg)?;
    Ok(tester.contains(f, cfg)?)
}

/// True iff every `f` lies in `√⟨gens⟩`; vacuously true for an empty list.
pub fn radical_contains_all(fs: &[Polynomial], gens: &[Polynomial], cfg: &Config) -> Result<bool> {
    if fs.is_empty() {
        return Ok(true);
    }
    for f in fs {
        fs[0].ring().check_same(f.ring())?;
    }
    for g in gens {
        fs[0].ring().check_same(g.ring())?;
    }
    let tester = RadicalTester::new(fs[0].ring(), gens, cfg)?;
    Ok(tester.contains_all(fs, cfg)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn r2() -> Ring {
        Ring::standard(2)
    }

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn already_a_basis_under_lex() {
        let r = r2();
        let gens = vec![p(&r, "x1^2"), p(&r, "x1*x2")];
        let gb = groebner_basis(&gens, MonomialOrder::Lex, &Config::default()).unwrap();
        let got: Vec<String> = gb.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(got, vec!["x1*x2".to_string(), "x1^2".to_string()]);
        assert!(gb.s_poly_certificate());
    }

    #[test]
    fn unit_ideal_from_rabinowitsch_pair() {
        // x1 ∈ √⟨x1^2⟩ forces ⟨1 - t·x1, x1^2⟩ = ⟨1⟩.
        let r = Ring::new(vec!["x1", "t"]);
        let gens = vec![p(&r, "1 - t*x1"), p(&r, "x1^2")];
        let gb = groebner_basis(&gens, MonomialOrder::GrevLex, &Config::default()).unwrap();
        assert!(gb.is_trivial());
    }

    #[test]
    fn empty_generators_give_empty_basis() {
        let r = r2();
        let gb = groebner_basis_in(&r, &[], MonomialOrder::GrevLex, &Config::default()).unwrap();
        assert!(gb.is_empty());
        assert_eq!(gb.normal_form(&p(&r, "x1 + 1")).unwrap(), p(&r, "x1 + 1"));
    }

    #[test]
    fn normal_form_examples() {
        let r = r2();
        let gb = groebner_basis(&[p(&r, "x1")], MonomialOrder::Lex, &Config::default()).unwrap();
        assert!(gb.normal_form(&p(&r, "x1^2")).unwrap().is_zero());

        let gb2 = groebner_basis(&[p(&r, "x1 - x2")], MonomialOrder::Lex, &Config::default()).unwrap();
        assert_eq!(gb2.normal_form(&p(&r, "x1 + x2")).unwrap(), p(&r, "2*x2"));

        // 1 stays 1 modulo any proper ideal.
        assert_eq!(gb2.normal_form(&p(&r, "1")).unwrap(), p(&r, "1"));
    }

    #[test]
    fn membership_spans_both_directions() {
        let r = r2();
        let gens = vec![p(&r, "x1^2 - x2"), p(&r, "x1*x2 - x1")];
        let gb = groebner_basis(&gens, MonomialOrder::GrevLex, &Config::default()).unwrap();
        // Each source generator reduces to zero against the basis.
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
        // Each basis element lies in the source ideal.
        let gb_lex = groebner_basis(&gens, MonomialOrder::Lex, &Config::default()).unwrap();
        for b in gb.generators() {
            assert!(gb_lex.contains(b).unwrap());
        }
        assert!(gb.s_poly_certificate());
        assert!(gb_lex.s_poly_certificate());
    }

    #[test]
    fn radical_membership_basics() {
        let r = r2();
        assert!(radical_membership(&p(&r, "x1"), &[p(&r, "x1^2")], &Config::default()).unwrap());
        assert!(!radical_membership(&p(&r, "x1 + 1"), &[p(&r, "x1")], &Config::default()).unwrap());
        // Generators lie in their own radical; empty list is vacuous.
        let gens = vec![p(&r, "x1^2 - x2"), p(&r, "x2^3")];
        assert!(radical_contains_all(&gens, &gens, &Config::default()).unwrap());
        assert!(radical_contains_all(&[], &gens, &Config::default()).unwrap());
    }

    #[test]
    fn radical_membership_worked_example() {
        // The degree-3 guard composed once is not in the radical of the
        // original guard; after one update it is.
        let r = r2();
        let g = p(&r, "x1^2 - x1*x2 + 9*x1^3 - 24*x1^2*x2 + 16*x1*x2^2");
        let g1 = p(&r, "360*x1^3 - 1248*x1^2*x2 + 40*x1^2 + 1408*x1*x2^2 - 72*x1*x2 - 512*x2^3 + 32*x2^2");
        let g2 = p(&r, "7488*x1^3 - 26880*x1^2*x2 + 832*x1^2 + 31744*x1*x2^2 - 1600*x1*x2 - 12288*x2^3 + 768*x2^2");
        let cfg = Config::default();
        assert!(!radical_membership(&g1, &[g.clone()], &cfg).unwrap());
        assert!(radical_membership(&g2, &[g.clone(), g1.clone()], &cfg).unwrap());
    }

    #[test]
    fn deterministic_output() {
        let r = r2();
        let gens = vec![p(&r, "x1^3 - 2*x1*x2"), p(&r, "x1^2*x2 - 2*x2^2 + x1")];
        let a = groebner_basis(&gens, MonomialOrder::GrevLex, &Config::default()).unwrap();
        let b = groebner_basis(&gens, MonomialOrder::GrevLex, &Config::default()).unwrap();
        assert_eq!(a.generators(), b.generators());
        assert!(a.s_poly_certificate());
    }

    #[test]
    fn spair_budget_is_enforced() {
        let r = r2();
        let gens = vec![p(&r, "x1^3 - 2*x1*x2"), p(&r, "x1^2*x2 - 2*x2^2 + x1")];
        let cfg = Config { max_spairs: 1, ..Config::default() };
        let err = groebner_basis(&gens, MonomialOrder::GrevLex, &cfg).unwrap_err();
        let res = err.resource().expect("resource error");
        assert_eq!(res.kind, ResourceKind::SPairs);
        assert!(!res.partial.is_empty());
    }
}
