//! Exact sparse multivariate polynomials over the rationals.
//!
//! Terms are kept sorted ascending under the canonical indexing order
//! ([`MonomialOrder::DegLex`]) with no zero coefficients and no duplicate
//! monomials, so structural equality is semantic equality and printing is
//! canonical (`-2 + x1^2 + x2^2 + x3^2 - 2*x1*x2*x3`).

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::Ring;

/// Coefficient type: exact rationals over arbitrary-precision integers.
/// Always reduced with a positive denominator.
pub type Coeff = BigRational;

pub fn coeff_from_i64(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_from_ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Bit size of a rational: numerator plus denominator bits.
pub fn coeff_bits(c: &Coeff) -> u64 {
    c.numer().bits() + c.denom().bits()
}

/// Storage order for terms; also the order that defines the leading term
/// for canonical scaling.
pub const CANONICAL_ORDER: MonomialOrder = MonomialOrder::DegLex;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    /// Sorted strictly ascending under [`CANONICAL_ORDER`]; no zeros.
    terms: Vec<(Coeff, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(c, Monomial::one(ring.arity()))] }
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        assert!(i < ring.arity());
        Polynomial { ring: ring.clone(), terms: vec![(Coeff::one(), Monomial::var(ring.arity(), i))] }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates,
    /// drops zeros. The canonicalization is idempotent.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Coeff, Monomial)>) -> Polynomial {
        for (_, m) in &terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity mismatch");
        }
        terms.sort_by(|a, b| CANONICAL_ORDER.cmp(&a.1, &b.1));
        let mut merged: Vec<(Coeff, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match merged.last_mut() {
                Some((lc, lm)) if *lm == m => *lc += c,
                _ => merged.push((c, m)),
            }
            if let Some((lc, _)) = merged.last() {
                if lc.is_zero() {
                    merged.pop();
                }
            }
        }
        Polynomial { ring: ring.clone(), terms: merged }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn total_deg(&self) -> u32 {
        self.terms.iter().map(|(_, m)| m.deg()).max().unwrap_or(0)
    }

    /// Largest term under the canonical order (the last stored term).
    pub fn leading(&self) -> Option<&(Coeff, Monomial)> {
        self.terms.last()
    }

    /// Largest coefficient bit size over all terms.
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms.iter().map(|(c, _)| coeff_bits(c)).max().unwrap_or(0)
    }

    pub fn map_terms(&self, f: impl Fn(&Coeff) -> Coeff) -> Polynomial {
        Polynomial::from_terms(
            &self.ring,
            self.terms.iter().map(|(c, m)| (f(c), m.clone())).collect(),
        )
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (-c.clone(), m.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        // Linear merge of two sorted term lists.
        let mut out: Vec<(Coeff, Monomial)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match CANONICAL_ORDER.cmp(&self.terms[i].1, &other.terms[j].1) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].0 + &other.terms[j].0;
                    if !c.is_zero() {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let prod = ca * cb;
                match acc.get_mut(&m) {
                    Some(c) => *c += prod,
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc.into_iter().map(|(m, c)| (c, m)).collect()))
    }

    pub fn mul_scalar(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(tc, m)| (tc * c, m.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, tm)| (c.clone(), tm.mul(m))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.ring.arity() {
            return Err(Error::ArityMismatch { expected: self.ring.arity(), got: point.len() });
        }
        // Per-variable power cache: exponents repeat across terms.
        let mut pows: Vec<Vec<Coeff>> = point.iter().map(|p| vec![Coeff::one(), p.clone()]).collect();
        let mut acc = Coeff::zero();
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut pows[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &point[i];
                    cache.push(next);
                }
                t *= &cache[e as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitution `self(images[0], .., images[n-1])`. All images must
    /// live in one common ring, which becomes the result's ring.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::ArityMismatch { expected: self.ring.arity(), got: images.len() });
        }
        let target = images
            .first()
            .map(|p| p.ring().clone())
            .unwrap_or_else(|| self.ring.clone());
        for img in images {
            target.check_same(img.ring())?;
        }
        // Iterative power cache per image.
        let mut pows: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(&target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e as usize {
                    let next = pows[i][pows[i].len() - 1].mul(&images[i])?;
                    pows[i].push(next);
                }
                t = t.mul(&pows[i][e as usize])?;
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// For a polynomial in an extended ring whose every term has total
    /// degree exactly one in the tail block (variables from
    /// `prefix.arity()` on), extracts the coefficient of each tail
    /// variable as a polynomial over `prefix`. Fails if some term has
    /// tail degree different from one.
    pub fn linear_block_coefficients(&self, prefix: &Ring) -> Result<Vec<Polynomial>> {
        let n = prefix.arity();
        let total = self.ring.arity();
        assert!(n < total, "prefix must be a proper subring");
        assert_eq!(&self.ring.vars()[..n], prefix.vars(), "not a prefix ring");
        let mut coeffs: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); total - n];
        for (c, m) in &self.terms {
            let tail = &m.exps()[n..];
            let tail_deg: u32 = tail.iter().sum();
            if tail_deg != 1 {
                return Err(Error::Unsupported(format!(
                    "expected a polynomial linear in the tail block, found term of tail degree {tail_deg}"
                )));
            }
            let j = tail.iter().position(|&e| e == 1).unwrap();
            let head = Monomial::from_exps(m.exps()[..n].to_vec());
            coeffs[j].push((c.clone(), head));
        }
        Ok(coeffs
            .into_iter()
            .map(|terms| Polynomial::from_terms(prefix, terms))
            .collect())
    }

    /// Lifts into an extension of this ring obtained by appending
    /// variables (exponent vectors are padded with zeros).
    pub fn lift_to(&self, ext: &Ring) -> Polynomial {
        assert!(ext.arity() >= self.ring.arity());
        assert_eq!(&ext.vars()[..self.ring.arity()], self.ring.vars(), "not an extension ring");
        let extra = ext.arity() - self.ring.arity();
        Polynomial {
            ring: ext.clone(),
            terms: self.terms.iter().map(|(c, m)| (c.clone(), m.extend(extra))).collect(),
        }
    }

    /// Canonical scalar representative: integer coefficients with content
    /// one and a positive leading coefficient (leading under the canonical
    /// order). Invariants are meaningful up to nonzero scalars; this form
    /// makes golden comparisons exact.
    pub fn canonical(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (c, _) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut nums: Vec<BigInt> = self
            .terms
            .iter()
            .map(|(c, _)| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for n in &nums {
            content = content.gcd(n);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        if nums.last().map(|n| n.sign() == Sign::Minus).unwrap_or(false) {
            content = -content;
        }
        for n in &mut nums {
            *n = &*n / &content;
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: nums
                .into_iter()
                .zip(self.terms.iter())
                .map(|(n, (_, m))| (BigRational::from_integer(n), m.clone()))
                .collect(),
        }
    }

    fn fmt_term(&self, f: &mut std::fmt::Formatter<'_>, c: &Coeff, m: &Monomial) -> std::fmt::Result {
        if m.is_one() {
            return write!(f, "{c}");
        }
        let mut first = true;
        if (-c.clone()).is_one() {
            write!(f, "-")?;
        } else if !c.is_one() {
            write!(f, "{c}")?;
            first = false;
        }
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.display_name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for Polynomial {
    /// Canonical text form: terms ascending in the canonical order,
    /// e.g. `-2 + x1^2 + x2^2 + x3^2 - 2*x1*x2*x3`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            if k == 0 {
                self.fmt_term(f, c, m)?;
            } else if c.is_negative() {
                write!(f, " - ")?;
                self.fmt_term(f, &-c.clone(), m)?;
            } else {
                write!(f, " + ")?;
                self.fmt_term(f, c, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring2() -> Ring {
        Ring::standard(2)
    }

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn add_inverse_cancels() {
        let r = ring2();
        let f = p(&r, "x1");
        assert!(f.add(&f.neg()).unwrap().is_zero());
    }

    #[test]
    fn add_merges_like_terms() {
        let r = ring2();
        let got = p(&r, "x1 + x2").add(&p(&r, "x2")).unwrap();
        assert_eq!(got, p(&r, "x1 + 2*x2"));
    }

    #[test]
    fn add_hand_oracle() {
        let r = ring2();
        let got = p(&r, "x1^2 - x1*x2").add(&p(&r, "x1*x2")).unwrap();
        assert_eq!(got, p(&r, "x1^2"));
    }

    #[test]
    fn mul_difference_of_squares() {
        let r = ring2();
        let got = p(&r, "x1 - x2").mul(&p(&r, "x1 + x2")).unwrap();
        assert_eq!(got, p(&r, "x1^2 - x2^2"));
    }

    #[test]
    fn mul_by_zero() {
        let r = ring2();
        let f = p(&r, "3*x1^2 - 7/2*x2");
        assert!(f.mul(&Polynomial::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn mul_fibonacci_factorization() {
        // (-1 - x1^2 - x1*x2 + x2^2)(1 - x1^2 - x1*x2 + x2^2)
        //   = -1 + x1^4 + 2*x1^3*x2 - x1^2*x2^2 - 2*x1*x2^3 + x2^4
        let r = ring2();
        let got = p(&r, "-1 - x1^2 - x1*x2 + x2^2")
            .mul(&p(&r, "1 - x1^2 - x1*x2 + x2^2"))
            .unwrap();
        assert_eq!(got, p(&r, "-1 + x1^4 + 2*x1^3*x2 - x1^2*x2^2 - 2*x1*x2^3 + x2^4"));
    }

    #[test]
    fn eval_examples() {
        let r = ring2();
        assert_eq!(
            p(&r, "x1^2 + x2^2").eval(&[coeff_from_i64(0), coeff_from_i64(0)]).unwrap(),
            Coeff::zero()
        );
        assert_eq!(
            p(&r, "x1 - x2").eval(&[coeff_from_i64(3), coeff_from_ratio(1, 2)]).unwrap(),
            coeff_from_ratio(5, 2)
        );
        let r3 = Ring::standard(3);
        let g = p(&r3, "-2 + x1^2 + x2^2 + x3^2 - 2*x1*x2*x3");
        let v = g
            .eval(&[coeff_from_i64(2), coeff_from_i64(1), coeff_from_i64(1)])
            .unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn eval_arity_mismatch() {
        let r = ring2();
        assert!(matches!(
            p(&r, "x1").eval(&[coeff_from_i64(1)]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn compose_identity() {
        let r = ring2();
        let g = p(&r, "x1^2 - x1*x2 + 9*x1^3");
        let id = vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1)];
        assert_eq!(g.compose(&id).unwrap(), g);
    }

    #[test]
    fn compose_linear_map_twice() {
        let r = ring2();
        let f = vec![p(&r, "10*x1 - 8*x2"), p(&r, "6*x1 - 4*x2")];
        let g = p(&r, "x1^2 - x1*x2 + 9*x1^3 - 24*x1^2*x2 + 16*x1*x2^2");
        let g1 = g.compose(&f).unwrap();
        assert_eq!(
            g1,
            p(
                &r,
                "360*x1^3 - 1248*x1^2*x2 + 40*x1^2 + 1408*x1*x2^2 - 72*x1*x2 - 512*x2^3 + 32*x2^2"
            )
        );
        let g2 = g1.compose(&f).unwrap();
        assert_eq!(
            g2,
            p(
                &r,
                "7488*x1^3 - 26880*x1^2*x2 + 832*x1^2 + 31744*x1*x2^2 - 1600*x1*x2 - 12288*x2^3 + 768*x2^2"
            )
        );
    }

    #[test]
    fn canonical_scaling() {
        let r = ring2();
        // Content 8, leading (canonical order) term -512*x2^3 is negated.
        let g = p(&r, "360*x1^3 - 1248*x1^2*x2 + 40*x1^2 + 1408*x1*x2^2 - 72*x1*x2 - 512*x2^3 + 32*x2^2");
        let c = g.canonical();
        assert_eq!(
            c,
            p(&r, "-5*x1^2 + 9*x1*x2 - 4*x2^2 - 45*x1^3 + 156*x1^2*x2 - 176*x1*x2^2 + 64*x2^3")
        );
        // Canonicalization is idempotent and scalar-invariant.
        assert_eq!(c.canonical(), c);
        assert_eq!(g.mul_scalar(&coeff_from_ratio(-7, 3)).canonical(), c);
    }

    #[test]
    fn display_canonical_form() {
        let r3 = Ring::standard(3);
        let g = p(&r3, "x3^2 - 2*x1*x2*x3 - 2 + x1^2 + x2^2");
        assert_eq!(g.to_string(), "-2 + x1^2 + x2^2 + x3^2 - 2*x1*x2*x3");
        assert_eq!(Polynomial::zero(&r3).to_string(), "0");
        assert_eq!(p(&r3, "-7/2*x1 + 1/3").to_string(), "1/3 - 7/2*x1");
    }
}
