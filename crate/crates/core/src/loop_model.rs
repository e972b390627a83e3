//! The loop DSL: parsing and printing, exact orbit evaluation, the
//! non-termination decision and the polynomial-invariant check.
//!
//! ```text
//! # Fib1
//! vars: x1, x2, x3
//! init: 2, 1, 1
//! guard: true
//! body: x1 <- x2; x2 <- x3; x3 <- 2*x2*x3 - x1
//! ```
//!
//! Guards are conjunctions of polynomial equations `g = 0`, optionally a
//! single disequality `p != 0` (several fold into one by multiplication).
//! `guard: true` means no condition. Inequality atoms `h > 0` are parsed
//! so that semi-algebraic loops can live in a corpus, but every engine
//! operation that needs equation-only guards rejects them. The body
//! assigns every declared variable exactly once, simultaneously; it may
//! span several lines. Comments run from `#` to end of line.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::config::Config;
use crate::error::{Error, ParseError, Phase, Result};
use crate::invariant_set::{invariant_set, InvariantSetStatus};
use crate::map::PolyMap;
use crate::parse::parse_polynomial_at;
use crate::poly::{coeff_bits, Coeff, Polynomial};
use crate::ring::Ring;

/// A parsed loop: variables, optional initial value, guard and body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopSpec {
    pub ring: Ring,
    /// Absent means the initial value is treated as a parameter.
    pub init: Option<Vec<Coeff>>,
    pub guard_eqs: Vec<Polynomial>,
    /// Single folded disequality `p != 0`.
    pub guard_diseq: Option<Polynomial>,
    /// Inequality atoms `h > 0`; parsed but unsupported by the engine.
    pub guard_ineqs: Vec<Polynomial>,
    pub body: PolyMap,
}

/// Exact orbit prefix `a, F(a), .., F^k(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub points: Vec<Vec<Coeff>>,
}

/// Outcome of the non-termination decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonTermination {
    /// Loop has an initial value: a definite answer.
    Decided(bool),
    /// Parametric loop: the loop never terminates from `a` iff every
    /// listed polynomial vanishes at `a`.
    Conditions(Vec<Polynomial>),
}

impl LoopSpec {
    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    pub fn init_required(&self) -> Result<&[Coeff]> {
        self.init
            .as_deref()
            .ok_or_else(|| Error::Unsupported("this operation needs a loop with an initial value".into()))
    }

    pub fn reject_inequalities(&self) -> Result<()> {
        if self.guard_ineqs.is_empty() {
            Ok(())
        } else {
            Err(Error::Unsupported(
                "inequality guards (`> 0`) are not supported by this operation; equation-only guards required"
                    .into(),
            ))
        }
    }

    /// Guard equations with the disequality folded in by multiplication.
    pub fn folded_guards(&self) -> Result<Vec<Polynomial>> {
        match &self.guard_diseq {
            None => Ok(self.guard_eqs.clone()),
            Some(p) => self.guard_eqs.iter().map(|g| g.mul(p)).collect(),
        }
    }

    /// `p·g` when a disequality is present, else `g` unchanged.
    pub fn fold_diseq_into(&self, g: &Polynomial) -> Result<Polynomial> {
        match &self.guard_diseq {
            None => Ok(g.clone()),
            Some(p) => p.mul(g),
        }
    }
}

// ---------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------

fn parse_rational(text: &str, line: usize, col: usize) -> Result<Coeff> {
    let t = text.trim();
    let err = || ParseError::new(line, col, format!("expected a rational constant, got `{t}`"));
    if t.is_empty() {
        return Err(err().into());
    }
    let (num_s, den_s) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num: BigInt = num_s.parse().map_err(|_| err())?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| err())?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(ParseError::new(line, col, "zero denominator").into());
    }
    Ok(BigRational::new(num, den))
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Line<'a> {
    no: usize,
    text: &'a str,
}

/// Parses loop DSL text into a validated [`LoopSpec`].
pub fn parse_loop(text: &str) -> Result<LoopSpec> {
    // Strip comments, keep 1-based line numbers of nonblank lines.
    let mut lines: Vec<Line> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(at) => &raw[..at],
            None => raw,
        };
        if !content.trim().is_empty() {
            lines.push(Line { no: i + 1, text: content });
        }
    }
    let mut it = lines.into_iter().peekable();

    let section = |l: &Line, key: &str| -> Option<(usize, String)> {
        let trimmed = l.text.trim_start();
        let indent = l.text.len() - trimmed.len();
        trimmed
            .strip_prefix(key)
            .map(|rest| (indent + key.len() + 1, rest.to_string()))
    };

    // vars:
    let vars_line = it
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty loop source; expected `vars:`"))?;
    let Some((vcol, vars_text)) = section(&vars_line, "vars:") else {
        return Err(ParseError::new(vars_line.no, 1, "expected `vars:` as the first section").into());
    };
    let mut vars: Vec<String> = Vec::new();
    for piece in vars_text.split(',') {
        let name = piece.trim();
        if !valid_ident(name) {
            return Err(ParseError::new(vars_line.no, vcol, format!("invalid variable name `{name}`")).into());
        }
        if name.starts_with("__") {
            return Err(ParseError::new(vars_line.no, vcol, format!("variable name `{name}` uses the reserved `__` prefix")).into());
        }
        if vars.iter().any(|v| v == name) {
            return Err(ParseError::new(vars_line.no, vcol, format!("duplicate variable `{name}`")).into());
        }
        vars.push(name.to_string());
    }
    let ring = Ring::new(vars);

    // init: (optional)
    let mut init: Option<Vec<Coeff>> = None;
    if let Some(l) = it.peek() {
        if let Some((icol, init_text)) = section(l, "init:") {
            let no = l.no;
            it.next();
            let mut values = Vec::new();
            for piece in init_text.split(',') {
                values.push(parse_rational(piece, no, icol)?);
            }
            if values.len() != ring.arity() {
                return Err(Error::ArityMismatch { expected: ring.arity(), got: values.len() });
            }
            init = Some(values);
        }
    }

    // guard:
    let guard_line = it
        .next()
        .ok_or_else(|| ParseError::new(0, 1, "missing `guard:` section"))?;
    let Some((gcol, guard_text)) = section(&guard_line, "guard:") else {
        return Err(ParseError::new(guard_line.no, 1, "expected `guard:`").into());
    };
    let mut guard_eqs: Vec<Polynomial> = Vec::new();
    let mut diseqs: Vec<Polynomial> = Vec::new();
    let mut guard_ineqs: Vec<Polynomial> = Vec::new();
    if guard_text.trim() != "true" {
        let mut col = gcol;
        for atom in guard_text.split(';') {
            let atom_col = col + (atom.len() - atom.trim_start().len());
            col += atom.len() + 1;
            let t = atom.trim();
            if t.is_empty() {
                return Err(ParseError::new(guard_line.no, atom_col, "empty guard atom").into());
            }
            let (lhs, op) = if let Some(at) = t.find("!=") {
                (&t[..at], "!=")
            } else if let Some(at) = t.find('>') {
                (&t[..at], ">")
            } else if let Some(at) = t.find('=') {
                (&t[..at], "=")
            } else {
                return Err(ParseError::new(guard_line.no, atom_col, "guard atom needs `= 0`, `!= 0` or `> 0`").into());
            };
            let rhs = &t[lhs.len() + op.len()..];
            if rhs.trim() != "0" {
                return Err(ParseError::new(guard_line.no, atom_col, "guard right-hand side must be 0").into());
            }
            let poly = parse_polynomial_at(&ring, lhs, guard_line.no, atom_col)?;
            match op {
                "=" => guard_eqs.push(poly),
                "!=" => diseqs.push(poly),
                ">" => guard_ineqs.push(poly),
                _ => unreachable!(),
            }
        }
    }
    // Several disequalities fold into one by multiplication.
    let mut guard_diseq: Option<Polynomial> = None;
    for d in diseqs {
        guard_diseq = Some(match guard_diseq {
            None => d,
            Some(acc) => acc.mul(&d)?,
        });
    }

    // body:
    let body_line = it
        .next()
        .ok_or_else(|| ParseError::new(0, 1, "missing `body:` section"))?;
    let Some((bcol, body_first)) = section(&body_line, "body:") else {
        return Err(ParseError::new(body_line.no, 1, "expected `body:`").into());
    };
    let mut assigns: Vec<(usize, usize, String)> = Vec::new(); // line, col, text
    let mut collect = |no: usize, col0: usize, text: &str| -> Result<()> {
        let mut col = col0;
        let segments: Vec<&str> = text.split(';').collect();
        for (k, seg) in segments.iter().enumerate() {
            let seg_col = col + (seg.len() - seg.trim_start().len());
            col += seg.len() + 1;
            if seg.trim().is_empty() {
                // Allow a trailing separator at end of line.
                if k + 1 == segments.len() {
                    continue;
                }
                return Err(ParseError::new(no, seg_col, "empty assignment").into());
            }
            assigns.push((no, seg_col, seg.trim().to_string()));
        }
        Ok(())
    };
    collect(body_line.no, bcol, &body_first)?;
    for l in it {
        collect(l.no, 1, l.text)?;
    }

    let mut components: Vec<Option<Polynomial>> = vec![None; ring.arity()];
    for (no, col, text) in assigns {
        let Some((lhs, rhs)) = text.split_once("<-") else {
            return Err(ParseError::new(no, col, "assignment needs `<-`").into());
        };
        let name = lhs.trim();
        let Some(idx) = ring.var_index(name) else {
            return Err(ParseError::new(no, col, format!("unknown variable `{name}` on assignment left-hand side")).into());
        };
        if components[idx].is_some() {
            return Err(ParseError::new(no, col, format!("variable `{name}` assigned twice")).into());
        }
        let rhs_col = col + lhs.len() + 2;
        components[idx] = Some(parse_polynomial_at(&ring, rhs, no, rhs_col)?);
    }
    for (i, c) in components.iter().enumerate() {
        if c.is_none() {
            return Err(ParseError::new(
                body_line.no,
                1,
                format!("missing assignment for variable `{}`", ring.var_name(i)),
            )
            .into());
        }
    }
    let body = PolyMap::new(&ring, components.into_iter().map(Option::unwrap).collect())?;

    Ok(LoopSpec { ring, init, guard_eqs, guard_diseq, guard_ineqs, body })
}

/// Prints a loop in the DSL so that reparsing gives a structurally equal
/// [`LoopSpec`].
pub fn print_loop(spec: &LoopSpec) -> String {
    let mut out = String::new();
    out.push_str("vars: ");
    out.push_str(&spec.ring.vars().join(", "));
    out.push('\n');
    if let Some(init) = &spec.init {
        out.push_str("init: ");
        let vals: Vec<String> = init.iter().map(|v| v.to_string()).collect();
        out.push_str(&vals.join(", "));
        out.push('\n');
    }
    out.push_str("guard: ");
    if spec.guard_eqs.is_empty() && spec.guard_diseq.is_none() && spec.guard_ineqs.is_empty() {
        out.push_str("true");
    } else {
        let mut atoms: Vec<String> = spec.guard_eqs.iter().map(|g| format!("{g} = 0")).collect();
        if let Some(p) = &spec.guard_diseq {
            atoms.push(format!("{p} != 0"));
        }
        for h in &spec.guard_ineqs {
            atoms.push(format!("{h} > 0"));
        }
        out.push_str(&atoms.join("; "));
    }
    out.push('\n');
    out.push_str("body: ");
    let assigns: Vec<String> = spec
        .body
        .components()
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{} <- {c}", spec.ring.var_name(i)))
        .collect();
    out.push_str(&assigns.join("; "));
    out.push('\n');
    out
}

// ---------------------------------------------------------------------
// Semantics
// ---------------------------------------------------------------------

/// Exact orbit `a, F(a), .., F^k(a)`; `k+1` points.
pub fn orbit(spec: &LoopSpec, k: usize, cfg: &Config) -> Result<Orbit> {
    let init = spec.init_required()?;
    let mut points = Vec::with_capacity(k + 1);
    let mut current = init.to_vec();
    points.push(current.clone());
    for _ in 0..k {
        current = spec.body.apply_point(&current)?;
        let bits = current.iter().map(coeff_bits).max().unwrap_or(0);
        cfg.check_bits(bits, Phase::Orbit)?;
        cfg.check_deadline(Phase::Orbit)?;
        points.push(current.clone());
    }
    Ok(Orbit { points })
}

/// Longest orbit prefix with at most `k` steps whose coordinates stay
/// under the configured bit ceiling. Property suites use this to keep
/// doubly-exponential orbits affordable.
pub fn orbit_capped(spec: &LoopSpec, k: usize, cfg: &Config) -> Result<Orbit> {
    let init = spec.init_required()?;
    let mut points = vec![init.to_vec()];
    let mut current = init.to_vec();
    for _ in 0..k {
        current = spec.body.apply_point(&current)?;
        let bits = current.iter().map(coeff_bits).max().unwrap_or(0);
        if cfg.check_bits(bits, Phase::Orbit).is_err() {
            break;
        }
        points.push(current.clone());
    }
    Ok(Orbit { points })
}

/// Decides whether the loop never terminates (initial value present), or
/// returns the algebraic conditions on a parametric initial value.
///
/// A disequality `p != 0` is folded by multiplying `p` into every guard
/// equation before the invariant-set computation.
pub fn nonterminates(spec: &LoopSpec, cfg: &Config) -> Result<NonTermination> {
    spec.reject_inequalities()?;
    if spec.guard_eqs.is_empty() {
        // Guard `true`: the loop trivially never terminates.
        return Ok(match &spec.init {
            Some(_) => NonTermination::Decided(true),
            None => NonTermination::Conditions(Vec::new()),
        });
    }
    let guards = spec.folded_guards()?;
    let res = invariant_set(&guards, &spec.body, cfg)?;
    if let InvariantSetStatus::ResourceExhausted { kind } = res.status {
        return Err(crate::error::ResourceError::new(kind, Phase::InvariantChain, "invariant set did not stabilize")
            .with_partial(res.generators)
            .into());
    }
    match &spec.init {
        Some(init) => {
            for g in &res.generators {
                if !g.eval(init)?.is_zero() {
                    return Ok(NonTermination::Decided(false));
                }
            }
            Ok(NonTermination::Decided(true))
        }
        None => Ok(NonTermination::Conditions(res.generators)),
    }
}

/// CheckPI: is `g` a polynomial invariant of the loop (with its body `F`,
/// initial value `a` and optional disequality)? Runs the invariant-set
/// computation on `{g}` (or `{p·g}`) and evaluates every stabilized
/// generator at the initial value.
pub fn check_pi(spec: &LoopSpec, g: &Polynomial, cfg: &Config) -> Result<bool> {
    spec.reject_inequalities()?;
    let init = spec.init_required()?.to_vec();
    spec.ring.check_same(g.ring())?;
    if g.is_zero() {
        return Ok(true);
    }
    let guard = spec.fold_diseq_into(g)?;
    let res = invariant_set(&[guard], &spec.body, cfg)?;
    if let InvariantSetStatus::ResourceExhausted { kind } = res.status {
        return Err(crate::error::ResourceError::new(kind, Phase::InvariantChain, "invariant set did not stabilize")
            .with_partial(res.generators)
            .into());
    }
    for h in &res.generators {
        if !h.eval(&init)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
