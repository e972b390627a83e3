//! Polynomial rings: an ordered list of variable names shared by all
//! values that live in the ring.
//!
//! Fresh variables created by the engine (the Rabinowitsch `t`, template
//! coefficients `y1..ym`, fallback combiners `z1..zl`) get reserved
//! `__`-prefixed internal names so they can never capture user variables;
//! they display without the prefix whenever that is unambiguous.

use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingInner {
    vars: Vec<String>,
}

/// A rational polynomial ring identified by its ordered variable names.
/// Cheap to clone; equality compares the variable lists.
#[derive(Debug, Clone, Eq)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.vars == other.0.vars
    }
}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.vars.hash(state);
    }
}

impl Ring {
    /// Creates a ring from distinct, nonempty variable names.
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Ring {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        assert!(!vars.is_empty(), "a ring needs at least one variable");
        for (i, v) in vars.iter().enumerate() {
            assert!(!v.is_empty(), "empty variable name");
            assert!(!vars[..i].contains(v), "duplicate variable `{v}`");
        }
        Ring(Arc::new(RingInner { vars }))
    }

    /// The standard ring `x1, .., xn`.
    pub fn standard(n: usize) -> Ring {
        Ring::new((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn arity(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    /// User-facing name: internal `__t` prints as `t` unless that name is
    /// already taken by another variable of this ring.
    pub fn display_name(&self, i: usize) -> &str {
        let name = &self.0.vars[i];
        if let Some(stripped) = name.strip_prefix("__") {
            if !stripped.is_empty() && !self.0.vars.iter().any(|v| v == stripped) {
                return stripped;
            }
        }
        name
    }

    /// Resolves a name, accepting either the internal or the display form.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        if let Some(i) = self.0.vars.iter().position(|v| v == name) {
            return Some(i);
        }
        (0..self.arity()).find(|&i| self.display_name(i) == name)
    }

    /// New ring with `extra` variables appended.
    pub fn extend<S: Into<String>>(&self, extra: Vec<S>) -> Ring {
        let mut vars = self.0.vars.clone();
        vars.extend(extra.into_iter().map(Into::into));
        Ring::new(vars)
    }

    /// Reserved name `__<base>` not colliding with any existing variable.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut candidate = format!("__{base}");
        let mut k = 1;
        while self.0.vars.contains(&candidate) {
            k += 1;
            candidate = format!("__{base}_{k}");
        }
        candidate
    }

    /// `count` reserved names `__<base>1 .. __<base><count>`.
    pub fn fresh_names(&self, base: &str, count: usize) -> Vec<String> {
        (1..=count).map(|i| self.fresh_name(&format!("{base}{i}"))).collect()
    }

    pub fn describe(&self) -> String {
        self.0.vars.join(",")
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.describe(), other.describe()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_strips_reserved_prefix() {
        let r = Ring::new(vec!["x1", "x2", "__t"]);
        assert_eq!(r.display_name(2), "t");
        assert_eq!(r.var_index("t"), Some(2));
        assert_eq!(r.var_index("__t"), Some(2));
    }

    #[test]
    fn display_keeps_prefix_on_collision() {
        let r = Ring::new(vec!["t", "__t"]);
        assert_eq!(r.display_name(1), "__t");
        assert_eq!(r.var_index("t"), Some(0));
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = Ring::new(vec!["x1", "__t"]);
        assert_eq!(r.fresh_name("t"), "__t_2");
        let e = r.extend(vec![r.fresh_name("t")]);
        assert_eq!(e.arity(), 3);
    }

    #[test]
    fn mismatch_is_reported() {
        let a = Ring::standard(2);
        let b = Ring::standard(3);
        assert!(a.check_same(&b).is_err());
        assert!(a.check_same(&Ring::standard(2)).is_ok());
    }
}
