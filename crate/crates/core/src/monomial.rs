//! Monomials, term orders and the canonical monomial enumeration.
//!
//! The canonical indexing order sorts monomials by ascending total degree
//! with a lexicographic-descending tiebreak (`x1 > x2 > ...`), so that for
//! two variables and degree two the enumeration is
//! `1, x1, x2, x1^2, x1*x2, x2^2`. All template/coefficient indexing in the
//! engine is pinned to this order.

use std::cmp::Ordering;

/// Exponent vector over a fixed ring arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(arity: usize) -> Monomial {
        Monomial { exps: vec![0; arity] }
    }

    pub fn var(arity: usize, i: usize) -> Monomial {
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn deg(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// Exact division; `None` when some exponent would go negative.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.arity(), other.arity());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Pads with zero exponents for extension into a larger ring.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { exps }
    }
}

/// Total orders on monomials. `cmp` returns `Greater` when the first
/// argument is the larger (leading) monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Ascending total degree, lex-descending tiebreak: the canonical
    /// indexing order. Sorting ascending under this order reproduces the
    /// canonical enumeration.
    DegLex,
    /// Graded reverse lexicographic.
    GrevLex,
    /// Pure lexicographic with `x1 > x2 > ...`.
    Lex,
    /// Block elimination order: the variable block starting at `split`
    /// is compared first (grevlex within blocks), so those variables
    /// dominate and get eliminated.
    BlockElim { split: usize },
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            // Reverse-lex: smaller trailing exponent wins.
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::DegLex => match a.deg().cmp(&b.deg()) {
                Ordering::Equal => lex_cmp(&a.exps, &b.exps).reverse(),
                ord => ord,
            },
            MonomialOrder::GrevLex => grevlex_cmp(&a.exps, &b.exps),
            MonomialOrder::Lex => lex_cmp(&a.exps, &b.exps),
            MonomialOrder::BlockElim { split } => {
                let s = *split;
                match grevlex_cmp(&a.exps[s..], &b.exps[s..]) {
                    Ordering::Equal => grevlex_cmp(&a.exps[..s], &b.exps[..s]),
                    ord => ord,
                }
            }
        }
    }
}

/// Binomial coefficient C(n, k) as usize; panics on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflow")
}

fn monomials_of_degree(arity: usize, deg: u32, out: &mut Vec<Monomial>) {
    // Lex-descending within a degree: highest exponent on the first
    // variable first.
    fn rec(arity: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == arity {
            prefix.push(deg);
            out.push(Monomial::from_exps(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=deg).rev() {
            prefix.push(e);
            rec(arity, deg - e, prefix, out);
            prefix.pop();
        }
    }
    rec(arity, deg, &mut Vec::with_capacity(arity), out);
}

/// All monomials of total degree at most `d` in the canonical indexing
/// order. The result has exactly `C(n+d, d)` entries and starts with the
/// constant monomial.
pub fn monomial_basis(arity: usize, d: u32) -> Vec<Monomial> {
    assert!(arity >= 1, "arity must be at least 1");
    let mut out = Vec::with_capacity(binomial(arity + d as usize, d as usize));
    for deg in 0..=d {
        monomials_of_degree(arity, deg, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(mons: &[Monomial]) -> Vec<Vec<u32>> {
        mons.iter().map(|m| m.exps().to_vec()).collect()
    }

    #[test]
    fn basis_two_vars_degree_two() {
        // 1, x1, x2, x1^2, x1*x2, x2^2
        assert_eq!(
            names(&monomial_basis(2, 2)),
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![0, 1],
                vec![2, 0],
                vec![1, 1],
                vec![0, 2]
            ]
        );
    }

    #[test]
    fn basis_trivial() {
        assert_eq!(names(&monomial_basis(1, 0)), vec![vec![0]]);
    }

    #[test]
    fn basis_counts() {
        assert_eq!(monomial_basis(3, 2).len(), 10);
        assert_eq!(monomial_basis(3, 4).len(), 35);
        assert_eq!(monomial_basis(9, 1).len(), 10);
        assert_eq!(binomial(14, 3), 364);
    }

    #[test]
    fn basis_strictly_increasing_no_dups() {
        let mons = monomial_basis(4, 3);
        assert_eq!(mons.len(), binomial(7, 3));
        for w in mons.windows(2) {
            assert_eq!(MonomialOrder::DegLex.cmp(&w[0], &w[1]), Ordering::Less);
        }
    }

    #[test]
    fn grevlex_vs_lex() {
        // x1 > x2 under both orders.
        let x1 = Monomial::var(2, 0);
        let x2 = Monomial::var(2, 1);
        assert_eq!(MonomialOrder::GrevLex.cmp(&x1, &x2), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&x1, &x2), Ordering::Greater);
        // Grevlex separates x1*x3 and x2^2 differently from deglex-style
        // orders: deg equal, last nonzero of difference decides.
        let a = Monomial::from_exps(vec![1, 0, 1]);
        let b = Monomial::from_exps(vec![0, 2, 0]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn block_order_dominates_on_tail_block() {
        // split=2: variable 2 (say t) dominates everything in the head.
        let t = Monomial::var(3, 2);
        let x_big = Monomial::from_exps(vec![5, 4, 0]);
        let ord = MonomialOrder::BlockElim { split: 2 };
        assert_eq!(ord.cmp(&t, &x_big), Ordering::Greater);
    }
}
