//! Exact rational linear algebra: fraction-free Gaussian elimination,
//! right-kernel bases, reduced row echelon form and rank/span utilities.
//!
//! Elimination is fraction-free (integer cross-multiplication updates with
//! content removal, rows pre-scaled to primitive integers) and fully
//! deterministic: pivots are chosen as the first nonzero entry in column
//! order.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::Coeff;

/// Clears denominators and strips content; returns the primitive integer
/// row (zero rows come back as all zeros). Sign is normalized so the first
/// nonzero entry is positive.
fn primitive_int_row(row: &[Coeff]) -> Vec<BigInt> {
    let mut den_lcm = BigInt::one();
    for c in row {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = row.iter().map(|c| c.numer() * (&den_lcm / c.denom())).collect();
    normalize_int_row(&mut ints);
    ints
}

fn normalize_int_row(ints: &mut [BigInt]) {
    let mut content = BigInt::zero();
    for v in ints.iter() {
        content = content.gcd(v);
        if content.is_one() {
            break;
        }
    }
    if content.is_zero() {
        return;
    }
    if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
        if first.sign() == Sign::Minus {
            content = -content;
        }
    }
    if !content.is_one() {
        for v in ints.iter_mut() {
            *v = &*v / &content;
        }
    }
}

/// Incremental fraction-free row echelon form. Rows can be appended one at
/// a time, which reports whether the new row enlarged the row space; the
/// candidate phase uses this for its early dependence stop.
#[derive(Debug, Clone)]
pub struct Echelon {
    cols: usize,
    /// Echelon rows as primitive integer vectors, sorted by pivot column.
    rows: Vec<Vec<BigInt>>,
    /// Pivot column of each row.
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Echelon {
        Echelon { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `row` against the echelon and inserts the remainder if it
    /// is nonzero. Returns `true` when the rank grew.
    pub fn add_row(&mut self, row: &[Coeff]) -> bool {
        assert_eq!(row.len(), self.cols);
        self.add_int_row(primitive_int_row(row))
    }

    fn add_int_row(&mut self, mut row: Vec<BigInt>) -> bool {
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            if row[pc].is_zero() {
                continue;
            }
            // row <- piv*row - row[pc]*r, fraction-free two-term update.
            let piv = r[pc].clone();
            let factor = std::mem::replace(&mut row[pc], BigInt::zero());
            for j in 0..self.cols {
                if j == pc {
                    continue;
                }
                let t = &row[j] * &piv - &factor * &r[j];
                row[j] = t;
            }
            normalize_int_row(&mut row);
        }
        match row.iter().position(|v| !v.is_zero()) {
            None => false,
            Some(pc) => {
                let at = self.pivots.partition_point(|&p| p < pc);
                self.rows.insert(at, row);
                self.pivots.insert(at, pc);
                true
            }
        }
    }

    /// Back-substitutes into reduced row echelon form over the rationals
    /// (each pivot 1, zeros above pivots).
    fn to_rref(&self) -> Vec<Vec<Coeff>> {
        let mut rref: Vec<Vec<Coeff>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect())
            .collect();
        for i in (0..rref.len()).rev() {
            let pc = self.pivots[i];
            let inv = rref[i][pc].recip();
            for v in rref[i].iter_mut() {
                *v *= &inv;
            }
            let row_i = rref[i].clone();
            for k in 0..i {
                if rref[k][pc].is_zero() {
                    continue;
                }
                let f = rref[k][pc].clone();
                for j in 0..self.cols {
                    let delta = &f * &row_i[j];
                    rref[k][j] -= delta;
                }
            }
        }
        rref
    }
}

/// Rank of a rational matrix given as rows.
pub fn rank(rows: &[Vec<Coeff>], cols: usize) -> usize {
    let mut e = Echelon::new(cols);
    for r in rows {
        e.add_row(r);
    }
    e.rank()
}

/// Reduced row echelon form plus pivot columns.
pub fn rref(rows: &[Vec<Coeff>], cols: usize) -> (Vec<Vec<Coeff>>, Vec<usize>) {
    let mut e = Echelon::new(cols);
    for r in rows {
        e.add_row(r);
    }
    (e.to_rref(), e.pivots.clone())
}

/// Canonical basis of the right-kernel `{v : A v = 0}`.
///
/// The basis is presented in reduced row echelon form with denominators
/// cleared (primitive integer vectors), ordered by leading column, so it
/// is deterministic and directly comparable in golden tests. The zero
/// matrix yields the standard basis; full column rank yields an empty
/// list.
pub fn kernel_basis(rows: &[Vec<Coeff>], cols: usize) -> Vec<Vec<Coeff>> {
    let mut e = Echelon::new(cols);
    for r in rows {
        e.add_row(r);
    }
    kernel_of_echelon(&e)
}

pub fn kernel_of_echelon(e: &Echelon) -> Vec<Vec<Coeff>> {
    let rref = e.to_rref();
    let pivots = &e.pivots;
    let mut vectors: Vec<Vec<Coeff>> = Vec::new();
    let mut is_pivot = vec![false; e.cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    for j in 0..e.cols {
        if is_pivot[j] {
            continue;
        }
        let mut v = vec![Coeff::zero(); e.cols];
        v[j] = Coeff::one();
        for (i, &pc) in pivots.iter().enumerate() {
            if !rref[i][j].is_zero() {
                v[pc] = -rref[i][j].clone();
            }
        }
        vectors.push(v);
    }
    // Canonical presentation: RREF the stacked kernel vectors, then clear
    // denominators into primitive integer rows.
    let (k_rref, _) = rref_of(&vectors, e.cols);
    k_rref
        .iter()
        .map(|r| {
            primitive_int_row(r)
                .into_iter()
                .map(BigRational::from_integer)
                .collect()
        })
        .collect()
}

fn rref_of(rows: &[Vec<Coeff>], cols: usize) -> (Vec<Vec<Coeff>>, Vec<usize>) {
    rref(rows, cols)
}

/// Do two row sets span the same subspace? Decided exactly by
/// `rank A = rank B = rank [A; B]`.
pub fn same_row_span(a: &[Vec<Coeff>], b: &[Vec<Coeff>], cols: usize) -> bool {
    let ra = rank(a, cols);
    let rb = rank(b, cols);
    if ra != rb {
        return false;
    }
    let mut stacked: Vec<Vec<Coeff>> = a.to_vec();
    stacked.extend_from_slice(b);
    rank(&stacked, cols) == ra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff_from_i64 as q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Coeff>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn kernel_of_zero_matrix_is_standard_basis() {
        let rows = m(&[&[0, 0, 0]]);
        let k = kernel_basis(&rows, 3);
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, if i == j { q(1) } else { q(0) });
            }
        }
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let rows = m(&[&[1, 0], &[0, 1]]);
        assert!(kernel_basis(&rows, 2).is_empty());
    }

    #[test]
    fn kernel_small_system() {
        // x + y + z = 0, x - z = 0  =>  kernel spanned by (1, -2, 1).
        let rows = m(&[&[1, 1, 1], &[1, 0, -1]]);
        let k = kernel_basis(&rows, 3);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![q(1), q(-2), q(1)]);
    }

    #[test]
    fn rank_and_dependence() {
        let mut e = Echelon::new(3);
        assert!(e.add_row(&[q(1), q(2), q(3)]));
        assert!(e.add_row(&[q(0), q(1), q(1)]));
        // 2*r1 + r2
        assert!(!e.add_row(&[q(2), q(5), q(7)]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn span_comparison() {
        let a = m(&[&[1, 0, -1], &[0, 1, 1]]);
        let b = m(&[&[1, 1, 0], &[1, -1, -2]]);
        let c = m(&[&[1, 1, 0], &[1, -1, 0]]);
        assert!(same_row_span(&a, &b, 3));
        assert!(!same_row_span(&a, &c, 3));
    }

    #[test]
    fn rational_rows_are_scaled_exactly() {
        let rows = vec![vec![crate::poly::coeff_from_ratio(1, 2), q(1)], vec![q(1), q(2)]];
        assert_eq!(rank(&rows, 2), 1);
    }
}
