use std::collections::HashMap;

use super::multipoly::MultiPoly;
use crate::matrix::Matrix;
use crate::scalar::Field;

pub type PolyMatrix<F> = Matrix<MultiPoly<F>>;

/// Determinant of the submatrix on `rows` x `cols`, by cofactor expansion
/// along successive rows with sub-minors memoized on the set of used columns.
pub fn minor_determinant<F: Field>(m: &PolyMatrix<F>, rows: &[usize], cols: &[usize]) -> MultiPoly<F> {
    assert_eq!(rows.len(), cols.len(), "minor must be square");
    assert!(cols.len() <= 32, "minor too large");
    let template = m.get(0, 0);
    let (nvars, order) = (template.nvars(), template.order());
    if rows.is_empty() {
        return MultiPoly::constant(F::one(), nvars, order);
    }
    let mut memo: HashMap<u32, MultiPoly<F>> = HashMap::new();
    expand(m, rows, cols, 0, 0, &mut memo)
}

fn expand<F: Field>(
    m: &PolyMatrix<F>,
    rows: &[usize],
    cols: &[usize],
    depth: usize,
    used: u32,
    memo: &mut HashMap<u32, MultiPoly<F>>,
) -> MultiPoly<F> {
    let template = m.get(0, 0);
    if depth == rows.len() {
        return MultiPoly::constant(F::one(), template.nvars(), template.order());
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = MultiPoly::zero(template.nvars(), template.order());
    let mut sign_positive = true;
    for (k, &c) in cols.iter().enumerate() {
        if used & (1 << k) != 0 {
            continue;
        }
        let entry = m.get(rows[depth], c);
        if !entry.is_zero() {
            let sub = expand(m, rows, cols, depth + 1, used | (1 << k), memo);
            if !sub.is_zero() {
                let t = entry * &sub;
                acc = if sign_positive { &acc + &t } else { &acc - &t };
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Determinant of a square polynomial matrix by Laplace expansion along `row`.
pub fn laplace_along_row<F: Field>(m: &PolyMatrix<F>, row: usize) -> MultiPoly<F> {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let template = m.get(0, 0);
    let mut acc = MultiPoly::zero(template.nvars(), template.order());
    let all: Vec<usize> = (0..n).collect();
    for c in 0..n {
        let rs: Vec<usize> = all.iter().copied().filter(|&r| r != row).collect();
        let cs: Vec<usize> = all.iter().copied().filter(|&k| k != c).collect();
        let cof = if rs.is_empty() {
            MultiPoly::constant(F::one(), template.nvars(), template.order())
        } else {
            minor_determinant(m, &rs, &cs)
        };
        let t = m.get(row, c) * &cof;
        acc = if (row + c).is_multiple_of(2) { &acc + &t } else { &acc - &t };
    }
    acc
}
