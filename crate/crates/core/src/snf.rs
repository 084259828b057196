//! Smith normal form by gcd elimination with explicit unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;

pub type IntMatrix = Matrix<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    /// The `min(rows, cols)` diagonal entries; zeros, if any, come last.
    pub diag: Vec<T>,
    pub left: Matrix<T>,
    pub right: Matrix<T>,
}

impl<T: Clone + Zero> SmithForm<T> {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

fn add_row_multiple<T: Integer + Clone>(m: &mut Matrix<T>, target: usize, source: usize, q: &T) {
    for c in 0..m.cols() {
        let v = m.get(target, c).clone() - q.clone() * m.get(source, c).clone();
        m.set(target, c, v);
    }
}

fn add_col_multiple<T: Integer + Clone>(m: &mut Matrix<T>, target: usize, source: usize, q: &T) {
    for r in 0..m.rows() {
        let v = m.get(r, target).clone() - q.clone() * m.get(r, source).clone();
        m.set(r, target, v);
    }
}

fn negate_row<T: Integer + Signed + Clone>(m: &mut Matrix<T>, r: usize) {
    for c in 0..m.cols() {
        let v = -m.get(r, c).clone();
        m.set(r, c, v);
    }
}

/// Computes `left * m * right = diag(d_1, .., d_k, 0, ..)` with
/// `d_1 | d_2 | ..` and both transforms unimodular.
pub fn smith_normal_form<T: Integer + Signed + Clone>(m: &Matrix<T>) -> SmithForm<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = Matrix::<T>::identity(rows);
    let mut right = Matrix::<T>::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // Move a smallest nonzero entry of the trailing block to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    let v = a.get(r, c);
                    if !v.is_zero()
                        && best.is_none_or(|(br, bc)| v.abs() < a.get(br, bc).abs())
                    {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else { break };
            a.swap_rows(t, pr);
            left.swap_rows(t, pr);
            a.swap_cols(t, pc);
            right.swap_cols(t, pc);

            let mut dirty = false;
            let pivot = a.get(t, t).clone();
            for r in t + 1..rows {
                let q = a.get(r, t).clone() / pivot.clone();
                if !q.is_zero() {
                    add_row_multiple(&mut a, r, t, &q);
                    add_row_multiple(&mut left, r, t, &q);
                }
                dirty |= !a.get(r, t).is_zero();
            }
            for c in t + 1..cols {
                let q = a.get(t, c).clone() / pivot.clone();
                if !q.is_zero() {
                    add_col_multiple(&mut a, c, t, &q);
                    add_col_multiple(&mut right, c, t, &q);
                }
                dirty |= !a.get(t, c).is_zero();
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let bad = (t + 1..rows).find(|&r| {
                (t + 1..cols).any(|c| !a.get(r, c).is_multiple_of(&pivot))
            });
            match bad {
                Some(r) => {
                    let minus_one = -T::one();
                    add_row_multiple(&mut a, t, r, &minus_one);
                    add_row_multiple(&mut left, t, r, &minus_one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut left, t);
        }
    }

    let diag = (0..rows.min(cols)).map(|k| a.get(k, k).clone()).collect();
    SmithForm { diag, left, right }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsotropyOrder {
    Finite(BigInt),
    Infinite,
}

impl IsotropyOrder {
    pub fn is_finite(&self) -> bool {
        matches!(self, IsotropyOrder::Finite(_))
    }
}

/// Order of the subgroup of the torus fixing a point whose nonvanishing
/// coordinates have the given weight columns: the product of the invariant
/// factors, or infinite when they do not span.
pub fn isotropy_order(weight_columns: &IntMatrix) -> IsotropyOrder {
    if weight_columns.cols() < weight_columns.rows() {
        return IsotropyOrder::Infinite;
    }
    let snf = smith_normal_form(weight_columns);
    if snf.diag.iter().any(|d| d.is_zero()) {
        return IsotropyOrder::Infinite;
    }
    IsotropyOrder::Finite(snf.diag.iter().fold(BigInt::one(), |acc, d| acc * d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: Vec<Vec<i64>>) -> IntMatrix {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
    }

    fn check(m: &IntMatrix) -> SmithForm<BigInt> {
        let s = smith_normal_form(m);
        let prod = &(&s.left * m) * &s.right;
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let expect = if r == c { s.diag[r].clone() } else { BigInt::zero() };
                assert_eq!(*prod.get(r, c), expect);
            }
        }
        s
    }

    #[test]
    fn small_cases() {
        assert_eq!(check(&IntMatrix::identity(2)).diag, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(check(&im(vec![vec![4, 0], vec![0, 2]])).diag, vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(check(&im(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])).diag,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn isotropy_edge_cases() {
        assert_eq!(isotropy_order(&IntMatrix::zeros(5, 0)), IsotropyOrder::Infinite);
        let m = im(vec![vec![-2, 0], vec![0, -2]]);
        assert_eq!(isotropy_order(&m), IsotropyOrder::Finite(BigInt::from(4)));
        assert_eq!(isotropy_order(&im(vec![vec![1, 1], vec![1, 1]])), IsotropyOrder::Infinite);
    }
}
