//! Dense two-phase simplex with Bland's rule over an exact ordered field.

use crate::matrix::Matrix;
use crate::scalar::OrderedField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome<T> {
    Infeasible,
    Unbounded,
    Optimal { value: T, x: Vec<T> },
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    obj: Vec<T>,
    basis: Vec<usize>,
}

impl<T: OrderedField> Tableau<T> {
    fn width(&self) -> usize {
        self.obj.len() - 1
    }

    fn pivot(&mut self, r: usize, s: usize) {
        let inv = self.rows[r][s].inv();
        for v in self.rows[r].iter_mut() {
            *v = v.mul_ref(&inv);
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[s].is_zero() {
                let f = row[s].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = v.sub_ref(&f.mul_ref(p));
                }
            }
        }
        if !self.obj[s].is_zero() {
            let f = self.obj[s].clone();
            for (v, p) in self.obj.iter_mut().zip(&pivot_row) {
                *v = v.sub_ref(&f.mul_ref(p));
            }
        }
        self.basis[r] = s;
    }

    /// Loads reduced costs for maximizing `cost` (indexed by column).
    fn set_objective(&mut self, cost: &[T]) {
        let w = self.width();
        let mut obj: Vec<T> = (0..=w)
            .map(|j| if j < w { cost[j].clone() } else { T::zero() })
            .collect();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if !cb.is_zero() {
                for (v, t) in obj.iter_mut().zip(&self.rows[i]) {
                    *v = v.sub_ref(&cb.mul_ref(t));
                }
            }
        }
        self.obj = obj;
    }

    /// Runs to optimality over `allowed` columns; false if unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let Some(s) = (0..allowed).find(|&j| self.obj[j].is_positive()) else {
                return true;
            };
            let w = self.width();
            let mut best: Option<(usize, T)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[s].is_positive() {
                    let ratio = row[w].div_ref(&row[s]);
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, s),
            }
        }
    }

    fn value(&self) -> T {
        -self.obj[self.width()].clone()
    }
}

/// Maximizes `c.x` subject to `a x = b`, `x >= 0`.
pub fn maximize<T: OrderedField>(a: &Matrix<T>, b: &[T], c: &[T]) -> LpOutcome<T> {
    let (m, n) = (a.rows(), a.cols());
    assert_eq!(b.len(), m);
    assert_eq!(c.len(), n);
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<T> = Vec::with_capacity(width + 1);
        for j in 0..n {
            let v = a.get(i, j).clone();
            row.push(if flip { -v } else { v });
        }
        for k in 0..m {
            row.push(if k == i { T::one() } else { T::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        rows.push(row);
    }
    let mut tab = Tableau { rows, obj: vec![T::zero(); width + 1], basis: (n..n + m).collect() };

    // Phase 1: drive the artificial variables to zero.
    let phase1: Vec<T> = (0..width).map(|j| if j < n { T::zero() } else { -T::one() }).collect();
    tab.set_objective(&phase1);
    tab.run(width);
    if tab.value().is_negative() {
        return LpOutcome::Infeasible;
    }
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= n {
            match (0..n).find(|&j| !tab.rows[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    tab.rows.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // Phase 2 on the original columns.
    let mut cost: Vec<T> = c.to_vec();
    cost.extend((0..m).map(|_| T::zero()));
    tab.set_objective(&cost);
    if !tab.run(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![T::zero(); n];
    for (i, &bv) in tab.basis.iter().enumerate() {
        if bv < n {
            x[bv] = tab.rows[i][width].clone();
        }
    }
    LpOutcome::Optimal { value: tab.value(), x }
}
