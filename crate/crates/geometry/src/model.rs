//! The ambient affine space of the Cox ring: variables, weights and the
//! twenty defining equations.

use num_bigint::BigInt;
use symres_core::poly::{Ideal, MonomialOrder, MultiPoly, Ring};
use symres_core::{IntMatrix, Matrix, QPoly, Rational};

/// Index pairs `i < j` in the order used for the `w` variables.
pub const W_PAIRS: [(usize, usize); 10] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
];

pub const NUM_VARS: usize = 15;
pub const NUM_GENERATORS: usize = 20;

pub fn w_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    W_PAIRS.iter().position(|&p| p == (a, b)).expect("not a pair of distinct indices below 5")
}

pub fn u_index(k: usize) -> usize {
    10 + k
}

pub fn variable_names() -> Vec<String> {
    W_PAIRS
        .iter()
        .map(|(i, j)| format!("w{i}{j}"))
        .chain((0..5).map(|k| format!("u{k}")))
        .collect()
}

/// Left column of the two-column display, top to bottom.
const LEFT: [&str; 11] = [
    "w14*w23 + w13*w24 - w12*w34",
    "w04*w13 + w03*w14 - w01*w34",
    "w03*w12 + w02*w13 - w01*w23",
    "w02*w12*u2 - w03*w13*u3 + w04*w14*u4",
    "w01*w13*u1 + w02*w23*u2 + w04*w34*u4",
    "w03*w04*u0 - w13*w14*u1 + w23*w24*u2",
    "w01*w04*u0 + w12*w24*u2 + w13*w34*u3",
    "w01*w03*u0 + w12*w23*u2 + w14*w34*u4",
    "w02^2*u0 + w12^2*u1 + w23^2*u3 + w24^2*u4",
    "w01^2*u1 + w02^2*u2 + w03^2*u3 + w04^2*u4",
    "w01^2*u0 + w12^2*u2 + w13^2*u3 + w14^2*u4",
];

/// Right column; row `k` of the display pairs `LEFT[k]` with `RIGHT[k]`
/// for the w-only block (rows 0, 1) and `LEFT[k + 1]` with `RIGHT[k]`
/// for the second block.
const RIGHT: [&str; 9] = [
    "w04*w23 - w03*w24 - w02*w34",
    "w04*w12 - w02*w14 - w01*w24",
    "w01*w14*u1 - w02*w24*u2 + w03*w34*u3",
    "w01*w12*u1 + w03*w23*u3 + w04*w24*u4",
    "w02*w04*u0 + w12*w14*u1 + w23*w34*u3",
    "w02*w03*u0 - w12*w13*u1 - w24*w34*u4",
    "w01*w02*u0 + w13*w23*u3 - w14*w24*u4",
    "w03^2*u0 + w13^2*u1 + w23^2*u2 + w34^2*u4",
    "w04^2*u0 + w14^2*u1 + w24^2*u2 + w34^2*u3",
];

/// Ways of reading the two-column display as a list of 20 equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Linearization {
    /// Across each display row, then down.
    RowMajor,
    /// Down the left column, then down the right column.
    ColumnMajor,
    /// Column by column inside each of the two blocks.
    BlockColumnMajor,
}

impl Linearization {
    pub const ALL: [Linearization; 3] =
        [Linearization::RowMajor, Linearization::ColumnMajor, Linearization::BlockColumnMajor];

    pub fn name(self) -> &'static str {
        match self {
            Linearization::RowMajor => "row-major",
            Linearization::ColumnMajor => "column-major",
            Linearization::BlockColumnMajor => "block-column-major",
        }
    }

    /// Display entries in reading order.
    pub fn texts(self) -> Vec<&'static str> {
        match self {
            Linearization::RowMajor => {
                let mut out = vec![LEFT[0], RIGHT[0], LEFT[1], RIGHT[1], LEFT[2]];
                for k in 0..7 {
                    out.push(LEFT[3 + k]);
                    out.push(RIGHT[2 + k]);
                }
                out.push(LEFT[10]);
                out
            }
            Linearization::ColumnMajor => LEFT.iter().chain(RIGHT.iter()).copied().collect(),
            Linearization::BlockColumnMajor => {
                let mut out = vec![LEFT[0], LEFT[1], LEFT[2], RIGHT[0], RIGHT[1]];
                out.extend_from_slice(&LEFT[3..]);
                out.extend_from_slice(&RIGHT[2..]);
                out
            }
        }
    }
}

/// Variables, grading and equations of the ambient space.
#[derive(Clone, Debug)]
pub struct AmbientModel {
    pub ring: Ring,
    pub ideal: Ideal<Rational>,
    /// 5 x 15 weight matrix; column `v` is the degree of variable `v`.
    pub weights: IntMatrix,
    pub linearization: Linearization,
}

impl AmbientModel {
    pub fn new(linearization: Linearization) -> Self {
        let ring = Ring::new(variable_names(), MonomialOrder::Grevlex);
        let gens: Vec<QPoly> = linearization
            .texts()
            .iter()
            .map(|t| ring.parse(t).expect("built-in equation parses"))
            .collect();
        AmbientModel {
            ideal: Ideal::new(ring.clone(), gens),
            ring,
            weights: weight_matrix(),
            linearization,
        }
    }

    pub fn standard() -> Self {
        Self::new(Linearization::RowMajor)
    }

    pub fn generators(&self) -> &[QPoly] {
        &self.ideal.generators
    }

    /// Per-variable weight vectors, as needed for homogeneity checks.
    pub fn weight_vectors(&self) -> Vec<Vec<i64>> {
        (0..NUM_VARS)
            .map(|v| {
                self.weights
                    .column(v)
                    .iter()
                    .map(|x| i64::try_from(x).expect("small weight"))
                    .collect()
            })
            .collect()
    }

    pub fn var_name(&self, v: usize) -> &str {
        &self.ring.names()[v]
    }

    pub fn text(&self, p: &QPoly) -> String {
        self.ring.to_text(p)
    }
}

/// Column `w_ij` is `e_i + e_j`, column `u_k` is `-2 e_k`.
pub fn weight_matrix() -> IntMatrix {
    Matrix::from_fn(5, NUM_VARS, |r, v| {
        let x = if v < 10 {
            let (i, j) = W_PAIRS[v];
            i64::from(r == i || r == j)
        } else if v - 10 == r {
            -2
        } else {
            0
        };
        BigInt::from(x)
    })
}

/// Variable permutation induced by a permutation of `{0..4}`.
pub fn induced_variable_permutation(perm: &[usize; 5]) -> [usize; NUM_VARS] {
    let mut out = [0; NUM_VARS];
    for (v, &(i, j)) in W_PAIRS.iter().enumerate() {
        out[v] = w_index(perm[i], perm[j]);
    }
    for k in 0..5 {
        out[u_index(k)] = u_index(perm[k]);
    }
    out
}

/// The cyclic shift `i -> i + s mod 5`.
pub fn cyclic_shift(s: usize) -> [usize; 5] {
    let mut p = [0; 5];
    for (i, x) in p.iter_mut().enumerate() {
        *x = (i + s) % 5;
    }
    p
}

/// Renames variable `v` to `vars[v]`, multiplying each `w` variable by
/// `signs[v]` (entries ±1; only the first 10 are used).
pub fn apply_signed_permutation(p: &QPoly, vars: &[usize; NUM_VARS], signs: &[i64; 10]) -> QPoly {
    let images: Vec<QPoly> = (0..NUM_VARS)
        .map(|v| {
            let x = MultiPoly::var(vars[v], NUM_VARS, p.order());
            if v < 10 && signs[v] < 0 {
                -&x
            } else {
                x
            }
        })
        .collect();
    p.compose(&images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_orders_are_permutations() {
        let row = Linearization::RowMajor.texts();
        for lin in Linearization::ALL {
            let mut t = lin.texts();
            assert_eq!(t.len(), NUM_GENERATORS);
            t.sort();
            let mut r = row.clone();
            r.sort();
            assert_eq!(t, r);
        }
        assert_eq!(row[1], "w04*w23 - w03*w24 - w02*w34");
        assert_eq!(row[19], "w01^2*u0 + w12^2*u2 + w13^2*u3 + w14^2*u4");
    }

    #[test]
    fn weights() {
        let m = AmbientModel::standard();
        let wv = m.weight_vectors();
        assert_eq!(wv[w_index(1, 3)], vec![0, 1, 0, 1, 0]);
        assert_eq!(wv[u_index(2)], vec![0, 0, -2, 0, 0]);
        assert_eq!(m.var_name(9), "w34");
    }
}
