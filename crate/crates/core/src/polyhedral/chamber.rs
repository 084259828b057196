use super::cone::Cone;
use super::lp::{maximize, LpOutcome};
use crate::error::CoreError;
use crate::matrix::Matrix;
use crate::scalar::OrderedField;

/// `{x : normal.x = 0}`, the normal already expressed in standard
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane<T> {
    pub normal: Vec<T>,
}

impl<T: OrderedField> Hyperplane<T> {
    pub fn standard(normal: Vec<T>) -> Self {
        assert!(normal.iter().any(|x| !x.is_zero()), "zero normal");
        Hyperplane { normal }
    }

    /// The hyperplane perpendicular to `class` under the symmetric bilinear
    /// form with Gram matrix `gram`.
    pub fn orthogonal_to(class: &[T], gram: &Matrix<T>) -> Self {
        Self::standard(gram.mul_vec(class))
    }

    pub fn evaluate(&self, x: &[T]) -> T {
        self.normal.iter().zip(x).fold(T::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Negative,
    Positive,
}

impl Side {
    pub fn symbol(self) -> char {
        match self {
            Side::Negative => '-',
            Side::Positive => '+',
        }
    }
}

/// An open region of the arrangement, identified by its side of every wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber<T> {
    pub signs: Vec<Side>,
    pub witness: Vec<T>,
}

impl<T: OrderedField> Chamber<T> {
    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| s.symbol()).collect()
    }
}

/// Side of every wall for a point lying on none of them.
pub fn sign_vector<T: OrderedField>(walls: &[Hyperplane<T>], x: &[T]) -> Option<Vec<Side>> {
    walls
        .iter()
        .map(|w| {
            let v = w.evaluate(x);
            if v.is_positive() {
                Some(Side::Positive)
            } else if v.is_negative() {
                Some(Side::Negative)
            } else {
                None
            }
        })
        .collect()
}

/// Interior point of `ambient` strictly on the prescribed sides, if any.
pub fn region_witness<T: OrderedField>(
    ambient: &Cone<T>,
    walls: &[(&Hyperplane<T>, Side)],
) -> Option<Vec<T>> {
    let gens = ambient.generators();
    let (m, h) = (gens.len(), walls.len());
    // Columns: lambda (m), s, slack_g (m), slack_w (h), t. Maximize s.
    let s = m;
    let cols = 2 * m + h + 2;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for k in 0..m {
        let mut row = vec![T::zero(); cols];
        row[k] = T::one();
        row[s] = -T::one();
        row[s + 1 + k] = -T::one();
        rows.push(row);
        rhs.push(T::zero());
    }
    for (w, (plane, side)) in walls.iter().enumerate() {
        let mut row = vec![T::zero(); cols];
        for (k, g) in gens.iter().enumerate() {
            let v = plane.evaluate(g);
            row[k] = if *side == Side::Positive { v } else { -v };
        }
        row[s] = -T::one();
        row[s + 1 + m + w] = -T::one();
        rows.push(row);
        rhs.push(T::zero());
    }
    let mut row = vec![T::zero(); cols];
    row[s] = T::one();
    row[cols - 1] = T::one();
    rows.push(row);
    rhs.push(T::one());
    let mut cost = vec![T::zero(); cols];
    cost[s] = T::one();
    match maximize(&Matrix::from_rows(rows), &rhs, &cost) {
        LpOutcome::Optimal { value, x } if value.is_positive() => {
            let mut p = vec![T::zero(); ambient.dim()];
            for (k, g) in gens.iter().enumerate() {
                for (pi, gi) in p.iter_mut().zip(g) {
                    *pi = pi.add_ref(&x[k].mul_ref(gi));
                }
            }
            Some(p)
        }
        _ => None,
    }
}

/// All full-dimensional regions cut out of `ambient` by `walls`, found by
/// inserting the walls one at a time and splitting every region they cross.
pub fn enumerate_chambers<T: OrderedField>(
    ambient: &Cone<T>,
    walls: &[Hyperplane<T>],
) -> Result<Vec<Chamber<T>>, CoreError> {
    if !ambient.is_full_dimensional() {
        return Err(CoreError::AmbientNotFullDimensional);
    }
    for w in walls {
        if w.normal.len() != ambient.dim() {
            return Err(CoreError::DimensionMismatch { expected: ambient.dim(), found: w.normal.len() });
        }
    }
    let mut chambers = vec![Chamber { signs: Vec::new(), witness: ambient.generator_sum() }];
    for (idx, wall) in walls.iter().enumerate() {
        if ambient.generators().iter().all(|g| wall.evaluate(g).is_zero()) {
            return Err(CoreError::DegenerateWall(idx));
        }
        let mut next = Vec::with_capacity(chambers.len() * 2);
        for ch in chambers {
            let v = wall.evaluate(&ch.witness);
            let mut constraints: Vec<(&Hyperplane<T>, Side)> =
                walls[..idx].iter().zip(ch.signs.iter().copied()).collect();
            let mut parts = Vec::with_capacity(2);
            for side in [Side::Negative, Side::Positive] {
                let current_ok = match side {
                    Side::Positive => v.is_positive(),
                    Side::Negative => v.is_negative(),
                };
                let witness = if current_ok {
                    Some(ch.witness.clone())
                } else {
                    constraints.push((wall, side));
                    let w = region_witness(ambient, &constraints);
                    constraints.pop();
                    w
                };
                if let Some(witness) = witness {
                    let mut signs = ch.signs.clone();
                    signs.push(side);
                    parts.push(Chamber { signs, witness });
                }
            }
            next.extend(parts);
        }
        chambers = next;
    }
    Ok(chambers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Rational};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn quadrant_examples() {
        let quad: Cone = Cone::orthant(2);
        assert_eq!(enumerate_chambers(&quad, &[]).unwrap().len(), 1);
        let diag = Hyperplane::standard(q(&[1, -1]));
        let ch = enumerate_chambers(&quad, std::slice::from_ref(&diag)).unwrap();
        assert_eq!(ch.len(), 2);
        for c in &ch {
            assert_eq!(sign_vector(std::slice::from_ref(&diag), &c.witness).unwrap(), c.signs);
            assert!(quad.contains_relative_interior(&c.witness));
        }
        // A wall missing the open quadrant does not split it.
        let outside = Hyperplane::standard(q(&[1, 1]));
        assert_eq!(enumerate_chambers(&quad, &[outside]).unwrap().len(), 1);
    }

    #[test]
    fn errors() {
        let ray: Cone = Cone::new(2, vec![q(&[1, 0])]);
        assert_eq!(enumerate_chambers(&ray, &[]), Err(CoreError::AmbientNotFullDimensional));
    }
}
