//! Exact Jacobian ranks at sample points of the variety on a given face.

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use symres_core::scalar::gauss;
use symres_core::{GaussPoly, GaussRational, Matrix};

use crate::eigen::phi_forms;
use crate::error::GeometryError;
use crate::group::{reflections, GaussMatrix};
use crate::model::{u_index, AmbientModel, NUM_VARS, W_PAIRS};
use crate::smoothness::build_jacobian;
use crate::stability::{face_vars, FaceMask};

/// Rank of a point of the variety in the ambient space is at most this.
pub const CODIMENSION: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub face: FaceMask,
    pub witnesses: usize,
    pub skipped: usize,
    pub min_rank: usize,
    pub max_rank: usize,
}

/// Jacobian with Gaussian coefficients, ready for evaluation.
pub struct NumericJacobian {
    entries: Matrix<GaussPoly>,
    gens: Vec<GaussPoly>,
}

fn to_gauss(p: &symres_core::QPoly) -> GaussPoly {
    p.map_coeffs(|c| GaussRational::new(c.clone(), Zero::zero()))
}

impl NumericJacobian {
    pub fn new(model: &AmbientModel) -> Self {
        NumericJacobian {
            entries: build_jacobian(model).entries.map(to_gauss),
            gens: model.generators().iter().map(to_gauss).collect(),
        }
    }

    pub fn on_variety(&self, point: &[GaussRational]) -> bool {
        self.gens.iter().all(|g| g.evaluate(point).is_zero())
    }

    pub fn rank_at(&self, point: &[GaussRational]) -> usize {
        self.entries.map(|p| p.evaluate(point)).rank()
    }
}

fn small_gauss(rng: &mut StdRng) -> GaussRational {
    gauss(rng.gen_range(-2..=2), rng.gen_range(-2..=2))
}

fn nonzero_int(rng: &mut StdRng) -> GaussRational {
    let mut t = 0;
    while t == 0 {
        t = rng.gen_range(-3..=3);
    }
    gauss(t, 0)
}

fn combination(basis: &[Vec<GaussRational>], rng: &mut StdRng) -> Vec<GaussRational> {
    let mut out = vec![GaussRational::zero(); 4];
    for b in basis {
        let c = small_gauss(rng);
        for (o, x) in out.iter_mut().zip(b) {
            *o = o.clone() + c.clone() * x.clone();
        }
    }
    out
}

fn eigenspace(t: &GaussMatrix, sign: i64) -> Vec<Vec<GaussRational>> {
    let n = t.rows();
    Matrix::from_fn(n, n, |r, c| t.get(r, c).clone() - if r == c { gauss(sign, 0) } else { gauss(0, 0) }).kernel()
}

/// A point of the variety built from the quadratic forms: on the open
/// torus orbit `w_ij = phi_ij(x) t_i t_j`, `u_k = t_k^-2`; with `u_a = 0`
/// the limit of that curve as `t_a` grows along `x = x0 + y / t_a`, where
/// `x0` is fixed by `T_a` and `y` is negated by it.
fn sample_point(zero_u: Option<usize>, phis: &[GaussPoly], rng: &mut StdRng) -> Vec<GaussRational> {
    let t: Vec<GaussRational> = (0..5).map(|_| nonzero_int(rng)).collect();
    let mut point = vec![GaussRational::zero(); NUM_VARS];
    for k in 0..5 {
        point[u_index(k)] = gauss(1, 0) / (t[k].clone() * t[k].clone());
    }
    match zero_u {
        None => {
            let x: Vec<GaussRational> = (0..4).map(|_| small_gauss(rng)).collect();
            for (v, &(i, j)) in W_PAIRS.iter().enumerate() {
                point[v] = phis[v].evaluate(&x) * t[i].clone() * t[j].clone();
            }
        }
        Some(a) => {
            let ta = &reflections()[a];
            let x0 = combination(&eigenspace(ta, 1), rng);
            let y = combination(&eigenspace(ta, -1), rng);
            let sum: Vec<GaussRational> = x0.iter().zip(&y).map(|(p, q)| p.clone() + q.clone()).collect();
            for (v, &(i, j)) in W_PAIRS.iter().enumerate() {
                point[v] = if i == a || j == a {
                    let other = if i == a { j } else { i };
                    let polar = phis[v].evaluate(&sum) - phis[v].evaluate(&x0) - phis[v].evaluate(&y);
                    polar * t[other].clone()
                } else {
                    phis[v].evaluate(&x0) * t[i].clone() * t[j].clone()
                };
            }
            point[u_index(a)] = GaussRational::zero();
        }
    }
    point
}

pub fn face_of(point: &[GaussRational]) -> FaceMask {
    point.iter().enumerate().filter(|(_, x)| !x.is_zero()).fold(0, |m, (v, _)| m | 1 << v)
}

/// Samples `trials` points and records the Jacobian rank at those lying on
/// the torus of `face`. Faces with two or more vanishing `u` coordinates
/// are out of reach of the sampler.
pub fn random_rank_probe(
    model: &AmbientModel,
    face: FaceMask,
    trials: usize,
    seed: u64,
) -> Result<ProbeResult, GeometryError> {
    let vars = face_vars(face);
    let zero_u: Vec<usize> = (0..5).filter(|&k| !vars.contains(&u_index(k))).collect();
    if zero_u.len() > 1 {
        return Err(GeometryError::NoWitness(format!("face {face:#06x} has {} vanishing u", zero_u.len())));
    }
    let jac = NumericJacobian::new(model);
    let phis = phi_forms();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut ranks = Vec::new();
    let mut skipped = 0;
    for _ in 0..trials {
        let p = sample_point(zero_u.first().copied(), &phis, &mut rng);
        if !jac.on_variety(&p) {
            return Err(GeometryError::Malformed("sampled point is not on the variety".into()));
        }
        if face_of(&p) != face {
            skipped += 1;
            continue;
        }
        ranks.push(jac.rank_at(&p));
    }
    if ranks.is_empty() {
        return Err(GeometryError::NoWitness(format!("no sample landed on face {face:#06x}")));
    }
    Ok(ProbeResult {
        face,
        witnesses: ranks.len(),
        skipped,
        min_rank: *ranks.iter().min().unwrap(),
        max_rank: *ranks.iter().max().unwrap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::FULL_FACE;

    #[test]
    fn open_orbit_has_full_rank() {
        let m = AmbientModel::standard();
        let r = random_rank_probe(&m, FULL_FACE, 5, 1).unwrap();
        assert!(r.witnesses > 0);
        assert_eq!((r.min_rank, r.max_rank), (CODIMENSION, CODIMENSION));
    }

    #[test]
    fn unreachable_face() {
        let m = AmbientModel::standard();
        let face = FULL_FACE & !(1 << u_index(0)) & !(1 << u_index(1));
        assert!(matches!(random_rank_probe(&m, face, 3, 1), Err(GeometryError::NoWitness(_))));
    }
}
