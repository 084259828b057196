//! Checks on the twenty ideal generators: vanishing under the eigenform
//! parametrization, homogeneity, and the Plücker relations at `u = 0`.

use serde::{Deserialize, Serialize};
use symres_core::poly::{Monomial, MultiPoly, Ring};
use symres_core::scalar::gauss;
use num_traits::Zero;
use symres_core::{GaussPoly, GaussRational, QPoly, Rational};

use crate::eigen::phi_forms;
use crate::model::{u_index, AmbientModel, NUM_VARS, W_PAIRS};

/// `x1..x4`, `t0..t4` and `s0..s4`, where `s_k` stands for `t_k^-1`.
pub fn laurent_ring() -> Ring {
    let names: Vec<String> = (1..=4)
        .map(|k| format!("x{k}"))
        .chain((0..5).map(|k| format!("t{k}")))
        .chain((0..5).map(|k| format!("s{k}")))
        .collect();
    Ring::new(names, symres_core::poly::MonomialOrder::Grevlex)
}

const X: usize = 0;
const T: usize = 4;
const S: usize = 9;
const LAURENT_VARS: usize = 14;

/// Images of the fifteen variables: `w_ij -> phi_ij t_i t_j`, `u_k -> s_k^2`.
pub fn parametrization() -> Vec<GaussPoly> {
    let ring = laurent_ring();
    let lift = |f: &GaussPoly| {
        let map: Vec<Option<usize>> = (0..4).map(|k| Some(X + k)).collect();
        f.remap(&map, LAURENT_VARS, ring.order())
    };
    let var = |k: usize| MultiPoly::var(k, LAURENT_VARS, ring.order());
    let mut out: Vec<GaussPoly> = phi_forms()
        .iter()
        .zip(W_PAIRS)
        .map(|(f, (i, j))| &(&lift(f) * &var(T + i)) * &var(T + j))
        .collect();
    out.extend((0..5).map(|k| var(S + k).pow(2)));
    out
}

/// Cancels every factor `t_k s_k`, giving the normal form in the Laurent
/// ring.
pub fn laurent_normal_form(p: &GaussPoly) -> GaussPoly {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = m.exponents(LAURENT_VARS).to_vec();
            for k in 0..5 {
                let common = e[T + k].min(e[S + k]);
                e[T + k] -= common;
                e[S + k] -= common;
            }
            (Monomial::from_exponents(&e), c.clone())
        })
        .collect();
    MultiPoly::from_terms(terms, LAURENT_VARS, p.order())
}

fn to_gauss(p: &QPoly) -> GaussPoly {
    p.map_coeffs(|c| GaussRational::new(c.clone(), Rational::zero()))
}

/// Whether each generator vanishes after substituting the parametrization.
pub fn vanishing_under_parametrization(model: &AmbientModel) -> Vec<bool> {
    let images = parametrization();
    model
        .generators()
        .iter()
        .map(|g| laurent_normal_form(&to_gauss(g).compose(&images)).is_zero())
        .collect()
}

/// The generators with every `u_k` set to zero.
pub fn generators_at_u_zero(model: &AmbientModel) -> Vec<QPoly> {
    let zero: Vec<_> = (0..5).map(|k| (u_index(k), Rational::zero())).collect();
    model.generators().iter().map(|g| g.substitute(&zero)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealCheck {
    pub generators: Vec<String>,
    pub vanishing: Vec<bool>,
    /// Multidegree of each generator, if homogeneous.
    pub degrees: Vec<Option<Vec<i64>>>,
    /// The first five generators at `u = 0`.
    pub plucker: Vec<String>,
    /// Generators six to twenty all vanish at `u = 0`.
    pub rest_vanish_at_u_zero: bool,
}

impl IdealCheck {
    pub fn passed(&self) -> bool {
        self.vanishing.iter().all(|&b| b) && self.degrees.iter().all(Option::is_some)
    }
}

pub fn ideal_check(model: &AmbientModel) -> IdealCheck {
    let weights = model.weight_vectors();
    let at_zero = generators_at_u_zero(model);
    IdealCheck {
        generators: model.generators().iter().map(|g| model.text(g)).collect(),
        vanishing: vanishing_under_parametrization(model),
        degrees: model.generators().iter().map(|g| g.homogeneous_degree(&weights)).collect(),
        plucker: at_zero[..5].iter().map(|g| model.text(g)).collect(),
        rest_vanish_at_u_zero: at_zero[5..].iter().all(MultiPoly::is_zero),
    }
}

/// Evaluates the parametrization at a point `(x, t)` with every `t_k`
/// nonzero, giving a point of the ambient space.
pub fn parametrized_point(x: &[GaussRational; 4], t: &[GaussRational; 5]) -> Vec<GaussRational> {
    let phis = phi_forms();
    let mut p: Vec<GaussRational> =
        W_PAIRS.iter().zip(&phis).map(|(&(i, j), f)| f.evaluate(x) * &t[i] * &t[j]).collect();
    p.extend(t.iter().map(|tk| gauss(1, 0) / (tk * tk)));
    debug_assert_eq!(p.len(), NUM_VARS);
    p
}
