//! The intersection form on the Picard space of the del Pezzo surface of
//! degree 5, chamber decompositions of its effective cone and of the
//! movable cone of the resolutions, and the central fibre.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use symres_core::polyhedral::{enumerate_chambers, sign_vector, Chamber, Cone, Hyperplane, Side};
use symres_core::scalar::{rat, rat_int};
use symres_core::{Matrix, Rational};

use crate::error::GeometryError;
use crate::group::Check;
use crate::model::W_PAIRS;
use crate::stability::permutations5;

pub type Class = Vec<Rational>;

/// Gram matrix with `e_i^2 = -3` and `e_i e_j = 1`.
pub fn gram() -> Matrix<Rational> {
    Matrix::from_fn(5, 5, |r, c| rat_int(if r == c { -3 } else { 1 }))
}

pub fn pair(a: &[Rational], b: &[Rational]) -> Rational {
    let g = gram();
    let gb = g.mul_vec(b);
    a.iter().zip(&gb).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn e(i: usize) -> Class {
    (0..5).map(|k| rat_int(i64::from(k == i))).collect()
}

pub fn kappa() -> Class {
    vec![rat_int(1); 5]
}

fn lin(a: i64, x: &[Rational], b: i64, y: &[Rational], d: i64) -> Class {
    x.iter().zip(y).map(|(p, q)| (p * rat_int(a) + q * rat_int(b)) / rat_int(d)).collect()
}

/// `(e_i + e_j) / 2`.
pub fn f(i: usize, j: usize) -> Class {
    lin(1, &e(i), 1, &e(j), 2)
}

/// `(kappa - e_i) / 2`.
pub fn c(i: usize) -> Class {
    lin(1, &kappa(), -1, &e(i), 2)
}

/// `(kappa + e_i) / 2`.
pub fn alpha(i: usize) -> Class {
    lin(1, &kappa(), 1, &e(i), 2)
}

/// `(kappa - e_i) / 2`, the same vector as `c(i)`.
pub fn beta(i: usize) -> Class {
    c(i)
}

/// Whether `x` lies in the lattice of half-integral vectors whose doubled
/// coordinates have even sum.
pub fn in_lattice(x: &[Rational]) -> bool {
    let doubled: Vec<Rational> = x.iter().map(|v| v * rat_int(2)).collect();
    doubled.iter().all(|v| v.is_integer())
        && doubled.iter().fold(Rational::zero(), |a, v| a + v).to_integer() % 2 == num_bigint::BigInt::zero()
}

/// `(positive, negative)` inertia of a symmetric matrix by congruence
/// elimination.
pub fn signature(m: &Matrix<Rational>) -> (usize, usize) {
    let n = m.rows();
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    let add = |a: &mut Matrix<Rational>, to: usize, from: usize, f: &Rational| {
        for c in 0..n {
            let v = a.get(to, c) + f * a.get(from, c);
            a.set(to, c, v);
        }
        for r in 0..n {
            let v = a.get(r, to) + f * a.get(r, from);
            a.set(r, to, v);
        }
    };
    for k in 0..n {
        if a.get(k, k).is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                a.swap_rows(k, j);
                a.swap_cols(k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a.get(k, j).is_zero()) {
                // Both diagonal entries vanish, so the new one is twice a_kj.
                add(&mut a, k, j, &Rational::one());
            } else {
                continue;
            }
        }
        let p = a.get(k, k).clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in k + 1..n {
            let factor = -(a.get(r, k) / &p);
            if !factor.is_zero() {
                add(&mut a, r, k, &factor);
            }
        }
    }
    (pos, neg)
}

pub fn verify_p24_geometry() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(Check::new("kappa^2 = 5", pair(&kappa(), &kappa()) == rat_int(5)));
    out.push(Check::new("f_ij^2 = -1", W_PAIRS.iter().all(|&(i, j)| pair(&f(i, j), &f(i, j)) == rat_int(-1))));
    out.push(Check::new(
        "kappa.e_i = kappa.f_ij = 1",
        (0..5).all(|i| pair(&kappa(), &e(i)).is_one()) && W_PAIRS.iter().all(|&(i, j)| pair(&kappa(), &f(i, j)).is_one()),
    ));
    let mut f_ok = true;
    for &(i, j) in &W_PAIRS {
        for &(p, q) in &W_PAIRS {
            let mut s = vec![i, j, p, q];
            s.sort_unstable();
            s.dedup();
            f_ok &= pair(&f(i, j), &f(p, q)) == rat_int(s.len() as i64 - 3);
        }
    }
    out.push(Check::new("F_ij.F_pq = |{i,j} u {p,q}| - 3", f_ok));
    let dual = (0..5).all(|i| (0..5).all(|j| pair(&e(i), &c(j)) == rat_int(if i == j { 2 } else { 0 })));
    out.push(Check::new("e_i.c_j = 2 delta_ij", dual));
    let mut facet_c = true;
    let mut facet_alpha = true;
    for i in 0..5 {
        for &(p, q) in &W_PAIRS {
            let touches = p == i || q == i;
            facet_c &= touches || pair(&f(p, q), &c(i)).is_zero();
            facet_c &= !touches || !pair(&f(p, q), &c(i)).is_zero();
            facet_alpha &= !touches || pair(&f(p, q), &alpha(i)).is_zero();
            facet_alpha &= touches || !pair(&f(p, q), &alpha(i)).is_zero();
        }
    }
    out.push(Check::new("c_i is orthogonal to exactly the six f_pq with i not in {p,q}", facet_c));
    out.push(Check::new("(kappa+e_i)/2 is orthogonal to exactly the four f_pq with i in {p,q}", facet_alpha));
    let nef = (0..5).all(|i| {
        let plus = lin(1, &kappa(), 1, &e(i), 1);
        let minus = lin(1, &kappa(), -1, &e(i), 1);
        W_PAIRS
            .iter()
            .all(|&(p, q)| !pair(&plus, &f(p, q)).is_negative() && !pair(&minus, &f(p, q)).is_negative())
    });
    out.push(Check::new("kappa +- e_i pair non-negatively with every f_pq", nef));
    out.push(Check::new("signature (1,4)", signature(&gram()) == (1, 4)));
    out.push(Check::new(
        "lattice membership",
        in_lattice(&f(0, 1)) && in_lattice(&kappa()) && !in_lattice(&lin(1, &e(0), 0, &e(0), 2)) && in_lattice(&c(0)),
    ));
    out
}

/// A chamber census: chambers, orbits of the index permutations and the
/// orbit sizes.
#[derive(Clone, Debug)]
pub struct ChamberCensus {
    pub walls: Vec<Hyperplane<Rational>>,
    pub chambers: Vec<Chamber<Rational>>,
    /// Orbit index of every chamber; orbits are numbered by first member.
    pub orbit_of: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
}

impl ChamberCensus {
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    pub fn index_of(&self, x: &[Rational]) -> Option<usize> {
        let s = sign_vector(&self.walls, x)?;
        self.chambers.iter().position(|c| c.signs == s)
    }

    /// Whether two chambers lie on opposite sides of exactly one wall.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.chambers[a].signs.iter().zip(&self.chambers[b].signs).filter(|(x, y)| x != y).count() == 1
    }
}

fn census(ambient: &Cone<Rational>, walls: Vec<Hyperplane<Rational>>) -> Result<ChamberCensus, GeometryError> {
    let chambers = enumerate_chambers(ambient, &walls)?;
    let index: HashMap<Vec<Side>, usize> = chambers.iter().enumerate().map(|(k, c)| (c.signs.clone(), k)).collect();
    let perms = permutations5();
    let mut orbit_of = vec![usize::MAX; chambers.len()];
    let mut orbits = Vec::new();
    for k in 0..chambers.len() {
        if orbit_of[k] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = Vec::new();
        for p in &perms {
            let mut x = vec![Rational::zero(); 5];
            for (i, v) in chambers[k].witness.iter().enumerate() {
                x[p[i]] = v.clone();
            }
            let s = sign_vector(&walls, &x).ok_or_else(|| GeometryError::Malformed("walls not permutation invariant".into()))?;
            let m = *index.get(&s).ok_or_else(|| GeometryError::Malformed("image chamber missing".into()))?;
            if orbit_of[m] == usize::MAX {
                orbit_of[m] = id;
                members.push(m);
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(ChamberCensus { walls, chambers, orbit_of, orbits })
}

pub fn f_walls() -> Vec<Hyperplane<Rational>> {
    let g = gram();
    W_PAIRS.iter().map(|&(i, j)| Hyperplane::orthogonal_to(&f(i, j), &g)).collect()
}

/// The ten walls perpendicular to `f_ij`, then the five perpendicular to
/// `(kappa + e_i) / 2`.
pub fn mov_walls() -> Vec<Hyperplane<Rational>> {
    let g = gram();
    let mut walls = f_walls();
    walls.extend((0..5).map(|i| Hyperplane::orthogonal_to(&alpha(i), &g)));
    walls
}

pub fn mov_cone() -> Cone<Rational> {
    Cone::new(5, (0..5).map(e).collect())
}

pub fn eff_cone() -> Cone<Rational> {
    Cone::new(5, W_PAIRS.iter().map(|&(i, j)| f(i, j)).collect())
}

pub fn mov_census() -> Result<ChamberCensus, GeometryError> {
    census(&mov_cone(), mov_walls())
}

pub fn eff_census() -> Result<ChamberCensus, GeometryError> {
    census(&eff_cone(), f_walls())
}

/// Orbit of chambers with a name for the central surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedOrbit {
    pub name: String,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub total: usize,
    pub orbits: Vec<NamedOrbit>,
    /// Whether the rule used to tell the two orbits of size 10 apart
    /// actually separates them.
    pub discriminator_ok: bool,
}

impl CensusReport {
    pub fn sizes_by_name(&self) -> BTreeMap<String, usize> {
        self.orbits.iter().map(|o| (o.name.clone(), o.size)).collect()
    }
}

/// Names the orbits of a census. Sizes are distinct except for two
/// orbits of size 10, told apart by adjacency to the chamber of `kappa`,
/// and, in the movable cone, two of size 5, told apart by lying beyond a
/// wall perpendicular to some `(kappa + e_i) / 2`.
fn name_orbits(c: &ChamberCensus, outer_walls: Option<std::ops::Range<usize>>) -> Result<CensusReport, GeometryError> {
    let center = c.index_of(&kappa()).ok_or_else(|| GeometryError::Malformed("kappa lies on a wall".into()))?;
    let center_orbit = c.orbit_of[center];
    let center_side = c.chambers[center].signs.clone();
    let mut ok = true;
    let mut orbits = Vec::new();
    for (k, members) in c.orbits.iter().enumerate() {
        let touches_center = members.iter().any(|&m| c.adjacent(m, center));
        let beyond = |m: usize| {
            outer_walls
                .clone()
                .is_some_and(|r| r.into_iter().any(|w| c.chambers[m].signs[w] != center_side[w]))
        };
        let outer = members.iter().all(|&m| beyond(m));
        ok &= outer || members.iter().all(|&m| !beyond(m));
        let name = match (members.len(), k == center_orbit) {
            (1, true) => "P2_4",
            (10, _) if touches_center => "P2_3",
            (10, _) => "P1xP1",
            (30, _) => "P2_2",
            (20, _) => "P2_1",
            (5, _) if outer => "P2_dual",
            (5, _) => "P2",
            _ => "unnamed",
        };
        orbits.push(NamedOrbit { name: name.to_string(), size: members.len() });
    }
    let tens: Vec<&NamedOrbit> = orbits.iter().filter(|o| o.size == 10).collect();
    ok &= tens.len() == 2 && tens[0].name != tens[1].name;
    Ok(CensusReport { total: c.chambers.len(), orbits, discriminator_ok: ok })
}

pub fn mov_chamber_census() -> Result<CensusReport, GeometryError> {
    name_orbits(&mov_census()?, Some(10..15))
}

pub fn zariski_chamber_census_eff() -> Result<CensusReport, GeometryError> {
    name_orbits(&eff_census()?, None)
}

/// Compares the two decompositions: the movable chambers not in the outer
/// orbit versus the effective chambers, matched by their side of the ten
/// `f` walls. Returns the number of matched pairs and whether the
/// matching is a bijection.
pub fn compare_censuses() -> Result<(usize, bool), GeometryError> {
    let mov = mov_census()?;
    let eff = eff_census()?;
    let report = name_orbits(&mov, Some(10..15))?;
    let mut seen = vec![false; eff.chambers.len()];
    let mut matched = 0;
    let mut ok = true;
    for (k, ch) in mov.chambers.iter().enumerate() {
        if report.orbits[mov.orbit_of[k]].name == "P2_dual" {
            continue;
        }
        let f_signs = &ch.signs[..10];
        match eff.chambers.iter().position(|e| e.signs == f_signs) {
            Some(j) if !seen[j] => {
                seen[j] = true;
                matched += 1;
            }
            _ => ok = false,
        }
    }
    Ok((matched, ok && seen.iter().all(|&s| s)))
}

/// Components of the two-dimensional fibre of the central resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    pub surface: String,
    /// Exceptional divisors `E_k` containing the component.
    pub inside: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Incidence {
    pub a: String,
    pub b: String,
    pub kind: String,
    /// Self-intersection on the central component of the meeting curve.
    pub self_intersection: String,
    /// Degree of the meeting curve against `kappa`.
    pub kappa_degree: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralFibre {
    pub components: Vec<Component>,
    pub incidences: Vec<Incidence>,
}

pub fn central_fiber_incidence() -> CentralFibre {
    let mut components = vec![Component { name: "F0".into(), surface: "P2_4".into(), inside: (0..5).collect() }];
    let mut incidences = Vec::new();
    for &(i, j) in &W_PAIRS {
        let name = format!("F{i}{j}");
        components.push(Component {
            name: name.clone(),
            surface: "P2".into(),
            inside: (0..5).filter(|&k| k != i && k != j).collect(),
        });
        incidences.push(Incidence {
            a: "F0".into(),
            b: name,
            kind: "curve".into(),
            self_intersection: pair(&f(i, j), &f(i, j)).to_string(),
            kappa_degree: pair(&kappa(), &f(i, j)).to_string(),
        });
    }
    CentralFibre { components, incidences }
}

/// Whether every curve `F0 n F_ij` is a (-1)-curve of `kappa`-degree 1.
pub fn central_fibre_checks(fibre: &CentralFibre) -> Vec<Check> {
    vec![
        Check::new("eleven components", fibre.components.len() == 11),
        Check::new(
            "F0 meets each F_ij in a (-1)-curve",
            fibre.incidences.len() == 10 && fibre.incidences.iter().all(|i| i.self_intersection == rat(-1, 1).to_string()),
        ),
        Check::new("each meeting curve has kappa-degree 1", fibre.incidences.iter().all(|i| i.kappa_degree == "1")),
        Check::new(
            "F_ij lies in the three E_k with k not in {i,j}",
            fibre.components[1..].iter().all(|c| c.inside.len() == 3),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairings() {
        assert_eq!(pair(&kappa(), &kappa()), rat_int(5));
        assert_eq!(pair(&f(0, 1), &f(0, 1)), rat_int(-1));
        assert!(pair(&e(0), &c(1)).is_zero());
        assert_eq!(pair(&f(0, 1), &f(2, 3)), rat_int(1));
        assert!(pair(&f(0, 1), &f(0, 2)).is_zero());
        assert!(!pair(&c(0), &f(0, 1)).is_zero());
    }

    #[test]
    fn geometry_checklist() {
        for c in verify_p24_geometry() {
            assert!(c.passed, "{}", c.name);
        }
    }

    #[test]
    fn fibre() {
        let f = central_fiber_incidence();
        assert!(central_fibre_checks(&f).iter().all(|c| c.passed));
    }

    #[test]
    fn signature_of_small_forms() {
        let m = Matrix::from_rows(vec![vec![rat_int(0), rat_int(1)], vec![rat_int(1), rat_int(0)]]);
        assert_eq!(signature(&m), (1, 1));
        let d = Matrix::from_rows(vec![vec![rat_int(2), rat_int(0)], vec![rat_int(0), rat_int(-1)]]);
        assert_eq!(signature(&d), (1, 1));
        assert_eq!(signature(&gram()), (1, 4));
    }
}
