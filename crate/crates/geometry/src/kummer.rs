//! Quaternion-group actions on 2-torsion points of products of the
//! elliptic curve `C / Z[i]`, reduced to modules over `Z[i]/2`.

use std::collections::{BTreeSet, HashSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use symres_core::scalar::{gauss, gauss_to_int, rat};
use symres_core::z2i::all_vectors;
use symres_core::{kernel_over_z2i, GaussRational, Matrix, Rational, Z2i};

use crate::error::GeometryError;
use crate::group::{generate_group, is_minus_identity, reflections, FiniteMatrixGroup, GaussMatrix};

fn gm<const N: usize>(rows: [[(i64, i64); N]; N]) -> GaussMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&(a, b)| gauss(a, b)).collect()).collect())
}

/// The standard quaternion representation `(A_I, A_J, A_K)`.
pub fn rep_a() -> [GaussMatrix; 3] {
    [
        gm([[(0, 1), (0, 0)], [(0, 0), (0, -1)]]),
        gm([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]]),
        gm([[(0, 0), (0, 1)], [(0, 1), (0, 0)]]),
    ]
}

/// A second representation `(B_I, B_J, B_K)` with four fixed points.
pub fn rep_b() -> [GaussMatrix; 3] {
    [
        gm([[(0, 1), (0, 0)], [(1, 1), (0, -1)]]),
        gm([[(0, -1), (-1, 1)], [(0, 0), (0, 1)]]),
        gm([[(1, 0), (-1, -1)], [(1, -1), (-1, 0)]]),
    ]
}

/// The conjugated reflections `T'_0..T'_4` over `Z[i]`.
pub fn kummer_reflections() -> Vec<GaussMatrix> {
    vec![
        gm([[(1, 0), (0, 0), (0, 0), (0, 0)], [(0, 0), (-1, 0), (0, 0), (0, 0)], [(0, 0), (-1, 1), (1, 0), (0, 0)], [(1, -1), (0, 0), (0, 0), (-1, 0)]]),
        gm([[(0, 1), (-1, -1), (0, 0), (1, -1)], [(0, 0), (0, -1), (-1, 1), (0, 0)], [(0, 0), (-1, -1), (0, 1), (0, 0)], [(1, 1), (0, 0), (-1, -1), (0, -1)]]),
        gm([[(1, 0), (0, 0), (0, 0), (-1, -1)], [(0, 0), (-1, 0), (1, 1), (0, 0)], [(0, 0), (0, 0), (1, 0), (0, 0)], [(0, 0), (0, 0), (0, 0), (-1, 0)]]),
        gm([[(0, 1), (0, 0), (0, 0), (1, -1)], [(1, -1), (0, -1), (-1, 1), (0, 0)], [(0, 0), (-1, -1), (0, 1), (1, -1)], [(1, 1), (0, 0), (0, 0), (0, -1)]]),
        gm([[(1, 0), (-1, 1), (0, 0), (-1, -1)], [(-1, -1), (-1, 0), (1, 1), (0, 0)], [(0, 0), (-1, 1), (1, 0), (-1, -1)], [(1, -1), (0, 0), (-1, 1), (-1, 0)]]),
    ]
}

/// The change of basis carrying `T_i` to `T'_i`.
pub fn w_matrix() -> GaussMatrix {
    let h = |a: i64, b: i64| GaussRational::new(rat(a, 2), rat(b, 2));
    let z = gauss(0, 0);
    Matrix::from_rows(vec![
        vec![gauss(1, 0), h(1, -1), gauss(-1, 0), z.clone()],
        vec![gauss(1, 0), h(-1, 1), z.clone(), gauss(-1, -1)],
        vec![z.clone(), h(-1, -1), gauss(0, 1), z.clone()],
        vec![z.clone(), h(1, 1), z.clone(), z],
    ])
}

/// Whether `T'_i = W^-1 T_i W` for each `i`, for a given `W`.
pub fn verify_conjugation_with(w: &GaussMatrix) -> Vec<bool> {
    let Some(w_inv) = w.inverse() else {
        return vec![false; 5];
    };
    reflections()
        .iter()
        .zip(kummer_reflections())
        .map(|(t, tp)| &(&w_inv * t) * w == tp)
        .collect()
}

pub fn verify_conjugation() -> bool {
    verify_conjugation_with(&w_matrix()).iter().all(|&b| b)
}

/// Entrywise reduction of a Gaussian-integer matrix modulo 2.
pub fn reduce(m: &GaussMatrix) -> Result<Matrix<Z2i>, GeometryError> {
    let mut bad = false;
    let r = m.map(|x| match gauss_to_int(x) {
        Some(z) => Z2i::from_gauss(&z),
        None => {
            bad = true;
            Z2i::ZERO
        }
    });
    if bad {
        return Err(GeometryError::Malformed("matrix is not over Z[i]".into()));
    }
    Ok(r)
}

fn mul_vec(m: &Matrix<Z2i>, v: &[Z2i]) -> Vec<Z2i> {
    m.mul_vec(v)
}

/// Points of `M^r` fixed by `g`.
pub fn fixed_points_2torsion(g: &Matrix<Z2i>) -> Result<Vec<Vec<Z2i>>, GeometryError> {
    let shifted = Matrix::from_fn(g.rows(), g.cols(), |r, c| if r == c { *g.get(r, c) + Z2i::ONE } else { *g.get(r, c) });
    Ok(kernel_over_z2i(&shifted)?)
}

/// `M_0^r = (1+i) M^r`.
pub fn is_in_m0(v: &[Z2i]) -> bool {
    v.iter().all(|&x| x == Z2i::ZERO || x == Z2i::ONE_PLUS_I)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IsotropyProfile {
    pub n8: usize,
    pub n4: usize,
    pub n2: usize,
}

impl IsotropyProfile {
    /// `n8 + 2 n4 + 4 n2 = 16` and `4 n8 + 3 n4 + n2 = 19`.
    pub fn satisfies_equations(&self) -> bool {
        self.n8 + 2 * self.n4 + 4 * self.n2 == 16 && 4 * self.n8 + 3 * self.n4 + self.n2 == 19
    }
}

impl std::fmt::Display for IsotropyProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n8, self.n4, self.n2)
    }
}

/// All non-negative solutions of the two counting equations with `n8 > 0`.
pub fn profile_equation_solutions() -> Vec<IsotropyProfile> {
    let mut out = Vec::new();
    for n8 in 1..=16 {
        for n4 in 0..=8 {
            for n2 in 0..=4 {
                let p = IsotropyProfile { n8, n4, n2 };
                if p.satisfies_equations() {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Isotropy of a quaternion group acting on the sixteen points of `M^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Q8Action {
    /// Counted from stabilizer sizes and normalizer indices.
    pub profile: IsotropyProfile,
    /// Counted from explicit orbits.
    pub orbit_profile: IsotropyProfile,
    /// Stabilizer order of each point, points in code order.
    pub stabilizer_orders: Vec<usize>,
}

fn is_q8(g: &FiniteMatrixGroup) -> bool {
    let orders: Vec<usize> = (0..g.order()).map(|k| g.element_order(k)).collect();
    g.order() == 8
        && orders.iter().filter(|&&o| o == 4).count() == 6
        && (0..g.order()).filter(|&k| orders[k] == 2).all(|k| is_minus_identity(g.element(k)))
}

/// The profile of an order-8 quaternion group of 2x2 matrices over `Z[i]`.
pub fn q8_action(g: &FiniteMatrixGroup) -> Result<Q8Action, GeometryError> {
    if !is_q8(g) {
        return Err(GeometryError::NotQ8Rep(format!("group of order {} is not quaternion", g.order())));
    }
    let reduced: Vec<Matrix<Z2i>> = g.elements().iter().map(reduce).collect::<Result<_, _>>()?;
    let points: Vec<Vec<Z2i>> = all_vectors(2).collect();
    let stabilizer_orders: Vec<usize> = points
        .iter()
        .map(|x| reduced.iter().filter(|m| mul_vec(m, x) == *x).count())
        .collect();
    let count = |s: usize| stabilizer_orders.iter().filter(|&&o| o == s).count();
    // A point with stabilizer of order s lies in an orbit of 8/s points.
    let profile = IsotropyProfile { n8: count(8), n4: count(4) / 2, n2: count(2) / 4 };
    let mut seen = HashSet::new();
    let mut orbit_profile = IsotropyProfile { n8: 0, n4: 0, n2: 0 };
    for x in &points {
        if seen.contains(x) {
            continue;
        }
        let orbit: BTreeSet<Vec<Z2i>> = reduced.iter().map(|m| mul_vec(m, x)).collect();
        match orbit.len() {
            1 => orbit_profile.n8 += 1,
            2 => orbit_profile.n4 += 1,
            4 => orbit_profile.n2 += 1,
            n => return Err(GeometryError::Malformed(format!("orbit of size {n} in M^2"))),
        }
        seen.extend(orbit);
    }
    Ok(Q8Action { profile, orbit_profile, stabilizer_orders })
}

/// Profile of the representation generated by `(X, Y, Z)`, after checking
/// `X^2 = Y^2 = -1` and `Z = +-XY`.
pub fn q8_profile(gens: &[GaussMatrix; 3]) -> Result<Q8Action, GeometryError> {
    let [x, y, z] = gens;
    let xy = x * y;
    let minus_xy = xy.map(|v| -v.clone());
    if !is_minus_identity(&(x * x)) || !is_minus_identity(&(y * y)) || (*z != xy && *z != minus_xy) {
        return Err(GeometryError::NotQ8Rep("quaternion relations fail".into()));
    }
    q8_action(&generate_group(2, gens)?)
}

fn round(q: &Rational) -> Rational {
    q.round()
}

/// Nearest Gaussian integer to `a / b`.
fn gauss_quotient(a: &GaussRational, b: &GaussRational) -> GaussRational {
    let q = a / b;
    GaussRational::new(round(&q.re), round(&q.im))
}

fn norm(z: &GaussRational) -> Rational {
    &z.re * &z.re + &z.im * &z.im
}

/// A basis of the `Z[i]`-lattice spanned by integral vectors, in echelon
/// form.
pub fn lattice_basis(mut pool: Vec<Vec<GaussRational>>) -> Vec<Vec<GaussRational>> {
    let n = pool.first().map_or(0, Vec::len);
    let mut basis = Vec::new();
    for r in 0..n {
        loop {
            pool.retain(|v| v.iter().any(|x| !x.is_zero()));
            let live: Vec<usize> = (0..pool.len()).filter(|&k| !pool[k][r].is_zero()).collect();
            if live.len() <= 1 {
                if let Some(&k) = live.first() {
                    basis.push(pool.swap_remove(k));
                }
                break;
            }
            let p = *live.iter().min_by_key(|&&k| norm(&pool[k][r])).unwrap();
            let pivot = pool[p].clone();
            for &k in &live {
                if k != p {
                    let q = gauss_quotient(&pool[k][r], &pivot[r]);
                    for (x, y) in pool[k].iter_mut().zip(&pivot) {
                        *x = &*x - &(&q * y);
                    }
                }
            }
        }
    }
    basis
}

/// A basis of the saturated lattice of vectors in `Z[i]^n` fixed by an
/// involution `t`.
pub fn fixed_lattice(t: &GaussMatrix) -> Vec<Vec<GaussRational>> {
    let n = t.rows();
    let plus = Matrix::from_fn(n, n, |r, c| if r == c { t.get(r, c) + gauss(1, 0) } else { t.get(r, c).clone() });
    // Every fixed v satisfies 2v = (1+t)v, so the lattice lies between
    // the image of 1+t and half of it.
    let image = lattice_basis((0..n).map(|c| plus.column(c)).collect());
    let half = GaussRational::new(rat(1, 2), Rational::zero());
    let mut pool = image.clone();
    for coeffs in all_vectors(image.len()) {
        let v: Vec<GaussRational> = (0..n)
            .map(|row| {
                coeffs.iter().zip(&image).fold(GaussRational::zero(), |acc, (c, b)| {
                    acc + lift(*c) * &b[row]
                }) * &half
            })
            .collect();
        if v.iter().all(|x| gauss_to_int(x).is_some()) {
            pool.push(v);
        }
    }
    lattice_basis(pool)
}

fn lift(c: Z2i) -> GaussRational {
    gauss(i64::from(c.re()), i64::from(c.im()))
}

fn reduce_vec(v: &[GaussRational]) -> Vec<Z2i> {
    v.iter().map(|x| Z2i::from_gauss(&gauss_to_int(x).expect("integral vector"))).collect()
}

/// Coordinates of `v` in a basis of a rank-two lattice.
fn coordinates(basis: &[Vec<GaussRational>], v: &[GaussRational]) -> Option<Vec<GaussRational>> {
    let n = v.len();
    for a in 0..n {
        for b in a + 1..n {
            let m = Matrix::from_rows(vec![vec![basis[0][a].clone(), basis[1][a].clone()], vec![basis[0][b].clone(), basis[1][b].clone()]]);
            if let Some(inv) = m.inverse() {
                let c = inv.mul_vec(&[v[a].clone(), v[b].clone()]);
                let back: Vec<GaussRational> = (0..n).map(|k| &c[0] * &basis[0][k] + &c[1] * &basis[1][k]).collect();
                return (back == v).then_some(c);
            }
        }
    }
    None
}

/// The `Z[i]/2`-span of a list of vectors.
pub fn z2i_span(gens: &[Vec<Z2i>]) -> BTreeSet<Vec<Z2i>> {
    let n = gens.first().map_or(0, Vec::len);
    all_vectors(gens.len())
        .map(|c| {
            (0..n).map(|k| c.iter().zip(gens).fold(Z2i::ZERO, |acc, (a, g)| acc + *a * g[k])).collect()
        })
        .collect()
}

/// Data attached to one reflection `T'_i`.
#[derive(Clone, Debug)]
pub struct ReflectionData {
    pub lattice: Vec<Vec<GaussRational>>,
    /// Image of the fixed lattice in `M^4`.
    pub k: BTreeSet<Vec<Z2i>>,
    /// Fixed points of the reduction of `T'_i` in `M^4`.
    pub kernel: BTreeSet<Vec<Z2i>>,
    /// The centralizer of `T'_i` acting on the fixed lattice.
    pub restricted: Q8Action,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub m4: usize,
    pub m0: usize,
    pub m0_fixed_by_group: bool,
    pub per_reflection: Vec<usize>,
    pub k_free_rank_two: bool,
    pub kernel_is_m0_plus_k: bool,
    pub exactly_one_reflection: bool,
    pub isotropy_is_reflection: bool,
    pub pairwise_sum_is_m4: bool,
    pub pairwise_intersection_trivial: bool,
    pub counting_identity: bool,
    pub restricted_profiles: Vec<IsotropyProfile>,
}

impl PartitionReport {
    pub fn holds(&self) -> bool {
        self.m4 == 256
            && self.m0 == 16
            && self.m0_fixed_by_group
            && self.per_reflection.iter().all(|&c| c == 48)
            && self.k_free_rank_two
            && self.kernel_is_m0_plus_k
            && self.exactly_one_reflection
            && self.isotropy_is_reflection
            && self.pairwise_sum_is_m4
            && self.pairwise_intersection_trivial
            && self.counting_identity
    }
}

pub fn kummer_group() -> Result<FiniteMatrixGroup, GeometryError> {
    generate_group(4, &kummer_reflections())
}

pub fn reflection_data(group: &FiniteMatrixGroup, i: usize) -> Result<ReflectionData, GeometryError> {
    let t = &kummer_reflections()[i];
    let lattice = fixed_lattice(t);
    if lattice.len() != 2 {
        return Err(GeometryError::Malformed(format!("fixed lattice of T'_{i} has rank {}", lattice.len())));
    }
    let k = z2i_span(&[reduce_vec(&lattice[0]), reduce_vec(&lattice[1])]);
    let kernel: BTreeSet<Vec<Z2i>> = fixed_points_2torsion(&reduce(t)?)?.into_iter().collect();
    let mut restricted = Vec::new();
    for g in group.elements() {
        if (g * t) != (t * g) {
            continue;
        }
        let cols: Vec<Vec<GaussRational>> = lattice
            .iter()
            .map(|b| coordinates(&lattice, &g.mul_vec(b)))
            .collect::<Option<_>>()
            .ok_or_else(|| GeometryError::Malformed("centralizer does not preserve the fixed lattice".into()))?;
        restricted.push(Matrix::from_fn(2, 2, |r, c| cols[c][r].clone()));
    }
    let restricted = q8_action(&generate_group(2, &restricted)?)?;
    Ok(ReflectionData { lattice, k, kernel, restricted })
}

pub fn isotropy_partition_m4() -> Result<(PartitionReport, Vec<ReflectionData>), GeometryError> {
    let group = kummer_group()?;
    let data: Vec<ReflectionData> = (0..5).map(|i| reflection_data(&group, i)).collect::<Result<_, _>>()?;
    let reduced: Vec<Matrix<Z2i>> = group.elements().iter().map(reduce).collect::<Result<_, _>>()?;
    let refl: Vec<Matrix<Z2i>> = kummer_reflections().iter().map(reduce).collect::<Result<_, _>>()?;
    let points: Vec<Vec<Z2i>> = all_vectors(4).collect();
    let m0: Vec<&Vec<Z2i>> = points.iter().filter(|v| is_in_m0(v)).collect();
    let m0_fixed_by_group = m0.iter().all(|x| reduced.iter().all(|g| mul_vec(g, x) == **x));
    let mut exactly_one = true;
    let mut isotropy_is_reflection = true;
    let id = Matrix::<Z2i>::identity(4);
    for x in points.iter().filter(|v| !is_in_m0(v)) {
        let fixing: Vec<usize> = (0..5).filter(|&i| mul_vec(&refl[i], x) == *x).collect();
        exactly_one &= fixing.len() == 1;
        let stab: BTreeSet<Vec<Z2i>> =
            reduced.iter().filter(|g| mul_vec(g, x) == *x).map(|g| g.entries().to_vec()).collect();
        let expected: BTreeSet<Vec<Z2i>> = match fixing.as_slice() {
            [i] => [id.entries().to_vec(), refl[*i].entries().to_vec()].into_iter().collect(),
            _ => BTreeSet::new(),
        };
        isotropy_is_reflection &= stab == expected;
    }
    let per_reflection: Vec<usize> = data.iter().map(|d| d.kernel.iter().filter(|v| !is_in_m0(v)).count()).collect();
    let k_free_rank_two = data.iter().all(|d| d.k.len() == 16);
    let kernel_is_m0_plus_k = data.iter().all(|d| {
        let sum: BTreeSet<Vec<Z2i>> =
            d.k.iter().flat_map(|a| m0.iter().map(move |b| a.iter().zip(b.iter()).map(|(x, y)| *x + *y).collect())).collect();
        sum == d.kernel
    });
    let mut sum_full = true;
    let mut meet_trivial = true;
    for i in 0..5 {
        for j in i + 1..5 {
            let gens: Vec<Vec<Z2i>> = data[i].lattice.iter().chain(&data[j].lattice).map(|b| reduce_vec(b)).collect();
            sum_full &= z2i_span(&gens).len() == 256;
            meet_trivial &= data[i].k.intersection(&data[j].k).count() == 1;
        }
    }
    let report = PartitionReport {
        m4: points.len(),
        m0: m0.len(),
        m0_fixed_by_group,
        per_reflection: per_reflection.clone(),
        k_free_rank_two,
        kernel_is_m0_plus_k,
        exactly_one_reflection: exactly_one,
        isotropy_is_reflection,
        pairwise_sum_is_m4: sum_full,
        pairwise_intersection_trivial: meet_trivial,
        counting_identity: m0.len() + per_reflection.iter().sum::<usize>() == points.len(),
        restricted_profiles: data.iter().map(|d| d.restricted.profile).collect(),
    };
    Ok((report, data))
}

/// Cited Betti numbers `(b2, b4, b6)` of the resolution.
pub const CITED_BETTI: (u32, u32, u32) = (23, 276, 23);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KummerCounts {
    pub torsion_points: usize,
    pub special_points: usize,
    /// `(256 - 16)` divided by the index of `<+-T'_i>`.
    pub a1_orbit_points: usize,
    /// Orbits of the group on non-special 2-torsion points, counted directly.
    pub a1_orbits_direct: usize,
    /// Special points on the normalization of each two-dimensional component.
    pub special_per_component: Vec<usize>,
    pub components: usize,
    /// Reported only once the component count and the partition check out.
    pub betti: Option<(u32, u32, u32)>,
}

pub fn kummer_counts() -> Result<KummerCounts, GeometryError> {
    let (partition, _) = isotropy_partition_m4()?;
    let group = kummer_group()?;
    let reduced: Vec<Matrix<Z2i>> = group.elements().iter().map(reduce).collect::<Result<_, _>>()?;
    let points: Vec<Vec<Z2i>> = all_vectors(4).collect();
    let mut seen = HashSet::new();
    let mut a1_orbits_direct = 0;
    for x in points.iter().filter(|v| !is_in_m0(v)) {
        if seen.insert(x.clone()) {
            a1_orbits_direct += 1;
            seen.extend(reduced.iter().map(|g| mul_vec(g, x)));
        }
    }
    let index = group.order() / 4;
    let special = partition.m0;
    let a1_orbit_points = (partition.m4 - special) / index;
    let special_per_component: Vec<usize> = partition.restricted_profiles.iter().map(|p| p.n8).collect();
    let per = special_per_component[0];
    let uniform = special_per_component.iter().all(|&n| n == per) && per > 0;
    let components = if uniform { special * 5 / per } else { 0 };
    let betti = (partition.holds() && components == 20).then_some(CITED_BETTI);
    Ok(KummerCounts {
        torsion_points: partition.m4,
        special_points: special,
        a1_orbit_points,
        a1_orbits_direct,
        special_per_component,
        components,
        betti,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KummerReport {
    pub conjugation: Vec<bool>,
    pub profile_a: IsotropyProfile,
    pub profile_b: IsotropyProfile,
    pub solutions: Vec<IsotropyProfile>,
    pub partition: PartitionReport,
    pub counts: KummerCounts,
}

impl KummerReport {
    pub fn passed(&self) -> bool {
        self.conjugation.iter().all(|&b| b)
            && self.profile_a == (IsotropyProfile { n8: 2, n4: 3, n2: 2 })
            && self.profile_b == (IsotropyProfile { n8: 4, n4: 0, n2: 3 })
            && self.partition.holds()
            && self.counts.special_points == 16
            && self.counts.a1_orbit_points == 30
            && self.counts.a1_orbits_direct == 30
            && self.counts.components == 20
    }
}

pub fn kummer_report() -> Result<KummerReport, GeometryError> {
    let a = q8_profile(&rep_a())?;
    let b = q8_profile(&rep_b())?;
    for act in [&a, &b] {
        if act.profile != act.orbit_profile {
            return Err(GeometryError::Malformed("orbit count disagrees with stabilizer count".into()));
        }
    }
    Ok(KummerReport {
        conjugation: verify_conjugation_with(&w_matrix()),
        profile_a: a.profile,
        profile_b: b.profile,
        solutions: profile_equation_solutions(),
        partition: isotropy_partition_m4()?.0,
        counts: kummer_counts()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_and_negative_control() {
        assert!(verify_conjugation());
        let mut w = w_matrix();
        w.set(3, 1, gauss(1, 1));
        assert!(!verify_conjugation_with(&w).iter().all(|&b| b));
    }

    #[test]
    fn profiles() {
        let a = q8_profile(&rep_a()).unwrap();
        assert_eq!(a.profile, IsotropyProfile { n8: 2, n4: 3, n2: 2 });
        assert_eq!(a.profile, a.orbit_profile);
        let b = q8_profile(&rep_b()).unwrap();
        assert_eq!(b.profile, IsotropyProfile { n8: 4, n4: 0, n2: 3 });
        assert_eq!(b.profile, b.orbit_profile);
        assert_eq!(profile_equation_solutions(), vec![a.profile, b.profile]);
    }

    #[test]
    fn not_q8() {
        let [x, y, _] = rep_a();
        assert!(matches!(q8_profile(&[x.clone(), y, x]), Err(GeometryError::NotQ8Rep(_))));
    }

    #[test]
    fn lattice_of_diagonal_reflection() {
        let t = gm([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]);
        assert_eq!(fixed_lattice(&t), vec![vec![gauss(1, 0), gauss(0, 0)]]);
    }

    #[test]
    fn partition() {
        let (p, _) = isotropy_partition_m4().unwrap();
        assert!(p.holds(), "{p:?}");
        assert!(p.restricted_profiles.iter().all(|q| *q == IsotropyProfile { n8: 4, n4: 0, n2: 3 }));
        let c = kummer_counts().unwrap();
        assert_eq!((c.special_points, c.a1_orbit_points, c.components), (16, 30, 20));
        assert_eq!(c.a1_orbits_direct, 30);
        assert_eq!(c.betti, Some(CITED_BETTI));
    }
}
