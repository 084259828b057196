//! The order-32 group generated by five symplectic reflections of C^4.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use symres_core::scalar::gauss;
use symres_core::{GaussRational, Matrix};

use crate::error::GeometryError;

pub type GaussMatrix = Matrix<GaussRational>;

/// Default cap on the size of a generated group.
pub const DEFAULT_GROUP_BOUND: usize = 100_000;

fn gm(rows: [[(i64, i64); 4]; 4]) -> GaussMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&(a, b)| gauss(a, b)).collect()).collect())
}

const O: (i64, i64) = (0, 0);
const P: (i64, i64) = (1, 0);
const N: (i64, i64) = (-1, 0);
const I: (i64, i64) = (0, 1);
const J: (i64, i64) = (0, -1);

/// The reflections `T_0..T_4`.
pub fn reflections() -> Vec<GaussMatrix> {
    vec![
        gm([[P, O, O, O], [O, N, O, O], [O, O, P, O], [O, O, O, N]]),
        gm([[O, I, O, O], [J, O, O, O], [O, O, O, J], [O, O, I, O]]),
        gm([[O, P, O, O], [P, O, O, O], [O, O, O, P], [O, O, P, O]]),
        gm([[O, O, O, P], [O, O, N, O], [O, N, O, O], [P, O, O, O]]),
        gm([[O, O, O, I], [O, O, J, O], [O, I, O, O], [J, O, O, O]]),
    ]
}

/// Gram matrix of `dx1^dx3 + dx2^dx4`.
pub fn symplectic_form() -> GaussMatrix {
    gm([[O, O, P, O], [O, O, O, P], [N, O, O, O], [O, N, O, O]])
}

pub fn neg_identity(n: usize) -> GaussMatrix {
    GaussMatrix::identity(n).map(|x| -x.clone())
}

/// Parses a JSON list of square matrices whose entries are `[re, im]`
/// integer pairs.
pub fn parse_generators(text: &str) -> Result<Vec<GaussMatrix>, GeometryError> {
    let raw: Vec<Vec<Vec<[i64; 2]>>> =
        serde_json::from_str(text).map_err(|e| GeometryError::Malformed(format!("generators: {e}")))?;
    let mut out = Vec::new();
    for m in raw {
        let n = m.len();
        if n == 0 || m.iter().any(|r| r.len() != n) {
            return Err(GeometryError::Malformed("generators must be non-empty square matrices".into()));
        }
        let g = Matrix::from_rows(m.iter().map(|r| r.iter().map(|&[a, b]| gauss(a, b)).collect()).collect());
        if g.inverse().is_none() {
            return Err(GeometryError::Malformed("generator is singular".into()));
        }
        out.push(g);
    }
    if out.windows(2).any(|w| w[0].rows() != w[1].rows()) {
        return Err(GeometryError::Malformed("generators of different sizes".into()));
    }
    Ok(out)
}

/// A finite group of invertible matrices with its multiplication table.
/// Elements are numbered in breadth-first order from the identity.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    elements: Vec<GaussMatrix>,
    index: HashMap<GaussMatrix, usize>,
    generator_indices: Vec<usize>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

pub fn generate_group(dim: usize, gens: &[GaussMatrix]) -> Result<FiniteMatrixGroup, GeometryError> {
    generate_group_bounded(dim, gens, DEFAULT_GROUP_BOUND)
}

pub fn generate_group_bounded(
    dim: usize,
    gens: &[GaussMatrix],
    bound: usize,
) -> Result<FiniteMatrixGroup, GeometryError> {
    let id = GaussMatrix::identity(dim);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0)]);
    let mut queue = VecDeque::from([0]);
    while let Some(k) = queue.pop_front() {
        for g in gens {
            let y = &elements[k] * g;
            if !index.contains_key(&y) {
                if elements.len() == bound {
                    return Err(GeometryError::GroupTooLarge { bound });
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| index[&(&elements[a] * &elements[b])]).collect())
        .collect();
    let inverse = (0..n).map(|a| (0..n).find(|&b| table[a][b] == 0).unwrap()).collect();
    let generator_indices = gens.iter().map(|g| index[g]).collect();
    Ok(FiniteMatrixGroup { elements, index, generator_indices, table, inverse })
}

impl FiniteMatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, k: usize) -> &GaussMatrix {
        &self.elements[k]
    }

    pub fn elements(&self) -> &[GaussMatrix] {
        &self.elements
    }

    pub fn index_of(&self, m: &GaussMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        self.mul(self.mul(ab, self.inv(a)), self.inv(b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Conjugacy classes sorted by size, then by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.mul(self.mul(g, a), self.inv(g))).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        classes
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Sorted closure of `gens` under multiplication.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut members = vec![false; self.order()];
        members[0] = true;
        let mut list = vec![0];
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    list.push(y);
                }
            }
            k += 1;
        }
        list.sort_unstable();
        list
    }

    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let mut comms: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        comms.sort_unstable();
        comms.dedup();
        self.subgroup_generated(&comms)
    }

    /// Coset labels of a normal subgroup: element -> smallest member of its coset.
    fn coset_labels(&self, normal: &[usize]) -> Vec<usize> {
        (0..self.order())
            .map(|g| normal.iter().map(|&h| self.mul(g, h)).min().unwrap())
            .collect()
    }

    /// Invariant factors `d_1 | d_2 | ...` of `G / [G, G]`.
    pub fn abelianization_invariants(&self) -> Vec<u64> {
        let comm = self.commutator_subgroup();
        let labels = self.coset_labels(&comm);
        let mut reps: Vec<usize> = labels.clone();
        reps.sort_unstable();
        reps.dedup();
        // Order of each coset in the quotient.
        let in_comm = |x: usize| comm.binary_search(&x).is_ok();
        let orders: Vec<u64> = reps
            .iter()
            .map(|&g| {
                let mut x = g;
                let mut k = 1;
                while !in_comm(x) {
                    x = self.mul(x, g);
                    k += 1;
                }
                k
            })
            .collect();
        abelian_invariants_from_orders(&orders)
    }

    /// Whether the normalizer of `<t>` modulo `<t>` has the order profile
    /// of the quaternion group: 8 elements, one of order 2, six of order 4.
    pub fn normalizer_quotient_is_q8(&self, t: &GaussMatrix) -> Result<bool, GeometryError> {
        let ti = self.index_of(t).ok_or(GeometryError::NotMember)?;
        let sub = self.subgroup_generated(&[ti]);
        let inside = |x: usize| sub.binary_search(&x).is_ok();
        let normalizer: Vec<usize> = (0..self.order())
            .filter(|&g| sub.iter().all(|&h| inside(self.mul(self.mul(g, h), self.inv(g)))))
            .collect();
        if normalizer.len() != 8 * sub.len() {
            return Ok(false);
        }
        let mut profile: HashMap<usize, usize> = HashMap::new();
        let mut seen = vec![false; self.order()];
        for &g in &normalizer {
            if seen[g] {
                continue;
            }
            for &h in &sub {
                seen[self.mul(g, h)] = true;
            }
            let mut x = g;
            let mut k = 1;
            while !inside(x) {
                x = self.mul(x, g);
                k += 1;
            }
            *profile.entry(k).or_default() += 1;
        }
        Ok(profile.get(&1) == Some(&1) && profile.get(&2) == Some(&1) && profile.get(&4) == Some(&6))
    }

    /// Dimension of the space fixed by element `a`.
    pub fn fixed_space_dim(&self, a: usize) -> usize {
        let m = &self.elements[a] - &GaussMatrix::identity(self.elements[a].rows());
        m.cols() - m.rank()
    }
}

/// Invariant factors of a finite abelian group given the multiset of its
/// element orders.
pub fn abelian_invariants_from_orders(orders: &[u64]) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut m = orders.len() as u64;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    // #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i)) recovers the exponents e_i.
    let mut per_prime = Vec::new();
    for &p in &primes {
        let mut logs = vec![0u32];
        loop {
            let k = logs.len() as u32;
            let c = orders.iter().filter(|&&o| is_p_power_dividing(o, p, p.pow(k))).count() as u64;
            let mut l = 0;
            let mut x = c;
            while x > 1 {
                x /= p;
                l += 1;
            }
            logs.push(l);
            if logs[k as usize] == logs[k as usize - 1] {
                break;
            }
        }
        let top = logs.len() - 1;
        let at_least = |k: usize| if k <= top { logs[k] - logs[k - 1] } else { 0 };
        let mut exps = Vec::new();
        for k in 1..=top {
            for _ in 0..(at_least(k) - at_least(k + 1)) {
                exps.push(p.pow(k as u32));
            }
        }
        per_prime.push(exps);
    }
    combine_invariants(per_prime)
}

fn is_p_power_dividing(o: u64, p: u64, pk: u64) -> bool {
    let mut x = o;
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1 && pk.is_multiple_of(o)
}

fn combine_invariants(per_prime: Vec<Vec<u64>>) -> Vec<u64> {
    let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for mut exps in per_prime {
        exps.sort_unstable();
        let offset = len - exps.len();
        for (k, e) in exps.into_iter().enumerate() {
            out[offset + k] *= e;
        }
    }
    out
}

pub fn is_entry_in_unit_set(x: &GaussRational) -> bool {
    let units = [gauss(0, 0), gauss(1, 0), gauss(-1, 0), gauss(0, 1), gauss(0, -1)];
    units.contains(x)
}

pub fn preserves_form(g: &GaussMatrix, omega: &GaussMatrix) -> bool {
    &(&g.transpose() * omega) * g == *omega
}

pub fn is_minus_identity(m: &GaussMatrix) -> bool {
    *m == neg_identity(m.rows())
}

pub fn matrix_commutator(a: &GaussMatrix, b: &GaussMatrix) -> GaussMatrix {
    let ai = a.inverse().expect("invertible");
    let bi = b.inverse().expect("invertible");
    &(&(a * b) * &ai) * &bi
}

/// One named identity and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed }
    }
}

/// The identities among `T_i` and `R_ij = T_i T_j`.
pub fn matrix_identity_checks() -> Vec<Check> {
    let t = reflections();
    let n = t[0].rows();
    let id = GaussMatrix::identity(n);
    let minus = neg_identity(n);
    let omega = symplectic_form();
    let r = |i: usize, j: usize| &t[i] * &t[j];
    let mut checks = Vec::new();

    checks.push(Check::new("each T_i preserves omega", t.iter().all(|g| preserves_form(g, &omega))));
    checks.push(Check::new("each T_i has order two", t.iter().all(|g| (g * g).is_identity() && !g.is_identity())));
    checks.push(Check::new(
        "each T_i fixes a plane",
        t.iter().all(|g| {
            let d = g - &id;
            d.cols() - d.rank() == 2
        }),
    ));
    let product = t.iter().skip(1).fold(t[0].clone(), |acc, g| &acc * g);
    checks.push(Check::new("T0 T1 T2 T3 T4 = I", product.is_identity()));

    let mut ok_order = true;
    let mut ok_square = true;
    let mut ok_comm = true;
    let mut ok_anti = true;
    for i in 0..5 {
        for j in 0..5 {
            if i == j {
                continue;
            }
            let rij = r(i, j);
            let sq = &rij * &rij;
            ok_square &= sq == minus;
            ok_order &= !sq.is_identity() && (&sq * &sq).is_identity();
            ok_comm &= matrix_commutator(&t[i], &t[j]) == minus;
            let rji = r(j, i);
            ok_anti &= rij == rji.map(|x| -x.clone()) && Some(rij.clone()) == rji.inverse();
        }
    }
    checks.push(Check::new("R_ij has order four", ok_order));
    checks.push(Check::new("R_ij^2 = -I", ok_square));
    checks.push(Check::new("[T_i, T_j] = -I", ok_comm));
    checks.push(Check::new("R_ij = -R_ji = R_ji^-1", ok_anti));

    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let mut ok_ts = true;
    for s in 0..5 {
        for &(i, j) in &pairs {
            let c = matrix_commutator(&t[s], &r(i, j));
            ok_ts &= if s == i || s == j { c == minus } else { c == id };
        }
    }
    checks.push(Check::new("[T_s, R_ij] = -I iff s in {i,j}", ok_ts));
    let mut ok_rr = true;
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(p, q) in &pairs[a + 1..] {
            let meet = i == p || i == q || j == p || j == q;
            let c = matrix_commutator(&r(i, j), &r(p, q));
            ok_rr &= if meet { c == minus } else { c == id };
        }
    }
    checks.push(Check::new("[R_ij, R_pq] = -I iff the pairs meet", ok_rr));
    checks
}

/// Summary of the structure of the group generated by the reflections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFacts {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub class_labels: Vec<String>,
    pub commutator_order: usize,
    pub commutator_is_center: bool,
    pub commutator_is_plus_minus_identity: bool,
    pub abelianization: Vec<u64>,
    pub q8_normalizers: Vec<bool>,
    pub all_preserve_omega: bool,
    pub entries_are_units: bool,
    pub no_quasi_reflections: bool,
}

/// Names an element as `I`, `-I`, `±T_i` or `±R_ij` when it is one of those.
pub fn element_label(m: &GaussMatrix) -> Option<String> {
    let t = reflections();
    let n = m.rows();
    if m.is_identity() {
        return Some("I".into());
    }
    if is_minus_identity(m) {
        return Some("-I".into());
    }
    let neg = |x: &GaussMatrix| x.map(|v| -v.clone());
    for (i, ti) in t.iter().enumerate() {
        if ti.rows() != n {
            return None;
        }
        if m == ti {
            return Some(format!("T{i}"));
        }
        if *m == neg(ti) {
            return Some(format!("-T{i}"));
        }
    }
    for i in 0..5 {
        for j in i + 1..5 {
            let r = &t[i] * &t[j];
            if *m == r {
                return Some(format!("R{i}{j}"));
            }
            if *m == neg(&r) {
                return Some(format!("-R{i}{j}"));
            }
        }
    }
    None
}

pub fn group_facts(g: &FiniteMatrixGroup) -> GroupFacts {
    let omega = symplectic_form();
    let classes = g.conjugacy_classes();
    let comm = g.commutator_subgroup();
    let center = g.center();
    let dim = g.element(0).rows();
    let pm: Vec<usize> = {
        let mut v = vec![0];
        if let Some(k) = g.index_of(&neg_identity(dim)) {
            v.push(k);
        }
        v.sort_unstable();
        v
    };
    let labels = classes
        .iter()
        .map(|c| {
            let mut names: Vec<String> = c
                .iter()
                .map(|&k| element_label(g.element(k)).unwrap_or_else(|| format!("g{k}")))
                .collect();
            names.sort();
            names.join(",")
        })
        .collect();
    let t = reflections();
    GroupFacts {
        order: g.order(),
        class_sizes: classes.iter().map(Vec::len).collect(),
        class_labels: labels,
        commutator_order: comm.len(),
        commutator_is_center: comm == center,
        commutator_is_plus_minus_identity: comm == pm,
        abelianization: g.abelianization_invariants(),
        q8_normalizers: t
            .iter()
            .map(|ti| g.normalizer_quotient_is_q8(ti).unwrap_or(false))
            .collect(),
        all_preserve_omega: dim == 4 && g.elements().iter().all(|e| preserves_form(e, &omega)),
        entries_are_units: g.elements().iter().all(|e| e.entries().iter().all(is_entry_in_unit_set)),
        no_quasi_reflections: (1..g.order()).all(|k| g.fixed_space_dim(k) + 1 < dim),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_groups() {
        let g = generate_group(4, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().len(), 1);
        let m = generate_group(4, &[neg_identity(4)]).unwrap();
        assert_eq!(m.order(), 2);
        assert_eq!(m.conjugacy_classes(), vec![vec![0], vec![1]]);
        assert_eq!(m.commutator_subgroup(), vec![0]);
        assert!(!m.normalizer_quotient_is_q8(&neg_identity(4)).unwrap());
        assert_eq!(m.normalizer_quotient_is_q8(&reflections()[0]), Err(GeometryError::NotMember));
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            generate_group_bounded(4, &reflections(), 16).unwrap_err(),
            GeometryError::GroupTooLarge { bound: 16 }
        );
    }

    #[test]
    fn invariants_from_orders() {
        // Z2 x Z4 has orders 1,2,2,2,4,4,4,4.
        assert_eq!(abelian_invariants_from_orders(&[1, 2, 2, 2, 4, 4, 4, 4]), vec![2, 4]);
        assert_eq!(abelian_invariants_from_orders(&[1, 2, 3, 6, 3, 6]), vec![6]);
        assert_eq!(abelian_invariants_from_orders(&[1]), Vec::<u64>::new());
    }

    #[test]
    fn reflection_group_facts() {
        let g = generate_group(4, &reflections()).unwrap();
        let f = group_facts(&g);
        assert_eq!(f.order, 32);
        let mut expected = vec![1, 1];
        expected.extend(std::iter::repeat_n(2, 15));
        assert_eq!(f.class_sizes, expected);
        assert!(f.commutator_is_center && f.commutator_is_plus_minus_identity);
        assert_eq!(f.abelianization, vec![2, 2, 2, 2]);
        assert!(f.q8_normalizers.iter().all(|&b| b));
        assert!(f.all_preserve_omega && f.entries_are_units && f.no_quasi_reflections);
        assert!(matrix_identity_checks().iter().all(|c| c.passed));
    }
}
