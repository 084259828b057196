//! Buchberger's algorithm with the Gebauer–Möller pair update, plus the
//! localization queries built on it.

use super::monomial::{Monomial, MonomialOrder};
use super::multipoly::MultiPoly;
use super::ring::Ring;
use crate::error::CoreError;
use crate::scalar::Field;

/// Generators sharing one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<F> {
    pub ring: Ring,
    pub generators: Vec<MultiPoly<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: Ring, generators: Vec<MultiPoly<F>>) -> Self {
        for g in &generators {
            assert_eq!(g.nvars(), ring.nvars(), "generator outside the ring");
        }
        let order = ring.order();
        let generators = generators.into_iter().map(|g| g.with_order(order)).collect();
        Ideal { ring, generators }
    }

    /// Reduced Gröbner basis under `order`.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Ideal<F> {
        let ring = Ring::new(self.ring.names().to_vec(), order);
        let gens: Vec<_> = self.generators.iter().map(|g| g.with_order(order)).collect();
        Ideal { ring, generators: buchberger(&gens) }
    }
}

struct Reducer<F> {
    lm: Monomial,
    mask: u32,
    poly: MultiPoly<F>,
}

fn find_reducer<'a, F>(reducers: &'a [&'a Reducer<F>], m: &Monomial, mask: u32) -> Option<&'a Reducer<F>> {
    reducers
        .iter()
        .find(|r| r.mask & !mask == 0 && r.lm.divides(m))
        .copied()
}

/// Full reduction of `f` by monic reducers.
fn reduce_by<F: Field>(f: &MultiPoly<F>, reducers: &[&Reducer<F>]) -> MultiPoly<F> {
    let (nvars, order) = (f.nvars(), f.order());
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, F)> = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        match find_reducer(reducers, &m, m.support_mask()) {
            Some(r) => {
                let q = m.div(&r.lm);
                p = p.sub_scaled(&c, &q, &r.poly);
            }
            None => {
                rem.push((m, c));
                let rest = p.into_terms().into_iter().skip(1).collect();
                p = MultiPoly::from_sorted_terms(rest, nvars, order);
            }
        }
    }
    MultiPoly::from_sorted_terms(rem, nvars, order)
}

/// Remainder of `f` on division by `basis` (no assumptions on `basis`).
pub fn reduce<F: Field>(f: &MultiPoly<F>, basis: &[MultiPoly<F>]) -> MultiPoly<F> {
    let owned: Vec<Reducer<F>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let g = g.with_order(f.order()).monic();
            let lm = g.leading_monomial().unwrap();
            Reducer { lm, mask: lm.support_mask(), poly: g }
        })
        .collect();
    let refs: Vec<&Reducer<F>> = owned.iter().collect();
    reduce_by(f, &refs)
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<F> {
    order: MonomialOrder,
    store: Vec<Reducer<F>>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<F: Field> State<F> {
    fn reducers(&self) -> Vec<&Reducer<F>> {
        self.active.iter().map(|&k| &self.store[k]).collect()
    }

    /// Gebauer–Möller update after adding a new monic element.
    fn insert(&mut self, h: MultiPoly<F>) {
        let lm_h = h.leading_monomial().unwrap();
        let hi = self.store.len();
        self.store.push(Reducer { lm: lm_h, mask: lm_h.support_mask(), poly: h });

        let mut c: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair { i: g, j: hi, lcm: self.store[g].lm.lcm(&lm_h) })
            .collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let coprime = self.store[p.i].lm.is_coprime(&lm_h);
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d
            .into_iter()
            .filter(|p| !self.store[p.i].lm.is_coprime(&lm_h))
            .collect();

        let store = &self.store;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && store[p.i].lm.lcm(&lm_h) != p.lcm
                && store[p.j].lm.lcm(&lm_h) != p.lcm)
        });
        self.pairs.extend(e);

        self.active.retain(|&g| !lm_h.divides(&store[g].lm));
        self.active.push(hi);
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            order
                .cmp(&pa.lcm, &pb.lcm)
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

fn s_polynomial<F: Field>(f: &Reducer<F>, g: &Reducer<F>, lcm: &Monomial) -> MultiPoly<F> {
    let a = f.poly.mul_term(&lcm.div(&f.lm), &F::one());
    a.sub_scaled(&F::one(), &lcm.div(&g.lm), &g.poly)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic and
/// sorted by increasing leading monomial. The unit ideal yields `[1]`.
pub fn buchberger<F: Field>(gens: &[MultiPoly<F>]) -> Vec<MultiPoly<F>> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Vec::new();
    };
    let (nvars, order) = (first.nvars(), first.order());
    let unit = || vec![MultiPoly::constant(F::one(), nvars, order)];
    let mut st = State { order, store: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    let mut input: Vec<MultiPoly<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by(|a, b| order.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));
    for g in input {
        let r = reduce_by(&g, &st.reducers());
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return unit();
        }
        st.insert(r.monic());
    }

    while let Some(p) = st.pop_pair() {
        let s = s_polynomial(&st.store[p.i], &st.store[p.j], &p.lcm);
        let r = reduce_by(&s, &st.reducers());
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return unit();
        }
        st.insert(r.monic());
    }

    interreduce(st.active.iter().map(|&k| st.store[k].poly.clone()).collect())
}

/// Turns a Gröbner basis into the reduced one.
fn interreduce<F: Field>(basis: Vec<MultiPoly<F>>) -> Vec<MultiPoly<F>> {
    let order = match basis.first() {
        Some(p) => p.order(),
        None => return basis,
    };
    let mut minimal: Vec<MultiPoly<F>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let lh = h.leading_monomial().unwrap();
            l != k && lh.divides(&lm) && (lh != lm || l < k)
        });
        if !redundant {
            minimal.push(g.monic());
        }
    }
    let reducers: Vec<Reducer<F>> = minimal
        .iter()
        .map(|g| {
            let lm = g.leading_monomial().unwrap();
            Reducer { lm, mask: lm.support_mask(), poly: g.clone() }
        })
        .collect();
    let mut out: Vec<MultiPoly<F>> = (0..minimal.len())
        .map(|k| {
            let others: Vec<&Reducer<F>> =
                reducers.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, r)| r).collect();
            reduce_by(&minimal[k], &others).monic()
        })
        .collect();
    out.sort_by(|a, b| order.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));
    out
}

/// True iff every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis<F: Field>(basis: &[MultiPoly<F>]) -> bool {
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let (la, lb) = (basis[a].leading_monomial().unwrap(), basis[b].leading_monomial().unwrap());
            let lcm = la.lcm(&lb);
            let fa = basis[a].monic();
            let fb = basis[b].monic();
            let s = fa.mul_term(&lcm.div(&la), &F::one()).sub_scaled(&F::one(), &lcm.div(&lb), &fb);
            if !reduce(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// The Rabinowitsch system for the face torus: variables outside `face`
/// are set to 0, variables in `ones` (a subset of `face`) to 1, the
/// remaining face variables are renumbered `0..k` in their original order
/// and `y = k` is adjoined with `y * prod(x) - 1`. Monomial factors are
/// removed from the generators since face variables are units there.
/// Returns the system and `k + 1`, the size of its ring (grevlex).
pub fn face_torus_system<F: Field>(
    gens: &[MultiPoly<F>],
    nvars: usize,
    face: &[usize],
    ones: &[usize],
) -> (Vec<MultiPoly<F>>, usize) {
    let kept: Vec<usize> = face.iter().copied().filter(|v| !ones.contains(v)).collect();
    let k = kept.len();
    let order = MonomialOrder::Grevlex;
    let mut map = vec![None; nvars];
    for (new, &old) in kept.iter().enumerate() {
        map[old] = Some(new);
    }
    let mut assignment: Vec<(usize, F)> = (0..nvars)
        .filter(|v| !face.contains(v))
        .map(|v| (v, F::zero()))
        .collect();
    assignment.extend(ones.iter().map(|&v| (v, F::one())));

    let mut system: Vec<MultiPoly<F>> = Vec::new();
    for g in gens {
        let s = g.substitute(&assignment);
        if s.is_zero() {
            continue;
        }
        let s = s.remap(&map, k + 1, order);
        let s = s.div_monomial(&s.monomial_content());
        if !system.contains(&s) {
            system.push(s);
        }
    }
    let mut prod = Monomial::var(k);
    for v in 0..k {
        prod = prod.mul(&Monomial::var(v));
    }
    system.push(MultiPoly::from_terms(
        vec![(prod, F::one()), (Monomial::one(), -F::one())],
        k + 1,
        order,
    ));
    (system, k + 1)
}

/// Whether the variety of `ideal` meets the torus of the coordinate face.
pub fn nonempty_in_face_torus<F: Field>(ideal: &Ideal<F>, face: &[usize]) -> bool {
    let (system, _) = face_torus_system(&ideal.generators, ideal.ring.nvars(), face, &[]);
    !is_unit_basis(&buchberger(&system))
}

pub fn is_unit_basis<F: Field>(basis: &[MultiPoly<F>]) -> bool {
    basis.len() == 1 && basis[0].is_unit()
}

/// Largest set of variables (given as a bitmask universe of `nvars`
/// variables) containing no leading monomial's support.
pub fn max_independent_set(leading: &[Monomial], nvars: usize) -> u32 {
    let masks: Vec<u32> = leading.iter().map(|m| m.support_mask()).collect();
    let mut best: u32 = 0;
    let mut best_size = 0;
    for s in 0u32..(1u32 << nvars) {
        let size = s.count_ones();
        if size <= best_size {
            continue;
        }
        if masks.iter().all(|&m| m & !s != 0) {
            best = s;
            best_size = size;
        }
    }
    best
}

/// Krull dimension of a quotient ring from a Gröbner basis of its ideal.
pub fn dimension_from_basis<F: Field>(basis: &[MultiPoly<F>], nvars: usize) -> Option<usize> {
    if is_unit_basis(basis) {
        return None;
    }
    let lms: Vec<Monomial> = basis.iter().filter_map(|g| g.leading_monomial()).collect();
    Some(max_independent_set(&lms, nvars).count_ones() as usize)
}

/// Dimension of the variety of `ideal` intersected with the face torus.
pub fn krull_dimension_in_face_torus<F: Field>(ideal: &Ideal<F>, face: &[usize]) -> Result<usize, CoreError> {
    let (system, n) = face_torus_system(&ideal.generators, ideal.ring.nvars(), face, &[]);
    dimension_from_basis(&buchberger(&system), n).ok_or(CoreError::FaceEmpty)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(names.iter().copied(), MonomialOrder::Grevlex)
    }

    #[test]
    fn trivial_examples() {
        let r = ring(&["x", "y"]);
        let x: MultiPoly<Rational> = r.parse("x").unwrap();
        assert_eq!(buchberger(std::slice::from_ref(&x)), vec![x.clone()]);
        let xy1: MultiPoly<Rational> = r.parse("x*y - 1").unwrap();
        let gb = buchberger(&[xy1, x]);
        assert!(is_unit_basis(&gb));
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(&["x", "y", "z", "w"]);
        let gens: Vec<MultiPoly<Rational>> = ["x*z - y^2", "y*w - z^2", "x*w - y*z"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let gb = buchberger(&gens);
        assert!(is_groebner_basis(&gb));
        assert_eq!(buchberger(&gb), gb);
        for g in &gens {
            assert!(reduce(g, &gb).is_zero());
        }
        assert_eq!(dimension_from_basis(&gb, 4), Some(2));
    }

    #[test]
    fn lex_elimination() {
        let r = Ring::new(["x", "y"], MonomialOrder::Lex);
        let gens: Vec<MultiPoly<Rational>> =
            ["x^2 + y^2 - 1", "x - y"].iter().map(|s| r.parse(s).unwrap()).collect();
        let gb = buchberger(&gens);
        assert_eq!(r.to_text(&gb[0]), "y^2 - 1/2");
        assert_eq!(r.to_text(&gb[1]), "x - y");
    }

    #[test]
    fn face_torus_queries() {
        let r = ring(&["x"]);
        let zero = Ideal::<Rational>::new(r.clone(), vec![]);
        assert!(nonempty_in_face_torus(&zero, &[0]));
        let xi = Ideal::new(r.clone(), vec![r.parse::<Rational>("x").unwrap()]);
        assert!(!nonempty_in_face_torus(&xi, &[0]));
        assert!(nonempty_in_face_torus(&xi, &[]));
        assert_eq!(krull_dimension_in_face_torus(&xi, &[0]), Err(CoreError::FaceEmpty));

        let r2 = ring(&["x", "y", "z"]);
        let cone = Ideal::new(r2.clone(), vec![r2.parse::<Rational>("x*y - z^2").unwrap()]);
        assert_eq!(krull_dimension_in_face_torus(&cone, &[0, 1, 2]), Ok(2));
        assert_eq!(krull_dimension_in_face_torus(&cone, &[0, 1]), Err(CoreError::FaceEmpty));
        assert_eq!(krull_dimension_in_face_torus(&cone, &[0]), Ok(1));
    }
}
