use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::scalar::Field;

/// Sparse polynomial; terms are kept strictly decreasing in `order` with
/// no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly<F> {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        MultiPoly { nvars, order, terms: Vec::new() }
    }

    pub fn constant(c: F, nvars: usize, order: MonomialOrder) -> Self {
        Self::term(c, Monomial::one(), nvars, order)
    }

    pub fn term(c: F, m: Monomial, nvars: usize, order: MonomialOrder) -> Self {
        let mut p = Self::zero(nvars, order);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    pub fn var(i: usize, nvars: usize, order: MonomialOrder) -> Self {
        assert!(i < nvars);
        Self::term(F::one(), Monomial::var(i), nvars, order)
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(terms: Vec<(Monomial, F)>, nvars: usize, order: MonomialOrder) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert_with(F::zero);
            *e = e.add_ref(&c);
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        MultiPoly { nvars, order, terms }
    }

    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, F)>, nvars: usize, order: MonomialOrder) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        MultiPoly { nvars, order, terms }
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MultiPoly::from_sorted_terms(terms, self.nvars, self.order)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms
            .iter()
            .find(|t| t.0 == *m)
            .map_or_else(F::zero, |t| t.1.clone())
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        MultiPoly { nvars: self.nvars, order, terms }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a.mul_ref(c))).collect();
        MultiPoly { nvars: self.nvars, order: self.order, terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a.mul_ref(c))).collect();
        MultiPoly { nvars: self.nvars, order: self.order, terms }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// Largest monomial dividing every term (1 for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.0, |g, t| g.gcd(&t.0)),
        }
    }

    /// Divides every term by `m`, which must divide all of them.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(t, c)| (t.div(m), c.clone())).collect();
        MultiPoly { nvars: self.nvars, order: self.order, terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(F::one(), self.nvars, self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative.
    pub fn differentiate(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                let lowered = m.without(var).mul(&Monomial::var_pow(var, e - 1));
                (lowered, c.mul_ref(&F::from_i64(e as i64)))
            })
            .collect();
        Self::from_terms(terms, self.nvars, self.order)
    }

    /// Partial evaluation; assigned variables disappear, the ring is unchanged.
    pub fn substitute(&self, assignment: &[(usize, F)]) -> Self {
        if assignment.is_empty() {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let mut m = *m;
                let mut c = c.clone();
                for (v, val) in assignment {
                    let e = m.exponent(*v);
                    if e > 0 {
                        if val.is_zero() {
                            return None;
                        }
                        if !val.is_one() {
                            for _ in 0..e {
                                c = c.mul_ref(val);
                            }
                        }
                        m = m.without(*v);
                    }
                }
                Some((m, c))
            })
            .collect();
        Self::from_terms(terms, self.nvars, self.order)
    }

    /// Replaces variable `k` by `images[k]`, yielding a polynomial in the
    /// images' ring.
    pub fn compose(&self, images: &[MultiPoly<F>]) -> MultiPoly<F> {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let (nv, ord) = images
            .first()
            .map(|p| (p.nvars, p.order))
            .unwrap_or((0, self.order));
        let mut powers: HashMap<(usize, u16), MultiPoly<F>> = HashMap::new();
        let mut acc = MultiPoly::zero(nv, ord);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone(), nv, ord);
            for (k, img) in images.iter().enumerate() {
                let e = m.exponent(k);
                if e > 0 {
                    let p = powers.entry((k, e)).or_insert_with(|| img.pow(e as u32));
                    t = &t * p;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn evaluate(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars);
        self.terms.iter().fold(F::zero(), |acc, (m, c)| {
            let mut v = c.clone();
            for (k, x) in point.iter().enumerate() {
                for _ in 0..m.exponent(k) {
                    v = v.mul_ref(x);
                }
            }
            acc.add_ref(&v)
        })
    }

    /// Renames variables into a ring with `nvars` variables; variables mapped
    /// to `None` must not occur.
    pub fn remap(&self, map: &[Option<usize>], nvars: usize, order: MonomialOrder) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.remap(map), c.clone())).collect();
        Self::from_terms(terms, nvars, order)
    }

    /// Weighted degree of a monomial under per-variable weight vectors.
    fn weighted_degree(m: &Monomial, weights: &[Vec<i64>]) -> Vec<i64> {
        let dim = weights.first().map_or(0, |w| w.len());
        let mut d = vec![0; dim];
        for (k, w) in weights.iter().enumerate() {
            let e = m.exponent(k) as i64;
            for (dj, wj) in d.iter_mut().zip(w) {
                *dj += e * wj;
            }
        }
        d
    }

    /// Common multidegree of all terms, if the polynomial is homogeneous.
    pub fn homogeneous_degree(&self, weights: &[Vec<i64>]) -> Option<Vec<i64>> {
        assert_eq!(weights.len(), self.nvars, "one weight per variable");
        let mut degs = self.terms.iter().map(|(m, _)| Self::weighted_degree(m, weights));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// `self - c*m*g`, computed by a single merge.
    pub fn sub_scaled(&self, c: &F, m: &Monomial, g: &MultiPoly<F>) -> Self {
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(t, x)| (t.mul(m), x)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (t, x) = b.next().unwrap();
                    out.push((t, -(x.mul_ref(c))));
                }
                (Some(ta), Some(tb)) => match order.cmp(&ta.0, &tb.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let (t, x) = b.next().unwrap();
                        out.push((t, -(x.mul_ref(c))));
                    }
                    Ordering::Equal => {
                        let (ma, ca) = a.next().unwrap();
                        let (_, x) = b.next().unwrap();
                        let v = ca.sub_ref(&x.mul_ref(c));
                        if !v.is_zero() {
                            out.push((*ma, v));
                        }
                    }
                },
            }
        }
        MultiPoly { nvars: self.nvars, order, terms: out }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        assert_eq!(self.order, other.order, "order mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &F| if negate { -c.clone() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match self.order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, sign(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = if negate { ca.sub_ref(cb) } else { ca.add_ref(cb) };
                    if !v.is_zero() {
                        out.push((*ma, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (*m, sign(c))));
        MultiPoly { nvars: self.nvars, order: self.order, terms: out }
    }
}

impl<'a, F: Field> Add<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, o: &'a MultiPoly<F>) -> MultiPoly<F> {
        self.merge(o, false)
    }
}

impl<'a, F: Field> Sub<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, o: &'a MultiPoly<F>) -> MultiPoly<F> {
        self.merge(o, true)
    }
}

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        self.scale(&-F::one())
    }
}

impl<'a, F: Field> Mul<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, o: &'a MultiPoly<F>) -> MultiPoly<F> {
        assert_eq!(self.nvars, o.nvars, "ring mismatch");
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(F::zero);
                *e = e.add_ref(&ca.mul_ref(cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        MultiPoly { nvars: self.nvars, order: self.order, terms }
    }
}
