use std::cmp::Ordering;
use std::fmt;

/// Largest number of variables a ring may have.
pub const MAX_VARS: usize = 24;

/// Exponent vector with a cached total degree. Unused trailing slots are 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0 }
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u16) -> Self {
        assert!(i < MAX_VARS, "variable index {i} exceeds MAX_VARS");
        let mut m = Self::one();
        m.exps[i] = e;
        m.deg = e as u32;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Self::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bit `i` set iff variable `i` occurs.
    pub fn support_mask(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += o.exps[i];
        }
        m.deg += o.deg;
        m
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.deg <= o.deg && (0..MAX_VARS).all(|i| self.exps[i] <= o.exps[i])
    }

    /// `self / o`; requires `o | self`.
    pub fn div(&self, o: &Monomial) -> Monomial {
        debug_assert!(o.divides(self));
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] -= o.exps[i];
        }
        m.deg -= o.deg;
        m
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut m = Self::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(o.exps[i]);
        }
        m.deg = m.exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut m = Self::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(o.exps[i]);
        }
        m.deg = m.exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        self.support_mask() & o.support_mask() == 0
    }

    /// Drops variable `i` (its exponent becomes 0).
    pub fn without(&self, i: usize) -> Monomial {
        let mut m = *self;
        m.deg -= m.exps[i] as u32;
        m.exps[i] = 0;
        m
    }

    /// Moves exponent of old variable `k` to `map[k]`; `None` entries must have exponent 0.
    pub fn remap(&self, map: &[Option<usize>]) -> Monomial {
        let mut m = Self::one();
        for (k, target) in map.iter().enumerate() {
            let e = self.exps[k];
            if e == 0 {
                continue;
            }
            let t = target.expect("remapped variable with nonzero exponent has no target");
            m.exps[t] += e;
        }
        m.deg = self.deg;
        m
    }
}

/// Term orders. `Block(k)` compares the first `k` variables lexicographically,
/// then the rest by graded reverse lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block(usize),
}

fn grevlex_range(a: &Monomial, b: &Monomial, from: usize) -> Ordering {
    let da: u32 = a.exps[from..].iter().map(|&e| e as u32).sum();
    let db: u32 = b.exps[from..].iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for i in (from..MAX_VARS).rev() {
            if a.exps[i] != b.exps[i] {
                return b.exps[i].cmp(&a.exps[i]);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| {
                for i in (0..MAX_VARS).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block(k) => a.exps[..k]
                .cmp(&b.exps[..k])
                .then_with(|| grevlex_range(a, b, k)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        let z = Monomial::var(2);
        // x*z < y^2 in grevlex (smaller z exponent wins at equal degree).
        assert_eq!(o.cmp(&x.mul(&z), &y.mul(&y)), Ordering::Less);
        assert_eq!(o.cmp(&x, &y), Ordering::Greater);
        assert_eq!(o.cmp(&x, &y.mul(&y)), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&x, &y.mul(&y)), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = MonomialOrder::Block(1);
        let x = Monomial::var(0);
        let y5 = Monomial::var_pow(1, 5);
        assert_eq!(o.cmp(&x, &y5), Ordering::Greater);
        assert_eq!(o.cmp(&Monomial::var(1), &Monomial::var(2)), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), Monomial::from_exponents(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), Monomial::from_exponents(&[1, 1, 0]));
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.lcm(&b).div(&a), Monomial::from_exponents(&[0, 2, 1]));
        assert_eq!(a.support_mask(), 0b011);
    }
}
