//! The four-element ring Z[i]/2 and brute-force kernels over it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::CoreError;
use crate::matrix::Matrix;
use crate::scalar::GaussInt;

/// Residue `re + im*i` with `re, im` in {0, 1}; bit 0 holds `re`, bit 1 `im`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z2i(u8);

/// Largest vector length `kernel_over_z2i` will enumerate.
pub const ENUMERATION_LIMIT: usize = 8;

impl Z2i {
    pub const ZERO: Z2i = Z2i(0);
    pub const ONE: Z2i = Z2i(1);
    pub const I: Z2i = Z2i(2);
    pub const ONE_PLUS_I: Z2i = Z2i(3);
    pub const ALL: [Z2i; 4] = [Z2i(0), Z2i(1), Z2i(2), Z2i(3)];

    pub fn new(re: bool, im: bool) -> Self {
        Z2i(re as u8 | ((im as u8) << 1))
    }

    pub fn re(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn im(self) -> bool {
        self.0 & 2 == 2
    }

    pub fn from_gauss(z: &GaussInt) -> Self {
        Z2i::new(z.re.is_odd(), z.im.is_odd())
    }

    pub fn bits(self) -> u8 {
        self.0
    }
}

impl fmt::Debug for Z2i {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = ["0", "1", "i", "1+i"][self.0 as usize];
        f.write_str(s)
    }
}

impl Add for Z2i {
    type Output = Z2i;
    fn add(self, o: Z2i) -> Z2i {
        Z2i(self.0 ^ o.0)
    }
}

impl Sub for Z2i {
    type Output = Z2i;
    fn sub(self, o: Z2i) -> Z2i {
        Z2i(self.0 ^ o.0)
    }
}

impl Neg for Z2i {
    type Output = Z2i;
    fn neg(self) -> Z2i {
        self
    }
}

impl Mul for Z2i {
    type Output = Z2i;
    fn mul(self, o: Z2i) -> Z2i {
        // (a+bi)(c+di) = (ac-bd) + (ad+bc)i, signs vanish mod 2.
        let (a, b, c, d) = (self.re(), self.im(), o.re(), o.im());
        Z2i::new((a & c) ^ (b & d), (a & d) ^ (b & c))
    }
}

impl Zero for Z2i {
    fn zero() -> Self {
        Z2i::ZERO
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Z2i {
    fn one() -> Self {
        Z2i::ONE
    }
}

/// Reduces a Gaussian-integer matrix entrywise modulo 2.
pub fn reduce_mod2(m: &Matrix<GaussInt>) -> Matrix<Z2i> {
    m.map(Z2i::from_gauss)
}

/// All `4^n` vectors of `(Z[i]/2)^n`, in lexicographic order of the bit codes.
pub fn all_vectors(n: usize) -> impl Iterator<Item = Vec<Z2i>> {
    (0..(1usize << (2 * n))).map(move |code| {
        (0..n)
            .map(|k| Z2i(((code >> (2 * (n - 1 - k))) & 3) as u8))
            .collect()
    })
}

/// Every `v` with `m v = 0`, found by enumerating all candidates.
pub fn kernel_over_z2i(m: &Matrix<Z2i>) -> Result<Vec<Vec<Z2i>>, CoreError> {
    if m.cols() > ENUMERATION_LIMIT {
        return Err(CoreError::EnumerationBound {
            coords: m.cols(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(all_vectors(m.cols())
        .filter(|v| m.mul_vec(v).iter().all(|x| x.is_zero()))
        .collect())
}
