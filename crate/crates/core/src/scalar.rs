//! Exact scalar types and the field abstraction shared by the matrix,
//! polynomial and linear-programming layers.

use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;
pub type GaussInt = Complex<BigInt>;
pub type GaussRational = Complex<BigRational>;

/// An exact field. Reference arithmetic is exposed as methods because
/// higher-ranked bounds on `&Self` do not propagate through supertraits.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn div_ref(&self, o: &Self) -> Self;

    /// Multiplicative inverse; panics on zero like integer division does.
    fn inv(&self) -> Self {
        Self::one().div_ref(self)
    }

    /// Canonical text: integers bare, fractions as `p/q`, non-real Gaussian
    /// values as `(a+b*i)` or `b*i`.
    fn to_text(&self) -> String;

    /// True when the canonical text starts with a minus sign and the value
    /// can be printed as `- |c|` inside a sum.
    fn is_negative_real(&self) -> bool;
}

/// Fields with a compatible total order, as needed by the simplex method.
pub trait OrderedField: Field + Ord + Signed {}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn gauss(re: i64, im: i64) -> GaussRational {
    Complex::new(rat_int(re), rat_int(im))
}

pub fn gauss_int(re: i64, im: i64) -> GaussInt {
    Complex::new(BigInt::from(re), BigInt::from(im))
}

/// The imaginary unit in the Gaussian rationals.
pub fn imag_unit() -> GaussRational {
    gauss(0, 1)
}

pub fn gauss_from_int(z: &GaussInt) -> GaussRational {
    Complex::new(
        Rational::from_integer(z.re.clone()),
        Rational::from_integer(z.im.clone()),
    )
}

/// Converts back to a Gaussian integer when both parts are integral.
pub fn gauss_to_int(z: &GaussRational) -> Option<GaussInt> {
    if z.re.is_integer() && z.im.is_integer() {
        Some(Complex::new(z.re.to_integer(), z.im.to_integer()))
    } else {
        None
    }
}

pub fn gauss_int_norm(z: &GaussInt) -> BigInt {
    &z.re * &z.re + &z.im * &z.im
}

fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Field for Rational {
    fn from_i64(v: i64) -> Self {
        rat_int(v)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn to_text(&self) -> String {
        rational_text(self)
    }
    fn is_negative_real(&self) -> bool {
        self.is_negative()
    }
}

impl OrderedField for Rational {}

impl Field for GaussRational {
    fn from_i64(v: i64) -> Self {
        gauss(v, 0)
    }
    fn from_rational(r: &Rational) -> Self {
        Complex::new(r.clone(), Rational::zero())
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn inv(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        Complex::new(&self.re / &n, -(&self.im / &n))
    }
    fn to_text(&self) -> String {
        let imag = |b: &Rational| -> String {
            if b.is_one() {
                "i".to_string()
            } else if *b == -Rational::one() {
                "-i".to_string()
            } else {
                format!("{}*i", rational_text(b))
            }
        };
        if self.im.is_zero() {
            rational_text(&self.re)
        } else if self.re.is_zero() {
            imag(&self.im)
        } else if self.im.is_negative() {
            format!("({}{})", rational_text(&self.re), imag(&self.im))
        } else {
            format!("({}+{})", rational_text(&self.re), imag(&self.im))
        }
    }
    fn is_negative_real(&self) -> bool {
        (self.im.is_zero() && self.re.is_negative()) || (self.re.is_zero() && self.im.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let r = rat(6, -4);
        assert_eq!(*r.numer(), BigInt::from(-3));
        assert_eq!(*r.denom(), BigInt::from(2));
    }

    #[test]
    fn gauss_inverse_and_text() {
        let z = gauss(1, 1);
        assert_eq!(z.inv() * z.clone(), GaussRational::one());
        assert_eq!(z.to_text(), "(1+i)");
        assert_eq!(gauss(0, -2).to_text(), "-2*i");
        assert_eq!(Field::to_text(&rat(-3, 2)), "-3/2");
        assert_eq!(imag_unit() * imag_unit(), gauss(-1, 0));
    }

    #[test]
    fn gauss_int_round_trip() {
        let z = gauss_int(3, -4);
        assert_eq!(gauss_int_norm(&z), BigInt::from(25));
        assert_eq!(gauss_to_int(&gauss_from_int(&z)), Some(z));
        assert_eq!(gauss_to_int(&Complex::new(rat(1, 2), rat_int(0))), None);
    }
}
