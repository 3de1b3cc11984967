//! Complex scalars and complex-valued forms as pairs of real parts.
//! Parameters are treated as real under conjugation.

use std::ops::{Add, Mul, Neg, Sub};

use crate::exterior::KForm;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Complex {
    pub re: Scalar,
    pub im: Scalar,
}

impl Complex {
    pub fn new(re: Scalar, im: Scalar) -> Complex {
        Complex { re, im }
    }

    pub fn real(re: Scalar) -> Complex {
        Complex::new(re, Scalar::zero())
    }

    pub fn zero() -> Complex {
        Complex::default()
    }

    pub fn one() -> Complex {
        Complex::real(Scalar::one())
    }

    pub fn i() -> Complex {
        Complex::new(Scalar::zero(), Scalar::one())
    }

    pub fn from_ints(re: i64, im: i64) -> Complex {
        Complex::new(Scalar::from_int(re), Scalar::from_int(im))
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), -&self.im)
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self) -> Scalar {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn scale(&self, s: &Scalar) -> Complex {
        Complex::new(&self.re * s, &self.im * s)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}

/// A complex-valued form `re + i im`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexForm {
    pub re: KForm,
    pub im: KForm,
}

impl ComplexForm {
    pub fn zero(degree: usize) -> ComplexForm {
        ComplexForm {
            re: KForm::zero(degree),
            im: KForm::zero(degree),
        }
    }

    pub fn new(re: KForm, im: KForm) -> ComplexForm {
        ComplexForm { re, im }
    }

    pub fn conj(&self) -> ComplexForm {
        ComplexForm::new(self.re.clone(), -&self.im)
    }

    pub fn wedge(&self, other: &ComplexForm) -> ComplexForm {
        ComplexForm::new(
            &self.re.wedge(&other.re) - &self.im.wedge(&other.im),
            &self.re.wedge(&other.im) + &self.im.wedge(&other.re),
        )
    }

    pub fn scale(&self, c: &Complex) -> ComplexForm {
        ComplexForm::new(
            &self.re.scale(&c.re) - &self.im.scale(&c.im),
            &self.re.scale(&c.im) + &self.im.scale(&c.re),
        )
    }

    pub fn add(&self, other: &ComplexForm) -> ComplexForm {
        ComplexForm::new(&self.re + &other.re, &self.im + &other.im)
    }
}
