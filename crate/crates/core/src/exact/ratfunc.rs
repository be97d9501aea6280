//! The field of rational functions k(q).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, Field, Laurent};

/// A reduced fraction of Laurent polynomials.
///
/// Canonical form: gcd(num, den) is a unit, the denominator has lowest
/// exponent 0 and is monic. Structural equality is then field equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Laurent,
    den: Laurent,
}

impl RatFunc {
    pub fn new(num: Laurent, den: Laurent) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Laurent, den: Laurent) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: Laurent::zero(),
                den: Laurent::one(),
            };
        }
        let (num, den) = if den == Laurent::one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalized(num, den)
    }

    /// Canonical form for an already-reduced fraction: denominator monic
    /// with lowest exponent zero.
    fn normalized(mut num: Laurent, mut den: Laurent) -> Self {
        let shift = den.low().unwrap();
        num = num.shift(-shift);
        den = den.shift(-shift);
        let lead = den.leading_coeff().unwrap();
        if lead != crate::exact::rat(1) {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_laurent(p: Laurent) -> Self {
        RatFunc {
            num: p,
            den: Laurent::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_laurent(Laurent::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(Laurent::one())
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the reduced denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den == Laurent::one()
    }

    /// The underlying Laurent polynomial, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&Laurent> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i64) -> Result<Self, AlgebraError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, other: &RatFunc) -> RatFunc {
        if self.den == other.den {
            return RatFunc::reduced(&self.num + &other.num, self.den.clone());
        }
        // combine over the least common denominator
        let g = self.den.gcd(&other.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = other.den.div_exact(&g).unwrap();
        RatFunc::reduced(&(&self.num * &d2) + &(&other.num * &d1), &self.den * &d2)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, other: &RatFunc) -> RatFunc {
        self + &(-other)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        // cross-reduce before multiplying to keep degrees small
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFunc::normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        RatFunc::inv(self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Exact quotient of two Laurent polynomials, reduced and normalized.
pub fn rational_fn_divide(a: &Laurent, b: &Laurent) -> Result<RatFunc, AlgebraError> {
    RatFunc::new(a.clone(), b.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn self_quotient_is_one() {
        let p = Laurent::from_int_terms(&[(2, 1), (0, 1)]);
        assert_eq!(rational_fn_divide(&p, &p).unwrap(), RatFunc::one());
    }

    #[test]
    fn exact_quotient_has_trivial_denominator() {
        // the test oracle: long-hand polynomial division
        let num = Laurent::from_int_terms(&[(0, 1), (2, 1), (4, 1), (6, 1)]);
        let den = Laurent::qdim_v();
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero());
        assert_eq!(q, Laurent::from_int_terms(&[(1, 1), (5, 1)]));

        let rf = rational_fn_divide(&num, &den).unwrap();
        assert!(rf.is_polynomial());
        assert_eq!(rf.as_laurent().unwrap(), &q);
    }

    #[test]
    fn nontrivial_denominator_survives() {
        // 1 / ((q+q^-1)^2 - 1), the prefactor of the two-point splitting rule
        let u = Laurent::qdim_v();
        let den = &u.pow(2) - &Laurent::one();
        let rf = rational_fn_divide(&Laurent::one(), &den).unwrap();
        assert!(!rf.is_polynomial());
        // canonical denominator: q^4 + q^2 ... normalized monic, low exponent 0
        assert_eq!(rf.denominator().low(), Some(0));
        assert_eq!(rf.denominator().leading_coeff(), Some(rat(1)));
        let back = &rf * &RatFunc::from_laurent(den);
        assert_eq!(back, RatFunc::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            rational_fn_divide(&Laurent::one(), &Laurent::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn cross_multiplication_rule() {
        // a/b + c/d = (ad + cb)/(bd) after reduction
        let a = Laurent::from_int_terms(&[(1, 2), (0, 1)]);
        let b = Laurent::from_int_terms(&[(2, 1), (0, -3)]);
        let c = Laurent::from_int_terms(&[(0, 5)]);
        let d = Laurent::from_int_terms(&[(1, 1), (0, 1)]);
        let lhs = &RatFunc::new(a.clone(), b.clone()).unwrap()
            + &RatFunc::new(c.clone(), d.clone()).unwrap();
        let rhs = RatFunc::new(&(&a * &d) + &(&c * &b), &b * &d).unwrap();
        assert_eq!(lhs, rhs);
    }
}
