//! Laurent polynomials in `q` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{rat, AlgebraError, Rat};

/// An element of Q[q, q^-1], stored sparsely as exponent -> coefficient.
///
/// Invariant: no zero coefficients are stored, so structural equality is
/// ring equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Laurent {
    coeffs: BTreeMap<i64, Rat>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, rat(1))
    }

    /// The variable q.
    pub fn q() -> Self {
        Laurent::monomial(1, rat(1))
    }

    /// q + q^-1, the graded dimension of the base vector space V.
    pub fn qdim_v() -> Self {
        Laurent::from_terms([(1, rat(1)), (-1, rat(1))])
    }

    pub fn monomial(exp: i64, coeff: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Laurent { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        Laurent::monomial(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let mut p = Laurent::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Laurent::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, exp: i64, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(|| rat(0));
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Lowest exponent with nonzero coefficient; None for the zero polynomial.
    pub fn low(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<Rat> {
        self.high().map(|e| self.coeff(e))
    }

    /// Multiply by q^l (the degree shift {l}).
    pub fn shift(&self, l: i64) -> Self {
        Laurent {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + l, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Laurent::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute q -> -q. Used for the q = -t^(1/2) change of variable.
    pub fn negate_variable(&self) -> Self {
        Laurent {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e, if e % 2 != 0 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Exact division; returns None when `self` is not a multiple of `other`.
    pub fn div_exact(&self, other: &Laurent) -> Option<Laurent> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let (q, r) = self.div_rem(other);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Long division by the leading term, after normalizing both operands to
    /// ordinary polynomials (lowest exponent zero). The quotient and remainder
    /// satisfy self = q*other + r with r either zero or of strictly smaller
    /// polynomial degree, up to the common monomial shift.
    pub fn div_rem(&self, other: &Laurent) -> (Laurent, Laurent) {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return (Laurent::zero(), Laurent::zero());
        }
        let la = self.low().unwrap();
        let lb = other.low().unwrap();
        let mut rem = self.shift(-la);
        let b = other.shift(-lb);
        let b_deg = b.high().unwrap();
        let b_lead = b.leading_coeff().unwrap();
        let mut quot = Laurent::zero();
        while !rem.is_zero() && rem.high().unwrap() >= b_deg {
            let e = rem.high().unwrap() - b_deg;
            let c = rem.leading_coeff().unwrap() / &b_lead;
            let t = Laurent::monomial(e, c);
            rem = &rem - &(&t * &b);
            quot = &quot + &t;
        }
        // undo the normalizing shifts
        (quot.shift(la - lb), rem.shift(la))
    }

    /// Monic gcd (lowest exponent zero) via the Euclidean algorithm on the
    /// polynomial parts. gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Laurent) -> Laurent {
        let mut a = match self.low() {
            Some(l) => self.shift(-l),
            None => Laurent::zero(),
        };
        let mut b = match other.low() {
            Some(l) => other.shift(-l),
            None => Laurent::zero(),
        };
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            // renormalize to keep coefficient growth in check
            b = match r.low() {
                Some(l) => r.shift(-l).monic(),
                None => r,
            };
        }
        a.monic()
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Laurent {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.recip()),
            None => Laurent::zero(),
        }
    }

    /// Evaluate at a rational point (exponents must be valid for x = 0).
    pub fn eval(&self, x: &Rat) -> Result<Rat, AlgebraError> {
        let mut acc = rat(0);
        for (e, c) in self.terms() {
            if e < 0 && x.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            let mut p = rat(1);
            for _ in 0..e.unsigned_abs() {
                p *= x;
            }
            if e < 0 {
                p = p.recip();
            }
            acc += c * p;
        }
        Ok(acc)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

fn fmt_coeff(c: &Rat, f: &mut fmt::Formatter<'_>, with_star: bool) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())?;
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())?;
    }
    if with_star {
        write!(f, "*")?;
    }
    Ok(())
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c < &rat(0);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let c_abs = if neg { -c.clone() } else { c.clone() };
            let unit = c_abs == rat(1);
            if e == 0 {
                fmt_coeff(&c_abs, f, false)?;
            } else {
                if !unit {
                    fmt_coeff(&c_abs, f, true)?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_square() {
        let u = Laurent::qdim_v();
        let sq = &u * &u;
        assert_eq!(sq, Laurent::from_int_terms(&[(2, 1), (0, 2), (-2, 1)]));
    }

    #[test]
    fn one_is_identity() {
        let p = Laurent::from_int_terms(&[(-3, 2), (0, -1), (5, 7)]);
        assert_eq!(&p * &Laurent::one(), p);
    }

    #[test]
    fn shift_multiplies_by_power() {
        let p = Laurent::from_int_terms(&[(0, 1), (2, 3)]);
        assert_eq!(p.shift(2), &p * &Laurent::monomial(2, rat(1)));
    }

    #[test]
    fn hopf_euler_characteristic_factors() {
        // chi_q of the Hopf complex equals (q + q^-1)(q + q^5); expand both
        // sides independently.
        let lhs = Laurent::from_int_terms(&[(0, 1), (2, 1), (4, 1), (6, 1)]);
        let rhs = &Laurent::qdim_v() * &Laurent::from_int_terms(&[(1, 1), (5, 1)]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn div_rem_exact_case() {
        let num = Laurent::from_int_terms(&[(0, 1), (2, 1), (4, 1), (6, 1)]);
        let (q, r) = num.div_rem(&Laurent::qdim_v());
        assert!(r.is_zero());
        assert_eq!(q, Laurent::from_int_terms(&[(1, 1), (5, 1)]));
    }

    #[test]
    fn div_rem_with_remainder() {
        let a = Laurent::from_int_terms(&[(3, 1), (0, 1)]);
        let b = Laurent::from_int_terms(&[(2, 1), (0, 1)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(!r.is_zero());
        assert!(r.high().unwrap() < 2);
    }

    #[test]
    fn gcd_of_coprime_is_unit() {
        let a = Laurent::from_int_terms(&[(1, 1), (0, 1)]);
        let b = Laurent::from_int_terms(&[(1, 1), (0, -1)]);
        assert_eq!(a.gcd(&b), Laurent::one());
    }

    #[test]
    fn gcd_common_factor() {
        let f = Laurent::from_int_terms(&[(2, 1), (0, 1)]);
        let a = &f * &Laurent::from_int_terms(&[(1, 1), (0, 3)]);
        let b = &f * &Laurent::from_int_terms(&[(3, 2), (0, -1)]);
        assert_eq!(a.gcd(&b), f.monic());
    }

    #[test]
    fn negate_variable_flips_odd_exponents() {
        let p = Laurent::from_int_terms(&[(1, 1), (2, 1), (-3, 4)]);
        assert_eq!(
            p.negate_variable(),
            Laurent::from_int_terms(&[(1, -1), (2, 1), (-3, -4)])
        );
    }
}
