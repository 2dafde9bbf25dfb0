use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{AlgebraError, Integer};

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Integer,
    den: Integer,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: Integer::ZERO, den: Integer::ONE };
    pub const ONE: Rational = Rational { num: Integer::ONE, den: Integer::ONE };

    pub fn new(num: Integer, den: Integer) -> Result<Rational, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_ints(num: i64, den: i64) -> Rational {
        Self::new(Integer::from(num), Integer::from(den)).expect("nonzero denominator")
    }

    fn reduced(num: Integer, den: Integer) -> Rational {
        if num.is_zero() {
            return Rational::ZERO;
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        if den.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Rational { num, den }
    }

    pub fn numer(&self) -> &Integer {
        &self.num
    }

    pub fn denom(&self) -> &Integer {
        &self.den
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn neg(&self) -> Rational {
        Rational { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn abs(&self) -> Rational {
        Rational { num: self.num.abs(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Rational) -> Rational {
        if self.den.is_one() && o.den.is_one() {
            return Rational { num: self.num.add(&o.num), den: Integer::ONE };
        }
        if self.den == o.den {
            return Self::reduced(self.num.add(&o.num), self.den.clone());
        }
        Self::reduced(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Rational) -> Rational {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rational) -> Rational {
        if self.den.is_one() && o.den.is_one() {
            return Rational { num: self.num.mul(&o.num), den: Integer::ONE };
        }
        // cross-cancel first to keep operands small
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = if g1.is_one() || g1.is_zero() { self.num.clone() } else { self.num.div_rem(&g1).0 };
        let d2 = if g1.is_one() || g1.is_zero() { o.den.clone() } else { o.den.div_rem(&g1).0 };
        let n2 = if g2.is_one() || g2.is_zero() { o.num.clone() } else { o.num.div_rem(&g2).0 };
        let d1 = if g2.is_one() || g2.is_zero() { self.den.clone() } else { self.den.div_rem(&g2).0 };
        let num = n1.mul(&n2);
        if num.is_zero() {
            return Rational::ZERO;
        }
        Rational { num, den: d1.mul(&d2) }
    }

    pub fn inv(&self) -> Result<Rational, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Rational) -> Result<Rational, AlgebraError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Rational {
        Rational { num: self.num.pow(e), den: self.den.pow(e) }
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational { num: n, den: Integer::ONE }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational { num: Integer::from(n), den: Integer::ONE }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl Ord for Rational {
    fn cmp(&self, o: &Self) -> Ordering {
        self.num.mul(&o.den).cmp(&o.num.mul(&self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || AlgebraError::Parse(s.to_string());
        match s.split_once('/') {
            None => Ok(Rational::from(s.parse::<Integer>().map_err(|_| bad())?)),
            Some((n, d)) => {
                if d.starts_with(['-', '+']) {
                    return Err(bad());
                }
                let n = n.parse::<Integer>().map_err(|_| bad())?;
                let d = d.parse::<Integer>().map_err(|_| bad())?;
                Rational::new(n, d)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes() {
        let r = Rational::from_ints(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::from_ints(0, -5), Rational::ZERO);
        assert_eq!(Rational::from_ints(0, 7).denom(), &Integer::ONE);
    }

    #[test]
    fn arithmetic() {
        let a = Rational::from_ints(1, 2);
        let b = Rational::from_ints(1, 3);
        assert_eq!(a.add(&b), Rational::from_ints(5, 6));
        assert_eq!(a.sub(&b), Rational::from_ints(1, 6));
        assert_eq!(a.mul(&b), Rational::from_ints(1, 6));
        assert_eq!(a.div(&b).unwrap(), Rational::from_ints(3, 2));
        assert!(Rational::ZERO.inv().is_err());
    }

    #[test]
    fn parse() {
        assert_eq!("-9/2".parse::<Rational>().unwrap(), Rational::from_ints(-9, 2));
        assert_eq!("4/2".parse::<Rational>().unwrap(), Rational::from(2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }
}
