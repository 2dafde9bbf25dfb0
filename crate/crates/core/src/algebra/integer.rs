use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision integer with an inline machine-word fast path.
///
/// Values that fit in an `i64` are always stored as `Small`; `Big` is only
/// used once a result overflows. Equality and hashing rely on that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Integer::Small(v) => v.signum() as i32,
            Integer::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::Big(BigInt::from(*v).abs()),
            },
            Integer::Big(b) => Integer::from_big(b.abs()),
        }
    }

    pub fn neg(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b),
        }
    }

    #[inline]
    pub fn add(&self, o: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, o) {
            if let Some(s) = a.checked_add(*b) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_big() + o.to_big())
    }

    #[inline]
    pub fn sub(&self, o: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, o) {
            if let Some(s) = a.checked_sub(*b) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_big() - o.to_big())
    }

    #[inline]
    pub fn mul(&self, o: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, o) {
            if let Some(p) = a.checked_mul(*b) {
                return Integer::Small(p);
            }
        }
        Integer::from_big(self.to_big() * o.to_big())
    }

    #[inline]
    pub fn add_assign(&mut self, o: &Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (&mut *self, o) {
            if let Some(s) = a.checked_add(*b) {
                *a = s;
                return;
            }
        }
        *self = Integer::from_big(self.to_big() + o.to_big());
    }

    #[inline]
    pub fn sub_assign(&mut self, o: &Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (&mut *self, o) {
            if let Some(s) = a.checked_sub(*b) {
                *a = s;
                return;
            }
        }
        *self = Integer::from_big(self.to_big() - o.to_big());
    }

    /// Truncated quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, o: &Integer) -> (Integer, Integer) {
        assert!(!o.is_zero(), "integer division by zero");
        if let (Integer::Small(a), Integer::Small(b)) = (self, o) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (Integer::Small(q), Integer::Small(r));
            }
        }
        let (q, r) = self.to_big().div_rem(&o.to_big());
        (Integer::from_big(q), Integer::from_big(r))
    }

    /// Quotient when `o` divides `self` exactly.
    pub fn div_exact(&self, o: &Integer) -> Option<Integer> {
        if o.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(o);
        r.is_zero().then_some(q)
    }

    /// Nonnegative gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, o) {
            let g = gcd_u64(a.unsigned_abs(), b.unsigned_abs());
            return match i64::try_from(g) {
                Ok(v) => Integer::Small(v),
                Err(_) => Integer::Big(BigInt::from(g)),
            };
        }
        Integer::from_big(self.to_big().gcd(&o.to_big()))
    }

    pub fn pow(&self, e: u32) -> Integer {
        let mut acc = Integer::ONE;
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl Ord for Integer {
    fn cmp(&self, o: &Self) -> Ordering {
        match (self, o) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Integer::Small(v));
        }
        Ok(Integer::from_big(s.parse::<BigInt>()?))
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl std::ops::Add for Integer {
    type Output = Integer;
    fn add(self, o: Integer) -> Integer {
        Integer::add(&self, &o)
    }
}
