use std::fmt;
use std::str::FromStr;

use super::{AlgebraError, Rational};

/// Element `c0 + c1*I + c2*R + c3*I*R` of Q(i, sqrt 2), with `I^2 = -1` and `R^2 = 2`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldElem {
    c: [Rational; 4],
}

impl FieldElem {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> FieldElem {
        FieldElem { c: [c0, c1, c2, c3] }
    }

    pub fn zero() -> FieldElem {
        FieldElem::default()
    }

    pub fn one() -> FieldElem {
        FieldElem::from(Rational::ONE)
    }

    /// The imaginary unit.
    pub fn i() -> FieldElem {
        FieldElem::new(Rational::ZERO, Rational::ONE, Rational::ZERO, Rational::ZERO)
    }

    /// The square root of two.
    pub fn sqrt2() -> FieldElem {
        FieldElem::new(Rational::ZERO, Rational::ZERO, Rational::ONE, Rational::ZERO)
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    #[inline]
    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.c[0])
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.c[0].is_one()
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        FieldElem {
            c: std::array::from_fn(|k| {
                if o.c[k].is_zero() {
                    self.c[k].clone()
                } else {
                    self.c[k].add(&o.c[k])
                }
            }),
        }
    }

    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem { c: std::array::from_fn(|k| self.c[k].neg()) }
    }

    pub fn scale(&self, r: &Rational) -> FieldElem {
        FieldElem { c: std::array::from_fn(|k| self.c[k].mul(r)) }
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        if o.is_rational() {
            return self.scale(&o.c[0]);
        }
        if self.is_rational() {
            return o.scale(&self.c[0]);
        }
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        let two = Rational::from(2);
        // basis products: I*I = -1, R*R = 2, (IR)*(IR) = -2, I*R = IR, I*IR = -R, R*IR = 2I
        let c0 = a0
            .mul(b0)
            .sub(&a1.mul(b1))
            .add(&two.mul(&a2.mul(b2)))
            .sub(&two.mul(&a3.mul(b3)));
        let c1 = a0
            .mul(b1)
            .add(&a1.mul(b0))
            .add(&two.mul(&a2.mul(b3)))
            .add(&two.mul(&a3.mul(b2)));
        let c2 = a0
            .mul(b2)
            .add(&a2.mul(b0))
            .sub(&a1.mul(b3))
            .sub(&a3.mul(b1));
        let c3 = a0
            .mul(b3)
            .add(&a3.mul(b0))
            .add(&a1.mul(b2))
            .add(&a2.mul(b1));
        FieldElem { c: [c0, c1, c2, c3] }
    }

    /// Image under I -> -I.
    fn conj_i(&self) -> FieldElem {
        FieldElem::new(self.c[0].clone(), self.c[1].neg(), self.c[2].clone(), self.c[3].neg())
    }

    /// Image under R -> -R.
    fn conj_r(&self) -> FieldElem {
        FieldElem::new(self.c[0].clone(), self.c[1].clone(), self.c[2].neg(), self.c[3].neg())
    }

    pub fn inv(&self) -> Result<FieldElem, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(FieldElem::from(self.c[0].inv()?));
        }
        // x * conj_i(x) lies in Q(R); multiplying by its R-conjugate lands in Q.
        let ci = self.conj_i();
        let m = self.mul(&ci);
        let mr = m.conj_r();
        let norm = m.mul(&mr);
        debug_assert!(norm.is_rational());
        let n = norm.c[0].inv()?;
        Ok(ci.mul(&mr).scale(&n))
    }

    pub fn div(&self, o: &FieldElem) -> Result<FieldElem, AlgebraError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> FieldElem {
        let mut acc = FieldElem::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl From<Rational> for FieldElem {
    fn from(r: Rational) -> Self {
        FieldElem::new(r, Rational::ZERO, Rational::ZERO, Rational::ZERO)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from(Rational::from(n))
    }
}

const BASIS: [&str; 4] = ["", "I", "R", "I*R"];

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.c[0]);
        }
        f.write_str("(")?;
        let mut first = true;
        for (k, r) in self.c.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let body = if k == 0 { r.abs().to_string() } else { format!("{}*{}", r.abs(), BASIS[k]) };
            match (first, r.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FieldElem {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || AlgebraError::Parse(s.to_string());
        let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) else {
            return Ok(FieldElem::from(s.parse::<Rational>()?));
        };
        let mut c: [Rational; 4] = Default::default();
        let mut seen = [false; 4];
        let mut rest = inner.trim();
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let (chunk, next) = match rest.find(" + ").into_iter().chain(rest.find(" - ")).min() {
                Some(p) => (&rest[..p], Some((&rest[p + 3..], &rest[p + 1..p + 2] == "-"))),
                None => (rest, None),
            };
            let (coef, basis) = match chunk.split_once('*') {
                None => (chunk, ""),
                Some((a, b)) => (a, b),
            };
            let k = BASIS.iter().position(|b| *b == basis).ok_or_else(bad)?;
            if seen[k] {
                return Err(bad());
            }
            seen[k] = true;
            let mut r = coef.parse::<Rational>().map_err(|_| bad())?;
            if r.is_negative() || r.is_zero() {
                return Err(bad());
            }
            if negative {
                r = r.neg();
            }
            c[k] = r;
            match next {
                None => break,
                Some((n, neg)) => {
                    rest = n;
                    negative = neg;
                }
            }
        }
        Ok(FieldElem { c })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ints(n, d)
    }

    #[test]
    fn defining_relations() {
        let i = FieldElem::i();
        let r = FieldElem::sqrt2();
        assert_eq!(i.mul(&i), FieldElem::from(-1));
        assert_eq!(r.mul(&r), FieldElem::from(2));
        // i / sqrt 2 = I*R/2, squared = -1/2
        let i_over_r = i.mul(&r).scale(&q(1, 2));
        assert_eq!(i_over_r.mul(&i_over_r), FieldElem::from(q(-1, 2)));
    }

    #[test]
    fn inverses() {
        assert_eq!(FieldElem::one().inv().unwrap(), FieldElem::one());
        assert_eq!(FieldElem::i().inv().unwrap(), FieldElem::i().neg());
        let one_plus_r = FieldElem::one().add(&FieldElem::sqrt2());
        let expected = FieldElem::sqrt2().sub(&FieldElem::one());
        assert_eq!(one_plus_r.inv().unwrap(), expected);
        assert!(FieldElem::zero().inv().is_err());
    }

    #[test]
    fn inverse_solves_linear_system() {
        // x = 1 + 2I - R + 3IR; check against the inverse obtained by solving
        // the 4x4 multiplication-matrix system by Gauss-Jordan over Q.
        let x = FieldElem::new(q(1, 1), q(2, 1), q(-1, 1), q(3, 1));
        let basis: Vec<FieldElem> = (0..4)
            .map(|k| {
                let mut c: [Rational; 4] = Default::default();
                c[k] = Rational::ONE;
                FieldElem { c }
            })
            .collect();
        let mut m: Vec<Vec<Rational>> = (0..4)
            .map(|row| {
                let mut v: Vec<Rational> = (0..4).map(|col| x.mul(&basis[col]).c[row].clone()).collect();
                v.push(if row == 0 { Rational::ONE } else { Rational::ZERO });
                v
            })
            .collect();
        for col in 0..4 {
            let p = (col..4).find(|&r| !m[r][col].is_zero()).unwrap();
            m.swap(col, p);
            let inv = m[col][col].inv().unwrap();
            for k in 0..5 {
                m[col][k] = m[col][k].mul(&inv);
            }
            for r in 0..4 {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in 0..5 {
                        let t = m[col][k].mul(&f);
                        m[r][k] = m[r][k].sub(&t);
                    }
                }
            }
        }
        let solved = FieldElem::new(m[0][4].clone(), m[1][4].clone(), m[2][4].clone(), m[3][4].clone());
        assert_eq!(x.inv().unwrap(), solved);
    }

    #[test]
    fn render_and_parse() {
        let x = FieldElem::new(q(1, 2), q(-3, 1), Rational::ZERO, q(5, 7));
        assert_eq!(x.to_string(), "(1/2 - 3*I + 5/7*I*R)");
        assert_eq!(x.to_string().parse::<FieldElem>().unwrap(), x);
        let y = FieldElem::new(Rational::ZERO, q(-1, 1), Rational::ZERO, Rational::ZERO);
        assert_eq!(y.to_string(), "(-1*I)");
        assert_eq!("(-1*I)".parse::<FieldElem>().unwrap(), y);
        assert_eq!("-3/4".parse::<FieldElem>().unwrap(), FieldElem::from(q(-3, 4)));
        assert!("(1 + 2*J)".parse::<FieldElem>().is_err());
        assert!("(1 + 2)".parse::<FieldElem>().is_err());
    }
}
