//! Exact coefficient arithmetic: integers, rationals and the field Q(i, sqrt 2).

mod field;
mod integer;
mod rational;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

pub use field::FieldElem;
pub use integer::Integer;
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse number: {0:?}")]
    Parse(String),
}

/// Coefficient ring for [`crate::poly::Poly`].
///
/// Every implementor is an exact commutative ring; `try_div` returns `None`
/// whenever the quotient does not exist in the ring.
pub trait Coeff:
    Clone + Eq + Hash + Default + fmt::Debug + fmt::Display + FromStr + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add_assign(&mut self, o: &Self);
    fn sub_assign(&mut self, o: &Self);
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_div(&self, o: &Self) -> Option<Self>;
    /// True for coefficients that render with a leading minus sign.
    fn is_negative(&self) -> bool;
    /// Whether the value lies in the rational subfield.
    fn as_rational(&self) -> Option<Rational>;
}

impl Coeff for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn one() -> Self {
        Integer::ONE
    }
    fn from_i64(n: i64) -> Self {
        Integer::from(n)
    }
    #[inline]
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Integer::is_one(self)
    }
    #[inline]
    fn add_assign(&mut self, o: &Self) {
        Integer::add_assign(self, o)
    }
    #[inline]
    fn sub_assign(&mut self, o: &Self) {
        Integer::sub_assign(self, o)
    }
    #[inline]
    fn mul(&self, o: &Self) -> Self {
        Integer::mul(self, o)
    }
    fn neg(&self) -> Self {
        Integer::neg(self)
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        self.div_exact(o)
    }
    fn is_negative(&self) -> bool {
        Integer::is_negative(self)
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(Rational::from(self.clone()))
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn from_i64(n: i64) -> Self {
        Rational::from(n)
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn add_assign(&mut self, o: &Self) {
        *self = Rational::add(self, o);
    }
    fn sub_assign(&mut self, o: &Self) {
        *self = Rational::sub(self, o);
    }
    fn mul(&self, o: &Self) -> Self {
        Rational::mul(self, o)
    }
    fn neg(&self) -> Self {
        Rational::neg(self)
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        self.div(o).ok()
    }
    fn is_negative(&self) -> bool {
        Rational::is_negative(self)
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Coeff for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn one() -> Self {
        FieldElem::one()
    }
    fn from_i64(n: i64) -> Self {
        FieldElem::from(n)
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
    fn is_one(&self) -> bool {
        FieldElem::is_one(self)
    }
    fn add_assign(&mut self, o: &Self) {
        *self = FieldElem::add(self, o);
    }
    fn sub_assign(&mut self, o: &Self) {
        *self = FieldElem::sub(self, o);
    }
    fn mul(&self, o: &Self) -> Self {
        FieldElem::mul(self, o)
    }
    fn neg(&self) -> Self {
        FieldElem::neg(self)
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        self.div(o).ok()
    }
    fn is_negative(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_negative())
    }
    fn as_rational(&self) -> Option<Rational> {
        FieldElem::as_rational(self).cloned()
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| Rational::from_ints(n, d))
    }

    fn elem() -> impl Strategy<Value = FieldElem> {
        (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| FieldElem::new(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms(x in elem(), y in elem(), z in elem()) {
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        }

        #[test]
        fn inverse_laws(x in elem()) {
            prop_assume!(!x.is_zero());
            let inv = x.inv().unwrap();
            prop_assert_eq!(x.mul(&inv), FieldElem::one());
            prop_assert_eq!(inv.inv().unwrap(), x);
        }

        #[test]
        fn rational_subalgebra_closed(a in rational(), b in rational()) {
            let fa = FieldElem::from(a.clone());
            let fb = FieldElem::from(b.clone());
            prop_assert_eq!(fa.mul(&fb), FieldElem::from(a.mul(&b)));
            prop_assert_eq!(fa.add(&fb), FieldElem::from(a.add(&b)));
            if !b.is_zero() {
                prop_assert_eq!(fa.div(&fb).unwrap(), FieldElem::from(a.div(&b).unwrap()));
            }
        }

        #[test]
        fn text_roundtrip(x in elem()) {
            prop_assert_eq!(x.to_string().parse::<FieldElem>().unwrap(), x);
        }
    }
}
