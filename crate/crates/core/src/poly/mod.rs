//! Sparse exact polynomials over the fixed 28-symbol universe.
//!
//! A [`Poly`] keeps its terms sorted in descending graded-lex order with no
//! zero coefficients, so structural equality is polynomial equality and the
//! rendered text is canonical.

mod monomial;
mod text;

use std::collections::hash_map::Entry;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::algebra::{Coeff, FieldElem, Integer, Rational};

pub use monomial::{Indeterminate, IndeterminateKind, Monomial, MultiDegree, Param, Slot, NVARS};
pub use text::{parse_term, render_term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("monomial {0} involves non-variable indeterminates")]
    NotAVariableMonomial(String),
}

/// Product size above which multiplication fans out over rayon.
const PAR_THRESHOLD: usize = 1 << 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C: Coeff> {
    terms: Vec<(Monomial, C)>,
}

pub type IntPoly = Poly<Integer>;
pub type RatPoly = Poly<Rational>;
pub type FieldPoly = Poly<FieldElem>;

/// Hash-based term accumulator used by every product-like operation.
pub struct Accumulator<C: Coeff> {
    map: FxHashMap<Monomial, C>,
}

impl<C: Coeff> Default for Accumulator<C> {
    fn default() -> Self {
        Accumulator { map: FxHashMap::default() }
    }
}

impl<C: Coeff> Accumulator<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        Accumulator { map: FxHashMap::with_capacity_and_hasher(n, Default::default()) }
    }

    #[inline]
    pub fn add(&mut self, m: Monomial, c: C) {
        match self.map.entry(m) {
            Entry::Occupied(mut e) => e.get_mut().add_assign(&c),
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    #[inline]
    pub fn add_ref(&mut self, m: Monomial, c: &C) {
        match self.map.entry(m) {
            Entry::Occupied(mut e) => e.get_mut().add_assign(c),
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn merge(&mut self, mut other: Accumulator<C>) {
        if other.map.len() > self.map.len() {
            std::mem::swap(&mut self.map, &mut other.map);
        }
        for (m, c) in other.map {
            self.add(m, c);
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn into_poly(self) -> Poly<C> {
        let mut terms: Vec<(Monomial, C)> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.par_sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: Indeterminate) -> Self {
        Poly::monomial(Monomial::single(v, 1), C::one())
    }

    /// Build from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(it: I) -> Self {
        let mut acc = Accumulator::new();
        for (m, c) in it {
            acc.add(m, c);
        }
        acc.into_poly()
    }

    /// Build from terms that are already distinct, nonzero and sorted descending.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { terms }
    }

    /// The generic quadrilinear form `sum a[ijkl] x_i y_j z_k t_l`.
    pub fn ground_form() -> Self {
        let mut terms = Vec::with_capacity(16);
        for idx in 0..16 {
            let a = Indeterminate::coeff_index(idx);
            let IndeterminateKind::Coeff(bits) = a.kind() else { unreachable!() };
            let mut pairs = vec![(a, 1u8)];
            for (s, b) in Slot::ALL.iter().zip(bits) {
                pairs.push((Indeterminate::var(*s, b + 1), 1));
            }
            terms.push((Monomial::from_pairs(&pairs), C::one()));
        }
        Poly::from_terms(terms)
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    /// Coefficient of an exact monomial (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> C {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| C::zero())
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let d = f(c);
                    (!d.is_zero()).then_some((*m, d))
                })
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Poly::zero();
        }
        self.map_coeffs(|c| c.mul(k))
    }

    fn merge_with(&self, o: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((*mb, if negate { cb.neg() } else { cb.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let mut c = ca.clone();
                    if negate {
                        c.sub_assign(cb);
                    } else {
                        c.add_assign(cb);
                    }
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(o.terms[j..].iter().map(|(m, c)| (*m, if negate { c.neg() } else { c.clone() })));
        Poly { terms: out }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge_with(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge_with(o, true)
    }

    /// Accumulate `k * self * o` into `acc`.
    pub fn mul_into(&self, o: &Self, k: &C, acc: &mut Accumulator<C>) {
        for (ma, ca) in &self.terms {
            let cak = ca.mul(k);
            for (mb, cb) in &o.terms {
                acc.add(ma.mul(mb), cak.mul(cb));
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        if small.len() * big.len() < PAR_THRESHOLD {
            let mut acc = Accumulator::with_capacity(big.len());
            small.mul_into(big, &C::one(), &mut acc);
            return acc.into_poly();
        }
        let chunk = (big.len() / rayon::current_num_threads().max(1)).max(4096);
        big.terms
            .par_chunks(chunk)
            .map(|part| {
                let mut acc = Accumulator::with_capacity(part.len() * 2);
                for (mb, cb) in part {
                    for (ma, ca) in &small.terms {
                        acc.add(ma.mul(mb), ca.mul(cb));
                    }
                }
                acc
            })
            .reduce(Accumulator::new, |mut a, b| {
                a.merge(b);
                a
            })
            .into_poly()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `v`, taken `k` times.
    pub fn derivative(&self, v: Indeterminate, k: u8) -> Self {
        if k == 0 {
            return self.clone();
        }
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e < k {
                continue;
            }
            let mut ff: i64 = 1;
            for t in 0..k {
                ff *= (e - t) as i64;
            }
            let mut m2 = *m;
            m2.set_exp(v, e - k);
            out.push((m2, c.mul(&C::from_i64(ff))));
        }
        // Lowering one exponent by the same amount preserves relative order.
        Poly { terms: out }
    }

    pub fn partial_derivative(&self, v: Indeterminate) -> Self {
        self.derivative(v, 1)
    }

    /// Simultaneous substitution; indeterminates absent from `assignment`
    /// map to themselves.
    pub fn substitute(&self, assignment: &FxHashMap<Indeterminate, Poly<C>>) -> Self {
        if assignment.is_empty() {
            return self.clone();
        }
        let mut mask = [false; NVARS];
        for v in assignment.keys() {
            mask[v.index()] = true;
        }
        // memoized images of the substituted part of each monomial
        let mut images: FxHashMap<Monomial, Poly<C>> = FxHashMap::default();
        let mut powers: FxHashMap<(Indeterminate, u8), Poly<C>> = FxHashMap::default();
        let mut acc = Accumulator::new();
        for (m, c) in &self.terms {
            let mut sub_part = Monomial::one();
            let mut keep = *m;
            for (v, e) in m.iter() {
                if mask[v.index()] {
                    sub_part.set_exp(v, e);
                    keep.set_exp(v, 0);
                }
            }
            if !images.contains_key(&sub_part) {
                let mut img = Poly::one();
                for (v, e) in sub_part.iter() {
                    let p = powers.entry((v, e)).or_insert_with(|| assignment[&v].pow(e as u32));
                    img = img.mul(p);
                    if img.is_zero() {
                        break;
                    }
                }
                images.insert(sub_part, img);
            }
            for (mi, ci) in images[&sub_part].terms() {
                acc.add(mi.mul(&keep), ci.mul(c));
            }
        }
        acc.into_poly()
    }

    /// Coefficient of the variable monomial `m`, viewing `self` as a
    /// polynomial in the variable components over the other indeterminates.
    pub fn coefficient_extract(&self, m: &Monomial) -> Result<Self, PolyError> {
        if !m.only_vars() {
            return Err(PolyError::NotAVariableMonomial(m.to_string()));
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(t, c)| {
                let (vars, rest) = t.split_vars();
                (vars == *m).then_some((rest, c.clone()))
            })
            .collect::<Vec<_>>();
        // removing a fixed variable part preserves relative order
        Ok(Poly { terms })
    }

    /// Group terms by their variable part.
    pub fn by_variable_monomial(&self) -> Vec<(Monomial, Self)> {
        let mut groups: FxHashMap<Monomial, Vec<(Monomial, C)>> = FxHashMap::default();
        for (t, c) in &self.terms {
            let (vars, rest) = t.split_vars();
            groups.entry(vars).or_default().push((rest, c.clone()));
        }
        let mut out: Vec<(Monomial, Self)> =
            groups.into_iter().map(|(v, terms)| (v, Poly { terms })).collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    /// Exact quotient `self / q`; fails unless `q` divides `self`.
    pub fn exact_divide(&self, q: &Self) -> Result<Self, PolyError> {
        let Some((lm_q, lc_q)) = q.leading_term() else {
            return Err(PolyError::DivisionByZero);
        };
        if q.len() == 1 {
            let mut out = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                let mq = lm_q.quotient_of(m).ok_or(PolyError::NotDivisible)?;
                out.push((mq, c.try_div(lc_q).ok_or(PolyError::NotDivisible)?));
            }
            return Ok(Poly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = Accumulator::new();
        while let Some((lm, lc)) = rem.leading_term().cloned() {
            let mq = lm_q.quotient_of(&lm).ok_or(PolyError::NotDivisible)?;
            let cq = lc.try_div(lc_q).ok_or(PolyError::NotDivisible)?;
            let step = Poly::monomial(mq, cq.clone());
            rem = rem.sub(&step.mul(q));
            quot.add(mq, cq);
        }
        Ok(quot.into_poly())
    }

    /// Common multidegree of all terms, or `None` if inhomogeneous.
    /// The zero polynomial has no multidegree.
    pub fn multidegree(&self) -> Option<MultiDegree> {
        let first = MultiDegree::of(&self.terms.first()?.0);
        self.terms.iter().all(|(m, _)| MultiDegree::of(m) == first).then_some(first)
    }

    pub fn involves(&self, v: Indeterminate) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }
}

impl IntPoly {
    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs(|c| Rational::from(c.clone()))
    }

    pub fn to_field(&self) -> FieldPoly {
        self.map_coeffs(|c| FieldElem::from(Rational::from(c.clone())))
    }
}

impl RatPoly {
    pub fn to_field(&self) -> FieldPoly {
        self.map_coeffs(|c| FieldElem::from(c.clone()))
    }

    /// Integer polynomial if every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntPoly> {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            terms.push((*m, c.numer().clone()));
        }
        Some(Poly { terms })
    }
}

impl FieldPoly {
    pub fn to_rational(&self) -> Option<RatPoly> {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            terms.push((*m, c.as_rational()?.clone()));
        }
        Some(Poly { terms })
    }
}
