use std::cmp::Ordering;
use std::fmt;

use super::PolyError;

/// Number of indeterminates in the fixed universe.
pub const NVARS: usize = 28;
const FIRST_VAR: usize = 16;
const FIRST_PARAM: usize = 24;

/// One of the four binary variable pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    X,
    Y,
    Z,
    T,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::X, Slot::Y, Slot::Z, Slot::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Slot {
        Slot::ALL[i]
    }

    pub fn letter(self) -> char {
        ['x', 'y', 'z', 't'][self.index()]
    }
}

/// Normal-form parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    A,
    B,
    C,
    D,
}

impl Param {
    pub const ALL: [Param; 4] = [Param::A, Param::B, Param::C, Param::D];

    pub fn letter(self) -> char {
        ['a', 'b', 'c', 'd'][self as usize]
    }
}

/// A member of the 28-symbol universe, ordered
/// `a[0000] < ... < a[1111] < x1 < x2 < y1 < ... < t2 < a < b < c < d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indeterminate(u8);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndeterminateKind {
    /// Form coefficient `a[ijkl]`, bits as written.
    Coeff([u8; 4]),
    /// Variable component; `comp` is 1 or 2.
    Var(Slot, u8),
    Param(Param),
}

impl Indeterminate {
    /// Form coefficient `a[ijkl]`.
    pub fn coeff(bits: [u8; 4]) -> Indeterminate {
        assert!(bits.iter().all(|&b| b <= 1), "coefficient index bits must be 0 or 1");
        Indeterminate(bits[0] * 8 + bits[1] * 4 + bits[2] * 2 + bits[3])
    }

    /// Form coefficient by its packed index `8i + 4j + 2k + l`.
    pub fn coeff_index(idx: usize) -> Indeterminate {
        assert!(idx < 16);
        Indeterminate(idx as u8)
    }

    /// Variable component `v_comp`, `comp` in {1, 2}.
    pub fn var(slot: Slot, comp: u8) -> Indeterminate {
        assert!(comp == 1 || comp == 2, "variable component must be 1 or 2");
        Indeterminate((FIRST_VAR + 2 * slot.index() + (comp as usize - 1)) as u8)
    }

    pub fn param(p: Param) -> Indeterminate {
        Indeterminate((FIRST_PARAM + p as usize) as u8)
    }

    pub fn from_index(i: usize) -> Indeterminate {
        assert!(i < NVARS);
        Indeterminate(i as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = Indeterminate> {
        (0..NVARS as u8).map(Indeterminate)
    }

    pub fn kind(self) -> IndeterminateKind {
        let i = self.0 as usize;
        if i < FIRST_VAR {
            IndeterminateKind::Coeff([(i >> 3) as u8 & 1, (i >> 2) as u8 & 1, (i >> 1) as u8 & 1, i as u8 & 1])
        } else if i < FIRST_PARAM {
            let j = i - FIRST_VAR;
            IndeterminateKind::Var(Slot::from_index(j / 2), (j % 2) as u8 + 1)
        } else {
            IndeterminateKind::Param(Param::ALL[i - FIRST_PARAM])
        }
    }

    pub fn is_coeff(self) -> bool {
        (self.0 as usize) < FIRST_VAR
    }

    pub fn is_var(self) -> bool {
        (FIRST_VAR..FIRST_PARAM).contains(&(self.0 as usize))
    }

    pub fn is_param(self) -> bool {
        self.0 as usize >= FIRST_PARAM
    }

    pub fn parse(s: &str) -> Result<Indeterminate, PolyError> {
        let bad = || PolyError::Parse(format!("unknown indeterminate {s:?}"));
        let b = s.as_bytes();
        if let Some(inner) = s.strip_prefix("a[").and_then(|r| r.strip_suffix(']')) {
            let ib = inner.as_bytes();
            if ib.len() != 4 || !ib.iter().all(|c| *c == b'0' || *c == b'1') {
                return Err(bad());
            }
            return Ok(Indeterminate::coeff([ib[0] - b'0', ib[1] - b'0', ib[2] - b'0', ib[3] - b'0']));
        }
        match b {
            [p] => Param::ALL
                .iter()
                .find(|q| q.letter() as u8 == *p)
                .map(|q| Indeterminate::param(*q))
                .ok_or_else(bad),
            [v, c] if matches!(c, b'1' | b'2') => Slot::ALL
                .iter()
                .find(|sl| sl.letter() as u8 == *v)
                .map(|sl| Indeterminate::var(*sl, c - b'0'))
                .ok_or_else(bad),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            IndeterminateKind::Coeff(b) => write!(f, "a[{}{}{}{}]", b[0], b[1], b[2], b[3]),
            IndeterminateKind::Var(s, c) => write!(f, "{}{}", s.letter(), c),
            IndeterminateKind::Param(p) => write!(f, "{}", p.letter()),
        }
    }
}

impl fmt::Debug for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exponent vector over the fixed universe. Exponents are capped at 255.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial([u8; NVARS]);

impl Default for Monomial {
    fn default() -> Self {
        Monomial::one()
    }
}

impl Monomial {
    pub const fn one() -> Monomial {
        Monomial([0; NVARS])
    }

    pub fn from_exponents(e: [u8; NVARS]) -> Monomial {
        Monomial(e)
    }

    pub fn single(v: Indeterminate, e: u8) -> Monomial {
        let mut m = Monomial::one();
        m.0[v.index()] = e;
        m
    }

    pub fn from_pairs(pairs: &[(Indeterminate, u8)]) -> Monomial {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m.0[v.index()] = m.0[v.index()].checked_add(*e).expect("exponent overflow");
        }
        m
    }

    pub fn exponents(&self) -> &[u8; NVARS] {
        &self.0
    }

    #[inline]
    pub fn exp(&self, v: Indeterminate) -> u8 {
        self.0[v.index()]
    }

    #[inline]
    pub fn exp_at(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn set_exp(&mut self, v: Indeterminate, e: u8) {
        self.0[v.index()] = e;
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut out = [0u8; NVARS];
        let mut overflow = false;
        for i in 0..NVARS {
            let (s, o) = self.0[i].overflowing_add(o.0[i]);
            out[i] = s;
            overflow |= o;
        }
        assert!(!overflow, "monomial exponent overflow");
        Monomial(out)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut out = [0u8; NVARS];
        for i in 0..NVARS {
            out[i] = u8::try_from(self.0[i] as u32 * e).expect("monomial exponent overflow");
        }
        Monomial(out)
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self` when `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Option<Monomial> {
        let mut out = [0u8; NVARS];
        for i in 0..NVARS {
            out[i] = o.0[i].checked_sub(self.0[i])?;
        }
        Some(Monomial(out))
    }

    /// Split into (variable-component part, everything else).
    pub fn split_vars(&self) -> (Monomial, Monomial) {
        let mut vars = Monomial::one();
        let mut rest = *self;
        vars.0[FIRST_VAR..FIRST_PARAM].copy_from_slice(&self.0[FIRST_VAR..FIRST_PARAM]);
        rest.0[FIRST_VAR..FIRST_PARAM].fill(0);
        (vars, rest)
    }

    pub fn only_vars(&self) -> bool {
        self.0[..FIRST_VAR].iter().all(|&e| e == 0) && self.0[FIRST_PARAM..].iter().all(|&e| e == 0)
    }

    /// Degree in the form coefficients.
    pub fn coeff_degree(&self) -> u32 {
        self.0[..FIRST_VAR].iter().map(|&e| e as u32).sum()
    }

    /// Degrees in x, y, z, t.
    pub fn var_degrees(&self) -> [u32; 4] {
        std::array::from_fn(|s| self.0[FIRST_VAR + 2 * s] as u32 + self.0[FIRST_VAR + 2 * s + 1] as u32)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Indeterminate, u8)> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, e)| (Indeterminate(i as u8), *e))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order; among equal degrees the exponent of the
    /// largest indeterminate (`d`) is compared first.
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            for i in (0..NVARS).rev() {
                match self.0[i].cmp(&o.0[i]) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree `d` in the form coefficients and `mu` in the four variable pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    pub d: u32,
    pub mu: [u32; 4],
}

impl MultiDegree {
    pub fn new(d: u32, mu: [u32; 4]) -> MultiDegree {
        MultiDegree { d, mu }
    }

    pub fn of(m: &Monomial) -> MultiDegree {
        MultiDegree { d: m.coeff_degree(), mu: m.var_degrees() }
    }

    pub fn add(&self, o: &MultiDegree) -> MultiDegree {
        MultiDegree { d: self.d + o.d, mu: std::array::from_fn(|i| self.mu[i] + o.mu[i]) }
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {},{},{},{})", self.d, self.mu[0], self.mu[1], self.mu[2], self.mu[3])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_order_and_names() {
        let names: Vec<String> = Indeterminate::all().map(|v| v.to_string()).collect();
        assert_eq!(names.len(), 28);
        assert_eq!(names[0], "a[0000]");
        assert_eq!(names[1], "a[0001]");
        assert_eq!(names[15], "a[1111]");
        assert_eq!(&names[16..24], &["x1", "x2", "y1", "y2", "z1", "z2", "t1", "t2"]);
        assert_eq!(&names[24..], &["a", "b", "c", "d"]);
        for (i, n) in names.iter().enumerate() {
            assert_eq!(Indeterminate::parse(n).unwrap().index(), i);
        }
        assert!(Indeterminate::parse("x3").is_err());
        assert!(Indeterminate::parse("a[0120]").is_err());
        assert!(Indeterminate::parse("e").is_err());
    }

    #[test]
    fn grlex() {
        let x1 = Monomial::single(Indeterminate::var(Slot::X, 1), 1);
        let x2 = Monomial::single(Indeterminate::var(Slot::X, 2), 1);
        let d = Monomial::single(Indeterminate::param(Param::D), 1);
        assert!(x2 > x1);
        assert!(d > x2);
        assert!(x1.mul(&x1) > d);
        assert_eq!(x1.cmp(&x1), Ordering::Equal);
    }

    #[test]
    fn degrees() {
        let m = Monomial::from_pairs(&[
            (Indeterminate::coeff([0, 0, 0, 0]), 2),
            (Indeterminate::var(Slot::X, 1), 1),
            (Indeterminate::var(Slot::X, 2), 2),
            (Indeterminate::var(Slot::T, 1), 1),
            (Indeterminate::param(Param::B), 4),
        ]);
        assert_eq!(MultiDegree::of(&m), MultiDegree::new(2, [3, 0, 0, 1]));
        assert_eq!(m.to_string(), "a[0000]^2*x1*x2^2*t1*b^4");
        let (v, r) = m.split_vars();
        assert_eq!(v.to_string(), "x1*x2^2*t1");
        assert_eq!(r.to_string(), "a[0000]^2*b^4");
        assert!(v.only_vars());
    }
}
