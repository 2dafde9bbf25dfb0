use std::fmt;
use std::str::FromStr;

use crate::poly::MultiDegree;

use super::CatalogError;

/// Name of a fundamental covariant, e.g. `D^1_2220` or `B_0000`.
///
/// The letter encodes the degree in the form coefficients (A = 1 ... L = 12),
/// the subscripts the degrees in x, y, z, t, and the optional tag tells
/// apart covariants sharing both.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CovariantSymbol {
    pub degree: u8,
    pub sub: [u8; 4],
    pub tag: Option<u8>,
}

impl CovariantSymbol {
    pub const GROUND: CovariantSymbol = CovariantSymbol { degree: 1, sub: [1, 1, 1, 1], tag: None };

    pub fn new(degree: u8, sub: [u8; 4], tag: Option<u8>) -> CovariantSymbol {
        assert!((1..=12).contains(&degree));
        CovariantSymbol { degree, sub, tag }
    }

    pub fn letter(&self) -> char {
        (b'A' + self.degree - 1) as char
    }

    pub fn multidegree(&self) -> MultiDegree {
        MultiDegree::new(self.degree as u32, self.sub.map(|s| s as u32))
    }

    /// Subscripts sorted in nonincreasing order (the row label of the count table).
    pub fn shape(&self) -> [u8; 4] {
        let mut s = self.sub;
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

impl fmt::Display for CovariantSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.sub;
        match self.tag {
            Some(t) => write!(f, "{}^{}_{}{}{}{}", self.letter(), t, a, b, c, d),
            None => write!(f, "{}_{}{}{}{}", self.letter(), a, b, c, d),
        }
    }
}

impl fmt::Debug for CovariantSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CovariantSymbol {
    type Err = CatalogError;

    /// Accepts `X_pqrs`, `X^m_pqrs`, `X_pqrs^m` and `f`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CatalogError::UnknownSymbol(s.to_string());
        if s == "f" {
            return Ok(CovariantSymbol::GROUND);
        }
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        if !('A'..='L').contains(&letter) {
            return Err(bad());
        }
        let rest = chars.as_str();
        let (tag, subs) = if let Some(r) = rest.strip_prefix('^') {
            let (t, subs) = r.split_once('_').ok_or_else(bad)?;
            (Some(t), subs)
        } else {
            let r = rest.strip_prefix('_').ok_or_else(bad)?;
            match r.split_once('^') {
                Some((subs, t)) => (Some(t), subs),
                None => (None, r),
            }
        };
        let digits: Vec<u8> = subs.bytes().collect();
        if digits.len() != 4 || !digits.iter().all(u8::is_ascii_digit) {
            return Err(bad());
        }
        let tag = match tag {
            Some(t) => Some(t.parse::<u8>().map_err(|_| bad())?),
            None => None,
        };
        Ok(CovariantSymbol {
            degree: (letter as u8 - b'A') + 1,
            sub: std::array::from_fn(|i| digits[i] - b'0'),
            tag,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse() {
        let s: CovariantSymbol = "D^1_2220".parse().unwrap();
        assert_eq!(s, CovariantSymbol::new(4, [2, 2, 2, 0], Some(1)));
        assert_eq!(s.to_string(), "D^1_2220");
        assert_eq!("D_2220^1".parse::<CovariantSymbol>().unwrap(), s);
        assert_eq!("B_0000".parse::<CovariantSymbol>().unwrap().to_string(), "B_0000");
        assert_eq!("f".parse::<CovariantSymbol>().unwrap(), CovariantSymbol::GROUND);
        assert_eq!(CovariantSymbol::GROUND.to_string(), "A_1111");
        assert!("M_0000".parse::<CovariantSymbol>().is_err());
        assert!("B_000".parse::<CovariantSymbol>().is_err());
        assert!("B^x_0000".parse::<CovariantSymbol>().is_err());
    }

    #[test]
    fn shape_sorts_descending() {
        let s: CovariantSymbol = "G_1313".parse().unwrap();
        assert_eq!(s.shape(), [3, 3, 1, 1]);
        assert_eq!(s.multidegree(), MultiDegree::new(7, [1, 3, 1, 3]));
    }
}
