use std::fmt;
use std::str::FromStr;

use super::{Indeterminate, Monomial, Poly, PolyError};
use crate::algebra::Coeff;

/// Render one term as `COEFF*v^e*...`, sign included in the coefficient.
pub fn render_term<C: Coeff>(m: &Monomial, c: &C) -> String {
    if m.is_one() {
        c.to_string()
    } else {
        format!("{c}*{m}")
    }
}

fn write_unsigned<C: Coeff>(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &C) -> fmt::Result {
    if m.is_one() {
        write!(f, "{c}")
    } else {
        write!(f, "{c}*{m}")
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i == 0, neg) {
                (true, _) => write_unsigned(f, m, c)?,
                (false, false) => {
                    f.write_str(" + ")?;
                    write_unsigned(f, m, c)?;
                }
                (false, true) => {
                    f.write_str(" - ")?;
                    write_unsigned(f, m, &c.neg())?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Split `s` at `*` characters outside parentheses.
fn split_factors(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Parse one term `COEFF*v^e*...`; the coefficient is mandatory.
pub fn parse_term<C: Coeff>(s: &str) -> Result<(Monomial, C), PolyError> {
    let s = s.trim();
    let factors = split_factors(s);
    let coef = C::from_str(factors[0].trim())
        .map_err(|_| PolyError::Parse(format!("bad coefficient in term {s:?}")))?;
    let mut m = Monomial::one();
    for fac in &factors[1..] {
        let fac = fac.trim();
        let (name, e) = match fac.split_once('^') {
            None => (fac, 1u8),
            Some((n, e)) => {
                let e: u8 = e.parse().map_err(|_| PolyError::Parse(format!("bad exponent in {fac:?}")))?;
                if e == 0 {
                    return Err(PolyError::Parse(format!("zero exponent in {fac:?}")));
                }
                (n, e)
            }
        };
        let v = Indeterminate::parse(name)?;
        if m.exp(v) != 0 {
            return Err(PolyError::Parse(format!("repeated indeterminate {name} in {s:?}")));
        }
        m.set_exp(v, e);
    }
    Ok((m, coef))
}

impl<C: Coeff> FromStr for Poly<C> {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Poly::zero());
        }
        // split at top-level " + " / " - " separators
        let bytes = s.as_bytes();
        let mut depth = 0i32;
        let mut pieces: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut neg = false;
        let mut i = 0;
        while i < bytes.len() {
            match bytes[i] {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b' ' if depth == 0
                    && i + 2 < bytes.len()
                    && matches!(bytes[i + 1], b'+' | b'-')
                    && bytes[i + 2] == b' ' =>
                {
                    pieces.push((neg, &s[start..i]));
                    neg = bytes[i + 1] == b'-';
                    start = i + 3;
                    i += 3;
                    continue;
                }
                _ => {}
            }
            i += 1;
        }
        pieces.push((neg, &s[start..]));
        let mut terms = Vec::with_capacity(pieces.len());
        for (neg, piece) in pieces {
            let (m, c) = parse_term::<C>(piece)?;
            if c.is_zero() {
                return Err(PolyError::Parse(format!("zero coefficient in {piece:?}")));
            }
            terms.push((m, if neg { c.neg() } else { c }));
        }
        Ok(Poly::from_terms(terms))
    }
}
