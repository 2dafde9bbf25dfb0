//! Covariant Hilbert series.
//!
//! `S = prod_i (1 - u_i^-2) prod_alpha (1 - u^alpha t)^-1` over the sixteen
//! weights `alpha in {-1, 1}^4`, and `h = L S` where `L` keeps the monomials
//! with nonnegative u-exponents. `c_{d;mu}` is the coefficient of
//! `t^d u^mu` in `h`.

use std::collections::BTreeMap;
use std::fmt;

use crate::check::Check;

/// Finitely supported Laurent polynomial in `u1..u4`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<[i32; 4], i128>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial([0; 4], 1)
    }

    pub fn monomial(e: [i32; 4], c: i128) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: [i32; 4], c: i128) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32; 4], &i128)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: [i32; 4]) -> i128 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, *c);
        }
        out
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(std::array::from_fn(|i| e1[i] + e2[i]), c1 * c2);
            }
        }
        out
    }

    /// Image under `u_i -> u_i^-1`.
    pub fn invert_variable(&self, i: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut e = *e;
            e[i] = -e[i];
            out.add_term(e, *c);
        }
        out
    }

    /// Value at `u = (1, 1, 1, 1)`.
    pub fn eval_at_ones(&self) -> i128 {
        self.terms.values().sum()
    }

    /// The operator `L`: drop every monomial with a negative exponent.
    pub fn truncate_nonnegative(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().filter(|(e, _)| e.iter().all(|&x| x >= 0)).map(|(e, c)| (*e, *c)).collect() }
    }

    /// Specialize `u1 = u2 = u3 = u4 = u`; returns coefficients indexed by
    /// the power of `u` (nonnegative supports only).
    pub fn diagonal(&self) -> Vec<i128> {
        let mut out = Vec::new();
        for (e, c) in &self.terms {
            let s: i32 = e.iter().sum();
            assert!(s >= 0, "diagonal of a polynomial with negative total exponent");
            let s = s as usize;
            if out.len() <= s {
                out.resize(s + 1, 0);
            }
            out[s] += c;
        }
        trim(&mut out);
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// `c*u1^a*u2^b...`, terms in descending exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if k == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            write!(f, "{}", c.unsigned_abs())?;
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*u{}", i + 1)?,
                    _ => write!(f, "*u{}^{}", i + 1, x)?,
                }
            }
        }
        Ok(())
    }
}

fn trim(v: &mut Vec<i128>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Render a polynomial in one variable `u` given by its coefficients,
/// ascending powers: `1 + 6*u^4 + u^8`.
pub fn render_u_poly(c: &[i128]) -> String {
    let mut out = String::new();
    for (p, &k) in c.iter().enumerate().filter(|(_, k)| **k != 0) {
        if out.is_empty() {
            if k < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if k < 0 { " - " } else { " + " });
        }
        let a = k.unsigned_abs();
        match (p, a) {
            (0, _) => out.push_str(&a.to_string()),
            (1, 1) => out.push('u'),
            (1, _) => out.push_str(&format!("{a}*u")),
            (_, 1) => out.push_str(&format!("u^{p}")),
            _ => out.push_str(&format!("{a}*u^{p}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Largest supported truncation degree; keeps every coefficient inside i64.
pub const MAX_TMAX: u32 = 60;

/// Characters of `S^d(H)` for `d <= tmax`, stored densely: entry `k` of
/// level `d` counts multisets of `d` weights with `k_i` weights having
/// `+1` in coordinate `i`, i.e. the coefficient of `u^(2k - d)`.
struct CharacterTable {
    levels: Vec<Vec<i64>>,
}

impl CharacterTable {
    fn new(tmax: u32) -> CharacterTable {
        assert!(tmax <= MAX_TMAX, "truncation degree {tmax} above {MAX_TMAX}");
        let tmax = tmax as usize;
        let mut levels: Vec<Vec<i64>> = (0..=tmax).map(|d| vec![0; (d + 1).pow(4)]).collect();
        levels[0][0] = 1;
        // multiply by 1/(1 - u^alpha t) one weight at a time
        for alpha in 0..16usize {
            let shift: [usize; 4] = std::array::from_fn(|i| (alpha >> (3 - i)) & 1);
            for d in 1..=tmax {
                let (lower, upper) = levels.split_at_mut(d);
                let prev = &lower[d - 1];
                let cur = &mut upper[0];
                let n = d + 1;
                for k0 in shift[0]..n {
                    for k1 in shift[1]..n {
                        for k2 in shift[2]..n {
                            for k3 in shift[3]..n {
                                let src = [k0 - shift[0], k1 - shift[1], k2 - shift[2], k3 - shift[3]];
                                if src.iter().any(|&s| s > d - 1) {
                                    continue;
                                }
                                let v = prev[index(d - 1, src)];
                                if v != 0 {
                                    let slot = &mut cur[index(d, [k0, k1, k2, k3])];
                                    *slot = slot.checked_add(v).expect("character coefficient overflow");
                                }
                            }
                        }
                    }
                }
            }
        }
        CharacterTable { levels }
    }

    fn coeff(&self, d: usize, e: [i32; 4]) -> i64 {
        let mut k = [0usize; 4];
        for i in 0..4 {
            let s = e[i] + d as i32;
            if s < 0 || s % 2 != 0 || s / 2 > d as i32 {
                return 0;
            }
            k[i] = (s / 2) as usize;
        }
        self.levels[d][index(d, k)]
    }

    fn character(&self, d: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        let n = d + 1;
        for (pos, &v) in self.levels[d].iter().enumerate() {
            if v != 0 {
                let k = [pos / (n * n * n), (pos / (n * n)) % n, (pos / n) % n, pos % n];
                out.add_term(std::array::from_fn(|i| 2 * k[i] as i32 - d as i32), v as i128);
            }
        }
        out
    }

    /// Inclusion-exclusion form of `L` applied to the product with
    /// `prod (1 - u_i^-2)`: the coefficient of `u^mu` only collects
    /// character coefficients at `mu + 2 * 1_S`.
    fn dimension(&self, d: usize, mu: [u32; 4]) -> i64 {
        let mut total = 0i64;
        for s in 0..16usize {
            let e: [i32; 4] = std::array::from_fn(|i| mu[i] as i32 + 2 * ((s >> i) & 1) as i32);
            let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
            total += sign * self.coeff(d, e);
        }
        total
    }
}

fn index(d: usize, k: [usize; 4]) -> usize {
    let n = d + 1;
    ((k[0] * n + k[1]) * n + k[2]) * n + k[3]
}

/// Coefficient of `t^d` in `prod_alpha (1 - u^alpha t)^-1`.
pub fn character_of_symmetric_power(d: u32) -> LaurentPoly {
    CharacterTable::new(d).character(d as usize)
}

/// `prod_i (1 - u_i^-2)`.
pub fn weyl_factor() -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for i in 0..4 {
        let mut e = [0; 4];
        e[i] = -2;
        let mut f = LaurentPoly::one();
        f.add_term(e, -1);
        out = out.mul(&f);
    }
    out
}

/// Coefficients of `t^d`, `d <= tmax`, of a series in `t` and `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    degrees: Vec<LaurentPoly>,
}

impl SeriesTable {
    pub fn tmax(&self) -> u32 {
        self.degrees.len() as u32 - 1
    }

    pub fn degree(&self, d: u32) -> &LaurentPoly {
        &self.degrees[d as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> {
        self.degrees.iter().enumerate().map(|(d, p)| (d as u32, p))
    }
}

/// `L S` up to `t^tmax`, by literal multiplication and monomial filtering.
pub fn covariant_series(tmax: u32) -> SeriesTable {
    let table = CharacterTable::new(tmax);
    let w = weyl_factor();
    SeriesTable {
        degrees: (0..=tmax as usize).map(|d| table.character(d).mul(&w).truncate_nonnegative()).collect(),
    }
}

/// `c_{d;mu}`.
pub fn covariant_dimension(d: u32, mu: [u32; 4]) -> u64 {
    if mu.iter().any(|&m| m > d) {
        return 0;
    }
    let e = mu.map(|m| m as i32);
    let c = character_of_symmetric_power(d).mul(&weyl_factor()).truncate_nonnegative().coeff(e);
    u64::try_from(c).expect("multiplicities are nonnegative")
}

/// All `(mu, c_{d;mu})` with `c > 0`, in lexicographic order of `mu`.
pub fn covariant_dimensions(d: u32) -> Vec<([u32; 4], u64)> {
    let table = CharacterTable::new(d);
    let mut out = Vec::new();
    for pos in 0..(d as usize + 1).pow(4) {
        let n = d as usize + 1;
        let mu = [pos / (n * n * n), (pos / (n * n)) % n, (pos / n) % n, pos % n].map(|m| m as u32);
        let c = table.dimension(d as usize, mu);
        if c > 0 {
            out.push((mu, c as u64));
        }
    }
    out
}

/// Coefficient of `t^d` of `h(t, u, u, u, u)` for `d <= tmax`, indexed by
/// the power of `u`.
pub fn diagonal_series(tmax: u32) -> Vec<Vec<i128>> {
    covariant_series(tmax).iter().map(|(_, p)| p.diagonal()).collect()
}

/// Same values as [`diagonal_series`], computed from the dense character
/// table (usable for larger `tmax`).
pub fn diagonal_series_fast(tmax: u32) -> Vec<Vec<i128>> {
    let table = CharacterTable::new(tmax);
    (0..=tmax as usize)
        .map(|d| {
            let mut out = vec![0i128; 4 * d + 1];
            let n = d + 1;
            for pos in 0..n.pow(4) {
                let mu = [pos / (n * n * n), (pos / (n * n)) % n, (pos / n) % n, pos % n].map(|m| m as u32);
                let c = table.dimension(d, mu);
                out[mu.iter().sum::<u32>() as usize] += c as i128;
            }
            trim(&mut out);
            out
        })
        .collect()
}

/// `c_{d;0000}` for `d <= tmax`.
pub fn invariant_series(tmax: u32) -> Vec<u64> {
    let table = CharacterTable::new(tmax);
    (0..=tmax as usize).map(|d| table.dimension(d, [0; 4]) as u64).collect()
}

/// Numerator of the diagonal series as printed: rows are `t` powers, each
/// a list of `(u power, coefficient)`.
pub const PRINTED_NUMERATOR: &[&[(u32, i64)]] = &[
    &[(0, 1)],
    &[(2, -1)],
    &[(4, 3), (2, -2)],
    &[(6, 1), (4, 4)],
    &[(4, 10), (2, -1)],
    &[(8, -4), (6, -2), (4, 2)],
    &[(10, 2), (8, 6), (6, -2), (4, 8)],
    &[(10, 2), (8, 6)],
    &[(12, -8), (10, 1), (8, 13), (6, -2), (4, 4)],
    &[(12, -8), (10, -1), (8, 12), (6, -1)],
    &[(14, 2), (12, -13), (8, 13), (6, -2)],
    &[(14, 1), (12, -12), (10, 1), (8, 8)],
    &[(16, -4), (14, 2), (12, -13), (10, -1), (8, 8)],
    &[(12, -6), (10, -2)],
    &[(16, -8), (14, 2), (12, -6), (10, -2)],
    &[(16, -2), (14, 2), (12, 4)],
    &[(18, 1), (16, -10)],
    &[(16, -4), (14, -1)],
    &[(18, 2), (16, -3)],
    &[(18, 1)],
    &[(20, -1)],
];

/// Denominator of the diagonal series as printed: factors
/// `(1 - t^a u^b)^m` listed as `(a, b, m)`.
pub const PRINTED_DENOMINATOR: &[(u32, u32, u32)] = &[
    (1, 2, 1),
    (1, 4, 1),
    (2, 0, 1),
    (2, 2, 2),
    (2, 4, 3),
    (4, 0, 1),
    (4, 2, 1),
    (4, 4, 1),
    (6, 0, 1),
];

/// Bivariate polynomial in `t` and `u`: `p[t][u]`.
type TuPoly = Vec<Vec<i128>>;

fn printed_numerator() -> TuPoly {
    PRINTED_NUMERATOR
        .iter()
        .map(|row| {
            let mut v = vec![0i128; row.iter().map(|(p, _)| *p as usize + 1).max().unwrap_or(0)];
            for (p, c) in row.iter() {
                v[*p as usize] += *c as i128;
            }
            v
        })
        .collect()
}

fn tu_add_to(acc: &mut TuPoly, d: usize, p: usize, c: i128) {
    if acc.len() <= d {
        acc.resize(d + 1, Vec::new());
    }
    if acc[d].len() <= p {
        acc[d].resize(p + 1, 0);
    }
    acc[d][p] += c;
}

/// Multiply by `(1 - t^a u^b)^-1`, truncating above `t^tmax`.
fn divide_by_factor(p: &TuPoly, a: usize, b: usize, tmax: usize) -> TuPoly {
    let mut out: TuPoly = vec![Vec::new(); tmax + 1];
    for d in 0..=tmax {
        if let Some(row) = p.get(d) {
            for (u, &c) in row.iter().enumerate() {
                tu_add_to(&mut out, d, u, c);
            }
        }
        if d >= a {
            let prev = out[d - a].clone();
            for (u, &c) in prev.iter().enumerate() {
                tu_add_to(&mut out, d, u + b, c);
            }
        }
    }
    out
}

/// Expand the printed `P/Q` as a series in `t` up to `t^tmax`.
pub fn expand_printed_pq(tmax: u32) -> Vec<Vec<i128>> {
    let tmax = tmax as usize;
    let mut s = printed_numerator();
    s.truncate(tmax + 1);
    for &(a, b, m) in PRINTED_DENOMINATOR {
        for _ in 0..m {
            s = divide_by_factor(&s, a as usize, b as usize, tmax);
        }
    }
    s.resize(tmax + 1, Vec::new());
    for row in s.iter_mut() {
        trim(row);
    }
    s
}

/// One cell where the printed rational function and `L S` disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqMismatch {
    pub d: u32,
    pub upow: u32,
    pub series: i128,
    pub printed: i128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqReport {
    pub tmax: u32,
    pub mismatches: Vec<PqMismatch>,
}

impl PqReport {
    pub fn first_mismatching_degree(&self) -> Option<u32> {
        self.mismatches.first().map(|m| m.d)
    }
}

impl fmt::Display for PqReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "compare P/Q with L S up to t^{}: {} mismatching cells", self.tmax, self.mismatches.len())?;
        writeln!(f, "d upow series printed")?;
        for m in &self.mismatches {
            writeln!(f, "{} {} {} {}", m.d, m.upow, m.series, m.printed)?;
        }
        Ok(())
    }
}

/// Diff the printed `P/Q` against the diagonal of `L S`, cell by cell.
pub fn compare_with_printed_pq(tmax: u32) -> PqReport {
    let series = diagonal_series_fast(tmax);
    let printed = expand_printed_pq(tmax);
    let mut mismatches = Vec::new();
    for d in 0..=tmax as usize {
        let n = series[d].len().max(printed[d].len());
        for u in 0..n {
            let s = series[d].get(u).copied().unwrap_or(0);
            let p = printed[d].get(u).copied().unwrap_or(0);
            if s != p {
                mismatches.push(PqMismatch { d: d as u32, upow: u as u32, series: s, printed: p });
            }
        }
    }
    PqReport { tmax, mismatches }
}

/// Multiplicity of the root `t = 1` of a univariate integer polynomial.
pub fn multiplicity_at_one(p: &[i128]) -> u32 {
    let mut p: Vec<i128> = p.to_vec();
    trim(&mut p);
    assert!(!p.is_empty(), "zero polynomial has no finite multiplicity");
    let mut k = 0;
    loop {
        if p.iter().sum::<i128>() != 0 {
            return k;
        }
        // synthetic division by (t - 1)
        let mut q = vec![0i128; p.len() - 1];
        let mut carry = 0i128;
        for i in (1..p.len()).rev() {
            carry += p[i];
            q[i - 1] = carry;
        }
        p = q;
        k += 1;
    }
}

/// `P(t, t)` for the printed numerator.
pub fn printed_numerator_on_diagonal() -> Vec<i128> {
    let mut out = Vec::new();
    for (d, row) in PRINTED_NUMERATOR.iter().enumerate() {
        for (u, c) in row.iter() {
            let p = d + *u as usize;
            if out.len() <= p {
                out.resize(p + 1, 0);
            }
            out[p] += *c as i128;
        }
    }
    out
}

/// Multiplicity of `(1 - t)` in the printed `Q(t, u = t)`; each factor
/// `1 - t^(a+b)` contributes one.
pub fn printed_denominator_pole_order() -> u32 {
    PRINTED_DENOMINATOR.iter().map(|&(_, _, m)| m).sum()
}

/// Series bound used by [`krull_dimension`]; the numerator over the printed
/// denominator has degree 36 on the diagonal, the rest is a zero window.
pub const KRULL_TMAX: u32 = 40;

/// Pole order of `h(t, t, t, t, t)` at `t = 1`, derived two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrullReport {
    /// Multiplicity of `(1 - t)` in `Q(t, t)`.
    pub denominator_order: u32,
    /// `h(t, t, t, t, t) * Q(t, t)` from the series, trailing zeros removed.
    pub numerator: Vec<i128>,
    /// Number of computed coefficients past the numerator degree that vanish.
    pub zero_window: u32,
    /// Multiplicity of `(1 - t)` in that numerator.
    pub numerator_order: u32,
    /// Multiplicity of `(1 - t)` in the printed `P(t, t)`.
    pub printed_numerator_order: u32,
}

impl KrullReport {
    pub fn pole_order(&self) -> u32 {
        self.denominator_order - self.numerator_order
    }

    pub fn printed_pole_order(&self) -> u32 {
        self.denominator_order - self.printed_numerator_order
    }
}

/// Multiply `L S` on the diagonal `u = t` by the printed `Q(t, t)` and read
/// off the pole order at `t = 1`. The printed numerator is evaluated too,
/// for comparison.
pub fn krull_analysis(tmax: u32) -> KrullReport {
    let ds = diagonal_series_fast(tmax);
    let n = tmax as usize;
    // coefficients of t^k for k <= tmax are complete: t^k collects d <= k
    let mut h = vec![0i128; n + 1];
    for (d, row) in ds.iter().enumerate() {
        for (u, c) in row.iter().enumerate() {
            if d + u <= n {
                h[d + u] += c;
            }
        }
    }
    let mut q = vec![1i128];
    for &(a, b, m) in PRINTED_DENOMINATOR {
        let s = (a + b) as usize;
        for _ in 0..m {
            let mut next = vec![0i128; q.len() + s];
            for (i, c) in q.iter().enumerate() {
                next[i] += c;
                next[i + s] -= c;
            }
            q = next;
        }
    }
    let mut num = vec![0i128; n + 1];
    for (i, hi) in h.iter().enumerate() {
        for (j, qj) in q.iter().enumerate().take(n + 1 - i) {
            num[i + j] += hi * qj;
        }
    }
    let full = num.len() as u32;
    trim(&mut num);
    let zero_window = full - num.len() as u32;
    KrullReport {
        denominator_order: printed_denominator_pole_order(),
        numerator_order: multiplicity_at_one(&num),
        numerator: num,
        zero_window,
        printed_numerator_order: multiplicity_at_one(&printed_numerator_on_diagonal()),
    }
}

/// Krull dimension of the covariant algebra: the pole order of
/// `h(t, t, t, t, t)` at `t = 1`.
pub fn krull_dimension() -> u32 {
    let r = krull_analysis(KRULL_TMAX);
    assert!(r.zero_window >= 4, "numerator over Q(t, t) does not terminate below t^{KRULL_TMAX}");
    r.pole_order()
}

/// Diagonal low-degree values, the Weyl dimension sum for `d <= 8`, the
/// Krull dimension and the P/Q comparison report.
pub fn series_checks() -> Vec<Check> {
    let diag = diagonal_series(2);
    let shown: Vec<String> = diag.iter().map(|c| render_u_poly(c)).collect();
    let mut out = vec![Check::new(
        "diagonal series starts 1, u^4, 1 + 6*u^4 + u^8",
        shown == ["1", "u^4", "1 + 6*u^4 + u^8"],
        shown.join(", "),
    )];
    let binom = |n: u64, k: u64| (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128);
    let bad: Vec<String> = (0..=8u32)
        .filter(|&d| {
            let total: u128 = covariant_dimensions(d)
                .iter()
                .map(|(mu, c)| *c as u128 * mu.iter().map(|&m| m as u128 + 1).product::<u128>())
                .sum();
            total != binom(15 + d as u64, d as u64)
        })
        .map(|d| d.to_string())
        .collect();
    out.push(Check::new("sum of c_{d;mu} prod(mu_i + 1) = C(15 + d, d) for d <= 8", bad.is_empty(), bad.join(" ")));
    let k = krull_analysis(KRULL_TMAX);
    out.push(Check::new(
        "Krull dimension 12",
        k.pole_order() == 12,
        format!("series numerator gives {}, printed numerator gives {}", k.pole_order(), k.printed_pole_order()),
    ));
    let report = compare_with_printed_pq(8);
    out.push(Check::new(
        "printed P/Q comparison report to t^8",
        true,
        match report.first_mismatching_degree() {
            Some(d) => format!("{} mismatching cells, first at degree {d}", report.mismatches.len()),
            None => "no mismatches".to_string(),
        },
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn binom(n: u64, k: u64) -> i128 {
        (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
    }

    /// Character of S^d by explicit enumeration of weight multisets.
    fn brute_character(d: usize) -> LaurentPoly {
        fn rec(start: usize, left: usize, e: [i32; 4], out: &mut BTreeMap<[i32; 4], i128>) {
            if left == 0 {
                *out.entry(e).or_insert(0) += 1;
                return;
            }
            for a in start..16 {
                let w: [i32; 4] = std::array::from_fn(|i| if (a >> i) & 1 == 1 { 1 } else { -1 });
                rec(a, left - 1, std::array::from_fn(|i| e[i] + w[i]), out);
            }
        }
        let mut m = BTreeMap::new();
        rec(0, d, [0; 4], &mut m);
        let mut p = LaurentPoly::zero();
        for (e, c) in m {
            p.add_term(e, c);
        }
        p
    }

    #[test]
    fn character_small_degrees() {
        assert_eq!(character_of_symmetric_power(0), LaurentPoly::one());
        let c1 = character_of_symmetric_power(1);
        assert_eq!(c1.len(), 16);
        assert!(c1.terms().all(|(_, c)| *c == 1));
        assert_eq!(character_of_symmetric_power(2).eval_at_ones(), 136);
        for d in 0..=4 {
            assert_eq!(character_of_symmetric_power(d), brute_character(d as usize), "d = {d}");
        }
    }

    #[test]
    fn character_symmetry() {
        for d in 0..=6 {
            let c = character_of_symmetric_power(d);
            for i in 0..4 {
                assert_eq!(c.invert_variable(i), c);
            }
            assert_eq!(c.eval_at_ones(), binom(15 + d as u64, d as u64));
        }
    }

    #[test]
    fn known_dimensions() {
        assert_eq!(covariant_dimension(1, [1, 1, 1, 1]), 1);
        assert_eq!(covariant_dimension(2, [0, 0, 0, 0]), 1);
        assert_eq!(covariant_dimension(3, [1, 1, 1, 1]), 3);
        assert_eq!(covariant_dimension(4, [0, 0, 0, 0]), 3);
        assert_eq!(covariant_dimension(2, [2, 2, 0, 0]), 1);
        assert_eq!(covariant_dimension(2, [1, 0, 0, 0]), 0);
        assert_eq!(covariant_dimension(1, [3, 1, 1, 1]), 0);
    }

    #[test]
    fn weyl_dimension_sum() {
        for d in 0..=8u32 {
            let total: i128 = covariant_dimensions(d)
                .iter()
                .map(|(mu, c)| *c as i128 * mu.iter().map(|&m| m as i128 + 1).product::<i128>())
                .sum();
            assert_eq!(total, binom(15 + d as u64, d as u64), "d = {d}");
        }
    }

    #[test]
    fn literal_and_dense_agree() {
        let table = covariant_series(7);
        for d in 0..=7 {
            let dense: Vec<([u32; 4], u64)> = covariant_dimensions(d);
            let literal: Vec<([u32; 4], u64)> = table
                .degree(d)
                .terms()
                .map(|(e, c)| (e.map(|x| x as u32), *c as u64))
                .collect();
            assert_eq!(dense, literal, "d = {d}");
            assert!(table.degree(d).terms().all(|(_, c)| *c > 0));
        }
        assert_eq!(diagonal_series(7), diagonal_series_fast(7));
    }

    #[test]
    fn diagonal_low_degrees() {
        let s = diagonal_series(3);
        assert_eq!(s[0], vec![1]);
        assert_eq!(s[1], vec![0, 0, 0, 0, 1]);
        assert_eq!(s[2], vec![1, 0, 0, 0, 6, 0, 0, 0, 1]);
        assert_eq!(render_u_poly(&s[2]), "1 + 6*u^4 + u^8");
        assert_eq!(render_u_poly(&[0, -2, 0, 1]), "-2*u + u^3");
        assert_eq!(render_u_poly(&[]), "0");
    }

    #[test]
    fn invariants() {
        let inv = invariant_series(8);
        assert_eq!(inv[..7], [1, 0, 1, 0, 3, 0, 4]);
        assert!(inv.iter().skip(1).step_by(2).all(|&c| c == 0));
    }

    #[test]
    fn printed_pq_report() {
        let r = compare_with_printed_pq(8);
        assert!(r.mismatches.iter().all(|m| m.d >= 4));
        assert_eq!(r.first_mismatching_degree(), Some(4));
        let cell = &r.mismatches[0];
        assert_eq!((cell.d, cell.upow, cell.series, cell.printed), (4, 0, 3, 2));
        let printed = expand_printed_pq(3);
        assert_eq!(printed[2], vec![1, 0, 0, 0, 6, 0, 0, 0, 1]);
    }

    #[test]
    fn pole_order() {
        assert_eq!(multiplicity_at_one(&[1, -1]), 1);
        assert_eq!(multiplicity_at_one(&[1, -2, 1]), 2);
        assert_eq!(multiplicity_at_one(&[3]), 0);
        assert_eq!(printed_denominator_pole_order(), 12);
        let r = krull_analysis(KRULL_TMAX);
        assert_eq!(r.numerator.len(), 37);
        assert_eq!(r.numerator.iter().sum::<i128>(), 216);
        // palindromic numerator
        let mut rev = r.numerator.clone();
        rev.reverse();
        assert_eq!(rev, r.numerator);
        assert_eq!(r.pole_order(), 12);
        // the printed numerator vanishes at t = u = 1
        assert_eq!(printed_numerator_on_diagonal().iter().sum::<i128>(), 0);
        assert_eq!(r.printed_pole_order(), 11);
    }

    #[test]
    fn series_checks_pass() {
        let checks = series_checks();
        assert!(crate::check::all_passed(&checks), "{checks:?}");
        assert_eq!(checks[3].detail, "16 mismatching cells, first at degree 4");
    }
}
