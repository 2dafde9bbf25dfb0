//! Associated forms, rational expressions of covariants and syzygies.

use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashMap;

use crate::algebra::{Integer, Rational};
use crate::catalog::{recipes, resolve_name, source, Catalog, CatalogError, CovariantSymbol};
use crate::check::Check;
use crate::normalforms::{evaluate_covariant, NormalForm, NormalFormError};
use crate::poly::{FieldPoly, Indeterminate, IntPoly, Monomial, RatPoly, Slot};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelationError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    NormalForm(#[from] NormalFormError),
    #[error("c_{0} is not proportional to the source of the listed covariant")]
    NotProportional(String),
    #[error("coefficient c_{label} is divisible by a[0000]^{found}, expected exactly {expected}")]
    WrongDivisionExponent { label: String, found: u32, expected: u32 },
}

fn label(bits: [u8; 4]) -> String {
    bits.iter().map(|b| char::from(b'0' + b)).collect()
}

fn a(bits: [u8; 4]) -> IntPoly {
    IntPoly::var(Indeterminate::coeff(bits))
}

/// Ground form after `v1 -> a[0000] v1 - a[e_v] v2`, `v2 -> a[0000] v2`
/// in each slot, `e_v` the unit label of the slot.
pub fn associated_form() -> IntPoly {
    let a0 = a([0, 0, 0, 0]);
    let mut map = FxHashMap::default();
    for slot in Slot::ALL {
        let mut unit = [0u8; 4];
        unit[slot.index()] = 1;
        let v1 = IntPoly::var(Indeterminate::var(slot, 1));
        let v2 = IntPoly::var(Indeterminate::var(slot, 2));
        map.insert(Indeterminate::var(slot, 1), a0.mul(&v1).sub(&a(unit).mul(&v2)));
        map.insert(Indeterminate::var(slot, 2), a0.mul(&v2));
    }
    IntPoly::ground_form().substitute(&map)
}

/// The sixteen semi-invariants `c_ijkl`, keyed by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceTable {
    pub entries: BTreeMap<[u8; 4], IntPoly>,
}

impl SourceTable {
    pub fn get(&self, bits: [u8; 4]) -> &IntPoly {
        &self.entries[&bits]
    }
}

fn all_labels() -> impl Iterator<Item = [u8; 4]> {
    (0..16u8).map(|i| [(i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1])
}

/// Coefficients of `x_{i+1} y_{j+1} z_{k+1} t_{l+1}` in the associated
/// form, each divided by the largest power of `a[0000]` dividing it; that
/// power must be `5 - (i + j + k + l)`.
pub fn sources_table() -> Result<SourceTable, RelationError> {
    let big_f = associated_form();
    let a0 = Indeterminate::coeff([0, 0, 0, 0]);
    let mut entries = BTreeMap::new();
    for bits in all_labels() {
        let m = Monomial::from_pairs(
            &Slot::ALL.map(|s| (Indeterminate::var(s, bits[s.index()] + 1), 1)),
        );
        let c = big_f.coefficient_extract(&m).expect("variable monomial");
        if c.is_zero() {
            entries.insert(bits, c);
            continue;
        }
        let power = c.terms().iter().map(|(m, _)| m.exp(a0)).min().unwrap_or(0);
        let expected = 5 - bits.iter().map(|&b| b as u32).sum::<u32>();
        if power as u32 != expected {
            return Err(RelationError::WrongDivisionExponent { label: label(bits), found: power as u32, expected });
        }
        let divisor = IntPoly::monomial(Monomial::single(a0, power), Integer::ONE);
        entries.insert(bits, c.exact_divide(&divisor).expect("power of a[0000] divides"));
    }
    Ok(SourceTable { entries })
}

/// Generators of the field of rational covariants: `f`, the six `b_uv`,
/// the four `C_3111`-type covariants, and `H` in place of the last
/// associated form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    F,
    H,
    Bxy,
    Bxz,
    Bxt,
    Byz,
    Byt,
    Bzt,
    C3111,
    C1311,
    C1131,
    C1113,
}

impl Generator {
    pub const ALL: [Generator; 12] = [
        Generator::F,
        Generator::H,
        Generator::Bxy,
        Generator::Bxz,
        Generator::Bxt,
        Generator::Byz,
        Generator::Byt,
        Generator::Bzt,
        Generator::C3111,
        Generator::C1311,
        Generator::C1131,
        Generator::C1113,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::F => "f",
            Generator::H => "H",
            Generator::Bxy => "b_xy",
            Generator::Bxz => "b_xz",
            Generator::Bxt => "b_xt",
            Generator::Byz => "b_yz",
            Generator::Byt => "b_yt",
            Generator::Bzt => "b_zt",
            Generator::C3111 => "C_3111",
            Generator::C1311 => "C_1311",
            Generator::C1131 => "C_1131",
            Generator::C1113 => "C_1113",
        }
    }

    /// The coefficient indeterminate standing in for this generator inside
    /// formal expressions.
    fn slot(self) -> Indeterminate {
        let bits = match self {
            Generator::F => [0, 0, 0, 0],
            Generator::H => [1, 1, 1, 1],
            Generator::Bxy => [0, 0, 1, 1],
            Generator::Bxz => [0, 1, 0, 1],
            Generator::Bxt => [0, 1, 1, 0],
            Generator::Byz => [1, 0, 0, 1],
            Generator::Byt => [1, 0, 1, 0],
            Generator::Bzt => [1, 1, 0, 0],
            Generator::C3111 => [0, 1, 1, 1],
            Generator::C1311 => [1, 0, 1, 1],
            Generator::C1131 => [1, 1, 0, 1],
            Generator::C1113 => [1, 1, 1, 0],
        };
        Indeterminate::coeff(bits)
    }

    fn from_slot(v: Indeterminate) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.slot() == v)
    }
}

/// Polynomial in the twelve generators with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalPoly(RatPoly);

impl FormalPoly {
    pub fn zero() -> FormalPoly {
        FormalPoly(RatPoly::zero())
    }

    pub fn generator(g: Generator) -> FormalPoly {
        FormalPoly(RatPoly::var(g.slot()))
    }

    pub fn constant(k: Rational) -> FormalPoly {
        FormalPoly(RatPoly::constant(k))
    }

    pub fn add(&self, o: &FormalPoly) -> FormalPoly {
        FormalPoly(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &FormalPoly) -> FormalPoly {
        FormalPoly(self.0.sub(&o.0))
    }

    pub fn mul(&self, o: &FormalPoly) -> FormalPoly {
        FormalPoly(self.0.mul(&o.0))
    }

    pub fn neg(&self) -> FormalPoly {
        FormalPoly(self.0.neg())
    }

    pub fn scale(&self, k: &Rational) -> FormalPoly {
        FormalPoly(self.0.scale(k))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Terms as (coefficient, generator powers).
    pub fn terms(&self) -> Vec<(Rational, Vec<(Generator, u8)>)> {
        self.0
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut powers: Vec<(Generator, u8)> =
                    m.iter().map(|(v, e)| (Generator::from_slot(v).expect("generator slot"), e)).collect();
                powers.sort();
                (c.clone(), powers)
            })
            .collect()
    }

    /// Replace every generator by its catalog polynomial.
    pub fn expand(&self, catalog: &Catalog) -> Result<RatPoly, RelationError> {
        let mut map = FxHashMap::default();
        for g in Generator::ALL {
            map.insert(g.slot(), generator_value(catalog, g)?);
        }
        Ok(self.0.substitute(&map))
    }
}

impl fmt::Display for FormalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, powers)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || powers.is_empty() {
                parts.push(abs.to_string());
            }
            for (g, e) in powers {
                if *e == 1 {
                    parts.push(g.name().to_string());
                } else {
                    parts.push(format!("{}^{}", g.name(), e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

fn generator_value(catalog: &Catalog, g: Generator) -> Result<RatPoly, RelationError> {
    let (k, p) = catalog.resolve(g.name())?;
    Ok(p.to_rational().scale(&k))
}

/// The associated form `C_alpha` as listed in the published table, as a
/// formal polynomial in the generators.
pub fn printed_associated_covariant(bits: [u8; 4]) -> FormalPoly {
    use Generator::*;
    let g = FormalPoly::generator;
    match bits {
        [0, 0, 0, 0] => FormalPoly::constant(Rational::ONE),
        [0, 0, 1, 1] => g(Bxy),
        [0, 1, 0, 1] => g(Bxz),
        [0, 1, 1, 0] => g(Bxt),
        [1, 0, 0, 1] => g(Byz),
        [1, 0, 1, 0] => g(Byt),
        [1, 1, 0, 0] => g(Bzt),
        [0, 1, 1, 1] => g(C3111).neg(),
        [1, 0, 1, 1] => g(C1311).neg(),
        [1, 1, 0, 1] => g(C1131).neg(),
        [1, 1, 1, 0] => g(C1113).neg(),
        [1, 1, 1, 1] => g(H)
            .mul(&g(F))
            .mul(&g(F))
            .sub(&g(Bxy).mul(&g(Bzt)))
            .sub(&g(Bxz).mul(&g(Byt)))
            .sub(&g(Bxt).mul(&g(Byz))),
        _ => FormalPoly::zero(),
    }
}

/// The factor `k` with `c_alpha = k * source(printed C_alpha)`, or `None`
/// when the two are not proportional.
fn proportionality(c: &RatPoly, candidate: &RatPoly) -> Option<Rational> {
    match (c.leading_term(), candidate.leading_term()) {
        (None, None) => Some(Rational::ONE),
        (Some((mc, kc)), Some((md, kd))) if mc == md => {
            let k = kc.div(kd).ok()?;
            (candidate.scale(&k) == *c).then_some(k)
        }
        _ => None,
    }
}

/// The associated forms in the current transvectant convention: each
/// printed entry rescaled so that its source is exactly `c_alpha`.
pub fn associated_covariants(catalog: &Catalog) -> Result<BTreeMap<[u8; 4], FormalPoly>, RelationError> {
    let table = sources_table()?;
    let mut out = BTreeMap::new();
    for bits in all_labels() {
        let printed = printed_associated_covariant(bits);
        if bits == [0, 0, 0, 0] {
            out.insert(bits, printed);
            continue;
        }
        let c = table.get(bits).to_rational();
        let k = proportionality(&c, &source(&printed.expand(catalog)?))
            .ok_or_else(|| RelationError::NotProportional(label(bits)))?;
        out.insert(bits, printed.scale(&k));
    }
    Ok(out)
}

/// Check each printed table entry: `c_alpha` equals the source of `C_alpha`.
pub fn source_table_checks(catalog: &Catalog) -> Result<Vec<Check>, RelationError> {
    let derived = associated_covariants(catalog)?;
    let mut out = Vec::new();
    for bits in all_labels() {
        let printed = printed_associated_covariant(bits);
        let shown = if printed.is_zero() { "0".to_string() } else { printed.to_string() };
        let name = format!("c_{} = source of {}", label(bits), shown);
        let ok = derived[&bits] == printed;
        let detail = if ok { String::new() } else { format!("computed c_{} = source of {}", label(bits), derived[&bits]) };
        out.push(Check::new(name, ok, detail));
    }
    Ok(out)
}

/// Rational expression of a covariant: `f^fpower * covariant = numerator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationalization {
    pub symbol: CovariantSymbol,
    pub numerator: FormalPoly,
    pub fpower: u32,
}

/// Substitute `a_alpha -> C_alpha f^(1 - |alpha|)` into the source of the
/// covariant and clear the denominator.
pub fn rationalize(catalog: &Catalog, symbol: &CovariantSymbol) -> Result<Rationalization, RelationError> {
    let src = source(catalog.require(symbol)?);
    // exponent of f contributed by each label
    let fshift = |bits: [u8; 4]| 1 - bits.iter().map(|&b| b as i32).sum::<i32>();
    let images = associated_covariants(catalog)?;
    let mut parts: Vec<(i32, FormalPoly)> = Vec::new();
    for (m, c) in src.terms() {
        let mut shift = 0i32;
        let mut value = FormalPoly::constant(Rational::from(c.clone()));
        for (v, e) in m.iter() {
            let crate::poly::IndeterminateKind::Coeff(bits) = v.kind() else {
                unreachable!("sources only involve form coefficients");
            };
            shift += fshift(bits) * e as i32;
            for _ in 0..e {
                value = value.mul(&images[&bits]);
            }
            if value.is_zero() {
                break;
            }
        }
        if !value.is_zero() {
            parts.push((shift, value));
        }
    }
    let fpower = parts.iter().map(|(s, _)| -s).max().unwrap_or(0).max(0);
    let f = FormalPoly::generator(Generator::F);
    let mut numerator = FormalPoly::zero();
    for (shift, value) in parts {
        let mut term = value;
        for _ in 0..(shift + fpower) {
            term = term.mul(&f);
        }
        numerator = numerator.add(&term);
    }
    Ok(Rationalization { symbol: *symbol, numerator, fpower: fpower as u32 })
}

/// A formal combination of products of catalog symbols or aliases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygy {
    pub description: String,
    pub terms: Vec<(Rational, Vec<(String, u32)>)>,
}

impl Syzygy {
    pub fn new(description: impl Into<String>) -> Syzygy {
        Syzygy { description: description.into(), terms: Vec::new() }
    }

    pub fn term(mut self, k: Rational, factors: &[(&str, u32)]) -> Syzygy {
        self.terms.push((k, factors.iter().map(|(s, e)| (s.to_string(), *e)).collect()));
        self
    }

    /// Shorthand with an integer or `p/q` coefficient and factors written
    /// `name` or `name**e`, e.g. `with("-9/2", &["D_2200", "B_0022"])`.
    pub fn with(self, k: &str, factors: &[&str]) -> Syzygy {
        let k: Rational = k.parse().expect("rational coefficient");
        let parsed: Vec<(&str, u32)> = factors
            .iter()
            .map(|f| match f.rsplit_once("**") {
                Some((name, e)) => (name, e.parse().expect("exponent")),
                None => (*f, 1),
            })
            .collect();
        self.term(k, &parsed)
    }

    /// Expand with catalog polynomials.
    pub fn expand(&self, catalog: &Catalog) -> Result<RatPoly, RelationError> {
        self.expand_scaled(catalog, |_| Rational::ONE)
    }

    /// Expand with every symbol `s` replaced by `scale(s)` times its catalog
    /// polynomial.
    pub fn expand_scaled(
        &self,
        catalog: &Catalog,
        scale: impl Fn(&CovariantSymbol) -> Rational,
    ) -> Result<RatPoly, RelationError> {
        let mut total = RatPoly::zero();
        for (k, factors) in &self.terms {
            let mut prod = RatPoly::constant(k.clone());
            for (name, e) in factors {
                let (s, sym) = resolve_name(name)?;
                let p = catalog.require(&sym)?;
                prod = prod.mul(&p.to_rational().scale(&s.mul(&scale(&sym))).pow(*e));
            }
            total = total.add(&prod);
        }
        Ok(total)
    }
}

impl fmt::Display for Syzygy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, factors)) in self.terms.iter().enumerate() {
            let sign = if k.is_negative() { "-" } else { "+" };
            if i == 0 {
                if k.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut parts = Vec::new();
            if !k.abs().is_one() {
                parts.push(k.abs().to_string());
            }
            for (name, e) in factors {
                let name = if name.contains('^') { format!("({name})") } else { name.clone() };
                parts.push(if *e == 1 { name } else { format!("{name}^{e}") });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        write!(f, " = 0")
    }
}

/// True when the combination expands to the zero polynomial.
pub fn verify_syzygy(catalog: &Catalog, s: &Syzygy) -> Result<bool, RelationError> {
    Ok(s.expand(catalog)?.is_zero())
}

/// Factor relating each catalog covariant to the one built with normalized
/// transvectants, where a slot with degrees `m`, `n` and order `k`
/// carries the extra factor `(m-k)! (n-k)! / (m! n!)`.
pub fn normalized_scales() -> BTreeMap<CovariantSymbol, Rational> {
    let falling = |m: u32, k: u32| (m - k + 1..=m).map(i64::from).product::<i64>();
    let mut out = BTreeMap::new();
    out.insert(CovariantSymbol::GROUND, Rational::ONE);
    for r in recipes() {
        let (ml, mr) = (r.left.multidegree(), r.right.multidegree());
        let mut k = out[&r.left].mul(&out[&r.right]);
        for i in 0..4 {
            let e = r.index.0[i] as u32;
            k = k.mul(&Rational::from_ints(1, falling(ml.mu[i], e) * falling(mr.mu[i], e)));
        }
        out.insert(r.symbol, k);
    }
    out
}

/// Whether the combination vanishes when every symbol is read in the
/// normalized transvectant convention.
pub fn verify_syzygy_normalized(catalog: &Catalog, s: &Syzygy) -> Result<bool, RelationError> {
    let scales = normalized_scales();
    Ok(s.expand_scaled(catalog, |sym| scales[sym].clone())?.is_zero())
}

/// The syzygy `f^fpower * covariant - numerator = 0` induced by a
/// rationalization.
pub fn induced_syzygy(r: &Rationalization) -> Syzygy {
    let mut s = Syzygy::new(format!("rational expression of {}", r.symbol));
    let mut lead = vec![(r.symbol.to_string(), 1)];
    if r.fpower > 0 {
        lead.insert(0, ("f".to_string(), r.fpower));
    }
    s.terms.push((Rational::ONE, lead));
    for (k, powers) in r.numerator.terms() {
        s.terms.push((k.neg(), powers.iter().map(|(g, e)| (g.name().to_string(), *e as u32)).collect()));
    }
    s
}

/// The degree-4 syzygy from the rational expression of `D_4000`.
pub fn d4000_syzygy() -> Syzygy {
    Syzygy::new("f^2 D_4000 + C_3111^2 + 4 b_xy b_xz b_xt")
        .with("1", &["f**2", "D_4000"])
        .with("1", &["C_3111**2"])
        .with("4", &["b_xy", "b_xz", "b_xt"])
}

/// Two degree-6 syzygies not produced by associated forms. The second one
/// carries a product `C_1111 C_1111` whose tags are not given; `cross`
/// selects which pair of quadrilinears fills it.
pub fn degree_six_syzygies(cross: (&str, &str)) -> [Syzygy; 2] {
    let first = Syzygy::new("first degree-6 syzygy")
        .with("1", &["D^2_0000", "f**2"])
        .with("2", &["D^1_0000", "f**2"])
        .with("-3/2", &["B_2200", "B_0022", "B_0000"])
        .with("3/2", &["B_2020", "B_0202", "B_0000"])
        .with("-9/2", &["D_2200", "B_0022"])
        .with("-4", &["C^2_1111**2"])
        .with("-9/2", &["D_0022", "B_2200"])
        .with("-8", &["C^1_1111", "C^2_1111"])
        .with("9/2", &["D_0220", "B_2002"])
        .with("9/2", &["D_2002", "B_0220"]);
    let second = Syzygy::new(format!("second degree-6 syzygy, -2 {} {} term", cross.0, cross.1))
        .with("1", &["C^1_1111**2"])
        .with("3/4", &["D^1_0000", "f**2"])
        .with("-9/8", &["B_2200", "B_0022", "B_0000"])
        .with("9/8", &["B_2020", "B_0202", "B_0000"])
        .with("-9/4", &["D_2200", "B_0022"])
        .with("9/8", &["D_0202", "B_2020"])
        .with("-2", &["C^2_1111**2"])
        .with("-9/4", &["D_0022", "B_2200"])
        .with("-2", &[cross.0, cross.1])
        .with("-3/2", &["D_2020", "B_0202"])
        .with("9/8", &["D_0220", "B_2002"])
        .with("9/8", &["D_2002", "B_0220"]);
    [first, second]
}

/// Candidate fillings of the untagged `C_1111 C_1111` product.
pub const CROSS_TERM_CANDIDATES: [(&str, &str); 3] =
    [("C^1_1111", "C^2_1111"), ("C^1_1111", "C^1_1111"), ("C^2_1111", "C^2_1111")];

/// One row of the separation table.
#[derive(Clone, Debug)]
pub struct SeparationRow {
    pub form: NormalForm,
    /// B_0000, D^1_0000, D^2_0000, F_0000 vanish.
    pub invariants_vanish: [bool; 4],
    pub c3111: FieldPoly,
    pub d2200: FieldPoly,
    /// Expected (C_3111 nonzero, D_2200 nonzero).
    pub expected: (bool, bool),
}

impl SeparationRow {
    pub fn pattern(&self) -> (bool, bool) {
        (!self.c3111.is_zero(), !self.d2200.is_zero())
    }

    pub fn ok(&self) -> bool {
        self.invariants_vanish.iter().all(|&z| z) && self.pattern() == self.expected
    }
}

pub const SEPARATION_INVARIANTS: [&str; 4] = ["B_0000", "D^1_0000", "D^2_0000", "F_0000"];

/// Evaluate the invariants and `C_3111`, `D_2200` on the three forms on
/// which all invariants vanish.
pub fn separation_report(catalog: &Catalog) -> Result<Vec<SeparationRow>, RelationError> {
    let rows = [
        (NormalForm::L0_5p3, (true, false)),
        (NormalForm::L0_7p1, (true, true)),
        (NormalForm::L0_3p1_0_3p1, (false, false)),
    ];
    let mut out = Vec::new();
    for (form, expected) in rows {
        let mut vanish = [false; 4];
        for (k, s) in SEPARATION_INVARIANTS.iter().enumerate() {
            vanish[k] = evaluate_covariant(catalog, s, form)?.is_zero();
        }
        out.push(SeparationRow {
            form,
            invariants_vanish: vanish,
            c3111: evaluate_covariant(catalog, "C_3111", form)?,
            d2200: evaluate_covariant(catalog, "D_2200", form)?,
            expected,
        });
    }
    Ok(out)
}

/// The printed rational expression of `D_4000`:
/// `f^2 D_4000 = -(C_3111^2 + 4 b_xt b_xy b_xz)`.
pub fn printed_d4000_numerator() -> FormalPoly {
    let g = FormalPoly::generator;
    g(Generator::C3111)
        .mul(&g(Generator::C3111))
        .add(&g(Generator::Bxt).mul(&g(Generator::Bxy)).mul(&g(Generator::Bxz)).scale(&Rational::from(4)))
        .neg()
}

/// The printed sources table entry by entry, and the printed rational
/// expression of `D_4000`.
pub fn sources_checks(catalog: &Catalog) -> Result<Vec<Check>, RelationError> {
    let mut out = source_table_checks(catalog)?;
    let r = rationalize(catalog, &"D_4000".parse()?)?;
    let printed = printed_d4000_numerator();
    let ok = r.fpower == 2 && r.numerator == printed;
    out.push(Check::new(
        format!("rationalize(D_4000) = ({printed}) / f^2"),
        ok,
        if ok { String::new() } else { format!("computed ({}) / f^{}", r.numerator, r.fpower) },
    ));
    Ok(out)
}

/// The printed syzygies, the negative control, and the rational identity
/// of every non-associated symbol of degree at most `dmax`.
pub fn syzygy_checks(catalog: &Catalog, dmax: u8) -> Result<Vec<Check>, RelationError> {
    let mut out = Vec::new();
    let [first, second] = degree_six_syzygies(CROSS_TERM_CANDIDATES[0]);
    for s in [d4000_syzygy(), first, second] {
        out.push(Check::new(s.description.clone(), verify_syzygy(catalog, &s)?, ""));
    }
    let control = Syzygy::new("corrupted control f^2 D_4000 + C_3111^2 is rejected")
        .with("1", &["f**2", "D_4000"])
        .with("1", &["C_3111**2"]);
    out.push(Check::new(control.description.clone(), !verify_syzygy(catalog, &control)?, ""));
    let symbols: Vec<CovariantSymbol> = catalog
        .symbols()
        .filter(|s| s.degree >= 2 && s.degree <= dmax && !is_associated_symbol(s))
        .copied()
        .collect();
    for s in symbols {
        let r = rationalize(catalog, &s)?;
        let ok = verify_syzygy(catalog, &induced_syzygy(&r))?;
        let lead = match r.fpower {
            0 => s.to_string(),
            1 => format!("f {s}"),
            k => format!("f^{k} {s}"),
        };
        out.push(Check::new(format!("{lead} = {}", r.numerator), ok, ""));
    }
    Ok(out)
}

/// How the printed syzygies fare when read with normalized transvectants.
pub fn syzygy_diagnostics(catalog: &Catalog) -> Result<Vec<Check>, RelationError> {
    let mut out = Vec::new();
    let ours = Syzygy::new("f^2 D_4000 + C_3111^2 + 16 b_xy b_xz b_xt (current convention)")
        .with("1", &["f**2", "D_4000"])
        .with("1", &["C_3111**2"])
        .with("16", &["b_xy", "b_xz", "b_xt"]);
    out.push(Check::new(ours.description.clone(), verify_syzygy(catalog, &ours)?, ""));
    out.push(Check::new(
        format!("{} (normalized transvectants)", d4000_syzygy().description),
        verify_syzygy_normalized(catalog, &d4000_syzygy())?,
        "",
    ));
    for cross in CROSS_TERM_CANDIDATES {
        for s in degree_six_syzygies(cross) {
            if cross != CROSS_TERM_CANDIDATES[0] && s.description.starts_with("first") {
                continue;
            }
            out.push(Check::new(
                format!("{} (normalized transvectants)", s.description),
                verify_syzygy_normalized(catalog, &s)?,
                "",
            ));
        }
    }
    Ok(out)
}

/// The six displayed evaluations separating the three degenerate forms.
pub const DISPLAYED_SEPARATION_VALUES: [(&str, NormalForm, &str); 6] = [
    ("C_3111", NormalForm::L0_5p3, "2*x2*y2*z1*t1 - 2*x1*y2*z1*t1"),
    ("D_2200", NormalForm::L0_5p3, "0"),
    ("C_3111", NormalForm::L0_7p1, "2*x2*y1*z1*t2 + 2*x2*y1*z2*t1 - 4*x2*y2*z1*t1"),
    ("D_2200", NormalForm::L0_7p1, "-16*x2^2*z1*z2"),
    ("C_3111", NormalForm::L0_3p1_0_3p1, "0"),
    ("D_2200", NormalForm::L0_3p1_0_3p1, "0"),
];

/// Literal displayed values, vanishing invariants and the separation
/// pattern, one check each.
pub fn separation_checks(catalog: &Catalog) -> Result<Vec<Check>, RelationError> {
    let mut out = Vec::new();
    for (symbol, form, shown) in DISPLAYED_SEPARATION_VALUES {
        let expected: FieldPoly = shown.parse().expect("displayed value");
        let got = evaluate_covariant(catalog, symbol, form)?;
        let detail = if got == expected { String::new() } else { format!("computed {got}") };
        out.push(Check::new(format!("{symbol}({form}) = {shown}"), got == expected, detail));
    }
    for row in separation_report(catalog)? {
        for (k, s) in SEPARATION_INVARIANTS.iter().enumerate() {
            out.push(Check::new(format!("{s}({}) = 0", row.form), row.invariants_vanish[k], ""));
        }
        let show = |nonzero: bool| if nonzero { "nonzero" } else { "0" };
        let (c, d) = row.expected;
        let (gc, gd) = row.pattern();
        out.push(Check::new(
            format!("{}: C_3111 {}, D_2200 {}", row.form, show(c), show(d)),
            row.pattern() == row.expected,
            if row.pattern() == row.expected { String::new() } else { format!("computed C_3111 {}, D_2200 {}", show(gc), show(gd)) },
        ));
    }
    Ok(out)
}

/// Symbols that are themselves (up to the alias factor) associated forms.
pub fn is_associated_symbol(s: &CovariantSymbol) -> bool {
    Generator::ALL
        .iter()
        .filter(|g| !matches!(g, Generator::H))
        .any(|g| resolve_name(g.name()).map(|(_, t)| t == *s).unwrap_or(false))
}

#[cfg(test)]
mod tests;
