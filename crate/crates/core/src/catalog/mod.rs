//! The fundamental covariants and their construction.

pub mod cache;
mod recipes;
mod symbol;

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::algebra::{Coeff, Rational};
use crate::check::Check;
use crate::poly::{IntPoly, Monomial, MultiDegree, Poly, Slot, Indeterminate};
use crate::transvect::{oracle_transvectant, transvectant, TransvectantIndex};

pub use symbol::CovariantSymbol;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown covariant symbol {0:?}")]
    UnknownSymbol(String),
    #[error("recipe {symbol} = (f, {right})^{index} produced the zero polynomial")]
    ZeroResult { symbol: CovariantSymbol, right: CovariantSymbol, index: TransvectantIndex },
    #[error("recipe {symbol} = (f, {right})^{index} has multidegree {got:?}, expected {expected}")]
    WrongDegree {
        symbol: CovariantSymbol,
        right: CovariantSymbol,
        index: TransvectantIndex,
        got: Option<MultiDegree>,
        expected: MultiDegree,
    },
    #[error("degree bound {0} outside 1..=12")]
    BadDegreeBound(u8),
    #[error("cache error: {0}")]
    Cache(String),
}

/// A transvectant construction `symbol = (left, right)^index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CovariantRecipe {
    pub symbol: CovariantSymbol,
    pub left: CovariantSymbol,
    pub right: CovariantSymbol,
    pub index: TransvectantIndex,
}

impl CovariantRecipe {
    /// Multidegree predicted by the degree law.
    pub fn predicted_multidegree(&self) -> Option<MultiDegree> {
        let l = self.left.multidegree();
        let r = self.right.multidegree();
        let mut mu = [0u32; 4];
        for i in 0..4 {
            mu[i] = (l.mu[i] + r.mu[i]).checked_sub(2 * self.index.0[i] as u32)?;
        }
        Some(MultiDegree::new(l.d + r.d, mu))
    }
}

/// All recipes in table order.
pub fn recipes() -> Vec<CovariantRecipe> {
    recipes::RECIPES
        .iter()
        .map(|(s, r, e)| CovariantRecipe {
            symbol: s.parse().expect("recipe table symbol"),
            left: CovariantSymbol::GROUND,
            right: r.parse().expect("recipe table symbol"),
            index: e.parse().expect("recipe table index"),
        })
        .collect()
}

/// Published generator counts per (degree, nonincreasing shape), summed
/// over the permutations of the shape.
pub fn published_counts() -> BTreeMap<(u8, [u8; 4]), usize> {
    let mut out = BTreeMap::new();
    for (shape, n_perm, cells) in recipes::PUBLISHED_COUNTS {
        for (d, c) in *cells {
            out.insert((*d, *shape), c * n_perm);
        }
    }
    out
}

/// Published number of generators at one exact multidegree (0 if none).
pub fn published_count_at(d: u8, mu: [u8; 4]) -> usize {
    let mut shape = mu;
    shape.sort_unstable_by(|a, b| b.cmp(a));
    recipes::PUBLISHED_COUNTS
        .iter()
        .find(|(s, _, _)| *s == shape)
        .and_then(|(_, _, cells)| cells.iter().find(|(dd, _)| *dd == d))
        .map(|(_, c)| *c)
        .unwrap_or(0)
}

/// The computed fundamental covariants. Entry zero is the ground form.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<(CovariantSymbol, IntPoly)>,
    position: FxHashMap<CovariantSymbol, usize>,
    provenance: FxHashMap<CovariantSymbol, CovariantRecipe>,
    dmax: u8,
}

/// Progress events reported during a build.
#[derive(Clone, Copy, Debug)]
pub enum BuildEvent {
    LoadedFromCache { degree: u8, entries: usize },
    Computed { degree: u8, entries: usize, terms: usize },
}

#[derive(Clone, Debug, Default)]
pub struct BuildOptions<'a> {
    pub cache: Option<&'a Path>,
    /// Worker bound; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Catalog {
    pub fn dmax(&self) -> u8 {
        self.dmax
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ground_form(&self) -> &IntPoly {
        &self.entries[0].1
    }

    pub fn get(&self, s: &CovariantSymbol) -> Option<&IntPoly> {
        self.position.get(s).map(|&i| &self.entries[i].1)
    }

    pub fn require(&self, s: &CovariantSymbol) -> Result<&IntPoly, CatalogError> {
        self.get(s).ok_or_else(|| CatalogError::UnknownSymbol(s.to_string()))
    }

    pub fn recipe(&self, s: &CovariantSymbol) -> Option<&CovariantRecipe> {
        self.provenance.get(s)
    }

    /// All generators in table order, the ground form first.
    pub fn entries(&self) -> impl Iterator<Item = (&CovariantSymbol, &IntPoly)> {
        self.entries.iter().map(|(s, p)| (s, p))
    }

    pub fn symbols(&self) -> impl Iterator<Item = &CovariantSymbol> {
        self.entries.iter().map(|(s, _)| s)
    }

    /// Generator counts grouped by degree and nonincreasing shape.
    pub fn generator_counts(&self) -> BTreeMap<(u8, [u8; 4]), usize> {
        let mut out = BTreeMap::new();
        for (s, _) in &self.entries {
            *out.entry((s.degree, s.shape())).or_insert(0) += 1;
        }
        out
    }

    /// Look up a symbol or named alias (`f`, `H`, `b_xy`, ...) as a rational
    /// multiple of a catalog polynomial.
    pub fn resolve(&self, name: &str) -> Result<(Rational, &IntPoly), CatalogError> {
        let (k, sym) = resolve_name(name)?;
        Ok((k, self.require(&sym)?))
    }

    fn from_parts(entries: Vec<(CovariantSymbol, IntPoly)>, dmax: u8) -> Catalog {
        let position = entries.iter().enumerate().map(|(i, (s, _))| (*s, i)).collect();
        let provenance = recipes().into_iter().filter(|r| r.symbol.degree <= dmax).map(|r| (r.symbol, r)).collect();
        Catalog { entries, position, provenance, dmax }
    }
}

/// Build all generators of degree at most `dmax`.
pub fn build_catalog(dmax: u8, cache: Option<&Path>) -> Result<Catalog, CatalogError> {
    build_catalog_with(dmax, BuildOptions { cache, jobs: None }, |_| {})
}

/// Build with options and a progress callback.
pub fn build_catalog_with(
    dmax: u8,
    opts: BuildOptions<'_>,
    mut progress: impl FnMut(BuildEvent),
) -> Result<Catalog, CatalogError> {
    if !(1..=12).contains(&dmax) {
        return Err(CatalogError::BadDegreeBound(dmax));
    }
    let pool = match opts.jobs {
        Some(n) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| CatalogError::Cache(e.to_string()))?,
        ),
        None => None,
    };
    let all = recipes();
    let mut entries: Vec<(CovariantSymbol, IntPoly)> = vec![(CovariantSymbol::GROUND, IntPoly::ground_form())];
    let mut position: FxHashMap<CovariantSymbol, usize> = FxHashMap::default();
    position.insert(CovariantSymbol::GROUND, 0);

    for degree in 2..=dmax {
        let layer: Vec<&CovariantRecipe> = all.iter().filter(|r| r.symbol.degree == degree).collect();
        let cached = match opts.cache {
            Some(dir) => cache::read_degree(dir, degree)?,
            None => None,
        };
        let computed: Vec<(CovariantSymbol, IntPoly)> = match cached {
            Some(found) => {
                let expected: Vec<CovariantSymbol> = layer.iter().map(|r| r.symbol).collect();
                let got: Vec<CovariantSymbol> = found.iter().map(|(s, _)| *s).collect();
                if got != expected {
                    return Err(CatalogError::Cache(format!(
                        "degree-{degree}.cov lists {} entries that do not match the recipe table",
                        got.len()
                    )));
                }
                progress(BuildEvent::LoadedFromCache { degree, entries: found.len() });
                found
            }
            None => {
                let run = |r: &&CovariantRecipe| -> Result<(CovariantSymbol, IntPoly), CatalogError> {
                    let right = &entries[*position
                        .get(&r.right)
                        .ok_or_else(|| CatalogError::UnknownSymbol(r.right.to_string()))?]
                    .1;
                    let p = transvectant(&entries[0].1, right, r.index);
                    check_result(r, &p)?;
                    Ok((r.symbol, p))
                };
                let results: Result<Vec<_>, CatalogError> = match &pool {
                    Some(pool) => pool.install(|| layer.par_iter().map(run).collect()),
                    None => layer.par_iter().map(run).collect(),
                };
                let results = results?;
                if let Some(dir) = opts.cache {
                    let refs: Vec<(CovariantSymbol, &IntPoly)> = results.iter().map(|(s, p)| (*s, p)).collect();
                    let offsets = cache::write_degree(dir, degree, &refs)?;
                    cache::update_index(dir, degree, &offsets)?;
                }
                progress(BuildEvent::Computed {
                    degree,
                    entries: results.len(),
                    terms: results.iter().map(|(_, p)| p.len()).sum(),
                });
                results
            }
        };
        for (s, p) in computed {
            position.insert(s, entries.len());
            entries.push((s, p));
        }
    }
    Ok(Catalog::from_parts(entries, dmax))
}

fn check_result(r: &CovariantRecipe, p: &IntPoly) -> Result<(), CatalogError> {
    if p.is_zero() {
        return Err(CatalogError::ZeroResult { symbol: r.symbol, right: r.right, index: r.index });
    }
    let expected = r.symbol.multidegree();
    let got = p.multidegree();
    if got != Some(expected) || r.predicted_multidegree() != Some(expected) {
        return Err(CatalogError::WrongDegree { symbol: r.symbol, right: r.right, index: r.index, got, expected });
    }
    Ok(())
}

/// Structural checks on the recipe table: operands defined before use,
/// predicted multidegrees, no duplicates, and per-cell counts equal to the
/// published table.
pub fn recipe_checks() -> Vec<Check> {
    let all = recipes();
    let mut seen = vec![CovariantSymbol::GROUND];
    let mut bad = Vec::new();
    for r in &all {
        if !seen.contains(&r.right) {
            bad.push(format!("{} uses {} before it is defined", r.symbol, r.right));
        }
        if r.predicted_multidegree() != Some(r.symbol.multidegree()) {
            bad.push(format!("{} = (f, {})^{} has the wrong multidegree", r.symbol, r.right, r.index));
        }
        if seen.contains(&r.symbol) {
            bad.push(format!("{} defined twice", r.symbol));
        }
        seen.push(r.symbol);
    }
    let mut counts: BTreeMap<(u8, [u8; 4]), usize> = BTreeMap::new();
    for s in &seen {
        *counts.entry((s.degree, s.shape())).or_insert(0) += 1;
    }
    let total: usize = counts.values().sum();
    vec![
        Check::new("recipe table well formed", bad.is_empty(), bad.join("; ")),
        Check::new("recipe counts match published table", counts == published_counts(), ""),
        Check::new("generator total", total == 170, format!("{total} generators including f")),
    ]
}

/// Checks on a built catalog: every entry nonzero with the multidegree of
/// its symbol, and per-cell counts equal to the published table up to the
/// catalog's degree.
pub fn catalog_checks(cat: &Catalog) -> Vec<Check> {
    let bad: Vec<String> = cat
        .entries()
        .filter(|(s, p)| p.is_zero() || p.multidegree() != Some(s.multidegree()))
        .map(|(s, _)| s.to_string())
        .collect();
    let expected: BTreeMap<(u8, [u8; 4]), usize> =
        published_counts().into_iter().filter(|((d, _), _)| *d <= cat.dmax()).collect();
    let total: usize = expected.values().sum();
    vec![
        Check::new("entries nonzero with exact multidegree", bad.is_empty(), bad.join(" ")),
        Check::new("counts per (d, shape) match published table", cat.generator_counts() == expected, ""),
        Check::new(
            format!("{} generators up to degree {}", cat.len(), cat.dmax()),
            cat.len() == total,
            format!("published {total}"),
        ),
    ]
}

/// Compare the production transvectant with the primed-variable oracle on
/// every pair of catalog entries of total a-degree at most `max_degree`
/// and every index of total order at most `max_order`; also check that
/// `(f, f)^e` vanishes for every odd total order.
pub fn transvectant_oracle_checks(cat: &Catalog, max_degree: u8, max_order: u32) -> Vec<Check> {
    let gens: Vec<(&CovariantSymbol, &IntPoly)> = cat.entries().filter(|(s, _)| s.degree < max_degree).collect();
    let mut indices = Vec::new();
    for n in 0..=max_order.min(4 * 12) {
        for e0 in 0..=n {
            for e1 in 0..=n - e0 {
                for e2 in 0..=n - e0 - e1 {
                    let e3 = n - e0 - e1 - e2;
                    indices.push(TransvectantIndex([e0, e1, e2, e3].map(|e| e as u8)));
                }
            }
        }
    }
    let mut pairs = Vec::new();
    for (i, (s, p)) in gens.iter().enumerate() {
        for (t, q) in &gens[i..] {
            if s.degree + t.degree <= max_degree {
                pairs.push((*s, *p, *t, *q));
            }
        }
    }
    let mismatches: Vec<String> = pairs
        .par_iter()
        .flat_map_iter(|(s, p, t, q)| {
            indices.iter().filter_map(move |e| {
                (transvectant(p, q, *e) != oracle_transvectant(p, q, *e)).then(|| format!("({s}, {t})^{e}"))
            })
        })
        .collect();
    let f = cat.ground_form();
    let odd_nonzero: Vec<String> = indices
        .iter()
        .filter(|e| e.total() % 2 == 1 && !transvectant(f, f, **e).is_zero())
        .map(|e| e.to_string())
        .collect();
    vec![
        Check::new(
            format!("transvectant equals oracle on {} pairs x {} indices", pairs.len(), indices.len()),
            mismatches.is_empty(),
            mismatches.join(" "),
        ),
        Check::new("(f, f)^e = 0 for odd total order", odd_nonzero.is_empty(), odd_nonzero.join(" ")),
    ]
}

/// Evaluate the recipe chain for `target` starting from an arbitrary
/// ground form. Because transvectants only differentiate in the variables,
/// specializing the form coefficients commutes with every step, so
/// running the chain on a specialized form equals specializing the
/// catalog entry.
pub fn evaluate_chain<C: Coeff>(
    ground: &Poly<C>,
    target: &CovariantSymbol,
) -> Result<Poly<C>, CatalogError> {
    if *target == CovariantSymbol::GROUND {
        return Ok(ground.clone());
    }
    let table: FxHashMap<CovariantSymbol, CovariantRecipe> = recipes().into_iter().map(|r| (r.symbol, r)).collect();
    let mut chain = Vec::new();
    let mut cur = *target;
    while cur != CovariantSymbol::GROUND {
        let r = table.get(&cur).ok_or_else(|| CatalogError::UnknownSymbol(cur.to_string()))?;
        chain.push(*r);
        cur = r.right;
    }
    let mut value = ground.clone();
    for r in chain.iter().rev() {
        value = transvectant(ground, &value, r.index);
    }
    Ok(value)
}

/// Highest-weight coefficient: the coefficient of
/// `x1^mu1 y1^mu2 z1^mu3 t1^mu4`.
pub fn source<C: Coeff>(p: &Poly<C>) -> Poly<C> {
    let Some(md) = p.multidegree() else {
        return Poly::zero();
    };
    let pairs: Vec<(Indeterminate, u8)> =
        Slot::ALL.iter().map(|s| (Indeterminate::var(*s, 1), md.mu[s.index()] as u8)).collect();
    let m = Monomial::from_pairs(&pairs);
    p.coefficient_extract(&m).expect("variable monomial")
}

/// Named aliases as (name, factor, symbol): `H = 1/2 B_0000`,
/// `b_uv = 1/2 B_..`, `f = A_1111`.
pub fn named_aliases() -> Vec<(&'static str, Rational, CovariantSymbol)> {
    let half = Rational::from_ints(1, 2);
    let s = |t: &str| t.parse::<CovariantSymbol>().expect("alias symbol");
    vec![
        ("f", Rational::ONE, CovariantSymbol::GROUND),
        ("H", half.clone(), s("B_0000")),
        ("b_xy", half.clone(), s("B_2200")),
        ("b_xz", half.clone(), s("B_2020")),
        ("b_xt", half.clone(), s("B_2002")),
        ("b_yz", half.clone(), s("B_0220")),
        ("b_yt", half.clone(), s("B_0202")),
        ("b_zt", half, s("B_0022")),
    ]
}

/// Resolve a symbol or alias to (factor, symbol).
pub fn resolve_name(name: &str) -> Result<(Rational, CovariantSymbol), CatalogError> {
    if let Some((_, k, s)) = named_aliases().into_iter().find(|(n, _, _)| *n == name) {
        return Ok((k, s));
    }
    Ok((Rational::ONE, name.parse()?))
}

#[cfg(test)]
mod tests;
