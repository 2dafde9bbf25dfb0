//! Generator counts certified by linear algebra.
//!
//! For a cell `(d; mu)` the covariants of that multidegree form a space of
//! dimension `c_{d;mu}` (from the Hilbert series). Products of lower-degree
//! generators span part of it; the rest has to be supplied by new
//! generators. Ranks are computed on sources, which determine a covariant
//! of known multidegree uniquely.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::Integer;
use crate::catalog::{published_count_at, source, Catalog, CovariantSymbol};
use crate::hilbert::covariant_dimensions;
use crate::poly::{IntPoly, Monomial, MultiDegree};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MinimalityError {
    #[error("rank of polynomials with different multidegrees: {0} and {1}")]
    MixedMultidegree(MultiDegree, MultiDegree),
    #[error("catalog only reaches degree {have}, degree {want} requested")]
    CatalogTooSmall { have: u8, want: u8 },
}

/// Products of at least two catalog generators with total multidegree
/// exactly `(d; mu)`, each as a nondecreasing list of factors.
pub fn enumerate_products(d: u8, mu: [u8; 4], catalog: &Catalog) -> Vec<Vec<CovariantSymbol>> {
    let gens: Vec<CovariantSymbol> = catalog.symbols().filter(|s| s.degree < d).copied().collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_products(&gens, 0, d, mu, &mut current, &mut out);
    out
}

fn extend_products(
    gens: &[CovariantSymbol],
    start: usize,
    d: u8,
    mu: [u8; 4],
    current: &mut Vec<CovariantSymbol>,
    out: &mut Vec<Vec<CovariantSymbol>>,
) {
    if d == 0 {
        if mu == [0; 4] && current.len() >= 2 {
            out.push(current.clone());
        }
        return;
    }
    for (i, g) in gens.iter().enumerate().skip(start) {
        if g.degree > d || (0..4).any(|k| g.sub[k] > mu[k]) {
            continue;
        }
        let rest = [0, 1, 2, 3].map(|k| mu[k] - g.sub[k]);
        current.push(*g);
        extend_products(gens, i, d - g.degree, rest, current, out);
        current.pop();
    }
}

/// Multiply the factors' polynomials, or their sources when `sources`.
pub fn product_poly(catalog: &Catalog, factors: &[CovariantSymbol], sources: bool) -> IntPoly {
    factors.iter().fold(IntPoly::one(), |acc, s| {
        let p = catalog.get(s).expect("factor in catalog");
        if sources {
            acc.mul(&source(p))
        } else {
            acc.mul(p)
        }
    })
}

/// Rank over the rationals of the coefficient vectors, by fraction-free
/// elimination with smallest-magnitude pivots.
pub fn rank_over_rationals(polys: &[IntPoly]) -> Result<usize, MinimalityError> {
    let mut md: Option<MultiDegree> = None;
    for p in polys {
        if let Some(m) = p.multidegree() {
            match md {
                Some(prev) if prev != m => return Err(MinimalityError::MixedMultidegree(prev, m)),
                _ => md = Some(m),
            }
        }
    }
    let mut columns: Vec<Monomial> = polys.iter().flat_map(|p| p.terms().iter().map(|(m, _)| *m)).collect();
    columns.sort_unstable();
    columns.dedup();
    let mut rows: Vec<Vec<Integer>> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut row = vec![Integer::ZERO; columns.len()];
            for (m, c) in p.terms() {
                let j = columns.binary_search(m).expect("column of a present monomial");
                row[j] = c.clone();
            }
            row
        })
        .collect();
    Ok(eliminate(&mut rows))
}

fn eliminate(rows: &mut [Vec<Integer>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by(|&i, &j| rows[i][col].abs().cmp(&rows[j][col].abs()))
        else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut().filter(|r| !r[col].is_zero()) {
            let factor = row[col].clone();
            for j in col..ncols {
                let v = row[j].mul(pivot).sub(&factor.mul(&pivot_row[j]));
                row[j] = v;
            }
            let g = row[col..].iter().fold(Integer::ZERO, |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in row[col..].iter_mut() {
                    *x = x.div_exact(&g).expect("content divides");
                }
            }
        }
        rank += 1;
    }
    rank
}

/// One verified cell of the generator table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub d: u8,
    pub mu: [u8; 4],
    pub dim: u64,
    pub reducible_rank: usize,
    pub new_needed: usize,
    pub new_supplied: usize,
    /// Published number of new generators at this cell.
    pub published: usize,
    pub full_rank_ok: bool,
}

impl RankReport {
    pub fn ok(&self) -> bool {
        self.full_rank_ok && self.new_needed == self.published && self.new_supplied == self.new_needed
    }
}

fn render_mu(mu: &[u8; 4]) -> String {
    if mu.iter().all(|&m| m < 10) {
        mu.iter().map(|m| m.to_string()).collect()
    } else {
        mu.map(|m| m.to_string()).join(",")
    }
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {} {} {}",
            self.d,
            render_mu(&self.mu),
            self.dim,
            self.reducible_rank,
            self.new_needed,
            self.new_supplied,
            if self.ok() { "OK" } else { "FAIL" }
        )
    }
}

/// Verify one cell using sources.
pub fn verify_cell(catalog: &Catalog, d: u8, mu: [u8; 4], dim: u64) -> Result<RankReport, MinimalityError> {
    let products: Vec<IntPoly> =
        enumerate_products(d, mu, catalog).iter().map(|f| product_poly(catalog, f, true)).collect();
    let reducible_rank = rank_over_rationals(&products)?;
    let new: Vec<IntPoly> = catalog
        .entries()
        .filter(|(s, _)| s.degree == d && s.sub == mu)
        .map(|(_, p)| source(p))
        .collect();
    let mut all = products;
    all.extend(new.iter().cloned());
    let total = rank_over_rationals(&all)?;
    Ok(RankReport {
        d,
        mu,
        dim,
        reducible_rank,
        new_needed: (dim as usize).saturating_sub(reducible_rank),
        new_supplied: new.len(),
        published: published_count_at(d, mu),
        full_rank_ok: total as u64 == dim && total == reducible_rank + new.len(),
    })
}

/// Every cell `(d; mu)` with `d <= dmax` and nonzero dimension, in
/// (degree, multidegree) order.
pub fn verify_table(dmax: u8, catalog: &Catalog) -> Result<Vec<RankReport>, MinimalityError> {
    if catalog.dmax() < dmax {
        return Err(MinimalityError::CatalogTooSmall { have: catalog.dmax(), want: dmax });
    }
    let mut cells = Vec::new();
    for d in 1..=dmax {
        for (mu, dim) in covariant_dimensions(d as u32) {
            if dim > 0 {
                cells.push((d, mu.map(|m| m as u8), dim));
            }
        }
    }
    let mut out: Vec<RankReport> =
        cells.par_iter().map(|&(d, mu, dim)| verify_cell(catalog, d, mu, dim)).collect::<Result<_, _>>()?;
    out.sort_by(|a, b| (a.d, a.mu).cmp(&(b.d, b.mu)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::sync::OnceLock;

    use super::*;
    use crate::catalog::build_catalog;

    fn catalog() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| build_catalog(4, None).unwrap())
    }

    fn sym(s: &str) -> CovariantSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn products_in_low_cells() {
        let cat = catalog();
        assert!(enumerate_products(2, [2, 2, 0, 0], cat).is_empty());
        assert_eq!(enumerate_products(3, [1, 1, 1, 1], cat), vec![vec![CovariantSymbol::GROUND, sym("B_0000")]]);
        assert_eq!(enumerate_products(4, [0, 0, 0, 0], cat), vec![vec![sym("B_0000"), sym("B_0000")]]);
        assert_eq!(enumerate_products(2, [2, 2, 2, 2], cat), vec![vec![CovariantSymbol::GROUND; 2]]);
    }

    #[test]
    fn ranks() {
        let p: IntPoly = "1*a[0000]*x1 + 3*a[0001]*x2".parse().unwrap();
        assert_eq!(rank_over_rationals(&[p.clone(), p.scale(&Integer::from(2))]).unwrap(), 1);
        assert_eq!(rank_over_rationals(&[]).unwrap(), 0);
        let q: IntPoly = "1*x1".parse().unwrap();
        assert!(rank_over_rationals(&[p, q.mul(&q)]).is_err());
        let cat = catalog();
        let polys = vec![
            product_poly(cat, &[CovariantSymbol::GROUND, sym("B_0000")], false),
            cat.get(&sym("C^1_1111")).unwrap().clone(),
            cat.get(&sym("C^2_1111")).unwrap().clone(),
        ];
        assert_eq!(rank_over_rationals(&polys).unwrap(), 3);
    }

    #[test]
    fn published_cells() {
        let cat = catalog();
        let r = verify_cell(cat, 4, [0, 0, 0, 0], 3).unwrap();
        assert_eq!((r.reducible_rank, r.new_needed, r.new_supplied, r.published), (1, 2, 2, 2));
        assert!(r.ok());
        assert_eq!(r.to_string(), "4 0000 3 1 2 2 OK");
        let r = verify_cell(cat, 3, [1, 1, 1, 1], 3).unwrap();
        assert_eq!((r.reducible_rank, r.new_needed), (1, 2));
        let r = verify_cell(cat, 2, [2, 2, 0, 0], 1).unwrap();
        assert_eq!((r.reducible_rank, r.new_needed), (0, 1));
        assert!(r.ok());
    }

    #[test]
    fn table_up_to_degree_four() {
        let reports = verify_table(4, catalog()).unwrap();
        for r in &reports {
            assert!(r.ok(), "{r}");
        }
        // permuted multidegrees report the same numbers
        for r in &reports {
            let mut shape = r.mu;
            shape.sort_unstable_by(|a, b| b.cmp(a));
            let s = reports.iter().find(|x| x.d == r.d && x.mu == shape).unwrap();
            assert_eq!((r.dim, r.reducible_rank, r.new_needed), (s.dim, s.reducible_rank, s.new_needed));
        }
    }

    #[test]
    fn sources_and_full_polynomials_agree() {
        let cat = catalog();
        for (mu, dim) in covariant_dimensions(3) {
            if dim == 0 {
                continue;
            }
            let mu = mu.map(|m| m as u8);
            let mut full: Vec<IntPoly> =
                enumerate_products(3, mu, cat).iter().map(|f| product_poly(cat, f, false)).collect();
            let mut srcs: Vec<IntPoly> = full.iter().map(source).collect();
            for (_, p) in cat.entries().filter(|(s, _)| s.degree == 3 && s.sub == mu) {
                full.push(p.clone());
                srcs.push(source(p));
            }
            let r = rank_over_rationals(&full).unwrap();
            assert_eq!(r as u64, dim, "{mu:?}");
            assert_eq!(rank_over_rationals(&srcs).unwrap(), r);
        }
    }

    #[test]
    fn too_small_catalog() {
        assert!(matches!(verify_table(5, catalog()), Err(MinimalityError::CatalogTooSmall { .. })));
    }
}
