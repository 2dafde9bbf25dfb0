//! Cayley Omega process and multiple transvectants.
//!
//! `(f, g)^e = tr Omega_x^e1 Omega_y^e2 Omega_z^e3 Omega_t^e4 f(x', ...) g(x'', ...)`
//! with no normalizing factors. The production path expands each
//! `Omega^k` in closed form,
//!
//! ```text
//! tr Omega^k (f (x) g) = sum_j (-1)^j C(k, j) (d1^(k-j) d2^j f) (d1^j d2^(k-j) g)
//! ```
//!
//! and streams the right operand through a hash accumulator. The literal
//! primed-variable construction is kept as [`oracle_transvectant`].

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::algebra::Coeff;
use crate::poly::{Accumulator, Indeterminate, Monomial, Poly, Slot};

/// Omega exponents for the x, y, z, t slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TransvectantIndex(pub [u8; 4]);

impl TransvectantIndex {
    pub fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn single(slot: Slot, k: u8) -> TransvectantIndex {
        let mut e = [0; 4];
        e[slot.index()] = k;
        TransvectantIndex(e)
    }
}

impl fmt::Display for TransvectantIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        if self.0.iter().all(|&e| e < 10) {
            write!(f, "{a}{b}{c}{d}")
        } else {
            write!(f, "{a},{b},{c},{d}")
        }
    }
}

impl FromStr for TransvectantIndex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = if s.contains(',') { s.split(',').collect() } else { s.split("").filter(|p| !p.is_empty()).collect() };
        if parts.len() != 4 {
            return Err(format!("transvectant index needs four components: {s:?}"));
        }
        let mut e = [0u8; 4];
        for (k, p) in parts.iter().enumerate() {
            e[k] = p.trim().parse().map_err(|_| format!("bad transvectant index {s:?}"))?;
        }
        Ok(TransvectantIndex(e))
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

/// All j with 0 <= j_i <= e_i, plus the sign-binomial weight of each.
fn combos(e: &TransvectantIndex) -> Vec<([u8; 4], i64)> {
    let mut out = vec![([0u8; 4], 1i64)];
    for s in 0..4 {
        let k = e.0[s];
        let mut next = Vec::with_capacity(out.len() * (k as usize + 1));
        for (j, w) in &out {
            for js in 0..=k {
                let mut j2 = *j;
                j2[s] = js;
                let sign = if js % 2 == 1 { -1 } else { 1 };
                next.push((j2, w * sign * binomial(k as u32, js as u32)));
            }
        }
        out = next;
    }
    out
}

/// Apply `d/dv1^{n1} d/dv2^{n2}` for each slot to a single monomial.
/// Returns the falling-factorial multiplier and the new monomial.
#[inline]
fn differentiate_monomial(m: &Monomial, orders: &[(u8, u8); 4]) -> Option<(i64, Monomial)> {
    let mut out = *m;
    let mut mult: i64 = 1;
    for (s, slot) in Slot::ALL.iter().enumerate() {
        let (n1, n2) = orders[s];
        for (comp, n) in [(1u8, n1), (2u8, n2)] {
            if n == 0 {
                continue;
            }
            let v = Indeterminate::var(*slot, comp);
            let ex = m.exp(v);
            if ex < n {
                return None;
            }
            for t in 0..n {
                mult *= (ex - t) as i64;
            }
            out.set_exp(v, ex - n);
        }
    }
    Some((mult, out))
}

fn differentiate<C: Coeff>(p: &Poly<C>, orders: &[(u8, u8); 4], weight: i64) -> Poly<C> {
    let w = C::from_i64(weight);
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        if let Some((mult, m2)) = differentiate_monomial(m, orders) {
            terms.push((m2, c.mul(&C::from_i64(mult)).mul(&w)));
        }
    }
    Poly::from_terms(terms)
}

/// Chunk size for splitting the streamed operand across workers.
const STREAM_CHUNK: usize = 8192;

/// Multiple transvectant `(f, g)^e`, unnormalized. `f` occupies the primed
/// (first) column of every Omega determinant.
pub fn transvectant<C: Coeff>(f: &Poly<C>, g: &Poly<C>, e: TransvectantIndex) -> Poly<C> {
    if f.is_zero() || g.is_zero() {
        return Poly::zero();
    }
    // Left-operand derivatives, one per combination, weights folded in.
    let left: Vec<([(u8, u8); 4], Poly<C>)> = combos(&e)
        .into_iter()
        .filter_map(|(j, w)| {
            let f_orders: [(u8, u8); 4] = std::array::from_fn(|s| (e.0[s] - j[s], j[s]));
            let g_orders: [(u8, u8); 4] = std::array::from_fn(|s| (j[s], e.0[s] - j[s]));
            let df = differentiate(f, &f_orders, w);
            (!df.is_zero()).then_some((g_orders, df))
        })
        .collect();
    if left.is_empty() {
        return Poly::zero();
    }
    let stream = |part: &[(Monomial, C)]| {
        let mut acc = Accumulator::with_capacity(part.len() * 2);
        for (mg, cg) in part {
            for (g_orders, df) in &left {
                let Some((mult, mg2)) = differentiate_monomial(mg, g_orders) else { continue };
                let cg2 = cg.mul(&C::from_i64(mult));
                for (mf, cf) in df.terms() {
                    acc.add(mf.mul(&mg2), cf.mul(&cg2));
                }
            }
        }
        acc
    };
    let terms = g.terms();
    if terms.len() <= STREAM_CHUNK {
        return stream(terms).into_poly();
    }
    terms
        .par_chunks(STREAM_CHUNK)
        .map(stream)
        .reduce(Accumulator::new, |mut a, b| {
            a.merge(b);
            a
        })
        .into_poly()
}

/// Single-slot `tr Omega^k (f (x) g)`.
pub fn omega_power_pair<C: Coeff>(f: &Poly<C>, g: &Poly<C>, slot: Slot, k: u8) -> Poly<C> {
    transvectant(f, g, TransvectantIndex::single(slot, k))
}

// ---------------------------------------------------------------------------
// Reference construction in a private doubled universe.

/// Layout: 16 form coefficients, 4 parameters, 8 primed, 8 double-primed.
const EXT: usize = 36;
const PRIMED: usize = 20;
const DPRIMED: usize = 28;

type ExtMonomial = [u8; EXT];

fn to_extended(m: &Monomial, base: usize) -> ExtMonomial {
    let mut out = [0u8; EXT];
    for (v, e) in m.iter() {
        let i = v.index();
        let slot = if v.is_coeff() {
            i
        } else if v.is_var() {
            base + (i - 16)
        } else {
            16 + (i - 24)
        };
        out[slot] = e;
    }
    out
}

fn apply_omega<C: Coeff>(h: &FxHashMap<ExtMonomial, C>, slot: usize) -> FxHashMap<ExtMonomial, C> {
    let p1 = PRIMED + 2 * slot;
    let p2 = p1 + 1;
    let d1 = DPRIMED + 2 * slot;
    let d2 = d1 + 1;
    let mut out: FxHashMap<ExtMonomial, C> = FxHashMap::default();
    let mut push = |m: ExtMonomial, c: C| {
        let entry = out.entry(m).or_insert_with(C::zero);
        entry.add_assign(&c);
    };
    for (m, c) in h {
        // d/dx'_1 d/dx''_2
        if m[p1] > 0 && m[d2] > 0 {
            let mut n = *m;
            n[p1] -= 1;
            n[d2] -= 1;
            push(n, c.mul(&C::from_i64(m[p1] as i64 * m[d2] as i64)));
        }
        // - d/dx''_1 d/dx'_2
        if m[d1] > 0 && m[p2] > 0 {
            let mut n = *m;
            n[d1] -= 1;
            n[p2] -= 1;
            push(n, c.mul(&C::from_i64(-(m[d1] as i64) * m[p2] as i64)));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Literal definition: relabel, differentiate by the Omega determinants,
/// then merge primed and double-primed variables back.
pub fn oracle_transvectant<C: Coeff>(f: &Poly<C>, g: &Poly<C>, e: TransvectantIndex) -> Poly<C> {
    let mut h: FxHashMap<ExtMonomial, C> = FxHashMap::default();
    for (mf, cf) in f.terms() {
        let ef = to_extended(mf, PRIMED);
        for (mg, cg) in g.terms() {
            let eg = to_extended(mg, DPRIMED);
            let mut m = [0u8; EXT];
            for i in 0..EXT {
                m[i] = ef[i] + eg[i];
            }
            h.entry(m).or_insert_with(C::zero).add_assign(&cf.mul(cg));
        }
    }
    h.retain(|_, c| !c.is_zero());
    for (slot, &k) in e.0.iter().enumerate() {
        for _ in 0..k {
            h = apply_omega(&h, slot);
        }
    }
    Poly::from_terms(h.into_iter().map(|(m, c)| {
        let mut out = [0u8; crate::poly::NVARS];
        out[..16].copy_from_slice(&m[..16]);
        for k in 0..8 {
            out[16 + k] = m[PRIMED + k] + m[DPRIMED + k];
        }
        out[24..28].copy_from_slice(&m[16..20]);
        (Monomial::from_exponents(out), c)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Integer;
    use crate::poly::{IntPoly, MultiDegree};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn idx(s: &str) -> TransvectantIndex {
        s.parse().unwrap()
    }

    fn specialize(f: &IntPoly, values: &[i64; 16]) -> IntPoly {
        let asg = (0..16)
            .map(|i| (Indeterminate::coeff_index(i), IntPoly::constant(Integer::from(values[i]))))
            .collect();
        f.substitute(&asg)
    }

    #[test]
    fn zero_index_is_product() {
        let f = IntPoly::ground_form();
        let g = p("1*x1*y2 - 3*a[0110]*z1^2*t2");
        assert_eq!(transvectant(&f, &g, idx("0000")), f.mul(&g));
        assert_eq!(oracle_transvectant(&f, &g, idx("0000")), f.mul(&g));
        assert_eq!(omega_power_pair(&f, &g, Slot::Z, 0), f.mul(&g));
    }

    #[test]
    fn odd_self_transvectant_vanishes() {
        let f = IntPoly::ground_form();
        assert!(transvectant(&f, &f, idx("1000")).is_zero());
        assert!(transvectant(&f, &f, idx("0111")).is_zero());
    }

    #[test]
    fn omega_determinant() {
        assert_eq!(omega_power_pair(&p("1*x1"), &p("1*x2"), Slot::X, 1), IntPoly::one());
        assert_eq!(omega_power_pair(&p("1*x2"), &p("1*x1"), Slot::X, 1), p("-1"));
        assert_eq!(oracle_transvectant(&p("1*x1*y1"), &p("1*x2*y2"), idx("1100")), IntPoly::one());
        assert_eq!(transvectant(&p("1*x1*y1"), &p("1*x2*y2"), idx("1100")), IntPoly::one());
    }

    #[test]
    fn hyperdeterminant_of_ghz_like_state() {
        let f = IntPoly::ground_form();
        let mut vals = [0i64; 16];
        vals[0] = 1;
        vals[15] = 1;
        let fs = specialize(&f, &vals);
        assert_eq!(oracle_transvectant(&fs, &fs, idx("1111")), p("2"));
        assert_eq!(transvectant(&fs, &fs, idx("1111")), p("2"));
        // generic H specializes to the same value
        let b = transvectant(&f, &f, idx("1111"));
        assert_eq!(specialize(&b, &vals), p("2"));
    }

    #[test]
    fn ground_form_omega_matches_oracle_on_random_states() {
        let f = IntPoly::ground_form();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x_omega = omega_power_pair(&f, &f, Slot::X, 1);
        let h = transvectant(&f, &f, idx("1111"));
        for _ in 0..50 {
            let vals: [i64; 16] = std::array::from_fn(|_| rng.gen_range(-5..=5));
            let fs = specialize(&f, &vals);
            assert_eq!(specialize(&h, &vals), oracle_transvectant(&fs, &fs, idx("1111")));
            assert_eq!(specialize(&x_omega, &vals), oracle_transvectant(&fs, &fs, idx("1000")));
        }
        // tr Omega_x (f (x) f) vanishes; the unmerged operator output is antisymmetric
        assert!(x_omega.is_zero());
    }

    #[test]
    fn out_of_range_index_gives_zero() {
        let f = IntPoly::ground_form();
        assert!(transvectant(&f, &f, idx("2000")).is_zero());
        assert!(oracle_transvectant(&f, &f, idx("2000")).is_zero());
    }

    #[test]
    fn degree_law_on_biquadratic() {
        let f = IntPoly::ground_form();
        let b = transvectant(&f, &f, idx("0011"));
        assert_eq!(b.multidegree(), Some(MultiDegree::new(2, [2, 2, 0, 0])));
        let c = transvectant(&f, &b, idx("0100"));
        assert_eq!(c.multidegree(), Some(MultiDegree::new(3, [3, 1, 1, 1])));
    }

    #[test]
    fn index_text() {
        assert_eq!(idx("1011").0, [1, 0, 1, 1]);
        assert_eq!(idx("1,0,12,1").0, [1, 0, 12, 1]);
        assert_eq!(idx("1011").to_string(), "1011");
        assert!("101".parse::<TransvectantIndex>().is_err());
    }
}
