use std::sync::OnceLock;

use super::*;
use crate::catalog::build_catalog;

fn catalog5() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| build_catalog(5, None).unwrap())
}

fn sym(s: &str) -> CovariantSymbol {
    s.parse().unwrap()
}

#[test]
fn associated_form_is_homogeneous_of_degree_five() {
    let big_f = associated_form();
    assert!(big_f.terms().iter().all(|(m, _)| m.coeff_degree() == 5));
    let m = Monomial::from_pairs(&Slot::ALL.map(|s| (Indeterminate::var(s, 1), 1)));
    let lead = big_f.coefficient_extract(&m).unwrap();
    assert_eq!(lead, IntPoly::monomial(Monomial::single(Indeterminate::coeff([0, 0, 0, 0]), 5), Integer::ONE));
}

#[test]
fn sources_table_shape() {
    let t = sources_table().unwrap();
    assert_eq!(t.entries.len(), 16);
    assert_eq!(*t.get([0, 0, 0, 0]), IntPoly::one());
    for bits in [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]] {
        assert!(t.get(bits).is_zero(), "{bits:?}");
    }
    for bits in all_labels().filter(|b| b.iter().sum::<u8>() >= 2) {
        let md = t.get(bits).multidegree().unwrap();
        assert_eq!(md.d, bits.iter().map(|&b| b as u32).sum::<u32>());
    }
}

#[test]
fn printed_table_entries() {
    let checks = source_table_checks(catalog5()).unwrap();
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| &c.name[..6]).collect();
    // the cubic entries come out as -1/2 of the printed ones
    assert_eq!(failed, ["c_0111", "c_1011", "c_1101", "c_1110"]);
}

#[test]
fn derived_associated_covariants() {
    let derived = associated_covariants(catalog5()).unwrap();
    let half = Rational::from_ints(1, 2);
    assert_eq!(derived[&[0, 1, 1, 1]], FormalPoly::generator(Generator::C3111).scale(&half));
    assert_eq!(derived[&[1, 1, 1, 0]], FormalPoly::generator(Generator::C1113).scale(&half));
    assert_eq!(derived[&[0, 0, 1, 1]], printed_associated_covariant([0, 0, 1, 1]));
    assert_eq!(derived[&[1, 1, 1, 1]], printed_associated_covariant([1, 1, 1, 1]));
}

#[test]
fn rationalize_d4000() {
    let r = rationalize(catalog5(), &sym("D_4000")).unwrap();
    assert_eq!(r.fpower, 2);
    let g = FormalPoly::generator;
    let expected = g(Generator::C3111)
        .mul(&g(Generator::C3111))
        .add(&g(Generator::Bxt).mul(&g(Generator::Bxy)).mul(&g(Generator::Bxz)).scale(&Rational::from(16)))
        .neg();
    assert_eq!(r.numerator, expected);
    assert!(verify_syzygy(catalog5(), &induced_syzygy(&r)).unwrap());
}

#[test]
fn rationalize_b2200() {
    let r = rationalize(catalog5(), &sym("B_2200")).unwrap();
    assert_eq!(r.fpower, 0);
    assert_eq!(r.numerator, FormalPoly::generator(Generator::Bxy).scale(&Rational::from(2)));
}

#[test]
fn d4000_syzygy_in_both_conventions() {
    let cat = catalog5();
    assert!(!verify_syzygy(cat, &d4000_syzygy()).unwrap());
    assert!(!verify_syzygy_normalized(cat, &d4000_syzygy()).unwrap());
    let ours = Syzygy::new("ours")
        .with("1", &["f**2", "D_4000"])
        .with("1", &["C_3111**2"])
        .with("16", &["b_xy", "b_xz", "b_xt"]);
    assert!(verify_syzygy(cat, &ours).unwrap());
    let control = Syzygy::new("control").with("1", &["f**2", "D_4000"]).with("1", &["C_3111**2"]);
    assert!(!verify_syzygy(cat, &control).unwrap());
}

#[test]
fn normalized_scales_of_low_degree() {
    let s = normalized_scales();
    assert_eq!(s.len(), 170);
    assert_eq!(s[&sym("B_0000")], Rational::ONE);
    assert_eq!(s[&sym("C_3111")], Rational::from_ints(1, 2));
    assert_eq!(s[&sym("C^1_1111")], Rational::from_ints(1, 4));
    assert_eq!(s[&sym("D_2200")], Rational::from_ints(1, 6));
}

#[test]
fn degree_six_syzygies_hold_only_when_normalized() {
    let cat = catalog5();
    for c in CROSS_TERM_CANDIDATES {
        for s in degree_six_syzygies(c) {
            assert!(!verify_syzygy(cat, &s).unwrap(), "{}", s.description);
        }
    }
    let [first, _] = degree_six_syzygies(CROSS_TERM_CANDIDATES[0]);
    assert!(verify_syzygy_normalized(cat, &first).unwrap());
    let second: Vec<bool> = CROSS_TERM_CANDIDATES
        .iter()
        .map(|c| verify_syzygy_normalized(cat, &degree_six_syzygies(*c)[1]).unwrap())
        .collect();
    assert_eq!(second, [true, false, false]);
}

#[test]
fn unknown_symbol_is_an_error() {
    let s = Syzygy::new("bad").with("1", &["Q_1234"]);
    assert!(verify_syzygy(catalog5(), &s).is_err());
}

#[test]
fn formal_display() {
    let r = rationalize(catalog5(), &sym("D_4000")).unwrap();
    assert_eq!(r.numerator.to_string(), "-16*b_xy*b_xz*b_xt - C_3111^2");
}

#[test]
fn separation_against_displayed_values() {
    let cat = build_catalog(6, None).unwrap();
    let checks = separation_checks(&cat).unwrap();
    assert_eq!(checks.len(), 6 + 3 * 5);
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    assert_eq!(
        failed,
        [
            "C_3111(L_0_5+3bar) = 2*x2*y2*z1*t1 - 2*x1*y2*z1*t1",
            "C_3111(L_0_7+1bar) = 2*x2*y1*z1*t2 + 2*x2*y1*z2*t1 - 4*x2*y2*z1*t1",
            "D_2200(L_0_7+1bar) = -16*x2^2*z1*z2",
            "C_3111(L_0_3+1bar_0_3+1bar) = 0",
            "L_0_3+1bar_0_3+1bar: C_3111 0, D_2200 0",
        ]
    );
}

#[test]
fn check_lists() {
    let cat = catalog5();
    let syz = syzygy_checks(cat, 5).unwrap();
    let failed: Vec<&str> = syz.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    // only the three printed identities fail; every rational identity holds
    assert_eq!(failed.len(), 3, "{failed:?}");
    assert!(syz[3].passed);
    let diag = syzygy_diagnostics(cat).unwrap();
    let pattern: Vec<bool> = diag.iter().map(|c| c.passed).collect();
    assert_eq!(pattern, [true, false, true, true, false, false]);
    let src = sources_checks(cat).unwrap();
    assert_eq!(src.len(), 17);
    assert!(!src[16].passed);
    assert_eq!(src[16].detail, "computed (-16*b_xy*b_xz*b_xt - C_3111^2) / f^2");
}
