use super::*;
use crate::algebra::Integer;
use crate::poly::MultiDegree;
use crate::transvect::oracle_transvectant;

fn sym(s: &str) -> CovariantSymbol {
    s.parse().unwrap()
}

#[test]
fn recipe_table_is_well_formed() {
    let all = recipes();
    assert_eq!(all.len(), 169);
    let mut seen = FxHashMap::default();
    seen.insert(CovariantSymbol::GROUND, ());
    for r in &all {
        assert!(seen.contains_key(&r.right), "{} uses {} before it is defined", r.symbol, r.right);
        assert_eq!(r.predicted_multidegree(), Some(r.symbol.multidegree()), "degree law for {}", r.symbol);
        assert!(seen.insert(r.symbol, ()).is_none(), "duplicate {}", r.symbol);
    }
}

#[test]
fn recipe_table_matches_published_counts() {
    let mut counts: BTreeMap<(u8, [u8; 4]), usize> = BTreeMap::new();
    counts.insert((1, [1, 1, 1, 1]), 1);
    for r in recipes() {
        *counts.entry((r.symbol.degree, r.symbol.shape())).or_insert(0) += 1;
    }
    assert_eq!(counts, published_counts());
    assert_eq!(counts.values().sum::<usize>(), 170);
    assert_eq!(published_count_at(4, [0, 2, 2, 2]), 2);
    assert_eq!(published_count_at(4, [1, 1, 1, 1]), 0);
}

#[test]
fn degree_two_catalog() {
    let cat = build_catalog(2, None).unwrap();
    assert_eq!(cat.len(), 7 + 1);
    assert_eq!(cat.ground_form(), &IntPoly::ground_form());
    let b = cat.get(&sym("B_0000")).unwrap();
    assert_eq!(b.multidegree(), Some(MultiDegree::new(2, [0, 0, 0, 0])));
    assert!(cat.get(&sym("C_3111")).is_none());
    assert!(matches!(cat.require(&sym("C_3111")), Err(CatalogError::UnknownSymbol(_))));
}

#[test]
fn degree_five_counts() {
    let cat = build_catalog(5, None).unwrap();
    let counts = cat.generator_counts();
    assert_eq!(counts.get(&(5, [1, 1, 1, 1])), Some(&1));
    assert_eq!(counts.get(&(5, [3, 1, 1, 1])), Some(&12));
    assert_eq!(cat.len(), 1 + 7 + 6 + 20 + 13);
    for (s, p) in cat.entries() {
        assert!(!p.is_zero());
        assert_eq!(p.multidegree(), Some(s.multidegree()), "{s}");
    }
}

#[test]
fn bad_degree_bound() {
    assert!(matches!(build_catalog(0, None), Err(CatalogError::BadDegreeBound(0))));
    assert!(matches!(build_catalog(13, None), Err(CatalogError::BadDegreeBound(13))));
}

#[test]
fn low_degree_entries_match_oracle() {
    let cat = build_catalog(3, None).unwrap();
    for r in recipes().iter().filter(|r| r.symbol.degree <= 3) {
        let right = cat.get(&r.right).unwrap();
        let expect = oracle_transvectant(cat.ground_form(), right, r.index);
        assert_eq!(cat.get(&r.symbol).unwrap(), &expect, "{}", r.symbol);
    }
}

#[test]
fn cache_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let fresh = build_catalog(4, Some(dir.path())).unwrap();
    assert!(dir.path().join("degree-4.cov").exists());
    let mut events = Vec::new();
    let again = build_catalog_with(4, BuildOptions { cache: Some(dir.path()), jobs: Some(1) }, |e| events.push(e)).unwrap();
    assert!(events.iter().all(|e| matches!(e, BuildEvent::LoadedFromCache { .. })));
    for ((s1, p1), (s2, p2)) in fresh.entries().zip(again.entries()) {
        assert_eq!(s1, s2);
        assert_eq!(p1, p2);
    }
    let one = cache::load_entry(dir.path(), &sym("D^2_2220")).unwrap().unwrap();
    assert_eq!(&one, fresh.get(&sym("D^2_2220")).unwrap());
    assert!(cache::load_entry(dir.path(), &sym("E_1111")).unwrap().is_none());
}

#[test]
fn corrupt_cache_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    build_catalog(2, Some(dir.path())).unwrap();
    let path = cache::degree_file(dir.path(), 2);
    let text = std::fs::read_to_string(&path).unwrap();
    let broken = text.replacen("B_0000 2 0 0 0 0", "B_0000 2 0 0 0 1", 1);
    std::fs::write(&path, broken).unwrap();
    assert!(matches!(build_catalog(2, Some(dir.path())), Err(CatalogError::Cache(_))));
}

#[test]
fn chain_evaluation_commutes_with_specialization() {
    let cat = build_catalog(4, None).unwrap();
    let values: Vec<i64> = (0..16).map(|i| (i * 7 % 5) as i64 - 2).collect();
    let asg: FxHashMap<_, _> = (0..16)
        .map(|i| (Indeterminate::coeff_index(i), IntPoly::constant(Integer::from(values[i]))))
        .collect();
    let f = cat.ground_form().substitute(&asg);
    for s in ["B_0000", "C_3111", "D_4000", "D^1_2220"] {
        let via_chain = evaluate_chain(&f, &sym(s)).unwrap();
        assert_eq!(via_chain, cat.get(&sym(s)).unwrap().substitute(&asg), "{s}");
    }
}

#[test]
fn source_of_ground_form() {
    let f = IntPoly::ground_form();
    assert_eq!(source(&f), "1*a[0000]".parse().unwrap());
    let cat = build_catalog(2, None).unwrap();
    let b = cat.get(&sym("B_2200")).unwrap();
    // coefficient of x1^2 y1^2 only involves a[00kl]
    let s = source(b);
    assert!(!s.is_zero());
    assert_eq!(s.multidegree(), Some(MultiDegree::new(2, [0, 0, 0, 0])));
}

#[test]
fn aliases_resolve() {
    let cat = build_catalog(2, None).unwrap();
    let (k, p) = cat.resolve("b_xy").unwrap();
    assert_eq!(k, Rational::from_ints(1, 2));
    assert_eq!(p, cat.get(&sym("B_2200")).unwrap());
    assert!(cat.resolve("zz").is_err());
}

#[test]
fn recipe_and_catalog_checks_pass() {
    assert!(crate::check::all_passed(&recipe_checks()));
    let cat = build_catalog(3, None).unwrap();
    let checks = catalog_checks(&cat);
    assert!(crate::check::all_passed(&checks), "{checks:?}");
    assert_eq!(checks[2].name, "14 generators up to degree 3");
}
