//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria 3, 4, 5 and 8 are red: the displayed values they compare
//! against cannot be reproduced under the transvectant and ket
//! conventions in force (see README). They are still evaluated literally
//! on every run; the process fails if any criterion's outcome differs from
//! the expected one, in either direction.
//!
//! The degree-12 catalog is cached under the cargo target directory, or
//! under `QOVAR_CACHE` when set.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use qovar::algebra::{FieldElem, Rational};
use qovar::catalog::{build_catalog_with, catalog_checks, transvectant_oracle_checks, BuildEvent, BuildOptions, Catalog};
use qovar::check::Check;
use qovar::hilbert::{compare_with_printed_pq, series_checks};
use qovar::minimality::verify_table;
use qovar::normalforms::{evaluate_by_chain, evaluate_covariant, g_abcd_identities, NormalForm};
use qovar::relations::{separation_checks, sources_checks, syzygy_checks, syzygy_diagnostics};

/// Criteria expected to stay red.
const KNOWN_RED: [u32; 4] = [3, 4, 5, 8];

struct Outcome {
    number: u32,
    title: &'static str,
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Outcome {
    fn passed(&self) -> bool {
        qovar::check::all_passed(&self.checks)
    }
}

fn cache_dir() -> PathBuf {
    match std::env::var_os("QOVAR_CACHE") {
        Some(p) => PathBuf::from(p),
        None => PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("qovar-cache"),
    }
}

fn criterion1(cat: &Catalog) -> Outcome {
    Outcome { number: 1, title: "catalog completeness to degree 12", checks: catalog_checks(cat), notes: vec![] }
}

fn criterion2(cat: &Catalog) -> Outcome {
    Outcome {
        number: 2,
        title: "transvectant against the primed-variable oracle",
        checks: transvectant_oracle_checks(cat, 4, 4),
        notes: vec![],
    }
}

fn criterion3(cat: &Catalog) -> Outcome {
    let half = FieldElem::from(Rational::from_ints(1, 2));
    let mut notes = Vec::new();
    for form in [NormalForm::L0_5p3, NormalForm::L0_7p1, NormalForm::L0_3p1_0_3p1] {
        let c = evaluate_covariant(cat, "C^1_1111", form).expect("C^1_1111");
        notes.push(format!("C^1_1111({form}) / 2 = {}", c.scale(&half)));
    }
    Outcome {
        number: 3,
        title: "separation values on the degenerate forms",
        checks: separation_checks(cat).expect("separation"),
        notes,
    }
}

fn criterion4(cat: &Catalog) -> Outcome {
    let checks: Vec<Check> = syzygy_checks(cat, 4).expect("syzygies").into_iter().take(4).collect();
    let notes = syzygy_diagnostics(cat)
        .expect("diagnostics")
        .iter()
        .map(|c| format!("{}: {}", c.name, if c.passed { "holds" } else { "fails" }))
        .collect();
    Outcome { number: 4, title: "syzygies and negative control", checks, notes }
}

fn criterion5(cat: &Catalog) -> Outcome {
    Outcome {
        number: 5,
        title: "sources table and rational D_4000",
        checks: sources_checks(cat).expect("sources"),
        notes: vec![],
    }
}

fn criterion6() -> Outcome {
    let report = compare_with_printed_pq(8);
    Outcome {
        number: 6,
        title: "Hilbert series",
        checks: series_checks(),
        notes: report.to_string().lines().map(str::to_string).collect(),
    }
}

fn criterion7(cat: &Catalog) -> Outcome {
    let reports = verify_table(6, cat).expect("minimality");
    let mut checks: Vec<Check> = reports
        .iter()
        .filter(|r| !r.ok())
        .map(|r| Check::new(format!("cell {r}"), false, format!("published {}", r.published)))
        .collect();
    let d4 = reports.iter().find(|r| r.d == 4 && r.mu == [0; 4]).expect("cell (4; 0000)");
    checks.push(Check::new(format!("{} cells up to degree 6 verified", reports.len()), checks.is_empty(), ""));
    checks.push(Check::new(
        "c_{4;0000}: dim 3 = 1 reducible + 2 new",
        (d4.dim, d4.reducible_rank, d4.new_needed, d4.new_supplied) == (3, 1, 2, 2),
        d4.to_string(),
    ));
    Outcome { number: 7, title: "minimality to degree 6", checks, notes: vec![] }
}

fn criterion8(cat: &Catalog) -> Outcome {
    let checks = g_abcd_identities(&|s| evaluate_covariant(cat, s, NormalForm::Gabcd)).expect("identities");
    let chain = g_abcd_identities(&|s| evaluate_by_chain(s, NormalForm::Gabcd)).expect("identities by chain");
    Outcome {
        number: 8,
        title: "identities on G_abcd",
        notes: vec![format!("recipe-chain route agrees with substitution route: {}", checks == chain)],
        checks,
    }
}

fn main() -> ExitCode {
    let dir = cache_dir();
    let start = Instant::now();
    let cat = build_catalog_with(12, BuildOptions { cache: Some(&dir), jobs: None }, |e| {
        if let BuildEvent::Computed { degree, entries, terms } = e {
            eprintln!("degree {degree}: computed {entries} entries, {terms} terms");
        }
    })
    .expect("degree-12 catalog");
    eprintln!("catalog ready in {:.1?} ({})", start.elapsed(), dir.display());

    let runs: Vec<Box<dyn Fn() -> Outcome + '_>> = vec![
        Box::new(|| criterion1(&cat)),
        Box::new(|| criterion2(&cat)),
        Box::new(|| criterion3(&cat)),
        Box::new(|| criterion4(&cat)),
        Box::new(|| criterion5(&cat)),
        Box::new(criterion6),
        Box::new(|| criterion7(&cat)),
        Box::new(|| criterion8(&cat)),
    ];
    let mut unexpected = Vec::new();
    for run in runs {
        let t = Instant::now();
        let o = run();
        let known = KNOWN_RED.contains(&o.number);
        let status = if o.passed() { "PASS" } else { "FAIL" };
        let tag = if !o.passed() && known { " (known red)" } else { "" };
        println!("criterion {} {status}{tag}: {} [{:.1?}]", o.number, o.title, t.elapsed());
        for c in o.checks.iter().filter(|c| !c.passed || !o.passed()) {
            println!("    {c}");
        }
        for n in &o.notes {
            println!("    note {n}");
        }
        if o.passed() == known {
            unexpected.push(o.number);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: outcomes as expected (red: {KNOWN_RED:?})");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
