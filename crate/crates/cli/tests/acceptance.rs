//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Property criteria run over the built-in catalogs at `|X|·|B| ≤ 48`. The
//! concrete values are compared against the brute-force subgroup oracle
//! shared with the core tests.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{intersect, s3, Table};
use peiffer_core::ambient::{Action, FiniteGroup, LieAlgebra};
use peiffer_core::enumerate::{
    verify_property, Catalog, CatalogTheory, Property, PropertyReport, DEFAULT_SEED,
};
use peiffer_core::galois::{galois_group, hopf_h2, is_central, is_trivial_extension, Extension};
use peiffer_core::pxmod::{peiffer_commutator, quotient_pxmod, PXSubmodule, PrecrossedModule};

const BOUND: u64 = 48;
const MAIN_THEOREM_MIN_INSTANCES: u64 = 500;
const IMAGE_MIN_SAMPLES: u64 = 200;
const MAIN_THEOREM_BUDGET: Duration = Duration::from_secs(5 * 60);
const LIE_BUDGET: Duration = Duration::from_secs(2 * 60);

type Outcome = Result<String, String>;

fn run_properties<A: CatalogTheory>(catalog: &Catalog<A>, props: &[Property]) -> Result<Vec<PropertyReport>, String> {
    props
        .iter()
        .map(|&p| verify_property(catalog, p, BOUND).map_err(|e| format!("{p}: {e}")))
        .collect()
}

/// Every report must hold; each contributes "name n/n" to the detail line.
fn all_hold(reports: &[PropertyReport]) -> Outcome {
    let mut parts = Vec::new();
    for r in reports {
        if let Some(w) = &r.first_failure {
            return Err(format!(
                "{}: {} of {} failed, first #{} {}: {}",
                r.property, r.failed, r.instances, w.index, w.label, w.detail
            ));
        }
        parts.push(format!("{} {}/{}", r.property, r.passed, r.instances));
    }
    Ok(parts.join(", "))
}

fn groups() -> Catalog<FiniteGroup> {
    Catalog::builtin(DEFAULT_SEED)
}

fn main_theorem() -> Outcome {
    let start = Instant::now();
    let reports = run_properties(&groups(), &[Property::MainTheoremEquivalence])?;
    let elapsed = start.elapsed();
    let detail = all_hold(&reports)?;
    if reports[0].instances < MAIN_THEOREM_MIN_INSTANCES {
        return Err(format!("only {} instances", reports[0].instances));
    }
    if elapsed > MAIN_THEOREM_BUDGET {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{detail} in {:.1}s", elapsed.as_secs_f64()))
}

fn property_set(props: &[Property]) -> Outcome {
    all_hold(&run_properties(&groups(), props)?)
}

fn commutator_laws<A: CatalogTheory>(catalog: &Catalog<A>) -> Outcome {
    let reports = run_properties(
        catalog,
        &[
            Property::PeifferMonotone,
            Property::PeifferImagePreservation,
            Property::PeifferLemmaNormal,
            Property::PeifferHuqNormal,
        ],
    )?;
    if reports[1].instances < IMAGE_MIN_SAMPLES {
        return Err(format!("only {} image samples", reports[1].instances));
    }
    all_hold(&reports)
}

fn group(t: &Table) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::from_table(&t.rows).expect("oracle tables are groups"))
}

fn over_zero(g: &Arc<FiniteGroup>) -> PrecrossedModule<FiniteGroup> {
    PrecrossedModule::with_zero_boundary(Action::trivial(&Arc::new(FiniteGroup::trivial()), g))
}

fn quotient_ext(p: &PrecrossedModule<FiniteGroup>, gens: &[usize]) -> Extension<FiniteGroup> {
    let n = PXSubmodule::generated(p, gens, true);
    Extension::new(quotient_pxmod(&n).unwrap().projection).unwrap()
}

fn expect(name: &str, got: usize, oracle: usize, pinned: usize) -> Result<String, String> {
    if got == oracle && got == pinned {
        Ok(format!("{name} = {got}"))
    } else {
        Err(format!("{name}: library {got}, oracle {oracle}, expected {pinned}"))
    }
}

fn concrete_values() -> Outcome {
    let mut parts = Vec::new();

    let (t, _) = s3();
    let s = over_zero(&group(&t));
    let whole = s.whole();
    let xx = peiffer_commutator(&s, &whole, &whole).map_err(|e| e.to_string())?;
    let derived = t.commutator_subgroup(&t.everything(), &t.everything());
    parts.push(expect("|<X,X>| for S3 over 0", xx.order() as usize, derived.len(), 3)?);

    let q = Table::quaternion();
    let qm = over_zero(&group(&q));
    let center = q.center();
    let f = quotient_ext(&qm, &[center[1]]);
    let q_derived = q.commutator_subgroup(&q.everything(), &q.everything());
    let gal_oracle = intersect(&center, &q_derived).len();
    let gal = galois_group(&f).map_err(|e| e.to_string())?.order as usize;
    parts.push(expect("|Gal(Q -> Q/Z)|", gal, gal_oracle, 2)?);
    let h2_oracle = gal_oracle / q.commutator_subgroup(&q.everything(), &center).len();
    let h2 = hopf_h2(&f).map_err(|e| e.to_string())?.order as usize;
    parts.push(expect("|H2| via Q -> Q/Z", h2, h2_oracle, 2)?);

    let z4 = over_zero(&group(&Table::cyclic(4)));
    let reduce = quotient_ext(&z4, &[2]);
    if !is_trivial_extension(&reduce).map_err(|e| e.to_string())?.trivial {
        return Err("Z/4 -> Z/2 is not trivial".into());
    }
    parts.push("Z/4 -> Z/2 trivial".into());
    let central = is_central(&f).map_err(|e| e.to_string())?.verdict;
    let trivial = is_trivial_extension(&f).map_err(|e| e.to_string())?.trivial;
    if !central || trivial {
        return Err(format!("Q -> Q/Z: central {central}, trivial {trivial}"));
    }
    parts.push("Q -> Q/Z central, not trivial".into());
    Ok(parts.join(", "))
}

fn lie_mirror() -> Outcome {
    let start = Instant::now();
    let lies = Catalog::<LieAlgebra>::builtin(DEFAULT_SEED);
    let first = all_hold(&run_properties(
        &lies,
        &[Property::MainTheoremEquivalence, Property::CrossedIffTrivialPeiffer],
    )?)?;
    let laws = commutator_laws(&lies)?;
    let elapsed = start.elapsed();
    if elapsed > LIE_BUDGET {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{first}, {laws} in {:.1}s", elapsed.as_secs_f64()))
}

fn cli_report(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_peiffer"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let args = [
        "verify",
        "--property",
        "main-theorem-equivalence",
        "--property",
        "peiffer-image-preservation",
        "--property",
        "pullback-stability",
        "--seed",
        "11",
        "--max-order",
        "48",
        "--format",
        "json",
        "--no-timing",
    ];
    let a = cli_report(&args)?;
    let b = cli_report(&args)?;
    if a != b {
        return Err("verify reports differ between runs".into());
    }
    Ok(format!("two verify runs, {} identical bytes", a.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("main-theorem equivalence", main_theorem),
        ("reflection correspondence", || {
            property_set(&[Property::ReflectionCorrespondence, Property::NormalizeRoundtrip])
        }),
        ("crossed iff trivial Peiffer", || property_set(&[Property::CrossedIffTrivialPeiffer])),
        ("Peiffer commutator laws", || commutator_laws(&groups())),
        ("centralization", || {
            property_set(&[
                Property::CentralizeCentral,
                Property::CentralizeUniversal,
                Property::PullbackStability,
                Property::GaloisGroupKernel,
            ])
        }),
        ("double extensions", || {
            property_set(&[
                Property::DoubleCentralize,
                Property::DoubleTranspose,
                Property::TrivialImpliesCentral,
            ])
        }),
        ("concrete values", concrete_values),
        ("five-term sequence", || property_set(&[Property::FiveTerm])),
        ("Lie mirror", lie_mirror),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
