use peiffer_core::ambient::Ambient;
use peiffer_core::enumerate::{
    enumerate_double_extensions, enumerate_pxmods, enumerate_quotient_extensions,
    verify_property, Catalog, CatalogTheory, Property,
};
use peiffer_core::galois::{
    centralize, double_centralize, five_term, galois_group, hopf_h2, hopf_h3, is_central,
    is_central_via_huq, is_double_central, is_trivial_extension, relative_commutator,
    ExactnessStatus, HopfQuotient, ShortExactSequence,
};
use peiffer_core::pxmod::{peiffer_commutator, reflect_to_xmod};
use peiffer_core::{Error, Result};

use crate::document::{submodule, DocTheory, Loaded, SubSpec};
use crate::report::Report;

pub struct Options {
    pub witness: bool,
}

fn whole() -> SubSpec {
    SubSpec::Named("whole".into())
}

fn hopf_report<A: Ambient>(r: &mut Report, q: &HopfQuotient<A>, members: bool) {
    let x = q.numerator.ambient();
    r.subobject("numerator", &**x, q.numerator.carrier(), members);
    r.subobject("denominator", &**x, q.denominator.carrier(), members);
    r.object("quotient", &*q.quotient, members);
    r.caveat("closure_was_proper", q.closure_was_proper);
    r.caveat("projectivity_not_verified", q.projectivity_caveat);
}

pub fn run_task<A: DocTheory>(task: &str, doc: &Loaded<A>, opts: &Options) -> Result<Report> {
    let args = &doc.task.args;
    let w = opts.witness;
    let mut r = Report::new(task, A::THEORY);
    match task {
        "validate" => {
            for (name, o) in &doc.objects {
                r.object(&format!("object {name}"), &**o, w);
            }
            for (name, p) in &doc.pxmods {
                let crossed = p.is_crossed().crossed;
                r.check(&format!("pxmod {name}"), if crossed { "crossed module" } else { "precrossed module" });
            }
            for name in doc.morphisms.keys() {
                r.check(&format!("morphism {name}"), "valid");
            }
            for name in doc.squares.keys() {
                doc.square(Some(name))?;
                r.check(&format!("square {name}"), "double extension");
            }
            r.verdict = Some(true);
        }
        "crossed" => {
            let p = doc.pxmod(args.pxmod.as_ref())?;
            let v = p.is_crossed();
            r.verdict = Some(v.crossed);
            if let Some((x, y)) = v.witness {
                r.witness("x, y with action of boundary differing from conjugation", &**p.x(), &[x, y]);
            }
        }
        "peiffer" => {
            let p = doc.pxmod(args.pxmod.as_ref())?;
            let m = submodule(p, args.m.as_ref().unwrap_or(&whole()))?;
            let n = submodule(p, args.n.as_ref().unwrap_or(&whole()))?;
            let c = peiffer_commutator(p, &m, &n)?;
            r.subobject("M", &**p.x(), m.carrier(), w);
            r.subobject("N", &**p.x(), n.carrier(), w);
            r.subobject("peiffer commutator", &**p.x(), c.carrier(), w);
            r.check("normal", c.is_normal().to_string());
        }
        "reflect" => {
            let p = doc.pxmod(args.pxmod.as_ref())?;
            let refl = reflect_to_xmod(p)?;
            r.subobject("peiffer commutator", &**p.x(), refl.peiffer.carrier(), w);
            r.subobject("kernel", &**p.x(), refl.kernel.carrier(), w);
            r.object("crossed reflection", &**refl.xmod.x(), w);
            r.check("unit is iso", refl.unit.is_iso().to_string());
            r.caveat("closure_was_proper", refl.closure_was_proper);
        }
        "central" => {
            let f = doc.extension("extension", args.extension.as_ref())?;
            let c = is_central(&f)?;
            r.verdict = Some(c.verdict);
            r.subobject("kernel", &**f.source().x(), f.kernel().carrier(), w);
            r.subobject("obstruction", &**f.source().x(), c.obstruction.carrier(), w);
            if let (false, Some(e)) = (c.verdict, c.witness) {
                r.witness("nontrivial Peiffer element", &**f.source().x(), &[e]);
            }
        }
        "central-crosscheck" => {
            let f = doc.extension("extension", args.extension.as_ref())?;
            let peiffer = is_central(&f)?.verdict;
            let huq = is_central_via_huq(&f)?;
            r.check("peiffer criterion", central_word(peiffer));
            r.check("huq criterion", central_word(huq.verdict));
            let x1 = huq.with_domain.ambient();
            r.subobject("[K, K[d]]", &**x1, huq.with_domain.carrier(), w);
            r.subobject("[K, K[c]]", &**x1, huq.with_codomain.carrier(), w);
            r.verdict = Some(peiffer == huq.verdict);
        }
        "centralize" => {
            let f = doc.extension("extension", args.extension.as_ref())?;
            let c = centralize(&f)?;
            r.subobject("obstruction", &**f.source().x(), c.obstruction.carrier(), w);
            r.object("centralization", &**c.extension.source().x(), w);
            r.check("centralization is central", is_central(&c.extension)?.verdict.to_string());
            r.caveat("closure_was_proper", c.closure_was_proper);
        }
        "trivial" => {
            let f = doc.extension("extension", args.extension.as_ref())?;
            let t = is_trivial_extension(&f)?;
            r.verdict = Some(t.trivial);
            r.object("source", &**f.source().x(), w);
            r.object("pullback", &**t.pullback.module.x(), w);
            r.check("central", is_central(&f)?.verdict.to_string());
        }
        "double" => match doc.square(args.square.as_ref()) {
            Ok(s) => {
                r.verdict = Some(true);
                r.object("pullback", &**s.pullback.module.x(), w);
            }
            Err(Error::NotDouble(missed)) => {
                r.verdict = Some(false);
                r.check("comparison misses", missed);
            }
            Err(e) => return Err(e),
        },
        "double-central" => {
            let s = doc.square(args.square.as_ref())?;
            let d = is_double_central(&s)?;
            let x = s.top().x();
            r.verdict = Some(d.verdict);
            r.subobject("meet obstruction", &**x, d.meet_obstruction.carrier(), w);
            r.subobject("kernel obstruction", &**x, d.kernel_obstruction.carrier(), w);
            if !d.meet_obstruction.is_trivial() {
                if let Some(e) = d.meet_witness {
                    r.witness("nontrivial element of <K[f] ∧ K[g], X>", &**x, &[e]);
                }
            }
            if !d.kernel_obstruction.is_trivial() {
                if let Some(e) = d.kernel_witness {
                    r.witness("nontrivial element of <K[f], K[g]>", &**x, &[e]);
                }
            }
        }
        "double-centralize" => {
            let s = doc.square(args.square.as_ref())?;
            let d = double_centralize(&s)?;
            r.subobject("J", &**s.top().x(), d.join.carrier(), w);
            r.object("double centralization", &**d.square.top().x(), w);
            r.check("J within K[f] ∧ K[g]", d.join_within_meet.to_string());
            r.check("result is double central", is_double_central(&d.square)?.verdict.to_string());
            r.caveat("closure_was_proper", d.closure_was_proper);
        }
        "galois-group" => {
            let f = doc.extension("extension", args.extension.as_ref())?;
            hopf_report(&mut r, &galois_group(&f)?, w);
            r.caveats.remove("projectivity_not_verified");
        }
        "hopf2" => {
            let f = doc.extension("extension", args.extension.as_ref())?;
            hopf_report(&mut r, &hopf_h2(&f)?, w);
        }
        "hopf3" => {
            let s = doc.square(args.square.as_ref())?;
            hopf_report(&mut r, &hopf_h3(&s)?, w);
        }
        "five-term" => {
            let g = doc.extension("sequence", args.sequence.as_ref())?;
            let p = doc.extension("presentation", args.presentation.as_ref())?;
            let ses = ShortExactSequence::from_quotient(g.morphism().clone())?;
            let seq = five_term(&ses, &p)?;
            for (i, node) in seq.nodes.iter().enumerate() {
                r.object(&format!("node {}", i + 1), &**node.module().x(), w);
                r.caveat(&format!("node {} closure_was_proper", i + 1), node.closure_was_proper);
            }
            for (i, m) in seq.maps.iter().enumerate() {
                r.check(&format!("map {} -> {}", i + 1, i + 2), if m.is_some() { "defined" } else { "undefined" });
            }
            for (i, z) in seq.composites_zero.iter().enumerate() {
                r.check(&format!("composite at node {}", i + 2), if *z { "zero" } else { "nonzero" });
            }
            for (i, e) in seq.exactness.iter().enumerate() {
                let outcome = match e {
                    ExactnessStatus::Exact => "exact".to_string(),
                    ExactnessStatus::NotExact => "not exact".to_string(),
                    ExactnessStatus::NotChecked { reason } => format!("not checked ({reason})"),
                };
                r.check(&format!("exactness at node {}", i + 1), outcome);
            }
            r.caveat("projectivity_not_verified", true);
            r.verdict = Some(seq.all_checks_pass());
        }
        "relative-commutator" => {
            let p = doc.pxmod(args.pxmod.as_ref())?;
            let h = submodule(p, args.h.as_ref().unwrap_or(&whole()))?;
            let k = submodule(p, args.k.as_ref().unwrap_or(&whole()))?;
            let c = relative_commutator(p, &h, &k)?;
            r.subobject("commutator", &**p.x(), c.carrier(), w);
        }
        other => return Err(Error::BadSpec(format!("unknown task '{other}'"))),
    }
    Ok(r)
}

fn central_word(v: bool) -> &'static str {
    if v {
        "central"
    } else {
        "not central"
    }
}

pub fn run_enumerate<A: CatalogTheory>(seed: u64, bound: u64, labels: bool) -> Result<Report> {
    let catalog = Catalog::<A>::builtin(seed);
    let px = enumerate_pxmods(&catalog, bound)?;
    let exts = enumerate_quotient_extensions(&px)?;
    let squares = enumerate_double_extensions(&px)?;
    let mut r = Report::new("enumerate", A::THEORY);
    r.counts.insert("catalog objects".into(), catalog.objects.len() as u64);
    r.counts.insert("bound".into(), bound);
    r.counts.insert("pxmods".into(), px.len() as u64);
    r.counts.insert("extensions".into(), exts.len() as u64);
    r.counts.insert("double extensions".into(), squares.len() as u64);
    if labels {
        for l in px.iter() {
            r.check("pxmod", l.label.clone());
        }
    }
    Ok(r)
}

pub fn run_verify<A: CatalogTheory>(
    seed: u64,
    bound: u64,
    properties: &[Property],
    timing: bool,
) -> Result<Report> {
    let catalog = Catalog::<A>::builtin(seed);
    let mut r = Report::new("verify", A::THEORY);
    for &p in properties {
        let mut rep = verify_property(&catalog, p, bound)?;
        if !timing {
            rep.elapsed_ms = None;
        }
        r.properties.push(rep);
    }
    r.verdict = Some(r.properties.iter().all(|p| p.holds()));
    Ok(r)
}
