//! Named invariants evaluated over generated instance streams.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    enumerate_double_extensions, enumerate_five_term_inputs, enumerate_quotient_extensions,
    enumerate_pxmods, quotient_kernels, stable_subobjects, Catalog, CatalogTheory, Labelled,
};
use crate::ambient::{huq_carrier, Ambient, Hom, Theory};
use crate::error::{Error, Result};
use crate::galois::{
    centralize, double_centralize, five_term, galois_group, galois_group_via_unit,
    is_central, is_central_via_huq, is_double_central, is_trivial_extension, pullback,
    relative_commutator,
    DoubleExtension, Extension, FiveTermSequence, ShortExactSequence,
};
use crate::pxmod::{
    graph_isomorphism, normalize, peiffer_commutator, quotient_pxmod, reflect_to_xmod,
    rg_reflection, to_reflexive_graph, PXMorphism, PXSubmodule,
    PrecrossedModule,
};

/// Number of seeded random quotients for image preservation.
pub const IMAGE_SAMPLES: usize = 256;
/// Central extensions sampled per source extension for the universal
/// property of the centralization, and surjections per extension for
/// pullback stability.
const PARTNER_SAMPLES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    MainTheoremEquivalence,
    ReflectionCorrespondence,
    CrossedIffTrivialPeiffer,
    PeifferMonotone,
    PeifferImagePreservation,
    PeifferLemmaNormal,
    PeifferHuqNormal,
    CentralizeCentral,
    CentralizeUniversal,
    DoubleCentralize,
    DoubleTranspose,
    TrivialImpliesCentral,
    PullbackStability,
    FiveTerm,
    NormalizeRoundtrip,
    GaloisGroupKernel,
}

impl Property {
    pub const ALL: [Property; 16] = [
        Property::MainTheoremEquivalence,
        Property::ReflectionCorrespondence,
        Property::CrossedIffTrivialPeiffer,
        Property::PeifferMonotone,
        Property::PeifferImagePreservation,
        Property::PeifferLemmaNormal,
        Property::PeifferHuqNormal,
        Property::CentralizeCentral,
        Property::CentralizeUniversal,
        Property::DoubleCentralize,
        Property::DoubleTranspose,
        Property::TrivialImpliesCentral,
        Property::PullbackStability,
        Property::FiveTerm,
        Property::NormalizeRoundtrip,
        Property::GaloisGroupKernel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::MainTheoremEquivalence => "main-theorem-equivalence",
            Property::ReflectionCorrespondence => "reflection-correspondence",
            Property::CrossedIffTrivialPeiffer => "crossed-iff-trivial-peiffer",
            Property::PeifferMonotone => "peiffer-monotone",
            Property::PeifferImagePreservation => "peiffer-image-preservation",
            Property::PeifferLemmaNormal => "peiffer-lemma-normal",
            Property::PeifferHuqNormal => "peiffer-huq-normal",
            Property::CentralizeCentral => "centralize-central",
            Property::CentralizeUniversal => "centralize-universal",
            Property::DoubleCentralize => "double-centralize",
            Property::DoubleTranspose => "double-transpose",
            Property::TrivialImpliesCentral => "trivial-implies-central",
            Property::PullbackStability => "pullback-stability",
            Property::FiveTerm => "five-term",
            Property::NormalizeRoundtrip => "normalize-roundtrip",
            Property::GaloisGroupKernel => "galois-group-kernel",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

/// First failing instance, enough to regenerate it from the same
/// catalog, bound and seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureWitness {
    pub index: u64,
    pub label: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: String,
    pub theory: Theory,
    pub bound: u64,
    pub seed: u64,
    pub instances: u64,
    pub passed: u64,
    pub failed: u64,
    pub first_failure: Option<FailureWitness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        self.failed == 0
    }
}

type Outcome = Result<Option<String>>;

fn run<T: Sync>(items: &[Labelled<T>], check: impl Fn(&T) -> Outcome + Sync) -> (u64, u64, Option<FailureWitness>) {
    let outcomes: Vec<Option<String>> = items
        .par_iter()
        .map(|l| match check(&l.value) {
            Ok(r) => r,
            Err(e) => Some(format!("error: {e}")),
        })
        .collect();
    let mut passed = 0;
    let mut failed = 0;
    let mut first = None;
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            None => passed += 1,
            Some(detail) => {
                failed += 1;
                if first.is_none() {
                    first = Some(FailureWitness {
                        index: i as u64,
                        label: items[i].label.clone(),
                        detail,
                    });
                }
            }
        }
    }
    (passed, failed, first)
}

fn fail(cond: bool, detail: impl FnOnce() -> String) -> Option<String> {
    if cond {
        None
    } else {
        Some(detail())
    }
}

/// Runs one named property over the catalog instances with `|X|·|B| ≤ bound`.
pub fn verify_property<A: CatalogTheory>(
    catalog: &Catalog<A>,
    property: Property,
    bound: u64,
) -> Result<PropertyReport> {
    let start = Instant::now();
    let pxmods = enumerate_pxmods(catalog, bound)?;
    let px = &pxmods.items;
    let seed = catalog.seed;
    let (passed, failed, first_failure) = match property {
        Property::MainTheoremEquivalence => {
            run(&enumerate_quotient_extensions(&pxmods)?.items, check_main_theorem)
        }
        Property::ReflectionCorrespondence => run(px, check_reflection_correspondence),
        Property::CrossedIffTrivialPeiffer => run(px, check_crossed_iff),
        Property::PeifferMonotone => run(px, check_monotone),
        Property::PeifferImagePreservation => {
            run(&image_samples(px, seed), check_image_preservation)
        }
        Property::PeifferLemmaNormal => run(px, check_lemma_normal),
        Property::PeifferHuqNormal => run(px, check_huq_normal),
        Property::CentralizeCentral => {
            run(&enumerate_quotient_extensions(&pxmods)?.items, check_centralize)
        }
        Property::CentralizeUniversal => {
            let exts = enumerate_quotient_extensions(&pxmods)?;
            run(&universal_instances(&exts.items, seed)?, check_universal)
        }
        Property::DoubleCentralize => {
            run(&enumerate_double_extensions(&pxmods)?.items, check_double_centralize)
        }
        Property::DoubleTranspose => {
            run(&enumerate_double_extensions(&pxmods)?.items, check_double_transpose)
        }
        Property::TrivialImpliesCentral => {
            run(&enumerate_quotient_extensions(&pxmods)?.items, check_trivial_central)
        }
        Property::PullbackStability => {
            run(&pullback_instances(px, seed)?, check_pullback_stability)
        }
        Property::FiveTerm => {
            let exts = enumerate_quotient_extensions(&pxmods)?;
            run(&enumerate_five_term_inputs(&exts)?.items, check_five_term)
        }
        Property::NormalizeRoundtrip => run(px, check_normalize_roundtrip),
        Property::GaloisGroupKernel => {
            let exts = enumerate_quotient_extensions(&pxmods)?;
            let central: Vec<Labelled<Extension<A>>> = exts
                .items
                .into_par_iter()
                .filter(|l| is_central(&l.value).map(|r| r.verdict).unwrap_or(true))
                .collect();
            run(&central, check_galois_kernel)
        }
    };
    Ok(PropertyReport {
        property: property.name().to_string(),
        theory: A::THEORY,
        bound,
        seed,
        instances: passed + failed,
        passed,
        failed,
        first_failure,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}

fn check_main_theorem<A: Ambient>(f: &Extension<A>) -> Outcome {
    let peiffer = is_central(f)?.verdict;
    let huq = is_central_via_huq(f)?.verdict;
    Ok(fail(peiffer == huq, || {
        format!("Peiffer criterion says central = {peiffer}, Huq criterion says {huq}")
    }))
}

fn check_reflection_correspondence<A: Ambient>(p: &PrecrossedModule<A>) -> Outcome {
    let (g, sd) = to_reflexive_graph(p)?;
    let gr = rg_reflection(&g);
    let r = reflect_to_xmod(p)?;
    let (g2, sd2) = to_reflexive_graph(&r.xmod)?;
    let phi = |e: &A::Elem| {
        let (x, b) = sd.split(e);
        sd2.pair(&r.unit.apply(&x), &b)
    };
    let psi = match Hom::from_fn(gr.graph.x1.clone(), g2.x1.clone(), |q| phi(&gr.lift(q))) {
        Ok(h) => h,
        Err(e) => return Ok(Some(format!("induced comparison is not a homomorphism: {e}"))),
    };
    for e in g.x1.spanning() {
        if psi.apply(&gr.projection.apply(&e)) != phi(&e) {
            return Ok(Some("comparison does not factor the canonical map".into()));
        }
    }
    Ok(graph_isomorphism(&gr.graph, &g2, &psi).err())
}

fn check_crossed_iff<A: Ambient>(p: &PrecrossedModule<A>) -> Outcome {
    let crossed = p.is_crossed().crossed;
    let trivial = peiffer_commutator(p, &p.whole(), &p.whole())?.is_trivial();
    if crossed != trivial {
        return Ok(Some(format!(
            "is_crossed = {crossed} but Peiffer commutator trivial = {trivial}"
        )));
    }
    let reflected = reflect_to_xmod(p)?.xmod.is_crossed().crossed;
    Ok(fail(reflected, || "reflection output is not crossed".into()))
}

fn check_monotone<A: Ambient>(p: &PrecrossedModule<A>) -> Outcome {
    let subs = stable_subobjects(p);
    let x = p.x();
    let mut table = Vec::with_capacity(subs.len());
    for m in &subs {
        let mut row = Vec::with_capacity(subs.len());
        for n in &subs {
            row.push(peiffer_commutator(p, m, n)?.carrier().clone());
        }
        table.push(row);
    }
    for (i, small) in subs.iter().enumerate() {
        for (k, big) in subs.iter().enumerate() {
            if i == k || !small.is_subset_of(big)? {
                continue;
            }
            for j in 0..subs.len() {
                if !x.is_subset(&table[i][j], &table[k][j]) || !x.is_subset(&table[j][i], &table[j][k]) {
                    return Ok(Some(format!(
                        "monotonicity fails for submodules {i} ≤ {k} against {j}"
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// `(module, quotient kernel, M, N)` chosen by a seeded generator.
type ImageSample<A> = (PrecrossedModule<A>, PXSubmodule<A>, PXSubmodule<A>, PXSubmodule<A>);

fn image_samples<A: Ambient>(px: &[Labelled<PrecrossedModule<A>>], seed: u64) -> Vec<Labelled<ImageSample<A>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(IMAGE_SAMPLES);
    if px.is_empty() {
        return out;
    }
    while out.len() < IMAGE_SAMPLES {
        let i = rng.gen_range(0..px.len());
        let p = &px[i].value;
        let kernels = quotient_kernels(p);
        let subs = stable_subobjects(p);
        let (Some(n), Some(a), Some(b)) = (
            kernels.choose(&mut rng),
            subs.choose(&mut rng),
            subs.choose(&mut rng),
        ) else {
            continue;
        };
        out.push(Labelled {
            label: format!(
                "sample {} on #{i} ({}), quotient of order {}, M order {}, N order {}",
                out.len(),
                px[i].label,
                n.order(),
                a.order(),
                b.order()
            ),
            value: (p.clone(), n.clone(), a.clone(), b.clone()),
        });
    }
    out
}

fn check_image_preservation<A: Ambient>(s: &ImageSample<A>) -> Outcome {
    let (p, n, m, k) = s;
    let q = quotient_pxmod(n)?;
    let lhs = peiffer_commutator(p, m, k)?.image_under(&q.projection)?;
    let qm = m.image_under(&q.projection)?;
    let qk = k.image_under(&q.projection)?;
    let rhs = peiffer_commutator(&q.module, &qm, &qk)?;
    Ok(fail(lhs.carrier() == rhs.carrier(), || {
        format!(
            "q(⟨M, N⟩) has order {}, ⟨qM, qN⟩ has order {}",
            lhs.order(),
            rhs.order()
        )
    }))
}

fn check_lemma_normal<A: Ambient>(p: &PrecrossedModule<A>) -> Outcome {
    let whole = p.whole();
    for (i, k) in quotient_kernels(p).iter().enumerate() {
        let c = peiffer_commutator(p, &whole, k)?;
        if !c.is_subset_of(k)? {
            return Ok(Some(format!("⟨X, K⟩ ⊄ K for kernel {i}")));
        }
    }
    Ok(None)
}

fn check_huq_normal<A: Ambient>(p: &PrecrossedModule<A>) -> Outcome {
    let kernels = quotient_kernels(p);
    let x = p.x();
    for (i, h) in kernels.iter().enumerate() {
        for (j, k) in kernels.iter().enumerate() {
            let huq = relative_commutator(p, h, k)?;
            if huq.carrier() != &huq_carrier(&**x, h.carrier(), k.carrier()) {
                return Ok(Some(format!("kernels {i}, {j}: unexpected Huq carrier")));
            }
            if huq_carrier(&**x, h.carrier(), k.carrier()) != huq_carrier(&**x, k.carrier(), h.carrier()) {
                return Ok(Some(format!("Huq commutator not symmetric for kernels {i}, {j}")));
            }
        }
    }
    Ok(None)
}

fn check_centralize<A: Ambient>(f: &Extension<A>) -> Outcome {
    let c = centralize(f)?;
    if !is_central(&c.extension)?.verdict {
        return Ok(Some("centralization is not central".into()));
    }
    let again = centralize(&c.extension)?;
    if !again.unit().is_iso() {
        return Ok(Some("centralization is not idempotent".into()));
    }
    if is_central(f)?.verdict && !c.unit().is_iso() {
        return Ok(Some("centralizing a central extension changed it".into()));
    }
    Ok(None)
}

type UniversalInstance<A> = (Extension<A>, Extension<A>);

fn universal_instances<A: Ambient>(
    exts: &[Labelled<Extension<A>>],
    seed: u64,
) -> Result<Vec<Labelled<UniversalInstance<A>>>> {
    let central: Vec<bool> = exts
        .par_iter()
        .map(|l| is_central(&l.value).map(|r| r.verdict))
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x11);
    let mut out = Vec::new();
    for (i, f) in exts.iter().enumerate() {
        let partners: Vec<usize> = (0..exts.len())
            .filter(|&j| central[j] && exts[j].value.source().b() == f.value.source().b())
            .collect();
        for &j in partners.choose_multiple(&mut rng, PARTNER_SAMPLES) {
            out.push(Labelled {
                label: format!("extension #{i} into central #{j}"),
                value: (f.value.clone(), exts[j].value.clone()),
            });
        }
    }
    Ok(out)
}

/// Every morphism of extensions `f → g` factors uniquely through the
/// centralization of `f` when `g` is central.
fn check_universal<A: Ambient>(inst: &UniversalInstance<A>) -> Outcome {
    let (f, g) = inst;
    let c = centralize(f)?;
    let unit = c.unit();
    let candidates = PXMorphism::all(c.extension.source(), g.source());
    for (k, h) in PXMorphism::all(f.source(), g.source()).iter().enumerate() {
        if !f.kernel().image_under(h)?.is_subset_of(g.kernel())? {
            continue;
        }
        let factored = match c.factor(h) {
            Ok(m) => m,
            Err(e) => return Ok(Some(format!("morphism {k} does not factor: {e}"))),
        };
        if !factored.compose(unit)?.map().same_map(h.map()) {
            return Ok(Some(format!("factorization of morphism {k} does not commute")));
        }
        let count = candidates
            .iter()
            .filter(|m| m.compose(unit).map(|c| c.map().same_map(h.map())).unwrap_or(false))
            .count();
        if count != 1 {
            return Ok(Some(format!("morphism {k} has {count} factorizations")));
        }
    }
    Ok(None)
}

fn check_double_centralize<A: Ambient>(s: &DoubleExtension<A>) -> Outcome {
    let dc = double_centralize(s)?;
    if !dc.join_within_meet {
        return Ok(Some("J ⊄ K[f] ∧ K[g]".into()));
    }
    Ok(fail(is_double_central(&dc.square)?.verdict, || {
        "double centralization is not double central".into()
    }))
}

fn check_double_transpose<A: Ambient>(s: &DoubleExtension<A>) -> Outcome {
    let a = is_double_central(s)?.verdict;
    let b = is_double_central(&s.transpose()?)?.verdict;
    Ok(fail(a == b, || format!("square: {a}, transposed square: {b}")))
}

fn check_trivial_central<A: Ambient>(f: &Extension<A>) -> Outcome {
    let trivial = is_trivial_extension(f)?.trivial;
    Ok(fail(!trivial || is_central(f)?.verdict, || {
        "trivial extension is not central".into()
    }))
}

/// For kernels `N₁ ⊆ N₂` of one module, the quotient `f: X ↠ X/N₂` paired
/// with the induced surjection `g: X/N₁ ↠ X/N₂`; at most three seeded
/// choices of `N₁` per `f`.
fn pullback_instances<A: Ambient>(
    px: &[Labelled<PrecrossedModule<A>>],
    seed: u64,
) -> Result<Vec<Labelled<(Extension<A>, Extension<A>)>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x22);
    let mut out = Vec::new();
    for (i, inst) in px.iter().enumerate() {
        let kernels = quotient_kernels(&inst.value);
        for (b, big) in kernels.iter().enumerate() {
            let mut below = Vec::new();
            for (a, small) in kernels.iter().enumerate() {
                if small.is_subset_of(big)? {
                    below.push(a);
                }
            }
            let chosen: Vec<usize> = below.choose_multiple(&mut rng, PARTNER_SAMPLES).copied().collect();
            if chosen.is_empty() {
                continue;
            }
            let q = quotient_pxmod(big)?;
            let f = Extension::new(q.projection.clone())?;
            for a in chosen {
                let g = Extension::new(quotient_pxmod(&kernels[a])?.factor(&q.projection)?)?;
                out.push(Labelled {
                    label: format!("#{i} ({}): X/kernel {b} pulled back along X/kernel {a}", inst.label),
                    value: (f.clone(), g),
                });
            }
        }
    }
    Ok(out)
}

fn check_pullback_stability<A: Ambient>(inst: &(Extension<A>, Extension<A>)) -> Outcome {
    let (f, g) = inst;
    let pb = pullback(f.morphism(), g.morphism())?;
    let pulled = Extension::new(pb.second)?;
    let a = is_central(f)?.verdict;
    let b = is_central(&pulled)?.verdict;
    Ok(fail(a == b, || format!("f central = {a}, pullback central = {b}")))
}

fn check_five_term<A: Ambient>(inst: &(ShortExactSequence<A>, Extension<A>)) -> Outcome {
    let s: FiveTermSequence<A> = five_term(&inst.0, &inst.1)?;
    if s.all_checks_pass() {
        return Ok(None);
    }
    Ok(Some(format!(
        "maps defined: {:?}, composites zero: {:?}, exactness: {:?}",
        s.maps.iter().map(Option::is_some).collect::<Vec<_>>(),
        s.composites_zero,
        s.exactness
    )))
}

fn check_normalize_roundtrip<A: Ambient>(p: &PrecrossedModule<A>) -> Outcome {
    let (g, sd) = to_reflexive_graph(p)?;
    let (q, incl) = normalize(&g)?;
    let map = Hom::from_fn(p.x().clone(), q.x().clone(), |x| {
        incl.lift(&sd.injection.apply(x)).expect("j_X lands in K[d]")
    })?;
    let iso = match PXMorphism::new(p.clone(), q, map) {
        Ok(m) => m,
        Err(e) => return Ok(Some(e.to_string())),
    };
    Ok(fail(iso.is_iso(), || "comparison with the normalization is not bijective".into()))
}

fn check_galois_kernel<A: Ambient>(f: &Extension<A>) -> Outcome {
    let gal = galois_group(f)?;
    let via_unit = galois_group_via_unit(f)?;
    Ok(fail(gal.numerator.carrier() == via_unit.carrier(), || {
        format!(
            "K[f] ∧ ⟨X, X⟩ has order {}, K[η ∘ ker f] has order {}",
            gal.order,
            via_unit.order()
        )
    }))
}
