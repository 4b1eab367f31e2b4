//! Algebraic laws checked on randomly chosen catalog objects and instances.

use std::sync::OnceLock;

use peiffer_core::ambient::{Ambient, FiniteGroup, Hom, LieAlgebra};
use peiffer_core::enumerate::{
    enumerate_pxmods, quotient_kernels, stable_subobjects, verify_property, Catalog, Property,
    DEFAULT_SEED,
};
use peiffer_core::pxmod::{make_pxmod, peiffer_commutator, quotient_pxmod, PXSubmodule, PrecrossedModule};
use proptest::prelude::*;

fn groups() -> &'static Catalog<FiniteGroup> {
    static C: OnceLock<Catalog<FiniteGroup>> = OnceLock::new();
    C.get_or_init(|| Catalog::builtin(DEFAULT_SEED))
}

fn lies() -> &'static Catalog<LieAlgebra> {
    static C: OnceLock<Catalog<LieAlgebra>> = OnceLock::new();
    C.get_or_init(|| Catalog::builtin(DEFAULT_SEED))
}

fn group_modules() -> &'static [PrecrossedModule<FiniteGroup>] {
    static S: OnceLock<Vec<PrecrossedModule<FiniteGroup>>> = OnceLock::new();
    S.get_or_init(|| {
        enumerate_pxmods(groups(), 24)
            .unwrap()
            .iter()
            .map(|l| l.value.clone())
            .collect()
    })
}

fn lie_modules() -> &'static [PrecrossedModule<LieAlgebra>] {
    static S: OnceLock<Vec<PrecrossedModule<LieAlgebra>>> = OnceLock::new();
    S.get_or_init(|| {
        enumerate_pxmods(lies(), 27)
            .unwrap()
            .iter()
            .map(|l| l.value.clone())
            .collect()
    })
}

fn pick<T>(items: &[T], i: usize) -> &T {
    &items[i % items.len()]
}

/// `⟨M, N⟩ = ⟨N, M⟩ ⊆ M ∨ N`, and the quotient by any kernel has the
/// expected size with the kernel as the kernel of its projection.
fn module_laws<A: Ambient>(p: &PrecrossedModule<A>, i: usize, j: usize, k: usize) -> Result<(), TestCaseError> {
    let subs = stable_subobjects(p);
    let (m, n) = (pick(&subs, i), pick(&subs, j));
    let mn = peiffer_commutator(p, m, n).unwrap();
    let nm = peiffer_commutator(p, n, m).unwrap();
    prop_assert_eq!(mn.carrier(), nm.carrier());
    prop_assert!(mn.is_subset_of(&m.join(n).unwrap()).unwrap());
    prop_assert!(peiffer_commutator(p, m, &p.trivial()).unwrap().is_trivial());

    let kernels = quotient_kernels(p);
    let kernel = pick(&kernels, k);
    let q = quotient_pxmod(kernel).unwrap();
    prop_assert_eq!(q.module.x().size() * kernel.order(), p.x().size());
    let projected_kernel = q.projection.kernel();
    prop_assert_eq!(projected_kernel.carrier(), kernel.carrier());
    let back = PXSubmodule::preimage_under(&q.projection, &m.image_under(&q.projection).unwrap()).unwrap();
    let joined = m.join(kernel).unwrap();
    prop_assert_eq!(back.carrier(), joined.carrier());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn group_tables_are_groups(g in 0usize..64, a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let (_, g) = pick(&groups().objects, g);
        let n = g.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), 0);
        prop_assert_eq!(g.mul(0, a), a);
    }

    #[test]
    fn closures_are_subgroups(g in 0usize..64, gens in prop::collection::vec(0usize..64, 0..3)) {
        let (_, g) = pick(&groups().objects, g);
        let gens: Vec<usize> = gens.iter().map(|x| x % g.order()).collect();
        let s = g.closure(&gens, false);
        let ns = g.closure(&gens, true);
        prop_assert!(gens.iter().all(|x| s.contains(*x)));
        prop_assert_eq!(g.order() % s.len(), 0);
        prop_assert_eq!(g.closure(&s.elements(), false), s.clone());
        prop_assert!(g.is_subset(&s, &ns));
        prop_assert!(g.is_normal(&ns));
        prop_assert_eq!(g.normal_closure(&s), ns);
    }

    #[test]
    fn subgroup_lattice_laws(g in 0usize..64, a in 0usize..64, b in 0usize..64) {
        let (_, g) = pick(&groups().objects, g);
        let n = g.order();
        let (s, t) = (g.closure(&[a % n], false), g.closure(&[b % n], false));
        let meet = g.meet(&s, &t);
        let join = g.join(&s, &t);
        prop_assert!(g.is_subset(&meet, &s) && g.is_subset(&meet, &t));
        prop_assert!(g.is_subset(&s, &join) && g.is_subset(&t, &join));
        prop_assert_eq!(g.join(&s, &meet), s.clone());
        prop_assert_eq!(g.meet(&s, &join), s);
    }

    #[test]
    fn lie_brackets_are_alternating_and_satisfy_jacobi(l in 0usize..64, x in 0usize..1000, y in 0usize..1000, z in 0usize..1000) {
        let (_, l) = pick(&lies().objects, l);
        let els = l.elements();
        let (x, y, z) = (pick(&els, x), pick(&els, y), pick(&els, z));
        prop_assert!(l.is_zero(&l.bracket(x, x)));
        prop_assert_eq!(l.bracket(x, y), l.neg(&l.bracket(y, x)));
        let jacobi = l.op(
            &l.op(&l.bracket(x, &l.bracket(y, z)), &l.bracket(y, &l.bracket(z, x))),
            &l.bracket(z, &l.bracket(x, y)),
        );
        prop_assert!(l.is_zero(&jacobi));
    }

    #[test]
    fn homomorphism_composition_is_associative(a in 0usize..64, b in 0usize..64, i in 0usize..64, j in 0usize..64) {
        let (_, x) = pick(&groups().objects[..9], a);
        let (_, y) = pick(&groups().objects[..9], b);
        let fs = FiniteGroup::all_maps(x, y);
        let gs = FiniteGroup::all_maps(y, x);
        let f = Hom::new(x.clone(), y.clone(), pick(&fs, i).clone()).unwrap();
        let g = Hom::new(y.clone(), x.clone(), pick(&gs, j).clone()).unwrap();
        let left = f.compose(&g).unwrap().compose(&f).unwrap();
        let right = f.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert!(left.same_map(&right));
        prop_assert_eq!(f.image().len() * f.kernel().len(), x.order());
    }

    #[test]
    fn group_module_laws(p in 0usize..100_000, i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        module_laws(pick(group_modules(), p), i, j, k)?;
    }

    #[test]
    fn lie_module_laws(p in 0usize..100_000, i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        module_laws(pick(lie_modules(), p), i, j, k)?;
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_pxmods(groups(), 16).unwrap();
    let b = enumerate_pxmods(groups(), 16).unwrap();
    let la: Vec<&str> = a.iter().map(|l| l.label.as_str()).collect();
    let lb: Vec<&str> = b.iter().map(|l| l.label.as_str()).collect();
    assert_eq!(la, lb);
    for (x, y) in a.iter().zip(b.iter()) {
        assert_eq!(x.value.boundary(), y.value.boundary());
        assert_eq!(x.value.action(), y.value.action());
    }
}

#[test]
fn reports_repeat_with_timing_masked() {
    let catalog = Catalog::<FiniteGroup>::builtin(7);
    let run = || {
        let mut r = verify_property(&catalog, Property::PeifferImagePreservation, 12).unwrap();
        r.elapsed_ms = None;
        serde_json::to_string(&r).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn empty_catalog_passes_vacuously() {
    let catalog = Catalog::<FiniteGroup> {
        objects: Vec::new(),
        seed: DEFAULT_SEED,
    };
    let r = verify_property(&catalog, Property::MainTheoremEquivalence, 48).unwrap();
    assert_eq!((r.instances, r.failed), (0, 0));
    assert!(r.holds());
}

#[test]
fn every_generated_module_validates() {
    let stream = enumerate_pxmods(groups(), 48).unwrap();
    assert!(!stream.is_empty());
    for l in stream.iter() {
        let p = &l.value;
        assert!(make_pxmod(p.boundary().clone(), p.action().clone()).is_ok(), "{}", l.label);
    }
}
