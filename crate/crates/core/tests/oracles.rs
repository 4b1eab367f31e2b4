//! Concrete values checked against the brute-force references in `common`.

mod common;

use std::sync::Arc;

use common::{intersect, s3, sign, Table};
use peiffer_core::ambient::{
    generated_subobject, hom_image_kernel, lattice, quotient_by, semidirect_product, Action,
    Ambient, ElementRepr, FiniteGroup, GroupSpec, Hom, LatticeOp, LieAlgebra, Subobject,
};
use peiffer_core::enumerate::{enumerate_extensions, enumerate_pxmods, lie_from, Catalog, DEFAULT_SEED};
use peiffer_core::galois::{
    centralize, double_centralize, five_term, galois_group, hopf_h2, hopf_h3, is_central,
    is_central_via_huq, is_double_central, is_trivial_extension, make_double_extension,
    relative_commutator, DoubleExtension, ExactnessStatus, Extension, ShortExactSequence,
};
use peiffer_core::pxmod::{
    peiffer_commutator, quotient_pxmod, reflect_to_xmod, rg_reflection, to_reflexive_graph,
    PXSubmodule, PrecrossedModule,
};
use peiffer_core::Error;

fn group(t: &Table) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::from_table(&t.rows).unwrap())
}

fn over_zero(g: &Arc<FiniteGroup>) -> PrecrossedModule<FiniteGroup> {
    let zero = Arc::new(FiniteGroup::trivial());
    PrecrossedModule::with_zero_boundary(Action::trivial(&zero, g))
}

fn quotient_ext(p: &PrecrossedModule<FiniteGroup>, gens: &[usize]) -> Extension<FiniteGroup> {
    let n = PXSubmodule::generated(p, gens, true);
    Extension::new(quotient_pxmod(&n).unwrap().projection).unwrap()
}

fn members(s: &PXSubmodule<FiniteGroup>) -> Vec<usize> {
    let mut m = s.members();
    m.sort();
    m
}

/// Index of the 3-cycle `0 → 1 → 2 → 0` and of a transposition in the oracle listing.
fn s3_with_elements() -> (Table, Arc<FiniteGroup>, usize, usize) {
    let (t, elems) = s3();
    let rot = elems.iter().position(|p| p == &vec![1, 2, 0]).unwrap();
    let swap = elems.iter().position(|p| p == &vec![1, 0, 2]).unwrap();
    let g = group(&t);
    (t, g, rot, swap)
}

#[test]
fn permutation_closure_matches_reference_order() {
    let g = FiniteGroup::build(&GroupSpec::Permutations(vec![vec![1, 0, 2], vec![1, 2, 0]])).unwrap();
    assert_eq!(g.order(), s3().0.order());
    assert_eq!(g.order(), 6);
    assert!(!g.is_abelian());
    assert_eq!(FiniteGroup::build(&GroupSpec::Table(Table::cyclic(4).rows)).unwrap().order(), 4);
}

#[test]
fn table_without_inverse_is_rejected() {
    let err = FiniteGroup::from_table(&[vec![0, 0], vec![0, 0]]).unwrap_err();
    assert!(matches!(err, Error::AxiomViolation(_)));
}

#[test]
fn generated_subgroups_agree_with_subset_enumeration() {
    let (t, g, _, swap) = s3_with_elements();
    let plain = generated_subobject(&g, &[swap], false).unwrap();
    assert_eq!(plain.order() as usize, t.generated(&[swap], false).len());
    assert_eq!(plain.order(), 2);
    let normal = generated_subobject(&g, &[swap], true).unwrap();
    assert_eq!(normal.order() as usize, t.generated(&[swap], true).len());
    assert_eq!(normal.order(), 6);
    assert!(generated_subobject(&g, &[], false).unwrap().is_trivial());
}

#[test]
fn quotients_of_s3() {
    let (t, g, rot, swap) = s3_with_elements();
    let a3 = generated_subobject(&g, &[rot], false).unwrap();
    let (q, proj) = quotient_by(&g, &a3).unwrap();
    assert_eq!(q.size() as usize, t.order() / t.generated(&[rot], false).len());
    assert!(proj.is_surjective());
    let not_normal = generated_subobject(&g, &[swap], false).unwrap();
    assert!(matches!(quotient_by(&g, &not_normal), Err(Error::NotNormal(_))));
    let (same, iso) = quotient_by(&g, &Subobject::new(g.clone(), g.trivial())).unwrap();
    assert_eq!(same.size(), 6);
    assert!(iso.is_injective() && iso.is_surjective());
}

#[test]
fn lattice_of_klein_four() {
    let t = Table::cyclic(2).product(&Table::cyclic(2));
    let g = group(&t);
    // (1, 0) has index 2 and (0, 1) has index 1.
    let a = generated_subobject(&g, &[2], false).unwrap();
    let b = generated_subobject(&g, &[1], false).unwrap();
    assert_eq!(lattice(&g, &a, &a, LatticeOp::Meet).unwrap().carrier(), a.carrier());
    let meet = lattice(&g, &a, &b, LatticeOp::Meet).unwrap();
    assert_eq!(meet.order() as usize, intersect(&t.generated(&[2], false), &t.generated(&[1], false)).len());
    assert!(meet.is_trivial());
    assert!(lattice(&g, &a, &b, LatticeOp::Join).unwrap().is_whole());
}

#[test]
fn sign_map_has_alternating_kernel() {
    let (t, elems) = s3();
    let g = group(&t);
    let z2 = Arc::new(FiniteGroup::cyclic(2));
    let sgn = Hom::from_fn(g.clone(), z2, |&x| sign(&elems[x])).unwrap();
    let (image, kernel) = hom_image_kernel(&sgn);
    assert!(image.is_whole());
    let expected = (0..6).filter(|&x| sign(&elems[x]) == 0).count();
    assert_eq!(kernel.order() as usize, expected);
    assert_eq!(kernel.order(), 3);
    let (image, kernel) = hom_image_kernel(&Hom::identity(&g));
    assert!(image.is_whole() && kernel.is_trivial());
}

#[test]
fn zero_lie_map_has_whole_kernel() {
    let l = Arc::new(LieAlgebra::build(&lie_from(3, 2, &[(0, 1, vec![0, 1])])).unwrap());
    let (image, kernel) = hom_image_kernel(&Hom::zero(&l, &l));
    assert!(image.is_trivial() && kernel.is_whole());
}

#[test]
fn inversion_semidirect_product_is_s3() {
    let z3 = Arc::new(FiniteGroup::cyclic(3));
    let z2 = Arc::new(FiniteGroup::cyclic(2));
    let inv = Action::from_fn(z2.clone(), z3.clone(), |&b, &x| if b == 0 { x } else { (3 - x) % 3 }).unwrap();
    let sd = semidirect_product(&z3, &z2, &inv).unwrap();
    let (t, _) = s3();
    let s = FiniteGroup::from_table(&t.rows).unwrap();
    assert_eq!(sd.object.order(), 6);
    assert!(!sd.object.is_abelian());
    assert_eq!(sd.object.conjugacy_class_sizes(), s.conjugacy_class_sizes());
    assert_eq!(sd.projection.kernel(), sd.injection.image());
    for b in 0..2 {
        assert_eq!(sd.projection.apply(&sd.section.apply(&b)), b);
    }
    let direct = semidirect_product(&z3, &z2, &Action::trivial(&z2, &z3)).unwrap();
    assert_eq!(direct.object.order(), 6);
    assert!(direct.object.is_abelian());
}

#[test]
fn peiffer_commutator_of_s3_over_zero_is_derived_subgroup() {
    let (t, g, _, _) = s3_with_elements();
    let p = over_zero(&g);
    let pc = peiffer_commutator(&p, &p.whole(), &p.whole()).unwrap();
    let reference = t.commutator_subgroup(&t.everything(), &t.everything());
    assert_eq!(members(&pc), reference);
    assert_eq!(pc.order(), 3);
    let r = reflect_to_xmod(&p).unwrap();
    assert_eq!(r.xmod.x().size() as usize, t.order() / reference.len());
    assert!(r.xmod.is_crossed().crossed);
}

#[test]
fn lie_commutators_of_two_dimensional_nonabelian_algebra() {
    let l = Arc::new(LieAlgebra::build(&lie_from(3, 2, &[(0, 1, vec![0, 1])])).unwrap());
    let zero = Arc::new(LieAlgebra::abelian(3, 0));
    let p = PrecrossedModule::with_zero_boundary(Action::trivial(&zero, &l));
    let pc = peiffer_commutator(&p, &p.whole(), &p.whole()).unwrap();
    // span(e₂): every bracket of basis vectors is a multiple of e₂.
    assert_eq!(pc.carrier().basis(), &[vec![0, 1]]);
    let whole = Subobject::new(l.clone(), l.whole());
    let huq = peiffer_core::ambient::huq_commutator(&l, &whole, &whole).unwrap();
    assert_eq!(huq.carrier().basis(), &[vec![0, 1]]);
}

#[test]
fn huq_commutator_in_abelian_group_is_trivial() {
    let g = group(&Table::cyclic(4));
    let whole = Subobject::new(g.clone(), g.whole());
    assert!(peiffer_core::ambient::huq_commutator(&g, &whole, &whole).unwrap().is_trivial());
}

#[test]
fn precrossed_module_validation() {
    let (_, g, rot, _) = s3_with_elements();
    assert!(!over_zero(&g).is_crossed().crossed);
    assert!(over_zero(&g).is_crossed().witness.is_some());
    let id = PrecrossedModule::identity_conjugation(&g);
    assert!(id.is_crossed().crossed);
    let z3 = Arc::new(FiniteGroup::cyclic(3));
    let rot2 = g.mul(rot, rot);
    let incl = Hom::from_fn(z3.clone(), g.clone(), |&k| [0, rot, rot2][k]).unwrap();
    let err = PrecrossedModule::new(incl, Action::trivial(&g, &z3)).unwrap_err();
    assert!(matches!(err, Error::NotEquivariant { .. }));
    let ab = group(&Table::cyclic(4));
    assert!(over_zero(&ab).is_crossed().crossed);
}

#[test]
fn reflexive_graphs_of_s3() {
    let (_, g, _, _) = s3_with_elements();
    let id = PrecrossedModule::identity_conjugation(&g);
    let (graph, _) = to_reflexive_graph(&id).unwrap();
    assert_eq!(graph.x1.size(), 36);
    assert_eq!(graph.x1.sub_size(&graph.kernel_d()), 6);
    assert_eq!(graph.x1.sub_size(&graph.kernel_c()), 6);
    let (graph, _) = to_reflexive_graph(&over_zero(&g)).unwrap();
    assert_eq!(graph.x1.size(), 6);
    assert!(graph.d.is_zero() && graph.c.is_zero());
    assert_eq!(rg_reflection(&graph).graph.x1.size(), 2);
    let (crossed_graph, _) = to_reflexive_graph(&id).unwrap();
    assert!(rg_reflection(&crossed_graph).projection.is_injective());
}

#[test]
fn centrality_of_small_extensions() {
    let z4 = over_zero(&group(&Table::cyclic(4)));
    let f = quotient_ext(&z4, &[2]);
    assert_eq!(f.kernel().order(), 2);
    assert!(is_central(&f).unwrap().verdict);
    assert!(is_central_via_huq(&f).unwrap().verdict);
    assert!(is_central(&Extension::identity(&z4)).unwrap().verdict);

    let (t, g, rot, _) = s3_with_elements();
    let s = over_zero(&g);
    let f = quotient_ext(&s, &[rot]);
    let r = is_central(&f).unwrap();
    assert!(!r.verdict);
    let w = r.witness.unwrap();
    assert!(t.generated(&[rot], false).contains(&w) && w != 0);
    assert!(!is_central_via_huq(&f).unwrap().verdict);
}

#[test]
fn centralization_examples() {
    let (_, g, rot, _) = s3_with_elements();
    let f = quotient_ext(&over_zero(&g), &[rot]);
    let c = centralize(&f).unwrap();
    assert_eq!(c.obstruction.order(), 3);
    assert_eq!(c.extension.source().x().size(), 2);
    assert!(c.extension.morphism().is_iso());

    let t = Table::quaternion();
    let q = over_zero(&group(&t));
    let center = t.center();
    assert_eq!(center, vec![0, 1]);
    let f = quotient_ext(&q, &[1]);
    let c = centralize(&f).unwrap();
    assert!(c.unit().is_iso());
}

#[test]
fn triviality_examples() {
    let z4 = over_zero(&group(&Table::cyclic(4)));
    assert!(is_trivial_extension(&quotient_ext(&z4, &[2])).unwrap().trivial);

    let (_, g, rot, _) = s3_with_elements();
    assert!(!is_trivial_extension(&quotient_ext(&over_zero(&g), &[rot])).unwrap().trivial);

    let t = Table::quaternion();
    let f = quotient_ext(&over_zero(&group(&t)), &[1]);
    assert!(is_central(&f).unwrap().verdict);
    let r = is_trivial_extension(&f).unwrap();
    assert!(!r.trivial);
    // Y ×_{Y/[Y,Y]} X/[X,X] with Y = Q/Z abelian collapses to X/[X,X].
    let derived = t.commutator_subgroup(&t.everything(), &t.everything());
    assert_eq!(r.pullback.module.x().size() as usize, t.order() / derived.len());
    assert_eq!(r.pullback.module.x().size(), 4);
}

fn quotient_square(p: &PrecrossedModule<FiniteGroup>, a: &[usize], b: &[usize]) -> DoubleExtension<FiniteGroup> {
    let n1 = PXSubmodule::generated(p, a, true);
    let n2 = PXSubmodule::generated(p, b, true);
    let q1 = quotient_pxmod(&n1).unwrap();
    let q2 = quotient_pxmod(&n2).unwrap();
    let w = quotient_pxmod(&n1.join(&n2).unwrap()).unwrap();
    let h = Extension::new(q2.factor(&w.projection).unwrap()).unwrap();
    let j = Extension::new(q1.factor(&w.projection).unwrap()).unwrap();
    make_double_extension(
        Extension::new(q1.projection).unwrap(),
        Extension::new(q2.projection).unwrap(),
        h,
        j,
    )
    .unwrap()
}

fn diagonal_square(f: &Extension<FiniteGroup>) -> DoubleExtension<FiniteGroup> {
    let id = Extension::identity(f.target());
    make_double_extension(f.clone(), f.clone(), id.clone(), id).unwrap()
}

#[test]
fn klein_four_projection_square() {
    let v = over_zero(&group(&Table::cyclic(2).product(&Table::cyclic(2))));
    let s = quotient_square(&v, &[2], &[1]);
    assert!(s.comparison_surjective);
    assert_eq!(s.pullback.module.x().size(), 4);
    assert!(is_double_central(&s).unwrap().verdict);
    assert!(hopf_h3(&s).unwrap().order == 1);

    let f = quotient_ext(&v, &[2]);
    let s = diagonal_square(&f);
    assert_eq!(s.pullback.module.x().size(), 2);

    let id = Extension::identity(&v);
    let s = make_double_extension(id.clone(), id.clone(), id.clone(), id).unwrap();
    assert!(is_double_central(&s).unwrap().verdict);
    assert_eq!(hopf_h3(&s).unwrap().order, 1);
    assert!(double_centralize(&s).unwrap().quotient.projection.is_iso());
}

#[test]
fn commuting_square_with_non_surjective_comparison() {
    // Z2 → Z2 twice over 0: the comparison is the diagonal into Z2 × Z2.
    let z2 = over_zero(&group(&Table::cyclic(2)));
    let id = Extension::identity(&z2);
    let to_zero = quotient_ext(&z2, &[1]);
    let err = make_double_extension(id.clone(), id, to_zero.clone(), to_zero).unwrap_err();
    assert!(matches!(err, Error::NotDouble(_)));
}

#[test]
fn double_centrality_examples() {
    let t = Table::quaternion();
    let q = over_zero(&group(&t));
    assert!(is_double_central(&diagonal_square(&quotient_ext(&q, &[1]))).unwrap().verdict);

    let (t, g, rot, _) = s3_with_elements();
    let s = diagonal_square(&quotient_ext(&over_zero(&g), &[rot]));
    let r = is_double_central(&s).unwrap();
    assert!(!r.verdict);
    assert_eq!(members(&r.meet_obstruction), t.generated(&[rot], false));
    let dc = double_centralize(&s).unwrap();
    assert_eq!(dc.join.order(), 3);
    assert!(dc.join_within_meet);
    assert_eq!(dc.square.top().x().size(), 2);
    assert!(is_double_central(&dc.square).unwrap().verdict);

    let h3 = hopf_h3(&s).unwrap();
    assert_eq!(h3.numerator.order(), 3);
    assert_eq!(h3.order, 1);
}

#[test]
fn galois_groups_and_second_hopf_formula() {
    let t = Table::quaternion();
    let q = over_zero(&group(&t));
    let f = quotient_ext(&q, &[1]);
    let derived = t.commutator_subgroup(&t.everything(), &t.everything());
    let center = t.center();
    let expected = intersect(&center, &derived);
    let gal = galois_group(&f).unwrap();
    assert_eq!(gal.order as usize, expected.len());
    assert_eq!(gal.order, 2);
    let h2 = hopf_h2(&f).unwrap();
    let denominator = t.commutator_subgroup(&t.everything(), &center);
    assert_eq!(h2.order as usize, expected.len() / denominator.len());
    assert_eq!(h2.order, 2);
    assert!(h2.projectivity_caveat);

    let z4 = over_zero(&group(&Table::cyclic(4)));
    let f = quotient_ext(&z4, &[2]);
    assert_eq!(galois_group(&f).unwrap().order, 1);
    assert_eq!(hopf_h2(&f).unwrap().order, 1);
    assert_eq!(galois_group(&Extension::identity(&q)).unwrap().order, 1);
    assert_eq!(hopf_h2(&Extension::identity(&q)).unwrap().order, 1);

    let (_, g, rot, _) = s3_with_elements();
    let err = galois_group(&quotient_ext(&over_zero(&g), &[rot])).unwrap_err();
    assert!(matches!(err, Error::NotCentral(_)));
}

fn node_orders(ses: &ShortExactSequence<FiniteGroup>, p: &Extension<FiniteGroup>) -> Vec<u64> {
    let seq = five_term(ses, p).unwrap();
    assert!(seq.all_checks_pass(), "{:?}", seq.exactness);
    assert_eq!(seq.composites_zero, vec![true; 3]);
    for status in &seq.exactness[..2] {
        assert!(matches!(status, ExactnessStatus::NotChecked { .. }));
    }
    for status in &seq.exactness[2..] {
        assert_eq!(status, &ExactnessStatus::Exact);
    }
    seq.nodes.iter().map(|n| n.order()).collect()
}

#[test]
fn five_term_sequences() {
    let (_, g, rot, _) = s3_with_elements();
    let s = over_zero(&g);
    let g_ext = quotient_ext(&s, &[rot]);
    let ses = ShortExactSequence::from_quotient(g_ext.morphism().clone()).unwrap();
    assert_eq!(node_orders(&ses, &Extension::identity(&s)), vec![1, 1, 1, 2, 2]);

    let z4 = over_zero(&group(&Table::cyclic(4)));
    let ses = ShortExactSequence::from_quotient(quotient_ext(&z4, &[2]).morphism().clone()).unwrap();
    assert_eq!(node_orders(&ses, &Extension::identity(&z4)), vec![1, 1, 2, 4, 2]);

    let ses = ShortExactSequence::from_quotient(Extension::identity(&z4).morphism().clone()).unwrap();
    let orders = node_orders(&ses, &Extension::identity(&z4));
    assert_eq!(orders[2], 1);
    assert_eq!(orders[3], orders[4]);
}

#[test]
fn relative_commutators_in_s3() {
    let (t, g, rot, _) = s3_with_elements();
    let s = over_zero(&g);
    let a3 = PXSubmodule::generated(&s, &[rot], true);
    assert!(relative_commutator(&s, &a3, &a3).unwrap().is_trivial());
    let whole = relative_commutator(&s, &s.whole(), &s.whole()).unwrap();
    assert_eq!(members(&whole), t.commutator_subgroup(&t.everything(), &t.everything()));
    assert!(relative_commutator(&s, &s.trivial(), &s.whole()).unwrap().is_trivial());

    let id = PrecrossedModule::identity_conjugation(&g);
    let err = relative_commutator(&id, &id.whole(), &id.whole()).unwrap_err();
    assert!(matches!(err, Error::NonzeroBoundary(_)));
}

fn small_catalog(names: &[&str]) -> Catalog<FiniteGroup> {
    let mut c = Catalog::<FiniteGroup>::builtin(DEFAULT_SEED);
    c.objects.retain(|(n, _)| names.contains(&n.as_str()));
    c
}

#[test]
fn enumeration_of_z3_over_z2_has_both_actions() {
    let c = small_catalog(&["Z2", "Z3"]);
    let s = enumerate_pxmods(&c, 6).unwrap();
    let over: Vec<_> = s.iter().filter(|l| l.label.starts_with("Z3 -> Z2")).collect();
    assert_eq!(over.len(), 2);
    let inverting = over.iter().any(|l| {
        let p = &l.value;
        p.boundary().is_zero() && p.act(&1, &1) == 2
    });
    assert!(inverting);
}

#[test]
fn enumerated_extensions_include_reduction_and_identities() {
    let c = small_catalog(&["0", "Z2", "Z4"]);
    let px = enumerate_pxmods(&c, 4).unwrap();
    let exts = enumerate_extensions(&px);
    assert!(exts.iter().any(|l| l.label.contains("(Z4 -> 0") && l.label.contains("=> Z2 -> 0")));
    for (i, p) in px.iter().enumerate() {
        let tag = format!("#{i} -> #{i} ");
        assert!(exts.iter().any(|l| l.label.starts_with(&tag) && l.value.morphism().is_iso()), "{}", p.label);
    }
    for l in exts.iter() {
        assert!(Extension::new(l.value.morphism().clone()).is_ok());
    }
}

#[test]
fn element_representations_round_trip() {
    let g = group(&Table::cyclic(4));
    assert_eq!(g.parse(&g.repr(&3)).unwrap(), 3);
    assert!(g.parse(&ElementRepr::Index(9)).is_err());
}
