//! Precrossed modules over a fixed base object `B`.
//!
//! A precrossed module is a boundary `∂: X → B` together with an action of
//! `B` on `X` such that `∂(ᵇx) = b ∂(x) b⁻¹` (Lie: `∂(ξ(b)x) = [b, ∂x]`).

use std::fmt;
use std::sync::Arc;

use crate::ambient::{
    relative_normal_closure, same_object, Action, Ambient, Hom, Subobject,
};
use crate::error::{Error, Result};

mod graph;

pub use graph::{
    graph_isomorphism, normalize, rg_reflection, semidirect_map, to_reflexive_graph,
    GraphReflection, ReflexiveGraph,
};

#[derive(Debug)]
struct PxData<A: Ambient> {
    boundary: Hom<A>,
    action: Action<A>,
}

#[derive(Clone)]
pub struct PrecrossedModule<A: Ambient>(Arc<PxData<A>>);

impl<A: Ambient> PartialEq for PrecrossedModule<A> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.boundary == other.0.boundary && self.0.action == other.0.action)
    }
}

impl<A: Ambient> Eq for PrecrossedModule<A> {}

impl<A: Ambient> fmt::Debug for PrecrossedModule<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrecrossedModule({:?} → {:?})", self.x(), self.b())
    }
}

/// Outcome of the crossed-module test, with a pair `(x, y)` violating
/// `^{∂x}y = x y x⁻¹` when the verdict is negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedVerdict<A: Ambient> {
    pub crossed: bool,
    pub witness: Option<(A::Elem, A::Elem)>,
}

impl<A: Ambient> PrecrossedModule<A> {
    pub fn new(boundary: Hom<A>, action: Action<A>) -> Result<Self> {
        if !same_object(action.actor(), boundary.codomain())
            || !same_object(action.acted(), boundary.domain())
        {
            return Err(Error::AmbientMismatch);
        }
        let (x, b) = (boundary.domain(), boundary.codomain());
        for bb in b.spanning() {
            for xx in x.spanning() {
                let lhs = boundary.apply(&action.apply(&bb, &xx));
                let rhs = b.conj(&bb, &boundary.apply(&xx));
                if lhs != rhs {
                    return Err(Error::NotEquivariant {
                        b: b.render(&bb),
                        x: x.render(&xx),
                    });
                }
            }
        }
        Ok(Self::new_unchecked(boundary, action))
    }

    pub(crate) fn new_unchecked(boundary: Hom<A>, action: Action<A>) -> Self {
        Self(Arc::new(PxData { boundary, action }))
    }

    /// `(0: X → B)` with the given action; equivariance is automatic.
    pub fn with_zero_boundary(action: Action<A>) -> Self {
        let boundary = Hom::zero(action.acted(), action.actor());
        Self::new_unchecked(boundary, action)
    }

    /// `(1_B: B → B)` with conjugation.
    pub fn identity_conjugation(b: &Arc<A>) -> Self {
        Self::new_unchecked(Hom::identity(b), Action::conjugation(b))
    }

    pub fn x(&self) -> &Arc<A> {
        self.0.boundary.domain()
    }

    pub fn b(&self) -> &Arc<A> {
        self.0.boundary.codomain()
    }

    pub fn boundary(&self) -> &Hom<A> {
        &self.0.boundary
    }

    pub fn action(&self) -> &Action<A> {
        &self.0.action
    }

    /// `ᵇx`, resp. `ξ(b)(x)`.
    pub fn act(&self, b: &A::Elem, x: &A::Elem) -> A::Elem {
        self.0.action.apply(b, x)
    }

    pub fn is_crossed(&self) -> CrossedVerdict<A> {
        let x = self.x();
        let elems = x.spanning();
        for a in &elems {
            let da = self.boundary().apply(a);
            for y in &elems {
                if self.act(&da, y) != x.conj(a, y) {
                    return CrossedVerdict {
                        crossed: false,
                        witness: Some((a.clone(), y.clone())),
                    };
                }
            }
        }
        CrossedVerdict {
            crossed: true,
            witness: None,
        }
    }

    pub fn whole(&self) -> PXSubmodule<A> {
        PXSubmodule::whole(self)
    }

    pub fn trivial(&self) -> PXSubmodule<A> {
        PXSubmodule::trivial(self)
    }
}

/// Checks that a precrossed module is valid; equivalent to constructing it.
pub fn make_pxmod<A: Ambient>(boundary: Hom<A>, action: Action<A>) -> Result<PrecrossedModule<A>> {
    PrecrossedModule::new(boundary, action)
}

/// A morphism of precrossed modules over the same base: `∂' f = ∂` and
/// `f(ᵇx) = ᵇf(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PXMorphism<A: Ambient> {
    source: PrecrossedModule<A>,
    target: PrecrossedModule<A>,
    map: Hom<A>,
}

impl<A: Ambient> PXMorphism<A> {
    pub fn new(source: PrecrossedModule<A>, target: PrecrossedModule<A>, map: Hom<A>) -> Result<Self> {
        Self::check(&source, &target, &map).map_err(Error::NotMorphism)?;
        Ok(Self { source, target, map })
    }

    pub(crate) fn new_unchecked(
        source: PrecrossedModule<A>,
        target: PrecrossedModule<A>,
        map: Hom<A>,
    ) -> Self {
        Self { source, target, map }
    }

    fn check(
        source: &PrecrossedModule<A>,
        target: &PrecrossedModule<A>,
        map: &Hom<A>,
    ) -> std::result::Result<(), String> {
        if !same_object(source.b(), target.b()) {
            return Err("source and target live over different base objects".into());
        }
        if !same_object(map.domain(), source.x()) || !same_object(map.codomain(), target.x()) {
            return Err("map does not go from the source to the target object".into());
        }
        let x = source.x();
        let b = source.b();
        for e in x.spanning() {
            let fe = map.apply(&e);
            if target.boundary().apply(&fe) != source.boundary().apply(&e) {
                return Err(format!("∂'(f(x)) ≠ ∂(x) for x = {}", x.render(&e)));
            }
            for bb in b.spanning() {
                if map.apply(&source.act(&bb, &e)) != target.act(&bb, &fe) {
                    return Err(format!(
                        "f is not equivariant at b = {}, x = {}",
                        b.render(&bb),
                        x.render(&e)
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn identity(p: &PrecrossedModule<A>) -> Self {
        Self::new_unchecked(p.clone(), p.clone(), Hom::identity(p.x()))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PXMorphism<A>) -> Result<Self> {
        if inner.target != self.source {
            return Err(Error::AmbientMismatch);
        }
        Ok(Self::new_unchecked(
            inner.source.clone(),
            self.target.clone(),
            self.map.compose(&inner.map)?,
        ))
    }

    pub fn source(&self) -> &PrecrossedModule<A> {
        &self.source
    }

    pub fn target(&self) -> &PrecrossedModule<A> {
        &self.target
    }

    pub fn map(&self) -> &Hom<A> {
        &self.map
    }

    pub fn apply(&self, e: &A::Elem) -> A::Elem {
        self.map.apply(e)
    }

    pub fn is_surjective(&self) -> bool {
        self.map.is_surjective()
    }

    pub fn is_injective(&self) -> bool {
        self.map.is_injective()
    }

    pub fn is_iso(&self) -> bool {
        self.is_surjective() && self.is_injective()
    }

    pub fn kernel(&self) -> PXSubmodule<A> {
        PXSubmodule::new_unchecked(self.source.clone(), self.map.kernel())
    }

    pub fn image(&self) -> PXSubmodule<A> {
        PXSubmodule::new_unchecked(self.target.clone(), self.map.image())
    }

    /// Every morphism `source → target`.
    pub fn all(source: &PrecrossedModule<A>, target: &PrecrossedModule<A>) -> Vec<Self> {
        if !same_object(source.b(), target.b()) {
            return Vec::new();
        }
        A::all_maps(source.x(), target.x())
            .into_iter()
            .map(|d| Hom::new_unchecked(source.x().clone(), target.x().clone(), d))
            .filter(|m| Self::check(source, target, m).is_ok())
            .map(|m| Self::new_unchecked(source.clone(), target.clone(), m))
            .collect()
    }
}

/// A `ξ`-stable subobject of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PXSubmodule<A: Ambient> {
    parent: PrecrossedModule<A>,
    carrier: A::Sub,
    normal_in_parent: bool,
}

impl<A: Ambient> PXSubmodule<A> {
    pub fn new(parent: &PrecrossedModule<A>, carrier: A::Sub) -> Result<Self> {
        if let Some((b, m)) = parent.action().stability_witness(&carrier) {
            return Err(Error::StabilityViolation(format!(
                "acting by {} moves {} out of the subobject",
                parent.b().render(&b),
                parent.x().render(&m)
            )));
        }
        Ok(Self::new_unchecked(parent.clone(), carrier))
    }

    pub(crate) fn new_unchecked(parent: PrecrossedModule<A>, carrier: A::Sub) -> Self {
        let normal_in_parent = parent.x().is_normal(&carrier);
        Self {
            parent,
            carrier,
            normal_in_parent,
        }
    }

    pub fn whole(parent: &PrecrossedModule<A>) -> Self {
        Self::new_unchecked(parent.clone(), parent.x().whole())
    }

    pub fn trivial(parent: &PrecrossedModule<A>) -> Self {
        Self::new_unchecked(parent.clone(), parent.x().trivial())
    }

    /// Smallest stable subobject (normal when asked) containing `gens`.
    pub fn generated(parent: &PrecrossedModule<A>, gens: &[A::Elem], normal: bool) -> Self {
        let x = parent.x();
        let actors = parent.b().generators();
        let mut current = x.closure(gens, normal);
        loop {
            let members = x.sub_spanning(&current);
            let mut extra = Vec::new();
            for b in &actors {
                for m in &members {
                    let v = parent.act(b, m);
                    if !x.sub_contains(&current, &v) {
                        extra.push(v);
                    }
                }
            }
            if extra.is_empty() {
                return Self::new_unchecked(parent.clone(), current);
            }
            extra.extend(members);
            current = x.closure(&extra, normal);
        }
    }

    pub fn parent(&self) -> &PrecrossedModule<A> {
        &self.parent
    }

    pub fn carrier(&self) -> &A::Sub {
        &self.carrier
    }

    pub fn subobject(&self) -> Subobject<A> {
        Subobject::new(self.parent.x().clone(), self.carrier.clone())
    }

    pub fn order(&self) -> u64 {
        self.parent.x().sub_size(&self.carrier)
    }

    pub fn is_trivial(&self) -> bool {
        self.parent.x().sub_is_trivial(&self.carrier)
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.x().size()
    }

    pub fn is_normal(&self) -> bool {
        self.normal_in_parent
    }

    pub fn contains(&self, e: &A::Elem) -> bool {
        self.parent.x().sub_contains(&self.carrier, e)
    }

    pub fn members(&self) -> Vec<A::Elem> {
        self.parent.x().sub_spanning(&self.carrier)
    }

    fn same_parent(&self, other: &Self) -> Result<()> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.same_parent(other)?;
        Ok(self.parent.x().is_subset(&self.carrier, &other.carrier))
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.same_parent(other)?;
        Ok(Self::new_unchecked(
            self.parent.clone(),
            self.parent.x().meet(&self.carrier, &other.carrier),
        ))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_parent(other)?;
        Ok(Self::new_unchecked(
            self.parent.clone(),
            self.parent.x().join(&self.carrier, &other.carrier),
        ))
    }

    pub fn normal_closure(&self) -> Self {
        Self::new_unchecked(
            self.parent.clone(),
            self.parent.x().normal_closure(&self.carrier),
        )
    }

    /// Closure under conjugation by members of `within`; stays stable.
    pub fn normal_closure_within(&self, within: &Self) -> Result<Self> {
        self.same_parent(within)?;
        Ok(Self::new_unchecked(
            self.parent.clone(),
            relative_normal_closure(&**self.parent.x(), &self.carrier, &within.carrier),
        ))
    }

    /// `∂` vanishes on the carrier.
    pub fn has_zero_boundary(&self) -> bool {
        let d = self.parent.boundary();
        self.members().iter().all(|m| d.codomain().is_zero(&d.apply(m)))
    }

    pub fn image_under(&self, f: &PXMorphism<A>) -> Result<Self> {
        if f.source != self.parent {
            return Err(Error::AmbientMismatch);
        }
        Ok(Self::new_unchecked(f.target.clone(), f.map.image_of(&self.carrier)))
    }

    pub fn preimage_under(f: &PXMorphism<A>, sub: &Self) -> Result<Self> {
        if f.target != sub.parent {
            return Err(Error::AmbientMismatch);
        }
        Ok(Self::new_unchecked(f.source.clone(), f.map.preimage(&sub.carrier)))
    }

    /// The submodule as a precrossed module in its own right, with its
    /// inclusion into the parent.
    pub fn to_pxmod(&self) -> (PrecrossedModule<A>, PXMorphism<A>) {
        let x = self.parent.x();
        let (obj, incl_data) = x.sub_object(&self.carrier);
        let obj = Arc::new(obj);
        let incl = Hom::new_unchecked(obj.clone(), x.clone(), incl_data);
        let boundary = self
            .parent
            .boundary()
            .compose(&incl)
            .expect("inclusion lands in the parent");
        let parent = &self.parent;
        let action = Action::from_fn_unchecked(parent.b().clone(), obj, |b, s| {
            incl.lift(&parent.act(b, &incl.apply(s)))
                .expect("carrier is stable under the action")
        });
        let module = PrecrossedModule::new_unchecked(boundary, action);
        let inclusion = PXMorphism::new_unchecked(module.clone(), self.parent.clone(), incl);
        (module, inclusion)
    }
}

/// Peiffer elements `m n m⁻¹ (^{∂m}n)⁻¹` and `n m n⁻¹ (^{∂n}m)⁻¹` (Lie:
/// `[m, n] − ξ(∂m)(n)` and `[n, m] − ξ(∂n)(m)`), without repetition and
/// omitting the neutral element.
pub fn peiffer_generators<A: Ambient>(a: &PrecrossedModule<A>, m: &A::Sub, n: &A::Sub) -> Vec<A::Elem> {
    let x = a.x();
    let d = a.boundary();
    let ms = x.sub_spanning(m);
    let ns = x.sub_spanning(n);
    let element = |u: &A::Elem, v: &A::Elem| x.op(&x.conj(u, v), &x.neg(&a.act(&d.apply(u), v)));
    let mut gens = Vec::new();
    for u in &ms {
        for v in &ns {
            for g in [element(u, v), element(v, u)] {
                if !x.is_zero(&g) {
                    gens.push(g);
                }
            }
        }
    }
    gens.sort();
    gens.dedup();
    gens
}

/// `⟨M, N⟩`: the subgroup (Lie: ideal) generated by the Peiffer elements.
pub fn peiffer_commutator<A: Ambient>(
    a: &PrecrossedModule<A>,
    m: &PXSubmodule<A>,
    n: &PXSubmodule<A>,
) -> Result<PXSubmodule<A>> {
    if m.parent != *a || n.parent != *a {
        return Err(Error::AmbientMismatch);
    }
    let gens = peiffer_generators(a, &m.carrier, &n.carrier);
    let carrier = a.x().closure(&gens, A::PEIFFER_CLOSURE_IS_IDEAL);
    PXSubmodule::new(a, carrier)
}

/// `X / N` for a normal stable `N` on which `∂` vanishes.
#[derive(Clone, Debug)]
pub struct PxQuotient<A: Ambient> {
    pub module: PrecrossedModule<A>,
    pub projection: PXMorphism<A>,
    pub kernel: PXSubmodule<A>,
    section: A::MapData,
}

impl<A: Ambient> PxQuotient<A> {
    /// A preimage of `q` under the projection (a set-theoretic section for
    /// groups, a linear one for Lie algebras).
    pub fn lift(&self, q: &A::Elem) -> A::Elem {
        A::map_apply(
            self.module.x(),
            self.kernel.parent.x(),
            &self.section,
            q,
        )
    }

    /// The unique `f̄` with `f̄ ∘ projection = f`, when the kernel lies in `ker f`.
    pub fn factor(&self, f: &PXMorphism<A>) -> Result<PXMorphism<A>> {
        if f.source != self.kernel.parent {
            return Err(Error::AmbientMismatch);
        }
        let k = f.map.kernel();
        if !f.source.x().is_subset(&self.kernel.carrier, &k) {
            return Err(Error::NotMorphism(
                "map does not vanish on the quotiented subobject".into(),
            ));
        }
        let map = Hom::from_fn_unchecked(self.module.x().clone(), f.target.x().clone(), |q| {
            f.apply(&self.lift(q))
        });
        Ok(PXMorphism::new_unchecked(
            self.module.clone(),
            f.target.clone(),
            map,
        ))
    }
}

pub fn quotient_pxmod<A: Ambient>(n: &PXSubmodule<A>) -> Result<PxQuotient<A>> {
    let parent = &n.parent;
    let x = parent.x();
    if let Some((g, m)) = x.normality_witness(&n.carrier) {
        return Err(Error::NotNormal(format!(
            "conjugating {} by {} leaves the subobject",
            x.render(&m),
            x.render(&g)
        )));
    }
    if !n.has_zero_boundary() {
        return Err(Error::NonzeroBoundary(
            "the boundary does not factor through the quotient".into(),
        ));
    }
    let (q, proj_data, section) = x.quotient(&n.carrier);
    let q = Arc::new(q);
    let proj = Hom::new_unchecked(x.clone(), q.clone(), proj_data);
    let lift = |e: &A::Elem| A::map_apply(&q, x, &section, e);
    let boundary = Hom::from_fn_unchecked(q.clone(), parent.b().clone(), |e| {
        parent.boundary().apply(&lift(e))
    });
    let action = Action::from_fn_unchecked(parent.b().clone(), q.clone(), |b, e| {
        proj.apply(&parent.act(b, &lift(e)))
    });
    let module = PrecrossedModule::new_unchecked(boundary, action);
    let projection = PXMorphism::new_unchecked(parent.clone(), module.clone(), proj);
    Ok(PxQuotient {
        module,
        projection,
        kernel: n.clone(),
        section,
    })
}

/// The crossed-module reflection `η: X → X / ⟨X, X⟩`.
#[derive(Clone, Debug)]
pub struct Reflection<A: Ambient> {
    pub xmod: PrecrossedModule<A>,
    pub unit: PXMorphism<A>,
    /// `⟨X, X⟩` as generated, before normal closure.
    pub peiffer: PXSubmodule<A>,
    /// The normal closure actually quotiented; equals `peiffer` unless
    /// `closure_was_proper`.
    pub kernel: PXSubmodule<A>,
    pub closure_was_proper: bool,
    pub quotient: PxQuotient<A>,
}

pub fn reflect_to_xmod<A: Ambient>(p: &PrecrossedModule<A>) -> Result<Reflection<A>> {
    let whole = p.whole();
    let peiffer = peiffer_commutator(p, &whole, &whole)?;
    let kernel = peiffer.normal_closure();
    let closure_was_proper = kernel.order() != peiffer.order();
    let quotient = quotient_pxmod(&kernel)?;
    Ok(Reflection {
        xmod: quotient.module.clone(),
        unit: quotient.projection.clone(),
        peiffer,
        kernel,
        closure_was_proper,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::FiniteGroup;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap())
    }

    #[test]
    fn zero_boundary_peiffer_is_commutator_subgroup() {
        let s = s3();
        let zero = Arc::new(FiniteGroup::trivial());
        let p = PrecrossedModule::with_zero_boundary(Action::trivial(&zero, &s));
        let c = peiffer_commutator(&p, &p.whole(), &p.whole()).unwrap();
        assert_eq!(c.order(), 3);
        assert!(!p.is_crossed().crossed);
        let r = reflect_to_xmod(&p).unwrap();
        assert_eq!(r.xmod.x().order(), 2);
        assert!(r.xmod.is_crossed().crossed);
    }

    #[test]
    fn identity_with_conjugation_is_crossed() {
        let p = PrecrossedModule::identity_conjugation(&s3());
        assert!(p.is_crossed().crossed);
        assert!(peiffer_commutator(&p, &p.whole(), &p.whole())
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn non_central_inclusion_is_not_equivariant() {
        let s = s3();
        let a = s.closure(&[2], false);
        assert_eq!(s.sub_size(&a), 3);
        let (obj, incl) = s.sub_object(&a);
        let obj = Arc::new(obj);
        let boundary = Hom::new(obj.clone(), s.clone(), incl).unwrap();
        let action = Action::trivial(&s, &obj);
        assert!(matches!(
            make_pxmod(boundary, action),
            Err(Error::NotEquivariant { .. })
        ));
    }
}
