//! Extensions of precrossed modules and their Galois-theoretic invariants.

use std::sync::Arc;

use crate::ambient::{direct_product, huq_carrier, Action, Ambient, Hom, SemidirectProduct, Subobject};
use crate::error::{Error, Result};
use crate::pxmod::{
    peiffer_commutator, peiffer_generators, quotient_pxmod, reflect_to_xmod, semidirect_map,
    PXMorphism, PXSubmodule, PrecrossedModule, PxQuotient,
};

mod double;
mod hopf;

pub use double::{
    double_centralize, is_double_central, make_double_extension, DoubleCentralityReport,
    DoubleCentralization, DoubleExtension,
};
pub use hopf::{
    five_term, galois_group, galois_group_via_unit, hopf_h2, hopf_h3, ExactnessStatus,
    FiveTermNode, FiveTermSequence, HopfQuotient, ShortExactSequence,
};

/// A surjective morphism of precrossed modules over `B`, with its kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension<A: Ambient> {
    morphism: PXMorphism<A>,
    kernel: PXSubmodule<A>,
}

impl<A: Ambient> Extension<A> {
    pub fn new(morphism: PXMorphism<A>) -> Result<Self> {
        let image = morphism.map().image();
        let y = morphism.target().x();
        if let Some(missed) = y.spanning().into_iter().find(|e| !y.sub_contains(&image, e)) {
            return Err(Error::NotSurjective(format!(
                "{} is not in the image",
                y.render(&missed)
            )));
        }
        let kernel = morphism.kernel();
        Ok(Self { morphism, kernel })
    }

    pub fn identity(p: &PrecrossedModule<A>) -> Self {
        Self::new(PXMorphism::identity(p)).expect("identity is surjective")
    }

    pub fn morphism(&self) -> &PXMorphism<A> {
        &self.morphism
    }

    pub fn kernel(&self) -> &PXSubmodule<A> {
        &self.kernel
    }

    pub fn source(&self) -> &PrecrossedModule<A> {
        self.morphism.source()
    }

    pub fn target(&self) -> &PrecrossedModule<A> {
        self.morphism.target()
    }

    pub fn apply(&self, e: &A::Elem) -> A::Elem {
        self.morphism.apply(e)
    }
}

#[derive(Clone, Debug)]
pub struct CentralityReport<A: Ambient> {
    pub verdict: bool,
    /// `⟨K[f], X⟩`.
    pub obstruction: PXSubmodule<A>,
    /// A nontrivial Peiffer generator of the obstruction, if any.
    pub witness: Option<A::Elem>,
}

/// Central iff `⟨K[f], X⟩` is trivial.
pub fn is_central<A: Ambient>(f: &Extension<A>) -> Result<CentralityReport<A>> {
    let x = f.source();
    let whole = x.whole();
    let obstruction = peiffer_commutator(x, &f.kernel, &whole)?;
    let witness = peiffer_generators(x, f.kernel.carrier(), whole.carrier())
        .into_iter()
        .next();
    Ok(CentralityReport {
        verdict: obstruction.is_trivial(),
        obstruction,
        witness,
    })
}

#[derive(Clone, Debug)]
pub struct HuqCentralityReport<A: Ambient> {
    pub verdict: bool,
    /// `[K[f ⋊ 1], K[d]]` inside `X ⋊ B`.
    pub with_domain: Subobject<A>,
    /// `[K[f ⋊ 1], K[c]]` inside `X ⋊ B`.
    pub with_codomain: Subobject<A>,
}

/// Centrality read off the reflexive graph of the source: both Huq
/// commutators of `K[f ⋊ 1_B]` with `K[d]` and `K[c]` vanish.
pub fn is_central_via_huq<A: Ambient>(f: &Extension<A>) -> Result<HuqCentralityReport<A>> {
    let (src, _tgt, f1) = semidirect_map(f.morphism())?;
    let x1 = &src.object;
    let p = f.source();
    let (x, b) = (p.x(), p.b());
    let c = Hom::from_fn_unchecked(x1.clone(), b.clone(), |e| {
        let (xe, be) = A::split(x, b, e);
        b.op(&p.boundary().apply(&xe), &be)
    });
    let k = f1.kernel();
    let with_d = huq_carrier(&**x1, &k, &src.projection.kernel());
    let with_c = huq_carrier(&**x1, &k, &c.kernel());
    Ok(HuqCentralityReport {
        verdict: x1.sub_is_trivial(&with_d) && x1.sub_is_trivial(&with_c),
        with_domain: Subobject::new(x1.clone(), with_d),
        with_codomain: Subobject::new(x1.clone(), with_c),
    })
}

/// `X / ⟨K[f], X⟩ ↠ Y` with the quotient morphism from `X`.
#[derive(Clone, Debug)]
pub struct Centralization<A: Ambient> {
    pub extension: Extension<A>,
    pub quotient: PxQuotient<A>,
    pub obstruction: PXSubmodule<A>,
    pub closure_was_proper: bool,
}

impl<A: Ambient> Centralization<A> {
    pub fn unit(&self) -> &PXMorphism<A> {
        &self.quotient.projection
    }

    /// The morphism `X / ⟨K[f], X⟩ → X'` induced by `h: X → X'`; exists
    /// whenever `h` kills the obstruction, in particular when `h` maps
    /// `K[f]` into the kernel of a central extension.
    pub fn factor(&self, h: &PXMorphism<A>) -> Result<PXMorphism<A>> {
        self.quotient.factor(h)
    }
}

pub fn centralize<A: Ambient>(f: &Extension<A>) -> Result<Centralization<A>> {
    let report = is_central(f)?;
    let kernel = report.obstruction.normal_closure();
    let closure_was_proper = kernel.order() != report.obstruction.order();
    let quotient = quotient_pxmod(&kernel)?;
    let induced = quotient.factor(f.morphism())?;
    Ok(Centralization {
        extension: Extension::new(induced)?,
        quotient,
        obstruction: report.obstruction,
        closure_was_proper,
    })
}

/// `X ×_Z Y` as a submodule of the direct product, with both projections.
#[derive(Clone, Debug)]
pub struct Pullback<A: Ambient> {
    pub module: PrecrossedModule<A>,
    pub first: PXMorphism<A>,
    pub second: PXMorphism<A>,
    pub product: SemidirectProduct<A>,
    /// Inclusion of the pullback object into the product object.
    pub inclusion: Hom<A>,
}

impl<A: Ambient> Pullback<A> {
    /// The element `(x, y)` of the pullback, if it lies there.
    pub fn element(&self, x: &A::Elem, y: &A::Elem) -> Option<A::Elem> {
        self.inclusion.lift(&self.product.pair(x, y))
    }
}

pub fn pullback<A: Ambient>(f: &PXMorphism<A>, g: &PXMorphism<A>) -> Result<Pullback<A>> {
    if f.target() != g.target() {
        return Err(Error::AmbientMismatch);
    }
    let (x, y) = (f.source().x(), g.source().x());
    let product = direct_product(x, y)?;
    let d = &product.object;
    let z = f.target().x();
    let pf = Hom::from_fn_unchecked(d.clone(), z.clone(), |e| f.apply(&A::split(x, y, e).0));
    let pg = Hom::from_fn_unchecked(d.clone(), z.clone(), |e| g.apply(&A::split(x, y, e).1));
    let eq = A::equalizer(d, z, pf.data(), pg.data());
    let (obj, incl) = d.sub_object(&eq);
    let obj = Arc::new(obj);
    let inclusion = Hom::new_unchecked(obj.clone(), d.clone(), incl);
    let b = f.source().b();
    let boundary = Hom::from_fn_unchecked(obj.clone(), b.clone(), |e| {
        f.source()
            .boundary()
            .apply(&A::split(x, y, &inclusion.apply(e)).0)
    });
    let action = Action::from_fn_unchecked(b.clone(), obj.clone(), |bb, e| {
        let (xe, ye) = A::split(x, y, &inclusion.apply(e));
        let moved = A::pair(x, y, &f.source().act(bb, &xe), &g.source().act(bb, &ye));
        inclusion.lift(&moved).expect("pullback is stable under the action")
    });
    let module = PrecrossedModule::new(boundary, action)
        .map_err(|e| Error::Invariant(format!("pullback is not a precrossed module: {e}")))?;
    let first = PXMorphism::new(
        module.clone(),
        f.source().clone(),
        Hom::from_fn_unchecked(obj.clone(), x.clone(), |e| {
            A::split(x, y, &inclusion.apply(e)).0
        }),
    )?;
    let second = PXMorphism::new(
        module.clone(),
        g.source().clone(),
        Hom::from_fn_unchecked(obj.clone(), y.clone(), |e| {
            A::split(x, y, &inclusion.apply(e)).1
        }),
    )?;
    Ok(Pullback {
        module,
        first,
        second,
        product,
        inclusion,
    })
}

#[derive(Clone, Debug)]
pub struct TrivialityReport<A: Ambient> {
    pub trivial: bool,
    /// `Y ×_{G(Y)} G(X)`.
    pub pullback: Pullback<A>,
    pub comparison: PXMorphism<A>,
}

/// Trivial iff `X → Y ×_{G(Y)} G(X)`, `x ↦ (f(x), η_X(x))`, is bijective,
/// where `G` is the crossed-module reflection.
pub fn is_trivial_extension<A: Ambient>(f: &Extension<A>) -> Result<TrivialityReport<A>> {
    let rx = reflect_to_xmod(f.source())?;
    let ry = reflect_to_xmod(f.target())?;
    let gf = rx.quotient.factor(&ry.unit.compose(f.morphism())?)?;
    let pb = pullback(&ry.unit, &gf)?;
    let map = Hom::from_fn_unchecked(f.source().x().clone(), pb.module.x().clone(), |e| {
        pb.element(&f.apply(e), &rx.unit.apply(e))
            .expect("naturality square commutes")
    });
    let comparison = PXMorphism::new(f.source().clone(), pb.module.clone(), map)?;
    Ok(TrivialityReport {
        trivial: comparison.is_iso(),
        pullback: pb,
        comparison,
    })
}

/// `[H, K]` for normal submodules with zero boundary, checked against the
/// normal closure of `⟨H, K⟩`.
pub fn relative_commutator<A: Ambient>(
    a: &PrecrossedModule<A>,
    h: &PXSubmodule<A>,
    k: &PXSubmodule<A>,
) -> Result<PXSubmodule<A>> {
    for (name, s) in [("H", h), ("K", k)] {
        if s.parent() != a {
            return Err(Error::AmbientMismatch);
        }
        if !s.is_normal() {
            return Err(Error::NotNormal(format!("{name} is not normal in X")));
        }
        if !s.has_zero_boundary() {
            return Err(Error::NonzeroBoundary(format!("∂ does not vanish on {name}")));
        }
    }
    let x = a.x();
    let huq = PXSubmodule::new(a, huq_carrier(&**x, h.carrier(), k.carrier()))?;
    let peiffer = peiffer_commutator(a, h, k)?.normal_closure();
    if peiffer.carrier() != huq.carrier() {
        return Err(Error::Invariant(format!(
            "normal closure of ⟨H, K⟩ has order {}, Huq commutator has order {}",
            peiffer.order(),
            huq.order()
        )));
    }
    Ok(huq)
}
