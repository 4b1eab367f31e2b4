//! Double extensions: commutative squares of extensions
//!
//! ```text
//!   X --g--> Z
//!   |        |
//!   f        h
//!   v        v
//!   Y --j--> W
//! ```
//!
//! whose comparison map `X → Y ×_W Z` is surjective.

use super::{pullback, Extension, Pullback};
use crate::ambient::{Ambient, Hom};
use crate::error::{Error, Result};
use crate::pxmod::{
    peiffer_commutator, peiffer_generators, quotient_pxmod, PXSubmodule, PxQuotient,
};

#[derive(Clone, Debug)]
pub struct DoubleExtension<A: Ambient> {
    pub f: Extension<A>,
    pub g: Extension<A>,
    pub h: Extension<A>,
    pub j: Extension<A>,
    /// `Y ×_W Z`.
    pub pullback: Pullback<A>,
    pub comparison_surjective: bool,
}

pub fn make_double_extension<A: Ambient>(
    f: Extension<A>,
    g: Extension<A>,
    h: Extension<A>,
    j: Extension<A>,
) -> Result<DoubleExtension<A>> {
    if f.source() != g.source()
        || h.source() != g.target()
        || j.source() != f.target()
        || h.target() != j.target()
    {
        return Err(Error::AmbientMismatch);
    }
    let x = f.source().x();
    for e in x.spanning() {
        if h.apply(&g.apply(&e)) != j.apply(&f.apply(&e)) {
            return Err(Error::NotCommuting(format!(
                "h(g(x)) ≠ j(f(x)) at x = {}",
                x.render(&e)
            )));
        }
    }
    let pb = pullback(j.morphism(), h.morphism())?;
    let p = pb.module.x();
    let comparison = Hom::from_fn_unchecked(x.clone(), p.clone(), |e| {
        pb.element(&f.apply(e), &g.apply(e))
            .expect("square commutes")
    });
    let image = comparison.image();
    if let Some(missed) = p.spanning().into_iter().find(|e| !p.sub_contains(&image, e)) {
        let pair = pb.inclusion.apply(&missed);
        return Err(Error::NotDouble(pb.product.object.render(&pair)));
    }
    Ok(DoubleExtension {
        f,
        g,
        h,
        j,
        pullback: pb,
        comparison_surjective: true,
    })
}

impl<A: Ambient> DoubleExtension<A> {
    /// The same square read along the other diagonal.
    pub fn transpose(&self) -> Result<Self> {
        make_double_extension(
            self.g.clone(),
            self.f.clone(),
            self.j.clone(),
            self.h.clone(),
        )
    }

    pub fn top(&self) -> &crate::pxmod::PrecrossedModule<A> {
        self.f.source()
    }

    /// `K[f] ∧ K[g]`.
    pub fn kernel_meet(&self) -> PXSubmodule<A> {
        self.f
            .kernel()
            .meet(self.g.kernel())
            .expect("both kernels live in the top object")
    }
}

#[derive(Clone, Debug)]
pub struct DoubleCentralityReport<A: Ambient> {
    pub verdict: bool,
    /// `⟨K[f] ∧ K[g], X⟩`.
    pub meet_obstruction: PXSubmodule<A>,
    /// `⟨K[f], K[g]⟩`.
    pub kernel_obstruction: PXSubmodule<A>,
    pub meet_witness: Option<A::Elem>,
    pub kernel_witness: Option<A::Elem>,
}

pub fn is_double_central<A: Ambient>(s: &DoubleExtension<A>) -> Result<DoubleCentralityReport<A>> {
    let x = s.top();
    let meet = s.kernel_meet();
    let whole = x.whole();
    let meet_obstruction = peiffer_commutator(x, &meet, &whole)?;
    let kernel_obstruction = peiffer_commutator(x, s.f.kernel(), s.g.kernel())?;
    Ok(DoubleCentralityReport {
        verdict: meet_obstruction.is_trivial() && kernel_obstruction.is_trivial(),
        meet_witness: peiffer_generators(x, meet.carrier(), whole.carrier())
            .into_iter()
            .next(),
        kernel_witness: peiffer_generators(x, s.f.kernel().carrier(), s.g.kernel().carrier())
            .into_iter()
            .next(),
        meet_obstruction,
        kernel_obstruction,
    })
}

#[derive(Clone, Debug)]
pub struct DoubleCentralization<A: Ambient> {
    pub square: DoubleExtension<A>,
    pub quotient: PxQuotient<A>,
    /// `⟨K[f] ∧ K[g], X⟩ ∨ ⟨K[f], K[g]⟩`.
    pub join: PXSubmodule<A>,
    pub closure_was_proper: bool,
    /// Whether the join lies in `K[f] ∧ K[g]`.
    pub join_within_meet: bool,
}

/// Quotients the top object by the normal closure of
/// `⟨K[f] ∧ K[g], X⟩ ∨ ⟨K[f], K[g]⟩`; the other corners are unchanged.
pub fn double_centralize<A: Ambient>(s: &DoubleExtension<A>) -> Result<DoubleCentralization<A>> {
    let report = is_double_central(s)?;
    let join = report
        .meet_obstruction
        .join(&report.kernel_obstruction)?;
    let join_within_meet = join.is_subset_of(&s.kernel_meet())?;
    if !join_within_meet {
        return Err(Error::Invariant(
            "double-centralization kernel escapes K[f] ∧ K[g]".into(),
        ));
    }
    let kernel = join.normal_closure();
    let closure_was_proper = kernel.order() != join.order();
    let quotient = quotient_pxmod(&kernel)?;
    let f = Extension::new(quotient.factor(s.f.morphism())?)?;
    let g = Extension::new(quotient.factor(s.g.morphism())?)?;
    let square = make_double_extension(f, g, s.h.clone(), s.j.clone())?;
    Ok(DoubleCentralization {
        square,
        quotient,
        join,
        closure_was_proper,
        join_within_meet,
    })
}
