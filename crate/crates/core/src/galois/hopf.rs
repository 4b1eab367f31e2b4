//! Hopf-type subquotients: Galois groups, the H₂ and H₃ formulas and the
//! five-term exact sequence.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{is_central, DoubleExtension, Extension};
use crate::ambient::{relative_normal_closure, Ambient, Fingerprint, Subobject};
use crate::error::{Error, Result};
use crate::pxmod::{
    peiffer_commutator, quotient_pxmod, reflect_to_xmod, PXMorphism, PXSubmodule,
    PrecrossedModule, PxQuotient,
};

/// `numerator / denominator` inside some object `X`.
#[derive(Clone, Debug)]
pub struct HopfQuotient<A: Ambient> {
    pub numerator: Subobject<A>,
    /// Normal closure, inside the numerator, of the formula's denominator.
    pub denominator: Subobject<A>,
    pub quotient: Arc<A>,
    pub order: u64,
    pub fingerprint: Fingerprint,
    pub closure_was_proper: bool,
    /// The value equals the homology object only for a projective
    /// presentation, which finite input never is.
    pub projectivity_caveat: bool,
}

fn subquotient<A: Ambient>(
    x: &Arc<A>,
    numerator: &A::Sub,
    denominator: &A::Sub,
    projectivity_caveat: bool,
) -> Result<HopfQuotient<A>> {
    if !x.is_subset(denominator, numerator) {
        return Err(Error::Invariant(
            "denominator is not contained in the numerator".into(),
        ));
    }
    let den = relative_normal_closure(&**x, denominator, numerator);
    let closure_was_proper = x.sub_size(&den) != x.sub_size(denominator);
    let (nobj, incl) = x.sub_object(numerator);
    let den_inside = A::map_preimage(&nobj, x, &incl, &den);
    let (q, _, _) = nobj.quotient(&den_inside);
    Ok(HopfQuotient {
        numerator: Subobject::new(x.clone(), numerator.clone()),
        denominator: Subobject::new(x.clone(), den),
        order: q.size(),
        fingerprint: q.fingerprint(),
        quotient: Arc::new(q),
        closure_was_proper,
        projectivity_caveat,
    })
}

/// `Gal(f) = K[f] ∧ K[η_X]` for a central extension `f`.
pub fn galois_group<A: Ambient>(f: &Extension<A>) -> Result<HopfQuotient<A>> {
    let report = is_central(f)?;
    if !report.verdict {
        let w = report
            .witness
            .map(|w| f.source().x().render(&w))
            .unwrap_or_default();
        return Err(Error::NotCentral(format!("⟨K[f], X⟩ contains {w}")));
    }
    let x = f.source().x();
    let r = reflect_to_xmod(f.source())?;
    let numerator = x.meet(f.kernel().carrier(), r.kernel.carrier());
    subquotient(x, &numerator, &x.trivial(), false)
}

/// `K[η_X ∘ ker f]`, computed through the kernel object and mapped back into `X`.
pub fn galois_group_via_unit<A: Ambient>(f: &Extension<A>) -> Result<Subobject<A>> {
    let r = reflect_to_xmod(f.source())?;
    let (_, incl) = f.kernel().to_pxmod();
    let composite = r.unit.compose(&incl)?;
    let k = composite.map().kernel();
    Ok(Subobject::new(f.source().x().clone(), incl.map().image_of(&k)))
}

/// `(K[p] ∧ ⟨P, P⟩) / ⟨P, K[p]⟩`.
pub fn hopf_h2<A: Ambient>(p: &Extension<A>) -> Result<HopfQuotient<A>> {
    let pm = p.source();
    let whole = pm.whole();
    let pp = peiffer_commutator(pm, &whole, &whole)?;
    let numerator = p.kernel().meet(&pp)?;
    let denominator = peiffer_commutator(pm, &whole, p.kernel())?;
    subquotient(pm.x(), numerator.carrier(), denominator.carrier(), true)
}

/// `(K[q'] ∧ K[q] ∧ ⟨Q, Q⟩) / (⟨K[q] ∧ K[q'], Q⟩ ∨ ⟨K[q], K[q']⟩)` for the
/// top object `Q` of a double extension, `q = g` and `q' = f`.
pub fn hopf_h3<A: Ambient>(s: &DoubleExtension<A>) -> Result<HopfQuotient<A>> {
    let qm = s.top();
    let whole = qm.whole();
    let (kq, kq2) = (s.g.kernel(), s.f.kernel());
    let qq = peiffer_commutator(qm, &whole, &whole)?;
    let meet = kq2.meet(kq)?;
    let numerator = meet.meet(&qq)?;
    let denominator = peiffer_commutator(qm, &meet, &whole)?
        .join(&peiffer_commutator(qm, kq, kq2)?)?;
    subquotient(qm.x(), numerator.carrier(), denominator.carrier(), true)
}

/// `0 → K --f--> X --g--> Y → 0` with `f = ker g`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence<A: Ambient> {
    pub f: PXMorphism<A>,
    pub g: PXMorphism<A>,
}

impl<A: Ambient> ShortExactSequence<A> {
    pub fn new(f: PXMorphism<A>, g: PXMorphism<A>) -> Result<Self> {
        if f.target() != g.source() {
            return Err(Error::NotShortExact("f and g are not composable".into()));
        }
        if !f.is_injective() {
            return Err(Error::NotShortExact("f is not injective".into()));
        }
        if !g.is_surjective() {
            return Err(Error::NotShortExact("g is not surjective".into()));
        }
        if f.map().image() != g.map().kernel() {
            return Err(Error::NotShortExact("image of f differs from kernel of g".into()));
        }
        Ok(Self { f, g })
    }

    /// `0 → K[g] → X → Y → 0`.
    pub fn from_quotient(g: PXMorphism<A>) -> Result<Self> {
        let (_, incl) = g.kernel().to_pxmod();
        Self::new(incl, g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum ExactnessStatus {
    Exact,
    NotExact,
    NotChecked { reason: String },
}

impl ExactnessStatus {
    pub fn holds(&self) -> bool {
        !matches!(self, ExactnessStatus::NotExact)
    }
}

/// One node `numerator / denominator` of the sequence, computed inside the
/// ambient module and materialised as a quotient precrossed module.
#[derive(Clone, Debug)]
pub struct FiveTermNode<A: Ambient> {
    pub ambient: PrecrossedModule<A>,
    pub numerator: PXSubmodule<A>,
    pub denominator: PXSubmodule<A>,
    pub closure_was_proper: bool,
    pub inclusion: PXMorphism<A>,
    pub quotient: PxQuotient<A>,
}

impl<A: Ambient> FiveTermNode<A> {
    fn new(
        ambient: &PrecrossedModule<A>,
        numerator: PXSubmodule<A>,
        raw_denominator: PXSubmodule<A>,
    ) -> Result<Self> {
        let denominator = raw_denominator.normal_closure_within(&numerator)?;
        if !denominator.is_subset_of(&numerator)? {
            return Err(Error::Invariant(
                "five-term node denominator escapes its numerator".into(),
            ));
        }
        let closure_was_proper = denominator.order() != raw_denominator.order();
        let (_, inclusion) = numerator.to_pxmod();
        let inside = PXSubmodule::preimage_under(&inclusion, &denominator)?;
        let quotient = quotient_pxmod(&inside)?;
        Ok(Self {
            ambient: ambient.clone(),
            numerator,
            denominator,
            closure_was_proper,
            inclusion,
            quotient,
        })
    }

    pub fn module(&self) -> &PrecrossedModule<A> {
        &self.quotient.module
    }

    pub fn order(&self) -> u64 {
        self.quotient.module.x().size()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        self.quotient.module.x().fingerprint()
    }
}

#[derive(Clone, Debug)]
pub struct FiveTermSequence<A: Ambient> {
    pub nodes: Vec<FiveTermNode<A>>,
    /// Maps between consecutive nodes; `None` when the ambient map does not
    /// carry numerator into numerator and denominator into denominator.
    pub maps: Vec<Option<PXMorphism<A>>>,
    /// Composite of the maps out of node `i` and `i + 1` is zero, for `i = 0, 1, 2`.
    pub composites_zero: Vec<bool>,
    /// Per node; the last entry records surjectivity onto node 5.
    pub exactness: Vec<ExactnessStatus>,
}

impl<A: Ambient> FiveTermSequence<A> {
    pub fn all_checks_pass(&self) -> bool {
        self.maps.iter().all(Option::is_some)
            && self.composites_zero.iter().all(|&z| z)
            && self.exactness.iter().all(ExactnessStatus::holds)
    }
}

/// The sequence
/// `(K[p]∧⟨P,P⟩)/⟨P,K[p]⟩ → (K[gp]∧⟨P,P⟩)/⟨P,K[gp]⟩ → K/⟨K,X⟩ → X/⟨X,X⟩ → Y/⟨Y,Y⟩`
/// for a short exact sequence and a presentation `p: P ↠ X`. The middle
/// node is realised on `K[g] ⊆ X`, the image of `K`.
pub fn five_term<A: Ambient>(
    ses: &ShortExactSequence<A>,
    p: &Extension<A>,
) -> Result<FiveTermSequence<A>> {
    if p.target() != ses.g.source() {
        return Err(Error::NotShortExact(
            "presentation does not land on the middle object".into(),
        ));
    }
    let pm = p.source().clone();
    let xm = ses.g.source().clone();
    let ym = ses.g.target().clone();
    let gp = Extension::new(ses.g.compose(p.morphism())?)?;
    let pw = pm.whole();
    let pp = peiffer_commutator(&pm, &pw, &pw)?;
    let kg = ses.g.kernel();
    let xw = xm.whole();
    let yw = ym.whole();

    let nodes = vec![
        FiveTermNode::new(&pm, p.kernel().meet(&pp)?, peiffer_commutator(&pm, &pw, p.kernel())?)?,
        FiveTermNode::new(&pm, gp.kernel().meet(&pp)?, peiffer_commutator(&pm, &pw, gp.kernel())?)?,
        FiveTermNode::new(&xm, kg.clone(), peiffer_commutator(&xm, &kg, &xw)?)?,
        FiveTermNode::new(&xm, xw.clone(), peiffer_commutator(&xm, &xw, &xw)?)?,
        FiveTermNode::new(&ym, yw.clone(), peiffer_commutator(&ym, &yw, &yw)?)?,
    ];
    let phis = [
        PXMorphism::identity(&pm),
        p.morphism().clone(),
        PXMorphism::identity(&xm),
        ses.g.clone(),
    ];

    let mut maps = Vec::with_capacity(4);
    for (i, phi) in phis.iter().enumerate() {
        let (a, b) = (&nodes[i], &nodes[i + 1]);
        let num_ok = a.numerator.image_under(phi)?.is_subset_of(&b.numerator)?;
        let den_ok = a.denominator.image_under(phi)?.is_subset_of(&b.denominator)?;
        maps.push(if num_ok && den_ok {
            induced_map(a, b, phi).ok()
        } else {
            None
        });
    }

    let mut composites_zero = Vec::with_capacity(3);
    for i in 0..3 {
        let img = nodes[i]
            .numerator
            .image_under(&phis[i])?
            .image_under(&phis[i + 1])?;
        composites_zero.push(img.is_subset_of(&nodes[i + 2].denominator)?);
    }

    let not_checked = || ExactnessStatus::NotChecked {
        reason: "projectivity required".into(),
    };
    let mut exactness = vec![not_checked(), not_checked()];
    for i in 2..4 {
        let image = nodes[i - 1]
            .numerator
            .image_under(&phis[i - 1])?
            .join(&nodes[i].denominator)?;
        let kernel = PXSubmodule::preimage_under(&phis[i], &nodes[i + 1].denominator)?
            .meet(&nodes[i].numerator)?;
        exactness.push(verdict(image.carrier() == kernel.carrier()));
    }
    let image = nodes[3]
        .numerator
        .image_under(&phis[3])?
        .join(&nodes[4].denominator)?;
    exactness.push(verdict(image.carrier() == nodes[4].numerator.carrier()));

    Ok(FiveTermSequence {
        nodes,
        maps,
        composites_zero,
        exactness,
    })
}

fn verdict(ok: bool) -> ExactnessStatus {
    if ok {
        ExactnessStatus::Exact
    } else {
        ExactnessStatus::NotExact
    }
}

fn induced_map<A: Ambient>(
    a: &FiveTermNode<A>,
    b: &FiveTermNode<A>,
    phi: &PXMorphism<A>,
) -> Result<PXMorphism<A>> {
    let map = crate::ambient::Hom::from_fn(
        a.module().x().clone(),
        b.module().x().clone(),
        |q| {
            let e = a.inclusion.apply(&a.quotient.lift(q));
            let inner = b
                .inclusion
                .map()
                .lift(&phi.apply(&e))
                .expect("numerator maps into numerator");
            b.quotient.projection.apply(&inner)
        },
    )?;
    PXMorphism::new(a.module().clone(), b.module().clone(), map)
}
