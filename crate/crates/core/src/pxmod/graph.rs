//! Reflexive graphs over `B` and their correspondence with precrossed
//! modules through semidirect products.

use std::sync::Arc;

use super::{PXMorphism, PrecrossedModule};
use crate::ambient::{
    huq_carrier, same_object, semidirect_product, Action, Ambient, Hom, SemidirectProduct,
};
use crate::error::{Error, Result};

/// `d, c: X₁ → B` with a common section `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflexiveGraph<A: Ambient> {
    pub x1: Arc<A>,
    pub b: Arc<A>,
    pub d: Hom<A>,
    pub c: Hom<A>,
    pub e: Hom<A>,
}

impl<A: Ambient> ReflexiveGraph<A> {
    pub fn new(d: Hom<A>, c: Hom<A>, e: Hom<A>) -> Result<Self> {
        let x1 = d.domain().clone();
        let b = d.codomain().clone();
        if !same_object(c.domain(), &x1)
            || !same_object(c.codomain(), &b)
            || !same_object(e.domain(), &b)
            || !same_object(e.codomain(), &x1)
        {
            return Err(Error::AmbientMismatch);
        }
        for g in b.spanning() {
            let eg = e.apply(&g);
            if d.apply(&eg) != g || c.apply(&eg) != g {
                return Err(Error::AxiomViolation(format!(
                    "d·e = 1 = c·e fails at {}",
                    b.render(&g)
                )));
            }
        }
        Ok(Self { x1, b, d, c, e })
    }

    pub fn kernel_d(&self) -> A::Sub {
        self.d.kernel()
    }

    pub fn kernel_c(&self) -> A::Sub {
        self.c.kernel()
    }
}

fn graph_from_product<A: Ambient>(
    p: &PrecrossedModule<A>,
    sd: &SemidirectProduct<A>,
) -> ReflexiveGraph<A> {
    let (x, b) = (p.x(), p.b());
    let c = Hom::from_fn_unchecked(sd.object.clone(), b.clone(), |e| {
        let (xe, be) = A::split(x, b, e);
        b.op(&p.boundary().apply(&xe), &be)
    });
    ReflexiveGraph {
        x1: sd.object.clone(),
        b: b.clone(),
        d: sd.projection.clone(),
        c,
        e: sd.section.clone(),
    }
}

/// `X₁ = X ⋊ B`, `d(x, b) = b`, `c(x, b) = ∂(x)·b`, `e(b) = (0, b)`,
/// returned with the semidirect product data (including `j_X`).
pub fn to_reflexive_graph<A: Ambient>(
    p: &PrecrossedModule<A>,
) -> Result<(ReflexiveGraph<A>, SemidirectProduct<A>)> {
    let sd = semidirect_product(p.x(), p.b(), p.action())?;
    let g = graph_from_product(p, &sd);
    if let Err(msg) = A::map_check(&g.x1, &g.b, g.c.data()) {
        return Err(Error::Invariant(format!("codomain map is not a homomorphism: {msg}")));
    }
    Ok((g, sd))
}

/// `f ⋊ 1_B: X ⋊ B → Y ⋊ B` for a morphism `f: X → Y`, with both products.
pub fn semidirect_map<A: Ambient>(
    f: &PXMorphism<A>,
) -> Result<(SemidirectProduct<A>, SemidirectProduct<A>, Hom<A>)> {
    let src = semidirect_product(f.source().x(), f.source().b(), f.source().action())?;
    let tgt = semidirect_product(f.target().x(), f.target().b(), f.target().action())?;
    let map = Hom::from_fn_unchecked(src.object.clone(), tgt.object.clone(), |e| {
        let (x, b) = src.split(e);
        tgt.pair(&f.apply(&x), &b)
    });
    Ok((src, tgt, map))
}

/// `X = K[d]`, `∂ = c` restricted, `ξ(b)(x) = e(b) x e(b)⁻¹` in `X₁`.
/// Returns the module and the inclusion `K[d] → X₁`.
pub fn normalize<A: Ambient>(g: &ReflexiveGraph<A>) -> Result<(PrecrossedModule<A>, Hom<A>)> {
    let (obj, incl) = g.x1.sub_object(&g.kernel_d());
    let obj = Arc::new(obj);
    let incl = Hom::new_unchecked(obj.clone(), g.x1.clone(), incl);
    let boundary = g.c.compose(&incl)?;
    let action = Action::from_fn_unchecked(g.b.clone(), obj, |b, x| {
        incl.lift(&g.x1.conj(&g.e.apply(b), &incl.apply(x)))
            .expect("K[d] is normal in X₁")
    });
    match PrecrossedModule::new(boundary, action) {
        Ok(p) => Ok((p, incl)),
        Err(e) => Err(Error::Invariant(format!(
            "normalization of a reflexive graph failed: {e}"
        ))),
    }
}

/// Quotient of a reflexive graph by the normal closure of `[K[d], K[c]]`.
#[derive(Clone, Debug)]
pub struct GraphReflection<A: Ambient> {
    pub graph: ReflexiveGraph<A>,
    pub projection: Hom<A>,
    pub closure_was_proper: bool,
    section: A::MapData,
}

impl<A: Ambient> GraphReflection<A> {
    pub fn lift(&self, q: &A::Elem) -> A::Elem {
        A::map_apply(&self.graph.x1, self.projection.domain(), &self.section, q)
    }
}

pub fn rg_reflection<A: Ambient>(g: &ReflexiveGraph<A>) -> GraphReflection<A> {
    let x1 = &g.x1;
    let huq = huq_carrier(&**x1, &g.kernel_d(), &g.kernel_c());
    let n = x1.normal_closure(&huq);
    let closure_was_proper = x1.sub_size(&n) != x1.sub_size(&huq);
    let (q, proj, section) = x1.quotient(&n);
    let q = Arc::new(q);
    let projection = Hom::new_unchecked(x1.clone(), q.clone(), proj);
    let lift = |e: &A::Elem| A::map_apply(&q, x1, &section, e);
    let d = Hom::from_fn_unchecked(q.clone(), g.b.clone(), |e| g.d.apply(&lift(e)));
    let c = Hom::from_fn_unchecked(q.clone(), g.b.clone(), |e| g.c.apply(&lift(e)));
    let e = projection.compose(&g.e).expect("section lands in X₁");
    GraphReflection {
        graph: ReflexiveGraph {
            x1: q,
            b: g.b.clone(),
            d,
            c,
            e,
        },
        projection,
        closure_was_proper,
        section,
    }
}

/// Whether `psi` is a bijective homomorphism `g1.x1 → g2.x1` commuting
/// with `d`, `c` and `e`.
pub fn graph_isomorphism<A: Ambient>(
    g1: &ReflexiveGraph<A>,
    g2: &ReflexiveGraph<A>,
    psi: &Hom<A>,
) -> std::result::Result<(), String> {
    if !same_object(&g1.b, &g2.b) {
        return Err("graphs live over different base objects".into());
    }
    if !same_object(psi.domain(), &g1.x1) || !same_object(psi.codomain(), &g2.x1) {
        return Err("comparison map has the wrong domain or codomain".into());
    }
    A::map_check(psi.domain(), psi.codomain(), psi.data())?;
    if !(psi.is_injective() && psi.is_surjective()) {
        return Err("comparison map is not bijective".into());
    }
    for x in g1.x1.spanning() {
        let y = psi.apply(&x);
        if g2.d.apply(&y) != g1.d.apply(&x) || g2.c.apply(&y) != g1.c.apply(&x) {
            return Err(format!(
                "comparison does not commute with d, c at {}",
                g1.x1.render(&x)
            ));
        }
    }
    for b in g1.b.spanning() {
        if psi.apply(&g1.e.apply(&b)) != g2.e.apply(&b) {
            return Err(format!(
                "comparison does not commute with e at {}",
                g1.b.render(&b)
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::FiniteGroup;

    #[test]
    fn identity_module_gives_order_36_graph() {
        let s = Arc::new(
            FiniteGroup::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap(),
        );
        let p = PrecrossedModule::identity_conjugation(&s);
        let (g, _) = to_reflexive_graph(&p).unwrap();
        assert_eq!(g.x1.order(), 36);
        assert_eq!(g.x1.sub_size(&g.kernel_d()), 6);
        assert_eq!(g.x1.sub_size(&g.kernel_c()), 6);
        let (q, _) = normalize(&g).unwrap();
        assert_eq!(q.x().order(), 6);
        assert!(q.is_crossed().crossed);
    }
}
