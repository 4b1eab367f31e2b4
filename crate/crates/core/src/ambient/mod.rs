//! Element-level algebra for the two ambient theories.
//!
//! Finite groups (dense Cayley tables) and finite-dimensional Lie algebras
//! over a prime field both implement [`Ambient`]. Everything above this
//! module is written once against that trait: precrossed modules, Peiffer
//! commutators, extensions and Hopf quotients never look at a Cayley table or
//! a structure-constant tensor directly.
//!
//! The trait is phrased in terms of the underlying group operation `op`
//! (multiplication, resp. addition of vectors) together with `conj`
//! (`a b a⁻¹`, resp. `[a, b]`) and `commutator` (`a b a⁻¹ b⁻¹`, resp.
//! `[a, b]`). With those, the Peiffer element `x y x⁻¹ (ᵈˣy)⁻¹` and its Lie
//! counterpart `[x, y] − ξ(∂x)(y)` are the same expression.

use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod group;
pub mod lie;
mod linalg;

pub use group::{FiniteGroup, GroupSpec, Subgroup};
pub use lie::{LieAlgebra, LieSpec, Subspace};

pub const DEFAULT_MAX_ORDER: u64 = 2048;
pub const DEFAULT_MAX_LIE_DIM: usize = 6;
pub const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

static MAX_ORDER: AtomicU64 = AtomicU64::new(DEFAULT_MAX_ORDER);
static MAX_LIE_DIM: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_LIE_DIM);

/// Largest group order any construction may produce.
pub fn max_order() -> u64 {
    MAX_ORDER.load(Ordering::Relaxed)
}

pub fn set_max_order(cap: u64) {
    MAX_ORDER.store(cap.max(1), Ordering::Relaxed);
}

/// Largest dimension accepted for a Lie algebra given as input. Derived
/// constructions (semidirect products, fibered products) may reach twice this.
pub fn max_lie_dim() -> usize {
    MAX_LIE_DIM.load(Ordering::Relaxed)
}

pub fn set_max_lie_dim(cap: usize) {
    MAX_LIE_DIM.store(cap.max(1), Ordering::Relaxed);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    Group,
    Lie,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theory::Group => write!(f, "group"),
            Theory::Lie => write!(f, "lie"),
        }
    }
}

/// Theory-neutral rendering of an element: a Cayley-table index or a
/// coordinate vector over F_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Index(usize),
    Vector(Vec<u32>),
}

impl fmt::Display for ElementRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementRepr::Index(i) => write!(f, "{i}"),
            ElementRepr::Vector(v) => {
                write!(f, "(")?;
                for (k, c) in v.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Isomorphism-type summary used in reports. Abelian groups get their
/// invariant factors; other groups only a fingerprint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Fingerprint {
    AbelianGroup {
        order: u64,
        invariant_factors: Vec<u64>,
    },
    Group {
        order: u64,
        exponent: u64,
        class_sizes: Vec<u64>,
    },
    Lie {
        prime: u32,
        dim: usize,
        derived_dim: usize,
        center_dim: usize,
    },
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fingerprint::AbelianGroup {
                invariant_factors, ..
            } => {
                if invariant_factors.is_empty() {
                    return write!(f, "0");
                }
                let parts: Vec<String> =
                    invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
                write!(f, "{}", parts.join(" x "))
            }
            Fingerprint::Group {
                order,
                exponent,
                class_sizes,
            } => write!(
                f,
                "nonabelian, order {order}, exponent {exponent}, class sizes {class_sizes:?}"
            ),
            Fingerprint::Lie {
                prime,
                dim,
                derived_dim,
                center_dim,
            } => write!(
                f,
                "Lie algebra of dim {dim} over F_{prime} (derived dim {derived_dim}, center dim {center_dim})"
            ),
        }
    }
}

/// One ambient object of a semi-abelian variety with enough structure to
/// compute with: a finite group or a finite-dimensional Lie algebra over F_p.
///
/// `Sub` values are canonical (equal carriers compare equal), which is what
/// lets the higher layers decide subobject equality by `==`.
pub trait Ambient: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;
    type Sub: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;
    type MapData: Clone + fmt::Debug + PartialEq + Eq + Send + Sync;
    type ActionData: Clone + fmt::Debug + PartialEq + Eq + Send + Sync;

    const THEORY: Theory;
    /// Groups close Peiffer generators to a subgroup, Lie algebras to an ideal.
    const PEIFFER_CLOSURE_IS_IDEAL: bool;

    fn size(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `a b a⁻¹`, resp. `[a, b]`.
    fn conj(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `a b a⁻¹ b⁻¹`, resp. `[a, b]`.
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Elements over which pairwise identities must be checked: every
    /// element of a group, a basis of a Lie algebra (identities are bilinear).
    fn spanning(&self) -> Vec<Self::Elem>;
    /// A generating set for normality checks and closure.
    fn generators(&self) -> Vec<Self::Elem>;
    /// Every element. Exponential in the dimension for Lie algebras.
    fn elements(&self) -> Vec<Self::Elem>;
    fn is_element(&self, e: &Self::Elem) -> bool;
    fn repr(&self, e: &Self::Elem) -> ElementRepr;
    fn parse(&self, r: &ElementRepr) -> Result<Self::Elem>;
    fn fingerprint(&self) -> Fingerprint;

    /// Smallest subobject (or normal subobject) containing `gens`.
    fn closure(&self, gens: &[Self::Elem], normal: bool) -> Self::Sub;
    fn sub_contains(&self, s: &Self::Sub, e: &Self::Elem) -> bool;
    fn sub_spanning(&self, s: &Self::Sub) -> Vec<Self::Elem>;
    fn sub_size(&self, s: &Self::Sub) -> u64;
    fn meet(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub;
    /// Materialises a subobject as an object, with its inclusion.
    fn sub_object(&self, s: &Self::Sub) -> (Self, Self::MapData);
    /// Quotient by a normal subobject: the object, the projection and a
    /// set-theoretic (resp. linear) section of the projection.
    fn quotient(&self, n: &Self::Sub) -> (Self, Self::MapData, Self::MapData);
    fn all_subobjects(&self) -> Vec<Self::Sub>;

    fn semidirect(x: &Self, b: &Self, action: &Self::ActionData) -> Result<Self>;
    fn pair(x: &Self, b: &Self, xe: &Self::Elem, be: &Self::Elem) -> Self::Elem;
    fn split(x: &Self, b: &Self, e: &Self::Elem) -> (Self::Elem, Self::Elem);

    fn map_from_fn(dom: &Self, cod: &Self, f: &dyn Fn(&Self::Elem) -> Self::Elem)
        -> Self::MapData;
    fn map_apply(dom: &Self, cod: &Self, data: &Self::MapData, e: &Self::Elem) -> Self::Elem;
    /// Shape and structure check; on failure a description with a witness.
    fn map_check(dom: &Self, cod: &Self, data: &Self::MapData) -> std::result::Result<(), String>;
    fn map_kernel(dom: &Self, cod: &Self, data: &Self::MapData) -> Self::Sub;
    fn map_preimage(dom: &Self, cod: &Self, data: &Self::MapData, s: &Self::Sub) -> Self::Sub;
    fn map_lift(dom: &Self, cod: &Self, data: &Self::MapData, y: &Self::Elem) -> Option<Self::Elem>;
    /// `{x : f(x) = g(x)}`.
    fn equalizer(dom: &Self, cod: &Self, f: &Self::MapData, g: &Self::MapData) -> Self::Sub;
    /// Every structure-preserving map `dom → cod`.
    fn all_maps(dom: &Self, cod: &Self) -> Vec<Self::MapData>;

    fn trivial_action(actor: &Self, acted: &Self) -> Self::ActionData;
    fn action_from_fn(
        actor: &Self,
        acted: &Self,
        f: &dyn Fn(&Self::Elem, &Self::Elem) -> Self::Elem,
    ) -> Self::ActionData;
    fn act(
        actor: &Self,
        acted: &Self,
        data: &Self::ActionData,
        b: &Self::Elem,
        x: &Self::Elem,
    ) -> Self::Elem;
    fn action_check(
        actor: &Self,
        acted: &Self,
        data: &Self::ActionData,
    ) -> std::result::Result<(), String>;
    /// Every action of `actor` on `acted`, without repetition.
    fn all_actions(actor: &Self, acted: &Self) -> Vec<Self::ActionData>;

    fn is_zero(&self, e: &Self::Elem) -> bool {
        *e == self.zero()
    }

    fn sub_is_trivial(&self, s: &Self::Sub) -> bool {
        self.sub_size(s) == 1
    }

    fn whole(&self) -> Self::Sub {
        self.closure(&self.generators(), false)
    }

    fn trivial(&self) -> Self::Sub {
        self.closure(&[], false)
    }

    fn is_subset(&self, a: &Self::Sub, b: &Self::Sub) -> bool {
        self.sub_spanning(a).iter().all(|e| self.sub_contains(b, e))
    }

    fn join(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        let mut gens = self.sub_spanning(a);
        gens.extend(self.sub_spanning(b));
        self.closure(&gens, false)
    }

    /// First conjugate `g s g⁻¹` (resp. bracket) escaping `s`, if any.
    fn normality_witness(&self, s: &Self::Sub) -> Option<(Self::Elem, Self::Elem)> {
        let members = self.sub_spanning(s);
        for g in self.generators() {
            for m in &members {
                if !self.sub_contains(s, &self.conj(&g, m)) {
                    return Some((g, m.clone()));
                }
            }
        }
        None
    }

    fn is_normal(&self, s: &Self::Sub) -> bool {
        self.normality_witness(s).is_none()
    }

    fn normal_closure(&self, s: &Self::Sub) -> Self::Sub {
        self.closure(&self.sub_spanning(s), true)
    }

    fn sub_elements(&self, s: &Self::Sub) -> Vec<Self::Elem> {
        self.elements()
            .into_iter()
            .filter(|e| self.sub_contains(s, e))
            .collect()
    }

    fn render(&self, e: &Self::Elem) -> String {
        self.repr(e).to_string()
    }
}

pub(crate) fn same_object<A: Ambient>(a: &Arc<A>, b: &Arc<A>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_cap(requested: u64) -> Result<()> {
    let cap = max_order();
    if requested > cap {
        Err(Error::CapExceeded { requested, cap })
    } else {
        Ok(())
    }
}

/// A structure-preserving map between two ambient objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hom<A: Ambient> {
    domain: Arc<A>,
    codomain: Arc<A>,
    data: A::MapData,
}

impl<A: Ambient> Hom<A> {
    pub fn new(domain: Arc<A>, codomain: Arc<A>, data: A::MapData) -> Result<Self> {
        A::map_check(&domain, &codomain, &data).map_err(Error::NotHom)?;
        Ok(Self {
            domain,
            codomain,
            data,
        })
    }

    pub(crate) fn new_unchecked(domain: Arc<A>, codomain: Arc<A>, data: A::MapData) -> Self {
        Self {
            domain,
            codomain,
            data,
        }
    }

    /// Builds the map from its values; the result is validated.
    pub fn from_fn(
        domain: Arc<A>,
        codomain: Arc<A>,
        f: impl Fn(&A::Elem) -> A::Elem,
    ) -> Result<Self> {
        let data = A::map_from_fn(&domain, &codomain, &f);
        Self::new(domain, codomain, data)
    }

    pub(crate) fn from_fn_unchecked(
        domain: Arc<A>,
        codomain: Arc<A>,
        f: impl Fn(&A::Elem) -> A::Elem,
    ) -> Self {
        let data = A::map_from_fn(&domain, &codomain, &f);
        Self::new_unchecked(domain, codomain, data)
    }

    pub fn identity(a: &Arc<A>) -> Self {
        Self::from_fn_unchecked(a.clone(), a.clone(), |e| e.clone())
    }

    pub fn zero(domain: &Arc<A>, codomain: &Arc<A>) -> Self {
        let z = codomain.zero();
        Self::from_fn_unchecked(domain.clone(), codomain.clone(), move |_| z.clone())
    }

    pub fn domain(&self) -> &Arc<A> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<A> {
        &self.codomain
    }

    pub fn data(&self) -> &A::MapData {
        &self.data
    }

    pub fn apply(&self, e: &A::Elem) -> A::Elem {
        A::map_apply(&self.domain, &self.codomain, &self.data, e)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Hom<A>) -> Result<Hom<A>> {
        if !same_object(&inner.codomain, &self.domain) {
            return Err(Error::AmbientMismatch);
        }
        Ok(Self::from_fn_unchecked(
            inner.domain.clone(),
            self.codomain.clone(),
            |e| self.apply(&inner.apply(e)),
        ))
    }

    pub fn image_of(&self, s: &A::Sub) -> A::Sub {
        let imgs: Vec<A::Elem> = self
            .domain
            .sub_spanning(s)
            .iter()
            .map(|e| self.apply(e))
            .collect();
        self.codomain.closure(&imgs, false)
    }

    pub fn image(&self) -> A::Sub {
        self.image_of(&self.domain.whole())
    }

    pub fn kernel(&self) -> A::Sub {
        A::map_kernel(&self.domain, &self.codomain, &self.data)
    }

    pub fn preimage(&self, s: &A::Sub) -> A::Sub {
        A::map_preimage(&self.domain, &self.codomain, &self.data, s)
    }

    pub fn lift(&self, y: &A::Elem) -> Option<A::Elem> {
        A::map_lift(&self.domain, &self.codomain, &self.data, y)
    }

    pub fn is_surjective(&self) -> bool {
        self.codomain.sub_size(&self.image()) == self.codomain.size()
    }

    pub fn is_injective(&self) -> bool {
        self.domain.sub_is_trivial(&self.kernel())
    }

    pub fn is_zero(&self) -> bool {
        self.domain
            .spanning()
            .iter()
            .all(|e| self.codomain.is_zero(&self.apply(e)))
    }

    /// Equality as maps; domains and codomains must agree.
    pub fn same_map(&self, other: &Hom<A>) -> bool {
        same_object(&self.domain, &other.domain)
            && same_object(&self.codomain, &other.codomain)
            && self.data == other.data
    }
}

/// An action of `actor` on `acted` by automorphisms (resp. derivations).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action<A: Ambient> {
    actor: Arc<A>,
    acted: Arc<A>,
    data: A::ActionData,
}

impl<A: Ambient> Action<A> {
    pub fn new(actor: Arc<A>, acted: Arc<A>, data: A::ActionData) -> Result<Self> {
        A::action_check(&actor, &acted, &data).map_err(Error::ActionInvalid)?;
        Ok(Self { actor, acted, data })
    }

    pub fn from_fn(
        actor: Arc<A>,
        acted: Arc<A>,
        f: impl Fn(&A::Elem, &A::Elem) -> A::Elem,
    ) -> Result<Self> {
        let data = A::action_from_fn(&actor, &acted, &f);
        Self::new(actor, acted, data)
    }

    pub(crate) fn from_fn_unchecked(
        actor: Arc<A>,
        acted: Arc<A>,
        f: impl Fn(&A::Elem, &A::Elem) -> A::Elem,
    ) -> Self {
        let data = A::action_from_fn(&actor, &acted, &f);
        Self { actor, acted, data }
    }

    /// τ: every element acts as the identity (resp. as the zero derivation).
    pub fn trivial(actor: &Arc<A>, acted: &Arc<A>) -> Self {
        Self {
            actor: actor.clone(),
            acted: acted.clone(),
            data: A::trivial_action(actor, acted),
        }
    }

    /// χ: conjugation of an object on itself.
    pub fn conjugation(a: &Arc<A>) -> Self {
        Self::from_fn_unchecked(a.clone(), a.clone(), |b, x| a.conj(b, x))
    }

    /// f*(ξ): precompose with `f: A' → actor`.
    pub fn pullback(&self, f: &Hom<A>) -> Result<Self> {
        if !same_object(f.codomain(), &self.actor) {
            return Err(Error::AmbientMismatch);
        }
        Ok(Self::from_fn_unchecked(
            f.domain().clone(),
            self.acted.clone(),
            |b, x| self.apply(&f.apply(b), x),
        ))
    }

    pub fn actor(&self) -> &Arc<A> {
        &self.actor
    }

    pub fn acted(&self) -> &Arc<A> {
        &self.acted
    }

    pub fn data(&self) -> &A::ActionData {
        &self.data
    }

    /// `ᵇx`, resp. `ξ(b)(x)`.
    pub fn apply(&self, b: &A::Elem, x: &A::Elem) -> A::Elem {
        A::act(&self.actor, &self.acted, &self.data, b, x)
    }

    pub fn is_stable(&self, s: &A::Sub) -> bool {
        self.stability_witness(s).is_none()
    }

    pub fn stability_witness(&self, s: &A::Sub) -> Option<(A::Elem, A::Elem)> {
        let members = self.acted.sub_spanning(s);
        for b in self.actor.spanning() {
            for m in &members {
                if !self.acted.sub_contains(s, &self.apply(&b, m)) {
                    return Some((b, m.clone()));
                }
            }
        }
        None
    }
}

/// A subobject together with the object it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subobject<A: Ambient> {
    ambient: Arc<A>,
    carrier: A::Sub,
}

impl<A: Ambient> Subobject<A> {
    pub fn new(ambient: Arc<A>, carrier: A::Sub) -> Self {
        Self { ambient, carrier }
    }

    pub fn ambient(&self) -> &Arc<A> {
        &self.ambient
    }

    pub fn carrier(&self) -> &A::Sub {
        &self.carrier
    }

    pub fn order(&self) -> u64 {
        self.ambient.sub_size(&self.carrier)
    }

    pub fn is_trivial(&self) -> bool {
        self.ambient.sub_is_trivial(&self.carrier)
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.ambient.size()
    }

    pub fn contains(&self, e: &A::Elem) -> bool {
        self.ambient.sub_contains(&self.carrier, e)
    }

    pub fn is_normal(&self) -> bool {
        self.ambient.is_normal(&self.carrier)
    }

    pub fn is_subset_of(&self, other: &Subobject<A>) -> Result<bool> {
        if !same_object(&self.ambient, &other.ambient) {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.ambient.is_subset(&self.carrier, &other.carrier))
    }
}

/// Smallest subobject (normal subobject) of `a` containing `gens`.
pub fn generated_subobject<A: Ambient>(
    a: &Arc<A>,
    gens: &[A::Elem],
    normal: bool,
) -> Result<Subobject<A>> {
    if let Some(bad) = gens.iter().find(|g| !a.is_element(g)) {
        return Err(Error::BadSpec(format!("{bad:?} is not an element of the ambient object")));
    }
    Ok(Subobject::new(a.clone(), a.closure(gens, normal)))
}

/// The quotient object together with its projection, whose kernel is `n`.
pub fn quotient_by<A: Ambient>(a: &Arc<A>, n: &Subobject<A>) -> Result<(Arc<A>, Hom<A>)> {
    if !same_object(a, &n.ambient) {
        return Err(Error::AmbientMismatch);
    }
    if let Some((g, m)) = a.normality_witness(&n.carrier) {
        return Err(Error::NotNormal(format!(
            "conjugating {} by {} leaves the subobject",
            a.render(&m),
            a.render(&g)
        )));
    }
    let (q, proj, _) = a.quotient(&n.carrier);
    let q = Arc::new(q);
    Ok((q.clone(), Hom::new_unchecked(a.clone(), q, proj)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeOp {
    Meet,
    Join,
}

pub fn lattice<A: Ambient>(
    a: &Arc<A>,
    m: &Subobject<A>,
    n: &Subobject<A>,
    op: LatticeOp,
) -> Result<Subobject<A>> {
    if !same_object(a, &m.ambient) || !same_object(a, &n.ambient) {
        return Err(Error::AmbientMismatch);
    }
    let carrier = match op {
        LatticeOp::Meet => a.meet(&m.carrier, &n.carrier),
        LatticeOp::Join => a.join(&m.carrier, &n.carrier),
    };
    Ok(Subobject::new(a.clone(), carrier))
}

/// (image in the codomain, kernel in the domain).
pub fn hom_image_kernel<A: Ambient>(f: &Hom<A>) -> (Subobject<A>, Subobject<A>) {
    (
        Subobject::new(f.codomain().clone(), f.image()),
        Subobject::new(f.domain().clone(), f.kernel()),
    )
}

/// `X ⋊_ξ B` with its point structure.
#[derive(Clone, Debug)]
pub struct SemidirectProduct<A: Ambient> {
    pub object: Arc<A>,
    pub acted: Arc<A>,
    pub actor: Arc<A>,
    /// `d`: projection onto the actor.
    pub projection: Hom<A>,
    /// `e`: `b ↦ (0, b)`.
    pub section: Hom<A>,
    /// `j_X`: `x ↦ (x, 0)`.
    pub injection: Hom<A>,
}

impl<A: Ambient> SemidirectProduct<A> {
    pub fn pair(&self, x: &A::Elem, b: &A::Elem) -> A::Elem {
        A::pair(&self.acted, &self.actor, x, b)
    }

    pub fn split(&self, e: &A::Elem) -> (A::Elem, A::Elem) {
        A::split(&self.acted, &self.actor, e)
    }
}

pub fn semidirect_product<A: Ambient>(
    x: &Arc<A>,
    b: &Arc<A>,
    action: &Action<A>,
) -> Result<SemidirectProduct<A>> {
    if !same_object(action.actor(), b) || !same_object(action.acted(), x) {
        return Err(Error::AmbientMismatch);
    }
    A::action_check(b, x, action.data()).map_err(Error::ActionInvalid)?;
    let object = Arc::new(A::semidirect(x, b, action.data())?);
    let projection = Hom::from_fn_unchecked(object.clone(), b.clone(), |e| A::split(x, b, e).1);
    let section = Hom::from_fn_unchecked(b.clone(), object.clone(), |e| A::pair(x, b, &x.zero(), e));
    let injection = Hom::from_fn_unchecked(x.clone(), object.clone(), |e| A::pair(x, b, e, &b.zero()));
    Ok(SemidirectProduct {
        object,
        acted: x.clone(),
        actor: b.clone(),
        projection,
        section,
        injection,
    })
}

/// Direct product, as the semidirect product for the trivial action.
pub fn direct_product<A: Ambient>(x: &Arc<A>, b: &Arc<A>) -> Result<SemidirectProduct<A>> {
    semidirect_product(x, b, &Action::trivial(b, x))
}

pub(crate) fn huq_generators<A: Ambient>(a: &A, m: &A::Sub, n: &A::Sub) -> Vec<A::Elem> {
    let ms = a.sub_spanning(m);
    let ns = a.sub_spanning(n);
    let mut gens = Vec::new();
    for x in &ms {
        for y in &ns {
            let c = a.commutator(x, y);
            if !a.is_zero(&c) {
                gens.push(c);
            }
        }
    }
    gens.sort();
    gens.dedup();
    gens
}

pub(crate) fn huq_carrier<A: Ambient>(a: &A, m: &A::Sub, n: &A::Sub) -> A::Sub {
    a.closure(&huq_generators(a, m, n), false)
}

/// Subobject generated by the commutators `[m, n]`; not normal-closed.
pub fn huq_commutator<A: Ambient>(
    a: &Arc<A>,
    m: &Subobject<A>,
    n: &Subobject<A>,
) -> Result<Subobject<A>> {
    if !same_object(a, &m.ambient) || !same_object(a, &n.ambient) {
        return Err(Error::AmbientMismatch);
    }
    Ok(Subobject::new(a.clone(), huq_carrier(&**a, &m.carrier, &n.carrier)))
}

/// Smallest subobject containing `gens` and closed under conjugation
/// (resp. bracket) by the members of `within`.
pub(crate) fn relative_normal_closure<A: Ambient>(a: &A, gens: &A::Sub, within: &A::Sub) -> A::Sub {
    let actors = a.sub_spanning(within);
    let mut current = gens.clone();
    loop {
        let members = a.sub_spanning(&current);
        let mut extra = Vec::new();
        for w in &actors {
            for m in &members {
                let c = a.conj(w, m);
                if !a.sub_contains(&current, &c) {
                    extra.push(c);
                }
            }
        }
        if extra.is_empty() {
            return current;
        }
        extra.extend(members);
        current = a.closure(&extra, false);
    }
}
