//! JSON instance documents and their resolution into library values.
//!
//! Declarations are arrays of named entries, processed in order; a name
//! must be declared before anything refers to it. Elements are written as
//! a table index (groups) or a coordinate vector (Lie algebras); a bare
//! index also works for Lie algebras, read as base-p digits.

use std::collections::BTreeMap;
use std::sync::Arc;

use peiffer_core::ambient::{
    direct_product, Action, Ambient, ElementRepr, FiniteGroup, GroupSpec, Hom, LieAlgebra,
    LieSpec, Theory,
};
use peiffer_core::galois::{make_double_extension, DoubleExtension, Extension};
use peiffer_core::pxmod::{quotient_pxmod, PXMorphism, PXSubmodule, PrecrossedModule, PxQuotient};
use peiffer_core::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct InstanceDocument {
    #[serde(default)]
    pub objects: Vec<ObjectDecl>,
    #[serde(default)]
    pub actions: Vec<ActionDecl>,
    #[serde(default)]
    pub pxmods: Vec<PxmodDecl>,
    #[serde(default)]
    pub morphisms: Vec<MorphismDecl>,
    #[serde(default)]
    pub squares: Vec<SquareDecl>,
    #[serde(default)]
    pub task: Option<TaskDecl>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ObjectDecl {
    pub name: String,
    #[serde(flatten)]
    pub def: ObjectDef,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectDef {
    /// Multiplication table rows; element 0 is the identity.
    Table(Vec<Vec<usize>>),
    /// Permutations of `0..n` as image lists.
    Permutations(Vec<Vec<usize>>),
    Cyclic(usize),
    /// `structure[i][j][k]`: coefficient of `e_k` in `[e_i, e_j]`.
    Lie { prime: u32, structure: Vec<Vec<Vec<i64>>> },
    AbelianLie { prime: u32, dim: usize },
    /// Direct product of two earlier objects.
    Product([String; 2]),
}

impl ObjectDef {
    fn theory(&self) -> Option<Theory> {
        match self {
            ObjectDef::Table(_) | ObjectDef::Permutations(_) | ObjectDef::Cyclic(_) => {
                Some(Theory::Group)
            }
            ObjectDef::Lie { .. } | ObjectDef::AbelianLie { .. } => Some(Theory::Lie),
            ObjectDef::Product(_) => None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionDecl {
    pub name: String,
    pub actor: String,
    pub acted: String,
    #[serde(flatten)]
    pub def: ActionDef,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ActionDef {
    Trivial,
    /// The actor acting on itself by conjugation (resp. adjoint action).
    Conjugation,
    /// `images[i][j]` is the `i`-th spanning element of the actor applied to
    /// the `j`-th spanning element of the acted object. Spanning elements
    /// are all elements of a group, the basis of a Lie algebra.
    Table { images: Vec<Vec<ElementRepr>> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PxmodDecl {
    pub name: String,
    #[serde(flatten)]
    pub def: PxmodDef,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PxmodDef {
    /// Boundary images on the spanning elements of the acted object.
    Module { action: String, boundary: Vec<ElementRepr> },
    ZeroBoundary { action: String },
    IdentityConjugation { object: String },
    /// Quotient of an earlier module by the normal submodule generated by `by`.
    Quotient { of: String, by: Vec<ElementRepr> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismDecl {
    pub name: String,
    #[serde(flatten)]
    pub def: MorphismDef,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MorphismDef {
    /// Images of the spanning elements of the source's `X`.
    Map {
        source: String,
        target: String,
        images: Vec<ElementRepr>,
    },
    /// The canonical projection onto a module declared as a quotient.
    Projection { quotient: String },
    Identity { of: String },
    /// `outer ∘ inner`.
    Compose { outer: String, inner: String },
    /// Induced map between two quotients of the same module, `X/N₁ → X/N₂`.
    Induced { from: String, to: String },
}

/// ```text
///   X --g--> Z
///   f        h
///   Y --j--> W
/// ```
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SquareDecl {
    pub name: String,
    pub f: String,
    pub g: String,
    pub h: String,
    pub j: String,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct TaskDecl {
    #[serde(default)]
    pub op: Option<String>,
    #[serde(default)]
    pub args: TaskArgs,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct TaskArgs {
    pub pxmod: Option<String>,
    pub m: Option<SubSpec>,
    pub n: Option<SubSpec>,
    pub h: Option<SubSpec>,
    pub k: Option<SubSpec>,
    pub extension: Option<String>,
    pub square: Option<String>,
    /// Quotient map `g: X ↠ Y` of the short exact sequence.
    pub sequence: Option<String>,
    /// Presentation `p: P ↠ X`.
    pub presentation: Option<String>,
}

/// `"whole"`, `"trivial"` or the stable submodule generated by elements.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubSpec {
    Named(String),
    Generated {
        generators: Vec<ElementRepr>,
        #[serde(default)]
        normal: bool,
    },
}

impl InstanceDocument {
    pub fn theory(&self) -> Result<Theory> {
        let mut found: Option<Theory> = None;
        for o in &self.objects {
            if let Some(t) = o.def.theory() {
                if found.is_some_and(|f| f != t) {
                    return Err(Error::BadSpec(format!(
                        "objects[{}] ({}) mixes group and Lie declarations",
                        index_of(&self.objects, &o.name),
                        o.name
                    )));
                }
                found = Some(t);
            }
        }
        Ok(found.unwrap_or(Theory::Group))
    }
}

fn index_of(objects: &[ObjectDecl], name: &str) -> usize {
    objects.iter().position(|o| o.name == name).unwrap_or(0)
}

/// Object constructors specific to one theory.
pub trait DocTheory: Ambient {
    fn build_object(def: &ObjectDef) -> Result<Self>;
}

impl DocTheory for FiniteGroup {
    fn build_object(def: &ObjectDef) -> Result<Self> {
        match def {
            ObjectDef::Table(rows) => FiniteGroup::build(&GroupSpec::Table(rows.clone())),
            ObjectDef::Permutations(gens) => FiniteGroup::build(&GroupSpec::Permutations(gens.clone())),
            ObjectDef::Cyclic(n) if *n > 0 => Ok(FiniteGroup::cyclic(*n)),
            ObjectDef::Cyclic(_) => Err(Error::BadSpec("cyclic group of order 0".into())),
            _ => Err(Error::BadSpec("not a group declaration".into())),
        }
    }
}

impl DocTheory for LieAlgebra {
    fn build_object(def: &ObjectDef) -> Result<Self> {
        match def {
            ObjectDef::Lie { prime, structure } => LieAlgebra::build(&LieSpec {
                prime: *prime,
                structure: structure.clone(),
            }),
            ObjectDef::AbelianLie { prime, dim } => LieAlgebra::build(&LieSpec::abelian(*prime, *dim)),
            _ => Err(Error::BadSpec("not a Lie algebra declaration".into())),
        }
    }
}

/// A fully resolved document.
pub struct Loaded<A: Ambient> {
    pub objects: BTreeMap<String, Arc<A>>,
    pub actions: BTreeMap<String, Action<A>>,
    pub pxmods: BTreeMap<String, PrecrossedModule<A>>,
    pub quotients: BTreeMap<String, PxQuotient<A>>,
    pub morphisms: BTreeMap<String, PXMorphism<A>>,
    pub squares: BTreeMap<String, SquareDecl>,
    pub task: TaskDecl,
}

fn located(section: &str, i: usize, name: &str, e: Error) -> Error {
    let at = |m: String| format!("{section}[{i}] ({name}): {m}");
    match e {
        Error::BadSpec(m) => Error::BadSpec(at(m)),
        Error::AxiomViolation(m) => Error::AxiomViolation(at(m)),
        Error::NotHom(m) => Error::NotHom(at(m)),
        Error::ActionInvalid(m) => Error::ActionInvalid(at(m)),
        Error::NotNormal(m) => Error::NotNormal(at(m)),
        Error::NotMorphism(m) => Error::NotMorphism(at(m)),
        Error::NotEquivariant { b, x } => Error::NotEquivariant {
            b,
            x: format!("{x} (in {section}[{i}] {name})"),
        },
        Error::NonzeroBoundary(m) => Error::NonzeroBoundary(at(m)),
        Error::NotSurjective(m) => Error::NotSurjective(at(m)),
        e @ Error::Invariant(_) => e,
        other => Error::BadSpec(at(other.to_string())),
    }
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| Error::BadSpec(format!("unknown {kind} '{name}'")))
}

fn insert<T>(map: &mut BTreeMap<String, T>, kind: &str, name: &str, value: T) -> Result<()> {
    if map.insert(name.to_string(), value).is_some() {
        return Err(Error::BadSpec(format!("{kind} '{name}' declared twice")));
    }
    Ok(())
}

pub fn parse_elements<A: Ambient>(a: &A, reprs: &[ElementRepr]) -> Result<Vec<A::Elem>> {
    reprs.iter().map(|r| a.parse(r)).collect()
}

/// Map given by images of the domain's spanning elements.
fn hom_from_images<A: Ambient>(dom: &Arc<A>, cod: &Arc<A>, images: &[ElementRepr]) -> Result<Hom<A>> {
    let span = dom.spanning();
    if images.len() != span.len() {
        return Err(Error::BadSpec(format!(
            "expected {} images, got {}",
            span.len(),
            images.len()
        )));
    }
    let parsed = parse_elements(&**cod, images)?;
    Hom::from_fn(dom.clone(), cod.clone(), |e| {
        span.iter()
            .position(|s| s == e)
            .map(|i| parsed[i].clone())
            .unwrap_or_else(|| cod.zero())
    })
}

pub fn submodule<A: Ambient>(p: &PrecrossedModule<A>, spec: &SubSpec) -> Result<PXSubmodule<A>> {
    match spec {
        SubSpec::Named(s) if s == "whole" => Ok(p.whole()),
        SubSpec::Named(s) if s == "trivial" => Ok(p.trivial()),
        SubSpec::Named(s) => Err(Error::BadSpec(format!(
            "submodule must be \"whole\", \"trivial\" or {{\"generators\": [...]}}, got \"{s}\""
        ))),
        SubSpec::Generated { generators, normal } => {
            let gens = parse_elements(&**p.x(), generators)?;
            Ok(PXSubmodule::generated(p, &gens, *normal))
        }
    }
}

pub fn load<A: DocTheory>(doc: &InstanceDocument) -> Result<Loaded<A>> {
    let mut out = Loaded {
        objects: BTreeMap::new(),
        actions: BTreeMap::new(),
        pxmods: BTreeMap::new(),
        quotients: BTreeMap::new(),
        morphisms: BTreeMap::new(),
        squares: BTreeMap::new(),
        task: doc.task.clone().unwrap_or_default(),
    };
    for (i, o) in doc.objects.iter().enumerate() {
        let built = match &o.def {
            ObjectDef::Product([a, b]) => {
                let a = lookup(&out.objects, "object", a)?;
                let b = lookup(&out.objects, "object", b)?;
                direct_product(a, b).map(|sd| sd.object)
            }
            def => A::build_object(def).map(Arc::new),
        }
        .map_err(|e| located("objects", i, &o.name, e))?;
        insert(&mut out.objects, "object", &o.name, built)?;
    }
    for (i, a) in doc.actions.iter().enumerate() {
        let action = build_action(&out, a).map_err(|e| located("actions", i, &a.name, e))?;
        insert(&mut out.actions, "action", &a.name, action)?;
    }
    for (i, p) in doc.pxmods.iter().enumerate() {
        let built = build_pxmod(&out, &p.def).map_err(|e| located("pxmods", i, &p.name, e))?;
        if let Some(q) = &built.1 {
            out.quotients.insert(p.name.clone(), q.clone());
        }
        insert(&mut out.pxmods, "pxmod", &p.name, built.0)?;
    }
    for (i, m) in doc.morphisms.iter().enumerate() {
        let built = build_morphism(&out, &m.def).map_err(|e| located("morphisms", i, &m.name, e))?;
        insert(&mut out.morphisms, "morphism", &m.name, built)?;
    }
    for s in &doc.squares {
        for part in [&s.f, &s.g, &s.h, &s.j] {
            lookup(&out.morphisms, "morphism", part)?;
        }
        insert(&mut out.squares, "square", &s.name, s.clone())?;
    }
    Ok(out)
}

fn build_action<A: DocTheory>(out: &Loaded<A>, a: &ActionDecl) -> Result<Action<A>> {
    let actor = lookup(&out.objects, "object", &a.actor)?;
    let acted = lookup(&out.objects, "object", &a.acted)?;
    match &a.def {
        ActionDef::Trivial => Ok(Action::trivial(actor, acted)),
        ActionDef::Conjugation => {
            if a.actor != a.acted {
                return Err(Error::BadSpec(
                    "conjugation needs the actor and the acted object to coincide".into(),
                ));
            }
            Ok(Action::conjugation(actor))
        }
        ActionDef::Table { images } => {
            let bs = actor.spanning();
            let xs = acted.spanning();
            if images.len() != bs.len() || images.iter().any(|row| row.len() != xs.len()) {
                return Err(Error::BadSpec(format!(
                    "action table must be {} rows of {} images",
                    bs.len(),
                    xs.len()
                )));
            }
            let parsed: Vec<Vec<A::Elem>> = images
                .iter()
                .map(|row| parse_elements(&**acted, row))
                .collect::<Result<_>>()?;
            Action::from_fn(actor.clone(), acted.clone(), |b, x| {
                match (bs.iter().position(|s| s == b), xs.iter().position(|s| s == x)) {
                    (Some(i), Some(j)) => parsed[i][j].clone(),
                    _ => acted.zero(),
                }
            })
        }
    }
}

fn build_pxmod<A: DocTheory>(
    out: &Loaded<A>,
    def: &PxmodDef,
) -> Result<(PrecrossedModule<A>, Option<PxQuotient<A>>)> {
    match def {
        PxmodDef::Module { action, boundary } => {
            let action = lookup(&out.actions, "action", action)?;
            let d = hom_from_images(action.acted(), action.actor(), boundary)?;
            Ok((PrecrossedModule::new(d, action.clone())?, None))
        }
        PxmodDef::ZeroBoundary { action } => {
            let action = lookup(&out.actions, "action", action)?;
            Ok((PrecrossedModule::with_zero_boundary(action.clone()), None))
        }
        PxmodDef::IdentityConjugation { object } => {
            let b = lookup(&out.objects, "object", object)?;
            Ok((PrecrossedModule::identity_conjugation(b), None))
        }
        PxmodDef::Quotient { of, by } => {
            let p = lookup(&out.pxmods, "pxmod", of)?;
            let gens = parse_elements(&**p.x(), by)?;
            let q = quotient_pxmod(&PXSubmodule::generated(p, &gens, true))?;
            Ok((q.module.clone(), Some(q)))
        }
    }
}

fn build_morphism<A: DocTheory>(out: &Loaded<A>, def: &MorphismDef) -> Result<PXMorphism<A>> {
    match def {
        MorphismDef::Map {
            source,
            target,
            images,
        } => {
            let s = lookup(&out.pxmods, "pxmod", source)?;
            let t = lookup(&out.pxmods, "pxmod", target)?;
            let map = hom_from_images(s.x(), t.x(), images)?;
            PXMorphism::new(s.clone(), t.clone(), map)
        }
        MorphismDef::Projection { quotient } => Ok(lookup(&out.quotients, "quotient pxmod", quotient)?
            .projection
            .clone()),
        MorphismDef::Identity { of } => Ok(PXMorphism::identity(lookup(&out.pxmods, "pxmod", of)?)),
        MorphismDef::Compose { outer, inner } => {
            let o = lookup(&out.morphisms, "morphism", outer)?;
            let i = lookup(&out.morphisms, "morphism", inner)?;
            o.compose(i)
        }
        MorphismDef::Induced { from, to } => {
            let a = lookup(&out.quotients, "quotient pxmod", from)?;
            let b = lookup(&out.quotients, "quotient pxmod", to)?;
            a.factor(&b.projection)
        }
    }
}

impl<A: Ambient> Loaded<A> {
    pub fn pxmod(&self, name: Option<&String>) -> Result<&PrecrossedModule<A>> {
        let name = name.ok_or_else(|| Error::BadSpec("task needs argument 'pxmod'".into()))?;
        lookup(&self.pxmods, "pxmod", name)
    }

    pub fn extension(&self, arg: &str, name: Option<&String>) -> Result<Extension<A>> {
        let name = name.ok_or_else(|| Error::BadSpec(format!("task needs argument '{arg}'")))?;
        Extension::new(lookup(&self.morphisms, "morphism", name)?.clone())
    }

    pub fn square(&self, name: Option<&String>) -> Result<DoubleExtension<A>> {
        let name = name.ok_or_else(|| Error::BadSpec("task needs argument 'square'".into()))?;
        let s = lookup(&self.squares, "square", name)?;
        let ext = |n: &String| Extension::new(self.morphisms[n].clone());
        make_double_extension(ext(&s.f)?, ext(&s.g)?, ext(&s.h)?, ext(&s.j)?)
    }
}
