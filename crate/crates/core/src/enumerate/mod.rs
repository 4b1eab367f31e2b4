//! Exhaustive generation of small precrossed modules, extensions and double
//! extensions from a fixed catalog, and the named properties checked on them.

use std::sync::Arc;

use rayon::prelude::*;

use crate::ambient::{Action, Ambient, FiniteGroup, Hom, LieAlgebra, LieSpec};
use crate::error::Result;
use crate::galois::{make_double_extension, DoubleExtension, Extension, ShortExactSequence};
use crate::pxmod::{quotient_pxmod, PXMorphism, PXSubmodule, PrecrossedModule};

mod properties;

pub use properties::{verify_property, FailureWitness, Property, PropertyReport};

/// Default `|X|·|B|` bound for exhaustive runs.
pub const DEFAULT_BOUND: u64 = 48;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// A generated value with a human-readable provenance label.
#[derive(Clone, Debug)]
pub struct Labelled<T> {
    pub label: String,
    pub value: T,
}

/// Ordered, reproducible sequence of generated instances.
#[derive(Clone, Debug)]
pub struct InstanceStream<T> {
    pub items: Vec<Labelled<T>>,
}

impl<T> InstanceStream<T> {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Labelled<T>> {
        self.items.iter()
    }
}

/// Small ambient objects of one theory, by name.
#[derive(Clone, Debug)]
pub struct Catalog<A: Ambient> {
    pub objects: Vec<(String, Arc<A>)>,
    pub seed: u64,
}

/// Ambient theories with a built-in catalog.
pub trait CatalogTheory: Ambient {
    fn builtin_objects() -> Vec<(String, Self)>;
}

impl<A: CatalogTheory> Catalog<A> {
    pub fn builtin(seed: u64) -> Self {
        Self {
            objects: A::builtin_objects()
                .into_iter()
                .map(|(n, o)| (n, Arc::new(o)))
                .collect(),
            seed,
        }
    }

    pub fn get(&self, name: &str) -> Option<&Arc<A>> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }
}

fn direct(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    FiniteGroup::semidirect(a, b, &FiniteGroup::trivial_action(b, a)).expect("small product")
}

fn perms(gens: &[&[usize]]) -> FiniteGroup {
    let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
    FiniteGroup::from_permutations(&gens).expect("catalog permutations are valid")
}

impl CatalogTheory for FiniteGroup {
    fn builtin_objects() -> Vec<(String, Self)> {
        let c = FiniteGroup::cyclic;
        vec![
            ("0".into(), FiniteGroup::trivial()),
            ("Z2".into(), c(2)),
            ("Z3".into(), c(3)),
            ("Z4".into(), c(4)),
            ("Z2xZ2".into(), direct(&c(2), &c(2))),
            ("Z5".into(), c(5)),
            ("S3".into(), perms(&[&[1, 0, 2], &[1, 2, 0]])),
            ("Z6".into(), c(6)),
            ("Z7".into(), c(7)),
            ("Z8".into(), c(8)),
            ("Z4xZ2".into(), direct(&c(4), &c(2))),
            ("Z2xZ2xZ2".into(), direct(&direct(&c(2), &c(2)), &c(2))),
            ("D4".into(), perms(&[&[1, 2, 3, 0], &[0, 3, 2, 1]])),
            ("Q8".into(), quaternion()),
        ]
    }
}

/// The quaternion group via its regular representation. Labels:
/// 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
pub fn quaternion() -> FiniteGroup {
    perms(&[&[2, 3, 1, 0, 6, 7, 5, 4], &[4, 5, 7, 6, 1, 0, 2, 3]])
}

pub fn lie_from(p: u32, dim: usize, brackets: &[(usize, usize, Vec<i64>)]) -> LieSpec {
    let mut spec = LieSpec::abelian(p, dim);
    for (i, j, v) in brackets {
        spec.structure[*i][*j] = v.clone();
        spec.structure[*j][*i] = v.iter().map(|c| -c).collect();
    }
    spec
}

impl CatalogTheory for LieAlgebra {
    fn builtin_objects() -> Vec<(String, Self)> {
        let mut out = Vec::new();
        for p in [2u32, 3] {
            let mut specs = vec![
                ("0".to_string(), LieSpec::abelian(p, 0)),
                ("k".into(), LieSpec::abelian(p, 1)),
                ("k2".into(), LieSpec::abelian(p, 2)),
                ("r2".into(), lie_from(p, 2, &[(0, 1, vec![0, 1])])),
                ("k3".into(), LieSpec::abelian(p, 3)),
                ("heis".into(), lie_from(p, 3, &[(0, 1, vec![0, 0, 1])])),
                ("r2+k".into(), lie_from(p, 3, &[(0, 1, vec![0, 1, 0])])),
            ];
            if p == 3 {
                specs.push((
                    "sl2".into(),
                    lie_from(
                        3,
                        3,
                        &[
                            (0, 1, vec![0, 2, 0]),
                            (0, 2, vec![0, 0, -2]),
                            (1, 2, vec![1, 0, 0]),
                        ],
                    ),
                ));
            }
            for (name, spec) in specs {
                let alg = LieAlgebra::build(&spec).expect("catalog algebras are valid");
                out.push((format!("{name}/F{p}"), alg));
            }
        }
        out
    }
}

/// Lie algebras over different primes admit no maps at all; detect that
/// through the validity of the zero map.
fn compatible<A: Ambient>(x: &A, b: &A) -> bool {
    A::map_check(x, b, &A::map_from_fn(x, b, &|_| b.zero())).is_ok()
}

/// Every precrossed module `(∂: X → B, ξ)` with `X`, `B` from the catalog
/// and `|X|·|B| ≤ bound`: all actions, then all equivariant boundaries.
pub fn enumerate_pxmods<A: Ambient>(
    catalog: &Catalog<A>,
    bound: u64,
) -> Result<InstanceStream<PrecrossedModule<A>>> {
    crate::ambient::check_cap(bound)?;
    let mut items = Vec::new();
    for (bn, b) in &catalog.objects {
        for (xn, x) in &catalog.objects {
            if x.size().saturating_mul(b.size()) > bound || !compatible(&**x, &**b) {
                continue;
            }
            let boundaries = A::all_maps(x, b);
            for (ai, data) in A::all_actions(b, x).into_iter().enumerate() {
                let action = Action::new(b.clone(), x.clone(), data)?;
                for (di, d) in boundaries.iter().enumerate() {
                    let boundary = Hom::new(x.clone(), b.clone(), d.clone())?;
                    if let Ok(p) = PrecrossedModule::new(boundary, action.clone()) {
                        items.push(Labelled {
                            label: format!("{xn} -> {bn} [action {ai}, boundary {di}]"),
                            value: p,
                        });
                    }
                }
            }
        }
    }
    Ok(InstanceStream { items })
}

/// Every surjective morphism between enumerated modules over the same base.
pub fn enumerate_extensions<A: Ambient>(
    stream: &InstanceStream<PrecrossedModule<A>>,
) -> InstanceStream<Extension<A>> {
    let mut items = Vec::new();
    for (i, src) in stream.items.iter().enumerate() {
        for (j, tgt) in stream.items.iter().enumerate() {
            let (p, q) = (&src.value, &tgt.value);
            if !Arc::ptr_eq(p.b(), q.b()) || p.x().size() % q.x().size() != 0 {
                continue;
            }
            for (k, m) in PXMorphism::all(p, q)
                .into_iter()
                .filter(PXMorphism::is_surjective)
                .enumerate()
            {
                items.push(Labelled {
                    label: format!("#{i} -> #{j} [map {k}] ({} => {})", src.label, tgt.label),
                    value: Extension::new(m).expect("filtered for surjectivity"),
                });
            }
        }
    }
    InstanceStream { items }
}

/// One extension per quotient kernel of every module: `X ↠ X/N`.
///
/// Every surjection out of `X` is isomorphic under `X` to exactly one of
/// these, so kernel-level invariants lose nothing, while the pairwise
/// search of [`enumerate_extensions`] grows quadratically in the stream.
pub fn enumerate_quotient_extensions<A: Ambient>(
    stream: &InstanceStream<PrecrossedModule<A>>,
) -> Result<InstanceStream<Extension<A>>> {
    let per_module: Vec<Vec<Labelled<Extension<A>>>> = stream
        .items
        .par_iter()
        .enumerate()
        .map(|(i, inst)| {
            quotient_kernels(&inst.value)
                .iter()
                .enumerate()
                .map(|(k, n)| {
                    Ok(Labelled {
                        label: format!("#{i} / kernel {k} (order {}) ({})", n.order(), inst.label),
                        value: quotient_extension(n)?,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(InstanceStream {
        items: per_module.into_iter().flatten().collect(),
    })
}

/// Normal stable submodules on which `∂` vanishes: exactly the kernels of
/// extensions out of `p`.
pub fn quotient_kernels<A: Ambient>(p: &PrecrossedModule<A>) -> Vec<PXSubmodule<A>> {
    stable_subobjects(p)
        .into_iter()
        .filter(|s| s.is_normal() && s.has_zero_boundary())
        .collect()
}

/// Every stable subobject of `X`.
pub fn stable_subobjects<A: Ambient>(p: &PrecrossedModule<A>) -> Vec<PXSubmodule<A>> {
    p.x()
        .all_subobjects()
        .into_iter()
        .filter_map(|s| PXSubmodule::new(p, s).ok())
        .collect()
}

/// The quotient extension `X ↠ X / N`.
pub fn quotient_extension<A: Ambient>(n: &PXSubmodule<A>) -> Result<Extension<A>> {
    Extension::new(quotient_pxmod(n)?.projection)
}

/// For every module and every pair `(N₁, N₂)` of quotient kernels, the
/// square of quotients `X → X/N₁, X/N₂ → X/(N₁ ∨ N₂)`.
pub fn enumerate_double_extensions<A: Ambient>(
    stream: &InstanceStream<PrecrossedModule<A>>,
) -> Result<InstanceStream<DoubleExtension<A>>> {
    let mut items = Vec::new();
    for (i, inst) in stream.items.iter().enumerate() {
        let p = &inst.value;
        let kernels = quotient_kernels(p);
        for (a, n1) in kernels.iter().enumerate() {
            for (b, n2) in kernels.iter().enumerate() {
                let q1 = quotient_pxmod(n1)?;
                let q2 = quotient_pxmod(n2)?;
                let w = quotient_pxmod(&n1.join(n2)?)?;
                let h = Extension::new(q2.factor(&w.projection)?)?;
                let j = Extension::new(q1.factor(&w.projection)?)?;
                let f = Extension::new(q1.projection)?;
                let g = Extension::new(q2.projection)?;
                let square = make_double_extension(f, g, h, j)?;
                items.push(Labelled {
                    label: format!("#{i} kernels ({a}, {b}) ({})", inst.label),
                    value: square,
                });
            }
        }
    }
    Ok(InstanceStream { items })
}

/// Pairs (short exact sequence, presentation): for every extension
/// `p: P ↠ X` and every quotient kernel `N` of `X`, `0 → N → X → X/N → 0`.
pub fn enumerate_five_term_inputs<A: Ambient>(
    extensions: &InstanceStream<Extension<A>>,
) -> Result<InstanceStream<(ShortExactSequence<A>, Extension<A>)>> {
    let mut items = Vec::new();
    for (i, inst) in extensions.items.iter().enumerate() {
        let x = inst.value.target();
        for (k, n) in quotient_kernels(x).iter().enumerate() {
            let g = quotient_extension(n)?;
            let ses = ShortExactSequence::from_quotient(g.morphism().clone())?;
            items.push(Labelled {
                label: format!("extension #{i}, kernel {k} ({})", inst.label),
                value: (ses, inst.value.clone()),
            });
        }
    }
    Ok(InstanceStream { items })
}
