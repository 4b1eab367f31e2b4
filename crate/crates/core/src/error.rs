use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure names the invariant it violates; witnesses are rendered
/// to strings so the error type stays independent of the ambient theory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("order cap exceeded: construction needs {requested}, cap is {cap}")]
    CapExceeded { requested: u64, cap: u64 },
    #[error("malformed input: {0}")]
    BadSpec(String),
    #[error("subobject is not normal: {0}")]
    NotNormal(String),
    #[error("subobjects belong to different ambient objects")]
    AmbientMismatch,
    #[error("invalid action: {0}")]
    ActionInvalid(String),
    #[error("not a homomorphism: {0}")]
    NotHom(String),
    #[error("boundary is not equivariant: witness b = {b}, x = {x}")]
    NotEquivariant { b: String, x: String },
    #[error("Peiffer subobject is not stable under the action: {0}")]
    StabilityViolation(String),
    #[error("not a morphism of precrossed modules: {0}")]
    NotMorphism(String),
    #[error("map is not surjective: {0}")]
    NotSurjective(String),
    #[error("square does not commute: {0}")]
    NotCommuting(String),
    #[error("comparison map to the pullback is not surjective: {0} is not hit")]
    NotDouble(String),
    #[error("extension is not central: {0}")]
    NotCentral(String),
    #[error("not a short exact sequence: {0}")]
    NotShortExact(String),
    #[error("boundary is nonzero on submodule: {0}")]
    NonzeroBoundary(String),
    #[error("unknown property: {0}")]
    UnknownProperty(String),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}
