use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: size mismatch ({detail})")]
    SizeMismatch { op: &'static str, detail: String },

    #[error("{op}: shape mismatch ({detail})")]
    ShapeMismatch { op: &'static str, detail: String },

    #[error("homology: d∘d ≠ 0 at degree {degree}")]
    ComplexInvalid { degree: usize },

    #[error("{op}: matrix entries are not integral")]
    NotIntegral { op: &'static str },

    #[error("decompose: not a character, multiplicity of {lambda} is {value}")]
    NotACharacter { lambda: String, value: String },

    #[error("{op}: k = {k} is outside the stable range (need k ≥ {required})")]
    OutOfStableRange { op: &'static str, k: usize, required: usize },

    #[error("{op}: domain error ({detail})")]
    Domain { op: &'static str, detail: String },

    #[error("{op}: internal inconsistency ({detail})")]
    InternalInconsistency { op: &'static str, detail: String },

    #[error("{op}: degree {degree} is outside the window [0, {max_degree}]")]
    OutOfWindow { op: &'static str, degree: usize, max_degree: usize },

    #[error("{op}: window too small ({detail})")]
    WindowTooSmall { op: &'static str, detail: String },

    #[error("taylor_coefficient: no stabilization for n = {n} within the window; trajectory {trajectory}")]
    NotStabilized { n: usize, trajectory: String },

    #[error("coefficient_transition: unstable at k = {k} ({detail})")]
    Instability { k: usize, detail: String },

    #[error("dictionary_prediction: coefficient C_{n} is not concentrated in degree 0")]
    DictionaryInapplicable { n: usize },

    #[error("wedge_certificate: theorem violated for (n, k) = ({n}, {k}): {detail}")]
    TheoremViolation { n: usize, k: usize, detail: String },

    #[error("fi-module json: {0}")]
    Schema(String),
}
