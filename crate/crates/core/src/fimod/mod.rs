//! FI-modules on a finite window and their calculus: truncations, polynomiality,
//! derivative complexes, Taylor coefficients and their representation-theoretic dictionary.

mod coefficients;
mod constructors;
mod cube;
mod dictionary;
mod json;
mod module;
mod truncation;

pub use coefficients::{
    coefficient_profile, coefficient_transition, delta_coefficient_shift_check, delta_complex, taylor_coefficient,
    CoefficientDegree, CoefficientProfile, GradedCoefficient,
};
pub use constructors::{free_module, representable};
pub use json::{from_json, to_json};
pub use module::{validate, validate_with, FiModule, ValidationReport, Violation, ViolationKind, DEFAULT_SAMPLES, DEFAULT_SEED};
pub use truncation::{
    cohomogeneous_layer, homogeneous_layer_representable, is_polynomial, pn_representable, q_truncation, CubeFailure,
    PolynomialCertificate, QTruncation,
};
pub use dictionary::{dictionary_prediction, representation_stability_check, stable_decomposition, StabilityReport};
