//! Exact rational and quadratic-field arithmetic behind the algebraic
//! certificates: polynomials, cyclotomic tests, trig tables, and
//! float-to-exact recognition.

mod angle;
mod minpoly;
mod poly;
mod quad;

pub use angle::{
    best_rational, exact_cos_pi, exact_sin_pi, recognize_quadratic, recognize_rational,
    recognize_value, rotation_order_of_rational_pi, AngleSpec, QuadRecognition, RationalApprox,
    Recognition,
};
pub use minpoly::{
    condition_c_for_rotation, condition_c_for_su2, condition_c_from_angle,
    condition_c_from_two_cos, condition_c_from_two_cos_exact, exact_order_from_two_cos,
    min_poly_from_trace, ConditionC,
};
pub use poly::{cyclotomic, euler_phi, is_root_of_unity, RatPoly, RootOfUnity};
pub use quad::{is_squarefree, QuadExt};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExactError {
    #[error("base {d} is not squarefree")]
    NotSquarefree { d: u64 },
    #[error("elements live in different quadratic fields (sqrt {d1} vs sqrt {d2})")]
    FieldMismatch { d1: u64, d2: u64 },
    #[error("polynomial division by zero")]
    DivisionByZero,
    #[error("polynomial division left a remainder")]
    InexactDivision,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not palindromic of even degree")]
    NotPalindromic,
    #[error("trace {value} is outside the rotation range [-2, 2]")]
    TraceOutOfRange { value: f64 },
}
