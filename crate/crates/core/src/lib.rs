//! Exact computations on the twisted Heisenberg-Virasoro algebra and its
//! Lie bialgebra structures.
//!
//! Everything is generic over a [`Scalar`]; the aliases below fix the exact
//! rational field [`Q`], which is what the verification suite uses.

pub mod algebra;
pub mod cobracket;
pub mod dual;
pub mod error;
pub mod expr;
pub mod lc;
pub mod linalg;
pub mod scalar;
pub mod tensor;
pub mod verify;
pub mod ybe;

pub use algebra::{
    bracket, bracket_basis, make_generator, BasisIndex, Element, GeneratorKind, Mode,
};
pub use cobracket::{apply_cobracket, cocycle_defect, cojacobi_defect, skew_defect, Cobracket};
pub use dual::{
    dual_bracket_closed, dual_bracket_oracle, pair, pair2, DualBracketFamily, DualElement,
    DualIndex, DualSector, RecurrenceFunctional,
};
pub use error::{Error, Result};
pub use expr::{format_element, parse_element, ParsedExpression};
pub use scalar::{q, Scalar, Q};
pub use tensor::{adjoint_action, Tensor2, Tensor3};
pub use verify::{run_all, run_check, CheckReport, Status};
pub use ybe::{classify_cybe, cybe_defect, hv_r_family, RSpec, ScanRow};

pub type QElement = Element<Q>;
pub type QTensor2 = Tensor2<Q>;
pub type QTensor3 = Tensor3<Q>;
pub type QDualElement = DualElement<Q>;
pub type QRecurrence = RecurrenceFunctional<Q>;
pub type QRSpec = RSpec<Q>;
pub type QCobracket = Cobracket<Q>;
pub type QFamily = DualBracketFamily<Q>;

pub type F64Element = Element<f64>;
pub type F64Tensor2 = Tensor2<f64>;
