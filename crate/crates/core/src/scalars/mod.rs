//! Exact scalars: ℚ and the cyclotomic fields ℚ(ζ_N).
//!
//! Every computation in the crate happens over one of these fields, with no
//! floating point anywhere. `Cyclo` values carry their order `N`; values of
//! different orders are promoted automatically when one order divides the other.

mod cyclo;
mod poly;
mod rational;

pub use cyclo::{euler_phi, Cyclo};
pub use poly::{cyclotomic_polynomial, Poly};
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic orders {0} and {1} have no common field without an explicit embedding")]
    IncompatibleOrders(u32, u32),
    #[error("ℚ(ζ_{from}) does not embed in ℚ(ζ_{to})")]
    NotEmbeddable { from: u32, to: u32 },
    #[error("a scalar of ℚ(ζ_{order}) needs {expected} coordinates, found {found}")]
    WrongLength { order: u32, expected: usize, found: usize },
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}

/// Field arithmetic on `a` and `b`; thin named wrapper over the operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn cyclo_arith(a: &Cyclo, b: &Cyclo, op: ArithOp) -> Result<Cyclo, ScalarError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}
