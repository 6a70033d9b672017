//! Exact arithmetic in Q and in the cyclotomic fields Q(ζ_N).
//!
//! Roots of unity are compatible across conductors: `ζ_N^{N/m}` is the
//! chosen primitive m-th root for every multiple N of m, so
//! `ζ_{lm}^l = ζ_m` holds by construction.

mod cyclotomic;
mod rational;
mod scalar;

pub use cyclotomic::{cyclotomic_poly, euler_phi, max_conductor, DEFAULT_MAX_CONDUCTOR, MAX_CONDUCTOR_ENV};
pub use rational::Rational;
pub use scalar::CycScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {conductor} exceeds the configured bound {bound}")]
    ConductorTooLarge { conductor: u32, bound: u32 },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
}

/// Binary field operation selector for [`scalar_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(a: &CycScalar, b: &CycScalar, op: ArithOp) -> Result<CycScalar, FieldError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

pub fn primitive_root(m: u32) -> Result<CycScalar, FieldError> {
    CycScalar::primitive_root(m)
}

pub fn embed_conductor(a: &CycScalar, n: u32) -> Result<CycScalar, FieldError> {
    a.embed(n)
}
