//! Sums and products of units with a prescribed multiplicative order.
//!
//! The crate is split into:
//!
//! - [`arith`]: factorization, modular arithmetic and the classical
//!   arithmetic functions φ, λ, μ.
//! - [`order`]: multiplicative orders and brute-force enumeration of
//!   index classes (the ground truth every closed form is checked against).
//! - [`convolution`]: exact-rational arithmetical functions under Dirichlet
//!   and lcm convolution.
//! - [`theorems`]: closed-form congruences for the sum and the product of an
//!   index class.

pub mod arith;
pub mod convolution;
pub mod order;
pub mod rational;
pub mod theorems;

pub use arith::Factorization;
pub use convolution::ArithFn;
pub use order::{IndexClassSummary, ModulusProfile};
pub use rational::Rational;
pub use theorems::{CongruencePrediction, TheoremId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("argument must be positive")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("not a canonical factorization")]
    InvalidFactorization,
    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(u64, u64),
    #[error("integer overflow")]
    Overflow,
    #[error("index undefined for non-units: gcd({0}, {1}) != 1")]
    NotAUnit(u64, u64),
    #[error("function is not Dirichlet-invertible: f(1) = 0")]
    NotInvertible,
    #[error("empty index class: {delta} does not divide lambda({modulus}) = {lambda}")]
    EmptyClass { modulus: u64, delta: u64, lambda: u64 },
    #[error("closed form does not apply: {0}")]
    NotApplicable(&'static str),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
