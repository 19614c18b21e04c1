//! Toric geometry: fans, divisor positivity, and Frobenius pushforward
//! decompositions.

mod fan;
mod linalg;
mod positivity;
mod pushforward;

pub use fan::{Fan, FanViolation, ToricDivisor, ToricError};
pub use positivity::{divisor_positivity, PositivityVerdict, PositivityWitness};
pub use pushforward::{
    bx_ample, bx_dual_ample, frobenius_cokernel, frobenius_pushforward, CokernelVerdict,
    LineBundleDecomposition, SummandWitness, MAX_SUMMANDS,
};
