//! Exact scalars: rationals, generalized binomials, polynomials and rational linear algebra.

mod binom;
pub mod linalg;
mod poly;
mod rat;

pub use binom::{
    convolution_tuple_count, for_each_tuple, gen_binom, gen_multinom, multinom_convolution_check,
};
pub use poly::Poly;
pub use rat::{q, ParseRatError, Rat};
