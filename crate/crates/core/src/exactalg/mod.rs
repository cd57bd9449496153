//! Exact arithmetic kernel: big rationals, integer polynomials in `t`,
//! the field Q(t), and exact linear algebra over both.

mod matrix;
mod poly;
mod ratfunc;

pub use matrix::{FieldMatrix, Matrix, PolyMatrix};
pub use poly::{IntPoly, QPoly};
pub use ratfunc::RatFunc;
