//! Exact computations in `H_q(S_n)` at a primitive `e`-th root of unity.

pub mod adjunction;
pub mod algebra;
pub mod cyclotomic;
pub mod decomposition;
pub mod linalg;
pub mod mackey;
pub mod module;
pub mod perm;
pub mod radical;
pub mod specht;
pub mod vertex;

pub use algebra::HeckeAlgebra;
pub use cyclotomic::Cyclotomic;
pub use linalg::{Mat, SpanBasis, Vector};
pub use module::HModule;
