//! Exact integer linear algebra: big-integer polynomials, fraction-free
//! matrix algorithms, and Sturm-sequence real root isolation.

pub mod matrix;
pub mod poly;
pub mod roots;
