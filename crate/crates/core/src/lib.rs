//! Exact-arithmetic toolkit for matrix representations of the braid group `B_n`.

pub mod braid;
pub mod certify;
pub mod field;
pub mod friendship;
pub mod linalg;
pub mod reduction;
