pub mod constructions;
pub mod diagram;
pub mod hecke;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod tl;
