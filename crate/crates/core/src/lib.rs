//! Bipartite determinantal ideals: natural minor generators, direct
//! Buchberger verification, S-pair chain certificates, and tensor
//! flattening applications.

pub mod groebner;
pub mod minors;
pub mod poly;
pub mod quiver;
pub mod spair;
pub mod tensor;
