//! Embedding obstructions for simplicial complexes.
//!
//! The library computes the Van Kampen embedding obstruction of a simplicial
//! n-complex in R^{2n} by exact arithmetic — deleted products, equivariant
//! cochain complexes, generic PL maps with exact intersection counts — plus
//! the companion machinery used to certify non-embeddability of the K_alpha
//! family: Magnus expansions, Massey products over Q, and exact linking
//! numbers of spatial graphs.

pub mod complex;
pub mod error;
pub mod families;
pub mod io;
pub mod linalg;
pub mod links;
pub mod magnus;
pub mod massey;
pub mod products;
pub mod vk;

pub use error::{Error, Result};
