//! m-spotty weight enumerators of byte error-control codes over finite
//! commutative Frobenius rings, their MacWilliams transforms, and the
//! brute-force oracles that check them.

pub mod code;
pub mod codespec;
pub mod cyclotomic;
pub mod enumerators;
pub mod error;
pub mod poly;
pub mod ring;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
