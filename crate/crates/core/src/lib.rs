//! Exact return probabilities of the one-dimensional Hadamard quantum walk,
//! the Legendre-polynomial closed form, and the complete-elliptic-integral
//! generating function, alongside the classical random-walk results they
//! are compared with.

pub mod classical;
pub mod error;
pub mod exact;
pub mod genfun;
pub mod path;
pub mod quadrature;
pub mod special;
pub mod walk;

pub use error::{Error, Result};
pub use exact::{DyadicRational, GaussianInteger, ScaledAmplitude, UnitEntry};
pub use walk::{CoinMatrix, Distribution, ExactCoin, FloatCoin, QubitState, WaveFunction};
