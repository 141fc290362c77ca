//! Exact computational algebra for the Goldman–Turaev / Kashiwara–Vergne calculus in genus zero.

pub mod cyclic;
pub mod dbk;
pub mod deriv;
pub mod dvg;
pub mod error;
pub mod expans;
pub mod grp;
pub mod json;
pub mod kv;
pub mod linalg;
pub mod ncalg;
pub mod suites;

pub use error::{AlgebraError, Result};
