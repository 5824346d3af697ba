//! Exact reconstruction of the genus-2 Shimura curves `X_D` and the genus-2
//! Atkin-Lehner quotients `X_D / <w_m>`, together with the sieves that select
//! the right model among the candidates produced by gluing elliptic curves
//! along their 2-torsion.

pub mod arith;
pub mod curvedb;
pub mod elliptic;
pub mod error;
pub mod gluing;
pub mod pipeline;
pub mod quadforms;
pub mod reference;
pub mod shimura;
pub mod sieves;

pub use error::{Error, Result};
