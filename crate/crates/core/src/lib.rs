//! Spectrum graph coloring.
//!
//! A spectrum is an ordered set of colors with a symmetric matrix `W` of
//! pairwise interferences. Coloring a graph induces at each vertex `v` the
//! interference `I_v = Σ_{u ∈ N(v)} W(c(u), c(v))`. Two problems are solved
//! here:
//!
//! * threshold spectrum coloring: with `k` colors, minimize `max_v I_v`;
//! * chromatic spectrum coloring: with threshold `t`, minimize the number of
//!   colors such that every `I_v <= t`.
//!
//! All interference values are exact rationals.

pub mod bounds;
mod coloring;
mod error;
pub mod generate;
mod graph;
pub mod harmony;
pub mod interference;
pub mod oracle;
pub mod rational;
mod report;
mod seed;
pub mod solvers;
mod spectrum;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
pub use report::{SolveReport, Strategy};
pub use seed::RngSeed;
pub use spectrum::Spectrum;
