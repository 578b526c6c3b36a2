//! Exact minimisation of weighted two-colour subgraph-density objectives on
//! small host graphs: graph plumbing, colouring counts, homomorphism counts,
//! the weighted objective itself, exhaustive and local search, and a
//! closed-form expectation under random edge deletion.

pub mod canon;
pub mod chromatic;
pub mod envelope;
pub mod graph;
pub mod graph6;
pub mod hom;
pub mod numbers;
pub mod objective;
pub mod perturb;
pub mod rng;
pub mod search;
