//! Sparse hitting set problems: exact solvers, approximation algorithms,
//! shortest-path cover machinery and hardness-reduction generators.

pub mod approx;
pub mod cli;
pub mod cnf;
pub mod error;
pub mod exact;
pub mod graph;
pub mod instance;
pub mod lp;
pub mod matching;
pub mod rational;
pub mod reductions;
pub mod twosat;

pub use error::{Error, Result};
pub use rational::Rational;
