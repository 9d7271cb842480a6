//! Exact enumeration of two-row Young tableaux with walls and of lattice
//! paths bounded by a periodic staircase.
//!
//! Every counting sequence is reachable through several independent routes
//! (brute-force tableaux, path DP, determinants, an inclusion-exclusion
//! recursion, and generating functions built from symmetric functions of
//! kernel roots). All arithmetic is exact.

pub mod arith;
pub mod cli;

pub mod counting;
pub mod error;
pub mod genfun;
pub mod paths;
pub mod series;
pub mod tableaux;
pub mod tutte;

pub use arith::{binomial, catalan, ExactInteger, ExactRational};
pub use error::{Error, Result};
pub use paths::{LatticePath, Point, ReversePartition, Step};
pub use series::TruncatedSeries;


pub use tableaux::{WallTableau, YoungBuilding};
pub use tutte::BivariatePolynomial;
