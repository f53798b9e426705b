//! Exact maximum k-defective clique search.
//!
//! A k-defective clique is a vertex set missing at most `k` of its possible
//! edges; `k = 0` gives ordinary cliques. [`kdc`] finds a largest one.
//!
//! ```
//! use kdc::{fixtures, kdc, SolverConfig};
//!
//! let g = fixtures::figure2();
//! let res = kdc(&g, &SolverConfig::new(2));
//! assert_eq!(res.size, 6);
//! assert!(res.optimal);
//! ```

pub mod bounds;
pub mod cli;
pub mod config;
pub mod decompose;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod preprocess;
pub mod reductions;
pub mod search;
pub mod verify;

pub use config::SolverConfig;
pub use error::{Error, Result};
pub use graph::{load_edge_list, parse_edge_list, Graph};
pub use instance::Instance;
pub use search::{kdc, kdc_t, top_r_diversified, SearchStats, SolverResult};
