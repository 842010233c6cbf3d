//! Exact independent-set counting for linear hyperpaths, hyperstars and
//! hypercombs, with closed forms, recurrences and log-concavity tools.
//!
//! ```
//! use hyperseq::{formulas, hypergraph, enumerate};
//!
//! let h = hypergraph::uniform_hyperpath(3, 3).unwrap();
//! let brute = enumerate::brute_force_poly(&h).unwrap();
//! assert_eq!(brute, formulas::path_poly(3, 3).unwrap());
//! ```

pub mod bigjson;
pub mod combcert;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod hypergraph;
pub mod polyseq;

pub use enumerate::{CountVector, Enumerator};
pub use error::{Error, Result};
pub use hypergraph::{AttachedFamily, Hypergraph};
pub use polyseq::{IntPoly, SequenceReport};
