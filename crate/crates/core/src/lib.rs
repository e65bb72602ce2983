//! Coefficient-based upper bounds on the number of zeros of a complex
//! polynomial in the disk `|z| <= δ`, with the hypothesis checks that license
//! them and two independent exact zero counters used to verify them.
//!
//! Coefficients are always stored in ascending order, `a_0` first.
//!
//! ```
//! use polyzero_core::{bounds, oracle, Polynomial};
//!
//! let p = Polynomial::from_real(&[1.0, 3.0, 5.0, 2.0]).unwrap();
//! let bound = bounds::best_bound(&p, 0.5).unwrap();
//! let exact = oracle::count_in_disk(&p, 0.5).unwrap();
//! assert!(exact.count <= bound.integer_bound);
//! ```

#![no_std]
// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod bounds;
pub mod families;
pub mod hypothesis;
pub mod oracle;
pub mod poly;

pub use bounds::{BoundError, BoundReport};
pub use families::{FamilyError, FamilySpec};
pub use hypothesis::{HypothesisReport, TheoremId, Witness};
pub use oracle::{CountMethod, DiskCountResult, OracleError, RootSet};
pub use poly::{Complex, PolyError, Polynomial};
