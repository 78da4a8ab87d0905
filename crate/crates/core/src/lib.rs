//! Stanley depth of quotients `J/I` of monomial ideals.
//!
//! * [`monomial`]: monomials, ideals, quotient modules and complete-intersection pairing.
//! * [`poset`]: characteristic posets and interval partitions.
//! * [`solver`]: exact Stanley depth by interval-partition search, closed forms and bounds.
//! * [`builders`]: explicit Stanley decompositions for the structured cases.
//! * [`verify`]: independent checking of any claimed decomposition.
//! * [`certificate`]: the on-disk certificate format.
//! * [`papercheck`]: the reproducibility suite run by `sdepth paper-check`.
//!
//! With the default `parallel` feature the partition search, the coverage
//! sweep and the suite's instance batches run on rayon; without it everything
//! is sequential.

pub mod builders;
pub mod certificate;
pub mod decomposition;
pub mod error;
pub mod instances;
pub mod monomial;
pub mod papercheck;
pub mod par;
pub mod poset;
pub mod solver;
pub mod text;
pub mod verify;

pub use decomposition::{Sdepth, StanleyDecomposition, StanleySpace};
pub use error::{Error, Result};
pub use monomial::{ci_align, minimalize, Monomial, MonomialIdeal, QuotientModule, VarSet};
pub use par::Parallelism;
pub use solver::{sdepth_exact, SdepthResult, SolverConfig};
pub use text::{parse_ideal, parse_module, parse_monomial};
pub use verify::{verify, VerifyReport};
