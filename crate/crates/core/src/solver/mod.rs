//! Stanley depth: exact search, closed forms and bounds.

mod cover;
mod exact;
mod formula;

use std::fmt;

pub use exact::{sdepth_decision, sdepth_exact, sdepth_exact_over, SolverConfig, DEFAULT_MAX_POSET};
pub use formula::{
    depth_closed_form, formula_sdepth, matching_cases, sdepth_bounds, DepthFormula, DepthResult,
    FormulaCase,
};

use crate::decomposition::{Sdepth, StanleyDecomposition};
use crate::error::Result;
use crate::monomial::QuotientModule;

/// How a Stanley depth value was obtained.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    ExactSearch,
    ClosedForm(FormulaCase),
    /// Lower and upper complete-intersection bounds coincide.
    BoundsCollapse,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::ExactSearch => f.write_str("exact-search"),
            Method::ClosedForm(c) => write!(f, "closed-form:{c}"),
            Method::BoundsCollapse => f.write_str("bounds-collapse"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdepthResult {
    pub value: Sdepth,
    /// When present, a decomposition whose Stanley depth is `value`.
    pub certificate: Option<StanleyDecomposition>,
    pub method: Method,
}

/// A closed form when one applies, else collapsing bounds, else exact search.
pub fn sdepth_auto(m: &QuotientModule, cfg: &SolverConfig) -> Result<SdepthResult> {
    if let Some((case, value)) = formula_sdepth(m) {
        return Ok(SdepthResult {
            value,
            certificate: None,
            method: Method::ClosedForm(case),
        });
    }
    if let Ok((lo, hi)) = sdepth_bounds(m) {
        if lo == hi {
            return Ok(SdepthResult {
                value: Sdepth::Finite(lo),
                certificate: None,
                method: Method::BoundsCollapse,
            });
        }
    }
    sdepth_exact(m, cfg)
}
