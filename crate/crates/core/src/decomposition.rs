use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{canonical_cmp, Monomial, QuotientModule, VarSet};

/// Stanley depth value. The zero module has no Stanley spaces and gets
/// [`Sdepth::Infinity`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sdepth {
    Finite(usize),
    Infinity,
}

impl Sdepth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Sdepth::Finite(k) => Some(k),
            Sdepth::Infinity => None,
        }
    }
}

impl fmt::Display for Sdepth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sdepth::Finite(k) => write!(f, "{k}"),
            Sdepth::Infinity => f.write_str("infinity"),
        }
    }
}

/// The Stanley space `root · K[free]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StanleySpace {
    pub root: Monomial,
    pub free: VarSet,
}

impl StanleySpace {
    pub fn new(root: Monomial, free: VarSet) -> Self {
        StanleySpace { root, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// `w = root · m` with `m` a monomial in the free variables.
    pub fn contains_exps(&self, w: &[u32]) -> bool {
        self.root
            .exps()
            .iter()
            .zip(w)
            .enumerate()
            .all(|(i, (&r, &x))| x == r || (x > r && self.free.contains(i)))
    }

    pub fn contains(&self, w: &Monomial) -> bool {
        self.contains_exps(w.exps())
    }

    /// Multiply the root by `m`.
    pub fn shifted(&self, m: &Monomial) -> StanleySpace {
        StanleySpace::new(self.root.mul(m), self.free)
    }
}

impl fmt::Debug for StanleySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formats as `x1*K[x1,x2]`; an empty free set prints as `K[]`.
impl fmt::Display for StanleySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*K[", self.root)?;
        for (k, i) in self.free.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        f.write_str("]")
    }
}

pub(crate) fn space_cmp(a: &StanleySpace, b: &StanleySpace) -> Ordering {
    canonical_cmp(&a.root, &b.root).then_with(|| a.free.cmp(&b.free))
}

/// A claimed Stanley decomposition of a module over the subring `K[ring]`.
///
/// The module's generators must only involve variables of `ring`; the
/// decomposition then describes the monomials of `J \ I` that use only
/// those variables. Nothing here checks that the spaces are correct; that is
/// the verifier's job.
#[derive(Clone, PartialEq, Eq)]
pub struct StanleyDecomposition {
    module: QuotientModule,
    ring: VarSet,
    spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    pub fn new(module: QuotientModule, ring: VarSet, spaces: Vec<StanleySpace>) -> Result<Self> {
        let n = module.n();
        if !ring.is_subset(VarSet::full(n)) {
            return Err(Error::domain(format!("ring {ring} exceeds {n} variables")));
        }
        if !module.support().is_subset(ring) {
            return Err(Error::domain(format!(
                "module {module} uses variables outside the ring {ring}"
            )));
        }
        if let Some(s) = spaces.iter().find(|s| s.root.n() != n) {
            return Err(Error::RingMismatch {
                expected: n,
                found: s.root.n(),
            });
        }
        Ok(StanleyDecomposition {
            module,
            ring,
            spaces,
        })
    }

    /// A decomposition over the full polynomial ring.
    pub fn over_full_ring(module: QuotientModule, spaces: Vec<StanleySpace>) -> Result<Self> {
        let ring = VarSet::full(module.n());
        StanleyDecomposition::new(module, ring, spaces)
    }

    pub fn module(&self) -> &QuotientModule {
        &self.module
    }

    pub fn ring(&self) -> VarSet {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.module.n()
    }

    pub fn spaces(&self) -> &[StanleySpace] {
        &self.spaces
    }

    pub fn into_spaces(self) -> Vec<StanleySpace> {
        self.spaces
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    /// Minimum space dimension, [`Sdepth::Infinity`] when there are no spaces.
    pub fn sdepth(&self) -> Sdepth {
        self.spaces
            .iter()
            .map(StanleySpace::dim)
            .min()
            .map_or(Sdepth::Infinity, Sdepth::Finite)
    }

    /// Sort spaces by root, then free set.
    pub fn sorted(mut self) -> Self {
        self.spaces.sort_by(space_cmp);
        self
    }

    /// Move from a compressed `ring.len()`-variable ring into `n` variables.
    pub fn embed(&self, n: usize, ring: VarSet) -> StanleyDecomposition {
        let inner: Vec<usize> = ring.iter().collect();
        let spaces = self
            .spaces
            .iter()
            .map(|s| {
                StanleySpace::new(
                    s.root.embed(n, ring),
                    s.free.iter().map(|k| inner[k]).collect(),
                )
            })
            .collect();
        let outer_ring = self.ring.iter().map(|k| inner[k]).collect();
        StanleyDecomposition {
            module: self.module.embed(n, ring),
            ring: outer_ring,
            spaces,
        }
    }
}

impl fmt::Debug for StanleyDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formats as `x1*K[x1,x2] + x2*K[x2,x3]`; empty decompositions print `0`.
impl fmt::Display for StanleyDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.spaces.is_empty() {
            return f.write_str("0");
        }
        for (k, s) in self.spaces.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
