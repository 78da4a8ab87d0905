//! Independent certification of Stanley decompositions.
//!
//! Three checks, all exact:
//! 1. each space lies inside `J \ I` ([`check_space`]),
//! 2. spaces are pairwise disjoint ([`check_disjoint`]),
//! 3. every monomial of `J \ I` in a finite box lies in exactly one space.
//!
//! The box is `[0, ĝ]` with `ĝ_i = 1 + max` exponent of `x_i` over the
//! generators of `J`, `I` and all roots. Every membership predicate involved
//! compares `w_i` against thresholds `< ĝ_i`, so it only depends on
//! `min(w_i, ĝ_i)`; coverage of the box implies coverage of all monomials.

use std::fmt;

use crate::decomposition::{Sdepth, StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, QuotientModule, VarSet};
use crate::par::{fold_range, Parallelism};

/// Maximum number of witnesses kept in a report.
pub const MAX_WITNESSES: usize = 16;

/// Largest box the coverage sweep will enumerate.
pub const MAX_BOX: u64 = 1 << 26;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    /// A space contains a monomial outside `J \ I`.
    Containment,
    /// Two spaces share a monomial.
    Overlap,
    /// A monomial of `J \ I` lies in no space.
    Gap,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::Containment => "containment",
            ViolationKind::Overlap => "overlap",
            ViolationKind::Gap => "gap",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// A monomial exhibiting the violation.
    pub monomial: Monomial,
    /// Indices of the spaces involved (empty for gaps).
    pub spaces: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind, self.monomial)?;
        if !self.spaces.is_empty() {
            let idx: Vec<String> = self.spaces.iter().map(|i| format!("#{i}")).collect();
            write!(f, " (spaces {})", idx.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    /// At most [`MAX_WITNESSES`] violations.
    pub violations: Vec<Violation>,
    /// Exact number of violations found across all phases.
    pub total_violations: usize,
    /// `min |Z|` over the spaces, present when `ok`.
    pub sdepth: Option<Sdepth>,
}

/// The monomial `lcm(root, v)` when it witnesses `v`'s multiples entering the space.
fn ideal_hit(space: &StanleySpace, v: &Monomial) -> Option<Monomial> {
    let blocked = v
        .exps()
        .iter()
        .zip(space.root.exps())
        .enumerate()
        .any(|(j, (&ve, &re))| ve > re && !space.free.contains(j));
    (!blocked).then(|| space.root.lcm(v))
}

fn space_violation(space: &StanleySpace, module: &QuotientModule, ring: VarSet) -> Option<Monomial> {
    if !space.root.support().is_subset(ring) || !space.free.is_subset(ring) || !module.contains(&space.root) {
        return Some(space.root.clone());
    }
    module.i().gens().iter().find_map(|v| ideal_hit(space, v))
}

/// `space ⊆ J \ I`: the root is in `J \ I` and for every generator `v` of `I`
/// some non-free coordinate has `v_j > root_j`.
pub fn check_space(space: &StanleySpace, module: &QuotientModule) -> bool {
    space_violation(space, module, VarSet::full(module.n())).is_none()
}

/// A common monomial of the two spaces, if any.
///
/// With `L = lcm(roots)`, the spaces meet iff `L` lies in both.
pub fn common_monomial(s1: &StanleySpace, s2: &StanleySpace) -> Option<Monomial> {
    let l = s1.root.lcm(&s2.root);
    (s1.contains(&l) && s2.contains(&l)).then_some(l)
}

/// The spaces share no monomial.
pub fn check_disjoint(s1: &StanleySpace, s2: &StanleySpace) -> bool {
    common_monomial(s1, s2).is_none()
}

#[derive(Default)]
struct Tally {
    witnesses: Vec<(usize, Violation)>,
    total: usize,
}

impl Tally {
    fn push(&mut self, key: usize, v: Violation) {
        self.total += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push((key, v));
        } else if let Some(pos) = self.witnesses.iter().position(|(k, _)| *k > key) {
            // keep the smallest keys so parallel runs report the same witnesses
            self.witnesses.insert(pos, (key, v));
            self.witnesses.pop();
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.witnesses.extend(other.witnesses);
        self.witnesses.sort_by_key(|(k, _)| *k);
        self.witnesses.truncate(MAX_WITNESSES);
        self
    }
}

/// Box caps `ĝ` restricted to the decomposition's ring.
pub fn coverage_box(d: &StanleyDecomposition) -> Vec<u32> {
    let n = d.n();
    let mut cap = vec![0u32; n];
    let m = d.module();
    let roots = d.spaces().iter().map(|s| &s.root);
    for g in m.j().gens().iter().chain(m.i().gens()).chain(roots) {
        for (c, &e) in cap.iter_mut().zip(g.exps()) {
            *c = (*c).max(e);
        }
    }
    for (i, c) in cap.iter_mut().enumerate() {
        *c = if d.ring().contains(i) { *c + 1 } else { 0 };
    }
    cap
}

fn decode(mut idx: usize, cap: &[u32], out: &mut [u32]) {
    for (o, &c) in out.iter_mut().zip(cap) {
        let r = c as usize + 1;
        *o = (idx % r) as u32;
        idx /= r;
    }
}

/// Coverage sweep over the box: every box monomial in `J \ I` in exactly one
/// space, and no space reaches outside `J \ I`.
pub fn check_coverage(d: &StanleyDecomposition) -> Result<VerifyReport> {
    verify_with(d, Parallelism::Auto)
}

/// Run all checks.
pub fn verify(d: &StanleyDecomposition) -> Result<VerifyReport> {
    verify_with(d, Parallelism::Auto)
}

pub fn verify_with(d: &StanleyDecomposition, par: Parallelism) -> Result<VerifyReport> {
    let module = d.module();
    let spaces = d.spaces();
    let mut exact = Tally::default();

    for (k, s) in spaces.iter().enumerate() {
        if let Some(w) = space_violation(s, module, d.ring()) {
            exact.push(
                k,
                Violation {
                    kind: ViolationKind::Containment,
                    monomial: w,
                    spaces: vec![k],
                },
            );
        }
    }
    let mut key = spaces.len();
    for a in 0..spaces.len() {
        for b in a + 1..spaces.len() {
            if let Some(w) = common_monomial(&spaces[a], &spaces[b]) {
                exact.push(
                    key,
                    Violation {
                        kind: ViolationKind::Overlap,
                        monomial: w,
                        spaces: vec![a, b],
                    },
                );
                key += 1;
            }
        }
    }

    let cap = coverage_box(d);
    let size = cap
        .iter()
        .try_fold(1u64, |acc, &c| acc.checked_mul(c as u64 + 1))
        .filter(|&s| s <= MAX_BOX)
        .ok_or(Error::SizeLimit {
            size: usize::MAX,
            limit: MAX_BOX as usize,
        })? as usize;

    // Containment and overlap were decided exactly above; the sweep only
    // reports them itself when the exact phase found nothing.
    let exact_clean = exact.total == 0;
    let n = d.n();
    let sweep = fold_range(
        par,
        0..size,
        Tally::default,
        |mut t, idx| {
            let mut w = vec![0u32; n];
            decode(idx, &cap, &mut w);
            let inside = module.contains_exps(&w);
            let hits: Vec<usize> = spaces
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains_exps(&w))
                .map(|(k, _)| k)
                .take(2)
                .collect();
            let kind = match (inside, hits.len()) {
                (true, 0) => Some(ViolationKind::Gap),
                (true, 1) | (false, 0) => None,
                (true, _) => exact_clean.then_some(ViolationKind::Overlap),
                (false, _) => exact_clean.then_some(ViolationKind::Containment),
            };
            if let Some(kind) = kind {
                t.push(
                    idx,
                    Violation {
                        kind,
                        monomial: Monomial::new(w),
                        spaces: hits,
                    },
                );
            }
            t
        },
        Tally::merge,
    );

    let mut violations: Vec<Violation> = exact.witnesses.into_iter().map(|(_, v)| v).collect();
    violations.extend(sweep.witnesses.into_iter().map(|(_, v)| v));
    violations.truncate(MAX_WITNESSES);
    let total = exact.total + sweep.total;
    let ok = total == 0;
    Ok(VerifyReport {
        ok,
        violations,
        total_violations: total,
        sdepth: ok.then(|| d.sdepth()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_module, parse_monomial};

    fn space(root: &str, free: &[usize], n: usize) -> StanleySpace {
        StanleySpace::new(
            parse_monomial(root, Some(n)).unwrap(),
            free.iter().map(|i| i - 1).collect(),
        )
    }

    fn triangle() -> (QuotientModule, Vec<StanleySpace>) {
        let m = parse_module("(x1,x2,x3) / (x1*x2*x3)", None).unwrap();
        let spaces = vec![
            space("x1", &[1, 2], 3),
            space("x2", &[2, 3], 3),
            space("x3", &[1, 3], 3),
        ];
        (m, spaces)
    }

    #[test]
    fn check_space_examples() {
        let (m, _) = triangle();
        assert!(check_space(&space("x1", &[1, 2], 3), &m));
        assert!(!check_space(&space("x1", &[1, 2, 3], 3), &m));
        assert!(!check_space(&space("1", &[1], 3), &m));
    }

    #[test]
    fn check_disjoint_examples() {
        assert!(check_disjoint(&space("x1", &[1, 2], 3), &space("x2", &[2, 3], 3)));
        assert!(!check_disjoint(&space("x1", &[1], 1), &space("x1^2", &[1], 1)));
        assert!(check_disjoint(&space("1", &[1], 2), &space("x2", &[2], 2)));
    }

    #[test]
    fn triangle_decomposition_verifies() {
        let (m, spaces) = triangle();
        let d = StanleyDecomposition::over_full_ring(m, spaces).unwrap();
        let r = verify(&d).unwrap();
        assert!(r.ok, "{:?}", r.violations);
        assert_eq!(r.sdepth, Some(Sdepth::Finite(2)));
    }

    #[test]
    fn deleted_space_leaves_gap() {
        let (m, mut spaces) = triangle();
        spaces.pop();
        let d = StanleyDecomposition::over_full_ring(m, spaces).unwrap();
        let r = verify(&d).unwrap();
        assert!(!r.ok);
        assert_eq!(r.violations[0].kind, ViolationKind::Gap);
        assert_eq!(r.violations[0].monomial, parse_monomial("x3", Some(3)).unwrap());
        assert_eq!(r.sdepth, None);
    }

    #[test]
    fn shared_root_overlaps() {
        let m = parse_module("(x1) / (0)", Some(3)).unwrap();
        let d = StanleyDecomposition::over_full_ring(
            m,
            vec![space("x1", &[1, 2], 3), space("x1", &[1, 3], 3)],
        )
        .unwrap();
        let r = verify(&d).unwrap();
        assert!(!r.ok);
        let o = r
            .violations
            .iter()
            .find(|v| v.kind == ViolationKind::Overlap)
            .unwrap();
        assert_eq!(o.monomial, parse_monomial("x1", Some(3)).unwrap());
        assert_eq!(o.spaces, vec![0, 1]);
    }

    #[test]
    fn witness_list_is_capped_but_count_is_exact() {
        // 1*K[] for (x1) / (0) in one variable: every x1^k, k >= 1, is a gap;
        // the box [0, 2] holds x1 and x1^2.
        let m = parse_module("(x1^20) / (0)", None).unwrap();
        let d = StanleyDecomposition::over_full_ring(m, vec![]).unwrap();
        let r = verify(&d).unwrap();
        assert_eq!(r.total_violations, 2);
        let m = parse_module("(x1,x2,x3,x4,x5) / (0)", None).unwrap();
        let d = StanleyDecomposition::over_full_ring(m, vec![]).unwrap();
        let r = verify(&d).unwrap();
        // box {0,1,2}^5 minus the unit
        assert_eq!(r.total_violations, 242);
        assert_eq!(r.violations.len(), MAX_WITNESSES);
    }

    #[test]
    fn zero_module_empty_decomposition() {
        let m = parse_module("(x1,x2) / (x1,x2)", None).unwrap();
        let d = StanleyDecomposition::over_full_ring(m, vec![]).unwrap();
        let r = verify(&d).unwrap();
        assert!(r.ok);
        assert_eq!(r.sdepth, Some(Sdepth::Infinity));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let (m, mut spaces) = triangle();
        spaces.remove(1);
        let d = StanleyDecomposition::over_full_ring(m, spaces).unwrap();
        assert_eq!(
            verify_with(&d, Parallelism::Auto).unwrap(),
            verify_with(&d, Parallelism::Sequential).unwrap()
        );
    }
}
