//! Characteristic poset of `J/I` and the passage from interval partitions to
//! Stanley decompositions.
//!
//! For a bound vector `g` at least every generator exponent, the poset is the
//! set of exponent vectors `a ≤ g` with `x^a ∈ J \ I`, ordered componentwise.
//! A partition of it into intervals `[c, d]` yields a Stanley decomposition
//! whose spaces have free set `Z_d = { i : d_i = g_i }`, so its Stanley depth
//! is the minimum of `rho(d) = |Z_d|`.

use std::collections::HashMap;
use std::fmt;

use crate::decomposition::{StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, QuotientModule, VarSet};
use crate::verify::MAX_BOX;

/// Upper corner of the box the poset lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundVector(Vec<u32>);

impl BoundVector {
    pub fn new(g: Vec<u32>) -> Self {
        BoundVector(g)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Every coordinate increased by `k`.
    pub fn raised(&self, k: u32) -> BoundVector {
        BoundVector(self.0.iter().map(|g| g + k).collect())
    }

    /// Number of lattice points in `[0, g]`, if it fits in a `u64`.
    pub fn box_size(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(1u64, |acc, &g| acc.checked_mul(g as u64 + 1))
    }
}

/// Smallest legal bound: componentwise maximum over the generators of `J` and `I`.
pub fn choose_g(m: &QuotientModule) -> BoundVector {
    let mut g = m.j().max_exponents();
    for (a, b) in g.iter_mut().zip(m.i().max_exponents()) {
        *a = (*a).max(b);
    }
    BoundVector(g)
}

/// `|{ i : d_i = g_i }|`.
pub fn rho(d: &[u32], g: &BoundVector) -> usize {
    d.iter().zip(&g.0).filter(|(a, b)| a == b).count()
}

/// Free variables `Z_d = { i : d_i = g_i }` of an interval with top `d`.
pub fn saturated(d: &[u32], g: &BoundVector) -> VarSet {
    d.iter()
        .zip(&g.0)
        .enumerate()
        .filter(|(_, (a, b))| a == b)
        .map(|(i, _)| i)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Vec<u32>,
    pub hi: Vec<u32>,
}

impl Interval {
    pub fn new(lo: Vec<u32>, hi: Vec<u32>) -> Self {
        Interval { lo, hi }
    }

    /// All lattice points `lo ≤ a ≤ hi` (empty if `lo ≰ hi`).
    pub fn points(&self) -> Vec<Vec<u32>> {
        if self.lo.iter().zip(&self.hi).any(|(a, b)| a > b) {
            return Vec::new();
        }
        box_points(&self.lo, &self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalPartition {
    pub intervals: Vec<Interval>,
}

/// Points of `[lo, hi]`, first coordinate fastest.
pub(crate) fn box_points(lo: &[u32], hi: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = lo.to_vec();
    loop {
        out.push(cur.clone());
        let mut i = 0;
        loop {
            if i == cur.len() {
                return out;
            }
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

/// Order used to index poset elements: total degree, then lexicographic.
pub(crate) fn rank_key(a: &[u32]) -> (u64, &[u32]) {
    (a.iter().map(|&e| e as u64).sum(), a)
}

/// The finite poset `{ a ∈ [0, g] : x^a ∈ J \ I }`.
#[derive(Clone, Debug)]
pub struct CharPoset {
    module: QuotientModule,
    g: BoundVector,
    elems: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

/// Enumerate the characteristic poset of `m` for the bound `g`.
pub fn build_poset(m: &QuotientModule, g: &BoundVector) -> Result<CharPoset> {
    let n = m.n();
    if g.n() != n {
        return Err(Error::RingMismatch {
            expected: n,
            found: g.n(),
        });
    }
    let min = choose_g(m);
    if let Some(i) = (0..n).find(|&i| g.0[i] < min.0[i]) {
        return Err(Error::domain(format!(
            "bound g_{} = {} is below the generator exponent {}",
            i + 1,
            g.0[i],
            min.0[i]
        )));
    }
    match g.box_size() {
        Some(s) if s <= MAX_BOX => {}
        _ => {
            return Err(Error::SizeLimit {
                size: usize::MAX,
                limit: MAX_BOX as usize,
            })
        }
    }
    let zero = vec![0; n];
    let mut elems: Vec<Vec<u32>> = if m.is_zero() {
        Vec::new()
    } else {
        box_points(&zero, &g.0)
            .into_iter()
            .filter(|a| m.contains_exps(a))
            .collect()
    };
    elems.sort_by(|a, b| rank_key(a).cmp(&rank_key(b)));
    let index = elems
        .iter()
        .enumerate()
        .map(|(k, a)| (a.clone(), k))
        .collect();
    Ok(CharPoset {
        module: m.clone(),
        g: g.clone(),
        elems,
        index,
    })
}

impl CharPoset {
    pub fn module(&self) -> &QuotientModule {
        &self.module
    }

    pub fn g(&self) -> &BoundVector {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    /// Elements in (degree, lex) order.
    pub fn elems(&self) -> &[Vec<u32>] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn index_of(&self, a: &[u32]) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        self.index.contains_key(a)
    }

    /// Check that `p` covers every element exactly once with intervals inside the poset.
    pub fn validate_partition(&self, p: &IntervalPartition) -> Result<()> {
        let mut seen = vec![false; self.elems.len()];
        let mut covered = 0;
        for iv in &p.intervals {
            if iv.lo.len() != self.n() || iv.hi.len() != self.n() {
                return Err(Error::domain(format!("interval {iv} has the wrong length")));
            }
            if iv.lo.iter().zip(&iv.hi).any(|(a, b)| a > b) {
                return Err(Error::domain(format!("interval {iv} is empty")));
            }
            for a in iv.points() {
                let k = self.index_of(&a).ok_or_else(|| {
                    Error::domain(format!("interval {iv} leaves the poset at {a:?}"))
                })?;
                if seen[k] {
                    return Err(Error::domain(format!("element {a:?} is covered twice")));
                }
                seen[k] = true;
                covered += 1;
            }
        }
        if covered != self.elems.len() {
            let k = seen.iter().position(|s| !s).expect("some element is uncovered");
            return Err(Error::domain(format!(
                "element {:?} is not covered",
                self.elems[k]
            )));
        }
        Ok(())
    }
}

/// Turn a valid interval partition into a Stanley decomposition.
///
/// An interval `[c, d]` contributes the spaces `x^a K[Z_d]` for the points
/// `a ∈ [c, d]` with `a_j = c_j` on `Z_d`. When `c` and `d` agree outside
/// `Z_d` this is the single space `x^c K[Z_d]`.
pub fn partition_to_decomposition(
    partition: &IntervalPartition,
    poset: &CharPoset,
) -> Result<StanleyDecomposition> {
    poset.validate_partition(partition)?;
    let g = poset.g();
    let mut spaces = Vec::new();
    for iv in &partition.intervals {
        let z = saturated(&iv.hi, g);
        let top: Vec<u32> = iv
            .lo
            .iter()
            .zip(&iv.hi)
            .enumerate()
            .map(|(j, (&c, &d))| if z.contains(j) { c } else { d })
            .collect();
        for a in box_points(&iv.lo, &top) {
            spaces.push(StanleySpace::new(Monomial::new(a), z));
        }
    }
    StanleyDecomposition::over_full_ring(poset.module().clone(), spaces).map(|d| d.sorted())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::Sdepth;
    use crate::text::parse_module;
    use crate::verify::verify;

    #[test]
    fn choose_g_examples() {
        let m = parse_module("(x1,x2,x3) / (x1*x2*x3)", None).unwrap();
        assert_eq!(choose_g(&m).as_slice(), &[1, 1, 1]);
        let m = parse_module("(x1^2,x2^3) / (0)", None).unwrap();
        assert_eq!(choose_g(&m).as_slice(), &[2, 3]);
        let m = parse_module("(x1,x2) / (x1^2,x2^3)", None).unwrap();
        assert_eq!(choose_g(&m).as_slice(), &[2, 3]);
    }

    #[test]
    fn build_poset_examples() {
        let m = parse_module("(x1,x2) / (x1*x2)", None).unwrap();
        let p = build_poset(&m, &choose_g(&m)).unwrap();
        assert_eq!(p.elems(), &[vec![0, 1], vec![1, 0]]);

        let m = parse_module("(x1) / (0)", None).unwrap();
        let p = build_poset(&m, &choose_g(&m)).unwrap();
        assert_eq!(p.elems(), &[vec![1]]);

        let m = parse_module("(x1,x2,x3) / (x1*x2*x3)", None).unwrap();
        let p = build_poset(&m, &choose_g(&m)).unwrap();
        assert_eq!(p.len(), 6);
        assert!(!p.contains(&[1, 1, 1]));
        assert!(!p.contains(&[0, 0, 0]));
    }

    #[test]
    fn build_poset_rejects_small_g() {
        let m = parse_module("(x1^2) / (0)", None).unwrap();
        assert!(matches!(
            build_poset(&m, &BoundVector::new(vec![1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rho_examples() {
        let g = BoundVector::new(vec![1, 1]);
        assert_eq!(rho(&[1, 0], &g), 1);
        assert_eq!(rho(&[1, 1], &g), 2);
        assert_eq!(rho(&[0, 0], &g), 0);
    }

    #[test]
    fn two_singletons() {
        let m = parse_module("(x1,x2) / (x1*x2)", None).unwrap();
        let p = build_poset(&m, &choose_g(&m)).unwrap();
        let part = IntervalPartition {
            intervals: vec![
                Interval::new(vec![1, 0], vec![1, 0]),
                Interval::new(vec![0, 1], vec![0, 1]),
            ],
        };
        let d = partition_to_decomposition(&part, &p).unwrap();
        assert_eq!(d.to_string(), "x1*K[x1] + x2*K[x2]");
    }

    #[test]
    fn single_interval_one_variable() {
        let m = parse_module("(x1) / (0)", None).unwrap();
        let p = build_poset(&m, &choose_g(&m)).unwrap();
        let part = IntervalPartition {
            intervals: vec![Interval::new(vec![1], vec![1])],
        };
        assert_eq!(partition_to_decomposition(&part, &p).unwrap().to_string(), "x1*K[x1]");
    }

    #[test]
    fn triangle_partition() {
        let m = parse_module("(x1,x2,x3) / (x1*x2*x3)", None).unwrap();
        let p = build_poset(&m, &choose_g(&m)).unwrap();
        let part = IntervalPartition {
            intervals: vec![
                Interval::new(vec![1, 0, 0], vec![1, 1, 0]),
                Interval::new(vec![0, 1, 0], vec![0, 1, 1]),
                Interval::new(vec![0, 0, 1], vec![1, 0, 1]),
            ],
        };
        let d = partition_to_decomposition(&part, &p).unwrap();
        assert_eq!(d.to_string(), "x1*K[x1,x2] + x2*K[x2,x3] + x3*K[x1,x3]");
        let r = verify(&d).unwrap();
        assert!(r.ok);
        assert_eq!(r.sdepth, Some(Sdepth::Finite(2)));
    }

    #[test]
    fn interval_with_unsaturated_range_splits() {
        // [(1,0), (1,1)] with g = (2,2): nothing saturated, two spaces
        let m = parse_module("(x1) / (x1^2, x1*x2^2)", None).unwrap();
        let p = build_poset(&m, &choose_g(&m)).unwrap();
        let part = IntervalPartition {
            intervals: vec![Interval::new(vec![1, 0], vec![1, 1])],
        };
        let d = partition_to_decomposition(&part, &p).unwrap();
        assert_eq!(d.len(), 2);
        assert!(verify(&d).unwrap().ok);
    }

    #[test]
    fn invalid_partitions_are_rejected() {
        let m = parse_module("(x1,x2) / (x1*x2)", None).unwrap();
        let p = build_poset(&m, &choose_g(&m)).unwrap();
        let missing = IntervalPartition {
            intervals: vec![Interval::new(vec![1, 0], vec![1, 0])],
        };
        assert!(partition_to_decomposition(&missing, &p).is_err());
        let outside = IntervalPartition {
            intervals: vec![
                Interval::new(vec![1, 0], vec![1, 1]),
                Interval::new(vec![0, 1], vec![0, 1]),
            ],
        };
        assert!(partition_to_decomposition(&outside, &p).is_err());
    }
}
