use crate::decomposition::{Sdepth, StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::monomial::{minimalize, Monomial, QuotientModule, VarSet};
use crate::par::Parallelism;
use crate::poset::{
    box_points, build_poset, choose_g, partition_to_decomposition, BoundVector,
    CharPoset, Interval, IntervalPartition,
};
use crate::solver::cover::ExactCover;
use crate::solver::{Method, SdepthResult};

/// Default refusal threshold for the characteristic poset.
pub const DEFAULT_MAX_POSET: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub parallelism: Parallelism,
    /// Refuse posets with more elements than this.
    pub max_poset: Option<usize>,
    /// Poset bound; defaults to [`choose_g`] of the (compressed) module.
    pub bound: Option<BoundVector>,
    /// Replace each coordinate's exponents by their rank among the distinct
    /// generator exponents before searching. Ignored when `bound` is set.
    pub compress: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            parallelism: Parallelism::Auto,
            max_poset: Some(DEFAULT_MAX_POSET),
            bound: None,
            compress: true,
        }
    }
}

impl SolverConfig {
    pub fn sequential() -> Self {
        SolverConfig {
            parallelism: Parallelism::Sequential,
            ..Default::default()
        }
    }
}

/// Per-coordinate exponent thresholds `0 = t_0 < t_1 < ... < t_R`.
///
/// Membership in `J` and `I` depends on `w_i` only through the chamber
/// `t_r ≤ w_i < t_{r+1}` it falls in, so replacing exponents by chamber ranks
/// gives a module with the same Stanley depth. Decompositions of the
/// compressed module expand back by enumerating each non-free coordinate
/// over its chamber.
struct Compression {
    thresholds: Vec<Vec<u32>>,
}

impl Compression {
    fn of(m: &QuotientModule) -> Self {
        let n = m.n();
        let mut thresholds = vec![vec![0u32]; n];
        for g in m.j().gens().iter().chain(m.i().gens()) {
            for (t, &e) in thresholds.iter_mut().zip(g.exps()) {
                t.push(e);
            }
        }
        for t in &mut thresholds {
            t.sort_unstable();
            t.dedup();
        }
        Compression { thresholds }
    }

    fn rank(&self, i: usize, e: u32) -> u32 {
        self.thresholds[i].partition_point(|&t| t <= e) as u32 - 1
    }

    /// First exponent of chamber `r`.
    fn start(&self, i: usize, r: u32) -> u32 {
        let t = &self.thresholds[i];
        let top = t.len() as u32 - 1;
        if r <= top {
            t[r as usize]
        } else {
            t[top as usize] + (r - top)
        }
    }

    /// Last exponent of chamber `r` (chambers past the top are single values).
    fn end(&self, i: usize, r: u32) -> u32 {
        let t = &self.thresholds[i];
        if (r as usize) + 1 < t.len() {
            t[r as usize + 1] - 1
        } else {
            self.start(i, r)
        }
    }

    fn compress_monomial(&self, w: &Monomial) -> Monomial {
        Monomial::new(
            w.exps()
                .iter()
                .enumerate()
                .map(|(i, &e)| self.rank(i, e))
                .collect::<Vec<_>>(),
        )
    }

    fn module(&self, m: &QuotientModule) -> Result<QuotientModule> {
        let n = m.n();
        let j = minimalize(n, m.j().gens().iter().map(|g| self.compress_monomial(g)))?;
        let i = minimalize(n, m.i().gens().iter().map(|g| self.compress_monomial(g)))?;
        QuotientModule::new(j, i)
    }

    fn expand(&self, d: &StanleyDecomposition, original: &QuotientModule) -> Result<StanleyDecomposition> {
        let n = original.n();
        let mut spaces = Vec::new();
        for s in d.spaces() {
            let lo: Vec<u32> = (0..n)
                .map(|i| self.start(i, s.root.exp(i)))
                .collect();
            let hi: Vec<u32> = (0..n)
                .map(|i| {
                    if s.free.contains(i) {
                        lo[i]
                    } else {
                        self.end(i, s.root.exp(i))
                    }
                })
                .collect();
            for a in box_points(&lo, &hi) {
                spaces.push(StanleySpace::new(Monomial::new(a), s.free));
            }
        }
        StanleyDecomposition::new(original.clone(), d.ring(), spaces).map(StanleyDecomposition::sorted)
    }
}

/// Largest `k` for which every element is the bottom of some interval with
/// `rho ≥ k`: an upper bound on the Stanley depth read off the poset alone.
fn static_upper_bound(poset: &CharPoset) -> usize {
    let n = poset.n();
    if n > 20 {
        return n;
    }
    let g = poset.g().as_slice();
    let i = poset.module().i();
    poset
        .elems()
        .iter()
        .map(|c| {
            let open: Vec<usize> = (0..n).filter(|&j| c[j] < g[j]).collect();
            let base = n - open.len();
            let mut best = 0;
            let mut d = c.clone();
            for mask in 0u32..(1 << open.len()) {
                let extra = mask.count_ones() as usize;
                if extra <= best {
                    continue;
                }
                for (b, &j) in open.iter().enumerate() {
                    d[j] = if mask >> b & 1 == 1 { g[j] } else { c[j] };
                }
                if !i.contains_exps(&d) {
                    best = extra;
                }
            }
            base + best
        })
        .min()
        .unwrap_or(n)
}

/// Candidate intervals for level `k`: from each element `c`, saturate
/// `max(0, k - rho(c))` further coordinates.
///
/// Any partition with all `rho ≥ k` refines into intervals of this shape,
/// so searching over them loses nothing.
fn candidate_intervals(poset: &CharPoset, k: usize) -> Vec<(Interval, Vec<u32>)> {
    let n = poset.n();
    let g = poset.g().as_slice();
    let i = poset.module().i();
    let mut rows = Vec::new();
    for c in poset.elems() {
        let open: Vec<usize> = (0..n).filter(|&j| c[j] < g[j]).collect();
        let need = k.saturating_sub(n - open.len());
        if need > open.len() {
            continue;
        }
        let mut found: Vec<(Interval, Vec<u32>)> = Vec::new();
        for_each_subset(open.len(), need, |pick| {
            let mut d = c.clone();
            for &b in pick {
                d[open[b]] = g[open[b]];
            }
            if i.contains_exps(&d) {
                return;
            }
            let cols: Vec<u32> = box_points(c, &d)
                .iter()
                .map(|a| poset.index_of(a).expect("interval stays in the poset") as u32)
                .collect();
            found.push((Interval::new(c.clone(), d), cols));
        });
        // larger intervals first
        found.sort_by_key(|f| std::cmp::Reverse(f.1.len()));
        rows.extend(found);
    }
    rows
}

/// Call `f` with every `size`-subset of `0..len` in lexicographic order.
fn for_each_subset(len: usize, size: usize, mut f: impl FnMut(&[usize])) {
    let mut pick: Vec<usize> = (0..size).collect();
    loop {
        f(&pick);
        let Some(pos) = (0..size).rev().find(|&p| pick[p] < len - size + p) else {
            return;
        };
        pick[pos] += 1;
        for p in pos + 1..size {
            pick[p] = pick[p - 1] + 1;
        }
    }
}

/// A partition of `poset` into intervals `[c, d]` with `rho(d) ≥ k`, if one exists.
pub fn sdepth_decision(poset: &CharPoset, k: usize, par: Parallelism) -> Option<IntervalPartition> {
    if k == 0 {
        // singletons always work
        let intervals = poset
            .elems()
            .iter()
            .map(|a| Interval::new(a.clone(), a.clone()))
            .collect();
        return Some(IntervalPartition { intervals });
    }
    if k > poset.n() {
        return poset.is_empty().then(IntervalPartition::default);
    }
    let rows = candidate_intervals(poset, k);
    let cols: Vec<Vec<u32>> = rows.iter().map(|(_, c)| c.clone()).collect();
    let picked = ExactCover::new(poset.len(), &cols).solve(par)?;
    Some(IntervalPartition {
        intervals: picked
            .into_iter()
            .map(|r| rows[r as usize].0.clone())
            .collect(),
    })
}

fn solve_poset(poset: &CharPoset, cfg: &SolverConfig) -> Result<(usize, StanleyDecomposition)> {
    if let Some(limit) = cfg.max_poset {
        if poset.len() > limit {
            return Err(Error::SizeLimit {
                size: poset.len(),
                limit,
            });
        }
    }
    let top = static_upper_bound(poset).min(poset.n());
    for k in (0..=top).rev() {
        if let Some(p) = sdepth_decision(poset, k, cfg.parallelism) {
            let d = partition_to_decomposition(&p, poset)?;
            return Ok((k, d));
        }
    }
    unreachable!("level 0 is always satisfiable")
}

/// Exact Stanley depth of `J/I` by search over interval partitions of the
/// characteristic poset, with a witnessing decomposition.
pub fn sdepth_exact(m: &QuotientModule, cfg: &SolverConfig) -> Result<SdepthResult> {
    if m.is_zero() {
        return Ok(SdepthResult {
            value: Sdepth::Infinity,
            certificate: Some(StanleyDecomposition::over_full_ring(m.clone(), Vec::new())?),
            method: Method::ExactSearch,
        });
    }
    let (k, d) = match (&cfg.bound, cfg.compress) {
        (Some(g), _) => solve_poset(&build_poset(m, g)?, cfg)?,
        (None, false) => solve_poset(&build_poset(m, &choose_g(m))?, cfg)?,
        (None, true) => {
            let c = Compression::of(m);
            let small = c.module(m)?;
            let (k, d) = solve_poset(&build_poset(&small, &choose_g(&small))?, cfg)?;
            (k, c.expand(&d, m)?)
        }
    };
    debug_assert_eq!(d.sdepth(), Sdepth::Finite(k));
    Ok(SdepthResult {
        value: Sdepth::Finite(k),
        certificate: Some(d),
        method: Method::ExactSearch,
    })
}

/// [`sdepth_exact`] for a module over the subring `K[ring]`.
///
/// The generators of `m` must only involve variables of `ring`.
pub fn sdepth_exact_over(m: &QuotientModule, ring: VarSet, cfg: &SolverConfig) -> Result<SdepthResult> {
    if ring == VarSet::full(m.n()) {
        return sdepth_exact(m, cfg);
    }
    let small = m.project(ring)?;
    let mut cfg = cfg.clone();
    cfg.bound = cfg
        .bound
        .map(|g| BoundVector::new(ring.iter().map(|i| g.as_slice()[i]).collect()));
    let r = sdepth_exact(&small, &cfg)?;
    Ok(SdepthResult {
        certificate: r.certificate.map(|d| d.embed(m.n(), ring)),
        ..r
    })
}
