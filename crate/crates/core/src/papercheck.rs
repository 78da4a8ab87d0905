//! The reproducibility suite: nine checks, each a finite computation whose
//! expected outcome is fixed in advance.
//!
//! | id  | what is checked |
//! |-----|-----------------|
//! | AC1 | `(x1,x2,x3)/(x1x2x3)`: sdepth 2, a 3-space certificate, depth 1 |
//! | AC2 | `(x1..xn)/(x1..xm)` for `m < n ≤ 5` |
//! | AC3 | irreducible quotients for `n ≤ 4` |
//! | AC4 | CI-pair bounds on seeded random instances |
//! | AC5 | separated family, exact value |
//! | AC6 | builders verify and reach their values |
//! | AC7 | colon monotonicity and `colon_transform` |
//! | AC8 | sdepth ≥ depth on the AC4/AC5 instances |
//! | AC9 | composite vs reduced modules for four reductions |

use std::fmt;
use std::time::{Duration, Instant};

use crate::builders::{
    annulus, ci_pair_decomposition, colon_transform, combine_mixed, lift_power, product,
    restrict_to_subring, separated_decomposition, staircase_quotient, ColonOutcome,
};
use crate::decomposition::{Sdepth, StanleyDecomposition, StanleySpace};
use crate::error::Result;
use crate::instances::{
    random_ci_pair, random_colon_triple, random_module_in, random_monomial, random_proper_ideal,
    random_split, rng, separated_family,
};
use crate::monomial::{ci_align, Monomial, MonomialIdeal, QuotientModule, VarSet};
use crate::par::{map_collect, Parallelism};
use crate::solver::{depth_closed_form, sdepth_bounds, sdepth_exact, sdepth_exact_over, SolverConfig};
use crate::verify::verify_with;

pub const DEFAULT_SEED: u64 = 20_100_601;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest number of variables used by any check (each check also has
    /// its own ceiling).
    pub max_n: usize,
    pub seed: u64,
    pub parallelism: Parallelism,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 5,
            seed: DEFAULT_SEED,
            parallelism: Parallelism::Auto,
        }
    }
}

impl SuiteConfig {
    fn solver(&self) -> SolverConfig {
        SolverConfig {
            parallelism: self.parallelism,
            ..SolverConfig::default()
        }
    }

    fn n(&self, ceiling: usize) -> usize {
        self.max_n.min(ceiling)
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub instances: usize,
    pub violations: usize,
    /// First few violation messages, or a one-line summary.
    pub detail: Vec<String>,
    pub elapsed: Duration,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<4} {:<44} instances={:<5} violations={:<3} {:.2?}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.instances,
            self.violations,
            self.elapsed
        )?;
        for d in &self.detail {
            write!(f, "\n       {d}")?;
        }
        Ok(())
    }
}

const MAX_DETAIL: usize = 5;

/// Outcome of one instance: `Ok(None)` passes.
type Outcome = Result<Option<String>>;

fn report(
    id: &'static str,
    title: &'static str,
    start: Instant,
    outcomes: Vec<Outcome>,
    time_limit: Option<Duration>,
) -> CheckReport {
    report_with(id, title, start.elapsed(), outcomes, time_limit)
}

fn report_with(
    id: &'static str,
    title: &'static str,
    elapsed: Duration,
    outcomes: Vec<Outcome>,
    time_limit: Option<Duration>,
) -> CheckReport {
    let instances = outcomes.len();
    let mut detail = Vec::new();
    let mut violations = 0;
    for o in outcomes {
        let msg = match o {
            Ok(None) => continue,
            Ok(Some(m)) => m,
            Err(e) => format!("error: {e}"),
        };
        violations += 1;
        if detail.len() < MAX_DETAIL {
            detail.push(msg);
        }
    }
    let mut passed = violations == 0 && instances > 0;
    if let Some(limit) = time_limit {
        if elapsed > limit {
            passed = false;
            detail.push(format!("took {elapsed:.2?}, limit {limit:.0?}"));
        }
    }
    CheckReport {
        id,
        title,
        passed,
        instances,
        violations,
        detail,
        elapsed,
    }
}

fn expect_eq(what: impl fmt::Display, got: Sdepth, want: Sdepth) -> Option<String> {
    (got != want).then(|| format!("{what}: got {got}, expected {want}"))
}

fn half_formula(n: usize, m: usize) -> Sdepth {
    Sdepth::Finite(n - m - (n - m) / 2)
}

fn verified(d: &StanleyDecomposition, par: Parallelism) -> Result<Option<String>> {
    let r = verify_with(d, par)?;
    Ok((!r.ok).then(|| {
        format!(
            "certificate for {} fails: {} violations, first {:?}",
            d.module(),
            r.total_violations,
            r.violations.first()
        )
    }))
}

fn exact(m: &QuotientModule, cfg: &SuiteConfig) -> Result<Sdepth> {
    Ok(sdepth_exact(m, &cfg.solver())?.value)
}

/// The three spaces `x1 K[x1,x2] + x2 K[x2,x3] + x3 K[x1,x3]`.
pub fn triangle_decomposition() -> StanleyDecomposition {
    let m = QuotientModule::new(
        MonomialIdeal::variables(3, 0..3),
        MonomialIdeal::new(3, [Monomial::new(vec![1, 1, 1])]).expect("n = 3"),
    )
    .expect("x1x2x3 in (x1,x2,x3)");
    let sp = |i: usize, z: [usize; 2]| StanleySpace::new(Monomial::var(3, i), z.into_iter().collect());
    StanleyDecomposition::over_full_ring(m, vec![sp(0, [0, 1]), sp(1, [1, 2]), sp(2, [0, 2])])
        .expect("module lives on x1..x3")
}

pub fn check_ac1(cfg: &SuiteConfig) -> CheckReport {
    let start = Instant::now();
    let d = triangle_decomposition();
    let m = d.module().clone();
    let outcomes = vec![
        exact(&m, cfg).map(|v| expect_eq("sdepth_exact", v, Sdepth::Finite(2))),
        verify_with(&d, cfg.parallelism).map(|r| {
            (!(r.ok && r.sdepth == Some(Sdepth::Finite(2))))
                .then(|| format!("3-space decomposition: ok={}, sdepth={:?}", r.ok, r.sdepth))
        }),
        Ok(match depth_closed_form(&m) {
            Some(r) if r.value == 1 => None,
            other => Some(format!("depth closed form gave {other:?}, expected 1")),
        }),
    ];
    report("AC1", "3-generator example: sdepth 2 > depth 1", start, outcomes, Some(Duration::from_secs(1)))
}

pub fn check_ac2(cfg: &SuiteConfig) -> CheckReport {
    let start = Instant::now();
    let pairs: Vec<(usize, usize)> = (1..=cfg.n(5)).flat_map(|n| (0..n).map(move |m| (n, m))).collect();
    let outcomes = map_collect(cfg.parallelism, &pairs, |&(n, m)| {
        let module = QuotientModule::new(MonomialIdeal::variables(n, 0..n), MonomialIdeal::variables(n, 0..m))?;
        let v = exact(&module, cfg)?;
        Ok(expect_eq(format!("n={n} m={m}"), v, half_formula(n, m)))
    });
    report("AC2", "variables quotient grid", start, outcomes, Some(Duration::from_secs(60)))
}

/// `(x_i^{a_i})_{i ≤ n} / (x_i^{b_i})_{i ≤ m}` for `a_i ∈ {1,2}` and
/// `b_i ∈ {a_i, a_i+1, 3}`, skipping zero modules.
pub fn irreducible_family(n_max: usize) -> Vec<(QuotientModule, usize)> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for a_bits in 0..1u32 << n {
            let a: Vec<u32> = (0..n).map(|i| 1 + (a_bits >> i & 1)).collect();
            let j = MonomialIdeal::new(n, (0..n).map(|i| Monomial::power(n, i, a[i]))).expect("same ring");
            for m in 0..=n {
                let mut bs: Vec<Vec<u32>> = vec![Vec::new()];
                for &ai in &a[..m] {
                    let mut choices = vec![ai, ai + 1, 3];
                    choices.sort_unstable();
                    choices.dedup();
                    bs = bs
                        .into_iter()
                        .flat_map(|p| {
                            choices.iter().map(move |&c| {
                                let mut q = p.clone();
                                q.push(c);
                                q
                            })
                        })
                        .collect();
                }
                for b in bs {
                    let i = MonomialIdeal::new(n, b.iter().enumerate().map(|(k, &e)| Monomial::power(n, k, e)))
                        .expect("same ring");
                    let module = QuotientModule::new(j.clone(), i).expect("a_i <= b_i");
                    if !module.is_zero() {
                        out.push((module, m));
                    }
                }
            }
        }
    }
    out
}

pub fn check_ac3(cfg: &SuiteConfig) -> CheckReport {
    let start = Instant::now();
    let family = irreducible_family(cfg.n(4));
    let outcomes = map_collect(cfg.parallelism, &family, |(module, m)| {
        let n = module.n();
        Ok(expect_eq(module, exact(module, cfg)?, half_formula(n, *m)))
    });
    report("AC3", "irreducible quotients", start, outcomes, None)
}

/// Number of random complete-intersection pairs in AC4.
pub const AC4_INSTANCES: usize = 150;

/// AC4's instances: seeded random CI pairs with `n ≤ 5`, exponents ≤ 3.
pub fn ac4_instances(cfg: &SuiteConfig) -> Vec<QuotientModule> {
    let mut r = rng(cfg.seed);
    (0..AC4_INSTANCES).map(|_| random_ci_pair(&mut r, cfg.n(5), 3)).collect()
}

/// Exact values for a batch, computed once and shared by several checks.
pub struct Solved {
    pub modules: Vec<QuotientModule>,
    pub values: Vec<Result<Sdepth>>,
    /// Time spent solving, charged to every check that uses the batch.
    pub elapsed: Duration,
}

impl Solved {
    pub fn new(modules: Vec<QuotientModule>, cfg: &SuiteConfig) -> Self {
        let start = Instant::now();
        let values = map_collect(cfg.parallelism, &modules, |m| exact(m, cfg));
        Solved {
            modules,
            values,
            elapsed: start.elapsed(),
        }
    }

    fn each<F>(&self, f: F) -> Vec<Outcome>
    where
        F: Fn(&QuotientModule, Sdepth) -> Outcome,
    {
        self.modules
            .iter()
            .zip(&self.values)
            .map(|(m, v)| match v {
                Ok(v) => f(m, *v),
                Err(e) => Err(e.clone()),
            })
            .collect()
    }
}

pub fn check_ac4(solved: &Solved) -> CheckReport {
    let start = Instant::now();
    let outcomes = solved.each(|m, v| {
        let (lo, hi) = sdepth_bounds(m)?;
        Ok(match v {
            Sdepth::Finite(k) if lo <= k && k <= hi => None,
            _ => Some(format!("{m}: sdepth {v} outside [{lo}, {hi}]")),
        })
    });
    report_with("AC4", "complete-intersection bounds (random)", start.elapsed() + solved.elapsed, outcomes, None)
}

fn separated_value(m: &QuotientModule) -> Result<(Sdepth, usize, usize)> {
    let n = m.n();
    let (p, q) = if m.i().is_zero() {
        (0, m.j().gens().len())
    } else {
        let pairing = ci_align(m.j(), m.i())?;
        (pairing.p(), pairing.q())
    };
    Ok((Sdepth::Finite(n - p - (q - p) / 2), p, q))
}

pub fn check_ac5(solved: &Solved) -> CheckReport {
    let start = Instant::now();
    let outcomes = solved.each(|m, v| {
        let (want, p, q) = separated_value(m)?;
        if q == p + 1 && want != Sdepth::Finite(m.n() - p) {
            return Ok(Some(format!("{m}: q = p+1 but formula gives {want}")));
        }
        Ok(expect_eq(m, v, want))
    });
    report_with("AC5", "separated family, exact value", start.elapsed() + solved.elapsed, outcomes, None)
}

/// Small modules for the builder corpus: `J/I` on `x2..xn`, `n ≤ 4`.
fn builder_corpus(cfg: &SuiteConfig, count: usize) -> Vec<(QuotientModule, VarSet)> {
    let mut r = rng(cfg.seed ^ 0xB1);
    let top = cfg.n(4).max(2);
    (0..count)
        .map(|_| {
            let n = r_n(&mut r, top);
            let rest = VarSet::full(n).difference(VarSet::singleton(0));
            (random_module_in(&mut r, n, rest, 2), rest)
        })
        .collect()
}

fn r_n(r: &mut crate::instances::InstanceRng, top: usize) -> usize {
    use rand::Rng;
    r.random_range(2..=top)
}

fn certificate_over(m: &QuotientModule, ring: VarSet, cfg: &SuiteConfig) -> Result<StanleyDecomposition> {
    Ok(sdepth_exact_over(m, ring, &cfg.solver())?
        .certificate
        .expect("exact search returns a certificate"))
}

fn builder_outcomes(corpus: &[(QuotientModule, VarSet)], cfg: &SuiteConfig) -> Vec<Outcome> {
    let par = cfg.parallelism;
    map_collect(par, corpus, |(m, rest)| -> Outcome {
        let n = m.n();
        let d = certificate_over(m, *rest, cfg)?;
        let quot = QuotientModule::quotient_ring(m.i().clone())?;
        let d_ring = certificate_over(&quot, *rest, cfg)?;
        let x1 = VarSet::singleton(0);
        let mut built = vec![
            lift_power(0, 2, &d)?,
            annulus(0, 1, 3, &d_ring)?,
            combine_mixed(0, 1, 2, &d, &d_ring)?,
            product(&d, &staircase_quotient(&Monomial::power(n, 0, 2), x1)?)?,
        ];
        let lifted = lift_power(0, 1, &d)?;
        built.push(restrict_to_subring(&lifted, &Monomial::var(n, 0), *rest)?);
        if let ColonOutcome::Decomposition(c) = colon_transform(&d, &Monomial::var(n, rest.iter().next().unwrap()))? {
            built.push(c);
        }
        for b in &built {
            if let Some(msg) = verified(b, par)? {
                return Ok(Some(msg));
            }
        }
        Ok(None)
    })
}

pub fn check_ac6(cfg: &SuiteConfig) -> CheckReport {
    let start = Instant::now();
    let par = cfg.parallelism;
    let solver = cfg.solver();
    let mut outcomes = builder_outcomes(&builder_corpus(cfg, 30), cfg);

    let family: Vec<QuotientModule> = separated_family(cfg.n(4))
        .into_iter()
        .filter(|m| !m.i().is_zero())
        .collect();
    outcomes.extend(map_collect(par, &family, |m| -> Outcome {
        let (want, p, q) = separated_value(m)?;
        let d = separated_decomposition(m, &solver)?;
        if let Some(msg) = verified(&d, par)? {
            return Ok(Some(msg));
        }
        if p == q {
            let c = ci_pair_decomposition(m)?;
            if let Some(msg) = verified(&c, par)? {
                return Ok(Some(msg));
            }
            if let Some(s) = c.spaces().iter().find(|s| s.dim() != m.n() - p) {
                return Ok(Some(format!("{m}: ci-pair space {s} has dimension {}", s.dim())));
            }
        }
        Ok(expect_eq(format!("separated decomposition of {m}"), d.sdepth(), want))
    }));

    let mut r = rng(cfg.seed ^ 0x57);
    let stairs: Vec<Monomial> = (0..20)
        .map(|_| {
            let n = r_n(&mut r, cfg.n(4).max(2));
            random_monomial(&mut r, n, VarSet::full(n), 3)
        })
        .collect();
    outcomes.extend(map_collect(par, &stairs, |w| -> Outcome {
        let d = staircase_quotient(w, VarSet::full(w.n()))?;
        if let Some(msg) = verified(&d, par)? {
            return Ok(Some(msg));
        }
        Ok(expect_eq(format!("staircase of {w}"), d.sdepth(), Sdepth::Finite(w.n() - 1)))
    }));
    report("AC6", "builders verify and reach their values", start, outcomes, None)
}

/// Number of random colon triples in AC7.
pub const AC7_INSTANCES: usize = 60;

pub fn check_ac7(cfg: &SuiteConfig) -> CheckReport {
    let start = Instant::now();
    let par = cfg.parallelism;
    let mut r = rng(cfg.seed ^ 0xC0);
    let triples: Vec<(QuotientModule, Monomial)> =
        (0..AC7_INSTANCES).map(|_| random_colon_triple(&mut r, cfg.n(4))).collect();
    let outcomes = map_collect(par, &triples, |(m, u)| -> Outcome {
        let res = sdepth_exact(m, &cfg.solver())?;
        let d = res.certificate.expect("exact search returns a certificate");
        let transformed = colon_transform(&d, u)?;
        match (m.colon(u), transformed) {
            (None, ColonOutcome::Collapsed) => Ok(None),
            (Some(c), ColonOutcome::Decomposition(t)) => {
                let v = exact(&c, cfg)?;
                if v < res.value {
                    return Ok(Some(format!("{m} : {u}: colon sdepth {v} < {}", res.value)));
                }
                if let Some(msg) = verified(&t, par)? {
                    return Ok(Some(msg));
                }
                Ok((t.sdepth() < res.value)
                    .then(|| format!("{m} : {u}: transformed certificate has sdepth {}", t.sdepth())))
            }
            (c, t) => Ok(Some(format!("{m} : {u}: collapse mismatch ({c:?} vs {t:?})"))),
        }
    });
    report("AC7", "colon ideals do not lower sdepth", start, outcomes, None)
}

pub fn check_ac8(batches: &[&Solved]) -> CheckReport {
    let start = Instant::now();
    let mut outcomes = Vec::new();
    for s in batches {
        outcomes.extend(s.each(|m, v| {
            Ok(match depth_closed_form(m) {
                Some(d) if v >= Sdepth::Finite(d.value) => None,
                Some(d) => Some(format!("{m}: sdepth {v} < depth {}", d.value)),
                None => Some(format!("{m}: no depth closed form")),
            })
        }));
    }
    let solving: Duration = batches.iter().map(|s| s.elapsed).sum();
    report_with("AC8", "sdepth >= depth for CI quotients", start.elapsed() + solving, outcomes, None)
}

/// Instances per reduction in AC9.
pub const AC9_PER_LEMMA: usize = 25;

fn minus_one(v: Sdepth) -> Sdepth {
    match v {
        Sdepth::Finite(k) => Sdepth::Finite(k.saturating_sub(1)),
        Sdepth::Infinity => Sdepth::Infinity,
    }
}

pub fn check_ac9(cfg: &SuiteConfig) -> CheckReport {
    use rand::Rng;
    let start = Instant::now();
    let top = cfg.n(4).max(2);
    let mut r = rng(cfg.seed ^ 0xA9);
    // (label, composite, reduced module, reduced ring, shift by -1)
    let mut cases: Vec<(&'static str, QuotientModule, QuotientModule, VarSet, bool)> = Vec::new();
    for _ in 0..AC9_PER_LEMMA {
        let n = r.random_range(2..=top);
        let rest = VarSet::full(n).difference(VarSet::singleton(0));
        let m = random_module_in(&mut r, n, rest, 2);
        let xb = Monomial::power(n, 0, r.random_range(1..=3));
        let comp = QuotientModule::new(m.j().with_gen(&xb).unwrap(), m.i().with_gen(&xb).unwrap()).unwrap();
        cases.push(("power", comp, m, rest, false));
    }
    for _ in 0..AC9_PER_LEMMA {
        let n = r.random_range(2..=top);
        let rest = VarSet::full(n).difference(VarSet::singleton(0));
        let j = random_proper_ideal(&mut r, n, rest, 2);
        let a = r.random_range(1..=2);
        let b = r.random_range(a + 1..=3);
        let comp = QuotientModule::new(
            j.with_gen(&Monomial::power(n, 0, a)).unwrap(),
            j.with_gen(&Monomial::power(n, 0, b)).unwrap(),
        )
        .unwrap();
        cases.push(("annulus", comp, QuotientModule::quotient_ring(j).unwrap(), rest, false));
    }
    for _ in 0..AC9_PER_LEMMA {
        let n = r.random_range(2..=top);
        let (a, b) = random_split(&mut r, n);
        let m = random_module_in(&mut r, n, a, 2);
        let u = random_monomial(&mut r, n, b, 2);
        let comp = QuotientModule::new(m.j().with_gen(&u).unwrap(), m.i().with_gen(&u).unwrap()).unwrap();
        cases.push(("add-u", comp, m, VarSet::full(n), true));
    }
    for _ in 0..AC9_PER_LEMMA {
        let n = r.random_range(2..=top);
        let (a, b) = random_split(&mut r, n);
        let j = random_proper_ideal(&mut r, n, a, 2);
        let u = random_monomial(&mut r, n, b, 2);
        let v = u.mul(&random_monomial(&mut r, n, b, 1));
        let comp = QuotientModule::new(j.with_gen(&u).unwrap(), j.with_gen(&v).unwrap()).unwrap();
        cases.push(("u-over-v", comp, QuotientModule::quotient_ring(j).unwrap(), VarSet::full(n), true));
    }
    let solver = cfg.solver();
    let outcomes = map_collect(cfg.parallelism, &cases, |(label, comp, red, ring, shift)| -> Outcome {
        let got = exact(comp, cfg)?;
        let base = sdepth_exact_over(red, *ring, &solver)?.value;
        let want = if *shift { minus_one(base) } else { base };
        Ok(expect_eq(format!("[{label}] {comp}"), got, want))
    });
    report("AC9", "reductions preserve sdepth", start, outcomes, None)
}

/// AC5's instances.
pub fn ac5_instances(cfg: &SuiteConfig) -> Vec<QuotientModule> {
    separated_family(cfg.n(5))
}

/// All nine checks in order.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let ac4 = Solved::new(ac4_instances(cfg), cfg);
    let ac5 = Solved::new(ac5_instances(cfg), cfg);
    vec![
        check_ac1(cfg),
        check_ac2(cfg),
        check_ac3(cfg),
        check_ac4(&ac4),
        check_ac5(&ac5),
        check_ac6(cfg),
        check_ac7(cfg),
        check_ac8(&[&ac4, &ac5]),
        check_ac9(cfg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_family_counts() {
        // n = 1: a in {1,2}; m = 0 gives 2, m = 1 gives b in {2,3} resp. {3}
        assert_eq!(irreducible_family(1).len(), 2 + 2 + 1);
    }

    #[test]
    fn small_suite_passes() {
        let cfg = SuiteConfig {
            max_n: 3,
            ..SuiteConfig::default()
        };
        for r in run_suite(&cfg) {
            assert!(r.passed, "{r}");
        }
    }
}
