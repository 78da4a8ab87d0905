//! Explicit Stanley decompositions for structured modules.
//!
//! Each builder assembles a decomposition out of smaller ones and states the
//! module it claims to decompose; nothing here is trusted, every output is
//! meant to be checked with [`crate::verify::verify`].
//!
//! A decomposition "over a block" lives on the subring `K[ring]` of the
//! ambient ring (see [`StanleyDecomposition`]). Variables that appear in no
//! generator are put in the second block of every product and split.

use crate::decomposition::{StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::monomial::{ci_align, CiPairing, Monomial, MonomialIdeal, QuotientModule, VarSet};
use crate::solver::{sdepth_exact_over, SolverConfig};

fn ring_var_check(d: &StanleyDecomposition, var: usize) -> Result<()> {
    if var >= d.n() {
        return Err(Error::domain(format!("x{} is outside the ring", var + 1)));
    }
    let mentions = d.ring().contains(var)
        || d
            .spaces()
            .iter()
            .any(|s| s.root.exp(var) > 0 || s.free.contains(var));
    if mentions {
        return Err(Error::domain(format!(
            "decomposition already involves x{}",
            var + 1
        )));
    }
    Ok(())
}

fn shifted_copies(
    d: &StanleyDecomposition,
    var: usize,
    powers: std::ops::Range<u32>,
) -> impl Iterator<Item = StanleySpace> + '_ {
    let n = d.n();
    powers.flat_map(move |i| {
        let x = Monomial::power(n, var, i);
        d.spaces().iter().map(move |s| s.shifted(&x))
    })
}

fn build(module: QuotientModule, ring: VarSet, spaces: Vec<StanleySpace>) -> Result<StanleyDecomposition> {
    StanleyDecomposition::new(module, ring, spaces).map(StanleyDecomposition::sorted)
}

/// From a decomposition of `J/I` not involving `x_var`, the decomposition
/// `⊕_{i<b} x_var^i (J/I)` of `(x_var^b, J) / (x_var^b, I)`.
pub fn lift_power(var: usize, b: u32, d: &StanleyDecomposition) -> Result<StanleyDecomposition> {
    if b == 0 {
        return Err(Error::domain("the power must be at least 1"));
    }
    ring_var_check(d, var)?;
    let n = d.n();
    let xb = Monomial::power(n, var, b);
    let m = d.module();
    let module = QuotientModule::new(m.j().with_gen(&xb)?, m.i().with_gen(&xb)?)?;
    let mut ring = d.ring();
    ring.insert(var);
    build(module, ring, shifted_copies(d, var, 0..b).collect())
}

/// From a decomposition of `S'/J` not involving `x_var`, the decomposition
/// `⊕_{a≤i<b} x_var^i (S'/J)` of `(x_var^a, J) / (x_var^b, J)`.
pub fn annulus(var: usize, a: u32, b: u32, d: &StanleyDecomposition) -> Result<StanleyDecomposition> {
    if a == 0 || a >= b {
        return Err(Error::domain(format!("need 1 <= a < b, got a = {a}, b = {b}")));
    }
    ring_var_check(d, var)?;
    let m = d.module();
    if !m.j().is_unit() {
        return Err(Error::domain("annulus needs a decomposition of a quotient ring S'/J"));
    }
    let n = d.n();
    let j = m.i();
    let module = QuotientModule::new(
        j.with_gen(&Monomial::power(n, var, a))?,
        j.with_gen(&Monomial::power(n, var, b))?,
    )?;
    let mut ring = d.ring();
    ring.insert(var);
    build(module, ring, shifted_copies(d, var, a..b).collect())
}

/// `(x_var^a, J) / (x_var^b, I)` from decompositions of `J/I` and `S'/I`.
///
/// With `a = b` this is [`lift_power`] of the first.
pub fn combine_mixed(
    var: usize,
    a: u32,
    b: u32,
    d1: &StanleyDecomposition,
    d2: &StanleyDecomposition,
) -> Result<StanleyDecomposition> {
    if a == b {
        return lift_power(var, a, d1);
    }
    if a == 0 || a > b {
        return Err(Error::domain(format!("need 1 <= a <= b, got a = {a}, b = {b}")));
    }
    ring_var_check(d1, var)?;
    ring_var_check(d2, var)?;
    let (m1, m2) = (d1.module(), d2.module());
    if d1.ring() != d2.ring() {
        return Err(Error::domain("both decompositions must live on the same ring"));
    }
    if !m2.j().is_unit() || m2.i() != m1.i() {
        return Err(Error::domain(format!(
            "second decomposition must be of S'/{}, got {m2}",
            m1.i()
        )));
    }
    let n = d1.n();
    let module = QuotientModule::new(
        m1.j().with_gen(&Monomial::power(n, var, a))?,
        m1.i().with_gen(&Monomial::power(n, var, b))?,
    )?;
    let mut ring = d1.ring();
    ring.insert(var);
    let spaces = shifted_copies(d1, var, 0..a)
        .chain(shifted_copies(d2, var, a..b))
        .collect();
    build(module, ring, spaces)
}

/// `(J_1, I) / (I_1, I)` from a decomposition of `J_1/I_1` on one block and
/// of `S''/I` on a disjoint block: all products `u_i v_j K[Z_i ∪ Y_j]`.
pub fn product(d1: &StanleyDecomposition, d2: &StanleyDecomposition) -> Result<StanleyDecomposition> {
    if d1.n() != d2.n() {
        return Err(Error::RingMismatch {
            expected: d1.n(),
            found: d2.n(),
        });
    }
    if !d1.ring().is_disjoint(d2.ring()) {
        return Err(Error::domain(format!(
            "blocks {} and {} overlap",
            d1.ring(),
            d2.ring()
        )));
    }
    let (m1, m2) = (d1.module(), d2.module());
    if !m2.j().is_unit() {
        return Err(Error::domain(format!(
            "second factor must decompose a quotient ring, got {m2}"
        )));
    }
    let module = QuotientModule::new(m1.j().sum(m2.i())?, m1.i().sum(m2.i())?)?;
    let mut spaces = Vec::with_capacity(d1.len() * d2.len());
    for s in d1.spaces() {
        for t in d2.spaces() {
            spaces.push(StanleySpace::new(s.root.mul(&t.root), s.free.union(t.free)));
        }
    }
    build(module, d1.ring().union(d2.ring()), spaces)
}

/// Decompositions feeding [`ses_split`]: block `A` carries `J_1 ⊇ I_1`,
/// block `B` carries `J_2 ⊇ I_2`.
pub struct SplitParts<'a> {
    /// `J_1/I_1` over `A`.
    pub j1_mod_i1: &'a StanleyDecomposition,
    /// `S'/J_1` over `A`.
    pub ring_mod_j1: &'a StanleyDecomposition,
    /// `J_2/I_2` over `B`.
    pub j2_mod_i2: &'a StanleyDecomposition,
    /// `S''/I_2` over `B`.
    pub ring_mod_i2: &'a StanleyDecomposition,
}

/// `(J_1, J_2) / (I_1, I_2)` as `(J_1,I_2)/(I_1,I_2) ⊕ (J_1,J_2)/(J_1,I_2)`.
pub fn ses_split(parts: &SplitParts<'_>) -> Result<StanleyDecomposition> {
    let a = parts.j1_mod_i1.ring();
    let b = parts.j2_mod_i2.ring();
    if parts.ring_mod_j1.ring() != a || parts.ring_mod_i2.ring() != b {
        return Err(Error::domain("each block's decompositions must share a ring"));
    }
    let j1 = parts.j1_mod_i1.module().j();
    let i1 = parts.j1_mod_i1.module().i();
    let j2 = parts.j2_mod_i2.module().j();
    let i2 = parts.j2_mod_i2.module().i();
    if parts.ring_mod_j1.module().i() != j1 || parts.ring_mod_i2.module().i() != i2 {
        return Err(Error::domain("quotient-ring parts do not match J_1 and I_2"));
    }
    if j2.is_unit() {
        return Err(Error::domain("J_2 must be a proper ideal"));
    }
    let first = product(parts.j1_mod_i1, parts.ring_mod_i2)?;
    let second = product(parts.j2_mod_i2, parts.ring_mod_j1)?;
    let module = QuotientModule::new(j1.sum(j2)?, i1.sum(i2)?)?;
    let spaces = first.into_spaces().into_iter().chain(second.into_spaces()).collect();
    build(module, a.union(b), spaces)
}

/// `S/(w)` over `K[ring]`.
///
/// With `supp(w) = {i_1 < .. < i_k}` and exponents `c_l`, the spaces are
/// `x_{i_1}^{c_1} .. x_{i_{j-1}}^{c_{j-1}} x_{i_j}^t · K[ring \ {x_{i_j}}]`
/// for `j = 1..k`, `0 ≤ t < c_j`. Each has dimension `|ring| - 1`.
pub fn staircase_quotient(w: &Monomial, ring: VarSet) -> Result<StanleyDecomposition> {
    if w.is_one() {
        return Err(Error::domain("staircase of the unit monomial"));
    }
    let n = w.n();
    let supp = w.support();
    if !supp.is_subset(ring) {
        return Err(Error::domain(format!("{w} uses variables outside {ring}")));
    }
    let mut spaces = Vec::new();
    let mut prefix = Monomial::one(n);
    for i in supp.iter() {
        let mut free = ring;
        free.remove(i);
        for t in 0..w.exp(i) {
            spaces.push(StanleySpace::new(prefix.mul(&Monomial::power(n, i, t)), free));
        }
        prefix = prefix.mul(&Monomial::power(n, i, w.exp(i)));
    }
    let module = QuotientModule::quotient_ring(MonomialIdeal::new(n, [w.clone()])?)?;
    build(module, ring, spaces)
}

/// `S/(w_1, .., w_r)` for monomials with pairwise disjoint supports, as a
/// product of staircases; every space has dimension `|ring| - r`.
pub fn ci_quotient(ws: &[Monomial], n: usize, ring: VarSet) -> Result<StanleyDecomposition> {
    let rest = ws
        .iter()
        .fold(ring, |r, w| r.difference(w.support()));
    let mut d = StanleyDecomposition::new(
        QuotientModule::quotient_ring(MonomialIdeal::zero(n))?,
        rest,
        vec![StanleySpace::new(Monomial::one(n), rest)],
    )?;
    let mut used = VarSet::empty();
    for w in ws {
        let s = w.support();
        if !s.is_disjoint(used) || w.is_one() {
            return Err(Error::domain("generators must form a regular sequence"));
        }
        used = used.union(s);
        d = product(&staircase_quotient(w, s)?, &d)?;
    }
    Ok(d)
}

/// `(u)/(v)` for `u | v` over `ring`: `u · S/(v/u)`; empty when `u = v`.
fn principal_pair(u: &Monomial, v: &Monomial, ring: VarSet) -> Result<StanleyDecomposition> {
    let n = u.n();
    let module = QuotientModule::new(MonomialIdeal::new(n, [u.clone()])?, MonomialIdeal::new(n, [v.clone()])?)?;
    if u == v {
        return StanleyDecomposition::new(module, ring, Vec::new());
    }
    let w = v.checked_div(u).ok_or_else(|| Error::domain(format!("{u} does not divide {v}")))?;
    let spaces = staircase_quotient(&w, ring)?
        .spaces()
        .iter()
        .map(|s| s.shifted(u))
        .collect();
    build(module, ring, spaces)
}

fn ci_pairs_rec(pairs: &[(Monomial, Monomial)], n: usize, ring: VarSet) -> Result<StanleyDecomposition> {
    let (last, init) = pairs.split_last().expect("at least one pair");
    if init.is_empty() {
        return principal_pair(&last.0, &last.1, ring);
    }
    let a = init
        .iter()
        .fold(VarSet::empty(), |s, (_, v)| s.union(v.support()));
    let b = ring.difference(a);
    let us: Vec<Monomial> = init.iter().map(|(u, _)| u.clone()).collect();
    let j1_mod_i1 = ci_pairs_rec(init, n, a)?;
    let ring_mod_j1 = ci_quotient(&us, n, a)?;
    let j2_mod_i2 = principal_pair(&last.0, &last.1, b)?;
    let ring_mod_i2 = staircase_quotient(&last.1, b)?;
    ses_split(&SplitParts {
        j1_mod_i1: &j1_mod_i1,
        ring_mod_j1: &ring_mod_j1,
        j2_mod_i2: &j2_mod_i2,
        ring_mod_i2: &ring_mod_i2,
    })
}

fn aligned(m: &QuotientModule) -> Result<CiPairing> {
    if m.is_zero() {
        return Err(Error::domain("the module is zero"));
    }
    ci_align(m.j(), m.i())
}

/// `(u_1,..,u_m)/(v_1,..,v_m)` for complete intersections with `u_i | v_i`:
/// every space has dimension `n - m`.
pub fn ci_pair_decomposition(m: &QuotientModule) -> Result<StanleyDecomposition> {
    let pairing = aligned(m)?;
    if !pairing.unpaired.is_empty() {
        return Err(Error::domain(format!(
            "J has {} generators but I has {}",
            pairing.q(),
            pairing.p()
        )));
    }
    let n = m.n();
    let d = ci_pairs_rec(&pairing.pairs, n, VarSet::full(n))?;
    build(m.clone(), d.ring(), d.into_spaces())
}

fn separated_rec(
    pairs: &[(Monomial, Monomial)],
    extra: &[Monomial],
    n: usize,
    ring: VarSet,
    cfg: &SolverConfig,
) -> Result<StanleyDecomposition> {
    let Some(((u1, v1), rest)) = pairs.split_first() else {
        let j = MonomialIdeal::new(n, extra.iter().cloned())?;
        let module = QuotientModule::ideal(j);
        return sdepth_exact_over(&module, ring, cfg)?
            .certificate
            .ok_or_else(|| Error::domain("solver returned no certificate"));
    };
    let b = v1.support();
    let a = ring.difference(b);
    // (J_1, u_1)/(I_1, u_1): J_1/I_1 on A times S''/(u_1) on B
    let inner = separated_rec(rest, extra, n, a, cfg)?;
    let first = product(&inner, &staircase_quotient(u1, b)?)?;
    // (I_1, u_1)/(I_1, v_1): (u_1)/(v_1) on B times S'/I_1 on A
    let vs: Vec<Monomial> = rest.iter().map(|(_, v)| v.clone()).collect();
    let second = product(&principal_pair(u1, v1, b)?, &ci_quotient(&vs, n, a)?)?;

    let j = MonomialIdeal::new(
        n,
        pairs.iter().map(|(u, _)| u.clone()).chain(extra.iter().cloned()),
    )?;
    let i = MonomialIdeal::new(n, pairs.iter().map(|(_, v)| v.clone()))?;
    let spaces = first.into_spaces().into_iter().chain(second.into_spaces()).collect();
    build(QuotientModule::new(j, i)?, ring, spaces)
}

/// Decomposition of a complete-intersection quotient whose unpaired
/// generators of `J` avoid the supports of all generators of `I`, with
/// Stanley depth `n - p - ⌊(q-p)/2⌋`.
///
/// The innermost piece, a complete-intersection ideal, is decomposed by the
/// exact solver.
pub fn separated_decomposition(m: &QuotientModule, cfg: &SolverConfig) -> Result<StanleyDecomposition> {
    let pairing = aligned(m)?;
    if !pairing.is_separated() {
        return Err(Error::domain(
            "some unpaired generator of J shares variables with I; use the exact solver",
        ));
    }
    if pairing.unpaired.is_empty() {
        return ci_pair_decomposition(m);
    }
    let n = m.n();
    let d = separated_rec(&pairing.pairs, &pairing.unpaired, n, VarSet::full(n), cfg)?;
    build(m.clone(), d.ring(), d.into_spaces())
}

/// From a decomposition of `(J, u)/(I, u)` with `J, I` in the variables `V`
/// and `u` outside them, the decomposition of `J/I` over `K[V]` formed by
/// the spaces rooted in `V`, with free sets cut down to `V`.
pub fn restrict_to_subring(d: &StanleyDecomposition, u: &Monomial, v: VarSet) -> Result<StanleyDecomposition> {
    if u.is_one() || !u.support().is_disjoint(v) {
        return Err(Error::domain(format!("{u} must be a non-unit outside {v}")));
    }
    if !v.is_subset(d.ring()) || !u.support().is_subset(d.ring()) {
        return Err(Error::domain("restriction leaves the decomposition's ring"));
    }
    let n = d.n();
    let inside = |ideal: &MonomialIdeal| {
        MonomialIdeal::new(
            n,
            ideal
                .gens()
                .iter()
                .filter(|g| g.support().is_subset(v))
                .cloned(),
        )
    };
    let m = d.module();
    let (j, i) = (inside(m.j())?, inside(m.i())?);
    if &j.with_gen(u)? != m.j() || &i.with_gen(u)? != m.i() {
        return Err(Error::domain(format!(
            "module {m} is not of the form (J, {u}) / (I, {u}) with J, I in {v}"
        )));
    }
    let spaces = d
        .spaces()
        .iter()
        .filter(|s| s.root.support().is_subset(v))
        .map(|s| StanleySpace::new(s.root.clone(), s.free.intersection(v)))
        .collect();
    build(QuotientModule::new(j, i)?, v, spaces)
}

/// Result of [`colon_transform`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColonOutcome {
    /// `(I:u) = (J:u)`: the colon module is zero.
    Collapsed,
    Decomposition(StanleyDecomposition),
}

/// From a decomposition of `J/I`, one of `(J:u)/(I:u)` whose Stanley depth is
/// at least as large.
///
/// One variable factor at a time: spaces with `x ∉ supp(root) ∪ Z` vanish,
/// the others become `(lcm(root, x)/x) K[Z]`.
pub fn colon_transform(d: &StanleyDecomposition, u: &Monomial) -> Result<ColonOutcome> {
    if u.n() != d.n() {
        return Err(Error::RingMismatch {
            expected: d.n(),
            found: u.n(),
        });
    }
    if !u.support().is_subset(d.ring()) {
        return Err(Error::domain(format!("{u} is outside the ring {}", d.ring())));
    }
    let Some(module) = d.module().colon(u) else {
        return Ok(ColonOutcome::Collapsed);
    };
    let n = d.n();
    let mut spaces: Vec<StanleySpace> = d.spaces().to_vec();
    for i in u.support().iter() {
        let x = Monomial::var(n, i);
        for _ in 0..u.exp(i) {
            spaces = spaces
                .into_iter()
                .filter(|s| s.root.exp(i) > 0 || s.free.contains(i))
                .map(|s| StanleySpace::new(s.root.lcm(&x).saturating_div(&x), s.free))
                .collect();
        }
    }
    build(module, d.ring(), spaces).map(ColonOutcome::Decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::Sdepth;
    use crate::solver::sdepth_exact;
    use crate::text::{parse_module, parse_monomial};
    use crate::verify::verify;

    fn mono(t: &str, n: usize) -> Monomial {
        parse_monomial(t, Some(n)).unwrap()
    }

    fn vars(ix: &[usize]) -> VarSet {
        ix.iter().map(|i| i - 1).collect()
    }

    fn assert_valid(d: &StanleyDecomposition) {
        let r = verify(d).unwrap();
        assert!(r.ok, "{d}: {:?}", r.violations);
    }

    fn over(text: &str, n: usize, ring: &[usize], spaces: &[(&str, &[usize])]) -> StanleyDecomposition {
        let m = parse_module(text, Some(n)).unwrap();
        let spaces = spaces
            .iter()
            .map(|(r, z)| StanleySpace::new(mono(r, n), vars(z)))
            .collect();
        StanleyDecomposition::new(m, vars(ring), spaces).unwrap()
    }

    #[test]
    fn lift_power_examples() {
        let d = over("(x2) / (x2^2)", 2, &[2], &[("x2", &[])]);
        assert_valid(&d);
        let once = lift_power(0, 1, &d).unwrap();
        assert_eq!(once.spaces(), d.spaces());
        assert_valid(&once);

        let d = over("(x2) / (0)", 2, &[2], &[("x2", &[2])]);
        let lifted = lift_power(0, 2, &d).unwrap();
        assert_eq!(lifted.to_string(), "x2*K[x2] + x1*x2*K[x2]");
        assert_eq!(lifted.module().to_string(), "(x2,x1^2) / (x1^2)");
        assert_valid(&lifted);
    }

    #[test]
    fn lift_power_rejects_x1() {
        let d = over("(x1) / (0)", 2, &[1, 2], &[("x1", &[1, 2])]);
        assert!(lift_power(0, 2, &d).is_err());
    }

    #[test]
    fn annulus_examples() {
        let d = over("(1) / (x2)", 2, &[2], &[("1", &[])]);
        let a = annulus(0, 1, 2, &d).unwrap();
        assert_eq!(a.to_string(), "x1*K[]");
        assert_eq!(a.module().to_string(), "(x1,x2) / (x2,x1^2)");
        assert_valid(&a);

        let d = over("(1) / (0)", 2, &[2], &[("1", &[2])]);
        let a = annulus(0, 1, 3, &d).unwrap();
        assert_eq!(a.to_string(), "x1*K[x2] + x1^2*K[x2]");
        assert_valid(&a);
        assert!(annulus(0, 2, 2, &d).is_err());
    }

    #[test]
    fn combine_mixed_examples() {
        let d1 = over("(x2) / (x2^2)", 2, &[2], &[("x2", &[])]);
        let d2 = over("(1) / (x2^2)", 2, &[2], &[("1", &[]), ("x2", &[])]);
        let c = combine_mixed(0, 1, 2, &d1, &d2).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.module().to_string(), "(x1,x2) / (x1^2,x2^2)");
        assert_valid(&c);
        let same = combine_mixed(0, 2, 2, &d1, &d2).unwrap();
        assert_eq!(same, lift_power(0, 2, &d1).unwrap());
    }

    #[test]
    fn product_examples() {
        let d1 = over("(x1) / (x1^2)", 2, &[1], &[("x1", &[1])]);
        // wrong: x1*K[x1] reaches x1^2; use the correct one-space decomposition
        assert!(!verify(&d1).unwrap().ok);
        let d1 = over("(x1) / (x1^2)", 2, &[1], &[("x1", &[])]);
        let d2 = over("(1) / (x2^2)", 2, &[2], &[("1", &[]), ("x2", &[])]);
        let p = product(&d1, &d2).unwrap();
        assert_eq!(p.to_string(), "x1*K[] + x1*x2*K[]");
        assert_eq!(p.module().to_string(), "(x1,x2^2) / (x1^2,x2^2)");
        assert_valid(&p);

        // zero-ideal factor enlarges every free set
        let free = over("(1) / (0)", 2, &[2], &[("1", &[2])]);
        let p = product(&d1, &free).unwrap();
        assert_eq!(p.to_string(), "x1*K[x2]");
        assert_valid(&p);

        assert!(product(&d1, &d1).is_err());
    }

    #[test]
    fn ses_split_lemma_shape() {
        for n in [2usize, 3] {
            let all: Vec<usize> = (2..=n).collect();
            let j1_mod_i1 = over("(x1) / (x1^2)", n, &[1], &[("x1", &[])]);
            let ring_mod_j1 = over("(1) / (x1)", n, &[1], &[("1", &[])]);
            let j2_mod_i2 = staircase_shift("x2", "x2^2", n, &all);
            let ring_mod_i2 = staircase_quotient(&mono("x2^3", n), vars(&all)).unwrap();
            let d = ses_split(&SplitParts {
                j1_mod_i1: &j1_mod_i1,
                ring_mod_j1: &ring_mod_j1,
                j2_mod_i2: &j2_mod_i2,
                ring_mod_i2: &ring_mod_i2,
            })
            .unwrap();
            assert_eq!(d.module().to_string(), "(x1,x2) / (x1^2,x2^3)");
            assert_valid(&d);
            assert_eq!(d.sdepth(), Sdepth::Finite(n - 2));
            let exact = sdepth_exact(d.module(), &SolverConfig::sequential()).unwrap();
            assert_eq!(exact.value, Sdepth::Finite(n - 2));
        }
    }

    fn staircase_shift(u: &str, w: &str, n: usize, ring: &[usize]) -> StanleyDecomposition {
        let u = mono(u, n);
        principal_pair(&u, &u.mul(&mono(w, n)), vars(ring)).unwrap()
    }

    #[test]
    fn ses_split_with_equal_second_block() {
        let j1_mod_i1 = over("(x1) / (x1^2)", 2, &[1], &[("x1", &[])]);
        let ring_mod_j1 = over("(1) / (x1)", 2, &[1], &[("1", &[])]);
        let j2_mod_i2 = over("(x2) / (x2)", 2, &[2], &[]);
        let ring_mod_i2 = staircase_quotient(&mono("x2", 2), vars(&[2])).unwrap();
        let d = ses_split(&SplitParts {
            j1_mod_i1: &j1_mod_i1,
            ring_mod_j1: &ring_mod_j1,
            j2_mod_i2: &j2_mod_i2,
            ring_mod_i2: &ring_mod_i2,
        })
        .unwrap();
        assert_eq!(d, product(&j1_mod_i1, &ring_mod_i2).unwrap());
    }

    #[test]
    fn staircase_examples() {
        let d = staircase_quotient(&mono("x1", 2), VarSet::full(2)).unwrap();
        assert_eq!(d.to_string(), "1*K[x2]");
        let d = staircase_quotient(&mono("x1^2*x2", 3), VarSet::full(3)).unwrap();
        assert_eq!(d.to_string(), "1*K[x2,x3] + x1*K[x2,x3] + x1^2*K[x1,x3]");
        assert_valid(&d);
        assert_eq!(d.sdepth(), Sdepth::Finite(2));
        assert!(staircase_quotient(&Monomial::one(2), VarSet::full(2)).is_err());
    }

    #[test]
    fn ci_pair_examples() {
        let m = parse_module("(x1) / (x1^3)", None).unwrap();
        let d = ci_pair_decomposition(&m).unwrap();
        assert_eq!(d.to_string(), "x1*K[] + x1^2*K[]");
        assert_valid(&d);

        let m = parse_module("(x1,x2) / (x1^2,x2^3)", Some(3)).unwrap();
        let d = ci_pair_decomposition(&m).unwrap();
        assert_valid(&d);
        assert!(d.spaces().iter().all(|s| s.dim() == 1));

        let m = parse_module("(x1,x2) / (x1,x2)", None).unwrap();
        assert!(ci_pair_decomposition(&m).is_err());
        let m = parse_module("(x1,x2) / (x1^2)", None).unwrap();
        assert!(ci_pair_decomposition(&m).is_err());
    }

    #[test]
    fn separated_examples() {
        let cfg = SolverConfig::sequential();
        let m = parse_module("(x1,x2,x3,x4) / (x1^2)", None).unwrap();
        let d = separated_decomposition(&m, &cfg).unwrap();
        assert_valid(&d);
        assert_eq!(d.sdepth(), Sdepth::Finite(2));

        let m = parse_module("(x1,x2) / (x1^2)", None).unwrap();
        let d = separated_decomposition(&m, &cfg).unwrap();
        assert_valid(&d);
        assert_eq!(d.sdepth(), Sdepth::Finite(1));
        assert_eq!(sdepth_exact(&m, &cfg).unwrap().value, Sdepth::Finite(1));

        let m = parse_module("(x1,x2) / (x1^2,x2^2)", None).unwrap();
        assert_eq!(
            separated_decomposition(&m, &cfg).unwrap(),
            ci_pair_decomposition(&m).unwrap()
        );
    }

    #[test]
    fn separated_refuses_triangle() {
        let m = parse_module("(x1,x2,x3) / (x1*x2*x3)", None).unwrap();
        let cfg = SolverConfig::sequential();
        assert!(matches!(separated_decomposition(&m, &cfg), Err(Error::Domain(_))));
        assert_eq!(sdepth_exact(&m, &cfg).unwrap().value, Sdepth::Finite(2));
    }

    #[test]
    fn restrict_examples() {
        let d = over("(x1,x2) / (x1,x2^2)", 2, &[1, 2], &[("x2", &[2])]);
        assert!(!verify(&d).unwrap().ok);
        let d = over("(x1,x2) / (x1,x2^2)", 2, &[1, 2], &[("x2", &[])]);
        assert_valid(&d);
        let r = restrict_to_subring(&d, &mono("x1", 2), vars(&[2])).unwrap();
        assert_eq!(r.to_string(), "x2*K[]");
        assert_eq!(r.module().to_string(), "(x2) / (x2^2)");
        assert_valid(&r);
    }

    #[test]
    fn restrict_keeps_decomposition_inside_subring() {
        let d = over("(x1) / (x1^2)", 2, &[1], &[("x1", &[])]);
        let lifted = lift_power(1, 1, &d).unwrap();
        let r = restrict_to_subring(&lifted, &mono("x2", 2), vars(&[1])).unwrap();
        assert_eq!(r.spaces(), d.spaces());
    }

    #[test]
    fn colon_examples() {
        let m = parse_module("(x1,x2,x3) / (x1*x2*x3)", None).unwrap();
        let d = StanleyDecomposition::over_full_ring(
            m,
            vec![
                StanleySpace::new(mono("x1", 3), vars(&[1, 2])),
                StanleySpace::new(mono("x2", 3), vars(&[2, 3])),
                StanleySpace::new(mono("x3", 3), vars(&[1, 3])),
            ],
        )
        .unwrap();
        let ColonOutcome::Decomposition(c) = colon_transform(&d, &mono("x1", 3)).unwrap() else {
            panic!("colon collapsed");
        };
        assert_eq!(c.to_string(), "1*K[x1,x2] + x3*K[x1,x3]");
        assert_eq!(c.module().to_string(), "(1) / (x2*x3)");
        assert_valid(&c);
        assert_eq!(c.sdepth(), Sdepth::Finite(2));

        let ColonOutcome::Decomposition(same) = colon_transform(&d, &Monomial::one(3)).unwrap() else {
            panic!("colon collapsed");
        };
        assert_eq!(same, d.clone().sorted());

        assert_eq!(
            colon_transform(&d, &mono("x1*x2*x3", 3)).unwrap(),
            ColonOutcome::Collapsed
        );
    }

    #[test]
    fn ci_quotient_dimensions() {
        let n = 5;
        let ws = [mono("x1^2*x2", n), mono("x3", n)];
        let d = ci_quotient(&ws, n, VarSet::full(n)).unwrap();
        assert_valid(&d);
        assert!(d.spaces().iter().all(|s| s.dim() == 3));
    }
}
