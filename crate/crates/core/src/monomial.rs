//! Monomials, monomial ideals and quotient modules `J/I`.
//!
//! Everything here is exact and immutable. A ring is identified only by its
//! variable count `n`; values from rings of different size are rejected at
//! construction time, never padded.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of variables (free-variable sets are `u64` masks).
pub const MAX_VARS: usize = 64;

/// A set of variable indices (0-based), stored as a bit mask.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(u64);

impl VarSet {
    pub const fn empty() -> Self {
        VarSet(0)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        if n == MAX_VARS {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        VarSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VarSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|i| i + 1)).finish()
    }
}

/// Formats as `{x1,x3}` (1-based).
impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        f.write_str("}")
    }
}

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        let exps = exps.into();
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Monomial { exps }
    }

    /// The unit monomial of a ring with `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// `x_i^e` (0-based `i`).
    pub fn power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial::new(exps)
    }

    pub fn var(n: usize, i: usize) -> Self {
        Monomial::power(n, i, 1)
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> VarSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_same_ring(&self, other: &Monomial) {
        assert_eq!(
            self.n(),
            other.n(),
            "monomials from rings with different variable counts"
        );
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.check_same_ring(other);
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.check_same_ring(other);
        self.zip_with(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.check_same_ring(other);
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.check_same_ring(other);
        self.zip_with(other, u32::min)
    }

    /// Componentwise `max(a_i - b_i, 0)`, i.e. `self / gcd(self, other)`.
    pub fn saturating_div(&self, other: &Monomial) -> Monomial {
        self.check_same_ring(other);
        self.zip_with(other, u32::saturating_sub)
    }

    /// Exact quotient, `None` unless `other | self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.saturating_div(other))
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| f(a, b))
                .collect::<Vec<_>>(),
        )
    }

    /// Keep only the coordinates listed in `ring`, in increasing order.
    pub fn project(&self, ring: VarSet) -> Monomial {
        Monomial::new(ring.iter().map(|i| self.exps[i]).collect::<Vec<_>>())
    }

    /// Inverse of [`Monomial::project`]: place coordinates back into an `n`-variable ring.
    pub fn embed(&self, n: usize, ring: VarSet) -> Monomial {
        debug_assert_eq!(ring.len(), self.n());
        let mut exps = vec![0; n];
        for (k, i) in ring.iter().enumerate() {
            exps[i] = self.exps[k];
        }
        Monomial::new(exps)
    }
}

/// Deterministic generator order: by total degree, then `x1 > x2 > ...`
/// in reverse lexicographic order, then lexicographically.
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| {
            // degrevlex: a > b iff the last nonzero entry of a - b is negative.
            for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                }
            }
            Ordering::Equal
        })
        .then_with(|| b.exps.cmp(&a.exps))
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formats as `x1^2*x3`; the unit monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Returns `true` iff every monomial is a non-unit and supports are pairwise disjoint.
pub fn is_regular_sequence(ms: &[Monomial]) -> bool {
    let mut seen = VarSet::empty();
    for m in ms {
        let s = m.support();
        if s.is_empty() || !s.is_disjoint(seen) {
            return false;
        }
        seen = seen.union(s);
    }
    true
}

/// A monomial ideal given by its minimal generating set.
///
/// The empty generating set is the zero ideal; a generating set `{1}` is the
/// whole ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Reduce `gens` to its divisibility antichain.
pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        if g.n() != n {
            return Err(Error::RingMismatch {
                expected: n,
                found: g.n(),
            });
        }
        all.push(g);
    }
    all.sort_by(canonical_cmp);
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    // Degree-ascending order: a divisor always comes before its multiples.
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(MonomialIdeal { n, gens: kept })
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(n, gens)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// Ideal generated by `x_i` for `i` in `vars`.
    pub fn variables(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        minimalize(n, vars.into_iter().map(|i| Monomial::var(n, i)))
            .expect("variables share the ring")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// Membership: some generator divides `w`.
    pub fn contains(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(w))
    }

    /// Membership for a raw exponent vector (no allocation).
    pub fn contains_exps(&self, w: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exps().iter().zip(w).all(|(a, b)| a <= b))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// The colon ideal `(self : u)`.
    pub fn colon(&self, u: &Monomial) -> MonomialIdeal {
        minimalize(self.n, self.gens.iter().map(|g| g.saturating_div(u)))
            .expect("colon stays in the ring")
    }

    /// The ideal sum `(self, other)`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::RingMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        minimalize(self.n, self.gens.iter().chain(other.gens.iter()).cloned())
    }

    /// `(self, w)`.
    pub fn with_gen(&self, w: &Monomial) -> Result<MonomialIdeal> {
        minimalize(self.n, self.gens.iter().cloned().chain([w.clone()]))
    }

    /// Minimal generators form a regular sequence (nonzero, proper, disjoint supports).
    pub fn is_complete_intersection(&self) -> bool {
        !self.gens.is_empty() && is_regular_sequence(&self.gens)
    }

    /// Union of generator supports.
    pub fn support(&self) -> VarSet {
        self.gens
            .iter()
            .fold(VarSet::empty(), |s, g| s.union(g.support()))
    }

    /// Componentwise maximum of generator exponents.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exps()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Restrict to the variables of `ring` (generators must avoid all others).
    pub fn project(&self, ring: VarSet) -> Result<MonomialIdeal> {
        if let Some(g) = self.gens.iter().find(|g| !g.support().is_subset(ring)) {
            return Err(Error::domain(format!(
                "generator {g} uses variables outside {ring}"
            )));
        }
        minimalize(ring.len(), self.gens.iter().map(|g| g.project(ring)))
    }

    pub fn embed(&self, n: usize, ring: VarSet) -> MonomialIdeal {
        minimalize(n, self.gens.iter().map(|g| g.embed(n, ring))).expect("embedding is total")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formats as `(x1,x2^2)`; the zero ideal prints as `(0)`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// The module `J/I` spanned by the monomials in `J \ I`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotientModule {
    j: MonomialIdeal,
    i: MonomialIdeal,
}

impl QuotientModule {
    /// Checks `I ⊆ J` and that `I` is a proper ideal.
    pub fn new(j: MonomialIdeal, i: MonomialIdeal) -> Result<Self> {
        if j.n != i.n {
            return Err(Error::RingMismatch {
                expected: j.n,
                found: i.n,
            });
        }
        if let Some(g) = i.gens.iter().find(|g| !j.contains(g)) {
            return Err(Error::NotContained {
                witness: g.to_string(),
            });
        }
        if i.is_unit() {
            return Err(Error::domain("I is the whole ring"));
        }
        Ok(QuotientModule { j, i })
    }

    /// The ideal `J` viewed as the module `J/0`.
    pub fn ideal(j: MonomialIdeal) -> Self {
        let n = j.n;
        QuotientModule {
            j,
            i: MonomialIdeal::zero(n),
        }
    }

    /// `S/I`.
    pub fn quotient_ring(i: MonomialIdeal) -> Result<Self> {
        QuotientModule::new(MonomialIdeal::unit(i.n), i)
    }

    pub fn n(&self) -> usize {
        self.j.n
    }

    pub fn j(&self) -> &MonomialIdeal {
        &self.j
    }

    pub fn i(&self) -> &MonomialIdeal {
        &self.i
    }

    /// `I = J`, i.e. no monomial survives.
    pub fn is_zero(&self) -> bool {
        self.j.is_subset_of(&self.i)
    }

    /// `w ∈ J` and `w ∉ I`.
    pub fn contains(&self, w: &Monomial) -> bool {
        self.j.contains(w) && !self.i.contains(w)
    }

    pub fn contains_exps(&self, w: &[u32]) -> bool {
        self.j.contains_exps(w) && !self.i.contains_exps(w)
    }

    /// `(J:u)/(I:u)`, or `None` when the two colons coincide.
    pub fn colon(&self, u: &Monomial) -> Option<QuotientModule> {
        let j = self.j.colon(u);
        let i = self.i.colon(u);
        if j == i {
            None
        } else {
            Some(QuotientModule { j, i })
        }
    }

    /// Variables appearing in some generator of `J` or `I`.
    pub fn support(&self) -> VarSet {
        self.j.support().union(self.i.support())
    }

    pub fn project(&self, ring: VarSet) -> Result<QuotientModule> {
        QuotientModule::new(self.j.project(ring)?, self.i.project(ring)?)
    }

    pub fn embed(&self, n: usize, ring: VarSet) -> QuotientModule {
        QuotientModule {
            j: self.j.embed(n, ring),
            i: self.i.embed(n, ring),
        }
    }
}

impl fmt::Debug for QuotientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuotientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.j, self.i)
    }
}

/// Generators of a complete-intersection pair, aligned so that `u_i | v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiPairing {
    /// `(u_i, v_i)` for `i = 1..p`, in the canonical order of the `v_i`.
    pub pairs: Vec<(Monomial, Monomial)>,
    /// `u_{p+1}, .., u_q` in canonical order.
    pub unpaired: Vec<Monomial>,
}

impl CiPairing {
    pub fn p(&self) -> usize {
        self.pairs.len()
    }

    pub fn q(&self) -> usize {
        self.pairs.len() + self.unpaired.len()
    }

    pub fn us(&self) -> Vec<Monomial> {
        self.pairs
            .iter()
            .map(|(u, _)| u.clone())
            .chain(self.unpaired.iter().cloned())
            .collect()
    }

    pub fn vs(&self) -> Vec<Monomial> {
        self.pairs.iter().map(|(_, v)| v.clone()).collect()
    }

    /// Supports of every unpaired `u` avoid the supports of all `v`.
    pub fn is_separated(&self) -> bool {
        let vsupp = self
            .pairs
            .iter()
            .fold(VarSet::empty(), |s, (_, v)| s.union(v.support()));
        self.unpaired.iter().all(|u| u.support().is_disjoint(vsupp))
    }
}

/// Pair every generator `v` of `I` with the generator `u` of `J` dividing it.
///
/// When several `u` divide the same `v`, the first in canonical order is
/// used; since each `u` divides at most one `v`, the pairing is injective.
pub fn ci_align(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<CiPairing> {
    if j.n != i.n {
        return Err(Error::RingMismatch {
            expected: j.n,
            found: i.n,
        });
    }
    if !j.is_complete_intersection() {
        return Err(Error::domain(format!("{j} is not a complete intersection")));
    }
    if i.is_zero() {
        return Err(Error::domain("I is the zero ideal"));
    }
    if !i.is_complete_intersection() {
        return Err(Error::domain(format!("{i} is not a complete intersection")));
    }
    let mut used = vec![false; j.gens.len()];
    let mut pairs = Vec::with_capacity(i.gens.len());
    for v in &i.gens {
        let k = j
            .gens
            .iter()
            .position(|u| u.divides(v))
            .ok_or_else(|| Error::NotContained {
                witness: v.to_string(),
            })?;
        debug_assert!(!used[k], "disjoint supports make the pairing injective");
        used[k] = true;
        pairs.push((j.gens[k].clone(), v.clone()));
    }
    let unpaired = j
        .gens
        .iter()
        .zip(used)
        .filter(|(_, u)| !u)
        .map(|(g, _)| g.clone())
        .collect();
    Ok(CiPairing { pairs, unpaired })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(1, &[&[1], &[2]]).gens(), &[m(&[1])]);
        assert_eq!(
            ideal(3, &[&[1, 1, 0], &[0, 0, 1]]).gens().len(),
            2,
            "antichain is kept"
        );
        let i = ideal(2, &[&[2, 0], &[1, 1], &[2, 1]]);
        let mut got = i.gens().to_vec();
        got.sort_by(|a, b| a.exps().cmp(b.exps()));
        assert_eq!(got, vec![m(&[1, 1]), m(&[2, 0])]);
    }

    #[test]
    fn minimalize_rejects_mixed_lengths() {
        let err = minimalize(2, [m(&[1, 0]), m(&[1])]).unwrap_err();
        assert_eq!(err, Error::RingMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn contains_examples() {
        let j = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(j.contains(&m(&[1, 0, 1])));
        let i = ideal(3, &[&[1, 1, 1]]);
        assert!(!i.contains(&m(&[1, 1, 0])));
        assert!(!MonomialIdeal::zero(3).contains(&m(&[4, 4, 4])));
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &[&[1, 1, 1]]);
        assert_eq!(i.colon(&m(&[1, 0, 0])), ideal(3, &[&[0, 1, 1]]));
        let i = ideal(3, &[&[2, 0, 0], &[0, 0, 1]]);
        assert_eq!(i.colon(&m(&[1, 0, 0])), ideal(3, &[&[1, 0, 0], &[0, 0, 1]]));
        assert_eq!(i.colon(&Monomial::one(3)), i);
    }

    #[test]
    fn support_examples() {
        assert_eq!(m(&[2, 0, 1]).support(), [0, 2].into_iter().collect());
        assert!(Monomial::one(3).support().is_empty());
        assert_eq!(m(&[1, 1, 1]).support(), VarSet::full(3));
    }

    #[test]
    fn regular_sequence_examples() {
        assert!(is_regular_sequence(&[m(&[2, 0, 0]), m(&[0, 1, 1])]));
        assert!(!is_regular_sequence(&[m(&[1, 1]), m(&[0, 3])]));
        assert!(is_regular_sequence(&[
            m(&[1, 0, 0]),
            m(&[0, 1, 0]),
            m(&[0, 0, 1])
        ]));
        assert!(!is_regular_sequence(&[Monomial::one(2)]));
    }

    #[test]
    fn ci_align_examples() {
        let j = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let i = ideal(3, &[&[1, 1, 1]]);
        let p = ci_align(&j, &i).unwrap();
        assert_eq!(p.pairs, vec![(m(&[1, 0, 0]), m(&[1, 1, 1]))]);
        assert_eq!(p.unpaired, vec![m(&[0, 1, 0]), m(&[0, 0, 1])]);

        let j = ideal(2, &[&[1, 0], &[0, 1]]);
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let p = ci_align(&j, &i).unwrap();
        assert!(p.pairs.contains(&(m(&[1, 0]), m(&[2, 0]))));
        assert!(p.pairs.contains(&(m(&[0, 1]), m(&[0, 3]))));
        assert!(p.unpaired.is_empty());

        let j = ideal(2, &[&[0, 1], &[1, 0]]);
        let i = ideal(2, &[&[3, 0]]);
        let p = ci_align(&j, &i).unwrap();
        assert_eq!(p.pairs, vec![(m(&[1, 0]), m(&[3, 0]))]);
        assert_eq!(p.unpaired, vec![m(&[0, 1])]);
    }

    #[test]
    fn ci_align_errors() {
        let j = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(ci_align(&ideal(2, &[&[1, 0], &[0, 1]]), &ideal(2, &[&[1, 1]])).is_ok());
        assert!(matches!(ci_align(&j, &ideal(3, &[&[1, 1, 1]])), Err(Error::Domain(_))));
        let j = ideal(2, &[&[1, 0]]);
        assert!(matches!(
            ci_align(&j, &ideal(2, &[&[0, 1]])),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn module_rejects_non_containment_and_unit() {
        let j = ideal(2, &[&[1, 0]]);
        let i = ideal(2, &[&[0, 1]]);
        assert_eq!(
            QuotientModule::new(j, i).unwrap_err(),
            Error::NotContained {
                witness: "x2".into()
            }
        );
        assert!(QuotientModule::new(MonomialIdeal::unit(2), MonomialIdeal::unit(2)).is_err());
    }

    #[test]
    fn canonical_order_puts_x1_first() {
        let j = ideal(3, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(j.to_string(), "(x1,x2,x3)");
        assert_eq!(ideal(3, &[&[2, 0, 1]]).to_string(), "(x1^2*x3)");
        assert_eq!(MonomialIdeal::zero(2).to_string(), "(0)");
    }

    #[test]
    fn project_embed() {
        let ring: VarSet = [1, 2].into_iter().collect();
        let w = m(&[0, 2, 1]);
        assert_eq!(w.project(ring), m(&[2, 1]));
        assert_eq!(w.project(ring).embed(3, ring), w);
        assert!(ideal(3, &[&[1, 1, 0]]).project(ring).is_err());
    }
}
