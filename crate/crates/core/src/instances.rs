//! Seeded instance families for the reproducibility suite and benches.
//!
//! Every generator takes an explicit RNG so that a fixed seed gives the same
//! instance list on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::{Monomial, MonomialIdeal, QuotientModule, VarSet};

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random monomial on `vars` with exponents in `0..=e_max`, not the unit.
pub fn random_monomial(rng: &mut InstanceRng, n: usize, vars: VarSet, e_max: u32) -> Monomial {
    assert!(!vars.is_empty() && e_max > 0);
    loop {
        let mut e = vec![0u32; n];
        for i in vars.iter() {
            e[i] = rng.random_range(0..=e_max);
        }
        let m = Monomial::new(e);
        if !m.is_one() {
            return m;
        }
    }
}

/// Random `(u_1..u_q) / (v_1..v_p)` with `u_i | v_i`, both complete
/// intersections, `1 ≤ p ≤ q`, `n ≤ n_max`, exponents at most `e_max`.
///
/// The `v_i` may reach into the supports of the unpaired `u`, so the family
/// is not restricted to the separated case.
pub fn random_ci_pair(rng: &mut InstanceRng, n_max: usize, e_max: u32) -> QuotientModule {
    loop {
        let n = rng.random_range(1..=n_max);
        let q = rng.random_range(1..=n);
        // block q = no u
        let block: Vec<usize> = (0..n).map(|_| rng.random_range(0..=q)).collect();
        let supports: Vec<VarSet> = (0..q)
            .map(|k| (0..n).filter(|&i| block[i] == k).collect())
            .collect();
        if supports.iter().any(|s| s.is_empty()) {
            continue;
        }
        let us: Vec<Monomial> = supports
            .iter()
            .map(|s| {
                let mut e = vec![0u32; n];
                for i in s.iter() {
                    e[i] = rng.random_range(1..=e_max);
                }
                Monomial::new(e)
            })
            .collect();
        let p = rng.random_range(1..=q);
        let paired: VarSet = supports[..p].iter().fold(VarSet::empty(), |a, s| a.union(*s));
        let mut spare: Vec<usize> = (0..n).filter(|&i| !paired.contains(i)).collect();
        spare.shuffle(rng);
        let mut vs = Vec::with_capacity(p);
        for u in &us[..p] {
            let mut e = u.exps().to_vec();
            for i in u.support().iter() {
                e[i] = rng.random_range(e[i]..=e_max);
            }
            while !spare.is_empty() && rng.random_bool(0.3) {
                let i = spare.pop().unwrap();
                e[i] = rng.random_range(1..=e_max);
            }
            vs.push(Monomial::new(e));
        }
        let j = MonomialIdeal::new(n, us).expect("same ring");
        let i = MonomialIdeal::new(n, vs).expect("same ring");
        let m = QuotientModule::new(j, i).expect("u_i | v_i");
        if !m.is_zero() {
            return m;
        }
    }
}

/// Ways to hand the free variables `rest` to `p` generators or to nobody.
fn assignments(rest: &[usize], p: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in rest {
        out = out
            .into_iter()
            .flat_map(|a: Vec<usize>| {
                (0..=p).map(move |k| {
                    let mut b = a.clone();
                    b.push(k);
                    b
                })
            })
            .collect();
    }
    out
}

/// The separated family for `n ≤ n_max`, up to renaming variables.
///
/// Supports of `u_1..u_q` are consecutive blocks of sizes `s_1 ≥ .. ≥ s_q`;
/// each `u_k` is `x^a` on its first variable (`a ∈ {1,2}`) times the rest of
/// its block. For `k ≤ p`, `v_k` raises that first exponent by 0 or 1 and
/// may take any of the variables outside every block (exponent 1). The
/// unpaired `u` then avoid every `v` by construction. Zero modules are
/// skipped; `p = 0` gives complete-intersection ideals.
pub fn separated_family(n_max: usize) -> Vec<QuotientModule> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for sizes in partitions_le(n) {
            let q = sizes.len();
            let mut starts = Vec::with_capacity(q);
            let mut next = 0;
            for s in &sizes {
                starts.push(next);
                next += s;
            }
            let rest: Vec<usize> = (next..n).collect();
            for a_bits in 0..1u32 << q {
                let us: Vec<Monomial> = (0..q)
                    .map(|k| {
                        let mut e = vec![0u32; n];
                        e[starts[k]..starts[k] + sizes[k]].fill(1);
                        e[starts[k]] = 1 + (a_bits >> k & 1);
                        Monomial::new(e)
                    })
                    .collect();
                for p in 0..=q {
                    for d_bits in 0..1u32 << p {
                        for assign in assignments(&rest, p) {
                            let vs: Vec<Monomial> = (0..p)
                                .map(|k| {
                                    let mut e = us[k].exps().to_vec();
                                    e[starts[k]] += d_bits >> k & 1;
                                    for (r, &owner) in rest.iter().zip(&assign) {
                                        if owner == k {
                                            e[*r] = 1;
                                        }
                                    }
                                    Monomial::new(e)
                                })
                                .collect();
                            let j = MonomialIdeal::new(n, us.clone()).expect("same ring");
                            let i = MonomialIdeal::new(n, vs).expect("same ring");
                            let m = QuotientModule::new(j, i).expect("u_k | v_k");
                            if !m.is_zero() {
                                out.push(m);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Non-increasing sequences of positive integers with sum at most `n`.
fn partitions_le(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for s in (1..=cap.min(left)).rev() {
            cur.push(s);
            go(left - s, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Random nonzero `J/I` generated in `vars`: `J` has 1 to 3 generators, `I`
/// is zero or generated by multiples of generators of `J`.
pub fn random_module_in(rng: &mut InstanceRng, n: usize, vars: VarSet, e_max: u32) -> QuotientModule {
    loop {
        let jn = rng.random_range(1..=3);
        let jg: Vec<Monomial> = (0..jn).map(|_| random_monomial(rng, n, vars, e_max)).collect();
        let j = MonomialIdeal::new(n, jg).expect("same ring");
        let i_n = rng.random_range(0..=2);
        let ig: Vec<Monomial> = (0..i_n)
            .map(|_| {
                let g = &j.gens()[rng.random_range(0..j.gens().len())];
                g.mul(&random_monomial(rng, n, vars, 1))
            })
            .collect();
        let i = MonomialIdeal::new(n, ig).expect("same ring");
        let m = QuotientModule::new(j, i).expect("multiples of J");
        if !m.is_zero() {
            return m;
        }
    }
}

/// Random `(J, I, u)` with `I ⊊ J` in `n ≤ n_max` variables.
pub fn random_colon_triple(rng: &mut InstanceRng, n_max: usize) -> (QuotientModule, Monomial) {
    let n = rng.random_range(1..=n_max);
    let m = random_module_in(rng, n, VarSet::full(n), 2);
    let u = if rng.random_bool(0.1) {
        Monomial::one(n)
    } else {
        random_monomial(rng, n, VarSet::full(n), 2)
    };
    (m, u)
}

/// Split `x1..xn` into `x1..xm` and the rest, `1 ≤ m < n`.
pub fn random_split(rng: &mut InstanceRng, n: usize) -> (VarSet, VarSet) {
    let m = rng.random_range(1..n);
    let a: VarSet = (0..m).collect();
    (a, VarSet::full(n).difference(a))
}

/// Random proper monomial ideal in `vars`, possibly zero.
pub fn random_proper_ideal(rng: &mut InstanceRng, n: usize, vars: VarSet, e_max: u32) -> MonomialIdeal {
    let k = rng.random_range(0..=2);
    MonomialIdeal::new(n, (0..k).map(|_| random_monomial(rng, n, vars, e_max))).expect("same ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ci_align;

    #[test]
    fn ci_pairs_are_ci_pairs() {
        let mut r = rng(7);
        for _ in 0..200 {
            let m = random_ci_pair(&mut r, 5, 3);
            assert!(m.n() <= 5);
            let p = ci_align(m.j(), m.i()).unwrap();
            assert!(p.p() >= 1 && p.p() <= p.q());
            assert!(m.j().max_exponents().iter().all(|&e| e <= 3));
        }
    }

    #[test]
    fn same_seed_same_instances() {
        let a: Vec<_> = (0..20).map({
            let mut r = rng(3);
            move |_| random_ci_pair(&mut r, 5, 3)
        }).collect();
        let b: Vec<_> = (0..20).map({
            let mut r = rng(3);
            move |_| random_ci_pair(&mut r, 5, 3)
        }).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn separated_family_is_separated() {
        let fam = separated_family(3);
        assert!(!fam.is_empty());
        for m in &fam {
            if m.i().is_zero() {
                assert!(m.j().is_complete_intersection());
            } else {
                assert!(ci_align(m.j(), m.i()).unwrap().is_separated(), "{m}");
            }
        }
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions_le(3).len(), 6);
    }
}
