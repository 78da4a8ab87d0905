//! Closed forms for the Stanley depth and depth of recognized module shapes,
//! and the two-sided bounds for quotients of complete intersections.

use std::fmt;

use crate::decomposition::Sdepth;
use crate::error::{Error, Result};
use crate::monomial::{ci_align, CiPairing, MonomialIdeal, QuotientModule};

/// Module shapes with a known Stanley depth.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FormulaCase {
    /// `I = J`.
    ZeroModule,
    /// `(x_1^{a_1},..,x_n^{a_n}) / (x_1^{b_1},..,x_m^{b_m})`, `a_i ≤ b_i`: `n-m-⌊(n-m)/2⌋`.
    Irreducible,
    /// `(x_1,..,x_n) / (x_1,..,x_m)`: `n-m-⌊(n-m)/2⌋`.
    Variables,
    /// Complete-intersection pair with `q = p`, not all `u_i = v_i`: `n-p`.
    CiEqualCount,
    /// Complete-intersection pair with `q = p+1`: `n-p`.
    CiOneExtra,
    /// Complete-intersection pair whose unpaired `u` avoid every `v`: `n-p-⌊(q-p)/2⌋`.
    Separated,
    /// `I = 0`, `J` a complete intersection on `q` generators: `n-⌊q/2⌋`.
    CiIdeal,
    /// `J = S`, `I` a complete intersection on `p` generators (or zero): `n-p`.
    CiQuotientRing,
}

impl FormulaCase {
    pub fn name(self) -> &'static str {
        match self {
            FormulaCase::ZeroModule => "zero-module",
            FormulaCase::Irreducible => "irreducible",
            FormulaCase::Variables => "variables",
            FormulaCase::CiEqualCount => "ci-equal-count",
            FormulaCase::CiOneExtra => "ci-one-extra",
            FormulaCase::Separated => "separated",
            FormulaCase::CiIdeal => "ci-ideal",
            FormulaCase::CiQuotientRing => "ci-quotient-ring",
        }
    }
}

impl fmt::Display for FormulaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn half_gap(a: usize, b: usize) -> usize {
    a - b - (a - b) / 2
}

/// `(index, exponent)` if `w` is a pure power `x_i^e`, `e ≥ 1`.
fn pure_power(w: &crate::monomial::Monomial) -> Option<(usize, u32)> {
    let s = w.support();
    (s.len() == 1).then(|| {
        let i = s.iter().next().unwrap();
        (i, w.exp(i))
    })
}

/// All `n` variables appear, each as one pure power.
fn pure_powers_of_all(j: &MonomialIdeal) -> bool {
    let n = j.n();
    j.gens().len() == n && j.gens().iter().all(|g| pure_power(g).is_some()) && j.support().len() == n
}

fn pure_powers(i: &MonomialIdeal) -> bool {
    i.gens().iter().all(|g| pure_power(g).is_some())
}

fn is_variables(i: &MonomialIdeal) -> bool {
    i.gens().iter().all(|g| matches!(pure_power(g), Some((_, 1))))
}

/// Complete-intersection pairing with `I ≠ 0`, when both ideals are complete intersections.
fn ci_pair(m: &QuotientModule) -> Option<CiPairing> {
    ci_align(m.j(), m.i()).ok()
}

/// Every shape `m` matches, with the value it predicts, in dispatch order.
pub fn matching_cases(m: &QuotientModule) -> Vec<(FormulaCase, Sdepth)> {
    let n = m.n();
    let (j, i) = (m.j(), m.i());
    let mut out = Vec::new();
    if m.is_zero() {
        out.push((FormulaCase::ZeroModule, Sdepth::Infinity));
        return out;
    }
    let mm = i.gens().len();
    if pure_powers_of_all(j) && is_variables(j) && is_variables(i) && mm < n {
        out.push((FormulaCase::Variables, Sdepth::Finite(half_gap(n, mm))));
    }
    if pure_powers_of_all(j) && pure_powers(i) {
        out.push((FormulaCase::Irreducible, Sdepth::Finite(half_gap(n, mm))));
    }
    if let Some(pairing) = ci_pair(m) {
        let (p, q) = (pairing.p(), pairing.q());
        if q == p {
            out.push((FormulaCase::CiEqualCount, Sdepth::Finite(n - p)));
        }
        if q == p + 1 {
            out.push((FormulaCase::CiOneExtra, Sdepth::Finite(n - p)));
        }
        if pairing.is_separated() {
            out.push((
                FormulaCase::Separated,
                Sdepth::Finite(n - p - (q - p) / 2),
            ));
        }
    }
    if i.is_zero() && j.is_complete_intersection() {
        let q = j.gens().len();
        out.push((FormulaCase::CiIdeal, Sdepth::Finite(n - q / 2)));
    }
    if j.is_unit() && (i.is_zero() || i.is_complete_intersection()) {
        out.push((FormulaCase::CiQuotientRing, Sdepth::Finite(n - i.gens().len())));
    }
    out
}

/// Closed-form Stanley depth for the first matching shape.
pub fn formula_sdepth(m: &QuotientModule) -> Option<(FormulaCase, Sdepth)> {
    matching_cases(m).into_iter().next()
}

/// `(n - p - ⌊(q-p)/2⌋, n - p)` for complete intersections `I ⊊ J`.
///
/// With `I = 0` the lower value is exact and both ends coincide.
pub fn sdepth_bounds(m: &QuotientModule) -> Result<(usize, usize)> {
    let n = m.n();
    if m.is_zero() {
        return Err(Error::domain("the zero module has no finite Stanley depth"));
    }
    if !m.j().is_complete_intersection() {
        return Err(Error::domain(format!("{} is not a complete intersection", m.j())));
    }
    if m.i().is_zero() {
        let v = n - m.j().gens().len() / 2;
        return Ok((v, v));
    }
    let pairing = ci_align(m.j(), m.i())?;
    let (p, q) = (pairing.p(), pairing.q());
    Ok((n - p - (q - p) / 2, n - p))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum DepthFormula {
    Irreducible,
    CompleteIntersection,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct DepthResult {
    pub value: usize,
    pub formula: DepthFormula,
}

/// Depth of `J/I` for the irreducible and complete-intersection shapes.
pub fn depth_closed_form(m: &QuotientModule) -> Option<DepthResult> {
    if m.is_zero() {
        return None;
    }
    let n = m.n();
    let (j, i) = (m.j(), m.i());
    if pure_powers_of_all(j) && pure_powers(i) {
        let value = if i.gens().len() < n { 1 } else { 0 };
        return Some(DepthResult {
            value,
            formula: DepthFormula::Irreducible,
        });
    }
    if !j.is_complete_intersection() || !(i.is_zero() || i.is_complete_intersection()) {
        return None;
    }
    let (p, q) = (i.gens().len(), j.gens().len());
    let value = if q > p { n - q + 1 } else { n - q };
    Some(DepthResult {
        value,
        formula: DepthFormula::CompleteIntersection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_module;

    fn module(t: &str, n: usize) -> QuotientModule {
        parse_module(t, Some(n)).unwrap()
    }

    #[test]
    fn irreducible_example() {
        let m = module("(x1^2,x2^3,x3) / (x1^5)", 3);
        assert_eq!(
            formula_sdepth(&m),
            Some((FormulaCase::Irreducible, Sdepth::Finite(1)))
        );
    }

    #[test]
    fn separated_example() {
        let m = module("(x1,x2,x3,x4) / (x1^2)", 4);
        let cases = matching_cases(&m);
        assert!(cases.contains(&(FormulaCase::Separated, Sdepth::Finite(2))));
        assert!(cases.iter().all(|(_, v)| *v == Sdepth::Finite(2)));
        assert_eq!(formula_sdepth(&m).unwrap().1, Sdepth::Finite(2));
    }

    #[test]
    fn triangle_has_no_formula() {
        let m = module("(x1,x2,x3) / (x1*x2*x3)", 3);
        assert_eq!(formula_sdepth(&m), None);
    }

    #[test]
    fn variables_first() {
        let m = module("(x1,x2,x3,x4,x5) / (x1,x2)", 5);
        assert_eq!(
            formula_sdepth(&m),
            Some((FormulaCase::Variables, Sdepth::Finite(2)))
        );
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(sdepth_bounds(&module("(x1,x2,x3) / (x1*x2*x3)", 3)).unwrap(), (1, 2));
        assert_eq!(sdepth_bounds(&module("(x1,x2) / (x1*x2)", 2)).unwrap(), (1, 1));
        // n = 5, q = 4, p = 2
        let m = module("(x1,x2,x3,x4) / (x1^2,x2^2)", 5);
        assert_eq!(sdepth_bounds(&m).unwrap(), (2, 3));
        assert!(sdepth_bounds(&module("(x1*x2,x2*x3) / (0)", 3)).is_err());
    }

    #[test]
    fn depth_examples() {
        let m = module("(x1,x2,x3) / (x1*x2*x3)", 3);
        assert_eq!(depth_closed_form(&m).unwrap().value, 1);
        let m = module("(x1,x2^2) / (x1^2,x2^3)", 2);
        assert_eq!(
            depth_closed_form(&m),
            Some(DepthResult {
                value: 0,
                formula: DepthFormula::Irreducible
            })
        );
        let m = module("(x1*x2,x3) / (x1^2*x2,x3*x4)", 5);
        assert_eq!(depth_closed_form(&m).unwrap().value, 3);
    }

    #[test]
    fn lemma_shapes() {
        assert_eq!(
            formula_sdepth(&module("(x1,x2) / (x1^2,x2^3)", 2)),
            Some((FormulaCase::Irreducible, Sdepth::Finite(0)))
        );
        let m = module("(x1*x2,x3) / (x1^2*x2,x3*x4)", 5);
        assert_eq!(
            formula_sdepth(&m),
            Some((FormulaCase::CiEqualCount, Sdepth::Finite(3)))
        );
        let m = module("(1) / (x1*x2, x3)", 3);
        assert_eq!(
            formula_sdepth(&m),
            Some((FormulaCase::CiQuotientRing, Sdepth::Finite(1)))
        );
        let m = module("(x1*x2, x3, x4) / (0)", 4);
        assert_eq!(
            formula_sdepth(&m),
            Some((FormulaCase::CiIdeal, Sdepth::Finite(3)))
        );
    }
}
