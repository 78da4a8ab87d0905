//! Certificates: a decomposition plus its claimed Stanley depth, as JSON.
//!
//! Exponent vectors are integer arrays; variable indices in `ring` and
//! `free` are 1-based so that `3` means `x3`.

use serde::{Deserialize, Serialize};

use crate::decomposition::{Sdepth, StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, QuotientModule, VarSet};

/// Producer tag written into new certificates.
pub const PRODUCER: &str = concat!("sdepth ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SdepthValue {
    Finite(usize),
    /// Always the token `"infinity"`.
    Token(String),
}

impl From<Sdepth> for SdepthValue {
    fn from(s: Sdepth) -> Self {
        match s {
            Sdepth::Finite(k) => SdepthValue::Finite(k),
            Sdepth::Infinity => SdepthValue::Token("infinity".into()),
        }
    }
}

impl TryFrom<&SdepthValue> for Sdepth {
    type Error = Error;

    fn try_from(v: &SdepthValue) -> Result<Sdepth> {
        match v {
            SdepthValue::Finite(k) => Ok(Sdepth::Finite(*k)),
            SdepthValue::Token(t) if t == "infinity" => Ok(Sdepth::Infinity),
            SdepthValue::Token(t) => Err(Error::domain(format!("bad sdepth value {t:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceRecord {
    pub root: Vec<u32>,
    pub free: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    #[serde(rename = "J")]
    pub j: Vec<Vec<u32>>,
    #[serde(rename = "I")]
    pub i: Vec<Vec<u32>>,
    /// Variables of the subring; absent means all of `x1..xn`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<Vec<usize>>,
    pub spaces: Vec<SpaceRecord>,
    pub sdepth: SdepthValue,
    pub method: String,
    pub producer: String,
}

fn to_indices(s: VarSet) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

fn from_indices(n: usize, ix: &[usize]) -> Result<VarSet> {
    let mut s = VarSet::empty();
    for &i in ix {
        if i == 0 || i > n {
            return Err(Error::domain(format!("variable index {i} outside 1..={n}")));
        }
        if s.contains(i - 1) {
            return Err(Error::domain(format!("variable index {i} repeated")));
        }
        s.insert(i - 1);
    }
    Ok(s)
}

fn monomial(n: usize, e: &[u32]) -> Result<Monomial> {
    if e.len() != n {
        return Err(Error::RingMismatch {
            expected: n,
            found: e.len(),
        });
    }
    Ok(Monomial::new(e.to_vec()))
}

fn ideal(n: usize, gens: &[Vec<u32>]) -> Result<MonomialIdeal> {
    MonomialIdeal::new(n, gens.iter().map(|g| monomial(n, g)).collect::<Result<Vec<_>>>()?)
}

impl Certificate {
    /// Certificate for `d`, claiming its own Stanley depth.
    pub fn from_decomposition(d: &StanleyDecomposition, method: impl Into<String>) -> Self {
        let n = d.n();
        let gens = |i: &MonomialIdeal| i.gens().iter().map(|g| g.exps().to_vec()).collect();
        Certificate {
            n,
            j: gens(d.module().j()),
            i: gens(d.module().i()),
            ring: (d.ring() != VarSet::full(n)).then(|| to_indices(d.ring())),
            spaces: d
                .spaces()
                .iter()
                .map(|s| SpaceRecord {
                    root: s.root.exps().to_vec(),
                    free: to_indices(s.free),
                })
                .collect(),
            sdepth: d.sdepth().into(),
            method: method.into(),
            producer: PRODUCER.to_string(),
        }
    }

    pub fn module(&self) -> Result<QuotientModule> {
        QuotientModule::new(ideal(self.n, &self.j)?, ideal(self.n, &self.i)?)
    }

    pub fn decomposition(&self) -> Result<StanleyDecomposition> {
        let n = self.n;
        let ring = match &self.ring {
            Some(r) => from_indices(n, r)?,
            None => VarSet::full(n),
        };
        let spaces = self
            .spaces
            .iter()
            .map(|s| Ok(StanleySpace::new(monomial(n, &s.root)?, from_indices(n, &s.free)?)))
            .collect::<Result<Vec<_>>>()?;
        StanleyDecomposition::new(self.module()?, ring, spaces)
    }

    pub fn claimed_sdepth(&self) -> Result<Sdepth> {
        Sdepth::try_from(&self.sdepth)
    }

    /// The claimed value must equal the minimum free-set size of the spaces.
    pub fn check_claim(&self) -> Result<Sdepth> {
        let claimed = self.claimed_sdepth()?;
        let actual = self.decomposition()?.sdepth();
        if claimed != actual {
            return Err(Error::domain(format!(
                "certificate claims sdepth {claimed} but its spaces give {actual}"
            )));
        }
        Ok(actual)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: format!("line {}: {e}", e.line()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_module, parse_monomial};

    fn triangle() -> StanleyDecomposition {
        let m = parse_module("(x1,x2,x3) / (x1*x2*x3)", None).unwrap();
        let sp = |r: &str, z: &[usize]| {
            StanleySpace::new(parse_monomial(r, Some(3)).unwrap(), z.iter().map(|i| i - 1).collect())
        };
        StanleyDecomposition::over_full_ring(m, vec![sp("x1", &[1, 2]), sp("x2", &[2, 3]), sp("x3", &[1, 3])])
            .unwrap()
    }

    #[test]
    fn round_trip_is_exact() {
        let c = Certificate::from_decomposition(&triangle(), "test");
        let text = c.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), text);
        assert_eq!(back.decomposition().unwrap(), triangle());
        assert_eq!(back.check_claim().unwrap(), Sdepth::Finite(2));
        assert!(text.contains("\"free\": [\n        1,\n        2\n      ]"));
    }

    #[test]
    fn inflated_claim_rejected() {
        let mut c = Certificate::from_decomposition(&triangle(), "test");
        c.sdepth = SdepthValue::Finite(3);
        assert!(c.check_claim().is_err());
    }

    #[test]
    fn zero_module_uses_infinity() {
        let m = parse_module("(x1) / (x1)", None).unwrap();
        let d = StanleyDecomposition::over_full_ring(m, vec![]).unwrap();
        let c = Certificate::from_decomposition(&d, "test");
        assert!(c.to_json().contains("\"sdepth\": \"infinity\""));
        assert_eq!(Certificate::from_json(&c.to_json()).unwrap().check_claim().unwrap(), Sdepth::Infinity);
    }

    #[test]
    fn bad_indices_rejected() {
        let mut c = Certificate::from_decomposition(&triangle(), "test");
        c.spaces[0].free = vec![0];
        assert!(c.decomposition().is_err());
        assert!(Certificate::from_json("{").is_err());
    }
}
