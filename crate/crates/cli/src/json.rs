//! JSON documents emitted by `--json`.
//!
//! Integers that fit in 53 bits are written as JSON numbers, larger ones as
//! decimal strings; both forms are accepted when reading.

use std::fmt;

use mbs::embed::{EmbeddingCertificate, LinkingMatrix, ObstructionReport};
use mbs::genus0::{Case1Outcome, Case1Solution, Genus0Decision};
use mbs::homology::AbelianGroup;
use mbs::slope::{Case1Witness, SlopeData};
use mbs::Int;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

const SAFE: i64 = (1 << 53) - 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactInt(pub BigInt);

impl ExactInt {
    pub fn of<T: Int>(v: &T) -> Self {
        ExactInt(v.to_string().parse().expect("integers print as decimal"))
    }
}

impl From<i64> for ExactInt {
    fn from(v: i64) -> Self {
        ExactInt(BigInt::from(v))
    }
}

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.abs() <= SAFE => serializer.serialize_i64(v),
            _ => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExactInt;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExactInt, E> {
                Ok(ExactInt(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExactInt, E> {
                Ok(ExactInt(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExactInt, E> {
                v.parse()
                    .map(ExactInt)
                    .map_err(|_| E::custom(format!("not an integer: {v:?}")))
            }
        }
        deserializer.deserialize_any(V)
    }
}

fn exact3<T: Int>(v: &[T; 3]) -> [ExactInt; 3] {
    [
        ExactInt::of(&v[0]),
        ExactInt::of(&v[1]),
        ExactInt::of(&v[2]),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologyJson {
    pub rank: usize,
    pub torsion: Vec<ExactInt>,
}

impl<T: Int> From<&AbelianGroup<T>> for HomologyJson {
    fn from(g: &AbelianGroup<T>) -> Self {
        Self {
            rank: g.rank(),
            torsion: g.torsion().iter().map(ExactInt::of).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegularJson {
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObstructionJson {
    pub regular: bool,
    pub torsion: Vec<ExactInt>,
    pub verdict: String,
}

impl<T: Int> From<&ObstructionReport<T>> for ObstructionJson {
    fn from(r: &ObstructionReport<T>) -> Self {
        Self {
            regular: r.regular,
            torsion: r.torsion.iter().map(ExactInt::of).collect(),
            verdict: r.verdict.name().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkingJson {
    pub a12: ExactInt,
    pub a13: ExactInt,
    pub a23: ExactInt,
}

impl<T: Int> From<&LinkingMatrix<T>> for LinkingJson {
    fn from(m: &LinkingMatrix<T>) -> Self {
        Self {
            a12: ExactInt::of(&m.a12),
            a13: ExactInt::of(&m.a13),
            a23: ExactInt::of(&m.a23),
        }
    }
}

/// `a` lists `(a12, a13, a23)`, `q` the cable slopes, `lk` the values
/// `lk(l_i, K)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub p: [ExactInt; 3],
    pub a: [ExactInt; 3],
    pub q: [ExactInt; 3],
    pub lk: [ExactInt; 3],
    pub linking_check: bool,
    pub coprime: [bool; 3],
    pub coprime_check: bool,
    pub braid: String,
    pub braid_linking: [ExactInt; 3],
    pub braid_check: bool,
}

impl<T: Int> From<&EmbeddingCertificate<T>> for CertificateJson {
    fn from(c: &EmbeddingCertificate<T>) -> Self {
        Self {
            p: exact3(&c.degrees),
            a: exact3(&c.linking.as_array()),
            q: exact3(&c.slopes),
            lk: exact3(&c.cable_linking),
            linking_check: c.linking_check(),
            coprime: c.coprime,
            coprime_check: c.coprime_check(),
            braid: c.braid.to_string(),
            braid_linking: exact3(&c.braid_linking.as_array()),
            braid_check: c.braid_check(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Case1Json {
    pub r: ExactInt,
    pub s: ExactInt,
    pub eps: i8,
}

impl<T: Int> From<&Case1Solution<T>> for Case1Json {
    fn from(w: &Case1Solution<T>) -> Self {
        Self {
            r: ExactInt::of(&w.r),
            s: ExactInt::of(&w.s),
            eps: w.eps,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExhaustedJson {
    pub eps: i8,
    pub n: ExactInt,
    pub divisors: Vec<ExactInt>,
}

/// One ordered assignment `(p1, p2, p3)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentJson {
    pub p: [ExactInt; 3],
    pub case1: Option<Case1Json>,
    pub case1_exhausted: Option<Vec<ExhaustedJson>>,
    pub case2_t: Option<ExactInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleJson>,
}

/// Brute-force cross-check of Case 1 for one assignment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleJson {
    pub bound: ExactInt,
    pub witness: Option<Case1Json>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Genus0Json {
    pub triple: [ExactInt; 3],
    pub verdict: String,
    pub case1_realizable: bool,
    pub case2_realizable: bool,
    pub assignments: Vec<AssignmentJson>,
}

impl<T: Int> From<&Genus0Decision<T>> for Genus0Json {
    fn from(d: &Genus0Decision<T>) -> Self {
        let mut assignments = Vec::with_capacity(6);
        for c in &d.choices {
            for k in [1usize, 0] {
                let (p2, p3) = (&c.others[1 - k], &c.others[k]);
                let (case1, case1_exhausted) = match &c.case1 {
                    // exchanging p2 and p3 exchanges r and s
                    Case1Outcome::Witness(w) if k == 0 => (
                        Some(Case1Json::from(&Case1Solution {
                            r: w.s.clone(),
                            s: w.r.clone(),
                            eps: w.eps,
                        })),
                        None,
                    ),
                    Case1Outcome::Witness(w) => (Some(w.into()), None),
                    Case1Outcome::Exhausted(products) => (
                        None,
                        Some(
                            products
                                .iter()
                                .map(|e| ExhaustedJson {
                                    eps: e.eps,
                                    n: ExactInt::of(&e.n),
                                    divisors: e.divisors.iter().map(ExactInt::of).collect(),
                                })
                                .collect(),
                        ),
                    ),
                };
                assignments.push(AssignmentJson {
                    p: [ExactInt::of(&c.p1), ExactInt::of(p2), ExactInt::of(p3)],
                    case1,
                    case1_exhausted,
                    case2_t: c.case2[k].as_ref().map(ExactInt::of),
                    oracle: None,
                });
            }
        }
        Self {
            triple: exact3(&d.triple),
            verdict: d.verdict().name().to_string(),
            case1_realizable: d.case1_realizable(),
            case2_realizable: d.case2_realizable(),
            assignments,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlopeJson {
    pub raw: [ExactInt; 2],
    pub lam: ExactInt,
    pub mu: ExactInt,
    pub integral: bool,
    pub meridional: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlopesJson {
    pub witness: [ExactInt; 6],
    pub determinant: ExactInt,
    /// Slopes on `∂N(C1)`, `∂N(C2)`, `∂N(C3)`.
    pub slopes: [SlopeJson; 3],
    pub signed_multiplicities: [ExactInt; 3],
    pub multiplicities: [ExactInt; 3],
    pub identity_value: ExactInt,
    /// Some multiplicity is below 2.
    pub degenerate: bool,
}

impl SlopesJson {
    pub fn new<T: Int>(w: &Case1Witness<T>, d: &SlopeData<T>) -> Self {
        let slope = |i: usize| {
            let b = &d.slopes[i];
            SlopeJson {
                raw: [ExactInt::of(&b.raw.0), ExactInt::of(&b.raw.1)],
                lam: ExactInt::of(b.slope.lam()),
                mu: ExactInt::of(b.slope.mu()),
                integral: b.slope.is_integral(),
                meridional: b.slope.is_meridional(),
            }
        };
        Self {
            witness: [&w.p, &w.q, &w.r, &w.s, &w.n2, &w.n3].map(ExactInt::of),
            determinant: ExactInt::of(&d.determinant),
            slopes: [slope(0), slope(1), slope(2)],
            signed_multiplicities: exact3(&d.signed_multiplicities),
            multiplicities: exact3(&d.multiplicities()),
            identity_value: ExactInt::of(&d.identity_value(w)),
            degenerate: !d.degenerate().is_empty(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_values_become_strings() {
        let big = ExactInt("9007199254740993".parse().unwrap());
        assert_eq!(serde_json::to_string(&big).unwrap(), "\"9007199254740993\"");
        assert_eq!(serde_json::to_string(&ExactInt::from(-47)).unwrap(), "-47");
        assert_eq!(
            serde_json::to_string(&ExactInt::from((1 << 53) - 1)).unwrap(),
            "9007199254740991"
        );
        let back: ExactInt = serde_json::from_str("\"9007199254740993\"").unwrap();
        assert_eq!(back, big);
        let back: ExactInt = serde_json::from_str("12").unwrap();
        assert_eq!(back, ExactInt::from(12));
        assert!(serde_json::from_str::<ExactInt>("1.5").is_err());
        assert!(serde_json::from_str::<ExactInt>("\"x\"").is_err());
    }
}
