//! Instance and solution files.
//!
//! Both are JSON documents. Every rational is written as a string (`"3"`,
//! `"-1/2"`) so that nothing ever passes through a float; plain JSON integers
//! are accepted on input for convenience.
//!
//! ```json
//! {
//!   "polynomials": [
//!     { "name": "f1", "coeffs": [["0", "-1", "0", "0"], ["1", "0", "0", "0"]] }
//!   ]
//! }
//! ```
//!
//! Coefficients ascend in degree and each quaternion is `[x0, x1, x2, x3]` for
//! `x0 + x1 i + x2 j + x3 k`, so the document above is `q - i`. A solution file
//! has the same `polynomials` list (the `h_l`) plus an optional `certificate`
//! whose polynomials are lists of `[re, im]` pairs.

use std::fmt;
use std::path::{Path, PathBuf};

use qcorona::arith::{format_rat, parse_rat};
use qcorona::{CPoly, FullRankCertificate, GaussRat, HPoly, Quat, Rat};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        source: serde_json::Error,
    },
}

/// An exact rational that serializes as a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatValue(pub Rat);

impl Serialize for RatValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RatVisitor;

        impl Visitor<'_> for RatVisitor {
            type Value = RatValue;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as an integer or a \"p/q\" string")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<RatValue, E> {
                parse_rat(v)
                    .map(RatValue)
                    .ok_or_else(|| E::invalid_value(de::Unexpected::Str(v), &self))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RatValue, E> {
                Ok(RatValue(Rat::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RatValue, E> {
                Ok(RatValue(Rat::from_integer(v.into())))
            }
        }

        d.deserialize_any(RatVisitor)
    }
}

/// One named polynomial as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub coeffs: Vec<[RatValue; 4]>,
}

impl PolyEntry {
    pub fn from_hpoly(name: Option<String>, p: &HPoly) -> Self {
        PolyEntry {
            name,
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| {
                    [&c.x0, &c.x1, &c.x2, &c.x3].map(|x| RatValue(x.clone()))
                })
                .collect(),
        }
    }

    pub fn to_hpoly(&self) -> HPoly {
        HPoly::new(
            self.coeffs
                .iter()
                .map(|[a, b, c, d]| Quat::new(a.0.clone(), b.0.clone(), c.0.clone(), d.0.clone()))
                .collect(),
        )
    }
}

fn non_empty<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<PolyEntry>, D::Error> {
    let v = Vec::<PolyEntry>::deserialize(d)?;
    if v.is_empty() {
        return Err(de::Error::invalid_length(0, &"at least one polynomial"));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(deserialize_with = "non_empty")]
    pub polynomials: Vec<PolyEntry>,
}

impl InstanceFile {
    pub fn from_polys<'a>(named: impl IntoIterator<Item = (String, &'a HPoly)>) -> Self {
        InstanceFile {
            polynomials: named
                .into_iter()
                .map(|(n, p)| PolyEntry::from_hpoly(Some(n), p))
                .collect(),
        }
    }

    pub fn polys(&self) -> Vec<HPoly> {
        self.polynomials.iter().map(PolyEntry::to_hpoly).collect()
    }

    /// Declared names, falling back to `f1, f2, ...`.
    pub fn names(&self) -> Vec<String> {
        named_or_default(&self.polynomials, "f")
    }
}

fn named_or_default(entries: &[PolyEntry], prefix: &str) -> Vec<String> {
    entries
        .iter()
        .enumerate()
        .map(|(k, e)| e.name.clone().unwrap_or_else(|| format!("{prefix}{}", k + 1)))
        .collect()
}

/// A polynomial over `Q(i)` as `[re, im]` pairs, ascending in degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CPolyValue(pub Vec<[RatValue; 2]>);

impl CPolyValue {
    pub fn from_cpoly(p: &CPoly) -> Self {
        CPolyValue(
            p.coeffs()
                .iter()
                .map(|c| [RatValue(c.re.clone()), RatValue(c.im.clone())])
                .collect(),
        )
    }

    pub fn to_cpoly(&self) -> CPoly {
        CPoly::new(
            self.0
                .iter()
                .map(|[re, im]| GaussRat::new(re.0.clone(), im.0.clone()))
                .collect(),
        )
    }
}

/// Maximal minors of `(A, -B)` with Bezout witnesses `sum w_k minor_k = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateSection {
    pub minor_columns: Vec<Vec<usize>>,
    pub minors: Vec<CPolyValue>,
    pub witnesses: Vec<CPolyValue>,
}

impl CertificateSection {
    pub fn from_certificate(c: &FullRankCertificate) -> Self {
        CertificateSection {
            minor_columns: c.minor_columns.clone(),
            minors: c.minors.iter().map(CPolyValue::from_cpoly).collect(),
            witnesses: c.witnesses.iter().map(CPolyValue::from_cpoly).collect(),
        }
    }

    pub fn to_certificate(&self) -> FullRankCertificate {
        FullRankCertificate {
            minor_columns: self.minor_columns.clone(),
            minors: self.minors.iter().map(CPolyValue::to_cpoly).collect(),
            witnesses: self.witnesses.iter().map(CPolyValue::to_cpoly).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    #[serde(deserialize_with = "non_empty")]
    pub polynomials: Vec<PolyEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateSection>,
}

impl SolutionFile {
    pub fn polys(&self) -> Vec<HPoly> {
        self.polynomials.iter().map(PolyEntry::to_hpoly).collect()
    }

    pub fn names(&self) -> Vec<String> {
        named_or_default(&self.polynomials, "h")
    }
}

fn read(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, FileError> {
    serde_json::from_str(text).map_err(|source| FileError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn parse_instance_str(text: &str) -> Result<InstanceFile, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn parse_solution_str(text: &str) -> Result<SolutionFile, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn read_instance(path: &Path) -> Result<InstanceFile, FileError> {
    parse(path, &read(path)?)
}

pub fn read_solution(path: &Path) -> Result<SolutionFile, FileError> {
    parse(path, &read(path)?)
}

/// Canonical text: pretty-printed JSON with a trailing newline.
pub fn to_canonical<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("file documents always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcorona::arith::ratio;

    #[test]
    fn q_minus_i() {
        let f = parse_instance_str(r#"{"polynomials":[{"coeffs":[[0,-1,0,0],[1,0,0,0]]}]}"#).unwrap();
        assert_eq!(f.polys(), vec![HPoly::linear(&Quat::i())]);
        assert_eq!(f.names(), vec!["f1".to_string()]);
    }

    #[test]
    fn string_fraction() {
        let f = parse_instance_str(r#"{"polynomials":[{"coeffs":[["1/3","0","-2/6","0"]]}]}"#)
            .unwrap();
        let c = f.polys()[0].coeff(0);
        assert_eq!(c.x0, ratio(1, 3));
        assert_eq!(c.x2, ratio(-1, 3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "{\n  \"polynomials\": [\n    {\"coeffs\": [[1, 0, 0]]}\n  ]\n}";
        let e = parse_instance_str(text).unwrap_err();
        assert_eq!(e.line(), 3);
        assert!(e.to_string().contains("length"), "{e}");

        let e = parse_instance_str("{\n\"polynomials\": [{\"coeffs\": [[\"1/0\", 0, 0, 0]]}]}")
            .unwrap_err();
        assert_eq!(e.line(), 2);

        let e = parse_instance_str("{\"polynomials\": [{\"coeffs\": [[0.5, 0, 0, 0]]}]}").unwrap_err();
        assert!(e.to_string().contains("rational"), "{e}");

        let e = parse_instance_str("{\n\n\"polynomials\": []}").unwrap_err();
        assert_eq!(e.line(), 3);

        assert!(parse_instance_str(r#"{"polynomials":[{"coeffs":[]}],"extra":1}"#).is_err());
        assert!(parse_instance_str(r#"{"polynomials":[{"coeffs":[],"degree":0}]}"#).is_err());
    }

    #[test]
    fn round_trip() {
        let text = r#"{"polynomials":[{"name":"a","coeffs":[["1/2",-3,0,"7"]]},{"coeffs":[]}]}"#;
        let f = parse_instance_str(text).unwrap();
        let again = parse_instance_str(&to_canonical(&f)).unwrap();
        assert_eq!(f, again);
        assert_eq!(to_canonical(&f), to_canonical(&again));
        assert!(to_canonical(&f).contains("\"1/2\""));
    }

    #[test]
    fn solution_with_certificate() {
        let cert = FullRankCertificate {
            minor_columns: vec![vec![0, 1]],
            minors: vec![CPoly::from_ints(&[(1, -1), (0, 2)])],
            witnesses: vec![CPoly::one()],
        };
        let sol = SolutionFile {
            polynomials: vec![PolyEntry::from_hpoly(None, &HPoly::q())],
            certificate: Some(CertificateSection::from_certificate(&cert)),
        };
        let back = parse_solution_str(&to_canonical(&sol)).unwrap();
        assert_eq!(back.certificate.as_ref().unwrap().to_certificate(), cert);
        assert_eq!(back.polys(), vec![HPoly::q()]);
    }
}
