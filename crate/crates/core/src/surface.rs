//! Multibranched surfaces: sectors glued to branches by signed covering maps.
//!
//! The document format is
//!
//! ```json
//! {"branches": ["b1", "b2"],
//!  "sectors": [{"genus": 0, "boundary": [{"branch": "b1", "degree": 2}]}]}
//! ```
//!
//! Branch identifiers are kept in lexicographic order, which fixes the column
//! layout of every matrix built from a surface.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One boundary circle of a sector, wrapped `degree` times around `branch`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Attachment {
    pub branch: String,
    pub degree: i64,
}

/// A compact orientable surface of the given genus. An empty boundary list is
/// a closed sector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sector {
    pub genus: u32,
    pub boundary: Vec<Attachment>,
}

impl Sector {
    pub fn new(genus: u32, boundary: impl IntoIterator<Item = (impl Into<String>, i64)>) -> Self {
        Self {
            genus,
            boundary: boundary
                .into_iter()
                .map(|(branch, degree)| Attachment {
                    branch: branch.into(),
                    degree,
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    branches: Vec<String>,
    sectors: Vec<Sector>,
}

/// A validated multibranched surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultibranchedSurface {
    branches: Vec<String>,
    sectors: Vec<Sector>,
}

impl MultibranchedSurface {
    /// Validates and normalizes (branch ids sorted). Sector and boundary order
    /// is preserved.
    pub fn new(branches: Vec<String>, sectors: Vec<Sector>) -> Result<Self> {
        if sectors.is_empty() {
            return Err(Error::Empty("sector"));
        }
        if branches.is_empty() {
            return Err(Error::Empty("branch"));
        }
        let mut seen = BTreeSet::new();
        for b in &branches {
            if !seen.insert(b.as_str()) {
                return Err(Error::DuplicateBranch(b.clone()));
            }
        }
        for (i, sector) in sectors.iter().enumerate() {
            for (j, att) in sector.boundary.iter().enumerate() {
                let location = format!("sectors[{i}].boundary[{j}]");
                if !seen.contains(att.branch.as_str()) {
                    return Err(Error::UnknownBranch {
                        branch: att.branch.clone(),
                        location,
                    });
                }
                if att.degree == 0 {
                    return Err(Error::ZeroDegree { location });
                }
            }
        }
        let mut branches = branches;
        branches.sort();
        Ok(Self { branches, sectors })
    }

    pub fn branches(&self) -> &[String] {
        &self.branches
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn branch_index(&self, id: &str) -> Option<usize> {
        self.branches.binary_search_by(|b| b.as_str().cmp(id)).ok()
    }

    pub fn total_genus(&self) -> u64 {
        self.sectors.iter().map(|s| u64::from(s.genus)).sum()
    }

    /// `(sector index, branch index, degree)` for every boundary circle.
    pub fn attachments(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.sectors
            .iter()
            .enumerate()
            .flat_map(move |(s, sector)| {
                sector.boundary.iter().map(move |att| {
                    let b = self
                        .branch_index(&att.branch)
                        .expect("validated branch reference");
                    (s, b, att.degree)
                })
            })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.document()).expect("surface documents always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.document()).expect("surface documents always serialize")
    }

    fn document(&self) -> Document {
        Document {
            branches: self.branches.clone(),
            sectors: self.sectors.clone(),
        }
    }
}

/// Parses a surface document, validating every invariant.
pub fn parse_surface(text: &str) -> Result<MultibranchedSurface> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Malformed {
        location: format!("line {} column {}", e.line(), e.column()),
        reason: e.to_string(),
    })?;
    MultibranchedSurface::new(doc.branches, doc.sectors)
}

/// The family `X_g(p1, ..., pn)`: one sector of genus `g` whose `n` boundary
/// circles wrap `n` distinct branches with degrees `p_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XgFamily {
    genus: u32,
    degrees: Vec<i64>,
}

impl XgFamily {
    pub fn new(genus: u32, degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyDegrees);
        }
        if let Some((i, p)) = degrees.iter().enumerate().find(|(_, &p)| p < 2) {
            return Err(Error::DegreeTooSmall {
                index: i + 1,
                value: p.to_string(),
            });
        }
        Ok(Self { genus, degrees })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Branch `i` is named `b{i}`, zero-padded so that lexicographic order
    /// matches degree order.
    pub fn branch_name(&self, i: usize) -> String {
        let width = self.degrees.len().to_string().len();
        format!("b{:0width$}", i + 1)
    }

    pub fn to_surface(&self) -> MultibranchedSurface {
        let branches: Vec<String> = (0..self.degrees.len())
            .map(|i| self.branch_name(i))
            .collect();
        let sector = Sector {
            genus: self.genus,
            boundary: branches
                .iter()
                .zip(&self.degrees)
                .map(|(b, &degree)| Attachment {
                    branch: b.clone(),
                    degree,
                })
                .collect(),
        };
        MultibranchedSurface::new(branches, vec![sector]).expect("family surfaces are valid")
    }
}

pub fn make_xg(genus: u32, degrees: &[i64]) -> Result<MultibranchedSurface> {
    Ok(XgFamily::new(genus, degrees.to_vec())?.to_surface())
}

/// A surface is regular when every branch is wrapped with the same absolute
/// degree by all of its incident boundary circles.
pub fn is_regular(surface: &MultibranchedSurface) -> bool {
    let mut seen: Vec<Option<u64>> = vec![None; surface.branches().len()];
    for (_, b, degree) in surface.attachments() {
        let d = degree.unsigned_abs();
        match seen[b] {
            None => seen[b] = Some(d),
            Some(prev) if prev != d => return false,
            Some(_) => {}
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(branches: &str, boundary: &str) -> String {
        format!(
            r#"{{"branches": {branches}, "sectors": [{{"genus": 0, "boundary": {boundary}}}]}}"#
        )
    }

    #[test]
    fn parses_x0_235() {
        let text = doc(
            r#"["b1","b2","b3"]"#,
            r#"[{"branch":"b1","degree":2},{"branch":"b2","degree":3},{"branch":"b3","degree":5}]"#,
        );
        let surface = parse_surface(&text).unwrap();
        assert_eq!(surface, make_xg(0, &[2, 3, 5]).unwrap());
    }

    #[test]
    fn rejects_unknown_branch() {
        let text = doc(r#"["b1"]"#, r#"[{"branch":"b9","degree":2}]"#);
        let err = parse_surface(&text).unwrap_err();
        assert!(matches!(err, Error::UnknownBranch { ref branch, .. } if branch == "b9"));
        assert!(err.to_string().contains("unknown branch"));
        assert!(err.to_string().contains("sectors[0].boundary[0]"));
    }

    #[test]
    fn rejects_zero_degree() {
        let text = doc(
            r#"["b1","b2"]"#,
            r#"[{"branch":"b1","degree":2},{"branch":"b2","degree":0}]"#,
        );
        let err = parse_surface(&text).unwrap_err();
        assert_eq!(
            err,
            Error::ZeroDegree {
                location: "sectors[0].boundary[1]".into()
            }
        );
        assert!(err.to_string().contains("zero covering degree"));
    }

    #[test]
    fn rejects_malformed_with_position() {
        let err = parse_surface(
            "{\"branches\": [\"b1\"],\n \"sectors\": [{\"genus\": -1, \"boundary\": []}]}",
        )
        .unwrap_err();
        match err {
            Error::Malformed { location, .. } => assert!(location.starts_with("line 2")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_surface("[1,2]"),
            Err(Error::Malformed { .. })
        ));
        assert!(matches!(
            parse_surface(r#"{"branches":["a"],"sectors":[],"extra":1}"#),
            Err(Error::Malformed { .. })
        ));
    }

    #[test]
    fn rejects_empty_and_duplicates() {
        assert_eq!(
            parse_surface(r#"{"branches":["a"],"sectors":[]}"#),
            Err(Error::Empty("sector"))
        );
        assert_eq!(
            parse_surface(r#"{"branches":[],"sectors":[{"genus":1,"boundary":[]}]}"#),
            Err(Error::Empty("branch"))
        );
        assert_eq!(
            parse_surface(r#"{"branches":["a","a"],"sectors":[{"genus":1,"boundary":[]}]}"#),
            Err(Error::DuplicateBranch("a".into()))
        );
    }

    #[test]
    fn degree_one_allowed_in_documents() {
        let text = doc(r#"["x"]"#, r#"[{"branch":"x","degree":-1}]"#);
        assert!(parse_surface(&text).is_ok());
    }

    #[test]
    fn serializer_sorts_branches() {
        let s = MultibranchedSurface::new(
            vec!["c".into(), "a".into(), "b".into()],
            vec![Sector::new(1, [("c", 2), ("a", -3)])],
        )
        .unwrap();
        assert_eq!(
            s.to_json(),
            r#"{"branches":["a","b","c"],"sectors":[{"genus":1,"boundary":[{"branch":"c","degree":2},{"branch":"a","degree":-3}]}]}"#
        );
        assert_eq!(parse_surface(&s.to_json_pretty()).unwrap(), s);
    }

    #[test]
    fn make_xg_shapes() {
        let s = make_xg(0, &[2, 3, 5]).unwrap();
        assert_eq!(s.sectors().len(), 1);
        assert_eq!(s.branches().len(), 3);
        let degrees: Vec<i64> = s.attachments().map(|(_, _, d)| d).collect();
        assert_eq!(degrees, vec![2, 3, 5]);

        let s = make_xg(2, &[7]).unwrap();
        assert_eq!(s.sectors()[0].genus, 2);
        assert_eq!(s.branches().len(), 1);
        assert_eq!(s.attachments().next(), Some((0, 0, 7)));

        assert_eq!(
            make_xg(0, &[1, 2]),
            Err(Error::DegreeTooSmall {
                index: 1,
                value: "1".into()
            })
        );
        assert_eq!(make_xg(0, &[]), Err(Error::EmptyDegrees));
    }

    #[test]
    fn make_xg_orders_many_branches() {
        let degrees: Vec<i64> = (2..14).collect();
        let s = make_xg(1, &degrees).unwrap();
        assert_eq!(s.branches()[0], "b01");
        let got: Vec<(usize, i64)> = s.attachments().map(|(_, b, d)| (b, d)).collect();
        let want: Vec<(usize, i64)> = degrees.iter().enumerate().map(|(i, &d)| (i, d)).collect();
        assert_eq!(got, want);
    }

    fn two_sector(d1: i64, d2: i64) -> MultibranchedSurface {
        MultibranchedSurface::new(
            vec!["b".into()],
            vec![Sector::new(0, [("b", d1)]), Sector::new(0, [("b", d2)])],
        )
        .unwrap()
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&make_xg(3, &[2, 9, 4]).unwrap()));
        assert!(!is_regular(&two_sector(2, 3)));
        assert!(is_regular(&two_sector(2, -2)));
        // an isolated branch is vacuously regular
        let s = MultibranchedSurface::new(
            vec!["a".into(), "z".into()],
            vec![Sector::new(0, [("a", 4)])],
        )
        .unwrap();
        assert!(is_regular(&s));
    }

    #[test]
    fn regularity_matches_enumeration() {
        // oracle: compare every pair of attachments on the same branch
        for d1 in -4i64..=4 {
            for d2 in -4i64..=4 {
                if d1 == 0 || d2 == 0 {
                    continue;
                }
                let s = two_sector(d1, d2);
                let pairs: Vec<(usize, i64)> = s.attachments().map(|(_, b, d)| (b, d)).collect();
                let expected = pairs
                    .iter()
                    .all(|&(b, d)| pairs.iter().all(|&(c, e)| b != c || d.abs() == e.abs()));
                assert_eq!(is_regular(&s), expected, "degrees {d1}, {d2}");
            }
        }
    }
}
