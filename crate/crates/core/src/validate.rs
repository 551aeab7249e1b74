//! Diagnostic checks on a Lusztig datum that may not come from a crystal.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::lusztig::{element_key, LusztigDatum};
use crate::root::RootDatum;
use crate::words;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    /// A negative entry after re-expressing on `word` (one-based position).
    Negative { word: String, position: usize, value: i64 },
    /// `mu_{w s_i} - mu_w` is not a non-negative multiple of `w h_i`.
    GgmsEdge { element: String, index: usize },
    /// Vertices disagree between words, so no GGMS datum exists.
    Inconsistent { detail: String },
    /// `mu_{w0}` differs from the base point.
    TopVertex,
    /// The polytope is not contained in `Conv(W lambda)`.
    Containment,
    /// A check was skipped because of a size gate.
    Skipped { check: String, reason: String },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::Negative { word, position, value } => {
                write!(f, "entry {position} is {value} on word {word}")
            }
            Issue::GgmsEdge { element, index } => {
                write!(f, "edge condition fails at w={element}, i={index}")
            }
            Issue::Inconsistent { detail } => write!(f, "inconsistent vertices: {detail}"),
            Issue::TopVertex => f.write_str("mu_{w0} differs from the base point"),
            Issue::Containment => f.write_str("not contained in Conv(W lambda)"),
            Issue::Skipped { check, reason } => write!(f, "skipped {check}: {reason}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    /// No violations (skipped checks do not count).
    pub fn is_valid(&self) -> bool {
        self.issues.iter().all(|i| matches!(i, Issue::Skipped { .. }))
    }
}

fn ggms_edges(d: &RootDatum, vertices: &crate::lusztig::GgmsDatum, issues: &mut Vec<Issue>) {
    for (w, mu) in vertices.iter() {
        for i in 0..d.rank() {
            let ws = d.mul_simple_right(w, i);
            let diff = vertices.get(&ws) - mu;
            let dir = d.act_coweight(w, &d.simple_coroot(i));
            let k = dir.0.iter().zip(&diff.0).find(|(a, _)| **a != 0).map(|(a, b)| b / a).unwrap_or(0);
            if k < 0 || diff != k * &dir {
                issues.push(Issue::GgmsEdge {
                    element: element_key(d, w),
                    index: i + 1,
                });
            }
        }
    }
}

pub fn validate(p: &LusztigDatum) -> ValidationReport {
    let d = p.datum();
    let mut issues = Vec::new();

    match words::reduced_words_of_w0(d) {
        Ok(all) => {
            for word in all.iter() {
                match p.change_word(word) {
                    Ok(q) => {
                        if let Some((k, &v)) = q.n().iter().enumerate().find(|(_, &v)| v < 0) {
                            issues.push(Issue::Negative {
                                word: word.to_string(),
                                position: k + 1,
                                value: v,
                            });
                        }
                    }
                    Err(e) => issues.push(Issue::Inconsistent { detail: e.to_string() }),
                }
            }
        }
        Err(e) => {
            if let Some((k, &v)) = p.n().iter().enumerate().find(|(_, &v)| v < 0) {
                issues.push(Issue::Negative {
                    word: p.word().to_string(),
                    position: k + 1,
                    value: v,
                });
            }
            issues.push(Issue::Skipped {
                check: "non-negativity on every reduced word".into(),
                reason: e.to_string(),
            });
        }
    }

    match p.vertices() {
        Ok(vertices) => {
            ggms_edges(d, &vertices, &mut issues);
            if *vertices.get(d.longest()) != p.base().top(d.rank()) {
                issues.push(Issue::TopVertex);
            }
            if let Some(lambda) = p.lambda() {
                match LusztigDatum::lowest(d, lambda).and_then(|lo| {
                    let mp = lo.bz()?;
                    Ok(vertices.iter().all(|(_, mu)| mp.satisfied_by(mu)))
                }) {
                    Ok(true) => {}
                    Ok(false) => issues.push(Issue::Containment),
                    Err(e) => issues.push(Issue::Skipped {
                        check: "containment".into(),
                        reason: e.to_string(),
                    }),
                }
            }
        }
        Err(Error::Invariant(detail)) => issues.push(Issue::Inconsistent { detail }),
        Err(e) => issues.push(Issue::Skipped {
            check: "GGMS conditions".into(),
            reason: e.to_string(),
        }),
    }
    ValidationReport { issues }
}
