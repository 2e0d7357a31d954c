//! Machine-checkable JSON certificates.
//!
//! Schema: `{"verdict": "yes" | "no", "reason"?: string,
//! "orientation"?: [[i, j], ...], "cover"?: {"g1": [[u, v], ...],
//! "g2": [[u, v], ...]}}`; all arrays sorted lexicographically so the
//! output is byte-stable.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::chaincover::ChainCover;
use crate::orders::PartialOrder;
use crate::recognizer::{NoReason, RecognitionResult};
use crate::Edge;

pub const REASON_NOT_COMPARABILITY: &str = "complement_not_comparability";
pub const REASON_NO_COVER: &str = "no_linear_interval_cover";
pub const REASON_UNSAT: &str = "unsat";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoverCert {
    pub g1: Vec<[usize; 2]>,
    pub g2: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverCert>,
}

fn sorted_pairs(edges: &BTreeSet<Edge>) -> Vec<[usize; 2]> {
    edges.iter().map(|&(a, b)| [a, b]).collect()
}

impl Certificate {
    pub fn yes_cover(cover: &ChainCover) -> Self {
        Certificate {
            verdict: "yes".into(),
            reason: None,
            orientation: None,
            cover: Some(CoverCert {
                g1: sorted_pairs(&cover.g1_edges),
                g2: sorted_pairs(&cover.g2_edges),
            }),
        }
    }

    pub fn yes_with_orientation(orientation: &PartialOrder, cover: &ChainCover) -> Self {
        let mut cert = Self::yes_cover(cover);
        cert.orientation = Some(sorted_pairs(orientation.relation()));
        cert
    }

    pub fn no(reason: &str) -> Self {
        Certificate {
            verdict: "no".into(),
            reason: Some(reason.into()),
            orientation: None,
            cover: None,
        }
    }

    pub fn from_recognition(result: &RecognitionResult) -> Self {
        match result {
            RecognitionResult::Yes { orientation, cover } => {
                Self::yes_with_orientation(orientation, cover)
            }
            RecognitionResult::No(NoReason::ComplementNotComparability) => {
                Self::no(REASON_NOT_COMPARABILITY)
            }
            RecognitionResult::No(NoReason::NoLinearIntervalCover) => Self::no(REASON_NO_COVER),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == "yes"
    }

    pub fn cover_edges(&self) -> Option<(BTreeSet<Edge>, BTreeSet<Edge>)> {
        self.cover.as_ref().map(|c| {
            (
                c.g1.iter().map(|&[a, b]| (a, b)).collect(),
                c.g2.iter().map(|&[a, b]| (a, b)).collect(),
            )
        })
    }

    pub fn orientation_pairs(&self) -> Option<BTreeSet<(usize, usize)>> {
        self.orientation
            .as_ref()
            .map(|o| o.iter().map(|&[a, b]| (a, b)).collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
