//! Executable checkers for the boundary-pair, kernel and reconstruction
//! results, with seeded instance generators and a suite runner.

mod checks;
mod epigraph;
pub mod fixtures;
pub mod generate;
mod suite;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::geometry::{Point, Vector};
use crate::schema::Geometry;
use crate::scalar::Scalar;

pub use checks::{
    check_boundary_hull, check_convexity_corollary, check_extreme_existence, check_face_lemma, check_flat_theorem,
    check_hyperbolic_theorem, check_kernel_characterization, check_krein_milman, boundary_probes,
};
pub use epigraph::{Chord, Epigraph1D};
pub use suite::{check_instance, generate_instances, run_suite, Instance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    #[serde(rename = "thm-2")]
    FlatPairs,
    #[serde(rename = "thm-4")]
    HyperbolicPairs,
    #[serde(rename = "cor-5")]
    ConvexityByPairs,
    #[serde(rename = "prop-8")]
    KernelVisibility,
    #[serde(rename = "thm-10")]
    BoundaryHull,
    #[serde(rename = "prop-11")]
    ExtremeExistence,
    #[serde(rename = "lemma-12")]
    FaceExtremes,
    #[serde(rename = "thm-13")]
    KreinMilman,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::FlatPairs,
        TheoremId::HyperbolicPairs,
        TheoremId::ConvexityByPairs,
        TheoremId::KernelVisibility,
        TheoremId::BoundaryHull,
        TheoremId::ExtremeExistence,
        TheoremId::FaceExtremes,
        TheoremId::KreinMilman,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::FlatPairs => "thm-2",
            TheoremId::HyperbolicPairs => "thm-4",
            TheoremId::ConvexityByPairs => "cor-5",
            TheoremId::KernelVisibility => "prop-8",
            TheoremId::BoundaryHull => "thm-10",
            TheoremId::ExtremeExistence => "prop-11",
            TheoremId::FaceExtremes => "lemma-12",
            TheoremId::KreinMilman => "thm-13",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    Satisfied,
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    Holds,
    Fails,
    NotApplicable,
    ExpectedCounterexampleOfClosedness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub role: String,
    pub points: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Witness {
    pub fn new<T: Scalar>(role: &str, points: &[&Point<T>]) -> Self {
        Self { role: role.to_string(), points: points.iter().map(|p| p.to_strings()).collect(), detail: None }
    }

    pub fn vectors<T: Scalar>(role: &str, vs: &[&Vector<T>]) -> Self {
        Self { role: role.to_string(), points: vs.iter().map(|v| v.to_strings()).collect(), detail: None }
    }

    pub fn note(role: &str, detail: impl Into<String>) -> Self {
        Self { role: role.to_string(), points: Vec::new(), detail: Some(detail.into()) }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InstanceInfo {
    pub digest: String,
    pub kind: String,
}

impl InstanceInfo {
    /// Digest: the first 16 hex digits of SHA-256 over the canonical JSON of
    /// the geometry and any extra parameters.
    pub fn of<T: Scalar>(g: &Geometry<T>, extra: Option<&Vector<T>>) -> Self {
        let mut canonical = g.to_json();
        if let Some(v) = extra {
            canonical["direction"] = v.to_strings().into();
        }
        let hash = Sha256::digest(canonical.to_string().as_bytes());
        let digest = hash.iter().take(8).map(|b| format!("{b:02x}")).collect();
        Self { digest, kind: g.kind().to_string() }
    }

    pub(crate) fn seed_mix(&self) -> u64 {
        u64::from_str_radix(&self.digest, 16).unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub hypothesis: Hypothesis,
    pub conclusion: Conclusion,
    pub witnesses: Vec<Witness>,
    /// Side facts recorded alongside the verdict, such as whether a
    /// reconstruction happens to hold when the hypothesis fails.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub facts: BTreeMap<String, bool>,
    pub instance: InstanceInfo,
}

impl TheoremReport {
    fn new(theorem: TheoremId, instance: InstanceInfo) -> Self {
        Self {
            theorem,
            hypothesis: Hypothesis::Satisfied,
            conclusion: Conclusion::Holds,
            witnesses: Vec::new(),
            facts: BTreeMap::new(),
            instance,
        }
    }

    fn fact(&mut self, name: &str, value: bool) {
        self.facts.insert(name.to_string(), value);
    }

    /// Hypothesis satisfied but conclusion failed.
    pub fn is_counterexample(&self) -> bool {
        self.hypothesis == Hypothesis::Satisfied && self.conclusion == Conclusion::Fails
    }
}

/// Sampling knobs shared by the checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckConfig {
    pub seed: u64,
    /// Member points sampled per instance.
    pub samples: usize,
    /// Edge samples per edge for visibility, circle points for disks.
    pub probe_density: usize,
}

pub const DEFAULT_SEED: u64 = 0xC0FFEE;

impl Default for CheckConfig {
    fn default() -> Self {
        Self { seed: DEFAULT_SEED, samples: 50, probe_density: 32 }
    }
}

/// The chord-height tolerance `2^-40`.
pub fn chord_tolerance<T: Scalar>() -> T {
    T::pow2_neg(40)
}
