use serde::Serialize;

/// Class of a pair of distinct boundary points by where their open
/// segment lies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairClass {
    /// Open segment inside the boundary.
    Flat,
    /// Open segment inside the interior.
    Hyperbolic,
    /// Open segment inside the complement.
    Elliptic,
    /// None of the above.
    Mixed,
}

mod pairs;
mod partition;
pub(crate) mod polygon;
mod region;

pub use pairs::{circle_samples, ConvexityVerdict, PairWitness, ProbeStrategy};
pub use partition::{Cut, Piece, SegmentPartition};
pub use polygon::SimplePolygon;
pub use region::{circle_point, Located, Region2, RegionKind};
