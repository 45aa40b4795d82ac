//! Canonical domain types for per-pedestrian motion-state annotations.
//!
//! All source layouts are adapted into [`PedestrianTrack`] values: one
//! pedestrian observed over a contiguous run of frames within a clip,
//! with a center-based bounding box and a binary motion state per frame.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::wire;

/// Axis-aligned bounding box stored center-based, in pixels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 4]", try_from = "[f64; 4]")]
pub struct BBox {
    pub cx: f64,
    pub cy: f64,
    pub w: f64,
    pub h: f64,
}

impl BBox {
    pub fn new(cx: f64, cy: f64, w: f64, h: f64) -> Self {
        Self { cx, cy, w, h }
    }

    /// Build from corner coordinates (x1, y1, x2, y2).
    pub fn from_corners(x1: f64, y1: f64, x2: f64, y2: f64) -> Self {
        Self {
            cx: (x1 + x2) / 2.0,
            cy: (y1 + y2) / 2.0,
            w: x2 - x1,
            h: y2 - y1,
        }
    }

    /// Positive extents and finite coordinates.
    pub fn is_valid(&self) -> bool {
        self.w > 0.0
            && self.h > 0.0
            && self.cx.is_finite()
            && self.cy.is_finite()
            && self.w.is_finite()
            && self.h.is_finite()
    }
}

impl From<BBox> for [f64; 4] {
    fn from(b: BBox) -> Self {
        [b.cx, b.cy, b.w, b.h]
    }
}

impl TryFrom<[f64; 4]> for BBox {
    type Error = String;
    fn try_from(v: [f64; 4]) -> Result<Self, String> {
        Ok(BBox::new(v[0], v[1], v[2], v[3]))
    }
}

/// Binary motion state of a pedestrian at one frame.
///
/// Source labels for locomotion variants (running, jogging) map to
/// [`MotionState::Walking`] at ingestion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "&'static str", try_from = "String")]
pub enum MotionState {
    Standing,
    Walking,
}

impl MotionState {
    pub fn flipped(self) -> Self {
        match self {
            MotionState::Standing => MotionState::Walking,
            MotionState::Walking => MotionState::Standing,
        }
    }
}

impl From<MotionState> for &'static str {
    fn from(s: MotionState) -> Self {
        match s {
            MotionState::Standing => "stand",
            MotionState::Walking => "walk",
        }
    }
}

impl TryFrom<String> for MotionState {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        match s.as_str() {
            "stand" => Ok(MotionState::Standing),
            "walk" => Ok(MotionState::Walking),
            other => Err(format!("unknown motion state {other:?} (want \"stand\" or \"walk\")")),
        }
    }
}

impl fmt::Display for MotionState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(<&str>::from(*self))
    }
}

/// Per-frame binary behavior attributes: walking state, looking, nodding,
/// hand gesture. Only some source datasets provide these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "[u8; 4]", try_from = "[u8; 4]")]
pub struct BehaviorFlags {
    pub walk: bool,
    pub look: bool,
    pub nod: bool,
    pub hand_gesture: bool,
}

impl From<BehaviorFlags> for [u8; 4] {
    fn from(b: BehaviorFlags) -> Self {
        [b.walk as u8, b.look as u8, b.nod as u8, b.hand_gesture as u8]
    }
}

impl TryFrom<[u8; 4]> for BehaviorFlags {
    type Error = String;
    fn try_from(v: [u8; 4]) -> Result<Self, String> {
        for (i, bit) in v.iter().enumerate() {
            if *bit > 1 {
                return Err(format!("behavior bit {i} is {bit}, want 0 or 1"));
            }
        }
        Ok(BehaviorFlags {
            walk: v[0] == 1,
            look: v[1] == 1,
            nod: v[2] == 1,
            hand_gesture: v[3] == 1,
        })
    }
}

/// Coarse static description of the traffic scene around a track.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "wire::SceneRecord", try_from = "wire::SceneRecord")]
pub struct SceneAttributes {
    pub num_lanes: u8,
    pub intersection: bool,
    pub designated: bool,
    pub signalized: bool,
    /// Traffic direction: false = one-way, true = two-way.
    pub two_way_traffic: bool,
    /// Pedestrian motion direction: false = lateral, true = longitudinal.
    pub longitudinal_motion: bool,
}

/// Maximum plausible lane count accepted by validation.
pub const MAX_NUM_LANES: u8 = 16;

/// One observed frame of a track.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "wire::FrameRecord", try_from = "wire::FrameRecord")]
pub struct FrameObservation {
    pub frame_index: u64,
    pub bbox: BBox,
    pub state: MotionState,
    pub behavior: Option<BehaviorFlags>,
}

/// Reference to per-frame image data backing a track's visual stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImageSource {
    /// Path to a per-frame precomputed visual feature file (one JSON array
    /// per line, frame order).
    Features(PathBuf),
    /// Procedurally generated raster frames, reproducible from the seed.
    Synthetic { seed: u64, width: usize, height: usize },
}

/// One pedestrian's time-indexed observations within a clip.
#[derive(Debug, Clone, PartialEq)]
pub struct PedestrianTrack {
    pub track_id: String,
    pub clip_id: String,
    pub fps: f64,
    pub observations: Vec<FrameObservation>,
    pub scene: Option<SceneAttributes>,
    pub image_source: Option<ImageSource>,
}

impl PedestrianTrack {
    /// Motion-state sequence in frame order.
    pub fn states(&self) -> impl Iterator<Item = MotionState> + '_ {
        self.observations.iter().map(|o| o.state)
    }

    pub fn first_frame_index(&self) -> Option<u64> {
        self.observations.first().map(|o| o.frame_index)
    }

    pub fn last_frame_index(&self) -> Option<u64> {
        self.observations.last().map(|o| o.frame_index)
    }
}

/// Named dataset split over clip identifiers. Splitting is by clip, never
/// by track, so tracks from one clip always land in the same split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetSplit {
    pub name: SplitName,
    pub clip_ids: BTreeSet<String>,
}

impl DatasetSplit {
    pub fn new(name: SplitName, clip_ids: impl IntoIterator<Item = String>) -> Self {
        Self {
            name,
            clip_ids: clip_ids.into_iter().collect(),
        }
    }

    pub fn contains(&self, clip_id: &str) -> bool {
        self.clip_ids.contains(clip_id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitName {
    Train,
    Val,
    Test,
}

impl fmt::Display for SplitName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitName::Train => f.write_str("train"),
            SplitName::Val => f.write_str("val"),
            SplitName::Test => f.write_str("test"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bbox_corner_conversion() {
        let b = BBox::from_corners(10.0, 20.0, 50.0, 100.0);
        assert_eq!(b, BBox::new(30.0, 60.0, 40.0, 80.0));
        assert!(b.is_valid());
    }

    #[test]
    fn bbox_rejects_degenerate() {
        assert!(!BBox::new(0.0, 0.0, 0.0, 5.0).is_valid());
        assert!(!BBox::new(0.0, 0.0, 5.0, -1.0).is_valid());
        assert!(!BBox::new(f64::NAN, 0.0, 5.0, 5.0).is_valid());
    }

    #[test]
    fn motion_state_wire_names() {
        let s: MotionState = serde_json::from_str("\"walk\"").unwrap();
        assert_eq!(s, MotionState::Walking);
        assert_eq!(serde_json::to_string(&MotionState::Standing).unwrap(), "\"stand\"");
        assert!(serde_json::from_str::<MotionState>("\"running\"").is_err());
    }
}
