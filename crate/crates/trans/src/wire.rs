//! Wire representations for the canonical track JSONL format.
//!
//! One pedestrian track per line:
//!
//! ```json
//! {"track_id":"p1","clip_id":"c1","fps":10.0,"scene":{...}|null,
//!  "frames":[{"idx":0,"box":[cx,cy,w,h],"state":"stand","behavior":[w,l,n,h]|null}],
//!  "features":"relative/path.fjsonl"}
//! ```
//!
//! `features` optionally points at a per-frame precomputed visual feature
//! file; `images` optionally describes procedurally generated raster frames.

use serde::{Deserialize, Serialize};

use crate::schema::{BBox, BehaviorFlags, FrameObservation, MotionState, SceneAttributes};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrackRecord {
    pub track_id: String,
    pub clip_id: String,
    pub fps: f64,
    pub scene: Option<SceneAttributes>,
    pub frames: Vec<FrameObservation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub features: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<SyntheticImagesRecord>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SyntheticImagesRecord {
    pub seed: u64,
    pub width: usize,
    pub height: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameRecord {
    pub idx: u64,
    #[serde(rename = "box")]
    pub bbox: [f64; 4],
    pub state: String,
    pub behavior: Option<[u8; 4]>,
}

impl From<FrameObservation> for FrameRecord {
    fn from(f: FrameObservation) -> Self {
        FrameRecord {
            idx: f.frame_index,
            bbox: f.bbox.into(),
            state: <&str>::from(f.state).to_string(),
            behavior: f.behavior.map(Into::into),
        }
    }
}

impl TryFrom<FrameRecord> for FrameObservation {
    type Error = String;
    fn try_from(r: FrameRecord) -> Result<Self, String> {
        let behavior = match r.behavior {
            Some(bits) => Some(BehaviorFlags::try_from(bits)?),
            None => None,
        };
        Ok(FrameObservation {
            frame_index: r.idx,
            bbox: BBox::try_from(r.bbox)?,
            state: MotionState::try_from(r.state)?,
            behavior,
        })
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SceneRecord {
    pub num_lanes: u8,
    pub intersection: u8,
    pub designated: u8,
    pub signalized: u8,
    pub traffic_direction: u8,
    pub motion_direction: u8,
}

impl From<SceneAttributes> for SceneRecord {
    fn from(s: SceneAttributes) -> Self {
        SceneRecord {
            num_lanes: s.num_lanes,
            intersection: s.intersection as u8,
            designated: s.designated as u8,
            signalized: s.signalized as u8,
            traffic_direction: s.two_way_traffic as u8,
            motion_direction: s.longitudinal_motion as u8,
        }
    }
}

impl TryFrom<SceneRecord> for SceneAttributes {
    type Error = String;
    fn try_from(r: SceneRecord) -> Result<Self, String> {
        let bit = |name: &str, v: u8| -> Result<bool, String> {
            match v {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(format!("scene field {name} is {other}, want 0 or 1")),
            }
        };
        Ok(SceneAttributes {
            num_lanes: r.num_lanes,
            intersection: bit("intersection", r.intersection)?,
            designated: bit("designated", r.designated)?,
            signalized: bit("signalized", r.signalized)?,
            two_way_traffic: bit("traffic_direction", r.traffic_direction)?,
            longitudinal_motion: bit("motion_direction", r.motion_direction)?,
        })
    }
}
