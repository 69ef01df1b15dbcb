//! JSON schema for curves:
//!
//! ```json
//! {"c": 0.0,
//!  "start": {"position": [1, 0, 0], "direction": [0, 1, 0]},
//!  "arcs": [{"kappa": 1.0, "s": 3.14159}],
//!  "turns": [0.0]}
//! ```
//!
//! `start` may be omitted, in which case the canonical origin pose is used.

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use super::{Arc, ClosedCurve};
use crate::error::{Error, Result};
use crate::modelspace::{ModelSpace, Point, Pose};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoseJson {
    pub position: [f64; 3],
    pub direction: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcJson {
    pub kappa: f64,
    pub s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveJson {
    pub c: f64,
    #[serde(default = "origin_json")]
    pub start: PoseJson,
    pub arcs: Vec<ArcJson>,
    pub turns: Vec<f64>,
}

fn origin_json() -> PoseJson {
    PoseJson::from(&Pose::origin())
}

impl From<&Pose> for PoseJson {
    fn from(p: &Pose) -> Self {
        PoseJson {
            position: p.position.0.into(),
            direction: p.direction.into(),
        }
    }
}

impl From<&PoseJson> for Pose {
    fn from(p: &PoseJson) -> Self {
        Pose {
            position: Point(Vector3::from(p.position)),
            direction: Vector3::from(p.direction),
        }
    }
}

impl From<&ClosedCurve> for CurveJson {
    fn from(curve: &ClosedCurve) -> Self {
        CurveJson {
            c: curve.space.c(),
            start: PoseJson::from(&curve.start),
            arcs: curve
                .arcs
                .iter()
                .map(|a| ArcJson {
                    kappa: a.kappa,
                    s: a.s,
                })
                .collect(),
            turns: curve.turns.clone(),
        }
    }
}

impl TryFrom<CurveJson> for ClosedCurve {
    type Error = Error;

    fn try_from(raw: CurveJson) -> Result<Self> {
        let space = ModelSpace::new(raw.c)?;
        let arcs = raw
            .arcs
            .iter()
            .map(|a| Arc::new(a.kappa, a.s))
            .collect::<Result<Vec<_>>>()?;
        ClosedCurve::new(space, Pose::from(&raw.start), arcs, raw.turns)
    }
}

impl Serialize for ClosedCurve {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CurveJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ClosedCurve {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = CurveJson::deserialize(deserializer)?;
        ClosedCurve::try_from(raw).map_err(serde::de::Error::custom)
    }
}
