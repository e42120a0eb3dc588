use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Frame, KripkeModel, SemanticsError};

/// On-disk model: worlds, agents, `rel` as `agent -> [[from, to], ...]`,
/// `val` as `prop -> [world, ...]`, and an optional designated point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelFile {
    pub worlds: Vec<String>,
    #[serde(default)]
    pub agents: Vec<String>,
    #[serde(default)]
    pub rel: BTreeMap<String, Vec<(String, String)>>,
    #[serde(default)]
    pub val: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
}

/// On-disk frame: a model file without `val`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameFile {
    pub worlds: Vec<String>,
    #[serde(default)]
    pub agents: Vec<String>,
    #[serde(default)]
    pub rel: BTreeMap<String, Vec<(String, String)>>,
}

fn build_frame(
    worlds: &[String],
    agents: &[String],
    rel: &BTreeMap<String, Vec<(String, String)>>,
) -> Result<Frame, SemanticsError> {
    let mut frame = Frame::new(worlds, agents)?;
    for (agent, pairs) in rel {
        if !agents.contains(agent) {
            return Err(SemanticsError::UnknownAgent(agent.clone()));
        }
        for (from, to) in pairs {
            frame.add_edge(agent, from, to)?;
        }
    }
    Ok(frame)
}

fn rel_of(frame: &Frame) -> BTreeMap<String, Vec<(String, String)>> {
    frame
        .agents()
        .iter()
        .map(|a| {
            let pairs = frame
                .edges(a)
                .into_iter()
                .map(|(f, t)| (f.to_string(), t.to_string()))
                .collect();
            (a.clone(), pairs)
        })
        .collect()
}

impl FrameFile {
    pub fn from_json(text: &str) -> Result<FrameFile, SemanticsError> {
        serde_json::from_str(text).map_err(|e| SemanticsError::Json(e.to_string()))
    }

    pub fn to_frame(&self) -> Result<Frame, SemanticsError> {
        build_frame(&self.worlds, &self.agents, &self.rel)
    }

    pub fn from_frame(frame: &Frame) -> FrameFile {
        FrameFile {
            worlds: frame.worlds().to_vec(),
            agents: frame.agents().to_vec(),
            rel: rel_of(frame),
        }
    }
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<ModelFile, SemanticsError> {
        serde_json::from_str(text).map_err(|e| SemanticsError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model files always serialize")
    }

    pub fn to_model(&self) -> Result<KripkeModel, SemanticsError> {
        let frame = build_frame(&self.worlds, &self.agents, &self.rel)?;
        let mut m = KripkeModel::new(frame);
        for (prop, ws) in &self.val {
            m.declare_prop(prop);
            for w in ws {
                m.set_true(prop, w)?;
            }
        }
        if let Some(p) = &self.point {
            m.frame().world_index(p)?;
        }
        Ok(m)
    }

    pub fn from_model(m: &KripkeModel, point: Option<&str>) -> ModelFile {
        let worlds = m.worlds();
        ModelFile {
            worlds: worlds.to_vec(),
            agents: m.frame().agents().to_vec(),
            rel: rel_of(m.frame()),
            val: m
                .valuation()
                .iter()
                .map(|(p, ws)| (p.clone(), ws.iter().map(|&w| worlds[w].clone()).collect()))
                .collect(),
            point: point.map(str::to_string),
        }
    }
}
