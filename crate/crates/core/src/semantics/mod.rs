//! Finite Kripke frames and models, frame classes, and the satisfaction
//! relation.

mod check;
pub mod fixtures;
mod io;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use check::{frame_valid, mc, model_valid, restrict, Restriction, DEFAULT_FRAME_BITS};
pub use io::{FrameFile, ModelFile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("agent `{0}` is used in `rel` but not declared in `agents`")]
    UnknownAgent(String),
    #[error("a model needs at least one world")]
    NoWorlds,
    #[error("world `{0}` is declared twice")]
    DuplicateWorld(String),
    #[error("frame validity needs {needed} valuation bits, above the bound of {bound}")]
    TooLarge { needed: usize, bound: usize },
    #[error("malformed model file: {0}")]
    Json(String),
}

/// Worlds and one accessibility relation per agent. World order is the
/// order of insertion and is preserved by every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    worlds: Vec<String>,
    index: HashMap<String, usize>,
    agents: Vec<String>,
    succ: BTreeMap<String, Vec<BTreeSet<usize>>>,
}

impl Frame {
    pub fn new<W: AsRef<str>, A: AsRef<str>>(
        worlds: &[W],
        agents: &[A],
    ) -> Result<Frame, SemanticsError> {
        if worlds.is_empty() {
            return Err(SemanticsError::NoWorlds);
        }
        let mut index = HashMap::new();
        for (n, w) in worlds.iter().enumerate() {
            if index.insert(w.as_ref().to_string(), n).is_some() {
                return Err(SemanticsError::DuplicateWorld(w.as_ref().to_string()));
            }
        }
        let mut frame = Frame {
            worlds: worlds.iter().map(|w| w.as_ref().to_string()).collect(),
            index,
            agents: Vec::new(),
            succ: BTreeMap::new(),
        };
        for a in agents {
            frame.add_agent(a.as_ref());
        }
        Ok(frame)
    }

    pub fn add_agent(&mut self, agent: &str) {
        if !self.succ.contains_key(agent) {
            self.agents.push(agent.to_string());
            self.succ
                .insert(agent.to_string(), vec![BTreeSet::new(); self.worlds.len()]);
        }
    }

    pub fn add_edge(&mut self, agent: &str, from: &str, to: &str) -> Result<(), SemanticsError> {
        let f = self.world_index(from)?;
        let t = self.world_index(to)?;
        self.add_agent(agent);
        self.succ.get_mut(agent).expect("agent registered")[f].insert(t);
        Ok(())
    }

    pub(crate) fn add_edge_index(&mut self, agent: &str, from: usize, to: usize) {
        self.add_agent(agent);
        self.succ.get_mut(agent).expect("agent registered")[from].insert(to);
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn agents(&self) -> &[String] {
        &self.agents
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn world_index(&self, w: &str) -> Result<usize, SemanticsError> {
        self.index
            .get(w)
            .copied()
            .ok_or_else(|| SemanticsError::UnknownWorld(w.to_string()))
    }

    /// Successor sets of `agent`, indexed by world; `None` for an agent the
    /// frame does not mention (its relation is empty).
    pub fn relation(&self, agent: &str) -> Option<&[BTreeSet<usize>]> {
        self.succ.get(agent).map(|v| v.as_slice())
    }

    /// All `(from, to)` pairs of `agent`'s relation, by world name.
    pub fn edges(&self, agent: &str) -> Vec<(&str, &str)> {
        let Some(rel) = self.relation(agent) else {
            return Vec::new();
        };
        rel.iter()
            .enumerate()
            .flat_map(|(f, ts)| {
                ts.iter()
                    .map(move |&t| (self.worlds[f].as_str(), self.worlds[t].as_str()))
            })
            .collect()
    }

    /// Relational properties of each agent's relation.
    pub fn properties(&self) -> BTreeMap<String, BTreeSet<Property>> {
        self.agents
            .iter()
            .map(|a| (a.clone(), relation_properties(&self.succ[a])))
            .collect()
    }

    /// Whether every agent's relation has all properties `class` requires.
    pub fn is_in_class(&self, class: FrameClass) -> bool {
        let required = class.required_properties();
        self.succ
            .values()
            .all(|rel| required.is_subset(&relation_properties(rel)))
    }

    /// Keeps only the worlds in `keep` (by index, ascending).
    pub(crate) fn sub_frame(&self, keep: &[usize]) -> Frame {
        let mut renumber = vec![usize::MAX; self.worlds.len()];
        for (n, &w) in keep.iter().enumerate() {
            renumber[w] = n;
        }
        let worlds: Vec<String> = keep.iter().map(|&w| self.worlds[w].clone()).collect();
        let index = worlds
            .iter()
            .enumerate()
            .map(|(n, w)| (w.clone(), n))
            .collect();
        let succ = self
            .succ
            .iter()
            .map(|(a, rel)| {
                let rel = keep
                    .iter()
                    .map(|&w| {
                        rel[w]
                            .iter()
                            .filter(|&&t| renumber[t] != usize::MAX)
                            .map(|&t| renumber[t])
                            .collect()
                    })
                    .collect();
                (a.clone(), rel)
            })
            .collect();
        Frame {
            worlds,
            index,
            agents: self.agents.clone(),
            succ,
        }
    }
}

/// Relational frame properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Reflexive,
    Serial,
    Transitive,
    Symmetric,
    Euclidean,
    PartialFunctional,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Reflexive,
        Property::Serial,
        Property::Transitive,
        Property::Symmetric,
        Property::Euclidean,
        Property::PartialFunctional,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Reflexive => "reflexive",
            Property::Serial => "serial",
            Property::Transitive => "transitive",
            Property::Symmetric => "symmetric",
            Property::Euclidean => "euclidean",
            Property::PartialFunctional => "partial-functional",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checks each property by direct quantification over the relation.
pub fn relation_properties(rel: &[BTreeSet<usize>]) -> BTreeSet<Property> {
    let n = rel.len();
    let has = |a: usize, b: usize| rel[a].contains(&b);
    let mut out = BTreeSet::new();
    if (0..n).all(|w| has(w, w)) {
        out.insert(Property::Reflexive);
    }
    if rel.iter().all(|s| !s.is_empty()) {
        out.insert(Property::Serial);
    }
    if (0..n).all(|a| rel[a].iter().all(|&b| rel[b].iter().all(|&c| has(a, c)))) {
        out.insert(Property::Transitive);
    }
    if (0..n).all(|a| rel[a].iter().all(|&b| has(b, a))) {
        out.insert(Property::Symmetric);
    }
    if (0..n).all(|a| rel[a].iter().all(|&b| rel[a].iter().all(|&c| has(b, c)))) {
        out.insert(Property::Euclidean);
    }
    if rel.iter().all(|s| s.len() <= 1) {
        out.insert(Property::PartialFunctional);
    }
    out
}

/// Frame classes, each a conjunction of relational properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameClass {
    K,
    D,
    T,
    B,
    K4,
    K5,
    K45,
    S4,
    S5,
    PF,
}

impl FrameClass {
    pub const ALL: [FrameClass; 10] = [
        FrameClass::K,
        FrameClass::D,
        FrameClass::T,
        FrameClass::B,
        FrameClass::K4,
        FrameClass::K5,
        FrameClass::K45,
        FrameClass::S4,
        FrameClass::S5,
        FrameClass::PF,
    ];

    pub fn required_properties(self) -> BTreeSet<Property> {
        use Property::*;
        let props: &[Property] = match self {
            FrameClass::K => &[],
            FrameClass::D => &[Serial],
            FrameClass::T => &[Reflexive],
            FrameClass::B => &[Symmetric],
            FrameClass::K4 => &[Transitive],
            FrameClass::K5 => &[Euclidean],
            FrameClass::K45 => &[Transitive, Euclidean],
            FrameClass::S4 => &[Reflexive, Transitive],
            FrameClass::S5 => &[Reflexive, Euclidean],
            FrameClass::PF => &[PartialFunctional],
        };
        props.iter().copied().collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            FrameClass::K => "K",
            FrameClass::D => "D",
            FrameClass::T => "T",
            FrameClass::B => "B",
            FrameClass::K4 => "K4",
            FrameClass::K5 => "K5",
            FrameClass::K45 => "K45",
            FrameClass::S4 => "S4",
            FrameClass::S5 => "S5",
            FrameClass::PF => "PF",
        }
    }

    pub fn reflexive(self) -> bool {
        matches!(self, FrameClass::T | FrameClass::S4 | FrameClass::S5)
    }

    pub fn transitive(self) -> bool {
        matches!(self, FrameClass::K4 | FrameClass::K45 | FrameClass::S4)
    }

    pub fn euclidean(self) -> bool {
        matches!(self, FrameClass::K5 | FrameClass::K45 | FrameClass::S5)
    }

    pub fn symmetric(self) -> bool {
        matches!(self, FrameClass::B)
    }

    pub fn serial(self) -> bool {
        matches!(self, FrameClass::D)
    }
}

impl fmt::Display for FrameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FrameClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.to_ascii_uppercase();
        let alias = match upper.as_str() {
            "4" => "K4",
            "5" => "K5",
            "45" => "K45",
            other => other,
        };
        FrameClass::ALL
            .into_iter()
            .find(|c| c.name() == alias)
            .ok_or_else(|| format!("unknown frame class `{s}`"))
    }
}

/// A frame together with a valuation. Propositions missing from the
/// valuation are false everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeModel {
    frame: Frame,
    val: BTreeMap<String, BTreeSet<usize>>,
}

impl KripkeModel {
    pub fn new(frame: Frame) -> KripkeModel {
        KripkeModel {
            frame,
            val: BTreeMap::new(),
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn frame_mut(&mut self) -> &mut Frame {
        &mut self.frame
    }

    /// Makes `prop` true at `world`.
    pub fn set_true(&mut self, prop: &str, world: &str) -> Result<(), SemanticsError> {
        let w = self.frame.world_index(world)?;
        self.val.entry(prop.to_string()).or_default().insert(w);
        Ok(())
    }

    pub(crate) fn set_true_index(&mut self, prop: &str, world: usize) {
        self.val.entry(prop.to_string()).or_default().insert(world);
    }

    /// Declares `prop` (false everywhere until set).
    pub fn declare_prop(&mut self, prop: &str) {
        self.val.entry(prop.to_string()).or_default();
    }

    pub fn valuation(&self) -> &BTreeMap<String, BTreeSet<usize>> {
        &self.val
    }

    pub fn holds_atom(&self, prop: &str, world: usize) -> bool {
        self.val.get(prop).is_some_and(|s| s.contains(&world))
    }

    pub fn worlds(&self) -> &[String] {
        self.frame.worlds()
    }
}
