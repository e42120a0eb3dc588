//! Labelled tableau over an explicit graph of prefixes.
//!
//! Each prefix carries a set of NNF nodes; each agent has an edge set that
//! is kept closed under the class's frame conditions. Boxes propagate along
//! edges. Disjunctions are resolved everywhere before any diamond is
//! expanded, so that label comparison for blocking sees saturated labels.

use std::collections::BTreeSet;

use super::nnf::{BitSet, Interner, Node, NodeId};
use crate::semantics::FrameClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Stats {
    pub branches: u64,
    pub prefixes: u64,
}

/// An open, saturated branch.
#[derive(Debug, Clone)]
pub(crate) struct OpenBranch {
    pub labels: Vec<BitSet>,
    /// `succ[agent][world]`.
    pub succ: Vec<Vec<BTreeSet<usize>>>,
    /// Blocked prefix, its blocker, and agents with unwitnessed diamonds.
    pub blocked: Vec<(usize, usize, Vec<usize>)>,
}

pub(crate) enum Search {
    Open(OpenBranch),
    Closed,
    OutOfBudget,
}

#[derive(Clone)]
struct State {
    labels: Vec<BitSet>,
    succ: Vec<Vec<BTreeSet<usize>>>,
    pred: Vec<Vec<BTreeSet<usize>>>,
    parent: Vec<Option<usize>>,
    nodes_todo: Vec<(usize, NodeId)>,
    edges_todo: Vec<(usize, usize, usize)>,
}

pub(crate) struct Tableau<'a> {
    pub net: &'a Interner,
    pub class: FrameClass,
    pub budget: u64,
    pub stats: Stats,
}

impl State {
    fn add(&mut self, w: usize, n: NodeId) {
        if self.labels[w].insert(n) {
            self.nodes_todo.push((w, n));
        }
    }

    fn add_edge(&mut self, a: usize, u: usize, v: usize) {
        if self.succ[a][u].insert(v) {
            self.pred[a][v].insert(u);
            self.edges_todo.push((a, u, v));
        }
    }

    fn mutual(&self, a: usize, u: usize, v: usize) -> bool {
        self.succ[a][u].contains(&v) && self.succ[a][v].contains(&u)
    }
}

impl<'a> Tableau<'a> {
    fn blocks(&self) -> bool {
        self.class.transitive() || self.class.euclidean()
    }

    fn new_world(&mut self, s: &mut State, parent: Option<usize>) -> usize {
        self.stats.prefixes += 1;
        let w = s.labels.len();
        s.labels.push(BitSet::new(self.net.nodes.len()));
        s.parent.push(parent);
        for a in 0..self.net.agents.len() {
            s.succ[a].push(BTreeSet::new());
            s.pred[a].push(BTreeSet::new());
        }
        if self.class.reflexive() {
            for a in 0..self.net.agents.len() {
                s.add_edge(a, w, w);
            }
        }
        w
    }

    /// Applies the deterministic rules to a fixpoint. Returns false on a
    /// clash.
    fn saturate(&self, s: &mut State) -> bool {
        let trans = self.class.transitive();
        let eucl = self.class.euclidean();
        loop {
            if let Some((w, n)) = s.nodes_todo.pop() {
                match self.net.nodes[n] {
                    Node::False => return false,
                    Node::True | Node::Or(..) => {}
                    Node::Lit(..) => {
                        if let Some(c) = self.net.complement(n) {
                            if s.labels[w].contains(c) {
                                return false;
                            }
                        }
                    }
                    Node::And(x, y) => {
                        s.add(w, x);
                        s.add(w, y);
                    }
                    Node::Box(a, x) => {
                        let succ: Vec<usize> = s.succ[a][w].iter().copied().collect();
                        for v in succ {
                            s.add(v, x);
                            if trans || (eucl && s.mutual(a, w, v)) {
                                s.add(v, n);
                            }
                        }
                    }
                    Node::Dia(a, _) => {
                        if eucl {
                            let succ: Vec<usize> = s.succ[a][w].iter().copied().collect();
                            for v in succ {
                                s.add(v, n);
                            }
                        }
                    }
                }
            } else if let Some((a, u, v)) = s.edges_todo.pop() {
                self.edge_added(s, a, u, v);
            } else {
                return true;
            }
        }
    }

    fn edge_added(&self, s: &mut State, a: usize, u: usize, v: usize) {
        let trans = self.class.transitive();
        let eucl = self.class.euclidean();
        let modal: Vec<NodeId> = s.labels[u]
            .iter()
            .filter(|&n| matches!(self.net.nodes[n], Node::Box(b, _) | Node::Dia(b, _) if b == a))
            .collect();
        let mutual = eucl && s.mutual(a, u, v);
        for n in modal {
            match self.net.nodes[n] {
                Node::Box(_, x) => {
                    s.add(v, x);
                    if trans || mutual {
                        s.add(v, n);
                    }
                }
                Node::Dia(..) if eucl => s.add(v, n),
                _ => {}
            }
        }
        if mutual {
            let back: Vec<NodeId> = s.labels[v]
                .iter()
                .filter(|&n| matches!(self.net.nodes[n], Node::Box(b, _) if b == a))
                .collect();
            for n in back {
                s.add(u, n);
            }
        }
        if self.class.symmetric() {
            s.add_edge(a, v, u);
        }
        if trans {
            let preds: Vec<usize> = s.pred[a][u].iter().copied().collect();
            for p in preds {
                s.add_edge(a, p, v);
            }
            let succs: Vec<usize> = s.succ[a][v].iter().copied().collect();
            for z in succs {
                s.add_edge(a, u, z);
            }
        }
        if eucl {
            let sibs: Vec<usize> = s.succ[a][u].iter().copied().collect();
            for z in sibs {
                s.add_edge(a, z, v);
                s.add_edge(a, v, z);
            }
        }
    }

    fn open_or(&self, s: &State) -> Option<(usize, NodeId, NodeId)> {
        for (w, label) in s.labels.iter().enumerate() {
            for n in label.iter() {
                if let Node::Or(x, y) = self.net.nodes[n] {
                    if !label.contains(x) && !label.contains(y) {
                        return Some((w, x, y));
                    }
                }
            }
        }
        None
    }

    fn blocker(&self, s: &State, w: usize) -> Option<usize> {
        if !self.blocks() {
            return None;
        }
        let mut found = None;
        let mut cur = s.parent[w];
        while let Some(a) = cur {
            if s.labels[a] == s.labels[w] {
                found = Some(a);
            }
            cur = s.parent[a];
        }
        found
    }

    fn unwitnessed(&self, s: &State, w: usize) -> Vec<(usize, NodeId)> {
        s.labels[w]
            .iter()
            .filter_map(|n| match self.net.nodes[n] {
                Node::Dia(a, x) if !s.succ[a][w].iter().any(|&v| s.labels[v].contains(x)) => {
                    Some((a, x))
                }
                _ => None,
            })
            .collect()
    }

    /// Expands one diamond, or applies seriality. Returns false when
    /// nothing is left to do.
    fn expand_one(&mut self, s: &mut State) -> bool {
        for w in 0..s.labels.len() {
            if self.blocker(s, w).is_some() {
                continue;
            }
            if let Some(&(a, x)) = self.unwitnessed(s, w).first() {
                let target = match (self.class, s.succ[a][w].iter().next()) {
                    (FrameClass::PF, Some(&v)) => v,
                    _ => {
                        let v = self.new_world(s, Some(w));
                        s.add_edge(a, w, v);
                        v
                    }
                };
                s.add(target, x);
                return true;
            }
        }
        if self.class.serial() {
            for w in 0..s.labels.len() {
                for a in 0..self.net.agents.len() {
                    if !s.succ[a][w].is_empty() {
                        continue;
                    }
                    let has_box = s.labels[w]
                        .iter()
                        .any(|n| matches!(self.net.nodes[n], Node::Box(b, _) if b == a));
                    if has_box {
                        let v = self.new_world(s, Some(w));
                        s.add_edge(a, w, v);
                    } else {
                        s.add_edge(a, w, w);
                    }
                    return true;
                }
            }
        }
        false
    }

    fn exhausted(&self) -> bool {
        self.stats.prefixes > self.budget || self.stats.branches > self.budget
    }

    /// Searches for an open branch whose root prefix contains `root`.
    pub fn run(&mut self, root: NodeId) -> Search {
        let agents = self.net.agents.len();
        let mut init = State {
            labels: Vec::new(),
            succ: vec![Vec::new(); agents],
            pred: vec![Vec::new(); agents],
            parent: Vec::new(),
            nodes_todo: Vec::new(),
            edges_todo: Vec::new(),
        };
        let w = self.new_world(&mut init, None);
        init.add(w, root);
        let mut stack = vec![init];
        self.stats.branches = 1;
        while let Some(mut s) = stack.pop() {
            loop {
                if self.exhausted() {
                    return Search::OutOfBudget;
                }
                if !self.saturate(&mut s) {
                    break;
                }
                if let Some((w, x, y)) = self.open_or(&s) {
                    let mut right = s.clone();
                    right.add(w, y);
                    stack.push(right);
                    self.stats.branches += 1;
                    s.add(w, x);
                    continue;
                }
                if self.expand_one(&mut s) {
                    continue;
                }
                return Search::Open(self.finish(s));
            }
        }
        Search::Closed
    }

    fn finish(&self, s: State) -> OpenBranch {
        let blocked = (0..s.labels.len())
            .filter_map(|w| {
                let b = self.blocker(&s, w)?;
                let mut agents: Vec<usize> =
                    self.unwitnessed(&s, w).into_iter().map(|(a, _)| a).collect();
                agents.sort_unstable();
                agents.dedup();
                Some((w, b, agents))
            })
            .collect();
        OpenBranch {
            labels: s.labels,
            succ: s.succ,
            blocked,
        }
    }
}
