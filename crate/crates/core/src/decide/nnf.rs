use std::collections::HashMap;

use crate::formula::Formula;

pub(crate) type NodeId = usize;

/// Negation normal form over `⊤ ⊥ p ¬p ∧ ∨ □ ◇`, hash-consed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Node {
    True,
    False,
    Lit(usize, bool),
    And(NodeId, NodeId),
    Or(NodeId, NodeId),
    Box(usize, NodeId),
    Dia(usize, NodeId),
}

#[derive(Debug, Default)]
pub(crate) struct Interner {
    pub nodes: Vec<Node>,
    index: HashMap<Node, NodeId>,
    pub props: Vec<String>,
    pub agents: Vec<String>,
}

impl Interner {
    pub fn new(agents: Vec<String>) -> Interner {
        Interner {
            agents,
            ..Interner::default()
        }
    }

    fn intern(&mut self, n: Node) -> NodeId {
        if let Some(&id) = self.index.get(&n) {
            return id;
        }
        let id = self.nodes.len();
        self.nodes.push(n.clone());
        self.index.insert(n, id);
        id
    }

    fn prop(&mut self, p: &str) -> usize {
        match self.props.iter().position(|q| q == p) {
            Some(k) => k,
            None => {
                self.props.push(p.to_string());
                self.props.len() - 1
            }
        }
    }

    fn agent(&mut self, a: &str) -> usize {
        match self.agents.iter().position(|b| b == a) {
            Some(k) => k,
            None => {
                self.agents.push(a.to_string());
                self.agents.len() - 1
            }
        }
    }

    /// Id of the complementary literal, if it has been interned.
    pub fn complement(&self, id: NodeId) -> Option<NodeId> {
        match self.nodes[id] {
            Node::Lit(p, s) => self.index.get(&Node::Lit(p, !s)).copied(),
            _ => None,
        }
    }

    fn and(&mut self, a: NodeId, b: NodeId) -> NodeId {
        match (&self.nodes[a], &self.nodes[b]) {
            (Node::False, _) | (_, Node::False) => self.intern(Node::False),
            (Node::True, _) => b,
            (_, Node::True) => a,
            _ if a == b => a,
            _ => self.intern(Node::And(a, b)),
        }
    }

    fn or(&mut self, a: NodeId, b: NodeId) -> NodeId {
        match (&self.nodes[a], &self.nodes[b]) {
            (Node::True, _) | (_, Node::True) => self.intern(Node::True),
            (Node::False, _) => b,
            (_, Node::False) => a,
            _ if a == b => a,
            _ => self.intern(Node::Or(a, b)),
        }
    }

    /// NNF of `f` (when `pos`) or of `~f`. Announcements must have been
    /// eliminated.
    pub fn nnf(&mut self, f: &Formula, pos: bool) -> NodeId {
        match f {
            Formula::Top => self.intern(if pos { Node::True } else { Node::False }),
            Formula::Bot => self.intern(if pos { Node::False } else { Node::True }),
            Formula::Prop(p) => {
                let k = self.prop(p);
                self.intern(Node::Lit(k, !pos));
                self.intern(Node::Lit(k, pos))
            }
            Formula::Not(a) => self.nnf(a, !pos),
            Formula::And(a, b) => {
                let (x, y) = (self.nnf(a, pos), self.nnf(b, pos));
                if pos {
                    self.and(x, y)
                } else {
                    self.or(x, y)
                }
            }
            Formula::Or(a, b) => {
                let (x, y) = (self.nnf(a, pos), self.nnf(b, pos));
                if pos {
                    self.or(x, y)
                } else {
                    self.and(x, y)
                }
            }
            Formula::Implies(a, b) => {
                let (x, y) = (self.nnf(a, !pos), self.nnf(b, pos));
                if pos {
                    self.or(x, y)
                } else {
                    self.and(x, y)
                }
            }
            Formula::Iff(a, b) => {
                let (na, pa) = (self.nnf(a, false), self.nnf(a, true));
                let (nb, pb) = (self.nnf(b, false), self.nnf(b, true));
                if pos {
                    let l = self.or(na, pb);
                    let r = self.or(nb, pa);
                    self.and(l, r)
                } else {
                    let l = self.and(pa, nb);
                    let r = self.and(na, pb);
                    self.or(l, r)
                }
            }
            Formula::K(i, a) => {
                let k = self.agent(i);
                let inner = self.nnf(a, pos);
                self.intern(if pos {
                    Node::Box(k, inner)
                } else {
                    Node::Dia(k, inner)
                })
            }
            Formula::Kw(i, a) => {
                let k = self.agent(i);
                let (x, nx) = (self.nnf(a, true), self.nnf(a, false));
                if pos {
                    let l = self.intern(Node::Box(k, x));
                    let r = self.intern(Node::Box(k, nx));
                    self.or(l, r)
                } else {
                    let l = self.intern(Node::Dia(k, x));
                    let r = self.intern(Node::Dia(k, nx));
                    self.and(l, r)
                }
            }
            Formula::Announce(..) => panic!("announcements must be reduced before NNF"),
        }
    }
}

/// Fixed-capacity bit set over node ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitSet(Vec<u64>);

impl BitSet {
    pub fn new(capacity: usize) -> BitSet {
        BitSet(vec![0; capacity.div_ceil(64)])
    }

    /// Returns whether the bit was newly set.
    pub fn insert(&mut self, k: usize) -> bool {
        let (w, b) = (k / 64, 1u64 << (k % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            let mut rest = bits;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let t = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + t)
            })
        })
    }
}
