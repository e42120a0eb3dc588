use std::collections::BTreeSet;

use super::{Frame, KripkeModel, SemanticsError};
use crate::formula::Formula;

/// Default bound on `worlds * props` for brute-force frame validity.
pub const DEFAULT_FRAME_BITS: usize = 20;

/// Result of restricting a model to the worlds satisfying a formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Restriction {
    Model(KripkeModel),
    /// No world satisfies the announced formula.
    Empty,
}

impl KripkeModel {
    /// Truth value of `f` at every world, in world order.
    pub fn truth_set(&self, f: &Formula) -> Vec<bool> {
        let n = self.frame.len();
        match f {
            Formula::Top => vec![true; n],
            Formula::Bot => vec![false; n],
            Formula::Prop(p) => (0..n).map(|w| self.holds_atom(p, w)).collect(),
            Formula::Not(a) => self.truth_set(a).into_iter().map(|b| !b).collect(),
            Formula::And(a, b) => zip(self.truth_set(a), self.truth_set(b), |x, y| x && y),
            Formula::Or(a, b) => zip(self.truth_set(a), self.truth_set(b), |x, y| x || y),
            Formula::Implies(a, b) => zip(self.truth_set(a), self.truth_set(b), |x, y| !x || y),
            Formula::Iff(a, b) => zip(self.truth_set(a), self.truth_set(b), |x, y| x == y),
            Formula::Kw(i, a) => {
                let inner = self.truth_set(a);
                match self.frame.relation(i) {
                    None => vec![true; n],
                    Some(rel) => rel
                        .iter()
                        .map(|succ| {
                            let mut vals = succ.iter().map(|&t| inner[t]);
                            match vals.next() {
                                None => true,
                                Some(first) => vals.all(|v| v == first),
                            }
                        })
                        .collect(),
                }
            }
            Formula::K(i, a) => {
                let inner = self.truth_set(a);
                match self.frame.relation(i) {
                    None => vec![true; n],
                    Some(rel) => rel.iter().map(|s| s.iter().all(|&t| inner[t])).collect(),
                }
            }
            Formula::Announce(a, b) => {
                let pre = self.truth_set(a);
                let keep: Vec<usize> = (0..n).filter(|&w| pre[w]).collect();
                if keep.is_empty() {
                    return vec![true; n];
                }
                let inner = self.restrict_to(&keep).truth_set(b);
                let mut out = vec![true; n];
                for (pos, &w) in keep.iter().enumerate() {
                    out[w] = inner[pos];
                }
                out
            }
        }
    }

    fn restrict_to(&self, keep: &[usize]) -> KripkeModel {
        let mut renumber = vec![usize::MAX; self.frame.len()];
        for (n, &w) in keep.iter().enumerate() {
            renumber[w] = n;
        }
        let val = self
            .val
            .iter()
            .map(|(p, ws)| {
                let kept: BTreeSet<usize> = ws
                    .iter()
                    .filter(|&&w| renumber[w] != usize::MAX)
                    .map(|&w| renumber[w])
                    .collect();
                (p.clone(), kept)
            })
            .collect();
        KripkeModel {
            frame: self.frame.sub_frame(keep),
            val,
        }
    }
}

fn zip(a: Vec<bool>, b: Vec<bool>, op: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| op(x, y)).collect()
}

/// `M, w ⊨ f`.
pub fn mc(m: &KripkeModel, world: &str, f: &Formula) -> Result<bool, SemanticsError> {
    let w = m.frame.world_index(world)?;
    Ok(m.truth_set(f)[w])
}

/// The model restricted to the worlds where `f` holds, with relations and
/// valuation intersected accordingly.
pub fn restrict(m: &KripkeModel, f: &Formula) -> Restriction {
    let truth = m.truth_set(f);
    let keep: Vec<usize> = (0..m.frame.len()).filter(|&w| truth[w]).collect();
    if keep.is_empty() {
        Restriction::Empty
    } else {
        Restriction::Model(m.restrict_to(&keep))
    }
}

/// `f` holds at every world of `m`.
pub fn model_valid(m: &KripkeModel, f: &Formula) -> bool {
    m.truth_set(f).into_iter().all(|b| b)
}

/// `f` holds at every world under every valuation of its propositions.
/// Refuses when `worlds * props(f)` exceeds `bound`.
pub fn frame_valid(frame: &Frame, f: &Formula, bound: usize) -> Result<bool, SemanticsError> {
    let props: Vec<String> = f.props().into_iter().collect();
    let n = frame.len();
    let bits = n * props.len();
    if bits > bound {
        return Err(SemanticsError::TooLarge {
            needed: bits,
            bound,
        });
    }
    for mask in 0u64..(1u64 << bits) {
        let mut m = KripkeModel::new(frame.clone());
        for (k, p) in props.iter().enumerate() {
            m.declare_prop(p);
            for w in 0..n {
                if mask >> (k * n + w) & 1 == 1 {
                    m.set_true_index(p, w);
                }
            }
        }
        if !model_valid(&m, f) {
            return Ok(false);
        }
    }
    Ok(true)
}
