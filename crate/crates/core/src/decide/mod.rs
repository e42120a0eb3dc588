//! Satisfiability and validity over frame classes.
//!
//! Announcements are reduced away, `Kw` is translated into `K`, and the
//! result is decided by a labelled tableau for the basic modal logic of the
//! class. Every satisfying model is re-checked with [`mc`] and
//! [`Frame::is_in_class`] before it is returned.

mod nnf;
mod tableau;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::formula::Formula;
use crate::semantics::{mc, Frame, FrameClass, KripkeModel};
use crate::translate::{eliminate_kw, reduce, TranslateError};
use nnf::{Interner, Node};
use tableau::{OpenBranch, Search, Tableau};

pub use tableau::Stats;

/// Default limit on prefixes created (and branches opened) per query.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error(transparent)]
    Translate(#[from] TranslateError),
    #[error("formulas combining announcements and K are not supported")]
    AnnouncementWithK,
    /// The extracted model failed re-checking. Indicates a bug.
    #[error("extracted model failed verification: {0}")]
    Unverified(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Sat { model: KripkeModel, point: String },
    Unsat,
    ResourceLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionResult {
    pub outcome: Outcome,
    pub stats: Stats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid { countermodel: KripkeModel, point: String },
    ResourceLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityResult {
    pub verdict: Verdict,
    pub stats: Stats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub budget: u64,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            budget: DEFAULT_BUDGET,
        }
    }
}

pub fn sat(f: &Formula, class: FrameClass) -> Result<DecisionResult, DecideError> {
    sat_with(f, class, Options::default())
}

pub fn valid(f: &Formula, class: FrameClass) -> Result<ValidityResult, DecideError> {
    valid_with(f, class, Options::default())
}

pub fn valid_with(
    f: &Formula,
    class: FrameClass,
    opts: Options,
) -> Result<ValidityResult, DecideError> {
    let r = sat_with(&Formula::not(f.clone()), class, opts)?;
    let verdict = match r.outcome {
        Outcome::Unsat => Verdict::Valid,
        Outcome::Sat { model, point } => Verdict::Invalid {
            countermodel: model,
            point,
        },
        Outcome::ResourceLimit => Verdict::ResourceLimit,
    };
    Ok(ValidityResult {
        verdict,
        stats: r.stats,
    })
}

fn replace_kw_by_top(f: &Formula) -> Formula {
    match f {
        Formula::Kw(..) => Formula::Top,
        Formula::Top | Formula::Bot | Formula::Prop(_) => f.clone(),
        Formula::Not(a) => Formula::not(replace_kw_by_top(a)),
        Formula::And(a, b) => Formula::and(replace_kw_by_top(a), replace_kw_by_top(b)),
        Formula::Or(a, b) => Formula::or(replace_kw_by_top(a), replace_kw_by_top(b)),
        Formula::Implies(a, b) => Formula::implies(replace_kw_by_top(a), replace_kw_by_top(b)),
        Formula::Iff(a, b) => Formula::iff(replace_kw_by_top(a), replace_kw_by_top(b)),
        Formula::K(i, a) => Formula::K(i.clone(), Box::new(replace_kw_by_top(a))),
        Formula::Announce(a, b) => Formula::announce(replace_kw_by_top(a), replace_kw_by_top(b)),
    }
}

pub fn sat_with(
    f: &Formula,
    class: FrameClass,
    opts: Options,
) -> Result<DecisionResult, DecideError> {
    if f.has_announcement() && f.has_k() {
        return Err(DecideError::AnnouncementWithK);
    }
    let mut g = reduce_if_needed(f)?;
    if class == FrameClass::PF {
        g = replace_kw_by_top(&g);
    }
    let g = eliminate_kw(&g)?;
    let mut net = Interner::new(f.agents().into_iter().collect());
    let root = net.nnf(&g, true);
    let mut tab = Tableau {
        net: &net,
        class,
        budget: opts.budget,
        stats: Stats::default(),
    };
    let search = tab.run(root);
    let stats = tab.stats;
    let outcome = match search {
        Search::Closed => Outcome::Unsat,
        Search::OutOfBudget => Outcome::ResourceLimit,
        Search::Open(branch) => {
            let model = extract(&net, class, &branch);
            let point = model.worlds()[0].clone();
            verify(&model, &point, f, class)?;
            Outcome::Sat { model, point }
        }
    };
    Ok(DecisionResult { outcome, stats })
}

fn reduce_if_needed(f: &Formula) -> Result<Formula, DecideError> {
    if f.has_announcement() {
        Ok(reduce(f)?)
    } else {
        Ok(f.clone())
    }
}

/// Closes each relation under the class's frame conditions.
pub(crate) fn close_relation(rel: &mut [BTreeSet<usize>], class: FrameClass) {
    let n = rel.len();
    if class.reflexive() {
        for (w, s) in rel.iter_mut().enumerate() {
            s.insert(w);
        }
    }
    loop {
        let mut changed = false;
        for u in 0..n {
            let succ: Vec<usize> = rel[u].iter().copied().collect();
            for &v in &succ {
                if class.symmetric() {
                    changed |= rel[v].insert(u);
                }
                if class.transitive() {
                    let next: Vec<usize> = rel[v].iter().copied().collect();
                    for z in next {
                        changed |= rel[u].insert(z);
                    }
                }
                if class.euclidean() {
                    for &z in &succ {
                        changed |= rel[v].insert(z);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
}

fn extract(net: &Interner, class: FrameClass, b: &OpenBranch) -> KripkeModel {
    let n = b.labels.len();
    let names: Vec<String> = (0..n).map(|w| format!("w{w}")).collect();
    let mut frame = Frame::new(&names, &net.agents).expect("at least the root prefix");
    for (a, agent) in net.agents.iter().enumerate() {
        let mut rel = b.succ[a].clone();
        for (w, blocker, agents) in &b.blocked {
            if agents.contains(&a) {
                let targets = b.succ[a][*blocker].clone();
                rel[*w].extend(targets);
            }
        }
        close_relation(&mut rel, class);
        for (u, succ) in rel.iter().enumerate() {
            for &v in succ {
                frame.add_edge_index(agent, u, v);
            }
        }
    }
    let mut m = KripkeModel::new(frame);
    for (k, p) in net.props.iter().enumerate() {
        m.declare_prop(p);
        for (w, label) in b.labels.iter().enumerate() {
            let positive = label
                .iter()
                .any(|id| net.nodes[id] == Node::Lit(k, true));
            if positive {
                m.set_true_index(p, w);
            }
        }
    }
    m
}

fn verify(m: &KripkeModel, point: &str, f: &Formula, class: FrameClass) -> Result<(), DecideError> {
    if !m.frame().is_in_class(class) {
        return Err(DecideError::Unverified(format!(
            "model is not in class {class}"
        )));
    }
    match mc(m, point, f) {
        Ok(true) => Ok(()),
        _ => Err(DecideError::Unverified(format!("{f} is false at {point}"))),
    }
}
