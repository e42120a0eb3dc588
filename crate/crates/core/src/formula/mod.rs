//! Formulas of the knowing-whether language with knowledge and public
//! announcements, their concrete syntax and the syntactic operations the
//! rest of the crate builds on.

mod enumerate;
mod parse;
mod render;

use std::collections::BTreeSet;
use std::fmt;

pub use enumerate::{count_formulas, enumerate_formulas};
pub use parse::{parse, parse_schema, ParseError};

/// A formula. `Bot`, `Or`, `Implies` and `Iff` are first-class nodes so that
/// axiom schemas can be matched against them syntactically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Top,
    Bot,
    Prop(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Kw(String, Box<Formula>),
    K(String, Box<Formula>),
    Announce(Box<Formula>, Box<Formula>),
}

/// The least language a formula belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LanguageTag {
    EL,
    PLKw,
    PLKwK,
    PLKwA,
    PLKwAK,
}

impl LanguageTag {
    /// Language inclusion: `EL, PLKw ⊆ PLKwK ⊆ PLKwAK` and `PLKw ⊆ PLKwA ⊆ PLKwAK`.
    pub fn is_sublanguage_of(self, other: LanguageTag) -> bool {
        use LanguageTag::*;
        match (self, other) {
            (a, b) if a == b => true,
            (_, PLKwAK) => true,
            (EL, PLKwK) | (PLKw, PLKwK) | (PLKw, PLKwA) => true,
            _ => false,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LanguageTag::EL => "EL",
            LanguageTag::PLKw => "PLKw",
            LanguageTag::PLKwK => "PLKwK",
            LanguageTag::PLKwA => "PLKwA",
            LanguageTag::PLKwAK => "PLKwAK",
        }
    }
}

impl fmt::Display for LanguageTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Weight of a modal operator in [`Formula::complexity`].
const MODAL_WEIGHT: u64 = 4;

impl Formula {
    pub fn prop(name: &str) -> Formula {
        Formula::Prop(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn kw(agent: &str, f: Formula) -> Formula {
        Formula::Kw(agent.to_string(), Box::new(f))
    }

    pub fn k(agent: &str, f: Formula) -> Formula {
        Formula::K(agent.to_string(), Box::new(f))
    }

    pub fn announce(announced: Formula, body: Formula) -> Formula {
        Formula::Announce(Box::new(announced), Box::new(body))
    }

    /// Left-nested conjunction of `parts`; `top` when empty.
    pub fn conj<I: IntoIterator<Item = Formula>>(parts: I) -> Formula {
        parts
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::Top)
    }

    /// Left-nested disjunction of `parts`; `bot` when empty.
    pub fn disj<I: IntoIterator<Item = Formula>>(parts: I) -> Formula {
        parts.into_iter().reduce(Formula::or).unwrap_or(Formula::Bot)
    }

    /// Immediate subformulas, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Top | Formula::Bot | Formula::Prop(_) => vec![],
            Formula::Not(a) | Formula::Kw(_, a) | Formula::K(_, a) => vec![a],
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b)
            | Formula::Announce(a, b) => vec![a, b],
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Formula::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self
            .children()
            .into_iter()
            .map(Formula::depth)
            .max()
            .unwrap_or(0)
    }

    pub fn props(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    fn collect_props(&self, out: &mut BTreeSet<String>) {
        if let Formula::Prop(p) = self {
            out.insert(p.clone());
        }
        for c in self.children() {
            c.collect_props(out);
        }
    }

    pub fn agents(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_agents(&mut out);
        out
    }

    fn collect_agents(&self, out: &mut BTreeSet<String>) {
        if let Formula::Kw(a, _) | Formula::K(a, _) = self {
            out.insert(a.clone());
        }
        for c in self.children() {
            c.collect_agents(out);
        }
    }

    fn any_node(&self, pred: &dyn Fn(&Formula) -> bool) -> bool {
        pred(self) || self.children().into_iter().any(|c| c.any_node(pred))
    }

    pub fn has_kw(&self) -> bool {
        self.any_node(&|f| matches!(f, Formula::Kw(..)))
    }

    pub fn has_k(&self) -> bool {
        self.any_node(&|f| matches!(f, Formula::K(..)))
    }

    pub fn has_announcement(&self) -> bool {
        self.any_node(&|f| matches!(f, Formula::Announce(..)))
    }

    /// Uniform substitution `self[g/p]`.
    pub fn substitute(&self, p: &str, g: &Formula) -> Formula {
        self.map_props(&|name| (name == p).then(|| g.clone()))
    }

    /// Rebuilds the formula, replacing each proposition for which `f`
    /// returns `Some`.
    pub fn map_props(&self, f: &dyn Fn(&str) -> Option<Formula>) -> Formula {
        let b = |x: &Formula| Box::new(x.map_props(f));
        match self {
            Formula::Prop(name) => f(name).unwrap_or_else(|| self.clone()),
            Formula::Top | Formula::Bot => self.clone(),
            Formula::Not(a) => Formula::Not(b(a)),
            Formula::And(x, y) => Formula::And(b(x), b(y)),
            Formula::Or(x, y) => Formula::Or(b(x), b(y)),
            Formula::Implies(x, y) => Formula::Implies(b(x), b(y)),
            Formula::Iff(x, y) => Formula::Iff(b(x), b(y)),
            Formula::Kw(i, a) => Formula::Kw(i.clone(), b(a)),
            Formula::K(i, a) => Formula::K(i.clone(), b(a)),
            Formula::Announce(x, y) => Formula::Announce(b(x), b(y)),
        }
    }

    /// Least language containing the formula. Purely propositional formulas
    /// belong to both EL and PLKw; they are reported as PLKw.
    pub fn classify_language(&self) -> LanguageTag {
        match (self.has_announcement(), self.has_k(), self.has_kw()) {
            (true, true, _) => LanguageTag::PLKwAK,
            (true, false, _) => LanguageTag::PLKwA,
            (false, true, true) => LanguageTag::PLKwK,
            (false, true, false) => LanguageTag::EL,
            (false, false, _) => LanguageTag::PLKw,
        }
    }

    /// Whether the formula is a member of `lang`.
    pub fn fits(&self, lang: LanguageTag) -> bool {
        let tag = self.classify_language();
        tag.is_sublanguage_of(lang) || (tag == LanguageTag::PLKw && !self.has_kw() && lang == LanguageTag::EL)
    }

    /// Rewrite-complexity measure used to bound announcement elimination.
    ///
    /// Derived connectives weigh as their expansions into `¬`/`∧`, so that
    /// unfolding one under an announcement does not change the measure, and
    /// each announcement multiplies: `c([a]b) = (4 + c(a)) * c(b)`.
    pub fn complexity(&self) -> u64 {
        match self {
            Formula::Top | Formula::Prop(_) => 1,
            Formula::Bot => 2,
            Formula::Not(a) => 1 + a.complexity(),
            Formula::And(a, b) => 1 + a.complexity().max(b.complexity()),
            Formula::Or(a, b) => 3 + a.complexity().max(b.complexity()),
            Formula::Implies(a, b) => implies_complexity(a.complexity(), b.complexity()),
            Formula::Iff(a, b) => {
                let (ca, cb) = (a.complexity(), b.complexity());
                1 + implies_complexity(ca, cb).max(implies_complexity(cb, ca))
            }
            Formula::Kw(_, a) | Formula::K(_, a) => MODAL_WEIGHT.saturating_add(a.complexity()),
            Formula::Announce(a, b) => (4 + a.complexity()).saturating_mul(b.complexity()),
        }
    }

    /// Unfolds a derived connective at the head into the `⊤ ¬ ∧` core.
    /// Other formulas are returned unchanged.
    pub fn expand_head(&self) -> Formula {
        match self {
            Formula::Bot => Formula::not(Formula::Top),
            Formula::Or(a, b) => Formula::not(Formula::and(
                Formula::not((**a).clone()),
                Formula::not((**b).clone()),
            )),
            Formula::Implies(a, b) => {
                Formula::not(Formula::and((**a).clone(), Formula::not((**b).clone())))
            }
            Formula::Iff(a, b) => Formula::and(
                Formula::implies((**a).clone(), (**b).clone()),
                Formula::implies((**b).clone(), (**a).clone()),
            ),
            other => other.clone(),
        }
    }

    /// Fully unfolds derived connectives everywhere.
    pub fn expand_derived(&self) -> Formula {
        let b = |x: &Formula| Box::new(x.expand_derived());
        match self.expand_head() {
            Formula::Not(a) => Formula::Not(b(&a)),
            Formula::And(x, y) => Formula::And(b(&x), b(&y)),
            Formula::Kw(i, a) => Formula::Kw(i, b(&a)),
            Formula::K(i, a) => Formula::K(i, b(&a)),
            Formula::Announce(x, y) => Formula::Announce(b(&x), b(&y)),
            leaf => leaf,
        }
    }
}

fn implies_complexity(a: u64, b: u64) -> u64 {
    2 + a.max(1 + b)
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::render(self))
    }
}

/// Renders with minimal parenthesisation; `parse(&render(f)) == Ok(f)`.
pub fn render(f: &Formula) -> String {
    render::render(f)
}
