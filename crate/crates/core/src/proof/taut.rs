use std::collections::HashMap;

use thiserror::Error;

use crate::formula::Formula;

/// Most distinct Boolean letters [`is_bool_taut`] will truth-table.
pub const MAX_LETTERS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{found} distinct Boolean letters, above the limit of {MAX_LETTERS}")]
pub struct LetterBudget {
    pub found: usize,
}

enum Bool {
    Const(bool),
    Letter(usize),
    Not(Box<Bool>),
    And(Box<Bool>, Box<Bool>),
    Or(Box<Bool>, Box<Bool>),
    Implies(Box<Bool>, Box<Bool>),
    Iff(Box<Bool>, Box<Bool>),
}

fn abstract_formula(f: &Formula, letters: &mut HashMap<Formula, usize>) -> Bool {
    let mut rec = |g: &Formula| Box::new(abstract_formula(g, letters));
    match f {
        Formula::Top => Bool::Const(true),
        Formula::Bot => Bool::Const(false),
        Formula::Not(a) => Bool::Not(rec(a)),
        Formula::And(a, b) => {
            let a = rec(a);
            Bool::And(a, rec(b))
        }
        Formula::Or(a, b) => {
            let a = rec(a);
            Bool::Or(a, rec(b))
        }
        Formula::Implies(a, b) => {
            let a = rec(a);
            Bool::Implies(a, rec(b))
        }
        Formula::Iff(a, b) => {
            let a = rec(a);
            Bool::Iff(a, rec(b))
        }
        Formula::Prop(_) | Formula::Kw(..) | Formula::K(..) | Formula::Announce(..) => {
            let next = letters.len();
            Bool::Letter(*letters.entry(f.clone()).or_insert(next))
        }
    }
}

// Bit patterns of the six low letters within one 64-row word.
const LOW: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

fn eval(b: &Bool, chunk: u64) -> u64 {
    match b {
        Bool::Const(true) => !0,
        Bool::Const(false) => 0,
        Bool::Letter(k) if *k < 6 => LOW[*k],
        Bool::Letter(k) => {
            if chunk >> (k - 6) & 1 == 1 {
                !0
            } else {
                0
            }
        }
        Bool::Not(a) => !eval(a, chunk),
        Bool::And(a, c) => eval(a, chunk) & eval(c, chunk),
        Bool::Or(a, c) => eval(a, chunk) | eval(c, chunk),
        Bool::Implies(a, c) => !eval(a, chunk) | eval(c, chunk),
        Bool::Iff(a, c) => !(eval(a, chunk) ^ eval(c, chunk)),
    }
}

/// Whether `f` is a tautology once every proposition and every maximal
/// `Kw`/`K`/announcement subformula is read as a Boolean letter (equal
/// subformulas share a letter).
pub fn is_bool_taut(f: &Formula) -> Result<bool, LetterBudget> {
    let mut letters = HashMap::new();
    let b = abstract_formula(f, &mut letters);
    let n = letters.len();
    if n > MAX_LETTERS {
        return Err(LetterBudget { found: n });
    }
    let rows = 1u64 << n;
    // With fewer than six letters only the first `rows` bits are meaningful.
    let mask = if rows >= 64 { !0 } else { (1u64 << rows) - 1 };
    let chunks = if n <= 6 { 1 } else { 1u64 << (n - 6) };
    Ok((0..chunks).all(|c| eval(&b, c) & mask == mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn taut(s: &str) -> bool {
        is_bool_taut(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(taut("Kw[i]p -> Kw[i]p"));
        assert!(taut("p & q -> p"));
        assert!(!taut("Kw[i](r -> p) & Kw[i](~r -> p) -> Kw[i]p"));
        assert!(taut("top"));
        assert!(!taut("bot"));
        assert!(taut("~bot"));
        assert!(!taut("Kw[i]p -> Kw[i]~p"));
        assert!(taut("[p]q | ~[p]q"));
        assert!(taut("(p <-> q) <-> (q <-> p)"));
    }

    #[test]
    fn many_letters() {
        let names: Vec<String> = (0..20).map(|k| format!("p{k}")).collect();
        let conj = Formula::conj(names.iter().map(|n| Formula::prop(n)));
        let disj = Formula::disj(names.iter().map(|n| Formula::prop(n)));
        assert!(is_bool_taut(&Formula::implies(conj.clone(), disj.clone())).unwrap());
        assert!(!is_bool_taut(&Formula::implies(disj, conj)).unwrap());
        let big = Formula::conj((0..25).map(|k| Formula::prop(&format!("q{k}"))));
        assert_eq!(is_bool_taut(&big), Err(LetterBudget { found: 25 }));
    }

    /// Oracle: direct row-by-row evaluation.
    fn slow(f: &Formula) -> bool {
        let mut letters = HashMap::new();
        let b = abstract_formula(f, &mut letters);
        fn ev(b: &Bool, row: u64) -> bool {
            match b {
                Bool::Const(c) => *c,
                Bool::Letter(k) => row >> k & 1 == 1,
                Bool::Not(a) => !ev(a, row),
                Bool::And(a, c) => ev(a, row) && ev(c, row),
                Bool::Or(a, c) => ev(a, row) || ev(c, row),
                Bool::Implies(a, c) => !ev(a, row) || ev(c, row),
                Bool::Iff(a, c) => ev(a, row) == ev(c, row),
            }
        }
        (0..1u64 << letters.len()).all(|r| ev(&b, r))
    }

    #[test]
    fn agrees_with_row_evaluation() {
        use crate::formula::{enumerate_formulas, LanguageTag};
        let vars = ["p", "q", "r", "s", "t", "u", "v"];
        for f in enumerate_formulas(&vars, &["i"], LanguageTag::PLKw, 4) {
            let g = Formula::or(f.clone(), Formula::and(Formula::prop("v"), Formula::prop("u")));
            assert_eq!(is_bool_taut(&f).unwrap(), slow(&f), "{f}");
            assert_eq!(is_bool_taut(&g).unwrap(), slow(&g), "{g}");
        }
    }
}
