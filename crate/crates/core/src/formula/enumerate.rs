use super::{Formula, LanguageTag};

struct Connectives {
    kw: bool,
    k: bool,
    announce: bool,
}

fn connectives(lang: LanguageTag) -> Connectives {
    use LanguageTag::*;
    Connectives {
        kw: matches!(lang, PLKw | PLKwK | PLKwA | PLKwAK),
        k: matches!(lang, EL | PLKwK | PLKwAK),
        announce: matches!(lang, PLKwA | PLKwAK),
    }
}

/// All formulas of `lang` with at most `max_size` AST nodes over the core
/// connectives `⊤ p ¬ ∧` plus the language's modalities (`Kw`, `K`,
/// announcements). Derived connectives are not generated. Formulas come in
/// increasing size, each exactly once.
pub fn enumerate_formulas(
    vars: &[&str],
    agents: &[&str],
    lang: LanguageTag,
    max_size: usize,
) -> impl Iterator<Item = Formula> {
    let conn = connectives(lang);
    let mut by_size: Vec<Vec<Formula>> = vec![Vec::new()];
    for size in 1..=max_size {
        let mut layer = Vec::new();
        if size == 1 {
            layer.push(Formula::Top);
            layer.extend(vars.iter().map(|v| Formula::prop(v)));
        } else {
            for f in &by_size[size - 1] {
                layer.push(Formula::not(f.clone()));
                for a in agents {
                    if conn.kw {
                        layer.push(Formula::kw(a, f.clone()));
                    }
                    if conn.k {
                        layer.push(Formula::k(a, f.clone()));
                    }
                }
            }
            for left in 1..size - 1 {
                let right = size - 1 - left;
                for a in &by_size[left] {
                    for b in &by_size[right] {
                        layer.push(Formula::and(a.clone(), b.clone()));
                        if conn.announce {
                            layer.push(Formula::announce(a.clone(), b.clone()));
                        }
                    }
                }
            }
        }
        by_size.push(layer);
    }
    by_size.into_iter().flatten()
}

/// Number of formulas [`enumerate_formulas`] yields, without building them.
pub fn count_formulas(vars: usize, agents: usize, lang: LanguageTag, max_size: usize) -> u128 {
    let conn = connectives(lang);
    let unary = 1 + agents as u128 * (conn.kw as u128 + conn.k as u128);
    let binary = 1 + conn.announce as u128;
    let mut n = vec![0u128; max_size + 1];
    for size in 1..=max_size {
        n[size] = if size == 1 {
            vars as u128 + 1
        } else {
            unary * n[size - 1]
                + binary * (1..size - 1).map(|l| n[l] * n[size - 1 - l]).sum::<u128>()
        };
    }
    n.iter().sum()
}
