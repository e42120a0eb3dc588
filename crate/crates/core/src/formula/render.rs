use super::Formula;

// Binding strength; higher binds tighter.
const IFF: u8 = 1;
const IMP: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const UNARY: u8 = 5;

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Iff(..) => IFF,
        Formula::Implies(..) => IMP,
        Formula::Or(..) => OR,
        Formula::And(..) => AND,
        _ => UNARY,
    }
}

pub(super) fn render(f: &Formula) -> String {
    let mut out = String::new();
    write(f, &mut out);
    out
}

fn write_at(f: &Formula, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
        write(f, out);
        out.push(')');
    } else {
        write(f, out);
    }
}

fn write_binary(op: &str, lvl: u8, right_assoc: bool, a: &Formula, b: &Formula, out: &mut String) {
    let (la, lb) = (level(a), level(b));
    let (pa, pb) = if right_assoc {
        (la <= lvl, lb < lvl)
    } else {
        (la < lvl, lb <= lvl)
    };
    write_at(a, pa, out);
    out.push(' ');
    out.push_str(op);
    out.push(' ');
    write_at(b, pb, out);
}

fn write(f: &Formula, out: &mut String) {
    match f {
        Formula::Top => out.push_str("top"),
        Formula::Bot => out.push_str("bot"),
        Formula::Prop(p) => out.push_str(p),
        Formula::Not(a) => {
            out.push('~');
            write_at(a, level(a) < UNARY, out);
        }
        Formula::Kw(i, a) => {
            out.push_str("Kw[");
            out.push_str(i);
            out.push(']');
            write_at(a, level(a) < UNARY, out);
        }
        Formula::K(i, a) => {
            out.push_str("K[");
            out.push_str(i);
            out.push(']');
            write_at(a, level(a) < UNARY, out);
        }
        Formula::Announce(a, b) => {
            out.push('[');
            write(a, out);
            out.push(']');
            write_at(b, level(b) < UNARY, out);
        }
        Formula::And(a, b) => write_binary("&", AND, false, a, b, out),
        Formula::Or(a, b) => write_binary("|", OR, false, a, b, out),
        Formula::Implies(a, b) => write_binary("->", IMP, true, a, b, out),
        Formula::Iff(a, b) => write_binary("<->", IFF, true, a, b, out),
    }
}
