use std::fmt;

use super::parse::Symbols;
use crate::syntax::{Formula, Var};

const IFF: u8 = 1;
const IMP: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const UNARY: u8 = 5;
const ATOM: u8 = 6;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Implies,
    Cond,
    Other,
}

struct Out {
    text: String,
    level: u8,
    kind: Kind,
    /// Ends in an unparenthesised quantifier whose body would swallow
    /// anything printed after it.
    open: bool,
}

impl Out {
    fn leaf(text: String) -> Out {
        Out { text, level: ATOM, kind: Kind::Other, open: false }
    }
}

/// Prints with the default variable names `x0, x1, ...`.
pub fn print_formula(f: &Formula) -> String {
    render(f, &|v| v.to_string()).text
}

/// Prints using the source names recorded in `symbols`.
pub fn print_formula_with(f: &Formula, symbols: &Symbols) -> String {
    render(f, &|v| symbols.var_name(v)).text
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_formula(self))
    }
}

/// Text of `o` placed where precedence at least `min` is required. `last`
/// says whether nothing follows it in the enclosing text.
fn place(o: Out, min: u8, last: bool) -> (String, bool) {
    if o.level < min || (!last && o.open) {
        (format!("({})", o.text), false)
    } else {
        (o.text, o.open)
    }
}

fn binary(l: Out, lmin: u8, op: &str, r: Out, rmin: u8, level: u8, kind: Kind) -> Out {
    let (lt, _) = place(l, lmin, false);
    let (rt, open) = place(r, rmin, true);
    Out { text: format!("{lt} {op} {rt}"), level, kind, open }
}

fn prefix(op: &str, a: Out) -> Out {
    let (t, open) = place(a, UNARY, true);
    Out { text: format!("{op}{t}"), level: UNARY, kind: Kind::Other, open }
}

fn quantifier(q: &str, x: Var, body: Out, name: &dyn Fn(Var) -> String) -> Out {
    Out { text: format!("{q} {}. {}", name(x), body.text), level: UNARY, kind: Kind::Other, open: true }
}

fn render(f: &Formula, name: &dyn Fn(Var) -> String) -> Out {
    if f.is_top() {
        return Out::leaf("top".into());
    }
    if let Some((a, b)) = f.as_iff() {
        return binary(render(a, name), IFF, "<->", render(b, name), IMP, IFF, Kind::Other);
    }
    match f {
        Formula::Bot => Out::leaf("bot".into()),
        Formula::Atom(p, args) if args.is_empty() => Out::leaf(p.name().to_string()),
        Formula::Atom(p, args) => {
            let args: Vec<String> = args.iter().map(|v| name(*v)).collect();
            Out::leaf(format!("{}({})", p.name(), args.join(", ")))
        }
        Formula::Eq(a, b) => Out { text: format!("{} = {}", name(*a), name(*b)), level: ATOM, kind: Kind::Other, open: false },
        Formula::Existence(a) => Out::leaf(format!("E({})", name(*a))),
        Formula::Not(inner) => {
            if let Some((x, body)) = f.as_exists() {
                return quantifier("exists", x, render(body, name), name);
            }
            if let Some(a) = f.as_possibly() {
                return prefix("dia ", render(a, name));
            }
            if let Some((a, b)) = f.as_and() {
                return binary(render(a, name), AND, "&", render(b, name), UNARY, AND, Kind::Other);
            }
            if let Formula::Eq(a, b) = &**inner {
                return Out { text: format!("{} != {}", name(*a), name(*b)), level: ATOM, kind: Kind::Other, open: false };
            }
            prefix("~", render(inner, name))
        }
        Formula::Implies(a, b) => {
            if let Some((a, b)) = f.as_or() {
                return binary(render(a, name), OR, "|", render(b, name), AND, OR, Kind::Other);
            }
            let r = render(b, name);
            // `a -> b -> c` reads as `a -> (b -> c)`, so a plain implication
            // may sit on the right unparenthesised.
            let rmin = if r.kind == Kind::Implies { IMP } else { OR };
            binary(render(a, name), OR, "->", r, rmin, IMP, Kind::Implies)
        }
        Formula::Cond(a, b) => {
            if let Some(a) = f.as_necessarily() {
                return prefix("box ", render(a, name));
            }
            binary(render(a, name), OR, ">", render(b, name), OR, IMP, Kind::Cond)
        }
        Formula::Forall(x, body) => quantifier("forall", *x, render(body, name), name),
    }
}
