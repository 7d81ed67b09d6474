//! Propositional tautology recognition.
//!
//! Maximal subformulas whose main connective is not truth-functional
//! (atoms, identities, `E`, conditionals, quantifiers) are treated as
//! propositional letters, identified up to α-equivalence. The truth table
//! is evaluated 64 rows at a time.

use crate::syntax::Formula;

/// Letters beyond this count make the table too large to enumerate.
pub const MAX_LETTERS: usize = 24;

enum Node {
    False,
    Letter(usize),
    Not(Box<Node>),
    Implies(Box<Node>, Box<Node>),
}

fn compile<'f>(f: &'f Formula, letters: &mut Vec<&'f Formula>) -> Node {
    match f {
        Formula::Bot => Node::False,
        Formula::Not(a) => Node::Not(Box::new(compile(a, letters))),
        Formula::Implies(a, b) => Node::Implies(Box::new(compile(a, letters)), Box::new(compile(b, letters))),
        other => {
            let i = match letters.iter().position(|l| l.alpha_eq(other)) {
                Some(i) => i,
                None => {
                    letters.push(other);
                    letters.len() - 1
                }
            };
            Node::Letter(i)
        }
    }
}

/// Column of truth values for letter `i` over rows `base .. base + 64`.
fn letter_column(i: usize, base: u64) -> u64 {
    if i < 6 {
        const COLS: [u64; 6] = [
            0xAAAA_AAAA_AAAA_AAAA,
            0xCCCC_CCCC_CCCC_CCCC,
            0xF0F0_F0F0_F0F0_F0F0,
            0xFF00_FF00_FF00_FF00,
            0xFFFF_0000_FFFF_0000,
            0xFFFF_FFFF_0000_0000,
        ];
        COLS[i]
    } else if base >> i & 1 == 1 {
        u64::MAX
    } else {
        0
    }
}

fn eval(n: &Node, base: u64) -> u64 {
    match n {
        Node::False => 0,
        Node::Letter(i) => letter_column(*i, base),
        Node::Not(a) => !eval(a, base),
        Node::Implies(a, b) => !eval(a, base) | eval(b, base),
    }
}

/// `Some(true)` for a tautology, `Some(false)` otherwise, `None` when the
/// formula has more than [`MAX_LETTERS`] letters.
pub fn is_tautology(f: &Formula) -> Option<bool> {
    let mut letters = Vec::new();
    let node = compile(f, &mut letters);
    let k = letters.len();
    if k > MAX_LETTERS {
        return None;
    }
    let rows = 1u64 << k;
    let mask = if rows >= 64 { u64::MAX } else { (1u64 << rows) - 1 };
    let mut base = 0;
    while base < rows {
        if eval(&node, base) & mask != mask {
            return Some(false);
        }
        base += 64;
    }
    Some(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser_io::parse_formula;
    use crate::syntax::Language;

    fn taut(s: &str) -> Option<bool> {
        is_tautology(&parse_formula(s, Language::Plain).unwrap())
    }

    #[test]
    fn classic_tautologies() {
        assert_eq!(taut("A | ~A"), Some(true));
        assert_eq!(taut("(A -> B) -> (~B -> ~A)"), Some(true));
        assert_eq!(taut("bot -> F(x)"), Some(true));
        assert_eq!(taut("A -> B"), Some(false));
        assert_eq!(taut("(F(x) > G(x)) | ~(F(x) > G(x))"), Some(true));
        // alpha-variants are one letter
        assert_eq!(taut("(forall x. F(x)) -> forall y. F(y)"), Some(true));
        assert_eq!(taut("(forall x. F(x)) -> F(x)"), Some(false));
    }

    #[test]
    fn many_letters() {
        // A0 & .. & A9 -> A9 spans several 64-row blocks
        let conj: Vec<String> = (0..10).map(|i| format!("A{i}")).collect();
        assert_eq!(taut(&format!("{} -> A9", conj.join(" & "))), Some(true));
        assert_eq!(taut(&format!("{} -> A9", conj[..9].join(" | "))), Some(false));
    }
}
