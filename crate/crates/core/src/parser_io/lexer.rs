use super::{ParseError, SourceSpan};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Not,
    And,
    Or,
    Implies,
    Cond,
    Iff,
    Equals,
    NotEquals,
    Forall,
    Exists,
    Box,
    Dia,
    Top,
    Bot,
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Cond => "`>`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Equals => "`=`".into(),
            Tok::NotEquals => "`!=`".into(),
            Tok::Forall => "`forall`".into(),
            Tok::Exists => "`exists`".into(),
            Tok::Box => "`box`".into(),
            Tok::Dia => "`dia`".into(),
            Tok::Top => "`top`".into(),
            Tok::Bot => "`bot`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

/// Splits `text` into tokens. Offsets are character offsets.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let single = |tok: Tok| Some((tok, 1));
        let fixed = match c {
            '(' => single(Tok::LParen),
            ')' => single(Tok::RParen),
            ',' => single(Tok::Comma),
            '.' => single(Tok::Dot),
            '~' | '¬' => single(Tok::Not),
            '&' | '∧' => single(Tok::And),
            '|' | '∨' => single(Tok::Or),
            '⊃' | '→' => single(Tok::Implies),
            '≡' | '↔' => single(Tok::Iff),
            '=' => single(Tok::Equals),
            '≠' => single(Tok::NotEquals),
            '∀' => single(Tok::Forall),
            '∃' => single(Tok::Exists),
            '□' => single(Tok::Box),
            '◇' => single(Tok::Dia),
            '⊤' => single(Tok::Top),
            '⊥' => single(Tok::Bot),
            '>' => single(Tok::Cond),
            '-' if chars.get(i + 1) == Some(&'>') => Some((Tok::Implies, 2)),
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => Some((Tok::Iff, 3)),
            '!' if chars.get(i + 1) == Some(&'=') => Some((Tok::NotEquals, 2)),
            _ => None,
        };
        if let Some((tok, len)) = fixed {
            i += len;
            out.push(Token { tok, span: SourceSpan { start, end: i } });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let tok = match word.as_str() {
                "forall" => Tok::Forall,
                "exists" => Tok::Exists,
                "box" => Tok::Box,
                "dia" => Tok::Dia,
                "top" => Tok::Top,
                "bot" => Tok::Bot,
                _ => Tok::Ident(word),
            };
            out.push(Token { tok, span: SourceSpan { start, end: i } });
            continue;
        }
        return Err(ParseError {
            span: SourceSpan { start, end: start + 1 },
            message: format!("unexpected character `{c}`; expected a connective, parenthesis or identifier"),
        });
    }
    out.push(Token { tok: Tok::End, span: SourceSpan { start: chars.len(), end: chars.len() } });
    Ok(out)
}
