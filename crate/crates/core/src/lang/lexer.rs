use std::fmt;

/// Characters that end an identifier.
const PUNCT: &[char] = &['{', '}', ',', '|', '(', ')', '~', '#', '='];

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    And,
    Or,
    Tilde,
    Pipe,
    Comma,
    LParen,
    RParen,
    LBrace,
    RBrace,
    /// Any other punctuation that has no meaning inside an expression.
    Stray(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::And => f.write_str("`and`"),
            Tok::Or => f.write_str("`or`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Pipe => f.write_str("`|`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Stray(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

/// Splits `text` into tokens. Positions are 1-based; `line` and `column`
/// give the position of the first character of `text`.
pub(crate) fn tokenize(text: &str, line: usize, column: usize) -> Vec<Spanned> {
    let mut out = Vec::new();
    let (mut line, mut col) = (line, column);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        let start = col;
        if PUNCT.contains(&c) {
            chars.next();
            col += 1;
            let tok = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                ',' => Tok::Comma,
                '|' => Tok::Pipe,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '~' => Tok::Tilde,
                other => Tok::Stray(other),
            };
            out.push(Spanned {
                tok,
                line,
                column: start,
            });
            continue;
        }
        let mut word = String::new();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() || PUNCT.contains(&c) {
                break;
            }
            word.push(c);
            chars.next();
            col += 1;
        }
        let tok = match word.as_str() {
            "and" => Tok::And,
            "or" => Tok::Or,
            _ => Tok::Ident(word),
        };
        out.push(Spanned {
            tok,
            line,
            column: start,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    out
}
