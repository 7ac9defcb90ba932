use crate::error::ParseError;

use super::lexer::{tokenize, Spanned, Tok};
use super::{Expr, Func};

/// Parses an expression.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    parse_expr_at(text, 1, 1)
}

/// Parses an expression embedded at a given position of a larger document,
/// so error positions refer to that document.
pub(crate) fn parse_expr_at(text: &str, line: usize, column: usize) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(text, line, column),
        pos: 0,
    };
    let e = p.given()?;
    p.expect(Tok::Eof, &["`|`", "`or`", "`and`", "end of input"])?;
    Ok(e)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

const PRIMARY: &[&str] = &["identifier", "`{`", "`(`", "`~`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let here = &self.toks[self.pos];
        ParseError {
            line: here.line,
            column: here.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: here.tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn given(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.or()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            let rhs = self.or()?;
            lhs = Expr::Given(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Expr::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.not()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.not()?;
            lhs = Expr::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn not(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Tilde {
            self.bump();
            return Ok(Expr::Not(Box::new(self.not()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                if let (Some(func), Tok::LParen) = (Func::from_name(&name), self.peek_at(1)) {
                    self.bump();
                    self.bump();
                    let lhs = self.given()?;
                    self.expect(Tok::Comma, &["`,`", "`|`", "`or`", "`and`"])?;
                    let rhs = self.given()?;
                    self.expect(Tok::RParen, &["`)`", "`|`", "`or`", "`and`"])?;
                    return Ok(Expr::Func(func, Box::new(lhs), Box::new(rhs)));
                }
                self.bump();
                Ok(Expr::EventRef(name))
            }
            Tok::LBrace => {
                self.bump();
                self.set_literal()
            }
            Tok::LParen => {
                self.bump();
                let e = self.given()?;
                self.expect(Tok::RParen, &["`)`", "`|`", "`or`", "`and`"])?;
                Ok(e)
            }
            _ => Err(self.error(PRIMARY)),
        }
    }

    fn set_literal(&mut self) -> Result<Expr, ParseError> {
        let mut atoms = Vec::new();
        if *self.peek() == Tok::RBrace {
            self.bump();
            return Ok(Expr::SetLiteral(atoms));
        }
        loop {
            match self.bump() {
                Tok::Ident(name) => atoms.push(name),
                _ => {
                    self.pos -= 1;
                    return Err(self.error(&["atom name"]));
                }
            }
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBrace => {
                    self.bump();
                    return Ok(Expr::SetLiteral(atoms));
                }
                _ => return Err(self.error(&["`,`", "`}`"])),
            }
        }
    }
}
