//! Tokenizer shared by the MSO and WAL parsers.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    LParen,
    RParen,
    Dot,
    /// `&`
    And,
    /// `|`
    Or,
    /// `!`
    Bang,
    /// `->`
    Arrow,
    /// `<->`
    Iff,
    Eq,
    Neq,
    Lt,
    /// `/\`
    Meet,
    /// `=>`
    Implies,
    /// `|-> literal`, with the literal kept raw.
    MapsTo(String),
    Eof,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

fn ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '#'
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize, n: usize, chars: &[char]| {
        for _ in 0..n {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col, 1, &chars);
            continue;
        }
        if c == ';' {
            while i < chars.len() && chars[i] != '\n' {
                advance(&mut i, &mut line, &mut col, 1, &chars);
            }
            continue;
        }
        let at = |s: &str| chars[i..].iter().take(s.chars().count()).copied().eq(s.chars());
        let (tl, tc) = (line, col);
        let mut push = |tok: Tok| out.push(Token { tok, line: tl, col: tc });
        if ident_char(c) {
            let start = i;
            while i < chars.len() && ident_char(chars[i]) {
                i += 1;
                col += 1;
            }
            push(Tok::Ident(chars[start..i].iter().collect()));
            continue;
        }
        if at("|->") {
            advance(&mut i, &mut line, &mut col, 3, &chars);
            while i < chars.len() && chars[i].is_whitespace() {
                advance(&mut i, &mut line, &mut col, 1, &chars);
            }
            let start = i;
            if i < chars.len() && chars[i] == '(' {
                let mut depth = 0;
                while i < chars.len() {
                    match chars[i] {
                        '(' => depth += 1,
                        ')' => depth -= 1,
                        _ => {}
                    }
                    advance(&mut i, &mut line, &mut col, 1, &chars);
                    if depth == 0 {
                        break;
                    }
                }
                if depth != 0 {
                    return Err(Error::parse(tl, tc, "unclosed weight literal"));
                }
            } else {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || "-+./".contains(chars[i])) {
                    advance(&mut i, &mut line, &mut col, 1, &chars);
                }
            }
            if start == i {
                return Err(Error::parse(tl, tc, "expected a weight literal after `|->`"));
            }
            push(Tok::MapsTo(chars[start..i].iter().collect()));
            continue;
        }
        let (tok, len) = if at("<->") {
            (Tok::Iff, 3)
        } else if at("->") {
            (Tok::Arrow, 2)
        } else if at("=>") {
            (Tok::Implies, 2)
        } else if at("/\\") {
            (Tok::Meet, 2)
        } else if at("!=") {
            (Tok::Neq, 2)
        } else {
            let t = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '.' => Tok::Dot,
                '&' => Tok::And,
                '|' => Tok::Or,
                '!' => Tok::Bang,
                '=' => Tok::Eq,
                '<' => Tok::Lt,
                '$' => return Err(Error::parse(tl, tc, "`$` is reserved for generated variables")),
                _ => return Err(Error::parse(tl, tc, format!("unexpected character `{c}`"))),
            };
            (t, 1)
        };
        push(tok);
        advance(&mut i, &mut line, &mut col, len, &chars);
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

/// Cursor over a token list.
pub(crate) struct Cursor {
    toks: Vec<Token>,
    pos: usize,
}

impl Cursor {
    pub fn new(text: &str) -> Result<Cursor> {
        Ok(Cursor { toks: tokenize(text)?, pos: 0 })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].tok
    }

    pub fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.next();
            true
        } else {
            false
        }
    }

    /// Line and column of the next token.
    pub fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.col)
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        let t = &self.toks[self.pos];
        Error::parse(t.line, t.col, msg)
    }

    pub fn expect(&mut self, t: &Tok, what: &str) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}, found {}", describe(self.peek()))))
        }
    }

    pub fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            t => Err(self.error(format!("expected {what}, found {}", describe(&t)))),
        }
    }

    pub fn finish(&self) -> Result<()> {
        match self.peek() {
            Tok::Eof => Ok(()),
            t => Err(self.error(format!("unexpected {}", describe(t)))),
        }
    }
}

pub(crate) fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Dot => "`.`".into(),
        Tok::And => "`&`".into(),
        Tok::Or => "`|`".into(),
        Tok::Bang => "`!`".into(),
        Tok::Arrow => "`->`".into(),
        Tok::Iff => "`<->`".into(),
        Tok::Eq => "`=`".into(),
        Tok::Neq => "`!=`".into(),
        Tok::Lt => "`<`".into(),
        Tok::Meet => "`/\\`".into(),
        Tok::Implies => "`=>`".into(),
        Tok::MapsTo(w) => format!("`|-> {w}`"),
        Tok::Eof => "end of input".into(),
    }
}

/// `P_a` names the letter predicate for `a`.
pub(crate) fn letter_predicate(ident: &str) -> Option<&str> {
    ident.strip_prefix("P_").filter(|l| !l.is_empty())
}

pub(crate) fn is_variable(ident: &str) -> bool {
    ident.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) && ident.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        let t: Vec<Tok> = tokenize("meet x. P_a(x) => x |-> (1, 2) /\\ !X(x)").unwrap().into_iter().map(|t| t.tok).collect();
        assert_eq!(
            t,
            vec![
                Tok::Ident("meet".into()),
                Tok::Ident("x".into()),
                Tok::Dot,
                Tok::Ident("P_a".into()),
                Tok::LParen,
                Tok::Ident("x".into()),
                Tok::RParen,
                Tok::Implies,
                Tok::Ident("x".into()),
                Tok::MapsTo("(1, 2)".into()),
                Tok::Meet,
                Tok::Bang,
                Tok::Ident("X".into()),
                Tok::LParen,
                Tok::Ident("x".into()),
                Tok::RParen,
                Tok::Eof
            ]
        );
    }

    #[test]
    fn positions_and_errors() {
        let t = tokenize("x\n  < y").unwrap();
        assert_eq!((t[1].line, t[1].col), (2, 3));
        assert!(matches!(tokenize("x < $y"), Err(Error::Parse { line: 1, col: 5, .. })));
        assert!(tokenize("x |-> (1,2").is_err());
    }
}
