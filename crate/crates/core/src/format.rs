//! The line-oriented automaton file format.
//!
//! ```text
//! ; comments start with a semicolon
//! structure: ratio          ; weighted files only
//! alphabet: a b
//! states: q0 q1
//! initial: q0
//! accepting: q1             ; or, for Muller: accsets: {q0 q1} {q1}
//! trans: q0 a q1 (1,2)      ; weight suffix only in weighted files
//! ```
//!
//! Sections may repeat and accumulate. Undeclared states and letters are
//! added in order of first use, unless an `alphabet:` line is present, in
//! which case every transition letter must be declared.

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub(crate) struct RawTrans {
    pub from: String,
    pub letter: String,
    pub to: String,
    pub weight: Option<String>,
    pub line: usize,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct RawAutomaton {
    /// Free-form `key: value` lines other than the automaton sections.
    pub headers: Vec<(String, String, usize)>,
    pub alphabet: Option<Vec<String>>,
    pub states: Vec<String>,
    pub initial: Vec<String>,
    pub accepting: Option<Vec<String>>,
    pub accsets: Option<Vec<Vec<String>>>,
    pub trans: Vec<RawTrans>,
}

impl RawAutomaton {
    pub fn header(&self, key: &str) -> Option<&str> {
        self.headers.iter().rev().find(|(k, _, _)| k == key).map(|(_, v, _)| v.as_str())
    }

    pub fn header_line(&self, key: &str) -> usize {
        self.headers.iter().rev().find(|(k, _, _)| k == key).map_or(1, |(_, _, l)| *l)
    }
}

fn check_name(name: &str, line: usize, col: usize) -> Result<()> {
    if name.is_empty() || name.contains(['{', '}', ';']) {
        return Err(Error::parse(line, col, format!("bad name `{name}`")));
    }
    Ok(())
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find(';') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses the sections; `extra_keys` lists header keys the caller accepts.
pub(crate) fn parse_raw(text: &str, extra_keys: &[&str]) -> Result<RawAutomaton> {
    let mut raw = RawAutomaton::default();
    for (n, line) in text.lines().enumerate() {
        let ln = n + 1;
        let body = strip_comment(line).trim();
        if body.is_empty() {
            continue;
        }
        let Some((key, rest)) = body.split_once(':') else {
            return Err(Error::parse(ln, 1, format!("expected `key: value`, got `{body}`")));
        };
        let key = key.trim();
        let rest = rest.trim();
        let col = line.find(rest).map_or(1, |c| c + 1);
        let words = || rest.split_whitespace().map(str::to_string).collect::<Vec<_>>();
        match key {
            "alphabet" => {
                for w in words() {
                    if !crate::omega::is_letter_ident(&w) {
                        return Err(Error::parse(ln, col, format!("bad letter `{w}`")));
                    }
                    raw.alphabet.get_or_insert_with(Vec::new).push(w);
                }
                raw.alphabet.get_or_insert_with(Vec::new);
            }
            "states" => {
                for w in words() {
                    check_name(&w, ln, col)?;
                    raw.states.push(w);
                }
            }
            "initial" => raw.initial.extend(words()),
            "accepting" => raw.accepting.get_or_insert_with(Vec::new).extend(words()),
            "accsets" => {
                let sets = raw.accsets.get_or_insert_with(Vec::new);
                let mut s = rest;
                loop {
                    s = s.trim_start();
                    if s.is_empty() {
                        break;
                    }
                    let Some(inner) = s.strip_prefix('{') else {
                        return Err(Error::parse(ln, col, "accepting sets are written `{q0 q1}`"));
                    };
                    let Some(end) = inner.find('}') else {
                        return Err(Error::parse(ln, col, "unclosed `{`"));
                    };
                    sets.push(inner[..end].split_whitespace().map(str::to_string).collect());
                    s = &inner[end + 1..];
                }
            }
            "trans" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() < 3 {
                    return Err(Error::parse(ln, col, "transitions are written `trans: from letter to [weight]`"));
                }
                let (from, letter, to) = (toks[0], toks[1], toks[2]);
                let weight = (toks.len() > 3).then(|| toks[3..].join(" "));
                check_name(from, ln, col)?;
                check_name(to, ln, col)?;
                if !crate::omega::is_letter_ident(letter) {
                    return Err(Error::parse(ln, col, format!("bad letter `{letter}`")));
                }
                raw.trans.push(RawTrans { from: from.into(), letter: letter.into(), to: to.into(), weight, line: ln });
            }
            k if extra_keys.contains(&k) => raw.headers.push((k.to_string(), rest.to_string(), ln)),
            k => return Err(Error::parse(ln, 1, format!("unknown section `{k}`"))),
        }
    }
    Ok(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections() {
        let raw = parse_raw(
            "; demo\nstructure: ratio\nalphabet: a b\nstates: p q\ninitial: p\naccsets: {p q} {}\ntrans: p a q (1, 2)\ntrans: q b p\n",
            &["structure"],
        )
        .unwrap();
        assert_eq!(raw.header("structure"), Some("ratio"));
        assert_eq!(raw.accsets.as_ref().unwrap().len(), 2);
        assert!(raw.accsets.as_ref().unwrap()[1].is_empty());
        assert_eq!(raw.trans[0].weight.as_deref(), Some("(1, 2)"));
        assert_eq!(raw.trans[1].weight, None);
    }

    #[test]
    fn errors() {
        assert!(parse_raw("trans: p a", &[]).is_err());
        assert!(parse_raw("bogus: 1", &[]).is_err());
        assert!(parse_raw("accsets: p", &[]).is_err());
        assert!(matches!(parse_raw("\n\nnope", &[]), Err(Error::Parse { line: 3, .. })));
    }
}
