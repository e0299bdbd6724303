//! Reading input files: header extraction and kind detection.

use std::path::{Path, PathBuf};

use walkit::valuation::StructureKind;
use walkit::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Buchi,
    Muller,
    Triple,
    Formula,
}

/// A file with its `structure:`, `one:` and (for formulas) `alphabet:` lines
/// taken out. Removed lines are blanked so positions in errors still match.
#[derive(Clone, Debug)]
pub struct Doc {
    pub path: PathBuf,
    pub body: String,
    pub kind: Kind,
    pub structure: Option<StructureKind>,
    pub one: Option<String>,
    pub alphabet: Option<Vec<String>>,
}

fn key_of(line: &str) -> Option<&str> {
    let body = line.split(';').next().unwrap_or("").trim();
    let (k, _) = body.split_once(':')?;
    let k = k.trim();
    k.chars().all(|c| c.is_ascii_lowercase()).then_some(k)
}

fn value_of(line: &str) -> &str {
    let body = line.split(';').next().unwrap_or("");
    body.split_once(':').map_or("", |(_, v)| v.trim())
}

pub fn read(path: &Path) -> Result<Doc, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_doc(path, &text)
}

pub fn parse_doc(path: &Path, text: &str) -> Result<Doc, Error> {
    let keys: Vec<Option<&str>> = text.lines().map(key_of).collect();
    let has = |k: &str| keys.contains(&Some(k));
    let kind = if has("map") || has("sigma") {
        Kind::Triple
    } else if has("accsets") {
        Kind::Muller
    } else if ["trans", "initial", "states", "accepting"].iter().any(|k| has(k)) {
        Kind::Buchi
    } else {
        Kind::Formula
    };
    let mut doc = Doc { path: path.to_path_buf(), body: String::new(), kind, structure: None, one: None, alphabet: None };
    for (n, line) in text.lines().enumerate() {
        match keys[n] {
            Some("structure") => {
                let v = value_of(line);
                doc.structure = Some(v.parse().map_err(|e: Error| Error::Parse { line: n + 1, col: 1, msg: e.to_string() })?);
                doc.body.push('\n');
            }
            Some("one") => {
                doc.one = Some(value_of(line).to_string());
                doc.body.push('\n');
            }
            Some("alphabet") if kind == Kind::Formula => {
                doc.alphabet.get_or_insert_with(Vec::new).extend(value_of(line).split_whitespace().map(str::to_string));
                doc.body.push('\n');
            }
            _ => {
                doc.body.push_str(line);
                doc.body.push('\n');
            }
        }
    }
    Ok(doc)
}

/// The flag wins over the file; a disagreement is reported on stderr.
pub fn resolve<T: PartialEq + std::fmt::Display + Clone>(what: &str, flag: Option<&T>, header: Option<&T>, path: &Path) -> Option<T> {
    match (flag, header) {
        (Some(f), Some(h)) => {
            if f != h {
                eprintln!("warning: --{what} {f} overrides `{what}: {h}` in {}", path.display());
            }
            Some(f.clone())
        }
        (Some(f), None) => Some(f.clone()),
        (None, h) => h.cloned(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_and_headers() {
        let d = parse_doc(Path::new("f"), "structure: disc\none: (0,1)\nalphabet: a b\nmeet x. P_a(x)\n").unwrap();
        assert_eq!(d.kind, Kind::Formula);
        assert_eq!(d.structure, Some(StructureKind::Disc));
        assert_eq!(d.one.as_deref(), Some("(0,1)"));
        assert_eq!(d.alphabet, Some(vec!["a".to_string(), "b".to_string()]));
        assert_eq!(d.body, "\n\n\nmeet x. P_a(x)\n");
        let d = parse_doc(Path::new("f"), "alphabet: a\ninitial: p ; start\naccepting: p\ntrans: p a p\n").unwrap();
        assert_eq!(d.kind, Kind::Buchi);
        assert!(d.body.starts_with("alphabet: a"));
        let d = parse_doc(Path::new("f"), "accsets: {p}\ntrans: p a p\n").unwrap();
        assert_eq!(d.kind, Kind::Muller);
        assert!(parse_doc(Path::new("f"), "structure: nope\n").is_err());
    }
}
