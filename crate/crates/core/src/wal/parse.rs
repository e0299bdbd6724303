use super::{Ewal, Wal};
use crate::error::{Error, Result};
use crate::mso::parse::is_keyword;
use crate::mso::Var;
use crate::syntax::{describe, is_variable, letter_predicate, Cursor, Tok};
use crate::valuation::ValuationStructure;

/// Parses a WAL formula; weight literals are read by `structure`.
///
/// ```text
/// phi ::= phi => phi | phi /\ phi | !phi | meet v. phi | (phi)
///       | true | false | P_a(x) | X(x) | x = y | x != y | x < y | x |-> m
///       | phi <-> phi | phi -> phi | phi '|' phi | phi & phi
///       | forall v. phi | exists v. phi
/// ```
///
/// Loosest first: `=>`, `<->`, `->`, `|`, then `/\` and `&` (both are the
/// merge). `=>` and `->` are right associative. `!phi` is `phi => false`,
/// `forall` is `meet`. The remaining MSO connectives are read through the
/// MSO embedding and need assignment-free operands.
pub fn parse_wal<S: ValuationStructure>(text: &str, structure: &S) -> Result<Wal<S::Weight>> {
    let mut c = Cursor::new(text)?;
    let f = imp(&mut c, structure)?;
    c.finish()?;
    Ok(f)
}

/// Parses `join v1. … join vk. phi`.
pub fn parse_ewal<S: ValuationStructure>(text: &str, structure: &S) -> Result<Ewal<S::Weight>> {
    let mut c = Cursor::new(text)?;
    let mut prefix = Vec::new();
    while matches!(c.peek(), Tok::Ident(k) if k == "join") {
        c.next();
        let (line, col) = c.here();
        let v = variable(&mut c)?;
        if prefix.contains(&v) {
            return Err(Error::parse(line, col, format!("`join {v}` appears twice in the prefix")));
        }
        prefix.push(v);
        c.expect(&Tok::Dot, "`.`")?;
    }
    let body = imp(&mut c, structure)?;
    c.finish()?;
    Ewal::new(prefix, body)
}

fn imp<S: ValuationStructure>(c: &mut Cursor, s: &S) -> Result<Wal<S::Weight>> {
    let f = iff(c, s)?;
    if c.eat(&Tok::Implies) {
        return Ok(Wal::implies(f, imp(c, s)?));
    }
    Ok(f)
}

/// Rejects an operand of an MSO-only connective that assigns weights.
fn plain<W: Clone + Ord>(c: &Cursor, f: Wal<W>, op: &str) -> Result<Wal<W>> {
    if f.has_assignment() {
        return Err(c.error(format!("`{op}` needs operands without `|->`")));
    }
    Ok(f)
}

fn iff<S: ValuationStructure>(c: &mut Cursor, s: &S) -> Result<Wal<S::Weight>> {
    let mut f = arrow(c, s)?;
    while c.eat(&Tok::Iff) {
        let a = plain(c, f, "<->")?;
        let b = arrow(c, s)?;
        let b = plain(c, b, "<->")?;
        f = Wal::meet(Wal::implies(a.clone(), b.clone()), Wal::implies(b, a));
    }
    Ok(f)
}

fn arrow<S: ValuationStructure>(c: &mut Cursor, s: &S) -> Result<Wal<S::Weight>> {
    let f = or(c, s)?;
    if c.eat(&Tok::Arrow) {
        let a = plain(c, f, "->")?;
        let b = arrow(c, s)?;
        let b = plain(c, b, "->")?;
        return Ok(Wal::implies(a, b));
    }
    Ok(f)
}

fn or<S: ValuationStructure>(c: &mut Cursor, s: &S) -> Result<Wal<S::Weight>> {
    let mut f = meet(c, s)?;
    while c.eat(&Tok::Or) {
        let a = plain(c, f, "|")?;
        let b = meet(c, s)?;
        let b = plain(c, b, "|")?;
        f = Wal::not(Wal::meet(Wal::not(a), Wal::not(b)));
    }
    Ok(f)
}

fn meet<S: ValuationStructure>(c: &mut Cursor, s: &S) -> Result<Wal<S::Weight>> {
    let mut f = unary(c, s)?;
    while c.eat(&Tok::Meet) || c.eat(&Tok::And) {
        f = Wal::meet(f, unary(c, s)?);
    }
    Ok(f)
}

fn variable(c: &mut Cursor) -> Result<Var> {
    let name = c.ident("a variable")?;
    if !is_variable(&name) || letter_predicate(&name).is_some() || is_keyword(&name) {
        return Err(c.error(format!("`{name}` is not a variable name")));
    }
    Ok(Var::named(&name))
}

fn first_order(c: &Cursor, x: Var) -> Result<Var> {
    if x.is_first_order() {
        Ok(x)
    } else {
        Err(c.error(format!("`{x}` must be first-order")))
    }
}

fn unary<S: ValuationStructure>(c: &mut Cursor, s: &S) -> Result<Wal<S::Weight>> {
    if c.eat(&Tok::Bang) {
        return Ok(Wal::not(unary(c, s)?));
    }
    match c.peek().clone() {
        Tok::Ident(k) if k == "meet" || k == "forall" => {
            c.next();
            let x = variable(c)?;
            c.expect(&Tok::Dot, "`.`")?;
            Ok(Wal::meet_all(&x, imp(c, s)?))
        }
        Tok::Ident(k) if k == "exists" => {
            c.next();
            let x = variable(c)?;
            c.expect(&Tok::Dot, "`.`")?;
            let body = imp(c, s)?;
        let body = plain(c, body, "exists")?;
            Ok(Wal::not(Wal::meet_all(&x, Wal::not(body))))
        }
        Tok::Ident(k) if k == "join" => Err(c.error("`join` is only allowed in the prefix")),
        _ => atom(c, s),
    }
}

fn atom<S: ValuationStructure>(c: &mut Cursor, s: &S) -> Result<Wal<S::Weight>> {
    match c.peek().clone() {
        Tok::LParen => {
            c.next();
            let f = imp(c, s)?;
            c.expect(&Tok::RParen, "`)`")?;
            Ok(f)
        }
        Tok::Ident(k) if k == "true" => {
            c.next();
            Ok(Wal::truth())
        }
        Tok::Ident(k) if k == "false" => {
            c.next();
            Ok(Wal::falsity())
        }
        Tok::Ident(name) if *c.peek2() == Tok::LParen => {
            c.next();
            c.next();
            let x = variable(c)?;
            let x = first_order(c, x)?;
            c.expect(&Tok::RParen, "`)`")?;
            if let Some(a) = letter_predicate(&name) {
                Ok(Wal::letter(a, &x))
            } else if is_variable(&name) && name.starts_with(|ch: char| ch.is_ascii_uppercase()) {
                Ok(Wal::member(&Var::second(&name), &x))
            } else {
                Err(c.error(format!("`{name}` is neither a letter predicate nor a set variable")))
            }
        }
        Tok::Ident(_) => {
            let x = variable(c)?;
            let (line, col) = c.here();
            let op = c.next();
            if let Tok::MapsTo(lit) = &op {
                let x = first_order(c, x)?;
                let m = s.parse_weight(lit).map_err(|e| Error::parse(line, col, format!("bad weight `{lit}`: {e}")))?;
                return Ok(Wal::assign(&x, m));
            }
            let y = variable(c)?;
            if !x.is_first_order() || !y.is_first_order() {
                return Err(c.error("comparisons take first-order variables"));
            }
            match op {
                Tok::Eq => Ok(Wal::eq(&x, &y)),
                Tok::Neq => Ok(Wal::not(Wal::eq(&x, &y))),
                Tok::Lt => Ok(Wal::less(&x, &y)),
                t => Err(Error::parse(line, col, format!("expected `=`, `!=`, `<` or `|->`, found {}", describe(&t)))),
            }
        }
        t => Err(c.error(format!("unexpected {}", describe(&t)))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{Disc, Ratio};

    #[test]
    fn precedence_and_round_trip() {
        let a = parse_wal("P_a(x) /\\ P_b(y) => x |-> (1,1)", &Ratio).unwrap();
        let b = parse_wal("(P_a(x) /\\ P_b(y)) => (x |-> (1,1))", &Ratio).unwrap();
        assert_eq!(a, b);
        let back = parse_wal(&a.to_string(), &Ratio).unwrap();
        assert_eq!(a, back);
        let n = parse_wal("!P_a(x)", &Ratio).unwrap();
        assert_eq!(n.to_string(), "!P_a(x)");
        assert_eq!(parse_wal(&n.to_string(), &Ratio).unwrap(), n);
    }

    #[test]
    fn mso_connectives() {
        let a = parse_wal("forall x. P_a(x) | P_b(x)", &Ratio).unwrap();
        let m = crate::mso::parse_mso("forall x. P_a(x) | P_b(x)").unwrap();
        assert_eq!(a, crate::wal::w_translate(&m));
        assert!(parse_wal("exists x. x |-> (1,1)", &Ratio).is_err());
        assert!(parse_wal("P_a(x) | x |-> (1,1)", &Ratio).is_err());
        assert!(parse_wal("P_a(x) & x |-> (1,1)", &Ratio).is_ok());
    }

    #[test]
    fn weights_are_checked() {
        assert!(matches!(parse_wal("x |-> (1,-1)", &Ratio), Err(Error::Parse { .. })));
        assert!(parse_wal("x |-> (1,1/2)", &Disc).is_ok());
        assert!(parse_wal("X |-> (1,1)", &Ratio).is_err());
    }

    #[test]
    fn join_only_in_prefix() {
        let e = parse_ewal("join X. join y. X(y) => y |-> (1,1)", &Ratio).unwrap();
        assert_eq!(e.prefix.len(), 2);
        assert!(e.free_vars().is_empty());
        assert!(parse_ewal("P_a(x) /\\ join X. X(x)", &Ratio).is_err());
        assert!(parse_wal("join X. X(x)", &Ratio).is_err());
        assert!(parse_ewal("join X. join X. X(x)", &Ratio).is_err());
    }
}
