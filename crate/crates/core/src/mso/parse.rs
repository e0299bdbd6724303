use super::{MsoFormula, Var};
use crate::error::Result;
use crate::syntax::{describe, is_variable, letter_predicate, Cursor, Tok};

/// Parses an MSO formula.
///
/// ```text
/// phi ::= phi <-> phi | phi -> phi | phi '|' phi | phi & phi | !phi
///       | forall v. phi | exists v. phi | (phi) | true | false
///       | P_a(x) | X(x) | x = y | x != y | x < y
/// ```
///
/// Binding strength increases left to right in the first line; `->` is right
/// associative and quantifier bodies extend as far as possible.
pub fn parse_mso(text: &str) -> Result<MsoFormula> {
    let mut c = Cursor::new(text)?;
    let f = iff(&mut c)?;
    c.finish()?;
    f.check_orders()?;
    Ok(f)
}

fn iff(c: &mut Cursor) -> Result<MsoFormula> {
    let mut f = imp(c)?;
    while c.eat(&Tok::Iff) {
        f = MsoFormula::iff(f, imp(c)?);
    }
    Ok(f)
}

fn imp(c: &mut Cursor) -> Result<MsoFormula> {
    let f = or(c)?;
    if c.eat(&Tok::Arrow) {
        return Ok(MsoFormula::implies(f, imp(c)?));
    }
    Ok(f)
}

fn or(c: &mut Cursor) -> Result<MsoFormula> {
    let mut f = and(c)?;
    while c.eat(&Tok::Or) {
        f = MsoFormula::or(f, and(c)?);
    }
    Ok(f)
}

fn and(c: &mut Cursor) -> Result<MsoFormula> {
    let mut f = unary(c)?;
    while c.eat(&Tok::And) {
        f = MsoFormula::and(f, unary(c)?);
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

pub(crate) fn is_keyword(s: &str) -> bool {
    matches!(s, "forall" | "exists" | "meet" | "join" | "true" | "false")
}

fn unary(c: &mut Cursor) -> Result<MsoFormula> {
    if c.eat(&Tok::Bang) {
        return Ok(MsoFormula::not(unary(c)?));
    }
    match c.peek().clone() {
        Tok::Ident(k) if k == "forall" || k == "exists" => {
            c.next();
            let x = variable(c)?;
            c.expect(&Tok::Dot, "`.`")?;
            let body = iff(c)?;
            Ok(if k == "forall" { MsoFormula::forall(&x, body) } else { MsoFormula::exists(&x, body) })
        }
        Tok::Ident(k) if k == "meet" || k == "join" => Err(c.error(format!("`{k}` belongs to WAL, not MSO"))),
        _ => atom(c),
    }
}

fn atom(c: &mut Cursor) -> Result<MsoFormula> {
    match c.peek().clone() {
        Tok::LParen => {
            c.next();
            let f = iff(c)?;
            c.expect(&Tok::RParen, "`)`")?;
            Ok(f)
        }
        Tok::Ident(k) if k == "true" => {
            c.next();
            Ok(MsoFormula::truth())
        }
        Tok::Ident(k) if k == "false" => {
            c.next();
            Ok(MsoFormula::falsity())
        }
        Tok::Ident(name) if *c.peek2() == Tok::LParen => {
            c.next();
            c.next();
            let x = variable(c)?;
            if !x.is_first_order() {
                return Err(c.error(format!("`{x}` must be first-order")));
            }
            c.expect(&Tok::RParen, "`)`")?;
            if let Some(a) = letter_predicate(&name) {
                Ok(MsoFormula::letter(a, &x))
            } else if is_variable(&name) && name.starts_with(|ch: char| ch.is_ascii_uppercase()) {
                Ok(MsoFormula::member(&Var::second(&name), &x))
            } else {
                Err(c.error(format!("`{name}` is neither a letter predicate nor a set variable")))
            }
        }
        Tok::Ident(_) => {
            let x = variable(c)?;
            let op = c.next();
            let y = variable(c)?;
            if !x.is_first_order() || !y.is_first_order() {
                return Err(c.error("comparisons take first-order variables"));
            }
            match op {
                Tok::Eq => Ok(MsoFormula::eq(&x, &y)),
                Tok::Neq => Ok(MsoFormula::not(MsoFormula::eq(&x, &y))),
                Tok::Lt => Ok(MsoFormula::less(&x, &y)),
                t => Err(c.error(format!("expected `=`, `!=` or `<`, found {}", describe(&t)))),
            }
        }
        t => Err(c.error(format!("unexpected {}", describe(&t)))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::mso::MsoNode;

    #[test]
    fn shapes() {
        let f = parse_mso("forall x. P_a(x)").unwrap();
        assert!(matches!(f.node(), MsoNode::Forall(..)));
        let f = parse_mso("exists X. X(x)").unwrap();
        let MsoNode::Not(g) = f.node() else { panic!() };
        let MsoNode::Forall(v, h) = g.node() else { panic!() };
        assert_eq!(v.name(), "X");
        assert!(matches!(h.node(), MsoNode::Not(_)));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_mso("x < (y"), Err(Error::Parse { .. })));
        assert!(parse_mso("forall X. X < y").is_err());
        assert!(parse_mso("P_a(X)").is_err());
        assert!(parse_mso("x <").is_err());
        assert!(parse_mso("x < $g1").is_err());
        assert!(parse_mso("meet x. P_a(x)").is_err());
    }

    #[test]
    fn precedence() {
        let a = parse_mso("P_a(x) & P_b(x) | P_c(x) -> x < y").unwrap();
        let b = parse_mso("((P_a(x) & P_b(x)) | P_c(x)) -> x < y").unwrap();
        assert_eq!(a, b);
        let a = parse_mso("forall x. P_a(x) & x = x").unwrap();
        let b = parse_mso("forall x. (P_a(x) & x = x)").unwrap();
        assert_eq!(a, b);
    }
}
