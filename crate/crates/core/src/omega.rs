//! Ultimately periodic ω-words and partial ω-words.
//!
//! A [`LassoWord`] is a finite prefix followed by a nonempty loop that repeats
//! forever. Every value is kept in canonical form: the loop is primitive and
//! the prefix is as short as possible. Two canonical lassos are ω-equal
//! exactly when they are structurally equal.
//!
//! A [`PartialLassoValue`] is a lasso over `Option<X>` (`None` is the
//! undefined marker, printed as `#`) or the incompatibility value
//! [`PartialLassoValue::Bottom`].

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// An ultimately periodic ω-word `prefix · period^ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LassoWord<X> {
    prefix: Vec<X>,
    period: Vec<X>,
}

impl<X> LassoWord<X> {
    /// Builds a lasso as given, without canonicalizing.
    pub fn from_parts(prefix: Vec<X>, period: Vec<X>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::input("lasso loop must be nonempty"));
        }
        Ok(LassoWord { prefix, period })
    }

    pub fn prefix(&self) -> &[X] {
        &self.prefix
    }

    /// The loop part.
    pub fn period(&self) -> &[X] {
        &self.period
    }

    /// Letter at position `i` of the unrolled word.
    pub fn at(&self, i: usize) -> &X {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// Number of positions in one presentation, `|prefix| + |loop|`.
    pub fn shape_len(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    /// The position that follows `i` inside the presentation `0..shape_len()`.
    pub fn next_pos(&self, i: usize) -> usize {
        if i + 1 < self.shape_len() {
            i + 1
        } else {
            self.prefix.len()
        }
    }

    pub fn map<Y>(&self, mut f: impl FnMut(&X) -> Y) -> LassoWord<Y> {
        LassoWord {
            prefix: self.prefix.iter().map(&mut f).collect(),
            period: self.period.iter().map(&mut f).collect(),
        }
    }

    pub fn into_parts(self) -> (Vec<X>, Vec<X>) {
        (self.prefix, self.period)
    }
}

impl<X: Clone> LassoWord<X> {
    /// Re-presents the word with the given prefix and loop lengths.
    ///
    /// `prefix_len` must be at least the current prefix length and `period_len`
    /// a positive multiple of the current loop length.
    pub fn reshape(&self, prefix_len: usize, period_len: usize) -> Self {
        assert!(prefix_len >= self.prefix.len());
        assert!(period_len > 0 && period_len.is_multiple_of(self.period.len()));
        LassoWord {
            prefix: (0..prefix_len).map(|i| self.at(i).clone()).collect(),
            period: (prefix_len..prefix_len + period_len)
                .map(|i| self.at(i).clone())
                .collect(),
        }
    }

    /// Positions `0..n` of the unrolled word.
    pub fn unroll(&self, n: usize) -> Vec<X> {
        (0..n).map(|i| self.at(i).clone()).collect()
    }
}

impl<X: Clone + Eq> LassoWord<X> {
    /// Builds a lasso and brings it into canonical form.
    pub fn new(prefix: Vec<X>, period: Vec<X>) -> Result<Self> {
        Ok(Self::from_parts(prefix, period)?.canonical())
    }

    /// The constant-shape word `period^ω`.
    pub fn periodic(period: Vec<X>) -> Result<Self> {
        Self::new(Vec::new(), period)
    }

    /// Primitive loop, shortest prefix.
    pub fn canonical(&self) -> Self {
        let mut prefix = self.prefix.clone();
        let mut period = self.period.clone();
        let n = period.len();
        for d in 1..=n {
            if n.is_multiple_of(d) && (d..n).all(|i| period[i] == period[i - d]) {
                period.truncate(d);
                break;
            }
        }
        while let Some(last) = prefix.last() {
            if last != period.last().unwrap() {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        LassoWord { prefix, period }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// ω-equality: same infinite word.
    pub fn omega_eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

/// `w[i]` of the unrolled word.
pub fn position_at<X>(w: &LassoWord<X>, i: usize) -> &X {
    w.at(i)
}

/// Re-presents both words with prefix length `max` of the prefixes and loop
/// length `lcm` of the loops.
pub fn align<X: Clone, Y: Clone>(u: &LassoWord<X>, v: &LassoWord<Y>) -> (LassoWord<X>, LassoWord<Y>) {
    let p = u.prefix.len().max(v.prefix.len());
    let l = u.period.len().lcm(&v.period.len());
    (u.reshape(p, l), v.reshape(p, l))
}

/// Common shape of several lassos: `(max prefix, lcm of loops)`.
pub fn common_shape<'a, X: 'a>(words: impl IntoIterator<Item = &'a LassoWord<X>>) -> (usize, usize) {
    words
        .into_iter()
        .fold((0, 1), |(p, l), w| (p.max(w.prefix.len()), l.lcm(&w.period.len())))
}

impl<X: fmt::Display> fmt::Display for LassoWord<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.prefix {
            write!(f, "{x} ")?;
        }
        write!(f, "(")?;
        for (i, x) in self.period.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A token of the lasso text syntax.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LassoToken {
    /// A bare identifier such as `a` or `q_1`.
    Letter(String),
    /// The text between the parentheses of a tuple such as `(1,2)`.
    Tuple(String),
}

impl fmt::Display for LassoToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LassoToken::Letter(s) => f.write_str(s),
            LassoToken::Tuple(s) => write!(f, "({s})"),
        }
    }
}

/// `count` random lassos over the letters `0..letters`, reproducible from
/// `seed`. Prefixes have length 0 to 3 and periods 1 to 4.
pub fn sample_lassos(letters: usize, count: usize, seed: u64) -> Vec<LassoWord<usize>> {
    use rand::{Rng, SeedableRng};
    assert!(letters > 0, "cannot sample over an empty alphabet");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let p = rng.gen_range(0..=3);
            let l = rng.gen_range(1..=4);
            let mut pick = |n: usize| (0..n).map(|_| rng.gen_range(0..letters)).collect::<Vec<_>>();
            let prefix = pick(p);
            let period = pick(l);
            LassoWord::new(prefix, period).expect("period is nonempty")
        })
        .collect()
}

pub(crate) fn is_letter_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '#')
}

/// Parses `a b (b a)` style text. The last top-level parenthesized group is
/// the loop; any other group is a tuple token.
pub fn parse_lasso_tokens(text: &str) -> Result<LassoWord<LassoToken>> {
    #[derive(Debug)]
    enum Item {
        Word(String, usize),
        Group(Vec<Item>, String, usize),
    }

    fn parse_seq(chars: &[(usize, char)], pos: &mut usize, text: &str, depth: usize) -> Result<Vec<Item>> {
        let mut items = Vec::new();
        while *pos < chars.len() {
            let (off, c) = chars[*pos];
            if c.is_whitespace() {
                *pos += 1;
            } else if c == '(' {
                *pos += 1;
                let inner = parse_seq(chars, pos, text, depth + 1)?;
                if *pos >= chars.len() {
                    return Err(Error::parse(1, off + 1, "unclosed '('"));
                }
                let end = chars[*pos].0;
                *pos += 1;
                items.push(Item::Group(inner, text[off + 1..end].to_string(), off + 1));
            } else if c == ')' {
                if depth == 0 {
                    return Err(Error::parse(1, off + 1, "unmatched ')'"));
                }
                return Ok(items);
            } else {
                let start = off;
                let mut end = off;
                while *pos < chars.len() {
                    let (o, c) = chars[*pos];
                    if c.is_whitespace() || c == '(' || c == ')' {
                        break;
                    }
                    end = o + c.len_utf8();
                    *pos += 1;
                }
                items.push(Item::Word(text[start..end].to_string(), start + 1));
            }
        }
        Ok(items)
    }

    fn token(item: Item) -> Result<LassoToken> {
        match item {
            Item::Word(w, col) => {
                if is_letter_ident(&w) {
                    Ok(LassoToken::Letter(w))
                } else {
                    Err(Error::parse(1, col, format!("bad letter `{w}`")))
                }
            }
            Item::Group(inner, raw, col) => {
                if inner.iter().any(|i| matches!(i, Item::Group(..))) {
                    Err(Error::parse(1, col, "nested parentheses inside a tuple"))
                } else {
                    Ok(LassoToken::Tuple(raw.trim().to_string()))
                }
            }
        }
    }

    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut pos = 0;
    let mut items = parse_seq(&chars, &mut pos, text, 0)?;
    let Some(Item::Group(loop_items, _, col)) = items.pop() else {
        return Err(Error::parse(1, text.len().max(1), "expected a parenthesized loop at the end"));
    };
    if loop_items.is_empty() {
        return Err(Error::parse(1, col, "empty loop"));
    }
    let prefix = items.into_iter().map(token).collect::<Result<Vec<_>>>()?;
    let period = loop_items.into_iter().map(token).collect::<Result<Vec<_>>>()?;
    LassoWord::new(prefix, period)
}

impl FromStr for LassoWord<String> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let w = parse_lasso_tokens(s)?;
        let (prefix, period) = w.into_parts();
        let conv = |t: LassoToken| match t {
            LassoToken::Letter(s) => Ok(s),
            LassoToken::Tuple(raw) => Err(Error::parse(1, 1, format!("unexpected tuple `({raw})` in a letter word"))),
        };
        let prefix = prefix.into_iter().map(conv).collect::<Result<Vec<_>>>()?;
        let period = period.into_iter().map(conv).collect::<Result<Vec<_>>>()?;
        LassoWord::new(prefix, period)
    }
}

/// An ultimately periodic subset of ℕ, stored as a lasso of membership bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositionSet(LassoWord<bool>);

impl PositionSet {
    pub fn new(prefix: Vec<bool>, period: Vec<bool>) -> Result<Self> {
        Ok(PositionSet(LassoWord::new(prefix, period)?))
    }

    pub fn empty() -> Self {
        PositionSet(LassoWord { prefix: vec![], period: vec![false] })
    }

    /// The set `{i}`.
    pub fn singleton(i: usize) -> Self {
        let mut prefix = vec![false; i + 1];
        prefix[i] = true;
        PositionSet(LassoWord { prefix, period: vec![false] }.canonical())
    }

    pub fn contains(&self, i: usize) -> bool {
        *self.0.at(i)
    }

    pub fn bits(&self) -> &LassoWord<bool> {
        &self.0
    }
}

/// An ultimately periodic partial ω-word, or ⊥.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PartialLassoValue<X> {
    Defined(LassoWord<Option<X>>),
    Bottom,
}

impl<X: Clone + Eq> PartialLassoValue<X> {
    /// ⊤, defined nowhere.
    pub fn top() -> Self {
        PartialLassoValue::Defined(LassoWord { prefix: vec![], period: vec![None] })
    }

    pub fn total(w: &LassoWord<X>) -> Self {
        PartialLassoValue::Defined(w.map(|x| Some(x.clone())).canonical())
    }

    pub fn from_lasso(w: LassoWord<Option<X>>) -> Self {
        PartialLassoValue::Defined(w.canonical())
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, PartialLassoValue::Bottom)
    }

    pub fn is_top(&self) -> bool {
        match self {
            PartialLassoValue::Defined(w) => w.prefix.is_empty() && w.period == [None],
            PartialLassoValue::Bottom => false,
        }
    }

    /// The value at position `i`; `None` when undefined there or ⊥.
    pub fn get(&self, i: usize) -> Option<&X> {
        match self {
            PartialLassoValue::Defined(w) => w.at(i).as_ref(),
            PartialLassoValue::Bottom => None,
        }
    }

    /// Fills undefined positions with `default`. ⊥ gives `None`.
    pub fn totalize(&self, default: &X) -> Option<LassoWord<X>> {
        match self {
            PartialLassoValue::Defined(w) => Some(w.map(|x| x.clone().unwrap_or_else(|| default.clone())).canonical()),
            PartialLassoValue::Bottom => None,
        }
    }

    /// `u[i/x]`.
    pub fn update(&self, i: usize, x: X) -> Self {
        match self {
            PartialLassoValue::Defined(w) => {
                let mut w = w.reshape(w.prefix.len().max(i + 1), w.period.len());
                w.prefix[i] = Some(x);
                PartialLassoValue::Defined(w.canonical())
            }
            PartialLassoValue::Bottom => PartialLassoValue::Bottom,
        }
    }

    /// Both defined and equal wherever both are defined.
    pub fn compatible(&self, other: &Self) -> bool {
        match (self, other) {
            (PartialLassoValue::Defined(u), PartialLassoValue::Defined(v)) => {
                let (u, v) = align(u, v);
                u.prefix.iter().chain(&u.period).zip(v.prefix.iter().chain(&v.period)).all(|(a, b)| match (a, b) {
                    (Some(a), Some(b)) => a == b,
                    _ => true,
                })
            }
            _ => false,
        }
    }

    /// Merges a finite family. The empty family gives ⊤.
    pub fn merge<'a>(family: impl IntoIterator<Item = &'a Self>) -> Self
    where
        X: 'a,
    {
        let mut acc = Self::top();
        for u in family {
            acc = acc.merge_with(u);
            if acc.is_bottom() {
                break;
            }
        }
        acc
    }

    pub fn merge_with(&self, other: &Self) -> Self {
        let (PartialLassoValue::Defined(u), PartialLassoValue::Defined(v)) = (self, other) else {
            return PartialLassoValue::Bottom;
        };
        let (u, v) = align(u, v);
        let mut out = Vec::with_capacity(u.shape_len());
        for (a, b) in u.prefix.iter().chain(&u.period).zip(v.prefix.iter().chain(&v.period)) {
            out.push(match (a, b) {
                (Some(a), Some(b)) if a != b => return PartialLassoValue::Bottom,
                (Some(a), _) => Some(a.clone()),
                (None, b) => b.clone(),
            });
        }
        let period = out.split_off(u.prefix.len());
        PartialLassoValue::Defined(LassoWord { prefix: out, period }.canonical())
    }
}

/// Free-function form of [`PartialLassoValue::update`].
pub fn update<X: Clone + Eq>(u: &PartialLassoValue<X>, i: usize, x: X) -> PartialLassoValue<X> {
    u.update(i, x)
}

/// Free-function form of [`PartialLassoValue::compatible`].
pub fn compatible<X: Clone + Eq>(u: &PartialLassoValue<X>, v: &PartialLassoValue<X>) -> bool {
    u.compatible(v)
}

/// Free-function form of [`PartialLassoValue::merge`].
pub fn merge<X: Clone + Eq>(family: &[PartialLassoValue<X>]) -> PartialLassoValue<X> {
    PartialLassoValue::merge(family)
}

impl<X: fmt::Display> fmt::Display for PartialLassoValue<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartialLassoValue::Bottom => f.write_str("bottom"),
            PartialLassoValue::Defined(w) => {
                let show = |x: &Option<X>| match x {
                    Some(x) => x.to_string(),
                    None => "#".to_string(),
                };
                write!(f, "{}", w.map(show))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LassoWord<String> {
        s.parse().unwrap()
    }

    fn letters(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    #[test]
    fn position_examples() {
        let x = w("a (b a)");
        assert_eq!(position_at(&x, 3), "b");
        assert_eq!(w("(a)").at(1_000_000), "a");
        assert_eq!(w("a b (b a)").at(0), "a");
    }

    #[test]
    fn canonical_rolls_and_shrinks() {
        let x = LassoWord::new(letters("ab"), letters("abab")).unwrap();
        assert_eq!(x.prefix(), &[] as &[char]);
        assert_eq!(x.period(), &['a', 'b']);
        let y = LassoWord::new(letters("aab"), letters("ab")).unwrap();
        assert_eq!(y.prefix(), &['a']);
        assert_eq!(y.period(), &['a', 'b']);
    }

    #[test]
    fn align_examples() {
        let (u, v) = align(&LassoWord::from_parts(letters("a"), letters("b")).unwrap(), &LassoWord::from_parts(vec![], letters("ab")).unwrap());
        assert_eq!((u.prefix(), u.period()), (&['a'][..], &['b', 'b'][..]));
        assert_eq!((v.prefix(), v.period()), (&['a'][..], &['b', 'a'][..]));

        let (u, v) = align(&LassoWord::from_parts(letters("ab"), letters("c")).unwrap(), &LassoWord::from_parts(vec![], letters("abc")).unwrap());
        assert_eq!(u.period(), &['c', 'c', 'c']);
        assert_eq!(v.prefix(), &['a', 'b']);
        assert_eq!(v.period(), &['c', 'a', 'b']);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("a b (b a)").to_string(), "a b (b a)");
        assert_eq!(w("a b (a b)").to_string(), "(a b)");
        assert!("a((b)".parse::<LassoWord<String>>().is_err());
        assert!("a b".parse::<LassoWord<String>>().is_err());
        assert!("()".parse::<LassoWord<String>>().is_err());
        let t = parse_lasso_tokens("(1,2) ((3,1) (1, 1))").unwrap();
        assert_eq!(t.prefix(), &[LassoToken::Tuple("1,2".into())]);
        assert_eq!(t.period().len(), 2);
    }

    #[test]
    fn update_overwrites() {
        let top = PartialLassoValue::<char>::top();
        let u = top.update(0, 'm');
        assert_eq!(u.get(0), Some(&'m'));
        assert_eq!(u.get(1), None);
        let u2 = u.update(0, 'n');
        assert_eq!(u2.get(0), Some(&'n'));
        assert!(PartialLassoValue::<char>::Bottom.update(0, 'm').is_bottom());
        assert_eq!(top.update(2, 'm').to_string(), "# # m (#)");
    }
}
