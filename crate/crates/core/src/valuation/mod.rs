//! Valuation structures: weight domains, complete monoids and exact lasso
//! valuations.
//!
//! A structure fixes the weight type `M`, the value type `K` with its monoid
//! (zero and sum), and `val` on ultimately periodic weight sequences. The three
//! shipped structures are [`Ratio`], [`Disc`] and [`Energy`]; a custom one
//! implements [`ValuationStructure`] and gets the unambiguous evaluation path
//! for free.

mod disc;
mod energy;
mod ratio;

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::wba::{ProductGraph, SolverOptions};

pub use disc::{Disc, DiscWeight};
pub use energy::{Bit, Energy, EnergyWeight};
pub use ratio::{Ratio, RatioWeight};

/// Exact rationals.
pub type Q = BigRational;

/// ℝ̄ restricted to rationals: `-inf < finite < inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtReal {
    NegInf,
    Finite(Q),
    PosInf,
}

impl ExtReal {
    pub fn int(n: i64) -> ExtReal {
        ExtReal::Finite(Q::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> ExtReal {
        ExtReal::Finite(Q::new(n.into(), d.into()))
    }

    pub fn finite(&self) -> Option<&Q> {
        match self {
            ExtReal::Finite(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    /// Lossy conversion, for diagnostics and float oracles.
    pub fn to_f64(&self) -> f64 {
        match self {
            ExtReal::NegInf => f64::NEG_INFINITY,
            ExtReal::PosInf => f64::INFINITY,
            ExtReal::Finite(q) => q_to_f64(q),
        }
    }
}

impl From<Q> for ExtReal {
    fn from(q: Q) -> Self {
        ExtReal::Finite(q)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::PosInf => f.write_str("inf"),
            ExtReal::Finite(q) => write!(f, "{}", fmt_q(q)),
        }
    }
}

impl std::str::FromStr for ExtReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtReal::PosInf),
            "-inf" => Ok(ExtReal::NegInf),
            t => Ok(ExtReal::Finite(parse_rational(t)?)),
        }
    }
}

pub(crate) fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn q_to_f64(q: &Q) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        if q.is_positive() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    })
}

#[cfg(test)]
pub(crate) fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Parses `p/q`, an integer, or a finite decimal such as `-0.75`.
pub fn parse_rational(text: &str) -> Result<Q> {
    let t = text.trim();
    let bad = || Error::input(format!("malformed number `{text}`"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::input(format!("zero denominator in `{text}`")));
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.starts_with('-');
        let digits = int.trim_start_matches(['-', '+']);
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let whole: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = Q::new(whole * &scale + f, scale);
        return Ok(if neg { -mag } else { mag });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(n))
}

/// Splits a weight tuple `(a,b,...)` (outer parentheses optional) into fields.
pub(crate) fn tuple_fields(text: &str) -> Result<Vec<&str>> {
    let t = text.trim();
    let inner = match (t.strip_prefix('('), t.ends_with(')')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => t,
        _ => return Err(Error::input(format!("malformed weight `{text}`"))),
    };
    Ok(inner.split(',').map(str::trim).collect())
}

/// A valuation structure `(M, 𝕂, val)`.
pub trait ValuationStructure: Clone + fmt::Debug + Send + Sync + 'static {
    /// Transition weights, the set `M`.
    type Weight: Clone + Eq + Hash + Ord + fmt::Debug + fmt::Display + Send + Sync;
    /// Values, the carrier of the complete monoid `𝕂`.
    type Value: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    /// Header word used by the text formats, e.g. `ratio` or `energy2`.
    fn header(&self) -> String;

    /// `𝟘` of the monoid.
    fn zero(&self) -> Self::Value;

    /// Binary monoid sum.
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;

    /// Whether `x + x = x`.
    fn idempotent(&self) -> bool;

    /// Rejects weights outside `M`.
    fn check_weight(&self, w: &Self::Weight) -> Result<()>;

    /// Parses a weight literal like `(1,2)`.
    fn parse_weight(&self, text: &str) -> Result<Self::Weight>;

    /// The default weight used when a file or command line names none.
    fn default_one(&self) -> Self::Weight;

    /// `val` on the sequence `prefix · period^ω`.
    fn val_lasso(&self, prefix: &[Self::Weight], period: &[Self::Weight]) -> Result<Self::Value>;

    /// Sum over all accepting runs recorded in a product graph. Structures
    /// without a solver return `None`; behavior then needs an unambiguous
    /// automaton.
    fn solve_product(&self, _graph: &ProductGraph<Self::Weight>, _opts: &SolverOptions) -> Option<Result<Self::Value>> {
        None
    }
}

/// Finite monoid sum; the empty sum is `𝟘`.
pub fn monoid_sum<S: ValuationStructure>(s: &S, values: &[S::Value]) -> S::Value {
    values.iter().fold(s.zero(), |acc, v| s.add(&acc, v))
}

/// `sup` on [`ExtReal`].
pub(crate) fn ext_max(a: &ExtReal, b: &ExtReal) -> ExtReal {
    if a.cmp(b) == Ordering::Less {
        b.clone()
    } else {
        a.clone()
    }
}

pub(crate) fn ext_min(a: &ExtReal, b: &ExtReal) -> ExtReal {
    if a.cmp(b) == Ordering::Greater {
        b.clone()
    } else {
        a.clone()
    }
}

/// Parses a weight lasso such as `(1,2) ((3,1) (1,1))`.
pub fn parse_weight_lasso<S: ValuationStructure>(s: &S, text: &str) -> Result<crate::LassoWord<S::Weight>> {
    use crate::omega::{parse_lasso_tokens, LassoToken};
    let w = parse_lasso_tokens(text)?;
    let conv = |t: &LassoToken| -> Result<S::Weight> {
        match t {
            LassoToken::Tuple(raw) => s.parse_weight(raw),
            LassoToken::Letter(l) => Err(Error::input(format!("weight literals are parenthesized, got `{l}`"))),
        }
    };
    let prefix = w.prefix().iter().map(conv).collect::<Result<Vec<_>>>()?;
    let period = w.period().iter().map(conv).collect::<Result<Vec<_>>>()?;
    crate::LassoWord::new(prefix, period)
}

/// A structure chosen at run time from a text header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureKind {
    Ratio,
    Disc,
    Energy(usize),
}

impl std::str::FromStr for StructureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "ratio" => Ok(StructureKind::Ratio),
            "disc" => Ok(StructureKind::Disc),
            _ => {
                if let Some(n) = s.strip_prefix("energy") {
                    let n: usize = if n.is_empty() { 1 } else { n.parse().map_err(|_| Error::input(format!("unknown structure `{s}`")))? };
                    if n == 0 {
                        return Err(Error::input("energy dimension must be at least 1"));
                    }
                    Ok(StructureKind::Energy(n))
                } else {
                    Err(Error::input(format!("unknown structure `{s}` (expected ratio, disc or energy<n>)")))
                }
            }
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureKind::Ratio => f.write_str("ratio"),
            StructureKind::Disc => f.write_str("disc"),
            StructureKind::Energy(n) => write!(f, "energy{n}"),
        }
    }
}

pub(crate) fn nonneg(q: &Q) -> bool {
    !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), Q::new(1.into(), 2.into()));
        assert_eq!(parse_rational("-0.75").unwrap(), Q::new((-3).into(), 4.into()));
        assert_eq!(parse_rational("7").unwrap(), qi(7));
        assert_eq!(parse_rational(".5").unwrap(), Q::new(1.into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn ext_order_and_print() {
        assert!(ExtReal::NegInf < ExtReal::int(-5));
        assert!(ExtReal::int(5) < ExtReal::PosInf);
        assert_eq!(ExtReal::frac(2, 4).to_string(), "1/2");
        assert_eq!(ExtReal::int(8).to_string(), "8");
        assert_eq!("-inf".parse::<ExtReal>().unwrap(), ExtReal::NegInf);
    }

    #[test]
    fn monoid_sums() {
        assert_eq!(monoid_sum(&Ratio, &[]), ExtReal::NegInf);
        assert_eq!(monoid_sum(&Disc, &[ExtReal::int(3), ExtReal::PosInf]), ExtReal::int(3));
        assert_eq!(monoid_sum(&Energy::new(1), &[Bit(false), Bit(true), Bit(false)]), Bit(true));
    }

    #[test]
    fn structure_headers() {
        assert_eq!("energy2".parse::<StructureKind>().unwrap(), StructureKind::Energy(2));
        assert_eq!("energy".parse::<StructureKind>().unwrap(), StructureKind::Energy(1));
        assert!("energy0".parse::<StructureKind>().is_err());
        assert!("mean".parse::<StructureKind>().is_err());
    }
}
