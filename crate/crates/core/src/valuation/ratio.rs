use std::fmt;

use num_traits::{Signed, Zero};

use super::{ext_max, fmt_q, nonneg, parse_rational, tuple_fields, ExtReal, ValuationStructure, Q};
use crate::error::{Error, Result};
use crate::wba::{ProductGraph, SolverOptions};

/// Ratio objective: `limsup (r_0+…+r_n)/(c_0+…+c_n)` aggregated by `sup`.
///
/// A quotient with zero denominator counts as `-inf`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Ratio;

/// A reward/cost pair `(r,c)` with `c ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatioWeight {
    pub reward: Q,
    pub cost: Q,
}

impl RatioWeight {
    pub fn new(reward: Q, cost: Q) -> RatioWeight {
        RatioWeight { reward, cost }
    }

    /// Integer shorthand, mostly for tests.
    pub fn ints(reward: i64, cost: i64) -> RatioWeight {
        RatioWeight::new(Q::from_integer(reward.into()), Q::from_integer(cost.into()))
    }
}

impl fmt::Display for RatioWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", fmt_q(&self.reward), fmt_q(&self.cost))
    }
}

fn sums(ws: &[RatioWeight]) -> (Q, Q) {
    ws.iter().fold((Q::zero(), Q::zero()), |(r, c), w| (r + &w.reward, c + &w.cost))
}

impl ValuationStructure for Ratio {
    type Weight = RatioWeight;
    type Value = ExtReal;

    fn header(&self) -> String {
        "ratio".into()
    }

    fn zero(&self) -> ExtReal {
        ExtReal::NegInf
    }

    fn add(&self, a: &ExtReal, b: &ExtReal) -> ExtReal {
        ext_max(a, b)
    }

    fn idempotent(&self) -> bool {
        true
    }

    fn check_weight(&self, w: &RatioWeight) -> Result<()> {
        if nonneg(&w.cost) {
            Ok(())
        } else {
            Err(Error::input(format!("ratio weight {w} has negative cost")))
        }
    }

    fn default_one(&self) -> Self::Weight {
        RatioWeight::ints(0, 1)
    }

    fn parse_weight(&self, text: &str) -> Result<RatioWeight> {
        let f = tuple_fields(text)?;
        if f.len() != 2 {
            return Err(Error::input(format!("ratio weight needs two fields, got `{text}`")));
        }
        let w = RatioWeight::new(parse_rational(f[0])?, parse_rational(f[1])?);
        self.check_weight(&w)?;
        Ok(w)
    }

    fn val_lasso(&self, prefix: &[RatioWeight], period: &[RatioWeight]) -> Result<ExtReal> {
        if period.is_empty() {
            return Err(Error::input("empty loop"));
        }
        for w in prefix.iter().chain(period) {
            self.check_weight(w)?;
        }
        let (rq, cq) = sums(period);
        if cq.is_positive() {
            return Ok(ExtReal::Finite(rq / cq));
        }
        // The loop costs nothing, so the denominator is frozen at the prefix cost.
        let (rp, d) = sums(prefix);
        if d.is_zero() {
            return Ok(ExtReal::NegInf);
        }
        if rq.is_positive() {
            return Ok(ExtReal::PosInf);
        }
        if rq.is_negative() {
            return Ok(ExtReal::NegInf);
        }
        // Rewards are periodic from here on: the limsup is the best cutpoint.
        let mut best = ExtReal::NegInf;
        let mut partial = rp;
        for w in period {
            partial += &w.reward;
            best = ext_max(&best, &ExtReal::Finite(&partial / &d));
        }
        Ok(best)
    }

    fn solve_product(&self, graph: &ProductGraph<RatioWeight>, opts: &SolverOptions) -> Option<Result<ExtReal>> {
        Some(crate::wba::solve_ratio(graph, opts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rw(r: i64, c: i64) -> RatioWeight {
        RatioWeight::ints(r, c)
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(Ratio.val_lasso(&[], &[rw(1, 2)]).unwrap(), ExtReal::frac(1, 2));
        assert_eq!(Ratio.val_lasso(&[rw(0, 1)], &[rw(1, 0)]).unwrap(), ExtReal::PosInf);
        assert_eq!(Ratio.val_lasso(&[rw(0, 0)], &[rw(0, 0)]).unwrap(), ExtReal::NegInf);
        assert_eq!(Ratio.val_lasso(&[rw(0, 1)], &[rw(-1, 0)]).unwrap(), ExtReal::NegInf);
        // Cutpoint rule: rewards 2, -2 repeat over a frozen denominator of 4.
        assert_eq!(Ratio.val_lasso(&[rw(1, 4)], &[rw(2, 0), rw(-2, 0)]).unwrap(), ExtReal::frac(3, 4));
        assert!(Ratio.val_lasso(&[], &[rw(1, -1)]).is_err());
    }

    #[test]
    fn parse_weights() {
        assert_eq!(Ratio.parse_weight("(1,2)").unwrap(), rw(1, 2));
        assert_eq!(Ratio.parse_weight("3/2, 0.5").unwrap(), RatioWeight::new(Q::new(3.into(), 2.into()), Q::new(1.into(), 2.into())));
        assert!(Ratio.parse_weight("(1)").is_err());
        assert!(Ratio.parse_weight("(1,-1)").is_err());
        assert_eq!(rw(1, 2).to_string(), "(1,2)");
    }
}
