use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{ext_min, fmt_q, nonneg, parse_rational, tuple_fields, ExtReal, ValuationStructure, Q};
use crate::error::{Error, Result};
use crate::wba::{ProductGraph, SolverOptions};

/// Discounted sum `c_0 + Σ c_i·d_0⋯d_{i-1}` aggregated by `inf`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Disc;

/// A cost/discount pair `(c,d)` with `c ≥ 0` and `0 < d ≤ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiscWeight {
    pub cost: Q,
    pub discount: Q,
}

impl DiscWeight {
    pub fn new(cost: Q, discount: Q) -> DiscWeight {
        DiscWeight { cost, discount }
    }
}

impl fmt::Display for DiscWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", fmt_q(&self.cost), fmt_q(&self.discount))
    }
}

/// Discounted cost of one pass and the product of its discounts.
pub(crate) fn pass(ws: &[DiscWeight]) -> (Q, Q) {
    let mut total = Q::zero();
    let mut factor = Q::one();
    for w in ws {
        total += &factor * &w.cost;
        factor *= &w.discount;
    }
    (total, factor)
}

impl ValuationStructure for Disc {
    type Weight = DiscWeight;
    type Value = ExtReal;

    fn header(&self) -> String {
        "disc".into()
    }

    fn zero(&self) -> ExtReal {
        ExtReal::PosInf
    }

    fn add(&self, a: &ExtReal, b: &ExtReal) -> ExtReal {
        ext_min(a, b)
    }

    fn idempotent(&self) -> bool {
        true
    }

    fn check_weight(&self, w: &DiscWeight) -> Result<()> {
        if !nonneg(&w.cost) {
            return Err(Error::input(format!("discounted weight {w} has negative cost")));
        }
        if !w.discount.is_positive() || w.discount > Q::one() {
            return Err(Error::input(format!("discount of {w} is outside (0,1]")));
        }
        Ok(())
    }

    fn default_one(&self) -> Self::Weight {
        DiscWeight::new(Q::zero(), Q::one())
    }

    fn parse_weight(&self, text: &str) -> Result<DiscWeight> {
        let f = tuple_fields(text)?;
        if f.len() != 2 {
            return Err(Error::input(format!("discounted weight needs two fields, got `{text}`")));
        }
        let w = DiscWeight::new(parse_rational(f[0])?, parse_rational(f[1])?);
        self.check_weight(&w)?;
        Ok(w)
    }

    fn val_lasso(&self, prefix: &[DiscWeight], period: &[DiscWeight]) -> Result<ExtReal> {
        if period.is_empty() {
            return Err(Error::input("empty loop"));
        }
        for w in prefix.iter().chain(period) {
            self.check_weight(w)?;
        }
        let (pre, dp) = pass(prefix);
        let (s, p) = pass(period);
        if p < Q::one() {
            Ok(ExtReal::Finite(pre + dp * s / (Q::one() - p)))
        } else if s.is_positive() {
            Ok(ExtReal::PosInf)
        } else {
            Ok(ExtReal::Finite(pre))
        }
    }

    fn solve_product(&self, graph: &ProductGraph<DiscWeight>, opts: &SolverOptions) -> Option<Result<ExtReal>> {
        Some(crate::wba::solve_disc(graph, opts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::parse_rational;

    fn dw(c: &str, d: &str) -> DiscWeight {
        DiscWeight::new(parse_rational(c).unwrap(), parse_rational(d).unwrap())
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(Disc.val_lasso(&[], &[dw("1", "1/2")]).unwrap(), ExtReal::int(2));
        assert_eq!(Disc.val_lasso(&[], &[dw("0", "1")]).unwrap(), ExtReal::int(0));
        assert_eq!(Disc.val_lasso(&[], &[dw("1", "1")]).unwrap(), ExtReal::PosInf);
        assert_eq!(Disc.val_lasso(&[dw("3", "1/2")], &[dw("0", "1")]).unwrap(), ExtReal::int(3));
        assert!(Disc.val_lasso(&[], &[dw("1", "0")]).is_err());
        assert!(Disc.val_lasso(&[], &[dw("1", "3/2")]).is_err());
    }
}
