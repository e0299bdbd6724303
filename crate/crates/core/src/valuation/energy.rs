use std::fmt;

use super::{tuple_fields, ValuationStructure};
use crate::error::{Error, Result};
use crate::wba::{ProductGraph, SolverOptions};

/// Energy objective in `n` dimensions: value 1 iff every partial sum stays
/// componentwise nonnegative. Aggregated by `∨`.
///
/// On a lasso the infinite check reduces to the prefix, one loop pass and the
/// loop effect: if the effect is nonnegative, every later pass starts from a
/// pointwise larger vector than the first one, so its partial sums are larger
/// too; if some effect component is negative that component eventually drops
/// below zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Energy {
    dim: usize,
}

impl Energy {
    pub fn new(dim: usize) -> Energy {
        assert!(dim >= 1, "energy dimension must be positive");
        Energy { dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// An integer vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnergyWeight(pub Vec<i64>);

impl fmt::Display for EnergyWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, z) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{z}")?;
        }
        write!(f, ")")
    }
}

/// A value in `{0,1}`, printed as a digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bit(pub bool);

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl ValuationStructure for Energy {
    type Weight = EnergyWeight;
    type Value = Bit;

    fn header(&self) -> String {
        format!("energy{}", self.dim)
    }

    fn zero(&self) -> Bit {
        Bit(false)
    }

    fn add(&self, a: &Bit, b: &Bit) -> Bit {
        Bit(a.0 || b.0)
    }

    fn idempotent(&self) -> bool {
        true
    }

    fn check_weight(&self, w: &EnergyWeight) -> Result<()> {
        if w.0.len() == self.dim {
            Ok(())
        } else {
            Err(Error::input(format!("energy weight {w} has dimension {} instead of {}", w.0.len(), self.dim)))
        }
    }

    fn default_one(&self) -> Self::Weight {
        EnergyWeight(vec![0; self.dim])
    }

    fn parse_weight(&self, text: &str) -> Result<EnergyWeight> {
        let f = tuple_fields(text)?;
        let v = f
            .iter()
            .map(|s| s.parse::<i64>().map_err(|_| Error::input(format!("energy components are integers, got `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        let w = EnergyWeight(v);
        self.check_weight(&w)?;
        Ok(w)
    }

    fn val_lasso(&self, prefix: &[EnergyWeight], period: &[EnergyWeight]) -> Result<Bit> {
        if period.is_empty() {
            return Err(Error::input("empty loop"));
        }
        for w in prefix.iter().chain(period) {
            self.check_weight(w)?;
        }
        let mut level = vec![0i128; self.dim];
        for w in prefix.iter().chain(period) {
            for (l, z) in level.iter_mut().zip(&w.0) {
                *l += *z as i128;
            }
            if level.iter().any(|l| *l < 0) {
                return Ok(Bit(false));
            }
        }
        let mut effect = vec![0i128; self.dim];
        for w in period {
            for (e, z) in effect.iter_mut().zip(&w.0) {
                *e += *z as i128;
            }
        }
        Ok(Bit(effect.iter().all(|e| *e >= 0)))
    }

    fn solve_product(&self, graph: &ProductGraph<EnergyWeight>, opts: &SolverOptions) -> Option<Result<Bit>> {
        Some(crate::wba::solve_energy(graph, self.dim, opts).map(|o| Bit(o.is_some())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[i64]) -> EnergyWeight {
        EnergyWeight(v.to_vec())
    }

    #[test]
    fn closed_form_examples() {
        let one = Energy::new(1);
        let two = Energy::new(2);
        assert_eq!(one.val_lasso(&[e(&[-1])], &[e(&[0])]).unwrap(), Bit(false));
        assert_eq!(two.val_lasso(&[], &[e(&[1, -1])]).unwrap(), Bit(false));
        assert_eq!(two.val_lasso(&[e(&[2, 0])], &[e(&[-1, 1]), e(&[1, 0])]).unwrap(), Bit(true));
        assert!(two.val_lasso(&[], &[e(&[1])]).is_err());
    }
}
