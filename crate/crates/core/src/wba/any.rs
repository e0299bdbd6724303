//! Automata whose structure is only known at run time, from a file header or
//! a command-line flag.

use std::fmt;

use crate::error::{Error, Result};
use crate::format::parse_raw;
use crate::valuation::{Disc, Energy, Ratio, StructureKind};

use super::WeightedBuchiAutomaton;

#[derive(Clone, Debug)]
pub enum AnyWba {
    Ratio(WeightedBuchiAutomaton<Ratio>),
    Disc(WeightedBuchiAutomaton<Disc>),
    Energy(WeightedBuchiAutomaton<Energy>),
}

impl AnyWba {
    /// Parses a weighted automaton file. `forced` overrides the file's
    /// `structure:` header; the second component is a warning when the two
    /// disagree.
    pub fn parse(text: &str, forced: Option<&StructureKind>) -> Result<(AnyWba, Option<String>)> {
        let raw = parse_raw(text, &["structure"])?;
        let header = match raw.header("structure") {
            Some(h) => Some(h.parse::<StructureKind>().map_err(|e| Error::parse(raw.header_line("structure"), 1, e.to_string()))?),
            None => None,
        };
        let mut warning = None;
        let kind = match (forced, header) {
            (Some(f), Some(h)) => {
                if *f != h {
                    warning = Some(format!("structure `{f}` from the command line overrides `{h}` in the file"));
                }
                f.clone()
            }
            (Some(f), None) => f.clone(),
            (None, Some(h)) => h,
            (None, None) => return Err(Error::parse(1, 1, "no `structure:` header; pass --structure")),
        };
        let a = match kind {
            StructureKind::Ratio => AnyWba::Ratio(WeightedBuchiAutomaton::from_raw(Ratio, &raw)?),
            StructureKind::Disc => AnyWba::Disc(WeightedBuchiAutomaton::from_raw(Disc, &raw)?),
            StructureKind::Energy(n) => AnyWba::Energy(WeightedBuchiAutomaton::from_raw(Energy::new(n), &raw)?),
        };
        Ok((a, warning))
    }

    pub fn kind(&self) -> StructureKind {
        match self {
            AnyWba::Ratio(_) => StructureKind::Ratio,
            AnyWba::Disc(_) => StructureKind::Disc,
            AnyWba::Energy(a) => StructureKind::Energy(a.structure().dim()),
        }
    }
}

impl fmt::Display for AnyWba {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyWba::Ratio(a) => a.fmt(f),
            AnyWba::Disc(a) => a.fmt(f),
            AnyWba::Energy(a) => a.fmt(f),
        }
    }
}
