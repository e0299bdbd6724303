pub mod buchi;
pub mod mso;
pub(crate) mod syntax;
mod error;
pub(crate) mod format;
pub(crate) mod graph;
pub mod omega;
pub mod valuation;
pub mod wba;
pub mod wal;

pub use error::{Error, Result};
pub use omega::LassoWord;

/// Runs the code in the guide under `book/` as doc-tests.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/lassos.md")]
    pub mod lassos {}
    #[doc = include_str!("../../../book/src/valuations.md")]
    pub mod valuations {}
    #[doc = include_str!("../../../book/src/automata.md")]
    pub mod automata {}
    #[doc = include_str!("../../../book/src/nivat.md")]
    pub mod nivat {}
    #[doc = include_str!("../../../book/src/logic.md")]
    pub mod logic {}
    #[doc = include_str!("../../../book/src/translation.md")]
    pub mod translation {}
    #[doc = include_str!("../../../book/src/formats.md")]
    pub mod formats {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
