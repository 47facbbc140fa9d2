//! Gröbner bases of Schubert, ladder and blockwise determinantal ideals built
//! from combinatorial data, with a small classical oracle for cross-checks.

pub mod block;
pub mod cli;
pub mod ladder;
pub mod error;
pub mod minor;
pub mod oracle;
pub mod order;
pub mod permutation;
pub mod poly;
pub mod schubert;
pub mod term;
pub mod tri_char;

pub use block::{Block, Diagonality};
pub use error::{Error, Result};
pub use minor::Minor;
pub use order::{OrderKind, Scan, TermOrder, VariableOrder};
pub use permutation::{EssentialBox, Permutation};
pub use poly::Polynomial;
pub use term::{Cell, Term};
