//! Published component tables and the comparison helpers used by the
//! acceptance target.

pub mod reference;
pub mod table;

pub use table::{uncovered, Layout, Mismatch, Table, TableError};
