//! Virtual and welded links as Gauss codes and ribbon data, their moves, and
//! finite quandle and biquandle invariants.

pub mod algebra;
pub mod catalog;
pub mod exec;
pub mod gauss;
pub mod gen;
pub mod present;
pub mod ribbon;
pub mod spun;

pub use exec::Exec;
