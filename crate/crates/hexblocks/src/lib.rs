//! Exact enumeration of hexagonal-celled polyominoes with nearly convex
//! columns ("cheesy" columns: at most two runs per column, bounded gap),
//! organized around three independent routes to the same numbers:
//!
//! * [`enumerate`] — exhaustive generation filtered by the [`classify`]
//!   predicates, the ground-truth oracle for small areas;
//! * [`transfer`] — a column-by-column dynamic program over exact big
//!   integers, fast to large areas, for any gap level;
//! * [`series`] — closed-form rational generating functions, expanded
//!   exactly and reproduced symbolically from the level-one functional
//!   equations.
//!
//! [`asymptotics`] extracts growth constants and amplitudes from the
//! closed forms, and [`verify`] bundles the cross-checks between all
//! routes into runnable suites.

pub mod asymptotics;
pub mod classify;
pub mod enumerate;
pub mod hexgrid;
pub mod series;
pub mod transfer;
pub mod verify;

pub use classify::PolyominoClass;
pub use hexgrid::{Cell, CellSet, ColumnShape};
pub use transfer::CountTable;
