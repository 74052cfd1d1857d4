//! Exact clique and chromatic numbers, colorability, and low-degree peeling.

mod clique;
mod coloring;
mod peel;

pub use clique::{clique_number, find_clique, has_clique};
pub use coloring::{
    chromatic_number, chromatic_number_with_budget, dsatur_greedy, is_r_colorable, k_coloring,
    BudgetExhausted, Coloring, ColoringError,
};
pub use peel::{aes_peel, PeelError, PeelResult, PeelStep};
