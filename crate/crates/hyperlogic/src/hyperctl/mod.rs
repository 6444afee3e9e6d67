//! Bounded HyperCTL* checking: a direct recursive evaluator and an
//! independent model-checking game, kept as two separate routes so that each
//! can serve as an oracle for the other.

mod check;
mod game;

pub use check::{check_bounded, PathBounds};
pub use game::{build_game, dump_game, solve_game, Game, GameResult, Player};
