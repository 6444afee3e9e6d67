//! Exact HyperLTL evaluation over finite lasso trace sets, and a bounded
//! satisfiability enumeration built on top of it.

mod check;
mod expansion;
mod satenum;

pub use check::check;
pub use expansion::{build_expansion, eval_qf, ExpansionTable};
pub use satenum::{sat_enum, sat_enum_jobs, SearchBudget, SearchOutcome, SearchReport};
