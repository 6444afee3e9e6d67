//! Finitely represented semantic objects: lasso traces and trace sets,
//! variable assignments, bounded/split structure, Kripke structures with
//! lasso paths, finite words, and the text formats for all of them.

mod assignment;
mod formats;
mod kripke;
mod split;
mod trace;
mod word;

pub use assignment::{Assignment, PathAssignment, Shiftable, TraceAssignment};
pub use formats::{
    parse_kripke, parse_trace_set, parse_word, print_kripke, print_trace_set, print_word,
};
pub use kripke::{lasso_paths, KripkeStructure, LassoPath};
pub use split::{compose_split, is_bounded, split_view, SplitView, DOLLAR};
pub(crate) use trace::canonical_lasso;
pub use trace::{align, letter, LassoTrace, Letter, TraceSet};
pub use word::{StretchSpec, Word, ORDER_PROP};
