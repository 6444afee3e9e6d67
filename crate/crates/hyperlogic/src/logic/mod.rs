//! Formula ASTs, concrete syntax, and syntactic transformations.

mod ast;
mod parser;
mod printer;
mod transform;

pub use ast::{
    FOFormula, HyperCTLFormula, HyperLTLSentence, PropName, QfFormula, Quantifier, VarName,
};
pub use parser::{parse_fo, parse_hyperctl, parse_hyperltl, parse_qf, parse_sentence_comb};
pub use transform::{
    classify, conjoin_sentences, temporal_depth, to_prenex, AlternationClass, SentenceComb,
};
