//! Constructions between Ann-categories: transport of structure,
//! ⊕-strictification, the endofunctor category and the embedding into it.

pub mod inflate;
pub mod transfer;

pub use inflate::{inflate, Inflated};
pub use transfer::{check_equivalence, transfer_structure, Equivalence, EquivalenceView, TableEquivalence};
pub mod strictify;

pub use strictify::{strictify_plus, EvalFunctor, Inclusion, Strictified, Word, WordMor};
pub mod end;

pub use end::{
    build_end, enumerate_end, verify_end_almost_strict, EndCat, EndFunctor, EndMor, EndMorOf, EndOb, EndObOf,
    FunctorExpr, MorExpr,
};
pub mod lambda;

pub use lambda::{build_lambda, check_lambda, Lambda};
pub mod embed;

pub use embed::{check_cxx_condition, embed_almost_strict, EmbedOutcome};
