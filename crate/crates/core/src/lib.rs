//! Verification and construction engine for Ann-categories: finite tables,
//! a term language for coherence diagrams, an exhaustive checker, algebraic
//! models and the constructions between them (transference,
//! ⊕-strictification, the endofunctor category and the embedding into it).

pub mod ann;
pub mod cat;
pub mod catalog;
pub mod constructions;
pub mod engine;
pub mod error;
pub mod models;
pub mod report;
pub mod structures;
pub mod term;

pub use ann::{check_ann_functor, derive_zero_isos, verify_ann, AnnCat, ZeroIsoPair};
pub use cat::{CategoryBuilder, FinCategory, MorId, NatFamily, ObjId};
pub use engine::{AnnStructure, CategoryOps, Context, Op};
pub use error::{CatError, ConstructionError, EvalError, ModelError, ParseError};
pub use report::{AxiomReport, Check, Failure, FailureKind, Report};
pub use term::{parse_equation, parse_term, Equation, Name, TermExpr};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/models.md")]
    mod models {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/zero.md")]
    mod zero {}
    #[doc = include_str!("../../../book/src/transfer.md")]
    mod transfer {}
    #[doc = include_str!("../../../book/src/end.md")]
    mod end {}
}
