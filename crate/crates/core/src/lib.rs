//! Parenthesis-free prefix logic with four interchangeable semantics.
//!
//! Formulas such as `CCpKqNqNp` are parsed by [`syntax`] and can then be
//! evaluated
//!
//! * classically over `{0, 1}` ([`classical`]),
//! * in Łukasiewicz's or strong Kleene's three-valued logic ([`trivalent`]),
//! * as matrices acting on Kronecker products of truth vectors, or through
//!   the equivalent scalar projections ([`vector`]).
//!
//! Exhaustive work (truth tables, weight grids, formula sweeps) goes through
//! [`Exec`], which uses rayon when the `parallel` feature is enabled.

pub mod assignment;
pub mod classical;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod syntax;
pub mod trivalent;
pub mod vector;

pub use assignment::Assignment;
pub use classical::{
    are_equivalent, eval2, is_tautology, truth_table, Assignment2, TruthTable, TruthValue2,
};
pub use enumerate::FormulaFamily;
pub use error::EvalError;
pub use exec::Exec;
pub use syntax::{
    is_well_formed, parse, parse_str, tokenize, Formula, OperatorTable, ParseError, ParseErrorKind,
    Token, TokenKind, WellFormedness,
};
pub use trivalent::{
    diff_semantics, eval3_kleene, eval3_lukasiewicz, trivalent_table, Assignment3, Semantics3,
    TruthValue3,
};
pub use vector::{
    build_matrix, compare_with_lukasiewicz, decode, eval_matrix, eval_projection, kron, make_basis,
    vectorize, AssignmentVec, Basis, BasisMode, Connective, LogicMatrix, TruthVector, VectorLogic,
};
