//! Jordan types and Jordan degree types of graded Artinian Gorenstein
//! algebras `A = S/Ann(F)`, computed from the Macaulay dual generator `F`
//! through exact catalecticant ranks.

pub mod apolar;
pub mod checks;
pub mod cli;
pub mod codim2;
pub mod corpus;
pub mod error;
pub mod jordan;
pub mod lefschetz;
pub mod linalg;
pub mod oracle;
pub mod parse;
pub mod partition;
pub mod poly;
pub mod realize;
pub mod sample;

pub use apolar::{catalecticant, hilbert, HilbertFunction};
pub use checks::{check_rank_matrix, CheckReport, Rule};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use jordan::{
    analyze, jdt_matrix, jordan_degree_type, jordan_type, rank_matrix, JdtMatrix, JordanData,
    RankMatrix,
};
pub use linalg::{Matrix, Rational};
pub use parse::{parse_linear_form, parse_poly, VarTable};
pub use partition::{IndexedPartition, JordanString, Partition};
pub use poly::{LinearForm, Monomial, Polynomial};
