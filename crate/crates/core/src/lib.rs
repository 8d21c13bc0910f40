//! Exact symbolic engine for wreath Macdonald polynomials and the counting
//! polynomials of twisted `GL_n` character varieties.

pub mod algebra;
pub mod error;
pub mod hodge;
pub mod macdonald;
pub mod oracle;
pub mod partitions;
pub mod series;
pub mod symfunc;
pub mod types;
pub mod wreath_macdonald;

pub use algebra::{LaurentPoly, RatFun};
pub use error::{Error, Result};

pub use hodge::{HodgeResult, ProblemSpec};
pub use partitions::{BiPartition, Partition};
pub use symfunc::{SymFunc1, SymFunc2};
pub use types::{SimpleType, TypeData};
