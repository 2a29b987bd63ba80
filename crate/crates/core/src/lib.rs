//! Ratliff-Rush closures of monomial ideals and monomial modules.
//!
//! Ideals of `k[x_1..x_d]` generated by monomials, and submodules of free
//! modules generated by monomial elements, are represented exactly by their
//! minimal generators. On top of that arithmetic the crate computes
//! Ratliff-Rush closure chains, associated primes of the quotients they
//! define, and Ratliff-Rush reductions. The [`oracle`] module re-derives the
//! same objects by brute-force enumeration for cross-checking.

pub mod ass;
pub mod closure;
pub mod decompose;
pub mod error;
pub mod ideal;
pub mod instance;
pub mod module;
pub mod monomial;
pub mod oracle;
pub mod properties;
pub mod reduction;

pub use ass::PrimeSet;
pub use closure::{ChainLimits, ClosureResult, Filtration};
pub use decompose::MonomialPrime;
pub use error::{AlgebraError, Result};
pub use ideal::MonomialIdeal;
pub use instance::{Instance, ParseError};
pub use module::{ModuleElement, MonomialSubmodule, QuotientPresentation};
pub use monomial::{Monomial, VarSet};
pub use reduction::ReductionVerdict;
