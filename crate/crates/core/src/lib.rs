//! Exact-arithmetic engine for sign patterns under Descartes' rule of signs.
//!
//! - [`polycore`]: rationals, univariate and bivariate polynomials, resultants.
//! - [`rootcount`]: Sturm chains, multiplicity-exact root reports, refinement.
//! - [`signs`]: sign patterns, admissible pairs, the Z2×Z2 action.
//! - [`realize`]: concatenation, recipes, randomized search, catalogs.
//! - [`paperchecks`]: machine checks of the degree-9 nonrealization argument.

pub mod paperchecks;
pub mod polycore;
pub mod realize;
pub mod rootcount;
pub mod signs;
