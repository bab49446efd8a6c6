//! Exact group-algebra computations for the multinomial descent and
//! inversion statistics on the symmetric group.
//!
//! * [`perm`]: permutations in lexicographic order, statistics, group tables.
//! * [`poly`]: sparse integer polynomials over `X_k` or `X_{i,j}`.
//! * [`algebra`]: elements of `Z[X][S_n]` and their convolution.
//! * [`spectral`]: minimal polynomials, spectra and multiplicities.
//! * [`oracle`]: brute-force checkers for the counting lemmas.

pub mod algebra;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod spectral;

pub use algebra::GroupAlgebraElement;
pub use error::{Error, Result};
pub use perm::{factorial, permutations, statistic, Permutation, StatisticKind, SymmetricGroup};
pub use poly::{Assignment, Family, Int, Monomial, NamedPolynomial, Polynomial, VariableId};
