//! Exact cycle-type statistics for random walks on the symmetric group.
//!
//! The crate computes irreducible-character decompositions of powers of the
//! `j`-cycle-count class function `a_j` by signed Murnaghan–Nakayama
//! restriction–induction (the "MN_j Bratteli diagram"), checks them against a
//! closed-form multiplicity built from cluster constants, rim-hook tableau
//! counts and abacus signs, and turns them into exact moments of `a_j` after
//! `k` steps of the star-transposition or random `i`-cycle shuffle.
//!
//! Everything that claims to be exact is computed with big integers and big
//! rationals. Floating point appears only in limiting formulas and in the
//! Monte Carlo summaries produced by [`sim`].
//!
//! Module map:
//!
//! - [`partition`]: partitions, hook lengths, dimensions, rim hooks.
//! - [`characters`]: Murnaghan–Nakayama character values, class sizes, the
//!   decomposition of `a_j`.
//! - [`abacus`]: `j`-abacus, cores, quotients, rim-hook tableau counts and
//!   the compression sign.
//! - [`bratteli`]: signed restriction/induction, tensor powers, cluster
//!   constants and the closed-form multiplicity.
//! - [`symfunc`]: power-sum symmetric functions and the Kronecker/`p_j^⊥`
//!   identity behind the tensor identity.
//! - [`walk`]: spectral traces, exact moments, Poisson and limiting moments.
//! - [`oracle`]: brute force over `S_n` for small `n`.
//! - [`sim`]: seeded, parallel, deterministic Monte Carlo.
//! - [`cli`]: the `cycle-mixer` command line.

pub mod abacus;
pub mod bratteli;
pub mod characters;
pub mod cli;
mod error;
pub mod numbers;
pub mod oracle;
pub mod partition;
pub mod sim;
pub mod symfunc;
pub mod walk;

pub use error::{Error, Result};
pub use partition::{Partition, RimHook};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
