//! Exact algebra for equivariant and pseudoequivariant Higgs bundles over a
//! finite ramified cover of Riemann surfaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalars`]: rationals, weights modulo 1 and cyclotomic fields;
//! * [`cohomology`]: normalized 2-cocycles of finite abelian groups, brute
//!   force `H²`, central extensions;
//! * [`pseudorep`]: pseudorepresentations of cyclic isotropy groups and their
//!   classification by eigenvalue exponents;
//! * [`lie`]: matrix models, alcove normalization, parabolic subalgebras and
//!   eigenspace decompositions;
//! * [`local`]: the local correspondence between invariant Higgs fields on
//!   the cover and parabolic Higgs fields downstairs;
//! * [`moduli`]: covering bookkeeping, stratum indices and degree pairings;
//! * [`cli`]: JSON front end used by the `pseudohiggs` binary.

pub mod cli;
pub mod cohomology;
pub mod lie;
pub mod local;
pub mod moduli;
pub mod pseudorep;
pub mod scalars;
