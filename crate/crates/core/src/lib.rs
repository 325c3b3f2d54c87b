//! Splitting engine for categories of binary algebras, plus an exact
//! finite-dimensional workbench for the operators that produce split
//! structures.
//!
//! A category `C` is presented by multilinear relations over a single binary
//! product (associative, Lie, Leibniz, pre-Lie, NAP, ...). The [`split`]
//! module derives the defining relations of the corresponding C-dendriform,
//! C-tridendriform and C-NS algebras by grading the doubled algebra `A ⊕ A`.
//! The [`findim`] module constructs and verifies everything concretely on
//! structure-constant algebras over exact scalars: bimodules, cocycle
//! extensions, Nijenhuis operators, (relative/twisted) Rota-Baxter operators
//! and Reynolds operators, together with the NS/tridendriform structures they
//! induce. The [`oracle`] module cross-checks the combinatorial identities
//! behind the Nijenhuis deformation by brute force.
//!
//! All symbolic and numeric data is generic over a [`Scalar`] ring; the
//! concrete instantiation used throughout the test corpus and the CLI is the
//! arbitrary-precision rational [`Rat`].

pub mod corpus;
pub mod findim;
pub mod oracle;
mod scalar;
pub mod split;
pub mod terms;

pub use scalar::{frac, int, Scalar};

/// Exact rational scalar: arbitrary-precision, always reduced, positive
/// denominator.
pub type Rat = num_rational::BigRational;

/// A relation with exact rational coefficients.
pub type RatRelation = terms::Relation<Rat>;
/// A category presentation over exact rationals.
pub type RatPresentation = terms::CategoryPresentation<Rat>;
/// A structure-constant algebra over exact rationals.
pub type RatAlgebra = findim::FinAlgebra<Rat>;
/// A bimodule (or bimodule algebra) over exact rationals.
pub type RatBimodule = findim::Bimodule<Rat>;
/// A 2-cocycle over exact rationals.
pub type RatCocycle = findim::Cocycle<Rat>;
