//! Exact-arithmetic tools for multibranched surfaces and their embeddings in
//! the 3-sphere.
//!
//! A multibranched surface is built from compact orientable surfaces
//! (sectors) whose boundary circles wrap circles (branches) by covering maps
//! of signed degree. This crate provides
//!
//! * the surface data model and its JSON document format ([`surface`]),
//! * integer Smith normal form ([`matrix`]) and first homology ([`homology`]),
//! * the torsion obstruction and the linking-number embedding certificate for
//!   `X_g(p1, p2, p3)` ([`embed`], realized by pure 3-braids in [`braid`]),
//! * the genus-0 Case 1 / Case 2 arithmetic conditions ([`genus0`]) and the
//!   boundary-slope bookkeeping behind them ([`slope`]).
//!
//! The arithmetic is generic over exact integer scalars (see [`Int`]); the
//! aliases below fix the usual choices.

pub mod braid;
pub mod embed;
pub mod error;
pub mod genus0;
pub mod homology;
pub mod matrix;
pub mod scalar;
pub mod slope;
pub mod surface;

pub use error::{Error, Result};
pub use scalar::Int;

pub use braid::{linking_matrix_of_braid, pure_braid_word};
pub use embed::{construct_certificate, coprime_split, lemma_witness, s3_obstruction, Verdict};
pub use genus0::{case1_bruteforce, case1_decide, case2_decide, genus0_report, Genus0Verdict};
pub use homology::{h1_formula, homology_h1, presentation_matrix};
pub use matrix::smith_normal_form;
pub use slope::slopes_from_witness;
pub use surface::{is_regular, make_xg, parse_surface, MultibranchedSurface, Sector, XgFamily};

pub use num_bigint::BigInt;

/// Integer matrix with arbitrary-precision entries.
pub type Matrix = matrix::IntegerMatrix<BigInt>;
/// First homology with arbitrary-precision invariant factors.
pub type Group = homology::AbelianGroup<BigInt>;
pub type Certificate = embed::EmbeddingCertificate<BigInt>;
pub type Obstruction = embed::ObstructionReport<BigInt>;
pub type Braid = braid::BraidWord<BigInt>;
pub type Linking = embed::LinkingMatrix<BigInt>;
/// Genus-0 decisions run on `i128`; inputs are capped at 2^31.
pub type Decision = genus0::Genus0Decision<i128>;
pub type Witness = slope::Case1Witness<BigInt>;
