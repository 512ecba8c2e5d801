//! Exact modular representation theory of the quaternion group over binary
//! fields.
//!
//! The crate is organized bottom-up:
//!
//! - [`field`]: GF(2^k) arithmetic on bitmask elements, embeddings between
//!   fields, and a documented modulus table.
//! - [`poly`]: dense polynomials over those fields with exact factorization.
//! - [`mat`]: dense exact matrices, reduced row echelon form, kernels,
//!   solves, and a subspace calculus (sum, intersection, preimage).
//! - [`dade`]: the 8-dimensional local algebra presenting the group algebra
//!   of the quaternion group in characteristic 2 on two radical generators,
//!   with word reduction, structure constants, and the regular module.
//! - [`modrep`]: finite-dimensional modules over that algebra given by an
//!   action matrix pair, with radical/socle series, homomorphism spaces,
//!   projective stripping, injective embeddings, and base change.
//! - [`stable`]: syzygies, the period-4 certificate, stable triviality,
//!   ghost detection and ghost spaces, and the lower-bound search for a
//!   non-trivial composite of two ghosts.
//! - [`kronecker`]: decomposition of a linear relation on a vector space
//!   into the five classical indecomposable shapes.
//! - [`lift`]: the constructive certificate that a composite of three
//!   ghosts factors through an injective module, built case by case from
//!   the Kronecker decomposition.
//! - [`campaign`]: seeded randomized verification campaigns and their
//!   machine-readable reports.

pub mod campaign;
pub mod dade;
pub mod error;
pub mod field;
pub mod kronecker;
pub mod lift;
pub mod mat;
pub mod modrep;
pub mod poly;
pub mod stable;
pub mod textio;

pub use error::{Error, Result};
pub use field::{field_embed, FieldElement, FieldEmbedding, FieldSpec};
pub use mat::Mat;
