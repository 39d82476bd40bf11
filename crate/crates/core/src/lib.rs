//! Exact symbolic computation of local invariants of complex analytic germs.
//!
//! The kernel computes in the local ring of convergent power series at the
//! origin through standard bases for local term orders (Mora's tangent-cone
//! normal form). On top of it sit the geometric constructions (Jacobian
//! minors, singular loci, relative polar curves, generic hyperplane flags)
//! and the invariants themselves: Milnor numbers of hypersurfaces and ICIS,
//! intersection multiplicities, local Euler obstructions, Brasselet numbers,
//! and mechanical verifiers for the Lê-Greuel-type identities relating them.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! every reported invariant is an integer. Genericity of random linear forms
//! is never assumed; it is certified a posteriori by agreement of independent
//! seeded draws.

pub mod error;
pub mod geometry;
pub mod invariants;
pub mod ring;
pub mod sbasis;

pub use error::{Error, Result};
