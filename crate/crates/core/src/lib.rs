//! Homomorphism testing on finite groups with explicit derandomization.
//!
//! The crate builds finite groups as multiplication tables, decomposes their
//! regular representation into unitary irreps, runs matrix-valued Fourier
//! analysis (transforms, convolution, the U² norm), constructs and certifies
//! ε-biased multisets, executes the relaxed BLR test `‖f(xy) − f(x)f(y)‖²_HS ≤ γt`
//! with the second query drawn from a biased set, and checks every inequality
//! in the chain from test-passing probability to Fourier structure.
//!
//! All randomness flows from explicit seeds and all parallel reductions are
//! order-stable, so reports are byte-reproducible across thread counts.

pub mod algnorm;
pub mod bias;
pub mod blr;
pub mod digest;
pub mod error;
pub mod group;
pub mod linalg;
pub mod matfun;
pub mod rep;
pub mod verify;

pub use error::{Error, Result};
pub use group::{build_group, verify_group, GroupSpec, GroupTable, VerifyMode};
pub use rep::{closed_form_irreps, decompose_regular, quasirandomness, Irrep, IrrepSet};
