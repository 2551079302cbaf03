//! Exact decision procedures for purity-type properties of finite modules.
//!
//! Rings are finite unital rings given by full addition and multiplication
//! tables, or the ring of integers (whose ideals are handled through their
//! nonnegative generator). Modules are finite and given by element tables.
//! On top of that representation the crate decides self purity, M-purity,
//! absolute self purity, quasi-injectivity, injectivity (Baer), absolute
//! purity and purity, and ships a deterministic zoo of small rings and
//! modules plus an exhaustive harness that checks the known structural
//! theorems about these notions on every zoo instance.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod arith;
mod caps;
mod error;
pub mod filter;
pub mod harness;
mod hom;
mod ideal;
mod iso;
mod linear;
mod module;
pub mod purity;
mod ring;
mod submodule;
mod validate;
pub mod zoo;

pub use arith::{divisors, exponent_partitions, prime_factors};
pub use caps::Caps;
pub use error::{Error, Result};
pub use hom::{hom_set, kernel, IdealHom, ModHom};
pub use ideal::{left_ideals, principal_ideal, LeftIdeal};
pub use iso::{is_module_iso, is_ring_iso};
pub use module::{direct_sum, product_module, DirectSum, FinModule};
pub use ring::{make_cyclic_ring, make_product_ring, BaseRing, RingTable};
pub use submodule::{submodules, Submodule};
pub use validate::{validate, Axiom, AxiomFailure, Validate, ValidationReport};
