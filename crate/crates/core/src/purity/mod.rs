//! Decision procedures for purity, self purity and injectivity-type
//! properties of finite modules.
//!
//! Purity and absolute purity are decided through reductions that hold for
//! finite modules only. A finite module is algebraically compact, so a pure
//! submodule of a finite module is a direct summand, and a finite module is
//! absolutely pure exactly when it is injective. [`is_pure`] therefore
//! searches for a complement and [`is_absolutely_pure`] runs the Baer test.
//! The bounded searches [`bounded_equational_purity`] and
//! [`bounded_fp_oracle`] check the same properties from their definitions
//! and exist to cross-validate the reductions.
//!
//! Over a finite ring every left ideal is finitely generated, and over the
//! integers every ideal is principal, so the quantifier of absolute self
//! purity coincides with that of the ideal criterion for quasi-injectivity.
//! [`is_quasi_injective_by_endomorphisms`] decides quasi-injectivity from
//! the definition instead and gives an independent route.

use alloc::string::String;

use crate::hom::IdealHom;
use crate::ideal::LeftIdeal;
use crate::submodule::Submodule;

mod classify;
mod equations;
mod extension;
mod injective;
mod rings;
mod selfpure;

pub use classify::{classify, ClassificationRecord};
pub use equations::{
    bounded_equational_purity, bounded_equational_purity_exhaustive, is_pure, recheck_equation_witness, EquationWitness,
};
pub use extension::{extends_to_ring, ExtensionWitness};
pub use injective::{bounded_fp_oracle, is_absolutely_pure, is_injective_baer, recheck_fp_witness, FpWitness};
pub use rings::{is_commutative_pir, is_regular_ring, is_semisimple_ring};
pub use selfpure::{
    integer_quantifier_gens, is_absolutely_self_pure, is_m_pure, is_quasi_injective,
    is_quasi_injective_by_endomorphisms, is_self_pure, SubmoduleMapFailure,
};

/// Outcome of a universally quantified check: it holds, or fails with a
/// witness (the first in canonical search order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<W> {
    Holds,
    Fails(W),
}

impl<W> Decision<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Decision::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Decision::Holds => None,
            Decision::Fails(w) => Some(w),
        }
    }

    pub(crate) fn from_failure(w: Option<W>) -> Self {
        match w {
            None => Decision::Holds,
            Some(w) => Decision::Fails(w),
        }
    }
}

/// A map from a left ideal that has no extension to the whole ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailingMap {
    pub ideal: LeftIdeal,
    pub map: IdealHom,
}

impl FailingMap {
    pub(crate) fn new(map: IdealHom) -> Self {
        FailingMap {
            ideal: map.domain().clone(),
            map,
        }
    }

    pub fn describe(&self) -> String {
        self.map.describe()
    }

    /// Re-checks the failure independently: the map is linear and no module
    /// element extends it.
    pub fn recheck(&self) -> bool {
        crate::validate(&self.map).is_empty() && extends_to_ring(&self.map).is_none()
    }
}

/// Result of a bounded search that can only refute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome<W> {
    Witness(W),
    /// Nothing found within the bounds. `reduced` is set when the search
    /// space was cut down by an exact reduction rather than enumerated.
    NotFound {
        checked: usize,
        reduced: bool,
    },
}

impl<W> OracleOutcome<W> {
    pub fn witness(&self) -> Option<&W> {
        match self {
            OracleOutcome::Witness(w) => Some(w),
            OracleOutcome::NotFound { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PurityWitness {
    /// The property holds and there is nothing further to exhibit.
    None,
    /// A complement making the submodule a direct summand.
    Complement(Submodule),
    /// A qualifying map extendable inside the big module but not the small.
    FailingMap(FailingMap),
    /// A linear system over the submodule solvable only in the big module.
    Equation(EquationWitness),
    /// No complement exists, and the bounded equation search found nothing.
    NoComplement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurityVerdict {
    pub holds: bool,
    pub witness: PurityWitness,
}

impl PurityVerdict {
    pub(crate) fn holds_with(witness: PurityWitness) -> Self {
        PurityVerdict { holds: true, witness }
    }

    pub(crate) fn fails_with(witness: PurityWitness) -> Self {
        PurityVerdict { holds: false, witness }
    }
}

/// A yes/no answer whose failures carry a non-extending map.
pub type Flag = Decision<FailingMap>;
