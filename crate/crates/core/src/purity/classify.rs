use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use super::{is_absolutely_pure, is_absolutely_self_pure, is_injective_baer, is_quasi_injective, Flag};
use crate::module::FinModule;
use crate::ring::BaseRing;
use crate::{Caps, Error, Result};

/// The four injectivity-type flags of a module, each with its first
/// failing map when false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub label: String,
    pub injective: Flag,
    pub absolutely_pure: Flag,
    pub quasi_injective: Flag,
    pub absolutely_self_pure: Flag,
    pub notes: Vec<String>,
}

impl ClassificationRecord {
    /// `(injective, absolutely_pure, quasi_injective, absolutely_self_pure)`.
    pub fn flags(&self) -> [bool; 4] {
        [
            self.injective.holds(),
            self.absolutely_pure.holds(),
            self.quasi_injective.holds(),
            self.absolutely_self_pure.holds(),
        ]
    }

    fn check_implications(&self) -> Result<()> {
        let [inj, ap, qi, asp] = self.flags();
        let broken = [
            (inj && !ap, "injective but not absolutely pure"),
            (inj && !qi, "injective but not quasi-injective"),
            (inj && !asp, "injective but not absolutely self pure"),
            (qi && !asp, "quasi-injective but not absolutely self pure"),
            (ap && !asp, "absolutely pure but not absolutely self pure"),
        ];
        match broken.iter().find(|(bad, _)| *bad) {
            None => Ok(()),
            Some((_, what)) => Err(Error::Invariant(format!("{}: {what}", self.label))),
        }
    }
}

/// Runs the four flag procedures on `a` and checks the implications
/// between them (an implication failure is an [`Error::Invariant`]).
pub fn classify(a: &Arc<FinModule>, caps: &Caps) -> Result<ClassificationRecord> {
    let mut notes = vec![String::from(
        "absolutely pure decided by the Baer test: a finite module is algebraically compact",
    )];
    notes.push(String::from(match a.ring() {
        BaseRing::Finite(_) => {
            "every left ideal of a finite ring is finitely generated, so quasi-injectivity and absolute self purity quantify over the same ideals"
        }
        BaseRing::Integers => {
            "every ideal of Z is principal, so quasi-injectivity and absolute self purity quantify over the same ideals; only nZ with n = 0 or n dividing the exponent are scanned"
        }
    }));
    let record = ClassificationRecord {
        label: String::from(a.label()),
        injective: is_injective_baer(a, caps)?,
        absolutely_pure: is_absolutely_pure(a, caps)?,
        quasi_injective: is_quasi_injective(a, caps)?,
        absolutely_self_pure: is_absolutely_self_pure(a, caps)?,
        notes,
    };
    record.check_implications()?;
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::direct_sum;
    use crate::ring::make_cyclic_ring;
    use crate::submodule::Submodule;

    #[test]
    fn z2_over_integers() {
        let z2 = Arc::new(FinModule::cyclic_group(2).unwrap());
        let rec = classify(&z2, &Caps::default()).unwrap();
        assert_eq!(rec.flags(), [false, false, true, true]);
        assert!(rec.injective.witness().unwrap().recheck());
    }

    #[test]
    fn zero_module() {
        let zero = Arc::new(FinModule::zero_module(&BaseRing::Integers));
        assert_eq!(classify(&zero, &Caps::default()).unwrap().flags(), [true; 4]);
    }

    #[test]
    fn regular_witness_fails_everything() {
        let z4 = make_cyclic_ring(4).unwrap();
        let reg = Arc::new(FinModule::regular(&z4).unwrap());
        let two = Submodule::generated(&reg, &[2]).unwrap();
        let m = direct_sum(&z4, &[two.module().clone(), reg], &Caps::default())
            .unwrap()
            .module;
        let rec = classify(&m, &Caps::default()).unwrap();
        assert_eq!(rec.flags(), [false; 4]);
        let w = rec.absolutely_self_pure.witness().unwrap();
        assert_eq!(w.describe(), "{0,2} → (⟨0,2⟩≤Z_4) ⊕ Z_4, 2 ↦ (2,0)");
    }
}
