use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::ideal::LeftIdeal;
use crate::linear::{self, MapScratch};
use crate::module::FinModule;
use crate::ring::BaseRing;
use crate::validate::{Axiom, Validate, ValidationReport};
use crate::{Caps, Error, Result};

/// A module map from a left ideal of the base ring into a module.
///
/// Over a finite ring `values[i]` is the image of `domain.elements()[i]`.
/// Over the integers `values` holds the single image of the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealHom {
    domain: LeftIdeal,
    codomain: Arc<FinModule>,
    values: Vec<usize>,
}

impl IdealHom {
    /// Builds the map without checking linearity (see [`crate::validate`]).
    pub fn from_values(domain: LeftIdeal, codomain: Arc<FinModule>, values: Vec<usize>) -> Result<Self> {
        if domain.ring() != *codomain.ring() {
            return Err(Error::RingMismatch);
        }
        let expected = domain.len().unwrap_or(1);
        if values.len() != expected {
            return Err(Error::Dimension {
                what: "ideal map values",
                expected,
                found: values.len(),
            });
        }
        Ok(IdealHom {
            domain,
            codomain,
            values,
        })
    }

    /// Builds the map and rejects it unless it is linear.
    pub fn new(domain: LeftIdeal, codomain: Arc<FinModule>, values: Vec<usize>) -> Result<Self> {
        let f = Self::from_values(domain, codomain, values)?;
        let report = f.validate();
        if report.is_empty() {
            Ok(f)
        } else {
            Err(Error::Invalid {
                what: "ideal map",
                report,
            })
        }
    }

    /// The map `nZ → M`, `n ↦ a`.
    pub fn integer(gen: u64, codomain: Arc<FinModule>, image: usize) -> Result<Self> {
        Self::new(LeftIdeal::Integers { gen }, codomain, vec![image])
    }

    pub fn domain(&self) -> &LeftIdeal {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FinModule> {
        &self.codomain
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `f(l)` for a finite-ring ideal element.
    pub fn image(&self, l: usize) -> Option<usize> {
        self.domain.position(l).map(|i| self.values[i])
    }

    /// `f(gen)` for an ideal of the integers.
    pub fn image_of_gen(&self) -> Option<usize> {
        match self.domain {
            LeftIdeal::Integers { .. } => Some(self.values[0]),
            LeftIdeal::Finite { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == self.codomain.zero())
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &ModHom) -> Result<IdealHom> {
        if g.domain().as_ref() != self.codomain.as_ref() {
            return Err(Error::Argument("composition of incompatible maps".into()));
        }
        Ok(IdealHom {
            domain: self.domain.clone(),
            codomain: g.codomain().clone(),
            values: self.values.iter().map(|&v| g.apply(v)).collect(),
        })
    }

    pub fn describe(&self) -> String {
        match &self.domain {
            LeftIdeal::Integers { gen } => format!(
                "{}Z → {}, {} ↦ {}",
                gen,
                self.codomain.label(),
                gen,
                self.codomain.element_name(self.values[0])
            ),
            LeftIdeal::Finite { elements, .. } => {
                let gens = self.domain.generators();
                let parts: Vec<String> = gens
                    .iter()
                    .map(|&g| {
                        let i = elements.binary_search(&g).unwrap_or(0);
                        format!("{} ↦ {}", g, self.codomain.element_name(self.values[i]))
                    })
                    .collect();
                let on = if parts.is_empty() {
                    String::from("zero map")
                } else {
                    parts.join(", ")
                };
                format!("{} → {}, {}", self.domain.describe(), self.codomain.label(), on)
            }
        }
    }
}

impl Validate for IdealHom {
    fn validate(&self) -> ValidationReport {
        let mut report = self.domain.validate();
        let m = &self.codomain;
        if let Some(&v) = self.values.iter().find(|&&v| v >= m.order()) {
            report.push(Axiom::ElementRange, &[v]);
            return report;
        }
        match &self.domain {
            LeftIdeal::Integers { gen } => {
                if *gen == 0 && self.values[0] != m.zero() {
                    report.push(Axiom::MapLinear, &[0, self.values[0]]);
                }
            }
            LeftIdeal::Finite { ring, elements } => {
                if !report.is_empty() {
                    return report;
                }
                let f = |l: usize| self.image(l).expect("closed ideal");
                'add: for &a in elements {
                    for &b in elements {
                        if f(ring.add(a, b)) != m.add(f(a), f(b)) {
                            report.push(Axiom::MapAdditive, &[a, b]);
                            break 'add;
                        }
                    }
                }
                'lin: for r in 0..ring.order() {
                    for &l in elements {
                        if f(ring.mul(r, l)) != m.act(r, f(l)) {
                            report.push(Axiom::MapLinear, &[r, l]);
                            break 'lin;
                        }
                    }
                }
            }
        }
        report
    }
}

/// A module homomorphism given by its full element table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModHom {
    domain: Arc<FinModule>,
    codomain: Arc<FinModule>,
    map: Vec<usize>,
}

impl ModHom {
    pub(crate) fn from_table_unchecked(domain: Arc<FinModule>, codomain: Arc<FinModule>, map: Vec<usize>) -> Self {
        ModHom { domain, codomain, map }
    }

    /// Builds a homomorphism, rejecting tables that are not linear.
    pub fn new(domain: Arc<FinModule>, codomain: Arc<FinModule>, map: Vec<usize>) -> Result<Self> {
        if domain.ring() != codomain.ring() {
            return Err(Error::RingMismatch);
        }
        if map.len() != domain.order() {
            return Err(Error::Dimension {
                what: "homomorphism table",
                expected: domain.order(),
                found: map.len(),
            });
        }
        let h = ModHom { domain, codomain, map };
        let report = h.validate();
        if report.is_empty() {
            Ok(h)
        } else {
            Err(Error::Invalid {
                what: "homomorphism",
                report,
            })
        }
    }

    pub fn domain(&self) -> &Arc<FinModule> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FinModule> {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ModHom) -> Result<ModHom> {
        if self.codomain.as_ref() != next.domain.as_ref() {
            return Err(Error::Argument("composition of incompatible maps".into()));
        }
        Ok(ModHom {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            map: self.map.iter().map(|&x| next.map[x]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.domain.as_ref() == self.codomain.as_ref() && self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        self.map.iter().all(|&y| !core::mem::replace(&mut seen[y], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_injective()
    }
}

impl Validate for ModHom {
    fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let (d, c) = (&self.domain, &self.codomain);
        if let Some(&v) = self.map.iter().find(|&&v| v >= c.order()) {
            report.push(Axiom::ElementRange, &[v]);
            return report;
        }
        'add: for a in 0..d.order() {
            for b in 0..d.order() {
                if self.map[d.add(a, b)] != c.add(self.map[a], self.map[b]) {
                    report.push(Axiom::MapAdditive, &[a, b]);
                    break 'add;
                }
            }
        }
        if let BaseRing::Finite(r) = d.ring() {
            'lin: for s in 0..r.order() {
                for a in 0..d.order() {
                    if self.map[d.act(s, a)] != c.act(s, self.map[a]) {
                        report.push(Axiom::MapLinear, &[s, a]);
                        break 'lin;
                    }
                }
            }
        }
        report
    }
}

/// All homomorphisms `L → M`.
///
/// Over a finite ring the maps are found by fixing the greedy generating
/// set of `L` and keeping every image tuple whose linear closure is
/// conflict free; tuples are visited lexicographically. Over the integers
/// `nZ` is free, so there is one map per element of `M` (only the zero map
/// for `n = 0`).
pub fn hom_set(ideal: &LeftIdeal, module: &Arc<FinModule>, caps: &Caps) -> Result<Vec<IdealHom>> {
    if ideal.ring() != *module.ring() {
        return Err(Error::RingMismatch);
    }
    match ideal {
        LeftIdeal::Integers { gen } => {
            let images: Vec<usize> = if *gen == 0 {
                vec![module.zero()]
            } else {
                (0..module.order()).collect()
            };
            Ok(images
                .into_iter()
                .map(|a| IdealHom {
                    domain: ideal.clone(),
                    codomain: module.clone(),
                    values: vec![a],
                })
                .collect())
        }
        LeftIdeal::Finite { ring, elements } => {
            let gens = ideal.generators();
            Caps::check("ideal generator count", gens.len(), caps.generators)?;
            let candidates = vec![(0..module.order()).collect::<Vec<_>>(); gens.len()];
            let mut scratch = MapScratch::new(ring.order());
            let mut out = Vec::new();
            linear::for_each_assignment::<()>(&candidates, |images| {
                if linear::extend_map(ring.as_ref(), &gens, module.as_ref(), images, &mut scratch) {
                    out.push(IdealHom {
                        domain: ideal.clone(),
                        codomain: module.clone(),
                        values: elements.iter().map(|&l| scratch.table[l]).collect(),
                    });
                }
                ControlFlow::Continue(())
            });
            Ok(out)
        }
    }
}

/// `ker f` as a left ideal.
pub fn kernel(f: &IdealHom) -> LeftIdeal {
    let zero = f.codomain.zero();
    match &f.domain {
        LeftIdeal::Integers { gen } => LeftIdeal::Integers {
            gen: gen * f.codomain.additive_order(f.values[0]) as u64,
        },
        LeftIdeal::Finite { ring, elements } => LeftIdeal::Finite {
            ring: ring.clone(),
            elements: elements
                .iter()
                .zip(&f.values)
                .filter(|(_, &v)| v == zero)
                .map(|(&l, _)| l)
                .collect(),
        },
    }
}

/// All homomorphisms from the submodule generated by `gens` of `domain`
/// into `codomain`, as tables over the whole of `domain` (entries outside
/// the span are [`linear::UNSET`]), together with the generator images.
pub(crate) fn maps_from_generators(
    domain: &FinModule,
    gens: &[usize],
    codomain: &FinModule,
    mut visit: impl FnMut(&[usize], &[usize]) -> ControlFlow<()>,
) {
    let candidates = vec![(0..codomain.order()).collect::<Vec<_>>(); gens.len()];
    let mut scratch = MapScratch::new(domain.order());
    linear::for_each_assignment(&candidates, |images| {
        if linear::extend_map(domain, gens, codomain, images, &mut scratch) {
            visit(images, &scratch.table)
        } else {
            ControlFlow::Continue(())
        }
    });
}

/// All endomorphism tables of `module` (unbounded enumeration over images
/// of the greedy generators).
pub(crate) fn endomorphisms(module: &FinModule) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..module.order()).collect();
    let gens = linear::greedy_generators(module, &all);
    let mut out = Vec::new();
    maps_from_generators(module, &gens, module, |_, table| {
        out.push(table.to_vec());
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{left_ideals, principal_ideal};
    use crate::ring::make_cyclic_ring;
    use crate::validate::validate;

    #[test]
    fn maps_from_whole_ring_are_determined_by_one() {
        let z4 = make_cyclic_ring(4).unwrap();
        let m = Arc::new(FinModule::regular(&z4).unwrap());
        let homs = hom_set(&LeftIdeal::whole(&z4), &m, &Caps::default()).unwrap();
        assert_eq!(homs.len(), m.order());
        for (k, f) in homs.iter().enumerate() {
            assert_eq!(f.image(1), Some(k));
        }
    }

    #[test]
    fn maps_from_2z4_into_z4() {
        let z4 = make_cyclic_ring(4).unwrap();
        let m = Arc::new(FinModule::regular(&z4).unwrap());
        let l = principal_ideal(&z4, 2).unwrap();
        let homs = hom_set(&l, &m, &Caps::default()).unwrap();
        let images: Vec<usize> = homs.iter().map(|f| f.image(2).unwrap()).collect();
        assert_eq!(images, vec![0, 2]);
        for f in &homs {
            assert!(validate(f).is_empty());
        }
    }

    #[test]
    fn integer_maps_into_z2() {
        let z2 = Arc::new(FinModule::cyclic_group(2).unwrap());
        let homs = hom_set(&LeftIdeal::integers(2), &z2, &Caps::default()).unwrap();
        assert_eq!(homs.len(), 2);
        assert_eq!(
            hom_set(&LeftIdeal::integers(0), &z2, &Caps::default()).unwrap().len(),
            1
        );
    }

    #[test]
    fn kernels() {
        let z2 = Arc::new(FinModule::cyclic_group(2).unwrap());
        let f = IdealHom::integer(2, z2.clone(), 1).unwrap();
        assert_eq!(kernel(&f), LeftIdeal::integers(4));
        let zero = IdealHom::integer(3, z2, 0).unwrap();
        assert_eq!(kernel(&zero), LeftIdeal::integers(3));

        let z4 = make_cyclic_ring(4).unwrap();
        let m = Arc::new(FinModule::regular(&z4).unwrap());
        let l = principal_ideal(&z4, 2).unwrap();
        let f = IdealHom::new(l.clone(), m.clone(), vec![0, 2]).unwrap();
        assert!(kernel(&f).is_zero());
        let zero = IdealHom::new(l.clone(), m, vec![0, 0]).unwrap();
        assert_eq!(kernel(&zero), l);
    }

    #[test]
    fn non_linear_map_reports_scalar_witness() {
        let z4 = make_cyclic_ring(4).unwrap();
        let m = Arc::new(FinModule::regular(&z4).unwrap());
        let l = principal_ideal(&z4, 2).unwrap();
        let f = IdealHom::from_values(l, m, vec![0, 1]).unwrap();
        let report = validate(&f);
        let lin = report.failures().iter().find(|x| x.axiom == Axiom::MapLinear).unwrap();
        // 2·f(2) = 2 but f(2·2) = f(0) = 0
        assert_eq!(lin.witness, vec![2, 2]);
        assert!(IdealHom::new(f.domain().clone(), f.codomain().clone(), vec![0, 1]).is_err());
    }

    #[test]
    fn generator_cap() {
        let z2 = make_cyclic_ring(2).unwrap();
        let m = Arc::new(FinModule::regular(&z2).unwrap());
        let caps = Caps {
            generators: 0,
            ..Caps::default()
        };
        let whole = LeftIdeal::whole(&z2);
        assert!(hom_set(&whole, &m, &caps).unwrap_err().is_capacity());
    }

    #[test]
    fn every_hom_validates() {
        for n in [4usize, 6, 8, 12] {
            let r = make_cyclic_ring(n).unwrap();
            let m = Arc::new(FinModule::regular(&r).unwrap());
            for l in left_ideals(&r).unwrap() {
                for f in hom_set(&l, &m, &Caps::default()).unwrap() {
                    assert!(validate(&f).is_empty());
                    assert!(validate(&kernel(&f)).is_empty());
                }
            }
        }
    }
}
