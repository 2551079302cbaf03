use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use super::{is_commutative_pir, OracleOutcome, PurityVerdict, PurityWitness};
use crate::module::FinModule;
use crate::ring::BaseRing;
use crate::submodule::Submodule;
use crate::{Caps, Result};

/// Largest tuple space `|B|^m` or column count the exhaustive search takes on.
const TUPLE_SPACE_LIMIT: usize = 1 << 16;
/// Largest number of column combinations per system shape.
const COMBINATION_LIMIT: usize = 1 << 22;

/// A system `Σ_j c_ij·x_j = a_i` with right-hand side in the submodule,
/// solvable in the parent module but not in the submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationWitness {
    /// `coefficients[i][j]`: ring element indices, or integers in
    /// `0..exp(B)` for modules over the integers.
    pub coefficients: Vec<Vec<usize>>,
    /// Right-hand sides, as parent elements.
    pub rhs: Vec<usize>,
    /// A solution in the parent module.
    pub solution: Vec<usize>,
}

impl EquationWitness {
    pub fn equations(&self) -> usize {
        self.coefficients.len()
    }

    pub fn variables(&self) -> usize {
        self.solution.len()
    }

    /// Renders the system, e.g. `2x = 2`.
    pub fn describe(&self, parent: &FinModule) -> String {
        const VARS: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
        let rows: Vec<String> = self
            .coefficients
            .iter()
            .zip(&self.rhs)
            .map(|(row, &a)| {
                let terms: Vec<String> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(j, &c)| {
                        let var = VARS.get(j).copied().unwrap_or("t");
                        if c == 1 {
                            String::from(var)
                        } else {
                            format!("{c}{var}")
                        }
                    })
                    .collect();
                let lhs = if terms.is_empty() {
                    String::from("0")
                } else {
                    terms.join(" + ")
                };
                format!("{lhs} = {}", parent.element_name(a))
            })
            .collect();
        rows.join(", ")
    }
}

/// Scalars acting on the parent: ring elements, or integers modulo the
/// exponent of the parent.
struct Scalars<'a> {
    module: &'a FinModule,
    count: usize,
}

impl<'a> Scalars<'a> {
    fn new(module: &'a FinModule) -> Self {
        let count = match module.ring() {
            BaseRing::Finite(r) => r.order(),
            BaseRing::Integers => module.exponent() as usize,
        };
        Scalars { module, count }
    }

    fn act(&self, c: usize, x: usize) -> usize {
        match self.module.ring() {
            BaseRing::Finite(_) => self.module.act(c, x),
            BaseRing::Integers => self.module.act_int(c as i64, x),
        }
    }
}

/// Tuples of parent elements of a fixed length, encoded in base `|B|`.
struct Tuples<'a> {
    module: &'a FinModule,
    len: usize,
}

impl Tuples<'_> {
    fn size(&self) -> usize {
        self.module.order().pow(self.len as u32)
    }

    fn decode(&self, mut code: usize) -> Vec<usize> {
        let n = self.module.order();
        let mut out = vec![0; self.len];
        for slot in out.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        out
    }

    fn encode(&self, parts: &[usize]) -> usize {
        parts.iter().fold(0, |acc, &p| acc * self.module.order() + p)
    }

    fn add(&self, u: usize, v: usize) -> usize {
        let (a, b) = (self.decode(u), self.decode(v));
        let sum: Vec<usize> = a.iter().zip(&b).map(|(&x, &y)| self.module.add(x, y)).collect();
        self.encode(&sum)
    }

    fn sum(&self, x: &[usize], y: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = x
            .iter()
            .flat_map(|&u| y.iter().map(move |&v| (u, v)))
            .map(|(u, v)| self.add(u, v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

struct Search<'a> {
    sub: &'a Submodule,
    scalars: Scalars<'a>,
    checked: usize,
}

/// A column `c` with its images `c·A` and `c·B`.
type Column = (Vec<usize>, Vec<usize>, Vec<usize>);

impl Search<'_> {
    /// Column images `(c·A, c·B)` for every column `c ∈ S^m`, deduplicated,
    /// keeping the first column producing each pair.
    fn columns(&self, tuples: &Tuples) -> Result<Vec<Column>> {
        let m = tuples.len;
        let count = self.scalars.count.checked_pow(m as u32).unwrap_or(usize::MAX);
        Caps::check("equation column count", count, TUPLE_SPACE_LIMIT)?;
        let parent = self.sub.parent();
        let mut out: Vec<Column> = Vec::new();
        let mut seen = alloc::collections::BTreeSet::new();
        for code in 0..count {
            let mut col = vec![0; m];
            let mut rest = code;
            for slot in col.iter_mut().rev() {
                *slot = rest % self.scalars.count;
                rest /= self.scalars.count;
            }
            let image = |elements: &mut dyn Iterator<Item = usize>| {
                let mut img: Vec<usize> = elements
                    .map(|x| {
                        let parts: Vec<usize> = col.iter().map(|&c| self.scalars.act(c, x)).collect();
                        tuples.encode(&parts)
                    })
                    .collect();
                img.sort_unstable();
                img.dedup();
                img
            };
            let img_a = image(&mut self.sub.elements().iter().copied());
            let img_b = image(&mut (0..parent.order()));
            if seen.insert((img_a.clone(), img_b.clone())) {
                out.push((col, img_a, img_b));
            }
        }
        Ok(out)
    }

    /// Smallest right-hand side in `A^m ∩ im_b` outside `im_a`.
    fn gap(&self, tuples: &Tuples, im_a: &[usize], im_b: &[usize]) -> Option<Vec<usize>> {
        im_b.iter()
            .filter(|v| im_a.binary_search(v).is_err())
            .map(|&v| tuples.decode(v))
            .find(|rhs| rhs.iter().all(|&x| self.sub.contains(x)))
    }

    fn witness(&self, columns: &[&Vec<usize>], rhs: Vec<usize>) -> EquationWitness {
        let m = rhs.len();
        let coefficients: Vec<Vec<usize>> = (0..m).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
        let parent = self.sub.parent();
        let solution = solve(
            parent,
            &self.scalars,
            &coefficients,
            &rhs,
            &(0..parent.order()).collect::<Vec<_>>(),
        )
        .expect("right-hand side lies in the image");
        EquationWitness {
            coefficients,
            rhs,
            solution,
        }
    }

    fn shape(&mut self, eqs: usize, vars: usize) -> Result<Option<EquationWitness>> {
        let tuples = Tuples {
            module: self.sub.parent(),
            len: eqs,
        };
        Caps::check("equation tuple space", tuples.size(), TUPLE_SPACE_LIMIT)?;
        let cols = self.columns(&tuples)?;
        let combos = binomial(cols.len(), vars);
        Caps::check("equation systems", combos, COMBINATION_LIMIT)?;
        let zero = vec![tuples.encode(&vec![self.sub.parent().zero(); eqs])];
        let mut chosen = Vec::with_capacity(vars);
        self.walk(&tuples, &cols, vars, 0, &mut chosen, &zero, &zero)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &mut self,
        tuples: &Tuples,
        cols: &[Column],
        vars: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        im_a: &[usize],
        im_b: &[usize],
    ) -> Result<Option<EquationWitness>> {
        if chosen.len() == vars {
            self.checked += 1;
            return Ok(self.gap(tuples, im_a, im_b).map(|rhs| {
                let columns: Vec<&Vec<usize>> = chosen.iter().map(|&i| &cols[i].0).collect();
                self.witness(&columns, rhs)
            }));
        }
        for i in start..cols.len() {
            chosen.push(i);
            let next_a = tuples.sum(im_a, &cols[i].1);
            let next_b = tuples.sum(im_b, &cols[i].2);
            let found = self.walk(tuples, cols, vars, i + 1, chosen, &next_a, &next_b)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Some `x` over `domain` with `Σ_j c_ij·x_j = a_i` for every row.
fn solve(
    module: &FinModule,
    scalars: &Scalars,
    coefficients: &[Vec<usize>],
    rhs: &[usize],
    domain: &[usize],
) -> Option<Vec<usize>> {
    let vars = coefficients.first().map_or(0, Vec::len);
    let mut x = vec![domain[0]; vars];
    let mut digits = vec![0usize; vars];
    loop {
        let ok = coefficients.iter().zip(rhs).all(|(row, &a)| {
            let lhs = row
                .iter()
                .zip(&x)
                .fold(module.zero(), |acc, (&c, &xj)| module.add(acc, scalars.act(c, xj)));
            lhs == a
        });
        if ok {
            return Some(x);
        }
        let mut pos = vars;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < domain.len() {
                x[pos] = domain[digits[pos]];
                break;
            }
            digits[pos] = 0;
            x[pos] = domain[0];
        }
    }
}

fn search(sub: &Submodule, max_vars: usize, max_eqs: usize, reduce: bool) -> Result<OracleOutcome<EquationWitness>> {
    let mut s = Search {
        sub,
        scalars: Scalars::new(sub.parent()),
        checked: 0,
    };
    if max_vars == 0 || max_eqs == 0 {
        return Ok(OracleOutcome::NotFound {
            checked: 0,
            reduced: false,
        });
    }
    if let Some(w) = s.shape(1, 1)? {
        return Ok(OracleOutcome::Witness(w));
    }
    // Over a commutative principal ideal ring every coefficient matrix is
    // equivalent to a diagonal one, and a diagonal system fails exactly when
    // one of its single equations does.
    if reduce && is_commutative_pir(sub.parent().ring()) {
        return Ok(OracleOutcome::NotFound {
            checked: s.checked,
            reduced: true,
        });
    }
    for eqs in 1..=max_eqs {
        for vars in 1..=max_vars {
            if eqs == 1 && vars == 1 {
                continue;
            }
            if let Some(w) = s.shape(eqs, vars)? {
                return Ok(OracleOutcome::Witness(w));
            }
        }
    }
    Ok(OracleOutcome::NotFound {
        checked: s.checked,
        reduced: false,
    })
}

/// Searches linear systems with at most `max_vars` unknowns and `max_eqs`
/// equations, right-hand sides in `sub`, that are solvable in the parent but
/// not in `sub`. Any witness refutes purity; finding none is inconclusive.
///
/// Single equations are tried first. Over commutative principal ideal rings
/// (the integers, `Z_n`, products of those) they are the whole search, since
/// every system there reduces to a diagonal one.
pub fn bounded_equational_purity(
    sub: &Submodule,
    max_vars: usize,
    max_eqs: usize,
    _caps: &Caps,
) -> Result<OracleOutcome<EquationWitness>> {
    search(sub, max_vars, max_eqs, true)
}

/// [`bounded_equational_purity`] without the diagonal reduction: every
/// system shape up to the bounds is enumerated.
pub fn bounded_equational_purity_exhaustive(
    sub: &Submodule,
    max_vars: usize,
    max_eqs: usize,
    _caps: &Caps,
) -> Result<OracleOutcome<EquationWitness>> {
    search(sub, max_vars, max_eqs, false)
}

/// Independent check of an equation witness: the stated solution works in
/// the parent and no tuple of submodule elements solves the system.
pub fn recheck_equation_witness(sub: &Submodule, w: &EquationWitness) -> bool {
    let parent = sub.parent();
    let scalars = Scalars::new(parent);
    if !w.rhs.iter().all(|&a| sub.contains(a)) {
        return false;
    }
    let all: Vec<usize> = (0..parent.order()).collect();
    let solves = solve(parent, &scalars, &w.coefficients, &w.rhs, &all).is_some_and(|_| {
        w.coefficients.iter().zip(&w.rhs).all(|(row, &a)| {
            row.iter()
                .zip(&w.solution)
                .fold(parent.zero(), |acc, (&c, &x)| parent.add(acc, scalars.act(c, x)))
                == a
        })
    });
    solves && solve(parent, &scalars, &w.coefficients, &w.rhs, sub.elements()).is_none()
}

/// Purity of `sub` in its parent, decided as "is a direct summand".
///
/// For finite modules the two agree: a finite module is algebraically
/// compact, so pure embeddings out of it split. A failing verdict carries
/// an equation witness from [`bounded_equational_purity`] with three
/// unknowns and three equations when one exists.
pub fn is_pure(sub: &Submodule, caps: &Caps) -> Result<PurityVerdict> {
    if let Some(c) = sub.complement(caps)? {
        return Ok(PurityVerdict::holds_with(PurityWitness::Complement(c)));
    }
    Ok(PurityVerdict::fails_with(
        match bounded_equational_purity(sub, 3, 3, caps)? {
            OracleOutcome::Witness(w) => PurityWitness::Equation(w),
            OracleOutcome::NotFound { .. } => PurityWitness::NoComplement,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::direct_sum;
    use alloc::sync::Arc;

    fn z(n: usize) -> Arc<FinModule> {
        Arc::new(FinModule::cyclic_group(n).unwrap())
    }

    #[test]
    fn two_z4_in_z4() {
        let b = z(4);
        let a = Submodule::generated(&b, &[2]).unwrap();
        let out = bounded_equational_purity(&a, 1, 1, &Caps::default()).unwrap();
        let w = out.witness().unwrap();
        assert_eq!(w.coefficients, vec![vec![2]]);
        assert_eq!(w.rhs, vec![2]);
        assert_eq!(w.solution, vec![1]);
        assert_eq!(w.describe(&b), "2x = 2");
        assert!(recheck_equation_witness(&a, w));

        let v = is_pure(&a, &Caps::default()).unwrap();
        assert!(!v.holds);
        assert!(matches!(v.witness, PurityWitness::Equation(_)));
    }

    #[test]
    fn whole_module_is_pure() {
        let b = z(6);
        let v = is_pure(&Submodule::whole(&b), &Caps::default()).unwrap();
        assert!(v.holds);
        let PurityWitness::Complement(c) = v.witness else {
            panic!()
        };
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn canonical_summand() {
        let s = direct_sum(&BaseRing::Integers, &[z(2), z(2)], &Caps::default())
            .unwrap()
            .module;
        let first = Submodule::new(&s, vec![0, 2]).unwrap();
        let v = is_pure(&first, &Caps::default()).unwrap();
        assert!(v.holds);
        let PurityWitness::Complement(c) = v.witness else {
            panic!()
        };
        assert_eq!(c.describe(), "{(0,0),(0,1)}");
    }

    #[test]
    fn zero_submodule_has_no_witness() {
        let b = z(8);
        let out = bounded_equational_purity_exhaustive(&Submodule::zero(&b), 2, 2, &Caps::default()).unwrap();
        assert!(out.witness().is_none());
    }

    #[test]
    fn pure_pair_has_no_witness_exhaustively() {
        let s = direct_sum(&BaseRing::Integers, &[z(2), z(4)], &Caps::default())
            .unwrap()
            .module;
        let summand = Submodule::generated(&s, &[s.element_by_name("(0,1)").unwrap()]).unwrap();
        assert!(is_pure(&summand, &Caps::default()).unwrap().holds);
        let out = bounded_equational_purity_exhaustive(&summand, 2, 2, &Caps::default()).unwrap();
        assert!(matches!(out, OracleOutcome::NotFound { reduced: false, .. }));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(7, 0), 1);
    }
}
