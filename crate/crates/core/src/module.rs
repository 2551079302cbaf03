use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::hom::ModHom;
use crate::ideal::LeftIdeal;
use crate::linear::{self, Linear};
use crate::ring::{negation_table, BaseRing};
use crate::submodule::Submodule;
use crate::validate::Validate;
use crate::{Caps, Error, Result};

/// A finite left module over a [`BaseRing`].
///
/// Elements are the indices `0..order`. Over a finite ring the action is a
/// full `ring order × order` table; over the integers it is derived from
/// repeated addition.
#[derive(Clone, Debug)]
pub struct FinModule {
    ring: BaseRing,
    order: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    action: Vec<usize>,
    add_orders: Vec<usize>,
    names: Option<Arc<Vec<String>>>,
    label: String,
}

impl PartialEq for FinModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.order == other.order
            && self.zero == other.zero
            && self.add == other.add
            && self.action == other.action
    }
}

impl Eq for FinModule {}

fn additive_orders(n: usize, add: &[usize], zero: usize) -> Vec<usize> {
    (0..n)
        .map(|x| {
            let mut cur = x;
            let mut k = 1;
            while cur != zero {
                cur = add[cur * n + x];
                k += 1;
                if k > n || cur >= n {
                    // not a group; validation reports it
                    return 0;
                }
            }
            k
        })
        .collect()
}

impl FinModule {
    fn assemble(ring: BaseRing, order: usize, add: Vec<usize>, zero: usize, action: Vec<usize>, label: String) -> Self {
        let neg = negation_table(order, &add, zero);
        let add_orders = additive_orders(order, &add, zero);
        FinModule {
            ring,
            order,
            add,
            neg,
            zero,
            action,
            add_orders,
            names: None,
            label,
        }
    }

    /// Module from raw tables, checking dimensions only. `action` is
    /// `action[r][m] = r·m` and must be present exactly for finite rings.
    pub fn from_tables(
        ring: BaseRing,
        add: Vec<Vec<usize>>,
        zero: usize,
        action: Option<Vec<Vec<usize>>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = add.len();
        if n == 0 {
            return Err(Error::Argument("a module needs at least one element".into()));
        }
        if zero >= n {
            return Err(Error::Argument(format!("zero index {zero} outside 0..{n}")));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in add {
            if row.len() != n {
                return Err(Error::Dimension {
                    what: "module addition table",
                    expected: n,
                    found: row.len(),
                });
            }
            flat.extend(row);
        }
        let action = match (&ring, action) {
            (BaseRing::Integers, None) => Vec::new(),
            (BaseRing::Integers, Some(_)) => {
                return Err(Error::Argument(
                    "integer modules take their action from addition".into(),
                ))
            }
            (BaseRing::Finite(_), None) => {
                return Err(Error::Argument("missing action table".into()));
            }
            (BaseRing::Finite(r), Some(rows)) => {
                if rows.len() != r.order() {
                    return Err(Error::Dimension {
                        what: "action table rows",
                        expected: r.order(),
                        found: rows.len(),
                    });
                }
                let mut act = Vec::with_capacity(r.order() * n);
                for row in rows {
                    if row.len() != n {
                        return Err(Error::Dimension {
                            what: "action table columns",
                            expected: n,
                            found: row.len(),
                        });
                    }
                    act.extend(row);
                }
                act
            }
        };
        Ok(Self::assemble(ring, n, flat, zero, action, label.into()))
    }

    /// Like [`FinModule::from_tables`] but rejects tables violating a module
    /// axiom.
    pub fn new(
        ring: BaseRing,
        add: Vec<Vec<usize>>,
        zero: usize,
        action: Option<Vec<Vec<usize>>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let m = Self::from_tables(ring, add, zero, action, label)?;
        let report = m.validate();
        if report.is_empty() {
            Ok(m)
        } else {
            Err(Error::Invalid { what: "module", report })
        }
    }

    pub fn zero_module(ring: &BaseRing) -> Self {
        let action = vec![0; ring.table().map_or(0, |r| r.order())];
        Self::assemble(ring.clone(), 1, vec![0], 0, action, "0".into())
    }

    /// `Z_n` as an abelian group (module over the integers).
    pub fn cyclic_group(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("Z_0 is not finite".into()));
        }
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Ok(Self::assemble(
            BaseRing::Integers,
            n,
            add,
            0,
            Vec::new(),
            format!("Z_{n}"),
        ))
    }

    /// The ring as a left module over itself.
    pub fn regular(ring: &BaseRing) -> Result<Self> {
        let r = ring.require_finite()?;
        Ok(Self::assemble(
            ring.clone(),
            r.order(),
            r.add_table().to_vec(),
            r.zero(),
            r.mul_table().to_vec(),
            r.label().to_string(),
        ))
    }

    /// The cyclic module `R / R(n·1)`; over the integers this is `Z_n`.
    pub fn cyclic(ring: &BaseRing, n: usize) -> Result<Self> {
        match ring {
            BaseRing::Integers => Self::cyclic_group(n),
            BaseRing::Finite(r) => {
                let regular = Arc::new(Self::regular(ring)?);
                let gen = r.from_int(n as i64);
                let sub = Submodule::generated(&regular, &[gen])?;
                let mut q = regular.quotient(&sub)?.0;
                q.label = if sub.len() == 1 {
                    String::from(r.label())
                } else {
                    format!("{}/{}", r.label(), n)
                };
                Ok(q)
            }
        }
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// `r·m` for a ring element index `r`. Panics over the integers.
    pub fn act(&self, r: usize, m: usize) -> usize {
        assert!(!self.ring.is_integers(), "use act_int for modules over the integers");
        self.action[r * self.order + m]
    }

    /// `n·m` for an integer `n` (repeated addition).
    pub fn act_int(&self, n: i64, m: usize) -> usize {
        let ord = self.add_orders[m].max(1) as i64;
        let k = n.rem_euclid(ord);
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.add(acc, m);
        }
        acc
    }

    /// Additive order of `m`.
    pub fn additive_order(&self, m: usize) -> usize {
        self.add_orders[m]
    }

    /// Least common multiple of the additive orders; 1 for the zero module.
    pub fn exponent(&self) -> u64 {
        self.add_orders
            .iter()
            .fold(1u64, |e, &o| crate::arith::lcm(e, o.max(1) as u64))
    }

    /// Display name of an element, e.g. `(2,0)` in a direct sum.
    pub fn element_name(&self, m: usize) -> String {
        match &self.names {
            Some(names) => names[m].clone(),
            None => m.to_string(),
        }
    }

    /// Index of the element with the given display name.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        (0..self.order).find(|&m| self.element_name(m) == name)
    }

    pub(crate) fn set_names(&mut self, names: Vec<String>) {
        self.names = Some(Arc::new(names));
    }

    pub(crate) fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub(crate) fn action_table(&self) -> &[usize] {
        &self.action
    }

    /// `ann(m)`: over a finite ring `{r : r·m = 0}`, over the integers the
    /// ideal generated by the additive order of `m`.
    pub fn annihilator(&self, m: usize) -> LeftIdeal {
        match &self.ring {
            BaseRing::Integers => LeftIdeal::Integers {
                gen: self.add_orders[m] as u64,
            },
            BaseRing::Finite(r) => LeftIdeal::Finite {
                ring: r.clone(),
                elements: (0..r.order()).filter(|&s| self.act(s, m) == self.zero).collect(),
            },
        }
    }

    /// Quotient `M / N` together with the projection table. Cosets are
    /// indexed in ascending order of their smallest element.
    pub fn quotient(self: &Arc<Self>, sub: &Submodule) -> Result<(FinModule, Vec<usize>)> {
        if !Arc::ptr_eq(sub.parent(), self) && sub.parent().as_ref() != self.as_ref() {
            return Err(Error::Argument("submodule of a different module".into()));
        }
        let n = self.order;
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for m in 0..n {
            if coset[m] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(m);
            for &s in sub.elements() {
                coset[self.add(m, s)] = idx;
            }
        }
        let q = reps.len();
        let mut add = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                add.push(coset[self.add(a, b)]);
            }
        }
        let action = match &self.ring {
            BaseRing::Integers => Vec::new(),
            BaseRing::Finite(r) => {
                let mut act = Vec::with_capacity(r.order() * q);
                for s in 0..r.order() {
                    for &a in &reps {
                        act.push(coset[self.act(s, a)]);
                    }
                }
                act
            }
        };
        let zero = coset[self.zero];
        let mut module = Self::assemble(
            self.ring.clone(),
            q,
            add,
            zero,
            action,
            format!("{}/{}", self.label, sub.module().label()),
        );
        module.set_names(reps.iter().map(|&r| format!("[{}]", self.element_name(r))).collect());
        Ok((module, coset))
    }

    /// The identity endomorphism.
    pub fn identity(self: &Arc<Self>) -> ModHom {
        ModHom::from_table_unchecked(self.clone(), self.clone(), (0..self.order).collect())
    }
}

impl Linear for FinModule {
    fn size(&self) -> usize {
        self.order
    }
    fn zero(&self) -> usize {
        self.zero
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }
    fn scalars(&self) -> usize {
        self.ring.scalar_count()
    }
    fn scale(&self, s: usize, x: usize) -> usize {
        match self.ring {
            BaseRing::Integers => x,
            BaseRing::Finite(_) => self.action[s * self.order + x],
        }
    }
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Arc<FinModule>,
    pub injections: Vec<ModHom>,
    pub projections: Vec<ModHom>,
}

/// `M_1 ⊕ … ⊕ M_k`, elements indexed lexicographically (first component
/// most significant). The empty sum is the zero module over `ring`.
pub fn direct_sum(ring: &BaseRing, parts: &[Arc<FinModule>], caps: &Caps) -> Result<DirectSum> {
    if parts.iter().any(|m| m.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let order = parts.iter().try_fold(1usize, |acc, m| acc.checked_mul(m.order()));
    let order = order.unwrap_or(usize::MAX);
    Caps::check("direct sum order", order, caps.direct_sum_order)?;
    let k = parts.len();
    let radix: Vec<usize> = parts.iter().map(|m| m.order()).collect();
    let mut weights = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        weights[i] = weights[i + 1] * radix[i + 1];
    }
    let decode = |x: usize| -> Vec<usize> { (0..k).map(|i| x / weights[i] % radix[i]).collect() };
    let encode = |c: &[usize]| -> usize { c.iter().zip(&weights).map(|(a, w)| a * w).sum() };
    let coords: Vec<Vec<usize>> = (0..order).map(decode).collect();

    let mut add = Vec::with_capacity(order * order);
    let mut buf = vec![0; k];
    for x in &coords {
        for y in &coords {
            for i in 0..k {
                buf[i] = parts[i].add(x[i], y[i]);
            }
            add.push(encode(&buf));
        }
    }
    let action = match ring {
        BaseRing::Integers => Vec::new(),
        BaseRing::Finite(r) => {
            let mut act = Vec::with_capacity(r.order() * order);
            for s in 0..r.order() {
                for x in &coords {
                    for i in 0..k {
                        buf[i] = parts[i].act(s, x[i]);
                    }
                    act.push(encode(&buf));
                }
            }
            act
        }
    };
    let zero_coords: Vec<usize> = parts.iter().map(|m| m.zero()).collect();
    let zero = encode(&zero_coords);
    let label = if k == 0 {
        String::from("0")
    } else {
        // Sub and quotient labels bind looser than `⊕`.
        let labels: Vec<String> = parts
            .iter()
            .map(|m| {
                let l = m.label();
                if k > 1 && (l.contains('≤') || l.contains('/')) {
                    format!("({l})")
                } else {
                    String::from(l)
                }
            })
            .collect();
        labels.join(" ⊕ ")
    };
    let mut module = FinModule::assemble(ring.clone(), order, add, zero, action, label);
    if k > 0 {
        module.set_names(
            coords
                .iter()
                .map(|c| {
                    let names: Vec<String> = c.iter().enumerate().map(|(i, &a)| parts[i].element_name(a)).collect();
                    format!("({})", names.join(","))
                })
                .collect(),
        );
    }
    let module = Arc::new(module);

    let mut injections = Vec::with_capacity(k);
    let mut projections = Vec::with_capacity(k);
    for (i, part) in parts.iter().enumerate() {
        let inj = (0..part.order())
            .map(|a| {
                let mut c = zero_coords.clone();
                c[i] = a;
                encode(&c)
            })
            .collect();
        injections.push(ModHom::from_table_unchecked(part.clone(), module.clone(), inj));
        let proj = coords.iter().map(|c| c[i]).collect();
        projections.push(ModHom::from_table_unchecked(module.clone(), part.clone(), proj));
    }
    Ok(DirectSum {
        module,
        injections,
        projections,
    })
}

/// `A × B` over the product ring `r1 × r2`, with `(r, s)·(a, b) = (ra, sb)`.
/// `ring` must be the product ring built by [`crate::make_product_ring`]
/// from the rings of `a` and `b`.
pub fn product_module(ring: &BaseRing, a: &FinModule, b: &FinModule) -> Result<FinModule> {
    let r = ring.require_finite()?;
    let (r1, r2) = (a.ring().require_finite()?, b.ring().require_finite()?);
    if r1.order() * r2.order() != r.order() {
        return Err(Error::RingMismatch);
    }
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut add = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            add.push(a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb));
        }
    }
    let mut action = Vec::with_capacity(r.order() * n);
    for s in 0..r.order() {
        let (s1, s2) = (s / r2.order(), s % r2.order());
        for x in 0..n {
            action.push(a.act(s1, x / nb) * nb + b.act(s2, x % nb));
        }
    }
    let mut m = FinModule::assemble(
        ring.clone(),
        n,
        add,
        a.zero() * nb + b.zero(),
        action,
        format!("{} × {}", a.label(), b.label()),
    );
    m.set_names(
        (0..n)
            .map(|x| format!("({},{})", a.element_name(x / nb), b.element_name(x % nb)))
            .collect(),
    );
    Ok(m)
}

impl FinModule {
    /// Span of the given elements as a sorted element list.
    pub fn span(&self, gens: &[usize]) -> Vec<usize> {
        linear::span(self, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_cyclic_ring;
    use crate::validate::validate;

    #[test]
    fn empty_direct_sum_is_zero() {
        let ds = direct_sum(&BaseRing::Integers, &[], &Caps::default()).unwrap();
        assert!(ds.module.is_zero());
    }

    #[test]
    fn klein_four_group() {
        let z2 = Arc::new(FinModule::cyclic_group(2).unwrap());
        let ds = direct_sum(&BaseRing::Integers, &[z2.clone(), z2], &Caps::default()).unwrap();
        assert_eq!(ds.module.order(), 4);
        assert_eq!(ds.module.exponent(), 2);
        assert!(validate(ds.module.as_ref()).is_empty());
        for (inj, proj) in ds.injections.iter().zip(&ds.projections) {
            assert!(validate(inj).is_empty());
            assert!(validate(proj).is_empty());
            let round = inj.then(proj).unwrap();
            assert!(round.is_identity());
        }
    }

    #[test]
    fn regular_witness_module() {
        let z4 = make_cyclic_ring(4).unwrap();
        let reg = Arc::new(FinModule::regular(&z4).unwrap());
        let two = Submodule::generated(&reg, &[2]).unwrap();
        let ds = direct_sum(&z4, &[two.module().clone(), reg], &Caps::default()).unwrap();
        assert_eq!(ds.module.order(), 8);
        assert!(validate(ds.module.as_ref()).is_empty());
        assert!(ds.module.element_by_name("(2,0)").is_some());
    }

    #[test]
    fn direct_sum_capacity() {
        let z4 = Arc::new(FinModule::cyclic_group(4).unwrap());
        let parts = vec![z4.clone(), z4.clone(), z4.clone(), z4.clone(), z4];
        let err = direct_sum(&BaseRing::Integers, &parts, &Caps::default()).unwrap_err();
        assert!(err.is_capacity());
    }

    #[test]
    fn cyclic_over_finite_ring() {
        let z4 = make_cyclic_ring(4).unwrap();
        let m = FinModule::cyclic(&z4, 2).unwrap();
        assert_eq!(m.order(), 2);
        assert!(validate(&m).is_empty());
        let ann = m.annihilator(1);
        assert_eq!(ann.elements().unwrap(), &[0, 2]);
        let whole = FinModule::cyclic(&z4, 4).unwrap();
        assert_eq!(whole.order(), 4);
    }

    #[test]
    fn annihilators() {
        let z2 = FinModule::cyclic_group(2).unwrap();
        assert_eq!(z2.annihilator(1), LeftIdeal::integers(2));
        assert_eq!(z2.annihilator(0), LeftIdeal::integers(1));
        let z4 = make_cyclic_ring(4).unwrap();
        let m = FinModule::regular(&z4).unwrap();
        assert!(m.annihilator(0).is_whole());
    }

    #[test]
    fn integer_action() {
        let z6 = FinModule::cyclic_group(6).unwrap();
        assert_eq!(z6.act_int(4, 5), 2);
        assert_eq!(z6.act_int(-1, 1), 5);
        assert_eq!(z6.exponent(), 6);
    }

    #[test]
    fn product_modules_validate() {
        let z2 = make_cyclic_ring(2).unwrap();
        let z3 = make_cyclic_ring(3).unwrap();
        let p = crate::ring::make_product_ring(&z2, &z3).unwrap();
        let a = FinModule::regular(&z2).unwrap();
        let b = FinModule::regular(&z3).unwrap();
        let m = product_module(&p, &a, &b).unwrap();
        assert_eq!(m.order(), 6);
        assert!(validate(&m).is_empty());
    }
}
