use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::coxeter::Gen;
use crate::error::{Error, Result};
use crate::roots::RootId;
use crate::system::CoxeterSystem;
use crate::weak::{BitSet, Element, Side};

pub const DEFAULT_LOW_CAP: usize = 1_000_000;

/// The low elements of a Coxeter system, in shortlex order, with the
/// weak-order up-sets that make joins a bitset intersection.
#[derive(Debug, Clone)]
pub struct LowSet {
    elements: Vec<Element>,
    index: HashMap<Vec<Gen>, usize>,
    n1: Vec<Vec<RootId>>,
    // up[i] = { j : elements[i] <= elements[j] }
    up: Vec<BitSet>,
}

impl CoxeterSystem {
    /// `N^1(w) ⊆ Sigma`.
    pub fn is_low(&self, w: &Element) -> bool {
        self.n1_set(w).iter().all(|&id| self.is_small(id))
    }

    /// Breadth-first enumeration of the low elements by length.
    ///
    /// Level `k + 1` is built from `s * w` for low `w` of length `k` and
    /// `s` not a left descent of `w`; suffix closure of the low set makes
    /// this exhaustive.
    pub fn enumerate_low(&self, cap: usize) -> Result<LowSet> {
        let mut elements = vec![self.identity()];
        let mut n1 = vec![Vec::new()];
        let mut level = vec![self.identity()];
        while !level.is_empty() {
            let mut candidates: Vec<Element> = level
                .par_iter()
                .flat_map_iter(|w| {
                    self.generators()
                        .filter(|&s| !self.is_left_descent(w, s))
                        .map(|s| self.left_mul(s, w))
                        .collect::<Vec<_>>()
                })
                .collect();
            candidates.sort_unstable();
            candidates.dedup();
            let kept: Vec<(Element, Vec<RootId>)> = candidates
                .into_par_iter()
                .filter_map(|x| {
                    let roots = self.n1_set(&x);
                    roots.iter().all(|&id| self.is_small(id)).then_some((x, roots))
                })
                .collect();
            if elements.len() + kept.len() > cap {
                return Err(Error::CapExceeded { what: "low elements", cap });
            }
            level = kept.iter().map(|(x, _)| x.clone()).collect();
            for (x, roots) in kept {
                elements.push(x);
                n1.push(roots);
            }
        }
        Ok(LowSet::build(elements, n1))
    }
}

impl LowSet {
    fn build(elements: Vec<Element>, n1: Vec<Vec<RootId>>) -> Self {
        let index = elements.iter().enumerate().map(|(i, e)| (e.word().to_vec(), i)).collect();
        let up = elements
            .par_iter()
            .map(|u| {
                elements
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| w.len() >= u.len() && u.inversion_bits().is_subset(w.inversion_bits()))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        Self { elements, index, n1, up }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.index.get(w.word()).copied()
    }

    pub fn contains(&self, w: &Element) -> bool {
        self.index.contains_key(w.word())
    }

    /// Cached `N^1` of the `i`-th element.
    pub fn n1(&self, i: usize) -> &[RootId] {
        &self.n1[i]
    }

    /// Indices of the elements above the `i`-th one.
    pub fn up_set(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    /// Join of two members, as an index; `None` when they have no common
    /// upper bound.
    pub fn join(&self, i: usize, j: usize) -> Result<Option<usize>> {
        let mut common = self.up[i].clone();
        common.intersect_with(&self.up[j]);
        // Shortlex order puts a unique minimum first.
        let Some(least) = common.iter().next() else {
            return Ok(None);
        };
        if common.is_subset(&self.up[least]) {
            Ok(Some(least))
        } else {
            Err(Error::JoinAmbiguity(format!("{:?} and {:?}", self.elements[i].word(), self.elements[j].word())))
        }
    }

    /// Join of two elements of the set, by value.
    pub fn join_elements(&self, u: &Element, v: &Element) -> Result<Option<&Element>> {
        let (i, j) = match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => (i, j),
            (None, _) => return Err(Error::OutsideSupportedFamily(format!("{:?}", u.word()))),
            (_, None) => return Err(Error::OutsideSupportedFamily(format!("{:?}", v.word()))),
        };
        Ok(self.join(i, j)?.map(|k| &self.elements[k]))
    }

    /// Exhaustive check that the set contains the identity and the
    /// generators and is closed under suffix and join.
    pub fn check_closure(&self, system: &CoxeterSystem) -> ClosureReport {
        let mut report = ClosureReport::default();
        if !self.contains(&system.identity()) {
            report.missing_generators.push("1".into());
        }
        for s in system.generators() {
            if !self.contains(&system.generator_element(s)) {
                report.missing_generators.push(system.matrix().name(s).to_string());
            }
        }
        for w in &self.elements {
            for s in system.descents(w, Side::Left) {
                let v = system.left_mul(s, w);
                if !self.contains(&v) {
                    report.suffix_violations.push(system.format_element(&v));
                }
            }
        }
        let ambiguities: Vec<String> = (0..self.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                (i + 1..self.len())
                    .filter_map(move |j| self.join(i, j).err().map(|e| e.to_string()))
                    .collect::<Vec<_>>()
            })
            .collect();
        report.join_ambiguities = ambiguities;
        report
    }

    /// Distinct words, for diagnostics.
    pub fn words(&self) -> HashSet<Vec<Gen>> {
        self.index.keys().cloned().collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClosureReport {
    pub missing_generators: Vec<String>,
    pub suffix_violations: Vec<String>,
    pub join_ambiguities: Vec<String>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.missing_generators.is_empty() && self.suffix_violations.is_empty() && self.join_ambiguities.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{catalog, Bond, CatalogSpec, CoxeterMatrix};

    fn sys(ty: &str, rank: usize) -> CoxeterSystem {
        CoxeterSystem::new(catalog(&CatalogSpec { ty: ty.into(), rank: Some(rank), ..Default::default() }).unwrap())
            .unwrap()
    }

    #[test]
    fn identity_is_low() {
        let w = sys("affineA", 2);
        assert!(w.is_low(&w.identity()));
    }

    #[test]
    fn affine_c2_low_but_not_in_family() {
        let w = sys("affineC", 2);
        assert!(w.is_low(&w.element("1 3 2").unwrap()));
    }

    #[test]
    fn affine_a2_left_divisor_excluded() {
        let w = sys("affineA", 2);
        assert!(!w.is_low(&w.element("1 2 3").unwrap()));
        assert!(w.is_low(&w.element("1 2 3 2").unwrap()));
    }

    #[test]
    fn low_counts() {
        assert_eq!(sys("A", 2).enumerate_low(DEFAULT_LOW_CAP).unwrap().len(), 6);
        assert_eq!(sys("affineC", 2).enumerate_low(DEFAULT_LOW_CAP).unwrap().len(), 25);
        assert_eq!(sys("affineA", 2).enumerate_low(DEFAULT_LOW_CAP).unwrap().len(), 16);
    }

    #[test]
    fn low_cap() {
        let err = sys("affineA", 2).enumerate_low(10).unwrap_err();
        assert_eq!(err, Error::CapExceeded { what: "low elements", cap: 10 });
    }

    #[test]
    fn joins_in_the_low_set() {
        let w = sys("A", 2);
        let low = w.enumerate_low(DEFAULT_LOW_CAP).unwrap();
        let (s1, s2) = (w.element("1").unwrap(), w.element("2").unwrap());
        let j = low.join_elements(&s1, &s2).unwrap().unwrap();
        assert_eq!(*j, w.element("1 2 1").unwrap());
        assert_eq!(low.join_elements(&s1, &s1).unwrap().unwrap(), &s1);

        let inf = CoxeterSystem::new(CoxeterMatrix::from_bonds(2, &[(1, 2, Bond::Infinite)]).unwrap()).unwrap();
        let low = inf.enumerate_low(DEFAULT_LOW_CAP).unwrap();
        assert_eq!(low.len(), 3);
        let (a, b) = (inf.element("1").unwrap(), inf.element("2").unwrap());
        assert!(low.join_elements(&a, &b).unwrap().is_none());
    }

    #[test]
    fn closure_checks_pass() {
        for (ty, rank) in [("affineA", 2), ("affineC", 2), ("H", 3), ("affineB", 3)] {
            let w = sys(ty, rank);
            let low = w.enumerate_low(DEFAULT_LOW_CAP).unwrap();
            assert!(low.check_closure(&w).passed(), "{ty}{rank}");
        }
    }
}
