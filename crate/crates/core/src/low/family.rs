use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::system::CoxeterSystem;
use crate::weak::{Element, Side};

use super::lowset::LowSet;

/// How an element entered the closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Seed,
    SuffixOf(Element),
    JoinOf(Element, Element),
    Unrecorded,
}

/// The projection to W of the smallest Garside family, with extremal
/// elements and a provenance record per member.
#[derive(Debug, Clone)]
pub struct GarsideFamily {
    members: Vec<Element>,
    index: HashMap<Element, usize>,
    provenance: Vec<Provenance>,
    extremal: Vec<Element>,
}

impl GarsideFamily {
    /// A family from an arbitrary element set; provenance is left unrecorded
    /// except for the seeds.
    pub fn from_elements(system: &CoxeterSystem, elements: impl IntoIterator<Item = Element>) -> Self {
        let members: BTreeSet<Element> = elements.into_iter().collect();
        let entries = members
            .into_iter()
            .map(|e| {
                let p = if e.len() <= 1 { Provenance::Seed } else { Provenance::Unrecorded };
                (e, p)
            })
            .collect();
        Self::assemble(system, entries)
    }

    fn assemble(system: &CoxeterSystem, mut entries: Vec<(Element, Provenance)>) -> Self {
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let (members, provenance): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let index = members.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut fam = Self { members, index, provenance, extremal: Vec::new() };
        fam.extremal = fam
            .members
            .iter()
            .filter(|x| {
                system
                    .generators()
                    .filter(|&s| !system.is_left_descent(x, s))
                    .all(|s| !fam.contains(&system.left_mul(s, x)))
            })
            .cloned()
            .collect();
        fam
    }

    /// The same family with one member dropped.
    pub fn without(&self, system: &CoxeterSystem, w: &Element) -> Self {
        let entries = self
            .members
            .iter()
            .zip(&self.provenance)
            .filter(|(e, _)| *e != w)
            .map(|(e, p)| (e.clone(), p.clone()))
            .collect();
        Self::assemble(system, entries)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in shortlex order.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn contains(&self, w: &Element) -> bool {
        self.index.contains_key(w)
    }

    pub fn provenance(&self, w: &Element) -> Option<&Provenance> {
        self.index.get(w).map(|&i| &self.provenance[i])
    }

    /// Suffix-maximal members, in shortlex order.
    pub fn extremal(&self) -> &[Element] {
        &self.extremal
    }
}

impl CoxeterSystem {
    /// Closure of `{e} ∪ S` under suffix and join, computed inside `low`.
    pub fn smallest_family(&self, low: &LowSet) -> Result<GarsideFamily> {
        self.smallest_family_observed(low, |_, _, _| {})
    }

    /// As [`smallest_family`](Self::smallest_family), reporting every join
    /// evaluated as `(u, v, join)`.
    pub fn smallest_family_observed(
        &self,
        low: &LowSet,
        mut observe: impl FnMut(&Element, &Element, Option<&Element>),
    ) -> Result<GarsideFamily> {
        let locate =
            |w: &Element| -> Result<usize> { low.index_of(w).ok_or_else(|| Error::EscapedLow(self.format_element(w))) };
        let mut provenance: HashMap<usize, Provenance> = HashMap::new();
        let mut pending: BTreeSet<usize> = BTreeSet::new();
        let mut add = |i: usize, p: Provenance, pending: &mut BTreeSet<usize>| {
            if let std::collections::hash_map::Entry::Vacant(slot) = provenance.entry(i) {
                slot.insert(p);
                pending.insert(i);
            }
        };
        add(locate(&self.identity())?, Provenance::Seed, &mut pending);
        for s in self.generators() {
            add(locate(&self.generator_element(s))?, Provenance::Seed, &mut pending);
        }

        let mut processed: Vec<usize> = Vec::new();
        // Indices are shortlex positions, so the smallest pending index is
        // the next element by (length, word).
        while let Some(x) = pending.pop_first() {
            let xe = low.get(x);
            for s in self.descents(xe, Side::Left) {
                let y = locate(&self.left_mul(s, xe))?;
                add(y, Provenance::SuffixOf(xe.clone()), &mut pending);
            }
            for &p in &processed {
                let j = low.join(p, x)?;
                observe(low.get(p), xe, j.map(|k| low.get(k)));
                if let Some(k) = j {
                    add(k, Provenance::JoinOf(low.get(p).clone(), xe.clone()), &mut pending);
                }
            }
            processed.push(x);
        }
        let entries: Vec<(Element, Provenance)> =
            provenance.into_iter().map(|(i, p)| (low.get(i).clone(), p)).collect();
        Ok(GarsideFamily::assemble(self, entries))
    }

    /// Checks seeds, suffix closure, join closure inside `low`, and that
    /// every provenance chain reaches the seeds.
    pub fn verify_family(&self, fam: &GarsideFamily, low: &LowSet) -> Result<FamilyReport> {
        let mut report = FamilyReport::default();
        let seeds: Vec<Element> =
            std::iter::once(self.identity()).chain(self.generators().map(|s| self.generator_element(s))).collect();
        for s in &seeds {
            if !fam.contains(s) {
                report.missing_seeds.push(self.format_element(s));
            }
        }
        for w in fam.members() {
            for s in self.descents(w, Side::Left) {
                let v = self.left_mul(s, w);
                if !fam.contains(&v) {
                    report.suffix_violations.push((self.format_element(w), self.format_element(&v)));
                }
            }
        }
        let in_low: Vec<Option<usize>> = fam.members().iter().map(|w| low.index_of(w)).collect();
        for (a, ia) in in_low.iter().enumerate() {
            let Some(ia) = *ia else {
                report.outside_low.push(self.format_element(&fam.members()[a]));
                continue;
            };
            for ib in in_low[a + 1..].iter().flatten() {
                if let Some(k) = low.join(ia, *ib)? {
                    if !fam.contains(low.get(k)) {
                        report.join_violations.push((
                            self.format_element(&fam.members()[a]),
                            self.format_element(low.get(*ib)),
                            self.format_element(low.get(k)),
                        ));
                    }
                }
            }
        }
        let mut grounded: HashMap<&Element, bool> = HashMap::new();
        for w in fam.members() {
            if !self.is_grounded(fam, w, &mut grounded) {
                report.ungrounded.push(self.format_element(w));
            }
        }
        Ok(report)
    }

    fn is_grounded<'a>(&self, fam: &'a GarsideFamily, w: &'a Element, memo: &mut HashMap<&'a Element, bool>) -> bool {
        if let Some(&g) = memo.get(w) {
            return g;
        }
        // Guards against cycles in hand-built provenance.
        memo.insert(w, false);
        let Some(&i) = fam.index.get(w) else {
            return false;
        };
        let ok = match &fam.provenance[i] {
            Provenance::Seed => w.len() <= 1,
            Provenance::SuffixOf(x) => {
                fam.index.get_key_value(x).is_some_and(|(k, _)| self.is_suffix(w, k) && self.is_grounded(fam, k, memo))
            }
            Provenance::JoinOf(a, b) => {
                let (Some((ka, _)), Some((kb, _))) = (fam.index.get_key_value(a), fam.index.get_key_value(b)) else {
                    return false;
                };
                self.is_grounded(fam, ka, memo) && self.is_grounded(fam, kb, memo)
            }
            Provenance::Unrecorded => false,
        };
        memo.insert(w, ok);
        ok
    }
}

/// Findings of [`CoxeterSystem::verify_family`]; empty lists mean the check passed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyReport {
    pub missing_seeds: Vec<String>,
    /// `(w, s·w)` with `s·w` missing.
    pub suffix_violations: Vec<(String, String)>,
    /// `(u, v, u ∨ v)` with the join missing.
    pub join_violations: Vec<(String, String, String)>,
    pub outside_low: Vec<String>,
    pub ungrounded: Vec<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.missing_seeds.is_empty()
            && self.suffix_violations.is_empty()
            && self.join_violations.is_empty()
            && self.outside_low.is_empty()
            && self.ungrounded.is_empty()
    }
}
