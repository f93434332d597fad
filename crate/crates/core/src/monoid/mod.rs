//! Artin–Tits monoid words and their greedy normal forms.

pub mod brute;

use crate::coxeter::Gen;
use crate::error::{Error, Result};
use crate::low::{GarsideFamily, LowSet};
use crate::system::CoxeterSystem;
use crate::weak::{Element, Side};

/// A positive word in the atoms; its length is `lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonoidWord {
    letters: Vec<Gen>,
}

impl MonoidWord {
    pub fn new(letters: Vec<Gen>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &MonoidWord) -> MonoidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NfKind {
    UnderlyingW,
    Family,
}

/// A greedy normal decomposition; entries are never the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub kind: NfKind,
    pub entries: Vec<Element>,
}

impl NormalForm {
    /// Sum of the entry lengths.
    pub fn lambda(&self) -> usize {
        self.entries.iter().map(Element::len).sum()
    }

    /// The entries written one after another.
    pub fn to_word(&self) -> MonoidWord {
        MonoidWord::new(self.entries.iter().flat_map(|e| e.word().iter().copied()).collect())
    }
}

impl CoxeterSystem {
    pub fn parse_monoid_word(&self, text: &str) -> Result<MonoidWord> {
        Ok(MonoidWord::new(self.parse_word(text)?))
    }

    /// Entries joined by ` | `, letters by raw generator names.
    pub fn format_normal_form(&self, nf: &NormalForm) -> String {
        nf.entries.iter().map(|e| self.format_word(e.word())).collect::<Vec<_>>().join(" | ")
    }

    /// Left-to-right domino: while a left descent `s` of `b` extends `a`
    /// on the right, move it across, then step back one pair.
    fn domino(&self, mut entries: Vec<Element>) -> Vec<Element> {
        entries.retain(|e| !e.is_identity());
        let mut i = 0;
        while i + 1 < entries.len() {
            let mut moved = false;
            while let Some(s) =
                self.descents(&entries[i + 1], Side::Left).into_iter().find(|&s| !self.is_right_descent(&entries[i], s))
            {
                entries[i] = self.right_mul(&entries[i], s);
                entries[i + 1] = self.left_mul(s, &entries[i + 1]);
                moved = true;
                if entries[i + 1].is_identity() {
                    entries.remove(i + 1);
                    break;
                }
            }
            if moved {
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        entries
    }

    /// Normal form with entries in W.
    pub fn w_normal_form(&self, word: &MonoidWord) -> NormalForm {
        let entries = word.letters().iter().map(|&s| self.generator_element(s)).collect();
        NormalForm { kind: NfKind::UnderlyingW, entries: self.domino(entries) }
    }

    /// Greatest member of `fam` below `w` in the weak order.
    pub fn family_head(&self, w: &Element, fam: &GarsideFamily) -> Result<Element> {
        let below: Vec<&Element> = fam.members().iter().filter(|f| self.weak_leq(f, w)).collect();
        let top = below.iter().max_by_key(|f| f.len()).copied().cloned().unwrap_or_else(|| self.identity());
        if below.iter().all(|f| self.weak_leq(f, &top)) {
            Ok(top)
        } else {
            Err(Error::JoinAmbiguity(format!("head below {}", self.format_element(w))))
        }
    }

    /// Head of a W-normal form inside the family.
    pub fn head_in_family(&self, nf: &NormalForm, fam: &GarsideFamily) -> Result<Element> {
        match nf.entries.first() {
            Some(w1) => self.family_head(w1, fam),
            None => Ok(self.identity()),
        }
    }

    /// Normal form with entries in `fam`, by repeated head peeling.
    pub fn f_normal_form(&self, word: &MonoidWord, fam: &GarsideFamily) -> Result<NormalForm> {
        let mut rest = self.w_normal_form(word).entries;
        let mut out = Vec::new();
        while !rest.is_empty() {
            let head = self.family_head(&rest[0], fam)?;
            for &s in head.word() {
                if rest.is_empty() || !self.is_left_descent(&rest[0], s) {
                    return Err(Error::InternalDivisionFailure(format!(
                        "{} does not divide the remainder",
                        self.format_element(&head)
                    )));
                }
                rest[0] = self.left_mul(s, &rest[0]);
                rest = self.domino(rest);
            }
            if head.is_identity() {
                return Err(Error::InternalDivisionFailure("empty head".into()));
            }
            out.push(head);
        }
        Ok(NormalForm { kind: NfKind::Family, entries: out })
    }

    /// Adjacent pairs `(x, y)` of `nf` whose product has a larger family
    /// head than `x`; empty when the decomposition is greedy.
    pub fn greediness_violations(&self, nf: &NormalForm, fam: &GarsideFamily) -> Vec<usize> {
        let mut bad = Vec::new();
        for (i, pair) in nf.entries.windows(2).enumerate() {
            let word = MonoidWord::new(pair.iter().flat_map(|e| e.word().iter().copied()).collect());
            let prefix = self.w_normal_form(&word);
            let w1 = &prefix.entries[0];
            let dividing = fam.members().iter().filter(|f| self.weak_leq(f, w1));
            if dividing.into_iter().any(|f| !self.weak_leq(f, &pair[0])) {
                bad.push(i);
            }
        }
        bad
    }

    pub fn monoid_eq(&self, a: &MonoidWord, b: &MonoidWord, fam: &GarsideFamily) -> Result<bool> {
        if a.len() != b.len() {
            return Ok(false);
        }
        Ok(self.f_normal_form(a, fam)? == self.f_normal_form(b, fam)?)
    }

    /// Whether `f` (as a simple element) left-divides the word in the monoid.
    pub fn left_divides(&self, f: &Element, word: &MonoidWord) -> bool {
        match self.w_normal_form(word).entries.first() {
            Some(w1) => self.weak_leq(f, w1),
            None => f.is_identity(),
        }
    }

    /// Right-lcm of two simple elements whose images are low; `None` when
    /// they have no common multiple.
    pub fn right_lcm_simple(&self, f: &Element, g: &Element, low: &LowSet) -> Result<Option<Element>> {
        for x in [f, g] {
            if !low.contains(x) {
                return Err(Error::OutsideSupportedFamily(self.format_element(x)));
            }
        }
        Ok(low.join_elements(f, g)?.cloned())
    }
}
