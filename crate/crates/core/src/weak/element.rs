//! Coxeter group elements as canonical reduced words.
//!
//! Sides follow one fixed dictionary: `N(w)` is the LEFT inversion set
//! `Phi+ ∩ w(Phi-)`, the order is the RIGHT weak order (`u <= w` when a
//! reduced word of `u` is a prefix of one of `w`), prefixes are left
//! divisors and suffixes are right divisors.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::hash::{Hash, Hasher};

use super::bitset::BitSet;
use crate::coxeter::Gen;
use crate::error::Result;
use crate::roots::{RootId, RootRef};
use crate::system::CoxeterSystem;

/// A group element. The word is the lexicographically smallest reduced word;
/// `inversions[i]` is the root `s_1 ... s_{i-1}(alpha_{s_i})` of that word.
#[derive(Debug, Clone)]
pub struct Element {
    word: Vec<Gen>,
    inversions: Vec<RootId>,
    bits: BitSet,
}

impl Element {
    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// The inversion roots in word order.
    pub fn inversion_roots(&self) -> &[RootId] {
        &self.inversions
    }

    /// `N(w)` as a bitset over registry ids.
    pub fn inversion_bits(&self) -> &BitSet {
        &self.bits
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

/// Shortlex on canonical words.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `N(w)` with its owner.
#[derive(Debug, Clone)]
pub struct InversionData<'a> {
    pub owner: &'a Element,
    pub roots: Vec<RootId>,
}

impl CoxeterSystem {
    pub fn identity(&self) -> Element {
        Element { word: Vec::new(), inversions: Vec::new(), bits: BitSet::new() }
    }

    pub fn generator_element(&self, s: Gen) -> Element {
        self.element_unchecked(vec![s])
    }

    /// Inversion roots of a word assumed reduced.
    fn inversion_list(&self, word: &[Gen]) -> Vec<RootRef> {
        (0..word.len())
            .map(|i| self.registry().apply_word(self.space(), &word[..i], RootRef::positive(word[i].0 as RootId)))
            .collect()
    }

    /// Lexicographically smallest reduced word, by repeatedly peeling the
    /// smallest left descent.
    fn canonicalize(&self, mut word: Vec<Gen>, mut roots: Vec<RootRef>) -> Vec<Gen> {
        let mut out = Vec::with_capacity(word.len());
        while !word.is_empty() {
            let (pos, s) = roots
                .iter()
                .enumerate()
                .filter_map(|(i, r)| self.simple_of(r.id).map(|s| (i, s)))
                .min_by_key(|&(_, s)| s)
                .expect("a nonempty reduced word has a left descent");
            out.push(s);
            word.remove(pos);
            roots.remove(pos);
            for r in &mut roots[pos..] {
                *r = self.reflect(s, *r);
            }
        }
        out
    }

    fn finish(&self, word: Vec<Gen>, roots: Vec<RootRef>) -> Element {
        let canonical = self.canonicalize(word, roots);
        let inversions: Vec<RootId> = self.inversion_list(&canonical).into_iter().map(|r| r.id).collect();
        let bits = inversions.iter().map(|&id| id as usize).collect();
        Element { word: canonical, inversions, bits }
    }

    fn element_unchecked(&self, word: Vec<Gen>) -> Element {
        let roots = self.inversion_list(&word);
        self.finish(word, roots)
    }

    /// The element of an arbitrary word, reduced by the exchange condition.
    pub fn reduce_word(&self, word: &[Gen]) -> Element {
        let mut reduced: Vec<Gen> = Vec::with_capacity(word.len());
        let mut roots: Vec<RootRef> = Vec::with_capacity(word.len());
        for &s in word {
            let image = self.registry().apply_word(self.space(), &reduced, RootRef::positive(s.0 as RootId));
            if !image.negative {
                reduced.push(s);
                roots.push(image);
            } else {
                let pos =
                    roots.iter().position(|r| r.id == image.id).expect("negative image is an inversion of the prefix");
                reduced.remove(pos);
                roots = self.inversion_list(&reduced);
            }
        }
        self.finish(reduced, roots)
    }

    /// Parses and reduces a word.
    pub fn element(&self, text: &str) -> Result<Element> {
        Ok(self.reduce_word(&self.parse_word(text)?))
    }

    /// True when the word has no shorter expression.
    pub fn is_reduced(&self, word: &[Gen]) -> bool {
        (0..word.len()).all(|i| {
            !self.registry().apply_word(self.space(), &word[..i], RootRef::positive(word[i].0 as RootId)).negative
        })
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Element {
        let mut word = u.word.clone();
        word.extend_from_slice(&v.word);
        self.reduce_word(&word)
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let word: Vec<Gen> = w.word.iter().rev().copied().collect();
        self.element_unchecked(word)
    }

    /// `s * w`.
    pub fn left_mul(&self, s: Gen, w: &Element) -> Element {
        let roots: Vec<RootRef> = w.inversions.iter().map(|&id| RootRef::positive(id)).collect();
        match w.inversions.iter().position(|&id| id == s.0 as RootId) {
            Some(pos) => {
                let mut word = w.word.clone();
                let mut roots = roots;
                word.remove(pos);
                roots.remove(pos);
                for r in &mut roots[pos..] {
                    *r = self.reflect(s, *r);
                }
                self.finish(word, roots)
            }
            None => {
                let mut word = Vec::with_capacity(w.len() + 1);
                word.push(s);
                word.extend_from_slice(&w.word);
                let mut new_roots = Vec::with_capacity(w.len() + 1);
                new_roots.push(RootRef::positive(s.0 as RootId));
                new_roots.extend(roots.into_iter().map(|r| self.reflect(s, r)));
                self.finish(word, new_roots)
            }
        }
    }

    /// `w * s`.
    pub fn right_mul(&self, w: &Element, s: Gen) -> Element {
        let mut word = w.word.clone();
        word.push(s);
        self.reduce_word(&word)
    }

    /// `w(alpha_s)`.
    pub fn image_of_simple(&self, w: &Element, s: Gen) -> RootRef {
        self.registry().apply_word(self.space(), &w.word, RootRef::positive(s.0 as RootId))
    }

    pub fn is_left_descent(&self, w: &Element, s: Gen) -> bool {
        w.bits.contains(s.index())
    }

    pub fn is_right_descent(&self, w: &Element, s: Gen) -> bool {
        self.image_of_simple(w, s).negative
    }

    /// Left: `{s : l(sw) < l(w)}`; right: `{s : l(ws) < l(w)}`.
    pub fn descents(&self, w: &Element, side: Side) -> Vec<Gen> {
        self.generators()
            .filter(|&s| match side {
                Side::Left => self.is_left_descent(w, s),
                Side::Right => self.is_right_descent(w, s),
            })
            .collect()
    }

    pub fn inversion_set<'a>(&self, w: &'a Element) -> InversionData<'a> {
        let mut roots = w.inversions.clone();
        roots.sort_unstable();
        InversionData { owner: w, roots }
    }

    /// `u <= w` in the right weak order: `N(u) ⊆ N(w)`.
    pub fn weak_leq(&self, u: &Element, w: &Element) -> bool {
        u.len() <= w.len() && u.bits.is_subset(&w.bits)
    }

    /// Roots `alpha` of `N(w)` with `l(s_alpha w) = l(w) - 1`.
    ///
    /// Position `i` contributes exactly when the word with letter `i`
    /// deleted is still reduced.
    pub fn n1_set(&self, w: &Element) -> Vec<RootId> {
        let mut out: Vec<RootId> = (0..w.len())
            .filter(|&i| {
                let mut shorter = w.word.clone();
                shorter.remove(i);
                self.is_reduced(&shorter)
            })
            .map(|i| w.inversions[i])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All right divisors of `w`, by peeling left descents; shortlex order.
    pub fn suffixes(&self, w: &Element) -> Vec<Element> {
        let mut seen: HashSet<Element> = HashSet::new();
        let mut stack = vec![w.clone()];
        seen.insert(w.clone());
        while let Some(x) = stack.pop() {
            for s in self.descents(&x, Side::Left) {
                let y = self.left_mul(s, &x);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        let ordered: BTreeSet<Element> = seen.into_iter().collect();
        ordered.into_iter().collect()
    }

    /// `v` is a right divisor of `w`: `l(w v^{-1}) = l(w) - l(v)`.
    pub fn is_suffix(&self, v: &Element, w: &Element) -> bool {
        if v.len() > w.len() {
            return false;
        }
        let quotient = self.multiply(w, &self.inverse(v));
        quotient.len() + v.len() == w.len()
    }

    pub fn format_element(&self, w: &Element) -> String {
        self.format_element_word(&w.word)
    }
}
