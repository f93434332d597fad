//! Reference implementations by exhaustive search, used to cross-check
//! the normal-form machinery on short words.

use std::collections::{BTreeSet, VecDeque};

use crate::coxeter::{Bond, Gen};
use crate::error::{Error, Result};
use crate::low::alternating;
use crate::system::CoxeterSystem;

use super::MonoidWord;

/// Every word equal to `word` in the monoid, found by applying the braid
/// relations in both directions. Relations preserve length, so the class
/// is finite.
pub fn congruence_class(system: &CoxeterSystem, word: &MonoidWord, cap: usize) -> Result<BTreeSet<Vec<Gen>>> {
    let m = system.matrix();
    let relations: Vec<(Vec<Gen>, Vec<Gen>)> = m
        .pairs()
        .filter_map(|(s, t)| match m.bond(s, t) {
            Bond::Finite(k) => Some((alternating(s, t, k as usize), alternating(t, s, k as usize))),
            Bond::Infinite => None,
        })
        .flat_map(|(a, b)| [(a.clone(), b.clone()), (b, a)])
        .collect();
    let mut seen: BTreeSet<Vec<Gen>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.letters().to_vec());
    queue.push_back(word.letters().to_vec());
    while let Some(w) = queue.pop_front() {
        for (lhs, rhs) in &relations {
            if lhs.len() > w.len() {
                continue;
            }
            for i in 0..=w.len() - lhs.len() {
                if w[i..i + lhs.len()] == lhs[..] {
                    let mut next = w.clone();
                    next.splice(i..i + lhs.len(), rhs.iter().copied());
                    if seen.insert(next.clone()) {
                        if seen.len() > cap {
                            return Err(Error::CapExceeded { what: "congruence class", cap });
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(seen)
}

pub fn words_equal(system: &CoxeterSystem, a: &MonoidWord, b: &MonoidWord, cap: usize) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    Ok(congruence_class(system, a, cap)?.contains(b.letters()))
}

/// Whether some word in the class of `g` starts with `f`.
pub fn left_divides(system: &CoxeterSystem, f: &MonoidWord, g: &MonoidWord, cap: usize) -> Result<bool> {
    if f.len() > g.len() {
        return Ok(false);
    }
    let f_class = congruence_class(system, f, cap)?;
    Ok(congruence_class(system, g, cap)?.iter().any(|w| f_class.contains(&w[..f.len()])))
}

/// All words of the given length over the generators.
pub fn all_words(system: &CoxeterSystem, len: usize) -> Vec<MonoidWord> {
    let gens: Vec<Gen> = system.generators().collect();
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w: Vec<Gen>| {
                gens.iter().map(move |&s| {
                    let mut next = w.clone();
                    next.push(s);
                    next
                })
            })
            .collect();
    }
    words.into_iter().map(MonoidWord::new).collect()
}
