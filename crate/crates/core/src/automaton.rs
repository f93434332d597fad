//! The canonical automaton of reduced words, with states the sets of small
//! roots `Sigma ∩ N(u^-1)` reached after reading a prefix `u`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::coxeter::Gen;
use crate::error::{Error, Result};
use crate::roots::{RootId, SmallRootTable, Transition};
use crate::system::CoxeterSystem;
use crate::weak::Element;

pub const DEFAULT_STATE_CAP: usize = 10_000_000;

#[derive(Debug, Clone)]
pub struct CanonicalAutomaton {
    rank: usize,
    states: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    // delta[q][s]
    delta: Vec<Vec<Option<usize>>>,
}

impl CanonicalAutomaton {
    /// Breadth-first from the empty state. Reading `s` from `X` is defined
    /// iff `alpha_s ∉ X` and leads to `{alpha_s} ∪ (s(X) ∩ Sigma)`.
    pub fn build(table: &SmallRootTable, cap: usize) -> Result<Self> {
        let rank = table.rank();
        let mut auto =
            Self { rank, states: vec![Vec::new()], index: HashMap::from([(Vec::new(), 0)]), delta: Vec::new() };
        let mut q = 0;
        while q < auto.states.len() {
            let mut row = Vec::with_capacity(rank);
            for s in 0..rank {
                let current = &auto.states[q];
                if current.binary_search(&(s as u32)).is_ok() {
                    row.push(None);
                    continue;
                }
                let mut next: Vec<u32> = current
                    .iter()
                    .filter_map(|&i| match table.transition(i as usize, Gen(s as u8)) {
                        Transition::Small(j) => Some(j as u32),
                        _ => None,
                    })
                    .collect();
                next.push(s as u32);
                next.sort_unstable();
                next.dedup();
                let target = match auto.index.get(&next) {
                    Some(&t) => t,
                    None => {
                        if auto.states.len() >= cap {
                            return Err(Error::CapExceeded { what: "automaton states", cap });
                        }
                        let t = auto.states.len();
                        auto.index.insert(next.clone(), t);
                        auto.states.push(next);
                        t
                    }
                };
                row.push(Some(target));
            }
            auto.delta.push(row);
            q += 1;
        }
        Ok(auto)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Small-root indices of state `q`, sorted.
    pub fn state(&self, q: usize) -> &[u32] {
        &self.states[q]
    }

    pub fn step(&self, q: usize, s: Gen) -> Option<usize> {
        self.delta[q][s.index()]
    }

    /// State reached after the word, or `None` if it is not reduced.
    pub fn run(&self, word: &[Gen]) -> Option<usize> {
        word.iter().try_fold(0, |q, &s| self.step(q, s))
    }

    pub fn accepts(&self, word: &[Gen]) -> bool {
        self.run(word).is_some()
    }

    /// Number of defined transitions.
    pub fn edge_count(&self) -> usize {
        self.delta.iter().flatten().filter(|t| t.is_some()).count()
    }

    /// Graph dump; nodes are state numbers, edges carry generator names.
    pub fn to_dot(&self, system: &CoxeterSystem) -> String {
        let mut out = String::from("digraph automaton {\n");
        for (q, st) in self.states.iter().enumerate() {
            let label: Vec<String> = st.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(out, "  q{q} [label=\"{{{}}}\"];", label.join(","));
        }
        for (q, row) in self.delta.iter().enumerate() {
            for (s, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    let _ = writeln!(out, "  q{q} -> q{t} [label=\"{}\"];", system.matrix().name(Gen(s as u8)));
                }
            }
        }
        out.push_str("}\n");
        debug_assert!(self.rank == system.rank());
        out
    }
}

impl CoxeterSystem {
    pub fn canonical_automaton(&self, cap: usize) -> Result<CanonicalAutomaton> {
        CanonicalAutomaton::build(self.small_roots(), cap)
    }

    /// State reached by reading `w^-1`, namely `Sigma ∩ N(w)`. Injective on
    /// the low elements, whose inversion sets are spanned by small roots.
    pub fn low_state(&self, auto: &CanonicalAutomaton, w: &Element) -> Option<usize> {
        auto.run(self.inverse(w).word())
    }

    /// `Sigma ∩ N(w^-1)` as sorted small-root ids: the state reached by
    /// reading `w`.
    pub fn small_trace(&self, w: &Element) -> Vec<RootId> {
        let inv = self.inverse(w);
        let mut ids: Vec<RootId> = inv.inversion_roots().iter().copied().filter(|&id| self.is_small(id)).collect();
        ids.sort_unstable();
        ids
    }
}
