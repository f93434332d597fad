use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use super::{Positivity, Root, RootSpace};
use crate::coxeter::Gen;

/// Interned id of a positive root.
pub type RootId = u32;

/// A root up to sign: the positive root `id`, or its negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootRef {
    pub id: RootId,
    pub negative: bool,
}

impl RootRef {
    pub fn positive(id: RootId) -> Self {
        Self { id, negative: false }
    }

    pub fn negated(self) -> Self {
        Self { id: self.id, negative: !self.negative }
    }
}

impl fmt::Display for RootRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-#{}", self.id)
        } else {
            write!(f, "#{}", self.id)
        }
    }
}

#[derive(Debug, Default)]
struct Inner {
    roots: Vec<Root>,
    index: HashMap<Root, RootId>,
    // transitions[id * rank + s]: image of root `id` under s, once computed.
    transitions: Vec<Option<RootRef>>,
}

/// Interning table for positive roots with a memoized simple-reflection table.
///
/// Ids are assigned in interning order and never change. The first ids are
/// the ones passed to [`RootRegistry::seeded`], so seeding with the small
/// roots (simple roots first) makes `id < |Sigma|` the smallness test and
/// `id < rank` the simplicity test.
#[derive(Debug)]
pub struct RootRegistry {
    rank: usize,
    inner: RwLock<Inner>,
}

impl RootRegistry {
    pub fn seeded<'a>(rank: usize, seeds: impl IntoIterator<Item = &'a Root>) -> Self {
        let reg = Self { rank, inner: RwLock::new(Inner::default()) };
        for r in seeds {
            reg.intern(r);
        }
        reg
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("registry lock").roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Id of a positive root, allocating one if needed.
    pub fn intern(&self, root: &Root) -> RootId {
        if let Some(&id) = self.inner.read().expect("registry lock").index.get(root) {
            return id;
        }
        let mut inner = self.inner.write().expect("registry lock");
        if let Some(&id) = inner.index.get(root) {
            return id;
        }
        let id = inner.roots.len() as RootId;
        inner.roots.push(root.clone());
        inner.index.insert(root.clone(), id);
        let rank = self.rank;
        inner.transitions.extend(std::iter::repeat_n(None, rank));
        id
    }

    pub fn lookup(&self, root: &Root) -> Option<RootId> {
        self.inner.read().expect("registry lock").index.get(root).copied()
    }

    pub fn root(&self, id: RootId) -> Root {
        self.inner.read().expect("registry lock").roots[id as usize].clone()
    }

    /// Interns a root of either sign.
    pub fn intern_signed(&self, space: &RootSpace, root: &Root) -> RootRef {
        match space.classify(root).expect("registry only holds roots") {
            Positivity::Positive => RootRef::positive(self.intern(root)),
            Positivity::Negative => RootRef::positive(self.intern(&-root)).negated(),
        }
    }

    pub fn resolve(&self, r: RootRef) -> Root {
        let root = self.root(r.id);
        if r.negative {
            -&root
        } else {
            root
        }
    }

    /// `s(r)`, memoized per positive root.
    pub fn reflect(&self, space: &RootSpace, s: Gen, r: RootRef) -> RootRef {
        let slot = r.id as usize * self.rank + s.index();
        let cached = self.inner.read().expect("registry lock").transitions[slot];
        let image = match cached {
            Some(img) => img,
            None => {
                let root = self.root(r.id);
                let reflected = space.reflect_simple(s, &root);
                let img = self.intern_signed(space, &reflected);
                self.inner.write().expect("registry lock").transitions[slot] = Some(img);
                img
            }
        };
        if r.negative {
            image.negated()
        } else {
            image
        }
    }

    /// `s_1 ... s_k (r)`, rightmost letter first.
    pub fn apply_word(&self, space: &RootSpace, word: &[Gen], r: RootRef) -> RootRef {
        word.iter().rev().fold(r, |acc, &s| self.reflect(space, s, acc))
    }

    /// All interned positive roots, by id.
    pub fn snapshot(&self) -> Vec<Root> {
        self.inner.read().expect("registry lock").roots.clone()
    }
}
