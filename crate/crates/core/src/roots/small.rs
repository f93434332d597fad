use std::collections::HashMap;

use super::{Root, RootSpace};
use crate::coxeter::{Gen, Sign};
use crate::error::{Error, Result};

pub const DEFAULT_SMALL_ROOT_CAP: usize = 1_000_000;

/// Image of a small root under a simple reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transition {
    Small(usize),
    NonSmallPositive,
    NegativeSimple,
}

/// The small roots, simple roots first, with their reflection table.
#[derive(Debug, Clone)]
pub struct SmallRootTable {
    rank: usize,
    roots: Vec<Root>,
    depth: Vec<u32>,
    transitions: Vec<Transition>,
}

impl SmallRootTable {
    /// Breadth-first generation from the simple roots.
    ///
    /// From a small root `sigma` and a generator `s` with `B(alpha_s, sigma) < 0`,
    /// the image `s(sigma)` is small exactly when `B(alpha_s, sigma) > -1`.
    /// Each level is sorted by decreasing coefficient vector, so ids depend
    /// only on the presentation.
    pub fn enumerate(space: &RootSpace, cap: usize) -> Result<Self> {
        let rank = space.rank();
        let f = space.field();
        let minus_one = f.int(-1);

        let mut roots: Vec<Root> = space.matrix().generators().map(|s| space.simple(s)).collect();
        let mut depth = vec![0u32; rank];
        let mut index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        if roots.len() > cap {
            return Err(Error::CapExceeded { what: "small roots", cap });
        }

        enum Pending {
            Negative,
            Fixed,
            Lookup(Root),
            NonSmall,
        }
        let mut pending: Vec<Vec<Pending>> = Vec::new();
        let mut level = 0..rank;
        let mut level_no = 0u32;
        while !level.is_empty() {
            let mut fresh: Vec<Root> = Vec::new();
            for i in level.clone() {
                let sigma = roots[i].clone();
                let mut row = Vec::with_capacity(rank);
                for s in space.matrix().generators() {
                    if i == s.index() {
                        row.push(Pending::Negative);
                        continue;
                    }
                    let b = space.bilinear_simple(s, &sigma);
                    let entry = match f.sign(&b) {
                        Sign::Zero => Pending::Fixed,
                        Sign::Positive => Pending::Lookup(space.reflect_with(s, &sigma, &b)),
                        Sign::Negative if f.sign(&(&b - &minus_one)) == Sign::Positive => {
                            let image = space.reflect_with(s, &sigma, &b);
                            if !index.contains_key(&image) && !fresh.contains(&image) {
                                fresh.push(image.clone());
                            }
                            Pending::Lookup(image)
                        }
                        Sign::Negative => Pending::NonSmall,
                    };
                    row.push(entry);
                }
                pending.push(row);
            }
            sort_level(space, &mut fresh);
            let start = roots.len();
            if start + fresh.len() > cap {
                return Err(Error::CapExceeded { what: "small roots", cap });
            }
            for r in fresh {
                index.insert(r.clone(), roots.len());
                roots.push(r);
                depth.push(level_no + 1);
            }
            level = start..roots.len();
            level_no += 1;
        }

        let transitions = pending
            .into_iter()
            .enumerate()
            .flat_map(|(i, row)| {
                let index = &index;
                row.into_iter().map(move |p| match p {
                    Pending::Negative => Transition::NegativeSimple,
                    Pending::Fixed => Transition::Small(i),
                    Pending::NonSmall => Transition::NonSmallPositive,
                    Pending::Lookup(r) => {
                        Transition::Small(*index.get(&r).expect("descending image of a small root is small"))
                    }
                })
            })
            .collect();
        Ok(Self { rank, roots, depth, transitions })
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    /// Breadth-first level at which the root was found; simple roots are at 0.
    pub fn depth(&self, i: usize) -> u32 {
        self.depth[i]
    }

    pub fn position(&self, root: &Root) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }

    pub fn transition(&self, i: usize, s: Gen) -> Transition {
        self.transitions[i * self.rank + s.index()]
    }
}

fn sort_level(space: &RootSpace, level: &mut [Root]) {
    let f = space.field();
    level.sort_by(|a, b| {
        for (x, y) in a.coefficients().iter().zip(b.coefficients()) {
            match f.cmp(y, x) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    });
}
