use std::collections::BTreeSet;

use crate::coxeter::{Bond, Gen, Sign};
use crate::error::{Error, Result};
use crate::system::CoxeterSystem;
use crate::weak::Element;

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    Spherical,
    LargeType,
    RightAngled,
}

/// Closed-form prediction of the smallest family for the three classes
/// where it is known.
#[derive(Debug, Clone)]
pub struct TypeOracle {
    pub kind: OracleKind,
    /// Shortlex order.
    pub elements: Vec<Element>,
}

/// `[r, s]_k`: the alternating word `r s r ...` of length `k`.
pub fn alternating(r: Gen, s: Gen, k: usize) -> Vec<Gen> {
    (0..k).map(|i| if i % 2 == 0 { r } else { s }).collect()
}

impl CoxeterSystem {
    /// Finite iff the Gram matrix is positive definite; decided exactly by
    /// symmetric elimination without pivoting.
    pub fn is_spherical(&self) -> bool {
        let f = self.space().field();
        let n = self.rank();
        let g = self.space().gram();
        let mut a: Vec<Vec<_>> =
            (0..n).map(|i| (0..n).map(|j| g.get(Gen(i as u8), Gen(j as u8)).clone()).collect()).collect();
        for k in 0..n {
            if f.sign(&a[k][k]) != Sign::Positive {
                return false;
            }
            let inv = f.inv(&a[k][k]).expect("positive pivot");
            let (top, rest) = a.split_at_mut(k + 1);
            let pivot = &top[k];
            for row in rest {
                if row[k].is_zero() {
                    continue;
                }
                let factor = f.mul(&row[k], &inv);
                for (x, p) in row[k..].iter_mut().zip(&pivot[k..]) {
                    *x = &*x - &f.mul(&factor, p);
                }
            }
        }
        true
    }

    /// Every element of a finite group, by breadth-first search.
    pub fn all_elements(&self, cap: usize) -> Result<Vec<Element>> {
        let mut seen: BTreeSet<Element> = BTreeSet::new();
        let mut level = vec![self.identity()];
        seen.insert(self.identity());
        while !level.is_empty() {
            let mut next = BTreeSet::new();
            for w in &level {
                for s in self.generators().filter(|&s| !self.is_left_descent(w, s)) {
                    next.insert(self.left_mul(s, w));
                }
            }
            if seen.len() + next.len() > cap {
                return Err(Error::CapExceeded { what: "group elements", cap });
            }
            seen.extend(next.iter().cloned());
            level = next.into_iter().collect();
        }
        Ok(seen.into_iter().collect())
    }

    pub fn type_oracle(&self, cap: usize) -> Result<TypeOracle> {
        let m = self.matrix();
        let (kind, set) = if self.is_spherical() {
            (OracleKind::Spherical, self.all_elements(cap)?.into_iter().collect())
        } else if m.is_large_type() {
            (OracleKind::LargeType, self.large_type_elements())
        } else if m.is_right_angled() {
            (OracleKind::RightAngled, self.right_angled_elements())
        } else {
            return Err(Error::NotApplicable);
        };
        Ok(TypeOracle { kind, elements: set.into_iter().collect() })
    }

    fn large_type_elements(&self) -> BTreeSet<Element> {
        let m = self.matrix();
        let mut out: BTreeSet<Element> =
            std::iter::once(self.identity()).chain(self.generators().map(|s| self.generator_element(s))).collect();
        for (r, s) in m.pairs() {
            let Bond::Finite(mrs) = m.bond(r, s) else { continue };
            for k in 1..=mrs as usize {
                out.insert(self.reduce_word(&alternating(r, s, k)));
                out.insert(self.reduce_word(&alternating(s, r, k)));
            }
            for t in self.generators().filter(|&t| t != r && t != s) {
                if m.bond(r, t).is_finite() && m.bond(s, t).is_finite() {
                    let mut word = vec![t];
                    word.extend(alternating(r, s, mrs as usize));
                    out.insert(self.reduce_word(&word));
                }
            }
        }
        out
    }

    fn right_angled_elements(&self) -> BTreeSet<Element> {
        let m = self.matrix();
        let gens: Vec<Gen> = self.generators().collect();
        let mut out = BTreeSet::new();
        // Cliques of the commutation graph, grown in generator order.
        let mut stack: Vec<Vec<Gen>> = vec![Vec::new()];
        while let Some(clique) = stack.pop() {
            out.insert(self.reduce_word(&clique));
            let start = clique.last().map_or(0, |g| g.index() + 1);
            for &t in &gens[start..] {
                if clique.iter().all(|&c| m.bond(c, t) == Bond::Finite(2)) {
                    let mut next = clique.clone();
                    next.push(t);
                    stack.push(next);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{catalog, CatalogSpec, CoxeterMatrix};

    fn sys(ty: &str, rank: usize) -> CoxeterSystem {
        CoxeterSystem::new(catalog(&CatalogSpec { ty: ty.into(), rank: Some(rank), ..Default::default() }).unwrap())
            .unwrap()
    }

    #[test]
    fn spherical_detection() {
        for (ty, rank) in [("A", 3), ("B", 4), ("D", 4), ("H", 3), ("H", 4), ("A", 1)] {
            assert!(sys(ty, rank).is_spherical(), "{ty}{rank}");
        }
        for (ty, rank) in [("affineA", 2), ("affineB", 3), ("affineC", 2), ("affineA", 1)] {
            assert!(!sys(ty, rank).is_spherical(), "{ty}{rank}");
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(sys("A", 3).all_elements(DEFAULT_GROUP_CAP).unwrap().len(), 24);
        assert_eq!(sys("B", 3).all_elements(DEFAULT_GROUP_CAP).unwrap().len(), 48);
        assert_eq!(sys("H", 3).all_elements(DEFAULT_GROUP_CAP).unwrap().len(), 120);
        assert!(matches!(sys("H", 3).all_elements(100), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn affine_a2_large_type() {
        let o = sys("affineA", 2).type_oracle(DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(o.kind, OracleKind::LargeType);
        assert_eq!(o.elements.len(), 16);
    }

    #[test]
    fn right_angled_example() {
        let w = CoxeterSystem::new(
            CoxeterMatrix::from_bonds(3, &[(1, 2, Bond::Finite(2)), (1, 3, Bond::Infinite), (2, 3, Bond::Infinite)])
                .unwrap(),
        )
        .unwrap();
        let o = w.type_oracle(DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(o.kind, OracleKind::RightAngled);
        let got: Vec<String> = o.elements.iter().map(|e| w.format_element(e)).collect();
        assert_eq!(got, ["1", "s1", "s2", "s3", "s1 s2"]);
    }

    #[test]
    fn not_applicable() {
        assert_eq!(sys("affineC", 2).type_oracle(DEFAULT_GROUP_CAP).unwrap_err(), Error::NotApplicable);
    }
}
