//! Coxeter presentations, the exact scalar field, and the bilinear form.

mod field;
mod matrix;
mod poly;

pub use field::{Scalar, ScalarField, Sign};
pub use matrix::{catalog, Bond, CatalogSpec, CoxeterMatrix, Gen};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Symmetric table of `B(alpha_s, alpha_t)`.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    rank: usize,
    entries: Vec<Scalar>,
}

impl GramMatrix {
    /// `B(alpha_s, alpha_s) = 1`, `B(alpha_s, alpha_t) = -cos(pi/m)` for finite
    /// labels and `-1` for infinite ones.
    pub fn new(matrix: &CoxeterMatrix, field: &ScalarField) -> Self {
        let rank = matrix.rank();
        let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        let mut entries = Vec::with_capacity(rank * rank);
        for s in matrix.generators() {
            for t in matrix.generators() {
                let value = if s == t {
                    field.one()
                } else {
                    match matrix.bond(s, t) {
                        Bond::Finite(m) => {
                            field.two_cos_pi_over(m).expect("field built for this matrix").scale(&minus_half)
                        }
                        Bond::Infinite => field.int(-1),
                    }
                };
                entries.push(value);
            }
        }
        Self { rank, entries }
    }

    #[inline]
    pub fn get(&self, s: Gen, t: Gen) -> &Scalar {
        &self.entries[s.index() * self.rank + t.index()]
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram_of(bond: Bond) -> (ScalarField, GramMatrix) {
        let m = CoxeterMatrix::from_bonds(2, &[(1, 2, bond)]).unwrap();
        let f = ScalarField::for_matrix(&m);
        let g = GramMatrix::new(&m, &f);
        (f, g)
    }

    #[test]
    fn commuting_pair_is_orthogonal() {
        let (f, g) = gram_of(Bond::Finite(2));
        assert_eq!(*g.get(Gen(0), Gen(1)), f.zero());
    }

    #[test]
    fn bond_three_is_minus_half() {
        let (f, g) = gram_of(Bond::Finite(3));
        let minus_half = BigRational::new((-1).into(), 2.into());
        assert_eq!(*g.get(Gen(0), Gen(1)), f.rational(minus_half));
        assert_eq!(*g.get(Gen(1), Gen(1)), f.one());
    }

    #[test]
    fn infinite_bond_is_minus_one() {
        let (f, g) = gram_of(Bond::Infinite);
        assert_eq!(*g.get(Gen(0), Gen(1)), f.int(-1));
    }

    #[test]
    fn symmetric_unit_diagonal_in_range() {
        for ty in ["H", "B", "affineC", "affineB"] {
            let m = catalog(&CatalogSpec { ty: ty.into(), rank: Some(3), ..Default::default() }).unwrap();
            let f = ScalarField::for_matrix(&m);
            let g = GramMatrix::new(&m, &f);
            for s in m.generators() {
                assert_eq!(*g.get(s, s), f.one());
                for t in m.generators() {
                    assert_eq!(g.get(s, t), g.get(t, s));
                    if s != t {
                        let v = g.get(s, t);
                        assert_ne!(f.sign(v), Sign::Positive);
                        assert_ne!(f.sign(&(v - &f.int(-1))), Sign::Negative);
                        let cos = match m.bond(s, t) {
                            Bond::Finite(k) => -(std::f64::consts::PI / k as f64).cos(),
                            Bond::Infinite => -1.0,
                        };
                        assert!((f.to_f64(v) - cos).abs() < 1e-12);
                    }
                }
            }
        }
    }
}
