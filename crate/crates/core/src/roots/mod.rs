//! Root vectors, the small roots, and bounded validators built on them.

mod registry;
mod small;
mod validate;

pub use registry::{RootId, RootRef, RootRegistry};
pub use small::{SmallRootTable, Transition, DEFAULT_SMALL_ROOT_CAP};
pub use validate::{
    dominance_falsifier, maximal_dihedral_simples, maximal_dihedral_simples_in, positive_roots_to_depth, Dominance,
};

use std::fmt;

use crate::coxeter::{CoxeterMatrix, Gen, GramMatrix, Scalar, ScalarField, Sign};
use crate::error::{Error, Result};

/// A vector in the span of the simple roots, by coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root(Vec<Scalar>);

impl Root {
    pub fn new(coefficients: Vec<Scalar>) -> Self {
        Root(coefficients)
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.0
    }

    pub fn coefficient(&self, s: Gen) -> &Scalar {
        &self.0[s.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }
}

impl std::ops::Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            match c.as_rational() {
                Some(q) => write!(f, "{q}")?,
                None => write!(f, "{c}")?,
            }
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    Positive,
    Negative,
}

/// The real vector space spanned by the simple roots, with its bilinear form.
#[derive(Debug, Clone)]
pub struct RootSpace {
    matrix: CoxeterMatrix,
    field: ScalarField,
    gram: GramMatrix,
}

impl RootSpace {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let field = ScalarField::for_matrix(&matrix);
        let gram = GramMatrix::new(&matrix, &field);
        Self { matrix, field, gram }
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn simple(&self, s: Gen) -> Root {
        let mut v = vec![self.field.zero(); self.rank()];
        v[s.index()] = self.field.one();
        Root(v)
    }

    /// Builds a root from small integer coefficients.
    pub fn root_from_ints(&self, coefficients: &[i64]) -> Root {
        assert_eq!(coefficients.len(), self.rank());
        Root(coefficients.iter().map(|&c| self.field.int(c)).collect())
    }

    /// `B(alpha_s, v)`.
    pub fn bilinear_simple(&self, s: Gen, v: &Root) -> Scalar {
        let f = &self.field;
        self.matrix.generators().fold(f.zero(), |acc, t| {
            let c = v.coefficient(t);
            if c.is_zero() {
                return acc;
            }
            let b = self.gram.get(s, t);
            if b.is_zero() {
                return acc;
            }
            &acc + &f.mul(b, c)
        })
    }

    /// `B(u, v)`.
    pub fn bilinear(&self, u: &Root, v: &Root) -> Scalar {
        let f = &self.field;
        self.matrix.generators().fold(f.zero(), |acc, s| {
            let c = u.coefficient(s);
            if c.is_zero() {
                acc
            } else {
                &acc + &f.mul(c, &self.bilinear_simple(s, v))
            }
        })
    }

    /// The B-reflection of `v` in `alpha_s`: `v - 2 B(alpha_s, v) alpha_s`.
    pub fn reflect_simple(&self, s: Gen, v: &Root) -> Root {
        let b = self.bilinear_simple(s, v);
        self.reflect_with(s, v, &b)
    }

    /// Same as [`reflect_simple`](Self::reflect_simple) with `B(alpha_s, v)` supplied.
    pub(crate) fn reflect_with(&self, s: Gen, v: &Root, b: &Scalar) -> Root {
        let mut out = v.clone();
        if !b.is_zero() {
            let twice = b + b;
            out.0[s.index()] = &out.0[s.index()] - &twice;
        }
        out
    }

    /// Positive or negative according to the signs of the coefficients.
    pub fn classify(&self, v: &Root) -> Result<Positivity> {
        let mut pos = false;
        let mut neg = false;
        for c in v.coefficients() {
            match self.field.sign(c) {
                Sign::Positive => pos = true,
                Sign::Negative => neg = true,
                Sign::Zero => {}
            }
        }
        match (pos, neg) {
            (true, false) => Ok(Positivity::Positive),
            (false, true) => Ok(Positivity::Negative),
            (true, true) => Err(Error::MixedSigns),
            (false, false) => Err(Error::ZeroVector),
        }
    }

    /// Applies the word `s_1 ... s_k` to `v`, rightmost letter first.
    pub fn apply_word(&self, word: &[Gen], v: &Root) -> Root {
        word.iter().rev().fold(v.clone(), |acc, &s| self.reflect_simple(s, &acc))
    }
}
