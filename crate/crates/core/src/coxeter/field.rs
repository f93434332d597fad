//! Exact arithmetic in the real field `Q(2cos(pi/N))`.
//!
//! Every value `-cos(pi/m)` needed by the bilinear form of a Coxeter system
//! lives in one such field, with `N` the least common multiple of the finite
//! bond labels. Elements are stored as residues modulo the minimal polynomial
//! of `theta = 2cos(pi/N)`, so equality is coefficient equality. Signs of
//! nonzero elements are decided by interval evaluation on a rational isolating
//! interval for `theta`, refined by bisection until the answer is certain.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::CoxeterMatrix;
use super::poly::{self, Poly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// An element of a [`ScalarField`]: coefficients of `1, theta, theta^2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it is one.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Multiplication by a rational number.
    pub fn scale(&self, q: &BigRational) -> Scalar {
        Scalar { coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        debug_assert_eq!(self.coeffs.len(), rhs.coeffs.len());
        Scalar { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        debug_assert_eq!(self.coeffs.len(), rhs.coeffs.len());
        Scalar { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Bit-exact coefficient vector, e.g. `[1/2, 0, -3]`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone)]
pub struct ScalarField {
    n: u64,
    min_poly: Poly,
    lo: BigRational,
    hi: BigRational,
}

impl ScalarField {
    /// The field `Q(2cos(pi/n))`; `n = 1` gives the rationals.
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatrix("field order must be positive".into()));
        }
        if n == 1 {
            // theta = 2cos(pi) = -2, rational.
            let theta = BigRational::from_integer(BigInt::from(-2));
            return Ok(Self { n, min_poly: vec![-theta.clone(), BigRational::one()], lo: theta.clone(), hi: theta });
        }
        let min_poly = poly::min_poly_two_cos(n);
        if poly::degree(&min_poly) == Some(1) {
            let theta = -min_poly[0].clone();
            return Ok(Self { n, min_poly, lo: theta.clone(), hi: theta });
        }
        let approx = 2.0 * (std::f64::consts::PI / n as f64).cos();
        let centre = BigRational::from_float(approx).expect("finite");
        let mut half_width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 30));
        for _ in 0..40 {
            let lo = &centre - &half_width;
            let hi = &centre + &half_width;
            let plo = poly::eval(&min_poly, &lo);
            let phi = poly::eval(&min_poly, &hi);
            if !plo.is_zero()
                && !phi.is_zero()
                && plo.signum() != phi.signum()
                && poly::sturm_count(&min_poly, &lo, &hi) == 1
            {
                return Ok(Self { n, min_poly, lo, hi });
            }
            half_width /= BigRational::from_integer(BigInt::from(2));
        }
        unreachable!("no isolating interval for 2cos(pi/{n})")
    }

    /// The field holding `cos(pi/m)` for every finite label `m` of `matrix`.
    ///
    /// Labels 2 contribute nothing (`cos(pi/2) = 0`), so `N` is the least
    /// common multiple of the finite labels that are at least 3.
    pub fn for_matrix(matrix: &CoxeterMatrix) -> Self {
        let n = matrix.finite_labels().into_iter().filter(|&m| m >= 3).fold(1u64, |acc, m| acc.lcm(&u64::from(m)));
        Self::new(n).expect("n >= 1")
    }

    /// The `N` with `theta = 2cos(pi/N)`.
    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    /// Rational coefficients of the monic minimal polynomial of `theta`, lowest first.
    pub fn min_poly(&self) -> &[BigRational] {
        &self.min_poly
    }

    /// The current isolating interval `[lo, hi]` for `theta`.
    pub fn isolating_interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn zero(&self) -> Scalar {
        Scalar { coeffs: vec![BigRational::zero(); self.degree()] }
    }

    pub fn one(&self) -> Scalar {
        self.rational(BigRational::one())
    }

    pub fn rational(&self, q: BigRational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = q;
        s
    }

    pub fn int(&self, k: i64) -> Scalar {
        self.rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn theta(&self) -> Scalar {
        self.reduce(vec![BigRational::zero(), BigRational::one()])
    }

    fn reduce(&self, p: Poly) -> Scalar {
        let (_, mut r) = poly::div_rem(&p, &self.min_poly);
        r.resize(self.degree(), BigRational::zero());
        Scalar { coeffs: r }
    }

    /// Builds a scalar from raw coefficients, reducing them.
    pub fn from_coefficients(&self, coeffs: Vec<BigRational>) -> Scalar {
        self.reduce(coeffs)
    }

    /// `2cos(pi/m)`, for `m` dividing `N`, or `m` in `{1, 2}`.
    pub fn two_cos_pi_over(&self, m: u32) -> Option<Scalar> {
        let m = u64::from(m);
        match m {
            0 => None,
            1 => Some(self.int(-2)),
            2 => Some(self.zero()),
            _ if !self.n.is_multiple_of(m) => None,
            _ => {
                // 2cos(k x) = C_k(2cos x) with C_0 = 2, C_1 = y, C_{k+1} = y C_k - C_{k-1}.
                let k = self.n / m;
                let theta = self.theta();
                let (mut prev, mut cur) = (self.int(2), theta.clone());
                for _ in 1..k {
                    let next = &self.mul(&theta, &cur) - &prev;
                    prev = cur;
                    cur = next;
                }
                Some(cur)
            }
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if self.degree() == 1 {
            return self.rational(&a.coeffs[0] * &b.coeffs[0]);
        }
        self.reduce(poly::mul(&a.coeffs, &b.coeffs))
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.degree() == 1 {
            return Ok(self.rational(a.coeffs[0].recip()));
        }
        let mut p = a.coeffs.clone();
        poly::trim(&mut p);
        let u = poly::inverse_mod(&p, &self.min_poly).expect("minimal polynomial is irreducible");
        Ok(self.reduce(u))
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Exact sign of a field element.
    pub fn sign(&self, a: &Scalar) -> Sign {
        if let Some(q) = a.as_rational() {
            return rational_sign(q);
        }
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        let lo_sign = poly::eval(&self.min_poly, &lo).signum();
        let two = BigRational::from_integer(BigInt::from(2));
        loop {
            let (vlo, vhi) = eval_interval(&a.coeffs, &lo, &hi);
            if vlo.is_positive() {
                return Sign::Positive;
            }
            if vhi.is_negative() {
                return Sign::Negative;
            }
            let mid = (&lo + &hi) / &two;
            let pm = poly::eval(&self.min_poly, &mid);
            debug_assert!(!pm.is_zero(), "irrational theta cannot be a rational midpoint");
            if pm.signum() == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    pub fn cmp(&self, a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
        match self.sign(&(a - b)) {
            Sign::Negative => std::cmp::Ordering::Less,
            Sign::Zero => std::cmp::Ordering::Equal,
            Sign::Positive => std::cmp::Ordering::Greater,
        }
    }

    /// Floating-point approximation.
    pub fn to_f64(&self, a: &Scalar) -> f64 {
        let theta = 2.0 * (std::f64::consts::PI / self.n as f64).cos();
        a.coeffs.iter().rev().fold(0.0, |acc, c| acc * theta + c.to_f64().unwrap_or(f64::NAN))
    }
}

fn rational_sign(q: &BigRational) -> Sign {
    if q.is_zero() {
        Sign::Zero
    } else if q.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Interval enclosure of `sum c_k x^k` for `x` in `[lo, hi]` (Horner form).
fn eval_interval(coeffs: &[BigRational], lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut acc_lo = BigRational::zero();
    let mut acc_hi = BigRational::zero();
    for c in coeffs.iter().rev() {
        let products = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
        let mut min = products[0].clone();
        let mut max = products[0].clone();
        for p in &products[1..] {
            if *p < min {
                min = p.clone();
            }
            if *p > max {
                max = p.clone();
            }
        }
        acc_lo = min + c;
        acc_hi = max + c;
    }
    (acc_lo, acc_hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::matrix::{Bond, CoxeterMatrix};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn field_for(labels: &[u32]) -> ScalarField {
        let bonds: Vec<_> = labels.iter().enumerate().map(|(i, &m)| (i + 1, i + 2, Bond::Finite(m))).collect();
        ScalarField::for_matrix(&CoxeterMatrix::from_bonds(labels.len() + 1, &bonds).unwrap())
    }

    fn totient(n: u64) -> u64 {
        (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
    }

    #[test]
    fn bonds_two_three_infinity_give_the_rationals() {
        let m =
            CoxeterMatrix::from_bonds(4, &[(1, 2, Bond::Finite(3)), (2, 3, Bond::Infinite), (3, 4, Bond::Finite(2))])
                .unwrap();
        assert_eq!(ScalarField::for_matrix(&m).degree(), 1);
    }

    #[test]
    fn bonds_three_four_give_degree_four() {
        let f = field_for(&[3, 4]);
        assert_eq!(f.order(), 12);
        assert_eq!(f.degree(), 4);
        assert_eq!(f.degree() as u64, totient(24) / 2);
    }

    #[test]
    fn degree_matches_half_totient() {
        for n in 2..=30u64 {
            assert_eq!(ScalarField::new(n).unwrap().degree() as u64, totient(2 * n) / 2, "N = {n}");
        }
    }

    #[test]
    fn golden_ratio_field() {
        let f = field_for(&[5]);
        assert_eq!(f.degree(), 2);
        let theta = f.theta();
        // theta^2 - theta - 1 = 0
        let t2 = f.mul(&theta, &theta);
        assert!((&(&t2 - &theta) - &f.one()).is_zero());
    }

    #[test]
    fn half_plus_half() {
        let f = ScalarField::new(12).unwrap();
        let half = f.rational(q(1, 2));
        assert_eq!(&half + &half, f.one());
    }

    #[test]
    fn theta_squared_in_degree_four_field() {
        let f = ScalarField::new(12).unwrap();
        let t = f.theta();
        let t2 = f.mul(&t, &t);
        // 4cos^2(pi/12) = 2 + 2cos(pi/6) = 2 + sqrt 3
        let expected = 2.0 + 3f64.sqrt();
        assert!((f.to_f64(&t2) - expected).abs() < 1e-12);
        // and equals 2 + 2cos(pi/6) built independently
        let via_cos = &f.int(2) + &f.two_cos_pi_over(6).unwrap();
        assert_eq!(t2, via_cos);
    }

    #[test]
    fn self_division_is_one() {
        let f = ScalarField::new(12).unwrap();
        let a = &f.theta() + &f.rational(q(-7, 3));
        assert_eq!(f.div(&a, &a).unwrap(), f.one());
        assert_eq!(f.inv(&f.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn signs() {
        let f = ScalarField::new(4).unwrap();
        assert_eq!(f.sign(&f.zero()), Sign::Zero);
        let minus_cos = f.two_cos_pi_over(4).unwrap().scale(&q(-1, 2));
        assert_eq!(f.sign(&minus_cos), Sign::Negative);
    }

    #[test]
    fn sqrt2_plus_sqrt3_minus_sqrt5() {
        let f = ScalarField::new(60).unwrap();
        let sqrt2 = f.two_cos_pi_over(4).unwrap();
        let sqrt3 = f.two_cos_pi_over(6).unwrap();
        let golden = f.two_cos_pi_over(5).unwrap();
        let sqrt5 = &golden.scale(&q(2, 1)) - &f.one();
        let v = &(&sqrt2 + &sqrt3) - &sqrt5;
        // Interval oracle: bracket each surd by rationals, independent of the field.
        // Units of 1e-7; each pair satisfies lo^2 < n < hi^2.
        let bracket = |n: i128, lo: i128| {
            assert!(lo * lo < n * 10i128.pow(14) && (lo + 1) * (lo + 1) > n * 10i128.pow(14));
            (lo, lo + 1)
        };
        let (r2, r2_hi) = bracket(2, 14_142_135);
        let (r3, r3_hi) = bracket(3, 17_320_508);
        let (r5, r5_hi) = bracket(5, 22_360_679);
        let lo = r2 + r3 - r5_hi;
        let hi = r2_hi + r3_hi - r5;
        assert!(lo > 9_090_000 && hi < 9_110_000);
        assert_eq!(f.sign(&v), Sign::Positive);
        assert!((f.to_f64(&v) - 0.9102).abs() < 1e-3);
        let w = &sqrt5 - &(&sqrt2 + &sqrt3);
        assert_eq!(f.sign(&w), Sign::Negative);
    }

    #[test]
    fn cosines_match_floats() {
        let f = ScalarField::new(60).unwrap();
        for m in [1u32, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60] {
            let c = f.two_cos_pi_over(m).unwrap();
            let want = 2.0 * (std::f64::consts::PI / m as f64).cos();
            assert!((f.to_f64(&c) - want).abs() < 1e-9, "m = {m}");
        }
        assert!(f.two_cos_pi_over(7).is_none());
    }

    #[test]
    fn display_is_bit_exact() {
        let f = ScalarField::new(5).unwrap();
        let a = &f.rational(q(1, 2)) + &f.theta().scale(&q(-3, 1));
        assert_eq!(a.to_string(), "[1/2, -3]");
    }
}
