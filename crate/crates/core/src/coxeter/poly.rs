//! Dense univariate polynomials over the rationals, lowest degree first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Poly = Vec<BigRational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Poly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

#[cfg(test)]
pub(crate) fn from_ints(cs: &[i64]) -> Poly {
    let mut p: Poly = cs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    trim(&mut p);
    p
}

pub(crate) fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    let mut out: Poly = (0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = &b[db];
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] / lead;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            let t = &c * bc;
            rem[dr - db + i] -= t;
        }
        quot[dr - db] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn derivative(p: &Poly) -> Poly {
    let mut out: Poly =
        p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect();
    trim(&mut out);
    out
}

pub(crate) fn eval(p: &Poly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// `u` with `a * u = 1 (mod m)`, for `a` coprime to `m`.
pub(crate) fn inverse_mod(a: &Poly, m: &Poly) -> Option<Poly> {
    // Extended Euclid tracking only the coefficient of `a`.
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
    trim(&mut r1);
    while degree(&r1).is_some() {
        let (q, r) = div_rem(&r0, &r1);
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    // r0 is the gcd; it must be a nonzero constant.
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = r0[0].clone();
    let mut u: Poly = t0.into_iter().map(|x| x / &c).collect();
    u = div_rem(&u, m).1;
    Some(u)
}

/// The cyclotomic polynomial of order `n`.
pub(crate) fn cyclotomic(n: u64) -> Poly {
    // x^n - 1 divided by all proper-divisor cyclotomics.
    let mut p = vec![BigRational::zero(); n as usize + 1];
    p[0] = -BigRational::one();
    p[n as usize] = BigRational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = div_rem(&p, &cyclotomic(d));
            debug_assert!(degree(&r).is_none());
            p = q;
        }
    }
    p
}

/// Minimal polynomial of `2 cos(pi / n)` for `n >= 2`, obtained from the
/// palindromic cyclotomic polynomial of order `2n` via `y = x + 1/x`.
pub(crate) fn min_poly_two_cos(n: u64) -> Poly {
    assert!(n >= 2);
    let phi = cyclotomic(2 * n);
    let two_d = degree(&phi).expect("nonzero");
    let d = two_d / 2;
    // Laurent coefficients: index k holds the coefficient of x^(k - d).
    let mut laurent = phi.clone();
    laurent.resize(two_d + 1, BigRational::zero());
    let mut q = vec![BigRational::zero(); d + 1];
    for j in (0..=d).rev() {
        let c = laurent[d + j].clone();
        if c.is_zero() {
            continue;
        }
        // Subtract c * (x + 1/x)^j.
        let mut binom = BigInt::one();
        for i in 0..=j {
            let power = j as isize - 2 * i as isize;
            let idx = (d as isize + power) as usize;
            laurent[idx] -= &c * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(j - i) / BigInt::from(i + 1);
        }
        q[j] = c;
    }
    debug_assert!(laurent.iter().all(Zero::is_zero));
    q
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub(crate) fn sturm_count(p: &Poly, lo: &BigRational, hi: &BigRational) -> usize {
    let mut seq = vec![p.clone(), derivative(p)];
    loop {
        let n = seq.len();
        if degree(&seq[n - 1]).is_none() {
            seq.pop();
            break;
        }
        let r = div_rem(&seq[n - 2], &seq[n - 1]).1;
        if degree(&r).is_none() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    let variations = |x: &BigRational| {
        let signs: Vec<i8> = seq
            .iter()
            .map(|q| eval(q, x))
            .filter(|v| !v.is_zero())
            .map(|v| if v.is_positive() { 1 } else { -1 })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    variations(lo).saturating_sub(variations(hi))
}
