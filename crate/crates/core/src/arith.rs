//! Overflow-safe integer kernels: extended gcd, modular inverses with the
//! `1..=m` representative convention, floor sums in logarithmic time, exact
//! sawtooth sums, and integer square roots.
//!
//! Everything here is exact. The `i128` instantiations use checked operations
//! and report overflow; the [`BigInt`] instantiations never overflow. No
//! floating point is used anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{add, mul, sc, sub, to_fast, Scalar};

/// Extended Euclidean algorithm. Returns `(g, u, v)` with `g = gcd(x, y) > 0`
/// and `u·x + v·y = g`.
///
/// Errors if both inputs are zero.
pub fn ext_gcd(x: &BigInt, y: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    ext_gcd_impl(x, y)
}

pub(crate) fn ext_gcd_impl<T: Scalar>(x: &T, y: &T) -> Result<(T, T, T)> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::domain("ext_gcd(0, 0): gcd is undefined"));
    }
    let (mut r0, mut r1) = (x.clone(), y.clone());
    let (mut u0, mut u1) = (T::one(), T::zero());
    let (mut v0, mut v1) = (T::zero(), T::one());
    while !r1.is_zero() {
        let (q, rem) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, rem);
        let u2 = sub(&u0, &mul(&q, &u1)?)?;
        u0 = std::mem::replace(&mut u1, u2);
        let v2 = sub(&v0, &mul(&q, &v1)?)?;
        v0 = std::mem::replace(&mut v1, v2);
    }
    if r0.is_negative() {
        r0 = -r0;
        u0 = -u0;
        v0 = -v0;
    }
    Ok((r0, u0, v0))
}

/// The representative of `x` modulo `m` in `1..=m`: residue 0 maps to `m`,
/// not 0.
///
/// Errors if `m < 1`.
pub fn residue_rep(x: &BigInt, m: &BigInt) -> Result<BigInt> {
    residue_rep_impl(x, m)
}

pub(crate) fn residue_rep_impl<T: Scalar>(x: &T, m: &T) -> Result<T> {
    if *m < T::one() {
        return Err(Error::domain(format!(
            "residue_rep: modulus {m} must be positive"
        )));
    }
    let r = x.mod_floor(m);
    Ok(if r.is_zero() { m.clone() } else { r })
}

/// Modular inverse `y` of `x` modulo `m` with `x·y ≡ 1 (mod m)` and
/// `1 ≤ y ≤ m`. For `m = 1` this is 1, the `1..=m` representative of the
/// unique residue.
///
/// Errors if `m < 1` or `gcd(x, m) ≠ 1`.
pub fn mod_inverse(x: &BigInt, m: &BigInt) -> Result<BigInt> {
    mod_inverse_impl(x, m)
}

pub(crate) fn mod_inverse_impl<T: Scalar>(x: &T, m: &T) -> Result<T> {
    if *m < T::one() {
        return Err(Error::domain(format!(
            "mod_inverse: modulus {m} must be positive"
        )));
    }
    let xr = x.mod_floor(m);
    let (g, u, _) = ext_gcd_impl(&xr, m)?;
    if !g.is_one() {
        return Err(Error::domain(format!(
            "mod_inverse: {x} is not invertible modulo {m} (gcd = {g})"
        )));
    }
    residue_rep_impl(&u, m)
}

/// `Σ_{i=1}^{q} ⌊p·i/m⌋` by Euclidean descent: each round strips the whole
/// quotients out of the slope, then swaps the axes of the remaining lattice
/// region, reducing `(p, m)` exactly as the gcd algorithm does. Runs in
/// `O(log max(p, m))` arithmetic operations.
///
/// Errors if `q < 0`, `p < 0`, or `m < 1`.
pub fn floor_sum(q: &BigInt, p: &BigInt, m: &BigInt) -> Result<BigInt> {
    if let (Some(qf), Some(pf), Some(mf)) = (to_fast(q), to_fast(p), to_fast(m)) {
        match floor_sum_impl(&qf, &pf, &mf) {
            Err(Error::Overflow) => {}
            other => return other.map(BigInt::from),
        }
    }
    floor_sum_impl(q, p, m)
}

pub(crate) fn floor_sum_impl<T: Scalar>(q: &T, p: &T, m: &T) -> Result<T> {
    if *m < T::one() {
        return Err(Error::domain(format!(
            "floor_sum: modulus {m} must be positive"
        )));
    }
    if q.is_negative() || p.is_negative() {
        return Err(Error::domain(format!(
            "floor_sum: q = {q} and p = {p} must be non-negative"
        )));
    }
    // Σ_{i=1}^{q} ⌊p·i/m⌋ = Σ_{i=0}^{n-1} ⌊(p·i + k)/m⌋ with n = q + 1, k = 0.
    let mut n = add(q, &T::one())?;
    let mut p = p.clone();
    let mut k = T::zero();
    let mut m = m.clone();
    let mut acc = T::zero();
    loop {
        if p >= m {
            // whole slope: (p/m)·(0 + 1 + … + (n−1)); n(n−1) is even
            let tri = mul(&n, &sub(&n, &T::one())?)? / sc::<T>(2);
            acc = add(&acc, &mul(&tri, &p.div_floor(&m))?)?;
            p = p.mod_floor(&m);
        }
        if k >= m {
            acc = add(&acc, &mul(&n, &k.div_floor(&m))?)?;
            k = k.mod_floor(&m);
        }
        // 0 ≤ p, k < m: count the remaining lattice points column-wise in the
        // transposed region
        let top = add(&mul(&p, &n)?, &k)?;
        if top < m {
            break;
        }
        n = top.div_floor(&m);
        k = top.mod_floor(&m);
        std::mem::swap(&mut p, &mut m);
    }
    Ok(acc)
}

/// `Σ_{i=1}^{q} ((p·i/m))` as an exact rational, where `((x))` is the sawtooth
/// function: fractional part minus ½ off integers, 0 at integers. The result's
/// denominator divides `2m`.
///
/// Direct term-by-term accumulation, O(q); the intended arguments keep
/// `q < m`. This route deliberately shares no code with [`floor_sum`], so the
/// substitution identity between the two is a genuine cross-check.
///
/// Errors if `q < 0`, `p < 1`, or `m < 1`.
pub fn sawtooth_sum(q: &BigInt, p: &BigInt, m: &BigInt) -> Result<BigRational> {
    let num = if let (Some(qf), Some(pf), Some(mf)) = (to_fast(q), to_fast(p), to_fast(m)) {
        match sawtooth_sum_num_impl(&qf, &pf, &mf) {
            Err(Error::Overflow) => sawtooth_sum_num_impl(q, p, m)?,
            other => BigInt::from(other?),
        }
    } else {
        sawtooth_sum_num_impl(q, p, m)?
    };
    Ok(BigRational::new(num, BigInt::from(2) * m))
}

/// Numerator of the sawtooth sum over the fixed denominator `2m`: each
/// non-integer term `p·i/m` contributes `2·(p·i mod m) − m`, integer terms
/// contribute 0.
pub(crate) fn sawtooth_sum_num_impl<T: Scalar>(q: &T, p: &T, m: &T) -> Result<T> {
    if *m < T::one() {
        return Err(Error::domain(format!(
            "sawtooth_sum: modulus {m} must be positive"
        )));
    }
    if q.is_negative() {
        return Err(Error::domain(format!(
            "sawtooth_sum: q = {q} must be non-negative"
        )));
    }
    if *p < T::one() {
        return Err(Error::domain(format!(
            "sawtooth_sum: p = {p} must be positive"
        )));
    }
    let p_red = p.mod_floor(m);
    let mut acc = T::zero();
    let mut r = T::zero();
    let mut i = T::zero();
    while i < *q {
        r = add(&r, &p_red)?;
        if r >= *m {
            r = sub(&r, m)?;
        }
        if !r.is_zero() {
            acc = add(&acc, &sub(&add(&r, &r)?, m)?)?;
        }
        i = add(&i, &T::one())?;
    }
    Ok(acc)
}

/// `⌊√s⌋` by pure-integer Newton iteration seeded from the bit length; no
/// floating point is involved at any width.
///
/// Errors on negative input.
pub fn isqrt(s: &BigInt) -> Result<BigInt> {
    if s.is_negative() {
        return Err(Error::domain(format!("isqrt: negative argument {s}")));
    }
    if s.is_zero() {
        return Ok(BigInt::zero());
    }
    // 2^⌈bits/2⌉ > √s, so the iteration descends monotonically onto ⌊√s⌋.
    let mut x = BigInt::one() << s.bits().div_ceil(2);
    loop {
        let y = (&x + s / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    Ok(x)
}
