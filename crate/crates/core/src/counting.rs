//! Exact counting of non-negative solutions of `a·x + b·y + c·z = n`.
//!
//! Two closed-form routes are provided for pairwise-coprime coefficients —
//! the floor-sum form ([`count_pairwise_coprime`]) and the sawtooth form
//! ([`count_sawtooth`]) — plus the classical two-variable counter, the
//! reduction of a `gcd(a,b,c) = 1` triple to a pairwise-coprime instance,
//! a total dispatcher [`count`] for arbitrary coefficients, and a brute-force
//! oracle that shares no code with any closed form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::arith::{floor_sum_impl, mod_inverse_impl, residue_rep_impl, sawtooth_sum_num_impl};
use crate::error::{Error, Result};
use crate::scalar::{add, mul, sc, sub, to_fast, Scalar};

/// Coefficient triple with its pairwise gcds and total gcd cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoinTriple {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    /// gcd(b, c)
    pub g1: BigInt,
    /// gcd(c, a)
    pub g2: BigInt,
    /// gcd(a, b)
    pub g3: BigInt,
    /// gcd(a, b, c)
    pub g: BigInt,
}

impl CoinTriple {
    pub fn new(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() || !c.is_positive() {
            return Err(Error::domain(format!(
                "coefficients must be positive, got ({a}, {b}, {c})"
            )));
        }
        let g1 = b.gcd(c);
        let g2 = c.gcd(a);
        let g3 = a.gcd(b);
        let g = g1.gcd(a);
        Ok(CoinTriple {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            g1,
            g2,
            g3,
            g,
        })
    }

    pub fn is_pairwise_coprime(&self) -> bool {
        self.g1.is_one() && self.g2.is_one() && self.g3.is_one()
    }

    pub fn is_setwise_coprime(&self) -> bool {
        self.g.is_one()
    }
}

/// The six residue parameters and the aggregate numerator `N1` of the
/// closed-form counter, for a pairwise-coprime `(a, b, c)` and target `n`.
///
/// All six live in the `1..=modulus` range and satisfy
/// `b1p ≡ −n·b⁻¹, c1p ≡ b·c⁻¹ (mod a)`, `c2p ≡ −n·c⁻¹, a2p ≡ c·a⁻¹ (mod b)`,
/// `a3p ≡ −n·a⁻¹, b3p ≡ a·b⁻¹ (mod c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSystem {
    pub b1p: BigInt,
    pub c1p: BigInt,
    pub c2p: BigInt,
    pub a2p: BigInt,
    pub a3p: BigInt,
    pub b3p: BigInt,
    /// `n(n+a+b+c) + cb·b1p·(a+1−c1p(b1p−1)) + ac·c2p·(b+1−a2p(c2p−1))
    ///  + ba·a3p·(c+1−b3p(a3p−1))`; always divisible by `2abc`.
    pub n1: BigInt,
}

pub(crate) struct ResidueParts<T> {
    pub b1p: T,
    pub c1p: T,
    pub c2p: T,
    pub a2p: T,
    pub a3p: T,
    pub b3p: T,
    pub n1: T,
}

impl<T: Scalar + Into<BigInt>> ResidueParts<T> {
    fn into_public(self) -> ResidueSystem {
        ResidueSystem {
            b1p: self.b1p.into(),
            c1p: self.c1p.into(),
            c2p: self.c2p.into(),
            a2p: self.a2p.into(),
            a3p: self.a3p.into(),
            b3p: self.b3p.into(),
            n1: self.n1.into(),
        }
    }
}

/// Output of the pairwise-coprime reduction: the original triple's pairwise
/// gcds, the remainders fixing the forced digits of any solution, and the
/// reduced pairwise-coprime instance `(a, b, c; n)`. The reduced target `n`
/// may be negative, in which case the original equation has no solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub g1: BigInt,
    pub g2: BigInt,
    pub g3: BigInt,
    pub n1: BigInt,
    pub n2: BigInt,
    pub n3: BigInt,
    /// original a / (g2·g3)
    pub a: BigInt,
    /// original b / (g3·g1)
    pub b: BigInt,
    /// original c / (g1·g2)
    pub c: BigInt,
    /// (original n − a·n1 − b·n2 − c·n3) / (g1·g2·g3)
    pub n: BigInt,
}

pub(crate) struct ReducedParts<T> {
    pub g1: T,
    pub g2: T,
    pub g3: T,
    pub n1: T,
    pub n2: T,
    pub n3: T,
    pub a: T,
    pub b: T,
    pub c: T,
    pub n: T,
}

impl<T: Scalar + Into<BigInt>> ReducedParts<T> {
    fn into_public(self) -> ReducedInstance {
        ReducedInstance {
            g1: self.g1.into(),
            g2: self.g2.into(),
            g3: self.g3.into(),
            n1: self.n1.into(),
            n2: self.n2.into(),
            n3: self.n3.into(),
            a: self.a.into(),
            b: self.b.into(),
            c: self.c.into(),
            n: self.n.into(),
        }
    }
}

fn ensure_positive_triple<T: Scalar>(a: &T, b: &T, c: &T) -> Result<()> {
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(Error::domain(format!(
            "coefficients must be positive, got ({a}, {b}, {c})"
        )));
    }
    Ok(())
}

fn ensure_target<T: Scalar>(n: &T) -> Result<()> {
    if n.is_negative() {
        return Err(Error::domain(format!("target n = {n} must be non-negative")));
    }
    Ok(())
}

fn ensure_pairwise_coprime<T: Scalar>(a: &T, b: &T, c: &T) -> Result<()> {
    for (x, y, names) in [(a, b, "(a, b)"), (b, c, "(b, c)"), (c, a, "(c, a)")] {
        let g = x.gcd(y);
        if !g.is_one() {
            return Err(Error::domain(format!(
                "coefficients must be pairwise coprime: gcd{names} = gcd({x}, {y}) = {g}"
            )));
        }
    }
    Ok(())
}

/// One cyclic bullet of the residue system for modulus `m` and the following
/// coefficients `u`, `w`: returns `(−n·u⁻¹ mod m, u·w⁻¹ mod m)`, both as
/// `1..=m` representatives.
fn residue_pair<T: Scalar>(m: &T, u: &T, w: &T, n: &T) -> Result<(T, T)> {
    let u_inv = mod_inverse_impl(&u.mod_floor(m), m)?;
    let first = residue_rep_impl(&-mul(&n.mod_floor(m), &u_inv)?, m)?;
    let w_inv = mod_inverse_impl(&w.mod_floor(m), m)?;
    let second = residue_rep_impl(&mul(&u.mod_floor(m), &w_inv)?, m)?;
    Ok((first, second))
}

/// `others.0 · others.1 · first · (m + 1 − second·(first − 1))`, one corner
/// term of the aggregate numerator.
fn corner_term<T: Scalar>(m: &T, others: (&T, &T), first: &T, second: &T) -> Result<T> {
    let inner = sub(
        &add(m, &T::one())?,
        &mul(second, &sub(first, &T::one())?)?,
    )?;
    mul(&mul(&mul(others.0, others.1)?, first)?, &inner)
}

pub(crate) fn residue_params_impl<T: Scalar>(a: &T, b: &T, c: &T, n: &T) -> Result<ResidueParts<T>> {
    ensure_positive_triple(a, b, c)?;
    ensure_target(n)?;
    ensure_pairwise_coprime(a, b, c)?;

    let (b1p, c1p) = residue_pair(a, b, c, n)?;
    let (c2p, a2p) = residue_pair(b, c, a, n)?;
    let (a3p, b3p) = residue_pair(c, a, b, n)?;

    let coeff_sum = add(&add(a, b)?, c)?;
    let mut n1 = mul(n, &add(n, &coeff_sum)?)?;
    n1 = add(&n1, &corner_term(a, (c, b), &b1p, &c1p)?)?;
    n1 = add(&n1, &corner_term(b, (a, c), &c2p, &a2p)?)?;
    n1 = add(&n1, &corner_term(c, (b, a), &a3p, &b3p)?)?;

    Ok(ResidueParts {
        b1p,
        c1p,
        c2p,
        a2p,
        a3p,
        b3p,
        n1,
    })
}

/// The residue parameters for a pairwise-coprime triple and target `n`.
pub fn residue_params(a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<ResidueSystem> {
    if let (Some(af), Some(bf), Some(cf), Some(nf)) =
        (to_fast(a), to_fast(b), to_fast(c), to_fast(n))
    {
        match residue_params_impl(&af, &bf, &cf, &nf) {
            Err(Error::Overflow) => {}
            other => return other.map(ResidueParts::into_public),
        }
    }
    residue_params_impl(a, b, c, n).map(ResidueParts::into_public)
}

pub(crate) fn count_pairwise_coprime_impl<T: Scalar>(a: &T, b: &T, c: &T, n: &T) -> Result<T> {
    let parts = residue_params_impl(a, b, c, n)?;
    let two_abc = mul(&sc::<T>(2), &mul(&mul(a, b)?, c)?)?;
    let (quot, rem) = parts.n1.div_rem(&two_abc);
    if !rem.is_zero() {
        return Err(Error::internal(format!(
            "aggregate numerator {} is not divisible by 2abc = {two_abc}",
            parts.n1
        )));
    }
    let s1 = floor_sum_impl(&sub(&parts.b1p, &T::one())?, &parts.c1p, a)?;
    let s2 = floor_sum_impl(&sub(&parts.c2p, &T::one())?, &parts.a2p, b)?;
    let s3 = floor_sum_impl(&sub(&parts.a3p, &T::one())?, &parts.b3p, c)?;
    let total = sub(&add(&add(&add(&quot, &s1)?, &s2)?, &s3)?, &sc::<T>(2))?;
    if total.is_negative() {
        return Err(Error::internal(format!(
            "closed-form count came out negative ({total}) for ({a}, {b}, {c}; {n})"
        )));
    }
    Ok(total)
}

/// Exact solution count for pairwise-coprime `(a, b, c)` via the floor-sum
/// closed form: `N1/(2abc) + Σ⌊i·c1p/a⌋ + Σ⌊i·a2p/b⌋ + Σ⌊i·b3p/c⌋ − 2`.
pub fn count_pairwise_coprime(a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<BigInt> {
    if let (Some(af), Some(bf), Some(cf), Some(nf)) =
        (to_fast(a), to_fast(b), to_fast(c), to_fast(n))
    {
        match count_pairwise_coprime_impl(&af, &bf, &cf, &nf) {
            Err(Error::Overflow) => {}
            other => return other.map(BigInt::from),
        }
    }
    count_pairwise_coprime_impl(a, b, c, n)
}

pub(crate) fn count_sawtooth_impl<T: Scalar>(a: &T, b: &T, c: &T, n: &T) -> Result<T> {
    let parts = residue_params_impl(a, b, c, n)?;
    let ab = mul(a, b)?;
    let ac = mul(a, c)?;
    let bc = mul(b, c)?;
    let abc = mul(&ab, c)?;
    let two_abc = mul(&sc::<T>(2), &abc)?;

    // Everything over the common denominator 2abc, as one exact integer
    // numerator.
    let coeff_sum = add(&add(a, b)?, c)?;
    let mut num = mul(n, &add(n, &coeff_sum)?)?; // n(n+a+b+c)
    num = sub(&num, &abc)?; // − ½
    num = add(&num, &mul(&parts.b1p, &bc)?)?; // + b1p/(2a)
    num = add(&num, &mul(&parts.c2p, &ac)?)?; // + c2p/(2b)
    num = add(&num, &mul(&parts.a3p, &ab)?)?; // + a3p/(2c)

    // − Σ((i·c1p/a)) etc.; each raw value is a numerator over 2·modulus
    let raw1 = sawtooth_sum_num_impl(&sub(&parts.b1p, &T::one())?, &parts.c1p, a)?;
    num = sub(&num, &mul(&raw1, &bc)?)?;
    let raw2 = sawtooth_sum_num_impl(&sub(&parts.c2p, &T::one())?, &parts.a2p, b)?;
    num = sub(&num, &mul(&raw2, &ac)?)?;
    let raw3 = sawtooth_sum_num_impl(&sub(&parts.a3p, &T::one())?, &parts.b3p, c)?;
    num = sub(&num, &mul(&raw3, &ab)?)?;

    let (quot, rem) = num.div_rem(&two_abc);
    if !rem.is_zero() {
        return Err(Error::internal(format!(
            "sawtooth-form count is not an integer: {num} over {two_abc}"
        )));
    }
    if quot.is_negative() {
        return Err(Error::internal(format!(
            "sawtooth-form count came out negative ({quot}) for ({a}, {b}, {c}; {n})"
        )));
    }
    Ok(quot)
}

/// Exact solution count for pairwise-coprime `(a, b, c)` via the sawtooth
/// form: `n(n+a+b+c)/(2abc) − ½ + b1p/(2a) + c2p/(2b) + a3p/(2c)` minus the
/// three sawtooth sums, evaluated in exact rational arithmetic. Always equal
/// to [`count_pairwise_coprime`]; the two routes share only the residue
/// parameters, so their agreement is a meaningful cross-check.
pub fn count_sawtooth(a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<BigInt> {
    if let (Some(af), Some(bf), Some(cf), Some(nf)) =
        (to_fast(a), to_fast(b), to_fast(c), to_fast(n))
    {
        match count_sawtooth_impl(&af, &bf, &cf, &nf) {
            Err(Error::Overflow) => {}
            other => return other.map(BigInt::from),
        }
    }
    count_sawtooth_impl(a, b, c, n)
}

pub(crate) fn count_two_var_impl<T: Scalar>(a: &T, b: &T, n: &T) -> Result<T> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::domain(format!(
            "coefficients must be positive, got ({a}, {b})"
        )));
    }
    ensure_target(n)?;
    let g = a.gcd(b);
    if !g.is_one() {
        return Err(Error::domain(format!(
            "coefficients must be coprime: gcd({a}, {b}) = {g}"
        )));
    }
    // count = n/(ab) − {b⁻¹n/a} − {a⁻¹n/b} + 1, exactly
    let b_inv = mod_inverse_impl(&b.mod_floor(a), a)?;
    let ra = mul(&n.mod_floor(a), &b_inv)?.mod_floor(a);
    let a_inv = mod_inverse_impl(&a.mod_floor(b), b)?;
    let rb = mul(&n.mod_floor(b), &a_inv)?.mod_floor(b);
    let ab = mul(a, b)?;
    let num = sub(&sub(n, &mul(b, &ra)?)?, &mul(a, &rb)?)?;
    let (quot, rem) = num.div_rem(&ab);
    if !rem.is_zero() {
        return Err(Error::internal(format!(
            "two-variable numerator {num} is not divisible by ab = {ab}"
        )));
    }
    add(&quot, &T::one())
}

/// Exact count of `(y, z) ≥ 0` with `a·y + b·z = n` for coprime `a`, `b`.
pub fn count_two_var(a: &BigInt, b: &BigInt, n: &BigInt) -> Result<BigInt> {
    if let (Some(af), Some(bf), Some(nf)) = (to_fast(a), to_fast(b), to_fast(n)) {
        match count_two_var_impl(&af, &bf, &nf) {
            Err(Error::Overflow) => {}
            other => return other.map(BigInt::from),
        }
    }
    count_two_var_impl(a, b, n)
}

pub(crate) fn reduce_instance_impl<T: Scalar>(a: &T, b: &T, c: &T, n: &T) -> Result<ReducedParts<T>> {
    ensure_positive_triple(a, b, c)?;
    ensure_target(n)?;
    let g = a.gcd(b).gcd(c);
    if !g.is_one() {
        return Err(Error::domain(format!(
            "reduction requires gcd(a, b, c) = 1, got gcd({a}, {b}, {c}) = {g}"
        )));
    }
    let g1 = b.gcd(c);
    let g2 = c.gcd(a);
    let g3 = a.gcd(b);

    // forced remainders: n1 = (n·a⁻¹ mod g1) in 0..g1, cyclically
    let a_inv = mod_inverse_impl(&a.mod_floor(&g1), &g1)?;
    let n1 = mul(&n.mod_floor(&g1), &a_inv)?.mod_floor(&g1);
    let b_inv = mod_inverse_impl(&b.mod_floor(&g2), &g2)?;
    let n2 = mul(&n.mod_floor(&g2), &b_inv)?.mod_floor(&g2);
    let c_inv = mod_inverse_impl(&c.mod_floor(&g3), &g3)?;
    let n3 = mul(&n.mod_floor(&g3), &c_inv)?.mod_floor(&g3);

    let exact_div = |num: &T, den: &T, what: &str| -> Result<T> {
        let (q, r) = num.div_rem(den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::internal(format!(
                "{what}: {num} is not divisible by {den}"
            )))
        }
    };
    let ra = exact_div(a, &mul(&g2, &g3)?, "reduced coefficient a")?;
    let rb = exact_div(b, &mul(&g3, &g1)?, "reduced coefficient b")?;
    let rc = exact_div(c, &mul(&g1, &g2)?, "reduced coefficient c")?;

    let spent = add(&add(&mul(a, &n1)?, &mul(b, &n2)?)?, &mul(c, &n3)?)?;
    let g_prod = mul(&mul(&g1, &g2)?, &g3)?;
    let rn = exact_div(&sub(n, &spent)?, &g_prod, "reduced target")?;

    Ok(ReducedParts {
        g1,
        g2,
        g3,
        n1,
        n2,
        n3,
        a: ra,
        b: rb,
        c: rc,
        n: rn,
    })
}

/// Reduce `(a, b, c; n)` with `gcd(a, b, c) = 1` to a pairwise-coprime
/// instance with the same solution count. The reduced target may be negative;
/// the count is then zero.
pub fn reduce_instance(a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<ReducedInstance> {
    if let (Some(af), Some(bf), Some(cf), Some(nf)) =
        (to_fast(a), to_fast(b), to_fast(c), to_fast(n))
    {
        match reduce_instance_impl(&af, &bf, &cf, &nf) {
            Err(Error::Overflow) => {}
            other => return other.map(ReducedParts::into_public),
        }
    }
    reduce_instance_impl(a, b, c, n).map(ReducedParts::into_public)
}

pub(crate) fn count_impl<T: Scalar>(a: &T, b: &T, c: &T, n: &T) -> Result<T> {
    ensure_positive_triple(a, b, c)?;
    ensure_target(n)?;
    let g = a.gcd(b).gcd(c);
    if !n.mod_floor(&g).is_zero() {
        return Ok(T::zero());
    }
    let (a, b, c, n) = (
        a.div_floor(&g),
        b.div_floor(&g),
        c.div_floor(&g),
        n.div_floor(&g),
    );
    let red = reduce_instance_impl(&a, &b, &c, &n)?;
    if red.n.is_negative() {
        return Ok(T::zero());
    }
    count_pairwise_coprime_impl(&red.a, &red.b, &red.c, &red.n)
}

/// Exact solution count for arbitrary positive coefficients and `n ≥ 0`:
/// zero when `gcd(a, b, c)` does not divide `n`, otherwise divide through,
/// reduce to a pairwise-coprime instance, and apply the closed form.
pub fn count(a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<BigInt> {
    if let (Some(af), Some(bf), Some(cf), Some(nf)) =
        (to_fast(a), to_fast(b), to_fast(c), to_fast(n))
    {
        match count_impl(&af, &bf, &cf, &nf) {
            Err(Error::Overflow) => {}
            other => return other.map(BigInt::from),
        }
    }
    count_impl(a, b, c, n)
}

/// Default safety cap for the brute-force oracle.
pub const BRUTE_FORCE_CAP: u64 = 10_000_000;

/// Below this target the oracle runs the full triple loop; above it, the
/// semi-analytic loop over `x` with a naive inner walk.
const TRIPLE_LOOP_LIMIT: u64 = 120;

/// Brute-force oracle with the default cap of [`BRUTE_FORCE_CAP`].
pub fn brute_force_count(a: u64, b: u64, c: u64, n: u64) -> Result<u64> {
    brute_force_count_capped(a, b, c, n, BRUTE_FORCE_CAP)
}

/// Count by enumeration. For tiny `n` this is a full triple loop; otherwise
/// it loops over `x` and walks `y` directly, checking divisibility for `z` —
/// deliberately sharing no code with [`count_two_var`]'s closed form.
///
/// Refuses `n` above `cap` to keep oracle runs bounded.
pub fn brute_force_count_capped(a: u64, b: u64, c: u64, n: u64, cap: u64) -> Result<u64> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::domain(format!(
            "coefficients must be positive, got ({a}, {b}, {c})"
        )));
    }
    if n > cap {
        return Err(Error::domain(format!(
            "brute force refused: n = {n} exceeds the enumeration cap {cap}"
        )));
    }
    let mut total = 0u64;
    if n <= TRIPLE_LOOP_LIMIT {
        for x in 0..=n / a {
            for y in 0..=n / b {
                for z in 0..=n / c {
                    if a * x + b * y + c * z == n {
                        total += 1;
                    }
                }
            }
        }
    } else {
        for x in 0..=n / a {
            let rest = n - a * x;
            let mut y = 0u64;
            while b * y <= rest {
                if (rest - b * y).is_multiple_of(c) {
                    total += 1;
                }
                y += 1;
            }
        }
    }
    Ok(total)
}
