//! The inverse problem: for which targets `n` does `a·x + b·y + c·z = n`
//! have exactly `k` solutions?
//!
//! For `k` at or above a computable threshold `M`, the strict count bounds
//! invert: any admissible `n` is pinned into a sub-unit window, so the
//! candidate set is either empty or the single value `γ_k`. `k` is of
//! *category I* when `γ_k ≠ δ_k` and the count at `γ_k` equals `k` (the
//! candidate set is `{γ_k}`), and of *category II* otherwise (the set is
//! empty). Coefficients that are merely setwise coprime reduce to a
//! pairwise-coprime triple whose single candidate fans out into a
//! `g1·g2·g3`-member family; an overall gcd `g > 1` scales every member
//! by `g`.
//!
//! All threshold and radicand arithmetic runs at arbitrary precision:
//! `(2αβ − 1)²` overflows 64 bits already for coefficients near 100 and
//! 128 bits for coefficients near 10⁶.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::isqrt;
use crate::counting::{count, CoinTriple};
use crate::error::{Error, Result};

/// `α = (a+b+c)/2` and `β = 2abc`, with `α` stored doubled so every quantity
/// stays an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBeta {
    /// `2α = a + b + c`
    pub two_alpha: BigInt,
    /// `β = 2abc`
    pub beta: BigInt,
}

impl AlphaBeta {
    pub fn new(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() || !c.is_positive() {
            return Err(Error::domain(format!(
                "coefficients must be positive, got ({a}, {b}, {c})"
            )));
        }
        Ok(AlphaBeta {
            two_alpha: a + b + c,
            beta: BigInt::from(2) * a * b * c,
        })
    }
}

/// Which of the two stated threshold formulas to use. They differ; both are
/// valid sufficient conditions, and the smaller (default) one widens
/// applicability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThresholdVariant {
    /// `M = ⌊((2αβ−1)² − 4α²)/(4β) + α⌋ + 1` — the proof-consistent form.
    #[default]
    Theorem3,
    /// `M = ⌊((2αβ−1)² − α²)/β + α⌋ + 1` — the larger summary form.
    Summary,
}

impl std::fmt::Display for ThresholdVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThresholdVariant::Theorem3 => write!(f, "theorem3"),
            ThresholdVariant::Summary => write!(f, "summary"),
        }
    }
}

/// The applicability threshold `M` for `(a, b, c)`, exactly.
///
/// With `t = a + b + c = 2α`, both variants reduce to `⌊X/(4β)⌋ + 1` over a
/// single scaled numerator: `X = (tβ−1)² − t² + 2tβ` (theorem3) or
/// `X = 4(tβ−1)² − t² + 2tβ` (summary), which avoids rational arithmetic.
pub fn threshold_m(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    variant: ThresholdVariant,
) -> Result<BigInt> {
    ensure_pairwise_coprime_triple(a, b, c)?;
    let ab = AlphaBeta::new(a, b, c)?;
    let t = &ab.two_alpha;
    let beta = &ab.beta;
    let tb1 = t * beta - 1;
    let sq = &tb1 * &tb1;
    let x: BigInt = match variant {
        ThresholdVariant::Theorem3 => &sq - t * t + BigInt::from(2) * t * beta,
        ThresholdVariant::Summary => BigInt::from(4) * &sq - t * t + BigInt::from(2) * t * beta,
    };
    Ok(x.div_floor(&(BigInt::from(4) * beta)) + 1)
}

fn ensure_pairwise_coprime_triple(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<CoinTriple> {
    let triple = CoinTriple::new(a, b, c)?;
    if !triple.is_pairwise_coprime() {
        return Err(Error::domain(format!(
            "operation requires pairwise-coprime coefficients; gcds of ({a}, {b}, {c}) are ({}, {}, {})",
            triple.g1, triple.g2, triple.g3
        )));
    }
    Ok(triple)
}

fn ensure_natural_k(k: &BigInt) -> Result<()> {
    if !k.is_positive() {
        return Err(Error::domain(format!("k = {k} must be a natural number")));
    }
    Ok(())
}

/// Shared exact evaluation of `⌊√(β(k±α)+α²) − α⌋`: with `t = a+b+c`, the
/// radicand scales by 4 into `s = 4βk ± 2βt + t²` and the value is
/// `⌊(isqrt(s) − t)/2⌋`. Halving preserves the floor across the sub-unit
/// interval because `⌊√s⌋ = isqrt(s)` exactly.
fn gamma_delta_floor(ab: &AlphaBeta, k: &BigInt, plus: bool) -> Result<BigInt> {
    let t = &ab.two_alpha;
    let beta = &ab.beta;
    let four_beta_k = BigInt::from(4) * beta * k;
    let shift = BigInt::from(2) * beta * t;
    let s = if plus {
        &four_beta_k + &shift + t * t
    } else {
        &four_beta_k - &shift + t * t
    };
    if s.is_negative() {
        return Err(Error::domain(format!(
            "radicand β(k−α)+α² is negative for k = {k}"
        )));
    }
    Ok((isqrt(&s)? - t).div_floor(&BigInt::from(2)))
}

/// `γ_k = ⌊√(β(k+α)+α²) − α⌋`, the upper end of the admissible window.
pub fn gamma_k(a: &BigInt, b: &BigInt, c: &BigInt, k: &BigInt) -> Result<BigInt> {
    ensure_pairwise_coprime_triple(a, b, c)?;
    ensure_natural_k(k)?;
    gamma_delta_floor(&AlphaBeta::new(a, b, c)?, k, true)
}

/// `δ_k = ⌊√(β(k−α)+α²) − α⌋`, the lower end of the admissible window.
///
/// Errors when the radicand is negative (never the case for `k ≥ M`).
pub fn delta_k(a: &BigInt, b: &BigInt, c: &BigInt, k: &BigInt) -> Result<BigInt> {
    ensure_pairwise_coprime_triple(a, b, c)?;
    ensure_natural_k(k)?;
    gamma_delta_floor(&AlphaBeta::new(a, b, c)?, k, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CategoryTag {
    CategoryI,
    CategoryII,
}

impl std::fmt::Display for CategoryTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CategoryTag::CategoryI => write!(f, "category I"),
            CategoryTag::CategoryII => write!(f, "category II"),
        }
    }
}

/// Why a `k` received its category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CategoryReason {
    /// `γ_k = δ_k`: the admissible window contains no integer.
    GammaEqualsDelta,
    /// The count at `γ_k` differs from `k`.
    CountMismatch,
    /// The count at `γ_k` equals `k`.
    CountMatch,
}

/// Category decision for one `k`, with the evidence that produced it.
/// `tag` is category I exactly when `reason` is [`CategoryReason::CountMatch`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Category {
    pub tag: CategoryTag,
    pub reason: CategoryReason,
    pub gamma: BigInt,
    pub delta: BigInt,
    /// The count at `γ_k`; absent when `γ_k = δ_k` made counting unnecessary.
    pub count_at_gamma: Option<BigInt>,
}

impl Category {
    pub fn is_category_i(&self) -> bool {
        self.tag == CategoryTag::CategoryI
    }
}

/// Decide the category of `k ≥ M` with respect to pairwise-coprime
/// `(a, b, c)`: category II when `γ_k = δ_k`; otherwise count the solutions
/// at `γ_k` and compare with `k`.
///
/// `k` below the threshold is refused with the computed `M` in the message.
pub fn classify(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    k: &BigInt,
    variant: ThresholdVariant,
) -> Result<Category> {
    ensure_pairwise_coprime_triple(a, b, c)?;
    ensure_natural_k(k)?;
    let m = threshold_m(a, b, c, variant)?;
    if *k < m {
        return Err(Error::precondition(format!(
            "k = {k} is below the threshold M = {m} ({variant} variant) for ({a}, {b}, {c})"
        )));
    }
    let ab = AlphaBeta::new(a, b, c)?;
    let gamma = gamma_delta_floor(&ab, k, true)?;
    let delta = gamma_delta_floor(&ab, k, false)?;
    if gamma == delta {
        return Ok(Category {
            tag: CategoryTag::CategoryII,
            reason: CategoryReason::GammaEqualsDelta,
            gamma,
            delta,
            count_at_gamma: None,
        });
    }
    let at_gamma = count(a, b, c, &gamma)?;
    let (tag, reason) = if at_gamma == *k {
        (CategoryTag::CategoryI, CategoryReason::CountMatch)
    } else {
        (CategoryTag::CategoryII, CategoryReason::CountMismatch)
    };
    Ok(Category {
        tag,
        reason,
        gamma,
        delta,
        count_at_gamma: Some(at_gamma),
    })
}

/// Which coprimality structure produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// All three pairwise gcds are 1.
    Pairwise,
    /// Only the overall gcd is 1.
    Setwise,
    /// Overall gcd exceeds 1; every member is scaled by it.
    General,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Regime::Pairwise => write!(f, "pairwise"),
            Regime::Setwise => write!(f, "setwise"),
            Regime::General => write!(f, "general"),
        }
    }
}

/// The solved inverse problem for one `k`: the full member set of targets
/// with exactly `k` representations and the max/min/cardinality/sum
/// statistics. `g_stat`/`h_stat` are `None` — genuinely undefined, never a
/// sentinel — when the member set is empty.
///
/// For the general regime, `category` (and its `γ`/`δ` evidence) refers to
/// the fully reduced pairwise-coprime triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RkResult {
    pub k: BigInt,
    pub regime: Regime,
    pub category: Category,
    /// All members of the solution set, sorted ascending.
    pub members: Vec<BigInt>,
    /// Maximum member, when any exist.
    pub g_stat: Option<BigInt>,
    /// Minimum member, when any exist.
    pub h_stat: Option<BigInt>,
    /// Number of members.
    pub c_stat: BigInt,
    /// Sum of members (0 for the empty set).
    pub s_stat: BigInt,
}

/// Member families beyond this size are refused rather than materialized.
const MAX_FAMILY: u64 = 4_000_000;

fn to_scan_index(v: &BigInt) -> Result<u64> {
    num_traits::ToPrimitive::to_u64(v)
        .ok_or_else(|| Error::domain(format!("{v} does not fit the enumeration range")))
}

/// Solve the inverse problem for pairwise-coprime `(a, b, c)` and `k ≥ M`:
/// the member set is `{γ_k}` for category I and empty for category II.
pub fn rk_pairwise(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    k: &BigInt,
    variant: ThresholdVariant,
) -> Result<RkResult> {
    ensure_pairwise_coprime_triple(a, b, c)?;
    rk_setwise(a, b, c, k, variant)
}

/// Solve the inverse problem for `gcd(a, b, c) = 1` (not necessarily pairwise
/// coprime): classify `k` against the reduced pairwise-coprime triple
/// `(A, B, C)`; for category I the members are the explicit family
/// `{g1·g2·g3·γ'_k + a·i1 + b·i2 + c·i3}` over `0 ≤ i_j < g_j`, enumerated
/// and sorted, with all statistics computed from the enumeration.
pub fn rk_setwise(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    k: &BigInt,
    variant: ThresholdVariant,
) -> Result<RkResult> {
    let triple = CoinTriple::new(a, b, c)?;
    if !triple.is_setwise_coprime() {
        return Err(Error::domain(format!(
            "gcd(a, b, c) must be 1, got gcd({a}, {b}, {c}) = {}",
            triple.g
        )));
    }
    let regime = if triple.is_pairwise_coprime() {
        Regime::Pairwise
    } else {
        Regime::Setwise
    };
    let red_a = a / (&triple.g2 * &triple.g3);
    let red_b = b / (&triple.g3 * &triple.g1);
    let red_c = c / (&triple.g1 * &triple.g2);
    let category = classify(&red_a, &red_b, &red_c, k, variant)?;

    if !category.is_category_i() {
        return Ok(RkResult {
            k: k.clone(),
            regime,
            category,
            members: Vec::new(),
            g_stat: None,
            h_stat: None,
            c_stat: BigInt::zero(),
            s_stat: BigInt::zero(),
        });
    }

    let (d1, d2, d3) = (
        to_scan_index(&triple.g1)?,
        to_scan_index(&triple.g2)?,
        to_scan_index(&triple.g3)?,
    );
    let family = d1
        .checked_mul(d2)
        .and_then(|v| v.checked_mul(d3))
        .filter(|v| *v <= MAX_FAMILY)
        .ok_or_else(|| {
            Error::domain(format!(
                "member family of size {} · {} · {} is too large to enumerate",
                triple.g1, triple.g2, triple.g3
            ))
        })?;

    let base = &triple.g1 * &triple.g2 * &triple.g3 * &category.gamma;
    let mut members = Vec::with_capacity(family as usize);
    for i1 in 0..d1 {
        let pa = &base + a * BigInt::from(i1);
        for i2 in 0..d2 {
            let pb = &pa + b * BigInt::from(i2);
            for i3 in 0..d3 {
                members.push(&pb + c * BigInt::from(i3));
            }
        }
    }
    members.sort();
    members.dedup();
    if members.len() as u64 != family {
        return Err(Error::internal(format!(
            "member family collapsed: expected {family} distinct targets, got {}",
            members.len()
        )));
    }
    let s_stat = members.iter().sum();
    Ok(RkResult {
        k: k.clone(),
        regime,
        category,
        g_stat: members.last().cloned(),
        h_stat: members.first().cloned(),
        c_stat: BigInt::from(family),
        s_stat,
        members,
    })
}

/// Solve the inverse problem for arbitrary positive coefficients: divide out
/// `g = gcd(a, b, c)`, solve the setwise problem, and scale every member and
/// the max/min/sum statistics by `g`; the cardinality is unchanged.
pub fn rk_general(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    k: &BigInt,
    variant: ThresholdVariant,
) -> Result<RkResult> {
    let triple = CoinTriple::new(a, b, c)?;
    ensure_natural_k(k)?;
    if triple.g.is_one() {
        return rk_setwise(a, b, c, k, variant);
    }
    let inner = rk_setwise(&(a / &triple.g), &(b / &triple.g), &(c / &triple.g), k, variant)?;
    let scale = |v: BigInt| -> BigInt { v * &triple.g };
    Ok(RkResult {
        k: inner.k,
        regime: Regime::General,
        category: inner.category,
        members: inner.members.into_iter().map(scale).collect(),
        g_stat: inner.g_stat.map(scale),
        h_stat: inner.h_stat.map(scale),
        c_stat: inner.c_stat,
        s_stat: scale(inner.s_stat),
    })
}

/// Definition-level oracle: every `t` in `0..=t_max` whose exact count equals
/// `k`, using the closed-form counter for speed.
pub fn brute_force_rk(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    k: &BigInt,
    t_max: &BigInt,
) -> Result<Vec<BigInt>> {
    let limit = to_scan_index(t_max)?;
    let mut members = Vec::new();
    for t in 0..=limit {
        let t = BigInt::from(t);
        if count(a, b, c, &t)? == *k {
            members.push(t);
        }
    }
    Ok(members)
}

/// A scan bound that provably covers every member for pairwise-coprime
/// coefficients: any `t > γ_k` forces the strict lower count bound above `k`,
/// so scanning `0..=γ_k` misses nothing.
pub fn rk_scan_limit(a: &BigInt, b: &BigInt, c: &BigInt, k: &BigInt) -> Result<BigInt> {
    gamma_k(a, b, c, k)
}
