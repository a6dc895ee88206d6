//! Boundary-decomposition machinery: the solution sets on the three
//! coordinate hyperplanes (`x = 0`, `y = 0`, `z = 0`), the `3·C(N̂, 3)`
//! counting consequence of the conjectured decomposition of every solution
//! as `s1 − s2 + s3` with `s_i` on the respective hyperplane, a per-target
//! witness search, and a full counterexample report.
//!
//! An exact count above the consequence bound refutes the conjecture by
//! counting alone; instances small enough to enumerate also yield an
//! explicit non-decomposable solution.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::bounds::{count_bounds, BoundInterval};
use crate::counting::{count, CoinTriple};
use crate::error::{Error, Result};

/// A non-negative solution of `a·x + b·y + c·z = n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Solution {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
}

impl Solution {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Self {
        Solution {
            x: x.into(),
            y: y.into(),
            z: z.into(),
        }
    }

    fn satisfies(&self, a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> bool {
        !self.x.is_negative()
            && !self.y.is_negative()
            && !self.z.is_negative()
            && &(a * &self.x) + b * &self.y + c * &self.z == *n
    }
}

impl std::fmt::Display for Solution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// The three boundary solution sets, enumerated explicitly. A solution with
/// two zero coordinates belongs to two of the sets; membership is by
/// coordinate test, so such duplicates across sets are intended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryProfile {
    /// |{solutions with x = 0}|
    pub n1: u64,
    /// |{solutions with y = 0}|
    pub n2: u64,
    /// |{solutions with z = 0}|
    pub n3: u64,
    /// n1 + n2 + n3
    pub nhat: u64,
    pub s1_list: Vec<Solution>,
    pub s2_list: Vec<Solution>,
    pub s3_list: Vec<Solution>,
}

/// All `(u, v) ≥ 0` with `p·u + q·v = r`, in increasing `u`.
fn enumerate_pairs(p: &BigInt, q: &BigInt, r: &BigInt) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let mut u = BigInt::zero();
    let mut rest = r.clone();
    while !rest.is_negative() {
        let (v, rem) = rest.div_rem(q);
        if rem.is_zero() {
            out.push((u.clone(), v));
        }
        u += 1;
        rest -= p;
    }
    out
}

/// Enumerate the boundary solution sets of `a·x + b·y + c·z = n`.
pub fn boundary_profile(a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<BoundaryProfile> {
    CoinTriple::new(a, b, c)?;
    if n.is_negative() {
        return Err(Error::domain(format!("target n = {n} must be non-negative")));
    }
    let s1_list: Vec<Solution> = enumerate_pairs(b, c, n)
        .into_iter()
        .map(|(y, z)| Solution::new(0, y, z))
        .collect();
    let s2_list: Vec<Solution> = enumerate_pairs(a, c, n)
        .into_iter()
        .map(|(x, z)| Solution::new(x, 0, z))
        .collect();
    let s3_list: Vec<Solution> = enumerate_pairs(a, b, n)
        .into_iter()
        .map(|(x, y)| Solution::new(x, y, 0))
        .collect();
    let (n1, n2, n3) = (
        s1_list.len() as u64,
        s2_list.len() as u64,
        s3_list.len() as u64,
    );
    Ok(BoundaryProfile {
        n1,
        n2,
        n3,
        nhat: n1 + n2 + n3,
        s1_list,
        s2_list,
        s3_list,
    })
}

/// `3·C(nhat, 3)`, the conjectured upper bound on the total solution count.
pub fn consequence_bound(nhat: u64) -> BigInt {
    if nhat < 3 {
        return BigInt::zero();
    }
    let n = BigInt::from(nhat);
    (&n * (&n - 1) * (&n - 2)) / 2
}

/// Default cap on the boundary-combination search space.
pub const DEFAULT_SEARCH_CAP: u64 = 1_000_000;

/// Outcome of one decomposition search.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum DecompositionOutcome {
    /// `s1 − s2 + s3 = target` component-wise.
    Witness {
        s1: Solution,
        s2: Solution,
        s3: Solution,
    },
    /// No boundary combination reproduces the target; this refutes the
    /// conjecture on the instance.
    NoWitness,
    /// The combination space exceeded the cap; nothing was decided.
    Inconclusive { search_space: BigInt, cap: u64 },
}

/// Search the boundary sets for `s_i` with `s1 − s2 + s3 = target`, with the
/// default cap of [`DEFAULT_SEARCH_CAP`] combinations.
pub fn decomposition_search(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    n: &BigInt,
    target: &Solution,
) -> Result<DecompositionOutcome> {
    decomposition_search_capped(a, b, c, n, target, DEFAULT_SEARCH_CAP)
}

/// As [`decomposition_search`] with an explicit combination cap.
pub fn decomposition_search_capped(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    n: &BigInt,
    target: &Solution,
    cap: u64,
) -> Result<DecompositionOutcome> {
    if !target.satisfies(a, b, c, n) {
        return Err(Error::domain(format!(
            "target {target} is not a non-negative solution of {a}x + {b}y + {c}z = {n}"
        )));
    }
    let profile = boundary_profile(a, b, c, n)?;
    Ok(search_in_profile(&profile, target, cap))
}

/// The search proper, against a precomputed profile. Fixing `s1` and `s2`
/// forces `s3 = target − s1 + s2`, so the loop is quadratic with a set
/// lookup instead of cubic.
fn search_in_profile(
    profile: &BoundaryProfile,
    target: &Solution,
    cap: u64,
) -> DecompositionOutcome {
    let search_space =
        BigInt::from(profile.n1) * BigInt::from(profile.n2) * BigInt::from(profile.n3);
    if search_space > BigInt::from(cap) {
        return DecompositionOutcome::Inconclusive { search_space, cap };
    }
    let s3_set: HashSet<&Solution> = profile.s3_list.iter().collect();
    for s1 in &profile.s1_list {
        for s2 in &profile.s2_list {
            let candidate = Solution {
                x: &target.x - &s1.x + &s2.x,
                y: &target.y - &s1.y + &s2.y,
                z: &target.z - &s1.z + &s2.z,
            };
            if candidate.x.is_negative() || candidate.y.is_negative() || candidate.z.is_negative()
            {
                continue;
            }
            if s3_set.contains(&candidate) {
                return DecompositionOutcome::Witness {
                    s1: s1.clone(),
                    s2: s2.clone(),
                    s3: candidate,
                };
            }
        }
    }
    DecompositionOutcome::NoWitness
}

/// Every non-negative solution of `a·x + b·y + c·z = n`, ordered by `x`,
/// then `y`.
pub fn enumerate_solutions(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    n: &BigInt,
) -> Result<Vec<Solution>> {
    CoinTriple::new(a, b, c)?;
    if n.is_negative() {
        return Err(Error::domain(format!("target n = {n} must be non-negative")));
    }
    let mut out = Vec::new();
    let mut x = BigInt::zero();
    let mut rest = n.clone();
    while !rest.is_negative() {
        for (y, z) in enumerate_pairs(b, c, &rest) {
            out.push(Solution {
                x: x.clone(),
                y,
                z,
            });
        }
        x += 1;
        rest -= a;
    }
    Ok(out)
}

/// Result of auditing the decomposition claim over every solution of an
/// instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionAudit {
    /// Every solution admits a boundary decomposition.
    AllDecompose { targets_checked: u64 },
    /// The first solution (in enumeration order) with no decomposition;
    /// an explicit refutation of the conjecture on this instance.
    MissingWitness {
        target: Solution,
        targets_checked: u64,
    },
    /// The per-target search space or the instance itself was too large.
    Inconclusive { search_space: BigInt, cap: u64 },
}

/// Full report on one instance: boundary profile, consequence bound, strict
/// count bounds (for pairwise-coprime coefficients), the exact count, and the
/// verdict on the conjecture's counting consequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub profile: BoundaryProfile,
    /// `3·C(N̂, 3)`
    pub consequence_bound: BigInt,
    /// Strict bound interval; present only when `(a, b, c)` is pairwise
    /// coprime (the bounds module refuses other inputs).
    pub bound_interval: Option<BoundInterval>,
    pub exact_count: BigInt,
    /// `exact_count ≤ consequence_bound`; `false` refutes the conjecture.
    pub conjecture_consequence_holds: bool,
    /// Per-target decomposition audit; populated only on request.
    pub decomposition_audit: Option<DecompositionAudit>,
}

fn build_report(a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<CounterexampleReport> {
    let profile = boundary_profile(a, b, c, n)?;
    let bound = consequence_bound(profile.nhat);
    let triple = CoinTriple::new(a, b, c)?;
    let bound_interval = if triple.is_pairwise_coprime() {
        Some(count_bounds(a, b, c, n)?)
    } else {
        None
    };
    let exact_count = count(a, b, c, n)?;
    let holds = exact_count <= bound;
    Ok(CounterexampleReport {
        profile,
        consequence_bound: bound,
        bound_interval,
        exact_count,
        conjecture_consequence_holds: holds,
        decomposition_audit: None,
    })
}

/// Evaluate the conjecture's counting consequence on `(a, b, c; n)`.
pub fn check_counterexample(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    n: &BigInt,
) -> Result<CounterexampleReport> {
    build_report(a, b, c, n)
}

/// As [`check_counterexample`], additionally searching a decomposition for
/// every solution of the instance (the strong reading of the conjecture:
/// boundary solutions are targets too).
pub fn check_counterexample_with_audit(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    n: &BigInt,
    cap: u64,
) -> Result<CounterexampleReport> {
    let mut report = build_report(a, b, c, n)?;
    let profile = &report.profile;
    let search_space =
        BigInt::from(profile.n1) * BigInt::from(profile.n2) * BigInt::from(profile.n3);
    if search_space > BigInt::from(cap) || report.exact_count > BigInt::from(cap) {
        report.decomposition_audit = Some(DecompositionAudit::Inconclusive { search_space, cap });
        return Ok(report);
    }
    let targets = enumerate_solutions(a, b, c, n)?;
    if BigInt::from(targets.len()) != report.exact_count {
        return Err(Error::internal(format!(
            "enumeration found {} solutions but the closed form counted {}",
            targets.len(),
            report.exact_count
        )));
    }
    let mut checked = 0u64;
    for target in &targets {
        checked += 1;
        if search_in_profile(profile, target, cap) == DecompositionOutcome::NoWitness {
            report.decomposition_audit = Some(DecompositionAudit::MissingWitness {
                target: target.clone(),
                targets_checked: checked,
            });
            return Ok(report);
        }
    }
    report.decomposition_audit = Some(DecompositionAudit::AllDecompose {
        targets_checked: checked,
    });
    Ok(report)
}
