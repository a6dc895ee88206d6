//! Strict two-sided bounds on the solution count for pairwise-coprime
//! coefficients:
//!
//! `n(n+a+b+c)/(2abc) − (a+b+c)/2  <  N(a,b,c;n)  <  n(n+a+b+c)/(2abc) + (a+b+c)/2`
//!
//! Both bounds are exact rationals; the interval is open and its width is
//! exactly `a + b + c`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::counting::CoinTriple;
use crate::error::{Error, Result};

/// Open interval guaranteed to contain the exact count, plus the tightest
/// integers satisfying the strict inequalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundInterval {
    pub lower: BigRational,
    pub upper: BigRational,
    /// Smallest integer strictly above `lower`.
    pub integer_floor: BigInt,
    /// Largest integer strictly below `upper`.
    pub integer_ceil: BigInt,
}

impl BoundInterval {
    /// Strict containment test in exact arithmetic.
    pub fn contains(&self, value: &BigInt) -> bool {
        let v = BigRational::from_integer(value.clone());
        self.lower < v && v < self.upper
    }
}

fn smallest_integer_above(x: &BigRational) -> BigInt {
    if x.is_integer() {
        x.to_integer() + 1
    } else {
        x.ceil().to_integer()
    }
}

fn largest_integer_below(x: &BigRational) -> BigInt {
    if x.is_integer() {
        x.to_integer() - 1
    } else {
        x.floor().to_integer()
    }
}

/// The strict bound interval around the exact count of `a·x + b·y + c·z = n`
/// for pairwise-coprime positive `(a, b, c)` and `n ≥ 0`.
///
/// Refuses non-pairwise-coprime input: in reduced coordinates the bound
/// concerns the reduced target, not `n`, and conflating the two would
/// misreport. Callers can reduce first.
pub fn count_bounds(a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<BoundInterval> {
    let triple = CoinTriple::new(a, b, c)?;
    if !triple.is_pairwise_coprime() {
        return Err(Error::domain(format!(
            "bounds require pairwise-coprime coefficients; gcds of ({a}, {b}, {c}) are ({}, {}, {})",
            triple.g1, triple.g2, triple.g3
        )));
    }
    if n.is_negative() {
        return Err(Error::domain(format!("target n = {n} must be non-negative")));
    }
    let coeff_sum = a + b + c;
    let two_abc = BigInt::from(2) * a * b * c;
    let midpoint = BigRational::new(n * (n + &coeff_sum), two_abc);
    let half_width = BigRational::new(coeff_sum, BigInt::from(2));
    let lower = &midpoint - &half_width;
    let upper = &midpoint + &half_width;
    let integer_floor = smallest_integer_above(&lower);
    let integer_ceil = largest_integer_below(&upper);
    Ok(BoundInterval {
        lower,
        upper,
        integer_floor,
        integer_ceil,
    })
}

impl BoundInterval {
    /// Exact midpoint `(lower + upper)/2 = n(n+a+b+c)/(2abc)`.
    pub fn midpoint(&self) -> BigRational {
        (&self.lower + &self.upper) / BigRational::from_integer(BigInt::from(2))
    }

    /// Exact width `upper − lower`; always equals `a + b + c`.
    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }
}
