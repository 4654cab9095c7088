//! Closed-form bound evaluators and executable verifiers for the counting
//! arguments behind them. Every value is exact: integers in u128, everything
//! fractional as `BigRational`. No inequality here is ever decided in
//! floating point.

mod config;
mod weights;

pub use config::{config_edge_bound, ConfigKind};
pub use weights::{
    check_proposition_sub, verify_sum_w, weight_partition, PropositionRoute, WeightAssignment,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

/// An exact value: integer or rational. Rationals print as `p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactValue {
    Int(u128),
    Rational(BigRational),
}

impl std::fmt::Display for ExactValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExactValue::Int(v) => write!(f, "{v}"),
            ExactValue::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl Serialize for ExactValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Outcome of one bound evaluation or verification.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub value: ExactValue,
    pub ok: bool,
    pub notes: Vec<String>,
}

/// Edge count of the height-t tree whose internal vertices all have degree
/// `delta`: sum over m of delta*(delta-1)^(m-1).
pub fn tree_edges(t: u32, delta: u32) -> u128 {
    assert!(t >= 1 && delta >= 2, "tree_edges needs t >= 1, delta >= 2");
    (1..=t)
        .map(|m| delta as u128 * (delta as u128 - 1).pow(m - 1))
        .sum()
}

/// Edge count of one root branch of the same tree: tree_edges / delta.
pub fn tree1_edges(t: u32, delta: u32) -> u128 {
    assert!(t >= 1 && delta >= 2, "tree1_edges needs t >= 1, delta >= 2");
    (1..=t).map(|m| (delta as u128 - 1).pow(m - 1)).sum()
}

/// General upper bound on the extremal edge threshold:
/// floor(3*delta^t/2) + 1.
pub fn ht_upper_general(t: u32, delta: u32) -> u128 {
    assert!(t >= 1 && delta >= 1);
    3 * (delta as u128).pow(t) / 2 + 1
}

/// Conjectured exact threshold at t = 3: delta^3 - delta^2 + delta + 2.
pub fn ht_conjecture_t3(delta: u32) -> u128 {
    assert!(delta >= 1);
    let d = delta as u128;
    d * d * d - d * d + d + 2
}

/// Exact t = 2 threshold: 5*delta^2/4 + 1, kept rational for odd delta.
pub fn h2_bound(delta: u32) -> BigRational {
    assert!(delta >= 1);
    let d = BigInt::from(delta);
    BigRational::new(5 * &d * &d + 4, BigInt::from(4))
}

/// Exact maximum for the substrong configuration:
/// sum_{m<t} delta*(delta-1)^(m-1) + (3/2)*delta*(delta-1)^(t-1).
/// An integer exactly when delta is even.
pub fn substrong_max(t: u32, delta: u32) -> BigRational {
    assert!(t >= 1 && delta >= 2);
    let mut total = BigRational::zero();
    for m in 1..t {
        total += BigRational::from(BigInt::from(
            delta as u128 * (delta as u128 - 1).pow(m - 1),
        ));
    }
    let top = BigInt::from(3 * delta as u128 * (delta as u128 - 1).pow(t - 1));
    total + BigRational::new(top, BigInt::from(2))
}

fn ceil_rational(r: &BigRational) -> BigInt {
    // BigRational keeps the denominator positive; Integer::div_ceil is the
    // mathematical ceiling for either sign of the numerator.
    Integer::div_ceil(r.numer(), r.denom())
}

/// Checks, in exact rational arithmetic, whether
/// ceil(0.881*(2*delta^t + 1) + 0.119*1.5*delta^t) < 1.941*delta^t,
/// the arithmetic step that turns the clique bound into the 1.941*delta^t
/// coloring bound for large delta.
pub fn corollary_arithmetic(t: u32, delta: u32) -> bool {
    assert!(t >= 1 && delta >= 1);
    corollary_arithmetic_power(BigInt::from((delta as u128).pow(t)))
}

fn corollary_arithmetic_power(d: BigInt) -> bool {
    let thousandth = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(1000));
    let lhs = thousandth(881) * BigRational::from(2 * &d + 1)
        + thousandth(119) * BigRational::new(3 * &d, BigInt::from(2));
    let rhs = thousandth(1941) * BigRational::from_integer(d);
    BigRational::from_integer(ceil_rational(&lhs)) < rhs
}

/// The least power value D = delta^t at which the corollary arithmetic goes
/// through, found by upward scan.
pub fn corollary_threshold_power() -> u128 {
    let mut d = 1u128;
    loop {
        if corollary_arithmetic_power(BigInt::from(d)) {
            return d;
        }
        d += 1;
    }
}

/// The two-branch fraction sum whose lower bound of 1 closes the substrong
/// count: (3x/2 - m)/(j - m) + (3y/2 - n)/(j - n), exact.
///
/// Hypotheses: j > x >= m > 0, j > y >= n > 0, x + y >= j. Equality with 1
/// holds exactly at m = n = x = y = j/2.
pub fn technical_inequality(j: u64, x: u64, y: u64, m: u64, n: u64) -> Result<BigRational> {
    if !(j > x && x >= m && m > 0 && j > y && y >= n && n > 0 && x + y >= j) {
        return Err(Error::InvalidArgument(format!(
            "technical inequality hypotheses violated: j={j} x={x} y={y} m={m} n={n}"
        )));
    }
    let frac = |top: u64, sub: u64, low: u64| {
        BigRational::new(
            BigInt::from(3 * top) - BigInt::from(2 * sub),
            BigInt::from(2 * (j - low)),
        )
    };
    Ok(frac(x, m, m) + frac(y, n, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, ToPrimitive};

    #[test]
    fn tree_edge_values() {
        assert_eq!(tree_edges(1, 7), 7);
        assert_eq!(tree_edges(3, 3), 21);
        assert_eq!(tree_edges(4, 3), 45);
        assert_eq!(tree_edges(3, 4), 52);
        assert_eq!(tree1_edges(3, 3), 7);
        assert_eq!(tree1_edges(2, 3), 3);
    }

    #[test]
    fn tree_edges_below_delta_power() {
        for t in 1..=8 {
            for delta in 2..=16 {
                assert!(tree_edges(t, delta) <= (delta as u128).pow(t));
            }
        }
    }

    #[test]
    fn ht_values() {
        assert_eq!(ht_upper_general(3, 3), 41);
        assert_eq!(ht_upper_general(1, 4), 7);
        assert_eq!(ht_upper_general(2, 2), 7);
        assert_eq!(ht_conjecture_t3(3), 23);
        assert_eq!(ht_conjecture_t3(4), 54);
        assert_eq!(ht_conjecture_t3(1), 3);
    }

    #[test]
    fn conjecture_below_general_bound() {
        for delta in 2..=16 {
            assert!(ht_conjecture_t3(delta) <= ht_upper_general(3, delta));
        }
    }

    #[test]
    fn h2_values() {
        assert_eq!(h2_bound(4).to_integer().to_u32(), Some(21));
        assert_eq!(h2_bound(2).to_integer().to_u32(), Some(6));
        let r = h2_bound(3);
        assert_eq!((r.numer().to_i64(), r.denom().to_i64()), (Some(49), Some(4)));
    }

    #[test]
    fn substrong_values() {
        assert_eq!(substrong_max(2, 4), BigRational::from(BigInt::from(22)));
        assert_eq!(substrong_max(1, 2), BigRational::from(BigInt::from(3)));
        assert_eq!(substrong_max(3, 4), BigRational::from(BigInt::from(70)));
        assert!(!substrong_max(2, 3).is_integer());
    }

    #[test]
    fn corollary_cases() {
        assert!(corollary_arithmetic(3, 100));
        assert!(!corollary_arithmetic(1, 2));
        let threshold = corollary_threshold_power();
        assert!(corollary_arithmetic_power(BigInt::from(threshold)));
        assert!(!corollary_arithmetic_power(BigInt::from(threshold - 1)));
        // 0.0005 D must absorb the constant 0.881 plus the ceiling slack.
        assert!(threshold > 1000 && threshold < 10_000, "{threshold}");
    }

    #[test]
    fn technical_inequality_examples() {
        let one = technical_inequality(4, 2, 2, 2, 2).unwrap();
        assert_eq!(one, BigRational::one());
        let v = technical_inequality(4, 3, 2, 1, 2).unwrap();
        assert_eq!(v, BigRational::new(BigInt::from(5), BigInt::from(3)));
        assert!(technical_inequality(4, 4, 2, 1, 2).is_err());
        assert!(technical_inequality(4, 3, 2, 0, 2).is_err());
        assert!(technical_inequality(8, 3, 3, 1, 1).is_err());
    }

    #[test]
    fn technical_inequality_exhaustive_minimum() {
        // Full admissible domain for j <= 12: minimum exactly 1, attained
        // only at m = n = x = y = j/2.
        for j in 2..=12u64 {
            let mut min = None::<BigRational>;
            let mut equality_points = Vec::new();
            for x in 1..j {
                for y in 1..j {
                    if x + y < j {
                        continue;
                    }
                    for m in 1..=x {
                        for n in 1..=y {
                            let v = technical_inequality(j, x, y, m, n).unwrap();
                            if v == BigRational::one() {
                                equality_points.push((x, y, m, n));
                            }
                            if min.as_ref().map_or(true, |b| v < *b) {
                                min = Some(v);
                            }
                        }
                    }
                }
            }
            assert_eq!(min, Some(BigRational::one()), "j={j}");
            if j % 2 == 0 {
                assert_eq!(equality_points, vec![(j / 2, j / 2, j / 2, j / 2)]);
            } else {
                assert!(equality_points.is_empty(), "j={j}");
            }
        }
    }
}
