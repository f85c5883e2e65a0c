//! Exact rational helpers.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar used for every non-integral quantity.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// `x - ⌊x⌋`, always in `[0, 1)`.
pub fn fract(x: Q) -> Q {
    x - x.floor()
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// Renders `3/2`, `-1`, `0`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_vec(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_q).collect();
    format!("({})", parts.join(","))
}

pub fn parse_q(text: &str) -> Result<Q> {
    let t = text.trim();
    let bad = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    match t.split_once('/') {
        None => t.parse::<i64>().map(q).map_err(|_| bad("not an integer")),
        Some((a, b)) => {
            let a = a.trim().parse::<i64>().map_err(|_| bad("bad numerator"))?;
            let b = b
                .trim()
                .parse::<i64>()
                .map_err(|_| bad("bad denominator"))?;
            if b == 0 {
                return Err(bad("zero denominator"));
            }
            Ok(Q::new(a, b))
        }
    }
}

pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Largest element of `offset + ℤ` that is `<= bound`.
pub fn max_in_coset_below(offset: Q, bound: Q) -> Q {
    bound - fract(bound - offset)
}

pub fn abs(x: Q) -> Q {
    x.abs()
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}
