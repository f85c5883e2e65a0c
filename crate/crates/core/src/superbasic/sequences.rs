//! `χ_{m,n}`, the periodic `a`-sequences and the ranking permutation `ε_χ`.

use std::cmp::Ordering;

use crate::num::gcd;
use crate::weyl::Permutation;
use crate::{Error, Result};

pub(crate) fn chi_unchecked(m: u64, n: u64) -> Vec<i64> {
    let (m, n) = (m as i64, n as i64);
    (1..=n)
        .map(|i| (i * m).div_euclid(n) - ((i - 1) * m).div_euclid(n))
        .collect()
}

/// `χ_{m,n}(i) = ⌊im/n⌋ − ⌊(i−1)m/n⌋`.
pub fn chi(m: u64, n: u64) -> Result<Vec<i64>> {
    if m == 0 || m >= n || gcd(m as i64, n as i64) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    Ok(chi_unchecked(m, n))
}

/// `χ(i)` for any integer `i`, indices read modulo `r` in `1..=r`.
pub(crate) fn chi_at(chi: &[i64], i: i64) -> i64 {
    let r = chi.len() as i64;
    chi[(i - 1).rem_euclid(r) as usize]
}

/// Lexicographic comparison of `a^i(k) = χ(i − k)` and `a^j` over one period.
pub fn a_sequence_cmp(chi: &[i64], i: usize, j: usize) -> Ordering {
    let r = chi.len() as i64;
    (0..r)
        .map(|k| chi_at(chi, i as i64 - k).cmp(&chi_at(chi, j as i64 - k)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

pub fn a_sequence_less(chi: &[i64], i: usize, j: usize) -> bool {
    a_sequence_cmp(chi, i, j) == Ordering::Less
}

/// `ε_χ(i) < ε_χ(j)` iff `a^i > a^j`.
pub fn epsilon(chi: &[i64]) -> Result<Permutation> {
    let r = chi.len();
    let mut order: Vec<usize> = (1..=r).collect();
    order.sort_by(|&i, &j| a_sequence_cmp(chi, j, i));
    if order
        .windows(2)
        .any(|w| a_sequence_cmp(chi, w[0], w[1]) == Ordering::Equal)
    {
        return Err(Error::Invalid(format!(
            "a-sequences of {chi:?} are not distinct"
        )));
    }
    let mut images = vec![0; r];
    for (rank, &i) in order.iter().enumerate() {
        images[i - 1] = rank + 1;
    }
    Permutation::from_images(&images)
}

pub fn epsilon_mn(m: u64, n: u64) -> Result<Permutation> {
    epsilon(&chi(m, n)?)
}
