//! Truncated partial L-functions of Rankin-Selberg products of isobaric sums.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::local::log_local_rs_factor;
use super::LfuncError;
use crate::isobaric::{rs_factorization, IsobaricRep};
use crate::satake::character::ratio_to_f64;

/// Primes `p <= x` in increasing order.
pub fn primes_up_to(x: u64) -> Vec<u64> {
    if x < 2 {
        return Vec::new();
    }
    let n = x as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LValue {
    pub value: Complex64,
    /// Sum of principal logarithms of the local factors; `log.re = log |value|`.
    pub log: Complex64,
}

impl LValue {
    pub fn log_abs(&self) -> f64 {
        self.log.re
    }
}

/// `prod_{q in places} prod_{(i,j)} L_q(s + r_i + r'_j, sigma_i x tau_j)`.
///
/// Places are evaluated in parallel and combined in the order given, so the
/// result does not depend on the thread count.
pub fn partial_l_over(
    r1: &IsobaricRep,
    r2: &IsobaricRep,
    places: &[u64],
    s: Complex64,
) -> Result<LValue, LfuncError> {
    let factors = rs_factorization(r1, r2);
    for f in &factors {
        for sym in [&f.left, &f.right] {
            if let Some(&q) = places.iter().find(|q| !sym.local.contains_key(q)) {
                return Err(LfuncError::InsufficientData {
                    symbol: sym.id.to_string(),
                    q,
                });
            }
        }
    }
    let per_place: Vec<Complex64> = places
        .par_iter()
        .map(|&q| {
            factors.iter().try_fold(Complex64::new(0.0, 0.0), |acc, f| {
                let shifted = s + ratio_to_f64(f.shift);
                Ok(acc + log_local_rs_factor(&f.left.local[&q], &f.right.local[&q], q, shifted)?)
            })
        })
        .collect::<Result<_, LfuncError>>()?;
    let log = per_place
        .iter()
        .fold(Complex64::new(0.0, 0.0), |a, b| a + b);
    Ok(LValue {
        value: log.exp(),
        log,
    })
}

/// [`partial_l_over`] on the primes `p <= x`.
pub fn partial_l(
    r1: &IsobaricRep,
    r2: &IsobaricRep,
    x: u64,
    s: Complex64,
) -> Result<LValue, LfuncError> {
    partial_l_over(r1, r2, &primes_up_to(x), s)
}
