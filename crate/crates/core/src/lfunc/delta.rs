//! Hecke eigenvalues of the discriminant form `Delta = q prod (1 - q^n)^24`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::euler::primes_up_to;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueRow {
    pub p: u64,
    pub a_p: i128,
    pub alpha: Complex64,
    pub beta: Complex64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueTable {
    pub weight: u32,
    pub rows: Vec<EigenvalueRow>,
}

/// Roots of `t^2 - (a_p / p^{(k-1)/2}) t + 1`.
pub fn normalized_gl2_params(a_p: f64, p: u64, weight: u32) -> (Complex64, Complex64) {
    let x = a_p / (p as f64).powf((weight as f64 - 1.0) / 2.0);
    let disc = Complex64::new(x * x - 4.0, 0.0).sqrt();
    ((x + disc) / 2.0, (x - disc) / 2.0)
}

/// Coefficients of `prod_{n >= 1} (1 - q^n)^24` up to `q^len-1`.
///
/// Uses Jacobi's `prod (1 - q^n)^3 = sum_k (-1)^k (2k + 1) q^{k(k+1)/2}` and
/// eight sparse multiplications.
fn eta24_coefficients(len: usize) -> Vec<i128> {
    let mut jacobi = Vec::new();
    let mut k = 0i128;
    loop {
        let e = (k * (k + 1) / 2) as usize;
        if e >= len {
            break;
        }
        jacobi.push((e, if k % 2 == 0 { 2 * k + 1 } else { -(2 * k + 1) }));
        k += 1;
    }
    let mut series = vec![0i128; len];
    if len > 0 {
        series[0] = 1;
    }
    for _ in 0..8 {
        let mut next = vec![0i128; len];
        for (i, &c) in series.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(e, j) in &jacobi {
                if i + e >= len {
                    break;
                }
                next[i + e] += c * j;
            }
        }
        series = next;
    }
    series
}

/// `tau(n)` for `1 <= n <= n_max`, indexed by `n` (entry 0 is unused).
pub fn ramanujan_tau(n_max: usize) -> Vec<i128> {
    let mut out = vec![0i128];
    out.extend(eta24_coefficients(n_max));
    out
}

/// `a_p = tau(p)` for primes `p <= n` with normalized weight-12 parameters.
/// Supported for `n <= 10^4`.
pub fn delta_eigenvalues(n: u64) -> EigenvalueTable {
    let tau = ramanujan_tau(n as usize);
    let rows = primes_up_to(n)
        .into_iter()
        .map(|p| {
            let a_p = tau[p as usize];
            let (alpha, beta) = normalized_gl2_params(a_p as f64, p, 12);
            EigenvalueRow {
                p,
                a_p,
                alpha,
                beta,
            }
        })
        .collect();
    EigenvalueTable { weight: 12, rows }
}
