//! Deterministic synthetic unramified data for formal cuspidal symbols.
//!
//! Randomness comes from ChaCha20 keyed by `(seed, label)`, where the label
//! names the stream (a symbol id, a character name, ...). The 32-byte key is
//! `seed` (little endian) followed by the 64-bit FNV-1a hash of the label
//! and 16 zero bytes. Uniform doubles take the top 53 bits of each `u64`.
//!
//! * GL(2): `{psi e^{i theta}, psi e^{-i theta}}` with `theta` Sato-Tate
//!   distributed, density `(2/pi) sin^2 theta` on `[0, pi]`, sampled by
//!   inverting the CDF with bisection to `1e-10`.
//! * GL(4): `psi {e^{+-i theta_1}, e^{+-i theta_2}}` with the angles
//!   distributed as eigenangles of a Haar-random element of USp(4), sampled by
//!   rejection from the density `(cos theta_1 - cos theta_2)^2 sin^2 theta_1 sin^2 theta_2`.
//! * GL(3): `psi {e^{i theta}, 1, e^{-i theta}}`, `theta` Sato-Tate.
//! * GL(1): the central character itself.
//!
//! Here `psi^n` is the value of the symbol's central character `c^k`, with
//! `c(p) = e^{i eta_p}` and `eta_p` uniform, drawn from the stream of the
//! character name `c`, so symbols sharing a central character agree on it.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use super::LfuncError;
use crate::isobaric::{Constituent, CuspidalSymbol, IsobaricError, IsobaricRep, Registry};

const BISECTION_TOL: f64 = 1e-10;

fn fnv1a(label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// The ChaCha20 stream for `(seed, label)`.
pub fn stream(seed: u64, label: &str) -> ChaCha20Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&fnv1a(label).to_le_bytes());
    ChaCha20Rng::from_seed(key)
}

/// Uniform on `[0, 1)` from the top 53 bits.
pub fn uniform(rng: &mut ChaCha20Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// CDF of the Sato-Tate measure on `[0, pi]`.
pub fn sato_tate_cdf(theta: f64) -> f64 {
    (theta - (2.0 * theta).sin() / 2.0) / PI
}

/// `F^{-1}(u)` by bisection.
pub fn sato_tate_quantile(u: f64) -> f64 {
    let (mut lo, mut hi) = (0.0, PI);
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        if sato_tate_cdf(mid) < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Sato-Tate angles, one per prime, from the stream `(seed, label)`.
pub fn sato_tate_angles(seed: u64, label: &str, count: usize) -> Vec<f64> {
    let mut rng = stream(seed, label);
    (0..count)
        .map(|_| sato_tate_quantile(uniform(&mut rng)))
        .collect()
}

fn conj_pair(theta: f64) -> Vec<Complex64> {
    vec![
        Complex64::from_polar(1.0, theta),
        Complex64::from_polar(1.0, -theta),
    ]
}

/// Tempered GL(2) data `{e^{i theta_p}, e^{-i theta_p}}` with Sato-Tate angles.
pub fn sample_sato_tate(seed: u64, primes: &[u64]) -> BTreeMap<u64, Vec<Complex64>> {
    primes
        .iter()
        .zip(sato_tate_angles(seed, "sato-tate", primes.len()))
        .map(|(&p, t)| (p, conj_pair(t)))
        .collect()
}

fn usp4_angles(rng: &mut ChaCha20Rng) -> (f64, f64) {
    loop {
        let t1 = PI * uniform(rng);
        let t2 = PI * uniform(rng);
        let u = 4.0 * uniform(rng);
        let d = (t1.cos() - t2.cos()).powi(2) * t1.sin().powi(2) * t2.sin().powi(2);
        if u < d {
            return (t1, t2);
        }
    }
}

/// Self-dual GL(4) data with USp(4)-Haar eigenangles.
pub fn sample_usp4(seed: u64, primes: &[u64]) -> BTreeMap<u64, Vec<Complex64>> {
    let mut rng = stream(seed, "usp4");
    primes
        .iter()
        .map(|&p| {
            let (a, b) = usp4_angles(&mut rng);
            let mut v = conj_pair(a);
            v.extend(conj_pair(b));
            (p, v)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntheticConfig {
    pub seed: u64,
    pub primes: Vec<u64>,
}

fn symbol_data(
    sym: &CuspidalSymbol,
    seed: u64,
    primes: &[u64],
) -> Result<BTreeMap<u64, Vec<Complex64>>, LfuncError> {
    let c = &sym.central_char;
    if !sym.is_self_dual() && c.is_trivial() {
        return Err(IsobaricError::InvalidSymbol(format!(
            "{}: tempered data with trivial central character is self-dual, but the symbol is declared with dual {}",
            sym.id, sym.dual_id
        ))
        .into());
    }
    let n = sym.degree as f64;
    let etas: Vec<f64> = match c.base() {
        Some(base) => {
            let mut rng = stream(seed, &format!("char:{base}"));
            primes
                .iter()
                .map(|_| 2.0 * PI * uniform(&mut rng))
                .collect()
        }
        None => vec![0.0; primes.len()],
    };
    let k = c.exponent() as f64;
    let mut rng = stream(seed, &format!("sym:{}", sym.id));
    let mut out = BTreeMap::new();
    for (&p, eta) in primes.iter().zip(etas) {
        let psi = Complex64::from_polar(1.0, k * eta / n);
        let base: Vec<Complex64> = match sym.degree {
            1 => vec![Complex64::new(1.0, 0.0)],
            2 => conj_pair(sato_tate_quantile(uniform(&mut rng))),
            3 => {
                let mut v = conj_pair(sato_tate_quantile(uniform(&mut rng)));
                v.insert(1, Complex64::new(1.0, 0.0));
                v
            }
            _ => {
                let (a, b) = usp4_angles(&mut rng);
                let mut v = conj_pair(a);
                v.extend(conj_pair(b));
                v
            }
        };
        out.insert(p, base.into_iter().map(|z| z * psi).collect());
    }
    Ok(out)
}

/// A copy of `registry` in which every symbol has local data at every prime
/// of `cfg.primes`. Existing data is kept; missing places are filled for the
/// lexicographically smaller member of each dual pair and inverted for the other.
pub fn with_synthetic_data(
    registry: &Registry,
    cfg: &SyntheticConfig,
) -> Result<Registry, LfuncError> {
    let mut out = registry.clone();
    let mut ids: Vec<_> = registry.iter().map(|s| s.id.clone()).collect();
    ids.sort();
    for id in ids {
        let sym = out.get(&id)?;
        if !sym.is_self_dual() && sym.dual_id < sym.id {
            continue;
        }
        let missing: Vec<u64> = cfg
            .primes
            .iter()
            .copied()
            .filter(|q| !sym.local.contains_key(q))
            .collect();
        if missing.is_empty() {
            continue;
        }
        let data = symbol_data(&sym, cfg.seed, &missing)?;
        let mut filled = (*sym).clone();
        filled.local.extend(data);
        out.add(filled)?;
    }
    Ok(out)
}

/// The same isobaric sum with symbols looked up again in `registry`.
pub fn rebind(rep: &IsobaricRep, registry: &Registry) -> Result<IsobaricRep, LfuncError> {
    let terms = rep
        .terms()
        .iter()
        .map(|c| {
            Ok(Constituent {
                symbol: registry.get(&c.symbol.id)?,
                shift: c.shift,
            })
        })
        .collect::<Result<Vec<_>, LfuncError>>()?;
    Ok(IsobaricRep::new(terms)?)
}
