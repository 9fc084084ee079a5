//! The unramified Rankin-Selberg factor `prod_{i,j} (1 - a_i b_j q^-s)^-1`.

use num_complex::Complex64;

use super::LfuncError;

/// Below this modulus a factor `1 - a_i b_j q^-s` counts as zero.
const POLE_EPS: f64 = 1e-14;

/// `log prod_{i,j} (1 - a_i b_j q^-s)^-1`, principal branch per factor.
pub(crate) fn log_local_rs_factor(
    sigma: &[Complex64],
    tau: &[Complex64],
    q: u64,
    s: Complex64,
) -> Result<Complex64, LfuncError> {
    let q_s = Complex64::new(q as f64, 0.0).powc(-s);
    let mut acc = Complex64::new(0.0, 0.0);
    for a in sigma {
        for b in tau {
            let w = Complex64::new(1.0, 0.0) - a * b * q_s;
            if w.norm() < POLE_EPS {
                return Err(LfuncError::LocalPole {
                    q,
                    s: s.to_string(),
                });
            }
            acc -= w.ln();
        }
    }
    Ok(acc)
}

/// `prod_{i,j} (1 - a_i b_j q^-s)^-1` over all `m * n` pairs.
pub fn local_rs_factor(
    sigma: &[Complex64],
    tau: &[Complex64],
    q: u64,
    s: Complex64,
) -> Result<Complex64, LfuncError> {
    let one = Complex64::new(1.0, 0.0);
    let q_s = Complex64::new(q as f64, 0.0).powc(-s);
    let mut acc = one;
    for a in sigma {
        for b in tau {
            let w = one - a * b * q_s;
            if w.norm() < POLE_EPS {
                return Err(LfuncError::LocalPole {
                    q,
                    s: s.to_string(),
                });
            }
            acc /= w;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeta_factor() {
        let v = local_rs_factor(&[c(1.0, 0.0)], &[c(1.0, 0.0)], 2, c(2.0, 0.0)).unwrap();
        assert!((v - c(4.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn multiplicative_in_tau() {
        let sigma = [c(0.6, 0.8), c(0.6, -0.8)];
        let t1 = [c(0.0, 1.0)];
        let t2 = [c(-1.0, 0.0), c(0.28, 0.96)];
        let both: Vec<Complex64> = t1.iter().chain(&t2).copied().collect();
        let s = c(1.3, 0.2);
        let lhs = local_rs_factor(&sigma, &both, 7, s).unwrap();
        let rhs = local_rs_factor(&sigma, &t1, 7, s).unwrap()
            * local_rs_factor(&sigma, &t2, 7, s).unwrap();
        assert!((lhs - rhs).norm() < 1e-14 * lhs.norm());
    }

    #[test]
    fn log_form_agrees() {
        let sigma = [c(0.6, 0.8), c(0.6, -0.8)];
        let tau = [c(0.6, -0.8), c(0.6, 0.8)];
        let s = c(1.05, 0.0);
        let v = local_rs_factor(&sigma, &tau, 3, s).unwrap();
        let l = log_local_rs_factor(&sigma, &tau, 3, s).unwrap();
        assert!((l.exp() - v).norm() < 1e-13 * v.norm());
    }

    #[test]
    fn pole_detected() {
        let err = local_rs_factor(&[c(2.0, 0.0)], &[c(1.0, 0.0)], 2, c(1.0, 0.0)).unwrap_err();
        assert!(matches!(err, LfuncError::LocalPole { q: 2, .. }));
    }
}
