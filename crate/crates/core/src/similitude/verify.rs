//! Exhaustive finite-field check of `GSO(4) = (GL2 x GL2) / {(c I, c^-1 I)}`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::group::{enumerate_go4, is_gso, DetFormBasis};
use super::matrix::{gl2, gl2_order, Mat2};
use super::GroupError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsoStructureReport {
    pub q: u32,
    pub gl2_order: u64,
    pub kernel_size: usize,
    pub image_size: usize,
    pub expected_image_size: u64,
    pub go_size: usize,
    pub gso_size: usize,
    pub equal: bool,
    pub checks: Vec<Check>,
    pub all_passed: bool,
}

fn check(id: &str, passed: bool, detail: String) -> Check {
    Check {
        id: id.to_string(),
        passed,
        detail,
    }
}

/// Runs the four assertions for `q` in {3, 5, 7}:
/// the kernel is `{(c I, c^-1 I)}`, the image has `|GL2|^2 / (q - 1)`
/// elements, the image equals the `det = lambda^2` part of an independent
/// enumeration of GO(4), and `beta(SL2 x SL2)` lies in `det = 1, lambda = 1`.
pub fn verify_gso_structure(q: u32) -> Result<GsoStructureReport, GroupError> {
    if ![3, 5, 7].contains(&q) {
        return Err(GroupError::UnsupportedModulus(q));
    }
    let basis = DetFormBasis::new(q)?;
    let group = gl2(q);
    let identity_key = super::matrix::Mat4::identity(q)?.key();

    // One pass over all pairs: image keys plus kernel members.
    let (image, kernel): (HashSet<u64>, Vec<(Mat2, Mat2)>) = group
        .par_iter()
        .map(|g1| {
            let mut keys = Vec::with_capacity(group.len());
            let mut ker = Vec::new();
            for g2 in &group {
                let e = basis.beta_unchecked(g1, g2);
                let k = e.key();
                if k == identity_key && e.lambda().value() == 1 {
                    ker.push((*g1, *g2));
                }
                keys.push(k);
            }
            (keys, ker)
        })
        .fold(
            || (HashSet::new(), Vec::new()),
            |(mut set, mut ker), (keys, k)| {
                set.extend(keys);
                ker.extend(k);
                (set, ker)
            },
        )
        .reduce(
            || (HashSet::new(), Vec::new()),
            |(mut a, mut ka), (b, kb)| {
                a.extend(b);
                ka.extend(kb);
                (a, ka)
            },
        );

    let kernel_scalar =
        kernel
            .iter()
            .all(|(g1, g2)| match (g1.scalar_value(), g2.scalar_value()) {
                (Some(c), Some(d)) => (c as u64 * d as u64) % q as u64 == 1,
                _ => false,
            });
    let order = gl2_order(q as u64);
    let expected = order * order / (q as u64 - 1);

    let go = enumerate_go4(q)?;
    let gso: HashSet<u64> = go.iter().filter(|e| is_gso(e)).map(|e| e.key()).collect();
    let equal = gso == image;

    let sl2: Vec<&Mat2> = group.iter().filter(|g| g.det().value() == 1).collect();
    let so4_ok = sl2.par_iter().all(|g1| {
        sl2.iter().all(|g2| {
            let e = basis.beta_unchecked(g1, g2);
            e.lambda().value() == 1 && e.det().value() == 1
        })
    });

    let checks = vec![
        check(
            "kernel",
            kernel.len() == q as usize - 1 && kernel_scalar,
            format!(
                "{} kernel pairs, all of the form (cI, c^-1 I): {}",
                kernel.len(),
                kernel_scalar
            ),
        ),
        check(
            "image_size",
            image.len() as u64 == expected,
            format!("|image| = {}, |GL2|^2/(q-1) = {}", image.len(), expected),
        ),
        check(
            "image_equals_gso",
            equal,
            format!(
                "|GSO(4)| from enumeration = {}, sets equal: {}",
                gso.len(),
                equal
            ),
        ),
        check(
            "so4_inclusion",
            so4_ok,
            format!(
                "beta(SL2 x SL2) inside det = 1, lambda = 1 over {} x {} pairs",
                sl2.len(),
                sl2.len()
            ),
        ),
    ];
    let all_passed = checks.iter().all(|c| c.passed);
    Ok(GsoStructureReport {
        q,
        gl2_order: order,
        kernel_size: kernel.len(),
        image_size: image.len(),
        expected_image_size: expected,
        go_size: go.len(),
        gso_size: gso.len(),
        equal,
        checks,
        all_passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gso_structure_at_q3() {
        let r = verify_gso_structure(3).unwrap();
        assert_eq!(r.kernel_size, 2);
        assert_eq!(r.image_size, 1152);
        assert_eq!(r.gso_size, 1152);
        assert!(r.equal);
        assert!(r.all_passed, "{:?}", r.checks);
    }

    #[test]
    fn unsupported_q() {
        assert_eq!(
            verify_gso_structure(4),
            Err(GroupError::UnsupportedModulus(4))
        );
        assert_eq!(
            verify_gso_structure(2),
            Err(GroupError::UnsupportedModulus(2))
        );
    }
}
