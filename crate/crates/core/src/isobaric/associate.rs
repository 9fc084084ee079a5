//! Matching two lists of cuspidal data by their local parameters.

use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::symbol::CuspidalSymbol;
use super::IsobaricError;
use crate::satake::character::{complex_multiset_eq, MATCH_TOL};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "permutation", rename_all = "snake_case")]
pub enum Association {
    /// `phi[j] = i`: the `j`-th entry of the second list matches the `i`-th
    /// entry of the first (0-based).
    Associate(Vec<usize>),
    NotAssociate,
}

fn local(s: &CuspidalSymbol, q: u64) -> Result<&[Complex64], IsobaricError> {
    s.local_at(q)
        .ok_or_else(|| IsobaricError::InsufficientData {
            symbol: s.id.to_string(),
            q,
        })
}

fn same_on_sample(a: &CuspidalSymbol, b: &CuspidalSymbol, sample: &[u64]) -> bool {
    a.degree == b.degree
        && sample
            .iter()
            .all(|&q| complex_multiset_eq(&a.local[&q], &b.local[&q], MATCH_TOL))
}

fn extend(compat: &[Vec<bool>], j: usize, used: &mut [bool], phi: &mut Vec<usize>) -> bool {
    if j == compat.len() {
        return true;
    }
    for i in 0..used.len() {
        if !used[i] && compat[j][i] {
            used[i] = true;
            phi.push(i);
            if extend(compat, j + 1, used, phi) {
                return true;
            }
            phi.pop();
            used[i] = false;
        }
    }
    false
}

/// Finds `phi` with `second[j] ≅ first[phi[j]]` (equal degree, equal local
/// multisets at every sampled place).
///
/// Pooled multisets are compared first: when they differ at some place no
/// matching can exist.
pub fn associate_match(
    first: &[Arc<CuspidalSymbol>],
    second: &[Arc<CuspidalSymbol>],
    sample: &[u64],
) -> Result<Association, IsobaricError> {
    for s in first.iter().chain(second) {
        for &q in sample {
            local(s, q)?;
        }
    }
    if first.len() != second.len() {
        return Ok(Association::NotAssociate);
    }
    for &q in sample {
        let pool = |list: &[Arc<CuspidalSymbol>]| -> Vec<Complex64> {
            list.iter()
                .flat_map(|s| s.local[&q].iter().copied())
                .collect()
        };
        if !complex_multiset_eq(&pool(first), &pool(second), MATCH_TOL) {
            return Ok(Association::NotAssociate);
        }
    }
    let compat: Vec<Vec<bool>> = second
        .iter()
        .map(|b| first.iter().map(|a| same_on_sample(a, b, sample)).collect())
        .collect();
    let mut used = vec![false; first.len()];
    let mut phi = Vec::with_capacity(first.len());
    if extend(&compat, 0, &mut used, &mut phi) {
        Ok(Association::Associate(phi))
    } else {
        Ok(Association::NotAssociate)
    }
}
