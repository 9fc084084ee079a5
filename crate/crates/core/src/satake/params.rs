//! Semisimple dual-group parameters and the parameter-level transfer maps.
//!
//! Symplectic similitude parameters are stored as an unordered pair of
//! unordered pairs `{(x1, y1), (x2, y2)}` with `x1 y1 = x2 y2 = mu`. A concrete
//! 4-tuple pairs coordinates (1,4) and (2,3), which is the pairing of the
//! antidiagonal form `J = antidiag(1, 1, -1, -1)` and of the torus
//! `t(a0, a1, a2) = diag(a0 a1 a2, a0 a1, a0 a2, a0)`.

use super::character::{multiset_eq, UnramChar, FLOAT_TOL, MATCH_TOL};
use super::ParamError;

/// Unramified GL(2) parameter `diag(alpha, beta)` with central value `mu = alpha beta`.
#[derive(Clone, Copy, Debug)]
pub struct GL2Param {
    pub alpha: UnramChar,
    pub beta: UnramChar,
    mu: UnramChar,
}

impl GL2Param {
    pub fn new(alpha: UnramChar, beta: UnramChar) -> Self {
        GL2Param {
            alpha,
            beta,
            mu: alpha * beta,
        }
    }

    pub fn mu(&self) -> UnramChar {
        self.mu
    }

    pub fn entries(&self) -> [UnramChar; 2] {
        [self.alpha, self.beta]
    }
}

impl PartialEq for GL2Param {
    fn eq(&self, other: &Self) -> bool {
        multiset_eq(&self.entries(), &other.entries(), MATCH_TOL)
    }
}

/// Semisimple class in GSp(4, C).
#[derive(Clone, Copy, Debug)]
pub struct GSp4Param {
    pairs: [(UnramChar, UnramChar); 2],
    mu: UnramChar,
}

impl GSp4Param {
    pub fn new(p1: (UnramChar, UnramChar), p2: (UnramChar, UnramChar)) -> Result<Self, ParamError> {
        let mu = p1.0 * p1.1;
        let mu2 = p2.0 * p2.1;
        if !mu.matches(&mu2, FLOAT_TOL) {
            return Err(ParamError::SimilitudeViolated {
                first: mu.value(),
                second: mu2.value(),
            });
        }
        Ok(GSp4Param {
            pairs: [p1, p2],
            mu,
        })
    }

    pub fn pairs(&self) -> [(UnramChar, UnramChar); 2] {
        self.pairs
    }

    pub fn mu(&self) -> UnramChar {
        self.mu
    }

    /// Diagonal 4-tuple in the torus convention: `(x1, x2, y2, y1)`.
    pub fn to_tuple(&self) -> [UnramChar; 4] {
        let [(x1, y1), (x2, y2)] = self.pairs;
        [x1, x2, y2, y1]
    }

    /// Parses a diagonal 4-tuple `(d1, d2, d3, d4)` with `d1 d4 = d2 d3`.
    pub fn from_tuple(d: [UnramChar; 4]) -> Result<Self, ParamError> {
        GSp4Param::new((d[0], d[3]), (d[1], d[2]))
    }

    /// Torus coordinates `(a0, a1, a2)` with the tuple equal to
    /// `diag(a0 a1 a2, a0 a1, a0 a2, a0)`.
    pub fn to_torus(&self) -> (UnramChar, UnramChar, UnramChar) {
        let d = self.to_tuple();
        (d[3], d[1] / d[3], d[2] / d[3])
    }

    pub fn from_torus(a0: UnramChar, a1: UnramChar, a2: UnramChar) -> Self {
        let d = [a0 * a1 * a2, a0 * a1, a0 * a2, a0];
        // d1 d4 = d2 d3 = a0^2 a1 a2 identically
        GSp4Param {
            pairs: [(d[0], d[3]), (d[1], d[2])],
            mu: d[0] * d[3],
        }
    }
}

impl PartialEq for GSp4Param {
    fn eq(&self, other: &Self) -> bool {
        let pair_eq = |a: (UnramChar, UnramChar), b: (UnramChar, UnramChar)| {
            (a.0 == b.0 && a.1 == b.1) || (a.0 == b.1 && a.1 == b.0)
        };
        let [a1, a2] = self.pairs;
        let [b1, b2] = other.pairs;
        self.mu == other.mu
            && ((pair_eq(a1, b1) && pair_eq(a2, b2)) || (pair_eq(a1, b2) && pair_eq(a2, b1)))
    }
}

/// Semisimple class in GL(4, C), as a multiset.
#[derive(Clone, Copy, Debug)]
pub struct GL4Param {
    entries: [UnramChar; 4],
}

impl GL4Param {
    pub fn new(entries: [UnramChar; 4]) -> Self {
        GL4Param { entries }
    }

    pub fn entries(&self) -> &[UnramChar; 4] {
        &self.entries
    }

    pub fn product(&self) -> UnramChar {
        self.entries[1..]
            .iter()
            .fold(self.entries[0], |acc, &x| acc * x)
    }
}

impl PartialEq for GL4Param {
    fn eq(&self, other: &Self) -> bool {
        multiset_eq(&self.entries, &other.entries, MATCH_TOL)
    }
}

/// Transfer of the unramified torus character `chi0 ⊗ chi1 ⊗ chi2` of GSp(4)
/// to GL(4): the character `chi1 ⊗ chi2 ⊗ chi2^{-1} chi0 ⊗ chi1^{-1} chi0`.
///
/// The entry product is `c0^2`, the parameter shadow of `omega_Pi = omega_pi^2`.
pub fn transfer_gsp4_to_gl4(c0: UnramChar, c1: UnramChar, c2: UnramChar) -> GL4Param {
    GL4Param::new([c1, c2, c0 / c2, c0 / c1])
}

/// The symplectic parameter whose natural embedding is [`transfer_gsp4_to_gl4`].
pub fn gsp4_from_transfer_coords(c0: UnramChar, c1: UnramChar, c2: UnramChar) -> GSp4Param {
    GSp4Param {
        pairs: [(c1, c0 / c1), (c2, c0 / c2)],
        mu: c0,
    }
}

/// Parameter of the theta lift of `pi1 ⊗ pi2` from GSO(4): the pairs
/// `(alpha1, beta1)`, `(alpha2, beta2)` with common similitude `mu`.
pub fn theta_lift_params(p1: &GL2Param, p2: &GL2Param) -> Result<GSp4Param, ParamError> {
    if !p1.mu.matches(&p2.mu, FLOAT_TOL) {
        return Err(ParamError::CentralCharMismatch {
            left: p1.mu.value(),
            right: p2.mu.value(),
        });
    }
    Ok(GSp4Param {
        pairs: [(p1.alpha, p1.beta), (p2.alpha, p2.beta)],
        mu: p1.mu,
    })
}

/// Natural embedding GSp(4, C) -> GL(4, C).
pub fn gsp4_to_gl4_embed(p: &GSp4Param) -> GL4Param {
    let [(x1, y1), (x2, y2)] = p.pairs;
    GL4Param::new([x1, y1, x2, y2])
}

/// Parameter of the unramified subquotient induced from
/// `diag(a, b, mu/a, mu/b) -> chi1(a) chi2(b) chi3(mu)`.
///
/// Returns the similitude-consistent tuple `(c3, c3 c1, c3 c2, c3 c1 c2)`,
/// paired as `{(c3, c3 c1 c2), (c3 c1, c3 c2)}` with `mu = c3^2 c1 c2`.
pub fn langlands_param_from_induction(c1: UnramChar, c2: UnramChar, c3: UnramChar) -> GSp4Param {
    let x1 = c3;
    let y1 = c3 * c1 * c2;
    let x2 = c3 * c1;
    let y2 = c3 * c2;
    GSp4Param {
        pairs: [(x1, y1), (x2, y2)],
        mu: x1 * y1,
    }
}

/// `Pi ≅ Pi~ ⊗ omega` at the parameter level: `{omega / x}` equals the entries.
pub fn check_selfdual_twist(p: &GL4Param, omega: UnramChar) -> bool {
    let twisted: Vec<UnramChar> = p.entries.iter().map(|&x| omega / x).collect();
    multiset_eq(&twisted, &p.entries, MATCH_TOL)
}
