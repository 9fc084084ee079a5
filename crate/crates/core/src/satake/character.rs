//! Unramified characters evaluated at a uniformizer, in exact or float form.

use std::fmt;
use std::ops::{Div, Mul};

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::ParamError;

/// Relative tolerance for float-mode identities (similitude, central characters).
pub const FLOAT_TOL: f64 = 1e-12;

/// Per-entry tolerance used when matching multisets of complex scalars.
pub const MATCH_TOL: f64 = 1e-9;

pub type Rational = Ratio<i64>;

/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    let scale = 1f64.max(a.norm()).max(b.norm());
    (a - b).norm() <= tol * scale
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut n = q;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            return n == 1;
        }
        p += 1;
    }
    true
}

/// A non-archimedean place, known only through its residue-field cardinality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PlaceData {
    q: u64,
}

impl PlaceData {
    pub fn new(q: u64) -> Result<Self, ParamError> {
        if is_prime_power(q) {
            Ok(PlaceData { q })
        } else {
            Err(ParamError::NotPrimePower(q))
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn log_q(&self) -> f64 {
        (self.q as f64).ln()
    }
}

impl TryFrom<u64> for PlaceData {
    type Error = ParamError;
    fn try_from(q: u64) -> Result<Self, ParamError> {
        PlaceData::new(q)
    }
}

impl From<PlaceData> for u64 {
    fn from(p: PlaceData) -> u64 {
        p.q
    }
}

/// `q^r * exp(2 pi i turns)` with `turns` reduced to `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExactForm {
    pub q: u64,
    pub r: Rational,
    pub turns: Rational,
}

fn reduce_turns(t: Rational) -> Rational {
    let f = t - t.floor();
    if f < Rational::zero() {
        f + Rational::one()
    } else {
        f
    }
}

impl ExactForm {
    pub fn new(q: u64, r: Rational, turns: Rational) -> Self {
        ExactForm {
            q,
            r,
            turns: reduce_turns(turns),
        }
    }

    pub fn evaluate(&self) -> Complex64 {
        let modulus = (self.q as f64).powf(ratio_to_f64(self.r));
        let angle = 2.0 * std::f64::consts::PI * ratio_to_f64(self.turns);
        Complex64::from_polar(modulus, angle)
    }

    fn combine(self, other: ExactForm, sign: i64) -> Option<ExactForm> {
        if self.q != other.q {
            return None;
        }
        Some(ExactForm::new(
            self.q,
            self.r + other.r * sign,
            self.turns + other.turns * sign,
        ))
    }

    pub fn inverse(self) -> ExactForm {
        ExactForm::new(self.q, -self.r, -self.turns)
    }
}

pub fn ratio_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Value of an unramified character at a uniformizer.
///
/// Always carries the complex value; carries an exact form as well when it was
/// built from one and every operation applied since stayed inside a single place.
#[derive(Clone, Copy, Debug)]
pub struct UnramChar {
    value: Complex64,
    exact: Option<ExactForm>,
}

impl UnramChar {
    pub fn from_complex(value: Complex64) -> Result<Self, ParamError> {
        if value.is_zero() || !value.re.is_finite() || !value.im.is_finite() {
            return Err(ParamError::ZeroOrNonFinite);
        }
        Ok(UnramChar { value, exact: None })
    }

    pub fn real(x: f64) -> Result<Self, ParamError> {
        Self::from_complex(Complex64::new(x, 0.0))
    }

    pub fn exact(q: u64, r: Rational, turns: Rational) -> Self {
        let form = ExactForm::new(q, r, turns);
        UnramChar {
            value: form.evaluate(),
            exact: Some(form),
        }
    }

    /// A unitary character `exp(2 pi i turns)`.
    pub fn unitary(q: u64, turns: Rational) -> Self {
        Self::exact(q, Rational::zero(), turns)
    }

    pub fn one(q: u64) -> Self {
        Self::exact(q, Rational::zero(), Rational::zero())
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn exact_form(&self) -> Option<ExactForm> {
        self.exact
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    // An exact form, when present, fixes the value bit for bit.
    fn canonical(value: Complex64, exact: Option<ExactForm>) -> UnramChar {
        match exact {
            Some(e) => UnramChar {
                value: e.evaluate(),
                exact,
            },
            None => UnramChar { value, exact },
        }
    }

    pub fn inv(&self) -> UnramChar {
        Self::canonical(self.value.inv(), self.exact.map(ExactForm::inverse))
    }

    pub fn powi(&self, n: i32) -> UnramChar {
        Self::canonical(
            self.value.powi(n),
            self.exact
                .map(|e| ExactForm::new(e.q, e.r * n as i64, e.turns * n as i64)),
        )
    }

    /// Exact comparison when both sides are exact at the same place, otherwise
    /// relative comparison of the values at `tol`.
    pub fn matches(&self, other: &UnramChar, tol: f64) -> bool {
        match (self.exact, other.exact) {
            (Some(a), Some(b)) if a.q == b.q => a == b,
            _ => close(self.value, other.value, tol),
        }
    }
}

impl PartialEq for UnramChar {
    fn eq(&self, other: &Self) -> bool {
        self.matches(other, MATCH_TOL)
    }
}

impl Mul for UnramChar {
    type Output = UnramChar;
    fn mul(self, rhs: UnramChar) -> UnramChar {
        UnramChar::canonical(
            self.value * rhs.value,
            self.exact.zip(rhs.exact).and_then(|(a, b)| a.combine(b, 1)),
        )
    }
}

impl Div for UnramChar {
    type Output = UnramChar;
    fn div(self, rhs: UnramChar) -> UnramChar {
        UnramChar::canonical(
            self.value / rhs.value,
            self.exact
                .zip(rhs.exact)
                .and_then(|(a, b)| a.combine(b, -1)),
        )
    }
}

impl fmt::Display for UnramChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(e) => write!(f, "{}^({})·e(2πi·{})", e.q, e.r, e.turns),
            None => write!(f, "{:.6}{:+.6}i", self.value.re, self.value.im),
        }
    }
}

/// Multiset equality of two lists of characters.
///
/// Exact entries are paired exactly; the rest by greedy bipartite matching at
/// per-entry tolerance `tol`.
pub fn multiset_eq(a: &[UnramChar], b: &[UnramChar], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (j, y) in b.iter().enumerate() {
            if !used[j] && x.matches(y, tol) {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Same as [`multiset_eq`] for bare complex scalars.
pub fn complex_multiset_eq(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for &x in a {
        let mut best: Option<(usize, f64)> = None;
        for (j, &y) in b.iter().enumerate() {
            if used[j] || !close(x, y, tol) {
                continue;
            }
            let d = (x - y).norm();
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        match best {
            Some((j, _)) => used[j] = true,
            None => return false,
        }
        continue 'outer;
    }
    true
}
