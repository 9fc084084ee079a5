//! Exponent vectors of unramified parameters and the finite list of exponent
//! patterns available to pre-unitary subquotients that are not fully induced.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::character::{ratio_to_f64, PlaceData, Rational};
use super::params::GL4Param;

/// Sorted exponents `log|x_i| / log q`.
#[derive(Clone, Debug, PartialEq)]
pub enum ExponentVector {
    Exact([Rational; 4]),
    Float([f64; 4]),
}

impl ExponentVector {
    pub fn exact(mut e: [Rational; 4]) -> Self {
        e.sort();
        ExponentVector::Exact(e)
    }

    pub fn float(mut e: [f64; 4]) -> Self {
        e.sort_by(|a, b| a.total_cmp(b));
        ExponentVector::Float(e)
    }

    pub fn as_f64(&self) -> [f64; 4] {
        match self {
            ExponentVector::Exact(e) => e.map(ratio_to_f64),
            ExponentVector::Float(e) => *e,
        }
    }

    pub fn to_float(&self) -> ExponentVector {
        ExponentVector::Float(self.as_f64())
    }
}

/// Exponents of a GL(4) parameter at `place`; exact when every entry carries
/// an exact form at the same residue cardinality.
pub fn exponents(p: &GL4Param, place: PlaceData) -> ExponentVector {
    let exact: Option<Vec<Rational>> = p
        .entries()
        .iter()
        .map(|x| x.exact_form().filter(|e| e.q == place.q()).map(|e| e.r))
        .collect();
    match exact {
        Some(v) => ExponentVector::exact([v[0], v[1], v[2], v[3]]),
        None => {
            let lq = place.log_q();
            ExponentVector::float(p.entries().map(|x| x.value().norm().ln() / lq))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum RodierClass {
    /// `(-1/2, -r, r, 1/2)` with `0 <= r <= 1/4`.
    FamilyA {
        r: f64,
    },
    /// `(-1/2, -1/2, 1/2, 1/2)`.
    FamilyB,
    /// `(-3/2, -1/2, 1/2, 3/2)`.
    FamilyC,
    NotInList,
}

impl RodierClass {
    /// A pre-unitary subquotient whose exponents are in no family must be the
    /// full induced representation.
    pub fn forces_full_induction(&self) -> bool {
        matches!(self, RodierClass::NotInList)
    }

    pub fn label(&self) -> &'static str {
        match self {
            RodierClass::FamilyA { .. } => "A",
            RodierClass::FamilyB => "B",
            RodierClass::FamilyC => "C",
            RodierClass::NotInList => "not-in-list",
        }
    }

    /// Same family, and the same `r` within `tol` for family A.
    pub fn agrees_with(&self, other: &RodierClass, tol: f64) -> bool {
        match (self, other) {
            (RodierClass::FamilyA { r: a }, RodierClass::FamilyA { r: b }) => (a - b).abs() <= tol,
            _ => std::mem::discriminant(self) == std::mem::discriminant(other),
        }
    }
}

fn half(n: i64) -> Rational {
    Ratio::new(n, 2)
}

fn classify_exact(e: &[Rational; 4]) -> RodierClass {
    let zero = Rational::from_integer(0);
    let quarter = Ratio::new(1, 4);
    if *e == [half(-1), half(-1), half(1), half(1)] {
        return RodierClass::FamilyB;
    }
    if *e == [half(-3), half(-1), half(1), half(3)] {
        return RodierClass::FamilyC;
    }
    if e[0] == half(-1) && e[3] == half(1) && e[1] + e[2] == zero {
        let r = e[2];
        if r >= zero && r <= quarter {
            return RodierClass::FamilyA { r: ratio_to_f64(r) };
        }
    }
    RodierClass::NotInList
}

fn classify_float(e: &[f64; 4], tol: f64) -> RodierClass {
    let near = |x: f64, y: f64| (x - y).abs() <= tol;
    let matches = |pattern: [f64; 4]| e.iter().zip(pattern).all(|(&x, y)| near(x, y));
    if matches([-0.5, -0.5, 0.5, 0.5]) {
        return RodierClass::FamilyB;
    }
    if matches([-1.5, -0.5, 0.5, 1.5]) {
        return RodierClass::FamilyC;
    }
    if near(e[0], -0.5) && near(e[3], 0.5) && near(e[1] + e[2], 0.0) {
        let r = 0.5 * (e[2] - e[1]);
        if r >= -tol && r <= 0.25 + tol {
            return RodierClass::FamilyA {
                r: r.clamp(0.0, 0.25),
            };
        }
    }
    RodierClass::NotInList
}

/// Classifies a sorted exponent vector. Exact vectors are matched exactly and
/// ignore `tol`; the boundary `r = 1/4` is accepted.
pub fn rodier_class(e: &ExponentVector, tol: f64) -> RodierClass {
    match e {
        ExponentVector::Exact(v) => classify_exact(v),
        ExponentVector::Float(v) => classify_float(v, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satake::character::UnramChar;

    fn q(n: i64, d: i64) -> Rational {
        Ratio::new(n, d)
    }

    #[test]
    fn printed_families() {
        let b = ExponentVector::exact([q(-1, 2), q(-1, 2), q(1, 2), q(1, 2)]);
        assert_eq!(rodier_class(&b, 1e-9), RodierClass::FamilyB);
        assert_eq!(rodier_class(&b.to_float(), 1e-9), RodierClass::FamilyB);
        let c = ExponentVector::exact([q(-3, 2), q(-1, 2), q(1, 2), q(3, 2)]);
        assert_eq!(rodier_class(&c, 1e-9), RodierClass::FamilyC);
        let a = ExponentVector::exact([q(-1, 2), q(-1, 4), q(1, 4), q(1, 2)]);
        assert_eq!(rodier_class(&a, 1e-9), RodierClass::FamilyA { r: 0.25 });
        let a0 = ExponentVector::float([-0.5, 0.0, 0.0, 0.5]);
        assert_eq!(rodier_class(&a0, 1e-9), RodierClass::FamilyA { r: 0.0 });
    }

    #[test]
    fn r_beyond_quarter_rejected() {
        let e = ExponentVector::float([-0.5, -0.3, 0.3, 0.5]);
        assert_eq!(rodier_class(&e, 1e-9), RodierClass::NotInList);
        let e = ExponentVector::exact([q(-1, 2), q(-3, 10), q(3, 10), q(1, 2)]);
        assert_eq!(rodier_class(&e, 1e-9), RodierClass::NotInList);
    }

    #[test]
    fn tempered_is_not_in_list() {
        let e = ExponentVector::exact([q(0, 1); 4]);
        let class = rodier_class(&e, 1e-9);
        assert_eq!(class, RodierClass::NotInList);
        assert!(class.forces_full_induction());
    }

    #[test]
    fn exponents_of_parameters() {
        let place = PlaceData::new(5).unwrap();
        let s = 5f64.sqrt();
        let p = GL4Param::new([
            UnramChar::real(s).unwrap(),
            UnramChar::real(1.0 / s).unwrap(),
            UnramChar::real(1.0).unwrap(),
            UnramChar::real(1.0).unwrap(),
        ]);
        let e = exponents(&p, place).as_f64();
        let want = [-0.5, 0.0, 0.0, 0.5];
        assert!(e.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-12));

        let place3 = PlaceData::new(3).unwrap();
        let p =
            GL4Param::new([3.0, 1.0 / 3.0, 27.0, 1.0 / 27.0].map(|x| UnramChar::real(x).unwrap()));
        let e = exponents(&p, place3).as_f64();
        let want = [-3.0, -1.0, 1.0, 3.0];
        assert!(e.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-12));

        let one = UnramChar::one(5);
        assert_eq!(
            exponents(&GL4Param::new([one; 4]), place),
            ExponentVector::Exact([q(0, 1); 4])
        );
    }

    #[test]
    fn exact_exponents_need_matching_place() {
        let x = UnramChar::exact(7, q(1, 2), q(0, 1));
        let p = GL4Param::new([x, x.inv(), x, x.inv()]);
        assert!(matches!(
            exponents(&p, PlaceData::new(7).unwrap()),
            ExponentVector::Exact(_)
        ));
        assert!(matches!(
            exponents(&p, PlaceData::new(5).unwrap()),
            ExponentVector::Float(_)
        ));
    }
}
