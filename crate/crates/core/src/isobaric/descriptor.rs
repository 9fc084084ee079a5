//! GSp(4) representations described by their transfer data, the transfer to
//! GL(4), and the pole-order case analysis for pairs.

use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::constraint;
use super::rep::{pole_order_at_one, IsobaricRep, PoleReport};
use super::symbol::{equivalent, CharId, CuspidalSymbol, Registry};
use super::IsobaricError;
use crate::satake::character::{close, complex_multiset_eq, FLOAT_TOL, MATCH_TOL};

/// A generic cuspidal representation of GSp(4), given either by its cuspidal
/// degree-4 transfer or as the lift of a pair on GSO(4) ≅ GL(2) x GL(2).
#[derive(Clone, Debug)]
pub enum GSp4Descriptor {
    Generic {
        transfer: Arc<CuspidalSymbol>,
        omega: CharId,
    },
    FromGso {
        pi1: Arc<CuspidalSymbol>,
        pi2: Arc<CuspidalSymbol>,
        chi_tilde: CharId,
        omega: CharId,
    },
}

/// Both square roots of `z`.
fn square_roots(z: Complex64) -> [Complex64; 2] {
    let r = z.sqrt();
    [r, -r]
}

/// `{w / x} = {x}` for some `w` with `w^(n/2) = prod x`, `n` the number of
/// parameters (or `w = 1` when the central character is trivial).
fn locally_selfdual_up_to_twist(params: &[Complex64], omega_trivial: bool) -> bool {
    let product: Complex64 = params.iter().product();
    let candidates: Vec<Complex64> = if omega_trivial {
        vec![Complex64::new(1.0, 0.0)]
    } else if params.len() == 2 {
        vec![product]
    } else {
        square_roots(product).to_vec()
    };
    candidates.iter().any(|&w| {
        let twisted: Vec<Complex64> = params.iter().map(|&x| w / x).collect();
        complex_multiset_eq(&twisted, params, MATCH_TOL)
    })
}

impl GSp4Descriptor {
    pub fn generic(transfer: Arc<CuspidalSymbol>, omega: CharId) -> Result<Self, IsobaricError> {
        let d = GSp4Descriptor::Generic { transfer, omega };
        d.validate()?;
        Ok(d)
    }

    /// Lift of `(pi1 ⊗ pi2, chi_tilde)`; the GSp(4) central character is `chi_tilde`.
    pub fn from_gso(
        pi1: Arc<CuspidalSymbol>,
        pi2: Arc<CuspidalSymbol>,
        chi_tilde: CharId,
    ) -> Result<Self, IsobaricError> {
        let omega = chi_tilde.clone();
        Self::from_gso_with_omega(pi1, pi2, chi_tilde, omega)
    }

    pub fn from_gso_with_omega(
        pi1: Arc<CuspidalSymbol>,
        pi2: Arc<CuspidalSymbol>,
        chi_tilde: CharId,
        omega: CharId,
    ) -> Result<Self, IsobaricError> {
        let d = GSp4Descriptor::FromGso {
            pi1,
            pi2,
            chi_tilde,
            omega,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn is_from_gso(&self) -> bool {
        matches!(self, GSp4Descriptor::FromGso { .. })
    }

    pub fn omega(&self) -> &CharId {
        match self {
            GSp4Descriptor::Generic { omega, .. } | GSp4Descriptor::FromGso { omega, .. } => omega,
        }
    }

    fn validate(&self) -> Result<(), IsobaricError> {
        match self {
            GSp4Descriptor::Generic { transfer, omega } => {
                if transfer.degree != 4 {
                    return Err(IsobaricError::InvalidDescriptor(format!(
                        "{} has degree {}, a cuspidal transfer has degree 4",
                        transfer.id, transfer.degree
                    )));
                }
                let want = omega.pow(2);
                if transfer.central_char != want {
                    return Err(IsobaricError::CentralCharMismatch {
                        constraint: constraint::CENTRAL_CHAR_SQUARE,
                        detail: format!(
                            "central character of {} is {}, expected omega^2 = {}",
                            transfer.id, transfer.central_char, want
                        ),
                    });
                }
                for (q, params) in &transfer.local {
                    if !locally_selfdual_up_to_twist(params, omega.is_trivial()) {
                        return Err(IsobaricError::SelfDualTwist(format!(
                            "{} at q = {q}",
                            transfer.id
                        )));
                    }
                }
                Ok(())
            }
            GSp4Descriptor::FromGso {
                pi1,
                pi2,
                chi_tilde,
                omega,
            } => {
                for p in [pi1, pi2] {
                    if p.degree != 2 {
                        return Err(IsobaricError::InvalidDescriptor(format!(
                            "{} has degree {}, GSO(4) data consists of two GL(2) symbols",
                            p.id, p.degree
                        )));
                    }
                    if p.central_char != *chi_tilde {
                        return Err(IsobaricError::CentralCharMismatch {
                            constraint: constraint::GSO_CENTRAL_CHAR,
                            detail: format!(
                                "central character of {} is {}, but chi~ = {}",
                                p.id, p.central_char, chi_tilde
                            ),
                        });
                    }
                }
                if omega != chi_tilde {
                    return Err(IsobaricError::CentralCharMismatch {
                        constraint: constraint::GSO_CENTRAL_CHAR,
                        detail: format!("omega = {omega} differs from chi~ = {chi_tilde}"),
                    });
                }
                for (q, a) in &pi1.local {
                    if let Some(b) = pi2.local.get(q) {
                        let (ma, mb) = (a[0] * a[1], b[0] * b[1]);
                        if !close(ma, mb, FLOAT_TOL.max(MATCH_TOL)) {
                            return Err(IsobaricError::CentralCharMismatch {
                                constraint: constraint::GSO_CENTRAL_CHAR,
                                detail: format!("at q = {q}: {ma} vs {mb}"),
                            });
                        }
                    }
                }
                if equivalent(pi1, pi2) {
                    return Err(IsobaricError::DistinctConstituents(format!(
                        "{} ≅ {}",
                        pi1.id, pi2.id
                    )));
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideCondition {
    pub constraint: String,
    pub statement: String,
    /// Places at which the condition was checked against local data.
    pub checked_places: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct TransferResult {
    pub rep: IsobaricRep,
    pub conditions: Vec<SideCondition>,
}

/// The transfer to GL(4): a cuspidal degree-4 symbol, or `pi1 ⊞ pi2` for lifts
/// from GSO(4), with the side conditions that hold for it.
pub fn transfer(desc: &GSp4Descriptor) -> Result<TransferResult, IsobaricError> {
    desc.validate()?;
    match desc {
        GSp4Descriptor::Generic { transfer, omega } => Ok(TransferResult {
            rep: IsobaricRep::cuspidal(transfer.clone()),
            conditions: vec![
                SideCondition {
                    constraint: constraint::CENTRAL_CHAR_SQUARE.into(),
                    statement: format!(
                        "central character {} = omega^2 with omega = {}",
                        transfer.central_char, omega
                    ),
                    checked_places: vec![],
                },
                SideCondition {
                    constraint: constraint::SELFDUAL_TWIST.into(),
                    statement: format!("{0} ≅ dual({0}) ⊗ {1}", transfer.id, omega),
                    checked_places: transfer.local.keys().copied().collect(),
                },
            ],
        }),
        GSp4Descriptor::FromGso {
            pi1, pi2, omega, ..
        } => {
            let rep = IsobaricRep::sum([pi1.clone(), pi2.clone()])?;
            let mut conditions = Vec::new();
            for p in [pi1, pi2] {
                let places: Vec<u64> = p
                    .local
                    .iter()
                    .filter(|(_, v)| locally_selfdual_up_to_twist(v, omega.is_trivial()))
                    .map(|(q, _)| *q)
                    .collect();
                if places.len() != p.local.len() {
                    return Err(IsobaricError::SelfDualTwist(p.id.to_string()));
                }
                conditions.push(SideCondition {
                    constraint: constraint::SELFDUAL_TWIST.into(),
                    statement: format!("{0} ≅ dual({0}) ⊗ {1}", p.id, omega),
                    checked_places: places,
                });
            }
            let shared: Vec<u64> = pi1
                .local
                .keys()
                .filter(|q| pi2.local.contains_key(q))
                .copied()
                .collect();
            conditions.push(SideCondition {
                constraint: constraint::DISTINCT_CONSTITUENTS.into(),
                statement: format!("{} ≇ {}", pi1.id, pi2.id),
                checked_places: shared,
            });
            conditions.push(SideCondition {
                constraint: constraint::CENTRAL_CHAR_SQUARE.into(),
                statement: format!("central character of the sum is {} = omega^2", omega.pow(2)),
                checked_places: vec![],
            });
            Ok(TransferResult { rep, conditions })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseLabel {
    /// Neither representation is a lift from GSO(4): a pole iff the second is
    /// the contragredient of the first.
    NeitherFromGso,
    /// Exactly one is a lift from GSO(4): holomorphic at `s = 1`.
    OneFromGso,
    /// Both lifts, no dual constituent pair.
    BothFromGsoNoPole,
    /// Both lifts, one dual constituent pair.
    BothFromGsoSimplePole,
    /// Both lifts, the second transfer is the dual of the first.
    BothFromGsoDoublePole,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseAnalysis {
    pub case: CaseLabel,
    pub report: PoleReport,
}

/// Case label and exact pole order at `s = 1` of `L(s, Pi_1 x Pi_2)`.
///
/// Orders 3 and 4 would need a descriptor with two equivalent GL(2)
/// constituents, which the descriptor constructors already refuse; reaching
/// one here is reported as an excluded configuration.
pub fn pole_case_analysis(
    d1: &GSp4Descriptor,
    d2: &GSp4Descriptor,
    registry: &Registry,
) -> Result<CaseAnalysis, IsobaricError> {
    let t1 = transfer(d1)?;
    let t2 = transfer(d2)?;
    let report = pole_order_at_one(&t1.rep, &t2.rep, registry)?;
    let case = match (d1.is_from_gso(), d2.is_from_gso()) {
        (false, false) => CaseLabel::NeitherFromGso,
        (true, false) | (false, true) => CaseLabel::OneFromGso,
        (true, true) => match report.order {
            0 => CaseLabel::BothFromGsoNoPole,
            1 => CaseLabel::BothFromGsoSimplePole,
            2 => CaseLabel::BothFromGsoDoublePole,
            k => {
                return Err(IsobaricError::ExcludedConfiguration(format!(
                    "pole of order {k} at s = 1 between {} and {}",
                    t1.rep, t2.rep
                )))
            }
        },
    };
    Ok(CaseAnalysis { case, report })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::isobaric::rep::dual;

    fn unit(t: f64) -> Complex64 {
        Complex64::from_polar(1.0, t)
    }

    fn registry() -> Registry {
        let mut reg = Registry::new();
        for id in ["a", "b", "c", "d"] {
            reg.add(CuspidalSymbol::new(
                id,
                2,
                format!("{id}~").as_str(),
                CharId::named("w"),
            ))
            .unwrap();
        }
        for id in ["P", "Q"] {
            reg.add(CuspidalSymbol::new(
                id,
                4,
                format!("{id}~").as_str(),
                CharId::named("w").pow(2),
            ))
            .unwrap();
        }
        reg
    }

    fn gso(reg: &Registry, x: &str, y: &str) -> GSp4Descriptor {
        GSp4Descriptor::from_gso(
            reg.get(&x.into()).unwrap(),
            reg.get(&y.into()).unwrap(),
            CharId::named("w"),
        )
        .unwrap()
    }

    fn generic(reg: &Registry, x: &str) -> GSp4Descriptor {
        GSp4Descriptor::generic(reg.get(&x.into()).unwrap(), CharId::named("w")).unwrap()
    }

    #[test]
    fn gl2_twist_check_uses_the_central_value() {
        // {a, b} with ab = w: the twist by w swaps them, while a twist by a
        // square root of w does not.
        let (a, b) = (unit(0.3), unit(1.1));
        assert!(locally_selfdual_up_to_twist(&[a, b], false));
        assert!(!locally_selfdual_up_to_twist(&[a, b], true));
        let quad = [a, b, a.inv() * unit(0.8), b.inv() * unit(0.8)];
        assert!(locally_selfdual_up_to_twist(&quad, false));
        assert!(!locally_selfdual_up_to_twist(&[a, b, a, unit(2.0)], false));
    }

    #[test]
    fn transfer_of_gso_lift_is_isobaric_sum() {
        let reg = registry();
        let t = transfer(&gso(&reg, "a", "b")).unwrap();
        assert_eq!(t.rep.to_string(), "a ⊞ b");
        assert!(t
            .conditions
            .iter()
            .any(|c| c.constraint == constraint::DISTINCT_CONSTITUENTS));
        let g = transfer(&generic(&reg, "P")).unwrap();
        assert_eq!(g.rep.degree(), 4);
        assert_eq!(g.rep.terms().len(), 1);
    }

    #[test]
    fn equal_constituents_rejected() {
        let reg = registry();
        let a = reg.get(&"a".into()).unwrap();
        let err = GSp4Descriptor::from_gso(a.clone(), a, CharId::named("w")).unwrap_err();
        assert!(matches!(err, IsobaricError::DistinctConstituents(_)));
        assert_eq!(err.constraint_id(), Some(constraint::DISTINCT_CONSTITUENTS));
    }

    #[test]
    fn central_character_checks() {
        let mut reg = registry();
        reg.add(CuspidalSymbol::new("e", 2, "e~", CharId::named("v")))
            .unwrap();
        let a = reg.get(&"a".into()).unwrap();
        let e = reg.get(&"e".into()).unwrap();
        let err = GSp4Descriptor::from_gso(a.clone(), e, CharId::named("w")).unwrap_err();
        assert_eq!(err.constraint_id(), Some(constraint::GSO_CENTRAL_CHAR));
        let p = reg.get(&"P".into()).unwrap();
        let err = GSp4Descriptor::generic(p, CharId::named("v")).unwrap_err();
        assert_eq!(err.constraint_id(), Some(constraint::CENTRAL_CHAR_SQUARE));
        let b = reg.get(&"b".into()).unwrap();
        assert!(
            GSp4Descriptor::from_gso_with_omega(a, b, CharId::named("w"), CharId::trivial())
                .is_err()
        );
    }

    #[test]
    fn local_central_character_values_must_agree() {
        let mut reg = Registry::new();
        let mut l1 = BTreeMap::new();
        l1.insert(5, vec![unit(0.3), unit(-0.3)]);
        let mut l2 = BTreeMap::new();
        l2.insert(5, vec![unit(0.3), unit(0.3)]);
        let x = reg
            .add(CuspidalSymbol::new("x", 2, "x", CharId::trivial()).with_local(l1))
            .unwrap();
        let y = reg
            .add(CuspidalSymbol::new("y", 2, "y~", CharId::trivial()).with_local(l2))
            .unwrap();
        let err = GSp4Descriptor::from_gso(x, y, CharId::trivial()).unwrap_err();
        assert!(matches!(err, IsobaricError::CentralCharMismatch { .. }));
    }

    #[test]
    fn generic_transfer_must_be_twist_selfdual() {
        let mut reg = Registry::new();
        let mut good = BTreeMap::new();
        good.insert(7, vec![unit(0.1), unit(-0.1), unit(0.9), unit(-0.9)]);
        let s = reg
            .add(CuspidalSymbol::new("S", 4, "S", CharId::trivial()).with_local(good))
            .unwrap();
        assert!(GSp4Descriptor::generic(s, CharId::trivial()).is_ok());
        let mut bad = BTreeMap::new();
        bad.insert(7, vec![unit(0.1), unit(0.2), unit(0.9), unit(-1.2)]);
        let t = reg
            .add(CuspidalSymbol::new("T", 4, "T~", CharId::trivial()).with_local(bad))
            .unwrap();
        assert!(matches!(
            GSp4Descriptor::generic(t, CharId::trivial()),
            Err(IsobaricError::SelfDualTwist(_))
        ));
    }

    #[test]
    fn case_analysis() {
        let reg = registry();
        // a dual pair of generic transfers
        let p = reg.get(&"P".into()).unwrap();
        let pd = reg.dual_of(&p).unwrap();
        let dp = generic(&reg, "P");
        let dpd = GSp4Descriptor::generic(pd, CharId::named("w").inverse()).unwrap();
        let c = pole_case_analysis(&dp, &dpd, &reg).unwrap();
        assert_eq!((c.case, c.report.order), (CaseLabel::NeitherFromGso, 1));
        let c = pole_case_analysis(&dp, &generic(&reg, "Q"), &reg).unwrap();
        assert_eq!((c.case, c.report.order), (CaseLabel::NeitherFromGso, 0));

        let c = pole_case_analysis(&dp, &gso(&reg, "a", "b"), &reg).unwrap();
        assert_eq!((c.case, c.report.order), (CaseLabel::OneFromGso, 0));

        let ab = gso(&reg, "a", "b");
        let t = transfer(&ab).unwrap().rep;
        let td = dual(&t, &reg).unwrap();
        let ab_dual = GSp4Descriptor::from_gso(
            td.terms()[0].symbol.clone(),
            td.terms()[1].symbol.clone(),
            CharId::named("w").inverse(),
        )
        .unwrap();
        let c = pole_case_analysis(&ab, &ab_dual, &reg).unwrap();
        assert_eq!(
            (c.case, c.report.order),
            (CaseLabel::BothFromGsoDoublePole, 2)
        );

        let a_dual = reg.get(&"a~".into()).unwrap();
        let c_dual = reg.get(&"c~".into()).unwrap();
        let half = GSp4Descriptor::from_gso(a_dual, c_dual, CharId::named("w").inverse()).unwrap();
        let c = pole_case_analysis(&ab, &half, &reg).unwrap();
        assert_eq!(
            (c.case, c.report.order),
            (CaseLabel::BothFromGsoSimplePole, 1)
        );

        let c = pole_case_analysis(&ab, &gso(&reg, "c", "d"), &reg).unwrap();
        assert_eq!((c.case, c.report.order), (CaseLabel::BothFromGsoNoPole, 0));
    }
}
