//! Isobaric sums and the Rankin-Selberg pole calculus at `s = 1`.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::symbol::{equivalent, CuspidalSymbol, Registry};
use super::IsobaricError;
use crate::satake::Rational;

#[derive(Clone, Debug)]
pub struct Constituent {
    pub symbol: Arc<CuspidalSymbol>,
    /// Twist exponent `r` in `|det|^r sigma`.
    pub shift: Rational,
}

/// `|det|^{r_1} sigma_1 ⊞ ... ⊞ |det|^{r_t} sigma_t` with `sum n_i r_i = 0`.
#[derive(Clone, Debug)]
pub struct IsobaricRep {
    terms: Vec<Constituent>,
}

impl IsobaricRep {
    pub fn new(terms: Vec<Constituent>) -> Result<Self, IsobaricError> {
        if terms.is_empty() {
            return Err(IsobaricError::InvalidDescriptor(
                "empty isobaric sum".into(),
            ));
        }
        let weighted: Rational = terms
            .iter()
            .map(|c| c.shift * c.symbol.degree as i64)
            .fold(Rational::zero(), |a, b| a + b);
        if !weighted.is_zero() {
            return Err(IsobaricError::NotUnitary(weighted.to_string()));
        }
        Ok(IsobaricRep { terms })
    }

    pub fn cuspidal(symbol: Arc<CuspidalSymbol>) -> Self {
        IsobaricRep {
            terms: vec![Constituent {
                symbol,
                shift: Rational::zero(),
            }],
        }
    }

    /// Untwisted isobaric sum of the given symbols.
    pub fn sum(
        symbols: impl IntoIterator<Item = Arc<CuspidalSymbol>>,
    ) -> Result<Self, IsobaricError> {
        Self::new(
            symbols
                .into_iter()
                .map(|symbol| Constituent {
                    symbol,
                    shift: Rational::zero(),
                })
                .collect(),
        )
    }

    pub fn terms(&self) -> &[Constituent] {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|c| c.symbol.degree).sum()
    }

    pub fn is_unitary_normalized(&self) -> bool {
        self.terms.iter().all(|c| c.shift.is_zero())
    }

    /// Shape `[(n_i, r_i)]` in constituent order.
    pub fn shape(&self) -> Vec<(usize, Rational)> {
        self.terms
            .iter()
            .map(|c| (c.symbol.degree, c.shift))
            .collect()
    }

    /// Same constituents up to order, compared with cuspidal equivalence.
    pub fn same_as(&self, other: &IsobaricRep) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let mut used = vec![false; other.terms.len()];
        self.terms.iter().all(|a| {
            let hit =
                other.terms.iter().enumerate().find(|(j, b)| {
                    !used[*j] && a.shift == b.shift && equivalent(&a.symbol, &b.symbol)
                });
            match hit {
                Some((j, _)) => {
                    used[j] = true;
                    true
                }
                None => false,
            }
        })
    }
}

impl fmt::Display for IsobaricRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊞ ")?;
            }
            if c.shift.is_zero() {
                write!(f, "{}", c.symbol.id)?;
            } else {
                write!(f, "|det|^({}){}", c.shift, c.symbol.id)?;
            }
        }
        Ok(())
    }
}

/// Termwise contragredient with negated twists.
pub fn dual(rep: &IsobaricRep, registry: &Registry) -> Result<IsobaricRep, IsobaricError> {
    let terms = rep
        .terms
        .iter()
        .map(|c| {
            Ok(Constituent {
                symbol: registry.dual_of(&c.symbol)?,
                shift: -c.shift,
            })
        })
        .collect::<Result<Vec<_>, IsobaricError>>()?;
    Ok(IsobaricRep { terms })
}

/// One Rankin-Selberg factor `L(s + shift, left x right)`.
#[derive(Clone, Debug)]
pub struct RsFactor {
    pub indices: (usize, usize),
    pub left: Arc<CuspidalSymbol>,
    pub right: Arc<CuspidalSymbol>,
    pub shift: Rational,
}

/// Bilinear expansion `L(s, r1 x r2) = prod_{i,j} L(s + r_i + r'_j, sigma_i x tau_j)`.
pub fn rs_factorization(r1: &IsobaricRep, r2: &IsobaricRep) -> Vec<RsFactor> {
    let mut out = Vec::with_capacity(r1.terms.len() * r2.terms.len());
    for (i, a) in r1.terms.iter().enumerate() {
        for (j, b) in r2.terms.iter().enumerate() {
            out.push(RsFactor {
                indices: (i, j),
                left: a.symbol.clone(),
                right: b.symbol.clone(),
                shift: a.shift + b.shift,
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleReport {
    pub order: usize,
    /// `(i, j)` with constituent `j` of the second sum dual to constituent `i` of the first.
    pub witnesses: Vec<(usize, usize)>,
}

/// Exact order of the pole at `s = 1`: each factor `L(s, sigma x tau)` with
/// `tau ≅ sigma~` contributes a simple pole, the rest are holomorphic and
/// nonvanishing there.
pub fn pole_order_at_one(
    r1: &IsobaricRep,
    r2: &IsobaricRep,
    registry: &Registry,
) -> Result<PoleReport, IsobaricError> {
    if !r1.is_unitary_normalized() || !r2.is_unitary_normalized() {
        return Err(IsobaricError::NotUnitaryNormalized);
    }
    let mut witnesses = Vec::new();
    for f in rs_factorization(r1, r2) {
        let dual_left = registry.dual_of(&f.left)?;
        if equivalent(&f.right, &dual_left) {
            witnesses.push(f.indices);
        }
    }
    Ok(PoleReport {
        order: witnesses.len(),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isobaric::symbol::CharId;

    fn registry() -> Registry {
        let mut reg = Registry::new();
        for (id, dual) in [("s", "s~"), ("t", "t~"), ("u", "u~")] {
            reg.add(CuspidalSymbol::new(id, 2, dual, CharId::named("w")))
                .unwrap();
        }
        reg.add(CuspidalSymbol::new("p", 2, "p", CharId::trivial()))
            .unwrap();
        reg.add(CuspidalSymbol::new("g", 1, "g~", CharId::named("g")))
            .unwrap();
        reg.add(CuspidalSymbol::new("h", 3, "h~", CharId::named("h")))
            .unwrap();
        reg
    }

    fn sym(reg: &Registry, id: &str) -> Arc<CuspidalSymbol> {
        reg.get(&id.into()).unwrap()
    }

    #[test]
    fn unitary_normalization_enforced() {
        let reg = registry();
        let bad = IsobaricRep::new(vec![
            Constituent {
                symbol: sym(&reg, "s"),
                shift: Rational::new(1, 2),
            },
            Constituent {
                symbol: sym(&reg, "t"),
                shift: Rational::new(1, 2),
            },
        ]);
        assert!(matches!(bad, Err(IsobaricError::NotUnitary(_))));
        let ok = IsobaricRep::new(vec![
            Constituent {
                symbol: sym(&reg, "g"),
                shift: Rational::new(3, 4),
            },
            Constituent {
                symbol: sym(&reg, "h"),
                shift: Rational::new(-1, 4),
            },
        ])
        .unwrap();
        assert_eq!(ok.degree(), 4);
        assert!(!ok.is_unitary_normalized());
    }

    #[test]
    fn dual_is_involution() {
        let reg = registry();
        let r = IsobaricRep::sum([sym(&reg, "s"), sym(&reg, "t")]).unwrap();
        let d = dual(&r, &reg).unwrap();
        assert_eq!(d.to_string(), "s~ ⊞ t~");
        assert!(dual(&d, &reg).unwrap().same_as(&r));
        let p = IsobaricRep::cuspidal(sym(&reg, "p"));
        assert!(dual(&p, &reg).unwrap().same_as(&p));

        let twisted = IsobaricRep::new(vec![
            Constituent {
                symbol: sym(&reg, "g"),
                shift: Rational::new(3, 4),
            },
            Constituent {
                symbol: sym(&reg, "h"),
                shift: Rational::new(-1, 4),
            },
        ])
        .unwrap();
        let dt = dual(&twisted, &reg).unwrap();
        assert_eq!(dt.terms()[0].shift, Rational::new(-3, 4));
        assert!(dual(&dt, &reg).unwrap().same_as(&twisted));
    }

    #[test]
    fn factorization_is_bilinear() {
        let reg = registry();
        let a = IsobaricRep::sum([sym(&reg, "s"), sym(&reg, "t")]).unwrap();
        let b = IsobaricRep::sum([sym(&reg, "u"), sym(&reg, "p")]).unwrap();
        assert_eq!(rs_factorization(&a, &b).len(), 4);
        let c = IsobaricRep::cuspidal(sym(&reg, "s"));
        assert_eq!(rs_factorization(&c, &c).len(), 1);
        let three = IsobaricRep::sum([sym(&reg, "s"), sym(&reg, "t"), sym(&reg, "u")]).unwrap();
        assert_eq!(rs_factorization(&three, &c).len(), 3);
    }

    #[test]
    fn pole_orders() {
        let reg = registry();
        let s = IsobaricRep::cuspidal(sym(&reg, "s"));
        let sd = dual(&s, &reg).unwrap();
        assert_eq!(pole_order_at_one(&s, &sd, &reg).unwrap().order, 1);

        let st = IsobaricRep::sum([sym(&reg, "s"), sym(&reg, "t")]).unwrap();
        let std = dual(&st, &reg).unwrap();
        let rep = pole_order_at_one(&st, &std, &reg).unwrap();
        assert_eq!(rep.order, 2);
        assert_eq!(rep.witnesses, vec![(0, 0), (1, 1)]);

        let up = IsobaricRep::sum([sym(&reg, "u"), sym(&reg, "p")]).unwrap();
        assert_eq!(pole_order_at_one(&st, &up, &reg).unwrap().order, 0);
        assert_eq!(pole_order_at_one(&up, &up, &reg).unwrap().order, 1);
    }

    #[test]
    fn twisted_input_rejected() {
        let reg = registry();
        let twisted = IsobaricRep::new(vec![
            Constituent {
                symbol: sym(&reg, "g"),
                shift: Rational::new(3, 4),
            },
            Constituent {
                symbol: sym(&reg, "h"),
                shift: Rational::new(-1, 4),
            },
        ])
        .unwrap();
        assert_eq!(
            pole_order_at_one(&twisted, &twisted, &reg),
            Err(IsobaricError::NotUnitaryNormalized)
        );
    }
}
