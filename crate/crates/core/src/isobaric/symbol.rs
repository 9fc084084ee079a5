//! Formal cuspidal representations and the registry that resolves duals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::IsobaricError;
use crate::satake::character::{complex_multiset_eq, MATCH_TOL};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SymbolId(pub String);

impl SymbolId {
    pub fn new(s: impl Into<String>) -> Self {
        SymbolId(s.into())
    }
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for SymbolId {
    fn from(s: &str) -> Self {
        SymbolId(s.to_string())
    }
}

/// A power `base^exp` of a named idele-class character; `exp = 0` is trivial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CharId {
    base: String,
    exp: i32,
}

impl CharId {
    pub fn trivial() -> Self {
        CharId {
            base: String::new(),
            exp: 0,
        }
    }

    pub fn named(base: impl Into<String>) -> Self {
        let base = base.into();
        if base == "1" {
            return Self::trivial();
        }
        CharId { base, exp: 1 }
    }

    pub fn is_trivial(&self) -> bool {
        self.exp == 0
    }

    /// Name of the underlying character; `None` when trivial.
    pub fn base(&self) -> Option<&str> {
        (self.exp != 0).then_some(self.base.as_str())
    }

    pub fn exponent(&self) -> i32 {
        self.exp
    }

    pub fn pow(&self, k: i32) -> Self {
        let exp = self.exp * k;
        if exp == 0 {
            Self::trivial()
        } else {
            CharId {
                base: self.base.clone(),
                exp,
            }
        }
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }
}

impl fmt::Display for CharId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exp {
            0 => f.write_str("1"),
            1 => f.write_str(&self.base),
            e => write!(f, "{}^{}", self.base, e),
        }
    }
}

impl FromStr for CharId {
    type Err = IsobaricError;
    fn from_str(s: &str) -> Result<Self, IsobaricError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(IsobaricError::Parse("empty character id".into()));
        }
        match s.rsplit_once('^') {
            Some((base, e)) => {
                let exp: i32 = e.parse().map_err(|_| {
                    IsobaricError::Parse(format!("bad character exponent in {s:?}"))
                })?;
                Ok(CharId::named(base).pow(exp))
            }
            None => Ok(CharId::named(s)),
        }
    }
}

impl TryFrom<String> for CharId {
    type Error = IsobaricError;
    fn try_from(s: String) -> Result<Self, IsobaricError> {
        s.parse()
    }
}

impl From<CharId> for String {
    fn from(c: CharId) -> String {
        c.to_string()
    }
}

/// A cuspidal automorphic representation of GL(n), known through its degree,
/// its contragredient, its central character and sampled unramified data.
#[derive(Clone, Debug, PartialEq)]
pub struct CuspidalSymbol {
    pub id: SymbolId,
    pub degree: usize,
    pub dual_id: SymbolId,
    pub central_char: CharId,
    /// Satake multisets keyed by residue cardinality.
    pub local: BTreeMap<u64, Vec<Complex64>>,
}

impl CuspidalSymbol {
    pub fn new(
        id: impl Into<SymbolId>,
        degree: usize,
        dual_id: impl Into<SymbolId>,
        central_char: CharId,
    ) -> Self {
        CuspidalSymbol {
            id: id.into(),
            degree,
            dual_id: dual_id.into(),
            central_char,
            local: BTreeMap::new(),
        }
    }

    pub fn with_local(mut self, local: BTreeMap<u64, Vec<Complex64>>) -> Self {
        self.local = local;
        self
    }

    pub fn is_self_dual(&self) -> bool {
        self.id == self.dual_id
    }

    pub fn local_at(&self, q: u64) -> Option<&[Complex64]> {
        self.local.get(&q).map(Vec::as_slice)
    }

    /// The contragredient: inverse Satake data, inverse central character.
    pub fn contragredient(&self) -> CuspidalSymbol {
        CuspidalSymbol {
            id: self.dual_id.clone(),
            degree: self.degree,
            dual_id: self.id.clone(),
            central_char: self.central_char.inverse(),
            local: self
                .local
                .iter()
                .map(|(&q, v)| (q, v.iter().map(|z| z.inv()).collect()))
                .collect(),
        }
    }

    fn validate(&self) -> Result<(), IsobaricError> {
        if !(1..=4).contains(&self.degree) {
            return Err(IsobaricError::InvalidSymbol(format!(
                "{}: degree {} outside 1..=4",
                self.id, self.degree
            )));
        }
        for (q, v) in &self.local {
            if v.len() != self.degree {
                return Err(IsobaricError::InvalidSymbol(format!(
                    "{}: {} local parameters at q = {q}, degree is {}",
                    self.id,
                    v.len(),
                    self.degree
                )));
            }
            if v.iter()
                .any(|z| z.norm() == 0.0 || !z.re.is_finite() || !z.im.is_finite())
            {
                return Err(IsobaricError::InvalidSymbol(format!(
                    "{}: zero parameter at q = {q}",
                    self.id
                )));
            }
        }
        Ok(())
    }

    fn agrees_locally(&self, other: &CuspidalSymbol) -> bool {
        self.local.iter().all(|(q, v)| match other.local.get(q) {
            Some(w) => complex_multiset_eq(v, w, MATCH_TOL),
            None => true,
        })
    }
}

/// Append-only map from identifiers to symbols.
///
/// Adding a symbol whose dual is absent also adds the dual (built by
/// [`CuspidalSymbol::contragredient`]); adding one whose dual is present checks
/// that the two are mutually contragredient.
#[derive(Clone, Debug, Default)]
pub struct Registry {
    symbols: HashMap<SymbolId, Arc<CuspidalSymbol>>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn add(&mut self, sym: CuspidalSymbol) -> Result<Arc<CuspidalSymbol>, IsobaricError> {
        sym.validate()?;
        if let Some(existing) = self.symbols.get(&sym.id) {
            let consistent = existing.degree == sym.degree
                && existing.dual_id == sym.dual_id
                && existing.central_char == sym.central_char
                && existing.agrees_locally(&sym)
                && sym.agrees_locally(existing);
            if !consistent {
                return Err(IsobaricError::InconsistentSymbol(sym.id.to_string()));
            }
            // fill in any places the existing entry lacked
            if sym.local.keys().any(|q| !existing.local.contains_key(q)) {
                let mut merged = (**existing).clone();
                for (q, v) in &sym.local {
                    merged.local.entry(*q).or_insert_with(|| v.clone());
                }
                return self.replace_pair(merged);
            }
            return Ok(existing.clone());
        }
        if sym.is_self_dual() {
            let inv = sym.contragredient();
            if !sym.agrees_locally(&inv) || sym.central_char != sym.central_char.inverse() {
                return Err(IsobaricError::InconsistentSymbol(format!(
                    "{} is declared self-dual but its data is not",
                    sym.id
                )));
            }
            let arc = Arc::new(sym);
            self.symbols.insert(arc.id.clone(), arc.clone());
            return Ok(arc);
        }
        match self.symbols.get(&sym.dual_id) {
            Some(dual) => {
                let expected = dual.contragredient();
                if expected.id != sym.id
                    || expected.degree != sym.degree
                    || expected.central_char != sym.central_char
                    || !expected.agrees_locally(&sym)
                {
                    return Err(IsobaricError::InconsistentSymbol(format!(
                        "{} and {} are not mutually contragredient",
                        sym.id, sym.dual_id
                    )));
                }
                let mut merged = sym.clone();
                for (q, v) in &expected.local {
                    merged.local.entry(*q).or_insert_with(|| v.clone());
                }
                self.replace_pair(merged)
            }
            None => self.replace_pair(sym),
        }
    }

    fn replace_pair(&mut self, sym: CuspidalSymbol) -> Result<Arc<CuspidalSymbol>, IsobaricError> {
        if !sym.is_self_dual() {
            let dual = Arc::new(sym.contragredient());
            self.symbols.insert(dual.id.clone(), dual);
        }
        let arc = Arc::new(sym);
        self.symbols.insert(arc.id.clone(), arc.clone());
        Ok(arc)
    }

    pub fn get(&self, id: &SymbolId) -> Result<Arc<CuspidalSymbol>, IsobaricError> {
        self.symbols
            .get(id)
            .cloned()
            .ok_or_else(|| IsobaricError::UnknownSymbol(id.to_string()))
    }

    pub fn dual_of(&self, sym: &CuspidalSymbol) -> Result<Arc<CuspidalSymbol>, IsobaricError> {
        self.get(&sym.dual_id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<CuspidalSymbol>> {
        self.symbols.values()
    }
}

/// Cuspidal equivalence: the same identifier, or the same degree with equal
/// Satake multisets at every shared sampled place (at least one).
pub fn equivalent(a: &CuspidalSymbol, b: &CuspidalSymbol) -> bool {
    if a.id == b.id {
        return true;
    }
    if a.degree != b.degree {
        return false;
    }
    let mut shared = a
        .local
        .keys()
        .filter(|q| b.local.contains_key(q))
        .peekable();
    if shared.peek().is_none() {
        return false;
    }
    shared.all(|q| complex_multiset_eq(&a.local[q], &b.local[q], MATCH_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(t: f64) -> Complex64 {
        Complex64::from_polar(1.0, t)
    }

    #[test]
    fn char_ids() {
        let w: CharId = "w".parse().unwrap();
        assert_eq!(w.pow(2).to_string(), "w^2");
        assert_eq!(w.inverse().to_string(), "w^-1");
        assert_eq!(w.inverse().inverse(), w);
        assert!(w.pow(0).is_trivial());
        assert_eq!("1".parse::<CharId>().unwrap(), CharId::trivial());
        assert_eq!("w^-1".parse::<CharId>().unwrap(), w.inverse());
        assert_eq!("w^2".parse::<CharId>().unwrap().pow(-1).to_string(), "w^-2");
        assert!("w^x".parse::<CharId>().is_err());
    }

    #[test]
    fn dual_is_created_and_involutive() {
        let mut reg = Registry::new();
        let mut local = BTreeMap::new();
        local.insert(5, vec![unit(0.3) * 2.0, unit(-0.3) * 0.25]);
        let s = CuspidalSymbol::new("s", 2, "s~", CharId::named("w")).with_local(local);
        reg.add(s).unwrap();
        let s = reg.get(&"s".into()).unwrap();
        let d = reg.dual_of(&s).unwrap();
        assert_eq!(d.id, SymbolId::from("s~"));
        assert_eq!(d.central_char, CharId::named("w").inverse());
        let dd = reg.dual_of(&d).unwrap();
        assert_eq!(*dd, *s);
        let want: Vec<Complex64> = s.local[&5].iter().map(|z| z.inv()).collect();
        assert!(complex_multiset_eq(&d.local[&5], &want, 1e-12));
    }

    #[test]
    fn explicit_dual_must_be_consistent() {
        let mut reg = Registry::new();
        let mut local = BTreeMap::new();
        local.insert(3, vec![unit(1.0), unit(-1.0)]);
        reg.add(CuspidalSymbol::new("a", 2, "b", CharId::trivial()).with_local(local.clone()))
            .unwrap();
        // the auto-created dual, restated, is accepted
        let mut inv = BTreeMap::new();
        inv.insert(3, vec![unit(-1.0), unit(1.0)]);
        assert!(reg
            .add(CuspidalSymbol::new("b", 2, "a", CharId::trivial()).with_local(inv))
            .is_ok());
        // contradicting data is not
        let mut bad = BTreeMap::new();
        bad.insert(3, vec![unit(0.5), unit(-0.5)]);
        assert!(reg
            .add(CuspidalSymbol::new("b", 2, "a", CharId::trivial()).with_local(bad))
            .is_err());
    }

    #[test]
    fn self_dual_requires_symmetric_data() {
        let mut reg = Registry::new();
        let mut ok = BTreeMap::new();
        ok.insert(7, vec![unit(0.4), unit(-0.4)]);
        assert!(reg
            .add(CuspidalSymbol::new("p", 2, "p", CharId::trivial()).with_local(ok))
            .is_ok());
        let mut bad = BTreeMap::new();
        bad.insert(7, vec![unit(0.4), unit(0.4)]);
        assert!(reg
            .add(CuspidalSymbol::new("r", 2, "r", CharId::trivial()).with_local(bad))
            .is_err());
        assert!(reg
            .add(CuspidalSymbol::new("t", 2, "t", CharId::named("w")))
            .is_err());
    }

    #[test]
    fn validation() {
        let mut reg = Registry::new();
        assert!(reg
            .add(CuspidalSymbol::new("x", 5, "x", CharId::trivial()))
            .is_err());
        let mut local = BTreeMap::new();
        local.insert(7, vec![unit(0.4)]);
        assert!(reg
            .add(CuspidalSymbol::new("y", 2, "y", CharId::trivial()).with_local(local))
            .is_err());
        assert!(matches!(
            reg.get(&"zz".into()),
            Err(IsobaricError::UnknownSymbol(_))
        ));
    }

    #[test]
    fn equivalence_by_local_data() {
        let mut la = BTreeMap::new();
        la.insert(5, vec![unit(0.2), unit(-0.2)]);
        la.insert(7, vec![unit(1.1), unit(-1.1)]);
        let mut lb = BTreeMap::new();
        lb.insert(7, vec![unit(-1.1), unit(1.1)]);
        let a = CuspidalSymbol::new("a", 2, "a", CharId::trivial()).with_local(la);
        let b = CuspidalSymbol::new("b", 2, "b", CharId::trivial()).with_local(lb.clone());
        assert!(equivalent(&a, &b));
        lb.insert(5, vec![unit(0.25), unit(-0.25)]);
        let b = CuspidalSymbol::new("b", 2, "b", CharId::trivial()).with_local(lb);
        assert!(!equivalent(&a, &b));
        let c = CuspidalSymbol::new("c", 2, "c", CharId::trivial());
        assert!(!equivalent(&a, &c));
        assert!(equivalent(&c, &c.clone()));
    }
}
