//! JSON documents describing symbols and the GSp(4) representations built from them.
//!
//! ```json
//! {
//!   "symbols": [{"id": "s", "degree": 2, "dual": "s", "central_char": "1",
//!                "local": {"5": [[0.6, 0.8], [0.6, -0.8]]}}],
//!   "isobaric": [{"term": "s", "r": "0"}, {"term": "t", "r": "0"}],
//!   "from_gso": true,
//!   "chi_tilde": "1",
//!   "central_char": "1",
//!   "representations": [ {"isobaric": [...], "from_gso": false, "central_char": "1"} ]
//! }
//! ```
//!
//! The top-level `isobaric` block, if present, is the first representation;
//! entries of `representations` follow it.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::descriptor::GSp4Descriptor;
use super::rep::{Constituent, IsobaricRep};
use super::shape::{validate_transfer_shape, ShapeVerdict};
use super::symbol::{CharId, CuspidalSymbol, Registry};
use super::IsobaricError;
use crate::satake::Rational;

/// Real Hecke data for a GL(2) symbol: a CSV file with header `p,a_p`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueSource {
    /// Path, relative to the document's directory when not absolute.
    pub path: String,
    /// Classical weight `k`; parameters are normalized by `p^{(k-1)/2}`.
    pub weight: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymbolDoc {
    pub id: String,
    pub degree: usize,
    pub dual: String,
    pub central_char: CharId,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub local: BTreeMap<String, Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<EigenvalueSource>,
}

impl SymbolDoc {
    pub fn from_symbol(s: &CuspidalSymbol) -> Self {
        SymbolDoc {
            id: s.id.to_string(),
            degree: s.degree,
            dual: s.dual_id.to_string(),
            central_char: s.central_char.clone(),
            local: s
                .local
                .iter()
                .map(|(q, v)| (q.to_string(), v.iter().map(|z| [z.re, z.im]).collect()))
                .collect(),
            eigenvalues: None,
        }
    }

    pub fn to_symbol(&self) -> Result<CuspidalSymbol, IsobaricError> {
        let mut local = BTreeMap::new();
        for (q, v) in &self.local {
            let q: u64 = q.trim().parse().map_err(|_| {
                IsobaricError::Parse(format!("{}: place key {q:?} is not an integer", self.id))
            })?;
            local.insert(
                q,
                v.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
            );
        }
        Ok(CuspidalSymbol::new(
            self.id.as_str(),
            self.degree,
            self.dual.as_str(),
            self.central_char.clone(),
        )
        .with_local(local))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub term: String,
    #[serde(default = "zero_string")]
    pub r: String,
}

fn zero_string() -> String {
    "0".into()
}

pub fn parse_rational(s: &str) -> Result<Rational, IsobaricError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| IsobaricError::Parse(format!("not a rational number: {s:?}")))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationSpec {
    pub isobaric: Vec<TermDoc>,
    #[serde(default)]
    pub from_gso: bool,
    /// Central character `omega` of the GSp(4) representation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_char: Option<CharId>,
    /// The character `chi~` of the GSO(4) pair; defaults to the common
    /// central character of the two constituents.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_tilde: Option<CharId>,
}

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct RepDocument {
    pub symbols: Vec<SymbolDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isobaric: Option<Vec<TermDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from_gso: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_char: Option<CharId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_tilde: Option<CharId>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub representations: Vec<RepresentationSpec>,
}

impl RepDocument {
    pub fn from_json(s: &str) -> Result<Self, IsobaricError> {
        serde_json::from_str(s).map_err(|e| IsobaricError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// All representations, top-level block first.
    pub fn representations(&self) -> Vec<RepresentationSpec> {
        let mut out = Vec::new();
        if let Some(terms) = &self.isobaric {
            out.push(RepresentationSpec {
                isobaric: terms.clone(),
                from_gso: self.from_gso.unwrap_or(false),
                central_char: self.central_char.clone(),
                chi_tilde: self.chi_tilde.clone(),
            });
        }
        out.extend(self.representations.iter().cloned());
        out
    }

    pub fn registry(&self) -> Result<Registry, IsobaricError> {
        let mut reg = Registry::new();
        for s in &self.symbols {
            reg.add(s.to_symbol()?)?;
        }
        Ok(reg)
    }
}

/// The isobaric sum a spec names, twists included.
pub fn isobaric_of(
    spec: &RepresentationSpec,
    registry: &Registry,
) -> Result<IsobaricRep, IsobaricError> {
    let terms = spec
        .isobaric
        .iter()
        .map(|t| {
            Ok(Constituent {
                symbol: registry.get(&t.term.as_str().into())?,
                shift: parse_rational(&t.r)?,
            })
        })
        .collect::<Result<Vec<_>, IsobaricError>>()?;
    IsobaricRep::new(terms)
}

/// Interprets a spec as the transfer of a GSp(4) representation.
pub fn descriptor_of(
    spec: &RepresentationSpec,
    registry: &Registry,
) -> Result<GSp4Descriptor, IsobaricError> {
    let terms: Vec<(Arc<CuspidalSymbol>, Rational)> = spec
        .isobaric
        .iter()
        .map(|t| {
            Ok((
                registry.get(&t.term.as_str().into())?,
                parse_rational(&t.r)?,
            ))
        })
        .collect::<Result<_, IsobaricError>>()?;
    let shape: Vec<(usize, Rational)> = terms.iter().map(|(s, r)| (s.degree, *r)).collect();
    if let ShapeVerdict::Rejected(reason) = validate_transfer_shape(&shape)? {
        return Err(IsobaricError::ShapeRejected(reason));
    }
    debug_assert!(terms.iter().all(|(_, r)| r.is_zero()));
    match (spec.from_gso, terms.as_slice()) {
        (false, [(t, _)]) => GSp4Descriptor::generic(
            t.clone(),
            spec.central_char.clone().unwrap_or_else(CharId::trivial),
        ),
        (true, [(a, _), (b, _)]) => {
            let chi = spec
                .chi_tilde
                .clone()
                .unwrap_or_else(|| a.central_char.clone());
            let omega = spec.central_char.clone().unwrap_or_else(|| chi.clone());
            GSp4Descriptor::from_gso_with_omega(a.clone(), b.clone(), chi, omega)
        }
        (false, _) => Err(IsobaricError::Cuspidality(
            "a transfer that is a sum of two GL(2) constituents must come from GSO(4)".into(),
        )),
        (true, _) => Err(IsobaricError::Cuspidality(
            "the transfer of a lift from GSO(4) is not cuspidal".into(),
        )),
    }
}
