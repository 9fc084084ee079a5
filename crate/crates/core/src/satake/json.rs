//! JSON documents for parameters.
//!
//! ```json
//! {"kind": "gsp4", "entries": [[re, im], ...], "mu": [re, im],
//!  "q": 5, "exact": [{"r": "1/2", "turns": "0"}, ...]}
//! ```
//!
//! `entries` of a `gsp4` document are the diagonal tuple `(x1, x2, y2, y1)`.
//! `q` and `exact` are present only when every entry has an exact form at one
//! place; the floats are then re-derived from the exact forms on load, so the
//! round trip is bit-stable.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::character::{close, Rational, UnramChar, FLOAT_TOL};
use super::params::{GL2Param, GL4Param, GSp4Param};
use super::ParamError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    Gl2,
    Gsp4,
    Gl4,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactDoc {
    pub r: String,
    pub turns: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamDoc {
    pub kind: ParamKind,
    pub entries: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<ExactDoc>>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Param {
    Gl2(GL2Param),
    Gsp4(GSp4Param),
    Gl4(GL4Param),
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn parse_rational(s: &str) -> Result<Rational, ParamError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| ParamError::Parse(format!("not a rational: {s:?}")))
}

impl Param {
    pub fn kind(&self) -> ParamKind {
        match self {
            Param::Gl2(_) => ParamKind::Gl2,
            Param::Gsp4(_) => ParamKind::Gsp4,
            Param::Gl4(_) => ParamKind::Gl4,
        }
    }

    pub fn entries(&self) -> Vec<UnramChar> {
        match self {
            Param::Gl2(p) => p.entries().to_vec(),
            Param::Gsp4(p) => p.to_tuple().to_vec(),
            Param::Gl4(p) => p.entries().to_vec(),
        }
    }

    fn mu(&self) -> Option<UnramChar> {
        match self {
            Param::Gl2(p) => Some(p.mu()),
            Param::Gsp4(p) => Some(p.mu()),
            Param::Gl4(_) => None,
        }
    }

    pub fn to_doc(&self) -> ParamDoc {
        let entries = self.entries();
        let forms: Option<Vec<_>> = entries.iter().map(|e| e.exact_form()).collect();
        let (q, exact) = match forms {
            Some(f) if f.iter().all(|x| x.q == f[0].q) => (
                Some(f[0].q),
                Some(
                    f.iter()
                        .map(|x| ExactDoc {
                            r: x.r.to_string(),
                            turns: x.turns.to_string(),
                        })
                        .collect(),
                ),
            ),
            _ => (None, None),
        };
        ParamDoc {
            kind: self.kind(),
            entries: entries.iter().map(|e| pair(e.value())).collect(),
            mu: self.mu().map(|m| pair(m.value())),
            q,
            exact,
        }
    }

    pub fn from_doc(doc: &ParamDoc) -> Result<Param, ParamError> {
        let want = match doc.kind {
            ParamKind::Gl2 => 2,
            ParamKind::Gsp4 | ParamKind::Gl4 => 4,
        };
        if doc.entries.len() != want {
            return Err(ParamError::WrongArity {
                expected: want,
                found: doc.entries.len(),
            });
        }
        let chars: Vec<UnramChar> = match (&doc.exact, doc.q) {
            (Some(exact), Some(q)) => {
                if exact.len() != want {
                    return Err(ParamError::WrongArity {
                        expected: want,
                        found: exact.len(),
                    });
                }
                exact
                    .iter()
                    .zip(&doc.entries)
                    .map(|(e, v)| {
                        let c =
                            UnramChar::exact(q, parse_rational(&e.r)?, parse_rational(&e.turns)?);
                        if !close(c.value(), Complex64::new(v[0], v[1]), FLOAT_TOL) {
                            return Err(ParamError::Parse(format!(
                                "entry {v:?} disagrees with exact form q^({})·e({})",
                                e.r, e.turns
                            )));
                        }
                        Ok(c)
                    })
                    .collect::<Result<_, _>>()?
            }
            (Some(_), None) => return Err(ParamError::Parse("exact forms need \"q\"".into())),
            _ => doc
                .entries
                .iter()
                .map(|v| UnramChar::from_complex(Complex64::new(v[0], v[1])))
                .collect::<Result<_, _>>()?,
        };
        let param = match doc.kind {
            ParamKind::Gl2 => Param::Gl2(GL2Param::new(chars[0], chars[1])),
            ParamKind::Gsp4 => Param::Gsp4(GSp4Param::from_tuple([
                chars[0], chars[1], chars[2], chars[3],
            ])?),
            ParamKind::Gl4 => Param::Gl4(GL4Param::new([chars[0], chars[1], chars[2], chars[3]])),
        };
        if let (Some(mu), Some(m)) = (param.mu(), doc.mu) {
            if !close(mu.value(), Complex64::new(m[0], m[1]), FLOAT_TOL) {
                return Err(ParamError::Parse(format!(
                    "mu {m:?} disagrees with the entries"
                )));
            }
        }
        Ok(param)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("parameter documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Param, ParamError> {
        let doc: ParamDoc =
            serde_json::from_str(s).map_err(|e| ParamError::Parse(e.to_string()))?;
        Param::from_doc(&doc)
    }
}
