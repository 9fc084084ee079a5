//! CSV and JSON plumbing: `p,a_p` eigenvalue tables, `p,theta` synthetic
//! dumps, `s,re,im` sweeps and their JSON summary.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::delta::{normalized_gl2_params, EigenvalueTable};
use super::LfuncError;

#[derive(Debug, Deserialize)]
struct EigenRecord {
    p: u64,
    a_p: String,
}

fn csv_err(e: csv::Error) -> LfuncError {
    LfuncError::Parse(e.to_string())
}

/// Reads `p,a_p` rows; `a_p` may be any integer or decimal.
pub fn read_eigenvalue_csv<R: Read>(reader: R) -> Result<Vec<(u64, f64)>, LfuncError> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers().map_err(csv_err)?.clone();
    if headers.iter().collect::<Vec<_>>() != ["p", "a_p"] {
        return Err(LfuncError::Parse(format!(
            "expected header p,a_p, found {}",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    rdr.deserialize::<EigenRecord>()
        .map(|rec| {
            let rec = rec.map_err(csv_err)?;
            let a: f64 = rec.a_p.parse().map_err(|_| {
                LfuncError::Parse(format!(
                    "a_p = {:?} at p = {} is not a number",
                    rec.a_p, rec.p
                ))
            })?;
            Ok((rec.p, a))
        })
        .collect()
}

pub fn read_eigenvalue_csv_path(path: &Path) -> Result<Vec<(u64, f64)>, LfuncError> {
    let f = std::fs::File::open(path)
        .map_err(|e| LfuncError::Io(format!("{}: {e}", path.display())))?;
    read_eigenvalue_csv(f)
}

/// Normalized GL(2) Satake data from Hecke eigenvalues of weight `k`.
pub fn local_from_eigenvalues(rows: &[(u64, f64)], weight: u32) -> BTreeMap<u64, Vec<Complex64>> {
    rows.iter()
        .map(|&(p, a)| {
            let (x, y) = normalized_gl2_params(a, p, weight);
            (p, vec![x, y])
        })
        .collect()
}

pub fn write_eigenvalue_csv<W: Write>(table: &EigenvalueTable, w: W) -> Result<(), LfuncError> {
    let mut wtr = csv::Writer::from_writer(w);
    wtr.write_record(["p", "a_p"]).map_err(csv_err)?;
    for r in &table.rows {
        wtr.write_record([r.p.to_string(), r.a_p.to_string()])
            .map_err(csv_err)?;
    }
    wtr.flush().map_err(|e| LfuncError::Io(e.to_string()))
}

pub fn write_theta_csv<W: Write>(rows: &[(u64, f64)], w: W) -> Result<(), LfuncError> {
    let mut wtr = csv::Writer::from_writer(w);
    wtr.write_record(["p", "theta"]).map_err(csv_err)?;
    for (p, t) in rows {
        wtr.write_record([p.to_string(), format!("{t:.17e}")])
            .map_err(csv_err)?;
    }
    wtr.flush().map_err(|e| LfuncError::Io(e.to_string()))
}

pub fn write_sweep_csv<W: Write>(
    grid: &[f64],
    values: &[Complex64],
    w: W,
) -> Result<(), LfuncError> {
    let mut wtr = csv::Writer::from_writer(w);
    wtr.write_record(["s", "re", "im"]).map_err(csv_err)?;
    for (s, v) in grid.iter().zip(values) {
        wtr.write_record([
            s.to_string(),
            format!("{:.17e}", v.re),
            format!("{:.17e}", v.im),
        ])
        .map_err(csv_err)?;
    }
    wtr.flush().map_err(|e| LfuncError::Io(e.to_string()))
}

/// Summary written next to a sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub estimate: f64,
    pub symbolic_order: usize,
    #[serde(rename = "X")]
    pub x: u64,
    pub seed: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfunc::delta::delta_eigenvalues;

    #[test]
    fn eigenvalue_round_trip() {
        let table = delta_eigenvalues(100);
        let mut buf = Vec::new();
        write_eigenvalue_csv(&table, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("p,a_p\n2,-24\n3,252\n5,4830\n"));
        let rows = read_eigenvalue_csv(buf.as_slice()).unwrap();
        assert_eq!(rows.len(), table.rows.len());
        let local = local_from_eigenvalues(&rows, 12);
        for r in &table.rows {
            let v = &local[&r.p];
            assert!((v[0] - r.alpha).norm() < 1e-12 && (v[1] - r.beta).norm() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_csv() {
        assert!(read_eigenvalue_csv("q,a\n2,1\n".as_bytes()).is_err());
        assert!(read_eigenvalue_csv("p,a_p\n2,x\n".as_bytes()).is_err());
        assert!(read_eigenvalue_csv("p,a_p\nx,1\n".as_bytes()).is_err());
    }

    #[test]
    fn sweep_and_summary() {
        let mut buf = Vec::new();
        write_sweep_csv(
            &[1.3, 1.2],
            &[Complex64::new(2.0, 0.0), Complex64::new(3.0, -0.5)],
            &mut buf,
        )
        .unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("s,re,im"));
        assert_eq!(text.lines().count(), 3);
        let s = SweepSummary {
            estimate: 1.02,
            symbolic_order: 1,
            x: 100_000,
            seed: 7,
        };
        let j = serde_json::to_string(&s).unwrap();
        assert!(j.contains("\"X\":100000"));
        assert_eq!(serde_json::from_str::<SweepSummary>(&j).unwrap(), s);
    }
}
