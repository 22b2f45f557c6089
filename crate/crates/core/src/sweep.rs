//! Cross-gain sweeps: one row of scheme sum rates per value of `a`, with
//! deterministic CSV and JSON encodings.

use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::ToleranceConfig;
use crate::regimes::ZicConfig;
use crate::schemes::{evaluate, pick_best, upper_bound, SchemeEvaluation, SchemeId};
use crate::single_user::UserProfile;

/// Column order of the CSV encoding; JSON objects use the same names.
pub const CSV_HEADER: [&str; 8] = [
    "a",
    "scheme_i",
    "scheme_ii",
    "scheme_iii",
    "scheme_iv",
    "scheme_v",
    "upper_bound",
    "best",
];

/// Decimal places written for every number.
pub const DECIMALS: usize = 6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub a: f64,
    pub scheme_i: Option<f64>,
    pub scheme_ii: Option<f64>,
    pub scheme_iii: Option<f64>,
    pub scheme_iv: Option<f64>,
    pub scheme_v: Option<f64>,
    pub upper_bound: f64,
    pub best: SchemeId,
}

impl SweepRow {
    pub fn rate(&self, id: SchemeId) -> Option<f64> {
        match id {
            SchemeId::I => self.scheme_i,
            SchemeId::II => self.scheme_ii,
            SchemeId::III => self.scheme_iii,
            SchemeId::IV => self.scheme_iv,
            SchemeId::V => self.scheme_v,
            SchemeId::UpperBound => Some(self.upper_bound),
        }
    }

    /// The row as it reads back from its text encodings.
    pub fn quantized(&self) -> SweepRow {
        let q = |v: f64| quantize(v);
        SweepRow {
            a: q(self.a),
            scheme_i: self.scheme_i.map(q),
            scheme_ii: self.scheme_ii.map(q),
            scheme_iii: self.scheme_iii.map(q),
            scheme_iv: self.scheme_iv.map(q),
            scheme_v: self.scheme_v.map(q),
            upper_bound: q(self.upper_bound),
            best: self.best,
        }
    }
}

fn format_number(v: f64) -> String {
    format!("{v:.DECIMALS$}")
}

fn quantize(v: f64) -> f64 {
    // Round-tripping through the printed form is exactly what readers see.
    format_number(v).parse().unwrap_or(v)
}

/// A uniform grid of cross gains for one pair of users.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub user1: UserProfile,
    pub user2: UserProfile,
    pub a_min: f64,
    pub a_max: f64,
    pub steps: usize,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.a_min >= 0.0) || !self.a_max.is_finite() || self.a_min > self.a_max {
            return Err(Error::domain(format!(
                "cross-gain range must satisfy 0 <= a_min <= a_max, got [{}, {}]",
                self.a_min, self.a_max
            )));
        }
        if self.steps < 2 {
            return Err(Error::domain(format!(
                "a sweep needs at least 2 steps, got {}",
                self.steps
            )));
        }
        self.user1.require_positive_budget()?;
        self.user2.require_positive_budget()
    }

    pub fn gains(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    self.a_max
                } else {
                    self.a_min + (self.a_max - self.a_min) * i as f64 / (n - 1) as f64
                }
            })
            .collect()
    }
}

/// All schemes defined at the config's cross gain, plus the upper bound.
pub fn sweep_row(cfg: &ZicConfig, tol: &ToleranceConfig) -> Result<SweepRow> {
    let mut evals: Vec<SchemeEvaluation> = Vec::with_capacity(5);
    for id in SchemeId::SCHEMES {
        if let Some(e) = evaluate(id, cfg, tol)? {
            evals.push(e);
        }
    }
    let rate = |id: SchemeId| {
        evals
            .iter()
            .find(|e| e.scheme == id && e.feasible)
            .map(|e| e.sum_rate)
    };
    let best = pick_best(&evals)
        .map(|e| e.scheme)
        .ok_or_else(|| Error::Infeasible(format!("no feasible scheme at a = {}", cfg.cross_gain)))?;
    Ok(SweepRow {
        a: cfg.cross_gain,
        scheme_i: rate(SchemeId::I),
        scheme_ii: rate(SchemeId::II),
        scheme_iii: rate(SchemeId::III),
        scheme_iv: rate(SchemeId::IV),
        scheme_v: rate(SchemeId::V),
        upper_bound: upper_bound(cfg)?.sum_rate,
        best,
    })
}

/// Evaluates every row of the sweep, in ascending `a`. Rows are independent
/// pure computations, so the parallel and sequential paths return identical
/// values.
pub fn sweep(spec: &SweepSpec, tol: &ToleranceConfig, parallel: bool) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    tol.validate()?;
    let row = |a: f64| {
        let cfg = ZicConfig::new(a, spec.user1, spec.user2)?;
        sweep_row(&cfg, tol)
    };
    let gains = spec.gains();
    if parallel {
        gains.into_par_iter().map(row).collect()
    } else {
        gains.into_iter().map(row).collect()
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::domain(format!("csv: {e}"))
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    let cell = |v: Option<f64>| v.map(format_number).unwrap_or_default();
    for r in rows {
        w.write_record([
            format_number(r.a),
            cell(r.scheme_i),
            cell(r.scheme_ii),
            cell(r.scheme_iii),
            cell(r.scheme_iv),
            cell(r.scheme_v),
            format_number(r.upper_bound),
            r.best.to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.flush().map_err(|e| Error::domain(format!("write: {e}")))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRow>> {
    let mut rd = csv::Reader::from_reader(input);
    let header: Vec<String> = rd.headers().map_err(csv_error)?.iter().map(str::to_string).collect();
    if header != CSV_HEADER {
        return Err(Error::domain(format!("unexpected csv header {header:?}")));
    }
    let num = |s: &str| -> Result<f64> {
        s.parse()
            .map_err(|_| Error::domain(format!("bad number '{s}' in csv")))
    };
    let opt = |s: &str| -> Result<Option<f64>> {
        if s.is_empty() {
            Ok(None)
        } else {
            num(s).map(Some)
        }
    };
    rd.records()
        .map(|rec| {
            let rec = rec.map_err(csv_error)?;
            Ok(SweepRow {
                a: num(&rec[0])?,
                scheme_i: opt(&rec[1])?,
                scheme_ii: opt(&rec[2])?,
                scheme_iii: opt(&rec[3])?,
                scheme_iv: opt(&rec[4])?,
                scheme_v: opt(&rec[5])?,
                upper_bound: num(&rec[6])?,
                best: rec[7].parse()?,
            })
        })
        .collect()
}

/// JSON array of row objects, numbers quantized like the CSV cells.
pub fn write_json<W: Write>(rows: &[SweepRow], mut out: W) -> Result<()> {
    let quantized: Vec<SweepRow> = rows.iter().map(SweepRow::quantized).collect();
    serde_json::to_writer_pretty(&mut out, &quantized)
        .map_err(|e| Error::domain(format!("json: {e}")))?;
    writeln!(out).map_err(|e| Error::domain(format!("write: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a_min: f64, a_max: f64, steps: usize) -> SweepSpec {
        let u = UserProfile::new(3.5, 2.0).unwrap();
        SweepSpec {
            user1: u,
            user2: u,
            a_min,
            a_max,
            steps,
        }
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(spec(0.0, 1.0, 1).validate().is_err());
        assert!(spec(2.0, 1.0, 5).validate().is_err());
        assert!(spec(-1.0, 1.0, 5).validate().is_err());
        assert!(spec(0.5, 0.5, 2).validate().is_ok());
    }

    #[test]
    fn gains_hit_both_ends() {
        let g = spec(0.0, 0.99, 100).gains();
        assert_eq!(g.len(), 100);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[99], 0.99);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rows_populate_exactly_one_of_iv_and_v() {
        let tol = ToleranceConfig::fast();
        let rows = sweep(&spec(0.5, 1.5, 3), &tol, false).unwrap();
        assert!(rows[0].scheme_iv.is_none() && rows[0].scheme_v.is_some());
        assert!(rows[1].scheme_iv.is_some() && rows[1].scheme_v.is_none());
        assert!(rows[2].scheme_iv.is_some() && rows[2].scheme_v.is_none());
    }

    #[test]
    fn csv_layout() {
        let row = SweepRow {
            a: 0.5,
            scheme_i: Some(1.0),
            scheme_ii: Some(1.2924812),
            scheme_iii: Some(1.3),
            scheme_iv: None,
            scheme_v: Some(1.31),
            upper_bound: 1.406088,
            best: SchemeId::V,
        };
        let mut buf = Vec::new();
        write_csv(&[row], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "a,scheme_i,scheme_ii,scheme_iii,scheme_iv,scheme_v,upper_bound,best\n\
             0.500000,1.000000,1.292481,1.300000,,1.310000,1.406088,V\n"
        );
    }

    #[test]
    fn csv_rejects_foreign_header() {
        let text = "a,b\n1,2\n";
        assert!(read_csv(text.as_bytes()).is_err());
    }
}
