//! Result records printable as aligned text or as `key=value` lines.

use std::fmt;

use crate::code::{Distance, SubsystemCode};
use crate::decode::MonteCarloReport;
use crate::double::DoubledCode;
use crate::error::{Error, Result};
use crate::goursat::{classify_stabilizer, goursat_of};

/// How a numeric value was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    Exact,
    SearchBounded,
    Sampled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::SearchBounded => "search-bounded",
            Mode::Sampled => "sampled",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Entry {
    pub key: String,
    pub value: String,
    /// `None` for non-numeric entries.
    pub mode: Option<Mode>,
}

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, key: &str, value: String, mode: Option<Mode>) -> &mut Self {
        self.entries.push(Entry {
            key: key.to_string(),
            value,
            mode,
        });
        self
    }

    pub fn exact(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.push(key, value.to_string(), Some(Mode::Exact))
    }

    pub fn sampled(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.push(key, value.to_string(), Some(Mode::Sampled))
    }

    pub fn text(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.push(key, value.to_string(), None)
    }

    /// A distance is exact when the search found a witness and a lower bound otherwise.
    pub fn distance(&mut self, key: &str, d: Distance) -> &mut Self {
        let mode = match d {
            Distance::Exact(_) => Mode::Exact,
            Distance::AtLeast(_) => Mode::SearchBounded,
        };
        self.push(key, d.to_string(), Some(mode))
    }

    /// Records `d`, or `none` when the code has no logical operators.
    pub fn distance_result(&mut self, key: &str, d: Result<Distance>) -> Result<&mut Self> {
        match d {
            Ok(d) => Ok(self.distance(key, d)),
            Err(Error::NoLogicalOperators) => Ok(self.text(key, "none")),
            Err(e) => Err(e),
        }
    }

    pub fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn extend(&mut self, other: Report) -> &mut Self {
        self.entries.extend(other.entries);
        self
    }

    /// One `key=value` line per entry, with ` mode=…` on numeric entries.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.key);
            out.push('=');
            out.push_str(&e.value);
            if let Some(m) = e.mode {
                out.push_str(" mode=");
                out.push_str(&m.to_string());
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|e| e.key.len()).max().unwrap_or(0);
        for e in &self.entries {
            match e.mode {
                Some(m) => writeln!(f, "{:width$}  {} ({m})", e.key, e.value)?,
                None => writeln!(f, "{:width$}  {}", e.key, e.value)?,
            }
        }
        Ok(())
    }
}

/// Parameters, distance, and CSS structure of a code.
pub fn info_report(code: &SubsystemCode, budget: Option<usize>) -> Result<Report> {
    let params = code.parameters();
    let mut r = Report::new();
    r.exact("p", code.field().modulus())
        .exact("n", params.n)
        .exact("k", params.k)
        .exact("r", params.r);
    r.distance_result("d", code.distance(budget))?;
    r.exact("dim_gauge", code.gauge().dim())
        .exact("dim_stabilizer", code.tower().stabilizer.dim())
        .text("css", code.is_css());
    if let Ok(split) = code.css_split() {
        r.exact("dim_hx", split.hx().dim()).exact("dim_hz", split.hz().dim());
        if params.k > 0 {
            let ds = split.distances(budget)?;
            r.distance("d_x", ds.x).distance("d_z", ds.z);
        }
    }
    Ok(r)
}

/// Parameters before and after doubling with the `d ≤ d' ≤ 2d` bracket.
pub fn double_report(doubled: &DoubledCode, budget: Option<usize>) -> Result<Report> {
    let (s, t) = (doubled.source.parameters(), doubled.result.parameters());
    let mut r = Report::new();
    r.exact("source_n", s.n).exact("source_k", s.k).exact("source_r", s.r);
    let d = doubled.source.distance(budget);
    r.distance_result("source_d", d.clone())?;
    r.exact("doubled_n", t.n)
        .exact("doubled_k", t.k)
        .exact("doubled_r", t.r);
    let d2 = doubled.result.distance(budget.map(|b| 2 * b));
    r.distance_result("doubled_d", d2.clone())?;
    r.text("doubled_css", doubled.result.is_css());
    if let (Ok(Distance::Exact(d)), Ok(Distance::Exact(d2))) = (d, d2) {
        r.text("bracket", format!("{d} <= {d2} <= {}", 2 * d))
            .text("bracket_holds", d <= d2 && d2 <= 2 * d);
    }
    Ok(r)
}

pub fn goursat_report(code: &SubsystemCode) -> Report {
    let g = goursat_of(code);
    let mut r = Report::new();
    r.exact("dim_ex", g.ex().dim())
        .exact("dim_ez", g.ez().dim())
        .exact("dim_nx", g.nx().dim())
        .exact("dim_nz", g.nz().dim())
        .exact("phi_pairs", g.phi_pairs().len());
    r
}

pub fn classify_report(code: &SubsystemCode) -> Report {
    let class = classify_stabilizer(code);
    let mut r = Report::new();
    r.text("maximal", class.maximal)
        .text("minimal", class.minimal)
        .text("css", code.is_css())
        .text("subspace_code", code.parameters().r == 0)
        .text("region", class.region());
    r
}

pub fn monte_carlo_report(mc: &MonteCarloReport) -> Report {
    let t = &mc.tally;
    let mut r = Report::new();
    r.text("q", mc.q)
        .text("seed", mc.seed)
        .exact("trials", t.trials)
        .sampled("corrected", t.corrected)
        .sampled("logical_failures", t.logical_failures)
        .sampled("out_of_range", t.out_of_range)
        .sampled("failure_rate", t.failure_rate());
    r
}
