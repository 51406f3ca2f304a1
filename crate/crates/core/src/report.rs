//! Serializable rank reports and their text, TSV and SVG renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decision::{
    apply_weights, compute_lc, compute_spc, score, Alternative, CriterionSpec, DecisionError, DecisionProblem, Matrix,
    ProblemId,
};
use crate::rounding::round_half_up;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Malformed(String),
    #[error("inconsistent report: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> Self {
        Self { name: env!("CARGO_PKG_NAME").to_string(), version: env!("CARGO_PKG_VERSION").to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemEcho {
    pub id: ProblemId,
    pub criteria: Vec<CriterionSpec>,
    pub alternatives: Vec<Alternative>,
    pub values: Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageMatrices {
    pub spc: Matrix,
    pub lc: Matrix,
    pub wlc: Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlternativeEntry {
    pub id: String,
    pub name: String,
    pub alpha: f64,
    pub theta: f64,
    pub distance: f64,
    pub rank: usize,
}

/// Everything a ranking run produced, as written to `rank_report.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankReportDocument {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub timestamp: String,
    pub problem: ProblemEcho,
    pub stages: StageMatrices,
    pub beta: Vec<f64>,
    pub beta_sum: f64,
    pub alternatives: Vec<AlternativeEntry>,
}

impl RankReportDocument {
    pub fn build(problem: &DecisionProblem, timestamp: String) -> Result<Self, DecisionError> {
        let spc = compute_spc(problem);
        let lc = compute_lc(&spc)?;
        let wlc = apply_weights(&lc, problem)?;
        let scores = score(&wlc)?;
        let alternatives = scores
            .alternatives
            .iter()
            .map(|s| {
                let alt = &problem.alternatives()[s.index];
                AlternativeEntry {
                    id: alt.id.clone(),
                    name: alt.name.clone(),
                    alpha: s.alpha,
                    theta: s.theta,
                    distance: s.distance,
                    rank: s.rank,
                }
            })
            .collect();
        Ok(Self {
            schema_version: REPORT_SCHEMA_VERSION,
            tool: ToolInfo::current(),
            timestamp,
            problem: ProblemEcho {
                id: problem.id(),
                criteria: problem.criteria().to_vec(),
                alternatives: problem.alternatives().to_vec(),
                values: problem.values().clone(),
            },
            stages: StageMatrices { spc: spc.into_data(), lc: lc.into_data(), wlc: wlc.into_data() },
            beta: scores.beta,
            beta_sum: scores.beta_sum,
            alternatives,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Parses and checks a report.
    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        let doc: Self = serde_json::from_str(text).map_err(|e| ReportError::Malformed(e.to_string()))?;
        if doc.schema_version != REPORT_SCHEMA_VERSION {
            return Err(ReportError::Malformed(format!("unsupported schema_version {}", doc.schema_version)));
        }
        doc.check()?;
        Ok(doc)
    }

    /// Verifies the score block against the weighted matrix it was derived from.
    pub fn check(&self) -> Result<(), ReportError> {
        let fail = |m: String| Err(ReportError::Inconsistent(m));
        let (c, r) = (self.problem.criteria.len(), self.problem.alternatives.len());
        for (name, m) in [("spc", &self.stages.spc), ("lc", &self.stages.lc), ("wlc", &self.stages.wlc)] {
            if m.shape() != (c, r) {
                return fail(format!("{name} matrix is {}x{}, expected {c}x{r}", m.rows(), m.cols()));
            }
        }
        if self.beta.len() != c || self.alternatives.len() != r {
            return fail("score block size does not match the problem".into());
        }
        let tol = |x: f64| 1e-12 * x.abs().max(1.0);
        for (i, row) in self.stages.wlc.iter_rows().enumerate() {
            let max = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if (max - self.beta[i]).abs() > tol(max) {
                return fail(format!("beta[{i}] is not the row maximum"));
            }
        }
        let sum: f64 = self.beta.iter().sum();
        if (sum - self.beta_sum).abs() > tol(sum) || !(self.beta_sum > 0.0) {
            return fail("beta_sum differs from the sum of beta".into());
        }
        let mut seen = vec![false; r];
        for (j, a) in self.alternatives.iter().enumerate() {
            let alpha: f64 = self.stages.wlc.column(j).sum();
            if (alpha - a.alpha).abs() > tol(alpha)
                || (a.theta - a.alpha / self.beta_sum).abs() > tol(1.0)
                || (a.distance - (self.beta_sum - a.alpha)).abs() > tol(self.beta_sum)
            {
                return fail(format!("scores of {} do not match the weighted matrix", a.id));
            }
            if a.rank == 0 || a.rank > r || std::mem::replace(&mut seen[a.rank - 1], true) {
                return fail(format!("rank {} of {} is not part of a permutation", a.rank, a.id));
            }
        }
        for a in &self.alternatives {
            for b in &self.alternatives {
                if a.rank < b.rank && a.theta < b.theta {
                    return fail(format!("{} ranks above {} with a lower score", a.id, b.id));
                }
            }
        }
        Ok(())
    }

    /// Alternatives ordered by rank, best first.
    pub fn by_rank(&self) -> Vec<&AlternativeEntry> {
        let mut v: Vec<_> = self.alternatives.iter().collect();
        v.sort_by_key(|a| a.rank);
        v
    }

    /// Score table: one line per alternative in input order.
    pub fn score_table(&self, precision: usize) -> String {
        let header = ["Code", "Alternative", "alpha", "beta_sum", "theta", "Rank"];
        let beta = round_half_up(self.beta_sum, precision);
        let rows: Vec<Vec<String>> = self
            .alternatives
            .iter()
            .map(|a| {
                vec![
                    a.id.clone(),
                    a.name.clone(),
                    round_half_up(a.alpha, precision),
                    beta.clone(),
                    round_half_up(a.theta, precision),
                    a.rank.to_string(),
                ]
            })
            .collect();
        align(&header.map(String::from), &rows)
    }

    /// Optimal values per criterion and their sum.
    pub fn beta_table(&self, precision: usize) -> String {
        let mut header = vec!["Criteria".to_string()];
        header.extend(self.problem.criteria.iter().map(|c| c.id.clone()));
        header.push("beta_sum".into());
        let mut row = vec!["Values".to_string()];
        row.extend(self.beta.iter().map(|b| round_half_up(*b, precision)));
        row.push(round_half_up(self.beta_sum, precision));
        align(&header, &[row])
    }

    /// One stage matrix with criterion ids, directions and (for WLC) weights.
    pub fn stage_table(&self, stage: crate::decision::Stage, precision: usize) -> String {
        use crate::decision::Stage;
        let m = match stage {
            Stage::Spc => &self.stages.spc,
            Stage::Lc => &self.stages.lc,
            Stage::Wlc => &self.stages.wlc,
        };
        let mut header = vec![stage.to_string(), "Dir".to_string()];
        if stage == Stage::Wlc {
            header.push("Weight".into());
        }
        header.extend(self.problem.alternatives.iter().map(|a| a.id.clone()));
        let rows: Vec<Vec<String>> = self
            .problem
            .criteria
            .iter()
            .zip(m.iter_rows())
            .map(|(c, values)| {
                let mut row = vec![c.id.clone(), c.direction.to_string()];
                if stage == Stage::Wlc {
                    row.push(round_half_up(c.weight, precision));
                }
                row.extend(values.iter().map(|x| round_half_up(*x, precision)));
                row
            })
            .collect();
        align(&header, &rows)
    }

    /// `alternative_id<TAB>distance`, closest first, distances at full precision.
    pub fn distances_tsv(&self) -> String {
        let mut out = String::from("alternative_id\tdistance\n");
        for a in self.by_rank() {
            let _ = writeln!(out, "{}\t{}", a.id, a.distance);
        }
        out
    }

    /// Horizontal bar chart of the distance of each alternative from the optimal score.
    pub fn distances_svg(&self) -> String {
        let entries = self.by_rank();
        let (label_w, bar_w, row_h, top) = (120.0, 480.0, 26.0, 40.0);
        let width = label_w + bar_w + 90.0;
        let height = top + row_h * entries.len() as f64 + 20.0;
        let max = entries.iter().map(|a| a.distance).fold(0.0, f64::max);
        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(
            svg,
            r#"  <text x="{}" y="20" font-size="14">Distance of each alternative's score from the optimal score ({})</text>"#,
            label_w,
            round_half_up(self.beta_sum, 3)
        );
        for (k, a) in entries.iter().enumerate() {
            let y = top + row_h * k as f64;
            let w = if max > 0.0 { bar_w * a.distance / max } else { 0.0 };
            let _ = writeln!(
                svg,
                r#"  <text x="{}" y="{}" text-anchor="end">{}</text>"#,
                label_w - 8.0,
                y + row_h * 0.65,
                xml_escape(&a.name)
            );
            let _ = writeln!(
                svg,
                r##"  <rect x="{label_w}" y="{}" width="{w:.2}" height="{}" fill="#4a7ab5"/>"##,
                y + 4.0,
                row_h - 8.0
            );
            let _ = writeln!(
                svg,
                r#"  <text x="{:.2}" y="{}">{}</text>"#,
                label_w + w + 6.0,
                y + row_h * 0.65,
                round_half_up(a.distance, 3)
            );
        }
        svg.push_str("</svg>\n");
        svg
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Left-aligns the first column, right-aligns the rest.
fn align(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let mut line = String::new();
        for (k, cell) in row.iter().enumerate().take(cols) {
            if k == 0 {
                let _ = write!(line, "{cell:<width$}", width = widths[0]);
            } else {
                let _ = write!(line, "  {cell:>width$}", width = widths[k]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
