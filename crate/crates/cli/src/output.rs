//! JSON, CSV and plain-text renderings of a [`Report`].

use std::fmt::Write as _;

use clap::ValueEnum;
use fusion_forge::C64;

use crate::report::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Twelve significant digits.
pub fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn cplx(z: C64) -> [String; 2] {
    [sig12(z.re), sig12(z.im)]
}

fn opt(x: Option<f64>) -> String {
    x.map(sig12).unwrap_or_default()
}

pub fn render(report: &Report, format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(report).map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Csv => csv_table(report),
        Format::Text => Ok(text(report)),
    }
}

fn csv_table(report: &Report) -> Result<String, String> {
    let (header, rows) = table(report);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).map_err(|e| e.to_string())?;
    for r in rows {
        w.write_record(&r).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn table(report: &Report) -> (Vec<String>, Vec<Vec<String>>) {
    match report {
        Report::Alcove(r) => (
            strs(&["weight", "parity", "casimir", "conformal_weight", "qdim"]),
            r.rows
                .iter()
                .map(|x| vec![x.label.clone(), x.parity.clone(), x.casimir.clone(), x.conformal_weight.clone(), sig12(x.qdim)])
                .collect(),
        ),
        Report::Fuse(r) => {
            let mut header = vec!["weight".to_string()];
            header.extend(r.alcove.iter().map(|w| w.to_string()));
            let rows = r
                .alcove
                .iter()
                .zip(&r.matrix)
                .map(|(w, row)| std::iter::once(w.to_string()).chain(row.iter().map(|m| m.to_string())).collect())
                .collect();
            (header, rows)
        }
        Report::Ring(r) => {
            let mut header = vec!["product".to_string()];
            header.extend(r.labels.iter().cloned());
            let rows = r
                .labels
                .iter()
                .zip(&r.table)
                .map(|(l, row)| std::iter::once(l.clone()).chain(row.iter().cloned()).collect())
                .collect();
            (header, rows)
        }
        Report::Braid(r) => {
            let header = strs(&[
                "n", "level", "kappa", "q_re", "q_im", "r_re", "r_im", "tau_re", "tau_im", "braid_residual",
                "cubic_residual", "jones_residual", "passed",
            ]);
            let mut row = vec![r.n.to_string(), r.level.to_string(), sig12(r.kappa)];
            for z in [r.q, r.r, r.tau] {
                row.extend(cplx(z));
            }
            row.extend([sig12(r.braid_residual), sig12(r.cubic_residual), sig12(r.jones_residual), r.passed.to_string()]);
            (header, vec![row])
        }
        Report::Kz(r) => {
            let mut header = strs(&["n", "k", "level", "kappa_re", "kappa_im"]);
            for j in 1..=3 {
                header.extend([format!("lambda{j}_re"), format!("lambda{j}_im")]);
            }
            for j in 1..=3 {
                header.extend([format!("closed{j}_re"), format!("closed{j}_im")]);
            }
            header.extend(strs(&[
                "rel1", "rel2", "rel3", "ratio2", "ratio3", "resonant", "spread", "condition", "nonzero", "passed",
            ]));
            let rows = r
                .rows
                .iter()
                .map(|x| {
                    let mut row = vec![x.n.to_string(), x.k.to_string(), x.level.map(|l| l.to_string()).unwrap_or_default()];
                    row.extend(cplx(x.kappa));
                    for z in x.lambdas.iter().chain(&x.closed_form) {
                        row.extend(cplx(*z));
                    }
                    row.extend(x.rel_residual.iter().chain(&x.ratio_residual).map(|v| sig12(*v)));
                    row.extend([
                        x.resonant.to_string(),
                        opt(x.spread),
                        sig12(x.condition),
                        x.nonzero.to_string(),
                        x.passed.to_string(),
                    ]);
                    row
                })
                .collect();
            (header, rows)
        }
        Report::Df(r) => {
            let mut header = strs(&["n", "k", "kappa_re", "kappa_im"]);
            for j in 1..=3 {
                header.extend([format!("transport{j}_re"), format!("transport{j}_im")]);
            }
            for j in 1..=3 {
                header.extend([format!("predicted{j}_re"), format!("predicted{j}_im")]);
            }
            header.extend(strs(&["resid", "condition", "passed"]));
            let mut row = vec![r.n.to_string(), r.k.to_string()];
            row.extend(cplx(r.kappa));
            for z in r.odetransport.iter().chain(&r.predicted) {
                row.extend(cplx(*z));
            }
            row.extend([sig12(r.resid), sig12(r.condition), r.passed.to_string()]);
            (header, vec![row])
        }
    }
}

fn c(z: C64) -> String {
    format!("{:+.6e}{:+.6e}i", z.re, z.im)
}

fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn text(report: &Report) -> String {
    let mut s = String::new();
    match report {
        Report::Alcove(r) => {
            let _ = writeln!(s, "alcove n={} level={} κ={} ({} weights)", r.n, r.level, r.kappa, r.rows.len());
            for x in &r.rows {
                let _ = writeln!(
                    s,
                    "  {:<24} {:<6} C={:<8} Δ={:<8} d={:.12}",
                    x.label, x.parity, x.casimir, x.conformal_weight, x.qdim
                );
            }
        }
        Report::Fuse(r) => {
            let _ = writeln!(s, "fusion with {} at n={} level={}", r.generator, r.n, r.level);
            for (w, row) in r.alcove.iter().zip(&r.matrix) {
                let cells: Vec<String> = row.iter().map(|m| m.to_string()).collect();
                let _ = writeln!(s, "  {:<24} {}", w.to_string(), cells.join(" "));
            }
            let pf = &r.perron_frobenius;
            let _ = writeln!(
                s,
                "Perron–Frobenius: d(□)={:.12} residual={:.3e} power gap={:.3e} connected={} {}",
                pf.eigenvalue,
                pf.eigen_residual,
                pf.power_gap,
                pf.strongly_connected,
                status(pf.passed)
            );
        }
        Report::Ring(r) => {
            let _ = writeln!(s, "level-1 ring n={} ≅ {} {}", r.n, r.group, status(r.passed));
            let _ = writeln!(s, "  ·   {}", r.labels.iter().map(|l| format!("{l:<3}")).collect::<String>());
            for (l, row) in r.labels.iter().zip(&r.table) {
                let _ = writeln!(s, "  {:<3} {}", l, row.iter().map(|x| format!("{x:<3}")).collect::<String>());
            }
        }
        Report::Braid(r) => {
            let _ = writeln!(s, "braid n={} level={} κ={}", r.n, r.level, r.kappa);
            let _ = writeln!(s, "  q   = {}", c(r.q));
            let _ = writeln!(s, "  r   = {}", c(r.r));
            let _ = writeln!(s, "  z   = {}", c(r.z));
            let _ = writeln!(s, "  τ   = {}", c(r.tau));
            let _ = writeln!(
                s,
                "  residuals: braid {:.3e}, cubic {:.3e}, jones {:.3e} {}",
                r.braid_residual,
                r.cubic_residual,
                r.jones_residual,
                status(r.passed)
            );
        }
        Report::Kz(r) => {
            let _ = writeln!(s, "kz-verify ({:?}, ρ∞2 {:?})", r.identity_form, r.rho_inf2);
            for x in &r.rows {
                let level = x.level.map(|l| format!("ℓ={l}")).unwrap_or_else(|| format!("κ={}", c(x.kappa)));
                let worst = x.rel_residual.iter().chain(&x.ratio_residual).cloned().fold(0.0, f64::max);
                let _ = writeln!(
                    s,
                    "  n={} k={} {}: residual {:.3e}{} {}",
                    x.n,
                    x.k,
                    level,
                    worst,
                    x.spread.map(|v| format!(", spread {v:.2e}")).unwrap_or_default(),
                    status(x.passed)
                );
                for (l, cf) in x.lambdas.iter().zip(&x.closed_form) {
                    let _ = writeln!(s, "    λ = {}   closed form {}", c(*l), c(*cf));
                }
            }
        }
        Report::Df(r) => {
            let _ = writeln!(s, "df-verify n={} k={} κ={} ({:?}, ρ∞2 {:?})", r.n, r.k, c(r.kappa), r.identity_form, r.rho_inf2);
            for (t, p) in r.odetransport.iter().zip(&r.predicted) {
                let _ = writeln!(s, "  transport {}   predicted {}", c(*t), c(*p));
            }
            let _ = writeln!(s, "  residual {:.3e} {}", r.resid, status(r.passed));
        }
    }
    s
}
