//! Report text and CSV tables.

use std::io::Write;

use anyhow::Result;
use gerstewitz::existence::{ExistenceReport, Verdict};
use gerstewitz::parameters::SweepRow;
use gerstewitz::{Certainty, Classification, EvalOptions, PhiStatus, Point, SolveResult};

fn coord_headers(prefix: &str, dim: usize) -> impl Iterator<Item = String> + '_ {
    (1..=dim).map(move |i| format!("{prefix}{i}"))
}

fn coords(p: &Point) -> impl Iterator<Item = String> + '_ {
    p.iter().map(|c| c.to_string())
}

/// Bisection brackets are reported by the tolerance they were run to.
fn certainty_label(c: Certainty, options: EvalOptions) -> String {
    match c {
        Certainty::BracketedWithin(_) => format!("bracketed({:e})", options.tol),
        other => other.to_string(),
    }
}

fn classification_label(c: Classification) -> &'static str {
    match c {
        Classification::InDomainFinite => "finite",
        Classification::NegInfLine => "neg-inf-line",
        Classification::NotInDomain => "not-in-domain",
    }
}

pub fn eval_table(
    out: &mut dyn Write,
    dim: usize,
    rows: &[(Point, PhiStatus, Classification)],
    options: EvalOptions,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = coord_headers("y", dim).collect();
    header.extend(["phi", "status", "certainty"].map(String::from));
    w.write_record(&header)?;
    for (y, phi, class) in rows {
        let mut rec: Vec<String> = coords(y).collect();
        rec.push(phi.value.to_string());
        rec.push(classification_label(*class).to_string());
        rec.push(certainty_label(phi.certainty, options));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn points_table(out: &mut dyn Write, dim: usize, points: &[Point]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(coord_headers("y", dim))?;
    for y in points {
        w.write_record(coords(y))?;
    }
    w.flush()?;
    Ok(())
}

pub fn solve_summary(r: &SolveResult) -> Vec<String> {
    let mut lines = vec![format!("status: {}", r.status_name())];
    match r {
        SolveResult::Optimal { t_star, minimizers, exact } => {
            lines.push(format!("t_star: {t_star}"));
            lines.push(format!("exact: {exact}"));
            lines.push(format!("minimizers: {}", minimizers.len()));
        }
        SolveResult::ApproximateOptimal { t_star, cell_size, minimizers, minimizers_bounded } => {
            lines.push(format!("t_star: {t_star}"));
            lines.push(format!("cell_size: {cell_size}"));
            lines.push(format!("minimizers_bounded: {minimizers_bounded}"));
            lines.push(format!("minimizers: {}", minimizers.len()));
        }
        SolveResult::Infeasible { sample_relative } => {
            lines.push(format!("sample_relative: {sample_relative}"));
        }
        SolveResult::UnboundedBelow { witness_t, witness } => {
            lines.push(format!("witness: {witness} at t = {witness_t}"));
        }
        SolveResult::InfimumNotAttained { inf_estimate, evidence } => {
            lines.push(format!("inf_estimate: {inf_estimate}"));
            for (y, v) in evidence {
                lines.push(format!("evidence: {y} -> {v}"));
            }
        }
    }
    lines
}

pub fn existence_text(rep: &ExistenceReport) -> String {
    let mut s = match &rep.verdict {
        Verdict::GuaranteedNonemptyCompact(rule) => format!("verdict: guaranteed-nonempty-compact ({rule})\n"),
        Verdict::NecessaryConditionFails(which) => format!("verdict: necessary-condition-fails ({which})\n"),
        Verdict::NoRuleApplies => "verdict: no-rule-applies\n".to_string(),
    };
    for check in &rep.checks {
        s.push_str(&format!("{}: {}\n", check.rule, check.value));
        for h in &check.hypotheses {
            match &h.detail {
                Some(d) => s.push_str(&format!("  {}: {} ({d})\n", h.name, h.value)),
                None => s.push_str(&format!("  {}: {}\n", h.name, h.value)),
            }
        }
    }
    s
}

pub fn sweep_table(out: &mut dyn Write, dim: usize, rows: &[SweepRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = coord_headers("a", dim).chain(coord_headers("k", dim)).collect();
    header.extend(["status", "t_star"].map(String::from));
    header.extend(coord_headers("y", dim));
    w.write_record(&header)?;
    for row in rows {
        let prefix: Vec<String> = coords(&row.a).chain(coords(&row.k)).collect();
        let (status, t_star, minimizers) = match &row.result {
            Ok(r) => {
                (r.status_name().to_string(), r.t_star().map(|t| t.to_string()).unwrap_or_default(), r.minimizers())
            }
            Err(msg) => (format!("error: {msg}"), String::new(), &[][..]),
        };
        let mut emit = |y: Option<&Point>| -> Result<()> {
            let mut rec = prefix.clone();
            rec.push(status.clone());
            rec.push(t_star.clone());
            match y {
                Some(y) => rec.extend(coords(y)),
                None => rec.extend(std::iter::repeat_n(String::new(), dim)),
            }
            w.write_record(&rec)?;
            Ok(())
        };
        if minimizers.is_empty() {
            emit(None)?;
        }
        for y in minimizers {
            emit(Some(y))?;
        }
    }
    w.flush()?;
    Ok(())
}
