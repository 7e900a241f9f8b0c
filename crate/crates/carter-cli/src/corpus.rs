//! Batch verification over a directory of group files (or an in-memory
//! list). Files are processed in parallel, per-file failures are
//! recorded rather than fatal, and the summary is sorted by id so runs
//! are reproducible.

use rayon::prelude::*;

use carter_core::ops::center;
use carter_core::{
    carter_subgroups, check_star, check_theorem, minimal_normal_subgroups, normal::normal_subgroups,
    verify_lemma3, verify_lemma5, verify_quotient_image, Group, Limits, Subgroup,
};

use crate::format::parse_group_file;
use crate::report::{self, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Carter,
    Star,
    Theorem,
    Lemma1,
    Lemma3,
    Lemma5,
}

impl Command {
    pub fn parse(s: &str) -> Option<Command> {
        Some(match s {
            "carter" => Command::Carter,
            "star" => Command::Star,
            "theorem" => Command::Theorem,
            "lemma1" => Command::Lemma1,
            "lemma3" => Command::Lemma3,
            "lemma5" => Command::Lemma5,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Record {
    pub id: String,
    /// Rendered report, empty when the file failed.
    pub output: String,
    pub error: Option<String>,
    /// True only for a theorem counterexample or a failed lemma check:
    /// the conditions the corpus is expected to certify.
    pub violation: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub records: Vec<Record>,
    pub errors: usize,
    pub violations: usize,
}

/// The default Carter representative of `g`, if any.
fn carter_rep(g: &Group, limits: &Limits) -> Result<Option<Subgroup>, String> {
    let report = carter_subgroups(g, limits).map_err(|e| format!("{e:?}"))?;
    Ok(report.classes.first().map(|c| c.representative.clone()))
}

/// Runs one command on one group, returning (rendered output,
/// violation flag).
pub fn run_one(
    g: &Group,
    id: &str,
    command: Command,
    limits: &Limits,
    format: Format,
) -> Result<(String, bool), String> {
    let err = |e: carter_core::Error| format!("{e:?}");
    match command {
        Command::Carter => {
            let report = carter_subgroups(g, limits).map_err(err)?;
            let bad = !report.conjugate;
            Ok((report::render_carter(&report, limits, format), bad))
        }
        Command::Star => {
            let report = check_star(g, limits).map_err(err)?;
            let bad = !report.satisfied;
            Ok((report::render_star(&report, limits, format), bad))
        }
        Command::Theorem => {
            let verdict = check_theorem(g, limits).map_err(err)?;
            let bad = verdict.verdict != "consistent";
            Ok((report::render_theorem(id, &verdict, limits, format), bad))
        }
        Command::Lemma1 => {
            let h = carter_rep(g, limits)?
                .ok_or_else(|| "no Carter subgroup to push into quotients".to_string())?;
            let mut results = Vec::new();
            for n in normal_subgroups(g).map_err(err)? {
                let ok = verify_quotient_image(g, &h, &n).map_err(err)?;
                results.push((n.order(), ok));
            }
            let bad = results.iter().any(|&(_, ok)| !ok);
            Ok((
                report::render_lemma1(id, h.order(), &results, limits, format),
                bad,
            ))
        }
        Command::Lemma3 => {
            let b = minimal_normal_subgroups(g)
                .map_err(err)?
                .into_iter()
                .find(|n| !n.group().is_abelian())
                .ok_or_else(|| "no nonabelian minimal normal subgroup".to_string())?;
            let h = carter_rep(g, limits)?
                .ok_or_else(|| "no Carter subgroup to induce from".to_string())?;
            let report = verify_lemma3(g, &h, &b).map_err(err)?;
            let bad = !(report.claim && report.h1_carter && report.bridge);
            Ok((report::render_lemma3(id, &report, limits, format), bad))
        }
        Command::Lemma5 => {
            let k = carter_rep(g, limits)?
                .ok_or_else(|| "no Carter subgroup".to_string())?;
            let zk = center(k.group());
            let z = zk
                .group()
                .sorted_elements()
                .into_iter()
                .find(|x| !x.is_identity())
                .ok_or_else(|| "Carter representative has trivial center".to_string())?;
            let report = verify_lemma5(g, &k, &z, limits).map_err(err)?;
            let bad = !report.all_hold();
            Ok((report::render_lemma5(id, &report, limits, format), bad))
        }
    }
}

/// Runs a command over (id, file text) pairs in parallel.
pub fn run_corpus(
    files: &[(String, String)],
    command: Command,
    limits: &Limits,
    format: Format,
) -> Summary {
    let mut records: Vec<Record> = files
        .par_iter()
        .map(|(fallback_id, text)| {
            let parsed = parse_group_file(text, fallback_id);
            let (id, result) = match parsed {
                Err(e) => (fallback_id.clone(), Err(e.to_string())),
                Ok(file) => {
                    let id = file.id.clone();
                    let result = file
                        .group()
                        .map_err(|e| e.to_string())
                        .and_then(|g| run_one(&g, &id, command, limits, format));
                    (id, result)
                }
            };
            match result {
                Ok((output, violation)) => Record {
                    id,
                    output,
                    error: None,
                    violation,
                },
                Err(e) => Record {
                    id,
                    output: String::new(),
                    error: Some(e),
                    violation: false,
                },
            }
        })
        .collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    let errors = records.iter().filter(|r| r.error.is_some()).count();
    let violations = records.iter().filter(|r| r.violation).count();
    Summary {
        records,
        errors,
        violations,
    }
}

/// Text rendering of a summary: one block per record plus totals.
pub fn render_summary(summary: &Summary) -> String {
    let mut out = String::new();
    for r in &summary.records {
        match &r.error {
            Some(e) => out.push_str(&format!("{}: error: {e}\n", r.id)),
            None => {
                out.push_str(&format!("--- {} ---\n", r.id));
                out.push_str(&r.output);
            }
        }
    }
    out.push_str(&format!(
        "summary: {} group(s), {} error(s), {} violation(s)\n",
        summary.records.len(),
        summary.errors,
        summary.violations
    ));
    out
}
