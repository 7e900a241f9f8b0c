//! Deterministic report rendering.
//!
//! Two renderings share the same data: `structured` is a frozen
//! `key = value` format (stable field order, golden-tested), `text` is
//! a short human-readable summary. Subgroups appear as sorted generator
//! lists in 1-indexed cycle notation, and every report records the
//! limits in force.

use std::fmt::Write as _;

use carter_core::{
    CarterReport, Lemma3Report, Lemma5Report, Limits, StarReport, Subgroup, TheoremVerdict,
};

use crate::catalog::Lookup;
use crate::format::cycles_string;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "text" => Some(Format::Text),
            "structured" => Some(Format::Structured),
            _ => None,
        }
    }
}

fn generator_list(h: &Subgroup) -> String {
    let mut gens: Vec<String> = h.gens().iter().map(cycles_string).collect();
    gens.sort();
    gens.dedup();
    gens.join(", ")
}

fn limits_block(out: &mut String, limits: &Limits) {
    let _ = writeln!(out, "limits.exhaustive_subgroups = {}", limits.exhaustive_subgroups);
    let _ = writeln!(out, "limits.pruned_carter = {}", limits.pruned_carter);
    let _ = writeln!(out, "limits.induced_degree = {}", limits.induced_degree);
    let _ = writeln!(out, "limits.overgroups = {}", limits.overgroups);
}

pub fn render_carter(report: &CarterReport, limits: &Limits, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Structured => {
            let _ = writeln!(out, "report = carter");
            let _ = writeln!(out, "group = {}", report.group_id);
            limits_block(&mut out, limits);
            let _ = writeln!(out, "classes = {}", report.classes.len());
            let _ = writeln!(out, "total_count = {}", report.total_count);
            let _ = writeln!(out, "conjugate = {}", report.conjugate);
            for (i, c) in report.classes.iter().enumerate() {
                let _ = writeln!(out, "class.{i}.order = {}", c.representative.order());
                let _ = writeln!(out, "class.{i}.size = {}", c.class_size);
                let _ = writeln!(
                    out,
                    "class.{i}.generators = {}",
                    generator_list(&c.representative)
                );
            }
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{}: {} Carter subgroup class(es), {} subgroup(s) in all",
                report.group_id,
                report.classes.len(),
                report.total_count
            );
            for c in &report.classes {
                let _ = writeln!(
                    out,
                    "  order {} with {} conjugate(s), generated by {}",
                    c.representative.order(),
                    c.class_size,
                    generator_list(&c.representative)
                );
            }
            let _ = writeln!(
                out,
                "  conjugacy: {}",
                if report.conjugate { "single class" } else { "MULTIPLE CLASSES" }
            );
        }
    }
    out
}

pub fn render_star(report: &StarReport, limits: &Limits, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Structured => {
            let _ = writeln!(out, "report = star");
            let _ = writeln!(out, "group = {}", report.group_id);
            limits_block(&mut out, limits);
            let _ = writeln!(out, "entries = {}", report.entries.len());
            let _ = writeln!(out, "satisfied = {}", report.satisfied);
            for (i, e) in report.entries.iter().enumerate() {
                let _ = writeln!(out, "entry.{i}.factor = {}", e.factor_label);
                let _ = writeln!(
                    out,
                    "entry.{i}.nilpotent_order = {}",
                    e.nilpotent_rep.order()
                );
                let _ = writeln!(
                    out,
                    "entry.{i}.nilpotent_generators = {}",
                    generator_list(&e.nilpotent_rep)
                );
                let _ = writeln!(out, "entry.{i}.induced_order = {}", e.induced_group_order);
                let _ = writeln!(out, "entry.{i}.carter_conjugate = {}", e.carter_conjugate);
            }
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{}: induced-conjugacy condition {}",
                report.group_id,
                if report.satisfied { "holds" } else { "FAILS" }
            );
            for e in &report.entries {
                let _ = writeln!(
                    out,
                    "  factor {} via nilpotent subgroup of order {}: induced group of order {}, Carter conjugacy {}",
                    e.factor_label,
                    e.nilpotent_rep.order(),
                    e.induced_group_order,
                    e.carter_conjugate
                );
            }
        }
    }
    out
}

pub fn render_theorem(
    group_id: &str,
    verdict: &TheoremVerdict,
    limits: &Limits,
    format: Format,
) -> String {
    let mut out = String::new();
    match format {
        Format::Structured => {
            let _ = writeln!(out, "report = theorem");
            let _ = writeln!(out, "group = {group_id}");
            limits_block(&mut out, limits);
            let _ = writeln!(out, "star = {}", verdict.star);
            let _ = writeln!(out, "carter_conjugate = {}", verdict.carter_conjugate);
            let _ = writeln!(out, "verdict = {}", verdict.verdict);
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{group_id}: condition holds = {}, Carter classes conjugate = {}, verdict {}",
                verdict.star, verdict.carter_conjugate, verdict.verdict
            );
        }
    }
    out
}

/// One line per normal subgroup: quotient order and whether the Carter
/// image stayed Carter.
pub fn render_lemma1(
    group_id: &str,
    carter_order: u64,
    results: &[(u64, bool)],
    limits: &Limits,
    format: Format,
) -> String {
    let mut out = String::new();
    let all = results.iter().all(|&(_, ok)| ok);
    match format {
        Format::Structured => {
            let _ = writeln!(out, "report = lemma1");
            let _ = writeln!(out, "group = {group_id}");
            limits_block(&mut out, limits);
            let _ = writeln!(out, "carter_order = {carter_order}");
            let _ = writeln!(out, "normal_subgroups = {}", results.len());
            let _ = writeln!(out, "all_images_carter = {all}");
            for (i, (n, ok)) in results.iter().enumerate() {
                let _ = writeln!(out, "case.{i}.normal_order = {n}");
                let _ = writeln!(out, "case.{i}.image_carter = {ok}");
            }
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{group_id}: Carter subgroup of order {carter_order}, images checked in {} quotient(s): {}",
                results.len(),
                if all { "all Carter" } else { "NOT ALL CARTER" }
            );
        }
    }
    out
}

pub fn render_lemma3(
    group_id: &str,
    report: &Lemma3Report,
    limits: &Limits,
    format: Format,
) -> String {
    let mut out = String::new();
    match format {
        Format::Structured => {
            let _ = writeln!(out, "report = lemma3");
            let _ = writeln!(out, "group = {group_id}");
            limits_block(&mut out, limits);
            let _ = writeln!(out, "induced_carter = {}", report.claim);
            let _ = writeln!(out, "first_component_carter = {}", report.h1_carter);
            let _ = writeln!(out, "realizations_agree = {}", report.bridge);
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{group_id}: induced automorphisms Carter = {}, wreath component Carter = {}, realizations agree = {}",
                report.claim, report.h1_carter, report.bridge
            );
        }
    }
    out
}

pub fn render_lemma5(
    group_id: &str,
    report: &Lemma5Report,
    limits: &Limits,
    format: Format,
) -> String {
    let mut out = String::new();
    match format {
        Format::Structured => {
            let _ = writeln!(out, "report = lemma5");
            let _ = writeln!(out, "group = {group_id}");
            limits_block(&mut out, limits);
            let _ = writeln!(
                out,
                "overgroups_self_normalizing = {}",
                report.overgroups_self_normalizing
            );
            let _ = writeln!(out, "conjugates_meet_center = {}", !report.conjugates_in_zk);
            let _ = writeln!(
                out,
                "other_carter_centers_met = {}",
                !report.center_meeting_other_carter
            );
            let _ = writeln!(out, "power_conjugacy = {}", report.power_conjugacy);
            let _ = writeln!(out, "overgroups_exhaustive = {}", report.overgroups_exhaustive);
            let _ = writeln!(out, "all_hold = {}", report.all_hold());
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{group_id}: all central-element properties {} (overgroups {})",
                if report.all_hold() { "hold" } else { "FAIL" },
                if report.overgroups_exhaustive { "exhaustive" } else { "sampled" }
            );
        }
    }
    out
}

pub fn render_catalog(lookup: &Lookup, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Structured => {
            let _ = writeln!(out, "report = catalog");
            let _ = writeln!(out, "verdict = {}", lookup.verdict);
            let _ = writeln!(out, "citation = {}", lookup.citation);
        }
        Format::Text => {
            let _ = writeln!(out, "{} ({})", lookup.verdict, lookup.citation);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use carter_core::{carter_subgroups, check_star, check_theorem, Group, Perm};

    fn sym4() -> Group {
        let gens = [
            Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
        ];
        Group::generate(4, &gens).unwrap()
    }

    #[test]
    fn carter_report_golden() {
        let g = sym4();
        let limits = Limits::default();
        let report = carter_subgroups(&g, &limits).unwrap();
        let got = render_carter(&report, &limits, Format::Structured);
        let want = "\
report = carter
group = group(order=24,degree=4)
limits.exhaustive_subgroups = 400
limits.pruned_carter = 2000
limits.induced_degree = 2500
limits.overgroups = 400
classes = 1
total_count = 3
conjugate = true
class.0.order = 8
class.0.size = 3
class.0.generators = (1 2)(3 4), (1 3), (2 4)
";
        assert_eq!(got, want);
    }

    #[test]
    fn theorem_report_golden() {
        let g = sym4();
        let limits = Limits::default();
        let verdict = check_theorem(&g, &limits).unwrap();
        let got = render_theorem("group(order=24,degree=4)", &verdict, &limits, Format::Structured);
        let want = "\
report = theorem
group = group(order=24,degree=4)
limits.exhaustive_subgroups = 400
limits.pruned_carter = 2000
limits.induced_degree = 2500
limits.overgroups = 400
star = true
carter_conjugate = true
verdict = consistent
";
        assert_eq!(got, want);
    }

    #[test]
    fn rendering_is_deterministic() {
        let g = sym4();
        let limits = Limits::default();
        for format in [Format::Text, Format::Structured] {
            let a = render_star(&check_star(&g, &limits).unwrap(), &limits, format);
            let b = render_star(&check_star(&g, &limits).unwrap(), &limits, format);
            assert_eq!(a, b);
            assert!(!a.is_empty());
        }
    }
}
