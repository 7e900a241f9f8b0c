//! Conjugacy conditions for Carter subgroups of almost simple groups,
//! keyed by the socle family.
//!
//! The data lives in `data/catalog_rows.txt`, one row per (family,
//! constraint, condition) triple. A lookup takes the socle family,
//! optional parameters `(l, r, t)` of the defining field and rank, and
//! whatever is known about the extension `G <= A <= Aut(G)`; it answers
//! whether the table guarantees conjugate Carter subgroups. Recognition
//! of a concrete permutation group as a group of Lie type is out of
//! scope: callers name the family explicitly.

use std::fmt;

/// Socle families appearing in the table. `Two*` marks twisted types;
/// `D2l` and `D2lPlus1` split type D by the parity of the rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Alternating,
    Sporadic,
    A1,
    Bl,
    Cl,
    TwoB2,
    G2,
    F4,
    TwoF4,
    E7,
    E8,
    D2l,
    ThreeD4,
    TwoD2l,
    D2lPlus1,
    TwoD2lPlus1,
    TwoG2,
    E6,
    TwoE6,
    Al,
    TwoAl,
}

impl Family {
    pub fn parse(text: &str) -> Option<Family> {
        let t = text.trim();
        Some(match t {
            "alternating" => Family::Alternating,
            "sporadic" => Family::Sporadic,
            "A1" => Family::A1,
            "Bl" => Family::Bl,
            "Cl" => Family::Cl,
            "2B2" => Family::TwoB2,
            "G2" => Family::G2,
            "F4" => Family::F4,
            "2F4" => Family::TwoF4,
            "E7" => Family::E7,
            "E8" => Family::E8,
            "D2l" => Family::D2l,
            "3D4" => Family::ThreeD4,
            "2D2l" => Family::TwoD2l,
            "D2l+1" => Family::D2lPlus1,
            "2D2l+1" => Family::TwoD2lPlus1,
            "2G2" => Family::TwoG2,
            "E6" => Family::E6,
            "2E6" => Family::TwoE6,
            "Al" => Family::Al,
            "2Al" => Family::TwoAl,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Alternating => "alternating",
            Family::Sporadic => "sporadic",
            Family::A1 => "A1",
            Family::Bl => "Bl",
            Family::Cl => "Cl",
            Family::TwoB2 => "2B2",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::TwoF4 => "2F4",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::D2l => "D2l",
            Family::ThreeD4 => "3D4",
            Family::TwoD2l => "2D2l",
            Family::D2lPlus1 => "D2l+1",
            Family::TwoD2lPlus1 => "2D2l+1",
            Family::TwoG2 => "2G2",
            Family::E6 => "E6",
            Family::TwoE6 => "2E6",
            Family::Al => "Al",
            Family::TwoAl => "2Al",
        }
    }
}

/// Lie-type parameters: rank `l` and field size `r^t` with `r` prime.
/// All optional; unknown values make constraints indeterminate rather
/// than false.
#[derive(Clone, Copy, Debug, Default)]
pub struct Params {
    pub l: Option<u64>,
    pub r: Option<u64>,
    pub t: Option<u64>,
}

/// What is known about the extension `A` of the socle `G`. `Ghat` is
/// the inner-diagonal automorphism group of `G`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExtensionDescriptor {
    /// `A = G`.
    pub a_equals_g: Option<bool>,
    /// `A / (A meet Ghat)` is a 2-group.
    pub quotient_by_ghat_two_group: Option<bool>,
    /// `[Ghat : A meet Ghat] <= 2`.
    pub ghat_index_le_2: Option<bool>,
    /// `A <= Ghat`.
    pub inside_ghat: Option<bool>,
}

impl ExtensionDescriptor {
    /// The descriptor for `A = G` itself.
    pub fn socle_only() -> ExtensionDescriptor {
        ExtensionDescriptor {
            a_equals_g: Some(true),
            quotient_by_ghat_two_group: Some(true),
            ghat_index_le_2: None,
            inside_ghat: Some(true),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    None,
    TwoGroupOrIndexLe2,
    AEqualsG,
    BetweenGAndGhat,
}

impl Condition {
    fn parse(text: &str) -> Option<Condition> {
        Some(match text.trim() {
            "none" => Condition::None,
            "two_group_or_index_le_2" => Condition::TwoGroupOrIndexLe2,
            "A_equals_G" => Condition::AEqualsG,
            "between_G_and_Ghat" => Condition::BetweenGAndGhat,
            _ => return None,
        })
    }

    /// Three-valued evaluation against the descriptor; `None` when the
    /// supplied facts do not decide it.
    fn evaluate(self, ext: &ExtensionDescriptor) -> Option<bool> {
        match self {
            Condition::None => Some(true),
            Condition::AEqualsG => ext.a_equals_g,
            Condition::BetweenGAndGhat => ext.inside_ghat,
            Condition::TwoGroupOrIndexLe2 => {
                match (ext.quotient_by_ghat_two_group, ext.ghat_index_le_2) {
                    (Some(true), _) | (_, Some(true)) => Some(true),
                    (Some(false), Some(false)) => Some(false),
                    _ => None,
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub block: usize,
    pub family: Family,
    pub parameter_constraints: String,
    pub condition: Condition,
}

impl CatalogEntry {
    /// Three-valued check of the row's parameter constraints. The block
    /// 2 row for untwisted type D with `l = 2` carries a predicate this
    /// crate treats as unevaluable, so that case is always `None`.
    fn constraints_hold(&self, p: &Params) -> Option<bool> {
        let t_even_if_r3 = || match p.r {
            Some(r) if r != 3 => Some(true),
            Some(_) => p.t.map(|t| t % 2 == 0),
            None => match p.t {
                Some(t) if t % 2 == 0 => Some(true),
                _ => None,
            },
        };
        match (self.block, self.family) {
            (1, Family::Bl) | (1, Family::Cl) => t_even_if_r3(),
            (1, Family::E7) => p.r.map(|r| r != 3),
            (1, Family::E8) => p.r.map(|r| r != 3 && r != 5),
            (2, Family::D2l) => match p.l {
                Some(2) | None => None,
                Some(_) => t_even_if_r3(),
            },
            (2, _) => t_even_if_r3(),
            (3, Family::Bl) | (3, Family::Cl) | (3, Family::D2l) | (3, Family::ThreeD4)
            | (3, Family::TwoD2l) | (3, Family::E7) => p.r.map(|r| r == 3),
            (3, Family::E8) => {
                let bad: u64 = if self.parameter_constraints.contains('5') { 5 } else { 3 };
                p.r.map(|r| r == bad)
            }
            (4, _) => p.l.map(|l| l > 1),
            _ => Some(true),
        }
    }

    pub fn citation(&self) -> String {
        let cond = match self.condition {
            Condition::None => "none",
            Condition::TwoGroupOrIndexLe2 => "A/(A meet Ghat) a 2-group or [Ghat : A meet Ghat] <= 2",
            Condition::AEqualsG => "A = G",
            Condition::BetweenGAndGhat => "G <= A <= Ghat",
        };
        if self.parameter_constraints.is_empty() {
            format!("block {}, {}: {}", self.block, self.family.as_str(), cond)
        } else {
            format!(
                "block {}, {} ({}): {}",
                self.block,
                self.family.as_str(),
                self.parameter_constraints,
                cond
            )
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Conjugate,
    NotGuaranteed,
    /// The table neither confirms nor refutes with the facts given; the
    /// string is the undecided predicate or condition.
    Conditional(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Conjugate => write!(f, "conjugate"),
            Verdict::NotGuaranteed => write!(f, "not guaranteed"),
            Verdict::Conditional(p) => write!(f, "conditional: {p}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Lookup {
    pub verdict: Verdict,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownFamily(pub String);

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown socle family {:?}", self.0)
    }
}

impl std::error::Error for UnknownFamily {}

const ROWS: &str = include_str!("../data/catalog_rows.txt");

/// All table rows, in file order.
pub fn catalog() -> Vec<CatalogEntry> {
    ROWS.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut fields = l.split('\t');
            let block: usize = fields
                .next()
                .and_then(|w| w.trim().parse().ok())
                .expect("block number");
            let family = Family::parse(fields.next().expect("family field"))
                .expect("known family in fixture");
            let parameter_constraints = fields.next().expect("constraint field").trim().to_string();
            let condition =
                Condition::parse(fields.next().expect("condition field")).expect("known condition");
            CatalogEntry {
                block,
                family,
                parameter_constraints,
                condition,
            }
        })
        .collect()
}

/// The table's answer for an almost simple group with the given socle:
/// conjugate whenever some applicable row's condition holds. Rows whose
/// applicability or condition cannot be decided from the supplied facts
/// yield a conditional verdict instead of a flat no.
pub fn catalog_lookup(
    family: Family,
    params: &Params,
    ext: &ExtensionDescriptor,
) -> Result<Lookup, UnknownFamily> {
    let rows: Vec<CatalogEntry> = catalog()
        .into_iter()
        .filter(|e| e.family == family)
        .collect();
    if rows.is_empty() {
        return Err(UnknownFamily(family.as_str().to_string()));
    }
    let mut undecided: Option<&CatalogEntry> = None;
    let mut refuted: Option<&CatalogEntry> = None;
    for row in &rows {
        match (row.constraints_hold(params), row.condition.evaluate(ext)) {
            (Some(true), Some(true)) => {
                return Ok(Lookup {
                    verdict: Verdict::Conjugate,
                    citation: row.citation(),
                });
            }
            (Some(true), Some(false)) | (Some(false), _) => {
                refuted.get_or_insert(row);
            }
            _ => {
                undecided.get_or_insert(row);
            }
        }
    }
    if let Some(row) = undecided {
        let what = if row.parameter_constraints.is_empty() {
            row.citation()
        } else {
            format!("{} with undecided constraint", row.citation())
        };
        return Ok(Lookup {
            verdict: Verdict::Conditional(what),
            citation: row.citation(),
        });
    }
    let row = refuted.expect("at least one row per family");
    Ok(Lookup {
        verdict: Verdict::NotGuaranteed,
        citation: row.citation(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_has_every_row() {
        let rows = catalog();
        assert_eq!(rows.len(), 29);
        let block_sizes: Vec<usize> = (1..=4)
            .map(|b| rows.iter().filter(|r| r.block == b).count())
            .collect();
        assert_eq!(block_sizes, vec![11, 3, 13, 2]);
        // Block 1: unconditional families.
        for f in [
            Family::Alternating,
            Family::Sporadic,
            Family::A1,
            Family::TwoB2,
            Family::G2,
            Family::F4,
            Family::TwoF4,
        ] {
            assert!(rows
                .iter()
                .any(|r| r.block == 1 && r.family == f && r.condition == Condition::None));
        }
        // Every family named somewhere.
        for f in [
            Family::Bl,
            Family::Cl,
            Family::E7,
            Family::E8,
            Family::D2l,
            Family::ThreeD4,
            Family::TwoD2l,
            Family::D2lPlus1,
            Family::TwoD2lPlus1,
            Family::TwoG2,
            Family::E6,
            Family::TwoE6,
            Family::Al,
            Family::TwoAl,
        ] {
            assert!(rows.iter().any(|r| r.family == f), "{}", f.as_str());
        }
        // The unevaluable field predicate is stored, never evaluated.
        let d2l = rows
            .iter()
            .find(|r| r.block == 2 && r.family == Family::D2l)
            .unwrap();
        assert!(d2l.parameter_constraints.contains("Field(G)"));
    }

    #[test]
    fn alternating_is_unconditional() {
        for ext in [
            ExtensionDescriptor::default(),
            ExtensionDescriptor::socle_only(),
            ExtensionDescriptor {
                a_equals_g: Some(false),
                ..Default::default()
            },
        ] {
            let l = catalog_lookup(Family::Alternating, &Params::default(), &ext).unwrap();
            assert_eq!(l.verdict, Verdict::Conjugate);
        }
    }

    #[test]
    fn e6_depends_on_a_equals_g() {
        let not_socle = ExtensionDescriptor {
            a_equals_g: Some(false),
            ..Default::default()
        };
        let l = catalog_lookup(Family::E6, &Params::default(), &not_socle).unwrap();
        assert_eq!(l.verdict, Verdict::NotGuaranteed);
        let l = catalog_lookup(
            Family::E6,
            &Params::default(),
            &ExtensionDescriptor::socle_only(),
        )
        .unwrap();
        assert_eq!(l.verdict, Verdict::Conjugate);
        let l = catalog_lookup(
            Family::E6,
            &Params::default(),
            &ExtensionDescriptor::default(),
        )
        .unwrap();
        assert!(matches!(l.verdict, Verdict::Conditional(_)));
    }

    #[test]
    fn linear_types_need_inner_diagonal_extensions() {
        let p = Params {
            l: Some(3),
            r: Some(2),
            t: Some(1),
        };
        let inside = ExtensionDescriptor {
            inside_ghat: Some(true),
            ..Default::default()
        };
        let outside = ExtensionDescriptor {
            inside_ghat: Some(false),
            a_equals_g: Some(false),
            ..Default::default()
        };
        for f in [Family::Al, Family::TwoAl] {
            let l = catalog_lookup(f, &p, &inside).unwrap();
            assert_eq!(l.verdict, Verdict::Conjugate, "{}", f.as_str());
            let l = catalog_lookup(f, &p, &outside).unwrap();
            assert_eq!(l.verdict, Verdict::NotGuaranteed);
        }
        // Rank 1 is the A1 row, not this block.
        let rank1 = Params {
            l: Some(1),
            ..Default::default()
        };
        let l = catalog_lookup(Family::Al, &rank1, &outside).unwrap();
        assert_eq!(l.verdict, Verdict::NotGuaranteed);
        let l = catalog_lookup(Family::A1, &rank1, &outside).unwrap();
        assert_eq!(l.verdict, Verdict::Conjugate);
    }

    #[test]
    fn characteristic_three_moves_b_and_c_to_the_socle_row() {
        let odd3 = Params {
            l: Some(4),
            r: Some(3),
            t: Some(1),
        };
        let even3 = Params {
            l: Some(4),
            r: Some(3),
            t: Some(2),
        };
        let generic = Params {
            l: Some(4),
            r: Some(7),
            t: Some(1),
        };
        let not_socle = ExtensionDescriptor {
            a_equals_g: Some(false),
            ..Default::default()
        };
        for f in [Family::Bl, Family::Cl] {
            assert_eq!(
                catalog_lookup(f, &even3, &not_socle).unwrap().verdict,
                Verdict::Conjugate
            );
            assert_eq!(
                catalog_lookup(f, &generic, &not_socle).unwrap().verdict,
                Verdict::Conjugate
            );
            assert_eq!(
                catalog_lookup(f, &odd3, &not_socle).unwrap().verdict,
                Verdict::NotGuaranteed
            );
            assert_eq!(
                catalog_lookup(f, &odd3, &ExtensionDescriptor::socle_only())
                    .unwrap()
                    .verdict,
                Verdict::Conjugate
            );
        }
    }

    #[test]
    fn even_type_d_uses_the_two_group_condition() {
        let p = Params {
            l: Some(3),
            r: Some(5),
            t: Some(1),
        };
        let two_group = ExtensionDescriptor {
            quotient_by_ghat_two_group: Some(true),
            ..Default::default()
        };
        let neither = ExtensionDescriptor {
            a_equals_g: Some(false),
            quotient_by_ghat_two_group: Some(false),
            ghat_index_le_2: Some(false),
            ..Default::default()
        };
        for f in [Family::D2l, Family::ThreeD4, Family::TwoD2l] {
            assert_eq!(
                catalog_lookup(f, &p, &two_group).unwrap().verdict,
                Verdict::Conjugate,
                "{}",
                f.as_str()
            );
            assert_eq!(
                catalog_lookup(f, &p, &neither).unwrap().verdict,
                Verdict::NotGuaranteed
            );
        }
        // Rank 2 of untwisted type D carries the unevaluable predicate.
        let d4 = Params {
            l: Some(2),
            r: Some(5),
            t: Some(1),
        };
        let l = catalog_lookup(Family::D2l, &d4, &two_group).unwrap();
        assert!(matches!(l.verdict, Verdict::Conditional(_)));
        // But over characteristic 3 the socle row still settles it.
        let d4_char3 = Params {
            l: Some(2),
            r: Some(3),
            t: Some(1),
        };
        let l = catalog_lookup(Family::D2l, &d4_char3, &ExtensionDescriptor::socle_only()).unwrap();
        assert_eq!(l.verdict, Verdict::Conjugate);
    }

    #[test]
    fn e8_in_bad_characteristic() {
        let not_socle = ExtensionDescriptor {
            a_equals_g: Some(false),
            ..Default::default()
        };
        for r in [3, 5] {
            let p = Params {
                l: None,
                r: Some(r),
                t: Some(1),
            };
            assert_eq!(
                catalog_lookup(Family::E8, &p, &not_socle).unwrap().verdict,
                Verdict::NotGuaranteed
            );
            assert_eq!(
                catalog_lookup(Family::E8, &p, &ExtensionDescriptor::socle_only())
                    .unwrap()
                    .verdict,
                Verdict::Conjugate
            );
        }
        let good = Params {
            l: None,
            r: Some(7),
            t: Some(1),
        };
        assert_eq!(
            catalog_lookup(Family::E8, &good, &not_socle).unwrap().verdict,
            Verdict::Conjugate
        );
    }

    #[test]
    fn lookup_is_total_over_all_families() {
        let families = [
            Family::Alternating,
            Family::Sporadic,
            Family::A1,
            Family::Bl,
            Family::Cl,
            Family::TwoB2,
            Family::G2,
            Family::F4,
            Family::TwoF4,
            Family::E7,
            Family::E8,
            Family::D2l,
            Family::ThreeD4,
            Family::TwoD2l,
            Family::D2lPlus1,
            Family::TwoD2lPlus1,
            Family::TwoG2,
            Family::E6,
            Family::TwoE6,
            Family::Al,
            Family::TwoAl,
        ];
        for f in families {
            assert!(catalog_lookup(f, &Params::default(), &ExtensionDescriptor::default()).is_ok());
            assert_eq!(Family::parse(f.as_str()), Some(f));
        }
        assert!(Family::parse("Z9").is_none());
    }
}
