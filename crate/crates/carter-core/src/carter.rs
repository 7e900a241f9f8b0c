//! Carter subgroups (nilpotent and self-normalizing), the conjugacy
//! condition on induced automorphism groups of composition factors, and
//! the consistency check tying the two together.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::group::Group;
use crate::lattice::{all_subgroup_classes, conjugating_element};
use crate::normal::{composition_series, NORMAL_SCAN_LIMIT};
use crate::ops::{
    centralizer_in, element_order_stats, intersection, is_nilpotent, normalizer_in,
    prime_divisors, sylow_subgroup,
};
use crate::perm::Perm;
use crate::sections::{group_with_induced, quotient, section_normalizer};
use crate::subgroup::{Subgroup, SubgroupClass};

/// Search limits; every report is relative to the limits in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order for exhaustive subgroup enumeration.
    pub exhaustive_subgroups: u64,
    /// Largest group order for the pruned Carter search.
    pub pruned_carter: u64,
    /// Largest degree for the element-action realization of a factor.
    pub induced_degree: u64,
    /// Largest group order for overgroup enumeration.
    pub overgroups: u64,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            exhaustive_subgroups: 400,
            pruned_carter: 2000,
            induced_degree: 2500,
            overgroups: 400,
        }
    }
}

/// Carter conjugacy classes of one group.
#[derive(Clone, Debug)]
pub struct CarterReport {
    pub group_id: String,
    pub classes: Vec<SubgroupClass>,
    pub total_count: u64,
    /// True when at most one class exists; a group without Carter
    /// subgroups counts as having conjugate Carter subgroups.
    pub conjugate: bool,
}

/// One (factor, nilpotent class) pair of the condition check.
#[derive(Clone, Debug)]
pub struct StarEntry {
    pub factor_label: String,
    pub nilpotent_rep: Subgroup,
    pub induced_group_order: u64,
    pub carter_conjugate: bool,
}

#[derive(Clone, Debug)]
pub struct StarReport {
    pub group_id: String,
    pub entries: Vec<StarEntry>,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub star: bool,
    pub carter_conjugate: bool,
    pub verdict: &'static str,
}

pub(crate) fn group_id_of(g: &Group) -> String {
    format!("group(order={},degree={})", g.order(), g.degree())
}

/// Nilpotent and self-normalizing in `g`.
pub fn is_carter(g: &Group, h: &Subgroup) -> Result<bool, Error> {
    if !g.contains_group(h.group()) {
        return Err(Error::NotASubgroup);
    }
    Ok(is_nilpotent(h.group()) && normalizer_in(g, h.group()).order() == h.order())
}

/// Conjugacy-class list with a cheap-signature prefilter before the
/// transporter scan.
struct ClassList {
    ambient: Group,
    reps: Vec<Group>,
    sigs: Vec<(u64, Vec<(u64, u64)>)>,
}

impl ClassList {
    fn new(ambient: &Group) -> ClassList {
        ClassList {
            ambient: ambient.clone(),
            reps: Vec::new(),
            sigs: Vec::new(),
        }
    }

    fn signature(h: &Group) -> (u64, Vec<(u64, u64)>) {
        (
            h.order(),
            element_order_stats(h).into_iter().collect(),
        )
    }

    /// Inserts `h` unless a conjugate is already present.
    fn try_insert(&mut self, h: Group) -> bool {
        let sig = Self::signature(&h);
        for (rep, s) in self.reps.iter().zip(&self.sigs) {
            if *s == sig && conjugating_element(&self.ambient, rep, &h).is_some() {
                return false;
            }
        }
        self.reps.push(h);
        self.sigs.push(sig);
        true
    }
}

/// All p-subgroups of `ambient` up to `ambient`-conjugacy, including the
/// trivial one, by extending each class inside its normalizer.
fn p_subgroup_classes(ambient: &Group, p: u64) -> Vec<Group> {
    let mut classes = ClassList::new(ambient);
    classes.try_insert(Group::trivial(ambient.degree()));
    let mut frontier = alloc::vec![Group::trivial(ambient.degree())];
    while let Some(h) = frontier.pop() {
        let n = normalizer_in(ambient, &h);
        for y in n.elements() {
            if h.contains(&y) {
                continue;
            }
            // p-element whose p-th power falls into h: extends h by index p.
            let mut m = y.order();
            while m % p == 0 {
                m /= p;
            }
            if m != 1 || !h.contains(&y.pow(p)) {
                continue;
            }
            let k = h.join(core::slice::from_ref(&y)).expect("same degree");
            if classes.try_insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    classes.reps
}

/// All nilpotent subgroups up to conjugacy. Below the exhaustive cap this
/// filters the full class list; above it, nilpotent subgroups are built
/// as products of pairwise-centralizing Sylow pieces, one prime at a
/// time.
pub fn nilpotent_subgroup_classes(g: &Group, limits: &Limits) -> Result<Vec<SubgroupClass>, Error> {
    if g.order() <= limits.exhaustive_subgroups {
        let classes = all_subgroup_classes(g, limits.exhaustive_subgroups)?;
        return Ok(classes
            .into_iter()
            .filter(|c| is_nilpotent(c.representative.group()))
            .collect());
    }
    if g.order() > NORMAL_SCAN_LIMIT {
        return Err(Error::GroupTooLarge {
            order: g.order(),
            limit: NORMAL_SCAN_LIMIT,
        });
    }
    // A nilpotent subgroup is the direct product of its Sylow subgroups,
    // so it is a p-part living in the centralizer of the rest.
    let mut combos = ClassList::new(g);
    combos.try_insert(Group::trivial(g.degree()));
    for p in prime_divisors(g.order()) {
        let previous = combos.reps.clone();
        for h in &previous {
            let c = centralizer_in(g, h.gens());
            for piece in p_subgroup_classes(&c, p) {
                if piece.is_trivial() {
                    continue;
                }
                let mut gens = h.gens().to_vec();
                gens.extend_from_slice(piece.gens());
                let k = Group::generate(g.degree(), &gens)?;
                debug_assert_eq!(k.order(), h.order() * piece.order());
                combos.try_insert(k);
            }
        }
    }
    let mut out: Vec<SubgroupClass> = combos
        .reps
        .into_iter()
        .map(|h| {
            let class_size = g.order() / normalizer_in(g, &h).order();
            SubgroupClass {
                representative: Subgroup::from_group(g, h).expect("inside the group"),
                class_size,
            }
        })
        .collect();
    out.sort_by(|a, b| a.representative.sort_key().cmp(&b.representative.sort_key()));
    Ok(out)
}

/// Self-normalizing fixed points of the normalizer chains started at the
/// Sylow subgroups; Carter candidates are nilpotent fixed points plus an
/// exhaustive sweep inside small non-nilpotent fixed points.
fn pruned_carter_candidates(g: &Group, limits: &Limits) -> Result<Vec<Group>, Error> {
    let mut found: Vec<Group> = Vec::new();
    for p in prime_divisors(g.order()) {
        let mut h = sylow_subgroup(g, p).group().clone();
        loop {
            let n = normalizer_in(g, &h);
            if n.order() == h.order() {
                break;
            }
            h = n;
        }
        if is_nilpotent(&h) {
            found.push(h);
        } else if h.order() <= limits.exhaustive_subgroups {
            for class in all_subgroup_classes(&h, limits.exhaustive_subgroups)? {
                let c = class.representative.group();
                if is_nilpotent(c) && normalizer_in(g, c).order() == c.order() {
                    found.push(c.clone());
                }
            }
        }
    }
    Ok(found)
}

/// All Carter conjugacy classes: exhaustive below the subgroup cap, the
/// pruned Sylow-normalizer search up to the pruned cap.
pub fn carter_subgroups(g: &Group, limits: &Limits) -> Result<CarterReport, Error> {
    let candidates: Vec<Group> = if g.order() <= limits.exhaustive_subgroups {
        all_subgroup_classes(g, limits.exhaustive_subgroups)?
            .into_iter()
            .map(|c| c.representative.group().clone())
            .filter(|h| is_nilpotent(h) && normalizer_in(g, h).order() == h.order())
            .collect()
    } else if g.order() <= limits.pruned_carter {
        pruned_carter_candidates(g, limits)?
    } else {
        return Err(Error::GroupTooLarge {
            order: g.order(),
            limit: limits.pruned_carter,
        });
    };
    let mut classes = ClassList::new(g);
    let mut kept = Vec::new();
    for h in candidates {
        if classes.try_insert(h.clone()) {
            kept.push(h);
        }
    }
    let mut classes: Vec<SubgroupClass> = kept
        .into_iter()
        .map(|h| {
            // Self-normalizing, so the class size is the index.
            let class_size = g.order() / h.order();
            SubgroupClass {
                representative: Subgroup::from_group(g, h).expect("inside the group"),
                class_size,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.representative.sort_key().cmp(&b.representative.sort_key()));
    let total_count = classes.iter().map(|c| c.class_size).sum();
    Ok(CarterReport {
        group_id: group_id_of(g),
        conjugate: classes.len() <= 1,
        total_count,
        classes,
    })
}

/// `⟨Aut_N(S), S⟩` for the composition factor `S = a/b` and a nilpotent
/// subgroup `n` of `g`, on the non-identity elements of the realized `S`.
fn induced_group_for_factor(
    g: &Group,
    a: &Subgroup,
    b: &Subgroup,
    n: &Group,
) -> Result<Group, Error> {
    if b.order() == 1 {
        let n_handle = Subgroup::from_group(g, n.clone())?;
        return group_with_induced(&n_handle, a);
    }
    // Two steps: pass to M/B for M = N_G(A) ∩ N_G(B), where the factor
    // becomes a genuine centerless subgroup, then act on its elements.
    let m = section_normalizer(&Subgroup::whole(g), a, b)?;
    let q = quotient(m.group(), b)?;
    let image_parent = q.image_group().clone();
    let s_img = q.image_of(a.group())?;
    let n_in_m = intersection(n, m.group());
    let n_img = q.image_of(&n_in_m)?;
    let s_handle = Subgroup::from_group(&image_parent, s_img)?;
    let n_handle = Subgroup::from_group(&image_parent, n_img)?;
    group_with_induced(&n_handle, &s_handle)
}

/// For every non-abelian composition factor `S` and every nilpotent
/// subgroup `N` up to conjugacy, whether `⟨Aut_N(S), S⟩` has conjugate
/// Carter subgroups.
pub fn check_star(g: &Group, limits: &Limits) -> Result<StarReport, Error> {
    let series = composition_series(g)?;
    let mut entries = Vec::new();
    let has_nonabelian = series.factors.iter().any(|f| !f.abelian);
    if has_nonabelian {
        let nilpotents = nilpotent_subgroup_classes(g, limits)?;
        // Carter verdicts keyed by the element set of the induced group.
        let mut memo: BTreeMap<Vec<Perm>, (u64, bool)> = BTreeMap::new();
        for (i, f) in series.factors.iter().enumerate() {
            if f.abelian {
                continue;
            }
            if f.order - 1 > limits.induced_degree {
                return Err(Error::GroupTooLarge {
                    order: f.order,
                    limit: limits.induced_degree,
                });
            }
            let a = &series.terms[i];
            let b = &series.terms[i + 1];
            for n in &nilpotents {
                let induced = induced_group_for_factor(g, a, b, n.representative.group())?;
                let key = induced.sorted_elements();
                let (order, conjugate) = match memo.get(&key) {
                    Some(&v) => v,
                    None => {
                        let report = carter_subgroups(&induced, limits)?;
                        let v = (induced.order(), report.conjugate);
                        memo.insert(key, v);
                        v
                    }
                };
                entries.push(StarEntry {
                    factor_label: f.label.clone(),
                    nilpotent_rep: n.representative.clone(),
                    induced_group_order: order,
                    carter_conjugate: conjugate,
                });
            }
        }
    }
    Ok(StarReport {
        group_id: group_id_of(g),
        satisfied: entries.iter().all(|e| e.carter_conjugate),
        entries,
    })
}

/// Condition check and Carter conjugacy side by side; the theorem says a
/// "COUNTEREXAMPLE" verdict can only signal an implementation bug.
pub fn check_theorem(g: &Group, limits: &Limits) -> Result<TheoremVerdict, Error> {
    let star = check_star(g, limits)?.satisfied;
    let carter_conjugate = carter_subgroups(g, limits)?.conjugate;
    Ok(TheoremVerdict {
        star,
        carter_conjugate,
        verdict: if star && !carter_conjugate {
            "COUNTEREXAMPLE"
        } else {
            "consistent"
        },
    })
}
