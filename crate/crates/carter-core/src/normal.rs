//! Normal structure: minimal normal subgroups, the normal subgroup
//! lattice, composition series and direct-factor decomposition of a
//! minimal normal subgroup.
//!
//! Normal subgroups are found as joins of normal closures of single
//! conjugacy classes; every normal subgroup is generated by the classes
//! it contains, so the joins exhaust the lattice.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::group::Group;
use crate::ops::{conjugacy_classes, is_normal_in, normal_closure};
use crate::sections::quotient;
use crate::subgroup::Subgroup;

/// Order bound for exhaustive normal-subgroup search.
pub const NORMAL_SCAN_LIMIT: u64 = 10_000;

fn check_scan_limit(g: &Group) -> Result<(), Error> {
    if g.order() > NORMAL_SCAN_LIMIT {
        return Err(Error::GroupTooLarge {
            order: g.order(),
            limit: NORMAL_SCAN_LIMIT,
        });
    }
    Ok(())
}

/// Normal closures of the nontrivial conjugacy classes, deduplicated.
fn class_closures(g: &Group) -> Vec<Group> {
    let mut closures: Vec<Group> = Vec::new();
    for class in conjugacy_classes(g) {
        if class[0].is_identity() {
            continue;
        }
        let c = normal_closure(g, core::slice::from_ref(&class[0]));
        if !closures.iter().any(|k| k.equals(&c)) {
            closures.push(c);
        }
    }
    closures
}

/// All minimal normal subgroups: the minimal elements among normal
/// closures of single conjugacy classes.
pub fn minimal_normal_subgroups(g: &Group) -> Result<Vec<Subgroup>, Error> {
    check_scan_limit(g)?;
    let closures = class_closures(g);
    let mut minimal: Vec<Group> = Vec::new();
    for c in &closures {
        if closures
            .iter()
            .all(|d| d.order() >= c.order() || !c.contains_group(d))
        {
            minimal.push(c.clone());
        }
    }
    let mut out: Vec<Subgroup> = minimal
        .into_iter()
        .map(|m| Subgroup::from_group(g, m).expect("closures stay inside the group"))
        .collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(out)
}

/// Every normal subgroup, as joins of single-class closures.
pub fn normal_subgroups(g: &Group) -> Result<Vec<Subgroup>, Error> {
    check_scan_limit(g)?;
    let closures = class_closures(g);
    let mut found: Vec<Group> = alloc::vec![Group::trivial(g.degree())];
    let mut next = 0;
    while next < found.len() {
        let n = found[next].clone();
        next += 1;
        for c in &closures {
            // The join order is a multiple of lcm(|N|, |C|).
            if g.order() % crate::perm::lcm(n.order(), c.order()) != 0 {
                continue;
            }
            let j = n.join(c.gens()).expect("same degree");
            if !found.iter().any(|k| k.equals(&j)) {
                found.push(j);
            }
        }
    }
    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|m| Subgroup::from_group(g, m).expect("joins stay inside the group"))
        .collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(out)
}

/// Whether `g` is simple: nontrivial, and every nonidentity class
/// generates the whole group as a normal subgroup.
pub fn is_simple(g: &Group) -> bool {
    !g.is_trivial() && class_closures(g).iter().all(|c| c.order() == g.order())
}

/// One simple factor in a composition series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorDescriptor {
    pub order: u64,
    pub abelian: bool,
    pub label: String,
}

/// A descending chain `G = terms[0] ▷ … ▷ terms[m] = 1` with simple
/// factors.
#[derive(Clone, Debug)]
pub struct CompositionSeries {
    pub terms: Vec<Subgroup>,
    pub factors: Vec<FactorDescriptor>,
}

/// Name of the unique simple group of this order, for orders below the
/// normal-scan limit. The first ambiguous order is 20160.
fn simple_label(order: u64) -> String {
    use alloc::format;
    if crate::ops::prime_factorization(order).len() == 1
        && crate::ops::prime_factorization(order)[0].1 == 1
    {
        return format!("C_{}", order);
    }
    let name = match order {
        60 => "Alt_5",
        168 => "PSL(2,7)",
        360 => "Alt_6",
        504 => "PSL(2,8)",
        660 => "PSL(2,11)",
        1092 => "PSL(2,13)",
        2448 => "PSL(2,17)",
        2520 => "Alt_7",
        3420 => "PSL(2,19)",
        4080 => "PSL(2,16)",
        5616 => "PSL(3,3)",
        6048 => "PSU(3,3)",
        6072 => "PSL(2,23)",
        7800 => "PSL(2,25)",
        7920 => "M_11",
        9828 => "PSL(2,27)",
        _ => return format!("unidentified-simple-{}", order),
    };
    String::from(name)
}

fn descriptor(order: u64) -> FactorDescriptor {
    let abelian = {
        let f = crate::ops::prime_factorization(order);
        f.len() == 1 && f[0].1 == 1
    };
    FactorDescriptor {
        order,
        abelian,
        label: simple_label(order),
    }
}

/// Largest proper normal subgroup, ties broken by element list.
fn maximal_proper_normal(g: &Group) -> Result<Group, Error> {
    let normals = normal_subgroups(g)?;
    let best = normals
        .iter()
        .filter(|n| n.order() < g.order())
        .max_by(|a, b| a.sort_key().cmp(&b.sort_key()))
        .expect("a nontrivial group has a proper normal subgroup");
    Ok(best.group().clone())
}

/// A composition series by repeatedly descending to a largest proper
/// normal subgroup.
pub fn composition_series(g: &Group) -> Result<CompositionSeries, Error> {
    check_scan_limit(g)?;
    let mut terms = alloc::vec![Subgroup::whole(g)];
    let mut factors = Vec::new();
    let mut current = g.clone();
    while !current.is_trivial() {
        let next = maximal_proper_normal(&current)?;
        let f = descriptor(current.order() / next.order());
        debug_assert!({
            // Maximal normal subgroup, so the factor must be simple.
            let q = quotient(
                &current,
                &Subgroup::from_group(&current, next.clone()).expect("normal subgroup"),
            )
            .expect("normal subgroup");
            is_simple(q.image_group()) || q.image_group().is_trivial()
        });
        factors.push(f);
        terms.push(Subgroup::from_group(g, next.clone()).expect("series stays inside g"));
        current = next;
    }
    Ok(CompositionSeries { terms, factors })
}

/// A second composition series, refined through a minimal normal
/// subgroup and pulled back from the quotient. Used to cross-check the
/// factor multiset.
pub fn composition_series_refined(g: &Group) -> Result<CompositionSeries, Error> {
    check_scan_limit(g)?;
    if g.is_trivial() {
        return Ok(CompositionSeries {
            terms: alloc::vec![Subgroup::whole(g)],
            factors: Vec::new(),
        });
    }
    let minimals = minimal_normal_subgroups(g)?;
    let m = minimals.last().expect("nontrivial group").clone();
    let mut terms = alloc::vec![Subgroup::whole(g)];
    let mut factors = Vec::new();
    if m.order() < g.order() {
        let q = quotient(g, &m)?;
        let upper = composition_series(q.image_group())?;
        for (term, f) in upper.terms[1..].iter().zip(&upper.factors) {
            let pulled = q.preimage_of_subgroup(term.group())?;
            factors.push(f.clone());
            terms.push(Subgroup::from_group(g, pulled).expect("preimages stay inside g"));
        }
    }
    let lower = composition_series(m.group())?;
    for (term, f) in lower.terms[1..].iter().zip(&lower.factors) {
        factors.push(f.clone());
        terms.push(Subgroup::from_group(g, term.group().clone()).expect("inside g"));
    }
    Ok(CompositionSeries { terms, factors })
}

/// The simple direct factors of a non-abelian minimal normal subgroup:
/// they are exactly its own minimal normal subgroups.
pub fn decompose_direct_factors(b: &Subgroup) -> Result<Vec<Subgroup>, Error> {
    if b.group().is_abelian() {
        return Err(Error::AbelianFactor);
    }
    let parent = b.parent();
    if !parent.contains_group(b.group()) || !is_normal_in(parent, b.group()) {
        return Err(Error::NotMinimalNormal);
    }
    for class in conjugacy_classes(b.group()) {
        if class[0].is_identity() {
            continue;
        }
        if normal_closure(parent, core::slice::from_ref(&class[0])).order() < b.order() {
            return Err(Error::NotMinimalNormal);
        }
    }
    let factors = minimal_normal_subgroups(b.group())?;
    let product_order: u64 = factors.iter().map(|t| t.order()).product();
    debug_assert_eq!(product_order, b.order());
    let mut out = Vec::new();
    for t in factors {
        debug_assert!(is_simple(t.group()) && !t.group().is_abelian());
        out.push(Subgroup::from_group(parent, t.group().clone())?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use alloc::collections::BTreeMap;
    use alloc::vec;
    use alloc::vec::Vec;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Perm {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    fn sym(n: usize) -> Group {
        let mut gens = vec![cyc(n, &[&[0, 1]])];
        if n > 2 {
            let big: Vec<u32> = (0..n as u32).collect();
            gens.push(Perm::from_cycles(n, &[big]).unwrap());
        }
        Group::generate(n, &gens).unwrap()
    }

    fn alt5() -> Group {
        Group::generate(5, &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]).unwrap()
    }

    #[test]
    fn sym4_has_unique_minimal_normal_klein_four() {
        let g = sym(4);
        let mins = minimal_normal_subgroups(&g).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
        assert!(mins[0].contains(&cyc(4, &[&[0, 1], &[2, 3]])));
    }

    #[test]
    fn product_of_two_alt5_copies_has_two_minimal_normals() {
        let b = Group::direct_product(&alt5(), &alt5());
        let mins = minimal_normal_subgroups(&b).unwrap();
        assert_eq!(mins.len(), 2);
        assert!(mins.iter().all(|m| m.order() == 60));
    }

    #[test]
    fn simple_group_is_its_own_minimal_normal() {
        let g = alt5();
        let mins = minimal_normal_subgroups(&g).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 60);
        assert!(is_simple(&g));
        assert!(!is_simple(&sym(4)));
        assert!(!is_simple(&Group::trivial(3)));
    }

    #[test]
    fn normal_lattice_of_sym4() {
        let g = sym(4);
        let orders: Vec<u64> = normal_subgroups(&g).unwrap().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }

    #[test]
    fn composition_series_of_sym4() {
        let s = composition_series(&sym(4)).unwrap();
        let labels: Vec<&str> = s.factors.iter().map(|f| f.label.as_str()).collect();
        assert_eq!(labels, vec!["C_2", "C_3", "C_2", "C_2"]);
        let orders: Vec<u64> = s.terms.iter().map(|t| t.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 2, 1]);
        let product: u64 = s.factors.iter().map(|f| f.order).product();
        assert_eq!(product, 24);
        for w in s.terms.windows(2) {
            assert!(is_normal_in(w[0].group(), w[1].group()));
        }
    }

    #[test]
    fn composition_series_of_alt5_is_single_nonabelian_factor() {
        let s = composition_series(&alt5()).unwrap();
        assert_eq!(s.factors.len(), 1);
        assert_eq!(s.factors[0].label, "Alt_5");
        assert!(!s.factors[0].abelian);
    }

    #[test]
    fn composition_series_of_trivial_group_is_empty() {
        let s = composition_series(&Group::trivial(2)).unwrap();
        assert!(s.factors.is_empty());
        assert_eq!(s.terms.len(), 1);
    }

    #[test]
    fn jordan_hoelder_factor_multiset_is_series_independent() {
        let groups = vec![
            sym(4),
            sym(5),
            Group::direct_product(&alt5(), &sym(3)),
            Group::generate(4, &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]).unwrap(),
        ];
        for g in groups {
            let a = composition_series(&g).unwrap();
            let b = composition_series_refined(&g).unwrap();
            let multiset = |s: &CompositionSeries| {
                let mut m: BTreeMap<u64, u64> = BTreeMap::new();
                for f in &s.factors {
                    *m.entry(f.order).or_insert(0) += 1;
                }
                m
            };
            assert_eq!(multiset(&a), multiset(&b));
            let product: u64 = b.factors.iter().map(|f| f.order).product();
            assert_eq!(product, g.order());
            for w in b.terms.windows(2) {
                assert!(is_normal_in(w[0].group(), w[1].group()));
            }
        }
    }

    #[test]
    fn direct_factor_decomposition() {
        let g = sym(5);
        let a5 = Subgroup::new(&g, &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]).unwrap();
        let factors = decompose_direct_factors(&a5).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].order(), 60);

        let w = Group::wreath_cyclic(&alt5(), 2);
        let b = minimal_normal_subgroups(&w).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].order(), 3600);
        let factors = decompose_direct_factors(&b[0]).unwrap();
        assert_eq!(factors.len(), 2);
        for (i, t) in factors.iter().enumerate() {
            assert_eq!(t.order(), 60);
            for u in &factors[i + 1..] {
                for x in t.gens() {
                    for y in u.gens() {
                        assert!(x.commutes_with(y));
                    }
                }
                assert_eq!(crate::ops::intersection(t.group(), u.group()).order(), 1);
            }
        }
    }

    #[test]
    fn decompose_rejects_bad_inputs() {
        let g = sym(4);
        let v4 = Subgroup::new(&g, &[cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])])
            .unwrap();
        assert_eq!(decompose_direct_factors(&v4).unwrap_err(), Error::AbelianFactor);
        let g5 = sym(5);
        let s4_in_s5 = Subgroup::new(&g5, &[cyc(5, &[&[0, 1]]), cyc(5, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(
            decompose_direct_factors(&s4_in_s5).unwrap_err(),
            Error::NotMinimalNormal
        );
    }
}
