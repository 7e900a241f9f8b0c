//! Subgroup lattice up to conjugacy.
//!
//! Enumeration uses cyclic extensions: every non-perfect subgroup has a
//! normal subgroup of prime index, so it arises from a smaller subgroup by
//! adjoining one coset element of prime order modulo the smaller one.
//! Perfect subgroups are seeded separately: they all live in the perfect
//! residual and every nontrivial perfect group of order at most 400 is
//! generated by two elements.

use alloc::vec::Vec;

use crate::error::Error;
use crate::group::Group;
use crate::ops::{normal_closure, normalizer_in, perfect_residual};
use crate::perm::Perm;
use crate::subgroup::{Subgroup, SubgroupClass};

/// An element `t` of `g` with `a^t = b`, if one exists.
pub fn conjugating_element(g: &Group, a: &Group, b: &Group) -> Option<Perm> {
    if a.order() != b.order() || a.degree() != b.degree() {
        return None;
    }
    if a.equals(b) {
        return Some(Perm::identity(g.degree()));
    }
    g.elements()
        .find(|t| a.gens().iter().all(|x| b.contains(&x.conjugate(t))))
}

/// A conjugator `t ∈ g` with `a^t = b`, or `None` when the subgroups are
/// not conjugate. Both must be subgroups of `g`.
pub fn are_conjugate(g: &Group, a: &Subgroup, b: &Subgroup) -> Result<Option<Perm>, Error> {
    if !g.contains_group(a.group()) || !g.contains_group(b.group()) {
        return Err(Error::NotASubgroup);
    }
    Ok(conjugating_element(g, a.group(), b.group()))
}

/// All conjugates of `h` under `g`, each listed once.
pub fn conjugates_of(g: &Group, h: &Group) -> Vec<Group> {
    let mut orbit = alloc::vec![h.clone()];
    let mut i = 0;
    while i < orbit.len() {
        let current = orbit[i].clone();
        i += 1;
        for t in g.gens() {
            let image = current.conjugate_by(t);
            if !orbit.iter().any(|k| k.equals(&image)) {
                orbit.push(image);
            }
        }
    }
    orbit
}

fn is_perfect(h: &Group) -> bool {
    !h.is_trivial() && {
        let mut comms = Vec::new();
        for x in h.gens() {
            for y in h.gens() {
                comms.push(x.commutator(y));
            }
        }
        normal_closure(h, &comms).order() == h.order()
    }
}

/// Representatives of the conjugacy classes of perfect subgroups.
fn perfect_layer(g: &Group) -> Vec<Group> {
    let residual = perfect_residual(g);
    if residual.is_trivial() {
        return Vec::new();
    }
    let mut reps: Vec<Group> = Vec::new();
    let mut class_reps: Vec<Perm> = Vec::new();
    for c in crate::ops::conjugacy_classes(&residual) {
        class_reps.push(c[0].clone());
    }
    for a in &class_reps {
        if a.is_identity() {
            continue;
        }
        for b in residual.elements() {
            let h = Group::generate(g.degree(), &[a.clone(), b.clone()]).expect("same degree");
            if !is_perfect(&h) {
                continue;
            }
            if reps
                .iter()
                .any(|k| conjugating_element(g, k, &h).is_some())
            {
                continue;
            }
            reps.push(h);
        }
    }
    reps
}

/// Order of `x` modulo `k`: the least `m > 0` with `x^m ∈ k`.
fn coset_order(x: &Perm, k: &Group) -> u64 {
    let mut power = x.clone();
    let mut m = 1;
    while !k.contains(&power) {
        power = power.compose(x);
        m += 1;
    }
    m
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && crate::ops::prime_factorization(n) == alloc::vec![(n, 1)]
}

/// All subgroups of `g` up to conjugacy, sorted by order then by element
/// list. Fails with [`Error::GroupTooLarge`] above `limit`.
pub fn all_subgroup_classes(g: &Group, limit: u64) -> Result<Vec<SubgroupClass>, Error> {
    if g.order() > limit {
        return Err(Error::GroupTooLarge {
            order: g.order(),
            limit,
        });
    }
    let mut reps: Vec<Group> = alloc::vec![Group::trivial(g.degree())];
    reps.extend(perfect_layer(g));
    let mut next = 0;
    while next < reps.len() {
        let k = reps[next].clone();
        next += 1;
        if k.order() == g.order() {
            continue;
        }
        let n = normalizer_in(g, &k);
        for x in n.elements() {
            if k.contains(&x) || !is_prime(coset_order(&x, &k)) {
                continue;
            }
            let h = k.join(core::slice::from_ref(&x)).expect("same degree");
            if reps
                .iter()
                .any(|r| r.order() == h.order() && conjugating_element(g, r, &h).is_some())
            {
                continue;
            }
            reps.push(h);
        }
    }
    let mut classes: Vec<SubgroupClass> = reps
        .into_iter()
        .map(|h| {
            let class_size = g.order() / normalizer_in(g, &h).order();
            let representative =
                Subgroup::from_group(g, h).expect("enumeration stays inside the group");
            SubgroupClass {
                representative,
                class_size,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        a.representative
            .sort_key()
            .cmp(&b.representative.sort_key())
    });
    Ok(classes)
}

/// All subgroups of `g` that contain `h` (including `g` and `h` itself),
/// derived from the class list. Fails with [`Error::GroupTooLarge`] above
/// `limit`.
pub fn overgroups_of(g: &Group, h: &Group, limit: u64) -> Result<Vec<Group>, Error> {
    let classes = all_subgroup_classes(g, limit)?;
    let mut out = Vec::new();
    for class in &classes {
        let rep = class.representative.group();
        if rep.order() % h.order() != 0 || rep.order() < h.order() {
            continue;
        }
        for conj in conjugates_of(g, rep) {
            if conj.contains_group(h) {
                out.push(conj);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
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

    /// Oracle: every subgroup generated by at most three elements, by
    /// brute closure. Complete for groups whose subgroups are all
    /// 3-generated (true for every group used below).
    fn naive_subgroups(g: &Group) -> BTreeSet<Vec<Perm>> {
        let elements: Vec<Perm> = g.sorted_elements();
        let mut found: BTreeSet<Vec<Perm>> = BTreeSet::new();
        found.insert(vec![Perm::identity(g.degree())]);
        for (i, a) in elements.iter().enumerate() {
            for b in &elements[i..] {
                for c in elements.iter() {
                    let h =
                        Group::generate(g.degree(), &[a.clone(), b.clone(), c.clone()]).unwrap();
                    found.insert(h.sorted_elements());
                }
            }
        }
        found
    }

    #[test]
    fn sym4_has_eleven_classes_and_thirty_subgroups() {
        let g = sym(4);
        let classes = all_subgroup_classes(&g, 400).unwrap();
        assert_eq!(classes.len(), 11);
        let total: u64 = classes.iter().map(|c| c.class_size).sum();
        assert_eq!(total, 30);
        // Orders 1 and 24 appear exactly once each and are normal.
        assert_eq!(classes.first().unwrap().representative.order(), 1);
        assert_eq!(classes.last().unwrap().representative.order(), 24);
        assert_eq!(classes.last().unwrap().class_size, 1);
    }

    #[test]
    fn sym4_classes_match_naive_enumeration() {
        let g = sym(4);
        let classes = all_subgroup_classes(&g, 400).unwrap();
        let mut from_classes: BTreeSet<Vec<Perm>> = BTreeSet::new();
        for class in &classes {
            let conjs = conjugates_of(&g, class.representative.group());
            assert_eq!(conjs.len() as u64, class.class_size);
            for h in conjs {
                from_classes.insert(h.sorted_elements());
            }
        }
        assert_eq!(from_classes, naive_subgroups(&g));
    }

    #[test]
    fn elementary_abelian_eight_matches_naive_enumeration() {
        let g = Group::generate(
            6,
            &[cyc(6, &[&[0, 1]]), cyc(6, &[&[2, 3]]), cyc(6, &[&[4, 5]])],
        )
        .unwrap();
        assert_eq!(g.order(), 8);
        let classes = all_subgroup_classes(&g, 400).unwrap();
        // Abelian group: classes are single subgroups. 1 + 7 + 7 + 1.
        assert_eq!(classes.len(), 16);
        assert!(classes.iter().all(|c| c.class_size == 1));
        let mut sets: BTreeSet<Vec<Perm>> = BTreeSet::new();
        for c in &classes {
            sets.insert(c.representative.group().sorted_elements());
        }
        assert_eq!(sets, naive_subgroups(&g));
    }

    #[test]
    fn alt5_classes_include_the_perfect_whole_group() {
        let g = alt5();
        let classes = all_subgroup_classes(&g, 400).unwrap();
        // A5: 1, C2, C3, V4, C5, S3, D10, A4, A5 -> 9 classes, 59 subgroups.
        assert_eq!(classes.len(), 9);
        let total: u64 = classes.iter().map(|c| c.class_size).sum();
        assert_eq!(total, 59);
        assert_eq!(classes.last().unwrap().representative.order(), 60);
    }

    #[test]
    fn sym5_contains_alt5_as_perfect_subgroup_class() {
        let g = sym(5);
        let classes = all_subgroup_classes(&g, 400).unwrap();
        assert!(classes
            .iter()
            .any(|c| c.representative.order() == 60 && c.class_size == 1));
        // S5 has 19 subgroup classes and 156 subgroups.
        assert_eq!(classes.len(), 19);
        assert_eq!(classes.iter().map(|c| c.class_size).sum::<u64>(), 156);
    }

    #[test]
    fn too_large_group_is_rejected() {
        let s5 = sym(5);
        let w = Group::wreath_cyclic(&s5, 2);
        assert!(matches!(
            all_subgroup_classes(&w, 400),
            Err(Error::GroupTooLarge { order: 28800, limit: 400 })
        ));
    }

    #[test]
    fn conjugacy_of_subgroups() {
        let g = sym(4);
        let a = Subgroup::new(&g, &[cyc(4, &[&[0, 1]])]).unwrap();
        let b = Subgroup::new(&g, &[cyc(4, &[&[2, 3]])]).unwrap();
        let c = Subgroup::new(&g, &[cyc(4, &[&[0, 1], &[2, 3]])]).unwrap();
        assert!(are_conjugate(&g, &a, &b).unwrap().is_some());
        // Same order, different classes.
        assert!(are_conjugate(&g, &a, &c).unwrap().is_none());
        assert!(are_conjugate(&g, &a, &a).unwrap().is_some());
        let t = conjugating_element(&g, a.group(), b.group()).unwrap();
        assert!(b.contains(&cyc(4, &[&[0, 1]]).conjugate(&t)));
    }

    #[test]
    fn overgroups_of_sylow3_in_sym4() {
        let g = sym(4);
        let c3 = Group::generate(4, &[cyc(4, &[&[0, 1, 2]])]).unwrap();
        let over = overgroups_of(&g, &c3, 400).unwrap();
        // C3 < S3 (two copies: point stabilizers of 3 fixing... exactly
        // one S3 contains a given C3), A4, S4 and C3 itself.
        let mut orders: Vec<u64> = over.iter().map(|h| h.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![3, 6, 12, 24]);
        assert!(over.iter().all(|h| h.contains_group(&c3)));
    }
}
