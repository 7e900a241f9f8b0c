//! Core group-theoretic operations: centralizers, normalizers,
//! commutator series, nilpotency and solubility, Sylow subgroups, p-cores
//! and the Fitting subgroup.
//!
//! Normalizers and centralizers are computed by filtered element
//! enumeration up to [`SCAN_CUTOFF`] and by a pruned backtrack over the
//! stabilizer chain above it; the two paths agree on the overlap (tested).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::Error;
use crate::group::Group;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// Order threshold between element enumeration and backtrack search.
pub const SCAN_CUTOFF: u64 = 10_000;

pub fn prime_factorization(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    prime_factorization(n).into_iter().map(|(p, _)| p).collect()
}

fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

/// Collects the subgroup `{ x ∈ ambient : pred(x) }` by scanning all
/// elements. The predicate must cut out a subgroup.
fn subgroup_by_scan(ambient: &Group, pred: impl Fn(&Perm) -> bool) -> Group {
    let mut found = Group::trivial(ambient.degree());
    for x in ambient.elements() {
        if found.contains(&x) || !pred(&x) {
            continue;
        }
        found = found.join(core::slice::from_ref(&x)).expect("same degree");
    }
    found
}

/// Depth-first search over the stabilizer chain. `prune(level, partial)`
/// sees the partial product whose images of `base[0..=level]` are final;
/// returning false cuts the subtree. `visit` is called on every surviving
/// full element.
fn backtrack(
    ambient: &Group,
    prune: &dyn Fn(usize, &Perm) -> bool,
    visit: &mut dyn FnMut(&Perm),
) {
    fn dfs(
        ambient: &Group,
        level: usize,
        partial: &Perm,
        prune: &dyn Fn(usize, &Perm) -> bool,
        visit: &mut dyn FnMut(&Perm),
    ) {
        if level == ambient.base_len() {
            visit(partial);
            return;
        }
        for p in ambient.orbit_points(level) {
            let next = ambient.transversal_rep(level, p).compose(partial);
            if prune(level, &next) {
                dfs(ambient, level + 1, &next, prune, visit);
            }
        }
    }
    dfs(
        ambient,
        0,
        &Perm::identity(ambient.degree()),
        prune,
        visit,
    );
}

fn subgroup_by_backtrack(
    ambient: &Group,
    prune: &dyn Fn(usize, &Perm) -> bool,
    test: impl Fn(&Perm) -> bool,
) -> Group {
    let mut found = Group::trivial(ambient.degree());
    backtrack(ambient, prune, &mut |g| {
        if !found.contains(g) && test(g) {
            found = found.join(core::slice::from_ref(g)).expect("same degree");
        }
    });
    found
}

/// Elements of `ambient` commuting with every element of `elts`.
pub fn centralizer_in(ambient: &Group, elts: &[Perm]) -> Group {
    let commutes = |x: &Perm| elts.iter().all(|z| x.commutes_with(z));
    if ambient.order() <= SCAN_CUTOFF {
        return subgroup_by_scan(ambient, commutes);
    }
    let base = ambient.base_points();
    let prune = move |level: usize, partial: &Perm| {
        // If both b and z(b) already have final images, g(z(b)) = z(g(b)).
        for z in elts {
            for &b in &base[..=level] {
                let zb = z.image(b);
                if base[..=level].contains(&zb) && partial.image(zb) != z.image(partial.image(b)) {
                    return false;
                }
            }
        }
        true
    };
    subgroup_by_backtrack(ambient, &prune, commutes)
}

/// Elements of `ambient` normalizing `target`.
pub fn normalizer_in(ambient: &Group, target: &Group) -> Group {
    let normalizes =
        |x: &Perm| target.gens().iter().all(|h| target.contains(&h.conjugate(x)));
    if ambient.order() <= SCAN_CUTOFF {
        return subgroup_by_scan(ambient, normalizes);
    }
    // Orbit sizes of the target are invariant under any normalizing element.
    let mut orbit_size = alloc::vec![0u32; ambient.degree()];
    {
        let mut seen = alloc::vec![false; ambient.degree()];
        for start in 0..ambient.degree() as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut orbit = alloc::vec![start];
            seen[start as usize] = true;
            let mut i = 0;
            while i < orbit.len() {
                let p = orbit[i];
                i += 1;
                for g in target.gens() {
                    let q = g.image(p);
                    if !seen[q as usize] {
                        seen[q as usize] = true;
                        orbit.push(q);
                    }
                }
            }
            for &p in &orbit {
                orbit_size[p as usize] = orbit.len() as u32;
            }
        }
    }
    let base = ambient.base_points();
    let prune = move |level: usize, partial: &Perm| {
        let b = base[level];
        orbit_size[b as usize] == orbit_size[partial.image(b) as usize]
    };
    subgroup_by_backtrack(ambient, &prune, normalizes)
}

/// `C_G(z)`, exact.
pub fn centralizer(g: &Group, z: &Perm) -> Result<Subgroup, Error> {
    if z.degree() != g.degree() {
        return Err(Error::MixedDegree {
            expected: g.degree(),
            found: z.degree(),
        });
    }
    if !g.contains(z) {
        return Err(Error::NotAMember);
    }
    let c = centralizer_in(g, core::slice::from_ref(z));
    Subgroup::from_group(g, c)
}

/// `N_G(H)`, exact; always contains `H`.
pub fn normalizer(g: &Group, h: &Subgroup) -> Result<Subgroup, Error> {
    if !g.contains_group(h.group()) {
        return Err(Error::NotASubgroup);
    }
    let n = normalizer_in(g, h.group());
    Subgroup::from_group(g, n)
}

/// `Z(G)`: everything commuting with all generators.
pub fn center(g: &Group) -> Subgroup {
    let z = centralizer_in(g, g.gens());
    Subgroup::from_group(g, z).expect("center is inside the group")
}

/// Normal closure `⟨seed^G⟩` in `g`.
pub fn normal_closure(g: &Group, seed: &[Perm]) -> Group {
    let mut closure = Group::generate(g.degree(), seed).expect("seed shares degree");
    let mut frontier: Vec<Perm> = seed.to_vec();
    while let Some(x) = frontier.pop() {
        for c in g.gens() {
            let y = x.conjugate(c);
            if !closure.contains(&y) {
                closure = closure.join(core::slice::from_ref(&y)).expect("same degree");
                frontier.push(y);
            }
        }
    }
    closure
}

pub fn is_normal_in(ambient: &Group, h: &Group) -> bool {
    h.gens()
        .iter()
        .all(|x| ambient.gens().iter().all(|c| h.contains(&x.conjugate(c))))
}

/// `[A, B]` as a normal closure in `g` (valid whenever `g` contains and
/// normalizes the commutator subgroup, as in the series below).
fn commutator_group(g: &Group, a: &Group, b: &Group) -> Group {
    // Generator lists can be large (e.g. regular representations), so
    // deduplicate before taking the closure.
    let mut comms = alloc::collections::BTreeSet::new();
    for x in a.gens() {
        for y in b.gens() {
            comms.insert(x.commutator(y));
        }
    }
    let comms: Vec<Perm> = comms.into_iter().filter(|c| !c.is_identity()).collect();
    normal_closure(g, &comms)
}

pub fn derived_subgroup(g: &Group) -> Subgroup {
    let d = commutator_group(g, g, g);
    Subgroup::from_group(g, d).expect("derived subgroup is inside the group")
}

/// G ⊵ G' ⊵ G'' ⊵ … until it stabilizes; the last two terms are never
/// equal except when the series ends at a perfect term or the trivial
/// group.
pub fn derived_series(g: &Group) -> Vec<Subgroup> {
    let mut terms = alloc::vec![Subgroup::whole(g)];
    loop {
        let last = terms.last().expect("nonempty").group().clone();
        let next = commutator_group(&last, &last, &last);
        if next.order() == last.order() {
            break;
        }
        terms.push(Subgroup::from_group(g, next).expect("series stays inside g"));
    }
    terms
}

/// γ₁ = G, γ_{i+1} = [γ_i, G], until it stabilizes.
pub fn lower_central_series(g: &Group) -> Vec<Subgroup> {
    let mut terms = alloc::vec![Subgroup::whole(g)];
    loop {
        let last = terms.last().expect("nonempty").group().clone();
        let next = commutator_group(g, &last, g);
        if next.order() == last.order() {
            break;
        }
        terms.push(Subgroup::from_group(g, next).expect("series stays inside g"));
    }
    terms
}

pub fn is_nilpotent(g: &Group) -> bool {
    lower_central_series(g)
        .last()
        .expect("nonempty")
        .group()
        .is_trivial()
}

pub fn is_soluble(g: &Group) -> bool {
    derived_series(g)
        .last()
        .expect("nonempty")
        .group()
        .is_trivial()
}

/// The perfect residual `G^(∞)`: the last term of the derived series.
pub fn perfect_residual(g: &Group) -> Group {
    derived_series(g)
        .last()
        .expect("nonempty")
        .group()
        .clone()
}

/// A Sylow p-subgroup, grown through normalizers: while `P` is not full,
/// `N_G(P)/P` contains a p-element whose pullback extends `P`.
pub fn sylow_subgroup(g: &Group, p: u64) -> Subgroup {
    let target = p_part(g.order(), p);
    let mut sylow = Group::trivial(g.degree());
    while sylow.order() < target {
        let n = normalizer_in(g, &sylow);
        let mut extended = false;
        for x in n.elements() {
            let o = x.order();
            let m = o / p_part(o, p);
            if m == o {
                continue; // no p-part
            }
            let y = x.pow(m);
            if sylow.contains(&y) {
                continue;
            }
            sylow = sylow.join(core::slice::from_ref(&y)).expect("same degree");
            extended = true;
            break;
        }
        debug_assert!(extended, "Sylow growth step must succeed");
        if !extended {
            break;
        }
    }
    Subgroup::from_group(g, sylow).expect("Sylow subgroup is inside the group")
}

/// Intersection by enumerating the smaller group. Desk scale only.
pub fn intersection(a: &Group, b: &Group) -> Group {
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let mut found = Group::trivial(a.degree());
    for x in small.elements() {
        if !found.contains(&x) && large.contains(&x) {
            found = found.join(core::slice::from_ref(&x)).expect("same degree");
        }
    }
    found
}

/// `O_p(G)`: the normal core of a Sylow p-subgroup.
pub fn p_core(g: &Group, p: u64) -> Subgroup {
    let mut core_grp = sylow_subgroup(g, p).group().clone();
    loop {
        let violator = g
            .gens()
            .iter()
            .find(|c| !core_grp.gens().iter().all(|x| core_grp.contains(&x.conjugate(c))));
        match violator {
            None => break,
            Some(c) => {
                core_grp = intersection(&core_grp, &core_grp.conjugate_by(c));
            }
        }
    }
    Subgroup::from_group(g, core_grp).expect("core is inside the group")
}

/// `F(G)`: the product of the p-cores over primes dividing `|G|`.
pub fn fitting_subgroup(g: &Group) -> Subgroup {
    let mut fitting = Group::trivial(g.degree());
    for p in prime_divisors(g.order()) {
        fitting = fitting.join(p_core(g, p).gens()).expect("same degree");
    }
    Subgroup::from_group(g, fitting).expect("Fitting subgroup is inside the group")
}

/// Conjugacy classes of elements, each sorted, ordered by least member.
pub fn conjugacy_classes(g: &Group) -> Vec<Vec<Perm>> {
    let mut remaining: BTreeSet<Perm> = g.elements().collect();
    let mut classes = Vec::new();
    while let Some(rep) = remaining.iter().next().cloned() {
        let mut class: BTreeSet<Perm> = BTreeSet::new();
        class.insert(rep.clone());
        let mut frontier = alloc::vec![rep];
        while let Some(x) = frontier.pop() {
            for c in g.gens() {
                let y = x.conjugate(c);
                if class.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        for x in &class {
            remaining.remove(x);
        }
        classes.push(class.into_iter().collect());
    }
    classes
}

/// Multiset of element orders, as order -> count.
pub fn element_order_stats(g: &Group) -> BTreeMap<u64, u64> {
    let mut stats = BTreeMap::new();
    for x in g.elements() {
        *stats.entry(x.order()).or_insert(0) += 1;
    }
    stats
}
