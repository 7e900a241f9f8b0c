//! Executable verifiers for the structural lemmas: Carter subgroups
//! survive quotients, the wreath-product embedding of a group acting on
//! the simple factors of a normal semisimple subgroup, and the
//! self-normalizing and conjugacy properties around a central element of
//! a Carter subgroup.

use alloc::vec::Vec;

use crate::carter::{carter_subgroups, check_star, is_carter, Limits};
use crate::error::Error;
use crate::group::Group;
use crate::lattice::{conjugating_element, is_prime, overgroups_of};
use crate::normal::minimal_normal_subgroups;
use crate::ops::{centralizer_in, conjugacy_classes, intersection, normalizer_in};
use crate::perm::Perm;
use crate::sections::{
    block_action_map, group_with_induced, induced_automorphisms, quotient, SectionMap,
};
use crate::subgroup::Subgroup;

/// The image of a Carter subgroup in a quotient is again Carter: true on
/// all valid inputs, so a `false` is a finding, not a failure mode.
pub fn verify_quotient_image(g: &Group, h: &Subgroup, n: &Subgroup) -> Result<bool, Error> {
    if !is_carter(g, h)? {
        return Err(Error::NotCarter);
    }
    let q = quotient(g, n)?;
    let image = q.image_of(h.group())?;
    let handle = Subgroup::from_group(q.image_group(), image)?;
    is_carter(q.image_group(), &handle)
}

/// The simple non-abelian direct factors of a semisimple group: exactly
/// its minimal normal subgroups.
fn simple_factors_of(b: &Group) -> Result<Vec<Group>, Error> {
    if b.is_abelian() {
        return Err(Error::AbelianFactor);
    }
    let mins = minimal_normal_subgroups(b)?;
    let product: u64 = mins.iter().map(|t| t.order()).product();
    if product != b.order()
        || mins
            .iter()
            .any(|t| t.group().is_abelian() || !crate::normal::is_simple(t.group()))
    {
        return Err(Error::AbelianFactor);
    }
    Ok(mins.into_iter().map(|t| t.group().clone()).collect())
}

/// Images of the generators of `g` on the factor list, by conjugation.
fn factor_action(g: &Group, factors: &[Group]) -> Result<Vec<Perm>, Error> {
    let mut perms = Vec::new();
    for c in g.gens() {
        let mut images = Vec::with_capacity(factors.len());
        for f in factors {
            let t = f.gens().first().ok_or(Error::NotNormal)?;
            let moved = t.conjugate(c);
            let j = factors
                .iter()
                .position(|f2| f2.contains(&moved))
                .ok_or(Error::NotNormal)?;
            images.push(j as u32);
        }
        perms.push(Perm::from_images(images)?);
    }
    Ok(perms)
}

fn orbit_of_zero(perms: &[Perm], k: usize) -> Vec<usize> {
    let mut seen = alloc::vec![false; k];
    seen[0] = true;
    let mut frontier = alloc::vec![0u32];
    while let Some(x) = frontier.pop() {
        for p in perms {
            let y = p.image(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                frontier.push(y);
            }
        }
    }
    (0..k).filter(|&i| seen[i]).collect()
}

/// Finest block system in which `a` and `b` share a block (union-find
/// closure under the generators).
fn minimal_block_system(perms: &[Perm], k: usize, a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut stack = alloc::vec![(a, b)];
    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
    parent[ra.max(rb)] = ra.min(rb);
    while let Some((x, y)) = stack.pop() {
        for p in perms {
            let (u, v) = (p.image(x as u32) as usize, p.image(y as u32) as usize);
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
                stack.push((u, v));
            }
        }
    }
    let mut blocks: alloc::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..k {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(i);
    }
    blocks.into_values().collect()
}

/// Coarsest non-trivial block system (so the action on blocks is
/// primitive), ties broken by the lexicographically least partition.
fn maximal_block_system(perms: &[Perm], k: usize) -> Vec<Vec<usize>> {
    // current[i] = sorted original indices in block i.
    let mut current: Vec<Vec<usize>> = (0..k).map(|i| alloc::vec![i]).collect();
    loop {
        let q = current.len();
        if q <= 2 {
            return current;
        }
        // Action on the current blocks.
        let quot: Vec<Perm> = perms
            .iter()
            .map(|p| {
                let images: Vec<u32> = current
                    .iter()
                    .map(|block| {
                        let j = p.image(block[0] as u32) as usize;
                        current
                            .iter()
                            .position(|b2| b2.contains(&j))
                            .expect("blocks cover the points") as u32
                    })
                    .collect();
                Perm::from_images(images).expect("quotient action is a bijection")
            })
            .collect();
        let mut best: Option<Vec<Vec<usize>>> = None;
        for b in 1..q {
            let sys = minimal_block_system(&quot, q, 0, b);
            if sys.len() == 1 || sys.len() == q {
                continue;
            }
            // Pull back to original indices.
            let mut merged: Vec<Vec<usize>> = sys
                .iter()
                .map(|block| {
                    let mut pts: Vec<usize> =
                        block.iter().flat_map(|&i| current[i].iter().copied()).collect();
                    pts.sort_unstable();
                    pts
                })
                .collect();
            merged.sort();
            if best.as_ref().map(|b2| &merged < b2).unwrap_or(true) {
                best = Some(merged);
            }
        }
        match best {
            Some(sys) => current = sys,
            None => return current,
        }
    }
}

/// The explicit embedding of `G` into `A ≀ C_p` built from the action on
/// the simple factors of `B`, with all intermediate data exposed.
#[derive(Clone, Debug)]
pub struct WreathEmbedding {
    pub g: Group,
    pub h: Subgroup,
    pub b: Subgroup,
    /// Simple factors, reindexed so blocks are consecutive runs.
    pub factors: Vec<Group>,
    pub blocks: Vec<Vec<usize>>,
    pub p: u64,
    pub l: u64,
    /// Action on the blocks; its kernel is `Y`.
    pub phi: SectionMap,
    pub y: Subgroup,
    pub s_list: Vec<Group>,
    /// Conjugation of `Y` on the non-identity elements of `S_1`.
    pub xi: SectionMap,
    /// `A = Y^ξ`.
    pub a: Group,
    pub eta_images: Vec<(Perm, Perm)>,
    pub wreath_degree: usize,
    /// Coset representatives of `Y`, lexicographically least, identity first.
    pub transversal: Vec<Perm>,
    /// `H_i = (H ∩ Y)^{ψ_i ∘ η}`, subgroups of `A`.
    pub h_list: Vec<Group>,
    /// `Y^η` inside the wreath realization.
    pub y_image: Group,
    /// `N = (H_1 × … × H_p) ∩ Y^η`.
    pub n: Group,
}

fn eta_of(
    phi: &SectionMap,
    xi: &SectionMap,
    transversal: &[Perm],
    dega: usize,
    x: &Perm,
) -> Result<Perm, Error> {
    let p = transversal.len();
    let top = phi.apply(x)?;
    let mut images = alloc::vec![0u32; p * dega];
    for i in 0..p {
        let j = top.image(i as u32) as usize;
        let t = transversal[i].compose(x).compose(&transversal[j].inverse());
        let w = xi.apply(&t)?;
        for om in 0..dega {
            images[i * dega + om] = (j * dega) as u32 + w.image(om as u32);
        }
    }
    Perm::from_images(images)
}

impl WreathEmbedding {
    /// The embedding `η: G -> A ≀ C_p` applied to one element.
    pub fn eta(&self, x: &Perm) -> Result<Perm, Error> {
        eta_of(&self.phi, &self.xi, &self.transversal, self.a.degree(), x)
    }

    /// Coordinate projection `ψ_i` of a base-group element of the wreath
    /// realization.
    pub fn psi(&self, i: usize, w: &Perm) -> Result<Perm, Error> {
        let dega = self.a.degree();
        let offset = (i * dega) as u32;
        let mut images = Vec::with_capacity(dega);
        for om in 0..dega as u32 {
            let im = w.image(offset + om);
            if im < offset || im >= offset + dega as u32 {
                return Err(Error::NotAMember);
            }
            images.push(im - offset);
        }
        Perm::from_images(images)
    }
}

/// Builds the wreath embedding for `B = T_1 × … × T_k` (k ≥ 2) normal in
/// `G` with centerless simple factors and trivial `C_G(B)`.
pub fn build_wreath_embedding(
    g: &Group,
    h: &Subgroup,
    b: &Subgroup,
) -> Result<WreathEmbedding, Error> {
    if !g.contains_group(b.group()) || !crate::ops::is_normal_in(g, b.group()) {
        return Err(Error::NotNormal);
    }
    let factors = simple_factors_of(b.group())?;
    let k = factors.len();
    if k == 1 {
        return Err(Error::NoBlockSystem);
    }
    if centralizer_in(g, b.gens()).order() > 1 {
        return Err(Error::CentralizerNotTrivial);
    }
    let action = factor_action(g, &factors)?;
    if orbit_of_zero(&action, k).len() != k {
        return Err(Error::NotTransitive);
    }
    let blocks = maximal_block_system(&action, k);
    let p = blocks.len();
    if !is_prime(p as u64) {
        return Err(Error::NoPrimeBlockAction);
    }
    // Reindex the factors so each block is a consecutive run.
    let order: Vec<usize> = blocks.iter().flat_map(|b2| b2.iter().copied()).collect();
    let factors: Vec<Group> = order.iter().map(|&i| factors[i].clone()).collect();
    let l = k / p;
    let blocks: Vec<Vec<usize>> = (0..p).map(|i| (i * l..(i + 1) * l).collect()).collect();
    let phi = block_action_map(g, &factors, &blocks)?;
    if phi.image_group().order() != p as u64 {
        return Err(Error::NoPrimeBlockAction);
    }
    let y = phi.kernel().clone();
    let s_list: Vec<Group> = blocks
        .iter()
        .map(|block| {
            let mut gens = Vec::new();
            for &i in block {
                gens.extend_from_slice(factors[i].gens());
            }
            Group::generate(g.degree(), &gens).expect("same degree")
        })
        .collect();
    let s1 = Subgroup::from_group(g, s_list[0].clone())?;
    let xi = induced_automorphisms(&y, &s1)?;
    let a = xi.image_group().clone();
    let dega = a.degree();
    // Lexicographically least coset representatives of Y, one per block
    // image of Δ_1; the identity is least overall, so x_1 = e.
    let mut transversal: Vec<Option<Perm>> = alloc::vec![None; p];
    for x in g.sorted_elements() {
        let i = phi.apply(&x)?.image(0) as usize;
        if transversal[i].is_none() {
            transversal[i] = Some(x);
            if transversal.iter().all(|t| t.is_some()) {
                break;
            }
        }
    }
    let transversal: Vec<Perm> = transversal
        .into_iter()
        .map(|t| t.expect("the block action is transitive"))
        .collect();
    let mut eta_images = Vec::new();
    for c in g.gens() {
        eta_images.push((c.clone(), eta_of(&phi, &xi, &transversal, dega, c)?));
    }
    let wreath_degree = p * dega;
    let y_image = {
        let mut gens = Vec::new();
        for c in y.gens() {
            gens.push(eta_of(&phi, &xi, &transversal, dega, c)?);
        }
        Group::generate(wreath_degree, &gens)?
    };
    let h_cap_y = intersection(h.group(), y.group());
    let mut h_list = Vec::new();
    for i in 0..p {
        let mut gens = Vec::new();
        for c in h_cap_y.gens() {
            let w = eta_of(&phi, &xi, &transversal, dega, c)?;
            let offset = (i * dega) as u32;
            let images: Vec<u32> = (0..dega as u32).map(|om| w.image(offset + om) - offset).collect();
            gens.push(Perm::from_images(images)?);
        }
        h_list.push(Group::generate(dega, &gens)?);
    }
    let h_product = {
        let mut gens = Vec::new();
        for (i, hi) in h_list.iter().enumerate() {
            for c in hi.gens() {
                let mut images: Vec<u32> = (0..wreath_degree as u32).collect();
                for om in 0..dega as u32 {
                    images[(i * dega) + om as usize] = (i * dega) as u32 + c.image(om);
                }
                gens.push(Perm::from_images(images)?);
            }
        }
        Group::generate(wreath_degree, &gens)?
    };
    let n = intersection(&h_product, &y_image);
    Ok(WreathEmbedding {
        g: g.clone(),
        h: h.clone(),
        b: b.clone(),
        factors,
        blocks,
        p: p as u64,
        l: l as u64,
        phi,
        y,
        s_list,
        xi,
        a,
        eta_images,
        wreath_degree,
        transversal,
        h_list,
        y_image,
        n,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma3Report {
    /// `Aut_H(T_1)` is Carter in `⟨Aut_H(T_1), T_1⟩`.
    pub claim: bool,
    /// `H_1` is Carter in `A` (vacuously true when k = 1).
    pub h1_carter: bool,
    /// `Aut_H(T_1) = Aut_{H_1}(T_1)`.
    pub bridge: bool,
}

/// `Aut_{H_1}(T_1)` as a permutation group on the sorted non-identity
/// elements of `T_1`: take the elements of `H_1` that stabilize the set
/// of points lying in `T_1` and restrict them.
fn aut_h1_on_t1(emb: &WreathEmbedding) -> Result<Group, Error> {
    let s1 = &emb.s_list[0];
    let t1 = &emb.factors[0];
    let mut s1_points = s1.sorted_elements();
    s1_points.retain(|x| !x.is_identity());
    let t1_indices: Vec<usize> = s1_points
        .iter()
        .enumerate()
        .filter(|(_, x)| t1.contains(x))
        .map(|(i, _)| i)
        .collect();
    let mut gens = Vec::new();
    for w in emb.h_list[0].elements() {
        // Keep only elements stabilizing T_1 setwise.
        let mut images = Vec::with_capacity(t1_indices.len());
        let mut ok = true;
        for (pos, &i) in t1_indices.iter().enumerate() {
            let j = w.image(i as u32) as usize;
            match t1_indices.binary_search(&j) {
                Ok(found) => images.push(found as u32),
                Err(_) => {
                    ok = false;
                    break;
                }
            }
            let _ = pos;
        }
        if ok {
            gens.push(Perm::from_images(images)?);
        }
    }
    Group::generate(t1_indices.len(), &gens)
}

/// Checks the induced-automorphism claim for the first simple factor of
/// `B`, the inner Carter claim for `H_1` inside `A`, and the bridge
/// equality between the two realizations.
pub fn verify_lemma3(g: &Group, h: &Subgroup, b: &Subgroup) -> Result<Lemma3Report, Error> {
    // The product H·B must be all of G.
    if h.order() * b.order() / intersection(h.group(), b.group()).order() != g.order() {
        return Err(Error::NotASubgroup);
    }
    let embedding = match build_wreath_embedding(g, h, b) {
        Ok(e) => Some(e),
        Err(Error::NoBlockSystem) => None,
        Err(e) => return Err(e),
    };
    let t1 = match &embedding {
        Some(e) => e.factors[0].clone(),
        None => simple_factors_of(b.group())?[0].clone(),
    };
    let t1_handle = Subgroup::from_group(g, t1)?;
    let induced = induced_automorphisms(h, &t1_handle)?;
    let aut_h_t1 = induced.image_group().clone();
    let big = group_with_induced(h, &t1_handle)?;
    let claim = is_carter(&big, &Subgroup::from_group(&big, aut_h_t1.clone())?)?;
    let (h1_carter, bridge) = match &embedding {
        None => (true, true),
        Some(e) => {
            let h1 = Subgroup::from_group(&e.a, e.h_list[0].clone())?;
            let h1_carter = is_carter(&e.a, &h1)?;
            let bridge = aut_h1_on_t1(e)?.equals(&aut_h_t1);
            (h1_carter, bridge)
        }
    };
    Ok(Lemma3Report {
        claim,
        h1_carter,
        bridge,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma5Report {
    /// Every overgroup of `K` that satisfies the induced-conjugacy
    /// condition is self-normalizing.
    pub overgroups_self_normalizing: bool,
    /// No conjugate of `z` other than `z` lies in `Z(K)`.
    pub conjugates_in_zk: bool,
    /// No conjugate of `z` lies in the center of a Carter subgroup from
    /// another class.
    pub center_meeting_other_carter: bool,
    /// `z` is not conjugate to any power `z^k ≠ z`.
    pub power_conjugacy: bool,
    /// False when overgroups were only sampled (ambient above the cap).
    pub overgroups_exhaustive: bool,
}

impl Lemma5Report {
    pub fn all_hold(&self) -> bool {
        self.overgroups_self_normalizing
            && self.conjugates_in_zk
            && self.center_meeting_other_carter
            && self.power_conjugacy
    }
}

fn conjugacy_class_of(g: &Group, z: &Perm) -> alloc::collections::BTreeSet<Perm> {
    let mut class = alloc::collections::BTreeSet::new();
    class.insert(z.clone());
    let mut frontier = alloc::vec![z.clone()];
    while let Some(x) = frontier.pop() {
        for c in g.gens() {
            let y = x.conjugate(c);
            if class.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    class
}

/// Properties of a nonidentity central element `z` of a Carter subgroup
/// `K`, assuming `C_G(z)` satisfies the induced-conjugacy condition.
pub fn verify_lemma5(
    g: &Group,
    k: &Subgroup,
    z: &Perm,
    limits: &Limits,
) -> Result<Lemma5Report, Error> {
    if !is_carter(g, k)? {
        return Err(Error::NotCarter);
    }
    if z.is_identity() || !k.contains(z) || !k.gens().iter().all(|c| z.commutes_with(c)) {
        return Err(Error::NotCentral);
    }
    let cz = centralizer_in(g, core::slice::from_ref(z));
    if !check_star(&cz, limits)?.satisfied {
        return Err(Error::StarFails);
    }
    let class = conjugacy_class_of(g, z);
    let zk = centralizer_in(k.group(), k.group().gens());
    let conjugates_in_zk = class.iter().all(|w| w == z || !zk.contains(w));
    let mut power_conjugacy = true;
    for e in 2..z.order() {
        let w = z.pow(e);
        if w != *z && class.contains(&w) {
            power_conjugacy = false;
        }
    }
    let carter = carter_subgroups(g, limits)?;
    let mut center_meeting_other_carter = true;
    for other in &carter.classes {
        if conjugating_element(g, other.representative.group(), k.group()).is_some() {
            continue;
        }
        let zh = centralizer_in(
            other.representative.group(),
            other.representative.group().gens(),
        );
        if class.iter().any(|w| zh.contains(w)) {
            center_meeting_other_carter = false;
        }
    }
    let (overgroups, overgroups_exhaustive) = if g.order() <= limits.overgroups {
        (overgroups_of(g, k.group(), limits.overgroups)?, true)
    } else {
        // Partial sweep: overgroups generated by K and one class
        // representative each.
        let mut out = Vec::new();
        for class in conjugacy_classes(g) {
            let y = k.group().join(core::slice::from_ref(&class[0]))?;
            if !out.iter().any(|o: &Group| o.equals(&y)) {
                out.push(y);
            }
        }
        (out, false)
    };
    let mut overgroups_self_normalizing = true;
    for y in &overgroups {
        if !check_star(y, limits)?.satisfied {
            continue;
        }
        if normalizer_in(g, y).order() != y.order() {
            overgroups_self_normalizing = false;
        }
    }
    Ok(Lemma5Report {
        overgroups_self_normalizing,
        conjugates_in_zk,
        center_meeting_other_carter,
        power_conjugacy,
        overgroups_exhaustive,
    })
}
