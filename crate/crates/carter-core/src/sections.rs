//! Quotients and induced automorphism groups, realized as concrete
//! permutation actions.
//!
//! A quotient `G/N` acts on the right cosets of `N`; the automorphisms a
//! group induces on a centerless subgroup `S` act on the non-identity
//! elements of `S` by conjugation. Both are packaged as a [`SectionMap`]:
//! the acting subgroup, the section, the permutation image and the kernel.

use alloc::vec::Vec;

use crate::error::Error;
use crate::group::Group;
use crate::ops::{centralizer_in, is_normal_in, normalizer_in};
use crate::perm::Perm;
use crate::subgroup::Subgroup;

#[derive(Clone, Debug)]
enum Action {
    /// Right multiplication on cosets `modulus · reps[i]`.
    Cosets { reps: Vec<Perm>, modulus: Group },
    /// Conjugation on the sorted non-identity elements of a subgroup.
    Conjugation { points: Vec<Perm> },
    /// Conjugation permuting a list of subgroups, grouped into blocks.
    FactorBlocks {
        factors: Vec<Group>,
        blocks: Vec<Vec<usize>>,
    },
}

/// A homomorphism from a subgroup onto a permutation realization of a
/// quotient or an induced automorphism group.
#[derive(Clone, Debug)]
pub struct SectionMap {
    source: Subgroup,
    section_top: Subgroup,
    section_bottom: Subgroup,
    image_group: Group,
    map: Vec<(Perm, Perm)>,
    kernel: Subgroup,
    action: Action,
}

impl SectionMap {
    pub fn source(&self) -> &Subgroup {
        &self.source
    }

    pub fn section_top(&self) -> &Subgroup {
        &self.section_top
    }

    pub fn section_bottom(&self) -> &Subgroup {
        &self.section_bottom
    }

    pub fn image_group(&self) -> &Group {
        &self.image_group
    }

    /// Generator-image pairs for the source generators.
    pub fn map(&self) -> &[(Perm, Perm)] {
        &self.map
    }

    /// Elements of the source acting trivially.
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// The image of one element under the action.
    pub fn apply(&self, x: &Perm) -> Result<Perm, Error> {
        match &self.action {
            Action::Cosets { reps, modulus } => {
                let mut images = Vec::with_capacity(reps.len());
                for r in reps {
                    let moved = r.compose(x);
                    let j = reps
                        .iter()
                        .position(|s| modulus.contains(&moved.compose(&s.inverse())))
                        .ok_or(Error::NotAMember)?;
                    images.push(j as u32);
                }
                Perm::from_images(images).map_err(|_| Error::NotAMember)
            }
            Action::Conjugation { points } => {
                let mut images = Vec::with_capacity(points.len());
                for p in points {
                    let q = p.conjugate(x);
                    let j = points.binary_search(&q).map_err(|_| Error::NotAMember)?;
                    images.push(j as u32);
                }
                Perm::from_images(images).map_err(|_| Error::NotAMember)
            }
            Action::FactorBlocks { factors, blocks } => {
                let mut images = Vec::with_capacity(blocks.len());
                for block in blocks {
                    // A conjugated generator lies in exactly one factor,
                    // which pins down the image block.
                    let t = factors[block[0]].gens().first().ok_or(Error::NotAMember)?;
                    let moved = t.conjugate(x);
                    let j = factors
                        .iter()
                        .position(|f| f.contains(&moved))
                        .ok_or(Error::NotAMember)?;
                    let bi = blocks
                        .iter()
                        .position(|bl| bl.contains(&j))
                        .ok_or(Error::NotAMember)?;
                    images.push(bi as u32);
                }
                Perm::from_images(images).map_err(|_| Error::NotAMember)
            }
        }
    }

    /// The image of a subgroup of the source.
    pub fn image_of(&self, h: &Group) -> Result<Group, Error> {
        let mut images = Vec::new();
        for g in h.gens() {
            images.push(self.apply(g)?);
        }
        Group::generate(self.image_group.degree(), &images)
    }

    /// Some element of the source mapping to `q`, if `q` lies in the
    /// image of the source. Works through a combined action on the
    /// disjoint union of the two point sets.
    pub fn preimage_element(&self, q: &Perm) -> Option<Perm> {
        let d = self.source.group().degree();
        let e = self.image_group.degree();
        if q.degree() != e {
            return None;
        }
        let mut combined_gens = Vec::new();
        for (g, img) in &self.map {
            let mut images: Vec<u32> = g.images().to_vec();
            images.extend(img.images().iter().map(|&i| i + d as u32));
            combined_gens.push(Perm::from_images(images).expect("block sum is a bijection"));
        }
        let prescribed: Vec<u32> = self
            .image_group
            .base_points()
            .iter()
            .map(|&b| b + d as u32)
            .collect();
        let combined = Group::with_prescribed_base(d + e, &combined_gens, &prescribed);
        // Walk the chain: on image-coordinate levels the choice is forced
        // by q, on domain-coordinate levels the identity representative
        // works (those levels no longer move image points).
        let mut r = Perm::identity(d + e);
        let base = combined.base_points();
        for (level, &b) in base.iter().enumerate() {
            let p = if (b as usize) >= d {
                let target = q.image(b - d as u32) + d as u32;
                let wanted = r.inverse().image(target);
                if !combined.orbit_points(level).contains(&wanted) {
                    return None;
                }
                wanted
            } else {
                b
            };
            r = combined.transversal_rep(level, p).compose(&r);
        }
        let domain_part =
            Perm::from_images(r.images()[..d].to_vec()).expect("action preserves the blocks");
        Some(domain_part)
    }

    /// The full preimage of a subgroup of the image: kernel generators
    /// plus one preimage per generator of `q`.
    pub fn preimage_of_subgroup(&self, q: &Group) -> Result<Group, Error> {
        let mut gens = self.kernel.gens().to_vec();
        for g in q.gens() {
            gens.push(self.preimage_element(g).ok_or(Error::NotAMember)?);
        }
        Group::generate(self.source.group().degree(), &gens)
    }
}

/// Kernel of a generator-image map, via the pointwise stabilizer of the
/// image coordinates in the combined action.
pub(crate) fn kernel_via_combined(
    degree: usize,
    pairs: &[(Perm, Perm)],
    image_degree: usize,
) -> Group {
    let mut combined_gens = Vec::new();
    for (g, img) in pairs {
        let mut images: Vec<u32> = g.images().to_vec();
        images.extend(img.images().iter().map(|&i| i + degree as u32));
        combined_gens.push(Perm::from_images(images).expect("block sum is a bijection"));
    }
    let combined =
        Group::generate(degree + image_degree, &combined_gens).expect("same degree");
    let pts: Vec<u32> = (degree..degree + image_degree).map(|i| i as u32).collect();
    let stab = combined.pointwise_stabilizer(&pts);
    let restricted: Vec<Perm> = stab
        .gens()
        .iter()
        .map(|g| Perm::from_images(g.images()[..degree].to_vec()).expect("fixes image block"))
        .collect();
    Group::generate(degree, &restricted).expect("same degree")
}

/// The conjugation action of `g` on a family of subgroups grouped into
/// blocks; the kernel is the block stabilizer.
pub(crate) fn block_action_map(
    g: &Group,
    factors: &[Group],
    blocks: &[Vec<usize>],
) -> Result<SectionMap, Error> {
    let action = Action::FactorBlocks {
        factors: factors.to_vec(),
        blocks: blocks.to_vec(),
    };
    let source = Subgroup::whole(g);
    let probe = SectionMap {
        source: source.clone(),
        section_top: Subgroup::whole(g),
        section_bottom: Subgroup::trivial(g),
        image_group: Group::trivial(blocks.len()),
        map: Vec::new(),
        kernel: Subgroup::whole(g),
        action,
    };
    let mut map = Vec::new();
    for c in g.gens() {
        map.push((c.clone(), probe.apply(c)?));
    }
    let image_group = Group::generate(
        blocks.len(),
        &map.iter().map(|(_, q)| q.clone()).collect::<Vec<_>>(),
    )?;
    let kernel = kernel_via_combined(g.degree(), &map, blocks.len());
    let kernel = Subgroup::from_group(g, kernel)?;
    Ok(SectionMap {
        section_bottom: kernel.clone(),
        image_group,
        map,
        kernel,
        ..probe
    })
}

/// The canonical map `G -> G/N` via the action on right cosets of `N`.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<SectionMap, Error> {
    if !g.contains_group(n.group()) {
        return Err(Error::NotASubgroup);
    }
    if !is_normal_in(g, n.group()) {
        return Err(Error::NotNormal);
    }
    // Coset representatives by orbit of the identity coset.
    let mut reps = alloc::vec![Perm::identity(g.degree())];
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i].clone();
        i += 1;
        for c in g.gens() {
            let s = r.compose(c);
            if !reps.iter().any(|t| n.group().contains(&s.compose(&t.inverse()))) {
                reps.push(s);
            }
        }
    }
    let action = Action::Cosets {
        reps,
        modulus: n.group().clone(),
    };
    let source = Subgroup::whole(g);
    let mut map = Vec::new();
    let probe = SectionMap {
        source: source.clone(),
        section_top: Subgroup::whole(g),
        section_bottom: n.clone(),
        image_group: Group::trivial(0),
        map: Vec::new(),
        kernel: n.clone(),
        action: action.clone(),
    };
    for c in g.gens() {
        map.push((c.clone(), probe.apply(c)?));
    }
    let image_group = Group::generate(
        match &action {
            Action::Cosets { reps, .. } => reps.len(),
            _ => unreachable!(),
        },
        &map.iter().map(|(_, q)| q.clone()).collect::<Vec<_>>(),
    )?;
    Ok(SectionMap {
        source,
        section_top: Subgroup::whole(g),
        section_bottom: n.clone(),
        image_group,
        map,
        kernel: n.clone(),
        action,
    })
}

/// `N_H(A/B) = N_H(A) ∩ N_H(B)`.
pub fn section_normalizer(h: &Subgroup, a: &Subgroup, b: &Subgroup) -> Result<Subgroup, Error> {
    if !a.group().contains_group(b.group()) || !is_normal_in(a.group(), b.group()) {
        return Err(Error::NotNormal);
    }
    let n_a = normalizer_in(h.group(), a.group());
    let both = normalizer_in(&n_a, b.group());
    Subgroup::from_group(h.parent(), both)
}

fn conjugation_action(s: &Group) -> Result<Action, Error> {
    if centralizer_in(s, s.gens()).order() > 1 {
        return Err(Error::NontrivialCenter);
    }
    let mut points = s.sorted_elements();
    points.retain(|p| !p.is_identity());
    Ok(Action::Conjugation { points })
}

/// The conjugation action of `N_H(S)` on the non-identity elements of a
/// centerless `S`; the image is `Aut_H(S)` and the kernel is `C_H(S)`.
pub fn induced_automorphisms(h: &Subgroup, s: &Subgroup) -> Result<SectionMap, Error> {
    let action = conjugation_action(s.group())?;
    let n_h_s = normalizer_in(h.group(), s.group());
    let kernel = centralizer_in(&n_h_s, s.group().gens());
    let source = Subgroup::from_group(h.parent(), n_h_s)?;
    let degree = s.order() as usize - 1;
    let probe = SectionMap {
        source: source.clone(),
        section_top: s.clone(),
        section_bottom: Subgroup::trivial(s.parent()),
        image_group: Group::trivial(degree),
        map: Vec::new(),
        kernel: Subgroup::from_group(h.parent(), kernel.clone())?,
        action: action.clone(),
    };
    let mut map = Vec::new();
    for c in source.gens() {
        map.push((c.clone(), probe.apply(c)?));
    }
    let image_group = Group::generate(
        degree,
        &map.iter().map(|(_, q)| q.clone()).collect::<Vec<_>>(),
    )?;
    Ok(SectionMap {
        image_group,
        map,
        ..probe
    })
}

/// `⟨Aut_H(S), S⟩` on the non-identity elements of `S`: the images of
/// `N_H(S)` together with the inner image of `S`.
pub fn group_with_induced(h: &Subgroup, s: &Subgroup) -> Result<Group, Error> {
    let outer = induced_automorphisms(h, s)?;
    let inner = induced_automorphisms(s, s)?;
    let mut gens = outer.image_group().gens().to_vec();
    gens.extend_from_slice(inner.image_group().gens());
    Group::generate(outer.image_group().degree(), &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
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

    fn alt5_in(parent: &Group) -> Subgroup {
        Subgroup::new(
            parent,
            &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])],
        )
        .unwrap()
    }

    fn klein_four(parent: &Group) -> Subgroup {
        Subgroup::new(
            parent,
            &[cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])],
        )
        .unwrap()
    }

    #[test]
    fn sym4_mod_klein_four_is_sym3_shaped() {
        let g = sym(4);
        let q = quotient(&g, &klein_four(&g)).unwrap();
        assert_eq!(q.image_group().order(), 6);
        assert_eq!(q.image_group().order() * q.kernel().order(), g.order());
        let mut stats: BTreeMap<u64, u64> = BTreeMap::new();
        for x in q.image_group().elements() {
            *stats.entry(x.order()).or_insert(0) += 1;
        }
        let expected: BTreeMap<u64, u64> = [(1, 1), (2, 3), (3, 2)].into_iter().collect();
        assert_eq!(stats, expected);
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = sym(3);
        let q = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.image_group().order(), 1);
    }

    #[test]
    fn quotient_by_trivial_subgroup_preserves_order() {
        let g = sym(3);
        let q = quotient(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.image_group().order(), 6);
        assert_eq!(q.image_group().degree(), 6);
    }

    #[test]
    fn quotient_rejects_non_normal_subgroup() {
        let g = sym(4);
        let h = Subgroup::new(&g, &[cyc(4, &[&[0, 1]])]).unwrap();
        assert_eq!(quotient(&g, &h).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn quotient_map_is_a_homomorphism_on_sampled_pairs() {
        let g = sym(4);
        let q = quotient(&g, &klein_four(&g)).unwrap();
        let elements = g.sorted_elements();
        for x in elements.iter().step_by(5) {
            for y in elements.iter().step_by(7) {
                let lhs = q.apply(&x.compose(y)).unwrap();
                let rhs = q.apply(x).unwrap().compose(&q.apply(y).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn preimages_round_trip() {
        let g = sym(4);
        let q = quotient(&g, &klein_four(&g)).unwrap();
        for x in q.image_group().sorted_elements() {
            let pre = q.preimage_element(&x).unwrap();
            assert!(g.contains(&pre));
            assert_eq!(q.apply(&pre).unwrap(), x);
        }
        // Pull back an order-2 subgroup: preimage has order 2 * 4 = 8.
        let two = q
            .image_group()
            .sorted_elements()
            .into_iter()
            .find(|x| x.order() == 2)
            .unwrap();
        let sub = Group::generate(q.image_group().degree(), &[two]).unwrap();
        let pulled = q.preimage_of_subgroup(&sub).unwrap();
        assert_eq!(pulled.order(), 8);
        assert!(g.contains_group(&pulled));
    }

    #[test]
    fn section_normalizer_examples() {
        let g = sym(4);
        let whole = Subgroup::whole(&g);
        let v4 = klein_four(&g);
        let triv = Subgroup::trivial(&g);
        assert_eq!(section_normalizer(&whole, &v4, &triv).unwrap().order(), 24);
        // A = B: both constraints coincide with N_H(A).
        assert_eq!(section_normalizer(&whole, &v4, &v4).unwrap().order(), 24);
        // (0 1) inverts the 3-cycle, so it normalizes A.
        let h = Subgroup::new(&g, &[cyc(4, &[&[0, 1]])]).unwrap();
        let a = Subgroup::new(&g, &[cyc(4, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(section_normalizer(&h, &a, &triv).unwrap().order(), 2);
        // (0 1) does not normalize a 4-cycle group.
        let a4 = Subgroup::new(&g, &[cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(section_normalizer(&h, &a4, &triv).unwrap().order(), 1);
        // B not normal in A.
        let s3 = Subgroup::new(&g, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2]])]).unwrap();
        let b = Subgroup::new(&g, &[cyc(4, &[&[0, 1]])]).unwrap();
        assert_eq!(
            section_normalizer(&whole, &s3, &b).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn sym5_induces_full_automorphisms_on_alt5() {
        let g = sym(5);
        let s = alt5_in(&g);
        let m = induced_automorphisms(&Subgroup::whole(&g), &s).unwrap();
        assert_eq!(m.image_group().degree(), 59);
        assert_eq!(m.image_group().order(), 120);
        assert_eq!(m.kernel().order(), 1);
    }

    #[test]
    fn inner_automorphisms_of_alt5_are_faithful() {
        let g = sym(5);
        let s = alt5_in(&g);
        let m = induced_automorphisms(&s, &s).unwrap();
        assert_eq!(m.image_group().order(), 60);
        assert_eq!(m.kernel().order(), 1);
    }

    #[test]
    fn abelian_section_is_rejected() {
        let g = sym(4);
        let v4 = klein_four(&g);
        let h = Subgroup::new(&g, &[cyc(4, &[&[0, 1], &[2, 3]])]).unwrap();
        assert_eq!(
            induced_automorphisms(&h, &v4).unwrap_err(),
            Error::NontrivialCenter
        );
    }

    #[test]
    fn group_with_induced_over_sylow_two_of_sym5() {
        let g = sym(5);
        let s = alt5_in(&g);
        // A Sylow 2-subgroup of Sym5 contains odd permutations.
        let syl = crate::ops::sylow_subgroup(&g, 2);
        assert_eq!(syl.order(), 8);
        let big = group_with_induced(&syl, &s).unwrap();
        assert_eq!(big.order(), 120);
        // Inner image is normal of index 2.
        let inner = induced_automorphisms(&s, &s).unwrap();
        assert!(big.contains_group(inner.image_group()));
        assert!(is_normal_in(&big, inner.image_group()));
    }

    #[test]
    fn group_with_induced_over_subgroup_of_s_stays_inner() {
        let g = sym(5);
        let s = alt5_in(&g);
        let h = Subgroup::new(&g, &[cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        let big = group_with_induced(&h, &s).unwrap();
        assert_eq!(big.order(), 60);
    }
}
