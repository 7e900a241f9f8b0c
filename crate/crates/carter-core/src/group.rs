//! Permutation groups backed by a stabilizer chain (base and strong
//! generating set), built with a deterministic Schreier–Sims procedure.
//!
//! Base points are the smallest moved points unless a prescribed prefix is
//! given, so construction is reproducible. Groups are immutable after
//! construction and cheap to clone.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Error;
use crate::perm::Perm;

#[derive(Debug)]
struct Level {
    base: u32,
    /// point -> representative mapping `base` to that point.
    transversal: BTreeMap<u32, Perm>,
}

#[derive(Debug)]
struct Chain {
    degree: usize,
    base: Vec<u32>,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl Chain {
    fn build(degree: usize, gens: &[Perm], prescribed: &[u32]) -> Chain {
        let mut chain = Chain {
            degree,
            base: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for &p in prescribed {
            chain.push_base_point(p);
        }
        for g in gens {
            if !g.is_identity() {
                chain.strong.push(g.clone());
            }
        }
        // Every strong generator must move some base point.
        for i in 0..chain.strong.len() {
            let g = chain.strong[i].clone();
            chain.ensure_base_for(&g);
        }
        for level in (0..chain.levels.len()).rev() {
            chain.complete_level(level);
        }
        chain
    }

    fn push_base_point(&mut self, p: u32) {
        self.base.push(p);
        let mut transversal = BTreeMap::new();
        transversal.insert(p, Perm::identity(self.degree));
        self.levels.push(Level { base: p, transversal });
    }

    fn ensure_base_for(&mut self, g: &Perm) {
        if self.base.iter().all(|&b| g.image(b) == b) {
            let p = *g.moved_points().first().expect("nonidentity perm moves a point");
            self.push_base_point(p);
        }
    }

    /// Strong generators that fix the first `level` base points.
    fn gens_at(&self, level: usize) -> Vec<Perm> {
        self.strong
            .iter()
            .filter(|g| self.base[..level].iter().all(|&b| g.image(b) == b))
            .cloned()
            .collect()
    }

    fn rebuild_transversal(&mut self, level: usize) {
        let gens = self.gens_at(level);
        let base = self.levels[level].base;
        let mut transversal = BTreeMap::new();
        transversal.insert(base, Perm::identity(self.degree));
        let mut frontier = alloc::vec![base];
        while let Some(p) = frontier.pop() {
            let rep = transversal[&p].clone();
            for g in &gens {
                let q = g.image(p);
                if !transversal.contains_key(&q) {
                    transversal.insert(q, rep.compose(g));
                    frontier.push(q);
                }
            }
        }
        self.levels[level].transversal = transversal;
    }

    /// Strips `g` through levels `from..`; returns the residue and the
    /// level at which sifting stopped (`base.len()` when it ran off the
    /// end).
    fn sift_from(&self, from: usize, g: &Perm) -> (Perm, usize) {
        let mut residue = g.clone();
        for level in from..self.levels.len() {
            let p = residue.image(self.levels[level].base);
            match self.levels[level].transversal.get(&p) {
                Some(rep) => residue = residue.compose(&rep.inverse()),
                None => return (residue, level),
            }
        }
        (residue, self.levels.len())
    }

    fn complete_level(&mut self, level: usize) {
        'restart: loop {
            self.rebuild_transversal(level);
            let gens = self.gens_at(level);
            let points: Vec<u32> = self.levels[level].transversal.keys().cloned().collect();
            for p in points {
                let rep = self.levels[level].transversal[&p].clone();
                for g in &gens {
                    let q = g.image(p);
                    let rep_q = self.levels[level].transversal[&q].clone();
                    let schreier = rep.compose(g).compose(&rep_q.inverse());
                    let (residue, stopped) = self.sift_from(level + 1, &schreier);
                    if !residue.is_identity() {
                        self.ensure_base_for(&residue);
                        self.strong.push(residue);
                        for l in ((level + 1)..=stopped.min(self.levels.len() - 1)).rev() {
                            self.complete_level(l);
                        }
                        continue 'restart;
                    }
                }
            }
            return;
        }
    }

    fn order(&self) -> u64 {
        self.levels
            .iter()
            .map(|l| l.transversal.len() as u64)
            .product()
    }

    fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift_from(0, p);
        residue.is_identity()
    }
}

#[derive(Debug)]
struct Inner {
    degree: usize,
    gens: Vec<Perm>,
    chain: Chain,
    order: u64,
}

/// A finite permutation group with a stabilizer chain computed at
/// construction. Clones share the chain.
#[derive(Clone, Debug)]
pub struct Group(Arc<Inner>);

impl Group {
    pub fn trivial(degree: usize) -> Group {
        Group::generate(degree, &[]).expect("trivial group")
    }

    /// The group generated by `gens`, all of degree `degree`.
    pub fn generate(degree: usize, gens: &[Perm]) -> Result<Group, Error> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::MixedDegree {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(Group::with_base(degree, gens, &[]))
    }

    /// Like [`Group::generate`] but forces the base to start with
    /// `prescribed` (used for pointwise stabilizers and preimage search).
    pub(crate) fn with_prescribed_base(degree: usize, gens: &[Perm], prescribed: &[u32]) -> Group {
        Group::with_base(degree, gens, prescribed)
    }

    fn with_base(degree: usize, gens: &[Perm], prescribed: &[u32]) -> Group {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let chain = Chain::build(degree, &gens, prescribed);
        let order = chain.order();
        Group(Arc::new(Inner {
            degree,
            gens,
            chain,
            order,
        }))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.0.gens
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn is_trivial(&self) -> bool {
        self.0.order == 1
    }

    /// Membership via sifting. A permutation of the wrong degree is never
    /// a member.
    pub fn contains(&self, p: &Perm) -> bool {
        self.0.chain.contains(p)
    }

    /// Membership with the degree precondition made explicit.
    pub fn contains_checked(&self, p: &Perm) -> Result<bool, Error> {
        if p.degree() != self.degree() {
            return Err(Error::MixedDegree {
                expected: self.degree(),
                found: p.degree(),
            });
        }
        Ok(self.contains(p))
    }

    pub fn contains_group(&self, other: &Group) -> bool {
        other.gens().iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &Group) -> bool {
        self.degree() == other.degree()
            && self.order() == other.order()
            && self.contains_group(other)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.gens();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Deterministic iteration over all elements.
    pub fn elements(&self) -> Elements<'_> {
        Elements::new(self)
    }

    /// All elements, sorted by image array.
    pub fn sorted_elements(&self) -> Vec<Perm> {
        let mut v: Vec<Perm> = self.elements().collect();
        v.sort();
        v
    }

    pub(crate) fn base_len(&self) -> usize {
        self.0.chain.levels.len()
    }

    pub(crate) fn base_points(&self) -> Vec<u32> {
        self.0.chain.base.clone()
    }

    /// Sorted orbit of the base point at `level`.
    pub(crate) fn orbit_points(&self, level: usize) -> Vec<u32> {
        self.0.chain.levels[level].transversal.keys().cloned().collect()
    }

    /// Transversal representative mapping `base[level]` to `p`.
    pub(crate) fn transversal_rep(&self, level: usize, p: u32) -> &Perm {
        &self.0.chain.levels[level].transversal[&p]
    }

    /// The pointwise stabilizer of `points`.
    pub fn pointwise_stabilizer(&self, points: &[u32]) -> Group {
        let rebased = Chain::build(self.degree(), self.gens(), points);
        let fixed: Vec<Perm> = rebased
            .strong
            .iter()
            .filter(|g| points.iter().all(|&p| g.image(p) == p))
            .cloned()
            .collect();
        Group::generate(self.degree(), &fixed).expect("stabilizer generators share degree")
    }

    /// The group generated by this group's generators together with `extra`.
    pub fn join(&self, extra: &[Perm]) -> Result<Group, Error> {
        let mut gens = self.gens().to_vec();
        gens.extend_from_slice(extra);
        Group::generate(self.degree(), &gens)
    }

    /// Conjugate group `self^g`.
    pub fn conjugate_by(&self, g: &Perm) -> Group {
        let gens: Vec<Perm> = self.gens().iter().map(|h| h.conjugate(g)).collect();
        Group::generate(self.degree(), &gens).expect("conjugation preserves degree")
    }

    /// Direct product acting on the disjoint union of the two point sets.
    pub fn direct_product(a: &Group, b: &Group) -> Group {
        let da = a.degree();
        let db = b.degree();
        let mut gens = Vec::new();
        for g in a.gens() {
            let mut images: Vec<u32> = g.images().to_vec();
            images.extend((da..da + db).map(|i| i as u32));
            gens.push(Perm::from_images(images).expect("embedding is a bijection"));
        }
        for g in b.gens() {
            let mut images: Vec<u32> = (0..da as u32).collect();
            images.extend(g.images().iter().map(|&i| i + da as u32));
            gens.push(Perm::from_images(images).expect("embedding is a bijection"));
        }
        Group::generate(da + db, &gens).expect("product generators share degree")
    }

    /// The wreath product `base ≀ C_p` in its imprimitive action on
    /// `p * base.degree()` points: `p` copies of the base action plus a
    /// cyclic shift of the copies.
    pub fn wreath_cyclic(base: &Group, p: usize) -> Group {
        let d = base.degree();
        let n = d * p;
        let mut gens = Vec::new();
        for g in base.gens() {
            let mut images: Vec<u32> = (0..n as u32).collect();
            for x in 0..d {
                images[x] = g.image(x as u32);
            }
            gens.push(Perm::from_images(images).expect("copy is a bijection"));
        }
        if p > 1 {
            let images: Vec<u32> = (0..n)
                .map(|x| {
                    let (block, offset) = (x / d, x % d);
                    (((block + 1) % p) * d + offset) as u32
                })
                .collect();
            gens.push(Perm::from_images(images).expect("shift is a bijection"));
        }
        Group::generate(n, &gens).expect("wreath generators share degree")
    }
}

/// Iterator over group elements as products of transversal representatives.
pub struct Elements<'a> {
    group: &'a Group,
    /// Per level, the sorted orbit points; `indices` walks the product.
    orbits: Vec<Vec<u32>>,
    indices: Vec<usize>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(group: &'a Group) -> Self {
        let orbits: Vec<Vec<u32>> = group
            .0
            .chain
            .levels
            .iter()
            .map(|l| l.transversal.keys().cloned().collect())
            .collect();
        let indices = alloc::vec![0; orbits.len()];
        Elements {
            group,
            orbits,
            indices,
            done: false,
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        if self.done {
            return None;
        }
        let chain = &self.group.0.chain;
        // g = s_deepest * … * t_level0, deepest applied first.
        let mut g = Perm::identity(self.group.degree());
        for (level, &idx) in self.indices.iter().enumerate().rev() {
            let p = self.orbits[level][idx];
            g = g.compose(&chain.levels[level].transversal[&p]);
        }
        // Advance odometer, deepest level fastest.
        let mut level = self.indices.len();
        loop {
            if level == 0 {
                self.done = true;
                break;
            }
            level -= 1;
            self.indices[level] += 1;
            if self.indices[level] < self.orbits[level].len() {
                break;
            }
            self.indices[level] = 0;
        }
        if self.indices.is_empty() {
            self.done = true;
        }
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Perm {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    /// Naive closure: repeated multiplication until stable.
    fn naive_closure(degree: usize, gens: &[Perm]) -> BTreeSet<Perm> {
        let mut set: BTreeSet<Perm> = BTreeSet::new();
        set.insert(Perm::identity(degree));
        let mut frontier: Vec<Perm> = vec![Perm::identity(degree)];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.compose(g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    #[test]
    fn sym3_from_transpositions() {
        let g = Group::generate(3, &[cyc(3, &[&[0, 1]]), cyc(3, &[&[1, 2]])]).unwrap();
        assert_eq!(g.order(), 6);
        let closure = naive_closure(3, g.gens());
        assert_eq!(closure.len(), 6);
        let elements: BTreeSet<Perm> = g.elements().collect();
        assert_eq!(elements, closure);
    }

    #[test]
    fn empty_generating_set_is_trivial() {
        let g = Group::generate(4, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Perm::identity(4)));
    }

    #[test]
    fn alt5_order_60() {
        let g = Group::generate(5, &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(naive_closure(5, g.gens()).len(), 60);
        assert!(!g.contains(&cyc(5, &[&[0, 1]])));
    }

    #[test]
    fn membership_in_cyclic_group() {
        let g = Group::generate(4, &[cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert!(g.contains(&cyc(4, &[&[0, 2], &[1, 3]])));
        assert!(!g.contains(&cyc(4, &[&[0, 1]])));
    }

    #[test]
    fn mixed_degrees_rejected() {
        let err = Group::generate(3, &[cyc(4, &[&[0, 1]])]).unwrap_err();
        assert!(matches!(err, crate::Error::MixedDegree { .. }));
    }

    #[test]
    fn chain_order_matches_naive_closure_on_sym4() {
        let g = Group::generate(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(naive_closure(4, g.gens()).len(), 24);
        for e in naive_closure(4, g.gens()) {
            assert!(g.contains(&e));
        }
    }

    #[test]
    fn pointwise_stabilizer_of_first_point_in_sym4() {
        let g = Group::generate(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let stab = g.pointwise_stabilizer(&[0]);
        assert_eq!(stab.order(), 6);
        assert!(stab.gens().iter().all(|p| p.image(0) == 0));
    }

    #[test]
    fn wreath_product_of_alt5_has_order_7200() {
        let a5 = Group::generate(5, &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]).unwrap();
        let w = Group::wreath_cyclic(&a5, 2);
        assert_eq!(w.degree(), 10);
        assert_eq!(w.order(), 7200);
    }

    #[test]
    fn direct_product_order_multiplies() {
        let a5 = Group::generate(5, &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])]).unwrap();
        let c2 = Group::generate(2, &[cyc(2, &[&[0, 1]])]).unwrap();
        assert_eq!(Group::direct_product(&a5, &c2).order(), 120);
    }

    #[test]
    fn element_iteration_yields_each_element_once() {
        let g = Group::generate(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let all: Vec<Perm> = g.elements().collect();
        assert_eq!(all.len(), 24);
        let set: BTreeSet<Perm> = all.into_iter().collect();
        assert_eq!(set.len(), 24);
    }
}
