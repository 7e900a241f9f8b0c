//! Permutations of `{0, …, degree-1}` in image-array form.
//!
//! Composition is left-to-right: `(a * b)` applies `a` first, then `b`,
//! so `(a * b).image(x) == b.image(a.image(x))`. Conjugation `h^g` is
//! `g⁻¹ h g` in that order.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::MalformedPermutation);
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 0-indexed points. Points may repeat across cycles only if the
    /// cycles agree; repetition inside a cycle is rejected.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, Error> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = alloc::vec![false; degree];
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] as usize;
                let to = cycle[(w + 1) % cycle.len()];
                if from >= degree || (to as usize) >= degree || moved[from] {
                    return Err(Error::MalformedPermutation);
                }
                images[from] = to;
                moved[from] = true;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// `self` applied first, then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&p| other.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u32;
        }
        Perm { images }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        g.inverse().compose(self).compose(g)
    }

    /// `self⁻¹ g⁻¹ self g`.
    pub fn commutator(&self, g: &Perm) -> Perm {
        self.inverse().compose(&g.inverse()).compose(self).compose(g)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for cycle in self.cycles() {
            order = lcm(order, cycle.len() as u64);
        }
        order
    }

    /// Nontrivial cycles, each starting at its least point, sorted by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] || self.image(start) == start {
                seen[start as usize] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p as usize] {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn moved_points(&self) -> Vec<u32> {
        (0..self.degree() as u32).filter(|&p| self.image(p) != p).collect()
    }

    /// 1-indexed cycle notation, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        use core::fmt::Write;
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                let _ = write!(s, "{}", p + 1);
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(images: &[u32]) -> Perm {
        Perm::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijection() {
        assert_eq!(
            Perm::from_images(vec![0, 0, 1]),
            Err(Error::MalformedPermutation)
        );
        assert_eq!(Perm::from_images(vec![0, 3]), Err(Error::MalformedPermutation));
    }

    #[test]
    fn compose_applies_left_first() {
        let a = p(&[1, 0, 2]); // (0 1)
        let b = p(&[0, 2, 1]); // (1 2)
        let ab = a.compose(&b);
        assert_eq!(ab.image(0), 2); // 0 -> 1 -> 2
    }

    #[test]
    fn inverse_cancels() {
        let a = p(&[2, 0, 1, 3]);
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn cycle_roundtrip() {
        let a = Perm::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(a.order(), 6);
        assert_eq!(a.cycle_string(), "(1 2 3)(4 5)");
        assert_eq!(Perm::identity(4).cycle_string(), "()");
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let h = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let g = Perm::from_cycles(3, &[vec![0, 2]]).unwrap();
        // (0 1)^(0 2) = (2 1)
        assert_eq!(h.conjugate(&g), Perm::from_cycles(3, &[vec![1, 2]]).unwrap());
    }
}
