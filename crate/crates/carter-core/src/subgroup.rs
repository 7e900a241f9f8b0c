//! Subgroups carried together with their parent group.

use alloc::vec::Vec;

use crate::error::Error;
use crate::group::Group;
use crate::perm::Perm;

/// A subgroup given by generators inside a parent group. All lattice work
/// flows through this handle; the subgroup keeps its own stabilizer chain.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Group,
    group: Group,
}

impl Subgroup {
    pub fn new(parent: &Group, gens: &[Perm]) -> Result<Subgroup, Error> {
        for g in gens {
            if g.degree() != parent.degree() {
                return Err(Error::MixedDegree {
                    expected: parent.degree(),
                    found: g.degree(),
                });
            }
            if !parent.contains(g) {
                return Err(Error::NotASubgroup);
            }
        }
        let group = Group::generate(parent.degree(), gens)?;
        Ok(Subgroup {
            parent: parent.clone(),
            group,
        })
    }

    /// Wraps an already-built group; the caller asserts containment.
    pub fn from_group(parent: &Group, group: Group) -> Result<Subgroup, Error> {
        if !parent.contains_group(&group) {
            return Err(Error::NotASubgroup);
        }
        Ok(Subgroup {
            parent: parent.clone(),
            group,
        })
    }

    pub fn trivial(parent: &Group) -> Subgroup {
        Subgroup {
            group: Group::trivial(parent.degree()),
            parent: parent.clone(),
        }
    }

    /// The parent seen as a subgroup of itself.
    pub fn whole(parent: &Group) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            group: parent.clone(),
        }
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn gens(&self) -> &[Perm] {
        self.group.gens()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.group.contains(p)
    }

    pub fn conjugate_by(&self, g: &Perm) -> Subgroup {
        Subgroup {
            parent: self.parent.clone(),
            group: self.group.conjugate_by(g),
        }
    }

    /// Same element set, regardless of the generating sets.
    pub fn equals(&self, other: &Subgroup) -> bool {
        self.group.equals(&other.group)
    }

    /// Canonical sort key: order first, then the sorted element list.
    /// Only for desk-scale subgroups.
    pub fn sort_key(&self) -> (u64, Vec<Perm>) {
        (self.order(), self.group.sorted_elements())
    }
}

/// A conjugacy class of subgroups, carried by one representative.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub class_size: u64,
}
