//! A built-in corpus of small groups as Cayley tables: every group of
//! order at most 24 (74 in all) plus the dihedral, dicyclic, symmetric
//! and alternating families up to order 100.
//!
//! Tables are built from a handful of combinators; the few groups
//! without a convenient cyclic-by-cyclic shape are realized as explicit
//! permutation groups first. Every entry records whether the group is
//! soluble (so callers can work with the soluble slice).

use carter_core::{Group, Perm};

use crate::format::CayleyTable;

pub struct CorpusEntry {
    pub name: &'static str,
    pub table: CayleyTable,
    pub soluble: bool,
}

fn table(rows: Vec<Vec<u32>>) -> CayleyTable {
    CayleyTable::new(rows).expect("construction yields a Latin square")
}

/// `C_n ⋊ C_m` with the generator of `C_m` acting as `a -> a^k`;
/// requires `k^m = 1 (mod n)`. Element `(i, j) = a^i b^j` has index
/// `i + n·j`.
pub fn semidirect_cyclic(n: usize, m: usize, k: usize) -> CayleyTable {
    let mut pw = 1usize;
    for _ in 0..m {
        pw = pw * k % n;
    }
    assert_eq!(pw % n, 1 % n, "action must have order dividing m");
    // b^j a = a^(k^j) b^j; precompute k^j mod n.
    let mut kpow = vec![1usize; m];
    for j in 1..m {
        kpow[j] = kpow[j - 1] * k % n;
    }
    let size = n * m;
    let mut rows = Vec::with_capacity(size);
    for e in 0..size {
        let (i, j) = (e % n, e / n);
        let mut row = Vec::with_capacity(size);
        for f in 0..size {
            let (i2, j2) = (f % n, f / n);
            let ii = (i + i2 * kpow[j]) % n;
            let jj = (j + j2) % m;
            row.push((ii + n * jj) as u32);
        }
        rows.push(row);
    }
    table(rows)
}

pub fn cyclic(n: usize) -> CayleyTable {
    semidirect_cyclic(n, 1, 1)
}

/// Dihedral group of order `2n`, `n >= 3`.
pub fn dihedral(n: usize) -> CayleyTable {
    semidirect_cyclic(n, 2, n - 1)
}

/// Dicyclic group of order `4n`: `a` of order `2n`, `b² = aⁿ`,
/// `b⁻¹ab = a⁻¹`. For `n` a power of 2 this is the generalized
/// quaternion group. Element `a^i b^ε` has index `i + 2n·ε`.
pub fn dicyclic(n: usize) -> CayleyTable {
    assert!(n >= 2);
    let m = 2 * n;
    let size = 4 * n;
    let mut rows = Vec::with_capacity(size);
    for e in 0..size {
        let (i, eps) = (e % m, e / m);
        let mut row = Vec::with_capacity(size);
        for f in 0..size {
            let (j, delta) = (f % m, f / m);
            let idx = if eps == 0 {
                (i + j) % m + m * delta
            } else if delta == 0 {
                (m + i - j) % m + m
            } else {
                (m + i - j + n) % m
            };
            row.push(idx as u32);
        }
        rows.push(row);
    }
    table(rows)
}

pub fn direct(a: &CayleyTable, b: &CayleyTable) -> CayleyTable {
    let (n, m) = (a.order(), b.order());
    let mut rows = Vec::with_capacity(n * m);
    for e in 0..n * m {
        let (i, j) = (e % n, e / n);
        let mut row = Vec::with_capacity(n * m);
        for f in 0..n * m {
            let (i2, j2) = (f % n, f / n);
            row.push((a.product(i, i2) + n * b.product(j, j2)) as u32);
        }
        rows.push(row);
    }
    table(rows)
}

fn perm(degree: usize, cycles: &[&[u32]]) -> Perm {
    let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
    Perm::from_cycles(degree, &cycles).expect("valid cycles")
}

fn from_perms(degree: usize, gens: &[Perm], expected_order: u64) -> CayleyTable {
    let g = Group::generate(degree, gens).expect("consistent degrees");
    assert_eq!(g.order(), expected_order);
    CayleyTable::from_perm_group(&g)
}

/// 2x2 matrices over F_3 of determinant 1 acting on the 8 nonzero row
/// vectors, ordered lexicographically.
fn sl2_3() -> CayleyTable {
    let points: Vec<(u32, u32)> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (x, y)))
        .filter(|&(x, y)| (x, y) != (0, 0))
        .collect();
    let act = |m: [[u32; 2]; 2]| {
        let images: Vec<u32> = points
            .iter()
            .map(|&(x, y)| {
                let v = ((x * m[0][0] + y * m[1][0]) % 3, (x * m[0][1] + y * m[1][1]) % 3);
                points.iter().position(|&w| w == v).unwrap() as u32
            })
            .collect();
        Perm::from_images(images).expect("matrix action is a bijection")
    };
    let gens = [act([[1, 1], [0, 1]]), act([[0, 2], [1, 0]])];
    from_perms(8, &gens, 24)
}

/// The Klein four-group extended by a 4-cycle that swaps its two
/// factors.
fn klein_by_c4() -> CayleyTable {
    let gens = [
        perm(8, &[&[0, 1]]),
        perm(8, &[&[2, 3]]),
        perm(8, &[&[4, 5, 6, 7], &[0, 2], &[1, 3]]),
    ];
    from_perms(8, &gens, 16)
}

/// Central product of C4 and the dihedral group of order 8, realized as
/// a quotient of their direct product by the diagonal central
/// involution.
fn central_product_c4_d8() -> CayleyTable {
    let g = Group::generate(
        8,
        &[perm(8, &[&[0, 1, 2, 3]]), perm(8, &[&[4, 5, 6, 7]]), perm(8, &[&[4, 6]])],
    )
    .expect("valid generators");
    assert_eq!(g.order(), 32);
    let diag = carter_core::Subgroup::new(&g, &[perm(8, &[&[0, 2], &[1, 3], &[4, 6], &[5, 7]])])
        .expect("central diagonal involution");
    let q = carter_core::quotient(&g, &diag).expect("central subgroups are normal");
    assert_eq!(q.image_group().order(), 16);
    CayleyTable::from_perm_group(q.image_group())
}

/// Generalized dihedral group over C3 x C3.
fn dihedral_on_c3_squared() -> CayleyTable {
    let gens = [
        perm(6, &[&[0, 1, 2]]),
        perm(6, &[&[3, 4, 5]]),
        perm(6, &[&[1, 2], &[4, 5]]),
    ];
    from_perms(6, &gens, 18)
}

/// The subgroup of Sym3 x D8 pairing odd permutations with the rotation
/// coset of the Klein subgroup of D8 (the fiber product over C2 whose D8
/// kernel is generated by the two reflections fixing an axis).
fn sym3_fiber_d8() -> CayleyTable {
    let gens = [
        perm(7, &[&[0, 1, 2]]),
        perm(7, &[&[3, 5]]),
        perm(7, &[&[4, 6]]),
        perm(7, &[&[0, 1], &[3, 4, 5, 6]]),
    ];
    from_perms(7, &gens, 24)
}

fn sym(n: usize) -> CayleyTable {
    let mut gens = vec![perm(n, &[&[0, 1]])];
    if n > 2 {
        let big: Vec<u32> = (0..n as u32).collect();
        gens.push(Perm::from_cycles(n, &[big]).unwrap());
    }
    let order: u64 = (1..=n as u64).product();
    from_perms(n, &gens, order)
}

fn alt(n: usize) -> CayleyTable {
    let mut gens = vec![perm(n, &[&[0, 1, 2]])];
    let big: Vec<u32> = if n % 2 == 1 {
        (0..n as u32).collect()
    } else {
        (1..n as u32).collect()
    };
    gens.push(Perm::from_cycles(n, &[big]).unwrap());
    let order: u64 = (1..=n as u64).product::<u64>() / 2;
    from_perms(n, &gens, order)
}

/// Every group of order at most 24, one entry per isomorphism class.
pub fn groups_up_to_24() -> Vec<CorpusEntry> {
    let c = |n: usize| cyclic(n);
    let mut out: Vec<(&'static str, CayleyTable)> = vec![
        ("C1", c(1)),
        ("C2", c(2)),
        ("C3", c(3)),
        ("C4", c(4)),
        ("C2xC2", direct(&c(2), &c(2))),
        ("C5", c(5)),
        ("C6", c(6)),
        ("D6", dihedral(3)),
        ("C7", c(7)),
        ("C8", c(8)),
        ("C4xC2", direct(&c(4), &c(2))),
        ("C2xC2xC2", direct(&direct(&c(2), &c(2)), &c(2))),
        ("D8", dihedral(4)),
        ("Q8", dicyclic(2)),
        ("C9", c(9)),
        ("C3xC3", direct(&c(3), &c(3))),
        ("C10", c(10)),
        ("D10", dihedral(5)),
        ("C11", c(11)),
        ("C12", c(12)),
        ("C6xC2", direct(&c(6), &c(2))),
        ("D12", dihedral(6)),
        ("A4", alt(4)),
        ("Dic12", dicyclic(3)),
        ("C13", c(13)),
        ("C14", c(14)),
        ("D14", dihedral(7)),
        ("C15", c(15)),
        ("C16", c(16)),
        ("C4xC4", direct(&c(4), &c(4))),
        ("(C2xC2):C4", klein_by_c4()),
        ("C4:C4", semidirect_cyclic(4, 4, 3)),
        ("C8xC2", direct(&c(8), &c(2))),
        ("M16", semidirect_cyclic(8, 2, 5)),
        ("D16", dihedral(8)),
        ("SD16", semidirect_cyclic(8, 2, 3)),
        ("Q16", dicyclic(4)),
        ("C4xC2xC2", direct(&direct(&c(4), &c(2)), &c(2))),
        ("D8xC2", direct(&dihedral(4), &c(2))),
        ("Q8xC2", direct(&dicyclic(2), &c(2))),
        ("C4oD8", central_product_c4_d8()),
        ("C2^4", direct(&direct(&c(2), &c(2)), &direct(&c(2), &c(2)))),
        ("C17", c(17)),
        ("C18", c(18)),
        ("C6xC3", direct(&c(6), &c(3))),
        ("D18", dihedral(9)),
        ("D6xC3", direct(&dihedral(3), &c(3))),
        ("Dih(C3xC3)", dihedral_on_c3_squared()),
        ("C19", c(19)),
        ("C20", c(20)),
        ("C10xC2", direct(&c(10), &c(2))),
        ("D20", dihedral(10)),
        ("Dic20", dicyclic(5)),
        ("F20", semidirect_cyclic(5, 4, 2)),
        ("C21", c(21)),
        ("C7:C3", semidirect_cyclic(7, 3, 2)),
        ("C22", c(22)),
        ("D22", dihedral(11)),
        ("C23", c(23)),
        ("C24", c(24)),
        ("C12xC2", direct(&c(12), &c(2))),
        ("C6xC2xC2", direct(&direct(&c(6), &c(2)), &c(2))),
        ("C3:C8", semidirect_cyclic(3, 8, 2)),
        ("SL(2,3)", sl2_3()),
        ("Dic24", dicyclic(6)),
        ("D6xC4", direct(&dihedral(3), &c(4))),
        ("D24", dihedral(12)),
        ("Dic12xC2", direct(&dicyclic(3), &c(2))),
        ("(C6xC2):C2", sym3_fiber_d8()),
        ("D8xC3", direct(&dihedral(4), &c(3))),
        ("Q8xC3", direct(&dicyclic(2), &c(3))),
        ("S4", sym(4)),
        ("A4xC2", direct(&alt(4), &c(2))),
        ("D6xC2xC2", direct(&direct(&dihedral(3), &c(2)), &c(2))),
    ];
    let entries = out
        .drain(..)
        .map(|(name, table)| CorpusEntry {
            name,
            table,
            soluble: true,
        })
        .collect();
    entries
}

/// Dihedral, dicyclic, symmetric and alternating groups of order 26 to
/// 100 (the smaller family members already appear in the order <= 24
/// list).
pub fn families_to_100() -> Vec<CorpusEntry> {
    const DIHEDRAL: [(&str, usize); 38] = [
        ("D26", 13), ("D28", 14), ("D30", 15), ("D32", 16), ("D34", 17),
        ("D36", 18), ("D38", 19), ("D40", 20), ("D42", 21), ("D44", 22),
        ("D46", 23), ("D48", 24), ("D50", 25), ("D52", 26), ("D54", 27),
        ("D56", 28), ("D58", 29), ("D60", 30), ("D62", 31), ("D64", 32),
        ("D66", 33), ("D68", 34), ("D70", 35), ("D72", 36), ("D74", 37),
        ("D76", 38), ("D78", 39), ("D80", 40), ("D82", 41), ("D84", 42),
        ("D86", 43), ("D88", 44), ("D90", 45), ("D92", 46), ("D94", 47),
        ("D96", 48), ("D98", 49), ("D100", 50),
    ];
    const DICYCLIC: [(&str, usize); 19] = [
        ("Dic28", 7), ("Q32", 8), ("Dic36", 9), ("Dic40", 10), ("Dic44", 11),
        ("Dic48", 12), ("Dic52", 13), ("Dic56", 14), ("Dic60", 15), ("Q64", 16),
        ("Dic68", 17), ("Dic72", 18), ("Dic76", 19), ("Dic80", 20), ("Dic84", 21),
        ("Dic88", 22), ("Dic92", 23), ("Dic96", 24), ("Dic100", 25),
    ];
    let mut out = Vec::new();
    for (name, n) in DIHEDRAL {
        out.push(CorpusEntry {
            name,
            table: dihedral(n),
            soluble: true,
        });
    }
    for (name, n) in DICYCLIC {
        out.push(CorpusEntry {
            name,
            table: dicyclic(n),
            soluble: true,
        });
    }
    out.push(CorpusEntry {
        name: "A5",
        table: alt(5),
        soluble: false,
    });
    out
}

/// The full built-in corpus.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = groups_up_to_24();
    out.extend(families_to_100());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use carter_core::ops;
    use std::collections::BTreeSet;

    #[test]
    fn counts_per_order_match_the_classification() {
        // Number of isomorphism classes for each order up to 24.
        let expected: [usize; 24] = [
            1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15,
        ];
        let entries = groups_up_to_24();
        assert_eq!(entries.len(), 74);
        for (i, &want) in expected.iter().enumerate() {
            let got = entries
                .iter()
                .filter(|e| e.table.order() == i + 1)
                .count();
            assert_eq!(got, want, "order {}", i + 1);
        }
    }

    #[test]
    fn entries_of_equal_order_are_pairwise_non_isomorphic() {
        // Isomorphism is separated by a cheap invariant tuple; this also
        // guards against accidentally inserting the same group twice.
        let mut seen = BTreeSet::new();
        for e in groups_up_to_24() {
            let g = e.table.to_group().unwrap();
            let classes = carter_core::all_subgroup_classes(&g, 400).unwrap();
            let total: u64 = classes.iter().map(|c| c.class_size).sum();
            let key = (
                g.order(),
                g.is_abelian(),
                ops::element_order_stats(&g),
                ops::center(&g).order(),
                ops::derived_subgroup(&g).order(),
                ops::conjugacy_classes(&g).len(),
                classes.len(),
                total,
            );
            assert!(seen.insert(key), "duplicate invariants for {}", e.name);
        }
    }

    #[test]
    fn tables_realize_groups_of_the_stated_order() {
        for e in corpus() {
            let g = e.table.to_group().unwrap();
            assert_eq!(g.order(), e.table.order() as u64, "{}", e.name);
            assert_eq!(ops::is_soluble(&g), e.soluble, "{}", e.name);
        }
    }

    #[test]
    fn spot_checks_on_structure() {
        let q8 = dicyclic(2).to_group().unwrap();
        assert_eq!(q8.elements().filter(|x| x.order() == 2).count(), 1);
        assert!(ops::is_nilpotent(&q8));
        let s4 = sym(4).to_group().unwrap();
        assert!(!ops::is_nilpotent(&s4));
        assert_eq!(ops::derived_subgroup(&s4).order(), 12);
        let f20 = semidirect_cyclic(5, 4, 2).to_group().unwrap();
        assert_eq!(ops::center(&f20).order(), 1);
        let frob21 = semidirect_cyclic(7, 3, 2).to_group().unwrap();
        assert_eq!(ops::derived_subgroup(&frob21).order(), 7);
        let sl = sl2_3().to_group().unwrap();
        assert_eq!(ops::center(&sl).order(), 2);
        assert_eq!(ops::derived_subgroup(&sl).order(), 8);
    }

    #[test]
    fn family_orders_stay_at_or_below_100() {
        for e in families_to_100() {
            assert!(e.table.order() >= 26 && e.table.order() <= 100, "{}", e.name);
        }
    }
}

