//! Brute-force reference computations on raw multiplication tables.
//!
//! Nothing here calls into the library: subgroups are found by testing
//! every subset of the group for closure, and "the subgroup generated by S"
//! is the intersection of all subgroups containing S.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// A multiplication table with the identity at index 0.
#[derive(Clone, Debug)]
pub struct Table {
    pub rows: Vec<Vec<usize>>,
}

impl Table {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.rows[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    pub fn comm(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ainv_binv = self.mul(self.inv(a), self.inv(b));
        self.mul(ab, ainv_binv)
    }

    /// Closes permutations of `0..degree` under composition `(a·b)(i) = a[b[i]]`,
    /// listing the identity first and the rest in lexicographic order.
    pub fn from_permutations(gens: &[Vec<usize>]) -> (Self, Vec<Vec<usize>>) {
        let degree = gens[0].len();
        let id: Vec<usize> = (0..degree).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(id.clone());
        loop {
            let before = seen.len();
            let snapshot: Vec<Vec<usize>> = seen.iter().cloned().collect();
            for a in &snapshot {
                for g in gens {
                    seen.insert((0..degree).map(|i| a[g[i]]).collect());
                }
            }
            if seen.len() == before {
                break;
            }
        }
        let mut elems: Vec<Vec<usize>> = vec![id.clone()];
        elems.extend(seen.into_iter().filter(|p| *p != id));
        let index = |p: &Vec<usize>| elems.iter().position(|q| q == p).unwrap();
        let rows = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| index(&(0..degree).map(|i| a[b[i]]).collect()))
                    .collect()
            })
            .collect();
        (Table { rows }, elems)
    }

    pub fn cyclic(n: usize) -> Self {
        Table {
            rows: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        }
    }

    /// Pairs `(a, b)` indexed `a * |other| + b`.
    pub fn product(&self, other: &Table) -> Self {
        let m = other.order();
        let n = self.order() * m;
        Table {
            rows: (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                        .collect()
                })
                .collect(),
        }
    }

    /// Quaternion units in the order 1, -1, i, -i, j, -j, k, -k.
    pub fn quaternion() -> Self {
        // unit u in {1, i, j, k} = 0..4 with sign s; index = 2u + s.
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let rows = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (u, neg) = unit_mul(x / 2, y / 2);
                        let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                        2 * u + sign as usize
                    })
                    .collect()
            })
            .collect();
        Table { rows }
    }

    fn is_subgroup(&self, s: &[bool]) -> bool {
        s[0] && (0..self.order())
            .all(|a| !s[a] || (0..self.order()).all(|b| !s[b] || s[self.mul(a, b)]))
    }

    pub fn all_subgroups(&self) -> Vec<Vec<bool>> {
        let n = self.order();
        assert!(n <= 16, "subset enumeration is for tiny groups only");
        (0u32..1 << n)
            .map(|mask| (0..n).map(|i| mask & (1 << i) != 0).collect::<Vec<_>>())
            .filter(|s| self.is_subgroup(s))
            .collect()
    }

    pub fn is_normal(&self, s: &[bool]) -> bool {
        (0..self.order()).all(|g| {
            (0..self.order()).all(|x| !s[x] || s[self.mul(self.mul(g, x), self.inv(g))])
        })
    }

    /// Intersection of all (normal) subgroups containing `gens`.
    pub fn generated(&self, gens: &[usize], normal: bool) -> Vec<usize> {
        let n = self.order();
        let mut acc = vec![true; n];
        for s in self.all_subgroups() {
            if gens.iter().all(|&g| s[g]) && (!normal || self.is_normal(&s)) {
                for i in 0..n {
                    acc[i] &= s[i];
                }
            }
        }
        (0..n).filter(|&i| acc[i]).collect()
    }

    pub fn commutator_subgroup(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let gens: Vec<usize> = a
            .iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.comm(x, y))
            .collect();
        self.generated(&gens, false)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    pub fn everything(&self) -> Vec<usize> {
        (0..self.order()).collect()
    }
}

pub fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

pub fn sign(p: &[usize]) -> usize {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}

/// S₃ on `{0, 1, 2}` generated by a transposition and a 3-cycle.
pub fn s3() -> (Table, Vec<Vec<usize>>) {
    Table::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]])
}
