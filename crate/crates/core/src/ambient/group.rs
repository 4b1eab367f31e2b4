//! Finite groups as dense Cayley tables.
//!
//! Element 0 is always the identity. Permutation input is closed into a
//! table immediately, elements indexed in breadth-first word order.

use std::collections::{HashMap, HashSet};
use std::fmt;

use super::{check_cap, max_order, Ambient, ElementRepr, Fingerprint, Theory};
use crate::error::{Error, Result};

/// Structured description accepted by [`FiniteGroup::build`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Rows of the multiplication table; element 0 must be the identity.
    Table(Vec<Vec<usize>>),
    /// Permutations of `0..degree`, each given as the list of images.
    Permutations(Vec<Vec<usize>>),
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    gens: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order)
    }
}

/// Subgroup carrier as a bitset over element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    bits: Vec<u64>,
}

impl Subgroup {
    fn from_mask(mask: &[bool]) -> Self {
        let mut bits = vec![0u64; mask.len().div_ceil(64)];
        for (i, &m) in mask.iter().enumerate() {
            if m {
                bits[i / 64] |= 1 << (i % 64);
            }
        }
        Self { bits }
    }

    pub fn contains(&self, e: usize) -> bool {
        self.bits
            .get(e / 64)
            .is_some_and(|w| w & (1 << (e % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        for (wi, &w) in self.bits.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let t = w.trailing_zeros() as usize;
                out.push(wi * 64 + t);
                w &= w - 1;
            }
        }
        out
    }
}

impl FiniteGroup {
    pub fn build(spec: &GroupSpec) -> Result<Self> {
        match spec {
            GroupSpec::Table(rows) => Self::from_table(rows),
            GroupSpec::Permutations(gens) => Self::from_permutations(gens),
        }
    }

    /// Validates a Cayley table: identity at 0, inverses, associativity
    /// (all triples up to order 64, Light's test above).
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::BadSpec("empty Cayley table".into()));
        }
        check_cap(n as u64)?;
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadSpec(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::BadSpec(format!("entry {v} in row {i} is out of range")));
                }
                table.push(v as u32);
            }
        }
        for i in 0..n {
            if table[i] as usize != i || table[i * n] as usize != i {
                return Err(Error::AxiomViolation(
                    "element 0 is not a two-sided identity".into(),
                ));
            }
        }
        let mut inverse = vec![0u32; n];
        for i in 0..n {
            let inv = (0..n).find(|&j| table[i * n + j] == 0 && table[j * n + i] == 0);
            match inv {
                Some(j) => inverse[i] = j as u32,
                None => {
                    return Err(Error::AxiomViolation(format!("element {i} has no inverse")))
                }
            }
        }
        let mut g = Self {
            order: n,
            table,
            inverse,
            gens: Vec::new(),
        };
        g.gens = g.right_word_generators();
        g.check_associative()?;
        Ok(g)
    }

    pub(crate) fn from_table_unchecked(order: usize, table: Vec<u32>) -> Self {
        let mut inverse = vec![0u32; order];
        for i in 0..order {
            let j = (0..order)
                .find(|&j| table[i * order + j] == 0)
                .expect("group table rows are permutations");
            inverse[i] = j as u32;
        }
        let mut g = Self {
            order,
            table,
            inverse,
            gens: Vec::new(),
        };
        g.gens = g.greedy_generators();
        g
    }

    /// Closes permutation generators into a group. Element order: identity,
    /// then breadth-first by right multiplication with the generators.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<Self> {
        let degree = gens.first().map_or(0, |g| g.len());
        for (k, g) in gens.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::BadSpec(format!(
                    "permutation {k} has degree {}, expected {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &v in g {
                if v >= degree || seen[v] {
                    return Err(Error::BadSpec(format!("generator {k} is not a permutation")));
                }
                seen[v] = true;
            }
        }
        let cap = max_order();
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut next = 0;
        while next < elements.len() {
            for g in gens {
                let w = &elements[next];
                let y: Vec<usize> = g.iter().map(|&i| w[i]).collect();
                if !index.contains_key(&y) {
                    if elements.len() as u64 + 1 > cap {
                        return Err(Error::CapExceeded {
                            requested: elements.len() as u64 + 1,
                            cap,
                        });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            next += 1;
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let ab: Vec<usize> = b.iter().map(|&i| a[i]).collect();
                table.push(index[&ab] as u32);
            }
        }
        Ok(Self::from_table_unchecked(n, table))
    }

    pub fn cyclic(n: usize) -> Self {
        let n = n.max(1);
        let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
        Self::from_table_unchecked(n, table)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn conjugacy_class_sizes(&self) -> Vec<u64> {
        let mut seen = vec![false; self.order];
        let mut sizes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut size = 0;
            for g in 0..self.order {
                let c = self.mul(self.mul(g, x), self.inv(g));
                if !seen[c] {
                    seen[c] = true;
                    size += 1;
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        sizes
    }

    /// Invariant factors `d₁ | d₂ | …` of an abelian group.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let n = self.order as u64;
        let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for p in prime_factors(n) {
            // counts[k] = #{x : x^(p^k) = 1}; ratios give how many cyclic
            // factors have exponent >= k.
            let mut counts = vec![1u64];
            let mut k = 1u32;
            loop {
                let e = p.pow(k) as usize;
                let c = (0..self.order).filter(|&x| self.power(x, e) == 0).count() as u64;
                counts.push(c);
                if c == *counts.iter().rev().nth(1).unwrap() {
                    counts.pop();
                    break;
                }
                k += 1;
            }
            let at_least: Vec<u32> = counts
                .windows(2)
                .map(|w| ilog(w[1] / w[0], p))
                .collect();
            let mut exps = Vec::new();
            for (k, &r) in at_least.iter().enumerate() {
                let next = at_least.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(r - next) {
                    exps.push(k as u32 + 1);
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            per_prime.push((p, exps));
        }
        let len = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut factors: Vec<u64> = (0..len)
            .map(|i| {
                per_prime
                    .iter()
                    .map(|(p, e)| e.get(i).map_or(1, |&k| p.pow(k)))
                    .product()
            })
            .collect();
        factors.reverse();
        factors
    }

    fn power(&self, a: usize, e: usize) -> usize {
        let mut x = 0;
        for _ in 0..e {
            x = self.mul(x, a);
        }
        x
    }

    fn close(&self, gens: &[usize]) -> (Vec<bool>, Vec<usize>) {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut elems = vec![0usize];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        (mask, elems)
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let (mut mask, _) = self.close(&gens);
        for x in 0..self.order {
            if !mask[x] {
                gens.push(x);
                mask = self.close(&gens).0;
            }
        }
        gens
    }

    /// Generators reaching every element as a right word; only used before
    /// associativity is known.
    fn right_word_generators(&self) -> Vec<usize> {
        self.greedy_generators()
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let violation = |a: usize, b: usize, c: usize| {
            Error::AxiomViolation(format!(
                "associativity fails for ({a}, {b}, {c})"
            ))
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(violation(a, b, c));
                        }
                    }
                }
            }
        } else {
            // Light's test: checking the middle factor over generators suffices.
            for &g in &self.gens {
                for a in 0..n {
                    let ag = self.mul(a, g);
                    for c in 0..n {
                        if self.mul(ag, c) != self.mul(a, self.mul(g, c)) {
                            return Err(violation(a, g, c));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn map_bfs(&self, cod: &FiniteGroup, imgs: &[usize]) -> Option<Vec<usize>> {
        const UNSET: usize = usize::MAX;
        let mut map = vec![UNSET; self.order];
        map[0] = 0;
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (k, &g) in self.gens.iter().enumerate() {
                let y = self.mul(x, g);
                let v = cod.mul(map[x], imgs[k]);
                if map[y] == UNSET {
                    map[y] = v;
                    queue.push(y);
                } else if map[y] != v {
                    return None;
                }
            }
            i += 1;
        }
        Some(map)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ilog(mut v: u64, p: u64) -> u32 {
    let mut k = 0;
    while v > 1 {
        v /= p;
        k += 1;
    }
    k
}

impl Ambient for FiniteGroup {
    type Elem = usize;
    type Sub = Subgroup;
    type MapData = Vec<usize>;
    type ActionData = Vec<u32>;

    const THEORY: Theory = Theory::Group;
    const PEIFFER_CLOSURE_IS_IDEAL: bool = false;

    fn size(&self) -> u64 {
        self.order as u64
    }

    fn zero(&self) -> usize {
        0
    }

    fn op(&self, a: &usize, b: &usize) -> usize {
        self.mul(*a, *b)
    }

    fn neg(&self, a: &usize) -> usize {
        self.inv(*a)
    }

    fn conj(&self, a: &usize, b: &usize) -> usize {
        self.mul(self.mul(*a, *b), self.inv(*a))
    }

    fn commutator(&self, a: &usize, b: &usize) -> usize {
        self.mul(self.conj(a, b), self.inv(*b))
    }

    fn spanning(&self) -> Vec<usize> {
        (0..self.order).collect()
    }

    fn generators(&self) -> Vec<usize> {
        self.gens.clone()
    }

    fn elements(&self) -> Vec<usize> {
        (0..self.order).collect()
    }

    fn is_element(&self, e: &usize) -> bool {
        *e < self.order
    }

    fn repr(&self, e: &usize) -> ElementRepr {
        ElementRepr::Index(*e)
    }

    fn parse(&self, r: &ElementRepr) -> Result<usize> {
        match r {
            ElementRepr::Index(i) if *i < self.order => Ok(*i),
            ElementRepr::Index(i) => Err(Error::BadSpec(format!(
                "element index {i} out of range for a group of order {}",
                self.order
            ))),
            ElementRepr::Vector(_) => Err(Error::BadSpec(
                "group elements are referenced by index".into(),
            )),
        }
    }

    fn fingerprint(&self) -> Fingerprint {
        if self.is_abelian() {
            Fingerprint::AbelianGroup {
                order: self.order as u64,
                invariant_factors: self.invariant_factors(),
            }
        } else {
            Fingerprint::Group {
                order: self.order as u64,
                exponent: self.exponent() as u64,
                class_sizes: self.conjugacy_class_sizes(),
            }
        }
    }

    fn closure(&self, gens: &[usize], normal: bool) -> Subgroup {
        let mut gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        loop {
            let (mask, elems) = self.close(&gens);
            if !normal {
                return Subgroup::from_mask(&mask);
            }
            let mut extra = Vec::new();
            let mut pending = vec![false; self.order];
            for &a in &self.gens {
                for &h in &elems {
                    let c = self.conj(&a, &h);
                    if !mask[c] && !pending[c] {
                        pending[c] = true;
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return Subgroup::from_mask(&mask);
            }
            gens.extend(extra);
        }
    }

    fn sub_contains(&self, s: &Subgroup, e: &usize) -> bool {
        s.contains(*e)
    }

    fn sub_spanning(&self, s: &Subgroup) -> Vec<usize> {
        s.elements()
    }

    fn sub_size(&self, s: &Subgroup) -> u64 {
        s.len() as u64
    }

    fn meet(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup {
            bits: a.bits.iter().zip(&b.bits).map(|(x, y)| x & y).collect(),
        }
    }

    fn sub_object(&self, s: &Subgroup) -> (Self, Vec<usize>) {
        let elems = s.elements();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                table.push(pos[self.mul(a, b)] as u32);
            }
        }
        (Self::from_table_unchecked(m, table), elems)
    }

    fn quotient(&self, n: &Subgroup) -> (Self, Vec<usize>, Vec<usize>) {
        const UNSET: usize = usize::MAX;
        let members = n.elements();
        let mut class = vec![UNSET; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if class[x] == UNSET {
                let id = reps.len();
                reps.push(x);
                for &m in &members {
                    class[self.mul(x, m)] = id;
                }
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(class[self.mul(a, b)] as u32);
            }
        }
        (Self::from_table_unchecked(k, table), class, reps)
    }

    fn all_subobjects(&self) -> Vec<Subgroup> {
        let trivial = self.closure(&[], false);
        let mut found: Vec<(Subgroup, Vec<usize>)> = vec![(trivial.clone(), Vec::new())];
        let mut seen: HashSet<Subgroup> = HashSet::from([trivial]);
        let mut i = 0;
        while i < found.len() {
            let (sub, gens) = found[i].clone();
            for x in 0..self.order {
                if sub.contains(x) {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(x);
                let t = self.closure(&g2, false);
                if seen.insert(t.clone()) {
                    found.push((t, g2));
                }
            }
            i += 1;
        }
        let mut subs: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
        subs.sort_by_key(|s| (s.len(), s.elements()));
        subs
    }

    fn semidirect(x: &Self, b: &Self, action: &Vec<u32>) -> Result<Self> {
        let (nx, nb) = (x.order, b.order);
        let n = nx * nb;
        check_cap(n as u64)?;
        let mut table = Vec::with_capacity(n * n);
        for e1 in 0..n {
            let (x1, b1) = (e1 / nb, e1 % nb);
            for e2 in 0..n {
                let (x2, b2) = (e2 / nb, e2 % nb);
                let acted = action[b1 * nx + x2] as usize;
                let xx = x.mul(x1, acted);
                let bb = b.mul(b1, b2);
                table.push((xx * nb + bb) as u32);
            }
        }
        Ok(Self::from_table_unchecked(n, table))
    }

    fn pair(_x: &Self, b: &Self, xe: &usize, be: &usize) -> usize {
        xe * b.order + be
    }

    fn split(_x: &Self, b: &Self, e: &usize) -> (usize, usize) {
        (e / b.order, e % b.order)
    }

    fn map_from_fn(dom: &Self, _cod: &Self, f: &dyn Fn(&usize) -> usize) -> Vec<usize> {
        (0..dom.order).map(|e| f(&e)).collect()
    }

    fn map_apply(_dom: &Self, _cod: &Self, data: &Vec<usize>, e: &usize) -> usize {
        data[*e]
    }

    fn map_check(dom: &Self, cod: &Self, data: &Vec<usize>) -> std::result::Result<(), String> {
        if data.len() != dom.order {
            return Err(format!(
                "map has {} values, domain has order {}",
                data.len(),
                dom.order
            ));
        }
        if let Some(v) = data.iter().find(|&&v| v >= cod.order) {
            return Err(format!("value {v} is not an element of the codomain"));
        }
        for x in 0..dom.order {
            for &g in &dom.gens {
                if data[dom.mul(x, g)] != cod.mul(data[x], data[g]) {
                    return Err(format!("f({x}·{g}) ≠ f({x})·f({g})"));
                }
            }
        }
        if data[0] != 0 {
            return Err("identity is not preserved".into());
        }
        Ok(())
    }

    fn map_kernel(dom: &Self, _cod: &Self, data: &Vec<usize>) -> Subgroup {
        let mask: Vec<bool> = (0..dom.order).map(|x| data[x] == 0).collect();
        Subgroup::from_mask(&mask)
    }

    fn map_preimage(dom: &Self, _cod: &Self, data: &Vec<usize>, s: &Subgroup) -> Subgroup {
        let mask: Vec<bool> = (0..dom.order).map(|x| s.contains(data[x])).collect();
        Subgroup::from_mask(&mask)
    }

    fn map_lift(_dom: &Self, _cod: &Self, data: &Vec<usize>, y: &usize) -> Option<usize> {
        data.iter().position(|v| v == y)
    }

    fn equalizer(dom: &Self, _cod: &Self, f: &Vec<usize>, g: &Vec<usize>) -> Subgroup {
        let mask: Vec<bool> = (0..dom.order).map(|x| f[x] == g[x]).collect();
        Subgroup::from_mask(&mask)
    }

    fn all_maps(dom: &Self, cod: &Self) -> Vec<Vec<usize>> {
        let gen_orders: Vec<usize> = dom.gens.iter().map(|&g| dom.element_order(g)).collect();
        let cod_orders: Vec<usize> = (0..cod.order).map(|y| cod.element_order(y)).collect();
        let candidates: Vec<Vec<usize>> = gen_orders
            .iter()
            .map(|&o| (0..cod.order).filter(|&y| o % cod_orders[y] == 0).collect())
            .collect();
        let mut out = Vec::new();
        let mut imgs = vec![0usize; dom.gens.len()];
        fn rec(
            k: usize,
            dom: &FiniteGroup,
            cod: &FiniteGroup,
            candidates: &[Vec<usize>],
            imgs: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if k == candidates.len() {
                if let Some(map) = dom.map_bfs(cod, imgs) {
                    out.push(map);
                }
                return;
            }
            for &y in &candidates[k] {
                imgs[k] = y;
                rec(k + 1, dom, cod, candidates, imgs, out);
            }
        }
        rec(0, dom, cod, &candidates, &mut imgs, &mut out);
        out.sort();
        out
    }

    fn trivial_action(actor: &Self, acted: &Self) -> Vec<u32> {
        (0..actor.order)
            .flat_map(|_| 0..acted.order as u32)
            .collect()
    }

    fn action_from_fn(
        actor: &Self,
        acted: &Self,
        f: &dyn Fn(&usize, &usize) -> usize,
    ) -> Vec<u32> {
        let mut data = Vec::with_capacity(actor.order * acted.order);
        for b in 0..actor.order {
            for x in 0..acted.order {
                data.push(f(&b, &x) as u32);
            }
        }
        data
    }

    fn act(_actor: &Self, acted: &Self, data: &Vec<u32>, b: &usize, x: &usize) -> usize {
        data[b * acted.order + x] as usize
    }

    fn action_check(actor: &Self, acted: &Self, data: &Vec<u32>) -> std::result::Result<(), String> {
        let nx = acted.order;
        if data.len() != actor.order * nx {
            return Err(format!(
                "action table has {} entries, expected {}",
                data.len(),
                actor.order * nx
            ));
        }
        for b in 0..actor.order {
            let slice: Vec<usize> = data[b * nx..(b + 1) * nx].iter().map(|&v| v as usize).collect();
            Self::map_check(acted, acted, &slice)
                .map_err(|e| format!("element {b} does not act by an endomorphism: {e}"))?;
            let mut hit = vec![false; nx];
            for &v in &slice {
                hit[v] = true;
            }
            if hit.iter().any(|h| !h) {
                return Err(format!("element {b} does not act bijectively"));
            }
        }
        for b1 in 0..actor.order {
            for &b2 in &actor.gens {
                let b12 = actor.mul(b1, b2);
                for x in 0..nx {
                    let lhs = data[b12 * nx + x];
                    let inner = data[b2 * nx + x] as usize;
                    let rhs = data[b1 * nx + inner];
                    if lhs != rhs {
                        return Err(format!(
                            "action is not a homomorphism: ({b1}·{b2}) acting on {x}"
                        ));
                    }
                }
            }
        }
        for x in 0..nx {
            if data[x] as usize != x {
                return Err("identity does not act trivially".into());
            }
        }
        Ok(())
    }

    fn all_actions(actor: &Self, acted: &Self) -> Vec<Vec<u32>> {
        let nx = acted.order;
        let autos: Vec<Vec<usize>> = Self::all_maps(acted, acted)
            .into_iter()
            .filter(|m| {
                let mut hit = vec![false; nx];
                m.iter().for_each(|&v| hit[v] = true);
                hit.iter().all(|&h| h)
            })
            .collect();
        let index: HashMap<&Vec<usize>, usize> =
            autos.iter().enumerate().map(|(i, a)| (a, i)).collect();
        let k = autos.len();
        let mut table = Vec::with_capacity(k * k);
        for a in &autos {
            for b in &autos {
                let ab: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                table.push(index[&ab] as u32);
            }
        }
        let aut = Self::from_table_unchecked(k, table);
        Self::all_maps(actor, &aut)
            .into_iter()
            .map(|h| {
                h.iter()
                    .flat_map(|&a| autos[a].iter().map(|&v| v as u32))
                    .collect()
            })
            .collect()
    }
}
