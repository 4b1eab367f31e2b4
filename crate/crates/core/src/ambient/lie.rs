//! Finite-dimensional Lie algebras over `F_p` given by structure constants.
//!
//! Elements are coordinate vectors; element `k` in enumeration order has
//! coordinates given by the base-`p` digits of `k`, least significant first.

use std::collections::HashSet;
use std::fmt;

use super::linalg::{self, is_zero, mat_vec, rref, unit};
use super::{max_lie_dim, Ambient, ElementRepr, Fingerprint, Theory, SUPPORTED_PRIMES};
use crate::error::{Error, Result};

/// Structure constants `structure[i][j][k]` = coefficient of `e_k` in
/// `[e_i, e_j]`. Entries may be any integer and are reduced mod `prime`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSpec {
    pub prime: u32,
    pub structure: Vec<Vec<Vec<i64>>>,
}

impl LieSpec {
    pub fn abelian(prime: u32, dim: usize) -> Self {
        Self {
            prime,
            structure: vec![vec![vec![0; dim]; dim]; dim],
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    p: u32,
    dim: usize,
    structure: Vec<u32>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(F_{}, dim {})", self.p, self.dim)
    }
}

/// Subspace carrier: a basis in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl LieAlgebra {
    pub fn build(spec: &LieSpec) -> Result<Self> {
        let p = spec.prime;
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::BadSpec(format!(
                "prime {p} is not supported (expected one of {SUPPORTED_PRIMES:?})"
            )));
        }
        let dim = spec.structure.len();
        if dim > max_lie_dim() {
            return Err(Error::CapExceeded {
                requested: dim as u64,
                cap: max_lie_dim() as u64,
            });
        }
        let mut structure = Vec::with_capacity(dim * dim * dim);
        for (i, row) in spec.structure.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::BadSpec(format!("structure row {i} has wrong length")));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::BadSpec(format!(
                        "bracket [e{i}, e{j}] has {} coordinates, expected {dim}",
                        v.len()
                    )));
                }
                structure.extend(v.iter().map(|&c| c.rem_euclid(p as i64) as u32));
            }
        }
        let alg = Self { p, dim, structure };
        alg.validate()?;
        Ok(alg)
    }

    pub(crate) fn from_structure_unchecked(p: u32, dim: usize, structure: Vec<u32>) -> Self {
        Self { p, dim, structure }
    }

    pub fn abelian(p: u32, dim: usize) -> Self {
        Self::from_structure_unchecked(p, dim, vec![0; dim * dim * dim])
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_bracket(i, j).to_vec()).collect())
            .collect()
    }

    fn basis_bracket(&self, i: usize, j: usize) -> &[u32] {
        let start = (i * self.dim + j) * self.dim;
        &self.structure[start..start + self.dim]
    }

    pub fn bracket(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out = vec![0; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                linalg::axpy(&mut out, ai * bj % p, self.basis_bracket(i, j), p);
            }
        }
        out
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        let p = self.p;
        for i in 0..d {
            if !is_zero(self.basis_bracket(i, i)) {
                return Err(Error::AxiomViolation(format!("[e{i}, e{i}] ≠ 0")));
            }
            for j in 0..i {
                let s = linalg::add(self.basis_bracket(i, j), self.basis_bracket(j, i), p);
                if !is_zero(&s) {
                    return Err(Error::AxiomViolation(format!(
                        "antisymmetry fails for [e{i}, e{j}]"
                    )));
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (ei, ej, ek) = (unit(d, i), unit(d, j), unit(d, k));
                    let a = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let b = self.bracket(&ej, &self.bracket(&ek, &ei));
                    let c = self.bracket(&ek, &self.bracket(&ei, &ej));
                    if !is_zero(&linalg::add(&linalg::add(&a, &b, p), &c, p)) {
                        return Err(Error::AxiomViolation(format!(
                            "Jacobi identity fails for (e{i}, e{j}, e{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn basis(&self) -> Vec<Vec<u32>> {
        (0..self.dim).map(|i| unit(self.dim, i)).collect()
    }

    fn span(&self, vs: Vec<Vec<u32>>) -> Subspace {
        let vs: Vec<Vec<u32>> = vs.into_iter().filter(|v| !is_zero(v)).collect();
        Subspace {
            basis: rref(vs, self.p),
        }
    }

    pub fn derived_dim(&self) -> usize {
        let mut vs = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                vs.push(self.basis_bracket(i, j).to_vec());
            }
        }
        self.span(vs).dim()
    }

    pub fn center_dim(&self) -> usize {
        // v is central iff sum_i v_i [e_i, e_j] = 0 for every j.
        let d = self.dim;
        let mut rows = Vec::new();
        for j in 0..d {
            for k in 0..d {
                rows.push((0..d).map(|i| self.basis_bracket(i, j)[k]).collect());
            }
        }
        linalg::nullspace(&rows, d, self.p).len()
    }

    fn element_at(&self, mut k: u64) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        for c in v.iter_mut() {
            *c = (k % self.p as u64) as u32;
            k /= self.p as u64;
        }
        v
    }

    fn check_dim(dim: usize) -> Result<()> {
        let cap = 2 * max_lie_dim();
        if dim > cap {
            return Err(Error::CapExceeded {
                requested: dim as u64,
                cap: cap as u64,
            });
        }
        Ok(())
    }

    /// Derivations of `self` as a basis of `dim × dim` matrices.
    fn derivation_basis(&self) -> Vec<Vec<Vec<u32>>> {
        let d = self.dim;
        // Unknown D has entry D[r][c] at position r*d + c. The derivation rule
        // D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j] is linear in D.
        let n = d * d;
        let mut rows = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let cij = self.basis_bracket(i, j);
                for k in 0..d {
                    let mut row = vec![0u32; n];
                    for (r, &c) in cij.iter().enumerate() {
                        row[k * d + r] = (row[k * d + r] + c) % self.p;
                    }
                    // [D e_i, e_j]_k = sum_r D[r][i] c_{r j k}
                    for r in 0..d {
                        let c = self.basis_bracket(r, j)[k];
                        row[r * d + i] = (row[r * d + i] + self.p - c) % self.p;
                        let c = self.basis_bracket(i, r)[k];
                        row[r * d + j] = (row[r * d + j] + self.p - c) % self.p;
                    }
                    rows.push(row);
                }
            }
        }
        linalg::nullspace(&rows, n, self.p)
            .into_iter()
            .map(|v| v.chunks(d).map(|c| c.to_vec()).collect())
            .collect()
    }

    fn map_bracket_ok(dom: &Self, cod: &Self, m: &[Vec<u32>], i: usize, j: usize) -> bool {
        let lhs = mat_vec(m, dom.basis_bracket(i, j), cod.p);
        let rhs = cod.bracket(&linalg::column(m, i), &linalg::column(m, j));
        lhs == rhs
    }
}

impl Ambient for LieAlgebra {
    type Elem = Vec<u32>;
    type Sub = Subspace;
    type MapData = Vec<Vec<u32>>;
    /// One derivation matrix per basis element of the actor.
    type ActionData = Vec<Vec<Vec<u32>>>;

    const THEORY: Theory = Theory::Lie;
    const PEIFFER_CLOSURE_IS_IDEAL: bool = true;

    fn size(&self) -> u64 {
        (self.p as u64).pow(self.dim as u32)
    }

    fn zero(&self) -> Vec<u32> {
        vec![0; self.dim]
    }

    fn op(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        linalg::add(a, b, self.p)
    }

    fn neg(&self, a: &Vec<u32>) -> Vec<u32> {
        linalg::neg(a, self.p)
    }

    fn conj(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        self.bracket(a, b)
    }

    fn commutator(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        self.bracket(a, b)
    }

    fn spanning(&self) -> Vec<Vec<u32>> {
        self.basis()
    }

    fn generators(&self) -> Vec<Vec<u32>> {
        self.basis()
    }

    fn elements(&self) -> Vec<Vec<u32>> {
        (0..self.size()).map(|k| self.element_at(k)).collect()
    }

    fn is_element(&self, e: &Vec<u32>) -> bool {
        e.len() == self.dim && e.iter().all(|&c| c < self.p)
    }

    fn repr(&self, e: &Vec<u32>) -> ElementRepr {
        ElementRepr::Vector(e.clone())
    }

    fn parse(&self, r: &ElementRepr) -> Result<Vec<u32>> {
        match r {
            ElementRepr::Vector(v) if v.len() == self.dim => {
                Ok(v.iter().map(|&c| c % self.p).collect())
            }
            ElementRepr::Vector(v) => Err(Error::BadSpec(format!(
                "vector has {} coordinates, algebra has dimension {}",
                v.len(),
                self.dim
            ))),
            ElementRepr::Index(k) if (*k as u64) < self.size() => Ok(self.element_at(*k as u64)),
            ElementRepr::Index(k) => Err(Error::BadSpec(format!(
                "element index {k} out of range for an algebra with {} elements",
                self.size()
            ))),
        }
    }

    fn fingerprint(&self) -> Fingerprint {
        Fingerprint::Lie {
            prime: self.p,
            dim: self.dim,
            derived_dim: self.derived_dim(),
            center_dim: self.center_dim(),
        }
    }

    fn closure(&self, gens: &[Vec<u32>], normal: bool) -> Subspace {
        let mut sub = self.span(gens.to_vec());
        loop {
            let mut vs = sub.basis.clone();
            let others = if normal { self.basis() } else { sub.basis.clone() };
            for a in &others {
                for b in &sub.basis {
                    vs.push(self.bracket(a, b));
                }
            }
            let next = self.span(vs);
            if next.dim() == sub.dim() {
                return sub;
            }
            sub = next;
        }
    }

    fn sub_contains(&self, s: &Subspace, e: &Vec<u32>) -> bool {
        is_zero(&linalg::reduce(&s.basis, e, self.p))
    }

    fn sub_spanning(&self, s: &Subspace) -> Vec<Vec<u32>> {
        s.basis.clone()
    }

    fn sub_size(&self, s: &Subspace) -> u64 {
        (self.p as u64).pow(s.dim() as u32)
    }

    fn sub_is_trivial(&self, s: &Subspace) -> bool {
        s.dim() == 0
    }

    fn meet(&self, a: &Subspace, b: &Subspace) -> Subspace {
        Subspace {
            basis: linalg::intersect(&a.basis, &b.basis, self.dim, self.p),
        }
    }

    fn join(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = a.basis.clone();
        vs.extend(b.basis.iter().cloned());
        self.closure(&vs, false)
    }

    fn sub_object(&self, s: &Subspace) -> (Self, Vec<Vec<u32>>) {
        let r = s.dim();
        let piv = linalg::pivots(&s.basis);
        let mut structure = Vec::with_capacity(r * r * r);
        for a in &s.basis {
            for b in &s.basis {
                let v = self.bracket(a, b);
                structure.extend(piv.iter().map(|&c| v[c]));
            }
        }
        let incl = linalg::from_columns(&s.basis, self.dim);
        (Self::from_structure_unchecked(self.p, r, structure), incl)
    }

    fn quotient(&self, n: &Subspace) -> (Self, Vec<Vec<u32>>, Vec<Vec<u32>>) {
        let (free, proj) = linalg::complement_projection(&n.basis, self.dim, self.p);
        let q = free.len();
        let mut structure = Vec::with_capacity(q * q * q);
        for &s in &free {
            for &t in &free {
                let v = self.basis_bracket(s, t);
                structure.extend(mat_vec(&proj, v, self.p));
            }
        }
        let section_cols: Vec<Vec<u32>> = free.iter().map(|&c| unit(self.dim, c)).collect();
        let section = linalg::from_columns(&section_cols, self.dim);
        (
            Self::from_structure_unchecked(self.p, q, structure),
            proj,
            section,
        )
    }

    fn all_subobjects(&self) -> Vec<Subspace> {
        let elements = self.elements();
        let trivial = self.trivial();
        let mut found = vec![trivial.clone()];
        let mut seen: HashSet<Subspace> = HashSet::from([trivial]);
        let mut i = 0;
        while i < found.len() {
            let sub = found[i].clone();
            for x in &elements {
                if self.sub_contains(&sub, x) {
                    continue;
                }
                let mut gens = sub.basis.clone();
                gens.push(x.clone());
                let t = self.closure(&gens, false);
                if seen.insert(t.clone()) {
                    found.push(t);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| (a.dim(), &a.basis).cmp(&(b.dim(), &b.basis)));
        found
    }

    fn semidirect(x: &Self, b: &Self, action: &Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let (dx, db) = (x.dim, b.dim);
        let n = dx + db;
        Self::check_dim(n)?;
        let p = x.p;
        let basis: Vec<Vec<u32>> = (0..n).map(|i| unit(n, i)).collect();
        let mut structure = Vec::with_capacity(n * n * n);
        for u in &basis {
            for v in &basis {
                let (ux, ub) = u.split_at(dx);
                let (vx, vb) = v.split_at(dx);
                let mut xs = x.bracket(ux, vx);
                let bu = Self::act(b, x, action, &ub.to_vec(), &vx.to_vec());
                let bv = Self::act(b, x, action, &vb.to_vec(), &ux.to_vec());
                xs = linalg::add(&xs, &bu, p);
                xs = linalg::add(&xs, &linalg::neg(&bv, p), p);
                xs.extend(b.bracket(ub, vb));
                structure.extend(xs);
            }
        }
        Ok(Self::from_structure_unchecked(p, n, structure))
    }

    fn pair(_x: &Self, _b: &Self, xe: &Vec<u32>, be: &Vec<u32>) -> Vec<u32> {
        let mut v = xe.clone();
        v.extend_from_slice(be);
        v
    }

    fn split(x: &Self, _b: &Self, e: &Vec<u32>) -> (Vec<u32>, Vec<u32>) {
        let (a, b) = e.split_at(x.dim);
        (a.to_vec(), b.to_vec())
    }

    fn map_from_fn(dom: &Self, cod: &Self, f: &dyn Fn(&Vec<u32>) -> Vec<u32>) -> Vec<Vec<u32>> {
        let cols: Vec<Vec<u32>> = dom.basis().iter().map(f).collect();
        linalg::from_columns(&cols, cod.dim)
    }

    fn map_apply(_dom: &Self, cod: &Self, data: &Vec<Vec<u32>>, e: &Vec<u32>) -> Vec<u32> {
        if data.is_empty() {
            return vec![0; cod.dim];
        }
        mat_vec(data, e, cod.p)
    }

    fn map_check(dom: &Self, cod: &Self, data: &Vec<Vec<u32>>) -> std::result::Result<(), String> {
        if dom.p != cod.p {
            return Err("domain and codomain have different characteristic".into());
        }
        if data.len() != cod.dim || data.iter().any(|r| r.len() != dom.dim) {
            return Err(format!(
                "matrix shape must be {} × {}",
                cod.dim, dom.dim
            ));
        }
        if data.iter().flatten().any(|&c| c >= cod.p) {
            return Err("matrix entries must be reduced mod p".into());
        }
        for i in 0..dom.dim {
            for j in 0..i {
                if !Self::map_bracket_ok(dom, cod, data, i, j) {
                    return Err(format!("f([e{i}, e{j}]) ≠ [f(e{i}), f(e{j})]"));
                }
            }
        }
        Ok(())
    }

    fn map_kernel(dom: &Self, _cod: &Self, data: &Vec<Vec<u32>>) -> Subspace {
        Subspace {
            basis: linalg::nullspace(data, dom.dim, dom.p),
        }
    }

    fn map_preimage(dom: &Self, cod: &Self, data: &Vec<Vec<u32>>, s: &Subspace) -> Subspace {
        let (_, proj) = linalg::complement_projection(&s.basis, cod.dim, cod.p);
        let m = linalg::mat_mul(&proj, data, dom.dim, dom.p);
        Subspace {
            basis: linalg::nullspace(&m, dom.dim, dom.p),
        }
    }

    fn map_lift(dom: &Self, _cod: &Self, data: &Vec<Vec<u32>>, y: &Vec<u32>) -> Option<Vec<u32>> {
        if data.is_empty() {
            return Some(vec![0; dom.dim]);
        }
        linalg::solve(data, dom.dim, y, dom.p)
    }

    fn equalizer(dom: &Self, _cod: &Self, f: &Vec<Vec<u32>>, g: &Vec<Vec<u32>>) -> Subspace {
        let d = linalg::mat_sub(f, g, dom.p);
        Subspace {
            basis: linalg::nullspace(&d, dom.dim, dom.p),
        }
    }

    fn all_maps(dom: &Self, cod: &Self) -> Vec<Vec<Vec<u32>>> {
        let n = dom.dim;
        let images = cod.elements();
        // Constraint (i, j) becomes checkable once e_i, e_j and the support
        // of [e_i, e_j] have been assigned.
        let mut ready: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..i {
                let support_max = dom
                    .basis_bracket(i, j)
                    .iter()
                    .rposition(|&c| c != 0)
                    .unwrap_or(0);
                ready[i.max(support_max)].push((i, j));
            }
        }
        let mut out = Vec::new();
        let mut cols: Vec<Vec<u32>> = Vec::with_capacity(n);
        fn rec(
            dom: &LieAlgebra,
            cod: &LieAlgebra,
            images: &[Vec<u32>],
            ready: &[Vec<(usize, usize)>],
            cols: &mut Vec<Vec<u32>>,
            out: &mut Vec<Vec<Vec<u32>>>,
        ) {
            let k = cols.len();
            if k == dom.dim {
                out.push(linalg::from_columns(cols, cod.dim));
                return;
            }
            for y in images {
                cols.push(y.clone());
                let ok = ready[k].iter().all(|&(i, j)| {
                    let lhs = dom.basis_bracket(i, j).iter().enumerate().fold(
                        vec![0; cod.dim],
                        |mut acc, (t, &c)| {
                            if c != 0 {
                                linalg::axpy(&mut acc, c, &cols[t], cod.p);
                            }
                            acc
                        },
                    );
                    lhs == cod.bracket(&cols[i], &cols[j])
                });
                if ok {
                    rec(dom, cod, images, ready, cols, out);
                }
                cols.pop();
            }
        }
        if n == 0 {
            return vec![linalg::zero_matrix(cod.dim, 0)];
        }
        rec(dom, cod, &images, &ready, &mut cols, &mut out);
        out
    }

    fn trivial_action(actor: &Self, acted: &Self) -> Vec<Vec<Vec<u32>>> {
        vec![linalg::zero_matrix(acted.dim, acted.dim); actor.dim]
    }

    fn action_from_fn(
        actor: &Self,
        acted: &Self,
        f: &dyn Fn(&Vec<u32>, &Vec<u32>) -> Vec<u32>,
    ) -> Vec<Vec<Vec<u32>>> {
        actor
            .basis()
            .iter()
            .map(|b| {
                let cols: Vec<Vec<u32>> = acted.basis().iter().map(|x| f(b, x)).collect();
                linalg::from_columns(&cols, acted.dim)
            })
            .collect()
    }

    fn act(
        actor: &Self,
        acted: &Self,
        data: &Vec<Vec<Vec<u32>>>,
        b: &Vec<u32>,
        x: &Vec<u32>,
    ) -> Vec<u32> {
        let p = actor.p;
        let mut out = vec![0; acted.dim];
        for (i, &bi) in b.iter().enumerate() {
            if bi != 0 {
                linalg::axpy(&mut out, bi, &mat_vec(&data[i], x, p), p);
            }
        }
        out
    }

    fn action_check(
        actor: &Self,
        acted: &Self,
        data: &Vec<Vec<Vec<u32>>>,
    ) -> std::result::Result<(), String> {
        let (db, dx, p) = (actor.dim, acted.dim, actor.p);
        if actor.p != acted.p {
            return Err("actor and acted algebra have different characteristic".into());
        }
        if data.len() != db
            || data
                .iter()
                .any(|m| m.len() != dx || m.iter().any(|r| r.len() != dx))
        {
            return Err(format!("expected {db} derivation matrices of size {dx} × {dx}"));
        }
        if data.iter().flatten().flatten().any(|&c| c >= p) {
            return Err("matrix entries must be reduced mod p".into());
        }
        for (b, m) in data.iter().enumerate() {
            for i in 0..dx {
                for j in 0..dx {
                    let (ei, ej) = (unit(dx, i), unit(dx, j));
                    let lhs = mat_vec(m, &acted.bracket(&ei, &ej), p);
                    let rhs = linalg::add(
                        &acted.bracket(&mat_vec(m, &ei, p), &ej),
                        &acted.bracket(&ei, &mat_vec(m, &ej, p)),
                        p,
                    );
                    if lhs != rhs {
                        return Err(format!(
                            "basis element {b} does not act by a derivation on (e{i}, e{j})"
                        ));
                    }
                }
            }
        }
        for i in 0..db {
            for j in 0..i {
                let bij = actor.basis_bracket(i, j).to_vec();
                for k in 0..dx {
                    let ek = unit(dx, k);
                    let lhs = Self::act(actor, acted, data, &bij, &ek);
                    let a = mat_vec(&data[i], &mat_vec(&data[j], &ek, p), p);
                    let b = mat_vec(&data[j], &mat_vec(&data[i], &ek, p), p);
                    let rhs = linalg::add(&a, &linalg::neg(&b, p), p);
                    if lhs != rhs {
                        return Err(format!(
                            "action is not a Lie homomorphism on [b{i}, b{j}]"
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn all_actions(actor: &Self, acted: &Self) -> Vec<Vec<Vec<Vec<u32>>>> {
        let (dx, p) = (acted.dim, acted.p);
        let ders = acted.derivation_basis();
        let m = ders.len();
        let flat: Vec<Vec<u32>> = ders.iter().map(|d| d.concat()).collect();
        // Coordinates of a derivation in the basis: flat is in RREF.
        let coords = |d: &Vec<Vec<u32>>| -> Vec<u32> {
            let v = d.concat();
            linalg::pivots(&flat).iter().map(|&c| v[c]).collect()
        };
        let mut structure = Vec::with_capacity(m * m * m);
        for a in &ders {
            for b in &ders {
                let ab = linalg::mat_mul(a, b, dx, p);
                let ba = linalg::mat_mul(b, a, dx, p);
                structure.extend(coords(&linalg::mat_sub(&ab, &ba, p)));
            }
        }
        let der = Self::from_structure_unchecked(p, m, structure);
        Self::all_maps(actor, &der)
            .into_iter()
            .map(|h| {
                (0..actor.dim)
                    .map(|i| {
                        let mut acc = linalg::zero_matrix(dx, dx);
                        for (k, d) in ders.iter().enumerate() {
                            let c = h[k][i];
                            for (row, drow) in acc.iter_mut().zip(d) {
                                linalg::axpy(row, c, drow, p);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }
}
