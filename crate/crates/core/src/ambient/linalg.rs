//! Dense linear algebra over a small prime field. Vectors are `Vec<u32>`
//! with entries in `0..p`; matrices are row-major `Vec<Vec<u32>>`.

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    (1..p).find(|&b| a * b % p == 1).expect("nonzero element of a prime field")
}

pub(crate) fn add(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

pub(crate) fn neg(a: &[u32], p: u32) -> Vec<u32> {
    a.iter().map(|x| (p - x) % p).collect()
}

pub(crate) fn scale(a: &[u32], c: u32, p: u32) -> Vec<u32> {
    a.iter().map(|x| x * c % p).collect()
}

/// `a + c·b`
pub(crate) fn axpy(a: &mut [u32], c: u32, b: &[u32], p: u32) {
    if c == 0 {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x = (*x + c * y) % p;
    }
}

pub(crate) fn mat_vec(m: &[Vec<u32>], v: &[u32], p: u32) -> Vec<u32> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % p)
        .collect()
}

pub(crate) fn mat_mul(a: &[Vec<u32>], b: &[Vec<u32>], cols: usize, p: u32) -> Vec<Vec<u32>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .map(|(x, brow)| x * brow[j])
                        .sum::<u32>()
                        % p
                })
                .collect()
        })
        .collect()
}

pub(crate) fn mat_sub(a: &[Vec<u32>], b: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| (u + p - v) % p).collect())
        .collect()
}

pub(crate) fn zero_matrix(rows: usize, cols: usize) -> Vec<Vec<u32>> {
    vec![vec![0; cols]; rows]
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub(crate) fn column(m: &[Vec<u32>], j: usize) -> Vec<u32> {
    m.iter().map(|row| row[j]).collect()
}

/// Matrix whose columns are the given vectors.
pub(crate) fn from_columns(cols: &[Vec<u32>], rows: usize) -> Vec<Vec<u32>> {
    (0..rows)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect()
}

/// Reduced row echelon form with zero rows dropped.
pub(crate) fn rref(mut rows: Vec<Vec<u32>>, p: u32) -> Vec<Vec<u32>> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        rows[rank] = scale(&rows[rank], inv, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let c = p - row[col];
                axpy(row, c, &pivot_row, p);
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

pub(crate) fn pivots(basis: &[Vec<u32>]) -> Vec<usize> {
    basis
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("rref rows are nonzero"))
        .collect()
}

/// Reduces `v` against an RREF basis; the result is zero iff `v` lies in the span.
pub(crate) fn reduce(basis: &[Vec<u32>], v: &[u32], p: u32) -> Vec<u32> {
    let mut v = v.to_vec();
    for row in basis {
        let piv = row.iter().position(|&x| x != 0).unwrap();
        if v[piv] != 0 {
            let c = p - v[piv];
            axpy(&mut v, c, row, p);
        }
    }
    v
}

pub(crate) fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// RREF basis of `{v : m v = 0}` for an `r × n` matrix.
pub(crate) fn nullspace(m: &[Vec<u32>], n: usize, p: u32) -> Vec<Vec<u32>> {
    let r = rref(m.to_vec(), p);
    let piv = pivots(&r);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !piv.contains(c)) {
        let mut v = vec![0; n];
        v[free] = 1;
        for (row, &pc) in r.iter().zip(&piv) {
            v[pc] = (p - row[free]) % p;
        }
        out.push(v);
    }
    rref(out, p)
}

/// Some `x` with `m x = y`, if one exists.
pub(crate) fn solve(m: &[Vec<u32>], n: usize, y: &[u32], p: u32) -> Option<Vec<u32>> {
    let aug: Vec<Vec<u32>> = m
        .iter()
        .zip(y)
        .map(|(row, &b)| {
            let mut r = row.clone();
            r.push(b);
            r
        })
        .collect();
    let r = rref(aug, p);
    let mut x = vec![0; n];
    for row in &r {
        let pc = row.iter().position(|&v| v != 0).unwrap();
        if pc == n {
            return None;
        }
        x[pc] = row[n];
    }
    Some(x)
}

/// Intersection of two subspaces (Zassenhaus).
pub(crate) fn intersect(a: &[Vec<u32>], b: &[Vec<u32>], n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut rows = Vec::new();
    for v in a {
        let mut r = v.clone();
        r.extend_from_slice(v);
        rows.push(r);
    }
    for v in b {
        let mut r = v.clone();
        r.extend(std::iter::repeat(0).take(n));
        rows.push(r);
    }
    let r = rref(rows, p);
    let tail: Vec<Vec<u32>> = r
        .into_iter()
        .filter(|row| is_zero(&row[..n]))
        .map(|row| row[n..].to_vec())
        .collect();
    rref(tail, p)
}

/// Linear projection onto the complement spanned by non-pivot coordinates:
/// reduce against the basis, then read off the free coordinates.
pub(crate) fn complement_projection(basis: &[Vec<u32>], n: usize, p: u32) -> (Vec<usize>, Vec<Vec<u32>>) {
    let piv = pivots(basis);
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    let cols: Vec<Vec<u32>> = (0..n)
        .map(|j| {
            let r = reduce(basis, &unit(n, j), p);
            free.iter().map(|&c| r[c]).collect()
        })
        .collect();
    let m = from_columns(&cols, free.len());
    (free, m)
}
