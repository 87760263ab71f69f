//! Sparse exact linear algebra over ℤ/N.
//!
//! Everything downstream (coboundary tests, cohomology groups, character
//! solving) reduces to solving `A·x = b` and computing kernels over ℤ/N with
//! composite N. Rather than CRT-splitting into prime powers we work with the
//! Howell form of the row span directly: pivots are gcd-normalized divisors
//! of N and every pivot row with pivot d spawns a completion row (N/d)·row,
//! so the echelon basis spans the full submodule. The Howell form of a row
//! span is canonical, which makes kernels, solvability tests and the
//! "least solution" reduction deterministic by construction.

use std::collections::BTreeMap;

/// A sparse vector over ℤ/N: sorted (column, value) pairs, values nonzero.
pub type SparseRow = Vec<(usize, u64)>;

fn gcd_u(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = xgcd(b, a.rem_euclid(b));
        (g, y, x - (a / b) * y)
    }
}

pub fn lcm_u(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd_u(a, b) * b
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn inv_mod(a: u64, m: u64) -> u64 {
    let (g, x, _) = xgcd(a as i128, m as i128);
    assert!(g == 1, "inv_mod of non-unit {} mod {}", a, m);
    (x.rem_euclid(m as i128)) as u64
}

/// Returns (u, g) with u a unit mod n and u·a ≡ g = gcd(a, n) (mod n).
pub fn unit_multiplier(a: u64, n: u64) -> (u64, u64) {
    let a = a % n;
    if a == 0 {
        return (1, 0);
    }
    let g = gcd_u(a, n);
    // per prime power p^e || n: if p divides a/g choose 1, else (a/g)^-1
    let a0 = a / g;
    let mut u: u128 = 0;
    let mut seen_mod: u128 = 1;
    for (p, e) in factorize(n) {
        let pe = p.pow(e);
        let up = if a0 % p == 0 { 1 } else { inv_mod(a0 % pe, pe) };
        // CRT combine u ≡ up (mod pe)
        let (g2, x, _) = xgcd(seen_mod as i128, pe as i128);
        debug_assert!(g2 == 1);
        let diff = (up as i128 - (u % pe as u128) as i128).rem_euclid(pe as i128);
        let add = (x.rem_euclid(pe as i128) as u128 * diff as u128 % pe as u128) * seen_mod;
        u = (u + add) % (seen_mod * pe as u128);
        seen_mod *= pe as u128;
    }
    let u = (u % n as u128) as u64;
    let u = if u == 0 { n.min(1) } else { u };
    debug_assert_eq!((u as u128 * a as u128 % n as u128) as u64, g % n);
    (u, g)
}

fn row_scale(r: &SparseRow, c: u64, m: u64) -> SparseRow {
    if c % m == 0 {
        return Vec::new();
    }
    r.iter()
        .filter_map(|&(j, v)| {
            let w = (v as u128 * c as u128 % m as u128) as u64;
            (w != 0).then_some((j, w))
        })
        .collect()
}

/// r + c·s over ℤ/m, merging sorted sparse rows.
pub fn row_add_scaled(r: &SparseRow, s: &SparseRow, c: u64, m: u64) -> SparseRow {
    let c = c % m;
    if c == 0 {
        return r.clone();
    }
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < s.len() {
        if j >= s.len() || (i < r.len() && r[i].0 < s[j].0) {
            out.push(r[i]);
            i += 1;
        } else if i >= r.len() || s[j].0 < r[i].0 {
            let w = (s[j].1 as u128 * c as u128 % m as u128) as u64;
            if w != 0 {
                out.push((s[j].0, w));
            }
            j += 1;
        } else {
            let w = ((r[i].1 as u128 + s[j].1 as u128 * c as u128) % m as u128) as u64;
            if w != 0 {
                out.push((r[i].0, w));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn row_combine(r1: &SparseRow, x: i128, r2: &SparseRow, y: i128, m: u64) -> SparseRow {
    let xm = x.rem_euclid(m as i128) as u64;
    let ym = y.rem_euclid(m as i128) as u64;
    row_add_scaled(&row_scale(r1, xm, m), r2, ym, m)
}

/// Canonical Howell form of a row span in (ℤ/m)^width.
pub struct Howell {
    pub modulus: u64,
    pub width: usize,
    /// Echelon rows with strictly increasing pivot columns; each pivot value
    /// divides the modulus and entries above a pivot are reduced below it.
    pub rows: Vec<SparseRow>,
    /// (pivot column, pivot value) per row.
    pub pivots: Vec<(usize, u64)>,
}

impl Howell {
    pub fn new(input: Vec<SparseRow>, width: usize, modulus: u64) -> Self {
        assert!(modulus >= 1);
        let m = modulus;
        // bucket rows by leading column
        let mut buckets: BTreeMap<usize, Vec<SparseRow>> = BTreeMap::new();
        for r in input {
            if let Some(&(c, _)) = r.first() {
                buckets.entry(c).or_default().push(r);
            }
        }
        let mut rows: Vec<SparseRow> = Vec::new();
        let mut pivots: Vec<(usize, u64)> = Vec::new();
        while let Some((&col, _)) = buckets.iter().next() {
            let mut pool = buckets.remove(&col).unwrap();
            let push = |r: SparseRow, buckets: &mut BTreeMap<usize, Vec<SparseRow>>| {
                if let Some(&(c, _)) = r.first() {
                    debug_assert!(c > col);
                    buckets.entry(c).or_default().push(r);
                }
            };
            // merge the pool into one pivot row via gcd combinations
            let mut pivot_row = pool.pop().unwrap();
            while let Some(other) = pool.pop() {
                let a = pivot_row[0].1;
                let b = other[0].1;
                if b % a == 0 {
                    let reduced = row_add_scaled(&other, &pivot_row, m - (b / a) % m, m);
                    push(reduced, &mut buckets);
                } else {
                    let (g, x, y) = xgcd(a as i128, b as i128);
                    let combined = row_combine(&pivot_row, x, &other, y, m);
                    debug_assert_eq!(combined.first().map(|&(c, _)| c), Some(col));
                    let g = g as u64;
                    let r1 = row_add_scaled(&pivot_row, &combined, m - (a / g) % m, m);
                    let r2 = row_add_scaled(&other, &combined, m - (b / g) % m, m);
                    push(r1, &mut buckets);
                    push(r2, &mut buckets);
                    pivot_row = combined;
                }
            }
            // normalize the pivot to gcd(value, m) by a unit
            let (u, g) = unit_multiplier(pivot_row[0].1, m);
            if u != 1 {
                pivot_row = row_scale(&pivot_row, u, m);
            }
            debug_assert_eq!(pivot_row[0].1, g);
            // Howell completion: (m/g)·row has zero pivot but spans the tail
            if g != 1 {
                let comp = row_scale(&pivot_row, m / g, m);
                let comp: SparseRow = comp.into_iter().filter(|&(c, _)| c > col).collect();
                push(comp, &mut buckets);
            }
            rows.push(pivot_row);
            pivots.push((col, g));
        }
        // reduce entries above pivots so the form is canonical
        for i in (0..rows.len()).rev() {
            for k in (i + 1)..rows.len() {
                let (pc, pv) = pivots[k];
                if let Ok(pos) = rows[i].binary_search_by_key(&pc, |&(c, _)| c) {
                    let q = rows[i][pos].1 / pv;
                    if q != 0 {
                        let pr = rows[k].clone();
                        rows[i] = row_add_scaled(&rows[i], &pr, m - q % m, m);
                    }
                }
            }
        }
        Howell {
            modulus,
            width,
            rows,
            pivots,
        }
    }

    /// Reduce `v` by the echelon rows; returns (residue, coefficients used).
    /// `v` lies in the row span iff the residue is zero, in which case
    /// v = Σ coeff_i · row_i.
    pub fn reduce(&self, v: &SparseRow) -> (SparseRow, Vec<u64>) {
        let m = self.modulus;
        let mut v = v.clone();
        let mut coeffs = vec![0u64; self.rows.len()];
        for (i, &(pc, pv)) in self.pivots.iter().enumerate() {
            if let Ok(pos) = v.binary_search_by_key(&pc, |&(c, _)| c) {
                let q = v[pos].1 / pv;
                if q != 0 {
                    v = row_add_scaled(&v, &self.rows[i], m - q % m, m);
                    coeffs[i] = q;
                }
            }
        }
        (v, coeffs)
    }

    pub fn contains(&self, v: &SparseRow) -> bool {
        self.reduce(v).0.is_empty()
    }
}

/// Solver for A·x = b over ℤ/m, where A is given by rows.
///
/// Internally stores the Howell form of [Aᵗ | I]: rows whose left block is
/// zero exhibit the kernel of A, and reducing [b | 0] exhibits solvability
/// along with a particular solution.
pub struct Solver {
    modulus: u64,
    eq_count: usize,
    var_count: usize,
    howell: Howell,
    kernel_rows: Vec<SparseRow>, // over variable coordinates, Howell basis
}

impl Solver {
    /// `rows[i]` is equation i: Σ_j rows[i][j]·x_j = b_i. Equations are the
    /// left block of the transposed working matrix.
    pub fn new(rows: &[SparseRow], var_count: usize, modulus: u64) -> Self {
        let eq_count = rows.len();
        // transpose: working rows indexed by variable j: (column e_i of Aᵗ) | e_j
        let mut work: Vec<SparseRow> = vec![Vec::new(); var_count];
        for (i, r) in rows.iter().enumerate() {
            for &(j, v) in r {
                debug_assert!(j < var_count);
                work[j].push((i, v % modulus));
            }
        }
        let mut rows_aug: Vec<SparseRow> = Vec::with_capacity(var_count);
        for (j, mut r) in work.into_iter().enumerate() {
            r.sort_by_key(|&(c, _)| c);
            r.retain(|&(_, v)| v != 0);
            r.push((eq_count + j, 1));
            rows_aug.push(r);
        }
        let howell = Howell::new(rows_aug, eq_count + var_count, modulus);
        let kernel_rows: Vec<SparseRow> = howell
            .rows
            .iter()
            .zip(&howell.pivots)
            .filter(|(_, &(pc, _))| pc >= eq_count)
            .map(|(r, _)| r.iter().map(|&(c, v)| (c - eq_count, v)).collect())
            .collect();
        Solver {
            modulus,
            eq_count,
            var_count,
            howell,
            kernel_rows,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Canonical (lexicographically least) solution of A·x = b, if any.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        let m = self.modulus;
        let bv: SparseRow = b
            .iter()
            .enumerate()
            .filter_map(|(i, &v)| (v % m != 0).then_some((i, v % m)))
            .collect();
        assert!(b.len() == self.eq_count);
        let (residue, _) = self.howell.reduce(&bv);
        if residue.iter().any(|&(c, _)| c < self.eq_count) {
            return None;
        }
        // the reduction wrote [b | 0] - Σ q_i [A·y_i | y_i] = [0 | -x], so the
        // particular solution is the negated variable block of the residue
        let mut x = vec![0u64; self.var_count];
        for &(col, v) in &residue {
            let j = col - self.eq_count;
            x[j] = (m - v) % m;
        }
        Some(self.canonicalize(x))
    }

    /// Reduce a solution to the lexicographically least member of its coset
    /// modulo the kernel.
    pub fn canonicalize(&self, mut x: Vec<u64>) -> Vec<u64> {
        let m = self.modulus;
        for kr in &self.kernel_rows {
            let (pc, pv) = kr[0];
            let q = x[pc] / pv;
            if q != 0 {
                for &(c, v) in kr {
                    x[c] = ((x[c] as u128 + (m - v) as u128 * q as u128) % m as u128) as u64;
                }
            }
        }
        x
    }

    /// Canonical basis of {x : A·x = 0}, as dense vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        self.kernel_rows
            .iter()
            .map(|r| {
                let mut v = vec![0u64; self.var_count];
                for &(c, val) in r {
                    v[c] = val;
                }
                v
            })
            .collect()
    }

    pub fn kernel_rows_sparse(&self) -> &[SparseRow] {
        &self.kernel_rows
    }
}

/// Smith normal form of an integer matrix with transforms:
/// `u · a · v = diag(d)`, d_i ≥ 0, d_i | d_{i+1}.
pub struct Smith {
    pub diag: Vec<i128>,
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
    /// Inverse of `u`, maintained alongside: columns are the generator
    /// combinations of the quotient presentation.
    pub u_inv: Vec<Vec<i128>>,
}

pub fn smith_normal_form(a: &[Vec<i128>]) -> Smith {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<i128>> = a.to_vec();
    let mut u: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..rows).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut u_inv = u.clone();
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();

    let add_row = |m: &mut Vec<Vec<i128>>,
                   u: &mut Vec<Vec<i128>>,
                   u_inv: &mut Vec<Vec<i128>>,
                   dst: usize,
                   src: usize,
                   c: i128| {
        for j in 0..cols {
            m[dst][j] += c * m[src][j];
        }
        for j in 0..rows {
            u[dst][j] += c * u[src][j];
        }
        // row op E on the left: u_inv ← u_inv · E^{-1}: col src -= c · col dst
        for r in 0..rows {
            u_inv[r][src] -= c * u_inv[r][dst];
        }
    };
    let add_col = |m: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, dst: usize, src: usize, c: i128| {
        for i in 0..rows {
            m[i][dst] += c * m[i][src];
        }
        for i in 0..cols {
            v[i][dst] += c * v[i][src];
        }
    };

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // find a nonzero pivot with least absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0
                    && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        u.swap(t, pi);
        for r in 0..rows {
            u_inv[r].swap(t, pi);
        }
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        // clear row and column t
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in (t + 1)..rows {
                if m[i][t] != 0 {
                    let q = div_round(m[i][t], m[t][t]);
                    add_row(&mut m, &mut u, &mut u_inv, i, t, -q);
                    if m[i][t] != 0 {
                        m.swap(t, i);
                        u.swap(t, i);
                        for r in 0..rows {
                            u_inv[r].swap(t, i);
                        }
                        dirty = true;
                    }
                }
            }
            for j in (t + 1)..cols {
                if m[t][j] != 0 {
                    let q = div_round(m[t][j], m[t][t]);
                    add_col(&mut m, &mut v, j, t, -q);
                    if m[t][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        for row in v.iter_mut() {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
            }
        }
        t += 1;
    }
    // fix signs and the divisibility chain
    for i in 0..n {
        if m[i][i] < 0 {
            for j in 0..cols {
                m[i][j] = -m[i][j];
            }
            for j in 0..rows {
                u[i][j] = -u[i][j];
            }
            for r in 0..rows {
                u_inv[r][i] = -u_inv[r][i];
            }
        }
    }
    loop {
        let mut changed = false;
        for i in 0..n.saturating_sub(1) {
            let (a1, a2) = (m[i][i], m[i + 1][i + 1]);
            if a2 != 0 && a1 != 0 && a2 % a1 != 0 {
                // standard 2x2 fix: move gcd up, lcm down
                add_col(&mut m, &mut v, i, i + 1, 1);
                // local re-elimination on rows/cols i, i+1
                loop {
                    if m[i + 1][i] != 0 {
                        let q = div_round(m[i + 1][i], m[i][i]);
                        add_row(&mut m, &mut u, &mut u_inv, i + 1, i, -q);
                        if m[i + 1][i] != 0 {
                            m.swap(i, i + 1);
                            u.swap(i, i + 1);
                            for r in 0..rows {
                                u_inv[r].swap(i, i + 1);
                            }
                            continue;
                        }
                    }
                    if m[i][i + 1] != 0 {
                        let q = div_round(m[i][i + 1], m[i][i]);
                        add_col(&mut m, &mut v, i + 1, i, -q);
                        if m[i][i + 1] != 0 {
                            for row in m.iter_mut() {
                                row.swap(i, i + 1);
                            }
                            for row in v.iter_mut() {
                                row.swap(i, i + 1);
                            }
                            continue;
                        }
                    }
                    break;
                }
                if m[i][i] < 0 {
                    for j in 0..cols {
                        m[i][j] = -m[i][j];
                    }
                    for j in 0..rows {
                        u[i][j] = -u[i][j];
                    }
                    for r in 0..rows {
                        u_inv[r][i] = -u_inv[r][i];
                    }
                }
                if m[i + 1][i + 1] < 0 {
                    for j in 0..cols {
                        m[i + 1][j] = -m[i + 1][j];
                    }
                    for j in 0..rows {
                        u[i + 1][j] = -u[i + 1][j];
                    }
                    for r in 0..rows {
                        u_inv[r][i + 1] = -u_inv[r][i + 1];
                    }
                }
                changed = true;
            } else if a1 == 0 && a2 != 0 {
                m.swap(i, i + 1);
                u.swap(i, i + 1);
                for r in 0..rows {
                    u_inv[r].swap(i, i + 1);
                }
                for row in m.iter_mut() {
                    row.swap(i, i + 1);
                }
                for row in v.iter_mut() {
                    row.swap(i, i + 1);
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let diag: Vec<i128> = (0..n).map(|i| m[i][i]).collect();
    Smith { diag, u, v, u_inv }
}

fn div_round(a: i128, b: i128) -> i128 {
    // round-to-nearest keeps entries small
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + if (r < 0) == (b < 0) { 1 } else { -1 }
    } else {
        q
    }
}

/// Verify u·a·v == diag(d) (zero-padded); used by tests and callers that
/// want the reconstruction guarantee.
pub fn verify_smith(a: &[Vec<i128>], s: &Smith) -> bool {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    // u·a
    let mut ua = vec![vec![0i128; cols]; rows];
    for i in 0..rows {
        for k in 0..rows {
            let c = s.u[i][k];
            if c == 0 {
                continue;
            }
            for j in 0..cols {
                ua[i][j] += c * a[k][j];
            }
        }
    }
    for i in 0..rows {
        for j in 0..cols {
            let mut val = 0i128;
            for k in 0..cols {
                val += ua[i][k] * s.v[k][j];
            }
            let expect = if i == j && i < s.diag.len() {
                s.diag[i]
            } else {
                0
            };
            if val != expect {
                return false;
            }
        }
    }
    // u · u_inv == I
    for i in 0..rows {
        for j in 0..rows {
            let mut val = 0i128;
            for k in 0..rows {
                val += s.u[i][k] * s.u_inv[k][j];
            }
            if val != i128::from(i == j) {
                return false;
            }
        }
    }
    true
}
