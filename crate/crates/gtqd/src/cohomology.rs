//! Normalized group cochains valued in roots of unity, the bar-resolution
//! coboundary, cocycle/coboundary tests, and H³ with explicit generators.
//!
//! A multiplicative n-cochain with values in μ_N is stored as its exponent
//! table: a map (G∖{1})ⁿ → ℤ/N, with any identity argument evaluating to 0.
//! The coboundary is the alternating bar differential in exponent form.
//!
//! Coboundary tests are "over ℂ^×": whether c = δx for a cochain x valued in
//! the full multiplicative group, not merely μ_N. Any such witness can be
//! normalized to take values in μ_{N·exp(G)} (its N-th power is a character
//! in degree 1, and is cohomologous to one of bounded order in degree 2), so
//! the test becomes a finite linear solve at the lifted modulus.

use std::sync::Arc;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupRef};
use crate::modn::{lcm_u, smith_normal_form, Solver, SparseRow};

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("cochain is not a cocycle (first failure at tuple {0:?})")]
    NotACocycle(Vec<usize>),
    #[error("group order {order} exceeds the cap {cap} for this operation")]
    CapExceeded { order: usize, cap: usize },
    #[error("modulus {modulus} is not a multiple of the group exponent {exponent}")]
    ModulusTooSmall { modulus: u64, exponent: u64 },
}

/// A normalized n-cochain on G with exponent values in ℤ/N.
#[derive(Clone)]
pub struct Cochain {
    group: GroupRef,
    degree: usize,
    modulus: u64,
    /// dense values over non-identity tuples, mixed-radix indexed
    values: Vec<u64>,
}

pub fn tuple_count(order: usize, degree: usize) -> usize {
    (order - 1).pow(degree as u32)
}

impl Cochain {
    pub fn zero(group: &GroupRef, degree: usize, modulus: u64) -> Self {
        assert!(degree >= 1 && modulus >= 1);
        let len = tuple_count(group.order(), degree);
        Cochain {
            group: Arc::clone(group),
            degree,
            modulus,
            values: vec![0; len],
        }
    }

    pub fn from_values(group: &GroupRef, degree: usize, modulus: u64, values: Vec<u64>) -> Self {
        assert_eq!(values.len(), tuple_count(group.order(), degree));
        let values = values.into_iter().map(|v| v % modulus).collect();
        Cochain {
            group: Arc::clone(group),
            degree,
            modulus,
            values,
        }
    }

    pub fn from_fn(
        group: &GroupRef,
        degree: usize,
        modulus: u64,
        mut f: impl FnMut(&[usize]) -> u64,
    ) -> Self {
        let mut c = Self::zero(group, degree, modulus);
        if group.order() == 1 {
            return c;
        }
        let mut tuple = vec![1usize; degree];
        for idx in 0..c.values.len() {
            c.decode(idx, &mut tuple);
            c.values[idx] = f(&tuple) % modulus;
        }
        c
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn modulus(&self) -> u64 {
        self.modulus
    }
    pub fn raw_values(&self) -> &[u64] {
        &self.values
    }

    fn index(&self, args: &[usize]) -> Option<usize> {
        debug_assert_eq!(args.len(), self.degree);
        let base = self.group.order() - 1;
        let mut idx = 0usize;
        for &a in args {
            if a == 0 {
                return None;
            }
            idx = idx * base + (a - 1);
        }
        Some(idx)
    }

    fn decode(&self, mut idx: usize, out: &mut [usize]) {
        let base = self.group.order() - 1;
        for slot in out.iter_mut().rev() {
            *slot = idx % base + 1;
            idx /= base;
        }
    }

    /// Exponent value at a tuple; identity arguments give 0 (normalization).
    pub fn eval(&self, args: &[usize]) -> u64 {
        match self.index(args) {
            Some(i) => self.values[i],
            None => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn eq_values(&self, rhs: &Cochain) -> bool {
        self.modulus == rhs.modulus && self.values == rhs.values
    }

    pub fn add(&self, rhs: &Cochain) -> Cochain {
        assert_eq!(self.degree, rhs.degree);
        let m = lcm_u(self.modulus, rhs.modulus);
        let a = self.lift_modulus(m);
        let b = rhs.lift_modulus(m);
        Cochain {
            group: Arc::clone(&self.group),
            degree: self.degree,
            modulus: m,
            values: a
                .values
                .iter()
                .zip(&b.values)
                .map(|(&x, &y)| (x + y) % m)
                .collect(),
        }
    }

    pub fn neg(&self) -> Cochain {
        Cochain {
            group: Arc::clone(&self.group),
            degree: self.degree,
            modulus: self.modulus,
            values: self
                .values
                .iter()
                .map(|&v| (self.modulus - v) % self.modulus)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Cochain) -> Cochain {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, k: u64) -> Cochain {
        Cochain {
            group: Arc::clone(&self.group),
            degree: self.degree,
            modulus: self.modulus,
            values: self
                .values
                .iter()
                .map(|&v| (v as u128 * k as u128 % self.modulus as u128) as u64)
                .collect(),
        }
    }

    /// Re-express at a multiple modulus: exponents scale by the ratio.
    pub fn lift_modulus(&self, modulus: u64) -> Cochain {
        assert!(modulus % self.modulus == 0);
        let ratio = modulus / self.modulus;
        if ratio == 1 {
            return self.clone();
        }
        Cochain {
            group: Arc::clone(&self.group),
            degree: self.degree,
            modulus,
            values: self.values.iter().map(|&v| v * ratio).collect(),
        }
    }

    /// The bar differential in exponent form.
    pub fn coboundary(&self) -> Cochain {
        let g = &self.group;
        let n = self.degree;
        let m = self.modulus;
        let mut out = Cochain::zero(g, n + 1, m);
        if g.order() == 1 {
            return out;
        }
        let mut tuple = vec![1usize; n + 1];
        for idx in 0..out.values.len() {
            out.decode(idx, &mut tuple);
            out.values[idx] = delta_value(self, &tuple);
        }
        out
    }

    pub fn is_cocycle(&self) -> bool {
        self.first_cocycle_failure().is_none()
    }

    /// First (n+1)-tuple where the cocycle identity fails, if any.
    pub fn first_cocycle_failure(&self) -> Option<Vec<usize>> {
        let g = &self.group;
        if g.order() == 1 {
            return None;
        }
        let n = self.degree;
        let count = tuple_count(g.order(), n + 1);
        let probe = Cochain::zero(g, n + 1, self.modulus);
        let mut tuple = vec![1usize; n + 1];
        for idx in 0..count {
            probe.decode(idx, &mut tuple);
            if delta_value(self, &tuple) != 0 {
                return Some(tuple.clone());
            }
        }
        None
    }
}

/// (δc)(g₁,…,g_{n+1}) evaluated directly from stored values.
fn delta_value(c: &Cochain, tuple: &[usize]) -> u64 {
    let g = &c.group;
    let n = c.degree;
    let m = c.modulus;
    debug_assert_eq!(tuple.len(), n + 1);
    let mut acc: u64 = c.eval(&tuple[1..]);
    let mut merged = Vec::with_capacity(n);
    for i in 0..n {
        merged.clear();
        merged.extend_from_slice(&tuple[..i]);
        merged.push(g.mul(tuple[i], tuple[i + 1]));
        merged.extend_from_slice(&tuple[i + 2..]);
        let v = c.eval(&merged);
        if i % 2 == 0 {
            acc = (acc + m - v) % m;
        } else {
            acc = (acc + v) % m;
        }
    }
    let v = c.eval(&tuple[..n]);
    if (n + 1) % 2 == 0 {
        acc = (acc + v) % m;
    } else {
        acc = (acc + m - v) % m;
    }
    acc
}

/// Sparse rows of the differential δ_n: Cⁿ → C^{n+1} at the given modulus.
/// Row index = (n+1)-tuple, column index = n-tuple.
pub fn delta_matrix_rows(group: &FiniteGroup, degree_from: usize, modulus: u64) -> Vec<SparseRow> {
    let n = degree_from;
    let order = group.order();
    if order == 1 {
        return Vec::new();
    }
    let base = order - 1;
    let row_count = tuple_count(order, n + 1);
    let col_of = |args: &[usize]| -> Option<usize> {
        let mut idx = 0usize;
        for &a in args {
            if a == 0 {
                return None;
            }
            idx = idx * base + (a - 1);
        }
        Some(idx)
    };
    let mut rows = Vec::with_capacity(row_count);
    let mut tuple = vec![1usize; n + 1];
    let mut merged = Vec::with_capacity(n);
    for idx in 0..row_count {
        let mut rem = idx;
        for slot in tuple.iter_mut().rev() {
            *slot = rem % base + 1;
            rem /= base;
        }
        let mut entries: Vec<(usize, i64)> = Vec::with_capacity(n + 2);
        if let Some(c) = col_of(&tuple[1..]) {
            entries.push((c, 1));
        }
        for i in 0..n {
            merged.clear();
            merged.extend_from_slice(&tuple[..i]);
            merged.push(group.mul(tuple[i], tuple[i + 1]));
            merged.extend_from_slice(&tuple[i + 2..]);
            if let Some(c) = col_of(&merged) {
                entries.push((c, if i % 2 == 0 { -1 } else { 1 }));
            }
        }
        if let Some(c) = col_of(&tuple[..n]) {
            entries.push((c, if (n + 1) % 2 == 0 { 1 } else { -1 }));
        }
        entries.sort_by_key(|&(c, _)| c);
        let mut row: SparseRow = Vec::with_capacity(entries.len());
        for (c, s) in entries {
            let v = s.rem_euclid(modulus as i64) as u64;
            if v == 0 {
                continue;
            }
            if let Some(last) = row.last_mut() {
                if last.0 == c {
                    last.1 = (last.1 + v) % modulus;
                    continue;
                }
            }
            row.push((c, v));
        }
        row.retain(|&(_, v)| v != 0);
        rows.push(row);
    }
    rows
}

/// A reusable solver for δ·x = target at a fixed witness degree and modulus.
pub struct CoboundarySolver {
    group: GroupRef,
    witness_degree: usize,
    modulus: u64,
    solver: Solver,
}

impl CoboundarySolver {
    /// Solves δ_{witness_degree} x = c for (witness_degree+1)-cochains c,
    /// everything at `modulus`.
    pub fn new(group: &GroupRef, witness_degree: usize, modulus: u64) -> Self {
        let rows = delta_matrix_rows(group, witness_degree, modulus);
        let vars = tuple_count(group.order(), witness_degree);
        let solver = Solver::new(&rows, vars, modulus);
        CoboundarySolver {
            group: Arc::clone(group),
            witness_degree,
            modulus,
            solver,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Solve δx = c exactly at this solver's modulus (c is lifted first).
    /// Returns the canonical (lexicographically least) witness.
    pub fn solve(&self, c: &Cochain) -> Option<Cochain> {
        assert_eq!(c.degree, self.witness_degree + 1);
        if self.group.order() == 1 {
            return Some(Cochain::zero(&self.group, self.witness_degree, self.modulus));
        }
        let lifted = c.lift_modulus(self.modulus);
        let x = self.solver.solve(&lifted.values)?;
        let w = Cochain::from_values(&self.group, self.witness_degree, self.modulus, x);
        debug_assert!(w.coboundary().eq_values(&lifted));
        Some(w)
    }
}

/// Decide membership in Bⁿ(G, ℂ^×): is there a degree n−1 cochain over ℂ^×
/// whose coboundary is c? Solved at the lifted modulus N·exp(G).
pub fn is_coboundary_over_c(c: &Cochain) -> Option<Cochain> {
    let lifted = c.modulus * c.group.exponent();
    let solver = CoboundarySolver::new(&c.group, c.degree - 1, lifted);
    solver.solve(c)
}

/// Least k ≥ 1 with k·ω a coboundary over ℂ^×: the order of [ω] in
/// Hⁿ(G, ℂ^×).
pub fn class_order(omega: &Cochain) -> Result<u64, CohomologyError> {
    if let Some(t) = omega.first_cocycle_failure() {
        return Err(CohomologyError::NotACocycle(t));
    }
    let lifted = omega.modulus * omega.group.exponent();
    let solver = CoboundarySolver::new(&omega.group, omega.degree - 1, lifted);
    for k in 1..=omega.modulus {
        if solver.solve(&omega.scale(k)).is_some() {
            return Ok(k);
        }
    }
    unreachable!("N·ω is the zero cochain, always a coboundary");
}

/// The standard explicit degree-3 representative on ℤ/n with parameter q:
/// exponent q·a·⌊(b+c)/n⌋ mod n.
pub fn cyclic_cocycle(group: &GroupRef, q: u64) -> Cochain {
    let n = group.order();
    for i in 0..n {
        for j in 0..n {
            assert_eq!(group.mul(i, j), (i + j) % n, "group is not canonically cyclic");
        }
    }
    Cochain::from_fn(group, 3, n as u64, |args| {
        let (a, b, c) = (args[0], args[1], args[2]);
        (q as u128 * a as u128 * ((b + c) / n) as u128 % n as u128) as u64
    })
}

/// Pull back along a quotient projection proj: G → Q (element map).
pub fn inflate(c: &Cochain, big: &GroupRef, proj: &[usize]) -> Cochain {
    assert_eq!(proj.len(), big.order());
    let out = Cochain::from_fn(big, c.degree, c.modulus, |args| {
        let mapped: Vec<usize> = args.iter().map(|&a| proj[a]).collect();
        c.eval(&mapped)
    });
    debug_assert!(c.first_cocycle_failure().is_some() || out.is_cocycle());
    out
}

/// Restrict along a subgroup embedding emb: H → G (element map).
pub fn restrict(c: &Cochain, sub: &GroupRef, emb: &[usize]) -> Cochain {
    assert_eq!(emb.len(), sub.order());
    let out = Cochain::from_fn(sub, c.degree, c.modulus, |args| {
        let mapped: Vec<usize> = args.iter().map(|&a| emb[a]).collect();
        c.eval(&mapped)
    });
    debug_assert!(c.first_cocycle_failure().is_some() || out.is_cocycle());
    out
}

/// H³(G, ℂ^×) presented by invariant factors with explicit generator
/// cocycles (μ_N-valued at the stated modulus).
pub struct CohomologyGroup {
    pub degree: usize,
    pub modulus: u64,
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<Cochain>,
}

impl CohomologyGroup {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// One representative per class: every combination Σ c_i·gen_i with
    /// 0 ≤ c_i < d_i; the zero cochain comes first. When H³ is trivial the
    /// caller supplies its own zero cochain, so this returns an empty list.
    pub fn class_representatives(&self) -> Vec<Cochain> {
        let group = match self.generators.first() {
            Some(g) => Arc::clone(g.group()),
            None => return Vec::new(),
        };
        let mut combos: Vec<Vec<u64>> = vec![vec![0; self.invariant_factors.len()]];
        'outer: loop {
            let mut next = combos.last().unwrap().clone();
            for i in 0..next.len() {
                next[i] += 1;
                if next[i] < self.invariant_factors[i] {
                    combos.push(next);
                    continue 'outer;
                }
                next[i] = 0;
            }
            break;
        }
        combos
            .into_iter()
            .map(|c| {
                let mut acc = Cochain::zero(&group, self.degree, self.modulus);
                for (k, gen) in c.iter().zip(&self.generators) {
                    acc = acc.add(&gen.scale(*k));
                }
                acc
            })
            .collect()
    }
}

pub const DEFAULT_H3_CAP: usize = 16;

/// Compute H³(G, ℂ^×) from μ_N-valued cochains: the kernel of δ₃ at modulus
/// N, modulo those cocycles that become coboundaries over ℂ^× (decided at
/// the lifted modulus N·exp(G)). N must be a multiple of exp(G) large enough
/// to realize every class; N = |G| always is.
pub fn h3(group: &GroupRef, modulus: u64, cap: usize) -> Result<CohomologyGroup, CohomologyError> {
    let order = group.order();
    if order > cap {
        return Err(CohomologyError::CapExceeded { order, cap });
    }
    let exp = group.exponent();
    if modulus % exp != 0 {
        return Err(CohomologyError::ModulusTooSmall {
            modulus,
            exponent: exp,
        });
    }
    if order == 1 {
        return Ok(CohomologyGroup {
            degree: 3,
            modulus,
            invariant_factors: vec![],
            generators: vec![],
        });
    }
    let m = modulus;
    let n3 = tuple_count(order, 3);
    let n2 = tuple_count(order, 2);

    // Z³ = ker δ₃ over ℤ/m
    let d3_rows = delta_matrix_rows(group, 3, m);
    let z3_solver = Solver::new(&d3_rows, n3, m);
    let kernel: Vec<SparseRow> = z3_solver.kernel_rows_sparse().to_vec();
    let s = kernel.len();

    // W = {c mod m : t·c lies in im δ₂ at modulus t·m}, t = exp(G):
    // kernel of [t·I | -δ₂] over ℤ/(t·m), projected to the c block.
    let t = exp;
    let m_big = t * m;
    let d2_rows = delta_matrix_rows(group, 2, m_big);
    debug_assert_eq!(d2_rows.len(), n3);
    let mut combined: Vec<SparseRow> = Vec::with_capacity(n3);
    for (j, d2_row) in d2_rows.iter().enumerate() {
        let mut row: SparseRow = vec![(j, t % m_big)];
        for &(k, v) in d2_row {
            row.push((n3 + k, (m_big - v) % m_big));
        }
        combined.push(row);
    }
    let w_solver = Solver::new(&combined, n3 + n2, m_big);
    let w_gens: Vec<SparseRow> = w_solver
        .kernel_rows_sparse()
        .iter()
        .filter_map(|row| {
            let projected: SparseRow = row
                .iter()
                .take_while(|&&(c, _)| c < n3)
                .filter_map(|&(c, v)| {
                    let vm = v % m;
                    (vm != 0).then_some((c, vm))
                })
                .collect();
            (!projected.is_empty()).then_some(projected)
        })
        .collect();
    let w_howell = crate::modn::Howell::new(w_gens, n3, m);

    // relations among kernel generators modulo W: integer x with K·x ∈ W.
    // coordinate r yields the equation Σ_i K_i[r]·x_i + Σ_j W_j[r]·y_j = 0
    let mut per_coord: Vec<SparseRow> = vec![Vec::new(); n3];
    for (i, k) in kernel.iter().enumerate() {
        for &(r, v) in k {
            per_coord[r].push((i, v));
        }
    }
    for (j, w) in w_howell.rows.iter().enumerate() {
        for &(r, v) in w {
            per_coord[r].push((s + j, v));
        }
    }
    for row in per_coord.iter_mut() {
        row.sort_by_key(|&(c, _)| c);
    }
    let rel_solver = Solver::new(&per_coord, s + w_howell.rows.len(), m);
    let relations: Vec<Vec<i128>> = rel_solver
        .kernel_rows_sparse()
        .iter()
        .map(|row| {
            let mut v = vec![0i128; s];
            for &(c, val) in row {
                if c < s {
                    v[c] = val as i128;
                }
            }
            v
        })
        .collect();

    // present ℤ^s / (relations + m·ℤ^s) by integer Smith normal form
    let a: Vec<Vec<i128>> = (0..s)
        .map(|r| {
            let mut row: Vec<i128> = relations.iter().map(|rel| rel[r]).collect();
            for j in 0..s {
                row.push(if j == r { m as i128 } else { 0 });
            }
            row
        })
        .collect();
    let snf = smith_normal_form(&a);
    debug_assert!(crate::modn::verify_smith(&a, &snf));

    let mut paired: Vec<(u64, Cochain)> = Vec::new();
    for (i, &d) in snf.diag.iter().enumerate() {
        let d = d.unsigned_abs() as u64;
        if d <= 1 {
            continue;
        }
        // generator = Σ_j u_inv[j][i] · K_j, canonically reduced modulo W
        let mut dense = vec![0u64; n3];
        for (j, k) in kernel.iter().enumerate() {
            let coeff = snf.u_inv[j][i].rem_euclid(m as i128) as u64;
            if coeff == 0 {
                continue;
            }
            for &(c, v) in k {
                dense[c] = ((dense[c] as u128 + v as u128 * coeff as u128) % m as u128) as u64;
            }
        }
        let sparse: SparseRow = dense
            .iter()
            .enumerate()
            .filter_map(|(c, &v)| (v != 0).then_some((c, v)))
            .collect();
        let (reduced, _) = w_howell.reduce(&sparse);
        let mut vals = vec![0u64; n3];
        for &(c, v) in &reduced {
            vals[c] = v;
        }
        let gen = Cochain::from_values(group, 3, m, vals);
        debug_assert!(gen.is_cocycle());
        paired.push((d, gen));
    }
    paired.sort_by_key(|&(d, _)| d);
    let (invariant_factors, generators): (Vec<u64>, Vec<Cochain>) = paired.into_iter().unzip();

    Ok(CohomologyGroup {
        degree: 3,
        modulus,
        invariant_factors,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn z(n: usize) -> GroupRef {
        FiniteGroup::cyclic(n)
    }

    #[test]
    fn coboundary_of_zero_is_zero() {
        let g = z(4);
        let c = Cochain::zero(&g, 2, 4);
        assert!(c.coboundary().is_zero());
    }

    #[test]
    fn delta_on_z2_one_cochain() {
        // τ(1) = k gives (δτ)(1,1) = 2k mod N
        let g = z(2);
        for k in 0..6u64 {
            let tau = Cochain::from_values(&g, 1, 6, vec![k]);
            let d = tau.coboundary();
            assert_eq!(d.eval(&[1, 1]), (2 * k) % 6);
        }
    }

    #[test]
    fn delta_squared_is_zero_exhaustive_small() {
        for n in 2..=4 {
            let g = z(n);
            let len1 = tuple_count(n, 1);
            for mask in 0..(1u32 << len1) {
                let vals: Vec<u64> = (0..len1).map(|i| ((mask >> i) & 1) as u64).collect();
                let c = Cochain::from_values(&g, 1, 2, vals);
                assert!(c.coboundary().coboundary().is_zero());
            }
        }
    }

    #[test]
    fn delta_squared_is_zero_random_two_cochains_z4() {
        let g = z(4);
        let len = tuple_count(4, 2);
        let mut state = 12345u64;
        for _ in 0..50 {
            let vals: Vec<u64> = (0..len)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    (state >> 33) % 4
                })
                .collect();
            let c = Cochain::from_values(&g, 2, 4, vals);
            assert!(c.coboundary().coboundary().is_zero());
        }
    }

    #[test]
    fn nontrivial_z2_three_cocycle_by_brute_force() {
        // ω(1,1,1) = -1 on Z/2: a cocycle but not a coboundary over ℂ^×.
        // Brute-force oracle: δb(1,1,1) = 0 for every 2-cochain b at the
        // lifted modulus, so only the trivial 3-cochain is a coboundary.
        let g = z(2);
        let omega = Cochain::from_values(&g, 3, 2, vec![1]);
        assert!(omega.is_cocycle());
        for b_val in 0..4u64 {
            let b = Cochain::from_values(&g, 2, 4, vec![b_val]);
            assert_eq!(b.coboundary().eval(&[1, 1, 1]), 0);
        }
        assert!(is_coboundary_over_c(&omega).is_none());
        assert_eq!(class_order(&omega).unwrap(), 2);
    }

    #[test]
    fn coboundaries_are_recognized_with_witness() {
        let g = z(4);
        let b = Cochain::from_values(&g, 2, 4, vec![1, 3, 0, 2, 2, 1, 0, 0, 3]);
        let c = b.coboundary();
        let w = is_coboundary_over_c(&c).expect("a coboundary must be recognized");
        assert!(w.coboundary().eq_values(&c.lift_modulus(w.modulus())));
        // trivial cochain: witness is the zero cochain (canonical solution)
        let z0 = Cochain::zero(&g, 3, 4);
        let w0 = is_coboundary_over_c(&z0).unwrap();
        assert!(w0.is_zero());
    }

    #[test]
    fn coboundary_test_invariant_under_coboundary_shift() {
        let g = z(4);
        let omega = cyclic_cocycle(&g, 1);
        let b = Cochain::from_values(&g, 2, 4, vec![2, 1, 0, 3, 0, 0, 1, 2, 1]);
        let shifted = omega.add(&b.coboundary());
        assert_eq!(
            is_coboundary_over_c(&omega).is_some(),
            is_coboundary_over_c(&shifted).is_some()
        );
        assert_eq!(class_order(&omega).unwrap(), class_order(&shifted).unwrap());
    }

    #[test]
    fn cyclic_cocycle_class_orders() {
        let g = z(4);
        assert_eq!(class_order(&cyclic_cocycle(&g, 0)).unwrap(), 1);
        assert_eq!(class_order(&cyclic_cocycle(&g, 1)).unwrap(), 4);
        assert_eq!(class_order(&cyclic_cocycle(&g, 2)).unwrap(), 2);
    }

    #[test]
    fn class_order_rejects_non_cocycles() {
        let g = z(2);
        // ω(1,1,1) = 1 mod 3 on Z/2 is not a cocycle: δω(1,1,1,1) = 2 mod 3
        let c = Cochain::from_values(&g, 3, 3, vec![1]);
        assert!(matches!(class_order(&c), Err(CohomologyError::NotACocycle(_))));
    }

    #[test]
    fn h3_of_cyclic_groups_matches_eilenberg_maclane() {
        for n in 2..=8usize {
            let g = z(n);
            let h = h3(&g, n as u64, DEFAULT_H3_CAP).unwrap();
            assert_eq!(h.invariant_factors, vec![n as u64], "H3(Z/{n})");
            for (gen, &d) in h.generators.iter().zip(&h.invariant_factors) {
                assert!(gen.is_cocycle());
                assert_eq!(class_order(gen).unwrap(), d, "generator order for Z/{n}");
            }
        }
    }

    #[test]
    fn h3_of_klein_four_group() {
        let g = crate::catalog::by_name("z2xz2").unwrap();
        let h = h3(&g, 4, DEFAULT_H3_CAP).unwrap();
        assert_eq!(h.invariant_factors, vec![2, 2, 2]);
        for (gen, &d) in h.generators.iter().zip(&h.invariant_factors) {
            assert_eq!(class_order(gen).unwrap(), d);
        }
    }

    #[test]
    fn h3_of_products_matches_kuenneth_oracle() {
        // literature formula: H³(ℤ/n × ℤ/m, ℂ^×) ≅ ℤ/n ⊕ ℤ/m ⊕ ℤ/gcd(n,m)
        for (n, m) in [(2usize, 4usize), (3, 3)] {
            let g = FiniteGroup::direct_product(&z(n), &z(m));
            let modulus = (n * m) as u64;
            let h = h3(&g, modulus, DEFAULT_H3_CAP).unwrap();
            let mut expect = vec![n as u64, m as u64, num::integer::gcd(n as u64, m as u64)];
            expect.retain(|&d| d > 1);
            expect.sort_unstable();
            let mut got = h.invariant_factors.clone();
            got.sort_unstable();
            assert_eq!(got, expect, "H3(Z/{n} x Z/{m})");
        }
    }

    #[test]
    fn h3_cap_is_enforced() {
        let g = z(8);
        assert!(matches!(
            h3(&g, 8, 4),
            Err(CohomologyError::CapExceeded { .. })
        ));
    }

    #[test]
    fn restrict_cyclic_cocycle_to_subgroup() {
        // restricting the order-4 class on ℤ/4 to {0,2} ≅ ℤ/2 gives the
        // nontrivial class: ω(2,2,2) = ζ4² = -1
        let g = z(4);
        let omega = cyclic_cocycle(&g, 1);
        assert_eq!(omega.eval(&[2, 2, 2]), 2);
        let (sub, emb) = g.subgroup(&[0, 2]);
        let r = restrict(&omega, &sub, &emb);
        assert!(r.is_cocycle());
        assert!(
            is_coboundary_over_c(&r).is_none(),
            "restriction must be nontrivial on Z/2"
        );
        // restriction to the trivial subgroup is trivial
        let (triv, emb2) = g.subgroup(&[0]);
        let r2 = restrict(&omega, &triv, &emb2);
        assert!(r2.is_zero());
    }

    #[test]
    fn inflate_trivial_is_trivial() {
        let g = z(4);
        let (q, proj) = g.quotient(&[0, 2]);
        let triv = Cochain::zero(&q, 3, 2);
        let inflated = inflate(&triv, &g, &proj);
        assert!(inflated.is_zero());
        let qc = Cochain::from_values(&q, 3, 2, vec![1]);
        let inf = inflate(&qc, &g, &proj);
        assert!(inf.is_cocycle());
    }

    #[test]
    fn h3_generators_are_canonical_and_deterministic() {
        let g = z(4);
        let h1 = h3(&g, 4, DEFAULT_H3_CAP).unwrap();
        let h2 = h3(&g, 4, DEFAULT_H3_CAP).unwrap();
        assert_eq!(h1.generators.len(), h2.generators.len());
        for (a, b) in h1.generators.iter().zip(&h2.generators) {
            assert_eq!(a.raw_values(), b.raw_values());
        }
        assert_eq!(h1.class_representatives().len(), 4);
    }
}
