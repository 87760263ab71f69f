//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense indices 0..order-1 with the identity at index 0, so
//! every derived table downstream (cocycles, theta/gamma, centralizer data)
//! is keyed by plain indices. Construction validates the full group axioms.

use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

use crate::modn::{lcm_u, smith_normal_form};

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("table is not a Latin square: row {row} repeats entry {value}")]
    NotLatinSquare { row: usize, value: usize },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("associativity fails at triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("table entry {value} out of range for order {order}")]
    EntryOutOfRange { value: usize, order: usize },
    #[error("table is not square")]
    NotSquare,
    #[error("generator closure exceeds cap {cap}")]
    ClosureTooLarge { cap: usize },
    #[error("permutations have mismatched degrees")]
    DegreeMismatch,
    #[error("not a permutation of its domain")]
    NotAPermutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sylow2Type {
    Cyclic,
    GeneralizedQuaternion,
    Neither,
    Odd,
}

/// A finite group given by its multiplication table. Immutable once built.
#[derive(Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    pub element_names: Option<Vec<String>>,
}

pub type GroupRef = Arc<FiniteGroup>;

impl FiniteGroup {
    /// Validate a raw table and relabel so the identity is index 0.
    pub fn from_table(table: &[Vec<usize>]) -> Result<GroupRef, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NoIdentity);
        }
        for row in table {
            if row.len() != n {
                return Err(GroupError::NotSquare);
            }
            for &v in row {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { value: v, order: n });
                }
            }
        }
        // Latin square check
        for (i, row) in table.iter().enumerate() {
            let mut seen = vec![false; n];
            for &v in row {
                if seen[v] {
                    return Err(GroupError::NotLatinSquare { row: i, value: v });
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in table {
                if seen[row[j]] {
                    return Err(GroupError::NotLatinSquare { row: j, value: row[j] });
                }
                seen[row[j]] = true;
            }
        }
        // locate two-sided identity
        let mut identity = None;
        'outer: for e in 0..n {
            for x in 0..n {
                if table[e][x] != x || table[x][e] != x {
                    continue 'outer;
                }
            }
            identity = Some(e);
            break;
        }
        let Some(e) = identity else {
            return Err(GroupError::NoIdentity);
        };
        // relabel: swap 0 and e
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut flat = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                flat[relabel(i) * n + relabel(j)] = relabel(table[i][j]);
            }
        }
        // associativity
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b];
                for c in 0..n {
                    if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                        return Err(GroupError::NonAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inverse = vec![0usize; n];
        for x in 0..n {
            inverse[x] = (0..n).find(|&y| flat[x * n + y] == 0).unwrap();
        }
        Ok(Arc::new(FiniteGroup {
            order: n,
            table: flat,
            inverse,
            element_names: None,
        }))
    }

    /// Closure-enumerate the group generated by permutations of a common
    /// degree. Element 0 is the identity; ordering is breadth-first with
    /// generators applied in the given order.
    pub fn from_generators(
        perms: &[Vec<usize>],
        degree: usize,
        cap: usize,
    ) -> Result<GroupRef, GroupError> {
        for p in perms {
            if p.len() != degree {
                return Err(GroupError::DegreeMismatch);
            }
            let mut seen = vec![false; degree];
            for &v in p {
                if v >= degree || seen[v] {
                    return Err(GroupError::NotAPermutation);
                }
                seen[v] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elems: Vec<Vec<usize>> = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut cursor = 0;
        while cursor < elems.len() {
            for g in perms {
                // right-multiply: (x·g)(i) = x[g[i]]
                let x = &elems[cursor];
                let prod: Vec<usize> = (0..degree).map(|i| x[g[i]]).collect();
                if !index.contains_key(&prod) {
                    if elems.len() >= cap {
                        return Err(GroupError::ClosureTooLarge { cap });
                    }
                    index.insert(prod.clone(), elems.len());
                    elems.push(prod);
                }
            }
            cursor += 1;
        }
        let n = elems.len();
        let mut flat = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod: Vec<usize> = (0..degree).map(|k| elems[i][elems[j][k]]).collect();
                flat[i * n + j] = index[&prod];
            }
        }
        let mut inverse = vec![0usize; n];
        for x in 0..n {
            inverse[x] = (0..n).find(|&y| flat[x * n + y] == 0).unwrap();
        }
        Ok(Arc::new(FiniteGroup {
            order: n,
            table: flat,
            inverse,
            element_names: None,
        }))
    }

    /// Construct from a flat table already known to satisfy the group
    /// axioms with identity at 0 (e.g. a central extension built from a
    /// verified 2-cocycle). Skips the O(n³) associativity sweep.
    pub(crate) fn from_flat_trusted(order: usize, table: Vec<usize>) -> GroupRef {
        debug_assert_eq!(table.len(), order * order);
        let inverse = (0..order)
            .map(|x| (0..order).find(|&y| table[x * order + y] == 0).unwrap())
            .collect();
        Arc::new(FiniteGroup {
            order,
            table,
            inverse,
            element_names: None,
        })
    }

    pub fn cyclic(n: usize) -> GroupRef {
        assert!(n >= 1);
        let mut flat = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                flat[i * n + j] = (i + j) % n;
            }
        }
        let inverse = (0..n).map(|i| (n - i) % n).collect();
        Arc::new(FiniteGroup {
            order: n,
            table: flat,
            inverse,
            element_names: None,
        })
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> GroupRef {
        let n = a.order * b.order;
        let enc = |x: usize, y: usize| x * b.order + y;
        let mut flat = vec![0usize; n * n];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        flat[enc(x1, y1) * n + enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|i| enc(a.inv(i / b.order), b.inv(i % b.order)))
            .collect();
        Arc::new(FiniteGroup {
            order: n,
            table: flat,
            inverse,
            element_names: None,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Right conjugation x^g = g^{-1} x g.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order).fold(1u64, |acc, x| lcm_u(acc, self.element_order(x) as u64))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }

    /// Sorted closure of a set of elements.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        for &g in gens {
            in_set[g] = true;
        }
        loop {
            let members: Vec<usize> = (0..self.order).filter(|&x| in_set[x]).collect();
            let mut changed = false;
            for &x in &members {
                for &y in &members {
                    let z = self.mul(x, y);
                    if !in_set[z] {
                        in_set[z] = true;
                        changed = true;
                    }
                }
                let ix = self.inv(x);
                if !in_set[ix] {
                    in_set[ix] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        (0..self.order).filter(|&x| in_set[x]).collect()
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|g| self.conjugate(x, g)).collect();
            members.sort_unstable();
            members.dedup();
            let id = classes.len();
            for &m in &members {
                class_of[m] = id;
            }
            classes.push(members);
        }
        ConjugacyClasses { classes, class_of }
    }

    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&g| self.conjugate(x, g) == x)
            .collect()
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                gens.push(self.commutator(a, b));
            }
        }
        self.subgroup_closure(&gens)
    }

    /// The subgroup on the given (closed) element set, as its own group with
    /// elements relabeled 0..k-1 in sorted order; returns the embedding map
    /// new index -> old index.
    pub fn subgroup(&self, elems: &[usize]) -> (GroupRef, Vec<usize>) {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.first(), Some(&0), "subgroup must contain identity");
        let pos: HashMap<usize, usize> = sorted.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let k = sorted.len();
        let mut flat = vec![0usize; k * k];
        for i in 0..k {
            for j in 0..k {
                let prod = self.mul(sorted[i], sorted[j]);
                flat[i * k + j] = *pos
                    .get(&prod)
                    .expect("element set not closed under multiplication");
            }
        }
        let inverse = (0..k).map(|i| pos[&self.inv(sorted[i])]).collect();
        (
            Arc::new(FiniteGroup {
                order: k,
                table: flat,
                inverse,
                element_names: None,
            }),
            sorted,
        )
    }

    /// Quotient by a normal subgroup: returns (G/K, projection map).
    pub fn quotient(&self, normal: &[usize]) -> (GroupRef, Vec<usize>) {
        let mut in_k = vec![false; self.order];
        for &x in normal {
            in_k[x] = true;
        }
        // verify normality
        for &x in normal {
            for g in 0..self.order {
                assert!(in_k[self.conjugate(x, g)], "subgroup is not normal");
            }
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..self.order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            for &k in normal {
                coset_of[self.mul(x, k)] = id;
            }
            reps.push(x);
        }
        let q = reps.len();
        let mut flat = vec![0usize; q * q];
        for i in 0..q {
            for j in 0..q {
                flat[i * q + j] = coset_of[self.mul(reps[i], reps[j])];
            }
        }
        let inverse = (0..q).map(|i| coset_of[self.inv(reps[i])]).collect();
        (
            Arc::new(FiniteGroup {
                order: q,
                table: flat,
                inverse,
                element_names: None,
            }),
            coset_of,
        )
    }

    /// The unique element of order 2, when exactly one exists.
    pub fn unique_involution(&self) -> Option<usize> {
        let mut found = None;
        for x in 1..self.order {
            if self.mul(x, x) == 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(x);
            }
        }
        found
    }

    /// Find a 2-Sylow subgroup by extending 2-subgroups inside normalizers,
    /// then classify it.
    pub fn sylow2_type(&self) -> Sylow2Type {
        let mut two_part = 1usize;
        let mut m = self.order;
        while m % 2 == 0 {
            two_part *= 2;
            m /= 2;
        }
        if two_part == 1 {
            return Sylow2Type::Odd;
        }
        let sylow = self.sylow2_subgroup();
        assert_eq!(sylow.len(), two_part);
        let (t, _) = self.subgroup(&sylow);
        if (0..t.order()).any(|x| t.element_order(x) == t.order()) {
            return Sylow2Type::Cyclic;
        }
        if t.unique_involution().is_some() {
            Sylow2Type::GeneralizedQuaternion
        } else {
            Sylow2Type::Neither
        }
    }

    pub fn sylow2_subgroup(&self) -> Vec<usize> {
        let mut two_part = 1usize;
        let mut m = self.order;
        while m % 2 == 0 {
            two_part *= 2;
            m /= 2;
        }
        if two_part == 1 {
            return vec![0];
        }
        let is_two_element = |x: usize| self.element_order(x).is_power_of_two();
        let mut p: Vec<usize> = vec![0];
        while p.len() < two_part {
            // normalizer of P
            let in_p = {
                let mut v = vec![false; self.order];
                for &x in &p {
                    v[x] = true;
                }
                v
            };
            let normalizer: Vec<usize> = (0..self.order)
                .filter(|&g| p.iter().all(|&x| in_p[self.conjugate(x, g)]))
                .collect();
            let ext = normalizer
                .iter()
                .copied()
                .find(|&g| !in_p[g] && is_two_element(g))
                .expect("2-subgroup below Sylow order must extend in its normalizer");
            let mut gens = p.clone();
            gens.push(ext);
            p = self.subgroup_closure(&gens);
        }
        p
    }

    pub fn character_group(&self) -> CharacterGroup {
        CharacterGroup::new(self)
    }
}

pub struct ConjugacyClasses {
    /// Sorted member lists; representative = least member = first entry.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// Bundled output of the class/centralizer/center analysis.
pub struct GroupAnalysis {
    pub classes: ConjugacyClasses,
    /// Centralizer of every element, keyed by element index.
    pub centralizers: Vec<Vec<usize>>,
    pub center: Vec<usize>,
}

pub fn classes_and_centralizers(g: &FiniteGroup) -> GroupAnalysis {
    let classes = g.conjugacy_classes();
    let centralizers: Vec<Vec<usize>> = (0..g.order()).map(|x| g.centralizer(x)).collect();
    // the center is the intersection of all centralizers
    let mut center: Vec<usize> = (0..g.order()).collect();
    for c in &centralizers {
        center.retain(|x| c.contains(x));
    }
    debug_assert_eq!(center, g.center());
    GroupAnalysis {
        classes,
        centralizers,
        center,
    }
}

/// The character group Ĝ = Hom(G, ℂ^×), presented by the cyclic invariant
/// factors of the abelianization. Characters are exponent vectors: character
/// with coordinates c evaluates at x to ζ_e^{Σ_i c_i·eval[i][x]·(e/d_i)},
/// where e is the exponent of G/[G,G]. All arithmetic is on exponents.
pub struct CharacterGroup {
    pub invariant_factors: Vec<u64>,
    /// exponent of the abelianization (lcm of the invariant factors)
    pub exponent: u64,
    /// eval[i][x]: value exponent of generator character i at element x,
    /// in ℤ/d_i (scale by e/d_i for a common ℤ/e denominator)
    pub eval: Vec<Vec<u64>>,
    /// image of each element in the abelianization, for character solving
    pub ab_coords: Vec<Vec<u64>>,
}

impl CharacterGroup {
    fn new(g: &FiniteGroup) -> Self {
        let commutator = g.commutator_subgroup();
        let (ab, proj) = g.quotient(&commutator);
        let m = ab.order();
        // presentation: Z^m -> Ab, e_i -> element i; relations from the table
        // plus m·e_i (element orders divide |Ab|)
        let mut rel_cols: Vec<Vec<i128>> = Vec::new();
        for i in 0..m {
            for j in 0..=i {
                let k = ab.mul(i, j);
                let mut col = vec![0i128; m];
                col[i] += 1;
                col[j] += 1;
                col[k] -= 1;
                rel_cols.push(col);
            }
        }
        {
            let mut col = vec![0i128; m];
            col[0] = 1;
            rel_cols.push(col);
        }
        for i in 0..m {
            let mut col = vec![0i128; m];
            col[i] = m as i128;
            rel_cols.push(col);
        }
        // relation matrix: m rows, columns = relations
        let cols = rel_cols.len();
        let a: Vec<Vec<i128>> = (0..m)
            .map(|r| (0..cols).map(|c| rel_cols[c][r]).collect())
            .collect();
        let s = smith_normal_form(&a);
        debug_assert!(crate::modn::verify_smith(&a, &s));
        let mut invariant_factors: Vec<u64> = Vec::new();
        let mut gen_rows: Vec<usize> = Vec::new();
        for (i, &d) in s.diag.iter().enumerate() {
            let d = d.unsigned_abs() as u64;
            if d > 1 {
                invariant_factors.push(d);
                gen_rows.push(i);
            }
        }
        debug_assert_eq!(
            invariant_factors.iter().product::<u64>(),
            m as u64,
            "invariant factors must multiply to |G/[G,G]|"
        );
        let exponent = invariant_factors.iter().fold(1, |acc, &d| lcm_u(acc, d));
        // generator character i at ab-element j: exponent u[row_i][j] mod d_i
        let mut eval: Vec<Vec<u64>> = Vec::with_capacity(invariant_factors.len());
        let mut ab_eval: Vec<Vec<u64>> = Vec::new();
        for (gi, &row) in gen_rows.iter().enumerate() {
            let d = invariant_factors[gi];
            let per_ab: Vec<u64> = (0..m)
                .map(|j| (s.u[row][j].rem_euclid(d as i128)) as u64)
                .collect();
            ab_eval.push(per_ab.clone());
            eval.push((0..g.order()).map(|x| per_ab[proj[x]]).collect());
        }
        let ab_coords: Vec<Vec<u64>> = (0..g.order())
            .map(|x| ab_eval.iter().map(|row| row[proj[x]]).collect())
            .collect();
        CharacterGroup {
            invariant_factors,
            exponent,
            eval,
            ab_coords,
        }
    }

    pub fn char_count(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Value exponent of the character with the given coordinates at element
    /// x, as a fraction of a full turn with denominator `modulus`
    /// (`modulus` must be divisible by the abelianization exponent).
    pub fn eval_exponent(&self, coords: &[u64], x: usize, modulus: u64) -> u64 {
        assert!(self.exponent == 1 || modulus % self.exponent == 0);
        let mut acc: u128 = 0;
        for (i, (&c, d)) in coords.iter().zip(&self.invariant_factors).enumerate() {
            // c · eval[i][x] / d_i of a turn
            let scale = (modulus / d) as u128;
            acc = (acc + c as u128 * self.eval[i][x] as u128 % *d as u128 * scale)
                % modulus as u128;
        }
        acc as u64
    }

    /// Express a homomorphism f: G → ℤ/modulus (additive exponents) in
    /// character coordinates; None if f is not realizable (not a character).
    pub fn express_hom(&self, f: &[u64], modulus: u64) -> Option<Vec<u64>> {
        // evaluate f on preimages of the generator basis: coordinates follow
        // from values at elements whose ab-image is the i-th basis vector
        let mut coords = vec![0u64; self.invariant_factors.len()];
        for i in 0..self.invariant_factors.len() {
            let d = self.invariant_factors[i];
            // find an element mapping to e_i in the abelianization
            let target: Vec<u64> = (0..self.invariant_factors.len())
                .map(|j| u64::from(j == i))
                .collect();
            let x = (0..f.len()).find(|&x| self.ab_coords[x] == target)?;
            // f(x) must be a multiple of modulus/d
            let step = modulus / num::integer::gcd(modulus, d);
            if f[x] % step != 0 {
                return None;
            }
            coords[i] = f[x] / step % d;
        }
        // verify everywhere
        for x in 0..f.len() {
            if self.eval_exponent(&coords, x, modulus) != f[x] % modulus {
                return None;
            }
        }
        Some(coords)
    }

    /// Iterate all characters as coordinate vectors, identity first.
    pub fn all_characters(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![0u64; self.invariant_factors.len()]];
        loop {
            let mut next = out.last().unwrap().clone();
            let mut i = 0;
            loop {
                if i == next.len() {
                    return out;
                }
                next[i] += 1;
                if next[i] < self.invariant_factors[i] {
                    break;
                }
                next[i] = 0;
                i += 1;
            }
            out.push(next);
        }
    }

    pub fn add_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.invariant_factors)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect()
    }

    pub fn neg_coords(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(&self.invariant_factors)
            .map(|(&x, &d)| (d - x) % d)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q8() -> GroupRef {
        crate::catalog::by_name("q8").unwrap()
    }

    fn named(g: &FiniteGroup, name: &str) -> usize {
        g.element_names
            .as_ref()
            .unwrap()
            .iter()
            .position(|n| n == name)
            .unwrap()
    }

    #[test]
    fn z2_from_table() {
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn bad_table_is_rejected() {
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::NotLatinSquare { .. }));
    }

    #[test]
    fn relabels_identity_to_zero() {
        // Z/2 with identity at index 1
        let g = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn nonassociative_rejected() {
        // a Latin square with two-sided identity that is not a group
        // (order 5 loops exist; construct one)
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let err = FiniteGroup::from_table(&table).unwrap_err();
        assert!(matches!(err, GroupError::NonAssociative(..)));
    }

    #[test]
    fn closure_enumeration_oracle_q8() {
        // independent oracle: count distinct products of the generators
        let g = q8();
        assert_eq!(g.order(), 8);
        let involutions = (1..8).filter(|&x| g.mul(x, x) == 0).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn four_cycle_generates_z4() {
        let g = FiniteGroup::from_generators(&[vec![1, 2, 3, 0]], 4, 64).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = FiniteGroup::from_generators(&[], 3, 64).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn closure_cap_enforced() {
        let err = FiniteGroup::from_generators(&[vec![1, 2, 3, 4, 0]], 5, 3).unwrap_err();
        assert!(matches!(err, GroupError::ClosureTooLarge { cap: 3 }));
    }

    #[test]
    fn conjugation_in_q8_sends_i_to_minus_i_by_j() {
        let g = q8();
        let (i, mi, j) = (named(&g, "i"), named(&g, "-i"), named(&g, "j"));
        assert_eq!(g.conjugate(i, j), mi);
    }

    #[test]
    fn conjugation_trivial_in_abelian_groups() {
        let g = FiniteGroup::cyclic(6);
        for x in 0..6 {
            for h in 0..6 {
                assert_eq!(g.conjugate(x, h), x);
            }
        }
    }

    #[test]
    fn conjugation_composition_law() {
        let g = q8();
        for x in 0..8 {
            for a in 0..8 {
                for b in 0..8 {
                    assert_eq!(
                        g.conjugate(g.conjugate(x, a), b),
                        g.conjugate(x, g.mul(a, b))
                    );
                }
            }
        }
    }

    #[test]
    fn q8_classes_and_center() {
        let g = q8();
        let analysis = classes_and_centralizers(&g);
        assert_eq!(analysis.classes.count(), 5);
        assert_eq!(analysis.center, vec![0, named(&g, "-1")]);
        let total: usize = analysis.classes.classes.iter().map(|c| c.len()).sum();
        assert_eq!(total, 8);
        for c in &analysis.classes.classes {
            assert_eq!(8 % c.len(), 0);
        }
    }

    #[test]
    fn s3_has_three_classes_of_sizes_1_2_3() {
        let g = crate::catalog::by_name("s3").unwrap();
        let classes = g.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn abelian_group_classes_are_singletons() {
        let g = FiniteGroup::cyclic(5);
        let a = classes_and_centralizers(&g);
        assert_eq!(a.classes.count(), 5);
        assert!(a.centralizers.iter().all(|c| c.len() == 5));
    }

    #[test]
    fn character_group_of_cyclic() {
        for n in 2..=8 {
            let g = FiniteGroup::cyclic(n);
            let ch = g.character_group();
            assert_eq!(ch.invariant_factors, vec![n as u64]);
            // homomorphism law for all generator characters
            let e = ch.exponent;
            for coords in ch.all_characters() {
                for x in 0..n {
                    for y in 0..n {
                        let lhs = ch.eval_exponent(&coords, g.mul(x, y), e);
                        let rhs =
                            (ch.eval_exponent(&coords, x, e) + ch.eval_exponent(&coords, y, e)) % e;
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn q8_abelianization_is_klein_four() {
        // oracle: commutator subgroup of Q8 is {1, -1}
        let g = q8();
        let comm = g.commutator_subgroup();
        assert_eq!(comm, vec![0, named(&g, "-1")]);
        let ch = g.character_group();
        assert_eq!(ch.invariant_factors, vec![2, 2]);
        assert_eq!(ch.char_count(), 4);
    }

    #[test]
    fn perfect_group_has_trivial_characters() {
        // A5 via even permutation generators
        let a5 = FiniteGroup::from_generators(&[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]], 5, 64)
            .unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(a5.commutator_subgroup().len(), 60);
        let ch = a5.character_group();
        assert_eq!(ch.invariant_factors, Vec::<u64>::new());
        assert_eq!(ch.char_count(), 1);
    }

    #[test]
    fn unique_involutions_and_sylow_types() {
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(z4.unique_involution(), Some(2));
        assert_eq!(z4.sylow2_type(), Sylow2Type::Cyclic);

        let g = q8();
        assert_eq!(g.unique_involution(), Some(named(&g, "-1")));
        assert_eq!(g.sylow2_type(), Sylow2Type::GeneralizedQuaternion);

        let v4 = crate::catalog::by_name("z2xz2").unwrap();
        assert_eq!(v4.unique_involution(), None);
        assert_eq!(v4.sylow2_type(), Sylow2Type::Neither);

        let z5 = FiniteGroup::cyclic(5);
        assert_eq!(z5.sylow2_type(), Sylow2Type::Odd);
    }

    #[test]
    fn unique_involution_forces_cyclic_or_quaternion_sylow() {
        for name in crate::catalog::names() {
            let g = crate::catalog::by_name(name).unwrap();
            if g.unique_involution().is_some() {
                let t = g.sylow2_type();
                assert!(
                    matches!(t, Sylow2Type::Cyclic | Sylow2Type::GeneralizedQuaternion),
                    "{name}: unexpected sylow type {t:?}"
                );
            }
        }
    }

    #[test]
    fn express_hom_roundtrip_on_q8() {
        let g = q8();
        let ch = g.character_group();
        let e = ch.exponent;
        for coords in ch.all_characters() {
            let f: Vec<u64> = (0..g.order()).map(|x| ch.eval_exponent(&coords, x, e)).collect();
            assert_eq!(ch.express_hom(&f, e), Some(coords));
        }
        // non-homomorphism rejected
        let mut f = vec![0u64; 8];
        f[2] = 1;
        assert_eq!(ch.express_hom(&f, e), None);
    }
}
