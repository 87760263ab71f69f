//! Exact projective character tables.
//!
//! Given a normalized 2-cocycle θ on C valued in μ_N, the θ-projective
//! irreducible characters of C are read off the ordinary character table of
//! the central extension C̃ = μ_N ×_θ C with multiplication
//! (m, x)·(n, y) = (m + n + θ(x, y), xy): they are the rows on which the
//! distinguished central μ_N acts by its standard faithful character,
//! restricted to the section (0, x).
//!
//! Ordinary tables are computed Dixon style: the commuting class-sum
//! matrices are simultaneously diagonalized over a prime field 𝔽_p with
//! p ≡ 1 (mod exp C̃), and the resulting mod-p character values are lifted
//! to exact cyclotomic numbers by finite Fourier inversion over each
//! element's power classes. The finite-field pass is only an accelerator:
//! the lifted table is verified against the orthogonality relations in
//! exact arithmetic before it is returned.

use num::rational::BigRational;
use num::BigInt;
use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::group::{ConjugacyClasses, FiniteGroup, GroupRef};

#[derive(Debug, Error)]
pub enum ProjectiveError {
    #[error("input cochain is not a normalized 2-cocycle (fails at {0:?})")]
    NotA2Cocycle(Vec<usize>),
    #[error("character table failed exact verification: {0}")]
    VerificationFailed(&'static str),
}

/// One θ-projective irreducible character of C: values on the section
/// lift (0, x), indexed by the element x of C.
#[derive(Debug, Clone)]
pub struct ProjectiveRow {
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
}

/// The θ-projective character table of C.
pub struct ProjectiveTable {
    pub group: GroupRef,
    pub modulus: u64,
    pub rows: Vec<ProjectiveRow>,
}

/// θ given as a dense exponent function on C×C (normalized), modulus N.
pub fn projective_character_table(
    group: &GroupRef,
    theta: &dyn Fn(usize, usize) -> u64,
    modulus: u64,
) -> Result<ProjectiveTable, ProjectiveError> {
    let n = group.order();
    // normalization and 2-cocycle condition
    for x in 0..n {
        if theta(0, x) != 0 || theta(x, 0) != 0 {
            return Err(ProjectiveError::NotA2Cocycle(vec![0, x]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = (theta(x, y) + theta(group.mul(x, y), z)) % modulus;
                let rhs = (theta(y, z) + theta(x, group.mul(y, z))) % modulus;
                if lhs != rhs {
                    return Err(ProjectiveError::NotA2Cocycle(vec![x, y, z]));
                }
            }
        }
    }
    // divide out the content so the extension is as small as possible
    let mut content = modulus;
    for x in 0..n {
        for y in 0..n {
            content = num::integer::gcd(content, theta(x, y));
            if content == 1 {
                break;
            }
        }
    }
    let content = if content == 0 { modulus } else { content };
    let ext_mod = modulus / content;

    if ext_mod == 1 {
        // ordinary character table of C itself
        let table = character_table(group)?;
        let rows = table
            .rows
            .iter()
            .map(|r| ProjectiveRow {
                degree: r.degree,
                values: (0..n)
                    .map(|x| r.values[table.classes.class_of[x]].clone())
                    .collect(),
            })
            .collect();
        let out = ProjectiveTable {
            group: group.clone(),
            modulus,
            rows,
        };
        verify_projective(&out)?;
        return Ok(out);
    }

    // central extension on pairs (m, x) encoded as m·n + x
    let ext_order = ext_mod as usize * n;
    let enc = |m: u64, x: usize| -> usize { m as usize * n + x };
    let mut flat = vec![0usize; ext_order * ext_order];
    for m in 0..ext_mod {
        for x in 0..n {
            for mm in 0..ext_mod {
                for y in 0..n {
                    let sum = (m + mm + theta(x, y) / content) % ext_mod;
                    flat[enc(m, x) * ext_order + enc(mm, y)] = enc(sum, group.mul(x, y));
                }
            }
        }
    }
    let ext = FiniteGroup::from_flat_trusted(ext_order, flat);
    let table = character_table(&ext)?;

    // rows where the central generator (1, 1_C) acts by ζ_{ext_mod}
    let central = enc(1, 0);
    let zeta = Cyclotomic::root_of_unity(ext_mod, 1);
    let mut rows = Vec::new();
    for r in &table.rows {
        let deg = Cyclotomic::from_integer(r.degree as i64);
        let at_central = r.values[table.classes.class_of[central]].clone();
        if at_central.eq_value(&zeta.mul(&deg)) {
            rows.push(ProjectiveRow {
                degree: r.degree,
                values: (0..n)
                    .map(|x| r.values[table.classes.class_of[enc(0, x)]].clone())
                    .collect(),
            });
        }
    }
    let out = ProjectiveTable {
        group: group.clone(),
        modulus,
        rows,
    };
    verify_projective(&out)?;
    Ok(out)
}

/// Twisted orthogonality and the degree sum, in exact arithmetic.
fn verify_projective(t: &ProjectiveTable) -> Result<(), ProjectiveError> {
    let n = t.group.order() as i64;
    let deg_sum: u64 = t.rows.iter().map(|r| r.degree * r.degree).sum();
    if deg_sum != n as u64 {
        return Err(ProjectiveError::VerificationFailed(
            "projective degrees do not sum to |C|",
        ));
    }
    for (i, r) in t.rows.iter().enumerate() {
        for (j, s) in t.rows.iter().enumerate() {
            let mut acc = Cyclotomic::zero(1);
            for x in 0..t.group.order() {
                acc = acc.add(&r.values[x].mul(&s.values[x].conj()));
            }
            let expect = Cyclotomic::from_integer(if i == j { n } else { 0 });
            if !acc.eq_value(&expect) {
                return Err(ProjectiveError::VerificationFailed(
                    "twisted orthogonality fails",
                ));
            }
        }
    }
    Ok(())
}

/// Ordinary exact character table.
pub struct CharacterTable {
    pub classes: ConjugacyClasses,
    pub rows: Vec<CharacterRow>,
}

#[derive(Debug, Clone)]
pub struct CharacterRow {
    pub degree: u64,
    /// one value per conjugacy class
    pub values: Vec<Cyclotomic>,
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut bb = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % m as u128;
        }
        bb = bb * bb % m as u128;
        e >>= 1;
    }
    b = acc as u64;
    b
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            factors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'candidates: for g in 2..p {
        for &q in &factors {
            if pow_mod(g, (p - 1) / q, p) == 1 {
                continue 'candidates;
            }
        }
        return g;
    }
    unreachable!("𝔽_p has a primitive root");
}

pub fn character_table(group: &GroupRef) -> Result<CharacterTable, ProjectiveError> {
    let n = group.order();
    let classes = group.conjugacy_classes();
    let k = classes.count();
    let exponent = group.exponent();
    // a prime p ≡ 1 (mod exp) large enough to recover degrees uniquely
    let bound = 2 * (n as f64).sqrt() as u64 + 2;
    let mut p = exponent + 1;
    while !(is_prime(p) && p > bound) {
        p += exponent;
    }
    let w = pow_mod(primitive_root(p), (p - 1) / exponent, p);

    // class sum matrices: (M_j)[m][r] = a_{j,m,r} = #{(u,v) ∈ K_j×K_m : uv = rep_r},
    // so that M_j · (ω(K_r))_r = ω(K_j) · (ω(K_m))_m for each central character ω
    let reps: Vec<usize> = (0..k).map(|c| classes.representative(c)).collect();
    let class_sizes: Vec<u64> = classes.classes.iter().map(|c| c.len() as u64).collect();
    let mut matrices: Vec<Vec<Vec<u64>>> = vec![vec![vec![0; k]; k]; k];
    for j in 0..k {
        for &u in &classes.classes[j] {
            let ui = group.inv(u);
            for (r, &rep) in reps.iter().enumerate() {
                let m = classes.class_of[group.mul(ui, rep)];
                matrices[j][m][r] += 1;
            }
        }
    }

    // simultaneous eigenvectors over 𝔽_p
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect()];
    for mat in matrices.iter().skip(1) {
        let mut next: Vec<Vec<Vec<u64>>> = Vec::new();
        for basis in &spaces {
            if basis.len() == 1 {
                next.push(basis.clone());
                continue;
            }
            let action = restrict_action(mat, basis, p);
            let cp = char_poly(&action, p);
            let mut found = 0;
            for lambda in 0..p {
                if eval_poly(&cp, lambda, p) != 0 {
                    continue;
                }
                let sub = eigen_subspace(&action, lambda, p);
                if sub.is_empty() {
                    continue;
                }
                found += sub.len();
                // map back to ambient coordinates
                let mapped: Vec<Vec<u64>> = sub
                    .iter()
                    .map(|coeffs| {
                        let mut v = vec![0u64; k];
                        for (c, b) in coeffs.iter().zip(basis) {
                            for (slot, &bv) in v.iter_mut().zip(b) {
                                *slot = (*slot + *c as u128 as u64 * 0
                                    + ((*c as u128 * bv as u128) % p as u128) as u64)
                                    % p;
                            }
                        }
                        v
                    })
                    .collect();
                next.push(mapped);
                if found == basis.len() {
                    break;
                }
            }
            assert_eq!(found, basis.len(), "eigenspaces must exhaust the space");
        }
        spaces = next;
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
    }
    assert!(
        spaces.iter().all(|s| s.len() == 1),
        "class matrices must separate characters"
    );

    // each line gives the central character ω; recover degree and values
    let inverse_class: Vec<usize> =
        (0..k).map(|c| classes.class_of[group.inv(reps[c])]).collect();
    let mut rows: Vec<CharacterRow> = Vec::new();
    for space in &spaces {
        let v = &space[0];
        // normalize so the identity-class coordinate is 1
        let pivot = v[0];
        assert!(pivot != 0, "eigenvector vanishes on the identity class");
        let pinv = inv_mod_p(pivot, p);
        let omega: Vec<u64> = v
            .iter()
            .map(|&x| ((x as u128 * pinv as u128) % p as u128) as u64)
            .collect();
        // 1/d² = (1/|G|) Σ_l ω_l ω_{l'} / |K_l|  (all mod p)
        let mut t = 0u128;
        for l in 0..k {
            let term = omega[l] as u128 * omega[inverse_class[l]] as u128 % p as u128;
            t = (t + term * inv_mod_p(class_sizes[l], p) as u128) % p as u128;
        }
        let d_sq = (n as u128 * inv_mod_p(t as u64, p) as u128 % p as u128) as u64;
        let degree = (1..=n as u64)
            .find(|d| d * d % p == d_sq)
            .expect("character degree must be recoverable");
        // χ_p on class l
        let chi_p: Vec<u64> = (0..k)
            .map(|l| {
                (degree as u128 * omega[l] as u128 % p as u128
                    * inv_mod_p(class_sizes[l], p) as u128
                    % p as u128) as u64
            })
            .collect();
        // exact lift per class by Fourier inversion over power maps
        let values: Vec<Cyclotomic> = (0..k)
            .map(|l| {
                let g = reps[l];
                let m = group.element_order(g) as u64;
                let zm = pow_mod(w, exponent / m, p);
                let minv = inv_mod_p(m, p);
                let mut acc = Cyclotomic::zero(m);
                // c_t = (1/m) Σ_s χ_p(g^s)·z_m^{-st} counts the eigenvalues
                // of ρ(g) equal to ζ_m^t; these are small nonneg integers
                let mut coeffs = vec![0u64; m as usize];
                let mut power = 0usize;
                let mut chi_pows = Vec::with_capacity(m as usize);
                for _ in 0..m {
                    chi_pows.push(chi_p[classes.class_of[power]]);
                    power = group.mul(power, g);
                }
                for (t_exp, slot) in coeffs.iter_mut().enumerate() {
                    let mut sum = 0u128;
                    for (s, &cp) in chi_pows.iter().enumerate() {
                        let z = pow_mod(zm, (m - 1) * (s as u64 * t_exp as u64 % m) % m, p);
                        // z_m^{-st} = z_m^{(m-1)·st mod m}
                        sum = (sum + cp as u128 * z as u128) % p as u128;
                    }
                    *slot = (sum * minv as u128 % p as u128) as u64;
                    assert!(*slot <= degree, "lifted coefficient out of range");
                }
                for (t_exp, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        acc = acc.add(
                            &Cyclotomic::root_of_unity(m, t_exp as i64)
                                .scale(&BigRational::from(BigInt::from(c))),
                        );
                    }
                }
                acc
            })
            .collect();
        rows.push(CharacterRow { degree, values });
    }
    rows.sort_by(|a, b| {
        a.degree.cmp(&b.degree).then_with(|| {
            for (x, y) in a.values.iter().zip(&b.values) {
                let ord = x.lex_cmp(y);
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    let table = CharacterTable { classes, rows };
    verify_table(group, &table)?;
    Ok(table)
}

/// Exact verification: row orthogonality and the degree sum.
fn verify_table(group: &GroupRef, t: &CharacterTable) -> Result<(), ProjectiveError> {
    let n = group.order();
    let k = t.classes.count();
    if t.rows.len() != k {
        return Err(ProjectiveError::VerificationFailed(
            "row count differs from class count",
        ));
    }
    let deg_sum: u64 = t.rows.iter().map(|r| r.degree * r.degree).sum();
    if deg_sum != n as u64 {
        return Err(ProjectiveError::VerificationFailed(
            "degrees do not sum to |G|",
        ));
    }
    let sizes: Vec<i64> = t.classes.classes.iter().map(|c| c.len() as i64).collect();
    for (i, r) in t.rows.iter().enumerate() {
        for (j, s) in t.rows.iter().enumerate().skip(i) {
            let mut acc = Cyclotomic::zero(1);
            for l in 0..k {
                let term = r.values[l].mul(&s.values[l].conj());
                acc = acc.add(&term.scale(&BigRational::from(BigInt::from(sizes[l]))));
            }
            let expect = Cyclotomic::from_integer(if i == j { n as i64 } else { 0 });
            if !acc.eq_value(&expect) {
                return Err(ProjectiveError::VerificationFailed(
                    "row orthogonality fails",
                ));
            }
        }
    }
    Ok(())
}

fn restrict_action(mat: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let k = mat.len();
    let d = basis.len();
    // images of basis vectors
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..k)
                .map(|i| {
                    let mut acc = 0u128;
                    for (j, &bj) in b.iter().enumerate() {
                        acc = (acc + mat[i][j] as u128 * bj as u128) % p as u128;
                    }
                    acc as u64
                })
                .collect()
        })
        .collect();
    // solve B·A = images (column per image) by eliminating on B
    let mut aug: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[i]).collect();
            row.extend(images.iter().map(|im| im[i]));
            row
        })
        .collect();
    let cols = d + images.len();
    let mut pivot_rows = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let Some(pr) = (r..k).find(|&i| aug[i][c] != 0) else {
            panic!("basis is not independent");
        };
        aug.swap(r, pr);
        let inv = inv_mod_p(aug[r][c], p);
        for j in 0..cols {
            aug[r][j] = (aug[r][j] as u128 * inv as u128 % p as u128) as u64;
        }
        for i in 0..k {
            if i != r && aug[i][c] != 0 {
                let f = aug[i][c];
                for j in 0..cols {
                    let sub = aug[r][j] as u128 * f as u128 % p as u128;
                    aug[i][j] = ((aug[i][j] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        pivot_rows.push(r);
        r += 1;
    }
    // A[c][col] read off pivot rows
    (0..d)
        .map(|ci| (0..d).map(|col| aug[pivot_rows[ci]][d + col]).collect())
        .collect()
}

fn char_poly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    // dense expansion by minors is fine at these sizes? use Leverrier-free
    // approach: interpolation through d+1 determinant evaluations
    let d = a.len();
    let pts: Vec<u64> = (0..=d as u64).collect();
    let vals: Vec<u64> = pts
        .iter()
        .map(|&x| {
            let mut m: Vec<Vec<u64>> = a.to_vec();
            for i in 0..d {
                m[i][i] = (m[i][i] + p - x % p) % p;
            }
            det_mod(&mut m, p)
        })
        .collect();
    // Lagrange interpolation to coefficients
    lagrange_coeffs(&pts, &vals, p)
}

fn det_mod(m: &mut [Vec<u64>], p: u64) -> u64 {
    let d = m.len();
    let mut det: u128 = 1;
    for c in 0..d {
        let Some(pr) = (c..d).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if pr != c {
            m.swap(c, pr);
            det = det * (p as u128 - 1) % p as u128;
        }
        det = det * m[c][c] as u128 % p as u128;
        let inv = inv_mod_p(m[c][c], p);
        for i in (c + 1)..d {
            if m[i][c] == 0 {
                continue;
            }
            let f = m[i][c] as u128 * inv as u128 % p as u128;
            for j in c..d {
                let sub = m[c][j] as u128 * f % p as u128;
                m[i][j] = ((m[i][j] as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
    }
    det as u64
}

fn lagrange_coeffs(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut coeffs = vec![0u64; n];
    for i in 0..n {
        // basis polynomial Π_{j≠i} (x - x_j)/(x_i - x_j)
        let mut poly = vec![0u64; n];
        poly[0] = 1;
        let mut deg = 0;
        let mut denom: u128 = 1;
        for j in 0..n {
            if i == j {
                continue;
            }
            // multiply by (x - x_j)
            let mut next = vec![0u64; n];
            for e in 0..=deg {
                next[e + 1] = (next[e + 1] + poly[e]) % p;
                next[e] = ((next[e] as u128
                    + poly[e] as u128 * (p as u128 - xs[j] as u128 % p as u128))
                    % p as u128) as u64;
            }
            poly = next;
            deg += 1;
            denom = denom * ((xs[i] as u128 + p as u128 - xs[j] as u128) % p as u128)
                % p as u128;
        }
        let scale = ys[i] as u128 * inv_mod_p(denom as u64, p) as u128 % p as u128;
        for e in 0..n {
            coeffs[e] =
                ((coeffs[e] as u128 + poly[e] as u128 * scale) % p as u128) as u64;
        }
    }
    coeffs
}

fn eval_poly(c: &[u64], x: u64, p: u64) -> u64 {
    let mut acc: u128 = 0;
    for &coef in c.iter().rev() {
        acc = (acc * x as u128 + coef as u128) % p as u128;
    }
    acc as u64
}

fn eigen_subspace(a: &[Vec<u64>], lambda: u64, p: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    let mut m: Vec<Vec<u64>> = a.to_vec();
    for i in 0..d {
        m[i][i] = (m[i][i] + p - lambda % p) % p;
    }
    // kernel by row reduction
    let mut pivots: Vec<Option<usize>> = vec![None; d];
    let mut r = 0;
    for c in 0..d {
        let Some(pr) = (r..d).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod_p(m[r][c], p);
        for j in 0..d {
            m[r][j] = (m[r][j] as u128 * inv as u128 % p as u128) as u64;
        }
        for i in 0..d {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..d {
                    let sub = m[r][j] as u128 * f as u128 % p as u128;
                    m[i][j] = ((m[i][j] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        pivots[c] = Some(r);
        r += 1;
    }
    let mut basis = Vec::new();
    for c in 0..d {
        if pivots[c].is_some() {
            continue;
        }
        let mut v = vec![0u64; d];
        v[c] = 1;
        for cc in 0..d {
            if let Some(pr) = pivots[cc] {
                v[cc] = (p - m[pr][c] % p) % p;
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn ordinary_table_of_cyclic_groups() {
        for n in 1..=8usize {
            let g = FiniteGroup::cyclic(n);
            let t = character_table(&g).unwrap();
            assert_eq!(t.rows.len(), n);
            assert!(t.rows.iter().all(|r| r.degree == 1));
        }
    }

    #[test]
    fn ordinary_table_of_s3() {
        let g = crate::catalog::by_name("s3").unwrap();
        let t = character_table(&g).unwrap();
        let mut degs: Vec<u64> = t.rows.iter().map(|r| r.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2]);
    }

    #[test]
    fn ordinary_table_of_q8() {
        let g = crate::catalog::by_name("q8").unwrap();
        let t = character_table(&g).unwrap();
        let mut degs: Vec<u64> = t.rows.iter().map(|r| r.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn ordinary_table_of_sl2_3() {
        let g = crate::catalog::by_name("sl2_3").unwrap();
        let t = character_table(&g).unwrap();
        let mut degs: Vec<u64> = t.rows.iter().map(|r| r.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn projective_trivial_theta_reduces_to_ordinary() {
        let g = crate::catalog::by_name("s3").unwrap();
        let t = projective_character_table(&g, &|_, _| 0, 6).unwrap();
        assert_eq!(t.rows.len(), 3);
        let degsum: u64 = t.rows.iter().map(|r| r.degree * r.degree).sum();
        assert_eq!(degsum, 6);
    }

    #[test]
    fn projective_z2_with_nontrivial_theta() {
        // θ(1,1) = -1: the twisted algebra is C[x]/(x²+1); two linear
        // characters with χ(x) = ±i
        let g = FiniteGroup::cyclic(2);
        let theta = |x: usize, y: usize| if x == 1 && y == 1 { 1 } else { 0 };
        let t = projective_character_table(&g, &theta, 2).unwrap();
        assert_eq!(t.rows.len(), 2);
        let i = Cyclotomic::root_of_unity(4, 1);
        let mi = Cyclotomic::root_of_unity(4, 3);
        let mut vals: Vec<Cyclotomic> = t.rows.iter().map(|r| r.values[1].clone()).collect();
        vals.sort_by(|a, b| a.lex_cmp(b));
        let mut expect = vec![i, mi];
        expect.sort_by(|a, b| a.lex_cmp(b));
        assert_eq!(vals[0], expect[0]);
        assert_eq!(vals[1], expect[1]);
    }

    #[test]
    fn projective_klein_four_antisymmetric_theta() {
        // on Z/2×Z/2 a θ with nontrivial antisymmetrization has a single
        // projective irreducible of degree 2
        let g = crate::catalog::by_name("z2xz2").unwrap();
        // elements: 0, a, b, ab with some catalog order; build θ((x1,x2),(y1,y2)) = (-1)^{x2·y1}
        // decode positions from the table: find two generators
        let a = 1usize;
        let b = (1..4).find(|&x| x != a && g.mul(a, x) != 0).unwrap();
        let coords = |x: usize| -> (u64, u64) {
            match x {
                0 => (0, 0),
                x if x == a => (1, 0),
                x if x == b => (0, 1),
                _ => (1, 1),
            }
        };
        let theta = move |x: usize, y: usize| -> u64 {
            let (_, x2) = coords(x);
            let (y1, _) = coords(y);
            x2 * y1 % 2
        };
        let t = projective_character_table(&g, &theta, 2).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].degree, 2);
    }

    #[test]
    fn rejects_non_cocycle() {
        let g = FiniteGroup::cyclic(3);
        // θ(x,y) = 1 iff x=y=1 is not a 2-cocycle on Z/3
        let theta = |x: usize, y: usize| u64::from(x == 1 && y == 1);
        assert!(matches!(
            projective_character_table(&g, &theta, 3),
            Err(ProjectiveError::NotA2Cocycle(_))
        ));
    }
}
