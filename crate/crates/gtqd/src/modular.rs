//! Modular data of D^ω(G) and of its quotients D^ω(G, A).
//!
//! Simple modules are labeled by a conjugacy class representative g together
//! with a θ_g-projective irreducible character of C_G(g). On the induced
//! module with left transversal {x_i}, g_i = x_i g x_i^{-1}, the basis
//! element e_h ⊗ x acts with amplitude
//!
//!   θ_{g_j}(x, x_i) − θ_{g_j}(x_j, c)   where x·x_i = x_j·c, c ∈ C_G(g)
//!
//! (exponents mod N), which makes the extended character of a simple
//! computable in closed form. The unnormalized S-matrix is the monodromy
//! trace
//!
//!   S̃_{M,N} = Σ_{cd = dc} χ_M(e_d ⊗ c) · χ_N(e_c ⊗ d)
//!
//! and T is the ribbon scalar χ(g̃)/χ(1). Everything is exact; the modular
//! axioms (symmetry, unitarity, S² a permutation, (ST)³ ∝ S², finite-order
//! T, nonnegative integral Verlinde fusion) are verified on every dataset,
//! and a brute-force oracle recomputes S̃ from explicit matrices for small
//! groups.

use std::collections::BTreeMap;
use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

use crate::cyclo::{sqrt_positive_integer, Cyclotomic};
use crate::double::TwistedDouble;

use crate::projective::{projective_character_table, ProjectiveError};
use crate::quotient::{QuotientCertificate, QuotientContext};

#[derive(Debug, Error)]
pub enum ModularError {
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error("S-matrix convention fault: {0}")]
    ConventionFault(&'static str),
    #[error("Verlinde fusion coefficient N[{i}][{j}][{k}] is not a nonnegative integer")]
    NonIntegralFusion { i: usize, j: usize, k: usize },
    #[error("quotient certificate inconsistency: {0}")]
    SectionNotHomomorphism(String),
}

/// Braiding orientation for the S-matrix; `Inverse` conjugates every entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SConvention {
    Standard,
    Inverse,
}

impl Default for SConvention {
    fn default() -> Self {
        SConvention::Standard
    }
}

/// Shared per-class data: centralizer, transversal, projective table.
pub struct ClassData {
    pub rep: usize,
    pub members: Vec<usize>,
    /// x_h per member: the least x with x·g·x^{-1} = h
    pub transversal: Vec<usize>,
    pub emb: Vec<usize>,
    pos_in_class: BTreeMap<usize, usize>,
    pos_in_centralizer: BTreeMap<usize, usize>,
}

impl ClassData {
    pub fn class_position(&self, h: usize) -> usize {
        self.pos_in_class[&h]
    }
    pub fn centralizer_position(&self, c: usize) -> usize {
        self.pos_in_centralizer[&c]
    }
}

/// A simple object: class representative plus projective character.
#[derive(Clone)]
pub struct SimpleLabel {
    pub class_index: usize,
    pub class_rep: usize,
    pub class_size: usize,
    pub degree: u64,
    /// χ values on the centralizer of the representative, indexed like the
    /// centralizer embedding of its ClassData
    pub char_values: Vec<Cyclotomic>,
}

impl SimpleLabel {
    pub fn dimension(&self) -> u64 {
        self.degree * self.class_size as u64
    }
}

pub struct LabelSet {
    pub classes: Vec<ClassData>,
    pub labels: Vec<SimpleLabel>,
}

pub fn simple_labels(double: &TwistedDouble) -> Result<LabelSet, ModularError> {
    let grp = double.group();
    let modulus = double.modulus();
    let class_partition = grp.conjugacy_classes();
    let mut classes = Vec::new();
    let mut labels = Vec::new();
    for (ci, members) in class_partition.classes.iter().enumerate() {
        let rep = members[0];
        let transversal: Vec<usize> = members
            .iter()
            .map(|&h| {
                (0..grp.order())
                    .find(|&x| grp.conjugate(rep, grp.inv(x)) == h)
                    .expect("class members are conjugate to the representative")
            })
            .collect();
        let cent = grp.centralizer(rep);
        let (sub, emb) = grp.subgroup(&cent);
        let theta = |a: usize, b: usize| double.tables.theta(rep, emb[a], emb[b]);
        let table = projective_character_table(&sub, &theta, modulus)?;
        let data = ClassData {
            rep,
            members: members.clone(),
            transversal,
            pos_in_class: members.iter().enumerate().map(|(i, &h)| (h, i)).collect(),
            pos_in_centralizer: emb.iter().enumerate().map(|(i, &x)| (x, i)).collect(),
            emb,
        };
        // degree-sum sanity: Σ χ(1)² = |C_G(g)| is checked by the table
        for row in &table.rows {
            labels.push(SimpleLabel {
                class_index: ci,
                class_rep: rep,
                class_size: members.len(),
                degree: row.degree,
                char_values: row.values.clone(),
            });
        }
        classes.push(data);
    }
    // total dimension of the algebra: Σ (deg·|class|)² = |G|²
    let total: u64 = labels.iter().map(|l| l.dimension() * l.dimension()).sum();
    assert_eq!(total, (grp.order() * grp.order()) as u64);
    // vacuum (identity class, trivial character) goes first
    let vac = labels
        .iter()
        .position(|l| l.class_rep == 0 && l.degree == 1 && l.char_values.iter().all(|v| v.is_one()))
        .expect("the trivial character of G labels the vacuum");
    labels.swap(0, vac);
    Ok(LabelSet { classes, labels })
}

impl LabelSet {
    /// χ_M(e_h ⊗ x): trace of the basis element on the simple M.
    pub fn extended_character(
        &self,
        double: &TwistedDouble,
        label: &SimpleLabel,
        h: usize,
        x: usize,
    ) -> Cyclotomic {
        let grp = double.group();
        let m = double.modulus();
        let data = &self.classes[label.class_index];
        let Some(&_pos) = data.pos_in_class.get(&h) else {
            return Cyclotomic::zero(1);
        };
        if grp.conjugate(h, x) != h {
            return Cyclotomic::zero(1);
        }
        let xi = data.transversal[data.pos_in_class[&h]];
        let c = grp.conjugate(x, xi);
        debug_assert!(data.pos_in_centralizer.contains_key(&c));
        let exp = (double.tables.theta(h, x, xi) + m - double.tables.theta(h, xi, c)) % m;
        let chi = &label.char_values[data.pos_in_centralizer[&c]];
        Cyclotomic::root_of_unity(m, exp as i64).mul(chi)
    }

    /// Ribbon scalar χ(g̃)/χ(1) for a label.
    pub fn twist(&self, label: &SimpleLabel) -> Cyclotomic {
        let data = &self.classes[label.class_index];
        let at_rep = &label.char_values[data.pos_in_centralizer[&label.class_rep]];
        at_rep.scale(&BigRational::new(BigInt::one(), BigInt::from(label.degree)))
    }
}

pub struct AxiomReport {
    pub symmetric: bool,
    pub unitary: bool,
    pub s_squared_is_permutation: bool,
    pub st_cubed_proportional_to_s_squared: bool,
    pub anomaly_unitary: bool,
    pub t_has_finite_order: bool,
    pub vacuum_row_positive: bool,
    pub fusion_integral: bool,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.symmetric
            && self.unitary
            && self.s_squared_is_permutation
            && self.st_cubed_proportional_to_s_squared
            && self.anomaly_unitary
            && self.t_has_finite_order
            && self.vacuum_row_positive
            && self.fusion_integral
    }
}

pub struct ModularData {
    pub labels: LabelSet,
    pub t: Vec<Cyclotomic>,
    pub s_unnormalized: Vec<Vec<Cyclotomic>>,
    /// D² = Σ (quantum dims)²; equals |G|² for the full double
    pub global_dim_sq: u64,
    /// S̃ / D with D = √(D²) as an exact cyclotomic
    pub s: Vec<Vec<Cyclotomic>>,
    pub fusion: Option<Vec<(usize, usize, usize, u64)>>,
    pub modular: bool,
    /// labels transparent to the braiding (the Müger center); trivial
    /// exactly when `modular`
    pub transparent: Vec<usize>,
    pub axioms: AxiomReport,
}

impl ModularData {
    pub fn rank(&self) -> usize {
        self.labels.labels.len()
    }

    pub fn dims(&self) -> Vec<u64> {
        self.labels.labels.iter().map(|l| l.dimension()).collect()
    }

    pub fn t_multiset(&self) -> Vec<Cyclotomic> {
        let mut v = self.t.clone();
        v.sort_by(|a, b| a.lex_cmp(b));
        v
    }
}

/// S̃ over the labels of a LabelSet by the monodromy character sum.
fn s_matrix_on(
    double: &TwistedDouble,
    labels: &LabelSet,
    convention: SConvention,
) -> Vec<Vec<Cyclotomic>> {
    let grp = double.group();
    let n = grp.order();
    let rank = labels.labels.len();
    let mut s_un = vec![vec![Cyclotomic::zero(1); rank]; rank];
    let commuting: Vec<(usize, usize)> = (0..n)
        .flat_map(|c| (0..n).map(move |d| (c, d)))
        .filter(|&(c, d)| grp.mul(c, d) == grp.mul(d, c))
        .collect();
    for i in 0..rank {
        for j in i..rank {
            let mut acc = Cyclotomic::zero(1);
            for &(c, d) in &commuting {
                let lhs = labels.extended_character(double, &labels.labels[i], d, c);
                if lhs.is_zero() {
                    continue;
                }
                let rhs = labels.extended_character(double, &labels.labels[j], c, d);
                acc = acc.add(&lhs.mul(&rhs));
            }
            // the canonical-lift twist χ(g̃)/χ(1) pairs with the inverse
            // monodromy orientation; (ST)³ ∝ S² pins the choice
            if convention == SConvention::Standard {
                acc = acc.conj();
            }
            s_un[i][j] = acc.clone();
            s_un[j][i] = acc;
        }
    }
    s_un
}

/// Modular data of the full double D^ω(G).
pub fn modular_data(
    double: &TwistedDouble,
    convention: SConvention,
) -> Result<ModularData, ModularError> {
    let labels = simple_labels(double)?;
    let n = double.group().order();
    let s_un = s_matrix_on(double, &labels, convention);
    let t: Vec<Cyclotomic> = labels
        .labels
        .iter()
        .map(|l| labels.twist(l))
        .collect();
    let global_dim_sq = (n * n) as u64;
    assemble(labels, t, s_un, global_dim_sq, true)
}

/// Shared assembly: verify axioms, normalize, compute fusion.
fn assemble(
    labels: LabelSet,
    t: Vec<Cyclotomic>,
    s_un: Vec<Vec<Cyclotomic>>,
    global_dim_sq: u64,
    expect_modular: bool,
) -> Result<ModularData, ModularError> {
    let rank = labels.labels.len();
    let dims: Vec<u64> = labels.labels.iter().map(|l| l.dimension()).collect();
    let dsq = Cyclotomic::from_integer(global_dim_sq as i64);

    let vacuum_row_positive = (0..rank).all(|j| {
        s_un[0][j]
            .as_rational()
            .map_or(false, |q| q == BigRational::from(BigInt::from(dims[j])))
    });
    let symmetric = (0..rank).all(|i| (0..rank).all(|j| s_un[i][j].eq_value(&s_un[j][i])));

    // S̃·conj(S̃)ᵗ = D²·I detects degeneracy exactly
    let mut unitary = true;
    let mut transparent: Vec<usize> = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            let mut acc = Cyclotomic::zero(1);
            for k in 0..rank {
                acc = acc.add(&s_un[i][k].mul(&s_un[j][k].conj()));
            }
            let expect = if i == j { dsq.clone() } else { Cyclotomic::zero(1) };
            if !acc.eq_value(&expect) {
                unitary = false;
            }
        }
        // transparent objects: S̃ row proportional to the vacuum row
        let is_transparent = (0..rank).all(|j| {
            s_un[i][j].eq_value(&Cyclotomic::from_integer((dims[i] * dims[j]) as i64))
        });
        if is_transparent {
            transparent.push(i);
        }
    }
    let modular = unitary && transparent == vec![0];

    // S̃² = D²·(charge conjugation permutation)
    let mut s_squared_is_permutation = true;
    if unitary {
        'perm: for i in 0..rank {
            let mut ones = 0;
            for j in 0..rank {
                let mut acc = Cyclotomic::zero(1);
                for k in 0..rank {
                    acc = acc.add(&s_un[i][k].mul(&s_un[k][j]));
                }
                if acc.eq_value(&dsq) {
                    ones += 1;
                } else if !acc.is_zero() {
                    s_squared_is_permutation = false;
                    break 'perm;
                }
            }
            if ones != 1 {
                s_squared_is_permutation = false;
                break 'perm;
            }
        }
    } else {
        s_squared_is_permutation = false;
    }

    // (S̃T)³ = μ·S̃² with μ·conj(μ) = D² (i.e. |λ| = 1 after normalizing)
    let mut st_ok = modular;
    let mut anomaly_unitary = modular;
    if modular {
        let st: Vec<Vec<Cyclotomic>> = (0..rank)
            .map(|i| (0..rank).map(|j| s_un[i][j].mul(&t[j])).collect())
            .collect();
        let mut cube = st.clone();
        for _ in 0..2 {
            let mut next = vec![vec![Cyclotomic::zero(1); rank]; rank];
            for i in 0..rank {
                for j in 0..rank {
                    let mut acc = Cyclotomic::zero(1);
                    for k in 0..rank {
                        acc = acc.add(&cube[i][k].mul(&st[k][j]));
                    }
                    next[i][j] = acc;
                }
            }
            cube = next;
        }
        let mut s_sq = vec![vec![Cyclotomic::zero(1); rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let mut acc = Cyclotomic::zero(1);
                for k in 0..rank {
                    acc = acc.add(&s_un[i][k].mul(&s_un[k][j]));
                }
                s_sq[i][j] = acc;
            }
        }
        // μ from the vacuum entry: (S̃²)_{00} = D² since the vacuum is
        // self-conjugate
        let mu = cube[0][0].scale(&BigRational::new(
            BigInt::one(),
            BigInt::from(global_dim_sq),
        ));
        for i in 0..rank {
            for j in 0..rank {
                if !cube[i][j].eq_value(&mu.mul(&s_sq[i][j])) {
                    st_ok = false;
                }
            }
        }
        anomaly_unitary = mu.mul(&mu.conj()).eq_value(&dsq);
    }

    let t_has_finite_order = t.iter().all(|z| z.as_root_of_unity().is_some());

    // Verlinde: N_ij^k = (1/D²) Σ_m S̃_im S̃_jm conj(S̃_km) / dim_m
    let mut fusion = None;
    let mut fusion_integral = modular;
    if modular {
        let mut list = Vec::new();
        'fusion: for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    let mut acc = Cyclotomic::zero(1);
                    for m in 0..rank {
                        let term = s_un[i][m]
                            .mul(&s_un[j][m])
                            .mul(&s_un[k][m].conj())
                            .scale(&BigRational::new(BigInt::one(), BigInt::from(dims[m])));
                        acc = acc.add(&term);
                    }
                    let coeff = acc.scale(&BigRational::new(
                        BigInt::one(),
                        BigInt::from(global_dim_sq),
                    ));
                    match coeff.as_rational() {
                        Some(q) if q.is_integer() && !q.is_negative() => {
                            let v = q.to_integer();
                            if !v.is_zero() {
                                let v: u64 = v.try_into().expect("small fusion coefficient");
                                list.push((i, j, k, v));
                            }
                        }
                        _ => {
                            fusion_integral = false;
                            fusion = None;
                            break 'fusion;
                        }
                    }
                }
            }
        }
        if fusion_integral {
            fusion = Some(list);
        }
    }

    // normalized S via the exact square root of D²
    let d = sqrt_positive_integer(global_dim_sq);
    let d_inv = d.inv();
    let s: Vec<Vec<Cyclotomic>> = s_un
        .iter()
        .map(|row| row.iter().map(|v| v.mul(&d_inv)).collect())
        .collect();

    let axioms = AxiomReport {
        symmetric,
        unitary,
        s_squared_is_permutation,
        st_cubed_proportional_to_s_squared: st_ok,
        anomaly_unitary,
        t_has_finite_order,
        vacuum_row_positive,
        fusion_integral,
    };
    if expect_modular && !axioms.all_pass() {
        let which = if !axioms.symmetric {
            "S is not symmetric"
        } else if !axioms.unitary {
            "S is not unitary"
        } else if !axioms.s_squared_is_permutation {
            "S² is not a permutation"
        } else if !axioms.st_cubed_proportional_to_s_squared {
            "(ST)³ is not proportional to S²"
        } else if !axioms.anomaly_unitary {
            "the anomaly is not unitary"
        } else if !axioms.t_has_finite_order {
            "T has infinite order"
        } else if !axioms.vacuum_row_positive {
            "the vacuum row is not the dimension row"
        } else {
            "Verlinde fusion is not nonnegative-integral"
        };
        return Err(ModularError::ConventionFault(which));
    }
    Ok(ModularData {
        labels,
        t,
        s_unnormalized: s_un,
        global_dim_sq,
        s,
        fusion,
        modular,
        transparent,
        axioms,
    })
}

/// The scalar by which the grouplike section element u_a acts on a label.
pub fn membership_scalar(
    labels: &LabelSet,
    ctx: &QuotientContext,
    cert: &QuotientCertificate,
    a: usize,
    label: &SimpleLabel,
) -> Cyclotomic {
    let g = label.class_rep;
    let m = cert.lifted_modulus;
    let tau_nu =
        (cert.tau[&a][g] + m - ctx.chars.eval_exponent(&cert.nu[&a], g, m)) % m;
    let data = &labels.classes[label.class_index];
    let chi_at_a = &label.char_values[data.pos_in_centralizer[&a]];
    Cyclotomic::root_of_unity(m, tau_nu as i64)
        .mul(chi_at_a)
        .scale(&BigRational::new(BigInt::one(), BigInt::from(label.degree)))
}

/// Indices of the labels on which every grouplike section element acts as 1.
fn kept_label_indices(
    labels: &LabelSet,
    ctx: &QuotientContext,
    cert: &QuotientCertificate,
) -> Result<Vec<usize>, ModularError> {
    cert.section_is_homomorphism(ctx)
        .map_err(|e| ModularError::SectionNotHomomorphism(e.to_string()))?;
    let mut kept: Vec<usize> = Vec::new();
    'labels: for (i, label) in labels.labels.iter().enumerate() {
        for &a in &cert.subgroup {
            let s = membership_scalar(labels, ctx, cert, a, label);
            // u_a is central, so it must act by a root of unity
            if !s.mul(&s.conj()).is_one() {
                return Err(ModularError::SectionNotHomomorphism(format!(
                    "u_{a} does not act unitarily on label {i}"
                )));
            }
            if !s.is_one() {
                continue 'labels;
            }
        }
        kept.push(i);
    }
    assert!(kept.contains(&0), "the vacuum survives every restriction");
    Ok(kept)
}

fn subset_label_set(labels: &LabelSet, kept: &[usize]) -> LabelSet {
    let classes: Vec<ClassData> = labels
        .classes
        .iter()
        .map(|c| ClassData {
            rep: c.rep,
            members: c.members.clone(),
            transversal: c.transversal.clone(),
            emb: c.emb.clone(),
            pos_in_class: c.pos_in_class.clone(),
            pos_in_centralizer: c.pos_in_centralizer.clone(),
        })
        .collect();
    LabelSet {
        classes,
        labels: kept.iter().map(|&i| labels.labels[i].clone()).collect(),
    }
}

/// Restrict existing modular data of D^ω(G) to the subcategory fixed by the
/// grouplike section of a quotient certificate: keep exactly the labels on
/// which every u_a acts as 1.
pub fn restrict_to_quotient(
    md: &ModularData,
    ctx: &QuotientContext,
    cert: &QuotientCertificate,
) -> Result<ModularData, ModularError> {
    let kept = kept_label_indices(&md.labels, ctx, cert)?;
    let labels = subset_label_set(&md.labels, &kept);
    let t: Vec<Cyclotomic> = kept.iter().map(|&i| md.t[i].clone()).collect();
    let s_un: Vec<Vec<Cyclotomic>> = kept
        .iter()
        .map(|&i| kept.iter().map(|&j| md.s_unnormalized[i][j].clone()).collect())
        .collect();
    let global_dim_sq: u64 = labels
        .labels
        .iter()
        .map(|l| l.dimension() * l.dimension())
        .sum();
    assemble(labels, t, s_un, global_dim_sq, cert.is_modular)
}

/// Modular data of D^ω(G, A) computed directly on the surviving labels,
/// without materializing the full S̃ of D^ω(G) first.
pub fn restricted_modular_data(
    double: &TwistedDouble,
    ctx: &QuotientContext,
    cert: &QuotientCertificate,
    convention: SConvention,
) -> Result<ModularData, ModularError> {
    let all = simple_labels(double)?;
    let kept = kept_label_indices(&all, ctx, cert)?;
    let labels = subset_label_set(&all, &kept);
    let t: Vec<Cyclotomic> = labels.labels.iter().map(|l| labels.twist(l)).collect();
    let s_un = s_matrix_on(double, &labels, convention);
    let global_dim_sq: u64 = labels
        .labels
        .iter()
        .map(|l| l.dimension() * l.dimension())
        .sum();
    assemble(labels, t, s_un, global_dim_sq, cert.is_modular)
}

/// Compare two datasets up to a simultaneous relabeling that fixes the
/// vacuum: backtracking on the (T, vacuum row) fingerprint.
pub fn equivalent_up_to_relabeling(a: &ModularData, b: &ModularData) -> bool {
    let n = a.rank();
    if b.rank() != n {
        return false;
    }
    let fp = |md: &ModularData, i: usize| (md.t[i].clone(), md.s_unnormalized[0][i].clone());
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn backtrack(
        a: &ModularData,
        b: &ModularData,
        fp: &dyn Fn(&ModularData, usize) -> (Cyclotomic, Cyclotomic),
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        let n = a.rank();
        if i == n {
            // verify full S and T agreement under the permutation
            for x in 0..n {
                let px = assignment[x].unwrap();
                if !a.t[x].eq_value(&b.t[px]) {
                    return false;
                }
                for y in 0..n {
                    let py = assignment[y].unwrap();
                    if !a.s_unnormalized[x][y].eq_value(&b.s_unnormalized[px][py]) {
                        return false;
                    }
                }
            }
            return true;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            if i == 0 && j != 0 {
                continue; // vacuum maps to vacuum
            }
            let (ta, sa) = fp(a, i);
            let (tb, sb) = fp(b, j);
            if !ta.eq_value(&tb) || !sa.eq_value(&sb) {
                continue;
            }
            assignment[i] = Some(j);
            used[j] = true;
            if backtrack(a, b, fp, assignment, used, i + 1) {
                return true;
            }
            assignment[i] = None;
            used[j] = false;
        }
        false
    }
    backtrack(a, b, &fp, &mut assignment, &mut used, 0)
}
