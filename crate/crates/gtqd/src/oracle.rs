//! Brute-force braiding oracle.
//!
//! Independently of the closed-form character sums in `modular`, this module
//! builds each simple sector as an explicit matrix module — the module
//! induced from the twisted *regular* representation of the centralizer, so
//! no irreducible matrices are ever needed — applies the R-element of the
//! double twice, and reads S̃ entries off traces. Isotypic components are cut
//! out by right multiplication with the central idempotents of the twisted
//! centralizer algebra, which are computable from character values alone.
//!
//! Writing the double monodromy as R₂₁R = Σ_{c,d} (e_d ⊗ c) ⊗ (e_c ⊗ d^c)
//! and using Tr((A ⊗ B)(U ⊗ V)) = Tr(AU)·Tr(BV), each S̃ entry is a sum of
//! |G|² products of small traces. Used only in tests and verification runs;
//! capped at |G| ≤ 8.

use num::rational::BigRational;
use num::BigInt;
use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::double::{Label, TwistedDouble};
use crate::modular::{LabelSet, SConvention, SimpleLabel};

pub const DEFAULT_ORACLE_CAP: usize = 8;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("group order {order} exceeds the oracle cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("twisted central idempotents fail their defining relations")]
    BadIdempotents,
    #[error("induced regular action is not a representation (at {0:?} · {1:?})")]
    NotARepresentation(Label, Label),
}

/// One basis move of a generalized permutation matrix: target index and the
/// exponent of the root-of-unity amplitude (None = annihilated).
type GenPerm = Vec<Option<(usize, u64)>>;

/// The induced module from the twisted regular representation of the
/// centralizer of a class representative: dim = |class|·|C| = |G|.
pub struct RegularSector<'a> {
    double: &'a TwistedDouble,
    labels: &'a LabelSet,
    class_index: usize,
    dim: usize,
    cent_size: usize,
}

impl<'a> RegularSector<'a> {
    pub fn new(double: &'a TwistedDouble, labels: &'a LabelSet, class_index: usize) -> Self {
        let data = &labels.classes[class_index];
        let cent_size = data.emb.len();
        let dim = data.members.len() * cent_size;
        RegularSector {
            double,
            labels,
            class_index,
            dim,
            cent_size,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn encode(&self, member: usize, cent: usize) -> usize {
        member * self.cent_size + cent
    }

    /// π(e_h ⊗ x) as a generalized permutation of the basis (member, y).
    pub fn action(&self, (h, x): Label) -> GenPerm {
        let grp = self.double.group();
        let m = self.double.modulus();
        let data = &self.labels.classes[self.class_index];
        let mut out: GenPerm = vec![None; self.dim];
        for (i, &gi) in data.members.iter().enumerate() {
            let gj = grp.mul(grp.mul(x, gi), grp.inv(x)); // x g_i x^{-1}
            if gj != h {
                continue;
            }
            let j = data.class_position(gj);
            let xi = data.transversal[i];
            let xj = data.transversal[j];
            // x·x_i = x_j·c with c in the centralizer of the representative
            let c = grp.mul(grp.inv(xj), grp.mul(x, xi));
            let amp = (self.double.tables.theta(gj, x, xi) + m
                - self.double.tables.theta(gj, xj, c))
                % m;
            for (y_pos, &y) in data.emb.iter().enumerate() {
                // ρ_reg(c): e_y ↦ ζ^{θ_g(c, y)} e_{cy}
                let cy = grp.mul(c, y);
                let cy_pos = data.centralizer_position(cy);
                let exp = (amp + self.double.tables.theta(data.rep, c, y)) % m;
                out[self.encode(i, y_pos)] = Some((self.encode(j, cy_pos), exp));
            }
        }
        out
    }

    /// Exhaustively check that `action` is an algebra representation.
    pub fn verify_representation(&self) -> Result<(), OracleError> {
        let grp = self.double.group();
        let n = grp.order();
        let m = self.double.modulus();
        for g in 0..n {
            for x in 0..n {
                let a1 = self.action((g, x));
                for h in 0..n {
                    for y in 0..n {
                        let a2 = self.action((h, y));
                        // π(e_g⊗x)·π(e_h⊗y) as composition a1 ∘ a2
                        let composed: GenPerm = (0..self.dim)
                            .map(|b| {
                                a2[b].and_then(|(t, e1)| {
                                    a1[t].map(|(t2, e2)| (t2, (e1 + e2) % m))
                                })
                            })
                            .collect();
                        let expect: GenPerm = match self.double.product((g, x), (h, y)) {
                            None => vec![None; self.dim],
                            Some((scalar, lbl)) => {
                                let base = self.action(lbl);
                                base.iter()
                                    .map(|mv| mv.map(|(t, e)| (t, (e + scalar) % m)))
                                    .collect()
                            }
                        };
                        if composed != expect {
                            return Err(OracleError::NotARepresentation((g, x), (h, y)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Right multiplication by the central idempotent of the χ-isotypic
    /// component, as a dense matrix (column-index = source basis vector).
    pub fn isotypic_projector(&self, label: &SimpleLabel) -> Vec<Vec<Cyclotomic>> {
        let grp = self.double.group();
        let m = self.double.modulus();
        let data = &self.labels.classes[self.class_index];
        let coeffs = idempotent_coefficients(self.double, self.labels, label);
        let mut mat = vec![vec![Cyclotomic::zero(1); self.dim]; self.dim];
        for i in 0..data.members.len() {
            for (y_pos, &y) in data.emb.iter().enumerate() {
                for (x_pos, &x) in data.emb.iter().enumerate() {
                    // ū_y · ū_x = ζ^{θ_g(y,x)} ū_{yx}
                    let yx = grp.mul(y, x);
                    let yx_pos = data.centralizer_position(yx);
                    let amp = Cyclotomic::root_of_unity(
                        m,
                        self.double.tables.theta(data.rep, y, x) as i64,
                    );
                    let target = self.encode(i, yx_pos);
                    let source = self.encode(i, y_pos);
                    mat[target][source] =
                        mat[target][source].add(&coeffs[x_pos].mul(&amp));
                }
            }
        }
        mat
    }
}

/// Coefficients of the central idempotent e_χ = (χ(1)/|C|) Σ_x
/// ζ^{-θ(x, x^{-1})} χ(x^{-1}) ū_x in the twisted centralizer algebra.
fn idempotent_coefficients(
    double: &TwistedDouble,
    labels: &LabelSet,
    label: &SimpleLabel,
) -> Vec<Cyclotomic> {
    let grp = double.group();
    let m = double.modulus();
    let data = &labels.classes[label.class_index];
    let scale = BigRational::new(BigInt::from(label.degree), BigInt::from(data.emb.len()));
    data.emb
        .iter()
        .map(|&x| {
            let xi = grp.inv(x);
            let xi_pos = data.centralizer_position(xi);
            let phase = Cyclotomic::root_of_unity(
                m,
                -(double.tables.theta(data.rep, x, xi) as i64),
            );
            phase.mul(&label.char_values[xi_pos]).scale(&scale)
        })
        .collect()
}

/// Verify e_χ·e_ψ = δ_{χψ}·e_χ in the twisted algebra, for all label pairs
/// of one class.
pub fn verify_idempotents(
    double: &TwistedDouble,
    labels: &LabelSet,
    class_index: usize,
) -> Result<(), OracleError> {
    let grp = double.group();
    let m = double.modulus();
    let data = &labels.classes[class_index];
    let class_labels: Vec<&SimpleLabel> = labels
        .labels
        .iter()
        .filter(|l| l.class_index == class_index)
        .collect();
    for a in &class_labels {
        let ea = idempotent_coefficients(double, labels, a);
        for b in &class_labels {
            let eb = idempotent_coefficients(double, labels, b);
            // twisted convolution
            let mut prod = vec![Cyclotomic::zero(1); data.emb.len()];
            for (x_pos, &x) in data.emb.iter().enumerate() {
                for (y_pos, &y) in data.emb.iter().enumerate() {
                    let z = grp.mul(x, y);
                    let z_pos = data.centralizer_position(z);
                    let amp = Cyclotomic::root_of_unity(
                        m,
                        double.tables.theta(data.rep, x, y) as i64,
                    );
                    prod[z_pos] = prod[z_pos].add(&ea[x_pos].mul(&eb[y_pos]).mul(&amp));
                }
            }
            let same = std::ptr::eq(*a, *b)
                || (a.degree == b.degree
                    && a.char_values
                        .iter()
                        .zip(&b.char_values)
                        .all(|(u, v)| u.eq_value(v)));
            for (z_pos, got) in prod.iter().enumerate() {
                let expect = if same {
                    ea[z_pos].clone()
                } else {
                    Cyclotomic::zero(1)
                };
                if !got.eq_value(&expect) {
                    return Err(OracleError::BadIdempotents);
                }
            }
        }
    }
    Ok(())
}

fn trace_against(dense: &[Vec<Cyclotomic>], perm: &GenPerm, modulus: u64) -> Cyclotomic {
    // Tr(A·U) where U: basis b ↦ amp·e_{t(b)}: Σ_b A[b][t(b)]·amp(b)
    let mut acc = Cyclotomic::zero(1);
    for (b, mv) in perm.iter().enumerate() {
        if let Some((t, e)) = mv {
            let a = &dense[b][*t];
            if a.is_zero() {
                continue;
            }
            acc = acc.add(&a.mul(&Cyclotomic::root_of_unity(modulus, *e as i64)));
        }
    }
    acc
}

/// The full unnormalized S-matrix recomputed from explicit matrix actions.
pub fn braiding_oracle_matrix(
    double: &TwistedDouble,
    labels: &LabelSet,
    convention: SConvention,
    cap: usize,
) -> Result<Vec<Vec<Cyclotomic>>, OracleError> {
    let grp = double.group();
    let n = grp.order();
    if n > cap {
        return Err(OracleError::CapExceeded { order: n, cap });
    }
    let m = double.modulus();
    let rank = labels.labels.len();
    let sectors: Vec<RegularSector> = (0..labels.classes.len())
        .map(|c| RegularSector::new(double, labels, c))
        .collect();
    for c in 0..labels.classes.len() {
        verify_idempotents(double, labels, c)?;
    }
    // cache the sector actions of every basis element appearing in R₂₁R
    let mut s = vec![vec![Cyclotomic::zero(1); rank]; rank];
    for i in 0..rank {
        let li = &labels.labels[i];
        let sector_i = &sectors[li.class_index];
        let proj_i = sector_i.isotypic_projector(li);
        for j in i..rank {
            let lj = &labels.labels[j];
            let sector_j = &sectors[lj.class_index];
            let proj_j = sector_j.isotypic_projector(lj);
            let mut acc = Cyclotomic::zero(1);
            for c in 0..n {
                for d in 0..n {
                    let dc = grp.conjugate(d, c);
                    let left = sector_i.action((d, c));
                    let t1 = trace_against(&proj_i, &left, m);
                    if t1.is_zero() {
                        continue;
                    }
                    let right = sector_j.action((c, dc));
                    let t2 = trace_against(&proj_j, &right, m);
                    acc = acc.add(&t1.mul(&t2));
                }
            }
            let scale = BigRational::new(
                BigInt::from(1),
                BigInt::from(li.degree * lj.degree),
            );
            let mut entry = acc.scale(&scale);
            if convention == SConvention::Standard {
                entry = entry.conj();
            }
            s[i][j] = entry.clone();
            s[j][i] = entry;
        }
    }
    Ok(s)
}

/// Check R·Δ(u) = Δᵒᵖ(u)·R in D ⊗ D for every basis element u, with
/// R = Σ_{a,b} (e_a ⊗ 1) ⊗ (e_b ⊗ a).
pub fn verify_r_matrix(double: &TwistedDouble) -> Option<Label> {
    let grp = double.group();
    let n = grp.order();
    type Tensor = std::collections::BTreeMap<(Label, Label), Cyclotomic>;
    let m = double.modulus();
    let add_term = |map: &mut Tensor, key: (Label, Label), coeff: Cyclotomic| {
        let entry = map.entry(key).or_insert_with(|| Cyclotomic::zero(1));
        *entry = entry.add(&coeff);
    };
    let mul_into = |out: &mut Tensor,
                    lhs: &[(Label, Label, u64)],
                    rhs: &[(Label, Label, u64)]| {
        for &(l1, l2, e1) in lhs {
            for &(r1, r2, e2) in rhs {
                let Some((s1, p1)) = double.product(l1, r1) else {
                    continue;
                };
                let Some((s2, p2)) = double.product(l2, r2) else {
                    continue;
                };
                let exp = (e1 + e2 + s1 + s2) % m;
                add_term(out, (p1, p2), Cyclotomic::root_of_unity(m, exp as i64));
            }
        }
    };
    let r_terms: Vec<(Label, Label, u64)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| ((a, 0), (b, a), 0u64)))
        .collect();
    for g in 0..n {
        for x in 0..n {
            let delta: Vec<(Label, Label, u64)> = double
                .coproduct((g, x))
                .into_iter()
                .map(|(a, b, e)| (a, b, e))
                .collect();
            let delta_op: Vec<(Label, Label, u64)> =
                delta.iter().map(|&(a, b, e)| (b, a, e)).collect();
            let mut lhs = Tensor::new();
            mul_into(&mut lhs, &r_terms, &delta);
            let mut rhs = Tensor::new();
            mul_into(&mut rhs, &delta_op, &r_terms);
            let keys: std::collections::BTreeSet<_> =
                lhs.keys().chain(rhs.keys()).cloned().collect();
            for k in keys {
                let zero = Cyclotomic::zero(1);
                let a = lhs.get(&k).unwrap_or(&zero);
                let b = rhs.get(&k).unwrap_or(&zero);
                if !a.eq_value(b) {
                    return Some((g, x));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{h3, Cochain, DEFAULT_H3_CAP};
    use crate::group::FiniteGroup;
    use crate::modular::{modular_data, simple_labels};

    #[test]
    fn regular_sectors_are_representations() {
        let g = crate::catalog::by_name("s3").unwrap();
        let d = TwistedDouble::new(Cochain::zero(&g, 3, 6)).unwrap();
        let labels = simple_labels(&d).unwrap();
        for c in 0..labels.classes.len() {
            let sector = RegularSector::new(&d, &labels, c);
            sector.verify_representation().unwrap();
        }
    }

    #[test]
    fn twisted_sector_representation_q8() {
        let g = crate::catalog::by_name("q8").unwrap();
        let h = h3(&g, 8, DEFAULT_H3_CAP).unwrap();
        let d = TwistedDouble::new(h.generators[0].clone()).unwrap();
        let labels = simple_labels(&d).unwrap();
        for c in 0..labels.classes.len() {
            let sector = RegularSector::new(&d, &labels, c);
            sector.verify_representation().unwrap();
        }
    }

    #[test]
    fn oracle_matches_closed_form_toric_code() {
        let g = FiniteGroup::cyclic(2);
        let d = TwistedDouble::new(Cochain::zero(&g, 3, 2)).unwrap();
        let md = modular_data(&d, SConvention::Standard).unwrap();
        let oracle =
            braiding_oracle_matrix(&d, &md.labels, SConvention::Standard, DEFAULT_ORACLE_CAP)
                .unwrap();
        for i in 0..md.rank() {
            for j in 0..md.rank() {
                assert!(oracle[i][j].eq_value(&md.s_unnormalized[i][j]));
            }
        }
    }

    #[test]
    fn oracle_matches_closed_form_double_semion() {
        let g = FiniteGroup::cyclic(2);
        let d = TwistedDouble::new(Cochain::from_values(&g, 3, 2, vec![1])).unwrap();
        let md = modular_data(&d, SConvention::Standard).unwrap();
        let oracle =
            braiding_oracle_matrix(&d, &md.labels, SConvention::Standard, DEFAULT_ORACLE_CAP)
                .unwrap();
        for i in 0..md.rank() {
            for j in 0..md.rank() {
                assert!(oracle[i][j].eq_value(&md.s_unnormalized[i][j]));
            }
        }
        // vacuum ⊗ vacuum before normalization is the dimension product
        assert!(oracle[0][0].is_one());
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let g = crate::catalog::by_name("dic12").unwrap();
        let d = TwistedDouble::new(Cochain::zero(&g, 3, 12)).unwrap();
        let labels = simple_labels(&d).unwrap();
        assert!(matches!(
            braiding_oracle_matrix(&d, &labels, SConvention::Standard, 8),
            Err(OracleError::CapExceeded { .. })
        ));
    }

    #[test]
    fn r_matrix_commutes_with_coproduct() {
        for (name, modulus) in [("z2", 2u64), ("z4", 4), ("s3", 6)] {
            let g = crate::catalog::by_name(name).unwrap();
            let h = h3(&g, modulus, DEFAULT_H3_CAP).unwrap();
            for omega in h.class_representatives() {
                let d = TwistedDouble::new(omega).unwrap();
                assert_eq!(verify_r_matrix(&d), None, "{name}");
            }
        }
    }
}
