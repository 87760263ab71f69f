//! The twisted quantum double D^ω(G): theta/gamma tables, structure
//! constants, the Drinfeld associator, and verification of the defining
//! identities.
//!
//! On the basis e_g ⊗ x the product and coproduct are
//!
//!   (e_g ⊗ x)·(e_h ⊗ y) = θ_g(x, y) δ_{g^x, h} e_g ⊗ xy
//!   Δ(e_g ⊗ x) = Σ_{ab=g} γ_x(a, b) (e_a ⊗ x) ⊗ (e_b ⊗ x)
//!
//! with the 2-cochains (exponent form)
//!
//!   θ_g(x, y) = ω(g,x,y) + ω(x,y,g^{xy}) − ω(x,g^x,y)
//!   γ_x(a, b) = ω(a,b,x) + ω(x,a^x,b^x) − ω(a,x,b^x)
//!
//! and the associator φ = Σ ω(a,b,c)^{-1} e_a ⊗ e_b ⊗ e_c. Associativity of
//! the product is exactly the twisted 2-cocycle law for θ; quasi-
//! coassociativity conjugated by φ and multiplicativity of Δ are the other
//! two families of identities checked here, alongside δω = 0 itself.

use std::sync::Arc;

use crate::cohomology::{Cochain, CohomologyError};
use crate::group::GroupRef;

/// Fully materialized θ and γ tables; |G|³ entries each.
pub struct ThetaGammaTables {
    group: GroupRef,
    modulus: u64,
    theta: Vec<u64>,
    gamma: Vec<u64>,
}

impl ThetaGammaTables {
    pub fn build(omega: &Cochain) -> Result<Self, CohomologyError> {
        assert_eq!(omega.degree(), 3);
        if let Some(t) = omega.first_cocycle_failure() {
            return Err(CohomologyError::NotACocycle(t));
        }
        Ok(Self::build_unchecked(omega))
    }

    pub(crate) fn build_unchecked(omega: &Cochain) -> Self {
        let g = Arc::clone(omega.group());
        let n = g.order();
        let m = omega.modulus();
        let mut theta = vec![0u64; n * n * n];
        let mut gamma = vec![0u64; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let idx = (a * n + b) * n + c;
                    // θ_a(b, c)
                    let conj_bc = g.conjugate(a, g.mul(b, c));
                    let conj_b = g.conjugate(a, b);
                    theta[idx] = (omega.eval(&[a, b, c])
                        + omega.eval(&[b, c, conj_bc])
                        + m
                        - omega.eval(&[b, conj_b, c]))
                        % m;
                    // γ_a(b, c): a is the group part, (b, c) the factorization
                    let bx = g.conjugate(b, a);
                    let cx = g.conjugate(c, a);
                    gamma[idx] = (omega.eval(&[b, c, a])
                        + omega.eval(&[a, bx, cx])
                        + m
                        - omega.eval(&[b, a, cx]))
                        % m;
                }
            }
        }
        ThetaGammaTables {
            group: g,
            modulus: m,
            theta,
            gamma,
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn theta(&self, g: usize, x: usize, y: usize) -> u64 {
        let n = self.group.order();
        self.theta[(g * n + x) * n + y]
    }

    #[inline]
    pub fn gamma(&self, x: usize, a: usize, b: usize) -> u64 {
        let n = self.group.order();
        self.gamma[(x * n + a) * n + b]
    }

    /// γ_g as a normalized 2-cochain on all of G.
    pub fn gamma_cochain(&self, g: usize) -> Cochain {
        Cochain::from_fn(&self.group, 2, self.modulus, |args| {
            self.gamma(g, args[0], args[1])
        })
    }

    /// θ_g as a normalized 2-cochain on all of G.
    pub fn theta_cochain(&self, g: usize) -> Cochain {
        Cochain::from_fn(&self.group, 2, self.modulus, |args| {
            self.theta(g, args[0], args[1])
        })
    }
}

/// D^ω(G) with its structure constants.
pub struct TwistedDouble {
    pub omega: Cochain,
    pub tables: ThetaGammaTables,
}

/// Basis label e_g ⊗ x.
pub type Label = (usize, usize);

impl TwistedDouble {
    pub fn new(omega: Cochain) -> Result<Self, CohomologyError> {
        let tables = ThetaGammaTables::build(&omega)?;
        Ok(TwistedDouble { omega, tables })
    }

    pub fn group(&self) -> &GroupRef {
        self.tables.group()
    }
    pub fn modulus(&self) -> u64 {
        self.tables.modulus()
    }
    pub fn dimension(&self) -> usize {
        let n = self.group().order();
        n * n
    }

    /// (e_g ⊗ x)·(e_h ⊗ y); None encodes the zero product.
    pub fn product(&self, (g, x): Label, (h, y): Label) -> Option<(u64, Label)> {
        let grp = self.group();
        if grp.conjugate(g, x) != h {
            return None;
        }
        Some((self.tables.theta(g, x, y), (g, grp.mul(x, y))))
    }

    /// Δ(e_g ⊗ x) as a list of (left label, right label, exponent).
    pub fn coproduct(&self, (g, x): Label) -> Vec<(Label, Label, u64)> {
        let grp = self.group();
        let n = grp.order();
        (0..n)
            .map(|a| {
                let b = grp.mul(grp.inv(a), g);
                ((a, x), (b, x), self.tables.gamma(x, a, b))
            })
            .collect()
    }

    /// Exponent of the associator coefficient on e_a ⊗ e_b ⊗ e_c, i.e. of
    /// ω(a,b,c)^{-1}.
    pub fn associator_exponent(&self, a: usize, b: usize, c: usize) -> u64 {
        let m = self.modulus();
        (m - self.omega.eval(&[a, b, c])) % m
    }

    pub fn counit(&self, (g, _x): Label) -> bool {
        g == 0
    }

    /// Sparse structure-constant dump: (left label, right label, exponent,
    /// product label), zero products omitted.
    pub fn structure_constants(&self) -> Vec<(Label, Label, u64, Label)> {
        let n = self.group().order();
        let mut out = Vec::new();
        for g in 0..n {
            for x in 0..n {
                let h = self.group().conjugate(g, x);
                for y in 0..n {
                    if let Some((e, lbl)) = self.product((g, x), (h, y)) {
                        out.push(((g, x), (h, y), e, lbl));
                    }
                }
            }
        }
        out
    }

    pub fn verify_quasi_hopf(&self) -> QuasiHopfReport {
        let grp = self.group();
        let n = grp.order();
        let m = self.modulus();
        let t = &self.tables;
        let mut report = QuasiHopfReport {
            is_hopf: self.omega.is_zero(),
            product_associativity: None,
            quasi_coassociativity: None,
            coproduct_multiplicative: None,
            normalization: None,
            omega_cocycle: self.omega.first_cocycle_failure(),
        };
        // twisted 2-cocycle law for θ = associativity of the product:
        // θ_g(x,y) + θ_g(xy,z) = θ_{g^x}(y,z) + θ_g(x,yz)
        'assoc: for g in 0..n {
            for x in 0..n {
                let gx = grp.conjugate(g, x);
                for y in 0..n {
                    let xy = grp.mul(x, y);
                    for z in 0..n {
                        let lhs = (t.theta(g, x, y) + t.theta(g, xy, z)) % m;
                        let rhs = (t.theta(gx, y, z) + t.theta(g, x, grp.mul(y, z))) % m;
                        if lhs != rhs {
                            report.product_associativity = Some([g, x, y, z]);
                            break 'assoc;
                        }
                    }
                }
            }
        }
        // quasi-coassociativity conjugated by φ:
        // γ_x(a,b) + γ_x(ab,d) − γ_x(a,bd) − γ_x(b,d) = ω(a,b,d) − ω(a^x,b^x,d^x)
        'coassoc: for x in 0..n {
            for a in 0..n {
                let ax = grp.conjugate(a, x);
                for b in 0..n {
                    let bx = grp.conjugate(b, x);
                    for d in 0..n {
                        let dx = grp.conjugate(d, x);
                        let lhs = (t.gamma(x, a, b) + t.gamma(x, grp.mul(a, b), d) + 2 * m
                            - t.gamma(x, a, grp.mul(b, d))
                            - t.gamma(x, b, d))
                            % m;
                        let rhs = (self.omega.eval(&[a, b, d]) + m
                            - self.omega.eval(&[ax, bx, dx]))
                            % m;
                        if lhs != rhs {
                            report.quasi_coassociativity = Some([x, a, b, d]);
                            break 'coassoc;
                        }
                    }
                }
            }
        }
        // multiplicativity of Δ:
        // θ_{ab}(x,y) + γ_{xy}(a,b) = γ_x(a,b) + γ_y(a^x,b^x) + θ_a(x,y) + θ_b(x,y)
        'mult: for x in 0..n {
            for y in 0..n {
                let xy = grp.mul(x, y);
                for a in 0..n {
                    let ax = grp.conjugate(a, x);
                    for b in 0..n {
                        let bx = grp.conjugate(b, x);
                        let lhs = (t.theta(grp.mul(a, b), x, y) + t.gamma(xy, a, b)) % m;
                        let rhs = (t.gamma(x, a, b)
                            + t.gamma(y, ax, bx)
                            + t.theta(a, x, y)
                            + t.theta(b, x, y))
                            % m;
                        if lhs != rhs {
                            report.coproduct_multiplicative = Some([x, y, a, b]);
                            break 'mult;
                        }
                    }
                }
            }
        }
        // normalization of θ and γ (counit axioms)
        'norm: for g in 0..n {
            for x in 0..n {
                if t.theta(g, 0, x) != 0
                    || t.theta(g, x, 0) != 0
                    || t.gamma(x, 0, g) != 0
                    || t.gamma(x, g, 0) != 0
                {
                    report.normalization = Some([g, x]);
                    break 'norm;
                }
            }
        }
        report
    }

    /// On the centralizer of g the coproduct cochain γ_g agrees with θ_g
    /// and the common restriction is a 2-cocycle there.
    pub fn check_theta_eq_gamma_on_centralizer(&self, g: usize) -> CentralizerReport {
        let grp = self.group();
        let cent = grp.centralizer(g);
        let mut agree = true;
        let mut first_disagreement = None;
        for &x in &cent {
            for &y in &cent {
                if self.tables.theta(g, x, y) != self.tables.gamma(g, x, y) {
                    agree = false;
                    first_disagreement = Some((x, y));
                }
            }
        }
        let (sub, emb) = grp.subgroup(&cent);
        let theta_restricted = Cochain::from_fn(&sub, 2, self.modulus(), |args| {
            self.tables.theta(g, emb[args[0]], emb[args[1]])
        });
        let cocycle_failure = theta_restricted.first_cocycle_failure();
        CentralizerReport {
            element: g,
            centralizer_order: cent.len(),
            agree,
            first_disagreement,
            is_two_cocycle: cocycle_failure.is_none(),
        }
    }
}

#[derive(Debug)]
pub struct QuasiHopfReport {
    /// φ is the identity associator (ω vanishes as a cochain)
    pub is_hopf: bool,
    pub product_associativity: Option<[usize; 4]>,
    pub quasi_coassociativity: Option<[usize; 4]>,
    pub coproduct_multiplicative: Option<[usize; 4]>,
    pub normalization: Option<[usize; 2]>,
    pub omega_cocycle: Option<Vec<usize>>,
}

impl QuasiHopfReport {
    pub fn passed(&self) -> bool {
        self.product_associativity.is_none()
            && self.quasi_coassociativity.is_none()
            && self.coproduct_multiplicative.is_none()
            && self.normalization.is_none()
            && self.omega_cocycle.is_none()
    }
}

#[derive(Debug)]
pub struct CentralizerReport {
    pub element: usize,
    pub centralizer_order: usize,
    pub agree: bool,
    pub first_disagreement: Option<(usize, usize)>,
    pub is_two_cocycle: bool,
}

impl CentralizerReport {
    pub fn passed(&self) -> bool {
        self.agree && self.is_two_cocycle
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{cyclic_cocycle, h3, Cochain, DEFAULT_H3_CAP};
    use crate::group::FiniteGroup;

    #[test]
    fn trivial_cocycle_gives_zero_tables_and_hopf() {
        let g = FiniteGroup::cyclic(4);
        let d = TwistedDouble::new(Cochain::zero(&g, 3, 4)).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(d.tables.theta(a, b, c), 0);
                    assert_eq!(d.tables.gamma(a, b, c), 0);
                }
            }
        }
        let report = d.verify_quasi_hopf();
        assert!(report.passed());
        assert!(report.is_hopf);
    }

    #[test]
    fn z2_nontrivial_theta_gamma() {
        // ω(1,1,1) = -1: θ_1(1,1) = ω(1,1,1)²/ω(1,1,1) = -1, same for γ
        let g = FiniteGroup::cyclic(2);
        let omega = Cochain::from_values(&g, 3, 2, vec![1]);
        let d = TwistedDouble::new(omega).unwrap();
        assert_eq!(d.tables.theta(1, 1, 1), 1);
        assert_eq!(d.tables.gamma(1, 1, 1), 1);
        assert!(d.verify_quasi_hopf().passed());
        assert!(!d.verify_quasi_hopf().is_hopf);
    }

    #[test]
    fn product_delta_condition_and_scalar() {
        let g = FiniteGroup::cyclic(2);
        let omega = Cochain::from_values(&g, 3, 2, vec![1]);
        let d = TwistedDouble::new(omega).unwrap();
        // (e_1 ⊗ 1)(e_1 ⊗ 1) = θ_1(1,1) e_1 ⊗ 0 = -1 · e_1 ⊗ 0
        assert_eq!(d.product((1, 1), (1, 1)), Some((1, (1, 0))));
        // mismatched flux gives zero
        assert_eq!(d.product((1, 1), (0, 1)), None);
        // trivial ω: smash product with scalar 1
        let d0 = TwistedDouble::new(Cochain::zero(&g, 3, 2)).unwrap();
        assert_eq!(d0.product((1, 1), (1, 1)), Some((0, (1, 0))));
    }

    #[test]
    fn tampered_cocycle_is_located() {
        let g = FiniteGroup::cyclic(4);
        let mut vals = cyclic_cocycle(&g, 1).raw_values().to_vec();
        vals[5] = (vals[5] + 1) % 4;
        let bad = Cochain::from_values(&g, 3, 4, vals);
        assert!(TwistedDouble::new(bad.clone()).is_err());
        let report = TwistedDouble {
            tables: ThetaGammaTables::build_unchecked(&bad),
            omega: bad,
        }
        .verify_quasi_hopf();
        assert!(report.omega_cocycle.is_some());
    }

    #[test]
    fn catalog_doubles_verify() {
        for (name, modulus) in [("z4", 4u64), ("s3", 6), ("q8", 8)] {
            let g = crate::catalog::by_name(name).unwrap();
            let h = h3(&g, modulus, DEFAULT_H3_CAP).unwrap();
            for omega in h.class_representatives() {
                let d = TwistedDouble::new(omega).unwrap();
                assert!(d.verify_quasi_hopf().passed(), "{name}");
            }
        }
    }

    #[test]
    fn theta_equals_gamma_on_centralizers_q8() {
        let g = crate::catalog::by_name("q8").unwrap();
        let h = h3(&g, 8, DEFAULT_H3_CAP).unwrap();
        let omega = h.generators[0].clone();
        let d = TwistedDouble::new(omega).unwrap();
        let classes = g.conjugacy_classes();
        for class in &classes.classes {
            let rep = class[0];
            let r = d.check_theta_eq_gamma_on_centralizer(rep);
            assert!(r.passed(), "rep {rep}: {r:?}");
        }
    }

    #[test]
    fn central_elements_have_gamma_eq_theta_globally() {
        // for g in the center, γ_g = θ_g on all of G and is a 2-cocycle on G
        let g = crate::catalog::by_name("q8").unwrap();
        let h = h3(&g, 8, DEFAULT_H3_CAP).unwrap();
        let d = TwistedDouble::new(h.generators[0].clone()).unwrap();
        for &z in &g.center() {
            let gc = d.tables.gamma_cochain(z);
            let tc = d.tables.theta_cochain(z);
            assert!(gc.eq_values(&tc), "γ and θ disagree at central {z}");
            assert!(tc.is_cocycle(), "θ at central {z} is not a 2-cocycle on G");
        }
    }

    #[test]
    fn abelian_centralizer_check_covers_whole_group() {
        let g = FiniteGroup::cyclic(4);
        let omega = cyclic_cocycle(&g, 1);
        let d = TwistedDouble::new(omega).unwrap();
        for x in 0..4 {
            let r = d.check_theta_eq_gamma_on_centralizer(x);
            assert_eq!(r.centralizer_order, 4);
            assert!(r.passed());
        }
    }

    #[test]
    fn coproduct_terms_cover_all_factorizations() {
        let g = FiniteGroup::cyclic(3);
        let d = TwistedDouble::new(Cochain::zero(&g, 3, 3)).unwrap();
        let terms = d.coproduct((2, 1));
        assert_eq!(terms.len(), 3);
        for ((a, _), (b, _), _) in terms {
            assert_eq!(g.mul(a, b), 2);
        }
    }
}
