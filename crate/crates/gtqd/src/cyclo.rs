//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! Elements are kept in the power basis 1, ζ, ..., ζ^{φ(N)−1} after reduction
//! modulo the N-th cyclotomic polynomial, with rational coefficients. The
//! reduced form is canonical per conductor; elements at different conductors
//! are compared after lifting to the least common one. No floating point
//! anywhere — every S-matrix entry, character value and twist stays exact.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use crate::modn::lcm_u;

fn cyclotomic_poly_cache() -> &'static Mutex<HashMap<u64, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of Φ_n, ascending degree, computed by dividing x^n − 1 by the
/// cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    if let Some(p) = cyclotomic_poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // numerator x^n - 1
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::from(1);
        for d in 1..n {
            if n % d == 0 {
                let phi_d = cyclotomic_polynomial(d);
                num = poly_div_exact(&num, &phi_d);
            }
        }
        num
    };
    cyclotomic_poly_cache()
        .lock()
        .unwrap()
        .insert(n, result.clone());
    result
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic; division is exact here
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=(nd - dd)).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, dc) in den.iter().enumerate() {
            rem[k + i] -= &c * dc;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

fn euler_phi(n: u64) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        result = result / m * (m - 1);
    }
    result as usize
}

/// An element of ℚ(ζ_N), reduced modulo Φ_N.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u64,
    /// exponent → coefficient, exponents < φ(N), coefficients nonzero
    coeffs: BTreeMap<usize, BigRational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        Cyclotomic {
            conductor,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !q.is_zero() {
            coeffs.insert(0, q);
        }
        Cyclotomic {
            conductor: 1,
            coeffs,
        }
    }

    /// ζ_n^k, canonical.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as usize;
        let mut map = BTreeMap::new();
        map.insert(k, BigRational::one());
        Self::reduce_map(n, map)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Raw reduced coefficients (exponent, value).
    pub fn coeff_entries(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn from_coeffs(conductor: u64, entries: impl IntoIterator<Item = (usize, BigRational)>) -> Self {
        let mut map: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (e, c) in entries {
            if c.is_zero() {
                continue;
            }
            let e = e % conductor as usize;
            *map.entry(e).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self::reduce_map(conductor, map)
    }

    fn reduce_map(conductor: u64, map: BTreeMap<usize, BigRational>) -> Self {
        let phi = euler_phi(conductor);
        if map.keys().all(|&e| e < phi) {
            return Cyclotomic {
                conductor,
                coeffs: map,
            };
        }
        // dense remainder mod Φ_N
        let phi_poly = cyclotomic_polynomial(conductor);
        let deg = map.keys().max().copied().unwrap_or(0);
        let mut dense: Vec<BigRational> = vec![BigRational::zero(); deg + 1];
        for (e, c) in map {
            dense[e] += c;
        }
        for k in (phi..=deg).rev() {
            let c = std::mem::replace(&mut dense[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            // x^k ≡ -c · (Φ - x^phi) ... subtract c·x^{k-phi}·Φ
            for (i, pc) in phi_poly.iter().enumerate().take(phi) {
                dense[k - phi + i] -= &c * BigRational::from(pc.clone());
            }
        }
        let coeffs: BTreeMap<usize, BigRational> = dense
            .into_iter()
            .enumerate()
            .take(phi)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Cyclotomic { conductor, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |q| q.is_one())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.is_empty() {
            return Some(BigRational::zero());
        }
        if self.coeffs.len() == 1 {
            if let Some(c) = self.coeffs.get(&0) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Lift to a (multiple) conductor; exponents scale by the ratio.
    pub fn lift(&self, conductor: u64) -> Self {
        assert!(conductor % self.conductor == 0);
        if conductor == self.conductor {
            return self.clone();
        }
        let ratio = (conductor / self.conductor) as usize;
        let map: BTreeMap<usize, BigRational> = self
            .coeffs
            .iter()
            .map(|(&e, c)| (e * ratio, c.clone()))
            .collect();
        Self::reduce_map(conductor, map)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let l = lcm_u(a.conductor, b.conductor);
        (a.lift(l), b.lift(l))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (mut a, b) = Self::common(self, rhs);
        for (e, c) in b.coeffs {
            let entry = a.coeffs.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        a.coeffs.retain(|_, c| !c.is_zero());
        a
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = Self::common(self, rhs);
        let mut map: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (&e1, c1) in &a.coeffs {
            for (&e2, c2) in &b.coeffs {
                let prod = c1 * c2;
                let e = e1 + e2;
                let entry = map.entry(e).or_insert_with(BigRational::zero);
                *entry += prod;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Self::reduce_map(a.conductor, map)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(self.conductor);
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * q)).collect(),
        }
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        let map: BTreeMap<usize, BigRational> = self
            .coeffs
            .iter()
            .map(|(&e, c)| (if e == 0 { 0 } else { n - e }, c.clone()))
            .collect();
        Self::reduce_map(self.conductor, map)
    }

    pub fn norm_sq(&self) -> Self {
        self.mul(&self.conj())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in ℚ[x]
    /// against Φ_N. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero cyclotomic");
        if let Some(q) = self.as_rational() {
            return Self::from_rational(q.recip());
        }
        let n = self.conductor;
        let phi = euler_phi(n);
        let modulus: Vec<BigRational> = cyclotomic_polynomial(n)
            .into_iter()
            .map(|c| BigRational::from(c))
            .collect();
        let mut a: Vec<BigRational> = vec![BigRational::zero(); phi];
        for (&e, c) in &self.coeffs {
            a[e] = c.clone();
        }
        // extended euclid: find s with a·s ≡ 1 mod Φ
        let (mut r0, mut r1) = (modulus, a);
        let zero_poly = |p: &Vec<BigRational>| p.iter().all(|c| c.is_zero());
        let deg = |p: &Vec<BigRational>| p.iter().rposition(|c| !c.is_zero());
        let mut s0: Vec<BigRational> = vec![BigRational::zero()];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !zero_poly(&r1) {
            // divide r0 by r1
            let d1 = deg(&r1).unwrap();
            let mut rem = r0.clone();
            let mut q: Vec<BigRational> = vec![BigRational::zero(); rem.len()];
            while let Some(d0) = deg(&rem) {
                if d0 < d1 {
                    break;
                }
                let c = &rem[d0] / &r1[d1];
                q[d0 - d1] = c.clone();
                for i in 0..=d1 {
                    let sub = &c * &r1[i];
                    rem[d0 - d1 + i] -= sub;
                }
            }
            // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q*s1)
            let mut s_new = s0.clone();
            s_new.resize(s_new.len().max(q.len() + s1.len()), BigRational::zero());
            for (i, qc) in q.iter().enumerate() {
                if qc.is_zero() {
                    continue;
                }
                for (j, sc) in s1.iter().enumerate() {
                    let sub = qc * sc;
                    s_new[i + j] -= sub;
                }
            }
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_new;
        }
        // r0 = gcd (a constant, since Φ_N is squarefree and a ≠ 0 mod Φ)
        let d0 = deg(&r0).expect("gcd nonzero");
        assert!(d0 == 0, "element not invertible (unexpected for a field)");
        let scale = r0[0].clone().recip();
        Self::from_coeffs(
            n,
            s0.into_iter()
                .enumerate()
                .map(|(e, c)| (e, c * &scale)),
        )
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    pub fn eq_value(&self, rhs: &Self) -> bool {
        let (a, b) = Self::common(self, rhs);
        a.coeffs == b.coeffs
    }

    /// If this is a root of unity, return (order, exponent) with
    /// value = ζ_order^exponent and exponent coprime-reduced.
    pub fn as_root_of_unity(&self) -> Option<(u64, u64)> {
        let bound = lcm_u(2, self.conductor);
        let mut acc = Self::one();
        for k in 1..=bound {
            acc = acc.mul(self);
            if acc.is_one() {
                // self^k = 1: find the exponent by direct scan
                for e in 0..k {
                    if self.eq_value(&Self::root_of_unity(k, e as i64)) {
                        let g = num::integer::gcd(k, if e == 0 { k } else { e });
                        return Some((k / g, e / g));
                    }
                }
                return None;
            }
        }
        None
    }

    /// Deterministic total order: by value vector at the common conductor.
    pub fn lex_cmp(&self, rhs: &Self) -> Ordering {
        let (a, b) = Self::common(self, rhs);
        let phi = euler_phi(a.conductor);
        for e in 0..phi {
            let ca = a.coeffs.get(&e);
            let cb = b.coeffs.get(&e);
            let ord = match (ca, cb) {
                (None, None) => Ordering::Equal,
                (Some(x), Some(y)) => x.cmp(y),
                (None, Some(y)) => BigRational::zero().cmp(y),
                (Some(x), None) => x.cmp(&BigRational::zero()),
            };
            if ord != Ordering::Equal {
                return ord.reverse();
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.eq_value(other)
    }
}
impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if e == 1 {
                    write!(f, "z{}", self.conductor)?;
                } else {
                    write!(f, "z{}^{}", self.conductor, e)?;
                }
            }
        }
        Ok(())
    }
}

/// √n for a positive integer, expressed exactly via quadratic Gauss sums.
pub fn sqrt_positive_integer(n: u64) -> Cyclotomic {
    assert!(n >= 1);
    let mut square_part = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    let mut squarefree: Vec<u64> = Vec::new();
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        square_part *= p.pow(e / 2);
        if e % 2 == 1 {
            squarefree.push(p);
        }
        p += 1;
    }
    if rest > 1 {
        squarefree.push(rest);
    }
    let mut acc = Cyclotomic::from_integer(square_part as i64);
    for p in squarefree {
        acc = acc.mul(&sqrt_prime(p));
    }
    acc
}

fn sqrt_prime(p: u64) -> Cyclotomic {
    if p == 2 {
        // ζ8 + ζ8^{-1}
        return Cyclotomic::root_of_unity(8, 1).add(&Cyclotomic::root_of_unity(8, -1));
    }
    // quadratic Gauss sum g = Σ (k|p) ζ_p^k equals √p for p ≡ 1 (mod 4)
    // and i√p for p ≡ 3 (mod 4)
    let mut g = Cyclotomic::zero(p);
    for k in 1..p {
        let legendre = {
            // Euler criterion by repeated squaring
            let mut acc = 1u64;
            let mut b = k % p;
            let mut e = (p - 1) / 2;
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * b % p;
                }
                b = b * b % p;
                e >>= 1;
            }
            acc
        };
        let term = Cyclotomic::root_of_unity(p, k as i64);
        if legendre == 1 {
            g = g.add(&term);
        } else {
            g = g.sub(&term);
        }
    }
    if p % 4 == 1 {
        g
    } else {
        // divide by i
        g.mul(&Cyclotomic::root_of_unity(4, -1))
    }
}
