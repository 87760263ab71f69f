//! JSON formats for groups, cocycles, cyclotomic numbers, certificates,
//! cohomology groups, and modular data.
//!
//! Every emitted document re-parses to an equal in-memory structure, and
//! serialization is deterministic (ordered fields and vectors only), so
//! identical inputs and flags produce byte-identical reports.

use serde::{Deserialize, Serialize};
use std::sync::Arc;

use crate::cohomology::Cochain;
use crate::cyclo::Cyclotomic;
use crate::group::{FiniteGroup, GroupError, GroupRef};
use crate::lattice::LatticePipeline;
use crate::modular::{ModularData, SConvention};
use crate::quotient::{FailureReason, NuConvention, QuotientCertificate};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("JSON parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group file must contain either a table or generators")]
    MissingGroupSource,
    #[error("cocycle values index out of range")]
    CocycleOutOfRange,
    #[error("cocycle is declared for group {expected:?} but applied to order {got}")]
    CocycleGroupMismatch { expected: Option<String>, got: usize },
    #[error("numeric value does not fit the JSON schema")]
    NumericOverflow,
}

/// Group source: a multiplication table or permutation generators.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generators: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub element_names: Option<Vec<String>>,
}

pub fn parse_group(json: &str, cap: usize) -> Result<GroupRef, IoError> {
    let g: GroupJson = serde_json::from_str(json)?;
    group_from_json(&g, cap)
}

pub fn group_from_json(g: &GroupJson, cap: usize) -> Result<GroupRef, IoError> {
    let mut built = if let Some(table) = &g.table {
        FiniteGroup::from_table(table)?
    } else if let Some(gens) = &g.generators {
        let degree = g
            .degree
            .or_else(|| gens.first().map(|p| p.len()))
            .unwrap_or(1);
        FiniteGroup::from_generators(gens, degree, cap)?
    } else {
        return Err(IoError::MissingGroupSource);
    };
    if let Some(names) = &g.element_names {
        if let Some(inner) = Arc::get_mut(&mut built) {
            inner.element_names = Some(names.clone());
        }
    }
    Ok(built)
}

pub fn group_to_json(g: &FiniteGroup, name: Option<String>) -> GroupJson {
    GroupJson {
        name,
        order: Some(g.order()),
        table: Some(g.table_rows()),
        degree: None,
        generators: None,
        element_names: g.element_names.clone(),
    }
}

/// Sparse normalized cocycle: entries [g1, ..., gn, exponent].
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CocycleJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub group: Option<String>,
    pub degree: usize,
    pub modulus: u64,
    pub entries: Vec<Vec<u64>>,
}

pub fn cochain_to_json(c: &Cochain, group_name: Option<String>) -> CocycleJson {
    let n = c.group().order();
    let degree = c.degree();
    let mut entries = Vec::new();
    let mut tuple = vec![1usize; degree];
    if n > 1 {
        let count = crate::cohomology::tuple_count(n, degree);
        for idx in 0..count {
            let mut rem = idx;
            for slot in tuple.iter_mut().rev() {
                *slot = rem % (n - 1) + 1;
                rem /= n - 1;
            }
            let v = c.eval(&tuple);
            if v != 0 {
                let mut row: Vec<u64> = tuple.iter().map(|&x| x as u64).collect();
                row.push(v);
                entries.push(row);
            }
        }
    }
    CocycleJson {
        group: group_name,
        degree,
        modulus: c.modulus(),
        entries,
    }
}

pub fn cochain_from_json(j: &CocycleJson, group: &GroupRef) -> Result<Cochain, IoError> {
    let n = group.order();
    let mut c = Cochain::zero(group, j.degree, j.modulus);
    let mut values = c.raw_values().to_vec();
    for entry in &j.entries {
        if entry.len() != j.degree + 1 {
            return Err(IoError::CocycleOutOfRange);
        }
        let args: Vec<usize> = entry[..j.degree].iter().map(|&x| x as usize).collect();
        if args.iter().any(|&a| a == 0 || a >= n) {
            return Err(IoError::CocycleOutOfRange);
        }
        let mut idx = 0usize;
        for &a in &args {
            idx = idx * (n - 1) + (a - 1);
        }
        values[idx] = entry[j.degree] % j.modulus;
    }
    c = Cochain::from_values(group, j.degree, j.modulus, values);
    Ok(c)
}

/// Exact cyclotomic number: reduced coefficients [exponent, num, den].
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CycloJson {
    pub conductor: u64,
    pub coeffs: Vec<(usize, i64, i64)>,
}

pub fn cyclo_to_json(z: &Cyclotomic) -> Result<CycloJson, IoError> {
    let coeffs = z
        .coeff_entries()
        .map(|(e, q)| {
            let num = i64::try_from(q.numer().clone()).map_err(|_| IoError::NumericOverflow)?;
            let den = i64::try_from(q.denom().clone()).map_err(|_| IoError::NumericOverflow)?;
            Ok((e, num, den))
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    Ok(CycloJson {
        conductor: z.conductor(),
        coeffs,
    })
}

pub fn cyclo_from_json(j: &CycloJson) -> Cyclotomic {
    Cyclotomic::from_coeffs(
        j.conductor,
        j.coeffs.iter().map(|&(e, num, den)| {
            (
                e,
                num::BigRational::new(num::BigInt::from(num), num::BigInt::from(den)),
            )
        }),
    )
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConventionsJson {
    pub nu: NuConvention,
    pub s: SConvention,
    pub tau_normalization: String,
    pub t_normalization: String,
}

impl ConventionsJson {
    pub fn new(nu: NuConvention, s: SConvention) -> Self {
        ConventionsJson {
            nu,
            s,
            tau_normalization: "least solution in lexicographic order, τ(1) = 1".into(),
            t_normalization: "categorical twists only, no central-charge prefactor".into(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BicharacterJson {
    pub modulus: u64,
    /// entries (a, b, exponent) over subgroup elements
    pub entries: Vec<(usize, usize, u64)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub is_mtc: Option<bool>,
    pub subgroup: Vec<usize>,
    pub reasons: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lifted_modulus: Option<u64>,
    /// τ_a value tables over all of G
    pub tau: Vec<(usize, Vec<u64>)>,
    /// ν(a) in character coordinates over the invariant factors of Ĝ
    pub nu: Vec<(usize, Vec<u64>)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bicharacter: Option<BicharacterJson>,
    pub conventions: ConventionsJson,
}

pub fn certificate_to_json(cert: &QuotientCertificate, s: SConvention) -> CertificateJson {
    let bichar = BicharacterJson {
        modulus: cert.lifted_modulus,
        entries: cert
            .subgroup
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| {
                cert.subgroup
                    .iter()
                    .enumerate()
                    .map(move |(j, &b)| (a, b, (i, j)))
            })
            .map(|(a, b, (i, j))| (a, b, cert.bicharacter[i][j]))
            .collect(),
    };
    CertificateJson {
        exists: true,
        is_mtc: Some(cert.is_modular),
        subgroup: cert.subgroup.clone(),
        reasons: vec![],
        lifted_modulus: Some(cert.lifted_modulus),
        tau: cert.tau.iter().map(|(&a, v)| (a, v.clone())).collect(),
        nu: cert.nu.iter().map(|(&a, v)| (a, v.clone())).collect(),
        bicharacter: Some(bichar),
        conventions: ConventionsJson::new(cert.convention, s),
    }
}

pub fn failure_to_json(
    reasons: &[FailureReason],
    subgroup: Vec<usize>,
    nu: NuConvention,
    s: SConvention,
) -> CertificateJson {
    CertificateJson {
        exists: false,
        is_mtc: None,
        subgroup,
        reasons: reasons
            .iter()
            .map(|r| match r {
                FailureReason::NotInZOmega { element } => {
                    format!("gamma_{element} is not a coboundary on G over C^x")
                }
                FailureReason::SplittingObstruction => {
                    "beta restricted to A does not split over the character group".into()
                }
            })
            .collect(),
        lifted_modulus: None,
        tau: vec![],
        nu: vec![],
        bicharacter: None,
        conventions: ConventionsJson::new(nu, s),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelJson {
    pub class_rep: usize,
    pub class_size: usize,
    pub degree: u64,
    pub char_values: Vec<CycloJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModularJson {
    pub rank: usize,
    pub conductor: u64,
    pub modular: bool,
    pub global_dim_sq: u64,
    pub labels: Vec<LabelJson>,
    #[serde(rename = "T")]
    pub t: Vec<CycloJson>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<CycloJson>>,
    pub s_unnormalized: Vec<Vec<CycloJson>>,
    /// sparse fusion tensor entries [i, j, k, N]
    pub fusion: Vec<(usize, usize, usize, u64)>,
    pub transparent: Vec<usize>,
    pub conventions: ConventionsJson,
}

pub fn modular_to_json(
    md: &ModularData,
    nu: NuConvention,
    s: SConvention,
) -> Result<ModularJson, IoError> {
    let mut conductor = 1;
    for row in &md.s_unnormalized {
        for v in row {
            conductor = crate::modn::lcm_u(conductor, v.conductor());
        }
    }
    for v in &md.t {
        conductor = crate::modn::lcm_u(conductor, v.conductor());
    }
    Ok(ModularJson {
        rank: md.rank(),
        conductor,
        modular: md.modular,
        global_dim_sq: md.global_dim_sq,
        labels: md
            .labels
            .labels
            .iter()
            .map(|l| {
                Ok(LabelJson {
                    class_rep: l.class_rep,
                    class_size: l.class_size,
                    degree: l.degree,
                    char_values: l
                        .char_values
                        .iter()
                        .map(cyclo_to_json)
                        .collect::<Result<_, _>>()?,
                })
            })
            .collect::<Result<Vec<_>, IoError>>()?,
        t: md.t.iter().map(cyclo_to_json).collect::<Result<_, _>>()?,
        s: md
            .s
            .iter()
            .map(|row| row.iter().map(cyclo_to_json).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?,
        s_unnormalized: md
            .s_unnormalized
            .iter()
            .map(|row| row.iter().map(cyclo_to_json).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?,
        fusion: md.fusion.clone().unwrap_or_default(),
        transparent: md.transparent.clone(),
        conventions: ConventionsJson::new(nu, s),
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct H3Json {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub group: Option<String>,
    pub modulus: u64,
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<CocycleJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoGeneratorsJson {
    pub h3_order: u64,
    pub sylow2_part: u64,
    pub count: u64,
    pub orders: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeJson {
    pub gram: Vec<Vec<i64>>,
    pub invariant_factors: Vec<u64>,
    pub c0_conductor: u64,
    pub c0_exponents: Vec<Vec<u64>>,
    /// section in lattice coordinates as (num, den) pairs per element
    pub section: Vec<Vec<(i64, i64)>>,
    pub cocycle: CocycleJson,
    pub certificate: CertificateJson,
    pub modular: ModularJson,
}

pub fn lattice_to_json(p: &LatticePipeline, s: SConvention) -> Result<LatticeJson, IoError> {
    Ok(LatticeJson {
        gram: p.data.lattice.gram.clone(),
        invariant_factors: p.data.invariant_factors.clone(),
        c0_conductor: p.c0.conductor,
        c0_exponents: p.c0.exps.clone(),
        section: p
            .data
            .section
            .iter()
            .map(|v| {
                v.iter()
                    .map(|q| {
                        Ok((
                            i64::try_from(q.numer().clone())
                                .map_err(|_| IoError::NumericOverflow)?,
                            i64::try_from(q.denom().clone())
                                .map_err(|_| IoError::NumericOverflow)?,
                        ))
                    })
                    .collect::<Result<_, IoError>>()
            })
            .collect::<Result<_, _>>()?,
        cocycle: cochain_to_json(&p.omega, None),
        certificate: certificate_to_json(&p.certificate, s),
        modular: modular_to_json(&p.modular, p.certificate.convention, s)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cyclic_cocycle;

    #[test]
    fn group_json_roundtrip() {
        let g = crate::catalog::by_name("q8").unwrap();
        let j = group_to_json(&g, Some("q8".into()));
        let text = serde_json::to_string_pretty(&j).unwrap();
        let parsed = parse_group(&text, 64).unwrap();
        assert_eq!(parsed.order(), 8);
        assert_eq!(parsed.table_rows(), g.table_rows());
        let j2 = group_to_json(&parsed, Some("q8".into()));
        assert_eq!(j, j2);
    }

    #[test]
    fn generator_form_group_parses() {
        let text = r#"{"degree": 4, "generators": [[1,2,3,0]]}"#;
        let g = parse_group(text, 64).unwrap();
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn cocycle_json_roundtrip() {
        let g = crate::group::FiniteGroup::cyclic(4);
        let omega = cyclic_cocycle(&g, 1);
        let j = cochain_to_json(&omega, Some("z4".into()));
        let text = serde_json::to_string(&j).unwrap();
        let parsed: CocycleJson = serde_json::from_str(&text).unwrap();
        let back = cochain_from_json(&parsed, &g).unwrap();
        assert!(back.eq_values(&omega));
        // normalized sparse entries only: no identity arguments
        assert!(j.entries.iter().all(|e| e[..3].iter().all(|&a| a != 0)));
    }

    #[test]
    fn cyclo_json_roundtrip() {
        let z = Cyclotomic::root_of_unity(8, 3)
            .add(&Cyclotomic::from_integer(2))
            .scale(&num::BigRational::new(
                num::BigInt::from(1),
                num::BigInt::from(3),
            ));
        let j = cyclo_to_json(&z).unwrap();
        let back = cyclo_from_json(&j);
        assert!(back.eq_value(&z));
    }

    #[test]
    fn deterministic_serialization() {
        let g = crate::group::FiniteGroup::cyclic(4);
        let omega = cyclic_cocycle(&g, 1);
        let a = serde_json::to_string(&cochain_to_json(&omega, None)).unwrap();
        let b = serde_json::to_string(&cochain_to_json(&omega, None)).unwrap();
        assert_eq!(a, b);
    }
}
