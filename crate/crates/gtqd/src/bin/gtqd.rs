//! Batch CLI over the gtqd library.
//!
//! Exit codes for `check`: 0 = certificate exists and the quotient is
//! modular; 2 = exists but not modular; 3 = no certificate; 1 = input error.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

use gtqd::cohomology::{cyclic_cocycle, h3, Cochain};
use gtqd::config::{Caps, Conventions, RunConfig};
use gtqd::double::TwistedDouble;
use gtqd::group::GroupRef;
use gtqd::io;
use gtqd::lattice::lattice_pipeline;
use gtqd::modular::{modular_data, restricted_modular_data, SConvention};
use gtqd::quotient::{NuConvention, QuotientCheck, QuotientContext};
use gtqd::survey;

#[derive(Parser)]
#[command(name = "gtqd", about = "exact twisted quantum double computations", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// write the JSON report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// seed for randomized robustness replays
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = gtqd::catalog::DEFAULT_GROUP_CAP)]
    cap_group: usize,
    #[arg(long, global = true, default_value_t = gtqd::cohomology::DEFAULT_H3_CAP)]
    cap_cohomology: usize,
    #[arg(long, global = true, default_value_t = gtqd::quotient::DEFAULT_COBOUNDARY_CAP)]
    cap_coboundary: usize,
    #[arg(long, global = true, default_value_t = gtqd::oracle::DEFAULT_ORACLE_CAP)]
    cap_oracle: usize,
    /// placement of the ν contribution in the bicharacter
    #[arg(long, global = true, value_enum, default_value_t = NuArg::Divide)]
    convention_nu: NuArg,
    /// braiding orientation of the S-matrix
    #[arg(long, global = true, value_enum, default_value_t = SArg::Standard)]
    convention_s: SArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum NuArg {
    Divide,
    Multiply,
}

#[derive(Clone, Copy, ValueEnum)]
enum SArg {
    Standard,
    Inverse,
}

#[derive(Subcommand)]
enum Command {
    /// Decide existence and modularity of the quotient double
    Check {
        /// group JSON file or catalog name
        #[arg(long)]
        group: String,
        /// cocycle JSON file, "trivial", or "cyclic:<q>"
        #[arg(long)]
        cocycle: String,
        /// comma-separated generators of the central subgroup A
        #[arg(long, default_value = "")]
        central: String,
    },
    /// Exact modular data of the double or of a quotient
    Modular {
        #[arg(long)]
        group: String,
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        central: Option<String>,
        /// also emit the sparse structure constants of the double
        #[arg(long)]
        dump_structure: bool,
    },
    /// Degree-3 cohomology with explicit generators
    H3 {
        #[arg(long)]
        group: String,
        /// defaults to |G|
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Discriminant-form pipeline from a Gram matrix
    Lattice {
        /// e.g. "[[2,1],[1,2]]"
        #[arg(long)]
        gram: String,
    },
    /// Cross-check suite over the unique-involution catalog groups
    Catalog {
        #[arg(long, default_value_t = 10)]
        rechoices: usize,
    },
    /// Count 2-generators in a cyclic H3 of order n with 2-part t
    TwoGenerators { n: u64, t: u64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        caps: Caps {
            group_order: cli.cap_group,
            cohomology: cli.cap_cohomology,
            coboundary: cli.cap_coboundary,
            oracle: cli.cap_oracle,
        },
        conventions: Conventions {
            nu: match cli.convention_nu {
                NuArg::Divide => NuConvention::Divide,
                NuArg::Multiply => NuConvention::Multiply,
            },
            s: match cli.convention_s {
                SArg::Standard => SConvention::Standard,
                SArg::Inverse => SConvention::Inverse,
            },
        },
        seed: cli.seed,
    };
    if let Err(e) = config.caps.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match run(&cli, &config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, report: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => std::fs::write(path, report).map_err(|e| e.to_string()),
        None => {
            println!("{report}");
            Ok(())
        }
    }
}

fn load_group(source: &str, cap: usize) -> Result<GroupRef, String> {
    let path = std::path::Path::new(source);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        return io::parse_group(&text, cap).map_err(|e| e.to_string());
    }
    gtqd::catalog::by_name(source)
        .ok_or_else(|| format!("'{source}' is neither a file nor a catalog group"))
}

fn load_cocycle(source: &str, group: &GroupRef) -> Result<Cochain, String> {
    if source == "trivial" {
        return Ok(Cochain::zero(group, 3, group.order().max(2) as u64));
    }
    if let Some(q) = source.strip_prefix("cyclic:") {
        let q: u64 = q.parse().map_err(|_| "cyclic:<q> expects an integer")?;
        return Ok(cyclic_cocycle(group, q));
    }
    let text = std::fs::read_to_string(source).map_err(|e| e.to_string())?;
    let parsed: io::CocycleJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    io::cochain_from_json(&parsed, group).map_err(|e| e.to_string())
}

fn parse_central(text: &str) -> Result<Vec<usize>, String> {
    if text.trim().is_empty() {
        return Ok(vec![]);
    }
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| e.to_string()))
        .collect()
}

fn run(cli: &Cli, config: &RunConfig) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Check {
            group,
            cocycle,
            central,
        } => {
            let g = load_group(group, config.caps.group_order)?;
            let omega = load_cocycle(cocycle, &g)?;
            let a = parse_central(central)?;
            let ctx = QuotientContext::new(omega, config.caps.coboundary)
                .map_err(|e| e.to_string())?;
            let check = ctx
                .check_quotient_exists(&a, config.conventions.nu, None)
                .map_err(|e| e.to_string())?;
            match check {
                QuotientCheck::Exists(cert) => {
                    let json = io::certificate_to_json(&cert, config.conventions.s);
                    emit(cli, &serde_json::to_string_pretty(&json).unwrap())?;
                    Ok(ExitCode::from(if cert.is_modular { 0 } else { 2 }))
                }
                QuotientCheck::Fails(reasons) => {
                    let subgroup = ctx.group().subgroup_closure(&a);
                    let json = io::failure_to_json(
                        &reasons,
                        subgroup,
                        config.conventions.nu,
                        config.conventions.s,
                    );
                    emit(cli, &serde_json::to_string_pretty(&json).unwrap())?;
                    Ok(ExitCode::from(3))
                }
            }
        }
        Command::Modular {
            group,
            cocycle,
            central,
            dump_structure,
        } => {
            let g = load_group(group, config.caps.group_order)?;
            let omega = load_cocycle(cocycle, &g)?;
            let double = TwistedDouble::new(omega.clone()).map_err(|e| e.to_string())?;
            let md = match central {
                None => modular_data(&double, config.conventions.s).map_err(|e| e.to_string())?,
                Some(text) => {
                    let a = parse_central(text)?;
                    let ctx = QuotientContext::new(omega, config.caps.coboundary)
                        .map_err(|e| e.to_string())?;
                    let cert = match ctx
                        .check_quotient_exists(&a, config.conventions.nu, None)
                        .map_err(|e| e.to_string())?
                    {
                        QuotientCheck::Exists(c) => c,
                        QuotientCheck::Fails(r) => {
                            return Err(format!("no quotient certificate: {r:?}"));
                        }
                    };
                    restricted_modular_data(&double, &ctx, &cert, config.conventions.s)
                        .map_err(|e| e.to_string())?
                }
            };
            let mut json = serde_json::to_value(
                io::modular_to_json(&md, config.conventions.nu, config.conventions.s)
                    .map_err(|e| e.to_string())?,
            )
            .unwrap();
            if *dump_structure {
                let sc: Vec<serde_json::Value> = double
                    .structure_constants()
                    .into_iter()
                    .map(|((g1, x1), (g2, x2), e, (g3, x3))| {
                        serde_json::json!([[g1, x1], [g2, x2], e, [g3, x3]])
                    })
                    .collect();
                json.as_object_mut()
                    .unwrap()
                    .insert("structure_constants".into(), serde_json::Value::Array(sc));
            }
            emit(cli, &serde_json::to_string_pretty(&json).unwrap())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::H3 { group, modulus } => {
            let g = load_group(group, config.caps.group_order)?;
            let m = modulus.unwrap_or(g.order() as u64);
            let result = h3(&g, m, config.caps.cohomology).map_err(|e| e.to_string())?;
            let json = io::H3Json {
                group: Some(group.clone()),
                modulus: m,
                invariant_factors: result.invariant_factors.clone(),
                generators: result
                    .generators
                    .iter()
                    .map(|c| io::cochain_to_json(c, Some(group.clone())))
                    .collect(),
            };
            emit(cli, &serde_json::to_string_pretty(&json).unwrap())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice { gram } => {
            let gram: Vec<Vec<i64>> = serde_json::from_str(gram).map_err(|e| e.to_string())?;
            let pipeline = lattice_pipeline(gram).map_err(|e| e.to_string())?;
            let json =
                io::lattice_to_json(&pipeline, config.conventions.s).map_err(|e| e.to_string())?;
            emit(cli, &serde_json::to_string_pretty(&json).unwrap())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { rechoices } => {
            let report = survey::unique_involution_cross_check(
                &survey::UNIQUE_INVOLUTION_GROUPS,
                config,
                *rechoices,
            );
            emit(cli, &serde_json::to_string_pretty(&report).unwrap())?;
            Ok(ExitCode::from(if report.all_pass { 0 } else { 2 }))
        }
        Command::TwoGenerators { n, t } => {
            let (count, orders) = gtqd::quotient::count_two_generators(*n, *t);
            let json = io::TwoGeneratorsJson {
                h3_order: *n,
                sylow2_part: *t,
                count,
                orders,
            };
            emit(cli, &serde_json::to_string_pretty(&json).unwrap())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
