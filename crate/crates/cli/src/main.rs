//! normforge: exact set-norm computations, witness extraction, named
//! verification suites and discrepancy reports.
//!
//! Exit codes: 0 success, 1 violation or counterexample found, 2 usage
//! or input error, 3 budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use normforge::bridges;
use normforge::coloring::{kgon_analysis, norm3, Norm3Oracle, PolygonFamily};
use normforge::error::Error;
use normforge::exclusion::{norm1, ExclusionParams};
use normforge::hall::{codec, delta, dset, hall_norm, hall_norm4, hn};
use normforge::propcheck::{discrepancy_report, run_suite, suite_names, Report, SuiteSpec};
use normforge::sets::{emit_family, parse_family, SubsetMask};
use normforge::subset_norm::{norm2, ratio_lower_bound, ratio_upper_bound, refutation_check, SubsetNormParams};

#[derive(Parser)]
#[command(name = "normforge", version, about = "Exact norms on finite set systems")]
struct Cli {
    /// Output format for reports and scans.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for suite execution (results never depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Case budget; NORMFORGE_BUDGET supplies the default.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Counting norm of a family file.
    Norm0 {
        #[arg(long)]
        family: PathBuf,
    },
    /// Exclusion norm of a subset of the ground set.
    Norm1 {
        #[arg(long = "F")]
        f: u32,
        #[arg(long = "G")]
        g: u32,
        /// JSON array of elements, e.g. [0,1].
        #[arg(long)]
        set: String,
    },
    /// Subset norm of a family of H-subsets, with its minimal witness.
    Norm2 {
        #[arg(long)]
        n: u32,
        #[arg(long = "G")]
        g: u32,
        #[arg(long)]
        family: PathBuf,
    },
    /// Graph coloring norm of a polygon family.
    Norm3 {
        #[arg(long)]
        family: PathBuf,
        /// Attach the splitting partition.
        #[arg(long)]
        witness: bool,
        /// Re-evaluate through the recursive definition and compare.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Hall norm of a set of total functions.
    Norm4 {
        #[arg(long)]
        functions: PathBuf,
        /// Attach the disjoint-domain refinement.
        #[arg(long)]
        witness: bool,
    },
    /// Hall machinery on partial-function families.
    #[command(subcommand)]
    Hall(HallCommand),
    /// Cross-norm profile maps.
    #[command(subcommand)]
    Bridge(BridgeCommand),
    /// Run one named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Extra integer parameters as key=value pairs.
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, i64)>,
        /// Shorthand for the common size parameter.
        #[arg(long = "N")]
        max_n: Option<i64>,
        /// Case count for seeded suites.
        #[arg(long)]
        cases: Option<u64>,
    },
    /// Sweep a parameter grid into CSV.
    #[command(subcommand)]
    Scan(ScanCommand),
    /// Reproduce the extremal-family refutation for given parameters.
    RefuteBaju {
        #[arg(long)]
        n: u32,
        #[arg(long = "G")]
        g: u32,
        #[arg(long)]
        k: u32,
    },
    /// Exact splitting of the all-k-gon family versus the closed form.
    Kgon {
        #[arg(long = "N")]
        vertices: u32,
        #[arg(long)]
        k: u32,
    },
    /// Consolidated list of computed-vs-printed divergences.
    Report,
}

#[derive(Subcommand)]
enum HallCommand {
    /// Disjoint-domain measure of a partial-function family.
    Hn {
        #[arg(long)]
        pfns: PathBuf,
    },
    /// Maximum of hn over refinements, with its witness.
    #[command(name = "HN")]
    CapitalHn {
        #[arg(long)]
        pfns: PathBuf,
        #[arg(long)]
        witness: bool,
    },
    /// Minimal avoiding family of a set of total functions.
    Delta {
        #[arg(long)]
        functions: PathBuf,
    },
    /// Total functions extending no member of a family.
    #[command(name = "D")]
    D {
        #[arg(long)]
        pfns: PathBuf,
    },
}

#[derive(Subcommand)]
enum BridgeCommand {
    /// Hall norm of the profile preimage against the subset norm.
    Subset {
        #[arg(long)]
        n: u32,
        #[arg(long = "N")]
        points: u32,
        #[arg(long)]
        family: PathBuf,
    },
    /// Profile family of weight at least 2 and its bound bundle.
    Pplus {
        #[arg(long)]
        functions: PathBuf,
    },
    /// Scan for counterexamples to the profile-avoidance claim; the
    /// global --budget caps the number of scanned sets.
    PstarScan {
        #[arg(long = "N")]
        points: u32,
    },
}

#[derive(Subcommand)]
enum ScanCommand {
    /// All k-gon splitting numbers up to a vertex count.
    Kgon {
        #[arg(long = "max-N", default_value_t = 10)]
        max_vertices: u32,
    },
    /// Subset-norm ratio bounds over the admissible witness sizes.
    Norm2Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long = "G")]
        g: u32,
    },
    /// Every registered suite at default parameters, one row each.
    Suites,
}

fn parse_kv(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    let v: i64 = v.parse().map_err(|e| format!("bad value in {s:?}: {e}"))?;
    Ok((k.to_string(), v))
}

fn default_budget(cli: &Cli) -> u64 {
    cli.budget
        .or_else(|| {
            std::env::var("NORMFORGE_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1000)
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn mask_from_json(text: &str) -> Result<SubsetMask, Error> {
    let elements: Vec<u32> = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("set must be a JSON array of integers: {e}")))?;
    Ok(SubsetMask::from_elements(&elements))
}

fn report_out(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => format!("{}{}", Report::csv_header(), report.to_csv_row()),
    }
}

/// 0 = clean, 1 = violation or counterexample found.
fn run(cli: &Cli) -> Result<u8, Error> {
    let seed = cli.seed.unwrap_or(1);
    let budget = default_budget(cli);
    match &cli.command {
        Command::Norm0 { family } => {
            let fam = parse_family(&read(family)?)?;
            println!("{}", json!({"norm": fam.counting_norm().to_string()}));
            Ok(0)
        }
        Command::Norm1 { f, g, set } => {
            let params = ExclusionParams::new(*f, *g)?;
            let mask = mask_from_json(set)?;
            let value = norm1(&params, mask)?;
            println!("{}", json!({"norm": value.render()}));
            Ok(0)
        }
        Command::Norm2 { n, g, family } => {
            let params = SubsetNormParams::new(*n, *g)?;
            let fam = parse_family(&read(family)?)?;
            let result = norm2(&params, &fam)?;
            println!(
                "{}",
                json!({"norm": result.norm, "witness": result.witness.elements()})
            );
            Ok(0)
        }
        Command::Norm3 {
            family,
            witness,
            oracle_check,
        } => {
            let fam = PolygonFamily::new(parse_family(&read(family)?)?)?;
            let (value, split) = norm3(&fam)?;
            let mut payload = json!({"norm": value});
            if *witness {
                let parts: Vec<Vec<u32>> = split
                    .partition
                    .parts()
                    .iter()
                    .map(|p| p.elements())
                    .collect();
                payload["partition"] = json!(parts);
            }
            if *oracle_check {
                let mut oracle = Norm3Oracle::new(fam.universe())?;
                let recursive = oracle.norm(&fam)?;
                payload["oracle"] = json!(recursive);
                if recursive != value {
                    println!("{payload}");
                    return Ok(1);
                }
            }
            println!("{payload}");
            Ok(0)
        }
        Command::Norm4 { functions, witness } => {
            let set = codec::parse_fnset(&read(functions)?)?;
            let (value, w) = hall_norm4(&set)?;
            let mut payload = json!({"norm": value});
            if *witness {
                payload["k"] = json!(w.k);
                payload["refined"] =
                    serde_json::from_str(&codec::emit_fnfamily(&w.refined)).expect("valid JSON");
            }
            println!("{payload}");
            Ok(0)
        }
        Command::Hall(cmd) => {
            match cmd {
                HallCommand::Hn { pfns } => {
                    let family = codec::parse_fnfamily(&read(pfns)?)?;
                    println!("{}", json!({"hn": hn(&family)?}));
                }
                HallCommand::CapitalHn { pfns, witness } => {
                    let family = codec::parse_fnfamily(&read(pfns)?)?;
                    let (value, w) = hall_norm(&family)?;
                    let mut payload = json!({"HN": value});
                    if *witness {
                        payload["k"] = json!(w.k);
                        payload["refined"] = serde_json::from_str(&codec::emit_fnfamily(&w.refined))
                            .expect("valid JSON");
                    }
                    println!("{payload}");
                }
                HallCommand::Delta { functions } => {
                    let set = codec::parse_fnset(&read(functions)?)?;
                    print!("{}", codec::emit_fnfamily(&delta(&set)?));
                }
                HallCommand::D { pfns } => {
                    let family = codec::parse_fnfamily(&read(pfns)?)?;
                    print!("{}", codec::emit_fnset(&dset(&family)?));
                }
            }
            Ok(0)
        }
        Command::Bridge(cmd) => match cmd {
            BridgeCommand::Subset { n, points, family } => {
                let fam = parse_family(&read(family)?)?;
                let r = bridges::subset_bridge_check(*n, *points, &fam)?;
                println!(
                    "{}",
                    json!({
                        "subset_norm": r.subset_norm,
                        "hall_norm": r.hall_norm,
                        "holds": r.holds,
                    })
                );
                Ok(if r.holds { 0 } else { 1 })
            }
            BridgeCommand::Pplus { functions } => {
                let set = codec::parse_fnset(&read(functions)?)?;
                let family = bridges::pplus(&set)?;
                print!("{}", emit_family(family.family()));
                Ok(0)
            }
            BridgeCommand::PstarScan { points } => {
                let r = bridges::pstar_claim_scan(*points, budget, seed)?;
                let first = r.first.as_ref().map(|v| {
                    json!({
                        "profile": bridges::profile(&v.sigma).elements(),
                        "containing": v.containing_profile.elements(),
                    })
                });
                println!(
                    "{}",
                    json!({"cases": r.cases, "violations": r.violations, "first": first})
                );
                Ok(if r.violations > 0 { 1 } else { 0 })
            }
        },
        Command::Verify {
            suite,
            params,
            max_n,
            cases,
        } => {
            let mut spec = SuiteSpec::new(suite)
                .with_seed(seed)
                .with_budget(cases.unwrap_or(budget));
            for (k, v) in params {
                spec = spec.with_param(k, *v);
            }
            if let Some(n) = max_n {
                spec = spec.with_param("max_n", *n);
            }
            let report = run_suite(&spec)?;
            print!("{}", report_out(&report, cli.format));
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Scan(cmd) => {
            match cmd {
                ScanCommand::Kgon { max_vertices } => {
                    println!("N,k,exact,stated,matches");
                    for n in 2..=*max_vertices {
                        for k in 2..=n {
                            let r = kgon_analysis(n, k)?;
                            println!("{n},{k},{},{},{}", r.exact, r.stated, r.matches);
                        }
                    }
                }
                ScanCommand::Norm2Bounds { n, g } => {
                    let params = SubsetNormParams::new(*n, *g)?;
                    println!("k,lower,upper");
                    for k in 0..=params.h() {
                        println!(
                            "{k},{},{}",
                            ratio_lower_bound(&params, k)?.render(),
                            ratio_upper_bound(&params, k)?.render()
                        );
                    }
                }
                ScanCommand::Suites => {
                    print!("{}", Report::csv_header());
                    for name in suite_names() {
                        let spec = SuiteSpec::new(name).with_seed(seed).with_budget(budget);
                        let report = run_suite(&spec)?;
                        print!("{}", report.to_csv_row());
                    }
                }
            }
            Ok(0)
        }
        Command::RefuteBaju { n, g, k } => {
            let params = SubsetNormParams::new(*n, *g)?;
            let check = refutation_check(&params, *k)?;
            println!(
                "{}",
                json!({
                    "norm": check.norm_of_extremal,
                    "ratio": check.ratio.render(),
                    "miss_product": check.miss_product.render(),
                    "threshold": check.threshold.render(),
                    "refuted": check.refuted,
                })
            );
            Ok(if check.refuted { 1 } else { 0 })
        }
        Command::Kgon { vertices, k } => {
            let r = kgon_analysis(*vertices, *k)?;
            let parts: Vec<Vec<u32>> = r
                .witness
                .partition
                .parts()
                .iter()
                .map(|p| p.elements())
                .collect();
            println!(
                "{}",
                json!({
                    "exact": r.exact,
                    "stated": r.stated,
                    "matches": r.matches,
                    "partition": parts,
                })
            );
            Ok(if r.matches { 0 } else { 1 })
        }
        Command::Report => {
            let report = discrepancy_report()?;
            print!("{}", report_out(&report, cli.format));
            Ok(if report.discrepancies.is_empty() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Suite results are independent of the pool size.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Budget(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
