//! Command-line front end. JSON documents in, JSON reports out; human
//! summaries go to stderr so stdout stays machine-readable.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use specnorm::error::{Error, Result};
use specnorm::graph::{export_dot, gamma_space, EdgeMode};
use specnorm::jsonio::{load_morphism, load_space, space_json, SpaceDoc};
use specnorm::morphism::{LatitudinalClass, MorphismProfile, OwnedMorphism};
use specnorm::poly::{PolyModP, PolyZ};
use specnorm::ratio::Ratio;
use specnorm::search::{search_counterexample, SearchClaim, SEARCH_DEFAULT_TOTAL_POINTS};
use specnorm::space::{SpectralSpace, UipReport};
use specnorm::spectra::{
    chain_space, diamond_space, discrete_space, norm_examples, spec_fp_t, spec_z,
    spec_z_t_fragment,
};
use specnorm::statements::{
    check_space_statement, verify_theorems, SpaceFacts, StatementCheck, StatementId, Status,
};
use specnorm::suite::{render_summary, run_property_suite, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "specnorm",
    version,
    about = "Finite spectral spaces: specialization graphs, chain lengths, exact morphism norms"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a space document and report its basic structure.
    Build {
        /// Path to a space JSON document.
        #[arg(long)]
        space: PathBuf,
        /// Emit a JSON report instead of the human summary.
        #[arg(long)]
        json: bool,
    },
    /// Export the specialization graph of a space.
    Gamma {
        /// Path to a space JSON document.
        #[arg(long)]
        space: PathBuf,
        /// Edge set to export: "cover" (transitive reduction) or "all".
        #[arg(long, default_value = "cover")]
        edges: String,
        /// Write DOT text to this file instead of stdout.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Emit the graph as JSON instead of DOT.
        #[arg(long)]
        json: bool,
    },
    /// Compute the exact norm of a morphism.
    Norm {
        /// Path to a morphism JSON document.
        #[arg(long)]
        morphism: PathBuf,
        /// Emit a JSON report instead of the human summary.
        #[arg(long)]
        json: bool,
    },
    /// Classify a morphism: norm, longitudinal and latitudinal type,
    /// Sp behaviour, injectivity, chain lifting.
    Classify {
        /// Path to a morphism JSON document.
        #[arg(long)]
        morphism: PathBuf,
        /// Emit the full profile as JSON instead of the human summary.
        #[arg(long)]
        json: bool,
    },
    /// Run the statement catalog against one space or one morphism.
    /// Exits 1 when any non-vacuous check fails.
    Check {
        /// Path to a space JSON document (space-level checks).
        #[arg(long)]
        space: Option<PathBuf>,
        /// Path to a morphism JSON document (morphism-level checks).
        #[arg(long)]
        morphism: Option<PathBuf>,
        /// Emit a JSON report instead of the human summary.
        #[arg(long)]
        json: bool,
    },
    /// Run the property suite: exhaustive sweep plus randomized trials.
    /// JSON report on stdout, human summary on stderr; exits 1 when any
    /// non-vacuous statement fails.
    Suite {
        /// Seed for the randomized phase.
        #[arg(long)]
        seed: Option<u64>,
        /// Exhaustive cap on points per side (at most 5).
        #[arg(long)]
        max_points: Option<usize>,
        /// Number of randomized trials.
        #[arg(long)]
        random_trials: Option<u64>,
        /// Point cap for random posets (at most 12).
        #[arg(long)]
        random_size: Option<usize>,
        /// Comma-separated statement tokens to check (default: all).
        #[arg(long)]
        statements: Option<String>,
    },
    /// Search for the smallest morphism exhibiting a non-implication claim.
    Search {
        /// Claim token, e.g. "norm-one-not-injective".
        #[arg(long)]
        claim: String,
        /// Budget on total points (source plus target).
        #[arg(long)]
        max_points: Option<usize>,
    },
    /// Emit a canonical space document on stdout.
    Make {
        #[command(subcommand)]
        what: MakeCmd,
    },
}

#[derive(Subcommand)]
enum MakeCmd {
    /// Chain with n points.
    Chain {
        #[arg(long)]
        n: usize,
    },
    /// Discrete space with n points.
    Discrete {
        #[arg(long)]
        n: usize,
    },
    /// Four-point diamond: generic point, two middle points, closed point.
    Diamond,
    /// Star of prime ideals of the integers: (0) below each listed prime.
    SpecZ {
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Fragment of the affine line over a prime field.
    SpecFpT {
        /// Field characteristic.
        #[arg(long)]
        p: u64,
        /// Comma-separated monic irreducible polynomials, e.g. "t,t+1".
        #[arg(long, value_delimiter = ',')]
        polys: Vec<String>,
    },
    /// Fragment of the arithmetic plane over the listed primes and
    /// integer polynomials.
    #[command(name = "spec-z-t")]
    SpecZT {
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        /// Comma-separated integer polynomials, e.g. "t,t^2+1".
        #[arg(long, value_delimiter = ',')]
        polys: Vec<String>,
    },
    /// The three bundled example morphisms with documented and computed
    /// norms, as a JSON array.
    Examples,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Build { space, json } => cmd_build(&space, json),
        Cmd::Gamma {
            space,
            edges,
            dot,
            json,
        } => cmd_gamma(&space, &edges, dot.as_deref(), json),
        Cmd::Norm { morphism, json } => cmd_norm(&morphism, json),
        Cmd::Classify { morphism, json } => cmd_classify(&morphism, json),
        Cmd::Check {
            space,
            morphism,
            json,
        } => cmd_check(space.as_deref(), morphism.as_deref(), json),
        Cmd::Suite {
            seed,
            max_points,
            random_trials,
            random_size,
            statements,
        } => cmd_suite(seed, max_points, random_trials, random_size, statements.as_deref()),
        Cmd::Search { claim, max_points } => cmd_search(&claim, max_points),
        Cmd::Make { what } => cmd_make(what),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn status_token(status: Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Vacuous => "vacuous",
    }
}

#[derive(Serialize)]
struct BuildReport {
    name: String,
    points: Vec<String>,
    dimension: u32,
    irreducible: bool,
    catenaire: bool,
    uip: UipReport,
}

fn build_report(space: &SpectralSpace) -> Result<BuildReport> {
    let facts = SpaceFacts::new(space);
    let uip = space.check_uip()?;
    Ok(BuildReport {
        name: space.name().to_owned(),
        points: space.point_names().to_vec(),
        dimension: facts.lengths.dim(),
        irreducible: facts.irreducible,
        catenaire: facts.catenaire,
        uip,
    })
}

fn cmd_build(path: &std::path::Path, json: bool) -> Result<ExitCode> {
    let space = load_space(path)?;
    let report = build_report(&space)?;
    if json {
        print_json(&report);
    } else {
        println!(
            "space {}: {} points, dimension {}",
            report.name,
            report.points.len(),
            report.dimension
        );
        println!("  irreducible: {}", yn(report.irreducible));
        println!("  catenaire: {}", yn(report.catenaire));
        println!(
            "  unique generic points: {} ({} closed subsets scanned)",
            yn(report.uip.holds),
            report.uip.closed_subsets
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gamma(
    path: &std::path::Path,
    edges: &str,
    dot: Option<&std::path::Path>,
    json: bool,
) -> Result<ExitCode> {
    let space = load_space(path)?;
    let mode: EdgeMode = edges.parse()?;
    let graph = gamma_space(&space);
    if json {
        #[derive(Serialize)]
        struct GraphReport {
            name: String,
            mode: &'static str,
            vertices: Vec<String>,
            edges: Vec<(String, String)>,
        }
        let pairs = match mode {
            EdgeMode::Cover => graph.reduction_edges(),
            EdgeMode::All => graph.edges.clone(),
        };
        print_json(&GraphReport {
            name: graph.name.clone(),
            mode: match mode {
                EdgeMode::Cover => "cover",
                EdgeMode::All => "all",
            },
            vertices: graph.vertices.clone(),
            edges: pairs
                .into_iter()
                .map(|(a, b)| (graph.vertices[a].clone(), graph.vertices[b].clone()))
                .collect(),
        });
        return Ok(ExitCode::SUCCESS);
    }
    let text = export_dot(&graph, mode);
    match dot {
        Some(out) => std::fs::write(out, text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_norm(path: &std::path::Path, json: bool) -> Result<ExitCode> {
    let owned = load_morphism(path)?;
    let f = owned.as_morphism();
    let result = f.norm();
    let witness = result.witness.map(|(a, b)| {
        (
            f.source().point_name(a).to_owned(),
            f.target().point_name(b).to_owned(),
        )
    });
    if json {
        #[derive(Serialize)]
        struct NormReport {
            source: String,
            target: String,
            norm: Ratio,
            witness: Option<(String, String)>,
        }
        print_json(&NormReport {
            source: f.source().name().to_owned(),
            target: f.target().name().to_owned(),
            norm: result.value,
            witness,
        });
    } else {
        match witness {
            Some((a, b)) => println!("norm = {} (witness {} -> {})", result.value, a, b),
            None => println!("norm = {} (zero-dimensional source)", result.value),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(path: &std::path::Path, json: bool) -> Result<ExitCode> {
    let owned = load_morphism(path)?;
    let f = owned.as_morphism();
    let profile = MorphismProfile::compute(&f);
    if json {
        print_json(&profile);
        return Ok(ExitCode::SUCCESS);
    }
    println!("morphism {} -> {}", profile.source, profile.target);
    match &profile.norm_witness {
        Some((a, b)) => println!("  norm: {} (witness {} -> {})", profile.norm, a, b),
        None => println!("  norm: {} (zero-dimensional source)", profile.norm),
    }
    let mut axes = Vec::new();
    if profile.longitudinal.null {
        axes.push("null");
    }
    if profile.longitudinal.asymptotic {
        axes.push("asymptotic");
    }
    if profile.longitudinal.length_preserving {
        axes.push("length-preserving");
    }
    if axes.is_empty() {
        axes.push("none");
    }
    println!("  longitudinal: {}", axes.join(", "));
    println!(
        "  latitudinal: {}",
        match profile.latitudinal {
            LatitudinalClass::LevelSeparated => "level-separated",
            LatitudinalClass::LevelReduced => "level-reduced",
            LatitudinalClass::LevelMixed => "level-mixed",
            LatitudinalClass::Vacuous => "vacuous",
        }
    );
    println!("  sp-type: {}", yn(profile.sp_type));
    for d in &profile.sp_diagnosis {
        if !d.sp_proper || !d.sp_connected {
            println!(
                "    at {}: sp-proper {}, sp-connected {}",
                d.point,
                yn(d.sp_proper),
                yn(d.sp_connected)
            );
        }
    }
    println!("  injective: {}", yn(profile.injective));
    println!("  chain lifting: {}", yn(profile.chain_lifting));
    Ok(ExitCode::SUCCESS)
}

fn print_checks(checks: &[StatementCheck]) {
    for check in checks {
        let label = check.statement.token();
        match &check.witness {
            Some(w) => println!("  {:<6} {:<8} {}", label, status_token(check.status), w),
            None => println!("  {:<6} {}", label, status_token(check.status)),
        }
    }
}

fn cmd_check(
    space: Option<&std::path::Path>,
    morphism: Option<&std::path::Path>,
    json: bool,
) -> Result<ExitCode> {
    match (space, morphism) {
        (Some(path), None) => {
            let space = load_space(path)?;
            let facts = SpaceFacts::new(&space);
            let uip = space.check_uip()?;
            let check = check_space_statement(&space, &facts);
            let failed = !uip.holds || check.status == Status::Fail;
            if json {
                #[derive(Serialize)]
                struct SpaceCheckReport {
                    name: String,
                    dimension: u32,
                    irreducible: bool,
                    catenaire: bool,
                    uip: UipReport,
                    checks: Vec<StatementCheck>,
                }
                print_json(&SpaceCheckReport {
                    name: space.name().to_owned(),
                    dimension: facts.lengths.dim(),
                    irreducible: facts.irreducible,
                    catenaire: facts.catenaire,
                    uip,
                    checks: vec![check],
                });
            } else {
                println!(
                    "space {}: {} points, dimension {}",
                    space.name(),
                    space.len(),
                    facts.lengths.dim()
                );
                match uip.violations.first() {
                    None => println!("  unique generic points: yes"),
                    Some(v) => println!("  unique generic points: no ({v})"),
                }
                print_checks(std::slice::from_ref(&check));
            }
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        (None, Some(path)) => {
            let owned = load_morphism(path)?;
            let f = owned.as_morphism();
            let report = verify_theorems(&f);
            let failed = report.checks.iter().any(|c| c.status == Status::Fail);
            if json {
                print_json(&report);
            } else {
                println!("morphism {} -> {}", report.source, report.target);
                print_checks(&report.checks);
            }
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        _ => Err(Error::InvalidConfig(
            "pass exactly one of --space or --morphism".into(),
        )),
    }
}

fn cmd_suite(
    seed: Option<u64>,
    max_points: Option<usize>,
    random_trials: Option<u64>,
    random_size: Option<usize>,
    statements: Option<&str>,
) -> Result<ExitCode> {
    let mut cfg = SuiteConfig::default();
    if let Some(v) = seed {
        cfg.seed = v;
    }
    if let Some(v) = max_points {
        cfg.max_points = v;
    }
    if let Some(v) = random_trials {
        cfg.random_trials = v;
    }
    if let Some(v) = random_size {
        cfg.random_size = v;
    }
    if let Some(list) = statements {
        cfg.statements = list
            .split(',')
            .map(|token| token.trim().parse::<StatementId>())
            .collect::<Result<_>>()?;
    }
    let report = run_property_suite(&cfg)?;
    print_json(&report);
    eprint!("{}", render_summary(&report));
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_search(claim: &str, max_points: Option<usize>) -> Result<ExitCode> {
    let claim: SearchClaim = claim.parse()?;
    let budget = max_points.unwrap_or(SEARCH_DEFAULT_TOTAL_POINTS);
    let witness = search_counterexample(claim, budget)?;
    print_json(&witness);
    Ok(ExitCode::SUCCESS)
}

fn parse_poly(text: &str) -> Result<PolyZ> {
    PolyZ::parse(text)
}

fn parse_polys_mod(p: u64, polys: &[String]) -> Result<Vec<PolyModP>> {
    polys
        .iter()
        .map(|s| parse_poly(s)?.reduce_mod(p))
        .collect()
}

fn cmd_make(what: MakeCmd) -> Result<ExitCode> {
    let space = match what {
        MakeCmd::Chain { n } => chain_space(n)?,
        MakeCmd::Discrete { n } => discrete_space(n)?,
        MakeCmd::Diamond => diamond_space(),
        MakeCmd::SpecZ { primes } => spec_z(&primes)?,
        MakeCmd::SpecFpT { p, polys } => spec_fp_t(p, &parse_polys_mod(p, &polys)?)?,
        MakeCmd::SpecZT { primes, polys } => {
            let parsed = polys
                .iter()
                .map(|s| parse_poly(s))
                .collect::<Result<Vec<_>>>()?;
            spec_z_t_fragment(&primes, &parsed)?
        }
        MakeCmd::Examples => {
            #[derive(Serialize)]
            struct ExampleReport {
                label: &'static str,
                source: SpaceDoc,
                target: SpaceDoc,
                map: Vec<(String, String)>,
                documented_norm: Ratio,
                computed_norm: Ratio,
            }
            let reports: Vec<ExampleReport> = norm_examples()
                .iter()
                .map(|ex| {
                    let f = ex.morphism.as_morphism();
                    ExampleReport {
                        label: ex.label,
                        source: SpaceDoc::from_space(f.source()),
                        target: SpaceDoc::from_space(f.target()),
                        map: morphism_assignments(&ex.morphism),
                        documented_norm: ex.documented_norm,
                        computed_norm: f.norm().value,
                    }
                })
                .collect();
            print_json(&reports);
            return Ok(ExitCode::SUCCESS);
        }
    };
    print!("{}", space_json(&space));
    Ok(ExitCode::SUCCESS)
}

fn morphism_assignments(owned: &OwnedMorphism) -> Vec<(String, String)> {
    let f = owned.as_morphism();
    (0..f.source().len())
        .map(|x| {
            (
                f.source().point_name(x).to_owned(),
                f.target().point_name(f.apply(x)).to_owned(),
            )
        })
        .collect()
}
