//! Command-line interface: build cut complexes of grid graphs, compute Betti
//! numbers, certify shelling orders, run vertex-sequence matchings, and sweep
//! the verification registry.
//!
//! Exit codes: 0 success, 1 a computation or verification failed, 2 bad
//! arguments or malformed input, 3 a sweep exceeded its capacity budget.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use gridtop::complex::{SimplicialComplex, DEFAULT_FACE_CAP};
use gridtop::cutgen::{cut_complex, total_cut_complex};
use gridtop::graph::parse_family_spec;
use gridtop::homology::{betti_suite_with_cap, BettiProfile, WedgeProfile};
use gridtop::morse::{
    analyze_matching_with_cap, hanging_vertex_sequence, sequence_matching_with_cap, MorseVerdict,
};
use gridtop::shelling::{check_shelling_order, prefix_purity_check, shelling_for_cut_2xn};
use gridtop::verify::{self, Claim, VerifyOptions};
use gridtop::Error;

#[derive(Parser)]
#[command(
    name = "gridtop",
    version,
    about = "Topology of total cut and cut complexes of grid graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Facets are complements of independent k-sets.
    Total,
    /// Facets are complements of k-sets inducing a disconnected subgraph.
    Cut,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportKind {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a cut complex of a graph family and emit its facet list.
    Build {
        /// Family spec, e.g. g2xn:4, g3xn':3, h1:5, grid:3x4.
        #[arg(long)]
        family: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        k: usize,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduced Betti numbers, Euler characteristic, and wedge profile.
    Betti {
        /// Facet-list file to analyze (alternative to --family).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Family spec, e.g. g2xn:4 (requires --k).
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = Kind::Total)]
        kind: Kind,
        #[arg(long)]
        k: Option<usize>,
        /// Field characteristic to report (the suite always includes 2 and 3).
        #[arg(long, default_value_t = 2)]
        field: u32,
        /// Emit the JSON report (the default; kept as an explicit flag).
        #[arg(long)]
        json: bool,
        /// Emit a human-readable summary instead of JSON.
        #[arg(long, conflicts_with = "json")]
        text: bool,
        /// Largest universe the face enumeration will accept.
        #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
        max_universe: usize,
    },
    /// Shelling-order tools.
    Shell {
        #[command(subcommand)]
        cmd: ShellCmd,
    },
    /// Run the hanging-vertex matching sequence on a family's total k-cut complex.
    Morse {
        /// Family spec, e.g. g3xn1:4.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ReportKind::Text)]
        report: ReportKind,
        #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
        max_universe: usize,
    },
    /// Run a claim sweep (or all of them) and report per-case results.
    Verify {
        /// Claim id, or "all".
        claim: String,
        /// Override the claim's default sweep bound.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Also write the report as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Largest vertex set a swept graph may have.
        #[arg(long, default_value_t = verify::DEFAULT_MAX_UNIVERSE)]
        max_universe: usize,
        /// Seed for the randomized oracle suites.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum ShellCmd {
    /// Certify a facet order against a complex (both from files).
    Check {
        /// Facet-list file for the complex.
        #[arg(long)]
        input: PathBuf,
        /// Candidate order: one facet per line, same label syntax.
        #[arg(long)]
        order: PathBuf,
    },
    /// Construct and certify a shelling order for the k-cut complex of a 2×n grid.
    #[command(name = "build-2xn")]
    Build2xn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Write the order to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(err) if err.is_capacity() => 3,
                Some(Error::Io(_)) => 1,
                Some(_) => 2,
                None => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Cmd) -> anyhow::Result<u8> {
    match cmd {
        Cmd::Build {
            family,
            kind,
            k,
            out,
        } => {
            let g = parse_family_spec(&family)?;
            let kx = match kind {
                Kind::Total => total_cut_complex(&g, k)?,
                Kind::Cut => cut_complex(&g, k)?,
            };
            let text = kx.to_text();
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    println!(
                        "wrote {} facets on {} vertices to {}",
                        kx.facet_count(),
                        kx.universe_size(),
                        path.display()
                    );
                }
                None => print!("{text}"),
            }
            Ok(0)
        }
        Cmd::Betti {
            input,
            family,
            kind,
            k,
            field,
            json: _,
            text,
            max_universe,
        } => {
            let kx = load_complex(input, family, kind, k)?;
            let mut primes = vec![2u32, 3];
            if !primes.contains(&field) {
                primes.push(field);
            }
            let suite = betti_suite_with_cap(&kx, &primes, max_universe)?;
            let profile = suite
                .profile(field)
                .expect("requested prime is in the suite");
            if !text {
                println!("{}", betti_json(field, profile, &suite)?);
            } else {
                for p in &suite.profiles {
                    println!("{}", profile_line(p));
                }
                println!("euler (reduced): {}", suite.euler);
                println!("wedge: {}", wedge_text(suite.wedge()));
                println!(
                    "self-checks: {}",
                    if suite.checks.all_pass() {
                        "pass"
                    } else {
                        "FAIL"
                    }
                );
            }
            Ok(if suite.checks.all_pass() { 0 } else { 1 })
        }
        Cmd::Shell { cmd } => run_shell(cmd),
        Cmd::Morse {
            family,
            k,
            report,
            max_universe,
        } => {
            let g = parse_family_spec(&family)?;
            let sequence = hanging_vertex_sequence(&g)?;
            let kx = total_cut_complex(&g, k)?;
            let trace = sequence_matching_with_cap(&kx, &sequence, max_universe)?;
            let analysis = analyze_matching_with_cap(&kx, &trace.matching, &[2, 3], max_universe)?;
            let labels: Vec<&str> = sequence.iter().map(|&v| g.label(v)).collect();
            let criticals: Vec<Vec<String>> = analysis
                .critical
                .iter()
                .map(|&f| kx.labels_of_mask(f))
                .collect();
            match report {
                ReportKind::Json => {
                    let doc = serde_json::json!({
                        "family": family,
                        "k": k,
                        "sequence": labels,
                        "pair_count": analysis.pair_count,
                        "criticals": criticals,
                        "criticals_by_dim": analysis.criticals_by_dim,
                        "acyclic": analysis.acyclic,
                        "empty_face_matched": analysis.empty_face_matched,
                        "verdict": verdict_text(analysis.verdict),
                        "morse_euler_ok": analysis.morse_euler_ok,
                        "weak_morse_ok": analysis.weak_morse_ok,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                ReportKind::Text => {
                    println!("sequence: {}", labels.join(" "));
                    println!("pairs: {}", analysis.pair_count);
                    println!(
                        "critical cells by dimension: {:?}",
                        analysis.criticals_by_dim
                    );
                    for c in &criticals {
                        println!(
                            "  critical: {}",
                            if c.is_empty() {
                                "-".into()
                            } else {
                                c.join(" ")
                            }
                        );
                    }
                    println!("acyclic: {}", analysis.acyclic);
                    println!("verdict: {}", verdict_text(analysis.verdict));
                    println!(
                        "checks: morse-euler {}, weak-morse {}",
                        if analysis.morse_euler_ok {
                            "ok"
                        } else {
                            "FAIL"
                        },
                        if analysis.weak_morse_ok { "ok" } else { "FAIL" }
                    );
                }
            }
            Ok(if analysis.all_checks_pass() { 0 } else { 1 })
        }
        Cmd::Verify {
            claim,
            n_max,
            json,
            csv,
            max_universe,
            seed,
        } => {
            let mut opts = VerifyOptions {
                n_max,
                max_universe,
                ..VerifyOptions::default()
            };
            if let Some(seed) = seed {
                opts.seed = seed;
            }
            let cases = if claim == "all" {
                verify::run_all(&opts)?
            } else {
                let c = Claim::from_id(&claim).ok_or_else(|| {
                    let ids: Vec<&str> = Claim::ALL.iter().map(|c| c.id()).collect();
                    Error::domain(format!(
                        "unknown claim '{claim}'; valid choices: all, {}",
                        ids.join(", ")
                    ))
                })?;
                verify::run_claim(c, &opts)?
            };
            if json {
                println!("{}", verify::to_json(&cases));
            } else {
                print!("{}", verify::render_table(&cases));
            }
            if let Some(path) = csv {
                std::fs::write(&path, verify::to_csv(&cases))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(if verify::all_pass(&cases) { 0 } else { 1 })
        }
    }
}

fn run_shell(cmd: ShellCmd) -> anyhow::Result<u8> {
    match cmd {
        ShellCmd::Check { input, order } => {
            let text = std::fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let kx = SimplicialComplex::parse_text(&text)?;
            let order_text = std::fs::read_to_string(&order)
                .with_context(|| format!("reading {}", order.display()))?;
            let facets = parse_order(&kx, &order_text)?;
            let check = check_shelling_order(&kx, &facets)?;
            let oracle = prefix_purity_check(&kx, &facets)?;
            println!("facets: {}", kx.facet_count());
            match (check.ok, check.first_failure) {
                (true, _) => println!("certified: true (prefix-purity oracle: {oracle})"),
                (false, Some(idx)) => {
                    println!("certified: false (first failure at step {idx}; oracle: {oracle})")
                }
                (false, None) => println!("certified: false (impure complex; oracle: {oracle})"),
            }
            Ok(if check.ok && oracle { 0 } else { 1 })
        }
        ShellCmd::Build2xn { n, k, out } => {
            let (kx, order) = shelling_for_cut_2xn(n, k)?;
            let mut text = String::new();
            for &f in &order {
                text.push_str(&kx.labels_of_mask(f).join(" "));
                text.push('\n');
            }
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    println!(
                        "certified shelling order with {} facets written to {}",
                        order.len(),
                        path.display()
                    );
                }
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn load_complex(
    input: Option<PathBuf>,
    family: Option<String>,
    kind: Kind,
    k: Option<usize>,
) -> anyhow::Result<SimplicialComplex> {
    match (input, family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            Ok(SimplicialComplex::parse_text(&text)?)
        }
        (None, Some(spec)) => {
            let k = k.ok_or_else(|| Error::domain("--family requires --k"))?;
            let g = parse_family_spec(&spec)?;
            Ok(match kind {
                Kind::Total => total_cut_complex(&g, k)?,
                Kind::Cut => cut_complex(&g, k)?,
            })
        }
        (Some(_), Some(_)) => {
            Err(Error::domain("give either --input or --family, not both").into())
        }
        (None, None) => Err(Error::domain("one of --input or --family is required").into()),
    }
}

/// Parse an order file: one facet per line, whitespace-separated labels,
/// `-` for the empty face; `#`-lines and blank lines are ignored.
fn parse_order(kx: &SimplicialComplex, text: &str) -> anyhow::Result<Vec<u64>> {
    let mut facets = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "-" {
            facets.push(0);
            continue;
        }
        let names: Vec<&str> = line.split_whitespace().collect();
        facets.push(kx.mask_from_labels(&names)?);
    }
    Ok(facets)
}

fn profile_line(p: &BettiProfile) -> String {
    if p.void {
        return format!("F_{}: void complex (no homology defined)", p.prime);
    }
    let nz = p.nonzero();
    if nz.is_empty() {
        return format!("F_{}: all reduced Betti numbers vanish", p.prime);
    }
    let parts: Vec<String> = nz.iter().map(|(d, b)| format!("b_{d} = {b}")).collect();
    format!("F_{}: {}", p.prime, parts.join(", "))
}

fn wedge_text(w: Option<WedgeProfile>) -> String {
    match w {
        None => "not a wedge profile".to_string(),
        Some(WedgeProfile::Contractible) => "contractible".to_string(),
        Some(WedgeProfile::Spheres { count, dim }) => {
            format!("{count} spheres of dimension {dim}")
        }
    }
}

fn verdict_text(v: MorseVerdict) -> String {
    match v {
        MorseVerdict::Contractible => "contractible".to_string(),
        MorseVerdict::Wedge { count, dim } => format!("wedge of {count} spheres of dim {dim}"),
        MorseVerdict::Mixed => "mixed critical dimensions".to_string(),
    }
}

fn betti_json(
    field: u32,
    profile: &BettiProfile,
    suite: &gridtop::homology::BettiSuite,
) -> anyhow::Result<String> {
    let mut betti = serde_json::Map::new();
    for (i, &b) in profile.values.iter().enumerate() {
        betti.insert((i as i64 - 1).to_string(), serde_json::json!(b));
    }
    let wedge = match profile.wedge() {
        None => serde_json::Value::Null,
        Some(WedgeProfile::Contractible) => serde_json::json!("contractible"),
        Some(WedgeProfile::Spheres { count, dim }) => {
            serde_json::json!({"count": count, "dim": dim})
        }
    };
    let doc = serde_json::json!({
        "field": field,
        "void": profile.void,
        "betti": betti,
        "euler": suite.euler,
        "wedge": wedge,
        "checks": {
            "boundary_squares_to_zero": suite.checks.boundary_squares_to_zero,
            "profiles_agree": suite.checks.profiles_agree,
            "euler_matches_betti": suite.checks.euler_matches_betti,
        },
    });
    Ok(serde_json::to_string_pretty(&doc)?)
}
