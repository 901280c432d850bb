//! Command-line front end: verify codes from files, construct and search
//! for codes, print bound tables, compute syndromes, and list subgroups.
//!
//! Exit status is 0 on success, 1 when a requested verification check
//! fails, and 2 for usage, file, or scope errors.

mod codefile;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use idcode::algebra::{
    enumerate_subgroups_capped, find_closure_violation, is_group_identifying, is_linear_code,
    syndrome, DEFAULT_ENUMERATION_CAP,
};
use idcode::codesets::{
    find_identifying_violation, find_min_distance2_violation, find_self_identifying_violation,
    find_sld_violation, find_two_direction_violation, find_undominated, find_unseparated_pair,
    j_set, Code, IdentifyingViolation, MinDistance2Violation, SelfIdViolation, SldViolation,
};
use idcode::constructions::{
    direct_sum_extend, gid_lower_bound, gid_bounds, kappa, kappa_lower_bound, sum_code,
    two_factor_gamma_id,
};
use idcode::hamming::{Radices, Vertex};
use idcode::search::{
    min_group_identifying_code_capped, min_identifying_code, min_linear_identifying_code_capped,
    SearchOptions, SearchReport, DEFAULT_SUBSET_CAP,
};

#[derive(Parser)]
#[command(name = "idcode", version, about = "Identifying codes in Hamming graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks against a code file.
    Verify {
        /// Code file to check.
        file: PathBuf,
        /// Comma-separated checks to run, in order.
        #[arg(long, value_delimiter = ',', default_value = "identifying")]
        checks: Vec<Check>,
    },
    /// Build a code and emit it as a code file.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Exhaustive minimization searches.
    Search {
        #[command(subcommand)]
        target: SearchTarget,
    },
    /// Print every applicable bound for the given parameters.
    Bounds(BoundsArgs),
    /// Compute the syndrome of a vertex under a parity check matrix.
    Syndrome {
        /// Matrix file (`p rows cols` header).
        #[arg(long)]
        matrix: PathBuf,
        /// Vertex coordinates, comma-separated.
        #[arg(long)]
        vertex: String,
    },
    /// List every subgroup of the vertex group in canonical order.
    Subgroups {
        /// Radices, comma-separated.
        #[arg(long)]
        radices: String,
        /// Cap on the number of subgroups to enumerate.
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Check {
    Identifying,
    Dominating,
    Separating,
    Group,
    Linear,
    Sld,
    Selfid,
    #[value(name = "two-dir")]
    TwoDir,
    Mindist2,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Identifying => "identifying",
            Check::Dominating => "dominating",
            Check::Separating => "separating",
            Check::Group => "group",
            Check::Linear => "linear",
            Check::Sld => "sld",
            Check::Selfid => "selfid",
            Check::TwoDir => "two-dir",
            Check::Mindist2 => "mindist2",
        }
    }
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Code whose last coordinate is the sum of the others mod m.
    Sum {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Prepend a coordinate and close under its direct sum.
    Extend {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SearchTarget {
    /// Minimum identifying code over all vertex subsets.
    Id {
        #[arg(long, value_delimiter = ',')]
        radices: Vec<u32>,
        /// Vertex-count cap for the subset search.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum identifying code among subgroups.
    Gid {
        #[arg(long, value_delimiter = ',')]
        radices: Vec<u32>,
        /// Cap on the number of subgroups to enumerate.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum identifying code among linear codes over F_p.
    Lid {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        /// Cap on the number of subspaces to enumerate per dimension.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// Radices, comma-separated: bounds for identifying codes in this graph.
    #[arg(long, value_delimiter = ',', conflicts_with = "kappa")]
    radices: Option<Vec<u32>>,
    /// Report subspace dimensions for linear codes instead.
    #[arg(long, requires = "n", requires = "p")]
    kappa: bool,
    /// Number of coordinates (with --kappa).
    #[arg(long)]
    n: Option<usize>,
    /// Field order (with --kappa).
    #[arg(long)]
    p: Option<u32>,
}

/// Appends a line to the command's output buffer; writing to a String
/// cannot fail, so the formatting result is safe to unwrap.
macro_rules! outln {
    ($dst:expr, $($arg:tt)*) => { writeln!($dst, $($arg)*).unwrap() };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // A closed pipe downstream is not our error; drop the tail quietly and
    // still report the command's own verdict.
    let mut stdout = std::io::stdout();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<ExitCode, String> {
    match command {
        Command::Verify { file, checks } => cmd_verify(&file, &checks, out),
        Command::Construct { kind } => cmd_construct(kind, out),
        Command::Search { target } => cmd_search(target, out),
        Command::Bounds(args) => cmd_bounds(&args, out),
        Command::Syndrome { matrix, vertex } => cmd_syndrome(&matrix, &vertex, out),
        Command::Subgroups { radices, cap } => cmd_subgroups(&radices, cap, out),
    }
}

fn read_code(path: &PathBuf) -> Result<Code, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = codefile::parse_code_file(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.code)
}

fn emit_code(code: &Code, path: Option<&PathBuf>, out: &mut String) -> Result<(), String> {
    let text = codefile::write_code_file(code);
    match path {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            out.push_str(&text);
            Ok(())
        }
    }
}

fn parse_radices(dims: &[u32]) -> Result<Radices, String> {
    Radices::new(dims.to_vec()).map_err(|e| e.to_string())
}

fn cmd_verify(file: &PathBuf, checks: &[Check], out: &mut String) -> Result<ExitCode, String> {
    let code = read_code(file)?;
    let r = code.radices().clone();
    let empty_note = if code.is_empty() { " (empty)" } else { "" };
    outln!(out, "code: {} codewords over {r}{empty_note}", code.len());

    let mut all_pass = true;
    for &check in checks {
        let witness = run_check(&code, check).map_err(|e| format!("{}: {e}", check.name()))?;
        match witness {
            None => outln!(out, "{}: PASS", check.name()),
            Some(lines) => {
                all_pass = false;
                outln!(out, "{}: FAIL", check.name());
                for line in lines {
                    outln!(out, "  {line}");
                }
            }
        }
    }
    Ok(ExitCode::from(if all_pass { 0 } else { 1 }))
}

/// Runs one check; `None` means pass, `Some` carries the witness lines.
fn run_check(code: &Code, check: Check) -> idcode::Result<Option<Vec<String>>> {
    let witness = match check {
        Check::Identifying => find_identifying_violation(code).map(|v| match v {
            IdentifyingViolation::Undominated(x) => undominated_lines(x),
            IdentifyingViolation::Unseparated(x, y) => unseparated_lines(code, x, y),
        }),
        Check::Dominating => find_undominated(code).map(undominated_lines),
        Check::Separating => {
            find_unseparated_pair(code).map(|(x, y)| unseparated_lines(code, x, y))
        }
        Check::Group => subgroup_witness(code),
        Check::Linear => {
            if is_linear_code(code)? {
                None
            } else {
                subgroup_witness(code)
            }
        }
        Check::Sld => find_sld_violation(code).map(|v| match v {
            SldViolation::EmptyJSet(x) => vec![format!("witness {x}: J({x}) is empty")],
            SldViolation::Covered { x, y } => {
                vec![format!("witness pair ({x},{y}): J({x}) - J({y}) is empty")]
            }
        }),
        Check::Selfid => find_self_identifying_violation(code)?.map(|v| match v {
            SelfIdViolation::SmallJSet { x, size } => {
                vec![format!("witness {x}: |J({x})| = {size}")]
            }
            SelfIdViolation::NoDistanceTwoPair { x } => {
                vec![format!("witness {x}: no two members of J({x}) are at distance 2")]
            }
        }),
        Check::TwoDir => find_two_direction_violation(code)?.map(|v| {
            vec![format!(
                "witness {}: |J({})| = {}, codeword directions = {}",
                v.x, v.x, v.jset_size, v.directions
            )]
        }),
        Check::Mindist2 => find_min_distance2_violation(code)?.map(|v| match v {
            MinDistance2Violation::AdjacentCodewords(x, y) => {
                vec![format!("witness pair ({x},{y}): adjacent codewords")]
            }
            MinDistance2Violation::SmallJSet { x, size } => {
                vec![format!("witness {x}: |J({x})| = {size}")]
            }
        }),
    };
    Ok(witness)
}

fn undominated_lines(x: Vertex) -> Vec<String> {
    vec![format!("witness {x}: N[{x}] contains no codeword")]
}

fn unseparated_lines(code: &Code, x: Vertex, y: Vertex) -> Vec<String> {
    let shared = j_set(code, &x).expect("vertex belongs to the code's graph");
    vec![format!("witness pair ({x},{y}): J({x}) = J({y}) = {shared}")]
}

fn subgroup_witness(code: &Code) -> Option<Vec<String>> {
    if code.is_empty() {
        return Some(vec!["witness: the code is empty".into()]);
    }
    if !code.contains_index(0) {
        return Some(vec!["witness: the zero word is missing".into()]);
    }
    find_closure_violation(code)
        .map(|(b, a, sum)| vec![format!("witness: {b} + {a} = {sum} is not in the code")])
}

fn cmd_construct(kind: ConstructKind, out: &mut String) -> Result<ExitCode, String> {
    match kind {
        ConstructKind::Sum { m, n, out: path } => {
            let code = sum_code(m, n).map_err(|e| e.to_string())?;
            emit_code(&code, path.as_ref(), out)?;
        }
        ConstructKind::Extend { input, out: path } => {
            let code = read_code(&input)?;
            let lifted = direct_sum_extend(&code).map_err(|e| e.to_string())?;
            emit_code(&lifted, path.as_ref(), out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &SearchReport, path: Option<&PathBuf>, out: &mut String) -> Result<(), String> {
    outln!(out, "optimum: {}", report.optimum);
    outln!(out, "bound used: {}", report.bound_used);
    outln!(out, "explored: {}", report.explored);
    let members: Vec<String> = report.witness.iter().map(|v| v.to_string()).collect();
    outln!(out, "witness: {}", members.join(" "));
    if path.is_some() {
        emit_code(&report.witness, path, out)?;
    }
    Ok(())
}

fn cmd_search(target: SearchTarget, out: &mut String) -> Result<ExitCode, String> {
    match target {
        SearchTarget::Id { radices, cap, out: path } => {
            let r = parse_radices(&radices)?;
            let opts = SearchOptions {
                vertex_cap: cap.unwrap_or(DEFAULT_SUBSET_CAP),
                ..SearchOptions::default()
            };
            let report = min_identifying_code(&r, &opts).map_err(|e| e.to_string())?;
            print_report(&report, path.as_ref(), out)?;
        }
        SearchTarget::Gid { radices, cap, out: path } => {
            let r = parse_radices(&radices)?;
            let report =
                min_group_identifying_code_capped(&r, cap.unwrap_or(DEFAULT_ENUMERATION_CAP))
                    .map_err(|e| e.to_string())?;
            print_report(&report, path.as_ref(), out)?;
        }
        SearchTarget::Lid { p, n, cap, out: path } => {
            let (report, dim) =
                min_linear_identifying_code_capped(p, n, cap.unwrap_or(DEFAULT_ENUMERATION_CAP))
                    .map_err(|e| e.to_string())?;
            outln!(out, "kappa: {dim}");
            print_report(&report, path.as_ref(), out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn bound_row<T: std::fmt::Display>(out: &mut String, name: &str, value: idcode::Result<T>) {
    match value {
        Ok(v) => outln!(out, "{name}: {v}"),
        Err(e) => outln!(out, "{name}: N/A ({e})"),
    }
}

fn cmd_bounds(args: &BoundsArgs, out: &mut String) -> Result<ExitCode, String> {
    if args.kappa {
        let n = args.n.expect("clap enforces --n");
        let p = args.p.expect("clap enforces --p");
        bound_row(out, "kappa", kappa(n, p));
        bound_row(out, "kappa lower bound", kappa_lower_bound(n, p));
        bound_row(
            out,
            "linear optimum",
            kappa(n, p).and_then(|k| {
                (p as u128)
                    .checked_pow(k as u32)
                    .ok_or(idcode::Error::Overflow("linear optimum"))
            }),
        );
        return Ok(ExitCode::SUCCESS);
    }
    let dims = args
        .radices
        .as_ref()
        .ok_or("pass --radices m1,m2,... or --kappa --n N --p P")?;
    let r = parse_radices(dims)?;
    outln!(out, "radices: {r}");
    outln!(out, "vertices: {}", r.vertex_count());
    let two_factor = match dims[..] {
        [a, b] => two_factor_gamma_id(a, b),
        _ => Err(idcode::Error::UnsupportedScope("needs exactly 2 coordinates".into())),
    };
    bound_row(out, "two-factor optimum", two_factor);
    bound_row(out, "gid lower bound", gid_lower_bound(&r));
    let upper = match (r.uniform(), r.n()) {
        (Some(m), n) if n >= 3 && m >= 3 => gid_bounds(m, n).map(|(_, hi)| hi),
        (None, _) => Err(idcode::Error::UnsupportedScope("radices are not uniform".into())),
        _ => Err(idcode::Error::UnsupportedScope(
            "needs at least 3 coordinates and radix at least 3".into(),
        )),
    };
    bound_row(out, "gid upper bound", upper);
    Ok(ExitCode::SUCCESS)
}

fn cmd_syndrome(matrix: &PathBuf, vertex: &str, out: &mut String) -> Result<ExitCode, String> {
    let text = fs::read_to_string(matrix).map_err(|e| format!("{}: {e}", matrix.display()))?;
    let h = codefile::parse_matrix_file(&text).map_err(|e| format!("{}: {e}", matrix.display()))?;
    let coords: Vec<u32> = vertex
        .split(',')
        .map(|tok| tok.trim().parse().map_err(|_| format!("bad coordinate `{tok}`")))
        .collect::<Result<_, String>>()?;
    let r = Radices::new(vec![h.p(); h.cols()]).map_err(|e| e.to_string())?;
    let u = r.vertex(coords).map_err(|e| e.to_string())?;
    let s = syndrome(&h, &u).map_err(|e| e.to_string())?;
    let entries: Vec<String> = s.iter().map(u32::to_string).collect();
    outln!(out, "syndrome: ({})", entries.join(","));
    Ok(ExitCode::SUCCESS)
}

fn cmd_subgroups(radices: &str, cap: Option<usize>, out: &mut String) -> Result<ExitCode, String> {
    let dims: Vec<u32> = radices
        .split(',')
        .map(|tok| tok.trim().parse().map_err(|_| format!("bad radix `{tok}`")))
        .collect::<Result<_, String>>()?;
    let r = parse_radices(&dims)?;
    let subs = enumerate_subgroups_capped(&r, cap.unwrap_or(DEFAULT_ENUMERATION_CAP))
        .map_err(|e| e.to_string())?;
    outln!(out, "{} subgroups of {r}", subs.len());
    for h in &subs {
        let gens = h.minimal_generators();
        let gens = if gens.is_empty() {
            "none".to_string()
        } else {
            gens.iter().map(|g| g.to_string()).collect::<Vec<String>>().join(" ")
        };
        let marker = if is_group_identifying(h.code()) { " [identifying]" } else { "" };
        outln!(out, "order {}: generators {gens}{marker}", h.order());
    }
    Ok(ExitCode::SUCCESS)
}
