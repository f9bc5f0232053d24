//! Command-line front end for the [`trisquare`] library.
//!
//! Everything is routed through [`run`], which parses an argument list and
//! writes to a caller-supplied stream, so the binary in `main.rs` is a thin
//! wrapper and tests can capture output byte-for-byte. Identical
//! invocations produce byte-identical output: every enumeration the
//! library hands over is already deterministically ordered, and the JSON
//! encoder keeps struct field order.
//!
//! Exit codes: 0 on success, 1 on usage or domain errors (including
//! overflow of the checked 64-bit range), 2 when a verification-style
//! check fails — a `verify` suite finding a mismatch, a sieve value with
//! no decomposition, a count that fails its divisibility certificate, or
//! an inversion that exhausts its search space.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use trisquare::census::{
    brute_solutions, count_formula, solve_by_sieve, special_triples, verify_trinity,
    Prop32Witness,
};
use trisquare::param::{forward, invert, Quad, RawTriple, Solution};
use trisquare::{census, geometry, solgraph};

/// Reference rows for `verify table1`: every primitive solution for odd
/// D ≤ 23, keyed by D, each row sorted ascending and the rows ordered
/// lexicographically.
pub const TABLE1: [(i64, &[[i64; 3]]); 12] = [
    (1, &[[1, 1, 1]]),
    (3, &[[1, 1, 5]]),
    (5, &[[1, 5, 7]]),
    (7, &[[1, 5, 11]]),
    (9, &[[1, 11, 11], [5, 7, 13]]),
    (11, &[[1, 1, 19], [5, 7, 17], [5, 13, 13]]),
    (13, &[[5, 11, 19], [7, 13, 17]]),
    (15, &[[1, 7, 25], [5, 11, 23], [5, 17, 19]]),
    (17, &[[1, 5, 29], [7, 17, 23], [11, 11, 25], [13, 13, 23]]),
    (19, &[[1, 11, 31], [5, 23, 23], [11, 11, 29], [13, 17, 25]]),
    (21, &[[1, 19, 31], [11, 19, 29], [13, 23, 25]]),
    (23, &[[1, 19, 35], [1, 25, 31], [7, 13, 37], [11, 25, 29]]),
];

/// Default sweep bound, overridable by the TRISQUARE_MAX_D environment
/// variable and by `--max-d`.
const DEFAULT_MAX_D: i64 = 301;

macro_rules! w {
    ($out:expr) => {{
        let _ = writeln!($out);
    }};
    ($out:expr, $($arg:tt)*) => {{
        let _ = writeln!($out, $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "trisquare",
    version,
    about = "Exact solutions, counts, and lattice geometry of A^2 + B^2 + C^2 = 3D^2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the primitive solutions for one D
    Solve(SolveArgs),
    /// Evaluate the closed-form solution count, optionally cross-checked
    Count(CountArgs),
    /// Apply the parametrization to a 4-tuple (x, y, z, t)
    Param(ParamArgs),
    /// Recover a 4-tuple from a primitive solution, with the full trace
    Invert(InvertArgs),
    /// Equilateral lattice triangle spanned by a 4-tuple
    Triangle(TriangleArgs),
    /// Regular lattice tetrahedron spanned by a 4-tuple
    Tetra(TetraArgs),
    /// Build the solution graph for all D up to a bound
    Graph(GraphArgs),
    /// Run a built-in verification suite
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Exhaustive enumeration
    Brute,
    /// Quadratic-residue sieve (odd prime D ≥ 5 only)
    Sieve,
    /// The closed-form construction families (not exhaustive)
    Special,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum RecordFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MeshFormat {
    Text,
    Json,
    Obj,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    /// The D whose solutions to list
    #[arg(long)]
    d: i64,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    method: Method,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Args)]
struct CountArgs {
    /// A single D
    #[arg(long, conflicts_with = "range")]
    d: Option<i64>,
    /// An inclusive range of D; even values are skipped
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    range: Option<Vec<i64>>,
    /// Cross-check each count against exhaustive enumeration
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Args)]
struct ParamArgs {
    /// Comma-separated x,y,z,t
    #[arg(long, value_parser = parse_quad)]
    quad: Quad,
    #[arg(long, value_enum, default_value_t = RecordFormat::Text)]
    format: RecordFormat,
}

#[derive(Args)]
struct InvertArgs {
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
    #[arg(long)]
    c: i64,
    #[arg(long)]
    d: i64,
    #[arg(long, value_enum, default_value_t = RecordFormat::Text)]
    format: RecordFormat,
}

#[derive(Args)]
struct TriangleArgs {
    /// Comma-separated x,y,z,t
    #[arg(long, value_parser = parse_quad)]
    quad: Quad,
    /// Apply the (m, n) family map to the spanned triangle
    #[arg(long, value_parser = parse_pair, value_name = "M,N")]
    family: Option<(i64, i64)>,
    #[arg(long, value_enum, default_value_t = MeshFormat::Text)]
    format: MeshFormat,
}

#[derive(Args)]
struct TetraArgs {
    /// Comma-separated x,y,z,t
    #[arg(long, value_parser = parse_quad)]
    quad: Quad,
    #[arg(long, value_enum, default_value_t = MeshFormat::Text)]
    format: MeshFormat,
}

#[derive(Args)]
struct GraphArgs {
    /// Largest D included (defaults to TRISQUARE_MAX_D or 301)
    #[arg(long)]
    max_d: Option<i64>,
    /// Write to this file instead of the output stream
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    format: GraphFormat,
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Enumerations for odd D ≤ 23 against the built-in reference table
    Table1,
    /// Closed-form count against enumeration for every odd D up to a bound
    Census {
        #[arg(long, default_value_t = DEFAULT_MAX_D)]
        bound: i64,
    },
    /// Mutual inclusions of the three quadratic-form value sets
    Trinity {
        #[arg(long, default_value_t = 5000)]
        bound: i64,
    },
    /// The shared-factor phenomenon at D = 53599
    Remark1,
    /// Representation identity at every prime p ≡ 1 (mod 12) up to a bound
    Prop32 {
        #[arg(long, default_value_t = 1000)]
        bound: i64,
    },
}

fn parse_quad(s: &str) -> Result<Quad, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected x,y,z,t (four integers), got {s:?}"));
    }
    let mut vals = [0i64; 4];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = p
            .trim()
            .parse()
            .map_err(|_| format!("not an integer: {p:?}"))?;
    }
    Ok(Quad::new(vals[0], vals[1], vals[2], vals[3]))
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected m,n (two integers), got {s:?}"));
    }
    let m = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("not an integer: {:?}", parts[0]))?;
    let n = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("not an integer: {:?}", parts[1]))?;
    Ok((m, n))
}

/// Exit code for a library error: 2 for verification-style failures,
/// 1 for everything else (usage, domain, overflow).
fn exit_code(e: &trisquare::Error) -> i32 {
    use trisquare::Error;
    match e {
        Error::SieveUncovered { .. } | Error::Divisibility(_) | Error::InversionExhausted { .. } => {
            2
        }
        _ => 1,
    }
}

fn report<W: Write>(out: &mut W, e: &trisquare::Error) -> i32 {
    w!(out, "error: {e}");
    exit_code(e)
}

fn json_line<W: Write, T: serde::Serialize>(out: &mut W, value: &T) {
    match serde_json::to_string_pretty(value) {
        Ok(s) => w!(out, "{s}"),
        Err(e) => w!(out, "error: JSON encoding failed: {e}"),
    }
}

/// Parses `args` (argv-style, program name first) and executes the chosen
/// subcommand, writing all output — results, help, and error messages —
/// to `out`. Returns the process exit code.
pub fn run<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            let _ = write!(out, "{rendered}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    match cli.command {
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Count(a) => cmd_count(&a, out),
        Command::Param(a) => cmd_param(&a, out),
        Command::Invert(a) => cmd_invert(&a, out),
        Command::Triangle(a) => cmd_triangle(&a, out),
        Command::Tetra(a) => cmd_tetra(&a, out),
        Command::Graph(a) => cmd_graph(&a, out),
        Command::Verify { suite } => cmd_verify(&suite, out),
    }
}

fn solution_csv_row(s: &Solution) -> String {
    format!(
        "{},{},{},{},{}",
        s.a(),
        s.b(),
        s.c(),
        s.d(),
        s.is_primitive()
    )
}

fn cmd_solve<W: Write>(args: &SolveArgs, out: &mut W) -> i32 {
    if args.method == Method::Special {
        let found = match special_triples(args.d) {
            Ok(v) => v,
            Err(e) => return report(out, &e),
        };
        match args.format {
            TableFormat::Text => {
                for (family, s) in &found {
                    w!(out, "{family}: {s}");
                }
            }
            TableFormat::Json => {
                let items: Vec<serde_json::Value> = found
                    .iter()
                    .map(|(family, s)| {
                        serde_json::json!({ "family": family, "solution": s })
                    })
                    .collect();
                json_line(out, &items);
            }
            TableFormat::Csv => {
                w!(out, "family,A,B,C,D,primitive");
                for (family, s) in &found {
                    w!(out, "{},{}", family, solution_csv_row(s));
                }
            }
        }
        return 0;
    }
    let found = match args.method {
        Method::Brute => brute_solutions(args.d),
        Method::Sieve => solve_by_sieve(args.d),
        Method::Special => unreachable!("handled above"),
    };
    let found = match found {
        Ok(v) => v,
        Err(e) => return report(out, &e),
    };
    match args.format {
        TableFormat::Text => {
            for s in &found {
                w!(out, "{s}");
            }
        }
        TableFormat::Json => json_line(out, &found),
        TableFormat::Csv => {
            w!(out, "A,B,C,D,primitive");
            for s in &found {
                w!(out, "{}", solution_csv_row(s));
            }
        }
    }
    0
}

fn cmd_count<W: Write>(args: &CountArgs, out: &mut W) -> i32 {
    let ds: Vec<i64> = match (&args.d, &args.range) {
        (Some(d), None) => vec![*d],
        (None, Some(r)) => {
            let (lo, hi) = (r[0], r[1]);
            (lo..=hi).filter(|d| d % 2 != 0).collect()
        }
        (None, None) => {
            w!(out, "error: provide --d or --range");
            return 1;
        }
        (Some(_), Some(_)) => unreachable!("clap rejects the conflict"),
    };
    let mut reports = Vec::with_capacity(ds.len());
    for d in ds {
        let mut rep = match count_formula(d) {
            Ok(r) => r,
            Err(e) => return report(out, &e),
        };
        if args.check {
            let brute = match brute_solutions(d) {
                Ok(v) => v,
                Err(e) => return report(out, &e),
            };
            rep.brute_count = Some(brute.len() as i64);
        }
        reports.push(rep);
    }
    let mut mismatched = false;
    match args.format {
        TableFormat::Text => {
            for r in &reports {
                let mut line = format!(
                    "D={} lambda={} gamma2={} piEpsilon={}",
                    r.d, r.lambda, r.gamma2, r.pi_epsilon
                );
                if let Some(b) = r.brute_count {
                    let ok = b == r.pi_epsilon;
                    mismatched |= !ok;
                    line.push_str(&format!(
                        " brute={b} match={}",
                        if ok { "yes" } else { "NO" }
                    ));
                }
                w!(out, "{line}");
            }
        }
        TableFormat::Json => {
            for r in &reports {
                if let Some(b) = r.brute_count {
                    mismatched |= b != r.pi_epsilon;
                }
            }
            json_line(out, &reports);
        }
        TableFormat::Csv => {
            w!(out, "D,lambda,gamma2,piEpsilon,bruteCount,match");
            for r in &reports {
                let (brute, matches) = match r.brute_count {
                    Some(b) => {
                        let ok = b == r.pi_epsilon;
                        mismatched |= !ok;
                        (b.to_string(), ok.to_string())
                    }
                    None => (String::new(), String::new()),
                };
                w!(
                    out,
                    "{},{},{},{},{},{}",
                    r.d,
                    r.lambda,
                    r.gamma2,
                    r.pi_epsilon,
                    brute,
                    matches
                );
            }
        }
    }
    if mismatched {
        2
    } else {
        0
    }
}

fn raw_text(r: &RawTriple) -> String {
    format!("{r}")
}

fn cmd_param<W: Write>(args: &ParamArgs, out: &mut W) -> i32 {
    let (raw, sol) = match forward(&args.quad) {
        Ok(v) => v,
        Err(e) => return report(out, &e),
    };
    match args.format {
        RecordFormat::Text => {
            w!(out, "raw: {}", raw_text(&raw));
            match sol {
                Some(s) => w!(out, "solution: {s}"),
                None => w!(out, "solution: none (zero 4-tuple)"),
            }
        }
        RecordFormat::Json => {
            json_line(out, &serde_json::json!({ "raw": raw, "solution": sol }));
        }
    }
    0
}

fn cmd_invert<W: Write>(args: &InvertArgs, out: &mut W) -> i32 {
    let s = match Solution::new(args.a, args.b, args.c, args.d) {
        Ok(s) => s,
        Err(e) => return report(out, &e),
    };
    let trace = match invert(&s) {
        Ok(t) => t,
        Err(e) => return report(out, &e),
    };
    match args.format {
        RecordFormat::Text => {
            w!(out, "quad: {}", trace.quad);
            w!(out, "U: {}", trace.big_u);
            w!(out, "V: {}", trace.big_v);
            w!(out, "W: {}", trace.w);
            w!(out, "Uprime: {}", trace.u_prime);
            w!(out, "Vprime: {}", trace.v_prime);
            w!(out, "eta: {}", trace.eta);
            w!(out, "Wprime: {}", trace.w_prime);
            w!(out, "Wsecond: {}", trace.w_second);
            w!(out, "u: {}", trace.u);
            w!(out, "v: {}", trace.v);
            w!(out, "signFlipped: {}", trace.sign_flipped);
        }
        RecordFormat::Json => json_line(out, &trace),
    }
    0
}

fn point_text(p: &geometry::LatticePoint) -> String {
    format!("{p}")
}

fn obj_vertex(line: &mut String, p: [i64; 3]) {
    line.push_str(&format!("v {} {} {}\n", p[0], p[1], p[2]));
}

fn cmd_triangle<W: Write>(args: &TriangleArgs, out: &mut W) -> i32 {
    let tri = match geometry::triangle(&args.quad) {
        Ok(t) => t,
        Err(e) => return report(out, &e),
    };
    let tri = match args.family {
        Some((m, n)) => match geometry::triangle_family(&tri, m, n) {
            Ok(t) => t,
            Err(e) => return report(out, &e),
        },
        None => tri,
    };
    match args.format {
        MeshFormat::Text => {
            w!(out, "P: {}", point_text(&tri.p));
            w!(out, "Q: {}", point_text(&tri.q));
            w!(out, "sideSquared: {}", tri.side_squared);
        }
        MeshFormat::Json => json_line(out, &tri),
        MeshFormat::Obj => {
            let mut buf = String::new();
            obj_vertex(&mut buf, [0, 0, 0]);
            obj_vertex(&mut buf, tri.p.0);
            obj_vertex(&mut buf, tri.q.0);
            buf.push_str("f 1 2 3\n");
            let _ = write!(out, "{buf}");
        }
    }
    0
}

fn cmd_tetra<W: Write>(args: &TetraArgs, out: &mut W) -> i32 {
    let result = match geometry::tetrahedron(&args.quad) {
        Ok(t) => t,
        Err(e) => return report(out, &e),
    };
    let t = &result.tetra;
    match args.format {
        MeshFormat::Text => {
            w!(out, "P: {}", point_text(&t.p));
            w!(out, "Q: {}", point_text(&t.q));
            w!(out, "R: {}", point_text(&t.r));
            w!(out, "sideSquared: {}", t.side_squared);
            match &result.alt_apex {
                Some(p) => w!(out, "R2: {}", point_text(p)),
                None => w!(out, "R2: not a lattice point"),
            }
            let [cx, cy, cz] = &result.alt_apex_candidate;
            w!(out, "R2 candidate: ({cx}, {cy}, {cz})");
        }
        MeshFormat::Json => {
            let candidate: Vec<String> = result
                .alt_apex_candidate
                .iter()
                .map(|r| r.to_string())
                .collect();
            json_line(
                out,
                &serde_json::json!({
                    "P": t.p,
                    "Q": t.q,
                    "R": t.r,
                    "sideSquared": t.side_squared,
                    "R2": result.alt_apex,
                    "R2Candidate": candidate,
                }),
            );
        }
        MeshFormat::Obj => {
            let mut buf = String::new();
            obj_vertex(&mut buf, [0, 0, 0]);
            obj_vertex(&mut buf, t.p.0);
            obj_vertex(&mut buf, t.q.0);
            obj_vertex(&mut buf, t.r.0);
            buf.push_str("f 1 2 3\nf 1 2 4\nf 1 3 4\nf 2 3 4\n");
            let _ = write!(out, "{buf}");
        }
    }
    0
}

fn default_max_d<W: Write>(out: &mut W) -> Result<i64, i32> {
    match std::env::var("TRISQUARE_MAX_D") {
        Ok(v) => v.trim().parse().map_err(|_| {
            w!(out, "error: TRISQUARE_MAX_D is not an integer: {v:?}");
            1
        }),
        Err(_) => Ok(DEFAULT_MAX_D),
    }
}

fn cmd_graph<W: Write>(args: &GraphArgs, out: &mut W) -> i32 {
    let max_d = match args.max_d {
        Some(v) => v,
        None => match default_max_d(out) {
            Ok(v) => v,
            Err(code) => return code,
        },
    };
    let graph = match solgraph::build(max_d) {
        Ok(g) => g,
        Err(e) => return report(out, &e),
    };
    let rendered = match args.format {
        GraphFormat::Dot => graph.to_dot(),
        GraphFormat::Json => match serde_json::to_string_pretty(&graph) {
            Ok(mut s) => {
                s.push('\n');
                s
            }
            Err(e) => {
                w!(out, "error: JSON encoding failed: {e}");
                return 1;
            }
        },
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                w!(out, "error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            let _ = write!(out, "{rendered}");
        }
    }
    0
}

fn cmd_verify<W: Write>(suite: &VerifySuite, out: &mut W) -> i32 {
    match suite {
        VerifySuite::Table1 => verify_table1(out),
        VerifySuite::Census { bound } => verify_census(*bound, out),
        VerifySuite::Trinity { bound } => verify_trinity_cmd(*bound, out),
        VerifySuite::Remark1 => verify_remark1(out),
        VerifySuite::Prop32 { bound } => verify_prop32(*bound, out),
    }
}

fn verify_table1<W: Write>(out: &mut W) -> i32 {
    for (d, rows) in TABLE1 {
        let found = match brute_solutions(d) {
            Ok(v) => v,
            Err(e) => return report(out, &e),
        };
        let got: Vec<[i64; 3]> = found.iter().map(|s| s.components()).collect();
        if got != rows {
            w!(out, "table1: FAILED at D={d}: expected {rows:?}, got {got:?}");
            return 2;
        }
        w!(out, "D={d}: ok (rows: {})", rows.len());
    }
    w!(out, "table1: ok ({} values of D)", TABLE1.len());
    0
}

fn verify_census<W: Write>(bound: i64, out: &mut W) -> i32 {
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    let mut d = 3;
    while d <= bound {
        let rep = match count_formula(d) {
            Ok(r) => r,
            Err(e) => return report(out, &e),
        };
        let brute = match brute_solutions(d) {
            Ok(v) => v,
            Err(e) => return report(out, &e),
        };
        if rep.pi_epsilon != brute.len() as i64 {
            mismatches.push((d, rep.pi_epsilon, brute.len() as i64));
        }
        checked += 1;
        d += 2;
    }
    for (d, formula, brute) in &mismatches {
        w!(out, "census: MISMATCH at D={d}: formula {formula}, enumeration {brute}");
    }
    if mismatches.is_empty() {
        w!(out, "census: ok (odd D in [3, {bound}], {checked} checked, 0 mismatches)");
        0
    } else {
        w!(out, "census: FAILED ({} mismatches)", mismatches.len());
        2
    }
}

fn verify_trinity_cmd<W: Write>(bound: i64, out: &mut W) -> i32 {
    let rep = match verify_trinity(bound) {
        Ok(r) => r,
        Err(e) => return report(out, &e),
    };
    for (t, idx) in &rep.violations {
        let name = ["A∩B ⊄ C", "B∩C ⊄ A", "C∩A ⊄ B"][*idx];
        w!(out, "trinity: VIOLATION {name} at t={t}");
    }
    let names = ["C only", "A only", "B only"];
    let mut missing = false;
    for (i, wit) in rep.strictness.iter().enumerate() {
        match wit {
            Some(t) => w!(out, "strictness ({}): t={t}", names[i]),
            None => {
                missing = true;
                w!(out, "strictness ({}): no witness below bound", names[i]);
            }
        }
    }
    if rep.violations.is_empty() && !missing {
        w!(out, "trinity: ok (|t| <= {bound}, 0 violations)");
        0
    } else {
        w!(out, "trinity: FAILED");
        2
    }
}

fn verify_remark1<W: Write>(out: &mut W) -> i32 {
    let (d, a, b, c) = (53599i64, 727i64, 36293i64, 85445i64);
    let sq = |v: i64| i128::from(v) * i128::from(v);
    if sq(a) + sq(b) + sq(c) != 3 * sq(d) {
        w!(out, "remark1: FAILED: ({a}, {b}, {c}; {d}) is not a solution");
        return 2;
    }
    w!(out, "D={d} (A, B, C)=({a}, {b}, {c})");
    let combos = [
        ("A+B+C", a + b + c),
        ("A+B-C", a + b - c),
        ("A-B+C", a - b + c),
        ("-A+B+C", -a + b + c),
    ];
    let mut all_shared = true;
    for (label, value) in combos {
        let g = num_integer::gcd(d, value);
        w!(out, "{label} = {value}, gcd(D, {label}) = {g}");
        all_shared &= g > 1;
    }
    if all_shared {
        w!(out, "remark1: ok (every combination shares a factor with D)");
        0
    } else {
        w!(out, "remark1: FAILED (a combination is coprime to D)");
        2
    }
}

fn verify_prop32<W: Write>(bound: i64, out: &mut W) -> i32 {
    let mut checked = 0usize;
    let mut p = 13;
    while p <= bound {
        if p % 12 == 1 && trisquare::intarith::is_prime(p) {
            let wit: Prop32Witness = match census::prop32_witness(p) {
                Ok(w) => w,
                Err(e) => return report(out, &e),
            };
            if wit.value != 2 * p {
                w!(out, "prop32: FAILED at p={p}: value {} is not 2p", wit.value);
                return 2;
            }
            w!(
                out,
                "p={p}: (a, b, u, v)=({}, {}, {}, {}) value={}",
                wit.a,
                wit.b,
                wit.u,
                wit.v,
                wit.value
            );
            checked += 1;
        }
        p += 2;
    }
    w!(out, "prop32: ok ({checked} primes up to {bound})");
    0
}
