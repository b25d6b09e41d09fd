//! The `strongmatch` command line.
//!
//! Exit codes: 0 success, 1 invariant or guarantee violation, 2 input or
//! precondition error, 3 exhausted search budget. With `--json` each command
//! writes exactly one JSON object to standard output; diagnostics always go
//! to standard error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bound_values, ceil, greedy_forest_ratio, greedy_general_ratio, Bound, BoundReport};
use crate::fuzz::{self, Family};
use crate::generators;
use crate::graph::{Edge, Girth, Graph};
use crate::greedy::{forest_greedy_induced_matching, girth6_induced_matching, greedy_induced_matching};
use crate::io::{parse_graph, write_edge_list, Format};
use crate::matching::{verify_induced_matching, Matching, Verdict};
use crate::oracle::{exact_strong_matching_number, OracleError, DEFAULT_NODE_BUDGET};
use crate::reduction::{find_induced_matching_subcubic, ledger_check, LedgerVerdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "strongmatch", version, about = "Induced matchings in graphs of small maximum degree")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file, or `-` for standard input.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::EdgeList)]
    pub format: Format,
    /// Emit one JSON object on standard output.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// Reduction engine for subcubic graphs.
    Reduction,
    /// Min-conflict greedy for any graph with an edge.
    Greedy,
    /// Deepest-edge greedy for forests.
    Forest,
    /// End-vertex procedure for girth at least 6.
    Girth6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    K33plus,
    Petersen,
    ExtremalCubic,
    C5Blowup,
    OddRegularExtremal,
    Subcubic,
    Cubic,
    Girth6,
    Forest,
    Bounded,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural counts and lower bounds.
    Stats {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compute, verify and print an induced matching.
    Match {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Algorithm::Reduction)]
        algorithm: Algorithm,
        /// Include the reduction trace.
        #[arg(long)]
        trace: bool,
    },
    /// Exact strong matching number (at most 64 edges).
    Exact {
        #[command(flatten)]
        input: InputArgs,
        /// Branch-and-bound node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Check that the edges in MATCHING form an induced matching.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Matching file in edge-list format.
        matching: PathBuf,
    },
    /// Generate a graph in edge-list format.
    Gen {
        #[arg(value_enum)]
        family: GenFamily,
        /// Order for random families.
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// Target edge count for `subcubic` and `bounded` (default: maximal).
        #[arg(long)]
        m: Option<usize>,
        /// Degree for `c5-blowup`, `odd-regular-extremal`, and the degree cap
        /// for `girth6`, `forest` (0 = none) and `bounded`.
        #[arg(long, default_value_t = 3)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check every applicable invariant on seeded random instances.
    Fuzz {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 100)]
        count: u64,
        /// Order of each instance.
        #[arg(long, default_value_t = 60)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Evaluate instances on one thread.
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        json: bool,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// A command's early exit: code plus a message for standard error.
struct Exit(i32, String);

type CmdResult = Result<i32, Exit>;

fn input_error(msg: impl Into<String>) -> Exit {
    Exit(EXIT_INPUT, msg.into())
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(target, "{}", e.render());
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    let mut io = Io { stdin, out: stdout, err: stderr };
    let result = match cli.command {
        Command::Stats { input } => cmd_stats(&mut io, &input),
        Command::Match { input, algorithm, trace } => cmd_match(&mut io, &input, algorithm, trace),
        Command::Exact { input, budget } => cmd_exact(&mut io, &input, budget),
        Command::Verify { input, matching } => cmd_verify(&mut io, &input, &matching),
        Command::Gen {
            family,
            n,
            m,
            delta,
            seed,
            json,
        } => cmd_gen(&mut io, family, n, m, delta, seed, json),
        Command::Fuzz {
            family,
            count,
            size,
            seed,
            sequential,
            json,
        } => cmd_fuzz(&mut io, family, count, size, seed, sequential, json),
    };
    let code = match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            code
        }
    };
    let _ = io.out.flush();
    code
}

fn read_text(io: &mut Io<'_>, path: &PathBuf) -> Result<String, Exit> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        io.stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn read_graph(io: &mut Io<'_>, input: &InputArgs) -> Result<Graph, Exit> {
    let text = read_text(io, &input.input)?;
    parse_graph(&text, input.format).map_err(|e| input_error(format!("{}: {e}", input.input.display())))
}

fn emit(io: &mut Io<'_>, text: &str) -> Result<(), Exit> {
    io.out.write_all(text.as_bytes()).map_err(|e| input_error(format!("stdout: {e}")))
}

fn emit_json<T: Serialize>(io: &mut Io<'_>, value: &T) -> Result<(), Exit> {
    let mut text = serde_json::to_string(value).expect("serializable report");
    text.push('\n');
    emit(io, &text)
}

fn join_edges(edges: &[Edge]) -> String {
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct StatsJson {
    n: usize,
    m: usize,
    i: usize,
    n33plus: usize,
    max_degree: usize,
    min_degree: usize,
    girth: Girth,
    components: usize,
    bound_thm1: Bound<usize>,
    bound_thm2: Bound<usize>,
    bound_prop1: Bound<usize>,
}

fn stats_json(g: &Graph, r: &BoundReport) -> StatsJson {
    StatsJson {
        n: r.n,
        m: r.m,
        i: r.i,
        n33plus: r.n33plus,
        max_degree: r.max_degree,
        min_degree: g.min_degree(),
        girth: r.girth,
        components: g.connected_components().len(),
        bound_thm1: r.thm1_bound,
        bound_thm2: r.thm2_bound,
        bound_prop1: r.prop1_bound,
    }
}

fn cmd_stats(io: &mut Io<'_>, input: &InputArgs) -> CmdResult {
    let g = read_graph(io, input)?;
    let s = stats_json(&g, &bound_values(&g));
    if input.json {
        emit_json(io, &s)?;
    } else {
        let text = format!(
            "n={}\nm={}\ni={}\nn33plus={}\nmax_degree={}\nmin_degree={}\ngirth={}\ncomponents={}\n\
             bound_thm1={}\nbound_thm2={}\nbound_prop1={}\n",
            s.n, s.m, s.i, s.n33plus, s.max_degree, s.min_degree, s.girth, s.components, s.bound_thm1, s.bound_thm2,
            s.bound_prop1
        );
        emit(io, &text)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct MatchJson<'a> {
    n: usize,
    m: usize,
    algorithm: &'a str,
    bound: usize,
    bound_thm1: Bound<usize>,
    bound_thm2: Bound<usize>,
    bound_prop1: Bound<usize>,
    size: usize,
    matching: &'a Matching,
    verified: bool,
    trace: Option<Vec<String>>,
}

fn cmd_match(io: &mut Io<'_>, input: &InputArgs, algorithm: Algorithm, want_trace: bool) -> CmdResult {
    let g = read_graph(io, input)?;
    let report = bound_values(&g);
    let m_edges = g.edge_count();
    let (matching, bound, trace_lines, name) = match algorithm {
        Algorithm::Reduction => {
            let (matching, trace) = find_induced_matching_subcubic(&g).map_err(|e| match e {
                crate::reduction::EngineError::NotSubcubic { .. } => input_error(e.to_string()),
                other => Exit(EXIT_VIOLATION, other.to_string()),
            })?;
            let verdict = ledger_check(&trace);
            if verdict != LedgerVerdict::Ok {
                return Err(Exit(EXIT_VIOLATION, format!("ledger check failed: {verdict:?}")));
            }
            let mut bound = trace.guaranteed_size();
            if let Some(b) = report.thm1_bound.value() {
                bound = bound.max(b);
            }
            let lines = want_trace.then(|| trace.render().lines().map(str::to_owned).collect::<Vec<_>>());
            (matching, bound, lines, "reduction")
        }
        Algorithm::Greedy => {
            let m = greedy_induced_matching(&g).map_err(|e| input_error(e.to_string()))?;
            (m, ceil(greedy_general_ratio(m_edges, g.max_degree())), None, "greedy")
        }
        Algorithm::Forest => {
            let m = forest_greedy_induced_matching(&g).map_err(|e| input_error(e.to_string()))?;
            (m, ceil(greedy_forest_ratio(m_edges, g.max_degree())), None, "forest")
        }
        Algorithm::Girth6 => {
            let m = girth6_induced_matching(&g).map_err(|e| input_error(e.to_string()))?;
            (m, report.prop1_bound.value().unwrap_or(0), None, "girth6")
        }
    };
    match verify_induced_matching(&g, &matching) {
        Ok(Verdict::Valid) => {}
        Ok(Verdict::Invalid { witness }) => {
            return Err(Exit(EXIT_VIOLATION, format!("{name} output is not induced: witness {witness:?}")));
        }
        Err(e) => return Err(Exit(EXIT_VIOLATION, format!("{name} output: {e}"))),
    }
    if matching.len() < bound {
        return Err(Exit(
            EXIT_VIOLATION,
            format!("{name} output has size {} below its guarantee {bound}", matching.len()),
        ));
    }
    if input.json {
        emit_json(
            io,
            &MatchJson {
                n: g.vertex_count(),
                m: m_edges,
                algorithm: name,
                bound,
                bound_thm1: report.thm1_bound,
                bound_thm2: report.thm2_bound,
                bound_prop1: report.prop1_bound,
                size: matching.len(),
                matching: &matching,
                verified: true,
                trace: trace_lines,
            },
        )?;
    } else {
        let mut text = String::new();
        for line in trace_lines.iter().flatten() {
            text.push_str(line);
            text.push('\n');
        }
        text.push_str(&format!(
            "algorithm={name}\nsize={}\nbound={bound}\nverified=true\nmatching={}\n",
            matching.len(),
            join_edges(matching.edges())
        ));
        emit(io, &text)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ExactJson<'a> {
    n: usize,
    m: usize,
    size: usize,
    matching: &'a Matching,
    verified: bool,
    nodes: u64,
}

fn cmd_exact(io: &mut Io<'_>, input: &InputArgs, budget: u64) -> CmdResult {
    let g = read_graph(io, input)?;
    let sol = exact_strong_matching_number(&g, budget).map_err(|e| match e {
        OracleError::BudgetExhausted(_) => Exit(EXIT_BUDGET, e.to_string()),
        OracleError::TooManyEdges(_) => input_error(e.to_string()),
    })?;
    let verified = matches!(verify_induced_matching(&g, &sol.witness), Ok(Verdict::Valid));
    if !verified {
        return Err(Exit(EXIT_VIOLATION, "exact witness failed verification".into()));
    }
    if input.json {
        emit_json(
            io,
            &ExactJson {
                n: g.vertex_count(),
                m: g.edge_count(),
                size: sol.value,
                matching: &sol.witness,
                verified,
                nodes: sol.nodes,
            },
        )?;
    } else {
        let text = format!(
            "size={}\nmatching={}\nverified=true\nnodes={}\n",
            sol.value,
            join_edges(sol.witness.edges()),
            sol.nodes
        );
        emit(io, &text)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    size: usize,
    matching: &'a Matching,
    verified: bool,
    witness: Option<Edge>,
}

fn cmd_verify(io: &mut Io<'_>, input: &InputArgs, matching_path: &PathBuf) -> CmdResult {
    let g = read_graph(io, input)?;
    let text = read_text(io, matching_path)?;
    let listed = parse_graph(&text, Format::EdgeList)
        .map_err(|e| input_error(format!("{}: {e}", matching_path.display())))?;
    let matching = Matching::new(listed.edges().iter().copied());
    let verdict = verify_induced_matching(&g, &matching).map_err(|e| input_error(e.to_string()))?;
    let witness = match verdict {
        Verdict::Valid => None,
        Verdict::Invalid { witness } => Some(witness),
    };
    if input.json {
        emit_json(
            io,
            &VerifyJson {
                size: matching.len(),
                matching: &matching,
                verified: witness.is_none(),
                witness,
            },
        )?;
    } else {
        let line = match witness {
            None => "valid\n".to_string(),
            Some((x, y)) => format!("invalid witness={x},{y}\n"),
        };
        emit(io, &line)?;
    }
    Ok(if witness.is_none() { EXIT_OK } else { EXIT_VIOLATION })
}

#[derive(Serialize)]
struct GenJson<'a> {
    n: usize,
    m: usize,
    edges: &'a [Edge],
}

fn cmd_gen(io: &mut Io<'_>, family: GenFamily, n: usize, m: Option<usize>, delta: usize, seed: u64, json: bool) -> CmdResult {
    let gen_err = |e: generators::GenError| input_error(e.to_string());
    let mut header = Vec::new();
    let g = match family {
        GenFamily::K33plus => generators::k33plus(),
        GenFamily::Petersen => generators::petersen(),
        GenFamily::ExtremalCubic => generators::extremal_cubic(),
        GenFamily::C5Blowup => generators::c5_blowup(delta).map_err(gen_err)?,
        GenFamily::OddRegularExtremal => {
            header = generators::odd_regular_extremal_layout(delta).map_err(gen_err)?;
            generators::odd_regular_extremal(delta).map_err(gen_err)?
        }
        GenFamily::Subcubic => generators::random_subcubic(n, m.unwrap_or(3 * n / 2), seed).map_err(gen_err)?,
        GenFamily::Cubic => generators::random_cubic(n, seed).map_err(gen_err)?,
        GenFamily::Girth6 => generators::random_girth6(n, delta, seed),
        GenFamily::Forest => generators::random_forest(n, delta, seed),
        GenFamily::Bounded => generators::random_bounded_degree(n, delta, m.unwrap_or(n * delta / 2), seed).map_err(gen_err)?,
    };
    if json {
        emit_json(
            io,
            &GenJson {
                n: g.vertex_count(),
                m: g.edge_count(),
                edges: g.edges(),
            },
        )?;
    } else {
        let mut text = String::new();
        for line in header {
            text.push_str(&format!("# {line}\n"));
        }
        text.push_str(&write_edge_list(&g));
        emit(io, &text)?;
    }
    Ok(EXIT_OK)
}

fn cmd_fuzz(
    io: &mut Io<'_>,
    family: Family,
    count: u64,
    size: usize,
    seed: u64,
    sequential: bool,
    json: bool,
) -> CmdResult {
    let summary = if sequential {
        fuzz::fuzz_sequential(family, count, size, seed)
    } else {
        fuzz::fuzz(family, count, size, seed)
    };
    if json {
        emit_json(io, &summary)?;
    } else {
        let first = match &summary.first_failure {
            Some(r) => format!("{} ({})", r.seed, r.failures.join("; ")),
            None => "none".to_string(),
        };
        let text = format!(
            "family={family} count={count} size={size} seed={seed}\npassed={} failed={}\nfirst_failing_seed={first}\n",
            summary.passed, summary.failed
        );
        emit(io, &text)?;
    }
    if let Some(r) = &summary.first_failure {
        let _ = writeln!(io.err, "seed {} failed: {}", r.seed, r.failures.join("; "));
    }
    Ok(if summary.all_passed() { EXIT_OK } else { EXIT_VIOLATION })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["strongmatch"];
        full.extend_from_slice(args);
        let code = run(full, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn k33plus_text() -> String {
        write_edge_list(&generators::k33plus())
    }

    #[test]
    fn stats_examples() {
        let (code, out, _) = call(&["stats", "-"], &k33plus_text());
        assert_eq!(code, 0);
        assert!(out.contains("n33plus=1\n") && out.contains("girth=4\n"));
        let (_, out, _) = call(&["stats", "-", "--json"], "n 3\n");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["i"], 3);
        assert_eq!(v["girth"], "acyclic");
        let (_, out, _) = call(&["stats", "-", "--json"], &write_edge_list(&generators::extremal_cubic()));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!((v["girth"].as_u64(), v["bound_thm1"].as_u64()), (Some(4), Some(5)));
    }

    #[test]
    fn stats_parse_error_is_input_error() {
        let (code, out, err) = call(&["stats", "-"], "0 1\n1 1\n");
        assert_eq!(code, EXIT_INPUT);
        assert!(out.is_empty());
        assert!(err.contains("line 2"));
    }

    #[test]
    fn match_examples() {
        let (code, out, _) = call(&["match", "-", "--json"], &write_edge_list(&generators::extremal_cubic()));
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!((v["size"].as_u64(), v["verified"].as_bool()), (Some(5), Some(true)));
        let (_, out, _) = call(&["match", "-"], "0 1\n1 2\n2 3\n");
        assert!(out.contains("size=1\n"));
        let c6 = "0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";
        let (_, out, _) = call(&["match", "-", "--algorithm", "girth6"], c6);
        assert!(out.contains("size=2\n"));
        let (code, _, _) = call(&["match", "-", "--algorithm", "forest"], c6);
        assert_eq!(code, EXIT_INPUT);
        let star = "0 1\n0 2\n0 3\n0 4\n";
        assert_eq!(call(&["match", "-"], star).0, EXIT_INPUT);
    }

    #[test]
    fn match_trace_lines() {
        let (code, out, _) = call(&["match", "-", "--trace"], &k33plus_text());
        assert_eq!(code, 0);
        assert!(out.starts_with("rule=COMPONENT-K33PLUS removed=0,1,2,3,4,5,6 added="));
        assert!(out.contains("matching=1 bound=1 ok=true\n"));
    }

    #[test]
    fn exact_examples_and_budget() {
        let petersen = write_edge_list(&generators::petersen());
        let (code, out, _) = call(&["exact", "-"], &petersen);
        assert_eq!(code, 0);
        assert!(out.starts_with("size=3\n"));
        assert!(call(&["exact", "-"], &k33plus_text()).1.starts_with("size=1\n"));
        assert_eq!(call(&["exact", "-", "--budget", "2"], &petersen).0, EXIT_BUDGET);
    }

    #[test]
    fn verify_examples() {
        let dir = std::env::temp_dir().join(format!("strongmatch-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let file = |name: &str, body: &str| {
            let p = dir.join(name);
            std::fs::write(&p, body).unwrap();
            p.to_str().unwrap().to_owned()
        };
        let p5 = file("p5", "0 1\n1 2\n2 3\n3 4\n");
        let p4 = file("p4", "0 1\n1 2\n2 3\n");
        let good = file("good", "0 1\n3 4\n");
        let bad = file("bad", "0 1\n2 3\n");
        let nonedge = file("nonedge", "0 2\n");
        assert_eq!(call(&["verify", &p5, &good], "").0, 0);
        let (code, out, _) = call(&["verify", &p4, &bad], "");
        assert_eq!((code, out.as_str()), (1, "invalid witness=1,2\n"));
        assert_eq!(call(&["verify", &p4, &nonedge], "").0, EXIT_INPUT);
        assert_eq!(call(&["verify", &p4, &dir.join("missing").to_string_lossy()], "").0, EXIT_INPUT);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn gen_outputs_parse_back() {
        let (code, out, _) = call(&["gen", "odd-regular-extremal", "--delta", "5"], "");
        assert_eq!(code, 0);
        let g = parse_graph(&out, Format::EdgeList).unwrap();
        assert_eq!((g.vertex_count(), g.max_degree(), g.min_degree()), (50, 5, 5));
        assert!(out.starts_with('#'));
        let (_, a, _) = call(&["gen", "cubic", "--n", "30", "--seed", "4"], "");
        let (_, b, _) = call(&["gen", "cubic", "--n", "30", "--seed", "4"], "");
        assert_eq!(a, b);
        assert_eq!(call(&["gen", "cubic", "--n", "7"], "").0, EXIT_INPUT);
        assert_eq!(call(&["gen", "c5-blowup", "--delta", "3"], "").0, EXIT_INPUT);
    }

    #[test]
    fn fuzz_summary() {
        let (code, out, _) = call(&["fuzz", "cubic", "--count", "20", "--size", "40", "--seed", "1"], "");
        assert_eq!(code, 0);
        assert!(out.contains("passed=20 failed=0\nfirst_failing_seed=none\n"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"], "").0, EXIT_INPUT);
        assert_eq!(call(&["match", "-", "--algorithm", "magic"], "").0, EXIT_INPUT);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
    }
}
