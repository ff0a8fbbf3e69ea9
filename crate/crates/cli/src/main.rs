use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hypereuler::format::{format_witness, parse_hypergraph, parse_witness};
use hypereuler::oracle::{brute_force_decide, random_hypergraph, verify_witness, GeneratorParams, Structure};
use hypereuler::reduce::{decide_reduced, find_vertex_cuts};
use hypereuler::solver::decide_direct;
use hypereuler::{Decision, EulerFamily, Hypergraph, Mode};

const YES: u8 = 0;
const NO: u8 = 1;
const USAGE: u8 = 2;
const INTERNAL: u8 = 3;

/// Euler families and tours in hypergraphs.
#[derive(Parser, Debug)]
#[command(name = "hypereuler", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Family,
    Tour,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Family => Mode::Family,
            ModeArg::Tour => Mode::Tour,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StructureArg {
    Uniform,
    #[value(name = "glued-1cut")]
    Glued1Cut,
    #[value(name = "glued-2cut")]
    Glued2Cut,
    #[value(name = "deg2-cut")]
    Deg2Cut,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the hypergraph has an Euler family or tour.
    Decide {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Require every vertex to be an anchor.
        #[arg(long)]
        spanning: bool,
        /// Use the direct solver (default).
        #[arg(long, conflicts_with = "reduce")]
        direct: bool,
        /// Reduce along vertex cuts first (spanning only).
        #[arg(long)]
        reduce: bool,
        /// Also write the witness to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Hypergraph file, or `-` for standard input.
        input: PathBuf,
    },
    /// Check a witness file against a hypergraph.
    Verify {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        spanning: bool,
        #[arg(long)]
        witness: PathBuf,
        input: PathBuf,
    },
    /// List vertex cuts of size one and two.
    Cuts { input: PathBuf },
    /// Print the reduction tree of the spanning decision.
    Reduce {
        #[arg(long, value_enum, default_value = "family")]
        mode: ModeArg,
        input: PathBuf,
    },
    /// Write a seeded random hypergraph.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "uniform")]
        structure: StructureArg,
        /// Vertex count (per part for cut structures), `k` or `lo..hi`.
        #[arg(long, default_value = "3..6", value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Edge count (per part for cut structures).
        #[arg(long, default_value = "3..8", value_parser = parse_range)]
        m: RangeInclusive<usize>,
        #[arg(long, default_value = "2..3", value_parser = parse_range)]
        edge_size: RangeInclusive<usize>,
        /// Parts sharing the pair (glued-2cut).
        #[arg(long, default_value_t = 2)]
        parts: usize,
        /// Extra edges equal to the shared pair (glued-2cut).
        #[arg(long, default_value_t = 0)]
        parallel: usize,
        /// Number of degree-2 cut vertices (deg2-cut).
        #[arg(long, default_value_t = 3)]
        cut_size: usize,
        #[arg(short = 'o', long, default_value = "-")]
        output: PathBuf,
    },
    /// Decide by exhaustive enumeration (small inputs only).
    Oracle {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        spanning: bool,
        input: PathBuf,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("expected a number, found `{t}`"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok(num(lo)?..=num(hi)?)
        }
        None => {
            let k = num(s)?;
            Ok(k..=k)
        }
    }
}

/// A failure that ends the command with the given exit code.
struct Fail(u8, String);

fn usage(msg: impl Into<String>) -> Fail {
    Fail(USAGE, msg.into())
}

fn read_input(path: &Path) -> Result<String, Fail> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Hypergraph, Fail> {
    let text = read_input(path)?;
    parse_hypergraph(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Writes to standard output; a closed pipe is not an error.
fn emit(text: &str) -> Result<(), Fail> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Fail(INTERNAL, e.to_string())),
        _ => Ok(()),
    }
}

fn write_output(path: &Path, text: &str) -> Result<(), Fail> {
    if path == Path::new("-") {
        emit(text)
    } else {
        fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn report(h: &Hypergraph, d: &Decision, mode: Mode, spanning: bool, out: Option<&Path>) -> Result<u8, Fail> {
    match &d.witness {
        Some(w) => {
            check_witness(h, w, mode, spanning)?;
            let text = format_witness(w);
            emit(&format!("YES\n{text}"))?;
            if let Some(p) = out {
                write_output(p, &text)?;
            }
            Ok(YES)
        }
        None => {
            match &d.reason {
                Some(r) => emit(&format!("NO: {r}\n"))?,
                None => emit("NO\n")?,
            }
            Ok(NO)
        }
    }
}

fn check_witness(h: &Hypergraph, w: &EulerFamily, mode: Mode, spanning: bool) -> Result<(), Fail> {
    verify_witness(h, w, mode, spanning)
        .map_err(|v| Fail(INTERNAL, format!("internal error: witness failed verification: {v}")))
}

fn run(cli: Cli) -> Result<u8, Fail> {
    match cli.command {
        Command::Decide { mode, spanning, direct: _, reduce, witness, input } => {
            let h = load(&input)?;
            let mode = Mode::from(mode);
            let d = if reduce && spanning {
                let (d, _) = decide_reduced(&h, mode).map_err(|e| Fail(INTERNAL, format!("internal error: {e}")))?;
                d
            } else {
                decide_direct(&h, mode, spanning).map_err(|e| Fail(INTERNAL, format!("internal error: {e}")))?
            };
            report(&h, &d, mode, spanning, witness.as_deref())
        }
        Command::Verify { mode, spanning, witness, input } => {
            let h = load(&input)?;
            let text = read_input(&witness)?;
            let w = parse_witness(&text).map_err(|e| usage(format!("{}: {e}", witness.display())))?;
            match verify_witness(&h, &w, mode.into(), spanning) {
                Ok(()) => {
                    emit("ok\n")?;
                    Ok(YES)
                }
                Err(v) => {
                    emit(&format!("violation: {v}\n"))?;
                    Ok(NO)
                }
            }
        }
        Command::Cuts { input } => {
            let h = load(&input)?;
            if !h.is_connected() {
                return Err(usage("hypergraph is disconnected"));
            }
            let cuts = find_vertex_cuts(&h, 2);
            let mut out = String::new();
            for c in &cuts {
                let set: Vec<String> = c.set().iter().map(|v| v.to_string()).collect();
                let degrees: Vec<String> = c.degrees().iter().map(|d| d.to_string()).collect();
                let pairs: Vec<String> = c.pair_edges().iter().map(|e| e.to_string()).collect();
                let comps: Vec<String> = c
                    .components()
                    .iter()
                    .map(|cl| format!("{{{}}}", cl.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                out.push_str(&format!(
                    "S={{{}}} minimal={} degrees={} pair-edges={} components={}\n",
                    set.join(","),
                    if c.is_minimal() { "yes" } else { "no" },
                    degrees.join(","),
                    if pairs.is_empty() { "-".to_string() } else { pairs.join(",") },
                    comps.join(" "),
                ));
            }
            if cuts.is_empty() {
                out.push_str("no vertex cuts of size <= 2\n");
            }
            emit(&out)?;
            Ok(YES)
        }
        Command::Reduce { mode, input } => {
            let h = load(&input)?;
            let mode = Mode::from(mode);
            let (d, trace) = decide_reduced(&h, mode).map_err(|e| Fail(INTERNAL, format!("internal error: {e}")))?;
            emit(&trace.to_string())?;
            if let Some(w) = &d.witness {
                check_witness(&h, w, mode, true)?;
            }
            Ok(if d.is_yes() { YES } else { NO })
        }
        Command::Gen { seed, structure, n, m, edge_size, parts, parallel, cut_size, output } => {
            let structure = match structure {
                StructureArg::Uniform => Structure::Uniform,
                StructureArg::Glued1Cut => Structure::Glued1Cut,
                StructureArg::Glued2Cut => Structure::Glued2Cut { parts, parallel },
                StructureArg::Deg2Cut => Structure::Deg2Cut { cut_size },
            };
            let p = GeneratorParams { seed, n, m, edge_size, structure };
            let h = random_hypergraph(&p).map_err(|e| usage(e.to_string()))?;
            write_output(&output, &h.to_text())?;
            Ok(YES)
        }
        Command::Oracle { mode, spanning, input } => {
            let h = load(&input)?;
            let mode = Mode::from(mode);
            let d = brute_force_decide(&h, mode, spanning).map_err(|e| usage(e.to_string()))?;
            report(&h, &d, mode, spanning, None)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { YES };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("hypereuler: {msg}");
            ExitCode::from(code)
        }
    }
}
