//! Command-line surface. Exit codes: 0 success, 1 well-formed negative
//! result (failed verification, no path within bounds, invalid diagram under
//! `validate`), 2 input error.

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::canonical::canonical_key;
use crate::code::{parse_gauss_code, print_gauss_code};
use crate::diagram::GaussDiagram;
use crate::macros::verify_macro_table;
use crate::moves::{apply_move, enumerate_moves, Insertions, KindSet, MoveInstance, MoveKind, MoveParams};
use crate::oracle::{find_path, reachable, SearchBounds};
use crate::random::{random_bounded, rng_from_seed};
use crate::trace::{read_trace, write_trace};
use crate::unknot::{unknot, verify_trace, Trace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twisted-gauss", version, about = "Twisted-knot Gauss diagrams: moves, unknotting, search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report counts and canonical key for each code
    Parse(Codes),
    /// Print each code normalized (or its canonical representative)
    Print {
        #[command(flatten)]
        codes: Codes,
        #[arg(long)]
        canonical: bool,
    },
    /// Check each code; exit 1 if any is malformed
    Validate(Codes),
    /// Apply one primitive move and print the result
    Apply {
        code: String,
        #[arg(long = "move")]
        kind: MoveKind,
        #[arg(long)]
        site: usize,
        /// Parameter text as printed by `enumerate`
        #[arg(long, default_value = "-")]
        params: String,
    },
    /// List applicable move instances
    Enumerate {
        code: String,
        #[arg(long, value_parser = parse_kinds, default_value = "R1_DEL,R2_DEL,R3,T2_DEL,T3_FWD,T3_BWD,T4_DEL,F1,F2,F3,F4")]
        kinds: KindSet,
        /// Also list canonical insertions
        #[arg(long)]
        insertions: bool,
    },
    /// Reduce to a chordless diagram with at most one bar; prints the terminal code
    Unknot {
        #[command(flatten)]
        codes: Codes,
        /// Write the trace (single input only)
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Unknot seeded random diagrams instead of reading codes
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_chords: usize,
        #[arg(long, default_value_t = 4)]
        max_bars: usize,
    },
    /// Replay a trace file
    Verify {
        #[arg(long)]
        trace: PathBuf,
    },
    /// Check every derived-move expansion
    MacroCheck {
        /// Tab-separated table instead of text
        #[arg(long)]
        table: bool,
    },
    /// List keys reachable within bounds with their depths
    Search {
        code: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Look for a move path between two codes
    Equiv {
        from: String,
        to: String,
        #[command(flatten)]
        bounds: BoundArgs,
        /// Write the path as a trace
        #[arg(long)]
        trace: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct Codes {
    /// Gauss codes; read from standard input (one per line) when absent
    pub codes: Vec<String>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, value_parser = parse_kinds, default_value = "R1,R2,R3,T2,T3,T4,F1,F2,F3,F4")]
    pub kinds: KindSet,
    #[arg(long, default_value_t = 8)]
    pub max_depth: usize,
    #[arg(long, default_value_t = 200_000)]
    pub max_states: usize,
    #[arg(long, default_value_t = 16)]
    pub max_entities: usize,
    /// Entities insertions may add above the start length
    #[arg(long, default_value_t = 0)]
    pub insertions: usize,
}

impl BoundArgs {
    fn bounds(&self) -> SearchBounds {
        SearchBounds {
            max_entities: self.max_entities,
            max_depth: self.max_depth,
            max_states: self.max_states,
            kinds: self.kinds,
            insertion_budget: self.insertions,
        }
    }
}

fn parse_kinds(s: &str) -> Result<KindSet, String> {
    KindSet::parse_list(s).map_err(|e| e.to_string())
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Failure carrying its exit code.
struct Exit(i32, String);

fn input(msg: impl ToString) -> Exit {
    Exit(EXIT_INPUT, msg.to_string())
}

impl Io<'_> {
    fn codes(&mut self, given: &[String]) -> Result<Vec<String>, Exit> {
        if !given.is_empty() {
            return Ok(given.to_vec());
        }
        self.stdin.lines().collect::<Result<_, _>>().map_err(input)
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<(), Exit> {
        writeln!(self.out, "{}", s.as_ref()).map_err(|e| Exit(EXIT_INPUT, e.to_string()))
    }
}

fn diagram(code: &str) -> Result<GaussDiagram, Exit> {
    parse_gauss_code(code).map_err(|e| input(format!("{code:?}: {e}")))
}

/// Runs the command line `argv` (program name first).
pub fn run<I, T>(argv: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<i32, Exit> {
    match cmd {
        Command::Parse(c) => {
            for code in io.codes(&c.codes)? {
                let d = diagram(&code)?;
                let (chords, bars) = d.counts();
                io.line(format!("code={d} chords={chords} bars={bars} key={}", canonical_key(&d)))?;
            }
            Ok(EXIT_OK)
        }
        Command::Print { codes, canonical } => {
            for code in io.codes(&codes.codes)? {
                let d = diagram(&code)?;
                let text = if canonical { canonical_key(&d).to_string() } else { print_gauss_code(&d) };
                io.line(text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Validate(c) => {
            let mut status = EXIT_OK;
            for code in io.codes(&c.codes)? {
                match parse_gauss_code(&code) {
                    Ok(_) => io.line(format!("valid\t{code}"))?,
                    Err(e) => {
                        status = EXIT_NEGATIVE;
                        io.line(format!("invalid\t{code}\t{e}"))?;
                    }
                }
            }
            Ok(status)
        }
        Command::Apply { code, kind, site, params } => {
            let d = diagram(&code)?;
            let params = MoveParams::parse(kind, &params).map_err(input)?;
            let after = apply_move(&d, &MoveInstance::new(kind, site, params)).map_err(input)?;
            io.line(print_gauss_code(&after))?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { code, kinds, insertions } => {
            let d = diagram(&code)?;
            let policy = if insertions { Insertions::Canonical } else { Insertions::Skip };
            for m in enumerate_moves(&d, kinds, policy) {
                io.line(format!("{}\t{}\t{}", m.kind, m.site, m.params))?;
            }
            Ok(EXIT_OK)
        }
        Command::Unknot { codes, trace, seed, count, max_chords, max_bars } => {
            let inputs: Vec<GaussDiagram> = match seed {
                Some(seed) => {
                    let mut rng = rng_from_seed(seed);
                    (0..count).map(|_| random_bounded(&mut rng, max_chords, max_bars)).collect()
                }
                None => io.codes(&codes.codes)?.iter().map(|c| diagram(c)).collect::<Result<_, _>>()?,
            };
            if trace.is_some() && inputs.len() != 1 {
                return Err(input("--trace needs exactly one input"));
            }
            for d in &inputs {
                let t = unknot(d);
                if let Some(path) = &trace {
                    fs::write(path, write_trace(&t)).map_err(|e| input(format!("{}: {e}", path.display())))?;
                }
                if seed.is_some() {
                    io.line(format!("{d}\t{}\t{}", t.len(), t.terminal))?;
                } else {
                    io.line(print_gauss_code(&t.terminal))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { trace } => {
            let text = fs::read_to_string(&trace).map_err(|e| input(format!("{}: {e}", trace.display())))?;
            let t = read_trace(&text).map_err(input)?;
            match verify_trace(&t) {
                Ok(()) => {
                    io.line(format!("ok\t{} steps\t{}", t.len(), t.terminal))?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    io.line(format!("failed\t{e}"))?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::MacroCheck { table } => {
            let report = verify_macro_table();
            if table {
                write!(io.out, "{}", report.to_table()).map_err(input)?;
            } else {
                io.line(report.to_string())?;
            }
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Search { code, bounds } => {
            let d = diagram(&code)?;
            let (keys, complete) = match reachable(&d, &bounds.bounds()) {
                Ok(k) => (k, true),
                Err(e) => (e.partial, false),
            };
            let mut rows: Vec<_> = keys.into_iter().collect();
            rows.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
            for (k, depth) in rows {
                io.line(format!("{depth}\t{k}"))?;
            }
            if complete {
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(io.err, "state budget exhausted; listing is partial");
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Equiv { from, to, bounds, trace } => {
            let (d1, d2) = (diagram(&from)?, diagram(&to)?);
            match find_path(&d1, &d2, &bounds.bounds()) {
                Ok(Some(path)) => {
                    let t = Trace::from_moves(&d1, &path).expect("search paths replay");
                    if let Some(p) = &trace {
                        fs::write(p, write_trace(&t)).map_err(|e| input(format!("{}: {e}", p.display())))?;
                    }
                    io.line(format!("path\t{}", path.len()))?;
                    for m in &path {
                        io.line(format!("{}\t{}\t{}", m.kind, m.site, m.params))?;
                    }
                    Ok(EXIT_OK)
                }
                Ok(None) => {
                    io.line("not found within bounds")?;
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => {
                    io.line(format!("not found within bounds ({e})"))?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}
