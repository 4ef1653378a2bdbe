//! Command-line verifier for the 112-curve configurations.
//!
//! Exit codes: 0 when every requested check passes (refuted printed claims
//! included), 1 on a failed check, 2 on usage or I/O errors.

pub mod export;
pub mod graphs;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use graphs::{find_isomorphism, load, sixteen_ten_correspondence, GraphKind};
use report::{Check, Report, Status};
use suites::{run_suite, Fault, Inputs, Suite};

#[derive(Parser, Debug)]
#[command(name = "k3w", version, about = "Exact verification of the 112-curve configurations in characteristic 3")]
pub struct Cli {
    /// Worker threads (defaults to K3W_JOBS, then to the number of CPUs).
    #[arg(long, global = true, env = "K3W_JOBS")]
    pub jobs: Option<usize>,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Zero all timings so reports are byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub stable: bool,
    #[arg(long, global = true, hide = true, value_enum)]
    pub fault: Option<Fault>,
    #[arg(long, global = true, hide = true)]
    pub fixture_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    All,
    Golay,
    Leech,
    Fermat,
    Quadric,
    Abelian,
    Kummer,
    Iso,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites.
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
    /// Find and verify an isomorphism between two of the 112-vertex graphs.
    Iso {
        #[arg(long, value_enum)]
        left: GraphKind,
        #[arg(long, value_enum)]
        right: GraphKind,
        /// Write the bijection as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a configuration to a file.
    Export {
        #[arg(long, value_enum)]
        what: export::What,
        #[arg(long, value_enum, default_value = "json")]
        format: export::Format,
        #[arg(long)]
        out: PathBuf,
    },
}

impl Target {
    fn suites(self) -> Vec<Suite> {
        match self {
            Target::All => Suite::ALL.to_vec(),
            Target::Golay => vec![Suite::Golay],
            Target::Leech => vec![Suite::Leech],
            Target::Fermat => vec![Suite::Fermat],
            Target::Quadric => vec![Suite::Quadric],
            Target::Abelian => vec![Suite::Abelian],
            Target::Kummer => vec![Suite::Kummer],
            Target::Iso => vec![Suite::Iso],
        }
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn inputs(cli: &Cli) -> Result<Inputs> {
    let mut inputs = Inputs { fault: cli.fault, ..Inputs::default() };
    if let Some(dir) = &cli.fixture_dir {
        let read = |name: &str| -> Result<String> {
            let p = dir.join(name);
            std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))
        };
        inputs.left_table = read("four_torsion_left.csv")?;
        inputs.right_table = read("four_torsion_right.csv")?;
    }
    Ok(inputs)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn execute(cli: &Cli) -> Result<i32> {
    if let Some(n) = cli.jobs {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let inputs = inputs(cli)?;
    let start = Instant::now();
    let (report, extra_status) = match &cli.command {
        Command::Verify { target } => (verify(*target, &inputs, cli.stable), None),
        Command::Iso { left, right, out } => iso(*left, *right, out.as_deref())?,
        Command::Export { what, format, out } => {
            let text = export::render(*what, *format, &inputs)?;
            write_file(out, &text)?;
            println!("wrote {}", out.display());
            return Ok(0);
        }
    };
    let mut report = report;
    report.elapsed_ms = if cli.stable { 0 } else { start.elapsed().as_millis() as u64 };
    print_report(&report);
    if let Some(path) = &cli.report {
        let mut text = serde_json::to_string_pretty(&report)?;
        text.push('\n');
        write_file(path, &text)?;
    }
    let status = extra_status.unwrap_or(report.status);
    Ok(i32::from(status == Status::Fail))
}

fn verify(target: Target, inputs: &Inputs, stable: bool) -> Report {
    let suites = target.suites();
    // shared data is built before dispatch: a worker blocked on a lazy
    // initializer that itself waits on the pool would deadlock
    if suites.iter().any(|s| matches!(s, Suite::Leech | Suite::Iso)) {
        let _ = suites::leech_data();
    }
    if suites.iter().any(|s| matches!(s, Suite::Fermat | Suite::Iso)) {
        let _ = suites::fermat_lines();
    }
    let results: Vec<(Suite, Vec<Check>, u128)> = suites
        .par_iter()
        .map(|&s| {
            let t = Instant::now();
            let checks = run_suite(s, inputs);
            (s, checks, t.elapsed().as_millis())
        })
        .collect();
    let single = results.len() == 1;
    let mut checks = Vec::new();
    for (s, cs, ms) in results {
        if !stable {
            eprintln!("{} finished in {ms} ms", s.name());
        }
        for mut c in cs {
            if !single {
                c.id = format!("{}/{}", s.name(), c.id);
            }
            checks.push(c);
        }
    }
    let name = if single { suites[0].name() } else { "all" };
    Report::new(name, checks, 0)
}

fn iso(left: GraphKind, right: GraphKind, out: Option<&Path>) -> Result<(Report, Option<Status>)> {
    const A: &str = "graph isomorphism with explicit bijection";
    let (l, r) = (load(left).map_err(anyhow::Error::msg)?, load(right).map_err(anyhow::Error::msg)?);
    let mut checks = Vec::new();
    let map = find_isomorphism(&l, &r).map_err(anyhow::Error::msg)?;
    checks.push(Check::truth(&format!("{} ~ {}", l.name, r.name), A, map.is_some()));
    let mut payload = json!({"left": l.name, "right": r.name, "isomorphic": map.is_some()});
    if let Some(map) = &map {
        payload["map"] = json!(map
            .iter()
            .enumerate()
            .map(|(i, &j)| json!({"left": i, "left_name": l.vertex_names[i], "right": j, "right_name": r.vertex_names[j]}))
            .collect::<Vec<_>>());
        if l.sixteen_ten.is_some() && r.sixteen_ten.is_some() {
            let st = sixteen_ten_correspondence(&l, &r).map_err(anyhow::Error::msg)?;
            checks.push(Check::truth("(16)_10 sides correspond", A, st.is_some()).with_witness(st.as_ref().map(|s| s.swapped)));
            payload["sixteen_ten_swapped"] = json!(st.map(|s| s.swapped));
        }
    }
    if let Some(path) = out {
        let mut text = serde_json::to_string_pretty(&payload)?;
        text.push('\n');
        write_file(path, &text)?;
    }
    Ok((Report::new("iso", checks, 0), None))
}

fn print_report(r: &Report) {
    let mut out = std::io::stdout().lock();
    for c in &r.checks {
        let _ = writeln!(out, "{:<8} {}", c.status.to_string(), c.id);
        if c.status != Status::Pass {
            let _ = writeln!(out, "         expected {} got {}", c.expected, c.actual);
            if !c.witness.is_null() {
                let w = c.witness.to_string();
                let w = if w.len() > 400 { format!("{}...", &w[..w.floor_char_boundary(400)]) } else { w };
                let _ = writeln!(out, "         witness {w}");
            }
        }
    }
    let (pass, fail, refuted) = r.checks.iter().fold((0, 0, 0), |(p, f, x), c| match c.status {
        Status::Pass => (p + 1, f, x),
        Status::Fail => (p, f + 1, x),
        Status::Refuted => (p, f, x + 1),
    });
    let _ = writeln!(out, "{}: {} ({pass} pass, {fail} fail, {refuted} refuted) in {} ms", r.suite, r.status, r.elapsed_ms);
}
