use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use nakayama::catalog::write_catalog;
use nakayama::enumeration::{spectrum_report, JOBS_ENV};
use nakayama::verify::{self, Suite};
use nakayama::{
    cover, epsilon, epsilon_chain, find_higher_auslander, parse_algebra, reverse_epsilon, Algebra,
    Error, Family, HomologicalSummary, SearchConfig, Shape,
};

#[derive(Parser)]
#[command(
    name = "nakayama",
    version,
    about = "Homological invariants of Nakayama algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the homological summary of an algebra
    Analyze {
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the syzygy filtered algebra
    Epsilon {
        algebra: String,
        /// Print the whole chain until it leaves the cyclic algebras
        #[arg(long)]
        iterate: bool,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// Build the cyclic algebra whose syzygy filtered algebra is the input
    Reverse {
        algebra: String,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Same as reverse, printing every step with its invariants
    Chain {
        algebra: String,
        #[arg(long)]
        steps: usize,
    },
    /// Print the m-fold cover
    Cover { algebra: String, m: usize },
    /// Print a member of a named family (ladder, gustafson, comb, staircase,
    /// bracket, stacked)
    Family { name: String, params: Vec<u32> },
    /// Global dimensions of higher Auslander algebras of rank n
    Spectrum {
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
        /// Entry bound for the stability probe (default 2n + 2)
        #[arg(long)]
        probe: Option<u32>,
    },
    /// List higher Auslander algebras of rank n and global dimension k
    Find {
        n: usize,
        k: u32,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite
    Verify {
        suite: Suite,
        #[arg(long, env = JOBS_ENV)]
        jobs: Option<usize>,
    },
    /// Write every higher Auslander algebra of rank n as JSON lines
    Catalog {
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Largest Kupisch entry searched (default 2n - 1)
    #[arg(long)]
    max_entry: Option<u32>,
    /// Worker threads
    #[arg(long, env = JOBS_ENV)]
    jobs: Option<usize>,
    /// Also search connected linear algebras
    #[arg(long)]
    include_linear: bool,
}

impl SearchArgs {
    fn config(&self, n: usize) -> SearchConfig {
        let mut cfg = SearchConfig::new(n);
        if let Some(m) = self.max_entry {
            cfg.max_entry = m;
        }
        if let Some(j) = self.jobs {
            cfg.jobs = j;
        }
        cfg.include_linear = self.include_linear;
        cfg
    }
}

enum Failure {
    Input(Error),
    Verification(String),
    Other(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyInput
            | Error::InvalidKupisch(_)
            | Error::Parse(_)
            | Error::VertexOutOfRange { .. }
            | Error::InvalidModule { .. }
            | Error::NotCyclic
            | Error::BadParams(_) => Failure::Input(e),
            other => Failure::Other(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Other(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn shape_name(a: &Algebra) -> &'static str {
    match a.shape() {
        Shape::Cyclic => "cyclic",
        Shape::Linear => "linear",
        Shape::NakayamaCycle => "nakayama cycle",
        Shape::Semisimple => "semisimple",
    }
}

#[derive(Serialize)]
struct AnalyzeJson<'a> {
    series: String,
    shape: &'static str,
    rank: usize,
    semisimple: bool,
    #[serde(flatten)]
    summary: &'a HomologicalSummary,
}

fn print_summary(a: &Algebra) {
    let s = a.summary();
    println!("algebra           {a}");
    println!("shape             {}", shape_name(a));
    println!("rank              {}", a.rank());
    println!("gldim             {}", s.gldim);
    println!("domdim            {}", s.domdim);
    println!("findim            {}", s.findim);
    println!("defect            {}", s.defect);
    println!("relations         {}", s.num_relations);
    println!("self_injective    {}", s.is_self_injective);
    println!("gorenstein        {}", s.is_gorenstein);
    println!("higher_auslander  {}", s.is_higher_auslander);
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Analyze { algebra, json } => {
            let a = parse_algebra(&algebra)?;
            if json {
                let s = a.summary();
                let out = AnalyzeJson {
                    series: a.to_string(),
                    shape: shape_name(&a),
                    rank: a.rank(),
                    semisimple: a.is_semisimple(),
                    summary: &s,
                };
                println!(
                    "{}",
                    serde_json::to_string(&out).context("serializing summary")?
                );
            } else {
                print_summary(&a);
            }
        }
        Command::Epsilon {
            algebra,
            iterate,
            max_steps,
        } => {
            let a = parse_algebra(&algebra)?;
            if iterate {
                for b in epsilon_chain(&a, max_steps)? {
                    println!("{b}");
                }
            } else {
                println!("{}", epsilon(&a)?);
            }
        }
        Command::Reverse { algebra, steps } => {
            let mut cur = parse_algebra(&algebra)?;
            for _ in 0..steps {
                let r = reverse_epsilon(&cur)?;
                if !r.higher_auslander_input {
                    eprintln!("note: {cur} is not higher Auslander, the result need not be unique");
                }
                cur = r.algebra;
                println!("{cur}");
            }
        }
        Command::Chain { algebra, steps } => {
            let mut cur = parse_algebra(&algebra)?;
            let s = cur.summary();
            println!(
                "{cur}  rank {} gldim {} domdim {}",
                cur.rank(),
                s.gldim,
                s.domdim
            );
            for _ in 0..steps {
                cur = reverse_epsilon(&cur)?.algebra;
                let s = cur.summary();
                println!(
                    "{cur}  rank {} gldim {} domdim {}",
                    cur.rank(),
                    s.gldim,
                    s.domdim
                );
            }
        }
        Command::Cover { algebra, m } => {
            let a = parse_algebra(&algebra)?;
            println!("{}", cover(&a, m)?);
        }
        Command::Family { name, params } => {
            let a = Family::from_params(&name, &params)?.algebra()?;
            println!("{a}");
        }
        Command::Spectrum { n, search, probe } => {
            let mut cfg = search.config(n);
            cfg.stability_probe = Some(probe.unwrap_or(2 * n as u32 + 2).max(cfg.max_entry));
            let report = spectrum_report(&cfg)?;
            println!("found     {:?}", report.found);
            println!("expected  {:?}", report.expected);
            if let Some(p) = &report.probe {
                println!(
                    "probe     {:?} (max entry {})",
                    p,
                    cfg.stability_probe.unwrap()
                );
            }
            if report.passed() {
                println!("PASS");
            } else {
                println!("FAIL");
                return Err(Failure::Verification(format!("spectrum of rank {n}")));
            }
        }
        Command::Find { n, k, search, json } => {
            let cfg = search.config(n);
            for r in find_higher_auslander(&cfg, k)? {
                if json {
                    println!(
                        "{}",
                        serde_json::to_string(&r).context("serializing record")?
                    );
                } else {
                    println!("{}", r.algebra);
                }
            }
        }
        Command::Verify { suite, jobs } => {
            let checks = verify::run(
                suite,
                jobs.unwrap_or_else(nakayama::enumeration::default_jobs),
            )?;
            let mut failed = 0;
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                println!("{tag}  {}: {}", c.name, c.detail);
                failed += usize::from(!c.passed);
            }
            if failed > 0 {
                return Err(Failure::Verification(format!(
                    "{failed} of {} checks in {suite}",
                    checks.len()
                )));
            }
        }
        Command::Catalog { n, search, out } => {
            let cfg = search.config(n);
            let records = nakayama::catalog(&cfg)?;
            let file = File::create(&out).with_context(|| format!("creating {}", out.display()))?;
            let mut w = BufWriter::new(file);
            write_catalog(&mut w, &cfg, &records)?;
            w.flush()?;
            eprintln!("wrote {} records to {}", records.len(), out.display());
        }
    }
    Ok(())
}
