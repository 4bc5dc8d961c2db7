use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use idealtop::demo::{self, DemoName};
use idealtop::json::{parse_instance, parse_json, IdealJson, MapJson, SpaceJson, TopologyJson};
use idealtop::search::{find_counterexample, verify_exhaustive, SearchBounds, SearchMode};
use idealtop::{
    check, enumerate_ideals, enumerate_maps, enumerate_topologies, Error, IdealSpace, SubsetMask, TheoremId, Topology,
};

/// Finite ideal topological spaces: operators, theorem checkers and exhaustive search.
///
/// Exit status: 0 ok or certified, 1 counterexample or unconfirmed prediction,
/// 2 bad input or usage.
#[derive(Parser)]
#[command(name = "idealtop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one operator to an ideal space read from a JSON file.
    Star {
        space: PathBuf,
        operator: Operator,
        /// Subset such as `{0,2}`, `[0,2]` or `0,2`; required by local, clstar and psi.
        subset: Option<String>,
        /// Also write the result as JSON (`-` for standard output).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run theorem checkers on an instance file.
    Check {
        instance: PathBuf,
        /// Theorem ids, or `all`.
        #[arg(required = true)]
        theorems: Vec<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Certify a theorem over all small instances, or hunt for counterexamples
    /// after dropping hypotheses.
    Search {
        theorem: String,
        /// Hypotheses to drop; the search then targets the designated conclusion.
        #[arg(long, value_delimiter = ',')]
        drop: Vec<String>,
        /// Point cap for both sides.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long)]
        max_n_dom: Option<usize>,
        #[arg(long)]
        max_n_cod: Option<usize>,
        #[arg(long, env = "IDEALTOP_WORKERS")]
        workers: Option<usize>,
        /// Only use ideals with these carriers (repeatable; non-certifying).
        #[arg(long = "ideal-carrier")]
        ideal_carriers: Vec<String>,
        /// Check this many uniformly drawn instances instead (non-certifying).
        #[arg(long, requires = "seed")]
        samples: Option<u64>,
        #[arg(long, requires = "samples")]
        seed: Option<u64>,
        /// One line per finished block on standard error.
        #[arg(long)]
        progress: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Replay a counterexample construction and test its predicted failure.
    Demo {
        #[arg(value_parser = parse_demo)]
        name: DemoName,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List topologies, ideals or maps in canonical order, one JSON object per line.
    Enumerate {
        #[arg(long)]
        what: Kind,
        #[arg(long)]
        n: usize,
        /// Codomain size for maps; defaults to `--n`.
        #[arg(long)]
        n_cod: Option<usize>,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Operator {
    Local,
    Clstar,
    Psi,
    #[value(name = "tau_star")]
    TauStar,
    #[value(name = "psi_tau")]
    PsiTau,
    Compat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Topologies,
    Ideals,
    Maps,
}

fn parse_demo(s: &str) -> Result<DemoName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Errors that end the run with status 2.
#[derive(Debug)]
struct Fatal(String);

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        Fatal(e.to_string())
    }
}

type Outcome = Result<bool, Fatal>;

fn read(path: &Path) -> Result<String, Fatal> {
    fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Fatal> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Fatal(e.to_string()))?;
    if path == Path::new("-") {
        println!("{text}");
        Ok(())
    } else {
        fs::write(path, text + "\n").map_err(|e| Fatal(format!("{}: {e}", path.display())))
    }
}

fn parse_subset(text: &str, n: usize) -> Result<SubsetMask, Fatal> {
    let inner = text.trim().trim_start_matches(['{', '[']).trim_end_matches(['}', ']']);
    let points = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| Fatal(format!("bad point `{p}` in subset `{text}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubsetMask::try_from_points(n, &points)?)
}

fn parse_theorems(ids: &[String]) -> Result<Vec<TheoremId>, Fatal> {
    if ids.len() == 1 && ids[0].eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    Ok(ids.iter().map(|s| s.parse()).collect::<idealtop::Result<_>>()?)
}

fn format_opens(t: &Topology) -> String {
    let opens: Vec<String> = t.opens().iter().map(|o| o.to_string()).collect();
    format!("[{}]", opens.join(", "))
}

fn cmd_star(path: &Path, op: Operator, subset: Option<&str>, json: Option<&Path>) -> Outcome {
    let doc: SpaceJson = parse_json(&read(path)?)?;
    let space: IdealSpace = doc.to_space()?;
    let labels = doc.topology.labels.clone();
    let subset = |s: &IdealSpace| -> Result<SubsetMask, Fatal> {
        let text = subset.ok_or_else(|| Fatal("this operator needs a subset argument".into()))?;
        parse_subset(text, s.n())
    };
    let topology_out = |t: Topology| -> Result<(), Fatal> {
        println!("{}", format_opens(&t));
        if let Some(p) = json {
            write_json(p, &TopologyJson { labels: labels.clone(), ..TopologyJson::from(&t) })?;
        }
        Ok(())
    };
    let set_out = |a: SubsetMask| -> Result<(), Fatal> {
        println!("{a}");
        if let Some(p) = json {
            write_json(p, &a)?;
        }
        Ok(())
    };
    match op {
        Operator::Local => set_out(space.local_function(subset(&space)?)?)?,
        Operator::Clstar => set_out(space.star_closure(subset(&space)?)?)?,
        Operator::Psi => set_out(space.psi(subset(&space)?)?)?,
        Operator::TauStar => topology_out(space.star_topology()?)?,
        Operator::PsiTau => topology_out(space.psi_topology()?)?,
        Operator::Compat => {
            let c = space.is_compatible();
            println!("{c}");
            if let Some(p) = json {
                write_json(p, &c)?;
            }
        }
    }
    Ok(true)
}

fn cmd_check(path: &Path, ids: &[String], json: Option<&Path>) -> Outcome {
    let theorems = parse_theorems(ids)?;
    let inst = parse_instance(&read(path)?)?;
    let verdicts = theorems.iter().map(|&t| check(t, &inst)).collect::<idealtop::Result<Vec<_>>>()?;
    println!("{inst}");
    for v in &verdicts {
        println!("{v}");
    }
    if let Some(p) = json {
        write_json(p, &verdicts)?;
    }
    Ok(!verdicts.iter().any(|v| v.is_violation()))
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    theorem: &str,
    drop: &[String],
    max_n: usize,
    max_n_dom: Option<usize>,
    max_n_cod: Option<usize>,
    workers: Option<usize>,
    ideal_carriers: &[String],
    sampling: Option<(u64, u64)>,
    progress: bool,
    json: Option<&Path>,
) -> Outcome {
    let theorem: TheoremId = theorem.parse()?;
    let mode = match sampling {
        Some((samples, seed)) => SearchMode::Sampled { seed, samples },
        None if !ideal_carriers.is_empty() => SearchMode::RestrictedIdeals(
            ideal_carriers
                .iter()
                .map(|c| parse_subset(c, idealtop::MAX_POINTS))
                .collect::<Result<_, _>>()?,
        ),
        None => SearchMode::Exhaustive,
    };
    let bounds = SearchBounds {
        max_n_dom: max_n_dom.unwrap_or(max_n),
        max_n_cod: max_n_cod.unwrap_or(max_n),
        mode,
        workers,
        progress,
    };
    let report = if drop.is_empty() {
        verify_exhaustive(theorem, &bounds)?
    } else {
        let names: Vec<&str> = drop.iter().map(String::as_str).collect();
        find_counterexample(theorem, &names, &bounds)?
    };
    println!("{report}");
    eprintln!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
    if let Some(p) = json {
        write_json(p, &report)?;
    }
    Ok(report.certified)
}

fn cmd_demo(name: DemoName, json: Option<&Path>) -> Outcome {
    let report = demo::run(name)?;
    println!("{report}");
    if let Some(p) = json {
        write_json(p, &report)?;
    }
    Ok(report.confirmed())
}

fn cmd_enumerate(what: Kind, n: usize, n_cod: Option<usize>, count_only: bool) -> Outcome {
    let lines: Vec<String> = match what {
        Kind::Topologies => enumerate_topologies(n)?.iter().map(|t| to_line(&TopologyJson::from(t))).collect(),
        Kind::Ideals => enumerate_ideals(n)?.iter().map(|i| to_line(&IdealJson::from(i))).collect(),
        Kind::Maps => enumerate_maps(n, n_cod.unwrap_or(n))?.iter().map(|f| to_line(&MapJson::from(f))).collect(),
    };
    if count_only {
        println!("{}", lines.len());
        return Ok(true);
    }
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    for l in lines {
        // A closed pipe (`| head`) just ends the listing.
        if writeln!(out, "{l}").is_err() {
            return Ok(true);
        }
    }
    let _ = out.flush();
    Ok(true)
}

fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Star { space, operator, subset, json } => cmd_star(&space, operator, subset.as_deref(), json.as_deref()),
        Command::Check { instance, theorems, json } => cmd_check(&instance, &theorems, json.as_deref()),
        Command::Search {
            theorem,
            drop,
            max_n,
            max_n_dom,
            max_n_cod,
            workers,
            ideal_carriers,
            samples,
            seed,
            progress,
            json,
        } => cmd_search(
            &theorem,
            &drop,
            max_n,
            max_n_dom,
            max_n_cod,
            workers,
            &ideal_carriers,
            samples.zip(seed),
            progress,
            json.as_deref(),
        ),
        Command::Demo { name, json } => cmd_demo(name, json.as_deref()),
        Command::Enumerate { what, n, n_cod, count_only } => cmd_enumerate(what, n, n_cod, count_only),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
