use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use cliquereconf_core::analysis::verify_theorem;
use cliquereconf_core::clique::{enumerate_k_cliques, maximal_cliques, maximum_clique};
use cliquereconf_core::corpus::{generate_corpus_with, generate_one};
use cliquereconf_core::io::{parse_edge_list, write_dot, write_edge_list};
use cliquereconf_core::reconf::{
    build_simplex, build_tar_lower, build_tar_upper, build_tj, build_ts, LabeledReconfGraph,
};
use cliquereconf_core::reconstruct::{reconstruct_ts, verify_reconstruction, ReconstructError};
use cliquereconf_core::{CorpusFamily, Graph, ReconfError, Report, Theorem};

use crate::{Cli, Command, FamilyArg, Format, Limits, RuleArg};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Violation = 1,
    Usage = 2,
    Timeout = 3,
}

/// Report as printed: a check result plus where it came from.
#[derive(Serialize)]
struct RunReport<'a> {
    theorem: &'a str,
    input: &'a str,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Value>,
    values: &'a Map<String, Value>,
    seed: Option<u64>,
    elapsed_ms: u64,
}

struct Clock {
    start: Instant,
    enabled: bool,
}

impl Clock {
    fn start(limits: &Limits) -> Self {
        Clock {
            start: Instant::now(),
            enabled: !limits.no_timing,
        }
    }

    fn ms(&self) -> u64 {
        if self.enabled {
            self.start.elapsed().as_millis() as u64
        } else {
            0
        }
    }
}

fn render(r: &Report, input: &str, seed: Option<u64>, elapsed_ms: u64) -> String {
    serde_json::to_string(&RunReport {
        theorem: &r.theorem,
        input,
        pass: r.pass,
        witness: r.witness.as_ref(),
        values: &r.values,
        seed,
        elapsed_ms,
    })
    .expect("report serializes")
}

fn status_of(pass: bool) -> Status {
    if pass {
        Status::Pass
    } else {
        Status::Violation
    }
}

fn timeout_of(limits: &Limits) -> Result<Option<Duration>> {
    match limits.timeout {
        None => Ok(None),
        Some(s) if s.is_finite() && s > 0.0 => Ok(Some(Duration::from_secs_f64(s))),
        Some(s) => bail!("timeout must be a positive number of seconds, got {s}"),
    }
}

/// Runs `f` on a worker thread; `None` if it does not finish in time.
fn with_timeout<T, F>(timeout: Option<Duration>, f: F) -> Option<T>
where
    T: Send + 'static,
    F: FnOnce() -> T + Send + 'static,
{
    let Some(limit) = timeout else {
        return Some(f());
    };
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let _ = tx.send(f());
    });
    rx.recv_timeout(limit).ok()
}

fn read_graph(path: &Path, limits: &Limits) -> Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let g = parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
    if g.vertex_count() > limits.max_vertices {
        bail!(
            "{} has {} vertices, above the limit of {} (see --max-vertices)",
            path.display(),
            g.vertex_count(),
            limits.max_vertices
        );
    }
    Ok(g)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn graph_json(g: &Graph) -> String {
    let nodes: Vec<String> = (0..g.vertex_count()).map(|v| g.name(v).into_owned()).collect();
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    json!({ "nodes": nodes, "edges": edges }).to_string() + "\n"
}

fn format_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Edgelist => write_edge_list(g),
        Format::Dot => write_dot(g),
        Format::Json => graph_json(g),
    }
}

fn format_reconf(r: &LabeledReconfGraph, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(&r.to_json()).expect("graph serializes") + "\n",
        other => format_graph(r.graph(), other),
    }
}

fn parse_theorem(name: &str) -> Result<Theorem> {
    name.parse::<Theorem>().map_err(|_| {
        let known: Vec<&str> = Theorem::ALL.iter().map(|t| t.as_str()).collect();
        anyhow!("unknown theorem {name:?}; expected one of {}", known.join(", "))
    })
}

pub fn run(cli: Cli) -> Result<Status> {
    let limits = cli.limits;
    let timeout = timeout_of(&limits)?;
    match cli.command {
        Command::Build {
            rule,
            k,
            input,
            out,
            format,
        } => {
            let g = read_graph(&input, &limits)?;
            let k = match (rule, k) {
                (RuleArg::Simplex, None) => 0,
                (RuleArg::Simplex, Some(_)) => bail!("--k does not apply to the simplex graph"),
                (_, Some(k)) => k,
                (_, None) => bail!("--k is required for rule {rule:?}"),
            };
            let Some(built) = with_timeout(timeout, move || build(&g, rule, k)) else {
                println!("{}", json!({ "command": "build", "timed_out": true }));
                return Ok(Status::Timeout);
            };
            emit(out.as_deref(), &format_reconf(&built?, format))?;
            Ok(Status::Pass)
        }
        Command::Cliques {
            input,
            k,
            maximum,
            format,
        } => {
            if format != Format::Json {
                bail!("cliques output is JSON only");
            }
            let g = read_graph(&input, &limits)?;
            let (kind, cliques) = match (k, maximum) {
                (Some(k), _) => ("k-cliques", enumerate_k_cliques(&g, k)),
                (None, true) => ("maximum", vec![maximum_clique(&g)]),
                (None, false) => ("maximal", maximal_cliques(&g)),
            };
            let names: Vec<Vec<String>> = cliques
                .iter()
                .map(|c| c.members().iter().map(|&v| g.name(v).into_owned()).collect())
                .collect();
            let mut doc = json!({ "kind": kind, "count": names.len(), "cliques": names });
            if let Some(k) = k {
                doc["k"] = json!(k);
            }
            println!("{doc}");
            Ok(Status::Pass)
        }
        Command::Reconstruct {
            k,
            input,
            out,
            format,
            verify,
        } => {
            let g = read_graph(&input, &limits)?;
            let clock = Clock::start(&limits);
            let name = input.display().to_string();
            if verify {
                let Some(report) = with_timeout(timeout, move || verify_reconstruction(&g)) else {
                    return timed_out("reconstruct", &name, &clock);
                };
                let report = report?;
                println!("{}", render(&report, &name, None, clock.ms()));
                return Ok(status_of(report.pass));
            }
            let k = k.expect("clap requires --k without --verify");
            let Some(h) = with_timeout(timeout, move || reconstruct_ts(&g, k)) else {
                return timed_out("reconstruct", &name, &clock);
            };
            match h {
                Ok(h) => {
                    emit(out.as_deref(), &format_graph(&h, format))?;
                    Ok(Status::Pass)
                }
                Err(ReconstructError::NotKGood(w)) => {
                    println!("{}", json!({ "input": name, "k_good": false, "witness": w }));
                    Ok(Status::Violation)
                }
                Err(ReconstructError::Reconf(e)) => Err(e.into()),
            }
        }
        Command::Verify { theorem, input, k } => {
            let theorem = parse_theorem(&theorem)?;
            let g = read_graph(&input, &limits)?;
            let name = input.display().to_string();
            let clock = Clock::start(&limits);
            let Some(report) = with_timeout(timeout, move || verify_theorem(theorem, &g, k)) else {
                return timed_out(theorem.as_str(), &name, &clock);
            };
            let report = report?;
            println!("{}", render(&report, &name, None, clock.ms()));
            Ok(status_of(report.pass))
        }
        Command::Corpus {
            family,
            n,
            count,
            seed,
            p,
            theorem,
            k,
            out_dir,
            threads,
        } => {
            if n > limits.max_vertices {
                bail!("n = {n} is above the limit of {} (see --max-vertices)", limits.max_vertices);
            }
            let family = match family {
                FamilyArg::RandomGnp => CorpusFamily::RandomGnp,
                FamilyArg::Planar => CorpusFamily::Planar,
                FamilyArg::Bipartite => CorpusFamily::Bipartite,
                FamilyArg::Trees => CorpusFamily::Trees,
            };
            let spec = CorpusSpec {
                family,
                n,
                count,
                seed,
                p,
            };
            match theorem {
                None => {
                    if k.is_some() || threads.is_some() {
                        bail!("--k and --threads apply only with --theorem");
                    }
                    write_corpus(&spec, out_dir.as_deref())
                }
                Some(t) => {
                    if out_dir.is_some() {
                        bail!("--out-dir applies only without --theorem");
                    }
                    let theorem = parse_theorem(&t)?;
                    run_corpus(&spec, theorem, k, threads, timeout, &limits)
                }
            }
        }
    }
}

fn build(g: &Graph, rule: RuleArg, k: usize) -> Result<LabeledReconfGraph, ReconfError> {
    Ok(match rule {
        RuleArg::Ts => build_ts(g, k)?,
        RuleArg::Tj => build_tj(g, k)?,
        RuleArg::TarLower => build_tar_lower(g, k),
        RuleArg::TarUpper => build_tar_upper(g, k),
        RuleArg::Simplex => build_simplex(g),
    })
}

fn timed_out(theorem: &str, input: &str, clock: &Clock) -> Result<Status> {
    println!(
        "{}",
        json!({ "theorem": theorem, "input": input, "timed_out": true, "elapsed_ms": clock.ms() })
    );
    Ok(Status::Timeout)
}

#[derive(Debug, Clone, Copy)]
struct CorpusSpec {
    family: CorpusFamily,
    n: usize,
    count: usize,
    seed: u64,
    p: f64,
}

impl CorpusSpec {
    fn header(&self, theorem: Option<Theorem>) -> String {
        let mut h = format!(
            "# corpus family={} n={} count={} seed={}",
            self.family, self.n, self.count, self.seed
        );
        if matches!(self.family, CorpusFamily::RandomGnp | CorpusFamily::Bipartite) {
            h += &format!(" p={}", self.p);
        }
        if let Some(t) = theorem {
            h += &format!(" theorem={t}");
        }
        h
    }

    fn input_name(&self, i: usize) -> String {
        format!("{}-{i:04}", self.family)
    }
}

fn write_corpus(spec: &CorpusSpec, out_dir: Option<&Path>) -> Result<Status> {
    let graphs = generate_corpus_with(spec.family, spec.n, spec.count, spec.seed, spec.p)?;
    match out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            for (i, g) in graphs.iter().enumerate() {
                let path: PathBuf = dir.join(format!("{}.edges", spec.input_name(i)));
                fs::write(&path, write_edge_list(g)).with_context(|| format!("writing {}", path.display()))?;
            }
            println!("{}", spec.header(None));
            println!("# wrote {} graphs to {}", graphs.len(), dir.display());
        }
        None => {
            println!("{}", spec.header(None));
            for (i, g) in graphs.iter().enumerate() {
                println!("# {}", spec.input_name(i));
                print!("{}", write_edge_list(g));
            }
        }
    }
    Ok(Status::Pass)
}

enum Line {
    Checked(Report),
    Skipped(String),
}

fn run_corpus(
    spec: &CorpusSpec,
    theorem: Theorem,
    k: Option<usize>,
    threads: Option<usize>,
    timeout: Option<Duration>,
    limits: &Limits,
) -> Result<Status> {
    // Validates the parameters before any work is fanned out.
    generate_corpus_with(spec.family, spec.n, 0, spec.seed, spec.p)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        if t == 0 {
            bail!("--threads must be at least 1");
        }
        pool = pool.num_threads(t);
    }
    let pool = pool.build()?;

    let clock = Clock::start(limits);
    let (tx, rx) = mpsc::channel::<(usize, Line, u64)>();
    let s = *spec;
    let no_timing = limits.no_timing;
    thread::spawn(move || {
        pool.install(|| {
            (0..s.count).into_par_iter().for_each_with(tx, |tx, i| {
                let started = Instant::now();
                let g = generate_one(s.family, s.n, s.seed, i as u64, s.p);
                let line = match verify_theorem(theorem, &g, k) {
                    Ok(r) => Line::Checked(r),
                    Err(e) => Line::Skipped(e.to_string()),
                };
                let ms = if no_timing { 0 } else { started.elapsed().as_millis() as u64 };
                let _ = tx.send((i, line, ms));
            });
        });
    });

    let deadline = timeout.map(|t| Instant::now() + t);
    let mut results: Vec<Option<(Line, u64)>> = (0..spec.count).map(|_| None).collect();
    let mut received = 0;
    let mut timed_out = false;
    while received < spec.count {
        let next = match deadline {
            Some(d) => rx.recv_timeout(d.saturating_duration_since(Instant::now())).ok(),
            None => rx.recv().ok(),
        };
        match next {
            Some((i, line, ms)) => {
                results[i] = Some((line, ms));
                received += 1;
            }
            None => {
                timed_out = true;
                break;
            }
        }
    }

    println!("{}", spec.header(Some(theorem)));
    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    for (i, slot) in results.iter().enumerate() {
        let name = spec.input_name(i);
        match slot {
            None => {}
            Some((Line::Checked(r), ms)) => {
                if r.pass {
                    passed += 1;
                } else {
                    failed += 1;
                }
                println!("{}", render(r, &name, Some(spec.seed), *ms));
            }
            Some((Line::Skipped(why), _)) => {
                skipped += 1;
                println!("{}", json!({ "theorem": theorem.as_str(), "input": name, "skipped": why }));
            }
        }
    }
    let mut summary = json!({
        "theorem": theorem.as_str(),
        "count": spec.count,
        "passed": passed,
        "failed": failed,
        "skipped": skipped,
        "seed": spec.seed,
        "elapsed_ms": clock.ms(),
    });
    if timed_out {
        summary["timed_out"] = json!(true);
        summary["completed"] = json!(received);
    }
    println!("# summary {summary}");
    Ok(if timed_out {
        Status::Timeout
    } else {
        status_of(failed == 0)
    })
}
