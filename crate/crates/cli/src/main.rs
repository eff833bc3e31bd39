//! `rsat`: verify graph files, emit constructions, run searches, check named
//! facts and print formula tables.
//!
//! Exit status: 0 when the property holds, 1 when it fails, 2 on usage,
//! input or resource errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use rsat_core::construct;
use rsat_core::family::{in_family_Fhat, lemma2_conclusion, lemma2_hypothesis, robust_clique_check};
use rsat_core::io::{read_file, write_file};
use rsat_core::search::{
    self, compute_f, compute_g_gprime, compute_sat, compute_sat_rainbow, enumerate_graphs, pattern_name, Bound,
    GraphFilter, Quantity, ResultCache, ResultRecord, SatVariant, SearchBudget,
};
use rsat_core::verify::{
    is_k_sat, is_k_semisat, is_rainbow_saturated, is_rainbow_semisaturated, is_rfree, is_sat, is_semisat,
    is_weakly_rainbow_saturated,
};
use rsat_core::{clique_number, AnyGraph, EdgeColoredGraph, Error, Graph, PatternGraph, VerificationReport, Witness};

#[derive(Parser)]
#[command(name = "rsat", version, about = "Rainbow saturation numbers of complete graphs")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph file against a saturation property.
    Verify(VerifyArgs),
    /// Write a construction to a file after verifying it.
    Construct(ConstructArgs),
    /// Exhaustive searches; results are appended to the cache.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Named facts.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Closed forms beside cached brute-force values.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Rfree,
    Rsat,
    Rsemisat,
    Rweak,
    Sat,
    Semisat,
    Ksat,
    Ksemisat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Clique order; the pattern is K_r unless --pattern is given.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Graph file holding the forbidden pattern H.
    #[arg(long)]
    pattern: Option<PathBuf>,
    input: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ehm,
    Gsemi,
    Gprime,
    GprimeRainbow,
    Lambda2,
    Lambda3,
    Lambda3Alt,
    Gamma,
    AltK5,
    NonstabLambda,
    Nonstab,
    Satk,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct BudgetArgs {
    /// Cache directory (default: $RSAT_CACHE or ./rsat-cache).
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Cap on candidate graphs generated.
    #[arg(long, default_value_t = 1_000_000_000)]
    max_nodes: u64,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 86_400)]
    time_limit: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Plain,
    Sat1,
    Ssat1,
    Satk,
}

#[derive(Subcommand)]
enum SearchCommand {
    /// f(k).
    F {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// g(k) and g'(k).
    G {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// sat(n, H) and its exchange variants.
    Sat {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        pattern: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "plain")]
        variant: VariantArg,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// sat(n, R(K_r)).
    SatRainbow {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// On one graph: if deleting any vertex keeps ω, the complement
    /// has a matching of size ω.
    Lemma2 { input: PathBuf },
    /// ω(G − S) = 4 for all |S| <= 2 where G is the Petersen complement.
    Petersen,
    /// Rainbow (semi)saturation of R(G) implies (K_r,1)-(semi)saturation of
    /// G, over every graph on at most n vertices.
    PropComparison {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    r: usize,
    /// Inclusive range A:B.
    #[arg(long, value_parser = parse_range)]
    n: (usize, usize),
    #[arg(long)]
    cache: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or("expected A:B")?;
    let a: usize = a.parse().map_err(|_| format!("bad number {a:?}"))?;
    let b: usize = b.parse().map_err(|_| format!("bad number {b:?}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

/// Verdict of a command that ran to completion.
enum Outcome {
    Holds,
    Fails,
}

type CmdResult = Result<Outcome, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Fails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Verify(a) => cmd_verify(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Search(s) => cmd_search(s),
        Command::Check(c) => cmd_check(c),
        Command::Table(t) => cmd_table(t),
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Error> {
    v.ok_or_else(|| usage(format!("--{flag} is required here")))
}

fn verdict_line(kind: &str, params: &str, report: &VerificationReport) -> Outcome {
    let mut line = format!("VERDICT {kind} {params} {}", if report.verdict { "holds" } else { "fails" });
    if report.witness != Witness::Holds {
        let _ = write!(line, " witness={}", report.witness);
    }
    println!("{line}");
    if report.verdict {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

fn load_pattern(path: &Option<PathBuf>, r: Option<usize>) -> Result<(PatternGraph, String), Error> {
    match (path, r) {
        (Some(p), _) => {
            let h = PatternGraph::new(read_file(p)?.into_plain())?;
            let name = pattern_name(&h);
            Ok((h, format!("h={name}")))
        }
        (None, Some(r)) => Ok((PatternGraph::clique(r), format!("r={r}"))),
        (None, None) => Err(usage("give --r or --pattern")),
    }
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let input = read_file(&a.input)?;
    let name = a.kind.to_possible_value().unwrap().get_name().to_string();
    let (report, params) = match a.kind {
        Kind::Rfree | Kind::Rsat | Kind::Rsemisat | Kind::Rweak => {
            let r = need(a.r, "r")?;
            let g = input.into_colored();
            let report = match a.kind {
                Kind::Rfree => is_rfree(&g, r),
                Kind::Rsat => is_rainbow_saturated(&g, r)?,
                Kind::Rsemisat => is_rainbow_semisaturated(&g, r)?,
                _ => is_weakly_rainbow_saturated(&g, r)?,
            };
            (report, format!("r={r}"))
        }
        Kind::Sat | Kind::Semisat | Kind::Ksat | Kind::Ksemisat => {
            let g = input.into_plain();
            let (h, hp) = load_pattern(&a.pattern, a.r)?;
            match a.kind {
                Kind::Sat => (is_sat(&g, &h), hp),
                Kind::Semisat => (is_semisat(&g, &h), hp),
                Kind::Ksat => (is_k_sat(&g, &h, a.k)?, format!("{hp} k={}", a.k)),
                _ => (is_k_semisat(&g, &h, a.k)?, format!("{hp} k={}", a.k)),
            }
        }
    };
    Ok(verdict_line(&name, &params, &report))
}

fn cmd_construct(a: ConstructArgs) -> CmdResult {
    use construct::*;
    let n = || need(a.n, "n");
    let r = || need(a.r, "r");
    let k = || need(a.k, "k");
    let plain = |g: Graph, ok: bool| (AnyGraph::Plain(g), ok);
    let colored = |g: EdgeColoredGraph, ok: bool| (AnyGraph::Colored(g), ok);
    let rsat = |g: EdgeColoredGraph, r: usize| -> Result<(AnyGraph, bool), Error> {
        let ok = is_rainbow_saturated(&g, r)?.verdict;
        Ok(colored(g, ok))
    };
    let (graph, verified) = match a.family {
        Family::Ehm => {
            let g = ehm_graph(n()?, r()?)?;
            let ok = is_sat(&g, &PatternGraph::clique(r()?)).verdict;
            plain(g, ok)
        }
        Family::Gsemi => {
            let g = g_semisat(n()?, r()?)?;
            let ok = is_k_semisat(&g, &PatternGraph::clique(r()?), 1)?.verdict;
            plain(g, ok)
        }
        Family::Gprime => {
            let g = g_prime(n()?, r()?)?;
            let ok = is_k_sat(&g, &PatternGraph::clique(r()?), 1)?.verdict;
            plain(g, ok)
        }
        Family::GprimeRainbow => rsat(g_prime_rainbow(n()?, r()?)?, r()?)?,
        Family::Lambda2 => {
            let g = lambda2();
            let ok = in_family_Fhat(&g, 2)?.verdict;
            colored(g, ok)
        }
        Family::Lambda3 | Family::Lambda3Alt => {
            let g = if matches!(a.family, Family::Lambda3) { lambda3() } else { lambda3_alt() };
            let ok = in_family_Fhat(&g, 3)?.verdict;
            colored(g, ok)
        }
        Family::Gamma => rsat(gamma_rn(r()?, n()?, None)?, r()?)?,
        Family::AltK5 => rsat(alt_k5(n()?)?, 5)?,
        Family::NonstabLambda => rsat(nonstab_lambda(r()?)?, r()?)?,
        Family::Nonstab => {
            let m = need(a.m, "m")?;
            let g = nonstab_assemble(r()?, n()?, m)?;
            let ok = g.edge_count() == m && g.vertex_count() == n()?;
            let (g, sat) = rsat(g, r()?)?;
            (g, ok && sat)
        }
        Family::Satk => {
            let g = satk_upper(n()?, r()?, k()?)?;
            let ok = is_k_sat(&g, &PatternGraph::clique(r()?), k()?)?.verdict;
            plain(g, ok)
        }
    };
    let family = a.family.to_possible_value().unwrap().get_name().to_string();
    if !verified {
        return Err(Error::Integrity(format!(
            "BUG: the {family} construction failed its own verifier; nothing was written"
        )));
    }
    write_file(&a.output, &graph)?;
    let (vn, vm) = match &graph {
        AnyGraph::Plain(g) => (g.vertex_count(), g.edge_count()),
        AnyGraph::Colored(g) => (g.vertex_count(), g.edge_count()),
    };
    println!("WROTE {family} n={vn} m={vm} verified file={}", a.output.display());
    Ok(Outcome::Holds)
}

fn budget_of(b: &BudgetArgs) -> Result<(SearchBudget, ResultCache), Error> {
    let budget = SearchBudget::new(
        search::MAX_ENUMERATION_VERTICES,
        b.max_nodes,
        Duration::from_secs(b.time_limit),
    )?;
    let cache = match &b.cache {
        Some(dir) => ResultCache::new(dir),
        None => ResultCache::from_env(),
    };
    Ok((budget, cache))
}

fn emit(cache: &ResultCache, mut recs: Vec<ResultRecord>) -> CmdResult {
    for rec in &mut recs {
        cache.store(rec)?;
        println!("{}", rec.to_line());
    }
    Ok(Outcome::Holds)
}

fn cmd_search(s: SearchCommand) -> CmdResult {
    match s {
        SearchCommand::F { k, n_max, budget } => {
            let (b, cache) = budget_of(&budget)?;
            emit(&cache, vec![compute_f(k, n_max, &b)?])
        }
        SearchCommand::G { k, budget } => {
            let (b, cache) = budget_of(&budget)?;
            let (g, gp) = compute_g_gprime(k, &b)?;
            emit(&cache, vec![g, gp])
        }
        SearchCommand::Sat {
            n,
            r,
            pattern,
            variant,
            k,
            budget,
        } => {
            let (b, cache) = budget_of(&budget)?;
            let (h, _) = load_pattern(&pattern, r)?;
            let variant = match variant {
                VariantArg::Plain => SatVariant::Plain,
                VariantArg::Sat1 => SatVariant::OneSat,
                VariantArg::Ssat1 => SatVariant::OneSemisat,
                VariantArg::Satk => SatVariant::KSat(k),
            };
            emit(&cache, vec![compute_sat(n, &h, variant, &b)?])
        }
        SearchCommand::SatRainbow { n, r, budget } => {
            let (b, cache) = budget_of(&budget)?;
            emit(&cache, vec![compute_sat_rainbow(n, r, &b)?])
        }
    }
}

fn cmd_check(c: CheckCommand) -> CmdResult {
    match c {
        CheckCommand::Lemma2 { input } => {
            let g = read_file(&input)?.into_plain();
            let hyp = lemma2_hypothesis(&g);
            let con = lemma2_conclusion(&g);
            let report = VerificationReport::from_verdict(!hyp || con, Witness::Holds);
            Ok(verdict_line(
                "lemma2",
                &format!("n={} hypothesis={hyp} conclusion={con}", g.vertex_count()),
                &report,
            ))
        }
        CheckCommand::Petersen => {
            let g = Graph::petersen().complement();
            let omega = clique_number(&g);
            let robust = robust_clique_check(&g, 2);
            let ok = omega == 4 && robust && g.vertex_count() == 10;
            let report = VerificationReport::from_verdict(ok, Witness::Holds);
            Ok(verdict_line(
                "petersen",
                &format!("n={} omega={omega} t=2 robust={robust}", g.vertex_count()),
                &report,
            ))
        }
        CheckCommand::PropComparison { n, r } => prop_comparison(n, r),
    }
}

fn prop_comparison(n_max: usize, r: usize) -> CmdResult {
    let budget = SearchBudget::default();
    let kr = PatternGraph::clique(r);
    let mut graphs = 0;
    for n in 1..=n_max {
        let all = enumerate_graphs(n, &GraphFilter::new(), &budget)?;
        graphs += all.len();
        let bad = all
            .par_iter()
            .map(|g| -> Result<Option<String>, Error> {
                let rg = EdgeColoredGraph::rainbow(g);
                if is_rainbow_semisaturated(&rg, r)?.verdict && !is_k_semisat(g, &kr, 1)?.verdict {
                    return Ok(Some(format!("semisat graph={g:?}")));
                }
                if is_rainbow_saturated(&rg, r)?.verdict && !is_k_sat(g, &kr, 1)?.verdict {
                    return Ok(Some(format!("sat graph={g:?}")));
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>, Error>>()?
            .into_iter()
            .flatten()
            .next();
        if let Some(w) = bad {
            let report = VerificationReport::fails(Witness::Note(w));
            return Ok(verdict_line("prop-comparison", &format!("n={n_max} r={r}"), &report));
        }
    }
    let report = VerificationReport::holds(Witness::Note(format!("{graphs} graphs checked")));
    Ok(verdict_line("prop-comparison", &format!("n={n_max} r={r}"), &report))
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Closed forms at `(n, r)`; `None` outside their stated range.
fn closed_forms(n: usize, r: usize) -> [Option<usize>; 4] {
    let ehm = (n + 2 >= r).then(|| (r - 2) * (n + 2 - r) + binom2(r - 2));
    let ssat1 = if r == 3 {
        (n >= 3).then(|| 2 * (n - 2))
    } else {
        (n + 1 >= r).then(|| (r - 1) * (n + 1 - r) + binom2(r - 1))
    };
    let sat1 = (n + 1 >= r).then(|| 2 * (r - 2) * (n + 1 - r));
    let rainbow = match r {
        3 => (n >= 4).then(|| 2 * n - 4),
        4 => (n >= 5).then(|| 3 * n - 6),
        5 => (n >= 7).then(|| 5 * n - 16),
        _ => None,
    };
    [ehm, ssat1, sat1, rainbow]
}

fn cmd_table(t: TableArgs) -> CmdResult {
    if t.r < 3 {
        return Err(usage("--r must be at least 3"));
    }
    let cache = match &t.cache {
        Some(d) => ResultCache::new(d),
        None => ResultCache::from_env(),
    };
    let records = cache.load()?;
    let cached = |q: Quantity, n: usize| -> Option<u64> {
        let (ns, rs, h) = (n.to_string(), t.r.to_string(), format!("K{}", t.r));
        records
            .iter()
            .rev()
            .find(|rec| {
                rec.quantity == q
                    && rec.bound == Bound::Exact
                    && rec.param("n") == Some(ns.as_str())
                    && match q {
                        Quantity::SatRainbow => rec.param("r") == Some(rs.as_str()),
                        _ => rec.param("h") == Some(h.as_str()),
                    }
            })
            .map(|rec| rec.value)
    };
    println!("# r={} closed forms (asymptotic claims) vs cached exhaustive values; '*' marks a difference", t.r);
    println!("{:>4} {:>10} {:>10} {:>10} {:>12}", "n", "sat", "ssat1", "sat1", "sat_rainbow");
    let quantities = [Quantity::Sat, Quantity::SSat1, Quantity::Sat1, Quantity::SatRainbow];
    for n in t.n.0..=t.n.1 {
        let forms = closed_forms(n, t.r);
        let mut row = format!("{n:>4}");
        let mut differs = false;
        for (i, q) in quantities.iter().enumerate() {
            let form = forms[i].map_or("-".to_string(), |v| v.to_string());
            let cell = match cached(*q, n) {
                Some(v) if forms[i] != Some(v as usize) => {
                    differs = true;
                    format!("{form}/{v}*")
                }
                Some(v) => format!("{form}/{v}"),
                None => form,
            };
            let width = if i == 3 { 12 } else { 10 };
            let _ = write!(row, " {cell:>width$}");
        }
        if differs {
            row.push_str("  differs");
        }
        println!("{row}");
    }
    Ok(Outcome::Holds)
}
