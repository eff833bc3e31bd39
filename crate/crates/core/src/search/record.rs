//! Result records, their replay, and the append-only results cache.

use std::fmt;
use std::fs::{self, OpenOptions};
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use super::compute::SatVariant;
use crate::error::{Error, Result};
use crate::family::in_family_Fhat;
use crate::graph::Graph;
use crate::io::{self, AnyGraph};
use crate::report::{VerificationReport, Witness};
use crate::subgraph::PatternGraph;
use crate::verify::is_rainbow_saturated;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    F,
    G,
    GPrime,
    Sat,
    SatRainbow,
    Sat1,
    SSat1,
    SatK,
}

impl Quantity {
    pub const ALL: [Quantity; 8] = [
        Quantity::F,
        Quantity::G,
        Quantity::GPrime,
        Quantity::Sat,
        Quantity::SatRainbow,
        Quantity::Sat1,
        Quantity::SSat1,
        Quantity::SatK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::F => "f",
            Quantity::G => "g",
            Quantity::GPrime => "gprime",
            Quantity::Sat => "sat",
            Quantity::SatRainbow => "sat_rainbow",
            Quantity::Sat1 => "sat1",
            Quantity::SSat1 => "ssat1",
            Quantity::SatK => "satk",
        }
    }

    pub fn parse(s: &str) -> Option<Quantity> {
        Quantity::ALL.into_iter().find(|q| q.name() == s)
    }

    fn colored_witness(self) -> bool {
        matches!(self, Quantity::F | Quantity::G | Quantity::GPrime | Quantity::SatRainbow)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Exact,
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResultRecord {
    pub quantity: Quantity,
    pub params: Vec<(String, String)>,
    pub value: u64,
    pub bound: Bound,
    pub witness: Option<AnyGraph>,
    /// Witness file relative to the cache directory, once stored.
    pub witness_path: Option<String>,
    pub elapsed: Duration,
    pub version: String,
}

impl ResultRecord {
    pub fn new(
        quantity: Quantity,
        params: Vec<(&str, String)>,
        value: u64,
        bound: Bound,
        witness: Option<AnyGraph>,
        elapsed: Duration,
    ) -> Self {
        ResultRecord {
            quantity,
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            value,
            bound,
            witness,
            witness_path: None,
            elapsed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn number(&self, key: &str) -> Result<usize> {
        let v = self
            .param(key)
            .ok_or_else(|| Error::Integrity(format!("{} record lacks parameter {key}", self.quantity)))?;
        v.parse()
            .map_err(|_| Error::Integrity(format!("parameter {key}={v} is not a number")))
    }

    /// `quantity k=v ...` without timing, for matching and display.
    pub fn key(&self) -> String {
        let mut s = self.quantity.name().to_string();
        for (k, v) in &self.params {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }

    /// The cache line.
    pub fn to_line(&self) -> String {
        let mut s = format!("RESULT {}", self.key());
        match self.bound {
            Bound::Exact => {}
            Bound::Lower => s.push_str(" bound=lower"),
            Bound::Upper => s.push_str(" bound=upper"),
        }
        s.push_str(&format!(
            " value={} witness={} elapsed_ms={} version={}",
            self.value,
            self.witness_path.as_deref().unwrap_or("none"),
            self.elapsed.as_millis(),
            self.version
        ));
        s
    }

    /// Parses a cache line; the witness graph itself is not loaded.
    pub fn from_line(line: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Integrity(format!("{msg} in cache line {line:?}"));
        let mut toks = line.split_whitespace();
        if toks.next() != Some("RESULT") {
            return Err(bad("missing RESULT tag"));
        }
        let quantity = toks.next().and_then(Quantity::parse).ok_or_else(|| bad("unknown quantity"))?;
        let mut rec = ResultRecord::new(quantity, Vec::new(), 0, Bound::Exact, None, Duration::ZERO);
        let (mut value, mut version) = (None, None);
        for tok in toks {
            let (k, v) = tok.split_once('=').ok_or_else(|| bad("token without '='"))?;
            match k {
                "value" => value = Some(v.parse().map_err(|_| bad("bad value"))?),
                "witness" => rec.witness_path = (v != "none").then(|| v.to_string()),
                "elapsed_ms" => rec.elapsed = Duration::from_millis(v.parse().map_err(|_| bad("bad elapsed_ms"))?),
                "version" => version = Some(v.to_string()),
                "bound" => {
                    rec.bound = match v {
                        "lower" => Bound::Lower,
                        "upper" => Bound::Upper,
                        _ => return Err(bad("bad bound")),
                    }
                }
                _ => rec.params.push((k.to_string(), v.to_string())),
            }
        }
        rec.value = value.ok_or_else(|| bad("missing value"))?;
        rec.version = version.ok_or_else(|| bad("missing version"))?;
        Ok(rec)
    }

    fn file_stem(&self) -> String {
        let mut s = self.quantity.name().to_string();
        for (k, v) in &self.params {
            s.push('_');
            s.push_str(k);
            s.extend(v.chars().filter(|c| c.is_ascii_alphanumeric()));
        }
        if self.bound == Bound::Upper {
            s.push_str("_upper");
        }
        s
    }
}

/// `K5` for cliques, otherwise `g<n>:u-v,...`.
pub fn pattern_name(h: &PatternGraph) -> String {
    match h.clique_order() {
        Some(r) => format!("K{r}"),
        None => {
            let edges: Vec<String> = h.graph().edges().map(|(u, v)| format!("{u}-{v}")).collect();
            format!("g{}:{}", h.graph().vertex_count(), edges.join(","))
        }
    }
}

pub fn parse_pattern(s: &str) -> Result<PatternGraph> {
    let bad = || Error::Input(format!("bad pattern name {s:?}"));
    if let Some(r) = s.strip_prefix('K') {
        return Ok(PatternGraph::clique(r.parse().map_err(|_| bad())?));
    }
    let (n, edges) = s.strip_prefix('g').and_then(|t| t.split_once(':')).ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    let mut g = Graph::empty(n);
    for e in edges.split(',').filter(|e| !e.is_empty()) {
        let (u, v) = e.split_once('-').ok_or_else(bad)?;
        let (u, v): (usize, usize) = (u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?);
        if u >= n || v >= n || u == v {
            return Err(bad());
        }
        g.add_edge(u, v);
    }
    PatternGraph::new(g)
}

/// Replays a record's witness against everything the record claims.
pub fn verify_record(rec: &ResultRecord) -> Result<VerificationReport> {
    let Some(witness) = &rec.witness else {
        return match rec.bound {
            Bound::Lower => Ok(VerificationReport::holds(Witness::Note(
                "lower bound; no witness to replay".into(),
            ))),
            _ => Err(Error::Integrity(format!("{} record has no witness", rec.key()))),
        };
    };
    let fail = |msg: String| Ok(VerificationReport::fails(Witness::Note(msg)));
    let colored = match witness {
        AnyGraph::Colored(g) if rec.quantity.colored_witness() => Some(g),
        AnyGraph::Plain(_) if !rec.quantity.colored_witness() => None,
        _ => return Err(Error::Integrity(format!("{} witness has the wrong kind", rec.key()))),
    };
    let n = match witness {
        AnyGraph::Plain(g) => g.vertex_count(),
        AnyGraph::Colored(g) => g.vertex_count(),
    };
    let m = match witness {
        AnyGraph::Plain(g) => g.edge_count(),
        AnyGraph::Colored(g) => g.edge_count(),
    } as u64;
    if rec.param("n").is_some() && rec.number("n")? != n {
        return fail(format!("witness has {n} vertices"));
    }
    let counted = if rec.quantity == Quantity::F { n as u64 } else { m };
    if counted != rec.value {
        return fail(format!("witness size {counted} differs from value {}", rec.value));
    }
    let ok = match rec.quantity {
        Quantity::F | Quantity::G | Quantity::GPrime => {
            let k = rec.number("k")?;
            let g = colored.unwrap();
            in_family_Fhat(g, k)?.verdict && (rec.quantity != Quantity::G || is_rainbow_saturated(g, k + 1)?.verdict)
        }
        Quantity::SatRainbow => is_rainbow_saturated(colored.unwrap(), rec.number("r")?)?.verdict,
        q => {
            let h = parse_pattern(rec.param("h").ok_or_else(|| Error::Integrity("missing pattern".into()))?)?;
            let variant = match q {
                Quantity::Sat => SatVariant::Plain,
                Quantity::Sat1 => SatVariant::OneSat,
                Quantity::SSat1 => SatVariant::OneSemisat,
                _ => SatVariant::KSat(rec.number("k")?),
            };
            let AnyGraph::Plain(g) = witness else { unreachable!() };
            variant.holds(g, &h)?
        }
    };
    if ok {
        Ok(VerificationReport::holds(Witness::Holds))
    } else {
        fail(format!("witness does not have the {} property", rec.quantity))
    }
}

/// `results.txt` plus witness files in one directory.
#[derive(Clone, Debug)]
pub struct ResultCache {
    dir: PathBuf,
}

impl ResultCache {
    pub const FILE: &'static str = "results.txt";

    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ResultCache { dir: dir.into() }
    }

    /// `$RSAT_CACHE`, or `./rsat-cache`.
    pub fn from_env() -> Self {
        Self::new(std::env::var_os("RSAT_CACHE").map_or_else(|| PathBuf::from("rsat-cache"), PathBuf::from))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Writes the witness file and appends the record line.
    pub fn store(&self, rec: &mut ResultRecord) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        if let Some(w) = &rec.witness {
            let rel = format!("{}.txt", rec.file_stem());
            io::write_file(&self.dir.join(&rel), w)?;
            rec.witness_path = Some(rel);
        }
        let mut f = OpenOptions::new().create(true).append(true).open(self.dir.join(Self::FILE))?;
        writeln!(f, "{}", rec.to_line())?;
        Ok(())
    }

    /// Every record, each replayed; a record that does not replay is an
    /// integrity error.
    pub fn load(&self) -> Result<Vec<ResultRecord>> {
        let path = self.dir.join(Self::FILE);
        if !path.exists() {
            return Ok(Vec::new());
        }
        let text = fs::read_to_string(path)?;
        let mut out = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let mut rec = ResultRecord::from_line(line)?;
            if let Some(rel) = &rec.witness_path {
                let file = self.dir.join(rel);
                let g = io::read_file(&file)
                    .map_err(|e| Error::Integrity(format!("witness {}: {e}", file.display())))?;
                rec.witness = Some(g);
            }
            let report = verify_record(&rec)?;
            if !report.verdict {
                return Err(Error::Integrity(format!("{}: {}", rec.key(), report.witness)));
            }
            out.push(rec);
        }
        Ok(out)
    }

    /// The latest stored record with this quantity and parameters.
    pub fn lookup(&self, quantity: Quantity, params: &[(&str, &str)]) -> Result<Option<ResultRecord>> {
        Ok(self.load()?.into_iter().rev().find(|r| {
            r.quantity == quantity && params.iter().all(|(k, v)| r.param(k) == Some(v))
        }))
    }
}
