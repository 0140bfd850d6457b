//! Exhaustive search over Kupisch series of a fixed rank.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{is_canonical_cyclic, Algebra};
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::filtration::epsilon_chain;
use crate::homology::HomologicalSummary;
use crate::text::format_series;

/// Environment variable read for the default number of worker threads.
pub const JOBS_ENV: &str = "NAKAYAMA_JOBS";

/// Worker threads from `NAKAYAMA_JOBS`, else the available parallelism.
pub fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&j| j > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub rank: usize,
    pub max_entry: u32,
    pub include_linear: bool,
    pub jobs: usize,
    /// Larger entry bound used to check that results do not change.
    pub stability_probe: Option<u32>,
}

impl SearchConfig {
    pub fn new(rank: usize) -> SearchConfig {
        SearchConfig {
            rank,
            max_entry: 2 * rank.max(1) as u32 - 1,
            include_linear: false,
            jobs: default_jobs(),
            stability_probe: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank < 2 {
            return Err(Error::BadParams("rank must be at least 2".into()));
        }
        if self.max_entry < 2 {
            return Err(Error::BadParams("max_entry must be at least 2".into()));
        }
        if let Some(p) = self.stability_probe {
            if p < self.max_entry {
                return Err(Error::BadParams(
                    "stability probe must not be below max_entry".into(),
                ));
            }
        }
        Ok(())
    }

    fn with_max(&self, max_entry: u32) -> SearchConfig {
        SearchConfig {
            max_entry,
            stability_probe: None,
            ..self.clone()
        }
    }

    fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.max(1))
            .build()
            .expect("thread pool")
    }
}

/// Canonical cyclic Kupisch series of a fixed rank with entries in
/// `2..=max_entry`, in increasing lexicographic order. Every series is the
/// smallest rotation of itself, so it starts with its minimum.
pub struct CyclicSeries {
    n: usize,
    max: u32,
    fixed: usize,
    cur: Vec<u32>,
    fresh: bool,
    done: bool,
}

impl CyclicSeries {
    pub fn new(rank: usize, max_entry: u32) -> CyclicSeries {
        CyclicSeries::with_prefix(rank, max_entry, &[])
    }

    /// Only series starting with `prefix`.
    pub fn with_prefix(rank: usize, max_entry: u32, prefix: &[u32]) -> CyclicSeries {
        let mut it = CyclicSeries {
            n: rank,
            max: max_entry,
            fixed: prefix.len(),
            cur: vec![0; rank],
            fresh: true,
            done: rank == 0 || max_entry < 2 || prefix.len() > rank,
        };
        if it.done {
            return it;
        }
        if prefix.is_empty() {
            it.cur[0] = 2;
            it.fill(1);
        } else {
            it.cur[..prefix.len()].copy_from_slice(prefix);
            let ok = prefix[0] >= 2
                && prefix.iter().all(|&c| c >= prefix[0] && c <= max_entry)
                && prefix.windows(2).all(|w| w[0] <= w[1] + 1);
            if !ok {
                it.done = true;
                return it;
            }
            it.fill(prefix.len());
        }
        it
    }

    // smallest admissible continuation from position `pos`
    fn fill(&mut self, pos: usize) {
        for k in pos..self.n {
            self.cur[k] = self.cur[0].max(self.cur[k - 1].saturating_sub(1));
        }
    }

    fn bump(&mut self) -> bool {
        let mut pos = self.n;
        while pos > self.fixed {
            pos -= 1;
            if self.cur[pos] < self.max {
                self.cur[pos] += 1;
                if pos == 0 {
                    self.fill(1);
                } else {
                    self.fill(pos + 1);
                }
                return true;
            }
        }
        false
    }

    fn accept(&self) -> bool {
        let n = self.n;
        self.cur[n - 1] <= self.cur[0] + 1 && is_canonical_cyclic(&self.cur)
    }
}

impl Iterator for CyclicSeries {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        while !self.done {
            if self.fresh {
                self.fresh = false;
            } else if !self.bump() {
                self.done = true;
                break;
            }
            if self.accept() {
                return Some(self.cur.clone());
            }
        }
        None
    }
}

/// All canonical cyclic algebras of the configured rank and entry bound,
/// including self-injective ones.
pub fn iterate_cyclic(cfg: &SearchConfig) -> impl Iterator<Item = Algebra> {
    CyclicSeries::new(cfg.rank, cfg.max_entry)
        .map(|s| Algebra::from_series(s).expect("enumerated series are valid"))
}

/// Connected linear Kupisch series of the given rank with entries at most
/// `max_entry`, in increasing lexicographic order.
pub fn linear_series(rank: usize, max_entry: u32) -> Vec<Vec<u32>> {
    fn extend(acc: &mut Vec<Vec<u32>>, tail: &mut Vec<u32>, rank: usize, max: u32) {
        if tail.len() == rank {
            let mut s = tail.clone();
            s.reverse();
            acc.push(s);
            return;
        }
        let next = *tail.last().unwrap();
        for c in 2..=(next + 1).min(max) {
            tail.push(c);
            extend(acc, tail, rank, max);
            tail.pop();
        }
    }
    if rank == 0 {
        return Vec::new();
    }
    let mut acc = Vec::new();
    extend(&mut acc, &mut vec![1], rank, max_entry);
    acc.sort();
    acc
}

/// Second entries admissible after a given first entry of a canonical series.
fn prefixes(cfg: &SearchConfig) -> Vec<[u32; 2]> {
    let mut out = Vec::new();
    for c1 in 2..=cfg.max_entry {
        for c2 in c1..=cfg.max_entry {
            out.push([c1, c2]);
        }
    }
    out
}

fn higher_auslander_gldim(a: &Algebra) -> Option<u32> {
    if a.is_self_injective() {
        return None;
    }
    let g = a.gldim();
    match g {
        Dim::Finite(k) if a.domdim() == g => Some(k),
        _ => None,
    }
}

/// Runs `f` on every canonical cyclic series (in parallel by prefix) and on
/// every linear series when enabled, collecting the results in order.
fn search<T, F>(cfg: &SearchConfig, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Algebra) -> Option<T> + Sync,
{
    let n = cfg.rank;
    let pool = cfg.pool();
    let mut out: Vec<T> = pool.install(|| {
        if n < 2 {
            return CyclicSeries::new(n, cfg.max_entry)
                .filter_map(|s| f(Algebra::from_series(s).unwrap()))
                .collect();
        }
        prefixes(cfg)
            .into_par_iter()
            .map(|p| {
                CyclicSeries::with_prefix(n, cfg.max_entry, &p)
                    .filter_map(|s| f(Algebra::from_series(s).unwrap()))
                    .collect::<Vec<T>>()
            })
            .flatten_iter()
            .collect()
    });
    if cfg.include_linear {
        out.extend(
            linear_series(n, cfg.max_entry)
                .into_iter()
                .filter_map(|s| f(Algebra::from_series(s).unwrap())),
        );
    }
    out
}

/// Global dimensions of the higher Auslander algebras in the search space.
pub fn spectrum(cfg: &SearchConfig) -> Result<BTreeSet<u32>> {
    cfg.validate()?;
    Ok(search(cfg, |a| higher_auslander_gldim(&a))
        .into_iter()
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub found: BTreeSet<u32>,
    pub expected: BTreeSet<u32>,
    /// Spectrum at the stability probe bound, when one was requested.
    pub probe: Option<BTreeSet<u32>>,
}

impl SpectrumReport {
    pub fn passed(&self) -> bool {
        self.found == self.expected && self.probe.as_ref().is_none_or(|p| *p == self.found)
    }
}

/// Spectrum at `max_entry`, the expected set, and the spectrum at the
/// stability probe bound if configured.
pub fn spectrum_report(cfg: &SearchConfig) -> Result<SpectrumReport> {
    let found = spectrum(cfg)?;
    let probe = match cfg.stability_probe {
        Some(p) => Some(spectrum(&cfg.with_max(p))?),
        None => None,
    };
    let expected = if cfg.include_linear {
        (2..=2 * cfg.rank as u32 - 2).collect()
    } else {
        expected_spectrum(cfg.rank)?
    };
    Ok(SpectrumReport {
        found,
        expected,
        probe,
    })
}

/// `{2, ..., 2n-2}` without `n-1`, and also without 2 when `n` is odd.
pub fn expected_spectrum(n: usize) -> Result<BTreeSet<u32>> {
    if n < 2 {
        return Err(Error::BadParams("rank must be at least 2".into()));
    }
    let n = n as u32;
    Ok((2..=2 * n - 2)
        .filter(|&k| k != n - 1 && !(n % 2 == 1 && k == 2))
        .collect())
}

/// Successive ranks along the epsilon chain and the terminal algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpsilonSignature {
    pub ranks: Vec<usize>,
    pub terminal: String,
}

impl EpsilonSignature {
    pub fn of(a: &Algebra) -> EpsilonSignature {
        let mut ranks = vec![a.rank()];
        let mut terminal = a.clone();
        if a.is_cyclic() {
            // rank drops at every step that is not self-injective
            if let Ok(chain) = epsilon_chain(a, a.rank() + 1) {
                ranks.extend(chain.iter().map(|b| b.rank()));
                terminal = chain.last().unwrap().clone();
            }
        }
        EpsilonSignature {
            ranks,
            terminal: crate::text::format_algebra(&terminal.canonical()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogRecord {
    pub series: String,
    pub rank: usize,
    pub gldim: Dim,
    pub domdim: Dim,
    pub findim: Dim,
    pub defect: usize,
    pub num_relations: usize,
    pub semisimple: bool,
    pub epsilon_signature: EpsilonSignature,
    #[serde(skip)]
    pub algebra: Algebra,
    #[serde(skip)]
    pub summary: HomologicalSummary,
}

impl CatalogRecord {
    pub fn new(a: &Algebra) -> CatalogRecord {
        let summary = a.summary();
        CatalogRecord {
            series: format_series(a.series()),
            rank: a.rank(),
            gldim: summary.gldim,
            domdim: summary.domdim,
            findim: summary.findim,
            defect: summary.defect,
            num_relations: summary.num_relations,
            semisimple: a.is_semisimple(),
            epsilon_signature: EpsilonSignature::of(a),
            algebra: a.clone(),
            summary,
        }
    }
}

/// Higher Auslander algebras of global dimension `k`, cyclic ones first,
/// each group in increasing series order.
pub fn find_higher_auslander(cfg: &SearchConfig, k: u32) -> Result<Vec<CatalogRecord>> {
    cfg.validate()?;
    Ok(search(cfg, |a| {
        (higher_auslander_gldim(&a) == Some(k)).then(|| CatalogRecord::new(&a))
    }))
}

/// Every higher Auslander algebra in the search space, ordered by series.
pub fn catalog(cfg: &SearchConfig) -> Result<Vec<CatalogRecord>> {
    cfg.validate()?;
    let mut records = search(cfg, |a| {
        higher_auslander_gldim(&a).map(|_| CatalogRecord::new(&a))
    });
    records.sort_by(|x, y| x.algebra.series().cmp(y.algebra.series()));
    Ok(records)
}
