//! Enumeration of monodromy tuples up to automorphisms and batch analysis.

mod automorphisms;
mod sample;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use automorphisms::{automorphisms, inner_automorphisms, MAX_AUTOMORPHISM_ORDER};
pub use sample::random_covers;

use crate::chartab::{character_table, CharacterTable, ChartabError};
use crate::covers::{prym_profile, Base, CoverDatum, LocalConvention};
use crate::detector::{report_from_profile, DetectorError, PWReport};
use crate::groups::{catalog, FiniteGroup, GroupError};
use crate::oracle::{certify, CertificationRecord, OracleError};

/// Default cap on the number of tuples visited by one enumeration.
pub const DEFAULT_TUPLE_LIMIT: usize = 20_000_000;

/// Orders up to which oracle certification is on by default.
pub const DEFAULT_CERTIFY_ORDER: usize = 64;

pub const THREADS_ENV: &str = "PWSCOPE_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Equivalence {
    Inner,
    #[default]
    Automorphism,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error("base ({genus},{punctures}) is not hyperbolic")]
    NotHyperbolic { genus: usize, punctures: usize },
    #[error("automorphisms are only enumerated for groups of order at most {MAX_AUTOMORPHISM_ORDER}, got {0}")]
    GroupTooLarge(usize),
    #[error("enumeration would visit {count} tuples, above the limit {limit}")]
    TooManyTuples { count: u128, limit: usize },
    #[error("invalid {THREADS_ENV}: {0}")]
    Threads(String),
    #[error(transparent)]
    Detector(#[from] DetectorError),
    #[error("certification failed for monodromy {monodromy:?}: {source}")]
    Certification {
        monodromy: Vec<usize>,
        source: OracleError,
    },
}

impl SearchError {
    /// True for failures that indicate an internal inconsistency rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            SearchError::Certification { .. }
                | SearchError::Detector(DetectorError::Invariant(_))
                | SearchError::Chartab(ChartabError::Inconsistent(_))
        )
    }
}

/// Filters on enumerated tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TupleFilter {
    /// Every puncture image has order `|G|`.
    pub totally_ramified: bool,
}

/// All valid covers of `base` with group `g`, one per orbit of the chosen
/// equivalence, as lexicographically least tuples in increasing order.
/// Tuples with a trivial puncture image are skipped.
pub fn enumerate(
    g: &Arc<FiniteGroup>,
    base: Base,
    equivalence: Equivalence,
    filter: TupleFilter,
    limit: usize,
) -> Result<Vec<CoverDatum>, SearchError> {
    let Base { genus, punctures } = base;
    if 2 * genus + punctures <= 2 {
        return Err(SearchError::NotHyperbolic { genus, punctures });
    }
    if g.order() > MAX_AUTOMORPHISM_ORDER {
        return Err(SearchError::GroupTooLarge(g.order()));
    }
    let free = 2 * genus + punctures.saturating_sub(1);
    let n = g.order();
    let count = (n as u128).checked_pow(free as u32).unwrap_or(u128::MAX);
    if count > limit as u128 {
        return Err(SearchError::TooManyTuples { count, limit });
    }
    let maps = match equivalence {
        Equivalence::Inner => inner_automorphisms(g),
        Equivalence::Automorphism => automorphisms(g),
    };
    let order_ok = |x: usize| {
        x != 0 && (!filter.totally_ramified || g.element_order(x) == n)
    };
    let firsts: Vec<usize> = (0..n).collect();
    let mut found: Vec<(Vec<usize>, CoverDatum)> = firsts
        .par_iter()
        .flat_map_iter(|&first| {
            let mut out = Vec::new();
            let mut t = vec![0usize; free];
            if free == 0 {
                return out;
            }
            t[0] = first;
            loop {
                // the last puncture is determined by the free entries, so
                // comparing free entries decides the orbit minimum
                if is_canonical(&t, &maps) {
                    if let Some(d) = realize(g, genus, punctures, &t, &order_ok) {
                        out.push((d.tuple(), d));
                    }
                }
                // advance the tail like an odometer
                let mut k = free - 1;
                loop {
                    if k == 0 {
                        return out;
                    }
                    t[k] += 1;
                    if t[k] < n {
                        break;
                    }
                    t[k] = 0;
                    k -= 1;
                }
            }
        })
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, d)| d).collect())
}

fn realize(
    g: &Arc<FiniteGroup>,
    genus: usize,
    punctures: usize,
    t: &[usize],
    order_ok: &impl Fn(usize) -> bool,
) -> Option<CoverDatum> {
    let handles: Vec<(usize, usize)> = (0..genus).map(|j| (t[2 * j], t[2 * j + 1])).collect();
    let cs = t[2 * genus..].to_vec();
    if !cs.iter().all(|&c| order_ok(c)) {
        return None;
    }
    if punctures == 0 {
        return CoverDatum::new(g.clone(), handles, cs).ok();
    }
    let d = CoverDatum::completing_last(g.clone(), handles, cs).ok()?;
    order_ok(d.puncture_images()[punctures - 1]).then_some(d)
}

fn is_canonical(t: &[usize], maps: &[Vec<usize>]) -> bool {
    maps.iter().all(|m| {
        for &x in t {
            match m[x].cmp(&x) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => return true,
                std::cmp::Ordering::Equal => {}
            }
        }
        true
    })
}

/// Origami covers over `(1,1)`: generating pairs with `c_1 = [a,b]^-1`.
pub fn enumerate_origami(
    g: &Arc<FiniteGroup>,
    equivalence: Equivalence,
) -> Result<Vec<CoverDatum>, SearchError> {
    enumerate(
        g,
        Base { genus: 1, punctures: 1 },
        equivalence,
        TupleFilter::default(),
        DEFAULT_TUPLE_LIMIT,
    )
}

/// Covers of the sphere with `n >= 3` branch points.
pub fn enumerate_genus0(
    g: &Arc<FiniteGroup>,
    n: usize,
    equivalence: Equivalence,
    totally_ramified: bool,
) -> Result<Vec<CoverDatum>, SearchError> {
    enumerate(
        g,
        Base { genus: 0, punctures: n },
        equivalence,
        TupleFilter { totally_ramified },
        DEFAULT_TUPLE_LIMIT,
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTask {
    pub group: String,
    pub base: Base,
    pub equivalence: Equivalence,
    pub only_qualifying: bool,
    pub filter: TupleFilter,
    /// `None` certifies exactly when `|G| <= 64`.
    pub certify: Option<bool>,
    pub convention: LocalConvention,
    pub max_cosets: usize,
    pub tuple_limit: usize,
}

impl SearchTask {
    pub fn new(group: impl Into<String>, base: Base) -> Self {
        SearchTask {
            group: group.into(),
            base,
            equivalence: Equivalence::Automorphism,
            only_qualifying: false,
            filter: TupleFilter::default(),
            certify: None,
            convention: LocalConvention::Counterclockwise,
            max_cosets: crate::groups::DEFAULT_MAX_COSETS,
            tuple_limit: DEFAULT_TUPLE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub enumerated: usize,
    pub qualifying: usize,
    pub certified: usize,
    pub reports: Vec<PWReport>,
}

/// Worker count from `PWSCOPE_THREADS`, if set.
pub fn threads_from_env() -> Result<Option<usize>, SearchError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(SearchError::Threads(v)),
        },
    }
}

/// Runs the task on a pool sized by `PWSCOPE_THREADS`.
pub fn run(task: &SearchTask) -> Result<SearchOutcome, SearchError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads_from_env()? {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| SearchError::Threads(e.to_string()))?;
    pool.install(|| run_in_current_pool(task))
}

pub fn run_in_current_pool(task: &SearchTask) -> Result<SearchOutcome, SearchError> {
    let g = Arc::new(catalog(&task.group, task.max_cosets)?);
    let table = character_table(g.clone())?;
    let covers = enumerate(&g, task.base, task.equivalence, task.filter, task.tuple_limit)?;
    let do_certify = task.certify.unwrap_or(g.order() <= DEFAULT_CERTIFY_ORDER);
    let results: Vec<(PWReport, Option<CertificationRecord>)> = covers
        .par_iter()
        .map(|d| analyze_one(d, &table, task.convention, do_certify))
        .collect::<Result<_, _>>()?;
    let enumerated = results.len();
    let certified = results.iter().filter(|r| r.1.is_some()).count();
    let mut reports: Vec<PWReport> = results.into_iter().map(|r| r.0).collect();
    let qualifying = reports.iter().filter(|r| !r.qualifying_orbits.is_empty()).count();
    if task.only_qualifying {
        reports.retain(|r| !r.qualifying_orbits.is_empty());
    }
    // stable: enumeration order breaks ties
    reports.sort_by(|a, b| {
        let qa = !a.qualifying_orbits.is_empty();
        let qb = !b.qualifying_orbits.is_empty();
        qb.cmp(&qa)
            .then(b.isotrivial_dimension.cmp(&a.isotrivial_dimension))
    });
    Ok(SearchOutcome {
        enumerated,
        qualifying,
        certified,
        reports,
    })
}

fn analyze_one(
    d: &CoverDatum,
    table: &CharacterTable,
    convention: LocalConvention,
    do_certify: bool,
) -> Result<(PWReport, Option<CertificationRecord>), SearchError> {
    let profile = prym_profile(d, table, convention).map_err(DetectorError::from)?;
    let report = report_from_profile(d, table, &profile)?;
    let record = if do_certify {
        Some(
            certify(d, table, &profile).map_err(|source| SearchError::Certification {
                monodromy: d.tuple(),
                source,
            })?,
        )
    } else {
        None
    };
    Ok((report, record))
}

#[cfg(test)]
mod tests;
