//! Criteria for a cover to exhibit a finite-monodromy piece of `H^1`, the
//! resulting isotrivial dimension, and the guard predicates under which no
//! such piece can exist.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chartab::CharacterTable;
use crate::covers::{
    prym_profile, Base, CoverDatum, CoverError, IrrepMultiplicities, IsotypicProfile,
    LocalConvention,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const ORBIT_NOTE: &str =
    "criteria evaluated per Galois orbit of complex irreducibles; Schur indices not computed";

#[derive(Debug, Error)]
pub enum DetectorError {
    #[error(transparent)]
    Cover(#[from] CoverError),
    /// A report violated one of its own invariants.
    #[error("report invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Counterexample,
    NoFinding,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Counterexample => "counterexample",
            Verdict::NoFinding => "no_finding",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuardRecord {
    pub name: String,
    pub parameters: BTreeMap<String, i64>,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub orbit: usize,
    pub members: Vec<usize>,
    pub degrees: Vec<usize>,
    pub fs_indicators: Vec<i8>,
    pub m_h0: Vec<usize>,
    pub m_v: Vec<usize>,
    pub m_f1v: Vec<usize>,
    pub criterion1: bool,
    pub criterion2: bool,
}

impl OrbitReport {
    pub fn qualifies(&self) -> bool {
        self.criterion1 || self.criterion2
    }

    /// `sum m_F1V * deg` over the members.
    pub fn f1_dimension(&self) -> usize {
        self.m_f1v.iter().zip(&self.degrees).map(|(m, d)| m * d).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PWReport {
    pub tool_version: String,
    pub convention: String,
    pub group: String,
    pub group_order: usize,
    pub base: Base,
    pub monodromy: Vec<usize>,
    pub cover_genus: usize,
    pub orbits: Vec<OrbitReport>,
    pub qualifying_orbits: Vec<usize>,
    pub isotrivial_dimension: usize,
    pub guards: Vec<GuardRecord>,
    pub verdict: Verdict,
    pub note: String,
}

fn nonzero<'a>(members: &[&'a IrrepMultiplicities]) -> Vec<&'a IrrepMultiplicities> {
    members.iter().copied().filter(|r| r.m_v > 0).collect()
}

/// Every member with `m_V > 0` has `m_F1V` equal to 0 or `m_V`, and some
/// member has `m_F1V = m_V > 0`.
pub fn criterion1(members: &[&IrrepMultiplicities]) -> bool {
    let live = nonzero(members);
    !live.is_empty()
        && live.iter().all(|r| r.m_f1v == 0 || r.m_f1v == r.m_v)
        && live.iter().any(|r| r.m_f1v == r.m_v)
}

/// Every member with `m_V > 0` is symplectic with `m_F1V <= 1`, and some
/// member has `m_F1V = 1`.
pub fn criterion2(members: &[&IrrepMultiplicities]) -> bool {
    let live = nonzero(members);
    !live.is_empty()
        && live.iter().all(|r| r.fs_indicator == -1 && r.m_f1v <= 1)
        && live.iter().any(|r| r.m_f1v == 1)
}

/// Order guard `#H < g^2`, dimension guard (every degree `< g`), and one
/// codimension guard `deg < g - delta` per irrep.
pub fn theorem_guard(g: usize, table: &CharacterTable, delta: usize) -> Vec<GuardRecord> {
    let g = g as i64;
    let delta = delta as i64;
    let order = table.group().order() as i64;
    let params = |pairs: &[(&str, i64)]| -> BTreeMap<String, i64> {
        pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    };
    let mut out = vec![
        GuardRecord {
            name: "order-guard".into(),
            parameters: params(&[("g", g), ("order", order)]),
            verdict: order < g * g,
        },
        GuardRecord {
            name: "dimension-guard".into(),
            parameters: params(&[
                ("g", g),
                ("max_degree", table.degrees().iter().copied().max().unwrap_or(1) as i64),
            ]),
            verdict: table.degrees().iter().all(|&d| (d as i64) < g),
        },
    ];
    for i in 0..table.len() {
        let d = table.degree(i) as i64;
        out.push(GuardRecord {
            name: "codim-guard".into(),
            parameters: params(&[("g", g), ("delta", delta), ("irrep", i as i64), ("degree", d)]),
            verdict: d < g - delta,
        });
    }
    out
}

/// Orbit verdicts for a profile.
pub fn evaluate_orbits(profile: &IsotypicProfile) -> Vec<OrbitReport> {
    (0..profile.orbits.len())
        .map(|o| {
            let members: Vec<&IrrepMultiplicities> = profile.orbit_members(o).collect();
            OrbitReport {
                orbit: o,
                members: members.iter().map(|r| r.irrep).collect(),
                degrees: members.iter().map(|r| r.degree).collect(),
                fs_indicators: members.iter().map(|r| r.fs_indicator).collect(),
                m_h0: members.iter().map(|r| r.m_h0).collect(),
                m_v: members.iter().map(|r| r.m_v).collect(),
                m_f1v: members.iter().map(|r| r.m_f1v).collect(),
                criterion1: criterion1(&members),
                criterion2: criterion2(&members),
            }
        })
        .collect()
}

/// Builds the report for a valid cover.
pub fn analyze(
    d: &CoverDatum,
    table: &CharacterTable,
    convention: LocalConvention,
) -> Result<PWReport, DetectorError> {
    let profile = prym_profile(d, table, convention)?;
    report_from_profile(d, table, &profile)
}

pub fn report_from_profile(
    d: &CoverDatum,
    table: &CharacterTable,
    profile: &IsotypicProfile,
) -> Result<PWReport, DetectorError> {
    let orbits = evaluate_orbits(profile);
    let qualifying: Vec<usize> = orbits.iter().filter(|o| o.qualifies()).map(|o| o.orbit).collect();
    let isotrivial_dimension = qualifying.iter().map(|&o| orbits[o].f1_dimension()).sum();
    let report = PWReport {
        tool_version: TOOL_VERSION.to_string(),
        convention: profile.convention.tag().to_string(),
        group: d.group().name().to_string(),
        group_order: d.group().order(),
        base: d.base(),
        monodromy: d.tuple(),
        cover_genus: profile.cover_genus,
        verdict: if qualifying.is_empty() {
            Verdict::NoFinding
        } else {
            Verdict::Counterexample
        },
        orbits,
        qualifying_orbits: qualifying,
        isotrivial_dimension,
        guards: theorem_guard(d.base_genus(), table, 0),
        note: ORBIT_NOTE.to_string(),
    };
    check_report(&report)?;
    Ok(report)
}

/// Consistency of a report with the guards and its own fields.
pub fn check_report(r: &PWReport) -> Result<(), DetectorError> {
    let fail = |m: String| Err(DetectorError::Invariant(m));
    if (r.verdict == Verdict::Counterexample) == r.qualifying_orbits.is_empty() {
        return fail("verdict disagrees with qualifying orbits".into());
    }
    let dim: usize = r.qualifying_orbits.iter().map(|&o| r.orbits[o].f1_dimension()).sum();
    if dim != r.isotrivial_dimension {
        return fail(format!("isotrivial dimension {} != {dim}", r.isotrivial_dimension));
    }
    if r.isotrivial_dimension > r.cover_genus {
        return fail(format!(
            "isotrivial dimension {} exceeds cover genus {}",
            r.isotrivial_dimension, r.cover_genus
        ));
    }
    let g = r.base.genus;
    if g >= 2 && !r.qualifying_orbits.is_empty() {
        return fail(format!("qualifying orbit over base genus {g}"));
    }
    for &o in &r.qualifying_orbits {
        if r.orbits[o].degrees.iter().any(|&deg| deg < g) {
            return fail(format!("orbit {o} qualifies although its degree is below g = {g}"));
        }
    }
    Ok(())
}

/// Detector-level comparison of two reports on the same cover, ignoring the
/// convention tag and the per-irrep multiplicity split.
pub fn same_findings(a: &PWReport, b: &PWReport) -> bool {
    a.verdict == b.verdict
        && a.isotrivial_dimension == b.isotrivial_dimension
        && a.qualifying_orbits == b.qualifying_orbits
        && a.orbits
            .iter()
            .zip(&b.orbits)
            .all(|(x, y)| x.criterion1 == y.criterion1 && x.criterion2 == y.criterion2)
}

pub const TSV_HEADER: &str = "group\tbase\tg'\tverdict\tdimension";

pub fn tsv_row(r: &PWReport) -> String {
    format!(
        "{}\t{},{}\t{}\t{}\t{}",
        r.group,
        r.base.genus,
        r.base.punctures,
        r.cover_genus,
        r.verdict.as_str(),
        r.isotrivial_dimension
    )
}

/// Plain-text rendering.
pub fn render_text(r: &PWReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} (order {}) over ({},{}), monodromy {:?}",
        r.group, r.group_order, r.base.genus, r.base.punctures, r.monodromy
    );
    let _ = writeln!(s, "cover genus {}, convention {}", r.cover_genus, r.convention);
    for o in &r.orbits {
        let _ = writeln!(
            s,
            "  orbit {:>2} irreps {:?} deg {:?} fs {:?} m_V {:?} m_F1V {:?}{}{}",
            o.orbit,
            o.members,
            o.degrees,
            o.fs_indicators,
            o.m_v,
            o.m_f1v,
            if o.criterion1 { " [criterion 1]" } else { "" },
            if o.criterion2 { " [criterion 2]" } else { "" },
        );
    }
    let _ = writeln!(
        s,
        "verdict {}, isotrivial dimension {}",
        r.verdict.as_str(),
        r.isotrivial_dimension
    );
    s
}
