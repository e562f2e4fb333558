//! Independent check of the `H`-character on `H^1` of a cover, computed
//! from an explicit equivariant cell structure of the closed surface.

mod complex;
mod linalg;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use complex::{EquivariantComplex, Face, Letter};
pub use linalg::{integer_rank_checked, rank, rational_rank, HomologyBasis};

use crate::chartab::{CharacterTable, Cyclotomic};
use crate::covers::{CoverDatum, IsotypicProfile};

/// Order limit for the explicit homology-basis trace.
pub const EXPLICIT_TRACE_LIMIT: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("cell complex invariant failed: {0}")]
    Complex(String),
    #[error("Euler characteristic {euler} does not match cover genus {genus}")]
    Euler { euler: i64, genus: usize },
    #[error("rank H_1 = {rank} but 2g' = {expected}")]
    Rank { rank: usize, expected: usize },
    #[error("H^1 character mismatch on class {class} (representative {representative}): Chevalley-Weil gives {expected}, homology gives {oracle}")]
    Mismatch {
        class: usize,
        representative: usize,
        expected: String,
        oracle: i64,
    },
    #[error("explicit trace {explicit} disagrees with Lefschetz trace {hopf} at element {element}")]
    TraceDisagreement { element: usize, explicit: String, hopf: i64 },
}

/// Trace of `h` on `H_1(X)` from the Hopf trace formula, using that `H`
/// acts trivially on `H_0` and `H_2`.
pub fn hopf_trace(c: &EquivariantComplex, h: usize) -> i64 {
    2 - c.lefschetz_chain_trace(h)
}

/// Oracle character on `H_1(X)` at each class representative.
pub fn h1_character(c: &EquivariantComplex, table: &CharacterTable) -> Vec<i64> {
    table
        .classes()
        .representatives()
        .iter()
        .map(|&h| hopf_trace(c, h))
        .collect()
}

/// Traces from an explicit rational basis of `H_1`, at class representatives.
pub fn explicit_h1_character(c: &EquivariantComplex, table: &CharacterTable) -> Vec<Option<i64>> {
    let basis = HomologyBasis::new(&c.boundary_1(), &c.boundary_2());
    table
        .classes()
        .representatives()
        .iter()
        .map(|&h| linalg::to_i64(&basis.trace(|e| c.act_edge(h, e))))
        .collect()
}

/// `rank H_1 = #E - rank d1 - rank d2`.
pub fn h1_rank(c: &EquivariantComplex) -> usize {
    c.edge_count() - rank(&c.boundary_1()) - rank(&c.boundary_2())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTrace {
    pub class: usize,
    pub representative: usize,
    pub oracle: i64,
    pub chevalley_weil: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationRecord {
    pub cover_hash: String,
    pub status: String,
    pub cover_genus: usize,
    pub h1_rank: usize,
    pub traces: Vec<ClassTrace>,
}

/// SHA-256 over group name, base and monodromy tuple.
pub fn cover_hash(d: &CoverDatum) -> String {
    let tuple: Vec<String> = d.tuple().iter().map(usize::to_string).collect();
    let text = format!(
        "{}|{}|{}|{}",
        d.group().name(),
        d.base_genus(),
        d.puncture_count(),
        tuple.join(",")
    );
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Builds the complex, checks its invariants and the rank of `H_1`, and
/// compares `sum_i m_h1(i) chi_i` from `profile` with the Hopf traces.
pub fn certify(
    d: &CoverDatum,
    table: &CharacterTable,
    profile: &IsotypicProfile,
) -> Result<CertificationRecord, OracleError> {
    let c = EquivariantComplex::build(d);
    c.check().map_err(OracleError::Complex)?;
    let genus = d.cover_genus();
    let euler = c.euler_characteristic();
    if euler != 2 - 2 * genus as i64 {
        return Err(OracleError::Euler { euler, genus });
    }
    let r = h1_rank(&c);
    if r != 2 * genus {
        return Err(OracleError::Rank {
            rank: r,
            expected: 2 * genus,
        });
    }
    let oracle = h1_character(&c, table);
    let expected = profile.h1_character(table);
    let mut traces = Vec::with_capacity(oracle.len());
    for (class, (&o, e)) in oracle.iter().zip(&expected).enumerate() {
        let representative = table.classes().representative(class);
        if *e != Cyclotomic::from_integer(o) {
            return Err(OracleError::Mismatch {
                class,
                representative,
                expected: e.to_string(),
                oracle: o,
            });
        }
        traces.push(ClassTrace {
            class,
            representative,
            oracle: o,
            chevalley_weil: e.to_string(),
        });
    }
    Ok(CertificationRecord {
        cover_hash: cover_hash(d),
        status: "certified".into(),
        cover_genus: genus,
        h1_rank: r,
        traces,
    })
}

/// Compares the explicit-basis traces with the Hopf traces on every class.
pub fn cross_check_traces(d: &CoverDatum, table: &CharacterTable) -> Result<(), OracleError> {
    let c = EquivariantComplex::build(d);
    let hopf = h1_character(&c, table);
    let explicit = explicit_h1_character(&c, table);
    for (k, (&h, x)) in hopf.iter().zip(&explicit).enumerate() {
        if *x != Some(h) {
            return Err(OracleError::TraceDisagreement {
                element: table.classes().representative(k),
                explicit: format!("{x:?}"),
                hopf: h,
            });
        }
    }
    Ok(())
}
