//! Certifies the Chevalley-Weil H^1 character against the trace of the
//! group action on the cellular homology of the cover.
//!
//! cargo run --example oracle_certify

use std::sync::Arc;

use pwscope::chartab::character_table;
use pwscope::covers::{prym_profile, CoverDatum, LocalConvention};
use pwscope::groups::{catalog, DEFAULT_MAX_COSETS};
use pwscope::oracle::{certify, cross_check_traces, EquivariantComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(catalog("dicyclic:3", DEFAULT_MAX_COSETS)?);
    let (a, b) = (g.generators()[0], g.generators()[1]);
    let cover = CoverDatum::origami(g.clone(), a, b)?;
    let complex = EquivariantComplex::build(&cover);
    println!(
        "cells: {} vertices, {} edges, {} faces, Euler characteristic {}",
        complex.vertex_count(),
        complex.edge_count(),
        complex.face_count(),
        complex.euler_characteristic()
    );
    let table = character_table(g)?;
    let profile = prym_profile(&cover, &table, LocalConvention::Counterclockwise)?;
    let record = certify(&cover, &table, &profile)?;
    cross_check_traces(&cover, &table)?;
    println!("{}", serde_json::to_string_pretty(&record)?);
    Ok(())
}
