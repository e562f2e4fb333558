//! The quaternion origami: a genus-3 cover of the once-punctured torus
//! whose symplectic 2-dimensional irrep carries a finite orbit.
//!
//! cargo run --example quaternion_origami

use std::sync::Arc;

use pwscope::chartab::character_table;
use pwscope::covers::{CoverDatum, LocalConvention};
use pwscope::detector::{analyze, render_text};
use pwscope::groups::{catalog, DEFAULT_MAX_COSETS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(catalog("q8", DEFAULT_MAX_COSETS)?);
    let (i, j) = (g.generators()[0], g.generators()[1]);
    let cover = CoverDatum::origami(g.clone(), i, j)?;
    let table = character_table(g)?;
    let report = analyze(&cover, &table, LocalConvention::Counterclockwise)?;
    print!("{}", render_text(&report));
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
