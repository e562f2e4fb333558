//! Verdicts and dimensions do not depend on the orientation convention for
//! local monodromy, even though individual multiplicities swap with duals.
//!
//! cargo run --example convention_flip

use std::sync::Arc;

use pwscope::chartab::character_table;
use pwscope::covers::{CoverDatum, LocalConvention};
use pwscope::detector::{analyze, same_findings};
use pwscope::groups::{catalog, DEFAULT_MAX_COSETS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(catalog("cyclic:4", DEFAULT_MAX_COSETS)?);
    let a = g.generators()[0];
    let cover = CoverDatum::new(g.clone(), vec![], vec![a; 4])?;
    let table = character_table(g)?;
    let ccw = analyze(&cover, &table, LocalConvention::Counterclockwise)?;
    let cw = analyze(&cover, &table, LocalConvention::Clockwise)?;
    for (x, y) in ccw.orbits.iter().zip(&cw.orbits) {
        println!("orbit {:?}: F1V {:?} vs {:?}", x.members, x.m_f1v, y.m_f1v);
    }
    println!(
        "{}: dimension {} vs {}, same findings {}",
        ccw.convention,
        ccw.isotrivial_dimension,
        cw.isotrivial_dimension,
        same_findings(&ccw, &cw)
    );
    Ok(())
}
