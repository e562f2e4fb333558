//! Isotrivial dimension of the standard dicyclic origami for n = 2..12.
//!
//! cargo run --example dicyclic_sweep

use std::sync::Arc;

use pwscope::chartab::character_table;
use pwscope::covers::{CoverDatum, LocalConvention};
use pwscope::detector::analyze;
use pwscope::groups::dicyclic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("n\t|G|\tg'\tqualifying orbits\tdimension");
    for n in 2..=12 {
        let g = Arc::new(dicyclic(n)?);
        let (a, b) = (g.generators()[0], g.generators()[1]);
        let cover = CoverDatum::origami(g.clone(), a, b)?;
        let r = analyze(&cover, &character_table(g)?, LocalConvention::Counterclockwise)?;
        println!(
            "{n}\t{}\t{}\t{}\t{}",
            r.group_order,
            r.cover_genus,
            r.qualifying_orbits.len(),
            r.isotrivial_dimension
        );
    }
    Ok(())
}
