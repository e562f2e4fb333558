//! The cyclic Z/4 cover of the sphere branched at four points, all local
//! monodromies equal to the generator (the curve y^4 = x(x-1)(x-t)).
//!
//! cargo run --example cyclic_genus_zero

use std::sync::Arc;

use pwscope::chartab::character_table;
use pwscope::covers::{prym_profile, CoverDatum, LocalConvention};
use pwscope::detector::analyze;
use pwscope::groups::cyclic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(cyclic(4)?);
    let a = g.generators()[0];
    let cover = CoverDatum::new(g.clone(), vec![], vec![a; 4])?;
    let table = character_table(g)?;
    let profile = prym_profile(&cover, &table, LocalConvention::Counterclockwise)?;
    println!("g' = {}", profile.cover_genus);
    for m in &profile.irreps {
        println!("chi{}: h0 = {}, h1 = {}, V = {}, F1V = {}", m.irrep, m.m_h0, m.m_h1, m.m_v, m.m_f1v);
    }
    let r = analyze(&cover, &table, LocalConvention::Counterclockwise)?;
    for o in r.orbits.iter().filter(|o| o.qualifies()) {
        println!("orbit {:?}: criterion 1 {}, criterion 2 {}", o.members, o.criterion1, o.criterion2);
    }
    println!("isotrivial dimension {}", r.isotrivial_dimension);
    Ok(())
}
