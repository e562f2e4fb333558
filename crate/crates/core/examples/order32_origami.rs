//! An order-32 group with a unique symplectic degree-4 irrep gives a
//! genus-9 origami with a 4-dimensional isotrivial factor.
//!
//! cargo run --example order32_origami

use std::sync::Arc;

use pwscope::chartab::character_table;
use pwscope::covers::{CoverDatum, LocalConvention};
use pwscope::detector::analyze;
use pwscope::groups::{catalog, DEFAULT_MAX_COSETS, ORDER_32_PRESENTATION};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(catalog(&format!("presentation:{ORDER_32_PRESENTATION}"), DEFAULT_MAX_COSETS)?);
    println!("order {}, derived subgroup of order {}", g.order(), g.derived_subgroup().len());
    let (b, c) = (g.generators()[1], g.generators()[2]);
    let table = character_table(g.clone())?;
    let four = (0..table.len()).find(|&i| table.degree(i) == 4).expect("degree-4 irrep");
    println!(
        "degree-4 irrep {four}: indicator {}, value {} on [c,b]",
        table.frobenius_schur(four),
        table.value_at(four, g.commutator(c, b))
    );
    let r = analyze(&CoverDatum::origami(g, c, b)?, &table, LocalConvention::Counterclockwise)?;
    println!("g' = {}, isotrivial dimension {}, verdict {}", r.cover_genus, r.isotrivial_dimension, r.verdict.as_str());
    Ok(())
}
