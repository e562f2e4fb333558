//! Seeded random covers, analyzed and certified.
//!
//! cargo run --example random_covers

use std::sync::Arc;

use pwscope::chartab::character_table;
use pwscope::covers::{prym_profile, Base, LocalConvention};
use pwscope::detector::{report_from_profile, tsv_row, TSV_HEADER};
use pwscope::groups::{catalog, DEFAULT_MAX_COSETS};
use pwscope::oracle::certify;
use pwscope::search::random_covers;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(catalog("dicyclic:4", DEFAULT_MAX_COSETS)?);
    let table = character_table(g.clone())?;
    println!("{TSV_HEADER}\tcertificate");
    for base in [Base { genus: 0, punctures: 4 }, Base { genus: 1, punctures: 1 }, Base { genus: 2, punctures: 0 }] {
        for cover in random_covers(&g, base, 3, 2024, 10_000) {
            let profile = prym_profile(&cover, &table, LocalConvention::Counterclockwise)?;
            let report = report_from_profile(&cover, &table, &profile)?;
            let record = certify(&cover, &table, &profile)?;
            println!("{}\t{}", tsv_row(&report), &record.cover_hash[..12]);
        }
    }
    Ok(())
}
