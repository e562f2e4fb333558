//! Exact character tables by Dixon's method, with the orthogonality
//! relations checked in the cyclotomic field.
//!
//! cargo run --example character_table -- binary:T

use std::sync::Arc;

use pwscope::chartab::character_table;
use pwscope::groups::{catalog, DEFAULT_MAX_COSETS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "binary:T".into());
    let g = Arc::new(catalog(&spec, DEFAULT_MAX_COSETS)?);
    let t = character_table(g.clone())?;
    let classes = t.classes();
    println!("{spec}: order {}, {} classes, conductor {}", g.order(), t.len(), t.conductor());
    println!("class sizes {:?}", classes.sizes());
    for i in 0..t.len() {
        let row: Vec<String> = t.character(i).iter().map(ToString::to_string).collect();
        println!("chi{i} (deg {}, fs {:+}): {}", t.degree(i), t.frobenius_schur(i), row.join(", "));
    }
    println!("galois orbits {:?}", t.galois_orbits());
    let rows_ok = (0..t.len()).all(|i| (0..t.len()).all(|j| t.row_product(i, j).as_integer() == Some((i == j) as i64)));
    let cols_ok = (0..t.len()).all(|c| {
        let want = (g.order() / classes.size(c)) as i64;
        t.column_product(c, c).as_integer() == Some(want)
    });
    println!("row orthogonality {rows_ok}, column norms {cols_ok}");
    Ok(())
}
