//! Reading a cover from its JSON description, completing the last puncture
//! word, and writing it back with shortest generator words.
//!
//! cargo run --example cover_file

use pwscope::covers::CoverFile;
use pwscope::groups::DEFAULT_MAX_COSETS;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = r#"{
        "group": "binary:T",
        "base": {"genus": 1, "punctures": 2},
        "handles": [["x", "y"]],
        "punctures_monodromy": ["x*y"]
    }"#;
    let file = CoverFile::from_json(text)?;
    let g = file.build_group(DEFAULT_MAX_COSETS)?;
    let cover = file.resolve(g, true)?;
    println!("tuple {:?}, cover genus {}", cover.tuple(), cover.cover_genus());
    println!("ramification orders {:?}", cover.ramification_orders());
    let back = CoverFile::from_datum(&file.group, &cover);
    println!("{}", serde_json::to_string_pretty(&back)?);
    Ok(())
}
