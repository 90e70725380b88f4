//! Writes a small bicategory as a presentation document for `nerve count`
//! and `nerve export`.
//!
//!     cargo run --example present -- [z2|z2-twisted|cyclic3] > bicat.json

use smbicat::bicat::{DiscreteMonoid, PresentedBicategory, Suspension, TwoGroupZ2};

fn main() -> smbicat::Result<()> {
    let which = std::env::args().nth(1).unwrap_or_else(|| "z2-twisted".into());
    let b = match which.as_str() {
        "z2" => PresentedBicategory::from_bicategory(&Suspension(TwoGroupZ2 { twisted: false }))?,
        "z2-twisted" => PresentedBicategory::from_bicategory(&Suspension(TwoGroupZ2 { twisted: true }))?,
        "cyclic3" => PresentedBicategory::from_bicategory(&Suspension(DiscreteMonoid::cyclic(3)))?,
        other => {
            eprintln!("unknown bicategory {other}");
            std::process::exit(2);
        }
    };
    println!("{}", serde_json::to_string_pretty(&b.to_doc()).expect("documents serialize"));
    Ok(())
}
