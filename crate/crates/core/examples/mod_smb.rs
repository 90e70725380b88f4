//! Builds Mod_R over finite sets and checks the strict symmetric monoidal laws.
//!
//!     cargo run --example mod_smb -- [maxdim] [limit]

use smbicat::bimonoid::make_sym_sets;
use smbicat::matmod::{build_mod, validate_mod_smb};
use smbicat::sampling::Budget;

fn main() -> smbicat::Result<()> {
    let mut args = std::env::args().skip(1);
    let maxdim = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let limit = args.next().and_then(|a| a.parse().ok()).unwrap_or(20_000);
    let m = build_mod(make_sym_sets(1)?, maxdim)?;
    for n in 0..=maxdim {
        println!("GL_{n}: {} matrices", m.gl(n).len());
    }
    let report = validate_mod_smb(&m, &Budget::new(limit, 7));
    println!("{}", report.summary());
    Ok(())
}
