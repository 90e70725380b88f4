//! Runs the Ĉ(n) ≃ Cⁿ checks over Mod_R of finite sets.
//!
//!     cargo run --example gamma_special -- [n] [budget] [seed]

use smbicat::bimonoid::make_sym_sets;
use smbicat::gamma::verify_special;
use smbicat::matmod::build_mod;
use smbicat::sampling::Budget;

fn main() -> smbicat::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(2) as usize;
    let budget = args.next().flatten().unwrap_or(80);
    let seed = args.next().flatten().unwrap_or(7);
    let m = build_mod(make_sym_sets(1)?, 2)?;
    let rep = verify_special(&m, n, 16, &Budget::new(budget, seed))?;
    print!("{}", rep.summary());
    println!("passed: {}", rep.passed());
    Ok(())
}
