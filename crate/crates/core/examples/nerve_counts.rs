//! Level sizes of a few Segal nerves, and the bar comparison for `GL_1(ℕ≤3)`.
//!
//!     cargo run --example nerve_counts

use smbicat::bicat::{DiscreteMonoid, Suspension, TwoGroupZ2};
use smbicat::bimonoid::{make_discrete_semiring, make_sym_sets, Additive, SemiringTables};
use smbicat::matmod::{build_mod, GlMonoidal};
use smbicat::nerve::{bar_equals_nerve, level_sizes, NerveLimits};

fn main() -> smbicat::Result<()> {
    let lim = NerveLimits::default();
    println!("Σ(permutations, +): {:?}", level_sizes(&Suspension(Additive(make_sym_sets(2)?)), 2, &lim)?);
    println!("Σ(Z/3):             {:?}", level_sizes(&Suspension(DiscreteMonoid::cyclic(3)), 3, &lim)?);
    println!("Σ(twisted Z/2):     {:?}", level_sizes(&Suspension(TwoGroupZ2 { twisted: true }), 3, &lim)?);
    let m = build_mod(make_discrete_semiring(SemiringTables::truncated_naturals(3))?, 1)?;
    let rep = bar_equals_nerve(&GlMonoidal { m: &m, n: 1 }, 3, &lim)?;
    print!("{}", rep.summary());
    Ok(())
}
