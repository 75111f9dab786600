mod common;

use std::sync::OnceLock;

use lieindex::chevalley::SimpleLie;
use lieindex::index::RankConfig;
use proptest::prelude::*;

fn algebra(i: usize) -> &'static SimpleLie {
    static CELLS: [OnceLock<SimpleLie>; 6] = [const { OnceLock::new() }; 6];
    CELLS[i].get_or_init(|| common::algebra(i))
}

fn instance(i: usize) -> impl Strategy<Value = (Vec<i64>, u32, u32)> {
    let n = algebra(i).roots.num_positive();
    (prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -2i64..=2], n), 1u32..=3, 1u32..=3)
}

fn run(i: usize, coeffs: &[i64], k: u32, j: u32) -> Result<(), TestCaseError> {
    let g = algebra(i);
    let e = common::nilpotent(g, coeffs);
    let out = common::check(g, &e, k, j, &RankConfig::default());
    prop_assert!(out.all(), "{} {coeffs:?}: {out:?}", common::SUITE[i].0);
    Ok(())
}

macro_rules! suite {
    ($($name:ident => $i:expr),* $(,)?) => {$(
        proptest! {
            #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]
            #[test]
            fn $name((coeffs, k, j) in instance($i)) {
                run($i, &coeffs, k, j)?;
            }
        }
    )*};
}

suite! {
    identities_sl4 => 0,
    identities_so7 => 1,
    identities_sp6 => 2,
    identities_so8 => 3,
    identities_g2 => 4,
    identities_f4 => 5,
}
