//! Schur expansion against literal multiplication by the Vandermonde.

mod common;

use std::collections::BTreeMap;

use common::schur_by_vandermonde;
use proptest::prelude::*;
use secant_core::symfunc::{plethysm_character, schur_expand, xvar, Inner};
use secant_core::young::partitions;
use secant_core::{Partition, Rational};

fn compare(mu: &[u32], k: u32, inner: Inner, rows: u32) {
    let mu = Partition::rows(mu);
    let f = plethysm_character(&mu, k, inner, rows).unwrap();
    let table = schur_expand(&f, rows).unwrap();
    let got: BTreeMap<Vec<u32>, Rational> =
        table.iter().map(|(p, m)| (p.parts().to_vec(), Rational::from(m as i64))).collect();
    let oracle: BTreeMap<Vec<u32>, Rational> =
        schur_by_vandermonde(f.poly(), xvar, rows).into_iter().filter(|(_, c)| !c.is_zero()).collect();
    assert_eq!(got, oracle, "S{mu}({inner:?}^{k}) in {rows} rows");
}

#[test]
fn small_plethysms() {
    compare(&[2], 2, Inner::Sym, 2);
    compare(&[1, 1], 3, Inner::Sym, 2);
    compare(&[3], 2, Inner::Wedge, 4);
    compare(&[2, 1], 2, Inner::Sym, 3);
    compare(&[3], 3, Inner::Sym, 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_plethysms(n in 2u32..=3, pick in 0usize..8, k in 1u32..=3, wedge in any::<bool>(), rows in 2u32..=4) {
        let all = partitions(n, n as usize, n);
        let mu = &all[pick % all.len()];
        let inner = if wedge { Inner::Wedge } else { Inner::Sym };
        compare(mu, k, inner, rows);
    }
}
