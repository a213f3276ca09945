mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use seifert_core::covers::*;
use seifert_core::symbol::{normalize_symbol, reverse_orientation, Obstruction};

#[test]
fn euler_sum_negates_under_reversal() {
    let mut r = rng(51);
    for _ in 0..1000 {
        let s = normalize_symbol(&closed_oriented(&mut r, 3, 5, 9, 4)).unwrap();
        assert_eq!(euler_sum(&reverse_orientation(&s).unwrap()).unwrap(), -euler_sum(&s).unwrap());
    }
}

#[test]
fn double_cover_shape() {
    let mut r = rng(52);
    for _ in 0..500 {
        let s = closed_nonorientable(&mut r, 4, 4, 9);
        let base = normalize_symbol(&s).unwrap();
        let n = base.expanded_pairs().len();
        let c = orientable_double_cover(&s).unwrap();
        assert_eq!(reverse_orientation(&c).unwrap(), c, "{s}");
        assert_eq!(c.obstruction(), Obstruction::Integer(-(n as i64)));
        let mut expect: Vec<_> = base
            .expanded_pairs()
            .into_iter()
            .flat_map(|p| [p, seifert_core::fst::CrossingPair::new(p.mu, p.mu - p.beta)])
            .collect();
        expect.sort();
        assert_eq!(c.pairs(), expect.as_slice());
        assert_eq!(c.class().orbit_euler_characteristic(), 2 * base.class().orbit_euler_characteristic(), "{s}");
    }
}

#[test]
fn fiberless_cover_scales_euler_sum() {
    let mut r = rng(53);
    let mut checked = 0;
    for _ in 0..400 {
        let s = closed_oriented(&mut r, 3, 4, 6, 3);
        let Ok(l1) = suggest_sheets(&s) else { continue };
        for k in 1..=3 {
            let lambda = l1 * k;
            let Ok(c) = fiberless_cover(&s, lambda) else { continue };
            let scaled = euler_sum(&s).unwrap() * BigRational::from_integer(BigInt::from(lambda));
            assert_eq!(BigRational::from_integer(BigInt::from(c.obstruction)), scaled);
            if let Some(sym) = &c.symbol {
                assert_eq!(euler_sum(sym).unwrap(), scaled);
                assert_eq!(sym.class().orbit_euler_characteristic(), c.orbit_euler);
            }
            let base = fiberless_cover(&s, l1).unwrap();
            assert_eq!(c.obstruction, k * base.obstruction);
            checked += 1;
        }
    }
    assert!(checked > 100);
}

/// Riemann-Hurwitz for the branched orbit map: each cone point of index
/// mu has lambda/mu preimages.
#[test]
fn worked_cover() {
    let s = sym("(O,o,0 | -1,(2,1),(3,1),(7,1))");
    let c = fiberless_cover(&s, 84).unwrap();
    let preimages: i64 = [2, 3, 7].iter().map(|mu| 84 / mu).sum();
    let chi = 84 * 2 - (3 * 84 - preimages);
    assert_eq!(c.orbit_euler, chi);
    assert_eq!(c.symbol, Some(sym("(O,o,2 | -2)")));
}
