mod common;

use common::*;
use num_traits::{Signed, ToPrimitive, Zero};
use seifert_core::covers::euler_sum;
use seifert_core::fst::CrossingPair;
use seifert_core::groups::{abelianization, coset_enumerate, pi1_presentation, EnumerationResult};
use seifert_core::lens::is_platonic_triple;
use seifert_core::symbol::{normalize_symbol, ClassPart, Obstruction, Orientability, SeifertSymbol};
use seifert_core::topology::*;

fn units(mu: i64) -> impl Iterator<Item = i64> {
    (1..mu).filter(move |b| num_integer::Integer::gcd(b, &mu) == 1)
}

fn three_fiber_symbols(max_mu: i64, max_b: i64) -> Vec<SeifertSymbol> {
    let mut out = Vec::new();
    for m1 in 2..=max_mu {
        for m2 in m1..=max_mu {
            for m3 in m2..=max_mu {
                for b1 in units(m1) {
                    for b2 in units(m2) {
                        for b3 in units(m3) {
                            for b in -max_b..=max_b {
                                out.push(SeifertSymbol::closed_oriented(0, b, &[(m1, b1), (m2, b2), (m3, b3)]).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn determinant_matches_smith_form() {
    for s in three_fiber_symbols(6, 3) {
        let h1 = abelianization(&pi1_presentation(&s));
        let det = three_fiber_determinant(s.b().unwrap(), s.pairs());
        if det.is_zero() {
            assert_eq!(h1.free_rank, 1, "{s}");
        } else {
            assert_eq!(h1.free_rank, 0, "{s}");
            assert_eq!(h1.order().unwrap(), det.abs(), "{s}");
        }
        let preds = predicates(&s).unwrap();
        if preds.small.is_none() {
            assert_eq!(preds.has_incompressible_surface, det.is_zero(), "{s}");
        }
    }
}

#[test]
fn finiteness_matches_enumeration() {
    for s in three_fiber_symbols(5, 2) {
        let mus: Vec<i64> = s.pairs().iter().map(|p| p.mu).collect();
        let platonic = is_platonic_triple(mus[0], mus[1], mus[2]);
        let preds = predicates(&s).unwrap();
        assert_eq!(preds.pi1_finite, platonic, "{s}");
        if platonic {
            let h1 = abelianization(&pi1_presentation(&s));
            assert!(h1.order().is_some(), "{s}");
            match coset_enumerate(&pi1_presentation(&s), 100_000).unwrap() {
                EnumerationResult::Finite(n) => {
                    let h = h1.order().unwrap().to_u64().unwrap();
                    assert_eq!(n % h, 0, "{s}");
                }
                e => panic!("{s}: {e:?}"),
            }
        }
    }
}

#[test]
fn not_small_spaces_are_aspherical() {
    let mut r = rng(41);
    for _ in 0..300 {
        let s = any_symbol(&mut r);
        let p = predicates(&s).unwrap();
        if p.small.is_none() {
            assert!(p.irreducible && p.p2_irreducible && p.aspherical && p.boundary_irreducible, "{s}");
            assert!(!p.pi1_finite);
        }
        if p.pi1_finite {
            assert!(!p.aspherical && !p.has_incompressible_surface);
        }
    }
}

#[test]
fn flat_spaces() {
    for s in flat_list() {
        assert_eq!(normalize_symbol(&s).unwrap(), s);
        assert!(is_flat(&s).unwrap(), "{s}");
        let p = predicates(&s).unwrap();
        assert!(p.small.is_none(), "{s}");
        if is_closed_oriented(&s) {
            assert!(euler_sum(&s).unwrap().is_zero(), "{s}");
        }
    }
}

#[test]
fn exception_list() {
    let cases = [
        ("(O,o,0 | 0)", false, false, "S2xS1"),
        ("(N,n,I,1 | (1,0))", false, false, "S2~xS1"),
        ("(N,n,I,1 | (0,0))", true, false, "P2xS1"),
        ("(O,n,1 | 0)", false, false, "P3#P3"),
        ("(O,o,0 | 1)", true, true, "S3"),
    ];
    for (text, irr, p2, name) in cases {
        let p = predicates(&sym(text)).unwrap();
        assert_eq!((p.irreducible, p.p2_irreducible, p.named.as_deref()), (irr, p2, Some(name)), "{text}");
    }
}

/// One fiber over P^2 with orientable total space: cyclic, or finite with
/// a second fibering over S2(2,2,r).
#[test]
fn projective_plane_family() {
    let class = ClassPart::new(Orientability::Orientable, Orientability::NonOrientable, None, 1).unwrap();
    for b in -3..=3 {
        for mu in 2..=6 {
            for beta in units(mu) {
                let s = SeifertSymbol::new(class, 0, 0, Obstruction::Integer(b), vec![CrossingPair::new(mu, beta)]).unwrap();
                let pres = pi1_presentation(&s);
                let h1 = abelianization(&pres).order().unwrap().to_i64().unwrap();
                let EnumerationResult::Finite(order) = coset_enumerate(&pres, P2_FAMILY_COSETS).unwrap() else { panic!("{s}") };
                // |e| (2/chi)^2 with chi = 1/mu
                assert_eq!(order as i64, 4 * mu * (b * mu - beta).abs(), "{s}");
                match classify_small(&s).unwrap().unwrap() {
                    SmallCategory::Lens(l) => {
                        assert_eq!((l.p, order as i64), (h1, h1), "{s}");
                        assert_eq!(l.p % 4, 0);
                    }
                    SmallCategory::Platonic(2, 2, r) => {
                        // same count over the other fibering, S2(2,2,r)
                        assert_eq!(order as i64 % (4 * r), 0, "{s}");
                        assert!(r >= 2 && order as i64 == r * h1);
                    }
                    other => panic!("{s}: {other:?}"),
                }
            }
        }
    }
}

#[test]
fn bounded_comparison() {
    let a = sym("(O,o,0; m=2 | -, (3,1))");
    let b = sym("(O,o,0; m=2 | -, (3,2))");
    assert!(bounded_equivalent(&a, &b).unwrap());
    assert!(!bounded_equivalent(&a, &sym("(O,o,0; m=2 | -, (5,1))")).unwrap());
    assert!(bounded_equivalent(&sym("(O,o,0; m=1 | -, (3,1))"), &a).is_err());
    assert!(bounded_equivalent(&sym("(O,o,0; m=2 | -)"), &a).is_err());
    assert!(bounded_equivalent(&sym("(O,o,1 | 0)"), &a).is_err());
}
