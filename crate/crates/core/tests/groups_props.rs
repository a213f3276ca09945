mod common;

use std::collections::HashSet;

use common::*;
use num_traits::Signed;
use seifert_core::groups::*;
use seifert_core::symbol::SeifertSymbol;

const LIMIT: usize = 100_000;

fn order(p: &Presentation) -> Option<u64> {
    match coset_enumerate(p, LIMIT).unwrap() {
        EnumerationResult::Finite(n) => Some(n),
        EnumerationResult::ExceededLimit(_) => None,
    }
}

/// Closure of the permutations `a`, `b` under composition.
fn generated(a: &[usize], b: &[usize]) -> usize {
    let id: Vec<usize> = (0..a.len()).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for x in [a, b] {
            let h: Vec<usize> = g.iter().map(|&i| x[i]).collect();
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen.len()
}

#[test]
fn dihedral_orders() {
    for n in 2..=10 {
        assert_eq!(order(&triangle_presentation(2, 2, n as i64)), Some(2 * n), "D{n}");
        if n < 3 {
            continue;
        }
        // reflections of the n-gon satisfy the relations and generate 2n elements
        let a: Vec<usize> = (0..n as usize).map(|i| (n as usize - i) % n as usize).collect();
        let b: Vec<usize> = (0..n as usize).map(|i| (n as usize + 1 - i) % n as usize).collect();
        assert_eq!(generated(&a, &b) as u64, 2 * n);
    }
}

#[test]
fn triangle_orders_match_closed_form() {
    for p in 2..=6u64 {
        for q in p..=6 {
            for r in q..=6 {
                let info = triangle_info(p, q, r).unwrap();
                if info.finite {
                    assert_eq!(order(&triangle_presentation(p as i64, q as i64, r as i64)), info.order, "({p},{q},{r})");
                }
            }
        }
    }
    for r in 2..=12 {
        assert_eq!(triangle_info(2, 2, r).unwrap().order, Some(2 * r));
    }
}

#[test]
fn euclidean_triangles_do_not_close() {
    for (p, q, r) in [(2, 3, 6), (2, 4, 4), (3, 3, 3), (2, 3, 7)] {
        assert_eq!(order(&triangle_presentation(p, q, r)), None, "({p},{q},{r})");
    }
}

#[test]
fn positive_euler_iff_finite_triangle() {
    for p in 2..=12u32 {
        for q in p..=12 {
            for r in q..=12 {
                let sig = FuchsianSignature::new(true, 0, 0, vec![p, q, r]).unwrap();
                let finite = triangle_info(p.into(), q.into(), r.into()).unwrap().finite;
                assert_eq!(fuchsian_euler(&sig).is_positive(), finite, "({p},{q},{r})");
                assert_eq!(fuchsian_size_class(&sig) == SizeClass::Finite, finite);
            }
        }
    }
}

#[test]
fn zero_chi_exactly_on_table() {
    let mut hits = 0;
    for orientable in [true, false] {
        for s in 0..=4u32 {
            for m in 0..=2u32 {
                let mut stack = vec![Vec::<u32>::new()];
                while let Some(d) = stack.pop() {
                    if let Ok(sig) = FuchsianSignature::new(orientable, s, m, d.clone()) {
                        let zero = fuchsian_size_class(&sig) == SizeClass::ZeroChi;
                        assert_eq!(zero, zero_chi_entry(&sig).is_some(), "{sig:?}");
                        hits += usize::from(zero);
                    }
                    if d.len() < 4 {
                        let lo = d.last().copied().unwrap_or(2);
                        for x in lo..=8 {
                            let mut e = d.clone();
                            e.push(x);
                            stack.push(e);
                        }
                    }
                }
            }
        }
    }
    assert_eq!(hits, ZeroChiEntry::ALL.len());
}

#[test]
fn first_homology_ignores_pair_order() {
    let mut r = rng(21);
    for _ in 0..300 {
        let s = any_symbol(&mut r);
        let mut pairs = s.pairs().to_vec();
        let half = pairs.len() / 2;
        pairs.rotate_left(half);
        let t = SeifertSymbol::new(*s.class(), s.boundary_tori(), s.boundary_klein(), s.obstruction(), pairs).unwrap();
        assert_eq!(abelianization(&pi1_presentation(&s)), abelianization(&pi1_presentation(&t)), "{s}");
    }
}

#[test]
fn triangle_abelianizations() {
    let h = |p, q, r| abelianization(&triangle_presentation(p, q, r)).to_string();
    assert_eq!(h(2, 3, 3), "Z3");
    assert_eq!(h(2, 3, 4), "Z2");
    assert_eq!(h(2, 3, 5), "0");
    for r in 2..=10 {
        assert_eq!(h(2, 2, r), if r % 2 == 0 { "Z2 + Z2" } else { "Z2" });
    }
}

#[test]
fn limit_too_small_is_rejected() {
    assert!(coset_enumerate(&triangle_presentation(2, 2, 2), 0).is_err());
}
