//! Fibered solid tori: the `nu/mu` invariant, crossing invariants and the
//! lifting arithmetic used by covers.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{mod_inverse, reduce_mod1, ReducedFraction};
use crate::error::Result;

/// A fibered solid torus, classified by `nu/mu` mod 1 (up to sign when
/// `oriented` is false).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiberedSolidTorus {
    frac: ReducedFraction,
    oriented: bool,
}

impl FiberedSolidTorus {
    pub fn frac(&self) -> ReducedFraction {
        self.frac
    }

    pub fn nu(&self) -> i64 {
        self.frac.num()
    }

    pub fn mu(&self) -> i64 {
        self.frac.den()
    }

    pub fn oriented(&self) -> bool {
        self.oriented
    }

    /// Exceptional means index at least 2.
    pub fn is_exceptional(&self) -> bool {
        self.mu() > 1
    }
}

impl fmt::Display for FiberedSolidTorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.frac)
    }
}

/// Canonical representative: `0 <= nu < mu` when oriented, folded into
/// `0 <= nu <= mu/2` otherwise.
pub fn fst_normalize(num: i64, den: i64, oriented: bool) -> Result<FiberedSolidTorus> {
    let r = reduce_mod1(num, den)?;
    let frac = if !oriented && 2 * r.num() > r.den() {
        ReducedFraction::new(r.den() - r.num(), r.den())?
    } else {
        r
    };
    Ok(FiberedSolidTorus { frac, oriented })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceMode {
    Preserve,
    Reverse,
    Any,
}

fn negated(f: ReducedFraction) -> ReducedFraction {
    // Both inputs are already reduced, so this cannot fail.
    reduce_mod1(-f.num(), f.den()).expect("nonzero denominator")
}

/// Fiber-preserving homeomorphism test between two fibered solid tori.
pub fn fst_equivalent(t1: &FiberedSolidTorus, t2: &FiberedSolidTorus, mode: EquivalenceMode) -> bool {
    let a = reduce_mod1(t1.nu(), t1.mu()).expect("nonzero denominator");
    let b = reduce_mod1(t2.nu(), t2.mu()).expect("nonzero denominator");
    let preserve = a == b;
    let reverse = a == negated(b);
    match mode {
        EquivalenceMode::Preserve => preserve,
        EquivalenceMode::Reverse => reverse,
        EquivalenceMode::Any => preserve || reverse,
    }
}

/// Crossing invariants `(mu, beta)` of an exceptional fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CrossingPair {
    pub mu: i64,
    pub beta: i64,
}

impl CrossingPair {
    pub fn new(mu: i64, beta: i64) -> Self {
        Self { mu, beta }
    }
}

impl fmt::Display for CrossingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.mu, self.beta)
    }
}

/// `(mu, beta)` with `nu*beta = 1 (mod mu)` and `0 <= beta < mu`.
/// The caller folds `beta` when working without fiber orientation.
pub fn crossing_invariants(t: &FiberedSolidTorus) -> CrossingPair {
    let mu = t.mu();
    let nu = t.nu().rem_euclid(mu);
    let beta = mod_inverse(nu, mu).expect("nu and mu are coprime");
    CrossingPair { mu, beta }
}

/// Folds `beta` into `[0, mu/2]` by `beta -> mu - beta`.
pub fn fold_beta(p: CrossingPair) -> CrossingPair {
    let beta = p.beta.rem_euclid(p.mu);
    if 2 * beta > p.mu {
        CrossingPair { mu: p.mu, beta: p.mu - beta }
    } else {
        CrossingPair { mu: p.mu, beta }
    }
}

/// Integer class `a*X + b*Y` in a named basis of a torus's first homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundaryClass {
    pub a: i64,
    pub b: i64,
}

/// The meridian `beta*H + mu*Q` in the `(H, Q)` basis.
pub fn meridian_from_crossing(p: CrossingPair) -> BoundaryClass {
    BoundaryClass { a: p.beta, b: p.mu }
}

/// Lift of a fibered solid torus to the `sigma`-fold cyclic cover along its
/// core: number of preimage components and the type of each component.
pub fn lift_fiber(sigma: i64, t: &FiberedSolidTorus) -> Result<(i64, FiberedSolidTorus)> {
    assert!(sigma >= 1, "sheet count must be positive");
    let g = sigma.gcd(&t.mu());
    let lifted = fst_normalize((sigma / g) * t.nu(), t.mu() / g, t.oriented())?;
    Ok((g, lifted))
}

/// Lift of the boundary curve `J = alpha*m - beta*l` (given as
/// `BoundaryClass { a: alpha, b: -beta }` in the `(m, l)` basis) to the
/// `sigma`-fold cover. Returns the component count and one component's class
/// in the `(m', l')` basis.
pub fn lift_curve(sigma: i64, j: BoundaryClass) -> (i64, BoundaryClass) {
    assert!(sigma >= 1, "sheet count must be positive");
    assert!(j != BoundaryClass { a: 0, b: 0 }, "curve class must be nonzero");
    let alpha = j.a;
    let beta = -j.b;
    let g = sigma.gcd(&beta);
    let lifted = BoundaryClass {
        a: alpha * sigma / g,
        b: -(beta / g),
    };
    (g, lifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64, d: i64) -> FiberedSolidTorus {
        fst_normalize(n, d, true).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(t(5, 3).frac().to_string(), "2/3");
        assert_eq!(fst_normalize(2, 3, false).unwrap().frac().to_string(), "1/3");
        assert_eq!(fst_normalize(1, 2, false).unwrap().frac().to_string(), "1/2");
    }

    #[test]
    fn equivalence_examples() {
        assert!(fst_equivalent(&t(1, 3), &t(2, 3), EquivalenceMode::Reverse));
        assert!(!fst_equivalent(&t(1, 3), &t(2, 3), EquivalenceMode::Preserve));
        assert!(fst_equivalent(&t(1, 2), &t(1, 2), EquivalenceMode::Reverse));
        assert!(fst_equivalent(&t(0, 1), &t(0, 1), EquivalenceMode::Reverse));
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(crossing_invariants(&t(1, 2)), CrossingPair::new(2, 1));
        assert_eq!(crossing_invariants(&t(2, 5)), CrossingPair::new(5, 3));
        assert_eq!(crossing_invariants(&t(0, 1)), CrossingPair::new(1, 0));
        assert_eq!(fold_beta(CrossingPair::new(5, 3)), CrossingPair::new(5, 2));
    }

    #[test]
    fn meridian_examples() {
        assert_eq!(meridian_from_crossing(CrossingPair::new(2, 1)), BoundaryClass { a: 1, b: 2 });
        assert_eq!(meridian_from_crossing(CrossingPair::new(1, 0)), BoundaryClass { a: 0, b: 1 });
        assert_eq!(meridian_from_crossing(CrossingPair::new(5, 3)), BoundaryClass { a: 3, b: 5 });
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_fiber(2, &t(1, 2)).unwrap(), (2, t(0, 1)));
        assert_eq!(lift_fiber(1, &t(3, 7)).unwrap(), (1, t(3, 7)));
        assert_eq!(lift_fiber(3, &t(2, 5)).unwrap(), (1, t(1, 5)));
        let j = BoundaryClass { a: 1, b: -2 };
        assert_eq!(lift_curve(2, j), (2, BoundaryClass { a: 1, b: -1 }));
        assert_eq!(lift_curve(1, j), (1, j));
        assert_eq!(lift_curve(6, BoundaryClass { a: 1, b: -4 }), (2, BoundaryClass { a: 3, b: -2 }));
    }
}
