//! Euler sum, orientable double cover and fiberless covers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::fst::CrossingPair;
use crate::symbol::{normalize_symbol, ClassPart, Obstruction, Orientability, SeifertSymbol, Subtype};

/// `b + sum(beta_i / mu_i)` of a closed orientable symbol.
pub fn euler_sum(s: &SeifertSymbol) -> Result<BigRational> {
    let Obstruction::Integer(b) = s.obstruction() else {
        return Err(Error::NotClosedOriented);
    };
    let mut e = BigRational::from_integer(BigInt::from(b));
    for p in s.pairs() {
        e += BigRational::new(BigInt::from(p.beta), BigInt::from(p.mu));
    }
    Ok(e)
}

/// Class of the orientable double cover.
fn double_cover_class(c: &ClassPart) -> Result<ClassPart> {
    use Orientability::*;
    let g = c.genus();
    let (orbit, genus) = match (c.orbit(), c.subtype()) {
        (Orientable, _) => (Orientable, 2 * g - 1),
        (NonOrientable, Some(Subtype::I)) => (Orientable, g - 1),
        (NonOrientable, _) => (NonOrientable, 2 * g - 2),
    };
    ClassPart::new(Orientable, orbit, None, genus)
}

/// Orientable double cover of a closed non-orientable symbol: each pair
/// `(mu, beta)` lifts to `(mu, beta)` and `(mu, mu - beta)` and the
/// obstruction becomes `-n`.
pub fn orientable_double_cover(s: &SeifertSymbol) -> Result<SeifertSymbol> {
    if s.is_orientable() {
        return Err(Error::AlreadyOrientable);
    }
    if !s.is_closed() {
        return Err(Error::Precondition("double cover needs a closed symbol".into()));
    }
    let n = normalize_symbol(s)?;
    let base = n.expanded_pairs();
    let count = i64::try_from(base.len()).map_err(|_| Error::Overflow)?;
    let mut pairs = Vec::with_capacity(2 * base.len());
    for p in base {
        pairs.push(p);
        pairs.push(CrossingPair::new(p.mu, p.mu - p.beta));
    }
    let class = double_cover_class(n.class())?;
    normalize_symbol(&SeifertSymbol::new(class, 0, 0, Obstruction::Integer(-count), pairs)?)
}

/// Result of a fiberless cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberlessCover {
    /// Obstruction of the cover, `lambda` times the Euler sum.
    pub obstruction: i64,
    /// Euler characteristic of the cover's orbit surface.
    pub orbit_euler: i64,
    /// Full symbol when the orbit surface is determined.
    pub symbol: Option<SeifertSymbol>,
}

/// `chi(G) - sum(1 - 1/mu_i)`.
pub fn orbifold_euler(s: &SeifertSymbol) -> BigRational {
    let mut chi = BigRational::from_integer(BigInt::from(s.class().orbit_euler_characteristic()));
    for p in s.expanded_pairs() {
        chi -= BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(p.mu));
    }
    chi
}

fn closed_orientable(s: &SeifertSymbol) -> Result<SeifertSymbol> {
    if !matches!(s.obstruction(), Obstruction::Integer(_)) {
        return Err(Error::NotClosedOriented);
    }
    normalize_symbol(s)
}

fn to_i64(r: &BigRational) -> Result<i64> {
    debug_assert!(r.is_integer());
    r.to_integer().to_i64().ok_or(Error::Overflow)
}

/// Cover of degree `lambda` without exceptional fibers. The sheet count is
/// checked arithmetically only.
pub fn fiberless_cover(s: &SeifertSymbol, lambda: i64) -> Result<FiberlessCover> {
    let n = closed_orientable(s)?;
    if lambda < 1 {
        return Err(Error::Precondition(format!("sheet count {lambda} must be positive")));
    }
    let chi = orbifold_euler(&n);
    if chi.is_positive() {
        return Err(Error::QuotientFinite);
    }
    for p in n.pairs() {
        if lambda % p.mu != 0 {
            return Err(Error::IndexNotDivisible { mu: p.mu, lambda });
        }
    }
    let l = BigRational::from_integer(BigInt::from(lambda));
    let obstruction = to_i64(&(euler_sum(&n)? * &l))?;
    let orbit_euler = to_i64(&(chi * &l))?;
    let symbol = if n.class().orbit() == Orientability::Orientable {
        if orbit_euler % 2 != 0 {
            return Err(Error::OddEulerCharacteristic(orbit_euler));
        }
        let genus = u32::try_from(1 - orbit_euler / 2).map_err(|_| Error::Overflow)?;
        Some(SeifertSymbol::new(ClassPart::oo(genus), 0, 0, Obstruction::Integer(obstruction), Vec::new())?)
    } else {
        None
    };
    Ok(FiberlessCover {
        obstruction,
        orbit_euler,
        symbol,
    })
}

/// Arithmetic candidate for the sheet count: the lcm of the fiber indices,
/// doubled when that leaves an odd orbit Euler characteristic over an
/// orientable base. Existence of a matching cover is not checked.
pub fn suggest_sheets(s: &SeifertSymbol) -> Result<i64> {
    let n = closed_orientable(s)?;
    let chi = orbifold_euler(&n);
    if chi.is_positive() {
        return Err(Error::QuotientFinite);
    }
    let l0 = n.pairs().iter().fold(1i64, |acc, p| acc.lcm(&p.mu));
    let scaled = to_i64(&(chi * BigRational::from_integer(BigInt::from(l0))))?;
    if n.class().orbit() == Orientability::Orientable && scaled % 2 != 0 {
        Ok(2 * l0)
    } else {
        Ok(l0)
    }
}
