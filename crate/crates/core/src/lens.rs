//! Lens spaces: normal forms, the gluing-matrix fibering and recognition of
//! Seifert symbols over the sphere.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{bezout, mod_inverse, ReducedFraction};
use crate::error::{Error, Result};
use crate::fst::{fst_normalize, CrossingPair, FiberedSolidTorus};
use crate::groups::{abelianization, pi1_presentation};
use crate::symbol::{normalize_symbol, ClassPart, Obstruction, Orientability, SeifertSymbol};

/// Lens space parameters, `p = 0` for `S2xS1` and `p = 1` for `S3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LensParams {
    pub p: i64,
    pub q: i64,
}

impl fmt::Display for LensParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            0 => f.write_str("S2xS1"),
            1 => f.write_str("S3"),
            p => write!(f, "L({p},{})", self.q),
        }
    }
}

/// The four values `±q^{±1} mod p`.
fn lens_orbit(p: i64, q: i64) -> [i64; 4] {
    let qi = mod_inverse(q, p).expect("coprime");
    [q.rem_euclid(p), (-q).rem_euclid(p), qi, (-qi).rem_euclid(p)]
}

/// Canonical `(p, q)`: least element of `{±q^{±1} mod p}`.
pub fn lens_normalize(p: i64, q: i64) -> Result<LensParams> {
    if p < 0 {
        return Err(Error::Validity(format!("lens order {p} is negative")));
    }
    if p <= 1 {
        return Ok(LensParams { p, q: 0 });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let q = *lens_orbit(p, q).iter().min().expect("nonempty");
    Ok(LensParams { p, q })
}

/// Homeomorphism test between lens spaces.
pub fn lens_equivalent(a: &LensParams, b: &LensParams) -> Result<bool> {
    Ok(lens_normalize(a.p, a.q)? == lens_normalize(b.p, b.q)?)
}

/// Sewing matrix `(q r; p s)` taking the meridian of the second solid torus
/// to `q*m + p*l` of the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GluingMatrix {
    pub q: i64,
    pub r: i64,
    pub p: i64,
    pub s: i64,
}

impl GluingMatrix {
    pub fn new(q: i64, r: i64, p: i64, s: i64) -> Result<Self> {
        let m = Self { q, r, p, s };
        match m.det() {
            Some(1) | Some(-1) => Ok(m),
            Some(d) => Err(Error::BadDeterminant(d)),
            None => Err(Error::Overflow),
        }
    }

    pub fn det(&self) -> Option<i64> {
        self.q.checked_mul(self.s)?.checked_sub(self.p.checked_mul(self.r)?)
    }
}

impl fmt::Display for GluingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.q, self.r, self.p, self.s)
    }
}

/// Fibered-solid-torus invariants of the two halves when the first half
/// is fibered with invariant `nu/mu`: `nu/mu` and `(q nu + r mu)/(p nu + s mu)`.
pub fn fibering_transform(a: &GluingMatrix, f: ReducedFraction) -> Result<(FiberedSolidTorus, FiberedSolidTorus)> {
    GluingMatrix::new(a.q, a.r, a.p, a.s)?;
    let (nu, mu) = (f.num(), f.den());
    let nu2 = a.q * nu + a.r * mu;
    let mu2 = a.p * nu + a.s * mu;
    if mu2 == 0 {
        return Err(Error::DegenerateGluing);
    }
    Ok((fst_normalize(nu, mu, true)?, fst_normalize(nu2, mu2, true)?))
}

/// Seifert symbol `(O,o,0 | b, ...)` of the lens space sewn by `a` with the
/// first half fibered by `nu/mu`. The second half is attached with the
/// opposite orientation, so its pair is the reversed crossing pair of its
/// fraction. `b` is read against the presentation relator `prod c_i h^b`.
pub fn gluing_symbol(a: &GluingMatrix, f: ReducedFraction) -> Result<SeifertSymbol> {
    let a = GluingMatrix::new(a.q, a.r, a.p, a.s)?;
    let (nu, mu) = (f.num(), f.den());
    // nu*y - mu*x = 1
    let (g, y, xneg) = bezout(nu, mu);
    debug_assert_eq!(g, 1);
    let x = -xneg;
    let mu2 = a.p * nu + a.s * mu;
    let y2 = a.p * x + a.s * y;
    if mu2 == 0 {
        return Err(Error::DegenerateGluing);
    }
    let raw = [(mu, y), (mu2, -y2)];
    let mut b = 0i64;
    let mut pairs = Vec::new();
    for (m, beta) in raw {
        let (m, beta) = if m < 0 { (-m, -beta) } else { (m, beta) };
        b -= beta.div_euclid(m);
        let beta = beta.rem_euclid(m);
        if m > 1 {
            pairs.push(CrossingPair::new(m, beta));
        }
    }
    pairs.sort();
    SeifertSymbol::new(ClassPart::oo(0), 0, 0, Obstruction::Integer(b), pairs)
}

/// Gluing data certifying a lens-space recognition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub matrix: GluingMatrix,
    pub fraction: ReducedFraction,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gluing {} with first torus {}", self.matrix, self.fraction)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recognition {
    S3(Option<Witness>),
    S2xS1(Option<Witness>),
    Lens(LensParams, Option<Witness>),
    Platonic(i64, i64, i64),
    Generic,
}

impl Recognition {
    pub fn witness(&self) -> Option<Witness> {
        match *self {
            Recognition::S3(w) | Recognition::S2xS1(w) | Recognition::Lens(_, w) => w,
            _ => None,
        }
    }

    /// Lens parameters for the three lens-type outcomes.
    pub fn lens_params(&self) -> Option<LensParams> {
        match *self {
            Recognition::S3(_) => Some(LensParams { p: 1, q: 0 }),
            Recognition::S2xS1(_) => Some(LensParams { p: 0, q: 0 }),
            Recognition::Lens(l, _) => Some(l),
            _ => None,
        }
    }
}

impl fmt::Display for Recognition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recognition::S3(_) => f.write_str("S3"),
            Recognition::S2xS1(_) => f.write_str("S2xS1"),
            Recognition::Lens(l, _) => write!(f, "{l}"),
            Recognition::Platonic(a, b, c) => write!(f, "platonic({a},{b},{c})"),
            Recognition::Generic => f.write_str("generic"),
        }
    }
}

/// True for the triples `(2,2,r)`, `(2,3,3)`, `(2,3,4)`, `(2,3,5)`.
pub fn is_platonic_triple(a: i64, b: i64, c: i64) -> bool {
    let mut t = [a, b, c];
    t.sort_unstable();
    matches!(t, [2, 2, r] if r >= 2) || matches!(t, [2, 3, 3] | [2, 3, 4] | [2, 3, 5])
}

/// Searches gluing matrices `(q r; p s)` of determinant 1 and first-torus
/// fractions whose glued symbol equals `target` (normalized, at most two
/// pairs). Returns the lens parameters and the witness.
fn search_lens(target: &SeifertSymbol, p: i64) -> Option<(LensParams, Witness)> {
    let b = target.b().expect("closed");
    let pairs = target.pairs();
    let prod: i64 = pairs.iter().map(|c| c.mu).product();
    let bound = p + prod + b.abs() * prod;
    let mut firsts: Vec<i64> = pairs.iter().map(|c| c.mu).collect();
    firsts.push(1);
    firsts.dedup();
    for &mu in &firsts {
        for nu in 0..mu {
            if nu.gcd(&mu) != 1 {
                continue;
            }
            let frac = ReducedFraction::new(nu, mu).expect("mu >= 1");
            for s in -bound..=bound {
                let (q, r) = match p {
                    0 if s.abs() == 1 => (s, 0),
                    0 => continue,
                    _ => match mod_inverse(s, p) {
                        Some(q) => (q, (q * s - 1) / p),
                        None => continue,
                    },
                };
                let a = GluingMatrix { q, r, p, s };
                match gluing_symbol(&a, frac) {
                    Ok(sym) if sym == *target => {
                        let params = lens_normalize(p, q).expect("coprime by construction");
                        return Some((params, Witness { matrix: a, fraction: frac }));
                    }
                    _ => {}
                }
            }
        }
    }
    None
}

/// Recognizes a closed `(O,o,0)` symbol: lens spaces (with `p = |H1|`) for
/// at most two pairs, platonic triples, otherwise generic.
pub fn recognize_s2_symbol(s: &SeifertSymbol) -> Result<Recognition> {
    let c = s.class();
    if !(s.is_closed() && c.total() == Orientability::Orientable && c.orbit() == Orientability::Orientable && c.genus() == 0) {
        return Err(Error::WrongBase(c.label()));
    }
    let n = normalize_symbol(s)?;
    match n.pairs().len() {
        0..=2 => {
            let h1 = abelianization(&pi1_presentation(&n));
            let p = match h1.order() {
                None => 0,
                Some(o) => o.to_i64().ok_or(Error::Overflow)?,
            };
            let found = search_lens(&n, p);
            let witness = found.map(|(_, w)| w);
            Ok(match p {
                0 => Recognition::S2xS1(witness),
                1 => Recognition::S3(witness),
                _ => {
                    let params = match found {
                        Some((l, _)) => l,
                        None => {
                            return Err(Error::Precondition(format!(
                                "no gluing matrix reproduces {n}"
                            )))
                        }
                    };
                    Recognition::Lens(params, witness)
                }
            })
        }
        3 => {
            let m: Vec<i64> = n.pairs().iter().map(|c| c.mu).collect();
            if is_platonic_triple(m[0], m[1], m[2]) {
                Ok(Recognition::Platonic(m[0], m[1], m[2]))
            } else {
                Ok(Recognition::Generic)
            }
        }
        _ => Ok(Recognition::Generic),
    }
}
