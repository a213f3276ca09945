//! Small and flat spaces, topological predicates and the bounded
//! homeomorphism test.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fst::CrossingPair;
use crate::groups::{abelianization, coset_enumerate, pi1_presentation, EnumerationResult};
use crate::lens::{lens_normalize, recognize_s2_symbol, LensParams, Recognition};
use crate::symbol::{normalize_symbol, parse_symbol, reverse_orientation, Obstruction, Orientability, SeifertSymbol, Subtype};

/// Coset budget used to decide the orientable P^2 family.
pub const P2_FAMILY_COSETS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallCategory {
    FiberedSolidTorus,
    S3,
    S2xS1,
    Lens(LensParams),
    Platonic(i64, i64, i64),
    P2xS1,
    /// The non-orientable S^2 bundle over S^1.
    TwistedS2Bundle,
    /// Connected sum of two projective 3-spaces.
    P3P3,
}

impl SmallCategory {
    pub fn kind(&self) -> &'static str {
        match self {
            SmallCategory::FiberedSolidTorus => "fibered solid torus",
            SmallCategory::S3 | SmallCategory::S2xS1 | SmallCategory::Lens(_) => "lens space",
            SmallCategory::Platonic(..) => "platonic",
            SmallCategory::P2xS1 | SmallCategory::TwistedS2Bundle | SmallCategory::P3P3 => "P2 family",
        }
    }
}

impl fmt::Display for SmallCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmallCategory::FiberedSolidTorus => f.write_str("fibered solid torus"),
            SmallCategory::S3 => f.write_str("S3"),
            SmallCategory::S2xS1 => f.write_str("S2xS1"),
            SmallCategory::Lens(l) => write!(f, "{l}"),
            SmallCategory::Platonic(a, b, c) => write!(f, "platonic({a},{b},{c})"),
            SmallCategory::P2xS1 => f.write_str("P2xS1"),
            SmallCategory::TwistedS2Bundle => f.write_str("S2~xS1"),
            SmallCategory::P3P3 => f.write_str("P3#P3"),
        }
    }
}

fn is_oo0(s: &SeifertSymbol) -> bool {
    let c = s.class();
    c.total() == Orientability::Orientable && c.orbit() == Orientability::Orientable && c.genus() == 0
}

fn is_class(s: &SeifertSymbol, total: Orientability, subtype: Option<Subtype>, crosscaps: u32) -> bool {
    let c = s.class();
    c.total() == total && c.orbit() == Orientability::NonOrientable && c.subtype() == subtype && c.genus() == crosscaps
}

fn order_i64(o: &BigInt) -> Result<i64> {
    o.to_i64().ok_or(Error::Overflow)
}

/// Orientable total space over `P^2` with at most one exceptional fiber.
fn classify_rho_p2(n: &SeifertSymbol) -> Result<Option<SmallCategory>> {
    if n.pairs().is_empty() && n.b() == Some(0) {
        return Ok(Some(SmallCategory::P3P3));
    }
    let pres = pi1_presentation(n);
    let h1 = abelianization(&pres);
    let Some(h1_order) = h1.order() else {
        return Err(Error::Precondition(format!("{n} has infinite first homology")));
    };
    let h1_order = order_i64(&h1_order)?;
    match coset_enumerate(&pres, P2_FAMILY_COSETS)? {
        EnumerationResult::Finite(order) => {
            let order = i64::try_from(order).map_err(|_| Error::Overflow)?;
            if order == h1_order {
                // Abelian, hence cyclic: L(4k, 2k-1).
                if h1.torsion.len() > 1 || order % 4 != 0 {
                    return Err(Error::Precondition(format!("{n}: abelian group of order {order} is not cyclic of order 4k")));
                }
                Ok(Some(SmallCategory::Lens(lens_normalize(order, order / 2 - 1)?)))
            } else {
                Ok(Some(SmallCategory::Platonic(2, 2, order / h1_order)))
            }
        }
        EnumerationResult::ExceededLimit(_) => Err(Error::Precondition(format!(
            "{n}: coset enumeration exceeded {P2_FAMILY_COSETS} cosets"
        ))),
    }
}

/// Small category of a symbol, if it is small.
pub fn classify_small(s: &SeifertSymbol) -> Result<Option<SmallCategory>> {
    let n = normalize_symbol(s)?;
    if !n.is_closed() {
        let solid = is_oo0(&n) && n.boundary_tori() == 1 && n.boundary_klein() == 0 && n.pairs().len() <= 1;
        return Ok(solid.then_some(SmallCategory::FiberedSolidTorus));
    }
    if is_oo0(&n) {
        return Ok(match recognize_s2_symbol(&n)? {
            Recognition::S3(_) => Some(SmallCategory::S3),
            Recognition::S2xS1(_) => Some(SmallCategory::S2xS1),
            Recognition::Lens(l, _) => Some(SmallCategory::Lens(l)),
            Recognition::Platonic(a, b, c) => Some(SmallCategory::Platonic(a, b, c)),
            Recognition::Generic => None,
        });
    }
    if is_class(&n, Orientability::NonOrientable, Some(Subtype::I), 1) && n.fiber_count() <= 1 {
        let h1 = abelianization(&pi1_presentation(&n));
        let two = BigInt::from(2);
        return match (h1.free_rank, h1.torsion.as_slice()) {
            (1, []) => Ok(Some(SmallCategory::TwistedS2Bundle)),
            (1, [t]) if *t == two => Ok(Some(SmallCategory::P2xS1)),
            _ => Err(Error::Precondition(format!("{n}: unexpected first homology {h1}"))),
        };
    }
    if is_class(&n, Orientability::Orientable, None, 1) && n.pairs().len() <= 1 {
        return classify_rho_p2(&n);
    }
    Ok(None)
}

/// The flat spaces, closed families first (with both values of the
/// parameter where one occurs), then the bounded ones.
pub fn flat_list() -> Vec<SeifertSymbol> {
    let texts = [
        "(O,o,0 | -2, (2,1), (2,1), (2,1), (2,1))",
        "(O,o,1 | 0)",
        "(N,o,1 | (0,0))",
        "(N,o,1 | (1,0))",
        "(O,n,1 | -1, (2,1), (2,1))",
        "(N,n,I,1 | (0,2))",
        "(O,n,2 | 0)",
        "(N,n,I,2 | (0,0))",
        "(N,n,I,2 | (1,0))",
        "(N,n,II,2 | (0,0))",
        "(N,n,II,2 | (1,0))",
        "(O,o,0; m=1 | -, (2,1), (2,1))",
        "(O,o,0; m=2 | -)",
        "(O,o,0; m=0, kb=2 | -)",
        "(O,n,1; m=1 | -)",
        "(N,n,I,1; m=1 | -)",
    ];
    texts.iter().map(|t| parse_symbol(t).expect("flat list parses")).collect()
}

/// Membership in the flat list.
pub fn is_flat(s: &SeifertSymbol) -> Result<bool> {
    let n = normalize_symbol(s)?;
    Ok(flat_list().contains(&n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub small: Option<String>,
    pub flat: bool,
    pub pi1_finite: bool,
    pub irreducible: bool,
    pub p2_irreducible: bool,
    pub aspherical: bool,
    pub boundary_irreducible: bool,
    pub has_incompressible_surface: bool,
    pub named: Option<String>,
    pub notes: Vec<String>,
}

/// `beta1 mu2 mu3 + beta2 mu1 mu3 + beta3 mu1 mu2 - b mu1 mu2 mu3`.
pub fn three_fiber_determinant(b: i64, pairs: &[CrossingPair]) -> BigInt {
    let big = |v: i64| BigInt::from(v);
    let prod: BigInt = pairs.iter().map(|p| big(p.mu)).product();
    let mut d = -big(b) * &prod;
    for p in pairs {
        d += big(p.beta) * (&prod / big(p.mu));
    }
    d
}

/// Topological predicates of a symbol's space.
pub fn predicates(s: &SeifertSymbol) -> Result<PredicateReport> {
    let n = normalize_symbol(s)?;
    let flat = is_flat(&n)?;
    let small = classify_small(&n)?;
    let mut notes = Vec::new();
    let mut r = PredicateReport {
        small: small.map(|c| c.kind().to_string()),
        flat,
        pi1_finite: false,
        irreducible: true,
        p2_irreducible: true,
        aspherical: true,
        boundary_irreducible: true,
        has_incompressible_surface: true,
        named: small.map(|c| c.to_string()),
        notes: Vec::new(),
    };
    match small {
        None => {
            if n.is_closed() && is_oo0(&n) && n.pairs().len() == 3 {
                let det = three_fiber_determinant(n.b().expect("closed"), n.pairs());
                r.has_incompressible_surface = det.is_zero();
                notes.push(format!(
                    "three fibers over S2: incompressible surface iff H1 infinite iff determinant vanishes (determinant {det})"
                ));
            }
            if n.is_closed() {
                notes.push("not small: P2-irreducible, aspherical, infinite fundamental group".into());
            } else {
                notes.push("bounded, not a solid torus: P2-irreducible, boundary irreducible, aspherical, torsion-free fundamental group".into());
            }
        }
        Some(cat) => {
            r.has_incompressible_surface = false;
            r.aspherical = cat == SmallCategory::FiberedSolidTorus;
            match cat {
                SmallCategory::FiberedSolidTorus => {
                    r.boundary_irreducible = false;
                    notes.push("fibered solid torus: the only Seifert space that is not boundary irreducible".into());
                }
                SmallCategory::S2xS1 | SmallCategory::TwistedS2Bundle | SmallCategory::P3P3 => {
                    r.irreducible = false;
                    r.p2_irreducible = false;
                    notes.push(format!("{cat}: not irreducible"));
                }
                SmallCategory::P2xS1 => {
                    r.p2_irreducible = false;
                    notes.push("P2xS1: irreducible but contains a two-sided projective plane".into());
                }
                SmallCategory::S3 | SmallCategory::Lens(_) => {
                    r.pi1_finite = true;
                    notes.push("lens space: finite cyclic fundamental group".into());
                }
                SmallCategory::Platonic(..) => {
                    r.pi1_finite = true;
                    notes.push("platonic: finite fundamental group; the Euler sum is never zero for a platonic triple".into());
                }
            }
        }
    }
    r.notes = notes;
    Ok(r)
}

/// Homeomorphism test for bounded spaces other than solid tori and the
/// flat bounded spaces (the I-bundles over the torus and Klein bottle).
pub fn bounded_equivalent(s1: &SeifertSymbol, s2: &SeifertSymbol) -> Result<bool> {
    let a = normalize_symbol(s1)?;
    let b = normalize_symbol(s2)?;
    for x in [&a, &b] {
        if x.is_closed() {
            return Err(Error::ExcludedSpace(format!("{x} is closed")));
        }
        if classify_small(x)? == Some(SmallCategory::FiberedSolidTorus) {
            return Err(Error::ExcludedSpace(format!("{x} is a solid torus")));
        }
        if is_flat(x)? {
            return Err(Error::ExcludedSpace(format!("{x} is an I-bundle over the torus or Klein bottle")));
        }
    }
    if a == b {
        return Ok(true);
    }
    if a.is_orientable() && b.is_orientable() {
        return Ok(a == reverse_orientation(&b)?);
    }
    Ok(false)
}

/// Whether the symbol is closed, orientable and has an integer obstruction.
pub fn is_closed_oriented(s: &SeifertSymbol) -> bool {
    s.is_closed() && matches!(s.obstruction(), Obstruction::Integer(_))
}
