//! Seifert symbols: data model, text grammar, normalization, equivalence,
//! orientation reversal and classifying-homomorphism classes.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::fst::{fold_beta, CrossingPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientability {
    Orientable,
    NonOrientable,
}

impl Orientability {
    pub fn is_orientable(self) -> bool {
        self == Orientability::Orientable
    }
}

/// Subtype of a `(N,n)` class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subtype {
    I,
    II,
    III,
}

impl fmt::Display for Subtype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subtype::I => "I",
            Subtype::II => "II",
            Subtype::III => "III",
        })
    }
}

/// Classifying homomorphism of a class, named after its representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    /// phi = 1 everywhere.
    Trivial,
    /// Orientable orbit, phi = -1 on every handle generator.
    Onto,
    /// phi equals the orientation character of a non-orientable orbit.
    Rho,
    /// phi = -1 on the first crosscap generator only.
    Phi4,
    /// phi = -1 on the first two crosscap generators.
    Phi5,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassLabel::Trivial => "trivial",
            ClassLabel::Onto => "onto",
            ClassLabel::Rho => "rho",
            ClassLabel::Phi4 => "phi4",
            ClassLabel::Phi5 => "phi5",
        })
    }
}

/// Class part of a symbol. For bounded spaces it describes the closed
/// orbit surface obtained by capping every boundary circle with a disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassPart {
    total: Orientability,
    orbit: Orientability,
    subtype: Option<Subtype>,
    genus: u32,
}

impl ClassPart {
    pub fn new(total: Orientability, orbit: Orientability, subtype: Option<Subtype>, genus: u32) -> Result<Self> {
        use Orientability::*;
        let nn = total == NonOrientable && orbit == NonOrientable;
        if nn != subtype.is_some() {
            return Err(Error::Validity("subtype is required exactly for (N,n) classes".into()));
        }
        if orbit == NonOrientable && genus < 1 {
            return Err(Error::Validity("a non-orientable orbit needs at least one crosscap".into()));
        }
        if total == NonOrientable && orbit == Orientable && genus < 1 {
            return Err(Error::Validity("(N,o) needs genus at least 1".into()));
        }
        match subtype {
            Some(Subtype::II) if genus < 2 => {
                return Err(Error::Validity("subtype II needs at least 2 crosscaps".into()))
            }
            Some(Subtype::III) if genus < 3 => {
                return Err(Error::Validity("subtype III needs at least 3 crosscaps".into()))
            }
            _ => {}
        }
        Ok(Self {
            total,
            orbit,
            subtype,
            genus,
        })
    }

    /// `(O,o,g)`
    pub fn oo(genus: u32) -> Self {
        Self::new(Orientability::Orientable, Orientability::Orientable, None, genus).expect("valid")
    }

    pub fn total(&self) -> Orientability {
        self.total
    }

    pub fn orbit(&self) -> Orientability {
        self.orbit
    }

    pub fn subtype(&self) -> Option<Subtype> {
        self.subtype
    }

    /// Handles for an orientable orbit, crosscaps otherwise.
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn homomorphism(&self) -> ClassLabel {
        use Orientability::*;
        match (self.total, self.orbit, self.subtype) {
            (Orientable, Orientable, _) => ClassLabel::Trivial,
            (NonOrientable, Orientable, _) => ClassLabel::Onto,
            (Orientable, NonOrientable, _) => ClassLabel::Rho,
            (_, _, Some(Subtype::II)) => ClassLabel::Phi4,
            (_, _, Some(Subtype::III)) => ClassLabel::Phi5,
            _ => ClassLabel::Trivial,
        }
    }

    /// Euler characteristic of the closed orbit surface.
    pub fn orbit_euler_characteristic(&self) -> i64 {
        match self.orbit {
            Orientability::Orientable => 2 - 2 * i64::from(self.genus),
            Orientability::NonOrientable => 2 - i64::from(self.genus),
        }
    }

    /// `(O,o,0)` and friends.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ClassPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = if self.total.is_orientable() { "O" } else { "N" };
        let o = if self.orbit.is_orientable() { "o" } else { "n" };
        match self.subtype {
            Some(st) => write!(f, "({t},{o},{st},{})", self.genus),
            None => write!(f, "({t},{o},{})", self.genus),
        }
    }
}

/// Total-space orientability of a class: orientable exactly when the
/// classifying homomorphism equals the orbit's orientation character.
pub fn total_space_orientability(c: &ClassPart) -> Orientability {
    c.total()
}

/// Obstruction slot of a symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Obstruction {
    /// Closed orientable total space.
    Integer(i64),
    /// Closed non-orientable total space; `s` counts index-2 fibers.
    NonOrientable { b: i64, s: u32 },
    /// Bounded space.
    Absent,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertSymbol {
    class: ClassPart,
    boundary_tori: u32,
    boundary_klein: u32,
    obstruction: Obstruction,
    pairs: Vec<CrossingPair>,
}

impl SeifertSymbol {
    /// Checks structural validity; does not normalize.
    pub fn new(
        class: ClassPart,
        boundary_tori: u32,
        boundary_klein: u32,
        obstruction: Obstruction,
        pairs: Vec<CrossingPair>,
    ) -> Result<Self> {
        if !boundary_klein.is_multiple_of(2) {
            return Err(Error::Validity(format!(
                "Klein-bottle boundary count {boundary_klein} is odd"
            )));
        }
        let closed = boundary_tori == 0 && boundary_klein == 0;
        let obstruction = match (closed, class.total(), obstruction) {
            (true, Orientability::Orientable, Obstruction::Integer(_)) => obstruction,
            (true, Orientability::Orientable, _) => {
                return Err(Error::Validity("closed orientable symbol needs an integer obstruction".into()))
            }
            (true, Orientability::NonOrientable, Obstruction::Integer(b)) => Obstruction::NonOrientable { b, s: 0 },
            (true, Orientability::NonOrientable, Obstruction::NonOrientable { .. }) => obstruction,
            (true, Orientability::NonOrientable, Obstruction::Absent) => {
                return Err(Error::Validity("closed symbol needs an obstruction".into()))
            }
            (false, _, Obstruction::Absent) => obstruction,
            (false, _, _) => return Err(Error::Validity("bounded symbol takes \"-\" as obstruction".into())),
        };
        for p in &pairs {
            if p.mu < 1 {
                return Err(Error::Validity(format!("fiber index {} is below 1", p.mu)));
            }
            if p.mu.gcd(&p.beta) != 1 {
                return Err(Error::Validity(format!("gcd({},{}) != 1", p.mu, p.beta)));
            }
        }
        Ok(Self {
            class,
            boundary_tori,
            boundary_klein,
            obstruction,
            pairs,
        })
    }

    /// Closed `(O,o,g | b, pairs...)`.
    pub fn closed_oriented(genus: u32, b: i64, pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            ClassPart::oo(genus),
            0,
            0,
            Obstruction::Integer(b),
            pairs.iter().map(|&(m, q)| CrossingPair::new(m, q)).collect(),
        )
    }

    pub fn class(&self) -> &ClassPart {
        &self.class
    }

    pub fn boundary_tori(&self) -> u32 {
        self.boundary_tori
    }

    pub fn boundary_klein(&self) -> u32 {
        self.boundary_klein
    }

    pub fn boundary_count(&self) -> u32 {
        self.boundary_tori + self.boundary_klein
    }

    pub fn obstruction(&self) -> Obstruction {
        self.obstruction
    }

    pub fn pairs(&self) -> &[CrossingPair] {
        &self.pairs
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_count() == 0
    }

    /// Orientability of the total space. Klein-bottle boundary components
    /// force a non-orientable space.
    pub fn is_orientable(&self) -> bool {
        self.class.total().is_orientable() && self.boundary_klein == 0
    }

    /// The integer `b`, or `b` of `(b,s)`. `None` for bounded symbols.
    pub fn b(&self) -> Option<i64> {
        match self.obstruction {
            Obstruction::Integer(b) | Obstruction::NonOrientable { b, .. } => Some(b),
            Obstruction::Absent => None,
        }
    }

    /// Index-2 fiber count carried by `(b,s)`, zero otherwise.
    pub fn s(&self) -> u32 {
        match self.obstruction {
            Obstruction::NonOrientable { s, .. } => s,
            _ => 0,
        }
    }

    /// Listed pairs plus `s` copies of `(2,1)`, sorted.
    pub fn expanded_pairs(&self) -> Vec<CrossingPair> {
        let mut v = self.pairs.clone();
        v.extend(std::iter::repeat_n(CrossingPair::new(2, 1), self.s() as usize));
        v.sort();
        v
    }

    /// Number of exceptional fibers, counting `s`.
    pub fn fiber_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.mu > 1).count() + self.s() as usize
    }
}

impl fmt::Display for SeifertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.class.to_string();
        write!(f, "{}", &c[..c.len() - 1])?;
        if !self.is_closed() {
            write!(f, "; m={}", self.boundary_tori)?;
            if self.boundary_klein > 0 {
                write!(f, ", kb={}", self.boundary_klein)?;
            }
        }
        f.write_str(" | ")?;
        match self.obstruction {
            Obstruction::Integer(b) => write!(f, "{b}")?,
            Obstruction::NonOrientable { b, s } => write!(f, "({b},{s})")?,
            Obstruction::Absent => f.write_str("-")?,
        }
        for p in &self.pairs {
            write!(f, ", {p}")?;
        }
        f.write_str(")")
    }
}

/// Canonical text of a symbol.
pub fn render_symbol(s: &SeifertSymbol) -> String {
    s.to_string()
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<()> {
        for &c in w.as_bytes() {
            self.expect(c)?;
        }
        Ok(())
    }

    fn digits(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        match s.parse::<u64>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn uint(&mut self) -> Result<i64> {
        let start = self.pos;
        let v = self.digits()?;
        i64::try_from(v).or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn count(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.digits()?;
        u32::try_from(v).or_else(|_| {
            self.pos = start;
            self.err("count out of range")
        })
    }

    fn int(&mut self) -> Result<i64> {
        if self.eat(b'-') {
            let start = self.pos;
            let v = self.digits()?;
            if v > i64::MAX as u64 + 1 {
                self.pos = start;
                return self.err("integer out of range");
            }
            Ok((v as i128).wrapping_neg() as i64)
        } else {
            self.eat(b'+');
            self.uint()
        }
    }

    /// True when the next token is `-` not followed by a digit.
    fn at_dash_placeholder(&mut self) -> bool {
        if self.peek() != Some(b'-') {
            return false;
        }
        let mut i = self.pos + 1;
        while i < self.text.len() && self.text[i].is_ascii_whitespace() {
            i += 1;
        }
        !self.text.get(i).is_some_and(|c| c.is_ascii_digit())
    }
}

/// Parses the symbol grammar. The result is valid but not normalized.
pub fn parse_symbol(text: &str) -> Result<SeifertSymbol> {
    let mut c = Cursor {
        text: text.as_bytes(),
        pos: 0,
    };
    c.expect(b'(')?;
    let total = match c.peek() {
        Some(b'O') => Orientability::Orientable,
        Some(b'N') => Orientability::NonOrientable,
        _ => return c.err("expected 'O' or 'N'"),
    };
    c.pos += 1;
    c.expect(b',')?;
    let orbit = match c.peek() {
        Some(b'o') => Orientability::Orientable,
        Some(b'n') => Orientability::NonOrientable,
        _ => return c.err("expected 'o' or 'n'"),
    };
    c.pos += 1;
    c.expect(b',')?;
    let mut subtype = None;
    if c.peek() == Some(b'I') {
        let start = c.pos;
        let mut n = 0;
        while c.text.get(c.pos) == Some(&b'I') {
            c.pos += 1;
            n += 1;
        }
        subtype = Some(match n {
            1 => Subtype::I,
            2 => Subtype::II,
            3 => Subtype::III,
            _ => {
                c.pos = start;
                return c.err("subtype must be I, II or III");
            }
        });
        c.expect(b',')?;
    }
    let genus_pos = c.pos;
    let genus = c.count()?;
    let class = ClassPart::new(total, orbit, subtype, genus).map_err(|e| match e {
        Error::Validity(msg) if subtype.is_none() && total == Orientability::NonOrientable && orbit == Orientability::NonOrientable => {
            Error::Parse {
                pos: genus_pos,
                msg: format!("expected subtype I, II or III ({msg})"),
            }
        }
        e => e,
    })?;
    let (mut tori, mut klein) = (0, 0);
    if c.eat(b';') {
        c.expect_word("m=")?;
        tori = c.count()?;
        if c.eat(b',') {
            c.expect_word("kb=")?;
            klein = c.count()?;
        }
    }
    c.expect(b'|')?;
    let obstruction = if c.at_dash_placeholder() {
        c.pos += 1;
        Obstruction::Absent
    } else if c.eat(b'(') {
        let b = c.int()?;
        c.expect(b',')?;
        let s = c.count()?;
        c.expect(b')')?;
        Obstruction::NonOrientable { b, s }
    } else {
        Obstruction::Integer(c.int()?)
    };
    if matches!(obstruction, Obstruction::NonOrientable { .. }) && total == Orientability::Orientable {
        return Err(Error::Validity("(b,s) obstruction needs a non-orientable class".into()));
    }
    let mut pairs = Vec::new();
    while c.eat(b',') {
        c.expect(b'(')?;
        let mu = c.uint()?;
        c.expect(b',')?;
        let beta = c.uint()?;
        c.expect(b')')?;
        pairs.push(CrossingPair::new(mu, beta));
    }
    c.expect(b')')?;
    if c.peek().is_some() {
        return c.err("trailing input");
    }
    SeifertSymbol::new(class, tori, klein, obstruction, pairs)
}

impl FromStr for SeifertSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_symbol(s)
    }
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// Reduces `beta` into `[0, mu)`, returning the pair and the carry
/// `floor(beta/mu)`.
fn reduce_pair(p: CrossingPair) -> (CrossingPair, i64) {
    (
        CrossingPair::new(p.mu, p.beta.rem_euclid(p.mu)),
        p.beta.div_euclid(p.mu),
    )
}

/// Canonical form of a symbol.
///
/// Closed orientable: `beta` in `[0, mu)` with carries added to `b`, unit
/// index pairs absorbed into `b`. Closed non-orientable: listed pairs have
/// `mu >= 3` and `beta` in `[1, mu/2]`, index-2 fibers are counted in `s`,
/// `b` is taken mod 2 and zeroed when `s > 0`. Bounded: unit index pairs
/// dropped, `beta` in `[0, mu)` (orientable) or `[0, mu/2]`.
pub fn normalize_symbol(s: &SeifertSymbol) -> Result<SeifertSymbol> {
    let mut pairs = Vec::with_capacity(s.pairs.len());
    let obstruction = match s.obstruction {
        Obstruction::Integer(b0) => {
            let mut b = b0;
            for &p in &s.pairs {
                let (r, carry) = reduce_pair(p);
                b = add(b, carry)?;
                if r.mu > 1 {
                    pairs.push(r);
                }
            }
            Obstruction::Integer(b)
        }
        Obstruction::NonOrientable { b: b0, s: s0 } => {
            let mut b = b0.rem_euclid(2);
            let mut count = s0;
            for &p in &s.pairs {
                let (r, carry) = reduce_pair(p);
                b = (b + carry.rem_euclid(2)) % 2;
                if r.mu == 1 {
                    continue;
                }
                if r.mu == 2 {
                    count = count.checked_add(1).ok_or(Error::Overflow)?;
                    continue;
                }
                let folded = fold_beta(r);
                if folded != r {
                    b = (b + 1) % 2;
                }
                pairs.push(folded);
            }
            if count > 0 {
                b = 0;
            }
            Obstruction::NonOrientable { b, s: count }
        }
        Obstruction::Absent => {
            let fold = !s.is_orientable();
            for &p in &s.pairs {
                let (r, _) = reduce_pair(p);
                if r.mu > 1 {
                    pairs.push(if fold { fold_beta(r) } else { r });
                }
            }
            Obstruction::Absent
        }
    };
    pairs.sort();
    SeifertSymbol::new(s.class, s.boundary_tori, s.boundary_klein, obstruction, pairs)
}

/// Orientation reversal of an orientable symbol: `b -> -n - b` and
/// `(mu, beta) -> (mu, mu - beta)`. Bounded symbols only flip the pairs.
pub fn reverse_orientation(s: &SeifertSymbol) -> Result<SeifertSymbol> {
    if !s.is_orientable() {
        return Err(Error::NotOriented);
    }
    let n = normalize_symbol(s)?;
    let pairs: Vec<CrossingPair> = n
        .pairs
        .iter()
        .map(|p| CrossingPair::new(p.mu, p.mu - p.beta))
        .collect();
    let obstruction = match n.obstruction {
        Obstruction::Integer(b) => {
            let count = i64::try_from(pairs.len()).map_err(|_| Error::Overflow)?;
            Obstruction::Integer(b.checked_neg().and_then(|nb| nb.checked_sub(count)).ok_or(Error::Overflow)?)
        }
        o => o,
    };
    normalize_symbol(&SeifertSymbol::new(n.class, n.boundary_tori, n.boundary_klein, obstruction, pairs)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberMode {
    OrientedFiber,
    UnorientedFiber,
}

/// Fiber-type equivalence of two symbols.
pub fn symbols_equivalent(s1: &SeifertSymbol, s2: &SeifertSymbol, mode: FiberMode) -> Result<bool> {
    let a = normalize_symbol(s1)?;
    let b = normalize_symbol(s2)?;
    match mode {
        FiberMode::OrientedFiber => {
            if !a.is_orientable() || !b.is_orientable() {
                return Err(Error::Mode);
            }
            Ok(a == b)
        }
        FiberMode::UnorientedFiber => {
            if a == b {
                return Ok(true);
            }
            if a.is_orientable() && b.is_orientable() {
                return Ok(a == reverse_orientation(&b)?);
            }
            Ok(false)
        }
    }
}

/// A compact surface: handles or crosscaps plus boundary circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceSpec {
    pub orientable: bool,
    pub genus_or_crosscaps: i64,
    pub boundary: u32,
}

/// One class of classifying homomorphisms over a surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub label: ClassLabel,
    pub class: ClassPart,
    pub description: &'static str,
}

/// Classes of classifying homomorphisms over a closed surface. For a
/// bounded surface (`closed == false`) the classes of its capped surface
/// are returned.
pub fn classifying_classes(g: &SurfaceSpec, closed: bool) -> Result<Vec<ClassInfo>> {
    use Orientability::*;
    if closed && g.boundary > 0 {
        return Err(Error::InvalidSurface("closed surface with boundary circles".into()));
    }
    if g.genus_or_crosscaps < 0 || (!g.orientable && g.genus_or_crosscaps < 1) {
        return Err(Error::InvalidSurface(format!(
            "{} {} out of range",
            if g.orientable { "genus" } else { "crosscap count" },
            g.genus_or_crosscaps
        )));
    }
    let k = u32::try_from(g.genus_or_crosscaps).map_err(|_| Error::InvalidSurface("genus too large".into()))?;
    let mk = |label, total, orbit, subtype, description| ClassInfo {
        label,
        class: ClassPart::new(total, orbit, subtype, k).expect("valid class"),
        description,
    };
    let mut v = Vec::new();
    if g.orientable {
        v.push(mk(ClassLabel::Trivial, Orientable, Orientable, None, "phi trivial; orientable total space"));
        if k >= 1 {
            v.push(mk(ClassLabel::Onto, NonOrientable, Orientable, None, "phi onto Z2; non-orientable total space"));
        }
    } else {
        v.push(mk(ClassLabel::Trivial, NonOrientable, NonOrientable, Some(Subtype::I), "phi trivial; non-orientable total space"));
        v.push(mk(ClassLabel::Rho, Orientable, NonOrientable, None, "phi equals the orientation character; orientable total space"));
        if k >= 2 {
            v.push(mk(ClassLabel::Phi4, NonOrientable, NonOrientable, Some(Subtype::II), "phi -1 on the first crosscap only; non-orientable total space"));
        }
        if k >= 3 {
            v.push(mk(ClassLabel::Phi5, NonOrientable, NonOrientable, Some(Subtype::III), "phi -1 on the first two crosscaps; non-orientable total space"));
        }
    }
    Ok(v)
}
