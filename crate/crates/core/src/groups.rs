//! Group presentations of Seifert spaces and their Fuchsian quotients,
//! abelianization, coset enumeration and Fuchsian signatures.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};
use crate::symbol::{ClassLabel, Orientability, SeifertSymbol};

/// A word as syllables `(generator index, exponent)`.
pub type Word = Vec<(usize, i64)>;

/// Merges adjacent syllables on the same generator and drops zero
/// exponents until the word is freely reduced.
pub fn reduce_word(w: &[(usize, i64)]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &(g, e) in w {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((lg, le)) if *lg == g => {
                *le += e;
                if *le == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    out
}

/// Finite presentation with named generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Stores relators in reduced syllable form; empty relators are dropped.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        for r in &relators {
            for &(g, _) in r {
                assert!(g < generators.len(), "generator index {g} out of range");
            }
        }
        let relators = relators
            .iter()
            .map(|r| reduce_word(r))
            .filter(|r| !r.is_empty())
            .collect();
        Self { generators, relators }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.relators.len(), self.generators.len());
        for (i, r) in self.relators.iter().enumerate() {
            for &(g, e) in r {
                let v = m.get(i, g) + BigInt::from(e);
                m.set(i, g, v);
            }
        }
        m
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}", self.generators.join(", "))?;
        f.write_str(" | ")?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            for (j, &(g, e)) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                if e == 1 {
                    write!(f, "{}", self.generators[g])?;
                } else {
                    write!(f, "{}^{}", self.generators[g], e)?;
                }
            }
        }
        f.write_str(">")
    }
}

fn build_presentation(s: &SeifertSymbol, with_fiber: bool) -> Presentation {
    let class = s.class();
    let pairs = s.expanded_pairs();
    let mut names = Vec::new();
    let mut phi = Vec::new();
    if with_fiber {
        names.push("h".to_string());
        phi.push(1);
    }
    let k = class.genus() as usize;
    let orbit_orientable = class.orbit() == Orientability::Orientable;
    let label = class.homomorphism();
    let surface_start = names.len();
    if orbit_orientable {
        let flip = if label == ClassLabel::Onto { -1 } else { 1 };
        for i in 1..=k {
            names.push(format!("a{i}"));
            names.push(format!("b{i}"));
            phi.extend([flip, flip]);
        }
    } else {
        for i in 1..=k {
            names.push(format!("x{i}"));
            let f = match label {
                ClassLabel::Rho => -1,
                ClassLabel::Phi4 if i == 1 => -1,
                ClassLabel::Phi5 if i <= 2 => -1,
                _ => 1,
            };
            phi.push(f);
        }
    }
    let c_start = names.len();
    for i in 1..=pairs.len() {
        names.push(format!("c{i}"));
        phi.push(1);
    }
    let tori = s.boundary_tori() as usize;
    for i in 1..=s.boundary_count() as usize {
        names.push(format!("d{i}"));
        phi.push(if i <= tori { 1 } else { -1 });
    }

    let mut relators: Vec<Word> = Vec::new();
    if with_fiber {
        for (y, &sign) in phi.iter().enumerate().skip(1) {
            relators.push(vec![(y, 1), (0, 1), (y, -1), (0, -sign)]);
        }
    }
    for (i, p) in pairs.iter().enumerate() {
        let mut w = vec![(c_start + i, p.mu)];
        if with_fiber {
            w.push((0, p.beta));
        }
        relators.push(w);
    }
    let mut long: Word = Vec::new();
    if orbit_orientable {
        for i in 0..k {
            let (a, b) = (surface_start + 2 * i, surface_start + 2 * i + 1);
            long.extend([(a, 1), (b, 1), (a, -1), (b, -1)]);
        }
    } else {
        for i in 0..k {
            long.push((surface_start + i, 2));
        }
    }
    for i in c_start..names.len() {
        long.push((i, 1));
    }
    if with_fiber {
        long.push((0, s.b().unwrap_or(0)));
    }
    relators.push(long);
    Presentation::new(names, relators)
}

/// Fundamental group of the symbol's space, read off the symbol as given:
/// generators `h`, surface generators, `c_i` per pair (index-2 fibers
/// counted by `s` become `(2,1)` pairs) and `d_i` per boundary component,
/// torus boundaries first. Bounded symbols keep the surface relator with
/// `b = 0`.
pub fn pi1_presentation(s: &SeifertSymbol) -> Presentation {
    build_presentation(s, true)
}

/// The quotient by the fiber: `h` deleted.
pub fn fuchsian_quotient(s: &SeifertSymbol) -> Presentation {
    build_presentation(s, false)
}

/// Finitely generated abelian group `Z^r + Z/d1 + ... `.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Abelianization via the Smith form of the exponent-sum matrix.
pub fn abelianization(p: &Presentation) -> AbelianGroup {
    let snf = smith_normal_form(&p.relation_matrix());
    AbelianGroup {
        free_rank: snf.nullity(),
        torsion: snf.factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationResult {
    /// The coset table closed; the group has exactly this order.
    Finite(u64),
    /// Gave up after this many cosets. Not a proof of infiniteness.
    ExceededLimit(u64),
}

const UNDEF: u32 = u32::MAX;

/// Felsch-style enumeration of the cosets of the trivial subgroup.
struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    live: usize,
    /// Cyclic conjugates of relators and their inverses, by first letter.
    conjugates: Vec<Vec<Vec<u32>>>,
    relators: Vec<Vec<u32>>,
    deductions: Vec<(u32, u32)>,
    queue: Vec<u32>,
}

fn inv(x: u32) -> u32 {
    x ^ 1
}

impl Enumerator {
    fn new(p: &Presentation) -> Self {
        let ncols = 2 * p.generators.len();
        let mut relators = Vec::new();
        for r in &p.relators {
            let mut letters: Vec<u32> = Vec::new();
            for &(g, e) in r {
                let x = 2 * g as u32 + u32::from(e < 0);
                for _ in 0..e.unsigned_abs() {
                    letters.push(x);
                }
            }
            // Cyclic reduction.
            while letters.len() >= 2 && letters[0] == inv(*letters.last().expect("nonempty")) {
                letters.remove(0);
                letters.pop();
            }
            if !letters.is_empty() {
                relators.push(letters);
            }
        }
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut conjugates = vec![Vec::new(); ncols];
        for r in &relators {
            let r_inv: Vec<u32> = r.iter().rev().map(|&x| inv(x)).collect();
            for w in [r, &r_inv] {
                for i in 0..w.len() {
                    let mut c = w[i..].to_vec();
                    c.extend_from_slice(&w[..i]);
                    if seen.insert(c.clone()) {
                        conjugates[c[0] as usize].push(c);
                    }
                }
            }
        }
        Self {
            ncols,
            table: Vec::new(),
            forward: Vec::new(),
            live: 0,
            conjugates,
            relators,
            deductions: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn rows(&self) -> usize {
        self.forward.len()
    }

    fn get(&self, a: u32, x: u32) -> u32 {
        self.table[a as usize * self.ncols + x as usize]
    }

    fn put(&mut self, a: u32, x: u32, b: u32) {
        self.table[a as usize * self.ncols + x as usize] = b;
    }

    fn is_live(&self, a: u32) -> bool {
        self.forward[a as usize] == a
    }

    fn add_row(&mut self) -> u32 {
        let k = self.rows() as u32;
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.forward.push(k);
        self.live += 1;
        k
    }

    fn define(&mut self, a: u32, x: u32) {
        let b = self.add_row();
        self.put(a, x, b);
        self.put(b, inv(x), a);
        self.deductions.push((a, x));
    }

    fn rep(&mut self, k: u32) -> u32 {
        let mut r = k;
        while self.forward[r as usize] != r {
            r = self.forward[r as usize];
        }
        let mut k = k;
        while self.forward[k as usize] != r {
            let next = self.forward[k as usize];
            self.forward[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.forward[hi as usize] = lo;
            self.live -= 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols as u32 {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                if self.get(d, inv(x)) == g {
                    self.put(d, inv(x), UNDEF);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != UNDEF {
                    self.merge(nu, mx);
                } else {
                    let ni = self.get(nu, inv(x));
                    if ni != UNDEF {
                        self.merge(mu, ni);
                    } else {
                        self.put(mu, x, nu);
                        self.put(nu, inv(x), mu);
                        self.deductions.push((mu, x));
                    }
                }
            }
        }
    }

    /// Scans `w` from `a` in both directions, filling a single gap or
    /// recording a coincidence.
    fn scan(&mut self, a: u32, w_idx: (usize, usize)) {
        let w = &self.conjugates[w_idx.0][w_idx.1];
        let n = w.len();
        let mut f = a;
        let mut i = 0;
        while i < n {
            let next = self.get(f, w[i]);
            if next == UNDEF {
                break;
            }
            f = next;
            i += 1;
        }
        if i == n {
            if f != a {
                self.coincidence(f, a);
            }
            return;
        }
        let mut b = a;
        let mut j = n;
        while j > i {
            let next = self.get(b, inv(w[j - 1]));
            if next == UNDEF {
                break;
            }
            b = next;
            j -= 1;
        }
        if j == i {
            self.coincidence(f, b);
        } else if j == i + 1 {
            let x = w[i];
            self.put(f, x, b);
            self.put(b, inv(x), f);
            self.deductions.push((f, x));
        }
    }

    fn process_deductions(&mut self) {
        while let Some((a, x)) = self.deductions.pop() {
            if !self.is_live(a) || self.get(a, x) == UNDEF {
                continue;
            }
            for k in 0..self.conjugates[x as usize].len() {
                if !self.is_live(a) {
                    break;
                }
                self.scan(a, (x as usize, k));
            }
            if !self.is_live(a) {
                continue;
            }
            let b = self.get(a, x);
            if b == UNDEF {
                continue;
            }
            for k in 0..self.conjugates[inv(x) as usize].len() {
                if !self.is_live(b) {
                    break;
                }
                self.scan(b, (inv(x) as usize, k));
            }
        }
    }

    /// Renumbers live cosets consecutively, discarding dead rows.
    fn compact(&mut self) {
        let n = self.rows();
        let mut map = vec![UNDEF; n];
        let mut next = 0u32;
        for (k, slot) in map.iter_mut().enumerate() {
            if self.forward[k] == k as u32 {
                *slot = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.ncols);
        for k in 0..n {
            if map[k] == UNDEF {
                continue;
            }
            for x in 0..self.ncols {
                let v = self.table[k * self.ncols + x];
                table.push(if v == UNDEF { UNDEF } else { map[v as usize] });
            }
        }
        self.table = table;
        self.forward = (0..next).collect();
        self.live = next as usize;
    }

    /// First live row with an undefined entry, searching from `start`.
    fn first_gap(&self, start: usize) -> Option<(u32, u32)> {
        for k in start..self.rows() {
            if self.forward[k] != k as u32 {
                continue;
            }
            for x in 0..self.ncols {
                if self.table[k * self.ncols + x] == UNDEF {
                    return Some((k as u32, x as u32));
                }
            }
        }
        None
    }

    /// Traces every relator from every live coset; repairs the first
    /// failure found. Returns true when the table is a valid coset table.
    fn verify(&mut self) -> bool {
        for k in 0..self.rows() as u32 {
            if !self.is_live(k) {
                continue;
            }
            for r in 0..self.relators.len() {
                let mut f = k;
                for &x in &self.relators[r] {
                    f = self.get(f, x);
                }
                if f != k {
                    self.coincidence(f, k);
                    self.process_deductions();
                    return false;
                }
            }
        }
        true
    }

    fn run(mut self, max: usize) -> EnumerationResult {
        self.add_row();
        let mut cursor = 0;
        loop {
            self.process_deductions();
            match self.first_gap(cursor) {
                Some((a, x)) => {
                    cursor = a as usize;
                    if self.rows() >= max {
                        if self.live < max - max / 8 {
                            self.compact();
                            cursor = 0;
                            continue;
                        }
                        return EnumerationResult::ExceededLimit(self.live as u64);
                    }
                    self.define(a, x);
                }
                None => {
                    if let Some((a, _)) = self.first_gap(0) {
                        cursor = a as usize;
                        continue;
                    }
                    if self.verify() {
                        return EnumerationResult::Finite(self.live as u64);
                    }
                    cursor = 0;
                }
            }
        }
    }
}

/// Enumerates the cosets of the trivial subgroup, allowing at most
/// `max_cosets` cosets at any time.
pub fn coset_enumerate(p: &Presentation, max_cosets: usize) -> Result<EnumerationResult> {
    if max_cosets == 0 {
        return Err(Error::LimitTooSmall);
    }
    Ok(Enumerator::new(p).run(max_cosets))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleInfo {
    pub geometry: Geometry,
    pub finite: bool,
    pub order: Option<u64>,
}

/// Geometry and order of the triangle group with the given indices.
pub fn triangle_info(p: u64, q: u64, r: u64) -> Result<TriangleInfo> {
    if p < 2 || q < 2 || r < 2 {
        return Err(Error::InvalidIndex);
    }
    let (p, q, r) = (u128::from(p), u128::from(q), u128::from(r));
    // 1/p + 1/q + 1/r compared with 1, scaled by pqr.
    let num = q * r + p * r + p * q;
    let den = p * q * r;
    Ok(match num.cmp(&den) {
        std::cmp::Ordering::Greater => TriangleInfo {
            geometry: Geometry::Spherical,
            finite: true,
            order: u64::try_from(2 * den / (num - den)).ok(),
        },
        std::cmp::Ordering::Equal => TriangleInfo {
            geometry: Geometry::Euclidean,
            finite: false,
            order: None,
        },
        std::cmp::Ordering::Less => TriangleInfo {
            geometry: Geometry::Hyperbolic,
            finite: false,
            order: None,
        },
    })
}

/// Signature of a Fuchsian complex: surface with `s` handles-times-two
/// (orientable) or `s` crosscaps, `m` free boundary circles and cone
/// points of the given degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuchsianSignature {
    pub orientable: bool,
    pub s: u32,
    pub m: u32,
    pub degrees: Vec<u32>,
}

impl FuchsianSignature {
    pub fn new(orientable: bool, s: u32, m: u32, mut degrees: Vec<u32>) -> Result<Self> {
        if orientable && !s.is_multiple_of(2) {
            return Err(Error::Validity("orientable signature needs even s".into()));
        }
        if !orientable && s < 1 {
            return Err(Error::Validity("non-orientable signature needs s >= 1".into()));
        }
        if degrees.iter().any(|&d| d < 2) {
            return Err(Error::Validity("cone degrees must be at least 2".into()));
        }
        degrees.sort_unstable();
        Ok(Self {
            orientable,
            s,
            m,
            degrees,
        })
    }

    /// Signature of the quotient of a symbol's space by its fiber.
    pub fn of_symbol(sym: &SeifertSymbol) -> Self {
        let c = sym.class();
        let orientable = c.orbit() == Orientability::Orientable;
        let s = if orientable { 2 * c.genus() } else { c.genus() };
        let degrees = sym
            .expanded_pairs()
            .iter()
            .filter(|p| p.mu >= 2)
            .map(|p| u32::try_from(p.mu).expect("fiber index fits in u32"))
            .collect();
        Self::new(orientable, s, sym.boundary_count(), degrees).expect("symbol classes give valid signatures")
    }
}

/// `(2 - s - m) - sum(1 - 1/d)`.
pub fn fuchsian_euler(sig: &FuchsianSignature) -> BigRational {
    let mut chi = BigRational::from_integer(BigInt::from(2) - BigInt::from(sig.s) - BigInt::from(sig.m));
    for &d in &sig.degrees {
        chi -= BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(d));
    }
    chi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeClass {
    Finite,
    ZeroChi,
    NegativeChi,
}

/// The complexes with Euler characteristic zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroChiEntry {
    Sphere2222,
    Sphere236,
    Sphere244,
    Sphere333,
    Disk22,
    Annulus,
    Torus,
    ProjectivePlane22,
    Moebius,
    KleinBottle,
}

impl ZeroChiEntry {
    pub const ALL: [ZeroChiEntry; 10] = [
        ZeroChiEntry::Sphere2222,
        ZeroChiEntry::Sphere236,
        ZeroChiEntry::Sphere244,
        ZeroChiEntry::Sphere333,
        ZeroChiEntry::Disk22,
        ZeroChiEntry::Annulus,
        ZeroChiEntry::Torus,
        ZeroChiEntry::ProjectivePlane22,
        ZeroChiEntry::Moebius,
        ZeroChiEntry::KleinBottle,
    ];

    pub fn signature(self) -> FuchsianSignature {
        let (o, s, m, d): (bool, u32, u32, &[u32]) = match self {
            ZeroChiEntry::Sphere2222 => (true, 0, 0, &[2, 2, 2, 2]),
            ZeroChiEntry::Sphere236 => (true, 0, 0, &[2, 3, 6]),
            ZeroChiEntry::Sphere244 => (true, 0, 0, &[2, 4, 4]),
            ZeroChiEntry::Sphere333 => (true, 0, 0, &[3, 3, 3]),
            ZeroChiEntry::Disk22 => (true, 0, 1, &[2, 2]),
            ZeroChiEntry::Annulus => (true, 0, 2, &[]),
            ZeroChiEntry::Torus => (true, 2, 0, &[]),
            ZeroChiEntry::ProjectivePlane22 => (false, 1, 0, &[2, 2]),
            ZeroChiEntry::Moebius => (false, 1, 1, &[]),
            ZeroChiEntry::KleinBottle => (false, 2, 0, &[]),
        };
        FuchsianSignature::new(o, s, m, d.to_vec()).expect("table entries are valid")
    }
}

/// Table entry matching `sig`, if any.
pub fn zero_chi_entry(sig: &FuchsianSignature) -> Option<ZeroChiEntry> {
    ZeroChiEntry::ALL.into_iter().find(|e| e.signature() == *sig)
}

/// Sign of the Euler characteristic.
pub fn fuchsian_size_class(sig: &FuchsianSignature) -> SizeClass {
    let chi = fuchsian_euler(sig);
    if chi.is_positive() {
        SizeClass::Finite
    } else if chi.is_zero() {
        debug_assert!(zero_chi_entry(sig).is_some(), "zero Euler characteristic outside the table: {sig:?}");
        SizeClass::ZeroChi
    } else {
        SizeClass::NegativeChi
    }
}

/// `<a, b | a^p, b^q, (ab)^r>`.
pub fn triangle_presentation(p: i64, q: i64, r: i64) -> Presentation {
    let mut ab = Vec::new();
    for _ in 0..r {
        ab.extend([(0, 1), (1, 1)]);
    }
    Presentation::new(vec!["a".into(), "b".into()], vec![vec![(0, p)], vec![(1, q)], ab])
}
