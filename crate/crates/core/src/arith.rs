//! Exact integer primitives: fractions mod 1, modular inverses and the
//! Smith normal form over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A fraction `num/den` in lowest terms with `den >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedFraction {
    num: i64,
    den: i64,
}

impl ReducedFraction {
    /// Reduces `num/den` to lowest terms without shifting it into `[0,1)`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let (mut n, mut d) = (num, den);
        if d < 0 {
            n = n.checked_neg().ok_or(Error::Overflow)?;
            d = d.checked_neg().ok_or(Error::Overflow)?;
        }
        let g = n.gcd(&d);
        Ok(Self { num: n / g, den: d / g })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The unique fraction in `[0,1)` congruent to `num/den` mod 1.
pub fn reduce_mod1(num: i64, den: i64) -> Result<ReducedFraction> {
    let r = ReducedFraction::new(num, den)?;
    Ok(ReducedFraction {
        num: r.num.rem_euclid(r.den),
        den: r.den,
    })
}

/// Inverse of `a` modulo `m` (`m >= 1`), in `[0, m)`. `None` unless coprime.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    assert!(m >= 1, "modulus must be positive");
    if m == 1 {
        return Some(0);
    }
    let e = a.rem_euclid(m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

/// Integers `(x, y)` with `a*x + b*y = gcd(a, b)`, gcd non-negative.
pub fn bezout(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Dense integer matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Builds a matrix from row-major entries; panics if the length is wrong.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(rows * cols, entries.len(), "entry count must be rows*cols");
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from rows of machine integers. All rows must have
    /// the same length; an empty slice gives a 0x0 matrix.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    fn at(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] -= k * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(src, c) * k;
            *self.at(dst, c) -= v;
        }
    }

    /// col[dst] -= k * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, src) * k;
            *self.at(r, dst) -= v;
        }
    }
}

/// Diagonal of the Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors `d1 | d2 | ...`, unit factors included.
    pub factors: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Columns not covered by a nonzero factor.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Position of the nonzero entry of least absolute value in the block
/// `[t.., t..]`, ties to the lowest row-major index.
fn smallest_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..a.rows {
        for c in t..a.cols {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((br, bc)) if a.get(br, bc).abs() <= v.abs() => {}
                _ => best = Some((r, c)),
            }
        }
    }
    best
}

/// Smith normal form by gcd pivoting on a copy of `m`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let mut factors = Vec::new();
    let mut t = 0;
    while t < a.rows.min(a.cols) {
        let Some((r, c)) = smallest_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, r);
        a.swap_cols(t, c);
        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for r in t + 1..a.rows {
                if !a.get(r, t).is_zero() {
                    let q = a.get(r, t).div_floor(&p);
                    a.sub_row(r, t, &q);
                    dirty |= !a.get(r, t).is_zero();
                }
            }
            for c in t + 1..a.cols {
                if !a.get(t, c).is_zero() {
                    let q = a.get(t, c).div_floor(&p);
                    a.sub_col(c, t, &q);
                    dirty |= !a.get(t, c).is_zero();
                }
            }
            if dirty {
                // A remainder is smaller than the pivot: move it into place.
                let mut best = (t, t);
                for r in t + 1..a.rows {
                    let v = a.get(r, t);
                    if !v.is_zero() && v.abs() < a.get(best.0, best.1).abs() {
                        best = (r, t);
                    }
                }
                for c in t + 1..a.cols {
                    let v = a.get(t, c);
                    if !v.is_zero() && v.abs() < a.get(best.0, best.1).abs() {
                        best = (t, c);
                    }
                }
                a.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
                continue;
            }
            // Row and column are clear; enforce divisibility of the block.
            let bad = (t + 1..a.rows).find(|&r| {
                (t + 1..a.cols).any(|c| !a.get(r, c).is_multiple_of(&p))
            });
            match bad {
                Some(r) => {
                    let minus_one = BigInt::from(-1);
                    a.sub_row(t, r, &minus_one);
                }
                None => break,
            }
        }
        factors.push(a.get(t, t).abs());
        t += 1;
    }
    SmithForm {
        factors,
        rows: m.rows,
        cols: m.cols,
    }
}
