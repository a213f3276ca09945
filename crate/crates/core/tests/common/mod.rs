#![allow(dead_code)]

use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use seifert_core::fst::CrossingPair;
use seifert_core::symbol::{ClassPart, Obstruction, Orientability, SeifertSymbol, Subtype};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sym(text: &str) -> SeifertSymbol {
    seifert_core::parse_symbol(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Random pair with index in `2..=max_mu` and beta coprime to it, in `[1, mu)`.
pub fn pair(r: &mut ChaCha8Rng, max_mu: i64) -> CrossingPair {
    let mu = r.gen_range(2..=max_mu);
    loop {
        let beta = r.gen_range(1..mu);
        if beta.gcd(&mu) == 1 {
            return CrossingPair::new(mu, beta);
        }
    }
}

/// Pair with an unreduced beta anywhere in `[0, 3 mu)`, index possibly 1.
pub fn raw_pair(r: &mut ChaCha8Rng, max_mu: i64) -> CrossingPair {
    let mu = r.gen_range(1..=max_mu);
    loop {
        let beta = r.gen_range(0..3 * mu);
        if beta.gcd(&mu) == 1 {
            return CrossingPair::new(mu, beta);
        }
    }
}

pub fn closed_oriented(r: &mut ChaCha8Rng, max_genus: u32, max_pairs: usize, max_mu: i64, max_b: i64) -> SeifertSymbol {
    let g = r.gen_range(0..=max_genus);
    let n = r.gen_range(0..=max_pairs);
    let pairs = (0..n).map(|_| pair(r, max_mu)).collect();
    let b = r.gen_range(-max_b..=max_b);
    SeifertSymbol::new(ClassPart::oo(g), 0, 0, Obstruction::Integer(b), pairs).unwrap()
}

/// Random non-orientable class with at most `max_k` handles or crosscaps.
pub fn nonorientable_class(r: &mut ChaCha8Rng, max_k: u32) -> ClassPart {
    use Orientability::*;
    loop {
        let k = r.gen_range(1..=max_k);
        let c = match r.gen_range(0..4) {
            0 => ClassPart::new(NonOrientable, Orientable, None, k),
            1 => ClassPart::new(NonOrientable, NonOrientable, Some(Subtype::I), k),
            2 => ClassPart::new(NonOrientable, NonOrientable, Some(Subtype::II), k),
            _ => ClassPart::new(NonOrientable, NonOrientable, Some(Subtype::III), k),
        };
        if let Ok(c) = c {
            return c;
        }
    }
}

pub fn closed_nonorientable(r: &mut ChaCha8Rng, max_k: u32, max_pairs: usize, max_mu: i64) -> SeifertSymbol {
    let class = nonorientable_class(r, max_k);
    let n = r.gen_range(0..=max_pairs);
    let pairs = (0..n).map(|_| raw_pair(r, max_mu)).collect();
    let b = r.gen_range(-2..=2);
    let s = r.gen_range(0..=2);
    SeifertSymbol::new(class, 0, 0, Obstruction::NonOrientable { b, s }, pairs).unwrap()
}

/// Any valid class, orientable or not.
pub fn any_class(r: &mut ChaCha8Rng, max_k: u32) -> ClassPart {
    use Orientability::*;
    match r.gen_range(0..3) {
        0 => ClassPart::oo(r.gen_range(0..=max_k)),
        1 => ClassPart::new(Orientable, NonOrientable, None, r.gen_range(1..=max_k)).unwrap(),
        _ => nonorientable_class(r, max_k),
    }
}

pub fn bounded(r: &mut ChaCha8Rng, max_k: u32, max_pairs: usize, max_mu: i64) -> SeifertSymbol {
    let class = any_class(r, max_k);
    let tori = r.gen_range(0..=2);
    let klein = 2 * r.gen_range(0..=1);
    let tori = if tori + klein == 0 { 1 } else { tori };
    let n = r.gen_range(0..=max_pairs);
    let pairs = (0..n).map(|_| raw_pair(r, max_mu)).collect();
    SeifertSymbol::new(class, tori, klein, Obstruction::Absent, pairs).unwrap()
}

/// Mixed corpus of closed and bounded symbols over every class.
pub fn any_symbol(r: &mut ChaCha8Rng) -> SeifertSymbol {
    match r.gen_range(0..3) {
        0 => {
            let mut s = closed_oriented(r, 3, 4, 9, 4);
            if r.gen_bool(0.3) {
                let class = ClassPart::new(Orientability::Orientable, Orientability::NonOrientable, None, r.gen_range(1..=3)).unwrap();
                s = SeifertSymbol::new(class, 0, 0, s.obstruction(), s.pairs().to_vec()).unwrap();
            }
            s
        }
        1 => closed_nonorientable(r, 4, 4, 9),
        _ => bounded(r, 3, 3, 9),
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return i128::from(m[0][0]);
    }
    let mut d = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        d += sign * i128::from(m[0][j]) * cofactor_det(&minor);
    }
    d
}
