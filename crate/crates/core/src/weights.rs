//! Byte-structured weights and distances.
//!
//! A word of length N = n*b is split into n bytes of b symbols. The m-spotty
//! weight counts ceil(w/t) per byte, where w is the byte's Hamming (or Lee)
//! weight and t is the spotty parameter.

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpottyParams {
    b: usize,
    t: usize,
}

impl SpottyParams {
    pub fn new(b: usize, t: usize) -> Result<Self> {
        if t == 0 || t > b {
            return Err(Error::config(format!(
                "spotty parameter must satisfy 1 <= t <= b, got t = {t}, b = {b}"
            )));
        }
        Ok(SpottyParams { b, t })
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// ceil(w / t)
    #[inline]
    pub fn spots(&self, w: usize) -> usize {
        w.div_ceil(self.t)
    }

    /// Largest per-byte m-spotty weight, ceil(b / t).
    pub fn max_spots(&self) -> usize {
        self.spots(self.b)
    }
}

/// Per-byte case offset of the floor decomposition of ceil((a + b) / t):
/// 0 if both residues vanish, 1 if their sum is at most t, 2 otherwise.
#[inline]
pub fn residue_offset(a: usize, b: usize, t: usize) -> usize {
    let s = a % t + b % t;
    if s == 0 {
        0
    } else if s <= t {
        1
    } else {
        2
    }
}

/// ceil((a + b) / t) assembled from floors and the residue offset.
pub fn split_ceil(a: usize, b: usize, t: usize) -> usize {
    a / t + b / t + residue_offset(a, b, t)
}

pub fn hamming_weight(word: &[Elem]) -> usize {
    word.iter().filter(|e| !e.is_zero()).count()
}

fn check_len(len: usize, params: &SpottyParams) -> Result<()> {
    if !len.is_multiple_of(params.b) {
        return Err(Error::domain(format!(
            "word length {len} is not a multiple of the byte length {}",
            params.b
        )));
    }
    Ok(())
}

/// Per-byte Hamming weights (the weight-distribution vector w_D).
pub fn byte_profile(word: &[Elem], b: usize) -> Vec<u8> {
    word.chunks(b).map(|byte| hamming_weight(byte) as u8).collect()
}

pub fn m_spotty_hamming_weight(word: &[Elem], params: &SpottyParams) -> Result<usize> {
    check_len(word.len(), params)?;
    Ok(word
        .chunks(params.b)
        .map(|byte| params.spots(hamming_weight(byte)))
        .sum())
}

pub fn m_spotty_distance(u: &[Elem], v: &[Elem], params: &SpottyParams) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::domain("distance between words of different length"));
    }
    check_len(u.len(), params)?;
    Ok(u.chunks(params.b)
        .zip(v.chunks(params.b))
        .map(|(x, y)| params.spots(x.iter().zip(y).filter(|(a, b)| a != b).count()))
        .sum())
}

/// Positionwise support comparison of two bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PairCounts {
    /// u' zero, v' nonzero
    pub f01: usize,
    /// u' nonzero, v' zero
    pub f10: usize,
    /// both nonzero
    pub f11: usize,
}

pub fn pair_counts(u: &[Elem], v: &[Elem]) -> Result<PairCounts> {
    if u.len() != v.len() {
        return Err(Error::domain("pair counts of bytes of different length"));
    }
    let mut pc = PairCounts::default();
    for (a, b) in u.iter().zip(v) {
        match (a.is_zero(), b.is_zero()) {
            (true, false) => pc.f01 += 1,
            (false, true) => pc.f10 += 1,
            (false, false) => pc.f11 += 1,
            (true, true) => {}
        }
    }
    Ok(pc)
}

/// (J, K, L) of a single byte pair from its pair counts.
#[inline]
pub fn jkl_of_counts(pc: PairCounts, t: usize) -> (usize, usize, usize) {
    let j = pc.f01 / t + residue_offset(pc.f01, pc.f11, t);
    let k = pc.f10 / t + residue_offset(pc.f10, pc.f11, t);
    let l = pc.f11 / t;
    (j, k, l)
}

/// Bytewise sums of J, K, L. J + L = w_M(v) and K + L = w_M(u).
pub fn jkl(u: &[Elem], v: &[Elem], params: &SpottyParams) -> Result<(usize, usize, usize)> {
    if u.len() != v.len() {
        return Err(Error::domain("J/K/L of words of different length"));
    }
    check_len(u.len(), params)?;
    let mut total = (0, 0, 0);
    for (x, y) in u.chunks(params.b).zip(v.chunks(params.b)) {
        let (j, k, l) = jkl_of_counts(pair_counts(x, y)?, params.t);
        total.0 += j;
        total.1 += k;
        total.2 += l;
    }
    Ok(total)
}

pub fn lee_weight_of(ring: &Ring, word: &[Elem]) -> Result<usize> {
    let table = ring
        .lee_table()
        .ok_or_else(|| Error::unsupported(format!("Lee weight over {}", ring.spec())))?;
    Ok(word.iter().map(|e| table[e.index()] as usize).sum())
}

pub fn m_spotty_lee_weight(ring: &Ring, word: &[Elem], params: &SpottyParams) -> Result<usize> {
    check_len(word.len(), params)?;
    let mut total = 0;
    for byte in word.chunks(params.b) {
        total += params.spots(lee_weight_of(ring, byte)?);
    }
    Ok(total)
}

pub fn m_spotty_lee_distance(
    ring: &Ring,
    u: &[Elem],
    v: &[Elem],
    params: &SpottyParams,
) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::domain("Lee distance between words of different length"));
    }
    let diff: Vec<Elem> = u.iter().zip(v).map(|(&a, &b)| ring.sub(a, b)).collect();
    m_spotty_lee_weight(ring, &diff, params)
}
