//! Exhaustive per-byte character sums, evaluated exactly.

use std::collections::BTreeMap;

use crate::cyclotomic::CyclotomicSum;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::ring::{Elem, Ring};
use crate::weights::{jkl_of_counts, pair_counts, SpottyParams};

/// A polynomial whose coefficients are character sums.
#[derive(Debug, Clone)]
pub struct CharPoly {
    m: u32,
    terms: BTreeMap<Monomial, CyclotomicSum>,
}

impl CharPoly {
    pub fn new(m: u32) -> Self {
        CharPoly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn accumulate(&mut self, mono: Monomial, exponent: u32, weight: i64) {
        let m = self.m;
        self.terms
            .entry(mono)
            .or_insert_with(|| CyclotomicSum::zero(m))
            .accumulate(exponent, weight);
    }

    /// The integer polynomial, if every coefficient is a rational integer.
    pub fn to_poly(&self) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (mono, sum) in &self.terms {
            let c = sum.as_integer().ok_or_else(|| {
                Error::Integrality(format!("character sum at {mono} is not an integer"))
            })?;
            out.add_term(mono.clone(), c.into());
        }
        Ok(out)
    }
}

/// All vectors of R^len in lexicographic index order.
pub fn all_vectors(ring: &Ring, len: usize) -> impl Iterator<Item = Vec<Elem>> + '_ {
    let ell = ring.size() as u64;
    let total = ell.pow(len as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![Elem::ZERO; len];
        for slot in v.iter_mut().rev() {
            *slot = Elem((idx % ell) as u32);
            idx /= ell;
        }
        v
    })
}

pub fn vector_budget(ring: &Ring, len: usize, budget: u128, what: &str) -> Result<()> {
    let required = (ring.size() as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::Budget {
            what: what.to_string(),
            required,
            budget,
        });
    }
    Ok(())
}

fn jkl_mono(u: &[Elem], v: &[Elem], params: &SpottyParams) -> Monomial {
    let pc = pair_counts(u, v).expect("bytes of equal length");
    let (j, k, l) = jkl_of_counts(pc, params.t());
    Monomial::new(vec![(Var::X, j as u32), (Var::Y, k as u32), (Var::Z, l as u32)])
}

/// sum over bytes u of chi(<c, u>) x^J y^K z^L with (J, K, L) of the pair (u, v).
pub fn g_oracle(ring: &Ring, c: &[Elem], v: &[Elem], params: &SpottyParams) -> Result<MultiPoly> {
    let mut acc = CharPoly::new(ring.char_order());
    for u in all_vectors(ring, c.len()) {
        acc.accumulate(jkl_mono(&u, v, params), ring.char_exponent(ring.dot(c, &u)), 1);
    }
    acc.to_poly()
}

/// sum over byte pairs (u, w) of chi(<c, u>) chi(<d, w>) x^J y^K z^L with
/// (J, K, L) of the pair (u, w).
pub fn h_oracle(ring: &Ring, c: &[Elem], d: &[Elem], params: &SpottyParams) -> Result<MultiPoly> {
    let mut acc = CharPoly::new(ring.char_order());
    let bytes: Vec<Vec<Elem>> = all_vectors(ring, c.len()).collect();
    for u in &bytes {
        let eu = ring.char_exponent(ring.dot(c, u));
        for w in &bytes {
            let ew = ring.char_exponent(ring.dot(d, w));
            acc.accumulate(jkl_mono(u, w, params), eu + ew, 1);
        }
    }
    acc.to_poly()
}

/// sum over bytes v of chi(<c, v>) z^ceil(w_H(v)/t).
pub fn theta_oracle(ring: &Ring, c: &[Elem], params: &SpottyParams) -> Result<MultiPoly> {
    let mut acc = CharPoly::new(ring.char_order());
    for v in all_vectors(ring, c.len()) {
        let w = v.iter().filter(|e| !e.is_zero()).count();
        acc.accumulate(
            Monomial::var(Var::Z, params.spots(w) as u32),
            ring.char_exponent(ring.dot(c, &v)),
            1,
        );
    }
    acc.to_poly()
}

/// sum over bytes v of chi(<c, v>) z^ceil(w_L(v)/t); R_k only.
pub fn lee_oracle(ring: &Ring, c: &[Elem], params: &SpottyParams) -> Result<MultiPoly> {
    let lee = ring
        .lee_table()
        .ok_or_else(|| Error::unsupported(format!("Lee weights over {}", ring.spec())))?;
    let mut acc = CharPoly::new(ring.char_order());
    for v in all_vectors(ring, c.len()) {
        let w: u32 = v.iter().map(|e| lee[e.index()]).sum();
        acc.accumulate(
            Monomial::var(Var::Z, params.spots(w as usize) as u32),
            ring.char_exponent(ring.dot(c, &v)),
            1,
        );
    }
    acc.to_poly()
}
