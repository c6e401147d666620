//! Enumerators computed directly from codewords.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::code::{joint_support_pairs, LinearCode};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::weights::{jkl_of_counts, m_spotty_hamming_weight, m_spotty_lee_weight, PairCounts, SpottyParams};

fn check_geometry(code: &LinearCode, params: &SpottyParams) -> Result<()> {
    if code.b() != params.b() {
        return Err(Error::config(format!(
            "code has byte length {}, spotty parameters expect {}",
            code.b(),
            params.b()
        )));
    }
    Ok(())
}

fn univariate_from_histogram(hist: BTreeMap<usize, u64>) -> MultiPoly {
    MultiPoly::from_terms(
        hist.into_iter()
            .map(|(e, c)| (Monomial::var(Var::Z, e as u32), BigInt::from(c))),
    )
}

/// W(z) = sum over codewords of z^{w_M(c)}.
pub fn hamming_enumerator(code: &LinearCode, params: &SpottyParams) -> Result<MultiPoly> {
    check_geometry(code, params)?;
    let mut hist = BTreeMap::new();
    for c in code.codewords() {
        *hist.entry(m_spotty_hamming_weight(c, params)?).or_default() += 1;
    }
    Ok(univariate_from_histogram(hist))
}

/// L(z) = sum over codewords of z^{w_ML(c)}; R_k only.
pub fn lee_enumerator(code: &LinearCode, params: &SpottyParams) -> Result<MultiPoly> {
    check_geometry(code, params)?;
    let ring = code.ring();
    if !ring.is_rk() {
        return Err(Error::unsupported(format!(
            "Lee enumerators are defined only over R_k, not {}",
            ring.spec()
        )));
    }
    let mut hist = BTreeMap::new();
    for c in code.codewords() {
        *hist.entry(m_spotty_lee_weight(ring, c, params)?).or_default() += 1;
    }
    Ok(univariate_from_histogram(hist))
}

/// S(x_i, y_i) = sum over codewords of prod_i x_i^{ceil(b/t) - w_M(c_i)} y_i^{w_M(c_i)}.
pub fn split_enumerator(code: &LinearCode, params: &SpottyParams) -> Result<MultiPoly> {
    check_geometry(code, params)?;
    let top = params.max_spots() as u32;
    let mut out = MultiPoly::zero();
    for (profile, count) in code.profile_distribution() {
        let factors = profile
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| {
                let s = params.spots(w as usize) as u32;
                let i = i as u32 + 1;
                [(Var::xi(i), top - s), (Var::yi(i), s)]
            })
            .collect();
        out.add_term(Monomial::new(factors), BigInt::from(count));
    }
    Ok(out)
}

/// J_{(C,D)}(x, y, z) = sum over u in C, v in D of x^J y^K z^L, with
/// J + L = w_M(v) and K + L = w_M(u).
pub fn joint_enumerator(
    c: &LinearCode,
    d: &LinearCode,
    params: &SpottyParams,
    budget: u128,
) -> Result<MultiPoly> {
    check_geometry(c, params)?;
    let b = params.b();
    let byte_mask = if b >= 128 { u128::MAX } else { (1u128 << b) - 1 };
    let mut hist: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
    for ((mu, mv), count) in joint_support_pairs(c, d, budget)? {
        let mut total = (0, 0, 0);
        for i in 0..c.n() {
            let bu = (mu >> (i * b)) & byte_mask;
            let bv = (mv >> (i * b)) & byte_mask;
            let pc = PairCounts {
                f01: (!bu & bv).count_ones() as usize,
                f10: (bu & !bv).count_ones() as usize,
                f11: (bu & bv).count_ones() as usize,
            };
            let (j, k, l) = jkl_of_counts(pc, params.t());
            total.0 += j;
            total.1 += k;
            total.2 += l;
        }
        *hist.entry(total).or_default() += count;
    }
    Ok(MultiPoly::from_terms(hist.into_iter().map(|((j, k, l), n)| {
        (
            Monomial::new(vec![(Var::X, j as u32), (Var::Y, k as u32), (Var::Z, l as u32)]),
            BigInt::from(n),
        )
    })))
}
