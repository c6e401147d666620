//! Per-byte transform kernels.
//!
//! Every kernel is the character sum over one byte of the dual side,
//! grouped by which positions are nonzero. A position where the fixed
//! (character) word is nonzero contributes -1 per nonzero dual symbol,
//! a position where it is zero contributes l - 1.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::code::ByteComposition;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::ring::{Elem, Ring};
use crate::weights::SpottyParams;

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn pow(base: i64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// Sum over the nonzero-count `a` of a block of `size` positions, each
/// nonzero symbol weighted by `factor`: C(size, a) * factor^a.
fn block_terms(size: usize, factor: i64) -> Vec<BigInt> {
    (0..=size).map(|a| binomial(size, a) * pow(factor, a)).collect()
}

fn check_weight(name: &str, w: usize, b: usize) -> Result<()> {
    if w > b {
        return Err(Error::domain(format!("{name} = {w} exceeds the byte length {b}")));
    }
    Ok(())
}

fn check_overlap(nu: usize, mu: usize, delta: usize, b: usize) -> Result<()> {
    check_weight("first weight", nu, b)?;
    check_weight("second weight", mu, b)?;
    if delta > nu.min(mu) || nu + mu > b + delta {
        return Err(Error::domain(format!(
            "overlap {delta} is infeasible for weights {nu}, {mu} in a byte of length {b}"
        )));
    }
    Ok(())
}

/// theta_j(z) = sum_{j1, j2} (-1)^j1 (l-1)^j2 C(j, j1) C(b-j, j2) z^ceil((j1+j2)/t).
pub fn theta_poly(j: usize, ell: u32, params: &SpottyParams) -> Result<MultiPoly> {
    let b = params.b();
    check_weight("byte weight", j, b)?;
    let inside = block_terms(j, -1);
    let outside = block_terms(b - j, ell as i64 - 1);
    let mut coeffs = vec![BigInt::zero(); params.max_spots() + 1];
    for (j1, c1) in inside.iter().enumerate() {
        for (j2, c2) in outside.iter().enumerate() {
            coeffs[params.spots(j1 + j2)] += c1 * c2;
        }
    }
    Ok(MultiPoly::univariate(Var::Z, &coeffs))
}

/// Krawtchouk value K_p(j) = sum_a (-1)^a (l-1)^(p-a) C(j, a) C(b-j, p-a).
pub fn krawtchouk(p: usize, j: usize, b: usize, ell: u32) -> BigInt {
    if j > b || p > b {
        return BigInt::zero();
    }
    (0..=p.min(j))
        .map(|a| pow(-1, a) * pow(ell as i64 - 1, p - a) * binomial(j, a) * binomial(b - j, p - a))
        .sum()
}

/// g_j(x, y) = sum_p K_p(j) x^(ceil(b/t) - ceil(p/t)) y^ceil(p/t).
pub fn split_kernel(j: usize, ell: u32, params: &SpottyParams) -> Result<MultiPoly> {
    let b = params.b();
    check_weight("byte weight", j, b)?;
    let top = params.max_spots() as u32;
    let mut out = MultiPoly::zero();
    for p in 0..=b {
        let s = params.spots(p) as u32;
        out.add_term(
            Monomial::new(vec![(Var::X, top - s), (Var::Y, s)]),
            krawtchouk(p, j, b, ell),
        );
    }
    Ok(out)
}

/// Monomial x^J y^K z^L of a byte pair with the given pair counts, where
/// x tracks the second word and y the first.
fn jkl_monomial(f01: usize, f10: usize, f11: usize, params: &SpottyParams) -> Monomial {
    let l = f11 / params.t();
    let j = params.spots(f01 + f11) - l;
    let k = params.spots(f10 + f11) - l;
    Monomial::new(vec![(Var::X, j as u32), (Var::Y, k as u32), (Var::Z, l as u32)])
}

/// G_{nu,mu}^(delta)(x, y, z): sum over bytes u of chi(<c, u>) x^J y^K z^L
/// for a character byte c of weight `nu` and a fixed byte v of weight `mu`
/// overlapping c in `delta` positions. J, K, L are taken of the pair (u, v),
/// so y tracks u and x tracks v.
pub fn g_kernel(nu: usize, mu: usize, delta: usize, ell: u32, params: &SpottyParams) -> Result<MultiPoly> {
    let b = params.b();
    check_overlap(nu, mu, delta, b)?;
    let m1 = ell as i64 - 1;
    // (size, sign factor, whether v is nonzero there)
    let blocks = [
        (delta, -1, true),
        (mu - delta, m1, true),
        (nu - delta, -1, false),
        (b + delta - nu - mu, m1, false),
    ];
    // (f11, f10) -> coefficient
    let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::from([((0, 0), BigInt::one())]);
    for (size, factor, on_v) in blocks {
        let terms = block_terms(size, factor);
        let mut next = BTreeMap::new();
        for (&(f11, f10), c) in &acc {
            for (a, t) in terms.iter().enumerate() {
                let key = if on_v { (f11 + a, f10) } else { (f11, f10 + a) };
                *next.entry(key).or_insert_with(BigInt::zero) += c * t;
            }
        }
        acc = next;
    }
    let mut out = MultiPoly::zero();
    for ((f11, f10), c) in acc {
        out.add_term(jkl_monomial(mu - f11, f10, f11, params), c);
    }
    Ok(out)
}

/// H_{mu,nu}^(delta)(x, y, z): sum over byte pairs (u, w) of
/// chi(<c, u>) chi(<d, w>) x^K y^J z^L for character bytes c, d of weights
/// `mu`, `nu` overlapping in `delta` positions, where J, K, L are taken of
/// the pair (u, w). Here x tracks u and y tracks w; the joint transform of
/// two duals evaluates it at (y, x, z).
pub fn h_kernel(mu: usize, nu: usize, delta: usize, ell: u32, params: &SpottyParams) -> Result<MultiPoly> {
    let b = params.b();
    check_overlap(mu, nu, delta, b)?;
    let m1 = ell as i64 - 1;
    // (size, factor for nonzero u, factor for nonzero w)
    let blocks = [
        (delta, -1, -1),
        (mu - delta, -1, m1),
        (nu - delta, m1, -1),
        (b + delta - mu - nu, m1, m1),
    ];
    // (f01, f10, f11) of the pair (u, w) -> coefficient
    let mut acc: BTreeMap<(usize, usize, usize), BigInt> =
        BTreeMap::from([((0, 0, 0), BigInt::one())]);
    for (size, fu, fw) in blocks {
        // multinomial split of the block into (u, w) zero patterns
        let mut cell: Vec<((usize, usize, usize), BigInt)> = Vec::new();
        for a11 in 0..=size {
            for a10 in 0..=size - a11 {
                for a01 in 0..=size - a11 - a10 {
                    let multi = binomial(size, a11)
                        * binomial(size - a11, a10)
                        * binomial(size - a11 - a10, a01);
                    let c = multi * pow(fu, a10 + a11) * pow(fw, a01 + a11);
                    cell.push(((a01, a10, a11), c));
                }
            }
        }
        let mut next = BTreeMap::new();
        for (&(f01, f10, f11), c) in &acc {
            for ((a01, a10, a11), t) in &cell {
                *next
                    .entry((f01 + a01, f10 + a10, f11 + a11))
                    .or_insert_with(BigInt::zero) += c * t;
            }
        }
        acc = next;
    }
    let mut out = MultiPoly::zero();
    for ((f01, f10, f11), c) in acc {
        // u is the first word of the pair, w the second.
        let m = jkl_monomial(f01, f10, f11, params);
        let swapped = Monomial::new(vec![
            (Var::X, m.exponent(Var::Y)),
            (Var::Y, m.exponent(Var::X)),
            (Var::Z, m.exponent(Var::Z)),
        ]);
        out.add_term(swapped, c);
    }
    Ok(out)
}

/// g_J(z) for a byte composition J over R_k: the sum over bytes v of
/// chi(<u, v>) z^ceil(w_L(v)/t) for any byte u with composition J.
pub fn lee_kernel(comp: &ByteComposition, ring: &Ring, params: &SpottyParams) -> Result<MultiPoly> {
    let lee = ring.lee_table().ok_or_else(|| {
        Error::unsupported(format!("Lee kernels are defined only over R_k, not {}", ring.spec()))
    })?;
    let total: usize = comp.iter().map(|&(_, c)| c as usize).sum();
    if total != params.b() {
        return Err(Error::domain(format!(
            "composition covers {total} positions, byte length is {}",
            params.b()
        )));
    }
    if let Some(&(e, _)) = comp.iter().find(|&&(e, _)| e >= ring.size()) {
        return Err(Error::domain(format!("composition names element index {e} outside the ring")));
    }
    let max_lee = *lee.iter().max().unwrap_or(&0) as usize;
    // Product over positions of sum_q chi(r_p r_q) w^(w_L(r_q)), in w.
    let mut acc = vec![BigInt::one()];
    for &(p, count) in comp {
        let mut row = vec![0i64; max_lee + 1];
        for q in ring.elements() {
            let sign = if ring.char_exponent(ring.mul(Elem(p), q)) == 0 { 1 } else { -1 };
            row[lee[q.index()] as usize] += sign;
        }
        for _ in 0..count {
            let mut next = vec![BigInt::zero(); acc.len() + max_lee];
            for (i, a) in acc.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (e, &r) in row.iter().enumerate() {
                    if r != 0 {
                        next[i + e] += a * r;
                    }
                }
            }
            acc = next;
        }
    }
    let mut coeffs = vec![BigInt::zero(); params.spots(acc.len() - 1) + 1];
    for (w, c) in acc.into_iter().enumerate() {
        coeffs[params.spots(w)] += c;
    }
    Ok(MultiPoly::univariate(Var::Z, &coeffs))
}
