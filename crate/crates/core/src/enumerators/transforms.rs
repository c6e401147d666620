//! MacWilliams transforms: dual enumerators assembled from codeword
//! statistics and per-byte kernels, with one exact division at the end.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;

use super::KernelCache;
use crate::code::{AlphaDistribution, CompositionDistribution, JointStats, ProfileDistribution};
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Var};
use crate::ring::Ring;
use crate::weights::SpottyParams;

/// Which side(s) of a code pair the joint transform dualizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JointVariant {
    /// J_{(C-perp, D)}
    DualC,
    /// J_{(C, D-perp)}
    DualD,
    /// J_{(C-perp, D-perp)}
    DualBoth,
}

fn check_total<'a>(counts: impl Iterator<Item = &'a u64>, expected: u64, what: &str) -> Result<()> {
    let total: u64 = counts.sum();
    if total != expected {
        return Err(Error::domain(format!(
            "{what} counts sum to {total}, expected the code size {expected}"
        )));
    }
    Ok(())
}

/// Product of cached kernels raised to multiplicities, with power memo.
struct PowerMemo {
    memo: HashMap<(usize, u32), MultiPoly>,
}

impl PowerMemo {
    fn new() -> Self {
        PowerMemo { memo: HashMap::new() }
    }

    fn pow(&mut self, key: usize, base: &MultiPoly, e: u32) -> &MultiPoly {
        self.memo.entry((key, e)).or_insert_with(|| base.pow(e))
    }
}

/// W_{C-perp}(z) = (1/|C|) sum_alpha A_alpha prod_j theta_j(z)^alpha_j.
pub fn macwilliams_hamming(
    cache: &KernelCache,
    dist: &AlphaDistribution,
    code_size: u64,
    ell: u32,
    params: &SpottyParams,
) -> Result<MultiPoly> {
    check_total(dist.values(), code_size, "alpha-distribution")?;
    let b = params.b();
    let thetas: Vec<Arc<MultiPoly>> = (0..=b)
        .map(|j| cache.theta(j, ell, params))
        .collect::<Result<_>>()?;
    let mut powers = PowerMemo::new();
    let mut sum = MultiPoly::zero();
    for (alpha, &count) in dist {
        if alpha.len() != b + 1 {
            return Err(Error::domain(format!(
                "alpha-vector of length {}, expected {}",
                alpha.len(),
                b + 1
            )));
        }
        let mut term = MultiPoly::one();
        for (j, &a) in alpha.iter().enumerate() {
            if a > 0 {
                term = term.mul(powers.pow(j, &thetas[j], a));
            }
        }
        sum.add_scaled(&term, &BigInt::from(count));
    }
    sum.div_exact(&BigInt::from(code_size))
}

/// Split enumerator of C-perp: (1/|C|) sum A(j) prod_i g_{j_i}(x_i, y_i).
pub fn split_macwilliams(
    cache: &KernelCache,
    dist: &ProfileDistribution,
    code_size: u64,
    ell: u32,
    params: &SpottyParams,
) -> Result<MultiPoly> {
    check_total(dist.values(), code_size, "profile-distribution")?;
    let b = params.b();
    let kernels: Vec<Arc<MultiPoly>> = (0..=b)
        .map(|j| cache.split(j, ell, params))
        .collect::<Result<_>>()?;
    let mut renamed: HashMap<(usize, u8), MultiPoly> = HashMap::new();
    let mut sum = MultiPoly::zero();
    for (profile, &count) in dist {
        let mut term = MultiPoly::one();
        for (i, &j) in profile.iter().enumerate() {
            if j as usize > b {
                return Err(Error::domain(format!("byte weight {j} exceeds b = {b}")));
            }
            let factor = renamed.entry((i, j)).or_insert_with(|| {
                let idx = i as u32 + 1;
                kernels[j as usize].substitute([(Var::X, Var::xi(idx)), (Var::Y, Var::yi(idx))])
            });
            term = term.mul(factor);
        }
        sum.add_scaled(&term, &BigInt::from(count));
    }
    sum.div_exact(&BigInt::from(code_size))
}

/// Joint transforms of a code pair from its joint statistics A_delta(j; k),
/// where j profiles C and k profiles D.
pub fn joint_macwilliams(
    cache: &KernelCache,
    variant: JointVariant,
    stats: &JointStats,
    c_size: u64,
    d_size: u64,
    ell: u32,
    params: &SpottyParams,
) -> Result<MultiPoly> {
    check_total(stats.values(), c_size * d_size, "joint-statistics")?;
    let swap = [(Var::X, Var::Y), (Var::Y, Var::X)];
    let mut swapped: HashMap<(usize, usize, usize), MultiPoly> = HashMap::new();
    let mut sum = MultiPoly::zero();
    for (key, &count) in stats {
        if key.j.len() != key.k.len() || key.j.len() != key.delta.len() {
            return Err(Error::domain("joint key profiles of different lengths"));
        }
        let mut term = MultiPoly::one();
        for i in 0..key.j.len() {
            let (j, k, delta) = (key.j[i] as usize, key.k[i] as usize, key.delta[i] as usize);
            let factor = match variant {
                JointVariant::DualC => (*cache.g(j, k, delta, ell, params)?).clone(),
                JointVariant::DualD => match swapped.get(&(k, j, delta)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = cache.g(k, j, delta, ell, params)?.substitute(swap);
                        swapped.insert((k, j, delta), p.clone());
                        p
                    }
                },
                JointVariant::DualBoth => match swapped.get(&(j, k, delta)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = cache.h(j, k, delta, ell, params)?.substitute(swap);
                        swapped.insert((j, k, delta), p.clone());
                        p
                    }
                },
            };
            term = term.mul(&factor);
        }
        sum.add_scaled(&term, &BigInt::from(count));
    }
    let den = match variant {
        JointVariant::DualC => BigInt::from(c_size),
        JointVariant::DualD => BigInt::from(d_size),
        JointVariant::DualBoth => BigInt::from(c_size) * BigInt::from(d_size),
    };
    sum.div_exact(&den)
}

/// L_{C-perp}(z) = (1/|C|) sum_J A(J) prod_i g_{J_i}(z); R_k only.
pub fn lee_macwilliams(
    cache: &KernelCache,
    dist: &CompositionDistribution,
    code_size: u64,
    ring: &Ring,
    params: &SpottyParams,
) -> Result<MultiPoly> {
    if !ring.is_rk() {
        return Err(Error::unsupported(format!(
            "Lee transforms are defined only over R_k, not {}",
            ring.spec()
        )));
    }
    check_total(dist.values(), code_size, "composition-distribution")?;
    let mut sum = MultiPoly::zero();
    for (comp, &count) in dist {
        let mut term = MultiPoly::one();
        for byte in comp {
            term = term.mul(&*cache.lee(byte, ring, params)?);
        }
        sum.add_scaled(&term, &BigInt::from(count));
    }
    sum.div_exact(&BigInt::from(code_size))
}
