//! The standard lemma suite and the randomized identity sweep.

use std::sync::Arc;

use rayon::prelude::*;

use super::{
    check_character_lemmas, check_duality, check_floor_decomposition, check_instance, check_jkl_sums,
    check_joint_properties, check_kernel_oracles, check_kernel_vanishing, check_lee_kernel,
    random_instances, VerificationReport,
};
use crate::code::LinearCode;
use crate::enumerators::KernelCache;
use crate::error::Result;
use crate::ring::{Elem, Ring, RingSpec};
use crate::weights::SpottyParams;

/// Rings exercised by the suites.
pub const SUITE_RINGS: [RingSpec; 7] = [
    RingSpec::IntegersMod(4),
    RingSpec::IntegersMod(6),
    RingSpec::PrimeField(5),
    RingSpec::ChainRing { p: 2, e: 2 },
    RingSpec::ChainRing { p: 2, e: 3 },
    RingSpec::Rk(1),
    RingSpec::Rk(2),
];

/// Number of random code pairs the lemma suite uses for duality and joint
/// enumerator properties.
pub const LEMMA_PAIRS: usize = 40;

fn fits(ring: &Ring, len: usize, budget: u128) -> bool {
    (ring.size() as u128)
        .checked_pow(len as u32)
        .is_some_and(|v| v <= budget)
}

/// Character-sum lemmas on every suite ring for b <= 3, the floor
/// decomposition for t <= 8, J/K/L sums over R_1 for b <= 3, Lee kernels
/// over R_2 for b <= 3, kernel oracles and vanishing, and duality plus
/// joint properties on seeded random pairs. Sizes beyond `budget` are
/// skipped rather than failed.
pub fn lemma_suite(seed: u64, cache: &KernelCache, budget: u128) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for spec in SUITE_RINGS {
        let ring = Ring::new(spec)?;
        for b in 1..=3 {
            if fits(&ring, b, budget) {
                out.push(check_character_lemmas(&ring, b, 256, budget)?);
            }
        }
    }
    out.push(check_floor_decomposition(8));
    let r1 = Ring::new(RingSpec::Rk(1))?;
    let jkl_b = (1..=3).rev().find(|&b| fits(&r1, 2 * b, budget)).unwrap_or(0);
    if jkl_b > 0 {
        out.push(check_jkl_sums(&r1, jkl_b, budget)?);
    }
    let r2 = Ring::new(RingSpec::Rk(2))?;
    for b in 1..=3 {
        if fits(&r2, 2 * b, budget) {
            out.push(check_lee_kernel(&r2, b, 1, cache, budget)?);
        }
    }
    for spec in SUITE_RINGS {
        let ring = Ring::new(spec)?;
        for b in 1..=3 {
            if fits(&ring, 2 * b, budget.min(1 << 16)) {
                out.push(check_kernel_oracles(&ring, b, cache, budget)?);
            }
        }
    }
    out.push(check_kernel_vanishing(4, &[RingSpec::Rk(1), RingSpec::Rk(2)], cache)?);

    // duality on a fixed Z6 code and on seeded random codes
    let z6 = Arc::new(Ring::new(RingSpec::IntegersMod(6))?);
    let fixed = LinearCode::span(z6, 2, 1, vec![vec![Elem(2), Elem(3)]], budget)?;
    out.push(check_duality(&fixed, budget)?);
    let pairs: Vec<Result<Vec<VerificationReport>>> = random_instances(seed, LEMMA_PAIRS)
        .par_iter()
        .filter(|inst| Ring::new(inst.ring).is_ok_and(|r| fits(&r, inst.b * inst.n, budget)))
        .map(|inst| {
            let ring = Arc::new(Ring::new(inst.ring)?);
            let to_code = |gens: &[Vec<u32>]| {
                let rows = gens.iter().map(|g| g.iter().map(|&i| Elem(i)).collect()).collect();
                LinearCode::span(ring.clone(), inst.b, inst.n, rows, budget)
            };
            let (c, d) = (to_code(&inst.c_generators)?, to_code(&inst.d_generators)?);
            let params = SpottyParams::new(inst.b, inst.t)?;
            let mut dual = check_duality(&c, budget)?;
            dual.instance = inst.to_string();
            let mut joint = check_joint_properties(&c, &d, &params, budget)?;
            joint.instance = inst.to_string();
            Ok(vec![dual, joint])
        })
        .collect();
    for r in pairs {
        out.extend(r?);
    }
    Ok(out)
}

/// Every identity on `count` seeded random instances, checked in parallel;
/// reports come back in instance order.
pub fn identity_sweep(seed: u64, count: usize, cache: &KernelCache, budget: u128) -> Result<Vec<VerificationReport>> {
    random_instances(seed, count)
        .par_iter()
        .map(|inst| check_instance(inst, cache, budget))
        .collect()
}
