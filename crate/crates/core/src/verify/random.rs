//! Seeded random code pairs small enough for brute-force duals.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Instance;
use crate::ring::RingSpec;

const RINGS: [RingSpec; 7] = [
    RingSpec::IntegersMod(4),
    RingSpec::IntegersMod(6),
    RingSpec::PrimeField(5),
    RingSpec::ChainRing { p: 2, e: 2 },
    RingSpec::ChainRing { p: 2, e: 3 },
    RingSpec::Rk(1),
    RingSpec::Rk(2),
];

fn ring_size(spec: RingSpec) -> u128 {
    match spec {
        RingSpec::IntegersMod(l) | RingSpec::PrimeField(l) => l as u128,
        RingSpec::ChainRing { p, e } => (p as u128).pow(e),
        RingSpec::Rk(k) => 1u128 << (1u32 << k),
    }
}

/// Ambient spaces are capped at this many vectors.
pub const MAX_AMBIENT: u128 = 1 << 20;

/// `count` instances from a ChaCha stream seeded by `seed`: b in 1..=3,
/// n in 1..=2, t in 1..=b and one or two uniform generators per code.
pub fn random_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let ring = RINGS[rng.gen_range(0..RINGS.len())];
        let b = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=2usize);
        let ell = ring_size(ring);
        let len = (b * n) as u32;
        if ell.checked_pow(len).is_none_or(|a| a > MAX_AMBIENT) {
            continue;
        }
        let t = rng.gen_range(1..=b);
        let gens = |rng: &mut ChaCha8Rng| -> Vec<Vec<u32>> {
            let k = rng.gen_range(1..=2);
            (0..k)
                .map(|_| (0..len).map(|_| rng.gen_range(0..ell as u32)).collect())
                .collect()
        };
        let c_generators = gens(&mut rng);
        let d_generators = gens(&mut rng);
        out.push(Instance { ring, b, n, t, c_generators, d_generators });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_bounded() {
        let a = random_instances(7, 40);
        assert_eq!(a, random_instances(7, 40));
        assert_ne!(a, random_instances(8, 40));
        for inst in &a {
            assert!(ring_size(inst.ring).pow((inst.b * inst.n) as u32) <= MAX_AMBIENT);
            assert!((1..=inst.b).contains(&inst.t));
        }
    }
}
