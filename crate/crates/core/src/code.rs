//! Linear codes with byte structure and the codeword statistics the
//! enumerators consume.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};
use crate::weights::hamming_weight;

/// Default cap on the number of vectors an exhaustive enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// `alpha[w]` = number of bytes of Hamming weight `w`.
pub type AlphaVector = Vec<u32>;
/// Per-byte Hamming weights.
pub type Profile = Vec<u8>;
/// Sparse byte composition: (element index, multiplicity), sorted by index.
pub type ByteComposition = Vec<(u32, u32)>;
pub type Composition = Vec<ByteComposition>;

pub type AlphaDistribution = BTreeMap<AlphaVector, u64>;
pub type ProfileDistribution = BTreeMap<Profile, u64>;
pub type CompositionDistribution = BTreeMap<Composition, u64>;

/// Profiles of u, of v, and of their overlap.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JointKey {
    pub j: Profile,
    pub k: Profile,
    pub delta: Profile,
}

pub type JointStats = BTreeMap<JointKey, u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineKind {
    DirectSum,
    ParallelConcat,
}

#[derive(Debug, Clone)]
pub struct LinearCode {
    ring: Arc<Ring>,
    b: usize,
    n: usize,
    generators: Vec<Vec<Elem>>,
    codewords: Vec<Vec<Elem>>,
}

fn checked_power(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

fn budget_check(what: &str, required: u128, budget: u128) -> Result<()> {
    if required > budget {
        return Err(Error::Budget {
            what: what.to_string(),
            required,
            budget,
        });
    }
    Ok(())
}

/// Replaces the submodule `set` by `set + R g`.
fn extend_span(ring: &Ring, set: &mut HashSet<Vec<Elem>>, g: &[Elem]) {
    let multiples: Vec<Vec<Elem>> = ring
        .elements()
        .skip(1)
        .map(|r| g.iter().map(|&x| ring.mul(r, x)).collect::<Vec<_>>())
        .filter(|m| m.iter().any(|e| !e.is_zero()))
        .collect();
    // One pass suffices: {c + r g} is already a submodule.
    let mut added = Vec::new();
    for c in set.iter() {
        for m in &multiples {
            let s: Vec<Elem> = c.iter().zip(m).map(|(&a, &b)| ring.add(a, b)).collect();
            if !set.contains(&s) {
                added.push(s);
            }
        }
    }
    set.extend(added);
}

impl LinearCode {
    /// The code spanned by `generators`, enumerated exhaustively.
    pub fn span(
        ring: Arc<Ring>,
        b: usize,
        n: usize,
        generators: Vec<Vec<Elem>>,
        budget: u128,
    ) -> Result<LinearCode> {
        if b == 0 || n == 0 {
            return Err(Error::config("byte length and byte count must be positive"));
        }
        let len = b * n;
        for (i, g) in generators.iter().enumerate() {
            if g.len() != len {
                return Err(Error::config(format!(
                    "generator {} has length {}, expected n*b = {len}",
                    i + 1,
                    g.len()
                )));
            }
            if let Some(e) = g.iter().find(|e| e.0 >= ring.size()) {
                return Err(Error::domain(format!(
                    "generator {} has element index {} outside the ring",
                    i + 1,
                    e.0
                )));
            }
        }
        budget_check(
            "span enumeration",
            checked_power(ring.size() as u128, generators.len()),
            budget,
        )?;
        let mut set: HashSet<Vec<Elem>> = HashSet::from([vec![Elem::ZERO; len]]);
        for g in &generators {
            extend_span(&ring, &mut set, g);
        }
        let mut codewords: Vec<Vec<Elem>> = set.into_iter().collect();
        codewords.sort_unstable();
        Ok(LinearCode {
            ring,
            b,
            n,
            generators,
            codewords,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Codeword length N = n*b.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.b * self.n
    }

    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.generators
    }

    /// Sorted, deduplicated codewords.
    pub fn codewords(&self) -> &[Vec<Elem>] {
        &self.codewords
    }

    /// Number of codewords |C|.
    pub fn size(&self) -> u64 {
        self.codewords.len() as u64
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        self.codewords.binary_search_by(|c| c.as_slice().cmp(word)).is_ok()
    }

    /// l^N, the size of the ambient space (saturating).
    pub fn ambient_size(&self) -> u128 {
        checked_power(self.ring.size() as u128, self.len())
    }

    /// C-perp by exhaustive search over all l^N vectors.
    ///
    /// The returned code carries a small generating set extracted greedily
    /// from the dual codewords, so it can itself be dualized.
    pub fn dual_brute(&self, budget: u128) -> Result<LinearCode> {
        budget_check("brute-force dual", self.ambient_size(), budget)?;
        let ring = &*self.ring;
        let len = self.len();
        let ell = ring.size() as usize;
        let gens: Vec<&Vec<Elem>> = self
            .generators
            .iter()
            .filter(|g| g.iter().any(|e| !e.is_zero()))
            .collect();

        // Split on a prefix of coordinates for parallelism.
        let mut prefix_len = 0;
        let mut tasks = 1usize;
        while prefix_len < len && tasks < 256 {
            prefix_len += 1;
            tasks *= ell;
        }

        let mut codewords: Vec<Vec<Elem>> = (0..tasks)
            .into_par_iter()
            .flat_map_iter(|task| {
                let mut word = vec![Elem::ZERO; len];
                let mut rest = task;
                for slot in word[..prefix_len].iter_mut().rev() {
                    *slot = Elem((rest % ell) as u32);
                    rest /= ell;
                }
                let partial: Vec<Elem> = gens
                    .iter()
                    .map(|g| ring.dot(&g[..prefix_len], &word[..prefix_len]))
                    .collect();
                let mut out = Vec::new();
                dual_search(ring, &gens, &mut word, prefix_len, &partial, &mut out);
                out
            })
            .collect();
        codewords.sort_unstable();

        let mut span: HashSet<Vec<Elem>> = HashSet::from([vec![Elem::ZERO; len]]);
        let mut generators = Vec::new();
        for c in &codewords {
            if span.len() == codewords.len() {
                break;
            }
            if !span.contains(c) {
                extend_span(ring, &mut span, c);
                generators.push(c.clone());
            }
        }
        Ok(LinearCode {
            ring: self.ring.clone(),
            b: self.b,
            n: self.n,
            generators,
            codewords,
        })
    }

    /// Histogram of alpha-vectors (alpha_0, ..., alpha_b).
    pub fn alpha_distribution(&self) -> AlphaDistribution {
        let mut dist = AlphaDistribution::new();
        for c in &self.codewords {
            let mut alpha = vec![0u32; self.b + 1];
            for byte in c.chunks(self.b) {
                alpha[hamming_weight(byte)] += 1;
            }
            *dist.entry(alpha).or_default() += 1;
        }
        dist
    }

    /// Histogram of per-byte Hamming-weight profiles.
    pub fn profile_distribution(&self) -> ProfileDistribution {
        let mut dist = ProfileDistribution::new();
        for c in &self.codewords {
            *dist
                .entry(crate::weights::byte_profile(c, self.b))
                .or_default() += 1;
        }
        dist
    }

    /// Histogram of support bitmasks (bit i set iff coordinate i is nonzero).
    pub fn support_histogram(&self) -> Result<HashMap<u128, u64>> {
        if self.len() > 128 {
            return Err(Error::unsupported(format!(
                "support statistics need N <= 128, got {}",
                self.len()
            )));
        }
        let mut hist = HashMap::new();
        for c in &self.codewords {
            let mask = c
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .fold(0u128, |m, (i, _)| m | (1 << i));
            *hist.entry(mask).or_default() += 1;
        }
        Ok(hist)
    }

    /// Histogram of byte compositions; `Rk` rings only.
    pub fn composition_distribution(&self) -> Result<CompositionDistribution> {
        if !self.ring.is_rk() {
            return Err(Error::unsupported(format!(
                "composition statistics are defined only over R_k, not {}",
                self.ring.spec()
            )));
        }
        let mut dist = CompositionDistribution::new();
        for c in &self.codewords {
            let comp: Composition = c.chunks(self.b).map(byte_composition).collect();
            *dist.entry(comp).or_default() += 1;
        }
        Ok(dist)
    }

    /// Direct sum (u | v) or parallel concatenation (u' | v' | u'' | v'').
    pub fn combine(kind: CombineKind, c: &LinearCode, d: &LinearCode, budget: u128) -> Result<LinearCode> {
        if c.ring != d.ring || c.b != d.b {
            return Err(Error::config(
                "combined codes need the same ring and byte length",
            ));
        }
        let b = c.b;
        let n = c.n + d.n;
        let zc = vec![Elem::ZERO; c.len()];
        let zd = vec![Elem::ZERO; d.len()];
        let join = |u: &[Elem], v: &[Elem]| -> Vec<Elem> {
            match kind {
                CombineKind::DirectSum => [u, v].concat(),
                CombineKind::ParallelConcat => {
                    let (u1, u2) = u.split_at(u.len() / 2);
                    let (v1, v2) = v.split_at(v.len() / 2);
                    [u1, v1, u2, v2].concat()
                }
            }
        };
        if kind == CombineKind::ParallelConcat && (!c.n.is_multiple_of(2) || !d.n.is_multiple_of(2)) {
            return Err(Error::config(
                "parallel concatenation needs an even byte count in both codes",
            ));
        }
        let generators: Vec<Vec<Elem>> = c
            .generators
            .iter()
            .map(|g| join(g, &zd))
            .chain(d.generators.iter().map(|g| join(&zc, g)))
            .collect();
        budget_check(
            "combined code",
            (c.size() as u128).saturating_mul(d.size() as u128),
            budget,
        )?;
        let mut codewords: Vec<Vec<Elem>> = c
            .codewords
            .iter()
            .flat_map(|u| d.codewords.iter().map(|v| join(u, v)))
            .collect();
        codewords.sort_unstable();
        Ok(LinearCode {
            ring: c.ring.clone(),
            b,
            n,
            generators,
            codewords,
        })
    }
}

/// Pair histogram of two codes over the same geometry: the joint triples
/// (j, k, delta) over all (u, v) in C x D. Pairs are grouped by support
/// masks, so the work is bounded by the number of distinct mask pairs.
pub fn joint_statistics(c: &LinearCode, d: &LinearCode, budget: u128) -> Result<JointStats> {
    let hist_pairs = joint_support_pairs(c, d, budget)?;
    let b = c.b;
    let mut stats = JointStats::new();
    for ((mu, mv), count) in hist_pairs {
        let key = JointKey {
            j: mask_profile(mu, b, c.n),
            k: mask_profile(mv, b, c.n),
            delta: mask_profile(mu & mv, b, c.n),
        };
        *stats.entry(key).or_default() += count;
    }
    Ok(stats)
}

/// Counts of (support of u, support of v) over C x D.
pub fn joint_support_pairs(
    c: &LinearCode,
    d: &LinearCode,
    budget: u128,
) -> Result<Vec<((u128, u128), u64)>> {
    if c.ring != d.ring || c.b != d.b || c.n != d.n {
        return Err(Error::config(
            "joint statistics need two codes over the same ring and geometry",
        ));
    }
    let hc = c.support_histogram()?;
    let hd = d.support_histogram()?;
    budget_check(
        "joint support pairs",
        hc.len() as u128 * hd.len() as u128,
        budget,
    )?;
    let mut out = Vec::with_capacity(hc.len() * hd.len());
    for (&mu, &nu) in &hc {
        for (&mv, &nv) in &hd {
            out.push(((mu, mv), nu * nv));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Per-byte popcounts of a support mask.
pub fn mask_profile(mask: u128, b: usize, n: usize) -> Profile {
    let byte_mask = if b >= 128 { u128::MAX } else { (1u128 << b) - 1 };
    (0..n)
        .map(|i| ((mask >> (i * b)) & byte_mask).count_ones() as u8)
        .collect()
}

pub fn byte_composition(byte: &[Elem]) -> ByteComposition {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for e in byte {
        *counts.entry(e.0).or_default() += 1;
    }
    counts.into_iter().collect()
}

fn dual_search(
    ring: &Ring,
    gens: &[&Vec<Elem>],
    word: &mut [Elem],
    pos: usize,
    partial: &[Elem],
    out: &mut Vec<Vec<Elem>>,
) {
    if pos == word.len() {
        if partial.iter().all(|e| e.is_zero()) {
            out.push(word.to_vec());
        }
        return;
    }
    let mut next = partial.to_vec();
    for r in ring.elements() {
        word[pos] = r;
        for (slot, (g, &p)) in next.iter_mut().zip(gens.iter().zip(partial)) {
            *slot = ring.add(p, ring.mul(g[pos], r));
        }
        dual_search(ring, gens, word, pos + 1, &next, out);
    }
    word[pos] = Elem::ZERO;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn ring(spec: RingSpec) -> Arc<Ring> {
        Arc::new(Ring::new(spec).unwrap())
    }

    fn parse(r: &Ring, lits: &[&str]) -> Vec<Elem> {
        lits.iter().map(|s| r.parse_element(s).unwrap()).collect()
    }

    #[test]
    fn span_examples() {
        let r1 = ring(RingSpec::Rk(1));
        let zero = LinearCode::span(r1.clone(), 1, 1, vec![], DEFAULT_BUDGET).unwrap();
        assert_eq!(zero.size(), 1);
        let g = parse(&r1, &["u"]);
        let c = LinearCode::span(r1, 1, 1, vec![g], DEFAULT_BUDGET).unwrap();
        assert_eq!(c.size(), 2);
    }

    #[test]
    fn span_budget_and_geometry() {
        let z4 = ring(RingSpec::IntegersMod(4));
        let err = LinearCode::span(z4.clone(), 1, 2, vec![vec![Elem(1); 2]; 3], 16).unwrap_err();
        assert!(matches!(err, Error::Budget { required: 64, .. }));
        assert!(LinearCode::span(z4.clone(), 2, 1, vec![vec![Elem(1); 3]], 16).is_err());
        assert!(LinearCode::span(z4, 2, 1, vec![vec![Elem(4); 2]], 16).is_err());
    }

    #[test]
    fn dual_examples() {
        let z4 = ring(RingSpec::IntegersMod(4));
        let c = LinearCode::span(z4.clone(), 1, 2, vec![vec![Elem(1), Elem(1)]], DEFAULT_BUDGET).unwrap();
        let d = c.dual_brute(DEFAULT_BUDGET).unwrap();
        assert_eq!(d.size(), 4);
        assert!(d.contains(&[Elem(1), Elem(3)]));
        let dd = d.dual_brute(DEFAULT_BUDGET).unwrap();
        assert_eq!(dd.codewords(), c.codewords());

        let full = LinearCode::span(
            z4.clone(),
            1,
            2,
            vec![vec![Elem(1), Elem(0)], vec![Elem(0), Elem(1)]],
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert_eq!(full.dual_brute(DEFAULT_BUDGET).unwrap().size(), 1);

        let z6 = ring(RingSpec::IntegersMod(6));
        let c = LinearCode::span(z6, 1, 2, vec![vec![Elem(2), Elem(3)]], DEFAULT_BUDGET).unwrap();
        assert_eq!(c.size(), 6);
        assert_eq!(c.dual_brute(DEFAULT_BUDGET).unwrap().size(), 6);
        assert!(matches!(c.dual_brute(35), Err(Error::Budget { .. })));
    }

    #[test]
    fn duality_over_chain_ring() {
        let r = ring(RingSpec::ChainRing { p: 2, e: 3 });
        let g = parse(&r, &["u", "1+u2", "0", "u2"]);
        let c = LinearCode::span(r.clone(), 2, 2, vec![g], DEFAULT_BUDGET).unwrap();
        let d = c.dual_brute(DEFAULT_BUDGET).unwrap();
        assert_eq!(c.size() as u128 * d.size() as u128, 8u128.pow(4));
        assert_eq!(d.dual_brute(DEFAULT_BUDGET).unwrap().codewords(), c.codewords());
    }

    #[test]
    fn statistics_of_zero_code() {
        let r2 = ring(RingSpec::Rk(2));
        let zero = LinearCode::span(r2, 3, 2, vec![], DEFAULT_BUDGET).unwrap();
        let alpha = zero.alpha_distribution();
        assert_eq!(alpha.get(&vec![2, 0, 0, 0]), Some(&1));
        let prof = zero.profile_distribution();
        assert_eq!(prof.get(&vec![0, 0]), Some(&1));
        let comp = zero.composition_distribution().unwrap();
        assert_eq!(comp.get(&vec![vec![(0, 3)], vec![(0, 3)]]), Some(&1));
    }

    #[test]
    fn composition_of_byte() {
        let r2 = Ring::new(RingSpec::Rk(2)).unwrap();
        assert_eq!(byte_composition(&parse(&r2, &["0", "0", "uv"])), vec![(0, 2), (8, 1)]);
        let z4 = ring(RingSpec::IntegersMod(4));
        let c = LinearCode::span(z4, 1, 1, vec![], DEFAULT_BUDGET).unwrap();
        assert!(matches!(c.composition_distribution(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn joint_with_zero_code() {
        let z4 = ring(RingSpec::IntegersMod(4));
        let c = LinearCode::span(z4.clone(), 2, 1, vec![vec![Elem(1), Elem(2)]], DEFAULT_BUDGET).unwrap();
        let zero = LinearCode::span(z4, 2, 1, vec![], DEFAULT_BUDGET).unwrap();
        let stats = joint_statistics(&c, &zero, DEFAULT_BUDGET).unwrap();
        let total: u64 = stats.values().sum();
        assert_eq!(total, c.size());
        for (key, &count) in &stats {
            assert_eq!(key.k, vec![0]);
            assert_eq!(key.delta, vec![0]);
            assert_eq!(c.profile_distribution()[&key.j], count);
        }
    }

    #[test]
    fn combine_codes() {
        let z4 = ring(RingSpec::IntegersMod(4));
        let c = LinearCode::span(z4.clone(), 1, 2, vec![vec![Elem(1), Elem(1)]], DEFAULT_BUDGET).unwrap();
        let d = LinearCode::span(z4.clone(), 1, 2, vec![vec![Elem(2), Elem(0)]], DEFAULT_BUDGET).unwrap();
        let s = LinearCode::combine(CombineKind::DirectSum, &c, &d, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.size(), c.size() * d.size());
        assert_eq!(s.n(), 4);
        assert!(s.contains(&[Elem(1), Elem(1), Elem(2), Elem(0)]));
        let p = LinearCode::combine(CombineKind::ParallelConcat, &c, &d, DEFAULT_BUDGET).unwrap();
        assert!(p.contains(&[Elem(1), Elem(2), Elem(1), Elem(0)]));
        // span of the combined generators is the combined code
        let again = LinearCode::span(z4.clone(), 1, 4, p.generators().to_vec(), DEFAULT_BUDGET).unwrap();
        assert_eq!(again.codewords(), p.codewords());
        let odd = LinearCode::span(z4, 1, 1, vec![], DEFAULT_BUDGET).unwrap();
        assert!(LinearCode::combine(CombineKind::ParallelConcat, &odd, &odd, DEFAULT_BUDGET).is_err());
    }
}
