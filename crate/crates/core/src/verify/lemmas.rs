//! Character-sum lemmas, weight identities, kernel properties, duality.

use std::collections::HashSet;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use super::oracles::{all_vectors, g_oracle, h_oracle, vector_budget};
use super::VerificationReport;
use crate::code::{byte_composition, LinearCode};
use crate::cyclotomic::CyclotomicSum;
use crate::enumerators::{hamming_enumerator, joint_enumerator, kernels, KernelCache};
use crate::error::Result;
use crate::poly::{MultiPoly, Var};
use crate::ring::{Elem, Ring, RingSpec};
use crate::weights::{jkl, m_spotty_hamming_weight, split_ceil, SpottyParams};

fn support_mask(v: &[Elem]) -> usize {
    v.iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .fold(0, |m, (i, _)| m | (1 << i))
}

fn signed_pow(base: i64, e: usize) -> i64 {
    base.pow(e as u32)
}

fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn value(sum: &CyclotomicSum) -> serde_json::Value {
    match sum.as_integer() {
        Some(v) => json!(v),
        None => json!({"non_integer_counts": sum.counts()}),
    }
}

/// The character-sum lemmas over one ring and byte length.
///
/// - sum_r chi(a r) is l for a = 0 and 0 otherwise;
/// - for nonempty I inside supp(c): the sum over v with supp(v) = I is
///   (-1)^|I|, and the sum over v with supp(v) inside I vanishes;
/// - grouped by |supp(v)| inside and outside supp(c) the sums take the
///   binomial closed forms, and the full byte sum is theta_j(z).
///
/// Every byte c is checked when l^(2b) fits the budget; otherwise `samples`
/// bytes spread evenly over R^b are.
pub fn check_character_lemmas(ring: &Ring, b: usize, samples: usize, budget: u128) -> Result<VerificationReport> {
    vector_budget(ring, b, budget, "character lemma byte sums")?;
    let ell = ring.size() as i64;
    let m = ring.char_order();
    let mut report = VerificationReport::new("lemmas", format!("{} b={b}", ring.spec()));

    for a in ring.elements() {
        let mut s = CyclotomicSum::zero(m);
        for r in ring.elements() {
            s.accumulate(ring.char_exponent(ring.mul(a, r)), 1);
        }
        let expected = if a.is_zero() { ell } else { 0 };
        report.check(
            format!("ideal_sum a={}", ring.format_element(a)),
            s.as_integer() == Some(expected),
            || json!({"expected": expected, "actual": value(&s)}),
        );
    }

    let total = (ring.size() as u128).pow(b as u32);
    let exhaustive = total.saturating_mul(total) <= budget;
    let step = if exhaustive { 1 } else { (total / samples.max(1) as u128).max(1) };
    let bytes: Vec<Vec<Elem>> = all_vectors(ring, b).collect();
    let chosen: Vec<&Vec<Elem>> = bytes.iter().step_by(step as usize).collect();

    let results: Vec<VerificationReport> = chosen
        .par_iter()
        .map(|c| byte_lemmas(ring, c, &bytes))
        .collect::<Result<_>>()?;
    for r in results {
        report.assertions.extend(r.assertions);
    }
    Ok(report)
}

fn byte_lemmas(ring: &Ring, c: &[Elem], bytes: &[Vec<Elem>]) -> Result<VerificationReport> {
    let b = c.len();
    let ell = ring.size() as i64;
    let m = ring.char_order();
    let label = format!("c={:?}", c.iter().map(|&e| ring.format_element(e)).collect::<Vec<_>>());
    let mut report = VerificationReport::new("lemmas", label.clone());

    // character sums grouped by the exact support of v
    let mut by_mask = vec![CyclotomicSum::zero(m); 1 << b];
    for v in bytes {
        by_mask[support_mask(v)].accumulate(ring.char_exponent(ring.dot(c, v)), 1);
    }
    let supp = support_mask(c);
    let j = supp.count_ones() as usize;

    for sub in 1..(1usize << b) {
        if sub & !supp != 0 {
            continue;
        }
        let p = sub.count_ones() as usize;
        let exact = &by_mask[sub];
        let expected = signed_pow(-1, p);
        report.check(format!("{label} exact_support I={sub:#b}"), exact.as_integer() == Some(expected), || {
            json!({"expected": expected, "actual": value(exact)})
        });
        let mut within = CyclotomicSum::zero(m);
        for (mask, s) in by_mask.iter().enumerate() {
            if mask & !sub == 0 {
                within.add_assign(s);
            }
        }
        report.check(format!("{label} support_within I={sub:#b}"), within.is_zero(), || {
            json!({"expected": 0, "actual": value(&within)})
        });
    }

    // grouped by (|supp v inside supp c|, |supp v outside supp c|)
    let mut grouped = vec![vec![CyclotomicSum::zero(m); b - j + 1]; j + 1];
    for (mask, s) in by_mask.iter().enumerate() {
        let j1 = (mask & supp).count_ones() as usize;
        let j2 = (mask & !supp).count_ones() as usize;
        grouped[j1][j2].add_assign(s);
    }
    for (j1, row) in grouped.iter().enumerate() {
        for (j2, s) in row.iter().enumerate() {
            let expected = signed_pow(-1, j1) * signed_pow(ell - 1, j2) * binom(j, j1) * binom(b - j, j2);
            report.check(format!("{label} split_sum j1={j1} j2={j2}"), s.as_integer() == Some(expected), || {
                json!({"expected": expected, "actual": value(s)})
            });
        }
    }
    if j > 0 {
        for (p, row) in grouped.iter().enumerate() {
            let expected = signed_pow(-1, p) * binom(j, p);
            report.check(
                format!("{label} inside_sum p={p}"),
                row[0].as_integer() == Some(expected),
                || json!({"expected": expected, "actual": value(&row[0])}),
            );
            if p <= b - j {
                let expected = signed_pow(ell - 1, p) * binom(b - j, p);
                report.check(
                    format!("{label} outside_sum p={p}"),
                    grouped[0][p].as_integer() == Some(expected),
                    || json!({"expected": expected, "actual": value(&grouped[0][p])}),
                );
            }
        }
    }

    // full byte sum against theta_j for every t
    for t in 1..=b {
        let q = SpottyParams::new(b, t)?;
        let mut coeffs = vec![CyclotomicSum::zero(m); q.max_spots() + 1];
        for (mask, s) in by_mask.iter().enumerate() {
            coeffs[q.spots(mask.count_ones() as usize)].add_assign(s);
        }
        let closed = kernels::theta_poly(j, ring.size(), &q)?;
        let ok = coeffs.iter().enumerate().all(|(e, s)| {
            s.as_integer().map(BigInt::from) == Some(closed.coeff(&crate::poly::Monomial::var(Var::Z, e as u32)))
        });
        report.check(format!("{label} byte_sum t={t}"), ok, || {
            json!({"expected": closed.to_string(), "actual": coeffs.iter().map(value).collect::<Vec<_>>()})
        });
    }
    Ok(report)
}

/// ceil((a + b)/t) = floor(a/t) + floor(b/t) + {0, 1, 2} for all
/// 0 <= a, b < 8t and 1 <= t <= `t_max`.
pub fn check_floor_decomposition(t_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("lemmas", format!("floor decomposition t<={t_max}"));
    for t in 1..=t_max {
        let mut bad = None;
        for a in 0..8 * t {
            for b in 0..8 * t {
                let (ra, rb) = (a % t, b % t);
                let offset = split_ceil(a, b, t) - a / t - b / t;
                let case = if ra + rb == 0 {
                    0
                } else if ra + rb <= t {
                    1
                } else {
                    2
                };
                let in_range = ra + rb <= 2 * t.max(1) - 2 || t == 1;
                if split_ceil(a, b, t) != (a + b).div_ceil(t) || offset != case || !in_range {
                    bad.get_or_insert((a, b));
                }
            }
        }
        report.check(format!("t={t}"), bad.is_none(), || json!({"a_b": bad}));
    }
    report
}

/// J + L = w_M(v) and K + L = w_M(u) for every byte pair over `ring`.
pub fn check_jkl_sums(ring: &Ring, b_max: usize, budget: u128) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemmas", format!("J/K/L sums {} b<={b_max}", ring.spec()));
    for b in 1..=b_max {
        vector_budget(ring, 2 * b, budget, "J/K/L byte pairs")?;
        let bytes: Vec<Vec<Elem>> = all_vectors(ring, b).collect();
        for t in 1..=b {
            let q = SpottyParams::new(b, t)?;
            let mut bad = None;
            for u in &bytes {
                let wu = m_spotty_hamming_weight(u, &q)?;
                for v in &bytes {
                    let (j, k, l) = jkl(u, v, &q)?;
                    if j + l != m_spotty_hamming_weight(v, &q)? || k + l != wu {
                        bad.get_or_insert((u.clone(), v.clone()));
                    }
                }
            }
            report.check(format!("b={b} t={t}"), bad.is_none(), || json!({"pair": format!("{bad:?}")}));
        }
    }
    Ok(report)
}

/// The four evaluation properties of the joint enumerator of (C, D).
pub fn check_joint_properties(c: &LinearCode, d: &LinearCode, params: &SpottyParams, budget: u128) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("joint_properties", format!("|C|={} |D|={}", c.size(), d.size()));
    let j = joint_enumerator(c, d, params, budget)?;
    let ones = j.substitute([(Var::X, 1i64), (Var::Y, 1), (Var::Z, 1)]);
    report.check_eq("value_at_ones", &MultiPoly::constant(c.size() as i64 * d.size() as i64), &ones);
    let swapped = joint_enumerator(d, c, params, budget)?;
    let j_swap = j.substitute([(Var::X, Var::Y), (Var::Y, Var::X)]);
    report.check_eq("argument_swap", &j_swap, &swapped);
    let wc = hamming_enumerator(c, params)?;
    let from_j = j.substitute([(Var::X, 1i64)]).substitute([(Var::Y, Var::Z)]);
    report.check_eq("first_code_enumerator", &wc.scale(&BigInt::from(d.size())), &from_j);
    let wd = hamming_enumerator(d, params)?;
    let from_j = j.substitute([(Var::Y, 1i64)]).substitute([(Var::X, Var::Z)]);
    report.check_eq("second_code_enumerator", &wd.scale(&BigInt::from(c.size())), &from_j);
    Ok(report)
}

/// Lee kernels against the direct character sum for every byte of R^b
/// (or every `stride`-th one), for each t.
pub fn check_lee_kernel(ring: &Ring, b: usize, stride: usize, cache: &KernelCache, budget: u128) -> Result<VerificationReport> {
    vector_budget(ring, b, budget, "Lee kernel byte sums")?;
    let mut report = VerificationReport::new("lee_kernel", format!("{} b={b}", ring.spec()));
    let lee = ring.lee_table().ok_or_else(|| {
        crate::error::Error::unsupported(format!("Lee kernels over {}", ring.spec()))
    })?;
    let max_w = *lee.iter().max().unwrap() as usize * b;
    let bytes: Vec<Vec<Elem>> = all_vectors(ring, b).collect();
    let m = ring.char_order();
    let chosen: Vec<&Vec<Elem>> = bytes.iter().step_by(stride.max(1)).collect();
    // per u, the character sum grouped by total Lee weight of v
    let by_weight: Vec<Vec<CyclotomicSum>> = chosen
        .par_iter()
        .map(|u| {
            let mut acc = vec![CyclotomicSum::zero(m); max_w + 1];
            for v in &bytes {
                let w: u32 = v.iter().map(|e| lee[e.index()]).sum();
                acc[w as usize].accumulate(ring.char_exponent(ring.dot(u, v)), 1);
            }
            acc
        })
        .collect();
    for t in 1..=b {
        let q = SpottyParams::new(b, t)?;
        let mut failures = Vec::new();
        for (u, sums) in chosen.iter().zip(&by_weight) {
            let mut coeffs = vec![CyclotomicSum::zero(m); q.spots(max_w) + 1];
            for (w, s) in sums.iter().enumerate() {
                coeffs[q.spots(w)].add_assign(s);
            }
            let direct: Option<Vec<i64>> = coeffs.iter().map(|s| s.as_integer()).collect();
            let kernel = cache.lee(&byte_composition(u), ring, &q)?;
            let ok = direct.as_ref().is_some_and(|d| MultiPoly::univariate(Var::Z, d) == *kernel);
            if !ok && failures.len() < 3 {
                failures.push(json!({
                    "byte": u.iter().map(|&e| ring.format_element(e)).collect::<Vec<_>>(),
                    "kernel": kernel.to_string(),
                    "direct": format!("{direct:?}"),
                }));
            }
        }
        let count = chosen.len();
        report.check(format!("t={t} bytes={count}"), failures.is_empty(), || json!(failures));
    }
    Ok(report)
}

/// |C| |C-perp| = l^N and (C-perp)-perp = C.
pub fn check_duality(code: &LinearCode, budget: u128) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("duality", format!("{} |C|={}", code.ring().spec(), code.size()));
    let dual = code.dual_brute(budget)?;
    let product = code.size() as u128 * dual.size() as u128;
    report.check("cardinality_product", product == code.ambient_size(), || {
        json!({"expected": code.ambient_size().to_string(), "actual": product.to_string()})
    });
    let back = dual.dual_brute(budget)?;
    report.check("double_dual", back.codewords() == code.codewords(), || {
        json!({"expected_size": code.size(), "actual_size": back.size()})
    });
    Ok(report)
}

/// The transform kernels against their brute-force byte sums, for every
/// weight/overlap pattern realised by bytes of the given ring.
pub fn check_kernel_oracles(ring: &Ring, b: usize, cache: &KernelCache, budget: u128) -> Result<VerificationReport> {
    vector_budget(ring, 2 * b, budget, "kernel oracle byte pairs")?;
    let mut report = VerificationReport::new("kernel_oracles", format!("{} b={b}", ring.spec()));
    let ell = ring.size();
    // representative bytes: a nonzero symbol (the last element) on a support
    let unit = Elem(ell - 1);
    let rep = |mask: usize| -> Vec<Elem> {
        (0..b).map(|i| if mask >> i & 1 == 1 { unit } else { Elem::ZERO }).collect()
    };
    for t in 1..=b {
        let q = SpottyParams::new(b, t)?;
        let mut seen = HashSet::new();
        for mc in 0..(1usize << b) {
            for mv in 0..(1usize << b) {
                let key = (mc.count_ones(), mv.count_ones(), (mc & mv).count_ones());
                if !seen.insert(key) {
                    continue;
                }
                let (nu, mu, delta) = (key.0 as usize, key.1 as usize, key.2 as usize);
                let (c, v) = (rep(mc), rep(mv));
                let g = cache.g(nu, mu, delta, ell, &q)?;
                let direct = g_oracle(ring, &c, &v, &q)?;
                report.check_eq(format!("G nu={nu} mu={mu} delta={delta} t={t}"), &direct, &*g);
                let h = cache.h(nu, mu, delta, ell, &q)?.substitute([(Var::X, Var::Y), (Var::Y, Var::X)]);
                let direct = h_oracle(ring, &c, &v, &q)?;
                report.check_eq(format!("H mu={nu} nu={mu} delta={delta} t={t}"), &direct, &h);
            }
        }
    }
    Ok(report)
}

/// Every kernel evaluated at all-ones is l^b (or l^(2b)) on the zero
/// pattern and 0 otherwise, for b <= `b_max` and each ring size given.
pub fn check_kernel_vanishing(b_max: usize, rings: &[RingSpec], cache: &KernelCache) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("kernel_vanishing", format!("b<={b_max}"));
    let at_ones = |p: &MultiPoly| {
        p.substitute([(Var::X, 1i64), (Var::Y, 1), (Var::Z, 1)])
    };
    for &spec in rings {
        let ring = Ring::new(spec)?;
        let ell = ring.size();
        let lb = |e: usize| MultiPoly::constant(num_traits::pow(BigInt::from(ell), e));
        let expect = |zero: bool, e: usize| if zero { lb(e) } else { MultiPoly::zero() };
        for b in 1..=b_max {
            for t in 1..=b {
                let q = SpottyParams::new(b, t)?;
                let tag = format!("{spec} b={b} t={t}");
                for j in 0..=b {
                    report.check_eq(format!("theta j={j} {tag}"), &expect(j == 0, b), &at_ones(&*cache.theta(j, ell, &q)?));
                    report.check_eq(format!("split j={j} {tag}"), &expect(j == 0, b), &at_ones(&*cache.split(j, ell, &q)?));
                }
                for nu in 0..=b {
                    for mu in 0..=b {
                        for delta in (nu + mu).saturating_sub(b)..=nu.min(mu) {
                            report.check_eq(
                                format!("G nu={nu} mu={mu} delta={delta} {tag}"),
                                &expect(nu == 0, b),
                                &at_ones(&*cache.g(nu, mu, delta, ell, &q)?),
                            );
                            report.check_eq(
                                format!("H mu={nu} nu={mu} delta={delta} {tag}"),
                                &expect(nu == 0 && mu == 0, 2 * b),
                                &at_ones(&*cache.h(nu, mu, delta, ell, &q)?),
                            );
                        }
                    }
                }
                if ring.is_rk() {
                    let mut bad = Vec::new();
                    let mut count = 0;
                    for comp in multisets(ell, b) {
                        count += 1;
                        let zero = comp == [(0, b as u32)];
                        let v = at_ones(&*cache.lee(&comp, &ring, &q)?);
                        if v != expect(zero, b) && bad.len() < 3 {
                            bad.push(json!({"composition": comp, "value": v.to_string()}));
                        }
                    }
                    report.check(format!("lee compositions={count} {tag}"), bad.is_empty(), || json!(bad));
                }
            }
        }
    }
    Ok(report)
}

/// All byte compositions of size `b` over `ell` elements.
fn multisets(ell: u32, b: usize) -> Vec<Vec<(u32, u32)>> {
    fn go(start: u32, ell: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<(u32, u32)>>) {
        if left == 0 {
            out.push(byte_composition(&cur.iter().map(|&e| Elem(e)).collect::<Vec<_>>()));
            return;
        }
        for e in start..ell {
            cur.push(e);
            go(e, ell, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, ell, b, &mut Vec::new(), &mut out);
    out
}
