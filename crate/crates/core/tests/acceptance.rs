//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line
//! (run with `--nocapture` to see them) and asserts its runtime bound.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use spotty::code::{joint_statistics, AlphaDistribution, JointKey, LinearCode, DEFAULT_BUDGET};
use spotty::enumerators::kernels::{g_kernel, lee_kernel, split_kernel, theta_poly};
use spotty::enumerators::{
    hamming_enumerator, joint_macwilliams, lee_macwilliams, macwilliams_hamming, split_macwilliams,
    JointVariant, KernelCache,
};
use spotty::poly::{Monomial, MultiPoly, Var};
use spotty::ring::{Ring, RingSpec};
use spotty::verify::{identity_sweep, lemma_suite, IdentityKind, SUITE_RINGS};
use spotty::weights::SpottyParams;

fn criterion(n: u32, title: &str, limit: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    let ok = outcome.is_ok() && elapsed < limit;
    eprintln!(
        "criterion {n}: {} {title} ({:.2?}, limit {:?})",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        limit
    );
    if let Err(panic) = outcome {
        resume_unwind(panic);
    }
    assert!(elapsed < limit, "criterion {n} took {elapsed:?}, limit {limit:?}");
}

fn p(text: &str) -> MultiPoly {
    text.parse().unwrap_or_else(|e| panic!("bad literal {text:?}: {e}"))
}

fn r2() -> Arc<Ring> {
    Arc::new(Ring::new(RingSpec::Rk(2)).unwrap())
}

fn b3t2() -> SpottyParams {
    SpottyParams::new(3, 2).unwrap()
}

fn code(ring: &Arc<Ring>, b: usize, n: usize, gens: &[&[&str]]) -> LinearCode {
    let rows = gens
        .iter()
        .map(|g| g.iter().map(|s| ring.parse_element(s).unwrap()).collect())
        .collect();
    LinearCode::span(ring.clone(), b, n, rows, DEFAULT_BUDGET).unwrap()
}

/// Two bytes of length 3 over R_2; 256 codewords.
fn byte_code(ring: &Arc<Ring>) -> LinearCode {
    code(
        ring,
        3,
        2,
        &[
            &["1", "0", "0", "u", "v", "1+u"],
            &["0", "u", "0", "u+v", "uv", "u"],
            &["uv", "0", "uv", "uv", "0", "uv"],
        ],
    )
}

/// Three bytes of length 3 over R_2; 32 codewords.
fn pair_c(ring: &Arc<Ring>) -> LinearCode {
    code(
        ring,
        3,
        3,
        &[
            &["1", "0", "0", "u", "v", "1", "0", "0", "u"],
            &["0", "0", "uv", "uv", "0", "0", "0", "uv", "uv"],
        ],
    )
}

/// One codeword with byte weights (2, 1, 1); 2 codewords.
fn pair_d(ring: &Arc<Ring>) -> LinearCode {
    code(ring, 3, 3, &[&["uv", "0", "uv", "0", "uv", "0", "0", "0", "uv"]])
}

const DUAL_W: &str = "1 + 60 z + 4014 z^2 + 21932 z^3 + 39529 z^4";

const JOINT_DUAL_C: &str = "171174300 x^3 y^5 + 79546455 x^3 y^4 + 9241586 x^3 y^3 + 84136 x^3 y^2 \
    + 370 x^3 y + x^3 + 1206082125 x^2 y^5 z + 589195350 x^2 y^4 z + 88403600 x^2 y^3 z \
    + 3748010 x^2 y^2 z + 7715 x^2 y z + 1206082125 y^6 + 760369650 y^5 + 167950055 y^4 \
    + 12989596 y^3 + 91851 y^2 + 370 y + 1";

const LEE_DUAL: &str = "101 z^18 + 5326 z^17 + 122705 z^16 + 1641752 z^15 + 13077404 z^14 \
    + 63554224 z^13 + 196381596 z^12 + 398386136 z^11 + 538692126 z^10 + 487268316 z^9 \
    + 294389014 z^8 + 117912840 z^7 + 30602524 z^6 + 4946304 z^5 + 475132 z^4 + 26888 z^3 \
    + 1221 z^2 + 38 z + 1";

const SPLIT_PRINTED: &str = "2 x1^2 x2^2 x3^2 + 392 x1^2 x2^2 x3 y3 + 630 x1^2 x2^2 y3^2 \
    + 94 x1^2 x2 y2 x3^2 + 46208 x1^2 x2 y2 x3 y3 + 187170 x1^2 x2 y2 y3^2 + 160 x1^2 y2^2 x3^2 \
    + 137720 x1^2 y2^2 x3 y3 + 676200 x1^2 y2^2 y3^2 + 254 x1 y1 x2^2 x3^2 + 99328 x1 y1 x2^2 x3 y3 \
    + 256770 x1 y1 x2^2 y3^2 + 37376 x1 y1 x2 y2 x3^2 + 25019392 x1 y1 x2 y2 x3 y3 \
    + 118663680 x1 y1 x2 y2 y3^2 + 146690 x1 y1 y2^2 x3^2 + 107591680 x1 y1 y2^2 x3 y3 \
    + 503159550 x1 y1 y2^2 y3^2 + 84600 y1^2 x2^2 x3 y3 + 606600 y1^2 x2^2 y3^2 \
    + 146850 y1^2 x2 y2 x3^2 + 107644800 y1^2 x2 y2 x3 y3 + 503229150 y1^2 x2 y2 y3^2 \
    + 717150 y1^2 y2^2 x3^2 + 514350600 y1^2 y2^2 x3 y3 + 2412164250 y1^2 y2^2 y3^2";

fn at_ones(poly: &MultiPoly) -> BigInt {
    poly.sum_of_coefficients()
}

#[test]
fn criterion_1_kernel_tables() {
    criterion(1, "kernel tables", Duration::from_secs(1), || {
        let q = b3t2();
        let thetas = ["1 + 720 z + 3375 z^2", "1 + 224 z - 225 z^2", "1 - 16 z + 15 z^2", "1 - z^2"];
        for (j, expected) in thetas.iter().enumerate() {
            assert_eq!(theta_poly(j, 16, &q).unwrap(), p(expected), "theta_{j}");
        }
        let splits = [
            "x^2 + 720 x y + 3375 y^2",
            "x^2 + 224 x y - 225 y^2",
            "x^2 - 16 x y + 15 y^2",
            "x^2 - y^2",
        ];
        for (j, expected) in splits.iter().enumerate() {
            assert_eq!(split_kernel(j, 16, &q).unwrap(), p(expected), "split g_{j}");
        }
        // (nu, mu, delta) -> printed G
        let gs: [((usize, usize, usize), &str); 13] = [
            ((0, 0, 0), "1 + 720 y + 3375 y^2"),
            ((0, 1, 0), "x + 720 x y + 3375 x y^2"),
            ((0, 2, 0), "x + 495 x y + 225 z + 3375 y z"),
            ((1, 0, 0), "1 + 224 y - 225 y^2"),
            ((1, 1, 0), "x + 224 x y - 225 x y^2"),
            ((1, 1, 1), "x + 224 x y - 225 x y^2"),
            ((1, 2, 1), "x + 239 x y - 225 y z - 15 z"),
            ((2, 0, 0), "1 - 16 y + 15 y^2"),
            ((2, 1, 0), "x - 16 x y + 15 x y^2"),
            ((2, 1, 1), "x - 16 x y + 15 x y^2"),
            ((2, 2, 2), "x + z + 15 y z - 17 x y"),
            ((3, 0, 0), "1 - y^2"),
            ((3, 1, 1), "x - x y^2"),
        ];
        for ((nu, mu, delta), expected) in gs {
            assert_eq!(g_kernel(nu, mu, delta, 16, &q).unwrap(), p(expected), "G_{nu},{mu}^({delta})");
        }
        let ring = r2();
        // byte compositions as (element index, count); index 8 is uv
        let lees = [
            ("a", vec![(0, 3)], "1 + 78 z + 715 z^2 + 1716 z^3 + 1287 z^4 + 286 z^5 + 13 z^6"),
            ("b", vec![(0, 2), (8, 1)], "1 + 6 z - 29 z^2 + 36 z^3 - 9 z^4 - 10 z^5 + 5 z^6"),
            ("c", vec![(0, 1), (8, 2)], "1 - 2 z - 5 z^2 + 20 z^3 - 25 z^4 + 14 z^5 - 3 z^6"),
            ("d", vec![(0, 2), (2, 1)], "1 + 34 z + 55 z^2 - 132 z^3 - 33 z^4 + 66 z^5 + 9 z^6"),
            ("e", vec![(0, 1), (6, 1), (8, 1)], "1 - 6 z + 15 z^2 - 20 z^3 + 15 z^4 - 6 z^5 + z^6"),
            ("f", vec![(0, 2), (1, 1)], "1 + 54 z + 275 z^2 + 132 z^3 - 297 z^4 - 154 z^5 - 11 z^6"),
        ];
        for (name, comp, expected) in &lees {
            assert_eq!(lee_kernel(comp, &ring, &q).unwrap(), p(expected), "Lee footer {name}");
        }
        // the byte (0, 0, uv) twice and the byte (0, uv, uv)
        let j1 = lee_kernel(&vec![(0, 2), (8, 1)], &ring, &q).unwrap();
        let j3 = lee_kernel(&vec![(0, 1), (8, 2)], &ring, &q).unwrap();
        assert_eq!(j1, p(lees[1].2));
        assert_eq!(j3, p(lees[2].2));
        let product = j1.mul(&j1).mul(&j3);
        let printed = "1 + 10 z - 51 z^2 - 272 z^3 + 2132 z^4 - 4072 z^5 - 4940 z^6 + 39312 z^7 \
            - 88946 z^8 + 110396 z^9 - 74074 z^10 + 9360 z^11 + 28964 z^12 - 25832 z^13 + 7972 z^14 \
            + 1520 z^15 - 2055 z^16 + 650 z^17 - 75 z^18";
        assert_eq!(product, p(printed));
    });
}

#[test]
fn criterion_2_hamming_end_to_end() {
    criterion(2, "byte code over R2: alpha table, transform and brute-force dual", Duration::from_secs(60), || {
        let ring = r2();
        let q = b3t2();
        let c = byte_code(&ring);
        assert_eq!(c.size(), 256);
        let table: [([u32; 4], u64); 10] = [
            ([2, 0, 0, 0], 1),
            ([0, 2, 0, 0], 5),
            ([0, 0, 2, 0], 26),
            ([0, 0, 0, 2], 64),
            ([1, 1, 0, 0], 2),
            ([1, 0, 1, 0], 1),
            ([1, 0, 0, 1], 1),
            ([0, 1, 1, 0], 19),
            ([0, 1, 0, 1], 31),
            ([0, 0, 1, 1], 106),
        ];
        let expected: AlphaDistribution = table.iter().map(|(a, n)| (a.to_vec(), *n)).collect();
        assert_eq!(c.alpha_distribution(), expected);

        let w = hamming_enumerator(&c, &q).unwrap();
        assert_eq!(w, p("1 + 3 z + 51 z^2 + 137 z^3 + 64 z^4"));
        assert_eq!(at_ones(&w), BigInt::from(256));

        let cache = KernelCache::new();
        let transform = macwilliams_hamming(&cache, &c.alpha_distribution(), c.size(), 16, &q).unwrap();
        assert_eq!(transform, p(DUAL_W));
        let dual = c.dual_brute(DEFAULT_BUDGET).unwrap();
        assert_eq!(dual.size(), 65536);
        assert_eq!(hamming_enumerator(&dual, &q).unwrap(), p(DUAL_W));
    });
}

#[test]
fn criterion_3_joint_end_to_end() {
    criterion(3, "R2 code pair: joint statistics and dual-C joint transform", Duration::from_secs(60), || {
        let ring = r2();
        let q = b3t2();
        let (c, d) = (pair_c(&ring), pair_d(&ring));
        assert_eq!((c.size(), d.size()), (32, 2));
        let rows: [(_, _, _, u64); 20] = [
            // (j, k, delta, count)
            ([0, 0, 0], [0, 0, 0], [0, 0, 0], 1),
            ([0, 0, 0], [2, 1, 1], [0, 0, 0], 1),
            ([1, 1, 0], [0, 0, 0], [0, 0, 0], 1),
            ([1, 1, 0], [2, 1, 1], [1, 0, 0], 1),
            ([1, 1, 2], [0, 0, 0], [0, 0, 0], 1),
            ([1, 1, 2], [2, 1, 1], [1, 0, 1], 1),
            ([1, 2, 0], [0, 0, 0], [0, 0, 0], 2),
            ([1, 2, 0], [2, 1, 1], [1, 1, 0], 2),
            ([1, 2, 1], [0, 0, 0], [0, 0, 0], 2),
            ([1, 2, 1], [2, 1, 1], [1, 0, 1], 2),
            ([1, 3, 1], [0, 0, 0], [0, 0, 0], 10),
            ([1, 3, 1], [2, 1, 1], [1, 1, 1], 10),
            ([2, 1, 1], [0, 0, 0], [0, 0, 0], 2),
            ([2, 1, 1], [2, 1, 1], [2, 0, 0], 2),
            ([2, 2, 1], [0, 0, 0], [0, 0, 0], 2),
            ([2, 2, 1], [2, 1, 1], [2, 1, 0], 2),
            ([2, 2, 2], [0, 0, 0], [0, 0, 0], 1),
            ([2, 2, 2], [2, 1, 1], [2, 0, 1], 1),
            ([2, 3, 2], [0, 0, 0], [0, 0, 0], 10),
            ([2, 3, 2], [2, 1, 1], [2, 1, 1], 10),
        ];
        let expected: BTreeMap<JointKey, u64> = rows
            .iter()
            .map(|(j, k, delta, n)| {
                let key = JointKey { j: j.to_vec(), k: k.to_vec(), delta: delta.to_vec() };
                (key, *n)
            })
            .collect();
        let stats = joint_statistics(&c, &d, DEFAULT_BUDGET).unwrap();
        assert_eq!(stats, expected);

        let cache = KernelCache::new();
        let joint = joint_macwilliams(&cache, JointVariant::DualC, &stats, 32, 2, 16, &q).unwrap();
        assert_eq!(joint, p(JOINT_DUAL_C));
        assert_eq!(joint.len(), 18);
        assert_eq!(at_ones(&joint), BigInt::from(4294967296u64));
    });
}

#[test]
fn criterion_4_lee_end_to_end() {
    criterion(4, "R2 code: Lee transform of the dual", Duration::from_secs(30), || {
        let ring = r2();
        let q = b3t2();
        let c = pair_c(&ring);
        let cache = KernelCache::new();
        let dist = c.composition_distribution().unwrap();
        let lee = lee_macwilliams(&cache, &dist, c.size(), &ring, &q).unwrap();
        assert_eq!(lee, p(LEE_DUAL));
        assert_eq!(lee.len(), 19);
        assert_eq!(at_ones(&lee), BigInt::from(2147483648u64));
    });
}

#[test]
fn criterion_5_split_end_to_end() {
    criterion(5, "R2 code: split transform of the dual", Duration::from_secs(60), || {
        let ring = r2();
        let q = b3t2();
        let c = pair_c(&ring);
        let cache = KernelCache::new();
        let split = split_macwilliams(&cache, &c.profile_distribution(), c.size(), 16, &q).unwrap();

        // (a) value at all-ones
        assert_eq!(at_ones(&split), BigInt::from(1u64 << 31));
        // (b) all-x monomial: the zero codeword alone
        let all_x = Monomial::new((1..=3).map(|i| (Var::xi(i), 2)).collect());
        assert_eq!(split.coeff(&all_x), BigInt::from(1));
        // (c) x_i = 1, y_i = z gives the Hamming transform of the same code
        let w = split
            .substitute((1..=3).map(|i| (Var::xi(i), 1i64)))
            .substitute((1..=3).map(|i| (Var::yi(i), Var::Z)));
        let hamming = macwilliams_hamming(&cache, &c.alpha_distribution(), c.size(), 16, &q).unwrap();
        assert_eq!(w, hamming);
        // (d) the printed polynomial halved termwise
        let halved = p(SPLIT_PRINTED).div_exact(&BigInt::from(2)).unwrap();
        assert_eq!(split, halved);
    });
}

#[test]
fn criterion_6_oracle_sweep() {
    criterion(6, "randomized transform-versus-brute-force sweep", Duration::from_secs(600), || {
        let cache = KernelCache::new();
        let reports = identity_sweep(0, 256, &cache, DEFAULT_BUDGET).unwrap();
        assert!(reports.len() >= 200);
        let failures: Vec<String> = reports
            .iter()
            .flat_map(|r| r.failures().map(move |a| format!("{}: {}", r.instance, a.check)))
            .collect();
        assert!(failures.is_empty(), "{} failures, first: {:?}", failures.len(), failures.first());
        let kinds: BTreeSet<&str> = reports
            .iter()
            .flat_map(|r| r.assertions.iter().map(|a| a.check.as_str()))
            .collect();
        for kind in IdentityKind::ALL {
            assert!(kinds.contains(kind.name()), "no {} assertion in the sweep", kind.name());
        }
        let rings: BTreeSet<String> = reports
            .iter()
            .map(|r| r.instance.split(' ').next().unwrap().to_string())
            .collect();
        assert_eq!(rings.len(), SUITE_RINGS.len(), "rings covered: {rings:?}");
    });
}

#[test]
fn criterion_7_lemma_suite() {
    criterion(7, "character-sum lemmas, weight identities, joint properties, duality", Duration::from_secs(120), || {
        let cache = KernelCache::new();
        let reports = lemma_suite(0, &cache, DEFAULT_BUDGET).unwrap();
        for r in &reports {
            assert!(r.passed(), "{}", r.to_json_lines().lines().find(|l| l.contains("\"passed\":false")).unwrap_or(""));
        }
        let has = |suite: &str, instance: &str| reports.iter().any(|r| r.suite == suite && r.instance.starts_with(instance));
        for spec in SUITE_RINGS {
            assert!(has("lemmas", &format!("{spec} b=")), "character lemmas over {spec}");
        }
        assert!(has("lemmas", "R2 b=3"));
        assert!(has("lemmas", "floor decomposition t<=8"));
        assert!(has("lemmas", "J/K/L sums R1 b<=3"));
        for b in 1..=3 {
            assert!(has("lee_kernel", &format!("R2 b={b}")));
        }
        assert!(reports.iter().any(|r| r.suite == "joint_properties"));
        assert!(reports.iter().filter(|r| r.suite == "duality").count() > 1);
    });
}

#[test]
fn criterion_8_kernel_vanishing() {
    criterion(8, "kernel vanishing for b <= 4 over rings of size 4 and 16", Duration::from_secs(60), || {
        let cache = KernelCache::new();
        let report =
            spotty::verify::check_kernel_vanishing(4, &[RingSpec::Rk(1), RingSpec::Rk(2)], &cache).unwrap();
        assert!(report.passed(), "{}", report.to_json_lines());
        assert!(report.len() > 1000);
    });
}
