//! Transform-versus-brute-force identity checks on concrete code pairs.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use serde_json::json;

use super::VerificationReport;
use crate::code::{joint_statistics, LinearCode};
use crate::enumerators::{
    hamming_enumerator, joint_enumerator, joint_macwilliams, lee_enumerator, lee_macwilliams,
    macwilliams_hamming, split_enumerator, split_macwilliams, JointVariant, KernelCache,
};
use crate::error::Result;
use crate::poly::MultiPoly;
use crate::ring::{Elem, Ring, RingSpec};
use crate::weights::SpottyParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    Hamming,
    JointI,
    JointII,
    JointIII,
    Split,
    Lee,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 6] = [
        IdentityKind::Hamming,
        IdentityKind::JointI,
        IdentityKind::JointII,
        IdentityKind::JointIII,
        IdentityKind::Split,
        IdentityKind::Lee,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Hamming => "hamming",
            IdentityKind::JointI => "joint_i",
            IdentityKind::JointII => "joint_ii",
            IdentityKind::JointIII => "joint_iii",
            IdentityKind::Split => "split",
            IdentityKind::Lee => "lee",
        }
    }
}

/// A reproducible code pair: C and D share ring and geometry. Generators
/// are element indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub ring: RingSpec,
    pub b: usize,
    pub n: usize,
    pub t: usize,
    pub c_generators: Vec<Vec<u32>>,
    pub d_generators: Vec<Vec<u32>>,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} b={} n={} t={} C={:?} D={:?}",
            self.ring, self.b, self.n, self.t, self.c_generators, self.d_generators
        )
    }
}

fn to_elems(gens: &[Vec<u32>]) -> Vec<Vec<Elem>> {
    gens.iter().map(|g| g.iter().map(|&i| Elem(i)).collect()).collect()
}

struct Prepared {
    ring: Arc<Ring>,
    params: SpottyParams,
    c: LinearCode,
    d: LinearCode,
    c_dual: LinearCode,
    d_dual: LinearCode,
}

impl Prepared {
    fn new(inst: &Instance, budget: u128) -> Result<Prepared> {
        let ring = Arc::new(Ring::new(inst.ring)?);
        let params = SpottyParams::new(inst.b, inst.t)?;
        let c = LinearCode::span(ring.clone(), inst.b, inst.n, to_elems(&inst.c_generators), budget)?;
        let d = LinearCode::span(ring.clone(), inst.b, inst.n, to_elems(&inst.d_generators), budget)?;
        let c_dual = c.dual_brute(budget)?;
        let d_dual = d.dual_brute(budget)?;
        Ok(Prepared { ring, params, c, d, c_dual, d_dual })
    }

    /// (transform, oracle) for one identity. Transform failures are kept
    /// as values so that they show up as failed assertions.
    fn sides(
        &self,
        kind: IdentityKind,
        cache: &KernelCache,
        budget: u128,
    ) -> Result<Option<(Result<MultiPoly>, MultiPoly)>> {
        let ell = self.ring.size();
        let q = &self.params;
        let (c, d) = (&self.c, &self.d);
        let joint = |variant| -> Result<MultiPoly> {
            let stats = joint_statistics(c, d, budget)?;
            joint_macwilliams(cache, variant, &stats, c.size(), d.size(), ell, q)
        };
        Ok(Some(match kind {
            IdentityKind::Hamming => (
                macwilliams_hamming(cache, &c.alpha_distribution(), c.size(), ell, q),
                hamming_enumerator(&self.c_dual, q)?,
            ),
            IdentityKind::Split => (
                split_macwilliams(cache, &c.profile_distribution(), c.size(), ell, q),
                split_enumerator(&self.c_dual, q)?,
            ),
            IdentityKind::Lee => {
                if !self.ring.is_rk() {
                    return Ok(None);
                }
                (
                    c.composition_distribution()
                        .and_then(|dist| lee_macwilliams(cache, &dist, c.size(), &self.ring, q)),
                    lee_enumerator(&self.c_dual, q)?,
                )
            }
            IdentityKind::JointI => (
                joint(JointVariant::DualC),
                joint_enumerator(&self.c_dual, d, q, budget)?,
            ),
            IdentityKind::JointII => (
                joint(JointVariant::DualD),
                joint_enumerator(c, &self.d_dual, q, budget)?,
            ),
            IdentityKind::JointIII => (
                joint(JointVariant::DualBoth),
                joint_enumerator(&self.c_dual, &self.d_dual, q, budget)?,
            ),
        }))
    }
}

fn record(
    report: &mut VerificationReport,
    inst: &Instance,
    kind: IdentityKind,
    transform: Result<MultiPoly>,
    oracle: MultiPoly,
) -> bool {
    let passed = matches!(&transform, Ok(p) if *p == oracle);
    report.check(kind.name(), passed, || {
        json!({
            "instance": inst,
            "kind": kind.name(),
            "expected": oracle.to_string(),
            "actual": match &transform {
                Ok(p) => p.to_string(),
                Err(e) => format!("error: {e}"),
            },
        })
    });
    passed
}

/// Checks one identity kind on an instance. Kinds that do not apply (Lee
/// over a non-R_k ring) record nothing.
pub fn check_identity(
    kind: IdentityKind,
    inst: &Instance,
    cache: &KernelCache,
    budget: u128,
) -> Result<VerificationReport> {
    let prepared = Prepared::new(inst, budget)?;
    let mut report = VerificationReport::new("identities", inst.to_string());
    if let Some((transform, oracle)) = prepared.sides(kind, cache, budget)? {
        if !record(&mut report, inst, kind, transform, oracle) {
            attach_minimized(&mut report, kind, inst, cache, budget);
        }
    }
    Ok(report)
}

/// Every applicable identity on one instance, plus duality and the joint
/// enumerator properties of the pair.
pub fn check_instance(inst: &Instance, cache: &KernelCache, budget: u128) -> Result<VerificationReport> {
    let prepared = Prepared::new(inst, budget)?;
    let mut report = VerificationReport::new("identities", inst.to_string());
    for kind in IdentityKind::ALL {
        if let Some((transform, oracle)) = prepared.sides(kind, cache, budget)? {
            if !record(&mut report, inst, kind, transform, oracle) {
                attach_minimized(&mut report, kind, inst, cache, budget);
            }
        }
    }
    let c_size = prepared.c.size() as u128;
    let ambient = prepared.c.ambient_size();
    report.check("duality_cardinality", c_size * prepared.c_dual.size() as u128 == ambient, || {
        json!({"instance": inst, "c_size": c_size, "dual_size": prepared.c_dual.size()})
    });
    let props = super::check_joint_properties(&prepared.c, &prepared.d, &prepared.params, budget)?;
    for mut a in props.assertions {
        a.check = format!("joint_{}", a.check);
        report.assertions.push(a);
    }
    Ok(report)
}

fn fails(kind: IdentityKind, inst: &Instance, cache: &KernelCache, budget: u128) -> bool {
    let Ok(p) = Prepared::new(inst, budget) else {
        return false;
    };
    match p.sides(kind, cache, budget) {
        Ok(Some((t, o))) => !matches!(t, Ok(p) if p == o),
        _ => false,
    }
}

/// Greedily drops generators and zeroes entries while the failure persists,
/// then stores the result in the last assertion's counterexample.
fn attach_minimized(
    report: &mut VerificationReport,
    kind: IdentityKind,
    inst: &Instance,
    cache: &KernelCache,
    budget: u128,
) {
    let mut best = inst.clone();
    loop {
        let mut improved = false;
        for side in 0..2 {
            let len = if side == 0 { best.c_generators.len() } else { best.d_generators.len() };
            for i in (0..len).rev() {
                let mut cand = best.clone();
                if side == 0 {
                    cand.c_generators.remove(i);
                } else {
                    cand.d_generators.remove(i);
                }
                if fails(kind, &cand, cache, budget) {
                    best = cand;
                    improved = true;
                }
            }
        }
        for side in 0..2 {
            let gens = if side == 0 { &best.c_generators } else { &best.d_generators };
            let coords: Vec<(usize, usize)> = gens
                .iter()
                .enumerate()
                .flat_map(|(g, row)| (0..row.len()).filter(move |&k| row[k] != 0).map(move |k| (g, k)))
                .collect();
            for (g, k) in coords {
                let mut cand = best.clone();
                let rows = if side == 0 { &mut cand.c_generators } else { &mut cand.d_generators };
                rows[g][k] = 0;
                if fails(kind, &cand, cache, budget) {
                    best = cand;
                    improved = true;
                }
            }
        }
        if !improved {
            break;
        }
    }
    if let Some(Some(ce)) = report.assertions.last_mut().map(|a| a.counterexample.as_mut()) {
        ce["minimized_instance"] = json!(best);
    }
}
