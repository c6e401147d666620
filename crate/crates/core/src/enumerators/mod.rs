//! Weight enumerators, transform kernels, and MacWilliams transforms.

mod direct;
pub mod kernels;
mod transforms;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::code::ByteComposition;
use crate::error::Result;
use crate::poly::{Monomial, MultiPoly, Var};
use crate::ring::{Ring, RingSpec};
use crate::weights::SpottyParams;

pub use direct::{hamming_enumerator, joint_enumerator, lee_enumerator, split_enumerator};
pub use kernels::krawtchouk;
pub use transforms::{
    joint_macwilliams, lee_macwilliams, macwilliams_hamming, split_macwilliams, JointVariant,
};

/// Deliberate kernel corruption, used as a negative control for the
/// verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds z to every theta kernel.
    CorruptTheta,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum KernelKey {
    Theta { j: usize, b: usize, ell: u32, t: usize },
    G { nu: usize, mu: usize, delta: usize, b: usize, ell: u32, t: usize },
    H { mu: usize, nu: usize, delta: usize, b: usize, ell: u32, t: usize },
    Split { j: usize, b: usize, ell: u32, t: usize },
    Lee { ring: RingSpec, comp: ByteComposition, t: usize },
}

/// Memo table for kernel polynomials, safe to share between threads.
/// Racing fills compute identical values, so a lost insert is harmless.
#[derive(Debug, Default)]
pub struct KernelCache {
    map: RwLock<HashMap<KernelKey, Arc<MultiPoly>>>,
    fault: Option<Fault>,
}

impl KernelCache {
    pub fn new() -> Self {
        KernelCache::default()
    }

    pub fn with_fault(fault: Fault) -> Self {
        KernelCache {
            map: RwLock::default(),
            fault: Some(fault),
        }
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get_or(&self, key: KernelKey, compute: impl FnOnce() -> Result<MultiPoly>) -> Result<Arc<MultiPoly>> {
        if let Some(p) = self.map.read().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let p = Arc::new(compute()?);
        self.map.write().unwrap().entry(key).or_insert_with(|| p.clone());
        Ok(p)
    }

    pub fn theta(&self, j: usize, ell: u32, params: &SpottyParams) -> Result<Arc<MultiPoly>> {
        let key = KernelKey::Theta { j, b: params.b(), ell, t: params.t() };
        self.get_or(key, || {
            let mut p = kernels::theta_poly(j, ell, params)?;
            if self.fault == Some(Fault::CorruptTheta) {
                p.add_term(Monomial::var(Var::Z, 1), 1.into());
            }
            Ok(p)
        })
    }

    pub fn g(&self, nu: usize, mu: usize, delta: usize, ell: u32, params: &SpottyParams) -> Result<Arc<MultiPoly>> {
        let key = KernelKey::G { nu, mu, delta, b: params.b(), ell, t: params.t() };
        self.get_or(key, || kernels::g_kernel(nu, mu, delta, ell, params))
    }

    pub fn h(&self, mu: usize, nu: usize, delta: usize, ell: u32, params: &SpottyParams) -> Result<Arc<MultiPoly>> {
        let key = KernelKey::H { mu, nu, delta, b: params.b(), ell, t: params.t() };
        self.get_or(key, || kernels::h_kernel(mu, nu, delta, ell, params))
    }

    pub fn split(&self, j: usize, ell: u32, params: &SpottyParams) -> Result<Arc<MultiPoly>> {
        let key = KernelKey::Split { j, b: params.b(), ell, t: params.t() };
        self.get_or(key, || kernels::split_kernel(j, ell, params))
    }

    pub fn lee(&self, comp: &ByteComposition, ring: &Ring, params: &SpottyParams) -> Result<Arc<MultiPoly>> {
        let key = KernelKey::Lee { ring: ring.spec(), comp: comp.clone(), t: params.t() };
        self.get_or(key, || kernels::lee_kernel(comp, ring, params))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_matches_recomputation() {
        let cache = KernelCache::new();
        let q = SpottyParams::new(3, 2).unwrap();
        let a = cache.g(1, 2, 1, 16, &q).unwrap();
        let b = cache.g(1, 2, 1, 16, &q).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*a, kernels::g_kernel(1, 2, 1, 16, &q).unwrap());
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn faulty_cache_differs() {
        let q = SpottyParams::new(3, 2).unwrap();
        let good = KernelCache::new().theta(1, 16, &q).unwrap();
        let bad = KernelCache::with_fault(Fault::CorruptTheta).theta(1, 16, &q).unwrap();
        assert_ne!(good, bad);
    }

    #[test]
    fn concurrent_fills_agree() {
        let cache = KernelCache::new();
        let q = SpottyParams::new(4, 2).unwrap();
        let polys: Vec<Arc<MultiPoly>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8).map(|_| s.spawn(|| cache.h(2, 3, 1, 4, &q).unwrap())).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(polys.windows(2).all(|w| w[0] == w[1]));
    }
}
