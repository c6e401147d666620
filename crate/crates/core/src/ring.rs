//! Finite commutative Frobenius rings used as code alphabets.
//!
//! Four families are supported:
//!
//! - `IntegersMod(l)`: the residue ring Z/lZ with character x -> zeta_l^x.
//! - `PrimeField(p)`: the prime field F_p, same character as Z/pZ.
//! - `ChainRing(p, e)`: F_p[u]/(u^e); the character reads the coefficient of
//!   u^(e-1), so its kernel contains no nonzero ideal.
//! - `Rk(k)`: F_2[u_1..u_k]/(u_i^2), of size 2^(2^k), with character
//!   (-1)^(number of monomials present).
//!
//! Every element is a single integer index in `[0, size)`; see [`Elem`].

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported `k` for the `Rk` family (size 2^16).
pub const MAX_RK: u32 = 4;

/// Rings up to this size get precomputed add/mul tables.
const TABLE_LIMIT: u32 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum RingSpec {
    IntegersMod(u32),
    PrimeField(u32),
    ChainRing { p: u32, e: u32 },
    Rk(u32),
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RingSpec::IntegersMod(l) => write!(f, "Z{l}"),
            RingSpec::PrimeField(p) => write!(f, "F{p}"),
            RingSpec::ChainRing { p, e } => write!(f, "F{p}[u]/(u^{e})"),
            RingSpec::Rk(k) => write!(f, "R{k}"),
        }
    }
}

/// Canonical element encoding.
///
/// - residue rings: the residue itself;
/// - chain rings: base-p digits are the coefficients of 1, u, ..., u^(e-1);
/// - `Rk`: bit `t` is the coefficient of the monomial `u_A` whose index set
///   has bitmask `t`, so for k = 2 index p is the element r_p of the usual
///   (1, u, v, uv) listing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
}

/// Binary image of an `Rk` element under the recursive Gray map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayImage {
    pub bits: Vec<bool>,
}

impl GrayImage {
    pub fn weight(&self) -> u32 {
        self.bits.iter().filter(|&&b| b).count() as u32
    }
}

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct Ring {
    spec: RingSpec,
    size: u32,
    order: u32,
    tables: Option<Tables>,
    /// Lee weights, `Rk` only.
    lee: Option<Vec<u32>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Ring {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    pub fn new(spec: RingSpec) -> Result<Ring> {
        let (size, order) = match spec {
            RingSpec::IntegersMod(l) => {
                if l < 2 {
                    return Err(Error::config(format!("Z_l needs l >= 2, got {l}")));
                }
                (l, l)
            }
            RingSpec::PrimeField(p) => {
                if !is_prime(p) {
                    return Err(Error::config(format!("F_p needs a prime p, got {p}")));
                }
                (p, p)
            }
            RingSpec::ChainRing { p, e } => {
                if !is_prime(p) {
                    return Err(Error::config(format!(
                        "chain ring residue field must be a prime field, got p = {p}"
                    )));
                }
                if e == 0 {
                    return Err(Error::config("chain ring needs e >= 1"));
                }
                let size = (p as u64)
                    .checked_pow(e)
                    .filter(|&s| s <= u32::MAX as u64)
                    .ok_or_else(|| Error::config(format!("chain ring {p}^{e} is too large")))?;
                (size as u32, p)
            }
            RingSpec::Rk(k) => {
                if k == 0 || k > MAX_RK {
                    return Err(Error::config(format!(
                        "R_k needs 1 <= k <= {MAX_RK}, got {k}"
                    )));
                }
                (1u32 << (1u32 << k), 2)
            }
        };
        let mut ring = Ring {
            spec,
            size,
            order,
            tables: None,
            lee: None,
        };
        if let RingSpec::Rk(k) = spec {
            let lee = (0..size)
                .map(|a| gray_bits(a, k).iter().filter(|&&b| b).count() as u32)
                .collect();
            ring.lee = Some(lee);
        }
        if size <= TABLE_LIMIT {
            let n = size as usize;
            let mut add = vec![0; n * n];
            let mut mul = vec![0; n * n];
            for a in 0..size {
                for b in 0..size {
                    add[a as usize * n + b as usize] = ring.add_raw(a, b);
                    mul[a as usize * n + b as usize] = ring.mul_raw(a, b);
                }
            }
            ring.tables = Some(Tables { add, mul });
        }
        Ok(ring)
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    /// Number of elements, written l throughout.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Order m of the generating character: values are m-th roots of unity.
    pub fn char_order(&self) -> u32 {
        self.order
    }

    pub fn is_rk(&self) -> bool {
        matches!(self.spec, RingSpec::Rk(_))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size).map(Elem)
    }

    /// Validates a raw index.
    pub fn element(&self, index: u32) -> Result<Elem> {
        if index < self.size {
            Ok(Elem(index))
        } else {
            Err(Error::domain(format!(
                "element index {index} out of range for {} (size {})",
                self.spec, self.size
            )))
        }
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        match self.spec {
            RingSpec::IntegersMod(l) | RingSpec::PrimeField(l) => {
                ((a as u64 + b as u64) % l as u64) as u32
            }
            RingSpec::ChainRing { p, e } => {
                let (mut a, mut b) = (a, b);
                let mut out = 0u32;
                let mut place = 1u32;
                for _ in 0..e {
                    out += ((a % p + b % p) % p) * place;
                    a /= p;
                    b /= p;
                    place = place.wrapping_mul(p);
                }
                out
            }
            RingSpec::Rk(_) => a ^ b,
        }
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        match self.spec {
            RingSpec::IntegersMod(l) | RingSpec::PrimeField(l) => {
                ((a as u64 * b as u64) % l as u64) as u32
            }
            RingSpec::ChainRing { p, e } => {
                let da = digits(a, p, e);
                let db = digits(b, p, e);
                let mut prod = vec![0u64; e as usize];
                for (i, &x) in da.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in db.iter().enumerate().take(e as usize - i) {
                        prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
                    }
                }
                prod.iter()
                    .rev()
                    .fold(0u32, |acc, &d| acc * p + d as u32)
            }
            RingSpec::Rk(_) => {
                // u_A * u_B = u_{A ∪ B} when A ∩ B = ∅, else 0.
                let mut out = 0u32;
                let mut x = a;
                while x != 0 {
                    let s = x.trailing_zeros();
                    x &= x - 1;
                    let mut y = b;
                    while y != 0 {
                        let t = y.trailing_zeros();
                        y &= y - 1;
                        if s & t == 0 {
                            out ^= 1 << (s | t);
                        }
                    }
                }
                out
            }
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a.0 < self.size && b.0 < self.size);
        match &self.tables {
            Some(t) => Elem(t.add[a.index() * self.size as usize + b.index()]),
            None => Elem(self.add_raw(a.0, b.0)),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a.0 < self.size && b.0 < self.size);
        match &self.tables {
            Some(t) => Elem(t.mul[a.index() * self.size as usize + b.index()]),
            None => Elem(self.mul_raw(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        match self.spec {
            RingSpec::IntegersMod(l) | RingSpec::PrimeField(l) => Elem((l - a.0) % l),
            RingSpec::ChainRing { p, e } => {
                let d = digits(a.0, p, e);
                Elem(d.iter().rev().fold(0u32, |acc, &x| acc * p + (p - x) % p))
            }
            RingSpec::Rk(_) => a,
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Checked arithmetic entry point; `b` is required for add and mul.
    pub fn arith(&self, op: ArithOp, a: Elem, b: Option<Elem>) -> Result<Elem> {
        self.element(a.0)?;
        if let Some(b) = b {
            self.element(b.0)?;
        }
        let need_b = || Error::domain(format!("{op:?} needs two operands"));
        match op {
            ArithOp::Add => Ok(self.add(a, b.ok_or_else(need_b)?)),
            ArithOp::Mul => Ok(self.mul(a, b.ok_or_else(need_b)?)),
            ArithOp::Neg => Ok(self.neg(a)),
        }
    }

    /// Exponent e with chi(a) = zeta_m^e.
    #[inline]
    pub fn char_exponent(&self, a: Elem) -> u32 {
        match self.spec {
            RingSpec::IntegersMod(_) | RingSpec::PrimeField(_) => a.0,
            RingSpec::ChainRing { p, e } => a.0 / p.pow(e - 1),
            RingSpec::Rk(_) => a.0.count_ones() & 1,
        }
    }

    pub fn inner_product(&self, u: &[Elem], v: &[Elem]) -> Result<Elem> {
        if u.len() != v.len() {
            return Err(Error::domain(format!(
                "inner product of vectors of length {} and {}",
                u.len(),
                v.len()
            )));
        }
        Ok(self.dot(u, v))
    }

    /// Unchecked inner product for hot loops.
    #[inline]
    pub fn dot(&self, u: &[Elem], v: &[Elem]) -> Elem {
        u.iter()
            .zip(v)
            .fold(Elem::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    pub fn gray_map(&self, a: Elem) -> Result<GrayImage> {
        match self.spec {
            RingSpec::Rk(k) => {
                self.element(a.0)?;
                Ok(GrayImage {
                    bits: gray_bits(a.0, k),
                })
            }
            _ => Err(Error::unsupported(format!(
                "Gray map is defined only on R_k, not {}",
                self.spec
            ))),
        }
    }

    pub fn lee_weight(&self, a: Elem) -> Result<u32> {
        match &self.lee {
            Some(table) => {
                self.element(a.0)?;
                Ok(table[a.index()])
            }
            None => Err(Error::unsupported(format!(
                "Lee weight is defined only on R_k, not {}",
                self.spec
            ))),
        }
    }

    /// Lee weight table indexed by element, `Rk` only.
    pub fn lee_table(&self) -> Option<&[u32]> {
        self.lee.as_deref()
    }

    /// Parses an element literal (see the crate README for the grammar).
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let text = text.trim();
        if let Some(raw) = text.strip_prefix('#') {
            let idx: u32 = raw
                .parse()
                .map_err(|_| Error::domain(format!("bad element index {text:?}")))?;
            return self.element(idx);
        }
        match self.spec {
            RingSpec::IntegersMod(_) | RingSpec::PrimeField(_) => {
                let v: u32 = text
                    .parse()
                    .map_err(|_| Error::domain(format!("bad residue {text:?}")))?;
                self.element(v)
            }
            RingSpec::ChainRing { p, e } => {
                let mut coeffs = vec![0u32; e as usize];
                for term in text.split('+').map(str::trim) {
                    let (c, pow) = parse_chain_term(term)?;
                    if pow >= e {
                        return Err(Error::domain(format!(
                            "u^{pow} vanishes in F{p}[u]/(u^{e}); write it as 0"
                        )));
                    }
                    coeffs[pow as usize] = (coeffs[pow as usize] + c % p) % p;
                }
                Ok(Elem(coeffs.iter().rev().fold(0u32, |acc, &d| acc * p + d)))
            }
            RingSpec::Rk(k) => {
                let mut index = 0u32;
                for term in text.split('+').map(str::trim) {
                    let mask = parse_rk_monomial(term, k)?;
                    if let Some(mask) = mask {
                        index ^= 1 << mask;
                    }
                }
                Ok(Elem(index))
            }
        }
    }

    pub fn format_element(&self, a: Elem) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        match self.spec {
            RingSpec::IntegersMod(_) | RingSpec::PrimeField(_) => a.0.to_string(),
            RingSpec::ChainRing { p, e } => {
                let terms: Vec<String> = digits(a.0, p, e)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| {
                        let mono = match i {
                            0 => String::new(),
                            1 => "u".to_string(),
                            _ => format!("u{i}"),
                        };
                        match (c, i) {
                            (_, 0) => c.to_string(),
                            (1, _) => mono,
                            _ => format!("{c}{mono}"),
                        }
                    })
                    .collect();
                terms.join("+")
            }
            RingSpec::Rk(k) => {
                let terms: Vec<String> = (0..(1u32 << k))
                    .filter(|&mask| a.0 >> mask & 1 == 1)
                    .map(|mask| rk_monomial_name(mask, k))
                    .collect();
                terms.join("+")
            }
        }
    }
}

fn digits(mut a: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

/// Recursive Gray map: k = 0 is the identity on F_2; otherwise
/// a = c + d u_k with c, d in R_{k-1} and gray(a) = gray(d) || gray(c + d).
fn gray_bits(a: u32, k: u32) -> Vec<bool> {
    if k == 0 {
        return vec![a & 1 == 1];
    }
    let half = 1u32 << (k - 1);
    let low_mask = (1u32 << half) - 1;
    let c = a & low_mask;
    let d = a >> half;
    let mut bits = gray_bits(d, k - 1);
    bits.extend(gray_bits(c ^ d, k - 1));
    bits
}

fn rk_monomial_name(mask: u32, k: u32) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    if k <= 2 {
        let mut s = String::new();
        if mask & 1 != 0 {
            s.push('u');
        }
        if mask & 2 != 0 {
            s.push('v');
        }
        return s;
    }
    (0..k)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| format!("u{}", i + 1))
        .collect()
}

fn parse_chain_term(term: &str) -> Result<(u32, u32)> {
    let bad = || Error::domain(format!("bad chain-ring term {term:?}"));
    let split = term.find('u');
    let (coef, pow) = match split {
        None => (term, None),
        Some(i) => (&term[..i], Some(&term[i + 1..])),
    };
    let coef = coef.trim_end_matches('*');
    let c = if coef.is_empty() {
        if pow.is_none() {
            return Err(bad());
        }
        1
    } else {
        coef.parse().map_err(|_| bad())?
    };
    let pow = match pow {
        None => 0,
        Some("") => 1,
        Some(rest) => rest
            .trim_start_matches('^')
            .parse()
            .map_err(|_| bad())?,
    };
    Ok((c, pow))
}

/// Returns the bitmask of the monomial, or `None` for a literal zero.
fn parse_rk_monomial(term: &str, k: u32) -> Result<Option<u32>> {
    let bad = |why: &str| Error::domain(format!("bad R_{k} monomial {term:?}: {why}"));
    match term {
        "0" => return Ok(None),
        "1" => return Ok(Some(0)),
        "" => return Err(bad("empty term")),
        _ => {}
    }
    let chars: Vec<char> = term.chars().collect();
    let mut mask = 0u32;
    let mut i = 0;
    while i < chars.len() {
        let var = match chars[i] {
            'u' => {
                if let Some(d) = chars.get(i + 1).and_then(|c| c.to_digit(10)) {
                    i += 1;
                    d
                } else {
                    1
                }
            }
            'v' => 2,
            '*' => {
                i += 1;
                continue;
            }
            _ => return Err(bad("unexpected character")),
        };
        if var == 0 || var > k {
            return Err(bad("variable index out of range"));
        }
        let bit = 1 << (var - 1);
        if mask & bit != 0 {
            // u_i^2 = 0
            return Ok(None);
        }
        mask |= bit;
        i += 1;
    }
    Ok(Some(mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r2() -> Ring {
        Ring::new(RingSpec::Rk(2)).unwrap()
    }

    #[test]
    fn sizes_and_orders() {
        let z4 = Ring::new(RingSpec::IntegersMod(4)).unwrap();
        assert_eq!((z4.size(), z4.char_order()), (4, 4));
        let r = r2();
        assert_eq!((r.size(), r.char_order()), (16, 2));
        let c = Ring::new(RingSpec::ChainRing { p: 2, e: 3 }).unwrap();
        assert_eq!((c.size(), c.char_order()), (8, 2));
        let f5 = Ring::new(RingSpec::PrimeField(5)).unwrap();
        assert_eq!((f5.size(), f5.char_order()), (5, 5));
        let r4 = Ring::new(RingSpec::Rk(4)).unwrap();
        assert_eq!(r4.size(), 65536);
    }

    #[test]
    fn invalid_parameters_rejected() {
        for spec in [
            RingSpec::IntegersMod(1),
            RingSpec::PrimeField(6),
            RingSpec::ChainRing { p: 4, e: 2 },
            RingSpec::ChainRing { p: 2, e: 0 },
            RingSpec::Rk(0),
            RingSpec::Rk(5),
        ] {
            assert!(matches!(Ring::new(spec), Err(Error::Config(_))), "{spec}");
        }
    }

    #[test]
    fn rk_products() {
        let r = r2();
        let u = r.parse_element("u").unwrap();
        let v = r.parse_element("v").unwrap();
        let uv = r.parse_element("uv").unwrap();
        assert_eq!(r.mul(u, u), Elem::ZERO);
        assert_eq!(r.mul(u, v), uv);
        assert_eq!(uv, Elem(8));
        let one_u = r.parse_element("1+u").unwrap();
        // (1+u)(1+u) = 1 + 2u + u^2 = 1
        assert_eq!(r.mul(one_u, one_u), Elem(1));
        // characteristic 2
        for a in r.elements() {
            assert_eq!(r.add(a, a), Elem::ZERO);
        }
    }

    #[test]
    fn residue_arithmetic() {
        let z4 = Ring::new(RingSpec::IntegersMod(4)).unwrap();
        assert_eq!(z4.arith(ArithOp::Add, Elem(3), Some(Elem(3))).unwrap(), Elem(2));
        assert_eq!(z4.arith(ArithOp::Neg, Elem(1), None).unwrap(), Elem(3));
        assert!(matches!(
            z4.arith(ArithOp::Add, Elem(4), Some(Elem(0))),
            Err(Error::Domain(_))
        ));
        assert!(z4.arith(ArithOp::Mul, Elem(1), None).is_err());
    }

    #[test]
    fn chain_ring_arithmetic() {
        let c = Ring::new(RingSpec::ChainRing { p: 2, e: 3 }).unwrap();
        let u = c.parse_element("u").unwrap();
        let u2 = c.parse_element("u2").unwrap();
        assert_eq!(c.mul(u, u), u2);
        assert_eq!(c.mul(u, u2), Elem::ZERO);
        let x = c.parse_element("1+u+u2").unwrap();
        assert_eq!(x, Elem(7));
        assert_eq!(c.format_element(x), "1+u+u2");
        for a in c.elements() {
            assert_eq!(c.add(a, a), Elem::ZERO);
        }
        let c3 = Ring::new(RingSpec::ChainRing { p: 3, e: 2 }).unwrap();
        let x = c3.parse_element("2+2u").unwrap();
        assert_eq!(c3.format_element(x), "2+2u");
        assert_eq!(c3.add(x, c3.neg(x)), Elem::ZERO);
        assert_eq!(c3.char_exponent(x), 2);
    }

    #[test]
    fn characters() {
        let r = r2();
        let u_plus_v = r.parse_element("u+v").unwrap();
        assert_eq!(r.char_exponent(u_plus_v), 0);
        assert_eq!(r.char_exponent(r.parse_element("uv").unwrap()), 1);
        let z4 = Ring::new(RingSpec::IntegersMod(4)).unwrap();
        assert_eq!(z4.char_exponent(Elem(3)), 3);
        for ring in [r, z4] {
            assert_eq!(ring.char_exponent(Elem::ZERO), 0);
            let m = ring.char_order();
            for a in ring.elements() {
                for b in ring.elements() {
                    assert_eq!(
                        ring.char_exponent(ring.add(a, b)),
                        (ring.char_exponent(a) + ring.char_exponent(b)) % m
                    );
                }
            }
        }
    }

    #[test]
    fn inner_products() {
        let r = r2();
        let one = Elem(1);
        let u = r.parse_element("u").unwrap();
        assert_eq!(r.inner_product(&[one, u], &[u, one]).unwrap(), Elem::ZERO);
        let z4 = Ring::new(RingSpec::IntegersMod(4)).unwrap();
        let a = [Elem(1), Elem(2), Elem(3)];
        let b = [Elem(3), Elem(2), Elem(1)];
        assert_eq!(z4.inner_product(&a, &b).unwrap(), Elem(2));
        assert_eq!(z4.inner_product(&[Elem(0); 3], &b).unwrap(), Elem(0));
        assert!(matches!(z4.inner_product(&a, &b[..2]), Err(Error::Domain(_))));
    }

    #[test]
    fn gray_map_values() {
        let r = r2();
        let bits = |s: &str| r.gray_map(r.parse_element(s).unwrap()).unwrap().bits;
        assert_eq!(bits("uv"), vec![true; 4]);
        assert_eq!(bits("1"), vec![false, false, false, true]);
        assert_eq!(bits("0"), vec![false; 4]);
        let z4 = Ring::new(RingSpec::IntegersMod(4)).unwrap();
        assert!(matches!(z4.gray_map(Elem(1)), Err(Error::Unsupported(_))));
        assert!(matches!(z4.lee_weight(Elem(1)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn lee_weights_match_listing() {
        let r = r2();
        let w = |s: &str| r.lee_weight(r.parse_element(s).unwrap()).unwrap();
        for s in ["1", "1+u", "1+v", "1+u+v+uv"] {
            assert_eq!(w(s), 1, "{s}");
        }
        for s in ["u", "v", "u+v", "u+uv", "v+uv", "u+v+uv"] {
            assert_eq!(w(s), 2, "{s}");
        }
        for s in ["1+uv", "1+u+uv", "1+v+uv", "1+u+v"] {
            assert_eq!(w(s), 3, "{s}");
        }
        assert_eq!(w("uv"), 4);
        assert_eq!(w("0"), 0);
    }

    #[test]
    fn lee_weight_counts_are_binomial() {
        for k in 1..=3 {
            let r = Ring::new(RingSpec::Rk(k)).unwrap();
            let len = 1usize << k;
            let mut hist = vec![0u64; len + 1];
            let mut seen = std::collections::HashSet::new();
            for a in r.elements() {
                let g = r.gray_map(a).unwrap();
                assert_eq!(g.bits.len(), len);
                hist[g.weight() as usize] += 1;
                assert!(seen.insert(g.bits));
            }
            let mut binom = 1u64;
            for (i, &h) in hist.iter().enumerate() {
                assert_eq!(h, binom, "k={k} i={i}");
                binom = binom * (len - i) as u64 / (i as u64 + 1);
            }
            // monomials u_A have weight 2^|A|
            for mask in 0u32..(1 << k) {
                let w = r.lee_weight(Elem(1 << mask)).unwrap();
                assert_eq!(w, 1 << mask.count_ones());
            }
        }
    }

    #[test]
    fn table_v_listing() {
        let r = r2();
        let expected = [
            "0", "1", "u", "1+u", "v", "1+v", "u+v", "1+u+v", "uv", "1+uv", "u+uv", "1+u+uv",
            "v+uv", "1+v+uv", "u+v+uv", "1+u+v+uv",
        ];
        for (p, s) in expected.iter().enumerate() {
            assert_eq!(r.format_element(Elem(p as u32)), *s);
            assert_eq!(r.parse_element(s).unwrap(), Elem(p as u32));
        }
        assert_eq!(r.parse_element("u1u2").unwrap(), Elem(8));
        assert_eq!(r.parse_element("#13").unwrap(), Elem(13));
    }

    #[test]
    fn rk3_literals() {
        let r = Ring::new(RingSpec::Rk(3)).unwrap();
        let a = r.parse_element("1+u1+u1u3").unwrap();
        assert_eq!(r.format_element(a), "1+u1+u1u3");
        assert!(r.parse_element("u4").is_err());
        assert_eq!(r.parse_element("u1u1").unwrap(), Elem::ZERO);
    }
}
