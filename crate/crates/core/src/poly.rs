//! Sparse multivariate polynomials with big-integer coefficients.
//!
//! The variable universe is fixed: `z`, `x`, `y` and the indexed families
//! `x1, y1, x2, y2, ...`. Terms are kept in canonical order: ascending total
//! degree, ties broken lexicographically over the variable sequence
//! `(z, x, y, x1, y1, x2, y2, ...)` with the larger exponent of the earlier
//! variable first. Both the text and the JSON rendering follow that order, so
//! output is byte-stable.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A polynomial variable. Ids: z = 0, x = 1, y = 2, x_i = 2i + 1, y_i = 2i + 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

impl Var {
    pub const Z: Var = Var(0);
    pub const X: Var = Var(1);
    pub const Y: Var = Var(2);

    /// Indexed `x_i`, `i >= 1`.
    pub fn xi(i: u32) -> Var {
        assert!(i >= 1, "indexed variables start at 1");
        Var(2 * i + 1)
    }

    /// Indexed `y_i`, `i >= 1`.
    pub fn yi(i: u32) -> Var {
        assert!(i >= 1, "indexed variables start at 1");
        Var(2 * i + 2)
    }

    pub fn name(self) -> String {
        match self.0 {
            0 => "z".into(),
            1 => "x".into(),
            2 => "y".into(),
            id if id % 2 == 1 => format!("x{}", (id - 1) / 2),
            id => format!("y{}", (id - 2) / 2),
        }
    }

    pub fn parse(name: &str) -> Option<Var> {
        match name {
            "z" => return Some(Var::Z),
            "x" => return Some(Var::X),
            "y" => return Some(Var::Y),
            _ => {}
        }
        let mut chars = name.chars();
        let head = chars.next()?;
        let idx = chars.as_str();
        let i: u32 = idx.trim_start_matches('_').parse().ok().filter(|&i| i >= 1)?;
        match head {
            'x' => Some(Var::xi(i)),
            'y' => Some(Var::yi(i)),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Sorted list of (variable, positive exponent).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut factors: Vec<(Var, u32)>) -> Self {
        factors.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match out.last_mut() {
                Some((last, le)) if *last == v => *le += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|&(_, e)| e > 0);
        Monomial(out)
    }

    pub fn var(v: Var, e: u32) -> Self {
        Monomial::new(vec![(v, e)])
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(&f), None) => {
                    out.push(f);
                    i += 1;
                }
                (_, Some(&f)) => {
                    out.push(f);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                let (va, vb) = (a.get(i).map(|f| f.0), b.get(j).map(|f| f.0));
                let v = match (va, vb) {
                    (None, None) => return Ordering::Equal,
                    (Some(x), None) | (None, Some(x)) => x,
                    (Some(x), Some(y)) => x.min(y),
                };
                let ea = if va == Some(v) { a[i].1 } else { 0 };
                let eb = if vb == Some(v) { b[j].1 } else { 0 };
                if ea != eb {
                    return eb.cmp(&ea);
                }
                if va == Some(v) {
                    i += 1;
                }
                if vb == Some(v) {
                    j += 1;
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, &(v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Substitution value for [`MultiPoly::evaluate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subst {
    Int(BigInt),
    Var(Var),
}

impl From<i64> for Subst {
    fn from(v: i64) -> Self {
        Subst::Int(BigInt::from(v))
    }
}

impl From<Var> for Subst {
    fn from(v: Var) -> Self {
        Subst::Var(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        MultiPoly::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Monomial::var(v, 1), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c.into());
        p
    }

    /// `sum_e coeffs[e] v^e`.
    pub fn univariate<C: Into<BigInt> + Clone>(v: Var, coeffs: &[C]) -> Self {
        let mut p = MultiPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(v, e as u32), c.clone().into());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Value with every variable set to 1.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &MultiPoly, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::from(-1));
        out
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&BigInt::from(-1))
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), d * c))
                .collect(),
        }
    }

    /// Multiplies by `num / den`; fails unless every coefficient stays integral.
    pub fn scale_rational(&self, num: &BigInt, den: &BigInt) -> Result<MultiPoly> {
        if den.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let (q, r) = (c * num).div_rem(den);
            if !r.is_zero() {
                return Err(Error::Integrality(format!(
                    "coefficient {c} of {m} times {num}/{den} is not an integer"
                )));
            }
            out.add_term(m.clone(), q);
        }
        Ok(out)
    }

    pub fn div_exact(&self, den: &BigInt) -> Result<MultiPoly> {
        self.scale_rational(&BigInt::one(), den)
    }

    /// Substitutes integers or variables; unassigned variables are kept.
    pub fn evaluate(&self, assignment: &HashMap<Var, Subst>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut factors = Vec::with_capacity(m.0.len());
            for &(v, e) in &m.0 {
                match assignment.get(&v) {
                    None => factors.push((v, e)),
                    Some(Subst::Var(w)) => factors.push((*w, e)),
                    Some(Subst::Int(k)) => coeff *= num_traits::pow(k.clone(), e as usize),
                }
            }
            out.add_term(Monomial::new(factors), coeff);
        }
        out
    }

    /// Convenience wrapper over [`MultiPoly::evaluate`].
    pub fn substitute<S: Into<Subst>>(&self, pairs: impl IntoIterator<Item = (Var, S)>) -> MultiPoly {
        let map = pairs.into_iter().map(|(v, s)| (v, s.into())).collect();
        self.evaluate(&map)
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let exps: serde_json::Map<String, Value> = m
                        .0
                        .iter()
                        .map(|&(v, e)| (v.name(), json!(e)))
                        .collect();
                    json!({ "coeff": c.to_string(), "exps": exps })
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<MultiPoly> {
        let bad = |msg: &str| Error::parse(0, format!("polynomial JSON: {msg}"));
        let items = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut p = MultiPoly::zero();
        for item in items {
            let coeff: BigInt = item
                .get("coeff")
                .and_then(Value::as_str)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("missing or invalid coeff"))?;
            let exps = item
                .get("exps")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("missing exps"))?;
            let mut factors = Vec::new();
            for (name, e) in exps {
                let v = Var::parse(name).ok_or_else(|| bad("unknown variable"))?;
                let e = e
                    .as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| bad("bad exponent"))?;
                factors.push((v, e));
            }
            p.add_term(Monomial::new(factors), coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (n, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MultiPoly> {
        let bad = |msg: String| Error::parse(1, format!("polynomial text: {msg}"));
        let spaced = s.replace('\u{2212}', "-").replace('-', " - ").replace('+', " + ");
        let mut p = MultiPoly::zero();
        let mut sign = 1i32;
        let mut coeff: Option<BigInt> = None;
        let mut factors: Vec<(Var, u32)> = Vec::new();
        let mut open = false;
        let flush = |p: &mut MultiPoly, sign: i32, coeff: &mut Option<BigInt>, factors: &mut Vec<(Var, u32)>| {
            let c = coeff.take().unwrap_or_else(BigInt::one) * sign;
            p.add_term(Monomial::new(std::mem::take(factors)), c);
        };
        for tok in spaced.split_whitespace() {
            match tok {
                "+" | "-" => {
                    if open {
                        flush(&mut p, sign, &mut coeff, &mut factors);
                        open = false;
                        sign = 1;
                    }
                    if tok == "-" {
                        sign = -sign;
                    }
                }
                _ if tok.starts_with(|c: char| c.is_ascii_digit()) => {
                    if open {
                        return Err(bad(format!("unexpected number {tok:?}")));
                    }
                    coeff = Some(tok.parse().map_err(|_| bad(format!("bad integer {tok:?}")))?);
                    open = true;
                }
                _ => {
                    let (name, exp) = match tok.split_once('^') {
                        Some((n, e)) => (n, e.parse().map_err(|_| bad(format!("bad exponent in {tok:?}")))?),
                        None => (tok, 1u32),
                    };
                    let v = Var::parse(name).ok_or_else(|| bad(format!("unknown variable {name:?}")))?;
                    factors.push((v, exp));
                    open = true;
                }
            }
        }
        if !open {
            return Err(bad("dangling sign or empty input".into()));
        }
        flush(&mut p, sign, &mut coeff, &mut factors);
        Ok(p)
    }
}
