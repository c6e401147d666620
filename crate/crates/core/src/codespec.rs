//! Line-oriented code specification files.
//!
//! ```text
//! # comment
//! ring rk 2            # or: zmod 4, fp 5, chain 2 3
//! bytes b=3 n=2
//! gen 1 0 0 u v 1+u
//! code                 # optional: starts a second code
//! gen uv 0 uv 0 0 0
//! ```

use std::sync::Arc;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingSpec};

/// A parsed spec: one ring, one geometry, and one or two generator lists.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    pub ring: Arc<Ring>,
    pub b: usize,
    pub n: usize,
    pub codes: Vec<Vec<Vec<Elem>>>,
}

fn parse_ring(line: usize, args: &[&str]) -> Result<RingSpec> {
    let num = |s: &str| -> Result<u32> {
        s.parse()
            .map_err(|_| Error::parse(line, format!("expected a positive integer, got {s:?}")))
    };
    let spec = match args {
        ["zmod", l] => RingSpec::IntegersMod(num(l)?),
        ["fp", p] => RingSpec::PrimeField(num(p)?),
        ["chain", p, e] => RingSpec::ChainRing { p: num(p)?, e: num(e)? },
        ["rk", k] => RingSpec::Rk(num(k)?),
        _ => {
            return Err(Error::parse(
                line,
                "expected `ring zmod <l>`, `ring fp <p>`, `ring chain <p> <e>` or `ring rk <k>`",
            ))
        }
    };
    Ok(spec)
}

fn parse_bytes(line: usize, args: &[&str]) -> Result<(usize, usize)> {
    let mut b = None;
    let mut n = None;
    for arg in args {
        let (key, val) = arg
            .split_once('=')
            .ok_or_else(|| Error::parse(line, format!("expected key=value, got {arg:?}")))?;
        let val: usize = val
            .parse()
            .map_err(|_| Error::parse(line, format!("bad count {val:?}")))?;
        match key {
            "b" => b = Some(val),
            "n" => n = Some(val),
            _ => return Err(Error::parse(line, format!("unknown key {key:?}"))),
        }
    }
    match (b, n) {
        (Some(b), Some(n)) if b > 0 && n > 0 => Ok((b, n)),
        _ => Err(Error::parse(line, "expected `bytes b=<b> n=<n>` with positive values")),
    }
}

impl CodeSpec {
    pub fn parse(text: &str) -> Result<CodeSpec> {
        let mut ring: Option<Arc<Ring>> = None;
        let mut geometry: Option<(usize, usize)> = None;
        let mut codes: Vec<Vec<Vec<Elem>>> = vec![Vec::new()];
        let mut marked = false;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            let words: Vec<&str> = content.split_whitespace().collect();
            let Some((&head, args)) = words.split_first() else {
                continue;
            };
            match head {
                "ring" => {
                    if ring.is_some() {
                        return Err(Error::parse(line, "duplicate ring declaration"));
                    }
                    let spec = parse_ring(line, args)?;
                    let r = Ring::new(spec).map_err(|e| Error::parse(line, e.to_string()))?;
                    ring = Some(Arc::new(r));
                }
                "bytes" => {
                    if geometry.is_some() {
                        return Err(Error::parse(line, "duplicate bytes declaration"));
                    }
                    geometry = Some(parse_bytes(line, args)?);
                }
                "code" => {
                    if !args.is_empty() {
                        return Err(Error::parse(line, "`code` takes no arguments"));
                    }
                    // a leading marker names the first code; later ones open a new block
                    if marked || !codes[0].is_empty() {
                        if codes.len() == 2 {
                            return Err(Error::parse(line, "at most two codes per spec"));
                        }
                        codes.push(Vec::new());
                    }
                    marked = true;
                }
                "gen" => {
                    let r = ring
                        .as_ref()
                        .ok_or_else(|| Error::parse(line, "`gen` before `ring`"))?;
                    let (b, n) =
                        geometry.ok_or_else(|| Error::parse(line, "`gen` before `bytes`"))?;
                    if args.len() != b * n {
                        return Err(Error::parse(
                            line,
                            format!("generator has {} entries, expected n*b = {}", args.len(), b * n),
                        ));
                    }
                    let row = args
                        .iter()
                        .map(|s| r.parse_element(s).map_err(|e| Error::parse(line, e.to_string())))
                        .collect::<Result<Vec<_>>>()?;
                    codes.last_mut().expect("at least one block").push(row);
                }
                other => return Err(Error::parse(line, format!("unknown directive {other:?}"))),
            }
        }
        let last = text.lines().count().max(1);
        let ring = ring.ok_or_else(|| Error::parse(last, "missing `ring` declaration"))?;
        let (b, n) = geometry.ok_or_else(|| Error::parse(last, "missing `bytes` declaration"))?;
        Ok(CodeSpec { ring, b, n, codes })
    }

    /// The first code.
    pub fn first(&self, budget: u128) -> Result<LinearCode> {
        self.build(0, budget)
    }

    /// The second code, if the spec declares one.
    pub fn second(&self, budget: u128) -> Result<Option<LinearCode>> {
        if self.codes.len() < 2 {
            return Ok(None);
        }
        self.build(1, budget).map(Some)
    }

    fn build(&self, i: usize, budget: u128) -> Result<LinearCode> {
        LinearCode::span(self.ring.clone(), self.b, self.n, self.codes[i].clone(), budget)
    }
}
