//! Exhaustive parameter sieve at a fixed point count.
//!
//! For fixed `(v, y, k)` the two identities `r(k-1) = lambda(v-1)` and
//! `(y-1)(r-1) = (k-1)(lambda-1)` are linear in `(r, lambda)` and have the
//! unique solution
//!
//! ```text
//! lambda = (k-1)(k-y) / D,   r = (k-y)(v-1) / D,   D = (k-1)^2 - (y-1)(v-1)
//! ```
//!
//! so the search is a single loop over `k`. The window `k < v`,
//! `(y-1)v < k^2 - k` bounds it from below and `lambda >= 2`, equivalent to
//! `(k-1)(k+y-2) <= 2(y-1)(v-1)`, from above.

use std::ops::RangeInclusive;

use crate::error::{domain, Result};
use crate::params::{Candidate, CheckReport, DesignParams, QsProfile, Status, LAMBDA_BOUNDS, ORDERING};

/// Extra restriction on a sieve hit, typically coming from a group action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// `r/(r,lambda)` divides the value.
    RatioDivides(u64),
    /// `r/(r,lambda)` equals the value.
    RatioEquals(u64),
    /// `r/(r,lambda)` is one of the listed values.
    RatioIn(Vec<u64>),
    /// `r` divides `lambda` times the value.
    RDividesLambdaTimes(u64),
}

impl Constraint {
    fn name(&self) -> &'static str {
        match self {
            Constraint::RatioDivides(_) => "ratio | d",
            Constraint::RatioEquals(_) => "ratio = d",
            Constraint::RatioIn(_) => "ratio in set",
            Constraint::RDividesLambdaTimes(_) => "r | lambda*d",
        }
    }

    pub fn check(&self, c: &Candidate) -> (bool, String) {
        let ratio = c.ratio();
        match self {
            Constraint::RatioDivides(d) => (*d % ratio == 0, format!("r/(r,lambda)={ratio}, d={d}")),
            Constraint::RatioEquals(d) => (ratio == *d, format!("r/(r,lambda)={ratio}, required {d}")),
            Constraint::RatioIn(set) => (set.contains(&ratio), format!("r/(r,lambda)={ratio}, allowed {set:?}")),
            Constraint::RDividesLambdaTimes(d) => {
                let prod = c.params.lambda as u128 * *d as u128;
                (prod.is_multiple_of(c.params.r as u128), format!("lambda*d={prod}, r={}", c.params.r))
            }
        }
    }
}

/// A point count together with the range of `y` to scan and optional
/// constraints on the hits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBox {
    pub v: u64,
    pub y_range: RangeInclusive<u64>,
    pub constraints: Vec<Constraint>,
}

impl SearchBox {
    pub fn new(v: u64, y_range: RangeInclusive<u64>) -> Self {
        SearchBox { v, y_range, constraints: Vec::new() }
    }

    /// All `y` in 2..=10.
    pub fn standard(v: u64) -> Self {
        Self::new(v, 2..=10)
    }

    pub fn with(mut self, c: Constraint) -> Self {
        self.constraints.push(c);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.v < 5 {
            return domain(format!("v = {} is below 5", self.v));
        }
        if self.y_range.is_empty() {
            return domain("empty y range");
        }
        if *self.y_range.start() < 2 {
            return domain("y range must start at 2 or above");
        }
        Ok(())
    }
}

/// Everything the sieve produced at one point count: the admitted candidates
/// and the integral solutions it rejected, each with its ledger.
#[derive(Debug, Clone, Default)]
pub struct SieveOutcome {
    pub admitted: Vec<Candidate>,
    pub rejected: Vec<Candidate>,
}

impl SieveOutcome {
    pub fn symmetric(&self) -> impl Iterator<Item = &Candidate> {
        self.rejected.iter().filter(|c| c.status() == Status::Symmetric)
    }
}

/// Integral solution of the two identities at `(v, y, k)`, if any, with
/// `b` rounded down when it is not integral (the ledger records that).
fn solve(v: u64, y: u64, k: u64) -> Option<DesignParams> {
    if k <= y {
        return None;
    }
    let (v, y, k) = (v as u128, y as u128, k as u128);
    let km1 = k - 1;
    let load = (y - 1) * (v - 1);
    if km1 * km1 <= load {
        return None;
    }
    let den = km1 * km1 - load;
    let lam_num = km1 * (k - y);
    let r_num = (k - y) * (v - 1);
    if lam_num % den != 0 || r_num % den != 0 {
        return None;
    }
    let lambda = lam_num / den;
    let r = r_num / den;
    let b = v * r / k;
    Some(DesignParams::new(v as u64, b as u64, r as u64, k as u64, lambda as u64))
}

/// Runs the sieve and keeps the rejected integral solutions.
pub fn sieve_report(sbox: &SearchBox) -> Result<SieveOutcome> {
    sbox.validate()?;
    let v = sbox.v;
    let mut out = SieveOutcome::default();
    for y in sbox.y_range.clone() {
        let profile = QsProfile::new(y)?;
        let load = (y as u128 - 1) * v as u128;
        // smallest k with k^2 - k > (y-1)v
        let mut k = ((load as f64).sqrt() as u128).max(3);
        while k > 3 && (k - 1) * (k - 2) > load {
            k -= 1;
        }
        while k * k - k <= load {
            k += 1;
        }
        let cap = 2 * (y as u128 - 1) * (v as u128 - 1);
        while (k as u64) < v {
            if (k - 1) * (k + y as u128 - 2) > cap {
                break;
            }
            if let Some(params) = solve(v, y, k as u64) {
                let mut c = Candidate::evaluate(params, profile);
                if c.is_admissible() && !sbox.constraints.is_empty() {
                    let mut extra = CheckReport::default();
                    for con in &sbox.constraints {
                        let (ok, detail) = con.check(&c);
                        extra.push(con.name(), ok, detail);
                    }
                    c.record(extra);
                }
                if c.is_admissible() {
                    out.admitted.push(c);
                } else if params.lambda >= 2 {
                    out.rejected.push(c);
                }
            }
            k += 1;
        }
    }
    Ok(out)
}

/// All admissible candidates at `box.v`, ordered by `(y, k)`.
pub fn enumerate_for_v(sbox: &SearchBox) -> Result<Vec<Candidate>> {
    Ok(sieve_report(sbox)?.admitted)
}

/// Integral solutions with `lambda >= k` that fail nothing else: `r > k`,
/// `r > lambda > 1`, every other admissibility check and every constraint
/// of the box hold. These are not designs of the family; callers use them to
/// surface tuples that only a weaker ordering would admit.
pub fn relaxed_lambda_hits(sbox: &SearchBox) -> Result<Vec<Candidate>> {
    let out = sieve_report(sbox)?;
    let mut hits = Vec::new();
    for mut c in out.rejected {
        let p = c.params;
        if !(p.lambda >= p.k && p.r > p.k && p.r > p.lambda) {
            continue;
        }
        if c.ledger.entries.iter().any(|e| !e.passed && e.name != ORDERING && e.name != LAMBDA_BOUNDS) {
            continue;
        }
        let mut extra = CheckReport::default();
        for con in &sbox.constraints {
            let (ok, detail) = con.check(&c);
            extra.push(con.name(), ok, detail);
        }
        if extra.passed() {
            c.record(extra);
            hits.push(c);
        }
    }
    Ok(hits)
}
