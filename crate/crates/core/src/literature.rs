//! Existence and nonexistence results taken from the literature. They are
//! applied as flags on candidate tuples, never re-proved.

use crate::data::tsv_rows;
use crate::error::{Error, Result};
use crate::params::Candidate;

/// Reference for the classification when `gcd(r, lambda) = 1`.
pub const COPRIME_REFERENCE: &str = "[Zhan2016] Thm 1";
/// Reference for `y = 2` with `lambda` not dividing `r`.
pub const Y2_REFERENCE: &str = "[Zhang2023] Thm 2";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Existence {
    Exists,
    Nonexistent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownDesign {
    pub existence: Existence,
    pub tuple: (u64, u64, u64, u64, u64, u64),
    pub reference: String,
}

/// Parses `status y v b r k lambda reference`.
pub fn load_known_designs(text: &str) -> Result<Vec<KnownDesign>> {
    let mut out = Vec::new();
    for (row, f) in tsv_rows(text) {
        let err = |msg: String| Error::Load { row, msg };
        if f.len() != 8 {
            return Err(err(format!("expected 8 columns, found {}", f.len())));
        }
        let existence = match f[0] {
            "exists" => Existence::Exists,
            "nonexistent" => Existence::Nonexistent,
            other => return Err(err(format!("unknown status {other:?}"))),
        };
        let mut n = [0u64; 6];
        for (i, slot) in n.iter_mut().enumerate() {
            *slot = f[i + 1].parse().map_err(|_| err(format!("bad integer {:?}", f[i + 1])))?;
        }
        out.push(KnownDesign {
            existence,
            tuple: (n[0], n[1], n[2], n[3], n[4], n[5]),
            reference: f[7].to_string(),
        });
    }
    Ok(out)
}

/// The reason a tuple is ruled out by a published result, if any.
pub fn exclusion_for(c: &Candidate, known: &[KnownDesign]) -> Option<String> {
    let t = c.tuple();
    if let Some(k) = known.iter().find(|k| k.tuple == t) {
        return match k.existence {
            Existence::Nonexistent => Some(format!("excluded by {}", k.reference)),
            Existence::Exists => None,
        };
    }
    let p = &c.params;
    if c.y() == 2 && !p.r.is_multiple_of(p.lambda) {
        return Some(format!("lambda does not divide r; excluded by {Y2_REFERENCE}"));
    }
    if num_integer::gcd(p.r, p.lambda) == 1 {
        return Some(format!("(r,lambda)=1 and not in the classification; excluded by {COPRIME_REFERENCE}"));
    }
    None
}
