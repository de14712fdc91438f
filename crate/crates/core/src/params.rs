//! Parameter tuples of candidate designs and the admissibility checks that
//! every quasi-symmetric 2-design with intersection numbers 0 and y must pass.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{domain, Result};

/// The five classical parameters `(v, b, r, k, lambda)` of a 2-design.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DesignParams {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
}

impl DesignParams {
    pub const fn new(v: u64, b: u64, r: u64, k: u64, lambda: u64) -> Self {
        DesignParams { v, b, r, k, lambda }
    }

    /// `r(k-1) = lambda(v-1)` and `vr = bk`.
    pub fn identities_hold(&self) -> bool {
        let (v, b, r, k, l) = self.wide();
        k >= 1 && v >= 1 && r * (k - 1) == l * (v - 1) && v * r == b * k
    }

    pub fn is_symmetric(&self) -> bool {
        self.b == self.v
    }

    fn wide(&self) -> (u128, u128, u128, u128, u128) {
        (self.v as u128, self.b as u128, self.r as u128, self.k as u128, self.lambda as u128)
    }
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.v, self.b, self.r, self.k, self.lambda)
    }
}

/// Block intersection numbers `x = 0` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QsProfile {
    y: u64,
}

impl QsProfile {
    pub fn new(y: u64) -> Result<Self> {
        if y < 2 {
            return domain(format!("intersection number y = {y} must be at least 2"));
        }
        Ok(QsProfile { y })
    }

    pub const fn x(&self) -> u64 {
        0
    }

    pub const fn y(&self) -> u64 {
        self.y
    }
}

/// One named check and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Every defining identity holds but `b = v`.
    Symmetric,
    Fail,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.entries.push(CheckEntry { name, passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| !e.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Appends the entries of `other`; the combined report passes only if
    /// both did.
    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    pub fn verdict(&self) -> Verdict {
        if self.passed() {
            return Verdict::Pass;
        }
        let ok = |n: &str| self.get(n).is_some_and(|e| e.passed);
        let symmetric = self.get(SYMMETRIC).is_some_and(|e| !e.passed);
        if symmetric && ok(REPLICATION) && ok(INTERSECTION) && ok(BLOCK_COUNT) {
            Verdict::Symmetric
        } else {
            Verdict::Fail
        }
    }
}

pub const POSITIVE: &str = "positive";
pub const NONTRIVIAL: &str = "nontrivial";
pub const WINDOW: &str = "k-window";
pub const REPLICATION: &str = "replication";
pub const INTERSECTION: &str = "intersection";
pub const DIVISIBILITY: &str = "y-divisibility";
pub const BLOCK_COUNT: &str = "block-count";
pub const ORDERING: &str = "r>k>lambda>1";
pub const LAMBDA_BOUNDS: &str = "y<lambda<=k-1";
pub const RATIO_BOUND: &str = "ratio-bound";
pub const SYMMETRIC: &str = "non-symmetric";

/// `r / gcd(r, lambda)`.
pub fn gcd_ratio(r: u64, lambda: u64) -> Result<u64> {
    if r == 0 || lambda == 0 {
        return domain(format!("gcd_ratio needs positive arguments, got ({r}, {lambda})"));
    }
    Ok(r / r.gcd(&lambda))
}

/// Evaluates the full list of arithmetic conditions on a parameter tuple.
/// Failures are entries in the report, never errors.
pub fn check_admissible(p: &DesignParams, profile: &QsProfile) -> CheckReport {
    let mut rep = CheckReport::default();
    let (v, b, r, k, l) = p.wide();
    let y = profile.y() as u128;

    let positive = v > 0 && b > 0 && r > 0 && k > 0 && l > 0;
    rep.push(POSITIVE, positive, if positive { "" } else { "zero parameter" });
    if !positive {
        return rep;
    }

    rep.push(NONTRIVIAL, 2 < k && k + 1 < v, format!("2 < k={k} < v-1={}", v - 1));
    let window = k < v && (y - 1) * v < k * k - k;
    rep.push(WINDOW, window, format!("k < v < (k^2-k)/(y-1) with k={k}, v={v}, y={y}"));
    let rep_ok = r * (k - 1) == l * (v - 1);
    rep.push(REPLICATION, rep_ok, format!("r(k-1)={} vs lambda(v-1)={}", r * (k - 1), l * (v - 1)));
    let lhs = (y - 1) * (r - 1);
    let rhs = (k - 1) * (l - 1);
    rep.push(INTERSECTION, lhs == rhs, format!("(y-1)(r-1)={lhs} vs (k-1)(lambda-1)={rhs}"));
    let diff = r.abs_diff(l);
    let div_ok = k % y == 0 && diff % y == 0;
    let div_detail = if k % y != 0 {
        format!("y={y} does not divide k={k}")
    } else if diff % y != 0 {
        format!("y={y} does not divide r-lambda={diff}")
    } else {
        String::new()
    };
    rep.push(DIVISIBILITY, div_ok, div_detail);
    rep.push(BLOCK_COUNT, v * r == b * k, format!("vr={} vs bk={}", v * r, b * k));
    let order_ok = r > k && k > l && l > 1;
    rep.push(ORDERING, order_ok, format!("r={r}, k={k}, lambda={l}"));
    rep.push(LAMBDA_BOUNDS, y < l && l < k, format!("y={y}, lambda={l}, k={k}"));
    let ratio = r / r.gcd(&l);
    let bound = 2 * (y - 1) * ratio * ratio;
    rep.push(RATIO_BOUND, v <= bound, format!("v={v} <= 2(y-1)(r/(r,lambda))^2={bound}"));
    let sym_ok = b > v && k < r;
    rep.push(SYMMETRIC, sym_ok, if b == v { "b = v: symmetric, rejected".to_string() } else { format!("b={b}, v={v}, k={k}, r={r}") });
    rep
}

/// True iff `r/(r,lambda)` divides every supplied subdegree.
pub fn subdegree_filter(c: &Candidate, subdegrees: &[u64]) -> Result<bool> {
    if subdegrees.is_empty() {
        return domain("subdegree list is empty");
    }
    if subdegrees.contains(&0) {
        return domain("subdegrees must be positive");
    }
    let ratio = c.ratio();
    Ok(subdegrees.iter().all(|d| d % ratio == 0))
}

pub const STAB_LAMBDA_GCD: &str = "r | lambda(v-1,|G_a|)";
pub const STAB_DIVIDES: &str = "r | |G_a|";
pub const STAB_CUBE: &str = "|G_a|^3 > lambda|G|";

/// Checks a candidate against the order of a point stabilizer (and,
/// optionally, of the whole group) of a flag-transitive action.
pub fn stabilizer_filter(c: &Candidate, stab_order: &BigUint, group_order: Option<&BigUint>) -> CheckReport {
    let p = &c.params;
    let mut rep = CheckReport::default();
    let r = BigUint::from(p.r);
    let lambda = BigUint::from(p.lambda);
    let g = BigUint::from(p.v - 1).gcd(stab_order);
    let prod = &lambda * &g;
    rep.push(STAB_LAMBDA_GCD, (&prod % &r).is_zero(), format!("lambda*gcd(v-1,|G_a|) = {prod}, r = {r}"));
    rep.push(STAB_DIVIDES, (stab_order % &r).is_zero(), format!("|G_a| = {stab_order}, r = {r}"));
    if let Some(go) = group_order {
        let cube = stab_order * stab_order * stab_order;
        rep.push(STAB_CUBE, cube > &lambda * go, format!("|G_a|^3 = {cube}, lambda|G| = {}", &lambda * go));
    }
    rep
}

/// A parameter tuple together with its intersection profile and the ledger
/// of checks run against it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub params: DesignParams,
    pub profile: QsProfile,
    pub ledger: CheckReport,
    /// Set when an external nonexistence result rules the tuple out.
    pub exclusion: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Admissible,
    Symmetric,
    Rejected,
    Excluded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Admissible => "admissible",
            Status::Symmetric => "symmetric",
            Status::Rejected => "rejected",
            Status::Excluded => "excluded",
        })
    }
}

impl Candidate {
    /// Builds the candidate and runs [`check_admissible`] into its ledger.
    pub fn evaluate(params: DesignParams, profile: QsProfile) -> Self {
        let ledger = check_admissible(&params, &profile);
        Candidate { params, profile, ledger, exclusion: None }
    }

    pub fn y(&self) -> u64 {
        self.profile.y()
    }

    pub fn ratio(&self) -> u64 {
        gcd_ratio(self.params.r.max(1), self.params.lambda.max(1)).unwrap_or(1)
    }

    pub fn status(&self) -> Status {
        if self.exclusion.is_some() {
            return Status::Excluded;
        }
        match self.ledger.verdict() {
            Verdict::Pass => Status::Admissible,
            Verdict::Symmetric => Status::Symmetric,
            Verdict::Fail => Status::Rejected,
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.status() == Status::Admissible
    }

    /// Adds extra checks to the ledger.
    pub fn record(&mut self, extra: CheckReport) {
        self.ledger.extend(extra);
    }

    pub fn reason(&self) -> String {
        if let Some(ex) = &self.exclusion {
            return ex.clone();
        }
        if self.ledger.verdict() == Verdict::Symmetric {
            return "b = v: symmetric, rejected".into();
        }
        match self.ledger.first_failure() {
            Some(e) if e.detail.is_empty() => e.name.to_string(),
            Some(e) => format!("{}: {}", e.name, e.detail),
            None => "-".into(),
        }
    }

    /// `(y, v, b, r, k, lambda)`
    pub fn tuple(&self) -> (u64, u64, u64, u64, u64, u64) {
        let p = &self.params;
        (self.y(), p.v, p.b, p.r, p.k, p.lambda)
    }

    pub const TSV_HEADER: &'static str = "y\tv\tb\tr\tk\tlambda\tratio\tstatus\treason";

    /// `y v b r k lambda ratio status reason`, tab separated, no newline.
    pub fn tsv_row(&self) -> String {
        let (y, v, b, r, k, l) = self.tuple();
        let reason = self.reason().replace(['\t', '\n'], " ");
        format!("{y}\t{v}\t{b}\t{r}\t{k}\t{l}\t{}\t{}\t{reason}", self.ratio(), self.status())
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (y, v, b, r, k, l) = self.tuple();
        write!(f, "({y},{v},{b},{r},{k},{l})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(v: u64, b: u64, r: u64, k: u64, l: u64, y: u64) -> Candidate {
        Candidate::evaluate(DesignParams::new(v, b, r, k, l), QsProfile::new(y).unwrap())
    }

    #[test]
    fn gcd_ratio_examples() {
        assert_eq!(gcd_ratio(11, 5).unwrap(), 11);
        assert_eq!(gcd_ratio(46, 10).unwrap(), 23);
        assert_eq!(gcd_ratio(17, 17).unwrap(), 1);
        assert!(gcd_ratio(0, 3).is_err());
    }

    #[test]
    fn admissible_examples() {
        assert_eq!(cand(12, 22, 11, 6, 5, 3).status(), Status::Admissible);
        assert_eq!(cand(22, 77, 21, 6, 5, 2).status(), Status::Admissible);
        let bad = cand(12, 22, 11, 6, 5, 4);
        assert_eq!(bad.status(), Status::Rejected);
        assert!(!bad.ledger.get(DIVISIBILITY).unwrap().passed);
        let sym = cand(45, 45, 12, 12, 3, 3);
        assert_eq!(sym.status(), Status::Symmetric);
        assert!(sym.reason().contains("symmetric"));
    }

    #[test]
    fn profile_rejects_small_y() {
        assert!(QsProfile::new(1).is_err());
        assert_eq!(QsProfile::new(2).unwrap().x(), 0);
    }

    #[test]
    fn subdegree_examples() {
        let c = cand(56, 210, 45, 12, 9, 3);
        assert!(subdegree_filter(&c, &[10, 30, 15]).unwrap());
        let m11 = cand(12, 22, 11, 6, 5, 3);
        assert!(subdegree_filter(&m11, &[11]).unwrap());
        assert!(!subdegree_filter(&m11, &[1]).unwrap());
        assert!(subdegree_filter(&m11, &[]).is_err());
    }

    #[test]
    fn stabilizer_examples() {
        let c = cand(45, 66, 22, 15, 7, 5);
        let rep = stabilizer_filter(&c, &BigUint::from(16u32), None);
        assert!(!rep.get(STAB_DIVIDES).unwrap().passed);
        let c = cand(36, 70, 35, 18, 17, 9);
        assert!(!stabilizer_filter(&c, &BigUint::from(20u32), None).passed());
        let c = cand(12, 22, 11, 6, 5, 3);
        let rep = stabilizer_filter(&c, &BigUint::from(660u32), Some(&BigUint::from(7920u32)));
        assert_eq!(rep.entries.len(), 3);
        assert!(rep.passed());
    }

    #[test]
    fn tsv_row_layout() {
        let row = cand(12, 22, 11, 6, 5, 3).tsv_row();
        assert_eq!(row, "3\t12\t22\t11\t6\t5\t11\tadmissible\t-");
        assert_eq!(row.split('\t').count(), Candidate::TSV_HEADER.split('\t').count());
    }
}
