//! Almost simple groups with alternating socle `A_n`: point stabilizers that
//! are primitive, transitive imprimitive, or intransitive on `n` letters.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{binomial, binomial_u128, factorial, is_prime, linear_divisor_candidates, Poly};
use crate::data::{tsv_rows, DataSource, KNOWN_DESIGNS, ALT_MAXIMALS};
use crate::error::{domain, Error, Result};
use crate::literature::{exclusion_for, load_known_designs, KnownDesign};
use crate::params::{stabilizer_filter, STAB_DIVIDES, Candidate, DesignParams, QsProfile};
use crate::report::{markdown_table, EliminationReport};
use crate::sieve::{enumerate_for_v, Constraint, SearchBox};

/// Non-trivial subdegrees `d_{i+1} = C(l,i) C(n-l,l-i)`, `i = 0..l-1`, of the
/// action of `S_n` on `l`-subsets.
pub fn subset_subdegrees(n: u64, l: u64) -> Result<Vec<u64>> {
    if l == 0 || l >= n {
        return domain(format!("need 1 <= l < n, got n={n}, l={l}"));
    }
    (0..l)
        .map(|i| {
            let d = binomial_u128(l, i).zip(binomial_u128(n - l, l - i)).and_then(|(a, b)| a.checked_mul(b));
            d.and_then(|d| u64::try_from(d).ok())
                .ok_or_else(|| Error::Domain(format!("subdegree overflow at n={n}, l={l}")))
        })
        .collect()
}

/// `A_n` or `S_n` acting on `l`-subsets of `n` letters, `l < n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetAction {
    n: u64,
    l: u64,
}

impl SubsetAction {
    pub fn new(n: u64, l: u64) -> Result<Self> {
        if l == 0 || 2 * l >= n {
            return domain(format!("subset action needs 1 <= l < n/2, got n={n}, l={l}"));
        }
        Ok(SubsetAction { n, l })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn m(&self) -> u64 {
        self.n - self.l
    }

    pub fn v(&self) -> BigUint {
        binomial(self.n, self.l)
    }

    pub fn subdegrees(&self) -> Result<Vec<u64>> {
        subset_subdegrees(self.n, self.l)
    }
}

/// `A_n` or `S_n` acting on partitions of `n = ts` letters into `t` classes
/// of size `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionAction {
    t: u64,
    s: u64,
}

impl PartitionAction {
    pub fn new(t: u64, s: u64) -> Result<Self> {
        if t < 2 || s < 2 {
            return domain(format!("partition action needs t, s >= 2, got t={t}, s={s}"));
        }
        Ok(PartitionAction { t, s })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn n(&self) -> u64 {
        self.t * self.s
    }

    /// `prod_{i=2..t} C(is-1, s-1)`
    pub fn v(&self) -> BigUint {
        (2..=self.t).map(|i| binomial(i * self.s - 1, self.s - 1)).product()
    }

    /// Size of the set of `j`-cyclic partitions: `2^(j-1) C(t,j)` for `s = 2`
    /// and `s^j C(t,j)` for `s >= 3`.
    pub fn cyclic_size(&self, j: u64) -> BigUint {
        let c = binomial(self.t, j);
        if self.s == 2 {
            BigUint::from(2u32).pow((j - 1) as u32) * c
        } else {
            BigUint::from(self.s).pow(j as u32) * c
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroupKind {
    Alternating,
    Symmetric,
    /// One of `M10`, `PGL(2,9)`, `PGammaL(2,9)`; `h_order` is then `|G|`.
    Special,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Alternating => "A_n",
            GroupKind::Symmetric => "S_n",
            GroupKind::Special => "special",
        })
    }
}

/// A large maximal primitive subgroup `H` of `A_n` or `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveCaseRecord {
    pub n: u64,
    pub g_kind: GroupKind,
    pub h_name: String,
    pub h_order: BigUint,
}

impl PrimitiveCaseRecord {
    pub fn group_order(&self) -> BigUint {
        match self.g_kind {
            GroupKind::Alternating => factorial(self.n) / 2u32,
            GroupKind::Symmetric => factorial(self.n),
            GroupKind::Special => self.h_order.clone(),
        }
    }

    /// `|G| / |H|`
    pub fn v(&self) -> BigUint {
        self.group_order() / &self.h_order
    }
}

/// Parses `n g_kind h_name h_order` with `g_kind` in `A`, `S`, `special`.
pub fn load_alt_maximals(text: &str) -> Result<Vec<PrimitiveCaseRecord>> {
    let mut out = Vec::new();
    for (row, f) in tsv_rows(text) {
        let err = |msg: String| Error::Load { row, msg };
        if f.len() != 4 {
            return Err(err(format!("expected 4 columns, found {}", f.len())));
        }
        let n: u64 = f[0].parse().map_err(|_| err(format!("bad degree {:?}", f[0])))?;
        let g_kind = match f[1] {
            "A" => GroupKind::Alternating,
            "S" => GroupKind::Symmetric,
            "special" => GroupKind::Special,
            other => return Err(err(format!("unknown group kind {other:?}"))),
        };
        let h_order: BigUint = f[3].parse().map_err(|_| err(format!("bad order {:?}", f[3])))?;
        if h_order.is_zero() {
            return Err(err("order must be positive".into()));
        }
        let rec = PrimitiveCaseRecord { n, g_kind, h_name: f[2].to_string(), h_order };
        if g_kind != GroupKind::Special && !(rec.group_order() % &rec.h_order).is_zero() {
            return Err(err(format!("{} does not divide |{}{}|", rec.h_order, f[1], n)));
        }
        out.push(rec);
    }
    Ok(out)
}

pub fn embedded_alt_maximals() -> Vec<PrimitiveCaseRecord> {
    load_alt_maximals(&DataSource::embedded().read(ALT_MAXIMALS).expect("embedded")).expect("embedded data parses")
}

fn embedded_known() -> Vec<KnownDesign> {
    load_known_designs(&DataSource::embedded().read(KNOWN_DESIGNS).expect("embedded")).expect("embedded data parses")
}

/// Odd primes among `n-2, n-1, n`, and `(n-2)n` when both factors are prime.
pub fn primitive_divisor_set(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (n.saturating_sub(2)..=n).filter(|&p| p % 2 == 1 && is_prime(p)).collect();
    if n >= 4 && is_prime(n - 2) && is_prime(n) {
        out.push((n - 2) * n);
    }
    out.sort_unstable();
    out
}

/// `floor((n+1)/2)! / 2`
pub fn wielandt_bound(n: u64) -> BigUint {
    factorial(n.div_ceil(2)) / 2u32
}

/// Least point count at which the unrestricted sieve has any solution.
pub fn least_sieve_v(y_max: u64) -> Result<u64> {
    (5..)
        .map(|v| enumerate_for_v(&SearchBox::new(v, 2..=y_max)).map(|h| (v, h.is_empty())))
        .find(|r| !matches!(r, Ok((_, true))))
        .expect("unbounded search")
        .map(|(v, _)| v)
}

/// A feasible `(v, r/(r,lambda))` pair in the primitive case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRow {
    pub v: u64,
    pub n: u64,
    pub divisors: Vec<u64>,
    pub g_kind: GroupKind,
    pub h_name: String,
}

/// Outcome of the primitive case: the feasible rows and the reason every
/// other record was dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveAnalysis {
    pub rows: Vec<PrimitiveRow>,
    pub report: EliminationReport,
}

/// Applies the divisor rule and the bounds
/// `floor((n+1)/2)!/2 <= v <= 2(y-1) max_div^2` to each record, then sieves
/// every feasible `v` with `r/(r,lambda)` restricted to the divisor set.
///
/// Odd `v` is routed to the odd-degree case (`v = 15`, sieved directly) and
/// `v` below the least point count with any sieve solution is dropped.
pub fn primitive_analysis(catalog: &[PrimitiveCaseRecord], y_max: u64) -> Result<PrimitiveAnalysis> {
    let mut rep = EliminationReport::new("alternating socle, primitive stabilizer");
    let v_least = least_sieve_v(y_max)?;
    rep.bound("least v with sieve solutions", v_least);
    let mut rows = Vec::new();
    let mut odd = Vec::new();
    for rec in catalog.iter().filter(|r| r.g_kind != GroupKind::Special) {
        let label = format!("({}, {}{}, {})", rec.n, if rec.g_kind == GroupKind::Alternating { "A" } else { "S" }, rec.n, rec.h_name);
        let v = rec.v();
        let divs = primitive_divisor_set(rec.n);
        let Some(&max_div) = divs.last() else {
            rep.reject(label, "no admissible value for r/(r,lambda)");
            continue;
        };
        let w = wielandt_bound(rec.n);
        if v < w {
            rep.reject(label, format!("v={v} below the Wielandt bound {w}"));
            continue;
        }
        let upper = BigUint::from(2 * (y_max - 1)) * BigUint::from(max_div).pow(2);
        if v > upper {
            rep.reject(label, format!("v={v} exceeds 2(y-1)*{max_div}^2={upper}"));
            continue;
        }
        let v = v.to_u64().ok_or_else(|| Error::Domain(format!("v={v} too large")))?;
        if v % 2 == 1 {
            odd.push(v);
            rep.reject(label, format!("v={v} is odd: odd-degree case"));
            continue;
        }
        if v < v_least {
            rep.reject(label, format!("v={v} below {v_least}: sieve empty"));
            continue;
        }
        rows.push(PrimitiveRow { v, n: rec.n, divisors: divs, g_kind: rec.g_kind, h_name: rec.h_name.clone() });
    }
    rows.sort_by_key(|a| (a.v, a.n, a.g_kind));
    odd.sort_unstable();
    odd.dedup();
    for v in odd {
        let hits = enumerate_for_v(&SearchBox::new(v, 2..=y_max))?;
        rep.bound(format!("odd-degree sieve v={v}"), hits.len());
        rep.survivors.extend(hits);
    }
    let mut vs: Vec<u64> = rows.iter().map(|r| r.v).collect();
    vs.sort_unstable();
    vs.dedup();
    for v in vs {
        let mut allowed: Vec<u64> = rows.iter().filter(|r| r.v == v).flat_map(|r| r.divisors.clone()).collect();
        allowed.sort_unstable();
        allowed.dedup();
        let hits = enumerate_for_v(&SearchBox::new(v, 2..=y_max).with(Constraint::RatioIn(allowed)))?;
        rep.bound(format!("sieve v={v}"), hits.len());
        rep.survivors.extend(hits);
    }
    Ok(PrimitiveAnalysis { rows, report: rep })
}

/// The feasible rows of the primitive case.
pub fn primitive_candidates(catalog: &[PrimitiveCaseRecord], y_max: u64) -> Result<Vec<PrimitiveRow>> {
    Ok(primitive_analysis(catalog, y_max)?.rows)
}

pub const PRIMITIVE_HEADERS: [&str; 5] = ["v", "n", "r/(r,lambda)", "G", "H"];

pub fn primitive_markdown(rows: &[PrimitiveRow]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.v.to_string(),
                r.n.to_string(),
                r.divisors.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
                r.g_kind.to_string(),
                r.h_name.clone(),
            ]
        })
        .collect();
    markdown_table(&PRIMITIVE_HEADERS, &body)
}

fn double_factorial_odd(t: u64) -> BigUint {
    (1..=t).map(|i| BigUint::from(2 * i - 1)).product()
}

/// `(t, s)` with `s >= 3` and `(t!)^(s-1) < (y-1) s^4 t^2 (t-1)^2 / 2`.
pub fn partition_pairs_coarse(y_max: u64) -> Vec<(u64, u64)> {
    let bound = |t: u64, s: u64| {
        BigUint::from(y_max - 1) * BigUint::from(s).pow(4) * BigUint::from(t * t * (t - 1) * (t - 1))
    };
    let holds = |t: u64, s: u64| factorial(t).pow((s - 1) as u32) * 2u32 < bound(t, s);
    let mut out = Vec::new();
    for t in 2.. {
        if !holds(t, 3) {
            break;
        }
        for s in 3.. {
            if !holds(t, s) {
                break;
            }
            out.push((t, s));
        }
    }
    out
}

/// Pairs from [`partition_pairs_coarse`] whose exact `v` satisfies
/// `v <= (y-1) s^4 t^2 (t-1)^2 / 2`.
pub fn partition_pairs_exact(y_max: u64) -> Vec<(u64, u64)> {
    partition_pairs_coarse(y_max)
        .into_iter()
        .filter(|&(t, s)| {
            let v = PartitionAction { t, s }.v();
            v * 2u32 <= BigUint::from(y_max - 1) * BigUint::from(s).pow(4) * BigUint::from(t * t * (t - 1) * (t - 1))
        })
        .collect()
}

/// Transitive imprimitive stabilizer `(S_s wr S_t) cap G`.
pub fn imprimitive_partition_scan(y_max: u64) -> Result<EliminationReport> {
    if !(2..=10).contains(&y_max) {
        return domain(format!("y_max must lie in 2..=10, got {y_max}"));
    }
    let mut rep = EliminationReport::new("alternating socle, imprimitive stabilizer");
    // s = 2: v = (2t-1)!!, d_2 = t(t-1)
    let mut s2 = Vec::new();
    for t in 3.. {
        let v = double_factorial_odd(t);
        let d = BigUint::from(t * (t - 1));
        if v > BigUint::from(2 * (y_max - 1)) * &d * &d {
            // v grows by 2t+1 per step, the bound by at most 4
            rep.bound("s=2 t_max", t - 1);
            break;
        }
        s2.push((t, v.to_u64().expect("small"), t * (t - 1)));
    }
    rep.bound("s=2 v", s2.iter().map(|x| x.1.to_string()).collect::<Vec<_>>().join(","));
    for (t, v, d) in s2 {
        let hits = enumerate_for_v(&SearchBox::new(v, 2..=y_max).with(Constraint::RatioDivides(d)))?;
        if hits.is_empty() {
            rep.reject(format!("s=2 t={t} v={v}"), "sieve empty");
        }
        rep.survivors.extend(hits);
    }
    let coarse = partition_pairs_coarse(y_max);
    let exact = partition_pairs_exact(y_max);
    rep.bound("s>=3 pairs (t! bound)", coarse.len());
    rep.bound("s>=3 pairs (exact v)", exact.len());
    for &(t, s) in coarse.iter().filter(|p| !exact.contains(p)) {
        rep.reject(format!("t={t} s={s}"), "exact v exceeds the bound");
    }
    for (t, s) in exact {
        let v = PartitionAction { t, s }.v();
        let v = v.to_u64().ok_or_else(|| Error::Domain(format!("v={v} too large")))?;
        let d2 = s * s * t * (t - 1) / 2;
        let hits = enumerate_for_v(&SearchBox::new(v, 2..=y_max).with(Constraint::RatioDivides(d2)))?;
        if hits.is_empty() {
            rep.reject(format!("t={t} s={s} v={v}"), "sieve empty");
        }
        rep.survivors.extend(hits);
    }
    Ok(rep)
}

/// `gcd(2(n-2), C(n-2, 2))`: `(n-2)/2`, `n-2`, `2(n-2)` for `n` even,
/// `n = 1 mod 4`, `n = 3 mod 4`.
pub fn l2_ratio_divisor(n: u64) -> u64 {
    match n % 4 {
        0 | 2 => (n - 2) / 2,
        1 => n - 2,
        _ => 2 * (n - 2),
    }
}

/// One value of `n` examined in the `l = 2` analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L2Outcome {
    pub n: u64,
    pub v: u64,
    /// `(k, r, lambda, b)`, each present when integral.
    pub k: Option<u64>,
    pub r: Option<u64>,
    pub lambda: Option<u64>,
    pub b: Option<u64>,
    pub candidate: Option<Candidate>,
    pub reason: String,
}

impl L2Outcome {
    /// `(y, n, v, b, r, k, lambda)` when all values are integral.
    pub fn tuple(&self, y: u64) -> Option<(u64, u64, u64, u64, u64, u64, u64)> {
        Some((y, self.n, self.v, self.b?, self.r?, self.k?, self.lambda?))
    }
}

/// The `l = 2` analysis for one `(u, y)`, where `r/lambda = 2(n-2)/u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L2Branch {
    pub u: u64,
    pub y: u64,
    /// `lambda = num(n) / den(n)`
    pub lambda_num: Poly,
    pub lambda_den: Poly,
    /// Supremum of `lambda` over admissible `n` when it does not exceed `y`.
    pub lambda_sup: Option<BigRational>,
    pub n_candidates: Vec<u64>,
    pub outcomes: Vec<L2Outcome>,
}

impl L2Branch {
    pub fn admissible(&self) -> impl Iterator<Item = &Candidate> {
        self.outcomes.iter().filter_map(|o| o.candidate.as_ref()).filter(|c| c.is_admissible())
    }
}

fn l2_n_ok(u: u64, n: u64) -> bool {
    n >= 5 && (u.is_multiple_of(2) || n % 4 == 3) && ((n + 1) * u).is_multiple_of(4)
}

/// Solves `r(k-1) = lambda(v-1)`, `(y-1)(r-1) = (k-1)(lambda-1)` with
/// `v = n(n-1)/2`, `k = (n+1)u/4 + 1`, `r = 2(n-2)lambda/u`:
///
/// ```text
/// lambda = u((n+1)u - 4(y-1)) / ((n+1)u^2 - 8(y-1)(n-2))
/// b      = 4n(n-1)(n-2) lambda / (u((n+1)u + 4))
/// ```
pub fn l2_branch(u: u64, y: u64) -> Result<L2Branch> {
    if !(3..=11).contains(&u) || y < 2 {
        return domain(format!("need 3 <= u <= 11 and y >= 2, got u={u}, y={y}"));
    }
    let (ui, yi) = (u as i128, y as i128);
    let p = Poly::linear(ui * ui, ui * ui - 4 * ui * (yi - 1));
    let q = Poly::linear(ui * ui - 8 * (yi - 1), ui * ui + 16 * (yi - 1));
    let mut branch = L2Branch {
        u,
        y,
        lambda_num: p.clone(),
        lambda_den: q.clone(),
        lambda_sup: None,
        n_candidates: Vec::new(),
        outcomes: Vec::new(),
    };
    // lambda is a Moebius function of n, monotone where q > 0, so on
    // n >= n_first its supremum is lambda(n_first) or the limit
    let n_first = (5..).find(|&n| l2_n_ok(u, n)).expect("exists") as i128;
    if q.coeff(1) > 0 && q.eval(n_first) > 0 {
        let at_first = BigRational::new(p.eval(n_first).into(), q.eval(n_first).into());
        let limit = BigRational::new(p.coeff(1).into(), q.coeff(1).into());
        let sup = at_first.max(limit);
        if sup <= BigRational::from_integer(y.into()) {
            branch.lambda_sup = Some(sup);
        }
    }
    let from_lambda = if q.degree() == 1 { linear_divisor_candidates(&p, q.coeff(1), q.coeff(0), 5) } else { None };
    let pool: Vec<i128> = match from_lambda {
        Some(xs) => xs,
        None => {
            let n = Poly::linear(1, 0);
            let num = Poly::new(vec![4]).mul(&n).mul(&Poly::linear(1, -1)).mul(&Poly::linear(1, -2)).mul(&p);
            linear_divisor_candidates(&num, ui, ui + 4, 5)
                .ok_or_else(|| Error::Domain(format!("no finite n list for u={u}, y={y}")))?
        }
    };
    branch.n_candidates = pool.iter().filter_map(|&x| u64::try_from(x).ok()).collect();
    for &n in &branch.n_candidates {
        branch.outcomes.push(l2_outcome(u, y, n, &p, &q));
    }
    Ok(branch)
}

fn l2_outcome(u: u64, y: u64, n: u64, p: &Poly, q: &Poly) -> L2Outcome {
    let v = if n < 1 << 32 { n * (n - 1) / 2 } else { u64::MAX };
    let mut out = L2Outcome { n, v, k: None, r: None, lambda: None, b: None, candidate: None, reason: String::new() };
    if v == u64::MAX {
        out.reason = "v exceeds 64 bits".into();
        return out;
    }
    if !l2_n_ok(u, n) {
        out.reason = "k is not an integer".into();
        return out;
    }
    let k = (n + 1) * u / 4 + 1;
    out.k = Some(k);
    let (pn, qn) = (p.eval(n as i128), q.eval(n as i128));
    if qn <= 0 || pn <= 0 || pn % qn != 0 {
        out.reason = "lambda is not a positive integer".into();
        return out;
    }
    let lambda = (pn / qn) as u64;
    out.lambda = Some(lambda);
    if !(2 * (n - 2) * lambda).is_multiple_of(u) {
        out.reason = "r is not an integer".into();
        return out;
    }
    let r = 2 * (n - 2) * lambda / u;
    out.r = Some(r);
    let vr = v as u128 * r as u128;
    if !vr.is_multiple_of(k as u128) {
        out.reason = format!("b is not an integer (k={k}, r={r}, v={v})");
        return out;
    }
    let Ok(b) = u64::try_from(vr / k as u128) else {
        out.reason = "b exceeds 64 bits".into();
        return out;
    };
    out.b = Some(b);
    let cand = Candidate::evaluate(DesignParams::new(v, b, r, k, lambda), QsProfile::new(y).expect("y >= 2"));
    out.reason = cand.reason();
    out.candidate = Some(cand);
    out
}

/// All `(u, y)` branches with `u^2 < 16(y-1)`.
pub fn l2_branches(y_max: u64) -> Result<Vec<L2Branch>> {
    let mut out = Vec::new();
    for u in 3..=11u64 {
        for y in 2..=y_max {
            if u * u < 16 * (y - 1) {
                out.push(l2_branch(u, y)?);
            }
        }
    }
    Ok(out)
}

/// `m` with `l < m` and `C(l+m, l) <= 2(y-1) l^2 m^2`.
pub fn subset_m_range(l: u64, y: u64) -> Vec<u64> {
    // C(l+m, l) >= m^3/6 for l >= 3, so m <= 12(y-1) l^2 suffices
    let cap = 12 * (y - 1) * l * l + l + 1;
    (l + 1..=cap)
        .filter(|&m| binomial(l + m, l) <= BigUint::from(2 * (y - 1) * l * l * m * m))
        .collect()
}

/// Intransitive stabilizer `(S_l x S_m) cap G`, `n = l + m`, `l < m`.
pub fn intransitive_scan(y_max: u64) -> Result<EliminationReport> {
    intransitive_scan_with(y_max, &embedded_known())
}

pub fn intransitive_scan_with(y_max: u64, known: &[KnownDesign]) -> Result<EliminationReport> {
    if !(2..=10).contains(&y_max) {
        return domain(format!("y_max must lie in 2..=10, got {y_max}"));
    }
    let mut rep = EliminationReport::new("alternating socle, intransitive stabilizer");

    // l = 1: G is k-transitive, so C(n,k) <= n(n-1)/k would be needed
    const L1_N_MAX: u64 = 200;
    let l1_holds = (5..=L1_N_MAX)
        .any(|n| (4..=n.saturating_sub(2)).any(|k| binomial(n, k) * BigUint::from(k) <= BigUint::from(n * (n - 1))));
    rep.bound("l=1 n checked", format!("5..={L1_N_MAX}"));
    if l1_holds {
        rep.note("l=1: C(n,k) <= n(n-1)/k holds somewhere");
    } else {
        rep.reject("l=1", "C(n,k) > n(n-1)/k for all 4 <= k <= n-2");
    }

    for br in l2_branches(y_max)? {
        let tag = format!("l=2 u={} y={}", br.u, br.y);
        if let Some(sup) = &br.lambda_sup {
            rep.reject(tag, format!("lambda <= {sup} <= y"));
            continue;
        }
        if br.outcomes.is_empty() {
            rep.reject(tag, "no n survives the divisor condition");
            continue;
        }
        let mut non_integral = 0usize;
        for o in &br.outcomes {
            match (&o.candidate, o.lambda) {
                (Some(c), _) if c.is_admissible() => rep.survivors.push(c.clone()),
                (Some(c), _) => rep.reject(format!("{tag} n={} {c}", o.n), o.reason.clone()),
                (None, Some(_)) => rep.reject(format!("{tag} n={}", o.n), o.reason.clone()),
                (None, None) => non_integral += 1,
            }
        }
        if non_integral > 0 {
            rep.reject(format!("{tag}: {non_integral} other n"), "k or lambda not integral");
        }
    }

    for l in 3..=9u64 {
        for y in 2..=y_max {
            for m in subset_m_range(l, y) {
                let Some(v) = binomial_u128(l + m, l).and_then(|v| u64::try_from(v).ok()) else {
                    return domain(format!("C({}, {l}) too large", l + m));
                };
                let d1 = binomial_u128(m, l).expect("fits") as u64;
                let a = d1.gcd(&(l * m));
                if v as u128 > 2 * (y as u128 - 1) * (a as u128).pow(2) {
                    continue;
                }
                let hits = enumerate_for_v(&SearchBox::new(v, y..=y).with(Constraint::RatioDivides(a)))?;
                for mut c in hits {
                    c.exclusion = exclusion_for(&c, known);
                    rep.note(format!("l={l} m={m} n={} a={a}: {c}", l + m));
                    rep.survivors.push(c);
                }
            }
        }
    }
    Ok(rep)
}

/// The three almost simple groups with socle `A_6` other than `A_6`, `S_6`,
/// and their maximal subgroups of index 45, 36 and 10.
pub fn n6_special_case() -> Result<EliminationReport> {
    n6_special_case_with(&embedded_alt_maximals())
}

pub fn n6_special_case_with(catalog: &[PrimitiveCaseRecord]) -> Result<EliminationReport> {
    let mut rep = EliminationReport::new("socle A6, G in {M10, PGL(2,9), PGammaL(2,9)}");
    let groups: Vec<&PrimitiveCaseRecord> = catalog.iter().filter(|r| r.g_kind == GroupKind::Special).collect();
    if groups.is_empty() {
        return Err(Error::Load { row: 0, msg: "no special rows for n = 6".into() });
    }
    for v in [45u64, 36, 10] {
        let hits = enumerate_for_v(&SearchBox::standard(v))?;
        if hits.is_empty() {
            rep.reject(format!("v={v}"), "sieve empty");
        }
        for c in hits {
            let mut all_fail = true;
            for g in &groups {
                let go = g.group_order();
                let (stab, rem) = go.div_rem(&BigUint::from(v));
                if !rem.is_zero() {
                    return domain(format!("{v} does not divide |{}|", g.h_name));
                }
                let check = stabilizer_filter(&c, &stab, Some(&go));
                if check.passed() {
                    all_fail = false;
                    rep.note(format!("{c} with {} passes", g.h_name));
                } else {
                    let f = check.get(STAB_DIVIDES).filter(|e| !e.passed).or(check.first_failure()).expect("failed");
                    rep.reject(format!("{c} in {} (|H|={stab})", g.h_name), format!("{}: {}", f.name, f.detail));
                }
            }
            if !all_fail {
                rep.survivors.push(c);
            }
        }
    }
    Ok(rep)
}

/// Everything for the alternating socle.
#[derive(Debug, Clone)]
pub struct AltSummary {
    pub n6: EliminationReport,
    pub primitive: PrimitiveAnalysis,
    pub imprimitive: EliminationReport,
    pub intransitive: EliminationReport,
}

pub fn alt_summary(catalog: &[PrimitiveCaseRecord], known: &[KnownDesign], y_max: u64) -> Result<AltSummary> {
    Ok(AltSummary {
        n6: n6_special_case_with(catalog)?,
        primitive: primitive_analysis(catalog, y_max)?,
        imprimitive: imprimitive_partition_scan(y_max)?,
        intransitive: intransitive_scan_with(y_max, known)?,
    })
}
