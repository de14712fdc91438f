//! Bounds that rule out the twisted wreath, simple diagonal and product
//! action types of primitive groups.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{factorial, linear_divisor_candidates, Poly};
use crate::data::tsv_rows;
use crate::error::{domain, Error, Result};
use crate::params::{Candidate, DesignParams, QsProfile};
use crate::report::{markdown_table, EliminationReport};
use crate::sieve::{enumerate_for_v, Constraint, SearchBox};

/// A non-abelian simple group known by its order and the order of its outer
/// automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGroupRecord {
    /// Primary name followed by alternative names.
    pub names: Vec<String>,
    pub order: u128,
    pub out_order: u64,
}

impl SimpleGroupRecord {
    pub fn name(&self) -> &str {
        &self.names[0]
    }

    pub fn is_called(&self, name: &str) -> bool {
        self.names.iter().any(|n| n == name)
    }
}

impl fmt::Display for SimpleGroupRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a `PSL(2,q)` label and returns `q`.
fn psl2_field_size(name: &str) -> Option<u128> {
    name.strip_prefix("PSL(2,")?.strip_suffix(')')?.parse().ok()
}

/// Loads the simple group catalog (`name order out_order`). Names may carry
/// aliases joined by `=`. `PSL(2,q)` orders are checked against
/// `q(q^2-1)/gcd(2,q-1)`.
pub fn load_simple_groups(text: &str) -> Result<Vec<SimpleGroupRecord>> {
    let mut out = Vec::new();
    for (row, f) in tsv_rows(text) {
        let err = |msg: String| Error::Load { row, msg };
        if f.len() != 3 {
            return Err(err(format!("expected 3 columns, found {}", f.len())));
        }
        let order: u128 = f[1].parse().map_err(|_| err(format!("bad order {:?}", f[1])))?;
        let out_order: u64 = f[2].parse().map_err(|_| err(format!("bad out order {:?}", f[2])))?;
        if order < 60 {
            return Err(err(format!("order {order} is below 60")));
        }
        if out_order == 0 {
            return Err(err("out order must be positive".into()));
        }
        let names: Vec<String> = f[0].split('=').map(str::to_string).collect();
        for q in names.iter().filter_map(|n| psl2_field_size(n)) {
            let expect = q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 };
            if expect != order {
                return Err(err(format!("PSL(2,{q}) has order {expect}, file says {order}")));
            }
        }
        out.push(SimpleGroupRecord { names, order, out_order });
    }
    Ok(out)
}

/// `|T|^m / (2 m^2 (|T|-1)^2) + 1`, the least `y` compatible with a twisted
/// wreath action of `T^m`.
pub fn twisted_wreath_y_min(t_order: u128, m: u32) -> Result<BigRational> {
    if m < 6 {
        return domain(format!("twisted wreath needs m >= 6, got {m}"));
    }
    if t_order < 60 {
        return domain(format!("|T| must be at least 60, got {t_order}"));
    }
    let t = BigUint::from(t_order);
    let num = t.pow(m);
    let tm1 = BigUint::from(t_order - 1);
    let den = BigUint::from(2u32 * m * m) * &tm1 * &tm1;
    let q = BigRational::new(num.into(), den.into());
    Ok(q + BigRational::one())
}

/// Twisted wreath case at `|T| = 60, m = 6`: the smallest possible bound.
pub fn twisted_report(y_max: u64) -> Result<EliminationReport> {
    let mut rep = EliminationReport::new("twisted wreath");
    let base = twisted_wreath_y_min(60, 6)?;
    let floor = base.to_integer();
    rep.bound("y_min(|T|=60, m=6)", format!("{base} > {floor}"));
    rep.bound("y_min lower bound", format!("> {floor}"));
    let cap = BigRational::from_integer(y_max.into());
    if base > cap {
        rep.reject("T^m with m >= 6, |T| >= 60", format!("needs y >= {floor} > {y_max}"));
    } else {
        rep.note("bound does not exceed the y cap");
    }
    Ok(rep)
}

fn big(x: u128) -> BigUint {
    BigUint::from(x)
}

/// `|T|^(m-1) <= 2(y-1) m^2 (|T|-1)^2`
pub fn sd1_holds(t: &SimpleGroupRecord, m: u32, y_max: u64) -> bool {
    let lhs = big(t.order).pow(m - 1);
    let rhs = big(2 * (y_max as u128 - 1) * (m as u128).pow(2)) * big(t.order - 1).pow(2);
    lhs <= rhs
}

/// `|T|^(m-1) <= 2(y-1) |Out(T)|^2 (m!)^2`
pub fn sd2_holds(t: &SimpleGroupRecord, m: u32, y_max: u64) -> bool {
    let lhs = big(t.order).pow(m - 1);
    let mf = factorial(m as u64);
    let rhs = big(2 * (y_max as u128 - 1)) * big(t.out_order as u128).pow(2) * &mf * &mf;
    lhs <= rhs
}

/// Largest `m` allowed by the first diagonal bound for the smallest simple
/// group, `|T| = 60`.
pub fn diagonal_m_max(y_max: u64) -> u32 {
    let a5 = SimpleGroupRecord { names: vec!["A5".into()], order: 60, out_order: 2 };
    (2..64).take_while(|&m| sd1_holds(&a5, m, y_max)).last().unwrap_or(1)
}

/// Groups with `|T| <= 400 |Out(T)|^2`.
pub fn small_out_filter(catalog: &[SimpleGroupRecord]) -> Vec<SimpleGroupRecord> {
    catalog
        .iter()
        .filter(|t| t.order <= 400 * (t.out_order as u128).pow(2))
        .cloned()
        .collect()
}

/// Pairs `(T, m)` with `m` in `2..=4` passing both diagonal bounds.
pub fn diagonal_feasible(y_max: u64, catalog: &[SimpleGroupRecord]) -> Result<Vec<(SimpleGroupRecord, u32)>> {
    if y_max < 2 {
        return domain("y_max must be at least 2");
    }
    let mut out = Vec::new();
    for m in 2..=4 {
        for t in catalog {
            if sd1_holds(t, m, y_max) && sd2_holds(t, m, y_max) {
                out.push((t.clone(), m));
            }
        }
    }
    Ok(out)
}

/// Full simple diagonal analysis: bounds, surviving `(T, m)` and the sieve
/// at `v = |T|^(m-1)`. `PSL(2,5)` at `m = 3, 4` is sieved as well even
/// though the second bound already removes it.
pub fn diagonal_report(y_max: u64, catalog: &[SimpleGroupRecord]) -> Result<EliminationReport> {
    let mut rep = EliminationReport::new("simple diagonal");
    rep.bound("m_max", diagonal_m_max(y_max));
    let hits = diagonal_feasible(y_max, catalog)?;
    for t in catalog {
        for m in 2..=4 {
            if hits.iter().any(|(h, hm)| h == t && *hm == m) {
                continue;
            }
            let why = if !sd1_holds(t, m, y_max) { "first bound fails" } else { "second bound fails" };
            rep.reject(format!("{} m={m}", t.name()), why);
        }
    }
    let small: Vec<String> = small_out_filter(catalog).iter().map(|t| t.name().to_string()).collect();
    rep.bound("|T| <= 400|Out(T)|^2", small.join(", "));
    let mut points: Vec<(String, u32)> = hits.iter().map(|(t, m)| (t.name().to_string(), *m)).collect();
    if let Some(a5) = catalog.iter().find(|t| t.order == 60) {
        for m in [3, 4] {
            if !hits.iter().any(|(t, hm)| t.order == 60 && *hm == m) {
                rep.note(format!(
                    "{} at m={m} fails the second bound ({} > {}) but is sieved anyway",
                    a5.name(),
                    big(60).pow(m - 1),
                    big(2 * (y_max as u128 - 1)) * big(a5.out_order as u128).pow(2) * factorial(m as u64).pow(2)
                ));
                points.push((a5.name().to_string(), m));
            }
        }
    }
    for (name, m) in points {
        let t = catalog.iter().find(|t| t.name() == name).expect("catalog entry");
        let v = t.order.pow(m - 1);
        let v64 = u64::try_from(v).map_err(|_| Error::Domain(format!("v = {v} too large")))?;
        let hits = enumerate_for_v(&SearchBox::new(v64, 2..=y_max))?;
        if hits.is_empty() {
            rep.reject(format!("{name} m={m} v={v}"), "sieve empty");
        } else {
            rep.survivors.extend(hits);
        }
    }
    Ok(rep)
}

/// Largest `omega` with `a^2 omega^m <= 2(y-1) m^2 (omega-1)^2`, for
/// `3 <= m <= 5`. Returns `None` when no `omega >= 5` qualifies.
pub fn omega_upper_bound(m: u32, a: u64, y: u64) -> Result<Option<u64>> {
    if !(3..=5).contains(&m) {
        return domain(format!("product action with m >= 3 needs m <= 5, got {m}"));
    }
    if a == 0 || y < 2 {
        return domain("a must be positive and y at least 2");
    }
    let holds = |w: u64| {
        let lhs = big(a as u128 * a as u128) * big(w as u128).pow(m);
        let rhs = big(2 * (y as u128 - 1) * (m as u128).pow(2)) * big(w as u128 - 1).pow(2);
        lhs <= rhs
    };
    // the ratio omega^m / (omega-1)^2 is increasing for omega >= 3
    if !holds(5) {
        return Ok(None);
    }
    let (mut lo, mut hi) = (5u64, 6u64);
    while holds(hi) {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(lo))
}

/// Product action with `m` in `3..=5`: enumerate `(m, a, omega, y)` and
/// sieve `v = omega^m` with `r/(r,lambda) = m(omega-1)/a`.
pub fn product_action_high_m(y_max: u64, omega_cap: u64) -> Result<EliminationReport> {
    if !(2..=10).contains(&y_max) {
        return domain(format!("y_max must lie in 2..=10, got {y_max}"));
    }
    if omega_cap < 5 {
        return domain("omega cap must be at least 5");
    }
    let mut rep = EliminationReport::new("product action, m >= 3");
    let m_min_excluded = (3..64u32)
        .find(|&m| BigRational::new(big(5).pow(m).into(), big(32 * (m as u128).pow(2)).into()) + BigRational::one()
            > BigRational::from_integer(y_max.into()))
        .unwrap_or(64);
    // 5^m/(32 m^2) + 1 is increasing for m >= 3
    let m_max = (3..m_min_excluded).last().unwrap_or(2).min(5);
    rep.bound("m_max", m_max);
    rep.bound("omega_max(m=3,a=1,y=10)", omega_upper_bound(3, 1, 10)?.unwrap_or(0));
    let mut tuples = 0u64;
    for m in 3..=m_max {
        for y in 2..=y_max {
            let Some(w_max) = omega_upper_bound(m, 1, y)? else { continue };
            if w_max > omega_cap {
                return domain(format!("omega bound {w_max} exceeds the cap {omega_cap}"));
            }
            for w in 5..=w_max {
                let mut ratios = Vec::new();
                for a in 1.. {
                    match omega_upper_bound(m, a, y)? {
                        Some(b) if b >= w => {}
                        _ => break,
                    }
                    tuples += 1;
                    let top = m as u64 * (w - 1);
                    if top.is_multiple_of(a) {
                        ratios.push(top / a);
                    }
                }
                if ratios.is_empty() {
                    continue;
                }
                let v = (w as u128).pow(m);
                let v64 = u64::try_from(v).map_err(|_| Error::Domain(format!("v = {v} too large")))?;
                let sbox = SearchBox::new(v64, y..=y).with(Constraint::RatioIn(ratios));
                let hits = enumerate_for_v(&sbox)?;
                rep.survivors.extend(hits);
            }
        }
    }
    rep.bound("(m,a,omega,y) tuples", tuples);
    if rep.survivors.is_empty() {
        rep.note("no feasible parameters");
    }
    Ok(rep)
}

/// One parameter row of the product action case with `m = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductActionRow {
    pub y: u64,
    pub a1: u64,
    pub omega: u64,
    pub params: DesignParams,
    pub soc_names: Vec<String>,
}

impl ProductActionRow {
    pub fn candidate(&self) -> Candidate {
        Candidate::evaluate(self.params, QsProfile::new(self.y).expect("y >= 2"))
    }
}

/// Working for one value of `a1` in the `m = 2` analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M2Branch {
    pub y: u64,
    pub a1: u64,
    /// `lambda = num / den` as polynomials in `omega`.
    pub lambda_num: Poly,
    pub lambda_den: Poly,
    /// `omega` values allowed by integrality of `lambda`; `None` when that
    /// condition alone does not give a finite list.
    pub lambda_candidates: Option<Vec<u64>>,
    /// `omega` values allowed by integrality of `b`.
    pub b_candidates: Vec<u64>,
    pub rejected: Vec<(u64, String)>,
    pub rows: Vec<ProductActionRow>,
}

/// `a1` with `(8/3)(y-1) < a1^2 < 8(y-1)`.
pub fn a1_range(y: u64) -> Vec<u64> {
    (1..).take_while(|a| a * a < 8 * (y - 1)).filter(|a| 3 * a * a > 8 * (y - 1)).collect()
}

fn to_u64_candidates(xs: Vec<i128>) -> Vec<u64> {
    xs.into_iter().filter_map(|x| u64::try_from(x).ok()).collect()
}

/// Solves the `m = 2` system for one `a1`.
///
/// With `K = k-1 = a1(omega+1)/2` and `a1 r = 2 lambda (omega-1)`, the
/// intersection identity gives
/// `lambda = a1(a1(omega+1) - 2(y-1)) / (a1^2(omega+1) - 4(y-1)(omega-1))`
/// and `b = 4 omega^2 (omega-1) P / (a1 Q L)` with `P`, `Q` the numerator and
/// denominator of `lambda` and `L = a1 omega + a1 + 2 = 2k`.
pub fn product_action_m2_branch(y: u64, a1: u64) -> Result<M2Branch> {
    let (yi, a) = (y as i128, a1 as i128);
    let p = Poly::linear(a * a, a * (a - 2 * (yi - 1)));
    let q = Poly::linear(a * a - 4 * (yi - 1), a * a + 4 * (yi - 1));
    let lambda_candidates = if q.degree() == 1 {
        linear_divisor_candidates(&p, q.coeff(1), q.coeff(0), 5).map(to_u64_candidates)
    } else {
        None
    };
    let w = Poly::linear(1, 0);
    let b_num = Poly::new(vec![4]).mul(&w).mul(&w).mul(&Poly::linear(1, -1)).mul(&p);
    let b_candidates = linear_divisor_candidates(&b_num, a, a + 2, 5)
        .map(to_u64_candidates)
        .ok_or_else(|| Error::Domain(format!("no finite omega list for y={y}, a1={a1}")))?;
    let pool: Vec<u64> = match &lambda_candidates {
        Some(ls) => b_candidates.iter().copied().filter(|w| ls.contains(w)).collect(),
        None => b_candidates.clone(),
    };
    let mut branch = M2Branch {
        y,
        a1,
        lambda_num: p.clone(),
        lambda_den: q.clone(),
        lambda_candidates,
        b_candidates,
        rejected: Vec::new(),
        rows: Vec::new(),
    };
    if let Some(ls) = &branch.lambda_candidates {
        for w in ls.iter().filter(|w| !pool.contains(w)) {
            branch.rejected.push((*w, "b is not an integer".into()));
        }
    }
    for w in pool {
        match m2_solution(y, a1, w, &p, &q) {
            Ok(row) => branch.rows.push(row),
            Err(why) => branch.rejected.push((w, why)),
        }
    }
    branch.rejected.sort();
    Ok(branch)
}

fn m2_solution(y: u64, a1: u64, w: u64, p: &Poly, q: &Poly) -> std::result::Result<ProductActionRow, String> {
    let (wi, a) = (w as i128, a1 as i128);
    if (a * (wi + 1)) % 2 != 0 {
        return Err("k is not an integer".into());
    }
    let k = a * (wi + 1) / 2 + 1;
    let (pn, qd) = (p.eval(wi), q.eval(wi));
    if qd <= 0 || pn <= 0 {
        return Err("lambda is not positive".into());
    }
    if pn % qd != 0 {
        return Err("lambda is not an integer".into());
    }
    let lambda = pn / qd;
    let rn = 2 * lambda * (wi - 1);
    if rn % a != 0 {
        return Err("r is not an integer".into());
    }
    let r = rn / a;
    let v = wi * wi;
    if (v * r) % k != 0 {
        return Err("b is not an integer".into());
    }
    let b = v * r / k;
    let params = DesignParams::new(v as u64, b as u64, r as u64, k as u64, lambda as u64);
    let cand = Candidate::evaluate(params, QsProfile::new(y).map_err(|e| e.to_string())?);
    if !cand.is_admissible() {
        return Err(format!("{params}: {}", cand.reason()));
    }
    Ok(ProductActionRow { y, a1, omega: w, params, soc_names: Vec::new() })
}

/// All branches of the `m = 2` analysis at a given `y`.
pub fn product_action_m2_branches(y: u64) -> Result<Vec<M2Branch>> {
    if !(2..=10).contains(&y) {
        return domain(format!("y must lie in 2..=10, got {y}"));
    }
    a1_range(y).into_iter().map(|a1| product_action_m2_branch(y, a1)).collect()
}

/// Parameter rows of the `m = 2` product action case at a given `y`.
pub fn product_action_m2(y: u64) -> Result<Vec<ProductActionRow>> {
    Ok(product_action_m2_branches(y)?.into_iter().flat_map(|b| b.rows).collect())
}

/// `r | 2 |T|^2 |Out(T)|^2 / omega^2`; false when the quotient is not an
/// integer.
pub fn tian_divisor_filter(t_order: u128, out_order: u64, omega: u64, r: u64) -> bool {
    match tian_value(t_order, out_order, omega) {
        Some(val) => (val % BigUint::from(r)).is_zero(),
        None => false,
    }
}

/// `2 |T|^2 |Out(T)|^2 / omega^2` when integral.
pub fn tian_value(t_order: u128, out_order: u64, omega: u64) -> Option<BigUint> {
    let num = BigUint::from(2u32) * big(t_order).pow(2) * big(out_order as u128).pow(2);
    let den = big(omega as u128).pow(2);
    let (q, rem) = num.div_rem(&den);
    rem.is_zero().then_some(q)
}

/// True when `2 <= a1 < lambda <= omega - 2`, which an alternating socle of
/// degree `omega` cannot satisfy.
pub fn alt_product_exclusion(a1: u64, omega: u64, lambda: u64) -> bool {
    2 <= a1 && a1 < lambda && lambda + 2 <= omega
}

/// Socle names per degree (`degree socle` file).
pub fn load_product_socles(text: &str) -> Result<Vec<(u64, String)>> {
    let mut out = Vec::new();
    for (row, f) in tsv_rows(text) {
        if f.len() != 2 {
            return Err(Error::Load { row, msg: format!("expected 2 columns, found {}", f.len()) });
        }
        let deg = f[0].parse().map_err(|_| Error::Load { row, msg: format!("bad degree {:?}", f[0]) })?;
        out.push((deg, f[1].to_string()));
    }
    Ok(out)
}

/// Verdict on one socle attached to a product action row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleVerdict {
    pub socle: String,
    pub excluded: bool,
    pub reason: String,
}

/// The `m = 2` rows for `2 <= y <= y_max` with socle names attached.
pub fn product_action_rows(y_max: u64, socles: &[(u64, String)]) -> Result<Vec<ProductActionRow>> {
    let mut rows = Vec::new();
    for y in 2..=y_max {
        for mut row in product_action_m2(y)? {
            row.soc_names = socles.iter().filter(|(d, _)| *d == row.omega).map(|(_, s)| s.clone()).collect();
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Applies the alternating-socle exclusion and the divisor condition to
/// every socle of a row.
pub fn socle_verdicts(row: &ProductActionRow, catalog: &[SimpleGroupRecord]) -> Vec<SocleVerdict> {
    let natural = format!("A{}", row.omega);
    row.soc_names
        .iter()
        .map(|s| {
            let p = &row.params;
            if *s == natural {
                let excluded = alt_product_exclusion(row.a1, row.omega, p.lambda);
                let reason = if excluded {
                    format!("2 <= a1={} < lambda={} <= omega-2={}", row.a1, p.lambda, row.omega - 2)
                } else {
                    "alternating bracket does not hold".into()
                };
                return SocleVerdict { socle: s.clone(), excluded, reason };
            }
            match catalog.iter().find(|t| t.is_called(s)) {
                None => SocleVerdict { socle: s.clone(), excluded: false, reason: "not in catalog".into() },
                Some(t) => match tian_value(t.order, t.out_order, row.omega) {
                    None => SocleVerdict {
                        socle: s.clone(),
                        excluded: true,
                        reason: "omega^2 does not divide 2|T|^2|Out(T)|^2".into(),
                    },
                    Some(val) if !(&val % BigUint::from(p.r)).is_zero() => SocleVerdict {
                        socle: s.clone(),
                        excluded: true,
                        reason: format!("r={} does not divide {val}", p.r),
                    },
                    Some(val) => SocleVerdict {
                        socle: s.clone(),
                        excluded: false,
                        reason: format!("r={} divides {val}; needs subgroup enumeration", p.r),
                    },
                },
            }
        })
        .collect()
}

/// Product action report: the `m = 2` table with socle verdicts.
pub fn product_report(y_max: u64, socles: &[(u64, String)], catalog: &[SimpleGroupRecord]) -> Result<EliminationReport> {
    let mut rep = EliminationReport::new("product action, m = 2");
    for y in 2..=y_max {
        for br in product_action_m2_branches(y)? {
            let ls = match &br.lambda_candidates {
                Some(ls) => format!("{ls:?}"),
                None => "-".into(),
            };
            rep.bound(format!("y={y} a1={} lambda-omega", br.a1), ls);
            for (w, why) in &br.rejected {
                rep.reject(format!("y={y} a1={} omega={w}", br.a1), why.clone());
            }
        }
    }
    for row in product_action_rows(y_max, socles)? {
        for sv in socle_verdicts(&row, catalog) {
            let item = format!("{} with {}", row.params, sv.socle);
            if sv.excluded {
                rep.reject(item, sv.reason);
            } else {
                rep.note(format!("{item}: {}", sv.reason));
            }
        }
        rep.survivors.push(row.candidate());
    }
    Ok(rep)
}

/// Table layout `y | a1 | (v,b,r,k,lambda) | Soc(H)`.
pub fn product_table_rows(rows: &[ProductActionRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| {
            let p = &r.params;
            vec![
                r.y.to_string(),
                r.a1.to_string(),
                format!("({}^2,{},{},{},{})", r.omega, p.b, p.r, p.k, p.lambda),
                r.soc_names.join(", "),
            ]
        })
        .collect()
}

pub const PRODUCT_HEADERS: [&str; 4] = ["y", "a1", "(v,b,r,k,lambda)", "Soc(H)"];

pub fn product_markdown(rows: &[ProductActionRow]) -> String {
    markdown_table(&PRODUCT_HEADERS, &product_table_rows(rows))
}

/// Numeric value of a rational, for display.
pub fn approx(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::{DataSource, PRODUCT_SOCLES, SIMPLE_GROUPS};

    fn catalog() -> Vec<SimpleGroupRecord> {
        load_simple_groups(&DataSource::embedded().read(SIMPLE_GROUPS).unwrap()).unwrap()
    }

    #[test]
    fn catalog_loads() {
        let c = catalog();
        assert_eq!(c.len(), 56);
        assert!(c.iter().any(|t| t.is_called("A6") && t.order == 360));
    }

    #[test]
    fn psl2_order_mismatch_rejected() {
        let err = load_simple_groups("PSL(2,7)\t169\t2\n").unwrap_err();
        assert!(matches!(err, Error::Load { row: 1, .. }));
    }

    #[test]
    fn twisted_bounds() {
        let v6 = twisted_wreath_y_min(60, 6).unwrap();
        assert!(v6 > BigRational::from_integer(186154.into()));
        let v7 = twisted_wreath_y_min(60, 7).unwrap();
        assert!(v7 > v6);
        let exact = BigRational::new(big(168).pow(6).into(), big(72 * 167 * 167).into()) + BigRational::one();
        assert_eq!(twisted_wreath_y_min(168, 6).unwrap(), exact);
        assert!(twisted_wreath_y_min(60, 5).is_err());
        assert!(twisted_wreath_y_min(59, 6).is_err());
    }

    #[test]
    fn twisted_monotone_under_doubling() {
        for t in [60u128, 168, 360, 20160] {
            for m in 6..=32u32 {
                assert!(twisted_wreath_y_min(t, 2 * m).unwrap() >= twisted_wreath_y_min(t, m).unwrap());
            }
        }
    }

    #[test]
    fn diagonal_m2_groups() {
        let hits = diagonal_feasible(10, &catalog()).unwrap();
        let m2: Vec<&str> = hits.iter().filter(|(_, m)| *m == 2).map(|(t, _)| t.name()).collect();
        assert_eq!(m2, ["PSL(2,5)", "PSL(2,7)", "PSL(2,9)", "PSL(2,8)"]);
        assert!(hits.iter().all(|(_, m)| *m == 2));
        let y2 = diagonal_feasible(2, &catalog()).unwrap();
        assert!(y2.iter().all(|h| hits.contains(h)));
    }

    #[test]
    fn nine_groups_with_small_order() {
        let names: Vec<String> = small_out_filter(&catalog()).iter().map(|t| t.name().to_string()).collect();
        let mut expect = ["PSL(2,5)", "PSL(2,7)", "PSL(2,8)", "PSL(2,9)", "PSL(2,11)", "PSL(2,13)", "PSL(2,16)", "PSL(2,27)", "PSL(3,4)"]
            .map(String::from)
            .to_vec();
        let mut got = names.clone();
        got.sort();
        expect.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn diagonal_report_is_empty() {
        let rep = diagonal_report(10, &catalog()).unwrap();
        assert!(rep.survivors.is_empty());
        assert_eq!(rep.bound_value("m_max"), Some("4"));
        assert!(rep.rejected.iter().any(|r| r.item == "PSL(2,5) m=3 v=3600"));
        assert!(rep.rejected.iter().any(|r| r.item == "PSL(2,5) m=4 v=216000"));
    }

    #[test]
    fn omega_bound_159() {
        assert_eq!(omega_upper_bound(3, 1, 10).unwrap(), Some(159));
        assert!(omega_upper_bound(6, 1, 10).is_err());
    }

    #[test]
    fn high_m_is_empty() {
        let rep = product_action_high_m(10, 1000).unwrap();
        assert!(rep.survivors.is_empty());
        assert_eq!(rep.bound_value("m_max"), Some("5"));
    }

    #[test]
    fn m2_y2() {
        let rows = product_action_m2(2).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].a1, rows[0].omega), (2, 10));
        assert_eq!(rows[0].params, DesignParams::new(100, 375, 45, 12, 5));
    }

    #[test]
    fn m2_y3_intermediate() {
        let br = product_action_m2_branches(3).unwrap();
        assert_eq!(br.len(), 1);
        assert_eq!(br[0].a1, 3);
        assert_eq!(br[0].lambda_candidates, Some(vec![9, 22, 35, 61, 139]));
        assert!(br[0].rows.is_empty());
        let rej: Vec<u64> = br[0].rejected.iter().map(|(w, _)| *w).collect();
        for w in [9, 22, 35, 61, 139] {
            assert!(rej.contains(&w), "{w}");
        }
    }

    #[test]
    fn m2_table() {
        let mut all = Vec::new();
        for y in 2..=10 {
            for r in product_action_m2(y).unwrap() {
                let p = r.params;
                assert_eq!(r.a1 * p.r, 2 * p.lambda * (r.omega - 1));
                all.push((y, r.a1, (p.v, p.b, p.r, p.k, p.lambda)));
            }
        }
        assert_eq!(
            all,
            vec![
                (2, 2, (100, 375, 45, 12, 5)),
                (5, 4, (441, 980, 100, 45, 10)),
                (5, 4, (12321, 165649, 3025, 225, 55)),
                (7, 5, (5929, 13794, 456, 196, 15)),
                (10, 6, (8464, 41262, 1365, 280, 45)),
            ]
        );
    }

    #[test]
    fn tian_examples() {
        assert_eq!(tian_value(168, 2, 21), Some(BigUint::from(512u32)));
        assert!(!tian_divisor_filter(168, 2, 21, 100));
        assert_eq!(tian_value(2520, 2, 21), Some(BigUint::from(115200u32)));
        assert!(tian_divisor_filter(2520, 2, 21, 100));
        assert_eq!(tian_value(443520, 2, 77), Some(BigUint::from(265420800u32)));
        assert!(!tian_divisor_filter(443520, 2, 77, 456));
        for r in 1..200u64 {
            let direct = (2 * 60u128 * 60 * 4).is_multiple_of(r as u128);
            assert_eq!(tian_divisor_filter(60, 2, 1, r), direct);
        }
    }

    #[test]
    fn alt_bracket() {
        assert!(alt_product_exclusion(4, 111, 55));
        assert!(alt_product_exclusion(2, 10, 5));
        assert!(!alt_product_exclusion(8, 10, 9));
    }

    #[test]
    fn socles_leave_a7_and_psl34() {
        let socles = load_product_socles(&DataSource::embedded().read(PRODUCT_SOCLES).unwrap()).unwrap();
        let cat = catalog();
        let mut left = Vec::new();
        for row in product_action_rows(10, &socles).unwrap() {
            for sv in socle_verdicts(&row, &cat) {
                if !sv.excluded {
                    left.push(sv.socle);
                }
            }
        }
        assert_eq!(left, ["A7", "PSL(3,4)"]);
    }
}
