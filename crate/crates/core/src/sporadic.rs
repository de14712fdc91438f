//! Sporadic almost simple groups: the `r_max` screen over maximal subgroups,
//! the constrained sieve at each surviving index, and the Monster check.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::data::{tsv_rows, DataSource, ATLAS, KNOWN_DESIGNS, MONSTER};
use crate::error::{domain, Error, Result};
use crate::literature::{exclusion_for, load_known_designs, KnownDesign};
use crate::params::{stabilizer_filter, subdegree_filter, Candidate};
use crate::report::{markdown_table, tsv_table, EliminationReport};
use crate::sieve::{enumerate_for_v, relaxed_lambda_hits, Constraint, SearchBox};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlasSubgroup {
    pub name: String,
    pub order: BigUint,
    /// Number of conjugacy classes, when recorded.
    pub classes: Option<u32>,
    /// Subdegrees of the coset action including the trivial one, when recorded.
    pub subdegrees: Option<Vec<u64>>,
    /// Line of the source file.
    pub row: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlasRecord {
    pub group_name: String,
    pub group_order: BigUint,
    pub socle: String,
    pub out_order: u64,
    pub subgroups: Vec<AtlasSubgroup>,
}

impl AtlasRecord {
    pub fn index_of(&self, h: &AtlasSubgroup) -> BigUint {
        &self.group_order / &h.order
    }
}

fn parse_note(note: &str, row: usize) -> Result<(Option<u32>, Option<Vec<u64>>)> {
    let err = |msg: String| Error::Load { row, msg };
    let mut classes = None;
    let mut subdegrees = None;
    for part in note.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some(c) = part.strip_prefix("classes=") {
            classes = Some(c.parse().map_err(|_| err(format!("bad class count {c:?}")))?);
        } else if let Some(s) = part.strip_prefix("subdegrees=") {
            let ds: Vec<u64> = s
                .split('+')
                .map(|d| d.parse().map_err(|_| err(format!("bad subdegree {d:?}"))))
                .collect::<Result<_>>()?;
            subdegrees = Some(ds);
        }
    }
    Ok((classes, subdegrees))
}

/// Parses the ATLAS table: one maximal subgroup per row, consecutive rows of
/// the same group form one record.
pub fn load_atlas(text: &str) -> Result<Vec<AtlasRecord>> {
    let mut out: Vec<AtlasRecord> = Vec::new();
    for (row, f) in tsv_rows(text) {
        let err = |msg: String| Error::Load { row, msg };
        if f.len() != 7 {
            return Err(err(format!("expected 7 columns, found {}", f.len())));
        }
        let big = |s: &str, what: &str| -> Result<BigUint> {
            let n: BigUint = s.parse().map_err(|_| err(format!("bad {what} {s:?}")))?;
            if n.is_zero() {
                return Err(err(format!("{what} must be positive")));
            }
            Ok(n)
        };
        let group_order = big(f[1], "group order")?;
        let out_order: u64 = f[3].parse().map_err(|_| err(format!("bad out order {:?}", f[3])))?;
        let order = big(f[5], "subgroup order")?;
        let (index, rem) = group_order.div_rem(&order);
        if !rem.is_zero() {
            return Err(err(format!("subgroup order {order} does not divide {group_order}")));
        }
        if index < BigUint::from(3u32) {
            return Err(err(format!("index {index} is below 3")));
        }
        let (classes, subdegrees) = parse_note(f[6], row)?;
        if let Some(ds) = &subdegrees {
            let sum: BigUint = ds.iter().map(|&d| BigUint::from(d)).sum();
            if sum != index || ds.first() != Some(&1) {
                return Err(err(format!("subdegrees {ds:?} do not partition {index} points")));
            }
        }
        let sub = AtlasSubgroup { name: f[4].to_string(), order, classes, subdegrees, row };
        match out.last_mut() {
            Some(rec) if rec.group_name == f[0] => {
                if rec.group_order != group_order || rec.socle != f[2] || rec.out_order != out_order {
                    return Err(err(format!("inconsistent data for {}", f[0])));
                }
                rec.subgroups.push(sub);
            }
            _ => {
                if out.iter().any(|r| r.group_name == f[0]) {
                    return Err(err(format!("rows for {} are not contiguous", f[0])));
                }
                out.push(AtlasRecord {
                    group_name: f[0].to_string(),
                    group_order,
                    socle: f[2].to_string(),
                    out_order,
                    subgroups: vec![sub],
                });
            }
        }
    }
    Ok(out)
}

pub fn embedded_atlas() -> Vec<AtlasRecord> {
    load_atlas(&DataSource::embedded().read(ATLAS).expect("embedded")).expect("embedded data parses")
}

/// A pair `(G, H)` passing `|H|^3 > 2|G|` and `v <= 2(y_max-1) r_max^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SporadicCandidate {
    pub group: String,
    pub group_order: BigUint,
    pub subgroup: String,
    pub subgroup_order: BigUint,
    pub subdegrees: Option<Vec<u64>>,
    pub v: u64,
    /// `gcd(v-1, |H|)`
    pub r_max: u64,
    pub candidates: Vec<Candidate>,
}

impl SporadicCandidate {
    pub fn pair(&self) -> (String, String) {
        (self.group.clone(), self.subgroup.clone())
    }

    /// Both screen inequalities, evaluated exactly.
    pub fn satisfies_screen(&self, y_max: u64) -> bool {
        screen_holds(&self.group_order, &self.subgroup_order, y_max).is_some()
    }
}

/// `(v, r_max)` when `(G, H)` passes the screen.
fn screen_holds(g: &BigUint, h: &BigUint, y_max: u64) -> Option<(u64, u64)> {
    if h.pow(3) <= g * 2u32 {
        return None;
    }
    let v = g / h;
    let r_max = (&v - 1u32).gcd(h);
    if v > BigUint::from(2 * (y_max - 1)) * &r_max * &r_max {
        return None;
    }
    Some((v.to_u64()?, r_max.to_u64()?))
}

/// Keeps every `(G, H)` with `|H|^3 > 2|G|` and `|G|/|H| <= 2(y_max-1) r_max^2`.
/// The factor 2 is the least possible `lambda`, as `lambda > y >= 2`.
pub fn sporadic_screen(records: &[AtlasRecord], y_max: u64) -> Result<Vec<SporadicCandidate>> {
    if !(2..=10).contains(&y_max) {
        return domain(format!("y_max must lie in 2..=10, got {y_max}"));
    }
    let mut out = Vec::new();
    for rec in records {
        for h in &rec.subgroups {
            if let Some((v, r_max)) = screen_holds(&rec.group_order, &h.order, y_max) {
                out.push(SporadicCandidate {
                    group: rec.group_name.clone(),
                    group_order: rec.group_order.clone(),
                    subgroup: h.name.clone(),
                    subgroup_order: h.order.clone(),
                    subdegrees: h.subdegrees.clone(),
                    v,
                    r_max,
                    candidates: Vec::new(),
                });
            }
        }
    }
    debug_assert!(out.iter().all(|c| c.satisfies_screen(y_max)));
    Ok(out)
}

/// One parameter tuple surviving the sporadic pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SporadicRow {
    pub case: usize,
    pub candidate: Candidate,
    pub ratio: u64,
    pub r_max: u64,
    pub pairs: Vec<(String, String)>,
    /// Published result ruling the tuple out, or other remark.
    pub flag: Option<String>,
}

impl SporadicRow {
    pub fn tuple(&self) -> (u64, u64, u64, u64, u64, u64) {
        self.candidate.tuple()
    }

    pub fn is_excluded(&self) -> bool {
        self.candidate.exclusion.is_some()
    }
}

#[derive(Debug, Clone)]
pub struct SporadicAnalysis {
    pub screened: Vec<SporadicCandidate>,
    pub rows: Vec<SporadicRow>,
    pub report: EliminationReport,
}

/// Sieves every screened index with `r/(r,lambda) | r_max` and
/// `r | lambda r_max`, then applies the recorded subdegrees and the
/// stabilizer conditions `r | |H|`, `|H|^3 > lambda |G|`.
///
/// Tuples that satisfy everything except `lambda <= k-1` are kept as well,
/// marked excluded.
pub fn sporadic_analysis(
    records: &[AtlasRecord],
    known: &[KnownDesign],
    y_max: u64,
) -> Result<SporadicAnalysis> {
    let mut screened = sporadic_screen(records, y_max)?;
    let mut rep = EliminationReport::new("sporadic socle");
    rep.bound("maximal subgroups", records.iter().map(|r| r.subgroups.len()).sum::<usize>());
    rep.bound("screened pairs", screened.len());
    rep.bound("largest screened v", screened.iter().map(|c| c.v).max().unwrap_or(0));

    let mut survivors: Vec<(Candidate, SporadicCandidate)> = Vec::new();
    for sc in &mut screened {
        let sbox = SearchBox::new(sc.v, 2..=y_max)
            .with(Constraint::RatioDivides(sc.r_max))
            .with(Constraint::RDividesLambdaTimes(sc.r_max));
        let mut hits = enumerate_for_v(&sbox)?;
        hits.extend(relaxed_lambda_hits(&sbox)?);
        sc.candidates = hits.clone();
        let label = format!("({}, {}) v={}", sc.group, sc.subgroup, sc.v);
        if hits.is_empty() {
            rep.reject(label, "sieve empty");
            continue;
        }
        for mut c in hits {
            if let Some(ds) = &sc.subdegrees {
                if !subdegree_filter(&c, &ds[1..])? {
                    rep.reject(format!("{label} {c}"), format!("r/(r,lambda)={} does not divide all subdegrees {ds:?}", c.ratio()));
                    continue;
                }
            }
            let check = stabilizer_filter(&c, &sc.subgroup_order, Some(&sc.group_order));
            if !check.passed() {
                let f = check.first_failure().expect("failed");
                rep.reject(format!("{label} {c}"), format!("{}: {}", f.name, f.detail));
                continue;
            }
            c.record(check);
            survivors.push((c, sc.clone()));
        }
    }

    survivors.sort_by_key(|(c, _)| (c.params.v, c.y(), c.params.k));
    let mut rows: Vec<SporadicRow> = Vec::new();
    for (c, sc) in survivors {
        if let Some(row) = rows.iter_mut().find(|r| r.candidate.tuple() == c.tuple()) {
            if !row.pairs.contains(&sc.pair()) {
                row.pairs.push(sc.pair());
            }
            continue;
        }
        let mut cand = c;
        let mut flag = exclusion_for(&cand, known);
        if cand.params.lambda >= cand.params.k {
            let extra = format!("lambda={} > k-1={}", cand.params.lambda, cand.params.k - 1);
            flag = Some(match flag {
                Some(f) => format!("{f}; {extra}"),
                None => extra,
            });
        }
        cand.exclusion = flag.clone();
        rows.push(SporadicRow { case: rows.len() + 1, ratio: cand.ratio(), r_max: sc.r_max, pairs: vec![sc.pair()], candidate: cand, flag });
    }
    for row in &rows {
        rep.survivors.push(row.candidate.clone());
    }
    Ok(SporadicAnalysis { screened, rows, report: rep })
}

/// The surviving rows, numbered by `(v, y)`.
pub fn sporadic_parameters(records: &[AtlasRecord], y_max: u64) -> Result<Vec<SporadicRow>> {
    let known = load_known_designs(&DataSource::embedded().read(KNOWN_DESIGNS)?)?;
    Ok(sporadic_analysis(records, &known, y_max)?.rows)
}

pub const SPORADIC_HEADERS: [&str; 6] = ["Case", "(y,v,b,r,k,lambda)", "r/(r,lambda)", "r_max", "(G,G_a)", "flag"];

fn sporadic_body(rows: &[SporadicRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| {
            let pairs: Vec<String> = r.pairs.iter().map(|(g, h)| format!("({g},{h})")).collect();
            vec![
                format!("({})", r.case),
                r.candidate.to_string(),
                r.ratio.to_string(),
                r.r_max.to_string(),
                pairs.join(","),
                r.flag.clone().unwrap_or_else(|| "-".into()),
            ]
        })
        .collect()
}

pub fn sporadic_markdown(rows: &[SporadicRow]) -> String {
    markdown_table(&SPORADIC_HEADERS, &sporadic_body(rows))
}

pub fn sporadic_tsv(rows: &[SporadicRow]) -> String {
    tsv_table(&SPORADIC_HEADERS, &sporadic_body(rows))
}

/// Order of the Monster and the almost simple candidates `(N, |Aut(N)|)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonsterData {
    pub order: BigUint,
    pub candidates: Vec<(String, BigUint)>,
}

pub fn load_monster(text: &str) -> Result<MonsterData> {
    let mut order = None;
    let mut candidates = Vec::new();
    for (row, f) in tsv_rows(text) {
        let err = |msg: String| Error::Load { row, msg };
        match f.as_slice() {
            ["order", n] => order = Some(n.parse().map_err(|_| err(format!("bad order {n:?}")))?),
            ["candidate", name, n] => {
                candidates.push((name.to_string(), n.parse().map_err(|_| err(format!("bad order {n:?}")))?))
            }
            _ => return Err(err(format!("unrecognised row {f:?}"))),
        }
    }
    let order = order.ok_or(Error::Load { row: 0, msg: "missing order row".into() })?;
    Ok(MonsterData { order, candidates })
}

pub fn embedded_monster() -> MonsterData {
    load_monster(&DataSource::embedded().read(MONSTER).expect("embedded")).expect("embedded data parses")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonsterVerdict {
    pub name: String,
    pub aut_order: BigUint,
    /// `|Aut(N)|^3 < |M|`
    pub excluded: bool,
}

pub fn monster_check(candidates: &[(String, BigUint)], monster_order: &BigUint) -> Vec<MonsterVerdict> {
    candidates
        .iter()
        .map(|(name, a)| MonsterVerdict { name: name.clone(), aut_order: a.clone(), excluded: &a.pow(3) < monster_order })
        .collect()
}
