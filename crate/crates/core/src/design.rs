//! Block designs built as orbits of a base block, with checks for the 2-design
//! property, block intersection sizes and flag-transitivity.

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::binomial_u128;
use crate::error::{domain, Error, Result};
use crate::perm::Group;

/// Default bound on the number of `k`-subsets [`base_block_search`] sweeps.
pub const DEFAULT_SUBSET_CAP: u128 = 1_000_000;

/// Points `0..v` and a lexicographically sorted list of distinct sorted
/// blocks of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    v: usize,
    blocks: Vec<Vec<usize>>,
}

impl Design {
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Design("no blocks".into()));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        let k = blocks[0].len();
        for b in &blocks {
            if b.len() != k {
                return Err(Error::Design(format!("block sizes {k} and {} differ", b.len())));
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Design(format!("block {} repeats a point", render_block(b))));
            }
            if let Some(&p) = b.last().filter(|&&p| p >= v) {
                return Err(Error::Design(format!("point {} exceeds v={v}", p + 1)));
            }
        }
        blocks.sort_unstable();
        if let Some(w) = blocks.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Design(format!("block {} occurs twice", render_block(&w[0]))));
        }
        Ok(Design { v, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn k(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks through each point.
    pub fn replication(&self) -> Vec<usize> {
        let mut r = vec![0; self.v];
        for b in &self.blocks {
            for &p in b {
                r[p] += 1;
            }
        }
        r
    }

    /// `r` when every point lies in the same number of blocks.
    pub fn r(&self) -> Option<usize> {
        let r = self.replication();
        r.iter().all(|&x| x == r[0]).then_some(r[0])
    }

    /// Parses `v b k` followed by one block per line as 1-based points.
    pub fn parse(text: &str) -> Result<Design> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut blocks = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad integer {t:?}"))))
                .collect::<Result<_>>()?;
            let Some((v, _, k)) = header else {
                if nums.len() != 3 {
                    return Err(err("expected header `v b k`".into()));
                }
                header = Some((nums[0], nums[1], nums[2]));
                continue;
            };
            if nums.len() != k {
                return Err(err(format!("expected {k} points, found {}", nums.len())));
            }
            if let Some(&p) = nums.iter().find(|&&p| p == 0 || p > v) {
                return Err(err(format!("point {p} out of range 1..={v}")));
            }
            blocks.push(nums.into_iter().map(|p| p - 1).collect::<Vec<_>>());
        }
        let (v, b, _) = header.ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        if blocks.len() != b {
            return Err(Error::Parse { line: last_line, msg: format!("header declares {b} blocks, found {}", blocks.len()) });
        }
        Design::new(v, blocks)
    }

    /// The inverse of [`Design::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {} {}\n", self.v, self.b(), self.k());
        for b in &self.blocks {
            out.push_str(&render_block(b));
            out.push('\n');
        }
        out
    }
}

fn render_block(b: &[usize]) -> String {
    b.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "design on {} points with {} blocks of size {}", self.v, self.b(), self.k())
    }
}

/// Outcome of counting blocks through every point pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCoverage {
    pub is_2_design: bool,
    pub lambda: Option<u64>,
    /// First pair (0-based) whose count differs from that of `(0, 1)`.
    pub violation: Option<((usize, usize), u64, u64)>,
}

pub fn pair_coverage(d: &Design) -> PairCoverage {
    let v = d.v;
    let mut count = vec![0u64; v * v];
    for b in &d.blocks {
        for (i, &p) in b.iter().enumerate() {
            for &q in &b[i + 1..] {
                count[p * v + q] += 1;
            }
        }
    }
    if v < 2 {
        return PairCoverage { is_2_design: false, lambda: None, violation: None };
    }
    let lambda = count[1];
    for p in 0..v {
        for q in p + 1..v {
            let c = count[p * v + q];
            if c != lambda {
                return PairCoverage { is_2_design: false, lambda: None, violation: Some(((p, q), c, lambda)) };
            }
        }
    }
    PairCoverage { is_2_design: true, lambda: Some(lambda), violation: None }
}

/// The set of sizes `|B_i cap B_j|`, `i != j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionProfile(pub BTreeSet<usize>);

impl IntersectionProfile {
    pub fn is_quasi_symmetric(&self) -> bool {
        self.0.len() == 2
    }

    /// `Some(y)` when the profile is `{0, y}`.
    pub fn zero_and(&self) -> Option<usize> {
        let v: Vec<usize> = self.0.iter().copied().collect();
        match v.as_slice() {
            [0, y] => Some(*y),
            _ => None,
        }
    }
}

impl fmt::Display for IntersectionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn intersection_numbers(d: &Design) -> Result<IntersectionProfile> {
    if d.b() < 2 {
        return domain("need at least two blocks");
    }
    let masks: Vec<Vec<bool>> = d
        .blocks
        .iter()
        .map(|b| {
            let mut m = vec![false; d.v];
            b.iter().for_each(|&p| m[p] = true);
            m
        })
        .collect();
    let mut sizes = BTreeSet::new();
    for (i, mi) in masks.iter().enumerate() {
        for b in &d.blocks[i + 1..] {
            sizes.insert(b.iter().filter(|&&p| mi[p]).count());
        }
    }
    Ok(IntersectionProfile(sizes))
}

/// Rank of a sorted `k`-subset of `0..n` in lexicographic order.
struct SubsetRanker {
    /// `c[i][j] = C(i, j)`
    c: Vec<Vec<u64>>,
    n: usize,
    k: usize,
}

impl SubsetRanker {
    fn new(n: usize, k: usize) -> Self {
        let mut c = vec![vec![0u64; k + 1]; n + 1];
        for i in 0..=n {
            c[i][0] = 1;
            for j in 1..=k.min(i) {
                c[i][j] = c[i - 1][j - 1] + if j < i { c[i - 1][j] } else { 0 };
            }
        }
        SubsetRanker { c, n, k }
    }

    fn rank(&self, s: &[usize]) -> usize {
        let mut r = 0u64;
        let mut prev = 0usize;
        for (i, &x) in s.iter().enumerate() {
            for y in prev..x {
                r += self.c[self.n - y - 1][self.k - i - 1];
            }
            prev = x + 1;
        }
        r as usize
    }
}

/// Visits every `k`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        f(&s);
        let Some(i) = (0..k).rev().find(|&i| s[i] < n - k + i) else {
            return;
        };
        s[i] += 1;
        for j in i + 1..k {
            s[j] = s[j - 1] + 1;
        }
    }
}

/// Every orbit of `k`-subsets forming a 2-design with intersection sizes
/// `{0, y}`, `2 <= y <= y_max`, ordered by least orbit member.
pub fn base_block_search(g: &Group, k: usize, y_max: usize) -> Result<Vec<Design>> {
    base_block_search_capped(g, k, y_max, DEFAULT_SUBSET_CAP)
}

pub fn base_block_search_capped(g: &Group, k: usize, y_max: usize, cap: u128) -> Result<Vec<Design>> {
    let n = g.degree();
    if k == 0 || k > n {
        return domain(format!("block size {k} out of range for degree {n}"));
    }
    let required = binomial_u128(n as u64, k as u64).unwrap_or(u128::MAX);
    if required > cap {
        return Err(Error::CapExceeded { required, cap });
    }
    let ranker = SubsetRanker::new(n, k);
    let mut visited = vec![false; required as usize];
    let mut out = Vec::new();
    let mut failure = None;
    for_each_subset(n, k, |s| {
        if failure.is_some() || visited[ranker.rank(s)] {
            return;
        }
        let orbit = match g.set_orbit(s) {
            Ok(o) => o,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        for b in &orbit {
            visited[ranker.rank(b)] = true;
        }
        if orbit.len() < 2 {
            return;
        }
        // the group is transitive on the orbit, so one block sees every size
        let Some(y) = orbit_zero_and(s, &orbit, n) else { return };
        if !(2..=y_max).contains(&y) {
            return;
        }
        let d = Design::new(n, orbit).expect("orbit of distinct sorted blocks");
        if pair_coverage(&d).is_2_design {
            out.push(d);
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `Some(y)` when the blocks other than `b0` meet it in exactly the sizes
/// `{0, y}`; stops at the first third size.
fn orbit_zero_and(b0: &[usize], blocks: &[Vec<usize>], n: usize) -> Option<usize> {
    let mut mask = vec![false; n];
    b0.iter().for_each(|&p| mask[p] = true);
    let (mut zero, mut y) = (false, None);
    for b in blocks.iter().filter(|b| b.as_slice() != b0) {
        match b.iter().filter(|&&p| mask[p]).count() {
            0 => zero = true,
            m if y.is_none() => y = Some(m),
            m if y == Some(m) => {}
            _ => return None,
        }
    }
    y.filter(|_| zero)
}

/// True iff the group is transitive on flags. The block set must be closed
/// under the group.
pub fn verify_flag_transitive(g: &Group, d: &Design) -> Result<bool> {
    Ok(flag_orbit(g, d)? == d.b() * d.k())
}

/// Size of the orbit of the flag `(first point of first block, first block)`.
pub fn flag_orbit(g: &Group, d: &Design) -> Result<usize> {
    if g.degree() != d.v() {
        return domain(format!("group degree {} differs from v={}", g.degree(), d.v()));
    }
    for gen in g.generators() {
        for b in d.blocks() {
            if d.blocks.binary_search(&gen.apply_set(b)).is_err() {
                return domain("block set is not closed under the group");
            }
        }
    }
    let b0 = &d.blocks[0];
    g.flag_orbit_size(b0[0], b0, &d.blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_generators;

    fn complete_graph(n: usize) -> Design {
        let mut blocks = Vec::new();
        for_each_subset(n, 2, |s| blocks.push(s.to_vec()));
        Design::new(n, blocks).unwrap()
    }

    #[test]
    fn complete_graph_is_design() {
        let d = complete_graph(4);
        assert_eq!(pair_coverage(&d), PairCoverage { is_2_design: true, lambda: Some(1), violation: None });
        assert_eq!(intersection_numbers(&d).unwrap().0, BTreeSet::from([0, 1]));
        assert_eq!(d.r(), Some(3));
    }

    #[test]
    fn design_validation() {
        assert!(Design::new(4, vec![vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(Design::new(4, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(Design::new(4, vec![vec![0, 4]]).is_err());
        let d = Design::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(intersection_numbers(&d).unwrap().0, BTreeSet::from([0]));
        assert!(!pair_coverage(&d).is_2_design);
        assert!(intersection_numbers(&Design::new(4, vec![vec![0, 1]]).unwrap()).is_err());
    }

    #[test]
    fn file_round_trip() {
        let d = complete_graph(5);
        let back = Design::parse(&d.to_file_string()).unwrap();
        assert_eq!(back, d);
        assert!(matches!(Design::parse("4 2 2\n1 2\n1 2\n"), Err(Error::Design(_))));
        assert!(matches!(Design::parse("4 1 2\n1 5\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn ranks_are_dense() {
        let r = SubsetRanker::new(7, 3);
        let mut i = 0;
        for_each_subset(7, 3, |s| {
            assert_eq!(r.rank(s), i);
            i += 1;
        });
        assert_eq!(i, 35);
    }

    #[test]
    fn identity_group_finds_nothing() {
        let g = parse_generators("degree 6\n1 2 3 4 5 6\n").unwrap();
        assert!(base_block_search(&g, 3, 10).unwrap().is_empty());
    }

    #[test]
    fn cap_refusal() {
        let g = Group::symmetric(30);
        match base_block_search(&g, 10, 10) {
            Err(Error::CapExceeded { required, cap }) => {
                assert_eq!(required, 30045015);
                assert_eq!(cap, DEFAULT_SUBSET_CAP);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trivial_group_not_flag_transitive() {
        let d = complete_graph(4);
        assert!(!verify_flag_transitive(&Group::trivial(4), &d).unwrap());
        assert!(verify_flag_transitive(&Group::symmetric(4), &d).unwrap());
        let c = Group::new(4, vec![crate::perm::Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()]).unwrap();
        assert!(verify_flag_transitive(&c, &Design::new(4, vec![vec![0, 1]]).unwrap()).is_err());
    }
}
