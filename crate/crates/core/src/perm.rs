//! Permutation groups given by generators: a deterministic Schreier-Sims
//! stabilizer chain, and orbits on points, point sets and flags.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::error::{domain, Error, Result};

/// A bijection of `{0, ..., n-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    /// Fails unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return domain(format!("image {i} out of range for degree {n}"));
            }
            if std::mem::replace(&mut seen[i], true) {
                return domain(format!("image {i} repeated"));
            }
        }
        Ok(Permutation { images: images.into_iter().map(|i| i as u32).collect() })
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 0-based points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (i, &p) in c.iter().enumerate() {
                if p >= n {
                    return domain(format!("point {p} out of range for degree {n}"));
                }
                images[p] = c[(i + 1) % c.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// `self` followed by `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Smallest point not fixed.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &j)| *i as u32 != j).map(|(i, _)| i)
    }

    /// Image of a point set, sorted.
    pub fn apply_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&p| self.apply(p)).collect();
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[p]` maps `base` to `p` for `p` in the orbit.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[base] = Some(Permutation::identity(n));
        Level { base, gens: Vec::new(), orbit: vec![base], transversal }
    }
}

/// Base and strong generating set.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    fn build(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        for g in gens {
            chain.extend(0, g.clone());
        }
        chain
    }

    /// Strips `g` through the levels from `start`; returns the residue and
    /// the level at which it stopped (`levels.len()` if it passed them all).
    fn sift(&self, start: usize, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, lvl) in self.levels.iter().enumerate().skip(start) {
            let beta = h.apply(lvl.base);
            match &lvl.transversal[beta] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        let end = self.levels.len();
        (h, end)
    }

    /// Adds `g`, which fixes the base points of levels `< k`, to the group at
    /// level `k` and closes the chain under the new Schreier generators.
    fn extend(&mut self, k: usize, g: Permutation) {
        let (res, stop) = self.sift(k, &g);
        if stop == self.levels.len() && res.is_identity() {
            return;
        }
        if k == self.levels.len() {
            let base = g.first_moved().expect("non-identity");
            self.levels.push(Level::new(base, self.degree));
        }
        self.levels[k].gens.push(g);
        let new_gen = self.levels[k].gens.len() - 1;
        // pairs (orbit point, generator) still to examine
        let mut queue: VecDeque<(usize, usize)> =
            self.levels[k].orbit.iter().map(|&p| (p, new_gen)).collect();
        while let Some((beta, s)) = queue.pop_front() {
            let lvl = &self.levels[k];
            let gen = &lvl.gens[s];
            let u_beta = lvl.transversal[beta].as_ref().expect("orbit point");
            let gamma = gen.apply(beta);
            let u_beta_s = u_beta.then(gen);
            match &lvl.transversal[gamma] {
                None => {
                    let n_gens = lvl.gens.len();
                    let lvl = &mut self.levels[k];
                    lvl.transversal[gamma] = Some(u_beta_s);
                    lvl.orbit.push(gamma);
                    queue.extend((0..n_gens).map(|t| (gamma, t)));
                }
                Some(u_gamma) => {
                    let schreier = u_beta_s.then(&u_gamma.inverse());
                    if !schreier.is_identity() {
                        self.extend(k + 1, schreier);
                    }
                }
            }
        }
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Fundamental orbits, each in discovery order.
    pub fn orbits(&self) -> Vec<&[usize]> {
        self.levels.iter().map(|l| l.orbit.as_slice()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().map(|l| BigUint::from(l.orbit.len())).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, stop) = self.sift(0, g);
        stop == self.levels.len() && res.is_identity()
    }
}

/// A permutation group of fixed degree. The stabilizer chain is built on
/// first use and shared afterwards.
#[derive(Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl Clone for Group {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        Group { degree: self.degree, generators: self.generators.clone(), chain }
    }
}

impl Group {
    /// An empty generator list gives the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return domain("degree must be positive");
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return domain(format!("generator of degree {} in a group of degree {degree}", g.degree()));
        }
        let generators = if generators.is_empty() { vec![Permutation::identity(degree)] } else { generators };
        Ok(Group { degree, generators, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        Group::new(degree, Vec::new()).expect("positive degree")
    }

    /// `S_n` from a transposition and an `n`-cycle.
    pub fn symmetric(n: usize) -> Self {
        let cycle: Vec<usize> = (0..n).collect();
        let gens = if n < 2 {
            Vec::new()
        } else {
            vec![Permutation::from_cycles(n, &[&[0, 1]]).unwrap(), Permutation::from_cycles(n, &[&cycle]).unwrap()]
        };
        Group::new(n, gens).expect("valid")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| StabilizerChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    fn check_point(&self, p: usize) -> Result<()> {
        if p >= self.degree {
            return domain(format!("point {p} out of range for degree {}", self.degree));
        }
        Ok(())
    }

    pub fn orbit(&self, point: usize) -> Result<ActionOrbit> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        let mut elements = vec![point];
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    elements.push(q);
                    queue.push_back(q);
                }
            }
        }
        elements.sort_unstable();
        let stabilizer_order = self.order() / BigUint::from(elements.len());
        Ok(ActionOrbit { representative: point, elements, stabilizer_order })
    }

    /// Orbit of a point set; the images are sorted and listed in
    /// lexicographic order.
    pub fn set_orbit(&self, block: &[usize]) -> Result<Vec<Vec<usize>>> {
        if block.is_empty() {
            return domain("block is empty");
        }
        for &p in block {
            self.check_point(p)?;
        }
        let mut start = block.to_vec();
        start.sort_unstable();
        if start.windows(2).any(|w| w[0] == w[1]) {
            return domain("block has repeated points");
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(b) = queue.pop_front() {
            for g in &self.generators {
                let img = g.apply_set(&b);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Size of the orbit of the flag `(point, block)`. Every image block must
    /// lie in `blocks`.
    pub fn flag_orbit_size(&self, point: usize, block: &[usize], blocks: &[Vec<usize>]) -> Result<usize> {
        self.check_point(point)?;
        let mut b0 = block.to_vec();
        b0.sort_unstable();
        if b0.binary_search(&point).is_err() {
            return domain(format!("point {point} is not in the block"));
        }
        let index: HashMap<&[usize], usize> = blocks.iter().enumerate().map(|(i, b)| (b.as_slice(), i)).collect();
        let Some(&i0) = index.get(b0.as_slice()) else {
            return domain("block is not in the block list");
        };
        let mut seen: HashSet<(usize, usize)> = HashSet::from([(point, i0)]);
        let mut queue = VecDeque::from([(point, i0)]);
        while let Some((p, i)) = queue.pop_front() {
            for g in &self.generators {
                let img = g.apply_set(&blocks[i]);
                let Some(&j) = index.get(img.as_slice()) else {
                    return domain("block list is not closed under the group");
                };
                if seen.insert((g.apply(p), j)) {
                    queue.push_back((g.apply(p), j));
                }
            }
        }
        Ok(seen.len())
    }
}

/// Orbit of a point with its stabilizer order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionOrbit {
    pub representative: usize,
    pub elements: Vec<usize>,
    pub stabilizer_order: BigUint,
}

impl ActionOrbit {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Parses a generator file: `degree N`, then one permutation per line as
/// `N` 1-based images. `#` starts a comment.
pub fn parse_generators(text: &str) -> Result<Group> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(n) = degree else {
            let rest = line.strip_prefix("degree").ok_or_else(|| err("expected `degree N`".into()))?;
            let n: usize = rest.trim().parse().map_err(|_| err(format!("bad degree {:?}", rest.trim())))?;
            if n == 0 {
                return Err(err("degree must be positive".into()));
            }
            degree = Some(n);
            continue;
        };
        let images: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad point {t:?}"))))
            .collect::<Result<_>>()?;
        if images.len() != n {
            return Err(err(format!("expected {n} images, found {}", images.len())));
        }
        let mut zero_based = Vec::with_capacity(n);
        for p in images {
            if p == 0 || p > n {
                return Err(err(format!("point {p} out of range 1..={n}")));
            }
            zero_based.push(p - 1);
        }
        let perm = Permutation::from_images(zero_based).map_err(|e| err(e.to_string()))?;
        gens.push(perm);
    }
    let n = degree.ok_or(Error::Parse { line: 1, msg: "missing `degree N` line".into() })?;
    Group::new(n, gens)
}

/// Writes a group in the generator file format.
pub fn format_generators(g: &Group) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for p in g.generators() {
        let line: Vec<String> = p.images().map(|i| (i + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
