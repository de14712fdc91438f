#![allow(dead_code)]

/// Direct search over `(k, lambda)` testing every sieve condition literally.
/// `r` is pinned by `r(k-1) = lambda(v-1)`, so it is not looped over.
pub fn brute_force(v: u64, y: u64) -> Vec<(u64, u64, u64, u64, u64, u64)> {
    let mut out = Vec::new();
    for k in 3..v.saturating_sub(1) {
        for lambda in 2..k {
            let num = lambda * (v - 1);
            if !num.is_multiple_of(k - 1) {
                continue;
            }
            let r = num / (k - 1);
            if let Some(t) = test_tuple(v, y, k, r, lambda) {
                out.push(t);
            }
        }
    }
    out.sort_by_key(|t| (t.0, t.4));
    out
}

/// Literal triple loop including `r`; only usable for small `v`.
pub fn brute_force_triple(v: u64, y: u64) -> Vec<(u64, u64, u64, u64, u64, u64)> {
    let mut out = Vec::new();
    for k in 3..v.saturating_sub(1) {
        for lambda in 2..k {
            for r in (lambda + 1)..=v * (v - 1) {
                if let Some(t) = test_tuple(v, y, k, r, lambda) {
                    out.push(t);
                }
            }
        }
    }
    out.sort_by_key(|t| (t.0, t.4));
    out
}

fn test_tuple(v: u64, y: u64, k: u64, r: u64, lambda: u64) -> Option<(u64, u64, u64, u64, u64, u64)> {
    let window = k < v && (y - 1) * v < k * k - k;
    let eq1 = r * (k - 1) == lambda * (v - 1);
    let eq2 = (y - 1) * (r - 1) == (k - 1) * (lambda - 1);
    let div = k.is_multiple_of(y) && r >= lambda && (r - lambda).is_multiple_of(y);
    let order = r > k && k > lambda && lambda > 1;
    let b_ok = (v * r).is_multiple_of(k);
    (window && eq1 && eq2 && div && order && b_ok).then(|| (y, v, v * r / k, r, k, lambda))
}

/// Same search as [`brute_force`], stepping `lambda` through the multiples
/// of `(k-1)/gcd(k-1, v-1)`, the only values where `r` is integral.
pub fn brute_force_stepped(v: u64, y: u64) -> Vec<(u64, u64, u64, u64, u64, u64)> {
    let mut out = Vec::new();
    for k in 3..v.saturating_sub(1) {
        let step = (k - 1) / gcd(k - 1, v - 1);
        let mut lambda = step.max(2).div_ceil(step) * step;
        while lambda < k {
            let r = lambda * (v - 1) / (k - 1);
            if let Some(t) = test_tuple(v, y, k, r, lambda) {
                out.push(t);
            }
            lambda += step;
        }
    }
    out.sort_by_key(|t| (t.0, t.4));
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Named generator sets, as lists of 0-based image arrays, for groups of
/// order at most 10000. Orders are left to the enumeration oracle.
pub fn group_corpus() -> Vec<(String, usize, Vec<Vec<usize>>)> {
    let mut out = Vec::new();
    let cycle = |n: usize| (0..n).map(|i| (i + 1) % n).collect::<Vec<_>>();
    let swap = |n: usize, a: usize, b: usize| {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(a, b);
        p
    };
    for n in 2..=7 {
        out.push((format!("S{n}"), n, vec![swap(n, 0, 1), cycle(n)]));
    }
    for n in 3..=7 {
        // 3-cycles (0 1 i)
        let gens = (2..n)
            .map(|i| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = i;
                p[i] = 0;
                p
            })
            .collect();
        out.push((format!("A{n}"), n, gens));
    }
    for n in [5usize, 12] {
        out.push((format!("C{n}"), n, vec![cycle(n)]));
    }
    for n in [5usize, 8, 12] {
        let refl = (0..n).map(|i| (n - i) % n).collect();
        out.push((format!("D{}", 2 * n), n, vec![cycle(n), refl]));
    }
    for (p, g) in [(5usize, 2usize), (7, 3), (11, 2), (13, 2)] {
        let mult = (0..p).map(|x| x * g % p).collect();
        out.push((format!("AGL(1,{p})"), p, vec![cycle(p), mult]));
    }
    for p in [5usize, 7, 11] {
        // projective line: points 0..p-1 and infinity = p
        let inf = p;
        let t: Vec<usize> = (0..=p).map(|x| if x == inf { inf } else { (x + 1) % p }).collect();
        let inv = |x: usize| (1..p).find(|y| x * y % p == 1).unwrap();
        let s: Vec<usize> = (0..=p)
            .map(|x| match x {
                x if x == inf => 0,
                0 => inf,
                x => (p - inv(x)) % p,
            })
            .collect();
        out.push((format!("PSL(2,{p})"), p + 1, vec![t, s]));
    }
    // S2 wr S3 on 6 points and S4 x S3 on 7 points
    out.push(("S2wrS3".into(), 6, vec![swap(6, 0, 1), vec![2, 3, 4, 5, 0, 1], vec![2, 3, 0, 1, 4, 5]]));
    out.push((
        "S4xS3".into(),
        7,
        vec![swap(7, 0, 1), vec![1, 2, 3, 0, 4, 5, 6], swap(7, 4, 5), vec![0, 1, 2, 3, 5, 6, 4]],
    ));
    out.push(("trivial".into(), 5, vec![(0..5).collect()]));
    out
}

/// All elements of the group generated by `gens`, by closing under right
/// multiplication with the generators.
pub fn enumerate_elements(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    use std::collections::HashSet;
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    let mut all: Vec<Vec<usize>> = seen.into_iter().collect();
    all.sort();
    all
}
