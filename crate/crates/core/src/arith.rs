//! Integer helpers shared by the sieves: divisors, binomials, factorials and
//! small integer polynomials used to turn "this rational function must be an
//! integer" into a finite divisor search.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, ascending primes with multiplicity.
pub fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n` in ascending order. `n` must be nonzero.
pub fn divisors(n: u128) -> Vec<u128> {
    assert!(n > 0, "divisors of zero");
    let mut divs = vec![1u128];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient in machine words; `None` on overflow.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) is divisible by (i + 1) at every step
        let num = acc.checked_mul(n as u128 - i)?;
        acc = num / (i + 1);
    }
    Some(acc)
}

pub fn big_to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}

/// Polynomial in one variable with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<i128>);

impl Poly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        Poly(coeffs)
    }

    /// `c * x + d`
    pub fn linear(c: i128, d: i128) -> Self {
        Poly::new(vec![d, c])
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeff(&self, i: usize) -> i128 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.0.iter().rev().fold(0i128, |acc, &c| acc * x + c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// `c^deg * self(-d/c)`: the constant left after clearing the linear
    /// divisor `c*x + d` from `self`. Whenever `c*x + d` divides `self(x)` at
    /// an integer `x`, it also divides this constant.
    pub fn remainder_constant(&self, c: i128, d: i128) -> i128 {
        let deg = self.degree() as u32;
        self.0
            .iter()
            .enumerate()
            .map(|(i, &a)| a * (-d).pow(i as u32) * c.pow(deg - i as u32))
            .sum()
    }

    pub fn render(&self, var: &str) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match i {
                0 => format!("{mag}"),
                1 if mag == 1 => var.to_string(),
                1 => format!("{mag}{var}"),
                _ if mag == 1 => format!("{var}^{i}"),
                _ => format!("{mag}{var}^{i}"),
            };
            if terms.is_empty() {
                terms.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                terms.push(format!("{} {body}", if c < 0 { "-" } else { "+" }));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" ")
        }
    }
}

/// Integers `x >= min_x` at which the linear form `c*x + d` can divide
/// `numerator(x)`. Returns `None` when the remainder constant vanishes and
/// no finite list follows from this divisibility alone.
pub fn linear_divisor_candidates(numerator: &Poly, c: i128, d: i128, min_x: i128) -> Option<Vec<i128>> {
    assert!(c != 0, "divisor must be a non-constant linear form");
    let rem = numerator.remainder_constant(c, d);
    if rem == 0 {
        return None;
    }
    let mut xs: Vec<i128> = Vec::new();
    for delta in divisors(rem.unsigned_abs()) {
        let delta = delta as i128;
        for target in [delta, -delta] {
            let diff = target - d;
            if diff % c == 0 {
                let x = diff / c;
                if x >= min_x {
                    xs.push(x);
                }
            }
        }
    }
    xs.sort_unstable();
    xs.dedup();
    Some(xs)
}
