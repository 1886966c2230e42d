//! Slow, definition-level reference computations.
//!
//! Nothing here shares code with `arith-tutte`: determinants are Leibniz
//! sums, ranks are largest nonvanishing minors, graph ranks are largest
//! forests, and polynomials are expanded with binomial coefficients into
//! plain text that the library's parser reads back.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Ascending element indices of a mask.
pub fn elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|&e| mask >> e & 1 == 1).collect()
}

/// All `k`-element subsets of `items`, as index vectors.
pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let (first, rest) = (items[0], &items[1..]);
    let mut out: Vec<Vec<usize>> = combinations(rest, k - 1)
        .into_iter()
        .map(|mut c| {
            c.insert(0, first);
            c
        })
        .collect();
    out.extend(combinations(rest, k));
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i32 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Leibniz determinant of a square matrix.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    permutations(m.len())
        .iter()
        .map(|p| {
            let prod: BigInt = p
                .iter()
                .enumerate()
                .map(|(i, &j)| m[i][j].clone())
                .product();
            if sign(p) > 0 {
                prod
            } else {
                -prod
            }
        })
        .sum()
}

/// Every `k x k` minor of the `height x |cols|` matrix formed by `cols`.
pub fn minors(columns: &[Vec<BigInt>], cols: &[usize], k: usize) -> Vec<BigInt> {
    let height = columns.first().map_or(0, Vec::len);
    let rows: Vec<usize> = (0..height).collect();
    let mut out = Vec::new();
    for rs in combinations(&rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| columns[c][r].clone()).collect())
                .collect();
            out.push(det(&sub));
        }
    }
    out
}

/// `(rank, gcd of the maximal nonvanishing minors)` of the columns in
/// `mask`; the gcd is 1 for rank 0.
pub fn rank_and_minor_gcd(columns: &[Vec<BigInt>], mask: u64) -> (u32, BigInt) {
    let cols = elements(mask);
    let height = columns.first().map_or(0, Vec::len);
    for k in (1..=cols.len().min(height)).rev() {
        let g = minors(columns, &cols, k)
            .iter()
            .fold(BigInt::zero(), |acc, d| acc.gcd(d));
        if !g.is_zero() {
            return (k as u32, g.abs());
        }
    }
    (0, BigInt::one())
}

/// Rank of the edge set `mask` in the cycle matroid: the size of a largest
/// forest, where a forest is an edge set in which every nonempty subset
/// touches more vertices than it has edges.
pub fn forest_rank(edges: &[(usize, usize)], mask: u64) -> u32 {
    let is_forest = |f: u64| {
        let mut sub = f;
        while sub != 0 {
            let mut touched = 0u64;
            for e in elements(sub) {
                touched |= 1 << edges[e].0 | 1 << edges[e].1;
            }
            if sub.count_ones() >= touched.count_ones() {
                return false;
            }
            sub = (sub - 1) & f;
        }
        true
    };
    let mut best = 0;
    let mut sub = mask;
    loop {
        if sub.count_ones() > best && is_forest(sub) {
            best = sub.count_ones();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    best
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(t - 1)^n` as exponent -> coefficient.
fn shifted_power(n: u32) -> BTreeMap<u32, BigInt> {
    (0..=n)
        .map(|k| {
            let c = binomial(n, k);
            (k, if (n - k).is_multiple_of(2) { c } else { -c })
        })
        .collect()
}

/// Polynomial text from `(monomial, coefficient)` pairs; monomials are
/// `*`-joined factors.
pub fn render(terms: BTreeMap<String, BigInt>) -> String {
    let mut out = String::new();
    for (mono, c) in terms.into_iter().filter(|(_, c)| !c.is_zero()) {
        let sep = match (out.is_empty(), c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        out.push_str(sep);
        let mag = c.abs();
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => out.push_str(&mag.to_string()),
            (false, true) => out.push_str(&mono),
            (false, false) => out.push_str(&format!("{mag}*{mono}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn factor(var: &str, exp: i64) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(var.to_owned()),
        e => Some(format!("{var}^{e}")),
    }
}

fn monomial(factors: impl IntoIterator<Item = Option<String>>) -> String {
    factors.into_iter().flatten().collect::<Vec<_>>().join("*")
}

/// `Σ_A m(A) q^{-rk A} Π_{e∈A} v_e`.
pub fn z_text(n: usize, rank: impl Fn(u64) -> u32, mult: impl Fn(u64) -> BigInt) -> String {
    let mut terms = BTreeMap::new();
    for a in 0..1u64 << n {
        let mono = monomial(
            std::iter::once(factor("q", -(rank(a) as i64)))
                .chain(elements(a).into_iter().map(|e| Some(format!("v{e}")))),
        );
        *terms.entry(mono).or_insert_with(BigInt::zero) += mult(a);
    }
    render(terms)
}

/// `Σ_A m(A) (x-1)^{r - rk A} (y-1)^{|A| - rk A}`, fully expanded.
pub fn tutte_text(n: usize, rank: impl Fn(u64) -> u32, mult: impl Fn(u64) -> BigInt) -> String {
    let full = rank((1u64 << n) - 1);
    let mut terms = BTreeMap::new();
    for a in 0..1u64 << n {
        let rk = rank(a);
        let m = mult(a);
        for (i, ci) in shifted_power(full - rk) {
            for (j, cj) in shifted_power(a.count_ones() - rk) {
                let mono = monomial([factor("x", i as i64), factor("y", j as i64)]);
                *terms.entry(mono).or_insert_with(BigInt::zero) += &m * &ci * &cj;
            }
        }
    }
    render(terms)
}

/// `Σ_A (-1)^{|A|} m(A) λ^{r - rk A}`, with `λ` written `l`.
pub fn chi_text(n: usize, rank: impl Fn(u64) -> u32, mult: impl Fn(u64) -> BigInt) -> String {
    let full = rank((1u64 << n) - 1);
    let mut terms = BTreeMap::new();
    for a in 0..1u64 << n {
        let mono = monomial([factor("l", (full - rank(a)) as i64)]);
        let m = mult(a);
        let m = if a.count_ones() % 2 == 0 { m } else { -m };
        *terms.entry(mono).or_insert_with(BigInt::zero) += m;
    }
    render(terms)
}

/// `Σ_{B basis} m(B)`; with `m ≡ 1` the number of bases.
pub fn weighted_bases(n: usize, rank: impl Fn(u64) -> u32, mult: impl Fn(u64) -> BigInt) -> BigInt {
    let full = rank((1u64 << n) - 1);
    (0..1u64 << n)
        .filter(|&a| a.count_ones() == full && rank(a) == full)
        .map(mult)
        .sum()
}
