//! Brute-force oracles computed straight from the definitions on bitmasks. Nothing here
//! calls into the library beyond reading a matroid's list of bases.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use matroid_ears::{Limits, Matroid, Polynomial};

pub fn mask(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &e| m | 1 << (e - 1))
}

pub fn unmask(m: u64) -> Vec<usize> {
    (1..=64).filter(|&e| m >> (e - 1) & 1 == 1).collect()
}

pub fn poly(coeffs: &[i128]) -> Polynomial {
    Polynomial::from_decimal_strings(&coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
        .unwrap()
}

/// A matroid as its bare basis family.
#[derive(Clone, Debug)]
pub struct Brute {
    pub n: usize,
    pub d: usize,
    pub bases: Vec<u64>,
}

impl Brute {
    pub fn of(m: &Matroid) -> Self {
        let bases: Vec<u64> = m
            .bases(&Limits::unlimited())
            .unwrap()
            .iter()
            .map(|b| mask(b))
            .collect();
        Brute {
            n: m.n(),
            d: m.rank(),
            bases,
        }
    }

    pub fn uniform(d: usize, n: usize) -> Self {
        Brute {
            n,
            d,
            bases: (1..=n).combinations(d).map(|b| mask(&b)).collect(),
        }
    }

    pub fn ground(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn subsets(&self) -> impl Iterator<Item = u64> {
        0..=self.ground()
    }

    pub fn rank(&self, s: u64) -> usize {
        self.bases
            .iter()
            .map(|b| (b & s).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn independent(&self, s: u64) -> bool {
        self.bases.iter().any(|b| b & s == s)
    }

    pub fn closure(&self, s: u64) -> u64 {
        let r = self.rank(s);
        (1..=self.n)
            .filter(|&e| self.rank(s | 1 << (e - 1)) == r)
            .fold(s, |m, e| m | 1 << (e - 1))
    }

    /// All flats, sorted by rank and then by mask.
    pub fn flats(&self) -> Vec<u64> {
        let mut f: Vec<u64> = self.subsets().filter(|&s| self.closure(s) == s).collect();
        f.sort_by_key(|&s| (self.rank(s), s));
        f
    }

    pub fn circuits(&self) -> Vec<u64> {
        let dependent = |s: u64| !self.independent(s);
        self.subsets()
            .filter(|&s| dependent(s) && unmask(s).iter().all(|&e| !dependent(s & !(1 << (e - 1)))))
            .collect()
    }

    /// nbc bases, ignoring loops (whose broken circuit would be empty).
    pub fn nbc_bases(&self) -> Vec<u64> {
        let broken: Vec<u64> = self
            .circuits()
            .into_iter()
            .filter(|c| c.count_ones() >= 2)
            .map(|c| c & (c - 1))
            .collect();
        self.bases
            .iter()
            .copied()
            .filter(|b| broken.iter().all(|bc| b & bc != *bc))
            .collect()
    }

    /// `Σ x^k` over chains `F_1 < ... < F_k` in `flats` that start at `start`
    /// (so `k ≥ 1`), indexed by `k`.
    fn chains_from(&self, flats: &[u64], start: u64) -> Vec<i128> {
        let mut out = vec![0i128; flats.len() + 2];
        out[1] = 1;
        for &g in flats {
            if g != start && g & start == start {
                let tail = self.chains_from(flats, g);
                for (k, c) in tail.iter().enumerate() {
                    if k + 1 < out.len() {
                        out[k + 1] += c;
                    }
                }
            }
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    /// f-vector (by face size) of the augmented Bergman complex, from its definition:
    /// an independent set `S` together with a chain of proper flats above it.
    pub fn augmented_f(&self) -> Vec<i128> {
        let e = self.ground();
        let proper: Vec<u64> = self
            .flats()
            .into_iter()
            .filter(|&f| self.closure(e) != f)
            .collect();
        let mut f = vec![0i128; self.d + 1];
        for s in self.subsets().filter(|&s| self.independent(s)) {
            let size = s.count_ones() as usize;
            f[size] += 1;
            for &first in proper.iter().filter(|&&g| g & s == s) {
                for (k, c) in self.chains_from(&proper, first).iter().enumerate() {
                    f[size + k] += c;
                }
            }
        }
        f
    }

    /// f-vector of the order complex of the flats strictly between `cl(∅)` and `E`.
    pub fn bergman_f(&self) -> Vec<i128> {
        let bottom = self.closure(0);
        let top = self.closure(self.ground());
        let inner: Vec<u64> = self
            .flats()
            .into_iter()
            .filter(|&f| f != bottom && f != top)
            .collect();
        let mut f = vec![0i128; self.d.max(1)];
        f[0] = 1;
        for &first in &inner {
            for (k, c) in self.chains_from(&inner, first).iter().enumerate() {
                f[k] += c;
            }
        }
        f
    }

    pub fn independence_f(&self) -> Vec<i128> {
        let mut f = vec![0i128; self.d + 1];
        for s in self.subsets().filter(|&s| self.independent(s)) {
            f[s.count_ones() as usize] += 1;
        }
        f
    }

    /// Chains `F_1 < ... < F_k` of flats above `cl(∅)`, as rank sequences.
    fn flag_rank_sequences(&self) -> Vec<Vec<usize>> {
        fn extend(
            b: &Brute,
            above: &[u64],
            last: u64,
            ranks: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            out.push(ranks.clone());
            for &g in above {
                if g != last && g & last == last {
                    ranks.push(b.rank(g));
                    extend(b, above, g, ranks, out);
                    ranks.pop();
                }
            }
        }
        let bottom = self.closure(0);
        let above: Vec<u64> = self.flats().into_iter().filter(|&f| f != bottom).collect();
        let mut out = Vec::new();
        extend(self, &above, bottom, &mut Vec::new(), &mut out);
        out
    }

    /// Feichtner–Yuzvinsky monomials `Π x_{F_i}^{m_i}` with `1 ≤ m_i ≤ gap_i - 1`, by degree.
    pub fn fy_count(&self) -> Vec<i128> {
        let mut out = vec![0i128; self.d.max(1)];
        if (1..=self.n).any(|e| self.rank(1 << (e - 1)) == 0) {
            return vec![];
        }
        for ranks in self.flag_rank_sequences() {
            let mut bounds = Vec::new();
            let mut prev = 0;
            for r in ranks {
                bounds.push(r - prev - 1);
                prev = r;
            }
            add_exponent_tuples(&mut out, &bounds, &vec![1; bounds.len()]);
        }
        trim(out)
    }

    /// The augmented FY basis of a loopless matroid: the first exponent ranges over
    /// `1..=rk F_1` and the others over `1..gap`.
    pub fn augmented_fy_count(&self) -> Vec<i128> {
        let mut out = vec![0i128; self.d + 1];
        for ranks in self.flag_rank_sequences() {
            let mut bounds = Vec::new();
            let mut prev = 0;
            for (i, r) in ranks.into_iter().enumerate() {
                bounds.push(if i == 0 { r } else { r - prev - 1 });
                prev = r;
            }
            add_exponent_tuples(&mut out, &bounds, &vec![1; bounds.len()]);
        }
        trim(out)
    }
}

/// Adds `x^{Σ m_i}` for every `lows[i] ≤ m_i ≤ highs[i]`.
fn add_exponent_tuples(out: &mut Vec<i128>, highs: &[usize], lows: &[usize]) {
    if highs.is_empty() {
        out[0] += 1;
        return;
    }
    if highs.iter().zip(lows).any(|(h, l)| h < l) {
        return;
    }
    let ranges: Vec<Vec<usize>> = highs
        .iter()
        .zip(lows)
        .map(|(&h, &l)| (l..=h).collect())
        .collect();
    for tuple in ranges.into_iter().multi_cartesian_product() {
        let t: usize = tuple.iter().sum();
        if out.len() <= t {
            out.resize(t + 1, 0);
        }
        out[t] += 1;
    }
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `h(x) = Σ_i f_i x^i (1-x)^{d-i}`, expanded term by term.
pub fn h_from_f(f: &[i128], d: usize) -> Vec<i128> {
    let mut h = vec![0i128; d + 1];
    for (i, &fi) in f.iter().enumerate() {
        // (1-x)^{d-i} = Σ_j (-1)^j C(d-i, j) x^j
        let mut c = 1i128;
        for j in 0..=d - i {
            h[i + j] += fi * c * if j % 2 == 0 { 1 } else { -1 };
            c = c * (d - i - j) as i128 / (j + 1) as i128;
        }
    }
    trim(h)
}

/// Whether each facet meets the union of the earlier ones in a pure codimension-one
/// complex: every `F_i ∩ F_j` with `i < j` lies in some `F_k ∩ F_j`, `k < j`, of size
/// `|F_j| - 1`.
pub fn is_shelling<T: Ord + Clone>(order: &[Vec<T>]) -> bool {
    let sets: Vec<BTreeSet<T>> = order.iter().map(|f| f.iter().cloned().collect()).collect();
    let Some(size) = sets.first().map(BTreeSet::len) else {
        return true;
    };
    if sets.iter().any(|s| s.len() != size) {
        return false;
    }
    for j in 1..sets.len() {
        let meets: Vec<BTreeSet<T>> = sets[..j]
            .iter()
            .map(|s| s.intersection(&sets[j]).cloned().collect())
            .collect();
        let ridges: Vec<&BTreeSet<T>> = meets.iter().filter(|m| m.len() + 1 == size).collect();
        if !meets.iter().all(|m| ridges.iter().any(|r| m.is_subset(r))) {
            return false;
        }
    }
    true
}

/// Permutations of `1..=n` and their descent sets.
pub fn descent_sets(n: usize) -> Vec<Vec<usize>> {
    (1..=n)
        .permutations(n)
        .map(|w| (1..n).filter(|&i| w[i - 1] > w[i]).collect())
        .collect()
}

/// `Σ x^{des(w)}` over `w ∈ S_n` with all descents in `[d-1]`.
pub fn restricted_descents(d: usize, n: usize) -> Vec<i128> {
    let mut h = vec![0i128; n.max(1)];
    for des in descent_sets(n) {
        if des.iter().all(|&i| i < d) {
            h[des.len()] += 1;
        }
    }
    trim(h)
}

pub fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `1 + x Σ_j C(n,j) A_j(x)` with the Eulerian polynomials counted on permutations.
pub fn binomial_eulerian(n: usize) -> Vec<i128> {
    let mut out = vec![0i128; n + 1];
    out[0] = 1;
    for j in 1..=n {
        for des in descent_sets(j) {
            out[1 + des.len()] += binomial(n, j);
        }
    }
    trim(out)
}
