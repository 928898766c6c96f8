//! Face counts of matroid complexes from convolution formulas rather than face
//! enumeration, with closed forms for uniform matroids.
//!
//! For a general matroid the Bergman complex of a contraction `M/G` by a flat `G` is the
//! order complex of the open interval `(G, E)` of the lattice of flats, so its
//! f-polynomial is read off a chain-counting recursion over the lattice.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::combinatorics::{binomial, binomial_i, multinomial_chain};
use crate::complex::h_from_f;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::{Flat, FlatLattice, Matroid};
use crate::poly::Polynomial;

/// `Σ x^k` over chains `G < F_1 < ... < F_k < top` in the lattice, for every flat `G`.
struct IntervalChains {
    chains: HashMap<Flat, Polynomial>,
}

impl IntervalChains {
    fn new(lattice: &FlatLattice) -> Self {
        let d = lattice.rank();
        let mut chains: HashMap<Flat, Polynomial> = HashMap::new();
        chains.insert(lattice.top().clone(), Polynomial::zero());
        let x = Polynomial::monomial(1, 1);
        for r in (0..d).rev() {
            for g in lattice.level(r) {
                let mut p = Polynomial::one();
                for s in r + 1..d {
                    for f in lattice.level(s) {
                        if g.is_subset_of(f) {
                            p += &(&x * &chains[f]);
                        }
                    }
                }
                chains.insert(g.clone(), p);
            }
        }
        IntervalChains { chains }
    }

    /// f-polynomial of the Bergman complex of `M/G`.
    fn bergman_f(&self, g: &Flat) -> &Polynomial {
        &self.chains[g]
    }
}

/// `f(Bergman(U_{r,m}))`: chains of proper nonempty flats, i.e. chains of subsets of
/// sizes `T ⊆ [r-1]`, counted by multinomial coefficients.
pub fn f_bergman_uniform(r: usize, m: usize) -> Result<Polynomial> {
    if r > m {
        return Err(Error::InvalidArgument(format!("rank {r} exceeds size {m}")));
    }
    if r <= 1 {
        return Ok(Polynomial::one());
    }
    let mut coeffs = vec![BigInt::from(0); r];
    for t in (1..r as u64).powerset() {
        coeffs[t.len()] += multinomial_chain(m as u64, &t);
    }
    Ok(Polynomial::new(coeffs))
}

/// `|B(M)| x^d + (x+1) Σ_S x^{|S|} f(Bergman(M/S))`, summing over independent sets `S`
/// that are not bases.
pub fn f_augmented_via_prop23(m: &Matroid, limits: &Limits) -> Result<Polynomial> {
    if m.is_uniform() {
        return f_augmented_uniform(m.rank(), m.n());
    }
    let d = m.rank();
    let lattice = m.flat_lattice(limits)?;
    let intervals = IntervalChains::new(&lattice);
    let mut sum = Polynomial::zero();
    let mut bases = BigInt::from(0);
    for s in m.independent_sets(limits)? {
        if s.len() == d {
            bases += 1;
            continue;
        }
        let closure = m.closure_normalized(&s);
        sum += &intervals.bergman_f(&closure).shift(s.len());
    }
    Ok(Polynomial::monomial(bases, d) + &Polynomial::from_i64s(&[1, 1]) * &sum)
}

/// The uniform case: `C(n,d) x^d + (x+1) Σ_{j<d} C(n,j) x^j f(Bergman(U_{d-j,n-j}))`.
pub fn f_augmented_uniform(d: usize, n: usize) -> Result<Polynomial> {
    if d > n {
        return Err(Error::InvalidArgument(format!("rank {d} exceeds size {n}")));
    }
    let mut sum = Polynomial::zero();
    for j in 0..d {
        let term = f_bergman_uniform(d - j, n - j)?;
        sum += &term.scale(&binomial(n as u64, j as u64)).shift(j);
    }
    Ok(Polynomial::monomial(binomial(n as u64, d as u64), d)
        + &Polynomial::from_i64s(&[1, 1]) * &sum)
}

/// `h(I_M) + x Σ_F h(I_{M|F}) h(Bergman(M/F))` over proper flats `F`.
pub fn h_augmented_via_prop24(m: &Matroid, limits: &Limits) -> Result<Polynomial> {
    if m.is_uniform() {
        return h_augmented_uniform(m.rank(), m.n());
    }
    let d = m.rank();
    let lattice = m.flat_lattice(limits)?;
    let intervals = IntervalChains::new(&lattice);
    let mut total = h_independence(m, limits)?;
    let mut sum = Polynomial::zero();
    for r in 0..d {
        for flat in lattice.level(r) {
            let restriction = m.restriction(flat)?;
            let h_ind = h_independence(&restriction.matroid, limits)?;
            let h_berg = h_from_f(intervals.bergman_f(flat), d - 1 - r)?;
            sum += &(&h_ind * &h_berg);
        }
    }
    total += &sum.shift(1);
    Ok(total)
}

/// h-polynomial of the independence complex from the independent-set counts.
pub fn h_independence(m: &Matroid, limits: &Limits) -> Result<Polynomial> {
    if m.is_uniform() {
        return h_independence_uniform(m.rank(), m.n());
    }
    let f = Polynomial::new(m.independent_set_counts(limits)?);
    h_from_f(&f, m.rank())
}

/// `h_k(I_{U_{d,n}}) = C(n-d+k-1, k)` for `0 ≤ k ≤ d`.
pub fn h_independence_uniform(d: usize, n: usize) -> Result<Polynomial> {
    if d > n {
        return Err(Error::InvalidArgument(format!("rank {d} exceeds size {n}")));
    }
    Ok(Polynomial::new(
        (0..=d)
            .map(|k| binomial_i(n as i64 - d as i64 + k as i64 - 1, k as i64))
            .collect(),
    ))
}

/// `h_j = #{w ∈ S_n : Des(w) ⊆ [d-1], des(w) = j}`, the h-polynomial of the Bergman
/// complex of `U_{d,n}`, by inclusion–exclusion over descent sets.
pub fn h_bergman_uniform_descents(d: usize, n: usize) -> Result<Polynomial> {
    if d == 0 || d > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= d <= n, got d = {d}, n = {n}"
        )));
    }
    let subsets: Vec<Vec<u64>> = (1..d as u64).powerset().collect();
    let alpha: HashMap<&Vec<u64>, BigInt> = subsets
        .iter()
        .map(|t| (t, multinomial_chain(n as u64, t)))
        .collect();
    let mut coeffs = vec![BigInt::from(0); d];
    for t in &subsets {
        // β(T) = Σ_{T' ⊆ T} (-1)^{|T \ T'|} α(T')
        let mut beta = BigInt::from(0);
        for sub in t.iter().copied().powerset() {
            let a = &alpha[&sub];
            if (t.len() - sub.len()) % 2 == 0 {
                beta += a;
            } else {
                beta -= a;
            }
        }
        coeffs[t.len()] += beta;
    }
    Ok(Polynomial::new(coeffs))
}

/// The uniform case of the convolution formula:
/// `Σ_k C(n-d+k-1, k) x^k + x Σ_{k<d} C(n,k) h(Bergman(U_{d-k,n-k}))`.
pub fn h_augmented_uniform(d: usize, n: usize) -> Result<Polynomial> {
    let mut total = h_independence_uniform(d, n)?;
    let mut sum = Polynomial::zero();
    for k in 0..d {
        sum += &h_bergman_uniform_descents(d - k, n - k)?.scale(&binomial(n as u64, k as u64));
    }
    total += &sum.shift(1);
    Ok(total)
}

/// Eulerian polynomial `A_n(x) = Σ_w x^{des(w)}` over `w ∈ S_n`.
pub fn eulerian(n: usize) -> Polynomial {
    let mut row = vec![BigInt::from(1)];
    for j in 1..=n {
        let mut next = vec![BigInt::from(0); j];
        for k in 0..j {
            let stay = if k < row.len() {
                &row[k] * (k + 1)
            } else {
                BigInt::from(0)
            };
            let rise = if k >= 1 && k - 1 < row.len() {
                &row[k - 1] * (j - k)
            } else {
                BigInt::from(0)
            };
            next[k] = stay + rise;
        }
        row = next;
    }
    Polynomial::new(row)
}

/// `Ã_n(x) = 1 + x Σ_{j=1}^n C(n,j) A_j(x)`.
pub fn binomial_eulerian(n: usize) -> Polynomial {
    let mut sum = Polynomial::zero();
    for j in 1..=n {
        sum += &eulerian(j).scale(&binomial(n as u64, j as u64));
    }
    Polynomial::one() + sum.shift(1)
}
