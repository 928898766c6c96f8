//! Hilbert–Poincaré series of the Chow ring and the augmented Chow ring of a matroid,
//! and the identities expressing the reversed h-polynomials of the Bergman and augmented
//! Bergman complexes of `U_{d,n}` in terms of them.
//!
//! The Chow series counts Feichtner–Yuzvinsky monomials: chains `F_0 < F_1 < ... < F_k`
//! of flats starting at `F_0 = cl(∅)`, with an exponent `1 ≤ m_i ≤ rk F_i - rk F_{i-1} - 1`
//! on each step. It is zero when the matroid has a loop.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::combinatorics::{binomial, binomial_i, multinomial_chain};
use crate::enumeration::{h_augmented_uniform, h_bergman_uniform_descents};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::{Flat, FlatLattice, Matroid, ReprKind};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowSeries {
    pub polynomial: Polynomial,
    pub rank: usize,
    pub n: usize,
    pub repr: ReprKind,
    pub augmented: bool,
}

impl ChowSeries {
    fn of(m: &Matroid, polynomial: Polynomial, augmented: bool) -> Self {
        ChowSeries {
            polynomial,
            rank: m.rank(),
            n: m.n(),
            repr: m.repr_kind(),
            augmented,
        }
    }

    /// Palindromic of the degree forced by Poincaré duality (`d-1`, or `d` when augmented).
    pub fn is_palindromic(&self) -> bool {
        let top = if self.augmented {
            self.rank
        } else {
            self.rank.saturating_sub(1)
        };
        match self.polynomial.reversed(top) {
            Ok(r) => r == self.polynomial,
            Err(_) => false,
        }
    }
}

/// `x + x^2 + ... + x^{gap-1}`.
fn step(gap: usize) -> Polynomial {
    Polynomial::new((0..gap).map(|i| BigInt::from(u8::from(i >= 1))).collect())
}

/// Chow series of the interval `[g, top]`, i.e. of the contraction `M/g`.
fn interval_series(lattice: &FlatLattice, g: &Flat) -> Polynomial {
    let d = lattice.rank();
    let mut ending: HashMap<&Flat, Polynomial> = HashMap::new();
    ending.insert(g, Polynomial::one());
    let mut total = Polynomial::one();
    for r in g.rank() + 2..=d {
        for f in lattice.level(r) {
            if !g.is_subset_of(f) {
                continue;
            }
            let mut acc = Polynomial::zero();
            for (lower, count) in &ending {
                if lower.rank() + 2 <= r && lower.is_subset_of(f) {
                    acc += &(count * &step(r - lower.rank()));
                }
            }
            total += &acc;
            ending.insert(f, acc);
        }
    }
    total
}

/// Chow series of `U_{d,n}` with `d ≥ 1`, summed over rank sequences of chains.
fn uniform_series(d: usize, n: usize) -> Polynomial {
    let mut total = Polynomial::zero();
    for ranks in (1..=d as u64).powerset() {
        let Some(weight) = ranks
            .iter()
            .scan(0u64, |prev, &r| {
                let s = step((r - *prev) as usize);
                *prev = r;
                Some(s)
            })
            .try_fold(Polynomial::one(), |acc, s| {
                if s.is_zero() {
                    None
                } else {
                    Some(&acc * &s)
                }
            })
        else {
            continue;
        };
        // Flats of rank below d are the subsets of that size; rank d is E alone.
        let sizes: &[u64] = match ranks.last() {
            Some(&r) if r == d as u64 => &ranks[..ranks.len() - 1],
            _ => &ranks,
        };
        total += &weight.scale(&multinomial_chain(n as u64, sizes));
    }
    total
}

/// Chow series `H̲_M`. Zero if `M` has a loop and `1` in rank 0.
pub fn chow_hilbert(m: &Matroid, limits: &Limits) -> Result<ChowSeries> {
    let poly = if m.has_loops() {
        Polynomial::zero()
    } else if m.rank() == 0 {
        Polynomial::one()
    } else if m.is_uniform() {
        uniform_series(m.rank(), m.n())
    } else {
        let lattice = m.flat_lattice(limits)?;
        interval_series(&lattice, lattice.bottom())
    };
    Ok(ChowSeries::of(m, poly, false))
}

/// Augmented Chow series `H_M = Σ_F x^{rk F} H̲_{M/F}` over all flats `F`.
pub fn augmented_chow_hilbert(m: &Matroid, limits: &Limits) -> Result<ChowSeries> {
    let d = m.rank();
    let poly = if m.is_uniform() {
        let mut total = Polynomial::monomial(1, d);
        for r in 0..d {
            total += &uniform_series(d - r, m.n() - r)
                .scale(&binomial(m.n() as u64, r as u64))
                .shift(r);
        }
        total
    } else {
        let lattice = m.flat_lattice(limits)?;
        let mut total = Polynomial::zero();
        for f in lattice.flats() {
            total += &interval_series(&lattice, f).shift(f.rank());
        }
        total
    };
    Ok(ChowSeries::of(m, poly, true))
}

/// Both sides of an identity between polynomials, and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub d: usize,
    pub n: usize,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub holds: bool,
}

fn check_args(d: usize, n: usize, min_d: usize) -> Result<()> {
    if d < min_d || d > n {
        return Err(Error::InvalidArgument(format!(
            "need {min_d} <= d <= n, got d = {d}, n = {n}"
        )));
    }
    Ok(())
}

/// `x^{d-1} h(Bergman(U_{d,n}), 1/x) = Σ_{i=1}^d C(n-i-1, d-i) H̲_{U_{i,n}}(x)`.
pub fn verify_thm51(d: usize, n: usize) -> Result<IdentityCheck> {
    check_args(d, n, 1)?;
    let lhs = h_bergman_uniform_descents(d, n)?.reversed(d - 1)?;
    let mut rhs = Polynomial::zero();
    for i in 1..=d {
        let c = binomial_i(n as i64 - i as i64 - 1, (d - i) as i64);
        rhs += &uniform_series(i, n).scale(&c);
    }
    Ok(IdentityCheck {
        d,
        n,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// `x^d h(Δ_{U_{d,n}}, 1/x) = Σ_{i=0}^d C(n-i-1, d-i) H_{U_{i,n}}(x)`.
pub fn verify_thm52(d: usize, n: usize) -> Result<IdentityCheck> {
    check_args(d, n, 0)?;
    let lhs = h_augmented_uniform(d, n)?.reversed(d)?;
    verify_thm52_with(d, n, lhs)
}

/// The augmented identity with a caller-supplied left-hand side, already reversed.
pub fn verify_thm52_with(d: usize, n: usize, lhs: Polynomial) -> Result<IdentityCheck> {
    check_args(d, n, 0)?;
    let limits = Limits::unlimited();
    let mut rhs = Polynomial::zero();
    for i in 0..=d {
        let c = binomial_i(n as i64 - i as i64 - 1, (d - i) as i64);
        let series = augmented_chow_hilbert(&Matroid::uniform(i, n)?, &limits)?.polynomial;
        rhs += &series.scale(&c);
    }
    Ok(IdentityCheck {
        d,
        n,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn u(d: usize, n: usize) -> Matroid {
        Matroid::uniform(d, n).unwrap()
    }

    fn explicit(m: &Matroid) -> Matroid {
        Matroid::from_bases(m.n(), m.bases(&Limits::default()).unwrap()).unwrap()
    }

    #[test]
    fn hand_values() {
        let lim = Limits::default();
        let chow = |m: &Matroid| chow_hilbert(m, &lim).unwrap().polynomial;
        let aug = |m: &Matroid| augmented_chow_hilbert(m, &lim).unwrap().polynomial;
        for m in [u(2, 3), explicit(&u(2, 3))] {
            assert_eq!(chow(&m), p(&[1, 1]));
            assert_eq!(aug(&m), p(&[1, 4, 1]));
        }
        for m in [u(3, 3), explicit(&u(3, 3))] {
            assert_eq!(chow(&m), p(&[1, 4, 1]));
        }
        for m in [u(3, 4), explicit(&u(3, 4))] {
            assert_eq!(chow(&m), p(&[1, 7, 1]));
        }
        assert_eq!(aug(&u(1, 3)), p(&[1, 1]));
        assert_eq!(aug(&u(0, 3)), p(&[1]));
        assert_eq!(chow(&u(0, 3)), Polynomial::zero());
        assert_eq!(chow(&u(0, 0)), p(&[1]));
    }

    #[test]
    fn identities() {
        let c = verify_thm51(3, 4).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, p(&[3, 8, 1]));
        assert_eq!(verify_thm51(2, 3).unwrap().lhs, p(&[2, 1]));
        assert!(verify_thm51(1, 5).unwrap().holds);
        let c = verify_thm52(2, 3).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, p(&[3, 5, 1]));
        assert!(verify_thm52(0, 4).unwrap().holds);
        assert!(verify_thm51(0, 4).is_err());
    }
}
