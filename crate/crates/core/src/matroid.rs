//! Matroids on `[n] = {1, ..., n}` given either as uniform matroids or by an explicit
//! basis family, with rank, closure, flats, circuits and minors.
//!
//! Explicit basis families are stored as bitmasks, so they are limited to
//! [`MAX_EXPLICIT_ELEMENTS`] elements. Uniform matroids have no such limit and every
//! operation on them uses closed forms.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::combinatorics::binomial;
use crate::error::{Cap, Error, Result};
use crate::limits::Limits;

pub const MAX_EXPLICIT_ELEMENTS: usize = 64;

/// A flat: a closed subset of the ground set together with its rank.
///
/// The derived order compares rank first and then the sorted element lists
/// lexicographically, which is the order flat-vertices take in a complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    rank: usize,
    elements: Arc<[usize]>,
}

impl Flat {
    pub(crate) fn new(rank: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Flat {
            rank,
            elements: elements.into(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn is_subset_of(&self, other: &Flat) -> bool {
        is_sorted_subset(&self.elements, &other.elements)
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elements.iter().join(","))
    }
}

pub(crate) fn is_sorted_subset<T: PartialEq>(small: &[T], big: &[T]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReprKind {
    Uniform,
    ExplicitBases,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Uniform,
    /// Basis bitmasks (bit `e - 1` for element `e`), in lexicographic tuple order.
    Bases(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: usize,
    repr: Repr,
}

fn bit(e: usize) -> u64 {
    1u64 << (e - 1)
}

fn to_mask(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &e| m | bit(e))
}

fn from_mask(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let tz = mask.trailing_zeros() as usize;
        out.push(tz + 1);
        mask &= mask - 1;
    }
    out
}

impl Matroid {
    /// The uniform matroid `U_{d,n}`.
    pub fn uniform(rank: usize, n: usize) -> Result<Self> {
        if rank > n {
            return Err(Error::InvalidMatroid(format!(
                "uniform rank {rank} exceeds n = {n}"
            )));
        }
        Ok(Matroid {
            n,
            rank,
            repr: Repr::Uniform,
        })
    }

    /// The Boolean matroid `U_{n,n}`.
    pub fn boolean(n: usize) -> Self {
        Matroid {
            n,
            rank: n,
            repr: Repr::Uniform,
        }
    }

    /// Builds a matroid from its basis family, checking the basis-exchange axiom.
    pub fn from_bases(n: usize, bases: Vec<Vec<usize>>) -> Result<Self> {
        if n > MAX_EXPLICIT_ELEMENTS {
            return Err(Error::InvalidMatroid(format!(
                "explicit basis families support at most {MAX_EXPLICIT_ELEMENTS} elements, got n = {n}"
            )));
        }
        let Some(first) = bases.first() else {
            return Err(Error::InvalidMatroid("basis family is empty".into()));
        };
        let rank = first.len();
        let mut masks = Vec::with_capacity(bases.len());
        for basis in &bases {
            if basis.len() != rank {
                return Err(Error::InvalidMatroid(format!(
                    "bases have different sizes: {first:?} and {basis:?}"
                )));
            }
            for &e in basis {
                if e == 0 || e > n {
                    return Err(Error::ElementOutOfRange { element: e, n });
                }
            }
            let mask = to_mask(basis);
            if mask.count_ones() as usize != rank {
                return Err(Error::InvalidMatroid(format!(
                    "basis {basis:?} repeats an element"
                )));
            }
            masks.push(mask);
        }
        masks.sort_by_key(|&m| from_mask(m));
        masks.dedup();
        check_exchange(&masks)?;
        Ok(Matroid {
            n,
            rank,
            repr: Repr::Bases(masks),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn repr_kind(&self) -> ReprKind {
        match self.repr {
            Repr::Uniform => ReprKind::Uniform,
            Repr::Bases(_) => ReprKind::ExplicitBases,
        }
    }

    pub fn is_uniform(&self) -> bool {
        matches!(self.repr, Repr::Uniform)
    }

    pub fn ground_set(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }

    fn normalize(&self, set: &[usize]) -> Result<Vec<usize>> {
        let mut out = set.to_vec();
        out.sort_unstable();
        out.dedup();
        if let Some(&e) = out.iter().find(|&&e| e == 0 || e > self.n) {
            return Err(Error::ElementOutOfRange {
                element: e,
                n: self.n,
            });
        }
        Ok(out)
    }

    fn mask_rank(&self, masks: &[u64], set: u64) -> usize {
        masks
            .iter()
            .map(|b| (b & set).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn mask_closure(&self, masks: &[u64], set: u64) -> (usize, u64) {
        let r = self.mask_rank(masks, set);
        let mut closed = set;
        for e in 1..=self.n {
            let b = bit(e);
            if closed & b == 0 && self.mask_rank(masks, set | b) == r {
                closed |= b;
            }
        }
        (r, closed)
    }

    fn rank_normalized(&self, set: &[usize]) -> usize {
        match &self.repr {
            Repr::Uniform => set.len().min(self.rank),
            Repr::Bases(masks) => self.mask_rank(masks, to_mask(set)),
        }
    }

    /// Rank of a subset: the size of its largest independent subset.
    pub fn rank_of(&self, set: &[usize]) -> Result<usize> {
        let set = self.normalize(set)?;
        Ok(self.rank_normalized(&set))
    }

    pub fn is_independent(&self, set: &[usize]) -> Result<bool> {
        let set = self.normalize(set)?;
        Ok(self.rank_normalized(&set) == set.len())
    }

    pub fn is_basis(&self, set: &[usize]) -> Result<bool> {
        let set = self.normalize(set)?;
        Ok(set.len() == self.rank && self.rank_normalized(&set) == self.rank)
    }

    pub(crate) fn closure_normalized(&self, set: &[usize]) -> Flat {
        match &self.repr {
            Repr::Uniform => {
                if set.len() < self.rank {
                    Flat::new(set.len(), set.to_vec())
                } else {
                    Flat::new(self.rank, self.ground_set())
                }
            }
            Repr::Bases(masks) => {
                let (r, closed) = self.mask_closure(masks, to_mask(set));
                Flat::new(r, from_mask(closed))
            }
        }
    }

    /// The flat spanned by `set`.
    pub fn closure(&self, set: &[usize]) -> Result<Flat> {
        let set = self.normalize(set)?;
        Ok(self.closure_normalized(&set))
    }

    pub fn is_flat(&self, set: &[usize]) -> Result<bool> {
        let set = self.normalize(set)?;
        Ok(self.closure_normalized(&set).elements() == set.as_slice())
    }

    /// Elements lying in no basis.
    pub fn loops(&self) -> Vec<usize> {
        match &self.repr {
            Repr::Uniform if self.rank == 0 => self.ground_set(),
            Repr::Uniform => Vec::new(),
            Repr::Bases(masks) => {
                let covered = masks.iter().fold(0, |a, b| a | b);
                (1..=self.n).filter(|&e| covered & bit(e) == 0).collect()
            }
        }
    }

    pub fn has_loops(&self) -> bool {
        !self.loops().is_empty()
    }

    /// Elements lying in every basis.
    pub fn coloops(&self) -> Vec<usize> {
        match &self.repr {
            Repr::Uniform if self.rank == self.n => self.ground_set(),
            Repr::Uniform => Vec::new(),
            Repr::Bases(masks) => {
                let common = masks.iter().fold(u64::MAX, |a, b| a & b);
                (1..=self.n).filter(|&e| common & bit(e) != 0).collect()
            }
        }
    }

    pub fn basis_count(&self) -> BigInt {
        match &self.repr {
            Repr::Uniform => binomial(self.n as u64, self.rank as u64),
            Repr::Bases(masks) => BigInt::from(masks.len()),
        }
    }

    fn check_basis_cap(&self, limits: &Limits) -> Result<()> {
        let count = self.basis_count().to_usize().unwrap_or(usize::MAX);
        limits.check(Cap::Bases, count)
    }

    /// All bases as sorted tuples, in lexicographic order.
    pub fn bases(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        self.check_basis_cap(limits)?;
        Ok(match &self.repr {
            Repr::Uniform => (1..=self.n).combinations(self.rank).collect(),
            Repr::Bases(masks) => masks.iter().map(|&m| from_mask(m)).collect(),
        })
    }

    /// All independent sets, ordered by size and then lexicographically.
    pub fn independent_sets(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        let counts = self.independent_set_counts(limits)?;
        let total: BigInt = counts.iter().sum();
        limits.check(Cap::Faces, total.to_usize().unwrap_or(usize::MAX))?;
        let mut out: Vec<Vec<usize>> = match &self.repr {
            Repr::Uniform => (0..=self.rank)
                .flat_map(|k| (1..=self.n).combinations(k))
                .collect(),
            Repr::Bases(masks) => {
                let mut seen = HashSet::new();
                for &b in masks {
                    let mut sub = b;
                    loop {
                        seen.insert(sub);
                        if sub == 0 {
                            break;
                        }
                        sub = (sub - 1) & b;
                    }
                }
                seen.into_iter().map(from_mask).collect()
            }
        };
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Number of independent sets of each size `0..=rank`.
    pub fn independent_set_counts(&self, limits: &Limits) -> Result<Vec<BigInt>> {
        match &self.repr {
            Repr::Uniform => Ok((0..=self.rank)
                .map(|k| binomial(self.n as u64, k as u64))
                .collect()),
            Repr::Bases(masks) => {
                let mut seen = HashSet::new();
                for &b in masks {
                    let mut sub = b;
                    loop {
                        if seen.insert(sub) {
                            limits.check(Cap::Faces, seen.len())?;
                        }
                        if sub == 0 {
                            break;
                        }
                        sub = (sub - 1) & b;
                    }
                }
                let mut counts = vec![BigInt::from(0); self.rank + 1];
                for s in seen {
                    counts[s.count_ones() as usize] += 1;
                }
                Ok(counts)
            }
        }
    }

    /// The lattice of flats, graded by rank, with cover relations.
    pub fn flat_lattice(&self, limits: &Limits) -> Result<FlatLattice> {
        match &self.repr {
            Repr::Uniform => self.uniform_lattice(limits),
            Repr::Bases(masks) => self.closure_lattice(masks, limits),
        }
    }

    fn uniform_lattice(&self, limits: &Limits) -> Result<FlatLattice> {
        let (d, n) = (self.rank, self.n);
        let total: BigInt = (0..d).map(|k| binomial(n as u64, k as u64)).sum::<BigInt>() + 1;
        limits.check(Cap::Flats, total.to_usize().unwrap_or(usize::MAX))?;
        let mut levels: Vec<Vec<Flat>> = (0..d)
            .map(|k| (1..=n).combinations(k).map(|s| Flat::new(k, s)).collect())
            .collect();
        levels.push(vec![Flat::new(d, self.ground_set())]);
        FlatLattice::from_levels(levels, |flat| {
            if flat.rank() + 1 >= d {
                return vec![Flat::new(d, (1..=n).collect())];
            }
            (1..=n)
                .filter(|e| !flat.contains(*e))
                .map(|e| {
                    let mut s = flat.elements().to_vec();
                    s.push(e);
                    s.sort_unstable();
                    Flat::new(flat.rank() + 1, s)
                })
                .collect()
        })
    }

    fn closure_lattice(&self, masks: &[u64], limits: &Limits) -> Result<FlatLattice> {
        let bottom = self.mask_closure(masks, 0);
        let mut levels: Vec<Vec<u64>> = vec![vec![bottom.1]];
        let mut cover_masks: Vec<Vec<Vec<u64>>> = Vec::new();
        let mut total = 1usize;
        for _ in 0..self.rank {
            let current = levels.last().unwrap();
            let mut next: HashSet<u64> = HashSet::new();
            let mut level_covers = Vec::with_capacity(current.len());
            for &flat in current {
                let mut covered = flat;
                let mut covers = Vec::new();
                for e in 1..=self.n {
                    if covered & bit(e) != 0 {
                        continue;
                    }
                    let (_, g) = self.mask_closure(masks, flat | bit(e));
                    covered |= g;
                    covers.push(g);
                    if next.insert(g) {
                        total += 1;
                        limits.check(Cap::Flats, total)?;
                    }
                }
                level_covers.push(covers);
            }
            let mut next: Vec<u64> = next.into_iter().collect();
            next.sort_by_key(|&m| from_mask(m));
            cover_masks.push(level_covers);
            levels.push(next);
        }
        let flat_levels: Vec<Vec<Flat>> = levels
            .iter()
            .enumerate()
            .map(|(r, lvl)| lvl.iter().map(|&m| Flat::new(r, from_mask(m))).collect())
            .collect();
        let lookup: HashMap<u64, usize> = levels
            .iter()
            .flat_map(|lvl| lvl.iter().enumerate().map(|(i, &m)| (m, i)))
            .collect();
        let covers = cover_masks
            .into_iter()
            .map(|lvl| {
                lvl.into_iter()
                    .map(|cs| {
                        let mut idx: Vec<usize> = cs.iter().map(|m| lookup[m]).collect();
                        idx.sort_unstable();
                        idx.dedup();
                        idx
                    })
                    .collect()
            })
            .collect();
        Ok(FlatLattice::with_covers(flat_levels, covers))
    }

    /// Minimal dependent sets, sorted lexicographically.
    pub fn circuits(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        match &self.repr {
            Repr::Uniform => {
                if self.rank == self.n {
                    return Ok(Vec::new());
                }
                let count = binomial(self.n as u64, self.rank as u64 + 1);
                limits.check(Cap::Faces, count.to_usize().unwrap_or(usize::MAX))?;
                Ok((1..=self.n).combinations(self.rank + 1).collect())
            }
            Repr::Bases(masks) => {
                let independent = |m: u64| masks.iter().any(|b| m & !b == 0);
                let mut circuits: Vec<u64> = Vec::new();
                let mut examined = 0usize;
                for size in 1..=self.n.min(self.rank + 1) {
                    for combo in (1..=self.n).combinations(size) {
                        examined += 1;
                        limits.check(Cap::Faces, examined)?;
                        let m = to_mask(&combo);
                        if independent(m) || circuits.iter().any(|&c| c & m == c) {
                            continue;
                        }
                        circuits.push(m);
                    }
                }
                let mut out: Vec<Vec<usize>> = circuits.into_iter().map(from_mask).collect();
                out.sort();
                Ok(out)
            }
        }
    }

    /// Circuits with their minimum element removed, deduplicated and sorted.
    pub fn broken_circuits(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<usize>> = self
            .circuits(limits)?
            .into_iter()
            .map(|c| c[1..].to_vec())
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Bases containing no broken circuit, in lexicographic order.
    ///
    /// A loop is a one-element circuit whose broken circuit is empty, so a matroid
    /// with loops has no nbc bases.
    pub fn nbc_bases(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        if self.is_uniform() && self.rank >= 1 {
            let count = binomial(self.n as u64 - 1, self.rank as u64 - 1);
            limits.check(Cap::Bases, count.to_usize().unwrap_or(usize::MAX))?;
            return Ok((2..=self.n)
                .combinations(self.rank - 1)
                .map(|rest| std::iter::once(1).chain(rest).collect())
                .collect());
        }
        let broken = self.broken_circuits(limits)?;
        Ok(self
            .bases(limits)?
            .into_iter()
            .filter(|b| !broken.iter().any(|bc| is_sorted_subset(bc, b)))
            .collect())
    }

    /// Explicit basis family over a relabeled ground set.
    fn minor_from_masks(
        &self,
        keep: &[usize],
        new_bases: impl Iterator<Item = u64>,
    ) -> Result<Matroid> {
        let relabel: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(i, &e)| (e, i + 1)).collect();
        let mut bases: Vec<Vec<usize>> = new_bases
            .map(|m| from_mask(m).iter().map(|e| relabel[e]).collect())
            .collect();
        bases.sort();
        bases.dedup();
        Matroid::from_bases(keep.len(), bases)
    }

    fn restrict_to(&self, keep: &[usize]) -> Result<Minor> {
        let r = self.rank_normalized(keep);
        let matroid = match &self.repr {
            Repr::Uniform => Matroid::uniform(r, keep.len())?,
            Repr::Bases(masks) => {
                let km = to_mask(keep);
                let restricted: Vec<u64> = masks
                    .iter()
                    .map(|b| b & km)
                    .filter(|m| m.count_ones() as usize == r)
                    .collect();
                self.minor_from_masks(keep, restricted.into_iter())?
            }
        };
        Ok(Minor {
            matroid,
            labels: keep.to_vec(),
        })
    }

    /// `M|F`, with the elements of `F` relabeled `1..=|F|` in increasing order.
    pub fn restriction(&self, flat: &Flat) -> Result<Minor> {
        if !self.is_flat(flat.elements())? {
            return Err(Error::NotAFlat(flat.elements().to_vec()));
        }
        self.restrict_to(flat.elements())
    }

    /// The deletion of all loops (an order-preserving relabeling of the rest).
    pub fn delete_loops(&self) -> Result<Minor> {
        let loops = self.loops();
        let keep: Vec<usize> = (1..=self.n).filter(|e| !loops.contains(e)).collect();
        self.restrict_to(&keep)
    }

    /// `M/S`, with `E \ S` relabeled `1..` in increasing order.
    pub fn contraction(&self, set: &[usize]) -> Result<Minor> {
        let set = self.normalize(set)?;
        let keep: Vec<usize> = (1..=self.n)
            .filter(|e| set.binary_search(e).is_err())
            .collect();
        let r = self.rank_normalized(&set);
        let matroid = match &self.repr {
            Repr::Uniform => Matroid::uniform(self.rank - r, keep.len())?,
            Repr::Bases(masks) => {
                let sm = to_mask(&set);
                let contracted: Vec<u64> = masks
                    .iter()
                    .filter(|&&b| (b & sm).count_ones() as usize == r)
                    .map(|b| b & !sm)
                    .collect();
                self.minor_from_masks(&keep, contracted.into_iter())?
            }
        };
        Ok(Minor {
            matroid,
            labels: keep,
        })
    }
}

fn check_exchange(masks: &[u64]) -> Result<()> {
    let family: HashSet<u64> = masks.iter().copied().collect();
    for &b1 in masks {
        for &b2 in masks {
            let only1 = b1 & !b2;
            let only2 = b2 & !b1;
            for e in from_mask(only1) {
                let ok = from_mask(only2)
                    .into_iter()
                    .any(|f| family.contains(&((b1 & !bit(e)) | bit(f))));
                if !ok {
                    return Err(Error::BasisExchange {
                        first: from_mask(b1),
                        second: from_mask(b2),
                        element: e,
                    });
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Uniform => write!(f, "U({},{})", self.rank, self.n),
            Repr::Bases(masks) => write!(
                f,
                "M(n={}, rank {}, {} bases)",
                self.n,
                self.rank,
                masks.len()
            ),
        }
    }
}

/// A minor together with the order-preserving map back to the original ground set.
#[derive(Clone, Debug)]
pub struct Minor {
    pub matroid: Matroid,
    /// `labels[i - 1]` is the original element now called `i`.
    pub labels: Vec<usize>,
}

impl Minor {
    pub fn original(&self, e: usize) -> usize {
        self.labels[e - 1]
    }

    pub fn pull_back(&self, set: &[usize]) -> Vec<usize> {
        set.iter().map(|&e| self.original(e)).collect()
    }
}

/// All flats of a matroid grouped by rank, with upward cover relations.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    levels: Vec<Vec<Flat>>,
    /// `covers[k][i]`: indices into `levels[k + 1]` of the flats covering `levels[k][i]`.
    covers: Vec<Vec<Vec<usize>>>,
    index: HashMap<Flat, usize>,
}

impl FlatLattice {
    fn from_levels(levels: Vec<Vec<Flat>>, upper: impl Fn(&Flat) -> Vec<Flat>) -> Result<Self> {
        let index: HashMap<Flat, usize> = levels
            .iter()
            .flat_map(|lvl| lvl.iter().enumerate().map(|(i, f)| (f.clone(), i)))
            .collect();
        let covers = levels[..levels.len() - 1]
            .iter()
            .map(|lvl| {
                lvl.iter()
                    .map(|f| {
                        let mut idx: Vec<usize> = upper(f).iter().map(|g| index[g]).collect();
                        idx.sort_unstable();
                        idx
                    })
                    .collect()
            })
            .collect();
        Ok(FlatLattice {
            levels,
            covers,
            index,
        })
    }

    fn with_covers(levels: Vec<Vec<Flat>>, covers: Vec<Vec<Vec<usize>>>) -> Self {
        let index = levels
            .iter()
            .flat_map(|lvl| lvl.iter().enumerate().map(|(i, f)| (f.clone(), i)))
            .collect();
        FlatLattice {
            levels,
            covers,
            index,
        }
    }

    /// Rank of the top element.
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, rank: usize) -> &[Flat] {
        &self.levels[rank]
    }

    pub fn levels(&self) -> &[Vec<Flat>] {
        &self.levels
    }

    pub fn bottom(&self) -> &Flat {
        &self.levels[0][0]
    }

    pub fn top(&self) -> &Flat {
        &self.levels[self.rank()][0]
    }

    pub fn flat_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn counts_by_rank(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn flats(&self) -> impl Iterator<Item = &Flat> {
        self.levels.iter().flatten()
    }

    pub fn contains(&self, flat: &Flat) -> bool {
        self.index.contains_key(flat)
    }

    /// Index of `flat` within its rank level.
    pub fn position(&self, flat: &Flat) -> Option<usize> {
        self.index.get(flat).copied()
    }

    /// Flats covering `flat`.
    pub fn covers_of(&self, flat: &Flat) -> Vec<&Flat> {
        let Some(i) = self.position(flat) else {
            return Vec::new();
        };
        if flat.rank() >= self.rank() {
            return Vec::new();
        }
        self.covers[flat.rank()][i]
            .iter()
            .map(|&j| &self.levels[flat.rank() + 1][j])
            .collect()
    }

    /// Every saturated chain `flat = G_r ⋖ G_{r+1} ⋖ ... ⋖ G_top_rank`.
    pub fn saturated_chains(&self, flat: &Flat, top_rank: usize) -> Vec<Vec<Flat>> {
        let mut out = Vec::new();
        let Some(start) = self.position(flat) else {
            return out;
        };
        if flat.rank() > top_rank {
            return out;
        }
        let mut stack = vec![(flat.rank(), start)];
        self.chains_rec(&mut stack, top_rank, &mut out);
        out
    }

    fn chains_rec(
        &self,
        stack: &mut Vec<(usize, usize)>,
        top_rank: usize,
        out: &mut Vec<Vec<Flat>>,
    ) {
        let &(r, i) = stack.last().unwrap();
        if r == top_rank {
            out.push(
                stack
                    .iter()
                    .map(|&(r, i)| self.levels[r][i].clone())
                    .collect(),
            );
            return;
        }
        for &j in &self.covers[r][i] {
            stack.push((r + 1, j));
            self.chains_rec(stack, top_rank, out);
            stack.pop();
        }
    }
}
