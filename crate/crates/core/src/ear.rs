//! A convex ear decomposition of the augmented Bergman complex, one ear per basis in
//! lexicographic order, with every ball, sphere and gluing condition checked.
//!
//! Ear `k` comes from the sphere `Ω_{B_k}`: it is what remains of `Ω_{B_k}` after
//! removing the interior of the ball where `Ω_{B_k}` meets the earlier spheres. For
//! uniform matroids that ball is `Ω_{B_k}(Γ_k)`, where `Γ_k` is the part of `sd_{B_k}`
//! already covered by earlier bases; in general it can be smaller, so the ears are cut
//! along the actual intersection.

use std::collections::{BTreeMap, HashMap, HashSet};

use itertools::Itertools;

use crate::complex::{
    face_from, Face, Manifold, Shelling, ShellingState, SimplicialComplex, Vertex,
};
use crate::complexes::{augmented_bergman_complex, BasisSphere};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::{Flat, Matroid};

/// All bases as increasing tuples in lexicographic order.
pub fn lex_bases(m: &Matroid, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    m.bases(limits)
}

/// A maximal chain of flats with its minimal labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledChain {
    pub chain: Vec<Flat>,
    pub label: Vec<usize>,
}

/// `a_i = min{e : cl(F_{i-1} ∪ e) = F_i}` for a maximal chain `F_0 ⊂ ... ⊂ F_d`.
pub fn minimal_labeling(m: &Matroid, chain: &[Flat]) -> Result<LabeledChain> {
    let d = m.rank();
    let bad = |why: &str| Error::NotMaximalChain(format!("{why}: {}", chain.iter().join(" < ")));
    if chain.len() != d + 1 {
        return Err(bad("wrong length"));
    }
    if chain[0] != m.closure(&[])? || chain[d].len() != m.n() {
        return Err(bad(
            "chain must run from the closure of the empty set to the ground set",
        ));
    }
    for (i, flat) in chain.iter().enumerate() {
        if flat.rank() != i || !m.is_flat(flat.elements())? || m.rank_of(flat.elements())? != i {
            return Err(bad("flats must have ranks 0, 1, ..., d"));
        }
    }
    let mut label = Vec::with_capacity(d);
    for w in chain.windows(2) {
        if !w[0].is_subset_of(&w[1]) {
            return Err(bad("chain is not increasing"));
        }
        let a = (1..=m.n())
            .find(|&e| {
                let mut s = w[0].elements().to_vec();
                s.push(e);
                m.closure(&s).is_ok_and(|c| c == w[1])
            })
            .ok_or_else(|| bad("no element generates a step"))?;
        label.push(a);
    }
    debug_assert!(m.is_basis(&label).unwrap_or(false));
    Ok(LabeledChain {
        chain: chain.to_vec(),
        label,
    })
}

pub fn inversions(permutation: &[usize]) -> usize {
    permutation
        .iter()
        .tuple_combinations()
        .filter(|(a, b)| a > b)
        .count()
}

/// Sorts permutations by number of inversions and then lexicographically, a linear
/// extension of the weak order.
pub fn weak_order_sort(perms: &mut [Vec<usize>]) {
    perms.sort_by(|a, b| inversions(a).cmp(&inversions(b)).then_with(|| a.cmp(b)));
}

/// Whether a set of permutations is closed under swapping adjacent descents.
pub fn is_weak_order_ideal(perms: &[Vec<usize>]) -> bool {
    let set: HashSet<&Vec<usize>> = perms.iter().collect();
    perms.iter().all(|p| {
        (0..p.len().saturating_sub(1)).all(|i| {
            if p[i] < p[i + 1] {
                return true;
            }
            let mut q = p.clone();
            q.swap(i, i + 1);
            set.contains(&q)
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaKind {
    /// A proper subcomplex of `sd_{B_k}`, certified a shellable ball.
    ProperBall,
    /// All of `sd_{B_k}`.
    WholeSphere,
}

#[derive(Clone, Debug)]
pub struct Gamma {
    pub complex: SimplicialComplex,
    pub kind: GammaKind,
    /// Facets of the complex in a verified shelling order (weak order on permutations).
    pub shelling: Vec<Face>,
}

/// Lexicographically ordered bases with their spheres `Ω_B` and nbc status.
struct BasisOrder {
    matroid: Matroid,
    bases: Vec<Vec<usize>>,
    spheres: Vec<BasisSphere>,
    nbc: Vec<bool>,
    top: Flat,
}

impl BasisOrder {
    fn new(m: &Matroid, limits: &Limits) -> Result<Self> {
        let bases = lex_bases(m, limits)?;
        let spheres = bases
            .iter()
            .map(|b| BasisSphere::new(m, b))
            .collect::<Result<Vec<_>>>()?;
        let nbc_set: HashSet<Vec<usize>> =
            nbc_bases_ignoring_loops(m, limits)?.into_iter().collect();
        let nbc = bases.iter().map(|b| nbc_set.contains(b)).collect();
        let top = m.closure(&m.ground_set())?;
        Ok(BasisOrder {
            matroid: m.clone(),
            bases,
            spheres,
            nbc,
            top,
        })
    }

    fn label_matches(&self, k: usize, perm: &[usize]) -> Result<bool> {
        let sphere = &self.spheres[k];
        let mut chain = vec![sphere.bottom().clone()];
        for i in 1..perm.len() {
            chain.push(sphere.closure_of(&perm[..i]).clone());
        }
        if !perm.is_empty() {
            chain.push(self.top.clone());
        }
        Ok(minimal_labeling(&self.matroid, &chain)?.label == perm)
    }

    fn lambda(&self, k: usize) -> Result<SimplicialComplex> {
        let sphere = &self.spheres[k];
        let mut facets = Vec::new();
        for perm in sphere.permutations() {
            if self.label_matches(k, &perm)? {
                facets.push(sphere.flag(&perm));
            }
        }
        Ok(SimplicialComplex::from_facets_unchecked(facets))
    }

    /// `Γ_k` from the faces of the earlier `sd_{B_i}`, classified and certified.
    fn gamma(&self, k: usize, earlier_sd: &HashSet<Face>, limits: &Limits) -> Result<Gamma> {
        let sphere = &self.spheres[k];
        let sd = sphere.sd();
        let own = sd.face_set(limits)?;
        let shared: HashSet<Face> = own.intersection(earlier_sd).cloned().collect();
        let complex = SimplicialComplex::from_face_set(&shared);
        let kind = if complex == sd {
            GammaKind::WholeSphere
        } else {
            GammaKind::ProperBall
        };
        let expected = if self.nbc[k] {
            GammaKind::ProperBall
        } else {
            GammaKind::WholeSphere
        };
        if kind != expected {
            return Err(Error::Certificate(format!(
                "basis {:?} (nbc = {}) has Γ classified {kind:?}",
                self.bases[k], self.nbc[k]
            )));
        }
        let mut perms: Vec<Vec<usize>> = complex
            .facets()
            .iter()
            .map(|f| {
                sphere.permutation_of(f).ok_or_else(|| {
                    Error::Certificate("Γ has a facet that is not a flag of the basis".into())
                })
            })
            .collect::<Result<_>>()?;
        if kind == GammaKind::ProperBall && !is_weak_order_ideal(&perms) {
            return Err(Error::Certificate(format!(
                "Γ for basis {:?} is not a weak-order ideal",
                self.bases[k]
            )));
        }
        weak_order_sort(&mut perms);
        let shelling: Vec<Face> = perms.iter().map(|p| sphere.flag(p)).collect();
        let cert = complex.ball_or_sphere(&shelling)?;
        let want = match kind {
            GammaKind::ProperBall => Manifold::Ball,
            GammaKind::WholeSphere => Manifold::Sphere,
        };
        if cert.kind != want {
            return Err(Error::Certificate(format!(
                "Γ for basis {:?} is a {:?}, expected a {want:?}",
                self.bases[k], cert.kind
            )));
        }
        Ok(Gamma {
            complex,
            kind,
            shelling,
        })
    }
}

/// nbc bases of the matroid with its loops deleted, in the original labels.
///
/// Loops make the empty set a broken circuit, so taken literally no basis would be
/// nbc; the loop-free matroid has the same bases and the same lattice of flats.
pub fn nbc_bases_ignoring_loops(m: &Matroid, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    if !m.has_loops() {
        return m.nbc_bases(limits);
    }
    let minor = m.delete_loops()?;
    Ok(minor
        .matroid
        .nbc_bases(limits)?
        .iter()
        .map(|b| minor.pull_back(b))
        .collect())
}

fn check_index(m: usize, k: usize) -> Result<usize> {
    if k == 0 || k > m {
        return Err(Error::IndexOutOfRange { index: k, len: m });
    }
    Ok(k - 1)
}

/// `Λ_k` (1-based `k`): the facets of `sd_{B_k}` whose chain has minimal labeling equal to
/// the permutation of `B_k` that produces it.
pub fn lambda_k(m: &Matroid, k: usize, limits: &Limits) -> Result<SimplicialComplex> {
    let order = BasisOrder::new(m, limits)?;
    let k = check_index(order.bases.len(), k)?;
    order.lambda(k)
}

/// `Λ_1, ..., Λ_m`.
pub fn lambda_complexes(m: &Matroid, limits: &Limits) -> Result<Vec<SimplicialComplex>> {
    let order = BasisOrder::new(m, limits)?;
    (0..order.bases.len()).map(|k| order.lambda(k)).collect()
}

/// `Γ_k = sd_{B_k} ∩ ⋃_{i<k} sd_{B_i}` for `2 ≤ k ≤ m`, classified and certified.
pub fn gamma_k(m: &Matroid, k: usize, limits: &Limits) -> Result<Gamma> {
    let order = BasisOrder::new(m, limits)?;
    let idx = check_index(order.bases.len(), k)?;
    if idx == 0 {
        return Err(Error::InvalidArgument("Γ_k is defined for k >= 2".into()));
    }
    let mut earlier = HashSet::new();
    for sphere in &order.spheres[..idx] {
        earlier.extend(sphere.sd().face_set(limits)?);
    }
    order.gamma(idx, &earlier, limits)
}

/// A shelling of `Ω_B(Γ)` built from a shelling of `Γ`: facets are grouped by their
/// element part `S` (by size, then lexicographically), and within a group follow the
/// position in the `Γ` shelling of the facet `C_S ∪ σ(F)`, where `C_S` is the chain of
/// closures of the increasing prefixes of `S`.
pub fn lemma22_order(
    sphere: &BasisSphere,
    gamma: &SimplicialComplex,
    gamma_shelling: &[Face],
) -> Result<Vec<Face>> {
    if let Shelling::Invalid { position } = gamma.verify_shelling(gamma_shelling)? {
        return Err(Error::InvalidShelling { position });
    }
    let glued = sphere.omega_gamma(gamma)?;
    if sphere.rank() <= 1 {
        return Ok(glued.into_facets());
    }
    let position: HashMap<&Face, usize> = gamma_shelling
        .iter()
        .enumerate()
        .map(|(i, f)| (f, i))
        .collect();
    let mut groups: BTreeMap<(usize, Vec<usize>), Vec<((usize, usize), Face)>> = BTreeMap::new();
    for facet in glued.facets() {
        let s = BasisSphere::element_part(facet);
        let sigma = sphere.sigma(facet);
        let prefixes = (1..=s.len()).map(|i| Vertex::Flat(sphere.closure_of(&s[..i]).clone()));
        let full = face_from(prefixes.chain(sigma.iter().cloned()));
        let key = match position.get(&full) {
            Some(&i) => (0, i),
            None => {
                let i = gamma_shelling
                    .iter()
                    .position(|g| crate::matroid::is_sorted_subset(&sigma, g))
                    .unwrap_or(usize::MAX);
                (1, i)
            }
        };
        groups
            .entry((s.len(), s))
            .or_default()
            .push((key, facet.clone()));
    }
    let order: Vec<Face> = groups
        .into_values()
        .flat_map(|mut g| {
            g.sort();
            g.into_iter().map(|(_, f)| f)
        })
        .collect();
    match glued.verify_shelling(&order)? {
        Shelling::Valid { .. } => Ok(order),
        Shelling::Invalid { position } => Err(Error::Certificate(format!(
            "grouped order of Ω_B(Γ) for basis {:?} fails at position {position}",
            sphere.basis()
        ))),
    }
}

/// [`lemma22_order`] for `Ω_V(Γ)` with `V = [d]`.
pub fn lemma22_shelling(
    d: usize,
    gamma: &SimplicialComplex,
    gamma_shelling: &[Face],
) -> Result<Vec<Face>> {
    if d == 0 {
        return Err(Error::InvalidArgument("Ω_V needs d >= 1".into()));
    }
    lemma22_order(&BasisSphere::boolean(d), gamma, gamma_shelling)
}

/// Facets of `sd_B` in weak order.
pub fn weak_order_shelling(sphere: &BasisSphere) -> Vec<Face> {
    let mut perms = sphere.permutations();
    weak_order_sort(&mut perms);
    perms.iter().map(|p| sphere.flag(p)).collect()
}

/// A shelling of `Ω_B`: the grouped order for `Γ = sd_B` followed by `u_B`.
pub fn sphere_shelling(sphere: &BasisSphere) -> Result<Vec<Face>> {
    if sphere.rank() == 0 {
        return Ok(vec![Vec::new()]);
    }
    let sd = sphere.sd();
    let mut order = lemma22_order(sphere, &sd, &weak_order_shelling(sphere))?;
    order.push(sphere.element_facet());
    Ok(order)
}

/// A shelling of the covered part of `Ω_B`: `seed` (an ordering of a superset of its
/// facets) restricted to its facets when that is a shelling, otherwise a greedy
/// reordering of it.
fn overlap_shelling(glued: &SimplicialComplex, seed: &[Face]) -> Option<Vec<Face>> {
    let restricted: Vec<Face> = seed.iter().filter(|f| glued.is_facet(f)).cloned().collect();
    if restricted.len() != glued.facet_count() {
        return None;
    }
    if crate::complex::shelling_of(&restricted).is_valid() {
        return Some(restricted);
    }
    complete_shelling(&[], restricted)
}

/// Extends a shelling `prefix` greedily by `candidates`, taking at each step the first
/// candidate that keeps the sequence a shelling. Returns the appended facets.
fn complete_shelling(prefix: &[Face], mut candidates: Vec<Face>) -> Option<Vec<Face>> {
    let mut state = ShellingState::default();
    for f in prefix {
        state.push(f);
    }
    let mut appended = Vec::with_capacity(candidates.len());
    while !candidates.is_empty() {
        let next = candidates.iter().position(|f| state.admits(f).0)?;
        let facet = candidates.remove(next);
        state.push(&facet);
        appended.push(facet);
    }
    Some(appended)
}

#[derive(Clone, Debug)]
pub struct Ear {
    /// 1-based position in the decomposition.
    pub index: usize,
    pub basis: Vec<usize>,
    pub nbc: bool,
    /// The sphere `Ω_{B_k}` this ear is cut from.
    pub source: SimplicialComplex,
    pub lambda: SimplicialComplex,
    /// `Γ_k`, absent for the first ear.
    pub gamma: Option<Gamma>,
    /// `Ω_{B_k} ∩ ⋃_{i<k} Ω_{B_i}`, the part of the source already covered; absent for
    /// the first ear.
    pub glued: Option<SimplicialComplex>,
    /// Whether `glued` equals `Ω_{B_k}(Γ_k)`. This holds for uniform matroids but can
    /// fail once some element of `B_k` lies in no earlier basis.
    pub glued_matches_gamma: Option<bool>,
    /// The grouped order of `Ω_{B_k}(Γ_k)` built from the shelling of `Γ_k`, or why it
    /// is not a shelling. `Ω_B(Γ)` need not be shellable even for shellable `Γ`.
    pub gamma_order: Option<std::result::Result<Vec<Face>, String>>,
    pub complex: SimplicialComplex,
    /// A verified shelling of `complex`.
    pub shelling: Vec<Face>,
    pub kind: Manifold,
}

#[derive(Clone, Debug)]
pub struct EarDecomposition {
    /// The augmented Bergman complex being decomposed.
    pub complex: SimplicialComplex,
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    pub fn facet_counts(&self) -> Vec<usize> {
        self.ears.iter().map(|e| e.complex.facet_count()).collect()
    }
}

/// Builds the ear decomposition, checking each sphere, ball and gluing identity.
pub fn build_ced(m: &Matroid, limits: &Limits) -> Result<EarDecomposition> {
    let order = BasisOrder::new(m, limits)?;
    let complex = augmented_bergman_complex(m, limits)?;
    let mut earlier_sd: HashSet<Face> = HashSet::new();
    let mut earlier_omega: HashSet<Face> = HashSet::new();
    let mut ears = Vec::with_capacity(order.bases.len());
    for (k, sphere) in order.spheres.iter().enumerate() {
        let source = sphere.omega();
        let source_faces = source.face_set(limits)?;
        let source_shelling = sphere_shelling(sphere)?;
        let source_cert = source.ball_or_sphere(&source_shelling)?;
        if source_cert.kind != Manifold::Sphere {
            return Err(Error::Certificate(format!(
                "Ω_B for basis {:?} is not a sphere",
                order.bases[k]
            )));
        }
        let lambda = order.lambda(k)?;
        let ear = if k == 0 {
            Ear {
                index: 1,
                basis: order.bases[0].clone(),
                nbc: order.nbc[0],
                complex: source.clone(),
                source,
                lambda,
                gamma: None,
                glued: None,
                glued_matches_gamma: None,
                gamma_order: None,
                shelling: source_shelling,
                kind: Manifold::Sphere,
            }
        } else {
            let gamma = order.gamma(k, &earlier_sd, limits)?;
            let gamma_glued = sphere.omega_gamma(&gamma.complex)?;
            let gamma_order = lemma22_order(sphere, &gamma.complex, &gamma.shelling);
            let overlap_faces: HashSet<Face> =
                source_faces.intersection(&earlier_omega).cloned().collect();
            let glued = SimplicialComplex::from_face_set(&overlap_faces);
            let matches_gamma = glued == gamma_glued;
            let seed: &[Face] = match &gamma_order {
                Ok(order) => order,
                Err(_) => &source_shelling,
            };
            let glued_shelling = overlap_shelling(&glued, seed).ok_or_else(|| {
                Error::Certificate(format!(
                    "no shelling found for Ω_B ∩ earlier spheres, basis {:?}",
                    order.bases[k]
                ))
            })?;
            let glued_cert = glued.ball_or_sphere(&glued_shelling)?;
            if glued_cert.kind != Manifold::Ball {
                return Err(Error::Certificate(format!(
                    "Ω_B ∩ earlier spheres is not a ball for basis {:?}",
                    order.bases[k]
                )));
            }
            let ear_facets: Vec<Face> = source
                .facets()
                .iter()
                .filter(|f| !glued.is_facet(f))
                .cloned()
                .collect();
            let ear_complex = SimplicialComplex::from_facets_unchecked(ear_facets);
            check_ear_faces(
                &ear_complex,
                &source_faces,
                &glued,
                &glued_cert.boundary,
                limits,
            )?;
            let candidates: Vec<Face> = source_shelling
                .iter()
                .filter(|f| !glued.is_facet(f))
                .cloned()
                .collect();
            let mut shelling = complete_shelling(&glued_shelling, candidates).ok_or_else(|| {
                Error::Certificate(format!(
                    "no shelling of Ω_B extends the glued ball for basis {:?}",
                    order.bases[k]
                ))
            })?;
            shelling.reverse();
            let cert = ear_complex.ball_or_sphere(&shelling)?;
            if cert.kind != Manifold::Ball {
                return Err(Error::Certificate(format!(
                    "ear for basis {:?} is not a ball",
                    order.bases[k]
                )));
            }
            Ear {
                index: k + 1,
                basis: order.bases[k].clone(),
                nbc: order.nbc[k],
                source,
                lambda,
                gamma: Some(gamma),
                glued: Some(glued),
                glued_matches_gamma: Some(matches_gamma),
                gamma_order: Some(gamma_order.map_err(|e| e.to_string())),
                complex: ear_complex,
                shelling,
                kind: Manifold::Ball,
            }
        };
        earlier_sd.extend(sphere.sd().face_set(limits)?);
        earlier_omega.extend(source_faces);
        ears.push(ear);
    }
    Ok(EarDecomposition { complex, ears })
}

/// The ear's faces must be the source faces minus the interior faces of the glued ball.
fn check_ear_faces(
    ear: &SimplicialComplex,
    source_faces: &HashSet<Face>,
    glued: &SimplicialComplex,
    glued_boundary: &SimplicialComplex,
    limits: &Limits,
) -> Result<()> {
    let glued_faces = glued.face_set(limits)?;
    let boundary_faces = glued_boundary.face_set(limits)?;
    let expected: HashSet<Face> = source_faces
        .iter()
        .filter(|f| !glued_faces.contains(*f) || boundary_faces.contains(*f))
        .cloned()
        .collect();
    if ear.face_set(limits)? != expected {
        return Err(Error::Certificate(
            "ear is not the source minus the interior of the glued ball".into(),
        ));
    }
    Ok(())
}

/// Outcome of checking one ear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarCheck {
    pub index: usize,
    /// The ear's shelling is valid and certifies a sphere (first ear) or a ball.
    pub manifold_ok: bool,
    /// Later ears: a proper subcomplex of their source sphere.
    pub proper_subcomplex_ok: bool,
    /// Later ears: the intersection with the earlier ears is exactly the boundary.
    pub boundary_ok: Option<bool>,
    pub failures: Vec<String>,
}

impl EarCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CedReport {
    /// The ears cover the whole complex and nothing else.
    pub union_ok: bool,
    pub ears: Vec<EarCheck>,
}

impl CedReport {
    pub fn passed(&self) -> bool {
        self.union_ok && self.ears.iter().all(EarCheck::passed)
    }

    /// `(ear index, condition)` for the first failing check.
    pub fn first_failure(&self) -> Option<(usize, String)> {
        if !self.union_ok {
            return Some((0, "union".into()));
        }
        self.ears
            .iter()
            .find(|e| !e.passed())
            .map(|e| (e.index, e.failures[0].clone()))
    }
}

/// Checks the three conditions of a convex ear decomposition for `ears` as given
/// (in the given order). Failures are reported, not returned as errors.
pub fn verify_ced(complex: &SimplicialComplex, ears: &[Ear], limits: &Limits) -> Result<CedReport> {
    let union =
        SimplicialComplex::from_faces(ears.iter().flat_map(|e| e.complex.facets().iter().cloned()));
    let union_ok = &union == complex;
    let mut earlier: HashSet<Face> = HashSet::new();
    let mut checks = Vec::with_capacity(ears.len());
    for (pos, ear) in ears.iter().enumerate() {
        let mut failures = Vec::new();
        let want = if pos == 0 {
            Manifold::Sphere
        } else {
            Manifold::Ball
        };
        let cert = ear.complex.ball_or_sphere(&ear.shelling);
        let manifold_ok = match &cert {
            Ok(c) if c.kind == want => true,
            Ok(c) => {
                failures.push(format!("(ii) expected a {want:?}, found a {:?}", c.kind));
                false
            }
            Err(e) => {
                failures.push(format!("(ii) {e}"));
                false
            }
        };
        let subcomplex = ear.complex.is_subcomplex_of(&ear.source);
        let proper_subcomplex_ok = if pos == 0 {
            subcomplex
        } else {
            subcomplex && ear.complex.facet_count() < ear.source.facet_count()
        };
        if !proper_subcomplex_ok {
            failures.push("(ii) not a proper subcomplex of its source sphere".into());
        }
        let faces = ear.complex.face_set(limits)?;
        let boundary_ok = if pos == 0 {
            None
        } else {
            let ok = match ear.complex.boundary_complex() {
                Ok(boundary) => {
                    let meet: HashSet<Face> = faces.intersection(&earlier).cloned().collect();
                    meet == boundary.face_set(limits)?
                }
                Err(_) => false,
            };
            if !ok {
                failures.push("(iii) intersection with earlier ears is not the boundary".into());
            }
            Some(ok)
        };
        earlier.extend(faces);
        checks.push(EarCheck {
            index: pos + 1,
            manifold_ok,
            proper_subcomplex_ok,
            boundary_ok,
            failures,
        });
    }
    Ok(CedReport {
        union_ok,
        ears: checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn u(d: usize, n: usize) -> Matroid {
        Matroid::uniform(d, n).unwrap()
    }

    fn vf(m: &Matroid, s: &[usize]) -> Vertex {
        Vertex::Flat(m.closure(s).unwrap())
    }

    fn chain(m: &Matroid, sets: &[&[usize]]) -> Vec<Flat> {
        sets.iter().map(|s| m.closure(s).unwrap()).collect()
    }

    #[test]
    fn lex_order() {
        assert_eq!(
            lex_bases(&u(2, 3), &lim()).unwrap(),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(lex_bases(&u(3, 3), &lim()).unwrap(), vec![vec![1, 2, 3]]);
        assert_eq!(lex_bases(&u(2, 4), &lim()).unwrap().len(), 6);
    }

    #[test]
    fn labeling_examples() {
        let m = u(2, 3);
        let l = minimal_labeling(&m, &chain(&m, &[&[], &[2], &[1, 2]])).unwrap();
        assert_eq!(l.label, vec![2, 1]);
        let l = minimal_labeling(&m, &chain(&m, &[&[], &[1], &[1, 2]])).unwrap();
        assert_eq!(l.label, vec![1, 2]);
        let b = Matroid::boolean(3);
        let l = minimal_labeling(&b, &chain(&b, &[&[], &[3], &[1, 3], &[1, 2, 3]])).unwrap();
        assert_eq!(l.label, vec![3, 1, 2]);
        assert!(matches!(
            minimal_labeling(&m, &chain(&m, &[&[], &[1, 2]])),
            Err(Error::NotMaximalChain(_))
        ));
    }

    #[test]
    fn lambda_and_gamma_of_u23() {
        let m = u(2, 3);
        assert_eq!(
            lambda_k(&m, 1, &lim()).unwrap().facets(),
            &[vec![vf(&m, &[1])], vec![vf(&m, &[2])]]
        );
        assert_eq!(
            lambda_k(&m, 2, &lim()).unwrap().facets(),
            &[vec![vf(&m, &[3])]]
        );
        assert!(lambda_k(&m, 3, &lim()).unwrap().is_void());

        let g = gamma_k(&m, 2, &lim()).unwrap();
        assert_eq!(g.kind, GammaKind::ProperBall);
        assert_eq!(g.complex.facets(), &[vec![vf(&m, &[1])]]);
        let g = gamma_k(&m, 3, &lim()).unwrap();
        assert_eq!(g.kind, GammaKind::WholeSphere);
        assert_eq!(
            g.complex.facets(),
            &[vec![vf(&m, &[2])], vec![vf(&m, &[3])]]
        );
        assert!(gamma_k(&m, 1, &lim()).is_err());
        assert!(matches!(
            gamma_k(&m, 4, &lim()),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn weak_order_helpers() {
        assert_eq!(inversions(&[3, 1, 2]), 2);
        assert!(is_weak_order_ideal(&[vec![1, 2, 3], vec![2, 1, 3]]));
        assert!(!is_weak_order_ideal(&[vec![2, 1, 3]]));
    }

    #[test]
    fn grouped_order_examples() {
        let b = Matroid::boolean(2);
        let point = SimplicialComplex::from_faces(vec![vec![vf(&b, &[1])]]);
        let order = lemma22_shelling(2, &point, point.facets()).unwrap();
        assert_eq!(
            order,
            vec![
                vec![vf(&b, &[]), vf(&b, &[1])],
                vec![Vertex::Element(1), vf(&b, &[1])]
            ]
        );
        let sd = BasisSphere::boolean(2).sd();
        let order = lemma22_shelling(2, &sd, sd.facets()).unwrap();
        assert_eq!(order.len(), 4);
        for d in 1..=4 {
            let sphere = BasisSphere::boolean(d);
            let order = sphere_shelling(&sphere).unwrap();
            assert!(sphere.omega().verify_shelling(&order).unwrap().is_valid());
        }
    }

    #[test]
    fn ears_of_u23() {
        let m = u(2, 3);
        let ced = build_ced(&m, &lim()).unwrap();
        assert_eq!(ced.facet_counts(), vec![5, 3, 1]);
        let ear2 = &ced.ears[1].complex;
        let expected = SimplicialComplex::from_faces(vec![
            vec![Vertex::Element(1), Vertex::Element(3)],
            vec![Vertex::Element(3), vf(&m, &[3])],
            vec![vf(&m, &[]), vf(&m, &[3])],
        ]);
        assert_eq!(ear2, &expected);
        assert_eq!(
            ced.ears[2].complex.facets(),
            &[vec![Vertex::Element(2), Vertex::Element(3)]]
        );
        let report = verify_ced(&ced.complex, &ced.ears, &lim()).unwrap();
        assert!(report.passed(), "{report:?}");

        let mut swapped = ced.ears.clone();
        swapped.swap(1, 2);
        let report = verify_ced(&ced.complex, &swapped, &lim()).unwrap();
        assert_eq!(report.ears[1].boundary_ok, Some(false));
    }

    #[test]
    fn boolean_has_a_single_ear() {
        let ced = build_ced(&Matroid::boolean(3), &lim()).unwrap();
        assert_eq!(ced.ears.len(), 1);
        assert!(verify_ced(&ced.complex, &ced.ears, &lim())
            .unwrap()
            .passed());
    }

    #[test]
    fn degenerate_ranks() {
        for m in [u(0, 2), u(1, 3)] {
            let ced = build_ced(&m, &lim()).unwrap();
            assert_eq!(ced.ears.len(), m.basis_count().try_into().unwrap_or(0usize));
            assert!(verify_ced(&ced.complex, &ced.ears, &lim())
                .unwrap()
                .passed());
        }
    }

    #[test]
    fn nbc_with_loops_uses_the_loop_free_matroid() {
        let m = Matroid::from_bases(3, vec![vec![1], vec![3]]).unwrap();
        assert_eq!(nbc_bases_ignoring_loops(&m, &lim()).unwrap(), vec![vec![1]]);
    }
}
