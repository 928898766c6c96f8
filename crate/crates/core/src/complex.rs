//! Finite simplicial complexes over element- and flat-vertices: face counts, h-vectors,
//! links, shelling checks and ball/sphere certificates.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Cap, Error, Result};
use crate::limits::Limits;
use crate::matroid::{is_sorted_subset, Flat};
use crate::poly::Polynomial;

/// A vertex of a matroid complex. Element-vertices `u_i` sort before flat-vertices
/// `v_F`; flat-vertices sort by rank and then by their element lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Element(usize),
    Flat(Flat),
}

impl Vertex {
    pub fn is_element(&self) -> bool {
        matches!(self, Vertex::Element(_))
    }

    pub fn as_flat(&self) -> Option<&Flat> {
        match self {
            Vertex::Flat(f) => Some(f),
            Vertex::Element(_) => None,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Element(i) => write!(f, "u{i}"),
            Vertex::Flat(flat) => write!(f, "v{flat}"),
        }
    }
}

/// A face: a strictly increasing vertex sequence.
pub type Face = Vec<Vertex>;

pub fn face_from(vertices: impl IntoIterator<Item = Vertex>) -> Face {
    let mut face: Face = vertices.into_iter().collect();
    face.sort();
    face.dedup();
    face
}

pub fn display_face(face: &[Vertex]) -> String {
    let parts: Vec<String> = face.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Calls `visit` on every subface of `face`, including `∅` and `face` itself.
pub(crate) fn for_each_subface(face: &[Vertex], mut visit: impl FnMut(Face)) {
    let k = face.len();
    assert!(k < 64, "face too large to enumerate");
    for mask in 0u64..(1u64 << k) {
        visit(
            face.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, v)| v.clone())
                .collect(),
        );
    }
}

fn ridges_of(facet: &[Vertex]) -> impl Iterator<Item = Face> + '_ {
    (0..facet.len()).map(move |skip| {
        facet
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, v)| v.clone())
            .collect()
    })
}

/// A simplicial complex stored by its facets in canonical sorted order.
///
/// `[[]]` is the complex `{∅}`; an empty facet list is the void complex with no
/// faces at all, which appears as the boundary of a sphere and as an empty
/// intersection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`; faces contained in other faces are dropped.
    pub fn from_faces(faces: impl IntoIterator<Item = Face>) -> Self {
        let mut faces: Vec<Face> = faces.into_iter().map(face_from).collect();
        faces.sort();
        faces.dedup();
        let max = faces.iter().map(Vec::len).max().unwrap_or(0);
        let (top, lower): (Vec<Face>, Vec<Face>) = faces.into_iter().partition(|f| f.len() == max);
        let mut facets = top;
        let mut lower = lower;
        lower.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut kept = Vec::new();
        for face in lower {
            let covered = facets
                .iter()
                .chain(kept.iter())
                .any(|g: &Face| is_sorted_subset(&face, g));
            if !covered {
                kept.push(face);
            }
        }
        facets.extend(kept);
        facets.sort();
        SimplicialComplex { facets }
    }

    /// Builds from a list known to contain no face inside another.
    pub(crate) fn from_facets_unchecked(mut facets: Vec<Face>) -> Self {
        for f in &mut facets {
            f.sort();
        }
        facets.sort();
        facets.dedup();
        SimplicialComplex { facets }
    }

    /// Convenience constructor for complexes on element-vertices only.
    pub fn from_element_facets(facets: &[&[usize]]) -> Self {
        SimplicialComplex::from_faces(
            facets
                .iter()
                .map(|f| f.iter().map(|&i| Vertex::Element(i)).collect::<Face>()),
        )
    }

    /// The complex whose faces are exactly `faces` (which must be closed under subsets).
    pub fn from_face_set(faces: &HashSet<Face>) -> Self {
        let mut maximal: HashSet<&Face> = faces.iter().collect();
        for face in faces {
            for ridge in ridges_of(face) {
                maximal.remove(&ridge);
            }
        }
        SimplicialComplex::from_facets_unchecked(maximal.into_iter().cloned().collect())
    }

    /// The complex `{∅}`.
    pub fn empty_face() -> Self {
        SimplicialComplex {
            facets: vec![Vec::new()],
        }
    }

    /// The complex with no faces.
    pub fn void() -> Self {
        SimplicialComplex { facets: Vec::new() }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn into_facets(self) -> Vec<Face> {
        self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Largest facet size, which is the dimension plus one. `None` for the void complex.
    pub fn max_facet_size(&self) -> Option<usize> {
        self.facets.iter().map(Vec::len).max()
    }

    pub fn dimension(&self) -> Option<isize> {
        self.max_facet_size().map(|s| s as isize - 1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let set: HashSet<&Vertex> = self.facets.iter().flatten().collect();
        let mut out: Vec<Vertex> = set.into_iter().cloned().collect();
        out.sort();
        out
    }

    pub fn contains_face(&self, face: &[Vertex]) -> bool {
        self.facets.iter().any(|f| is_sorted_subset(face, f))
    }

    pub fn is_facet(&self, face: &[Vertex]) -> bool {
        self.facets
            .binary_search_by(|f| f.as_slice().cmp(face))
            .is_ok()
    }

    /// Every facet of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains_face(f))
    }

    /// All faces, including `∅` when the complex is not void.
    pub fn face_set(&self, limits: &Limits) -> Result<HashSet<Face>> {
        let mut faces = HashSet::new();
        for facet in &self.facets {
            let mut res = Ok(());
            for_each_subface(facet, |g| {
                if res.is_ok() && faces.insert(g) {
                    res = limits.check(Cap::Faces, faces.len());
                }
            });
            res?;
        }
        Ok(faces)
    }

    /// `Σ_{F ∈ Δ} x^{|F|}`.
    pub fn f_polynomial(&self, limits: &Limits) -> Result<Polynomial> {
        let faces = self.face_set(limits)?;
        let size = self.max_facet_size().map_or(0, |s| s + 1);
        let mut counts = vec![BigInt::zero(); size];
        for face in &faces {
            counts[face.len()] += 1;
        }
        Ok(Polynomial::new(counts))
    }

    /// The h-polynomial with respect to the dimension of the complex.
    pub fn h_polynomial(&self, limits: &Limits) -> Result<Polynomial> {
        let f = self.f_polynomial(limits)?;
        h_from_f(&f, self.max_facet_size().unwrap_or(0))
    }

    /// `link_Δ(σ) = {G : G ∩ σ = ∅, G ∪ σ ∈ Δ}`.
    pub fn link(&self, face: &[Vertex]) -> Result<SimplicialComplex> {
        let face = face_from(face.iter().cloned());
        let containing: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| is_sorted_subset(&face, f))
            .map(|f| {
                f.iter()
                    .filter(|v| face.binary_search(v).is_err())
                    .cloned()
                    .collect()
            })
            .collect();
        if containing.is_empty() {
            return Err(Error::FaceNotInComplex);
        }
        Ok(SimplicialComplex::from_faces(containing))
    }

    fn check_pure(&self) -> Result<usize> {
        if !self.is_pure() {
            return Err(Error::Impure);
        }
        Ok(self.max_facet_size().unwrap_or(0))
    }

    /// Checks that `order` is a shelling: every facet after the first meets the
    /// earlier ones in a nonempty pure codimension-one subcomplex of its boundary.
    ///
    /// Each facet `G` gets the restriction face `R(G) = {v : G \ v lies in an earlier
    /// facet}`, and the order is a shelling iff no `R(G)` (for `G` after the first)
    /// is itself contained in an earlier facet.
    pub fn verify_shelling(&self, order: &[Face]) -> Result<Shelling> {
        self.check_pure()?;
        let mut sorted: Vec<Face> = order.iter().map(|f| face_from(f.iter().cloned())).collect();
        let normalized = sorted.clone();
        sorted.sort();
        if sorted != self.facets {
            return Err(Error::NotAPermutation);
        }
        Ok(shelling_of(&normalized))
    }

    /// Ridge degrees and boundary ridges.
    pub fn pseudomanifold_certificate(&self) -> Result<PseudomanifoldCertificate> {
        self.check_pure()?;
        let mut degrees: HashMap<Face, usize> = HashMap::new();
        for facet in &self.facets {
            for ridge in ridges_of(facet) {
                *degrees.entry(ridge).or_default() += 1;
            }
        }
        let max_ridge_degree = degrees.values().copied().max().unwrap_or(0);
        let mut boundary_ridges: Vec<Face> = degrees
            .into_iter()
            .filter(|&(_, d)| d == 1)
            .map(|(r, _)| r)
            .collect();
        boundary_ridges.sort();
        Ok(PseudomanifoldCertificate {
            ridge_degrees_ok: max_ridge_degree <= 2,
            max_ridge_degree,
            boundary_ridges,
        })
    }

    /// The complex generated by the ridges lying in exactly one facet.
    pub fn boundary_complex(&self) -> Result<SimplicialComplex> {
        let cert = self.pseudomanifold_certificate()?;
        if !cert.ridge_degrees_ok {
            return Err(Error::NotPseudomanifold {
                degree: cert.max_ridge_degree,
            });
        }
        Ok(SimplicialComplex::from_facets_unchecked(
            cert.boundary_ridges,
        ))
    }

    /// Classifies a shellable pseudomanifold as a ball or a sphere and cross-checks
    /// the classification against the Euler characteristic.
    pub fn ball_or_sphere(&self, shelling: &[Face]) -> Result<BallOrSphere> {
        if self.is_void() {
            return Err(Error::Certificate(
                "the void complex is neither a ball nor a sphere".into(),
            ));
        }
        let cert = self.pseudomanifold_certificate()?;
        if !cert.ridge_degrees_ok {
            return Err(Error::NotPseudomanifold {
                degree: cert.max_ridge_degree,
            });
        }
        if let Shelling::Invalid { position } = self.verify_shelling(shelling)? {
            return Err(Error::InvalidShelling { position });
        }
        let d = self.max_facet_size().unwrap_or(0) as i64;
        let kind = if cert.boundary_ridges.is_empty() {
            Manifold::Sphere
        } else {
            Manifold::Ball
        };
        let euler = self.euler_characteristic(&Limits::unlimited())?;
        let expected = match kind {
            Manifold::Sphere => BigInt::from(1 + if (d - 1).rem_euclid(2) == 0 { 1 } else { -1 }),
            Manifold::Ball => BigInt::from(1),
        };
        if euler != expected {
            return Err(Error::Certificate(format!(
                "{kind:?} of dimension {} has Euler characteristic {euler}, expected {expected}",
                d - 1
            )));
        }
        Ok(BallOrSphere {
            kind,
            euler_characteristic: euler,
            boundary: SimplicialComplex::from_facets_unchecked(cert.boundary_ridges),
        })
    }

    /// `Σ_{∅ ≠ F ∈ Δ} (-1)^{dim F}`.
    pub fn euler_characteristic(&self, limits: &Limits) -> Result<BigInt> {
        let f = self.f_polynomial(limits)?;
        Ok(f.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| if i % 2 == 1 { c.clone() } else { -c.clone() })
            .sum())
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.facets.iter().map(|g| display_face(g)).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Faces of the facets added so far, for checking a shelling one facet at a time.
#[derive(Clone, Debug, Default)]
pub(crate) struct ShellingState {
    earlier: HashSet<Face>,
    count: usize,
}

impl ShellingState {
    /// `R(G)`: the vertices `v` of `facet` with `facet \ v` already present.
    pub(crate) fn restriction(&self, facet: &[Vertex]) -> Face {
        if self.count == 0 {
            return Vec::new();
        }
        facet
            .iter()
            .enumerate()
            .filter(|&(skip, _)| {
                let ridge: Face = facet
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, v)| v.clone())
                    .collect();
                self.earlier.contains(&ridge)
            })
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Whether `facet` may come next, together with its restriction face.
    pub(crate) fn admits(&self, facet: &[Vertex]) -> (bool, Face) {
        let r = self.restriction(facet);
        (self.count == 0 || !self.earlier.contains(&r), r)
    }

    pub(crate) fn push(&mut self, facet: &[Vertex]) {
        for_each_subface(facet, |g| {
            self.earlier.insert(g);
        });
        self.count += 1;
    }
}

/// Restriction faces for a facet sequence, or the first (1-based) position where the
/// sequence stops being a shelling.
pub(crate) fn shelling_of(order: &[Face]) -> Shelling {
    let mut state = ShellingState::default();
    let mut restrictions = Vec::with_capacity(order.len());
    for (i, facet) in order.iter().enumerate() {
        let (ok, r) = state.admits(facet);
        if !ok {
            return Shelling::Invalid { position: i + 1 };
        }
        state.push(facet);
        restrictions.push(r);
    }
    Shelling::Valid { restrictions }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shelling {
    /// `restrictions[i]` is the unique minimal face that the `i`-th facet adds.
    Valid { restrictions: Vec<Face> },
    /// 1-based position of the first facet violating the shelling condition.
    Invalid { position: usize },
}

impl Shelling {
    pub fn is_valid(&self) -> bool {
        matches!(self, Shelling::Valid { .. })
    }

    /// `Σ x^{|R(G)|}`, which equals the h-polynomial for a valid shelling.
    pub fn h_polynomial(&self) -> Option<Polynomial> {
        match self {
            Shelling::Valid { restrictions } => {
                let mut counts =
                    vec![BigInt::zero(); restrictions.iter().map(Vec::len).max().unwrap_or(0) + 1];
                for r in restrictions {
                    counts[r.len()] += 1;
                }
                Some(Polynomial::new(counts))
            }
            Shelling::Invalid { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudomanifoldCertificate {
    /// Every ridge lies in at most two facets.
    pub ridge_degrees_ok: bool,
    pub max_ridge_degree: usize,
    /// Ridges lying in exactly one facet.
    pub boundary_ridges: Vec<Face>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Manifold {
    Ball,
    Sphere,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallOrSphere {
    pub kind: Manifold,
    pub euler_characteristic: BigInt,
    pub boundary: SimplicialComplex,
}

/// `h(x) = Σ_i f_{i-1} x^i (1-x)^{d-i}`, where `f_{i-1}` is the coefficient of `x^i`.
pub fn h_from_f(f: &Polynomial, d: usize) -> Result<Polynomial> {
    transform(f, d, Polynomial::one_minus_x_pow)
}

/// `f(x) = Σ_i h_i x^i (1+x)^{d-i}`.
pub fn f_from_h(h: &Polynomial, d: usize) -> Result<Polynomial> {
    transform(h, d, Polynomial::one_plus_x_pow)
}

fn transform(p: &Polynomial, d: usize, kernel: fn(usize) -> Polynomial) -> Result<Polynomial> {
    if let Some(deg) = p.degree() {
        if deg > d {
            return Err(Error::DegreeExceeds {
                degree: deg,
                bound: d,
            });
        }
    }
    let mut out = Polynomial::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out += &kernel(d - i).shift(i).scale(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimplicialComplex {
        let edges: Vec<Vec<usize>> = (1..=n).map(|i| vec![i, i % n + 1]).collect();
        let refs: Vec<&[usize]> = edges.iter().map(Vec::as_slice).collect();
        SimplicialComplex::from_element_facets(&refs)
    }

    fn el(ids: &[usize]) -> Face {
        ids.iter().map(|&i| Vertex::Element(i)).collect()
    }

    #[test]
    fn five_cycle_counts() {
        let c = cycle(5);
        assert_eq!(
            c.f_polynomial(&Limits::default()).unwrap(),
            Polynomial::from_i64s(&[1, 5, 5])
        );
        assert_eq!(
            SimplicialComplex::empty_face()
                .f_polynomial(&Limits::default())
                .unwrap(),
            Polynomial::one()
        );
        assert!(SimplicialComplex::void()
            .f_polynomial(&Limits::default())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn from_faces_drops_contained_faces() {
        let c = SimplicialComplex::from_element_facets(&[&[1, 2], &[2], &[3], &[2, 1]]);
        assert_eq!(c.facets(), &[el(&[1, 2]), el(&[3])]);
        assert!(!c.is_pure());
    }

    #[test]
    fn transforms() {
        let h = h_from_f(&Polynomial::from_i64s(&[1, 7, 9]), 2).unwrap();
        assert_eq!(h, Polynomial::from_i64s(&[1, 5, 3]));
        assert_eq!(
            f_from_h(&Polynomial::one(), 4).unwrap(),
            Polynomial::one_plus_x_pow(4)
        );
        assert!(matches!(
            h_from_f(&Polynomial::from_i64s(&[1, 1, 1, 1]), 2),
            Err(Error::DegreeExceeds {
                degree: 3,
                bound: 2
            })
        ));
    }

    #[test]
    fn links() {
        let c = cycle(5);
        let l = c.link(&el(&[1])).unwrap();
        assert_eq!(l.facets(), &[el(&[2]), el(&[5])]);
        assert_eq!(c.link(&[]).unwrap(), c);
        assert!(matches!(c.link(&el(&[1, 3])), Err(Error::FaceNotInComplex)));
    }

    #[test]
    fn shellings_of_the_cycle() {
        let c = cycle(5);
        let walk: Vec<Face> = (1..=5).map(|i| el(&[i, i % 5 + 1])).collect();
        let verdict = c.verify_shelling(&walk).unwrap();
        assert_eq!(
            verdict.h_polynomial(),
            Some(Polynomial::from_i64s(&[1, 3, 1]))
        );
        let antipodal = vec![
            el(&[1, 2]),
            el(&[3, 4]),
            el(&[2, 3]),
            el(&[4, 5]),
            el(&[1, 5]),
        ];
        assert_eq!(
            c.verify_shelling(&antipodal).unwrap(),
            Shelling::Invalid { position: 2 }
        );
        assert!(matches!(
            c.verify_shelling(&walk[..4]),
            Err(Error::NotAPermutation)
        ));
    }

    #[test]
    fn impure_shelling_is_rejected() {
        let c = SimplicialComplex::from_element_facets(&[&[1, 2], &[3]]);
        assert!(matches!(c.verify_shelling(c.facets()), Err(Error::Impure)));
    }

    #[test]
    fn cycle_is_a_sphere_and_path_is_a_ball() {
        let c = cycle(5);
        let walk: Vec<Face> = (1..=5).map(|i| el(&[i, i % 5 + 1])).collect();
        let cert = c.ball_or_sphere(&walk).unwrap();
        assert_eq!(cert.kind, Manifold::Sphere);
        assert_eq!(cert.euler_characteristic, BigInt::from(0));
        assert!(c.boundary_complex().unwrap().is_void());

        let path = SimplicialComplex::from_element_facets(&[&[1, 2], &[2, 3], &[3, 4]]);
        let order = vec![el(&[1, 2]), el(&[2, 3]), el(&[3, 4])];
        let cert = path.ball_or_sphere(&order).unwrap();
        assert_eq!(cert.kind, Manifold::Ball);
        assert_eq!(cert.euler_characteristic, BigInt::from(1));
        assert_eq!(cert.boundary.facets(), &[el(&[1]), el(&[4])]);
    }

    #[test]
    fn empty_face_is_a_zero_sphere_of_dimension_minus_one() {
        let c = SimplicialComplex::empty_face();
        let cert = c.ball_or_sphere(&[vec![]]).unwrap();
        assert_eq!(cert.kind, Manifold::Sphere);
    }

    #[test]
    fn branching_is_not_a_pseudomanifold() {
        let c = SimplicialComplex::from_element_facets(&[&[1, 2], &[1, 3], &[1, 4]]);
        assert!(!c.pseudomanifold_certificate().unwrap().ridge_degrees_ok);
        assert!(matches!(
            c.boundary_complex(),
            Err(Error::NotPseudomanifold { degree: 3 })
        ));
    }

    #[test]
    fn face_set_round_trip() {
        let c = cycle(4);
        let faces = c.face_set(&Limits::default()).unwrap();
        assert_eq!(faces.len(), 9);
        assert_eq!(SimplicialComplex::from_face_set(&faces), c);
        let limits = Limits {
            max_faces: 3,
            ..Limits::default()
        };
        assert!(matches!(
            c.face_set(&limits),
            Err(Error::CapExceeded {
                cap: Cap::Faces,
                ..
            })
        ));
    }
}
