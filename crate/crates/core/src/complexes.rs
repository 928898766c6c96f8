//! The independence, Bergman and augmented Bergman complexes of a matroid, and the
//! stellohedral spheres `Ω_B` spanned by a single basis.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use crate::complex::{face_from, Face, SimplicialComplex, Vertex};
use crate::error::{Cap, Error, Result};
use crate::limits::Limits;
use crate::matroid::{Flat, FlatLattice, Matroid};

/// Basis enumeration for complex construction is bounded by the face cap rather than
/// the (much smaller) ear-decomposition basis cap.
fn complex_bases(m: &Matroid, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    m.bases(&Limits {
        max_bases: limits.max_faces,
        ..*limits
    })
    .map_err(|e| match e {
        Error::CapExceeded {
            cap: Cap::Bases,
            limit,
        } => Error::CapExceeded {
            cap: Cap::Faces,
            limit,
        },
        other => other,
    })
}

fn elements(set: &[usize]) -> impl Iterator<Item = Vertex> + '_ {
    set.iter().map(|&e| Vertex::Element(e))
}

/// Facets are the bases, on element-vertices.
pub fn independence_complex(m: &Matroid, limits: &Limits) -> Result<SimplicialComplex> {
    let bases = complex_bases(m, limits)?;
    Ok(SimplicialComplex::from_facets_unchecked(
        bases.iter().map(|b| elements(b).collect()).collect(),
    ))
}

/// The order complex of the proper part of the lattice of flats.
pub fn bergman_complex(m: &Matroid, limits: &Limits) -> Result<SimplicialComplex> {
    let lattice = m.flat_lattice(limits)?;
    bergman_from_lattice(&lattice, limits)
}

pub fn bergman_from_lattice(lattice: &FlatLattice, limits: &Limits) -> Result<SimplicialComplex> {
    let d = lattice.rank();
    if d <= 1 {
        return Ok(SimplicialComplex::empty_face());
    }
    let mut facets = Vec::new();
    for atom in lattice.level(1) {
        for chain in lattice.saturated_chains(atom, d - 1) {
            facets.push(chain.into_iter().map(Vertex::Flat).collect());
            limits.check(Cap::Faces, facets.len())?;
        }
    }
    Ok(SimplicialComplex::from_facets_unchecked(facets))
}

/// The augmented Bergman complex: faces `u_S ∪ {v_{F_1}, ..., v_{F_k}}` with `S`
/// independent and, when `k ≥ 1`, `S ⊆ F_1 ⊂ ... ⊂ F_k` proper flats.
pub fn augmented_bergman_complex(m: &Matroid, limits: &Limits) -> Result<SimplicialComplex> {
    let lattice = m.flat_lattice(limits)?;
    let d = m.rank();
    let mut facets: Vec<Face> = complex_bases(m, limits)?
        .iter()
        .map(|b| elements(b).collect())
        .collect();
    limits.check(Cap::Faces, facets.len())?;
    for r in 0..d {
        for flat in lattice.level(r) {
            let chains = lattice.saturated_chains(flat, d - 1);
            for basis in flat_bases(m, flat, limits)? {
                for chain in &chains {
                    let face: Face = elements(&basis)
                        .chain(chain.iter().cloned().map(Vertex::Flat))
                        .collect();
                    facets.push(face);
                }
                limits.check(Cap::Faces, facets.len())?;
            }
        }
    }
    let complex = SimplicialComplex::from_facets_unchecked(facets);
    debug_assert!(complex.is_pure());
    Ok(complex)
}

/// Bases of `M|F`, in the original labels.
fn flat_bases(m: &Matroid, flat: &Flat, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    if m.is_uniform() {
        // proper flats of a uniform matroid are independent
        return Ok(vec![flat.elements().to_vec()]);
    }
    let minor = m.restriction(flat)?;
    Ok(complex_bases(&minor.matroid, limits)?
        .iter()
        .map(|b| minor.pull_back(b))
        .collect())
}

/// The boundary of the `d`-dimensional stellohedron: vertices `u_i` for `i ∈ [d]` and
/// `v_S` for `S ⊊ [d]`, which is the augmented Bergman complex of the Boolean matroid.
pub fn stellohedron_boundary(d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "the stellohedron needs d >= 1".into(),
        ));
    }
    Ok(BasisSphere::boolean(d).omega())
}

/// `Ω_V(Γ)` for `V = [d]`; see [`BasisSphere::omega_gamma`].
pub fn omega_gamma(d: usize, gamma: &SimplicialComplex) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::InvalidArgument("Ω_V needs d >= 1".into()));
    }
    BasisSphere::boolean(d).omega_gamma(gamma)
}

/// The subcomplexes `sd_B` and `Ω_B` of the augmented Bergman complex determined by a
/// basis `B`: flat-vertices are the closures of subsets of `B`.
#[derive(Clone, Debug)]
pub struct BasisSphere {
    basis: Vec<usize>,
    closures: HashMap<Vec<usize>, Flat>,
}

impl BasisSphere {
    pub fn new(m: &Matroid, basis: &[usize]) -> Result<Self> {
        let mut basis = basis.to_vec();
        basis.sort_unstable();
        if !m.is_basis(&basis)? || basis.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotABasis(basis));
        }
        let mut closures = HashMap::new();
        let mut seen = HashSet::new();
        for k in 0..=basis.len() {
            for subset in basis.iter().copied().combinations(k) {
                let flat = m.closure_normalized(&subset);
                if flat.rank() != k || !seen.insert(flat.clone()) {
                    return Err(Error::Certificate(format!(
                        "closure collision for {subset:?} inside basis {basis:?}"
                    )));
                }
                closures.insert(subset, flat);
            }
        }
        Ok(BasisSphere { basis, closures })
    }

    /// `Ω_V` for `V = [d]`, labeled by the Boolean matroid.
    pub fn boolean(d: usize) -> Self {
        let basis: Vec<usize> = (1..=d).collect();
        BasisSphere::new(&Matroid::boolean(d), &basis)
            .expect("[d] is the basis of the Boolean matroid")
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `cl(S)` for `S ⊆ B` given in any order.
    pub fn closure_of(&self, subset: &[usize]) -> &Flat {
        let mut key = subset.to_vec();
        key.sort_unstable();
        &self.closures[&key]
    }

    pub fn bottom(&self) -> &Flat {
        &self.closures[&Vec::new()]
    }

    /// Flat-vertices `v_{cl(S_1)}, ..., v_{cl(S_{d-1})}` for the prefixes `S_i` of a
    /// permutation of `B`; this is a facet of `sd_B`.
    pub fn flag(&self, permutation: &[usize]) -> Face {
        let d = self.rank();
        face_from((1..d).map(|i| Vertex::Flat(self.closure_of(&permutation[..i]).clone())))
    }

    /// Recovers the permutation of `B` from a facet of `sd_B`.
    pub fn permutation_of(&self, facet: &[Vertex]) -> Option<Vec<usize>> {
        let d = self.rank();
        if facet.len() + 1 != d {
            return None;
        }
        let mut flats: Vec<&Flat> = facet.iter().map(Vertex::as_flat).collect::<Option<_>>()?;
        flats.sort_by_key(|f| f.rank());
        let mut perm = Vec::with_capacity(d);
        let mut prev: Vec<usize> = Vec::new();
        for flat in flats {
            let part: Vec<usize> = self
                .basis
                .iter()
                .copied()
                .filter(|&b| flat.contains(b))
                .collect();
            if part.len() != prev.len() + 1 || !prev.iter().all(|p| part.contains(p)) {
                return None;
            }
            if self.closure_of(&part) != flat {
                return None;
            }
            perm.extend(part.iter().filter(|b| !prev.contains(b)));
            prev = part;
        }
        perm.extend(self.basis.iter().filter(|b| !prev.contains(b)));
        Some(perm)
    }

    /// All permutations of `B` in lexicographic order.
    pub fn permutations(&self) -> Vec<Vec<usize>> {
        let d = self.rank();
        self.basis.iter().copied().permutations(d).collect()
    }

    /// The barycentric subdivision of the boundary of the simplex on `B`, with
    /// `S ↦ v_{cl(S)}`.
    pub fn sd(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets_unchecked(
            self.permutations().iter().map(|p| self.flag(p)).collect(),
        )
    }

    /// The facet with element part `S` and flag `S ⊂ S ∪ {t_1} ⊂ ...` up to size `d - 1`.
    pub fn omega_facet(&self, subset: &[usize], tail: &[usize]) -> Face {
        let d = self.rank();
        let mut vertices: Vec<Vertex> = subset.iter().map(|&e| Vertex::Element(e)).collect();
        if subset.len() < d {
            let mut chain = subset.to_vec();
            vertices.push(Vertex::Flat(self.closure_of(&chain).clone()));
            for &t in tail.iter().take(d - 1 - subset.len()) {
                chain.push(t);
                vertices.push(Vertex::Flat(self.closure_of(&chain).clone()));
            }
        }
        face_from(vertices)
    }

    /// Facets of `Ω_B` with element part `S ⊊ B`, one per ordering of `B \ S` with
    /// its last entry dropped.
    pub fn omega_facets_over(&self, subset: &[usize]) -> Vec<Face> {
        let rest: Vec<usize> = self
            .basis
            .iter()
            .copied()
            .filter(|b| !subset.contains(b))
            .collect();
        let len = rest.len().saturating_sub(1);
        rest.iter()
            .copied()
            .permutations(len)
            .map(|tail| self.omega_facet(subset, &tail))
            .collect()
    }

    /// The element facet `u_B`.
    pub fn element_facet(&self) -> Face {
        self.basis.iter().map(|&e| Vertex::Element(e)).collect()
    }

    /// `Ω_B`, a sphere isomorphic to the stellohedron boundary of dimension `|B| - 1`.
    pub fn omega(&self) -> SimplicialComplex {
        let d = self.rank();
        let mut facets = vec![self.element_facet()];
        for k in 0..d {
            for subset in self.basis.iter().copied().combinations(k) {
                facets.extend(self.omega_facets_over(&subset));
            }
        }
        SimplicialComplex::from_facets_unchecked(facets)
    }

    /// The flag part `F \ (U ∪ {v_{cl ∅}})` of a facet of `Ω_B`.
    pub fn sigma(&self, facet: &[Vertex]) -> Face {
        let bottom = self.bottom();
        facet
            .iter()
            .filter(|v| v.as_flat().is_some_and(|f| f != bottom))
            .cloned()
            .collect()
    }

    /// Element part `F ∩ U` of a face.
    pub fn element_part(face: &[Vertex]) -> Vec<usize> {
        face.iter()
            .filter_map(|v| match v {
                Vertex::Element(e) => Some(*e),
                Vertex::Flat(_) => None,
            })
            .collect()
    }

    fn check_gamma(&self, gamma: &SimplicialComplex) -> Result<()> {
        let d = self.rank();
        if gamma.is_void() {
            return Err(Error::InvalidArgument("Γ must not be void".into()));
        }
        if !gamma.is_pure() {
            return Err(Error::Impure);
        }
        let size = gamma.max_facet_size().unwrap_or(0);
        if size + 1 != d {
            return Err(Error::WrongDimension {
                expected: d - 1,
                found: size,
            });
        }
        let sd = self.sd();
        if !gamma.facets().iter().all(|f| sd.is_facet(f)) {
            return Err(Error::FaceNotInComplex);
        }
        Ok(())
    }

    /// `Ω_B(Γ)`: the facets `F` of `Ω_B` whose flag part is a nonempty face of `Γ`, for
    /// `Γ ⊆ sd_B` pure of dimension `d - 2`. For `d = 1` the only admissible `Γ` is
    /// `{∅}` and the result is the single facet `{v_{cl ∅}}`.
    pub fn omega_gamma(&self, gamma: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.check_gamma(gamma)?;
        if self.rank() == 1 {
            return Ok(SimplicialComplex::from_facets_unchecked(vec![vec![
                Vertex::Flat(self.bottom().clone()),
            ]]));
        }
        let facets = self
            .omega()
            .into_facets()
            .into_iter()
            .filter(|f| {
                let s = self.sigma(f);
                !s.is_empty() && gamma.contains_face(&s)
            })
            .collect();
        Ok(SimplicialComplex::from_facets_unchecked(facets))
    }
}
