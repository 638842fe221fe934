//! Finite abstract simplicial complexes and their face numbers.
//!
//! Vertices carry opaque string labels which are mapped to dense ids
//! `0..n` in first-seen order. Faces are stored as strictly increasing id
//! sequences in a hash set; the empty face is implicit.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::VertexGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet list is empty")]
    EmptyInput,
    #[error("facet {0} is empty")]
    EmptyFacet(usize),
    #[error("vertex id {0} is out of range")]
    UnknownVertex(usize),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("loop at node {0}")]
    Loop(usize),
    #[error("vertex map is not a bijection: {0}")]
    NotABijection(String),
}

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    faces: HashSet<Vec<usize>>,
    // largest face cardinality, i.e. dim + 1
    d: usize,
}

impl SimplicialComplex {
    /// Downward closure of the given facets.
    ///
    /// Labels are anything printable; repeated labels inside a facet are
    /// merged.
    pub fn from_facets<F, L>(facets: impl IntoIterator<Item = F>) -> Result<Self, ComplexError>
    where
        F: IntoIterator<Item = L>,
        L: ToString,
    {
        let mut labels = Vec::new();
        let mut index = HashMap::new();
        let mut id_facets = Vec::new();
        for (i, facet) in facets.into_iter().enumerate() {
            let mut ids = Vec::new();
            for label in facet {
                let label = label.to_string();
                let id = *index.entry(label.clone()).or_insert_with(|| {
                    labels.push(label);
                    labels.len() - 1
                });
                ids.push(id);
            }
            if ids.is_empty() {
                return Err(ComplexError::EmptyFacet(i));
            }
            id_facets.push(ids);
        }
        if id_facets.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        Ok(Self::from_id_facets(labels, id_facets))
    }

    /// The full simplex on vertices labelled `1..=n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_facets([(1..=n).collect::<Vec<_>>()]).expect("n >= 1")
    }

    /// Boundary of the simplex on `1..=n`.
    pub fn simplex_boundary(n: usize) -> Self {
        let facets = (1..=n).map(|skip| (1..=n).filter(|&v| v != skip).collect::<Vec<_>>());
        Self::from_facets(facets).expect("n >= 2")
    }

    pub(crate) fn from_id_facets(
        labels: Vec<String>,
        facets: impl IntoIterator<Item = Vec<usize>>,
    ) -> Self {
        let mut faces = HashSet::new();
        for mut facet in facets {
            facet.sort_unstable();
            facet.dedup();
            insert_closure(&mut faces, &facet);
        }
        Self::from_face_set(labels, faces)
    }

    /// `faces` must already be downward closed.
    pub(crate) fn from_face_set(labels: Vec<String>, faces: HashSet<Vec<usize>>) -> Self {
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let d = faces.iter().map(Vec::len).max().unwrap_or(0);
        Self { labels, index, faces, d }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// Number of nonempty faces.
    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Largest face cardinality (`dim + 1`).
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> isize {
        self.d as isize - 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_id(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// `face` must be strictly increasing.
    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.faces.contains(face)
    }

    pub fn contains_labeled_face<S: AsRef<str>>(&self, face: &[S]) -> bool {
        let ids: Option<BTreeSet<usize>> =
            face.iter().map(|l| self.vertex_id(l.as_ref())).collect();
        match ids {
            Some(ids) if !ids.is_empty() => {
                self.faces.contains(&ids.into_iter().collect::<Vec<_>>())
            }
            _ => false,
        }
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter()
    }

    /// Faces ordered by cardinality, then lexicographically.
    pub fn faces_sorted(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.faces.iter().cloned().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Faces of the given cardinality, sorted.
    pub fn faces_of_size(&self, size: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> =
            self.faces.iter().filter(|f| f.len() == size).cloned().collect();
        out.sort();
        out
    }

    /// Inclusion-maximal faces, ordered like [`Self::faces_sorted`].
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut covered = HashSet::new();
        for face in &self.faces {
            if face.len() > 1 {
                for skip in 0..face.len() {
                    let mut sub = face.clone();
                    sub.remove(skip);
                    covered.insert(sub);
                }
            }
        }
        let mut out: Vec<Vec<usize>> =
            self.faces.iter().filter(|f| !covered.contains(*f)).cloned().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn labeled_face(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// Every face as a sorted set of labels; two complexes with equal
    /// results are identical up to the choice of internal ids.
    pub fn labeled_faces(&self) -> BTreeSet<BTreeSet<String>> {
        self.faces
            .iter()
            .map(|f| f.iter().map(|&v| self.labels[v].clone()).collect())
            .collect()
    }

    pub fn is_identical_to(&self, other: &SimplicialComplex) -> bool {
        self.num_faces() == other.num_faces()
            && self.labels.iter().collect::<BTreeSet<_>>()
                == other.labels.iter().collect::<BTreeSet<_>>()
            && self.labeled_faces() == other.labeled_faces()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![BigInt::zero(); self.d + 1];
        counts[0] = BigInt::one();
        for face in &self.faces {
            counts[face.len()] += 1;
        }
        FVector(counts)
    }

    pub fn h_vector(&self) -> HVector {
        f_to_h(&self.f_vector())
    }

    /// `Σ_{i≥0} (−1)^i f_i`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.f_vector().euler_characteristic()
    }

    pub fn one_skeleton(&self) -> VertexGraph {
        let edges = self.faces.iter().filter(|f| f.len() == 2).map(|f| (f[0], f[1]));
        VertexGraph::from_edges(self.labels.iter(), edges).expect("edges of a complex are valid")
    }

    /// True iff the complex equals the clique complex of its 1-skeleton.
    pub fn is_flag(&self) -> bool {
        let flag = self.one_skeleton().clique_complex();
        flag.num_faces() == self.num_faces() && flag.faces.iter().all(|f| self.faces.contains(f))
    }
}

fn insert_closure(faces: &mut HashSet<Vec<usize>>, facet: &[usize]) {
    if facet.is_empty() || faces.contains(facet) {
        return;
    }
    faces.insert(facet.to_vec());
    if facet.len() > 1 {
        for skip in 0..facet.len() {
            let mut sub = facet.to_vec();
            sub.remove(skip);
            insert_closure(faces, &sub);
        }
    }
}

/// `(f_{−1}, f_0, …, f_{d−1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<BigInt>);

/// `(h_0, …, h_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector(pub Vec<BigInt>);

impl FVector {
    pub fn from_i64(values: &[i64]) -> Self {
        Self(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// The `d` with `len = d + 1`.
    pub fn d(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.0
            .iter()
            .skip(1)
            .enumerate()
            .map(|(i, f)| if i % 2 == 0 { f.clone() } else { -f })
            .sum()
    }

    pub fn reduced_euler_characteristic(&self) -> BigInt {
        self.euler_characteristic() - 1
    }
}

impl HVector {
    pub fn from_i64(values: &[i64]) -> Self {
        Self(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

/// `h_j = Σ_{i≤j} (−1)^{j−i} C(d−i, j−i) f_{i−1}`.
pub fn f_to_h(f: &FVector) -> HVector {
    let d = f.d();
    let h = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let term = binomial(BigInt::from(d - i), BigInt::from(j - i)) * &f.0[i];
                    if (j - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    HVector(h)
}

/// `f_{j−1} = Σ_{i≤j} C(d−i, j−i) h_i`.
pub fn h_to_f(h: &HVector) -> FVector {
    let d = h.d();
    let f = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| binomial(BigInt::from(d - i), BigInt::from(j - i)) * &h.0[i])
                .sum()
        })
        .collect();
    FVector(f)
}

/// Checks that `map` (on labels) is a simplicial isomorphism `a → b`.
///
/// Every face of `a` must map to a face of `b` and the face counts must
/// agree, which for a vertex bijection is the same as `F ∈ a ⇔ map(F) ∈ b`.
pub fn is_simplicial_iso(
    map: &HashMap<String, String>,
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Result<bool, ComplexError> {
    let ids = vertex_bijection(map, a, b)?;
    if a.num_faces() != b.num_faces() {
        return Ok(false);
    }
    Ok(a.faces.iter().all(|f| {
        let mut image: Vec<usize> = f.iter().map(|&v| ids[v]).collect();
        image.sort_unstable();
        b.faces.contains(&image)
    }))
}

/// Edge-level isomorphism test, valid when both complexes are flag.
///
/// Returns `Ok(false)` if either side is not flag.
pub fn is_simplicial_iso_flag(
    map: &HashMap<String, String>,
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Result<bool, ComplexError> {
    let ids = vertex_bijection(map, a, b)?;
    if !a.is_flag() || !b.is_flag() {
        return Ok(false);
    }
    let ea = a.faces_of_size(2);
    if ea.len() != b.faces_of_size(2).len() {
        return Ok(false);
    }
    Ok(ea.iter().all(|e| {
        let (x, y) = (ids[e[0]], ids[e[1]]);
        b.faces.contains(&vec![x.min(y), x.max(y)])
    }))
}

/// Translates a label map into an id map, checking it is a bijection
/// between the vertex sets.
pub fn vertex_bijection(
    map: &HashMap<String, String>,
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Result<Vec<usize>, ComplexError> {
    if a.num_vertices() != b.num_vertices() {
        return Err(ComplexError::NotABijection(format!(
            "{} vertices vs {}",
            a.num_vertices(),
            b.num_vertices()
        )));
    }
    let mut seen = vec![false; b.num_vertices()];
    let mut ids = Vec::with_capacity(a.num_vertices());
    for label in &a.labels {
        let target = map
            .get(label)
            .ok_or_else(|| ComplexError::NotABijection(format!("{label:?} is unmapped")))?;
        let id = b.vertex_id(target).ok_or_else(|| {
            ComplexError::NotABijection(format!("{label:?} maps outside the target ({target:?})"))
        })?;
        if std::mem::replace(&mut seen[id], true) {
            return Err(ComplexError::NotABijection(format!("{target:?} is hit twice")));
        }
        ids.push(id);
    }
    Ok(ids)
}
