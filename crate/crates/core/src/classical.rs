//! Barycentric, edgewise, colored barycentric and CMS subdivisions built
//! from their combinatorial definitions, and the vertex maps identifying
//! them with multichain subdivisions.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::complex::{is_simplicial_iso, FVector, SimplicialComplex};
use crate::graph::VertexGraph;
use crate::multichain::{type_one, type_two, Multichain, MultichainError};
use crate::poset::{face_label, face_poset, is_subset, FacePoset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassicalError {
    #[error("vertex order {0:?} is not a permutation of the vertex ids")]
    InvalidOrder(Vec<usize>),
    #[error("r must be at least 1")]
    ZeroR,
    #[error("N must be at least 1")]
    ZeroN,
    #[error("label {0} has no coordinate equal to {1}")]
    ApexMissing(String, usize),
    #[error("label {0} has a coordinate above {1}")]
    CoordinateTooLarge(String, usize),
    #[error("support of {0:?} is not a chain of faces")]
    NotAChain(Vec<usize>),
    #[error("multichain {0:?} is not weakly increasing")]
    NotAMultichain(Vec<Vec<usize>>),
    #[error(transparent)]
    Multichain(#[from] MultichainError),
}

/// `sd(Δ)`: chains of nonempty faces. Vertex ids follow the face poset, so
/// they are already sorted by cardinality and then lexicographically.
pub fn barycentric(complex: &SimplicialComplex) -> SimplicialComplex {
    type_one(complex, 1).expect("r = 1 is admissible").complex
}

/// An edgewise subdivision with the coordinate vector of every vertex.
#[derive(Clone, Debug)]
pub struct EdgewiseSubdivision {
    /// Base vertex ids in the order used for partial sums.
    pub order: Vec<usize>,
    /// `vectors[v][p]` is the coordinate of vertex `v` at base vertex
    /// `order[p]`.
    pub vectors: Vec<Vec<usize>>,
    pub complex: SimplicialComplex,
}

/// `Δ^{<r>}` with partial sums taken along `order`.
pub fn edgewise(base: &SimplicialComplex, r: usize, order: &[usize]) -> Result<EdgewiseSubdivision, ClassicalError> {
    if r == 0 {
        return Err(ClassicalError::ZeroR);
    }
    let m = base.num_vertices();
    if order.len() != m || order.iter().copied().sorted().ne(0..m) {
        return Err(ClassicalError::InvalidOrder(order.to_vec()));
    }
    let mut position = vec![0; m];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let mut vectors = Vec::new();
    for face in base.faces_sorted() {
        for parts in compositions(r, face.len()) {
            let mut u = vec![0; m];
            for (&v, part) in face.iter().zip(parts) {
                u[position[v]] = part;
            }
            vectors.push(u);
        }
    }
    let supports: Vec<Vec<usize>> = vectors
        .iter()
        .map(|u| u.iter().enumerate().filter(|(_, &x)| x > 0).map(|(p, _)| order[p]).sorted().collect())
        .collect();
    let prefix: Vec<Vec<i64>> = vectors
        .iter()
        .map(|u| u.iter().scan(0i64, |acc, &x| {
            *acc += x as i64;
            Some(*acc)
        }).collect())
        .collect();
    let union = |a: &[usize], b: &[usize]| -> Vec<usize> { a.iter().chain(b).copied().sorted().dedup().collect() };
    let n = vectors.len();
    let mut adjacent = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let diffs: Vec<i64> = prefix[i].iter().zip(&prefix[j]).map(|(a, b)| a - b).collect();
            let steps = diffs.iter().all(|x| (0..=1).contains(x)) || diffs.iter().all(|x| (-1..=0).contains(x));
            if steps && base.contains_face(&union(&supports[i], &supports[j])) {
                adjacent[i][j] = true;
                adjacent[j][i] = true;
            }
        }
    }
    // pairwise conditions plus a face of the base for the whole support
    let mut faces = HashSet::new();
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> = (0..n).map(|v| (vec![v], supports[v].clone())).collect();
    while let Some((face, support)) = stack.pop() {
        let last = *face.last().unwrap();
        for w in last + 1..n {
            if face.iter().all(|&x| adjacent[x][w]) {
                let grown = union(&support, &supports[w]);
                if base.contains_face(&grown) {
                    let mut next = face.clone();
                    next.push(w);
                    stack.push((next, grown));
                }
            }
        }
        faces.insert(face);
    }
    let labels = vectors.iter().map(|u| edgewise_label(base, order, u)).collect();
    let complex = SimplicialComplex::from_face_set(labels, faces);
    Ok(EdgewiseSubdivision { order: order.to_vec(), vectors, complex })
}

/// Ordered ways to write `total` as `parts` positive integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if total < parts {
        return Vec::new();
    }
    // choose the cut points among total − 1 gaps
    (1..total)
        .combinations(parts - 1)
        .map(|cuts| {
            std::iter::once(0)
                .chain(cuts.iter().copied())
                .chain(std::iter::once(total))
                .tuple_windows()
                .map(|(a, b)| b - a)
                .collect()
        })
        .collect()
}

/// `2*{1}+{1,2}`: base labels with their multiplicities, in partial sum
/// order.
fn edgewise_label(base: &SimplicialComplex, order: &[usize], u: &[usize]) -> String {
    u.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(p, &x)| {
            let label = base.label(order[p]);
            if x == 1 {
                label.to_string()
            } else {
                format!("{x}*{label}")
            }
        })
        .join("+")
}

/// `sd_r(Δ)`: the edgewise subdivision of `sd(Δ)` along the cardinality
/// then lexicographic order of faces.
pub fn colored_barycentric(complex: &SimplicialComplex, r: usize) -> Result<EdgewiseSubdivision, ClassicalError> {
    let sd = barycentric(complex);
    let order: Vec<usize> = (0..sd.num_vertices()).collect();
    edgewise(&sd, r, &order)
}

/// Repeats each face of the support as often as its coordinate, in chain
/// order. Coordinates are indexed by face poset element.
pub fn theta(u: &[usize], faces: &FacePoset) -> Result<Multichain, ClassicalError> {
    let support: Vec<usize> = (0..u.len()).filter(|&p| u[p] > 0).collect();
    let chain = faces.poset.sort_chain(&support).ok_or_else(|| ClassicalError::NotAChain(u.to_vec()))?;
    Ok(Multichain(chain.iter().flat_map(|&p| std::iter::repeat_n(p, u[p])).collect()))
}

/// `u_F` = number of entries equal to `F`.
pub fn theta_inverse(m: &Multichain, faces: &FacePoset) -> Vec<usize> {
    let mut u = vec![0; faces.poset.len()];
    for &p in &m.0 {
        u[p] += 1;
    }
    u
}

/// Outcome of comparing two complexes under a vertex map given on labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    pub source_f: FVector,
    pub target_f: FVector,
    /// `(source label, target label)` in source vertex order.
    pub bijection: Vec<(String, String)>,
    pub is_bijection: bool,
    pub edges_forward: bool,
    pub edges_backward: bool,
    pub source_flag: bool,
    pub target_flag: bool,
    pub isomorphic: bool,
    /// First failure found, if any.
    pub counterexample: Option<String>,
}

impl IsoCertificate {
    pub fn passed(&self) -> bool {
        self.is_bijection
            && self.edges_forward
            && self.edges_backward
            && self.source_flag
            && self.target_flag
            && self.isomorphic
    }
}

/// Checks `map` both on edges (each direction) and on all faces.
pub fn certify_isomorphism(
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    map: &HashMap<String, String>,
) -> IsoCertificate {
    let bijection: Vec<(String, String)> = source
        .labels()
        .iter()
        .map(|l| (l.clone(), map.get(l).cloned().unwrap_or_default()))
        .collect();
    let mut counterexample = None;
    let mut note = |msg: String| {
        counterexample.get_or_insert(msg);
    };
    let is_bijection = match crate::complex::vertex_bijection(map, source, target) {
        Ok(_) => true,
        Err(e) => {
            note(e.to_string());
            false
        }
    };
    let inverse: HashMap<String, String> = map.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
    let edges_preserved = |from: &SimplicialComplex, to: &SimplicialComplex, m: &HashMap<String, String>| {
        from.faces_of_size(2).into_iter().find_map(|e| {
            let (a, b) = (from.label(e[0]), from.label(e[1]));
            match (m.get(a), m.get(b)) {
                (Some(x), Some(y)) if to.contains_labeled_face(&[x, y]) => None,
                _ => Some(format!("edge {{{a}, {b}}} is not preserved")),
            }
        })
    };
    let forward = edges_preserved(source, target, map);
    let backward = edges_preserved(target, source, &inverse);
    let (edges_forward, edges_backward) = (forward.is_none(), backward.is_none());
    if let Some(msg) = forward.or(backward) {
        note(msg);
    }
    let (source_flag, target_flag) = (source.is_flag(), target.is_flag());
    if !source_flag || !target_flag {
        note(format!("flagness: source {source_flag}, target {target_flag}"));
    }
    let isomorphic = is_bijection && is_simplicial_iso(map, source, target).unwrap_or(false);
    if is_bijection && !isomorphic {
        note("faces differ beyond the 1-skeleton".to_string());
    }
    IsoCertificate {
        source_f: source.f_vector(),
        target_f: target.f_vector(),
        bijection,
        is_bijection,
        edges_forward,
        edges_backward,
        source_flag,
        target_flag,
        isomorphic,
        counterexample,
    }
}

/// θ from `sd_r(Δ)` to the type I subdivision `C^r(Δ)`.
pub fn verify_prop_5_1(complex: &SimplicialComplex, r: usize) -> Result<IsoCertificate, ClassicalError> {
    let faces = face_poset(complex);
    let colored = colored_barycentric(complex, r)?;
    let multichain = type_one(complex, r)?;
    let mut map = HashMap::new();
    for (v, u) in colored.vectors.iter().enumerate() {
        let m = theta(u, &faces)?;
        debug_assert_eq!(&theta_inverse(&m, &faces), u);
        map.insert(colored.complex.label(v).to_string(), m.label(&faces.poset));
    }
    Ok(certify_isomorphism(&colored.complex, &multichain.complex, &map))
}

/// Doubled barycenter coordinates `(k_1, …, k_n)`, one per base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CmsLabel(pub Vec<usize>);

impl CmsLabel {
    pub fn new(k: Vec<usize>, n: usize) -> Result<Self, ClassicalError> {
        let label = Self(k);
        if label.0.iter().any(|&x| x > 2 * n) {
            return Err(ClassicalError::CoordinateTooLarge(label.to_string(), 2 * n));
        }
        if !label.0.contains(&(2 * n)) {
            return Err(ClassicalError::ApexMissing(label.to_string(), 2 * n));
        }
        Ok(label)
    }
}

impl fmt::Display for CmsLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

#[derive(Clone, Debug)]
pub struct CmsSubdivision {
    pub n: usize,
    /// `labels[v]` is the barycenter label of vertex `v`.
    pub labels: Vec<CmsLabel>,
    pub complex: SimplicialComplex,
}

/// Position of a coordinate in a face of a grid cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Low,
    High,
    Free,
}

/// CMS subdivision applied to every facet, glued along shared labels.
///
/// In a facet with apex `j`, each other coordinate ranges over the grid
/// cells `[k, k + 1]`, `0 ≤ k < N`. A face of a cell fixes some coordinates
/// at an endpoint and leaves the rest free; its barycenter gets `2k` or
/// `2k + 2` for fixed and `2k + 1` for free coordinates, `2N` at the apex
/// and `0` off the facet. Simplices are chains of faces of one cell.
pub fn cms(complex: &SimplicialComplex, n: usize) -> Result<CmsSubdivision, ClassicalError> {
    if n == 0 {
        return Err(ClassicalError::ZeroN);
    }
    let width = complex.num_vertices();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut facets = Vec::new();
    let mut id_of = |k: Vec<usize>| -> usize {
        *index.entry(k.clone()).or_insert_with(|| {
            labels.push(CmsLabel(k));
            labels.len() - 1
        })
    };
    for facet in complex.facets() {
        for &apex in &facet {
            let others: Vec<usize> = facet.iter().copied().filter(|&v| v != apex).collect();
            let dim = others.len();
            let cells = std::iter::repeat_n(0..n, dim).multi_cartesian_product();
            for cell in cells.collect::<Vec<_>>() {
                let barycenter = |sides: &[Side]| -> Vec<usize> {
                    let mut k = vec![0; width];
                    k[apex] = 2 * n;
                    for ((&v, &c), side) in others.iter().zip(&cell).zip(sides) {
                        k[v] = match side {
                            Side::Low => 2 * c,
                            Side::High => 2 * c + 2,
                            Side::Free => 2 * c + 1,
                        };
                    }
                    k
                };
                let corners = std::iter::repeat_n([Side::Low, Side::High], dim).multi_cartesian_product();
                for corner in corners.collect::<Vec<_>>() {
                    for release in (0..dim).permutations(dim) {
                        let mut sides = corner.clone();
                        let mut chain = vec![id_of(barycenter(&sides))];
                        for &i in &release {
                            sides[i] = Side::Free;
                            chain.push(id_of(barycenter(&sides)));
                        }
                        facets.push(chain);
                    }
                }
            }
        }
    }
    let names = labels.iter().map(CmsLabel::to_string).collect();
    Ok(CmsSubdivision { n, labels, complex: SimplicialComplex::from_id_facets(names, facets) })
}

/// `[A_{2N}, …, A_1]` with `A_l = {i : k_i ≥ l}`, listed in inclusion
/// order. Faces are sorted base vertex ids.
pub fn phi(label: &CmsLabel, n: usize) -> Result<Vec<Vec<usize>>, ClassicalError> {
    let label = CmsLabel::new(label.0.clone(), n)?;
    Ok((1..=2 * n)
        .rev()
        .map(|l| (0..label.0.len()).filter(|&i| label.0[i] >= l).collect())
        .collect())
}

/// `k_i` = number of entries containing `i`.
pub fn phi_inverse(chain: &[Vec<usize>], width: usize) -> Result<CmsLabel, ClassicalError> {
    if chain.is_empty() || chain.windows(2).any(|w| !is_subset(&w[0], &w[1])) {
        return Err(ClassicalError::NotAMultichain(chain.to_vec()));
    }
    let mut k = vec![0; width];
    for face in chain {
        for &i in face {
            k[i] += 1;
        }
    }
    CmsLabel::new(k, chain.len() / 2)
}

/// φ from `CMS_N(Δ)` to the type II subdivision with `r = 2N`.
pub fn verify_prop_5_2(complex: &SimplicialComplex, n: usize) -> Result<IsoCertificate, ClassicalError> {
    let sub = cms(complex, n)?;
    let multichain = type_two(complex, 2 * n)?;
    let mut map = HashMap::new();
    for (v, label) in sub.labels.iter().enumerate() {
        let chain = phi(label, n)?;
        let name = chain.iter().map(|f| face_label(complex, f)).join("⊆");
        map.insert(sub.complex.label(v).to_string(), name);
    }
    Ok(certify_isomorphism(&sub.complex, &multichain.complex, &map))
}

/// Adjacency of CMS labels by coordinates alone: a shared apex, and the
/// smaller face agrees with the larger one wherever the larger is fixed
/// and is within one of it wherever it is free.
pub fn cms_edge_rule(complex: &SimplicialComplex, sub: &CmsSubdivision) -> VertexGraph {
    let top = 2 * sub.n;
    let contains = |big: &CmsLabel, small: &CmsLabel| {
        big.0.iter().zip(&small.0).all(|(&b, &a)| if b % 2 == 0 { a == b } else { a.abs_diff(b) <= 1 })
    };
    let mut graph = VertexGraph::new(sub.labels.iter().map(CmsLabel::to_string));
    for (i, j) in (0..sub.labels.len()).tuple_combinations() {
        let (a, b) = (&sub.labels[i], &sub.labels[j]);
        let shared_apex = a.0.iter().zip(&b.0).any(|(&x, &y)| x == top && y == top);
        let support: Vec<usize> = (0..a.0.len()).filter(|&v| a.0[v] > 0 || b.0[v] > 0).collect();
        if shared_apex && complex.contains_face(&support) && (contains(a, b) || contains(b, a)) {
            graph.add_edge(i, j).expect("ids in range");
        }
    }
    graph
}

/// Labels of all faces, as sets of vertex label sets; used to compare
/// complexes built along different routes.
pub fn labeled_faces(complex: &SimplicialComplex) -> BTreeSet<BTreeSet<String>> {
    complex.labeled_faces()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multichain::{build_multichain_complex, IncreasingMap};
    use crate::transforms::transform_f;
    use num_bigint::BigInt;

    fn f(c: &SimplicialComplex) -> Vec<i64> {
        c.f_vector().0.iter().map(|x| x.try_into().unwrap()).collect()
    }

    fn edge() -> SimplicialComplex {
        SimplicialComplex::simplex(2)
    }

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::simplex(3)
    }

    fn hollow() -> SimplicialComplex {
        SimplicialComplex::simplex_boundary(3)
    }

    fn glued() -> SimplicialComplex {
        SimplicialComplex::from_facets([[1, 2, 3], [2, 3, 4]]).unwrap()
    }

    fn identity(c: &SimplicialComplex) -> Vec<usize> {
        (0..c.num_vertices()).collect()
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
        assert!(compositions(2, 3).is_empty());
    }

    #[test]
    fn barycentric_examples() {
        assert_eq!(f(&barycentric(&edge())), vec![1, 3, 2]);
        assert_eq!(f(&barycentric(&triangle())), vec![1, 7, 12, 6]);
        assert!(barycentric(&glued()).is_flag());
    }

    #[test]
    fn edgewise_examples() {
        let e = edgewise(&edge(), 2, &[0, 1]).unwrap();
        assert_eq!(f(&e.complex), vec![1, 3, 2]);
        assert!(e.complex.contains_labeled_face(&["2*1", "1+2"]));
        assert!(e.complex.contains_labeled_face(&["1+2", "2*2"]));
        assert!(!e.complex.contains_labeled_face(&["2*1", "2*2"]));
        assert_eq!(f(&edgewise(&triangle(), 2, &[0, 1, 2]).unwrap().complex), vec![1, 6, 9, 4]);
        assert_eq!(f(&edgewise(&triangle(), 3, &[2, 0, 1]).unwrap().complex), vec![1, 10, 18, 9]);
    }

    #[test]
    fn edgewise_at_one_is_the_base() {
        for base in [edge(), triangle(), hollow(), glued()] {
            let e = edgewise(&base, 1, &identity(&base)).unwrap();
            assert!(e.complex.is_identical_to(&base));
        }
    }

    #[test]
    fn invalid_order_is_rejected() {
        assert!(matches!(edgewise(&edge(), 2, &[0, 0]), Err(ClassicalError::InvalidOrder(_))));
        assert!(matches!(edgewise(&edge(), 0, &[0, 1]), Err(ClassicalError::ZeroR)));
    }

    #[test]
    fn colored_barycentric_face_numbers() {
        for base in [edge(), triangle(), hollow(), glued()] {
            assert!(colored_barycentric(&base, 1).unwrap().complex.is_identical_to(&barycentric(&base)));
            for r in 1..=3 {
                let sd = colored_barycentric(&base, r).unwrap().complex;
                assert_eq!(sd.f_vector(), transform_f(&base.f_vector(), r));
                assert!(sd.is_flag());
            }
        }
        assert_eq!(f(&colored_barycentric(&edge(), 3).unwrap().complex), vec![1, 7, 6]);
    }

    #[test]
    fn theta_round_trip() {
        let faces = face_poset(&triangle());
        // {1} twice, then {1,2}
        let mut u = vec![0; 7];
        u[0] = 2;
        u[3] = 1;
        assert_eq!(theta(&u, &faces).unwrap(), Multichain(vec![0, 0, 3]));
        let mut constant = vec![0; 7];
        constant[6] = 3;
        assert_eq!(theta(&constant, &faces).unwrap(), Multichain(vec![6, 6, 6]));
        let sd3 = colored_barycentric(&triangle(), 3).unwrap();
        assert_eq!(sd3.vectors.len(), 37);
        for u in &sd3.vectors {
            assert_eq!(&theta_inverse(&theta(u, &faces).unwrap(), &faces), u);
        }
        let mut bad = vec![0; 7];
        bad[0] = 1;
        bad[1] = 1;
        assert!(matches!(theta(&bad, &faces), Err(ClassicalError::NotAChain(_))));
    }

    #[test]
    fn prop_5_1_certificates() {
        let cert = verify_prop_5_1(&edge(), 2).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.bijection.len(), 5);
        let cert = verify_prop_5_1(&triangle(), 3).unwrap();
        assert!(cert.passed(), "{:?}", cert.counterexample);
        assert_eq!(cert.source_f.0[1], BigInt::from(37));
        assert_eq!(cert.source_f.0[2], BigInt::from(90));
        for base in [edge(), triangle(), hollow()] {
            for r in 1..=3 {
                assert!(verify_prop_5_1(&base, r).unwrap().passed());
            }
        }
    }

    #[test]
    fn cms_face_numbers() {
        assert_eq!(f(&cms(&edge(), 1).unwrap().complex), vec![1, 5, 4]);
        assert_eq!(f(&cms(&edge(), 2).unwrap().complex), vec![1, 9, 8]);
        assert_eq!(f(&cms(&triangle(), 1).unwrap().complex), vec![1, 19, 42, 24]);
        assert_eq!(cms(&triangle(), 2).unwrap().complex.num_vertices(), 61);
        for base in [edge(), triangle(), hollow(), glued()] {
            let sub = cms(&base, 1).unwrap().complex;
            assert_eq!(sub.f_vector(), transform_f(&base.f_vector(), 2));
            assert!(sub.is_flag());
        }
        assert_eq!(cms(&edge(), 2).unwrap().complex.f_vector(), transform_f(&edge().f_vector(), 4));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&CmsLabel(vec![1, 2, 1]), 1).unwrap(), vec![vec![1], vec![0, 1, 2]]);
        assert_eq!(phi(&CmsLabel(vec![4, 4, 4]), 2).unwrap(), vec![vec![0, 1, 2]; 4]);
        assert!(matches!(phi(&CmsLabel(vec![1, 1, 0]), 1), Err(ClassicalError::ApexMissing(..))));
        let sub = cms(&triangle(), 1).unwrap();
        assert_eq!(sub.labels.len(), 19);
        for label in &sub.labels {
            assert_eq!(&phi_inverse(&phi(label, 1).unwrap(), 3).unwrap(), label);
        }
    }

    #[test]
    fn prop_5_2_certificates() {
        for (base, n) in [(edge(), 1), (triangle(), 1), (edge(), 2), (hollow(), 1)] {
            let cert = verify_prop_5_2(&base, n).unwrap();
            assert!(cert.passed(), "{:?}", cert.counterexample);
        }
    }

    #[test]
    fn phi_does_not_identify_cms_with_type_one() {
        // the same map into the interleaving order fails on a triangle
        let sub = cms(&triangle(), 1).unwrap();
        let poset = face_poset(&triangle()).poset;
        let type1 = build_multichain_complex(&poset, 2, &IncreasingMap::type_one(2)).unwrap();
        let map: HashMap<String, String> = sub
            .labels
            .iter()
            .enumerate()
            .map(|(v, l)| {
                let name = phi(l, 1).unwrap().iter().map(|f| face_label(&triangle(), f)).join("⊆");
                (sub.complex.label(v).to_string(), name)
            })
            .collect();
        assert!(!certify_isomorphism(&sub.complex, &type1.complex, &map).passed());
    }

    #[test]
    fn edge_rule_matches_construction() {
        for (base, n) in [(edge(), 1), (edge(), 2), (triangle(), 1), (triangle(), 2), (glued(), 1)] {
            let sub = cms(&base, n).unwrap();
            let rule = cms_edge_rule(&base, &sub);
            let built: BTreeSet<Vec<usize>> = sub.complex.faces_of_size(2).into_iter().collect();
            let derived: BTreeSet<Vec<usize>> = rule.edges().into_iter().map(|(a, b)| vec![a, b]).collect();
            assert_eq!(built, derived);
        }
    }

    #[test]
    fn single_simplex_subdivisions_are_balls() {
        for base in [edge(), triangle()] {
            for r in 1..=3 {
                assert_eq!(colored_barycentric(&base, r).unwrap().complex.euler_characteristic(), BigInt::from(1));
            }
            assert_eq!(cms(&base, 2).unwrap().complex.euler_characteristic(), BigInt::from(1));
        }
    }
}
