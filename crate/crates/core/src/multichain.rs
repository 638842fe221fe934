//! Subdivisions whose vertices are r-multichains of a poset.
//!
//! For a strictly increasing `ι: [r] → [2r]` two multichains are related,
//! `p ⪯_ι q`, when for all `t, s ∈ [r]`
//!
//! ```text
//! p_t ≥ q_s  if s ≤ ι(t) − t,
//! p_t ≤ q_s  otherwise.
//! ```
//!
//! The subdivision is the clique complex of the comparability graph of
//! `⪯_ι`. Type I (`ι(t) = 2t − 1`) reads as interleaving,
//! `p_1 ⊆ q_1 ⊆ p_2 ⊆ q_2 ⊆ …`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::graph::VertexGraph;
use crate::poset::{face_poset, FinitePoset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MultichainError {
    #[error("multichains of length {0} and {1} cannot be compared")]
    LengthMismatch(usize, usize),
    #[error("invalid map {0}: {1}")]
    InvalidIota(String, String),
    #[error("{0} is not admissible: the relation is not reflexive")]
    NonAdmissibleIota(String),
    #[error("largest face has {found} vertices but the poset has height {expected}")]
    DimensionMismatch { found: usize, expected: usize },
    #[error("not a face: {0}")]
    NotAFace(String),
}

/// A strictly increasing map `ι: [r] → [2r]`, stored 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingMap {
    values: Vec<usize>,
}

impl IncreasingMap {
    pub fn new(values: Vec<usize>) -> Result<Self, MultichainError> {
        let r = values.len();
        let text = format_values(&values);
        if r == 0 {
            return Err(MultichainError::InvalidIota(text, "r must be positive".into()));
        }
        if values.iter().any(|&v| v == 0 || v > 2 * r) {
            return Err(MultichainError::InvalidIota(text, format!("values must lie in 1..={}", 2 * r)));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(MultichainError::InvalidIota(text, "values must strictly increase".into()));
        }
        Ok(Self { values })
    }

    /// `ι(t) = 2t − 1`.
    pub fn type_one(r: usize) -> Self {
        Self { values: (1..=r).map(|t| 2 * t - 1).collect() }
    }

    /// `ι(t) = 2t` for even `t`, `2t − 1` for odd `t`.
    pub fn type_two(r: usize) -> Self {
        Self { values: (1..=r).map(|t| if t % 2 == 0 { 2 * t } else { 2 * t - 1 }).collect() }
    }

    pub fn r(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `ι(t)` for 1-based `t`.
    pub fn at(&self, t: usize) -> usize {
        self.values[t - 1]
    }

    /// `ι(t) ∈ {2t − 1, 2t}` for every `t`.
    pub fn is_admissible(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == 2 * i + 1 || v == 2 * i + 2)
    }

    /// Whether row `t` (1-based) of a face matrix runs downwards.
    pub fn reverses_row(&self, t: usize) -> bool {
        self.at(t) == 2 * t
    }
}

impl fmt::Display for IncreasingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_values(&self.values))
    }
}

impl FromStr for IncreasingMap {
    type Err = MultichainError;

    /// Parses `1,3,6`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = inner
            .split(',')
            .map(|part| part.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| MultichainError::InvalidIota(s.to_string(), e.to_string()))?;
        Self::new(values)
    }
}

fn format_values(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

/// The `2^{r−1}` admissible maps with `ι(1) = 1`, in lexicographic order.
pub fn admissible_iotas(r: usize) -> Vec<IncreasingMap> {
    assert!(r >= 1, "r must be positive");
    (0..1usize << (r - 1))
        .map(|mask| {
            let values = (1..=r)
                .map(|t| {
                    // bit r-t selects 2t for t >= 2; high bits vary slowest
                    let up = t >= 2 && mask & (1 << (r - t)) != 0;
                    if up {
                        2 * t
                    } else {
                        2 * t - 1
                    }
                })
                .collect();
            IncreasingMap { values }
        })
        .collect()
}

/// Every strictly increasing map `[r] → [2r]`, admissible or not.
pub fn all_increasing_maps(r: usize) -> Vec<IncreasingMap> {
    fn extend(r: usize, prefix: &mut Vec<usize>, out: &mut Vec<IncreasingMap>) {
        if prefix.len() == r {
            out.push(IncreasingMap { values: prefix.clone() });
            return;
        }
        let start = prefix.last().map_or(1, |&v| v + 1);
        for v in start..=2 * r {
            prefix.push(v);
            extend(r, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(r, &mut Vec::new(), &mut out);
    out
}

/// A weakly increasing sequence of poset elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multichain(pub Vec<usize>);

impl Multichain {
    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn is_valid(&self, poset: &FinitePoset) -> bool {
        self.0.iter().all(|&p| p < poset.len()) && self.0.windows(2).all(|w| poset.le(w[0], w[1]))
    }

    /// Element labels joined by `⊆`.
    pub fn label(&self, poset: &FinitePoset) -> String {
        let parts: Vec<&str> = self.0.iter().map(|&p| poset.label(p)).collect();
        parts.join("⊆")
    }
}

pub fn multichain_le(
    p: &Multichain,
    q: &Multichain,
    iota: &IncreasingMap,
    poset: &FinitePoset,
) -> Result<bool, MultichainError> {
    let r = iota.r();
    if p.r() != r || q.r() != r {
        return Err(MultichainError::LengthMismatch(p.r().max(q.r()), r));
    }
    Ok(related(&p.0, &q.0, iota, poset))
}

fn related(p: &[usize], q: &[usize], iota: &IncreasingMap, poset: &FinitePoset) -> bool {
    let r = p.len();
    (1..=r).all(|t| {
        let split = iota.at(t) - t;
        (1..=r).all(|s| {
            if s <= split {
                poset.le(q[s - 1], p[t - 1])
            } else {
                poset.le(p[t - 1], q[s - 1])
            }
        })
    })
}

/// All `r`-multichains, lexicographic in element ids.
pub fn enumerate_multichains(poset: &FinitePoset, r: usize) -> Vec<Multichain> {
    fn extend(poset: &FinitePoset, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Multichain>) {
        if prefix.len() == r {
            out.push(Multichain(prefix.clone()));
            return;
        }
        for p in 0..poset.len() {
            if prefix.last().is_none_or(|&last| poset.le(last, p)) {
                prefix.push(p);
                extend(poset, r, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(poset, r, &mut Vec::new(), &mut out);
    out
}

/// The columns of a face, ordered so that earlier columns precede later
/// ones under `⪯_ι`. Row `t` of the matrix is `columns[..].0[t − 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultichainFace {
    pub columns: Vec<Multichain>,
}

impl MultichainFace {
    pub fn row(&self, t: usize) -> Vec<usize> {
        self.columns.iter().map(|c| c.0[t - 1]).collect()
    }

    /// Orders a set of pairwise related multichains along `⪯_ι`.
    pub fn from_unordered(
        mut columns: Vec<Multichain>,
        iota: &IncreasingMap,
        poset: &FinitePoset,
    ) -> Result<Self, MultichainError> {
        let rank = |c: &Multichain| columns.iter().filter(|o| related(&o.0, &c.0, iota, poset)).count();
        let mut keyed: Vec<(usize, Multichain)> = columns.iter().map(|c| (rank(c), c.clone())).collect();
        keyed.sort();
        columns = keyed.into_iter().map(|(_, c)| c).collect();
        let face = Self { columns };
        face.check(iota, poset)?;
        Ok(face)
    }

    /// Columns are valid, distinct and `⪯_ι`-increasing from left to right.
    pub fn check(&self, iota: &IncreasingMap, poset: &FinitePoset) -> Result<(), MultichainError> {
        let describe = || {
            let parts: Vec<String> = self.columns.iter().map(|c| c.label(poset)).collect();
            parts.join(" | ")
        };
        if self.columns.is_empty() {
            return Err(MultichainError::NotAFace("no columns".into()));
        }
        for c in &self.columns {
            if c.r() != iota.r() || !c.is_valid(poset) {
                return Err(MultichainError::NotAFace(describe()));
            }
        }
        for i in 0..self.columns.len() {
            for j in i + 1..self.columns.len() {
                let (a, b) = (&self.columns[i], &self.columns[j]);
                if a == b || !related(&a.0, &b.0, iota, poset) {
                    return Err(MultichainError::NotAFace(describe()));
                }
            }
        }
        Ok(())
    }
}

/// Rewrites every row with `ι(t) = 2t` by reversing the order of its
/// distinct values, turning a face for `ι` into a face for type I.
///
/// The operation is an involution on matrices, so applying it to the image
/// (with the same `ι`) recovers the original face.
pub fn normalize_face(
    face: &MultichainFace,
    iota: &IncreasingMap,
    poset: &FinitePoset,
) -> Result<MultichainFace, MultichainError> {
    if !iota.is_admissible() {
        return Err(MultichainError::NonAdmissibleIota(iota.to_string()));
    }
    face.check(iota, poset)?;
    Ok(reverse_rows(face, iota, poset))
}

/// Inverse of [`normalize_face`]: takes a type-I face back to `ι`.
pub fn denormalize_face(
    face: &MultichainFace,
    iota: &IncreasingMap,
    poset: &FinitePoset,
) -> Result<MultichainFace, MultichainError> {
    if !iota.is_admissible() {
        return Err(MultichainError::NonAdmissibleIota(iota.to_string()));
    }
    face.check(&IncreasingMap::type_one(iota.r()), poset)?;
    Ok(reverse_rows(face, iota, poset))
}

fn reverse_rows(face: &MultichainFace, iota: &IncreasingMap, poset: &FinitePoset) -> MultichainFace {
    let mut columns = face.columns.clone();
    for t in (1..=iota.r()).filter(|&t| iota.reverses_row(t)) {
        let mut distinct = face.row(t);
        distinct.sort_unstable();
        distinct.dedup();
        let chain = poset.sort_chain(&distinct).expect("rows of a face are chains");
        let m = chain.len();
        let position: HashMap<usize, usize> = chain.iter().enumerate().map(|(b, &x)| (x, b)).collect();
        for column in &mut columns {
            column.0[t - 1] = chain[m - 1 - position[&column.0[t - 1]]];
        }
    }
    MultichainFace { columns }
}

/// A multichain subdivision together with the data behind its vertices.
#[derive(Clone, Debug)]
pub struct MultichainSubdivision {
    pub poset: FinitePoset,
    pub iota: IncreasingMap,
    /// `multichains[v]` is the multichain at vertex id `v` of `complex`.
    pub multichains: Vec<Multichain>,
    pub complex: SimplicialComplex,
    index: HashMap<Multichain, usize>,
}

impl MultichainSubdivision {
    pub fn vertex_of(&self, m: &Multichain) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn face_matrix(&self, face: &[usize]) -> Result<MultichainFace, MultichainError> {
        let columns = face.iter().map(|&v| self.multichains[v].clone()).collect();
        MultichainFace::from_unordered(columns, &self.iota, &self.poset)
    }

    /// Vertex ids of a matrix, sorted, if every column is a vertex.
    pub fn face_ids(&self, face: &MultichainFace) -> Option<Vec<usize>> {
        let mut ids = face.columns.iter().map(|c| self.vertex_of(c)).collect::<Option<Vec<_>>>()?;
        ids.sort_unstable();
        Some(ids)
    }

    /// The comparability graph of `⪯_ι` on the vertices.
    pub fn relation_graph(&self) -> VertexGraph {
        relation_graph(&self.poset, &self.multichains, &self.iota)
    }
}

fn relation_graph(poset: &FinitePoset, multichains: &[Multichain], iota: &IncreasingMap) -> VertexGraph {
    let labels: Vec<String> = multichains.iter().map(|m| m.label(poset)).collect();
    let mut graph = VertexGraph::new(labels);
    for i in 0..multichains.len() {
        for j in i + 1..multichains.len() {
            let (p, q) = (&multichains[i].0, &multichains[j].0);
            if related(p, q, iota, poset) || related(q, p, iota, poset) {
                graph.add_edge(i, j).expect("ids in range");
            }
        }
    }
    graph
}

pub fn build_multichain_complex(
    poset: &FinitePoset,
    r: usize,
    iota: &IncreasingMap,
) -> Result<MultichainSubdivision, MultichainError> {
    if iota.r() != r {
        return Err(MultichainError::LengthMismatch(iota.r(), r));
    }
    if !iota.is_admissible() {
        return Err(MultichainError::NonAdmissibleIota(iota.to_string()));
    }
    let multichains = enumerate_multichains(poset, r);
    let complex = relation_graph(poset, &multichains, iota).clique_complex();
    let expected = poset.height();
    if complex.d() != expected {
        return Err(MultichainError::DimensionMismatch { found: complex.d(), expected });
    }
    let index = multichains.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    Ok(MultichainSubdivision { poset: poset.clone(), iota: iota.clone(), multichains, complex, index })
}

/// Multichain subdivision of the face poset of `complex`.
pub fn multichain_subdivision(
    complex: &SimplicialComplex,
    r: usize,
    iota: &IncreasingMap,
) -> Result<MultichainSubdivision, MultichainError> {
    build_multichain_complex(&face_poset(complex).poset, r, iota)
}

pub fn type_one(complex: &SimplicialComplex, r: usize) -> Result<MultichainSubdivision, MultichainError> {
    multichain_subdivision(complex, r, &IncreasingMap::type_one(r))
}

pub fn type_two(complex: &SimplicialComplex, r: usize) -> Result<MultichainSubdivision, MultichainError> {
    multichain_subdivision(complex, r, &IncreasingMap::type_two(r))
}

/// Per-dimension outcome of pushing every face of one subdivision through
/// [`normalize_face`] into the type-I subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationReport {
    /// `faces[k]` is the number of faces with `k + 1` vertices.
    pub faces: Vec<usize>,
    pub images_are_faces: bool,
    pub injective: bool,
    pub surjective: bool,
    pub inverse_recovers: bool,
}

impl NormalizationReport {
    pub fn is_bijection(&self) -> bool {
        self.images_are_faces && self.injective && self.surjective && self.inverse_recovers
    }
}

pub fn check_normalization(
    source: &MultichainSubdivision,
    type_one: &MultichainSubdivision,
) -> Result<NormalizationReport, MultichainError> {
    let d = source.complex.d();
    let mut faces = vec![0usize; d];
    let mut images: Vec<HashSet<Vec<usize>>> = vec![HashSet::new(); d];
    let mut images_are_faces = true;
    let mut inverse_recovers = true;
    for face in source.complex.faces() {
        faces[face.len() - 1] += 1;
        let matrix = source.face_matrix(face)?;
        let image = normalize_face(&matrix, &source.iota, &source.poset)?;
        match type_one.face_ids(&image) {
            Some(ids) if type_one.complex.contains_face(&ids) => {
                images[face.len() - 1].insert(ids);
            }
            _ => images_are_faces = false,
        }
        if image.check(&type_one.iota, &type_one.poset).is_err() {
            images_are_faces = false;
            continue;
        }
        let back = denormalize_face(&image, &source.iota, &source.poset)?;
        inverse_recovers &= back == matrix;
    }
    let injective = images.iter().zip(&faces).all(|(set, &n)| set.len() == n);
    let surjective = images.iter().enumerate().all(|(k, set)| {
        type_one.complex.faces().filter(|f| f.len() == k + 1).count() == set.len()
    }) && type_one.complex.d() == d;
    Ok(NormalizationReport { faces, images_are_faces, injective, surjective, inverse_recovers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FVector;
    use num_bigint::BigInt;

    fn iota(v: &[usize]) -> IncreasingMap {
        IncreasingMap::new(v.to_vec()).unwrap()
    }

    fn f(sub: &MultichainSubdivision) -> FVector {
        sub.complex.f_vector()
    }

    fn tri() -> SimplicialComplex {
        SimplicialComplex::simplex(3)
    }

    fn edge() -> SimplicialComplex {
        SimplicialComplex::simplex(2)
    }

    #[test]
    fn admissible_maps() {
        assert_eq!(admissible_iotas(1), vec![iota(&[1])]);
        assert_eq!(admissible_iotas(2), vec![iota(&[1, 3]), iota(&[1, 4])]);
        let three: Vec<String> = admissible_iotas(3).iter().map(|m| m.to_string()).collect();
        assert_eq!(three, ["(1,3,5)", "(1,3,6)", "(1,4,5)", "(1,4,6)"]);
        assert_eq!(admissible_iotas(4).len(), 8);
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!("1,3,6".parse::<IncreasingMap>().unwrap(), iota(&[1, 3, 6]));
        assert_eq!("(1,4)".parse::<IncreasingMap>().unwrap(), iota(&[1, 4]));
        assert!("1,1".parse::<IncreasingMap>().is_err());
        assert!("1,5".parse::<IncreasingMap>().is_err());
        assert!("x".parse::<IncreasingMap>().is_err());
        assert_eq!(IncreasingMap::type_two(4), iota(&[1, 4, 5, 8]));
        assert_eq!(IncreasingMap::type_one(3), iota(&[1, 3, 5]));
    }

    #[test]
    fn r_one_is_the_poset_order() {
        let chain = FinitePoset::chain(3);
        let m = |x| Multichain(vec![x]);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(multichain_le(&m(a), &m(b), &iota(&[1]), &chain).unwrap(), a <= b);
            }
        }
    }

    #[test]
    fn hand_evaluated_pair() {
        let chain = FinitePoset::chain(2);
        let p = Multichain(vec![0, 1]);
        let q = Multichain(vec![0, 0]);
        assert!(multichain_le(&p, &q, &iota(&[1, 4]), &chain).unwrap());
        assert!(!multichain_le(&p, &q, &iota(&[1, 3]), &chain).unwrap());
        assert!(multichain_le(&q, &p, &iota(&[1, 3]), &chain).unwrap());
        assert_eq!(
            multichain_le(&p, &Multichain(vec![0]), &iota(&[1, 3]), &chain),
            Err(MultichainError::LengthMismatch(2, 2))
        );
    }

    #[test]
    fn reflexive_exactly_when_admissible() {
        for complex in [edge(), tri()] {
            let poset = face_poset(&complex).poset;
            for r in 1..=3 {
                let chains = enumerate_multichains(&poset, r);
                for map in all_increasing_maps(r) {
                    let reflexive = chains
                        .iter()
                        .all(|p| multichain_le(p, p, &map, &poset).unwrap());
                    assert_eq!(reflexive, map.is_admissible(), "{map}");
                }
            }
        }
    }

    #[test]
    fn multichain_counts() {
        assert_eq!(enumerate_multichains(&FinitePoset::antichain(4), 3).len(), 4);
        let tri = face_poset(&tri()).poset;
        assert_eq!(enumerate_multichains(&tri, 3).len(), 37);
        assert_eq!(enumerate_multichains(&face_poset(&edge()).poset, 2).len(), 5);
        // sum over l of (r^l - (r-1)^l) f_{l-1}
        let fv = [3i64, 3, 1];
        for r in 1..=4i64 {
            let expected: i64 =
                (1..=3u32).map(|l| (r.pow(l) - (r - 1).pow(l)) * fv[l as usize - 1]).sum();
            assert_eq!(enumerate_multichains(&tri, r as usize).len() as i64, expected);
        }
    }

    #[test]
    fn r_one_gives_the_order_complex() {
        let sub = type_one(&tri(), 1).unwrap();
        assert_eq!(f(&sub), FVector::from_i64(&[1, 7, 12, 6]));
        assert!(sub.complex.contains_labeled_face(&["{1}", "{1,2}", "{1,2,3}"]));
    }

    #[test]
    fn triangle_face_numbers() {
        assert_eq!(f(&type_one(&tri(), 3).unwrap()), FVector::from_i64(&[1, 37, 90, 54]));
        for map in admissible_iotas(2) {
            let sub = multichain_subdivision(&tri(), 2, &map).unwrap();
            assert_eq!(f(&sub), FVector::from_i64(&[1, 19, 42, 24]));
        }
        assert_eq!(type_two(&tri(), 2).unwrap().complex.num_vertices(), 19);
    }

    #[test]
    fn labels_name_the_multichain() {
        let sub = type_one(&edge(), 2).unwrap();
        let mut labels = sub.complex.labels().to_vec();
        labels.sort();
        assert_eq!(labels, ["{1,2}⊆{1,2}", "{1}⊆{1,2}", "{1}⊆{1}", "{2}⊆{1,2}", "{2}⊆{2}"]);
    }

    #[test]
    fn non_admissible_maps_are_rejected() {
        let poset = face_poset(&edge()).poset;
        assert!(matches!(
            build_multichain_complex(&poset, 2, &iota(&[1, 2])),
            Err(MultichainError::NonAdmissibleIota(_))
        ));
        assert!(matches!(
            build_multichain_complex(&poset, 3, &iota(&[1, 3])),
            Err(MultichainError::LengthMismatch(2, 3))
        ));
        // ι(1) = 2 still passes the criterion
        assert!(build_multichain_complex(&poset, 2, &iota(&[2, 4])).is_ok());
    }

    #[test]
    fn worked_row_example_is_reversed() {
        // a chain poset with four columns in one reversed row
        let chain = FinitePoset::chain(3);
        let map = iota(&[2]);
        let face = MultichainFace {
            columns: [2, 1, 0].iter().map(|&x| Multichain(vec![x])).collect(),
        };
        let image = normalize_face(&face, &map, &chain).unwrap();
        assert_eq!(image.row(1), vec![0, 1, 2]);
        let repeated = reverse_rows(
            &MultichainFace { columns: [2, 1, 0, 0].iter().map(|&x| Multichain(vec![x])).collect() },
            &map,
            &chain,
        );
        assert_eq!(repeated.row(1), vec![0, 1, 2, 2]);
    }

    #[test]
    fn type_one_faces_are_unchanged() {
        let sub = type_one(&tri(), 2).unwrap();
        for face in sub.complex.faces() {
            let m = sub.face_matrix(face).unwrap();
            assert_eq!(normalize_face(&m, &sub.iota, &sub.poset).unwrap(), m);
        }
    }

    #[test]
    fn rows_are_monotone_in_the_declared_direction() {
        let sub = multichain_subdivision(&tri(), 3, &iota(&[1, 4, 6])).unwrap();
        for face in sub.complex.faces() {
            let m = sub.face_matrix(face).unwrap();
            for t in 1..=3 {
                let row = m.row(t);
                let ok = row.windows(2).all(|w| {
                    if sub.iota.reverses_row(t) {
                        sub.poset.le(w[1], w[0])
                    } else {
                        sub.poset.le(w[0], w[1])
                    }
                });
                assert!(ok, "row {t} of {:?}", m.columns);
            }
        }
    }

    #[test]
    fn normalization_is_a_bijection() {
        for complex in [edge(), tri(), SimplicialComplex::simplex_boundary(3)] {
            for r in 1..=3 {
                let target = type_one(&complex, r).unwrap();
                for map in admissible_iotas(r) {
                    let source = multichain_subdivision(&complex, r, &map).unwrap();
                    let report = check_normalization(&source, &target).unwrap();
                    assert!(report.is_bijection(), "{map}: {report:?}");
                }
            }
        }
    }

    #[test]
    fn not_a_face_is_reported() {
        let sub = type_one(&edge(), 2).unwrap();
        let bogus = MultichainFace { columns: vec![Multichain(vec![0, 0]), Multichain(vec![1, 1])] };
        assert!(matches!(
            normalize_face(&bogus, &sub.iota, &sub.poset),
            Err(MultichainError::NotAFace(_))
        ));
    }

    #[test]
    fn one_skeleton_is_the_relation_graph() {
        let sub = type_two(&tri(), 2).unwrap();
        let graph = sub.relation_graph();
        assert_eq!(BigInt::from(graph.num_edges()), f(&sub).0[2]);
        for (u, v) in graph.edges() {
            assert!(sub.complex.contains_face(&[u, v]));
        }
        assert!(sub.complex.is_flag());
    }

    #[test]
    fn dropping_the_last_column_leaves_a_face() {
        let sub = type_two(&tri(), 3).unwrap();
        for face in sub.complex.faces().filter(|f| f.len() > 1) {
            let m = sub.face_matrix(face).unwrap();
            let shorter = MultichainFace { columns: m.columns[..m.columns.len() - 1].to_vec() };
            let ids = sub.face_ids(&shorter).unwrap();
            assert!(sub.complex.contains_face(&ids));
        }
    }
}
