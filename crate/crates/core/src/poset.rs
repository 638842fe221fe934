//! Finite posets stored as a comparability matrix.

use thiserror::Error;

use crate::complex::SimplicialComplex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation matrix is not {0}x{0}")]
    DimensionMismatch(usize),
    #[error("{0} is not related to itself")]
    NotReflexive(String),
    #[error("{0} and {1} are distinct but mutually related")]
    NotAntisymmetric(String, String),
    #[error("{0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(String, String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    le: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Checks the partial order axioms before accepting `le`.
    pub fn new(labels: Vec<String>, le: Vec<Vec<bool>>) -> Result<Self, PosetError> {
        let n = labels.len();
        if le.len() != n || le.iter().any(|row| row.len() != n) {
            return Err(PosetError::DimensionMismatch(n));
        }
        for a in 0..n {
            if !le[a][a] {
                return Err(PosetError::NotReflexive(labels[a].clone()));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if le[a][b] && le[b][a] {
                    return Err(PosetError::NotAntisymmetric(labels[a].clone(), labels[b].clone()));
                }
            }
        }
        for a in 0..n {
            for b in (0..n).filter(|&b| le[a][b]) {
                for c in (0..n).filter(|&c| le[b][c]) {
                    if !le[a][c] {
                        return Err(PosetError::NotTransitive(
                            labels[a].clone(),
                            labels[b].clone(),
                            labels[c].clone(),
                        ));
                    }
                }
            }
        }
        Ok(Self { labels, le })
    }

    pub fn from_le_fn(
        labels: Vec<String>,
        le: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        let n = labels.len();
        let matrix = (0..n).map(|a| (0..n).map(|b| le(a, b)).collect()).collect();
        Self::new(labels, matrix)
    }

    /// `1 < 2 < … < n`.
    pub fn chain(n: usize) -> Self {
        Self::from_le_fn((1..=n).map(|i| i.to_string()).collect(), |a, b| a <= b)
            .expect("a chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_le_fn((1..=n).map(|i| i.to_string()).collect(), |a, b| a == b)
            .expect("an antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le[a][b] || self.le[b][a]
    }

    /// Elements ordered so that `a < b` implies `a` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        // the number of elements below is strictly monotone along `<`
        let below = |a: usize| (0..self.len()).filter(|&b| self.le[b][a]).count();
        order.sort_by_key(|&a| (below(a), a));
        order
    }

    /// Cardinality of a longest chain.
    pub fn height(&self) -> usize {
        let mut longest = vec![0usize; self.len()];
        for a in self.linear_extension() {
            longest[a] = 1 + (0..self.len())
                .filter(|&b| self.lt(b, a))
                .map(|b| longest[b])
                .max()
                .unwrap_or(0);
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Sorts `elements` increasingly if they form a chain.
    pub fn sort_chain(&self, elements: &[usize]) -> Option<Vec<usize>> {
        let mut sorted = elements.to_vec();
        sorted.sort_by_key(|&a| elements.iter().filter(|&&b| self.le[b][a]).count());
        sorted.windows(2).all(|w| self.le[w[0]][w[1]]).then_some(sorted)
    }
}

/// The nonempty faces of a complex ordered by inclusion.
///
/// Element `i` is the face `faces[i]` (sorted vertex ids of the base
/// complex); elements are numbered by cardinality, then lexicographically.
#[derive(Clone, Debug)]
pub struct FacePoset {
    pub poset: FinitePoset,
    pub faces: Vec<Vec<usize>>,
}

pub fn face_poset(complex: &SimplicialComplex) -> FacePoset {
    let faces = complex.faces_sorted();
    let labels = faces.iter().map(|f| face_label(complex, f)).collect();
    let poset = FinitePoset::from_le_fn(labels, |a, b| is_subset(&faces[a], &faces[b]))
        .expect("inclusion is a partial order");
    FacePoset { poset, faces }
}

/// `{a,b,c}` with the vertex labels listed in id order.
pub fn face_label(complex: &SimplicialComplex, face: &[usize]) -> String {
    let parts: Vec<&str> = face.iter().map(|&v| complex.label(v)).collect();
    format!("{{{}}}", parts.join(","))
}

/// Both slices strictly increasing.
pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}
