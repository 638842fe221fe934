//! Simple undirected graphs and their clique complexes.

use std::collections::HashSet;

use crate::complex::{ComplexError, SimplicialComplex};

/// An undirected loop-free graph on labelled nodes `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexGraph {
    labels: Vec<String>,
    // sorted neighbour lists
    adjacency: Vec<Vec<usize>>,
}

impl VertexGraph {
    pub fn new<L: ToString>(labels: impl IntoIterator<Item = L>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(|l| l.to_string()).collect();
        let adjacency = vec![Vec::new(); labels.len()];
        Self { labels, adjacency }
    }

    pub fn from_edges<L: ToString>(
        labels: impl IntoIterator<Item = L>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ComplexError> {
        let mut graph = Self::new(labels);
        for (u, v) in edges {
            graph.add_edge(u, v)?;
        }
        Ok(graph)
    }

    /// Adds the edge `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), ComplexError> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(ComplexError::UnknownVertex(u.max(v)));
        }
        if u == v {
            return Err(ComplexError::Loop(u));
        }
        for (a, b) in [(u, v), (v, u)] {
            if let Err(pos) = self.adjacency[a].binary_search(&b) {
                self.adjacency[a].insert(pos, b);
            }
        }
        Ok(())
    }

    pub fn num_nodes(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    /// All maximal cliques, each sorted, in lexicographic order.
    ///
    /// Bron–Kerbosch with Tomita pivoting. No size cap is applied.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        let candidates: Vec<usize> = (0..self.num_nodes()).collect();
        self.expand(&mut current, candidates, Vec::new(), &mut out);
        for clique in &mut out {
            clique.sort_unstable();
        }
        out.sort();
        out
    }

    fn expand(
        &self,
        current: &mut Vec<usize>,
        mut candidates: Vec<usize>,
        mut excluded: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if candidates.is_empty() {
            if excluded.is_empty() && !current.is_empty() {
                out.push(current.clone());
            }
            return;
        }
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .copied()
            .max_by_key(|&u| intersect(&candidates, &self.adjacency[u]).len())
            .expect("nonempty candidate set");
        let branch: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|v| !self.has_edge(pivot, *v))
            .collect();
        for v in branch {
            let ns = &self.adjacency[v];
            current.push(v);
            self.expand(current, intersect(&candidates, ns), intersect(&excluded, ns), out);
            current.pop();
            candidates.retain(|&c| c != v);
            let pos = excluded.binary_search(&v).unwrap_or_else(|p| p);
            excluded.insert(pos, v);
        }
    }

    /// The flag complex whose faces are the nonempty cliques of this graph.
    pub fn clique_complex(&self) -> SimplicialComplex {
        let facets = self.maximal_cliques();
        // isolated nodes are maximal cliques of size one, so every node is a vertex
        SimplicialComplex::from_id_facets(self.labels.clone(), facets)
    }

    /// Nonempty cliques, collected without going through maximal cliques.
    /// Used only as an independent check of [`Self::clique_complex`].
    pub fn all_cliques_naive(&self) -> HashSet<Vec<usize>> {
        let mut out = HashSet::new();
        let mut stack: Vec<Vec<usize>> = (0..self.num_nodes()).map(|v| vec![v]).collect();
        while let Some(clique) = stack.pop() {
            let last = *clique.last().unwrap();
            for &w in self.adjacency[last].iter().filter(|&&w| w > last) {
                if clique.iter().all(|&u| self.has_edge(u, w)) {
                    let mut next = clique.clone();
                    next.push(w);
                    stack.push(next);
                }
            }
            out.insert(clique);
        }
        out
    }
}

pub(crate) fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
