use std::collections::HashSet;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::faceset::FaceSet;
use crate::homology::canonical_facet_list;

/// Cap on the support size for the W-chordality minor search.
pub const W_CHORDAL_VERTEX_CAP: u32 = 8;

/// A clutter with edges of arbitrary sizes: an antichain of incomparable
/// subsets of the ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NonUniformClutter {
    n: u8,
    edges: Vec<FaceSet>,
}

impl NonUniformClutter {
    /// Build from an edge list; edges containing other edges are dropped so
    /// the stored list is an antichain, canonically sorted.
    pub fn new(n: u8, mut edges: Vec<FaceSet>) -> Self {
        edges.sort_unstable_by_key(|f| f.card());
        let mut minimal: Vec<FaceSet> = Vec::with_capacity(edges.len());
        for e in edges {
            if !minimal.iter().any(|m| m.is_subset_of(e)) {
                minimal.push(e);
            }
        }
        minimal.sort_unstable();
        NonUniformClutter { n, edges: minimal }
    }

    pub fn from_clutter(clutter: &Clutter) -> Self {
        NonUniformClutter {
            n: clutter.n(),
            edges: clutter.circuits().to_vec(),
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn edges(&self) -> &[FaceSet] {
        &self.edges
    }

    pub fn support(&self) -> FaceSet {
        self.edges
            .iter()
            .fold(FaceSet::EMPTY, |acc, &e| acc.union(e))
    }

    /// Vertex deletion D - v: the edges that avoid v.
    pub fn deletion(&self, v: u8) -> NonUniformClutter {
        NonUniformClutter {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !e.contains(v))
                .collect(),
        }
    }

    /// Contraction D / v: the minimal elements of { F \ {v} : F in D }.
    pub fn contraction(&self, v: u8) -> NonUniformClutter {
        NonUniformClutter::new(self.n, self.edges.iter().map(|e| e.remove(v)).collect())
    }

    /// Is v simplicial: for every two distinct edges F1, F2 containing v
    /// there is an edge inside (F1 ∪ F2) \ {v}.
    pub fn is_simplicial_vertex(&self, v: u8) -> bool {
        let with_v: Vec<FaceSet> = self
            .edges
            .iter()
            .copied()
            .filter(|e| e.contains(v))
            .collect();
        for (i, &f1) in with_v.iter().enumerate() {
            for &f2 in &with_v[i + 1..] {
                let target = f1.union(f2).remove(v);
                if !self.edges.iter().any(|e| e.is_subset_of(target)) {
                    return false;
                }
            }
        }
        true
    }

    /// The simplicial vertices among the supported ones.
    pub fn simplicial_vertex_set(&self) -> Vec<u8> {
        self.support()
            .iter()
            .filter(|&v| self.is_simplicial_vertex(v))
            .collect()
    }

    /// Minors with no nonempty edge carry no vertices and are vacuously fine.
    fn needs_simplicial_vertex(&self) -> bool {
        self.edges.iter().any(|e| !e.is_empty())
    }
}

/// Woodroofe chordality: every clutter reachable by vertex deletions and
/// contractions contains a simplicial vertex. Minors whose edges are all
/// empty are exempt (they have no vertices; anything else would make the
/// property void, since the empty minor is always reachable).
///
/// Returns the failing minor on a negative answer.
pub fn is_w_chordal(clutter: &NonUniformClutter) -> Result<(bool, Option<NonUniformClutter>)> {
    if clutter.support().card() > W_CHORDAL_VERTEX_CAP {
        return Err(Error::capacity(format!(
            "W-chordality minor search capped at {W_CHORDAL_VERTEX_CAP} supported vertices, got {}",
            clutter.support().card()
        )));
    }
    // memo on canonical form: isomorphic minors share one entry
    let mut seen: HashSet<Vec<FaceSet>> = HashSet::new();
    let mut stack: Vec<NonUniformClutter> = vec![clutter.clone()];
    while let Some(cur) = stack.pop() {
        if !seen.insert(canonical_facet_list(&cur.edges)) {
            continue;
        }
        if cur.needs_simplicial_vertex() && cur.simplicial_vertex_set().is_empty() {
            return Ok((false, Some(cur)));
        }
        for v in cur.support().iter() {
            stack.push(cur.deletion(v));
            stack.push(cur.contraction(v));
        }
    }
    Ok((true, None))
}
