use crate::error::{Error, Result};
use crate::faceset::FaceSet;

/// A simplicial complex given by its facet antichain.
///
/// The void complex (no facets) and the irrelevant complex (the single facet
/// ∅) are distinct values; the distinction matters for reduced homology.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: u8,
    facets: Vec<FaceSet>,
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Complex(n={}, facets={:?})", self.n, self.facets)
    }
}

impl SimplicialComplex {
    /// Build from a facet list; contained faces are dropped so the stored
    /// list is the antichain of maximal faces, canonically sorted.
    pub fn from_facets(n: u8, mut facets: Vec<FaceSet>) -> Self {
        facets.sort_unstable_by_key(|f| std::cmp::Reverse(f.card()));
        let mut maximal: Vec<FaceSet> = Vec::with_capacity(facets.len());
        for f in facets {
            if !maximal.iter().any(|m| f.is_subset_of(*m)) {
                maximal.push(f);
            }
        }
        maximal.sort_unstable();
        SimplicialComplex { n, facets: maximal }
    }

    pub fn void(n: u8) -> Self {
        SimplicialComplex { n, facets: vec![] }
    }

    pub fn irrelevant(n: u8) -> Self {
        SimplicialComplex {
            n,
            facets: vec![FaceSet::EMPTY],
        }
    }

    /// The full simplex on {0,..,n-1}.
    pub fn simplex(n: u8) -> Self {
        SimplicialComplex {
            n,
            facets: vec![FaceSet::full(n)],
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn facets(&self) -> &[FaceSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// None for the void complex; -1 for the irrelevant complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.card() as i32 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => {
                let k = f.card();
                self.facets.iter().all(|g| g.card() == k)
            }
        }
    }

    pub fn is_face(&self, f: FaceSet) -> bool {
        self.facets.iter().any(|m| f.is_subset_of(*m))
    }

    /// Vertices that occur in some facet.
    pub fn vertex_set(&self) -> FaceSet {
        self.facets
            .iter()
            .fold(FaceSet::EMPTY, |acc, &f| acc.union(f))
    }

    /// All faces of the given dimension (size i+1), sorted canonically.
    pub fn faces_of_dim(&self, i: i32) -> Vec<FaceSet> {
        if i < -1 {
            return vec![];
        }
        if i == -1 {
            return if self.is_void() {
                vec![]
            } else {
                vec![FaceSet::EMPTY]
            };
        }
        let k = (i + 1) as u32;
        let mut out: Vec<FaceSet> = Vec::new();
        for &f in &self.facets {
            if f.card() >= k {
                out.extend(f.k_subsets(k));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Inclusion-minimal subsets of the ground set that are not faces,
    /// found by a cardinality sweep.
    pub fn minimal_nonfaces(&self) -> Vec<FaceSet> {
        let mut out: Vec<FaceSet> = Vec::new();
        for k in 0..=self.n as u32 {
            'cand: for s in FaceSet::full(self.n).k_subsets(k) {
                if self.is_face(s) {
                    continue;
                }
                for smaller in s.drop_one() {
                    // a subset already not a face means s is not minimal
                    if !self.is_face(smaller) {
                        continue 'cand;
                    }
                }
                // note: for k = 0 the loop above is empty, so a non-face ∅
                // (void complex) is itself minimal
                out.push(s);
            }
        }
        out.sort_unstable();
        out
    }

    /// link_Δ F = { G \ F : F ⊆ G ∈ Δ }, as a facet antichain.
    pub fn link(&self, f: FaceSet) -> Result<SimplicialComplex> {
        if !self.is_face(f) {
            return Err(Error::input(format!("{f:?} is not a face of the complex")));
        }
        let facets = self
            .facets
            .iter()
            .filter(|m| f.is_subset_of(**m))
            .map(|m| m.minus(f))
            .collect();
        Ok(SimplicialComplex::from_facets(self.n, facets))
    }

    /// Δ|_L = { G ∈ Δ : G ⊆ L }.
    pub fn restrict(&self, l: FaceSet) -> SimplicialComplex {
        let facets = self.facets.iter().map(|m| m.intersect(l)).collect();
        SimplicialComplex::from_facets(self.n, facets)
    }

    /// Δ \ v: faces avoiding the vertex v.
    pub fn delete_vertex(&self, v: u8) -> SimplicialComplex {
        self.restrict(FaceSet::full(self.n).remove(v))
    }

    /// Alexander dual Δ^∨ = { complement of F : F not a face }, as facets.
    /// Exponential in n; intended for the desk-scale cross-checks.
    pub fn alexander_dual_brute(&self) -> SimplicialComplex {
        let full = FaceSet::full(self.n);
        let mut facets = Vec::new();
        for bits in 0..(1u64 << self.n) {
            let s = FaceSet::from_bits(bits);
            if !self.is_face(s) {
                facets.push(full.minus(s));
            }
        }
        SimplicialComplex::from_facets(self.n, facets)
    }

    pub fn relabel(&self, perm: &[u8]) -> SimplicialComplex {
        let mut facets: Vec<FaceSet> = self.facets.iter().map(|f| f.relabel(perm)).collect();
        facets.sort_unstable();
        SimplicialComplex { n: self.n, facets }
    }
}
