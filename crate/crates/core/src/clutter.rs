use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::faceset::{binomial, combinations, FaceSet, MAX_VERTICES};

/// A uniform d-dimensional clutter on ground set {0, .., n-1}: a family of
/// pairwise distinct circuits, each of cardinality d+1.
///
/// Circuits are held sorted in canonical order (lexicographic on sorted vertex
/// lists) and never mutated after construction, so values can be shared freely
/// across workers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    n: u8,
    d: u8,
    circuits: Vec<FaceSet>,
}

impl std::fmt::Debug for Clutter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Clutter(n={}, d={}, {:?})",
            self.n, self.d, self.circuits
        )
    }
}

impl Clutter {
    pub fn new(n: u8, d: u8, mut circuits: Vec<FaceSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capacity(format!(
                "ground set of size {n} exceeds the {MAX_VERTICES}-vertex cap"
            )));
        }
        let full = FaceSet::full(n);
        for &c in &circuits {
            if !c.is_subset_of(full) {
                return Err(Error::input(format!(
                    "circuit {c:?} uses vertices outside the ground set [0, {n})"
                )));
            }
            if c.card() != d as u32 + 1 {
                return Err(Error::input(format!(
                    "circuit {c:?} has cardinality {}, expected d+1 = {}",
                    c.card(),
                    d + 1
                )));
            }
        }
        circuits.sort_unstable();
        circuits.dedup();
        Ok(Clutter { n, d, circuits })
    }

    /// The empty clutter is a valid value for every (n, d).
    pub fn empty(n: u8, d: u8) -> Self {
        Clutter {
            n,
            d,
            circuits: Vec::new(),
        }
    }

    /// All (d+1)-subsets of the ground set.
    pub fn complete(n: u8, d: u8) -> Self {
        Clutter {
            n,
            d,
            circuits: combinations(n, d as u32 + 1).collect(),
        }
    }

    /// Internal constructor for enumeration loops: `circuits` must already be
    /// canonically sorted, deduplicated and uniform.
    pub fn from_sorted_unchecked(n: u8, d: u8, circuits: Vec<FaceSet>) -> Self {
        debug_assert!(circuits.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(circuits.iter().all(|c| c.card() == d as u32 + 1));
        Clutter { n, d, circuits }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn dim(&self) -> u8 {
        self.d
    }

    pub fn circuits(&self) -> &[FaceSet] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, f: FaceSet) -> bool {
        self.circuits.binary_search(&f).is_ok()
    }

    /// Union of all circuits.
    pub fn support(&self) -> FaceSet {
        self.circuits
            .iter()
            .fold(FaceSet::EMPTY, |acc, &c| acc.union(c))
    }

    /// True when every (d+1)-subset of the support is a circuit.
    ///
    /// Completeness is measured on the support, not the ambient ground set:
    /// the complete-clutter clauses of the cycle definitions concern the
    /// clutter's own vertices.
    pub fn is_complete_on_support(&self) -> bool {
        !self.is_empty()
            && self.circuits.len() as u64
                == binomial(self.support().card() as u64, self.d as u64 + 1)
    }

    /// The maximal subcircuits: all d-subsets of circuits, each listed once.
    pub fn maximal_subcircuits(&self) -> Vec<FaceSet> {
        let mut out: Vec<FaceSet> = self.circuits.iter().flat_map(|c| c.drop_one()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn check_ms_cardinality(&self, e: FaceSet) -> Result<()> {
        if e.card() != self.d as u32 {
            return Err(Error::input(format!(
                "{e:?} has cardinality {}, expected d = {}",
                e.card(),
                self.d
            )));
        }
        Ok(())
    }

    /// Number of circuits containing `e`; zero is allowed (such an `e` is not
    /// an MS, but the degree is still meaningful).
    pub fn ms_degree(&self, e: FaceSet) -> Result<usize> {
        self.check_ms_cardinality(e)?;
        Ok(self.degree_unchecked(e))
    }

    #[inline]
    pub(crate) fn degree_unchecked(&self, e: FaceSet) -> usize {
        self.circuits.iter().filter(|c| e.is_subset_of(**c)).count()
    }

    /// N[e] = e together with every vertex extending e to a circuit. Equals
    /// `e` itself when deg(e) = 0.
    pub fn closed_neighborhood(&self, e: FaceSet) -> Result<FaceSet> {
        self.check_ms_cardinality(e)?;
        Ok(self.neighborhood_unchecked(e))
    }

    #[inline]
    pub(crate) fn neighborhood_unchecked(&self, e: FaceSet) -> FaceSet {
        let mut out = e;
        for &c in &self.circuits {
            if e.is_subset_of(c) {
                out = out.union(c);
            }
        }
        out
    }

    /// True when every (d+1)-subset of `a` is a circuit; vacuous for
    /// |a| <= d. Implemented by counting circuits inside `a`.
    pub fn is_clique(&self, a: FaceSet) -> bool {
        let k = self.d as u64 + 1;
        if (a.card() as u64) < k {
            return true;
        }
        let inside = self.circuits.iter().filter(|c| c.is_subset_of(a)).count() as u64;
        inside == binomial(a.card() as u64, k)
    }

    /// C - L: the circuits that do not contain L. Covers MS removal and
    /// vertex removal (singleton L); idempotent; C - ∅ is empty.
    pub fn remove(&self, l: FaceSet) -> Clutter {
        Clutter {
            n: self.n,
            d: self.d,
            circuits: self
                .circuits
                .iter()
                .copied()
                .filter(|c| !l.is_subset_of(*c))
                .collect(),
        }
    }

    pub fn remove_vertex(&self, v: u8) -> Clutter {
        self.remove(FaceSet::singleton(v))
    }

    /// Subclutter induced by a vertex set: circuits contained in `a`.
    pub fn induced_by_vertices(&self, a: FaceSet) -> Clutter {
        Clutter {
            n: self.n,
            d: self.d,
            circuits: self
                .circuits
                .iter()
                .copied()
                .filter(|c| c.is_subset_of(a))
                .collect(),
        }
    }

    /// Subclutter induced by a set of maximal subcircuits: circuits all of
    /// whose d-subsets lie in `ms`.
    pub fn induced_by_ms(&self, ms: &[FaceSet]) -> Result<Clutter> {
        for &e in ms {
            self.check_ms_cardinality(e)?;
        }
        let mut sorted: Vec<FaceSet> = ms.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Ok(Clutter {
            n: self.n,
            d: self.d,
            circuits: self
                .circuits
                .iter()
                .copied()
                .filter(|c| c.drop_one().all(|e| sorted.binary_search(&e).is_ok()))
                .collect(),
        })
    }

    /// The d-complement: all (d+1)-subsets of the ground set not in `self`.
    pub fn complement(&self) -> Clutter {
        Clutter {
            n: self.n,
            d: self.d,
            circuits: combinations(self.n, self.d as u32 + 1)
                .filter(|c| !self.contains(*c))
                .collect(),
        }
    }

    /// The Alexander dual clutter: complements (in the ground set) of the
    /// complement's circuits. Dimension n - d - 2.
    ///
    /// For n = d + 1 with C empty the dual is the single empty set, which is
    /// not representable as a uniform clutter; that corner is an error. Use
    /// `alexander_dual_facets` where the complex form is what is needed.
    pub fn alexander_dual(&self) -> Result<Clutter> {
        if self.n == self.d + 1 && self.is_empty() {
            return Err(Error::input(
                "Alexander dual of the empty (d+1)-vertex clutter is the empty-set family; \
                 use the complex form",
            ));
        }
        let mut circuits = self.alexander_dual_facets();
        circuits.sort_unstable();
        // n = d + 1 only survives here with an empty dual (C complete), where
        // the dimension tag is moot.
        let d = if self.n >= self.d + 2 {
            self.n - self.d - 2
        } else {
            0
        };
        Ok(Clutter {
            n: self.n,
            d,
            circuits,
        })
    }

    /// Facet list of the dual: complements of the complement's circuits, with
    /// no uniformity demand (covers the degenerate corners of
    /// `alexander_dual`).
    pub fn alexander_dual_facets(&self) -> Vec<FaceSet> {
        let full = FaceSet::full(self.n);
        combinations(self.n, self.d as u32 + 1)
            .filter(|c| !self.contains(*c))
            .map(|c| full.minus(c))
            .collect()
    }

    /// The clique complex: all cliques, returned by their facets (the maximal
    /// cliques).
    pub fn clique_complex(&self) -> SimplicialComplex {
        let mut maximal: Vec<FaceSet> = Vec::new();
        let all = FaceSet::full(self.n);
        // Bron-Kerbosch style search over the hereditary clique property:
        // candidates and excluded both hold exactly the vertices extending
        // the current clique.
        fn extends(cl: &Clutter, r: FaceSet, v: u8) -> bool {
            if (r.card() as u64) < cl.d as u64 {
                return true;
            }
            r.k_subsets(cl.d as u32).all(|e| cl.contains(e.insert(v)))
        }
        fn grow(cl: &Clutter, r: FaceSet, p: FaceSet, x: FaceSet, out: &mut Vec<FaceSet>) {
            if p.is_empty() && x.is_empty() {
                out.push(r);
                return;
            }
            let mut p = p;
            let mut x = x;
            while let Some(v) = p.min_vertex() {
                let rv = r.insert(v);
                let mut p2 = FaceSet::EMPTY;
                let mut x2 = FaceSet::EMPTY;
                for u in p.remove(v).iter() {
                    if extends(cl, rv, u) {
                        p2 = p2.insert(u);
                    }
                }
                for u in x.iter() {
                    if extends(cl, rv, u) {
                        x2 = x2.insert(u);
                    }
                }
                grow(cl, rv, p2, x2, out);
                p = p.remove(v);
                x = x.insert(v);
            }
        }
        let p = if self.d == 0 {
            // only supported vertices are cliques when d = 0
            self.support()
        } else {
            all
        };
        grow(self, FaceSet::EMPTY, p, FaceSet::EMPTY, &mut maximal);
        SimplicialComplex::from_facets(self.n, maximal)
    }

    /// Strong components: equivalence classes of circuits under the
    /// transitive closure of "share a maximal subcircuit". Returned as groups
    /// of circuit indices, ordered by least member.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        let m = self.circuits.len();
        let mut comp: Vec<usize> = (0..m).collect();
        fn find(comp: &mut [usize], i: usize) -> usize {
            let mut root = i;
            while comp[root] != root {
                root = comp[root];
            }
            let mut cur = i;
            while comp[cur] != root {
                let next = comp[cur];
                comp[cur] = root;
                cur = next;
            }
            root
        }
        for i in 0..m {
            for j in i + 1..m {
                // two distinct circuits share an MS iff their intersection
                // has exactly d vertices
                if self.circuits[i].intersect(self.circuits[j]).card() == self.d as u32 {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    if a != b {
                        comp[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; m];
        for i in 0..m {
            let r = find(&mut comp, i);
            match root_of[r] {
                Some(g) => groups[g].push(i),
                None => {
                    root_of[r] = Some(groups.len());
                    groups.push(vec![i]);
                }
            }
        }
        groups
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strong_components().len() <= 1
    }

    /// Subclutter from circuit indices (used by component decompositions).
    pub fn subclutter(&self, idx: &[usize]) -> Clutter {
        Clutter {
            n: self.n,
            d: self.d,
            circuits: idx.iter().map(|&i| self.circuits[i]).collect(),
        }
    }

    /// The complex ⟨C⟩ whose facets are the circuits; void when C is empty.
    pub fn facet_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.n, self.circuits.clone())
    }

    pub fn relabel(&self, perm: &[u8]) -> Clutter {
        let mut circuits: Vec<FaceSet> = self.circuits.iter().map(|c| c.relabel(perm)).collect();
        circuits.sort_unstable();
        Clutter {
            n: self.n,
            d: self.d,
            circuits,
        }
    }
}
