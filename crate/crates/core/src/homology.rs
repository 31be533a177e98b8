use std::collections::HashMap;

use crate::clutter::Clutter;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::faceset::FaceSet;
use crate::gf2::GF2Matrix;

/// The augmented chain complex of a simplicial complex over GF(2): per-
/// dimension face lists plus the boundary matrices ∂_i (i = 0 maps vertices
/// to the augmentation row for ∅).
pub struct ChainComplexZ2 {
    /// faces[i] holds the (i)-dimensional faces, i from 0 to dim.
    pub faces: Vec<Vec<FaceSet>>,
    /// boundaries[i] = ∂_i : C_i -> C_{i-1}; boundaries[0] is the
    /// augmentation map (one row).
    pub boundaries: Vec<GF2Matrix>,
}

impl ChainComplexZ2 {
    /// Build from a complex. The void complex is rejected; the irrelevant
    /// complex yields an empty chain (no faces above the augmentation).
    pub fn new(complex: &SimplicialComplex) -> Result<Self> {
        if complex.is_void() {
            return Err(Error::input("the void complex has no chain complex"));
        }
        let dim = complex.dim().expect("nonvoid");
        let mut faces: Vec<Vec<FaceSet>> = Vec::new();
        for i in 0..=dim {
            faces.push(complex.faces_of_dim(i));
        }
        let mut boundaries: Vec<GF2Matrix> = Vec::new();
        for i in 0..=dim {
            let cols = &faces[i as usize];
            let rows_count = if i == 0 {
                1
            } else {
                faces[i as usize - 1].len()
            };
            let mut m = GF2Matrix::zero(rows_count, cols.len());
            if i == 0 {
                for c in 0..cols.len() {
                    m.set(0, c, true);
                }
            } else {
                let index: HashMap<FaceSet, usize> = faces[i as usize - 1]
                    .iter()
                    .enumerate()
                    .map(|(k, &f)| (f, k))
                    .collect();
                for (c, &f) in cols.iter().enumerate() {
                    for sub in f.drop_one() {
                        m.set(index[&sub], c, true);
                    }
                }
            }
            boundaries.push(m);
        }
        let cc = ChainComplexZ2 { faces, boundaries };
        // ∂_i ∘ ∂_{i+1} = 0: over GF(2) every (i-1)-face of an (i+1)-face is
        // covered by exactly two i-faces.
        for i in 0..cc.boundaries.len().saturating_sub(1) {
            let a = &cc.boundaries[i];
            let b = &cc.boundaries[i + 1];
            for col in 0..b.cols() {
                for row in 0..a.rows() {
                    let mut acc = false;
                    for mid in 0..b.rows() {
                        acc ^= b.get(mid, col) && a.get(row, mid);
                    }
                    assert!(!acc, "boundary of boundary is nonzero");
                }
            }
        }
        Ok(cc)
    }

    pub fn dim(&self) -> i32 {
        self.faces.len() as i32 - 1
    }
}

/// Reduced GF(2) Betti numbers of a nonvoid complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyRanks {
    /// beta~_{-1}: 1 for the irrelevant complex, 0 as soon as a vertex exists.
    pub minus_one: usize,
    /// beta~_i for i = 0..=dim.
    pub ranks: Vec<usize>,
}

impl HomologyRanks {
    pub fn betti(&self, i: i32) -> usize {
        if i == -1 {
            self.minus_one
        } else {
            self.ranks.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn all_zero_below(&self, top: i32) -> bool {
        (-1..top).all(|i| self.betti(i) == 0)
    }
}

/// beta~_i = nullity(∂_i) - rank(∂_{i+1}), with the augmentation handling
/// beta~_{-1} and beta~_0.
pub fn reduced_homology_ranks(complex: &SimplicialComplex) -> Result<HomologyRanks> {
    let cc = ChainComplexZ2::new(complex)?;
    let dim = cc.dim();
    let rank: Vec<usize> = cc.boundaries.iter().map(|m| m.rank()).collect();
    let minus_one = 1 - rank.first().copied().unwrap_or(0);
    let mut ranks = Vec::new();
    for i in 0..=dim {
        let i = i as usize;
        let nullity = cc.faces[i].len() - rank[i];
        let next_rank = rank.get(i + 1).copied().unwrap_or(0);
        ranks.push(nullity - next_rank);
    }
    Ok(HomologyRanks { minus_one, ranks })
}

/// The boundary matrix ∂_i of a complex, rows indexed by (i-1)-faces and
/// columns by i-faces; i = 0 gives the augmentation row.
pub fn boundary_matrix(complex: &SimplicialComplex, i: i32) -> Result<GF2Matrix> {
    let cc = ChainComplexZ2::new(complex)?;
    if i < 0 || i > cc.dim() {
        return Err(Error::input(format!(
            "boundary index {i} out of range 0..={}",
            cc.dim()
        )));
    }
    Ok(cc.boundaries[i as usize].clone())
}

/// Reisner's criterion over GF(2): Cohen-Macaulay iff every link (including
/// the link of ∅) has vanishing reduced homology below its dimension.
///
/// The complexes this library feeds here are equidimensional, so an impure
/// complex is immediately not Cohen-Macaulay by convention.
pub fn is_cohen_macaulay_z2(complex: &SimplicialComplex) -> bool {
    if complex.is_void() {
        return false;
    }
    if !complex.is_pure() {
        return false;
    }
    let dim = complex.dim().expect("nonvoid");
    // every face, dimension -1 (the empty face) upward
    for i in -1..=dim {
        for f in complex.faces_of_dim(i) {
            let link = complex.link(f).expect("face of the complex");
            let d_f = dim - (i + 1);
            if d_f <= -1 {
                continue;
            }
            let ranks = reduced_homology_ranks(&link).expect("links of faces are nonvoid");
            if !ranks.all_zero_below(d_f) {
                return false;
            }
        }
    }
    true
}

/// Eagon-Reiner through the Alexander dual: I(complement of C) has a linear
/// resolution over GF(2) iff the dual complex is GF(2) Cohen-Macaulay. A
/// complete clutter has zero complement ideal, which counts as linear.
pub fn has_linear_resolution_z2(clutter: &Clutter) -> bool {
    let dual_facets = clutter.alexander_dual_facets();
    if dual_facets.is_empty() {
        return true;
    }
    let dual = SimplicialComplex::from_facets(clutter.n(), dual_facets);
    is_cohen_macaulay_z2(&dual)
}

/// Is the given k-cycle (a family of k-dimensional faces of the complex) the
/// GF(2) boundary of a family of facets? Solves ∂(x) = Σ cycle where x runs
/// over the facets of dimension k+1; a complex with no such facets bounds
/// nothing.
pub fn is_boundary_of_facets(complex: &SimplicialComplex, cycle: &[FaceSet]) -> Result<bool> {
    let Some(&first) = cycle.first() else {
        return Ok(true);
    };
    let k_card = first.card();
    for f in cycle {
        if f.card() != k_card {
            return Err(Error::input(
                "cycle faces must share one dimension".to_string(),
            ));
        }
        if !complex.is_face(*f) {
            return Err(Error::input(format!(
                "cycle face {f:?} is not a face of the complex"
            )));
        }
    }
    let rows = complex.faces_of_dim(k_card as i32 - 1);
    let cols: Vec<FaceSet> = complex
        .facets()
        .iter()
        .copied()
        .filter(|f| f.card() == k_card + 1)
        .collect();
    let mut m = GF2Matrix::zero(rows.len(), cols.len());
    for (c, &facet) in cols.iter().enumerate() {
        for sub in facet.drop_one() {
            if let Ok(r) = rows.binary_search(&sub) {
                m.set(r, c, true);
            }
        }
    }
    let mut b = vec![false; rows.len()];
    for f in cycle {
        let r = rows.binary_search(f).expect("checked face membership");
        b[r] = true;
    }
    Ok(m.solve(&b).is_some())
}

/// Vertex decomposability of a pure complex, with a witness shedding
/// sequence: each listed vertex is a shedding vertex of the complex obtained
/// by deleting the previous ones, down to a plain simplex.
///
/// Simplexes on at least one vertex are vertex decomposable. The void and
/// irrelevant complexes are not: a 0-dimensional complex is vertex
/// decomposable exactly when it is a single point, which forces the link of
/// a shedding vertex to be more than the bare empty face.
pub fn is_vertex_decomposable(complex: &SimplicialComplex) -> Result<(bool, Option<Vec<u8>>)> {
    if !complex.is_pure() {
        return Err(Error::input(
            "vertex decomposability is defined here for pure complexes",
        ));
    }
    let mut memo: HashMap<Vec<FaceSet>, bool> = HashMap::new();
    let ok = vdec_inner(complex, &mut memo);
    if !ok {
        return Ok((false, None));
    }
    // reconstruct a shedding sequence along the deletion chain
    let mut sequence = Vec::new();
    let mut cur = complex.clone();
    'outer: while !(cur.is_simplex() && cur.dim().is_some_and(|d| d >= 0)) {
        for v in cur.vertex_set().iter() {
            if is_shedding_vertex(&cur, v, &mut memo) {
                sequence.push(v);
                cur = cur.delete_vertex(v);
                continue 'outer;
            }
        }
        unreachable!("vertex decomposable complex without a shedding vertex");
    }
    Ok((true, Some(sequence)))
}

fn canonical_facets(complex: &SimplicialComplex) -> Vec<FaceSet> {
    canonical_facet_list(complex.facets())
}

/// Is v a shedding vertex: link and deletion both pure and vertex
/// decomposable.
pub fn is_shedding_vertex_of(complex: &SimplicialComplex, v: u8) -> bool {
    let mut memo = HashMap::new();
    is_shedding_vertex(complex, v, &mut memo)
}

fn is_shedding_vertex(
    complex: &SimplicialComplex,
    v: u8,
    memo: &mut HashMap<Vec<FaceSet>, bool>,
) -> bool {
    let link = match complex.link(FaceSet::singleton(v)) {
        Ok(l) => l,
        Err(_) => return false,
    };
    let deletion = complex.delete_vertex(v);
    link.is_pure() && deletion.is_pure() && vdec_inner(&link, memo) && vdec_inner(&deletion, memo)
}

fn vdec_inner(complex: &SimplicialComplex, memo: &mut HashMap<Vec<FaceSet>, bool>) -> bool {
    let verts = complex.vertex_set();
    if verts.is_empty() {
        // the void complex and the bare empty face
        return false;
    }
    if complex.is_simplex() {
        return true;
    }
    if !complex.is_pure() {
        return false;
    }
    let key = canonical_facets(complex);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut ok = false;
    for v in verts.iter() {
        if is_shedding_vertex(complex, v, memo) {
            ok = true;
            break;
        }
    }
    memo.insert(key, ok);
    ok
}

/// Lexicographically minimal facet list over permutations of the supporting
/// vertices (brute force; memo keys only). Supports of more than 8 vertices
/// fall back to the support-compressed list itself.
pub fn canonical_facet_list(facets: &[FaceSet]) -> Vec<FaceSet> {
    let support: Vec<u8> = facets
        .iter()
        .fold(FaceSet::EMPTY, |acc, &f| acc.union(f))
        .to_vec();
    let k = support.len();
    // compress to 0..k-1
    let mut compress = [0u8; 64];
    for (i, &v) in support.iter().enumerate() {
        compress[v as usize] = i as u8;
    }
    let mut base: Vec<FaceSet> = facets
        .iter()
        .map(|f| FaceSet::from_vertices(f.iter().map(|v| compress[v as usize])))
        .collect();
    base.sort_unstable();
    if k > 8 {
        return base;
    }
    let mut best = base.clone();
    let mut perm: Vec<u8> = (0..k as u8).collect();
    // Heap's algorithm
    let mut c = vec![0usize; k];
    let apply = |perm: &[u8], best: &mut Vec<FaceSet>, base: &[FaceSet]| {
        let mut relabeled: Vec<FaceSet> = base.iter().map(|f| f.relabel(perm)).collect();
        relabeled.sort_unstable();
        if relabeled < *best {
            *best = relabeled;
        }
    };
    apply(&perm, &mut best, &base);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            apply(&perm, &mut best, &base);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(vs: &[u8]) -> FaceSet {
        FaceSet::from_vertices(vs.iter().copied())
    }

    fn complex(n: u8, facets: &[&[u8]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| fs(f)).collect())
    }

    #[test]
    fn boundary_matrix_examples() {
        let tri = complex(3, &[&[0, 1, 2]]);
        let m = boundary_matrix(&tri, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 1));
        assert_eq!(m.rank(), 1);

        let hollow = complex(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let m = boundary_matrix(&hollow, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(m.rank(), 2);

        assert!(boundary_matrix(&hollow, 2).is_err());
    }

    #[test]
    fn homology_of_standard_spaces() {
        // 4-cycle: a circle
        let circle = complex(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let h = reduced_homology_ranks(&circle).unwrap();
        assert_eq!((h.minus_one, h.ranks), (0, vec![0, 1]));

        // two disjoint edges
        let two = complex(4, &[&[0, 1], &[2, 3]]);
        let h = reduced_homology_ranks(&two).unwrap();
        assert_eq!((h.minus_one, h.ranks), (0, vec![1, 0]));

        // full simplex: contractible
        let h = reduced_homology_ranks(&SimplicialComplex::simplex(3)).unwrap();
        assert_eq!((h.minus_one, h.ranks), (0, vec![0, 0, 0]));

        // irrelevant complex
        let h = reduced_homology_ranks(&SimplicialComplex::irrelevant(3)).unwrap();
        assert_eq!(h.minus_one, 1);
        assert!(reduced_homology_ranks(&SimplicialComplex::void(3)).is_err());

        // octahedron sphere: beta~_2 = 1
        let oct = complex(
            6,
            &[
                &[0, 2, 3],
                &[1, 2, 3],
                &[0, 3, 4],
                &[1, 3, 4],
                &[0, 4, 5],
                &[1, 4, 5],
                &[0, 2, 5],
                &[1, 2, 5],
            ],
        );
        let h = reduced_homology_ranks(&oct).unwrap();
        assert_eq!((h.minus_one, h.ranks), (0, vec![0, 0, 1]));
    }

    #[test]
    fn cohen_macaulay_examples() {
        let hollow = complex(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        assert!(is_cohen_macaulay_z2(&hollow));
        let two = complex(4, &[&[0, 1], &[2, 3]]);
        assert!(!is_cohen_macaulay_z2(&two));
        assert!(is_cohen_macaulay_z2(&SimplicialComplex::simplex(4)));
        // impure: immediately false
        let impure = complex(4, &[&[0, 1, 2], &[0, 3]]);
        assert!(!is_cohen_macaulay_z2(&impure));
        // 0-dimensional complexes are CM
        assert!(is_cohen_macaulay_z2(&complex(3, &[&[0], &[2]])));
    }

    #[test]
    fn boundary_of_facets_examples() {
        let tri = complex(3, &[&[0, 1, 2]]);
        let cycle = [fs(&[0, 1]), fs(&[0, 2]), fs(&[1, 2])];
        assert!(is_boundary_of_facets(&tri, &cycle).unwrap());

        // the hollow triangle has no 2-faces, so the edge cycle bounds nothing
        let hollow = complex(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        assert!(!is_boundary_of_facets(&hollow, &cycle).unwrap());
        // but the vertex pair {0},{1} is the boundary of the edge 01
        assert!(is_boundary_of_facets(&hollow, &[fs(&[0]), fs(&[1])]).unwrap());

        let oct = complex(
            6,
            &[
                &[0, 2, 3],
                &[1, 2, 3],
                &[0, 3, 4],
                &[1, 3, 4],
                &[0, 4, 5],
                &[1, 4, 5],
                &[0, 2, 5],
                &[1, 2, 5],
            ],
        );
        // link of pole 0: the equator 4-cycle bounds via the four facets at pole 1
        let equator = [fs(&[2, 3]), fs(&[3, 4]), fs(&[4, 5]), fs(&[2, 5])];
        assert!(is_boundary_of_facets(&oct, &equator).unwrap());
        // mixed dimensions and non-faces are input errors
        assert!(is_boundary_of_facets(&oct, &[fs(&[2]), fs(&[3, 4])]).is_err());
        assert!(is_boundary_of_facets(&oct, &[fs(&[0, 1])]).is_err());
    }

    #[test]
    fn vertex_decomposable_examples() {
        // path: shedding vertices are the free ends
        let path = complex(3, &[&[0, 1], &[1, 2]]);
        let (ok, seq) = is_vertex_decomposable(&path).unwrap();
        assert!(ok);
        let seq = seq.unwrap();
        assert!(seq.first() == Some(&0) || seq.first() == Some(&2));

        // 4-cycle: not vertex decomposable
        let circle = complex(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert!(!is_vertex_decomposable(&circle).unwrap().0);

        // any simplex (with a vertex) is
        assert!(
            is_vertex_decomposable(&SimplicialComplex::simplex(4))
                .unwrap()
                .0
        );

        // two points are not (0-dimensional vertex decomposable = one point)
        assert!(
            !is_vertex_decomposable(&complex(2, &[&[0], &[1]]))
                .unwrap()
                .0
        );
        // hollow triangle is a graph cycle, hence not
        assert!(
            !is_vertex_decomposable(&complex(3, &[&[0, 1], &[0, 2], &[1, 2]]))
                .unwrap()
                .0
        );

        // impure input is an error
        assert!(is_vertex_decomposable(&complex(4, &[&[0, 1, 2], &[0, 3]])).is_err());
    }

    #[test]
    fn canonical_facet_list_is_permutation_invariant() {
        let a = complex(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let b = complex(4, &[&[3, 2], &[2, 0], &[0, 1]]); // relabeled path
        assert_eq!(
            canonical_facet_list(a.facets()),
            canonical_facet_list(b.facets())
        );
    }
}
