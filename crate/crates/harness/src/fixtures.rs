//! The named example clutters used throughout the regression battery. All
//! are on 0-based internal vertices; the doc comments give the 1-based
//! labels noted in the doc comments where they differ.

use clutters::{Clutter, FaceSet};

fn clutter(n: u8, d: u8, circuits: &[&[u8]]) -> Clutter {
    Clutter::new(
        n,
        d,
        circuits
            .iter()
            .map(|c| FaceSet::from_vertices(c.iter().copied()))
            .collect(),
    )
    .expect("fixtures are well-formed")
}

/// {145, 245, 345} on five vertices (1-based labels).
pub fn pm_example() -> Clutter {
    clutter(5, 2, &[&[0, 3, 4], &[1, 3, 4], &[2, 3, 4]])
}

/// All 3-subsets of {0,..,5} except 012 and 345 (0-based labels).
pub fn example_c3_not_c2() -> Clutter {
    let missing = [
        FaceSet::from_vertices([0, 1, 2]),
        FaceSet::from_vertices([3, 4, 5]),
    ];
    let circuits = clutters::combinations(6, 3)
        .filter(|c| !missing.contains(c))
        .collect();
    Clutter::new(6, 2, circuits).expect("well-formed")
}

/// The octahedron boundary: poles 1, 2 over the equator 3-4-5-6 (1-based).
pub fn octahedron() -> Clutter {
    clutter(
        6,
        2,
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
    )
}

/// Octahedron with the equatorial triangle 345 (1-based) filled in.
pub fn octahedron_plus_triangle() -> Clutter {
    let mut circuits = octahedron().circuits().to_vec();
    circuits.push(FaceSet::from_vertices([2, 3, 4]));
    Clutter::new(6, 2, circuits).expect("well-formed")
}

/// Octahedron with all four triangles through the edge 35 (1-based) added:
/// {135, 235, 435, 635}.
pub fn octahedron_plus_edge_star() -> Clutter {
    let mut circuits = octahedron().circuits().to_vec();
    for extra in [&[0, 2, 4][..], &[1, 2, 4], &[2, 3, 4], &[2, 4, 5]] {
        circuits.push(FaceSet::from_vertices(extra.iter().copied()));
    }
    Clutter::new(6, 2, circuits).expect("well-formed")
}

/// The boundary of the tetrahedron: the complete 2-clutter on four vertices.
pub fn tetrahedron_boundary() -> Clutter {
    Clutter::complete(4, 2)
}

/// The standard 6-vertex triangulation of the real projective plane
/// (1-based: 123 124 135 146 156 236 245 256 345 346). Every one of the 15
/// edges lies in exactly two triangles, and the ten non-faces are exactly
/// the complements of the ten faces.
pub fn rp2() -> Clutter {
    clutter(
        6,
        2,
        &[
            &[0, 1, 2],
            &[0, 1, 3],
            &[0, 2, 4],
            &[0, 3, 5],
            &[0, 4, 5],
            &[1, 2, 5],
            &[1, 3, 4],
            &[1, 4, 5],
            &[2, 3, 4],
            &[2, 3, 5],
        ],
    )
}

/// RP² with one extra triangle glued on: 456 (1-based), a non-face whose
/// three edges all lie in the triangulation. All non-faces are equivalent
/// under the automorphism group, so the choice is immaterial.
pub fn rp2_plus_triangle() -> Clutter {
    let mut circuits = rp2().circuits().to_vec();
    circuits.push(FaceSet::from_vertices([3, 4, 5]));
    Clutter::new(6, 2, circuits).expect("well-formed")
}

/// A 9-vertex, 19-triangle triangulation of the mod-3 Moore space: the disk
/// over a 9-gon glued 3:1 onto the triangle with vertices 1, 2, 3 (1-based).
/// Circle edges have degree 3, all other edges degree 2.
pub fn moore_space() -> Clutter {
    clutter(
        9,
        2,
        &[
            &[0, 1, 3],
            &[1, 3, 4],
            &[1, 2, 4],
            &[0, 2, 4],
            &[0, 4, 5],
            &[0, 1, 5],
            &[1, 5, 6],
            &[1, 2, 6],
            &[0, 2, 6],
            &[0, 6, 7],
            &[0, 1, 7],
            &[1, 7, 8],
            &[1, 2, 8],
            &[0, 2, 8],
            &[0, 8, 3],
            &[3, 4, 5],
            &[3, 5, 6],
            &[3, 6, 7],
            &[3, 7, 8],
        ],
    )
}

/// The Moore-space triangulation with its singular circle 123 (1-based)
/// filled in; every edge degree becomes even.
pub fn moore_space_plus_circle() -> Clutter {
    let mut circuits = moore_space().circuits().to_vec();
    circuits.push(FaceSet::from_vertices([0, 1, 2]));
    Clutter::new(9, 2, circuits).expect("well-formed")
}
