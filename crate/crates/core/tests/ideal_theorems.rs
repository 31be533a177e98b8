//! Algebraic-predicate theorems swept over small clutters: linear quotients
//! under SMS deletion, the squarefree-stable deletion recipe, the
//! polymatroidal SMS guarantee, strongly stable consequences, and the
//! vertex-cover rigidity proposition.

use clutters::{
    chordality, combinations, find_linear_quotients, is_polymatroidal, is_squarefree_stable,
    is_squarefree_strongly_stable, is_w_chordal, minimal_vertex_covers, simplicial_ms_set,
    vertex_cover_ideal, ChordalityMode, Clutter, FaceSet, NonUniformClutter, SquarefreeIdeal,
};

fn sweep_clutters(n: u8, d: u8, mut f: impl FnMut(&Clutter)) {
    let all: Vec<FaceSet> = combinations(n, d as u32 + 1).collect();
    for bits in 0u64..1 << all.len() {
        let circuits: Vec<FaceSet> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        f(&Clutter::from_sorted_unchecked(n, d, circuits));
    }
}

#[test]
fn lq_survives_sms_deletion() {
    // if I(complement C) has linear quotients and e is simplicial, the
    // deleted complement keeps linear quotients
    for (n, d) in [(3u8, 1u8), (4, 1), (5, 1), (5, 2)] {
        sweep_clutters(n, d, |c| {
            let ideal = SquarefreeIdeal::complement_ideal(c);
            if find_linear_quotients(&ideal).unwrap().is_none() {
                return;
            }
            for e in simplicial_ms_set(c) {
                let deleted = SquarefreeIdeal::complement_ideal(&c.remove(e));
                assert!(
                    find_linear_quotients(&deleted).unwrap().is_some(),
                    "LQ lost after deleting {e:?} from {c:?}"
                );
            }
        });
    }
}

/// The minimum-extension d-subset the squarefree-stable argument deletes:
/// a_i is the least vertex extending a_1..a_{i-1} inside some circuit.
fn stable_recipe_ms(c: &Clutter) -> FaceSet {
    let mut e = FaceSet::EMPTY;
    for _ in 0..c.dim() {
        let next = (0..c.n())
            .find(|&v| !e.contains(v) && c.circuits().iter().any(|f| e.insert(v).is_subset_of(*f)))
            .expect("nonempty clutter extends");
        e = e.insert(next);
    }
    e
}

#[test]
fn squarefree_stable_deletion_recipe() {
    // when I(complement C) is squarefree stable, the recipe MS is simplicial
    // and deleting it preserves stability, all the way down to empty
    sweep_clutters(5, 2, |c| {
        if !is_squarefree_stable(&SquarefreeIdeal::complement_ideal(c)) {
            return;
        }
        let mut cur = c.clone();
        while !cur.is_empty() {
            let e = stable_recipe_ms(&cur);
            assert!(
                simplicial_ms_set(&cur).contains(&e),
                "recipe MS {e:?} not simplicial in {cur:?}"
            );
            cur = cur.remove(e);
            assert!(
                is_squarefree_stable(&SquarefreeIdeal::complement_ideal(&cur)),
                "stability lost at {cur:?}"
            );
        }
        assert!(chordality(c, ChordalityMode::Exhaustive).unwrap().chordal);
    });
}

#[test]
fn polymatroidal_complement_forces_sms() {
    sweep_clutters(5, 2, |c| {
        if c.is_empty() {
            return;
        }
        if is_polymatroidal(&SquarefreeIdeal::complement_ideal(c)).unwrap() {
            assert!(!simplicial_ms_set(c).is_empty(), "{c:?}");
        }
    });
}

#[test]
fn strongly_stable_circuit_ideals_are_chordal_and_w_chordal() {
    // all equigenerated degree-3 ideals on [5]
    let triples: Vec<FaceSet> = combinations(5, 3).collect();
    let mut checked = 0u32;
    for bits in 0u64..1 << triples.len() {
        let gens: Vec<FaceSet> = triples
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &g)| g)
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = SquarefreeIdeal::from_supports(5, gens.clone());
        if !is_squarefree_strongly_stable(&ideal) {
            continue;
        }
        checked += 1;
        let c = Clutter::new(5, 2, gens).unwrap();
        assert!(chordality(&c, ChordalityMode::Exhaustive).unwrap().chordal);
        let (w, _) = is_w_chordal(&NonUniformClutter::from_clutter(&c)).unwrap();
        assert!(w, "{c:?} not W-chordal");
        // the largest supported vertex is simplicial
        let d = NonUniformClutter::from_clutter(&c);
        let top = d.support().max_vertex().unwrap();
        assert!(d.simplicial_vertex_set().contains(&top));
    }
    assert!(checked > 1);
}

#[test]
fn reverse_order_stability_of_complements() {
    // for a strongly stable circuit ideal, the complement ideal is strongly
    // stable against the reverse vertex order
    let triples: Vec<FaceSet> = combinations(5, 3).collect();
    for bits in 0u64..1 << triples.len() {
        let gens: Vec<FaceSet> = triples
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &g)| g)
            .collect();
        if gens.is_empty() {
            continue;
        }
        if !is_squarefree_strongly_stable(&SquarefreeIdeal::from_supports(5, gens.clone())) {
            continue;
        }
        let c = Clutter::new(5, 2, gens).unwrap();
        let complement_rev = SquarefreeIdeal::complement_ideal(&c).reversed();
        assert!(is_squarefree_strongly_stable(&complement_rev), "{c:?}");
    }
}

/// Does the ideal equal the vertex cover ideal of some unmixed graph on [n]?
/// The only candidate graph has an edge wherever no generator-complement
/// covers the pair.
fn matches_unmixed_cover_ideal(ideal: &SquarefreeIdeal) -> Option<Clutter> {
    let n = ideal.n();
    let full = FaceSet::full(n);
    let ind: Vec<FaceSet> = ideal.generators().iter().map(|&g| full.minus(g)).collect();
    let edges: Vec<FaceSet> = combinations(n, 2)
        .filter(|p| !ind.iter().any(|a| p.is_subset_of(*a)))
        .collect();
    let graph = Clutter::new(n, 1, edges).ok()?;
    let cover = vertex_cover_ideal(&graph).ok()?;
    if &cover == ideal && cover.equigenerated() {
        Some(graph)
    } else {
        None
    }
}

#[test]
fn deleted_complements_are_cover_ideals_only_in_the_rigid_case() {
    // hits force n = d+2 with a complete recognized graph; and none exist
    // for n > d+2
    for (n, d, expect_possible) in [(3u8, 1u8, true), (4, 2, true), (4, 1, false), (5, 2, false)] {
        let mut hits = 0u32;
        sweep_clutters(n, d, |c| {
            for e in c.maximal_subcircuits() {
                let ideal = SquarefreeIdeal::complement_ideal(&c.remove(e));
                if let Some(graph) = matches_unmixed_cover_ideal(&ideal) {
                    hits += 1;
                    assert_eq!(n, d + 2, "unexpected hit for {c:?} minus {e:?}");
                    assert_eq!(
                        graph.len() as u64,
                        clutters::binomial(n as u64, 2),
                        "recognized graph is not complete for {c:?} minus {e:?}"
                    );
                }
            }
        });
        if expect_possible {
            assert!(hits > 0, "expected rigid hits at n = {n}, d = {d}");
        } else {
            assert_eq!(hits, 0, "no hits expected at n = {n}, d = {d}");
        }
    }
}

#[test]
fn cover_set_equality_against_brute_force() {
    // minimal vertex covers from independent sets match brute force over all
    // vertex subsets
    let edges_all: Vec<FaceSet> = combinations(5, 2).collect();
    for bits in 0u64..1 << 10 {
        let edges: Vec<FaceSet> = edges_all
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Clutter::from_sorted_unchecked(5, 1, edges);
        let fast = minimal_vertex_covers(&g).unwrap();
        let mut brute: Vec<FaceSet> = (0u64..1 << 5)
            .map(FaceSet::from_bits)
            .filter(|&s| {
                g.circuits().iter().all(|e| !e.intersect(s).is_empty())
                    && s.iter().all(|v| {
                        let smaller = s.remove(v);
                        !g.circuits()
                            .iter()
                            .all(|e| !e.intersect(smaller).is_empty())
                    })
            })
            .collect();
        brute.sort_unstable();
        assert_eq!(fast, brute, "covers disagree on {g:?}");
    }
}
