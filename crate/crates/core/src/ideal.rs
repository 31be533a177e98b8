use std::collections::HashSet;

use crate::chordality::simplicial_ms_set;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::faceset::{binomial, combinations, FaceSet};

/// Generator cap for the linear-quotients backtracking search.
pub const LQ_GENERATOR_CAP: usize = 12;
/// Cap on the complete ideal size when extending a quotient order.
pub const EXTEND_COMPLETE_CAP: u64 = 4096;

/// A squarefree monomial ideal, represented purely by the supports of its
/// minimal generators. Divisibility is subset containment and membership is
/// "some generator's support is contained in the given support"; every
/// predicate of interest is combinatorial on supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    n: u8,
    generators: Vec<FaceSet>,
}

impl SquarefreeIdeal {
    /// Build from generator supports; non-minimal supports are dropped so the
    /// stored list is the antichain of minimal generators, canonically
    /// sorted.
    pub fn from_supports(n: u8, mut supports: Vec<FaceSet>) -> Self {
        supports.sort_unstable_by_key(|f| f.card());
        let mut minimal: Vec<FaceSet> = Vec::with_capacity(supports.len());
        for s in supports {
            if !minimal.iter().any(|m| m.is_subset_of(s)) {
                minimal.push(s);
            }
        }
        minimal.sort_unstable();
        SquarefreeIdeal {
            n,
            generators: minimal,
        }
    }

    /// The circuit ideal I(C).
    pub fn circuit_ideal(clutter: &Clutter) -> Self {
        SquarefreeIdeal {
            n: clutter.n(),
            generators: clutter.circuits().to_vec(),
        }
    }

    /// I of the d-complement of C.
    pub fn complement_ideal(clutter: &Clutter) -> Self {
        SquarefreeIdeal::circuit_ideal(&clutter.complement())
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn generators(&self) -> &[FaceSet] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn equigenerated(&self) -> bool {
        match self.generators.first() {
            None => true,
            Some(g) => self.generators.iter().all(|h| h.card() == g.card()),
        }
    }

    /// Common generator degree of an equigenerated ideal.
    pub fn degree(&self) -> Option<u32> {
        if self.equigenerated() {
            self.generators.first().map(|g| g.card())
        } else {
            None
        }
    }

    /// Monomial membership by support.
    pub fn contains_support(&self, u: FaceSet) -> bool {
        self.generators.iter().any(|g| g.is_subset_of(u))
    }

    /// Generated in degree d with every squarefree degree-d monomial inside.
    pub fn is_complete(&self) -> bool {
        match self.degree() {
            None => false,
            Some(d) => self.generators.len() as u64 == binomial(self.n as u64, d as u64),
        }
    }

    /// The ideal with every vertex label reversed (v -> n-1-v); squarefree
    /// stability is order-sensitive and some arguments run against the
    /// reverse order.
    pub fn reversed(&self) -> Self {
        let n = self.n;
        let perm: Vec<u8> = (0..n).map(|v| n - 1 - v).collect();
        let mut generators: Vec<FaceSet> =
            self.generators.iter().map(|g| g.relabel(&perm)).collect();
        generators.sort_unstable();
        SquarefreeIdeal { n, generators }
    }
}

/// An ordering of all generators, as indices into the generator list.
pub type QuotientOrder = Vec<usize>;

/// The combinatorial linear-quotients test for equigenerated squarefree
/// ideals: for every j < i there must be l in F_j \ F_i and k < i with
/// F_k \ F_i = {l}.
pub fn is_linear_quotient_order(ideal: &SquarefreeIdeal, order: &QuotientOrder) -> Result<bool> {
    let t = ideal.len();
    let mut seen = vec![false; t];
    for &i in order {
        if i >= t || seen[i] {
            return Err(Error::input(
                "quotient order must be a permutation of the generators",
            ));
        }
        seen[i] = true;
    }
    if order.len() != t {
        return Err(Error::input(
            "quotient order must be a permutation of the generators",
        ));
    }
    Ok(order_is_lq(ideal.generators(), order))
}

fn order_is_lq(gens: &[FaceSet], order: &[usize]) -> bool {
    for i in 1..order.len() {
        if !prefix_accepts(gens, &order[..i], gens[order[i]]) {
            return false;
        }
    }
    true
}

/// Can `next` be appended after the prefix and keep linear quotients?
fn prefix_accepts(gens: &[FaceSet], prefix: &[usize], next: FaceSet) -> bool {
    let mut singles = FaceSet::EMPTY;
    for &k in prefix {
        let diff = gens[k].minus(next);
        if diff.card() == 1 {
            singles = singles.union(diff);
        }
    }
    prefix
        .iter()
        .all(|&j| !gens[j].minus(next).intersect(singles).is_empty())
}

/// Search for a linear-quotients order by backtracking over prefixes, with
/// memoization on the chosen generator set. Deterministic: candidates are
/// tried in canonical generator order and the first completed order wins.
pub fn find_linear_quotients(ideal: &SquarefreeIdeal) -> Result<Option<QuotientOrder>> {
    if !ideal.equigenerated() {
        return Err(Error::input(
            "linear quotients search expects an equigenerated ideal",
        ));
    }
    let t = ideal.len();
    if t > LQ_GENERATOR_CAP {
        return Err(Error::capacity(format!(
            "linear quotients search capped at {LQ_GENERATOR_CAP} generators, got {t}"
        )));
    }
    if t <= 1 {
        return Ok(Some((0..t).collect()));
    }
    let gens = ideal.generators();
    let mut dead: HashSet<u32> = HashSet::new();
    let mut order: Vec<usize> = Vec::with_capacity(t);

    fn dfs(
        gens: &[FaceSet],
        order: &mut Vec<usize>,
        chosen: u32,
        dead: &mut HashSet<u32>,
        t: usize,
    ) -> bool {
        if order.len() == t {
            return true;
        }
        if dead.contains(&chosen) {
            return false;
        }
        for i in 0..t {
            if chosen >> i & 1 == 1 {
                continue;
            }
            if prefix_accepts(gens, order, gens[i]) {
                order.push(i);
                if dfs(gens, order, chosen | 1 << i, dead, t) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(chosen);
        false
    }

    if dfs(gens, &mut order, 0, &mut dead, t) {
        debug_assert!(order_is_lq(gens, &order));
        Ok(Some(order))
    } else {
        Ok(None)
    }
}

/// Extend a valid linear-quotients order of a non-complete equigenerated
/// ideal to one for the complete squarefree ideal of the same degree.
///
/// The construction walks the complete-clutter correspondence: after the
/// given generators are deleted from the complete (degree-1)-dimensional
/// clutter, any unused degree-0 subset may be appended freely, and otherwise
/// an SMS of the residual clutter is appended. The finished order is
/// re-validated; failure to extend would be a counterexample to the theorem
/// it implements and is reported as such.
pub fn extend_order_to_complete(
    ideal: &SquarefreeIdeal,
    order: &QuotientOrder,
) -> Result<Vec<FaceSet>> {
    let Some(deg) = ideal.degree() else {
        return Err(Error::input("extension expects an equigenerated ideal"));
    };
    if !is_linear_quotient_order(ideal, order)? {
        return Err(Error::input(
            "the given order is not a linear-quotients order",
        ));
    }
    let total = binomial(ideal.n() as u64, deg as u64);
    if total > EXTEND_COMPLETE_CAP {
        return Err(Error::capacity(format!(
            "complete ideal with {total} generators exceeds the cap of {EXTEND_COMPLETE_CAP}"
        )));
    }
    let mut sequence: Vec<FaceSet> = order.iter().map(|&i| ideal.generators()[i]).collect();
    if ideal.is_complete() {
        return Ok(sequence);
    }
    // Generators of degree deg are the d-subsets of the complete
    // deg-dimensional clutter (circuits of size deg+1).
    let mut residual = Clutter::complete(ideal.n(), deg as u8);
    for &e in &sequence {
        residual = residual.remove(e);
    }
    let mut used: HashSet<FaceSet> = sequence.iter().copied().collect();
    let all: Vec<FaceSet> = combinations(ideal.n(), deg).collect();
    while sequence.len() < all.len() {
        // degree-0 unused subsets extend trivially; otherwise take the least
        // unused SMS of the residual clutter
        let next = all
            .iter()
            .copied()
            .find(|e| !used.contains(e) && residual.degree_unchecked(*e) == 0)
            .or_else(|| {
                simplicial_ms_set(&residual)
                    .into_iter()
                    .find(|e| !used.contains(e))
            });
        let Some(e) = next else {
            return Err(Error::TheoremViolation(format!(
                "quotient order extension stuck: residual {residual:?} has no simplicial MS"
            )));
        };
        used.insert(e);
        sequence.push(e);
        residual = residual.remove(e);
    }
    // dual route: the finished order must pass the direct test
    let complete = SquarefreeIdeal::from_supports(ideal.n(), all);
    let index: Vec<usize> = sequence
        .iter()
        .map(|e| {
            complete
                .generators()
                .binary_search(e)
                .expect("complete ideal contains every subset")
        })
        .collect();
    if !is_linear_quotient_order(&complete, &index)? {
        return Err(Error::TheoremViolation(
            "extended order failed the linear-quotients re-validation".to_string(),
        ));
    }
    Ok(sequence)
}

/// Squarefree stable: for every generator F and j < max(F) with j not in F,
/// the support F \ {max F} ∪ {j} lies in the ideal. Checking generators
/// suffices for the whole ideal.
pub fn is_squarefree_stable(ideal: &SquarefreeIdeal) -> bool {
    for &f in ideal.generators() {
        let Some(m) = f.max_vertex() else { continue };
        for j in 0..m {
            if f.contains(j) {
                continue;
            }
            if !ideal.contains_support(f.remove(m).insert(j)) {
                return false;
            }
        }
    }
    true
}

/// Squarefree strongly stable: the swap closure for every i in F and every
/// j < i outside F.
pub fn is_squarefree_strongly_stable(ideal: &SquarefreeIdeal) -> bool {
    for &f in ideal.generators() {
        for i in f.iter() {
            for j in 0..i {
                if f.contains(j) {
                    continue;
                }
                if !ideal.contains_support(f.remove(i).insert(j)) {
                    return false;
                }
            }
        }
    }
    let strong = true;
    debug_assert!(!strong || is_squarefree_stable(ideal));
    strong
}

/// Polymatroidal (squarefree case): the exchange property for every ordered
/// generator pair. When the plain exchange holds everywhere, the symmetric
/// exchange is verified as well; the symmetric exchange theorem guarantees
/// it, so a failure is reported as a theorem violation.
pub fn is_polymatroidal(ideal: &SquarefreeIdeal) -> Result<bool> {
    if !ideal.equigenerated() {
        return Err(Error::input(
            "polymatroidal is defined for equigenerated ideals",
        ));
    }
    let gens = ideal.generators();
    let is_gen = |f: FaceSet| gens.binary_search(&f).is_ok();
    for &u in gens {
        for &v in gens {
            if u == v {
                continue;
            }
            for i in u.minus(v).iter() {
                let ok = v.minus(u).iter().any(|j| is_gen(u.remove(i).insert(j)));
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    // companion: symmetric exchange
    for &u in gens {
        for &v in gens {
            if u == v {
                continue;
            }
            for i in u.minus(v).iter() {
                let ok = v
                    .minus(u)
                    .iter()
                    .any(|j| is_gen(u.remove(i).insert(j)) && is_gen(v.remove(j).insert(i)));
                if !ok {
                    return Err(Error::TheoremViolation(format!(
                        "plain exchange holds but symmetric exchange fails for {u:?}, {v:?} at {i}"
                    )));
                }
            }
        }
    }
    Ok(true)
}

/// Maximal independent sets of a graph (d = 1 clutter), canonically sorted.
pub fn maximal_independent_sets(graph: &Clutter) -> Result<Vec<FaceSet>> {
    if graph.dim() != 1 {
        return Err(Error::input(
            "independent sets are defined for graphs (d = 1)",
        ));
    }
    let n = graph.n();
    let mut out = Vec::new();
    // Bron-Kerbosch over independence
    fn compatible(graph: &Clutter, r: FaceSet, v: u8) -> bool {
        r.iter()
            .all(|u| !graph.contains(FaceSet::singleton(u).insert(v)))
    }
    fn grow(graph: &Clutter, r: FaceSet, p: FaceSet, x: FaceSet, out: &mut Vec<FaceSet>) {
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
                if compatible(graph, rv, u) {
                    p2 = p2.insert(u);
                }
            }
            for u in x.iter() {
                if compatible(graph, rv, u) {
                    x2 = x2.insert(u);
                }
            }
            grow(graph, rv, p2, x2, out);
            p = p.remove(v);
            x = x.insert(v);
        }
    }
    grow(
        graph,
        FaceSet::EMPTY,
        FaceSet::full(n),
        FaceSet::EMPTY,
        &mut out,
    );
    out.sort_unstable();
    Ok(out)
}

/// Minimal vertex covers: complements of the maximal independent sets. Each
/// emitted cover is re-verified directly (covers every edge, and dropping
/// any vertex breaks that).
pub fn minimal_vertex_covers(graph: &Clutter) -> Result<Vec<FaceSet>> {
    let full = FaceSet::full(graph.n());
    let mut covers: Vec<FaceSet> = maximal_independent_sets(graph)?
        .into_iter()
        .map(|a| full.minus(a))
        .collect();
    covers.sort_unstable();
    for &c in &covers {
        debug_assert!(is_vertex_cover(graph, c));
        debug_assert!(c.iter().all(|v| !is_vertex_cover(graph, c.remove(v))));
    }
    Ok(covers)
}

fn is_vertex_cover(graph: &Clutter, c: FaceSet) -> bool {
    graph.circuits().iter().all(|e| !e.intersect(c).is_empty())
}

/// The vertex cover ideal I_G, generated by the minimal vertex covers. The
/// graph is unmixed exactly when the result is equigenerated.
pub fn vertex_cover_ideal(graph: &Clutter) -> Result<SquarefreeIdeal> {
    Ok(SquarefreeIdeal::from_supports(
        graph.n(),
        minimal_vertex_covers(graph)?,
    ))
}

/// The constructive SMS of Theorem-style vertex-cover inputs: when I(C̄) is
/// the cover ideal of a graph whose maximal independent sets form a strongly
/// connected clutter, e = [n] \ (A1 ∪ A2) for independent sets A1, A2
/// sharing all but one vertex is a simplicial MS of C.
///
/// Preconditions that cannot be verified from the input are reported as
/// input errors; a recipe failure on verified preconditions would contradict
/// the theorem and is flagged accordingly.
pub fn sms_from_vertex_cover_structure(clutter: &Clutter) -> Result<FaceSet> {
    if clutter.is_empty() {
        return Err(Error::input("C must be nonempty"));
    }
    let complement = clutter.complement();
    if complement.is_empty() {
        // C complete: every MS is simplicial
        return Ok(clutter
            .maximal_subcircuits()
            .into_iter()
            .next()
            .expect("nonempty clutter has an MS"));
    }
    let full = FaceSet::full(clutter.n());
    let mut ind_sets: Vec<FaceSet> = complement
        .circuits()
        .iter()
        .map(|&f| full.minus(f))
        .collect();
    ind_sets.sort_unstable();
    // recover the unique candidate graph: u-v is an edge iff no candidate
    // independent set contains both
    let mut edges = Vec::new();
    for pair in combinations(clutter.n(), 2) {
        if !ind_sets.iter().any(|a| pair.is_subset_of(*a)) {
            edges.push(pair);
        }
    }
    let graph = Clutter::new(clutter.n(), 1, edges)?;
    let covers = minimal_vertex_covers(&graph)?;
    if covers != complement.circuits() {
        return Err(Error::input(
            "I(complement of C) is not the vertex cover ideal of any graph",
        ));
    }
    if clutter.n() < clutter.dim() + 2 {
        return Err(Error::input(
            "the independent-set clutter is degenerate for n < d + 2",
        ));
    }
    let dual_facets = Clutter::new(
        clutter.n(),
        clutter.n() - clutter.dim() - 2,
        ind_sets.clone(),
    )?;
    if !dual_facets.is_strongly_connected() {
        return Err(Error::input(
            "the maximal independent sets are not strongly connected",
        ));
    }
    // two independent sets adjacent in the strong-connectivity sense
    let mut chosen: Option<(FaceSet, FaceSet)> = None;
    'outer: for (i, &a1) in ind_sets.iter().enumerate() {
        for &a2 in &ind_sets[i + 1..] {
            if a1.intersect(a2).card() + 1 == a1.card() {
                chosen = Some((a1, a2));
                break 'outer;
            }
        }
    }
    let Some((a1, a2)) = chosen else {
        return Err(Error::input(
            "no two maximal independent sets share all but one vertex",
        ));
    };
    let e = full.minus(a1.union(a2));
    if simplicial_ms_set(clutter).contains(&e) {
        Ok(e)
    } else {
        Err(Error::TheoremViolation(format!(
            "recipe produced {e:?}, which is not a simplicial MS of {clutter:?}"
        )))
    }
}
