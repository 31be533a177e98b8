use clutters::{Clutter, Error, Result};

/// Canonical form cap: relabelings are brute-forced over n! permutations.
pub const CANONICAL_VERTEX_CAP: u8 = 8;

/// The lexicographically minimal relabeling of a clutter over all
/// permutations of its ground set. Invariant under any input permutation.
pub fn canonical_form(clutter: &Clutter) -> Result<Clutter> {
    let n = clutter.n();
    if clutter.is_empty() {
        return Ok(clutter.clone());
    }
    if n > CANONICAL_VERTEX_CAP {
        return Err(Error::capacity(format!(
            "canonical form is brute-forced over permutations; n = {n} exceeds {CANONICAL_VERTEX_CAP}"
        )));
    }
    let mut best = clutter.relabel(&(0..n).collect::<Vec<u8>>());
    let mut perm: Vec<u8> = (0..n).collect();
    let mut c = vec![0usize; n as usize];
    let mut i = 0usize;
    // Heap's algorithm over all permutations
    while i < n as usize {
        if c[i] < i {
            if i.is_multiple_of(2) {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let candidate = clutter.relabel(&perm);
            if candidate.circuits() < best.circuits() {
                best = candidate;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clutters::FaceSet;

    fn fs(vs: &[u8]) -> FaceSet {
        FaceSet::from_vertices(vs.iter().copied())
    }

    #[test]
    fn relabellings_share_a_canonical_form() {
        let c = Clutter::new(5, 2, vec![fs(&[0, 3, 4]), fs(&[1, 3, 4]), fs(&[2, 3, 4])]).unwrap();
        // swap vertices 3 and 4
        let swapped = c.relabel(&[0, 1, 2, 4, 3]);
        assert_eq!(
            canonical_form(&c).unwrap(),
            canonical_form(&swapped).unwrap()
        );

        let a = Clutter::new(4, 2, vec![fs(&[0, 1, 2])]).unwrap();
        let b = Clutter::new(4, 2, vec![fs(&[1, 2, 3])]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());

        let empty = Clutter::empty(5, 2);
        assert_eq!(canonical_form(&empty).unwrap(), empty);
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let c = Clutter::new(5, 2, vec![fs(&[1, 2, 4]), fs(&[0, 2, 3])]).unwrap();
        let canon = canonical_form(&c).unwrap();
        assert_eq!(canonical_form(&canon).unwrap(), canon);
    }

    #[test]
    fn cap_is_enforced() {
        let c = Clutter::empty(9, 2);
        assert!(canonical_form(&c).is_ok()); // empty short-circuits
        let c = Clutter::new(9, 1, vec![fs(&[0, 8])]).unwrap();
        assert!(canonical_form(&c).is_err());
    }
}
