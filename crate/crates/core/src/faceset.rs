use std::fmt;

/// A subset of the vertex ground set, packed into one machine word.
///
/// Vertices are 0-based internal indices; the enclosing context (a clutter or
/// complex) fixes the ground-set size `n <= 63`. The same type carries
/// circuits, maximal subcircuits, cliques, faces and monomial supports.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FaceSet(u64);

/// Hard cap on the ground set so a `FaceSet` fits one word.
pub const MAX_VERTICES: u8 = 63;

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        FaceSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_vertices<I: IntoIterator<Item = u8>>(vs: I) -> Self {
        let mut bits = 0u64;
        for v in vs {
            debug_assert!(v < 64);
            bits |= 1 << v;
        }
        FaceSet(bits)
    }

    #[inline]
    pub fn singleton(v: u8) -> Self {
        FaceSet(1 << v)
    }

    /// The full set {0, .., n-1}.
    #[inline]
    pub fn full(n: u8) -> Self {
        if n == 0 {
            FaceSet(0)
        } else {
            FaceSet(u64::MAX >> (64 - n as u32))
        }
    }

    #[inline]
    pub fn card(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: u8) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(self, v: u8) -> Self {
        FaceSet(self.0 | 1 << v)
    }

    #[inline]
    pub fn remove(self, v: u8) -> Self {
        FaceSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn union(self, other: FaceSet) -> Self {
        FaceSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: FaceSet) -> Self {
        FaceSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: FaceSet) -> Self {
        FaceSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: FaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn min_vertex(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as u8)
        }
    }

    #[inline]
    pub fn max_vertex(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as u8)
        }
    }

    #[inline]
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.iter().collect()
    }

    /// Apply a vertex relabeling; `perm[old] = new`.
    pub fn relabel(self, perm: &[u8]) -> Self {
        let mut out = 0u64;
        for v in self.iter() {
            out |= 1 << perm[v as usize];
        }
        FaceSet(out)
    }

    /// All subsets of `self` obtained by dropping exactly one vertex.
    pub fn drop_one(self) -> impl Iterator<Item = FaceSet> {
        self.iter().map(move |v| self.remove(v))
    }

    /// All `k`-subsets of `self`, in canonical (lexicographic) order.
    pub fn k_subsets(self, k: u32) -> KSubsets {
        KSubsets::new(self, k)
    }
}

/// Iterator over members of a `FaceSet` in increasing order.
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u8;

    #[inline]
    fn next(&mut self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as u8;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Canonical order: lexicographic on the sorted vertex lists. This is the
/// order circuits, generators and witnesses are kept and reported in. Note it
/// differs from numeric order of the bit patterns ({1,2} sorts after {0,5}).
impl Ord for FaceSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        if self.0 == other.0 {
            return Equal;
        }
        let diff = self.0 ^ other.0;
        let first = diff & diff.wrapping_neg();
        // Vertices below `first` agree. Whoever owns `first` has the smaller
        // next element, unless the other side is already exhausted there.
        if self.0 & first != 0 {
            if other.0 & !(first | (first - 1)) == 0 && other.0 & (first - 1) == other.0 {
                // other is a strict prefix of self
                Greater
            } else {
                Less
            }
        } else if self.0 & !(first | (first - 1)) == 0 && self.0 & (first - 1) == self.0 {
            Less
        } else {
            Greater
        }
    }
}

impl PartialOrd for FaceSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the `k`-subsets of a fixed set, lexicographic on sorted
/// vertex lists.
pub struct KSubsets {
    members: Vec<u8>,
    idx: Vec<usize>,
    k: usize,
    done: bool,
}

impl KSubsets {
    fn new(set: FaceSet, k: u32) -> Self {
        let members = set.to_vec();
        let k = k as usize;
        let done = k > members.len();
        KSubsets {
            idx: (0..k).collect(),
            members,
            k,
            done,
        }
    }
}

impl Iterator for KSubsets {
    type Item = FaceSet;

    fn next(&mut self) -> Option<FaceSet> {
        if self.done {
            return None;
        }
        let out = FaceSet::from_vertices(self.idx.iter().map(|&i| self.members[i]));
        // advance the index odometer
        let n = self.members.len();
        let k = self.k;
        if k == 0 {
            self.done = true;
            return Some(out);
        }
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - (k - i) {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All `k`-subsets of {0, .., n-1} in canonical order.
pub fn combinations(n: u8, k: u32) -> KSubsets {
    FaceSet::full(n).k_subsets(k)
}

/// Binomial coefficient; exact for every n <= 63.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
