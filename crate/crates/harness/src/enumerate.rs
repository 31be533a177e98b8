use std::ops::Range;

use clutters::{binomial, combinations, Clutter, Error, FaceSet, Result};

use crate::canonical::canonical_form;

/// Index-space cap without sharding: 2^24 clutters.
pub const UNSHARDED_BITS_CAP: u32 = 24;
/// Hard cap with sharding.
pub const SHARDED_BITS_CAP: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dedup {
    None,
    /// Yield only clutters equal to their canonical form: one representative
    /// per isomorphism class.
    Canonical,
}

/// A streaming enumeration of all d-clutters on [n]: every subset of the
/// canonically ordered circuit universe, indexed by bitmask.
#[derive(Debug, Clone)]
pub struct EnumerationTask {
    pub n: u8,
    pub d: u8,
    pub dedup: Dedup,
    pub shards: u32,
}

impl EnumerationTask {
    pub fn new(n: u8, d: u8) -> Self {
        EnumerationTask {
            n,
            d,
            dedup: Dedup::None,
            shards: 1,
        }
    }

    /// Number of possible circuits (bits of the index space).
    pub fn bits(&self) -> u64 {
        binomial(self.n as u64, self.d as u64 + 1)
    }

    pub fn validate(&self) -> Result<u32> {
        let bits = self.bits();
        let cap = if self.shards > 1 {
            SHARDED_BITS_CAP
        } else {
            UNSHARDED_BITS_CAP
        };
        if bits > cap as u64 {
            return Err(Error::capacity(format!(
                "index space 2^{bits} exceeds the 2^{cap} cap (n={}, d={}, shards={})",
                self.n, self.d, self.shards
            )));
        }
        Ok(bits as u32)
    }
}

/// The canonically ordered circuit universe for (n, d).
pub fn circuit_universe(n: u8, d: u8) -> Vec<FaceSet> {
    combinations(n, d as u32 + 1).collect()
}

/// Contiguous shard ranges that partition [0, total) exactly.
pub fn shard_range(total: u64, shard: u32, count: u32) -> Range<u64> {
    let count = count.max(1) as u128;
    let shard = shard as u128;
    let total = total as u128;
    let start = (shard * total / count) as u64;
    let end = ((shard + 1) * total / count) as u64;
    start..end
}

/// Build the clutter for one index against a precomputed universe.
pub fn clutter_at(n: u8, d: u8, universe: &[FaceSet], index: u64) -> Clutter {
    let circuits: Vec<FaceSet> = universe
        .iter()
        .enumerate()
        .filter(|(i, _)| index >> i & 1 == 1)
        .map(|(_, &c)| c)
        .collect();
    Clutter::from_sorted_unchecked(n, d, circuits)
}

/// Run `f` over one shard of the index space, in increasing index order.
pub fn sweep_range(
    n: u8,
    d: u8,
    universe: &[FaceSet],
    range: Range<u64>,
    dedup: Dedup,
    mut f: impl FnMut(u64, &Clutter),
) {
    for index in range {
        let clutter = clutter_at(n, d, universe, index);
        if dedup == Dedup::Canonical && canonical_form(&clutter).expect("n <= 8") != clutter {
            continue;
        }
        f(index, &clutter);
    }
}

/// Collect a whole (small) enumeration; used by tests and the examples.
pub fn enumerate_clutters(task: &EnumerationTask) -> Result<Vec<Clutter>> {
    let bits = task.validate()?;
    let universe = circuit_universe(task.n, task.d);
    let mut out = Vec::new();
    sweep_range(
        task.n,
        task.d,
        &universe,
        0..1u64 << bits,
        task.dedup,
        |_, c| out.push(c.clone()),
    );
    Ok(out)
}
