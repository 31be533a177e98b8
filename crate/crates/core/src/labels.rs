use crate::error::{Error, Result};
use crate::faceset::FaceSet;

/// Bijection between external vertex labels (arbitrary non-negative integers,
/// the way inputs usually write them) and internal 0-based indices.
///
/// Construction sorts the external labels, so the mapping is deterministic and
/// round-trips exactly. All library computation is internal; all reporting
/// goes back through the map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap {
    labels: Vec<u32>, // sorted; labels[internal] = external
}

impl LabelMap {
    pub fn new(mut labels: Vec<u32>) -> Result<Self> {
        labels.sort_unstable();
        labels.dedup();
        if labels.len() > 63 {
            return Err(Error::capacity(format!(
                "{} distinct labels exceed the 63-vertex cap",
                labels.len()
            )));
        }
        Ok(LabelMap { labels })
    }

    /// The identity map on {0, .., n-1}.
    pub fn identity(n: u8) -> Self {
        LabelMap {
            labels: (0..n as u32).collect(),
        }
    }

    /// 1-based labels {1, .., n}, the most common convention in inputs.
    pub fn one_based(n: u8) -> Self {
        LabelMap {
            labels: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn to_internal(&self, label: u32) -> Result<u8> {
        self.labels
            .binary_search(&label)
            .map(|i| i as u8)
            .map_err(|_| Error::input(format!("unknown vertex label {label}")))
    }

    pub fn to_external(&self, internal: u8) -> Result<u32> {
        self.labels
            .get(internal as usize)
            .copied()
            .ok_or_else(|| Error::input(format!("internal vertex {internal} out of range")))
    }

    pub fn set_to_internal(&self, labels: &[u32]) -> Result<FaceSet> {
        let mut out = FaceSet::EMPTY;
        for &l in labels {
            out = out.insert(self.to_internal(l)?);
        }
        Ok(out)
    }

    /// External labels of a face, sorted ascending.
    pub fn set_to_external(&self, set: FaceSet) -> Result<Vec<u32>> {
        set.iter().map(|v| self.to_external(v)).collect()
    }

    /// Render a face in external labels, e.g. "1 4 5".
    pub fn format_set(&self, set: FaceSet) -> String {
        set.iter()
            .map(|v| match self.to_external(v) {
                Ok(l) => l.to_string(),
                Err(_) => format!("?{v}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_determinism() {
        let m = LabelMap::new(vec![7, 2, 9, 2]).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m.to_internal(2).unwrap(), 0);
        assert_eq!(m.to_internal(7).unwrap(), 1);
        assert_eq!(m.to_internal(9).unwrap(), 2);
        for i in 0..3u8 {
            assert_eq!(m.to_internal(m.to_external(i).unwrap()).unwrap(), i);
        }
        assert!(m.to_internal(3).is_err());
    }

    #[test]
    fn formats_external_labels() {
        let m = LabelMap::one_based(5);
        let s = m.set_to_internal(&[1, 4, 5]).unwrap();
        assert_eq!(m.format_set(s), "1 4 5");
    }
}
