use clutters::{Clutter, Error, FaceSet, LabelMap, Result};

/// A parsed clutter file: the ground-set header, the label map inferred from
/// the body, and the clutter itself.
///
/// Grammar (bit-exact):
///   - `#` starts a comment anywhere on a line; blank lines are ignored.
///   - The first significant line is the header `n=<int> d=<int>`.
///   - Every following significant line is one circuit: exactly d+1 distinct
///     non-negative integer labels separated by whitespace.
///
/// Labels need not be contiguous. The ground set is inferred: with exactly n
/// distinct labels they are the ground set (sorted); with fewer, the labels
/// must all fit {0..n-1} (0-based) or {1..n} (1-based), otherwise the ground
/// set is not recoverable and the file is rejected.
#[derive(Debug, Clone)]
pub struct ClutterFile {
    pub labels: LabelMap,
    pub clutter: Clutter,
}

pub fn parse_clutter_file(text: &str) -> Result<ClutterFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let Some((header_no, header)) = lines.next() else {
        return Err(Error::input("empty clutter file"));
    };
    let mut n: Option<u8> = None;
    let mut d: Option<u8> = None;
    for token in header.split_whitespace() {
        if let Some(v) = token.strip_prefix("n=") {
            n = Some(v.parse().map_err(|_| {
                Error::input(format!("line {header_no}: bad n in header {token:?}"))
            })?);
        } else if let Some(v) = token.strip_prefix("d=") {
            d = Some(v.parse().map_err(|_| {
                Error::input(format!("line {header_no}: bad d in header {token:?}"))
            })?);
        } else {
            return Err(Error::input(format!(
                "line {header_no}: unexpected header token {token:?}"
            )));
        }
    }
    let (Some(n), Some(d)) = (n, d) else {
        return Err(Error::input(format!(
            "line {header_no}: header must read \"n=<int> d=<int>\""
        )));
    };
    if n > clutters::MAX_VERTICES {
        return Err(Error::capacity(format!(
            "line {header_no}: n = {n} exceeds the {}-vertex cap",
            clutters::MAX_VERTICES
        )));
    }

    let mut raw_circuits: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut all_labels: Vec<u32> = Vec::new();
    for (lineno, line) in lines {
        let mut labels = Vec::new();
        for token in line.split_whitespace() {
            let v: u32 = token
                .parse()
                .map_err(|_| Error::input(format!("line {lineno}: bad vertex label {token:?}")))?;
            if labels.contains(&v) {
                return Err(Error::input(format!(
                    "line {lineno}: repeated vertex label {v}"
                )));
            }
            labels.push(v);
        }
        if labels.len() != d as usize + 1 {
            return Err(Error::input(format!(
                "line {lineno}: circuit has {} labels, expected d+1 = {}",
                labels.len(),
                d + 1
            )));
        }
        all_labels.extend_from_slice(&labels);
        raw_circuits.push((lineno, labels));
    }

    all_labels.sort_unstable();
    all_labels.dedup();
    if all_labels.len() > n as usize {
        return Err(Error::input(format!(
            "{} distinct labels but the header says n={n}",
            all_labels.len()
        )));
    }
    let labels = if all_labels.len() == n as usize {
        LabelMap::new(all_labels)?
    } else if all_labels.iter().all(|&l| l < n as u32) {
        LabelMap::identity(n)
    } else if all_labels.iter().all(|&l| 1 <= l && l <= n as u32) {
        LabelMap::one_based(n)
    } else {
        return Err(Error::input(
            "cannot infer the ground set: fewer labels than n and neither 0-based nor 1-based",
        ));
    };

    let mut circuits: Vec<FaceSet> = Vec::with_capacity(raw_circuits.len());
    for (lineno, raw) in &raw_circuits {
        let set = labels
            .set_to_internal(raw)
            .map_err(|e| Error::input(format!("line {lineno}: {e}")))?;
        circuits.push(set);
    }
    let clutter = Clutter::new(n, d, circuits)?;
    Ok(ClutterFile { labels, clutter })
}

/// Render a clutter in the file grammar, using the given label map.
pub fn format_clutter_file(labels: &LabelMap, clutter: &Clutter) -> String {
    let mut out = format!("n={} d={}\n", clutter.n(), clutter.dim());
    for &c in clutter.circuits() {
        out.push_str(&labels.format_set(c));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_one_based_file() {
        let text = "# the running example\nn=5 d=2\n1 4 5\n2 4 5\n3 4 5 # inline comment\n";
        let file = parse_clutter_file(text).unwrap();
        assert_eq!(file.clutter.len(), 3);
        assert_eq!(file.labels.to_internal(1).unwrap(), 0);
        let rendered = format_clutter_file(&file.labels, &file.clutter);
        let reparsed = parse_clutter_file(&rendered).unwrap();
        assert_eq!(reparsed.clutter, file.clutter);
    }

    #[test]
    fn parses_zero_based_and_sparse_labels() {
        let text = "n=6 d=2\n0 1 3\n3 4 5\n";
        let file = parse_clutter_file(text).unwrap();
        assert_eq!(file.labels.to_internal(0).unwrap(), 0);

        // non-contiguous labels with exactly n distinct ones
        let text = "n=3 d=1\n10 20\n20 30\n";
        let file = parse_clutter_file(text).unwrap();
        assert_eq!(file.labels.to_internal(30).unwrap(), 2);
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(parse_clutter_file("").is_err());
        assert!(parse_clutter_file("n=5\n").is_err());
        assert!(parse_clutter_file("n=5 d=2\n1 2\n").is_err()); // wrong arity
        assert!(parse_clutter_file("n=5 d=2\n1 1 2\n").is_err()); // repeated label
        assert!(parse_clutter_file("n=3 d=1\n7 9\n").is_err()); // ground set not inferable
        assert!(parse_clutter_file("n=90 d=2\n").is_err()); // over the vertex cap
    }

    #[test]
    fn header_only_file_is_the_empty_clutter() {
        let file = parse_clutter_file("n=4 d=1\n").unwrap();
        assert!(file.clutter.is_empty());
        assert_eq!(file.clutter.n(), 4);
    }
}
