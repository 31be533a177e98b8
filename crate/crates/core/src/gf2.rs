/// Bit-packed matrix over the two-element field.
///
/// Rows are stored as u64 words. Everything here is plain dense Gaussian
/// elimination, which is exact and more than fast enough for desk-scale
/// boundary matrices (a few hundred rows).
#[derive(Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl std::fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "GF2Matrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl GF2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        GF2Matrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        let w = r * self.words + c / 64;
        if bit {
            self.data[w] |= 1 << (c % 64);
        } else {
            self.data[w] &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = (src * self.words, dst * self.words);
        for k in 0..self.words {
            let v = self.data[a + k];
            self.data[b + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words {
            self.data.swap(a * self.words + k, b * self.words + k);
        }
    }

    /// Rank by elimination on a clone.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let sel = (pivot_row..m.rows).find(|&r| m.get(r, col));
            let Some(sel) = sel else { continue };
            m.swap_rows(sel, pivot_row);
            for r in pivot_row + 1..m.rows {
                if m.get(r, col) {
                    m.xor_row_into(pivot_row, r);
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        pivot_row
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut t = GF2Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Is the kernel (null space of the column action x -> Ax) trivial?
    pub fn kernel_is_trivial(&self) -> bool {
        self.rank() == self.cols
    }

    /// Solve A x = b over GF(2); returns some solution as a column-index bit
    /// vector, or None when the system is inconsistent. Free variables are
    /// set to zero.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows);
        // Gauss-Jordan on [A | b].
        let mut m = GF2Matrix::zero(self.rows, self.cols + 1);
        for (r, &bit) in b.iter().enumerate() {
            for k in 0..self.words {
                m.data[r * m.words + k] = self.data[r * self.words + k];
            }
            m.set(r, self.cols, bit);
        }
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            let sel = (pivot_row..self.rows).find(|&r| m.get(r, col));
            let Some(sel) = sel else { continue };
            m.swap_rows(sel, pivot_row);
            for r in 0..self.rows {
                if r != pivot_row && m.get(r, col) {
                    m.xor_row_into(pivot_row, r);
                }
            }
            pivot_col_of_row.push(col);
            pivot_row += 1;
            if pivot_row == self.rows {
                break;
            }
        }
        // rows below the pivots must have zero right-hand side
        for r in pivot_row..self.rows {
            if m.get(r, self.cols) {
                return None;
            }
        }
        let mut x = vec![false; self.cols];
        for (r, &col) in pivot_col_of_row.iter().enumerate() {
            x[col] = m.get(r, self.cols);
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[u8]], cols: usize) -> GF2Matrix {
        let mut m = GF2Matrix::zero(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &bit) in row.iter().enumerate() {
                m.set(r, c, bit == 1);
            }
        }
        m
    }

    #[test]
    fn rank_is_stable_under_rereduction() {
        let m = from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]], 3);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
        assert_eq!(GF2Matrix::zero(4, 5).rank(), 0);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        // x0 + x1 = 1, x1 + x2 = 1, x0 + x2 = 0 has solutions
        let m = from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]], 3).transpose();
        // rows of the original become equations; build A as 3x3 with columns as unknowns
        let a = from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]], 3);
        let sol = a.solve(&[true, true, false]).expect("consistent");
        // verify
        for (r, &want) in [true, true, false].iter().enumerate() {
            let mut acc = false;
            for (c, &x) in sol.iter().enumerate() {
                acc ^= a.get(r, c) && x;
            }
            assert_eq!(acc, want);
        }
        assert!(a.solve(&[true, false, false]).is_none());
        let _ = m;
    }

    #[test]
    fn kernel_trivial_iff_full_column_rank() {
        let a = from_rows(&[&[1, 0], &[0, 1], &[1, 1]], 2);
        assert!(a.kernel_is_trivial());
        let b = from_rows(&[&[1, 1], &[1, 1]], 2);
        assert!(!b.kernel_is_trivial());
    }
}
