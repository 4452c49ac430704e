use std::fmt;

use super::rational::Rational;

/// Dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Reduced row-echelon form and the pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        if !m[(r, j)].is_zero() {
                            let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                            m[(i, j)] = v;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel. Each vector has a 1 in one free column,
    /// zeros in the other free columns, and the negated RREF entries in the
    /// pivot columns.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots, self.cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }
}

fn kernel_from_rref(r: &RationalMatrix, pivots: &[usize], cols: usize) -> Vec<Vec<Rational>> {
    let mut is_pivot = vec![None; cols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    (0..cols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(row, free)];
            }
            v
        })
        .collect()
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained reduced row-echelon basis of a row space.
///
/// Rows are inserted one at a time; `insert` reports whether the rank grew.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    cols: usize,
    // (pivot column, row with a 1 at the pivot and zeros at other pivots)
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        RowEchelon { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn insert(&mut self, mut row: Vec<Rational>) -> bool {
        assert_eq!(row.len(), self.cols);
        if self.is_full() {
            return false;
        }
        for (pc, basis) in &self.rows {
            if !row[*pc].is_zero() {
                let f = row[*pc].clone();
                for (x, b) in row.iter_mut().zip(basis) {
                    if !b.is_zero() {
                        *x -= &(&f * b);
                    }
                }
            }
        }
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[pc].recip();
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (_, basis) in self.rows.iter_mut() {
            if !basis[pc].is_zero() {
                let f = basis[pc].clone();
                for (x, r) in basis.iter_mut().zip(&row) {
                    if !r.is_zero() {
                        *x -= &(&f * r);
                    }
                }
            }
        }
        self.rows.push((pc, row));
        true
    }

    /// Kernel of the row space, normalized as in [`RationalMatrix::kernel`].
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut sorted: Vec<&(usize, Vec<Rational>)> = self.rows.iter().collect();
        sorted.sort_by_key(|(pc, _)| *pc);
        let pivots: Vec<usize> = sorted.iter().map(|(pc, _)| *pc).collect();
        let m = RationalMatrix::from_rows(sorted.iter().map(|(_, r)| r.clone()).collect());
        if m.rows() == 0 {
            return kernel_from_rref(&RationalMatrix::zeros(0, self.cols), &[], self.cols);
        }
        kernel_from_rref(&m, &pivots, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kernel_examples() {
        assert!(RationalMatrix::identity(3).kernel().is_empty());
        assert_eq!(RationalMatrix::zeros(2, 3).kernel().len(), 3);
        let k = RationalMatrix::from_i64(&[&[1, 1], &[2, 2]]).kernel();
        assert_eq!(k, vec![vec![Rational::from(-1), Rational::from(1)]]);
    }

    #[test]
    fn echelon_matches_batch_rref() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0], &[1, 3, 4, 4]]);
        let mut e = RowEchelon::new(4);
        for i in 0..m.rows() {
            e.insert(m.row(i).to_vec());
        }
        assert_eq!(e.rank(), m.rank());
        assert_eq!(e.kernel(), m.kernel());
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in prop::collection::vec(-3i64..=3, 12), rows in 1usize..=4) {
            let cols = 12 / rows;
            let data: Vec<Vec<Rational>> = (0..rows)
                .map(|i| (0..cols).map(|j| Rational::from(entries[i * cols + j])).collect())
                .collect();
            let m = RationalMatrix::from_rows(data);
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(Rational::is_zero));
            }
        }
    }
}
