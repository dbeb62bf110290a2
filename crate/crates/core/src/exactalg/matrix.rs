use super::Field;

/// Dense row-major matrix over a [`Field`].
///
/// `proto` is a zero of the entry field; it lets empty matrices still produce
/// field constants (an empty matrix over `F_p` still knows its `p`).
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
    proto: F,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, proto: &F) -> Self {
        let z = proto.zero_like();
        Matrix { rows, cols, data: vec![z.clone(); rows * cols], proto: z }
    }

    pub fn identity(n: usize, proto: &F) -> Self {
        let mut m = Self::zeros(n, n, proto);
        for i in 0..n {
            m.set(i, i, proto.one_like());
        }
        m
    }

    /// Builds from row vectors; every row must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize, proto: &F) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix { rows: n, cols, data, proto: proto.zero_like() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn proto(&self) -> &F {
        &self.proto
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, &self.proto);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Submatrix on the given rows, all columns.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let data = rows.iter().flat_map(|&r| self.row(r).iter().cloned()).collect();
        Matrix { rows: rows.len(), cols: self.cols, data, proto: self.proto.clone() }
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(self.proto.clone(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    ///
    /// The pivot in each column is the nonzero candidate of least
    /// [`Field::weight`], which keeps rational entries short.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..a.cols {
            if prow == a.rows {
                break;
            }
            let best = (prow..a.rows)
                .filter(|&r| !a.get(r, col).is_zero())
                .min_by_key(|&r| a.get(r, col).weight());
            let Some(best) = best else { continue };
            a.swap_rows(prow, best);
            let inv = a.get(prow, col).inv().expect("pivot is nonzero");
            for c in col..a.cols {
                let v = a.get(prow, c).mul(&inv);
                a.set(prow, c, v);
            }
            for r in 0..a.rows {
                if r == prow || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in col..a.cols {
                    let v = a.get(r, c).sub(&factor.mul(a.get(prow, c)));
                    a.set(r, c, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        // Forward elimination only; cheaper than a full rref.
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let best = (rank..a.rows)
                .filter(|&r| !a.get(r, col).is_zero())
                .min_by_key(|&r| a.get(r, col).weight());
            let Some(best) = best else { continue };
            a.swap_rows(rank, best);
            let inv = a.get(rank, col).inv().expect("pivot is nonzero");
            for r in rank + 1..a.rows {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).mul(&inv);
                for c in col..a.cols {
                    let v = a.get(r, c).sub(&factor.mul(a.get(rank, c)));
                    a.set(r, c, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of the right kernel `{v : A v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let zero = self.proto.zero_like();
        let one = self.proto.one_like();
        let mut pivot_row = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_row[c] = Some(i);
        }
        (0..self.cols)
            .filter(|&c| pivot_row[c].is_none())
            .map(|free| {
                let mut v = vec![zero.clone(); self.cols];
                v[free] = one.clone();
                for (pc, row) in pivot_row.iter().enumerate() {
                    if let Some(row) = row {
                        v[pc] = r.get(*row, free).neg();
                    }
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut a = self.clone();
        let mut det = self.proto.one_like();
        for col in 0..a.cols {
            let best = (col..a.rows)
                .filter(|&r| !a.get(r, col).is_zero())
                .min_by_key(|&r| a.get(r, col).weight());
            let Some(best) = best else { return self.proto.zero_like() };
            if best != col {
                a.swap_rows(col, best);
                det = det.neg();
            }
            let pivot = a.get(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..a.rows {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).mul(&inv);
                for c in col..a.cols {
                    let v = a.get(r, c).sub(&factor.mul(a.get(col, c)));
                    a.set(r, c, v);
                }
            }
        }
        det
    }

    pub fn map<G: Field>(&self, proto: &G, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            proto: proto.zero_like(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, reduce_mod_p, Fp, Rational, RNG_PRIMES};
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect(),
            cols,
            &rat(0, 1),
        )
    }

    fn is_zero_vec(v: &[Rational]) -> bool {
        v.iter().all(Field::is_zero)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).rank(), 3);
        assert_eq!(Matrix::zeros(2, 5, &rat(0, 1)).rank(), 0);
        assert_eq!(q(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let k = q(&[&[1, -1]]).kernel_basis();
        assert_eq!(k, vec![vec![rat(1, 1), rat(1, 1)]]);
        assert!(q(&[&[2, 1], &[1, 1]]).kernel_basis().is_empty());
        let k = q(&[&[1, 0, 0], &[0, 1, 0]]).kernel_basis();
        assert_eq!(k, vec![vec![rat(0, 1), rat(0, 1), rat(1, 1)]]);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(q(&[&[2, 1], &[7, 4]]).determinant(), rat(1, 1));
        assert_eq!(q(&[&[0, 1], &[1, 0]]).determinant(), rat(-1, 1));
        assert_eq!(q(&[&[1, 2], &[2, 4]]).determinant(), rat(0, 1));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-4i64..=4, c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose(rows in small_matrix()) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = q(&refs);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_vectors_annihilate(rows in small_matrix()) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = q(&refs);
            let k = m.kernel_basis();
            prop_assert_eq!(k.len(), m.cols() - m.rank());
            for v in &k {
                prop_assert!(is_zero_vec(&m.mul_vec(v)));
            }
        }

        #[test]
        fn rank_agrees_across_large_primes(rows in small_matrix()) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = q(&refs);
            let over_q = m.rank();
            for &p in &RNG_PRIMES[..3] {
                let mp = m.map(&Fp::new(0, p), |x| reduce_mod_p(x, p).unwrap());
                prop_assert_eq!(mp.rank(), over_q);
            }
        }
    }
}
