use std::fmt;

use super::Rational;
use crate::Error;

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        QMatrix { rows: r, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&v| Rational::from_int(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Rational] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn add(&self, o: &QMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &QMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    /// Product skipping zero entries of `self`, which keeps powers of
    /// nilpotent adjoint matrices cheap.
    pub fn mul(&self, o: &QMatrix) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = rref_rows(&mut rows, self.cols);
        rows.truncate(self.rows);
        (QMatrix::from_rows(self.cols, rows), pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Rational>> = self.to_rows();
        forward_rank(&mut rows, self.cols)
    }

    /// Basis of the null space as rows in reduced echelon form.
    pub fn kernel_basis(&self) -> QMatrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                let x = r.get(i, f);
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            basis.push(v);
        }
        let k = QMatrix::from_rows(self.cols, basis);
        k.rref().0
    }

    /// Particular solution of `self · x = b` with free variables set to zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>, Error> {
        if b.len() != self.rows {
            return Err(Error::Input(format!(
                "right-hand side has length {} but the matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rows[i][self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, 2 * n);
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        Some(QMatrix::from_rows(n, rows.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut rows = self.to_rows();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            let piv = rows[c][c].clone();
            det = &det * &piv;
            let inv = piv.recip();
            let (top, bottom) = rows.split_at_mut(c + 1);
            let prow = &top[c];
            for r in bottom.iter_mut() {
                if r[c].is_zero() {
                    continue;
                }
                let f = &r[c] * &inv;
                for j in c..n {
                    if !prow[j].is_zero() {
                        r[j] = r[j].sub_mul(&f, &prow[j]);
                    }
                }
            }
        }
        det
    }
}

/// In-place Gauss–Jordan on `rows`; zero rows are dropped from the front
/// part and moved to the end. Returns pivot columns.
pub(crate) fn rref_rows(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for v in rows[r][c..].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }
        let nz: Vec<usize> = (c + 1..cols).filter(|&j| !rows[r][j].is_zero()).collect();
        let prow = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = std::mem::take(&mut row[c]);
            for &j in &nz {
                row[j] = row[j].sub_mul(&f, &prow[j]);
            }
        }
        rows[r] = prow;
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn forward_rank(rows: &mut [Vec<Rational>], cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        let nz: Vec<usize> = (c + 1..cols).filter(|&j| !rows[r][j].is_zero()).collect();
        let (top, bottom) = rows.split_at_mut(r + 1);
        let prow = &top[r];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &std::mem::take(&mut row[c]) * &inv;
            for &j in &nz {
                row[j] = row[j].sub_mul(&f, &prow[j]);
            }
        }
        r += 1;
    }
    r
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Incremental echelon basis: rows are inserted one at a time and reduced
/// against the pivots seen so far. Used for tall systems where the rank is
/// reached long before all rows are read.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduce `v` modulo the current span.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (j, x) in row.iter().enumerate().skip(p) {
                if !x.is_zero() {
                    v[j] = v[j].sub_mul(&f, x);
                }
            }
        }
    }

    /// Insert `v`; returns true when it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // keep old rows reduced at the new pivot so `reduce` stays one pass
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (j, x) in v.iter().enumerate().skip(p) {
                if !x.is_zero() {
                    row[j] = row[j].sub_mul(&f, x);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Rows in reduced echelon form, sorted by pivot.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The span as a reduced echelon matrix and its pivots.
    pub fn into_rref(self) -> (QMatrix, Vec<usize>) {
        (QMatrix::from_rows(self.cols, self.rows), self.pivots)
    }
}
