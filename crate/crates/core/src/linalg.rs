//! Dense linear algebra over the fields in [`crate::gf`].
//!
//! Vectors are row vectors and matrices act on the right: the image of `v`
//! under `g` is `v * g`. Entries are stored one byte per coefficient; over
//! GF(2) Gaussian elimination runs on word-packed rows.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::Field;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            if r.iter().any(|&x| x as usize >= field.order()) {
                return Err(Error::Dimension(format!("entry out of range for {field}")));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut m = Self::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u8) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as u8))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field);
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let f = self.field;
        let mut out = Matrix::zero(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u8) -> Matrix {
        let f = self.field;
        Matrix { field: f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, s)).collect() }
    }

    /// Applies the field automorphism entrywise.
    pub fn frobenius(&self) -> Matrix {
        let f = self.field;
        Matrix { field: f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.frobenius(a)).collect() }
    }

    /// `self - 1`.
    pub fn minus_identity(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("{}x{} matrix is not square", self.rows, self.cols)));
        }
        Ok(self.sub(&Matrix::identity(self.field, self.rows)))
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.rows, "vector length does not match matrix");
        let f = self.field;
        let mut out = vec![0u8; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = self.row(k);
            for (o, &b) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(a, b));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, or `None` if singular or larger than `limit`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        if !self.is_square() || self.rank() < self.rows {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc == id {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    pub fn rank(&self) -> usize {
        self.rref().0
    }

    /// Reduced row echelon form of the row space.
    pub fn rref(&self) -> (usize, Subspace) {
        let (rows, pivots) = match self.field {
            Field::Gf2 => gf2::rref_rows(&self.row_vecs(), self.cols),
            _ => rref_scalar(self.field, self.row_vecs(), self.cols),
        };
        let rank = pivots.len();
        (rank, Subspace { field: self.field, ambient: self.cols, basis: rows, pivots })
    }

    /// The row space.
    pub fn row_space(&self) -> Subspace {
        self.rref().1
    }

    /// `{v : v * self = 0}`.
    pub fn left_kernel(&self) -> Subspace {
        let n = self.rows;
        let c = self.cols;
        let aug: Vec<Vec<u8>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| (i == j) as u8));
                r
            })
            .collect();
        let (rows, pivots) = match self.field {
            Field::Gf2 => gf2::rref_rows(&aug, c + n),
            _ => rref_scalar(self.field, aug, c + n),
        };
        let kernel: Vec<Vec<u8>> =
            rows.iter().zip(&pivots).filter(|(_, &p)| p >= c).map(|(r, _)| r[c..].to_vec()).collect();
        Subspace::span(self.field, n, kernel.iter().map(|v| v.as_slice()))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug: Vec<Vec<u8>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| (i == j) as u8));
                r
            })
            .collect();
        let (rows, pivots) = match self.field {
            Field::Gf2 => gf2::rref_rows(&aug, 2 * n),
            _ => rref_scalar(self.field, aug, 2 * n),
        };
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let inv: Vec<Vec<u8>> = rows[..n].iter().map(|r| r[n..].to_vec()).collect();
        Matrix::from_rows(self.field, n, &inv).ok()
    }

    pub fn det(&self) -> u8 {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut rows = self.row_vecs();
        let mut det = 1u8;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| rows[i][c] != 0) else { return 0 };
            if p != c {
                rows.swap(p, c);
                det = f.neg(det);
            }
            let pivot = rows[c][c];
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("nonzero pivot");
            for i in (c + 1)..n {
                let factor = f.mul(rows[i][c], inv);
                if factor != 0 {
                    for j in c..n {
                        let v = f.sub(rows[i][j], f.mul(factor, rows[c][j]));
                        rows[i][j] = v;
                    }
                }
            }
        }
        det
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.field, b.field);
        let mut m = Matrix::zero(a.field, a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.set(i, j, a.get(i, j));
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(a.rows + i, a.cols + j, b.get(i, j));
            }
        }
        m
    }

    /// Kronecker product; index `(i, j)` of the factors maps to `i * n + j`.
    pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.field, b.field);
        let f = a.field;
        Matrix::from_fn(f, a.rows * b.rows, a.cols * b.cols, |r, c| {
            f.mul(a.get(r / b.rows, c / b.cols), b.get(r % b.rows, c % b.cols))
        })
    }
}

/// `{v : v g = v}`.
pub fn fixed_space(g: &Matrix) -> Result<Subspace> {
    Ok(g.minus_identity()?.left_kernel())
}

/// `[V, g]`, the image of `g - 1`.
pub fn commutator_space(g: &Matrix) -> Result<Subspace> {
    Ok(g.minus_identity()?.row_space())
}

/// Scalar reference elimination; kept for differential testing of the packed path.
pub fn rref_scalar(field: Field, mut rows: Vec<Vec<u8>>, cols: usize) -> (Vec<Vec<u8>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Word-packed elimination over GF(2).
pub mod gf2 {
    pub fn pack(row: &[u8]) -> Vec<u64> {
        let mut words = vec![0u64; row.len().div_ceil(64).max(1)];
        for (j, &x) in row.iter().enumerate() {
            if x & 1 == 1 {
                words[j / 64] |= 1 << (j % 64);
            }
        }
        words
    }

    pub fn unpack(words: &[u64], cols: usize) -> Vec<u8> {
        (0..cols).map(|j| ((words[j / 64] >> (j % 64)) & 1) as u8).collect()
    }

    #[inline]
    fn bit(words: &[u64], j: usize) -> bool {
        (words[j / 64] >> (j % 64)) & 1 == 1
    }

    /// Reduces packed rows in place; returns the rank-many leading rows' pivots.
    pub fn rref_packed(rows: &mut Vec<Vec<u64>>, cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows.len()).find(|&i| bit(&rows[i], c)) else { continue };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && bit(row, c) {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x ^= y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    pub fn rref_rows(rows: &[Vec<u8>], cols: usize) -> (Vec<Vec<u8>>, Vec<usize>) {
        let mut packed: Vec<Vec<u64>> = rows.iter().map(|r| pack(r)).collect();
        let pivots = rref_packed(&mut packed, cols);
        (packed.iter().map(|w| unpack(w, cols)).collect(), pivots)
    }
}

/// Canonical, hashable encoding of a subspace: ambient dimension followed by
/// the bit-packed reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceKey(Vec<u64>);

impl SubspaceKey {
    pub fn words(&self) -> &[u64] {
        &self.0
    }
}

/// A subspace held by its reduced row echelon basis. Two equal subspaces have
/// identical representations, so the derived `Eq`/`Hash` are subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Matrix::identity(field, ambient).row_space()
    }

    pub fn span<'a>(field: Field, ambient: usize, vectors: impl IntoIterator<Item = &'a [u8]>) -> Self {
        let rows: Vec<Vec<u8>> = vectors.into_iter().map(|v| v.to_vec()).collect();
        if rows.is_empty() {
            return Self::zero(field, ambient);
        }
        Matrix::from_rows(field, ambient, &rows).expect("vectors match the ambient dimension").row_space()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Clears the pivot columns of `v`; the result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p];
            if c != 0 {
                for (x, &y) in out.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u8]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, v.len()));
        }
        Ok(self.reduce(v).iter().all(|&x| x == 0))
    }

    /// Coordinates with respect to the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        let coords: Vec<u8> = self.pivots.iter().map(|&p| v[p]).collect();
        let f = self.field;
        let mut recon = vec![0u8; self.ambient];
        for (row, &c) in self.basis.iter().zip(&coords) {
            for (x, &y) in recon.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        (recon == v).then_some(coords)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.basis.iter().all(|b| other.reduce(b).iter().all(|&x| x == 0)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        Ok(Subspace::span(self.field, self.ambient, self.basis.iter().chain(&other.basis).map(|v| v.as_slice())))
    }

    /// Zassenhaus: the rows of `[[A, A], [B, 0]]` whose left half vanishes
    /// after reduction span `A ∩ B` in the right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let n = self.ambient;
        let mut rows = Vec::new();
        for a in &self.basis {
            let mut r = a.clone();
            r.extend_from_slice(a);
            rows.push(r);
        }
        for b in &other.basis {
            let mut r = b.clone();
            r.extend(std::iter::repeat_n(0, n));
            rows.push(r);
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(self.field, n));
        }
        let m = Matrix::from_rows(self.field, 2 * n, &rows)?;
        let (_, ech) = m.rref();
        let inter: Vec<Vec<u8>> =
            ech.basis.iter().zip(&ech.pivots).filter(|(_, &p)| p >= n).map(|(r, _)| r[n..].to_vec()).collect();
        Ok(Subspace::span(self.field, n, inter.iter().map(|v| v.as_slice())))
    }

    pub fn canonical_key(&self) -> SubspaceKey {
        let bits = if self.field == Field::Gf2 { 1 } else { 2 };
        let per_word = 64 / bits;
        let mut words = vec![self.ambient as u64];
        for row in &self.basis {
            for chunk in row.chunks(per_word) {
                let w = chunk.iter().enumerate().fold(0u64, |acc, (i, &x)| acc | ((x as u64) << (i * bits)));
                words.push(w);
            }
        }
        SubspaceKey(words)
    }

    /// Image under a matrix acting on the right.
    pub fn image(&self, g: &Matrix) -> Subspace {
        let imgs: Vec<Vec<u8>> = self.basis.iter().map(|b| g.apply(b)).collect();
        Subspace::span(self.field, g.cols(), imgs.iter().map(|v| v.as_slice()))
    }

    pub fn is_invariant(&self, g: &Matrix) -> bool {
        self.basis.iter().all(|b| self.reduce(&g.apply(b)).iter().all(|&x| x == 0))
    }

    /// All `q^dim` vectors, in coordinate order.
    pub fn vectors(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        let f = self.field;
        let d = self.dim();
        (0..f.space_size(d)).map(move |code| {
            let coords = f.decode(code, d);
            let mut v = vec![0u8; self.ambient];
            for (row, &c) in self.basis.iter().zip(&coords) {
                if c != 0 {
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(c, y));
                    }
                }
            }
            v
        })
    }

    /// One representative per 1-space (leading nonzero coordinate equal to 1).
    pub fn points(&self) -> Vec<Vec<u8>> {
        self.vectors().filter(|v| v.iter().find(|&&x| x != 0) == Some(&1)).collect()
    }

    /// The subspaces of dimension `k` of this subspace.
    pub fn subspaces(&self, k: usize) -> Vec<Subspace> {
        let d = self.dim();
        all_subspaces(self.field, d, k)
            .into_iter()
            .map(|s| {
                let vs: Vec<Vec<u8>> = s
                    .basis
                    .iter()
                    .map(|coords| {
                        let f = self.field;
                        let mut v = vec![0u8; self.ambient];
                        for (row, &c) in self.basis.iter().zip(coords) {
                            for (x, &y) in v.iter_mut().zip(row) {
                                *x = f.add(*x, f.mul(c, y));
                            }
                        }
                        v
                    })
                    .collect();
                Subspace::span(self.field, self.ambient, vs.iter().map(|v| v.as_slice()))
            })
            .collect()
    }
}

/// Every `k`-dimensional subspace of `F^n`, generated directly as reduced
/// echelon matrices (pivot set, then free entries).
pub fn all_subspaces(field: Field, n: usize, k: usize) -> Vec<Subspace> {
    fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            choose(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    if k > n {
        return Vec::new();
    }
    let mut pivot_sets = Vec::new();
    choose(n, k, 0, &mut Vec::new(), &mut pivot_sets);
    let q = field.order() as u64;
    let mut out = Vec::new();
    for pivots in pivot_sets {
        // free positions: (row r, col c) with c > pivots[r] and c not a pivot
        let free: Vec<(usize, usize)> =
            (0..k).flat_map(|r| ((pivots[r] + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c))).collect();
        for code in 0..q.pow(free.len() as u32) {
            let vals = field.decode(code, free.len());
            let mut basis = vec![vec![0u8; n]; k];
            for (r, &p) in pivots.iter().enumerate() {
                basis[r][p] = 1;
            }
            for (&(r, c), &x) in free.iter().zip(&vals) {
                basis[r][c] = x;
            }
            out.push(Subspace { field, ambient: n, basis, pivots: pivots.clone() });
        }
    }
    out
}

/// The section `outer / inner` with a fixed complement basis, used to read
/// off induced actions on subquotients.
#[derive(Clone, Debug)]
pub struct Subquotient {
    inner: Subspace,
    complement: Subspace,
}

impl Subquotient {
    pub fn new(outer: &Subspace, inner: &Subspace) -> Result<Self> {
        if !inner.is_subspace_of(outer)? {
            return Err(Error::Precondition("inner subspace is not contained in outer".into()));
        }
        let reduced: Vec<Vec<u8>> = outer.basis.iter().map(|b| inner.reduce(b)).collect();
        let complement = Subspace::span(outer.field, outer.ambient, reduced.iter().map(|v| v.as_slice()));
        Ok(Subquotient { inner: inner.clone(), complement })
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    /// Coordinates of `v + inner`; `v` must lie in `outer`.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        self.complement.coordinates(&self.inner.reduce(v))
    }

    pub fn representatives(&self) -> &[Vec<u8>] {
        self.complement.basis()
    }

    /// Matrix of the induced action of `g`; both subspaces must be `g`-invariant.
    pub fn induced(&self, g: &Matrix) -> Result<Matrix> {
        let rows: Option<Vec<Vec<u8>>> = self.complement.basis.iter().map(|b| self.coordinates(&g.apply(b))).collect();
        let rows = rows.ok_or_else(|| Error::Precondition("matrix does not preserve the section".into()))?;
        Matrix::from_rows(self.complement.field, self.dim(), &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn e(n: usize, i: usize) -> Vec<u8> {
        (0..n).map(|j| (i == j) as u8).collect()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(Field::Gf3, 4);
        assert_eq!(id.rank(), 4);
        let z = Matrix::zero(Field::Gf2, 3, 5);
        let (r, b) = z.rref();
        assert_eq!(r, 0);
        assert_eq!(b.dim(), 0);
        let m = Matrix::from_rows(Field::Gf2, 3, &[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 0]]).unwrap();
        let (r, b) = m.rref();
        assert_eq!(r, 2);
        assert_eq!(b.basis(), &[e(3, 0), e(3, 1)]);
    }

    #[test]
    fn fixed_and_commutator_spaces() {
        let id = Matrix::identity(Field::Gf2, 6);
        assert_eq!(fixed_space(&id).unwrap().dim(), 6);
        assert_eq!(commutator_space(&id).unwrap().dim(), 0);
        // transvection x -> x + B(x, e1) e1 for the antidiagonal form: B(x, e1) = x6
        let mut t = Matrix::identity(Field::Gf2, 6);
        t.set(5, 0, 1);
        assert_eq!(fixed_space(&t).unwrap().dim(), 5);
        assert_eq!(commutator_space(&t).unwrap().dim(), 1);
        let rect = Matrix::zero(Field::Gf2, 2, 3);
        assert!(matches!(fixed_space(&rect), Err(Error::Dimension(_))));
    }

    #[test]
    fn subspace_lattice_examples() {
        let f = Field::Gf2;
        let a = Subspace::span(f, 4, [e(4, 0).as_slice()]);
        let b = Subspace::span(f, 4, [e(4, 1).as_slice()]);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersect(&a).unwrap(), a);
        let ab = a.sum(&b).unwrap();
        assert_eq!(ab, Subspace::span(f, 4, [e(4, 0).as_slice(), e(4, 1).as_slice()]));
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        let other = Subspace::zero(f, 5);
        assert_eq!(a.sum(&other), Err(Error::AmbientMismatch(4, 5)));
        assert!(a.contains(&[0, 0, 0]).is_err());
    }

    #[test]
    fn constructed_pair_meets_in_a_line() {
        // A = <e1, e2, e3>, B = <e3, e4, e5> in GF(2)^6: A ∩ B = <e3>, so A + B has dim 5.
        let f = Field::Gf2;
        let a = Subspace::span(f, 6, [e(6, 0), e(6, 1), e(6, 2)].iter().map(|v| v.as_slice()));
        let b = Subspace::span(f, 6, [e(6, 2), e(6, 3), e(6, 4)].iter().map(|v| v.as_slice()));
        assert_eq!(a.intersect(&b).unwrap().dim(), 1);
        assert_eq!(a.sum(&b).unwrap().dim(), 5);
    }

    #[test]
    fn canonical_key_injective_on_small_subspaces() {
        let mut keys = HashSet::new();
        let mut count = 0;
        for k in 0..=3 {
            for s in all_subspaces(Field::Gf2, 6, k) {
                keys.insert(s.canonical_key());
                count += 1;
            }
        }
        // Gaussian binomials [6,k]_2 for k = 0..3
        assert_eq!(count, 1 + 63 + 651 + 1395);
        assert_eq!(keys.len(), count);
    }

    #[test]
    fn subspace_counts_gf3() {
        assert_eq!(all_subspaces(Field::Gf3, 4, 1).len(), 40);
        assert_eq!(all_subspaces(Field::Gf3, 4, 2).len(), 130);
        assert_eq!(all_subspaces(Field::Gf3, 4, 3).len(), 40);
    }

    #[test]
    fn subquotient_induced_action() {
        let f = Field::Gf2;
        // upper unitriangular 3x3 acting on rows: e1 -> e1 + e2 + e3, e2 -> e2 + e3, e3 -> e3
        let g = Matrix::from_rows(f, 3, &[vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
        let inner = Subspace::span(f, 3, [e(3, 2).as_slice()]);
        let outer = Subspace::full(f, 3);
        let sq = Subquotient::new(&outer, &inner).unwrap();
        let ind = sq.induced(&g).unwrap();
        assert_eq!(ind, Matrix::from_rows(f, 2, &[vec![1, 1], vec![0, 1]]).unwrap());
    }

    fn matrix_strategy() -> impl Strategy<Value = Matrix> {
        (0usize..3, 1usize..9, 1usize..9).prop_flat_map(|(fi, r, c)| {
            let f = Field::ALL[fi];
            proptest::collection::vec(0u8..f.order() as u8, r * c)
                .prop_map(move |data| Matrix::from_fn(f, r, c, |i, j| data[i * c + j]))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn rank_of_transpose(m in matrix_strategy()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rref_idempotent(m in matrix_strategy()) {
            let (_, s) = m.rref();
            if s.dim() > 0 {
                let again = Matrix::from_rows(m.field(), m.cols(), s.basis()).unwrap().row_space();
                prop_assert_eq!(again, s);
            }
        }

        #[test]
        fn packed_gf2_matches_scalar(data in proptest::collection::vec(0u8..2, 1..200), cols in 1usize..80) {
            let rows: Vec<Vec<u8>> = data.chunks(cols).filter(|c| c.len() == cols).map(|c| c.to_vec()).collect();
            prop_assume!(!rows.is_empty());
            let packed = gf2::rref_rows(&rows, cols);
            let scalar = rref_scalar(Field::Gf2, rows, cols);
            prop_assert_eq!(packed, scalar);
        }

        #[test]
        fn dimension_formula(m1 in matrix_strategy(), seed in 0u64..1000) {
            // a second subspace of the same ambient space from a shifted matrix
            let f = m1.field();
            let n = m1.cols();
            let m2 = Matrix::from_fn(f, m1.rows(), n, |i, j| ((i as u64 * 7 + j as u64 * 3 + seed) % f.order() as u64) as u8);
            let a = m1.row_space();
            let b = m2.row_space();
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            prop_assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
            prop_assert!(i.is_subspace_of(&a).unwrap() && i.is_subspace_of(&b).unwrap());
        }

        #[test]
        fn kernel_and_inverse(m in matrix_strategy()) {
            let k = m.left_kernel();
            prop_assert_eq!(k.dim() + m.rank(), m.rows());
            for v in k.basis() {
                prop_assert!(m.apply(v).iter().all(|&x| x == 0));
            }
            if m.is_square() {
                match m.inverse() {
                    Some(inv) => prop_assert!(m.mul(&inv).is_identity()),
                    None => prop_assert!(m.rank() < m.rows()),
                }
            }
        }
    }
}
