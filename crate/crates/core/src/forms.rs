//! Bilinear, quadratic and hermitian forms, Witt types, the GF(3) point and
//! 2-space taxonomy, and generators for isometry groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Bilinear,
    Quadratic,
    Hermitian,
}

impl FormKind {
    fn name(self) -> &'static str {
        match self {
            FormKind::Bilinear => "bilinear",
            FormKind::Quadratic => "quadratic",
            FormKind::Hermitian => "hermitian",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WittType {
    Plus,
    Minus,
}

impl fmt::Display for WittType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WittType::Plus => "plus",
            WittType::Minus => "minus",
        })
    }
}

/// Type of a 1-space under a GF(3) quadratic form; q-value 1 is labelled plus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointType {
    Singular,
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TwoSpaceType {
    S,
    DP,
    DM,
    #[serde(rename = "N+")]
    NPlus,
    #[serde(rename = "N-")]
    NMinus,
}

impl TwoSpaceType {
    pub const ALL: [TwoSpaceType; 5] =
        [TwoSpaceType::S, TwoSpaceType::DP, TwoSpaceType::DM, TwoSpaceType::NPlus, TwoSpaceType::NMinus];

    pub fn label(self) -> &'static str {
        match self {
            TwoSpaceType::S => "S",
            TwoSpaceType::DP => "DP",
            TwoSpaceType::DM => "DM",
            TwoSpaceType::NPlus => "N+",
            TwoSpaceType::NMinus => "N-",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointTypeCensus {
    pub n_singular: usize,
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_s: usize,
    pub n_dp: usize,
    pub n_dm: usize,
    pub n_nplus: usize,
    pub n_nminus: usize,
}

/// A form on `field^dim`.
///
/// Bilinear and hermitian forms store their Gram matrix, with
/// `B(x, y) = x G y^T` and `B(x, y) = x G frob(y)^T` respectively. Quadratic
/// forms store an upper-triangular coefficient table `c` with
/// `q(x) = sum_{i <= j} c_ij x_i x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    kind: FormKind,
    matrix: Matrix,
}

impl Form {
    pub fn bilinear(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Dimension("Gram matrix must be square".into()));
        }
        Ok(Form { kind: FormKind::Bilinear, matrix: gram })
    }

    pub fn hermitian(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Dimension("Gram matrix must be square".into()));
        }
        if gram.field() != Field::Gf4 {
            return Err(Error::Precondition("hermitian forms are defined over GF(4)".into()));
        }
        if gram.transpose().frobenius() != gram {
            return Err(Error::Precondition("Gram matrix is not hermitian".into()));
        }
        Ok(Form { kind: FormKind::Hermitian, matrix: gram })
    }

    /// Any square coefficient matrix; `c_ij` and `c_ji` are merged above the diagonal.
    pub fn quadratic(coeffs: Matrix) -> Result<Self> {
        if !coeffs.is_square() {
            return Err(Error::Dimension("coefficient table must be square".into()));
        }
        let f = coeffs.field();
        let n = coeffs.rows();
        let ut = Matrix::from_fn(f, n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => f.add(coeffs.get(i, j), coeffs.get(j, i)),
            std::cmp::Ordering::Equal => coeffs.get(i, i),
            std::cmp::Ordering::Greater => 0,
        });
        Ok(Form { kind: FormKind::Quadratic, matrix: ut })
    }

    /// Quadratic form from a list of monomials `(i, j, c)` meaning `c x_i x_j`.
    pub fn quadratic_from_terms(field: Field, dim: usize, terms: &[(usize, usize, u8)]) -> Result<Self> {
        let mut m = Matrix::zero(field, dim, dim);
        for &(i, j, c) in terms {
            if i >= dim || j >= dim {
                return Err(Error::Dimension(format!("monomial index out of range for dimension {dim}")));
            }
            let (a, b) = (i.min(j), i.max(j));
            m.set(a, b, field.add(m.get(a, b), c));
        }
        Form::quadratic(m)
    }

    /// Alternating form with `B(e_i, e_{n-1-i}) = 1` for `i < n/2`.
    pub fn symplectic_standard(field: Field, dim: usize) -> Result<Self> {
        if !dim.is_multiple_of(2) {
            return Err(Error::Dimension("symplectic space must have even dimension".into()));
        }
        let gram = Matrix::from_fn(field, dim, dim, |i, j| {
            if i + j == dim - 1 {
                if i < j {
                    1
                } else {
                    field.neg(1)
                }
            } else {
                0
            }
        });
        Form::bilinear(gram)
    }

    /// `x1 x2 + x3 x4 + ...` on `field^{2m}`.
    pub fn hyperbolic(field: Field, m: usize) -> Self {
        let terms: Vec<(usize, usize, u8)> = (0..m).map(|k| (2 * k, 2 * k + 1, 1)).collect();
        Form::quadratic_from_terms(field, 2 * m, &terms).expect("indices in range")
    }

    /// An anisotropic 2-space followed by `m - 1` hyperbolic planes.
    pub fn elliptic(field: Field, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Dimension("elliptic form needs dimension at least 2".into()));
        }
        let mut terms = match field {
            Field::Gf2 => vec![(0, 0, 1), (0, 1, 1), (1, 1, 1)],
            Field::Gf3 => vec![(0, 0, 1), (1, 1, 1)],
            Field::Gf4 => vec![(0, 0, 1), (0, 1, 1), (1, 1, 2)],
        };
        terms.extend((1..m).map(|k| (2 * k, 2 * k + 1, 1)));
        Form::quadratic_from_terms(field, 2 * m, &terms)
    }

    /// Hermitian form on `GF(4)^n` with antidiagonal identity Gram matrix.
    pub fn hermitian_standard(dim: usize) -> Self {
        let gram = Matrix::from_fn(Field::Gf4, dim, dim, |i, j| (i + j == dim - 1) as u8);
        Form::hermitian(gram).expect("antidiagonal identity is hermitian")
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Gram matrix, or the upper-triangular coefficient table for quadratic forms.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    fn expect_kind(&self, kind: FormKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::FormKind { expected: kind.name(), got: self.kind.name() });
        }
        Ok(())
    }

    /// `B(x, y)` for bilinear and hermitian forms; the polarization for quadratic ones.
    pub fn pair(&self, x: &[u8], y: &[u8]) -> u8 {
        let f = self.field();
        match self.kind {
            FormKind::Bilinear => dot(f, &self.matrix.apply(x), y),
            FormKind::Hermitian => {
                let fy: Vec<u8> = y.iter().map(|&a| f.frobenius(a)).collect();
                dot(f, &self.matrix.apply(x), &fy)
            }
            FormKind::Quadratic => {
                let xy: Vec<u8> = x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect();
                f.sub(f.sub(self.q(&xy), self.q(x)), self.q(y))
            }
        }
    }

    /// Value of a quadratic form (for other kinds, `B(x, x)`).
    pub fn q(&self, x: &[u8]) -> u8 {
        if self.kind != FormKind::Quadratic {
            return self.pair(x, x);
        }
        let f = self.field();
        let n = self.dim();
        let mut acc = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in i..n {
                let c = self.matrix.get(i, j);
                if c != 0 && x[j] != 0 {
                    acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
                }
            }
        }
        acc
    }

    pub fn polarize(&self) -> Result<Form> {
        self.expect_kind(FormKind::Quadratic)?;
        Form::bilinear(self.matrix.add(&self.matrix.transpose()))
    }

    /// Gram matrix of the associated sesquilinear/bilinear pairing.
    fn gram(&self) -> Matrix {
        match self.kind {
            FormKind::Quadratic => self.matrix.add(&self.matrix.transpose()),
            _ => self.matrix.clone(),
        }
    }

    pub fn is_alternating(&self) -> bool {
        let n = self.dim();
        let g = self.gram();
        (0..n).all(|i| g.get(i, i) == 0) && g.transpose().scale(self.field().neg(1)) == g
    }

    /// Radical of the pairing `{x : B(x, y) = 0 for all y}`.
    pub fn pairing_radical(&self) -> Subspace {
        self.gram().transpose().left_kernel()
    }

    /// Bilinear/hermitian: the pairing radical. Quadratic: singular vectors of
    /// the polarization radical (a subspace in every characteristic).
    pub fn radical(&self) -> Subspace {
        let r = self.pairing_radical();
        if self.kind != FormKind::Quadratic || self.field().characteristic() != 2 {
            return r;
        }
        let singular: Vec<Vec<u8>> = r.vectors().filter(|v| self.q(v) == 0).collect();
        Subspace::span(self.field(), self.dim(), singular.iter().map(|v| v.as_slice()))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().dim() == 0
    }

    /// Number of nonzero `v` with `q(v) = 0` (exhaustive scan).
    pub fn singular_count(&self) -> u64 {
        let f = self.field();
        (1..f.space_size(self.dim())).filter(|&c| self.q(&f.decode(c, self.dim())) == 0).count() as u64
    }

    /// Witt type of the nondegenerate quotient `V / radical`, decided by the
    /// number of singular vectors, together with the radical.
    pub fn witt_type(&self) -> Result<(WittType, Subspace)> {
        self.expect_kind(FormKind::Quadratic)?;
        if self.dim() > 8 {
            return Err(Error::Precondition("witt_type scans at most 8 dimensions".into()));
        }
        let rad = self.radical();
        let q = self.field().order() as u64;
        let r = rad.dim() as u32;
        let quot = self.dim() - rad.dim();
        if quot == 0 || quot % 2 == 1 {
            return Err(Error::NotNondegenerate);
        }
        let m = (quot / 2) as u32;
        let total = self.singular_count() + 1;
        if !total.is_multiple_of(q.pow(r)) {
            return Err(Error::NotNondegenerate);
        }
        let n_quot = total / q.pow(r) - 1;
        let plus = (q.pow(m) - 1) * (q.pow(m - 1) + 1);
        let minus = (q.pow(m) + 1) * (q.pow(m - 1) - 1);
        if n_quot == plus {
            Ok((WittType::Plus, rad))
        } else if n_quot == minus {
            Ok((WittType::Minus, rad))
        } else {
            Err(Error::NotNondegenerate)
        }
    }

    fn expect_gf3_quadratic(&self) -> Result<()> {
        self.expect_kind(FormKind::Quadratic)?;
        if self.field() != Field::Gf3 {
            return Err(Error::Precondition("point types are defined for GF(3) forms".into()));
        }
        Ok(())
    }

    pub fn point_type(&self, v: &[u8]) -> Result<PointType> {
        self.expect_gf3_quadratic()?;
        if v.len() != self.dim() {
            return Err(Error::AmbientMismatch(self.dim(), v.len()));
        }
        if v.iter().all(|&x| x == 0) {
            return Err(Error::ZeroVector);
        }
        Ok(match self.q(v) {
            0 => PointType::Singular,
            1 => PointType::Plus,
            _ => PointType::Minus,
        })
    }

    /// Counts of singular, plus and minus 1-spaces in `space`.
    pub fn point_counts(&self, space: &Subspace) -> Result<(usize, usize, usize)> {
        let mut counts = (0, 0, 0);
        for p in space.points() {
            match self.point_type(&p)? {
                PointType::Singular => counts.0 += 1,
                PointType::Plus => counts.1 += 1,
                PointType::Minus => counts.2 += 1,
            }
        }
        Ok(counts)
    }

    pub fn subspace_type_2dim(&self, e: &Subspace) -> Result<TwoSpaceType> {
        self.expect_gf3_quadratic()?;
        if e.dim() != 2 {
            return Err(Error::Dimension(format!("expected a 2-space, got dimension {}", e.dim())));
        }
        match self.point_counts(e)? {
            (4, 0, 0) => Ok(TwoSpaceType::S),
            (1, 3, 0) => Ok(TwoSpaceType::DP),
            (1, 0, 3) => Ok(TwoSpaceType::DM),
            (2, 1, 1) => Ok(TwoSpaceType::NPlus),
            (0, 2, 2) => Ok(TwoSpaceType::NMinus),
            _ => Err(Error::ImpossibleCensus),
        }
    }

    /// Point census of the whole space and type counts over all 2-spaces.
    pub fn census(&self) -> Result<PointTypeCensus> {
        self.expect_gf3_quadratic()?;
        let full = Subspace::full(self.field(), self.dim());
        let (s, p, m) = self.point_counts(&full)?;
        let mut c = PointTypeCensus { n_singular: s, n_plus: p, n_minus: m, ..Default::default() };
        for e in crate::linalg::all_subspaces(self.field(), self.dim(), 2) {
            match self.subspace_type_2dim(&e)? {
                TwoSpaceType::S => c.n_s += 1,
                TwoSpaceType::DP => c.n_dp += 1,
                TwoSpaceType::DM => c.n_dm += 1,
                TwoSpaceType::NPlus => c.n_nplus += 1,
                TwoSpaceType::NMinus => c.n_nminus += 1,
            }
        }
        Ok(c)
    }

    /// A nonzero singular vector of `x`, first in coordinate order.
    pub fn singular_point_in(&self, x: &Subspace) -> Option<Vec<u8>> {
        x.vectors().skip(1).find(|v| self.q(v) == 0)
    }

    /// Whether `g` is an isometry.
    pub fn preserves(&self, g: &Matrix) -> bool {
        self.similitude_multiplier(g) == Some(1)
    }

    /// The `lambda` with `form(xg) = lambda form(x)`, if `g` is a similitude.
    pub fn similitude_multiplier(&self, g: &Matrix) -> Option<u8> {
        let f = self.field();
        let n = self.dim();
        if g.rows() != n || g.cols() != n {
            return None;
        }
        let basis: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| (i == j) as u8).collect()).collect();
        let images: Vec<Vec<u8>> = basis.iter().map(|b| g.apply(b)).collect();
        let mut pairs: Vec<(u8, u8)> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                pairs.push((self.pair(&images[i], &images[j]), self.pair(&basis[i], &basis[j])));
            }
            if self.kind == FormKind::Quadratic {
                pairs.push((self.q(&images[i]), self.q(&basis[i])));
            }
        }
        let lambda = pairs.iter().find(|(_, old)| *old != 0).map(|&(new, old)| f.mul(new, f.inv(old).unwrap()))?;
        if lambda == 0 {
            return None;
        }
        pairs.iter().all(|&(new, old)| new == f.mul(lambda, old)).then_some(lambda)
    }

    /// Generators of the full isometry group: transvections (symplectic),
    /// reflections (odd orthogonal), orthogonal transvections (even
    /// characteristic orthogonal), unitary transvections plus a torus element
    /// (hermitian).
    pub fn isometry_generators(&self) -> Result<Vec<Matrix>> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        let f = self.field();
        let n = self.dim();
        let nonzero: Vec<Vec<u8>> = (1..f.space_size(n)).map(|c| f.decode(c, n)).collect();
        let projective = |v: &Vec<u8>| v.iter().find(|&&x| x != 0) == Some(&1);
        let mut gens = Vec::new();
        match self.kind {
            FormKind::Bilinear => {
                if !self.is_alternating() {
                    return Err(Error::Precondition("only alternating bilinear forms are supported".into()));
                }
                for v in nonzero.iter().filter(|v| projective(v)) {
                    for a in 1..f.order() as u8 {
                        gens.push(self.transvection(v, a));
                    }
                }
            }
            FormKind::Quadratic => {
                for v in nonzero.iter().filter(|v| projective(v)) {
                    let qv = self.q(v);
                    if qv == 0 {
                        continue;
                    }
                    if f.characteristic() == 2 && self.pairing_radical().contains(v)? {
                        continue;
                    }
                    // x -> x - B(x, v)/q(v) v
                    gens.push(self.transvection(v, f.neg(f.inv(qv)?)));
                }
                // O4+(2) is the one case where these generate a proper subgroup (index 2)
                if f == Field::Gf2 && n == 4 && self.witt_type()?.0 == WittType::Plus {
                    gens.push(self.missing_o4_plus_coset(&gens));
                }
            }
            FormKind::Hermitian => {
                gens = self.unitary_transvections();
                let mut t = Matrix::identity(f, n);
                t.set(0, 0, 2);
                t.set(n - 1, n - 1, 2);
                if n > 1 && self.preserves(&t) {
                    gens.push(t);
                }
            }
        }
        Ok(gens)
    }

    fn missing_o4_plus_coset(&self, gens: &[Matrix]) -> Matrix {
        let f = self.field();
        let mut seen = std::collections::HashSet::from([Matrix::identity(f, 4)]);
        let mut frontier = vec![Matrix::identity(f, 4)];
        while let Some(a) = frontier.pop() {
            for g in gens {
                let b = a.mul(g);
                if seen.insert(b.clone()) {
                    frontier.push(b);
                }
            }
        }
        (0..f.space_size(16))
            .map(|c| {
                let e = f.decode(c, 16);
                Matrix::from_fn(f, 4, 4, |i, j| e[4 * i + j])
            })
            .find(|m| m.rank() == 4 && self.preserves(m) && !seen.contains(m))
            .expect("O4+(2) has isometries outside the transvection subgroup")
    }

    /// `x -> x + a B(x, v) v` for isotropic `v` (trace-zero `a` is 1 over GF(4)).
    pub fn unitary_transvections(&self) -> Vec<Matrix> {
        let f = self.field();
        let n = self.dim();
        (1..f.space_size(n))
            .map(|c| f.decode(c, n))
            .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1) && self.pair(v, v) == 0)
            .map(|v| self.transvection(&v, 1))
            .collect()
    }

    /// The linear map `x -> x + a B(x, v) v`.
    pub fn transvection(&self, v: &[u8], a: u8) -> Matrix {
        let f = self.field();
        let n = self.dim();
        let mut m = Matrix::identity(f, n);
        for i in 0..n {
            let e: Vec<u8> = (0..n).map(|j| (i == j) as u8).collect();
            let c = f.mul(a, self.pair(&e, v));
            for j in 0..n {
                m.set(i, j, f.add(m.get(i, j), f.mul(c, v[j])));
            }
        }
        m
    }
}

fn dot(f: Field, x: &[u8], y: &[u8]) -> u8 {
    x.iter().zip(y).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
}

/// Invariant form recovered for an elementary abelian pair.
#[derive(Clone, Debug)]
pub struct RecoveredForm {
    pub form: Form,
    pub witness: Vec<u8>,
    pub witt: WittType,
    /// Witt types of all nondegenerate invariant forms making the witness singular.
    pub types_seen: Vec<WittType>,
}

/// For `A = <a, b>` in `GL_4(p)`, `p` odd, elementary abelian of order `p^2`
/// with `[V,a] = C_V(b)` and `[V,b] = C_V(a)` distinct 2-spaces, find a
/// nondegenerate `A`-invariant quadratic form in which `v` (default: the first
/// vector outside `[V,A]`) is singular.
pub fn recover_invariant_form(a: &Matrix, b: &Matrix, v: Option<&[u8]>) -> Result<Option<RecoveredForm>> {
    let f = a.field();
    if f.characteristic() == 2 || b.field() != f {
        return Err(Error::Precondition("pair must lie in GL_4(p) for odd p".into()));
    }
    if a.rows() != 4 || !a.is_square() || b.rows() != 4 || !b.is_square() {
        return Err(Error::Precondition("pair must consist of 4x4 matrices".into()));
    }
    let p = f.characteristic() as u64;
    if a.mul(b) != b.mul(a) || !a.pow(p).is_identity() || !b.pow(p).is_identity() || a.is_identity() {
        return Err(Error::Precondition("pair does not generate an elementary abelian group".into()));
    }
    if (0..p).any(|k| a.pow(k) == *b) {
        return Err(Error::Precondition("b lies in <a>".into()));
    }
    let va = crate::linalg::commutator_space(a)?;
    let vb = crate::linalg::commutator_space(b)?;
    let ca = crate::linalg::fixed_space(a)?;
    let cb = crate::linalg::fixed_space(b)?;
    if va != cb || vb != ca || va == vb || va.dim() != 2 || vb.dim() != 2 {
        return Err(Error::Precondition("commutator and centralizer spaces do not match".into()));
    }
    let va_b = va.sum(&vb)?;
    let witness = match v {
        Some(v) => {
            if va_b.contains(v)? {
                return Err(Error::Precondition("witness lies in [V,A]".into()));
            }
            v.to_vec()
        }
        None => (1..f.space_size(4)).map(|c| f.decode(c, 4)).find(|x| !va_b.contains(x).unwrap()).unwrap(),
    };

    // unknowns: symmetric S with q(x) = x S x^T; basis E_ij (i <= j)
    let idx: Vec<(usize, usize)> = (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).collect();
    let basis_mat = |i: usize, j: usize| {
        let mut e = Matrix::zero(f, 4, 4);
        e.set(i, j, 1);
        e.set(j, i, 1);
        e
    };
    let rows: Vec<Vec<u8>> = idx
        .iter()
        .map(|&(i, j)| {
            let e = basis_mat(i, j);
            let mut row = Vec::new();
            for g in [a, b] {
                let d = g.mul(&e).mul(&g.transpose()).sub(&e);
                for r in 0..4 {
                    for c in 0..4 {
                        row.push(d.get(r, c));
                    }
                }
            }
            row
        })
        .collect();
    let system = Matrix::from_rows(f, 32, &rows)?;
    let solutions = system.left_kernel();
    let mut found: Option<Form> = None;
    let mut types_seen = Vec::new();
    for coeffs in solutions.vectors().skip(1) {
        let mut s = Matrix::zero(f, 4, 4);
        for (&(i, j), &c) in idx.iter().zip(&coeffs) {
            // basis E_ij contributes 2 x_i x_j off the diagonal and x_i^2 on it
            if i == j {
                s.set(i, i, f.add(s.get(i, i), c));
            } else {
                s.set(i, j, f.add(s.get(i, j), f.mul(2, c)));
            }
        }
        let form = Form::quadratic(s)?;
        if !form.is_nondegenerate() || form.q(&witness) != 0 {
            continue;
        }
        let (t, _) = form.witt_type()?;
        if !types_seen.contains(&t) {
            types_seen.push(t);
        }
        if found.is_none() {
            found = Some(form);
        }
    }
    types_seen.sort();
    Ok(found.map(|form| {
        let witt = form.witt_type().expect("nondegenerate").0;
        RecoveredForm { form, witness, witt, types_seen }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> Vec<u8> {
        (0..n).map(|j| (i == j) as u8).collect()
    }

    #[test]
    fn polarization_examples() {
        let q = Form::quadratic_from_terms(Field::Gf2, 2, &[(0, 1, 1)]).unwrap();
        assert_eq!(q.polarize().unwrap().pair(&e(2, 0), &e(2, 1)), 1);
        let q = Form::quadratic_from_terms(Field::Gf2, 1, &[(0, 0, 1)]).unwrap();
        assert!(q.polarize().unwrap().matrix().is_zero());
        let q = Form::quadratic_from_terms(Field::Gf3, 2, &[(0, 0, 1), (0, 1, 1), (1, 1, 1)]).unwrap();
        assert_eq!(q.polarize().unwrap().pair(&e(2, 0), &e(2, 1)), 1);
        let b = Form::symplectic_standard(Field::Gf2, 2).unwrap();
        assert_eq!(b.polarize(), Err(Error::FormKind { expected: "quadratic", got: "bilinear" }));
    }

    #[test]
    fn polarization_identity_exhaustive() {
        for field in Field::ALL {
            for code in 0..field.space_size(10).min(400) {
                let coeffs = field.decode(code * 7919 % field.space_size(10), 10);
                let mut terms = Vec::new();
                let mut k = 0;
                for i in 0..4 {
                    for j in i..4 {
                        terms.push((i, j, coeffs[k]));
                        k += 1;
                    }
                }
                let q = Form::quadratic_from_terms(field, 4, &terms).unwrap();
                let b = q.polarize().unwrap();
                for x in 0..field.space_size(4) {
                    let xv = field.decode(x, 4);
                    for y in (0..field.space_size(4)).step_by(5) {
                        let yv = field.decode(y, 4);
                        let s: Vec<u8> = xv.iter().zip(&yv).map(|(&u, &w)| field.add(u, w)).collect();
                        let expected = field.sub(field.sub(q.q(&s), q.q(&xv)), q.q(&yv));
                        assert_eq!(b.pair(&xv, &yv), expected);
                        assert_eq!(b.pair(&xv, &yv), b.pair(&yv, &xv));
                    }
                    if field.characteristic() == 2 {
                        assert_eq!(b.pair(&xv, &xv), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn witt_type_examples() {
        let h = Form::hyperbolic(Field::Gf2, 2);
        assert_eq!(h.witt_type().unwrap().0, WittType::Plus);
        assert_eq!(h.singular_count(), 9);
        let m = Form::elliptic(Field::Gf2, 2).unwrap();
        assert_eq!(m.witt_type().unwrap().0, WittType::Minus);
        assert_eq!(m.singular_count(), 5);
        let h3 = Form::hyperbolic(Field::Gf3, 2);
        assert_eq!(h3.witt_type().unwrap().0, WittType::Plus);
        assert_eq!(h3.singular_count(), 32);
        assert_eq!(Form::elliptic(Field::Gf3, 2).unwrap().witt_type().unwrap().0, WittType::Minus);
        assert_eq!(Form::elliptic(Field::Gf4, 2).unwrap().witt_type().unwrap().0, WittType::Minus);
        assert_eq!(Form::hyperbolic(Field::Gf4, 3).witt_type().unwrap().0, WittType::Plus);
    }

    #[test]
    fn witt_type_with_radical() {
        // x1x2 + x3x4 + x5^2 on GF(2)^6: radical <e6>, the x5 direction is a defect
        let q = Form::quadratic_from_terms(Field::Gf2, 6, &[(0, 1, 1), (2, 3, 1), (4, 4, 1)]).unwrap();
        assert_eq!(q.radical().dim(), 1);
        assert_eq!(q.witt_type(), Err(Error::NotNondegenerate));
        let q = Form::quadratic_from_terms(Field::Gf3, 5, &[(0, 1, 1), (2, 2, 1), (3, 3, 1)]).unwrap();
        let (t, r) = q.witt_type().unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(t, WittType::Minus);
        let o7 = Form::quadratic_from_terms(Field::Gf2, 7, &[(0, 1, 1), (2, 3, 1), (4, 5, 1), (6, 6, 1)]).unwrap();
        assert!(o7.is_nondegenerate());
        assert_eq!(o7.pairing_radical().dim(), 1);
    }

    #[test]
    fn point_types_and_census() {
        let q = Form::hyperbolic(Field::Gf3, 2);
        assert_eq!(q.point_type(&e(4, 0)).unwrap(), PointType::Singular);
        assert_eq!(q.point_type(&[1, 1, 0, 0]).unwrap(), PointType::Plus);
        assert_eq!(q.point_type(&[0, 0, 0, 0]), Err(Error::ZeroVector));
        let c = q.census().unwrap();
        assert_eq!((c.n_singular, c.n_plus, c.n_minus), (16, 12, 12));
        assert_eq!(c.n_s + c.n_dp + c.n_dm + c.n_nplus + c.n_nminus, 130);
        let s = Subspace::span(Field::Gf3, 4, [e(4, 0).as_slice(), e(4, 2).as_slice()]);
        assert_eq!(q.subspace_type_2dim(&s).unwrap(), TwoSpaceType::S);
        let line = Subspace::span(Field::Gf3, 4, [e(4, 0).as_slice()]);
        assert!(matches!(q.subspace_type_2dim(&line), Err(Error::Dimension(_))));
    }

    #[test]
    fn hyperplanes_meet_singular_points() {
        let q = Form::hyperbolic(Field::Gf3, 2);
        let x = Subspace::span(Field::Gf3, 4, [e(4, 0), e(4, 1), e(4, 2)].iter().map(|v| v.as_slice()));
        assert_eq!(q.singular_point_in(&x).unwrap(), e(4, 0));
        for h in crate::linalg::all_subspaces(Field::Gf3, 4, 3) {
            let v = q.singular_point_in(&h).unwrap();
            assert!(h.contains(&v).unwrap() && q.q(&v) == 0 && v.iter().any(|&c| c != 0));
        }
    }

    #[test]
    fn isometry_generators_preserve() {
        let forms = [
            Form::symplectic_standard(Field::Gf2, 6).unwrap(),
            Form::hyperbolic(Field::Gf3, 2),
            Form::elliptic(Field::Gf3, 2).unwrap(),
            Form::elliptic(Field::Gf2, 3).unwrap(),
            Form::hermitian_standard(4),
        ];
        for form in &forms {
            let gens = form.isometry_generators().unwrap();
            assert!(!gens.is_empty());
            for g in &gens {
                assert!(form.preserves(g), "{form:?} {g:?}");
                assert!(g.inverse().is_some());
            }
        }
        let degenerate = Form::bilinear(Matrix::zero(Field::Gf2, 2, 2)).unwrap();
        assert_eq!(degenerate.isometry_generators(), Err(Error::Degenerate));
    }

    #[test]
    fn similitude_multiplier_detects_scaling() {
        let q = Form::hyperbolic(Field::Gf3, 2);
        let mut d = Matrix::identity(Field::Gf3, 4);
        d.set(0, 0, 2);
        d.set(2, 2, 2);
        assert_eq!(q.similitude_multiplier(&d), Some(2));
        assert!(!q.preserves(&d));
    }
}
