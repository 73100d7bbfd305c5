//! Modules given by one matrix per group generator: functorial
//! constructions, spinning, MeatAxe chopping, fixed points and offenders.

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::grp::{ElemSet, SmallGroupTable};
use crate::linalg::{Matrix, Subquotient, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    owner: String,
    field: Field,
    dim: usize,
    gens: Vec<Matrix>,
}

impl GModule {
    pub fn new(owner: impl Into<String>, field: Field, dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        for g in &gens {
            if g.field() != field || g.rows() != dim || g.cols() != dim {
                return Err(Error::Dimension(format!("generator is not a {dim}x{dim} matrix over {field}")));
            }
            if g.inverse().is_none() {
                return Err(Error::Precondition("generator matrix is singular".into()));
            }
        }
        Ok(GModule { owner: owner.into(), field, dim, gens })
    }

    pub fn trivial(owner: impl Into<String>, field: Field, ngens: usize) -> Self {
        GModule { owner: owner.into(), field, dim: 1, gens: vec![Matrix::identity(field, 1); ngens] }
    }

    pub fn owner(&self) -> &str {
        &self.owner
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    fn compatible(&self, other: &GModule) -> Result<()> {
        if self.owner != other.owner || self.gens.len() != other.gens.len() || self.field != other.field {
            return Err(Error::OwnerMismatch(self.owner.clone(), other.owner.clone()));
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &GModule) -> Result<GModule> {
        self.compatible(other)?;
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| Matrix::block_diag(a, b)).collect();
        Ok(GModule { owner: self.owner.clone(), field: self.field, dim: self.dim + other.dim, gens })
    }

    pub fn tensor(&self, other: &GModule) -> Result<GModule> {
        self.compatible(other)?;
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| Matrix::kron(a, b)).collect();
        Ok(GModule { owner: self.owner.clone(), field: self.field, dim: self.dim * other.dim, gens })
    }

    /// `Λ^k M` on the basis of `k`-subsets in lexicographic order.
    pub fn exterior_power(&self, k: usize) -> GModule {
        let subsets = k_subsets(self.dim, k);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Matrix::from_fn(self.field, subsets.len(), subsets.len(), |r, c| {
                    let minor = Matrix::from_fn(self.field, k, k, |i, j| g.get(subsets[r][i], subsets[c][j]));
                    minor.det()
                })
            })
            .collect();
        GModule { owner: self.owner.clone(), field: self.field, dim: subsets.len(), gens }
    }

    pub fn dual(&self) -> GModule {
        let gens = self.gens.iter().map(|g| g.inverse().expect("invertible").transpose()).collect();
        GModule { owner: self.owner.clone(), field: self.field, dim: self.dim, gens }
    }

    pub fn is_invariant(&self, w: &Subspace) -> bool {
        self.gens.iter().all(|g| w.is_invariant(g))
    }

    /// Smallest invariant subspace containing `seeds`.
    pub fn spin(&self, seeds: &[Vec<u8>]) -> Subspace {
        spin_with(self.field, self.dim, &self.gens, seeds)
    }

    /// Action on an invariant subspace, in the coordinates of its echelon basis.
    pub fn restrict(&self, w: &Subspace) -> Result<GModule> {
        if !self.is_invariant(w) {
            return Err(Error::Precondition("subspace is not invariant".into()));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let rows: Vec<Vec<u8>> =
                    w.basis().iter().map(|b| w.coordinates(&g.apply(b)).expect("invariant")).collect();
                Matrix::from_rows(self.field, w.dim(), &rows).expect("square")
            })
            .collect();
        Ok(GModule { owner: self.owner.clone(), field: self.field, dim: w.dim(), gens })
    }

    pub fn quotient(&self, w: &Subspace) -> Result<(GModule, Subquotient)> {
        if !self.is_invariant(w) {
            return Err(Error::Precondition("subspace is not invariant".into()));
        }
        let sq = Subquotient::new(&Subspace::full(self.field, self.dim), w)?;
        let gens = self.gens.iter().map(|g| sq.induced(g)).collect::<Result<Vec<_>>>()?;
        Ok((GModule { owner: self.owner.clone(), field: self.field, dim: sq.dim(), gens }, sq))
    }

    /// Common fixed space of all generators.
    pub fn fixed_points(&self) -> Subspace {
        fixed_points(self.field, self.dim, &self.gens)
    }

    /// Decides irreducibility, or returns a proper nonzero submodule.
    pub fn split<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Option<Subspace>> {
        if self.dim <= 1 {
            return Ok(None);
        }
        if self.gens.is_empty() {
            return Ok(Some(Subspace::span(self.field, self.dim, [unit(self.dim, 0).as_slice()])));
        }
        let mut pool: Vec<Matrix> = self.gens.clone();
        for _ in 0..400 {
            let a = pool[rng.gen_range(0..pool.len())].mul(&pool[rng.gen_range(0..pool.len())]);
            pool.push(a);
            let mut theta = Matrix::zero(self.field, self.dim, self.dim);
            for _ in 0..3 {
                let c = rng.gen_range(1..self.field.order() as u8);
                theta = theta.add(&pool[rng.gen_range(0..pool.len())].scale(c));
            }
            let Some(theta) = self.small_nullity_shift(&theta) else { continue };
            return Ok(self.norton(&theta));
        }
        Err(Error::Resource("no suitable singular algebra element found".into()))
    }

    /// `theta - lambda` with the smallest positive nullity, if at most 4.
    fn small_nullity_shift(&self, theta: &Matrix) -> Option<Matrix> {
        let id = Matrix::identity(self.field, self.dim);
        (0..self.field.order() as u8)
            .map(|l| theta.sub(&id.scale(l)))
            .map(|t| (self.dim - t.rank(), t))
            .filter(|(n, _)| (1..=4).contains(n))
            .min_by_key(|(n, _)| *n)
            .map(|(_, t)| t)
    }

    /// Norton's test for a singular `theta`: if every nonzero vector of
    /// `ker theta` spins to `M` and every nonzero vector of `ker theta^T`
    /// spins to `M^*`, then `M` is irreducible; otherwise a proper submodule
    /// is found (directly, or as the annihilator of a dual submodule).
    fn norton(&self, theta: &Matrix) -> Option<Subspace> {
        for v in theta.left_kernel().points() {
            let w = self.spin(&[v]);
            if w.dim() < self.dim {
                return Some(w);
            }
        }
        let transposed: Vec<Matrix> = self.gens.iter().map(|g| g.transpose()).collect();
        for v in theta.transpose().left_kernel().points() {
            let d = spin_with(self.field, self.dim, &transposed, &[v]);
            if d.dim() < self.dim {
                let m = Matrix::from_rows(self.field, self.dim, d.basis()).expect("rows");
                return Some(m.transpose().left_kernel());
            }
        }
        None
    }

    pub fn is_irreducible<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<bool> {
        Ok(self.split(rng)?.is_none())
    }

    /// Composition series by recursive splitting.
    pub fn chop<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<CompositionSeries> {
        let mut flag = vec![Subspace::zero(self.field, self.dim)];
        let mut factors = Vec::new();
        self.chop_into(rng, &mut flag, &mut factors, &|v: &[u8]| v.to_vec())?;
        Ok(CompositionSeries { flag, factors })
    }

    fn chop_into<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        flag: &mut Vec<Subspace>,
        factors: &mut Vec<GModule>,
        lift: &dyn Fn(&[u8]) -> Vec<u8>,
    ) -> Result<()> {
        match self.split(rng)? {
            None => {
                let below = flag.last().expect("flag starts at zero").clone();
                let lifted: Vec<Vec<u8>> = (0..self.dim).map(|i| lift(&unit(self.dim, i))).collect();
                let top = Subspace::span(
                    below.field(),
                    below.ambient(),
                    below.basis().iter().chain(&lifted).map(|v| v.as_slice()),
                );
                flag.push(top);
                factors.push(self.clone());
                Ok(())
            }
            Some(w) => {
                let sub = self.restrict(&w)?;
                let wb = w.basis().to_vec();
                let field = self.field;
                let lift_sub = move |c: &[u8]| -> Vec<u8> { combine(field, &wb, c) };
                sub.chop_into(rng, flag, factors, &|c: &[u8]| lift(&lift_sub(c)))?;
                let (quot, sq) = self.quotient(&w)?;
                let reps = sq.representatives().to_vec();
                let lift_quot = move |c: &[u8]| -> Vec<u8> { combine(field, &reps, c) };
                quot.chop_into(rng, flag, factors, &|c: &[u8]| lift(&lift_quot(c)))
            }
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<u8> {
    (0..n).map(|j| (i == j) as u8).collect()
}

fn combine(field: Field, basis: &[Vec<u8>], coeffs: &[u8]) -> Vec<u8> {
    let n = basis.first().map_or(0, |b| b.len());
    let mut out = vec![0u8; n];
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            for (x, &y) in out.iter_mut().zip(b) {
                *x = field.add(*x, field.mul(c, y));
            }
        }
    }
    out
}

pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Smallest subspace containing `seeds` and invariant under `gens`.
pub fn spin_with(field: Field, dim: usize, gens: &[Matrix], seeds: &[Vec<u8>]) -> Subspace {
    let mut echelon: Vec<(usize, Vec<u8>)> = Vec::new();
    let reduce = |echelon: &Vec<(usize, Vec<u8>)>, v: &[u8]| -> Vec<u8> {
        let mut out = v.to_vec();
        for (p, b) in echelon {
            let c = out[*p];
            if c != 0 {
                for (x, &y) in out.iter_mut().zip(b) {
                    *x = field.sub(*x, field.mul(c, y));
                }
            }
        }
        out
    };
    let mut queue: Vec<Vec<u8>> = Vec::new();
    let add = |echelon: &mut Vec<(usize, Vec<u8>)>, queue: &mut Vec<Vec<u8>>, v: &[u8]| {
        let r = reduce(echelon, v);
        if let Some(p) = r.iter().position(|&x| x != 0) {
            let inv = field.inv(r[p]).expect("nonzero");
            let r: Vec<u8> = r.iter().map(|&x| field.mul(x, inv)).collect();
            for (_, b) in echelon.iter_mut() {
                let c = b[p];
                if c != 0 {
                    for (x, &y) in b.iter_mut().zip(&r) {
                        *x = field.sub(*x, field.mul(c, y));
                    }
                }
            }
            echelon.push((p, r));
            queue.push(v.to_vec());
        }
    };
    for s in seeds {
        add(&mut echelon, &mut queue, s);
    }
    let mut i = 0;
    while i < queue.len() && echelon.len() < dim {
        let v = queue[i].clone();
        for g in gens {
            add(&mut echelon, &mut queue, &g.apply(&v));
        }
        i += 1;
    }
    Subspace::span(field, dim, echelon.iter().map(|(_, b)| b.as_slice()))
}

/// Common fixed space of a list of matrices.
pub fn fixed_points(field: Field, dim: usize, mats: &[Matrix]) -> Subspace {
    let mut w = Subspace::full(field, dim);
    for g in mats {
        let f = crate::linalg::fixed_space(g).expect("square");
        w = w.intersect(&f).expect("same ambient");
    }
    w
}

/// An invariant flag `0 = M_0 < M_1 < ... < M_r = M` with irreducible factors.
#[derive(Clone, Debug)]
pub struct CompositionSeries {
    pub flag: Vec<Subspace>,
    pub factors: Vec<GModule>,
}

impl CompositionSeries {
    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim()).collect()
    }

    pub fn sorted_dims(&self) -> Vec<usize> {
        let mut d = self.factor_dims();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// Searches the composition factors of `Λ³V`, `V⊗V` and `V⊗Λ²V`, in that
/// order, for an irreducible factor of dimension `dim`.
pub fn find_factor_of_dim<R: Rng + ?Sized>(
    v: &GModule,
    dim: usize,
    rng: &mut R,
) -> Result<Option<(GModule, &'static str)>> {
    let routes: [(&'static str, Box<dyn Fn() -> Result<GModule>>); 3] = [
        ("exterior-cube", Box::new(|| Ok(v.exterior_power(3)))),
        ("tensor-square", Box::new(|| v.tensor(v))),
        ("tensor-exterior-square", Box::new(|| v.tensor(&v.exterior_power(2)))),
    ];
    for (name, build) in routes {
        let m = build()?;
        let series = m.chop(rng)?;
        if let Some(f) = series.factors.into_iter().find(|f| f.dim() == dim) {
            return Ok(Some((f, name)));
        }
    }
    Ok(None)
}

/// An elementary abelian subgroup `A` with `|M : C_M(A)| <= |A|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Offender {
    pub subgroup: ElemSet,
    pub order: usize,
    pub fixed_dim: usize,
}

/// Offenders among the nontrivial elementary abelian `p`-subgroups of the
/// `p`-group `table`, acting through `matrix_of` (element index to matrix).
pub fn offender_search(
    table: &SmallGroupTable,
    p: u32,
    module_dim: usize,
    field: Field,
    matrix_of: &dyn Fn(usize) -> Matrix,
    budget: usize,
) -> Result<Vec<Offender>> {
    let layers = table.elementary_abelian_subgroups(&table.all(), p, budget)?;
    let q = field.order() as u128;
    let mut out = Vec::new();
    for a in layers.iter().flatten() {
        let gens = minimal_generators(table, a);
        let mats: Vec<Matrix> = gens.iter().map(|&x| matrix_of(x)).collect();
        let c = fixed_points(field, module_dim, &mats);
        let index = q.pow((module_dim - c.dim()) as u32);
        if index <= a.len() as u128 {
            out.push(Offender { subgroup: a.clone(), order: a.len(), fixed_dim: c.dim() });
        }
    }
    Ok(out)
}

/// A generating set of the subgroup `h`, chosen greedily in index order.
pub fn minimal_generators(table: &SmallGroupTable, h: &ElemSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = table.generate(&[]);
    for x in h.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = table.generate(&gens);
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gl3_2() -> GModule {
        let a = Matrix::from_rows(Field::Gf2, 3, &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let b = Matrix::from_rows(Field::Gf2, 3, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap();
        GModule::new("GL3_2", Field::Gf2, 3, vec![a, b]).unwrap()
    }

    #[test]
    fn constructions_have_expected_dimensions() {
        let v = gl3_2();
        assert_eq!(v.exterior_power(2).dim(), 3);
        assert_eq!(v.tensor(&v).unwrap().dim(), 9);
        let t = GModule::trivial("GL3_2", Field::Gf2, 2);
        assert_eq!(v.tensor(&t).unwrap().gens(), v.gens());
        let other = GModule::trivial("elsewhere", Field::Gf2, 2);
        assert!(matches!(v.tensor(&other), Err(Error::OwnerMismatch(_, _))));
        let six = GModule::new("x", Field::Gf2, 6, vec![Matrix::identity(Field::Gf2, 6)]).unwrap();
        assert_eq!(six.exterior_power(2).dim(), 15);
        assert_eq!(six.exterior_power(3).dim(), 20);
    }

    #[test]
    fn exterior_power_is_a_representation() {
        let v = gl3_2();
        let prod = GModule::new("p", Field::Gf2, 3, vec![v.gens()[0].mul(&v.gens()[1])]).unwrap();
        let lhs = prod.exterior_power(2).gens()[0].clone();
        let l2 = v.exterior_power(2);
        assert_eq!(lhs, l2.gens()[0].mul(&l2.gens()[1]));
        // Λ²V ≅ V* for GL3(2): irreducible of dimension 3
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(l2.is_irreducible(&mut rng).unwrap());
    }

    #[test]
    fn chop_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let v = gl3_2();
        assert_eq!(v.chop(&mut rng).unwrap().factor_dims(), vec![3]);
        let vv = v.direct_sum(&v).unwrap();
        let series = vv.chop(&mut rng).unwrap();
        assert_eq!(series.factor_dims(), vec![3, 3]);
        for w in &series.flag {
            assert!(vv.is_invariant(w));
        }
        let t = GModule::trivial("GL3_2", Field::Gf2, 2);
        assert_eq!(t.chop(&mut rng).unwrap().factor_dims(), vec![1]);
        // V ⊗ V* = trivial + 8-dim Steinberg-like piece for GL3(2): total 9
        let vd = v.tensor(&v.dual()).unwrap();
        let s = vd.chop(&mut rng).unwrap();
        assert_eq!(s.factor_dims().iter().sum::<usize>(), 9);
        for w in s.flag.windows(2) {
            assert!(w[0].is_subspace_of(&w[1]).unwrap() && w[0].dim() < w[1].dim());
        }
    }

    #[test]
    fn spin_and_fixed_points() {
        let v = gl3_2();
        assert_eq!(v.spin(&[vec![1, 0, 0]]).dim(), 3);
        assert_eq!(v.fixed_points().dim(), 0);
        let t = GModule::trivial("GL3_2", Field::Gf2, 2);
        assert_eq!(t.spin(&[vec![1]]).dim(), 1);
        assert_eq!(fixed_points(Field::Gf2, 3, &[]).dim(), 3);
    }
}
