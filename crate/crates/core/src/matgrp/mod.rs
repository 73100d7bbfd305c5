//! The named classical groups as matrix groups with faithful permutation
//! images on nonzero vectors.
//!
//! `Sp6_2` acts on `V ⊕ U` (natural and spin module) through a permutation
//! representation of degree `63 + 255`. `AutSU4_2` is realized inside it as
//! the isometry group of a minus-type quadratic form polarizing to the
//! symplectic form, so both groups share `V` and `U`.

mod census;
mod parabolic;

pub use census::*;
pub use parabolic::*;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{Form, FormKind};
use crate::gf::Field;
use crate::grp::{Perm, PermGroup};
use crate::linalg::{Matrix, Subquotient, Subspace};
use crate::modrep::{find_factor_of_dim, GModule};

/// Seed for choosing small generating sets; independent of the chop seed.
pub const GENERATOR_SEED: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupName {
    #[serde(rename = "Sp6_2")]
    Sp62,
    #[serde(rename = "SU4_2")]
    Su42,
    #[serde(rename = "AutSU4_2")]
    AutSu42,
    #[serde(rename = "O7_2")]
    O72,
    #[serde(rename = "GO4p_3")]
    Go4Plus3,
    #[serde(rename = "GO4m_3")]
    Go4Minus3,
    #[serde(rename = "CO4p_3")]
    Co4Plus3,
}

impl GroupName {
    pub const ALL: [GroupName; 7] = [
        GroupName::Sp62,
        GroupName::Su42,
        GroupName::AutSu42,
        GroupName::O72,
        GroupName::Go4Plus3,
        GroupName::Go4Minus3,
        GroupName::Co4Plus3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupName::Sp62 => "Sp6_2",
            GroupName::Su42 => "SU4_2",
            GroupName::AutSu42 => "AutSU4_2",
            GroupName::O72 => "O7_2",
            GroupName::Go4Plus3 => "GO4p_3",
            GroupName::Go4Minus3 => "GO4m_3",
            GroupName::Co4Plus3 => "CO4p_3",
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupName::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| Error::UnknownGroup(s.to_string()))
    }
}

fn sp_order(q: u64, n: u32) -> u64 {
    q.pow(n * n) * (1..=n).map(|i| q.pow(2 * i) - 1).product::<u64>()
}

fn gu_order(q: u64, n: u32) -> u64 {
    let mut o = q.pow(n * (n - 1) / 2);
    for i in 1..=n {
        o *= if i % 2 == 0 { q.pow(i) - 1 } else { q.pow(i) + 1 };
    }
    o
}

fn go_even_order(q: u64, m: u32, plus: bool) -> u64 {
    let qm = q.pow(m);
    let lead = if plus { qm - 1 } else { qm + 1 };
    2 * q.pow(m * (m - 1)) * lead * (1..m).map(|i| q.pow(2 * i) - 1).product::<u64>()
}

/// Order from the classical order formulas.
pub fn classical_order(name: GroupName) -> u64 {
    match name {
        GroupName::Sp62 | GroupName::O72 => sp_order(2, 3),
        GroupName::Su42 => gu_order(2, 4) / 3,
        GroupName::AutSu42 => 2 * gu_order(2, 4) / 3,
        GroupName::Go4Plus3 => go_even_order(3, 2, true),
        GroupName::Go4Minus3 => go_even_order(3, 2, false),
        GroupName::Co4Plus3 => 2 * go_even_order(3, 2, true),
    }
}

/// The nonzero vectors of `field^dim`, numbered from `offset` in code order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub field: Field,
    pub dim: usize,
    pub offset: u32,
}

impl Block {
    pub fn len(&self) -> usize {
        self.field.space_size(self.dim) as usize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains_point(&self, p: u32) -> bool {
        p >= self.offset && ((p - self.offset) as usize) < self.len()
    }

    /// Point of a nonzero vector.
    pub fn point(&self, v: &[u8]) -> Option<u32> {
        let code = self.field.encode(v);
        (code != 0).then(|| self.offset + code as u32 - 1)
    }

    pub fn vector(&self, p: u32) -> Vec<u8> {
        self.field.decode((p - self.offset) as u64 + 1, self.dim)
    }

    pub fn basis_points(&self) -> Vec<u32> {
        (0..self.dim).map(|i| self.offset + self.field.order().pow(i as u32) as u32 - 1).collect()
    }
}

/// A permutation representation on the nonzero vectors of several modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermRep {
    blocks: Vec<Block>,
    degree: usize,
}

impl PermRep {
    pub fn new(specs: &[(Field, usize)]) -> Self {
        let mut blocks = Vec::new();
        let mut offset = 0u32;
        for &(field, dim) in specs {
            let b = Block { field, dim, offset };
            offset += b.len() as u32;
            blocks.push(b);
        }
        PermRep { blocks, degree: offset as usize }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The permutation induced by one matrix per block.
    pub fn perm(&self, mats: &[&Matrix]) -> Result<Perm> {
        if mats.len() != self.blocks.len() {
            return Err(Error::Dimension(format!("{} matrices for {} blocks", mats.len(), self.blocks.len())));
        }
        let mut images = vec![0u32; self.degree];
        for (b, m) in self.blocks.iter().zip(mats) {
            if m.rows() != b.dim || m.cols() != b.dim || m.field() != b.field {
                return Err(Error::Dimension("matrix does not match its block".into()));
            }
            for p in b.offset..b.offset + b.len() as u32 {
                let w = m.apply(&b.vector(p));
                images[p as usize] = b.point(&w).ok_or_else(|| Error::Precondition("singular matrix".into()))?;
            }
        }
        Perm::from_images(images)
    }

    /// The matrix by which `g` acts on block `block`.
    pub fn matrix(&self, block: usize, g: &Perm) -> Matrix {
        let b = &self.blocks[block];
        let rows: Vec<Vec<u8>> = b.basis_points().iter().map(|&p| b.vector(g.image(p))).collect();
        Matrix::from_rows(b.field, b.dim, &rows).expect("rows of block dimension")
    }

    /// Basis points of the first block; they form a base when that block is faithful.
    pub fn base_hint(&self) -> Vec<u32> {
        self.blocks[0].basis_points()
    }
}

/// Builds permutation groups; implementations may consult a cache.
pub trait GroupBuilder: Sync {
    fn build(&self, key: &str, degree: usize, gens: Vec<Perm>, hint: &[u32]) -> Result<PermGroup>;
}

/// Runs Schreier-Sims directly.
#[derive(Clone, Copy, Debug, Default)]
pub struct DirectBuilder;

impl GroupBuilder for DirectBuilder {
    fn build(&self, _key: &str, degree: usize, gens: Vec<Perm>, hint: &[u32]) -> Result<PermGroup> {
        PermGroup::with_base_hint(degree, gens, hint)
    }
}

/// A registry group: defining form, permutation image, and one module per block.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: GroupName,
    pub form: Form,
    pub rep: PermRep,
    pub group: PermGroup,
    /// Module `i` is the action on block `i`, with one matrix per generator of `group`.
    pub modules: Vec<GModule>,
    /// For `Sp6_2`: the construction that produced the spin module.
    pub spin_route: Option<&'static str>,
}

impl NamedGroup {
    fn assemble(
        name: GroupName,
        form: Form,
        rep: PermRep,
        group: PermGroup,
        spin_route: Option<&'static str>,
    ) -> Result<Self> {
        let modules = rep
            .blocks()
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mats = group.generators().iter().map(|g| rep.matrix(i, g)).collect();
                GModule::new(name.as_str(), b.field, b.dim, mats)
            })
            .collect::<Result<Vec<_>>>()?;
        let ng = NamedGroup { name, form, rep, group, modules, spin_route };
        let expected = classical_order(name);
        if ng.order() != expected {
            return Err(Error::Construction(format!("{name} has order {}, expected {expected}", ng.order())));
        }
        if !ng.generators_respect_form() {
            return Err(Error::Construction(format!("a generator of {name} does not respect its form")));
        }
        Ok(ng)
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// Action of `g` on block `block`.
    pub fn matrix(&self, block: usize, g: &Perm) -> Matrix {
        self.rep.matrix(block, g)
    }

    /// Action on the defining module.
    pub fn natural_matrix(&self, g: &Perm) -> Matrix {
        self.rep.matrix(0, g)
    }

    pub fn natural(&self) -> &GModule {
        &self.modules[0]
    }

    /// Isometries, or similitudes for `CO4p_3`, of the defining form.
    pub fn generators_respect_form(&self) -> bool {
        self.natural().gens().iter().all(|m| match self.name {
            GroupName::Co4Plus3 => self.form.similitude_multiplier(m).is_some(),
            _ => self.form.preserves(m),
        })
    }

    /// The group element acting on the defining module as `m`, when the
    /// base is the basis of that module.
    pub fn element_of_matrix(&self, m: &Matrix) -> Option<Perm> {
        let b = &self.rep.blocks()[0];
        if self.group.base() != b.basis_points() {
            return None;
        }
        let images: Option<Vec<u32>> = (0..b.dim)
            .map(|i| {
                let e: Vec<u8> = (0..b.dim).map(|j| (i == j) as u8).collect();
                b.point(&m.apply(&e))
            })
            .collect();
        let g = self.group.element_with_base_images(&images?)?;
        (self.natural_matrix(&g) == *m).then_some(g)
    }
}

/// A few random elements generating all of `g`, chosen with a fixed seed.
pub fn small_generating_set(g: &PermGroup, seed: u64) -> Result<Vec<Perm>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 2..=4 {
        for _ in 0..64 {
            let gens: Vec<Perm> = (0..k).map(|_| g.random_element(&mut rng)).collect();
            if g.subgroup(gens.clone())?.order() == g.order() {
                return Ok(gens);
            }
        }
    }
    Err(Error::Construction("no small generating set found".into()))
}

/// Isometry group of `form` acting on its nonzero vectors, with a small generating set.
fn isometry_perm_group(form: &Form, extra: &[Matrix], rep: &PermRep) -> Result<Vec<Perm>> {
    let mut mats = form.isometry_generators()?;
    mats.extend(extra.iter().cloned());
    let perms = mats.iter().map(|m| rep.perm(&[m])).collect::<Result<Vec<_>>>()?;
    let full = PermGroup::with_base_hint(rep.degree(), perms, &rep.base_hint())?;
    small_generating_set(&full, GENERATOR_SEED)
}

/// `B(x, y) = x1 y6 + x2 y5 + x3 y4 + (symmetric)` on `GF(2)^6`.
pub fn sp6_form() -> Form {
    Form::symplectic_standard(Field::Gf2, 6).expect("even dimension")
}

/// `x1 x6 + x2 x5 + x3 x4 + x3^2 + x4^2`: minus type, polarizing to [`sp6_form`].
pub fn o6_minus_form() -> Form {
    Form::quadratic_from_terms(Field::Gf2, 6, &[(0, 5, 1), (1, 4, 1), (2, 3, 1), (2, 2, 1), (3, 3, 1)])
        .expect("in range")
}

/// `x1 x2 + x3 x4 + x5 x6 + x7^2` on `GF(2)^7`.
pub fn o7_form() -> Form {
    Form::quadratic_from_terms(Field::Gf2, 7, &[(0, 1, 1), (2, 3, 1), (4, 5, 1), (6, 6, 1)]).expect("in range")
}

/// `Sp6_2` on `V ⊕ U`; the spin module `U` is found by chopping with `seed`.
pub fn make_sp6(seed: u64, builder: &dyn GroupBuilder) -> Result<NamedGroup> {
    let form = sp6_form();
    let rep_v = PermRep::new(&[(Field::Gf2, 6)]);
    let small = isometry_perm_group(&form, &[], &rep_v)?;
    let vmats: Vec<Matrix> = small.iter().map(|g| rep_v.matrix(0, g)).collect();
    let v = GModule::new("Sp6_2", Field::Gf2, 6, vmats.clone())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (u, route) = find_factor_of_dim(&v, 8, &mut rng)?
        .ok_or_else(|| Error::Construction("no 8-dimensional composition factor found".into()))?;
    let rep = PermRep::new(&[(Field::Gf2, 6), (Field::Gf2, 8)]);
    let perms = vmats.iter().zip(u.gens()).map(|(a, b)| rep.perm(&[a, b])).collect::<Result<Vec<_>>>()?;
    let key = format!("Sp6_2-seed{seed}");
    let group = builder.build(&key, rep.degree(), perms, &rep.base_hint())?;
    NamedGroup::assemble(GroupName::Sp62, form, rep, group, Some(route))
}

/// `Aut(SU4(2)) ≅ O6-(2)` inside `x`, generated by the orthogonal
/// transvections of [`o6_minus_form`].
pub fn make_aut_su4(x: &NamedGroup, builder: &dyn GroupBuilder) -> Result<NamedGroup> {
    let form = o6_minus_form();
    let mut elems = Vec::new();
    for c in 1..64u64 {
        let v = Field::Gf2.decode(c, 6);
        if form.q(&v) == 1 {
            let t = form.transvection(&v, 1);
            elems.push(
                x.element_of_matrix(&t).ok_or_else(|| Error::Construction("transvection not found in Sp6_2".into()))?,
            );
        }
    }
    let full = x.group.subgroup(elems)?;
    let small = small_generating_set(&full, GENERATOR_SEED)?;
    let key = format!("AutSU4_2-in-{}", x.group.generators().len());
    let cache_key = format!("{key}-{}", fingerprint(x.group.generators()));
    let group = builder.build(&cache_key, x.rep.degree(), small, &x.rep.base_hint())?;
    NamedGroup::assemble(GroupName::AutSu42, form, x.rep.clone(), group, None)
}

/// Short stable digest of a generator list, for cache keys.
pub fn fingerprint(gens: &[Perm]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for g in gens {
        for &x in g.images() {
            h ^= x as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    format!("{h:016x}")
}

/// `SU4_2` on the nonzero vectors of `GF(4)^4`, from unitary transvections.
pub fn make_su4(builder: &dyn GroupBuilder) -> Result<NamedGroup> {
    let form = Form::hermitian_standard(4);
    let rep = PermRep::new(&[(Field::Gf4, 4)]);
    let perms = form.unitary_transvections().iter().map(|m| rep.perm(&[m])).collect::<Result<Vec<_>>>()?;
    let full = PermGroup::with_base_hint(rep.degree(), perms, &rep.base_hint())?;
    let small = small_generating_set(&full, GENERATOR_SEED)?;
    let group = builder.build("SU4_2", rep.degree(), small, &rep.base_hint())?;
    NamedGroup::assemble(GroupName::Su42, form, rep, group, None)
}

pub fn make_o7(builder: &dyn GroupBuilder) -> Result<NamedGroup> {
    let form = o7_form();
    let rep = PermRep::new(&[(Field::Gf2, 7)]);
    let small = isometry_perm_group(&form, &[], &rep)?;
    let group = builder.build("O7_2", rep.degree(), small, &rep.base_hint())?;
    NamedGroup::assemble(GroupName::O72, form, rep, group, None)
}

/// First diagonal matrix scaling `form` by `multiplier`.
pub fn diagonal_similitude(form: &Form, multiplier: u8) -> Option<Matrix> {
    let f = form.field();
    let n = form.dim();
    let q = f.order() as u64 - 1;
    (0..q.pow(n as u32)).find_map(|c| {
        let d = Matrix::from_fn(f, n, n, |i, j| if i == j { ((c / q.pow(i as u32)) % q) as u8 + 1 } else { 0 });
        (form.similitude_multiplier(&d) == Some(multiplier)).then_some(d)
    })
}

pub fn make_go4(plus: bool, builder: &dyn GroupBuilder) -> Result<NamedGroup> {
    let (name, form) = if plus {
        (GroupName::Go4Plus3, Form::hyperbolic(Field::Gf3, 2))
    } else {
        (GroupName::Go4Minus3, Form::elliptic(Field::Gf3, 2)?)
    };
    let rep = PermRep::new(&[(Field::Gf3, 4)]);
    let small = isometry_perm_group(&form, &[], &rep)?;
    let group = builder.build(name.as_str(), rep.degree(), small, &rep.base_hint())?;
    NamedGroup::assemble(name, form, rep, group, None)
}

pub fn make_co4(builder: &dyn GroupBuilder) -> Result<NamedGroup> {
    let form = Form::hyperbolic(Field::Gf3, 2);
    let sim = diagonal_similitude(&form, 2).ok_or_else(|| Error::Construction("no diagonal similitude".into()))?;
    let rep = PermRep::new(&[(Field::Gf3, 4)]);
    let small = isometry_perm_group(&form, &[sim], &rep)?;
    let group = builder.build("CO4p_3", rep.degree(), small, &rep.base_hint())?;
    NamedGroup::assemble(GroupName::Co4Plus3, form, rep, group, None)
}

/// Builds any registry group. `AutSU4_2` needs `Sp6_2` and builds it first.
pub fn make_named_group(name: GroupName, seed: u64, builder: &dyn GroupBuilder) -> Result<NamedGroup> {
    match name {
        GroupName::Sp62 => make_sp6(seed, builder),
        GroupName::AutSu42 => make_aut_su4(&make_sp6(seed, builder)?, builder),
        GroupName::Su42 => make_su4(builder),
        GroupName::O72 => make_o7(builder),
        GroupName::Go4Plus3 => make_go4(true, builder),
        GroupName::Go4Minus3 => make_go4(false, builder),
        GroupName::Co4Plus3 => make_co4(builder),
    }
}

/// `GF(4)^n -> GF(2)^{2n}`: coordinate `a = b0 + b1 ω` becomes `(b0, b1)`.
pub fn restrict_scalars(m: &Matrix) -> Matrix {
    let f = Field::Gf4;
    let n = m.rows();
    Matrix::from_fn(Field::Gf2, 2 * n, 2 * n, |r, c| {
        // row r is the basis vector ω^(r % 2) in coordinate r / 2
        let scalar = if r % 2 == 0 { 1 } else { 2 };
        let entry = f.mul(scalar, m.get(r / 2, c / 2));
        (entry >> (c % 2)) & 1
    })
}

/// The Frobenius map `x -> x^2` coordinatewise on `GF(4)^n`, as a `GF(2)`-linear map.
pub fn frobenius_gf2(n: usize) -> Matrix {
    Matrix::from_fn(Field::Gf2, 2 * n, 2 * n, |r, c| {
        if r / 2 != c / 2 {
            return 0;
        }
        // 1 -> 1, ω -> ω^2 = 1 + ω
        match (r % 2, c % 2) {
            (0, 0) | (1, 0) | (1, 1) => 1,
            _ => 0,
        }
    })
}

/// Second realization of `Aut(SU4(2))`: unitary transvections of `GF(4)^4`
/// and the Frobenius map, as `8 x 8` matrices over `GF(2)`.
pub fn make_aut_su4_semilinear(builder: &dyn GroupBuilder) -> Result<NamedGroup> {
    let herm = Form::hermitian_standard(4);
    let mut mats: Vec<Matrix> = herm.unitary_transvections().iter().map(restrict_scalars).collect();
    mats.push(frobenius_gf2(4));
    let rep = PermRep::new(&[(Field::Gf2, 8)]);
    let perms = mats.iter().map(|m| rep.perm(&[m])).collect::<Result<Vec<_>>>()?;
    let full = PermGroup::with_base_hint(rep.degree(), perms, &rep.base_hint())?;
    let small = small_generating_set(&full, GENERATOR_SEED)?;
    let group = builder.build("AutSU4_2-semilinear", rep.degree(), small, &rep.base_hint())?;
    let modules = vec![GModule::new(
        "AutSU4_2-semilinear",
        Field::Gf2,
        8,
        group.generators().iter().map(|g| rep.matrix(0, g)).collect(),
    )?];
    let ng = NamedGroup { name: GroupName::AutSu42, form: herm, rep, group, modules, spin_route: None };
    if ng.order() != classical_order(GroupName::AutSu42) {
        return Err(Error::Construction(format!("semilinear realization has order {}", ng.order())));
    }
    Ok(ng)
}

/// `W^⊥` for a bilinear or quadratic form.
pub fn perp(form: &Form, w: &Subspace) -> Result<Subspace> {
    let gram = match form.kind() {
        FormKind::Quadratic => form.polarize()?.matrix().clone(),
        _ => form.matrix().clone(),
    };
    if w.dim() == 0 {
        return Ok(Subspace::full(form.field(), form.dim()));
    }
    let b = Matrix::from_rows(form.field(), form.dim(), w.basis())?;
    Ok(gram.mul(&b.transpose()).left_kernel())
}

/// Order of the group induced by `mats` on `outer / inner`.
pub fn induced_image_order(mats: &[Matrix], outer: &Subspace, inner: &Subspace) -> Result<u64> {
    let sq = Subquotient::new(outer, inner)?;
    if sq.dim() == 0 {
        return Ok(1);
    }
    let induced = mats.iter().map(|m| sq.induced(m)).collect::<Result<Vec<_>>>()?;
    let rep = PermRep::new(&[(outer.field(), sq.dim())]);
    let perms = induced.iter().map(|m| rep.perm(&[m])).collect::<Result<Vec<_>>>()?;
    Ok(PermGroup::new(rep.degree(), perms)?.order())
}

/// True if every matrix fixes `outer / inner` pointwise.
pub fn centralizes_section(mats: &[Matrix], outer: &Subspace, inner: &Subspace) -> Result<bool> {
    let sq = Subquotient::new(outer, inner)?;
    Ok(mats.iter().map(|m| sq.induced(m)).collect::<Result<Vec<_>>>()?.iter().all(|m| m.is_identity()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for n in GroupName::ALL {
            assert_eq!(n.as_str().parse::<GroupName>().unwrap(), n);
        }
        assert!(matches!("Sp8_2".parse::<GroupName>(), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn blocks_and_matrices() {
        let rep = PermRep::new(&[(Field::Gf2, 3), (Field::Gf3, 2)]);
        assert_eq!(rep.degree(), 7 + 8);
        assert_eq!(rep.blocks()[0].basis_points(), vec![0, 1, 3]);
        let a = Matrix::from_rows(Field::Gf2, 3, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap();
        let b = Matrix::from_rows(Field::Gf3, 2, &[vec![1, 1], vec![0, 1]]).unwrap();
        let p = rep.perm(&[&a, &b]).unwrap();
        assert_eq!(rep.matrix(0, &p), a);
        assert_eq!(rep.matrix(1, &p), b);
        assert_eq!(p.order(), 3);
    }

    #[test]
    fn scalar_restriction_is_a_homomorphism() {
        let f = Field::Gf4;
        let a = Matrix::from_fn(f, 2, 2, |i, j| ((i * 3 + j * 2 + 1) % 4) as u8);
        let b = Matrix::from_fn(f, 2, 2, |i, j| ((i + j * 3) % 4) as u8);
        assert_eq!(restrict_scalars(&a.mul(&b)), restrict_scalars(&a).mul(&restrict_scalars(&b)));
        let phi = frobenius_gf2(2);
        assert_eq!(phi.mul(&phi), Matrix::identity(Field::Gf2, 4));
        // phi^-1 A phi is the Frobenius twist of A
        assert_eq!(phi.mul(&restrict_scalars(&a)).mul(&phi), restrict_scalars(&a.frobenius()));
    }

    #[test]
    fn small_groups_have_formula_orders() {
        for plus in [true, false] {
            let g = make_go4(plus, &DirectBuilder).unwrap();
            assert_eq!(g.order(), if plus { 1152 } else { 1440 });
        }
        assert_eq!(make_co4(&DirectBuilder).unwrap().order(), 2304);
        assert_eq!(make_su4(&DirectBuilder).unwrap().order(), 25920);
    }

    #[test]
    fn perp_of_flag() {
        let f = sp6_form();
        let v2 = Subspace::span(Field::Gf2, 6, [[1, 0, 0, 0, 0, 0].as_slice(), [0, 1, 0, 0, 0, 0].as_slice()]);
        let p = perp(&f, &v2).unwrap();
        assert_eq!(p.dim(), 4);
        assert!(v2.is_subspace_of(&p).unwrap());
        let q = o6_minus_form();
        assert_eq!(perp(&q, &v2).unwrap(), p);
        assert_eq!(q.witt_type().unwrap().0, crate::forms::WittType::Minus);
    }
}
