//! Extraspecial groups `p^{1+2n}` as pairs `(u, a)` with `u` in `F_p^{2n}`
//! and `a` in `F_p`, multiplied by `(u, a)(v, b) = (u + v, a + b + u M v^T)`.
//!
//! For `p = 2` the cocycle matrix `M` is the coefficient table of a quadratic
//! form `q`, so `(u, a)^2 = (0, q(u))` and commutators realize the
//! polarization of `q`. For `p = 3`, `M` is the strictly upper part of the
//! standard symplectic Gram matrix and the group has exponent 3.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{Form, WittType};
use crate::gf::Field;
use crate::grp::SmallGroupTable;
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExtraspecialType {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl From<WittType> for ExtraspecialType {
    fn from(w: WittType) -> Self {
        match w {
            WittType::Plus => ExtraspecialType::Plus,
            WittType::Minus => ExtraspecialType::Minus,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExtraspecialGroup {
    p: u8,
    n: usize,
    kind: ExtraspecialType,
    field: Field,
    cocycle: Matrix,
    /// The commutator form on `E/Z(E)`.
    symplectic: Matrix,
}

/// Largest supported order.
pub const MAX_ORDER: usize = 19683;

impl ExtraspecialGroup {
    /// `p^{1+2n}` of the given type. For `p = 3` only `Plus` (exponent 3) exists here.
    pub fn new(p: u8, n: usize, kind: ExtraspecialType) -> Result<Self> {
        let field = match p {
            2 => Field::Gf2,
            3 => Field::Gf3,
            _ => return Err(Error::Precondition(format!("unsupported prime {p}"))),
        };
        if n == 0 || (p as usize).pow(1 + 2 * n as u32) > MAX_ORDER {
            return Err(Error::Precondition(format!("unsupported size {p}^(1+{})", 2 * n)));
        }
        let cocycle = match (p, kind) {
            (2, ExtraspecialType::Plus) => Form::hyperbolic(field, n).matrix().clone(),
            (2, ExtraspecialType::Minus) => Form::elliptic(field, n)?.matrix().clone(),
            (3, ExtraspecialType::Plus) => {
                let gram = Form::symplectic_standard(field, 2 * n)?.matrix().clone();
                Matrix::from_fn(field, 2 * n, 2 * n, |i, j| if i < j { gram.get(i, j) } else { 0 })
            }
            _ => return Err(Error::Precondition("odd extraspecial groups are built with exponent p".into())),
        };
        let symplectic = cocycle.sub(&cocycle.transpose());
        let e = ExtraspecialGroup { p, n, kind, field, cocycle, symplectic };
        e.validate()?;
        Ok(e)
    }

    fn validate(&self) -> Result<()> {
        let z = self.center();
        if z.len() != self.p as usize {
            return Err(Error::Construction(format!("center of order {}", z.len())));
        }
        if self.symplectic.rank() != 2 * self.n {
            return Err(Error::Construction("degenerate commutator form".into()));
        }
        if self.p == 2 {
            let w: ExtraspecialType = self.squaring_form()?.witt_type()?.0.into();
            if w != self.kind {
                return Err(Error::Construction("squaring form has the wrong type".into()));
            }
        } else if self.exponent() != self.p as u64 {
            return Err(Error::Construction("odd extraspecial group not of exponent p".into()));
        }
        Ok(())
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ExtraspecialType {
        self.kind
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> usize {
        self.quotient_size() * self.p as usize
    }

    fn quotient_size(&self) -> usize {
        (self.p as usize).pow(2 * self.n as u32)
    }

    /// Commutator form on `E/Z(E)`: `[(u, a), (v, b)] = (0, B(u, v))`.
    pub fn symplectic_gram(&self) -> &Matrix {
        &self.symplectic
    }

    pub fn encode(&self, u: &[u8], a: u8) -> usize {
        self.field.encode(u) as usize + self.quotient_size() * a as usize
    }

    pub fn decode(&self, x: usize) -> (Vec<u8>, u8) {
        let q = self.quotient_size();
        (self.field.decode((x % q) as u64, 2 * self.n), (x / q) as u8)
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// The central element `(0, 1)`.
    pub fn z(&self) -> usize {
        self.quotient_size()
    }

    fn phi(&self, u: &[u8], v: &[u8]) -> u8 {
        let f = self.field;
        let mut acc = 0;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                let c = self.cocycle.get(i, j);
                if c != 0 && vj != 0 {
                    acc = f.add(acc, f.mul(f.mul(ui, c), vj));
                }
            }
        }
        acc
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        let f = self.field;
        let (u, a) = self.decode(x);
        let (v, b) = self.decode(y);
        let w: Vec<u8> = u.iter().zip(&v).map(|(&s, &t)| f.add(s, t)).collect();
        let c = f.add(f.add(a, b), self.phi(&u, &v));
        self.encode(&w, c)
    }

    pub fn inv(&self, x: usize) -> usize {
        let f = self.field;
        let (u, a) = self.decode(x);
        let nu: Vec<u8> = u.iter().map(|&s| f.neg(s)).collect();
        // (u, a)(-u, c) = (0, a + c - phi(u, u))
        let c = f.sub(self.phi(&u, &u), a);
        self.encode(&nu, c)
    }

    pub fn pow(&self, x: usize, e: u64) -> usize {
        (0..e).fold(self.identity(), |acc, _| self.mul(acc, x))
    }

    /// `x^-1 y^-1 x y`.
    pub fn comm(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn center(&self) -> Vec<usize> {
        let gens = self.generators();
        self.elements().filter(|&x| gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x))).collect()
    }

    /// `(e_i, 0)` for the standard basis.
    pub fn generators(&self) -> Vec<usize> {
        (0..2 * self.n)
            .map(|i| {
                let e: Vec<u8> = (0..2 * self.n).map(|j| (i == j) as u8).collect();
                self.encode(&e, 0)
            })
            .collect()
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != self.identity() {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        self.elements().map(|x| self.element_order(x)).fold(1, crate::grp::lcm)
    }

    /// For `p = 2`: the form `u -> a` where `(u, 0)^2 = (0, a)`, read off from squares and commutators.
    pub fn squaring_form(&self) -> Result<Form> {
        if self.p != 2 {
            return Err(Error::Precondition("squaring form needs p = 2".into()));
        }
        let gens = self.generators();
        let mut terms = Vec::new();
        for (i, &g) in gens.iter().enumerate() {
            terms.push((i, i, self.decode(self.mul(g, g)).1));
            for (j, &h) in gens.iter().enumerate().skip(i + 1) {
                terms.push((i, j, self.decode(self.comm(g, h)).1));
            }
        }
        Form::quadratic_from_terms(self.field, 2 * self.n, &terms)
    }

    pub fn table(&self) -> Result<SmallGroupTable> {
        SmallGroupTable::from_mul(self.order(), self.identity(), |i, j| self.mul(i, j))
    }

    /// Order of the largest elementary abelian subgroup, by exhaustive search.
    pub fn max_elementary_abelian_order(&self) -> Result<usize> {
        let t = self.table()?;
        let layers = t.elementary_abelian_subgroups(&t.all(), self.p as u32, 2_000_000)?;
        Ok(layers.last().and_then(|l| l.first()).map_or(1, |h| h.len()))
    }

    /// Type read off from the largest elementary abelian subgroup: `2^{1+n}` for `+`.
    pub fn type_from_subgroups(&self) -> Result<ExtraspecialType> {
        let m = self.max_elementary_abelian_order()?;
        Ok(if m == 1 << (self.n + 1) { ExtraspecialType::Plus } else { ExtraspecialType::Minus })
    }

    /// The map sending `(e_i, 0)` to `images[i]` and `z` to `z^s`, extended
    /// through the normal form `(u, a) = z^c (e_1, 0)^{u_1} ... (e_2n, 0)^{u_2n}`.
    /// Not checked to be a homomorphism.
    pub fn map_from_generators(&self, images: &[usize], s: u8) -> Result<Automorphism> {
        if images.len() != 2 * self.n {
            return Err(Error::Dimension(format!("{} generator images for {} generators", images.len(), 2 * self.n)));
        }
        let gens = self.generators();
        let zs = self.pow(self.z(), s as u64);
        let mut map = vec![0usize; self.order()];
        for x in self.elements() {
            let (u, a) = self.decode(x);
            let mut word = self.identity();
            let mut img = self.identity();
            for (i, &ui) in u.iter().enumerate() {
                word = self.mul(word, self.pow(gens[i], ui as u64));
                img = self.mul(img, self.pow(images[i], ui as u64));
            }
            let c = self.field.sub(a, self.decode(word).1);
            map[x] = self.mul(self.pow(zs, c as u64), img);
        }
        Ok(Automorphism { map })
    }

    /// Lift of a linear map `a` of `E/Z(E)`: `(e_i, 0) -> (e_i a, shifts_i)`, `z -> z^s`.
    pub fn lift(&self, a: &Matrix, shifts: &[u8], s: u8) -> Result<Automorphism> {
        let images: Vec<usize> = (0..2 * self.n).map(|i| self.encode(a.row(i), shifts[i])).collect();
        self.map_from_generators(&images, s)
    }

    pub fn inner(&self, g: usize) -> Automorphism {
        Automorphism { map: self.elements().map(|x| self.mul(self.mul(self.inv(g), x), g)).collect() }
    }

    pub fn is_automorphism(&self, alpha: &Automorphism) -> bool {
        let n = self.order();
        if alpha.map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &y in &alpha.map {
            if y >= n || std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        self.elements()
            .all(|x| self.elements().all(|y| alpha.map[self.mul(x, y)] == self.mul(alpha.map[x], alpha.map[y])))
    }

    /// Induced map on `E/Z(E)`, as a matrix acting on row vectors.
    pub fn induced_matrix(&self, alpha: &Automorphism) -> Matrix {
        let rows: Vec<Vec<u8>> = self.generators().iter().map(|&g| self.decode(alpha.map[g]).0).collect();
        Matrix::from_rows(self.field, 2 * self.n, &rows).expect("square")
    }
}

/// An automorphism as its table of images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub map: Vec<usize>,
}

impl Automorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { map: self.map.iter().map(|&y| other.map[y]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &y)| i == y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticVerdict {
    /// `alpha(z) = z^scalar`.
    pub scalar: u8,
    /// `B(u a, v a) = scalar B(u, v)` for the induced map `a`.
    pub preserves_up_to_scalar: bool,
    pub trivial_on_quotient: bool,
}

/// Checks that `alpha` is an automorphism and that its action on `E/Z(E)`
/// scales the commutator form by its action on `Z(E)`.
pub fn automorphism_symplectic_check(e: &ExtraspecialGroup, alpha: &Automorphism) -> Result<SymplecticVerdict> {
    if !e.is_automorphism(alpha) {
        return Err(Error::NotAutomorphism("map is not a bijective homomorphism".into()));
    }
    let (zv, scalar) = e.decode(alpha.apply(e.z()));
    if zv.iter().any(|&c| c != 0) {
        return Err(Error::NotAutomorphism("center not preserved".into()));
    }
    let a = e.induced_matrix(alpha);
    let b = e.symplectic_gram();
    let lhs = a.mul(b).mul(&a.transpose());
    Ok(SymplecticVerdict {
        scalar,
        preserves_up_to_scalar: lhs == b.scale(scalar),
        trivial_on_quotient: a.is_identity(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum InvolutionVerdict {
    /// Hypothesis holds and so do both conclusions.
    #[serde(rename = "holds")]
    Holds,
    /// Hypothesis holds but a conclusion fails.
    #[serde(rename = "fails")]
    Fails,
    #[serde(rename = "hypothesis-false")]
    HypothesisFalse,
}

/// For an automorphism `alpha` of order 2 of a 2-group `E`: if `z` is not of
/// the form `[w, alpha] = w^-1 w^alpha`, checks `[E, alpha] <= C_E(alpha)`
/// and that `[E, alpha]` is elementary abelian.
pub fn involution_action_test(e: &ExtraspecialGroup, alpha: &Automorphism) -> Result<InvolutionVerdict> {
    if e.p() != 2 {
        return Err(Error::Precondition("involution test needs p = 2".into()));
    }
    if !e.is_automorphism(alpha) {
        return Err(Error::NotAutomorphism("map is not a bijective homomorphism".into()));
    }
    if alpha.is_identity() || !alpha.compose(alpha).is_identity() {
        return Err(Error::Precondition("automorphism must have order 2".into()));
    }
    let comms: Vec<usize> = e.elements().map(|w| e.mul(e.inv(w), alpha.apply(w))).collect();
    if comms.contains(&e.z()) {
        return Ok(InvolutionVerdict::HypothesisFalse);
    }
    // subgroup generated by the commutators
    let mut sub = vec![false; e.order()];
    sub[e.identity()] = true;
    let mut members = vec![e.identity()];
    let mut k = 0;
    while k < members.len() {
        let x = members[k];
        for &c in &comms {
            let y = e.mul(x, c);
            if !sub[y] {
                sub[y] = true;
                members.push(y);
            }
        }
        k += 1;
    }
    let centralized = members.iter().all(|&x| alpha.apply(x) == x);
    let elementary = members.iter().all(|&x| e.mul(x, x) == e.identity())
        && members.iter().all(|&x| members.iter().all(|&y| e.mul(x, y) == e.mul(y, x)));
    Ok(if centralized && elementary { InvolutionVerdict::Holds } else { InvolutionVerdict::Fails })
}

/// All matrices of `GL(2n, 2)` preserving the squaring form of `e`, by exhaustive scan.
pub fn orthogonal_group_of(e: &ExtraspecialGroup) -> Result<Vec<Matrix>> {
    let q = e.squaring_form()?;
    let d = 2 * e.n();
    if d > 4 {
        return Err(Error::Precondition("exhaustive orthogonal scan limited to dimension 4".into()));
    }
    let f = e.field();
    let total = 1u64 << (d * d);
    let vecs: Vec<Vec<u8>> = (1..f.space_size(d)).map(|c| f.decode(c, d)).collect();
    Ok((0..total)
        .map(|bits| Matrix::from_fn(f, d, d, |i, j| ((bits >> (i * d + j)) & 1) as u8))
        .filter(|m| m.rank() == d && vecs.iter().all(|v| q.q(&m.apply(v)) == q.q(v)))
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct HarnessReport {
    pub kind: ExtraspecialType,
    pub orthogonal_order: usize,
    pub involutions: usize,
    pub automorphisms_tested: usize,
    pub holds: usize,
    pub fails: usize,
    pub hypothesis_false: usize,
}

/// Runs [`involution_action_test`] on every order-2 lift of every involution of
/// the orthogonal group of the squaring form, over all central shifts.
pub fn involution_harness(e: &ExtraspecialGroup) -> Result<HarnessReport> {
    let og = orthogonal_group_of(e)?;
    let d = 2 * e.n();
    let id = Matrix::identity(e.field(), d);
    let invols: Vec<&Matrix> = og.iter().filter(|m| !m.is_identity() && m.mul(m) == id).collect();
    let mut report = HarnessReport {
        kind: e.kind(),
        orthogonal_order: og.len(),
        involutions: invols.len(),
        automorphisms_tested: 0,
        holds: 0,
        fails: 0,
        hypothesis_false: 0,
    };
    for a in &invols {
        for bits in 0..(1u32 << d) {
            let shifts: Vec<u8> = (0..d).map(|i| ((bits >> i) & 1) as u8).collect();
            let alpha = e.lift(a, &shifts, 1)?;
            if !e.is_automorphism(&alpha) || !alpha.compose(&alpha).is_identity() {
                continue;
            }
            report.automorphisms_tested += 1;
            match involution_action_test(e, &alpha)? {
                InvolutionVerdict::Holds => report.holds += 1,
                InvolutionVerdict::Fails => report.fails += 1,
                InvolutionVerdict::HypothesisFalse => report.hypothesis_false += 1,
            }
        }
    }
    Ok(report)
}

/// The order-2 automorphism of `3^{1+2n}` lifting `diag(1, .., 1, -1, .., -1)`,
/// which scales the commutator form by `-1` and inverts `Z(E)`.
pub fn minus_similitude_lift(e: &ExtraspecialGroup) -> Result<Automorphism> {
    if e.p() != 3 {
        return Err(Error::Precondition("needs p = 3".into()));
    }
    let d = 2 * e.n();
    let f = e.field();
    let a = Matrix::from_fn(f, d, d, |i, j| {
        if i != j {
            0
        } else if i < e.n() {
            1
        } else {
            f.neg(1)
        }
    });
    let alpha = e.lift(&a, &vec![0; d], 2)?;
    if !e.is_automorphism(&alpha) {
        return Err(Error::Construction("similitude lift is not an automorphism".into()));
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_groups() {
        let d8 = ExtraspecialGroup::new(2, 1, ExtraspecialType::Plus).unwrap();
        let q8 = ExtraspecialGroup::new(2, 1, ExtraspecialType::Minus).unwrap();
        assert_eq!(d8.order(), 8);
        let invs = |e: &ExtraspecialGroup| e.elements().filter(|&x| e.element_order(x) == 2).count();
        assert_eq!(invs(&d8), 5);
        assert_eq!(invs(&q8), 1);
        let t = d8.table().unwrap();
        let layers = t.elementary_abelian_subgroups(&t.all(), 2, 1000).unwrap();
        assert_eq!(layers[1].len(), 2);
        assert_eq!(layers.len(), 2);
    }

    #[test]
    fn three_group_is_exponent_three() {
        let e = ExtraspecialGroup::new(3, 2, ExtraspecialType::Plus).unwrap();
        assert_eq!(e.order(), 243);
        assert_eq!(e.exponent(), 3);
        assert_eq!(e.center().len(), 3);
        assert!(ExtraspecialGroup::new(3, 2, ExtraspecialType::Minus).is_err());
        assert!(ExtraspecialGroup::new(5, 1, ExtraspecialType::Plus).is_err());
        assert!(ExtraspecialGroup::new(3, 5, ExtraspecialType::Plus).is_err());
    }

    #[test]
    fn automorphism_checks() {
        let e = ExtraspecialGroup::new(3, 2, ExtraspecialType::Plus).unwrap();
        let id = e.lift(&Matrix::identity(Field::Gf3, 4), &[0; 4], 1).unwrap();
        assert!(id.is_identity());
        let v = automorphism_symplectic_check(&e, &id).unwrap();
        assert_eq!(v, SymplecticVerdict { scalar: 1, preserves_up_to_scalar: true, trivial_on_quotient: true });
        let inner = e.inner(e.generators()[1]);
        let v = automorphism_symplectic_check(&e, &inner).unwrap();
        assert!(v.trivial_on_quotient && v.scalar == 1);
        let m = minus_similitude_lift(&e).unwrap();
        let v = automorphism_symplectic_check(&e, &m).unwrap();
        assert_eq!(v.scalar, 2);
        assert!(v.preserves_up_to_scalar);
        assert!(m.compose(&m).is_identity());
        let bad = Automorphism { map: vec![0; e.order()] };
        assert!(matches!(automorphism_symplectic_check(&e, &bad), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn types_agree() {
        for n in 1..=2 {
            for kind in [ExtraspecialType::Plus, ExtraspecialType::Minus] {
                let e = ExtraspecialGroup::new(2, n, kind).unwrap();
                assert_eq!(e.type_from_subgroups().unwrap(), kind);
            }
        }
    }

    #[test]
    fn harness_on_small_groups() {
        let mut holds = 0;
        for kind in [ExtraspecialType::Plus, ExtraspecialType::Minus] {
            let e = ExtraspecialGroup::new(2, 2, kind).unwrap();
            let r = involution_harness(&e).unwrap();
            println!("{r:?}");
            assert_eq!(r.orthogonal_order, if kind == ExtraspecialType::Plus { 72 } else { 120 });
            assert_eq!(r.fails, 0);
            assert_eq!(r.holds + r.hypothesis_false, r.automorphisms_tested);
            holds += r.holds;
        }
        assert!(holds > 0);
    }

    #[test]
    fn identity_is_rejected_by_harness_precondition() {
        let e = ExtraspecialGroup::new(2, 1, ExtraspecialType::Plus).unwrap();
        let id = Automorphism { map: e.elements().collect() };
        assert!(matches!(involution_action_test(&e, &id), Err(Error::Precondition(_))));
    }

    proptest! {
        #[test]
        fn commutators_follow_the_form(x in 0usize..243, y in 0usize..243) {
            let e = ExtraspecialGroup::new(3, 2, ExtraspecialType::Plus).unwrap();
            let (u, _) = e.decode(x);
            let (v, _) = e.decode(y);
            let c = e.decode(e.comm(x, y));
            let b = e.symplectic_gram();
            let f = Field::Gf3;
            let mut val = 0;
            for i in 0..4 { for j in 0..4 { val = f.add(val, f.mul(f.mul(u[i], b.get(i, j)), v[j])); } }
            prop_assert_eq!(c, (vec![0; 4], val));
        }

        #[test]
        fn multiplication_is_associative(x in 0usize..243, y in 0usize..243, z in 0usize..243) {
            let e = ExtraspecialGroup::new(3, 2, ExtraspecialType::Plus).unwrap();
            prop_assert_eq!(e.mul(e.mul(x, y), z), e.mul(x, e.mul(y, z)));
        }
    }
}
