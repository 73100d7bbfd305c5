//! Parabolic subgroups of `Sp6_2` over a Sylow 2-subgroup and their action
//! on the natural and spin modules.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{centralizes_section, induced_image_order, perp, NamedGroup, PermRep};
use crate::chamber::CosetSpace;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::grp::{
    conjugacy_class, generated_by_p_prime_elements, normalizer_bruteforce, p_core, stabilizer, sylow_subgroup, Perm,
    PermGroup, SmallGroupTable, ENUMERATION_BUDGET, ORBIT_BUDGET,
};
use crate::linalg::{all_subspaces, commutator_space, Matrix, Subquotient, Subspace};
use crate::modrep::fixed_points;

/// Minimal parabolics `X_1, X_2, X_3` over `S` and their pairwise joins.
#[derive(Clone, Debug)]
pub struct ParabolicSet {
    pub s: PermGroup,
    pub minimal: [PermGroup; 3],
    pub x12: PermGroup,
    pub x13: PermGroup,
    pub x23: PermGroup,
    /// `|X_ij / O_2(X_ij)|` for `12`, `13`, `23`.
    pub quotient_orders: [u64; 3],
    /// `|X_i / O_2(X_i)|`.
    pub minimal_quotient_orders: [u64; 3],
}

impl ParabolicSet {
    pub fn x(&self, i: usize) -> &PermGroup {
        &self.minimal[i - 1]
    }
}

fn join(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    PermGroup::with_base_hint(a.degree(), gens, &a.base())
}

fn quotient_by_o2(p: &PermGroup, s: &PermGroup) -> Result<u64> {
    Ok(p.order() / p_core(p, s, ENUMERATION_BUDGET)?.order())
}

/// Finds the minimal parabolics as `<S, g>` for the cosets `Sg` lying in
/// `S`-orbits of length 2, then fixes labels by the quotient orders of the
/// pairwise joins: 168 for `X_12`, 720 for `X_23`, 36 for `X_13`.
pub fn parabolics(x: &NamedGroup, s: &PermGroup) -> Result<ParabolicSet> {
    let space = CosetSpace::new(&x.group, s, ORBIT_BUDGET)?;
    let mut found: Vec<PermGroup> = Vec::new();
    for orbit in space.orbits_of(s) {
        if orbit.len() == 2 {
            let mut gens = s.generators().to_vec();
            gens.push(space.rep(orbit[0]).clone());
            found.push(x.group.subgroup(gens)?);
        }
    }
    if found.len() != 3 {
        return Err(Error::Construction(format!("{} S-orbits of length 2 on chambers", found.len())));
    }
    let mut pair_order = std::collections::HashMap::new();
    let mut joins = std::collections::HashMap::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let p = join(&found[i], &found[j])?;
        let q = quotient_by_o2(&p, s)?;
        pair_order.insert(q, (i, j));
        joins.insert((i, j), p);
    }
    let (a, b, c) = match (pair_order.get(&168), pair_order.get(&36), pair_order.get(&720)) {
        (Some(&p12), Some(&p13), Some(&p23)) => (p12, p13, p23),
        _ => return Err(Error::Construction(format!("unexpected join quotients {:?}", pair_order.keys()))),
    };
    let common = |u: (usize, usize), v: (usize, usize)| [u.0, u.1].into_iter().find(|k| *k == v.0 || *k == v.1);
    let i1 = common(a, b).ok_or_else(|| Error::Construction("labels".into()))?;
    let i2 = common(a, c).ok_or_else(|| Error::Construction("labels".into()))?;
    let i3 = common(b, c).ok_or_else(|| Error::Construction("labels".into()))?;
    let minimal = [found[i1].clone(), found[i2].clone(), found[i3].clone()];
    let minimal_quotient_orders =
        [quotient_by_o2(&minimal[0], s)?, quotient_by_o2(&minimal[1], s)?, quotient_by_o2(&minimal[2], s)?];
    Ok(ParabolicSet {
        s: s.clone(),
        minimal,
        x12: joins[&a].clone(),
        x13: joins[&b].clone(),
        x23: joins[&c].clone(),
        quotient_orders: [168, 36, 720],
        minimal_quotient_orders,
    })
}

/// The sorted list of points of the nonzero vectors of `w` in block `block`.
pub fn subspace_points(rep: &PermRep, block: usize, w: &Subspace) -> Vec<u32> {
    let b = &rep.blocks()[block];
    let mut pts: Vec<u32> = w.vectors().filter_map(|v| b.point(&v)).collect();
    pts.sort_unstable();
    pts
}

/// Setwise stabilizer of a subspace of block `block`.
pub fn subspace_stabilizer(x: &NamedGroup, block: usize, w: &Subspace) -> Result<PermGroup> {
    let start = subspace_points(&x.rep, block, w);
    let (st, _) = stabilizer(
        &x.group,
        start,
        |pts, g| {
            let mut v: Vec<u32> = pts.iter().map(|&p| g.image(p)).collect();
            v.sort_unstable();
            v
        },
        ORBIT_BUDGET,
    )?;
    Ok(st)
}

/// The `S`-invariant subspaces of each dimension of block `block`.
pub fn invariant_subspaces(x: &NamedGroup, s: &PermGroup, block: usize, k: usize) -> Vec<Subspace> {
    let b = &x.rep.blocks()[block];
    let mats: Vec<Matrix> = s.generators().iter().map(|g| x.matrix(block, g)).collect();
    all_subspaces(b.field, b.dim, k).into_iter().filter(|w| mats.iter().all(|m| w.is_invariant(m))).collect()
}

fn mats_of(x: &NamedGroup, g: &PermGroup, block: usize) -> Vec<Matrix> {
    g.generators().iter().map(|h| x.matrix(block, h)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct NaturalReport {
    pub orbit_lengths: Vec<usize>,
    /// Number of `S`-invariant subspaces in dimensions 1 to 5.
    pub invariant_counts: Vec<usize>,
    pub n_v1_is_x23: bool,
    pub n_v2_is_x13: bool,
    pub n_v3_is_x12: bool,
    pub x23_on_v1perp_mod_v1: u64,
    pub x12_on_v3: u64,
    pub x12_on_v_mod_v3: u64,
    pub o2x3_centralizes_v2: bool,
    pub o2x3_centralizes_v_mod_v2perp: bool,
    pub o2x1_centralizes_v2perp_mod_v2: bool,
}

/// The flag `V_1 < V_2 < V_3` of `S`-invariant subspaces, if each is unique.
pub fn natural_flag(x: &NamedGroup, s: &PermGroup) -> Result<[Subspace; 3]> {
    let mut out = Vec::new();
    for k in 1..=3 {
        let mut ws = invariant_subspaces(x, s, 0, k);
        if ws.len() != 1 {
            return Err(Error::Construction(format!("{} S-invariant {k}-spaces", ws.len())));
        }
        out.push(ws.remove(0));
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

pub fn natural_report(x: &NamedGroup, ps: &ParabolicSet) -> Result<NaturalReport> {
    let s = &ps.s;
    let mut orbit_lengths: Vec<usize> = crate::grp::point_orbits(x.group.generators(), x.rep.degree())
        .iter()
        .filter(|o| x.rep.blocks()[0].contains_point(o[0]))
        .map(|o| o.len())
        .collect();
    orbit_lengths.sort_unstable_by(|a, b| b.cmp(a));
    let invariant_counts: Vec<usize> = (1..=5).map(|k| invariant_subspaces(x, s, 0, k).len()).collect();
    let [v1, v2, v3] = natural_flag(x, s)?;
    let f = Field::Gf2;
    let zero = Subspace::zero(f, 6);
    let full = Subspace::full(f, 6);
    let v1p = perp(&x.form, &v1)?;
    let v2p = perp(&x.form, &v2)?;
    let o2x1 = generated_by_p_prime_elements(ps.x(1), 2, ENUMERATION_BUDGET)?;
    let o2x3 = generated_by_p_prime_elements(ps.x(3), 2, ENUMERATION_BUDGET)?;
    let m12 = mats_of(x, &ps.x12, 0);
    Ok(NaturalReport {
        orbit_lengths,
        invariant_counts,
        n_v1_is_x23: subspace_stabilizer(x, 0, &v1)?.same_group(&ps.x23),
        n_v2_is_x13: subspace_stabilizer(x, 0, &v2)?.same_group(&ps.x13),
        n_v3_is_x12: subspace_stabilizer(x, 0, &v3)?.same_group(&ps.x12),
        x23_on_v1perp_mod_v1: induced_image_order(&mats_of(x, &ps.x23, 0), &v1p, &v1)?,
        x12_on_v3: induced_image_order(&m12, &v3, &zero)?,
        x12_on_v_mod_v3: induced_image_order(&m12, &full, &v3)?,
        o2x3_centralizes_v2: centralizes_section(&mats_of(x, &o2x3, 0), &v2, &zero)?,
        o2x3_centralizes_v_mod_v2perp: centralizes_section(&mats_of(x, &o2x3, 0), &full, &v2p)?,
        o2x1_centralizes_v2perp_mod_v2: centralizes_section(&mats_of(x, &o2x1, 0), &v2p, &v2)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinReport {
    pub orbit_lengths: Vec<usize>,
    pub dim_cu_s: usize,
    pub n_cus_is_x12: bool,
    pub cu_s_equals_cu_o2x12: bool,
    pub invariant_2spaces: usize,
    pub n_u2_is_x13: bool,
    pub o2x1_centralizes_u2: bool,
}

pub fn spin_report(x: &NamedGroup, ps: &ParabolicSet) -> Result<SpinReport> {
    let ublock = &x.rep.blocks()[1];
    let mut orbit_lengths: Vec<usize> = crate::grp::point_orbits(x.group.generators(), x.rep.degree())
        .iter()
        .filter(|o| ublock.contains_point(o[0]))
        .map(|o| o.len())
        .collect();
    orbit_lengths.sort_unstable_by(|a, b| b.cmp(a));
    let f = ublock.field;
    let cus = fixed_points(f, 8, &mats_of(x, &ps.s, 1));
    let o2 = p_core(&ps.x12, &ps.s, ENUMERATION_BUDGET)?;
    let cuo2 = fixed_points(f, 8, &mats_of(x, &o2, 1));
    let u2s = invariant_subspaces(x, &ps.s, 1, 2);
    let o2x1 = generated_by_p_prime_elements(ps.x(1), 2, ENUMERATION_BUDGET)?;
    let (n_u2, cent) = match u2s.first() {
        Some(u2) => (
            u2s.len() == 1 && subspace_stabilizer(x, 1, u2)?.same_group(&ps.x13),
            centralizes_section(&mats_of(x, &o2x1, 1), u2, &Subspace::zero(f, 8))?,
        ),
        None => (false, false),
    };
    Ok(SpinReport {
        orbit_lengths,
        dim_cu_s: cus.dim(),
        n_cus_is_x12: cus.dim() == 1 && subspace_stabilizer(x, 1, &cus)?.same_group(&ps.x12),
        cu_s_equals_cu_o2x12: cus == cuo2,
        invariant_2spaces: u2s.len(),
        n_u2_is_x13: n_u2,
        o2x1_centralizes_u2: cent,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LineReport {
    pub q_order: u64,
    pub p_over_q: u64,
    /// Order of the image of `P` on `V_2 ⊕ V_2^⊥/V_2`, a subgroup of `SL2(2) × SL2(2)`.
    pub image_on_sections: u64,
    pub q_is_kernel: bool,
    /// `dim [V, z]` for the four subgroups `<z>` of order 3 in `T`.
    pub t_subgroup_dims: Vec<usize>,
    pub tau3_fused_in_normalizer: bool,
    pub cq_z_orders: Vec<usize>,
    pub cq_z_quaternion: bool,
    pub cq_z_commute: bool,
    pub center_order: usize,
    pub derived_order: usize,
    pub ct_zq_is_tau1: bool,
    pub cq_tau1_is_zq: bool,
    pub t_invariant_order8: usize,
    pub t_invariant_order8_expected: bool,
    pub t_class_leaves_center: bool,
}

fn is_quaternion(t: &SmallGroupTable, h: &crate::grp::ElemSet) -> bool {
    h.len() == 8 && h.iter().filter(|&i| t.element_order(i) == 2).count() == 1 && t.exponent_of(h) == 4
}

/// Structure of `Q = O_2(X_13)` under a Sylow 3-subgroup `T` of `X_13`.
pub fn line_report(x: &NamedGroup, ps: &ParabolicSet) -> Result<LineReport> {
    let p = &ps.x13;
    let q = p_core(p, &ps.s, ENUMERATION_BUDGET)?;
    let t = sylow_subgroup(p, 3)?;
    let [_, v2, _] = natural_flag(x, &ps.s)?;
    let v2p = perp(&x.form, &v2)?;
    let f = Field::Gf2;
    let sq1 = Subquotient::new(&v2, &Subspace::zero(f, 6))?;
    let sq2 = Subquotient::new(&v2p, &v2)?;
    let rep = PermRep::new(&[(f, sq1.dim()), (f, sq2.dim())]);
    let induced = |g: &Perm| -> Result<Perm> {
        let m = x.natural_matrix(g);
        rep.perm(&[&sq1.induced(&m)?, &sq2.induced(&m)?])
    };
    let img = PermGroup::new(rep.degree(), p.generators().iter().map(induced).collect::<Result<Vec<_>>>()?)?;
    let q_trivial = q.generators().iter().map(induced).collect::<Result<Vec<_>>>()?.iter().all(|g| g.is_identity());

    let (table, elems) = SmallGroupTable::from_perm_group(&q)?;
    let idx = |g: &Perm| elems.binary_search(g).expect("element of Q");
    let all = table.all();
    let zq = table.center();
    let dq = table.derived_subgroup();
    let telems = t.elements(ENUMERATION_BUDGET)?;
    let mut subs: Vec<(usize, Perm)> = Vec::new();
    let mut seen = BTreeSet::new();
    for z in telems.iter().filter(|z| z.order() == 3) {
        if seen.contains(z) {
            continue;
        }
        seen.insert(z.clone());
        seen.insert(z.inv());
        subs.push((commutator_space(&x.natural_matrix(z))?.dim(), z.clone()));
    }
    subs.sort();
    let t_subgroup_dims: Vec<usize> = subs.iter().map(|s| s.0).collect();
    let tau3: Vec<&Perm> = subs.iter().filter(|s| s.0 == 6).map(|s| &s.1).collect();
    let tau1 = subs.iter().find(|s| s.0 == 2).map(|s| s.1.clone());

    let cent_in_q =
        |z: &Perm| table.set_of(elems.iter().enumerate().filter(|(_, y)| y.mul(z) == z.mul(y)).map(|(i, _)| i));
    let mut fused = false;
    let mut cq_z = Vec::new();
    if tau3.len() == 2 {
        let n = normalizer_bruteforce(p, &t, ENUMERATION_BUDGET)?;
        let z2: BTreeSet<Perm> = [tau3[1].clone(), tau3[1].inv()].into_iter().collect();
        n.for_each_element(|g| {
            if z2.contains(&tau3[0].conj(g)) {
                fused = true;
                return false;
            }
            true
        });
        cq_z = vec![cent_in_q(tau3[0]), cent_in_q(tau3[1])];
    }
    let cq_z_commute =
        cq_z.len() == 2 && cq_z[0].iter().all(|a| cq_z[1].iter().all(|b| table.mul(a, b) == table.mul(b, a)));

    let zq_perms: Vec<&Perm> = zq.iter().map(|i| &elems[i]).collect();
    let ct_zq: BTreeSet<Perm> =
        telems.iter().filter(|g| zq_perms.iter().all(|z| g.mul(z) == z.mul(g))).cloned().collect();
    let (ct_zq_is_tau1, cq_tau1_is_zq) = match &tau1 {
        Some(t1) => {
            let want: BTreeSet<Perm> = [t1.pow(0), t1.clone(), t1.inv()].into_iter().collect();
            (ct_zq == want, cent_in_q(t1) == zq)
        }
        None => (false, false),
    };

    let trivial = table.generate(&[]);
    let layers = table.subgroups_between(&trivial, &all, 2, 8, 1_000_000)?;
    let t_gens: Vec<&Perm> = t.generators().iter().collect();
    let invariant: Vec<crate::grp::ElemSet> = layers
        .iter()
        .flatten()
        .filter(|h| h.len() == 8)
        .filter(|h| t_gens.iter().all(|g| h.iter().all(|i| h.contains(idx(&elems[i].conj(g))))))
        .cloned()
        .collect();
    let mut expected: Vec<crate::grp::ElemSet> = cq_z.clone();
    expected.push(zq.clone());
    expected.sort();
    expected.dedup();
    let mut got = invariant.clone();
    got.sort();

    let t_class_leaves_center = if dq.len() == 2 {
        let tt = dq.iter().find(|&i| i != table.identity()).map(|i| elems[i].clone()).expect("order 2");
        let class = conjugacy_class(&x.group, &tt, ORBIT_BUDGET)?;
        class.points.iter().any(|y| elems.binary_search(y).map(|i| !zq.contains(i)).unwrap_or(false))
    } else {
        false
    };

    Ok(LineReport {
        q_order: q.order(),
        p_over_q: p.order() / q.order(),
        image_on_sections: img.order(),
        q_is_kernel: q_trivial && img.order() * q.order() == p.order(),
        t_subgroup_dims,
        tau3_fused_in_normalizer: fused,
        cq_z_orders: cq_z.iter().map(|h| h.len()).collect(),
        cq_z_quaternion: cq_z.len() == 2 && cq_z.iter().all(|h| is_quaternion(&table, h)),
        cq_z_commute,
        center_order: zq.len(),
        derived_order: dq.len(),
        ct_zq_is_tau1,
        cq_tau1_is_zq,
        t_invariant_order8: invariant.len(),
        t_invariant_order8_expected: got == expected && expected.len() == 3,
        t_class_leaves_center,
    })
}
