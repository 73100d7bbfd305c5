//! Involution and order-3 class censuses, and the subgroup searches inside
//! Sylow subgroups.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::NamedGroup;
use crate::error::{Error, Result};
use crate::forms::{Form, FormKind};
use crate::grp::{
    centralizer, classes_of, conjugacy_class, derived_subgroup, sylow_subgroup, ElemSet, Perm, PermGroup,
    SmallGroupTable, ENUMERATION_BUDGET, ORBIT_BUDGET,
};
use crate::linalg::{commutator_space, fixed_space, Matrix, Subspace};
use crate::modrep::{offender_search, Offender};

/// Suzuki names of involution classes, in the row order of the reference table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Suzuki {
    #[serde(rename = "a2")]
    A2,
    #[serde(rename = "b3")]
    B3,
    #[serde(rename = "b1")]
    B1,
    #[serde(rename = "c2")]
    C2,
}

impl Suzuki {
    pub const ALL: [Suzuki; 4] = [Suzuki::A2, Suzuki::B3, Suzuki::B1, Suzuki::C2];

    pub fn label(self) -> &'static str {
        match self {
            Suzuki::A2 => "a2",
            Suzuki::B3 => "b3",
            Suzuki::B1 => "b1",
            Suzuki::C2 => "c2",
        }
    }

    pub fn swap_ac(self) -> Suzuki {
        match self {
            Suzuki::A2 => Suzuki::C2,
            Suzuki::C2 => Suzuki::A2,
            s => s,
        }
    }
}

impl fmt::Display for Suzuki {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Suzuki name of the involution `g` of a symplectic or orthogonal space in
/// characteristic 2.
pub fn suzuki_class(g: &Matrix, form: &Form) -> Result<Suzuki> {
    let id = Matrix::identity(g.field(), g.rows());
    if g.is_identity() || g.mul(g) != id {
        return Err(Error::NotInvolutionClass);
    }
    let comm = commutator_space(g)?;
    match comm.dim() {
        1 => Ok(Suzuki::B1),
        3 => Ok(Suzuki::B3),
        2 => {
            let a = match form.kind() {
                FormKind::Quadratic => comm.vectors().all(|v| form.q(&v) == 0),
                _ => Subspace::full(g.field(), g.rows()).vectors().all(|v| form.pair(&v, &g.apply(&v)) == 0),
            };
            Ok(if a { Suzuki::A2 } else { Suzuki::C2 })
        }
        _ => Err(Error::NotInvolutionClass),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutionClassRow {
    pub name: Suzuki,
    pub size: u64,
    pub centralizer_order: u64,
    pub dim_cu: Option<usize>,
    pub dim_cv: usize,
    pub in_derived: bool,
    #[serde(skip)]
    pub rep: Perm,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutionCensus {
    pub group: String,
    pub order: u64,
    /// Rows sorted into reference order.
    pub rows: Vec<InvolutionClassRow>,
    /// The name is constant on every full conjugacy class.
    pub names_constant: bool,
    /// Distinct classes receive distinct names.
    pub names_distinct: bool,
    /// Every row satisfies `size * centralizer_order = |G|`.
    pub orbit_stabilizer: bool,
    /// Involutions in a Sylow 2-subgroup, for reference.
    pub sylow_involutions: usize,
}

impl InvolutionCensus {
    pub fn row(&self, name: Suzuki) -> Option<&InvolutionClassRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

fn module_block(ng: &NamedGroup, g: &Perm, block: usize) -> Matrix {
    ng.matrix(block, g)
}

/// Classes of involutions of `ng`, named with `form` on the natural module.
pub fn involution_census_with(ng: &NamedGroup, s: &PermGroup, form: &Form) -> Result<InvolutionCensus> {
    let invs: Vec<Perm> = s.elements(ENUMERATION_BUDGET)?.into_iter().filter(|x| x.order() == 2).collect();
    let classes = classes_of(&ng.group, &invs, ORBIT_BUDGET)?;
    let derived = derived_subgroup(&ng.group)?;
    let has_u = ng.rep.blocks().len() > 1;
    let mut rows = Vec::new();
    let mut names_constant = true;
    let mut orbit_stabilizer = true;
    for c in &classes {
        let name = suzuki_class(&ng.natural_matrix(&c.rep), form)?;
        let orbit = conjugacy_class(&ng.group, &c.rep, ORBIT_BUDGET)?;
        for y in &orbit.points {
            if suzuki_class(&ng.natural_matrix(y), form)? != name {
                names_constant = false;
                break;
            }
        }
        let cent = centralizer(&ng.group, &c.rep)?;
        orbit_stabilizer &= cent.order() * orbit.len() as u64 == ng.order();
        rows.push(InvolutionClassRow {
            name,
            size: orbit.len() as u64,
            centralizer_order: cent.order(),
            dim_cu: has_u.then(|| fixed_space(&module_block(ng, &c.rep, 1)).map(|f| f.dim())).transpose()?,
            dim_cv: fixed_space(&ng.natural_matrix(&c.rep))?.dim(),
            in_derived: derived.contains(&c.rep),
            rep: c.rep.clone(),
        });
    }
    rows.sort_by_key(|r| (r.name, r.size));
    let mut names: Vec<Suzuki> = rows.iter().map(|r| r.name).collect();
    names.dedup();
    Ok(InvolutionCensus {
        group: ng.name.to_string(),
        order: ng.order(),
        names_distinct: names.len() == rows.len(),
        rows,
        names_constant,
        orbit_stabilizer,
        sylow_involutions: invs.len(),
    })
}

/// Census named with the group's own form on `V`.
pub fn involution_census(ng: &NamedGroup, s: &PermGroup) -> Result<InvolutionCensus> {
    involution_census_with(ng, s, &ng.form)
}

/// One reference row: name, class size, centralizer order, `dim C_U`, `dim C_V`.
pub type ReferenceRow = (Suzuki, u64, u64, usize, usize);

/// How census rows compare with reference rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RowMatch {
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "label-permuted")]
    LabelPermuted,
    #[serde(rename = "mismatch")]
    Mismatch,
}

/// Compares a census with reference rows, allowing an `a2`/`c2` relabelling.
pub fn match_rows(census: &InvolutionCensus, reference: &[ReferenceRow]) -> RowMatch {
    let key = |swap: bool| -> Vec<ReferenceRow> {
        let mut v: Vec<ReferenceRow> = census
            .rows
            .iter()
            .map(|r| {
                let n = if swap { r.name.swap_ac() } else { r.name };
                (n, r.size, r.centralizer_order, r.dim_cu.unwrap_or(0), r.dim_cv)
            })
            .collect();
        v.sort();
        v
    };
    let mut want = reference.to_vec();
    want.sort();
    if key(false) == want {
        RowMatch::Exact
    } else if key(true) == want {
        RowMatch::LabelPermuted
    } else {
        RowMatch::Mismatch
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeClassRow {
    pub comm_dim: usize,
    pub size: u64,
    pub centralizer_order: u64,
    #[serde(skip)]
    pub rep: Perm,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeReport {
    pub group: String,
    pub sylow_order: u64,
    /// Sorted by `dim [V, τ]`.
    pub classes: Vec<ThreeClassRow>,
    /// Each value of `dim [V, τ]` occurs in exactly one class.
    pub dims_separate_classes: bool,
    pub thompson_order: usize,
    pub thompson_elementary: bool,
    /// The Thompson subgroup is the unique elementary abelian subgroup of maximal order.
    pub thompson_unique_max_elementary: bool,
    /// Every class has a member in the Thompson subgroup.
    pub meets_every_class: bool,
    /// Some choice of one member of each class inside the Thompson subgroup generates it.
    pub generated_by_class_reps: bool,
}

/// Order-3 classes of `ng` and the Thompson subgroup of a Sylow 3-subgroup.
pub fn three_classes(ng: &NamedGroup) -> Result<ThreeReport> {
    let t = sylow_subgroup(&ng.group, 3)?;
    let (table, elems) = SmallGroupTable::from_perm_group(&t)?;
    let threes: Vec<Perm> = elems.iter().filter(|x| x.order() == 3).cloned().collect();
    let classes = classes_of(&ng.group, &threes, ORBIT_BUDGET)?;
    let mut rows = Vec::new();
    for c in &classes {
        rows.push(ThreeClassRow {
            comm_dim: commutator_space(&ng.natural_matrix(&c.rep))?.dim(),
            size: c.size as u64,
            centralizer_order: ng.order() / c.size as u64,
            rep: c.rep.clone(),
        });
    }
    rows.sort_by_key(|r| (r.comm_dim, r.size));
    let mut dims: Vec<usize> = rows.iter().map(|r| r.comm_dim).collect();
    dims.dedup();

    let all = table.all();
    let trivial = table.generate(&[]);
    let layers = table.subgroups_between(&trivial, &all, 3, all.len(), 1_000_000)?;
    let abelian: Vec<&ElemSet> = layers.iter().flatten().filter(|h| table.is_abelian(h)).collect();
    let max = abelian.iter().map(|h| h.len()).max().unwrap_or(1);
    let gens: Vec<usize> = abelian.iter().filter(|h| h.len() == max).flat_map(|h| h.iter()).collect();
    let j = table.generate(&gens);
    let ea_layers = table.elementary_abelian_subgroups(&all, 3, 1_000_000)?;
    let top = ea_layers.last().cloned().unwrap_or_default();
    let unique = top.len() == 1 && top[0] == j;

    let index = |x: &Perm| elems.binary_search(x).expect("element of the Sylow subgroup");
    let in_j: Vec<Vec<usize>> =
        classes.iter().map(|c| c.members_in_subgroup.iter().map(index).filter(|&i| j.contains(i)).collect()).collect();
    let meets = in_j.iter().all(|m| !m.is_empty());
    let mut generated = false;
    if meets {
        let mut choice = vec![0usize; in_j.len()];
        'search: loop {
            let picks: Vec<usize> = choice.iter().zip(&in_j).map(|(&k, m)| m[k]).collect();
            if table.generate(&picks) == j {
                generated = true;
                break;
            }
            for (k, m) in choice.iter_mut().zip(&in_j) {
                *k += 1;
                if *k < m.len() {
                    continue 'search;
                }
                *k = 0;
            }
            break;
        }
    }
    Ok(ThreeReport {
        group: ng.name.to_string(),
        sylow_order: t.order(),
        dims_separate_classes: dims.len() == rows.len(),
        classes: rows,
        thompson_order: j.len(),
        thompson_elementary: table.is_elementary_abelian(&j, 3),
        thompson_unique_max_elementary: unique,
        meets_every_class: meets,
        generated_by_class_reps: generated,
    })
}

/// For an involution `x`: `dim [V, z]` for each subgroup `<z>` of order 3 of a
/// Sylow 3-subgroup of `C(x)`, sorted.
pub fn centralizer_three_dims(ng: &NamedGroup, x: &Perm) -> Result<(u64, Vec<usize>)> {
    let c = centralizer(&ng.group, x)?;
    let t = sylow_subgroup(&c, 3)?;
    let elems = t.elements(ENUMERATION_BUDGET)?;
    let mut seen: Vec<Perm> = Vec::new();
    let mut dims = Vec::new();
    for z in elems.iter().filter(|z| z.order() == 3) {
        if seen.contains(z) {
            continue;
        }
        seen.push(z.clone());
        seen.push(z.inv());
        dims.push(commutator_space(&ng.natural_matrix(z))?.dim());
    }
    dims.sort_unstable();
    Ok((c.order(), dims))
}

/// A `p`-subgroup as an explicit multiplication table with a name for each involution.
pub struct SylowTable {
    pub table: SmallGroupTable,
    pub elems: Vec<Perm>,
}

impl SylowTable {
    pub fn new(s: &PermGroup) -> Result<Self> {
        let (table, elems) = SmallGroupTable::from_perm_group(s)?;
        Ok(SylowTable { table, elems })
    }

    pub fn index(&self, x: &Perm) -> Option<usize> {
        self.elems.binary_search(x).ok()
    }

    pub fn set_of(&self, g: &PermGroup) -> Result<ElemSet> {
        let idx = g
            .elements(ENUMERATION_BUDGET)?
            .iter()
            .map(|x| self.index(x).ok_or_else(|| Error::Precondition("element outside the table".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.table.set_of(idx))
    }

    pub fn group_of(&self, h: &ElemSet, degree: usize) -> Result<PermGroup> {
        let gens: Vec<Perm> =
            crate::modrep::minimal_generators(&self.table, h).iter().map(|&i| self.elems[i].clone()).collect();
        PermGroup::new(degree, gens)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HomogeneousSearch {
    /// Elementary abelian subgroups of order 16 with all involutions in one class.
    pub elementary_hits: usize,
    pub elementary_searched: usize,
    /// All subgroups of order 16 whose involutions lie in one class.
    pub any_hits: usize,
    pub any_searched: usize,
    pub any_hit_shapes: BTreeMap<String, usize>,
}

/// Subgroups of order 16 of the Sylow 2-subgroup whose involutions are all
/// conjugate, under both readings of the condition.
pub fn homogeneous_order16(ng: &NamedGroup, st: &SylowTable) -> Result<HomogeneousSearch> {
    let t = &st.table;
    let names: Vec<Option<Suzuki>> = st
        .elems
        .iter()
        .map(|x| if x.order() == 2 { suzuki_class(&ng.natural_matrix(x), &ng.form).ok() } else { None })
        .collect();
    let one_name = |h: &ElemSet| {
        let mut it = h.iter().filter_map(|i| names[i]);
        match it.next() {
            None => false,
            Some(n) => it.all(|m| m == n),
        }
    };
    let all = t.all();
    let ea = t.elementary_abelian_subgroups(&all, 2, 2_000_000)?;
    let ea16: Vec<&ElemSet> = ea.iter().flatten().filter(|h| h.len() == 16).collect();
    let trivial = t.generate(&[]);
    let layers = t.subgroups_between(&trivial, &all, 2, 16, 2_000_000)?;
    let all16: Vec<&ElemSet> = layers.iter().flatten().filter(|h| h.len() == 16).collect();
    let mut shapes = BTreeMap::new();
    for h in all16.iter().filter(|h| one_name(h)) {
        let invs = h.iter().filter(|&i| names[i].is_some()).count();
        let exp = t.exponent_of(h);
        let abelian = if t.is_abelian(h) { "abelian" } else { "nonabelian" };
        *shapes.entry(format!("{abelian}, exponent {exp}, {invs} involutions")).or_insert(0) += 1;
    }
    Ok(HomogeneousSearch {
        elementary_hits: ea16.iter().filter(|h| one_name(h)).count(),
        elementary_searched: ea16.len(),
        any_hits: shapes.values().sum(),
        any_searched: all16.len(),
        any_hit_shapes: shapes,
    })
}

/// Extraspecial subgroups of order `|S|/4` of the `2`-group in `st`.
pub fn extraspecial_index4(st: &SylowTable) -> Result<(usize, usize)> {
    let t = &st.table;
    let mut seen = std::collections::BTreeSet::new();
    for m in t.maximal_subgroups(&t.all(), 2)? {
        for k in t.maximal_subgroups(&m, 2)? {
            seen.insert(k);
        }
    }
    let hits = seen.iter().filter(|k| t.is_extraspecial(k, 2)).count();
    Ok((seen.len(), hits))
}

/// Elementary abelian subgroups of order `order` whose fixed space on the
/// natural module has codimension at most `max_codim`.
pub fn small_codim_elementary(
    ng: &NamedGroup,
    st: &SylowTable,
    order: usize,
    max_codim: usize,
) -> Result<(usize, usize)> {
    let t = &st.table;
    let layers = t.elementary_abelian_subgroups(&t.all(), 2, 2_000_000)?;
    let dim = ng.rep.blocks()[0].dim;
    let mut searched = 0;
    let mut hits = 0;
    for e in layers.iter().flatten().filter(|e| e.len() == order) {
        searched += 1;
        let mats: Vec<Matrix> =
            crate::modrep::minimal_generators(t, e).iter().map(|&i| ng.natural_matrix(&st.elems[i])).collect();
        let c = crate::modrep::fixed_points(ng.natural().field(), dim, &mats);
        if dim - c.dim() <= max_codim {
            hits += 1;
        }
    }
    Ok((searched, hits))
}

/// Offenders of the Sylow subgroup on the sum of the listed module blocks.
pub fn offenders_on_blocks(ng: &NamedGroup, st: &SylowTable, blocks: &[usize]) -> Result<Vec<Offender>> {
    let field = ng.natural().field();
    let dim: usize = blocks.iter().map(|&b| ng.rep.blocks()[b].dim).sum();
    let matrix_of = |i: usize| {
        let g = &st.elems[i];
        blocks.iter().map(|&b| ng.matrix(b, g)).reduce(|a, b| Matrix::block_diag(&a, &b)).expect("at least one block")
    };
    offender_search(&st.table, 2, dim, field, &matrix_of, 2_000_000)
}
