use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{Check, Workbench};
use crate::error::{Error, Result};
use crate::extra::{
    automorphism_symplectic_check, involution_harness, minus_similitude_lift, ExtraspecialGroup, ExtraspecialType,
};
use crate::forms::{recover_invariant_form, Form, WittType};
use crate::gf::Field;
use crate::grp::{centralizer_order_bruteforce, classes_of, derived_subgroup, sylow_subgroup, Perm, ORBIT_BUDGET};
use crate::linalg::{all_subspaces, fixed_space, Matrix, Subspace};
use crate::matgrp::{
    centralizer_three_dims, classical_order, extraspecial_index4, homogeneous_order16, match_rows, o6_minus_form,
    o7_form, offenders_on_blocks, small_codim_elementary, GroupName, InvolutionCensus, NamedGroup, ReferenceRow,
    RowMatch, Suzuki, ThreeReport,
};
use crate::modrep::fixed_points;

type Outcome = Result<(Value, Value)>;

/// Reference rows for `Sp6_2`: name, class size, centralizer order, `dim C_U`, `dim C_V`.
pub const SP6_ROWS: [ReferenceRow; 4] = [
    (Suzuki::A2, 315, 4608, 6, 4),
    (Suzuki::B3, 3780, 384, 4, 3),
    (Suzuki::B1, 63, 23040, 4, 5),
    (Suzuki::C2, 945, 1536, 4, 4),
];

/// Reference rows for `AutSU4_2`.
pub const AUT_ROWS: [ReferenceRow; 4] = [
    (Suzuki::A2, 45, 1152, 6, 4),
    (Suzuki::B3, 540, 96, 4, 3),
    (Suzuki::B1, 36, 1440, 4, 5),
    (Suzuki::C2, 270, 192, 4, 4),
];

fn order_check(wb: &Workbench, name: GroupName) -> Outcome {
    Ok((json!(wb.group(name)?.order()), json!(classical_order(name))))
}

fn census_rows(c: &InvolutionCensus, swap: bool) -> Vec<ReferenceRow> {
    c.rows
        .iter()
        .map(|r| {
            let n = if swap { r.name.swap_ac() } else { r.name };
            (n, r.size, r.centralizer_order, r.dim_cu.unwrap_or(0), r.dim_cv)
        })
        .collect()
}

#[derive(Clone, Copy)]
enum Part {
    Classes,
    Sizes,
    Centralizers,
    Dims,
}

fn part_json(rows: &[ReferenceRow], part: Part) -> Value {
    let mut m = serde_json::Map::new();
    for &(n, size, cent, cu, cv) in rows {
        let v = match part {
            Part::Classes => continue,
            Part::Sizes => json!(size),
            Part::Centralizers => json!(cent),
            Part::Dims => json!({"dim_cu": cu, "dim_cv": cv}),
        };
        m.insert(n.label().to_string(), v);
    }
    Value::Object(m)
}

/// One column of the census against the reference. An `a2`/`c2` relabelling is
/// reported by the `classes` part, the other parts compare after undoing it.
fn table_check(c: &InvolutionCensus, reference: &[ReferenceRow], part: Part) -> Outcome {
    let m = match_rows(c, reference);
    let rows = census_rows(c, m == RowMatch::LabelPermuted);
    if let Part::Classes = part {
        let labels = match m {
            RowMatch::Exact => "exact",
            RowMatch::LabelPermuted => "label-permuted",
            RowMatch::Mismatch => "mismatch",
        };
        let want = if m == RowMatch::LabelPermuted { "label-permuted" } else { "exact" };
        return Ok((
            json!({"classes": rows.len(), "rows_match": labels}),
            json!({"classes": reference.len(), "rows_match": want}),
        ));
    }
    Ok((part_json(&rows, part), part_json(reference, part)))
}

fn per_name<T: serde::Serialize>(c: &InvolutionCensus, f: impl Fn(&crate::matgrp::InvolutionClassRow) -> T) -> Value {
    let mut m = serde_json::Map::new();
    for r in &c.rows {
        m.insert(r.name.label().to_string(), json!(f(r)));
    }
    Value::Object(m)
}

fn involution_profile(g: &NamedGroup, block: usize) -> Result<Vec<(u64, u64, usize)>> {
    let s = sylow_subgroup(&g.group, 2)?;
    let invs: Vec<Perm> = s.elements(crate::grp::ENUMERATION_BUDGET)?.into_iter().filter(|x| x.order() == 2).collect();
    let mut out = Vec::new();
    for c in classes_of(&g.group, &invs, ORBIT_BUDGET)? {
        let size = crate::grp::conjugacy_class(&g.group, &c.rep, ORBIT_BUDGET)?.len() as u64;
        out.push((size, g.order() / size, fixed_space(&g.matrix(block, &c.rep))?.dim()));
    }
    out.sort_unstable();
    Ok(out)
}

fn three_json(t: &ThreeReport) -> Value {
    json!({
        "comm_dims": t.classes.iter().map(|c| c.comm_dim).collect::<Vec<_>>(),
        "dims_separate_classes": t.dims_separate_classes,
        "thompson_order": t.thompson_order,
        "thompson_elementary": t.thompson_elementary,
        "unique_max_elementary": t.thompson_unique_max_elementary,
        "meets_every_class": t.meets_every_class,
        "generated_by_class_members": t.generated_by_class_reps,
    })
}

fn three_expected() -> Value {
    json!({
        "comm_dims": [2, 4, 6],
        "dims_separate_classes": true,
        "thompson_order": 27,
        "thompson_elementary": true,
        "unique_max_elementary": true,
        "meets_every_class": true,
        "generated_by_class_members": true,
    })
}

fn quadratic_forms() -> Result<Vec<(&'static str, Form)>> {
    Ok(vec![
        ("O4+(3)", Form::hyperbolic(Field::Gf3, 2)),
        ("O4-(3)", Form::elliptic(Field::Gf3, 2)?),
        ("O6-(2)", o6_minus_form()),
        ("O7(2)", o7_form()),
        ("O4-(4)", Form::elliptic(Field::Gf4, 2)?),
    ])
}

fn polarization_identity() -> Outcome {
    let mut failures = 0;
    let mut forms = 0;
    for (_, q) in quadratic_forms()? {
        forms += 1;
        let f = q.field();
        let b = q.polarize()?;
        let n = q.dim();
        let vs: Vec<Vec<u8>> = (0..f.space_size(n)).map(|c| f.decode(c, n)).collect();
        for v in &vs {
            for w in &vs {
                let sum: Vec<u8> = v.iter().zip(w).map(|(&a, &c)| f.add(a, c)).collect();
                let rhs = f.sub(f.sub(q.q(&sum), q.q(v)), q.q(w));
                if b.pair(v, w) != rhs {
                    failures += 1;
                }
            }
        }
    }
    Ok((json!({"forms": forms, "failures": failures}), json!({"forms": 5, "failures": 0})))
}

fn random_invertible<R: Rng>(rng: &mut R, f: Field, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(f, n, n, |_, _| rng.gen_range(0..f.order()) as u8);
        if m.rank() == n {
            return m;
        }
    }
}

/// Valid generator pairs of a Sylow 3-subgroup of the group, as matrices.
fn sylow3_pairs(g: &NamedGroup) -> Result<Vec<(Matrix, Matrix)>> {
    let t = sylow_subgroup(&g.group, 3)?;
    let mats: Vec<Matrix> = t.elements(100)?.iter().filter(|x| !x.is_identity()).map(|x| g.natural_matrix(x)).collect();
    let mut out = Vec::new();
    for a in &mats {
        for b in &mats {
            if recover_invariant_form(a, b, None).is_ok() {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

fn go4_sample(wb: &Workbench) -> Outcome {
    let plus = sylow3_pairs(wb.group(GroupName::Go4Plus3)?)?;
    let minus = sylow3_pairs(wb.group(GroupName::Go4Minus3)?)?;
    if plus.is_empty() || minus.is_empty() {
        return Err(Error::Construction("no valid Sylow 3 generator pairs".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut outcomes: Vec<WittType> = Vec::new();
    let mut recovered = 0;
    let mut consistent = true;
    for _ in 0..100 {
        let from_plus = rng.gen_bool(0.5);
        let pool = if from_plus { &plus } else { &minus };
        let (a, b) = &pool[rng.gen_range(0..pool.len())];
        let g = random_invertible(&mut rng, Field::Gf3, 4);
        let gi = g.inverse().expect("invertible");
        let (a2, b2) = (gi.mul(a).mul(&g), gi.mul(b).mul(&g));
        if let Some(r) = recover_invariant_form(&a2, &b2, None)? {
            recovered += 1;
            consistent &= r.form.preserves(&a2) && r.form.preserves(&b2) && r.form.q(&r.witness) == 0;
            consistent &= r.types_seen.len() == 1;
            consistent &= (r.witt == WittType::Plus) == from_plus;
            if !outcomes.contains(&r.witt) {
                outcomes.push(r.witt);
            }
        }
    }
    outcomes.sort();
    Ok((
        json!({"sample": 100, "recovered": recovered, "outcome_classes": outcomes, "consistent": consistent}),
        json!({"sample": 100, "recovered": 100, "outcome_classes": ["plus", "minus"], "consistent": true}),
    ))
}

fn go4_origin(wb: &Workbench) -> Outcome {
    let mut got = Vec::new();
    for name in [GroupName::Go4Plus3, GroupName::Go4Minus3] {
        let pairs = sylow3_pairs(wb.group(name)?)?;
        let (a, b) = pairs.first().ok_or_else(|| Error::Construction("no valid pair".into()))?;
        let r = recover_invariant_form(a, b, None)?.ok_or_else(|| Error::Construction("no invariant form".into()))?;
        got.push(json!({"group": name.as_str(), "type": r.witt, "witness_singular": r.form.q(&r.witness) == 0}));
    }
    Ok((
        Value::Array(got),
        json!([
            {"group": "GO4p_3", "type": "plus", "witness_singular": true},
            {"group": "GO4m_3", "type": "minus", "witness_singular": true}
        ]),
    ))
}

fn extraspecial_types() -> Outcome {
    let mut got = Vec::new();
    let mut want = Vec::new();
    for n in 1..=2 {
        for kind in [ExtraspecialType::Plus, ExtraspecialType::Minus] {
            let e = ExtraspecialGroup::new(2, n, kind)?;
            let witt: ExtraspecialType = e.squaring_form()?.witt_type()?.0.into();
            got.push(json!({"n": n, "squaring_form": witt, "elementary_abelian": e.type_from_subgroups()?}));
            want.push(json!({"n": n, "squaring_form": kind, "elementary_abelian": kind}));
        }
    }
    Ok((Value::Array(got), Value::Array(want)))
}

fn extraspecial_plus_rank(n: usize) -> Outcome {
    let e = ExtraspecialGroup::new(2, n, ExtraspecialType::Plus)?;
    Ok((json!(e.max_elementary_abelian_order()?), json!(1usize << (n + 1))))
}

fn extraspecial_three() -> Outcome {
    let e = ExtraspecialGroup::new(3, 2, ExtraspecialType::Plus)?;
    Ok((
        json!({"order": e.order(), "exponent": e.exponent(), "center": e.center().len()}),
        json!({"order": 243, "exponent": 3, "center": 3}),
    ))
}

fn extraspecial_automorphisms() -> Outcome {
    let e = ExtraspecialGroup::new(3, 2, ExtraspecialType::Plus)?;
    let id = e.lift(&Matrix::identity(Field::Gf3, 4), &[0; 4], 1)?;
    let inner = e.inner(e.generators()[0]);
    let sim = minus_similitude_lift(&e)?;
    let mut got = Vec::new();
    for (label, a) in [("identity", &id), ("inner", &inner), ("minus-similitude", &sim)] {
        let v = automorphism_symplectic_check(&e, a)?;
        got.push(json!({
            "automorphism": label,
            "scalar": v.scalar,
            "preserves_up_to_scalar": v.preserves_up_to_scalar,
            "trivial_on_quotient": v.trivial_on_quotient,
            "order_two": !a.is_identity() && a.compose(a).is_identity(),
        }));
    }
    Ok((
        Value::Array(got),
        json!([
            {"automorphism": "identity", "scalar": 1, "preserves_up_to_scalar": true, "trivial_on_quotient": true, "order_two": false},
            {"automorphism": "inner", "scalar": 1, "preserves_up_to_scalar": true, "trivial_on_quotient": true, "order_two": false},
            {"automorphism": "minus-similitude", "scalar": 2, "preserves_up_to_scalar": true, "trivial_on_quotient": false, "order_two": true}
        ]),
    ))
}

fn extraspecial_involutions() -> Outcome {
    let mut got = Vec::new();
    let mut tested = 0;
    let mut holds = 0;
    for kind in [ExtraspecialType::Plus, ExtraspecialType::Minus] {
        let r = involution_harness(&ExtraspecialGroup::new(2, 2, kind)?)?;
        tested += r.automorphisms_tested;
        holds += r.holds;
        got.push(json!({"type": kind, "fails": r.fails}));
    }
    let nonvacuous = tested > 0 && holds > 0;
    Ok((
        json!({"groups": got, "nonvacuous": nonvacuous}),
        json!({"groups": [{"type": "+", "fails": 0}, {"type": "-", "fails": 0}], "nonvacuous": true}),
    ))
}

fn chamber_count(wb: &Workbench) -> Outcome {
    let cs = wb.chambers()?;
    let sizes: Vec<Vec<usize>> = (1..=cs.rank()).map(|k| cs.panel_sizes(k)).collect();
    Ok((json!({"chambers": cs.len(), "panel_sizes": sizes}), json!({"chambers": 2835, "panel_sizes": [[3], [3], [3]]})))
}

fn chamber_residues(wb: &Workbench) -> Outcome {
    let cs = wb.chambers()?;
    let mut got = Vec::new();
    for j in [[1, 2], [2, 3], [1, 3]] {
        let r = cs.residue(0, &j);
        got.push(json!({"colours": j, "size": r.size, "kind": r.kind}));
    }
    Ok((
        Value::Array(got),
        json!([
            {"colours": [1, 2], "size": 21, "kind": "PG(2,2)"},
            {"colours": [2, 3], "size": 45, "kind": "GQ(2,2)"},
            {"colours": [1, 3], "size": 9, "kind": "digon"}
        ]),
    ))
}

fn chamber_homogeneous(wb: &Workbench) -> Outcome {
    let cs = wb.chambers()?;
    let x = wb.x()?;
    let s = wb.sylow_x()?;
    let mut sizes = Vec::new();
    for j in [vec![1], vec![2], vec![3], vec![1, 2], vec![2, 3], vec![1, 3], vec![1, 2, 3]] {
        let mut v: Vec<usize> = cs.components(&j).iter().map(|c| c.len()).collect();
        v.sort_unstable();
        v.dedup();
        sizes.push(v);
    }
    Ok((
        json!({
            "component_sizes": sizes,
            "colours_preserved": cs.action_preserves_colours(),
            "count_times_t": cs.len() as u64 * s.order() == x.order(),
        }),
        json!({
            "component_sizes": [[3], [3], [3], [21], [45], [9], [2835]],
            "colours_preserved": true,
            "count_times_t": true,
        }),
    ))
}

fn spin_module(wb: &Workbench) -> Outcome {
    let x = wb.x()?;
    let u = &x.modules[1];
    let mut rng = ChaCha8Rng::seed_from_u64(wb.seed());
    let chop = u.chop(&mut rng)?;
    Ok((
        json!({"dim": u.dim(), "factor_dims": chop.sorted_dims(), "found": x.spin_route.is_some()}),
        json!({"dim": 8, "factor_dims": [8], "found": true}),
    ))
}

fn natural_irreducible(wb: &Workbench) -> Outcome {
    let x = wb.x()?;
    let mut rng = ChaCha8Rng::seed_from_u64(wb.seed());
    let chop = x.natural().chop(&mut rng)?;
    Ok((json!(chop.sorted_dims()), json!([6])))
}

fn sum_module_factors(wb: &Workbench) -> Outcome {
    let x = wb.x()?;
    let w = x.modules[0].direct_sum(&x.modules[1])?;
    let mut rng = ChaCha8Rng::seed_from_u64(wb.seed());
    Ok((json!(w.chop(&mut rng)?.sorted_dims()), json!([8, 6])))
}

fn table1_fusion(wb: &Workbench) -> Outcome {
    let cx = wb.census_x()?;
    let cy = wb.census_y()?;
    let counts: Vec<usize> = cx.rows.iter().map(|r| cy.rows.iter().filter(|s| s.name == r.name).count()).collect();
    Ok((
        json!({"x_names_constant": cx.names_constant, "x_names_distinct": cx.names_distinct, "y_classes_per_x_class": counts}),
        json!({"x_names_constant": true, "x_names_distinct": true, "y_classes_per_x_class": [1, 1, 1, 1]}),
    ))
}

fn table1_orthogonal_names(wb: &Workbench) -> Outcome {
    let sym = wb.census_y()?;
    let orth = wb.census_y_orthogonal()?;
    let by_rep = |c: &InvolutionCensus| {
        let mut v: Vec<(Perm, Suzuki)> = c.rows.iter().map(|r| (r.rep.clone(), r.name)).collect();
        v.sort();
        v.into_iter().map(|(_, n)| n).collect::<Vec<_>>()
    };
    Ok((
        json!({"agree": by_rep(sym) == by_rep(orth), "names_constant": orth.names_constant}),
        json!({"agree": true, "names_constant": true}),
    ))
}

fn table1_orbit_stabilizer(wb: &Workbench) -> Outcome {
    let cx = wb.census_x()?;
    let y = wb.y()?;
    let cy = wb.census_y()?;
    let mut brute = true;
    for r in &cy.rows {
        brute &= centralizer_order_bruteforce(&y.group, &r.rep, 100_000)? == r.centralizer_order;
    }
    Ok((
        json!({"sp6": cx.orbit_stabilizer, "aut": cy.orbit_stabilizer, "aut_bruteforce": brute}),
        json!({"sp6": true, "aut": true, "aut_bruteforce": true}),
    ))
}

fn aut_outside(wb: &Workbench) -> Outcome {
    let y = wb.y()?;
    let cy = wb.census_y()?;
    let d = derived_subgroup(&y.group)?;
    Ok((
        json!({"derived_order": d.order(), "in_derived": per_name(cy, |r| r.in_derived)}),
        json!({"derived_order": 25920, "in_derived": {"a2": true, "b3": false, "b1": false, "c2": true}}),
    ))
}

fn aut_realizations(wb: &Workbench) -> Outcome {
    let y = wb.y()?;
    let z = wb.y_semilinear()?;
    let py = involution_profile(y, 1)?;
    let pz = involution_profile(z, 0)?;
    Ok((json!({"order": z.order(), "profiles_equal": py == pz}), json!({"order": 51840, "profiles_equal": true})))
}

fn o7_census(wb: &Workbench) -> Outcome {
    let o7 = wb.group(GroupName::O72)?;
    let x = wb.x()?;
    let strip = |v: Vec<(u64, u64, usize)>| v.into_iter().map(|(s, c, _)| (s, c)).collect::<Vec<_>>();
    let a = strip(involution_profile(o7, 0)?);
    let b = strip(involution_profile(x, 0)?);
    Ok((json!({"order": o7.order(), "class_sizes": a}), json!({"order": x.order(), "class_sizes": b})))
}

fn natural_transitive(wb: &Workbench) -> Outcome {
    Ok((json!(wb.natural()?.orbit_lengths), json!([63])))
}

fn natural_uniserial(wb: &Workbench) -> Outcome {
    Ok((json!(wb.natural()?.invariant_counts), json!([1, 1, 1, 1, 1])))
}

fn natural_stabilizers(wb: &Workbench) -> Outcome {
    let n = wb.natural()?;
    Ok((
        json!({"N(V1)=X23": n.n_v1_is_x23, "N(V2)=X13": n.n_v2_is_x13, "N(V3)=X12": n.n_v3_is_x12}),
        json!({"N(V1)=X23": true, "N(V2)=X13": true, "N(V3)=X12": true}),
    ))
}

fn natural_actions(wb: &Workbench) -> Outcome {
    let n = wb.natural()?;
    Ok((
        json!({
            "X23 on V1perp/V1": n.x23_on_v1perp_mod_v1,
            "X12 on V3": n.x12_on_v3,
            "X12 on V/V3": n.x12_on_v_mod_v3,
            "O^2(X3) centralizes V2": n.o2x3_centralizes_v2,
            "O^2(X3) centralizes V/V2perp": n.o2x3_centralizes_v_mod_v2perp,
            "O^2(X1) centralizes V2perp/V2": n.o2x1_centralizes_v2perp_mod_v2,
        }),
        json!({
            "X23 on V1perp/V1": 720,
            "X12 on V3": 168,
            "X12 on V/V3": 168,
            "O^2(X3) centralizes V2": true,
            "O^2(X3) centralizes V/V2perp": true,
            "O^2(X1) centralizes V2perp/V2": true,
        }),
    ))
}

fn parabolic_quotients(wb: &Workbench) -> Outcome {
    let ps = wb.parabolics()?;
    let s = &ps.s;
    let mut abel = Vec::new();
    for p in [&ps.x12, &ps.x13, &ps.x23] {
        let o2 = crate::grp::p_core(p, s, crate::grp::ENUMERATION_BUDGET)?;
        let mut gens = derived_subgroup(p)?.generators().to_vec();
        gens.extend(o2.generators().iter().cloned());
        abel.push(p.order() / p.subgroup(gens)?.order());
    }
    Ok((
        json!({
            "orders": [ps.x12.order(), ps.x13.order(), ps.x23.order()],
            "mod_o2": ps.quotient_orders,
            "mod_derived_o2": abel,
            "minimal_mod_o2": ps.minimal_quotient_orders,
        }),
        json!({
            "orders": [10752, 4608, 23040],
            "mod_o2": [168, 36, 720],
            "mod_derived_o2": [1, 4, 2],
            "minimal_mod_o2": [6, 6, 6],
        }),
    ))
}

fn spin_orbits(wb: &Workbench) -> Outcome {
    Ok((json!(wb.spin()?.orbit_lengths), json!([135, 120])))
}

fn spin_fixed(wb: &Workbench) -> Outcome {
    let s = wb.spin()?;
    Ok((
        json!({"dim C_U(S)": s.dim_cu_s, "N(C_U(S))=X12": s.n_cus_is_x12, "C_U(S)=C_U(O2(X12))": s.cu_s_equals_cu_o2x12}),
        json!({"dim C_U(S)": 1, "N(C_U(S))=X12": true, "C_U(S)=C_U(O2(X12))": true}),
    ))
}

fn spin_line(wb: &Workbench) -> Outcome {
    let s = wb.spin()?;
    Ok((
        json!({"S-invariant 2-spaces": s.invariant_2spaces, "N(U2)=X13": s.n_u2_is_x13, "O^2(X1) centralizes U2": s.o2x1_centralizes_u2}),
        json!({"S-invariant 2-spaces": 1, "N(U2)=X13": true, "O^2(X1) centralizes U2": true}),
    ))
}

fn line_quotient(wb: &Workbench) -> Outcome {
    let l = wb.line()?;
    Ok((
        json!({"|Q|": l.q_order, "|P/Q|": l.p_over_q, "image on V2 + V2perp/V2": l.image_on_sections, "kernel is Q": l.q_is_kernel}),
        json!({"|Q|": 128, "|P/Q|": 36, "image on V2 + V2perp/V2": 36, "kernel is Q": true}),
    ))
}

fn line_threes(wb: &Workbench) -> Outcome {
    let l = wb.line()?;
    Ok((
        json!({"comm_dims": l.t_subgroup_dims, "tau3 subgroups fused in N_P(T)": l.tau3_fused_in_normalizer}),
        json!({"comm_dims": [2, 4, 6, 6], "tau3 subgroups fused in N_P(T)": true}),
    ))
}

fn line_quaternion(wb: &Workbench) -> Outcome {
    let l = wb.line()?;
    Ok((
        json!({"orders": l.cq_z_orders, "quaternion": l.cq_z_quaternion, "commute": l.cq_z_commute}),
        json!({"orders": [8, 8], "quaternion": true, "commute": true}),
    ))
}

fn line_center(wb: &Workbench) -> Outcome {
    let l = wb.line()?;
    Ok((
        json!({"|Z(Q)|": l.center_order, "|Q'|": l.derived_order, "C_T(Z(Q))=<tau1>": l.ct_zq_is_tau1, "C_Q(tau1)=Z(Q)": l.cq_tau1_is_zq}),
        json!({"|Z(Q)|": 8, "|Q'|": 2, "C_T(Z(Q))=<tau1>": true, "C_Q(tau1)=Z(Q)": true}),
    ))
}

fn line_invariant(wb: &Workbench) -> Outcome {
    let l = wb.line()?;
    Ok((
        json!({"count": l.t_invariant_order8, "as listed": l.t_invariant_order8_expected}),
        json!({"count": 3, "as listed": true}),
    ))
}

fn line_fusion(wb: &Workbench) -> Outcome {
    Ok((json!(wb.line()?.t_class_leaves_center), json!(true)))
}

fn facts_homogeneous(wb: &Workbench) -> Outcome {
    let h = homogeneous_order16(wb.x()?, wb.table_x()?)?;
    Ok((json!({"hits": h.elementary_hits}), json!({"hits": 0})))
}

fn facts_extraspecial(wb: &Workbench) -> Outcome {
    let (_, hits) = extraspecial_index4(wb.table_x()?)?;
    Ok((json!({"hits": hits}), json!({"hits": 0})))
}

fn facts_b1_threes(wb: &Workbench) -> Outcome {
    let y = wb.y()?;
    let b1 = wb.census_y()?.row(Suzuki::B1).ok_or_else(|| Error::Construction("no b1 class".into()))?;
    let (order, dims) = centralizer_three_dims(y, &b1.rep)?;
    Ok((json!({"centralizer": order, "comm_dims": dims}), json!({"centralizer": 1440, "comm_dims": [2, 2, 4, 4]})))
}

fn noover(wb: &Workbench) -> Outcome {
    let (_, hits) = small_codim_elementary(wb.y()?, wb.table_y()?, 8, 2)?;
    Ok((json!({"hits": hits}), json!({"hits": 0})))
}

fn notf_sum(wb: &Workbench) -> Outcome {
    let mut got = Vec::new();
    for (label, ng, st) in [("Sp6_2", wb.x()?, wb.table_x()?), ("AutSU4_2", wb.y()?, wb.table_y()?)] {
        got.push(json!({"sylow_of": label, "offenders": offenders_on_blocks(ng, st, &[0, 1])?.len()}));
    }
    Ok((Value::Array(got), json!([{"sylow_of": "Sp6_2", "offenders": 0}, {"sylow_of": "AutSU4_2", "offenders": 0}])))
}

fn notf_control(wb: &Workbench) -> Outcome {
    let offs = offenders_on_blocks(wb.x()?, wb.table_x()?, &[0])?;
    let transvection = offs.iter().any(|o| o.order == 2 && o.fixed_dim == 5);
    Ok((
        json!({"nonempty": !offs.is_empty(), "transvection": transvection}),
        json!({"nonempty": true, "transvection": true}),
    ))
}

fn nonsplit(wb: &Workbench) -> Outcome {
    let o7 = wb.group(GroupName::O72)?;
    let cx = o7.natural().fixed_points();
    let s = sylow_subgroup(&o7.group, 2)?;
    let mats: Vec<Matrix> = s.generators().iter().map(|g| o7.natural_matrix(g)).collect();
    let cs = fixed_points(Field::Gf2, 7, &mats);
    let e7 = Subspace::span(Field::Gf2, 7, [[0, 0, 0, 0, 0, 0, 1].as_slice()]);
    Ok((
        json!({"dim C_W(X)": cx.dim(), "C_W(X)=<e7>": cx == e7, "dim C_W(S) > dim C_W(X)": cs.dim() > cx.dim()}),
        json!({"dim C_W(X)": 1, "C_W(X)=<e7>": true, "dim C_W(S) > dim C_W(X)": true}),
    ))
}

fn o4_singular() -> Outcome {
    Ok((json!(Form::hyperbolic(Field::Gf3, 2).singular_count()), json!(32)))
}

fn o4_points() -> Outcome {
    let c = Form::hyperbolic(Field::Gf3, 2).census()?;
    Ok((json!([c.n_singular, c.n_plus, c.n_minus]), json!([16, 12, 12])))
}

fn o4_two_spaces() -> Outcome {
    let c = Form::hyperbolic(Field::Gf3, 2).census()?;
    Ok((json!(c.n_s + c.n_dp + c.n_dm + c.n_nplus + c.n_nminus), json!(130)))
}

fn o4_hyper() -> Outcome {
    let q = Form::hyperbolic(Field::Gf3, 2);
    let spaces = all_subspaces(Field::Gf3, 4, 3);
    let ok = spaces.iter().filter(|x| q.singular_point_in(x).is_some_and(|v| q.q(&v) == 0)).count();
    Ok((
        json!({"three_spaces": spaces.len(), "with_singular_point": ok}),
        json!({"three_spaces": 40, "with_singular_point": 40}),
    ))
}

fn co4_index(wb: &Workbench) -> Outcome {
    let go = wb.group(GroupName::Go4Plus3)?;
    let co = wb.group(GroupName::Co4Plus3)?;
    let contained = go.group.generators().iter().all(|g| co.group.contains(g));
    Ok((json!({"index": co.order() / go.order(), "contains": contained}), json!({"index": 2, "contains": true})))
}

const ORDER_REF: &str = "classical order formulas";

macro_rules! check {
    ($id:expr, $claim:expr, $r:expr, [$($d:expr),*], $f:expr) => {
        Check { id: $id, claim: $claim, paper_ref: $r, deps: &[$($d),*], run: $f }
    };
}

/// All checks in report order.
pub fn registry() -> Vec<Check> {
    vec![
        check!("sp62.order", "Sp6(2) has the formula order", ORDER_REF, [], |wb| order_check(wb, GroupName::Sp62)),
        check!("su42.order", "SU4(2) has the formula order", ORDER_REF, [], |wb| order_check(wb, GroupName::Su42)),
        check!("aut.order", "Aut(SU4(2)) has the formula order", ORDER_REF, [], |wb| order_check(wb, GroupName::AutSu42)),
        check!("o72.order", "O7(2) has the formula order", ORDER_REF, [], |wb| order_check(wb, GroupName::O72)),
        check!("go4p.order", "GO4+(3) has the formula order", ORDER_REF, [], |wb| order_check(wb, GroupName::Go4Plus3)),
        check!("go4m.order", "GO4-(3) has the formula order", ORDER_REF, [], |wb| order_check(wb, GroupName::Go4Minus3)),
        check!("co4p.order", "CO4+(3) has the formula order", ORDER_REF, [], |wb| order_check(wb, GroupName::Co4Plus3)),
        check!("co4p.index", "GO4+(3) has index 2 in CO4+(3)", "counts on J", ["go4p.order", "co4p.order"], co4_index),
        check!("aut.realizations", "the semilinear and orthogonal realizations of Aut(SU4(2)) agree in order and involution profile on the 8-dimensional module", "Table 1", ["aut.order"], aut_realizations),
        check!("o72.census", "O7(2) and Sp6(2) have the same involution class sizes", "Lemma nonsplitmods", ["o72.order", "sp62.order"], o7_census),
        check!("modfacts.natural", "the natural module of Sp6(2) is irreducible of dimension 6", "Lemma modfacts", ["sp62.order"], natural_irreducible),
        check!("spin.module", "an irreducible 8-dimensional module appears among the composition factors of tensor constructions on V", "Lemma modfacts", ["sp62.order"], spin_module),
        check!("notf.factors", "V + U has composition factors of dimensions 6 and 8", "Lemma NotF", ["spin.module"], sum_module_factors),
        check!("table1.sp62.classes", "Sp6(2) has exactly four involution classes, matching the reference rows", "Table 1; Lemma sp62facts (i)", ["spin.module"], |wb| table_check(wb.census_x()?, &SP6_ROWS, Part::Classes)),
        check!("table1.sp62.sizes", "involution class sizes of Sp6(2) equal the reference", "Table 1", ["table1.sp62.classes"], |wb| table_check(wb.census_x()?, &SP6_ROWS, Part::Sizes)),
        check!("table1.sp62.centralizers", "involution centralizer orders of Sp6(2) equal the reference", "Table 1; Lemma sp62facts (ii)", ["table1.sp62.classes"], |wb| table_check(wb.census_x()?, &SP6_ROWS, Part::Centralizers)),
        check!("table1.sp62.dims", "the pairs (dim C_U(t), dim C_V(t)) for Sp6(2) equal the reference", "Table 1; Lemma sp62facts (iii)", ["table1.sp62.classes"], |wb| table_check(wb.census_x()?, &SP6_ROWS, Part::Dims)),
        check!("table1.aut.classes", "Aut(SU4(2)) has exactly four involution classes, matching the reference rows", "Table 1; Lemma sp62facts (i)", ["spin.module", "aut.order"], |wb| table_check(wb.census_y()?, &AUT_ROWS, Part::Classes)),
        check!("table1.aut.sizes", "involution class sizes of Aut(SU4(2)) equal the reference", "Table 1", ["table1.aut.classes"], |wb| table_check(wb.census_y()?, &AUT_ROWS, Part::Sizes)),
        check!("table1.aut.centralizers", "involution centralizer orders of Aut(SU4(2)) equal the reference", "Table 1; Lemma sp62facts (ii)", ["table1.aut.classes"], |wb| table_check(wb.census_y()?, &AUT_ROWS, Part::Centralizers)),
        check!("table1.aut.dims", "the pairs (dim C_U(t), dim C_V(t)) for Aut(SU4(2)) equal the reference", "Table 1; Lemma sp62facts (iii)", ["table1.aut.classes"], |wb| table_check(wb.census_y()?, &AUT_ROWS, Part::Dims)),
        check!("table1.aut.outside", "the b-classes of Aut(SU4(2)) lie outside SU4(2)", "Table 1", ["table1.aut.classes"], aut_outside),
        check!("table1.fusion", "each Sp6(2) involution class meets Aut(SU4(2)) in a single class", "Lemma sp62facts (i)", ["table1.sp62.classes", "table1.aut.classes"], table1_fusion),
        check!("table1.orthogonal_names", "symplectic and orthogonal naming rules agree on Aut(SU4(2))", "Table 1", ["table1.aut.classes"], table1_orthogonal_names),
        check!("table1.orbit_stabilizer", "class size times centralizer order is the group order, with brute-force centralizers in Aut(SU4(2))", "Lemma sp62facts (ii)", ["table1.sp62.classes", "table1.aut.classes"], table1_orbit_stabilizer),
        check!("facts.order16", "Sp6(2) has no subgroup of order 16 whose nontrivial elements are all conjugate", "Lemma sp62facts (iv)", ["table1.sp62.classes"], facts_homogeneous),
        check!("facts.extraspecial128", "Sp6(2) has no extraspecial subgroup of order 128", "Lemma sp62facts (v)", ["sp62.order"], facts_extraspecial),
        check!("facts.b1_threes", "a Sylow 3-subgroup of the centralizer of a b1 involution of Aut(SU4(2)) has two subgroups of each of the types tau1 and tau2", "Lemma sp62facts (vi)", ["table1.aut.classes"], facts_b1_threes),
        check!("facts.threes.sp62", "Sp6(2) has three classes of elements of order 3, with dim [V,tau_i] = 2i, all meeting the Thompson subgroup E = <tau1,tau2,tau3> of order 27", "Lemma sp62facts (vii)", ["sp62.order"], |wb| Ok((three_json(wb.three_x()?), three_expected()))),
        check!("facts.threes.aut", "the same order-3 structure holds in Aut(SU4(2))", "Lemma sp62facts (vii)", ["aut.order"], |wb| Ok((three_json(wb.three_y()?), three_expected()))),
        check!("parabolic.quotients", "X12, X13, X23 modulo O2 have orders 168, 36, 720, with abelianization probes 1, 4, 2", "Lemma sp62natural; Lemma sp62line (i)", ["sp62.order"], parabolic_quotients),
        check!("natural.transitive", "Sp6(2) is transitive on the 63 nonzero vectors of V", "Lemma sp62natural (i)", ["sp62.order"], natural_transitive),
        check!("natural.uniserial", "V is uniserial for S: one invariant subspace in each dimension", "Lemma sp62natural (ii)", ["sp62.order"], natural_uniserial),
        check!("natural.stabilizers", "N(V1) = X23, N(V2) = X13, N(V3) = X12", "Lemma sp62natural (iii)", ["parabolic.quotients", "natural.uniserial"], natural_stabilizers),
        check!("natural.actions", "the parabolics act on the sections of the flag as stated", "Lemma sp62natural (iii)", ["natural.stabilizers"], natural_actions),
        check!("spin.orbits", "Sp6(2) has orbits of lengths 135 and 120 on the nonzero vectors of U", "Lemma sp62spin (i)", ["spin.module"], spin_orbits),
        check!("spin.fixed", "C_U(S) is a point with stabilizer X12 and equals C_U(O2(X12))", "Lemma sp62spin (ii)", ["spin.module", "parabolic.quotients"], spin_fixed),
        check!("spin.line", "the S-invariant 2-space of U has stabilizer X13 and is centralized by O^2(X1)", "Lemma sp62spin (iii)", ["spin.module", "parabolic.quotients"], spin_line),
        check!("line.quotient", "P = X13 has |O2(P)| = 128 and P/Q of order 36 acting faithfully on V2 and V2perp/V2", "Lemma sp62line (i)", ["parabolic.quotients"], line_quotient),
        check!("line.threes", "the order-3 subgroups of T have dim [V,z] equal to 2, 4, 6, 6 and the two tau3 subgroups are fused in N_P(T)", "Lemma sp62line (ii)", ["line.quotient"], line_threes),
        check!("line.quaternion", "C_Q(Z1) and C_Q(Z2) are commuting quaternion groups", "Lemma sp62line (iii)", ["line.threes"], line_quaternion),
        check!("line.center", "|Z(Q)| = 8, |Q'| = 2, C_T(Z(Q)) = <tau1> and C_Q(tau1) = Z(Q)", "Lemma sp62line (iv)", ["line.threes"], line_center),
        check!("line.invariant8", "the T-invariant subgroups of order 8 of Q are C_Q(Z1), C_Q(Z2) and Z(Q)", "Lemma sp62line (v)", ["line.quaternion", "line.center"], line_invariant),
        check!("line.fusion", "the class of the involution generating Q' meets Q outside Z(Q)", "Lemma sp62line (vi)", ["line.center"], line_fusion),
        check!("noover.search", "no elementary abelian subgroup of order 8 of a Sylow 2-subgroup of Aut(SU4(2)) has |V : C_V(E)| <= 4", "Lemma Noover", ["aut.order"], noover),
        check!("notf.sum", "no Sylow 2-subgroup has an offender on V + U", "Lemma NotF", ["spin.module", "aut.order"], notf_sum),
        check!("notf.control", "the natural module alone has a transvection offender", "F-module definition", ["sp62.order"], notf_control),
        check!("nonsplit.fixed", "on the 7-dimensional orthogonal module W, C_W(X) = <e7> and C_W(S) is larger", "Lemma nonsplitmods", ["o72.order"], nonsplit),
        check!("forms.polarization", "the polarization satisfies f(v,w) = q(v+w) - q(v) - q(w) for the quadratic forms in use", "Lemma quadratic form", [], |_| polarization_identity()),
        check!("forms.o4.singular", "the plus-type form on GF(3)^4 has 32 nonzero singular vectors", "counts on J", [], |_| o4_singular()),
        check!("forms.o4.points", "its 40 points split as 16 singular, 12 plus, 12 minus", "Notation o4", [], |_| o4_points()),
        check!("forms.o4.lines", "each of the 130 two-spaces has one of the five types", "Notation type; Lemma types", [], |_| o4_two_spaces()),
        check!("forms.o4.hyper", "every 3-space of the plus-type GF(3)^4 contains a singular point", "Lemma hyper", [], |_| o4_hyper()),
        check!("go4.origin", "Sylow 3-subgroups of GO4+(3) and GO4-(3) recover invariant forms of plus and minus type", "Lemma GO4", ["go4p.order", "go4m.order"], go4_origin),
        check!("go4.sample", "100 random conjugates of valid pairs give exactly two outcome classes", "Lemma GO4", ["go4.origin"], go4_sample),
        check!("extraspec.types", "subgroup structure and squaring form give the same type for 2^(1+2) and 2^(1+4)", "extraspecial notation", [], |_| extraspecial_types()),
        check!("extraspec.rank6", "2^(1+6)_+ has maximal elementary abelian subgroups of order 16", "extraspecial notation", [], |_| extraspecial_plus_rank(3)),
        check!("extraspec.rank8", "2^(1+8)_+ has maximal elementary abelian subgroups of order 32", "extraspecial notation", [], |_| extraspecial_plus_rank(4)),
        check!("extraspec.three", "3^(1+4)_+ has order 243, exponent 3 and center of order 3", "extraspecial notation", [], |_| extraspecial_three()),
        check!("extraspec.automorphisms", "automorphisms of 3^(1+4)_+ scale the commutator form by their action on the center", "extraspecial notation", ["extraspec.three"], |_| extraspecial_automorphisms()),
        check!("extraspec.involutions", "for every involutory automorphism x of 2^(1+4)_+- not conjugate to xz, [E,x] is elementary abelian and centralized by x", "Lemma involutionsonexspec", [], |_| extraspecial_involutions()),
        check!("chamber.count", "the Sp6(2) chamber system over S has 2835 chambers and panels of size 3", "chamber system definition", ["parabolic.quotients"], chamber_count),
        check!("chamber.residues", "rank 2 residues are PG(2,2), GQ(2,2) and a digon", "chamber system definition; Theorem P=F4", ["chamber.count"], chamber_residues),
        check!("chamber.homogeneous", "residues of each type have equal size and the action preserves colours", "chamber system definition", ["chamber.count"], chamber_homogeneous),
    ]
}
