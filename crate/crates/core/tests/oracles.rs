//! Values checked against oracles written here, independent of the library's
//! own algorithms: brute-force matrix counts, hand-built geometries, textbook
//! counting formulas.

use forge::chamber::{build_coset_chambers, classify_incidence, Rank2Kind};
use forge::extra::{ExtraspecialGroup, ExtraspecialType};
use forge::forms::{Form, WittType};
use forge::gf::Field;
use forge::grp::{Perm, PermGroup, ORBIT_BUDGET};
use forge::linalg::Matrix;
use forge::matgrp::{classical_order, sp6_form, suzuki_class, GroupName, PermRep, Suzuki};

fn all_matrices(f: Field, n: usize) -> impl Iterator<Item = Matrix> {
    let q = f.order() as u64;
    (0..q.pow((n * n) as u32)).map(move |code| {
        let entries = f.decode(code, n * n);
        Matrix::from_fn(f, n, n, |i, j| entries[i * n + j])
    })
}

fn brute_isometries(form: &Form) -> u64 {
    all_matrices(form.field(), form.dim()).filter(|m| m.rank() == form.dim() && form.preserves(m)).count() as u64
}

fn group_from_generators(f: Field, n: usize, gens: &[Matrix]) -> u64 {
    let rep = PermRep::new(&[(f, n)]);
    let refs: Vec<Vec<&Matrix>> = gens.iter().map(|g| vec![g]).collect();
    let perms: Vec<Perm> = refs.iter().map(|r| rep.perm(r).unwrap()).collect();
    PermGroup::new(rep.degree(), perms).unwrap().order()
}

#[test]
fn isometry_generators_give_the_brute_force_group() {
    let cases = [
        Form::symplectic_standard(Field::Gf2, 4).unwrap(),
        Form::hyperbolic(Field::Gf3, 1),
        Form::elliptic(Field::Gf3, 1).unwrap(),
        Form::hyperbolic(Field::Gf2, 2),
        Form::elliptic(Field::Gf2, 2).unwrap(),
    ];
    for form in cases {
        let brute = brute_isometries(&form);
        let gens = form.isometry_generators().unwrap();
        assert_eq!(group_from_generators(form.field(), form.dim(), &gens), brute, "{form:?}");
    }
}

#[test]
fn small_isometry_group_orders() {
    assert_eq!(brute_isometries(&Form::symplectic_standard(Field::Gf2, 4).unwrap()), 720);
    assert_eq!(brute_isometries(&Form::hyperbolic(Field::Gf3, 1)), 4);
    assert_eq!(brute_isometries(&Form::elliptic(Field::Gf3, 1).unwrap()), 8);
    assert_eq!(brute_isometries(&Form::hyperbolic(Field::Gf2, 2)), 72);
    assert_eq!(brute_isometries(&Form::elliptic(Field::Gf2, 2).unwrap()), 120);
}

/// `|Sp_{2n}(q)| = q^{n^2} prod (q^{2i} - 1)` via counting symplectic bases.
fn symplectic_basis_count(q: u64, n: u32) -> u64 {
    let mut total = 1;
    for i in 1..=n {
        let m = 2 * i;
        // first vector: any nonzero; partner: q^{m-1} choices with pairing 1
        total *= (q.pow(m) - 1) * q.pow(m - 1);
    }
    total
}

#[test]
fn order_formulas_match_basis_counts() {
    assert_eq!(classical_order(GroupName::Sp62), symplectic_basis_count(2, 3));
    assert_eq!(classical_order(GroupName::O72), symplectic_basis_count(2, 3));
    assert_eq!(classical_order(GroupName::AutSu42), 2 * classical_order(GroupName::Su42));
    assert_eq!(classical_order(GroupName::Su42), symplectic_basis_count(3, 2) / 2);
    assert_eq!(classical_order(GroupName::Co4Plus3), 2 * classical_order(GroupName::Go4Plus3));
}

#[test]
fn singular_counts_match_formulas() {
    for f in [Field::Gf2, Field::Gf3, Field::Gf4] {
        let q = f.order() as u64;
        for m in 1..=3u32 {
            if f.space_size(2 * m as usize) > 5000 {
                continue;
            }
            let plus = Form::hyperbolic(f, m as usize);
            assert_eq!(plus.singular_count(), (q.pow(m) - 1) * (q.pow(m - 1) + 1));
            assert_eq!(plus.witt_type().unwrap().0, WittType::Plus);
            let minus = Form::elliptic(f, m as usize).unwrap();
            assert_eq!(minus.singular_count(), (q.pow(m) + 1) * (q.pow(m - 1) - 1));
            assert_eq!(minus.witt_type().unwrap().0, WittType::Minus);
        }
    }
}

#[test]
fn gf4_matches_polynomial_arithmetic() {
    // a + b w with w^2 = w + 1
    let poly_mul = |a: u8, b: u8| {
        let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
        let c0 = (a0 & b0) ^ (a1 & b1);
        let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        c0 | (c1 << 1)
    };
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(Field::Gf4.mul(a, b), poly_mul(a, b));
            assert_eq!(Field::Gf4.add(a, b), a ^ b);
        }
    }
}

fn fano() -> Vec<(usize, usize)> {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    lines.iter().enumerate().flat_map(|(l, pts)| pts.iter().map(move |&p| (p, l))).collect()
}

/// Points: 2-subsets of six letters. Lines: partitions into three pairs.
fn doily() -> (usize, usize, Vec<(usize, usize)>) {
    let mut pairs = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            pairs.push((a, b));
        }
    }
    let mut lines: Vec<[usize; 3]> = Vec::new();
    for (i, &p) in pairs.iter().enumerate() {
        for (j, &q) in pairs.iter().enumerate().skip(i + 1) {
            for (k, &r) in pairs.iter().enumerate().skip(j + 1) {
                let mut letters = [p.0, p.1, q.0, q.1, r.0, r.1];
                letters.sort_unstable();
                if letters == [0, 1, 2, 3, 4, 5] {
                    lines.push([i, j, k]);
                }
            }
        }
    }
    let flags = lines.iter().enumerate().flat_map(|(l, ps)| ps.iter().map(move |&p| (p, l))).collect();
    (pairs.len(), lines.len(), flags)
}

#[test]
fn hand_built_geometries_classify() {
    assert_eq!(classify_incidence(7, 7, &fano()), Rank2Kind::ProjectivePlane);
    let (np, nl, flags) = doily();
    assert_eq!((np, nl), (15, 15));
    assert_eq!(classify_incidence(np, nl, &flags), Rank2Kind::Quadrangle);
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|p| (0..3).map(move |l| (p, l))).collect();
    assert_eq!(classify_incidence(3, 3, &k33), Rank2Kind::Digon);
}

#[test]
fn trivial_chamber_system() {
    let g = PermGroup::new(4, vec![Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()]).unwrap();
    let cs = build_coset_chambers(&g, &g, &[g.clone(), g.clone()], ORBIT_BUDGET).unwrap();
    assert_eq!(cs.len(), 1);
    assert_eq!(cs.panel_sizes(1), vec![1]);
    assert_eq!(cs.panel_sizes(2), vec![1]);
}

#[test]
fn extraspecial_involution_counts() {
    for n in 1..=3usize {
        for (kind, sign) in [(ExtraspecialType::Plus, 1i64), (ExtraspecialType::Minus, -1)] {
            let e = ExtraspecialGroup::new(2, n, kind).unwrap();
            let invs = e.elements().filter(|&x| e.element_order(x) == 2).count() as i64;
            let m = 1i64 << n;
            assert_eq!(invs, m * m + sign * m - 1, "2^(1+{}) {kind:?}", 2 * n);
            assert_eq!(e.order(), 1 << (2 * n + 1));
            assert_eq!(e.center().len(), 2);
        }
    }
}

#[test]
fn transvection_is_b1() {
    let form = sp6_form();
    let v = [1, 0, 0, 0, 0, 0];
    let t = form.transvection(&v, 1);
    assert!(form.preserves(&t));
    assert_eq!(suzuki_class(&t, &form).unwrap(), Suzuki::B1);
}

#[test]
fn exterior_power_dimensions() {
    use forge::modrep::GModule;
    let m = GModule::new("gl", Field::Gf2, 6, vec![Matrix::identity(Field::Gf2, 6)]).unwrap();
    let binom = [1, 6, 15, 20, 15, 6, 1];
    for (k, &b) in binom.iter().enumerate().skip(1) {
        assert_eq!(m.exterior_power(k).dim(), b);
    }
}
