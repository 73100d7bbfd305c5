use std::collections::HashSet;

use forge::extra::{ExtraspecialGroup, ExtraspecialType};
use forge::forms::Form;
use forge::gf::Field;
use forge::grp::{Perm, PermGroup};
use forge::linalg::{Matrix, Subspace};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Gf2), Just(Field::Gf3), Just(Field::Gf4)]
}

fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(0..f.order() as u8, rows * cols)
        .prop_map(move |e| Matrix::from_fn(f, rows, cols, |i, j| e[i * cols + j]))
}

fn field_and_square(max: usize) -> impl Strategy<Value = (Field, Matrix, Matrix, Matrix)> {
    (field(), 1..=max).prop_flat_map(|(f, n)| (Just(f), matrix(f, n, n), matrix(f, n, n), matrix(f, n, n)))
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn closure(n: usize, gens: &[Perm]) -> usize {
    let mut seen = HashSet::from([Perm::identity(n)]);
    let mut frontier = vec![Perm::identity(n)];
    while let Some(a) = frontier.pop() {
        for g in gens {
            let b = a.mul(g);
            if seen.insert(b.clone()) {
                frontier.push(b);
            }
        }
    }
    seen.len()
}

proptest! {
    #[test]
    fn field_axioms(f in field(), a in 0u8..4, b in 0u8..4, c in 0u8..4) {
        let q = f.order() as u8;
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn vector_codes_roundtrip(f in field(), dim in 1usize..6, seed in any::<u64>()) {
        let code = seed % f.space_size(dim);
        prop_assert_eq!(f.encode(&f.decode(code, dim)), code);
    }

    #[test]
    fn matrix_product_is_associative((_, a, b, c) in field_and_square(4)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn inverse_and_kernel((f, a, _, _) in field_and_square(5)) {
        let n = a.rows();
        prop_assert_eq!(a.rank() + a.left_kernel().dim(), n);
        match a.inverse() {
            Some(b) => {
                prop_assert_eq!(a.rank(), n);
                prop_assert!(a.mul(&b).is_identity());
                prop_assert_eq!(b.mul(&a), Matrix::identity(f, n));
            }
            None => prop_assert!(a.rank() < n),
        }
    }

    #[test]
    fn subspace_dimension_formula(f in field(), a in proptest::collection::vec(0u8..4, 12), b in proptest::collection::vec(0u8..4, 12)) {
        let q = f.order() as u8;
        let rows = |e: &[u8]| e.chunks(4).map(|r| r.iter().map(|x| x % q).collect::<Vec<_>>()).collect::<Vec<_>>();
        let (ra, rb) = (rows(&a), rows(&b));
        let u = Subspace::span(f, 4, ra.iter().map(|r| r.as_slice()));
        let w = Subspace::span(f, 4, rb.iter().map(|r| r.as_slice()));
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(i.is_subspace_of(&u).unwrap() && i.is_subspace_of(&w).unwrap());
        prop_assert_eq!(u.canonical_key(), Subspace::span(f, 4, u.basis().iter().rev().map(|r| r.as_slice())).canonical_key());
    }

    #[test]
    fn perm_group_laws(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inv()).is_identity());
        // g.mul(h) applies g first
        for i in 0..7 {
            prop_assert_eq!(a.mul(&b).image(i), b.image(a.image(i)));
        }
        prop_assert_eq!(a.conj(&b), b.inv().mul(&a).mul(&b));
        prop_assert_eq!(a.pow(a.order()), Perm::identity(7));
    }

    #[test]
    fn schreier_sims_matches_enumeration(gens in proptest::collection::vec(perm(6), 1..3), probe in perm(6)) {
        let g = PermGroup::new(6, gens.clone()).unwrap();
        prop_assert_eq!(g.order() as usize, closure(6, &gens));
        let elems: HashSet<Perm> = g.elements(1000).unwrap().into_iter().collect();
        prop_assert_eq!(elems.len() as u64, g.order());
        prop_assert_eq!(g.contains(&probe), elems.contains(&probe));
    }

    #[test]
    fn cache_text_roundtrip(gens in proptest::collection::vec(perm(6), 1..3)) {
        let g = PermGroup::new(6, gens.clone()).unwrap();
        let h = PermGroup::from_cache_text(&g.to_cache_text(), &gens).unwrap();
        prop_assert_eq!(h.order(), g.order());
        prop_assert!(h.same_group(&g));
    }

    #[test]
    fn polarization(f in prop_oneof![Just(Field::Gf2), Just(Field::Gf3)], coeffs in proptest::collection::vec(0u8..3, 16), v in proptest::collection::vec(0u8..3, 4), w in proptest::collection::vec(0u8..3, 4)) {
        let q = f.order() as u8;
        let upper = Matrix::from_fn(f, 4, 4, |i, j| if i <= j { coeffs[4 * i + j] % q } else { 0 });
        let form = Form::quadratic(upper).unwrap();
        let b = form.polarize().unwrap();
        let v: Vec<u8> = v.iter().map(|x| x % q).collect();
        let w: Vec<u8> = w.iter().map(|x| x % q).collect();
        let s: Vec<u8> = v.iter().zip(&w).map(|(&x, &y)| f.add(x, y)).collect();
        prop_assert_eq!(b.pair(&v, &w), f.sub(f.sub(form.q(&s), form.q(&v)), form.q(&w)));
    }

    #[test]
    fn extraspecial_laws(p in prop_oneof![Just(2u8), Just(3u8)], minus in any::<bool>(), x in any::<usize>(), y in any::<usize>(), z in any::<usize>()) {
        let kind = if minus && p == 2 { ExtraspecialType::Minus } else { ExtraspecialType::Plus };
        let e = ExtraspecialGroup::new(p, 2, kind).unwrap();
        let n = e.order();
        let (x, y, z) = (x % n, y % n, z % n);
        prop_assert_eq!(e.mul(e.mul(x, y), z), e.mul(x, e.mul(y, z)));
        prop_assert_eq!(e.mul(x, e.inv(x)), e.identity());
        prop_assert!(e.center().contains(&e.comm(x, y)));
    }
}
