mod common;

use charvar::algebra::{
    CyclotomicField, Field, FiniteField, GaloisField, Integers, LaurentPoly, LaurentRing, Mat,
};
use charvar::braid::BraidWord;
use charvar::charvar::{enumerate_char, torsion_scan, Character};
use charvar::covers::{abelianization_invariants, b1_unbranched, rs_subgroup, CoverSpec, Transversal};
use charvar::fox::alexander_matrix;
use charvar::torus::{LatticeAuto, MonomialEquation, TorsionSubtorusSet};
use charvar::words::{reduce, FreeWord};
use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn seeded(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn letters(n: usize, max: usize) -> impl Strategy<Value = Vec<(usize, i32)>> {
    prop::collection::vec((0..n, prop::bool::ANY).prop_map(|(g, s)| (g, if s { 1 } else { -1 })), 0..max)
}

fn braid(strands: usize, max: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..strands, prop::bool::ANY), 0..max).prop_map(move |v| {
        v.into_iter().fold(BraidWord::identity(strands), |b, (i, s)| {
            b.mul(&BraidWord::sigma(strands, i, if s { 1 } else { -1 }).unwrap())
        })
    })
}

fn laurent(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, nvars), -4i64..=4), 0..5).prop_map(move |terms| {
        LaurentPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

proptest! {
    #![proptest_config(seeded(1000, 0x0f0c))]

    #[test]
    fn fox_fundamental_identity(raw in letters(4, 30)) {
        prop_assert!(fox_identity(&FreeWord::from_letters(&raw), 4));
    }

    #[test]
    fn reduce_is_idempotent(raw in letters(3, 40)) {
        let once = reduce(&raw);
        prop_assert_eq!(reduce(once.letters()), once.clone());
        prop_assert!(once.letters().windows(2).all(|w| w[0].0 != w[1].0));
        prop_assert!(once.letters().iter().all(|l| l.1 != 0));
    }
}

proptest! {
    #![proptest_config(seeded(200, 0xb4a1d))]

    #[test]
    fn artin_action_respects_braid_group(
        w in letters(4, 12),
        b in braid(4, 8),
        c in braid(4, 8),
    ) {
        let w = FreeWord::from_letters(&w);
        prop_assert_eq!(artin_checks(4, &w, &b, &c), Ok(()));
    }
}

proptest! {
    #![proptest_config(seeded(200, 0x5af))]

    #[test]
    fn integer_smith_form(rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-20i64..=20, 16)) {
        let m = Mat::from_fn(rows, cols, |i, j| BigInt::from(entries[i * 4 + j]));
        prop_assert_eq!(snf_checks(&Integers, &m), Ok(()));
    }

    #[test]
    fn laurent_smith_form(
        rows in 1usize..4,
        cols in 1usize..4,
        entries in prop::collection::vec((-2i64..=2, prop::collection::vec(0u64..7, 0..4)), 9),
    ) {
        let ring = LaurentRing::new(GaloisField::new(7).unwrap());
        let m = Mat::from_fn(rows, cols, |i, j| {
            let (low, c) = &entries[i * 3 + j];
            ring.from_coeffs(*low, c.iter().map(|&x| ring.field().from_i64(x as i64)).collect())
        });
        prop_assert_eq!(snf_checks(&ring, &m), Ok(()));
    }

    #[test]
    fn rational_laurent_smith_form(
        rows in 1usize..3,
        cols in 1usize..4,
        entries in prop::collection::vec((-1i64..=1, prop::collection::vec(-3i64..=3, 0..4)), 6),
    ) {
        let ring = LaurentRing::new(CyclotomicField::rationals());
        let m = Mat::from_fn(rows, cols, |i, j| {
            let (low, c) = &entries[i * 3 + j];
            ring.from_coeffs(*low, c.iter().map(|&x| ring.field().from_i64(x)).collect())
        });
        prop_assert_eq!(snf_checks(&ring, &m), Ok(()));
    }
}

proptest! {
    #![proptest_config(seeded(300, 0xe7a1))]

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in laurent(2), q in laurent(2), x in 1u32..9, y in 1u32..9) {
        let f = GaloisField::new(9).unwrap();
        let pt = [charvar::algebra::Gf(x), charvar::algebra::Gf(y)];
        let ev = |r: &LaurentPoly| r.eval(&f, &pt).unwrap();
        prop_assert_eq!(ev(&(&p * &q)), f.mul(&ev(&p), &ev(&q)));
        prop_assert_eq!(ev(&(&p + &q)), f.add(&ev(&p), &ev(&q)));
        let z = CyclotomicField::new(6).unwrap();
        let zp = [z.pow(&z.zeta(), x as i64), z.from_i64(y as i64 - 4)];
        let point = if z.is_zero(&zp[1]) { [zp[0].clone(), z.one()] } else { zp };
        let ez = |r: &LaurentPoly| r.eval(&z, &point).unwrap();
        prop_assert_eq!(ez(&(&p * &q)), z.mul(&ez(&p), &ez(&q)));
    }
}

fn cover_strategy() -> impl Strategy<Value = CoverSpec> {
    prop_oneof![
        (2u64..=16, 0i64..16, 0i64..16).prop_map(|(n, a, b)| CoverSpec::cyclic(n, &[("conic", a), ("quartic", b)])),
        (prop::sample::select(vec![(2u64, 2u64), (2, 4), (3, 3), (2, 6), (4, 4)]), 0i64..4, 0i64..4, 0i64..4, 0i64..4)
            .prop_map(|((n1, n2), a, b, c, d)| CoverSpec {
                target: vec![n1, n2],
                images: vec![("conic".into(), vec![a, b]), ("quartic".into(), vec![c, d])],
            }),
    ]
}

proptest! {
    #![proptest_config(seeded(60, 0x5a4b))]

    #[test]
    fn sakuma_matches_reidemeister_schreier(spec in cover_strategy(), which in 1u8..=2) {
        let p = pres(&format!("g{which}.pres"));
        // not every random map is onto
        prop_assume!(spec.resolve(&p).is_ok());
        let formula = b1_unbranched(&p, &spec).unwrap().b1;
        let bfs = rs_subgroup(&p, &spec, Transversal::BreadthFirst, 16).unwrap();
        let dfs = rs_subgroup(&p, &spec, Transversal::DepthFirst, 16).unwrap();
        let (b, t) = abelianization_invariants(&bfs);
        prop_assert_eq!(formula, b);
        prop_assert_eq!(abelianization_invariants(&dfs), (b, t));
    }
}

fn unimodular(r: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..r, 0..r, -2i64..=2), 0..8).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as i64).collect()).collect();
        for (i, j, k) in ops {
            if i != j {
                for c in 0..r {
                    m[i][c] += k * m[j][c];
                }
            }
        }
        m
    })
}

fn monomial_set(r: usize) -> impl Strategy<Value = TorsionSubtorusSet> {
    let eq = (prop::collection::vec(-2i64..=2, r), prop::sample::select(vec![1u64, 2, 4]), 0i64..4)
        .prop_map(|(v, n, c)| MonomialEquation::new(v, n, c));
    prop::collection::vec(prop::collection::vec(eq, 0..3), 1..3).prop_map(move |pieces| TorsionSubtorusSet {
        names: (0..r).map(|i| format!("x{i}")).collect(),
        global: Vec::new(),
        pieces,
    })
}

proptest! {
    #![proptest_config(seeded(80, 0x7045))]

    #[test]
    fn torus_image_round_trip(s in monomial_set(3), m in unimodular(3)) {
        let f = GaloisField::new(5).unwrap();
        let a = LatticeAuto::new(s.names.clone(), s.names.clone(), m).unwrap();
        let img = s.image(&a).unwrap();
        let mut pushed: Vec<_> = s.enumerate(&f, 1000).unwrap().iter().map(|x| a.transform_point(&f, x)).collect();
        pushed.sort();
        prop_assert_eq!(img.enumerate(&f, 1000).unwrap(), pushed);
        let back = img.image(&a.inverse()).unwrap();
        prop_assert_eq!(back.enumerate(&f, 1000).unwrap(), s.enumerate(&f, 1000).unwrap());
    }

    #[test]
    fn forced_coordinates_hold_on_every_point(s in monomial_set(3)) {
        let reports = charvar::torus::coordinate_pieces(&s);
        for q in [5u64, 13] {
            let f = GaloisField::new(q).unwrap();
            for (piece, rep) in s.pieces.iter().zip(&reports) {
                let single = TorsionSubtorusSet { names: s.names.clone(), global: Vec::new(), pieces: vec![piece.clone()] };
                let pts = single.enumerate(&f, 10_000).unwrap();
                if rep.empty {
                    prop_assert!(pts.is_empty());
                }
                for x in &pts {
                    for &i in &rep.forced_one {
                        prop_assert!(f.is_one(&x.values[i]));
                    }
                }
            }
        }
    }
}

// deterministic sweeps

#[test]
fn fitting_membership_matches_depth_on_the_full_grid() {
    let f = GaloisField::new(5).unwrap();
    for name in ["g1.pres", "g2.pres", "sextic1.pres", "sextic2.pres"] {
        let checked = fitting_agrees(&f, &alexander_matrix(&pres(name))).unwrap();
        assert!(checked > 0, "{name}");
    }
}

#[test]
fn deletion_varieties_embed_in_the_coordinate_slice() {
    for (name, p) in corpus() {
        let a = alexander_matrix(&p);
        for q in [3u64, 5] {
            let f = GaloisField::new(q).unwrap();
            for k in 1..=2 {
                lemma_inclusion(&f, &a, k).unwrap_or_else(|e| panic!("{name} F{q} k={k}: {e}"));
            }
        }
    }
}

#[test]
fn corpus_relators_satisfy_the_fox_identity() {
    for (name, p) in corpus() {
        assert!(alexander_matrix(&p).fundamental_identity_holds(), "{name}");
        for r in p.relators() {
            assert!(fox_identity(r, p.n_gens()), "{name}");
        }
    }
}

#[test]
fn char_slices_shrink_with_k() {
    for (name, p) in corpus() {
        let a = alexander_matrix(&p);
        for q in [3u64, 4, 5, 7] {
            let f = GaloisField::new(q).unwrap();
            let mut prev = enumerate_char(&f, &a, 0, u64::MAX).unwrap();
            for k in 1..=3 {
                let s = enumerate_char(&f, &a, k, u64::MAX).unwrap();
                assert!(s.points.iter().all(|x| prev.contains(x)), "{name} F{q} k={k}");
                prev = s;
            }
        }
    }
}

fn frobenius<F: FiniteField>(f: &F, p: u64, x: &Character<F::Elem>) -> Character<F::Elem> {
    Character::new(x.values.iter().map(|v| f.pow(v, p as i64)).collect())
}

#[test]
fn finite_field_slices_are_galois_stable() {
    for (name, p) in corpus() {
        let a = alexander_matrix(&p);
        for (q, ch) in [(4u64, 2u64), (9, 3), (25, 5), (8, 2)] {
            let f = GaloisField::new(q).unwrap();
            for k in 1..=2 {
                let s = enumerate_char(&f, &a, k, u64::MAX).unwrap();
                for x in &s.points {
                    assert!(s.contains(&frobenius(&f, ch, x)), "{name} F{q} k={k}");
                }
            }
        }
    }
}

#[test]
fn torsion_slices_are_galois_stable() {
    for (name, p) in corpus() {
        let a = alexander_matrix(&p);
        for n in [2u64, 6] {
            let (f, s) = torsion_scan(&a, n, 1, u64::MAX).unwrap();
            let zeta = f.zeta();
            let t = f.torsion_exponent();
            // every point is a tuple of powers of zeta, so sigma_a acts by powering
            let log = |v: &<CyclotomicField as Field>::Elem| (0..t as i64).find(|&j| f.pow(&zeta, j) == *v).unwrap();
            for a_ in (1..t as i64).filter(|a| num_integer::gcd(*a, t as i64) == 1) {
                for x in &s.points {
                    let y = Character::new(x.values.iter().map(|v| f.pow(&zeta, log(v) * a_)).collect());
                    assert!(s.contains(&y), "{name} N={n}");
                }
            }
        }
    }
}
