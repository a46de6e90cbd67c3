//! Acceptance suite: ten criteria covering the formula layer end to end.
//!
//! Every comparison in this file is exact: bit equality, integer equality,
//! or set equality of enumerated forms. No tolerances, no floating point.
//! Each criterion is one test that prints a single PASS line on success
//! (visible with --nocapture); a failed assertion fails that test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use detline_core::autgroup::{generator, generator_names, AutClass};
use detline_core::curve::{all_topologies, RealCurve, RealW1};
use detline_core::f2::F2Vector;
use detline_core::oracle::{enumerate_all_quadratic_forms, random_symplectic};
use detline_core::signs::{
    det_orientation_sign, loop_orientability, minus_id_sign, picard_w1, s_n, s_top,
    FullAutClass, PicardCase, RealBundle, SLClass, Sign,
};
use detline_core::spin::{
    act, arf_delta, enumerate_real_spin, is_real_spin, spin_w1, QuadraticForm,
};

fn curve(g: usize, k: usize, sep: bool) -> RealCurve {
    RealCurve::new(g, k, sep).unwrap()
}

fn w(c: &RealCurve, bits: &[u8]) -> RealW1 {
    RealW1::from_bits(c, bits).unwrap()
}

fn admissible_classes(c: &RealCurve) -> Vec<RealW1> {
    RealW1::enumerate_with_parity(c, ((c.genus() + 1) % 2) as u8)
}

fn random_aut(c: RealCurve, rng: &mut ChaCha8Rng) -> AutClass {
    let gc = if c.separating() { c.m() } else { 0 };
    let fc = c.genus() - gc;
    let sign = rng.random_range(0..2u8);
    let fe: Vec<i64> = (0..fc).map(|_| rng.random_range(-4i64..5)).collect();
    let ge: Vec<i64> = (0..gc).map(|_| rng.random_range(-4i64..5)).collect();
    AutClass::from_parts(c, sign, &fe, &ge).unwrap()
}

fn rank1(f: AutClass) -> FullAutClass {
    FullAutClass::new(f, None)
}

#[test]
fn criterion_01_s_top_generator_table() {
    for c in all_topologies(5) {
        let g = c.genus();
        let k = c.components();
        for i in 0..k {
            let f = generator(c, &format!("f{i}")).unwrap();
            assert_eq!(s_top(&f), 0, "{c:?} f{i}");
        }
        if !c.separating() {
            for i in k..=g {
                let f = generator(c, &format!("f{i}")).unwrap();
                assert_eq!(s_top(&f), 1, "{c:?} f{i}");
            }
        } else {
            for i in k..k + c.m() {
                let f = generator(c, &format!("f{i}")).unwrap();
                let h = generator(c, &format!("g{i}")).unwrap();
                assert_eq!(s_top(&f), 0, "{c:?} f{i}");
                assert_eq!(s_top(&h), 0, "{c:?} g{i}");
            }
        }
    }
    println!("acceptance criterion 1 (s_top generator table, g <= 5): PASS");
}

#[test]
fn criterion_02_s_top_of_minus_one() {
    for c in all_topologies(5) {
        let expected = if c.separating() {
            0
        } else {
            ((c.genus() + 1 - c.components()) % 2) as u8
        };
        assert_eq!(s_top(&AutClass::minus_one(c)), expected, "{c:?}");
    }
    println!("acceptance criterion 2 (s_top of the central class, g <= 5): PASS");
}

#[test]
fn criterion_03_real_spin_partition() {
    for c in all_topologies(4) {
        let g = c.genus();
        let k = c.components();
        let all: Vec<QuadraticForm> = enumerate_all_quadratic_forms(g).unwrap().collect();
        assert_eq!(all.len(), 1 << (2 * g), "{c:?}");
        let real: Vec<&QuadraticForm> = all.iter().filter(|q| is_real_spin(&c, q)).collect();
        assert_eq!(real.len(), 1 << (g + k - 1), "{c:?} total real count");
        let admissible = admissible_classes(&c);
        assert_eq!(admissible.len(), 1 << (k - 1), "{c:?} admissible classes");
        let mut covered = 0usize;
        for w1 in &admissible {
            let orbit = enumerate_real_spin(&c, w1).unwrap();
            assert_eq!(orbit.len(), 1 << g, "{c:?} orbit size at {w1:?}");
            let exhaustive: Vec<QuadraticForm> = real
                .iter()
                .filter(|q| &spin_w1(&c, q).unwrap() == w1)
                .map(|q| (*q).clone())
                .collect();
            assert_eq!(orbit, exhaustive, "{c:?} orbit content at {w1:?}");
            covered += orbit.len();
        }
        assert_eq!(covered, real.len(), "{c:?} orbits partition the real forms");
    }
    println!("acceptance criterion 3 (real-Spin partition counts, g <= 4): PASS");
}

#[test]
fn criterion_04_invariant_class_values() {
    for c in all_topologies(4) {
        let g = c.genus();
        let k = c.components();
        let n = c.dim();
        let a = |i: usize| F2Vector::unit(n, i - 1);
        let b = |i: usize| F2Vector::unit(n, g + i - 1);
        let real = enumerate_all_quadratic_forms(g)
            .unwrap()
            .filter(|q| is_real_spin(&c, q));
        for q in real {
            if !c.separating() {
                for i in k..=g {
                    assert_eq!(q.eval(&a(i)), 1, "{c:?} a{i} on {q:?}");
                }
            } else {
                let m = c.m();
                for i in k..k + m {
                    assert_eq!(q.eval(&(&a(i) + &a(i + m))), 0, "{c:?} a-pair {i} on {q:?}");
                    assert_eq!(q.eval(&(&b(i) + &b(i + m))), 0, "{c:?} b-pair {i} on {q:?}");
                }
            }
        }
    }
    println!("acceptance criterion 4 (values on invariant classes, exhaustive g <= 4): PASS");
}

#[test]
fn criterion_05_arf_symplectic_invariance() {
    for g in 0..=3usize {
        let n = 2 * g;
        let forms: Vec<QuadraticForm> = enumerate_all_quadratic_forms(g).unwrap().collect();
        for seed in 0..100u64 {
            let s = random_symplectic(g, seed);
            for q in &forms {
                let recomputed = (0..g).fold(0u8, |acc, t| {
                    acc ^ (q.eval(&s.column(t)) & q.eval(&s.column(g + t)))
                });
                assert_eq!(recomputed, q.arf(), "genus {g} seed {seed} form {q:?}");
            }
        }
        assert!(n == 2 * g);
    }
    println!("acceptance criterion 5 (Arf invariance under 100 random basis changes per form, g <= 3): PASS");
}

#[test]
fn criterion_06_arf_shift_well_defined_and_additive() {
    // Well-definedness: the shift is constant on each full orbit.
    for c in all_topologies(4) {
        for w1 in admissible_classes(&c) {
            for name in generator_names(&c) {
                let f = generator(c, &name).unwrap();
                let delta = arf_delta(&f, &w1).unwrap();
                for q in enumerate_real_spin(&c, &w1).unwrap() {
                    let shifted = act(&f, &q).unwrap();
                    assert_eq!(shifted.arf() ^ q.arf(), delta, "{c:?} {name} {w1:?}");
                }
            }
        }
    }
    // Additivity over 200 random pairs per topology.
    for c in all_topologies(4) {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let admissible = admissible_classes(&c);
        for _ in 0..200 {
            let x = random_aut(c, &mut rng);
            let y = random_aut(c, &mut rng);
            for w1 in &admissible {
                let lhs = arf_delta(&x.compose(&y), w1).unwrap();
                let rhs = arf_delta(&x, w1).unwrap() ^ arf_delta(&y, w1).unwrap();
                assert_eq!(lhs, rhs, "{c:?} {w1:?}");
            }
        }
    }
    println!("acceptance criterion 6 (Arf shift well-defined and additive): PASS");
}

#[test]
fn criterion_07_main_theorem_consistency() {
    // The sign is a homomorphism in the automorphism class, ranks 1 to 3.
    for c in all_topologies(4) {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for rank in 1..=3usize {
            for _ in 0..50 {
                let degree = rng.random_range(-5i64..6);
                let mut bits: Vec<u8> =
                    (0..c.components()).map(|_| rng.random_range(0..2u8)).collect();
                let parity = bits.iter().fold(0u8, |a, &x| a ^ x);
                bits[0] ^= parity ^ (degree.rem_euclid(2) as u8);
                let bundle =
                    RealBundle::new(c, rank, degree, w(&c, &bits)).unwrap();
                let mk = |rng: &mut ChaCha8Rng| {
                    let det_part = random_aut(c, rng);
                    let sl_part = (rank >= 2).then(|| {
                        let entries: Vec<i64> = (0..c.components())
                            .map(|_| rng.random_range(-3i64..4))
                            .collect();
                        SLClass::new(&c, entries).unwrap()
                    });
                    FullAutClass::new(det_part, sl_part)
                };
                let x = mk(&mut rng);
                let y = mk(&mut rng);
                let product = det_orientation_sign(&bundle, &x.compose(&y)).unwrap();
                let separate = det_orientation_sign(&bundle, &x).unwrap()
                    * det_orientation_sign(&bundle, &y).unwrap();
                assert_eq!(product, separate, "{c:?} rank {rank}");
            }
        }
    }
    // Rank 1, degree of Spin parity: the sign exponent is exactly the Arf
    // shift at the bundle's own class.
    for c in all_topologies(4) {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for degree in -5i64..=5 {
            if degree.rem_euclid(2) as usize != (c.genus() + 1) % 2 {
                continue;
            }
            for w1 in RealW1::enumerate_with_parity(&c, degree.rem_euclid(2) as u8) {
                let bundle = RealBundle::new(c, 1, degree, w1.clone()).unwrap();
                let mut classes: Vec<AutClass> = generator_names(&c)
                    .iter()
                    .map(|n| generator(c, n).unwrap())
                    .collect();
                for _ in 0..10 {
                    classes.push(random_aut(c, &mut rng));
                }
                for f in classes {
                    let via_arf = arf_delta(&f, &w1).unwrap();
                    assert_eq!(s_n(&bundle, &f).unwrap(), via_arf, "{c:?} deg {degree}");
                    assert_eq!(
                        det_orientation_sign(&bundle, &rank1(f)).unwrap(),
                        Sign::from_bit(via_arf),
                        "{c:?} deg {degree}"
                    );
                }
            }
        }
    }
    println!("acceptance criterion 7 (sign homomorphism and Spin-parity route equality, g <= 4): PASS");
}

#[test]
fn criterion_08_riemann_roch_cross_check() {
    for c in all_topologies(4) {
        for degree in -6i64..=6 {
            for w1 in RealW1::enumerate_with_parity(&c, degree.rem_euclid(2) as u8) {
                let bundle = RealBundle::new(c, 1, degree, w1).unwrap();
                let expected =
                    Sign::from_bit((degree + 1 - c.genus() as i64).rem_euclid(2) as u8);
                assert_eq!(minus_id_sign(&bundle).unwrap(), expected, "{c:?} deg {degree}");
                assert_eq!(
                    det_orientation_sign(&bundle, &rank1(AutClass::minus_one(c))).unwrap(),
                    expected,
                    "{c:?} deg {degree}"
                );
            }
        }
    }
    println!("acceptance criterion 8 (central class sign equals the index parity, |deg| <= 6, g <= 4): PASS");
}

#[test]
fn criterion_09_genus_one_picard_table() {
    let sep = curve(1, 2, true);
    // Even degree: non-orientable exactly over the class w = (0,0).
    let out = picard_w1(&sep, 0, &w(&sep, &[0, 0]), None).unwrap();
    assert_eq!(out.case, PicardCase::Unpointed);
    assert_eq!(out.functional.bits(), &[1]);
    let out = picard_w1(&sep, 2, &w(&sep, &[1, 1]), None).unwrap();
    assert_eq!(out.functional.bits(), &[0]);
    // Odd degree with a basepoint on the w = 1 component: non-orientable.
    let out = picard_w1(&sep, 1, &w(&sep, &[1, 0]), Some(0)).unwrap();
    assert_eq!(out.case, PicardCase::Pointed);
    assert_eq!(out.w_used, w(&sep, &[0, 0]));
    assert_eq!(out.functional.bits(), &[1]);
    let out = picard_w1(&sep, 3, &w(&sep, &[0, 1]), Some(1)).unwrap();
    assert_eq!(out.w_used, w(&sep, &[0, 0]));
    assert_eq!(out.functional.bits(), &[1]);
    // Basepoint on the w = 0 component instead: orientable.
    let out = picard_w1(&sep, 1, &w(&sep, &[0, 1]), Some(0)).unwrap();
    assert_eq!(out.w_used, w(&sep, &[1, 1]));
    assert_eq!(out.functional.bits(), &[0]);

    // Non-separating torus: never orientable.
    let nonsep = curve(1, 1, false);
    let out = picard_w1(&nonsep, 0, &w(&nonsep, &[0]), None).unwrap();
    assert_eq!(out.case, PicardCase::Unpointed);
    assert_eq!(out.functional.bits(), &[1]);
    let out = picard_w1(&nonsep, 1, &w(&nonsep, &[1]), Some(0)).unwrap();
    assert_eq!(out.w_used, w(&nonsep, &[0]));
    assert_eq!(out.functional.bits(), &[1]);
    println!("acceptance criterion 9 (genus-1 Picard table): PASS");
}

#[test]
fn criterion_10_pin_parity() {
    for c in all_topologies(3) {
        let k = c.components();
        for rank in 2..=3usize {
            let bundle = RealBundle::new(c, rank, 0, w(&c, &vec![0; k])).unwrap();
            for pattern in 0..(1u32 << k) {
                let entries: Vec<i64> = (0..k)
                    .map(|i| {
                        let on = (pattern >> i) & 1 == 1;
                        // Odd multiples swap too; exercise 3 alongside 1.
                        if on {
                            if i % 2 == 0 {
                                1
                            } else {
                                3
                            }
                        } else {
                            0
                        }
                    })
                    .collect();
                let swaps = pattern.count_ones() as usize;
                let sl = SLClass::new(&c, entries).unwrap();
                let f = FullAutClass::new(AutClass::identity(c), Some(sl.clone()));
                let expected = Sign::from_bit((swaps % 2) as u8);
                assert_eq!(
                    det_orientation_sign(&bundle, &f).unwrap(),
                    expected,
                    "{c:?} rank {rank} pattern {pattern:b}"
                );
                assert_eq!(
                    loop_orientability(&bundle, &sl).unwrap(),
                    swaps.is_multiple_of(2),
                    "{c:?} rank {rank} pattern {pattern:b}"
                );
                // One more swapped component flips both outputs.
                for i in 0..k {
                    let mut flipped = sl.entries().to_vec();
                    flipped[i] += 1;
                    let sl2 = SLClass::new(&c, flipped).unwrap();
                    let f2 = FullAutClass::new(AutClass::identity(c), Some(sl2.clone()));
                    assert_eq!(
                        det_orientation_sign(&bundle, &f2).unwrap(),
                        expected * Sign::Minus,
                        "{c:?} rank {rank} pattern {pattern:b} flip {i}"
                    );
                    assert_eq!(
                        loop_orientability(&bundle, &sl2).unwrap(),
                        swaps % 2 == 1,
                        "{c:?} rank {rank} pattern {pattern:b} flip {i}"
                    );
                }
            }
        }
    }
    println!("acceptance criterion 10 (Pin permutation parity, ranks 2-3, g <= 3): PASS");
}
