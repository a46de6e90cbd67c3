//! Brute-force verification layer.
//!
//! Everything the formula layer computes is re-derived here the slow way:
//! quadratic forms are enumerated exhaustively (2^{2g} of them), group
//! identities are checked on random elements, and the Arf invariant is
//! recomputed in randomly generated symplectic bases. The suite reports
//! check-by-check results; a failed check carries a replayable JSON
//! counterexample instead of aborting.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::autgroup::{generator, generator_names, AutClass};
use crate::curve::{all_topologies, RealCurve, RealW1};
use crate::f2::{gf2_rank, gf2_solve_affine, symplectic_pairing, F2Matrix, F2Vector};
use crate::signs::{
    beta0, det_orientation_sign, minus_id_sign, s_top, FullAutClass, RealBundle, SLClass,
};
use crate::spin::{
    act, arf_delta, enumerate_real_spin, is_real_spin, spin_w1, QuadraticForm,
};

/// Largest genus the exhaustive layer accepts; 2^{2g} stays cheap up to here.
pub const MAX_ORACLE_GENUS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("genus {got} exceeds the exhaustive oracle bound {max}")]
    BoundExceeded { got: usize, max: usize },
}

/// Every quadratic form on a genus-g surface, by basis values in
/// lexicographic order.
pub fn enumerate_all_quadratic_forms(
    g: usize,
) -> Result<impl Iterator<Item = QuadraticForm>, OracleError> {
    if g > MAX_ORACLE_GENUS {
        return Err(OracleError::BoundExceeded {
            got: g,
            max: MAX_ORACLE_GENUS,
        });
    }
    let n = 2 * g;
    Ok((0u64..1 << n).map(move |code| {
        let bits: Vec<u8> = (0..n).map(|j| ((code >> (n - 1 - j)) & 1) as u8).collect();
        QuadraticForm::from_raw(F2Vector::from_bits(bits))
    }))
}

/// A random mod-2 symplectic matrix: a product of transvections
/// x -> x + (x•v)v, each of which preserves the pairing.
pub fn random_symplectic(g: usize, seed: u64) -> F2Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_symplectic_with(g, &mut rng)
}

fn random_symplectic_with(g: usize, rng: &mut ChaCha8Rng) -> F2Matrix {
    let n = 2 * g;
    let mut cols: Vec<F2Vector> = (0..n).map(|j| F2Vector::unit(n, j)).collect();
    if g > 0 {
        for _ in 0..40 {
            let v = loop {
                let bits: Vec<u8> = (0..n).map(|_| rng.random_range(0..2u8)).collect();
                let cand = F2Vector::from_bits(bits);
                if !cand.is_zero() {
                    break cand;
                }
            };
            for col in cols.iter_mut() {
                if symplectic_pairing(g, col, &v) == 1 {
                    *col += &v;
                }
            }
        }
    }
    let rows = (0..n)
        .map(|r| F2Vector::from_bits(cols.iter().map(|c| c.get(r)).collect::<Vec<u8>>()))
        .collect();
    F2Matrix::from_rows(rows, n)
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub topology: Value,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn curve_json(c: &RealCurve) -> Value {
    json!({
        "genus": c.genus(),
        "real_components": c.components(),
        "separating": c.separating(),
    })
}

fn aut_json(f: &AutClass) -> Value {
    let mut v = json!({
        "sign": f.sign(),
        "f_exponents": f.f_exponents(),
    });
    if f.curve().separating() {
        v["g_exponents"] = json!(f.g_exponents());
    }
    v
}

fn form_json(q: &QuadraticForm) -> Value {
    json!({"q_a": q.a_values(), "q_b": q.b_values()})
}

fn w1_json(w: &RealW1) -> Value {
    json!(w.bits().bits())
}

/// Run the whole check suite on one curve.
pub fn verify_curve_suite(
    curve: &RealCurve,
    seed: u64,
) -> Result<VerificationReport, OracleError> {
    if curve.genus() > MAX_ORACLE_GENUS {
        return Err(OracleError::BoundExceeded {
            got: curve.genus(),
            max: MAX_ORACLE_GENUS,
        });
    }
    let mut suite = Suite {
        curve: *curve,
        rng: ChaCha8Rng::seed_from_u64(seed),
        checks: Vec::new(),
    };
    suite.run_all();
    Ok(VerificationReport {
        seed,
        checks: suite.checks,
    })
}

/// Run the suite on every valid topology up to the given genus, merged into
/// one report.
pub fn verify_up_to_genus(max_genus: usize, seed: u64) -> Result<VerificationReport, OracleError> {
    if max_genus > MAX_ORACLE_GENUS {
        return Err(OracleError::BoundExceeded {
            got: max_genus,
            max: MAX_ORACLE_GENUS,
        });
    }
    let mut checks = Vec::new();
    for c in all_topologies(max_genus) {
        checks.extend(verify_curve_suite(&c, seed)?.checks);
    }
    Ok(VerificationReport { seed, checks })
}

/// Run the suite on raw topology data. An invalid topology is not an error:
/// the constructor rejecting it is the expected behavior, reported as a
/// single passing check with the suite skipped.
pub fn verify_topology(
    genus: usize,
    components: usize,
    separating: bool,
    seed: u64,
) -> Result<VerificationReport, OracleError> {
    if genus > MAX_ORACLE_GENUS {
        return Err(OracleError::BoundExceeded {
            got: genus,
            max: MAX_ORACLE_GENUS,
        });
    }
    match RealCurve::new(genus, components, separating) {
        Ok(c) => verify_curve_suite(&c, seed),
        Err(_) => Ok(VerificationReport {
            seed,
            checks: vec![CheckResult {
                name: "skipped_invalid_topology".into(),
                topology: json!({
                    "genus": genus,
                    "real_components": components,
                    "separating": separating,
                }),
                passed: true,
                counterexample: None,
            }],
        }),
    }
}

struct Suite {
    curve: RealCurve,
    rng: ChaCha8Rng,
    checks: Vec<CheckResult>,
}

impl Suite {
    fn record(&mut self, name: &str, outcome: Result<(), Value>) {
        let (passed, counterexample) = match outcome {
            Ok(()) => (true, None),
            Err(ce) => (false, Some(ce)),
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            topology: curve_json(&self.curve),
            passed,
            counterexample,
        });
    }

    fn run_all(&mut self) {
        type Check = fn(&mut Suite) -> Result<(), Value>;
        let checks: [(&str, Check); 18] = [
            ("involution_squares_to_identity", Suite::check_involution_squares),
            ("involution_preserves_pairing", Suite::check_involution_pairing),
            ("fixed_space_dimension", Suite::check_fix_dimension),
            ("eigenspace_bases", Suite::check_eigenspace_bases),
            ("oval_classes_fixed_and_spanned", Suite::check_oval_classes),
            ("real_spin_partition", Suite::check_partition),
            ("invariant_class_values", Suite::check_invariant_values),
            ("orientability_class_parity", Suite::check_w1_parity),
            ("arf_shift_well_defined", Suite::check_arf_shift_well_defined),
            ("arf_shift_additive", Suite::check_arf_shift_additive),
            ("affine_offset_constant", Suite::check_affine_offset),
            ("s_top_generator_table", Suite::check_s_top_table),
            ("s_top_central_value", Suite::check_s_top_central),
            ("oval_generator_product_is_central", Suite::check_generator_product),
            ("component_sign_index_compatibility", Suite::check_component_signs),
            ("sign_homomorphism", Suite::check_sign_homomorphism),
            ("central_sign_cross_check", Suite::check_central_sign),
            ("arf_symplectic_invariance", Suite::check_arf_invariance),
        ];
        for (name, check) in checks {
            let outcome = check(self);
            self.record(name, outcome);
        }
    }

    fn admissible_classes(&self) -> Vec<RealW1> {
        let parity = ((self.curve.genus() + 1) % 2) as u8;
        RealW1::enumerate_with_parity(&self.curve, parity)
    }

    fn random_aut(&mut self) -> AutClass {
        let c = self.curve;
        let gc = if c.separating() { c.m() } else { 0 };
        let fc = c.genus() - gc;
        let sign = self.rng.random_range(0..2u8);
        let fe: Vec<i64> = (0..fc).map(|_| self.rng.random_range(-4i64..5)).collect();
        let ge: Vec<i64> = (0..gc).map(|_| self.rng.random_range(-4i64..5)).collect();
        AutClass::from_parts(c, sign, &fe, &ge).expect("shapes match the curve")
    }

    fn random_w1_with_parity(&mut self, parity: u8) -> RealW1 {
        let k = self.curve.components();
        let mut bits: Vec<u8> = (0..k).map(|_| self.rng.random_range(0..2u8)).collect();
        let current = bits.iter().fold(0u8, |a, &b| a ^ b);
        bits[0] ^= current ^ parity;
        RealW1::from_bits(&self.curve, &bits).expect("bit count equals oval count")
    }

    fn a_class(&self, i: usize) -> F2Vector {
        F2Vector::unit(self.curve.dim(), i - 1)
    }

    fn b_class(&self, i: usize) -> F2Vector {
        F2Vector::unit(self.curve.dim(), self.curve.genus() + i - 1)
    }

    fn check_involution_squares(&mut self) -> Result<(), Value> {
        let c = &self.curve;
        let n = c.dim();
        let m = c.c_star_integer();
        for r in 0..n {
            for col in 0..n {
                let acc: i64 = (0..n).map(|t| m[r][t] * m[t][col]).sum();
                let expected = i64::from(r == col);
                if acc != expected {
                    return Err(json!({
                        "curve": curve_json(c),
                        "entry": [r, col],
                        "got": acc,
                        "expected": expected,
                    }));
                }
            }
        }
        let m2 = c.c_star_mod2();
        let square = m2.mul_mat(&m2);
        let id = F2Matrix::identity(n);
        for r in 0..n {
            if square.row(r) != id.row(r) {
                return Err(json!({
                    "curve": curve_json(c),
                    "mod2_row": r,
                    "got": format!("{:?}", square.row(r)),
                }));
            }
        }
        Ok(())
    }

    fn check_involution_pairing(&mut self) -> Result<(), Value> {
        let c = &self.curve;
        let n = c.dim();
        let m2 = c.c_star_mod2();
        for i in 0..n {
            for j in 0..n {
                let ei = F2Vector::unit(n, i);
                let ej = F2Vector::unit(n, j);
                let before = c.pairing(&ei, &ej);
                let after = c.pairing(&m2.mul_vec(&ei), &m2.mul_vec(&ej));
                if before != after {
                    return Err(json!({
                        "curve": curve_json(c),
                        "pair": [i, j],
                        "before": before,
                        "after": after,
                    }));
                }
            }
        }
        Ok(())
    }

    fn check_fix_dimension(&mut self) -> Result<(), Value> {
        let c = &self.curve;
        let expected = c.genus() + c.components() - 1;
        let got = c.fix_dimension();
        if got != expected {
            return Err(json!({
                "curve": curve_json(c),
                "expected": expected,
                "got": got,
            }));
        }
        Ok(())
    }

    fn check_eigenspace_bases(&mut self) -> Result<(), Value> {
        let c = &self.curve;
        let n = c.dim();
        let plus = c.f_plus_basis();
        let minus = c.f_minus_basis();
        let fail = |reason: &str| {
            Err(json!({"curve": curve_json(c), "reason": reason}))
        };
        if plus.len() != c.genus() || minus.len() != c.genus() {
            return fail("basis sizes differ from the genus");
        }
        if gf2_rank(&F2Matrix::from_rows(plus.clone(), n)) != c.genus() {
            return fail("plus basis is linearly dependent");
        }
        let m2 = c.c_star_mod2();
        for x in &plus {
            if &m2.mul_vec(x) != x {
                return fail("plus basis vector not fixed by the involution");
            }
        }
        for x in &plus {
            for y in &plus {
                if c.pairing(x, y) != 0 {
                    return fail("plus basis is not isotropic");
                }
            }
        }
        for (x, phi) in plus.iter().zip(&minus) {
            if &c.poincare_dual(x) != phi {
                return fail("minus basis is not the dual of the plus basis");
            }
        }
        Ok(())
    }

    fn check_oval_classes(&mut self) -> Result<(), Value> {
        let c = &self.curve;
        let n = c.dim();
        let m2 = c.c_star_mod2();
        let plus = c.f_plus_basis();
        let span_rows: Vec<F2Vector> = (0..n)
            .map(|r| F2Vector::from_bits(plus.iter().map(|v| v.get(r)).collect::<Vec<u8>>()))
            .collect();
        let span_matrix = F2Matrix::from_rows(span_rows, plus.len());
        for i in 0..c.components() {
            let rc = c.real_component_class(i);
            if m2.mul_vec(&rc) != rc {
                return Err(json!({
                    "curve": curve_json(c),
                    "component": i,
                    "reason": "oval class not fixed by the involution",
                }));
            }
            if gf2_solve_affine(&span_matrix, &rc).is_err() {
                return Err(json!({
                    "curve": curve_json(c),
                    "component": i,
                    "reason": "oval class outside the span of the fixed basis",
                }));
            }
        }
        Ok(())
    }

    fn check_partition(&mut self) -> Result<(), Value> {
        let c = &self.curve;
        let g = c.genus();
        let k = c.components();
        let all: Vec<QuadraticForm> = enumerate_all_quadratic_forms(g)
            .expect("suite genus is within the bound")
            .collect();
        if all.len() != 1 << (2 * g) {
            return Err(json!({"curve": curve_json(c), "reason": "enumeration size"}));
        }
        let mut by_class: BTreeMap<Vec<u8>, Vec<QuadraticForm>> = BTreeMap::new();
        for q in &all {
            if is_real_spin(c, q) {
                let w = spin_w1(c, q).expect("real form has a class");
                by_class
                    .entry(w.bits().bits().to_vec())
                    .or_default()
                    .push(q.clone());
            }
        }
        let total: usize = by_class.values().map(Vec::len).sum();
        if total != 1 << (g + k - 1) {
            return Err(json!({
                "curve": curve_json(c),
                "reason": "total real form count",
                "expected": 1 << (g + k - 1),
                "got": total,
            }));
        }
        let admissible = self.admissible_classes();
        if admissible.len() != 1 << (k - 1) {
            return Err(json!({
                "curve": curve_json(c),
                "reason": "admissible class count",
                "got": admissible.len(),
            }));
        }
        if by_class.len() != admissible.len() {
            return Err(json!({
                "curve": curve_json(c),
                "reason": "realized classes differ from admissible classes",
            }));
        }
        for w in &admissible {
            let fast = enumerate_real_spin(c, w).expect("admissible class");
            let slow = by_class.get(w.bits().bits()).cloned().unwrap_or_default();
            if fast.len() != 1 << g || fast != slow {
                return Err(json!({
                    "curve": curve_json(c),
                    "w1": w1_json(w),
                    "reason": "orbit mismatch between solver and enumeration",
                    "solver_count": fast.len(),
                    "exhaustive_count": slow.len(),
                }));
            }
        }
        Ok(())
    }

    fn check_invariant_values(&mut self) -> Result<(), Value> {
        let c = &self.curve;
        let g = c.genus();
        let k = c.components();
        let real: Vec<QuadraticForm> = enumerate_all_quadratic_forms(g)
            .expect("suite genus is within the bound")
            .filter(|q| is_real_spin(c, q))
            .collect();
        for q in &real {
            if !c.separating() {
                for i in k..=g {
                    if q.eval(&self.a_class(i)) != 1 {
                        return Err(json!({
                            "curve": curve_json(c),
                            "form": form_json(q),
                            "class": format!("a{i}"),
                            "expected": 1,
                        }));
                    }
                }
            } else {
                let m = c.m();
                for i in k..k + m {
                    let a_pair = &self.a_class(i) + &self.a_class(i + m);
                    let b_pair = &self.b_class(i) + &self.b_class(i + m);
                    if q.eval(&a_pair) != 0 || q.eval(&b_pair) != 0 {
                        return Err(json!({
                            "curve": curve_json(c),
                            "form": form_json(q),
                            "class": format!("pair {i}"),
                            "expected": 0,
                        }));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_w1_parity(&mut self) -> Result<(), Value> {
        let c = &self.curve;
        let expected = ((c.genus() + 1) % 2) as u8;
        let real = enumerate_all_quadratic_forms(c.genus())
            .expect("suite genus is within the bound")
            .filter(|q| is_real_spin(c, q));
        for q in real {
            let w = spin_w1(c, &q).expect("real form has a class");
            if w.total_parity() != expected {
                return Err(json!({
                    "curve": curve_json(c),
                    "form": form_json(&q),
                    "w1": w1_json(&w),
                    "expected_parity": expected,
                }));
            }
        }
        Ok(())
    }

    fn check_arf_shift_well_defined(&mut self) -> Result<(), Value> {
        let c = &self.curve;
        for w in self.admissible_classes() {
            let orbit = enumerate_real_spin(c, &w).expect("admissible class");
            for name in generator_names(c) {
                let f = generator(*c, &name).expect("listed generator");
                let delta = arf_delta(&f, &w).expect("admissible class");
                for q in &orbit {
                    let shifted = act(&f, q).expect("orbit forms are real");
                    if shifted.arf() ^ q.arf() != delta {
                        return Err(json!({
                            "curve": curve_json(c),
                            "w1": w1_json(&w),
                            "automorphism": aut_json(&f),
                            "form": form_json(q),
                            "expected": delta,
                            "got": shifted.arf() ^ q.arf(),
                        }));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_arf_shift_additive(&mut self) -> Result<(), Value> {
        let c = self.curve;
        let admissible = self.admissible_classes();
        for _ in 0..30 {
            let x = self.random_aut();
            let y = self.random_aut();
            for w in &admissible {
                let lhs = arf_delta(&x.compose(&y), w).expect("admissible class");
                let rhs =
                    arf_delta(&x, w).expect("admissible class") ^ arf_delta(&y, w).expect("admissible class");
                if lhs != rhs {
                    return Err(json!({
                        "curve": curve_json(&c),
                        "w1": w1_json(w),
                        "x": aut_json(&x),
                        "y": aut_json(&y),
                        "product": lhs,
                        "sum": rhs,
                    }));
                }
            }
        }
        Ok(())
    }

    fn check_affine_offset(&mut self) -> Result<(), Value> {
        let c = self.curve;
        let admissible = self.admissible_classes();
        let mut classes: Vec<AutClass> = generator_names(&c)
            .iter()
            .map(|n| generator(c, n).expect("listed generator"))
            .collect();
        for _ in 0..10 {
            classes.push(self.random_aut());
        }
        for f in &classes {
            let expected = s_top(f);
            for w in &admissible {
                let value = beta0(f, w) ^ arf_delta(f, w).expect("admissible class");
                if value != expected {
                    return Err(json!({
                        "curve": curve_json(&c),
                        "automorphism": aut_json(f),
                        "w1": w1_json(w),
                        "s_top": expected,
                        "offset_at_w": value,
                    }));
                }
            }
        }
        Ok(())
    }

    fn check_s_top_table(&mut self) -> Result<(), Value> {
        let c = self.curve;
        let g = c.genus();
        let k = c.components();
        let mut expectations: Vec<(String, u8)> = Vec::new();
        for i in 0..k {
            expectations.push((format!("f{i}"), 0));
        }
        if !c.separating() {
            for i in k..=g {
                expectations.push((format!("f{i}"), 1));
            }
        } else {
            for i in k..k + c.m() {
                expectations.push((format!("f{i}"), 0));
                expectations.push((format!("g{i}"), 0));
            }
        }
        for (name, expected) in expectations {
            let f = generator(c, &name).expect("listed generator");
            let got = s_top(&f);
            if got != expected {
                return Err(json!({
                    "curve": curve_json(&c),
                    "generator": name,
                    "expected": expected,
                    "got": got,
                }));
            }
        }
        Ok(())
    }

    fn check_s_top_central(&mut self) -> Result<(), Value> {
        let c = self.curve;
        let expected = if c.separating() {
            0
        } else {
            ((c.genus() + 1 - c.components()) % 2) as u8
        };
        let got = s_top(&AutClass::minus_one(c));
        if got != expected {
            return Err(json!({
                "curve": curve_json(&c),
                "expected": expected,
                "got": got,
            }));
        }
        Ok(())
    }

    fn check_generator_product(&mut self) -> Result<(), Value> {
        let c = self.curve;
        let upper = if c.separating() {
            c.components() - 1
        } else {
            c.genus()
        };
        let mut product = AutClass::identity(c);
        let mut ind_sum = F2Vector::zero(c.dim());
        let mut cs_sum = F2Vector::zero(c.components());
        for i in 0..=upper {
            let f = generator(c, &format!("f{i}")).expect("listed generator");
            product = product.compose(&f);
            ind_sum += &f.ind2();
            cs_sum += &f.component_signs();
        }
        let minus = AutClass::minus_one(c);
        if product != minus {
            return Err(json!({
                "curve": curve_json(&c),
                "reason": "oval generator product is not the central class",
                "product": aut_json(&product),
            }));
        }
        if !ind_sum.is_zero() {
            return Err(json!({
                "curve": curve_json(&c),
                "reason": "index classes of the relation do not cancel",
            }));
        }
        if cs_sum != minus.component_signs() {
            return Err(json!({
                "curve": curve_json(&c),
                "reason": "component signs of the relation do not match the central class",
            }));
        }
        Ok(())
    }

    fn check_component_signs(&mut self) -> Result<(), Value> {
        let c = self.curve;
        let g = c.genus();
        let mut classes: Vec<AutClass> = generator_names(&c)
            .iter()
            .map(|n| generator(c, n).expect("listed generator"))
            .collect();
        for _ in 0..20 {
            classes.push(self.random_aut());
        }
        for f in &classes {
            let cs = f.component_signs();
            let ind = f.ind2();
            for i in 1..c.components() {
                let lhs = cs.get(i) ^ cs.get(0);
                let rhs = ind.get(g + i - 1);
                if lhs != rhs {
                    return Err(json!({
                        "curve": curve_json(&c),
                        "automorphism": aut_json(f),
                        "component": i,
                        "sign_difference": lhs,
                        "index_on_b": rhs,
                    }));
                }
            }
        }
        Ok(())
    }

    fn random_bundle(&mut self, rank: usize) -> RealBundle {
        let degree = self.rng.random_range(-5i64..6);
        let w1 = self.random_w1_with_parity(degree.rem_euclid(2) as u8);
        RealBundle::new(self.curve, rank, degree, w1).expect("parity arranged")
    }

    fn random_full_aut(&mut self, rank: usize) -> FullAutClass {
        let det_part = self.random_aut();
        let sl_part = if rank >= 2 {
            let entries: Vec<i64> = (0..self.curve.components())
                .map(|_| self.rng.random_range(-3i64..4))
                .collect();
            Some(SLClass::new(&self.curve, entries).expect("entry count equals oval count"))
        } else {
            None
        };
        FullAutClass::new(det_part, sl_part)
    }

    fn check_sign_homomorphism(&mut self) -> Result<(), Value> {
        let c = self.curve;
        for rank in 1..=3 {
            for _ in 0..30 {
                let bundle = self.random_bundle(rank);
                let x = self.random_full_aut(rank);
                let y = self.random_full_aut(rank);
                let product =
                    det_orientation_sign(&bundle, &x.compose(&y)).expect("shapes match");
                let separate = det_orientation_sign(&bundle, &x).expect("shapes match")
                    * det_orientation_sign(&bundle, &y).expect("shapes match");
                if product != separate {
                    return Err(json!({
                        "curve": curve_json(&c),
                        "bundle": {
                            "rank": bundle.rank(),
                            "degree": bundle.degree(),
                            "w1": w1_json(bundle.w1()),
                        },
                        "x": aut_json(&x.det_part),
                        "y": aut_json(&y.det_part),
                        "product_sign": product.value(),
                        "separate_sign": separate.value(),
                    }));
                }
            }
        }
        Ok(())
    }

    fn check_central_sign(&mut self) -> Result<(), Value> {
        let c = self.curve;
        for degree in -6i64..=6 {
            for w1 in RealW1::enumerate_with_parity(&c, degree.rem_euclid(2) as u8) {
                let bundle = RealBundle::new(c, 1, degree, w1).expect("parity arranged");
                let via_index = minus_id_sign(&bundle).expect("rank 1");
                let f = FullAutClass::new(AutClass::minus_one(c), None);
                let via_formula = det_orientation_sign(&bundle, &f).expect("rank 1");
                if via_index != via_formula {
                    return Err(json!({
                        "curve": curve_json(&c),
                        "bundle": {
                            "rank": 1,
                            "degree": degree,
                            "w1": w1_json(bundle.w1()),
                        },
                        "index_route": via_index.value(),
                        "formula_route": via_formula.value(),
                    }));
                }
            }
        }
        Ok(())
    }

    fn check_arf_invariance(&mut self) -> Result<(), Value> {
        let c = self.curve;
        let g = c.genus();
        let n = c.dim();
        let rounds = match g {
            0..=3 => 100,
            4 => 30,
            _ => 10,
        };
        let forms: Vec<QuadraticForm> = enumerate_all_quadratic_forms(g)
            .expect("suite genus is within the bound")
            .collect();
        for _ in 0..rounds {
            let s = random_symplectic_with(g, &mut self.rng);
            for i in 0..n {
                for j in 0..n {
                    let ei = F2Vector::unit(n, i);
                    let ej = F2Vector::unit(n, j);
                    if c.pairing(&s.mul_vec(&ei), &s.mul_vec(&ej)) != c.pairing(&ei, &ej) {
                        return Err(json!({
                            "curve": curve_json(&c),
                            "reason": "generated matrix is not symplectic",
                        }));
                    }
                }
            }
            for q in &forms {
                let recomputed = (0..g).fold(0u8, |acc, t| {
                    acc ^ (q.eval(&s.column(t)) & q.eval(&s.column(g + t)))
                });
                if recomputed != q.arf() {
                    return Err(json!({
                        "curve": curve_json(&c),
                        "form": form_json(q),
                        "arf": q.arf(),
                        "arf_in_new_basis": recomputed,
                    }));
                }
            }
        }
        Ok(())
    }
}
