//! Orientation signs of automorphism actions on determinant lines.
//!
//! Everything reduces to bits: β₀ sums the component signs over the
//! orientable ovals of a bundle, s_top is the affine offset between β₀ and
//! the Arf shift, s_N adds the bundle's own orientability data, and the Pin
//! permutation sign counts odd SL entries. The exported sign of an
//! automorphism class on the determinant line is a product of these, and the
//! Stiefel-Whitney class of the determinant bundle over a real Picard
//! component is the Arf-shift functional itself, reported on the F⁻ basis.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

use crate::autgroup::AutClass;
use crate::curve::{RealCurve, RealW1};
use crate::f2::F2Vector;
use crate::spin::{arf_delta, find_real_spin};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SignsError {
    #[error("bundle rank must be at least 1")]
    ZeroRank,
    #[error("operation requires a rank-1 bundle, got rank {got}")]
    RankOneRequired { got: usize },
    #[error("operation requires rank at least 2, got rank {got}")]
    RankAtLeastTwoRequired { got: usize },
    #[error("w1 has {got} bits but the curve has {expected} real components")]
    W1Length { expected: usize, got: usize },
    #[error("total w1 parity must equal the degree mod 2")]
    DegreeParity,
    #[error("SL class has {got} entries but the curve has {expected} real components")]
    SlLength { expected: usize, got: usize },
    #[error("an SL part must be present exactly when the rank is at least 2")]
    SlPartShape,
    #[error("automorphism and bundle live over different curves")]
    CurveMismatch,
    #[error("this degree parity requires a basepoint component")]
    MissingBasepoint,
    #[error("basepoint component {index} out of range for {components} components")]
    ComponentOutOfRange { index: usize, components: usize },
}

/// A multiplicative sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// (-1)^bit.
    pub fn from_bit(bit: u8) -> Sign {
        if bit.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A real bundle class over a real curve, determined by rank, degree, and
/// the per-oval orientability bits of its real part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealBundle {
    curve: RealCurve,
    rank: usize,
    degree: i64,
    w1: RealW1,
}

impl RealBundle {
    pub fn new(
        curve: RealCurve,
        rank: usize,
        degree: i64,
        w1: RealW1,
    ) -> Result<Self, SignsError> {
        if rank == 0 {
            return Err(SignsError::ZeroRank);
        }
        if w1.len() != curve.components() {
            return Err(SignsError::W1Length {
                expected: curve.components(),
                got: w1.len(),
            });
        }
        if w1.total_parity() != degree.rem_euclid(2) as u8 {
            return Err(SignsError::DegreeParity);
        }
        Ok(RealBundle {
            curve,
            rank,
            degree,
            w1,
        })
    }

    pub fn curve(&self) -> RealCurve {
        self.curve
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn w1(&self) -> &RealW1 {
        &self.w1
    }

    /// The rank-1 bundle with the same degree and w1. Higher-rank signs
    /// factor through it.
    pub fn determinant(&self) -> RealBundle {
        RealBundle {
            curve: self.curve,
            rank: 1,
            degree: self.degree,
            w1: self.w1.clone(),
        }
    }
}

/// Per-component class of an SL-automorphism of the real part, one integer
/// per oval. Only the parities can affect a sign; entries over orientable
/// components of a rank-2 bundle genuinely live in Z, everywhere else only
/// mod 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SLClass {
    entries: Vec<i64>,
}

impl SLClass {
    pub fn new(curve: &RealCurve, entries: Vec<i64>) -> Result<Self, SignsError> {
        if entries.len() != curve.components() {
            return Err(SignsError::SlLength {
                expected: curve.components(),
                got: entries.len(),
            });
        }
        Ok(SLClass { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Sum of the entries mod 2: the parity of the Pin permutation.
    pub fn parity(&self) -> u8 {
        self.entries
            .iter()
            .fold(0u8, |acc, e| acc ^ e.rem_euclid(2) as u8)
    }

    /// Reduce every entry that only carries mod-2 information to {0,1}:
    /// all of them when rank >= 3, and those over non-orientable components
    /// when rank = 2.
    pub fn canonical(&self, bundle: &RealBundle) -> Result<SLClass, SignsError> {
        if bundle.rank() < 2 {
            return Err(SignsError::RankAtLeastTwoRequired { got: bundle.rank() });
        }
        if self.entries.len() != bundle.curve().components() {
            return Err(SignsError::SlLength {
                expected: bundle.curve().components(),
                got: self.entries.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                if bundle.rank() >= 3 || bundle.w1().get(i) == 1 {
                    e.rem_euclid(2)
                } else {
                    e
                }
            })
            .collect();
        Ok(SLClass { entries })
    }

    fn sum_entrywise(&self, other: &SLClass) -> SLClass {
        assert_eq!(self.entries.len(), other.entries.len(), "SL length mismatch");
        SLClass {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// An automorphism class of a real bundle: the determinant-level class plus,
/// for rank at least 2, the SL part of the splitting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullAutClass {
    pub det_part: AutClass,
    pub sl_part: Option<SLClass>,
}

impl FullAutClass {
    pub fn new(det_part: AutClass, sl_part: Option<SLClass>) -> Self {
        FullAutClass { det_part, sl_part }
    }

    /// Group law: determinant parts compose, SL parts add. Both classes must
    /// have the same shape.
    pub fn compose(&self, other: &FullAutClass) -> FullAutClass {
        let det_part = self.det_part.compose(&other.det_part);
        let sl_part = match (&self.sl_part, &other.sl_part) {
            (None, None) => None,
            (Some(a), Some(b)) => Some(a.sum_entrywise(b)),
            _ => panic!("cannot compose classes with and without an SL part"),
        };
        FullAutClass { det_part, sl_part }
    }
}

/// Sum of the component signs of f over the components where w vanishes.
pub fn beta0(f: &AutClass, w: &RealW1) -> u8 {
    let cs = f.component_signs();
    assert_eq!(
        w.len(),
        cs.len(),
        "w1 length does not match the curve's component count"
    );
    (0..w.len())
        .filter(|&i| w.get(i) == 0)
        .fold(0u8, |acc, i| acc ^ cs.get(i))
}

/// A fixed admissible orientability class: all ovals non-orientable except
/// that component 0 absorbs the parity constraint (total = g+1 mod 2).
fn w_star(curve: &RealCurve) -> RealW1 {
    let mut bits = vec![1u8; curve.components()];
    bits[0] = ((curve.genus() + curve.components()) % 2) as u8;
    RealW1::from_bits(curve, &bits).expect("bit count equals oval count")
}

/// Topological sign exponent of an automorphism class: β₀ + Arf shift at any
/// admissible class. The choice of class does not matter; the fixed one keeps
/// the computation deterministic.
pub fn s_top(f: &AutClass) -> u8 {
    let w = w_star(&f.curve());
    beta0(f, &w) ^ arf_delta(f, &w).expect("the fixed class has admissible parity")
}

/// Sign exponent of f on the determinant line of a rank-1 bundle.
pub fn s_n(bundle: &RealBundle, f: &AutClass) -> Result<u8, SignsError> {
    if bundle.rank() != 1 {
        return Err(SignsError::RankOneRequired { got: bundle.rank() });
    }
    if bundle.curve() != f.curve() {
        return Err(SignsError::CurveMismatch);
    }
    Ok(s_top(f) ^ beta0(f, bundle.w1()))
}

/// Sign of the permutation an SL class induces on the Pin structures of the
/// ovals: each component with an odd entry contributes a transposition.
pub fn eps_pin(bundle: &RealBundle, sl: &SLClass) -> Result<Sign, SignsError> {
    if bundle.rank() < 2 {
        return Err(SignsError::RankAtLeastTwoRequired { got: bundle.rank() });
    }
    if sl.entries().len() != bundle.curve().components() {
        return Err(SignsError::SlLength {
            expected: bundle.curve().components(),
            got: sl.entries().len(),
        });
    }
    Ok(Sign::from_bit(sl.parity()))
}

/// Sign of the action of a full automorphism class on the orientations of
/// the determinant line.
pub fn det_orientation_sign(bundle: &RealBundle, f: &FullAutClass) -> Result<Sign, SignsError> {
    if bundle.curve() != f.det_part.curve() {
        return Err(SignsError::CurveMismatch);
    }
    if bundle.rank() == 1 {
        if f.sl_part.is_some() {
            return Err(SignsError::SlPartShape);
        }
        return Ok(Sign::from_bit(s_n(bundle, &f.det_part)?));
    }
    let sl = f.sl_part.as_ref().ok_or(SignsError::SlPartShape)?;
    let pin = eps_pin(bundle, sl)?;
    let det = bundle.determinant();
    Ok(pin * Sign::from_bit(s_n(&det, &f.det_part)?))
}

/// Sign of the central class -1 on a rank-1 bundle, through the index
/// parity: (-1)^(deg + 1 - g). An independent route from the s_N formula;
/// the oracle checks the two agree.
pub fn minus_id_sign(bundle: &RealBundle) -> Result<Sign, SignsError> {
    if bundle.rank() != 1 {
        return Err(SignsError::RankOneRequired { got: bundle.rank() });
    }
    let exponent = bundle.degree() + 1 - bundle.curve().genus() as i64;
    Ok(Sign::from_bit(exponent.rem_euclid(2) as u8))
}

/// Orientability of the determinant line over a loop of real bundles with
/// the given SL clutching class: orientable exactly when the clutching swaps
/// Pin structures on an even number of components.
pub fn loop_orientability(bundle: &RealBundle, clutching: &SLClass) -> Result<bool, SignsError> {
    Ok(eps_pin(bundle, clutching)? == Sign::Plus)
}

/// Which of the two parity regimes a Picard computation falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PicardCase {
    /// Degree matches g-1 mod 2: the class w itself labels the component.
    Unpointed,
    /// Degree matches g mod 2: a basepoint oval is consumed and the class
    /// is flipped there.
    Pointed,
}

/// First Stiefel-Whitney class of the determinant bundle over a real Picard
/// component, as a linear functional on F⁻ reported by its values on the g
/// basis generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicardW1 {
    pub case: PicardCase,
    pub w_used: RealW1,
    pub functional: F2Vector,
}

impl PicardW1 {
    /// Value of the functional on a loop whose monodromy is the class of f.
    pub fn eval(&self, f: &AutClass) -> u8 {
        arf_delta(f, &self.w_used).expect("stored class has admissible parity")
    }
}

/// w1 of the determinant bundle over the degree-d real Picard component
/// labeled by w. When d misses the unpointed parity, a basepoint component
/// is required and the class is flipped there; the flip is forced because
/// only one parity of classes labels real Spin structures.
pub fn picard_w1(
    curve: &RealCurve,
    d: i64,
    w: &RealW1,
    basepoint: Option<usize>,
) -> Result<PicardW1, SignsError> {
    if w.len() != curve.components() {
        return Err(SignsError::W1Length {
            expected: curve.components(),
            got: w.len(),
        });
    }
    if w.total_parity() != d.rem_euclid(2) as u8 {
        return Err(SignsError::DegreeParity);
    }
    let unpointed = d.rem_euclid(2) as usize == (curve.genus() + 1) % 2;
    let (case, w_used) = if unpointed {
        // A basepoint, if supplied, is not consulted in this regime.
        (PicardCase::Unpointed, w.clone())
    } else {
        let p = basepoint.ok_or(SignsError::MissingBasepoint)?;
        if p >= curve.components() {
            return Err(SignsError::ComponentOutOfRange {
                index: p,
                components: curve.components(),
            });
        }
        (PicardCase::Pointed, w.flip(p))
    };
    let q = find_real_spin(curve, &w_used)
        .expect("both regimes produce a class of admissible parity");
    // The F⁻ generators are the duals of the F₊ generators, so the Arf-shift
    // functional evaluates on them through the F₊ classes directly; it is
    // linear there because F₊ is isotropic.
    let values: Vec<u8> = curve
        .f_plus_basis()
        .iter()
        .map(|x| q.eval(x))
        .collect();
    Ok(PicardW1 {
        case,
        w_used,
        functional: F2Vector::from_bits(values),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::{generator, generator_names, AutClass};
    use crate::curve::all_topologies;
    use crate::f2::{gf2_solve_affine, F2Matrix};
    use proptest::prelude::*;

    fn curve(g: usize, k: usize, sep: bool) -> RealCurve {
        RealCurve::new(g, k, sep).unwrap()
    }

    fn w(c: &RealCurve, bits: &[u8]) -> RealW1 {
        RealW1::from_bits(c, bits).unwrap()
    }

    fn bundle(c: RealCurve, rank: usize, degree: i64, bits: &[u8]) -> RealBundle {
        RealBundle::new(c, rank, degree, w(&c, bits)).unwrap()
    }

    fn rank1(det_part: AutClass) -> FullAutClass {
        FullAutClass::new(det_part, None)
    }

    #[test]
    fn sign_arithmetic() {
        assert_eq!(Sign::from_bit(0), Sign::Plus);
        assert_eq!(Sign::from_bit(1), Sign::Minus);
        assert_eq!(Sign::from_bit(2), Sign::Plus);
        assert_eq!(Sign::Plus.value(), 1);
        assert_eq!(Sign::Minus.value(), -1);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Minus * Sign::Plus, Sign::Minus);
        assert_eq!(Sign::Minus.to_string(), "-1");
    }

    #[test]
    fn bundle_validation() {
        let c = curve(1, 1, false);
        assert!(RealBundle::new(c, 1, 0, w(&c, &[0])).is_ok());
        assert_eq!(
            RealBundle::new(c, 0, 0, w(&c, &[0])),
            Err(SignsError::ZeroRank)
        );
        assert_eq!(
            RealBundle::new(c, 1, 1, w(&c, &[0])),
            Err(SignsError::DegreeParity)
        );
        assert!(RealBundle::new(c, 1, -3, w(&c, &[1])).is_ok());
        let c2 = curve(2, 2, false);
        assert_eq!(
            RealBundle::new(c2, 1, 0, w(&c, &[0])),
            Err(SignsError::W1Length {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn beta0_examples() {
        let c = curve(4, 3, true);
        let id = AutClass::identity(c);
        let minus = AutClass::minus_one(c);
        let f1 = generator(c, "f1").unwrap();
        for bits in [[0, 0, 0], [0, 1, 0], [1, 1, 0], [1, 1, 1]] {
            let w1 = w(&c, &bits);
            assert_eq!(beta0(&id, &w1), 0);
            let zeros = bits.iter().filter(|&&b| b == 0).count() as u8;
            assert_eq!(beta0(&minus, &w1), zeros % 2);
            assert_eq!(beta0(&f1, &w1), 1 ^ bits[1]);
        }
    }

    #[test]
    fn s_top_generator_values() {
        let c = curve(3, 2, false);
        assert_eq!(s_top(&generator(c, "f0").unwrap()), 0);
        assert_eq!(s_top(&generator(c, "f1").unwrap()), 0);
        assert_eq!(s_top(&generator(c, "f2").unwrap()), 1);
        assert_eq!(s_top(&generator(c, "f3").unwrap()), 1);
        let c = curve(3, 2, true);
        for name in ["f0", "f1", "f2", "g2"] {
            assert_eq!(s_top(&generator(c, name).unwrap()), 0, "{name}");
        }
    }

    #[test]
    fn s_top_of_minus_one() {
        for c in all_topologies(5) {
            let expected = if c.separating() {
                0
            } else {
                ((c.genus() + 1 - c.components()) % 2) as u8
            };
            assert_eq!(s_top(&AutClass::minus_one(c)), expected, "{c:?}");
        }
    }

    #[test]
    fn s_top_vanishes_on_separating_curves() {
        for c in all_topologies(5).into_iter().filter(|c| c.separating()) {
            for name in generator_names(&c) {
                assert_eq!(s_top(&generator(c, &name).unwrap()), 0, "{c:?} {name}");
            }
        }
    }

    #[test]
    fn s_n_examples() {
        let c = curve(1, 1, false);
        let b = bundle(c, 1, 0, &[0]);
        assert_eq!(s_n(&b, &AutClass::identity(c)).unwrap(), 0);
        assert_eq!(s_n(&b, &generator(c, "f1").unwrap()).unwrap(), 1);
        let b2 = bundle(c, 2, 0, &[0]);
        assert_eq!(
            s_n(&b2, &AutClass::identity(c)),
            Err(SignsError::RankOneRequired { got: 2 })
        );
        let other = curve(2, 1, false);
        assert_eq!(
            s_n(&b, &AutClass::identity(other)),
            Err(SignsError::CurveMismatch)
        );
    }

    #[test]
    fn s_n_of_minus_one_is_degree_plus_one_plus_genus() {
        for c in all_topologies(4) {
            for deg in -5i64..=5 {
                for w1 in RealW1::enumerate_with_parity(&c, deg.rem_euclid(2) as u8) {
                    let b = RealBundle::new(c, 1, deg, w1).unwrap();
                    let expected = ((deg + 1 + c.genus() as i64).rem_euclid(2)) as u8;
                    assert_eq!(s_n(&b, &AutClass::minus_one(c)).unwrap(), expected, "{c:?} deg {deg}");
                }
            }
        }
    }

    #[test]
    fn eps_pin_counts_odd_entries() {
        let c = curve(1, 2, true);
        let b = bundle(c, 2, 1, &[1, 0]);
        let zero = SLClass::new(&c, vec![0, 0]).unwrap();
        assert_eq!(eps_pin(&b, &zero).unwrap(), Sign::Plus);
        let odd_multiple = SLClass::new(&c, vec![3, 0]).unwrap();
        assert_eq!(eps_pin(&b, &odd_multiple).unwrap(), Sign::Minus);
        let res_minus_id = SLClass::new(&c, vec![1, 0]).unwrap();
        assert_eq!(eps_pin(&b, &res_minus_id).unwrap(), Sign::Minus);
        let two = SLClass::new(&c, vec![1, 1]).unwrap();
        assert_eq!(eps_pin(&b, &two).unwrap(), Sign::Plus);
        let b1 = bundle(c, 1, 1, &[1, 0]);
        assert_eq!(
            eps_pin(&b1, &zero),
            Err(SignsError::RankAtLeastTwoRequired { got: 1 })
        );
    }

    #[test]
    fn sl_canonical_form() {
        let c = curve(1, 2, true);
        let sl = SLClass::new(&c, vec![4, -3]).unwrap();
        let b2 = bundle(c, 2, 1, &[0, 1]);
        // Rank 2: the orientable component keeps 4, the other reduces to 1.
        assert_eq!(sl.canonical(&b2).unwrap().entries(), &[4, 1]);
        let b3 = bundle(c, 3, 1, &[0, 1]);
        assert_eq!(sl.canonical(&b3).unwrap().entries(), &[0, 1]);
        assert_eq!(sl.parity(), 1);
        assert_eq!(sl.canonical(&b2).unwrap().parity(), 1);
    }

    #[test]
    fn det_sign_examples() {
        let sphere = curve(0, 1, true);
        let b = bundle(sphere, 1, 0, &[0]);
        assert_eq!(
            det_orientation_sign(&b, &rank1(AutClass::identity(sphere))).unwrap(),
            Sign::Plus
        );
        assert_eq!(
            det_orientation_sign(&b, &rank1(AutClass::minus_one(sphere))).unwrap(),
            Sign::Minus
        );

        let torus = curve(1, 1, false);
        let b = bundle(torus, 1, 0, &[0]);
        assert_eq!(
            det_orientation_sign(&b, &rank1(generator(torus, "f1").unwrap())).unwrap(),
            Sign::Minus
        );
    }

    #[test]
    fn det_sign_shape_errors() {
        let c = curve(1, 2, true);
        let b1 = bundle(c, 1, 0, &[0, 0]);
        let b2 = bundle(c, 2, 0, &[0, 0]);
        let sl = SLClass::new(&c, vec![0, 0]).unwrap();
        let with_sl = FullAutClass::new(AutClass::identity(c), Some(sl));
        let without = rank1(AutClass::identity(c));
        assert_eq!(
            det_orientation_sign(&b1, &with_sl),
            Err(SignsError::SlPartShape)
        );
        assert_eq!(
            det_orientation_sign(&b2, &without),
            Err(SignsError::SlPartShape)
        );
        assert_eq!(det_orientation_sign(&b2, &with_sl).unwrap(), Sign::Plus);
    }

    #[test]
    fn det_sign_rank2_swaps() {
        // Determinant-1 classes: the sign is the Pin permutation parity.
        let c = curve(2, 2, false);
        let b = bundle(c, 2, 0, &[0, 0]);
        for entries in [vec![1, 0], vec![0, 1]] {
            let f = FullAutClass::new(
                AutClass::identity(c),
                Some(SLClass::new(&c, entries).unwrap()),
            );
            assert_eq!(det_orientation_sign(&b, &f).unwrap(), Sign::Minus);
        }
        let f = FullAutClass::new(
            AutClass::identity(c),
            Some(SLClass::new(&c, vec![1, 1]).unwrap()),
        );
        assert_eq!(det_orientation_sign(&b, &f).unwrap(), Sign::Plus);
    }

    #[test]
    fn minus_id_examples_and_cross_check() {
        assert_eq!(
            minus_id_sign(&bundle(curve(1, 1, false), 1, 0, &[0])).unwrap(),
            Sign::Plus
        );
        assert_eq!(
            minus_id_sign(&bundle(curve(0, 1, true), 1, 0, &[0])).unwrap(),
            Sign::Minus
        );
        assert_eq!(
            minus_id_sign(&bundle(curve(1, 1, false), 1, 1, &[1])).unwrap(),
            Sign::Minus
        );
        for c in all_topologies(4) {
            for deg in -6i64..=6 {
                for w1 in RealW1::enumerate_with_parity(&c, deg.rem_euclid(2) as u8) {
                    let b = RealBundle::new(c, 1, deg, w1).unwrap();
                    let via_index = minus_id_sign(&b).unwrap();
                    let via_s_n =
                        det_orientation_sign(&b, &rank1(AutClass::minus_one(c))).unwrap();
                    assert_eq!(via_index, via_s_n, "{c:?} deg {deg}");
                }
            }
        }
    }

    #[test]
    fn loop_orientability_flips_per_swap() {
        let c = curve(1, 2, true);
        let b = bundle(c, 2, 0, &[0, 0]);
        let mk = |e: Vec<i64>| SLClass::new(&c, e).unwrap();
        assert!(loop_orientability(&b, &mk(vec![0, 0])).unwrap());
        assert!(!loop_orientability(&b, &mk(vec![1, 0])).unwrap());
        assert!(loop_orientability(&b, &mk(vec![1, 1])).unwrap());
        assert_eq!(
            loop_orientability(&bundle(c, 1, 0, &[0, 0]), &mk(vec![0, 0])),
            Err(SignsError::RankAtLeastTwoRequired { got: 1 })
        );
    }

    #[test]
    fn positive_on_real_spin_preserving_gives_plus() {
        // Separating curves: component signs 0 forces Arf shift 0 and sign +1.
        for c in all_topologies(4).into_iter().filter(|c| c.separating()) {
            let g = c.genus();
            let fc = g - c.m();
            for deg in [g as i64 + 1, g as i64 - 1] {
                for w1 in RealW1::enumerate_with_parity(&c, deg.rem_euclid(2) as u8) {
                    let b = RealBundle::new(c, 1, deg, w1.clone()).unwrap();
                    // Even exponents on the oval generators, anything beyond.
                    let mut fe = vec![2i64; fc];
                    for (i, e) in fe.iter_mut().enumerate().skip(c.components() - 1) {
                        *e = 1 + i as i64;
                    }
                    let ge = vec![1i64; c.m()];
                    let f = AutClass::from_parts(c, 0, &fe, &ge).unwrap();
                    assert!(f.component_signs().is_zero());
                    assert_eq!(arf_delta(&f, b.w1()).unwrap(), 0);
                    assert_eq!(
                        det_orientation_sign(&b, &rank1(f)).unwrap(),
                        Sign::Plus,
                        "{c:?} deg {deg} w {w1:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn degree_parity_links_sign_to_arf_shift() {
        // deg = g+1 mod 2: the rank-1 sign exponent is exactly the Arf shift.
        for c in all_topologies(3) {
            let deg = c.genus() as i64 + 1;
            for w1 in RealW1::enumerate_with_parity(&c, deg.rem_euclid(2) as u8) {
                let b = RealBundle::new(c, 1, deg, w1.clone()).unwrap();
                for name in generator_names(&c) {
                    let f = generator(c, &name).unwrap();
                    assert_eq!(
                        s_n(&b, &f).unwrap(),
                        arf_delta(&f, &w1).unwrap(),
                        "{c:?} {name}"
                    );
                }
            }
        }
    }

    #[test]
    fn picard_genus_one_table() {
        let sep = curve(1, 2, true);
        let even_00 = picard_w1(&sep, 0, &w(&sep, &[0, 0]), None).unwrap();
        assert_eq!(even_00.case, PicardCase::Unpointed);
        assert_eq!(even_00.functional.bits(), &[1]);
        let even_11 = picard_w1(&sep, 2, &w(&sep, &[1, 1]), None).unwrap();
        assert_eq!(even_11.functional.bits(), &[0]);

        // Odd degree: basepoint on the component where w = 1 flips it to the
        // all-zero class, which is non-orientable.
        let odd_10 = picard_w1(&sep, 1, &w(&sep, &[1, 0]), Some(0)).unwrap();
        assert_eq!(odd_10.case, PicardCase::Pointed);
        assert_eq!(odd_10.w_used, w(&sep, &[0, 0]));
        assert_eq!(odd_10.functional.bits(), &[1]);
        let odd_01 = picard_w1(&sep, 1, &w(&sep, &[0, 1]), Some(0)).unwrap();
        assert_eq!(odd_01.w_used, w(&sep, &[1, 1]));
        assert_eq!(odd_01.functional.bits(), &[0]);

        let nonsep = curve(1, 1, false);
        let even = picard_w1(&nonsep, 0, &w(&nonsep, &[0]), None).unwrap();
        assert_eq!(even.functional.bits(), &[1]);
        let odd = picard_w1(&nonsep, 1, &w(&nonsep, &[1]), Some(0)).unwrap();
        assert_eq!(odd.w_used, w(&nonsep, &[0]));
        assert_eq!(odd.functional.bits(), &[1]);
    }

    #[test]
    fn picard_errors() {
        let c = curve(1, 2, true);
        assert_eq!(
            picard_w1(&c, 1, &w(&c, &[0, 0]), None),
            Err(SignsError::DegreeParity)
        );
        assert_eq!(
            picard_w1(&c, 1, &w(&c, &[1, 0]), None),
            Err(SignsError::MissingBasepoint)
        );
        assert_eq!(
            picard_w1(&c, 1, &w(&c, &[1, 0]), Some(2)),
            Err(SignsError::ComponentOutOfRange {
                index: 2,
                components: 2
            })
        );
        // Unpointed regime: a stray basepoint is ignored.
        assert!(picard_w1(&c, 0, &w(&c, &[0, 0]), Some(1)).is_ok());
    }

    #[test]
    fn picard_functional_agrees_with_arf_shift() {
        // Expanding ind2(f) over the F⁻ basis and pairing with the reported
        // values reproduces the Arf shift of f.
        for c in all_topologies(3) {
            let g = c.genus();
            let d = g as i64 + 1;
            for w1 in RealW1::enumerate_with_parity(&c, d.rem_euclid(2) as u8) {
                let out = picard_w1(&c, d, &w1, None).unwrap();
                let cols = c.f_minus_basis();
                let mut rows = Vec::new();
                for r in 0..c.dim() {
                    rows.push(F2Vector::from_bits(
                        cols.iter().map(|v| v.get(r)).collect::<Vec<u8>>(),
                    ));
                }
                let basis_matrix = F2Matrix::from_rows(rows, g.max(cols.len()));
                for name in generator_names(&c) {
                    let f = generator(c, &name).unwrap();
                    let coords = gf2_solve_affine(&basis_matrix, &f.ind2())
                        .expect("index classes lie in the span of F-")
                        .particular;
                    let paired = coords.dot(&out.functional);
                    assert_eq!(paired, arf_delta(&f, &w1).unwrap(), "{c:?} {name}");
                    assert_eq!(out.eval(&f), paired, "{c:?} {name}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn det_sign_is_a_homomorphism(
            which in 0usize..6,
            rank in 1usize..4,
            wmask in 0u8..8,
            deg_shift in -3i64..4,
            sx in 0u8..2,
            sy in 0u8..2,
            ex in proptest::collection::vec(-3i64..4, 4),
            ey in proptest::collection::vec(-3i64..4, 4),
            slx in proptest::collection::vec(-3i64..4, 3),
            sly in proptest::collection::vec(-3i64..4, 3),
        ) {
            let cs = [
                curve(1, 1, false), curve(2, 1, false), curve(3, 2, false),
                curve(1, 2, true), curve(3, 2, true), curve(4, 3, true),
            ];
            let c = cs[which];
            let g = c.genus();
            let k = c.components();
            let bits: Vec<u8> = (0..k).map(|i| (wmask >> i) & 1).collect();
            let parity: i64 = bits.iter().map(|&b| b as i64).sum::<i64>() % 2;
            let b = RealBundle::new(c, rank, parity + 2 * deg_shift, RealW1::from_bits(&c, &bits).unwrap()).unwrap();
            let gc = if c.separating() { c.m() } else { 0 };
            let fc = g - gc;
            let fx = AutClass::from_parts(c, sx, &ex[..fc], &ey[..gc]).unwrap();
            let fy = AutClass::from_parts(c, sy, &ey[..fc], &ex[..gc]).unwrap();
            let (px, py) = if rank >= 2 {
                (
                    Some(SLClass::new(&c, slx[..k].to_vec()).unwrap()),
                    Some(SLClass::new(&c, sly[..k].to_vec()).unwrap()),
                )
            } else {
                (None, None)
            };
            let x = FullAutClass::new(fx, px);
            let y = FullAutClass::new(fy, py);
            let product = det_orientation_sign(&b, &x.compose(&y)).unwrap();
            let separate = det_orientation_sign(&b, &x).unwrap()
                * det_orientation_sign(&b, &y).unwrap();
            prop_assert_eq!(product, separate);
        }
    }
}
