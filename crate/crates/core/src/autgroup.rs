//! Homotopy classes of real automorphisms of a line bundle over the identity
//! of the base curve.
//!
//! The group is Z/2 x Z^g: a sign bit for the constant -1, and one integer
//! exponent per generator of the standard family. On non-separating curves
//! the generators are `f_1..f_g`; on separating curves they are
//! `f_1..f_{k+m-1}` followed by `g_k..g_{k+m-1}`. The remaining classical
//! generator `f_0` is not independent: it is folded in through the relation
//! expressing -1 as the product of the oval generators, which fixes its
//! coordinates uniquely.

use std::fmt;

use thiserror::Error;

use crate::curve::RealCurve;
use crate::f2::F2Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("unknown generator {name:?} for this topology")]
    UnknownGenerator { name: String },
    #[error(
        "exponent shape mismatch: expected {expected_f} f-exponents and {expected_g} g-exponents, \
         got {got_f} and {got_g}"
    )]
    ExponentShape {
        expected_f: usize,
        expected_g: usize,
        got_f: usize,
        got_g: usize,
    },
}

/// A homotopy class of real automorphisms, in canonical coordinates
/// `(-1)^sign * prod generator^exponent`. Equality of classes is literal
/// equality of coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutClass {
    curve: RealCurve,
    sign: u8,
    exponents: Vec<i64>,
}

impl AutClass {
    pub fn identity(curve: RealCurve) -> Self {
        AutClass {
            curve,
            sign: 0,
            exponents: vec![0; curve.genus()],
        }
    }

    pub fn minus_one(curve: RealCurve) -> Self {
        AutClass {
            curve,
            sign: 1,
            exponents: vec![0; curve.genus()],
        }
    }

    /// Number of f-generators: g on non-separating curves, k+m-1 on
    /// separating ones (the g-generators fill the remaining m slots).
    fn f_count(curve: &RealCurve) -> usize {
        if curve.separating() {
            curve.components() + curve.m() - 1
        } else {
            curve.genus()
        }
    }

    /// Build a class from a sign bit and the per-generator exponent lists.
    pub fn from_parts(
        curve: RealCurve,
        sign: u8,
        f_exponents: &[i64],
        g_exponents: &[i64],
    ) -> Result<Self, AutError> {
        let expected_f = Self::f_count(&curve);
        let expected_g = curve.genus() - expected_f;
        if f_exponents.len() != expected_f || g_exponents.len() != expected_g {
            return Err(AutError::ExponentShape {
                expected_f,
                expected_g,
                got_f: f_exponents.len(),
                got_g: g_exponents.len(),
            });
        }
        let mut exponents = Vec::with_capacity(curve.genus());
        exponents.extend_from_slice(f_exponents);
        exponents.extend_from_slice(g_exponents);
        Ok(AutClass {
            curve,
            sign: sign % 2,
            exponents,
        })
    }

    pub fn curve(&self) -> RealCurve {
        self.curve
    }

    pub fn sign(&self) -> u8 {
        self.sign
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn f_exponents(&self) -> &[i64] {
        &self.exponents[..Self::f_count(&self.curve)]
    }

    pub fn g_exponents(&self) -> &[i64] {
        &self.exponents[Self::f_count(&self.curve)..]
    }

    pub fn is_identity(&self) -> bool {
        self.sign == 0 && self.exponents.iter().all(|&e| e == 0)
    }

    pub fn compose(&self, other: &AutClass) -> AutClass {
        assert_eq!(
            self.curve, other.curve,
            "cannot compose classes over different curves"
        );
        AutClass {
            curve: self.curve,
            sign: self.sign ^ other.sign,
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn invert(&self) -> AutClass {
        AutClass {
            curve: self.curve,
            sign: self.sign,
            exponents: self.exponents.iter().map(|&e| -e).collect(),
        }
    }

    /// n-th power (the group is abelian, so this is coordinate scaling).
    pub fn pow(&self, n: i64) -> AutClass {
        AutClass {
            curve: self.curve,
            sign: ((i64::from(self.sign) * n).rem_euclid(2)) as u8,
            exponents: self.exponents.iter().map(|e| e * n).collect(),
        }
    }

    /// Mod-2 index covector of this class, a functional on H1 with values in
    /// F-. The constant -1 has index zero; each generator contributes the
    /// Poincare dual of its winding class.
    pub fn ind2(&self) -> F2Vector {
        let mut acc = F2Vector::zero(self.curve.dim());
        for (pos, &e) in self.exponents.iter().enumerate() {
            if e.rem_euclid(2) == 1 {
                acc += &generator_ind2(&self.curve, pos);
            }
        }
        acc
    }

    /// Per-oval sign bits: entry i is 1 exactly when the class takes negative
    /// values on oval i. Only the sign bit and the oval generators
    /// `f_1..f_{k-1}` can be negative anywhere on the real part.
    pub fn component_signs(&self) -> F2Vector {
        let k = self.curve.components();
        let mut bits = vec![self.sign; k];
        for (i, bit) in bits.iter_mut().enumerate().skip(1) {
            *bit ^= (self.exponents[i - 1].rem_euclid(2)) as u8;
        }
        F2Vector::from_bits(bits)
    }
}

impl fmt::Display for AutClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 1 {
            write!(f, "-")?;
        }
        let mut wrote = false;
        for (pos, &e) in self.exponents.iter().enumerate() {
            if e != 0 {
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}^{}", position_name(&self.curve, pos), e)?;
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

fn position_name(curve: &RealCurve, pos: usize) -> String {
    let f_count = AutClass::f_count(curve);
    if pos < f_count {
        format!("f{}", pos + 1)
    } else {
        format!("g{}", curve.components() + (pos - f_count))
    }
}

/// Index covector of the generator stored at an exponent position: the dual
/// of its winding class (`a_i` for oval and stable generators, conjugate-pair
/// sums on separating curves).
fn generator_ind2(curve: &RealCurve, pos: usize) -> F2Vector {
    let g = curve.genus();
    let k = curve.components();
    let n = curve.dim();
    let a = |i: usize| F2Vector::unit(n, i - 1);
    let b = |i: usize| F2Vector::unit(n, g + i - 1);
    let class = if curve.separating() {
        let h = curve.m();
        let f_count = k + h - 1;
        if pos < f_count {
            let i = pos + 1;
            if i < k {
                a(i)
            } else {
                &a(i) + &a(i + h)
            }
        } else {
            let i = k + (pos - f_count);
            &b(i) + &b(i + h)
        }
    } else {
        a(pos + 1)
    };
    curve.poincare_dual(&class)
}

/// The named generators: `f0`, `f1`, ..., the separating-only `g_k`, ...,
/// and `minus_one`. `f0` is expanded through the relation that the oval
/// generators multiply to -1.
pub fn generator(curve: RealCurve, name: &str) -> Result<AutClass, AutError> {
    let unknown = || AutError::UnknownGenerator {
        name: name.to_string(),
    };
    if name == "minus_one" {
        return Ok(AutClass::minus_one(curve));
    }
    let (kind, digits) = name.split_at(1);
    let index: usize = digits.parse().map_err(|_| unknown())?;
    let g = curve.genus();
    let k = curve.components();
    let f_count = AutClass::f_count(&curve);
    match kind {
        "f" if index == 0 => {
            // Non-separating: -1 = f_0 * f_1 * ... * f_g.
            // Separating:     -1 = f_0 * f_1 * ... * f_{k-1}.
            let mut exponents = vec![0i64; g];
            let upper = if curve.separating() { k - 1 } else { g };
            for e in exponents.iter_mut().take(upper) {
                *e = -1;
            }
            Ok(AutClass {
                curve,
                sign: 1,
                exponents,
            })
        }
        "f" if (1..=f_count).contains(&index) => {
            let mut exponents = vec![0i64; g];
            exponents[index - 1] = 1;
            Ok(AutClass {
                curve,
                sign: 0,
                exponents,
            })
        }
        "g" if curve.separating() && (k..k + curve.m()).contains(&index) => {
            let mut exponents = vec![0i64; g];
            exponents[f_count + (index - k)] = 1;
            Ok(AutClass {
                curve,
                sign: 0,
                exponents,
            })
        }
        _ => Err(unknown()),
    }
}

/// All generator names valid for the topology, `f0` first, `minus_one` last.
pub fn generator_names(curve: &RealCurve) -> Vec<String> {
    let mut names = Vec::new();
    let f_count = AutClass::f_count(curve);
    let upper = if curve.separating() {
        f_count
    } else {
        curve.genus()
    };
    for i in 0..=upper {
        names.push(format!("f{i}"));
    }
    if curve.separating() {
        for i in curve.components()..curve.components() + curve.m() {
            names.push(format!("g{i}"));
        }
    }
    names.push("minus_one".to_string());
    names
}
