//! Real Spin structures as quadratic refinements of the mod-2 intersection
//! form.
//!
//! A quadratic form is stored by its values on the symplectic basis; values
//! everywhere else are forced by the polarization identity
//! `q(x+y) = q(x) + q(y) + x•y`. A form is a real Spin structure when it is
//! invariant under the involution, which is a linear condition on the basis
//! values. For a fixed per-oval orientability class w, the real structures
//! with that class form one orbit of the translation action of F-, of size
//! 2^g; automorphisms act through their mod-2 index, and the Arf invariant
//! shifts by an amount that depends only on the class of the automorphism.

use thiserror::Error;

use crate::autgroup::AutClass;
use crate::curve::{RealCurve, RealW1};
use crate::f2::{gf2_solve_affine, F2Matrix, F2Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SpinError {
    #[error("w1 total parity must equal g + 1 mod 2 for a real Spin class")]
    BadW1Parity,
    #[error("the quadratic form is not a real Spin structure on this curve")]
    NotRealSpin,
}

/// A quadratic refinement of the mod-2 intersection form, stored as its
/// values `q(a_1)..q(a_g), q(b_1)..q(b_g)` on the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticForm {
    basis_values: F2Vector,
}

impl QuadraticForm {
    pub fn from_basis_values(curve: &RealCurve, basis_values: F2Vector) -> Self {
        assert_eq!(
            basis_values.len(),
            curve.dim(),
            "a quadratic form on genus {} needs {} basis values",
            curve.genus(),
            curve.dim()
        );
        QuadraticForm { basis_values }
    }

    pub(crate) fn from_raw(basis_values: F2Vector) -> Self {
        QuadraticForm { basis_values }
    }

    pub fn basis_values(&self) -> &F2Vector {
        &self.basis_values
    }

    /// Values on the a-block of the basis.
    pub fn a_values(&self) -> &[u8] {
        &self.basis_values.bits()[..self.basis_values.len() / 2]
    }

    /// Values on the b-block of the basis.
    pub fn b_values(&self) -> &[u8] {
        &self.basis_values.bits()[self.basis_values.len() / 2..]
    }

    /// Evaluate on an arbitrary class by polarization: the basis values plus
    /// one cross term per handle whose a- and b-coordinates are both present.
    pub fn eval(&self, x: &F2Vector) -> u8 {
        let n = self.basis_values.len();
        assert_eq!(x.len(), n, "class has wrong ambient dimension");
        let g = n / 2;
        let mut acc = self.basis_values.dot(x);
        for t in 0..g {
            acc ^= x.get(t) & x.get(g + t);
        }
        acc
    }

    /// Arf invariant in this basis. Invariant under symplectic basis change,
    /// which the oracle checks by brute force.
    pub fn arf(&self) -> u8 {
        let g = self.basis_values.len() / 2;
        let mut acc = 0u8;
        for t in 0..g {
            acc ^= self.basis_values.get(t) & self.basis_values.get(g + t);
        }
        acc
    }
}

/// Whether the form is invariant under the involution. Checking on basis
/// vectors suffices: the defect `q(c(x)) + q(x)` is linear in x because both
/// sides refine the same mod-2 form.
pub fn is_real_spin(curve: &RealCurve, q: &QuadraticForm) -> bool {
    let c = curve.c_star_mod2();
    (0..curve.dim()).all(|j| {
        let e = F2Vector::unit(curve.dim(), j);
        q.eval(&c.mul_vec(&e)) == q.eval(&e)
    })
}

/// Per-oval orientability class of a real Spin structure: bit i is
/// `1 + q(oval_i)`. Its total parity is always g+1 mod 2.
pub fn spin_w1(curve: &RealCurve, q: &QuadraticForm) -> Result<RealW1, SpinError> {
    if !is_real_spin(curve, q) {
        return Err(SpinError::NotRealSpin);
    }
    let bits: Vec<u8> = (0..curve.components())
        .map(|i| 1 ^ q.eval(&curve.real_component_class(i)))
        .collect();
    Ok(RealW1::from_bits(curve, &bits).expect("bit count equals oval count"))
}

/// Translation action of an automorphism class: `(f.q)(x) = q(x) + ind2(f)(x)`.
pub fn act(f: &AutClass, q: &QuadraticForm) -> Result<QuadraticForm, SpinError> {
    let curve = f.curve();
    if !is_real_spin(&curve, q) {
        return Err(SpinError::NotRealSpin);
    }
    // The index covector's coordinates are exactly its values on the basis.
    Ok(QuadraticForm {
        basis_values: &q.basis_values + &f.ind2(),
    })
}

fn check_w1_parity(curve: &RealCurve, w: &RealW1) -> Result<(), SpinError> {
    assert_eq!(w.len(), curve.components(), "w1 length mismatch");
    if w.total_parity() != ((curve.genus() + 1) % 2) as u8 {
        return Err(SpinError::BadW1Parity);
    }
    Ok(())
}

/// The linear system cutting out the real Spin structures with orientability
/// class w: realness on every basis vector, plus the prescribed values on
/// every oval class.
fn real_spin_system(curve: &RealCurve, w: &RealW1) -> (F2Matrix, F2Vector) {
    let n = curve.dim();
    let c = curve.c_star_mod2();
    let mut rows = Vec::with_capacity(n + curve.components());
    let mut rhs = Vec::with_capacity(n + curve.components());
    let cross = |v: &F2Vector| -> u8 {
        let g = n / 2;
        (0..g).fold(0u8, |acc, t| acc ^ (v.get(t) & v.get(g + t)))
    };
    for j in 0..n {
        let e = F2Vector::unit(n, j);
        let y = c.mul_vec(&e);
        // q(y) = q(e_j) expands to a linear row plus constant cross terms.
        rows.push(&y + &e);
        rhs.push(cross(&y));
    }
    for i in 0..curve.components() {
        let rc = curve.real_component_class(i);
        let constant = cross(&rc);
        rows.push(rc);
        rhs.push(constant ^ 1 ^ w.get(i));
    }
    (
        F2Matrix::from_rows(rows, n),
        F2Vector::from_bits(rhs),
    )
}

/// The canonical representative with class w: the lexicographically smallest
/// solution of the real-Spin system.
pub fn find_real_spin(curve: &RealCurve, w: &RealW1) -> Result<QuadraticForm, SpinError> {
    check_w1_parity(curve, w)?;
    let (a, b) = real_spin_system(curve, w);
    let sol = gf2_solve_affine(&a, &b)
        .expect("every admissible orientability class is realized by a real Spin structure");
    Ok(QuadraticForm {
        basis_values: sol.lex_min(),
    })
}

/// All 2^g real Spin structures with class w, in lexicographic order.
pub fn enumerate_real_spin(curve: &RealCurve, w: &RealW1) -> Result<Vec<QuadraticForm>, SpinError> {
    check_w1_parity(curve, w)?;
    let (a, b) = real_spin_system(curve, w);
    let sol = gf2_solve_affine(&a, &b)
        .expect("every admissible orientability class is realized by a real Spin structure");
    Ok(sol
        .enumerate()
        .into_iter()
        .map(|basis_values| QuadraticForm { basis_values })
        .collect())
}

/// Arf shift of an automorphism class on the w-orbit:
/// `arf(f.q) + arf(q) = q(dual class of ind2(f))`, independent of the
/// representative q. This is the homomorphism governing Spin bordism classes.
pub fn arf_delta(f: &AutClass, w: &RealW1) -> Result<u8, SpinError> {
    let curve = f.curve();
    let q = find_real_spin(&curve, w)?;
    let cls = curve.pd_inverse(&f.ind2());
    let value = q.eval(&cls);
    // Independence from the representative: translating by F- cannot change
    // the value because F- vanishes on the dual class, which lies in F+.
    debug_assert!(curve.f_minus_basis().iter().all(|phi| {
        QuadraticForm {
            basis_values: &q.basis_values + phi,
        }
        .eval(&cls)
            == value
    }));
    Ok(value)
}

/// Bordism class of a real Spin structure: its orientability class together
/// with its Arf invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BordismClass {
    pub w1: RealW1,
    pub arf: u8,
}

pub fn bordism_class(curve: &RealCurve, q: &QuadraticForm) -> Result<BordismClass, SpinError> {
    Ok(BordismClass {
        w1: spin_w1(curve, q)?,
        arf: q.arf(),
    })
}
