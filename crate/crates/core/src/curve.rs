//! Topological types of real curves and their adapted symplectic basis data.
//!
//! A real curve is a closed orientable genus-g surface with an
//! orientation-reversing involution whose fixed locus (the real part) is a
//! nonempty union of k circles, called ovals here. The homology basis is the
//! standard adapted one: `a_1..a_{k-1}` are oval classes, component 0 carries
//! the basepoint, and the involution acts by one of two matrix shapes
//! depending on whether the real part separates the surface.
//!
//! Coordinates throughout: `F2Vector(2g)` with entries `0..g` for `a_1..a_g`
//! and `g..2g` for `b_1..b_g`.

use thiserror::Error;

use crate::f2::{gf2_rank, symplectic_pairing, F2Matrix, F2Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("the real part must be nonempty: k >= 1")]
    NoComponents,
    #[error("Harnack bound violated: k = {k} exceeds g + 1 = {max}")]
    HarnackBound { k: usize, max: usize },
    #[error("a separating curve needs k congruent to g + 1 mod 2 (got g = {g}, k = {k})")]
    SeparatingParity { g: usize, k: usize },
    #[error("genus 0 forces k = 1 and a separating real part")]
    GenusZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("w1 vector has {got} entries but the curve has {expected} ovals")]
pub struct W1LengthError {
    pub got: usize,
    pub expected: usize,
}

/// Topological type of a real curve. Immutable once constructed; all derived
/// basis data is recomputed on demand (the dimensions involved are tiny).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RealCurve {
    genus: usize,
    components: usize,
    separating: bool,
}

impl RealCurve {
    pub fn new(genus: usize, components: usize, separating: bool) -> Result<Self, TopologyError> {
        if components == 0 {
            return Err(TopologyError::NoComponents);
        }
        if components > genus + 1 {
            return Err(TopologyError::HarnackBound {
                k: components,
                max: genus + 1,
            });
        }
        if separating && (components % 2) != ((genus + 1) % 2) {
            return Err(TopologyError::SeparatingParity {
                g: genus,
                k: components,
            });
        }
        if genus == 0 && !(components == 1 && separating) {
            return Err(TopologyError::GenusZero);
        }
        Ok(RealCurve {
            genus,
            components,
            separating,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of ovals, k.
    pub fn components(&self) -> usize {
        self.components
    }

    pub fn separating(&self) -> bool {
        self.separating
    }

    /// Genus of one half of the complement of the real part. Only meaningful
    /// on separating curves.
    pub fn m(&self) -> usize {
        assert!(self.separating, "m is only defined for separating curves");
        (self.genus + 1 - self.components) / 2
    }

    /// Dimension of H1, i.e. 2g.
    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    fn a(&self, i: usize) -> F2Vector {
        debug_assert!((1..=self.genus).contains(&i));
        F2Vector::unit(self.dim(), i - 1)
    }

    fn b(&self, i: usize) -> F2Vector {
        debug_assert!((1..=self.genus).contains(&i));
        F2Vector::unit(self.dim(), self.genus + i - 1)
    }

    /// Matrix of the involution on integral H1 in the basis
    /// `(a_1..a_g, b_1..b_g)`; entry `[r][c]` is the coefficient of basis
    /// vector r in the image of basis vector c.
    pub fn c_star_integer(&self) -> Vec<Vec<i64>> {
        let g = self.genus;
        let k = self.components;
        let n = 2 * g;
        let mut m = vec![vec![0i64; n]; n];
        if self.separating {
            let h = self.m();
            for i in 1..=g {
                let (ai, bi) = (i - 1, g + i - 1);
                if i < k {
                    m[ai][ai] = 1;
                    m[bi][bi] = -1;
                } else if i < k + h {
                    // Oval-free handles come in conjugate pairs i <-> i+m.
                    let (aj, bj) = (i + h - 1, g + i + h - 1);
                    m[aj][ai] = 1;
                    m[ai][aj] = 1;
                    m[bj][bi] = -1;
                    m[bi][bj] = -1;
                }
            }
        } else {
            for i in 1..=g {
                let (ai, bi) = (i - 1, g + i - 1);
                m[ai][ai] = 1;
                m[bi][bi] = -1;
                if i >= k {
                    m[ai][bi] = 1;
                }
            }
        }
        m
    }

    /// Mod-2 reduction of the involution matrix.
    pub fn c_star_mod2(&self) -> F2Matrix {
        let n = self.dim();
        let int = self.c_star_integer();
        let mut m = F2Matrix::zero(n, n);
        for (r, row) in int.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                m.set(r, c, entry.rem_euclid(2) as u8);
            }
        }
        m
    }

    /// Mod-2 homology class of oval i. Oval 0 (the basepoint oval) is
    /// homologous to the sum of the others plus, on non-separating curves,
    /// the oval-free `a` classes.
    pub fn real_component_class(&self, i: usize) -> F2Vector {
        assert!(
            i < self.components,
            "oval index {i} out of range for k = {}",
            self.components
        );
        if i > 0 {
            return self.a(i);
        }
        let upper = if self.separating {
            self.components - 1
        } else {
            self.genus
        };
        let mut v = F2Vector::zero(self.dim());
        for j in 1..=upper {
            v += &self.a(j);
        }
        v
    }

    /// Basis of the g-dimensional isotropic subspace F+ (the mod-2 reduction
    /// of the +1 eigenlattice of the involution): oval classes first, then on
    /// separating curves the conjugate-pair sums `a_i + a_{i+m}` for
    /// i = k..k+m-1, then `b_i + b_{i+m}` in the same range.
    pub fn f_plus_basis(&self) -> Vec<F2Vector> {
        let k = self.components;
        let mut basis = Vec::with_capacity(self.genus);
        if self.separating {
            let h = self.m();
            for i in 1..k {
                basis.push(self.a(i));
            }
            for i in k..k + h {
                basis.push(&self.a(i) + &self.a(i + h));
            }
            for i in k..k + h {
                basis.push(&self.b(i) + &self.b(i + h));
            }
        } else {
            for i in 1..=self.genus {
                basis.push(self.a(i));
            }
        }
        basis
    }

    /// Poincare duals of `f_plus_basis`, spanning F-: the covectors that
    /// arise as mod-2 indices of bundle automorphisms.
    pub fn f_minus_basis(&self) -> Vec<F2Vector> {
        self.f_plus_basis()
            .iter()
            .map(|v| self.poincare_dual(v))
            .collect()
    }

    /// Poincare duality as a covector: `dual(x) = x • (-)`, expressed in the
    /// coordinates of evaluation on basis vectors. In the symplectic basis
    /// this swaps the a- and b-blocks.
    pub fn poincare_dual(&self, x: &F2Vector) -> F2Vector {
        assert_eq!(x.len(), self.dim(), "class has wrong ambient dimension");
        let g = self.genus;
        let mut out = F2Vector::zero(self.dim());
        for i in 0..g {
            out.set(i, x.get(g + i));
            out.set(g + i, x.get(i));
        }
        out
    }

    /// Inverse of `poincare_dual` (the same block swap).
    pub fn pd_inverse(&self, phi: &F2Vector) -> F2Vector {
        self.poincare_dual(phi)
    }

    /// Dimension of the fixed space of the mod-2 involution.
    pub fn fix_dimension(&self) -> usize {
        let n = self.dim();
        let mut m = self.c_star_mod2();
        for i in 0..n {
            let bit = m.get(i, i) ^ 1;
            m.set(i, i, bit);
        }
        n - gf2_rank(&m)
    }

    /// Intersection pairing in this curve's basis.
    pub fn pairing(&self, x: &F2Vector, y: &F2Vector) -> u8 {
        symplectic_pairing(self.genus, x, y)
    }
}

/// Every topological type with genus at most `max_genus`, in a fixed
/// deterministic order (genus, then oval count, then non-separating before
/// separating).
pub fn all_topologies(max_genus: usize) -> Vec<RealCurve> {
    let mut out = Vec::new();
    for g in 0..=max_genus {
        for k in 1..=g + 1 {
            for sep in [false, true] {
                if let Ok(curve) = RealCurve::new(g, k, sep) {
                    out.push(curve);
                }
            }
        }
    }
    out
}

/// First Stiefel-Whitney data on the real part: one orientability bit per
/// oval.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealW1 {
    bits: F2Vector,
}

impl RealW1 {
    pub fn new(curve: &RealCurve, bits: F2Vector) -> Result<Self, W1LengthError> {
        if bits.len() != curve.components() {
            return Err(W1LengthError {
                got: bits.len(),
                expected: curve.components(),
            });
        }
        Ok(RealW1 { bits })
    }

    pub fn from_bits(curve: &RealCurve, bits: &[u8]) -> Result<Self, W1LengthError> {
        Self::new(curve, F2Vector::from_bits(bits.to_vec()))
    }

    pub fn bits(&self) -> &F2Vector {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.bits.get(i)
    }

    /// Value on the fundamental class of the whole real part: sum of all
    /// entries mod 2.
    pub fn total_parity(&self) -> u8 {
        self.bits.total_parity()
    }

    /// Same class with the bit on one oval flipped.
    pub fn flip(&self, i: usize) -> RealW1 {
        let mut bits = self.bits.clone();
        bits.flip(i);
        RealW1 { bits }
    }

    /// All classes of the given total parity, in lexicographic order
    /// (2^{k-1} of them).
    pub fn enumerate_with_parity(curve: &RealCurve, parity: u8) -> Vec<RealW1> {
        let k = curve.components();
        let mut out = Vec::new();
        for mask in 0..(1u32 << k) {
            let bits: Vec<u8> = (0..k).map(|i| ((mask >> (k - 1 - i)) & 1) as u8).collect();
            let v = F2Vector::from_bits(bits);
            if v.total_parity() == parity % 2 {
                out.push(RealW1 { bits: v });
            }
        }
        out
    }
}
