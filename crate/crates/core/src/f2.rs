//! Exact linear algebra over the two-element field.
//!
//! Vectors are fixed-length bit sequences, matrices are rectangular row
//! stacks, and the only algorithm is Gaussian elimination with deterministic
//! leftmost-pivot selection, so ranks, kernel bases and particular solutions
//! are reproducible across runs. Dimensions here are tiny (at most a few
//! dozen), so clarity wins over bit packing.

use std::fmt;
use std::ops::{Add, AddAssign};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("no solution: right-hand side lies outside the column space")]
    NoSolution,
}

/// A vector over F2. Length is fixed at creation; every binary operation
/// panics on a length mismatch, since mixed dimensions are always a
/// programming error at this layer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    bits: Vec<u8>,
}

impl F2Vector {
    pub fn zero(len: usize) -> Self {
        F2Vector { bits: vec![0; len] }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        assert!(i < len, "unit index {i} out of range for length {len}");
        let mut v = Self::zero(len);
        v.bits[i] = 1;
        v
    }

    pub fn from_bits(bits: impl Into<Vec<u8>>) -> Self {
        let bits = bits.into();
        assert!(
            bits.iter().all(|&b| b <= 1),
            "F2Vector entries must be 0 or 1"
        );
        F2Vector { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, bit: u8) {
        assert!(bit <= 1, "F2Vector entries must be 0 or 1");
        self.bits[i] = bit;
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i] ^= 1;
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.bits.iter().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// Sum of all entries mod 2.
    pub fn total_parity(&self) -> u8 {
        (self.weight() % 2) as u8
    }

    pub fn dot(&self, other: &F2Vector) -> u8 {
        assert_eq!(self.len(), other.len(), "dot product length mismatch");
        let mut acc = 0u8;
        for (a, b) in self.bits.iter().zip(&other.bits) {
            acc ^= a & b;
        }
        acc
    }

    /// Index of the first nonzero entry, if any.
    pub fn leading(&self) -> Option<usize> {
        self.bits.iter().position(|&b| b == 1)
    }
}

impl Add<&F2Vector> for &F2Vector {
    type Output = F2Vector;

    fn add(self, rhs: &F2Vector) -> F2Vector {
        assert_eq!(self.len(), rhs.len(), "vector sum length mismatch");
        let bits = self
            .bits
            .iter()
            .zip(&rhs.bits)
            .map(|(a, b)| a ^ b)
            .collect();
        F2Vector { bits }
    }
}

impl AddAssign<&F2Vector> for F2Vector {
    fn add_assign(&mut self, rhs: &F2Vector) {
        assert_eq!(self.len(), rhs.len(), "vector sum length mismatch");
        for (a, b) in self.bits.iter_mut().zip(&rhs.bits) {
            *a ^= b;
        }
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A rectangular matrix over F2, stored as rows. May have zero rows (the
/// empty map from an `ncols`-dimensional space), but the column count is
/// always explicit.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: Vec<F2Vector>,
    ncols: usize,
}

impl F2Matrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        F2Matrix {
            rows: vec![F2Vector::zero(ncols); nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| F2Vector::unit(n, i)).collect();
        F2Matrix { rows, ncols: n }
    }

    pub fn from_rows(rows: Vec<F2Vector>, ncols: usize) -> Self {
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "all matrix rows must have length {ncols}"
        );
        F2Matrix { rows, ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &F2Vector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn push_row(&mut self, row: F2Vector) {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, bit: u8) {
        self.rows[r].set(c, bit);
    }

    /// Column `c` as a vector.
    pub fn column(&self, c: usize) -> F2Vector {
        let bits = self.rows.iter().map(|r| r.get(c)).collect::<Vec<_>>();
        F2Vector::from_bits(bits)
    }

    pub fn mul_vec(&self, x: &F2Vector) -> F2Vector {
        assert_eq!(x.len(), self.ncols, "matrix-vector length mismatch");
        let bits = self.rows.iter().map(|r| r.dot(x)).collect::<Vec<_>>();
        F2Vector::from_bits(bits)
    }

    pub fn mul_mat(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.ncols, other.nrows(), "matrix product shape mismatch");
        let mut out = F2Matrix::zero(self.nrows(), other.ncols());
        for r in 0..self.nrows() {
            for c in 0..other.ncols() {
                let mut acc = 0u8;
                for t in 0..self.ncols {
                    acc ^= self.get(r, t) & other.get(t, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{} [", self.nrows(), self.ncols)?;
        for row in &self.rows {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form in place, pivots chosen leftmost-first. Returns
/// the pivot columns in increasing order. Columns at `limit` and beyond are
/// carried along but never chosen as pivots (used for augmented systems).
fn rref_in_place(rows: &mut [F2Vector], limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..limit {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col) == 1) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) == 1 {
                *row += &pivot_row;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn gf2_rank(a: &F2Matrix) -> usize {
    let mut rows = a.rows.clone();
    rref_in_place(&mut rows, a.ncols).len()
}

/// The solution set of `A·x = b`, presented as one particular solution plus
/// a kernel basis: the full set is `particular + span(kernel_basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: F2Vector,
    pub kernel_basis: Vec<F2Vector>,
}

impl AffineSolution {
    /// Lexicographically smallest solution. The kernel basis is kept in
    /// reduced echelon form, so zeroing the particular solution at every
    /// leading column realises the minimum.
    pub fn lex_min(&self) -> F2Vector {
        let mut x = self.particular.clone();
        for v in &self.kernel_basis {
            let lead = v.leading().expect("kernel basis vectors are nonzero");
            if x.get(lead) == 1 {
                x += v;
            }
        }
        x
    }

    /// Every solution, in lexicographic order (2^kernel_dim of them).
    pub fn enumerate(&self) -> Vec<F2Vector> {
        let dim = self.kernel_basis.len();
        assert!(dim < usize::BITS as usize, "kernel too large to enumerate");
        let mut out = Vec::with_capacity(1 << dim);
        for mask in 0..(1usize << dim) {
            let mut x = self.particular.clone();
            for (j, v) in self.kernel_basis.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    x += v;
                }
            }
            out.push(x);
        }
        out.sort();
        out
    }
}

/// Solve `A·x = b` over F2. The particular solution sets every free variable
/// to zero; the kernel basis is returned in reduced echelon form (leading
/// columns strictly increasing, each cleared from the other basis vectors).
pub fn gf2_solve_affine(a: &F2Matrix, b: &F2Vector) -> Result<AffineSolution, SolveError> {
    assert_eq!(
        a.nrows(),
        b.len(),
        "system shape mismatch: {} rows vs rhs length {}",
        a.nrows(),
        b.len()
    );
    let n = a.ncols();
    let mut rows: Vec<F2Vector> = a
        .rows
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut bits = row.bits().to_vec();
            bits.push(rhs);
            F2Vector::from_bits(bits)
        })
        .collect();
    let pivots = rref_in_place(&mut rows, n);
    for row in rows.iter().skip(pivots.len()) {
        if row.get(n) == 1 {
            return Err(SolveError::NoSolution);
        }
    }

    let mut particular = F2Vector::zero(n);
    for (idx, &p) in pivots.iter().enumerate() {
        particular.set(p, rows[idx].get(n));
    }

    let mut kernel_basis = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = F2Vector::zero(n);
        v.set(f, 1);
        for (idx, &p) in pivots.iter().enumerate() {
            v.set(p, rows[idx].get(f));
        }
        kernel_basis.push(v);
    }
    // Re-reduce so leading columns are canonical regardless of which columns
    // were free; lex_min relies on this shape.
    rref_in_place(&mut kernel_basis, n);
    kernel_basis.retain(|v| !v.is_zero());
    Ok(AffineSolution {
        particular,
        kernel_basis,
    })
}

/// Mod-2 intersection pairing on H1 of a genus-g surface in a symplectic
/// basis: coordinates `0..g` are `a_1..a_g`, coordinates `g..2g` are
/// `b_1..b_g`, with `a_i • b_j = δ_ij` and `a_i • a_j = b_i • b_j = 0`.
pub fn symplectic_pairing(g: usize, x: &F2Vector, y: &F2Vector) -> u8 {
    assert_eq!(x.len(), 2 * g, "first argument must have length 2g");
    assert_eq!(y.len(), 2 * g, "second argument must have length 2g");
    let mut acc = 0u8;
    for i in 0..g {
        acc ^= x.get(i) & y.get(g + i);
        acc ^= x.get(g + i) & y.get(i);
    }
    acc
}
