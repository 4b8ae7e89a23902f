//! Exact integer linear algebra: dense matrices over `BigInt`, Smith and
//! Hermite normal forms, primitivity tests, and the structure of finitely
//! generated abelian quotients `Z^n / rowspan`.
//!
//! Everything here is exact; no floating point enters this module. Matrices
//! are desk scale (≤ ~20×20), so the classical elimination algorithms are
//! used without any sparsity or modular tricks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the zero vector has no primitive direction")]
    ZeroVector,
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LatticeError> {
        if rows == 0 || cols == 0 {
            return Err(LatticeError::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(LatticeError::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self, LatticeError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(LatticeError::EmptyMatrix);
        }
        let cols = rows[0].len();
        for r in rows {
            if r.len() != cols {
                return Err(LatticeError::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
        }
        let data = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        IntMatrix::new(rows.len(), cols, data)
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let vecs: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        IntMatrix::from_rows(&vecs).expect("literal matrix must be rectangular and nonempty")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum::<BigInt>()
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let add = q * self.get(src, c);
            let v = self.get(dst, c) + add;
            self.set(dst, c, v);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let add = q * self.get(r, src);
            let v = self.get(r, dst) + add;
            self.set(r, dst, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    /// Fraction-free (Bareiss) determinant; square matrices only.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = self.row_vecs();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let swap = (k + 1..n).find(|&i| !a[i][k].is_zero());
                match swap {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = &num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    /// Exact inverse of an integer matrix with determinant ±1.
    pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let det = self.det();
        if !det.abs().is_one() {
            return None;
        }
        // Adjugate route: inverse = adj / det with det = ±1.
        let mut inv = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor_matrix(j, i).det();
                let sign = if (i + j) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                inv.set(i, j, sign * minor / &det);
            }
        }
        Some(inv)
    }

    fn minor_matrix(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let n = self.rows;
        if n == 1 {
            // 0x0 minor: determinant 1 by convention
            return IntMatrix::identity(1);
        }
        let mut data = Vec::with_capacity((n - 1) * (n - 1));
        for r in 0..n {
            if r == skip_row {
                continue;
            }
            for c in 0..n {
                if c == skip_col {
                    continue;
                }
                data.push(self.get(r, c).clone());
            }
        }
        IntMatrix::new(n - 1, n - 1, data).expect("minor of square matrix")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Result of `smith_normal_form`: `u * m * v = d` with `u`, `v` unimodular
/// and `d` diagonal, entries non-negative with `d1 | d2 | ...`.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let steps = rows.min(cols);

    let mut t = 0;
    while t < steps {
        // Pick the entry of smallest nonzero magnitude in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a.get(i, j).is_zero() {
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => a.get(i, j).abs() < a.get(pi, pj).abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            // Clear column t with row operations.
            for i in t + 1..rows {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t) / a.get(t, t);
                    let neg_q = -&q;
                    a.add_row_multiple(i, t, &neg_q);
                    u.add_row_multiple(i, t, &neg_q);
                    if !a.get(i, t).is_zero() {
                        // Remainder became the smaller pivot candidate.
                        a.swap_rows(t, i);
                        u.swap_rows(t, i);
                        clean = false;
                    }
                }
            }
            // Clear row t with column operations.
            for j in t + 1..cols {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j) / a.get(t, t);
                    let neg_q = -&q;
                    a.add_col_multiple(j, t, &neg_q);
                    v.add_col_multiple(j, t, &neg_q);
                    if !a.get(t, j).is_zero() {
                        a.swap_cols(t, j);
                        v.swap_cols(t, j);
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // Divisibility fix: pivot must divide the whole trailing block.
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(a.get(i, j) % a.get(t, t)).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SmithNormalForm { u, d: a, v }
}

/// Result of `hermite_normal_form`: `u * m = h` with `u` unimodular and `h`
/// in row-style Hermite normal form (pivots positive, left-to-right, entries
/// above each pivot reduced into `[0, pivot)`, zero rows at the bottom).
#[derive(Debug, Clone)]
pub struct HermiteNormalForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
}

pub fn hermite_normal_form(m: &IntMatrix) -> HermiteNormalForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);

    let mut r = 0;
    for j in 0..cols {
        if r == rows {
            break;
        }
        // Gcd out column j below row r.
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !h.get(i, j).is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => h.get(i, j).abs() < h.get(b, j).abs(),
                    };
                    if better {
                        best = Some(i);
                    }
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            u.swap_rows(r, b);
            let mut again = false;
            for i in r + 1..rows {
                if !h.get(i, j).is_zero() {
                    let q = h.get(i, j) / h.get(r, j);
                    let neg_q = -&q;
                    h.add_row_multiple(i, r, &neg_q);
                    u.add_row_multiple(i, r, &neg_q);
                    if !h.get(i, j).is_zero() {
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        if h.get(r, j).is_zero() {
            continue;
        }
        if h.get(r, j).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = h.get(i, j).div_floor(h.get(r, j));
            let neg_q = -&q;
            h.add_row_multiple(i, r, &neg_q);
            u.add_row_multiple(i, r, &neg_q);
        }
        r += 1;
    }

    HermiteNormalForm { h, u }
}

/// Gcd of a slice; zero for the empty or all-zero slice.
pub fn vector_gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Whether the gcd of the entries is 1. The zero vector is rejected.
pub fn is_primitive(v: &[BigInt]) -> Result<bool, LatticeError> {
    let g = vector_gcd(v);
    if g.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    Ok(g.is_one())
}

/// Divides out the gcd: `v = g * w` with `w` primitive, `g > 0`.
pub fn primitive_part(v: &[BigInt]) -> Result<(Vec<BigInt>, BigInt), LatticeError> {
    let g = vector_gcd(v);
    if g.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    Ok((v.iter().map(|x| x / &g).collect(), g))
}

/// Structure of a finitely generated abelian group
/// `Z^free_rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk` with `d1 | d2 | ... | dk`, all `di ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroupStructure {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl AbelianGroupStructure {
    pub fn trivial() -> Self {
        AbelianGroupStructure {
            free_rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors
            .iter()
            .fold(BigInt::one(), |acc, f| acc * f)
    }
}

impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{}", d));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Structure of `Z^ambient_rank / rowspan(generators)` via the Smith normal
/// form of the generator matrix.
pub fn quotient_group(
    generators: &IntMatrix,
    ambient_rank: usize,
) -> Result<AbelianGroupStructure, LatticeError> {
    if generators.cols() != ambient_rank {
        return Err(LatticeError::DimensionMismatch {
            expected: ambient_rank,
            got: generators.cols(),
        });
    }
    let snf = smith_normal_form(generators);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    let invariant_factors = diag
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    Ok(AbelianGroupStructure {
        free_rank: ambient_rank - rank,
        invariant_factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Independent oracle: the product d1*...*dk of the first k invariant
    /// factors equals the gcd of all k×k minors. Used to check SNF output
    /// without trusting the elimination path.
    fn gcd_of_k_minors(m: &IntMatrix, k: usize) -> BigInt {
        fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut idx: Vec<usize> = (0..k).collect();
            if k > n {
                return out;
            }
            loop {
                out.push(idx.clone());
                let mut i = k;
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    if idx[i] != i + n - k {
                        break;
                    }
                    if i == 0 {
                        return out;
                    }
                }
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        let mut g = BigInt::zero();
        for rs in combinations(m.rows(), k) {
            for cs in combinations(m.cols(), k) {
                let mut data = Vec::with_capacity(k * k);
                for &r in &rs {
                    for &c in &cs {
                        data.push(m.get(r, c).clone());
                    }
                }
                let sub = IntMatrix::new(k, k, data).unwrap();
                g = g.gcd(&sub.det());
            }
        }
        g
    }

    fn assert_snf_valid(m: &IntMatrix) {
        let snf = smith_normal_form(m);
        assert!(snf.u.is_unimodular(), "u not unimodular for\n{m}");
        assert!(snf.v.is_unimodular(), "v not unimodular for\n{m}");
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d, "u*m*v != d for\n{m}");
        for r in 0..snf.d.rows() {
            for c in 0..snf.d.cols() {
                if r != c {
                    assert!(snf.d.get(r, c).is_zero(), "d not diagonal for\n{m}");
                }
            }
        }
        let diag = snf.diagonal();
        for i in 0..diag.len() {
            assert!(!diag[i].is_negative());
            if i + 1 < diag.len() {
                if diag[i].is_zero() {
                    assert!(diag[i + 1].is_zero(), "zeros must trail for\n{m}");
                } else {
                    assert!(
                        (&diag[i + 1] % &diag[i]).is_zero(),
                        "divisibility chain broken for\n{m}"
                    );
                }
            }
        }
        // Cross-check every partial product of invariant factors against the
        // minor-gcd oracle.
        let mut prod = BigInt::one();
        for k in 1..=snf.rank() {
            prod *= &diag[k - 1];
            assert_eq!(
                prod,
                gcd_of_k_minors(m, k),
                "minor oracle failed at k={k} for\n{m}"
            );
        }
    }

    #[test]
    fn snf_identity() {
        let m = IntMatrix::identity(2);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, IntMatrix::identity(2));
    }

    #[test]
    fn snf_hand_elimination_2x2() {
        // [[1,0],[1,2]]: subtract row0 from row1 -> diag(1,2). Oracle: gcd of
        // 1x1 minors is 1, determinant is 2, so factors are (1,2).
        let m = IntMatrix::from_i64(&[&[1, 0], &[1, 2]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), vec![big(1), big(2)]);
        assert_snf_valid(&m);
    }

    #[test]
    fn snf_rank_one_gcd() {
        // [[2,4],[4,8]] has rank 1; gcd of entries is 2 and the 2x2 minor
        // vanishes, so the diagonal is (2,0).
        let m = IntMatrix::from_i64(&[&[2, 4], &[4, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), vec![big(2), big(0)]);
        assert_snf_valid(&m);
    }

    #[test]
    fn hnf_identity_and_permutation() {
        let id = IntMatrix::identity(3);
        let hnf = hermite_normal_form(&id);
        assert_eq!(hnf.h, id);

        let perm = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let hnf = hermite_normal_form(&perm);
        assert_eq!(hnf.h, IntMatrix::identity(2));
        assert!(hnf.u.is_unimodular());
        assert_eq!(hnf.u.mul(&perm), hnf.h);
    }

    /// Oracle for the HNF of [[2,1],[0,3]]: brute force over unimodular u with
    /// small entries, keep the products in HNF shape, and demand uniqueness.
    #[test]
    fn hnf_brute_force_small_unimodular() {
        let m = IntMatrix::from_i64(&[&[2, 1], &[0, 3]]);

        fn in_row_hnf(h: &IntMatrix) -> bool {
            // 2x2 full-rank case: pivots on the diagonal, positive, entry
            // above the second pivot reduced.
            let a = h.get(0, 0);
            let b = h.get(0, 1);
            let c = h.get(1, 0);
            let d = h.get(1, 1);
            a.is_positive() && c.is_zero() && d.is_positive() && !b.is_negative() && b < d
        }

        let mut found: Vec<IntMatrix> = Vec::new();
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                for c in -3i64..=3 {
                    for d in -3i64..=3 {
                        let u = IntMatrix::from_i64(&[&[a, b], &[c, d]]);
                        if !u.is_unimodular() {
                            continue;
                        }
                        let h = u.mul(&m);
                        if in_row_hnf(&h) && !found.contains(&h) {
                            found.push(h);
                        }
                    }
                }
            }
        }
        assert_eq!(found.len(), 1, "row HNF should be unique");
        let hnf = hermite_normal_form(&m);
        assert_eq!(hnf.h, found[0]);
        // gcd of the first column is 2, so the first pivot cannot be 1
        assert_eq!(*hnf.h.get(0, 0), big(2));
        assert_eq!(hnf.u.mul(&m), hnf.h);
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&[big(1), big(0), big(0)]).unwrap());
        assert!(!is_primitive(&[big(2), big(4), big(6)]).unwrap());
        // gcd(6,10,15) = 1 even though the entries are pairwise non-coprime
        assert!(is_primitive(&[big(6), big(10), big(15)]).unwrap());
        assert_eq!(
            is_primitive(&[big(0), big(0)]),
            Err(LatticeError::ZeroVector)
        );
    }

    #[test]
    fn quotient_group_examples() {
        // Z^2 / <(1,0),(0,1)> = 0
        let m = IntMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        assert!(quotient_group(&m, 2).unwrap().is_trivial());

        // Z^2 / <(1,0),(-1,p)> = Z/p for p >= 2
        for p in 2i64..=9 {
            let m = IntMatrix::from_i64(&[&[1, 0], &[-1, p]]);
            let g = quotient_group(&m, 2).unwrap();
            assert_eq!(g.free_rank, 0);
            assert_eq!(g.invariant_factors, vec![big(p)]);
        }

        // The sphere-join normal set with gcd(k1,k2)=1 gives a trivial group.
        let m = IntMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[-1, 0, 2], &[0, -1, 3]]);
        assert!(quotient_group(&m, 3).unwrap().is_trivial());

        let m = IntMatrix::from_i64(&[&[1, 0]]);
        assert_eq!(
            quotient_group(&m, 3),
            Err(LatticeError::DimensionMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn quotient_free_rank() {
        let m = IntMatrix::from_i64(&[&[2, 0, 0]]);
        let g = quotient_group(&m, 3).unwrap();
        assert_eq!(g.free_rank, 2);
        assert_eq!(g.invariant_factors, vec![big(2)]);
        assert_eq!(g.to_string(), "Z^2 + Z/2");
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let u = IntMatrix::from_i64(&[&[2, 1, 0], &[1, 1, 0], &[3, -2, 1]]);
        assert!(u.is_unimodular());
        let inv = u.unimodular_inverse().unwrap();
        assert_eq!(u.mul(&inv), IntMatrix::identity(3));
        assert_eq!(inv.mul(&u), IntMatrix::identity(3));
    }

    prop_compose! {
        fn small_matrix(max_dim: usize)
            (rows in 1..=max_dim, cols in 1..=max_dim)
            (entries in prop::collection::vec(-9i64..=9, rows * cols),
             rows in Just(rows), cols in Just(cols))
            -> IntMatrix
        {
            IntMatrix::new(rows, cols, entries.into_iter().map(BigInt::from).collect()).unwrap()
        }
    }

    proptest! {
        #[test]
        fn snf_valid_on_random_matrices(m in small_matrix(4)) {
            assert_snf_valid(&m);
        }

        #[test]
        fn hnf_idempotent(m in small_matrix(4)) {
            let first = hermite_normal_form(&m);
            let second = hermite_normal_form(&first.h);
            prop_assert_eq!(second.h, first.h);
        }

        #[test]
        fn quotient_invariant_under_row_redundancy(
            m in small_matrix(4),
            coeffs in prop::collection::vec(-3i64..=3, 4),
        ) {
            let base = quotient_group(&m, m.cols()).unwrap();
            // Append an integer combination of existing rows.
            let mut combo = vec![BigInt::zero(); m.cols()];
            for (r, &c) in coeffs.iter().take(m.rows()).enumerate() {
                for j in 0..m.cols() {
                    combo[j] += BigInt::from(c) * m.get(r, j);
                }
            }
            let mut rows = m.row_vecs();
            rows.push(combo);
            let extended = IntMatrix::from_rows(&rows).unwrap();
            prop_assert_eq!(quotient_group(&extended, m.cols()).unwrap(), base);
        }
    }
}
