//! Dense exact linear algebra over the rationals.
//!
//! Vectors are plain `Vec<Rat>` and matrices are row-major `Vec<QVec>`. The
//! routines here are the small, well-trodden kernels the rest of the crate
//! leans on: Gaussian elimination (rank, solve, inverse, null space), reduced
//! row echelon form, and primitive-integer normalization of ray directions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

use crate::rat::Rat;

/// A rational vector.
pub type QVec = Vec<Rat>;
/// A rational matrix, stored as rows.
pub type QMat = Vec<QVec>;

/// The zero vector of length `n`.
pub fn zeros(n: usize) -> QVec {
    vec![Rat::zero(); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit(n: usize, i: usize) -> QVec {
    let mut v = zeros(n);
    v[i] = Rat::one();
    v
}

/// Builds a rational vector from integer entries.
pub fn vec_i64(entries: &[i64]) -> QVec {
    entries.iter().map(|&x| crate::rat::rat(x)).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn add(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Rat]) -> QVec {
    a.iter().map(|x| -x).collect()
}

pub fn scale(c: &Rat, a: &[Rat]) -> QVec {
    a.iter().map(|x| c * x).collect()
}

/// `a + c*b`, the elimination workhorse.
pub fn add_scaled(a: &[Rat], c: &Rat, b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Lexicographic comparison of rational vectors.
pub fn lex_cmp(a: &[Rat], b: &[Rat]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Scales a nonzero vector by a positive rational so its entries become
/// coprime integers. Direction (sign) is preserved; zero vectors pass through.
pub fn primitive(v: &[Rat]) -> QVec {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    ints.iter()
        .map(|x| Rat::from_integer(x / &gcd))
        .collect()
}

/// Primitive form with a positive leading entry: canonical representative of
/// a *line* (sign-insensitive directions such as lineality generators).
pub fn primitive_line(v: &[Rat]) -> QVec {
    let p = primitive(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => neg(&p),
        _ => p,
    }
}

/// Row-reduces `rows` in place to reduced row echelon form; returns the pivot
/// column of each of the leading nonzero rows. Zero rows sink to the bottom.
pub fn rref(rows: &mut QMat) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        rows[r] = scale(&inv, &rows[r]);
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = -rows[i][c].clone();
                rows[i] = add_scaled(&rows[i], &f, &rows[r]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of the row span.
pub fn rank(rows: &[QVec]) -> usize {
    let mut m: QMat = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : row · x = 0 for every row}`, canonically normalized.
pub fn kernel_basis(rows: &[QVec], n: usize) -> Vec<QVec> {
    let mut m: QMat = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = zeros(n);
        v[f] = Rat::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[f].clone();
        }
        basis.push(primitive_line(&v));
    }
    basis
}

/// Does `target` lie in the linear span of `rows`?
pub fn in_span(rows: &[QVec], target: &[Rat]) -> bool {
    let mut m: QMat = rows.to_vec();
    let r = rref(&mut m).len();
    m.push(target.to_vec());
    rref(&mut m).len() == r
}

/// Solves `sum_j x_j cols[j] = b` for one exact solution, if any.
///
/// `cols` are the columns of the system; the solution is not required to be
/// unique (free coordinates are set to zero).
pub fn solve_columns(cols: &[QVec], b: &[Rat]) -> Option<QVec> {
    let n = b.len();
    let k = cols.len();
    // Augmented matrix [cols | b], eliminated by rows.
    let mut aug: QMat = (0..n)
        .map(|i| {
            let mut row: QVec = cols.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&k) {
        return None; // inconsistent: pivot in the augmented column
    }
    let mut x = zeros(k);
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[k].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &QMat) -> Option<QMat> {
    let n = m.len();
    let mut aug: QMat = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "inverse requires a square matrix");
            let mut r = row.clone();
            r.extend(unit(n, i));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // All pivots must land in the left block; a singular left block pushes
    // some pivot into the adjoined identity columns.
    if pivots.iter().filter(|&&c| c < n).count() < n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Matrix-vector product (rows acting on `v`).
pub fn mat_vec(m: &[QVec], v: &[Rat]) -> QVec {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Row vector times matrix: `(x M)_j = sum_i x_i m[i][j]`.
pub fn vec_mat(x: &[Rat], m: &[QVec]) -> QVec {
    let ncols = m.first().map_or(0, |r| r.len());
    (0..ncols)
        .map(|j| x.iter().zip(m).map(|(xi, row)| xi * &row[j]).sum())
        .collect()
}

/// Transpose of a rectangular matrix.
pub fn transpose(m: &[QVec]) -> QMat {
    let ncols = m.first().map_or(0, |r| r.len());
    (0..ncols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}
