//! Smith normal form `u · m · v = diag(d₁, …, d_r)` with `dᵢ | dᵢ₊₁`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::hnf::{to_int_rows, IntRow};
use crate::matrix::Matrix;
use crate::ring::{big, Field, RingSpec, Scalar};

#[derive(Debug, Clone)]
pub struct Smith {
    /// Nonzero invariant factors, normalized to canonical associates.
    pub divisors: Vec<BigInt>,
    pub u: Matrix,
    pub v: Matrix,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    pub fn all_units(&self) -> bool {
        self.divisors.iter().all(One::is_one)
    }
}

fn identity_rows(n: usize) -> Vec<IntRow> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_axpy(rows: &mut [IntRow], target: usize, src: usize, q: &BigInt) {
    // row_target -= q · row_src
    let s = rows[src].clone();
    for (x, y) in rows[target].iter_mut().zip(&s) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn col_axpy(rows: &mut [IntRow], target: usize, src: usize, q: &BigInt) {
    for row in rows.iter_mut() {
        if !row[src].is_zero() {
            let v = q * &row[src];
            row[target] -= v;
        }
    }
}

fn swap_cols(rows: &mut [IntRow], a: usize, b: usize) {
    for row in rows.iter_mut() {
        row.swap(a, b);
    }
}

struct IntSmith {
    diag: Vec<BigInt>,
    u: Vec<IntRow>,
    v: Vec<IntRow>,
}

fn int_smith(mut a: Vec<IntRow>, cols: usize) -> IntSmith {
    let rows = a.len();
    let mut u = identity_rows(rows);
    let mut v = identity_rows(cols);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // Smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // Move the smallest remaining entry of row/column t to the pivot.
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                    u.swap(t, best.0);
                }
                if best.1 != t {
                    swap_cols(&mut a, t, best.1);
                    swap_cols(&mut v, t, best.1);
                }
                continue;
            }
            // Row and column are clear; enforce divisibility of the trailing block.
            let d = a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|x| !(x % &d).is_zero()));
            match offender {
                Some(i) => {
                    let neg = -BigInt::one();
                    row_axpy(&mut a, t, i, &neg);
                    row_axpy(&mut u, t, i, &neg);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -&*x;
            }
        }
        diag.push(a[t][t].clone());
    }
    IntSmith { diag, u, v }
}

fn to_matrix(rows: &[IntRow], cols: usize) -> Matrix {
    Matrix::from_rows(cols, rows.iter().map(|r| r.iter().cloned().map(big).collect()).collect())
}

fn field_smith(field: Field, m: &Matrix) -> Smith {
    // Full-pivot elimination: rref on rows, then a column permutation and
    // column clearing bring the pivots onto the diagonal.
    let ech = super::field::rref(field, m);
    let r = ech.rank();
    let cols = m.cols();
    let mut v = Matrix::identity(cols);
    let mut e = ech.e.clone();
    for (k, &c) in ech.pivots.iter().enumerate() {
        e.swap_cols(k, c);
        v.swap_cols(k, c);
    }
    for k in 0..r {
        for j in r..cols {
            let f = e[(k, j)].clone();
            if f.is_zero() {
                continue;
            }
            for i in 0..cols {
                let val = field.mul(&f, &v[(i, k)]);
                v[(i, j)] = field.sub(&v[(i, j)], &val);
            }
            for i in 0..e.rows() {
                let val = field.mul(&f, &e[(i, k)]);
                e[(i, j)] = field.sub(&e[(i, j)], &val);
            }
        }
    }
    Smith {
        divisors: vec![BigInt::one(); r],
        u: ech.u,
        v,
    }
}

pub fn snf(ring: &RingSpec, m: &Matrix) -> Smith {
    let field = ring.fraction_field();
    if let RingSpec::PrimeField { .. } = ring {
        return field_smith(field, m);
    }
    let (rows, scales) = to_int_rows(m);
    let is = int_smith(rows, m.cols());
    let mut u = to_matrix(&is.u, m.rows());
    for i in 0..u.rows() {
        for (j, s) in scales.iter().enumerate() {
            if !u[(i, j)].is_zero() {
                u[(i, j)] = &u[(i, j)] * big(s.clone());
            }
        }
    }
    let mut divisors = Vec::with_capacity(is.diag.len());
    for (k, d) in is.diag.iter().enumerate() {
        let norm = ring.normalize_divisor(d);
        let unit = d / &norm;
        if !unit.is_one() {
            let inv = Scalar::new(BigInt::one(), unit);
            for x in u.row_mut(k) {
                *x = &*x * &inv;
            }
        }
        divisors.push(norm);
    }
    Smith {
        divisors,
        u,
        v: to_matrix(&is.v, m.cols()),
    }
}
