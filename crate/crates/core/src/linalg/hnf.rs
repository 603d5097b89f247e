//! Row Hermite normal form over ℤ, ℤ[S⁻¹], ℚ and 𝔽_p.
//!
//! The integer kernel runs on `BigInt` rows and records the unimodular
//! transform. Localized and rational inputs are cleared of denominators by
//! unit row scalings, echelonized over ℤ, and then normalized: each pivot is
//! divided by its unit part and entries above a pivot `d` are reduced to the
//! residue system `[0, d)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::rref;
use crate::matrix::Matrix;
use crate::ring::{big, RingSpec, Scalar};

pub(crate) type IntRow = Vec<BigInt>;

pub(crate) struct IntEchelon {
    pub h: Vec<IntRow>,
    pub u: Vec<IntRow>,
    pub pivots: Vec<usize>,
}

fn combine(rows: &mut [IntRow], target: usize, src: usize, a: &BigInt, b: &BigInt) {
    // rows[target] = a·rows[target] + b·rows[src]
    let s = rows[src].clone();
    for (x, y) in rows[target].iter_mut().zip(&s) {
        *x = &*x * a + y * b;
    }
}

fn pair_transform(rows: &mut [IntRow], r: usize, i: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
    // [row_r; row_i] ← [[s, t], [u, v]] · [row_r; row_i]
    let rr = rows[r].clone();
    let ri = rows[i].clone();
    for k in 0..rr.len() {
        rows[r][k] = s * &rr[k] + t * &ri[k];
        rows[i][k] = u * &rr[k] + v * &ri[k];
    }
}

/// Echelon form over ℤ with positive pivots, entries above each pivot in `[0, pivot)`.
pub(crate) fn int_hnf(m: Vec<IntRow>, cols: usize) -> IntEchelon {
    let rows = m.len();
    let mut h = m;
    let mut u: Vec<IntRow> = (0..rows)
        .map(|i| (0..rows).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h[i][c].is_zero() {
                continue;
            }
            if h[r][c].is_zero() {
                h.swap(r, i);
                u.swap(r, i);
                continue;
            }
            let a = h[r][c].clone();
            let b = h[i][c].clone();
            if (&b % &a).is_zero() {
                let q = -(&b / &a);
                combine(&mut h, i, r, &BigInt::one(), &q);
                combine(&mut u, i, r, &BigInt::one(), &q);
                continue;
            }
            let e = a.extended_gcd(&b);
            let (s, t) = (e.x, e.y);
            let ua = -(&b / &e.gcd);
            let va = &a / &e.gcd;
            pair_transform(&mut h, r, i, &s, &t, &ua, &va);
            pair_transform(&mut u, r, i, &s, &t, &ua, &va);
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -&*x;
            }
        }
        let d = h[r][c].clone();
        for k in 0..r {
            let q = h[k][c].div_floor(&d);
            if !q.is_zero() {
                let nq = -q;
                combine(&mut h, k, r, &BigInt::one(), &nq);
                combine(&mut u, k, r, &BigInt::one(), &nq);
            }
        }
        pivots.push(c);
        r += 1;
    }
    IntEchelon { h, u, pivots }
}

/// Row Hermite normal form: `u · m = [h; 0]` with `u` invertible over the
/// ring and `h` having `rank` nonzero rows.
#[derive(Debug, Clone)]
pub struct Hnf {
    pub h: Matrix,
    pub u: Matrix,
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Lowest common denominator of a row, a unit whenever the row lies in the ring.
pub(crate) fn row_denominator(row: &[Scalar]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub(crate) fn to_int_rows(m: &Matrix) -> (Vec<IntRow>, Vec<BigInt>) {
    let mut scales = Vec::with_capacity(m.rows());
    let rows = (0..m.rows())
        .map(|i| {
            let d = row_denominator(m.row(i));
            let row = m.row(i).iter().map(|x| (x * big(d.clone())).to_integer()).collect();
            scales.push(d);
            row
        })
        .collect();
    (rows, scales)
}

fn int_rows_to_matrix(rows: &[IntRow], cols: usize) -> Matrix {
    Matrix::from_rows(cols, rows.iter().map(|r| r.iter().cloned().map(big).collect()).collect())
}

/// The unit part of a positive integer pivot: its S-part over ℤ[S⁻¹], the
/// whole value over ℚ, and 1 over ℤ.
fn unit_part(ring: &RingSpec, d: &BigInt) -> BigInt {
    &d.abs() / ring.normalize_divisor(d)
}

/// Canonical residue of `a` modulo the integer `d` (coprime to every unit prime).
fn residue(ring: &RingSpec, a: &Scalar, d: &BigInt) -> Scalar {
    if matches!(ring, RingSpec::Rationals) || d.is_one() {
        return Scalar::zero();
    }
    let num = a.numer().mod_floor(d);
    let den = a.denom().mod_floor(d);
    let inv = den
        .extended_gcd(d)
        .x
        .mod_floor(d);
    big((num * inv).mod_floor(d))
}

pub fn hnf(ring: &RingSpec, m: &Matrix) -> Hnf {
    let field = ring.fraction_field();
    if let RingSpec::PrimeField { .. } = ring {
        let ech = rref(field, m);
        let r = ech.rank();
        return Hnf {
            h: ech.e.select_rows(&(0..r).collect::<Vec<_>>()),
            u: ech.u,
            pivots: ech.pivots,
        };
    }
    let cols = m.cols();
    let (rows, scales) = to_int_rows(m);
    let ie = int_hnf(rows, cols);
    let r = ie.pivots.len();
    let mut h = int_rows_to_matrix(&ie.h[..r], cols);
    // u = U_z · diag(scales)
    let mut u = int_rows_to_matrix(&ie.u, m.rows());
    for i in 0..u.rows() {
        for (j, s) in scales.iter().enumerate() {
            if !u[(i, j)].is_zero() {
                u[(i, j)] = &u[(i, j)] * big(s.clone());
            }
        }
    }
    for (k, &c) in ie.pivots.iter().enumerate() {
        let unit = unit_part(ring, h[(k, c)].numer());
        if !unit.is_one() {
            let inv = Scalar::new(BigInt::one(), unit);
            for x in h.row_mut(k).iter_mut().chain(u.row_mut(k).iter_mut()) {
                *x = &*x * &inv;
            }
        }
    }
    for (k, &c) in ie.pivots.iter().enumerate() {
        let d = h[(k, c)].to_integer();
        for j in 0..k {
            let a = h[(j, c)].clone();
            let target = residue(ring, &a, &d);
            let t = (&a - &target) / big(d.clone());
            if t.is_zero() {
                continue;
            }
            for col in 0..cols {
                let v = &t * &h[(k, col)];
                if !v.is_zero() {
                    h[(j, col)] = &h[(j, col)] - v;
                }
            }
            for col in 0..u.cols() {
                let v = &t * &u[(k, col)];
                if !v.is_zero() {
                    u[(j, col)] = &u[(j, col)] - v;
                }
            }
        }
    }
    debug_assert!(h.entries().all(|x| ring.contains(x)));
    Hnf {
        h,
        u,
        pivots: ie.pivots,
    }
}

/// Convenience used by lattice code: pivot positions as integers.
pub(crate) fn pivot_values(h: &Matrix, pivots: &[usize]) -> Vec<BigInt> {
    pivots
        .iter()
        .enumerate()
        .map(|(k, &c)| h[(k, c)].to_integer())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    #[test]
    fn small_integer_example() {
        // Hand reduction: rows (2,4),(0,3); reduce 4 mod 3 → 1.
        let m = Matrix::from_i64(2, &[&[2, 4], &[0, 3]]);
        let res = hnf(&RingSpec::Integers, &m);
        assert_eq!(res.h, Matrix::from_i64(2, &[&[2, 1], &[0, 3]]));
        assert_eq!(res.u.mul(&m, crate::ring::Field::Rationals), res.h);
    }

    #[test]
    fn identity_and_zero_rows() {
        let id = Matrix::identity(3);
        assert_eq!(hnf(&RingSpec::Integers, &id).h, id);
        let z = Matrix::from_i64(2, &[&[0, 0]]);
        let res = hnf(&RingSpec::Integers, &z);
        assert_eq!(res.h.rows(), 0);
        assert_eq!(res.h.cols(), 2);
    }

    #[test]
    fn localized_pivots_drop_unit_factors() {
        let ring = RingSpec::localized(&[2]).unwrap();
        let m = Matrix::from_i64(2, &[&[6, 1], &[0, 4]]);
        let res = hnf(&ring, &m);
        // 6 = 2·3 → pivot 3; 4 is a unit → pivot 1 and the entry above is cleared.
        assert_eq!(res.h, Matrix::from_i64(2, &[&[3, 0], &[0, 1]]));
        let prod = res.u.mul(&m, crate::ring::Field::Rationals);
        assert_eq!(prod.select_rows(&[0, 1]), res.h);
    }

    #[test]
    fn rationals_give_rref() {
        let m = Matrix::from_i64(3, &[&[2, 4, 1], &[1, 2, 5]]);
        let res = hnf(&RingSpec::Rationals, &m);
        assert_eq!(res.h[(0, 0)], int(1));
        assert_eq!(res.h[(1, 0)], int(0));
        assert_eq!(res.h[(0, 2)], int(0));
        assert_eq!(res.h[(1, 2)], int(1));
    }
}
