//! Gaussian elimination over ℚ and 𝔽_p.

use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::{Field, Scalar};

/// Reduced row echelon form `e = u · m`, zero rows at the bottom.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub e: Matrix,
    pub u: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref(field: Field, m: &Matrix) -> Echelon {
    let rows = m.rows();
    let cols = m.cols();
    let mut e = m.clone();
    e.reduce_in(field);
    let mut u = Matrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !e[(i, c)].is_zero()) else {
            continue;
        };
        e.swap_rows(r, pr);
        u.swap_rows(r, pr);
        let inv = field.inv(&e[(r, c)]);
        scale_row(&mut e, r, &inv, field);
        scale_row(&mut u, r, &inv, field);
        for i in 0..rows {
            if i != r && !e[(i, c)].is_zero() {
                let factor = e[(i, c)].clone();
                axpy_row(&mut e, i, r, &factor, field);
                axpy_row(&mut u, i, r, &factor, field);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { e, u, pivots }
}

fn scale_row(m: &mut Matrix, i: usize, c: &Scalar, field: Field) {
    for x in m.row_mut(i) {
        if !x.is_zero() {
            *x = field.mul(x, c);
        }
    }
}

/// row_i -= factor · row_src
fn axpy_row(m: &mut Matrix, i: usize, src: usize, factor: &Scalar, field: Field) {
    let src_row = m.row(src).to_vec();
    let row = m.row_mut(i);
    for (x, s) in row.iter_mut().zip(&src_row) {
        if !s.is_zero() {
            *x = field.sub(x, &field.mul(factor, s));
        }
    }
}

pub fn rank(field: Field, m: &Matrix) -> usize {
    rref(field, m).rank()
}

/// Basis (in echelon form) of `{x : x · m = 0}`.
pub fn left_kernel(field: Field, m: &Matrix) -> Matrix {
    let ech = rref(field, m);
    let r = ech.rank();
    let idx: Vec<usize> = (r..m.rows()).collect();
    let k = ech.u.select_rows(&idx);
    let k_ech = rref(field, &k);
    k_ech.e.select_rows(&(0..k_ech.rank()).collect::<Vec<_>>())
}

/// Some `x` with `x · m = b`, if one exists.
pub fn solve_left(field: Field, m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), m.cols());
    // Work on the transposed system mᵀ xᵀ = bᵀ via the augmented matrix.
    let aug = m.transpose().hstack(&Matrix::from_rows(1, b.iter().map(|x| vec![x.clone()]).collect()));
    let ech = rref(field, &aug);
    let n = m.rows();
    if ech.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (row, &pc) in ech.pivots.iter().enumerate() {
        x[pc] = ech.e[(row, n)].clone();
    }
    Some(x)
}

pub fn inverse(field: Field, m: &Matrix) -> Option<Matrix> {
    assert!(m.is_square());
    let ech = rref(field, m);
    if ech.rank() == m.rows() {
        Some(ech.u)
    } else {
        None
    }
}

/// Characteristic polynomial `det(x·I − m)` via Hessenberg reduction.
pub fn char_poly(field: Field, m: &Matrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    let mut h = m.clone();
    h.reduce_in(field);
    for col in 0..n.saturating_sub(2) {
        let target = col + 1;
        let Some(piv) = (target..n).find(|&i| !h[(i, col)].is_zero()) else {
            continue;
        };
        if piv != target {
            h.swap_rows(piv, target);
            h.swap_cols(piv, target);
        }
        let t = h[(target, col)].clone();
        for i in target + 1..n {
            if h[(i, col)].is_zero() {
                continue;
            }
            let u = field.div(&h[(i, col)], &t);
            // row_i -= u · row_target; col_target += u · col_i
            for j in 0..n {
                let v = field.mul(&u, &h[(target, j)]);
                h[(i, j)] = field.sub(&h[(i, j)], &v);
            }
            for j in 0..n {
                let v = field.mul(&u, &h[(j, i)]);
                h[(j, target)] = field.add(&h[(j, target)], &v);
            }
        }
    }
    let mut polys: Vec<Poly> = vec![Poly::one()];
    for k in 1..=n {
        let x_minus = Poly::from_coeffs(vec![field.neg(&h[(k - 1, k - 1)]), Scalar::one()], field);
        let mut pk = x_minus.mul(&polys[k - 1], field);
        let mut t = Scalar::one();
        for i in 1..k {
            t = field.mul(&t, &h[(k - i, k - i - 1)]);
            let coeff = field.mul(&t, &h[(k - i - 1, k - 1)]);
            if !coeff.is_zero() {
                pk = pk.sub(&polys[k - i - 1].scale(&coeff, field), field);
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    #[test]
    fn kernel_and_solve() {
        let m = Matrix::from_i64(1, &[&[1], &[1]]);
        let k = left_kernel(Field::Rationals, &m);
        assert_eq!(k, Matrix::from_i64(2, &[&[1, -1]]));
        let x = solve_left(Field::Rationals, &Matrix::from_i64(2, &[&[1, 2], &[0, 3]]), &[int(1), int(8)]).unwrap();
        assert_eq!(x, vec![int(1), int(2)]);
        assert!(solve_left(Field::Rationals, &Matrix::from_i64(2, &[&[1, 1]]), &[int(1), int(2)]).is_none());
    }

    #[test]
    fn inverse_mod_p() {
        let m = Matrix::from_i64(2, &[&[1, 2], &[3, 4]]);
        let inv = inverse(Field::Fp(7), &m).unwrap();
        assert_eq!(m.mul(&inv, Field::Fp(7)), Matrix::identity(2));
        assert!(inverse(Field::Fp(2), &Matrix::from_i64(2, &[&[1, 1], &[1, 1]])).is_none());
    }

    /// det(xI − m) evaluated at integer points by plain elimination.
    fn det_oracle(m: &Matrix, x: i64) -> Scalar {
        let n = m.rows();
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { int(x) - &m[(i, j)] } else { -m[(i, j)].clone() })
                    .collect()
            })
            .collect();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= &a[c][c];
            for i in c + 1..n {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let v = &f * &a[c][j];
                    a[i][j] -= v;
                }
            }
        }
        det
    }

    #[test]
    fn char_poly_matches_determinant_oracle() {
        let m = Matrix::from_i64(
            4,
            &[&[0, 1, 0, 2], &[3, 0, -1, 0], &[0, 5, 0, 1], &[1, 0, 2, 7]],
        );
        let cp = char_poly(Field::Rationals, &m);
        assert_eq!(cp.degree(), Some(4));
        for x in -3..=3 {
            assert_eq!(cp.eval(&int(x), Field::Rationals), det_oracle(&m, x));
        }
    }
}
