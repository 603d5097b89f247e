//! Dense univariate polynomials over ℚ or 𝔽_p and root extraction in the
//! ground field.
//!
//! Coefficients are stored in ascending degree; the zero polynomial has no
//! coefficients and the leading coefficient is otherwise nonzero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ntheory::{divisors, mul_mod};
use crate::ring::{big, Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![Scalar::one()],
        }
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![Scalar::zero(), Scalar::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>, field: Field) -> Self {
        let mut p = Poly {
            coeffs: coeffs.into_iter().map(|c| field.reduce(c)).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar, field: Field) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }

    pub fn add(&self, other: &Poly, field: Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Scalar::zero();
        let coeffs = (0..n)
            .map(|i| {
                field.add(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Poly::from_coeffs(coeffs, field)
    }

    pub fn sub(&self, other: &Poly, field: Field) -> Poly {
        self.add(&other.scale(&field.from_int(-1), field), field)
    }

    pub fn scale(&self, c: &Scalar, field: Field) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| field.mul(a, c)).collect(), field)
    }

    pub fn mul(&self, other: &Poly, field: Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(out, field)
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Poly, field: Field) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = field.inv(d.leading().unwrap());
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Scalar::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = field.mul(&r[k + dd], &lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = field.sub(&r[k + j], &field.mul(&c, dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::from_coeffs(q, field), Poly::from_coeffs(r, field))
    }

    pub fn monic(&self, field: Field) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&field.inv(l), field),
        }
    }

    pub fn gcd(&self, other: &Poly, field: Field) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b, field);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: BigInt, m: &Poly, field: Field) -> Poly {
        let mut base = self.div_rem(m, field).1;
        let mut acc = Poly::one().div_rem(m, field).1;
        let two = BigInt::from(2);
        while e.is_positive() {
            if e.is_odd() {
                acc = acc.mul(&base, field).div_rem(m, field).1;
            }
            base = base.mul(&base, field).div_rem(m, field).1;
            e /= &two;
        }
        acc
    }

    /// The distinct roots lying in the ground field, ascending.
    pub fn roots(&self, field: Field) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots = match field {
            Field::Rationals => self.rational_roots(),
            Field::Fp(p) if p < 1 << 16 => self.roots_by_scan(p),
            Field::Fp(p) => self.roots_by_splitting(p),
        };
        roots.sort();
        roots.dedup();
        roots
    }

    fn rational_roots(&self) -> Vec<Scalar> {
        let field = Field::Rationals;
        // Clear denominators.
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * big(lcm.clone())).to_integer())
            .collect();
        let mut roots = Vec::new();
        if ints.first().is_some_and(Zero::is_zero) {
            roots.push(Scalar::zero());
            while ints.first().is_some_and(Zero::is_zero) {
                ints.remove(0);
            }
        }
        if ints.len() <= 1 {
            return roots;
        }
        let c0 = ints[0].clone();
        let cn = ints.last().unwrap().clone();
        let stripped = Poly::from_coeffs(ints.iter().cloned().map(big).collect(), field);
        let num_divs = divisors(&c0);
        let den_divs = divisors(&cn);
        for a in &num_divs {
            for b in &den_divs {
                if !a.gcd(b).is_one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = Scalar::new(a * BigInt::from(sign), b.clone());
                    if stripped.eval(&cand, field).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots
    }

    fn roots_by_scan(&self, p: u64) -> Vec<Scalar> {
        let coeffs: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| c.numer().to_u64().expect("reduced coefficient"))
            .collect();
        (0..p)
            .filter(|&x| {
                let mut acc = 0u64;
                for &c in coeffs.iter().rev() {
                    acc = (mul_mod(acc, x, p) + c) % p;
                }
                acc == 0
            })
            .map(|x| big(BigInt::from(x)))
            .collect()
    }

    /// Rabin's method: gcd with x^p − x, then split by (x+a)^((p−1)/2) − 1.
    fn roots_by_splitting(&self, p: u64) -> Vec<Scalar> {
        let field = Field::Fp(p);
        let f = self.monic(field);
        let xp = Poly::x().pow_mod(BigInt::from(p), &f, field);
        let g = xp.sub(&Poly::x(), field).gcd(&f, field);
        let mut roots = Vec::new();
        let mut stack = vec![g];
        let half = BigInt::from((p - 1) / 2);
        while let Some(h) = stack.pop() {
            match h.degree() {
                None | Some(0) => {}
                Some(1) => roots.push(field.neg(&h.coeffs[0])),
                Some(d) => {
                    let mut a = 0u64;
                    loop {
                        let shift = Poly::from_coeffs(vec![big(BigInt::from(a)), Scalar::one()], field);
                        let s = shift.pow_mod(half.clone(), &h, field).sub(&Poly::one(), field);
                        let k = s.gcd(&h, field);
                        let kd = k.degree().unwrap_or(0);
                        if kd > 0 && kd < d {
                            let (other, _) = h.div_rem(&k, field);
                            stack.push(k);
                            stack.push(other.monic(field));
                            break;
                        }
                        a += 1;
                    }
                }
            }
        }
        roots
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn poly(coeffs: &[i64], field: Field) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect(), field)
    }

    #[test]
    fn rational_roots_of_cubic() {
        // (2x - 1)(x + 3) x = 2x^3 + 5x^2 - 3x
        let p = poly(&[0, -3, 5, 2], Field::Rationals);
        assert_eq!(
            p.roots(Field::Rationals),
            vec![int(-3), int(0), Scalar::new(1.into(), 2.into())]
        );
        // x^2 - 2 has no rational roots
        assert!(poly(&[-2, 0, 1], Field::Rationals).roots(Field::Rationals).is_empty());
    }

    #[test]
    fn roots_mod_seven() {
        // x^2 - 2 = (x - 3)(x - 4) mod 7
        let f = Field::Fp(7);
        assert_eq!(poly(&[-2, 0, 1], f).roots(f), vec![int(3), int(4)]);
        // x^2 + 1 irreducible mod 3
        assert!(poly(&[1, 0, 1], Field::Fp(3)).roots(Field::Fp(3)).is_empty());
    }

    #[test]
    fn splitting_agrees_with_scan() {
        let p = 65_537u64;
        let f = Field::Fp(p);
        // (x - 5)(x - 70000 mod p)(x^2 + 3)
        let a = poly(&[-5, 1], f)
            .mul(&poly(&[-(70_000 % 65_537), 1], f), f)
            .mul(&poly(&[3, 0, 1], f), f);
        let mut expected = a.roots_by_scan(p);
        expected.sort();
        let mut got = a.roots_by_splitting(p);
        got.sort();
        assert_eq!(got, expected);
        assert!(got.contains(&int(5)));
    }

    #[test]
    fn pow_mod_and_division() {
        let f = Field::Rationals;
        let a = poly(&[1, 2, 1], f);
        let b = poly(&[1, 1], f);
        let (q, r) = a.div_rem(&b, f);
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(a.gcd(&poly(&[-1, 1], f).mul(&b, f), f), b);
    }
}
