//! Reducedness and residue fields of `A/pA` at a finite list of primes.
//!
//! The binomial property quantifies over every prime; a verdict here only
//! covers the primes actually tested.

use crate::coalgebra::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg::field::{left_kernel, solve_left};
use crate::matrix::Matrix;
use crate::ring::RingSpec;

pub const DEFAULT_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeVerdict {
    pub p: u64,
    pub reduced: bool,
    pub residue_fields_prime: bool,
    pub nilradical_rank: usize,
    /// `p` is a unit of the ground ring, so `A/pA = 0`.
    pub vacuous: bool,
}

impl PrimeVerdict {
    pub fn binomial(&self) -> bool {
        self.reduced && self.residue_fields_prime
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialReport {
    pub algebra: AlgebraPresentation,
    pub tested_primes: Vec<u64>,
    pub per_prime: Vec<PrimeVerdict>,
}

impl BinomialReport {
    /// Conjunction over the tested primes only.
    pub fn binomial_up_to_tested_primes(&self) -> bool {
        self.per_prime.iter().all(PrimeVerdict::binomial)
    }
}

/// `A/pA` over `𝔽_p`.
pub fn reduce_mod_p(a: &AlgebraPresentation, p: u64) -> Result<AlgebraPresentation> {
    let target = RingSpec::prime_field(p)?;
    if a.ring().inverts(p) {
        return Err(Error::PrimeInverted(p));
    }
    a.base_change(&target)
}

fn frobenius_and_nilradical(a: &AlgebraPresentation, p: u64) -> Result<(AlgebraPresentation, Matrix, Lattice)> {
    let report = a.validate();
    if !report.overall() {
        return Err(Error::InvalidAlgebra(report.to_string()));
    }
    let ap = reduce_mod_p(a, p)?;
    let f = ap.frobenius_matrix()?;
    let nil = Lattice::span(ap.ring(), &ap.radical())?;
    Ok((ap, f, nil))
}

/// Nilradical of `A/pA`, computed as `ker F^k` with `p^k ≥ rank`.
pub fn nilradical_mod_p(a: &AlgebraPresentation, p: u64) -> Result<Lattice> {
    Ok(frobenius_and_nilradical(a, p)?.2)
}

fn check_prime(a: &AlgebraPresentation, p: u64) -> Result<PrimeVerdict> {
    if a.ring().inverts(p) {
        return Ok(PrimeVerdict { p, reduced: true, residue_fields_prime: true, nilradical_rank: 0, vacuous: true });
    }
    let (ap, f, nil) = frobenius_and_nilradical(a, p)?;
    let field = ap.field();
    // Frobenius is the identity on A/N iff every e_i^p − e_i lies in N.
    let moved = f.sub(&Matrix::identity(ap.rank()), field);
    let residue_fields_prime = if nil.rank() == 0 {
        moved.is_zero()
    } else {
        (0..moved.rows()).all(|i| solve_left(field, nil.basis(), moved.row(i)).is_some())
    };
    Ok(PrimeVerdict {
        p,
        reduced: nil.rank() == 0,
        residue_fields_prime,
        nilradical_rank: nil.rank(),
        vacuous: false,
    })
}

pub fn binomial_check(a: &AlgebraPresentation, primes: &[u64]) -> Result<BinomialReport> {
    let mut tested: Vec<u64> = primes.to_vec();
    tested.sort_unstable();
    tested.dedup();
    let per_prime = tested.iter().map(|&p| check_prime(a, p)).collect::<Result<Vec<_>>>()?;
    Ok(BinomialReport { algebra: a.clone(), tested_primes: tested, per_prime })
}

/// Kernel of `F^k` for an explicit power, for callers that need a stage of
/// the Frobenius flag.
pub fn frobenius_kernel(ap: &AlgebraPresentation, k: u32) -> Result<Matrix> {
    let f = ap.frobenius_matrix()?;
    let field = ap.field();
    let mut fk = Matrix::identity(ap.rank());
    for _ in 0..k {
        fk = fk.mul(&f, field);
    }
    Ok(left_kernel(field, &fk))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{dual_algebra, set_like, direct_sum, dual_of_algebra, tensor};
    use crate::ring::{int, Scalar};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn sqrt2() -> AlgebraPresentation {
        AlgebraPresentation::monogenic(&z(), &[-2, 0]).unwrap()
    }

    /// Elements of `A/pA` enumerated as coordinate vectors.
    fn all_elements(n: usize, p: u64) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| (0..p as i64).map(move |c| [v.clone(), vec![int(c)]].concat()))
                .collect();
        }
        out
    }

    // Oracle: count nilpotents by brute force; the nilradical has p^r of them.
    fn brute_nilradical_rank(a: &AlgebraPresentation, p: u64) -> usize {
        let ap = reduce_mod_p(a, p).unwrap();
        let n = ap.rank();
        let count = all_elements(n, p)
            .into_iter()
            .filter(|x| ap.power(x, n as u64).iter().all(Zero::is_zero))
            .count();
        let mut r = 0;
        while (p as usize).pow(r) < count {
            r += 1;
        }
        assert_eq!((p as usize).pow(r), count);
        r as usize
    }

    // Oracle: the solutions of x^p = x form a copy of 𝔽_p^m, m the number of
    // residue fields, so all are 𝔽_p iff there are p^(n - r) of them.
    fn brute_residue_prime(a: &AlgebraPresentation, p: u64) -> bool {
        let ap = reduce_mod_p(a, p).unwrap();
        let n = ap.rank();
        let r = brute_nilradical_rank(a, p);
        let fixed = all_elements(n, p).into_iter().filter(|x| &ap.power(x, p) == x).count();
        fixed == (p as usize).pow((n - r) as u32)
    }

    #[test]
    fn nilradical_examples() {
        let zz = AlgebraPresentation::split(&z(), 2);
        assert_eq!(nilradical_mod_p(&zz, 5).unwrap().rank(), 0);
        let dual = AlgebraPresentation::truncated(&z(), 2);
        let f2 = RingSpec::prime_field(2).unwrap();
        let x = Lattice::from_vectors(&f2, 2, &[vec![int(0), int(1)]]).unwrap();
        assert_eq!(nilradical_mod_p(&dual, 2).unwrap(), x);
        assert_eq!(nilradical_mod_p(&sqrt2(), 2).unwrap(), x);
        let loc = AlgebraPresentation::truncated(&RingSpec::localized(&[2]).unwrap(), 2);
        assert!(matches!(nilradical_mod_p(&loc, 2), Err(Error::PrimeInverted(2))));
        assert_eq!(nilradical_mod_p(&loc, 3).unwrap().rank(), 1);
    }

    #[test]
    fn check_examples() {
        let zz = AlgebraPresentation::split(&z(), 2);
        let r = binomial_check(&zz, &DEFAULT_PRIMES).unwrap();
        assert!(r.binomial_up_to_tested_primes());
        assert_eq!(r.tested_primes, DEFAULT_PRIMES.to_vec());

        let r = binomial_check(&sqrt2(), &[2, 3]).unwrap();
        assert!(!r.binomial_up_to_tested_primes());
        assert!(!r.per_prime[0].reduced);
        assert!(r.per_prime[0].residue_fields_prime);
        assert!(r.per_prime[1].reduced);
        assert!(!r.per_prime[1].residue_fields_prime);

        let r = binomial_check(&AlgebraPresentation::truncated(&z(), 2), &[2, 3]).unwrap();
        for v in &r.per_prime {
            assert!(!v.reduced && v.residue_fields_prime && v.nilradical_rank == 1);
        }
    }

    #[test]
    fn inverted_primes_are_vacuous() {
        let a = AlgebraPresentation::truncated(&RingSpec::localized(&[2]).unwrap(), 2);
        let r = binomial_check(&a, &[2, 3]).unwrap();
        assert!(r.per_prime[0].vacuous && r.per_prime[0].binomial());
        assert!(!r.per_prime[1].reduced);
    }

    #[test]
    fn brute_force_agreement() {
        let algebras = [
            sqrt2(),
            AlgebraPresentation::truncated(&z(), 3),
            AlgebraPresentation::split(&z(), 3),
            AlgebraPresentation::monogenic(&z(), &[1, 0]).unwrap(),
            AlgebraPresentation::monogenic(&z(), &[0, -2]).unwrap(),
            AlgebraPresentation::monogenic(&z(), &[1, 1]).unwrap(),
            AlgebraPresentation::tensor(&sqrt2(), &AlgebraPresentation::truncated(&z(), 2)).unwrap(),
        ];
        for a in &algebras {
            for p in [2, 3, 5] {
                let v = binomial_check(a, &[p]).unwrap().per_prime[0].clone();
                assert_eq!(v.nilradical_rank, brute_nilradical_rank(a, p), "{a:?} at {p}");
                assert_eq!(v.residue_fields_prime, brute_residue_prime(a, p), "{a:?} at {p}");
            }
        }
    }

    #[test]
    fn set_like_duals_are_reduced_everywhere() {
        let a = dual_algebra(&set_like(&z(), &["a", "b", "c"]));
        for v in binomial_check(&a, &DEFAULT_PRIMES).unwrap().per_prime {
            assert!(v.binomial() && v.nilradical_rank == 0);
        }
    }

    #[test]
    fn pointed_duals_have_prime_residue_fields() {
        let t = |k| dual_of_algebra(&AlgebraPresentation::truncated(&z(), k)).unwrap();
        let cs = [
            t(3),
            direct_sum(&t(2), &set_like(&z(), &["a"])).unwrap(),
            tensor(&t(2), &t(3)).unwrap(),
        ];
        for c in &cs {
            let r = binomial_check(&dual_algebra(c), &DEFAULT_PRIMES).unwrap();
            assert!(r.per_prime.iter().all(|v| v.residue_fields_prime));
        }
    }

    #[test]
    fn frobenius_kernel_flag() {
        let ap = reduce_mod_p(&AlgebraPresentation::truncated(&z(), 4), 2).unwrap();
        let ranks: Vec<usize> = (0..3).map(|k| frobenius_kernel(&ap, k).unwrap().rows()).collect();
        assert_eq!(ranks, vec![0, 2, 3]);
    }

    proptest! {
        #[test]
        fn frobenius_is_multiplicative(
            xs in proptest::collection::vec(-4i64..5, 4),
            ys in proptest::collection::vec(-4i64..5, 4),
            p in prop::sample::select(vec![2u64, 3, 5]),
        ) {
            let a = AlgebraPresentation::tensor(&sqrt2(), &AlgebraPresentation::truncated(&z(), 2)).unwrap();
            let ap = reduce_mod_p(&a, p).unwrap();
            let field = ap.field();
            let f = ap.frobenius_matrix().unwrap();
            let x: Vec<Scalar> = xs.iter().map(|&c| field.reduce(int(c))).collect();
            let y: Vec<Scalar> = ys.iter().map(|&c| field.reduce(int(c))).collect();
            let xy = ap.multiply(&x, &y);
            prop_assert_eq!(f.apply(&xy, field), ap.multiply(&f.apply(&x, field), &f.apply(&y, field)));
            prop_assert_eq!(f.apply(&x, field), ap.power(&x, p));
        }
    }
}
