//! Ground rings ℤ, ℚ, 𝔽_p and ℤ[S⁻¹], together with their fraction fields.
//!
//! Every scalar in the crate is a [`Scalar`] (an arbitrary-precision
//! fraction). Its meaning is fixed by the [`RingSpec`] carried by the owning
//! structure: for 𝔽_p a scalar is an integer in `[0, p)`, for ℤ[S⁻¹] a
//! fraction whose denominator factors over S.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ntheory::{inv_mod, is_prime_u64};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn big(n: BigInt) -> Scalar {
    Scalar::from_integer(n)
}

/// Canonical decimal rendering: `"a"` for integers, `"a/b"` in lowest terms otherwise.
pub fn scalar_to_string(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    match text.split_once('/') {
        None => text.parse::<BigInt>().ok().map(big),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Scalar::new(n, d))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    Integers,
    Rationals,
    PrimeField { p: u64 },
    /// ℤ[S⁻¹]; primes sorted ascending and distinct.
    Localized { inverted_primes: Vec<u64> },
}

/// The fraction field of a ground ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Fp(u64),
}

impl RingSpec {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(RingSpec::PrimeField { p })
    }

    pub fn localized(primes: &[u64]) -> Result<Self> {
        let mut sorted = primes.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidRing(format!(
                    "inverted prime {} listed twice",
                    w[0]
                )));
            }
        }
        if let Some(&bad) = sorted.iter().find(|&&p| !is_prime_u64(p)) {
            return Err(Error::InvalidRing(format!("{bad} is not prime")));
        }
        Ok(RingSpec::Localized {
            inverted_primes: sorted,
        })
    }

    pub fn fraction_field(&self) -> Field {
        match self {
            RingSpec::PrimeField { p } => Field::Fp(*p),
            _ => Field::Rationals,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingSpec::Rationals | RingSpec::PrimeField { .. })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            RingSpec::PrimeField { p } => *p,
            _ => 0,
        }
    }

    /// Whether the rational prime `p` is a unit of the ring.
    pub fn inverts(&self, p: u64) -> bool {
        match self {
            RingSpec::Integers => false,
            RingSpec::Rationals => true,
            RingSpec::PrimeField { p: q } => *q != p,
            RingSpec::Localized { inverted_primes } => inverted_primes.contains(&p),
        }
    }

    fn inverts_big(&self, p: &BigInt) -> bool {
        p.to_u64().is_some_and(|p| self.inverts(p)) || matches!(self, RingSpec::Rationals)
    }

    /// Short human-readable symbol, e.g. `Z`, `Q`, `F_7`, `Z[1/2,1/3]`.
    pub fn symbol(&self) -> String {
        match self {
            RingSpec::Integers => "Z".into(),
            RingSpec::Rationals => "Q".into(),
            RingSpec::PrimeField { p } => format!("F_{p}"),
            RingSpec::Localized { inverted_primes } => {
                let parts: Vec<String> = inverted_primes.iter().map(|p| format!("1/{p}")).collect();
                format!("Z[{}]", parts.join(","))
            }
        }
    }

    /// Strips every factor of an S-unit from a positive integer.
    fn strip_inverted(&self, n: &BigInt) -> BigInt {
        let mut n = n.abs();
        if let RingSpec::Localized { inverted_primes } = self {
            for &p in inverted_primes {
                let p = BigInt::from(p);
                while !n.is_zero() && (&n % &p).is_zero() {
                    n /= &p;
                }
            }
        }
        n
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        match self {
            RingSpec::Integers => x.is_integer(),
            RingSpec::Rationals => true,
            RingSpec::PrimeField { p } => {
                x.is_integer() && !x.is_negative() && x.numer() < &BigInt::from(*p)
            }
            RingSpec::Localized { .. } => self.strip_inverted(x.denom()).is_one(),
        }
    }

    /// Maps a rational number into the ring, or reports that it does not belong.
    /// For 𝔽_p this reduces modulo p (the denominator must be prime to p).
    pub fn element(&self, x: Scalar) -> Result<Scalar> {
        match self {
            RingSpec::PrimeField { p } => {
                reduce_fraction_mod(&x, *p).ok_or_else(|| self.not_in_ring(&x))
            }
            _ if self.contains(&x) => Ok(x),
            _ => Err(self.not_in_ring(&x)),
        }
    }

    pub(crate) fn not_in_ring(&self, x: &Scalar) -> Error {
        Error::NotInRing {
            value: scalar_to_string(x),
            ring: self.symbol(),
        }
    }

    pub fn is_unit(&self, x: &Scalar) -> bool {
        match self {
            RingSpec::Integers => x.is_integer() && x.numer().abs().is_one(),
            RingSpec::Rationals | RingSpec::PrimeField { .. } => !x.is_zero(),
            RingSpec::Localized { .. } => {
                !x.is_zero()
                    && self.strip_inverted(x.numer()).is_one()
                    && self.strip_inverted(x.denom()).is_one()
            }
        }
    }

    /// The canonical associate of a nonzero integer divisor: positive, with
    /// all unit factors removed (so 1 for every unit; over a field every
    /// nonzero element is 1).
    pub fn normalize_divisor(&self, d: &BigInt) -> BigInt {
        match self {
            RingSpec::Rationals | RingSpec::PrimeField { .. } => {
                if d.is_zero() {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
            _ => self.strip_inverted(d),
        }
    }

    /// Whether the prime `p` (as an integer) remains a prime of the ring.
    pub fn is_prime_of_ring(&self, p: &BigInt) -> bool {
        !self.is_field() && !self.inverts_big(p)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

/// `numerator · denominator⁻¹ mod p`, when the denominator is invertible.
pub(crate) fn reduce_fraction_mod(x: &Scalar, p: u64) -> Option<Scalar> {
    let pb = BigInt::from(p);
    let num = x.numer().mod_floor(&pb).to_u64()?;
    let den = x.denom().mod_floor(&pb).to_u64()?;
    let inv = inv_mod(den, p)?;
    Some(big(BigInt::from(crate::ntheory::mul_mod(num, inv, p))))
}

impl Field {
    pub fn reduce(&self, x: Scalar) -> Scalar {
        match self {
            Field::Rationals => x,
            Field::Fp(p) => reduce_fraction_mod(&x, *p).expect("denominator divisible by p"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a + b,
            Field::Fp(_) => self.reduce(a + b),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a - b,
            Field::Fp(_) => self.reduce(a - b),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return Scalar::zero();
        }
        match self {
            Field::Rationals => a * b,
            Field::Fp(_) => self.reduce(a * b),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => -a,
            Field::Fp(_) => self.reduce(-a),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rationals => a.recip(),
            Field::Fp(_) => self.reduce(a.recip()),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.reduce(int(n))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Fp(p) => *p,
        }
    }

    pub fn as_ring(&self) -> RingSpec {
        match self {
            Field::Rationals => RingSpec::Rationals,
            Field::Fp(p) => RingSpec::PrimeField { p: *p },
        }
    }
}

/// An element of a specific ground ring. Algorithms work on bare [`Scalar`]s
/// with the ring carried alongside; this type is the checked public form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    ring: RingSpec,
    value: Scalar,
}

impl RingElement {
    pub fn new(ring: RingSpec, value: Scalar) -> Result<Self> {
        let value = ring.element(value)?;
        Ok(Self { ring, value })
    }

    pub fn from_i64(ring: RingSpec, n: i64) -> Result<Self> {
        Self::new(ring, int(n))
    }

    pub fn parse(ring: RingSpec, text: &str) -> Result<Self> {
        let value = parse_scalar(text)
            .ok_or_else(|| Error::parse("ring element", format!("malformed number '{text}'")))?;
        if !matches!(ring, RingSpec::PrimeField { .. }) && !ring.contains(&value) {
            return Err(ring.not_in_ring(&value));
        }
        Self::new(ring, value)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn value(&self) -> &Scalar {
        &self.value
    }

    pub fn numerator(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.value.denom()
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(&self.value)
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        RingElement {
            ring: self.ring.clone(),
            value: self.ring.fraction_field().add(&self.value, &other.value),
        }
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        RingElement {
            ring: self.ring.clone(),
            value: self.ring.fraction_field().mul(&self.value, &other.value),
        }
    }

    /// Reduction ℤ[S⁻¹] → 𝔽_p (or ℤ → 𝔽_p). A ring homomorphism whenever
    /// `p` is not inverted.
    pub fn reduce_mod_p(&self, p: u64) -> Result<RingElement> {
        let target = RingSpec::prime_field(p)?;
        match &self.ring {
            RingSpec::Integers | RingSpec::Localized { .. } => {}
            other => {
                return Err(Error::Unsupported(format!(
                    "reduction mod p from {other}"
                )))
            }
        }
        if self.ring.inverts(p) {
            return Err(Error::PrimeInverted(p));
        }
        let value = reduce_fraction_mod(&self.value, p).ok_or(Error::PrimeInverted(p))?;
        Ok(RingElement { ring: target, value })
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&scalar_to_string(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zs(primes: &[u64]) -> RingSpec {
        RingSpec::localized(primes).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let seven = RingElement::from_i64(RingSpec::Integers, 7).unwrap();
        assert_eq!(seven.reduce_mod_p(3).unwrap().value(), &int(1));

        let half = RingElement::new(zs(&[2]), Scalar::new(1.into(), 2.into())).unwrap();
        // 2 * 2 = 4 = 1 mod 3, so 1/2 = 2 mod 3
        assert_eq!(half.reduce_mod_p(3).unwrap().value(), &int(2));
        assert!(matches!(half.reduce_mod_p(2), Err(Error::PrimeInverted(2))));
    }

    #[test]
    fn unit_examples() {
        assert!(RingSpec::Integers.is_unit(&int(1)));
        assert!(RingSpec::Integers.is_unit(&int(-1)));
        assert!(!RingSpec::Integers.is_unit(&int(2)));
        assert!(zs(&[2]).is_unit(&int(2)));
        assert!(zs(&[2]).is_unit(&Scalar::new((-1).into(), 8.into())));
        assert!(!zs(&[2]).is_unit(&int(6)));
        assert!(!RingSpec::Rationals.is_unit(&int(0)));
    }

    #[test]
    fn ring_spec_validation() {
        assert!(RingSpec::prime_field(9).is_err());
        assert!(RingSpec::localized(&[2, 2]).is_err());
        assert!(RingSpec::localized(&[4]).is_err());
        assert_eq!(
            RingSpec::localized(&[3, 2]).unwrap(),
            RingSpec::Localized {
                inverted_primes: vec![2, 3]
            }
        );
    }

    #[test]
    fn membership() {
        let half = Scalar::new(1.into(), 2.into());
        assert!(!RingSpec::Integers.contains(&half));
        assert!(zs(&[2]).contains(&half));
        assert!(!zs(&[3]).contains(&half));
        assert!(RingElement::parse(RingSpec::Integers, "1/2").is_err());
        assert_eq!(
            RingElement::parse(RingSpec::prime_field(5).unwrap(), "-1")
                .unwrap()
                .value(),
            &int(4)
        );
    }

    #[test]
    fn canonical_strings() {
        let x = parse_scalar("6/-4").unwrap();
        assert_eq!(scalar_to_string(&x), "-3/2");
        assert_eq!(scalar_to_string(&parse_scalar(&scalar_to_string(&x)).unwrap()), "-3/2");
    }

    proptest! {
        #[test]
        fn reduction_is_a_ring_homomorphism(
            a in -10_000i64..10_000, b in 0u32..6,
            c in -10_000i64..10_000, d in 0u32..6,
            p in prop::sample::select(vec![3u64, 5, 7, 11, 101]),
        ) {
            let ring = zs(&[2]);
            let x = RingElement::new(ring.clone(), Scalar::new(a.into(), BigInt::from(2).pow(b))).unwrap();
            let y = RingElement::new(ring.clone(), Scalar::new(c.into(), BigInt::from(2).pow(d))).unwrap();
            let rx = x.reduce_mod_p(p).unwrap();
            let ry = y.reduce_mod_p(p).unwrap();
            prop_assert_eq!(x.add(&y).reduce_mod_p(p).unwrap(), rx.add(&ry));
            prop_assert_eq!(x.mul(&y).reduce_mod_p(p).unwrap(), rx.mul(&ry));
            let one = RingElement::from_i64(ring, 1).unwrap();
            prop_assert_eq!(one.reduce_mod_p(p).unwrap().value().clone(), int(1));
        }

        #[test]
        fn canonicalization_is_idempotent(n in -1000i64..1000, d in 1i64..1000) {
            let x = Scalar::new(n.into(), d.into());
            let s = scalar_to_string(&x);
            let y = parse_scalar(&s).unwrap();
            prop_assert_eq!(&x, &y);
            prop_assert_eq!(scalar_to_string(&y), s);
            prop_assert!(y.denom() > &BigInt::zero());
        }
    }
}
