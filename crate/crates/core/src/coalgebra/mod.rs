//! Finite-rank cocommutative coalgebras given by structure constants on a
//! free basis.
//!
//! `delta` is an `n × n²` matrix: row `i` holds the coefficients of `Δ(e_i)`
//! with `e_j ⊗ e_k` at column `j·n + k`.

mod algebra;
mod map;

pub use algebra::{dual_algebra, dual_of_algebra, AlgebraPresentation};
pub use map::CoalgebraMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::report::ValidationReport;
use crate::ring::{Field, RingSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    ring: RingSpec,
    rank: usize,
    delta: Matrix,
    counit: Vec<Scalar>,
    basis_names: Option<Vec<String>>,
}

impl Coalgebra {
    /// Builds and validates; a failed axiom is returned as `Error::Validation`.
    pub fn new(
        ring: RingSpec,
        delta: Matrix,
        counit: Vec<Scalar>,
        basis_names: Option<Vec<String>>,
    ) -> Result<Self> {
        let c = Self::new_unchecked(ring, delta, counit, basis_names)?;
        let report = validate_coalgebra(&c);
        if report.overall() {
            Ok(c)
        } else {
            Err(Error::Validation(report))
        }
    }

    /// Checks only shapes; axioms are left to [`validate_coalgebra`].
    pub fn new_unchecked(
        ring: RingSpec,
        delta: Matrix,
        counit: Vec<Scalar>,
        basis_names: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = counit.len();
        if delta.rows() != n || delta.cols() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "delta is {}×{}, expected {n}×{}",
                delta.rows(),
                delta.cols(),
                n * n
            )));
        }
        if let Some(names) = &basis_names {
            if names.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "{} basis names for rank {n}",
                    names.len()
                )));
            }
        }
        Ok(Coalgebra {
            ring,
            rank: n,
            delta,
            counit,
            basis_names,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.fraction_field()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    pub fn delta_entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.delta[(i, j * self.rank + k)]
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn name(&self, i: usize) -> String {
        match &self.basis_names {
            Some(names) => names[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn with_names(mut self, names: Option<Vec<String>>) -> Self {
        if names.as_ref().is_none_or(|v| v.len() == self.rank) {
            self.basis_names = names;
        }
        self
    }

    /// Nonzero terms `(j, k, c)` of `Δ(e_i)`.
    pub fn terms(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        let n = self.rank;
        self.delta
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(col, c)| (col / n, col % n, c))
    }

    /// `Δ(v)` as a vector of length `n²`.
    pub fn coproduct(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.delta.apply(v, self.field())
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        crate::matrix::dot(v, &self.counit, self.field())
    }

    pub fn full_lattice(&self) -> Lattice {
        Lattice::full(self.ring.clone(), self.rank)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.rank];
        v[i] = Scalar::one();
        v
    }

    /// The same structure constants over another ring: ℤ → ℚ, ℤ → 𝔽_p,
    /// ℤ[S⁻¹] → ℚ and so on.
    pub fn base_change(&self, target: &RingSpec) -> Result<Coalgebra> {
        let convert = |x: &Scalar| target.element(x.clone());
        let delta = Matrix::from_rows(
            self.delta.cols(),
            (0..self.rank)
                .map(|i| self.delta.row(i).iter().map(convert).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        );
        let counit = self.counit.iter().map(convert).collect::<Result<Vec<_>>>()?;
        Ok(Coalgebra {
            ring: target.clone(),
            rank: self.rank,
            delta,
            counit,
            basis_names: self.basis_names.clone(),
        })
    }
}

fn triple(i: usize, j: usize, k: usize) -> String {
    format!("({i},{j},{k})")
}

/// Checks ring membership, cocommutativity, coassociativity and both counit
/// laws, recording the first violating basis indices (0-based).
pub fn validate_coalgebra(c: &Coalgebra) -> ValidationReport {
    let n = c.rank;
    let field = c.field();
    let mut report = ValidationReport::new();

    let mut bad_entry = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !c.ring.contains(c.delta_entry(i, j, k)) {
                    bad_entry = Some(format!("delta{}", triple(i, j, k)));
                    break 'outer;
                }
            }
        }
    }
    if bad_entry.is_none() {
        bad_entry = c.counit.iter().position(|x| !c.ring.contains(x)).map(|i| format!("counit[{i}]"));
    }
    report.record("entries in ring", bad_entry);

    let mut cocomm = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in j + 1..n {
                if c.delta_entry(i, j, k) != c.delta_entry(i, k, j) {
                    cocomm = Some(triple(i, j, k));
                    break 'outer;
                }
            }
        }
    }
    report.record("cocommutativity", cocomm);

    let mut coassoc = None;
    for i in 0..n {
        // (Δ⊗id)Δ and (id⊗Δ)Δ as dense n³ vectors.
        let mut left = vec![Scalar::zero(); n * n * n];
        let mut right = vec![Scalar::zero(); n * n * n];
        for (j, k, x) in c.terms(i) {
            for (a, b, y) in c.terms(j) {
                let idx = (a * n + b) * n + k;
                left[idx] = field.add(&left[idx], &field.mul(x, y));
            }
            for (a, b, y) in c.terms(k) {
                let idx = (j * n + a) * n + b;
                right[idx] = field.add(&right[idx], &field.mul(x, y));
            }
        }
        if let Some(pos) = (0..left.len()).find(|&t| left[t] != right[t]) {
            coassoc = Some(format!("e{i} at {}", triple(pos / (n * n), (pos / n) % n, pos % n)));
            break;
        }
    }
    report.record("coassociativity", coassoc);

    let mut left_counit = None;
    let mut right_counit = None;
    for i in 0..n {
        let mut l = vec![Scalar::zero(); n];
        let mut r = vec![Scalar::zero(); n];
        for (j, k, x) in c.terms(i) {
            l[k] = field.add(&l[k], &field.mul(&c.counit[j], x));
            r[j] = field.add(&r[j], &field.mul(&c.counit[k], x));
        }
        let e = c.basis_vector(i);
        if left_counit.is_none() && l != e {
            left_counit = Some(format!("e{i}"));
        }
        if right_counit.is_none() && r != e {
            right_counit = Some(format!("e{i}"));
        }
    }
    report.record("left counit law", left_counit);
    report.record("right counit law", right_counit);
    report
}

/// The free module on `names` with every basis vector group-like.
pub fn set_like<S: AsRef<str>>(ring: &RingSpec, names: &[S]) -> Coalgebra {
    let n = names.len();
    let mut delta = Matrix::zeros(n, n * n);
    for i in 0..n {
        delta[(i, i * n + i)] = Scalar::one();
    }
    Coalgebra {
        ring: ring.clone(),
        rank: n,
        delta,
        counit: vec![Scalar::one(); n],
        basis_names: Some(names.iter().map(|s| s.as_ref().to_string()).collect()),
    }
}

fn check_same_ring(a: &RingSpec, b: &RingSpec) -> Result<()> {
    if a != b {
        return Err(Error::RingMismatch(a.symbol(), b.symbol()));
    }
    Ok(())
}

/// `C ⊗ D` with `e_i ⊗ f_k` at index `i·n_D + k`.
pub fn tensor(c: &Coalgebra, d: &Coalgebra) -> Result<Coalgebra> {
    check_same_ring(&c.ring, &d.ring)?;
    let field = c.field();
    let (nc, nd) = (c.rank, d.rank);
    let n = nc * nd;
    let mut delta = Matrix::zeros(n, n * n);
    for i in 0..nc {
        let ci: Vec<_> = c.terms(i).collect();
        for k in 0..nd {
            let row = i * nd + k;
            for &(a, b, x) in &ci {
                for (cc, e, y) in d.terms(k) {
                    let left = a * nd + cc;
                    let right = b * nd + e;
                    delta[(row, left * n + right)] = field.mul(x, y);
                }
            }
        }
    }
    let mut counit = Vec::with_capacity(n);
    for i in 0..nc {
        for k in 0..nd {
            counit.push(field.mul(&c.counit[i], &d.counit[k]));
        }
    }
    let names = match (&c.basis_names, &d.basis_names) {
        (None, None) => None,
        _ => Some(
            (0..nc)
                .flat_map(|i| (0..nd).map(move |k| (i, k)))
                .map(|(i, k)| format!("{}⊗{}", c.name(i), d.name(k)))
                .collect(),
        ),
    };
    Ok(Coalgebra {
        ring: c.ring.clone(),
        rank: n,
        delta,
        counit,
        basis_names: names,
    })
}

/// `C ⊕ D` with the basis of `C` first.
pub fn direct_sum(c: &Coalgebra, d: &Coalgebra) -> Result<Coalgebra> {
    check_same_ring(&c.ring, &d.ring)?;
    let (nc, nd) = (c.rank, d.rank);
    let n = nc + nd;
    let mut delta = Matrix::zeros(n, n * n);
    for i in 0..nc {
        for (j, k, x) in c.terms(i) {
            delta[(i, j * n + k)] = x.clone();
        }
    }
    for i in 0..nd {
        for (j, k, x) in d.terms(i) {
            delta[(nc + i, (nc + j) * n + nc + k)] = x.clone();
        }
    }
    let mut counit = c.counit.clone();
    counit.extend(d.counit.iter().cloned());
    let names = match (&c.basis_names, &d.basis_names) {
        (None, None) => None,
        _ => Some((0..nc).map(|i| c.name(i)).chain((0..nd).map(|i| d.name(i))).collect()),
    };
    Ok(Coalgebra {
        ring: c.ring.clone(),
        rank: n,
        delta,
        counit,
        basis_names: names,
    })
}

/// Whether `Δ(l) ⊆ l ⊗ l`.
pub fn is_subcoalgebra(l: &Lattice, c: &Coalgebra) -> Result<bool> {
    if l.ambient_rank() != c.rank {
        return Err(Error::AmbientMismatch(c.rank, l.ambient_rank()));
    }
    for b in l.basis_vectors() {
        if !Lattice::kronecker_contains(l, l, &c.coproduct(&b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The saturation of a subcoalgebra lattice, again a subcoalgebra.
///
/// Accepts any `l` whose span over the fraction field is a subcoalgebra of
/// `C ⊗ K`, so `span{2g}` purifies to `span{g}`. Every lattice passing
/// [`is_subcoalgebra`] qualifies.
pub fn purify_subcoalgebra(l: &Lattice, c: &Coalgebra) -> Result<Lattice> {
    if l.ambient_rank() != c.rank {
        return Err(Error::AmbientMismatch(c.rank, l.ambient_rank()));
    }
    let s = l.saturate();
    // (l⊗K)^⊗2 ∩ C⊗C = s ⊗ s since s is pure.
    for b in l.basis_vectors() {
        if !Lattice::kronecker_contains(&s, &s, &c.coproduct(&b))? {
            return Err(Error::NotSubcoalgebra);
        }
    }
    if !is_subcoalgebra(&s, c)? {
        return Err(Error::invariant("purification of a subcoalgebra is not a subcoalgebra"));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;
    use proptest::prelude::*;

    fn zx_mod(coeffs: &[i64]) -> Coalgebra {
        dual_of_algebra(&AlgebraPresentation::monogenic(&RingSpec::Integers, coeffs).unwrap()).unwrap()
    }

    fn truncated(k: usize) -> Coalgebra {
        dual_of_algebra(&AlgebraPresentation::truncated(&RingSpec::Integers, k)).unwrap()
    }

    fn lat(rows: &[&[i64]], n: usize) -> Lattice {
        Lattice::span(&RingSpec::Integers, &Matrix::from_i64(n, rows)).unwrap()
    }

    #[test]
    fn set_like_validates() {
        let c = set_like(&RingSpec::Integers, &["a", "b"]);
        assert!(validate_coalgebra(&c).overall());
        assert_eq!(set_like::<&str>(&RingSpec::Integers, &[]).rank(), 0);
        assert!(validate_coalgebra(&set_like::<&str>(&RingSpec::Integers, &[])).overall());
    }

    #[test]
    fn cocommutativity_failure_is_located() {
        let c = set_like(&RingSpec::Integers, &["a", "b", "c"]);
        let mut delta = c.delta().clone();
        delta[(1, 3 + 2)] = int(1);
        let bad = Coalgebra::new_unchecked(RingSpec::Integers, delta, c.counit().to_vec(), None).unwrap();
        let report = validate_coalgebra(&bad);
        let check = report.checks.iter().find(|ch| ch.name == "cocommutativity").unwrap();
        assert!(!check.passed);
        assert_eq!(check.location.as_deref(), Some("(1,1,2)"));
        assert!(!report.overall());
    }

    #[test]
    fn dual_of_sqrt2_algebra() {
        // 1·1 = 1, 1·x = x, x·x = 2
        let c = zx_mod(&[-2, 0]);
        assert!(validate_coalgebra(&c).overall());
        assert_eq!(c.delta().row(0), &[int(1), int(0), int(0), int(2)][..]);
        assert_eq!(c.delta().row(1), &[int(0), int(1), int(1), int(0)][..]);
        assert_eq!(c.counit(), &[int(1), int(0)][..]);
    }

    #[test]
    fn dual_of_truncated_cube() {
        let c = truncated(3);
        // Δ(x²)* = 1*⊗(x²)* + x*⊗x* + (x²)*⊗1*
        let mut expected = vec![int(0); 9];
        expected[2] = int(1);
        expected[4] = int(1);
        expected[6] = int(1);
        assert_eq!(c.delta().row(2), &expected[..]);
    }

    #[test]
    fn split_algebra_dual_is_set_like() {
        let c = dual_of_algebra(&AlgebraPresentation::split(&RingSpec::Integers, 2)).unwrap();
        assert_eq!(c.delta(), set_like(&RingSpec::Integers, &["a", "b"]).delta());
        assert_eq!(c.counit(), &[int(1), int(1)][..]);
    }

    #[test]
    fn dual_round_trips() {
        for c in [truncated(3), zx_mod(&[-2, 0]), set_like(&RingSpec::Integers, &["a", "b"])] {
            assert_eq!(dual_of_algebra(&dual_algebra(&c)).unwrap(), c);
        }
        let a = AlgebraPresentation::truncated(&RingSpec::Integers, 3);
        assert_eq!(dual_algebra(&dual_of_algebra(&a).unwrap()), a);
        let zero = set_like::<&str>(&RingSpec::Integers, &[]);
        assert_eq!(dual_algebra(&zero).rank(), 0);
    }

    #[test]
    fn invalid_algebra_is_rejected() {
        let a = AlgebraPresentation::truncated(&RingSpec::Integers, 2);
        let mut mult = a.mult().clone();
        mult[(3, 0)] = int(1); // x·x = 1 but keep unit broken
        mult[(0, 0)] = int(0);
        let bad = AlgebraPresentation::new_unchecked(RingSpec::Integers, mult, a.unit().to_vec(), None).unwrap();
        assert!(matches!(dual_of_algebra(&bad), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn tensor_and_sum_examples() {
        let z = RingSpec::Integers;
        let ab = set_like(&z, &["a", "b"]);
        let x = set_like(&z, &["x"]);
        let t = tensor(&ab, &x).unwrap();
        assert_eq!(t.delta(), ab.delta());
        assert_eq!(t.counit(), ab.counit());
        let c = truncated(3);
        assert_eq!(tensor(&c, &x).unwrap().delta(), c.delta());
        // dual(Z[x]/x²) ⊗ dual(Z[y]/y²) = dual(Z[x,y]/(x², y²))
        let d2 = truncated(2);
        let prod = AlgebraPresentation::tensor(
            &AlgebraPresentation::truncated(&z, 2),
            &AlgebraPresentation::truncated(&z, 2),
        )
        .unwrap();
        let t = tensor(&d2, &d2).unwrap();
        assert!(validate_coalgebra(&t).overall());
        assert_eq!(t.delta(), dual_of_algebra(&prod).unwrap().delta());

        let s = direct_sum(&set_like(&z, &["a"]), &set_like(&z, &["b"])).unwrap();
        assert_eq!(s, set_like(&z, &["a", "b"]));
        let empty = set_like::<&str>(&z, &[]);
        assert_eq!(direct_sum(&c, &empty).unwrap().delta(), c.delta());
        let big = direct_sum(&c, &set_like(&z, &["a"])).unwrap();
        assert_eq!(big.rank(), 4);
        assert!(validate_coalgebra(&big).overall());
        let q = set_like(&RingSpec::Rationals, &["a"]);
        assert!(matches!(tensor(&ab, &q), Err(Error::RingMismatch(..))));
        assert!(matches!(direct_sum(&ab, &q), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn tensor_is_associative_up_to_reindexing() {
        let z = RingSpec::Integers;
        let (a, b, c) = (truncated(2), set_like(&z, &["p", "q"]), truncated(3));
        let left = tensor(&tensor(&a, &b).unwrap(), &c).unwrap();
        let right = tensor(&a, &tensor(&b, &c).unwrap()).unwrap();
        // Both orderings are row-major in (i, j, k), so the reindexing is the identity.
        let iso = CoalgebraMap::new(left.clone(), right.clone(), Matrix::identity(left.rank())).unwrap();
        assert!(iso.validate().overall());
        assert_eq!(left.delta(), right.delta());
    }

    #[test]
    fn subcoalgebra_examples() {
        let c = truncated(2);
        assert!(is_subcoalgebra(&c.full_lattice(), &c).unwrap());
        assert!(!is_subcoalgebra(&lat(&[&[0, 1]], 2), &c).unwrap());
        assert!(is_subcoalgebra(&lat(&[&[1, 0]], 2), &c).unwrap());
        assert!(matches!(is_subcoalgebra(&lat(&[&[1]], 1), &c), Err(Error::AmbientMismatch(..))));
    }

    #[test]
    fn purification_examples() {
        let c = truncated(2);
        assert_eq!(purify_subcoalgebra(&lat(&[&[2, 0]], 2), &c).unwrap(), lat(&[&[1, 0]], 2));
        let g = lat(&[&[1, 0]], 2);
        assert_eq!(purify_subcoalgebra(&g, &c).unwrap(), g);
        assert!(purify_subcoalgebra(&lat(&[&[2, 0], &[0, 1]], 2), &c).unwrap().is_full());
        assert!(purify_subcoalgebra(&lat(&[&[1, 0], &[0, 2]], 2), &c).unwrap().is_full());
        assert!(matches!(purify_subcoalgebra(&lat(&[&[0, 2]], 2), &c), Err(Error::NotSubcoalgebra)));
        assert!(matches!(purify_subcoalgebra(&lat(&[&[0, 1]], 2), &c), Err(Error::NotSubcoalgebra)));
    }

    #[test]
    fn base_change_reduces_coefficients() {
        let c = zx_mod(&[-2, 0]);
        let c7 = c.base_change(&RingSpec::prime_field(7).unwrap()).unwrap();
        assert_eq!(c7.delta_entry(0, 1, 1), &int(2));
        assert!(validate_coalgebra(&c7).overall());
        assert!(c.base_change(&RingSpec::Rationals).is_ok());
    }

    fn small_pointed() -> impl Strategy<Value = Coalgebra> {
        let z = RingSpec::Integers;
        (1usize..4, 0usize..3).prop_map(move |(k, s)| {
            let names: Vec<String> = (0..s).map(|i| format!("g{i}")).collect();
            direct_sum(&truncated(k), &set_like(&z, &names)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn intersection_of_pure_subcoalgebras_is_a_subcoalgebra(
            c in small_pointed(),
            pick in prop::collection::vec(0usize..64, 2),
        ) {
            // Pure subcoalgebras from spans of groups of basis vectors closed under Δ:
            // for truncated duals these are the initial segments, set-like lines are free.
            let n = c.rank();
            let subs: Vec<Lattice> = (0..(1usize << n)).filter_map(|mask| {
                let rows: Vec<Vec<Scalar>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| c.basis_vector(i)).collect();
                let l = Lattice::span(c.ring(), &Matrix::from_rows(n, rows)).ok()?;
                is_subcoalgebra(&l, &c).ok()?.then_some(l)
            }).collect();
            let a = &subs[pick[0] % subs.len()];
            let b = &subs[pick[1] % subs.len()];
            let i = a.intersect(b).unwrap();
            prop_assert!(is_subcoalgebra(&i, &c).unwrap());
            let p = purify_subcoalgebra(&i, &c).unwrap();
            prop_assert!(p.is_pure().unwrap().pure);
        }
    }
}
