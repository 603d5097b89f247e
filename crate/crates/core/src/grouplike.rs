//! Group-like elements, pointedness, and the functor `Gr` on single
//! coalgebras and maps.
//!
//! A group-like `g` of `C` is the same thing as an algebra character of the
//! dual algebra `A = C^∨`, with `φ(e_i*) = g_i`. Characters over the fraction
//! field are the joint eigen-covectors of the operators
//! `T_j[i][k] = d[i][(j,k)]` whose eigenvalue vector is `φ` itself, so they are
//! found by splitting `K^n` into joint eigenspaces one operator at a time and
//! keeping only eigenvalues in `K`. Each surviving joint eigenspace is a line.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::coalgebra::{dual_algebra, Coalgebra, CoalgebraMap};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg::field::{char_poly, left_kernel, solve_left};
use crate::linalg::snf;
use crate::matrix::{kron_vec, Matrix};
use crate::ntheory::mul_mod;
use crate::ring::{big, Field, RingSpec, Scalar};

/// `Gr(C)` in ascending lexicographic order, with the Smith divisors of the
/// stacked matrix as an independence and purity certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupLikeSet {
    pub vectors: Vec<Vec<Scalar>>,
    pub divisors: Vec<BigInt>,
}

impl GroupLikeSet {
    fn certify(ring: &RingSpec, rank: usize, mut vectors: Vec<Vec<Scalar>>) -> Self {
        vectors.sort();
        vectors.dedup();
        let divisors = snf(ring, &Matrix::from_rows(rank, vectors.clone())).divisors;
        GroupLikeSet { vectors, divisors }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Linearly independent with pure span: as many divisors as vectors, all units.
    pub fn is_independent_and_pure(&self) -> bool {
        self.divisors.len() == self.vectors.len() && self.divisors.iter().all(One::is_one)
    }

    pub fn lattice(&self, ring: &RingSpec, rank: usize) -> Lattice {
        Lattice::from_vectors(ring, rank, &self.vectors).expect("group-likes lie in the ring")
    }

    pub fn position(&self, v: &[Scalar]) -> Option<usize> {
        self.vectors.iter().position(|g| g.as_slice() == v)
    }
}

/// Whether `v` satisfies `Δv = v⊗v` and `ε(v) = 1` over the fraction field.
pub fn is_group_like_vector(c: &Coalgebra, v: &[Scalar]) -> bool {
    let field = c.field();
    v.len() == c.rank() && c.counit_of(v).is_one() && c.coproduct(v) == kron_vec(v, v, field)
}

fn operators(c: &Coalgebra) -> Vec<Matrix> {
    let n = c.rank();
    (0..n)
        .map(|j| {
            let mut t = Matrix::zeros(n, n);
            for i in 0..n {
                for k in 0..n {
                    t[(i, k)] = c.delta_entry(i, j, k).clone();
                }
            }
            t
        })
        .collect()
}

/// Splits the invariant subspace with basis `w` (rows) under operators
/// `ops[j..]`, pushing one-dimensional joint eigenspaces to `out`.
fn split(field: Field, ops: &[Matrix], j: usize, w: Matrix, out: &mut Vec<Vec<Scalar>>) {
    if w.rows() == 0 {
        return;
    }
    if w.rows() == 1 || j == ops.len() {
        // Joint eigenspaces of a commutative family with consistent eigenvalues are lines.
        debug_assert!(w.rows() == 1, "joint eigenspace of dimension {}", w.rows());
        out.extend(w.row_list());
        return;
    }
    let wt = w.mul(&ops[j], field);
    let r = Matrix::from_rows(
        w.rows(),
        (0..w.rows())
            .map(|i| solve_left(field, &w, wt.row(i)).expect("operator preserves the subspace"))
            .collect(),
    );
    let roots = char_poly(field, &r).roots(field);
    let id = Matrix::identity(r.rows());
    for lambda in roots {
        let shifted = r.sub(&id.scale(&lambda, field), field);
        let y = left_kernel(field, &shifted);
        split(field, ops, j + 1, y.mul(&w, field), out);
    }
}

/// All group-likes of `C ⊗ K` (characters of `A ⊗ K`), unsorted by ring filter.
pub fn fraction_field_group_likes(c: &Coalgebra) -> Result<Vec<Vec<Scalar>>> {
    let field = c.field();
    let n = c.rank();
    if n == 0 {
        return Ok(Vec::new());
    }
    let ops = operators(c);
    let mut lines = Vec::new();
    split(field, &ops, 0, Matrix::identity(n), &mut lines);
    let mut out = Vec::with_capacity(lines.len());
    for v in lines {
        let e = c.counit_of(&v);
        if e.is_zero() {
            return Err(Error::invariant("joint eigen-covector with zero counit"));
        }
        let inv = field.inv(&e);
        let g: Vec<Scalar> = v.iter().map(|x| field.mul(x, &inv)).collect();
        if !is_group_like_vector(c, &g) {
            return Err(Error::invariant("normalized joint eigen-covector is not group-like"));
        }
        out.push(g);
    }
    out.sort();
    Ok(out)
}

/// `Gr(C)`: the fraction-field group-likes with every coordinate in the ring.
pub fn group_likes(c: &Coalgebra) -> Result<GroupLikeSet> {
    let ring = c.ring();
    let vectors = fraction_field_group_likes(c)?
        .into_iter()
        .filter(|g| g.iter().all(|x| ring.contains(x)))
        .collect();
    Ok(GroupLikeSet::certify(ring, c.rank(), vectors))
}

/// Exhaustive search over `𝔽_p^n`; only for `p^n ≤ 10^7`.
pub fn group_likes_bruteforce(c: &Coalgebra) -> Result<GroupLikeSet> {
    let RingSpec::PrimeField { p } = *c.ring() else {
        return Err(Error::Unsupported("brute-force search needs a prime field".into()));
    };
    let n = c.rank();
    let limit = 10_000_000u64;
    let mut total = 1u64;
    for _ in 0..n {
        total = total.checked_mul(p).filter(|&t| t <= limit).ok_or_else(|| {
            Error::TooLarge(format!("{p}^{n} vectors exceeds {limit}"))
        })?;
    }
    let to_u64 = |x: &Scalar| x.to_integer().to_u64().expect("reduced residue");
    let eps: Vec<u64> = c.counit().iter().map(to_u64).collect();
    let terms: Vec<Vec<(usize, usize, u64)>> =
        (0..n).map(|i| c.terms(i).map(|(j, k, x)| (j, k, to_u64(x))).collect()).collect();
    let mut found = Vec::new();
    let mut v = vec![0u64; n];
    for code in 0..total {
        let mut rest = code;
        for x in v.iter_mut() {
            *x = rest % p;
            rest /= p;
        }
        let e = v.iter().zip(&eps).fold(0, |acc, (&a, &b)| (acc + mul_mod(a, b, p)) % p);
        if e != 1 {
            continue;
        }
        // Δv = v⊗v: Σ_i v_i d[i][(j,k)] = v_j v_k for all j, k.
        let mut lhs = vec![0u64; n * n];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for &(j, k, d) in &terms[i] {
                let idx = j * n + k;
                lhs[idx] = (lhs[idx] + mul_mod(vi, d, p)) % p;
            }
        }
        let ok = (0..n).all(|j| (0..n).all(|k| lhs[j * n + k] == mul_mod(v[j], v[k], p)));
        if ok {
            found.push(v.iter().map(|&x| big(BigInt::from(x))).collect());
        }
    }
    Ok(GroupLikeSet::certify(c.ring(), n, found))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointednessReport {
    pub pointed: bool,
    /// `dim_K (A⊗K)/J`.
    pub semisimple_dim: usize,
    pub radical_dim: usize,
    /// Number of `K`-valued characters, i.e. `|Gr(C⊗K)|`.
    pub character_count: usize,
    pub non_integral: Vec<Vec<Scalar>>,
}

/// `C` is pointed iff `(A⊗K)/J` is split (its dimension equals the number of
/// `K`-characters) and every group-like of `C⊗K` lies in `C`.
pub fn is_pointed(c: &Coalgebra) -> Result<PointednessReport> {
    let n = c.rank();
    if n == 0 {
        return Ok(PointednessReport {
            pointed: true,
            semisimple_dim: 0,
            radical_dim: 0,
            character_count: 0,
            non_integral: Vec::new(),
        });
    }
    let radical_dim = dual_algebra(c).radical().rows();
    let chars = fraction_field_group_likes(c)?;
    let ring = c.ring();
    let non_integral: Vec<_> = chars.iter().filter(|g| !g.iter().all(|x| ring.contains(x))).cloned().collect();
    let semisimple_dim = n - radical_dim;
    Ok(PointednessReport {
        pointed: semisimple_dim == chars.len() && non_integral.is_empty(),
        semisimple_dim,
        radical_dim,
        character_count: chars.len(),
        non_integral,
    })
}

/// `r(x) = ε(x)·g`, a coalgebra retraction of `C` onto `span{g}`.
pub fn counit_retraction(g: &[Scalar], c: &Coalgebra) -> Result<CoalgebraMap> {
    if !g.iter().all(|x| c.ring().contains(x)) || !is_group_like_vector(c, g) {
        return Err(Error::NotGroupLike);
    }
    let rows = c
        .counit()
        .iter()
        .map(|e| g.iter().map(|x| c.field().mul(e, x)).collect())
        .collect();
    CoalgebraMap::checked(c.clone(), c.clone(), Matrix::from_rows(c.rank(), rows))
}

/// `Gr(f)`, as indices into the sorted group-like lists of domain and codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrMap {
    pub source: GroupLikeSet,
    pub target: GroupLikeSet,
    pub assignment: Vec<usize>,
}

impl GrMap {
    /// `other ∘ self` as index maps.
    pub fn then(&self, other: &GrMap) -> Vec<usize> {
        self.assignment.iter().map(|&i| other.assignment[i]).collect()
    }
}

pub fn gr_of_map(f: &CoalgebraMap) -> Result<GrMap> {
    let source = group_likes(f.domain())?;
    let target = group_likes(f.codomain())?;
    let assignment = source
        .vectors
        .iter()
        .map(|g| target.position(&f.apply(g)).ok_or(Error::NotGroupLikeImage))
        .collect::<Result<_>>()?;
    Ok(GrMap {
        source,
        target,
        assignment,
    })
}
