//! Seeded test corpus of pointed coalgebras and coalgebra maps.
//!
//! Every coalgebra is assembled from `set_like`, duals of `R[x]/(x^k)`,
//! `tensor` and `direct_sum`, so its group-likes, component ranks and
//! coradical filtration are known from the construction alone. Nothing here
//! calls the structure-theory code; the ground truth is read off the shape.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coalgebra::{direct_sum, dual_of_algebra, set_like, tensor, AlgebraPresentation, Coalgebra, CoalgebraMap};
use crate::error::Result;
use crate::lattice::Lattice;
use crate::matrix::{kron_vec, Matrix};
use crate::ring::{int, RingSpec, Scalar};

pub const MAX_RANK: usize = 12;
pub const MAX_DEPTH: usize = 3;

/// How a corpus coalgebra is put together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    /// `set_like` on `n` points.
    SetLike(usize),
    /// The dual of `R[x]/(x^k)`.
    Truncated(usize),
    Sum(Box<Shape>, Box<Shape>),
    Tensor(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn sum(a: Shape, b: Shape) -> Shape {
        Shape::Sum(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: Shape, b: Shape) -> Shape {
        Shape::Tensor(Box::new(a), Box::new(b))
    }

    pub fn rank(&self) -> usize {
        match self {
            Shape::SetLike(n) | Shape::Truncated(n) => *n,
            Shape::Sum(a, b) => a.rank() + b.rank(),
            Shape::Tensor(a, b) => a.rank() * b.rank(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Shape::SetLike(_) | Shape::Truncated(_) => 0,
            Shape::Sum(a, b) | Shape::Tensor(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// `S2`, `T3`, `(S1+T2)`, `(T2*T2)`.
    pub fn describe(&self) -> String {
        match self {
            Shape::SetLike(n) => format!("S{n}"),
            Shape::Truncated(k) => format!("T{k}"),
            Shape::Sum(a, b) => format!("({}+{})", a.describe(), b.describe()),
            Shape::Tensor(a, b) => format!("({}*{})", a.describe(), b.describe()),
        }
    }

    pub fn build(&self, ring: &RingSpec) -> Result<Coalgebra> {
        let mut leaf = 0;
        self.build_from(ring, &mut leaf)
    }

    fn build_from(&self, ring: &RingSpec, leaf: &mut usize) -> Result<Coalgebra> {
        match self {
            Shape::SetLike(n) => {
                let id = *leaf;
                *leaf += 1;
                let names: Vec<String> = (0..*n).map(|i| format!("s{id}_{i}")).collect();
                Ok(set_like(ring, &names))
            }
            Shape::Truncated(k) => {
                let id = *leaf;
                *leaf += 1;
                let c = dual_of_algebra(&AlgebraPresentation::truncated(ring, *k))?;
                Ok(c.with_names(Some((0..*k).map(|i| format!("t{id}_{i}")).collect())))
            }
            Shape::Sum(a, b) => {
                let ca = a.build_from(ring, leaf)?;
                direct_sum(&ca, &b.build_from(ring, leaf)?)
            }
            Shape::Tensor(a, b) => {
                let ca = a.build_from(ring, leaf)?;
                tensor(&ca, &b.build_from(ring, leaf)?)
            }
        }
    }

    /// The group-likes in construction order.
    pub fn group_likes(&self) -> Vec<Vec<Scalar>> {
        match self {
            Shape::SetLike(n) => (0..*n).map(|i| unit_vector(*n, i)).collect(),
            Shape::Truncated(k) => vec![unit_vector(*k, 0)],
            Shape::Sum(a, b) => {
                let (na, nb) = (a.rank(), b.rank());
                let left = a.group_likes().into_iter().map(|mut g| {
                    g.resize(na + nb, Scalar::zero());
                    g
                });
                let right = b.group_likes().into_iter().map(|g| {
                    let mut v = vec![Scalar::zero(); na];
                    v.extend(g);
                    v
                });
                left.chain(right).collect()
            }
            Shape::Tensor(a, b) => {
                let gb = b.group_likes();
                a.group_likes()
                    .iter()
                    .flat_map(|g| gb.iter().map(move |h| kron_vec(g, h, crate::ring::Field::Rationals)))
                    .collect()
            }
        }
    }

    /// Rank of the component of each group-like, aligned with [`Shape::group_likes`].
    pub fn component_ranks(&self) -> Vec<usize> {
        match self {
            Shape::SetLike(n) => vec![1; *n],
            Shape::Truncated(k) => vec![*k],
            Shape::Sum(a, b) => a.component_ranks().into_iter().chain(b.component_ranks()).collect(),
            Shape::Tensor(a, b) => {
                let rb = b.component_ranks();
                a.component_ranks().iter().flat_map(|x| rb.iter().map(move |y| x * y)).collect()
            }
        }
    }

    /// `rank(C_i / C_{i−1})` for the coradical filtration, last entry nonzero.
    pub fn graded_ranks(&self) -> Vec<usize> {
        match self {
            Shape::SetLike(n) => vec![*n],
            Shape::Truncated(k) => vec![1; *k],
            Shape::Sum(a, b) => {
                let (x, y) = (a.graded_ranks(), b.graded_ranks());
                (0..x.len().max(y.len()))
                    .map(|i| x.get(i).copied().unwrap_or(0) + y.get(i).copied().unwrap_or(0))
                    .collect()
            }
            Shape::Tensor(a, b) => convolve(&a.graded_ranks(), &b.graded_ranks()),
        }
    }

    /// `rank(C_i)` for the coradical filtration.
    pub fn stage_ranks(&self) -> Vec<usize> {
        self.graded_ranks()
            .iter()
            .scan(0, |acc, r| {
                *acc += r;
                Some(*acc)
            })
            .collect()
    }
}

pub fn convolve(x: &[usize], y: &[usize]) -> Vec<usize> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn random_leaf(rng: &mut ChaCha8Rng, max_rank: usize) -> Shape {
    let n = rng.gen_range(1..=max_rank.clamp(1, 4));
    if rng.gen_bool(0.4) {
        Shape::SetLike(n.min(3))
    } else {
        Shape::Truncated(n)
    }
}

fn random_shape_within(rng: &mut ChaCha8Rng, max_rank: usize, depth: usize) -> Shape {
    if depth == 0 || max_rank < 2 || rng.gen_bool(0.3) {
        return random_leaf(rng, max_rank);
    }
    if max_rank >= 4 && rng.gen_bool(0.45) {
        let a = random_shape_within(rng, max_rank / 2, depth - 1);
        let b = random_shape_within(rng, max_rank / a.rank(), depth - 1);
        Shape::tensor(a, b)
    } else {
        let a = random_shape_within(rng, max_rank - 1, depth - 1);
        let b = random_shape_within(rng, max_rank - a.rank(), depth - 1);
        Shape::sum(a, b)
    }
}

/// A random shape of rank at most `max_rank` and depth at most [`MAX_DEPTH`].
pub fn random_shape(rng: &mut ChaCha8Rng, max_rank: usize) -> Shape {
    random_shape_within(rng, max_rank, MAX_DEPTH)
}

pub fn shapes(seed: u64, count: usize) -> Vec<Shape> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_shape(&mut rng, MAX_RANK)).collect()
}

#[derive(Debug, Clone)]
pub struct CorpusCoalgebra {
    pub shape: Shape,
    pub coalgebra: Coalgebra,
}

pub fn coalgebras(seed: u64, count: usize, ring: &RingSpec) -> Result<Vec<CorpusCoalgebra>> {
    shapes(seed, count)
        .into_iter()
        .map(|shape| Ok(CorpusCoalgebra { coalgebra: shape.build(ring)?, shape }))
        .collect()
}

/// Every shape of rank at most `max_rank` built from leaves of rank at most 2
/// with one level of sums or tensors, plus the leaves themselves up to `max_rank`.
pub fn small_shapes(max_rank: usize) -> Vec<Shape> {
    let mut leaves = Vec::new();
    for n in 1..=max_rank {
        leaves.push(Shape::SetLike(n));
        leaves.push(Shape::Truncated(n));
    }
    let mut out = leaves.clone();
    let small: Vec<Shape> = leaves.into_iter().filter(|s| s.rank() <= 2).collect();
    for a in &small {
        for b in &small {
            for s in [Shape::sum(a.clone(), b.clone()), Shape::tensor(a.clone(), b.clone())] {
                if s.rank() <= max_rank && !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Duals of `𝔽_p[x]/(f)` for every monic `f` of degree `1..=max_degree`.
/// These need not be pointed; their group-likes are the roots of `f`.
pub fn monogenic_duals(p: u64, max_degree: usize) -> Result<Vec<(Vec<i64>, Coalgebra)>> {
    let ring = RingSpec::prime_field(p)?;
    let mut out = Vec::new();
    for k in 1..=max_degree {
        let mut lower = vec![0i64; k];
        loop {
            let a = AlgebraPresentation::monogenic(&ring, &lower)?;
            out.push((lower.clone(), dual_of_algebra(&a)?));
            // odometer over 𝔽_p^k
            let mut i = 0;
            while i < k && lower[i] == p as i64 - 1 {
                lower[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
            lower[i] += 1;
        }
    }
    Ok(out)
}

/// A coalgebra map with a note on how it was produced.
#[derive(Debug, Clone)]
pub struct CorpusMap {
    pub description: String,
    pub map: CoalgebraMap,
}

fn truncated(ring: &RingSpec, k: usize) -> Result<Coalgebra> {
    Shape::Truncated(k).build(ring)
}

/// `T_k → T_m` dual to the algebra map `x ↦ a·x + b·x²`; needs `m ≥ k`.
pub fn substitution_map(ring: &RingSpec, k: usize, m: usize, a: i64, b: i64) -> Result<CorpusMap> {
    let field = ring.fraction_field();
    // powers[i] = (a x + b x²)^i truncated at degree k
    let mut powers = vec![unit_vector(k, 0)];
    for i in 1..m {
        let prev = &powers[i - 1];
        let mut next = vec![Scalar::zero(); k];
        for (d, c) in prev.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < k {
                next[d + 1] += c * int(a);
            }
            if d + 2 < k {
                next[d + 2] += c * int(b);
            }
        }
        powers.push(next);
    }
    let rows = (0..k).map(|n| (0..m).map(|i| field.reduce(powers[i][n].clone())).collect()).collect();
    let map = CoalgebraMap::checked(truncated(ring, k)?, truncated(ring, m)?, Matrix::from_rows(m, rows))?;
    Ok(CorpusMap { description: format!("T{k}->T{m} x|->{a}x+{b}x^2"), map })
}

/// Block-diagonal `f ⊕ g : C ⊕ C' → D ⊕ D'`.
pub fn sum_of_maps(f: &CoalgebraMap, g: &CoalgebraMap) -> Result<CoalgebraMap> {
    let (fm, gm) = (f.matrix(), g.matrix());
    let top = fm.hstack(&Matrix::zeros(fm.rows(), gm.cols()));
    let bottom = Matrix::zeros(gm.rows(), fm.cols()).hstack(gm);
    CoalgebraMap::checked(direct_sum(f.domain(), g.domain())?, direct_sum(f.codomain(), g.codomain())?, top.vstack(&bottom))
}

/// `f ⊗ g : C ⊗ C' → D ⊗ D'`.
pub fn tensor_of_maps(f: &CoalgebraMap, g: &CoalgebraMap) -> Result<CoalgebraMap> {
    let m = f.matrix().kron(g.matrix(), f.domain().field());
    CoalgebraMap::checked(tensor(f.domain(), g.domain())?, tensor(f.codomain(), g.codomain())?, m)
}

fn point_inclusion(shape: &Shape, c: &Coalgebra, which: usize) -> Result<CorpusMap> {
    let g = shape.group_likes()[which].clone();
    let map = CoalgebraMap::checked(set_like(c.ring(), &["pt"]), c.clone(), Matrix::row_vector(g))?;
    Ok(CorpusMap { description: format!("pt->{} at group-like {which}", shape.describe()), map })
}

fn set_map(ring: &RingSpec, s: usize, t: usize, f: &[usize]) -> Result<CorpusMap> {
    let mut m = Matrix::zeros(s, t);
    for (i, &j) in f.iter().enumerate() {
        m[(i, j)] = Scalar::one();
    }
    let map = CoalgebraMap::checked(Shape::SetLike(s).build(ring)?, Shape::SetLike(t).build(ring)?, m)?;
    Ok(CorpusMap { description: format!("S{s}->S{t} {f:?}"), map })
}

fn summand_inclusions(a: &Shape, b: &Shape, ring: &RingSpec) -> Result<[CorpusMap; 2]> {
    let (ca, cb) = (a.build(ring)?, b.build(ring)?);
    let sum = direct_sum(&ca, &cb)?;
    let (na, nb) = (ca.rank(), cb.rank());
    let left = Matrix::identity(na).hstack(&Matrix::zeros(na, nb));
    let right = Matrix::zeros(nb, na).hstack(&Matrix::identity(nb));
    let name = Shape::sum(a.clone(), b.clone()).describe();
    Ok([
        CorpusMap { description: format!("{}->{name}", a.describe()), map: CoalgebraMap::checked(ca, sum.clone(), left)? },
        CorpusMap { description: format!("{}->{name}", b.describe()), map: CoalgebraMap::checked(cb, sum, right)? },
    ])
}

fn fold(a: &Shape, ring: &RingSpec) -> Result<CorpusMap> {
    let c = a.build(ring)?;
    let n = c.rank();
    let m = Matrix::identity(n).vstack(&Matrix::identity(n));
    let map = CoalgebraMap::checked(direct_sum(&c, &c)?, c, m)?;
    Ok(CorpusMap { description: format!("fold {}", a.describe()), map })
}

fn truncation_inclusion(ring: &RingSpec, j: usize, k: usize) -> Result<CorpusMap> {
    let m = Matrix::identity(j).hstack(&Matrix::zeros(j, k - j));
    let map = CoalgebraMap::checked(truncated(ring, j)?, truncated(ring, k)?, m)?;
    Ok(CorpusMap { description: format!("T{j}->T{k}"), map })
}

/// One random map of a randomly chosen kind; every kind keeps domain and
/// codomain within [`MAX_RANK`].
fn random_map(rng: &mut ChaCha8Rng, ring: &RingSpec) -> Result<CorpusMap> {
    match rng.gen_range(0..11) {
        0 => {
            let s = random_shape(rng, MAX_RANK);
            Ok(CorpusMap { description: format!("id {}", s.describe()), map: CoalgebraMap::identity(&s.build(ring)?) })
        }
        1 => {
            let s = random_shape(rng, MAX_RANK);
            Ok(CorpusMap { description: format!("counit {}", s.describe()), map: CoalgebraMap::counit_map(&s.build(ring)?) })
        }
        2 => {
            let s = random_shape(rng, MAX_RANK);
            let which = rng.gen_range(0..s.group_likes().len());
            point_inclusion(&s, &s.build(ring)?, which)
        }
        3 => {
            let a = random_shape(rng, 6);
            let b = random_shape(rng, 6);
            let [l, r] = summand_inclusions(&a, &b, ring)?;
            Ok(if rng.gen_bool(0.5) { l } else { r })
        }
        4 => fold(&random_shape(rng, 6), ring),
        5 => {
            let k = rng.gen_range(2..=MAX_RANK);
            truncation_inclusion(ring, rng.gen_range(1..k), k)
        }
        6 => {
            let k = rng.gen_range(1..=6);
            let m = rng.gen_range(k..=8);
            substitution_map(ring, k, m, rng.gen_range(-3..=3), rng.gen_range(-2..=2))
        }
        7 => {
            let (s, t) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
            let f: Vec<usize> = (0..s).map(|_| rng.gen_range(0..t)).collect();
            set_map(ring, s, t, &f)
        }
        8 => {
            let f = small_map(rng, ring)?;
            let g = small_map(rng, ring)?;
            let map = tensor_of_maps(&f.map, &g.map)?;
            Ok(CorpusMap { description: format!("({}) * ({})", f.description, g.description), map })
        }
        9 => {
            let f = small_map(rng, ring)?;
            let g = small_map(rng, ring)?;
            let map = sum_of_maps(&f.map, &g.map)?;
            Ok(CorpusMap { description: format!("({}) + ({})", f.description, g.description), map })
        }
        _ => {
            // T_j → T_k → T_m, then collapse or not
            let j = rng.gen_range(1..=4);
            let k = rng.gen_range(j..=5);
            let m = rng.gen_range(k..=6);
            let f = if j < k { truncation_inclusion(ring, j, k)? } else { CorpusMap { description: format!("id T{j}"), map: CoalgebraMap::identity(&truncated(ring, j)?) } };
            let g = substitution_map(ring, k, m, rng.gen_range(-3..=3), rng.gen_range(-2..=2))?;
            let map = f.map.then(&g.map)?;
            Ok(CorpusMap { description: format!("({}) then ({})", f.description, g.description), map })
        }
    }
}

/// Maps between coalgebras of rank at most 3, suitable as tensor factors.
fn small_map(rng: &mut ChaCha8Rng, ring: &RingSpec) -> Result<CorpusMap> {
    match rng.gen_range(0..5) {
        0 => {
            let k = rng.gen_range(1..=3);
            Ok(CorpusMap { description: format!("id T{k}"), map: CoalgebraMap::identity(&truncated(ring, k)?) })
        }
        1 => {
            let k = rng.gen_range(1..=3);
            Ok(CorpusMap { description: format!("counit T{k}"), map: CoalgebraMap::counit_map(&truncated(ring, k)?) })
        }
        2 => truncation_inclusion(ring, 1, rng.gen_range(2..=3)),
        3 => {
            let k = rng.gen_range(1..=3);
            let m = rng.gen_range(k..=3);
            substitution_map(ring, k, m, rng.gen_range(-2..=2), rng.gen_range(-1..=1))
        }
        _ => {
            let (s, t) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let f: Vec<usize> = (0..s).map(|_| rng.gen_range(0..t)).collect();
            set_map(ring, s, t, &f)
        }
    }
}

pub fn maps(seed: u64, count: usize, ring: &RingSpec) -> Result<Vec<CorpusMap>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_map(&mut rng, ring)).collect()
}

/// Pairs whose tensor product stays within [`MAX_RANK`].
pub fn tensor_pairs(seed: u64, count: usize) -> Vec<(Shape, Shape)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = random_shape(&mut rng, 6);
            let b = random_shape(&mut rng, MAX_RANK / a.rank());
            (a, b)
        })
        .collect()
}

/// Random lattices in `ℤ^n`, `n ≤ 6`, with small entries and a mix of pure
/// and non-pure spans.
pub fn random_lattices(seed: u64, count: usize) -> Result<Vec<Lattice>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = RingSpec::Integers;
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            let k = rng.gen_range(0..=n + 1);
            let bound = *[1i64, 2, 3, 6].choose(&mut rng).expect("nonempty");
            let rows: Vec<Vec<Scalar>> = (0..k).map(|_| (0..n).map(|_| int(rng.gen_range(-bound..=bound))).collect()).collect();
            let scale = *[1i64, 1, 2, 3].choose(&mut rng).expect("nonempty");
            let rows = rows.into_iter().map(|r| r.into_iter().map(|x| x * int(scale)).collect()).collect::<Vec<_>>();
            Lattice::from_vectors(&ring, n, &rows)
        })
        .collect()
}
