use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{kernel_lattice, Lattice, QuotientMaps};
use crate::linalg::snf;
use crate::matrix::Matrix;
use crate::ring::{RingSpec, Scalar};

use super::coalgebra::{SimplicialCoalgebra, SimplicialCoalgebraMap};

/// `∂_n : C_n → C_{n−1}` as `ranks[n] × ranks[n−1]` matrices; `∂_0` has no columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    ring: RingSpec,
    ranks: Vec<usize>,
    boundaries: Vec<Matrix>,
}

impl ChainComplex {
    pub fn new(ring: RingSpec, boundaries: Vec<Matrix>) -> Result<Self> {
        let ranks: Vec<usize> = boundaries.iter().map(Matrix::rows).collect();
        for (n, b) in boundaries.iter().enumerate() {
            let want = if n == 0 { 0 } else { ranks[n - 1] };
            if b.cols() != want {
                return Err(Error::DimensionMismatch(format!("boundary in degree {n}")));
            }
        }
        let field = ring.fraction_field();
        for n in 2..boundaries.len() {
            if !boundaries[n].mul(&boundaries[n - 1], field).is_zero() {
                return Err(Error::invariant(format!("boundary squares to nonzero in degree {n}")));
            }
        }
        Ok(ChainComplex { ring, ranks, boundaries })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn boundary(&self, n: usize) -> &Matrix {
        &self.boundaries[n]
    }

    /// Highest degree whose homology is determined by the stored data.
    pub fn top_homology_degree(&self) -> Option<usize> {
        self.boundaries.len().checked_sub(2)
    }

    pub fn homology(&self, n: usize) -> Result<HomologyGroup> {
        let max = self.top_homology_degree();
        if max.is_none_or(|m| n > m) {
            return Err(Error::DegreeTooHigh { requested: n, max: max.unwrap_or(0) });
        }
        let out = snf(&self.ring, &self.boundaries[n]).rank();
        let inc = snf(&self.ring, &self.boundaries[n + 1]);
        let torsion = inc.divisors.iter().filter(|d| !d.is_one()).cloned().collect();
        Ok(HomologyGroup { ring: self.ring.clone(), betti: self.ranks[n] - out - inc.rank(), torsion })
    }

    pub fn homology_through(&self, top: usize) -> Result<Vec<HomologyGroup>> {
        (0..=top).map(|n| self.homology(n)).collect()
    }
}

/// `R^betti ⊕ ⊕ R/t` over the ground ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub ring: RingSpec,
    pub betti: usize,
    /// Non-unit invariant factors, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let r = self.ring.symbol();
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push(r.clone()),
            b => parts.push(format!("{r}^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("{r}/{t}")));
        f.write_str(&parts.join("+"))
    }
}

/// Normalized chains through degree `top`, with the quotient data used to
/// push levelwise maps down.
struct Normalized {
    complex: ChainComplex,
    quotients: Vec<QuotientMaps>,
}

fn check_degree(c: &SimplicialCoalgebra, top: usize) -> Result<()> {
    let max = c.dimension().checked_sub(1);
    if max.is_none_or(|m| top > m) {
        return Err(Error::DegreeTooHigh { requested: top, max: max.unwrap_or(0) });
    }
    Ok(())
}

/// `C_n / D_n` with `D_n` the span of all degeneracy images, for `n ≤ top + 1`.
fn normalize(c: &SimplicialCoalgebra, top: usize) -> Result<Normalized> {
    let ring = c.ring();
    let field = c.level(0).field();
    let mut quotients = Vec::with_capacity(top + 2);
    for n in 0..=top + 1 {
        let rank = c.level(n).rank();
        let mut degenerate = Lattice::zero(ring.clone(), rank);
        if n > 0 {
            let lower = c.level(n - 1).full_lattice();
            for j in 0..n {
                degenerate = degenerate.sum(&lower.image(c.degeneracy(n - 1, j).matrix())?)?;
            }
        }
        let q = degenerate
            .quotient_maps()
            .map_err(|_| Error::invariant(format!("degenerate part of level {n} is not a direct summand")))?;
        quotients.push(q);
    }
    let mut boundaries = Vec::with_capacity(top + 2);
    for n in 0..=top + 1 {
        let q = &quotients[n];
        if n == 0 {
            boundaries.push(Matrix::zeros(q.section.rows(), 0));
            continue;
        }
        let mut d = Matrix::zeros(c.level(n).rank(), c.level(n - 1).rank());
        for i in 0..=n {
            let fi = c.face(n, i).matrix();
            d = if i % 2 == 0 { d.add(fi, field) } else { d.sub(fi, field) };
        }
        boundaries.push(q.section.mul(&d, field).mul(&quotients[n - 1].projection, field));
    }
    Ok(Normalized { complex: ChainComplex::new(ring.clone(), boundaries)?, quotients })
}

/// Normalized chain complex through degree `top + 1`.
pub fn normalized_complex(c: &SimplicialCoalgebra, top: usize) -> Result<ChainComplex> {
    check_degree(c, top)?;
    Ok(normalize(c, top)?.complex)
}

/// `H_0 … H_top` of the normalized complex.
pub fn homology(c: &SimplicialCoalgebra, top: usize) -> Result<Vec<HomologyGroup>> {
    normalized_complex(c, top)?.homology_through(top)
}

fn normalized_map(f: &SimplicialCoalgebraMap, src: &Normalized, tgt: &Normalized, n: usize) -> Matrix {
    let field = f.source().level(0).field();
    src.quotients[n].section.mul(f.level(n).matrix(), field).mul(&tgt.quotients[n].projection, field)
}

/// Cone of `f : C → D` in degrees `0 … top + 1`: `Cone_n = C_{n−1} ⊕ D_n`,
/// `∂(c, d) = (−∂c, f(c) + ∂d)`.
fn mapping_cone(c: &ChainComplex, d: &ChainComplex, f: &[Matrix]) -> Result<ChainComplex> {
    let field = c.ring().fraction_field();
    let len = d.boundaries.len();
    let rc = |n: isize| if n < 0 { 0 } else { c.ranks[n as usize] };
    let mut boundaries = Vec::with_capacity(len);
    for n in 0..len {
        let cols = if n == 0 { 0 } else { rc(n as isize - 2) + d.ranks[n - 1] };
        if n == 0 {
            boundaries.push(Matrix::zeros(d.ranks[0], 0));
            continue;
        }
        let top_rows = if n >= 2 {
            c.boundaries[n - 1].scale(&-Scalar::one(), field).hstack(&f[n - 1])
        } else {
            Matrix::zeros(c.ranks[0], 0).hstack(&f[0])
        };
        let bottom = Matrix::zeros(d.ranks[n], rc(n as isize - 2)).hstack(&d.boundaries[n]);
        let b = top_rows.vstack(&bottom);
        debug_assert_eq!(b.cols(), cols);
        boundaries.push(b);
    }
    ChainComplex::new(c.ring().clone(), boundaries)
}

/// Whether `H_top(f)` is injective: cycles whose image bounds must already bound.
fn top_map_injective(c: &ChainComplex, d: &ChainComplex, f: &Matrix, top: usize) -> Result<bool> {
    let ring = c.ring();
    let field = ring.fraction_field();
    let cycles = kernel_lattice(ring, &c.boundaries[top]);
    let bc = Lattice::span(ring, &c.boundaries[top + 1])?;
    let bd = Lattice::span(ring, &d.boundaries[top + 1])?;
    let r = cycles.rank();
    if r == 0 {
        return Ok(true);
    }
    let z = cycles.basis();
    let stacked = z.mul(f, field).vstack(&bd.basis().scale(&-Scalar::one(), field));
    let rel = kernel_lattice(ring, &stacked);
    let coeffs = rel.basis().select_cols(&(0..r).collect::<Vec<_>>());
    let preimage = Lattice::span(ring, &coeffs.mul(z, field))?;
    preimage.is_subset(&bc)
}

/// `f` induces isomorphisms `H_n` for `n ≤ top`: the cone is acyclic through
/// `top` and `H_top(f)` is injective.
pub fn is_weak_equivalence(f: &SimplicialCoalgebraMap, top: usize) -> Result<bool> {
    check_degree(f.source(), top)?;
    check_degree(f.target(), top)?;
    let src = normalize(f.source(), top)?;
    let tgt = normalize(f.target(), top)?;
    let maps: Vec<Matrix> = (0..=top + 1).map(|n| normalized_map(f, &src, &tgt, n)).collect();
    let cone = mapping_cone(&src.complex, &tgt.complex, &maps)?;
    for n in 0..=top {
        if !cone.homology(n)?.is_zero() {
            return Ok(false);
        }
    }
    top_map_injective(&src.complex, &tgt.complex, &maps[top], top)
}

/// Every matrix has full row rank with unit invariant factors.
pub fn are_pure_injections(ring: &RingSpec, levels: &[&Matrix]) -> bool {
    levels.iter().all(|m| {
        let s = snf(ring, m);
        s.rank() == m.rows() && s.all_units()
    })
}

/// Degreewise pure injection.
pub fn is_cofibration(f: &SimplicialCoalgebraMap) -> bool {
    let levels: Vec<&Matrix> = (0..=f.source().dimension()).map(|n| f.level(n).matrix()).collect();
    are_pure_injections(f.source().ring(), &levels)
}

#[cfg(test)]
mod tests {
    use super::super::coalgebra::{chains_functor, chains_of_map, gr_simplicial_map};
    use super::super::models;
    use super::super::SimplicialMap;
    use super::*;
    use crate::coalgebra::{dual_of_algebra, AlgebraPresentation};
    use crate::grouplike::is_pointed;

    fn show(hs: &[HomologyGroup]) -> Vec<String> {
        hs.iter().map(ToString::to_string).collect()
    }

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    #[test]
    fn homology_examples() {
        let h = |x| show(&homology(&chains_functor(&x, &z()).unwrap(), 2).unwrap());
        assert_eq!(h(models::point(3)), ["Z", "0", "0"]);
        assert_eq!(h(models::circle(3)), ["Z", "Z", "0"]);
        assert_eq!(h(models::rp2(3)), ["Z", "Z/2", "0"]);
        assert_eq!(h(models::sphere2(3)), ["Z", "0", "Z"]);
        assert_eq!(h(models::two_point(3)), ["Z^2", "0", "0"]);
        assert_eq!(h(models::boundary(2, 3)), ["Z", "Z", "0"]);
        assert_eq!(h(models::delta(2, 3)), ["Z", "0", "0"]);
    }

    #[test]
    fn homology_over_other_rings() {
        let rp2 = models::rp2(3);
        let f2 = RingSpec::prime_field(2).unwrap();
        let hs = homology(&chains_functor(&rp2, &f2).unwrap(), 2).unwrap();
        assert_eq!(show(&hs), ["F_2", "F_2", "F_2"]);
        let half = RingSpec::localized(&[2]).unwrap();
        let hs = homology(&chains_functor(&rp2, &half).unwrap(), 2).unwrap();
        assert_eq!(hs.iter().map(|h| h.betti).collect::<Vec<_>>(), vec![1, 0, 0]);
        assert!(hs.iter().all(|h| h.torsion.is_empty()));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let c = chains_functor(&models::circle(2), &z()).unwrap();
        assert!(homology(&c, 1).is_ok());
        assert!(matches!(homology(&c, 2), Err(Error::DegreeTooHigh { requested: 2, max: 1 })));
    }

    #[test]
    fn constant_object_is_concentrated_in_degree_zero() {
        let c = dual_of_algebra(&AlgebraPresentation::truncated(&z(), 3)).unwrap();
        let s = SimplicialCoalgebra::constant(&c, 3).unwrap();
        assert_eq!(show(&homology(&s, 2).unwrap()), ["Z^3", "0", "0"]);
    }

    #[test]
    fn weak_equivalence_examples() {
        let c = chains_functor(&models::circle(3), &z()).unwrap();
        assert!(is_weak_equivalence(&SimplicialCoalgebraMap::identity(&c), 2).unwrap());
        for (name, f) in models::weak_equivalences(3) {
            assert!(is_weak_equivalence(&chains_of_map(&f, &z()).unwrap(), 2).unwrap(), "{name}");
        }
        for (name, f) in models::non_equivalences(3) {
            assert!(!is_weak_equivalence(&chains_of_map(&f, &z()).unwrap(), 2).unwrap(), "{name}");
        }
        // H_0 is onto for two points → point; injectivity is what fails.
        let f = SimplicialMap::constant(&models::two_point(1), &models::point(1), "0").unwrap();
        assert!(!is_weak_equivalence(&chains_of_map(&f, &z()).unwrap(), 0).unwrap());
    }

    #[test]
    fn circle_into_rp2_is_an_equivalence_only_in_degree_zero() {
        let rp2 = chains_functor(&models::rp2(2), &z()).unwrap();
        let f = chains_of_map(&models::monomorphisms(2)[7].1, &z()).unwrap();
        assert_eq!(f.target(), &rp2);
        assert!(is_weak_equivalence(&f, 0).unwrap());
        assert!(!is_weak_equivalence(&f, 1).unwrap());
    }

    #[test]
    fn cofibration_examples() {
        let c = chains_functor(&models::rp2(2), &z()).unwrap();
        assert!(is_cofibration(&SimplicialCoalgebraMap::identity(&c)));
        for (name, f) in models::monomorphisms(2) {
            assert!(is_cofibration(&chains_of_map(&f, &z()).unwrap()), "{name}");
        }
        let r = &models::weak_equivalences(2)[0].1;
        assert!(!is_cofibration(&chains_of_map(r, &z()).unwrap()));
        let two = Matrix::identity(2).scale(&crate::ring::int(2), crate::ring::Field::Rationals);
        assert!(!are_pure_injections(&z(), &[&Matrix::identity(3), &two]));
        assert!(are_pure_injections(&RingSpec::localized(&[2]).unwrap(), &[&two]));
    }

    #[test]
    fn gr_of_weak_equivalences_are_homology_equivalences() {
        for (name, f) in models::weak_equivalences(3) {
            let cf = chains_of_map(&f, &z()).unwrap();
            assert!(is_pointed(cf.source().level(0)).unwrap().pointed);
            let g = gr_simplicial_map(&cf).unwrap();
            assert!(is_weak_equivalence(&chains_of_map(&g, &z()).unwrap(), 2).unwrap(), "{name}");
        }
    }
}
