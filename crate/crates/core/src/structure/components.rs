use num_traits::One;

use crate::coalgebra::{dual_algebra, is_subcoalgebra, Coalgebra, CoalgebraMap};
use crate::error::{Error, Result};
use crate::grouplike::{group_likes, is_pointed, GroupLikeSet};
use crate::lattice::{kernel_lattice, Lattice};
use crate::linalg::field::{inverse, solve_left};
use crate::linalg::snf;
use crate::matrix::Matrix;
use crate::ring::Scalar;

use super::wedge::wedge;

/// `C = ⊕_g P_g`, parts sorted by their group-like.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub parts: Vec<(Vec<Scalar>, Lattice)>,
}

impl ComponentDecomposition {
    pub fn ranks(&self) -> Vec<usize> {
        self.parts.iter().map(|(_, l)| l.rank()).collect()
    }

    /// Basis rows of all parts in order; square and unimodular when the
    /// decomposition is direct.
    pub fn stacked_basis(&self, n: usize) -> Matrix {
        Matrix::from_rows(n, self.parts.iter().flat_map(|(_, l)| l.basis_vectors()).collect())
    }

    /// Each part is a pure subcoalgebra holding exactly its own group-like,
    /// parts meet pairwise in zero, and together they span `C` directly.
    pub fn check(&self, c: &Coalgebra, gr: &GroupLikeSet) -> Result<()> {
        let fail = |what: &str| Err(Error::invariant(format!("component decomposition: {what}")));
        for (g, p) in &self.parts {
            if !p.is_pure()?.pure || !is_subcoalgebra(p, c)? {
                return fail("part is not a pure subcoalgebra");
            }
            let inside = gr.vectors.iter().filter(|h| p.contains(h).unwrap_or(false)).count();
            if inside != 1 || !p.contains(g)? {
                return fail("part does not contain exactly its own group-like");
            }
        }
        for i in 0..self.parts.len() {
            for j in i + 1..self.parts.len() {
                if self.parts[i].1.intersect(&self.parts[j].1)?.rank() != 0 {
                    return fail("parts intersect");
                }
            }
        }
        let stacked = self.stacked_basis(c.rank());
        let s = snf(c.ring(), &stacked);
        if stacked.rows() != c.rank() || s.rank() != c.rank() || !s.all_units() {
            return fail("stacked basis is not unimodular");
        }
        Ok(())
    }
}

fn pointed_group_likes(c: &Coalgebra) -> Result<GroupLikeSet> {
    if !is_pointed(c)?.pointed {
        return Err(Error::NotPointed);
    }
    group_likes(c)
}

/// `M_a` with `x · M_a = (id ⊗ a)(Δx)` for `a` in the dual algebra.
fn hit_matrix(c: &Coalgebra, a: &[Scalar]) -> Matrix {
    let field = c.field();
    let n = c.rank();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for (j, k, x) in c.terms(i) {
            m[(i, j)] = field.add(&m[(i, j)], &field.mul(x, &a[k]));
        }
    }
    m
}

/// Components from the primitive idempotents of the dual algebra: lift the
/// idempotent of `(A⊗K)/J` dual to `g` by `e ← 3e² − 2e³`, then
/// `P_g = C ∩ {x : e ⇀ x = x}`.
pub fn components(c: &Coalgebra) -> Result<ComponentDecomposition> {
    let gr = pointed_group_likes(c)?;
    let n = c.rank();
    let field = c.field();
    let a = dual_algebra(c);
    // Columns are the characters: φ_h(a) = a · h.
    let chars = Matrix::from_rows(n, gr.vectors.clone()).transpose();
    let steps = (usize::BITS - n.next_power_of_two().leading_zeros()) as usize + 1;
    let mut parts = Vec::with_capacity(gr.len());
    for (idx, g) in gr.vectors.iter().enumerate() {
        let mut target = vec![Scalar::from_integer(0.into()); gr.len()];
        target[idx] = Scalar::one();
        let mut e = solve_left(field, &chars, &target)
            .ok_or_else(|| Error::invariant("characters are not independent"))?;
        for _ in 0..steps {
            let e2 = a.multiply(&e, &e);
            let e3 = a.multiply(&e2, &e);
            e = e2
                .iter()
                .zip(&e3)
                .map(|(x, y)| field.sub(&field.mul(&field.from_int(3), x), &field.mul(&field.from_int(2), y)))
                .collect();
        }
        if a.multiply(&e, &e) != e {
            return Err(Error::invariant("idempotent lifting did not converge"));
        }
        let m = hit_matrix(c, &e).sub(&Matrix::identity(n), field);
        parts.push((g.clone(), kernel_lattice(c.ring(), &m)));
    }
    let dec = ComponentDecomposition { parts };
    dec.check(c, &gr)?;
    Ok(dec)
}

/// Components as the stable values of `D_{k+1} = D_k ∧ span{g}`.
pub fn components_by_wedge(c: &Coalgebra) -> Result<ComponentDecomposition> {
    let gr = pointed_group_likes(c)?;
    let mut parts = Vec::with_capacity(gr.len());
    for g in &gr.vectors {
        let d0 = Lattice::from_vectors(c.ring(), c.rank(), std::slice::from_ref(g))?;
        let mut cur = d0.clone();
        let mut steps = 0;
        loop {
            let next = wedge(&cur, &d0, c)?;
            if next == cur {
                break;
            }
            steps += 1;
            if steps > c.rank() + 1 {
                return Err(Error::invariant("wedge iteration did not stabilize"));
            }
            cur = next;
        }
        parts.push((g.clone(), cur));
    }
    let dec = ComponentDecomposition { parts };
    dec.check(c, &gr)?;
    Ok(dec)
}

/// The retraction onto the coradical, `x ↦ ε(x)·g` on each `P_g`.
pub fn split_coradical(c: &Coalgebra) -> Result<CoalgebraMap> {
    let dec = components(c)?;
    let field = c.field();
    let n = c.rank();
    let b = dec.stacked_basis(n);
    let mut images = Vec::with_capacity(n);
    for (g, p) in &dec.parts {
        for v in p.basis_vectors() {
            let e = c.counit_of(&v);
            images.push(g.iter().map(|x| field.mul(&e, x)).collect());
        }
    }
    let binv = inverse(field, &b).ok_or_else(|| Error::invariant("component basis is singular"))?;
    let r = binv.mul(&Matrix::from_rows(n, images), field);
    let map = CoalgebraMap::checked(c.clone(), c.clone(), r)?;
    let v0 = Lattice::from_vectors(c.ring(), n, &dec.parts.iter().map(|(g, _)| g.clone()).collect::<Vec<_>>())?;
    let rr = map.matrix().mul(map.matrix(), field);
    if &rr != map.matrix() || map.image() != v0 || !v0.basis_vectors().iter().all(|x| map.apply(x) == *x) {
        return Err(Error::invariant("coradical splitting is not a retraction onto the coradical"));
    }
    Ok(map)
}

/// Whether `r_D ∘ f = f ∘ r_C`, i.e. `R_C·F = F·R_D` in row convention.
pub fn check_splitting_naturality(f: &CoalgebraMap) -> Result<bool> {
    let rc = split_coradical(f.domain())?;
    let rd = split_coradical(f.codomain())?;
    let field = f.domain().field();
    Ok(rc.matrix().mul(f.matrix(), field) == f.matrix().mul(rd.matrix(), field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{direct_sum, dual_of_algebra, set_like, tensor, AlgebraPresentation};
    use crate::ring::RingSpec;

    fn truncated(k: usize) -> Coalgebra {
        dual_of_algebra(&AlgebraPresentation::truncated(&RingSpec::Integers, k)).unwrap()
    }

    #[test]
    fn component_examples() {
        let z = RingSpec::Integers;
        let ab = set_like(&z, &["a", "b"]);
        let dec = components(&ab).unwrap();
        assert_eq!(dec.ranks(), vec![1, 1]);
        assert_eq!(dec, components_by_wedge(&ab).unwrap());

        let c = direct_sum(&truncated(3), &set_like(&z, &["a"])).unwrap();
        let dec = components(&c).unwrap();
        // group-likes sorted: (0,0,0,1) before (1,0,0,0)
        assert_eq!(dec.ranks(), vec![1, 3]);
        assert_eq!(dec, components_by_wedge(&c).unwrap());

        let t = tensor(&truncated(2), &truncated(2)).unwrap();
        let dec = components(&t).unwrap();
        assert_eq!(dec.ranks(), vec![4]);
        assert_eq!(dec, components_by_wedge(&t).unwrap());
    }

    #[test]
    fn wedge_components_of_irreducible_are_full() {
        let c = truncated(3);
        let dec = components_by_wedge(&c).unwrap();
        assert!(dec.parts[0].1.is_full());
    }

    #[test]
    fn splitting_examples() {
        let z = RingSpec::Integers;
        let s = set_like(&z, &["a", "b", "c"]);
        assert_eq!(split_coradical(&s).unwrap().matrix(), &Matrix::identity(3));
        let r = split_coradical(&truncated(2)).unwrap();
        assert_eq!(r.matrix(), &Matrix::from_i64(2, &[&[1, 0], &[0, 0]]));
        let c = direct_sum(&truncated(3), &set_like(&z, &["a"])).unwrap();
        let r = split_coradical(&c).unwrap();
        assert_eq!(
            r.matrix(),
            &Matrix::from_i64(4, &[&[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn naturality_examples() {
        let c3 = truncated(3);
        assert!(check_splitting_naturality(&CoalgebraMap::identity(&c3)).unwrap());
        assert!(check_splitting_naturality(&CoalgebraMap::counit_map(&c3)).unwrap());
        let c2 = truncated(2);
        let inc = CoalgebraMap::checked(c2, c3, Matrix::from_i64(3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert!(check_splitting_naturality(&inc).unwrap());
        let sqrt2 = dual_of_algebra(&AlgebraPresentation::monogenic(&RingSpec::Integers, &[-2, 0]).unwrap()).unwrap();
        assert!(matches!(check_splitting_naturality(&CoalgebraMap::identity(&sqrt2)), Err(Error::NotPointed)));
    }

    #[test]
    fn non_pure_group_likes_are_reported() {
        // Z[y]/(y² − 2y): the two components would only span an index-2 sublattice.
        let c = dual_of_algebra(&AlgebraPresentation::monogenic(&RingSpec::Integers, &[0, -2]).unwrap()).unwrap();
        assert!(matches!(components(&c), Err(Error::Invariant(_))));
    }
}
