use num_traits::Zero;

use crate::coalgebra::{is_subcoalgebra, Coalgebra};
use crate::error::{Error, Result};
use crate::grouplike::{group_likes, is_pointed};
use crate::lattice::{kernel_lattice, Lattice};
use crate::matrix::Matrix;
use crate::ring::Scalar;

fn require_pure_subcoalgebra(l: &Lattice, c: &Coalgebra) -> Result<()> {
    if l.ambient_rank() != c.rank() {
        return Err(Error::AmbientMismatch(c.rank(), l.ambient_rank()));
    }
    if !l.is_pure()?.pure {
        return Err(Error::NotPure);
    }
    if !is_subcoalgebra(l, c)? {
        return Err(Error::NotSubcoalgebra);
    }
    Ok(())
}

/// `Δ` followed by `P_D ⊗ P_F`, as an `n × (q_D·q_F)` matrix.
fn composite(c: &Coalgebra, pd: &Matrix, pf: &Matrix) -> Matrix {
    let field = c.field();
    let n = c.rank();
    let (qd, qf) = (pd.cols(), pf.cols());
    let mut m = Matrix::zeros(n, qd * qf);
    for i in 0..n {
        for (j, k, x) in c.terms(i) {
            for s in 0..qd {
                let a = &pd[(j, s)];
                if a.is_zero() {
                    continue;
                }
                let xa = field.mul(x, a);
                for t in 0..qf {
                    let b = &pf[(k, t)];
                    if !b.is_zero() {
                        let col = s * qf + t;
                        m[(i, col)] = field.add(&m[(i, col)], &field.mul(&xa, b));
                    }
                }
            }
        }
    }
    m
}

/// `D ∧ F = ker(C → C⊗C → C/D ⊗ C/F)`.
pub fn wedge(d: &Lattice, f: &Lattice, c: &Coalgebra) -> Result<Lattice> {
    require_pure_subcoalgebra(d, c)?;
    require_pure_subcoalgebra(f, c)?;
    let pd = d.quotient_maps()?.projection;
    let pf = f.quotient_maps()?.projection;
    if pd.cols() == 0 || pf.cols() == 0 {
        return Ok(c.full_lattice());
    }
    Ok(kernel_lattice(c.ring(), &composite(c, &pd, &pf)))
}

/// Primitives `{x : Δx = g⊗x + x⊗g}` of an irreducible pointed coalgebra.
pub fn primitives(c: &Coalgebra, g: &[Scalar]) -> Result<Lattice> {
    if !is_pointed(c)?.pointed {
        return Err(Error::NotPointed);
    }
    let gr = group_likes(c)?;
    if gr.len() != 1 {
        return Err(Error::NotIrreducible(gr.len()));
    }
    if gr.vectors[0].as_slice() != g {
        return Err(Error::NotGroupLike);
    }
    let field = c.field();
    let n = c.rank();
    let mut m = c.delta().clone();
    for i in 0..n {
        for (t, gt) in g.iter().enumerate() {
            if gt.is_zero() {
                continue;
            }
            // g⊗e_i at (t, i) and e_i⊗g at (i, t)
            m[(i, t * n + i)] = field.sub(&m[(i, t * n + i)], gt);
            m[(i, i * n + t)] = field.sub(&m[(i, i * n + t)], gt);
        }
    }
    let pr = kernel_lattice(c.ring(), &m);
    let v0 = gr.lattice(c.ring(), n);
    let v1 = wedge(&v0, &v0, c)?;
    let sum = v0.sum(&pr)?;
    if v1.rank() != v0.rank() + pr.rank() || sum != v1 {
        return Err(Error::invariant("first coradical stage is not the coradical plus primitives"));
    }
    Ok(pr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{dual_of_algebra, set_like, AlgebraPresentation};
    use crate::ring::{int, RingSpec};

    fn truncated(k: usize) -> Coalgebra {
        dual_of_algebra(&AlgebraPresentation::truncated(&RingSpec::Integers, k)).unwrap()
    }

    fn lat(rows: &[&[i64]], n: usize) -> Lattice {
        Lattice::span(&RingSpec::Integers, &Matrix::from_i64(n, rows)).unwrap()
    }

    #[test]
    fn wedge_examples() {
        let c = truncated(3);
        let full = c.full_lattice();
        assert!(wedge(&full, &full, &c).unwrap().is_full());
        let g = lat(&[&[1, 0, 0]], 3);
        assert_eq!(wedge(&g, &g, &c).unwrap(), lat(&[&[1, 0, 0], &[0, 1, 0]], 3));
        let zero = Lattice::zero(RingSpec::Integers, 3);
        assert_eq!(wedge(&zero, &zero, &c).unwrap().rank(), 0);
        assert!(matches!(wedge(&lat(&[&[2, 0, 0]], 3), &g, &c), Err(Error::NotPure)));
        assert!(matches!(wedge(&lat(&[&[0, 1, 0]], 3), &g, &c), Err(Error::NotSubcoalgebra)));
    }

    #[test]
    fn primitive_examples() {
        let z = RingSpec::Integers;
        let p = set_like(&z, &["a"]);
        assert_eq!(primitives(&p, &[int(1)]).unwrap().rank(), 0);
        let c2 = truncated(2);
        assert_eq!(primitives(&c2, &[int(1), int(0)]).unwrap(), lat(&[&[0, 1]], 2));
        let c3 = truncated(3);
        assert_eq!(primitives(&c3, &[int(1), int(0), int(0)]).unwrap(), lat(&[&[0, 1, 0]], 3));
        let ab = set_like(&z, &["a", "b"]);
        assert!(matches!(primitives(&ab, &[int(1), int(0)]), Err(Error::NotIrreducible(2))));
    }
}
