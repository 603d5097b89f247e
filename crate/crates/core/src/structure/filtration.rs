use num_traits::Zero;

use crate::coalgebra::{is_subcoalgebra, tensor, Coalgebra, CoalgebraMap};
use crate::error::{Error, Result};
use crate::grouplike::{group_likes, is_pointed};
use crate::lattice::Lattice;
use crate::linalg::field::inverse;
use crate::matrix::Matrix;
use crate::report::ValidationReport;

use super::wedge::wedge;

/// An increasing chain of pure subcoalgebras `V₀ ⊆ … ⊆ V_m` of the pure
/// subcoalgebra `top` with `Δ(V_n) ⊆ Σ_i V_{n−i} ⊗ V_i`. Stages past `m`
/// repeat `V_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    coalgebra: Coalgebra,
    top: Lattice,
    stages: Vec<Lattice>,
}

const UNBOUNDED: usize = usize::MAX / 4;

impl Filtration {
    /// A validated filtration of all of `c`.
    pub fn new(c: &Coalgebra, stages: Vec<Lattice>) -> Result<Self> {
        Self::within(c, c.full_lattice(), stages)
    }

    /// A validated filtration of the pure subcoalgebra `top`.
    pub fn within(c: &Coalgebra, top: Lattice, stages: Vec<Lattice>) -> Result<Self> {
        let f = Filtration {
            coalgebra: c.clone(),
            top,
            stages,
        };
        let report = f.validate()?;
        if report.overall() {
            Ok(f)
        } else {
            Err(Error::Validation(report))
        }
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn top(&self) -> &Lattice {
        &self.top
    }

    pub fn stages(&self) -> &[Lattice] {
        &self.stages
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    /// `V_i`, with `V_i = V_m` beyond the last stage.
    pub fn stage(&self, i: usize) -> &Lattice {
        &self.stages[i.min(self.stages.len() - 1)]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.stages.iter().map(Lattice::rank).collect()
    }

    /// `rank(V_i / V_{i−1})`.
    pub fn graded_ranks(&self) -> Vec<usize> {
        let r = self.ranks();
        (0..r.len()).map(|i| r[i] - if i == 0 { 0 } else { r[i - 1] }).collect()
    }

    pub fn is_exhaustive(&self) -> bool {
        self.stages.last() == Some(&self.top)
    }

    /// A basis of `R^n` adapted to the chain, with the first stage index
    /// containing each vector (`UNBOUNDED` outside `V_m`).
    fn adapted_basis(&self) -> Result<(Matrix, Vec<usize>)> {
        let n = self.coalgebra.rank();
        let field = self.coalgebra.field();
        let mut rows: Vec<Vec<_>> = Vec::new();
        let mut weights = Vec::new();
        let mut prev = Lattice::zero(self.coalgebra.ring().clone(), n);
        let full = self.coalgebra.full_lattice();
        for (w, next) in self.stages.iter().chain([&self.top, &full]).enumerate() {
            let q = prev.quotient_maps()?;
            let img = next.image(&q.projection)?;
            for y in img.basis_vectors() {
                rows.push(q.section.apply(&y, field));
                weights.push(if w < self.stages.len() { w } else { UNBOUNDED });
            }
            prev = next.clone();
        }
        if rows.len() != n {
            return Err(Error::invariant("adapted basis has wrong size"));
        }
        Ok((Matrix::from_rows(n, rows), weights))
    }

    fn validate(&self) -> Result<ValidationReport> {
        let c = &self.coalgebra;
        let n = c.rank();
        let mut report = ValidationReport::new();
        if self.stages.is_empty() {
            report.fail("nonempty", "no stages");
            return Ok(report);
        }
        for l in self.stages.iter().chain(std::iter::once(&self.top)) {
            if l.ambient_rank() != n || l.ring() != c.ring() {
                return Err(Error::AmbientMismatch(n, l.ambient_rank()));
            }
        }
        let bad = self.stages.iter().chain(std::iter::once(&self.top)).position(|l| !l.purity_by_divisors().pure);
        report.record("stages pure", bad.map(|i| format!("stage {i}")));
        let mut bad = None;
        for (i, l) in self.stages.iter().chain(std::iter::once(&self.top)).enumerate() {
            if !is_subcoalgebra(l, c)? {
                bad = Some(format!("stage {i}"));
                break;
            }
        }
        report.record("stages subcoalgebras", bad);
        let mut bad = None;
        for i in 0..self.stages.len() {
            let next = self.stages.get(i + 1).unwrap_or(&self.top);
            if !self.stages[i].is_subset(next)? {
                bad = Some(format!("stage {i}"));
                break;
            }
        }
        report.record("monotone", bad);
        if !report.overall() {
            return Ok(report);
        }
        report.record("comultiplication compatible", self.compatibility_violation()?);
        Ok(report)
    }

    /// First `n` with `Δ(V_n) ⊄ Σ_i V_{n−i}⊗V_i`.
    fn compatibility_violation(&self) -> Result<Option<String>> {
        let c = &self.coalgebra;
        let field = c.field();
        let n = c.rank();
        if n == 0 {
            return Ok(None);
        }
        let (b, w) = self.adapted_basis()?;
        let binv = inverse(field, &b).ok_or_else(|| Error::invariant("adapted basis is singular"))?;
        let binv_t = binv.transpose();
        for (s, stage) in self.stages.iter().enumerate() {
            for x in stage.basis_vectors() {
                let dx = c.coproduct(&x);
                let xm = Matrix::from_rows(n, dx.chunks(n).map(|r| r.to_vec()).collect());
                let y = binv_t.mul(&xm, field).mul(&binv, field);
                for a in 0..n {
                    for bb in 0..n {
                        if !y[(a, bb)].is_zero() && w[a].saturating_add(w[bb]) > s {
                            return Ok(Some(format!("stage {s}")));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// `C₀ = span Gr(C)`, `C_{n+1} = C_n ∧ C₀`, until the full lattice.
pub fn coradical_filtration(c: &Coalgebra) -> Result<Filtration> {
    if !is_pointed(c)?.pointed {
        return Err(Error::NotPointed);
    }
    let gr = group_likes(c)?;
    if !gr.is_independent_and_pure() {
        return Err(Error::invariant("group-likes do not span a pure sublattice"));
    }
    let v0 = gr.lattice(c.ring(), c.rank());
    let mut stages = vec![v0.clone()];
    while !stages.last().unwrap().is_full() {
        if stages.len() > c.rank() + 1 {
            return Err(Error::invariant("coradical filtration did not terminate"));
        }
        let next = wedge(stages.last().unwrap(), &v0, c)?;
        if &next == stages.last().unwrap() {
            return Err(Error::NotExhaustive {
                stable: next.rank(),
                full: c.rank(),
            });
        }
        stages.push(next);
    }
    Filtration::new(c, stages)
}

/// `U_n = Σ_{i+j=n} C_i ⊗ D_j` on `C ⊗ D`.
pub fn tensor_filtration(fc: &Filtration, fd: &Filtration) -> Result<Filtration> {
    let c = &fc.coalgebra;
    let d = &fd.coalgebra;
    let cd = tensor(c, d)?;
    let count = fc.len() + fd.len() - 1;
    let mut stages = Vec::with_capacity(count);
    for s in 0..count {
        let mut acc = Lattice::zero(cd.ring().clone(), cd.rank());
        for i in 0..=s {
            acc = acc.sum(&fc.stage(i).kronecker(fd.stage(s - i))?)?;
        }
        stages.push(acc);
    }
    let top = fc.top.kronecker(&fd.top)?;
    let filt = Filtration::within(&cd, top, stages)?;
    let (gc, gd, gu) = (fc.graded_ranks(), fd.graded_ranks(), filt.graded_ranks());
    for (s, &u) in gu.iter().enumerate() {
        let expected: usize = (0..=s)
            .filter(|&i| i < gc.len() && s - i < gd.len())
            .map(|i| gc[i] * gd[s - i])
            .sum();
        if u != expected {
            return Err(Error::invariant(format!("graded rank of tensor stage {s} is {u}, expected {expected}")));
        }
    }
    Ok(filt)
}

/// The filtration of `image(f)` by `saturate(f(V_n))`, trailing repeats dropped.
pub fn push_filtration(f: &CoalgebraMap, v: &Filtration) -> Result<Filtration> {
    let d = f.codomain();
    let top = f.image().saturate();
    let mut stages: Vec<Lattice> = Vec::new();
    for stage in v.stages() {
        stages.push(stage.image(f.matrix())?.saturate());
    }
    while stages.len() > 1 && stages[stages.len() - 1] == stages[stages.len() - 2] {
        stages.pop();
    }
    Filtration::within(d, top, stages)
}
