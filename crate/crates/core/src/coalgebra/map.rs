use num_traits::Zero;

use super::{set_like, Coalgebra};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::report::ValidationReport;
use crate::ring::Scalar;

/// A linear map `C → D` acting on row vectors (`n_C × n_D`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraMap {
    domain: Coalgebra,
    codomain: Coalgebra,
    matrix: Matrix,
}

impl CoalgebraMap {
    /// Shape and ring checks only; see [`CoalgebraMap::validate`].
    pub fn new(domain: Coalgebra, codomain: Coalgebra, matrix: Matrix) -> Result<Self> {
        if domain.ring() != codomain.ring() {
            return Err(Error::RingMismatch(domain.ring().symbol(), codomain.ring().symbol()));
        }
        if matrix.rows() != domain.rank() || matrix.cols() != codomain.rank() {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}×{}, expected {}×{}",
                matrix.rows(),
                matrix.cols(),
                domain.rank(),
                codomain.rank()
            )));
        }
        Ok(CoalgebraMap {
            domain,
            codomain,
            matrix,
        })
    }

    /// Builds and validates.
    pub fn checked(domain: Coalgebra, codomain: Coalgebra, matrix: Matrix) -> Result<Self> {
        let f = Self::new(domain, codomain, matrix)?;
        let report = f.validate();
        if report.overall() {
            Ok(f)
        } else {
            Err(Error::Validation(report))
        }
    }

    pub fn identity(c: &Coalgebra) -> Self {
        CoalgebraMap {
            domain: c.clone(),
            codomain: c.clone(),
            matrix: Matrix::identity(c.rank()),
        }
    }

    /// `ε : C → R`, with `R` the one-point set-like coalgebra.
    pub fn counit_map(c: &Coalgebra) -> Self {
        let m = Matrix::from_rows(1, c.counit().iter().map(|x| vec![x.clone()]).collect());
        CoalgebraMap {
            domain: c.clone(),
            codomain: set_like(c.ring(), &["pt"]),
            matrix: m,
        }
    }

    pub fn domain(&self) -> &Coalgebra {
        &self.domain
    }

    pub fn codomain(&self) -> &Coalgebra {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v, self.domain.field())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CoalgebraMap) -> Result<CoalgebraMap> {
        if self.codomain.rank() != other.domain.rank() || self.codomain.ring() != other.domain.ring() {
            return Err(Error::DimensionMismatch("maps are not composable".into()));
        }
        Ok(CoalgebraMap {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            matrix: self.matrix.mul(&other.matrix, self.domain.field()),
        })
    }

    /// Image lattice in the codomain.
    pub fn image(&self) -> Lattice {
        Lattice::span(self.codomain.ring(), &self.matrix).expect("map entries lie in the ring")
    }

    pub fn is_valid(&self) -> bool {
        self.validate().overall()
    }

    /// Checks ring membership, `ε_D ∘ f = ε_C` and `Δ_D ∘ f = (f⊗f) ∘ Δ_C`.
    pub fn validate(&self) -> ValidationReport {
        let field = self.domain.field();
        let ring = self.domain.ring();
        let (nc, nd) = (self.domain.rank(), self.codomain.rank());
        let mut report = ValidationReport::new();
        let bad = self
            .matrix
            .entries()
            .position(|x| !ring.contains(x))
            .map(|p| format!("matrix[{}][{}]", p / nd.max(1), p % nd.max(1)));
        report.record("entries in ring", bad);

        let eps = self.matrix.apply_right(self.codomain.counit(), field);
        let bad = (0..nc).find(|&i| eps[i] != self.domain.counit()[i]);
        report.record("counit triangle", bad.map(|i| format!("e{i}")));

        let mut bad = None;
        for i in 0..nc {
            let lhs = self.codomain.coproduct(self.matrix.row(i));
            let mut rhs = vec![Scalar::zero(); nd * nd];
            for (a, b, x) in self.domain.terms(i) {
                let fa = self.matrix.row(a);
                let fb = self.matrix.row(b);
                for (s, u) in fa.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    let xu = field.mul(x, u);
                    for (t, w) in fb.iter().enumerate() {
                        if !w.is_zero() {
                            let idx = s * nd + t;
                            rhs[idx] = field.add(&rhs[idx], &field.mul(&xu, w));
                        }
                    }
                }
            }
            if lhs != rhs {
                bad = Some(format!("e{i}"));
                break;
            }
        }
        report.record("comultiplication square", bad);
        report
    }
}
