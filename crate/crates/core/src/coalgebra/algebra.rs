//! Finite commutative algebras by multiplication table, and linear duality
//! with coalgebras.

use num_traits::{One, Zero};

use super::Coalgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::ValidationReport;
use crate::ring::{int, Field, RingSpec, Scalar};

/// `mult` is `n² × n`: row `i·n + j` holds `e_i · e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    ring: RingSpec,
    rank: usize,
    mult: Matrix,
    unit: Vec<Scalar>,
    basis_names: Option<Vec<String>>,
}

impl AlgebraPresentation {
    pub fn new(
        ring: RingSpec,
        mult: Matrix,
        unit: Vec<Scalar>,
        basis_names: Option<Vec<String>>,
    ) -> Result<Self> {
        let a = Self::new_unchecked(ring, mult, unit, basis_names)?;
        let report = a.validate();
        match report.first_failure() {
            None => Ok(a),
            Some(c) => Err(Error::InvalidAlgebra(format!(
                "{} fails at {}",
                c.name,
                c.location.as_deref().unwrap_or("?")
            ))),
        }
    }

    pub fn new_unchecked(
        ring: RingSpec,
        mult: Matrix,
        unit: Vec<Scalar>,
        basis_names: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = unit.len();
        if mult.rows() != n * n || mult.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "mult is {}×{}, expected {}×{n}",
                mult.rows(),
                mult.cols(),
                n * n
            )));
        }
        if basis_names.as_ref().is_some_and(|v| v.len() != n) {
            return Err(Error::DimensionMismatch("basis names do not match rank".into()));
        }
        Ok(AlgebraPresentation {
            ring,
            rank: n,
            mult,
            unit,
            basis_names,
        })
    }

    /// `R[x]/(f)` for the monic `f = x^k + c_{k−1}x^{k−1} + … + c_0`, given
    /// `lower = [c_0, …, c_{k−1}]`, on the basis `1, x, …, x^{k−1}`.
    pub fn monogenic(ring: &RingSpec, lower: &[i64]) -> Result<Self> {
        let field = ring.fraction_field();
        let k = lower.len();
        let lower: Vec<Scalar> = lower.iter().map(|&c| ring.element(int(c))).collect::<Result<_>>()?;
        // powers[m] = x^m reduced, for m < 2k − 1
        let mut powers: Vec<Vec<Scalar>> = Vec::new();
        for m in 0..(2 * k).saturating_sub(1) {
            let v = if m < k {
                let mut v = vec![Scalar::zero(); k];
                v[m] = Scalar::one();
                v
            } else {
                let prev = &powers[m - 1];
                let top = prev[k - 1].clone();
                let mut v = vec![Scalar::zero(); k];
                v[1..k].clone_from_slice(&prev[..k - 1]);
                for i in 0..k {
                    v[i] = field.sub(&v[i], &field.mul(&top, &lower[i]));
                }
                v
            };
            powers.push(v);
        }
        let mut rows = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                rows.push(powers[i + j].clone());
            }
        }
        let mut unit = vec![Scalar::zero(); k];
        if k > 0 {
            unit[0] = Scalar::one();
        }
        let names = (0..k)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        Self::new(ring.clone(), Matrix::from_rows(k, rows), unit, Some(names))
    }

    /// `R[x]/(x^k)`.
    pub fn truncated(ring: &RingSpec, k: usize) -> Self {
        Self::monogenic(ring, &vec![0; k]).expect("truncated polynomial algebra is valid")
    }

    /// `R^k` with componentwise multiplication on the idempotent basis.
    pub fn split(ring: &RingSpec, k: usize) -> Self {
        let mut mult = Matrix::zeros(k * k, k);
        for i in 0..k {
            mult[(i * k + i, i)] = Scalar::one();
        }
        AlgebraPresentation {
            ring: ring.clone(),
            rank: k,
            mult,
            unit: vec![Scalar::one(); k],
            basis_names: Some((0..k).map(|i| format!("e{i}")).collect()),
        }
    }

    pub fn tensor(a: &Self, b: &Self) -> Result<Self> {
        if a.ring != b.ring {
            return Err(Error::RingMismatch(a.ring.symbol(), b.ring.symbol()));
        }
        let field = a.field();
        let (na, nb) = (a.rank, b.rank);
        let n = na * nb;
        let mut mult = Matrix::zeros(n * n, n);
        for i in 0..na {
            for k in 0..nb {
                for j in 0..na {
                    for l in 0..nb {
                        let row = (i * nb + k) * n + j * nb + l;
                        for s in 0..na {
                            let x = &a.mult[(i * na + j, s)];
                            if x.is_zero() {
                                continue;
                            }
                            for t in 0..nb {
                                let y = &b.mult[(k * nb + l, t)];
                                if !y.is_zero() {
                                    mult[(row, s * nb + t)] = field.mul(x, y);
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut unit = Vec::with_capacity(n);
        for i in 0..na {
            for k in 0..nb {
                unit.push(field.mul(&a.unit[i], &b.unit[k]));
            }
        }
        let names = match (&a.basis_names, &b.basis_names) {
            (None, None) => None,
            _ => Some(
                (0..na)
                    .flat_map(|i| (0..nb).map(move |k| (i, k)))
                    .map(|(i, k)| format!("{}⊗{}", a.name(i), b.name(k)))
                    .collect(),
            ),
        };
        Ok(AlgebraPresentation {
            ring: a.ring.clone(),
            rank: n,
            mult,
            unit,
            basis_names: names,
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

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn name(&self, i: usize) -> String {
        match &self.basis_names {
            Some(n) => n[i].clone(),
            None => format!("e{i}"),
        }
    }

    /// Product of two elements in the fraction field coordinates.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let field = self.field();
        let n = self.rank;
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = field.mul(a, b);
                for (k, o) in out.iter_mut().enumerate() {
                    let m = &self.mult[(i * n + j, k)];
                    if !m.is_zero() {
                        *o = field.add(o, &field.mul(&ab, m));
                    }
                }
            }
        }
        out
    }

    /// `L_a` in row convention: `v · L_a = a·v`.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let n = self.rank;
        let rows = (0..n)
            .map(|i| {
                let mut e = vec![Scalar::zero(); n];
                e[i] = Scalar::one();
                self.multiply(a, &e)
            })
            .collect();
        Matrix::from_rows(n, rows)
    }

    /// `a^e` by repeated squaring.
    pub fn power(&self, a: &[Scalar], mut e: u64) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// The same table over another ring.
    pub fn base_change(&self, target: &RingSpec) -> Result<Self> {
        let convert = |x: &Scalar| target.element(x.clone());
        let rows = (0..self.mult.rows())
            .map(|i| self.mult.row(i).iter().map(convert).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraPresentation {
            ring: target.clone(),
            rank: self.rank,
            mult: Matrix::from_rows(self.rank, rows),
            unit: self.unit.iter().map(convert).collect::<Result<_>>()?,
            basis_names: self.basis_names.clone(),
        })
    }

    /// Matrix of `a ↦ a^p` over `𝔽_p` (row `i` is `e_i^p`); `𝔽_p`-linear.
    pub fn frobenius_matrix(&self) -> Result<Matrix> {
        let RingSpec::PrimeField { p } = self.ring else {
            return Err(Error::Unsupported(format!("Frobenius over {}", self.ring.symbol())));
        };
        let n = self.rank;
        let rows = (0..n)
            .map(|i| {
                let mut e = vec![Scalar::zero(); n];
                e[i] = Scalar::one();
                self.power(&e, p)
            })
            .collect();
        Ok(Matrix::from_rows(n, rows))
    }

    /// Basis over the fraction field of the Jacobson radical of `A ⊗ K`:
    /// the trace-form kernel in characteristic 0, `ker F^k` with `p^k ≥ n`
    /// over `𝔽_p`.
    pub fn radical(&self) -> Matrix {
        let field = self.field();
        let n = self.rank;
        match self.ring {
            RingSpec::PrimeField { p } => {
                let f = self.frobenius_matrix().expect("prime field");
                let mut fk = f.clone();
                let mut reach = p as u128;
                while reach < n as u128 {
                    fk = fk.mul(&f, field);
                    reach *= p as u128;
                }
                crate::linalg::field::left_kernel(field, &fk)
            }
            _ => {
                let traces: Vec<Scalar> = (0..n)
                    .map(|k| {
                        let mut e = vec![Scalar::zero(); n];
                        e[k] = Scalar::one();
                        let l = self.left_mult(&e);
                        (0..n).fold(Scalar::zero(), |acc, i| field.add(&acc, &l[(i, i)]))
                    })
                    .collect();
                let gram = Matrix::from_rows(
                    n,
                    (0..n * n)
                        .map(|ij| crate::matrix::dot(self.mult.row(ij), &traces, field))
                        .collect::<Vec<_>>()
                        .chunks(n.max(1))
                        .map(|c| c.to_vec())
                        .collect(),
                );
                crate::linalg::field::left_kernel(field, &gram)
            }
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.rank;
        let mut report = ValidationReport::new();
        let bad = self
            .mult
            .entries()
            .position(|x| !self.ring.contains(x))
            .map(|p| format!("mult[{}][{}]", p / n.max(1), p % n.max(1)))
            .or_else(|| self.unit.iter().position(|x| !self.ring.contains(x)).map(|i| format!("unit[{i}]")));
        report.record("entries in ring", bad);

        let mut comm = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                if self.mult.row(i * n + j) != self.mult.row(j * n + i) {
                    comm = Some(format!("({i},{j})"));
                    break 'outer;
                }
            }
        }
        report.record("commutativity", comm);

        let basis = |i: usize| {
            let mut e = vec![Scalar::zero(); n];
            e[i] = Scalar::one();
            e
        };
        let mut assoc = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = self.mult.row(i * n + j).to_vec();
                for k in 0..n {
                    let left = self.multiply(&ij, &basis(k));
                    let right = self.multiply(&basis(i), self.mult.row(j * n + k));
                    if left != right {
                        assoc = Some(format!("({i},{j},{k})"));
                        break 'outer;
                    }
                }
            }
        }
        report.record("associativity", assoc);

        let unit_bad = (0..n).find(|&i| {
            let e = basis(i);
            self.multiply(&self.unit, &e) != e || self.multiply(&e, &self.unit) != e
        });
        report.record("unit law", unit_bad.map(|i| format!("e{i}")));
        report
    }
}

fn toggle_dual(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{name}*"),
    }
}

/// The linear dual `A^∨`: `Δ(e_i*) = Σ m[(j,k)][i] e_j* ⊗ e_k*`, `ε = ` the unit.
pub fn dual_of_algebra(a: &AlgebraPresentation) -> Result<Coalgebra> {
    if let Some(c) = a.validate().first_failure() {
        return Err(Error::InvalidAlgebra(format!(
            "{} fails at {}",
            c.name,
            c.location.as_deref().unwrap_or("?")
        )));
    }
    let names = a.basis_names.as_ref().map(|v| v.iter().map(|s| toggle_dual(s)).collect());
    Coalgebra::new(a.ring.clone(), a.mult.transpose(), a.unit.clone(), names)
}

/// The dual algebra `C^∨`, multiplication transposed from `Δ`.
pub fn dual_algebra(c: &Coalgebra) -> AlgebraPresentation {
    AlgebraPresentation {
        ring: c.ring().clone(),
        rank: c.rank(),
        mult: c.delta().transpose(),
        unit: c.counit().to_vec(),
        basis_names: c.basis_names().map(|v| v.iter().map(|s| toggle_dual(s)).collect()),
    }
}
