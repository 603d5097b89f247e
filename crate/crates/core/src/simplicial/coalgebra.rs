use num_traits::{One, Zero};

use crate::coalgebra::{set_like, Coalgebra, CoalgebraMap};
use crate::error::{Error, Result};
use crate::grouplike::{gr_of_map, group_likes, is_pointed};
use crate::matrix::Matrix;
use crate::report::ValidationReport;
use crate::ring::{scalar_to_string, RingSpec, Scalar};

use super::sset::{check_identities, validate_sset, FiniteSimplicialSet, SimplicialData, SimplicialMap};

/// Levels `C_0 … C_d` with coalgebra maps satisfying the simplicial identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialCoalgebra {
    levels: Vec<Coalgebra>,
    faces: Vec<Vec<CoalgebraMap>>,
    degeneracies: Vec<Vec<CoalgebraMap>>,
}

impl SimplicialData for SimplicialCoalgebra {
    type Map = Matrix;

    fn top(&self) -> usize {
        self.levels.len() - 1
    }

    fn face(&self, n: usize, i: usize) -> &Matrix {
        self.faces[n][i].matrix()
    }

    fn degeneracy(&self, n: usize, j: usize) -> &Matrix {
        self.degeneracies[n][j].matrix()
    }

    fn then(&self, f: &Matrix, g: &Matrix) -> Matrix {
        f.mul(g, self.levels[0].field())
    }

    fn identity(&self, n: usize) -> Matrix {
        Matrix::identity(self.levels[n].rank())
    }
}

impl SimplicialCoalgebra {
    /// `faces[n][i]` is the matrix of `d_i : C_n → C_{n−1}` (empty for `n = 0`),
    /// `degeneracies[n][j]` that of `s_j : C_n → C_{n+1}` (empty for `n = d`).
    pub fn new(levels: Vec<Coalgebra>, faces: Vec<Vec<Matrix>>, degeneracies: Vec<Vec<Matrix>>) -> Result<Self> {
        if levels.is_empty() || faces.len() != levels.len() || degeneracies.len() != levels.len() {
            return Err(Error::DimensionMismatch("one entry per level is required".into()));
        }
        let d = levels.len() - 1;
        let mut report = ValidationReport::new();
        let mut wrap = |maps: Vec<Vec<Matrix>>, offset: isize, sym: char| -> Result<Vec<Vec<CoalgebraMap>>> {
            let mut out = Vec::with_capacity(maps.len());
            for (n, ms) in maps.into_iter().enumerate() {
                let want = match (sym, n) {
                    ('d', 0) => 0,
                    ('s', n) if n == d => 0,
                    _ => n + 1,
                };
                if ms.len() != want {
                    return Err(Error::DimensionMismatch(format!("level {n} needs {want} {sym}-maps")));
                }
                let mut lv = Vec::with_capacity(want);
                for (i, m) in ms.into_iter().enumerate() {
                    let target = &levels[(n as isize + offset) as usize];
                    let f = CoalgebraMap::new(levels[n].clone(), target.clone(), m)?;
                    let r = f.validate();
                    if !r.overall() {
                        let why = r.first_failure().map(|c| c.name.clone()).unwrap_or_default();
                        report.fail("structure maps are coalgebra maps", format!("{sym}{i} on C{n}: {why}"));
                    }
                    lv.push(f);
                }
                out.push(lv);
            }
            Ok(out)
        };
        let faces = wrap(faces, -1, 'd')?;
        let degeneracies = wrap(degeneracies, 1, 's')?;
        if report.overall() {
            report.pass("structure maps are coalgebra maps");
        }
        let c = SimplicialCoalgebra { levels, faces, degeneracies };
        check_identities(&c, &mut report);
        if report.overall() {
            Ok(c)
        } else {
            Err(Error::Validation(report))
        }
    }

    /// The constant object on `c`, all structure maps identities.
    pub fn constant(c: &Coalgebra, d: usize) -> Result<Self> {
        let id = Matrix::identity(c.rank());
        let faces = (0..=d).map(|n| if n == 0 { vec![] } else { vec![id.clone(); n + 1] }).collect();
        let degens = (0..=d).map(|n| if n == d { vec![] } else { vec![id.clone(); n + 1] }).collect();
        Self::new(vec![c.clone(); d + 1], faces, degens)
    }

    pub fn dimension(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn ring(&self) -> &RingSpec {
        self.levels[0].ring()
    }

    pub fn level(&self, n: usize) -> &Coalgebra {
        &self.levels[n]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().map(Coalgebra::rank).collect()
    }

    pub fn face(&self, n: usize, i: usize) -> &CoalgebraMap {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> &CoalgebraMap {
        &self.degeneracies[n][j]
    }
}

/// A levelwise coalgebra map commuting with the structure maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialCoalgebraMap {
    source: SimplicialCoalgebra,
    target: SimplicialCoalgebra,
    levels: Vec<CoalgebraMap>,
}

impl SimplicialCoalgebraMap {
    pub fn new(source: SimplicialCoalgebra, target: SimplicialCoalgebra, levels: Vec<Matrix>) -> Result<Self> {
        if source.dimension() != target.dimension() || levels.len() != source.dimension() + 1 {
            return Err(Error::DimensionMismatch("levelwise map needs one matrix per level".into()));
        }
        let levels = levels
            .into_iter()
            .enumerate()
            .map(|(n, m)| CoalgebraMap::new(source.level(n).clone(), target.level(n).clone(), m))
            .collect::<Result<Vec<_>>>()?;
        let f = SimplicialCoalgebraMap { source, target, levels };
        let report = f.validate();
        if report.overall() {
            Ok(f)
        } else {
            Err(Error::Validation(report))
        }
    }

    pub fn identity(c: &SimplicialCoalgebra) -> Self {
        let levels = c.levels.iter().map(CoalgebraMap::identity).collect();
        SimplicialCoalgebraMap { source: c.clone(), target: c.clone(), levels }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let bad = self.levels.iter().enumerate().find(|(_, f)| !f.is_valid()).map(|(n, _)| format!("level {n}"));
        report.record("levels are coalgebra maps", bad);
        let field = self.source.level(0).field();
        let (x, y) = (&self.source, &self.target);
        let f = |n: usize| self.levels[n].matrix();
        let mut bad = None;
        'faces: for n in 1..=x.dimension() {
            for i in 0..=n {
                if x.face(n, i).matrix().mul(f(n - 1), field) != f(n).mul(y.face(n, i).matrix(), field) {
                    bad = Some(format!("d{i} on level {n}"));
                    break 'faces;
                }
            }
        }
        report.record("commutes with faces", bad);
        let mut bad = None;
        'degens: for n in 0..x.dimension() {
            for j in 0..=n {
                if x.degeneracy(n, j).matrix().mul(f(n + 1), field) != f(n).mul(y.degeneracy(n, j).matrix(), field) {
                    bad = Some(format!("s{j} on level {n}"));
                    break 'degens;
                }
            }
        }
        report.record("commutes with degeneracies", bad);
        report
    }

    pub fn source(&self) -> &SimplicialCoalgebra {
        &self.source
    }

    pub fn target(&self) -> &SimplicialCoalgebra {
        &self.target
    }

    pub fn level(&self, n: usize) -> &CoalgebraMap {
        &self.levels[n]
    }
}

fn linearize(map: &[usize], target_size: usize) -> Matrix {
    let mut m = Matrix::zeros(map.len(), target_size);
    for (x, &y) in map.iter().enumerate() {
        m[(x, y)] = Scalar::one();
    }
    m
}

/// `R(X)`: set-like coalgebras on each level with the linearized structure maps.
pub fn chains_functor(x: &FiniteSimplicialSet, ring: &RingSpec) -> Result<SimplicialCoalgebra> {
    let report = validate_sset(x);
    if !report.overall() {
        return Err(Error::Validation(report));
    }
    let d = x.dimension();
    let levels = (0..=d).map(|n| set_like(ring, x.level(n))).collect();
    let faces = (0..=d)
        .map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| linearize(x.face(n, i), x.size(n - 1))).collect() })
        .collect();
    let degens = (0..=d)
        .map(|n| if n == d { vec![] } else { (0..=n).map(|j| linearize(x.degeneracy(n, j), x.size(n + 1))).collect() })
        .collect();
    SimplicialCoalgebra::new(levels, faces, degens)
}

pub fn chains_of_map(f: &SimplicialMap, ring: &RingSpec) -> Result<SimplicialCoalgebraMap> {
    let source = chains_functor(f.source(), ring)?;
    let target = chains_functor(f.target(), ring)?;
    let levels = (0..=f.source().dimension()).map(|n| linearize(f.level(n), f.target().size(n))).collect();
    SimplicialCoalgebraMap::new(source, target, levels)
}

/// Name of a group-like: the basis name when it is a basis vector, otherwise
/// its expansion such as `1*+2y*`.
fn grouplike_name(c: &Coalgebra, g: &[Scalar]) -> String {
    let terms: Vec<(usize, &Scalar)> = g.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
    let parts: Vec<String> = terms
        .iter()
        .map(|&(i, x)| if x.is_one() { c.name(i) } else { format!("{}{}", scalar_to_string(x), c.name(i)) })
        .collect();
    parts.join("+").replace("+-", "-")
}

fn pointed_level(c: &Coalgebra) -> Result<crate::grouplike::GroupLikeSet> {
    if !is_pointed(c)?.pointed {
        return Err(Error::NotPointed);
    }
    group_likes(c)
}

/// Levelwise group-likes with the induced face and degeneracy maps.
pub fn gr_simplicial(c: &SimplicialCoalgebra) -> Result<FiniteSimplicialSet> {
    let d = c.dimension();
    let mut names = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let gr = pointed_level(c.level(n))?;
        names.push(gr.vectors.iter().map(|g| grouplike_name(c.level(n), g)).collect());
    }
    let mut faces = vec![Vec::new(); d + 1];
    let mut degeneracies = vec![Vec::new(); d + 1];
    for n in 0..=d {
        if n > 0 {
            faces[n] = (0..=n).map(|i| gr_of_map(c.face(n, i)).map(|m| m.assignment)).collect::<Result<_>>()?;
        }
        if n < d {
            degeneracies[n] =
                (0..=n).map(|j| gr_of_map(c.degeneracy(n, j)).map(|m| m.assignment)).collect::<Result<_>>()?;
        }
    }
    FiniteSimplicialSet::checked(d, names, faces, degeneracies)
        .map_err(|e| Error::invariant(format!("levelwise group-likes are not simplicial: {e}")))
}

pub fn gr_simplicial_map(f: &SimplicialCoalgebraMap) -> Result<SimplicialMap> {
    let source = gr_simplicial(f.source())?;
    let target = gr_simplicial(f.target())?;
    let levels = (0..=source.dimension())
        .map(|n| gr_of_map(f.level(n)).map(|m| m.assignment))
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::new(source, target, levels)
}

/// `Gr(R(X)) ≅ X` by the identity on names.
pub fn unit_is_isomorphism(x: &FiniteSimplicialSet, ring: &RingSpec) -> Result<bool> {
    Ok(gr_simplicial(&chains_functor(x, ring)?)?.same_up_to_order(x))
}
