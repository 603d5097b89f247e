use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// Face and degeneracy data shared by simplicial sets and simplicial coalgebras,
/// so both are checked against the same identities.
pub(crate) trait SimplicialData {
    type Map: PartialEq;
    fn top(&self) -> usize;
    /// `d_i : X_n → X_{n−1}`.
    fn face(&self, n: usize, i: usize) -> &Self::Map;
    /// `s_j : X_n → X_{n+1}`.
    fn degeneracy(&self, n: usize, j: usize) -> &Self::Map;
    /// `g ∘ f`; `f` is applied first.
    fn then(&self, f: &Self::Map, g: &Self::Map) -> Self::Map;
    fn identity(&self, n: usize) -> Self::Map;
}

/// Records every simplicial identity whose two sides live inside the truncation.
pub(crate) fn check_identities<S: SimplicialData>(s: &S, report: &mut ValidationReport) {
    let d = s.top();
    let mut bad = None;
    'faces: for n in 2..=d {
        for j in 1..=n {
            for i in 0..j {
                let lhs = s.then(s.face(n, j), s.face(n - 1, i));
                let rhs = s.then(s.face(n, i), s.face(n - 1, j - 1));
                if lhs != rhs {
                    bad = Some(format!("d{i}d{j} on X{n}"));
                    break 'faces;
                }
            }
        }
    }
    report.record("face identities", bad);

    let mut bad = None;
    'mixed: for n in 0..d {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = s.then(s.degeneracy(n, j), s.face(n + 1, i));
                let rhs = if i < j {
                    s.then(s.face(n, i), s.degeneracy(n - 1, j - 1))
                } else if i == j || i == j + 1 {
                    s.identity(n)
                } else {
                    s.then(s.face(n, i - 1), s.degeneracy(n - 1, j))
                };
                if lhs != rhs {
                    bad = Some(format!("d{i}s{j} on X{n}"));
                    break 'mixed;
                }
            }
        }
    }
    report.record("face-degeneracy identities", bad);

    let mut bad = None;
    'degen: for n in 0..d.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                let lhs = s.then(s.degeneracy(n, j), s.degeneracy(n + 1, i));
                let rhs = s.then(s.degeneracy(n, i), s.degeneracy(n + 1, j + 1));
                if lhs != rhs {
                    bad = Some(format!("s{i}s{j} on X{n}"));
                    break 'degen;
                }
            }
        }
    }
    report.record("degeneracy identities", bad);
}

/// A simplicial set truncated at `dimension`, with every simplex (degenerate
/// or not) listed by name in its level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    dimension: usize,
    levels: Vec<Vec<String>>,
    /// `faces[n][i][x]`, present for `n ≥ 1`.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][j][x]`, present for `n < dimension`.
    degeneracies: Vec<Vec<Vec<usize>>>,
}

impl SimplicialData for FiniteSimplicialSet {
    type Map = Vec<usize>;

    fn top(&self) -> usize {
        self.dimension
    }

    fn face(&self, n: usize, i: usize) -> &Vec<usize> {
        &self.faces[n][i]
    }

    fn degeneracy(&self, n: usize, j: usize) -> &Vec<usize> {
        &self.degeneracies[n][j]
    }

    fn then(&self, f: &Vec<usize>, g: &Vec<usize>) -> Vec<usize> {
        f.iter().map(|&x| g.get(x).copied().unwrap_or(usize::MAX)).collect()
    }

    fn identity(&self, n: usize) -> Vec<usize> {
        (0..self.levels[n].len()).collect()
    }
}

impl FiniteSimplicialSet {
    /// Checks only the shape of the data; see [`validate_sset`] for the identities.
    pub fn new(
        dimension: usize,
        levels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let mismatch = |what: String| Err(Error::DimensionMismatch(what));
        if levels.len() != dimension + 1 || faces.len() != dimension + 1 || degeneracies.len() != dimension + 1 {
            return mismatch(format!("expected {} levels", dimension + 1));
        }
        for n in 0..=dimension {
            let want_faces = if n == 0 { 0 } else { n + 1 };
            let want_degens = if n == dimension { 0 } else { n + 1 };
            if faces[n].len() != want_faces {
                return mismatch(format!("X{n} needs {want_faces} face maps"));
            }
            if degeneracies[n].len() != want_degens {
                return mismatch(format!("X{n} needs {want_degens} degeneracy maps"));
            }
            if faces[n].iter().chain(&degeneracies[n]).any(|m| m.len() != levels[n].len()) {
                return mismatch(format!("a structure map on X{n} is not defined on every simplex"));
            }
        }
        Ok(FiniteSimplicialSet { dimension, levels, faces, degeneracies })
    }

    pub fn checked(
        dimension: usize,
        levels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let x = Self::new(dimension, levels, faces, degeneracies)?;
        let report = validate_sset(&x);
        if report.overall() {
            Ok(x)
        } else {
            Err(Error::Validation(report))
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn level(&self, n: usize) -> &[String] {
        &self.levels[n]
    }

    pub fn size(&self, n: usize) -> usize {
        self.levels[n].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn face(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> &[usize] {
        &self.degeneracies[n][j]
    }

    pub fn index_of(&self, n: usize, name: &str) -> Option<usize> {
        self.levels.get(n)?.iter().position(|s| s == name)
    }

    /// `x = s_j d_j x` for some `j` exactly when `x` is degenerate. Returns that `j`.
    pub fn degeneracy_witness(&self, n: usize, x: usize) -> Option<usize> {
        (n > 0).then(|| (0..n).find(|&j| self.degeneracies[n - 1][j][self.faces[n][j][x]] == x)).flatten()
    }

    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        self.degeneracy_witness(n, x).is_some()
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        (0..self.size(n)).filter(|&x| !self.is_degenerate(n, x)).collect()
    }

    /// Whether `other` is the same simplicial set up to reordering each level,
    /// matching simplices by name.
    pub fn same_up_to_order(&self, other: &FiniteSimplicialSet) -> bool {
        if self.dimension != other.dimension || self.sizes() != other.sizes() {
            return false;
        }
        let mut perm = Vec::with_capacity(self.dimension + 1);
        for n in 0..=self.dimension {
            let p: Option<Vec<usize>> = self.levels[n].iter().map(|s| other.index_of(n, s)).collect();
            match p {
                Some(p) => perm.push(p),
                None => return false,
            }
        }
        let agree = |m: &[usize], o: &[usize], from: usize, to: usize| {
            (0..m.len()).all(|x| perm[to][m[x]] == o[perm[from][x]])
        };
        (1..=self.dimension).all(|n| (0..=n).all(|i| agree(&self.faces[n][i], &other.faces[n][i], n, n - 1)))
            && (0..self.dimension)
                .all(|n| (0..=n).all(|j| agree(&self.degeneracies[n][j], &other.degeneracies[n][j], n, n + 1)))
    }

    /// Levelwise product, simplices named `(x,y)`.
    pub fn product(&self, other: &FiniteSimplicialSet) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch("factors truncated at different levels".into()));
        }
        let d = self.dimension;
        let pair = |n: usize, a: usize, b: usize| a * other.size(n) + b;
        let levels = (0..=d)
            .map(|n| {
                let mut lv = Vec::with_capacity(self.size(n) * other.size(n));
                for a in &self.levels[n] {
                    for b in &other.levels[n] {
                        lv.push(format!("({a},{b})"));
                    }
                }
                lv
            })
            .collect();
        let combine = |f: &[usize], g: &[usize], n_to: usize| -> Vec<usize> {
            f.iter().flat_map(|&a| g.iter().map(move |&b| pair(n_to, a, b))).collect()
        };
        let faces = (0..=d)
            .map(|n| (0..self.faces[n].len()).map(|i| combine(&self.faces[n][i], &other.faces[n][i], n - 1)).collect())
            .collect();
        let degeneracies = (0..=d)
            .map(|n| {
                (0..self.degeneracies[n].len())
                    .map(|j| combine(&self.degeneracies[n][j], &other.degeneracies[n][j], n + 1))
                    .collect()
            })
            .collect();
        Self::checked(d, levels, faces, degeneracies)
    }

    /// Builds the full truncated set from its nondegenerate cells.
    ///
    /// `cells[m]` lists the nondegenerate `m`-simplices with their faces
    /// `d_0 … d_m`, named as simplices of level `m−1`; degenerate simplices are
    /// named `s{i₁}…s{i_k}(y)` with `i₁ > … > i_k`.
    pub fn from_cells(dimension: usize, cells: &[Vec<(String, Vec<String>)>]) -> Result<Self> {
        if cells.iter().skip(dimension + 1).any(|c| !c.is_empty()) {
            return Err(Error::DimensionMismatch(format!("cells above dimension {dimension}")));
        }
        let mut flat: Vec<FlatCell> = Vec::new();
        let mut simplices: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(dimension + 1);
        let mut names: Vec<Vec<String>> = Vec::with_capacity(dimension + 1);
        let mut lookup: Vec<HashMap<String, usize>> = Vec::with_capacity(dimension + 1);
        for n in 0..=dimension {
            for (name, faces) in cells.get(n).map(Vec::as_slice).unwrap_or(&[]) {
                let want = if n == 0 { 0 } else { n + 1 };
                if faces.len() != want {
                    return Err(Error::Parse {
                        location: format!("cell {name}"),
                        message: format!("expected {want} faces, found {}", faces.len()),
                    });
                }
                let resolved = faces
                    .iter()
                    .map(|f| {
                        lookup[n - 1].get(f).map(|&k| simplices[n - 1][k].clone()).ok_or_else(|| Error::Parse {
                            location: format!("cell {name}"),
                            message: format!("unknown face {f} in level {}", n - 1),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                flat.push(FlatCell { dim: n, name: name.clone(), faces: resolved });
            }
            let mut level = Vec::new();
            for m in (0..=n).rev() {
                for (ci, _) in flat.iter().enumerate().filter(|(_, c)| c.dim == m) {
                    for sigma in surjections(n, m) {
                        level.push((ci, sigma));
                    }
                }
            }
            let lv_names: Vec<String> = level.iter().map(|(c, s)| simplex_name(&flat[*c].name, s)).collect();
            let mut map = HashMap::new();
            for (k, s) in lv_names.iter().enumerate() {
                if map.insert(s.clone(), k).is_some() {
                    return Err(Error::Parse { location: format!("X{n}"), message: format!("duplicate simplex name {s}") });
                }
            }
            simplices.push(level);
            names.push(lv_names);
            lookup.push(map);
        }
        let index: Vec<HashMap<(usize, Vec<usize>), usize>> = simplices
            .iter()
            .map(|lv| lv.iter().enumerate().map(|(k, s)| (s.clone(), k)).collect())
            .collect();
        let mut faces = vec![Vec::new(); dimension + 1];
        let mut degeneracies = vec![Vec::new(); dimension + 1];
        for n in 0..=dimension {
            if n > 0 {
                faces[n] = (0..=n)
                    .map(|i| simplices[n].iter().map(|(c, s)| index[n - 1][&face_of(&flat, *c, s, i)]).collect())
                    .collect();
            }
            if n < dimension {
                degeneracies[n] = (0..=n)
                    .map(|j| {
                        simplices[n]
                            .iter()
                            .map(|(c, s)| {
                                let t: Vec<usize> = (0..=n + 1).map(|k| s[if k <= j { k } else { k - 1 }]).collect();
                                index[n + 1][&(*c, t)]
                            })
                            .collect()
                    })
                    .collect();
            }
        }
        Self::checked(dimension, names, faces, degeneracies)
    }
}

struct FlatCell {
    dim: usize,
    name: String,
    faces: Vec<(usize, Vec<usize>)>,
}

/// `y` with its degeneracy operator, read off the repeats of `sigma`.
fn simplex_name(cell: &str, sigma: &[usize]) -> String {
    let prefix: String = (0..sigma.len().saturating_sub(1))
        .rev()
        .filter(|&j| sigma[j] == sigma[j + 1])
        .map(|j| format!("s{j}"))
        .collect();
    if prefix.is_empty() {
        cell.to_string()
    } else {
        format!("{prefix}({cell})")
    }
}

/// Monotone surjections `[n] → [m]` in lexicographic order.
fn surjections(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *cur.last().unwrap();
        if cur.len() == n + 1 {
            if last == m {
                out.push(cur.clone());
            }
            return;
        }
        let remaining = n + 1 - cur.len();
        for step in 0..=1 {
            let next = last + step;
            if next <= m && m - next < remaining {
                cur.push(next);
                go(n, m, cur, out);
                cur.pop();
            }
        }
    }
    if m > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(n, m, &mut vec![0], &mut out);
    out
}

/// `d_i` of the simplex `σ^*(c)`: precompose with the coface `δ_i`, and when
/// the result stops being surjective, factor through the matching face of `c`.
fn face_of(flat: &[FlatCell], c: usize, sigma: &[usize], i: usize) -> (usize, Vec<usize>) {
    let tau: Vec<usize> = (0..sigma.len() - 1).map(|k| sigma[if k < i { k } else { k + 1 }]).collect();
    let v = sigma[i];
    if tau.contains(&v) {
        return (c, tau);
    }
    let (c2, rho) = &flat[c].faces[v];
    (*c2, tau.iter().map(|&t| rho[if t < v { t } else { t - 1 }]).collect())
}

/// Checks names, codomains and every simplicial identity defined within the truncation.
pub fn validate_sset(x: &FiniteSimplicialSet) -> ValidationReport {
    let mut report = ValidationReport::new();
    let mut dup = None;
    'dup: for (n, lv) in x.levels.iter().enumerate() {
        for (k, s) in lv.iter().enumerate() {
            if lv[..k].contains(s) {
                dup = Some(format!("X{n}: {s}"));
                break 'dup;
            }
        }
    }
    report.record("distinct names", dup);
    let codomain = |maps: &[Vec<Vec<usize>>], offset: isize, sym: char| {
        for (n, ms) in maps.iter().enumerate() {
            for (i, m) in ms.iter().enumerate() {
                let target = (n as isize + offset) as usize;
                if let Some(k) = m.iter().position(|&y| y >= x.size(target)) {
                    return Some(format!("{sym}{i} on X{n} at {}", x.levels[n][k]));
                }
            }
        }
        None
    };
    let faces_ok = codomain(&x.faces, -1, 'd');
    let degens_ok = codomain(&x.degeneracies, 1, 's');
    let codomains_ok = faces_ok.is_none() && degens_ok.is_none();
    report.record("face codomain", faces_ok);
    report.record("degeneracy codomain", degens_ok);
    if codomains_ok {
        check_identities(x, &mut report);
    }
    report
}

/// A levelwise map commuting with faces and degeneracies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    source: FiniteSimplicialSet,
    target: FiniteSimplicialSet,
    levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(source: FiniteSimplicialSet, target: FiniteSimplicialSet, levels: Vec<Vec<usize>>) -> Result<Self> {
        if source.dimension != target.dimension {
            return Err(Error::DimensionMismatch(format!(
                "source truncated at {}, target at {}",
                source.dimension, target.dimension
            )));
        }
        if levels.len() != source.dimension + 1 || levels.iter().enumerate().any(|(n, l)| l.len() != source.size(n)) {
            return Err(Error::DimensionMismatch("map is not defined on every simplex".into()));
        }
        let f = SimplicialMap { source, target, levels };
        let report = f.validate();
        if report.overall() {
            Ok(f)
        } else {
            Err(Error::Validation(report))
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let (x, y) = (&self.source, &self.target);
        let mut report = ValidationReport::new();
        let mut bad = None;
        for (n, l) in self.levels.iter().enumerate() {
            if let Some(k) = l.iter().position(|&v| v >= y.size(n)) {
                bad = Some(format!("X{n} at {}", x.levels[n][k]));
                break;
            }
        }
        let ok = bad.is_none();
        report.record("level codomain", bad);
        if !ok {
            return report;
        }
        let f = &self.levels;
        let mut bad = None;
        'faces: for n in 1..=x.dimension {
            for i in 0..=n {
                if let Some(k) = (0..x.size(n)).find(|&k| f[n - 1][x.faces[n][i][k]] != y.faces[n][i][f[n][k]]) {
                    bad = Some(format!("d{i} on X{n} at {}", x.levels[n][k]));
                    break 'faces;
                }
            }
        }
        report.record("commutes with faces", bad);
        let mut bad = None;
        'degens: for n in 0..x.dimension {
            for j in 0..=n {
                if let Some(k) =
                    (0..x.size(n)).find(|&k| f[n + 1][x.degeneracies[n][j][k]] != y.degeneracies[n][j][f[n][k]])
                {
                    bad = Some(format!("s{j} on X{n} at {}", x.levels[n][k]));
                    break 'degens;
                }
            }
        }
        report.record("commutes with degeneracies", bad);
        report
    }

    /// Extends an assignment `(level, source name, target name)` on
    /// nondegenerate simplices by `f(s_j y) = s_j f(y)`.
    pub fn from_nondegenerate(
        source: &FiniteSimplicialSet,
        target: &FiniteSimplicialSet,
        images: &[(usize, &str, &str)],
    ) -> Result<Self> {
        if source.dimension != target.dimension {
            return Err(Error::DimensionMismatch("truncation levels differ".into()));
        }
        let table: HashMap<(usize, &str), &str> = images.iter().map(|&(n, a, b)| ((n, a), b)).collect();
        let mut levels: Vec<Vec<usize>> = Vec::with_capacity(source.dimension + 1);
        for n in 0..=source.dimension {
            let mut lv = Vec::with_capacity(source.size(n));
            for x in 0..source.size(n) {
                let img = match source.degeneracy_witness(n, x) {
                    Some(j) => target.degeneracies[n - 1][j][levels[n - 1][source.faces[n][j][x]]],
                    None => {
                        let name = &source.levels[n][x];
                        let want = table.get(&(n, name.as_str())).ok_or_else(|| Error::Parse {
                            location: format!("X{n}: {name}"),
                            message: "no image for a nondegenerate simplex".into(),
                        })?;
                        target.index_of(n, want).ok_or_else(|| Error::Parse {
                            location: format!("X{n}: {name}"),
                            message: format!("unknown target simplex {want}"),
                        })?
                    }
                };
                lv.push(img);
            }
            levels.push(lv);
        }
        Self::new(source.clone(), target.clone(), levels)
    }

    pub fn identity(x: &FiniteSimplicialSet) -> Self {
        let levels = (0..=x.dimension).map(|n| (0..x.size(n)).collect()).collect();
        SimplicialMap { source: x.clone(), target: x.clone(), levels }
    }

    /// The constant map at a vertex of `target`.
    pub fn constant(source: &FiniteSimplicialSet, target: &FiniteSimplicialSet, vertex: &str) -> Result<Self> {
        let v = target.index_of(0, vertex).ok_or_else(|| Error::Parse {
            location: "X0".into(),
            message: format!("unknown vertex {vertex}"),
        })?;
        let mut at = v;
        let mut levels = Vec::with_capacity(source.dimension + 1);
        for n in 0..=source.dimension {
            if n > 0 {
                at = target.degeneracies[n - 1][0][at];
            }
            levels.push(vec![at; source.size(n)]);
        }
        Self::new(source.clone(), target.clone(), levels)
    }

    pub fn source(&self) -> &FiniteSimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &FiniteSimplicialSet {
        &self.target
    }

    pub fn level(&self, n: usize) -> &[usize] {
        &self.levels[n]
    }

    pub fn then(&self, g: &SimplicialMap) -> Result<SimplicialMap> {
        if self.target != g.source {
            return Err(Error::DimensionMismatch("maps do not compose".into()));
        }
        let levels = self.levels.iter().zip(&g.levels).map(|(f, g)| f.iter().map(|&x| g[x]).collect()).collect();
        Ok(SimplicialMap { source: self.source.clone(), target: g.target.clone(), levels })
    }

    pub fn is_injective(&self) -> bool {
        self.levels.iter().all(|l| {
            let mut seen = l.clone();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::models;
    use super::*;

    #[test]
    fn standard_sets_validate() {
        for (name, x) in models::standard_sets(3) {
            assert!(validate_sset(&x).overall(), "{name}");
        }
    }

    #[test]
    fn level_sizes_count_degeneracies() {
        assert_eq!(models::delta(1, 2).sizes(), vec![2, 3, 4]);
        assert_eq!(models::circle(3).sizes(), vec![1, 2, 3, 4]);
        assert_eq!(models::point(3).sizes(), vec![1, 1, 1, 1]);
        // Δ²: nondegenerate 3, 3, 1; X_n counts monotone maps [n] → [2].
        assert_eq!(models::delta(2, 3).sizes(), vec![3, 6, 10, 15]);
    }

    #[test]
    fn degenerate_names_are_canonical() {
        let c = models::circle(2);
        assert_eq!(c.level(1), &["e".to_string(), "s0(v)".to_string()]);
        assert_eq!(c.level(2), &["s0(e)".to_string(), "s1(e)".to_string(), "s1s0(v)".to_string()]);
        assert_eq!(c.nondegenerate(1), vec![0]);
        assert_eq!(c.nondegenerate(2), Vec::<usize>::new());
    }

    #[test]
    fn mismatched_codomain_is_located() {
        let c = models::circle(1);
        let mut faces = c.faces.clone();
        faces[1][0][0] = 5;
        let bad = FiniteSimplicialSet::new(1, c.levels.clone(), faces, c.degeneracies.clone()).unwrap();
        let report = validate_sset(&bad);
        assert!(!report.overall());
        let first = report.first_failure().unwrap();
        assert_eq!(first.name, "face codomain");
        assert_eq!(first.location.as_deref(), Some("d0 on X1 at e"));
    }

    #[test]
    fn broken_identities_fail() {
        // a: v → w and b: v → v; d_0 t = a with d_1 t = d_2 t = b breaks d_0 d_1 = d_0 d_0.
        let cells = vec![
            vec![("v".to_string(), vec![]), ("w".to_string(), vec![])],
            vec![("a".to_string(), vec!["w".to_string(), "v".to_string()]), ("b".to_string(), vec!["v".to_string(), "v".to_string()])],
            vec![("t".to_string(), vec!["a".to_string(), "b".to_string(), "b".to_string()])],
        ];
        assert!(matches!(FiniteSimplicialSet::from_cells(2, &cells), Err(Error::Validation(_))));
    }

    #[test]
    fn maps_extend_and_validate() {
        let d1 = models::delta(1, 2);
        let pt = models::point(2);
        let r = SimplicialMap::constant(&d1, &pt, "0").unwrap();
        assert!(r.validate().overall());
        let i = SimplicialMap::from_nondegenerate(&pt, &d1, &[(0, "0", "1")]).unwrap();
        assert!(i.is_injective());
        assert_eq!(i.then(&r).unwrap(), SimplicialMap::identity(&pt));
        // Sending the edge to a degenerate edge at one end while the other
        // vertex goes elsewhere is not simplicial.
        let two = models::two_point(2);
        let bad = SimplicialMap::from_nondegenerate(&d1, &two, &[(0, "0", "a"), (0, "1", "b"), (1, "01", "s0(a)")]);
        assert!(matches!(bad, Err(Error::Validation(_))));
    }

    #[test]
    fn reordering_is_detected_by_names() {
        let c = models::rp2(3);
        assert!(c.same_up_to_order(&c));
        assert!(!c.same_up_to_order(&models::circle(3)));
    }

    #[test]
    fn products_multiply_level_sizes() {
        let t = models::circle(3).product(&models::circle(3)).unwrap();
        assert_eq!(t.sizes(), vec![1, 4, 9, 16]);
        assert_eq!(t.nondegenerate(1).len(), 3);
        assert_eq!(t.nondegenerate(2).len(), 2);
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(surjections(3, 1).len(), 3);
        assert_eq!(surjections(4, 2).len(), 6);
        assert_eq!(surjections(2, 2), vec![vec![0, 1, 2]]);
    }
}
