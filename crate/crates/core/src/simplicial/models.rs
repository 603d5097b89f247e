//! Small simplicial sets and maps with known homotopy types.

use super::sset::{FiniteSimplicialSet, SimplicialMap};

type Cells = Vec<Vec<(String, Vec<String>)>>;

fn cells(spec: &[&[(&str, &[&str])]]) -> Cells {
    spec.iter()
        .map(|lv| lv.iter().map(|(n, f)| (n.to_string(), f.iter().map(|s| s.to_string()).collect())).collect())
        .collect()
}

fn build(d: usize, c: Cells) -> FiniteSimplicialSet {
    FiniteSimplicialSet::from_cells(d, &c).expect("model data is simplicial")
}

/// Subcomplex of `Δ^k` on the vertex subsets accepted by `keep` (closed under faces).
fn delta_with(k: usize, d: usize, keep: impl Fn(&[usize]) -> bool) -> FiniteSimplicialSet {
    assert!(k <= 9, "vertex labels are single digits");
    let label = |s: &[usize]| s.iter().map(|v| v.to_string()).collect::<String>();
    let mut c: Cells = vec![Vec::new(); k + 1];
    for mask in 1u32..(1 << (k + 1)) {
        let s: Vec<usize> = (0..=k).filter(|&v| mask & (1 << v) != 0).collect();
        if !keep(&s) {
            continue;
        }
        let faces = if s.len() == 1 {
            Vec::new()
        } else {
            (0..s.len()).map(|i| label(&[&s[..i], &s[i + 1..]].concat())).collect()
        };
        c[s.len() - 1].push((label(&s), faces));
    }
    for lv in &mut c {
        lv.sort();
    }
    while c.len() > d + 1 && c.last().is_some_and(Vec::is_empty) {
        c.pop();
    }
    build(d, c)
}

/// `Δ^0`, with its vertex named `0`.
pub fn point(d: usize) -> FiniteSimplicialSet {
    delta(0, d)
}

/// The standard simplex `Δ^k`; simplices are named by their vertex strings.
pub fn delta(k: usize, d: usize) -> FiniteSimplicialSet {
    delta_with(k, d, |_| true)
}

/// `∂Δ^k`.
pub fn boundary(k: usize, d: usize) -> FiniteSimplicialSet {
    delta_with(k, d, |s| s.len() <= k)
}

/// The horn `Λ^k_l`: all faces except the top cell and the one opposite `l`.
pub fn horn(k: usize, l: usize, d: usize) -> FiniteSimplicialSet {
    delta_with(k, d, move |s| s.len() <= k && !(s.len() == k && !s.contains(&l)))
}

/// Discrete set on two vertices.
pub fn two_point(d: usize) -> FiniteSimplicialSet {
    build(d, cells(&[&[("a", &[]), ("b", &[])]]))
}

/// One vertex and one loop.
pub fn circle(d: usize) -> FiniteSimplicialSet {
    build(d, cells(&[&[("v", &[])], &[("e", &["v", "v"])]]))
}

/// Two vertices joined by two parallel edges.
pub fn two_edge_circle(d: usize) -> FiniteSimplicialSet {
    build(d, cells(&[&[("a", &[]), ("b", &[])], &[("p", &["b", "a"]), ("q", &["b", "a"])]]))
}

/// One cell in each dimension up to 2, attached by `∂t = e − s0(v) + e`.
pub fn rp2(d: usize) -> FiniteSimplicialSet {
    build(d, cells(&[&[("v", &[])], &[("e", &["v", "v"])], &[("t", &["e", "s0(v)", "e"])]]))
}

/// `Δ²/∂Δ²`.
pub fn sphere2(d: usize) -> FiniteSimplicialSet {
    build(d, cells(&[&[("v", &[])], &[], &[("t", &["s0(v)", "s0(v)", "s0(v)"])]]))
}

/// `S¹ × S¹`.
pub fn torus(d: usize) -> FiniteSimplicialSet {
    circle(d).product(&circle(d)).expect("equal truncations")
}

pub fn standard_sets(d: usize) -> Vec<(&'static str, FiniteSimplicialSet)> {
    vec![
        ("point", point(d)),
        ("delta1", delta(1, d)),
        ("delta2", delta(2, d)),
        ("circle", circle(d)),
        ("two-point", two_point(d)),
        ("rp2", rp2(d)),
        ("horn21", horn(2, 1, d)),
        ("boundary2", boundary(2, d)),
        ("two-edge-circle", two_edge_circle(d)),
        ("sphere2", sphere2(d)),
        ("torus", torus(d)),
    ]
}

fn map(x: &FiniteSimplicialSet, y: &FiniteSimplicialSet, images: &[(usize, &str, &str)]) -> SimplicialMap {
    SimplicialMap::from_nondegenerate(x, y, images).expect("model map is simplicial")
}

/// Maps known to induce isomorphisms on integral homology.
pub fn weak_equivalences(d: usize) -> Vec<(&'static str, SimplicialMap)> {
    let (pt, d1, d2) = (point(d), delta(1, d), delta(2, d));
    let h = horn(2, 1, d);
    let (c, c2) = (circle(d), two_edge_circle(d));
    vec![
        ("delta1->point", SimplicialMap::constant(&d1, &pt, "0").unwrap()),
        ("delta2->point", SimplicialMap::constant(&d2, &pt, "0").unwrap()),
        ("horn21->point", SimplicialMap::constant(&h, &pt, "0").unwrap()),
        ("point->delta1", map(&pt, &d1, &[(0, "0", "1")])),
        ("point->delta2", map(&pt, &d2, &[(0, "0", "2")])),
        ("delta1->delta2", map(&d1, &d2, &[(0, "0", "0"), (0, "1", "2"), (1, "01", "02")])),
        ("horn21->delta2", inclusion(&h, &d2)),
        (
            "delta2->delta1",
            map(&d2, &d1, &[(0, "0", "0"), (0, "1", "1"), (0, "2", "1"), (1, "01", "01"), (1, "02", "01"), (1, "12", "s0(1)"), (2, "012", "s1(01)")]),
        ),
        (
            "two-edge-circle->circle",
            map(&c2, &c, &[(0, "a", "v"), (0, "b", "v"), (1, "p", "s0(v)"), (1, "q", "e")]),
        ),
        ("circle", SimplicialMap::identity(&c)),
        ("rp2", SimplicialMap::identity(&rp2(d))),
        ("sphere2", SimplicialMap::identity(&sphere2(d))),
    ]
}

/// Maps known not to be homology isomorphisms in low degrees.
pub fn non_equivalences(d: usize) -> Vec<(&'static str, SimplicialMap)> {
    let pt = point(d);
    let two = two_point(d);
    vec![
        ("two-point->point", SimplicialMap::constant(&two, &pt, "0").unwrap()),
        ("point->two-point", map(&pt, &two, &[(0, "0", "a")])),
        ("circle->point", SimplicialMap::constant(&circle(d), &pt, "0").unwrap()),
        ("boundary2->delta2", inclusion(&boundary(2, d), &delta(2, d))),
        ("sphere2->point", SimplicialMap::constant(&sphere2(d), &pt, "0").unwrap()),
        ("rp2->point", SimplicialMap::constant(&rp2(d), &pt, "0").unwrap()),
    ]
}

/// The inclusion of a subcomplex whose simplices carry the same names.
pub fn inclusion(x: &FiniteSimplicialSet, y: &FiniteSimplicialSet) -> SimplicialMap {
    let images: Vec<(usize, String)> = (0..=x.dimension())
        .flat_map(|n| x.nondegenerate(n).into_iter().map(move |k| (n, k)))
        .map(|(n, k)| (n, x.level(n)[k].clone()))
        .collect();
    let triples: Vec<(usize, &str, &str)> = images.iter().map(|(n, s)| (*n, s.as_str(), s.as_str())).collect();
    map(x, y, &triples)
}

/// Monomorphisms between the standard sets.
pub fn monomorphisms(d: usize) -> Vec<(&'static str, SimplicialMap)> {
    let (pt, d1, d2, two) = (point(d), delta(1, d), delta(2, d), two_point(d));
    vec![
        ("point->delta1", map(&pt, &d1, &[(0, "0", "0")])),
        ("delta1->delta2", inclusion(&d1, &d2)),
        ("horn21->delta2", inclusion(&horn(2, 1, d), &d2)),
        ("boundary2->delta2", inclusion(&boundary(2, d), &d2)),
        ("horn20->boundary2", inclusion(&horn(2, 0, d), &boundary(2, d))),
        ("two-point->delta1", map(&two, &d1, &[(0, "a", "0"), (0, "b", "1")])),
        ("point->circle", map(&pt, &circle(d), &[(0, "0", "v")])),
        ("circle->rp2", map(&circle(d), &rp2(d), &[(0, "v", "v"), (1, "e", "e")])),
        ("rp2", SimplicialMap::identity(&rp2(d))),
    ]
}
