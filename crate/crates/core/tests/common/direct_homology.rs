//! Simplicial homology computed directly on nondegenerate simplices with a
//! small machine-integer Smith reduction.

use coalg::simplicial::FiniteSimplicialSet;

/// Simplices not in the image of any degeneracy map.
fn nondegenerate(x: &FiniteSimplicialSet, n: usize) -> Vec<usize> {
    let mut hit = vec![false; x.size(n)];
    if n > 0 {
        for j in 0..n {
            for &y in x.degeneracy(n - 1, j) {
                hit[y] = true;
            }
        }
    }
    (0..x.size(n)).filter(|&k| !hit[k]).collect()
}

fn boundary(x: &FiniteSimplicialSet, n: usize) -> Vec<Vec<i64>> {
    let rows = nondegenerate(x, n);
    if n == 0 {
        return vec![Vec::new(); rows.len()];
    }
    let cols = nondegenerate(x, n - 1);
    rows.iter()
        .map(|&k| {
            let mut row = vec![0i64; cols.len()];
            for i in 0..=n {
                let f = x.face(n, i)[k];
                if let Some(c) = cols.iter().position(|&y| y == f) {
                    row[c] += if i % 2 == 0 { 1 } else { -1 };
                }
            }
            row
        })
        .collect()
}

/// Diagonal of the Smith form, nonzero entries only, each dividing the next.
pub fn smith_diagonal(mut m: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs())
        else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                for j in t..cols {
                    m[i][j] -= q * m[t][j];
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                for i in t..rows {
                    m[i][j] -= q * m[i][t];
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // The pivot must divide the rest of the block.
                let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            m[t][j] += m[i][j];
                        }
                    }
                }
            } else {
                let (i, j) = (t..rows)
                    .flat_map(|i| (t..cols).map(move |j| (i, j)))
                    .filter(|&(i, j)| (i == t || j == t) && m[i][j] != 0)
                    .min_by_key(|&(i, j)| m[i][j].abs())
                    .unwrap();
                m.swap(t, i);
                for row in m.iter_mut() {
                    row.swap(t, j);
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

pub fn direct_homology(x: &FiniteSimplicialSet, top: usize) -> Vec<String> {
    (0..=top)
        .map(|n| {
            let dn = smith_diagonal(boundary(x, n));
            let up = smith_diagonal(boundary(x, n + 1));
            let betti = nondegenerate(x, n).len() - dn.len() - up.len();
            let mut parts = Vec::new();
            match betti {
                0 => {}
                1 => parts.push("Z".to_string()),
                b => parts.push(format!("Z^{b}")),
            }
            parts.extend(up.iter().filter(|&&d| d > 1).map(|d| format!("Z/{d}")));
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join("+")
            }
        })
        .collect()
}
