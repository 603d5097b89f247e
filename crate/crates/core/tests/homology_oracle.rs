//! Direct simplicial homology compared against the normalized chains of `R(X)`.

use coalg::ring::RingSpec;
use coalg::simplicial::{chains_functor, homology, models};

#[path = "common/direct_homology.rs"]
mod direct_homology;

use direct_homology::{direct_homology, smith_diagonal};

#[test]
fn normalized_chains_match_direct_homology() {
    let d = 3;
    let mut spaces = models::standard_sets(d);
    spaces.push(("circle x delta1", models::circle(d).product(&models::delta(1, d)).unwrap()));
    spaces.push(("rp2 x circle", models::rp2(d).product(&models::circle(d)).unwrap()));
    spaces.push(("two-point x circle", models::two_point(d).product(&models::circle(d)).unwrap()));
    for (name, x) in spaces {
        let ours: Vec<String> = homology(&chains_functor(&x, &RingSpec::Integers).unwrap(), d - 1)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(ours, direct_homology(&x, d - 1), "{name}");
    }
}

#[test]
fn known_values() {
    let d = 3;
    assert_eq!(direct_homology(&models::circle(d), 1), ["Z", "Z"]);
    assert_eq!(direct_homology(&models::rp2(d), 2), ["Z", "Z/2", "0"]);
    assert_eq!(direct_homology(&models::torus(d), 2), ["Z", "Z^2", "Z"]);
    assert_eq!(direct_homology(&models::rp2(d).product(&models::circle(d)).unwrap(), 2), ["Z", "Z+Z/2", "Z/2"]);
}

#[test]
fn reference_smith_form() {
    assert_eq!(smith_diagonal(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
    assert_eq!(smith_diagonal(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
}
