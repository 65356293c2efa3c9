#![allow(dead_code)]

use halin_core::generators::{PlaneTree, Variant};
use halin_core::{generate, GenSpec, Generated, Graph};

/// Odd, monochromatic leaf cycle whose four true fans all carry two leaves,
/// while a pseudo-fan carries three.
///
/// Root 0 has children F1=2, P=1, F2=3. P has three leaves and the inner child
/// Q=4, which carries the fans F3=5 and F4=6. Every leaf sits at even depth.
pub fn pseudo_fan_example() -> Generated {
    let mut children = vec![Vec::new(); 7];
    let mut next = 7;
    let mut leaves = |k: usize| {
        let ids: Vec<usize> = (next..next + k).collect();
        next += k;
        ids
    };
    children[0] = vec![2, 1, 3];
    children[2] = leaves(2);
    let mut p = leaves(3);
    p.push(4);
    children[1] = p;
    children[4] = vec![5, 6];
    children[5] = leaves(2);
    children[6] = leaves(2);
    children[3] = leaves(2);
    children.resize(next, Vec::new());
    PlaneTree { root: 0, children }.into_halin().unwrap()
}

/// Generated graphs of every variant with at most `max_n` vertices.
pub fn small_corpus(max_n: usize, seeds: u64) -> Vec<(GenSpec, Generated)> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        let mut specs = vec![GenSpec::new(Variant::Wheel, n, 0)];
        if n % 2 == 0 && n >= 6 {
            specs.push(GenSpec::new(Variant::Necklace, n, 0));
        }
        for seed in 0..seeds {
            specs.push(GenSpec::new(Variant::Halin, n, seed));
            if n % 2 == 0 {
                specs.push(GenSpec::new(Variant::HalinCubic, n, seed));
            }
        }
        for spec in specs {
            let g = generate(&spec).unwrap();
            out.push((spec, g));
        }
    }
    out
}

/// Brute-force isomorphism test for tiny graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.edges().all(|(u, v)| b.has_edge(perm[u], perm[v])) {
            return true;
        }
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}
