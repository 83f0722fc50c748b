//! Test corpus and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdtc_core::Graph;

pub const RANDOM_SEED: u64 = 0x7d7c_2024;

/// Every connected labeled graph on `2..=max_n` vertices.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

/// `count` seeded G(n, p) samples with `2 <= n <= max_n` and no isolated vertex.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n);
        let p: f64 = rng.gen_range(0.2..0.7);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        if g.min_degree().is_some_and(|d| d > 0) {
            out.push(g);
        }
    }
    out
}

/// Criterion corpus: exhaustive up to 5 vertices plus 200 random graphs on at most 9.
pub fn corpus() -> Vec<Graph> {
    let mut c = connected_graphs(5);
    c.extend(random_graphs(200, 9, RANDOM_SEED));
    c
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

pub fn alpha(g: &Graph) -> usize {
    let adj = masks(g);
    (0u32..1 << g.order())
        .filter(|&s| (0..g.order()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(u32::count_ones)
        .max()
        .unwrap() as usize
}

pub fn gamma_t(g: &Graph) -> usize {
    let adj = masks(g);
    (0u32..1 << g.order())
        .filter(|&s| adj.iter().all(|&a| a & s != 0))
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

/// Calls `f` on every set partition of `0..n` as a restricted growth string.
pub fn for_each_partition(n: usize, mut f: impl FnMut(&[usize], usize)) {
    fn rec(i: usize, used: usize, a: &mut Vec<usize>, f: &mut impl FnMut(&[usize], usize)) {
        if i == a.len() {
            f(a, used);
            return;
        }
        for c in 0..=used {
            a[i] = c;
            rec(i + 1, used.max(c + 1), a, f);
        }
    }
    let mut a = vec![0; n];
    rec(0, 0, &mut a, &mut f);
}

fn classes(colors: &[usize], k: usize) -> Vec<u32> {
    let mut m = vec![0u32; k];
    for (v, &c) in colors.iter().enumerate() {
        m[c] |= 1 << v;
    }
    m
}

pub fn chi(g: &Graph) -> usize {
    let adj = masks(g);
    let mut best = usize::MAX;
    for_each_partition(g.order(), |colors, k| {
        if k < best && classes(colors, k).iter().all(|&c| (0..g.order()).all(|v| c >> v & 1 == 0 || adj[v] & c == 0)) {
            best = k;
        }
    });
    best
}

/// `χ^t_d` straight from the definition: proper, and every vertex is adjacent
/// to every member of some class.
pub fn chi_td(g: &Graph) -> usize {
    let adj = masks(g);
    let n = g.order();
    let mut best = usize::MAX;
    for_each_partition(n, |colors, k| {
        if k >= best {
            return;
        }
        let cls = classes(colors, k);
        let proper = cls.iter().all(|&c| (0..n).all(|v| c >> v & 1 == 0 || adj[v] & c == 0));
        if proper && (0..n).all(|v| cls.iter().any(|&c| c & !adj[v] == 0)) {
            best = k;
        }
    });
    best
}
