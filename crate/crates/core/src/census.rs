//! Graph sources for exhaustive and sampled censuses: every connected graph
//! of a small order up to isomorphism, and seeded random samples.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph};

/// Canonical codes pack the upper triangle into a `u64`.
pub const MAX_CENSUS_ORDER: usize = 11;

fn pair_bit(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Isomorphism-invariant code: the largest upper-triangle bit pattern over
/// all vertex orders that list vertices by decreasing (degree, neighbor
/// degree multiset).
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= MAX_CENSUS_ORDER, "canonical codes support at most {MAX_CENSUS_ORDER} vertices");
    let rows = g.adjacency_masks().expect("small graph");
    let keys: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable_by(|a, b| b.cmp(a));
            (g.degree(v), nd)
        })
        .collect();
    let mut by_key: Vec<usize> = (0..n).collect();
    by_key.sort_by(|&a, &b| keys[b].cmp(&keys[a]));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &by_key {
        match cells.last_mut() {
            Some(cell) if keys[cell[0]] == keys[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut placed = Vec::with_capacity(n);
    permute_cells(&cells, 0, &mut vec![false; n], &mut placed, &rows, &mut best);
    best
}

fn permute_cells(
    cells: &[Vec<usize>],
    cell: usize,
    used: &mut Vec<bool>,
    placed: &mut Vec<usize>,
    rows: &[u64],
    best: &mut u64,
) {
    if cell == cells.len() {
        let mut code = 0u64;
        for j in 1..placed.len() {
            for i in 0..j {
                if rows[placed[i]] >> placed[j] & 1 == 1 {
                    code |= 1 << pair_bit(i, j);
                }
            }
        }
        *best = (*best).max(code);
        return;
    }
    let members = &cells[cell];
    let start = placed.len();
    let filled = members.iter().filter(|&&v| used[v]).count();
    if filled == members.len() {
        permute_cells(cells, cell + 1, used, placed, rows, best);
        return;
    }
    for &v in members {
        if used[v] {
            continue;
        }
        used[v] = true;
        placed.push(v);
        permute_cells(cells, cell, used, placed, rows, best);
        placed.pop();
        used[v] = false;
    }
    debug_assert_eq!(placed.len(), start);
}

/// Rebuilds the graph a canonical code describes.
pub fn from_code(order: usize, code: u64) -> Graph {
    let mut edges: Vec<Edge> = Vec::new();
    for j in 1..order {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_unsorted(order, edges)
}

/// All connected graphs on exactly `order` vertices, one per isomorphism
/// class, in canonical form, sorted by canonical code.
pub fn connected_graphs(order: usize) -> Vec<Graph> {
    assert!(order <= MAX_CENSUS_ORDER);
    let mut level: Vec<Graph> = match order {
        0 => return Vec::new(),
        _ => vec![Graph::empty(1)],
    };
    for next in 2..=order {
        // every connected graph has a vertex whose removal keeps it connected
        let mut seen = HashSet::new();
        let mut codes = Vec::new();
        for g in &level {
            let base = g.order();
            for nbrs in 1u64..(1 << base) {
                let mut edges = g.edges().to_vec();
                edges.extend(crate::bits::iter(nbrs).map(|u| (u, base)));
                let code = canonical_code(&Graph::from_unsorted(next, edges));
                if seen.insert(code) {
                    codes.push(code);
                }
            }
        }
        codes.sort_unstable();
        level = codes.into_iter().map(|c| from_code(next, c)).collect();
    }
    level
}

/// Connected graphs of orders `1..=max_order`, smallest orders first.
pub fn connected_graphs_up_to(max_order: usize) -> Vec<Graph> {
    (1..=max_order).flat_map(connected_graphs).collect()
}

/// `G(order, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, order: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_sorted(order, edges)
}

/// `count` random graphs with orders drawn from `min_order..=max_order` and
/// edge densities drawn from `[0.1, 0.9]`.
pub fn random_sample(seed: u64, count: usize, min_order: usize, max_order: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let order = rng.gen_range(min_order..=max_order);
            let p = rng.gen_range(0.1..0.9);
            random_graph(&mut rng, order, p)
        })
        .collect()
}

/// `count` disconnected random graphs: a disjoint union of two random parts
/// with the vertex ids shuffled.
pub fn disconnected_sample(seed: u64, count: usize, min_order: usize, max_order: usize) -> Vec<Graph> {
    assert!(min_order >= 2, "a disconnected graph needs two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let order = rng.gen_range(min_order..=max_order);
            let split = rng.gen_range(1..order);
            let (pa, pb) = (rng.gen_range(0.2..1.0), rng.gen_range(0.2..1.0));
            let a = random_graph(&mut rng, split, pa);
            let b = random_graph(&mut rng, order - split, pb);
            let joined = a.disjoint_union(&b);
            let mut relabel: Vec<usize> = (0..order).collect();
            relabel.shuffle(&mut rng);
            let edges = joined
                .edges()
                .iter()
                .map(|&(u, v)| (relabel[u], relabel[v]))
                .collect();
            Graph::from_unsorted(order, edges)
        })
        .collect()
}
