//! Brute-force reference implementations that share no code with the
//! library beyond the `Graph` container.

#![allow(dead_code)]

use nkd_core::{Graph, NkdParams};

pub fn adjacency(g: &Graph) -> Vec<u64> {
    let mut rows = vec![0u64; g.order()];
    for &(u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

/// Maximum matching size of `G[alive]` by exhaustive branching on the
/// lowest live vertex: either it stays unmatched or it takes a neighbor.
pub fn nu(rows: &[u64], alive: u64) -> usize {
    if alive == 0 {
        return 0;
    }
    let v = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << v);
    let mut best = nu(rows, rest);
    let mut nbrs = rows[v] & rest;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        best = best.max(1 + nu(rows, rest & !(1 << w)));
    }
    best
}

pub fn graph_nu(g: &Graph) -> usize {
    nu(&adjacency(g), full(g.order()))
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Odd components of `G[alive]` by repeated flood fill.
pub fn odd_components(rows: &[u64], alive: u64) -> usize {
    let mut rest = alive;
    let mut odd = 0;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        loop {
            let mut grown = comp;
            let mut m = comp;
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                m &= m - 1;
                grown |= rows[x] & alive;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        odd += comp.count_ones() as usize % 2;
        rest &= !comp;
    }
    odd
}

/// Every `k`-matching of `G[alive]` as the mask of its covered vertices.
pub fn k_matching_covers(rows: &[u64], alive: u64, k: usize) -> Vec<u64> {
    fn go(rows: &[u64], free: u64, k: usize, covered: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(covered);
            return;
        }
        // branch on the lowest vertex that may still be used
        let mut cand = free;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let later = free & !((1u64 << (v + 1)) - 1);
            let mut nbrs = rows[v] & later;
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                go(rows, later & !(1 << w), k - 1, covered | 1 << v | 1 << w, out);
            }
        }
    }
    let mut out = Vec::new();
    go(rows, alive, k, 0, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

pub fn subsets(pool: u64, size: usize) -> Vec<u64> {
    let members: Vec<usize> = (0..64).filter(|&v| pool >> v & 1 == 1).collect();
    let mut out = Vec::new();
    for combo in 0u64..(1 << members.len()) {
        if combo.count_ones() as usize == size {
            out.push(members.iter().enumerate().filter(|(i, _)| combo >> i & 1 == 1).fold(0, |m, (_, &v)| m | 1 << v));
        }
    }
    out
}

/// The (n,k,d) property straight from the definition.
pub fn is_nkd(g: &Graph, p: NkdParams) -> bool {
    let rows = adjacency(g);
    let all = full(g.order());
    subsets(all, p.n).into_iter().all(|s| {
        let rest = all & !s;
        let covers = k_matching_covers(&rows, rest, p.k);
        !covers.is_empty()
            && covers.into_iter().all(|c| {
                let left = rest & !c;
                left.count_ones() as usize - 2 * nu(&rows, left) <= p.d
            })
    })
}

/// Factor-critical: connected, odd, and every vertex-deleted subgraph has a
/// perfect matching.
pub fn factor_critical(rows: &[u64], comp: u64) -> bool {
    let size = comp.count_ones() as usize;
    if size.is_multiple_of(2) {
        return false;
    }
    let connected = {
        let mut seen = comp & comp.wrapping_neg();
        loop {
            let mut grown = seen;
            let mut m = seen;
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                m &= m - 1;
                grown |= rows[x] & comp;
            }
            if grown == seen {
                break seen == comp;
            }
            seen = grown;
        }
    };
    connected && (0..64).filter(|&v| comp >> v & 1 == 1).all(|v| 2 * nu(rows, comp & !(1 << v)) == size - 1)
}

/// Whether some `S` avoiding `u, v` with `|S| = n + 2k - 2` and a
/// `inner`-matching inside leaves exactly the edge `uv` plus `d`
/// factor-critical odd components.
pub fn decomposition_exists(g: &Graph, p: NkdParams, (u, v): (usize, usize), inner: usize) -> bool {
    let rows = adjacency(g);
    let all = full(g.order());
    let pair = 1u64 << u | 1u64 << v;
    let size = (p.n + 2 * p.k).checked_sub(2).expect("size");
    subsets(all & !pair, size).into_iter().any(|s| {
        let rest = all & !s;
        if rows[u] & rest != 1 << v || rows[v] & rest != 1 << u {
            return false;
        }
        if nu(&rows, s) < inner {
            return false;
        }
        let mut others = rest & !pair;
        let mut count = 0;
        while others != 0 {
            let seed = others & others.wrapping_neg();
            let mut comp = seed;
            loop {
                let mut grown = comp;
                let mut m = comp;
                while m != 0 {
                    let x = m.trailing_zeros() as usize;
                    m &= m - 1;
                    grown |= rows[x] & rest & !pair;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            if !factor_critical(&rows, comp) {
                return false;
            }
            count += 1;
            others &= !comp;
        }
        count == p.d
    })
}

/// Random simple graphs of order `min..=max` with every density.
pub fn arb_graph(min: usize, max: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (min..=max)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)))
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

/// Number of distinct `k`-matchings of `G[alive]`.
pub fn k_matching_count(rows: &[u64], alive: u64, k: usize) -> usize {
    let mut edges = Vec::new();
    for u in 0..rows.len() {
        for v in u + 1..rows.len() {
            if alive >> u & 1 == 1 && alive >> v & 1 == 1 && rows[u] >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    fn go(edges: &[(usize, usize)], used: u64, k: usize) -> usize {
        if k == 0 {
            return 1;
        }
        let mut total = 0;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if used >> u & 1 == 0 && used >> v & 1 == 0 {
                total += go(&edges[i + 1..], used | 1 << u | 1 << v, k - 1);
            }
        }
        total
    }
    go(&edges, 0, k)
}
