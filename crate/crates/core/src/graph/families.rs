//! Generators for the counterexample families around edge addition, vertex
//! addition and edge deletion.
//!
//! Every generator fixes its vertex layout so fixtures stay reproducible;
//! distinguished vertices always come last, except for the blow-up whose
//! three hub vertices are `0, 1, 2`.

use thiserror::Error;

use super::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter {name} must be at least {min}, got {value}")]
    TooSmall {
        name: &'static str,
        min: usize,
        value: usize,
    },
}

/// A generated instance plus the vertices or edge the construction singles out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub graph: Graph,
    pub distinguished_vertices: Vec<usize>,
    pub distinguished_edge: Option<Edge>,
}

fn at_least(name: &'static str, value: usize, min: usize) -> Result<(), FamilyError> {
    if value < min {
        Err(FamilyError::TooSmall { name, min, value })
    } else {
        Ok(())
    }
}

fn push_clique(edges: &mut Vec<Edge>, start: usize, size: usize) {
    for u in start..start + size {
        for v in u + 1..start + size {
            edges.push((u, v));
        }
    }
}

/// `K_{3,d+2}` with each vertex of the large side blown up into `K_{2m+1}`.
///
/// Layout: `0, 1, 2` are the hubs `u1, u2, u3`; clique `i` occupies
/// `3 + i(2m+1) .. 3 + (i+1)(2m+1)`.
pub fn blowup_bipartite(d: usize, m: usize) -> Result<Family, FamilyError> {
    at_least("d", d, 1)?;
    at_least("m", m, 1)?;
    let clique = 2 * m + 1;
    let order = 3 + (d + 2) * clique;
    let mut edges = Vec::new();
    for i in 0..d + 2 {
        let start = 3 + i * clique;
        push_clique(&mut edges, start, clique);
        for x in start..start + clique {
            for hub in 0..3 {
                edges.push((hub, x));
            }
        }
    }
    Ok(Family {
        graph: Graph::from_unsorted(order, edges),
        distinguished_vertices: vec![0, 1, 2],
        distinguished_edge: None,
    })
}

/// `d K_{2m+1} ∪ K_2`; the `K_2` is the last two ids.
pub fn cliques_plus_edge(d: usize, m: usize) -> Result<Family, FamilyError> {
    at_least("d", d, 1)?;
    at_least("m", m, 1)?;
    let clique = 2 * m + 1;
    let order = d * clique + 2;
    let mut edges = Vec::new();
    for i in 0..d {
        push_clique(&mut edges, i * clique, clique);
    }
    let e = (order - 2, order - 1);
    edges.push(e);
    Ok(Family {
        graph: Graph::from_unsorted(order, edges),
        distinguished_vertices: vec![e.0, e.1],
        distinguished_edge: Some(e),
    })
}

/// Cone over [`cliques_plus_edge`]. The apex is the last id, so the `K_2`
/// edge sits just before it.
pub fn cliques_plus_edge_cone(d: usize, m: usize) -> Result<Family, FamilyError> {
    let base = cliques_plus_edge(d, m)?;
    let graph = base.graph.cone();
    let apex = graph.order() - 1;
    Ok(Family {
        graph,
        distinguished_vertices: vec![apex],
        distinguished_edge: base.distinguished_edge,
    })
}

/// Five-vertex gadget with edges x1x2, x2x3, x3x4, x4x5, x5x1, x2x4, x3x5,
/// as 0-based offsets inside one copy.
const GADGET: [Edge; 7] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (2, 4)];

/// `copies` disjoint gadgets plus an edge `uv` with both ends joined to
/// `x3` and `x4` of every copy.
///
/// Layout: copy `c` uses `5c .. 5c+5` for `x1..x5`; `u = 5·copies`,
/// `v = 5·copies + 1`.
pub fn gadget_chain(copies: usize) -> Result<Family, FamilyError> {
    at_least("copies", copies, 1)?;
    let u = 5 * copies;
    let v = u + 1;
    let mut edges = vec![(u, v)];
    for c in 0..copies {
        let base = 5 * c;
        edges.extend(GADGET.iter().map(|&(a, b)| (base + a, base + b)));
        for x in [base + 2, base + 3] {
            edges.push((x, u));
            edges.push((x, v));
        }
    }
    Ok(Family {
        graph: Graph::from_unsorted(v + 1, edges),
        distinguished_vertices: vec![u, v],
        distinguished_edge: Some((u, v)),
    })
}
