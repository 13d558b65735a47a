//! Search for the vertex set `S` that explains why deleting an edge `uv`
//! breaks the (n,k,d) property: `|S| = n - 2 + 2k`, a large enough matching
//! inside `G[S]`, and `G - S` made of exactly `d` factor-critical odd
//! components plus the bare edge `uv`.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use super::{list, DecisionError, Limits, NkdParams};
use crate::bits::Combinations;
use crate::dense::DenseGraph;
use crate::graph::{normalize, Edge, Graph, VertexSet};
use crate::matching::{mates_to_matching, Matching};
use crate::structure::{self, ComponentProfile, FactorCriticalCache};

/// Which edge-deletion statement the witness is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// Deletion to `(n-2, k, d)`; `G[S]` must contain a `k`-matching.
    D1,
    /// Deletion to `(n, k-1, d)`; `G[S]` must contain a `(k-1)`-matching.
    D3,
}

impl Variant {
    fn inner_matching_size(self, p: NkdParams) -> usize {
        match self {
            Variant::D1 => p.k,
            Variant::D3 => p.k - 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::D1 => "d1",
            Variant::D3 => "d3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionWitness {
    pub set: VertexSet,
    pub edge: Edge,
    pub variant: Variant,
    /// A matching of `G[S]` of the size the variant demands.
    pub inner_matching: Matching,
    /// Components of `G - S` in original ids, factor-critical flags filled.
    pub profile: ComponentProfile,
}

fn check_request(g: &Graph, p: NkdParams, uv: Edge, variant: Variant) -> Result<Edge, DecisionError> {
    let (u, v) = normalize(uv.0, uv.1);
    if !g.has_edge(u, v) {
        return Err(DecisionError::NotAnEdge(uv.0, uv.1));
    }
    match variant {
        Variant::D1 if p.n < 2 => return Err(DecisionError::Bounds(format!("the d1 variant needs n >= 2, got n = {}", p.n))),
        Variant::D3 if p.k < 1 => return Err(DecisionError::Bounds(format!("the d3 variant needs k >= 1, got k = {}", p.k))),
        _ => {}
    }
    p.validate(g)?;
    Ok((u, v))
}

/// Returns the lexicographically first `S ⊆ V(G) \ {u, v}` of size
/// `n - 2 + 2k` meeting the requirements of `variant`, if any.
pub fn find_decomposition_witness(
    g: &Graph,
    p: NkdParams,
    uv: Edge,
    variant: Variant,
    limits: &Limits,
) -> Result<Option<DecompositionWitness>, DecisionError> {
    let (u, v) = check_request(g, p, uv, variant)?;
    let dense = limits.dense(g, limits.decomposition_cap)?;
    let mut cache = FactorCriticalCache::default();
    Ok(search(&dense, &mut cache, p, (u, v), variant))
}

pub(crate) fn search(
    dense: &DenseGraph,
    cache: &mut FactorCriticalCache,
    p: NkdParams,
    (u, v): Edge,
    variant: Variant,
) -> Option<DecompositionWitness> {
    let all = dense.all();
    let pair = (1u64 << u) | (1u64 << v);
    let size = p.n + 2 * p.k - 2;
    let inner = variant.inner_matching_size(p);
    for s in Combinations::new(all & !pair, size) {
        let rest = all & !s;
        // uv must be a whole component on its own
        if dense.row(u) & rest != 1 << v || dense.row(v) & rest != 1 << u {
            continue;
        }
        let others = dense.components(rest & !pair);
        if others.len() != p.d || others.iter().any(|&c| c.count_ones() % 2 == 0) {
            continue;
        }
        if !others.iter().all(|&c| cache.get(dense, c)) {
            continue;
        }
        let mate = dense.maximum_matching(s);
        let found = mates_to_matching(&mate);
        if found.len() < inner {
            continue;
        }
        let inner_matching = Matching::from_sorted(found.edges()[..inner].to_vec());
        let masks = dense.components(rest);
        let profile = ComponentProfile::from_masks(&masks, |m| Some(m != pair && cache.get(dense, m)));
        return Some(DecompositionWitness {
            set: VertexSet::from_mask(s),
            edge: (u, v),
            variant,
            inner_matching,
            profile,
        });
    }
    None
}

impl DecompositionWitness {
    /// Re-checks every invariant with graph-level operations only.
    pub fn verify(&self, g: &Graph, p: NkdParams) -> Result<(), String> {
        let (u, v) = self.edge;
        if !g.has_edge(u, v) {
            return Err(format!("({u}, {v}) is not an edge"));
        }
        if self.set.len() + 2 != p.n + 2 * p.k {
            return Err(format!("|S| = {} but n - 2 + 2k = {}", self.set.len(), (p.n + 2 * p.k).saturating_sub(2)));
        }
        if self.set.contains(u) || self.set.contains(v) {
            return Err("S contains an endpoint of uv".into());
        }
        let inner = self.variant.inner_matching_size(p);
        if self.inner_matching.len() != inner {
            return Err(format!("inner matching has {} edges, expected {inner}", self.inner_matching.len()));
        }
        Matching::new(g, self.inner_matching.edges().iter().copied()).map_err(|e| e.to_string())?;
        if self.inner_matching.covered().members().iter().any(|&x| !self.set.contains(x)) {
            return Err("inner matching leaves G[S]".into());
        }
        let (rest, original) = g.delete_vertices(&self.set).map_err(|e| e.to_string())?;
        let mut odd = 0;
        let mut even = 0;
        let mut actual = Vec::new();
        for comp in structure::components(&rest).components {
            let mut ids: Vec<usize> = comp.vertices.members().iter().map(|&x| original[x]).collect();
            ids.sort_unstable();
            actual.push(ids.clone());
            if comp.odd {
                let sub = rest.induced(&comp.vertices).map_err(|e| e.to_string())?;
                if !structure::is_factor_critical(&sub) {
                    return Err(format!("odd component {ids:?} is not factor-critical"));
                }
                odd += 1;
            } else {
                if ids != [u, v] {
                    return Err(format!("even component {ids:?} is not the edge uv"));
                }
                even += 1;
            }
        }
        if odd != p.d || even != 1 {
            return Err(format!("G - S has {odd} odd and {even} even components, expected {} and 1", p.d));
        }
        let mut recorded: Vec<Vec<usize>> = self.profile.components.iter().map(|c| c.vertices.members().to_vec()).collect();
        recorded.sort();
        actual.sort();
        if recorded != actual {
            return Err("recorded profile does not match G - S".into());
        }
        Ok(())
    }

    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "variant: {}", self.variant);
        let _ = writeln!(out, "edge: {} {}", self.edge.0, self.edge.1);
        let _ = writeln!(out, "set: {}", list(&self.set));
        let _ = writeln!(out, "inner_matching: {}", self.inner_matching);
        for c in &self.profile.components {
            let kind = if !c.odd {
                "even"
            } else if c.factor_critical == Some(true) {
                "odd factor-critical"
            } else {
                "odd"
            };
            let _ = writeln!(out, "component: {} ({kind})", list(&c.vertices));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn cliques_plus_edge_witness() {
        let f = families::cliques_plus_edge(2, 1).unwrap();
        let p = NkdParams::new(2, 1, 2);
        let w = find_decomposition_witness(&f.graph, p, (6, 7), Variant::D1, &Limits::default())
            .unwrap()
            .unwrap();
        assert_eq!(w.set.members(), &[0, 1]);
        assert_eq!(w.inner_matching.edges(), &[(0, 1)]);
        let comps: Vec<&[usize]> = w.profile.components.iter().map(|c| c.vertices.members()).collect();
        assert_eq!(comps, vec![&[2][..], &[3, 4, 5][..], &[6, 7][..]]);
        w.verify(&f.graph, p).unwrap();
    }

    #[test]
    fn none_when_d_is_zero() {
        let k6 = Graph::complete(6);
        let r = find_decomposition_witness(&k6, NkdParams::new(2, 1, 0), (0, 1), Variant::D1, &Limits::default());
        assert_eq!(r, Ok(None));
    }

    #[test]
    fn request_errors() {
        let k6 = Graph::complete(6);
        let lim = Limits::default();
        let c6 = Graph::cycle(6);
        assert_eq!(
            find_decomposition_witness(&c6, NkdParams::new(2, 1, 0), (0, 2), Variant::D1, &lim),
            Err(DecisionError::NotAnEdge(0, 2))
        );
        assert!(matches!(
            find_decomposition_witness(&k6, NkdParams::new(0, 1, 0), (0, 1), Variant::D1, &lim),
            Err(DecisionError::Bounds(_))
        ));
        assert!(matches!(
            find_decomposition_witness(&k6, NkdParams::new(2, 0, 0), (0, 1), Variant::D3, &lim),
            Err(DecisionError::Bounds(_))
        ));
        assert!(matches!(
            find_decomposition_witness(&Graph::complete(15), NkdParams::new(2, 1, 1), (0, 1), Variant::D1, &lim),
            Err(DecisionError::CapExceeded { cap: 14, .. })
        ));
    }
}
