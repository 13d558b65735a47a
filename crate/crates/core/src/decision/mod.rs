//! Deciding whether a graph is an (n,k,d)-graph.
//!
//! Two independent deciders are provided. [`is_nkd_by_definition`] deletes
//! every `n`-subset, enumerates every `k`-matching of what remains and asks
//! whether the rest of the graph has a defect-`d` matching.
//! [`is_nkd_by_characterization`] instead bounds the odd components left by
//! every large enough vertex set. Both return a [`Verdict`] whose witness
//! can be re-verified from scratch with [`Verdict::verify`].

mod decomposition;

pub use decomposition::{find_decomposition_witness, DecompositionWitness, Variant};
pub(crate) use decomposition::search as decomposition_search;

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{self, Combinations};
use crate::dense::{DenseGraph, NuMemo};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::matching::{self, berge_violating_mask, Matching};
use crate::structure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NkdParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl NkdParams {
    pub const fn new(n: usize, k: usize, d: usize) -> Self {
        NkdParams { n, k, d }
    }

    /// Both admissibility rules relative to a graph of the given order.
    pub fn validate_order(&self, order: usize) -> Result<(), ParamError> {
        let needed = self.n + 2 * self.k + self.d;
        if needed + 2 > order {
            return Err(ParamError::Size {
                n: self.n,
                k: self.k,
                d: self.d,
                needed,
                order,
            });
        }
        if !(order - self.n - self.d).is_multiple_of(2) {
            return Err(ParamError::Parity {
                n: self.n,
                d: self.d,
                order,
            });
        }
        Ok(())
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ParamError> {
        self.validate_order(g.order())
    }

    /// All admissible triples for a graph of the given order, ascending.
    pub fn sweep(order: usize) -> Vec<NkdParams> {
        let mut out = Vec::new();
        for n in 0..order {
            for k in 0..order {
                for d in 0..order {
                    let p = NkdParams::new(n, k, d);
                    if p.validate_order(order).is_ok() {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for NkdParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("size rule n + 2k + d <= |V(G)| - 2 violated: {n} + 2*{k} + {d} = {needed} > {order} - 2")]
    Size {
        n: usize,
        k: usize,
        d: usize,
        needed: usize,
        order: usize,
    },
    #[error("parity rule |V(G)| - n - d even violated: {order} - {n} - {d} is odd")]
    Parity { n: usize, d: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("order {order} exceeds the exhaustive cap {cap}; pass the accept-cost override to run anyway")]
    CapExceeded { order: usize, cap: usize },
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("{0}")]
    Bounds(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Order caps for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub decider_cap: usize,
    pub decomposition_cap: usize,
    /// Lifts both caps up to the 64-vertex bitmask limit.
    pub accept_cost: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            decider_cap: 16,
            decomposition_cap: 14,
            accept_cost: false,
        }
    }
}

impl Limits {
    pub fn accepting_cost() -> Self {
        Limits {
            accept_cost: true,
            ..Limits::default()
        }
    }

    pub(crate) fn effective(&self, cap: usize) -> usize {
        if self.accept_cost {
            bits::MAX_MASK_ORDER
        } else {
            cap.min(bits::MAX_MASK_ORDER)
        }
    }

    pub(crate) fn dense(&self, g: &Graph, cap: usize) -> Result<DenseGraph, DecisionError> {
        let cap = self.effective(cap);
        if g.order() > cap {
            return Err(DecisionError::CapExceeded {
                order: g.order(),
                cap,
            });
        }
        Ok(DenseGraph::new(g).expect("order within the bitmask limit"))
    }

    pub fn check_decider_order(&self, order: usize) -> Result<(), DecisionError> {
        let cap = self.effective(self.decider_cap);
        if order > cap {
            Err(DecisionError::CapExceeded { order, cap })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    /// `o(G - S) <= |S| - n + d` for `|S| >= n`.
    #[serde(rename = "i")]
    I,
    /// `o(G - S) <= |S| - n - 2k + d` for `|S| >= n + 2k` with a `k`-matching in `G[S]`.
    #[serde(rename = "ii")]
    II,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::I => "i",
            Condition::II => "ii",
        })
    }
}

/// Why a graph fails to be an (n,k,d)-graph. All vertex ids refer to the
/// graph that was decided.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    None,
    /// `G - deleted` has no `k`-matching.
    NoKMatching {
        deleted: VertexSet,
        matching_number: usize,
    },
    /// `matching` is a `k`-matching of `G - deleted` that no defect-`d`
    /// matching extends; `barrier` is a Berge set of `G - deleted - V(matching)`.
    BlockedExtension {
        deleted: VertexSet,
        matching: Matching,
        barrier: VertexSet,
    },
    CharacterizationViolation {
        condition: Condition,
        set: VertexSet,
        odd_components: usize,
        bound: usize,
    },
}

impl Witness {
    pub fn name(&self) -> &'static str {
        match self {
            Witness::None => "none",
            Witness::NoKMatching { .. } => "no-k-matching",
            Witness::BlockedExtension { .. } => "blocked-extension",
            Witness::CharacterizationViolation { .. } => "characterization-violation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Witness,
}

impl Verdict {
    fn holds() -> Self {
        Verdict {
            holds: true,
            witness: Witness::None,
        }
    }

    fn fails(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness,
        }
    }

    /// Re-checks the witness against `g` using only graph-level operations,
    /// independent of the search that produced it.
    pub fn verify(&self, g: &Graph, p: NkdParams) -> Result<(), String> {
        match (&self.witness, self.holds) {
            (Witness::None, true) => Ok(()),
            (Witness::None, false) => Err("failing verdict without a witness".into()),
            (_, true) => Err("holding verdict carries a witness".into()),
            (Witness::NoKMatching { deleted, .. }, false) => {
                if deleted.len() != p.n {
                    return Err(format!("|S| = {} but n = {}", deleted.len(), p.n));
                }
                let (rest, _) = g.delete_vertices(deleted).map_err(|e| e.to_string())?;
                let nu = matching::matching_number(&rest);
                if nu >= p.k {
                    return Err(format!("G - S has a {}-matching", p.k));
                }
                Ok(())
            }
            (
                Witness::BlockedExtension {
                    deleted,
                    matching,
                    barrier,
                },
                false,
            ) => {
                if deleted.len() != p.n {
                    return Err(format!("|S| = {} but n = {}", deleted.len(), p.n));
                }
                if matching.len() != p.k {
                    return Err(format!("matching has {} edges, expected {}", matching.len(), p.k));
                }
                Matching::new(g, matching.edges().iter().copied()).map_err(|e| e.to_string())?;
                let covered = matching.covered();
                let mut removed: Vec<usize> = deleted.members().to_vec();
                for &v in covered.members() {
                    if deleted.contains(v) {
                        return Err(format!("matching covers deleted vertex {v}"));
                    }
                    removed.push(v);
                }
                for &v in barrier.members() {
                    if deleted.contains(v) || covered.contains(v) {
                        return Err(format!("barrier vertex {v} is outside G - S - V(M)"));
                    }
                    removed.push(v);
                }
                let all = VertexSet::new(g.order(), removed).map_err(|e| e.to_string())?;
                let odd = structure::odd_count_after_deletion(g, &all).map_err(|e| e.to_string())?;
                if odd <= barrier.len() + p.d {
                    return Err(format!(
                        "o(G - S - V(M) - T) = {odd} <= |T| + d = {}",
                        barrier.len() + p.d
                    ));
                }
                Ok(())
            }
            (
                Witness::CharacterizationViolation {
                    condition,
                    set,
                    odd_components,
                    ..
                },
                false,
            ) => {
                let odd = structure::odd_count_after_deletion(g, set).map_err(|e| e.to_string())?;
                if odd != *odd_components {
                    return Err(format!("recorded {odd_components} odd components, found {odd}"));
                }
                let s = set.len();
                let bound = match condition {
                    Condition::I => {
                        if s < p.n {
                            return Err(format!("|S| = {s} < n"));
                        }
                        s - p.n + p.d
                    }
                    Condition::II => {
                        if s < p.n + 2 * p.k {
                            return Err(format!("|S| = {s} < n + 2k"));
                        }
                        let inside = g.induced(set).map_err(|e| e.to_string())?;
                        if matching::matching_number(&inside) < p.k {
                            return Err(format!("G[S] has no {}-matching", p.k));
                        }
                        s - p.n - 2 * p.k + p.d
                    }
                };
                if odd <= bound {
                    return Err(format!("o(G - S) = {odd} within bound {bound}"));
                }
                Ok(())
            }
        }
    }

    /// `key: value` lines; see the README for the schema.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "holds: {}", self.holds);
        let _ = writeln!(out, "witness: {}", self.witness.name());
        match &self.witness {
            Witness::None => {}
            Witness::NoKMatching {
                deleted,
                matching_number,
            } => {
                let _ = writeln!(out, "deleted: {}", list(deleted));
                let _ = writeln!(out, "matching_number: {matching_number}");
            }
            Witness::BlockedExtension {
                deleted,
                matching,
                barrier,
            } => {
                let _ = writeln!(out, "deleted: {}", list(deleted));
                let _ = writeln!(out, "matching: {matching}");
                let _ = writeln!(out, "barrier: {}", list(barrier));
            }
            Witness::CharacterizationViolation {
                condition,
                set,
                odd_components,
                bound,
            } => {
                let _ = writeln!(out, "condition: {condition}");
                let _ = writeln!(out, "set: {}", list(set));
                let _ = writeln!(out, "odd_components: {odd_components}");
                let _ = writeln!(out, "bound: {bound}");
            }
        }
        out
    }
}

pub(crate) fn list(set: &VertexSet) -> String {
    let parts: Vec<String> = set.members().iter().map(|v| v.to_string()).collect();
    parts.join(" ")
}

/// Decides by the definition: every `n`-subset `S` leaves a `k`-matching,
/// and every `k`-matching `M` of `G - S` extends to a defect-`d` matching,
/// i.e. `G - S - V(M)` has deficiency at most `d`.
///
/// The witness is the first violation with subsets in lexicographic order
/// and matchings in canonical order.
pub fn is_nkd_by_definition(g: &Graph, p: NkdParams, limits: &Limits) -> Result<Verdict, DecisionError> {
    p.validate(g)?;
    let dense = limits.dense(g, limits.decider_cap)?;
    let mut memo = NuMemo::new(&dense);
    Ok(definition_on(&dense, &mut memo, p))
}

pub(crate) fn definition_on(dense: &DenseGraph, memo: &mut NuMemo, p: NkdParams) -> Verdict {
    let all = dense.all();
    for s in Combinations::new(all, p.n) {
        let rest = all & !s;
        let nu = memo.matching_number(dense, rest);
        if nu < p.k {
            return Verdict::fails(Witness::NoKMatching {
                deleted: VertexSet::from_mask(s),
                matching_number: nu,
            });
        }
        let mut blocked = None;
        dense.for_each_k_matching(rest, p.k, |m| {
            let covered = m.iter().fold(0u64, |acc, &(u, v)| acc | 1 << u | 1 << v);
            if memo.deficiency(dense, rest & !covered) > p.d {
                blocked = Some((m.to_vec(), covered));
                false
            } else {
                true
            }
        });
        if let Some((edges, covered)) = blocked {
            let leftover = rest & !covered;
            let barrier = berge_violating_mask(dense, leftover, p.d)
                .expect("a graph without a defect-d matching has a Berge barrier");
            return Verdict::fails(Witness::BlockedExtension {
                deleted: VertexSet::from_mask(s),
                matching: Matching::from_sorted(edges),
                barrier: VertexSet::from_mask(barrier),
            });
        }
    }
    Verdict::holds()
}

/// Decides through the odd-component characterization.
///
/// Condition (i) is checked for every `S` with `|S| >= n`; condition (ii) for
/// every `S` with `|S| >= n + 2k` whose induced subgraph has a `k`-matching.
/// Subsets are scanned by size, then lexicographically; for each subset
/// (i) is tested before (ii).
pub fn is_nkd_by_characterization(g: &Graph, p: NkdParams, limits: &Limits) -> Result<Verdict, DecisionError> {
    p.validate(g)?;
    let dense = limits.dense(g, limits.decider_cap)?;
    let mut memo = NuMemo::new(&dense);
    let all = dense.all();
    for s in bits::subsets_from_size(all, p.n) {
        let size = bits::count(s);
        let odd = dense.odd_count(all & !s);
        let bound_i = size - p.n + p.d;
        if odd > bound_i {
            return Ok(Verdict::fails(Witness::CharacterizationViolation {
                condition: Condition::I,
                set: VertexSet::from_mask(s),
                odd_components: odd,
                bound: bound_i,
            }));
        }
        if size >= p.n + 2 * p.k {
            let bound_ii = size - p.n - 2 * p.k + p.d;
            if odd > bound_ii && memo.matching_number(&dense, s) >= p.k {
                return Ok(Verdict::fails(Witness::CharacterizationViolation {
                    condition: Condition::II,
                    set: VertexSet::from_mask(s),
                    odd_components: odd,
                    bound: bound_ii,
                }));
            }
        }
    }
    Ok(Verdict::holds())
}

/// `(0,k,0)`: every `k`-matching extends to a perfect matching.
pub fn is_k_extendable(g: &Graph, k: usize, limits: &Limits) -> Result<Verdict, DecisionError> {
    is_nkd_by_definition(g, NkdParams::new(0, k, 0), limits)
}

/// `(n,0,0)`: every `n`-vertex deletion leaves a perfect matching.
pub fn is_n_critical(g: &Graph, n: usize, limits: &Limits) -> Result<Verdict, DecisionError> {
    is_nkd_by_definition(g, NkdParams::new(n, 0, 0), limits)
}
