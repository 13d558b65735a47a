//! Executable recursive theorems about (n,k,d)-graphs.
//!
//! Each [`TheoremId`] names one statement of the form "if `G` is an
//! (n,k,d)-graph and some arithmetic precondition holds, then a derived graph
//! is an (n',k',d')-graph" (or, for the decomposition statements, an
//! equivalence between an edge deletion failing and a witness set existing).
//! [`check_theorem`] tests one statement on one graph and parameter triple;
//! [`run_census`] sweeps every admissible triple over a stream of graphs.
//!
//! Statements stated only for `d = 0` share their code with the general
//! statement they specialize, but are reported under their own ids.

mod census;
mod session;

pub use census::{read_graph6_stream, run_census, validate_census, CensusOptions, CensusReport, DecodeDiagnostic};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decision::{
    find_decomposition_witness, is_nkd_by_characterization, is_nkd_by_definition, DecisionError,
    DecompositionWitness, Limits, NkdParams, Variant, Verdict,
};
use crate::graph::io::write_graph6;
use crate::graph::{Edge, Graph};
use session::{Derivation, Session};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// Downward closure in `n` (same parity) and `k`.
    A3,
    /// `d = 0`, `n >= 1`, `k >= 2`: also `(n+2, k-2, 0)`.
    A4,
    /// `d = 0`, `n, k >= 1`: adding any non-edge gives `(n, k-1, 0)`.
    A5,
    /// `d = 0`, `n >= 2`, `k >= 1`: deleting any edge gives `(n-2, k, 0)`.
    A6i,
    /// `d = 0`, `n >= 2`, `k >= 1`: deleting any edge gives `(n, k-1, 0)`.
    A6ii,
    /// `n > d`, `k >= 1`: adding any non-edge gives `(n, k-1, d)`.
    B1,
    /// `n > d`, `k >= 2`: also `(n+2, k-2, d)`.
    B2,
    /// `n > d`, `k >= 1`: the cone is `(n+1, k-1, d)`.
    C1,
    /// `n >= 2`: `G - uv` fails `(n-2, k, d)` iff a d1 witness exists.
    D1,
    /// Bipartite, `n >= 2`: deleting any edge gives `(n-2, k, d)`.
    D2,
    /// `k >= 1`, `max(deg u, deg v) >= 2k`: `G - uv` fails `(n, k-1, d)` iff
    /// a d3 witness exists.
    D3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::A3,
        TheoremId::A4,
        TheoremId::A5,
        TheoremId::A6i,
        TheoremId::A6ii,
        TheoremId::B1,
        TheoremId::B2,
        TheoremId::C1,
        TheoremId::D1,
        TheoremId::D2,
        TheoremId::D3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::A3 => "A3",
            TheoremId::A4 => "A4",
            TheoremId::A5 => "A5",
            TheoremId::A6i => "A6i",
            TheoremId::A6ii => "A6ii",
            TheoremId::B1 => "B1",
            TheoremId::B2 => "B2",
            TheoremId::C1 => "C1",
            TheoremId::D1 => "D1",
            TheoremId::D2 => "D2",
            TheoremId::D3 => "D3",
        }
    }

    /// Whether the check needs the cone, which has one more vertex.
    fn uses_cone(self) -> bool {
        self == TheoremId::C1
    }

    fn uses_decomposition(self) -> bool {
        matches!(self, TheoremId::D1 | TheoremId::D3)
    }

    /// The first unmet arithmetic or structural precondition, if any.
    fn unmet(self, p: NkdParams, session: &mut Session<'_>) -> Option<&'static str> {
        use TheoremId::*;
        let d_zero = || (p.d != 0).then_some("d-nonzero");
        let n_at_least = |m: usize| {
            (p.n < m).then_some(match m {
                1 => "n-below-1",
                _ => "n-below-2",
            })
        };
        let k_at_least = |m: usize| {
            (p.k < m).then_some(match m {
                1 => "k-below-1",
                _ => "k-below-2",
            })
        };
        let n_above_d = || (p.n <= p.d).then_some("n-not-above-d");
        match self {
            A3 => None,
            A4 => d_zero().or(n_at_least(1)).or(k_at_least(2)),
            A5 => d_zero().or(n_at_least(1)).or(k_at_least(1)),
            A6i | A6ii => d_zero().or(n_at_least(2)).or(k_at_least(1)),
            B1 => n_above_d().or(k_at_least(1)),
            B2 => n_above_d().or(k_at_least(2)),
            C1 => k_at_least(1).or(n_above_d()),
            D1 => n_at_least(2),
            D2 => n_at_least(2).or_else(|| (!session.is_bipartite()).then_some("not-bipartite")),
            D3 => k_at_least(1),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown theorem id {0:?}; expected one of A3 A4 A5 A6i A6ii B1 B2 C1 D1 D2 D3")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    /// Case-insensitive; `A6(i)` and `A6(ii)` are accepted too.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')'))
            .collect::<String>()
            .to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name().to_ascii_uppercase() == key)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

/// Where in the graph a single check looked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Context {
    /// `G` itself under other parameters.
    Params,
    NonEdge { u: usize, v: usize },
    Edge { u: usize, v: usize },
    Cone,
}

impl Context {
    fn derivation(self) -> Option<Derivation> {
        match self {
            Context::Params => None,
            Context::NonEdge { u, v } => Some(Derivation::AddEdge((u, v))),
            Context::Edge { u, v } => Some(Derivation::DeleteEdge((u, v))),
            Context::Cone => Some(Derivation::Cone),
        }
    }

    fn describe(self) -> String {
        match self {
            Context::Params => "G".into(),
            Context::NonEdge { u, v } => format!("G + {u}{v}"),
            Context::Edge { u, v } => format!("G - {u}{v}"),
            Context::Cone => "G + x".into(),
        }
    }

    fn edge(self) -> Option<Edge> {
        match self {
            Context::Edge { u, v } | Context::NonEdge { u, v } => Some((u, v)),
            _ => None,
        }
    }
}

/// What a single check asserts about the derived graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Claim {
    Holds,
    /// Failure of the derived graph and existence of a witness coincide.
    IffWitness(Variant),
    /// The derived graph holds and no witness exists.
    HoldsWithoutWitness(Variant),
}

impl Claim {
    fn variant(self) -> Option<Variant> {
        match self {
            Claim::Holds => None,
            Claim::IffWitness(v) | Claim::HoldsWithoutWitness(v) => Some(v),
        }
    }

    fn violated(self, holds: bool, witness: bool) -> bool {
        match self {
            Claim::Holds => !holds,
            Claim::IffWitness(_) => holds == witness,
            Claim::HoldsWithoutWitness(_) => !holds || witness,
        }
    }

    fn explain(self, target: &str, derived: NkdParams, holds: bool, witness: bool) -> String {
        let status = if holds { "is" } else { "is not" };
        match self.variant() {
            None => format!("{target} {status} {derived}"),
            Some(v) => {
                let found = if witness { "a" } else { "no" };
                format!("{target} {status} {derived} and {found} {v} witness exists")
            }
        }
    }
}

/// One failed check, with the evidence gathered when it was rechecked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Position of the graph in the census stream; 0 for single checks.
    pub graph_index: usize,
    pub graph6: String,
    pub params: NkdParams,
    pub derived_params: NkdParams,
    pub context: Context,
    pub detail: String,
    /// Definition-decider verdict on the derived graph from the recheck.
    pub verdict: Option<Verdict>,
    pub decomposition: Option<DecompositionWitness>,
    /// Whether a fresh run through the public deciders reproduced it.
    pub confirmed_on_recheck: bool,
}

/// Outcome of one theorem over one or more graphs. `pass` is set exactly
/// when `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    theorem: TheoremId,
    graphs_examined: usize,
    instances: usize,
    applicable: usize,
    inapplicable: BTreeMap<String, usize>,
    checks: usize,
    excluded: BTreeMap<String, usize>,
    violations: Vec<Violation>,
    pass: bool,
}

impl TheoremReport {
    pub fn new(theorem: TheoremId) -> Self {
        TheoremReport {
            theorem,
            graphs_examined: 0,
            instances: 0,
            applicable: 0,
            inapplicable: BTreeMap::new(),
            checks: 0,
            excluded: BTreeMap::new(),
            violations: Vec::new(),
            pass: true,
        }
    }

    pub fn theorem(&self) -> TheoremId {
        self.theorem
    }

    pub fn graphs_examined(&self) -> usize {
        self.graphs_examined
    }

    /// (graph, parameter) pairs considered.
    pub fn instances(&self) -> usize {
        self.instances
    }

    /// Instances whose preconditions, including the (n,k,d) property, held.
    pub fn applicable(&self) -> usize {
        self.applicable
    }

    /// Inapplicable instances counted by the first unmet precondition.
    pub fn inapplicable(&self) -> &BTreeMap<String, usize> {
        &self.inapplicable
    }

    /// Individual assertions made on applicable instances.
    pub fn checks(&self) -> usize {
        self.checks
    }

    /// Edges skipped inside applicable instances, by reason.
    pub fn excluded(&self) -> &BTreeMap<String, usize> {
        &self.excluded
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn pass(&self) -> bool {
        self.pass
    }

    fn push_violation(&mut self, v: Violation) {
        self.violations.push(v);
        self.pass = false;
    }

    /// Appends `other`, keeping violations in the order they were added.
    pub fn merge(&mut self, other: TheoremReport) {
        assert_eq!(self.theorem, other.theorem, "merging reports of different theorems");
        self.graphs_examined += other.graphs_examined;
        self.instances += other.instances;
        self.applicable += other.applicable;
        self.checks += other.checks;
        for (k, v) in other.inapplicable {
            *self.inapplicable.entry(k).or_default() += v;
        }
        for (k, v) in other.excluded {
            *self.excluded.entry(k).or_default() += v;
        }
        for v in other.violations {
            self.push_violation(v);
        }
    }
}

/// Raises `CapExceeded` when a graph of `order` is too large for `id`.
pub fn check_caps(id: TheoremId, order: usize, limits: &Limits) -> Result<(), DecisionError> {
    let cap = limits.effective(limits.decider_cap);
    let needed = order + usize::from(id.uses_cone());
    if needed > cap {
        return Err(DecisionError::CapExceeded { order: needed, cap });
    }
    if id.uses_decomposition() {
        let cap = limits.effective(limits.decomposition_cap);
        if order > cap {
            return Err(DecisionError::CapExceeded { order, cap });
        }
    }
    Ok(())
}

/// Tests one theorem on one graph and parameter triple.
pub fn check_theorem(id: TheoremId, g: &Graph, p: NkdParams, limits: &Limits) -> Result<TheoremReport, DecisionError> {
    p.validate(g)?;
    check_caps(id, g.order(), limits)?;
    let mut session = Session::new(g);
    let mut report = TheoremReport::new(id);
    report.graphs_examined = 1;
    evaluate(&mut session, id, p, 0, &mut report);
    Ok(report)
}

macro_rules! wrappers {
    ($($name:ident => $id:ident),* $(,)?) => {$(
        #[doc = concat!("[`check_theorem`] for [`TheoremId::", stringify!($id), "`].")]
        pub fn $name(g: &Graph, p: NkdParams, limits: &Limits) -> Result<TheoremReport, DecisionError> {
            check_theorem(TheoremId::$id, g, p, limits)
        }
    )*};
}

wrappers! {
    check_a3 => A3,
    check_a4 => A4,
    check_a5 => A5,
    check_a6i => A6i,
    check_a6ii => A6ii,
    check_b1 => B1,
    check_b2 => B2,
    check_c1 => C1,
    check_d1 => D1,
    check_d2 => D2,
    check_d3 => D3,
}

/// The checks an applicable instance makes: context, derived parameters
/// and the claim.
fn plan(id: TheoremId, g: &Graph, p: NkdParams) -> Vec<(Context, NkdParams, Claim)> {
    use TheoremId::*;
    let NkdParams { n, k, d } = p;
    let edges = || g.edges().iter().map(|&(u, v)| Context::Edge { u, v });
    match id {
        A3 => {
            let mut out = Vec::new();
            for n2 in (n % 2..=n).step_by(2) {
                for k2 in 0..=k {
                    if (n2, k2) != (n, k) {
                        out.push((Context::Params, NkdParams::new(n2, k2, d), Claim::Holds));
                    }
                }
            }
            out
        }
        A4 | B2 => vec![(Context::Params, NkdParams::new(n + 2, k - 2, d), Claim::Holds)],
        A5 | B1 => g
            .non_edges()
            .into_iter()
            .map(|(u, v)| (Context::NonEdge { u, v }, NkdParams::new(n, k - 1, d), Claim::Holds))
            .collect(),
        A6i | D2 => edges().map(|c| (c, NkdParams::new(n - 2, k, d), Claim::Holds)).collect(),
        A6ii => edges().map(|c| (c, NkdParams::new(n, k - 1, d), Claim::Holds)).collect(),
        C1 => vec![(Context::Cone, NkdParams::new(n + 1, k - 1, d), Claim::Holds)],
        D1 => {
            let claim = if d == 0 {
                Claim::HoldsWithoutWitness(Variant::D1)
            } else {
                Claim::IffWitness(Variant::D1)
            };
            edges().map(|c| (c, NkdParams::new(n - 2, k, d), claim)).collect()
        }
        D3 => edges()
            .filter(|c| {
                let (u, v) = c.edge().expect("edge context");
                g.degree(u).max(g.degree(v)) >= 2 * k
            })
            .map(|c| (c, NkdParams::new(n, k - 1, d), Claim::IffWitness(Variant::D3)))
            .collect(),
    }
}

fn evaluate(session: &mut Session<'_>, id: TheoremId, p: NkdParams, graph_index: usize, report: &mut TheoremReport) {
    report.instances += 1;
    if let Some(reason) = id.unmet(p, session) {
        *report.inapplicable.entry(reason.to_string()).or_default() += 1;
        return;
    }
    if !session.holds(p) {
        *report.inapplicable.entry("not-nkd".to_string()).or_default() += 1;
        return;
    }
    report.applicable += 1;
    let g = session.graph();
    let checks = plan(id, g, p);
    if id == TheoremId::D3 {
        let skipped = g.edge_count() - checks.len();
        if skipped > 0 {
            *report.excluded.entry("degree-below-2k".to_string()).or_default() += skipped;
        }
    }
    for (context, derived, claim) in checks {
        report.checks += 1;
        let holds = match context.derivation() {
            None => session.holds(derived),
            Some(which) => session.derived_holds(which, derived),
        };
        let witness = match (claim.variant(), context.edge()) {
            (Some(variant), Some(edge)) => session.has_witness(p, edge, variant),
            _ => false,
        };
        if claim.violated(holds, witness) {
            report.push_violation(recheck(g, p, derived, context, claim, graph_index));
        }
    }
}

/// Rebuilds every ingredient of a violation through the public deciders.
fn recheck(g: &Graph, p: NkdParams, derived: NkdParams, context: Context, claim: Claim, graph_index: usize) -> Violation {
    let limits = Limits::accepting_cost();
    let target = match context.derivation() {
        None => g.clone(),
        Some(which) => which.apply(g),
    };
    let mut notes = Vec::new();
    let base = is_nkd_by_definition(g, p, &limits).map(|v| v.holds);
    let base_char = is_nkd_by_characterization(g, p, &limits).map(|v| v.holds);
    if base != Ok(true) || base_char != Ok(true) {
        notes.push(format!("recheck: G under {p} gives {base:?} by definition and {base_char:?} by characterization"));
    }
    let verdict = is_nkd_by_definition(&target, derived, &limits);
    let by_char = is_nkd_by_characterization(&target, derived, &limits).map(|v| v.holds);
    let decomposition = match (claim.variant(), context.edge()) {
        (Some(variant), Some(edge)) => find_decomposition_witness(g, p, edge, variant, &limits).ok().flatten(),
        _ => None,
    };
    let mut confirmed = notes.is_empty();
    match &verdict {
        Ok(v) => {
            if by_char.as_ref().map_or(true, |&h| h != v.holds) {
                notes.push(format!("recheck: deciders disagree on {} under {derived}", context.describe()));
            }
            confirmed &= claim.violated(v.holds, decomposition.is_some());
        }
        Err(e) => {
            notes.push(format!("recheck failed: {e}"));
            confirmed = false;
        }
    }
    let holds = verdict.as_ref().is_ok_and(|v| v.holds);
    let mut detail = claim.explain(&context.describe(), derived, holds, decomposition.is_some());
    for note in notes {
        detail.push_str("; ");
        detail.push_str(&note);
    }
    Violation {
        graph_index,
        graph6: write_graph6(g).unwrap_or_default(),
        params: p,
        derived_params: derived,
        context,
        detail,
        verdict: verdict.ok(),
        decomposition,
        confirmed_on_recheck: confirmed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn ids_parse_and_print() {
        for id in TheoremId::ALL {
            assert_eq!(id.to_string().parse::<TheoremId>(), Ok(id));
        }
        assert_eq!("a6(ii)".parse::<TheoremId>(), Ok(TheoremId::A6ii));
        assert!("A7".parse::<TheoremId>().is_err());
    }

    #[test]
    fn a3_on_cliques_plus_edge() {
        let h = families::cliques_plus_edge(2, 1).unwrap().graph;
        let r = check_a3(&h, NkdParams::new(2, 1, 2), &lim()).unwrap();
        assert_eq!((r.applicable(), r.checks()), (1, 3));
        assert!(r.pass());
    }

    #[test]
    fn blowup_is_outside_b1_and_b2() {
        let h = families::blowup_bipartite(1, 1).unwrap().graph;
        let p = NkdParams::new(1, 2, 1);
        for id in [TheoremId::B1, TheoremId::B2, TheoremId::C1] {
            let r = check_theorem(id, &h, p, &lim()).unwrap();
            assert_eq!(r.applicable(), 0);
            assert_eq!(r.inapplicable().get("n-not-above-d"), Some(&1));
        }
    }

    #[test]
    fn d1_on_cliques_plus_edge() {
        let h = families::cliques_plus_edge(2, 1).unwrap().graph;
        let r = check_d1(&h, NkdParams::new(2, 1, 2), &lim()).unwrap();
        assert_eq!(r.checks(), h.edge_count());
        assert!(r.pass());
    }

    #[test]
    fn d3_excludes_low_degree_edge_of_gadget_chain() {
        let fam = families::gadget_chain(2).unwrap();
        let r = check_d3(&fam.graph, NkdParams::new(1, 3, 3), &lim()).unwrap();
        assert_eq!(r.applicable(), 1);
        assert!(r.excluded().get("degree-below-2k").copied().unwrap_or(0) >= 1);
        assert!(r.pass());
    }

    #[test]
    fn d2_needs_bipartite() {
        let r = check_d2(&Graph::complete(6), NkdParams::new(2, 1, 0), &lim()).unwrap();
        assert_eq!(r.inapplicable().get("not-bipartite"), Some(&1));
        let r = check_d2(&Graph::complete_bipartite(4, 4), NkdParams::new(2, 1, 2), &lim()).unwrap();
        assert!(r.pass());
    }

    #[test]
    fn caps_and_params() {
        assert!(matches!(
            check_c1(&Graph::complete(16), NkdParams::new(0, 1, 0), &lim()),
            Err(DecisionError::CapExceeded { order: 17, cap: 16 })
        ));
        assert!(check_a3(&Graph::complete(6), NkdParams::new(1, 1, 0), &lim()).is_err());
    }

    #[test]
    fn claims() {
        assert!(Claim::Holds.violated(false, false));
        assert!(!Claim::IffWitness(Variant::D1).violated(false, true));
        assert!(Claim::IffWitness(Variant::D1).violated(false, false));
        assert!(Claim::HoldsWithoutWitness(Variant::D1).violated(true, true));
    }
}
