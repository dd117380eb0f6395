//! Unicyclic graph rewrites and the greedy chains built from them.
//!
//! Six edge surgeries, each preserving vertex and edge count (hence
//! unicyclicity), move the additively weighted Harary index strictly in one
//! direction:
//!
//! * maximize: [`leaf_lift`] pulls deep leaves toward the cycle,
//!   [`cycle_shrink`] shortens the cycle one vertex at a time,
//!   [`consolidate_triangle_leaves`] gathers triangle leaves onto one
//!   vertex. The chain ends at `CS_{3,n-3}`.
//! * minimize: [`subtree_to_path`] straightens pendant trees into paths,
//!   [`merge_branches`] concatenates pendant paths until one branch
//!   remains, [`triangle_tail`] trades cycle length for tail length. The
//!   chain ends at `CP_{3,n-3}` (defined for `n >= 5`; on 4 vertices `C_4`
//!   is already minimal and no rewrite applies).
//!
//! Each step records the exact index value before and after; a
//! [`PairDeltaLedger`] breaks any before/after pair down into per-vertex-pair
//! contributions that sum exactly to the index difference.

mod maximize;
mod minimize;

pub use maximize::{consolidate_triangle_leaves, cycle_shrink, leaf_lift};
pub use minimize::{merge_branches, subtree_to_path, triangle_tail};

use crate::graph::{classify, Graph, GraphClass, GraphError};
use crate::indices::additively_weighted_harary;
use crate::rational::Rational;
use crate::unicyclic::{decompose_unicyclic, is_cycle_path, is_cycle_star};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("graph is already a cycle-star; no leaf lift applies")]
    AlreadyCycleStar,
    #[error("cycle shrink and leaf consolidation require a cycle-star graph")]
    NotCycleStar,
    #[error("cycle is already a triangle")]
    CycleAlreadyTriangle,
    #[error("graph is already a cycle-path; no subtree straightening applies")]
    AlreadyCyclePath,
    #[error("branch merging requires a cycle-path graph")]
    NotCyclePath,
    #[error("need at least {need} branching cycle vertices, found {found}")]
    TooFewBranches { found: usize, need: usize },
    #[error("tail extension requires a cycle-path graph with at most one branch")]
    NotSingleBranch,
    #[error(
        "no minimization applies on 4 vertices: C_4 is the unique minimal \
         unicyclic graph there (H_A = 20 < 21 = H_A(CS_{{3,1}}))"
    )]
    MinimizeAtFour,
    #[error("minimization is defined for n >= 5, got {0}")]
    MinimizeTooSmall(usize),
    #[error("vertex counts differ: {before} vs {after}")]
    VertexCountMismatch { before: usize, after: usize },
    #[error("correspondence is not a bijection on 0..{0}")]
    InvalidCorrespondence(usize),
    #[error("pair deltas require connected graphs")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which rewrite produced a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    LeafLift,
    CycleShrink,
    ConsolidateTriangleLeaves,
    SubtreeToPath,
    MergeBranches(MergeCase),
    TriangleTail,
}

/// The structural situation a branch merge resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeCase {
    /// Two consecutive branches close enough that one tail reaches the other.
    ReachablePair,
    /// Four or more branches: the closest pair is folded into the cycle.
    CycleAbsorb,
    /// Exactly three branches: the middle tail moves behind a far one.
    ThreeBranches,
    /// Exactly two branches: one tail moves behind the other.
    TwoBranches,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformKind::LeafLift => write!(f, "leaf_lift"),
            TransformKind::CycleShrink => write!(f, "cycle_shrink"),
            TransformKind::ConsolidateTriangleLeaves => write!(f, "consolidate_triangle_leaves"),
            TransformKind::SubtreeToPath => write!(f, "subtree_to_path"),
            TransformKind::MergeBranches(case) => write!(f, "merge_branches/{case}"),
            TransformKind::TriangleTail => write!(f, "triangle_tail"),
        }
    }
}

impl fmt::Display for MergeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MergeCase::ReachablePair => "reachable_pair",
            MergeCase::CycleAbsorb => "cycle_absorb",
            MergeCase::ThreeBranches => "three_branches",
            MergeCase::TwoBranches => "two_branches",
        };
        write!(f, "{name}")
    }
}

/// One edge surgery with its exact index values.
///
/// Removed and added edge lists always have equal length, so every step
/// preserves the edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformStep {
    pub kind: TransformKind,
    pub edges_removed: Vec<(usize, usize)>,
    pub edges_added: Vec<(usize, usize)>,
    pub h_a_before: Rational,
    pub h_a_after: Rational,
}

/// An ordered run of rewrite steps from `initial` to `final_graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformTrace {
    pub initial: Graph,
    pub steps: Vec<TransformStep>,
    pub final_graph: Graph,
}

pub(crate) fn normalize_edge(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Applies a step's edge surgery to a graph, yielding the next graph in a
/// trace. Useful for replaying traces.
pub fn apply_step(g: &Graph, step: &TransformStep) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize)> = g.edges();
    for &(u, v) in &step.edges_removed {
        let e = normalize_edge(u, v);
        let pos = edges
            .iter()
            .position(|&x| x == e)
            .ok_or(GraphError::DuplicateEdge(e.0, e.1))?;
        edges.swap_remove(pos);
    }
    edges.extend(step.edges_added.iter().map(|&(u, v)| normalize_edge(u, v)));
    Graph::from_edges(g.vertex_count(), &edges)
}

pub(crate) fn make_step(
    kind: TransformKind,
    before: &Graph,
    after: &Graph,
    mut edges_removed: Vec<(usize, usize)>,
    mut edges_added: Vec<(usize, usize)>,
) -> Result<(Graph, TransformStep), TransformError> {
    edges_removed.sort_unstable();
    edges_added.sort_unstable();
    debug_assert_eq!(edges_removed.len(), edges_added.len());
    debug_assert_eq!(classify(after), GraphClass::Unicyclic);
    let h_a_before =
        additively_weighted_harary(before).map_err(|_| TransformError::Disconnected)?;
    let h_a_after = additively_weighted_harary(after).map_err(|_| TransformError::Disconnected)?;
    let step = TransformStep {
        kind,
        edges_removed,
        edges_added,
        h_a_before,
        h_a_after,
    };
    Ok((after.clone(), step))
}

fn require_unicyclic(g: &Graph) -> Result<(), TransformError> {
    if classify(g) != GraphClass::Unicyclic {
        return Err(TransformError::Graph(GraphError::NotUnicyclic));
    }
    Ok(())
}

/// Drives any unicyclic graph to `CS_{3,n-3}` by strictly increasing
/// rewrites: leaf lifts until the graph is a cycle-star, cycle shrinks down
/// to a triangle, then leaf consolidation onto a single vertex.
pub fn maximize_chain(g: &Graph) -> Result<TransformTrace, TransformError> {
    require_unicyclic(g)?;
    let mut current = g.clone();
    let mut steps = Vec::new();
    // phase 1: straighten every pendant tree into direct leaves
    while !is_cycle_star(&current)? {
        let measure_before = depth_sum(&current)?;
        let (next, step) = leaf_lift(&current)?;
        record_step(&mut steps, step, true);
        debug_assert!(depth_sum(&next)? < measure_before, "leaf lift must shrink total depth");
        current = next;
    }
    // phase 2: shrink the cycle to a triangle
    while decompose_unicyclic(&current)?.cycle_len() > 3 {
        let c_before = decompose_unicyclic(&current)?.cycle_len();
        let (next, step) = cycle_shrink(&current)?;
        record_step(&mut steps, step, true);
        debug_assert_eq!(decompose_unicyclic(&next)?.cycle_len(), c_before - 1);
        current = next;
    }
    // phase 3: gather all leaves on one triangle vertex
    loop {
        let decomp = decompose_unicyclic(&current)?;
        if decomp.branching_cycle_vertices(&current).len() < 2 {
            break;
        }
        let measure_before = off_max_leaf_count(&current)?;
        let (next, step) = consolidate_triangle_leaves(&current)?;
        record_step(&mut steps, step, true);
        debug_assert!(off_max_leaf_count(&next)? < measure_before);
        current = next;
    }
    Ok(TransformTrace { initial: g.clone(), steps, final_graph: current })
}

/// Drives any unicyclic graph on `n >= 5` vertices to `CP_{3,n-3}` by
/// strictly decreasing rewrites: subtree straightening until the graph is a
/// cycle-path, branch merging down to one branch, then a single tail
/// extension if the cycle is longer than a triangle.
pub fn minimize_chain(g: &Graph) -> Result<TransformTrace, TransformError> {
    require_unicyclic(g)?;
    match g.vertex_count() {
        4 => return Err(TransformError::MinimizeAtFour),
        n if n < 4 => return Err(TransformError::MinimizeTooSmall(n)),
        _ => {}
    }
    let mut current = g.clone();
    let mut steps = Vec::new();
    // phase 1: each pendant tree becomes a path
    while !is_cycle_path(&current)? {
        let leaves_before = leaf_count(&current);
        let (next, step) = subtree_to_path(&current)?;
        record_step(&mut steps, step, false);
        debug_assert!(leaf_count(&next) < leaves_before, "straightening must drop a leaf");
        current = next;
    }
    // phase 2: merge branches until at most one remains
    loop {
        let decomp = decompose_unicyclic(&current)?;
        let branches = decomp.branching_cycle_vertices(&current).len();
        if branches < 2 {
            break;
        }
        let (next, step) = merge_branches(&current)?;
        record_step(&mut steps, step, false);
        debug_assert!(
            decompose_unicyclic(&next)?.branching_cycle_vertices(&next).len() < branches
        );
        current = next;
    }
    // phase 3: trade any remaining cycle length for tail length
    if decompose_unicyclic(&current)?.cycle_len() > 3 {
        let (next, step) = triangle_tail(&current)?;
        record_step(&mut steps, step, false);
        current = next;
    }
    Ok(TransformTrace { initial: g.clone(), steps, final_graph: current })
}

fn record_step(steps: &mut Vec<TransformStep>, step: TransformStep, increasing: bool) {
    if increasing {
        debug_assert!(step.h_a_after >= step.h_a_before);
    } else {
        debug_assert!(step.h_a_after <= step.h_a_before);
    }
    steps.push(step);
}

// termination measure for leaf lifting: total pendant depth
fn depth_sum(g: &Graph) -> Result<usize, TransformError> {
    let d = decompose_unicyclic(g)?;
    Ok((0..g.vertex_count()).map(|v| d.depth(v)).sum())
}

// termination measure for consolidation: leaves not on the fullest vertex
fn off_max_leaf_count(g: &Graph) -> Result<usize, TransformError> {
    let d = decompose_unicyclic(g)?;
    let per_vertex: Vec<usize> = d
        .cycle()
        .iter()
        .map(|&w| d.children(g, w).len())
        .collect();
    let total: usize = per_vertex.iter().sum();
    Ok(total - per_vertex.iter().max().copied().unwrap_or(0))
}

fn leaf_count(g: &Graph) -> usize {
    (0..g.vertex_count()).filter(|&v| g.degree(v) == 1).count()
}

/// Direction a ledger is oriented in: the entries of a maximize ledger sum
/// to `H_A(after) - H_A(before)`, those of a minimize ledger to
/// `H_A(before) - H_A(after)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Maximize,
    Minimize,
}

/// Exact per-pair contributions of a rewrite to the oriented index
/// difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDeltaLedger {
    pub orientation: Orientation,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl PairDeltaLedger {
    /// Contribution of the unordered pair `{u, v}`, keyed by before-graph
    /// vertex ids.
    pub fn get(&self, u: usize, v: usize) -> Option<&Rational> {
        self.entries.get(&normalize_edge(u, v))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    /// Exact sum of all entries.
    pub fn total(&self) -> Rational {
        let mut acc = Rational::zero();
        for r in self.entries.values() {
            acc += r;
        }
        acc
    }
}

/// Breaks the oriented index difference between two equal-size connected
/// graphs into per-pair contributions. `correspondence[u]` names the
/// after-graph vertex matching before-graph vertex `u`.
pub fn pair_delta_ledger(
    before: &Graph,
    after: &Graph,
    correspondence: &[usize],
    orientation: Orientation,
) -> Result<PairDeltaLedger, TransformError> {
    let n = before.vertex_count();
    if after.vertex_count() != n {
        return Err(TransformError::VertexCountMismatch {
            before: n,
            after: after.vertex_count(),
        });
    }
    let mut seen = vec![false; n];
    if correspondence.len() != n
        || !correspondence
            .iter()
            .all(|&p| p < n && !std::mem::replace(&mut seen[p], true))
    {
        return Err(TransformError::InvalidCorrespondence(n));
    }
    let d_before = before.distances();
    let d_after = after.distances();
    if !d_before.all_finite() || !d_after.all_finite() {
        return Err(TransformError::Disconnected);
    }
    let mut entries = BTreeMap::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let (au, av) = (correspondence[u], correspondence[v]);
            let term_before = Rational::new(
                (before.degree(u) + before.degree(v)) as i64,
                d_before.get(u, v).expect("connected") as i64,
            )
            .expect("distance >= 1");
            let term_after = Rational::new(
                (after.degree(au) + after.degree(av)) as i64,
                d_after.get(au, av).expect("connected") as i64,
            )
            .expect("distance >= 1");
            let delta = match orientation {
                Orientation::Maximize => term_after - term_before,
                Orientation::Minimize => term_before - term_after,
            };
            entries.insert((u, v), delta);
        }
    }
    Ok(PairDeltaLedger { orientation, entries })
}

/// Identity correspondence for rewrites that keep vertex ids.
pub fn identity_correspondence(n: usize) -> Vec<usize> {
    (0..n).collect()
}
