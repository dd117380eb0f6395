//! Rewrites that strictly increase the additively weighted Harary index.

use super::{make_step, TransformError, TransformKind, TransformStep};
use crate::graph::Graph;
use crate::unicyclic::{decompose_unicyclic, is_cycle_star};

/// Moves every leaf of the parent of a deepest leaf one level up.
///
/// Let `z` be a deepest leaf over all pendant trees (taking the lowest-id
/// anchor, then the lowest-id leaf), `y` its parent and `x` its
/// grandparent. Because `z` is deepest, every child of `y` is a leaf; they
/// all re-anchor to `x`, which strictly increases the index. Repeating this
/// turns any unicyclic graph into a cycle-star.
pub fn leaf_lift(g: &Graph) -> Result<(Graph, TransformStep), TransformError> {
    let decomp = decompose_unicyclic(g)?;
    if is_cycle_star(g)? {
        return Err(TransformError::AlreadyCycleStar);
    }
    // lowest-id anchor whose tree is deeper than a star
    let w = *decomp
        .cycle()
        .iter()
        .filter(|&&w| decomp.tree_depth(w) >= 2)
        .min()
        .expect("non-cycle-star has a tree of depth >= 2");
    let deepest = decomp.tree_depth(w);
    let z = (0..g.vertex_count())
        .filter(|&v| decomp.anchor(v) == Some(w) && decomp.depth(v) == deepest)
        .min()
        .expect("tree has a vertex at its max depth");
    let y = decomp.parent(z).expect("depth >= 2 vertex has a parent");
    debug_assert!(decomp.depth(y) >= 1);
    let x = decomp.parent(y).expect("y is off the cycle");
    let moved = decomp.children(g, y);
    debug_assert!(moved.contains(&z));
    debug_assert!(moved.iter().all(|&l| g.degree(l) == 1), "children of y are leaves");

    let removed: Vec<(usize, usize)> = moved.iter().map(|&l| (y, l)).collect();
    let added: Vec<(usize, usize)> = moved.iter().map(|&l| (x, l)).collect();
    let next = rebuild(g, &removed, &added)?;
    make_step(TransformKind::LeafLift, g, &next, removed, added)
}

/// Shortens the cycle of a cycle-star by one: a cycle vertex `w1` hands all
/// its edges except one cycle edge to the neighboring cycle vertex `w0`,
/// becoming a leaf on `w0` itself.
///
/// For an odd cycle the absorbed edge is chosen opposite a minimum-degree
/// cycle vertex; that choice is what makes the index increase. Even cycles
/// need no such care.
pub fn cycle_shrink(g: &Graph) -> Result<(Graph, TransformStep), TransformError> {
    if !is_cycle_star(g)? {
        return Err(TransformError::NotCycleStar);
    }
    let decomp = decompose_unicyclic(g)?;
    let c = decomp.cycle_len();
    if c == 3 {
        return Err(TransformError::CycleAlreadyTriangle);
    }
    let cycle = decomp.cycle();
    let (w0, w1) = if c % 2 == 1 {
        // minimum-degree cycle vertex, lowest id on ties
        let m = *cycle
            .iter()
            .min_by_key(|&&w| (g.degree(w), w))
            .expect("cycle nonempty");
        let pos = decomp.cycle_position(m).expect("m on cycle");
        let d = c / 2;
        let a = cycle[(pos + d) % c];
        let b = cycle[(pos + d + 1) % c];
        // the edge opposite m; lower id becomes the absorbed vertex
        if a < b { (b, a) } else { (a, b) }
    } else {
        let w1 = *cycle.iter().min().expect("cycle nonempty");
        let pos = decomp.cycle_position(w1).expect("w1 on cycle");
        let left = cycle[(pos + c - 1) % c];
        let right = cycle[(pos + 1) % c];
        (left.min(right), w1)
    };

    let moved: Vec<usize> = g.neighbors(w1).iter().copied().filter(|&v| v != w0).collect();
    let removed: Vec<(usize, usize)> = moved.iter().map(|&v| (w1, v)).collect();
    let added: Vec<(usize, usize)> = moved.iter().map(|&v| (w0, v)).collect();
    let next = rebuild(g, &removed, &added)?;
    make_step(TransformKind::CycleShrink, g, &next, removed, added)
}

/// On a triangle cycle-star with at least two branching vertices, moves one
/// leaf from the minimum-degree branching vertex to the maximum-degree one.
pub fn consolidate_triangle_leaves(g: &Graph) -> Result<(Graph, TransformStep), TransformError> {
    if !is_cycle_star(g)? {
        return Err(TransformError::NotCycleStar);
    }
    let decomp = decompose_unicyclic(g)?;
    if decomp.cycle_len() != 3 {
        return Err(TransformError::CycleAlreadyTriangle);
    }
    let branching = decomp.branching_cycle_vertices(g);
    if branching.len() < 2 {
        return Err(TransformError::TooFewBranches { found: branching.len(), need: 2 });
    }
    let donor = *branching
        .iter()
        .min_by_key(|&&w| (g.degree(w), w))
        .expect("at least two branching vertices");
    let receiver = *branching
        .iter()
        .filter(|&&w| w != donor)
        .max_by_key(|&&w| (g.degree(w), std::cmp::Reverse(w)))
        .expect("at least two branching vertices");
    let leaf = *decomp
        .children(g, donor)
        .iter()
        .min()
        .expect("branching triangle vertex has a leaf");

    let removed = vec![(donor, leaf)];
    let added = vec![(receiver, leaf)];
    let next = rebuild(g, &removed, &added)?;
    make_step(TransformKind::ConsolidateTriangleLeaves, g, &next, removed, added)
}

pub(super) fn rebuild(
    g: &Graph,
    removed: &[(usize, usize)],
    added: &[(usize, usize)],
) -> Result<Graph, TransformError> {
    let remove: Vec<(usize, usize)> = removed
        .iter()
        .map(|&(u, v)| super::normalize_edge(u, v))
        .collect();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| !remove.contains(e))
        .collect();
    debug_assert_eq!(edges.len() + remove.len(), g.edge_count());
    edges.extend(added.iter().map(|&(u, v)| super::normalize_edge(u, v)));
    Ok(Graph::from_edges(g.vertex_count(), &edges)?)
}
