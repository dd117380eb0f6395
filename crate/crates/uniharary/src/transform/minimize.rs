//! Rewrites that strictly decrease the additively weighted Harary index.

use super::maximize::rebuild;
use super::{make_step, MergeCase, TransformError, TransformKind, TransformStep};
use crate::graph::Graph;
use crate::unicyclic::{decompose_unicyclic, is_cycle_path, UnicyclicDecomposition};

/// Straightens the deepest branching point of the pendant forest.
///
/// Take the vertex `x` with at least two maximal pendant paths hanging off
/// it, farthest from its anchor (lowest id on ties); everything beyond `x`
/// consists of disjoint paths. The longest path `P_1` stays; the first
/// vertex of each other path re-attaches behind the far end `z_1` of `P_1`.
/// The leaf count drops by one per application, reaching a cycle-path graph
/// in finitely many steps.
pub fn subtree_to_path(g: &Graph) -> Result<(Graph, TransformStep), TransformError> {
    let decomp = decompose_unicyclic(g)?;
    if is_cycle_path(g)? {
        return Err(TransformError::AlreadyCyclePath);
    }
    // a vertex with >= 2 pendant paths beyond it: off-cycle with degree >= 3,
    // or on-cycle with degree >= 4
    let x = (0..g.vertex_count())
        .filter(|&v| {
            if decomp.is_on_cycle(v) {
                g.degree(v) >= 4
            } else {
                g.degree(v) >= 3
            }
        })
        .max_by_key(|&v| (decomp.depth(v), std::cmp::Reverse(v)))
        .expect("non-cycle-path graph has a branching tree vertex");

    let mut paths: Vec<Vec<usize>> = decomp
        .children(g, x)
        .into_iter()
        .map(|head| walk_path(g, &decomp, x, head))
        .collect();
    debug_assert!(paths.len() >= 2);
    // longest first, lowest head id on ties
    paths.sort_by_key(|p| (std::cmp::Reverse(p.len()), p[0]));
    let z1 = *paths[0].last().expect("paths are nonempty");

    let removed: Vec<(usize, usize)> = paths[1..].iter().map(|p| (x, p[0])).collect();
    let added: Vec<(usize, usize)> = paths[1..].iter().map(|p| (z1, p[0])).collect();
    let next = rebuild(g, &removed, &added)?;
    make_step(TransformKind::SubtreeToPath, g, &next, removed, added)
}

// the maximal path starting at `head`, walking away from `from`
fn walk_path(
    g: &Graph,
    decomp: &UnicyclicDecomposition,
    from: usize,
    head: usize,
) -> Vec<usize> {
    let mut path = vec![head];
    let mut cur = head;
    loop {
        let children = decomp.children(g, cur);
        debug_assert!(children.len() <= 1, "beyond the deepest branching vertex lie paths");
        match children.first() {
            Some(&next) => {
                path.push(next);
                cur = next;
            }
            None => break,
        }
    }
    debug_assert_ne!(path[0], from);
    path
}

/// A branching cycle vertex with its pendant path (tail) in root-to-leaf
/// order.
struct Branch {
    vertex: usize,
    position: usize,
    tail: Vec<usize>,
}

impl Branch {
    fn len(&self) -> usize {
        self.tail.len()
    }

    fn first(&self) -> usize {
        self.tail[0]
    }

    fn last(&self) -> usize {
        *self.tail.last().expect("branching vertex has a nonempty tail")
    }
}

/// Reduces the number of branches of a cycle-path graph by one merge.
///
/// Dispatch, in order:
/// 1. some consecutive branching pair sits within reach of the longer of
///    the two tails: move the shorter-side tail behind that longer tail;
/// 2. otherwise with four or more branches, fold the closest pair into the
///    cycle by a double edge swap that absorbs both tails up to the shorter
///    length;
/// 3. otherwise with exactly three branches, move the middle tail behind
///    the shorter tail of the most distant pair;
/// 4. otherwise (two branches), move the higher-id vertex's tail behind the
///    other tail.
pub fn merge_branches(g: &Graph) -> Result<(Graph, TransformStep), TransformError> {
    if !is_cycle_path(g)? {
        return Err(TransformError::NotCyclePath);
    }
    let decomp = decompose_unicyclic(g)?;
    let c = decomp.cycle_len();
    let branches: Vec<Branch> = decomp
        .branching_cycle_vertices(g)
        .into_iter()
        .map(|w| {
            let head = decomp.children(g, w)[0];
            Branch {
                vertex: w,
                position: decomp.cycle_position(w).expect("branching vertex on cycle"),
                tail: walk_path(g, &decomp, w, head),
            }
        })
        .collect();
    if branches.len() < 2 {
        return Err(TransformError::TooFewBranches { found: branches.len(), need: 2 });
    }

    let cycle_dist = |a: &Branch, b: &Branch| {
        let gap = a.position.abs_diff(b.position);
        gap.min(c - gap)
    };

    // consecutive pairs in cyclic order of positions (branches are already
    // position-sorted because the cycle vector is walked in order)
    let k = branches.len();
    let consecutive: Vec<(usize, usize)> = if k == 2 {
        vec![(0, 1)]
    } else {
        (0..k).map(|i| (i, (i + 1) % k)).collect()
    };

    // case 1: a tail long enough to cover the cycle distance to its neighbor
    let mut reachable: Vec<(usize, usize)> = Vec::new();
    for &(i, j) in &consecutive {
        let (a, b) = (&branches[i], &branches[j]);
        if cycle_dist(a, b) <= a.len().max(b.len()) {
            // the receiver holds the longer tail, lowest id on ties
            let key = |br: &Branch| (std::cmp::Reverse(br.len()), br.vertex);
            let (recv, donor) = if key(a) <= key(b) { (i, j) } else { (j, i) };
            reachable.push((recv, donor));
        }
    }
    if let Some(&(recv, donor)) = reachable
        .iter()
        .min_by_key(|&&(r, d)| (branches[r].vertex, branches[d].vertex))
    {
        return append_tail(
            g,
            &branches[recv],
            &branches[donor],
            MergeCase::ReachablePair,
        );
    }

    if k >= 4 {
        // case 2: closest pair folds into the cycle
        let &(i, j) = consecutive
            .iter()
            .min_by_key(|&&(i, j)| {
                let (a, b) = (&branches[i], &branches[j]);
                (cycle_dist(a, b), a.vertex.min(b.vertex), a.vertex.max(b.vertex))
            })
            .expect("at least four consecutive pairs");
        // the longer tail keeps a pendant remainder; lowest id on ties
        let key = |t: usize| (std::cmp::Reverse(branches[t].len()), branches[t].vertex);
        let (long, short) = if key(i) <= key(j) { (i, j) } else { (j, i) };
        return cycle_absorb(g, &decomp, &branches[long], &branches[short]);
    }

    if k == 3 {
        // case 3: most distant pair, middle tail moves behind the shorter end
        let mut far_pair = (0, 1);
        let mut far_dist = 0;
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let d = cycle_dist(&branches[i], &branches[j]);
            if d > far_dist {
                far_dist = d;
                far_pair = (i, j);
            }
        }
        let (i, j) = far_pair;
        let recv = if (branches[i].len(), branches[i].vertex)
            <= (branches[j].len(), branches[j].vertex)
        {
            i
        } else {
            j
        };
        let middle = (0..3).find(|&t| t != i && t != j).expect("three branches");
        return append_tail(
            g,
            &branches[recv],
            &branches[middle],
            MergeCase::ThreeBranches,
        );
    }

    // case 4: exactly two branches, receiver is the lower-id vertex
    append_tail(g, &branches[0], &branches[1], MergeCase::TwoBranches)
}

// detach `donor`'s whole tail and hang it behind the end of `recv`'s tail
fn append_tail(
    g: &Graph,
    recv: &Branch,
    donor: &Branch,
    case: MergeCase,
) -> Result<(Graph, TransformStep), TransformError> {
    let removed = vec![(donor.vertex, donor.first())];
    let added = vec![(recv.last(), donor.first())];
    let next = rebuild(g, &removed, &added)?;
    make_step(TransformKind::MergeBranches(case), g, &next, removed, added)
}

// double swap: the arc between the closest branching pair detours through
// both tails, absorbing 2 * len(short) pendant vertices into the cycle
fn cycle_absorb(
    g: &Graph,
    decomp: &UnicyclicDecomposition,
    long: &Branch,
    short: &Branch,
) -> Result<(Graph, TransformStep), TransformError> {
    let c = decomp.cycle_len();
    let cycle = decomp.cycle();
    let gap = long.position.abs_diff(short.position);
    let dist = gap.min(c - gap);
    debug_assert!(dist > long.len().max(short.len()), "closest pair still satisfies the far condition");
    debug_assert!(
        2 * short.len() + dist < 3 * (c / 4),
        "absorbed detour stays on the short side of the cycle"
    );

    // walk from the long branch toward the short one along their short arc
    let step_forward = (long.position + dist) % c == short.position;
    let offset = |s: usize| {
        if step_forward {
            (long.position + s) % c
        } else {
            (long.position + c - s) % c
        }
    };
    let after_long = cycle[offset(1)];
    let before_short = cycle[offset(dist - 1)];
    debug_assert_ne!(after_long, short.vertex);
    debug_assert_ne!(before_short, long.vertex);

    let p_short = short.len();
    let absorb_end_long = long.tail[p_short - 1];
    let removed = vec![
        (long.vertex, after_long),
        (before_short, short.vertex),
    ];
    let added = vec![
        (absorb_end_long, after_long),
        (before_short, short.last()),
    ];
    let next = rebuild(g, &removed, &added)?;
    make_step(
        TransformKind::MergeBranches(MergeCase::CycleAbsorb),
        g,
        &next,
        removed,
        added,
    )
}

/// Rewires a single-branch cycle-path (or pure cycle) with cycle length at
/// least 4 into `CP_{3,n-3}` in one step: the cycle edge on the far side of
/// the branch is replaced by a chord three vertices in, so all remaining
/// cycle vertices feed the tail.
pub fn triangle_tail(g: &Graph) -> Result<(Graph, TransformStep), TransformError> {
    if !is_cycle_path(g)? {
        return Err(TransformError::NotCyclePath);
    }
    let decomp = decompose_unicyclic(g)?;
    let branching = decomp.branching_cycle_vertices(g);
    if branching.len() > 1 {
        return Err(TransformError::NotSingleBranch);
    }
    let k = decomp.cycle_len();
    if k == 3 {
        return Err(TransformError::CycleAlreadyTriangle);
    }
    match g.vertex_count() {
        4 => return Err(TransformError::MinimizeAtFour),
        n if n < 4 => return Err(TransformError::MinimizeTooSmall(n)),
        _ => {}
    }
    let cycle = decomp.cycle();
    // w_last is the branching vertex when present; w_0 its lower-id cycle
    // neighbor; the walk proceeds away from w_last
    let (w0, w_last) = match branching.first() {
        Some(&b) => {
            let pos = decomp.cycle_position(b).expect("branching on cycle");
            let left = cycle[(pos + k - 1) % k];
            let right = cycle[(pos + 1) % k];
            (left.min(right), b)
        }
        None => {
            let w0 = cycle[0];
            let nbrs = [cycle[1], cycle[k - 1]];
            (w0, nbrs[0].max(nbrs[1]))
        }
    };
    let pos0 = decomp.cycle_position(w0).expect("w0 on cycle");
    let pos_last = decomp.cycle_position(w_last).expect("w_last on cycle");
    let step_forward = (pos_last + 1) % k == pos0;
    let w2 = if step_forward {
        cycle[(pos0 + 2) % k]
    } else {
        cycle[(pos0 + k - 2) % k]
    };

    let removed = vec![(w0, w_last)];
    let added = vec![(w0, w2)];
    let next = rebuild(g, &removed, &added)?;
    make_step(TransformKind::TriangleTail, g, &next, removed, added)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_cp, make_cs, make_cycle, make_cycle_path, make_cycle_star};
    use crate::graph::Graph;
    use crate::indices::{additively_weighted_harary, cp3_closed_form};
    use crate::rational::Rational;
    use crate::unicyclic::is_cycle_path;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn h_a(g: &Graph) -> Rational {
        additively_weighted_harary(g).unwrap()
    }

    #[test]
    fn subtree_to_path_two_leaves() {
        // triangle + vertex 3 on 2 with two leaves 4, 5: one step gives CP_{3,3}
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        let (next, step) = subtree_to_path(&g).unwrap();
        assert!(step.h_a_after < step.h_a_before);
        assert!(is_cycle_path(&next).unwrap());
        assert_eq!(step.edges_removed, vec![(3, 5)]);
        assert_eq!(step.edges_added, vec![(4, 5)]);
        assert_eq!(h_a(&next), cp3_closed_form(6).unwrap());
    }

    #[test]
    fn subtree_to_path_iterates_on_cs33() {
        let cs33 = make_cs(3, 3).unwrap();
        let (mid, step1) = subtree_to_path(&cs33).unwrap();
        // first step leaves a two-leaf caterpillar
        assert_eq!(step1.edges_removed.len(), 2);
        assert!(!is_cycle_path(&mid).unwrap());
        let (fin, step2) = subtree_to_path(&mid).unwrap();
        assert!(is_cycle_path(&fin).unwrap());
        assert!(step2.h_a_after < step2.h_a_before);
        assert_eq!(h_a(&fin), cp3_closed_form(6).unwrap());
    }

    #[test]
    fn subtree_to_path_rejects_cycle_path() {
        let cp = make_cp(4, 2).unwrap();
        assert_eq!(subtree_to_path(&cp), Err(TransformError::AlreadyCyclePath));
    }

    #[test]
    fn merge_reachable_pair() {
        // triangle with a leaf on vertex 0 and a leaf on vertex 1,
        // cycle distance 1 <= tail length 1: 95/3 -> 30
        let g = make_cycle_star(3, &[1, 1, 0]).unwrap();
        assert_eq!(h_a(&g), q(95, 3));
        let (next, step) = merge_branches(&g).unwrap();
        assert_eq!(step.kind, TransformKind::MergeBranches(MergeCase::ReachablePair));
        assert_eq!(step.h_a_after, q(30, 1));
        assert_eq!(h_a(&next), cp3_closed_form(5).unwrap());
    }

    #[test]
    fn merge_two_branches_across_c4() {
        // C_4 with leaves on opposite vertices: distance 2 > both tails
        let g = make_cycle_star(4, &[1, 0, 1, 0]).unwrap();
        let (next, step) = merge_branches(&g).unwrap();
        assert_eq!(step.kind, TransformKind::MergeBranches(MergeCase::TwoBranches));
        assert!(step.h_a_after < step.h_a_before);
        // pendant path of length 2 now hangs on vertex 0
        let d = decompose_unicyclic(&next).unwrap();
        assert_eq!(d.cycle_len(), 4);
        assert_eq!(d.branching_cycle_vertices(&next), vec![0]);
        assert_eq!(d.tree_depth(0), 2);
    }

    #[test]
    fn merge_cycle_absorb_on_c12() {
        // C_12 with single leaves on positions 0, 3, 6, 9: every consecutive
        // distance is 3 > 1, four branches, so the double swap fires
        let mut counts = vec![0usize; 12];
        for p in [0, 3, 6, 9] {
            counts[p] = 1;
        }
        let g = make_cycle_star(12, &counts).unwrap();
        let before_branches = 4;
        let (next, step) = merge_branches(&g).unwrap();
        assert_eq!(step.kind, TransformKind::MergeBranches(MergeCase::CycleAbsorb));
        assert!(step.h_a_after < step.h_a_before);
        assert_eq!(step.edges_removed.len(), 2);
        assert_eq!(step.edges_added.len(), 2);
        let d = decompose_unicyclic(&next).unwrap();
        // both unit tails are absorbed: cycle grows by 2, branches drop to 2
        assert_eq!(d.cycle_len(), 14);
        assert!(d.branching_cycle_vertices(&next).len() < before_branches);
        assert!(is_cycle_path(&next).unwrap());
    }

    #[test]
    fn merge_three_branches() {
        // C_9 with single leaves on positions 0, 3, 6: distances all 3 > 1
        let mut counts = vec![0usize; 9];
        for p in [0, 3, 6] {
            counts[p] = 1;
        }
        let g = make_cycle_star(9, &counts).unwrap();
        let (next, step) = merge_branches(&g).unwrap();
        assert_eq!(step.kind, TransformKind::MergeBranches(MergeCase::ThreeBranches));
        assert!(step.h_a_after < step.h_a_before);
        let d = decompose_unicyclic(&next).unwrap();
        assert_eq!(d.branching_cycle_vertices(&next).len(), 2);
    }

    #[test]
    fn merge_rejects_single_branch() {
        let cp = make_cp(4, 2).unwrap();
        assert_eq!(
            merge_branches(&cp),
            Err(TransformError::TooFewBranches { found: 1, need: 2 })
        );
        let cs = make_cs(3, 2).unwrap();
        assert_eq!(merge_branches(&cs), Err(TransformError::NotCyclePath));
    }

    #[test]
    fn triangle_tail_reference_steps() {
        // CP_{4,1} -> CP_{3,2}: 61/2 -> 30
        let cp41 = make_cp(4, 1).unwrap();
        assert_eq!(h_a(&cp41), q(61, 2));
        let (next, step) = triangle_tail(&cp41).unwrap();
        assert_eq!(step.h_a_after, q(30, 1));
        assert_eq!(h_a(&next), cp3_closed_form(5).unwrap());

        // C_6 -> CP_{3,3}: 40 -> 79/2
        let c6 = make_cycle(6).unwrap();
        let (next, step) = triangle_tail(&c6).unwrap();
        assert_eq!(step.h_a_before, q(40, 1));
        assert_eq!(step.h_a_after, q(79, 2));
        let d = decompose_unicyclic(&next).unwrap();
        assert_eq!(d.cycle_len(), 3);
        assert_eq!(d.tree_depth(d.branching_cycle_vertices(&next)[0]), 3);
    }

    #[test]
    fn triangle_tail_preconditions() {
        let c4 = make_cycle(4).unwrap();
        assert_eq!(triangle_tail(&c4), Err(TransformError::MinimizeAtFour));
        let cp32 = make_cp(3, 2).unwrap();
        assert_eq!(triangle_tail(&cp32), Err(TransformError::CycleAlreadyTriangle));
        let two = make_cycle_path(4, &[1, 0, 1, 0]).unwrap();
        assert_eq!(triangle_tail(&two), Err(TransformError::NotSingleBranch));
    }
}
