//! Decomposition of a unicyclic graph into its cycle and pendant forest.

use crate::graph::{classify, Graph, GraphClass, GraphError};

/// The unique cycle of a unicyclic graph plus, for every vertex off the
/// cycle, its tree position: the cycle vertex its pendant tree hangs from
/// (`anchor`), its neighbor toward the cycle (`parent`) and its distance
/// from the anchor (`depth`).
///
/// The cycle is reported in one fixed rotation: it starts at the
/// smallest-id cycle vertex and proceeds toward that vertex's smallest-id
/// cycle neighbor, so the decomposition of a given graph is always
/// identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicDecomposition {
    cycle: Vec<usize>,
    cycle_position: Vec<Option<usize>>,
    anchor: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
}

impl UnicyclicDecomposition {
    /// Cycle vertices in rotation order `w_0 .. w_{c-1}`.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_on_cycle(&self, v: usize) -> bool {
        self.cycle_position[v].is_some()
    }

    /// Index of `v` within [`Self::cycle`], if it lies on the cycle.
    pub fn cycle_position(&self, v: usize) -> Option<usize> {
        self.cycle_position[v]
    }

    /// The cycle vertex whose pendant tree contains `v`; `None` on the cycle.
    pub fn anchor(&self, v: usize) -> Option<usize> {
        self.anchor[v]
    }

    /// Neighbor of `v` one step toward the cycle; `None` on the cycle.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Distance from `v` to its anchor; 0 on the cycle.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Hop distance between two cycle vertices measured along the cycle.
    pub fn cycle_distance(&self, u: usize, v: usize) -> usize {
        let c = self.cycle_len();
        let pu = self.cycle_position[u].expect("u on cycle");
        let pv = self.cycle_position[v].expect("v on cycle");
        let gap = pu.abs_diff(pv);
        gap.min(c - gap)
    }

    /// Neighbors of `v` pointing away from the cycle.
    pub fn children(&self, g: &Graph, v: usize) -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.parent[u] == Some(v))
            .collect()
    }

    /// Cycle vertices of degree at least 3, in cycle rotation order.
    pub fn branching_cycle_vertices(&self, g: &Graph) -> Vec<usize> {
        self.cycle
            .iter()
            .copied()
            .filter(|&w| g.degree(w) >= 3)
            .collect()
    }

    /// Largest pendant-tree depth below cycle vertex `w`.
    pub fn tree_depth(&self, w: usize) -> usize {
        self.depth
            .iter()
            .enumerate()
            .filter(|&(v, _)| self.anchor[v] == Some(w))
            .map(|(_, &d)| d)
            .max()
            .unwrap_or(0)
    }
}

/// Extracts the cycle by repeatedly pruning degree-1 vertices, then assigns
/// every pruned vertex its anchor, parent and depth.
pub fn decompose_unicyclic(g: &Graph) -> Result<UnicyclicDecomposition, GraphError> {
    if classify(g) != GraphClass::Unicyclic {
        return Err(GraphError::NotUnicyclic);
    }
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for &u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }

    // The 2-regular core, walked from its smallest vertex toward its
    // smaller-id core neighbor.
    let start = (0..n).find(|&v| !removed[v]).expect("unicyclic graph has a cycle");
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *g
        .neighbors(start)
        .iter()
        .find(|&&u| !removed[u])
        .expect("cycle vertex has a core neighbor");
    while cur != start {
        cycle.push(cur);
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&u| !removed[u] && u != prev)
            .expect("core is 2-regular");
        prev = cur;
        cur = next;
    }
    debug_assert!(cycle.len() >= 3);

    let mut cycle_position = vec![None; n];
    for (i, &w) in cycle.iter().enumerate() {
        cycle_position[w] = Some(i);
    }

    // BFS outward from the cycle fills anchor/parent/depth for the forest.
    let mut anchor = vec![None; n];
    let mut parent = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut queue: std::collections::VecDeque<usize> = cycle.iter().copied().collect();
    let mut seen = vec![false; n];
    for &w in &cycle {
        seen[w] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some(u);
                anchor[v] = Some(if cycle_position[u].is_some() { u } else { anchor[u].unwrap() });
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
        }
    }

    Ok(UnicyclicDecomposition {
        cycle,
        cycle_position,
        anchor,
        parent,
        depth,
    })
}

/// True iff every vertex off the cycle is a leaf hanging directly on the
/// cycle. A pure cycle qualifies.
pub fn is_cycle_star(g: &Graph) -> Result<bool, GraphError> {
    let d = decompose_unicyclic(g)?;
    Ok((0..g.vertex_count()).all(|v| d.is_on_cycle(v) || d.depth(v) == 1))
}

/// True iff each cycle vertex carries at most one pendant path, attached by
/// one end. A pure cycle qualifies.
pub fn is_cycle_path(g: &Graph) -> Result<bool, GraphError> {
    let d = decompose_unicyclic(g)?;
    Ok((0..g.vertex_count()).all(|v| {
        if d.is_on_cycle(v) {
            g.degree(v) <= 3
        } else {
            g.degree(v) <= 2
        }
    }))
}
