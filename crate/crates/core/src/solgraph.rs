//! The solution graph: primitive solutions as nodes, automorph moves as
//! edges.
//!
//! Each component α of a solution pairs with D in the quadratic form
//! value α² − 3D², which the two moves (α, D) → (|2α − 3D|, 2D − α) and
//! (α, D) → (2α + 3D, 2D + α) preserve exactly. Applying a move and
//! re-canonicalizing yields another solution; restricting to primitive
//! solutions with D inside a bound gives a finite undirected graph.

use crate::census::brute_solutions;
use crate::param::Solution;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::fmt::Write as _;

/// Which component of the source solution a move acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Component {
    A,
    B,
    C,
}

impl Component {
    pub const ALL: [Component; 3] = [Component::A, Component::B, Component::C];

    fn index(self) -> usize {
        match self {
            Component::A => 0,
            Component::B => 1,
            Component::C => 2,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::A => "A",
            Component::B => "B",
            Component::C => "C",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Minus,
    Plus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "minus",
            Sign::Plus => "plus",
        })
    }
}

/// A move descriptor as emitted by [`neighbors`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub component: Component,
    pub sign: Sign,
}

/// A move descriptor attached to an undirected edge: `from_a` tells which
/// endpoint the move was applied at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EdgeMove {
    pub from_a: bool,
    pub component: Component,
    pub sign: Sign,
}

/// An undirected edge between node indices `a` < `b`, with every move
/// that generates it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub moves: Vec<EdgeMove>,
}

/// The bounded solution graph plus build diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SolutionGraph {
    pub max_d: i64,
    /// All primitive solutions with D ≤ max_d, sorted by (D, A, B, C).
    pub nodes: Vec<Solution>,
    /// Sorted by (a, b); multi-edges merged with all moves retained.
    pub edges: Vec<Edge>,
    /// Connected-component count — reported as data, asserting nothing.
    pub components: usize,
    pub dropped_non_primitive: u64,
    pub dropped_beyond_bound: u64,
    pub dropped_self_loops: u64,
}

/// Applies one move to one component and re-canonicalizes. `None` marks a
/// zero component (never observed for primitive inputs; kept defensive).
fn apply_move(s: &Solution, mv: Move) -> Result<Option<Solution>> {
    let comps = s.components();
    let alpha = comps[mv.component.index()];
    let d = s.d();
    let (alpha2, d2) = match mv.sign {
        Sign::Minus => ((2 * alpha - 3 * d).abs(), 2 * d - alpha),
        Sign::Plus => (2 * alpha + 3 * d, 2 * d + alpha),
    };
    if alpha2 == 0 {
        return Ok(None);
    }
    let mut tri = [0i64; 3];
    let mut k = 0;
    for (i, &c) in comps.iter().enumerate() {
        if i != mv.component.index() {
            tri[k] = c;
            k += 1;
        }
    }
    tri[2] = alpha2;
    tri.sort_unstable();
    Solution::new(tri[0], tri[1], tri[2], d2).map(Some)
}

/// All moves out of a primitive solution that land on a primitive
/// solution (possibly the same one), in component-major, minus-first
/// order.
pub fn neighbors(s: &Solution) -> Result<Vec<(Solution, Move)>> {
    if !s.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let mut out = Vec::new();
    for component in Component::ALL {
        for sign in [Sign::Minus, Sign::Plus] {
            let mv = Move { component, sign };
            if let Some(t) = apply_move(s, mv)? {
                if t.is_primitive() {
                    out.push((t, mv));
                }
            }
        }
    }
    Ok(out)
}

/// Builds the graph of all primitive solutions with D ≤ max_d.
pub fn build(max_d: i64) -> Result<SolutionGraph> {
    if max_d < 1 {
        return Err(Error::Domain(format!("need a bound ≥ 1, got {max_d}")));
    }
    let mut nodes = Vec::new();
    let mut d = 1;
    while d <= max_d {
        nodes.extend(brute_solutions(d)?);
        d += 2;
    }
    let index: BTreeMap<Solution, usize> =
        nodes.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut edge_map: BTreeMap<(usize, usize), Vec<EdgeMove>> = BTreeMap::new();
    let mut dropped_non_primitive = 0u64;
    let mut dropped_beyond_bound = 0u64;
    let mut dropped_self_loops = 0u64;
    for (i, s) in nodes.iter().enumerate() {
        for component in Component::ALL {
            for sign in [Sign::Minus, Sign::Plus] {
                let mv = Move { component, sign };
                let t = match apply_move(s, mv)? {
                    Some(t) if t.is_primitive() => t,
                    _ => {
                        dropped_non_primitive += 1;
                        continue;
                    }
                };
                if t == *s {
                    dropped_self_loops += 1;
                    continue;
                }
                if t.d() > max_d {
                    dropped_beyond_bound += 1;
                    continue;
                }
                let j = *index
                    .get(&t)
                    .expect("every primitive solution within the bound is a node");
                let (a, b, from_a) = if i < j { (i, j, true) } else { (j, i, false) };
                edge_map.entry((a, b)).or_default().push(EdgeMove {
                    from_a,
                    component,
                    sign,
                });
            }
        }
    }
    let edges: Vec<Edge> = edge_map
        .into_iter()
        .map(|((a, b), mut moves)| {
            moves.sort_unstable();
            moves.dedup();
            Edge { a, b, moves }
        })
        .collect();
    let mut adjacency = vec![Vec::new(); nodes.len()];
    for e in &edges {
        adjacency[e.a].push(e.b);
        adjacency[e.b].push(e.a);
    }
    let mut seen = vec![false; nodes.len()];
    let mut components = 0;
    for start in 0..nodes.len() {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(SolutionGraph {
        max_d,
        nodes,
        edges,
        components,
        dropped_non_primitive,
        dropped_beyond_bound,
        dropped_self_loops,
    })
}

impl SolutionGraph {
    /// DOT rendering with stable ordering: byte-identical across runs.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph solutions {\n");
        for (i, s) in self.nodes.iter().enumerate() {
            let [a, b, c] = s.components();
            let _ = writeln!(out, "  n{i} [label=\"{a},{b},{c}|{}\"];", s.d());
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -- n{};", e.a, e.b);
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(a: i64, b: i64, c: i64, d: i64) -> Solution {
        Solution::new(a, b, c, d).unwrap()
    }

    #[test]
    fn neighbors_of_the_smallest_solutions() {
        let n: Vec<(Solution, Move)> = neighbors(&sol(1, 1, 5, 3)).unwrap();
        let targets: Vec<Solution> = n.iter().map(|(t, _)| *t).collect();
        assert_eq!(
            targets,
            vec![
                sol(1, 5, 7, 5),
                sol(1, 5, 11, 7),
                sol(1, 5, 7, 5),
                sol(1, 5, 11, 7),
                sol(1, 1, 1, 1),
                sol(1, 1, 19, 11),
            ]
        );
        // The degenerate node's minus-moves are self-moves.
        let n = neighbors(&sol(1, 1, 1, 1)).unwrap();
        assert_eq!(n.len(), 6);
        assert_eq!(
            n.iter().filter(|(t, _)| *t == sol(1, 1, 1, 1)).count(),
            3
        );
        assert!(matches!(
            neighbors(&sol(2, 2, 2, 2)),
            Err(Error::NotPrimitive)
        ));
    }

    #[test]
    fn moves_are_mutually_inverse() {
        // Plus followed by minus on the moved value always returns the
        // original (α, D) pair.
        for s in [sol(1, 1, 5, 3), sol(5, 17, 83, 49), sol(1, 11, 11, 9)] {
            for alpha in s.components() {
                let d = s.d();
                let (a2, d2) = (2 * alpha + 3 * d, 2 * d + alpha);
                assert_eq!(((2 * a2 - 3 * d2).abs(), 2 * d2 - a2), (alpha, d));
            }
        }
    }

    #[test]
    fn build_graph_to_d11() {
        let g = build(11).unwrap();
        assert_eq!(
            g.nodes,
            vec![
                sol(1, 1, 1, 1),
                sol(1, 1, 5, 3),
                sol(1, 5, 7, 5),
                sol(1, 5, 11, 7),
                sol(1, 11, 11, 9),
                sol(5, 7, 13, 9),
                sol(1, 1, 19, 11),
                sol(5, 7, 17, 11),
                sol(5, 13, 13, 11),
            ]
        );
        let endpoints: Vec<(usize, usize)> = g.edges.iter().map(|e| (e.a, e.b)).collect();
        assert_eq!(
            endpoints,
            vec![
                (0, 1),
                (1, 2),
                (1, 3),
                (1, 6),
                (2, 5),
                (2, 7),
                (3, 4),
                (5, 8),
            ]
        );
        assert_eq!(g.components, 1);
        assert_eq!(g.dropped_non_primitive, 0);
        assert_eq!(g.dropped_beyond_bound, 28);
        assert_eq!(g.dropped_self_loops, 4);
        // The (1,1,1;1)–(1,1,5;3) edge is generated by all three plus
        // moves on one side and the C-minus move on the other.
        assert_eq!(g.edges[0].moves.len(), 4);
        assert!(g.edges[0].moves.contains(&EdgeMove {
            from_a: true,
            component: Component::A,
            sign: Sign::Plus
        }));
    }

    #[test]
    fn build_trivial_graph() {
        let g = build(1).unwrap();
        assert_eq!(g.nodes, vec![sol(1, 1, 1, 1)]);
        assert_eq!(g.edges, Vec::new());
        assert_eq!(g.components, 1);
        assert_eq!(g.dropped_self_loops, 3);
        assert_eq!(g.dropped_beyond_bound, 3);
        assert!(build(0).is_err());
    }

    #[test]
    fn edges_preserve_the_form_value() {
        let g = build(31).unwrap();
        for e in &g.edges {
            for mv in &e.moves {
                let (src, dst) = if mv.from_a {
                    (&g.nodes[e.a], &g.nodes[e.b])
                } else {
                    (&g.nodes[e.b], &g.nodes[e.a])
                };
                let alpha = src.components()[mv.component.index()];
                let d = src.d();
                let (a2, d2) = match mv.sign {
                    Sign::Minus => ((2 * alpha - 3 * d).abs(), 2 * d - alpha),
                    Sign::Plus => (2 * alpha + 3 * d, 2 * d + alpha),
                };
                assert_eq!(
                    alpha * alpha - 3 * d * d,
                    a2 * a2 - 3 * d2 * d2,
                    "form value on edge ({}, {})",
                    e.a,
                    e.b
                );
                assert_eq!(d2, dst.d());
                assert!(dst.components().contains(&a2));
            }
        }
    }

    #[test]
    fn dot_output_is_stable_and_exact() {
        let g = build(3).unwrap();
        assert_eq!(
            g.to_dot(),
            "graph solutions {\n  n0 [label=\"1,1,1|1\"];\n  n1 [label=\"1,1,5|3\"];\n  n0 -- n1;\n}\n"
        );
        let again = build(3).unwrap();
        assert_eq!(g.to_dot(), again.to_dot());
        let big = build(11).unwrap();
        assert_eq!(big.to_dot(), build(11).unwrap().to_dot());
    }
}
