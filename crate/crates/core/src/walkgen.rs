//! Generators of the automorphism group read off walks in the symmetry type
//! graph.
//!
//! A minimal spanning walk from vertex 0 fixes a spanning tree (the edges
//! along which each vertex is first reached). Every edge off the tree and
//! every semi-edge closes a walk at vertex 0; applied to flag 0, the colour
//! word of each such walk lands in the orbit of flag 0 and so names one
//! automorphism. Together they generate the whole group.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::flagcore::FlagGraph;
use crate::stg::SymmetryTypeGraph;
use crate::symmetry::{AutGroup, Automorphism};
use crate::{Colour, Flag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("walk does not visit vertex {0}")]
    NotSpanning(usize),
    #[error("walk does not start at vertex 0")]
    WrongStart,
    #[error("walk {walk} is not closed at the base orbit")]
    NotClosed { walk: usize },
    #[error("no automorphism maps the base flag to flag {0}")]
    NoAutomorphism(Flag),
}

/// One step along an edge or semi-edge. `from == to` for a semi-edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Step {
    pub colour: Colour,
    pub from: usize,
    pub to: usize,
}

impl Step {
    pub fn is_semi(&self) -> bool {
        self.from == self.to
    }

    pub fn reversed(&self) -> Step {
        Step { colour: self.colour, from: self.to, to: self.from }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Walk {
    pub start: usize,
    pub steps: Vec<Step>,
}

impl Walk {
    pub fn empty(start: usize) -> Self {
        Walk { start, steps: Vec::new() }
    }

    pub fn end(&self) -> usize {
        self.steps.last().map_or(self.start, |s| s.to)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.end() == self.start
    }

    pub fn word(&self) -> Vec<Colour> {
        self.steps.iter().map(|s| s.colour).collect()
    }

    pub fn reversed(&self) -> Walk {
        Walk {
            start: self.end(),
            steps: self.steps.iter().rev().map(Step::reversed).collect(),
        }
    }

    fn then(mut self, other: &Walk) -> Walk {
        debug_assert_eq!(self.end(), other.start);
        self.steps.extend_from_slice(&other.steps);
        self
    }

    /// True iff every step follows a slot of `t` and no (semi-)edge is
    /// traversed twice in a row.
    pub fn is_valid_in(&self, t: &SymmetryTypeGraph) -> bool {
        let mut at = self.start;
        for (k, s) in self.steps.iter().enumerate() {
            if s.from != at || t.neighbour(s.from, s.colour) != s.to {
                return false;
            }
            if k > 0 && self.steps[k - 1].colour == s.colour {
                return false;
            }
            at = s.to;
        }
        true
    }
}

/// Comma-separated colour word, e.g. `2,0,2`.
pub fn format_word(word: &[Colour]) -> String {
    word.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// A shortest walk from vertex 0 visiting every vertex, lexicographically
/// least in its colour sequence among all shortest ones.
pub fn min_spanning_walk(t: &SymmetryTypeGraph) -> Walk {
    let k = t.vertex_count();
    assert!(k <= 24, "spanning walk search is limited to 24 vertices");
    let full = (1usize << k) - 1;
    let states = k << k;
    let key = |v: usize, mask: usize| mask * k + v;
    let mut parent: Vec<Option<(usize, Colour)>> = vec![None; states];
    let mut seen = vec![false; states];
    let start = key(0, 1);
    seen[start] = true;
    let mut queue = VecDeque::from([(0usize, 1usize)]);
    let mut goal = (full == 1).then_some((0, 1));
    while goal.is_none() {
        let Some((v, mask)) = queue.pop_front() else { break };
        for c in 0..t.n_colours() {
            let w = t.neighbour(v, c);
            if w == v {
                continue;
            }
            let m = mask | 1 << w;
            let s = key(w, m);
            if !seen[s] {
                seen[s] = true;
                parent[s] = Some((key(v, mask), c));
                if m == full {
                    goal = Some((w, m));
                    break;
                }
                queue.push_back((w, m));
            }
        }
    }
    let (mut v, mut mask) = goal.expect("symmetry type graphs are connected");
    let mut steps = Vec::new();
    while let Some((prev, c)) = parent[key(v, mask)] {
        let (pv, pm) = (prev % k, prev / k);
        steps.push(Step { colour: c, from: pv, to: v });
        v = pv;
        mask = pm;
    }
    steps.reverse();
    Walk { start: 0, steps }
}

/// The spanning tree of a walk: the edge along which each vertex is first
/// reached, the visiting order, and each vertex's tree path from the start.
struct Tree {
    visit: Vec<usize>,
    path: Vec<Walk>,
    edges: Vec<(usize, usize, Colour)>,
}

fn tree_of(t: &SymmetryTypeGraph, c: &Walk) -> Result<Tree, WalkError> {
    if c.start != 0 {
        return Err(WalkError::WrongStart);
    }
    let k = t.vertex_count();
    let mut visit = vec![usize::MAX; k];
    let mut path: Vec<Option<Walk>> = vec![None; k];
    let mut edges = Vec::new();
    visit[0] = 0;
    path[0] = Some(Walk::empty(0));
    let mut order = 1;
    for s in &c.steps {
        if visit[s.to] == usize::MAX {
            visit[s.to] = order;
            order += 1;
            let p = path[s.from].clone().expect("walk is contiguous");
            path[s.to] = Some(p.then(&Walk { start: s.from, steps: vec![*s] }));
            edges.push((s.from.min(s.to), s.from.max(s.to), s.colour));
        }
    }
    if let Some(v) = visit.iter().position(|&x| x == usize::MAX) {
        return Err(WalkError::NotSpanning(v));
    }
    Ok(Tree { visit, path: path.into_iter().map(Option::unwrap).collect(), edges })
}

/// The closed walks `W_e` (one per edge off the spanning tree) followed by
/// `W_s` (one per semi-edge), each sorted by the visiting order of their
/// endpoints, then colour.
pub fn generating_walks(t: &SymmetryTypeGraph, c: &Walk) -> Result<Vec<Walk>, WalkError> {
    let tree = tree_of(t, c)?;
    let mut we = Vec::new();
    for (u, v, colour) in t.edges() {
        if tree.edges.contains(&(u, v, colour)) {
            continue;
        }
        let (a, b) = if tree.visit[u] <= tree.visit[v] { (u, v) } else { (v, u) };
        we.push(((tree.visit[a], tree.visit[b], colour), a, b));
    }
    we.sort_unstable();
    let mut ws: Vec<_> = t.semi_edges().into_iter().map(|(u, colour)| ((tree.visit[u], colour), u)).collect();
    ws.sort_unstable();

    let closed = |a: usize, b: usize, colour: Colour| {
        tree.path[a]
            .clone()
            .then(&Walk { start: a, steps: vec![Step { colour, from: a, to: b }] })
            .then(&tree.path[b].reversed())
    };
    let mut out: Vec<Walk> = we.into_iter().map(|((_, _, colour), a, b)| closed(a, b, colour)).collect();
    out.extend(ws.into_iter().map(|((_, colour), u)| closed(u, u, colour)));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    pub base_flag: Flag,
    pub spanning_walk: Walk,
    pub walks: Vec<Walk>,
    pub words: Vec<Vec<Colour>>,
    pub automorphisms: Vec<Automorphism>,
}

/// Realizes the closed walks of the minimal spanning walk as automorphisms,
/// with flag 0 as base flag.
pub fn realize_generators(g: &FlagGraph, a: &AutGroup, t: &SymmetryTypeGraph) -> Result<GeneratorSet, WalkError> {
    let spanning_walk = min_spanning_walk(t);
    let walks = generating_walks(t, &spanning_walk)?;
    let base = 0;
    let base_orbit = a.orbit_of[base];
    let mut words = Vec::with_capacity(walks.len());
    let mut automorphisms = Vec::with_capacity(walks.len());
    for (k, w) in walks.iter().enumerate() {
        let word = w.word();
        let target = g.apply_word(base, &word);
        if !w.is_closed() || a.orbit_of[target] != base_orbit {
            return Err(WalkError::NotClosed { walk: k });
        }
        let alpha = a.element_to(target).ok_or(WalkError::NoAutomorphism(target))?;
        words.push(word);
        automorphisms.push(alpha.clone());
    }
    Ok(GeneratorSet { base_flag: base, spanning_walk, walks, words, automorphisms })
}

/// Drops identities and repeated automorphisms, keeping first occurrences.
pub fn reduce_generators(s: &GeneratorSet) -> GeneratorSet {
    let mut out = GeneratorSet {
        base_flag: s.base_flag,
        spanning_walk: s.spanning_walk.clone(),
        walks: Vec::new(),
        words: Vec::new(),
        automorphisms: Vec::new(),
    };
    for ((w, word), alpha) in s.walks.iter().zip(&s.words).zip(&s.automorphisms) {
        if alpha.is_identity() || out.automorphisms.contains(alpha) {
            continue;
        }
        out.walks.push(w.clone());
        out.words.push(word.clone());
        out.automorphisms.push(alpha.clone());
    }
    out
}

/// The group generated by `gens` acting freely on `flags` points, sorted by
/// the image of point 0.
pub fn closure(gens: &[Automorphism], flags: usize) -> Vec<Automorphism> {
    let mut seen = vec![false; flags];
    let identity = Automorphism::identity(flags);
    seen[0] = true;
    let mut elements = vec![identity];
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        next += 1;
        for g in gens {
            let y = x.compose(g);
            if !seen[y.image[0]] {
                seen[y.image[0]] = true;
                elements.push(y);
            }
        }
    }
    elements.sort_by_key(|a| a.image[0]);
    elements
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{named, prism, pyramid, torus44};
    use crate::stg::symmetry_type_graph;

    #[test]
    fn regular_walks_are_reflections() {
        let g = named("cube").unwrap();
        let (a, t) = symmetry_type_graph(&g);
        let c = min_spanning_walk(&t);
        assert!(c.is_empty());
        let walks = generating_walks(&t, &c).unwrap();
        assert_eq!(walks.iter().map(Walk::word).collect::<Vec<_>>(), vec![vec![0], vec![1], vec![2]]);
        let s = realize_generators(&g, &a, &t).unwrap();
        assert_eq!(s.automorphisms.len(), 3);
        assert_eq!(closure(&s.automorphisms, 48), a.elements);
    }

    #[test]
    fn cuboctahedron_generators() {
        let g = named("cuboctahedron").unwrap();
        let (a, t) = symmetry_type_graph(&g);
        let c = min_spanning_walk(&t);
        assert_eq!(c.word(), vec![2]);
        let s = realize_generators(&g, &a, &t).unwrap();
        assert_eq!(s.words, vec![vec![0], vec![1], vec![2, 0, 2], vec![2, 1, 2]]);
        // r2 r0 r2 = r0, so the third generator repeats the first
        assert_eq!(s.automorphisms[2], s.automorphisms[0]);
        let r = reduce_generators(&s);
        assert_eq!(r.words, vec![vec![0], vec![1], vec![2, 1, 2]]);
        assert_eq!(closure(&r.automorphisms, 96).len(), 48);
        assert_eq!(reduce_generators(&r), r);
    }

    #[test]
    fn prism_walk() {
        let g = prism(3).unwrap();
        let (a, t) = symmetry_type_graph(&g);
        let c = min_spanning_walk(&t);
        assert_eq!(c.word(), vec![1, 2]);
        assert!(c.is_valid_in(&t));
        let s = realize_generators(&g, &a, &t).unwrap();
        assert_eq!(closure(&s.automorphisms, g.flag_count()), a.elements);
        assert_eq!(s.walks.len(), t.semi_edges().len() + t.edges().len() - 2);
    }

    #[test]
    fn generated_groups_match() {
        for g in [pyramid(4).unwrap(), torus44(1, 2).unwrap(), named("hemicube").unwrap()] {
            let (a, t) = symmetry_type_graph(&g);
            let s = realize_generators(&g, &a, &t).unwrap();
            for w in &s.walks {
                assert!(w.is_closed() && w.start == 0 && w.is_valid_in(&t));
            }
            assert_eq!(closure(&s.automorphisms, g.flag_count()), a.elements);
        }
    }

    #[test]
    fn duplicates_and_identities_removed() {
        let id = Automorphism::identity(2);
        let swap = Automorphism { image: vec![1, 0] };
        let w = Walk::empty(0);
        let s = GeneratorSet {
            base_flag: 0,
            spanning_walk: w.clone(),
            walks: vec![w.clone(), w.clone(), w.clone()],
            words: vec![vec![0, 0], vec![1], vec![2, 1, 2]],
            automorphisms: vec![id, swap.clone(), swap],
        };
        let r = reduce_generators(&s);
        assert_eq!(r.words, vec![vec![1]]);
    }

    #[test]
    fn non_spanning_walk_rejected() {
        let (_, t) = symmetry_type_graph(&prism(3).unwrap());
        assert_eq!(generating_walks(&t, &Walk::empty(0)).unwrap_err(), WalkError::NotSpanning(1));
        assert_eq!(format_word(&[2, 0, 2]), "2,0,2");
    }
}
