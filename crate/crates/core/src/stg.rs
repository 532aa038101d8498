//! Symmetry type graphs: quotients of flag graphs by the automorphism group.
//!
//! A symmetry type graph on `k` vertices with `n` colours is stored as `n`
//! involutions on the vertices. A fixed point `sigma_i(u) = u` is a
//! semi-edge of colour `i` at `u`; otherwise `u` and `sigma_i(u)` are joined
//! by an `i`-edge.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::enumerate::canonical_code;
use crate::flagcore::{FlagError, FlagGraph};
use crate::symmetry::{aut_group, AutGroup};
use crate::{Colour, ColourSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StgError {
    #[error("a symmetry type graph needs at least one vertex and one colour")]
    Empty,
    #[error("vertex {vertex} has {found} slots, expected {expected}")]
    RaggedSlots {
        vertex: usize,
        found: usize,
        expected: usize,
    },
    #[error("colour {colour} at vertex {vertex} points to {target}, which is not a vertex")]
    OutOfRange {
        vertex: usize,
        colour: Colour,
        target: usize,
    },
    #[error("colour {colour} is not symmetric at vertex {vertex}")]
    NotSymmetric { vertex: usize, colour: Colour },
    #[error("the graph is disconnected")]
    Disconnected,
    #[error("the ({i},{j}) 2-factor component at vertex {vertex} is not a quotient of a 4-cycle")]
    Inadmissible { i: Colour, j: Colour, vertex: usize },
    #[error("colour {colour} out of range for {n_colours} colours")]
    ColourOutOfRange { colour: Colour, n_colours: usize },
    #[error(transparent)]
    Flag(#[from] FlagError),
}

/// The (semi-)edge of one colour at one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    Semi,
    Edge(usize),
}

/// The five shapes an `(i, j)` 2-factor component may take when `|i - j| >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuotientType {
    /// One vertex with both semi-edges.
    Point,
    /// Two vertices joined by an `i`-edge and a `j`-edge.
    DoubleEdge,
    /// An `i`-edge with `j`-semi-edges at both ends.
    EdgeFirst,
    /// A `j`-edge with `i`-semi-edges at both ends.
    EdgeSecond,
    /// An alternating 4-cycle.
    Square,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetryTypeGraph {
    /// `sigma[i][u]`: the other end of the `i`-edge at `u`, or `u` for a semi-edge.
    sigma: Vec<Vec<usize>>,
}

impl SymmetryTypeGraph {
    /// Builds a graph from its colour involutions, checking shape, symmetry
    /// and connectivity (not admissibility).
    pub fn from_involutions(sigma: Vec<Vec<usize>>) -> Result<Self, StgError> {
        let k = sigma.first().map_or(0, Vec::len);
        if k == 0 {
            return Err(StgError::Empty);
        }
        for (colour, s) in sigma.iter().enumerate() {
            if s.len() != k {
                return Err(StgError::RaggedSlots { vertex: colour, found: s.len(), expected: k });
            }
            for (vertex, &target) in s.iter().enumerate() {
                if target >= k {
                    return Err(StgError::OutOfRange { vertex, colour, target });
                }
                if s[target] != vertex {
                    return Err(StgError::NotSymmetric { vertex, colour });
                }
            }
        }
        let t = SymmetryTypeGraph { sigma };
        if t.components(ColourSet::all(t.n_colours())).1 > 1 {
            return Err(StgError::Disconnected);
        }
        Ok(t)
    }

    /// Builds a graph from a vertex-by-colour slot table.
    pub fn from_slots(slots: &[Vec<Slot>]) -> Result<Self, StgError> {
        let k = slots.len();
        let n = slots.first().map_or(0, Vec::len);
        if k == 0 || n == 0 {
            return Err(StgError::Empty);
        }
        let mut sigma = vec![vec![0; k]; n];
        for (u, row) in slots.iter().enumerate() {
            if row.len() != n {
                return Err(StgError::RaggedSlots { vertex: u, found: row.len(), expected: n });
            }
            for (i, slot) in row.iter().enumerate() {
                sigma[i][u] = match *slot {
                    Slot::Semi => u,
                    Slot::Edge(v) if v == u => return Err(StgError::NotSymmetric { vertex: u, colour: i }),
                    Slot::Edge(v) => v,
                };
            }
        }
        Self::from_involutions(sigma)
    }

    pub fn vertex_count(&self) -> usize {
        self.sigma[0].len()
    }

    pub fn n_colours(&self) -> usize {
        self.sigma.len()
    }

    #[inline]
    pub fn neighbour(&self, u: usize, colour: Colour) -> usize {
        self.sigma[colour][u]
    }

    pub fn involution(&self, colour: Colour) -> &[usize] {
        &self.sigma[colour]
    }

    pub fn slot(&self, u: usize, colour: Colour) -> Slot {
        match self.sigma[colour][u] {
            v if v == u => Slot::Semi,
            v => Slot::Edge(v),
        }
    }

    pub fn slots(&self) -> Vec<Vec<Slot>> {
        (0..self.vertex_count())
            .map(|u| (0..self.n_colours()).map(|i| self.slot(u, i)).collect())
            .collect()
    }

    /// Edges as `(u, v, colour)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, Colour)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for i in 0..self.n_colours() {
                let v = self.sigma[i][u];
                if u < v {
                    out.push((u, v, i));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Semi-edges as `(u, colour)`, sorted.
    pub fn semi_edges(&self) -> Vec<(usize, Colour)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for i in 0..self.n_colours() {
                if self.sigma[i][u] == u {
                    out.push((u, i));
                }
            }
        }
        out
    }

    /// Colours carrying at least one semi-edge.
    pub fn semi_edge_colours(&self) -> ColourSet {
        self.semi_edges().into_iter().map(|(_, i)| i).collect()
    }

    /// The graph with vertex `u` renamed `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> SymmetryTypeGraph {
        let k = self.vertex_count();
        let sigma = self
            .sigma
            .iter()
            .map(|s| {
                let mut t = vec![0; k];
                for u in 0..k {
                    t[perm[u]] = perm[s[u]];
                }
                t
            })
            .collect();
        SymmetryTypeGraph { sigma }
    }

    /// Connected components using only colours in `allowed`, numbered by
    /// least vertex.
    pub fn components(&self, allowed: ColourSet) -> (Vec<usize>, usize) {
        let k = self.vertex_count();
        let mut label = vec![usize::MAX; k];
        let mut count = 0;
        for start in 0..k {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for i in allowed.iter().filter(|&i| i < self.n_colours()) {
                    let v = self.sigma[i][u];
                    if label[v] == usize::MAX {
                        label[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Components of `T^i`, the graph with colour `i` deleted.
    pub fn components_without(&self, i: Colour) -> Result<(Vec<usize>, usize), StgError> {
        self.check_colour(i)?;
        let mut allowed = ColourSet::all(self.n_colours());
        allowed.remove(i);
        Ok(self.components(allowed))
    }

    fn check_colour(&self, colour: Colour) -> Result<(), StgError> {
        if colour < self.n_colours() {
            Ok(())
        } else {
            Err(StgError::ColourOutOfRange { colour, n_colours: self.n_colours() })
        }
    }

    /// Shape of the `(i, j)` 2-factor component containing `u`, or `None`
    /// if it is not one of the five admissible quotients.
    pub fn two_factor_type(&self, i: Colour, j: Colour, u: usize) -> Option<QuotientType> {
        let (si, sj) = (&self.sigma[i], &self.sigma[j]);
        let v = si[u];
        let w = sj[u];
        match (v == u, w == u) {
            (true, true) => Some(QuotientType::Point),
            (false, false) if v == w => Some(QuotientType::DoubleEdge),
            (false, true) => (sj[v] == v).then_some(QuotientType::EdgeFirst),
            (true, false) => (si[w] == w).then_some(QuotientType::EdgeSecond),
            (false, false) => {
                // u, v = u^i, w = u^j are distinct; the fourth corner must close up
                let x = sj[v];
                (x != u && x != v && x != w && si[w] == x).then_some(QuotientType::Square)
            }
        }
    }

    /// The first `(i, j, vertex)` whose 2-factor component is not admissible.
    pub fn admissibility_violation(&self) -> Option<(Colour, Colour, usize)> {
        let n = self.n_colours();
        for i in 0..n {
            for j in i + 2..n {
                for u in 0..self.vertex_count() {
                    if self.two_factor_type(i, j, u).is_none() {
                        return Some((i, j, u));
                    }
                }
            }
        }
        None
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility_violation().is_none()
    }

    pub fn check_admissible(&self) -> Result<(), StgError> {
        match self.admissibility_violation() {
            Some((i, j, vertex)) => Err(StgError::Inadmissible { i, j, vertex }),
            None => Ok(()),
        }
    }

    /// True iff the graph has no odd closed walk, counting each semi-edge as
    /// a closed walk of length one.
    pub fn is_bipartite(&self) -> bool {
        let k = self.vertex_count();
        let mut part = vec![u8::MAX; k];
        part[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for s in &self.sigma {
                let v = s[u];
                if part[v] == u8::MAX {
                    part[v] = 1 - part[u];
                    queue.push_back(v);
                } else if part[v] == part[u] {
                    return false;
                }
            }
        }
        true
    }
}

/// The quotient of `g` by the orbits of `a`. Slots are read off each orbit's
/// least flag.
pub fn quotient(g: &FlagGraph, a: &AutGroup) -> SymmetryTypeGraph {
    let k = a.orbit_count;
    let mut rep = vec![usize::MAX; k];
    for (f, &o) in a.orbit_of.iter().enumerate().rev() {
        rep[o] = f;
    }
    let sigma = (0..g.rank())
        .map(|i| rep.iter().map(|&f| a.orbit_of[g.adj(i, f)]).collect())
        .collect();
    SymmetryTypeGraph { sigma }
}

/// Automorphism group and symmetry type graph of `g`.
pub fn symmetry_type_graph(g: &FlagGraph) -> (AutGroup, SymmetryTypeGraph) {
    let a = aut_group(g);
    let t = quotient(g, &a);
    (a, t)
}

pub fn is_i_face_transitive(t: &SymmetryTypeGraph, i: Colour) -> Result<bool, StgError> {
    Ok(t.components_without(i)?.1 == 1)
}

/// Colours `i` for which the maniplex is not `i`-face-transitive.
pub fn transitivity_profile(t: &SymmetryTypeGraph) -> ColourSet {
    (0..t.n_colours())
        .filter(|&i| t.components_without(i).map(|(_, c)| c > 1).unwrap_or(false))
        .collect()
}

/// Shapes of four-vertex graphs, after the smallest colour `i` whose removal
/// disconnects the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FourOrbitKind {
    /// `T^i` has components of sizes 1, 1, 2.
    ThreeComponents,
    /// `T^i` has components of sizes 1 and 3.
    OneAndThree,
    /// `T^i` has two components of size 2 joined by two `i`-edges.
    TwoAndTwoEdges,
    /// `T^i` has two components of size 2 joined by one `i`-edge.
    TwoAndTwoSemi,
    /// Every `T^i` is connected.
    FullyTransitive,
}

impl fmt::Display for FourOrbitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FourOrbitKind::ThreeComponents => "1+1+2",
            FourOrbitKind::OneAndThree => "1+3",
            FourOrbitKind::TwoAndTwoEdges => "2+2e",
            FourOrbitKind::TwoAndTwoSemi => "2+2s",
            FourOrbitKind::FullyTransitive => "ft",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum StgClass {
    Regular,
    /// Semi-edge colours `I`.
    TwoOrbit(ColourSet),
    /// An `j`-edge followed by parallel `(j-1)`- and `(j+1)`-edges.
    ThreeOrbitJ(Colour),
    /// A `j`-edge followed by a `(j+1)`-edge.
    ThreeOrbitJJ1(Colour),
    /// `i` is the least colour disconnecting the graph; `semis` lists the
    /// colours carrying semi-edges.
    FourOrbitFamily {
        kind: FourOrbitKind,
        i: Option<Colour>,
        semis: ColourSet,
    },
    Other(usize),
}

impl fmt::Display for StgClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StgClass::Regular => write!(f, "1"),
            StgClass::TwoOrbit(set) if set.is_empty() => write!(f, "2_∅"),
            StgClass::TwoOrbit(set) => write!(f, "2_{set}"),
            StgClass::ThreeOrbitJ(j) => write!(f, "3^{j}"),
            StgClass::ThreeOrbitJJ1(j) => write!(f, "3^{{{j},{}}}", j + 1),
            StgClass::FourOrbitFamily { kind, i: Some(i), semis } => write!(f, "4[{kind}; i={i}; semis={semis}]"),
            StgClass::FourOrbitFamily { kind, i: None, semis } => write!(f, "4[{kind}; semis={semis}]"),
            StgClass::Other(k) => write!(f, "{k}-orbit"),
        }
    }
}

/// The three-vertex graph with edges `(0,1)_a` and `(1,2)_b` for each
/// `b` in `bs`; all other slots are semi-edges.
pub fn three_vertex_template(n_colours: usize, a: Colour, bs: &[Colour]) -> SymmetryTypeGraph {
    let mut sigma: Vec<Vec<usize>> = (0..n_colours).map(|_| vec![0, 1, 2]).collect();
    sigma[a] = vec![1, 0, 2];
    for &b in bs {
        sigma[b] = vec![0, 2, 1];
    }
    SymmetryTypeGraph { sigma }
}

pub fn classify(t: &SymmetryTypeGraph) -> Result<StgClass, StgError> {
    t.check_admissible()?;
    let n = t.n_colours();
    Ok(match t.vertex_count() {
        1 => StgClass::Regular,
        2 => StgClass::TwoOrbit(t.semi_edge_colours()),
        3 => {
            let code = canonical_code(t);
            let jj1 = (0..n.saturating_sub(1))
                .find(|&j| canonical_code(&three_vertex_template(n, j, &[j + 1])) == code)
                .map(StgClass::ThreeOrbitJJ1);
            let j = || {
                (1..n.saturating_sub(1))
                    .find(|&j| canonical_code(&three_vertex_template(n, j, &[j - 1, j + 1])) == code)
                    .map(StgClass::ThreeOrbitJ)
            };
            jj1.or_else(j).unwrap_or(StgClass::Other(3))
        }
        4 => classify_four(t),
        k => StgClass::Other(k),
    })
}

fn classify_four(t: &SymmetryTypeGraph) -> StgClass {
    let semis = t.semi_edge_colours();
    for i in 0..t.n_colours() {
        let (labels, count) = t.components_without(i).expect("colour in range");
        if count == 1 {
            continue;
        }
        let mut sizes = vec![0; count];
        for &l in &labels {
            sizes[l] += 1;
        }
        sizes.sort_unstable();
        let kind = match sizes.as_slice() {
            [1, 1, 2] => FourOrbitKind::ThreeComponents,
            [1, 3] => FourOrbitKind::OneAndThree,
            [2, 2] => {
                let crossing = (0..4).filter(|&u| t.neighbour(u, i) != u).count();
                if crossing == 4 {
                    FourOrbitKind::TwoAndTwoEdges
                } else {
                    FourOrbitKind::TwoAndTwoSemi
                }
            }
            _ => return StgClass::Other(4),
        };
        return StgClass::FourOrbitFamily { kind, i: Some(i), semis };
    }
    StgClass::FourOrbitFamily { kind: FourOrbitKind::FullyTransitive, i: None, semis }
}

/// Checks that the component of `T^i` holding the orbits of an `i`-face maps
/// onto the symmetry type graph of the face: colours below `i` are carried
/// to the same colour and colours above `i` are collapsed.
pub fn verify_face_projection(g: &FlagGraph, i: Colour, face: usize) -> Result<bool, StgError> {
    let (a, t) = symmetry_type_graph(g);
    verify_face_projection_with(g, &a, &t, i, face)
}

/// As [`verify_face_projection`], reusing a computed group and quotient.
pub fn verify_face_projection_with(
    g: &FlagGraph,
    a: &AutGroup,
    t: &SymmetryTypeGraph,
    i: Colour,
    face: usize,
) -> Result<bool, StgError> {
    let sub = g.face_maniplex(i, face)?;
    let faces = g.i_faces(i)?;
    let first = faces.face_of.iter().position(|&x| x == face).expect("face exists");
    let (_, tf) = symmetry_type_graph(&sub);
    let (labels, _) = t.components_without(i)?;
    let component = labels[a.orbit_of[first]];
    let members: Vec<usize> = (0..t.vertex_count()).filter(|&u| labels[u] == component).collect();
    let root = members[0];

    'target: for start in 0..tf.vertex_count() {
        let mut pi = vec![usize::MAX; t.vertex_count()];
        pi[root] = start;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for j in (0..t.n_colours()).filter(|&j| j != i) {
                let v = t.neighbour(u, j);
                let want = if j < i { tf.neighbour(pi[u], j) } else { pi[u] };
                if pi[v] == usize::MAX {
                    pi[v] = want;
                    queue.push_back(v);
                } else if pi[v] != want {
                    continue 'target;
                }
            }
        }
        let mut hit = vec![false; tf.vertex_count()];
        for &u in &members {
            hit[pi[u]] = true;
        }
        if hit.iter().all(|&h| h) {
            return Ok(true);
        }
    }
    Ok(false)
}
