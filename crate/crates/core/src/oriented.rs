//! Orientations, oriented flag di-graphs and their symmetry type di-graphs.
//!
//! For an orientable maniplex with `n` colours the black flags carry the
//! involutions `t_i = r_{n-1} r_i` for `i <= n - 3` and the permutation
//! `rot = r_{n-1} r_{n-2}`, applying `r_{n-1}` first. `rot` is stored
//! forward only; its inverse gives the reversed darts.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::flagcore::FlagGraph;
use crate::stg::{symmetry_type_graph, SymmetryTypeGraph};
use crate::symmetry::{aut_group, extend_on_tables, AutGroup, Automorphism};
use crate::walkgen::closure;
use crate::{Colour, ColourSet, Flag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientedError {
    #[error("the flag graph is not bipartite, so the maniplex is not orientable")]
    NotOrientable,
    #[error("oriented structures need at least 2 colours, got {0}")]
    RankTooSmall(usize),
    #[error(
        "chirality tests disagree: group test says {group}, odd-cycle test on the symmetry type graph says {graph}"
    )]
    CrossCheckMismatch { group: bool, graph: bool },
    #[error("invalid oriented symmetry type graph: {0}")]
    InvalidStg(String),
}

/// Black (0) / white (1) colouring of the flags, flag 0 black.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orientation {
    pub colour_of: Vec<u8>,
}

impl Orientation {
    pub fn is_black(&self, f: Flag) -> bool {
        self.colour_of[f] == 0
    }
}

pub fn orientation(g: &FlagGraph) -> Option<Orientation> {
    g.bipartition().map(|colour_of| Orientation { colour_of })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrientedFlagDigraph {
    pub rank: usize,
    /// Flag of the underlying graph behind each vertex, ascending.
    pub black: Vec<Flag>,
    /// `t_adj[i][v]` for `i` in `0..rank - 2`.
    pub t_adj: Vec<Vec<usize>>,
    pub rot: Vec<usize>,
}

impl OrientedFlagDigraph {
    pub fn black_count(&self) -> usize {
        self.rot.len()
    }

    pub fn rot_inverse(&self) -> Vec<usize> {
        invert(&self.rot)
    }

    /// The undirected tables followed by `rot`.
    pub fn tables(&self) -> Vec<Vec<usize>> {
        let mut out = self.t_adj.clone();
        out.push(self.rot.clone());
        out
    }

    /// Involutions without fixed points, a fixed-point-free `rot`, and
    /// connectivity.
    pub fn is_valid(&self) -> bool {
        let m = self.black_count();
        let involutive = self.t_adj.iter().all(|t| (0..m).all(|v| t[v] != v && t[t[v]] == v));
        let mut seen = vec![false; m];
        let mut hit = 0;
        for &v in &self.rot {
            if !seen[v] {
                seen[v] = true;
                hit += 1;
            }
        }
        let rot_ok = hit == m && (0..m).all(|v| self.rot[v] != v);
        involutive && rot_ok && components(&self.tables(), m).1 == 1
    }
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

/// Weak components of a family of permutations, numbered by least point.
fn components(perms: &[Vec<usize>], points: usize) -> (Vec<usize>, usize) {
    let inverses: Vec<Vec<usize>> = perms.iter().map(|p| invert(p)).collect();
    let mut label = vec![usize::MAX; points];
    let mut count = 0;
    for start in 0..points {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for p in perms.iter().chain(&inverses) {
                let w = p[v];
                if label[w] == usize::MAX {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

fn check_rank(g: &FlagGraph) -> Result<(), OrientedError> {
    if g.rank() < 2 {
        Err(OrientedError::RankTooSmall(g.rank()))
    } else {
        Ok(())
    }
}

pub fn oriented_digraph(g: &FlagGraph, o: &Orientation) -> Result<OrientedFlagDigraph, OrientedError> {
    check_rank(g)?;
    let n = g.rank();
    let black: Vec<Flag> = (0..g.flag_count()).filter(|&f| o.is_black(f)).collect();
    let mut index = vec![usize::MAX; g.flag_count()];
    for (v, &f) in black.iter().enumerate() {
        index[f] = v;
    }
    let image = |word: [Colour; 2]| -> Result<Vec<usize>, OrientedError> {
        black
            .iter()
            .map(|&f| match index[g.apply_word(f, &word)] {
                usize::MAX => Err(OrientedError::NotOrientable),
                v => Ok(v),
            })
            .collect()
    };
    let t_adj = (0..n - 2).map(|i| image([n - 1, i])).collect::<Result<Vec<_>, _>>()?;
    let rot = image([n - 1, n - 2])?;
    Ok(OrientedFlagDigraph { rank: n, black, t_adj, rot })
}

/// Orientation-preserving automorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutPlus {
    /// Elements acting on all flags, with orbits on all flags.
    pub group: AutGroup,
    /// `[Aut : Aut+]`, 1 or 2.
    pub index: usize,
    /// Orbit of each black flag (indexed as in the di-graph), numbered by
    /// least black flag.
    pub black_orbit_of: Vec<usize>,
    pub black_orbit_count: usize,
}

pub fn aut_plus(g: &FlagGraph, o: &Orientation) -> Result<AutPlus, OrientedError> {
    aut_plus_with(&aut_group(g), o)
}

/// As [`aut_plus`], reusing a computed automorphism group.
pub fn aut_plus_with(a: &AutGroup, o: &Orientation) -> Result<AutPlus, OrientedError> {
    let flags = o.colour_of.len();
    let kept: Vec<Automorphism> = a.elements.iter().filter(|x| o.is_black(x.image[0])).cloned().collect();
    let index = a.order() / kept.len();
    let group = AutGroup::from_elements(flags, kept);
    let mut renumber = vec![usize::MAX; group.orbit_count];
    let mut black_orbit_count = 0;
    let mut black_orbit_of = Vec::new();
    for f in (0..flags).filter(|&f| o.is_black(f)) {
        let orbit = group.orbit_of[f];
        if renumber[orbit] == usize::MAX {
            renumber[orbit] = black_orbit_count;
            black_orbit_count += 1;
        }
        black_orbit_of.push(renumber[orbit]);
    }
    Ok(AutPlus { group, index, black_orbit_of, black_orbit_count })
}

/// Whether `Aut+ = Aut`, checked against the odd-cycle criterion on the
/// symmetry type graph. Semi-edges count as odd cycles.
pub fn is_chiral_a_la_conway(g: &FlagGraph, o: &Orientation) -> Result<bool, OrientedError> {
    check_rank(g)?;
    let (a, t) = symmetry_type_graph(g);
    chirality_cross_check(&aut_plus_with(&a, o)?, &t)
}

pub fn chirality_cross_check(plus: &AutPlus, t: &SymmetryTypeGraph) -> Result<bool, OrientedError> {
    let group = plus.index == 1;
    let graph = t.is_bipartite();
    if group == graph {
        Ok(group)
    } else {
        Err(OrientedError::CrossCheckMismatch { group, graph })
    }
}

/// Oriented symmetry type di-graph. Vertex `u` has the undirected colour
/// involutions `undirected[i][u]` (a fixed point is a semi-edge) and one
/// outgoing dart to `rot[u]` (a fixed point is a loop).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrientedStg {
    pub undirected: Vec<Vec<usize>>,
    pub rot: Vec<usize>,
}

impl OrientedStg {
    pub fn new(undirected: Vec<Vec<usize>>, rot: Vec<usize>) -> Result<Self, OrientedError> {
        let k = rot.len();
        let bad = |msg: &str| Err(OrientedError::InvalidStg(msg.to_string()));
        if k == 0 {
            return bad("no vertices");
        }
        let mut seen = vec![false; k];
        for &v in &rot {
            if v >= k || seen[v] {
                return bad("darts do not form a permutation");
            }
            seen[v] = true;
        }
        for s in &undirected {
            if s.len() != k || (0..k).any(|u| s[u] >= k || s[s[u]] != u) {
                return bad("undirected colour is not an involution");
            }
        }
        let ot = OrientedStg { undirected, rot };
        if ot.components().1 != 1 {
            return bad("disconnected");
        }
        Ok(ot)
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn n_colours(&self) -> usize {
        self.undirected.len() + 2
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&u| self.rot[u] == u).collect()
    }

    /// Cycle lengths of the darts, ascending.
    pub fn dart_cycle_type(&self) -> Vec<usize> {
        let k = self.vertex_count();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for s in 0..k {
            let mut len = 0;
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                v = self.rot[v];
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out.sort_unstable();
        out
    }

    fn components(&self) -> (Vec<usize>, usize) {
        let mut perms = self.undirected.clone();
        perms.push(self.rot.clone());
        components(&perms, self.vertex_count())
    }

    pub fn relabel(&self, perm: &[usize]) -> OrientedStg {
        let apply = |s: &Vec<usize>| {
            let mut t = vec![0; s.len()];
            for u in 0..s.len() {
                t[perm[u]] = perm[s[u]];
            }
            t
        };
        OrientedStg { undirected: self.undirected.iter().map(apply).collect(), rot: apply(&self.rot) }
    }

    /// The same di-graph with every dart reversed.
    pub fn mirror(&self) -> OrientedStg {
        OrientedStg { undirected: self.undirected.clone(), rot: invert(&self.rot) }
    }
}

pub fn oriented_stg(g: &FlagGraph, o: &Orientation) -> Result<OrientedStg, OrientedError> {
    let d = oriented_digraph(g, o)?;
    let plus = aut_plus(g, o)?;
    Ok(oriented_quotient(&d, &plus))
}

/// Quotient of the di-graph by the black-flag orbits of `plus`.
pub fn oriented_quotient(d: &OrientedFlagDigraph, plus: &AutPlus) -> OrientedStg {
    let k = plus.black_orbit_count;
    let mut rep = vec![usize::MAX; k];
    for (v, &o) in plus.black_orbit_of.iter().enumerate().rev() {
        rep[o] = v;
    }
    let project = |table: &Vec<usize>| rep.iter().map(|&v| plus.black_orbit_of[table[v]]).collect();
    OrientedStg { undirected: d.t_adj.iter().map(project).collect(), rot: project(&d.rot) }
}

/// The oriented di-graph induced on `T` by the same compositions that define
/// the oriented flag di-graph, restricted to the component of vertex 0 and
/// re-indexed in ascending vertex order.
pub fn oriented_from_stg(t: &SymmetryTypeGraph) -> Result<OrientedStg, OrientedError> {
    let n = t.n_colours();
    if n < 2 {
        return Err(OrientedError::RankTooSmall(n));
    }
    let k = t.vertex_count();
    let compose = |a: Colour, b: Colour| -> Vec<usize> { (0..k).map(|u| t.neighbour(t.neighbour(u, a), b)).collect() };
    let mut perms: Vec<Vec<usize>> = (0..n - 2).map(|i| compose(n - 1, i)).collect();
    perms.push(compose(n - 1, n - 2));
    let (labels, _) = components(&perms, k);
    let members: Vec<usize> = (0..k).filter(|&u| labels[u] == labels[0]).collect();
    let mut index = vec![usize::MAX; k];
    for (x, &u) in members.iter().enumerate() {
        index[u] = x;
    }
    let restrict = |p: &Vec<usize>| members.iter().map(|&u| index[p[u]]).collect::<Vec<_>>();
    let rot = restrict(perms.last().unwrap());
    let undirected = perms[..n - 2].iter().map(restrict).collect();
    OrientedStg::new(undirected, rot)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum OrientedClass {
    Rotary,
    /// Colours with a semi-edge (`0..n-2`) or loop (`n-2`).
    TwoOrbitOriented(ColourSet),
    OtherOriented(usize),
}

impl fmt::Display for OrientedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientedClass::Rotary => write!(f, "rotary"),
            OrientedClass::TwoOrbitOriented(set) if set.is_empty() => write!(f, "2_∅^+"),
            OrientedClass::TwoOrbitOriented(set) => write!(f, "2_{set}^+"),
            OrientedClass::OtherOriented(k) => write!(f, "{k}-orbit oriented"),
        }
    }
}

pub fn classify_oriented(ot: &OrientedStg) -> OrientedClass {
    match ot.vertex_count() {
        1 => OrientedClass::Rotary,
        2 => {
            let mut set: ColourSet = (0..ot.undirected.len()).filter(|&i| ot.undirected[i][0] == 0).collect();
            if ot.rot[0] == 0 {
                set.insert(ot.n_colours() - 2);
            }
            OrientedClass::TwoOrbitOriented(set)
        }
        k => OrientedClass::OtherOriented(k),
    }
}

/// The opposite orientation: every dart reversed.
pub fn enantiomorph(d: &OrientedFlagDigraph) -> OrientedFlagDigraph {
    OrientedFlagDigraph { rank: d.rank, black: d.black.clone(), t_adj: d.t_adj.clone(), rot: d.rot_inverse() }
}

/// A colour- and direction-preserving bijection between two di-graphs.
pub fn digraph_isomorphism(d1: &OrientedFlagDigraph, d2: &OrientedFlagDigraph) -> Option<Vec<usize>> {
    if d1.rank != d2.rank || d1.black_count() != d2.black_count() {
        return None;
    }
    let (a, b) = (d1.tables(), d2.tables());
    (0..d2.black_count()).find_map(|t| extend_on_tables(&a, &b, 0, t))
}

/// Automorphisms of the di-graph itself, sorted by the image of vertex 0.
pub fn digraph_automorphisms(d: &OrientedFlagDigraph) -> Vec<Automorphism> {
    let tables = d.tables();
    (0..d.black_count())
        .filter_map(|t| extend_on_tables(&tables, &tables, 0, t))
        .map(|image| Automorphism { image })
        .collect()
}

/// Facets read off the di-graph: black flags joined by words alternating
/// between a step from {undirected, reversed dart} and a step from
/// {undirected, forward dart}. Returns the facet of each vertex, numbered by
/// least vertex.
pub fn digraph_facets(d: &OrientedFlagDigraph) -> (Vec<usize>, usize) {
    let m = d.black_count();
    let back = d.rot_inverse();
    let mut label = vec![usize::MAX; m];
    let mut count = 0;
    for start in 0..m {
        if label[start] != usize::MAX {
            continue;
        }
        let mut seen = vec![[false; 2]; m];
        seen[start][0] = true;
        let mut queue = VecDeque::from([(start, 0usize)]);
        while let Some((v, parity)) = queue.pop_front() {
            if parity == 0 {
                label[v] = count;
            }
            let dart = if parity == 0 { back[v] } else { d.rot[v] };
            for w in d.t_adj.iter().map(|t| t[v]).chain([dart]) {
                let p = 1 - parity;
                if !seen[w][p] {
                    seen[w][p] = true;
                    queue.push_back((w, p));
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// A move in the oriented di-graph: an undirected colour, or a dart taken
/// forwards or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Move {
    Undirected(Colour),
    Forward,
    Backward,
}

/// Closed words at the base vertex from a breadth-first spanning tree of
/// the oriented symmetry type di-graph, realized as automorphisms of the
/// di-graph. They generate the orientation-preserving group.
pub fn oriented_generators(d: &OrientedFlagDigraph, ot: &OrientedStg, black_orbit_of: &[usize]) -> Vec<(Vec<Move>, Automorphism)> {
    let k = ot.vertex_count();
    let back = invert(&ot.rot);
    let step = |u: usize, mv: Move| match mv {
        Move::Undirected(i) => ot.undirected[i][u],
        Move::Forward => ot.rot[u],
        Move::Backward => back[u],
    };
    let moves: Vec<Move> = (0..ot.undirected.len())
        .map(Move::Undirected)
        .chain([Move::Forward, Move::Backward])
        .collect();
    let mut path: Vec<Option<Vec<Move>>> = vec![None; k];
    let root = black_orbit_of[0];
    path[root] = Some(Vec::new());
    let mut tree = Vec::new();
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &mv in &moves {
            let v = step(u, mv);
            if path[v].is_none() {
                let mut p = path[u].clone().unwrap();
                p.push(mv);
                path[v] = Some(p);
                tree.push((u, mv));
                queue.push_back(v);
            }
        }
    }
    let inverse_move = |mv: Move| match mv {
        Move::Forward => Move::Backward,
        Move::Backward => Move::Forward,
        other => other,
    };
    let tables = d.tables();
    let d_back = d.rot_inverse();
    let apply = |v: usize, mv: Move| match mv {
        Move::Undirected(i) => d.t_adj[i][v],
        Move::Forward => d.rot[v],
        Move::Backward => d_back[v],
    };
    let mut out = Vec::new();
    for u in 0..k {
        for &mv in moves.iter().filter(|&&mv| mv != Move::Backward) {
            if tree.contains(&(u, mv)) {
                continue;
            }
            let v = step(u, mv);
            let mut word = path[u].clone().unwrap();
            word.push(mv);
            word.extend(path[v].as_ref().unwrap().iter().rev().map(|&m| inverse_move(m)));
            let target = word.iter().fold(0, |x, &m| apply(x, m));
            let image = extend_on_tables(&tables, &tables, 0, target).expect("closed words land in the base orbit");
            out.push((word, Automorphism { image }));
        }
    }
    out
}

/// True iff the oriented generators close up to the full di-graph group.
pub fn oriented_generators_suffice(d: &OrientedFlagDigraph, ot: &OrientedStg, black_orbit_of: &[usize]) -> bool {
    let gens: Vec<Automorphism> = oriented_generators(d, ot, black_orbit_of).into_iter().map(|(_, a)| a).collect();
    closure(&gens, d.black_count()) == digraph_automorphisms(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{hypercube, named, polygon, torus44};
    use crate::enumerate::oriented_code;

    #[test]
    fn orientability() {
        assert!(orientation(&named("cube").unwrap()).is_some());
        assert!(orientation(&torus44(1, 2).unwrap()).is_some());
        assert!(orientation(&named("hemicube").unwrap()).is_none());
        let o = orientation(&named("cube").unwrap()).unwrap();
        assert!(o.is_black(0));
    }

    #[test]
    fn digraph_shapes() {
        let g = named("cuboctahedron").unwrap();
        let d = oriented_digraph(&g, &orientation(&g).unwrap()).unwrap();
        assert_eq!(d.black_count(), 48);
        assert!(d.is_valid());

        let p = polygon(7).unwrap();
        let d = oriented_digraph(&p, &orientation(&p).unwrap()).unwrap();
        assert!(d.t_adj.is_empty());
        assert_eq!(d.black_count(), 7);
        let mut v = 0;
        for step in 1..=7 {
            v = d.rot[v];
            assert_eq!(v == 0, step == 7);
        }

        let cube = named("cube").unwrap();
        let o = orientation(&cube).unwrap();
        let d = oriented_digraph(&cube, &o).unwrap();
        assert_eq!(d.black_count(), 24);
        for (v, &f) in d.black.iter().enumerate() {
            assert_eq!(d.black[d.t_adj[0][v]], cube.apply_word(f, &[2, 0]));
            // rot turns about a vertex of valency 3
            let w = d.rot[d.rot[d.rot[v]]];
            assert_eq!(w, v);
            assert_ne!(d.rot[v], v);
        }
    }

    #[test]
    fn aut_plus_orders() {
        for (name, order, index, orbits) in [("cube", 24, 2, 1), ("cuboctahedron", 24, 2, 2)] {
            let g = named(name).unwrap();
            let p = aut_plus(&g, &orientation(&g).unwrap()).unwrap();
            assert_eq!((p.group.order(), p.index, p.black_orbit_count), (order, index, orbits));
        }
        let t = torus44(1, 2).unwrap();
        let p = aut_plus(&t, &orientation(&t).unwrap()).unwrap();
        assert_eq!((p.group.order(), p.index, p.black_orbit_count), (20, 1, 1));
    }

    #[test]
    fn chirality() {
        for (g, chiral) in [
            (torus44(1, 2).unwrap(), true),
            (named("cube").unwrap(), false),
            (named("cuboctahedron").unwrap(), false),
            (torus44(2, 0).unwrap(), false),
        ] {
            let o = orientation(&g).unwrap();
            assert_eq!(is_chiral_a_la_conway(&g, &o), Ok(chiral));
        }
    }

    #[test]
    fn rank_one_rejected() {
        let g = hypercube(1).unwrap();
        let o = orientation(&g).unwrap();
        assert_eq!(oriented_digraph(&g, &o), Err(OrientedError::RankTooSmall(1)));
    }

    #[test]
    fn rotary_quotients() {
        let t = torus44(1, 2).unwrap();
        let ot = oriented_stg(&t, &orientation(&t).unwrap()).unwrap();
        assert_eq!(ot.vertex_count(), 1);
        assert_eq!(ot.loops(), vec![0]);
        assert_eq!(ot.undirected.len(), 1);
        assert_eq!(classify_oriented(&ot), OrientedClass::Rotary);
        let cube = named("cube").unwrap();
        assert_eq!(oriented_stg(&cube, &orientation(&cube).unwrap()).unwrap().vertex_count(), 1);
        let s4 = hypercube(4).unwrap();
        let ot = oriented_stg(&s4, &orientation(&s4).unwrap()).unwrap();
        assert_eq!((ot.vertex_count(), ot.loops().len(), ot.undirected.len()), (1, 1, 2));
    }

    #[test]
    fn two_orbit_oriented_class() {
        let g = named("cuboctahedron").unwrap();
        let ot = oriented_stg(&g, &orientation(&g).unwrap()).unwrap();
        assert_eq!(ot.vertex_count(), 2);
        let class = classify_oriented(&ot);
        let OrientedClass::TwoOrbitOriented(set) = class else { panic!("{class}") };
        assert!(set.is_subset(&ColourSet::all(2)) && set != ColourSet::all(2));
    }

    #[test]
    fn quotient_from_symmetry_type_graph() {
        for g in [named("cuboctahedron").unwrap(), torus44(1, 2).unwrap(), crate::constructions::prism(4).unwrap()] {
            let o = orientation(&g).unwrap();
            let (_, t) = symmetry_type_graph(&g);
            let direct = oriented_stg(&g, &o).unwrap();
            let induced = oriented_from_stg(&t).unwrap();
            assert_eq!(oriented_code(&direct, false), oriented_code(&induced, false));
        }
    }

    #[test]
    fn enantiomorphs() {
        let t12 = torus44(1, 2).unwrap();
        let d12 = oriented_digraph(&t12, &orientation(&t12).unwrap()).unwrap();
        assert_eq!(enantiomorph(&enantiomorph(&d12)), d12);
        let t21 = torus44(2, 1).unwrap();
        let d21 = oriented_digraph(&t21, &orientation(&t21).unwrap()).unwrap();
        assert!(digraph_isomorphism(&enantiomorph(&d12), &d21).is_some());
        assert!(digraph_isomorphism(&d12, &d21).is_none());
        let cube = named("cube").unwrap();
        let d = oriented_digraph(&cube, &orientation(&cube).unwrap()).unwrap();
        assert!(digraph_isomorphism(&enantiomorph(&d), &d).is_some());
        assert!(enantiomorph(&d).is_valid());
    }

    #[test]
    fn facets_match_faces() {
        for g in [named("cube").unwrap(), named("cuboctahedron").unwrap(), hypercube(4).unwrap(), torus44(1, 2).unwrap(), polygon(5).unwrap()] {
            let o = orientation(&g).unwrap();
            let d = oriented_digraph(&g, &o).unwrap();
            let faces = g.i_faces(g.rank() - 1).unwrap();
            let (facet_of, _) = digraph_facets(&d);
            for v in 0..d.black_count() {
                for w in 0..d.black_count() {
                    let same_face = faces.face_of[d.black[v]] == faces.face_of[d.black[w]];
                    assert_eq!(facet_of[v] == facet_of[w], same_face);
                }
            }
        }
    }

    #[test]
    fn oriented_generators_generate() {
        for g in [named("cuboctahedron").unwrap(), torus44(1, 2).unwrap(), crate::constructions::pyramid(4).unwrap()] {
            let o = orientation(&g).unwrap();
            let d = oriented_digraph(&g, &o).unwrap();
            let plus = aut_plus(&g, &o).unwrap();
            let ot = oriented_quotient(&d, &plus);
            assert_eq!(digraph_automorphisms(&d).len(), plus.group.order());
            assert!(oriented_generators_suffice(&d, &ot, &plus.black_orbit_of));
        }
    }
}
