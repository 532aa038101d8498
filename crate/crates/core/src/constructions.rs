//! Builders for the example corpus: polygons, simplices, cubes, prisms,
//! pyramids, `{4,4}` torus maps, and maps given by their face cycles.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::cli::{parse_map_file, FormatError};
use crate::flagcore::{FlagGraph, ValidationReport};
use crate::{ColourSet, Flag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("face {face} has {len} vertices; faces need at least 3")]
    FaceTooShort { face: usize, len: usize },
    #[error("face {face} uses vertex {vertex}, but there are only {vertex_count} vertices")]
    VertexOutOfRange {
        face: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("face {face} repeats vertex {vertex} at consecutive positions")]
    DegenerateEdge { face: usize, vertex: usize },
    #[error("edge {{{u},{v}}} lies in {count} face slots; every edge needs exactly 2")]
    NonPolyhedral { u: usize, v: usize, count: usize },
    #[error("the map is disconnected")]
    Disconnected,
    #[error("construction produced an invalid flag graph: {0}")]
    Invalid(ValidationReport),
    #[error("unknown construction `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// A map given by the vertex cycles of its faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSpec {
    pub vertex_count: usize,
    pub faces: Vec<Vec<usize>>,
}

fn checked(adj: Vec<Vec<Flag>>) -> Result<FlagGraph, ConstructionError> {
    let g = FlagGraph::from_tables(adj)
        .map_err(|e| ConstructionError::InvalidParameter(e.to_string()))?;
    let report = g.validate();
    if report.is_valid() {
        Ok(g)
    } else {
        Err(ConstructionError::Invalid(report))
    }
}

/// Flag graph of a polyhedral map. Flags are `(face, position, side)`
/// triples in lexicographic order: position `p` names the edge from
/// `cycle[p]` to `cycle[p + 1]` and side 0/1 picks its first/second vertex.
pub fn map_from_faces(spec: &MapSpec) -> Result<FlagGraph, ConstructionError> {
    let mut offset = Vec::with_capacity(spec.faces.len());
    let mut total = 0;
    let mut slots: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for (f, cycle) in spec.faces.iter().enumerate() {
        if cycle.len() < 3 {
            return Err(ConstructionError::FaceTooShort { face: f, len: cycle.len() });
        }
        if let Some(&vertex) = cycle.iter().find(|&&v| v >= spec.vertex_count) {
            return Err(ConstructionError::VertexOutOfRange {
                face: f,
                vertex,
                vertex_count: spec.vertex_count,
            });
        }
        for p in 0..cycle.len() {
            let (a, b) = (cycle[p], cycle[(p + 1) % cycle.len()]);
            if a == b {
                return Err(ConstructionError::DegenerateEdge { face: f, vertex: a });
            }
            slots.entry((a.min(b), a.max(b))).or_default().push((f, p));
        }
        offset.push(total);
        total += 2 * cycle.len();
    }
    if total == 0 {
        return Err(ConstructionError::InvalidParameter("a map needs at least one face".into()));
    }
    if let Some((&(u, v), s)) = slots.iter().find(|(_, s)| s.len() != 2) {
        return Err(ConstructionError::NonPolyhedral { u, v, count: s.len() });
    }

    let index = |f: usize, p: usize, s: usize| offset[f] + 2 * p + s;
    let mut adj = vec![vec![0; total]; 3];
    for (f, cycle) in spec.faces.iter().enumerate() {
        let len = cycle.len();
        for p in 0..len {
            let (a, b) = (cycle[p], cycle[(p + 1) % len]);
            let pair = &slots[&(a.min(b), a.max(b))];
            let &(of, op) = pair.iter().find(|&&slot| slot != (f, p)).unwrap();
            let other = &spec.faces[of];
            for s in 0..2 {
                let here = index(f, p, s);
                adj[0][here] = index(f, p, 1 - s);
                adj[1][here] = if s == 0 {
                    index(f, (p + len - 1) % len, 1)
                } else {
                    index(f, (p + 1) % len, 0)
                };
                let vertex = if s == 0 { a } else { b };
                let other_side = if other[op] == vertex { 0 } else { 1 };
                adj[2][here] = index(of, op, other_side);
            }
        }
    }
    let g = FlagGraph::from_tables(adj).expect("tables are well formed by construction");
    if g.components(ColourSet::all(3)).1 > 1 {
        return Err(ConstructionError::Disconnected);
    }
    let report = g.validate();
    if !report.is_valid() {
        return Err(ConstructionError::Invalid(report));
    }
    Ok(g)
}

/// The `l`-gon: rank 2, `2l` flags. Flag `2p + s` sits on edge `p` (from
/// vertex `p` to `p + 1`) at its vertex `p + s`.
pub fn polygon(l: usize) -> Result<FlagGraph, ConstructionError> {
    if l < 2 {
        return Err(ConstructionError::InvalidParameter(format!("polygon needs l >= 2, got {l}")));
    }
    let r0 = (0..2 * l).map(|f| f ^ 1).collect();
    let r1 = (0..2 * l)
        .map(|f| {
            let (p, s) = (f / 2, f % 2);
            if s == 0 {
                2 * ((p + l - 1) % l) + 1
            } else {
                2 * ((p + 1) % l)
            }
        })
        .collect();
    checked(vec![r0, r1])
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(factorial(n));
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

fn permutation_rank(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        rank += smaller * factorial(n - 1 - i);
    }
    rank
}

/// The `d`-simplex as a rank-`d` flag graph. A flag is a permutation `p` of
/// the `d + 1` vertices (its `i`-face is `{p0..pi}`); colour `i` swaps
/// `p_i` and `p_{i+1}`. Flags are ordered lexicographically.
pub fn simplex(d: usize) -> Result<FlagGraph, ConstructionError> {
    if d == 0 {
        return Err(ConstructionError::InvalidParameter("simplex needs d >= 1".into()));
    }
    let perms = permutations(d + 1);
    let adj = (0..d)
        .map(|i| {
            perms
                .iter()
                .map(|p| {
                    let mut q = p.clone();
                    q.swap(i, i + 1);
                    permutation_rank(&q)
                })
                .collect()
        })
        .collect();
    checked(adj)
}

/// The `d`-cube as a rank-`d` flag graph. A flag is a vertex `v` (bitmask of
/// coordinates) with a coordinate order `s`: its `i`-face frees coordinates
/// `s0..s(i-1)`. Colour 0 flips coordinate `s0` of `v`; colour `i >= 1` swaps
/// `s(i-1)` and `si`. Flags are ordered by `(v, s)` lexicographically.
#[allow(clippy::needless_range_loop)]
pub fn hypercube(d: usize) -> Result<FlagGraph, ConstructionError> {
    if d == 0 {
        return Err(ConstructionError::InvalidParameter("hypercube needs d >= 1".into()));
    }
    let perms = permutations(d);
    let orders = perms.len();
    let flags = (1usize << d) * orders;
    let mut adj = vec![vec![0; flags]; d];
    for v in 0..1usize << d {
        for (k, s) in perms.iter().enumerate() {
            let here = v * orders + k;
            adj[0][here] = (v ^ (1 << s[0])) * orders + k;
            for i in 1..d {
                let mut t = s.clone();
                t.swap(i - 1, i);
                adj[i][here] = v * orders + permutation_rank(&t);
            }
        }
    }
    checked(adj)
}

/// The `l`-gonal prism. Vertices `0..l` on top, `l..2l` below; the `l`
/// squares come first, each starting with a vertical edge, then the top and
/// bottom `l`-gons.
pub fn prism_spec(l: usize) -> Result<MapSpec, ConstructionError> {
    if l < 3 {
        return Err(ConstructionError::InvalidParameter(format!("prism needs l >= 3, got {l}")));
    }
    let mut faces: Vec<Vec<usize>> = (0..l)
        .map(|i| vec![i, l + i, l + (i + 1) % l, (i + 1) % l])
        .collect();
    faces.push((0..l).collect());
    faces.push((l..2 * l).rev().collect());
    Ok(MapSpec { vertex_count: 2 * l, faces })
}

pub fn prism(l: usize) -> Result<FlagGraph, ConstructionError> {
    map_from_faces(&prism_spec(l)?)
}

/// The `l`-gonal pyramid: base vertices `0..l`, apex `l`; the `l` triangles
/// come first, then the base.
pub fn pyramid_spec(l: usize) -> Result<MapSpec, ConstructionError> {
    if l < 3 {
        return Err(ConstructionError::InvalidParameter(format!("pyramid needs l >= 3, got {l}")));
    }
    let mut faces: Vec<Vec<usize>> = (0..l).map(|i| vec![i, (i + 1) % l, l]).collect();
    faces.push((0..l).rev().collect());
    Ok(MapSpec { vertex_count: l + 1, faces })
}

pub fn pyramid(l: usize) -> Result<FlagGraph, ConstructionError> {
    map_from_faces(&pyramid_spec(l)?)
}

/// Returns `(g, x, y)` with `a x + b y = g = gcd(a, b) >= 0`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

const CORNER: [(i64, i64); 4] = [(0, 0), (1, 0), (1, 1), (0, 1)];
// neighbouring cell across edge e, which joins corners e and e + 1
const ACROSS: [(i64, i64); 4] = [(0, -1), (1, 0), (0, 1), (-1, 0)];

/// The torus map `{4,4}_(b,c)`: the square tiling modulo the translations
/// `(b, c)` and `(-c, b)`, with `8 (b² + c²)` flags.
///
/// Cells are reduced to a fundamental domain `x in 0..g`, `y in 0..N/g`
/// (`g = gcd(b, c)`, `N = b² + c²`) using a triangular basis of the lattice.
/// A flag is `(x, y, corner, half)`: corner `k` of the cell and the cell edge
/// from `k` towards `k + 1` (half 0) or `k - 1` (half 1), indexed
/// lexicographically.
#[allow(clippy::needless_range_loop)]
pub fn torus44(b: i64, c: i64) -> Result<FlagGraph, ConstructionError> {
    if b == 0 && c == 0 {
        return Err(ConstructionError::InvalidParameter("torus44 needs (b, c) != (0, 0)".into()));
    }
    let n = b * b + c * c;
    let (g, s, t) = ext_gcd(b, -c);
    // basis (g, shear) and (0, height) of the translation lattice
    let shear = s * c + t * b;
    let height = n / g;
    let reduce = |x: i64, y: i64| -> usize {
        let q = x.div_euclid(g);
        let (x, y) = (x - q * g, (y - q * shear).rem_euclid(height));
        (x * height + y) as usize
    };
    let cells = n as usize;
    let flags = 8 * cells;
    let index = |cell: usize, k: usize, h: usize| (cell * 4 + k) * 2 + h;
    let mut adj = vec![vec![0; flags]; 3];
    for x in 0..g {
        for y in 0..height {
            let cell = reduce(x, y);
            for k in 0..4 {
                for h in 0..2 {
                    let here = index(cell, k, h);
                    adj[0][here] = if h == 0 {
                        index(cell, (k + 1) % 4, 1)
                    } else {
                        index(cell, (k + 3) % 4, 0)
                    };
                    adj[1][here] = index(cell, k, 1 - h);
                    let other = if h == 0 { (k + 1) % 4 } else { (k + 3) % 4 };
                    let e = if h == 0 { k } else { other };
                    let (dx, dy) = ACROSS[e];
                    let corner_at = |pos: (i64, i64)| {
                        CORNER
                            .iter()
                            .position(|&(cx, cy)| (cx + dx, cy + dy) == pos)
                            .expect("shared edge corners lie on the neighbouring cell")
                    };
                    let k2 = corner_at(CORNER[k]);
                    let other2 = corner_at(CORNER[other]);
                    let h2 = if other2 == (k2 + 1) % 4 { 0 } else { 1 };
                    adj[2][here] = index(reduce(x + dx, y + dy), k2, h2);
                }
            }
        }
    }
    checked(adj)
}

/// Embedded maps shipped with the crate.
pub const EMBEDDED_MAPS: [(&str, &str); 5] = [
    ("tetrahedron", include_str!("../data/tetrahedron.map")),
    ("octahedron", include_str!("../data/octahedron.map")),
    ("cube", include_str!("../data/cube.map")),
    ("cuboctahedron", include_str!("../data/cuboctahedron.map")),
    ("hemicube", include_str!("../data/hemicube.map")),
];

pub fn embedded_map(name: &str) -> Option<MapSpec> {
    EMBEDDED_MAPS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| parse_map_file(text).expect("embedded map files parse"))
}

/// A named construction, written `name` or `name:params` on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Named {
    Polygon(usize),
    Simplex(usize),
    Hypercube(usize),
    Prism(usize),
    Pyramid(usize),
    Torus44(i64, i64),
    Map(String),
}

impl Named {
    pub fn build(&self) -> Result<FlagGraph, ConstructionError> {
        match self {
            Named::Polygon(l) => polygon(*l),
            Named::Simplex(d) => simplex(*d),
            Named::Hypercube(d) => hypercube(*d),
            Named::Prism(l) => prism(*l),
            Named::Pyramid(l) => pyramid(*l),
            Named::Torus44(b, c) => torus44(*b, *c),
            Named::Map(name) => {
                let spec = embedded_map(name).ok_or_else(|| ConstructionError::UnknownName(name.clone()))?;
                map_from_faces(&spec)
            }
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::Polygon(l) => write!(f, "polygon:{l}"),
            Named::Simplex(d) => write!(f, "simplex:{d}"),
            Named::Hypercube(d) => write!(f, "hypercube:{d}"),
            Named::Prism(l) => write!(f, "prism:{l}"),
            Named::Pyramid(l) => write!(f, "pyramid:{l}"),
            Named::Torus44(b, c) => write!(f, "torus44:{b},{c}"),
            Named::Map(name) => write!(f, "{name}"),
        }
    }
}

impl FromStr for Named {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n.trim(), Some(p.trim())),
            None => (s.trim(), None),
        };
        let bad = || ConstructionError::InvalidParameter(format!("cannot parse parameters of `{s}`"));
        let one = || -> Result<usize, ConstructionError> {
            params.ok_or_else(bad)?.parse().map_err(|_| bad())
        };
        Ok(match name {
            "polygon" => Named::Polygon(one()?),
            "simplex" => Named::Simplex(one()?),
            "hypercube" => Named::Hypercube(one()?),
            "prism" => Named::Prism(one()?),
            "pyramid" => Named::Pyramid(one()?),
            "torus44" => {
                let (b, c) = params.and_then(|p| p.split_once(',')).ok_or_else(bad)?;
                Named::Torus44(b.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?)
            }
            _ if params.is_none() && EMBEDDED_MAPS.iter().any(|(n, _)| *n == name) => {
                Named::Map(name.to_string())
            }
            _ => return Err(ConstructionError::UnknownName(s.to_string())),
        })
    }
}

/// Builds a construction from its command-line name, e.g. `prism:3`.
pub fn named(s: &str) -> Result<FlagGraph, ConstructionError> {
    s.parse::<Named>()?.build()
}

/// The standard corpus: polygons 3..=12, simplices and cubes 1..=5, prisms
/// and pyramids 3..=8, the embedded maps, and every `{4,4}_(b,c)` with
/// `b >= 1`, `c >= 0`, `b² + c² <= 25`.
pub fn corpus() -> Vec<Named> {
    let mut out = Vec::new();
    out.extend((3..=12).map(Named::Polygon));
    out.extend((1..=5).map(Named::Simplex));
    out.extend((1..=5).map(Named::Hypercube));
    out.extend((3..=8).map(Named::Prism));
    out.extend((3..=8).map(Named::Pyramid));
    out.extend(EMBEDDED_MAPS.iter().map(|(n, _)| Named::Map(n.to_string())));
    for b in 1..=5i64 {
        for c in 0..=5i64 {
            if b * b + c * c <= 25 {
                out.push(Named::Torus44(b, c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_counts() {
        assert_eq!(named("cube").unwrap().flag_count(), 48);
        assert_eq!(named("cuboctahedron").unwrap().flag_count(), 96);
        assert_eq!(pyramid(4).unwrap().flag_count(), 32);
        assert_eq!(polygon(5).unwrap().flag_count(), 10);
        assert_eq!(simplex(3).unwrap().flag_count(), 24);
        assert_eq!(hypercube(3).unwrap().flag_count(), 48);
        assert_eq!(hypercube(4).unwrap().flag_count(), 384);
        assert_eq!(prism(3).unwrap().flag_count(), 36);
        assert_eq!(torus44(1, 2).unwrap().flag_count(), 40);
        assert_eq!(torus44(2, 0).unwrap().flag_count(), 32);
    }

    #[test]
    fn closed_forms_over_parameter_ranges() {
        for l in 2..=12 {
            let g = polygon(l).unwrap();
            assert_eq!((g.rank(), g.flag_count()), (2, 2 * l));
            assert_eq!(g.i_faces(0).unwrap().face_count, l);
        }
        for l in 3..=12 {
            assert_eq!(prism(l).unwrap().flag_count(), 12 * l);
            assert_eq!(pyramid(l).unwrap().flag_count(), 8 * l);
        }
        for d in 1..=5 {
            let s = simplex(d).unwrap();
            assert_eq!((s.rank(), s.flag_count()), (d, factorial(d + 1)));
            let h = hypercube(d).unwrap();
            assert_eq!((h.rank(), h.flag_count()), (d, (1 << d) * factorial(d)));
        }
        for b in -5i64..=5 {
            for c in -5i64..=5 {
                let n = b * b + c * c;
                if n == 0 || n > 25 {
                    continue;
                }
                let g = torus44(b, c).unwrap();
                assert_eq!(g.flag_count() as i64, 8 * n, "torus44({b},{c})");
            }
        }
    }

    #[test]
    fn digon_is_a_four_cycle() {
        let g = polygon(2).unwrap();
        assert_eq!(g.table(0), &[1, 0, 3, 2]);
        assert_eq!(g.table(1), &[3, 2, 1, 0]);
    }

    #[test]
    fn parameter_errors() {
        assert!(polygon(1).is_err());
        assert!(simplex(0).is_err());
        assert!(hypercube(0).is_err());
        assert!(prism(2).is_err());
        assert!(pyramid(2).is_err());
        assert!(torus44(0, 0).is_err());
        assert!(matches!(named("dodecahedron"), Err(ConstructionError::UnknownName(_))));
        assert!(named("prism:x").is_err());
        assert!(named("torus44:1").is_err());
    }

    #[test]
    fn map_errors() {
        let open = MapSpec { vertex_count: 3, faces: vec![vec![0, 1, 2]] };
        assert!(matches!(map_from_faces(&open), Err(ConstructionError::NonPolyhedral { .. })));
        let short = MapSpec { vertex_count: 2, faces: vec![vec![0, 1]] };
        assert!(matches!(map_from_faces(&short), Err(ConstructionError::FaceTooShort { .. })));
        let range = MapSpec { vertex_count: 2, faces: vec![vec![0, 1, 2]] };
        assert!(matches!(map_from_faces(&range), Err(ConstructionError::VertexOutOfRange { .. })));
        let degenerate = MapSpec { vertex_count: 3, faces: vec![vec![0, 0, 1]] };
        assert!(matches!(map_from_faces(&degenerate), Err(ConstructionError::DegenerateEdge { .. })));
        let two_tetrahedra = MapSpec {
            vertex_count: 8,
            faces: vec![
                vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2],
                vec![4, 5, 6], vec![4, 7, 5], vec![4, 6, 7], vec![5, 7, 6],
            ],
        };
        assert_eq!(map_from_faces(&two_tetrahedra), Err(ConstructionError::Disconnected));
    }

    #[test]
    fn map_construction_is_deterministic() {
        let spec = embedded_map("cuboctahedron").unwrap();
        assert_eq!(map_from_faces(&spec).unwrap(), map_from_faces(&spec).unwrap());
    }

    #[test]
    fn named_round_trip() {
        for item in corpus() {
            assert_eq!(item.to_string().parse::<Named>().unwrap(), item);
        }
    }

    #[test]
    fn lexicographic_permutations() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        for (k, p) in perms.iter().enumerate() {
            assert_eq!(permutation_rank(p), k);
        }
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
    }
}
