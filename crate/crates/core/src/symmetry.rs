//! Colour-preserving automorphisms of flag graphs.
//!
//! The automorphism group acts freely on flags, so an automorphism is pinned
//! down by the image of a single flag. Every candidate image of flag 0 is
//! tried by propagating along the colour tables.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::flagcore::FlagGraph;
use crate::Flag;

/// Extends `source -> target` to a map commuting with every table, where
/// `src` and `dst` are families of permutations of equal shape. Returns
/// `None` if the propagation is inconsistent or not injective. `src` must be
/// connected under its tables for the result to be total.
pub fn extend_on_tables(
    src: &[Vec<usize>],
    dst: &[Vec<usize>],
    source: usize,
    target: usize,
) -> Option<Vec<usize>> {
    let points = src.first()?.len();
    if src.len() != dst.len() || dst[0].len() != points {
        return None;
    }
    let mut image = vec![usize::MAX; points];
    let mut used = vec![false; points];
    image[source] = target;
    used[target] = true;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for (s, d) in src.iter().zip(dst) {
            let (y, want) = (s[x], d[image[x]]);
            if image[y] == usize::MAX {
                if used[want] {
                    return None;
                }
                image[y] = want;
                used[want] = true;
                queue.push_back(y);
            } else if image[y] != want {
                return None;
            }
        }
    }
    image.iter().all(|&v| v != usize::MAX).then_some(image)
}

/// A colour-preserving automorphism, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Automorphism {
    pub image: Vec<Flag>,
}

impl Automorphism {
    pub fn identity(flags: usize) -> Self {
        Automorphism { image: (0..flags).collect() }
    }

    pub fn apply(&self, f: Flag) -> Flag {
        self.image[f]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(f, &g)| f == g)
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &Automorphism) -> Automorphism {
        Automorphism { image: self.image.iter().map(|&f| then.image[f]).collect() }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut image = vec![0; self.image.len()];
        for (f, &g) in self.image.iter().enumerate() {
            image[g] = f;
        }
        Automorphism { image }
    }

    /// True iff the map commutes with every colour of `g`.
    pub fn preserves(&self, g: &FlagGraph) -> bool {
        g.tables()
            .iter()
            .all(|t| (0..t.len()).all(|f| self.image[t[f]] == t[self.image[f]]))
    }

    /// Disjoint cycle form, fixed points omitted, e.g. `(0 3)(1 2)`.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.image.len()];
        let mut out = String::new();
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut f = start;
            while !seen[f] {
                seen[f] = true;
                cycle.push(f.to_string());
                f = self.image[f];
            }
            out.push('(');
            out.push_str(&cycle.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// The automorphism `source -> target` of a valid flag graph, if any.
pub fn extend_automorphism(g: &FlagGraph, source: Flag, target: Flag) -> Option<Automorphism> {
    extend_on_tables(g.tables(), g.tables(), source, target).map(|image| Automorphism { image })
}

/// The full automorphism group with its flag orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutGroup {
    /// Sorted by the image of flag 0; the identity comes first.
    pub elements: Vec<Automorphism>,
    pub orbit_of: Vec<usize>,
    pub orbit_count: usize,
}

impl AutGroup {
    /// Builds the group record from a set of automorphisms closed under
    /// composition, computing orbits with ids ordered by least flag.
    pub fn from_elements(flags: usize, mut elements: Vec<Automorphism>) -> Self {
        elements.sort_by_key(|a| a.image[0]);
        let mut orbit_of = vec![usize::MAX; flags];
        let mut orbit_count = 0;
        for f in 0..flags {
            if orbit_of[f] != usize::MAX {
                continue;
            }
            for a in &elements {
                orbit_of[a.image[f]] = orbit_count;
            }
            orbit_count += 1;
        }
        AutGroup { elements, orbit_of, orbit_count }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The unique element sending flag 0 to `f`, if `f` is in orbit 0.
    pub fn element_to(&self, f: Flag) -> Option<&Automorphism> {
        self.elements
            .binary_search_by_key(&f, |a| a.image[0])
            .ok()
            .map(|k| &self.elements[k])
    }

    pub fn orbit_members(&self, orbit: usize) -> Vec<Flag> {
        (0..self.orbit_of.len()).filter(|&f| self.orbit_of[f] == orbit).collect()
    }
}

pub fn aut_group(g: &FlagGraph) -> AutGroup {
    let elements: Vec<Automorphism> = (0..g.flag_count())
        .into_par_iter()
        .filter_map(|t| extend_automorphism(g, 0, t))
        .collect();
    AutGroup::from_elements(g.flag_count(), elements)
}

/// A colour-preserving bijection from the flags of `g1` to those of `g2`.
pub fn are_isomorphic(g1: &FlagGraph, g2: &FlagGraph) -> Option<Vec<Flag>> {
    if g1.rank() != g2.rank() || g1.flag_count() != g2.flag_count() {
        return None;
    }
    (0..g2.flag_count()).find_map(|t| extend_on_tables(g1.tables(), g2.tables(), 0, t))
}
