//! Flag graphs: `n` perfect matchings on a flag set, one per colour.
//!
//! Colour `i` is stored as the involution `adj[i]`, so `adj[i][f]` is the
//! `i`-adjacent flag of `f`. A [`FlagGraph`] only guarantees a well-formed
//! shape; [`FlagGraph::validate`] checks the maniplex axioms.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::{Colour, ColourSet, Flag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("a flag graph needs at least one colour")]
    ZeroRank,
    #[error("a flag graph needs at least one flag")]
    NoFlags,
    #[error("colour {colour} has {found} entries, expected {expected}")]
    RaggedTable {
        colour: Colour,
        found: usize,
        expected: usize,
    },
    #[error("colour {colour}: flag {flag} maps to {target}, which is not a flag")]
    OutOfRange {
        colour: Colour,
        flag: Flag,
        target: usize,
    },
    #[error("colour {colour} out of range for rank {rank}")]
    ColourOutOfRange { colour: Colour, rank: usize },
    #[error("face {face} out of range: there are {count} faces of rank {colour}")]
    BadFace {
        colour: Colour,
        face: usize,
        count: usize,
    },
    #[error("a 0-face has no face sub-maniplex")]
    ZeroFace,
}

/// One failed axiom, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    FixedPoint { colour: Colour, flag: Flag },
    NotInvolution { colour: Colour, flag: Flag },
    SharedMatching { colours: (Colour, Colour), flag: Flag },
    NonCommuting { colours: (Colour, Colour), flag: Flag },
    Disconnected { unreachable: Flag },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FixedPoint { colour, flag } => {
                write!(f, "fixed point, colour {colour}, flag {flag}")
            }
            Violation::NotInvolution { colour, flag } => {
                write!(f, "not an involution, colour {colour}, flag {flag}")
            }
            Violation::SharedMatching { colours: (i, j), flag } => {
                write!(f, "matchings share an edge ({i},{j}), flag {flag}")
            }
            Violation::NonCommuting { colours: (i, j), flag } => {
                write!(f, "commuting condition ({i},{j}), flag {flag}")
            }
            Violation::Disconnected { unreachable } => {
                write!(f, "disconnected, flag {unreachable} unreachable from flag 0")
            }
        }
    }
}

/// Every violated axiom of a flag graph. Empty iff the graph is a maniplex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The `i`-faces of a flag graph: connected components avoiding colour `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePartition {
    pub colour_removed: Colour,
    pub face_of: Vec<usize>,
    pub face_count: usize,
}

impl FacePartition {
    /// Flags of `face`, ascending.
    pub fn flags_of(&self, face: usize) -> Vec<Flag> {
        (0..self.face_of.len())
            .filter(|&f| self.face_of[f] == face)
            .collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.face_count];
        for &c in &self.face_of {
            sizes[c] += 1;
        }
        sizes
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagGraph {
    adj: Vec<Vec<Flag>>,
}

impl FlagGraph {
    /// Builds a flag graph from colour tables, checking only their shape.
    pub fn from_tables(adj: Vec<Vec<Flag>>) -> Result<Self, FlagError> {
        if adj.is_empty() {
            return Err(FlagError::ZeroRank);
        }
        let flags = adj[0].len();
        if flags == 0 {
            return Err(FlagError::NoFlags);
        }
        for (colour, table) in adj.iter().enumerate() {
            if table.len() != flags {
                return Err(FlagError::RaggedTable {
                    colour,
                    found: table.len(),
                    expected: flags,
                });
            }
            if let Some((flag, &target)) = table.iter().enumerate().find(|(_, &t)| t >= flags) {
                return Err(FlagError::OutOfRange {
                    colour,
                    flag,
                    target,
                });
            }
        }
        Ok(FlagGraph { adj })
    }

    pub fn rank(&self) -> usize {
        self.adj.len()
    }

    pub fn flag_count(&self) -> usize {
        self.adj[0].len()
    }

    #[inline]
    pub fn adj(&self, colour: Colour, flag: Flag) -> Flag {
        self.adj[colour][flag]
    }

    pub fn table(&self, colour: Colour) -> &[Flag] {
        &self.adj[colour]
    }

    pub fn tables(&self) -> &[Vec<Flag>] {
        &self.adj
    }

    /// Applies the colours of `word` left to right: `flag^{r_{w0} r_{w1} ...}`.
    pub fn apply_word(&self, flag: Flag, word: &[Colour]) -> Flag {
        word.iter().fold(flag, |f, &c| self.adj[c][f])
    }

    fn check_colour(&self, colour: Colour) -> Result<(), FlagError> {
        if colour < self.rank() {
            Ok(())
        } else {
            Err(FlagError::ColourOutOfRange {
                colour,
                rank: self.rank(),
            })
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.rank();
        let flags = self.flag_count();
        let mut violations = Vec::new();

        for (colour, table) in self.adj.iter().enumerate() {
            if let Some(flag) = (0..flags).find(|&f| table[f] == f) {
                violations.push(Violation::FixedPoint { colour, flag });
            }
            if let Some(flag) = (0..flags).find(|&f| table[table[f]] != f) {
                violations.push(Violation::NotInvolution { colour, flag });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&self.adj[i], &self.adj[j]);
                if let Some(flag) = (0..flags).find(|&f| a[f] == b[f]) {
                    violations.push(Violation::SharedMatching {
                        colours: (i, j),
                        flag,
                    });
                }
                if j - i >= 2 {
                    if let Some(flag) = (0..flags).find(|&f| a[b[f]] != b[a[f]]) {
                        violations.push(Violation::NonCommuting {
                            colours: (i, j),
                            flag,
                        });
                    }
                }
            }
        }
        let (labels, count) = self.components(ColourSet::all(n));
        if count > 1 {
            let unreachable = labels.iter().position(|&l| l != 0).unwrap();
            violations.push(Violation::Disconnected { unreachable });
        }
        ValidationReport { violations }
    }

    /// Connected components using only colours in `allowed`. Component ids
    /// are assigned in order of each component's least flag.
    pub fn components(&self, allowed: ColourSet) -> (Vec<usize>, usize) {
        let flags = self.flag_count();
        let colours: Vec<Colour> = (0..self.rank()).filter(|&c| allowed.contains(c)).collect();
        let mut label = vec![usize::MAX; flags];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..flags {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(f) = queue.pop_front() {
                for &c in &colours {
                    let g = self.adj[c][f];
                    if label[g] == usize::MAX {
                        label[g] = count;
                        queue.push_back(g);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// The `i`-faces: components of the graph with colour `i` deleted.
    pub fn i_faces(&self, i: Colour) -> Result<FacePartition, FlagError> {
        self.check_colour(i)?;
        let mut allowed = ColourSet::all(self.rank());
        allowed.remove(i);
        let (face_of, face_count) = self.components(allowed);
        Ok(FacePartition {
            colour_removed: i,
            face_of,
            face_count,
        })
    }

    /// The face sub-maniplex of an `i`-face: the component of the face's least
    /// flag under colours `0..i`, re-indexed densely in ascending flag order.
    pub fn face_maniplex(&self, i: Colour, face: usize) -> Result<FlagGraph, FlagError> {
        self.check_colour(i)?;
        if i == 0 {
            return Err(FlagError::ZeroFace);
        }
        let faces = self.i_faces(i)?;
        if face >= faces.face_count {
            return Err(FlagError::BadFace {
                colour: i,
                face,
                count: faces.face_count,
            });
        }
        let start = faces.face_of.iter().position(|&x| x == face).unwrap();
        let (labels, _) = self.components(ColourSet::all(i));
        let target = labels[start];
        let members: Vec<Flag> = (0..self.flag_count()).filter(|&f| labels[f] == target).collect();
        let mut index = vec![usize::MAX; self.flag_count()];
        for (k, &f) in members.iter().enumerate() {
            index[f] = k;
        }
        let adj = (0..i)
            .map(|c| members.iter().map(|&f| index[self.adj[c][f]]).collect())
            .collect();
        FlagGraph::from_tables(adj)
    }

    /// Reverses the colour order: colour `c` becomes `rank - 1 - c`.
    pub fn recolour_dual(&self) -> FlagGraph {
        let adj = self.adj.iter().rev().cloned().collect();
        FlagGraph { adj }
    }

    /// Proper 2-colouring of the flags with flag 0 in part 0, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let flags = self.flag_count();
        let mut part = vec![u8::MAX; flags];
        part[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(f) = queue.pop_front() {
            for table in &self.adj {
                let g = table[f];
                if part[g] == u8::MAX {
                    part[g] = 1 - part[f];
                    queue.push_back(g);
                } else if part[g] == part[f] {
                    return None;
                }
            }
        }
        // unreachable flags only occur in invalid graphs; leave them in part 0
        for p in part.iter_mut().filter(|p| **p == u8::MAX) {
            *p = 0;
        }
        Some(part)
    }
}
