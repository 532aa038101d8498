//! Exhaustive censuses of admissible symmetry type graphs, and of oriented
//! symmetry type di-graphs on three vertices.
//!
//! Graphs are generated one colour at a time as involutions on the vertex
//! set, pruning every pair of colours `i, j` with `|i - j| >= 2` whose
//! involutions fail to commute (equivalently, whose 2-factor has a component
//! that is not a quotient of a 4-cycle). Duplicates are removed by a
//! canonical code: the least serialization over all vertex relabellings.
//! Colours are never permuted.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::oriented::{oriented_from_stg, OrientedStg};
use crate::stg::{classify, transitivity_profile, StgClass, SymmetryTypeGraph};
use crate::ColourSet;

/// A byte string identifying a graph up to vertex relabelling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalCode(pub Vec<u8>);

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

fn serialize(tables: &[&[usize]], k: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(2 + k * tables.len());
    out.push(k as u8);
    out.push(tables.len() as u8);
    for u in 0..k {
        out.extend(tables.iter().map(|t| t[u] as u8));
    }
    out
}

fn relabelled(table: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut t = vec![0; table.len()];
    for u in 0..table.len() {
        t[perm[u]] = perm[table[u]];
    }
    t
}

/// The canonical code of `t` together with the relabelling realizing it.
pub fn canonical_form(t: &SymmetryTypeGraph) -> (CanonicalCode, SymmetryTypeGraph) {
    let k = t.vertex_count();
    assert!(k < 256, "canonical codes are limited to 255 vertices");
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    for perm in (0..k).permutations(k) {
        let tables: Vec<Vec<usize>> = (0..t.n_colours()).map(|i| relabelled(t.involution(i), &perm)).collect();
        let refs: Vec<&[usize]> = tables.iter().map(Vec::as_slice).collect();
        let code = serialize(&refs, k);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, perm));
        }
    }
    let (code, perm) = best.expect("at least one vertex");
    (CanonicalCode(code), t.relabel(&perm))
}

pub fn canonical_code(t: &SymmetryTypeGraph) -> CanonicalCode {
    canonical_form(t).0
}

/// Canonical code of an oriented di-graph; with `mirror`, a di-graph and
/// its dart reversal share a code.
pub fn oriented_code(ot: &OrientedStg, mirror: bool) -> CanonicalCode {
    let k = ot.vertex_count();
    let mut candidates = vec![ot.clone()];
    if mirror {
        candidates.push(ot.mirror());
    }
    let mut best: Option<Vec<u8>> = None;
    for c in &candidates {
        for perm in (0..k).permutations(k) {
            let r = c.relabel(&perm);
            let mut refs: Vec<&[usize]> = r.undirected.iter().map(Vec::as_slice).collect();
            refs.push(&r.rot);
            let code = serialize(&refs, k);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    CanonicalCode(best.expect("at least one vertex"))
}

/// Post-generation filters. `no_semi_edges` is also applied during the
/// search, since it only restricts the per-colour choices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StgFilter {
    pub fully_transitive: bool,
    pub bipartite: bool,
    pub no_semi_edges: bool,
}

impl StgFilter {
    pub fn fully_transitive() -> Self {
        StgFilter { fully_transitive: true, ..Default::default() }
    }

    pub fn accepts(&self, t: &SymmetryTypeGraph) -> bool {
        (!self.fully_transitive || transitivity_profile(t).is_empty())
            && (!self.bipartite || t.is_bipartite())
            && (!self.no_semi_edges || t.semi_edges().is_empty())
    }
}

/// All involutions of `0..k`, in lexicographic order of their tables.
pub fn involutions(k: usize) -> Vec<Vec<usize>> {
    fn extend(current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(u) = current.iter().position(|&x| x == usize::MAX) else {
            out.push(current.clone());
            return;
        };
        current[u] = u;
        extend(current, out);
        for v in u + 1..current.len() {
            if current[v] == usize::MAX {
                current[u] = v;
                current[v] = u;
                extend(current, out);
                current[v] = usize::MAX;
            }
        }
        current[u] = usize::MAX;
    }
    let mut out = Vec::new();
    extend(&mut vec![usize::MAX; k], &mut out);
    out.sort();
    out
}

fn commute(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).all(|u| a[b[u]] == b[a[u]])
}

fn search(
    choices: &[Vec<usize>],
    n: usize,
    sigma: &mut Vec<Vec<usize>>,
    found: &mut BTreeMap<CanonicalCode, SymmetryTypeGraph>,
) {
    let c = sigma.len();
    if c == n {
        if let Ok(t) = SymmetryTypeGraph::from_involutions(sigma.clone()) {
            let (code, canon) = canonical_form(&t);
            found.entry(code).or_insert(canon);
        }
        return;
    }
    for s in choices {
        if (0..c.saturating_sub(1)).all(|i| commute(&sigma[i], s)) {
            sigma.push(s.clone());
            search(choices, n, sigma, found);
            sigma.pop();
        }
    }
}

/// All connected admissible symmetry type graphs with `n_colours` colours
/// on `k` vertices, one per canonical code, in code order, each given in its
/// canonical labelling.
pub fn enumerate_stg(n_colours: usize, k: usize, filter: StgFilter) -> Vec<SymmetryTypeGraph> {
    assert!(n_colours >= 1 && k >= 1, "need at least one colour and one vertex");
    let choices: Vec<Vec<usize>> = involutions(k)
        .into_iter()
        .filter(|s| !filter.no_semi_edges || (0..k).all(|u| s[u] != u))
        .collect();
    let found = choices
        .par_iter()
        .map(|first| {
            let mut found = BTreeMap::new();
            search(&choices, n_colours, &mut vec![first.clone()], &mut found);
            found
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (code, t) in b {
                a.entry(code).or_insert(t);
            }
            a
        });
    found.into_values().filter(|t| filter.accepts(t)).collect()
}

/// How the darts of a three-vertex oriented di-graph are arranged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DartFamily {
    ThreeCycle,
    TwoCycleAndLoop,
    ThreeLoops,
}

impl DartFamily {
    fn of(ot: &OrientedStg) -> DartFamily {
        match ot.dart_cycle_type().as_slice() {
            [3] => DartFamily::ThreeCycle,
            [1, 2] => DartFamily::TwoCycleAndLoop,
            _ => DartFamily::ThreeLoops,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedCensusEntry {
    pub code: CanonicalCode,
    pub family: DartFamily,
    pub graph: OrientedStg,
}

/// Whether a three-vertex candidate meets the structural constraints on
/// oriented di-graphs: connected; two edges on different vertex pairs
/// differ in colour by less than 2; under a 3-cycle of darts, colours
/// `0..n-3` never consist of three semi-edges; with a single loop, every
/// edge at the loop vertex has colour `n - 3`.
fn oriented3_admissible(ot: &OrientedStg, n_colours: usize) -> bool {
    let undirected = n_colours - 2;
    let edges: Vec<(usize, (usize, usize))> = (0..undirected)
        .flat_map(|i| (0..3).filter(move |&u| ot.undirected[i][u] > u).map(move |u| (i, (u, ot.undirected[i][u]))))
        .collect();
    if edges.iter().tuple_combinations().any(|((i, a), (j, b))| a != b && i.abs_diff(*j) >= 2) {
        return false;
    }
    match DartFamily::of(ot) {
        DartFamily::ThreeCycle => (0..undirected - 1).all(|i| (0..3).any(|u| ot.undirected[i][u] != u)),
        DartFamily::TwoCycleAndLoop => {
            let l = ot.loops()[0];
            (0..undirected).all(|i| ot.undirected[i][l] == l || i == undirected - 1)
        }
        DartFamily::ThreeLoops => true,
    }
}

fn oriented3(n_colours: usize, mirror: bool) -> Vec<OrientedCensusEntry> {
    assert!(n_colours >= 4, "three-vertex oriented census needs at least 4 colours");
    let undirected = n_colours - 2;
    let invs = involutions(3);
    let mut found = BTreeMap::new();
    for rot in (0..3).permutations(3) {
        for und in std::iter::repeat_n(invs.iter(), undirected).multi_cartesian_product() {
            let Ok(ot) = OrientedStg::new(und.into_iter().cloned().collect(), rot.clone()) else {
                continue;
            };
            if oriented3_admissible(&ot, n_colours) {
                let code = oriented_code(&ot, mirror);
                found.entry(code.clone()).or_insert_with(|| OrientedCensusEntry {
                    code,
                    family: DartFamily::of(&ot),
                    graph: ot,
                });
            }
        }
    }
    found.into_values().collect()
}

/// Three-vertex oriented symmetry type di-graphs with `n_colours` colours,
/// a di-graph and its mirror image counted once, in code order.
pub fn enumerate_oriented_stg3(n_colours: usize) -> Vec<OrientedCensusEntry> {
    oriented3(n_colours, true)
}

/// As [`enumerate_oriented_stg3`], keeping mirror images apart.
pub fn enumerate_oriented_stg3_chiral(n_colours: usize) -> Vec<OrientedCensusEntry> {
    oriented3(n_colours, false)
}

/// Codes of the three-vertex oriented di-graphs obtained from six-vertex
/// bipartite symmetry type graphs without semi-edges.
pub fn oriented_stg3_from_quotients(n_colours: usize, mirror: bool) -> BTreeSet<CanonicalCode> {
    let filter = StgFilter { bipartite: true, no_semi_edges: true, ..Default::default() };
    enumerate_stg(n_colours, 6, filter)
        .iter()
        .filter_map(|t| oriented_from_stg(t).ok())
        .filter(|ot| ot.vertex_count() == 3)
        .map(|ot| oriented_code(&ot, mirror))
        .collect()
}

/// Count entries by dart family.
pub fn family_counts(entries: &[OrientedCensusEntry]) -> BTreeMap<DartFamily, usize> {
    let mut out = BTreeMap::new();
    for e in entries {
        *out.entry(e.family).or_insert(0) += 1;
    }
    out
}

/// Whether a set of non-transitive colours is one of the four shapes
/// possible for four flag orbits: empty, a single colour, two colours, or
/// contained in `{i-1, i, i+1}` for some `i`.
pub fn is_four_orbit_profile(profile: ColourSet, n_colours: usize) -> bool {
    profile.len() <= 2
        || (0..n_colours).any(|i| {
            let window: ColourSet = (i.saturating_sub(1)..=(i + 1).min(n_colours - 1)).collect();
            profile.is_subset(&window)
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusCheck {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub checks: Vec<CensusCheck>,
    /// Offset `d` such that the oriented totals quoted for ranks 3, 4, 5
    /// hold with `rank + d` colours, if one exists.
    pub oriented_colour_offset: Option<usize>,
    pub notes: Vec<String>,
}

impl CensusReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn check(&mut self, name: String, expected: impl ToString, observed: impl ToString) {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let passed = expected == observed;
        self.checks.push(CensusCheck { name, expected, observed, passed });
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark} {}: expected {}, observed {}", c.name, c.expected, c.observed)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Oriented totals quoted for the three smallest ranks.
pub const ORIENTED_SMALL_TOTALS: [(usize, usize); 3] = [(3, 6), (4, 9), (5, 10)];

/// Runs the golden counts and structural checks.
pub fn verify_census() -> CensusReport {
    let mut r = CensusReport::default();
    let count = |n, k, f| enumerate_stg(n, k, f).len();
    let ft = StgFilter::fully_transitive();

    for n in 3..=6 {
        r.check(format!("k=1 n_colours={n}"), 1, count(n, 1, StgFilter::default()));
    }
    for n in 3..=5 {
        r.check(format!("k=2 n_colours={n}"), (1 << n) - 1, count(n, 2, StgFilter::default()));
    }
    for n in 3..=6 {
        r.check(format!("k=3 n_colours={n}"), 2 * n - 3, count(n, 3, StgFilter::default()));
        r.check(format!("k=3 n_colours={n} fully transitive"), 0, count(n, 3, ft));
    }
    r.check("k=4 n_colours=4 fully transitive".into(), 20, count(4, 4, ft));
    r.check("k=5 n_colours=4 fully transitive".into(), 0, count(4, 5, ft));

    for n in 3..=5 {
        let graphs = enumerate_stg(n, 4, StgFilter::default());
        let bad_components = graphs
            .iter()
            .filter(|t| (0..n).any(|i| !(1..=3).contains(&t.components_without(i).unwrap().1)))
            .count();
        r.check(format!("k=4 n_colours={n} graphs with 1-3 components per T^i"), graphs.len(), graphs.len() - bad_components);
        let bad_profiles = graphs.iter().filter(|t| !is_four_orbit_profile(transitivity_profile(t), n)).count();
        r.check(format!("k=4 n_colours={n} profiles of the four allowed shapes"), graphs.len(), graphs.len() - bad_profiles);
    }
    for n in 2..=5 {
        let two = enumerate_stg(n, 2, StgFilter::default());
        let ok = two.iter().all(|t| matches!(classify(t), Ok(StgClass::TwoOrbit(set)) if set != ColourSet::all(n)));
        r.check(format!("k=2 n_colours={n} classified 2_I with I proper"), true, ok);
        let three = enumerate_stg(n, 3, StgFilter::default());
        let ok = three.iter().all(|t| matches!(classify(t), Ok(StgClass::ThreeOrbitJ(_) | StgClass::ThreeOrbitJJ1(_))));
        r.check(format!("k=3 n_colours={n} classified 3^j or 3^{{j,j+1}}"), true, ok);
    }

    let totals: BTreeMap<usize, usize> = (4..=10).map(|n| (n, enumerate_oriented_stg3(n).len())).collect();
    r.oriented_colour_offset = (0..=3).find(|&d| {
        ORIENTED_SMALL_TOTALS.iter().all(|&(rank, total)| totals.get(&(rank + d)) == Some(&total))
    });
    r.check(
        "oriented 3-vertex: colour offset reproducing totals 6, 9, 10".into(),
        "Some(1)",
        format!("{:?}", r.oriented_colour_offset),
    );
    if let Some(d) = r.oriented_colour_offset {
        for &(rank, total) in &ORIENTED_SMALL_TOTALS {
            r.check(format!("oriented 3-vertex rank={rank} (n_colours={})", rank + d), total, totals[&(rank + d)]);
        }
    }
    for n in 7..=10 {
        let entries = enumerate_oriented_stg3(n);
        let fams = family_counts(&entries);
        r.check(format!("oriented 3-vertex n_colours={n} total"), 2 * n - 3, entries.len());
        r.check(
            format!("oriented 3-vertex n_colours={n} three loops"),
            2 * n - 7,
            fams.get(&DartFamily::ThreeLoops).copied().unwrap_or(0),
        );
        r.check(
            format!("oriented 3-vertex n_colours={n} single loop"),
            2,
            fams.get(&DartFamily::TwoCycleAndLoop).copied().unwrap_or(0),
        );
    }
    let chiral: Vec<String> = (4..=6).map(|n| format!("{n}:{}", enumerate_oriented_stg3_chiral(n).len())).collect();
    r.notes.push(format!(
        "oriented totals count a di-graph and its mirror image once; keeping them apart gives {}",
        chiral.join(", ")
    ));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stg::three_vertex_template;

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (1..=6).map(|k| involutions(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76]);
    }

    #[test]
    fn small_censuses() {
        assert_eq!(enumerate_stg(3, 2, StgFilter::default()).len(), 7);
        assert_eq!(enumerate_stg(4, 3, StgFilter::default()).len(), 5);
        assert_eq!(enumerate_stg(5, 3, StgFilter::default()).len(), 7);
        assert_eq!(enumerate_stg(4, 1, StgFilter::default()).len(), 1);
        assert_eq!(enumerate_stg(4, 4, StgFilter::fully_transitive()).len(), 20);
        assert_eq!(enumerate_stg(4, 4, StgFilter::default()).len(), 82);
        assert_eq!(enumerate_stg(4, 5, StgFilter::default()).len(), 33);
    }

    #[test]
    fn output_is_sorted_and_canonical() {
        let graphs = enumerate_stg(4, 4, StgFilter::default());
        let codes: Vec<CanonicalCode> = graphs.iter().map(canonical_code).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        for t in &graphs {
            assert!(t.is_admissible());
            assert_eq!(canonical_form(t).1, *t);
        }
    }

    #[test]
    fn codes_respect_colours() {
        let a = three_vertex_template(3, 1, &[2]);
        assert_eq!(canonical_code(&a), canonical_code(&a.relabel(&[1, 2, 0])));
        assert_ne!(canonical_code(&three_vertex_template(3, 0, &[1])), canonical_code(&a));
    }

    #[test]
    fn oriented_census_small() {
        let totals: Vec<usize> = (4..=8).map(|n| enumerate_oriented_stg3(n).len()).collect();
        assert_eq!(totals, vec![6, 9, 10, 11, 13]);
        let chiral: Vec<usize> = (4..=6).map(|n| enumerate_oriented_stg3_chiral(n).len()).collect();
        assert_eq!(chiral, vec![7, 11, 11]);
    }

    #[test]
    fn four_orbit_profiles() {
        let set = |v: &[usize]| v.iter().copied().collect::<ColourSet>();
        assert!(is_four_orbit_profile(set(&[]), 4));
        assert!(is_four_orbit_profile(set(&[0, 3]), 4));
        assert!(is_four_orbit_profile(set(&[1, 2, 3]), 4));
        assert!(!is_four_orbit_profile(set(&[0, 1, 3]), 4));
    }
}
