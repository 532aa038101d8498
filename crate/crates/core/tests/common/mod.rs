//! Reference computations for the integration tests, written independently
//! of the library algorithms they check.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use maniplex::FlagGraph;

/// For every flag, a word carrying flag 0 to it (breadth-first).
pub fn words_from_base(g: &FlagGraph) -> Vec<Vec<usize>> {
    let mut word: Vec<Option<Vec<usize>>> = vec![None; g.flag_count()];
    word[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        for c in 0..g.rank() {
            let h = g.adj(c, f);
            if word[h].is_none() {
                let mut w = word[f].clone().unwrap();
                w.push(c);
                word[h] = Some(w);
                queue.push_back(h);
            }
        }
    }
    word.into_iter().map(|w| w.expect("connected")).collect()
}

/// Automorphisms by transport: the candidate sending 0 to `t` sends
/// `0^w` to `t^w`; keep the candidates that are colour-preserving bijections.
pub fn brute_automorphisms(g: &FlagGraph) -> Vec<Vec<usize>> {
    let words = words_from_base(g);
    let flags = g.flag_count();
    let mut out = Vec::new();
    for t in 0..flags {
        let image: Vec<usize> = words.iter().map(|w| g.apply_word(t, w)).collect();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        if sorted != (0..flags).collect::<Vec<_>>() {
            continue;
        }
        let commutes = (0..g.rank()).all(|c| (0..flags).all(|f| image[g.adj(c, f)] == g.adj(c, image[f])));
        if commutes {
            out.push(image);
        }
    }
    out
}

/// Orbit partition under a set of permutations, as sorted member lists.
pub fn orbit_sets(flags: usize, perms: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut done = vec![false; flags];
    for f in 0..flags {
        if done[f] {
            continue;
        }
        let mut orbit: Vec<usize> = perms.iter().map(|p| p[f]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &x in &orbit {
            done[x] = true;
        }
        out.insert(orbit);
    }
    out
}

pub fn commute(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).all(|u| a[b[u]] == b[a[u]])
}

/// Admissibility as commutation of the colour involutions.
pub fn admissible_by_commutation(sigma: &[Vec<usize>]) -> bool {
    let n = sigma.len();
    (0..n).all(|i| (i + 2..n).all(|j| commute(&sigma[i], &sigma[j])))
}

pub fn connected(sigma: &[Vec<usize>]) -> bool {
    let k = sigma[0].len();
    let mut seen = vec![false; k];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for s in sigma {
            if !seen[s[u]] {
                seen[s[u]] = true;
                stack.push(s[u]);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

pub fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

pub fn all_involutions(k: usize) -> Vec<Vec<usize>> {
    all_permutations(k)
        .into_iter()
        .filter(|p| (0..k).all(|u| p[p[u]] == u))
        .collect()
}

/// Least relabelled form of a family of vertex maps, as a flat vector.
pub fn min_form(maps: &[Vec<usize>], perms: &[Vec<usize>]) -> Vec<usize> {
    let k = maps[0].len();
    perms
        .iter()
        .map(|p| {
            let mut inv = vec![0; k];
            for (u, &x) in p.iter().enumerate() {
                inv[x] = u;
            }
            maps.iter()
                .flat_map(|m| (0..k).map(|x| p[m[inv[x]]]).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap()
}

/// Unpruned census: every tuple of involutions, filtered afterwards.
pub fn brute_census(n_colours: usize, k: usize) -> BTreeSet<Vec<usize>> {
    let invs = all_involutions(k);
    let perms = all_permutations(k);
    let mut out = BTreeSet::new();
    let total = invs.len().pow(n_colours as u32);
    for mut code in 0..total {
        let sigma: Vec<Vec<usize>> = (0..n_colours)
            .map(|_| {
                let s = invs[code % invs.len()].clone();
                code /= invs.len();
                s
            })
            .collect();
        if connected(&sigma) && admissible_by_commutation(&sigma) {
            out.insert(min_form(&sigma, &perms));
        }
    }
    out
}

/// Components of the graph after deleting colour `i`.
pub fn components_without(sigma: &[Vec<usize>], i: usize) -> usize {
    let rest: Vec<Vec<usize>> = sigma
        .iter()
        .enumerate()
        .filter(|&(c, _)| c != i)
        .map(|(_, s)| s.clone())
        .collect();
    let k = sigma[0].len();
    let mut label = vec![usize::MAX; k];
    let mut count = 0;
    for start in 0..k {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for s in &rest {
                if label[s[u]] == usize::MAX {
                    label[s[u]] = count;
                    stack.push(s[u]);
                }
            }
        }
        count += 1;
    }
    count
}

pub fn fully_transitive(sigma: &[Vec<usize>]) -> bool {
    (0..sigma.len()).all(|i| components_without(sigma, i) == 1)
}

/// Maniplex axioms checked directly on the tables.
pub fn axioms_hold(g: &FlagGraph) -> bool {
    let n = g.rank();
    let flags = g.flag_count();
    let tables: Vec<&[usize]> = (0..n).map(|c| g.table(c)).collect();
    let involutions = tables.iter().all(|r| (0..flags).all(|f| r[f] != f && r[r[f]] == f));
    let distinct = (0..flags).all(|f| {
        let mut images: Vec<usize> = tables.iter().map(|r| r[f]).collect();
        images.sort_unstable();
        images.windows(2).all(|w| w[0] != w[1])
    });
    let sigma: Vec<Vec<usize>> = tables.iter().map(|r| r.to_vec()).collect();
    involutions && distinct && admissible_by_commutation(&sigma) && connected(&sigma)
}

/// Two-colouring of the vertices of a family of involutions, with a fixed
/// point counting as an odd cycle.
pub fn two_colouring(sigma: &[Vec<usize>]) -> Option<Vec<u8>> {
    let k = sigma[0].len();
    let mut colour = vec![u8::MAX; k];
    for start in 0..k {
        if colour[start] != u8::MAX {
            continue;
        }
        colour[start] = 0;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for s in sigma {
                let v = s[u];
                if colour[v] == u8::MAX {
                    colour[v] = 1 - colour[u];
                    stack.push(v);
                } else if colour[v] == colour[u] {
                    return None;
                }
            }
        }
    }
    Some(colour)
}

pub fn flag_tables(g: &FlagGraph) -> Vec<Vec<usize>> {
    (0..g.rank()).map(|c| g.table(c).to_vec()).collect()
}

/// Colours `i` such that the automorphisms do not act transitively on the
/// `i`-faces.
pub fn non_transitive_ranks(g: &FlagGraph, autos: &[Vec<usize>]) -> BTreeSet<usize> {
    (0..g.rank())
        .filter(|&i| {
            let faces = g.i_faces(i).unwrap();
            let reached: BTreeSet<usize> = autos.iter().map(|a| faces.face_of[a[0]]).collect();
            reached.len() != faces.face_count
        })
        .collect()
}

/// The four transitivity cases for four-orbit maniplexes: at most two
/// non-transitive ranks, or all of them within `{i-1, i, i+1}`.
pub fn four_orbit_case(profile: &BTreeSet<usize>) -> bool {
    if profile.len() <= 2 {
        return true;
    }
    let lo = *profile.iter().next().unwrap();
    let hi = *profile.iter().next_back().unwrap();
    hi - lo <= 2
}

pub fn perfect_matchings(k: usize) -> Vec<Vec<usize>> {
    all_involutions(k)
        .into_iter()
        .filter(|p| (0..k).all(|u| p[u] != u))
        .collect()
}

/// Three-vertex oriented graphs obtained from every connected bipartite
/// six-vertex graph with `n` perfect matchings satisfying the commuting
/// condition. Returns the set of least forms, mirror images identified when
/// `mirror` is set.
pub fn oriented_double_cover_census(n: usize, mirror: bool) -> BTreeSet<Vec<usize>> {
    let matchings = perfect_matchings(6);
    let perms = all_permutations(3);
    let mut out = BTreeSet::new();
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    fn extend(
        n: usize,
        mirror: bool,
        matchings: &[Vec<usize>],
        perms: &[Vec<usize>],
        chosen: &mut Vec<Vec<usize>>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if chosen.len() == n {
            if !connected(chosen) {
                return;
            }
            let Some(colour) = two_colouring(chosen) else { return };
            let black: Vec<usize> = (0..6).filter(|&u| colour[u] == colour[0]).collect();
            let index = |v: usize| black.iter().position(|&b| b == v).unwrap();
            let last = &chosen[n - 1];
            let via = |c: usize| -> Vec<usize> { black.iter().map(|&u| index(chosen[c][last[u]])).collect() };
            let mut maps: Vec<Vec<usize>> = (0..n - 2).map(via).collect();
            let rot = via(n - 2);
            maps.push(rot.clone());
            let mut best = min_form(&maps, perms);
            if mirror {
                let mut inverse = vec![0; 3];
                for (u, &v) in rot.iter().enumerate() {
                    inverse[v] = u;
                }
                *maps.last_mut().unwrap() = inverse;
                best = best.min(min_form(&maps, perms));
            }
            out.insert(best);
            return;
        }
        let c = chosen.len();
        for m in matchings {
            if (0..c.saturating_sub(1)).all(|d| commute(&chosen[d], m)) {
                chosen.push(m.clone());
                extend(n, mirror, matchings, perms, chosen, out);
                chosen.pop();
            }
        }
    }
    extend(n, mirror, &matchings, &perms, &mut chosen, &mut out);
    out
}
