//! Exact isomorphism and automorphism search.
//!
//! Both graphs of a query are colored jointly and refined to a stable
//! coloring: a vertex's new color is its old color together with the multiset
//! of its neighbors' colors, ranked over the signatures of *both* graphs.
//! Equal ranks therefore mean the same thing on both sides, and any
//! difference in color class sizes proves that no color-preserving
//! isomorphism exists. When refinement stalls, the lowest-labeled vertex of
//! the first smallest non-singleton class of the first graph is
//! individualized and paired in turn with every vertex of the same class in
//! the second graph. The search is complete; leaves are verified edge by
//! edge before being reported.
//!
//! Automorphism groups are computed along the first path of that search
//! tree: for each base point the orbit under the pointwise stabilizer of the
//! earlier base points is found (new generators are searched for only when a
//! candidate image is not already reached by the known ones), and the group
//! order is the product of the orbit lengths.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{normalize_set, Graph, Permutation};

#[derive(Clone, Debug)]
struct Coloring {
    g: Vec<u32>,
    h: Vec<u32>,
    /// Colors in use are exactly `0..k`.
    k: u32,
}

impl Coloring {
    /// Joint dense ranking of arbitrary labels; `None` if the label
    /// histograms differ.
    fn from_labels(lg: &[usize], lh: &[usize]) -> Option<Coloring> {
        let mut hist: BTreeMap<usize, [usize; 2]> = BTreeMap::new();
        for &l in lg {
            hist.entry(l).or_default()[0] += 1;
        }
        for &l in lh {
            hist.entry(l).or_default()[1] += 1;
        }
        if hist.values().any(|c| c[0] != c[1]) {
            return None;
        }
        let rank: BTreeMap<usize, u32> = hist
            .keys()
            .enumerate()
            .map(|(i, &l)| (l, i as u32))
            .collect();
        Some(Coloring {
            g: lg.iter().map(|l| rank[l]).collect(),
            h: lh.iter().map(|l| rank[l]).collect(),
            k: rank.len() as u32,
        })
    }

    fn individualize(&self, v: usize, w: usize) -> Coloring {
        let mut c = self.clone();
        c.g[v] = c.k;
        c.h[w] = c.k;
        c.k += 1;
        c
    }
}

/// Search context for one pair of graphs.
struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
}

type Signature = (u32, Vec<u32>);

fn signature(graph: &Graph, colors: &[u32], v: usize) -> Signature {
    let mut nbr: Vec<u32> = graph.neighbors(v).map(|w| colors[w]).collect();
    nbr.sort_unstable();
    (colors[v], nbr)
}

impl Matcher<'_> {
    /// Refines to the coarsest stable coloring. Returns `false` as soon as
    /// the two sides become distinguishable.
    fn refine(&self, c: &mut Coloring) -> bool {
        let n = self.g.order();
        loop {
            let sg: Vec<Signature> = (0..n).map(|v| signature(self.g, &c.g, v)).collect();
            let sh: Vec<Signature> = (0..n).map(|v| signature(self.h, &c.h, v)).collect();
            let mut hist: BTreeMap<&Signature, [usize; 2]> = BTreeMap::new();
            for s in &sg {
                hist.entry(s).or_default()[0] += 1;
            }
            for s in &sh {
                hist.entry(s).or_default()[1] += 1;
            }
            if hist.values().any(|cnt| cnt[0] != cnt[1]) {
                return false;
            }
            let k = hist.len() as u32;
            if k == c.k {
                return true;
            }
            let rank: BTreeMap<&Signature, u32> = hist
                .keys()
                .enumerate()
                .map(|(i, &s)| (s, i as u32))
                .collect();
            c.g = sg.iter().map(|s| rank[s]).collect();
            c.h = sh.iter().map(|s| rank[s]).collect();
            c.k = k;
        }
    }

    /// Color class to branch on: smallest non-singleton, lowest color wins
    /// ties. `None` when the coloring is discrete.
    fn target_cell(&self, c: &Coloring) -> Option<u32> {
        let mut size = vec![0usize; c.k as usize];
        for &col in &c.g {
            size[col as usize] += 1;
        }
        (0..c.k)
            .filter(|&col| size[col as usize] > 1)
            .min_by_key(|&col| (size[col as usize], col))
    }

    fn leaf(&self, c: &Coloring) -> Option<Permutation> {
        let mut by_color = vec![0usize; c.k as usize];
        for (w, &col) in c.h.iter().enumerate() {
            by_color[col as usize] = w;
        }
        let map: Vec<usize> = c.g.iter().map(|&col| by_color[col as usize]).collect();
        let p = Permutation::new(map).ok()?;
        (self.g.permute(&p).ok()? == *self.h).then_some(p)
    }

    /// Depth-first search; `visit` returns `false` to stop. Returns `false`
    /// if stopped.
    fn search(&self, mut c: Coloring, visit: &mut dyn FnMut(Permutation) -> bool) -> bool {
        if !self.refine(&mut c) {
            return true;
        }
        let Some(cell) = self.target_cell(&c) else {
            return match self.leaf(&c) {
                Some(p) => visit(p),
                None => true,
            };
        };
        let v =
            c.g.iter()
                .position(|&col| col == cell)
                .expect("cell is non-empty");
        for w in (0..self.h.order()).filter(|&w| c.h[w] == cell) {
            if !self.search(c.individualize(v, w), visit) {
                return false;
            }
        }
        true
    }

    fn first(&self, c: Coloring) -> Option<Permutation> {
        let mut found = None;
        self.search(c, &mut |p| {
            found = Some(p);
            false
        });
        found
    }
}

fn compatible(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh
}

/// Isomorphism preserving vertex labels: vertex `v` of `g` may only map to a
/// vertex `w` of `h` with `labels_h[w] == labels_g[v]`.
pub fn colored_isomorphism(
    g: &Graph,
    h: &Graph,
    labels_g: &[usize],
    labels_h: &[usize],
) -> Result<Option<Permutation>> {
    for (graph, labels) in [(g, labels_g), (h, labels_h)] {
        if labels.len() != graph.order() {
            return Err(Error::SizeMismatch {
                expected: graph.order(),
                found: labels.len(),
            });
        }
    }
    if !compatible(g, h) {
        return Ok(None);
    }
    let Some(c) = Coloring::from_labels(labels_g, labels_h) else {
        return Ok(None);
    };
    Ok(Matcher { g, h }.first(c))
}

/// A permutation `p` with `g.permute(p) == h`, or `None` if the graphs are
/// not isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Permutation> {
    if !compatible(g, h) {
        return None;
    }
    let c = Coloring::from_labels(&vec![0; g.order()], &vec![0; h.order()])?;
    Matcher { g, h }.first(c)
}

fn set_labels(n: usize, set: &[usize]) -> Vec<usize> {
    let mut labels = vec![0; n];
    for &v in set {
        labels[v] = 1;
    }
    labels
}

/// An isomorphism from `g` to `h` that maps `set` onto itself, or `None` if
/// there is none. Both graphs share the labels of `set`.
pub fn isomorphism_fixing_set(g: &Graph, h: &Graph, set: &[usize]) -> Result<Option<Permutation>> {
    let set = normalize_set(g.order(), set)?;
    normalize_set(h.order(), &set)?;
    if g.order() != h.order() {
        return Ok(None);
    }
    let labels = set_labels(g.order(), &set);
    colored_isomorphism(g, h, &labels, &labels)
}

/// Every isomorphism from `g` to `h` mapping `set` onto itself, in search
/// order, up to `limit` of them.
pub fn all_isomorphisms_fixing_set(
    g: &Graph,
    h: &Graph,
    set: &[usize],
    limit: usize,
) -> Result<Vec<Permutation>> {
    let set = normalize_set(g.order(), set)?;
    normalize_set(h.order(), &set)?;
    if !compatible(g, h) || limit == 0 {
        return Ok(Vec::new());
    }
    let labels = set_labels(g.order(), &set);
    let Some(c) = Coloring::from_labels(&labels, &labels) else {
        return Ok(Vec::new());
    };
    let mut all = Vec::new();
    Matcher { g, h }.search(c, &mut |p| {
        all.push(p);
        all.len() < limit
    });
    Ok(all)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismGroup {
    pub generators: Vec<Permutation>,
    #[serde(serialize_with = "as_decimal")]
    pub order: BigUint,
    pub orbits: Vec<Vec<usize>>,
}

fn as_decimal<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn orbit_of(start: usize, n: usize, gens: &[Permutation]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for p in gens {
            let w = p.apply(v);
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Automorphism group of `g`, with a vertex coloring that automorphisms must
/// preserve (`labels[v]` arbitrary).
pub fn colored_automorphism_group(g: &Graph, labels: &[usize]) -> Result<AutomorphismGroup> {
    let n = g.order();
    if labels.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: labels.len(),
        });
    }
    let m = Matcher { g, h: g };
    let mut c = Coloring::from_labels(labels, labels).expect("same labels on both sides");
    // First path: (coloring before individualizing, base point, its cell).
    let mut path: Vec<(Coloring, usize, Vec<usize>)> = Vec::new();
    loop {
        let stable = m.refine(&mut c);
        debug_assert!(stable, "a graph is always compatible with itself");
        let Some(cell) = m.target_cell(&c) else { break };
        let members: Vec<usize> = (0..n).filter(|&v| c.g[v] == cell).collect();
        let base = members[0];
        let next = c.individualize(base, base);
        path.push((c, base, members));
        c = next;
    }

    let mut generators: Vec<Permutation> = Vec::new();
    let mut order = BigUint::one();
    for (coloring, base, members) in path.iter().rev() {
        let mut orbit = orbit_of(*base, n, &generators);
        for &w in members {
            if orbit[w] {
                continue;
            }
            if let Some(p) = m.first(coloring.individualize(*base, w)) {
                generators.push(p);
                orbit = orbit_of(*base, n, &generators);
            }
        }
        order *= BigUint::from(orbit.iter().filter(|&&b| b).count());
    }
    let orbits = orbits(g, &generators)?;
    Ok(AutomorphismGroup {
        generators,
        order,
        orbits,
    })
}

pub fn automorphism_group(g: &Graph) -> AutomorphismGroup {
    colored_automorphism_group(g, &vec![0; g.order()]).expect("labels sized to the graph")
}

/// Orbits of the group generated by `generators`, each sorted, listed by
/// smallest element.
pub fn orbits(g: &Graph, generators: &[Permutation]) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    for p in generators {
        if p.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: p.len(),
            });
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for p in generators {
        for v in 0..n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, p.apply(v)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        classes.entry(r).or_default().push(v);
    }
    Ok(classes.into_values().collect())
}
