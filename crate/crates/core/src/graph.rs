//! Canonical labeling and isomorphism of simple graphs by colour refinement
//! and individualization, with automorphism pruning.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<SimpleGraph> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("repeated edge {:?}", w[0])));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Ok(SimpleGraph { n, edges: list, adj })
    }

    /// Builds a graph from symmetric adjacency lists.
    pub fn from_adjacency(adj: &[Vec<usize>]) -> Result<SimpleGraph> {
        let mut edges = Vec::new();
        for (u, ns) in adj.iter().enumerate() {
            for &v in ns {
                if !adj.get(v).is_some_and(|b| b.contains(&u)) {
                    return Err(Error::InvalidGraph(format!("edge ({u},{v}) is not symmetric")));
                }
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::new(adj.len(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// The graph with vertex v renamed to perm[v].
    pub fn permuted(&self, perm: &[usize]) -> Result<SimpleGraph> {
        if !is_permutation(perm, self.n) {
            return Err(Error::InvalidGraph("not a permutation".into()));
        }
        SimpleGraph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

/// Cheap invariants compared before any search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub degrees: BTreeMap<usize, usize>,
    pub triangles: usize,
    /// (adjacent, common neighbours) → number of vertex pairs.
    pub common_neighbors: BTreeMap<(bool, usize), usize>,
}

pub fn invariants(g: &SimpleGraph) -> GraphInvariants {
    let mut degrees = BTreeMap::new();
    for v in 0..g.n {
        *degrees.entry(g.adj[v].len()).or_insert(0) += 1;
    }
    let mut common_neighbors = BTreeMap::new();
    let mut triangles = 0;
    for u in 0..g.n {
        for v in u + 1..g.n {
            let c = g.adj[u].iter().filter(|w| g.has_edge(v, **w)).count();
            let adjacent = g.has_edge(u, v);
            if adjacent {
                triangles += c;
            }
            *common_neighbors.entry((adjacent, c)).or_insert(0) += 1;
        }
    }
    GraphInvariants { degrees, triangles: triangles / 3, common_neighbors }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    /// `labeling[v]` is the canonical position of vertex v.
    pub labeling: Vec<usize>,
    /// Vertices in canonical order.
    pub order: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<u32>,
    pub leaves_visited: usize,
    pub automorphisms: usize,
}

/// Replaces colours by their rank among distinct values.
fn rerank(keys: &[u64]) -> Vec<u32> {
    let mut sorted: Vec<u64> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect()
}

/// Equitable refinement: split by neighbour-colour multisets until stable.
fn refine(g: &SimpleGraph, colors: &[u32]) -> Vec<u32> {
    let mut col = colors.to_vec();
    let mut cells = count_cells(&col);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..g.n)
            .map(|v| {
                let mut s: Vec<u32> = g.adj[v].iter().map(|&w| col[w]).collect();
                s.sort_unstable();
                (col[v], s, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0u32; g.n];
        let mut rank = 0u32;
        for i in 0..sigs.len() {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        let new_cells = rank as usize + 1;
        col = next;
        if new_cells == cells {
            return col;
        }
        cells = new_cells;
    }
}

fn count_cells(col: &[u32]) -> usize {
    let mut c = col.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// First cell of minimum size above one, by colour.
fn target_cell(col: &[u32]) -> Option<Vec<usize>> {
    let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, &c) in col.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    cells.into_values().filter(|c| c.len() > 1).min_by_key(Vec::len)
}

fn individualize(col: &[u32], v: usize) -> Vec<u32> {
    let keys: Vec<u64> = col.iter().enumerate().map(|(w, &c)| 2 * c as u64 + u64::from(w != v)).collect();
    rerank(&keys)
}

fn certificate(g: &SimpleGraph, lab: &[u32]) -> Vec<(u32, u32)> {
    let mut e: Vec<(u32, u32)> = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (lab[u], lab[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    e.sort_unstable();
    e
}

struct Leaf {
    path: Vec<usize>,
    lab: Vec<u32>,
    cert: Vec<(u32, u32)>,
}

struct Search<'a> {
    g: &'a SimpleGraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
    leaves: usize,
}

fn find(uf: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while uf[r] != r {
        r = uf[r];
    }
    let mut y = x;
    while uf[y] != r {
        let next = uf[y];
        uf[y] = r;
        y = next;
    }
    r
}

impl Search<'_> {
    /// Orbits of the automorphisms found so far that fix `prefix` pointwise.
    fn orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let mut uf: Vec<usize> = (0..self.g.n).collect();
        for a in self.automorphisms.iter().filter(|a| prefix.iter().all(|&v| a[v] == v)) {
            for v in 0..self.g.n {
                let (x, y) = (find(&mut uf, v), find(&mut uf, a[v]));
                if x != y {
                    uf[x.max(y)] = x.min(y);
                }
            }
        }
        (0..self.g.n).map(|v| find(&mut uf, v)).collect()
    }

    fn automorphism(a: &[u32], b: &[u32]) -> Vec<usize> {
        // a[v] = b[σ(v)]
        let mut inv_b = vec![0usize; b.len()];
        for (v, &l) in b.iter().enumerate() {
            inv_b[l as usize] = v;
        }
        a.iter().map(|&l| inv_b[l as usize]).collect()
    }

    /// Explores below `col`; returns the depth to resume at after an
    /// automorphism shows the rest of a subtree is redundant.
    fn visit(&mut self, col: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        let col = refine(self.g, &col);
        let cell = match target_cell(&col) {
            Some(c) => c,
            None => return self.leaf(col, path),
        };
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for v in cell {
            let orbits = self.orbits(path);
            if explored.iter().any(|&w| orbits[w] == orbits[v]) {
                continue;
            }
            explored.push(v);
            path.push(v);
            let jump = self.visit(individualize(&col, v), path);
            path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, lab: Vec<u32>, path: &[usize]) -> Option<usize> {
        self.leaves += 1;
        let cert = certificate(self.g, &lab);
        let common = |p: &[usize]| p.iter().zip(path).take_while(|(a, b)| a == b).count();
        if let Some(f) = &self.first {
            if f.cert == cert {
                let a = Search::automorphism(&lab, &f.lab);
                let d = common(&f.path);
                self.automorphisms.push(a);
                return Some(d);
            }
        }
        if let Some(b) = &self.best {
            if b.cert == cert {
                let a = Search::automorphism(&lab, &b.lab);
                let d = common(&b.path);
                self.automorphisms.push(a);
                return Some(d);
            }
        }
        let leaf = Leaf { path: path.to_vec(), lab, cert };
        if self.first.is_none() {
            self.first = Some(Leaf { path: leaf.path.clone(), lab: leaf.lab.clone(), cert: leaf.cert.clone() });
        }
        if self.best.as_ref().is_none_or(|b| leaf.cert < b.cert) {
            self.best = Some(leaf);
        }
        None
    }
}

/// Canonical form respecting an initial vertex colouring.
pub fn canonical_label_colored(g: &SimpleGraph, colors: &[u32]) -> Result<CanonicalForm> {
    if colors.len() != g.n {
        return Err(Error::InvalidGraph(format!("{} colours for {} vertices", colors.len(), g.n)));
    }
    let init = rerank(&colors.iter().map(|&c| c as u64).collect::<Vec<_>>());
    let mut s = Search { g, first: None, best: None, automorphisms: Vec::new(), leaves: 0 };
    if g.n > 0 {
        s.visit(init.clone(), &mut Vec::new());
    }
    let lab: Vec<u32> = s.best.map(|b| b.lab).unwrap_or_default();
    let labeling: Vec<usize> = lab.iter().map(|&l| l as usize).collect();
    let mut order = vec![0; g.n];
    for (v, &l) in labeling.iter().enumerate() {
        order[l] = v;
    }
    let edges = certificate(g, &lab).into_iter().map(|(a, b)| (a as usize, b as usize)).collect();
    let mut colors_out: Vec<u32> = order.iter().map(|&v| init[v]).collect();
    colors_out.shrink_to_fit();
    Ok(CanonicalForm { labeling, order, edges, colors: colors_out, leaves_visited: s.leaves, automorphisms: s.automorphisms.len() })
}

pub fn canonical_label(g: &SimpleGraph) -> CanonicalForm {
    canonical_label_colored(g, &vec![0; g.n]).expect("uniform colouring")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IsoResult {
    /// `map[v]` is the image in the right graph of left vertex v.
    Isomorphic { map: Vec<usize> },
    NotIsomorphic { reason: String },
}

/// Whether `map` is a bijection carrying edges onto edges and non-edges onto non-edges.
pub fn verify_isomorphism(g1: &SimpleGraph, g2: &SimpleGraph, map: &[usize]) -> bool {
    g1.n == g2.n
        && g1.edges.len() == g2.edges.len()
        && is_permutation(map, g1.n)
        && g1.edges.iter().all(|&(u, v)| g2.has_edge(map[u], map[v]))
}

pub fn isomorphism_colored(g1: &SimpleGraph, c1: &[u32], g2: &SimpleGraph, c2: &[u32]) -> Result<IsoResult> {
    if g1.n != g2.n || g1.edges.len() != g2.edges.len() {
        return Ok(IsoResult::NotIsomorphic { reason: "vertex or edge counts differ".into() });
    }
    let (i1, i2) = (invariants(g1), invariants(g2));
    if i1 != i2 {
        return Ok(IsoResult::NotIsomorphic { reason: "degree, triangle or common-neighbour statistics differ".into() });
    }
    let (f1, f2) = (canonical_label_colored(g1, c1)?, canonical_label_colored(g2, c2)?);
    let same_colors = {
        let mut a: Vec<u32> = c1.to_vec();
        let mut b: Vec<u32> = c2.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    };
    if f1.edges != f2.edges || !same_colors || f1.order.iter().zip(&f2.order).any(|(&u, &v)| c1[u] != c2[v]) {
        return Ok(IsoResult::NotIsomorphic { reason: "canonical forms differ".into() });
    }
    let map: Vec<usize> = (0..g1.n).map(|v| f2.order[f1.labeling[v]]).collect();
    if !verify_isomorphism(g1, g2, &map) {
        return Err(Error::InvalidGraph("canonical forms agree but the induced map is not an isomorphism".into()));
    }
    Ok(IsoResult::Isomorphic { map })
}

pub fn isomorphism(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<IsoResult> {
    isomorphism_colored(g1, &vec![0; g1.n], g2, &vec![0; g2.n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn petersen() -> SimpleGraph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        SimpleGraph::new(10, e).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SimpleGraph::new(3, [(0, 0)]).is_err());
        assert!(SimpleGraph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn empty_graph() {
        let g = SimpleGraph::new(3, []).unwrap();
        let c = canonical_label(&g);
        assert!(c.edges.is_empty());
        assert_eq!(c.labeling.len(), 3);
    }

    #[test]
    fn petersen_automorphisms_and_relabeling() {
        let g = petersen();
        let c = canonical_label(&g);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let mut p: Vec<usize> = (0..10).collect();
            p.shuffle(&mut rng);
            let h = g.permuted(&p).unwrap();
            assert_eq!(canonical_label(&h).edges, c.edges);
            match isomorphism(&g, &h).unwrap() {
                IsoResult::Isomorphic { map } => assert!(verify_isomorphism(&g, &h, &map)),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn non_isomorphic_graphs() {
        let cycle6 = SimpleGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let two_triangles = SimpleGraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(matches!(isomorphism(&cycle6, &two_triangles).unwrap(), IsoResult::NotIsomorphic { .. }));
    }

    #[test]
    fn colours_are_respected() {
        let path = SimpleGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let r = isomorphism_colored(&path, &[0, 1, 0], &path, &[1, 0, 0]).unwrap();
        assert!(matches!(r, IsoResult::NotIsomorphic { .. }));
        let r = isomorphism_colored(&path, &[1, 0, 0], &path, &[0, 0, 1]).unwrap();
        assert_eq!(r, IsoResult::Isomorphic { map: vec![2, 1, 0] });
    }

    fn arb_graph() -> impl Strategy<Value = (SimpleGraph, Vec<usize>)> {
        (2usize..12).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let m = pairs.len();
            (prop::collection::vec(any::<bool>(), m), Just(pairs), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
                .prop_map(move |(mask, pairs, perm)| {
                    let e = pairs.into_iter().zip(mask).filter(|(_, b)| *b).map(|(p, _)| p);
                    (SimpleGraph::new(n, e).unwrap(), perm)
                })
        })
    }

    proptest! {
        #[test]
        fn canonical_form_is_invariant((g, perm) in arb_graph()) {
            let h = g.permuted(&perm).unwrap();
            prop_assert_eq!(canonical_label(&g).edges, canonical_label(&h).edges);
            let ok = matches!(isomorphism(&g, &h).unwrap(), IsoResult::Isomorphic { ref map } if verify_isomorphism(&g, &h, map));
            prop_assert!(ok);
        }
    }
}
