//! Finite simple graphs with positive integer labels, the standard families
//! (including the one-sided infinite path and star, handled through finite
//! windows), induced subgraphs, the clique blow-up `G(m)`, and perfect
//! elimination orderings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use crate::exponent::ExponentVector;
use crate::{Error, Result};

pub type Label = u32;

/// A finite simple graph. Labels are distinct positive integers kept in
/// ascending order; adjacency is stored symmetrically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<Label>,
    adjacency: BTreeMap<Label, BTreeSet<Label>>,
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn edgeless<I: IntoIterator<Item = Label>>(labels: I) -> Result<Graph> {
        let mut adjacency = BTreeMap::new();
        for l in labels {
            if l == 0 {
                return Err(Error::LabelOutOfRange { label: 0, n: 0 });
            }
            adjacency.insert(l, BTreeSet::new());
        }
        let labels = adjacency.keys().copied().collect();
        Ok(Graph { labels, adjacency })
    }

    /// Graph on arbitrary labels. Duplicate and reversed pairs collapse.
    pub fn from_edges<I, E>(labels: I, edges: E) -> Result<Graph>
    where
        I: IntoIterator<Item = Label>,
        E: IntoIterator<Item = (Label, Label)>,
    {
        let mut g = Graph::edgeless(labels)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: Label, v: Label) -> Result<()> {
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        for w in [u, v] {
            if !self.adjacency.contains_key(&w) {
                return Err(Error::UnknownVertex(w));
            }
        }
        self.adjacency.get_mut(&u).unwrap().insert(v);
        self.adjacency.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn contains(&self, v: Label) -> bool {
        self.adjacency.contains_key(&v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.adjacency
            .iter()
            .flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: Label, v: Label) -> bool {
        self.adjacency.get(&u).is_some_and(|ns| ns.contains(&v))
    }

    pub fn neighbors(&self, v: Label) -> impl Iterator<Item = Label> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: Label) -> usize {
        self.adjacency.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn is_independent(&self, set: &[Label]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &u)| set[k + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[Label]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &u)| set[k + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Induced subgraph on `subset`, keeping the original labels.
    pub fn induced_subgraph(&self, subset: &[Label]) -> Result<Graph> {
        if let Some(&bad) = subset.iter().find(|v| !self.contains(**v)) {
            return Err(Error::UnknownVertex(bad));
        }
        let keep: BTreeSet<Label> = subset.iter().copied().collect();
        let adjacency = keep
            .iter()
            .map(|&v| {
                let ns = self.adjacency[&v].intersection(&keep).copied().collect();
                (v, ns)
            })
            .collect();
        Ok(Graph { labels: keep.into_iter().collect(), adjacency })
    }

    /// Same graph with every label `v` replaced by `map(v)`. The map must be injective.
    pub fn relabel(&self, map: impl Fn(Label) -> Label) -> Result<Graph> {
        let labels: Vec<Label> = self.labels.iter().map(|&v| map(v)).collect();
        let distinct: BTreeSet<Label> = labels.iter().copied().collect();
        if distinct.len() != labels.len() {
            return Err(Error::NotAPermutation("relabelling is not injective".into()));
        }
        Graph::from_edges(labels, self.edges().map(|(u, v)| (map(u), map(v))))
    }

    /// All independent sets (including the empty set) of size at most `max_size`,
    /// each as an ascending label list.
    pub fn independent_sets(&self, max_size: usize) -> Vec<Vec<Label>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.grow_independent(0, max_size, &mut current, &mut out);
        out
    }

    fn grow_independent(&self, start: usize, max_size: usize, current: &mut Vec<Label>, out: &mut Vec<Vec<Label>>) {
        out.push(current.clone());
        if current.len() == max_size {
            return;
        }
        for k in start..self.labels.len() {
            let v = self.labels[k];
            if current.iter().all(|&u| !self.has_edge(u, v)) {
                current.push(v);
                self.grow_independent(k + 1, max_size, current, out);
                current.pop();
            }
        }
    }

    /// Adjacency as bitmasks over label positions. Requires at most 64 vertices.
    pub(crate) fn bitmasks(&self) -> Vec<u64> {
        assert!(self.labels.len() <= 64, "bitmask view needs at most 64 vertices");
        let pos: BTreeMap<Label, usize> = self.labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        self.labels
            .iter()
            .map(|v| self.adjacency[v].iter().fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ vertices: {:?}, edges: {:?} }}", self.labels, self.edges().collect::<Vec<_>>())
    }
}

/// Graph on `1..=n` from a list of label pairs.
pub fn build_graph(n: usize, edges: &[(Label, Label)]) -> Result<Graph> {
    for &(u, v) in edges {
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        for w in [u, v] {
            if w == 0 || w as usize > n {
                return Err(Error::LabelOutOfRange { label: w, n });
            }
        }
    }
    Graph::from_edges(1..=n as Label, edges.iter().copied())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
}

/// Member of a standard family on `1..=n`: paths and cycles use consecutive
/// labels, the star has its centre at 1.
pub fn family_graph(kind: FamilyKind, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamilySize(format!("{kind:?} needs at least one vertex")));
    }
    let n32 = n as Label;
    let edges: Vec<(Label, Label)> = match kind {
        FamilyKind::Path => (1..n32).map(|i| (i, i + 1)).collect(),
        FamilyKind::Cycle => {
            if n < 3 {
                return Err(Error::InvalidFamilySize(format!("cycle needs n >= 3, got {n}")));
            }
            (1..n32).map(|i| (i, i + 1)).chain(std::iter::once((n32, 1))).collect()
        }
        FamilyKind::Star => (2..=n32).map(|i| (1, i)).collect(),
        FamilyKind::Complete => (1..=n32).flat_map(|i| (i + 1..=n32).map(move |j| (i, j))).collect(),
    };
    build_graph(n, &edges)
}

/// A graph given by a rule rather than a finite vertex list. The infinite
/// kinds live on the positive integers and are only ever looked at through a
/// finite window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    PathInfinite,
    StarInfinite,
    Explicit(Graph),
}

impl GraphFamily {
    pub fn is_infinite(&self) -> bool {
        matches!(self, GraphFamily::PathInfinite | GraphFamily::StarInfinite)
    }

    /// The whole graph, for finite kinds.
    pub fn finite_graph(&self) -> Result<Option<Graph>> {
        Ok(Some(match self {
            GraphFamily::Path(n) => family_graph(FamilyKind::Path, *n)?,
            GraphFamily::Cycle(n) => family_graph(FamilyKind::Cycle, *n)?,
            GraphFamily::Star(n) => family_graph(FamilyKind::Star, *n)?,
            GraphFamily::Complete(n) => family_graph(FamilyKind::Complete, *n)?,
            GraphFamily::Explicit(g) => g.clone(),
            GraphFamily::PathInfinite | GraphFamily::StarInfinite => return Ok(None),
        }))
    }

    /// Induced subgraph on a finite vertex set.
    pub fn materialize(&self, vertices: &[Label]) -> Result<Graph> {
        match self {
            GraphFamily::PathInfinite => {
                let set: BTreeSet<Label> = vertices.iter().copied().collect();
                let edges: Vec<_> = set.iter().filter(|&&v| set.contains(&(v + 1))).map(|&v| (v, v + 1)).collect();
                Graph::from_edges(set.iter().copied(), edges)
            }
            GraphFamily::StarInfinite => {
                let set: BTreeSet<Label> = vertices.iter().copied().collect();
                let edges: Vec<_> = if set.contains(&1) {
                    set.iter().filter(|&&v| v != 1).map(|&v| (1, v)).collect()
                } else {
                    Vec::new()
                };
                Graph::from_edges(set.iter().copied(), edges)
            }
            _ => self.finite_graph()?.expect("finite kind").induced_subgraph(vertices),
        }
    }

    /// Short name in the CLI mini-language.
    pub fn spec_name(&self) -> String {
        match self {
            GraphFamily::Path(n) => format!("P:{n}"),
            GraphFamily::Cycle(n) => format!("C:{n}"),
            GraphFamily::Star(n) => format!("S:{n}"),
            GraphFamily::Complete(n) => format!("K:{n}"),
            GraphFamily::PathInfinite => "Pinf".into(),
            GraphFamily::StarInfinite => "Sinf".into(),
            GraphFamily::Explicit(g) => format!("explicit({} vertices, {} edges)", g.vertex_count(), g.edge_count()),
        }
    }

    /// Parses `P:n`, `C:n`, `S:n`, `K:n`, `Pinf`, `Sinf` or `file:<path>`.
    pub fn parse(spec: &str) -> Result<GraphFamily> {
        let spec = spec.trim();
        match spec {
            "Pinf" => return Ok(GraphFamily::PathInfinite),
            "Sinf" => return Ok(GraphFamily::StarInfinite),
            _ => {}
        }
        if let Some(path) = spec.strip_prefix("file:") {
            return read_edge_list(Path::new(path)).map(GraphFamily::Explicit);
        }
        let (kind, n) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("unrecognised graph spec {spec:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count in {spec:?}")))?;
        let family = match kind {
            "P" => GraphFamily::Path(n),
            "C" => GraphFamily::Cycle(n),
            "S" => GraphFamily::Star(n),
            "K" => GraphFamily::Complete(n),
            _ => return Err(Error::Parse(format!("unknown family {kind:?} in {spec:?}"))),
        };
        // Surface size errors at parse time.
        family.finite_graph()?;
        Ok(family)
    }
}

/// Parses an edge-list document: vertex count on the first line, then one
/// `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace().map(str::parse::<Label>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
        }
    }
    build_graph(n, &edges)
}

pub fn read_edge_list(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text)
}

/// The blow-up `G(m)` together with the origin `(i, copy)` of each new vertex.
/// New vertex `k` (1-based) corresponds to `origin[k - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinGraph {
    pub graph: Graph,
    pub origin: Vec<(Label, u32)>,
}

impl JoinGraph {
    pub fn label_of(&self, vertex: Label, copy: u32) -> Option<Label> {
        self.origin.iter().position(|&o| o == (vertex, copy)).map(|k| k as Label + 1)
    }
}

/// Replaces each `i` in the support of `m` by a clique of size `m_i`, joining
/// blocks `i` and `j` completely whenever `i ~ j`. Blocks follow label order,
/// copies are numbered from 1.
pub fn join_graph(g: &Graph, m: &ExponentVector) -> Result<JoinGraph> {
    let mut origin = Vec::new();
    for (v, e) in m.iter() {
        if !g.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        origin.extend((1..=e).map(|c| (v, c)));
    }
    let mut edges = Vec::new();
    for a in 0..origin.len() {
        for b in a + 1..origin.len() {
            let (i, _) = origin[a];
            let (j, _) = origin[b];
            if i == j || g.has_edge(i, j) {
                edges.push((a as Label + 1, b as Label + 1));
            }
        }
    }
    let graph = Graph::from_edges(1..=origin.len() as Label, edges)?;
    Ok(JoinGraph { graph, origin })
}

/// A perfect elimination ordering: every vertex's earlier neighbours form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PEOrdering {
    order: Vec<Label>,
    rank: BTreeMap<Label, usize>,
    earlier_neighbors: BTreeMap<Label, BTreeSet<Label>>,
}

impl PEOrdering {
    pub fn order(&self) -> &[Label] {
        &self.order
    }

    pub fn rank(&self, v: Label) -> Option<usize> {
        self.rank.get(&v).copied()
    }

    pub fn earlier_neighbors(&self, v: Label) -> Option<&BTreeSet<Label>> {
        self.earlier_neighbors.get(&v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeoCheck {
    Valid(PEOrdering),
    /// First vertex (in order) whose earlier neighbours `left`, `right` are non-adjacent.
    Violation { vertex: Label, left: Label, right: Label },
}

impl PeoCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, PeoCheck::Valid(_))
    }
}

pub fn verify_peo(g: &Graph, order: &[Label]) -> Result<PeoCheck> {
    let rank: BTreeMap<Label, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if rank.len() != order.len() || order.len() != g.vertex_count() || order.iter().any(|&v| !g.contains(v)) {
        return Err(Error::NotAPermutation(format!("{order:?}")));
    }
    let mut earlier_neighbors = BTreeMap::new();
    for (r, &v) in order.iter().enumerate() {
        let earlier: BTreeSet<Label> = g.neighbors(v).filter(|w| rank[w] < r).collect();
        let by_rank = {
            let mut e: Vec<Label> = earlier.iter().copied().collect();
            e.sort_by_key(|w| rank[w]);
            e
        };
        for (a, &x) in by_rank.iter().enumerate() {
            if let Some(&y) = by_rank[a + 1..].iter().find(|&&y| !g.has_edge(x, y)) {
                return Ok(PeoCheck::Violation { vertex: v, left: x, right: y });
            }
        }
        earlier_neighbors.insert(v, earlier);
    }
    Ok(PeoCheck::Valid(PEOrdering { order: order.to_vec(), rank, earlier_neighbors }))
}

/// Maximum-cardinality search, lowest label first on ties. The visit order
/// is a perfect elimination ordering exactly when the graph is chordal; the
/// candidate is always checked before being returned.
pub fn find_peo(g: &Graph) -> Option<PEOrdering> {
    let n = g.vertex_count();
    let mut weight: BTreeMap<Label, usize> = g.labels().iter().map(|&v| (v, 0)).collect();
    let mut order = Vec::with_capacity(n);
    while !weight.is_empty() {
        // heaviest first; equal weights compare the lower label as greater
        let (&v, _) = weight
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
            .expect("non-empty");
        weight.remove(&v);
        for w in g.neighbors(v) {
            if let Some(c) = weight.get_mut(&w) {
                *c += 1;
            }
        }
        order.push(v);
    }
    match verify_peo(g, &order) {
        Ok(PeoCheck::Valid(p)) => Some(p),
        _ => None,
    }
}

/// True iff no vertex subset of size at least 4 induces a cycle. Exponential;
/// meant as an oracle for small graphs.
pub fn is_chordal_bruteforce(g: &Graph) -> bool {
    induced_cycles(g, 4).is_empty()
}

/// Vertex sets (ascending) of all induced cycles with at least `min_len` vertices.
pub fn induced_cycles(g: &Graph, min_len: usize) -> Vec<Vec<Label>> {
    let n = g.vertex_count();
    assert!(n <= 30, "subset enumeration limited to 30 vertices");
    let masks = g.bitmasks();
    let mut out = Vec::new();
    for subset in 1u64..(1u64 << n) {
        let size = subset.count_ones() as usize;
        if size < min_len.max(3) {
            continue;
        }
        let all_degree_two = (0..n)
            .filter(|&i| subset >> i & 1 == 1)
            .all(|i| (masks[i] & subset).count_ones() == 2);
        if all_degree_two && is_connected_mask(&masks, subset) {
            out.push((0..n).filter(|&i| subset >> i & 1 == 1).map(|i| g.labels()[i]).collect());
        }
    }
    out
}

fn is_connected_mask(masks: &[u64], subset: u64) -> bool {
    let start = subset.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let i = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let next = masks[i] & subset & !seen;
        seen |= next;
        frontier |= next;
    }
    seen == subset
}

/// Every labelled graph on `1..=n`, edge `k` of the lexicographic pair list
/// present iff bit `k` of the index is set.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Label, Label)> = (1..=n as Label)
        .flat_map(|i| (i + 1..=n as Label).map(move |j| (i, j)))
        .collect();
    assert!(pairs.len() < 32, "too many labelled graphs to enumerate");
    (0u32..(1u32 << pairs.len())).map(move |bits| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &e)| e).collect();
        build_graph(n, &edges).expect("valid pairs")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(pairs: &[(Label, u32)]) -> ExponentVector {
        ExponentVector::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn build_graph_examples() {
        let k2 = build_graph(2, &[(1, 2)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let c4 = build_graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(c4, family_graph(FamilyKind::Cycle, 4).unwrap());
        let dedup = build_graph(3, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(dedup.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(dedup.vertex_count(), 3);
    }

    #[test]
    fn build_graph_rejects_bad_input() {
        assert_eq!(build_graph(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(build_graph(3, &[(1, 4)]), Err(Error::LabelOutOfRange { label: 4, n: 3 }));
        assert_eq!(build_graph(3, &[(0, 2)]), Err(Error::LabelOutOfRange { label: 0, n: 3 }));
    }

    #[test]
    fn families() {
        let p3 = family_graph(FamilyKind::Path, 3).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        let s4 = family_graph(FamilyKind::Star, 4).unwrap();
        assert_eq!(s4.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (1, 4)]);
        let k1 = family_graph(FamilyKind::Complete, 1).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        assert!(family_graph(FamilyKind::Cycle, 2).is_err());
        assert!(family_graph(FamilyKind::Path, 0).is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let c4 = family_graph(FamilyKind::Cycle, 4).unwrap();
        let p = c4.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        assert_eq!(c4.induced_subgraph(&[]).unwrap().vertex_count(), 0);
        let c5 = family_graph(FamilyKind::Cycle, 5).unwrap();
        let two = c5.induced_subgraph(&[1, 3]).unwrap();
        assert_eq!((two.vertex_count(), two.edge_count()), (2, 0));
        assert_eq!(c4.induced_subgraph(&[1, 9]), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn join_graph_examples() {
        let k2 = family_graph(FamilyKind::Complete, 2).unwrap();
        let j = join_graph(&k2, &ev(&[(1, 2), (2, 1)])).unwrap();
        assert_eq!(j.graph, family_graph(FamilyKind::Complete, 3).unwrap());

        let two = Graph::edgeless([1, 2]).unwrap();
        let j = join_graph(&two, &ev(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(j.graph.edge_count(), 0);

        let p3 = family_graph(FamilyKind::Path, 3).unwrap();
        let j = join_graph(&p3, &ev(&[(1, 1), (2, 2), (3, 1)])).unwrap();
        assert_eq!(j.origin, vec![(1, 1), (2, 1), (2, 2), (3, 1)]);
        // block 2 = {2,3} is an edge, joined to 1 and 4; 1 and 4 non-adjacent
        assert_eq!(j.graph.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(j.label_of(2, 2), Some(3));
    }

    #[test]
    fn peo_examples() {
        let p3 = family_graph(FamilyKind::Path, 3).unwrap();
        let peo = find_peo(&p3).unwrap();
        assert_eq!(peo.order(), &[1, 2, 3]);
        assert!(peo.earlier_neighbors(1).unwrap().is_empty());
        assert_eq!(peo.earlier_neighbors(3).unwrap().iter().copied().collect::<Vec<_>>(), vec![2]);

        let c4 = family_graph(FamilyKind::Cycle, 4).unwrap();
        assert!(find_peo(&c4).is_none());
        let k4 = family_graph(FamilyKind::Complete, 4).unwrap();
        assert_eq!(find_peo(&k4).unwrap().order(), &[1, 2, 3, 4]);
    }

    #[test]
    fn verify_peo_examples() {
        let c4 = family_graph(FamilyKind::Cycle, 4).unwrap();
        assert_eq!(
            verify_peo(&c4, &[1, 2, 3, 4]).unwrap(),
            PeoCheck::Violation { vertex: 4, left: 1, right: 3 }
        );
        let p4 = family_graph(FamilyKind::Path, 4).unwrap();
        assert!(verify_peo(&p4, &[1, 2, 3, 4]).unwrap().is_valid());
        assert!(verify_peo(&p4, &[1, 2, 3]).is_err());
        assert!(verify_peo(&p4, &[1, 2, 2, 3]).is_err());
    }

    #[test]
    fn c4_has_no_peo_under_any_permutation() {
        let c4 = family_graph(FamilyKind::Cycle, 4).unwrap();
        let mut count = 0;
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        let order = [a, b, c, d];
                        let distinct: BTreeSet<_> = order.iter().collect();
                        if distinct.len() == 4 {
                            count += 1;
                            assert!(!verify_peo(&c4, &order).unwrap().is_valid());
                        }
                    }
                }
            }
        }
        assert_eq!(count, 24);
    }

    #[test]
    fn bruteforce_chordality() {
        assert!(!is_chordal_bruteforce(&family_graph(FamilyKind::Cycle, 5).unwrap()));
        assert!(is_chordal_bruteforce(&family_graph(FamilyKind::Star, 6).unwrap()));
        let tree = build_graph(6, &[(1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap();
        assert!(is_chordal_bruteforce(&tree));
        let chorded = build_graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]).unwrap();
        assert!(is_chordal_bruteforce(&chorded));
        assert!(find_peo(&chorded).is_some());
    }

    #[test]
    fn infinite_families_materialize_to_finite_members() {
        for n in 1..=8 {
            let window: Vec<Label> = (1..=n as Label).collect();
            assert_eq!(
                GraphFamily::PathInfinite.materialize(&window).unwrap(),
                family_graph(FamilyKind::Path, n).unwrap()
            );
            assert_eq!(
                GraphFamily::StarInfinite.materialize(&window).unwrap(),
                family_graph(FamilyKind::Star, n).unwrap()
            );
            let p = GraphFamily::PathInfinite.materialize(&window).unwrap();
            assert!(verify_peo(&p, &window).unwrap().is_valid());
        }
        let gap = GraphFamily::PathInfinite.materialize(&[2, 3, 7]).unwrap();
        assert_eq!(gap.edges().collect::<Vec<_>>(), vec![(2, 3)]);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(GraphFamily::parse("P:4").unwrap(), GraphFamily::Path(4));
        assert_eq!(GraphFamily::parse("Sinf").unwrap(), GraphFamily::StarInfinite);
        assert!(GraphFamily::parse("C:2").is_err());
        assert!(GraphFamily::parse("Q:3").is_err());
        let g = parse_edge_list("4\n1 2\n2 3\n# comment\n3 4\n4 1\n").unwrap();
        assert_eq!(g, family_graph(FamilyKind::Cycle, 4).unwrap());
        assert!(parse_edge_list("3\n1 1\n").is_err());
    }

    #[test]
    fn labeled_graph_enumeration() {
        assert_eq!(all_labeled_graphs(4).count(), 64);
        assert_eq!(all_labeled_graphs(5).count(), 1024);
    }
}
