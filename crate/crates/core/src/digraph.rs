//! Directed graphs, oriented paths and directed caterpillars.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    InvalidVertex(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(usize, usize),
    #[error("underlying graph is not a tree")]
    NotATree,
    #[error("underlying graph is not a simple path")]
    NotAPath,
    #[error("tree is not a caterpillar: {0}")]
    NotACaterpillar(String),
    #[error("invalid edge-sign string: {0}")]
    BadSigns(String),
}

/// A digraph on vertices `0..n`; `(u, v)` is the edge `u -> v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidVertex(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::ParallelEdge(u, v));
            }
        }
        Ok(Digraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Undirected adjacency lists, each sorted.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v).count()
    }

    pub fn sources(&self) -> Vec<usize> {
        let mut indeg = vec![0usize; self.n];
        for &(_, v) in &self.edges {
            indeg[v] += 1;
        }
        (0..self.n).filter(|&v| indeg[v] == 0).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        let mut outdeg = vec![0usize; self.n];
        for &(u, _) in &self.edges {
            outdeg[u] += 1;
        }
        (0..self.n).filter(|&v| outdeg[v] == 0).collect()
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        Digraph { n: self.n, edges: self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect() }
    }
}

/// Connected, acyclic underlying graph with exactly `n - 1` edges.
pub fn validate_tree(g: &Digraph) -> bool {
    if g.n == 0 || g.edges.len() != g.n - 1 {
        return false;
    }
    let mut parent: Vec<usize> = (0..g.n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in &g.edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// An oriented path `v_1 .. v_n` with explicit reading direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedPath {
    /// Vertex ids along the path.
    order: Vec<usize>,
    /// `forward[i]` iff the edge between `order[i]` and `order[i + 1]` points to `order[i + 1]`.
    forward: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Section {
    /// Path position of the first vertex.
    pub start: usize,
    /// Path position of the last vertex (inclusive).
    pub end: usize,
    pub forward: bool,
}

impl Section {
    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Maximal monotone subpaths and the switches between them, in path positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionDecomposition {
    pub sections: Vec<Section>,
    pub switches: Vec<usize>,
}

impl OrientedPath {
    /// Path on vertices `0..=forward.len()` read in id order.
    pub fn from_forward(forward: Vec<bool>) -> Self {
        OrientedPath { order: (0..=forward.len()).collect(), forward }
    }

    pub fn from_parts(order: Vec<usize>, forward: Vec<bool>) -> Result<Self, GraphError> {
        if order.is_empty() || forward.len() + 1 != order.len() {
            return Err(GraphError::NotAPath);
        }
        let distinct: HashSet<_> = order.iter().collect();
        if distinct.len() != order.len() || order.iter().any(|&v| v >= order.len()) {
            return Err(GraphError::NotAPath);
        }
        Ok(OrientedPath { order, forward })
    }

    /// Parse a compact sign string: `+` is a forward edge, `-` (or U+2212) backward.
    pub fn from_signs(signs: &str) -> Result<Self, GraphError> {
        let forward = signs
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(true),
                '-' | '\u{2212}' => Ok(false),
                other => Err(GraphError::BadSigns(format!("unexpected character `{other}`"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(OrientedPath::from_forward(forward))
    }

    /// Recover the path structure of a digraph. Reading starts at the endpoint
    /// with the smaller id.
    pub fn from_digraph(g: &Digraph) -> Result<Self, GraphError> {
        if !validate_tree(g) {
            return Err(GraphError::NotAPath);
        }
        if g.n() == 1 {
            return Ok(OrientedPath { order: vec![0], forward: vec![] });
        }
        let adj = g.adjacency();
        if adj.iter().any(|a| a.len() > 2) {
            return Err(GraphError::NotAPath);
        }
        let start = (0..g.n()).find(|&v| adj[v].len() == 1).ok_or(GraphError::NotAPath)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        let forward = order.windows(2).map(|w| g.has_edge(w[0], w[1])).collect();
        Ok(OrientedPath { order, forward })
    }

    pub fn signs(&self) -> String {
        self.forward.iter().map(|&f| if f { '+' } else { '-' }).collect()
    }

    pub fn to_digraph(&self) -> Digraph {
        let edges = self
            .order
            .windows(2)
            .zip(&self.forward)
            .map(|(w, &f)| if f { (w[0], w[1]) } else { (w[1], w[0]) })
            .collect();
        Digraph { n: self.order.len(), edges }
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    /// Vertex id at path position `i`.
    pub fn vertex(&self, i: usize) -> usize {
        self.order[i]
    }

    /// The same digraph read from the other end.
    pub fn reverse(&self) -> OrientedPath {
        OrientedPath {
            order: self.order.iter().rev().copied().collect(),
            forward: self.forward.iter().rev().map(|f| !f).collect(),
        }
    }

    /// Reverse every edge, keeping the reading direction.
    pub fn flip_edges(&self) -> OrientedPath {
        OrientedPath { order: self.order.clone(), forward: self.forward.iter().map(|f| !f).collect() }
    }

    pub fn sections(&self) -> SectionDecomposition {
        sections(self)
    }

    pub fn section_count(&self) -> usize {
        if self.forward.is_empty() {
            0
        } else {
            1 + self.forward.windows(2).filter(|w| w[0] != w[1]).count()
        }
    }
}

/// Maximal monotone subpaths of `p`.
pub fn sections(p: &OrientedPath) -> SectionDecomposition {
    let mut sections = Vec::new();
    let mut switches = vec![0];
    let mut start = 0;
    for i in 0..p.forward.len() {
        let last = i + 1 == p.forward.len();
        if last || p.forward[i + 1] != p.forward[i] {
            sections.push(Section { start, end: i + 1, forward: p.forward[i] });
            switches.push(i + 1);
            start = i + 1;
        }
    }
    SectionDecomposition { sections, switches }
}

/// All `2^(n-1)` oriented paths on `n` vertices; bit `i` of the index set means
/// edge `i` is backward.
pub fn enumerate_paths(n: usize) -> Vec<OrientedPath> {
    assert!(n >= 1, "paths need at least one vertex");
    let m = n - 1;
    (0..1u64 << m).map(|mask| OrientedPath::from_forward((0..m).map(|i| mask >> i & 1 == 0).collect())).collect()
}

/// A directed caterpillar with a chosen backbone `v_1 .. v_r`.
///
/// `out_leaves[i]` is `A(v_i)` (leaves reached by edges leaving `v_i`) and
/// `in_leaves[i]` is `B(v_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caterpillar {
    graph: Digraph,
    backbone: Vec<usize>,
    out_leaves: Vec<Vec<usize>>,
    in_leaves: Vec<Vec<usize>>,
}

impl Caterpillar {
    /// Build with an explicit backbone. Every other vertex must be a leaf
    /// adjacent to the backbone.
    pub fn from_backbone(graph: Digraph, backbone: Vec<usize>) -> Result<Self, GraphError> {
        if !validate_tree(&graph) {
            return Err(GraphError::NotATree);
        }
        if backbone.is_empty() {
            return Err(GraphError::NotACaterpillar("empty backbone".into()));
        }
        let adj = graph.adjacency();
        let mut pos = vec![usize::MAX; graph.n()];
        for (i, &v) in backbone.iter().enumerate() {
            if v >= graph.n() || pos[v] != usize::MAX {
                return Err(GraphError::NotACaterpillar("backbone repeats a vertex".into()));
            }
            pos[v] = i;
        }
        for w in backbone.windows(2) {
            if !adj[w[0]].contains(&w[1]) {
                return Err(GraphError::NotACaterpillar(format!(
                    "backbone vertices {} and {} are not adjacent",
                    w[0], w[1]
                )));
            }
        }
        let r = backbone.len();
        let mut out_leaves = vec![Vec::new(); r];
        let mut in_leaves = vec![Vec::new(); r];
        for v in 0..graph.n() {
            if pos[v] != usize::MAX {
                continue;
            }
            if adj[v].len() != 1 || pos[adj[v][0]] == usize::MAX {
                return Err(GraphError::NotACaterpillar(format!(
                    "vertex {v} is neither on the backbone nor a leaf attached to it"
                )));
            }
            let host = adj[v][0];
            if graph.has_edge(host, v) {
                out_leaves[pos[host]].push(v);
            } else {
                in_leaves[pos[host]].push(v);
            }
        }
        Ok(Caterpillar { graph, backbone, out_leaves, in_leaves })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn backbone(&self) -> &[usize] {
        &self.backbone
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `A(v_i)`.
    pub fn out_leaves(&self, i: usize) -> &[usize] {
        &self.out_leaves[i]
    }

    /// `B(v_i)`.
    pub fn in_leaves(&self, i: usize) -> &[usize] {
        &self.in_leaves[i]
    }

    pub fn a(&self, i: usize) -> usize {
        self.out_leaves[i].len()
    }

    pub fn b(&self, i: usize) -> usize {
        self.in_leaves[i].len()
    }

    /// The backbone as an oriented path, read from `v_1`.
    pub fn backbone_path(&self) -> OrientedPath {
        let forward = self.backbone.windows(2).map(|w| self.graph.has_edge(w[0], w[1])).collect();
        OrientedPath { order: self.backbone.clone(), forward }
    }

    /// Number of switches of the backbone path (one for a single vertex).
    pub fn backbone_switches(&self) -> usize {
        self.backbone_path().section_count() + 1
    }

    pub fn reverse_backbone(&self) -> Caterpillar {
        let mut c = self.clone();
        c.backbone.reverse();
        c.out_leaves.reverse();
        c.in_leaves.reverse();
        c
    }
}

/// Split a directed tree into backbone and leaves.
///
/// The backbone is the path left after deleting all leaves, extended at each
/// end by one leaf whose edge continues the end section (so a monotone path
/// is its own backbone). It is read so that its first id is smaller than its
/// last.
pub fn caterpillar_decompose(g: &Digraph) -> Result<Caterpillar, GraphError> {
    if !validate_tree(g) {
        return Err(GraphError::NotATree);
    }
    let n = g.n();
    if n <= 2 {
        return Caterpillar::from_backbone(g.clone(), (0..n).collect());
    }
    let adj = g.adjacency();
    let core: BTreeSet<usize> = (0..n).filter(|&v| adj[v].len() >= 2).collect();
    let core_deg = |v: usize| adj[v].iter().filter(|w| core.contains(w)).count();
    if let Some(&v) = core.iter().find(|&&v| core_deg(v) > 2) {
        return Err(GraphError::NotACaterpillar(format!("vertex {v} has more than two non-leaf neighbours")));
    }
    let start = *core.iter().find(|&&v| core_deg(v) <= 1).expect("non-empty subtree");
    let mut backbone = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev && core.contains(&w)) {
        backbone.push(next);
        prev = cur;
        cur = next;
    }
    if backbone.len() >= 2 {
        let extend = |end: usize, inner: usize| -> Option<usize> {
            // edge end->inner continues as leaf->end
            let outward = g.has_edge(end, inner);
            adj[end].iter().copied().find(|&l| adj[l].len() == 1 && g.has_edge(l, end) == outward)
        };
        if let Some(l) = extend(backbone[0], backbone[1]) {
            backbone.insert(0, l);
        }
        let r = backbone.len();
        if let Some(l) = extend(backbone[r - 1], backbone[r - 2]) {
            backbone.push(l);
        }
    }
    if backbone[0] > backbone[backbone.len() - 1] {
        backbone.reverse();
    }
    Caterpillar::from_backbone(g.clone(), backbone)
}

/// A seeded oriented path on `n` vertices with exactly `k` sections.
pub fn generate_path(n: usize, k: usize, seed: u64) -> OrientedPath {
    assert!(n >= 2 && k >= 1 && k < n, "need 1 <= k <= n - 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5851_f42d_4c95_7f2d);
    let mut breaks: Vec<usize> = (1..n - 1).collect();
    breaks.shuffle(&mut rng);
    let mut breaks: BTreeSet<usize> = breaks.into_iter().take(k - 1).collect();
    let mut dir = rng.gen_bool(0.5);
    let mut forward = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        if breaks.remove(&i) {
            dir = !dir;
        }
        forward.push(dir);
    }
    OrientedPath::from_forward(forward)
}

/// A seeded caterpillar on `n` vertices whose backbone has exactly `switches`
/// switches. Vertex ids are shuffled.
pub fn generate_caterpillar(n: usize, switches: usize, seed: u64) -> Caterpillar {
    assert!(switches >= 2 && n >= switches, "need 2 <= switches <= n");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2545_f491_4f6c_dd1d);
    let r = rng.gen_range(switches..=n);
    let spine = generate_path(r, switches - 1, rng.gen());
    let mut edges: Vec<(usize, usize)> = spine.to_digraph().edges().to_vec();
    for leaf in r..n {
        let host = rng.gen_range(0..r);
        edges.push(if rng.gen_bool(0.5) { (host, leaf) } else { (leaf, host) });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let g = Digraph::new(n, edges).expect("generated edges are valid").relabel(&perm);
    let backbone = (0..r).map(|v| perm[v]).collect();
    Caterpillar::from_backbone(g, backbone).expect("generated caterpillar is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn section_examples() {
        let mono = OrientedPath::from_signs("++").unwrap();
        let d = mono.sections();
        assert_eq!(d.sections, vec![Section { start: 0, end: 2, forward: true }]);
        assert_eq!(d.switches, vec![0, 2]);

        let vee = OrientedPath::from_signs("+-").unwrap();
        let d = vee.sections();
        assert_eq!(d.sections.len(), 2);
        assert!(d.sections[0].forward && !d.sections[1].forward);
        assert_eq!(d.switches, vec![0, 1, 2]);

        let single = OrientedPath::from_signs("").unwrap();
        assert_eq!(single.section_count(), 0);
        assert_eq!(single.sections().switches, vec![0]);
    }

    #[test]
    fn sections_match_sign_scan() {
        for n in 2..=9 {
            for p in enumerate_paths(n) {
                let d = p.sections();
                let naive = 1 + (1..n - 1).filter(|&i| p.forward()[i] != p.forward()[i - 1]).count();
                assert_eq!(d.sections.len(), naive);
                assert!(!d.sections.is_empty() && d.sections.len() < n);
                assert_eq!(d.switches.len(), d.sections.len() + 1);
                // sections tile the edge sequence and alternate
                assert_eq!(d.sections[0].start, 0);
                assert_eq!(d.sections.last().unwrap().end, n - 1);
                for w in d.sections.windows(2) {
                    assert_eq!(w[0].end, w[1].start);
                    assert_ne!(w[0].forward, w[1].forward);
                }
                // switches are exactly the sources and sinks
                let g = p.to_digraph();
                let mut switch_ids: Vec<usize> = g.sources();
                switch_ids.extend(g.sinks());
                switch_ids.sort();
                let mut from_dec: Vec<usize> = d.switches.iter().map(|&i| p.vertex(i)).collect();
                from_dec.sort();
                assert_eq!(switch_ids, from_dec);
            }
        }
    }

    #[test]
    fn path_counts_by_sections() {
        assert_eq!(enumerate_paths(2).len(), 2);
        assert_eq!(enumerate_paths(8).len(), 128);
        assert_eq!(enumerate_paths(4).iter().filter(|p| p.section_count() == 2).count(), 4);
        for n in 2..=10u64 {
            let paths = enumerate_paths(n as usize);
            let mut total = 0;
            for k in 1..n {
                let rho = paths.iter().filter(|p| p.section_count() as u64 == k).count() as u64;
                assert_eq!(rho, 2 * binom(n - 2, k - 1));
                total += rho;
            }
            assert_eq!(total, 1 << (n - 1));
        }
    }

    #[test]
    fn reverse_preserves_sections_and_flips_directions() {
        for p in enumerate_paths(7) {
            let r = p.reverse();
            assert_eq!(r.section_count(), p.section_count());
            let (a, b) = (p.sections(), r.sections());
            for (x, y) in a.sections.iter().zip(b.sections.iter().rev()) {
                assert_eq!(x.forward, !y.forward);
                assert_eq!(x.len(), y.len());
            }
            assert_eq!(r.to_digraph().edges().len(), p.len() - 1);
            let mut e1 = p.to_digraph().edges().to_vec();
            let mut e2 = r.to_digraph().edges().to_vec();
            e1.sort();
            e2.sort();
            assert_eq!(e1, e2);
        }
    }

    #[test]
    fn path_roundtrip_through_digraph() {
        let p = OrientedPath::from_signs("+−+-").unwrap();
        let g = p.to_digraph();
        assert_eq!(OrientedPath::from_digraph(&g).unwrap(), p);
        let star = Digraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(OrientedPath::from_digraph(&star), Err(GraphError::NotAPath));
        assert!(OrientedPath::from_signs("+x").is_err());
    }

    #[test]
    fn digraph_rejects_bad_edges() {
        assert!(matches!(Digraph::new(2, vec![(0, 2)]), Err(GraphError::InvalidVertex(..))));
        assert_eq!(Digraph::new(2, vec![(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Digraph::new(2, vec![(0, 1), (1, 0)]), Err(GraphError::ParallelEdge(..))));
    }

    #[test]
    fn tree_validation() {
        assert!(validate_tree(&OrientedPath::from_signs("+-+").unwrap().to_digraph()));
        let triangle = Digraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!validate_tree(&triangle));
        let forest = Digraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(!validate_tree(&forest));
    }

    #[test]
    fn random_spanning_trees_of_k6_validate() {
        // oracle: a random Pruefer-free construction, each new vertex attached
        // to an earlier one, then relabelled
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut perm: Vec<usize> = (0..6).collect();
            perm.shuffle(&mut rng);
            let edges: Vec<(usize, usize)> = (1..6)
                .map(|v| {
                    let u = rng.gen_range(0..v);
                    if rng.gen_bool(0.5) {
                        (perm[u], perm[v])
                    } else {
                        (perm[v], perm[u])
                    }
                })
                .collect();
            assert!(validate_tree(&Digraph::new(6, edges).unwrap()));
        }
    }

    #[test]
    fn caterpillar_of_monotone_path_is_whole_path() {
        let p = OrientedPath::from_signs("++++").unwrap();
        let c = caterpillar_decompose(&p.to_digraph()).unwrap();
        assert_eq!(c.backbone(), &[0, 1, 2, 3, 4]);
        assert!((0..5).all(|i| c.a(i) == 0 && c.b(i) == 0));
        let back = OrientedPath::from_signs("---").unwrap();
        let c = caterpillar_decompose(&back.to_digraph()).unwrap();
        assert_eq!(c.backbone().len(), 4);
    }

    #[test]
    fn non_caterpillar_rejected() {
        // spine 0-1-2-3-4 with a two-edge arm 2-5-6 (5 is a degree-2 vertex off the spine)
        let g = Digraph::new(9, vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (1, 7), (3, 8)]).unwrap();
        assert!(matches!(caterpillar_decompose(&g), Err(GraphError::NotACaterpillar(_))));
        let cyc = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(caterpillar_decompose(&cyc), Err(GraphError::NotATree));
    }

    #[test]
    fn star_decomposes_to_single_vertex_backbone() {
        let g = Digraph::new(4, vec![(0, 1), (2, 0), (0, 3)]).unwrap();
        let c = caterpillar_decompose(&g).unwrap();
        assert_eq!(c.backbone(), &[0]);
        assert_eq!((c.a(0), c.b(0)), (2, 1));
        assert_eq!(c.backbone_switches(), 1);
    }

    #[test]
    fn generated_caterpillars_roundtrip() {
        for seed in 0..200 {
            let n = 4 + (seed as usize % 9);
            let k = 2 + (seed as usize % 3).min(n - 2);
            let built = generate_caterpillar(n, k, seed);
            assert_eq!(built.backbone_switches(), k);
            let total: usize = (0..built.backbone().len()).map(|i| 1 + built.a(i) + built.b(i)).sum();
            assert_eq!(total, n);

            let dec = caterpillar_decompose(built.graph()).unwrap();
            let total: usize = (0..dec.backbone().len()).map(|i| 1 + dec.a(i) + dec.b(i)).sum();
            assert_eq!(total, n);
            // the decomposed backbone contains every non-leaf vertex and never
            // has more switches than the generating backbone
            let adj = built.graph().adjacency();
            for (v, nb) in adj.iter().enumerate() {
                if nb.len() >= 2 {
                    assert!(dec.backbone().contains(&v));
                }
            }
            assert!(dec.backbone_switches() <= built.backbone_switches());
            // rebuilding from the decomposed backbone reproduces the graph
            let again = Caterpillar::from_backbone(built.graph().clone(), dec.backbone().to_vec()).unwrap();
            assert_eq!(again, dec);
        }
    }

    #[test]
    fn generated_paths_have_requested_sections() {
        for seed in 0..50 {
            for n in 2..10 {
                for k in 1..n {
                    assert_eq!(generate_path(n, k, seed).section_count(), k);
                }
            }
        }
    }
}
