//! Carter diagrams: signed bicolored graphs on a set of roots.
//!
//! Vertices carry a color (`alpha` or `beta`); every edge joins vertices of
//! different colors. A solid edge stands for inner product `-1` between the
//! two roots, a dotted edge for `+1`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{LinkageError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Alpha,
    Beta,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Alpha => Color::Beta,
            Color::Beta => Color::Alpha,
        }
    }
}

/// Chain tag for the two tails of the parametric `D_l(a_k)` family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chain {
    /// Tail hanging off `b1`, written `t<k>`.
    Tau,
    /// Tail hanging off `b2`, written `f<k>`.
    Phi,
}

/// A diagram vertex. The textual id is `a<k>`/`b<k>` for plain alpha/beta
/// vertices and `t<k>`/`f<k>` for chain vertices, whose color is stored
/// separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub chain: Option<Chain>,
    pub color: Color,
    pub index: u32,
}

impl VertexId {
    pub const fn alpha(index: u32) -> Self {
        VertexId {
            chain: None,
            color: Color::Alpha,
            index,
        }
    }

    pub const fn beta(index: u32) -> Self {
        VertexId {
            chain: None,
            color: Color::Beta,
            index,
        }
    }

    pub const fn tau(index: u32, color: Color) -> Self {
        VertexId {
            chain: Some(Chain::Tau),
            color,
            index,
        }
    }

    pub const fn phi(index: u32, color: Color) -> Self {
        VertexId {
            chain: Some(Chain::Phi),
            color,
            index,
        }
    }

    /// The textual id without color information.
    pub fn label(&self) -> String {
        self.to_string()
    }

    /// Parses an id together with its declared color. Plain ids must agree
    /// with the color their prefix implies.
    pub fn parse(id: &str, color: Color) -> Result<Self> {
        let bad = |why: &str| LinkageError::Parse(format!("vertex id {id:?}: {why}"));
        let mut chars = id.chars();
        let prefix = chars.next().ok_or_else(|| bad("empty"))?;
        let digits = chars.as_str();
        if digits.is_empty()
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || digits.starts_with('0')
        {
            return Err(bad("expected a positive index after the prefix"));
        }
        let index: u32 = digits.parse().map_err(|_| bad("index too large"))?;
        match prefix {
            'a' if color == Color::Alpha => Ok(VertexId::alpha(index)),
            'b' if color == Color::Beta => Ok(VertexId::beta(index)),
            'a' | 'b' => Err(bad("prefix contradicts declared color")),
            't' => Ok(VertexId::tau(index, color)),
            'f' => Ok(VertexId::phi(index, color)),
            _ => Err(bad("prefix must be one of a, b, t, f")),
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match (self.chain, self.color) {
            (Some(Chain::Tau), _) => 't',
            (Some(Chain::Phi), _) => 'f',
            (None, Color::Alpha) => 'a',
            (None, Color::Beta) => 'b',
        };
        write!(f, "{p}{}", self.index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeSign {
    Solid,
    Dotted,
}

impl EdgeSign {
    /// Inner product of the two roots joined by this edge.
    pub fn inner_product(self) -> i64 {
        match self {
            EdgeSign::Solid => -1,
            EdgeSign::Dotted => 1,
        }
    }

    pub fn from_inner_product(p: i64) -> Option<Self> {
        match p {
            -1 => Some(EdgeSign::Solid),
            1 => Some(EdgeSign::Dotted),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign: EdgeSign,
}

/// A structural problem found by [`CarterDiagram::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    DuplicateVertex(String),
    UnknownEndpoint(String),
    SelfLoop(String),
    DuplicateEdge(String, String),
    SameColorEdge(String, String),
    Disconnected { components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "diagram has no vertices"),
            Violation::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            Violation::UnknownEndpoint(v) => write!(f, "edge endpoint {v} is not a vertex"),
            Violation::SelfLoop(v) => write!(f, "self-loop at {v}"),
            Violation::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            Violation::SameColorEdge(u, v) => {
                write!(f, "edge {u}-{v} joins vertices of the same color")
            }
            Violation::Disconnected { components } => {
                write!(f, "diagram is disconnected ({components} components)")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarterDiagram {
    name: String,
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl CarterDiagram {
    /// Assembles a diagram without validating it; see [`validate`](Self::validate).
    pub fn new(name: impl Into<String>, vertices: Vec<VertexId>, edges: Vec<Edge>) -> Self {
        CarterDiagram {
            name: name.into(),
            vertices,
            edges,
        }
    }

    /// Convenience constructor from `(u, v, sign)` triples.
    pub fn from_edges(
        name: impl Into<String>,
        vertices: Vec<VertexId>,
        edges: &[(VertexId, VertexId, EdgeSign)],
    ) -> Self {
        let edges = edges
            .iter()
            .map(|&(u, v, sign)| Edge { u, v, sign })
            .collect();
        Self::new(name, vertices, edges)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Looks a vertex up by its textual id (`"a1"`, `"t2"`, ...).
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices.iter().copied().find(|v| v.label() == label)
    }

    pub fn require_index(&self, v: VertexId) -> Result<usize> {
        self.index_of(v)
            .ok_or_else(|| LinkageError::UnknownVertex(v.label()))
    }

    pub fn has_dotted_edges(&self) -> bool {
        self.edges.iter().any(|e| e.sign == EdgeSign::Dotted)
    }

    /// Symmetric matrix of pairwise inner products off the diagonal
    /// (`-1` solid, `+1` dotted, `0` unconnected) with `2` on the diagonal.
    /// Assumes endpoints are known vertices.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut g = vec![vec![0i64; n]; n];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        for e in &self.edges {
            if let (Some(i), Some(j)) = (self.index_of(e.u), self.index_of(e.v)) {
                g[i][j] = e.sign.inner_product();
                g[j][i] = e.sign.inner_product();
            }
        }
        g
    }

    /// Neighbor indices of each vertex.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let g = self.gram();
        (0..self.len())
            .map(|i| {
                (0..self.len())
                    .filter(|&j| j != i && g[i][j] != 0)
                    .collect()
            })
            .collect()
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        if self.vertices.is_empty() {
            out.push(Violation::Empty);
        }
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(v.label()) {
                out.push(Violation::DuplicateVertex(v.label()));
            }
        }
        let mut pairs = BTreeSet::new();
        for e in &self.edges {
            let (u, v) = (e.u.label(), e.v.label());
            let mut endpoints_ok = true;
            for (id, x) in [(e.u, &u), (e.v, &v)] {
                if self.index_of(id).is_none() {
                    out.push(Violation::UnknownEndpoint(x.clone()));
                    endpoints_ok = false;
                }
            }
            if e.u == e.v {
                out.push(Violation::SelfLoop(u.clone()));
                continue;
            }
            let key = if u < v {
                (u.clone(), v.clone())
            } else {
                (v.clone(), u.clone())
            };
            if !pairs.insert(key) {
                out.push(Violation::DuplicateEdge(u.clone(), v.clone()));
            }
            if endpoints_ok && e.u.color == e.v.color {
                out.push(Violation::SameColorEdge(u, v));
            }
        }
        if !self.vertices.is_empty() {
            let comps = self.component_count();
            if comps > 1 {
                out.push(Violation::Disconnected { components: comps });
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// Checks [`validate`](Self::validate) and converts failures to an error.
    pub fn ensure_valid(&self) -> Result<()> {
        self.validate().map_err(LinkageError::Invalid)
    }

    fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.len()];
        let mut count = 0;
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        count
    }

    /// Adds one vertex of the opposite color joined to `at` by a solid edge,
    /// appended last in vertex order.
    ///
    /// The new vertex continues the chain when `at` is a chain vertex
    /// (`t3` grows `t4`), otherwise it takes the next free plain index of its
    /// color (`b3` after `b1, b2`).
    pub fn extend(&self, at: VertexId) -> Result<CarterDiagram> {
        self.require_index(at)?;
        let color = at.color.opposite();
        let chained = at.chain.map(|c| VertexId {
            chain: Some(c),
            color,
            index: at.index + 1,
        });
        let new = match chained {
            Some(id) if self.index_of(id).is_none() => id,
            _ => {
                let next = self
                    .vertices
                    .iter()
                    .filter(|v| v.chain.is_none() && v.color == color)
                    .map(|v| v.index)
                    .max()
                    .unwrap_or(0)
                    + 1;
                VertexId {
                    chain: None,
                    color,
                    index: next,
                }
            }
        };
        Ok(self.extend_with(at, new, EdgeSign::Solid))
    }

    /// Like [`extend`](Self::extend) with an explicit id and edge sign.
    pub fn extend_with(&self, at: VertexId, new: VertexId, sign: EdgeSign) -> CarterDiagram {
        let mut d = self.clone();
        d.name = format!("{}+{}", self.name, at);
        d.vertices.push(new);
        d.edges.push(Edge {
            u: at,
            v: new,
            sign,
        });
        d
    }

    /// Searches for a vertex bijection and a sign change of vertices that
    /// carries this diagram onto `other` (signed-graph isomorphism up to
    /// switching). Colors are ignored.
    pub fn isomorphism(&self, other: &CarterDiagram) -> Option<SignedPermutation> {
        let n = self.len();
        if n != other.len() || self.edges.len() != other.edges.len() {
            return None;
        }
        let ga = self.gram();
        let gb = other.gram();
        let adj_a = self.adjacency();
        let adj_b = other.adjacency();
        let deg_a: Vec<usize> = adj_a.iter().map(Vec::len).collect();
        let deg_b: Vec<usize> = adj_b.iter().map(Vec::len).collect();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let order = bfs_order(&adj_a);
        if iso_search(
            0,
            &order,
            &ga,
            &gb,
            &deg_a,
            &deg_b,
            &mut perm,
            &mut used,
            &mut |perm| switching_signs(&ga, &gb, perm, &adj_a),
        )
        .is_some()
        {
            let signs = switching_signs(&ga, &gb, &perm, &adj_a)?;
            return Some(SignedPermutation { perm, signs });
        }
        None
    }

    /// Locates the standard pattern: a vertex `β1` of degree 3 whose
    /// neighbors serve as `α1, α2, α3`.
    ///
    /// When two of the neighbors share a further neighbor `β2`, the five
    /// vertices form a `D5(a1)` pattern, with `α2, α3` the square's pair in
    /// vertex order. Otherwise the neighbors form a `D4` pattern in vertex
    /// order. Centers are tried beta first, then alpha, each in vertex order,
    /// and a square pattern is preferred anywhere in the diagram. Among
    /// several squares at one center the earliest `β2` wins. The
    /// returned signs switch the diagram so that every pattern edge is solid
    /// except `α2 - β2`, which is dotted; tabled diagrams need no switching.
    pub fn pattern(&self) -> Option<Pattern> {
        let g = self.gram();
        let adj = self.adjacency();
        let mut centers: Vec<usize> = (0..self.len()).filter(|&i| adj[i].len() == 3).collect();
        centers.sort_by_key(|&i| self.vertices[i].color == Color::Alpha);
        let squared = |c: usize| {
            let n = &adj[c];
            let mut best = None;
            for (x, y) in [(n[0], n[1]), (n[0], n[2]), (n[1], n[2])] {
                for &p in &adj[x] {
                    if p != c && adj[y].contains(&p) && best.is_none_or(|b| (p, x, y) < b) {
                        best = Some((p, x, y));
                    }
                }
            }
            let (p, x, y) = best?;
            let third = n
                .iter()
                .copied()
                .find(|&z| z != x && z != y)
                .expect("degree 3");
            Some(([third, x, y], p))
        };
        let (center, alphas, square) = centers
            .iter()
            .find_map(|&c| squared(c).map(|(al, p)| (c, al, Some(p))))
            .or_else(|| {
                centers
                    .first()
                    .map(|&c| (c, [adj[c][0], adj[c][1], adj[c][2]], None))
            })?;
        let mut signs = vec![1i8; self.len()];
        for &n in &alphas {
            signs[n] = (-g[center][n]) as i8;
        }
        if let Some(p) = square {
            let a3 = alphas[2];
            signs[p] = (-(signs[a3] as i64) * g[a3][p]) as i8;
        }
        let kind = if square.is_some() {
            PatternKind::D5a1
        } else {
            PatternKind::D4
        };
        Some(Pattern {
            kind,
            alphas,
            center,
            square,
            signs,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DiagramJson::from(self)).expect("diagram serializes")
    }

    pub fn from_json(s: &str) -> Result<CarterDiagram> {
        let raw: DiagramJson =
            serde_json::from_str(s).map_err(|e| LinkageError::Parse(e.to_string()))?;
        raw.try_into()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    D5a1,
    D4,
}

/// The vertices playing `α1, α2, α3, β1` (and `β2` for the square pattern),
/// as indices into the diagram's vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub kind: PatternKind,
    pub alphas: [usize; 3],
    pub center: usize,
    pub square: Option<usize>,
    /// Per-vertex sign change putting the pattern edges in standard form.
    pub signs: Vec<i8>,
}

/// `perm[i]` is the vertex of the target diagram matched to vertex `i`;
/// `signs[i]` is the sign change applied to vertex `i`, so that
/// `signs[i]·signs[j]·G_self[i][j] = G_other[perm[i]][perm[j]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
}

fn bfs_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn iso_search(
    depth: usize,
    order: &[usize],
    ga: &[Vec<i64>],
    gb: &[Vec<i64>],
    deg_a: &[usize],
    deg_b: &[usize],
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    accept: &mut dyn FnMut(&[usize]) -> Option<Vec<i64>>,
) -> Option<()> {
    if depth == order.len() {
        return accept(perm).map(|_| ());
    }
    let x = order[depth];
    for y in 0..gb.len() {
        if used[y] || deg_a[x] != deg_b[y] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| (ga[x][w] != 0) == (gb[y][perm[w]] != 0));
        if !consistent {
            continue;
        }
        perm[x] = y;
        used[y] = true;
        if iso_search(depth + 1, order, ga, gb, deg_a, deg_b, perm, used, accept).is_some() {
            return Some(());
        }
        used[y] = false;
        perm[x] = usize::MAX;
    }
    None
}

fn switching_signs(
    ga: &[Vec<i64>],
    gb: &[Vec<i64>],
    perm: &[usize],
    adj: &[Vec<usize>],
) -> Option<Vec<i64>> {
    let n = ga.len();
    let mut s = vec![0i64; n];
    for root in 0..n {
        if s[root] != 0 {
            continue;
        }
        s[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                let want = gb[perm[x]][perm[y]] * ga[x][y] * s[x];
                if s[y] == 0 {
                    s[y] = want;
                    queue.push_back(y);
                } else if s[y] != want {
                    return None;
                }
            }
        }
    }
    Some(s)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct DiagramJson {
    name: String,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexJson {
    id: String,
    color: Color,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    u: String,
    v: String,
    sign: EdgeSign,
}

impl From<&CarterDiagram> for DiagramJson {
    fn from(d: &CarterDiagram) -> Self {
        DiagramJson {
            name: d.name.clone(),
            vertices: d
                .vertices
                .iter()
                .map(|v| VertexJson {
                    id: v.label(),
                    color: v.color,
                })
                .collect(),
            edges: d
                .edges
                .iter()
                .map(|e| EdgeJson {
                    u: e.u.label(),
                    v: e.v.label(),
                    sign: e.sign,
                })
                .collect(),
        }
    }
}

impl TryFrom<DiagramJson> for CarterDiagram {
    type Error = LinkageError;

    fn try_from(raw: DiagramJson) -> Result<Self> {
        let mut by_label = HashMap::new();
        let mut vertices = Vec::with_capacity(raw.vertices.len());
        for v in &raw.vertices {
            let id = VertexId::parse(&v.id, v.color)?;
            if by_label.insert(v.id.clone(), id).is_some() {
                return Err(LinkageError::Parse(format!(
                    "duplicate vertex id {:?}",
                    v.id
                )));
            }
            vertices.push(id);
        }
        let lookup = |s: &str| {
            by_label.get(s).copied().ok_or_else(|| {
                LinkageError::Parse(format!("edge endpoint {s:?} is not a declared vertex"))
            })
        };
        let edges = raw
            .edges
            .iter()
            .map(|e| {
                Ok(Edge {
                    u: lookup(&e.u)?,
                    v: lookup(&e.v)?,
                    sign: e.sign,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CarterDiagram::new(raw.name, vertices, edges))
    }
}

impl FromStr for CarterDiagram {
    type Err = LinkageError;
    fn from_str(s: &str) -> Result<Self> {
        CarterDiagram::from_json(s)
    }
}
