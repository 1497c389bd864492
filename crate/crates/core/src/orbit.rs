//! Dual reflections and the linkage system they generate.
//!
//! The dual reflection at vertex `t` acts on label vectors by
//! `s*_t(u)_k = u_k - u_t · B_L[k][t]` for `k != t` and negates coordinate
//! `t`. A solid neighbor of `t` therefore gains `+u_t`, a dotted neighbor
//! gains `-u_t`. These maps preserve `vᵀ B_L⁻¹ v` and permute the linkage
//! vectors; the resulting graph is the linkage system.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::cartan::PartialCartan;
use crate::diagram::{CarterDiagram, Color, DiagramJson, EdgeSign, PatternKind, VertexId};
use crate::error::{LinkageError, Result};
use crate::linkage::{enumerate_linkages, LinkageVector};
use crate::rational::Rational;

/// Applies `s*_t` to `v`.
///
/// ```
/// use carter_linkage::{catalog::catalog, dual_reflect, PartialCartan, VertexId};
///
/// let pc = PartialCartan::new(&catalog("D4(a1)")?)?;
/// let v = dual_reflect(&pc, VertexId::alpha(1), &[1, 0, 0, 0].into())?;
/// assert_eq!(v.entries(), &[-1, 0, 1, 1]);
/// # Ok::<(), carter_linkage::LinkageError>(())
/// ```
pub fn dual_reflect(pc: &PartialCartan, t: VertexId, v: &LinkageVector) -> Result<LinkageVector> {
    let i = pc.diagram().require_index(t)?;
    if v.len() != pc.len() {
        return Err(LinkageError::Dimension(format!(
            "vector of length {} for a diagram on {} vertices",
            v.len(),
            pc.len()
        )));
    }
    Ok(reflect_at(pc, i, v))
}

pub(crate) fn reflect_at(pc: &PartialCartan, t: usize, v: &LinkageVector) -> LinkageVector {
    let ut = v.0[t] as i64;
    if ut == 0 {
        return v.clone();
    }
    let out = (0..v.len())
        .map(|k| {
            if k == t {
                -v.0[k]
            } else {
                (v.0[k] as i64 - ut * pc.entry(k, t)) as i8
            }
        })
        .collect();
    LinkageVector(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LoctetType {
    L12,
    L13,
    L23,
}

impl LoctetType {
    pub const ALL: [LoctetType; 3] = [LoctetType::L12, LoctetType::L13, LoctetType::L23];

    /// Pattern slots `(i, j, k)` (0-based) for type `L_ij`.
    pub fn slots(self) -> (usize, usize, usize) {
        match self {
            LoctetType::L12 => (0, 1, 2),
            LoctetType::L13 => (0, 2, 1),
            LoctetType::L23 => (1, 2, 0),
        }
    }
}

impl fmt::Display for LoctetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Eight linkage vectors `γ(1), ..., γ(8)` tied together by dual reflections.
/// Two loctets are the same when their member sets agree.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Loctet {
    #[serde(rename = "type")]
    pub ty: LoctetType,
    pub members: Vec<LinkageVector>,
}

impl Loctet {
    pub fn gamma(&self, n: usize) -> &LinkageVector {
        &self.members[n - 1]
    }

    pub fn member_set(&self) -> BTreeSet<&LinkageVector> {
        self.members.iter().collect()
    }

    pub fn contains(&self, v: &LinkageVector) -> bool {
        self.members.contains(v)
    }
}

impl PartialEq for Loctet {
    fn eq(&self, other: &Self) -> bool {
        self.member_set() == other.member_set()
    }
}

impl Eq for Loctet {}

/// All `γ(8)` for type `ty`: linkage vectors with `a_i = a_j = 0`,
/// `a_k = 1` and `b1 = 0` in the pattern's standard signs.
pub fn gamma8_candidates(pc: &PartialCartan, ty: LoctetType) -> Result<Vec<LinkageVector>> {
    gamma8_from(pc, &enumerate_linkages(pc), ty)
}

fn gamma8_from(
    pc: &PartialCartan,
    nodes: &[LinkageVector],
    ty: LoctetType,
) -> Result<Vec<LinkageVector>> {
    let p = pc.diagram().pattern().ok_or(LinkageError::PatternAbsent)?;
    let (i, j, k) = ty.slots();
    let (ai, aj, ak) = (p.alphas[i], p.alphas[j], p.alphas[k]);
    Ok(nodes
        .iter()
        .filter(|v| v.0[ai] == 0 && v.0[aj] == 0 && v.0[p.center] == 0 && v.0[ak] == p.signs[ak])
        .cloned()
        .collect())
}

/// Builds the loctet generated by `g8`:
/// `γ7 = s*_{αk} γ8`, `γ6 = s*_{β1} γ7`, `γ4 = s*_{αi} γ6`, `γ5 = s*_{αj} γ6`
/// and `γ1, γ2, γ3 = -γ8, -γ7, -γ6`.
pub fn loctet_from_gamma8(
    pc: &PartialCartan,
    g8: &LinkageVector,
    ty: LoctetType,
) -> Result<Loctet> {
    let p = pc.diagram().pattern().ok_or(LinkageError::PatternAbsent)?;
    let (i, j, k) = ty.slots();
    let g7 = reflect_at(pc, p.alphas[k], g8);
    let g6 = reflect_at(pc, p.center, &g7);
    let g4 = reflect_at(pc, p.alphas[i], &g6);
    let g5 = reflect_at(pc, p.alphas[j], &g6);
    let members = vec![g8.neg(), g7.neg(), g6.neg(), g4, g5, g6, g7, g8.clone()];
    let two = Rational::from_int(2);
    for (n, m) in members.iter().enumerate() {
        let in_range = m.0.iter().all(|x| (-1..=1).contains(x)) && !m.is_zero();
        if !in_range || pc.inverse_form(&m.0) >= two {
            return Err(LinkageError::Verification(format!(
                "loctet {ty} from {g8}: γ({}) = {m} is not a linkage vector",
                n + 1
            )));
        }
    }
    if members.iter().collect::<BTreeSet<_>>().len() != 8 {
        return Err(LinkageError::Verification(format!(
            "loctet {ty} from {g8} has repeated members"
        )));
    }
    Ok(Loctet { ty, members })
}

/// How the loctets of a system were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LoctetSource {
    /// Generated from `γ(8)` candidates of the diagram's pattern.
    Pattern(PatternKind),
    /// No degree-3 vertex (`D4(a1)`): every component has exactly eight
    /// nodes and is taken as one loctet, typed `L12, L13, L23` in component
    /// order.
    Components,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemEdge {
    pub u: usize,
    pub v: usize,
    pub generator: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub p: Rational,
    pub nodes: Vec<usize>,
}

/// The graph of linkage vectors under dual reflections.
#[derive(Clone, Debug, PartialEq)]
pub struct LinkageSystem {
    pub diagram: CarterDiagram,
    /// Sorted linkage vectors; all other fields index into this list.
    pub nodes: Vec<LinkageVector>,
    /// `vᵀ B_L⁻¹ v` per node.
    pub p: Vec<Rational>,
    /// One edge `{v, s*_t v}` per generator `t` moving `v`, with `u < v`.
    pub edges: Vec<SystemEdge>,
    /// Ordered by smallest member.
    pub components: Vec<Component>,
    pub loctets: Vec<Loctet>,
    pub loctet_source: LoctetSource,
    /// Nodes in no loctet.
    pub unicolored: Vec<usize>,
}

/// Builds the linkage system of `pc`.
///
/// ```
/// use carter_linkage::{build_system, catalog::catalog, PartialCartan};
///
/// let sys = build_system(&PartialCartan::new(&catalog("E6(a1)")?)?)?;
/// assert_eq!(sys.component_sizes(), vec![27, 27]);
/// assert_eq!(sys.loctets.len(), 6);
/// assert_eq!(sys.unicolored.len(), 6);
/// # Ok::<(), carter_linkage::LinkageError>(())
/// ```
pub fn build_system(pc: &PartialCartan) -> Result<LinkageSystem> {
    let d = pc.diagram();
    let nodes = enumerate_linkages(pc);
    let index: HashMap<&LinkageVector, usize> =
        nodes.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let p: Vec<Rational> = nodes.iter().map(|v| pc.inverse_form(&v.0)).collect();

    let mut edges = Vec::new();
    let mut adj = vec![Vec::new(); nodes.len()];
    for (u, v) in nodes.iter().enumerate() {
        for t in 0..d.len() {
            let w = reflect_at(pc, t, v);
            if &w == v {
                continue;
            }
            let &x = index.get(&w).ok_or_else(|| {
                LinkageError::Verification(format!(
                    "s*_{} {v} = {w} is not a linkage vector",
                    d.vertices()[t]
                ))
            })?;
            adj[u].push(x);
            if u < x {
                edges.push(SystemEdge {
                    u,
                    v: x,
                    generator: d.vertices()[t],
                });
            }
        }
    }

    let mut comp_of = vec![usize::MAX; nodes.len()];
    let mut components = Vec::new();
    for s in 0..nodes.len() {
        if comp_of[s] != usize::MAX {
            continue;
        }
        let c = components.len();
        comp_of[s] = c;
        let mut members = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if comp_of[y] == usize::MAX {
                    comp_of[y] = c;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        if let Some(&bad) = members.iter().find(|&&m| p[m] != p[s]) {
            return Err(LinkageError::Verification(format!(
                "form is not constant on the component of {}: {} vs {}",
                nodes[s], p[s], p[bad]
            )));
        }
        components.push(Component {
            p: p[s],
            nodes: members,
        });
    }

    let (loctets, loctet_source) = match d.pattern() {
        Some(pat) => {
            let mut out: Vec<Loctet> = Vec::new();
            for ty in LoctetType::ALL {
                for g8 in gamma8_from(pc, &nodes, ty)? {
                    let l = loctet_from_gamma8(pc, &g8, ty)?;
                    if !out.contains(&l) {
                        out.push(l);
                    }
                }
            }
            (out, LoctetSource::Pattern(pat.kind))
        }
        None if !components.is_empty()
            && components.len() <= 3
            && components.iter().all(|c| c.nodes.len() == 8) =>
        {
            let out = components
                .iter()
                .zip(LoctetType::ALL)
                .map(|(c, ty)| Loctet {
                    ty,
                    members: c.nodes.iter().map(|&i| nodes[i].clone()).collect(),
                })
                .collect();
            (out, LoctetSource::Components)
        }
        None => (Vec::new(), LoctetSource::None),
    };

    let unicolored = (0..nodes.len())
        .filter(|&i| !loctets.iter().any(|l| l.contains(&nodes[i])))
        .collect();
    Ok(LinkageSystem {
        diagram: d.clone(),
        nodes,
        p,
        edges,
        components,
        loctets,
        loctet_source,
        unicolored,
    })
}

/// Outcome of [`LinkageSystem::check_partition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub disjoint: bool,
    /// Nodes with a nonzero `α1, α2, α3` coordinate that lie in no loctet.
    pub uncovered: Vec<LinkageVector>,
    /// Nodes outside every loctet that have a nonzero coordinate at some
    /// other alpha vertex (such as `α4`).
    pub outside_with_other_alpha: Vec<LinkageVector>,
    /// Nodes outside every loctet with a nonzero `β1` coordinate.
    pub outside_with_b1: Vec<LinkageVector>,
}

impl PartitionReport {
    pub fn holds(&self) -> bool {
        self.disjoint && self.uncovered.is_empty()
    }
}

impl LinkageSystem {
    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.nodes.len()).collect()
    }

    pub fn index_of(&self, v: &LinkageVector) -> Option<usize> {
        self.nodes.binary_search(v).ok()
    }

    /// Checks that loctets are pairwise disjoint and cover every node with a
    /// nonzero pattern alpha coordinate.
    pub fn check_partition(&self) -> PartitionReport {
        let mut seen = BTreeSet::new();
        let mut disjoint = true;
        for l in &self.loctets {
            for m in l.member_set() {
                disjoint &= seen.insert(m);
            }
        }
        let d = &self.diagram;
        let pattern = d.pattern();
        let pattern_alphas: Vec<usize> = match &pattern {
            Some(p) => p.alphas.to_vec(),
            None => (0..d.len())
                .filter(|&i| d.vertices()[i].color == Color::Alpha)
                .collect(),
        };
        let other_alphas: Vec<usize> = (0..d.len())
            .filter(|&i| d.vertices()[i].color == Color::Alpha && !pattern_alphas.contains(&i))
            .collect();
        let center = pattern
            .as_ref()
            .map(|p| p.center)
            .or_else(|| d.index_of(VertexId::beta(1)));
        let outside: Vec<&LinkageVector> =
            self.unicolored.iter().map(|&i| &self.nodes[i]).collect();
        let pick = |f: &dyn Fn(&LinkageVector) -> bool| {
            outside
                .iter()
                .filter(|v| f(v))
                .map(|v| (*v).clone())
                .collect()
        };
        PartitionReport {
            disjoint,
            uncovered: pick(&|v| pattern_alphas.iter().any(|&i| v.0[i] != 0)),
            outside_with_other_alpha: pick(&|v| other_alphas.iter().any(|&i| v.0[i] != 0)),
            outside_with_b1: pick(&|v| center.is_some_and(|c| v.0[c] != 0)),
        }
    }

    /// Graphviz rendering; loctets become clusters.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "graph \"{}\" {{",
            self.diagram.name().replace('"', "\\\"")
        );
        let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
        let mut placed = vec![false; self.nodes.len()];
        for (n, l) in self.loctets.iter().enumerate() {
            let _ = writeln!(s, "  subgraph cluster_{n} {{");
            let _ = writeln!(s, "    label=\"{} #{}\";", l.ty, n + 1);
            for m in &l.members {
                if let Some(i) = self.index_of(m) {
                    if !placed[i] {
                        placed[i] = true;
                        let _ = writeln!(s, "    n{i} [label=\"{}\"];", m.coords());
                    }
                }
            }
            let _ = writeln!(s, "  }}");
        }
        for (i, v) in self.nodes.iter().enumerate() {
            if !placed[i] {
                let _ = writeln!(s, "  n{i} [label=\"{}\"];", v.coords());
            }
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -- n{} [label=\"{}\"];", e.u, e.v, e.generator);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SystemJson::from(self)).expect("system serializes")
    }

    pub fn from_json(s: &str) -> Result<LinkageSystem> {
        let raw: SystemJson =
            serde_json::from_str(s).map_err(|e| LinkageError::Parse(e.to_string()))?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemJson {
    diagram: DiagramJson,
    totals: Totals,
    nodes: Vec<LinkageVector>,
    p: Vec<Rational>,
    edges: Vec<EdgeJson>,
    components: Vec<Component>,
    loctet_source: LoctetSource,
    loctets: Vec<LoctetJson>,
    unicolored: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Totals {
    linkages: usize,
    components: Vec<usize>,
    loctets: usize,
    unicolored: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    u: usize,
    v: usize,
    generator: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LoctetJson {
    #[serde(rename = "type")]
    ty: LoctetType,
    members: Vec<usize>,
}

impl From<&LinkageSystem> for SystemJson {
    fn from(s: &LinkageSystem) -> Self {
        SystemJson {
            diagram: DiagramJson::from(&s.diagram),
            totals: Totals {
                linkages: s.nodes.len(),
                components: s.component_sizes(),
                loctets: s.loctets.len(),
                unicolored: s.unicolored.len(),
            },
            nodes: s.nodes.clone(),
            p: s.p.clone(),
            edges: s
                .edges
                .iter()
                .map(|e| EdgeJson {
                    u: e.u,
                    v: e.v,
                    generator: e.generator.label(),
                })
                .collect(),
            components: s.components.clone(),
            loctet_source: s.loctet_source,
            loctets: s
                .loctets
                .iter()
                .map(|l| LoctetJson {
                    ty: l.ty,
                    members: l
                        .members
                        .iter()
                        .map(|m| s.index_of(m).expect("loctet member is a node"))
                        .collect(),
                })
                .collect(),
            unicolored: s.unicolored.clone(),
        }
    }
}

impl TryFrom<SystemJson> for LinkageSystem {
    type Error = LinkageError;

    fn try_from(raw: SystemJson) -> Result<Self> {
        let diagram = CarterDiagram::try_from(raw.diagram)?;
        let n = raw.nodes.len();
        let bad = |what: &str| LinkageError::Parse(format!("system JSON: {what}"));
        if raw.p.len() != n || raw.nodes.iter().any(|v| v.len() != diagram.len()) {
            return Err(bad("node data does not match the diagram"));
        }
        let node = |i: usize| {
            if i < n {
                Ok(i)
            } else {
                Err(bad(&format!("node index {i} out of range")))
            }
        };
        let edges = raw
            .edges
            .iter()
            .map(|e| {
                let generator = diagram
                    .vertex_by_label(&e.generator)
                    .ok_or_else(|| bad(&format!("unknown generator {}", e.generator)))?;
                Ok(SystemEdge {
                    u: node(e.u)?,
                    v: node(e.v)?,
                    generator,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let loctets = raw
            .loctets
            .iter()
            .map(|l| {
                let members = l
                    .members
                    .iter()
                    .map(|&i| node(i).map(|i| raw.nodes[i].clone()))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Loctet { ty: l.ty, members })
            })
            .collect::<Result<Vec<_>>>()?;
        for c in &raw.components {
            for &i in &c.nodes {
                node(i)?;
            }
        }
        for &i in &raw.unicolored {
            node(i)?;
        }
        let totals_ok = raw.totals.linkages == n
            && raw.totals.loctets == loctets.len()
            && raw.totals.unicolored == raw.unicolored.len()
            && raw.totals.components
                == raw
                    .components
                    .iter()
                    .map(|c| c.nodes.len())
                    .collect::<Vec<_>>();
        if !totals_ok {
            return Err(bad("totals disagree with the listed data"));
        }
        Ok(LinkageSystem {
            diagram,
            nodes: raw.nodes,
            p: raw.p,
            edges,
            components: raw.components,
            loctets,
            loctet_source: raw.loctet_source,
            unicolored: raw.unicolored,
        })
    }
}

/// Result of projecting the linkage system of an extended diagram onto the
/// base diagram by dropping the added coordinate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProjectionReport {
    pub extension: String,
    pub base: String,
    pub dropped: String,
    /// The base vertex the dropped vertex hangs from.
    pub at: String,
    pub ext_nodes: usize,
    pub base_nodes: usize,
    /// Extension nodes projecting to zero.
    pub kernel: Vec<LinkageVector>,
    /// Distinct nonzero images.
    pub image_size: usize,
    /// For each extension loctet, the base loctet its nonzero images form,
    /// if any.
    pub loctet_map: Vec<LoctetImage>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LoctetImage {
    pub ext: usize,
    pub ext_type: LoctetType,
    pub base: Option<usize>,
    pub base_type: Option<LoctetType>,
}

impl ProjectionReport {
    /// Base loctets hit by more than one extension loctet, with their
    /// preimages.
    pub fn collapsing(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut m: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for li in &self.loctet_map {
            if let Some(b) = li.base {
                m.entry(b).or_default().push(li.ext);
            }
        }
        m.retain(|_, v| v.len() > 1);
        m
    }
}

/// Projects `ext` onto `base` by forgetting the coordinate of `dropped`.
///
/// `ext.diagram` must be `base.diagram` plus the vertex `dropped`, joined by
/// one solid edge to a vertex `at` at which `base` is simply extendable;
/// vertices are matched by id. Every nonzero image must be a linkage vector
/// of `base`.
pub fn project_system(
    ext: &LinkageSystem,
    dropped: VertexId,
    base: &PartialCartan,
) -> Result<ProjectionReport> {
    let ed = &ext.diagram;
    let bd = base.diagram();
    let pre = |m: String| LinkageError::Precondition(m);
    let di = ed.require_index(dropped)?;
    let adj = ed.adjacency();
    if adj[di].len() != 1 {
        return Err(pre(format!(
            "{dropped} must have exactly one neighbor in {}",
            ed.name()
        )));
    }
    let ai = adj[di][0];
    let at = ed.vertices()[ai];
    let eg = ed.gram();
    if EdgeSign::from_inner_product(eg[di][ai]) != Some(EdgeSign::Solid) {
        return Err(pre(format!("edge {at}-{dropped} must be solid")));
    }
    if ed.len() != bd.len() + 1 || bd.index_of(dropped).is_some() {
        return Err(pre(format!(
            "{} is not {} plus one vertex",
            ed.name(),
            bd.name()
        )));
    }
    // coordinate of base vertex b inside the extension
    let to_ext = bd
        .vertices()
        .iter()
        .map(|&v| {
            ed.index_of(v)
                .ok_or_else(|| pre(format!("base vertex {v} missing from {}", ed.name())))
        })
        .collect::<Result<Vec<_>>>()?;
    let bg = bd.gram();
    for i in 0..bd.len() {
        for j in 0..bd.len() {
            if bg[i][j] != eg[to_ext[i]][to_ext[j]] {
                return Err(pre(format!(
                    "bond {}-{} differs between the diagrams",
                    bd.vertices()[i],
                    bd.vertices()[j]
                )));
            }
        }
    }
    if !base.simply_extendable(at)? {
        return Err(pre(format!(
            "{} is not simply extendable at {at}",
            bd.name()
        )));
    }

    let base_sys = build_system(base)?;
    let project = |v: &LinkageVector| LinkageVector(to_ext.iter().map(|&i| v.0[i]).collect());
    let mut kernel = Vec::new();
    let mut images = BTreeSet::new();
    for v in &ext.nodes {
        let w = project(v);
        if w.is_zero() {
            kernel.push(v.clone());
        } else if base_sys.index_of(&w).is_some() {
            images.insert(w);
        } else {
            return Err(LinkageError::Verification(format!(
                "{v} of {} projects to {w}, which is not a linkage vector of {}",
                ed.name(),
                bd.name()
            )));
        }
    }
    let loctet_map = ext
        .loctets
        .iter()
        .enumerate()
        .map(|(n, l)| {
            let img: BTreeSet<LinkageVector> = l
                .members
                .iter()
                .map(project)
                .filter(|w| !w.is_zero())
                .collect();
            let hit = base_sys
                .loctets
                .iter()
                .position(|b| b.members.iter().cloned().collect::<BTreeSet<_>>() == img);
            LoctetImage {
                ext: n,
                ext_type: l.ty,
                base: hit,
                base_type: hit.map(|h| base_sys.loctets[h].ty),
            }
        })
        .collect();
    Ok(ProjectionReport {
        extension: ed.name().to_string(),
        base: bd.name().to_string(),
        dropped: dropped.label(),
        at: at.label(),
        ext_nodes: ext.nodes.len(),
        base_nodes: base_sys.nodes.len(),
        kernel,
        image_size: images.len(),
        loctet_map,
    })
}
