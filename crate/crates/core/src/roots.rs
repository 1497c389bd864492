//! Explicit root systems and brute-force checks of the linkage theory.
//!
//! Roots are stored in the standard coordinates: `A_n` inside `R^{n+1}`,
//! `D_n` inside `R^n`, and `E6 ⊂ E7 ⊂ E8` inside `R^8`. `E8` consists of the
//! `D8` roots `±e_i ± e_j` and the vectors `(±1/2, ..., ±1/2)` with an even
//! number of minus signs. `E7` is the set of `E8` roots orthogonal to
//! `ρ1 = (1/2, ..., 1/2)` and `E6` the set orthogonal to both `ρ1` and
//! `ρ2 = -(e7 + e8)`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::cartan::PartialCartan;
use crate::diagram::{CarterDiagram, EdgeSign, VertexId};
use crate::error::{LinkageError, Result};
use crate::linkage::LinkageVector;
use crate::matrix::{RMatrix, RVector};
use crate::orbit::reflect_at;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct RootSystem {
    name: String,
    rank: usize,
    // coordinates times two, sorted
    doubled: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    // inner products of roots i and j
    ip: Vec<Vec<i8>>,
}

impl RootSystem {
    /// Builds `A<n>` (`1 <= n <= 12`), `D<n>` (`3 <= n <= 12`), `E6`, `E7`
    /// or `E8`. Underscores are ignored, so `A_3` and `A3` agree.
    pub fn build(name: &str) -> Result<RootSystem> {
        let unsupported = || LinkageError::UnsupportedRootSystem(name.to_string());
        let s: String = name
            .chars()
            .filter(|c| *c != '_' && !c.is_whitespace())
            .collect();
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(unsupported)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        let (canonical, rank, doubled) = match (family, n) {
            ('A', 1..=12) => (format!("A{n}"), n, type_a(n)),
            ('D', 3..=12) => (format!("D{n}"), n, type_d(n)),
            ('E', 6..=8) => (format!("E{n}"), n, type_e(n)),
            _ => return Err(unsupported()),
        };
        Ok(Self::from_doubled(canonical, rank, doubled))
    }

    fn from_doubled(name: String, rank: usize, mut doubled: Vec<Vec<i64>>) -> RootSystem {
        doubled.sort();
        doubled.dedup();
        let index = doubled
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let ip = doubled
            .iter()
            .map(|x| doubled.iter().map(|y| (dot4(x, y) / 4) as i8).collect())
            .collect();
        RootSystem {
            name,
            rank,
            doubled,
            index,
            ip,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ambient coordinate space.
    pub fn dim(&self) -> usize {
        self.doubled.first().map_or(0, Vec::len)
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn root(&self, i: usize) -> RVector {
        RVector(
            self.doubled[i]
                .iter()
                .map(|&x| Rational::new(x, 2))
                .collect(),
        )
    }

    pub fn roots(&self) -> impl Iterator<Item = RVector> + '_ {
        (0..self.len()).map(|i| self.root(i))
    }

    /// Inner product of roots `i` and `j`.
    pub fn inner(&self, i: usize, j: usize) -> i64 {
        self.ip[i][j] as i64
    }

    /// Index of `v` when it is a root.
    pub fn find(&self, v: &RVector) -> Option<usize> {
        let doubled: Option<Vec<i64>> = v
            .iter()
            .map(|x| {
                let y = *x * Rational::from_int(2);
                y.is_integer().then(|| y.numer())
            })
            .collect();
        self.index.get(&doubled?).copied()
    }

    fn reflect_index(&self, x: usize, r: usize) -> usize {
        let c = self.inner(x, r);
        if c == 0 {
            return x;
        }
        let v: Vec<i64> = self.doubled[x]
            .iter()
            .zip(&self.doubled[r])
            .map(|(a, b)| a - c * b)
            .collect();
        self.index[&v]
    }
}

fn dot4(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn type_a(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            if i != j {
                let mut v = vec![0; n + 1];
                v[i] = 2;
                v[j] = -2;
                out.push(v);
            }
        }
    }
    out
}

fn type_d(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut v = vec![0; n];
                v[i] = si;
                v[j] = sj;
                out.push(v);
            }
        }
    }
    out
}

fn type_e(n: usize) -> Vec<Vec<i64>> {
    let mut out = type_d(8);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push(
                (0..8)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect(),
            );
        }
    }
    let rho1 = [1i64; 8];
    let rho2 = [0, 0, 0, 0, 0, 0, -2, -2];
    out.retain(|r| match n {
        8 => true,
        7 => dot4(r, &rho1) == 0,
        _ => dot4(r, &rho1) == 0 && dot4(r, &rho2) == 0,
    });
    out
}

/// Builds a root system by name; see [`RootSystem::build`].
pub fn build_root_system(name: &str) -> Result<RootSystem> {
    RootSystem::build(name)
}

/// Roots of an ambient system realizing a diagram: their Gram matrix is
/// `B_L` and they are linearly independent.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    pub diagram: CarterDiagram,
    pub ambient: String,
    /// Root indices in the ambient system, one per vertex.
    pub indices: Vec<usize>,
    pub roots: Vec<RVector>,
}

impl Embedding {
    pub fn gram(&self) -> RMatrix {
        let n = self.roots.len();
        let mut m = RMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.roots[i].dot(&self.roots[j]).expect("equal dimensions");
            }
        }
        m
    }
}

/// The first embedding of `d` in `amb` in the fixed search order, if any.
///
/// ```
/// use carter_linkage::{catalog::catalog, find_embedding, RootSystem};
///
/// let e6 = catalog("E6")?;
/// assert!(find_embedding(&e6, &RootSystem::build("E8")?).is_some());
/// assert!(find_embedding(&e6, &RootSystem::build("D8")?).is_none());
/// # Ok::<(), carter_linkage::LinkageError>(())
/// ```
pub fn find_embedding(d: &CarterDiagram, amb: &RootSystem) -> Option<Embedding> {
    embeddings(d, amb, 1).into_iter().next()
}

/// Up to `limit` distinct embeddings in search order.
///
/// Vertices are placed in breadth-first order from the first vertex, each
/// trying the roots in lexicographic order and keeping only those whose
/// inner products with the already placed roots match `B_L`. When the
/// first vertex finds nothing at the first root the search stops: the Weyl
/// group of an irreducible simply-laced system acts transitively on roots,
/// so no other start can succeed.
pub fn embeddings(d: &CarterDiagram, amb: &RootSystem, limit: usize) -> Vec<Embedding> {
    let n = d.len();
    let mut out = Vec::new();
    if n == 0 || n > amb.rank() || amb.is_empty() || limit == 0 {
        return out;
    }
    let g = d.gram();
    let adj = d.adjacency();
    let mut order = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut q = 0;
    while q < order.len() {
        let x = order[q];
        q += 1;
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                order.push(y);
            }
        }
    }
    if order.len() != n {
        return out;
    }
    let mut assigned = vec![usize::MAX; n];
    for first in 0..amb.len() {
        assigned[order[0]] = first;
        place(1, &order, &g, amb, &mut assigned, &mut |assigned| {
            let roots: Vec<RVector> = assigned.iter().map(|&i| amb.root(i)).collect();
            let m = RMatrix::from_rows(roots.iter().map(|r| r.0.clone()).collect())
                .expect("rectangular");
            if m.rank() == n {
                out.push(Embedding {
                    diagram: d.clone(),
                    ambient: amb.name().to_string(),
                    indices: assigned.to_vec(),
                    roots,
                });
            }
            out.len() >= limit
        });
        // every root is conjugate to the first, so a miss there is final
        if out.is_empty() || out.len() >= limit {
            break;
        }
    }
    out
}

fn place(
    depth: usize,
    order: &[usize],
    g: &[Vec<i64>],
    amb: &RootSystem,
    assigned: &mut Vec<usize>,
    found: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if depth == order.len() {
        return found(assigned);
    }
    let x = order[depth];
    let placed = &order[..depth];
    for r in 0..amb.len() {
        let ok = placed.iter().all(|&w| amb.inner(r, assigned[w]) == g[x][w]);
        if !ok {
            continue;
        }
        assigned[x] = r;
        if place(depth + 1, order, g, amb, assigned, found) {
            return true;
        }
    }
    assigned[x] = usize::MAX;
    false
}

/// One ambient root viewed as a linkage of an embedded diagram.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RealizedLinkage {
    pub root_index: usize,
    pub gamma: RVector,
    /// `⟨γ, τ_i⟩` for each embedded root `τ_i`.
    pub labels: LinkageVector,
    /// Coefficients of `gamma_l` in the embedded roots, `B_L⁻¹ · labels`.
    pub coeffs: RVector,
    /// Orthogonal projection of `γ` onto the span of the embedding.
    pub gamma_l: RVector,
    pub mu: RVector,
    pub mu_norm_sq: Rational,
    /// `labelsᵀ B_L⁻¹ labels`.
    pub p: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectLabels {
    pub realized: Vec<RealizedLinkage>,
    /// Sorted distinct label vectors.
    pub distinct: Vec<LinkageVector>,
    /// Independent roots orthogonal to every embedded root; their label
    /// vector is zero, so they are not linkages.
    pub orthogonal_roots: usize,
    /// Roots in the span of the embedding.
    pub dependent_roots: usize,
}

/// Reads off linkage labels for every ambient root independent of the
/// embedding and decomposes it as `γ = γ_L + μ`.
pub fn direct_linkage_labels(e: &Embedding, amb: &RootSystem) -> Result<DirectLabels> {
    let pc = PartialCartan::new(&e.diagram)?;
    let n = e.roots.len();
    let base = RMatrix::from_rows(e.roots.iter().map(|r| r.0.clone()).collect())?;
    let mut realized = Vec::new();
    let (mut orthogonal_roots, mut dependent_roots) = (0, 0);
    for k in 0..amb.len() {
        let gamma = amb.root(k);
        let mut rows: Vec<Vec<Rational>> = e.roots.iter().map(|r| r.0.clone()).collect();
        rows.push(gamma.0.clone());
        if RMatrix::from_rows(rows)?.rank() <= n {
            dependent_roots += 1;
            continue;
        }
        let ints: Vec<i64> = e.indices.iter().map(|&i| amb.inner(k, i)).collect();
        if ints.iter().any(|x| x.abs() > 1) {
            return Err(LinkageError::Verification(format!(
                "root {gamma:?} is independent but has a label outside -1..=1"
            )));
        }
        if ints.iter().all(|&x| x == 0) {
            orthogonal_roots += 1;
            continue;
        }
        let labels = LinkageVector(ints.iter().map(|&x| x as i8).collect());
        let coeffs = pc.inverse().mul_vec(&labels.to_rvector())?;
        let gamma_l = base.transpose().mul_vec(&coeffs)?;
        let mu = gamma.sub(&gamma_l);
        let mu_norm_sq = mu.dot(&mu)?;
        let p = pc.inverse_form(&labels.0);
        realized.push(RealizedLinkage {
            root_index: k,
            gamma,
            labels,
            coeffs,
            gamma_l,
            mu,
            mu_norm_sq,
            p,
        });
    }
    let distinct: BTreeSet<LinkageVector> = realized.iter().map(|r| r.labels.clone()).collect();
    Ok(DirectLabels {
        realized,
        distinct: distinct.into_iter().collect(),
        orthogonal_roots,
        dependent_roots,
    })
}

/// A class of realized linkages whose roots generate the same subsystem
/// together with the embedded roots.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitClass {
    pub p: Rational,
    pub mu_norm_sq: Rational,
    pub linkages: usize,
    /// Roots in the subsystem generated by the embedding and one member.
    pub subsystem_roots: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProjectionLaws {
    pub checked: usize,
    /// Linkages whose mirror `γ_L - μ` is itself an ambient root. The mirror
    /// always has norm 2, but when `2μ` leaves the root lattice (for
    /// example `p = 4/3` in `E8`) it is not a root.
    pub mirror_roots: usize,
    pub classes: Vec<OrbitClass>,
}

/// Checks, for every realized linkage:
/// `p = cᵀ B_L c = ⟨γ_L, γ_L⟩`, `p + |μ|² = 2`, and that the mirror
/// `γ_L - μ` has norm 2; mirrors that are ambient roots are counted. Linkages are then grouped by the root subsystem generated by the
/// embedded roots and `γ`; within a group `μ` must agree up to sign and `p`
/// must be constant.
pub fn check_projection_laws(
    dl: &DirectLabels,
    e: &Embedding,
    amb: &RootSystem,
) -> Result<ProjectionLaws> {
    let pc = PartialCartan::new(&e.diagram)?;
    let fail = |r: &RealizedLinkage, what: &str| {
        Err(LinkageError::Verification(format!(
            "root {:?} (labels {}): {what}",
            r.gamma, r.labels
        )))
    };
    let two = Rational::from_int(2);
    let mut mirror_roots = 0;
    for r in &dl.realized {
        let cbc = pc.form(&r.coeffs)?;
        let gl = r.gamma_l.dot(&r.gamma_l)?;
        if r.p != cbc || r.p != gl {
            return fail(r, &format!("p = {}, cᵀBc = {cbc}, |γ_L|² = {gl}", r.p));
        }
        if r.p + r.mu_norm_sq != two {
            return fail(r, &format!("p + |μ|² = {} + {}", r.p, r.mu_norm_sq));
        }
        if amb.find(&r.gamma_l.add(&r.mu)).is_none() {
            return fail(r, "γ_L + μ is not the root it came from");
        }
        let mirror = r.gamma_l.sub(&r.mu);
        if mirror.dot(&mirror)? != two {
            return fail(r, "γ_L - μ does not have norm 2");
        }
        if amb.find(&mirror).is_some() {
            mirror_roots += 1;
        }
    }

    let by_root: HashMap<usize, usize> = dl
        .realized
        .iter()
        .enumerate()
        .map(|(i, r)| (r.root_index, i))
        .collect();
    let mut classed = vec![false; dl.realized.len()];
    let mut classes = Vec::new();
    for start in 0..dl.realized.len() {
        if classed[start] {
            continue;
        }
        let first = &dl.realized[start];
        let mut gens: Vec<usize> = e.indices.clone();
        gens.push(first.root_index);
        let closure = reflection_closure(amb, &gens);
        let mut count = 0;
        for &k in &closure {
            let Some(&i) = by_root.get(&k) else { continue };
            classed[i] = true;
            count += 1;
            let r = &dl.realized[i];
            if r.p != first.p || (r.mu != first.mu && r.mu != first.mu.neg()) {
                return fail(
                    r,
                    &format!(
                        "μ or p differs from {:?} in the same subsystem",
                        first.gamma
                    ),
                );
            }
        }
        classes.push(OrbitClass {
            p: first.p,
            mu_norm_sq: first.mu_norm_sq,
            linkages: count,
            subsystem_roots: closure.len(),
        });
    }
    Ok(ProjectionLaws {
        checked: dl.realized.len(),
        mirror_roots,
        classes,
    })
}

fn reflection_closure(amb: &RootSystem, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    let mut queue: VecDeque<usize> = gens.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = amb.reflect_index(x, g);
            if set.insert(y) {
                queue.push_back(y);
            }
        }
    }
    set
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SquareAudit {
    pub configurations: usize,
    /// Configurations by number of sides with inner product `+1`.
    pub by_dotted_sides: [usize; 5],
}

/// For every realized `γ` and every path `α_i - β_k - α_j` of the diagram
/// with `(α_i, α_j) = 0` and both `(γ, α_i)`, `(γ, α_j)` nonzero, checks the
/// diagonal `(γ, β_k)`: it vanishes when an odd number of the four sides
/// are dotted, and otherwise equals `(α_i, β_k) · (γ, α_i)`.
pub fn square_diagonal_audit(dl: &DirectLabels, e: &Embedding) -> Result<SquareAudit> {
    let g = e.diagram.gram();
    let n = g.len();
    let mut audit = SquareAudit::default();
    for r in &dl.realized {
        let l = &r.labels.0;
        for k in 0..n {
            for i in 0..n {
                for j in i + 1..n {
                    if i == k
                        || j == k
                        || g[i][j] != 0
                        || g[i][k] == 0
                        || g[j][k] == 0
                        || l[i] == 0
                        || l[j] == 0
                    {
                        continue;
                    }
                    let sides = [g[i][k], g[j][k], l[i] as i64, l[j] as i64];
                    let dotted = sides.iter().filter(|&&s| s == 1).count();
                    let want = if dotted % 2 == 0 {
                        g[i][k] * l[i] as i64
                    } else {
                        0
                    };
                    audit.configurations += 1;
                    audit.by_dotted_sides[dotted] += 1;
                    if l[k] as i64 != want {
                        let v = e.diagram.vertices();
                        return Err(LinkageError::Verification(format!(
                            "square {}-{}-{} with γ = {:?}: diagonal (γ, {}) = {}, expected {want}",
                            v[i], v[k], v[j], r.gamma, v[k], l[k]
                        )));
                    }
                }
            }
        }
    }
    Ok(audit)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndependenceReport {
    pub embeddings: usize,
    pub label_set_size: usize,
}

/// Compares the distinct label sets of up to `trials` embeddings.
pub fn embedding_independence(
    d: &CarterDiagram,
    amb: &RootSystem,
    trials: usize,
) -> Result<IndependenceReport> {
    let found = embeddings(d, amb, trials);
    let mut reference: Option<Vec<LinkageVector>> = None;
    for e in &found {
        let labels = direct_linkage_labels(e, amb)?.distinct;
        match &reference {
            None => reference = Some(labels),
            Some(r) if *r != labels => {
                return Err(LinkageError::Verification(format!(
                    "embedding {:?} of {} yields {} label vectors, {} of them outside the {} of the first",
                    e.indices,
                    d.name(),
                    labels.len(),
                    labels.iter().filter(|v| !r.contains(v)).count(),
                    r.len()
                )))
            }
            Some(_) => {}
        }
    }
    Ok(IndependenceReport {
        embeddings: found.len(),
        label_set_size: reference.map_or(0, |r| r.len()),
    })
}

/// Orbit of the unit vector at `v` under the dual reflections of a Dynkin
/// diagram, i.e. the weights of the fundamental representation at `v`
/// written in the basis of fundamental weights.
pub fn weight_orbit(pc: &PartialCartan, v: VertexId) -> Result<Vec<LinkageVector>> {
    let d = pc.diagram();
    if d.edges().iter().any(|e| e.sign == EdgeSign::Dotted) {
        return Err(LinkageError::Precondition(format!(
            "{} has dotted edges; weight orbits need a Dynkin diagram",
            d.name()
        )));
    }
    let start = LinkageVector::unit(d.len(), d.require_index(v)?);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for t in 0..d.len() {
            let y = reflect_at(pc, t, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}
