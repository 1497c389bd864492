//! Linkage label vectors and their enumeration.
//!
//! A linkage label vector lists the inner products of an extra root with
//! the diagram's roots. For simply-laced diagrams its entries lie in
//! `{-1, 0, 1}`, and a vector is realized by some root independent of the
//! diagram exactly when `vᵀ B_L⁻¹ v < 2`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::PartialCartan;
use crate::diagram::{CarterDiagram, Color, VertexId};
use crate::matrix::RVector;
use crate::rational::Rational;

/// Coordinates indexed by the diagram's vertex order. Ordered
/// lexicographically with `-1 < 0 < 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinkageVector(pub Vec<i8>);

impl LinkageVector {
    pub fn new(entries: Vec<i8>) -> Self {
        LinkageVector(entries)
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        LinkageVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn neg(&self) -> LinkageVector {
        LinkageVector(self.0.iter().map(|&x| -x).collect())
    }

    /// Drops coordinate `i`.
    pub fn without(&self, i: usize) -> LinkageVector {
        let mut v = self.0.clone();
        v.remove(i);
        LinkageVector(v)
    }

    pub fn to_rvector(&self) -> RVector {
        RVector::from_ints(self.0.iter().map(|&x| x as i64))
    }

    /// Number of nonzero coordinates at vertices of color `c`.
    pub fn endpoints(&self, d: &CarterDiagram, c: Color) -> usize {
        d.vertices()
            .iter()
            .zip(&self.0)
            .filter(|(v, &x)| v.color == c && x != 0)
            .count()
    }

    /// Comma-separated coordinates, e.g. `0,0,1,0,0,-1`.
    pub fn coords(&self) -> String {
        self.0
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for LinkageVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords())
    }
}

impl fmt::Debug for LinkageVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<i8>> for LinkageVector {
    fn from(v: Vec<i8>) -> Self {
        LinkageVector(v)
    }
}

impl<const N: usize> From<[i8; N]> for LinkageVector {
    fn from(v: [i8; N]) -> Self {
        LinkageVector(v.to_vec())
    }
}

/// All linkage vectors sharing one value `p` of the inverse form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSet {
    pub p: Rational,
    pub members: Vec<LinkageVector>,
}

/// Every nonzero `v` in `{-1, 0, 1}^l` with `vᵀ B_L⁻¹ v < 2`, sorted.
///
/// The search walks the grid depth first with the integer adjugate
/// `A = det·B_L⁻¹`, keeping `Σ A_ij v_i v_j` over the fixed prefix and the
/// partial products `Σ_i A_ij v_i` for the remaining columns up to date.
///
/// ```
/// use carter_linkage::{catalog::catalog, enumerate_linkages, PartialCartan};
///
/// let pc = PartialCartan::new(&catalog("D4(a1)")?)?;
/// assert_eq!(enumerate_linkages(&pc).len(), 24);
/// let e8 = PartialCartan::new(&catalog("E8")?)?;
/// assert!(enumerate_linkages(&e8).is_empty());
/// # Ok::<(), carter_linkage::LinkageError>(())
/// ```
pub fn enumerate_linkages(pc: &PartialCartan) -> Vec<LinkageVector> {
    let n = pc.len();
    let a = pc.adjugate();
    let bound = 2 * pc.det().numer();
    let mut out = Vec::new();
    let mut v = vec![0i8; n];
    // partial[d][j] = Σ_{i<d} A_ij v_i
    let mut partial = vec![vec![0i64; n]; n + 1];
    walk(0, 0, a, bound, &mut v, &mut partial, &mut out);
    out
}

fn walk(
    depth: usize,
    q: i64,
    a: &[Vec<i64>],
    bound: i64,
    v: &mut Vec<i8>,
    partial: &mut Vec<Vec<i64>>,
    out: &mut Vec<LinkageVector>,
) {
    let n = v.len();
    if depth == n {
        if q < bound && v.iter().any(|&x| x != 0) {
            out.push(LinkageVector(v.clone()));
        }
        return;
    }
    for x in [-1i8, 0, 1] {
        let xi = x as i64;
        // adding coordinate `depth` contributes 2·x·Σ_{i<d} A_{i,d} v_i + A_dd·x²
        let q2 = q + 2 * xi * partial[depth][depth] + a[depth][depth] * xi * xi;
        v[depth] = x;
        let (head, tail) = partial.split_at_mut(depth + 1);
        for j in 0..n {
            tail[0][j] = head[depth][j] + a[depth][j] * xi;
        }
        walk(depth + 1, q2, a, bound, v, partial, out);
    }
    v[depth] = 0;
}

/// Partitions `s` by the value of `vᵀ B_L⁻¹ v`, ascending in `p`.
pub fn group_by_p(pc: &PartialCartan, s: &[LinkageVector]) -> Vec<ExtensionSet> {
    let mut by_p: BTreeMap<Rational, Vec<LinkageVector>> = BTreeMap::new();
    for v in s {
        by_p.entry(pc.inverse_form(&v.0))
            .or_default()
            .push(v.clone());
    }
    by_p.into_iter()
        .map(|(p, mut members)| {
            members.sort();
            ExtensionSet { p, members }
        })
        .collect()
}

/// The linkage vectors whose alpha coordinates all vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaUnicolored {
    pub members: Vec<LinkageVector>,
    /// The vertex treated as `β1`: the pattern center when the diagram has
    /// one, otherwise `b1`.
    pub b1: Option<String>,
    /// Whether every member has a zero `β1` coordinate.
    pub b1_zero: bool,
}

pub fn beta_unicolored(d: &CarterDiagram, s: &[LinkageVector]) -> BetaUnicolored {
    let alphas: Vec<usize> = (0..d.len())
        .filter(|&i| d.vertices()[i].color == Color::Alpha)
        .collect();
    let mut members: Vec<LinkageVector> = s
        .iter()
        .filter(|v| alphas.iter().all(|&i| v.0[i] == 0))
        .cloned()
        .collect();
    members.sort();
    let b1 = match d.pattern() {
        Some(p) => Some(p.center),
        None => d.index_of(VertexId::beta(1)),
    };
    let b1_zero = b1.is_none_or(|i| members.iter().all(|v| v.0[i] == 0));
    BetaUnicolored {
        members,
        b1: b1.map(|i| d.vertices()[i].label()),
        b1_zero,
    }
}
