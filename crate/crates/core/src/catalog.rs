//! Named diagrams and parametric families.
//!
//! Every diagram lists its alpha vertices first and then its beta vertices.
//! For the tabled Carter and Dynkin diagrams the order within each color is
//! the row order of the standard partial Cartan tables, so
//! [`PartialCartan::new`](crate::PartialCartan::new) reproduces those
//! matrices entry for entry.

use crate::diagram::{CarterDiagram, Color, EdgeSign, VertexId};
use crate::error::{LinkageError, Result};

use EdgeSign::{Dotted, Solid};

const fn a(i: u32) -> VertexId {
    VertexId::alpha(i)
}

const fn b(i: u32) -> VertexId {
    VertexId::beta(i)
}

/// Names with explicit edge data, in table order.
pub const TABLED: [&str; 18] = [
    "D4(a1)", "D5(a1)", "E6(a1)", "E6(a2)", "D6(a1)", "D6(a2)", "E7(a1)", "E7(a2)", "E7(a3)",
    "E7(a4)", "D7(a1)", "D7(a2)", "D4", "D5", "E6", "D6", "E7", "D7",
];

/// Every fixed catalog name: the tabled diagrams and `E8`.
pub fn names() -> Vec<String> {
    TABLED
        .iter()
        .map(|s| s.to_string())
        .chain(std::iter::once("E8".to_string()))
        .collect()
}

fn plain(
    name: &str,
    alphas: u32,
    betas: u32,
    edges: &[(VertexId, VertexId, EdgeSign)],
) -> CarterDiagram {
    let vertices = (1..=alphas).map(a).chain((1..=betas).map(b)).collect();
    CarterDiagram::from_edges(name, vertices, edges)
}

/// The square with its pendant `a1`, shared by most tabled Carter diagrams.
const D5A1: [(VertexId, VertexId, EdgeSign); 5] = [
    (a(1), b(1), Solid),
    (a(2), b(1), Solid),
    (a(3), b(1), Solid),
    (a(2), b(2), Dotted),
    (a(3), b(2), Solid),
];

fn with_d5a1(extra: &[(VertexId, VertexId, EdgeSign)]) -> Vec<(VertexId, VertexId, EdgeSign)> {
    D5A1.iter().chain(extra).copied().collect()
}

fn tabled(name: &str) -> Option<CarterDiagram> {
    let d = match name {
        "D4(a1)" => plain(
            name,
            2,
            2,
            &[
                (a(1), b(1), Solid),
                (a(1), b(2), Solid),
                (a(2), b(1), Dotted),
                (a(2), b(2), Solid),
            ],
        ),
        "D5(a1)" => plain(name, 3, 2, &D5A1),
        "E6(a1)" => plain(name, 3, 3, &with_d5a1(&[(a(3), b(3), Solid)])),
        "E6(a2)" => plain(
            name,
            3,
            3,
            &with_d5a1(&[(a(1), b(3), Dotted), (a(3), b(3), Solid)]),
        ),
        "D6(a1)" => plain(name, 3, 3, &with_d5a1(&[(a(1), b(3), Solid)])),
        "D6(a2)" => plain(name, 4, 2, &with_d5a1(&[(a(4), b(2), Solid)])),
        "E7(a1)" => plain(
            name,
            3,
            4,
            &with_d5a1(&[(a(3), b(3), Solid), (a(1), b(4), Solid)]),
        ),
        "E7(a2)" => plain(
            name,
            3,
            4,
            &with_d5a1(&[(a(3), b(3), Solid), (a(2), b(4), Solid)]),
        ),
        "E7(a3)" => plain(
            name,
            3,
            4,
            &with_d5a1(&[
                (a(1), b(3), Dotted),
                (a(3), b(3), Solid),
                (a(2), b(4), Solid),
            ]),
        ),
        "E7(a4)" => plain(
            name,
            3,
            4,
            &with_d5a1(&[
                (a(1), b(3), Solid),
                (a(3), b(3), Dotted),
                (a(1), b(4), Dotted),
                (a(2), b(4), Solid),
            ]),
        ),
        "D7(a1)" => plain(
            name,
            4,
            3,
            &with_d5a1(&[(a(1), b(3), Solid), (a(4), b(3), Solid)]),
        ),
        "D7(a2)" => plain(
            name,
            4,
            3,
            &with_d5a1(&[(a(4), b(2), Solid), (a(1), b(3), Solid)]),
        ),
        "E6" => plain(
            name,
            3,
            3,
            &[
                (a(1), b(1), Solid),
                (a(2), b(1), Solid),
                (a(3), b(1), Solid),
                (a(1), b(2), Solid),
                (a(2), b(3), Solid),
            ],
        ),
        "E7" => plain(
            name,
            4,
            3,
            &[
                (a(1), b(1), Solid),
                (a(2), b(1), Solid),
                (a(3), b(1), Solid),
                (a(1), b(2), Solid),
                (a(2), b(3), Solid),
                (a(4), b(3), Solid),
            ],
        ),
        "E8" => plain(
            name,
            4,
            4,
            &[
                (a(1), b(1), Solid),
                (a(2), b(1), Solid),
                (a(3), b(1), Solid),
                (a(1), b(2), Solid),
                (a(2), b(3), Solid),
                (a(4), b(3), Solid),
                (a(4), b(4), Solid),
            ],
        ),
        _ => return None,
    };
    Some(d)
}

/// Dynkin diagram `A_l`: the path `a1 - b1 - a2 - b2 - ...`.
pub fn dynkin_a(l: u32) -> Result<CarterDiagram> {
    if l == 0 {
        return Err(LinkageError::OutOfRange("A_l needs l >= 1".into()));
    }
    let path: Vec<VertexId> = (0..l)
        .map(|i| {
            if i % 2 == 0 {
                a(i / 2 + 1)
            } else {
                b(i / 2 + 1)
            }
        })
        .collect();
    let edges: Vec<_> = path.windows(2).map(|w| (w[0], w[1], Solid)).collect();
    Ok(plain(&format!("A_{l}"), l.div_ceil(2), l / 2, &edges))
}

/// Dynkin diagram `D_l`: the fork `a1, a2, a3 - b1` continued by the chain
/// `a2 - b2 - a4 - b3 - a5 - ...`.
pub fn dynkin_d(l: u32) -> Result<CarterDiagram> {
    if l < 4 {
        return Err(LinkageError::OutOfRange("D_l needs l >= 4".into()));
    }
    let mut edges = vec![
        (a(1), b(1), Solid),
        (a(2), b(1), Solid),
        (a(3), b(1), Solid),
    ];
    let mut chain = vec![a(2)];
    for i in 0..l - 4 {
        chain.push(if i % 2 == 0 {
            b(i / 2 + 2)
        } else {
            a(i / 2 + 4)
        });
    }
    edges.extend(chain.windows(2).map(|w| (w[0], w[1], Solid)));
    let (alphas, betas) = (3 + (l - 4) / 2, 1 + (l - 3) / 2);
    Ok(plain(&format!("D{l}"), alphas, betas, &edges))
}

/// The Carter diagram `D_l(a_k)`: a square `a2, b1, a3, b2` with
/// `a2 - b2` dotted and the other sides solid, a chain `t1, t2, ...` of
/// `k - 1` vertices hanging off `b1`, and a chain `f1, f2, ...` of
/// `l - k - 3` vertices hanging off `b2`. Chain colors alternate starting
/// with alpha next to the square.
///
/// Vertex order: `a2, a3`, the alpha chain vertices (`t` before `f`), then
/// `b1, b2` and the beta chain vertices. The tabled members of the family
/// agree with this one up to a vertex permutation and a sign change of some
/// vertices, found by [`CarterDiagram::isomorphism`].
pub fn carter_d_ak(l: u32, k: u32) -> Result<CarterDiagram> {
    if l < 4 || k < 1 || k + 3 > l {
        return Err(LinkageError::OutOfRange(format!(
            "D_l(a_k) needs l >= 4 and 1 <= k <= l - 3, got l = {l}, k = {k}"
        )));
    }
    let tau: Vec<VertexId> = (1..k).map(|i| VertexId::tau(i, chain_color(i))).collect();
    let phi: Vec<VertexId> = (1..l - k - 2)
        .map(|i| VertexId::phi(i, chain_color(i)))
        .collect();
    let mut edges = vec![
        (a(2), b(1), Solid),
        (a(3), b(1), Solid),
        (a(3), b(2), Solid),
        (a(2), b(2), Dotted),
    ];
    for (anchor, chain) in [(b(1), &tau), (b(2), &phi)] {
        let mut prev = anchor;
        for &v in chain.iter() {
            edges.push((prev, v, Solid));
            prev = v;
        }
    }
    let of_color = |c: Color| {
        tau.iter()
            .chain(&phi)
            .copied()
            .filter(move |v| v.color == c)
    };
    let vertices = [a(2), a(3)]
        .into_iter()
        .chain(of_color(Color::Alpha))
        .chain([b(1), b(2)])
        .chain(of_color(Color::Beta))
        .collect();
    Ok(CarterDiagram::from_edges(
        format!("D{l}(a{k})"),
        vertices,
        &edges,
    ))
}

fn chain_color(i: u32) -> Color {
    if i % 2 == 1 {
        Color::Alpha
    } else {
        Color::Beta
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Parsed {
    Plain(char, u32),
    Carter(char, u32, u32),
}

fn parse_name(name: &str) -> Option<Parsed> {
    let s: String = name
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '_')
        .collect();
    let mut chars = s.chars();
    let family = chars.next()?.to_ascii_uppercase();
    let rest = chars.as_str();
    let rank_len = rest.bytes().take_while(u8::is_ascii_digit).count();
    let rank: u32 = rest[..rank_len].parse().ok()?;
    let tail = &rest[rank_len..];
    if tail.is_empty() {
        return Some(Parsed::Plain(family, rank));
    }
    let inner = tail
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(tail);
    let k = inner.strip_prefix('a')?;
    if k.is_empty() || !k.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some(Parsed::Carter(family, rank, k.parse().ok()?))
}

/// Looks up a diagram by name.
///
/// Accepts the tabled names (`"E6(a1)"`, also spelled `"E6a1"`), `E8`,
/// `A_l` for `l >= 1`, `D_l` for `l >= 4`, and `D_l(a_k)` for any admissible
/// `l, k`. Table identities such as `D5(a2) = D5(a1)` resolve to the tabled
/// diagram.
///
/// ```
/// use carter_linkage::catalog::catalog;
///
/// let d = catalog("E6a1").unwrap();
/// assert_eq!(d.name(), "E6(a1)");
/// assert_eq!(d.len(), 6);
/// assert!(catalog("E9").is_err());
/// ```
pub fn catalog(name: &str) -> Result<CarterDiagram> {
    let unknown = || LinkageError::UnknownDiagram(name.to_string());
    let parsed = parse_name(name).ok_or_else(unknown)?;
    match parsed {
        Parsed::Plain('A', l) if (1..=64).contains(&l) => dynkin_a(l),
        Parsed::Plain('D', l) if (4..=64).contains(&l) => dynkin_d(l),
        Parsed::Plain('E', r @ 6..=8) => tabled(&format!("E{r}")).ok_or_else(unknown),
        Parsed::Carter('D', l, k) if (4..=64).contains(&l) => {
            if k < 1 || k + 3 > l {
                return Err(unknown());
            }
            let k = k.min(l - k - 2);
            match tabled(&format!("D{l}(a{k})")) {
                Some(d) => Ok(d),
                None => carter_d_ak(l, k),
            }
        }
        Parsed::Carter('E', r, k) => tabled(&format!("E{r}(a{k})")).ok_or_else(unknown),
        _ => Err(unknown()),
    }
}
