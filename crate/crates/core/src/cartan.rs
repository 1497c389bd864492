//! The partial Cartan matrix of a Carter diagram.

use crate::diagram::{CarterDiagram, VertexId};
use crate::error::{LinkageError, Result};
use crate::matrix::{RMatrix, RVector};
use crate::rational::Rational;

/// `B_L` together with its inverse and determinant, all computed once at
/// construction.
///
/// `B_L[i][i] = 2`; off the diagonal the entry is `-1` for a solid edge,
/// `+1` for a dotted edge and `0` otherwise. `B_L` is required to be
/// positive definite, as it is for any diagram realized by roots.
#[derive(Clone, Debug)]
pub struct PartialCartan {
    diagram: CarterDiagram,
    b: RMatrix,
    b_inv: RMatrix,
    det: Rational,
    // det · B⁻¹, integral because B is
    adjugate: Vec<Vec<i64>>,
}

impl PartialCartan {
    pub fn new(d: &CarterDiagram) -> Result<Self> {
        d.ensure_valid()?;
        let b = RMatrix::from_int_rows(&d.gram());
        let minors = b.leading_minors()?;
        if let Some(i) = minors.iter().position(|m| *m <= Rational::ZERO) {
            return Err(LinkageError::Precondition(format!(
                "partial Cartan matrix of {} is not positive definite (leading minor {} is {})",
                d.name(),
                i + 1,
                minors[i]
            )));
        }
        let det = *minors.last().expect("nonempty diagram");
        let b_inv = b.inverse()?;
        let n = d.len();
        let adjugate = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let x = b_inv[(i, j)] * det;
                        debug_assert!(x.is_integer());
                        x.numer()
                    })
                    .collect()
            })
            .collect();
        Ok(PartialCartan {
            diagram: d.clone(),
            b,
            b_inv,
            det,
            adjugate,
        })
    }

    pub fn diagram(&self) -> &CarterDiagram {
        &self.diagram
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.b
    }

    pub fn inverse(&self) -> &RMatrix {
        &self.b_inv
    }

    pub fn det(&self) -> Rational {
        self.det
    }

    /// `det(B_L) · B_L⁻¹` as integers.
    pub fn adjugate(&self) -> &[Vec<i64>] {
        &self.adjugate
    }

    /// Integer entry `B_L[i][j]`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.b[(i, j)].numer()
    }

    pub fn len(&self) -> usize {
        self.diagram.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagram.is_empty()
    }

    /// `(B_L⁻¹)_{vv}`.
    pub fn inverse_diagonal(&self, v: VertexId) -> Result<Rational> {
        let i = self.diagram.require_index(v)?;
        Ok(self.b_inv[(i, i)])
    }

    /// Whether a leaf joined to `v` by a solid edge still gives a diagram of
    /// linearly independent roots, i.e. `(B_L⁻¹)_{vv} < 2`.
    pub fn simply_extendable(&self, v: VertexId) -> Result<bool> {
        Ok(self.inverse_diagonal(v)? < Rational::from_int(2))
    }

    /// The inverse quadratic form `vᵀ B_L⁻¹ v` on a label vector.
    pub fn inverse_form(&self, v: &[i8]) -> Rational {
        assert_eq!(v.len(), self.len(), "label vector length");
        let mut acc: i64 = 0;
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in v.iter().enumerate() {
                acc += self.adjugate[i][j] * (x as i64) * (y as i64);
            }
        }
        Rational::from_int(acc) / self.det
    }

    /// The form `vᵀ B_L v`.
    pub fn form(&self, v: &RVector) -> Result<Rational> {
        self.b.quad_form(v)
    }
}
