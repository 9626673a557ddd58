use num_traits::Zero;

use super::{LinalgError, RationalMatrix, Q};

/// A linear subspace of `Q^ambient`, held by an independent spanning set.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &RationalMatrix::identity(ambient).columns())
    }

    /// Caller guarantees independence.
    pub(crate) fn from_independent(ambient: usize, basis: Vec<Vec<Q>>) -> Self {
        Subspace { ambient, basis }
    }

    /// Span of arbitrary vectors; dependent ones are dropped.
    pub fn span(ambient: usize, vectors: &[Vec<Q>]) -> Self {
        let m = RationalMatrix::from_columns(ambient, vectors);
        let pivots = m.echelon().pivots;
        Subspace {
            ambient,
            basis: pivots.iter().map(|&j| vectors[j].clone()).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient, &self.basis)
    }

    fn check(&self, other: &Subspace, op: &'static str) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: (self.ambient, self.dim()),
                right: (other.ambient, other.dim()),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other, "sum")?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.ambient, &all))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other, "intersect")?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // x = A a = B b  <=>  [A | -B] (a, b) = 0.
        let a = self.basis_matrix();
        let b = other.basis_matrix();
        let stacked = a.hstack(&-&b)?;
        let k = stacked.kernel();
        let vectors: Vec<Vec<Q>> = k
            .basis()
            .iter()
            .map(|v| a.apply(&v[..self.dim()]))
            .collect();
        Ok(Subspace::span(self.ambient, &vectors))
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut all = self.basis.clone();
        all.push(v.to_vec());
        RationalMatrix::from_columns(self.ambient, &all).rank() == self.dim()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    /// Equality as subspaces, independent of the chosen bases.
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_space(other)
    }

    /// Image of the subspace under `m`.
    pub fn map(&self, m: &RationalMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map domain");
        let images: Vec<Vec<Q>> = self.basis.iter().map(|v| m.apply(v)).collect();
        Subspace::span(m.rows(), &images)
    }

    /// Coordinates of `v` in this basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let rhs = RationalMatrix::from_columns(self.ambient, &[v.to_vec()]);
        self.basis_matrix()
            .solve(&rhs)
            .ok()
            .flatten()
            .map(|x| x.column(0))
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.same_as(other)
    }
}

impl Eq for Subspace {}
