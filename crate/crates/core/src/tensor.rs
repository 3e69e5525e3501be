//! Dense covariant component tensors with symmetry bookkeeping.
//!
//! Components are stored row-major with slot 0 most significant. Indices are
//! 0-based in code and 1-based in anything printed.

use rayon::prelude::*;
use smallvec::SmallVec;
use thiserror::Error;

use crate::scalar::Scalar;

pub type Index = SmallVec<[usize; 8]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    None,
    /// Rank 2, `T_ij = T_ji`.
    SymmetricPair,
    /// Rank 4, antisymmetric in the first pair, pair exchange, first Bianchi.
    GeneralizedCurvature,
    /// Rank 4, antisymmetric in the first pair and first Bianchi only.
    ProjectiveLike,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("expected {expected} components for dimension {dim} and rank {rank}, got {got}")]
    WrongLength {
        dim: usize,
        rank: usize,
        expected: usize,
        got: usize,
    },
    #[error("{symmetry:?} requires rank {required}, tensor has rank {rank}")]
    RankMismatch {
        symmetry: Symmetry,
        required: usize,
        rank: usize,
    },
    #[error("{symmetry:?} violated at index {index:?}")]
    Asymmetric { symmetry: Symmetry, index: Vec<usize> },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("slot {slot} out of range for rank {rank}")]
    SlotOutOfRange { slot: usize, rank: usize },
    #[error("operand must have rank {expected}, has rank {rank}")]
    WrongRank { expected: usize, rank: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentTensor<T> {
    dim: usize,
    rank: usize,
    symmetry: Symmetry,
    components: Vec<T>,
}

pub fn component_count(dim: usize, rank: usize) -> usize {
    dim.pow(rank as u32)
}

pub fn unflatten(mut flat: usize, dim: usize, rank: usize) -> Index {
    let mut idx: Index = SmallVec::from_elem(0, rank);
    for slot in (0..rank).rev() {
        idx[slot] = flat % dim;
        flat /= dim;
    }
    idx
}

pub fn flatten(idx: &[usize], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + i)
}

/// Every index tuple in row-major order.
pub fn all_indices(dim: usize, rank: usize) -> impl Iterator<Item = Index> {
    (0..component_count(dim, rank)).map(move |f| unflatten(f, dim, rank))
}

impl<T: Scalar> ComponentTensor<T> {
    pub fn zeros(dim: usize, rank: usize) -> Self {
        ComponentTensor {
            dim,
            rank,
            symmetry: Symmetry::None,
            components: vec![T::zero(); component_count(dim, rank)],
        }
    }

    pub fn from_components(dim: usize, rank: usize, components: Vec<T>) -> Result<Self, TensorError> {
        let expected = component_count(dim, rank);
        if components.len() != expected {
            return Err(TensorError::WrongLength {
                dim,
                rank,
                expected,
                got: components.len(),
            });
        }
        Ok(ComponentTensor {
            dim,
            rank,
            symmetry: Symmetry::None,
            components,
        })
    }

    /// Builds every component independently, in parallel.
    pub fn from_fn(dim: usize, rank: usize, f: impl Fn(&[usize]) -> T + Sync) -> Self {
        let components = (0..component_count(dim, rank))
            .into_par_iter()
            .map(|flat| f(&unflatten(flat, dim, rank)))
            .collect();
        ComponentTensor {
            dim,
            rank,
            symmetry: Symmetry::None,
            components,
        }
    }

    pub fn try_from_fn<E: Send>(
        dim: usize,
        rank: usize,
        f: impl Fn(&[usize]) -> Result<T, E> + Sync,
    ) -> Result<Self, E> {
        let components = (0..component_count(dim, rank))
            .into_par_iter()
            .map(|flat| f(&unflatten(flat, dim, rank)))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(ComponentTensor {
            dim,
            rank,
            symmetry: Symmetry::None,
            components,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn components(&self) -> &[T] {
        &self.components
    }

    pub fn get(&self, idx: &[usize]) -> &T {
        debug_assert_eq!(idx.len(), self.rank);
        &self.components[flatten(idx, self.dim)]
    }

    pub fn get_flat(&self, flat: usize) -> &T {
        &self.components[flat]
    }

    pub fn set(&mut self, idx: &[usize], value: T) {
        let f = flatten(idx, self.dim);
        self.components[f] = value;
        self.symmetry = Symmetry::None;
    }

    pub fn index_of(&self, flat: usize) -> Index {
        unflatten(flat, self.dim, self.rank)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// First nonzero component in lexicographic index order.
    pub fn first_nonzero(&self) -> Option<Index> {
        self.components
            .iter()
            .position(|c| !c.is_zero())
            .map(|f| self.index_of(f))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (Index, &T)> + '_ {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(f, c)| (self.index_of(f), c))
    }

    /// Validates `symmetry` and records it on success.
    pub fn with_symmetry(mut self, symmetry: Symmetry) -> Result<Self, TensorError> {
        self.check_symmetry(symmetry)?;
        self.symmetry = symmetry;
        Ok(self)
    }

    pub fn check_symmetry(&self, symmetry: Symmetry) -> Result<(), TensorError> {
        let required = match symmetry {
            Symmetry::None => return Ok(()),
            Symmetry::SymmetricPair => 2,
            Symmetry::GeneralizedCurvature | Symmetry::ProjectiveLike => 4,
        };
        if self.rank != required {
            return Err(TensorError::RankMismatch {
                symmetry,
                required,
                rank: self.rank,
            });
        }
        let fail = |idx: &[usize]| TensorError::Asymmetric {
            symmetry,
            index: idx.to_vec(),
        };
        for idx in all_indices(self.dim, self.rank) {
            let t = self.get(&idx);
            match symmetry {
                Symmetry::SymmetricPair => {
                    if idx[0] < idx[1] && *t != *self.get(&[idx[1], idx[0]]) {
                        return Err(fail(&idx));
                    }
                }
                Symmetry::GeneralizedCurvature | Symmetry::ProjectiveLike => {
                    let (a, b, c, d) = (idx[0], idx[1], idx[2], idx[3]);
                    if !t.add_ref(self.get(&[b, a, c, d])).is_zero() {
                        return Err(fail(&idx));
                    }
                    let bianchi = t
                        .add_ref(self.get(&[b, c, a, d]))
                        .add_ref(self.get(&[c, a, b, d]));
                    if !bianchi.is_zero() {
                        return Err(fail(&idx));
                    }
                    if symmetry == Symmetry::GeneralizedCurvature && *t != *self.get(&[c, d, a, b]) {
                        return Err(fail(&idx));
                    }
                }
                Symmetry::None => unreachable!(),
            }
        }
        Ok(())
    }

    fn same_shape(&self, other: &Self) -> Result<(), TensorError> {
        if self.dim != other.dim {
            return Err(TensorError::DimensionMismatch(self.dim, other.dim));
        }
        if self.rank != other.rank {
            return Err(TensorError::WrongRank {
                expected: self.rank,
                rank: other.rank,
            });
        }
        Ok(())
    }

    fn combined_symmetry(&self, other: &Self) -> Symmetry {
        if self.symmetry == other.symmetry {
            self.symmetry
        } else {
            Symmetry::None
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TensorError> {
        self.same_shape(other)?;
        let components = self
            .components
            .par_iter()
            .zip(other.components.par_iter())
            .map(|(a, b)| a.add_ref(b))
            .collect();
        Ok(self.with_components(components, self.combined_symmetry(other)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TensorError> {
        self.same_shape(other)?;
        let components = self
            .components
            .par_iter()
            .zip(other.components.par_iter())
            .map(|(a, b)| a.sub_ref(b))
            .collect();
        Ok(self.with_components(components, self.combined_symmetry(other)))
    }

    /// Symmetry classes are closed under scaling, so the tag is kept.
    pub fn scale(&self, c: &T) -> Self {
        let components = self.components.par_iter().map(|a| a.mul_ref(c)).collect();
        self.with_components(components, self.symmetry)
    }

    pub fn neg(&self) -> Self {
        self.scale(&T::one().neg_ref())
    }

    /// `Σ c_i T_i`; all terms must share dimension and rank.
    pub fn linear_combination(terms: &[(T, &Self)]) -> Result<Self, TensorError> {
        let (_, first) = terms.first().expect("empty linear combination");
        for (_, t) in terms {
            first.same_shape(t)?;
        }
        let sym = terms
            .iter()
            .map(|(_, t)| t.symmetry)
            .reduce(|a, b| if a == b { a } else { Symmetry::None })
            .unwrap_or(Symmetry::None);
        let components = (0..first.components.len())
            .into_par_iter()
            .map(|f| {
                let mut acc = T::zero();
                for (c, t) in terms {
                    let x = &t.components[f];
                    if !x.is_zero() && !c.is_zero() {
                        acc = acc.add_ref(&c.mul_ref(x));
                    }
                }
                acc
            })
            .collect();
        Ok(first.with_components(components, sym))
    }

    pub fn map(&self, f: impl Fn(&T) -> T + Sync) -> Self {
        self.with_components(self.components.par_iter().map(&f).collect(), Symmetry::None)
    }

    /// `result[i_0, …, i_{k-1}] = self[i_{perm[0]}, …, i_{perm[k-1]}]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rank);
        ComponentTensor::from_fn(self.dim, self.rank, |idx| {
            let src: Index = perm.iter().map(|&p| idx[p]).collect();
            self.get(&src).clone()
        })
    }

    fn with_components(&self, components: Vec<T>, symmetry: Symmetry) -> Self {
        ComponentTensor {
            dim: self.dim,
            rank: self.rank,
            symmetry,
            components,
        }
    }
}
