//! The maximal MVE partition as connected components of a linear matroid.
//!
//! Split the pmf polynomials `p_1..p_N` into groups whose spans form a direct
//! sum, as finely as possible. The finest such split is unique: it is the set
//! of connected components of the linear matroid on the coefficient columns.
//! Components are read off the fundamental-circuit graph of any column basis;
//! we use the leftmost-pivot basis from `rref`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::model::{coefficient_matrix, CategoricalModel};
use crate::partition::{Partition, UnionFind};

/// Undirected graph on column indices. Edges are stored as `(lo, hi)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitGraph {
    pub vertices: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl CircuitGraph {
    fn connect(&mut self, a: usize, b: usize) {
        if a != b {
            self.edges.insert((a.min(b), a.max(b)));
        }
    }

    pub fn components(&self) -> Partition {
        let mut uf = UnionFind::new(self.vertices);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.into_partition()
    }
}

/// For every non-basis column `j`, links `j` and the basis columns appearing
/// in its expansion into one clique (its fundamental circuit).
pub fn fundamental_circuit_graph(c: &RatMatrix) -> Result<CircuitGraph> {
    for j in 0..c.cols() {
        if (0..c.rows()).all(|i| c[(i, j)].is_zero()) {
            return Err(Error::ZeroColumn(j));
        }
    }
    let rref = c.rref();
    let mut g = CircuitGraph {
        vertices: c.cols(),
        edges: BTreeSet::new(),
    };
    let basis: BTreeSet<usize> = rref.pivots.iter().copied().collect();
    for j in (0..c.cols()).filter(|j| !basis.contains(j)) {
        // column j = sum_i R[i][j] * column(pivots[i])
        let mut circuit = vec![j];
        circuit.extend(
            rref.pivots
                .iter()
                .enumerate()
                .filter(|(row, _)| !rref.matrix[(*row, j)].is_zero())
                .map(|(_, &pc)| pc),
        );
        for (x, &a) in circuit.iter().enumerate() {
            for &b in &circuit[x + 1..] {
                g.connect(a, b);
            }
        }
    }
    Ok(g)
}

/// The partition of the support whose measurable statistics are exactly the
/// UMVUEs.
pub fn mve_partition(m: &CategoricalModel) -> Result<Partition> {
    let (_, c) = coefficient_matrix(m);
    Ok(fundamental_circuit_graph(&c)?.components())
}

/// `Σ_j rank(columns of block j)`.
pub fn block_rank_sum(c: &RatMatrix, p: &Partition) -> usize {
    p.blocks().iter().map(|b| c.select_columns(b).rank()).sum()
}

/// True iff the block spans are linearly independent, i.e. their sum is direct.
pub fn is_direct_sum(c: &RatMatrix, p: &Partition) -> bool {
    block_rank_sum(c, p) == c.rank()
}
