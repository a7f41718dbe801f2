//! The index matrix of a resolved foliation.

use crate::cs::cs_index_branch;
use crate::linalg;
use crate::ModelError;
use numtower::TowerElem;
use resolution::ResolutionTree;
use symbolic::intersection_multiplicity;

/// `A[i][i] = CS_0(F, H_i)` and `A[i][j] = (H_i, H_j)_0` for `i != j`.
/// A divisor `sum lambda_i H_i` is a model iff `A lambda = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexMatrix {
    pub entries: Vec<Vec<TowerElem>>,
}

impl IndexMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    /// The minor without the first row and column.
    pub fn b0(&self) -> Vec<Vec<TowerElem>> {
        self.entries.iter().skip(1).map(|r| r[1..].to_vec()).collect()
    }

    pub fn det_b0(&self) -> TowerElem {
        linalg::det(&self.b0())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn kernel(&self) -> Vec<Vec<TowerElem>> {
        linalg::nullspace(&self.entries)
    }

    pub fn apply(&self, v: &[TowerElem]) -> Vec<TowerElem> {
        self.entries
            .iter()
            .map(|r| r.iter().zip(v).fold(TowerElem::zero(), |s, (a, b)| &s + &(a * b)))
            .collect()
    }
}

pub fn build_index_matrix(tree: &ResolutionTree) -> Result<IndexMatrix, ModelError> {
    let s = tree.branches.len();
    let mut entries = vec![vec![TowerElem::zero(); s]; s];
    for i in 0..s {
        for j in 0..s {
            entries[i][j] = if i == j {
                cs_index_branch(tree, i)?
            } else {
                TowerElem::from_int(tree.branch_intersection(i, j) as i64)
            };
        }
    }
    Ok(IndexMatrix { entries })
}

/// Pairs of branches carrying distinct tracked equations, with the
/// intersection number from the tree and from resultants.
pub fn resultant_cross_check(tree: &ResolutionTree) -> Vec<(usize, usize, u32, Option<u32>)> {
    let mut out = Vec::new();
    for i in 0..tree.branches.len() {
        for j in i + 1..tree.branches.len() {
            if let (Some(a), Some(b)) = (tree.branches[i].equation, tree.branches[j].equation) {
                if a != b {
                    let r = intersection_multiplicity(&tree.equations[a], &tree.equations[b]);
                    out.push((i, j, tree.branch_intersection(i, j), r));
                }
            }
        }
    }
    out
}
