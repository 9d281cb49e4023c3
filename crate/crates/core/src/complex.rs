//! Clique complexes and their augmented boundary matrices.
//!
//! Faces are stored per dimension as sorted vertex lists in lexicographic
//! order, so boundary matrices are reproducible bit-for-bit across runs.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("boundary dimension {d} out of range for a complex of dimension {dim}")]
    DimensionOutOfRange { d: usize, dim: isize },
}

/// Faces of a simplicial complex grouped by dimension. `faces_by_dim[d]`
/// holds the d-faces as ascending vertex lists, lexicographically sorted.
/// The empty face is implicit (augmentation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub n_vertices: usize,
    pub faces_by_dim: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Largest dimension carrying a face; -1 for a complex with no faces.
    pub fn dim(&self) -> isize {
        self.faces_by_dim.len() as isize - 1
    }

    pub fn face_count(&self, d: usize) -> usize {
        self.faces_by_dim.get(d).map_or(0, Vec::len)
    }

    /// Alternating face-count sum minus one (the implicit empty face).
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut chi: i64 = -1;
        for (d, faces) in self.faces_by_dim.iter().enumerate() {
            let term = faces.len() as i64;
            chi += if d % 2 == 0 { term } else { -term };
        }
        chi
    }

    /// Checks closure under facets and the face ordering; used by tests.
    pub fn is_valid(&self) -> bool {
        for (d, faces) in self.faces_by_dim.iter().enumerate() {
            let mut prev: Option<&Vec<usize>> = None;
            for face in faces {
                if face.len() != d + 1 || face.windows(2).any(|w| w[0] >= w[1]) {
                    return false;
                }
                if let Some(p) = prev {
                    if p >= face {
                        return false;
                    }
                }
                prev = Some(face);
                if d > 0 {
                    for skip in 0..face.len() {
                        let facet: Vec<usize> =
                            face.iter().enumerate().filter(|&(t, _)| t != skip).map(|(_, &v)| v).collect();
                        if self.faces_by_dim[d - 1].binary_search(&facet).is_err() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// The complex whose faces are exactly the cliques of `g` (including the
/// empty face and all singletons).
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    let mut faces_by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    if g.n() == 0 {
        return SimplicialComplex {
            n_vertices: 0,
            faces_by_dim,
        };
    }
    faces_by_dim.push((0..g.n()).map(|v| vec![v]).collect());
    // grow cliques one dimension at a time; candidates stay above the face max
    loop {
        let last = faces_by_dim.last().unwrap();
        let mut next: Vec<Vec<usize>> = Vec::new();
        for face in last {
            let mut common = VertexSet::full(g.n()).mask();
            for &v in face {
                common &= g.neighbors(v).mask();
            }
            let above = face.last().unwrap() + 1;
            let mut bits = common >> above << above;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let mut bigger = face.clone();
                bigger.push(v);
                next.push(bigger);
            }
        }
        if next.is_empty() {
            break;
        }
        // extension preserves lexicographic generation order, but sort anyway
        // to pin the contract in one place
        next.sort_unstable();
        faces_by_dim.push(next);
    }
    SimplicialComplex {
        n_vertices: g.n(),
        faces_by_dim,
    }
}

/// Sparse integer matrix in column-major form: `cols[j]` lists `(row, value)`
/// with rows ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMatrix {
    pub fn col_count(&self) -> usize {
        self.cols.len()
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> SparseIntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut cols = vec![Vec::new(); c];
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    cols[j].push((i, v));
                }
            }
        }
        SparseIntMatrix { rows: r, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] = v;
            }
        }
        out
    }
}

/// Matrix of the boundary map from d-chains to (d-1)-chains with the
/// alternating-sign rule on sorted vertex lists. `d = 0` is the augmentation
/// row (all ones) onto the empty face.
pub fn boundary_matrix(c: &SimplicialComplex, d: usize) -> Result<SparseIntMatrix, ComplexError> {
    if (d as isize) > c.dim() {
        return Err(ComplexError::DimensionOutOfRange { d, dim: c.dim() });
    }
    if d == 0 {
        let cols = (0..c.face_count(0)).map(|_| vec![(0usize, 1i64)]).collect();
        return Ok(SparseIntMatrix { rows: 1, cols });
    }
    let lower = &c.faces_by_dim[d - 1];
    let upper = &c.faces_by_dim[d];
    let mut cols = Vec::with_capacity(upper.len());
    let mut facet = Vec::with_capacity(d);
    for face in upper {
        let mut col = Vec::with_capacity(d + 1);
        for skip in 0..=d {
            facet.clear();
            facet.extend(face.iter().enumerate().filter(|&(t, _)| t != skip).map(|(_, &v)| v));
            let row = lower
                .binary_search(&facet)
                .expect("complex is closed under facets");
            let sign = if skip % 2 == 0 { 1 } else { -1 };
            col.push((row, sign));
        }
        col.sort_unstable_by_key(|&(row, _)| row);
        cols.push(col);
    }
    Ok(SparseIntMatrix {
        rows: lower.len(),
        cols,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn clique_complex_of_triangle_is_full() {
        let c = clique_complex(&generate::complete(3).unwrap());
        assert_eq!(c.dim(), 2);
        assert_eq!(c.face_count(0), 3);
        assert_eq!(c.face_count(1), 3);
        assert_eq!(c.face_count(2), 1);
        assert!(c.is_valid());
    }

    #[test]
    fn clique_complex_of_c4_is_one_dimensional() {
        let c = clique_complex(&generate::cycle(4).unwrap());
        assert_eq!(c.dim(), 1);
        assert_eq!(c.face_count(1), 4);
        assert!(c.is_valid());
    }

    #[test]
    fn clique_complex_of_isolated_vertices() {
        let c = clique_complex(&Graph::new(2).unwrap());
        assert_eq!(c.dim(), 0);
        assert_eq!(c.face_count(0), 2);
    }

    use crate::graph::Graph;

    #[test]
    fn boundary_of_single_edge() {
        let c = clique_complex(&Graph::from_edges(2, [(0, 1)]).unwrap());
        let b1 = boundary_matrix(&c, 1).unwrap();
        assert_eq!(b1.rows, 2);
        assert_eq!(b1.cols, vec![vec![(0, -1), (1, 1)]]);
    }

    #[test]
    fn augmentation_is_all_ones() {
        let c = clique_complex(&Graph::new(3).unwrap());
        let b0 = boundary_matrix(&c, 0).unwrap();
        assert_eq!(b0.rows, 1);
        assert_eq!(b0.cols.len(), 3);
        assert!(b0.cols.iter().all(|col| col == &vec![(0, 1)]));
    }

    #[test]
    fn boundary_composition_vanishes_on_k4() {
        let c = clique_complex(&generate::complete(4).unwrap());
        for d in 1..=c.dim() as usize {
            let hi = boundary_matrix(&c, d).unwrap().to_dense();
            let lo = boundary_matrix(&c, d - 1).unwrap().to_dense();
            let (r, mid, k) = (lo.len(), hi.len(), hi[0].len());
            for i in 0..r {
                for j in 0..k {
                    let mut sum = 0i64;
                    for t in 0..mid {
                        sum += lo[i][t] * hi[t][j];
                    }
                    assert_eq!(sum, 0, "composition nonzero at ({i},{j}) in dim {d}");
                }
            }
        }
    }

    #[test]
    fn out_of_range_dimension_is_an_error() {
        let c = clique_complex(&Graph::new(2).unwrap());
        assert!(boundary_matrix(&c, 1).is_err());
    }

    #[test]
    fn face_order_is_lexicographic() {
        let c = clique_complex(&generate::complete(4).unwrap());
        assert_eq!(
            c.faces_by_dim[1],
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
