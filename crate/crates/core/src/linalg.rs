//! Exact linear algebra: matrices, reduced row-echelon form, kernels, and
//! the subspace lattice (sum, intersection, membership, quotients).
//!
//! Subspaces are always held with their basis in reduced row-echelon form,
//! so subspace equality is syntactic equality of the basis matrices.

use crate::error::Error;
use crate::scalar::{FieldSpec, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldSpec, dim: usize) -> Vector {
    vec![field.zero(); dim]
}

pub fn std_basis_vector(field: FieldSpec, dim: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, dim);
    v[i] = field.one();
    v
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c.mul(x)).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Dense matrix over an exact field, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vector>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        let n = rows.len();
        Matrix {
            field,
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    let e = self.at(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc = acc.add(&e.mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let cur = out.at(r, c).add(&a.mul(b));
                        *out.at_mut(r, c) = cur;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    /// Unique reduced row-echelon form with zero rows dropped.
    pub fn rref(&self) -> Matrix {
        let mut rows = self.row_vectors();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            // find a row with non-zero entry in this column
            let Some(sel) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(pivot_row, sel);
            let inv = rows[pivot_row][col].inv();
            rows[pivot_row] = vec_scale(&inv, &rows[pivot_row]);
            for r in 0..rows.len() {
                if r != pivot_row && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    rows[r] = vec_sub(&rows[r], &vec_scale(&factor, &rows[pivot_row]));
                }
            }
            pivot_row += 1;
            if pivot_row == rows.len() {
                break;
            }
        }
        rows.truncate(pivot_row);
        Matrix::from_rows(self.field, self.cols, rows)
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    /// Pivot columns of an RREF matrix (strictly increasing by construction).
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .position(|e| !e.is_zero())
                    .expect("RREF row is zero")
            })
            .collect()
    }

    /// Inverse of a square matrix, by row-reducing the augmented system.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zero(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = self.field.one();
        }
        let red = aug.rref();
        if red.rows() != n || red.pivots() != (0..n).collect::<Vec<_>>() {
            return None;
        }
        let mut inv = Matrix::zero(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                *inv.at_mut(r, c) = red.at(r, n + c).clone();
            }
        }
        Some(inv)
    }

    /// Null space {v : M v = 0}, in canonical form.
    pub fn kernel(&self) -> Subspace {
        let r = self.rref();
        let pivots = r.pivots();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().peekable();
        let free_cols: Vec<usize> = (0..self.cols)
            .filter(|c| {
                if piv_iter.peek() == Some(&c) {
                    piv_iter.next();
                    false
                } else {
                    true
                }
            })
            .collect();
        for &fc in &free_cols {
            let mut v = zero_vector(self.field, self.cols);
            v[fc] = self.field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = r.at(i, fc).neg();
            }
            basis.push(v);
        }
        Subspace::from_generators(self.field, self.cols, basis)
    }
}

/// A subspace of K^n, stored as an RREF basis matrix. Canonical: two
/// subspaces are equal iff their basis matrices are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zero(field, 0, ambient_dim),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
        }
    }

    pub fn from_generators(field: FieldSpec, ambient_dim: usize, gens: Vec<Vector>) -> Self {
        let m = Matrix::from_rows(field, ambient_dim, gens);
        Subspace {
            ambient_dim,
            basis: m.rref(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.pivots()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let mut gens = self.basis_vectors();
        gens.extend(other.basis_vectors());
        Ok(Subspace::from_generators(
            self.field(),
            self.ambient_dim,
            gens,
        ))
    }

    /// Intersection via the kernel of the stacked coefficient system:
    /// a vector in both spans is u·A = w·B with coefficient vector (u, w).
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let field = self.field();
        let (da, db) = (self.dim(), other.dim());
        // columns: coefficients on self basis, then on other basis;
        // rows: one equation per ambient coordinate.
        let mut sys = Matrix::zero(field, self.ambient_dim, da + db);
        for j in 0..da {
            for i in 0..self.ambient_dim {
                *sys.at_mut(i, j) = self.basis.at(j, i).clone();
            }
        }
        for j in 0..db {
            for i in 0..self.ambient_dim {
                *sys.at_mut(i, da + j) = other.basis.at(j, i).neg();
            }
        }
        let ker = sys.kernel();
        let gens = ker
            .basis_vectors()
            .into_iter()
            .map(|coeffs| {
                let mut v = zero_vector(field, self.ambient_dim);
                for j in 0..da {
                    if !coeffs[j].is_zero() {
                        v = vec_add(&v, &vec_scale(&coeffs[j], self.basis.row(j)));
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_generators(field, self.ambient_dim, gens))
    }

    /// Exact membership test. Because the basis is in RREF, a member must
    /// equal the combination determined by its pivot coordinates.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        let mut rem = v.to_vec();
        for (i, &pc) in self.pivots().iter().enumerate() {
            if !rem[pc].is_zero() {
                let c = rem[pc].clone();
                rem = vec_sub(&rem, &vec_scale(&c, self.basis.row(i)));
            }
        }
        vec_is_zero(&rem)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Coordinates of a member vector in the RREF basis: the entries at the
    /// pivot positions. Panics if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Vector {
        assert!(self.contains(v), "vector not in subspace");
        self.pivots().iter().map(|&pc| v[pc].clone()).collect()
    }
}

/// Data for working in a quotient space K^n / sub: the non-pivot standard
/// basis vectors as representatives, and the linear map sending an ambient
/// vector to its quotient coordinates.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    pub sub: Subspace,
    /// Indices of the standard basis vectors chosen as representatives.
    pub rep_indices: Vec<usize>,
    /// (quotient dim) x (ambient dim) coordinate map.
    pub coord_map: Matrix,
}

impl QuotientSpace {
    pub fn new(ambient_dim: usize, sub: &Subspace) -> Self {
        assert_eq!(sub.ambient_dim(), ambient_dim);
        let field = sub.field();
        let pivots = sub.pivots();
        let rep_indices: Vec<usize> = (0..ambient_dim)
            .filter(|i| !pivots.contains(i))
            .collect();
        // reduce v modulo sub: subtract pivot-coordinate multiples of basis
        // rows, leaving support on non-pivot columns; then read those off.
        let qdim = rep_indices.len();
        let mut coord_map = Matrix::zero(field, qdim, ambient_dim);
        for (row, &ri) in rep_indices.iter().enumerate() {
            *coord_map.at_mut(row, ri) = field.one();
        }
        for (j, &pc) in pivots.iter().enumerate() {
            // e_{pc} reduces to -(non-pivot part of basis row j)
            for (row, &ri) in rep_indices.iter().enumerate() {
                *coord_map.at_mut(row, pc) = sub.basis().at(j, ri).neg();
            }
        }
        QuotientSpace {
            ambient_dim,
            sub: sub.clone(),
            rep_indices,
            coord_map,
        }
    }

    pub fn dim(&self) -> usize {
        self.rep_indices.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.sub.field()
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.coord_map.apply(v)
    }

    /// Ambient representative of a quotient coordinate vector.
    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        let mut v = zero_vector(self.field(), self.ambient_dim);
        for (j, &ri) in self.rep_indices.iter().enumerate() {
            v[ri] = coords[j].clone();
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            q(),
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| q().from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_zero_matrix_drops_rows() {
        let m = mat(&[&[0, 0], &[0, 0]]);
        let r = m.rref();
        assert_eq!(r.rows(), 0);
        assert_eq!(r.cols(), 2);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = mat(&[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), mat(&[&[1, 2]]));
    }

    #[test]
    fn rref_identity_fixed_point() {
        let m = mat(&[&[1, 0], &[0, 1]]);
        assert_eq!(m.rref(), m);
    }

    #[test]
    fn kernel_identity_is_zero() {
        let k = Matrix::identity(q(), 3).kernel();
        assert!(k.is_zero());
        assert_eq!(k.ambient_dim(), 3);
    }

    #[test]
    fn kernel_zero_matrix_is_full() {
        let k = Matrix::zero(q(), 2, 3).kernel();
        assert!(k.is_full());
    }

    #[test]
    fn kernel_single_equation() {
        // x + y = 0  =>  span{(1,-1)}
        let k = mat(&[&[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[q().one(), q().from_i64(-1)]));
    }

    fn e(i: usize, n: usize) -> Vector {
        std_basis_vector(q(), n, i)
    }

    #[test]
    fn sum_of_axes() {
        let a = Subspace::from_generators(q(), 3, vec![e(0, 3)]);
        let b = Subspace::from_generators(q(), 3, vec![e(1, 3)]);
        let s = a.sum(&b).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&e(0, 3)) && s.contains(&e(1, 3)));
    }

    #[test]
    fn intersect_planes() {
        let a = Subspace::from_generators(q(), 3, vec![e(0, 3), e(1, 3)]);
        let b = Subspace::from_generators(q(), 3, vec![e(1, 3), e(2, 3)]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::from_generators(q(), 3, vec![e(1, 3)]));
        // dimension formula cross-check
        let s = a.sum(&b).unwrap();
        assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
    }

    #[test]
    fn contains_negative_case() {
        let a = Subspace::from_generators(q(), 2, vec![e(0, 2)]);
        assert!(!a.contains(&e(1, 2)));
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let a = Subspace::zero(q(), 2);
        let b = Subspace::zero(q(), 3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
    }

    #[test]
    fn quotient_by_zero_subspace() {
        let qs = QuotientSpace::new(2, &Subspace::zero(q(), 2));
        assert_eq!(qs.rep_indices, vec![0, 1]);
        assert_eq!(qs.project(&e(0, 2)), e(0, 2));
    }

    #[test]
    fn quotient_by_axis() {
        let sub = Subspace::from_generators(q(), 2, vec![e(1, 2)]);
        let qs = QuotientSpace::new(2, &sub);
        assert_eq!(qs.rep_indices, vec![0]);
        assert!(vec_is_zero(&qs.project(&e(1, 2))));
        assert_eq!(qs.project(&e(0, 2)), vec![q().one()]);
    }

    #[test]
    fn quotient_by_full_space() {
        let qs = QuotientSpace::new(2, &Subspace::full(q(), 2));
        assert!(qs.rep_indices.is_empty());
        assert_eq!(qs.dim(), 0);
    }

    #[test]
    fn quotient_coords_respect_cosets() {
        // sub = span{(1, 2, 0)}; e1 and e1 + (1,2,0) have equal coordinates
        let sub = Subspace::from_generators(
            q(),
            3,
            vec![vec![q().one(), q().from_i64(2), q().zero()]],
        );
        let qs = QuotientSpace::new(3, &sub);
        let v = e(1, 3);
        let shifted = vec_add(&v, sub.basis().row(0));
        assert_eq!(qs.project(&v), qs.project(&shifted));
    }

    #[test]
    fn coordinates_reconstruct_member() {
        let sub = Subspace::from_generators(
            q(),
            3,
            vec![
                vec![q().one(), q().zero(), q().from_i64(3)],
                vec![q().zero(), q().one(), q().from_i64(-1)],
            ],
        );
        let v = vec![q().from_i64(2), q().from_i64(5), q().one()];
        assert!(sub.contains(&v));
        let coords = sub.coordinates(&v);
        let mut rebuilt = zero_vector(q(), 3);
        for (c, row) in coords.iter().zip(sub.basis_vectors()) {
            rebuilt = vec_add(&rebuilt, &vec_scale(c, &row));
        }
        assert_eq!(rebuilt, v);
    }

    #[test]
    fn fp_linalg_works() {
        let f = FieldSpec::Fp(3);
        let m = Matrix::from_rows(
            f,
            2,
            vec![
                vec![f.from_i64(1), f.from_i64(1)],
                vec![f.from_i64(1), f.from_i64(2)],
            ],
        );
        assert_eq!(m.rank(), 2);
        let singular = Matrix::from_rows(
            f,
            2,
            vec![
                vec![f.from_i64(1), f.from_i64(2)],
                vec![f.from_i64(2), f.from_i64(1 + 3)],
            ],
        );
        assert_eq!(singular.rank(), 1);
        assert_eq!(singular.kernel().dim(), 1);
    }
}
