//! The Leibniz n-algebra data model: structure tensor, multilinear bracket
//! evaluation, fundamental-identity validation, ideals, quotients, direct
//! products, and homomorphism checking.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::Error;
use crate::linalg::{
    std_basis_vector, vec_add, vec_is_zero, vec_scale, zero_vector, Matrix, QuotientSpace,
    Subspace, Vector,
};
use crate::scalar::{FieldSpec, Scalar};

/// All length-`len` index tuples over `[0, d)`, in lexicographic order.
pub fn index_tuples(d: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    if d == 0 {
        return out;
    }
    let mut cur = vec![0usize; len];
    loop {
        out.push(cur.clone());
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < d {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// All non-decreasing length-`len` index tuples over `[0, d)` (multisets).
pub fn index_multisets(d: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(d: usize, len: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(d, len, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, len, 0, &mut Vec::new(), &mut out);
    out
}

/// All permutations of `0..n`, in a deterministic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// A counterexample to the fundamental identity on basis tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// A finite-dimensional Leibniz n-algebra given by structure constants.
///
/// The tensor is sparse: an absent tuple means the bracket of those basis
/// vectors is zero. Constructors do not validate the fundamental identity;
/// `violations`/`is_valid` check it on demand and cache the outcome.
#[derive(Debug, Clone)]
pub struct Algebra {
    name: String,
    arity: usize,
    dim: usize,
    field: FieldSpec,
    basis_labels: Vec<String>,
    tensor: BTreeMap<Vec<usize>, Vector>,
    validated: OnceLock<Vec<IdentityViolation>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.arity == other.arity
            && self.dim == other.dim
            && self.field == other.field
            && self.basis_labels == other.basis_labels
            && self.tensor == other.tensor
    }
}

impl Algebra {
    pub fn new(
        name: impl Into<String>,
        arity: usize,
        dim: usize,
        field: FieldSpec,
        basis_labels: Vec<String>,
        tensor: BTreeMap<Vec<usize>, Vector>,
    ) -> Result<Self, Error> {
        assert!(arity >= 2, "arity must be at least 2");
        if basis_labels.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: basis_labels.len(),
            });
        }
        let mut clean = BTreeMap::new();
        for (args, value) in tensor {
            if args.len() != arity {
                return Err(Error::DimensionMismatch {
                    expected: arity,
                    got: args.len(),
                });
            }
            if args.iter().any(|&i| i >= dim) {
                return Err(Error::BadFile(format!("basis index out of range in {args:?}")));
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: value.len(),
                });
            }
            for c in &value {
                if c.field() != field {
                    return Err(Error::FieldMismatch {
                        left: field,
                        right: c.field(),
                    });
                }
            }
            if !vec_is_zero(&value) {
                clean.insert(args, value);
            }
        }
        Ok(Algebra {
            name: name.into(),
            arity,
            dim,
            field,
            basis_labels,
            tensor: clean,
            validated: OnceLock::new(),
        })
    }

    /// The zero-bracket algebra of the given arity and dimension.
    pub fn abelian(field: FieldSpec, arity: usize, dim: usize) -> Self {
        let labels = (0..dim).map(|i| format!("e{}", i + 1)).collect();
        Algebra::new(
            format!("abelian({arity},{dim})"),
            arity,
            dim,
            field,
            labels,
            BTreeMap::new(),
        )
        .unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn tensor(&self) -> &BTreeMap<Vec<usize>, Vector> {
        &self.tensor
    }

    pub fn with_name(&self, name: impl Into<String>) -> Algebra {
        let mut a = self.clone();
        a.name = name.into();
        a
    }

    pub fn zero_vec(&self) -> Vector {
        zero_vector(self.field, self.dim)
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        std_basis_vector(self.field, self.dim, i)
    }

    /// Bracket of basis vectors, straight from the tensor.
    pub fn bracket_basis(&self, args: &[usize]) -> Vector {
        debug_assert_eq!(args.len(), self.arity);
        self.tensor
            .get(args)
            .cloned()
            .unwrap_or_else(|| self.zero_vec())
    }

    /// Multilinear expansion of the bracket on arbitrary vectors.
    pub fn eval_bracket(&self, args: &[Vector]) -> Vector {
        assert_eq!(args.len(), self.arity, "wrong number of bracket arguments");
        for a in args {
            assert_eq!(a.len(), self.dim, "argument dimension mismatch");
        }
        let mut acc = self.zero_vec();
        'entry: for (t, value) in &self.tensor {
            let mut coeff = self.field.one();
            for (k, &i) in t.iter().enumerate() {
                let c = &args[k][i];
                if c.is_zero() {
                    continue 'entry;
                }
                coeff = coeff.mul(c);
            }
            acc = vec_add(&acc, &vec_scale(&coeff, value));
        }
        acc
    }

    /// Violations of the fundamental identity, checked on all basis tuples.
    /// Multilinearity of both sides makes basis tuples sufficient. Cached.
    pub fn violations(&self) -> &[IdentityViolation] {
        self.validated.get_or_init(|| {
            let n = self.arity;
            let d = self.dim;
            let mut out = Vec::new();
            for xs in index_tuples(d, n) {
                let inner = self.bracket_basis(&xs);
                for ys in index_tuples(d, n - 1) {
                    let y_vecs: Vec<Vector> = ys.iter().map(|&j| self.basis_vec(j)).collect();
                    let mut lhs_args = vec![inner.clone()];
                    lhs_args.extend(y_vecs.iter().cloned());
                    let lhs = self.eval_bracket(&lhs_args);

                    let mut rhs = self.zero_vec();
                    for i in 0..n {
                        let mut args: Vec<Vector> =
                            xs.iter().map(|&k| self.basis_vec(k)).collect();
                        let mut inner_args = vec![self.basis_vec(xs[i])];
                        inner_args.extend(y_vecs.iter().cloned());
                        args[i] = self.eval_bracket(&inner_args);
                        rhs = vec_add(&rhs, &self.eval_bracket(&args));
                    }
                    if lhs != rhs {
                        out.push(IdentityViolation {
                            xs: xs.clone(),
                            ys,
                            lhs: lhs.clone(),
                            rhs,
                        });
                    }
                }
            }
            out
        })
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// True iff the bracket is anti-symmetric in every pair of slots, i.e.
    /// the algebra is an n-Lie (Filippov) algebra.
    pub fn is_n_lie(&self) -> bool {
        let n = self.arity;
        for t in index_tuples(self.dim, n) {
            let v = self.bracket_basis(&t);
            for p in 0..n {
                for q in (p + 1)..n {
                    if t[p] == t[q] {
                        if !vec_is_zero(&v) {
                            return false;
                        }
                        continue;
                    }
                    let mut s = t.clone();
                    s.swap(p, q);
                    let w = self.bracket_basis(&s);
                    if vec_add(&v, &w).iter().any(|c| !c.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff brackets with a member of `s` in any slot land back in `s`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient_dim(), self.dim);
        let n = self.arity;
        for u in s.basis_vectors() {
            for p in 0..n {
                for fill in index_tuples(self.dim, n - 1) {
                    let w = self.eval_with_slot(&u, p, &fill);
                    if !s.contains(&w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Bracket with `u` in slot `p` and basis vectors `fill` in the others.
    pub fn eval_with_slot(&self, u: &Vector, p: usize, fill: &[usize]) -> Vector {
        let mut args: Vec<Vector> = Vec::with_capacity(self.arity);
        let mut it = fill.iter();
        for k in 0..self.arity {
            if k == p {
                args.push(u.clone());
            } else {
                args.push(self.basis_vec(*it.next().unwrap()));
            }
        }
        self.eval_bracket(&args)
    }

    /// Smallest ideal containing `generators`, by fixpoint iteration.
    pub fn ideal_closure(&self, generators: &Subspace) -> Subspace {
        assert_eq!(generators.ambient_dim(), self.dim);
        let n = self.arity;
        let mut current = generators.clone();
        loop {
            let mut new_vecs = Vec::new();
            for u in current.basis_vectors() {
                for p in 0..n {
                    for fill in index_tuples(self.dim, n - 1) {
                        let w = self.eval_with_slot(&u, p, &fill);
                        if !vec_is_zero(&w) && !current.contains(&w) {
                            new_vecs.push(w);
                        }
                    }
                }
            }
            if new_vecs.is_empty() {
                return current;
            }
            let add = Subspace::from_generators(self.field, self.dim, new_vecs);
            current = current.sum(&add).unwrap();
        }
    }

    /// Quotient by an ideal, with the canonical projection. Representatives
    /// are the non-pivot standard basis vectors.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, Homomorphism), Error> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let qs = QuotientSpace::new(self.dim, ideal);
        let qdim = qs.dim();
        let labels: Vec<String> = qs
            .rep_indices
            .iter()
            .map(|&i| self.basis_labels[i].clone())
            .collect();
        let mut tensor = BTreeMap::new();
        for t in index_tuples(qdim, self.arity) {
            let args: Vec<Vector> = t
                .iter()
                .map(|&k| self.basis_vec(qs.rep_indices[k]))
                .collect();
            let w = qs.project(&self.eval_bracket(&args));
            if !vec_is_zero(&w) {
                tensor.insert(t, w);
            }
        }
        let quotient = Algebra::new(
            format!("{}/ideal", self.name),
            self.arity,
            qdim,
            self.field,
            labels,
            tensor,
        )?;
        let proj = Homomorphism::new(self.clone(), quotient.clone(), qs.coord_map.clone())?;
        debug_assert!(proj.is_homomorphism());
        Ok((quotient, proj))
    }

    /// The same algebra with basis vector `i` renamed to `perm[i]`.
    pub fn permute_basis(&self, perm: &[usize]) -> Algebra {
        assert_eq!(perm.len(), self.dim);
        let mut labels = vec![String::new(); self.dim];
        for (i, &pi) in perm.iter().enumerate() {
            labels[pi] = self.basis_labels[i].clone();
        }
        let mut tensor = BTreeMap::new();
        for (t, v) in &self.tensor {
            let new_t: Vec<usize> = t.iter().map(|&i| perm[i]).collect();
            let mut new_v = zero_vector(self.field, self.dim);
            for (i, c) in v.iter().enumerate() {
                new_v[perm[i]] = c.clone();
            }
            tensor.insert(new_t, new_v);
        }
        Algebra::new(
            format!("{}~perm", self.name),
            self.arity,
            self.dim,
            self.field,
            labels,
            tensor,
        )
        .unwrap()
    }

    /// Componentwise bracket on the direct sum of the underlying spaces.
    pub fn direct_product(&self, other: &Algebra) -> Result<Algebra, Error> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        let dim = self.dim + other.dim;
        let mut labels: Vec<String> = self
            .basis_labels
            .iter()
            .map(|l| format!("l.{l}"))
            .collect();
        labels.extend(other.basis_labels.iter().map(|l| format!("r.{l}")));
        let mut tensor = BTreeMap::new();
        let field = self.field;
        for (t, v) in &self.tensor {
            let mut value = v.clone();
            value.extend(zero_vector(field, other.dim));
            tensor.insert(t.clone(), value);
        }
        for (t, v) in &other.tensor {
            let shifted: Vec<usize> = t.iter().map(|&i| i + self.dim).collect();
            let mut value = zero_vector(field, self.dim);
            value.extend(v.iter().cloned());
            tensor.insert(shifted, value);
        }
        Algebra::new(
            format!("{}x{}", self.name, other.name),
            self.arity,
            dim,
            field,
            labels,
            tensor,
        )
    }
}

/// A linear map between algebras of equal arity, as a matrix acting on
/// coordinate columns. Bracket preservation is a checked property.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    domain: Algebra,
    codomain: Algebra,
    matrix: Matrix,
    checked: OnceLock<bool>,
}

impl Homomorphism {
    pub fn new(domain: Algebra, codomain: Algebra, matrix: Matrix) -> Result<Self, Error> {
        if domain.arity() != codomain.arity() {
            return Err(Error::ArityMismatch {
                left: domain.arity(),
                right: codomain.arity(),
            });
        }
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(Error::DimensionMismatch {
                expected: codomain.dim() * domain.dim(),
                got: matrix.rows() * matrix.cols(),
            });
        }
        Ok(Homomorphism {
            domain,
            codomain,
            matrix,
            checked: OnceLock::new(),
        })
    }

    pub fn identity(a: &Algebra) -> Self {
        Homomorphism::new(a.clone(), a.clone(), Matrix::identity(a.field(), a.dim())).unwrap()
    }

    pub fn domain(&self) -> &Algebra {
        &self.domain
    }

    pub fn codomain(&self) -> &Algebra {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    /// Bracket preservation on all basis tuples of the domain (sufficient
    /// by multilinearity). Cached.
    pub fn is_homomorphism(&self) -> bool {
        *self.checked.get_or_init(|| {
            for t in index_tuples(self.domain.dim(), self.domain.arity()) {
                let lhs = self.apply(&self.domain.bracket_basis(&t));
                let images: Vec<Vector> = t
                    .iter()
                    .map(|&i| self.apply(&self.domain.basis_vec(i)))
                    .collect();
                let rhs = self.codomain.eval_bracket(&images);
                if lhs != rhs {
                    return false;
                }
            }
            true
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.codomain.dim()
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    /// Composition `self ∘ first`.
    pub fn compose(first: &Homomorphism, second: &Homomorphism) -> Result<Homomorphism, Error> {
        if first.codomain.dim() != second.domain.dim() {
            return Err(Error::DimensionMismatch {
                expected: second.domain.dim(),
                got: first.codomain.dim(),
            });
        }
        Homomorphism::new(
            first.domain.clone(),
            second.codomain.clone(),
            second.matrix.mul(&first.matrix),
        )
    }
}
