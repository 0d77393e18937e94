//! Isoclinism of Leibniz n-algebras relative to the symmetrized bracket:
//! verification of a supplied witness pair, and small-scale search.
//!
//! A witness is a pair of invertible linear maps, one between the central
//! factors q/Z and one between the commutator ideals, making the square
//! formed with the induced bracket maps commute. The compatibility square is
//! checked on multisets of factor basis classes; full symmetry of the
//! symmetrized bracket makes that sufficient. Lift-independence of the
//! induced map is asserted rather than assumed: it is exactly centrality of
//! the factor kernel, so a failure flags an upstream bug.

use crate::algebra::{index_multisets, Algebra};
use crate::error::Error;
use crate::invariants::{lie_bracket, lie_center, lie_commutator};
use crate::linalg::{std_basis_vector, vec_add, Matrix, QuotientSpace, Subspace, Vector};
use crate::scalar::FieldSpec;

/// Canonical coordinates for the two invariant spaces of one algebra.
#[derive(Debug, Clone)]
pub struct FactorData {
    pub factor: QuotientSpace,
    pub commutator: Subspace,
}

pub fn factor_data(a: &Algebra) -> FactorData {
    let z = lie_center(a);
    FactorData {
        factor: QuotientSpace::new(a.dim(), &z),
        commutator: lie_commutator(a),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoclinismWitness {
    /// Factor map, in the canonical quotient coordinates of both sides.
    pub eta: Matrix,
    /// Commutator map, in the pivot coordinates of both subspaces.
    pub xi: Matrix,
}

impl IsoclinismWitness {
    pub fn identity(a: &Algebra) -> Self {
        let fd = factor_data(a);
        IsoclinismWitness {
            eta: Matrix::identity(a.field(), fd.factor.dim()),
            xi: Matrix::identity(a.field(), fd.commutator.dim()),
        }
    }

    /// The witness for the opposite direction, when both maps are invertible.
    pub fn inverse(&self) -> Option<IsoclinismWitness> {
        Some(IsoclinismWitness {
            eta: self.eta.inverse()?,
            xi: self.xi.inverse()?,
        })
    }
}

/// Symmetrized bracket of the lifts of the given factor coordinate vectors.
fn bracket_of_lifts(a: &Algebra, fd: &FactorData, coords: &[Vector], shift: Option<&Vector>) -> Vector {
    let args: Vec<Vector> = coords
        .iter()
        .map(|c| {
            let lift = fd.factor.lift(c);
            match shift {
                Some(z) => vec_add(&lift, z),
                None => lift,
            }
        })
        .collect();
    lie_bracket(a, &args)
}

fn factor_basis_coords(field: FieldSpec, f: usize, ms: &[usize]) -> Vec<Vector> {
    ms.iter()
        .map(|&i| std_basis_vector(field, f, i))
        .collect()
}

/// Checks a supplied witness. Shape mismatches between the matrices and the
/// computed invariant dimensions are errors; a shaped but incompatible or
/// singular witness yields `false`.
pub fn check_witness(
    qa: &Algebra,
    pa: &Algebra,
    w: &IsoclinismWitness,
) -> Result<bool, Error> {
    if qa.arity() != pa.arity() {
        return Err(Error::ArityMismatch {
            left: qa.arity(),
            right: pa.arity(),
        });
    }
    let fq = factor_data(qa);
    let fp = factor_data(pa);
    let (f_q, f_p) = (fq.factor.dim(), fp.factor.dim());
    let (c_q, c_p) = (fq.commutator.dim(), fp.commutator.dim());
    if w.eta.rows() != f_p || w.eta.cols() != f_q {
        return Err(Error::WitnessShape(format!(
            "factor map is {}x{}, expected {f_p}x{f_q}",
            w.eta.rows(),
            w.eta.cols()
        )));
    }
    if w.xi.rows() != c_p || w.xi.cols() != c_q {
        return Err(Error::WitnessShape(format!(
            "commutator map is {}x{}, expected {c_p}x{c_q}",
            w.xi.rows(),
            w.xi.cols()
        )));
    }
    if f_q != f_p || c_q != c_p {
        return Ok(false);
    }
    if w.eta.rank() != f_q || w.xi.rank() != c_q {
        return Ok(false);
    }

    // lift-independence: shifting any lift by a Lie-central element must not
    // change the induced bracket value
    let q_shift = fq.factor.sub.basis_vectors().into_iter().next();
    let p_shift = fp.factor.sub.basis_vectors().into_iter().next();

    let field = qa.field();
    for ms in index_multisets(f_q, qa.arity()) {
        let q_coords = factor_basis_coords(field, f_q, &ms);
        let b = bracket_of_lifts(qa, &fq, &q_coords, None);
        if let Some(z) = &q_shift {
            let b_alt = bracket_of_lifts(qa, &fq, &q_coords, Some(z));
            assert_eq!(b, b_alt, "induced bracket depends on the lift");
        }
        assert!(
            fq.commutator.contains(&b),
            "symmetrized bracket escapes the commutator ideal"
        );
        let lhs = w.xi.apply(&fq.commutator.coordinates(&b));

        let p_coords: Vec<Vector> = q_coords.iter().map(|c| w.eta.apply(c)).collect();
        let b2 = bracket_of_lifts(pa, &fp, &p_coords, None);
        if let Some(z) = &p_shift {
            let b2_alt = bracket_of_lifts(pa, &fp, &p_coords, Some(z));
            assert_eq!(b2, b2_alt, "induced bracket depends on the lift");
        }
        if !fp.commutator.contains(&b2) {
            return Ok(false);
        }
        let rhs = fp.commutator.coordinates(&b2);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(IsoclinismWitness),
    /// Definitive: no witness exists (dimension obstruction, or the
    /// exhaustive enumeration over the given prime field came up empty).
    NoneExists,
    /// The heuristic candidate set was exhausted without a verdict.
    Inconclusive,
}

/// Bounds for the exhaustive mode; beyond them the search degrades to the
/// heuristic candidate set and can only answer `Found` or `Inconclusive`.
pub const EXHAUSTIVE_MAX_DIM: usize = 3;
pub const EXHAUSTIVE_MAX_PRIME: u64 = 3;

/// All invertible f x f matrices over the prime field, by counting.
fn invertible_matrices_fp(p: u64, f: usize) -> Vec<Matrix> {
    let field = FieldSpec::Fp(p);
    let total = (p as u128).pow((f * f) as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut m = Matrix::zero(field, f, f);
        let mut rest = code;
        for r in 0..f {
            for c in 0..f {
                let digit = (rest % p as u128) as i64;
                rest /= p as u128;
                *m.at_mut(r, c) = field.from_i64(digit);
            }
        }
        if m.rank() == f {
            out.push(m);
        }
    }
    out
}

/// Signed permutation matrices: the heuristic candidate set over Q.
fn signed_permutations(field: FieldSpec, f: usize) -> Vec<Matrix> {
    let perms = crate::algebra::permutations(f);
    let mut out = Vec::new();
    for perm in perms {
        for signs in 0..(1u32 << f) {
            let mut m = Matrix::zero(field, f, f);
            for (c, &r) in perm.iter().enumerate() {
                let v = if signs & (1 << c) != 0 { -1 } else { 1 };
                *m.at_mut(r, c) = field.from_i64(v);
            }
            out.push(m);
        }
    }
    out
}

/// For a fixed factor map, the commutator map is determined linearly by the
/// compatibility square; solve for it and verify. Returns a full witness if
/// one exists for this factor map.
fn solve_commutator_map(
    qa: &Algebra,
    pa: &Algebra,
    fq: &FactorData,
    fp: &FactorData,
    eta: &Matrix,
) -> Option<IsoclinismWitness> {
    let field = qa.field();
    let f = fq.factor.dim();
    let c = fq.commutator.dim();
    let mut lhs_cols: Vec<Vector> = Vec::new();
    let mut rhs_cols: Vec<Vector> = Vec::new();
    for ms in index_multisets(f, qa.arity()) {
        let q_coords = factor_basis_coords(field, f, &ms);
        let b = bracket_of_lifts(qa, fq, &q_coords, None);
        let p_coords: Vec<Vector> = q_coords.iter().map(|cv| eta.apply(cv)).collect();
        let b2 = bracket_of_lifts(pa, fp, &p_coords, None);
        if !fp.commutator.contains(&b2) {
            return None;
        }
        lhs_cols.push(fq.commutator.coordinates(&b));
        rhs_cols.push(fp.commutator.coordinates(&b2));
    }
    // pick columns of the lhs forming an invertible c x c block
    let mut chosen = Vec::new();
    let mut span = Subspace::zero(field, c);
    for (idx, col) in lhs_cols.iter().enumerate() {
        if !span.contains(col) {
            chosen.push(idx);
            span = span
                .sum(&Subspace::from_generators(field, c, vec![col.clone()]))
                .unwrap();
            if chosen.len() == c {
                break;
            }
        }
    }
    if chosen.len() != c {
        // generators fail to span the commutator: upstream inconsistency
        return None;
    }
    let mut c_sub = Matrix::zero(field, c, c);
    let mut d_sub = Matrix::zero(field, c, c);
    for (j, &idx) in chosen.iter().enumerate() {
        for r in 0..c {
            *c_sub.at_mut(r, j) = lhs_cols[idx][r].clone();
            *d_sub.at_mut(r, j) = rhs_cols[idx][r].clone();
        }
    }
    let xi = d_sub.mul(&c_sub.inverse()?);
    if xi.rank() != c {
        return None;
    }
    // consistency on every remaining column
    for (l, r) in lhs_cols.iter().zip(&rhs_cols) {
        if &xi.apply(l) != r {
            return None;
        }
    }
    let w = IsoclinismWitness {
        eta: eta.clone(),
        xi,
    };
    match check_witness(qa, pa, &w) {
        Ok(true) => Some(w),
        _ => None,
    }
}

/// Searches for a witness. Dimension mismatches are a definitive `NoneExists`.
/// Over a prime field within the exhaustive bounds, every invertible factor
/// map is tried and an empty outcome is a proof of non-isoclinism over that
/// field; over the rationals only signed permutations are tried and failure
/// is `Inconclusive`.
pub fn search_witness(qa: &Algebra, pa: &Algebra) -> Result<SearchOutcome, Error> {
    if qa.arity() != pa.arity() {
        return Err(Error::ArityMismatch {
            left: qa.arity(),
            right: pa.arity(),
        });
    }
    if qa.field() != pa.field() {
        return Err(Error::FieldMismatch {
            left: qa.field(),
            right: pa.field(),
        });
    }
    let fq = factor_data(qa);
    let fp = factor_data(pa);
    let f = fq.factor.dim();
    let c = fq.commutator.dim();
    if f != fp.factor.dim() || c != fp.commutator.dim() {
        return Ok(SearchOutcome::NoneExists);
    }
    if f == 0 {
        // both commutators are forced to zero; the empty witness works
        let w = IsoclinismWitness {
            eta: Matrix::zero(qa.field(), 0, 0),
            xi: Matrix::zero(qa.field(), c, c),
        };
        debug_assert!(c == 0);
        return Ok(match check_witness(qa, pa, &w)? {
            true => SearchOutcome::Found(w),
            false => SearchOutcome::NoneExists,
        });
    }
    let (candidates, exhaustive) = match qa.field() {
        FieldSpec::Fp(p)
            if p <= EXHAUSTIVE_MAX_PRIME && f <= EXHAUSTIVE_MAX_DIM && c <= EXHAUSTIVE_MAX_DIM =>
        {
            (invertible_matrices_fp(p, f), true)
        }
        FieldSpec::Fp(_) => (Vec::new(), false),
        FieldSpec::Q => (signed_permutations(FieldSpec::Q, f), false),
    };
    if candidates.is_empty() && !exhaustive {
        return Ok(SearchOutcome::Inconclusive);
    }
    for eta in &candidates {
        if let Some(w) = solve_commutator_map(qa, pa, &fq, &fp, eta) {
            return Ok(SearchOutcome::Found(w));
        }
    }
    Ok(if exhaustive {
        SearchOutcome::NoneExists
    } else {
        SearchOutcome::Inconclusive
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::extensions::abelian_cover;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    #[test]
    fn identity_witness_is_reflexive() {
        for id in ["sq(1)", "paper-ex-1", "heis3"] {
            let a = catalog::get(id).unwrap().algebra;
            let w = IsoclinismWitness::identity(&a);
            assert!(check_witness(&a, &a, &w).unwrap(), "{id}");
        }
    }

    #[test]
    fn witness_symmetry() {
        let a = catalog::get("sq(1)").unwrap().algebra;
        let b = a.permute_basis(&[1, 0]).with_name("sq(1)-flipped");
        let out = search_witness(&a, &b).unwrap();
        let SearchOutcome::Found(w) = out else {
            panic!("expected a witness");
        };
        let back = w.inverse().unwrap();
        assert!(check_witness(&b, &a, &back).unwrap());
    }

    #[test]
    fn lie_abelian_algebras_all_isoclinic() {
        let ex1 = catalog::get("paper-ex-1").unwrap().algebra;
        let ab = Algebra::abelian(q(), 3, 1);
        let w = IsoclinismWitness {
            eta: Matrix::zero(q(), 0, 0),
            xi: Matrix::zero(q(), 0, 0),
        };
        assert!(check_witness(&ex1, &ab, &w).unwrap());
        let ex23 = catalog::get("paper-ex-23").unwrap().algebra;
        assert!(check_witness(&ex1, &ex23, &w).unwrap());
        assert!(matches!(
            search_witness(&ex23, &Algebra::abelian(q(), 3, 5)).unwrap(),
            SearchOutcome::Found(_)
        ));
    }

    #[test]
    fn dimension_obstruction_rejects() {
        let a = catalog::get("sq(1)").unwrap().algebra;
        let b = Algebra::abelian(q(), 2, 2);
        assert_eq!(search_witness(&a, &b).unwrap(), SearchOutcome::NoneExists);
        // a shaped-but-wrong candidate is false, not an error
        let w = IsoclinismWitness {
            eta: Matrix::zero(q(), 0, 1),
            xi: Matrix::zero(q(), 0, 1),
        };
        assert!(!check_witness(&a, &b, &w).unwrap());
    }

    #[test]
    fn permuted_covers_found_isoclinic() {
        let e1 = abelian_cover(q(), 2);
        let a = e1.total().clone();
        // permute the five basis vectors
        let b = a.permute_basis(&[4, 2, 0, 1, 3]).with_name("cover-permuted");
        assert!(b.is_valid());
        let out = search_witness(&a, &b).unwrap();
        assert!(matches!(out, SearchOutcome::Found(_)), "got {out:?}");
    }

    #[test]
    fn product_with_abelian_is_isoclinic() {
        let a = catalog::get("sq(1)").unwrap().algebra;
        let b = a.direct_product(&Algebra::abelian(q(), 2, 2)).unwrap();
        let fa = factor_data(&a);
        let fb = factor_data(&b);
        assert_eq!(fa.factor.dim(), fb.factor.dim());
        assert_eq!(fa.commutator.dim(), fb.commutator.dim());
        let out = search_witness(&a, &b).unwrap();
        assert!(matches!(out, SearchOutcome::Found(_)));
    }

    #[test]
    fn exhaustive_fp_search() {
        let f = FieldSpec::Fp(3);
        // sq(1) over F3 against itself: found
        let a = catalog::get_over("sq(1)", f).unwrap().algebra;
        assert!(matches!(
            search_witness(&a, &a).unwrap(),
            SearchOutcome::Found(_)
        ));
        // against a permuted copy: found
        let b = a.permute_basis(&[1, 0]);
        assert!(matches!(
            search_witness(&a, &b).unwrap(),
            SearchOutcome::Found(_)
        ));
    }

    #[test]
    fn found_witnesses_always_pass_check() {
        let pairs = [
            ("sq(1)", "sq(1)"),
            ("paper-ex-1", "paper-ex-23"),
            ("heis3", "heis3"),
        ];
        for (x, y) in pairs {
            let a = catalog::get(x).unwrap().algebra;
            let b = catalog::get(y).unwrap().algebra;
            if let SearchOutcome::Found(w) = search_witness(&a, &b).unwrap() {
                assert!(check_witness(&a, &b, &w).unwrap(), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn invertible_enumeration_counts() {
        // |GL(2,2)| = 6, |GL(2,3)| = 48
        assert_eq!(invertible_matrices_fp(2, 2).len(), 6);
        assert_eq!(invertible_matrices_fp(3, 2).len(), 48);
    }
}
