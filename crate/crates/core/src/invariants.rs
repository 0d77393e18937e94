//! Lie-relative invariants of a Leibniz n-algebra: the symmetrized bracket,
//! Lie-center, Lie-commutator, plain center/commutator, the repeated-argument
//! ideal and the induced n-Lie quotient, dimension bounds, and the relative
//! quantities feeding the exactness check on quotient tails.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{index_multisets, index_tuples, permutations, Algebra, Homomorphism};
use crate::error::Error;
use crate::linalg::{vec_add, vec_is_zero, Matrix, QuotientSpace, Subspace, Vector};
use crate::scalar::FieldSpec;

/// Number of worker threads for the span-enumeration kernels, from the
/// `NLEIB_WORKERS` environment variable. Results are canonicalized, so the
/// outcome is identical for any worker count.
pub fn worker_count() -> usize {
    std::env::var("NLEIB_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w >= 1)
        .map(|w| w.min(64))
        .unwrap_or(1)
}

/// Span of the vectors produced by `gen` applied to each work item, with the
/// items partitioned across workers and the partial spans merged in order.
fn span_of<T, F>(field: FieldSpec, dim: usize, items: &[T], gen: F) -> Subspace
where
    T: Sync,
    F: Fn(&T) -> Vector + Sync,
{
    let workers = worker_count().min(items.len().max(1));
    if workers <= 1 {
        let gens = items.iter().map(&gen).collect();
        return Subspace::from_generators(field, dim, gens);
    }
    let chunk = items.len().div_ceil(workers);
    let partials: Vec<Subspace> = std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let gen = &gen;
                s.spawn(move || {
                    Subspace::from_generators(field, dim, part.iter().map(gen).collect())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    partials
        .into_iter()
        .fold(Subspace::zero(field, dim), |acc, p| acc.sum(&p).unwrap())
}

/// The symmetrized bracket: the sum of the algebra bracket over all n!
/// orderings of the arguments.
pub fn lie_bracket(a: &Algebra, args: &[Vector]) -> Vector {
    assert_eq!(args.len(), a.arity());
    let mut acc = a.zero_vec();
    for perm in permutations(a.arity()) {
        let ordered: Vec<Vector> = perm.iter().map(|&i| args[i].clone()).collect();
        acc = vec_add(&acc, &a.eval_bracket(&ordered));
    }
    acc
}

/// Independent route to the same value: bracket the sum of the arguments
/// with itself n times, then subtract the bracket over every non-injective
/// index tuple. Exists solely as a cross-check for `lie_bracket`.
pub fn lie_bracket_oracle(a: &Algebra, args: &[Vector]) -> Vector {
    let n = a.arity();
    assert_eq!(args.len(), n);
    let mut s = a.zero_vec();
    for v in args {
        s = vec_add(&s, v);
    }
    let mut acc = a.eval_bracket(&vec![s; n]);
    for t in index_tuples(n, n) {
        let mut seen = vec![false; n];
        let injective = t.iter().all(|&i| !std::mem::replace(&mut seen[i], true));
        if injective {
            continue;
        }
        let chosen: Vec<Vector> = t.iter().map(|&i| args[i].clone()).collect();
        let term = a.eval_bracket(&chosen);
        acc = crate::linalg::vec_sub(&acc, &term);
    }
    acc
}

/// Span of all symmetrized brackets of basis vectors. Full symmetry of the
/// symmetrized bracket makes multisets of basis indices sufficient. The
/// result is asserted to be an ideal; a failure would be an implementation
/// bug, not a property of the input.
pub fn lie_commutator(a: &Algebra) -> Subspace {
    let multisets = index_multisets(a.dim(), a.arity());
    let span = span_of(a.field(), a.dim(), &multisets, |ms| {
        let args: Vec<Vector> = ms.iter().map(|&i| a.basis_vec(i)).collect();
        lie_bracket(a, &args)
    });
    assert!(
        a.is_ideal(&span),
        "span of symmetrized brackets is not an ideal"
    );
    span
}

/// {x : [x, q, ..., q]_sym = 0}, as the kernel of a stacked linear system.
pub fn lie_center(a: &Algebra) -> Subspace {
    let d = a.dim();
    let n = a.arity();
    let field = a.field();
    let mut rows: Vec<Vector> = Vec::new();
    for ms in index_multisets(d, n - 1) {
        // columns of this block: image of each basis vector in slot one
        let images: Vec<Vector> = (0..d)
            .map(|i| {
                let mut args = vec![a.basis_vec(i)];
                args.extend(ms.iter().map(|&j| a.basis_vec(j)));
                lie_bracket(a, &args)
            })
            .collect();
        for r in 0..d {
            rows.push((0..d).map(|i| images[i][r].clone()).collect());
        }
    }
    Matrix::from_rows(field, d, rows).kernel()
}

/// The plain center: vectors annihilating the (unsymmetrized) bracket in
/// every slot position against every basis filling.
pub fn center(a: &Algebra) -> Subspace {
    let d = a.dim();
    let n = a.arity();
    let field = a.field();
    let mut rows: Vec<Vector> = Vec::new();
    for p in 0..n {
        for fill in index_tuples(d, n - 1) {
            let images: Vec<Vector> = (0..d)
                .map(|i| a.eval_with_slot(&a.basis_vec(i), p, &fill))
                .collect();
            for r in 0..d {
                rows.push((0..d).map(|i| images[i][r].clone()).collect());
            }
        }
    }
    Matrix::from_rows(field, d, rows).kernel()
}

/// The ideal generated by all plain bracket values.
pub fn commutator(a: &Algebra) -> Subspace {
    let tuples = index_tuples(a.dim(), a.arity());
    let span = span_of(a.field(), a.dim(), &tuples, |t| a.bracket_basis(t));
    a.ideal_closure(&span)
}

/// The ideal generated by brackets with a repeated argument, produced by
/// polarization over unordered basis pairs. Needs 2 invertible, so
/// characteristic 2 is rejected.
pub fn n_leib_ideal(a: &Algebra) -> Result<Subspace, Error> {
    if a.field().characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let d = a.dim();
    let n = a.arity();
    let mut gens = Vec::new();
    for p in 0..n {
        for q in (p + 1)..n {
            for k in 0..d {
                for l in k..d {
                    for fill in index_tuples(d, n - 2) {
                        let mut args_kl = Vec::with_capacity(n);
                        let mut args_lk = Vec::with_capacity(n);
                        let mut it = fill.iter();
                        for slot in 0..n {
                            if slot == p {
                                args_kl.push(k);
                                args_lk.push(l);
                            } else if slot == q {
                                args_kl.push(l);
                                args_lk.push(k);
                            } else {
                                let f = *it.next().unwrap();
                                args_kl.push(f);
                                args_lk.push(f);
                            }
                        }
                        let v = vec_add(&a.bracket_basis(&args_kl), &a.bracket_basis(&args_lk));
                        if !vec_is_zero(&v) {
                            gens.push(v);
                        }
                    }
                }
            }
        }
    }
    let span = Subspace::from_generators(a.field(), d, gens);
    Ok(a.ideal_closure(&span))
}

/// Quotient by the repeated-argument ideal; the result is an n-Lie algebra,
/// asserted as a postcondition.
pub fn liezation(a: &Algebra) -> Result<(Algebra, Homomorphism), Error> {
    let ideal = n_leib_ideal(a)?;
    let (quot, proj) = a.quotient(&ideal)?;
    assert!(
        quot.is_n_lie(),
        "quotient by the repeated-argument ideal is not an n-Lie algebra"
    );
    Ok((quot, proj))
}

/// True iff the Lie-commutator vanishes; cross-checked against the
/// equivalent condition that the Lie-center is everything.
pub fn is_lie_abelian(a: &Algebra) -> bool {
    let by_commutator = lie_commutator(a).is_zero();
    let by_center = lie_center(a).is_full();
    assert_eq!(
        by_commutator, by_center,
        "the two characterizations of Lie-abelian disagree"
    );
    by_commutator
}

pub fn is_lie_perfect(a: &Algebra) -> bool {
    lie_commutator(a).is_full()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Upper bound for the dimension of the Lie-commutator of an algebra whose
/// Lie-central factor has dimension k: sum over i of C(n-1, i-1) * C(k, i).
pub fn bound_b(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::zero();
    for i in 1..=n as u64 {
        acc += binomial(n as u64 - 1, i - 1) * binomial(k as u64, i);
    }
    acc
}

/// Crude bound k^n for the plain commutator with k-dimensional central factor.
pub fn bound_crude(n: usize, k: usize) -> BigUint {
    BigUint::from(k).pow(n as u32)
}

/// The ideal generated by symmetrized brackets with a member of `m` in the
/// first slot and ambient basis vectors elsewhere.
pub fn relative_lie_bracket_ideal(a: &Algebra, m: &Subspace) -> Result<Subspace, Error> {
    if !a.is_ideal(m) {
        return Err(Error::NotAnIdeal);
    }
    let mut gens = Vec::new();
    for u in m.basis_vectors() {
        for ms in index_multisets(a.dim(), a.arity() - 1) {
            let mut args = vec![u.clone()];
            args.extend(ms.iter().map(|&j| a.basis_vec(j)));
            let v = lie_bracket(a, &args);
            if !vec_is_zero(&v) {
                gens.push(v);
            }
        }
    }
    let span = Subspace::from_generators(a.field(), a.dim(), gens);
    Ok(a.ideal_closure(&span))
}

/// Checks exactness of the tail
/// m/[m,q,...,q]_sym -> q/q_sym^n -> q/(m + q_sym^n) -> 0
/// by building the quotient spaces and the two induced maps, then verifying
/// image = kernel at the middle node and surjectivity at the end.
pub fn check_tail_exactness(a: &Algebra, m: &Subspace) -> Result<bool, Error> {
    if !a.is_ideal(m) {
        return Err(Error::NotAnIdeal);
    }
    let field = a.field();
    let d = a.dim();
    let rel = relative_lie_bracket_ideal(a, m)?;
    let qn = lie_commutator(a);

    // node 1: m / rel, in coordinates of m's own basis
    let rel_in_m: Vec<Vector> = rel.basis_vectors().iter().map(|v| m.coordinates(v)).collect();
    let rel_sub = Subspace::from_generators(field, m.dim(), rel_in_m);
    let node1 = QuotientSpace::new(m.dim(), &rel_sub);

    // node 2: q / q_sym^n ; node 3: q / (m + q_sym^n)
    let node2 = QuotientSpace::new(d, &qn);
    let sum = m.sum(&qn)?;
    let node3 = QuotientSpace::new(d, &sum);

    // map node1 -> node2: lift a class to m, include into q, project
    let mut map_a = Matrix::zero(field, node2.dim(), node1.dim());
    for (col, &ri) in node1.rep_indices.iter().enumerate() {
        let ambient = m.basis_vectors()[ri].clone();
        let img = node2.project(&ambient);
        for row in 0..node2.dim() {
            *map_a.at_mut(row, col) = img[row].clone();
        }
    }
    // map node2 -> node3: project representatives further
    let mut map_b = Matrix::zero(field, node3.dim(), node2.dim());
    for (col, &ri) in node2.rep_indices.iter().enumerate() {
        let img = node3.project(&crate::linalg::std_basis_vector(field, d, ri));
        for row in 0..node3.dim() {
            *map_b.at_mut(row, col) = img[row].clone();
        }
    }

    let image_a = Subspace::from_generators(field, node2.dim(), map_a.transpose().row_vectors());
    let kernel_b = map_b.kernel();
    let exact_middle = image_a == kernel_b;
    let surjective_end = map_b.rank() == node3.dim();
    Ok(exact_middle && surjective_end)
}

/// Difference between the dimension bound and the known multiplier
/// dimension. Only the Lie-abelian 2-ary case has a closed form for the
/// multiplier (k(k+1)/2); everywhere else the value is undefined.
pub fn t_invariant(a: &Algebra) -> Option<BigUint> {
    if a.arity() == 2 && is_lie_abelian(a) {
        let k = a.dim();
        let known = BigUint::from(k * (k + 1) / 2);
        Some(bound_b(2, k) - known)
    } else {
        None
    }
}

/// Computed invariants of one algebra, in report form.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InvariantReport {
    pub schema_version: u32,
    pub name: String,
    pub arity: usize,
    pub dim: usize,
    pub dim_z_lie: usize,
    pub dim_qn_lie: usize,
    pub dim_z: usize,
    pub dim_qn: usize,
    /// None when the field has characteristic 2 (polarization unavailable).
    pub dim_nleib: Option<usize>,
    pub lie_abelian: bool,
    pub lie_perfect: bool,
    pub bound_b: String,
    pub bound_crude: String,
    pub bound_satisfied: bool,
}

pub fn analyze(a: &Algebra) -> InvariantReport {
    let z_lie = lie_center(a);
    let qn_lie = lie_commutator(a);
    let z = center(a);
    let qn = commutator(a);
    let nleib = n_leib_ideal(a).ok();
    let lie_abelian = is_lie_abelian(a);
    let lie_perfect = qn_lie.is_full();
    let k_lie = a.dim() - z_lie.dim();
    let k_plain = a.dim() - z.dim();
    let b = bound_b(a.arity(), k_lie);
    let crude = bound_crude(a.arity(), k_plain);
    let bound_satisfied = BigUint::from(qn_lie.dim()) <= b;
    InvariantReport {
        schema_version: crate::io::SCHEMA_VERSION,
        name: a.name().to_string(),
        arity: a.arity(),
        dim: a.dim(),
        dim_z_lie: z_lie.dim(),
        dim_qn_lie: qn_lie.dim(),
        dim_z: z.dim(),
        dim_qn: qn.dim(),
        dim_nleib: nleib.map(|s| s.dim()),
        lie_abelian,
        lie_perfect,
        bound_b: b.to_string(),
        bound_crude: crude.to_string(),
        bound_satisfied,
    }
}
