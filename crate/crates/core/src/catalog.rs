//! Built-in algebra fixtures: the two 3-ary examples with known invariants,
//! parametric families (abelian, squares, Heisenberg, simple Lie and 3-Lie
//! algebras), and a deliberately broken tensor for exercising the validator.
//!
//! Expected invariant values were fixed by hand computation before the main
//! code paths existed; each value carries a note saying how it was obtained.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::invariants::{self, InvariantReport};
use crate::scalar::FieldSpec;

/// One expected invariant value, with a note recording the independent
/// derivation that produced it.
#[derive(Debug, Clone)]
pub struct ExpectedValue {
    /// Field name in `InvariantReport`, or one of the extra quantities
    /// `valid`, `is_n_lie`, `liezation_dim`.
    pub quantity: &'static str,
    pub value: i64,
    pub note: &'static str,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: Algebra,
    pub expected: Vec<ExpectedValue>,
}

fn ev(quantity: &'static str, value: i64, note: &'static str) -> ExpectedValue {
    ExpectedValue {
        quantity,
        value,
        note,
    }
}

fn paper_ex_1(field: FieldSpec) -> CatalogEntry {
    // n = 3, d = 2: [x,y,y] = -2x, [y,y,x] = [y,x,y] = x
    let mut tensor = BTreeMap::new();
    let minus_two_x = vec![field.from_i64(-2), field.zero()];
    let x = vec![field.one(), field.zero()];
    tensor.insert(vec![0, 1, 1], minus_two_x);
    tensor.insert(vec![1, 1, 0], x.clone());
    tensor.insert(vec![1, 0, 1], x);
    let algebra = Algebra::new(
        "paper-ex-1",
        3,
        2,
        field,
        vec!["x".into(), "y".into()],
        tensor,
    )
    .unwrap();
    CatalogEntry {
        id: "paper-ex-1".into(),
        algebra,
        expected: vec![
            ev("valid", 1, "identity on all 32 basis tuples by hand"),
            ev("is_n_lie", 0, "[x,y,y] = -2x has a repeated argument"),
            ev(
                "dim_z_lie",
                2,
                "the six orderings of any argument triple cancel: 2(-2x) + 2x + 2x = 0",
            ),
            ev("dim_qn_lie", 0, "same cancellation"),
            ev("lie_abelian", 1, "symmetrized bracket vanishes identically"),
            ev(
                "dim_z",
                0,
                "[x,y,y] kills x-components, [y,y,x] kills y-components of a candidate",
            ),
            ev("dim_qn", 1, "all products are multiples of x"),
            ev("dim_nleib", 1, "[x,y,y] = -2x is itself a repeated-argument bracket"),
            ev("liezation_dim", 1, "quotient by span{x}"),
        ],
    }
}

fn paper_ex_23(field: FieldSpec) -> CatalogEntry {
    // n = 3, d = 2: [x,x,y] = y, [y,x,x] = -y
    let mut tensor = BTreeMap::new();
    tensor.insert(vec![0, 0, 1], vec![field.zero(), field.one()]);
    tensor.insert(vec![1, 0, 0], vec![field.zero(), field.from_i64(-1)]);
    let algebra = Algebra::new(
        "paper-ex-23",
        3,
        2,
        field,
        vec!["x".into(), "y".into()],
        tensor,
    )
    .unwrap();
    CatalogEntry {
        id: "paper-ex-23".into(),
        algebra,
        expected: vec![
            ev("valid", 1, "identity on all 32 basis tuples by hand"),
            ev("is_n_lie", 0, "[x,x,y] = y is non-zero with repeated argument"),
            ev(
                "dim_qn_lie",
                0,
                "orderings of (x,x,y): [x,x,y] + [y,x,x] = y - y = 0, doubled",
            ),
            ev("dim_z_lie", 2, "equivalent statement of the cancellation above"),
            ev("lie_abelian", 1, "symmetrized bracket vanishes"),
            ev("dim_z", 0, "x fails via [x,x,y] = y; y fails via [y,x,x] = -y"),
            ev("dim_qn", 1, "all products are multiples of y"),
            ev("dim_nleib", 1, "span{y}: [x,x,y] has x repeated"),
            ev("liezation_dim", 1, "quotient by span{y}"),
        ],
    }
}

fn heis3(field: FieldSpec) -> CatalogEntry {
    // Heisenberg Lie algebra as a 2-ary Leibniz algebra
    let mut tensor = BTreeMap::new();
    tensor.insert(vec![0, 1], vec![field.zero(), field.zero(), field.one()]);
    tensor.insert(vec![1, 0], vec![field.zero(), field.zero(), field.from_i64(-1)]);
    let algebra = Algebra::new(
        "heis3",
        2,
        3,
        field,
        vec!["x".into(), "y".into(), "z".into()],
        tensor,
    )
    .unwrap();
    CatalogEntry {
        id: "heis3".into(),
        algebra,
        expected: vec![
            ev("valid", 1, "Jacobi identity of the Heisenberg bracket"),
            ev("is_n_lie", 1, "antisymmetric table"),
            ev("dim_qn_lie", 0, "antisymmetry cancels the two orderings"),
            ev("dim_z_lie", 3, "ditto"),
            ev("dim_z", 1, "span{z}: z brackets to zero, x and y do not"),
            ev("dim_qn", 1, "span{z} = image of the bracket"),
            ev("dim_nleib", 0, "no repeated-argument bracket is non-zero"),
        ],
    }
}

fn sl2(field: FieldSpec) -> CatalogEntry {
    // basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
    let d = 3;
    let mut tensor = BTreeMap::new();
    let mut put = |i: usize, j: usize, k: usize, c: i64| {
        let mut v = vec![field.zero(); d];
        v[k] = field.from_i64(c);
        tensor.insert(vec![i, j], v);
    };
    put(0, 1, 2, 1);
    put(1, 0, 2, -1);
    put(2, 0, 0, 2);
    put(0, 2, 0, -2);
    put(2, 1, 1, -2);
    put(1, 2, 1, 2);
    let algebra = Algebra::new(
        "sl2",
        2,
        3,
        field,
        vec!["e".into(), "f".into(), "h".into()],
        tensor,
    )
    .unwrap();
    CatalogEntry {
        id: "sl2".into(),
        algebra,
        expected: vec![
            ev("valid", 1, "Jacobi identity of the standard sl2 table"),
            ev("is_n_lie", 1, "antisymmetric table"),
            ev("dim_qn_lie", 0, "antisymmetry"),
            ev("dim_z_lie", 3, "antisymmetry"),
            ev("dim_z", 0, "simple algebra, trivial center"),
            ev("dim_qn", 3, "simple algebra, perfect"),
            ev("dim_nleib", 0, "no repeated-argument bracket is non-zero"),
        ],
    }
}

fn levi_civita_sign(perm: &[usize]) -> i64 {
    let mut sign = 1i64;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

fn simple_3_lie_4d(field: FieldSpec) -> CatalogEntry {
    // the 4-dimensional simple 3-Lie algebra: [e_i, e_j, e_k] = ±e_l for
    // {i,j,k,l} = {1,2,3,4}, signs from the alternating symbol
    let d = 4;
    let mut tensor = BTreeMap::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if i == j || j == k || i == k {
                    continue;
                }
                let l = (0..d).find(|&m| m != i && m != j && m != k).unwrap();
                let sign = levi_civita_sign(&[i, j, k, l]);
                let mut v = vec![field.zero(); d];
                v[l] = field.from_i64(sign);
                tensor.insert(vec![i, j, k], v);
            }
        }
    }
    let labels = (1..=d).map(|i| format!("e{i}")).collect();
    let algebra = Algebra::new("simple-3-lie-4d", 3, d, field, labels, tensor).unwrap();
    CatalogEntry {
        id: "simple-3-lie-4d".into(),
        algebra,
        expected: vec![
            ev("valid", 1, "standard fact about the alternating-symbol table"),
            ev("is_n_lie", 1, "totally antisymmetric by construction"),
            ev("dim_qn_lie", 0, "antisymmetry"),
            ev("dim_z_lie", 4, "antisymmetry"),
            ev("dim_z", 0, "every basis vector appears in a non-zero product"),
            ev("dim_qn", 4, "every basis vector is a product"),
            ev("dim_nleib", 0, "no repeated-argument bracket is non-zero"),
        ],
    }
}

fn squares(field: FieldSpec, k: usize) -> CatalogEntry {
    // 2-ary, dim 2k: [x_i, x_i] = y_i, everything else zero
    let d = 2 * k;
    let mut labels: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    labels.extend((1..=k).map(|i| format!("y{i}")));
    let mut tensor = BTreeMap::new();
    for i in 0..k {
        let mut v = vec![field.zero(); d];
        v[k + i] = field.one();
        tensor.insert(vec![i, i], v);
    }
    let algebra = Algebra::new(format!("sq({k})"), 2, d, field, labels, tensor).unwrap();
    CatalogEntry {
        id: format!("sq({k})"),
        algebra,
        expected: vec![
            ev("valid", 1, "all products central, both identity sides vanish"),
            ev(
                "dim_qn_lie",
                k as i64,
                "[x_i,x_i] symmetrized is 2y_i; the y's span the image",
            ),
            ev("dim_z_lie", k as i64, "exactly the y's annihilate everything"),
            ev("dim_z", k as i64, "same span"),
            ev("dim_qn", k as i64, "same span"),
            ev("dim_nleib", k as i64, "each generator has a repeated argument"),
        ],
    }
}

fn abelian_entry(field: FieldSpec, n: usize, k: usize) -> CatalogEntry {
    let algebra = Algebra::abelian(field, n, k);
    CatalogEntry {
        id: format!("abelian({n},{k})"),
        algebra,
        expected: vec![
            ev("valid", 1, "zero bracket"),
            ev("is_n_lie", 1, "zero bracket"),
            ev("dim_qn_lie", 0, "zero bracket"),
            ev("dim_z_lie", k as i64, "zero bracket"),
            ev("dim_z", k as i64, "zero bracket"),
            ev("dim_qn", 0, "zero bracket"),
            ev("dim_nleib", 0, "zero bracket"),
            ev("lie_perfect", i64::from(k == 0), "full iff dimension zero"),
        ],
    }
}

fn bad_identity(field: FieldSpec) -> CatalogEntry {
    // [e1,e1] = e1 on one dimension: [[x,x],x] = x but the identity needs 2x
    let mut tensor = BTreeMap::new();
    tensor.insert(vec![0, 0], vec![field.one()]);
    let algebra =
        Algebra::new("bad-identity", 2, 1, field, vec!["e1".into()], tensor).unwrap();
    CatalogEntry {
        id: "bad-identity".into(),
        algebra,
        expected: vec![ev(
            "valid",
            0,
            "hand expansion: lhs [[x,x],x] = x, rhs [[x,x],x] + [x,[x,x]] = 2x",
        )],
    }
}

/// The fixed fixture inventory (parametric families at a few sizes).
pub fn list() -> Vec<String> {
    vec![
        "paper-ex-1".into(),
        "paper-ex-23".into(),
        "abelian(2,2)".into(),
        "abelian(3,1)".into(),
        "abelian(3,2)".into(),
        "heis3".into(),
        "sl2".into(),
        "simple-3-lie-4d".into(),
        "sq(1)".into(),
        "sq(2)".into(),
        "bad-identity".into(),
    ]
}

/// Fixture lookup over the rationals. Parametric ids `abelian(n,k)` and
/// `sq(k)` accept any sizes, not only the listed ones.
pub fn get(id: &str) -> Result<CatalogEntry, Error> {
    get_over(id, FieldSpec::Q)
}

pub fn get_over(id: &str, field: FieldSpec) -> Result<CatalogEntry, Error> {
    if let Some(args) = id.strip_prefix("abelian(").and_then(|s| s.strip_suffix(')')) {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        if parts.len() == 2 {
            let n: usize = parts[0]
                .parse()
                .map_err(|_| Error::UnknownCatalogId(id.into()))?;
            let k: usize = parts[1]
                .parse()
                .map_err(|_| Error::UnknownCatalogId(id.into()))?;
            if n >= 2 {
                return Ok(abelian_entry(field, n, k));
            }
        }
        return Err(Error::UnknownCatalogId(id.into()));
    }
    if let Some(arg) = id.strip_prefix("sq(").and_then(|s| s.strip_suffix(')')) {
        let k: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::UnknownCatalogId(id.into()))?;
        return Ok(squares(field, k));
    }
    match id {
        "paper-ex-1" => Ok(paper_ex_1(field)),
        "paper-ex-23" => Ok(paper_ex_23(field)),
        "heis3" => Ok(heis3(field)),
        "sl2" => Ok(sl2(field)),
        "simple-3-lie-4d" => Ok(simple_3_lie_4d(field)),
        "bad-identity" => Ok(bad_identity(field)),
        _ => Err(Error::UnknownCatalogId(id.into())),
    }
}

/// Compares every expected value of an entry against the computed
/// invariants; returns a list of human-readable mismatches (empty = pass).
pub fn check_expected(entry: &CatalogEntry) -> Vec<String> {
    let a = &entry.algebra;
    let mut mismatches = Vec::new();
    let report: Option<InvariantReport> =
        if a.is_valid() { Some(invariants::analyze(a)) } else { None };
    for exp in &entry.expected {
        let actual: Option<i64> = match exp.quantity {
            "valid" => Some(i64::from(a.is_valid())),
            "is_n_lie" => Some(i64::from(a.is_n_lie())),
            "liezation_dim" => invariants::liezation(a)
                .ok()
                .map(|(l, _)| l.dim() as i64),
            q => report.as_ref().and_then(|r| match q {
                "dim_z_lie" => Some(r.dim_z_lie as i64),
                "dim_qn_lie" => Some(r.dim_qn_lie as i64),
                "dim_z" => Some(r.dim_z as i64),
                "dim_qn" => Some(r.dim_qn as i64),
                "dim_nleib" => r.dim_nleib.map(|d| d as i64),
                "lie_abelian" => Some(i64::from(r.lie_abelian)),
                "lie_perfect" => Some(i64::from(r.lie_perfect)),
                _ => None,
            }),
        };
        match actual {
            Some(v) if v == exp.value => {}
            Some(v) => mismatches.push(format!(
                "{}: {} expected {} got {v} ({})",
                entry.id, exp.quantity, exp.value, exp.note
            )),
            None => mismatches.push(format!(
                "{}: {} could not be computed",
                entry.id, exp.quantity
            )),
        }
    }
    mismatches
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_match_expectations() {
        for id in list() {
            let entry = get(&id).unwrap();
            let mismatches = check_expected(&entry);
            assert!(mismatches.is_empty(), "{mismatches:#?}");
        }
    }

    #[test]
    fn only_bad_identity_fails_validation() {
        for id in list() {
            let entry = get(&id).unwrap();
            let valid = entry.algebra.is_valid();
            assert_eq!(valid, id != "bad-identity", "{id}");
            if !valid {
                assert!(!entry.algebra.violations().is_empty());
            }
        }
    }

    #[test]
    fn parametric_ids_parse() {
        assert_eq!(get("abelian(3,5)").unwrap().algebra.dim(), 5);
        assert_eq!(get("sq(3)").unwrap().algebra.dim(), 6);
        assert!(get("abelian(1,2)").is_err());
        assert!(get("nope").is_err());
        assert!(get("sq(x)").is_err());
    }

    #[test]
    fn fp_variants_build() {
        let e = get_over("paper-ex-1", FieldSpec::Fp(5)).unwrap();
        assert!(e.algebra.is_valid());
        let e3 = get_over("sq(1)", FieldSpec::Fp(3)).unwrap();
        assert!(e3.algebra.is_valid());
    }
}
