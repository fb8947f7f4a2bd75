//! The character-sum engine for arbitrary finite small groups.
//!
//! A group is described by its conjugacy classes, each given by the exponents
//! `m_1, …, m_d` of its eigenvalues `ζ_N^{m_i}`, and optionally by character rows.
//! The multiplicity of the module of covariants attached to a row `χ` is
//!
//! ```text
//! mult_χ(e) = (1/|G|) Σ_classes |C| · conj(χ(C)) · Π_i Σ_{a=0}^{p^e-1} ζ_N^{a·m_i·p^{-e}}.
//! ```
//!
//! A zero exponent contributes exactly `p^e`; every other factor is a geometric sum
//! that only depends on `p^e mod N`. Grouping classes by their number `c` of zero
//! exponents therefore gives the coefficient of `p^{ce}` as an element of `Q(ζ_N)`
//! depending only on the residue `r = p^e mod N`, which must come out rational.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Deserialize;
use thiserror::Error;

use crate::arith;
use crate::cyclic::CyclicSingularity;
use crate::exactnum::{
    geom_sum, is_natural, parse_rational, root_of_unity, Cyclotomic, CyclotomicError, Rational,
};
use crate::qpoly::QuasiPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed group spec: {0}")]
    Json(String),
    #[error("invalid group spec: {0}")]
    Invalid(String),
    #[error("class {label} has exactly d-1 eigenvalues equal to 1 and is a pseudoreflection; the group is not small")]
    SmallnessViolation { label: String },
    #[error("character index {index} out of range ({count} rows)")]
    NoSuchCharacter { index: usize, count: usize },
    #[error("p = {p} is not prime")]
    NotPrime { p: BigUint },
    #[error("p = {p} divides the group order {order}")]
    PDividesGroupOrder { p: BigUint, order: u64 },
    #[error("p = {p} is not invertible modulo N = {modulus}")]
    NonInvertible { p: BigUint, modulus: u64 },
    #[error("inconsistent group data: coefficient {0} is not rational")]
    NotRational(String),
    #[error("inconsistent group data: multiplicity {0} is not a nonnegative integer")]
    NotInteger(Rational),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
}

impl GroupError {
    /// True for errors that indicate class/character data not coming from a real group.
    pub fn is_inconsistent_data(&self) -> bool {
        matches!(
            self,
            GroupError::NotRational(_) | GroupError::NotInteger(_) | GroupError::Cyclotomic(_)
        )
    }
}

/// How the character rows are read against the Frobenius-twisted eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Labeling {
    /// Rows are fixed class functions; only eigenvalues are twisted by `p^{-e}`.
    #[default]
    Fixed,
    /// Rows are read through the same twist as the eigenvalues, so that a cyclic
    /// group's row `α` counts `Σ t_i a_i ≡ α` for every `e`.
    FrobeniusAdapted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub label: String,
    pub size: u64,
    /// Eigenvalue exponents reduced into `[0, N)`.
    pub exponents: Vec<u64>,
}

impl ConjClass {
    pub fn zero_count(&self) -> usize {
        self.exponents.iter().filter(|&&m| m == 0).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub label: Option<String>,
    pub rank: u64,
    pub values: Vec<Cyclotomic>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    modulus: u64,
    dim: usize,
    order: u64,
    classes: Vec<ConjClass>,
    characters: Vec<Character>,
}

// --- JSON input -------------------------------------------------------------

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Int(i64),
    Str(String),
}

impl RawCoeff {
    fn to_rational(&self) -> Result<Rational, GroupError> {
        match self {
            RawCoeff::Int(v) => Ok(Rational::from_integer(BigInt::from(*v))),
            RawCoeff::Str(s) => parse_rational(s)
                .ok_or_else(|| GroupError::Json(format!("bad rational coefficient {s:?}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawValue {
    Constant(RawCoeff),
    Terms(Vec<(i64, RawCoeff)>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClass {
    label: Option<String>,
    size: u64,
    exponents: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCharacter {
    label: Option<String>,
    rank: u64,
    values: Vec<RawValue>,
}

#[derive(Deserialize)]
struct RawSpec {
    #[serde(rename = "N")]
    modulus: u64,
    d: usize,
    order: u64,
    classes: Vec<RawClass>,
    #[serde(default)]
    characters: Option<Vec<RawCharacter>>,
}

impl GroupSpec {
    /// Builds and validates a spec. With `characters = None` only the trivial row is present.
    pub fn new(
        modulus: u64,
        dim: usize,
        order: u64,
        classes: Vec<ConjClass>,
        characters: Option<Vec<Character>>,
    ) -> Result<Self, GroupError> {
        if modulus == 0 || dim == 0 || order == 0 {
            return Err(GroupError::Invalid("N, d and order must be positive".into()));
        }
        let mut classes = classes;
        for c in &mut classes {
            if c.exponents.len() != dim {
                return Err(GroupError::Invalid(format!(
                    "class {} has {} exponents, expected d = {dim}",
                    c.label,
                    c.exponents.len()
                )));
            }
            if c.size == 0 {
                return Err(GroupError::Invalid(format!("class {} has size 0", c.label)));
            }
            for m in &mut c.exponents {
                *m %= modulus;
            }
        }
        let total: u64 = classes.iter().map(|c| c.size).sum();
        if total != order {
            return Err(GroupError::Invalid(format!(
                "class sizes sum to {total}, but the order is {order}"
            )));
        }
        let identities: Vec<&ConjClass> = classes.iter().filter(|c| c.zero_count() == dim).collect();
        match identities.as_slice() {
            [id] if id.size == 1 => {}
            [id] => {
                return Err(GroupError::Invalid(format!(
                    "identity class {} has size {}",
                    id.label, id.size
                )))
            }
            _ => {
                return Err(GroupError::Invalid(format!(
                    "expected exactly one identity class, found {}",
                    identities.len()
                )))
            }
        }
        if let Some(c) = classes.iter().find(|c| c.zero_count() + 1 == dim) {
            return Err(GroupError::SmallnessViolation {
                label: c.label.clone(),
            });
        }

        let id_index = classes.iter().position(|c| c.zero_count() == dim).unwrap();
        let trivial = Character {
            label: Some("trivial".into()),
            rank: 1,
            values: vec![Cyclotomic::one(modulus); classes.len()],
        };
        let characters = match characters {
            None => vec![trivial],
            Some(rows) => {
                for (i, row) in rows.iter().enumerate() {
                    if row.values.len() != classes.len() {
                        return Err(GroupError::Invalid(format!(
                            "character {i} has {} values for {} classes",
                            row.values.len(),
                            classes.len()
                        )));
                    }
                    if let Some(v) = row.values.iter().find(|v| v.order() != modulus) {
                        return Err(GroupError::Invalid(format!(
                            "character {i} has a value in Q(ζ_{}), expected Q(ζ_{modulus})",
                            v.order()
                        )));
                    }
                    let at_id = Cyclotomic::from_rational(modulus, Rational::from_integer(BigInt::from(row.rank)));
                    if row.values[id_index] != at_id {
                        return Err(GroupError::Invalid(format!(
                            "character {i} takes the value {} at the identity, but its rank is {}",
                            row.values[id_index], row.rank
                        )));
                    }
                }
                if !rows.iter().any(|r| r == &trivial || (r.rank == 1 && r.values == trivial.values)) {
                    return Err(GroupError::Invalid("the trivial character row is missing".into()));
                }
                rows
            }
        };
        Ok(GroupSpec {
            modulus,
            dim,
            order,
            classes,
            characters,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        let raw: RawSpec = serde_json::from_str(text).map_err(|e| GroupError::Json(e.to_string()))?;
        let n = raw.modulus;
        if n == 0 {
            return Err(GroupError::Invalid("N must be positive".into()));
        }
        let classes = raw
            .classes
            .into_iter()
            .enumerate()
            .map(|(i, c)| ConjClass {
                label: c.label.unwrap_or_else(|| format!("C{i}")),
                size: c.size,
                exponents: c.exponents.iter().map(|m| m.rem_euclid(n as i64) as u64).collect(),
            })
            .collect();
        let characters = raw
            .characters
            .map(|rows| {
                rows.into_iter()
                    .map(|row| {
                        let values = row
                            .values
                            .iter()
                            .map(|v| match v {
                                RawValue::Constant(c) => Ok(Cyclotomic::from_rational(n, c.to_rational()?)),
                                RawValue::Terms(terms) => {
                                    let parsed = terms
                                        .iter()
                                        .map(|(m, c)| Ok((*m, c.to_rational()?)))
                                        .collect::<Result<Vec<_>, GroupError>>()?;
                                    Ok(Cyclotomic::from_terms(n, parsed.iter().map(|(m, c)| (*m, c))))
                                }
                            })
                            .collect::<Result<Vec<_>, GroupError>>()?;
                        Ok(Character {
                            label: row.label,
                            rank: row.rank,
                            values,
                        })
                    })
                    .collect::<Result<Vec<_>, GroupError>>()
            })
            .transpose()?;
        GroupSpec::new(n, raw.d, raw.order, classes, characters)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    /// Index of the first trivial row.
    pub fn trivial_index(&self) -> usize {
        self.characters
            .iter()
            .position(|r| r.rank == 1 && r.values.iter().all(|v| *v == Cyclotomic::one(self.modulus)))
            .expect("validated spec has a trivial row")
    }

    fn character(&self, index: usize) -> Result<&Character, GroupError> {
        self.characters.get(index).ok_or(GroupError::NoSuchCharacter {
            index,
            count: self.characters.len(),
        })
    }

    fn check_prime(&self, p: &BigUint) -> Result<(), GroupError> {
        if !arith::is_prime(p) {
            return Err(GroupError::NotPrime { p: p.clone() });
        }
        if (BigUint::from(self.order) % p).is_zero() {
            return Err(GroupError::PDividesGroupOrder {
                p: p.clone(),
                order: self.order,
            });
        }
        if arith::gcd(arith::reduce(p, self.modulus), self.modulus) != 1 {
            return Err(GroupError::NonInvertible {
                p: p.clone(),
                modulus: self.modulus,
            });
        }
        Ok(())
    }
}

/// Exponent of `λ^{1/p^e}` for `λ = ζ_N^m`, i.e. `m·p^{-e} mod N`.
pub fn twist_exponent(m: i64, modulus: u64, p: &BigUint, e: u64) -> Result<u64, GroupError> {
    let inv = arith::mod_inverse(arith::reduce(p, modulus), modulus).ok_or_else(|| GroupError::NonInvertible {
        p: p.clone(),
        modulus,
    })?;
    let m = m.rem_euclid(modulus as i64) as u64;
    Ok(((m as u128 * arith::pow_mod(inv, e, modulus) as u128) % modulus as u128) as u64)
}

/// `Π_i Σ_{a=0}^{p^e-1} (λ_i^{1/p^e})^a` for one element of the class.
pub fn class_sum(spec: &GroupSpec, class: &ConjClass, p: &BigUint, e: u64) -> Result<Cyclotomic, GroupError> {
    let n = spec.modulus;
    let pe = p.pow(e as u32);
    let mut acc = Cyclotomic::one(n);
    for &m in &class.exponents {
        let twisted = twist_exponent(m as i64, n, p, e)?;
        acc = acc.checked_mul(&geom_sum(n, twisted as i64, &pe))?;
    }
    Ok(acc)
}

fn character_value(row: &Character, class: usize, labeling: Labeling, unit: i64) -> Cyclotomic {
    match labeling {
        Labeling::Fixed => row.values[class].conjugate(),
        Labeling::FrobeniusAdapted => row.values[class].galois(unit).conjugate(),
    }
}

/// `mult(M_χ, R^{1/p^e})` computed straight from the character sum with `L = p^e`.
pub fn multiplicity_general(
    spec: &GroupSpec,
    p: &BigUint,
    e: u64,
    char_index: usize,
    labeling: Labeling,
) -> Result<Rational, GroupError> {
    spec.check_prime(p)?;
    let row = spec.character(char_index)?;
    let n = spec.modulus;
    let unit = arith::mod_inverse(arith::pow_mod(arith::reduce(p, n), e, n), n).unwrap_or(0) as i64;
    let mut total = Cyclotomic::zero(n);
    for (k, class) in spec.classes.iter().enumerate() {
        let term = class_sum(spec, class, p, e)?
            .checked_mul(&character_value(row, k, labeling, unit))?
            .scale(&Rational::from_integer(BigInt::from(class.size)));
        total = total.checked_add(&term)?;
    }
    let value = total
        .as_rational()
        .map_err(|_| GroupError::NotRational(total.to_string()))?
        / Rational::from_integer(BigInt::from(spec.order));
    if !is_natural(&value) {
        return Err(GroupError::NotInteger(value));
    }
    Ok(value)
}

/// Per-class, per-residue products of the non-trivial geometric factors, bucketed by
/// zero count. Shared across all character rows.
struct ResidueSums {
    residue: u64,
    unit: i64,
    products: Vec<Cyclotomic>,
}

fn residue_sums(spec: &GroupSpec, residue: u64) -> Result<ResidueSums, GroupError> {
    let n = spec.modulus;
    let side = if n == 1 { 1 } else { residue };
    let inv = arith::mod_inverse(residue, n).expect("residue is a unit");
    let len = BigUint::from(side);
    let mut products = Vec::with_capacity(spec.classes.len());
    for class in &spec.classes {
        let mut acc = Cyclotomic::one(n);
        for &m in class.exponents.iter().filter(|&&m| m != 0) {
            let twisted = ((m as u128 * inv as u128) % n as u128) as i64;
            acc = acc.checked_mul(&geom_sum(n, twisted, &len))?;
        }
        products.push(acc);
    }
    Ok(ResidueSums {
        residue,
        unit: inv as i64,
        products,
    })
}

fn coefficient_row(spec: &GroupSpec, sums: &ResidueSums, row: &Character, labeling: Labeling) -> Result<Vec<Rational>, GroupError> {
    let n = spec.modulus;
    let mut buckets = vec![Cyclotomic::zero(n); spec.dim + 1];
    for (k, class) in spec.classes.iter().enumerate() {
        let term = sums.products[k]
            .checked_mul(&character_value(row, k, labeling, sums.unit))?
            .scale(&Rational::from_integer(BigInt::from(class.size)));
        let c = class.zero_count();
        buckets[c] = buckets[c].checked_add(&term)?;
    }
    let order = Rational::from_integer(BigInt::from(spec.order));
    buckets
        .iter()
        .enumerate()
        .map(|(c, b)| {
            b.as_rational().map(|q| q / &order).map_err(|_| {
                GroupError::NotRational(format!("φ_{c} at residue {} is {b}", sums.residue))
            })
        })
        .collect()
}

fn assemble(spec: &GroupSpec, p: &BigUint, index: usize, table: BTreeMap<u64, Vec<Rational>>) -> Result<QuasiPolynomial, GroupError> {
    let row = &spec.characters[index];
    let qp = QuasiPolynomial::new(p.clone(), spec.modulus, spec.dim, index, spec.order, row.rank, table)
        .expect("engine builds the residue subgroup table");
    qp.check_shape().map_err(|e| GroupError::NotRational(e.to_string()))?;
    // evaluated values over one full period must be natural numbers
    for e in 0..=qp.period() as u64 + 1 {
        let v = qp.evaluate(e).expect("table covers every residue");
        if !is_natural(&v) {
            return Err(GroupError::NotInteger(v));
        }
    }
    Ok(qp)
}

/// The multiplicity quasi-polynomial of character row `char_index`; the trivial row gives FS.
pub fn fsignature_qpoly_general(
    spec: &GroupSpec,
    p: &BigUint,
    char_index: usize,
    labeling: Labeling,
) -> Result<QuasiPolynomial, GroupError> {
    spec.check_prime(p)?;
    let row = spec.character(char_index)?;
    let n = spec.modulus;
    let mut table = BTreeMap::new();
    for residue in arith::cyclic_subgroup(arith::reduce(p, n), n) {
        let sums = residue_sums(spec, residue)?;
        table.insert(residue, coefficient_row(spec, &sums, row, labeling)?);
    }
    assemble(spec, p, char_index, table)
}

/// Quasi-polynomials for every character row, sharing the geometric sums.
pub fn multiplicity_table_general(spec: &GroupSpec, p: &BigUint, labeling: Labeling) -> Result<Vec<QuasiPolynomial>, GroupError> {
    spec.check_prime(p)?;
    let n = spec.modulus;
    let sums: Vec<ResidueSums> = arith::cyclic_subgroup(arith::reduce(p, n), n)
        .into_iter()
        .map(|r| residue_sums(spec, r))
        .collect::<Result<_, _>>()?;
    (0..spec.characters.len())
        .map(|index| {
            let mut table = BTreeMap::new();
            for s in &sums {
                table.insert(s.residue, coefficient_row(spec, s, &spec.characters[index], labeling)?);
            }
            assemble(spec, p, index, table)
        })
        .collect()
}

/// `|G_c|` for `c = 0..=d`.
pub fn pseudoreflection_profile_general(spec: &GroupSpec) -> Vec<u64> {
    let mut out = vec![0; spec.dim + 1];
    for c in &spec.classes {
        out[c.zero_count()] += c.size;
    }
    out
}

/// The cyclic group `⟨diag(ζ_n^{t_1}, …, ζ_n^{t_d})⟩` with its full character table,
/// row `α` being `g^j ↦ ζ_n^{jα}`.
pub fn cyclic_to_group(sing: &CyclicSingularity) -> GroupSpec {
    let n = sing.order();
    let classes = (0..n)
        .map(|j| ConjClass {
            label: format!("g^{j}"),
            size: 1,
            exponents: sing.weights().iter().map(|&t| (j * t) % n).collect(),
        })
        .collect();
    let characters = (0..n)
        .map(|alpha| Character {
            label: Some(format!("chi_{alpha}")),
            rank: 1,
            values: (0..n).map(|j| root_of_unity(n, ((j * alpha) % n) as i64)).collect(),
        })
        .collect();
    GroupSpec::new(n, sing.dim(), n, classes, Some(characters)).expect("cyclic data is consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    const KLEIN: &str = r#"{
        "N": 2, "d": 3, "order": 4,
        "classes": [
            {"label": "1", "size": 1, "exponents": [0, 0, 0]},
            {"label": "a", "size": 1, "exponents": [0, 1, 1]},
            {"label": "b", "size": 1, "exponents": [1, 0, 1]},
            {"label": "ab", "size": 1, "exponents": [1, 1, 0]}
        ]
    }"#;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn twist_examples() {
        for e in 0..5 {
            assert_eq!(twist_exponent(0, 6, &big(5), e).unwrap(), 0);
            assert_eq!(twist_exponent(1, 6, &big(7), e).unwrap(), 1);
        }
        assert_eq!(twist_exponent(1, 6, &big(5), 1).unwrap(), 5);
        assert_eq!((5 * 5) % 6, 1);
        assert!(matches!(twist_exponent(1, 6, &big(3), 1), Err(GroupError::NonInvertible { .. })));
    }

    #[test]
    fn klein_four() {
        let spec = GroupSpec::from_json(KLEIN).unwrap();
        assert_eq!(pseudoreflection_profile_general(&spec), vec![0, 3, 0, 1]);
        let id = &spec.classes()[0];
        assert_eq!(class_sum(&spec, id, &big(5), 2).unwrap().as_rational().unwrap(), rat(5i64.pow(6), 1));
        assert_eq!(class_sum(&spec, &spec.classes()[1], &big(5), 1).unwrap().as_rational().unwrap(), rat(5, 1));
        assert_eq!(multiplicity_general(&spec, &big(5), 1, 0, Labeling::Fixed).unwrap(), rat(35, 1));
        let qp = fsignature_qpoly_general(&spec, &big(3), 0, Labeling::Fixed).unwrap();
        assert_eq!(qp.table()[&1], vec![rat(0, 1), rat(3, 4), rat(0, 1), rat(1, 4)]);
        assert_eq!(qp.evaluate(2).unwrap(), rat(189, 1));
    }

    #[test]
    fn trivial_group() {
        let spec = GroupSpec::new(
            1,
            2,
            1,
            vec![ConjClass {
                label: "1".into(),
                size: 1,
                exponents: vec![0, 0],
            }],
            None,
        )
        .unwrap();
        assert_eq!(multiplicity_general(&spec, &big(7), 2, 0, Labeling::Fixed).unwrap(), rat(2401, 1));
        let qp = fsignature_qpoly_general(&spec, &big(7), 0, Labeling::Fixed).unwrap();
        assert_eq!(qp.table()[&0], vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn validation_errors() {
        let bad_sum = KLEIN.replace(r#""order": 4"#, r#""order": 5"#);
        assert!(matches!(GroupSpec::from_json(&bad_sum), Err(GroupError::Invalid(_))));
        let pseudo = r#"{"N": 2, "d": 2, "order": 2, "classes": [
            {"size": 1, "exponents": [0, 0]}, {"label": "s", "size": 1, "exponents": [0, 1]}]}"#;
        assert!(matches!(GroupSpec::from_json(pseudo), Err(GroupError::SmallnessViolation { .. })));
        let no_trivial = r#"{"N": 2, "d": 2, "order": 2,
            "classes": [{"size": 1, "exponents": [0, 0]}, {"size": 1, "exponents": [1, 1]}],
            "characters": [{"rank": 1, "values": [1, -1]}]}"#;
        assert!(matches!(GroupSpec::from_json(no_trivial), Err(GroupError::Invalid(_))));
        let wrong_rank = r#"{"N": 2, "d": 2, "order": 2,
            "classes": [{"size": 1, "exponents": [0, 0]}, {"size": 1, "exponents": [1, 1]}],
            "characters": [{"rank": 1, "values": [1, 1]}, {"rank": 2, "values": [1, -1]}]}"#;
        assert!(matches!(GroupSpec::from_json(wrong_rank), Err(GroupError::Invalid(_))));
        assert!(matches!(GroupSpec::from_json("{"), Err(GroupError::Json(_))));
    }

    #[test]
    fn inconsistent_characters_are_reported() {
        // a row that is not a character: values (1, ζ_4) on a group of order 2
        let text = r#"{"N": 4, "d": 2, "order": 2,
            "classes": [{"size": 1, "exponents": [0, 0]}, {"size": 1, "exponents": [2, 2]}],
            "characters": [{"rank": 1, "values": [1, 1]}, {"rank": 1, "values": [1, [[1, 1]]]}]}"#;
        let spec = GroupSpec::from_json(text).unwrap();
        let err = fsignature_qpoly_general(&spec, &big(5), 1, Labeling::Fixed).unwrap_err();
        assert!(err.is_inconsistent_data(), "{err}");
    }

    #[test]
    fn cyclic_conversion() {
        let s = CyclicSingularity::new(6, &[1, 2, 3]).unwrap();
        let spec = cyclic_to_group(&s);
        assert_eq!(spec.classes().len(), 6);
        assert_eq!(spec.classes()[5].exponents, vec![5, 4, 3]);
        assert_eq!(pseudoreflection_profile_general(&spec), vec![2, 3, 0, 1]);
        let a1 = cyclic_to_group(&CyclicSingularity::new(2, &[1, 1]).unwrap());
        assert_eq!(a1.characters().len(), 2);
        assert_eq!(a1.classes()[1].exponents, vec![1, 1]);
    }

    #[test]
    fn labelings_agree_on_trivial_row_and_relabel_otherwise() {
        let s = CyclicSingularity::new(5, &[1, 2, 4]).unwrap();
        let spec = cyclic_to_group(&s);
        let p = big(7); // 7 ≡ 2 mod 5, period 4
        let fixed = multiplicity_table_general(&spec, &p, Labeling::Fixed).unwrap();
        let adapted = multiplicity_table_general(&spec, &p, Labeling::FrobeniusAdapted).unwrap();
        assert_eq!(fixed[0], adapted[0]);
        for alpha in 0..5u64 {
            for (&r, row) in fixed[alpha as usize].table() {
                assert_eq!(row, &adapted[((alpha * r) % 5) as usize].table()[&r]);
            }
        }
        // the direct sum agrees with the tabulated one
        for alpha in 0..5 {
            for e in 0..4 {
                for lab in [Labeling::Fixed, Labeling::FrobeniusAdapted] {
                    let direct = multiplicity_general(&spec, &p, e, alpha, lab).unwrap();
                    let table = if lab == Labeling::Fixed { &fixed } else { &adapted };
                    assert_eq!(direct, table[alpha].evaluate(e).unwrap());
                }
            }
        }
    }
}
