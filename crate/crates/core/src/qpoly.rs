//! Quasi-polynomials in `p^e` with coefficients keyed by the residue `p^e mod n`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::exactnum::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QpolyError {
    #[error("residue {residue} = p^e mod {modulus} has no coefficient row")]
    MissingResidue { residue: u64, modulus: u64 },
    #[error("quasi-polynomials are not comparable: {0}")]
    StructuralMismatch(String),
    #[error("invalid quasi-polynomial: {0}")]
    Invalid(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

/// `Σ_c φ_c(r_e)·p^{ce}` where `r_e = p^e mod modulus`.
///
/// The table is keyed by every residue in the cyclic subgroup `⟨p⟩ ⊆ (Z/modulus)*`;
/// each row holds `[φ_0, …, φ_degree]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    p: BigUint,
    modulus: u64,
    degree: usize,
    alpha: usize,
    group_order: u64,
    rank: u64,
    table: BTreeMap<u64, Vec<Rational>>,
}

impl QuasiPolynomial {
    pub fn new(
        p: BigUint,
        modulus: u64,
        degree: usize,
        alpha: usize,
        group_order: u64,
        rank: u64,
        table: BTreeMap<u64, Vec<Rational>>,
    ) -> Result<Self, QpolyError> {
        if modulus == 0 {
            return Err(QpolyError::Invalid("modulus must be positive".into()));
        }
        let p_mod = arith::reduce(&p, modulus);
        if arith::gcd(p_mod, modulus) != 1 {
            return Err(QpolyError::Invalid(format!("p = {p} is not coprime to {modulus}")));
        }
        let expected: Vec<u64> = {
            let mut v = arith::cyclic_subgroup(p_mod, modulus);
            v.sort_unstable();
            v
        };
        let keys: Vec<u64> = table.keys().copied().collect();
        if keys != expected {
            return Err(QpolyError::Invalid(format!(
                "residues {keys:?} are not the subgroup {expected:?} generated by p mod {modulus}"
            )));
        }
        if let Some((r, row)) = table.iter().find(|(_, row)| row.len() != degree + 1) {
            return Err(QpolyError::Invalid(format!(
                "residue {r} has {} coefficients, expected {}",
                row.len(),
                degree + 1
            )));
        }
        Ok(QuasiPolynomial {
            p,
            modulus,
            degree,
            alpha,
            group_order,
            rank,
            table,
        })
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn table(&self) -> &BTreeMap<u64, Vec<Rational>> {
        &self.table
    }

    /// Number of distinct residues, i.e. `ord_modulus(p)`.
    pub fn period(&self) -> usize {
        self.table.len()
    }

    /// Residues in exponent order: entry `j` is `p^j mod modulus`.
    pub fn residues_by_exponent(&self) -> Vec<u64> {
        arith::cyclic_subgroup(arith::reduce(&self.p, self.modulus), self.modulus)
    }

    pub fn residue_at(&self, e: u64) -> u64 {
        arith::pow_mod(arith::reduce(&self.p, self.modulus), e, self.modulus)
    }

    pub fn coefficients(&self, residue: u64) -> Option<&[Rational]> {
        self.table.get(&residue).map(Vec::as_slice)
    }

    /// True when every residue carries the same coefficient row.
    pub fn is_polynomial(&self) -> bool {
        let mut rows = self.table.values();
        let first = rows.next();
        rows.all(|r| Some(r) == first)
    }

    pub fn evaluate(&self, e: u64) -> Result<Rational, QpolyError> {
        let residue = self.residue_at(e);
        let row = self.table.get(&residue).ok_or(QpolyError::MissingResidue {
            residue,
            modulus: self.modulus,
        })?;
        let pe = Rational::from_integer(BigInt::from(self.p.pow(e as u32)));
        // Horner in p^e
        let mut acc = Rational::zero();
        for c in row.iter().rev() {
            acc = acc * &pe + c;
        }
        Ok(acc)
    }

    /// Exact comparison; differing p, modulus or degree is an error rather than `false`.
    pub fn equal(&self, other: &Self) -> Result<bool, QpolyError> {
        if self.p != other.p || self.modulus != other.modulus || self.degree != other.degree {
            return Err(QpolyError::StructuralMismatch(format!(
                "(p, modulus, degree) = ({}, {}, {}) vs ({}, {}, {})",
                self.p, self.modulus, self.degree, other.p, other.modulus, other.degree
            )));
        }
        Ok(self.table == other.table)
    }

    /// Checks `φ_d = rank/|G|` and `φ_{d-1} = 0` on every residue.
    pub fn check_shape(&self) -> Result<(), QpolyError> {
        let lead = Rational::new(BigInt::from(self.rank), BigInt::from(self.group_order));
        for (r, row) in &self.table {
            if row[self.degree] != lead {
                return Err(QpolyError::Invalid(format!(
                    "leading coefficient at residue {r} is {}, expected {lead}",
                    row[self.degree]
                )));
            }
            if self.degree >= 1 && !row[self.degree - 1].is_zero() {
                return Err(QpolyError::Invalid(format!(
                    "coefficient of p^{{{}e}} at residue {r} is {}, expected 0",
                    self.degree - 1,
                    row[self.degree - 1]
                )));
            }
        }
        Ok(())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_cases(polynomial_text, "; "),
            Format::Latex => self.render_latex(),
            Format::Json => self.to_json(),
        }
    }

    /// One `(condition, row)` per residue class in exponent order, or a single
    /// unconditional entry when the coefficients do not depend on the residue.
    fn cases(&self) -> Vec<(Option<String>, &[Rational])> {
        let order = self.residues_by_exponent();
        if self.is_polynomial() {
            return vec![(None, &self.table[&order[0]])];
        }
        let period = order.len();
        order
            .iter()
            .enumerate()
            .map(|(j, r)| {
                let cond = match (period, j) {
                    (2, 0) => "e even".to_string(),
                    (2, _) => "e odd".to_string(),
                    _ => format!("e ≡ {j} mod {period}"),
                };
                (Some(format!("{cond} (r_e = {r})")), self.table[r].as_slice())
            })
            .collect()
    }

    fn render_cases(&self, poly: fn(&[Rational]) -> String, sep: &str) -> String {
        self.cases()
            .into_iter()
            .map(|(cond, row)| match cond {
                None => poly(row),
                Some(c) => format!("{}  [{c}]", poly(row)),
            })
            .collect::<Vec<_>>()
            .join(sep)
    }

    fn render_latex(&self) -> String {
        let cases = self.cases();
        if let [(None, row)] = cases.as_slice() {
            return polynomial_latex(row);
        }
        let mut out = String::from("\\begin{cases}\n");
        let lines: Vec<String> = cases
            .iter()
            .map(|(cond, row)| {
                let cond = cond.as_deref().unwrap_or_default();
                let cond = cond
                    .replace("e even", "e \\text{ even}")
                    .replace("e odd", "e \\text{ odd}")
                    .replace('≡', "\\equiv")
                    .replace(" mod ", " \\bmod ");
                format!("{} & \\text{{for }} {}", polynomial_latex(row), cond)
            })
            .collect();
        out.push_str(&lines.join(" \\\\\n"));
        out.push_str("\n\\end{cases}");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dto()).expect("serializable")
    }

    fn to_dto(&self) -> QpolyJson {
        QpolyJson {
            p: self.p.to_string(),
            modulus: self.modulus,
            degree: self.degree,
            alpha: self.alpha,
            period: self.period(),
            group_order: Some(self.group_order),
            rank: Some(self.rank),
            cases: self
                .residues_by_exponent()
                .into_iter()
                .map(|r| CaseJson {
                    residue: r,
                    coefficients: self.table[&r]
                        .iter()
                        .map(|c| RationalJson {
                            num: c.numer().to_string(),
                            den: c.denom().to_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, QpolyError> {
        let dto: QpolyJson =
            serde_json::from_str(text).map_err(|e| QpolyError::Json(e.to_string()))?;
        let p: BigUint = dto
            .p
            .parse()
            .map_err(|_| QpolyError::Json(format!("bad prime {:?}", dto.p)))?;
        let mut table = BTreeMap::new();
        for case in dto.cases {
            let row = case
                .coefficients
                .iter()
                .map(|c| {
                    parse_rational(&format!("{}/{}", c.num, c.den))
                        .ok_or_else(|| QpolyError::Json(format!("bad rational {}/{}", c.num, c.den)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if table.insert(case.residue, row).is_some() {
                return Err(QpolyError::Json(format!("duplicate residue {}", case.residue)));
            }
        }
        let qp = QuasiPolynomial::new(
            p,
            dto.modulus,
            dto.degree,
            dto.alpha,
            dto.group_order.unwrap_or(dto.modulus),
            dto.rank.unwrap_or(1),
            table,
        )?;
        if qp.period() != dto.period {
            return Err(QpolyError::Invalid(format!(
                "declared period {} but p has order {} mod {}",
                dto.period,
                qp.period(),
                qp.modulus
            )));
        }
        Ok(qp)
    }
}

#[derive(Serialize, Deserialize)]
struct RationalJson {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct CaseJson {
    residue: u64,
    coefficients: Vec<RationalJson>,
}

#[derive(Serialize, Deserialize)]
struct QpolyJson {
    p: String,
    modulus: u64,
    degree: usize,
    alpha: usize,
    period: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<u64>,
    cases: Vec<CaseJson>,
}

fn power_text(c: usize) -> String {
    match c {
        0 => String::new(),
        1 => "p^e".into(),
        _ => format!("p^{{{c}e}}"),
    }
}

/// Plain-text form such as `p^{3e}/4 + 3*p^e/4`.
pub fn polynomial_text(row: &[Rational]) -> String {
    let mut out = String::new();
    for (c, coeff) in row.iter().enumerate().rev() {
        if coeff.is_zero() {
            continue;
        }
        let neg = coeff.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let num = coeff.numer().abs();
        let den = coeff.denom();
        let pow = power_text(c);
        let mut term = match (pow.is_empty(), num.is_one()) {
            (true, _) => num.to_string(),
            (false, true) => pow,
            (false, false) => format!("{num}*{pow}"),
        };
        if !den.is_one() {
            let _ = write!(term, "/{den}");
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// LaTeX form such as `\frac{1}{4}p^{3e} + \frac{3}{4}p^{e}`.
pub fn polynomial_latex(row: &[Rational]) -> String {
    let mut out = String::new();
    for (c, coeff) in row.iter().enumerate().rev() {
        if coeff.is_zero() {
            continue;
        }
        let neg = coeff.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let num = coeff.numer().abs();
        let den = coeff.denom();
        let pow = match c {
            0 => String::new(),
            1 => "p^{e}".to_string(),
            _ => format!("p^{{{c}e}}"),
        };
        let scalar = if den.is_one() {
            if num.is_one() && !pow.is_empty() {
                String::new()
            } else {
                num.to_string()
            }
        } else {
            format!("\\frac{{{num}}}{{{den}}}")
        };
        out.push_str(&scalar);
        out.push_str(&pow);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
