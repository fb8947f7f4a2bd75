use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("cannot combine elements of Q(zeta_{left}) and Q(zeta_{right}); rebase both to a common order first")]
    OrderMismatch { left: u64, right: u64 },
    #[error("cyclotomic value {0} is not rational")]
    NotRational(String),
    #[error("cannot rebase Q(zeta_{from}) into Q(zeta_{to}): {from} does not divide {to}")]
    NotASubfield { from: u64, to: u64 },
}

/// Coefficients of Φ_N in ascending degree order.
///
/// Computed as `(x^N - 1) / Π_{d | N, d < N} Φ_d`; results are cached per N.
pub fn cyclotomic_poly(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_div_monic(&num, &cyclotomic_poly(d));
    }
    let poly = Arc::new(num);
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Quotient of `num` by a monic `den`; panics if the division is not exact.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// Per-order data: Φ_N and the reductions of ζ^k for k in 0..N.
struct Field {
    order: u64,
    degree: usize,
    powers: Vec<Vec<BigInt>>,
}

fn field(order: u64) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&order) {
        return hit.clone();
    }
    let phi = cyclotomic_poly(order);
    let degree = phi.len() - 1;
    // x^k mod Φ_N by repeated multiplication by x.
    let mut powers = Vec::with_capacity(order as usize);
    let mut cur = vec![BigInt::zero(); degree];
    cur[0] = BigInt::one();
    for _ in 0..order {
        powers.push(cur.clone());
        let top = cur[degree - 1].clone();
        let mut next = vec![BigInt::zero(); degree];
        for j in (1..degree).rev() {
            next[j] = cur[j - 1].clone();
        }
        if !top.is_zero() {
            for j in 0..degree {
                next[j] -= &top * &phi[j];
            }
        }
        cur = next;
    }
    let f = Arc::new(Field {
        order,
        degree,
        powers,
    });
    cache.lock().unwrap().insert(order, f.clone());
    f
}

/// An exact element of Q(ζ_N).
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<Field>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}: {})", self.field.order, self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{}^{}", self.field.order, j)?,
                (_, false) => write!(f, "{mag}*z{}^{}", self.field.order, j)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Cyclotomic {
    pub fn zero(order: u64) -> Self {
        let field = field(order);
        let coeffs = vec![Rational::zero(); field.degree];
        Cyclotomic { field, coeffs }
    }

    pub fn from_rational(order: u64, value: Rational) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = value;
        out
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, Rational::one())
    }

    /// Builds `Σ coeff·ζ_N^exponent` from (exponent, coefficient) terms.
    pub fn from_terms<'a, I>(order: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, &'a Rational)>,
    {
        let mut out = Self::zero(order);
        for (exp, c) in terms {
            out.add_power(exp, c);
        }
        out
    }

    fn add_power(&mut self, exponent: i64, coeff: &Rational) {
        let k = exponent.rem_euclid(self.field.order as i64) as usize;
        for (slot, p) in self.coeffs.iter_mut().zip(&self.field.powers[k]) {
            if !p.is_zero() {
                *slot += coeff * Rational::from_integer(p.clone());
            }
        }
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    /// Power-basis coefficients, length φ(N).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<(), CyclotomicError> {
        if self.field.order == other.field.order {
            Ok(())
        } else {
            Err(CyclotomicError::OrderMismatch {
                left: self.field.order,
                right: other.field.order,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check_order(other)?;
        let deg = self.field.degree;
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out = Cyclotomic::zero(self.field.order);
        for (k, c) in prod.iter().enumerate() {
            if k < deg {
                out.coeffs[k] += c;
            } else if !c.is_zero() {
                out.add_power(k as i64, c);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += r;
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Complex conjugation: ζ^j ↦ ζ^{-j}, extended linearly.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// The automorphism ζ ↦ ζ^k of Q(ζ_N); `k` must be a unit mod N.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.field.order as i64;
        debug_assert!(n == 1 || k.rem_euclid(n).gcd(&n) == 1, "k must be a unit mod N");
        let mut out = Cyclotomic::zero(self.field.order);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_power((j as i64 * k).rem_euclid(n), c);
            }
        }
        out
    }

    /// Embeds into Q(ζ_M) for a multiple M of N via ζ_N = ζ_M^{M/N}.
    pub fn rebase(&self, target: u64) -> Result<Self, CyclotomicError> {
        let from = self.field.order;
        if !target.is_multiple_of(from) {
            return Err(CyclotomicError::NotASubfield { from, to: target });
        }
        let step = (target / from) as i64;
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j as i64 * step, c));
        Ok(Cyclotomic::from_terms(target, terms))
    }

    pub fn as_rational(&self) -> Result<Rational, CyclotomicError> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Ok(self.coeffs[0].clone())
        } else {
            Err(CyclotomicError::NotRational(self.to_string()))
        }
    }
}

/// ζ_N^m in canonical form.
pub fn root_of_unity(order: u64, m: i64) -> Cyclotomic {
    Cyclotomic::from_terms(order, [(m, &Rational::one())])
}

/// `Σ_{a=0}^{L-1} (ζ_N^m)^a`, reduced modulo the order of ζ_N^m before summing.
pub fn geom_sum(order: u64, m: i64, len: &BigUint) -> Cyclotomic {
    let m = m.rem_euclid(order as i64) as u64;
    let root_order = order / m.gcd(&order);
    if root_order == 1 {
        return Cyclotomic::from_rational(order, Rational::from_integer(BigInt::from(len.clone())));
    }
    let terms = (len % root_order).to_u64().expect("bounded by root order");
    let one = Rational::one();
    Cyclotomic::from_terms(order, (0..terms).map(|a| ((m * a) as i64, &one)))
}
