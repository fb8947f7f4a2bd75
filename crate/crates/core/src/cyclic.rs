//! Cyclic quotient singularities `1/n(t_1, …, t_d)`.
//!
//! Writing `p^e = k·n + r` with `0 < r < n`, the box `[0, p^e - 1]^d` splits into
//! shifted copies of the boxes `C_J` (side `n` along `J`, side `r` elsewhere), and
//! counting the lattice `Σ t_i a_i ≡ α (mod n)` inside each copy gives
//!
//! ```text
//! mult_α(e) = Σ_i k^i n^{i-1} ψ_i,     ψ_i = Σ_{|J| = i} g_J θ_J,
//! ```
//!
//! where `g_J = gcd(t_J, n)` and `θ_J` counts tuples in `[0, r-1]^{d-|J|}` on the
//! complement of `J` whose weighted sum is `α mod g_J`. Expanding `k = (p^e - r)/n`
//! gives the coefficient of `p^{ce}`:
//!
//! ```text
//! φ_c = (1/n) Σ_{i=c}^{d} (-1)^{i-c} C(i, c) ψ_i r^{i-c}.
//! ```
//!
//! Every quantity depends on `e` only through `r`, so the quasi-polynomial table is
//! indexed by the residues in `⟨p⟩ ⊆ (Z/n)*`. For `n = 1` the table has the single
//! key `0` and the formulas are evaluated with `r = 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{self, binomial};
use crate::exactnum::Rational;
use crate::qpoly::QuasiPolynomial;

/// Largest dimension for which the `2^d` subset table is built.
pub const MAX_DIMENSION: usize = 24;

/// Default bound on the number of lattice points the brute-force oracle visits.
pub const DEFAULT_ORACLE_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("group order n must be at least 1")]
    ZeroOrder,
    #[error("at least one weight is required")]
    NoWeights,
    #[error("action is not faithful: gcd(t_1, …, t_d, n) = {gcd}; divide n and the weights by {gcd}")]
    NotFaithful { gcd: u64 },
    #[error(
        "group is not small: gcd of the weights at positions {positions:?} with n is {gcd} > 1, \
         so g^{stride} fixes a hyperplane and is a pseudoreflection"
    )]
    NotSmall {
        positions: Vec<usize>,
        gcd: u64,
        stride: u64,
    },
    #[error("dimension {d} exceeds the supported maximum of {max}")]
    DimensionTooLarge { d: usize, max: usize },
    #[error("p = {p} is not prime")]
    NotPrime { p: BigUint },
    #[error("p = {p} divides the group order {n}")]
    PDividesGroupOrder { p: BigUint, n: u64 },
    #[error("oracle would enumerate {points} points, above the cap of {cap}")]
    CapExceeded { points: BigUint, cap: u64 },
}

/// The data `(n; t_1, …, t_d)` of a faithful small cyclic action.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicSingularity {
    n: u64,
    weights: Vec<u64>,
}

impl fmt::Display for CyclicSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "1/{}({})", self.n, t.join(","))
    }
}

impl CyclicSingularity {
    /// Reduces the weights mod `n` and checks faithfulness and smallness.
    pub fn new(n: u64, weights: &[i64]) -> Result<Self, CyclicError> {
        if n == 0 {
            return Err(CyclicError::ZeroOrder);
        }
        if weights.is_empty() {
            return Err(CyclicError::NoWeights);
        }
        let weights: Vec<u64> = weights
            .iter()
            .map(|&t| t.rem_euclid(n as i64) as u64)
            .collect();
        let all = arith::gcd_all(weights.iter().copied().chain([n]));
        if all != 1 {
            return Err(CyclicError::NotFaithful { gcd: all });
        }
        let d = weights.len();
        for skip in 0..d {
            let g = arith::gcd_all(
                weights
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &t)| t)
                    .chain([n]),
            );
            if g != 1 {
                return Err(CyclicError::NotSmall {
                    positions: (1..=d).filter(|&i| i != skip + 1).collect(),
                    gcd: g,
                    stride: n / g,
                });
            }
        }
        Ok(CyclicSingularity { n, weights })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// The representative `r_e ∈ [1, n)` used in the formulas for a table key.
    fn box_side(&self, residue: u64) -> u64 {
        if self.n == 1 {
            1
        } else {
            residue
        }
    }
}

/// `g_J` for every subset `J ⊆ [d]`, indexed by bitmask (bit `i` ↔ coordinate `i+1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetProfile {
    d: usize,
    gcds: Vec<u64>,
}

impl SubsetProfile {
    pub fn g(&self, mask: usize) -> u64 {
        self.gcds[mask]
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// Masks of the subsets of size `i`.
    pub fn level(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.gcds.len()).filter(move |m| m.count_ones() as usize == i)
    }

    /// True when every `J` of size `i` has `g_J = 1`.
    pub fn level_is_coprime(&self, i: usize) -> bool {
        self.level(i).all(|m| self.gcds[m] == 1)
    }
}

pub fn mask_of(positions: &[usize]) -> usize {
    positions.iter().fold(0, |m, &i| m | (1 << (i - 1)))
}

pub fn subset_gcds(sing: &CyclicSingularity) -> Result<SubsetProfile, CyclicError> {
    let d = sing.dim();
    if d > MAX_DIMENSION {
        return Err(CyclicError::DimensionTooLarge {
            d,
            max: MAX_DIMENSION,
        });
    }
    let mut gcds = vec![sing.n; 1 << d];
    for mask in 1usize..(1 << d) {
        let low = mask.trailing_zeros() as usize;
        gcds[mask] = arith::gcd(gcds[mask & (mask - 1)], sing.weights[low]);
    }
    Ok(SubsetProfile { d, gcds })
}

/// `θ_J^{(α)}`: tuples in `[0, r-1]^{d-|J|}` over the complement of `J` whose
/// weighted sum is `≡ α mod g_J`.
///
/// Computed as a convolution of per-coordinate residue histograms over `Z/g_J`.
pub fn theta(sing: &CyclicSingularity, profile: &SubsetProfile, mask: usize, alpha: u64, r: u64) -> BigUint {
    let g = profile.g(mask);
    let mut hist = vec![BigUint::zero(); g as usize];
    hist[0] = BigUint::one();
    for (i, &t) in sing.weights.iter().enumerate() {
        if mask & (1 << i) != 0 {
            continue;
        }
        // residues a·t mod g for a in [0, r-1]
        let mut step = vec![0u64; g as usize];
        for a in 0..r.min(g) {
            let hits = (r - a).div_ceil(g);
            step[((a * t) % g) as usize] += hits;
        }
        let mut next = vec![BigUint::zero(); g as usize];
        for (s, &cnt) in step.iter().enumerate() {
            if cnt == 0 {
                continue;
            }
            for (h, v) in hist.iter().enumerate() {
                if !v.is_zero() {
                    next[(h + s) % g as usize] += v * cnt;
                }
            }
        }
        hist = next;
    }
    hist[(alpha % g) as usize].clone()
}

/// `ψ_i^{(α)} = Σ_{|J| = i} g_J θ_J^{(α)}`.
pub fn psi(sing: &CyclicSingularity, profile: &SubsetProfile, i: usize, alpha: u64, r: u64) -> BigUint {
    profile
        .level(i)
        .map(|m| theta(sing, profile, m, alpha, r) * profile.g(m))
        .sum()
}

/// `[ψ_0, …, ψ_d]`.
pub fn psi_all(sing: &CyclicSingularity, profile: &SubsetProfile, alpha: u64, r: u64) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); sing.dim() + 1];
    for mask in 0..(1usize << sing.dim()) {
        let i = mask.count_ones() as usize;
        out[i] += theta(sing, profile, mask, alpha, r) * profile.g(mask);
    }
    out
}

fn phi_from_psi(psis: &[BigUint], c: usize, n: u64, r: u64) -> Rational {
    let r = BigInt::from(r);
    let mut acc = BigInt::zero();
    for (i, psi_i) in psis.iter().enumerate().skip(c) {
        let term = binomial(i as u64, c as u64) * BigInt::from(psi_i.clone()) * r.pow((i - c) as u32);
        if (i - c).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Rational::new(acc, BigInt::from(n))
}

/// Coefficient `φ_c^{(α)}` of `p^{ce}` when `p^e ≡ r (mod n)`.
pub fn phi(sing: &CyclicSingularity, profile: &SubsetProfile, c: usize, alpha: u64, r: u64) -> Rational {
    let psis = psi_all(sing, profile, alpha, r);
    phi_from_psi(&psis, c, sing.n, r)
}

/// `[φ_0, …, φ_d]` for the residue class `r` (use `r = 1` when `n = 1`).
pub fn coefficient_row(sing: &CyclicSingularity, profile: &SubsetProfile, alpha: u64, r: u64) -> Vec<Rational> {
    let psis = psi_all(sing, profile, alpha, r);
    (0..=sing.dim())
        .map(|c| phi_from_psi(&psis, c, sing.n, r))
        .collect()
}

fn check_prime(sing: &CyclicSingularity, p: &BigUint) -> Result<(), CyclicError> {
    if !arith::is_prime(p) {
        return Err(CyclicError::NotPrime { p: p.clone() });
    }
    if (BigUint::from(sing.n) % p).is_zero() {
        return Err(CyclicError::PDividesGroupOrder {
            p: p.clone(),
            n: sing.n,
        });
    }
    Ok(())
}

/// `e ↦ mult(M_α, R^{1/p^e})` as a quasi-polynomial; `α = 0` is the F-signature function.
pub fn multiplicity_qpoly(sing: &CyclicSingularity, p: &BigUint, alpha: u64) -> Result<QuasiPolynomial, CyclicError> {
    let profile = subset_gcds(sing)?;
    multiplicity_qpoly_with(sing, &profile, p, alpha)
}

fn multiplicity_qpoly_with(
    sing: &CyclicSingularity,
    profile: &SubsetProfile,
    p: &BigUint,
    alpha: u64,
) -> Result<QuasiPolynomial, CyclicError> {
    check_prime(sing, p)?;
    let n = sing.n;
    let alpha = alpha % n;
    let table: BTreeMap<u64, Vec<Rational>> = arith::cyclic_subgroup(arith::reduce(p, n), n)
        .into_iter()
        .map(|res| (res, coefficient_row(sing, profile, alpha, sing.box_side(res))))
        .collect();
    let qp = QuasiPolynomial::new(p.clone(), n, sing.dim(), alpha as usize, n, 1, table)
        .expect("engine builds the residue subgroup table");
    debug_assert!(qp.check_shape().is_ok(), "{:?}", qp.check_shape());
    Ok(qp)
}

/// All `n` multiplicity quasi-polynomials, indexed by `α`.
pub fn multiplicity_table(sing: &CyclicSingularity, p: &BigUint) -> Result<Vec<QuasiPolynomial>, CyclicError> {
    let profile = subset_gcds(sing)?;
    (0..sing.n)
        .map(|alpha| multiplicity_qpoly_with(sing, &profile, p, alpha))
        .collect()
}

/// Lattice-point counts `|{a ∈ [0, p^e - 1]^d : Σ t_i a_i ≡ α (mod n)}|` for every α,
/// by literal enumeration.
pub fn brute_force_histogram(sing: &CyclicSingularity, p: u64, e: u32, cap: u64) -> Result<Vec<u64>, CyclicError> {
    let side = BigUint::from(p).pow(e);
    let points = side.pow(sing.dim() as u32);
    if points > BigUint::from(cap) {
        return Err(CyclicError::CapExceeded { points, cap });
    }
    let side = p.pow(e);
    let n = sing.n;
    let d = sing.dim();
    let mut counts = vec![0u64; n as usize];
    let mut digits = vec![0u64; d];
    let mut sum = 0u64;
    'outer: loop {
        counts[sum as usize] += 1;
        // odometer step, keeping the weighted sum mod n current
        for (digit, &w) in digits.iter_mut().zip(&sing.weights) {
            *digit += 1;
            sum = (sum + w) % n;
            if *digit < side {
                continue 'outer;
            }
            *digit = 0;
            sum = (sum + n - (side % n) * w % n) % n;
        }
        break;
    }
    Ok(counts)
}

pub fn brute_force_mult(sing: &CyclicSingularity, p: u64, e: u32, alpha: u64, cap: u64) -> Result<u64, CyclicError> {
    Ok(brute_force_histogram(sing, p, e, cap)?[(alpha % sing.n) as usize])
}

/// Number of solutions in `(Z/n)^i` of `Σ t_j x_j ≡ b (mod n)`: `g·n^{i-1}` when
/// `g = gcd(t, n)` divides `b`, otherwise zero.
pub fn congruence_count(t_sub: &[u64], n: u64, b: i64) -> BigUint {
    assert!(n >= 1);
    let g = arith::gcd_all(t_sub.iter().copied().chain([n]));
    if b.rem_euclid(g as i64) != 0 {
        return BigUint::zero();
    }
    match t_sub.len() {
        0 => BigUint::one(),
        i => BigUint::from(g) * BigUint::from(n).pow(i as u32 - 1),
    }
}

/// Which coefficient functions of the F-signature vanish identically, and the
/// pseudoreflection census that explains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingProfile {
    /// Largest `c < d` with some `g_J > 1` on `|J| = c`; this is the first
    /// coefficient below the leading one that does not vanish.
    pub first_nonzero: Option<usize>,
    /// The `c` strictly between `first_nonzero` and `d` whose `φ_c` vanish.
    pub identically_zero: Vec<usize>,
    /// `|G_c|` for `c = 0..=d`: elements with eigenvalue 1 of multiplicity exactly `c`.
    pub pseudoreflections: Vec<u64>,
}

pub fn vanishing_profile(sing: &CyclicSingularity) -> Result<VanishingProfile, CyclicError> {
    let profile = subset_gcds(sing)?;
    let d = sing.dim();
    let first_nonzero = (0..d).rev().find(|&c| !profile.level_is_coprime(c));
    let lo = first_nonzero.map_or(0, |c| c + 1);
    let mut pseudoreflections = vec![0u64; d + 1];
    for j in 0..sing.n {
        let fixed = sing.weights.iter().filter(|&&t| (j * t) % sing.n == 0).count();
        pseudoreflections[fixed] += 1;
    }
    Ok(VanishingProfile {
        first_nonzero,
        identically_zero: (lo..d).collect(),
        pseudoreflections,
    })
}

/// `φ_ℓ = (ψ_ℓ - C(d, ℓ) r^{d-ℓ}) / n` for the first non-vanishing `ℓ`.
pub fn first_nonzero_closed_form(sing: &CyclicSingularity, alpha: u64, r: u64) -> Result<Option<Rational>, CyclicError> {
    let profile = subset_gcds(sing)?;
    let vp = vanishing_profile(sing)?;
    let Some(ell) = vp.first_nonzero else {
        return Ok(None);
    };
    let d = sing.dim();
    let psi_l = BigInt::from(psi(sing, &profile, ell, alpha, r));
    let num = psi_l - binomial(d as u64, ell as u64) * BigInt::from(r).pow((d - ell) as u32);
    Ok(Some(Rational::new(num, BigInt::from(sing.n))))
}

/// Every valid singularity `1/n(t_1, …, t_d)` with `n ≤ max_n`, `d ≤ max_d`, over all
/// weight vectors in `[0, n)^d` (orderings counted separately).
pub fn all_singularities(max_n: u64, max_d: usize) -> Vec<CyclicSingularity> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for d in 1..=max_d {
            let total = n.pow(d as u32);
            for code in 0..total {
                let mut c = code;
                let t: Vec<i64> = (0..d)
                    .map(|_| {
                        let digit = c % n;
                        c /= n;
                        digit as i64
                    })
                    .collect();
                if let Ok(s) = CyclicSingularity::new(n, &t) {
                    out.push(s);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn sing(n: u64, t: &[i64]) -> CyclicSingularity {
        CyclicSingularity::new(n, t).unwrap()
    }

    #[test]
    fn validation() {
        assert!(CyclicSingularity::new(6, &[1, 2, 3]).is_ok());
        assert_eq!(
            CyclicSingularity::new(4, &[2, 2]),
            Err(CyclicError::NotFaithful { gcd: 2 })
        );
        match CyclicSingularity::new(4, &[1, 2]) {
            Err(CyclicError::NotSmall { positions, gcd, .. }) => {
                assert_eq!(positions, vec![2]);
                assert_eq!(gcd, 2);
            }
            other => panic!("{other:?}"),
        }
        assert!(CyclicSingularity::new(1, &[0]).is_ok());
        assert!(matches!(
            CyclicSingularity::new(3, &[1]),
            Err(CyclicError::NotSmall { .. })
        ));
        // weights reduce mod n; a zero weight is a pseudoreflection only when d = 2
        assert_eq!(sing(5, &[6, -1]).weights(), &[1, 4]);
        assert!(matches!(
            CyclicSingularity::new(5, &[0, 1]),
            Err(CyclicError::NotSmall { .. })
        ));
        assert!(CyclicSingularity::new(5, &[0, 1, 2]).is_ok());
        let msg = CyclicSingularity::new(4, &[2, 2]).unwrap_err().to_string();
        assert!(msg.contains("divide"));
    }

    #[test]
    fn subset_gcd_examples() {
        let s = sing(6, &[1, 2, 3]);
        let prof = subset_gcds(&s).unwrap();
        assert_eq!(prof.g(0), 6);
        assert_eq!(prof.g(mask_of(&[2])), 2);
        assert_eq!(prof.g(mask_of(&[3])), 3);
        assert_eq!(prof.g(mask_of(&[2, 3])), 1);
        assert_eq!(prof.g(mask_of(&[1, 2, 3])), 1);

        let v = subset_gcds(&sing(7, &[1, 1, 1, 1])).unwrap();
        assert!((1..16).all(|m| v.g(m) == 1));

        let s = sing(6, &[1, 1, 3, 3]);
        let prof = subset_gcds(&s).unwrap();
        assert_eq!(prof.g(mask_of(&[3])), 3);
        assert_eq!(prof.g(mask_of(&[4])), 3);
        assert_eq!(prof.g(mask_of(&[3, 4])), 3);
    }

    #[test]
    fn subset_gcds_divide_along_inclusion() {
        let s = sing(12, &[1, 4, 6, 9]);
        let prof = subset_gcds(&s).unwrap();
        for a in 0..16usize {
            for b in 0..16usize {
                if a & b == a {
                    assert_eq!(prof.g(a) % prof.g(b), 0);
                }
            }
        }
    }

    // direct enumeration of the θ definition, used only here
    fn theta_by_enumeration(s: &CyclicSingularity, mask: usize, alpha: u64, r: u64) -> u64 {
        let prof = subset_gcds(s).unwrap();
        let g = prof.g(mask);
        let free: Vec<u64> = (0..s.dim())
            .filter(|i| mask & (1 << i) == 0)
            .map(|i| s.weights()[i])
            .collect();
        let total = r.pow(free.len() as u32);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let mut sum = 0;
                for &t in &free {
                    sum += (c % r) * t;
                    c /= r;
                }
                sum % g == alpha % g
            })
            .count() as u64
    }

    #[test]
    fn theta_examples() {
        for n in 2..=12u64 {
            let a = sing(n, &[1, n as i64 - 1]);
            let prof = subset_gcds(&a).unwrap();
            for r in 1..n {
                assert_eq!(theta(&a, &prof, 0, 0, r), BigUint::from(r));
            }
        }
        let v = sing(4, &[1, 1]);
        let prof = subset_gcds(&v).unwrap();
        assert_eq!(theta(&v, &prof, 0, 0, 3), BigUint::from(2u32));
        assert_eq!(theta_by_enumeration(&v, 0, 0, 3), 2);
        // g_J = 1 gives the full box; r = 1 gives 1 or 0
        let s = sing(6, &[1, 2, 3]);
        let prof = subset_gcds(&s).unwrap();
        for r in 1..6 {
            assert_eq!(theta(&s, &prof, mask_of(&[2, 3]), 4, r), BigUint::from(r));
        }
        for mask in 0..7usize {
            if prof.g(mask) > 1 {
                assert_eq!(theta(&s, &prof, mask, 0, 1), BigUint::one());
                assert_eq!(theta(&s, &prof, mask, 1, 1), BigUint::zero());
            }
        }
        assert_eq!(theta(&s, &prof, 7, 5, 3), BigUint::one());
    }

    #[test]
    fn theta_matches_enumeration() {
        for s in [sing(6, &[1, 2, 3]), sing(10, &[1, 4, 5]), sing(12, &[1, 3, 4, 6]), sing(9, &[1, 2, 3])] {
            let prof = subset_gcds(&s).unwrap();
            for mask in 0..(1usize << s.dim()) {
                for r in 1..s.order() {
                    for alpha in 0..s.order() {
                        assert_eq!(
                            theta(&s, &prof, mask, alpha, r),
                            BigUint::from(theta_by_enumeration(&s, mask, alpha, r)),
                            "{s} mask={mask} alpha={alpha} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        let s = sing(6, &[1, 2, 3]);
        let prof = subset_gcds(&s).unwrap();
        let psis: Vec<u64> = (0..=3).map(|i| psi(&s, &prof, i, 0, 1).try_into().unwrap()).collect();
        assert_eq!(psis, vec![6, 6, 3, 1]);
        let v = sing(5, &[1, 1, 1, 1]);
        let prof = subset_gcds(&v).unwrap();
        for r in 1..5u64 {
            assert_eq!(psi(&v, &prof, 4, 3, r), BigUint::one());
            for i in 1..=4usize {
                let expected = binomial(4, i as u64) * BigInt::from(r).pow(4 - i as u32);
                assert_eq!(BigInt::from(psi(&v, &prof, i, 2, r)), expected);
            }
        }
    }

    #[test]
    fn phi_examples() {
        let s = sing(6, &[1, 2, 3]);
        let prof = subset_gcds(&s).unwrap();
        let row0 = coefficient_row(&s, &prof, 0, 1);
        assert_eq!(row0, vec![rat(1, 3), rat(1, 2), rat(0, 1), rat(1, 6)]);
        let row1 = coefficient_row(&s, &prof, 1, 1);
        assert_eq!(row1[1], rat(-1, 3));
        assert_eq!(row1[0], rat(1, 6));
        for r in 1..6 {
            for alpha in 0..6 {
                assert_eq!(phi(&s, &prof, 3, alpha, r), rat(1, 6));
            }
        }
        let s = sing(6, &[1, 1, 3, 3]);
        let prof = subset_gcds(&s).unwrap();
        for r in 1..6 {
            assert_eq!(phi(&s, &prof, 1, 0, r), rat(0, 1), "r={r}");
        }
    }

    #[test]
    fn qpoly_examples() {
        let p7 = BigUint::from(7u32);
        for n in 2..=12u64 {
            let a = sing(n, &[1, n as i64 - 1]);
            for p in [5u64, 7, 11, 13] {
                if n % p == 0 {
                    continue;
                }
                let qp = multiplicity_qpoly(&a, &BigUint::from(p), 0).unwrap();
                for (&r, row) in qp.table() {
                    let rr = Rational::from_integer(BigInt::from(r));
                    assert_eq!(row[2], rat(1, n as i64));
                    assert_eq!(row[1], rat(0, 1));
                    assert_eq!(row[0], rr.clone() - &rr * &rr / Rational::from_integer(BigInt::from(n)));
                }
            }
        }
        let v = sing(2, &[1, 1, 1, 1]);
        let qp = multiplicity_qpoly(&v, &p7, 0).unwrap();
        assert_eq!(qp.table()[&1], vec![rat(1, 2), rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 2)]);
        let s = sing(6, &[1, 1, 3, 3]);
        let qp = multiplicity_qpoly(&s, &p7, 0).unwrap();
        assert_eq!(qp.table()[&1], vec![rat(1, 2), rat(0, 1), rat(1, 3), rat(0, 1), rat(1, 6)]);

        let trivial = sing(1, &[0, 0, 0]);
        let qp = multiplicity_qpoly(&trivial, &p7, 0).unwrap();
        assert_eq!(qp.table()[&0], vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn qpoly_errors() {
        let s = sing(6, &[1, 2, 3]);
        assert!(matches!(
            multiplicity_qpoly(&s, &BigUint::from(3u32), 0),
            Err(CyclicError::PDividesGroupOrder { .. })
        ));
        assert!(matches!(
            multiplicity_qpoly(&s, &BigUint::from(25u32), 0),
            Err(CyclicError::NotPrime { .. })
        ));
    }

    #[test]
    fn brute_force_examples() {
        let s = sing(6, &[1, 2, 3]);
        assert_eq!(brute_force_mult(&s, 7, 1, 0, DEFAULT_ORACLE_CAP).unwrap(), 61);
        let a1 = sing(2, &[1, 1]);
        assert_eq!(brute_force_mult(&a1, 3, 1, 0, DEFAULT_ORACLE_CAP).unwrap(), 5);
        let h = brute_force_histogram(&s, 5, 2, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(h.iter().sum::<u64>(), 5u64.pow(6));
        let big = sing(5, &[1, 1, 1, 1, 1]);
        assert!(matches!(
            brute_force_mult(&big, 7, 3, 0, DEFAULT_ORACLE_CAP),
            Err(CyclicError::CapExceeded { .. })
        ));
    }

    #[test]
    fn congruence_examples() {
        assert_eq!(congruence_count(&[1, 2], 6, 0), BigUint::from(6u32));
        assert_eq!(congruence_count(&[2, 4], 6, 1), BigUint::zero());
        assert_eq!(congruence_count(&[3], 6, 3), BigUint::from(3u32));
        let direct = (0..6u64).filter(|x| (3 * x) % 6 == 3).count();
        assert_eq!(direct, 3);
        assert_eq!(congruence_count(&[], 4, 8), BigUint::one());
        assert_eq!(congruence_count(&[], 4, 2), BigUint::zero());
    }

    #[test]
    fn vanishing_examples() {
        let v = vanishing_profile(&sing(5, &[1, 1, 1])).unwrap();
        assert_eq!(v.first_nonzero, Some(0));
        assert_eq!(v.identically_zero, vec![1, 2]);
        let s = sing(6, &[1, 2, 3]);
        let v = vanishing_profile(&s).unwrap();
        assert_eq!(v.pseudoreflections, vec![2, 3, 0, 1]);
        assert_eq!(v.first_nonzero, Some(1));
        let v = vanishing_profile(&sing(6, &[1, 1, 3, 3])).unwrap();
        assert_eq!(v.pseudoreflections[1], 0);
        assert_eq!(v.first_nonzero, Some(2));
        assert_eq!(vanishing_profile(&sing(1, &[0, 0])).unwrap().first_nonzero, None);

        // Veronese: φ_0 = -r^d/n + θ_∅
        let v = sing(7, &[1, 1, 1]);
        let prof = subset_gcds(&v).unwrap();
        for r in 1..7u64 {
            for alpha in 0..7 {
                let closed = first_nonzero_closed_form(&v, alpha, r).unwrap().unwrap();
                let theta0 = Rational::from_integer(BigInt::from(theta(&v, &prof, 0, alpha, r)));
                assert_eq!(closed, theta0 - rat((r * r * r) as i64, 7));
                assert_eq!(closed, phi(&v, &prof, 0, alpha, r));
            }
        }
    }
}
