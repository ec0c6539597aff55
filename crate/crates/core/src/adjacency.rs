//! Adjacency spectrum of the graph.
//!
//! Group the part sizes into distinct values `Q_1 < ... < Q_m` occurring
//! `r_1, ..., r_m` times. The spectrum is then
//!
//! * `0` with multiplicity `sum_{k in F} (|V_k| - 1)`,
//! * `-Q_j` with multiplicity `r_j - 1` whenever `r_j >= 2`,
//! * the `m` roots of `sum_j r_j Q_j / (x + Q_j) = 1`.
//!
//! The secular roots are isolated by bisection on the cleared polynomial
//! `P(x) = prod_j (x + Q_j) - sum_j r_j Q_j prod_{l != j} (x + Q_l)`,
//! with every sign decision made in exact rational arithmetic.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laplacian::MAX_EXPANDED_DEGREE;
use crate::poly::{big_to_f64, IntPolynomial};
use crate::structure::{multipartite_shape, MultipartiteShape, PartStructure};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Bisection steps before giving up; far more than any `f64` bracket needs.
const MAX_BISECTIONS: usize = 4000;

/// Distinct part sizes with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSizeMultiset {
    /// `Q_1 < ... < Q_m`
    pub distinct: Vec<BigUint>,
    /// `r_1, ..., r_m`
    pub mults: Vec<BigUint>,
}

impl PartSizeMultiset {
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Self {
        let mut pairs = pairs.to_vec();
        pairs.sort_unstable();
        PartSizeMultiset {
            distinct: pairs.iter().map(|&(q, _)| BigUint::from(q)).collect(),
            mults: pairs.iter().map(|&(_, r)| BigUint::from(r)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.distinct.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distinct.is_empty()
    }

    /// `N = sum r_j Q_j`
    pub fn total(&self) -> BigUint {
        self.distinct
            .iter()
            .zip(&self.mults)
            .map(|(q, r)| q * r)
            .sum()
    }

    fn pairs(&self) -> impl Iterator<Item = (&BigUint, &BigUint)> {
        self.distinct.iter().zip(&self.mults)
    }
}

pub fn part_size_multiset(shape: &MultipartiteShape) -> PartSizeMultiset {
    let (distinct, mults) = shape
        .parts()
        .iter()
        .map(|(q, r)| (q.clone(), r.clone()))
        .unzip();
    PartSizeMultiset { distinct, mults }
}

/// Adjacency characteristic polynomial of `K(q_1, ..., q_t)`, expanded
/// part by part:
/// `x^(Q - t) [prod_i (x + q_i) - sum_i q_i prod_{j != i} (x + q_j)]`.
pub fn esser_harary_charpoly(shape: &MultipartiteShape) -> Result<IntPolynomial> {
    let total = shape.total();
    if total > BigUint::from(MAX_EXPANDED_DEGREE) {
        return Err(Error::too_large(
            "polynomial degree",
            total,
            MAX_EXPANDED_DEGREE,
        ));
    }
    let parts = shape.expand(MAX_EXPANDED_DEGREE)?;
    let t = parts.len();
    let factors: Vec<IntPolynomial> = parts
        .iter()
        .map(|&q| IntPolynomial::from_i64(&[q as i64, 1]))
        .collect();
    // prefix[i] = prod_{j < i}, suffix[i] = prod_{j >= i}
    let mut prefix = vec![IntPolynomial::one()];
    for f in &factors {
        prefix.push(prefix.last().unwrap() * f);
    }
    let mut suffix = vec![IntPolynomial::one(); t + 1];
    for i in (0..t).rev() {
        suffix[i] = &suffix[i + 1] * &factors[i];
    }
    let mut bracket = prefix[t].clone();
    for (i, &q) in parts.iter().enumerate() {
        let others = &prefix[i] * &suffix[i + 1];
        bracket = &bracket - &others.scale(&BigInt::from(q));
    }
    let n: usize = parts.iter().sum();
    Ok(bracket.shift_up(n - t))
}

/// `sum_j r_j Q_j / (x + Q_j) = 1` together with its cleared polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecularEquation {
    multiset: PartSizeMultiset,
    poly: IntPolynomial,
}

impl SecularEquation {
    pub fn new(multiset: &PartSizeMultiset) -> Self {
        let linear: Vec<IntPolynomial> = multiset
            .distinct
            .iter()
            .map(|q| IntPolynomial::new(vec![BigInt::from(q.clone()), BigInt::one()]))
            .collect();
        let full = linear.iter().fold(IntPolynomial::one(), |acc, f| &acc * f);
        let mut poly = full;
        for (j, (q, r)) in multiset.pairs().enumerate() {
            let others = linear
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != j)
                .fold(IntPolynomial::one(), |acc, (_, f)| &acc * f);
            poly = &poly - &others.scale(&BigInt::from(q * r));
        }
        SecularEquation {
            multiset: multiset.clone(),
            poly,
        }
    }

    /// The cleared polynomial `P`, of degree `m`.
    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn multiset(&self) -> &PartSizeMultiset {
        &self.multiset
    }

    /// `sum_j r_j Q_j / (x + Q_j)`
    pub fn lhs(&self, x: f64) -> f64 {
        self.multiset
            .pairs()
            .map(|(q, r)| {
                let q = q.to_f64().unwrap_or(f64::INFINITY);
                r.to_f64().unwrap_or(f64::INFINITY) * q / (x + q)
            })
            .sum()
    }

    /// `P(-Q_j)` for every `j`, exactly.
    pub fn pole_values(&self) -> Vec<BigInt> {
        self.multiset
            .distinct
            .iter()
            .map(|q| self.poly.eval(&-BigInt::from(q.clone())))
            .collect()
    }

    /// Bound on `|P(x)|` evaluated in `f64` at a point `x` that lies within
    /// `width` of a true root: the mean-value bound on the interval plus
    /// the rounding error of Horner's rule.
    pub fn residual_bound(&self, x: f64, width: f64) -> f64 {
        let coeffs: Vec<f64> = self
            .poly
            .coeffs()
            .iter()
            .map(|c| big_to_f64(&c.abs()))
            .collect();
        let m = coeffs.len() as f64;
        let w = width + f64::EPSILON * x.abs();
        let reach = x.abs() + w;
        let derivative: f64 = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| k as f64 * c * reach.powi(k as i32 - 1))
            .sum();
        let gamma = 2.0 * m * f64::EPSILON / (1.0 - 2.0 * m * f64::EPSILON);
        let magnitude: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * x.abs().powi(k as i32))
            .sum();
        derivative * w + gamma * magnitude
    }
}

/// One secular root with a certified bracket.
#[derive(Debug, Clone, PartialEq)]
pub struct SecularRoot {
    /// Bracket midpoint.
    pub value: f64,
    pub lo: BigRational,
    pub hi: BigRational,
    /// Width requested when the root was isolated.
    pub tol: f64,
}

impl SecularRoot {
    /// True when the bracket collapsed onto an exact rational root.
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Bracket endpoints rounded to the nearest floats.
    pub fn bounds_f64(&self) -> (f64, f64) {
        (to_f64(&self.lo), to_f64(&self.hi))
    }
}

fn rational(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Isolates the `m` roots of the secular equation, ascending: one in each
/// `(-Q_{j+1}, -Q_j)` and one in `(-Q_1, N)`.
pub fn secular_roots(ms: &PartSizeMultiset, tol: f64) -> Result<Vec<SecularRoot>> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if tol == 0.0 || tol < f64::MIN_POSITIVE {
        return Err(Error::ToleranceTooSmall(tol));
    }
    if ms.is_empty() {
        return Ok(Vec::new());
    }
    let equation = SecularEquation::new(ms);
    let tol_q = BigRational::from_float(tol).ok_or(Error::ToleranceTooSmall(tol))?;

    let poles: Vec<BigRational> = ms.distinct.iter().map(|q| -rational(q)).collect();
    let mut brackets: Vec<(BigRational, BigRational)> = (1..poles.len())
        .rev()
        .map(|j| (poles[j].clone(), poles[j - 1].clone()))
        .collect();
    brackets.push((poles[0].clone(), rational(&ms.total())));

    brackets
        .into_iter()
        .map(|(lo, hi)| bisect(equation.poly(), lo, hi, &tol_q, tol))
        .collect()
}

fn bisect(
    poly: &IntPolynomial,
    mut lo: BigRational,
    mut hi: BigRational,
    tol_q: &BigRational,
    tol: f64,
) -> Result<SecularRoot> {
    let sign_lo = poly.sign_at(&lo);
    let sign_hi = poly.sign_at(&hi);
    debug_assert!(sign_lo != Sign::NoSign && sign_hi != Sign::NoSign);
    debug_assert!(sign_lo != sign_hi, "bracket endpoints must differ in sign");
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..MAX_BISECTIONS {
        if &(&hi - &lo) <= tol_q {
            break;
        }
        let mid = (&lo + &hi) / &two;
        let mid_f = to_f64(&mid);
        if mid_f == to_f64(&lo) || mid_f == to_f64(&hi) {
            return Err(Error::ToleranceTooSmall(tol));
        }
        match poly.sign_at(&mid) {
            Sign::NoSign => {
                lo = mid.clone();
                hi = mid;
                break;
            }
            s if s == sign_lo => lo = mid,
            _ => hi = mid,
        }
    }
    let value = to_f64(&((&lo + &hi) / &two));
    Ok(SecularRoot { value, lo, hi, tol })
}

/// The full adjacency spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencySpectrum {
    /// Multiplicity of the eigenvalue `0` from the independent field parts.
    pub zero_mult: BigUint,
    /// `(-Q_j, r_j - 1)` for each repeated part size, ascending.
    pub negatives: Vec<(BigInt, BigUint)>,
    pub secular_roots: Vec<SecularRoot>,
}

impl AdjacencySpectrum {
    /// Total multiplicity, which equals `N`.
    pub fn dimension(&self) -> BigUint {
        let neg: BigUint = self.negatives.iter().map(|(_, m)| m).sum();
        &self.zero_mult + neg + BigUint::from(self.secular_roots.len())
    }

    /// Number of distinct eigenvalues. A secular root that is exactly zero
    /// coincides with the zero eigenvalue when the latter is present.
    pub fn distinct_count(&self) -> usize {
        let zero_present = !self.zero_mult.is_zero();
        let exact_zero_roots = self
            .secular_roots
            .iter()
            .filter(|r| r.is_exact() && r.lo.is_zero())
            .count();
        let merged = if zero_present { exact_zero_roots } else { 0 };
        usize::from(zero_present) + self.negatives.len() + self.secular_roots.len() - merged
    }

    /// Multiplicity of the eigenvalue `0`, counting a secular root that is
    /// exactly zero. That happens only for a single-part graph.
    pub fn nullity(&self) -> BigUint {
        let exact_zero = self
            .secular_roots
            .iter()
            .filter(|r| r.is_exact() && r.lo.is_zero())
            .count();
        &self.zero_mult + BigUint::from(exact_zero)
    }

    /// Sum of the integer eigenvalues with multiplicity.
    pub fn integer_trace(&self) -> BigInt {
        self.negatives
            .iter()
            .map(|(v, m)| v * BigInt::from(m.clone()))
            .sum()
    }

    pub fn secular_sum(&self) -> f64 {
        self.secular_roots.iter().map(|r| r.value).sum()
    }
}

/// Assembles zero eigenvalues, repeated-size eigenvalues and the secular
/// roots of the graph.
pub fn adjacency_spectrum(ps: &PartStructure, tol: f64) -> Result<AdjacencySpectrum> {
    let ms = part_size_multiset(&multipartite_shape(ps));
    let zero_mult: BigUint = ps.part_sizes().values().map(|v| v - 1u32).sum();
    let negatives = ms
        .pairs()
        .filter(|(_, r)| **r >= BigUint::from(2u32))
        .map(|(q, r)| (-BigInt::from(q.clone()), r - 1u32))
        .collect();
    let secular_roots = secular_roots(&ms, tol)?;
    let spectrum = AdjacencySpectrum {
        zero_mult,
        negatives,
        secular_roots,
    };
    assert_eq!(
        &spectrum.dimension(),
        ps.total(),
        "adjacency multiplicities must account for every vertex"
    );
    Ok(spectrum)
}

/// `1 + #{j : r_j >= 2} + m`
pub fn distinct_adjacency_bound(ms: &PartSizeMultiset) -> usize {
    let repeated = ms
        .mults
        .iter()
        .filter(|r| **r >= BigUint::from(2u32))
        .count();
    1 + repeated + ms.len()
}
