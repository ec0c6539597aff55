//! Closed-form Laplacian spectra, algebraic connectivity and spanning-tree
//! counts. Everything here is exact big-integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::structure::{MultipartiteShape, PartStructure};

/// Largest polynomial degree this crate will expand.
pub const MAX_EXPANDED_DEGREE: u64 = 4096;

/// Results larger than this many bits are refused.
const MAX_RESULT_BITS: u64 = 1 << 26;

/// Integer eigenvalues with multiplicities, eigenvalues strictly
/// increasing, every multiplicity positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerSpectrum {
    pairs: Vec<(BigUint, BigUint)>,
}

impl IntegerSpectrum {
    /// Builds from possibly repeated or zero-multiplicity entries, merging
    /// equal eigenvalues and dropping empty ones.
    pub fn from_entries(entries: impl IntoIterator<Item = (BigUint, BigUint)>) -> Self {
        let mut merged: BTreeMap<BigUint, BigUint> = BTreeMap::new();
        for (value, mult) in entries {
            *merged.entry(value).or_insert_with(BigUint::zero) += mult;
        }
        IntegerSpectrum {
            pairs: merged.into_iter().filter(|(_, m)| !m.is_zero()).collect(),
        }
    }

    pub fn from_u64(entries: &[(u64, u64)]) -> Self {
        Self::from_entries(
            entries
                .iter()
                .map(|&(v, m)| (BigUint::from(v), BigUint::from(m))),
        )
    }

    pub fn pairs(&self) -> &[(BigUint, BigUint)] {
        &self.pairs
    }

    pub fn total_multiplicity(&self) -> BigUint {
        self.pairs.iter().map(|(_, m)| m).sum()
    }

    /// Sum of all eigenvalues with multiplicity.
    pub fn trace(&self) -> BigUint {
        self.pairs.iter().map(|(v, m)| v * m).sum()
    }

    /// Smallest nonzero eigenvalue.
    pub fn smallest_positive(&self) -> Option<&BigUint> {
        self.pairs.iter().map(|(v, _)| v).find(|v| !v.is_zero())
    }

    /// `prod (x - lambda)^mult`, expanded.
    pub fn to_polynomial(&self) -> Result<IntPolynomial> {
        let degree = self.total_multiplicity();
        if degree > BigUint::from(MAX_EXPANDED_DEGREE) {
            return Err(Error::too_large(
                "polynomial degree",
                degree,
                MAX_EXPANDED_DEGREE,
            ));
        }
        let roots: Vec<(BigInt, usize)> = self
            .pairs
            .iter()
            .map(|(v, m)| (BigInt::from(v.clone()), m.to_usize().unwrap()))
            .collect();
        Ok(IntPolynomial::from_roots(
            roots.iter().map(|(v, m)| (v, *m)),
        ))
    }
}

impl fmt::Display for IntegerSpectrum {
    /// `{0, 5^(1), 7^(5)}`: a simple zero eigenvalue is printed bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .pairs
            .iter()
            .map(|(v, m)| {
                if v.is_zero() && m.is_one() {
                    "0".to_string()
                } else {
                    format!("{v}^({m})")
                }
            })
            .collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

fn checked_exponent(e: &BigUint, base: &BigUint) -> Result<u32> {
    let bits = base.bits().max(1);
    let ok = e
        .to_u64()
        .filter(|&e| e.saturating_mul(bits) <= MAX_RESULT_BITS)
        .and_then(|e| u32::try_from(e).ok());
    ok.ok_or_else(|| Error::too_large("result size in bits", e * bits, MAX_RESULT_BITS))
}

fn degree_of(shape: &MultipartiteShape) -> Result<usize> {
    let n = shape.total();
    if n > BigUint::from(MAX_EXPANDED_DEGREE) {
        return Err(Error::too_large(
            "polynomial degree",
            n,
            MAX_EXPANDED_DEGREE,
        ));
    }
    Ok(n.to_usize().unwrap())
}

/// Laplacian characteristic polynomial of the complete multipartite graph
/// `K(p_1, ..., p_M)`:
/// `x (x - N)^(M-1) prod_i (x - (N - p_i))^(p_i - 1)`.
pub fn multipartite_laplacian_charpoly(shape: &MultipartiteShape) -> Result<IntPolynomial> {
    let n = degree_of(shape)?;
    let n_big = BigInt::from(n);
    let m = shape.part_count().to_usize().unwrap();
    let mut out = IntPolynomial::x() * IntPolynomial::linear(&n_big).pow(m - 1);
    for (size, count) in shape.parts() {
        let size = size.to_usize().unwrap();
        let count = count.to_usize().unwrap();
        let root = &n_big - BigInt::from(size);
        out = out * IntPolynomial::linear(&root).pow((size - 1) * count);
    }
    Ok(out)
}

/// Laplacian spectrum of the graph:
/// `0` once, `N` with multiplicity `|F| + |V_0| - 1`, and `N - |V_k|`
/// with multiplicity `|V_k| - 1` for each `k` in `F`.
pub fn wgamma_laplacian_spectrum(ps: &PartStructure) -> IntegerSpectrum {
    let n = ps.total().clone();
    let mut entries = vec![
        (BigUint::zero(), BigUint::one()),
        (n.clone(), ps.part_count() - 1u32),
    ];
    for size in ps.part_sizes().values() {
        entries.push((&n - size, size - 1u32));
    }
    IntegerSpectrum::from_entries(entries)
}

/// Second-smallest Laplacian eigenvalue: `N - p_max` if some field part
/// has at least two vertices, else `N`.
pub fn algebraic_connectivity(ps: &PartStructure) -> Result<BigUint> {
    let n = ps.total();
    if *n < BigUint::from(2u32) {
        return Err(Error::TooFewVertices(n.to_string()));
    }
    let p_max = ps.max_field_part();
    Ok(if p_max >= BigUint::from(2u32) {
        n - p_max
    } else {
        n.clone()
    })
}

/// `N^(|F| + |V_0| - 2) * prod_k (N - |V_k|)^(|V_k| - 1)`, or `1` for a
/// single vertex.
pub fn spanning_tree_count(ps: &PartStructure) -> Result<BigUint> {
    let n = ps.total();
    if n.is_one() {
        return Ok(BigUint::one());
    }
    let parts = ps.part_count();
    if parts < BigUint::from(2u32) {
        // one part on several vertices is edgeless
        return Ok(BigUint::zero());
    }
    let e = parts - 2u32;
    let mut out = n.pow(checked_exponent(&e, n)?);
    for size in ps.part_sizes().values() {
        let base = n - size;
        let e = size - 1u32;
        out *= base.pow(checked_exponent(&e, &base)?);
        if out.bits() > MAX_RESULT_BITS {
            return Err(Error::too_large(
                "result size in bits",
                out.bits(),
                MAX_RESULT_BITS,
            ));
        }
    }
    Ok(out)
}

pub fn distinct_eigenvalue_count(spectrum: &IntegerSpectrum) -> usize {
    spectrum.pairs().len()
}

/// The `Z/n` specialization of the Laplacian spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZnReport {
    pub n: u64,
    pub factorization: Vec<(u64, u32)>,
    /// Zero-based positions in `factorization` with exponent one.
    pub field_indices: Vec<usize>,
    pub phi: u64,
    /// `N = n - phi(n) - 1`.
    pub total: u64,
    /// `|V_k| = phi(n / p_k)` for each field index.
    pub part_sizes: Vec<u64>,
    pub v0_size: u64,
    pub spectrum: IntegerSpectrum,
}

/// Laplacian spectrum of the graph of `Z/n` straight from the
/// factorization of `n` and Euler's totient.
pub fn zn_report(n: u64) -> Result<ZnReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n must be at least 2, got {n}"
        )));
    }
    if arith::is_prime(n) {
        return Err(Error::PrimeInput(n));
    }
    let factorization = arith::factorize(n);
    let field_indices: Vec<usize> = factorization
        .iter()
        .enumerate()
        .filter(|(_, &(_, a))| a == 1)
        .map(|(i, _)| i)
        .collect();
    let phi = arith::euler_phi(n);
    let total = n - phi - 1;
    let part_sizes: Vec<u64> = field_indices
        .iter()
        .map(|&k| arith::euler_phi(n / factorization[k].0))
        .collect();
    let sum_parts: u64 = part_sizes.iter().sum();
    let v0_size = total - sum_parts;
    let f = field_indices.len() as u64;
    // n + |F| - 2 - phi(n) - sum phi(n/p_k), rearranged to stay unsigned
    let top_mult = (n + f) - (2 + phi + sum_parts);

    let mut entries = vec![(0u64, 1u64), (total, top_mult)];
    entries.extend(part_sizes.iter().map(|&v| (total - v, v - 1)));
    Ok(ZnReport {
        n,
        factorization,
        field_indices,
        phi,
        total,
        part_sizes,
        v0_size,
        spectrum: IntegerSpectrum::from_u64(&entries),
    })
}
