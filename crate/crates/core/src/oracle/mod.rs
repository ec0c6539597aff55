//! Ground truth by brute force and exact linear algebra.
//!
//! Nothing here uses the closed forms. Graphs are built from the
//! definition by searching annihilators, and spectra are checked through
//! exact ranks and characteristic polynomials.

mod matrix;

pub use matrix::{
    charpoly_exact, det_exact, nullity_exact, rank_exact, ExactMatrix, MAX_CHARPOLY_DIM,
    MAX_ELIMINATION_DIM,
};

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjacency::PartSizeMultiset;
use crate::error::{Error, Result};
use crate::graph::EdgeSet;
use crate::laplacian::IntegerSpectrum;
use crate::poly::IntPolynomial;
use crate::ring::{ProductRing, RingElement};

/// Brute-force graph together with the ring element behind each vertex.
#[derive(Debug, Clone)]
pub struct BruteForceGraph {
    pub vertices: Vec<RingElement>,
    pub edges: EdgeSet,
}

/// Builds the graph straight from the definition: `x ~ y` iff some nonzero
/// `r` with `rx = 0` and nonzero `s` with `sy = 0` satisfy `rs = 0`.
pub fn bruteforce_wgamma(ring: &ProductRing) -> BruteForceGraph {
    let all: Vec<RingElement> = ring.elements().collect();
    let vertices: Vec<RingElement> = all
        .iter()
        .filter(|x| !ring.is_zero(x) && !ring.is_unit(x))
        .cloned()
        .collect();
    // annihilators found by scanning the whole ring
    let anns: Vec<Vec<&RingElement>> = vertices
        .iter()
        .map(|x| {
            all.iter()
                .filter(|r| !ring.is_zero(r) && ring.is_zero(&ring.mul(r, x)))
                .collect()
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let linked = anns[i]
                .iter()
                .any(|r| anns[j].iter().any(|s| ring.is_zero(&ring.mul(r, s))));
            if linked {
                edges.push((i, j));
            }
        }
    }
    let edges = EdgeSet::new(vertices.len(), edges).expect("indices are in range");
    BruteForceGraph { vertices, edges }
}

/// The same construction on plain integers modulo `n`, with no use of the
/// product decomposition. Vertices are the nonzero non-units in increasing
/// order.
pub fn bruteforce_wgamma_mod(n: u64) -> Result<(Vec<u64>, EdgeSet)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("modulus {n} is below 2")));
    }
    if n > crate::ring::DEFAULT_ELEMENT_CAP {
        return Err(Error::CapExceeded {
            order: n.to_string(),
            cap: crate::ring::DEFAULT_ELEMENT_CAP,
        });
    }
    let is_unit = |x: u64| (1..n).any(|y| x * y % n == 1);
    let vertices: Vec<u64> = (1..n).filter(|&x| !is_unit(x)).collect();
    let anns: Vec<Vec<u64>> = vertices
        .iter()
        .map(|&x| (1..n).filter(|&r| r * x % n == 0).collect())
        .collect();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if anns[i]
                .iter()
                .any(|r| anns[j].iter().any(|s| r * s % n == 0))
            {
                edges.push((i, j));
            }
        }
    }
    Ok((vertices.clone(), EdgeSet::new(vertices.len(), edges)?))
}

pub fn adjacency_matrix(e: &EdgeSet) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(e.vertex_count());
    for &(i, j) in e.edges() {
        m.set(i, j, BigInt::from(1));
        m.set(j, i, BigInt::from(1));
    }
    m
}

pub fn laplacian_matrix(e: &EdgeSet) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(e.vertex_count());
    for &(i, j) in e.edges() {
        m.set(i, j, BigInt::from(-1));
        m.set(j, i, BigInt::from(-1));
    }
    for (i, d) in e.degrees().into_iter().enumerate() {
        m.set(i, i, BigInt::from(d));
    }
    m
}

/// One named check inside a [`VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Certifies a claimed Laplacian spectrum: every claimed eigenvalue has the
/// claimed exact nullity, multiplicities sum to the vertex count, and the
/// trace agrees.
pub fn verify_laplacian_spectrum(
    e: &EdgeSet,
    claimed: &IntegerSpectrum,
) -> Result<VerificationReport> {
    let n = e.vertex_count();
    let l = laplacian_matrix(e);
    let mut report = VerificationReport::default();
    for (lambda, m) in claimed.pairs() {
        let shifted = l.plus_scalar(&-BigInt::from(lambda.clone()));
        let nullity = nullity_exact(&shifted)?;
        report.push(
            format!("nullity at {lambda}"),
            BigUint::from(nullity) == *m,
            format!("claimed {m}, found {nullity}"),
        );
    }
    let total = claimed.total_multiplicity();
    report.push(
        "multiplicities sum to N",
        total == BigUint::from(n),
        format!("sum {total}, N = {n}"),
    );
    let trace = l.trace();
    let claimed_trace = BigInt::from(claimed.trace());
    report.push(
        "trace",
        trace == claimed_trace,
        format!("trace(L) = {trace}, claimed {claimed_trace}"),
    );
    Ok(report)
}

/// Checks the integer part of an adjacency spectrum: nullity of `A` is
/// `zero_nullity` and nullity of `A + Q I` is one less than the number of
/// parts of size `Q`.
pub fn verify_adjacency_multiplicities(
    e: &EdgeSet,
    zero_nullity: &BigUint,
    parts: &PartSizeMultiset,
) -> Result<VerificationReport> {
    let a = adjacency_matrix(e);
    let mut report = VerificationReport::default();
    let nullity = nullity_exact(&a)?;
    report.push(
        "nullity of A",
        BigUint::from(nullity) == *zero_nullity,
        format!("claimed {zero_nullity}, found {nullity}"),
    );
    for (q, r) in parts.distinct.iter().zip(&parts.mults) {
        let nullity = nullity_exact(&a.plus_scalar(&BigInt::from(q.clone())))?;
        let expected = r - 1u32;
        report.push(
            format!("nullity of A + {q}I"),
            BigUint::from(nullity) == expected,
            format!("claimed {expected}, found {nullity}"),
        );
    }
    Ok(report)
}

/// Matrix-Tree theorem: determinant of the Laplacian without row and
/// column 0.
pub fn spanning_trees_oracle(e: &EdgeSet) -> Result<BigUint> {
    match e.vertex_count() {
        0 => Err(Error::EmptyGraph),
        1 => Ok(BigUint::from(1u32)),
        _ => {
            let d = det_exact(&laplacian_matrix(e).minor(0, 0))?;
            debug_assert!(!d.is_negative());
            Ok(d.magnitude().clone())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoharReport {
    pub direct: IntPolynomial,
    pub formula: IntPolynomial,
}

impl MoharReport {
    pub fn passed(&self) -> bool {
        self.direct == self.formula
    }
}

/// Laplacian characteristic polynomial of `G1 ∨ G2`, computed directly and
/// through the join formula.
pub fn mohar_join_check(e1: &EdgeSet, e2: &EdgeSet) -> Result<MoharReport> {
    let (n1, n2) = (e1.vertex_count(), e2.vertex_count());
    if n1 == 0 || n2 == 0 {
        return Err(Error::EmptyGraph);
    }
    let direct = charpoly_exact(&laplacian_matrix(&e1.join(e2)))?;
    let (b1, b2) = (BigInt::from(n1), BigInt::from(n2));
    let mu1 = charpoly_exact(&laplacian_matrix(e1))?.substitute_shift(&b2);
    let mu2 = charpoly_exact(&laplacian_matrix(e2))?.substitute_shift(&b1);
    let numerator = IntPolynomial::x() * IntPolynomial::linear(&(&b1 + &b2)) * mu1 * mu2;
    let denominator = IntPolynomial::linear(&b1) * IntPolynomial::linear(&b2);
    let formula = numerator.div_exact(&denominator)?;
    Ok(MoharReport { direct, formula })
}

/// Each pair of vertices joined with probability one half.
pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> EdgeSet {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.random_bool(0.5))
        .collect();
    EdgeSet::new(n, edges).expect("indices are in range")
}

/// Reproducible graph pairs with 1..=max_vertices vertices each.
pub fn mohar_sample(seed: u64, pairs: usize, max_vertices: usize) -> Vec<(EdgeSet, EdgeSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..pairs)
        .map(|_| {
            let n1 = rng.random_range(1..=max_vertices);
            let n2 = rng.random_range(1..=max_vertices);
            (random_graph(n1, &mut rng), random_graph(n2, &mut rng))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::LocalRingSpec;
    use num_traits::Zero;

    fn ring(specs: &[LocalRingSpec]) -> ProductRing {
        ProductRing::new(specs).unwrap()
    }

    fn z(p: u64, a: u32) -> LocalRingSpec {
        LocalRingSpec::zmod(p, a)
    }

    #[test]
    fn z6_is_a_path() {
        let g = bruteforce_wgamma(&ring(&[z(2, 1), z(3, 1)]));
        let labels: Vec<String> = g.vertices.iter().map(ToString::to_string).collect();
        assert_eq!(labels, ["(0,1)", "(0,2)", "(1,0)"]);
        assert_eq!(g.edges.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn z8_is_a_triangle_and_z4_a_point() {
        let g = bruteforce_wgamma(&ring(&[z(2, 3)]));
        assert_eq!(g.edges, EdgeSet::complete(3));
        let g = bruteforce_wgamma(&ring(&[z(2, 2)]));
        assert_eq!(g.edges, EdgeSet::edgeless(1));
    }

    #[test]
    fn mod_builder_matches_product_builder_on_z12() {
        let (vs, e) = bruteforce_wgamma_mod(12).unwrap();
        assert_eq!(vs, [2, 3, 4, 6, 8, 9, 10]);
        assert_eq!(e.vertex_count(), 7);
        let g = bruteforce_wgamma(&ring(&[z(2, 2), z(3, 1)]));
        assert_eq!(g.edges.edge_count(), e.edge_count());
    }

    #[test]
    fn matrices_of_small_graphs() {
        let l = laplacian_matrix(&EdgeSet::complete(2));
        assert_eq!(
            l,
            ExactMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap()
        );
        assert_eq!(
            laplacian_matrix(&EdgeSet::edgeless(3)),
            ExactMatrix::zeros(3)
        );
        let p3 = EdgeSet::new(3, [(0, 1), (1, 2)]).unwrap();
        let l = laplacian_matrix(&p3);
        let degrees: Vec<i64> = (0..3).map(|i| l.get(i, i).try_into().unwrap()).collect();
        assert_eq!(degrees, [1, 2, 1]);
        assert!(l.is_symmetric() && adjacency_matrix(&p3).is_symmetric());
    }

    #[test]
    fn z12_laplacian_charpoly() {
        let (_, e) = bruteforce_wgamma_mod(12).unwrap();
        let p = charpoly_exact(&laplacian_matrix(&e)).unwrap();
        let five = BigInt::from(5);
        let seven = BigInt::from(7);
        let zero = BigInt::zero();
        let expected = IntPolynomial::from_roots([(&zero, 1), (&five, 1), (&seven, 5)]);
        assert_eq!(p, expected);
    }

    #[test]
    fn spectrum_verification() {
        let (_, z12) = bruteforce_wgamma_mod(12).unwrap();
        let claimed = IntegerSpectrum::from_u64(&[(0, 1), (5, 1), (7, 5)]);
        assert!(verify_laplacian_spectrum(&z12, &claimed).unwrap().passed());

        let (_, z6) = bruteforce_wgamma_mod(6).unwrap();
        let good = IntegerSpectrum::from_u64(&[(0, 1), (1, 1), (3, 1)]);
        assert!(verify_laplacian_spectrum(&z6, &good).unwrap().passed());
        let bad = IntegerSpectrum::from_u64(&[(0, 1), (2, 1), (3, 1)]);
        let report = verify_laplacian_spectrum(&z6, &bad).unwrap();
        assert!(!report.passed());
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"nullity at 2"), "{failed:?}");
    }

    #[test]
    fn spanning_tree_examples() {
        let (_, z12) = bruteforce_wgamma_mod(12).unwrap();
        assert_eq!(
            spanning_trees_oracle(&z12).unwrap(),
            BigUint::from(12005u32)
        );
        let p3 = EdgeSet::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(spanning_trees_oracle(&p3).unwrap(), BigUint::from(1u32));
        let (_, z15) = bruteforce_wgamma_mod(15).unwrap();
        assert_eq!(spanning_trees_oracle(&z15).unwrap(), BigUint::from(32u32));
        assert_eq!(
            spanning_trees_oracle(&EdgeSet::edgeless(1)).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            spanning_trees_oracle(&EdgeSet::edgeless(0)),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn mohar_examples() {
        let k1 = EdgeSet::edgeless(1);
        let r = mohar_join_check(&k1, &k1).unwrap();
        assert!(r.passed());
        assert_eq!(r.direct, IntPolynomial::from_i64(&[0, -2, 1]));

        let r = mohar_join_check(&EdgeSet::edgeless(2), &k1).unwrap();
        assert!(r.passed());
        assert_eq!(r.direct, IntPolynomial::from_i64(&[0, 3, -4, 1]));

        let r = mohar_join_check(&EdgeSet::edgeless(2), &EdgeSet::edgeless(4)).unwrap();
        assert!(r.passed());
        let (zero, two, four, six) = (
            BigInt::zero(),
            BigInt::from(2),
            BigInt::from(4),
            BigInt::from(6),
        );
        let expected = IntPolynomial::from_roots([(&zero, 1), (&six, 1), (&four, 1), (&two, 3)]);
        assert_eq!(r.direct, expected);
    }

    #[test]
    fn seeded_sample_is_reproducible() {
        let a = mohar_sample(7, 10, 6);
        let b = mohar_sample(7, 10, 6);
        assert_eq!(a.len(), 10);
        for ((x1, y1), (x2, y2)) in a.iter().zip(&b) {
            assert_eq!(x1, x2);
            assert_eq!(y1, y2);
            assert!((1..=6).contains(&x1.vertex_count()));
        }
    }
}
