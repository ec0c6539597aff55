//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always show up in `cargo test` output.

mod common;

use std::time::{Duration, Instant};

use clap::Parser;
use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use wgamma_cli::{run, Cli};
use wgamma_core::adjacency::{
    adjacency_spectrum, distinct_adjacency_bound, part_size_multiset, SecularEquation,
};
use wgamma_core::arith::is_prime;
use wgamma_core::graph::EdgeSet;
use wgamma_core::laplacian::{
    algebraic_connectivity, distinct_eigenvalue_count, multipartite_laplacian_charpoly,
    spanning_tree_count, wgamma_laplacian_spectrum, zn_report, IntegerSpectrum,
};
use wgamma_core::oracle::{
    adjacency_matrix, bruteforce_wgamma, charpoly_exact, laplacian_matrix, mohar_join_check,
    mohar_sample, nullity_exact, spanning_trees_oracle, verify_adjacency_multiplicities,
    verify_laplacian_spectrum, ExactMatrix,
};
use wgamma_core::poly::IntPolynomial;
use wgamma_core::ring::{LocalRingSpec, ProductRing};
use wgamma_core::structure::{
    classify_vertices, multipartite_shape, structural_edge_set, MultipartiteShape, PartStructure,
};
use wgamma_core::Error;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> wgamma_cli::Outcome {
    let mut argv = vec!["wgamma"];
    argv.extend_from_slice(args);
    run(&Cli::try_parse_from(argv).expect("valid arguments"))
}

fn zn(n: u64) -> Vec<LocalRingSpec> {
    LocalRingSpec::crt_factors(n).unwrap()
}

fn structure(specs: &[LocalRingSpec]) -> PartStructure {
    PartStructure::from_specs(specs).unwrap()
}

fn composites(limit: u64) -> Vec<u64> {
    (4..=limit).filter(|&n| !is_prime(n)).collect()
}

/// Rows of the small-cases table: n, N, |F|, |V_0|, spectrum.
const SMALL_CASES: [(u64, &str, &str, &str, &str); 5] = [
    (6, "3", "2", "0", "{0, 1^(1), 3^(1)}"),
    (10, "5", "2", "0", "{0, 1^(3), 5^(1)}"),
    (12, "7", "1", "5", "{0, 5^(1), 7^(5)}"),
    (15, "6", "2", "0", "{0, 2^(3), 4^(1), 6^(1)}"),
    (30, "21", "3", "7", "{0, 13^(7), 17^(3), 19^(1), 21^(9)}"),
];

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    for (n, big_n, f, v0, spectrum) in SMALL_CASES {
        let out = cli(&["laplacian", &format!("Z/{n}")]);
        ensure(out.code == 0, || format!("Z/{n}: exit {}", out.code))?;
        let want = format!("N = {big_n}, |F| = {f}, |V_0| = {v0}");
        ensure(out.stdout.lines().any(|l| l == want), || {
            format!("Z/{n}: missing '{want}'")
        })?;
        let want = format!("laplacian spectrum: {spectrum}");
        ensure(out.stdout.lines().any(|l| l == want), || {
            format!("Z/{n}: missing '{want}'")
        })?;
    }
    let table = cli(&["table", "6", "30", "--only", "6,10,12,15,30"]);
    let rows: Vec<Vec<String>> = table
        .stdout
        .lines()
        .skip(1)
        .map(|l| {
            let (head, spectrum) = l.split_at(l.find('{').unwrap());
            let mut cells: Vec<String> = head.split_whitespace().map(String::from).collect();
            cells.push(spectrum.to_string());
            cells
        })
        .collect();
    let want: Vec<Vec<String>> = SMALL_CASES
        .iter()
        .map(|(n, a, b, c, d)| {
            vec![
                n.to_string(),
                a.to_string(),
                b.to_string(),
                c.to_string(),
                d.to_string(),
            ]
        })
        .collect();
    ensure(rows == want, || format!("table rows {rows:?}"))?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(1), || format!("took {t:?}"))?;
    Ok(format!("5 rows match, {t:.2?}"))
}

fn worked_examples() -> Outcome {
    let start = Instant::now();
    let z105 = IntegerSpectrum::from_u64(&[(0, 1), (32, 23), (44, 11), (48, 7), (56, 14)]);
    ensure(zn_report(105).unwrap().spectrum == z105, || {
        "Z/105 via totients".into()
    })?;
    ensure(
        wgamma_laplacian_spectrum(&structure(&zn(105))) == z105,
        || "Z/105 via parts".into(),
    )?;

    let ps = structure(&zn(15));
    ensure(
        multipartite_shape(&ps) == MultipartiteShape::from_sizes(&[2, 4]).unwrap(),
        || "Z/15 is not K(2,4)".into(),
    )?;
    let mut expanded = Vec::new();
    for (l, m) in wgamma_laplacian_spectrum(&ps).pairs() {
        for _ in 0..m.to_usize().unwrap() {
            expanded.push(l.to_u64().unwrap());
        }
    }
    ensure(expanded == [0, 2, 2, 2, 4, 6], || {
        format!("Z/15 spectrum {expanded:?}")
    })?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(1), || format!("took {t:?}"))?;
    Ok(format!("Z/105 and Z/15 exact, {t:.2?}"))
}

fn spanning_trees() -> Outcome {
    let start = Instant::now();
    let specs = zn(12);
    let closed = spanning_tree_count(&structure(&specs)).unwrap();
    let g = bruteforce_wgamma(&ProductRing::new(&specs).unwrap());
    let oracle = spanning_trees_oracle(&g.edges).unwrap();
    ensure(closed == BigUint::from(12005u32), || {
        format!("closed form {closed}")
    })?;
    ensure(oracle == closed, || format!("determinant {oracle}"))?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(1), || format!("took {t:?}"))?;
    Ok(format!("12005 both ways, {t:.2?}"))
}

/// Brute force against the multipartite graph, and the closed-form
/// spectrum certified by nullities.
fn certify_structure(specs: &[LocalRingSpec]) -> Result<(PartStructure, EdgeSet), String> {
    let name = common::name(specs);
    let ring = ProductRing::new(specs).map_err(|e| format!("{name}: {e}"))?;
    let g = bruteforce_wgamma(&ring);
    let ps = structure(specs);
    let structural = structural_edge_set(&multipartite_shape(&ps), &classify_vertices(&ring))
        .map_err(|e| format!("{name}: {e}"))?;
    ensure(structural == g.edges, || {
        format!("{name}: edge sets differ")
    })?;
    let report = verify_laplacian_spectrum(&g.edges, &wgamma_laplacian_spectrum(&ps))
        .map_err(|e| format!("{name}: {e}"))?;
    ensure(report.passed(), || {
        format!("{name}: {:?}", report.failures().collect::<Vec<_>>())
    })?;
    Ok((ps, g.edges))
}

fn zn_sweep() -> Outcome {
    let start = Instant::now();
    let ns = composites(60);
    for &n in &ns {
        certify_structure(&zn(n))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(120), || format!("took {t:?}"))?;
    Ok(format!("{} composite n certified, {t:.2?}", ns.len()))
}

/// Catalog rings with a nonempty graph.
fn catalog() -> Vec<Vec<LocalRingSpec>> {
    common::catalog(100)
        .into_iter()
        .filter(|s| PartStructure::from_specs(s).is_ok())
        .collect()
}

fn general_sweep() -> Outcome {
    let start = Instant::now();
    let rings = catalog();
    for specs in &rings {
        let name = common::name(specs);
        let (ps, edges) = certify_structure(specs)?;
        let direct =
            charpoly_exact(&laplacian_matrix(&edges)).map_err(|e| format!("{name}: {e}"))?;
        let shape = multipartite_shape(&ps);
        ensure(
            direct == multipartite_laplacian_charpoly(&shape).unwrap(),
            || format!("{name}: Laplacian polynomial differs"),
        )?;
        let linear = wgamma_laplacian_spectrum(&ps).to_polynomial().unwrap();
        ensure(direct == linear, || {
            format!("{name}: not a product of integer linear factors")
        })?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(300), || format!("took {t:?}"))?;
    Ok(format!("{} catalog rings, {t:.2?}", rings.len()))
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-9
}

fn adjacency_examples() -> Outcome {
    let start = Instant::now();
    let root2 = 2f64.sqrt();
    let a = adjacency_spectrum(&structure(&zn(6)), 1e-12).unwrap();
    let roots: Vec<f64> = a.secular_roots.iter().map(|r| r.value).collect();
    ensure(
        roots.len() == 2 && close(roots[0], -root2) && close(roots[1], root2),
        || format!("Z/6 roots {roots:?}"),
    )?;

    let specs = zn(12);
    let a = adjacency_spectrum(&structure(&specs), 1e-12).unwrap();
    let roots: Vec<f64> = a.secular_roots.iter().map(|r| r.value).collect();
    let s14 = 14f64.sqrt();
    ensure(
        roots.len() == 2 && close(roots[0], 2.0 - s14) && close(roots[1], 2.0 + s14),
        || format!("Z/12 roots {roots:?}"),
    )?;
    ensure(a.zero_mult == BigUint::from(1u32), || {
        "Z/12 zero multiplicity".into()
    })?;
    ensure(
        a.negatives == [(BigInt::from(-1), BigUint::from(4u32))],
        || format!("Z/12 negatives {:?}", a.negatives),
    )?;
    let g = bruteforce_wgamma(&ProductRing::new(&specs).unwrap());
    let adj = adjacency_matrix(&g.edges);
    let n0 = nullity_exact(&adj).unwrap();
    let n1 = nullity_exact(&adj.plus_scalar(&BigInt::from(1))).unwrap();
    ensure(n0 == 1 && n1 == 4, || format!("Z/12 nullities {n0}, {n1}"))?;

    let specs = vec![LocalRingSpec::zmod(3, 1), LocalRingSpec::zmod(3, 1)];
    let ps = structure(&specs);
    let a = adjacency_spectrum(&ps, 1e-12).unwrap();
    ensure(a.zero_mult == BigUint::from(2u32), || {
        "Z/3 x Z/3 zero multiplicity".into()
    })?;
    ensure(
        a.negatives == [(BigInt::from(-2), BigUint::from(1u32))],
        || format!("Z/3 x Z/3 negatives {:?}", a.negatives),
    )?;
    let ms = part_size_multiset(&multipartite_shape(&ps));
    let p = SecularEquation::new(&ms).poly().clone();
    ensure(p == IntPolynomial::from_i64(&[-2, 1]), || {
        format!("Z/3 x Z/3 secular polynomial {p}")
    })?;
    let r = &a.secular_roots[0];
    let two = num_rational::BigRational::from_integer(BigInt::from(2));
    ensure(
        a.secular_roots.len() == 1 && r.lo <= two && two <= r.hi,
        || "Z/3 x Z/3 root bracket misses 2".into(),
    )?;
    let g = bruteforce_wgamma(&ProductRing::new(&specs).unwrap());
    let direct = charpoly_exact(&adjacency_matrix(&g.edges)).unwrap();
    ensure(direct == IntPolynomial::from_i64(&[0, 0, -4, 0, 1]), || {
        format!("Z/3 x Z/3 adjacency polynomial {direct}")
    })?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(1), || format!("took {t:?}"))?;
    Ok(format!("Z/6, Z/12, Z/3 x Z/3 match, {t:.2?}"))
}

fn adjacency_factorization() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for specs in catalog() {
        let ps = structure(&specs);
        if *ps.total() > BigUint::from(40u32) {
            continue;
        }
        let name = common::name(&specs);
        let g = bruteforce_wgamma(&ProductRing::new(&specs).unwrap());
        let direct = charpoly_exact(&adjacency_matrix(&g.edges)).unwrap();
        let ms = part_size_multiset(&multipartite_shape(&ps));
        let a = adjacency_spectrum(&ps, 1e-12).unwrap();
        let secular = SecularEquation::new(&ms);
        let mut factored = IntPolynomial::monomial(a.zero_mult.to_usize().unwrap());
        for (q, r) in ms.distinct.iter().zip(&ms.mults) {
            let shift = IntPolynomial::linear(&-BigInt::from(q.clone()));
            factored = factored * shift.pow((r - 1u32).to_usize().unwrap());
        }
        factored = factored * secular.poly().clone();
        ensure(direct == factored, || {
            format!("{name}: factorization differs")
        })?;
        for q in &ms.distinct {
            let v = secular.poly().eval(&-BigInt::from(q.clone()));
            ensure(!v.is_zero(), || format!("{name}: P vanishes at -{q}"))?;
        }
        checked += 1;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(300), || format!("took {t:?}"))?;
    Ok(format!("{checked} rings with N <= 40, {t:.2?}"))
}

fn mohar_identity() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for (a, b) in mohar_sample(20240601, 50, 6) {
        let r = mohar_join_check(&a, &b).unwrap();
        ensure(r.passed(), || {
            format!("sampled pair differs: {} vs {}", r.direct, r.formula)
        })?;
        count += 1;
    }
    for n1 in 1..=8 {
        for n2 in 1..=8 {
            for g1 in [EdgeSet::edgeless(n1), EdgeSet::complete(n1)] {
                for g2 in [EdgeSet::edgeless(n2), EdgeSet::complete(n2)] {
                    let r = mohar_join_check(&g1, &g2).unwrap();
                    ensure(r.passed(), || {
                        format!("{n1} and {n2} vertices: formula differs")
                    })?;
                    count += 1;
                }
            }
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("{count} joins exact, {t:.2?}"))
}

fn bounds() -> Outcome {
    let mut rings: Vec<Vec<LocalRingSpec>> = composites(60).into_iter().map(zn).collect();
    rings.extend(catalog());
    for specs in &rings {
        let name = common::name(specs);
        let ps = structure(specs);
        let spectrum = wgamma_laplacian_spectrum(&ps);
        let f = ps.field_indices().len();
        ensure(distinct_eigenvalue_count(&spectrum) <= f + 2, || {
            format!("{name}: Laplacian bound")
        })?;

        let a = adjacency_spectrum(&ps, 1e-12).unwrap();
        let ms = part_size_multiset(&multipartite_shape(&ps));
        ensure(a.distinct_count() <= distinct_adjacency_bound(&ms), || {
            format!("{name}: adjacency bound")
        })?;

        let g = bruteforce_wgamma(&ProductRing::new(specs).unwrap());
        let report = verify_adjacency_multiplicities(&g.edges, &a.nullity(), &ms).unwrap();
        ensure(report.passed(), || {
            format!("{name}: adjacency multiplicities")
        })?;

        if *ps.total() >= BigUint::from(2u32) {
            let mu2 = algebraic_connectivity(&ps).unwrap();
            let verified = verify_laplacian_spectrum(&g.edges, &spectrum).unwrap();
            ensure(verified.passed(), || {
                format!("{name}: spectrum not verified")
            })?;
            ensure(Some(&mu2) == spectrum.smallest_positive(), || {
                format!("{name}: mu2 {mu2}")
            })?;
        }
    }
    let pinned = [(12, 5u32), (30, 13)];
    for (n, want) in pinned {
        let mu2 = algebraic_connectivity(&structure(&zn(n))).unwrap();
        ensure(mu2 == BigUint::from(want), || format!("Z/{n}: mu2 {mu2}"))?;
    }
    Ok(format!(
        "{} rings within bounds, mu2 pinned for Z/12 and Z/30",
        rings.len()
    ))
}

fn degenerate_cases() -> Outcome {
    for p in (2..=60u64).filter(|&n| is_prime(n)) {
        ensure(zn_report(p) == Err(Error::PrimeInput(p)), || {
            format!("Z/{p} not refused")
        })?;
        ensure(
            PartStructure::from_specs(&zn(p)).unwrap_err() == Error::EmptyGraph,
            || format!("Z/{p}: no empty-graph signal"),
        )?;
        let out = cli(&["laplacian", &format!("Z/{p}")]);
        ensure(out.code == 1, || format!("Z/{p}: exit {}", out.code))?;
    }
    let single = [
        LocalRingSpec::zmod(2, 2),
        LocalRingSpec::poly_quotient(2, vec![0, 0, 1]),
    ];
    for spec in single {
        let ps = structure(std::slice::from_ref(&spec));
        let spectrum = wgamma_laplacian_spectrum(&ps);
        ensure(spectrum == IntegerSpectrum::from_u64(&[(0, 1)]), || {
            format!("{spec}: {spectrum}")
        })?;
        ensure(
            spanning_tree_count(&ps).unwrap() == BigUint::from(1u32),
            || format!("{spec}: tau"),
        )?;
        ensure(
            matches!(algebraic_connectivity(&ps), Err(Error::TooFewVertices(_))),
            || format!("{spec}: mu2 should be undefined"),
        )?;
        let a = adjacency_spectrum(&ps, 1e-12).unwrap();
        let roots = &a.secular_roots;
        let only_zero = a.dimension() == BigUint::from(1u32)
            && a.negatives.is_empty()
            && roots.len() == 1
            && roots[0].is_exact()
            && roots[0].lo.is_zero();
        ensure(only_zero, || {
            format!("{spec}: adjacency spectrum is not {{0}}")
        })?;
        let g = bruteforce_wgamma(&ProductRing::new(std::slice::from_ref(&spec)).unwrap());
        ensure(adjacency_matrix(&g.edges) == ExactMatrix::zeros(1), || {
            format!("{spec}: oracle")
        })?;
    }
    Ok("primes 2..59 refused; Z/4 and F2[x]/(x^2) give {0}, tau = 1".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("small-cases table reproduction", table_reproduction),
        ("worked examples Z/105 and Z/15", worked_examples),
        ("spanning trees of Z/12", spanning_trees),
        ("oracle sweep over composite n <= 60", zn_sweep),
        ("general-ring sweep", general_sweep),
        ("adjacency examples", adjacency_examples),
        ("adjacency factorization", adjacency_factorization),
        ("join formula", mohar_identity),
        ("bound properties", bounds),
        ("degenerate handling", degenerate_cases),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
