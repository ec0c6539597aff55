#![allow(dead_code)]

use wgamma_core::ring::LocalRingSpec;

/// The eight small local rings the sweeps draw factors from.
pub fn base_factors() -> Vec<LocalRingSpec> {
    vec![
        LocalRingSpec::zmod(2, 1),
        LocalRingSpec::zmod(3, 1),
        LocalRingSpec::zmod(5, 1),
        LocalRingSpec::zmod(2, 2),
        LocalRingSpec::zmod(2, 3),
        LocalRingSpec::zmod(3, 2),
        LocalRingSpec::galois_field(4).unwrap(),
        LocalRingSpec::poly_quotient(2, vec![0, 0, 1]),
    ]
}

fn order(spec: &LocalRingSpec) -> u64 {
    u64::try_from(spec.order()).unwrap()
}

/// Every ordered product of one to three base factors with at most
/// `max_order` elements.
pub fn catalog(max_order: u64) -> Vec<Vec<LocalRingSpec>> {
    let base = base_factors();
    let mut out: Vec<Vec<LocalRingSpec>> = Vec::new();
    let mut frontier: Vec<Vec<LocalRingSpec>> = vec![vec![]];
    for _ in 0..3 {
        let mut next = Vec::new();
        for prefix in &frontier {
            let so_far: u64 = prefix.iter().map(order).product();
            for f in &base {
                if so_far * order(f) <= max_order {
                    let mut v = prefix.clone();
                    v.push(f.clone());
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub fn name(specs: &[LocalRingSpec]) -> String {
    specs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" x ")
}
