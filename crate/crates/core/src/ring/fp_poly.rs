//! Polynomials over the prime field `Z/p`, as ascending coefficient vectors.
//!
//! Desk-scale helpers only: irreducibility is decided by exhaustive trial
//! division.

pub type FpPoly = Vec<u64>;

pub fn trim(a: &mut FpPoly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Reduces every coefficient mod `p` and strips trailing zeros.
pub fn reduce(a: &[i64], p: u64) -> FpPoly {
    let p = p as i64;
    let mut out: FpPoly = a.iter().map(|&c| c.rem_euclid(p) as u64).collect();
    trim(&mut out);
    out
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn is_monic(a: &[u64]) -> bool {
    matches!(degree(a), Some(d) if a[d] == 1)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub fn rem_monic(a: &[u64], m: &[u64], p: u64) -> FpPoly {
    let dm = degree(m).expect("modulus must be nonzero");
    debug_assert_eq!(m[dm], 1);
    let mut r: FpPoly = a.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = r[dr];
        let shift = dr - dm;
        for (j, &mc) in m[..=dm].iter().enumerate() {
            let sub = c * mc % p;
            r[shift + j] = (r[shift + j] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

/// Quotient and remainder by a monic divisor.
fn div_rem_monic(a: &[u64], m: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let dm = degree(m).expect("divisor must be nonzero");
    let mut r: FpPoly = a.to_vec();
    trim(&mut r);
    let mut q = vec![0u64; r.len().saturating_sub(dm)];
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = r[dr];
        let shift = dr - dm;
        q[shift] = c;
        for (j, &mc) in m[..=dm].iter().enumerate() {
            let sub = c * mc % p;
            r[shift + j] = (r[shift + j] + p - sub) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// All monic polynomials of degree `d`, in lexicographic order with the
/// constant coefficient compared first.
pub fn monic_polys(d: usize, p: u64) -> impl Iterator<Item = FpPoly> {
    let count = p.pow(d as u32);
    (0..count).map(move |mut code| {
        let mut poly = vec![0u64; d + 1];
        poly[d] = 1;
        // c_0 is the most significant digit of the enumeration code
        for i in (0..d).rev() {
            poly[i] = code % p;
            code /= p;
        }
        poly
    })
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(g: &[u64], p: u64) -> bool {
    let Some(d) = degree(g) else { return false };
    if d == 0 {
        return false;
    }
    let monic = normalize_monic(g, p);
    for k in 1..=d / 2 {
        for h in monic_polys(k, p) {
            if rem_monic(&monic, &h, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically first monic irreducible polynomial of degree `d`.
pub fn first_irreducible(d: usize, p: u64) -> FpPoly {
    monic_polys(d, p)
        .find(|g| is_irreducible(g, p))
        .expect("irreducible polynomials exist in every degree")
}

/// If the monic polynomial `g` is a power `h^e` of one monic irreducible
/// `h`, returns `(h, e)`.
pub fn irreducible_power(g: &[u64], p: u64) -> Option<(FpPoly, usize)> {
    let d = degree(g)?;
    if d == 0 {
        return None;
    }
    // the first divisor found in increasing degree is irreducible
    let h = (1..=d)
        .flat_map(|k| monic_polys(k, p))
        .find(|h| rem_monic(g, h, p).is_empty())?;
    let mut rest: FpPoly = g.to_vec();
    let mut e = 0;
    loop {
        let (q, r) = div_rem_monic(&rest, &h, p);
        if !r.is_empty() {
            return None;
        }
        e += 1;
        rest = q;
        if rest == [1] {
            return Some((h, e));
        }
    }
}

fn normalize_monic(g: &[u64], p: u64) -> FpPoly {
    let mut g: FpPoly = g.to_vec();
    trim(&mut g);
    let lead = *g.last().unwrap();
    if lead == 1 {
        return g;
    }
    let inv = (1..p).find(|&i| i * lead % p == 1).unwrap();
    g.iter().map(|&c| c * inv % p).collect()
}

/// Compact form such as `x^2+x+1` or `2x+1`.
pub fn format(a: &[u64]) -> String {
    let Some(d) = degree(a) else {
        return "0".into();
    };
    let mut terms = Vec::new();
    for i in (0..=d).rev() {
        let c = a[i];
        if c == 0 {
            continue;
        }
        let coeff = if c == 1 && i > 0 {
            String::new()
        } else {
            c.to_string()
        };
        terms.push(match i {
            0 => coeff,
            1 => format!("{coeff}x"),
            _ => format!("{coeff}x^{i}"),
        });
    }
    terms.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order_is_constant_first() {
        let all: Vec<_> = monic_polys(2, 2).collect();
        assert_eq!(
            all,
            vec![vec![0, 0, 1], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 1]]
        );
    }

    #[test]
    fn first_irreducibles() {
        assert_eq!(first_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(first_irreducible(3, 2), vec![1, 0, 1, 1]);
        assert_eq!(first_irreducible(2, 3), vec![1, 0, 1]);
        assert_eq!(first_irreducible(1, 5), vec![0, 1]);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2)); // (x+1)^2
        assert!(!is_irreducible(&[0, 0, 1], 3));
        assert!(is_irreducible(&[2, 0, 1], 5)); // x^2 + 2, 2 is a non-residue mod 5
        assert!(!is_irreducible(&[1, 0, 1], 5)); // 4^2 = -1 mod 5
    }

    #[test]
    fn irreducible_powers() {
        assert_eq!(irreducible_power(&[0, 0, 1], 2), Some((vec![0, 1], 2)));
        assert_eq!(irreducible_power(&[1, 0, 1], 2), Some((vec![1, 1], 2)));
        assert_eq!(irreducible_power(&[1, 1, 1], 2), Some((vec![1, 1, 1], 1)));
        // x(x+1) has two distinct factors
        assert_eq!(irreducible_power(&[0, 1, 1], 2), None);
    }

    #[test]
    fn formatting() {
        assert_eq!(format(&[1, 1, 1]), "x^2+x+1");
        assert_eq!(format(&[0, 0, 1]), "x^2");
        assert_eq!(format(&[1, 2]), "2x+1");
        assert_eq!(format(&[]), "0");
    }

    #[test]
    fn remainder() {
        // x^3 mod (x^2+x+1) over F2 is 1
        assert_eq!(rem_monic(&[0, 0, 0, 1], &[1, 1, 1], 2), vec![1]);
        assert_eq!(reduce(&[-1, 0, 1], 3), vec![2, 0, 1]);
    }
}
