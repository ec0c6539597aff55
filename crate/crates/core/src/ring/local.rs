use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Pow;

use super::fp_poly::{self, FpPoly};
use super::{FactorSummary, DEFAULT_ELEMENT_CAP};
use crate::arith;
use crate::error::{Error, Result};

/// Description of a supported finite local ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LocalRingSpec {
    /// `Z/p^a`
    ZModPK { p: u64, a: u32 },
    /// `GF(p^d)` realized as `F_p[x]/(modulus)`; `modulus` is monic of
    /// degree `d`, ascending coefficients.
    GaloisField { p: u64, d: u32, modulus: FpPoly },
    /// `F_p[x]/(g)` for a monic `g`; must be local.
    PolyQuotient { p: u64, g: FpPoly },
}

impl LocalRingSpec {
    pub fn zmod(p: u64, a: u32) -> Self {
        LocalRingSpec::ZModPK { p, a }
    }

    /// `GF(q)` with the lexicographically first irreducible modulus.
    pub fn galois_field(q: u64) -> Result<Self> {
        let (p, d) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Ok(LocalRingSpec::GaloisField {
            p,
            d,
            modulus: fp_poly::first_irreducible(d as usize, p),
        })
    }

    pub fn poly_quotient(p: u64, g: FpPoly) -> Self {
        LocalRingSpec::PolyQuotient { p, g }
    }

    /// The local factors `Z/p_i^{a_i}` of `Z/n`, primes ascending.
    pub fn crt_factors(n: u64) -> Result<Vec<Self>> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("Z/{n} is not a supported ring")));
        }
        Ok(arith::factorize(n)
            .into_iter()
            .map(|(p, a)| LocalRingSpec::zmod(p, a))
            .collect())
    }

    pub fn characteristic_prime(&self) -> u64 {
        match *self {
            LocalRingSpec::ZModPK { p, .. }
            | LocalRingSpec::GaloisField { p, .. }
            | LocalRingSpec::PolyQuotient { p, .. } => p,
        }
    }

    /// Exponent `e` with `order = p^e`.
    fn order_exponent(&self) -> u32 {
        match self {
            LocalRingSpec::ZModPK { a, .. } => *a,
            LocalRingSpec::GaloisField { d, .. } => *d,
            LocalRingSpec::PolyQuotient { g, .. } => fp_poly::degree(g).unwrap_or(0) as u32,
        }
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.characteristic_prime()).pow(self.order_exponent())
    }

    /// Checks primality, monicity, irreducibility of a field modulus.
    ///
    /// Locality of a polynomial quotient is checked by [`Self::summary`]
    /// and by [`LocalRing::build`].
    pub fn validate(&self) -> Result<()> {
        let p = self.characteristic_prime();
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        match self {
            LocalRingSpec::ZModPK { a, .. } => {
                if *a == 0 {
                    return Err(Error::InvalidSpec("exponent must be at least 1".into()));
                }
            }
            LocalRingSpec::GaloisField { d, modulus, .. } => {
                if *d == 0 {
                    return Err(Error::InvalidSpec("field degree must be at least 1".into()));
                }
                check_monic(modulus, p, Some(*d as usize))?;
                if !fp_poly::is_irreducible(modulus, p) {
                    return Err(Error::ReducibleModulus(fp_poly::format(modulus)));
                }
            }
            LocalRingSpec::PolyQuotient { g, .. } => {
                check_monic(g, p, None)?;
            }
        }
        Ok(())
    }

    /// Order, unit count and field flag, derived without enumerating
    /// elements.
    pub fn summary(&self) -> Result<FactorSummary> {
        self.validate()?;
        let p = BigUint::from(self.characteristic_prime());
        let e = self.order_exponent();
        let order = p.clone().pow(e);
        let (unit_count, is_field) = match self {
            LocalRingSpec::ZModPK { a, .. } => (&order - p.pow(*a - 1), *a == 1),
            LocalRingSpec::GaloisField { .. } => (&order - 1u32, true),
            LocalRingSpec::PolyQuotient { p: pp, g } => {
                let (h, mult) = fp_poly::irreducible_power(g, *pp)
                    .ok_or_else(|| Error::NotLocal(self.to_string()))?;
                let dh = fp_poly::degree(&h).unwrap() as u32;
                (&order - p.pow(e - dh), mult == 1)
            }
        };
        Ok(FactorSummary {
            order,
            unit_count,
            is_field,
        })
    }
}

fn check_monic(g: &[u64], p: u64, expected_degree: Option<usize>) -> Result<()> {
    if g.iter().any(|&c| c >= p) {
        return Err(Error::InvalidSpec(format!(
            "coefficients must be reduced mod {p}"
        )));
    }
    let d = fp_poly::degree(g);
    if d.is_none() || d == Some(0) {
        return Err(Error::InvalidSpec(
            "modulus must have degree at least 1".into(),
        ));
    }
    if !fp_poly::is_monic(g) || g.len() != d.unwrap() + 1 {
        return Err(Error::InvalidSpec(format!(
            "modulus {} is not monic",
            fp_poly::format(g)
        )));
    }
    if let Some(e) = expected_degree {
        if d != Some(e) {
            return Err(Error::InvalidSpec(format!(
                "modulus {} does not have degree {e}",
                fp_poly::format(g)
            )));
        }
    }
    Ok(())
}

impl fmt::Display for LocalRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalRingSpec::ZModPK { p, a: 1 } => write!(f, "Z/{p}"),
            LocalRingSpec::ZModPK { p, a } => write!(f, "Z/{p}^{a}"),
            LocalRingSpec::GaloisField { p, d, modulus } => {
                if *modulus == fp_poly::first_irreducible(*d as usize, *p) {
                    write!(f, "GF({})", p.pow(*d))
                } else {
                    write!(f, "F{p}[x]/({})", fp_poly::format(modulus))
                }
            }
            LocalRingSpec::PolyQuotient { p, g } => {
                write!(f, "F{p}[x]/({})", fp_poly::format(g))
            }
        }
    }
}

/// Arithmetic on element codes.
#[derive(Debug, Clone)]
enum Arith {
    Modular {
        m: u32,
    },
    /// Codes are base-`p` digit strings of the coefficients, constant
    /// coefficient least significant.
    Quotient {
        p: u32,
        modulus: FpPoly,
        degree: usize,
    },
}

impl Arith {
    fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Arith::Modular { m } => ((a as u64 + b as u64) % *m as u64) as u32,
            Arith::Quotient { p, degree, .. } => {
                let (mut a, mut b) = (a, b);
                let (mut out, mut place) = (0u32, 1u32);
                for _ in 0..*degree {
                    out += ((a % p + b % p) % p) * place;
                    a /= p;
                    b /= p;
                    place = place.wrapping_mul(*p);
                }
                out
            }
        }
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Arith::Modular { m } => ((a as u64 * b as u64) % *m as u64) as u32,
            Arith::Quotient { p, modulus, degree } => {
                let p64 = *p as u64;
                let prod = fp_poly::mul(&decode(a, *p, *degree), &decode(b, *p, *degree), p64);
                encode(&fp_poly::rem_monic(&prod, modulus, p64), *p)
            }
        }
    }
}

fn decode(mut code: u32, p: u32, degree: usize) -> FpPoly {
    let mut out = Vec::with_capacity(degree);
    for _ in 0..degree {
        out.push((code % p) as u64);
        code /= p;
    }
    fp_poly::trim(&mut out);
    out
}

fn encode(poly: &[u64], p: u32) -> u32 {
    poly.iter().rev().fold(0u32, |acc, &c| acc * p + c as u32)
}

/// A finite local ring with elements encoded as `0..order`.
///
/// Code `0` is zero and code `1` is one. All derived sets are computed
/// exhaustively at construction and the ring is immutable afterwards.
#[derive(Debug, Clone)]
pub struct LocalRing {
    spec: LocalRingSpec,
    order: u32,
    arith: Arith,
    is_unit: Vec<bool>,
    units: Vec<u32>,
    maximal_ideal: Vec<u32>,
    /// `m, m^2, ..., m^t` with `m^t = {0}`.
    ideal_powers: Vec<Vec<u32>>,
}

impl LocalRing {
    pub fn build(spec: &LocalRingSpec) -> Result<Self> {
        Self::build_with_cap(spec, DEFAULT_ELEMENT_CAP)
    }

    pub fn build_with_cap(spec: &LocalRingSpec, cap: u64) -> Result<Self> {
        spec.validate()?;
        let big_order = spec.order();
        if big_order > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                order: big_order.to_string(),
                cap,
            });
        }
        let order: u32 = big_order.try_into().map_err(|_| Error::CapExceeded {
            order: spec.order().to_string(),
            cap,
        })?;
        let p = spec.characteristic_prime() as u32;
        let arith = match spec {
            LocalRingSpec::ZModPK { .. } => Arith::Modular { m: order },
            LocalRingSpec::GaloisField { modulus, .. } => Arith::Quotient {
                p,
                modulus: modulus.clone(),
                degree: modulus.len() - 1,
            },
            LocalRingSpec::PolyQuotient { g, .. } => Arith::Quotient {
                p,
                modulus: g.clone(),
                degree: g.len() - 1,
            },
        };
        let add = |a, b| arith.add(a, b);
        let mul = |a, b| arith.mul(a, b);

        let is_unit: Vec<bool> = (0..order)
            .map(|x| (0..order).any(|y| mul(x, y) == 1))
            .collect();
        if !is_local(order, add, mul, &is_unit) {
            return Err(Error::NotLocal(spec.to_string()));
        }
        let units = (0..order).filter(|&x| is_unit[x as usize]).collect();
        let maximal_ideal: Vec<u32> = (0..order).filter(|&x| !is_unit[x as usize]).collect();
        let ideal_powers = ideal_powers(add, mul, &maximal_ideal)?;
        Ok(LocalRing {
            spec: spec.clone(),
            order,
            arith,
            is_unit,
            units,
            maximal_ideal,
            ideal_powers,
        })
    }

    pub fn spec(&self) -> &LocalRingSpec {
        &self.spec
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.arith.add(a, b)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.arith.mul(a, b)
    }

    pub fn is_unit(&self, x: u32) -> bool {
        self.is_unit[x as usize]
    }

    pub fn units(&self) -> &[u32] {
        &self.units
    }

    /// Non-units, which form the maximal ideal (zero included).
    pub fn maximal_ideal(&self) -> &[u32] {
        &self.maximal_ideal
    }

    pub fn is_field(&self) -> bool {
        self.nilpotency_index() == 1
    }

    /// Smallest `t >= 1` with `m^t = 0`.
    pub fn nilpotency_index(&self) -> u32 {
        self.ideal_powers.len() as u32
    }

    /// `m^k` for `k >= 1`.
    pub fn ideal_power(&self, k: u32) -> &[u32] {
        let idx = (k.max(1) as usize - 1).min(self.ideal_powers.len() - 1);
        &self.ideal_powers[idx]
    }

    /// `{r : r x = 0}` within this factor.
    pub fn annihilator(&self, x: u32) -> Vec<u32> {
        (0..self.order).filter(|&r| self.mul(r, x) == 0).collect()
    }

    /// A nonzero element of `m^{t-1}`, which squares to zero and kills
    /// every zero-divisor.
    pub fn socle_witness(&self) -> Result<u32> {
        let t = self.nilpotency_index();
        if t == 1 {
            return Err(Error::IsField);
        }
        let u = *self
            .ideal_power(t - 1)
            .iter()
            .find(|&&u| u != 0)
            .expect("m^(t-1) is nonzero by minimality of t");
        assert_eq!(self.mul(u, u), 0, "socle witness must square to zero");
        assert!(
            self.maximal_ideal.iter().all(|&z| self.mul(u, z) == 0),
            "socle witness must annihilate the maximal ideal"
        );
        Ok(u)
    }

    pub fn summary(&self) -> FactorSummary {
        FactorSummary {
            order: BigUint::from(self.order),
            unit_count: BigUint::from(self.units.len()),
            is_field: self.is_field(),
        }
    }

    /// Human-readable form of an element code.
    pub fn format_element(&self, x: u32) -> String {
        match &self.arith {
            Arith::Modular { .. } => x.to_string(),
            Arith::Quotient { p, degree, .. } => fp_poly::format(&decode(x, *p, *degree)),
        }
    }
}

/// True iff the non-units are closed under addition and under
/// multiplication by arbitrary elements.
pub fn is_local(
    order: u32,
    add: impl Fn(u32, u32) -> u32,
    mul: impl Fn(u32, u32) -> u32,
    is_unit: &[bool],
) -> bool {
    let non_units: Vec<u32> = (0..order).filter(|&x| !is_unit[x as usize]).collect();
    if non_units.len() == order as usize {
        // the zero ring has no maximal ideal
        return false;
    }
    for &a in &non_units {
        for &b in &non_units {
            if is_unit[add(a, b) as usize] {
                return false;
            }
        }
        for r in 0..order {
            if is_unit[mul(a, r) as usize] {
                return false;
            }
        }
    }
    true
}

/// Nilpotency index of the non-units of a ring given by its tables.
pub fn nilpotency_index(
    order: u32,
    add: impl Fn(u32, u32) -> u32 + Copy,
    mul: impl Fn(u32, u32) -> u32 + Copy,
    is_unit: &[bool],
) -> Result<u32> {
    if !is_local(order, add, mul, is_unit) {
        return Err(Error::NotLocal(format!("ring of order {order}")));
    }
    let ideal: Vec<u32> = (0..order).filter(|&x| !is_unit[x as usize]).collect();
    Ok(ideal_powers(add, mul, &ideal)?.len() as u32)
}

/// `P_1 = m`, `P_{k+1}` = additive closure of `{u v : u in P_k, v in m}`,
/// stopping at the first `P_t = {0}`.
fn ideal_powers(
    add: impl Fn(u32, u32) -> u32,
    mul: impl Fn(u32, u32) -> u32,
    ideal: &[u32],
) -> Result<Vec<Vec<u32>>> {
    let mut powers = vec![ideal.to_vec()];
    loop {
        let last = powers.last().unwrap();
        if last.iter().all(|&x| x == 0) {
            return Ok(powers);
        }
        let products: BTreeSet<u32> = last
            .iter()
            .flat_map(|&u| ideal.iter().map(move |&v| (u, v)))
            .map(|(u, v)| mul(u, v))
            .filter(|&x| x != 0)
            .collect();
        let next = additive_closure(&add, &products);
        if next.len() == last.len() {
            // a power stabilized above zero: the ideal is not nilpotent
            return Err(Error::NotLocal("maximal ideal is not nilpotent".into()));
        }
        powers.push(next);
    }
}

fn additive_closure(add: impl Fn(u32, u32) -> u32, gens: &BTreeSet<u32>) -> Vec<u32> {
    let mut seen: BTreeSet<u32> = BTreeSet::from([0]);
    let mut stack = vec![0u32];
    while let Some(e) = stack.pop() {
        for &g in gens {
            let s = add(e, g);
            if seen.insert(s) {
                stack.push(s);
            }
        }
    }
    seen.into_iter().collect()
}
