use std::fmt;

use num_bigint::BigUint;

use super::{FactorSummary, LocalRing, LocalRingSpec, DEFAULT_ELEMENT_CAP};
use crate::error::{Error, Result};

/// An element of a product ring as its tuple of factor codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    pub coords: Vec<u32>,
}

impl RingElement {
    pub fn new(coords: Vec<u32>) -> Self {
        RingElement { coords }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finite product of local rings with coordinate-wise arithmetic.
///
/// Elements are enumerated lexicographically by coordinates, first
/// coordinate most significant.
#[derive(Debug, Clone)]
pub struct ProductRing {
    factors: Vec<LocalRing>,
    order: u32,
}

impl ProductRing {
    pub fn new(specs: &[LocalRingSpec]) -> Result<Self> {
        Self::with_cap(specs, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(specs: &[LocalRingSpec], cap: u64) -> Result<Self> {
        if specs.is_empty() {
            return Err(Error::InvalidSpec(
                "a product needs at least one factor".into(),
            ));
        }
        for spec in specs {
            spec.validate()?;
        }
        let order: BigUint = specs.iter().map(LocalRingSpec::order).product();
        if order > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                order: order.to_string(),
                cap,
            });
        }
        let factors = specs
            .iter()
            .map(|s| LocalRing::build_with_cap(s, cap))
            .collect::<Result<Vec<_>>>()?;
        let order = factors.iter().map(LocalRing::order).product();
        Ok(ProductRing { factors, order })
    }

    pub fn factors(&self) -> &[LocalRing] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn specs(&self) -> Vec<LocalRingSpec> {
        self.factors.iter().map(|f| f.spec().clone()).collect()
    }

    pub fn summaries(&self) -> Vec<FactorSummary> {
        self.factors.iter().map(LocalRing::summary).collect()
    }

    /// The element at position `index` of the lexicographic enumeration.
    pub fn element(&self, mut index: u32) -> RingElement {
        let mut coords = vec![0u32; self.factors.len()];
        for (c, f) in coords.iter_mut().zip(&self.factors).rev() {
            *c = index % f.order();
            index /= f.order();
        }
        RingElement { coords }
    }

    pub fn index_of(&self, x: &RingElement) -> u32 {
        x.coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.order() + c)
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.order).map(|i| self.element(i))
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        x.coords.len() == self.factors.len()
            && x.coords
                .iter()
                .zip(&self.factors)
                .all(|(&c, f)| c < f.order())
    }

    pub fn zero(&self) -> RingElement {
        RingElement::new(vec![0; self.factors.len()])
    }

    pub fn one(&self) -> RingElement {
        RingElement::new(vec![1; self.factors.len()])
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.zip_with(a, b, LocalRing::add)
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.zip_with(a, b, LocalRing::mul)
    }

    fn zip_with(
        &self,
        a: &RingElement,
        b: &RingElement,
        op: impl Fn(&LocalRing, u32, u32) -> u32,
    ) -> RingElement {
        RingElement::new(
            self.factors
                .iter()
                .zip(a.coords.iter().zip(&b.coords))
                .map(|(f, (&x, &y))| op(f, x, y))
                .collect(),
        )
    }

    pub fn is_zero(&self, x: &RingElement) -> bool {
        x.coords.iter().all(|&c| c == 0)
    }

    /// A tuple is a unit iff every coordinate is.
    pub fn is_unit(&self, x: &RingElement) -> bool {
        x.coords
            .iter()
            .zip(&self.factors)
            .all(|(&c, f)| f.is_unit(c))
    }

    pub fn unit_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| f.units().len() as u64)
            .product()
    }

    /// `Ann(x)` as the Cartesian product of the coordinate annihilators,
    /// in lexicographic order. Always contains zero.
    pub fn annihilator(&self, x: &RingElement) -> Vec<RingElement> {
        let per_coord: Vec<Vec<u32>> = self
            .factors
            .iter()
            .zip(&x.coords)
            .map(|(f, &c)| f.annihilator(c))
            .collect();
        let mut out = vec![Vec::with_capacity(per_coord.len())];
        for choices in &per_coord {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    choices.iter().map(move |&c| {
                        let mut next = prefix.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        out.into_iter().map(RingElement::new).collect()
    }

    /// Nonzero non-units in lexicographic order. Since every factor is
    /// local these are exactly the nonzero zero-divisors.
    pub fn zero_divisor_vertices(&self) -> Vec<RingElement> {
        self.elements()
            .filter(|x| !self.is_zero(x) && !self.is_unit(x))
            .collect()
    }

    /// Tuple display using each factor's element notation, e.g. `(x+1,2)`.
    pub fn format_element(&self, x: &RingElement) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .zip(&x.coords)
            .map(|(f, &c)| f.format_element(c))
            .collect();
        format!("({})", parts.join(","))
    }
}
