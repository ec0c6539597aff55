//! JSON and text rendering of closed-form results.

use num_traits::Zero;
use serde::Serialize;
use wgamma_core::adjacency::{adjacency_spectrum, AdjacencySpectrum, SecularRoot};
use wgamma_core::laplacian::{
    algebraic_connectivity, spanning_tree_count, wgamma_laplacian_spectrum, IntegerSpectrum,
};
use wgamma_core::ring::LocalRingSpec;
use wgamma_core::structure::{multipartite_shape, PartStructure};
use wgamma_core::{Error, Result};

use crate::parse::format_ring_spec;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SecularJson {
    pub value: f64,
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct AdjacencyJson {
    pub zero_mult: String,
    /// `[eigenvalue, multiplicity]`
    pub negatives: Vec<[String; 2]>,
    pub secular: Vec<SecularJson>,
}

impl From<&AdjacencySpectrum> for AdjacencyJson {
    fn from(a: &AdjacencySpectrum) -> Self {
        AdjacencyJson {
            zero_mult: a.zero_mult.to_string(),
            negatives: a
                .negatives
                .iter()
                .map(|(v, m)| [v.to_string(), m.to_string()])
                .collect(),
            secular: a
                .secular_roots
                .iter()
                .map(|r: &SecularRoot| SecularJson {
                    value: r.value,
                    lo: r.lo.to_string(),
                    hi: r.hi.to_string(),
                })
                .collect(),
        }
    }
}

/// The stable report schema shared by every command. Big integers are
/// decimal strings; factor indices are one-based.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Report {
    pub ring: String,
    #[serde(rename = "N")]
    pub n: String,
    #[serde(rename = "F")]
    pub f: Vec<usize>,
    /// `[factor index, |V_k|]`
    pub part_sizes: Vec<(usize, String)>,
    pub v0: String,
    pub laplacian: Vec<[String; 2]>,
    pub mu2: Option<String>,
    pub tau: Option<String>,
    pub adjacency: Option<AdjacencyJson>,
    pub verified: Option<bool>,
}

/// Everything the closed forms say about one ring.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub specs: Vec<LocalRingSpec>,
    pub structure: PartStructure,
    pub spectrum: IntegerSpectrum,
    pub mu2: Option<num_bigint::BigUint>,
    /// `Err` when the count is too large to expand.
    pub tau: std::result::Result<num_bigint::BigUint, Error>,
    pub adjacency: Option<AdjacencySpectrum>,
}

impl Analysis {
    pub fn new(specs: &[LocalRingSpec], adjacency_tol: Option<f64>) -> Result<Self> {
        let structure = PartStructure::from_specs(specs)?;
        let spectrum = wgamma_laplacian_spectrum(&structure);
        let mu2 = match algebraic_connectivity(&structure) {
            Ok(v) => Some(v),
            Err(Error::TooFewVertices(_)) => None,
            Err(e) => return Err(e),
        };
        let tau = spanning_tree_count(&structure);
        if let Err(e) = &tau {
            if !matches!(e, Error::TooLarge { .. }) {
                return Err(e.clone());
            }
        }
        let adjacency = adjacency_tol
            .map(|tol| adjacency_spectrum(&structure, tol))
            .transpose()?;
        Ok(Analysis {
            specs: specs.to_vec(),
            structure,
            spectrum,
            mu2,
            tau,
            adjacency,
        })
    }

    pub fn ring_name(&self) -> String {
        format_ring_spec(&self.specs)
    }

    pub fn report(&self, verified: Option<bool>) -> Report {
        let ps = &self.structure;
        Report {
            ring: self.ring_name(),
            n: ps.total().to_string(),
            f: ps.field_indices().iter().map(|k| k + 1).collect(),
            part_sizes: ps
                .part_sizes()
                .iter()
                .map(|(k, v)| (k + 1, v.to_string()))
                .collect(),
            v0: ps.v0_size().to_string(),
            laplacian: self
                .spectrum
                .pairs()
                .iter()
                .map(|(l, m)| [l.to_string(), m.to_string()])
                .collect(),
            mu2: self.mu2.as_ref().map(ToString::to_string),
            tau: self.tau.as_ref().ok().map(ToString::to_string),
            adjacency: self.adjacency.as_ref().map(AdjacencyJson::from),
            verified,
        }
    }

    /// `N = 7, |F| = 1, |V_0| = 5`
    pub fn summary_line(&self) -> String {
        let ps = &self.structure;
        format!(
            "N = {}, |F| = {}, |V_0| = {}",
            ps.total(),
            ps.field_indices().len(),
            ps.v0_size()
        )
    }

    pub fn structure_text(&self) -> String {
        let ps = &self.structure;
        let mut out = format!("ring: {}\n{}\n", self.ring_name(), self.summary_line());
        let f: Vec<String> = ps
            .field_indices()
            .iter()
            .map(|k| (k + 1).to_string())
            .collect();
        out += &format!("F = {{{}}}\n", f.join(", "));
        for (k, size) in ps.part_sizes() {
            out += &format!("|V_{}| = {size}\n", k + 1);
        }
        out += &format!("shape: {}\n", multipartite_shape(ps));
        out
    }

    pub fn tau_text(&self) -> String {
        match &self.tau {
            Ok(t) => t.to_string(),
            Err(e) => format!("not expanded ({e})"),
        }
    }

    pub fn laplacian_text(&self) -> String {
        let mu2 = self
            .mu2
            .as_ref()
            .map_or_else(|| "undefined (N = 1)".to_string(), ToString::to_string);
        format!(
            "ring: {}\n{}\nlaplacian spectrum: {}\nalgebraic connectivity: {mu2}\nspanning trees: {}\n",
            self.ring_name(),
            self.summary_line(),
            self.spectrum,
            self.tau_text()
        )
    }

    pub fn adjacency_text(&self) -> String {
        let Some(a) = &self.adjacency else {
            return String::new();
        };
        let mut out = format!(
            "ring: {}\nN = {}\n",
            self.ring_name(),
            self.structure.total()
        );
        if !a.zero_mult.is_zero() {
            out += &format!("eigenvalue 0: multiplicity {}\n", a.zero_mult);
        }
        for (v, m) in &a.negatives {
            out += &format!("eigenvalue {v}: multiplicity {m}\n");
        }
        out += "secular roots:\n";
        for r in &a.secular_roots {
            if r.is_exact() {
                out += &format!("  {} (exact)\n", r.lo);
            } else {
                let (lo, hi) = r.bounds_f64();
                out += &format!("  {:.12} in [{lo:.15}, {hi:.15}]\n", r.value);
            }
        }
        out
    }
}

/// `serde_json` rendering with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}
