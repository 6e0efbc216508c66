//! The glued CND function on a graph product and its Hilbert-space
//! embedding.
//!
//! The target space is the orthogonal sum of one copy of `H_v` per coset
//! `t = g G(st(v))`. A syllable `g_i` at position `i` of a reduced word lands
//! in the summand indexed by the coset of its prefix `g_1 ... g_{i-1}` in
//! `G(st(v_i))`. Summands are keyed by [`CosetKey`], and vectors only record
//! which vertex-group element sits in each summand; inner products come from
//! [`GroupKind::inner`](crate::group::GroupKind::inner).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::GraphSpec;
use crate::group::VertexElement;
use crate::linalg::Matrix;
use crate::word::NormalForm;

/// Index of one orthogonal summand: the coset `prefix · G(st(vertex))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetKey {
    pub prefix: NormalForm,
    pub vertex: usize,
}

/// `R(g)` as a finitely supported map from summands to vertex-group
/// elements. Identity entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AbstractVector {
    entries: BTreeMap<CosetKey, VertexElement>,
}

impl AbstractVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &BTreeMap<CosetKey, VertexElement> {
        &self.entries
    }

    pub fn get(&self, key: &CosetKey) -> Option<&VertexElement> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `R(g)`. Fails with [`Error::Consistency`] if two syllables land in the
/// same summand, which reducedness rules out.
pub fn embed(graph: &GraphSpec, g: &NormalForm) -> Result<AbstractVector> {
    let syllables = g.syllables();
    let mut entries = BTreeMap::new();
    for (i, s) in syllables.iter().enumerate() {
        let prefix = graph.normalize(&syllables[..i])?;
        let key = CosetKey {
            prefix: graph.coset_representative(&prefix, s.vertex)?,
            vertex: s.vertex,
        };
        if entries.insert(key, s.element.clone()).is_some() {
            return Err(Error::Consistency(format!(
                "two syllables of {g} share a summand at position {i}"
            )));
        }
    }
    Ok(AbstractVector { entries })
}

/// `<x, y>`: summands present on only one side contribute nothing.
pub fn vec_inner(graph: &GraphSpec, x: &AbstractVector, y: &AbstractVector) -> Result<f64> {
    let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    let mut total = 0.0;
    for (key, a) in &small.entries {
        if let Some(b) = large.entries.get(key) {
            total += graph.group(key.vertex)?.inner(a, b)?;
        }
    }
    Ok(total)
}

/// `k(g, h) = ||R(g) - R(h)||^2`.
pub fn embedding_kernel(graph: &GraphSpec, g: &NormalForm, h: &NormalForm) -> Result<f64> {
    let x = embed(graph, g)?;
    let y = embed(graph, h)?;
    Ok(vec_inner(graph, &x, &x)? - 2.0 * vec_inner(graph, &x, &y)? + vec_inner(graph, &y, &y)?)
}

fn phi_tilde_exact(g: &NormalForm) -> u64 {
    g.syllables().iter().map(|s| s.element.weight()).sum()
}

/// `phi~(g)`: sum of the vertex functions over the syllables of `g`.
pub fn phi_tilde(g: &NormalForm) -> f64 {
    phi_tilde_exact(g) as f64
}

/// `phi_Gamma = l_r + phi~`.
pub fn phi_gamma(g: &NormalForm) -> f64 {
    (g.len() as u64 + phi_tilde_exact(g)) as f64
}

/// The functions on `G(Gamma)` that get certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Glued {
    PhiTilde,
    LengthOnly,
    PhiGamma,
}

impl Glued {
    pub const ALL: [Glued; 3] = [Glued::PhiGamma, Glued::PhiTilde, Glued::LengthOnly];

    pub fn evaluate(self, g: &NormalForm) -> f64 {
        match self {
            Glued::PhiTilde => phi_tilde(g),
            Glued::LengthOnly => g.len() as f64,
            Glued::PhiGamma => phi_gamma(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Glued::PhiTilde => "phi_tilde",
            Glued::LengthOnly => "reduced_length",
            Glued::PhiGamma => "phi_gamma",
        }
    }
}

/// Entrywise `exp(-t K)`.
pub fn schoenberg_transform(k: &Matrix, t: f64) -> Result<Matrix> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "Schoenberg parameter must be positive, got {t}"
        )));
    }
    Ok(k.map(|x| (-t * x).exp()))
}
