//! Syllable words over a graph product and their canonical normal forms.
//!
//! Normalization runs in two phases. The first reduces the word: syllables
//! are inserted left to right, and each new syllable merges with the last
//! same-vertex syllable that can be shuffled next to it (all syllables in
//! between lie in its link). A merge that produces the identity deletes the
//! syllable and triggers a full rescan, since the deletion can bring new
//! pairs together. The result is reduced, and any two reduced words for the
//! same element differ only by shuffles.
//!
//! The second phase picks one representative from that shuffle class: the
//! lexicographically least linearization, with syllables compared by vertex
//! id. At every step it emits the smallest-vertex syllable that commutes with
//! everything still in front of it. The set of such syllables depends only on
//! the shuffle class, so equal elements get byte-identical normal forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::GraphSpec;
use crate::group::VertexElement;

/// One letter `g_i` of a word, with `g_i` in the group at `vertex`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub vertex: usize,
    pub element: VertexElement,
}

impl Syllable {
    pub fn new(vertex: usize, element: VertexElement) -> Self {
        Syllable { vertex, element }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}:{}", self.vertex, self.element)
    }
}

/// A canonical reduced word. Two normal forms over the same graph are equal
/// iff they represent the same group element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm(Vec<Syllable>);

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm(Vec::new())
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    /// Reduced length `l_r`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_syllables(self) -> Vec<Syllable> {
        self.0
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_word(&self.0).fmt(f)
    }
}

/// Renders a word as `v0:3; v2:x1 x2^-1`; the empty word is `e`.
pub fn format_word(word: &[Syllable]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(Syllable::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// `l_r(g)`.
pub fn reduced_length(g: &NormalForm) -> usize {
    g.len()
}

impl GraphSpec {
    fn check_syllable(&self, s: &Syllable) -> Result<()> {
        self.group(s.vertex)?.check(&s.element)
    }

    /// Swaps positions `i` and `i + 1`, which must sit on adjacent vertices.
    pub fn shuffle(&self, word: &[Syllable], i: usize) -> Result<Vec<Syllable>> {
        if i + 1 >= word.len() {
            return Err(Error::ShuffleIndex {
                index: i,
                len: word.len(),
            });
        }
        let (a, b) = (word[i].vertex, word[i + 1].vertex);
        self.group(a)?;
        self.group(b)?;
        if !self.adjacent(a, b) {
            return Err(Error::NotCommuting(a, b));
        }
        let mut out = word.to_vec();
        out.swap(i, i + 1);
        Ok(out)
    }

    /// Index of the syllable a new `vertex` syllable appended to `word` would
    /// merge with, if any.
    fn merge_partner(&self, word: &[Syllable], vertex: usize) -> Option<usize> {
        for (j, s) in word.iter().enumerate().rev() {
            if s.vertex == vertex {
                return Some(j);
            }
            if !self.adjacent(s.vertex, vertex) {
                return None;
            }
        }
        None
    }

    /// Reduces a word without reordering beyond what merges require.
    fn reduce(&self, word: Vec<Syllable>) -> Result<Vec<Syllable>> {
        let mut pending = word;
        loop {
            let mut out: Vec<Syllable> = Vec::with_capacity(pending.len());
            let mut cancelled = false;
            for s in pending {
                if s.element.is_identity() {
                    continue;
                }
                match self.merge_partner(&out, s.vertex) {
                    Some(j) => {
                        let product = self.groups()[s.vertex].multiply(&out[j].element, &s.element)?;
                        if product.is_identity() {
                            out.remove(j);
                            cancelled = true;
                        } else {
                            out[j].element = product;
                        }
                    }
                    None => out.push(s),
                }
            }
            if !cancelled {
                return Ok(out);
            }
            pending = out;
        }
    }

    /// Lexicographically least shuffle of a reduced word.
    fn canonical_order(&self, mut word: Vec<Syllable>) -> Vec<Syllable> {
        let mut out = Vec::with_capacity(word.len());
        let mut blockers: Vec<usize> = Vec::new();
        while !word.is_empty() {
            let mut best: Option<usize> = None;
            blockers.clear();
            for (i, s) in word.iter().enumerate() {
                let free = blockers.iter().all(|&b| self.adjacent(b, s.vertex));
                if free && best.is_none_or(|b| s.vertex < word[b].vertex) {
                    best = Some(i);
                }
                if !blockers.contains(&s.vertex) {
                    blockers.push(s.vertex);
                }
            }
            let pick = best.expect("the first syllable is always free");
            out.push(word.remove(pick));
        }
        out
    }

    /// Canonical reduced form of an arbitrary word. Identity syllables are
    /// dropped.
    pub fn normalize(&self, word: &[Syllable]) -> Result<NormalForm> {
        for s in word {
            self.check_syllable(s)?;
        }
        let reduced = self.reduce(word.to_vec())?;
        Ok(NormalForm(self.canonical_order(reduced)))
    }

    pub fn multiply(&self, g: &NormalForm, h: &NormalForm) -> Result<NormalForm> {
        let mut word = Vec::with_capacity(g.len() + h.len());
        word.extend_from_slice(&g.0);
        word.extend_from_slice(&h.0);
        self.normalize(&word)
    }

    pub fn inverse(&self, g: &NormalForm) -> Result<NormalForm> {
        let word = g
            .0
            .iter()
            .rev()
            .map(|s| Ok(Syllable::new(s.vertex, self.group(s.vertex)?.inverse(&s.element)?)))
            .collect::<Result<Vec<_>>>()?;
        self.normalize(&word)
    }

    /// True iff the word has no identity syllables and every pair of
    /// same-vertex syllables is separated by a syllable outside the star of
    /// that vertex.
    pub fn is_reduced(&self, word: &[Syllable]) -> bool {
        if word
            .iter()
            .any(|s| s.vertex >= self.vertex_count() || s.element.is_identity())
        {
            return false;
        }
        for (i, s) in word.iter().enumerate() {
            for t in &word[i + 1..] {
                if t.vertex == s.vertex {
                    // Nothing outside st(v) between them.
                    return false;
                }
                if !self.in_star(s.vertex, t.vertex) {
                    break;
                }
            }
        }
        true
    }

    /// Canonical representative of the coset `g G(st(v))`: strips every
    /// syllable from `st(v)` that can be shuffled to the end, until none is
    /// left.
    pub fn coset_representative(&self, g: &NormalForm, v: usize) -> Result<NormalForm> {
        self.group(v)?;
        let mut word = g.0.clone();
        while let Some(i) = (0..word.len()).rev().find(|&i| {
            let u = word[i].vertex;
            self.in_star(v, u) && word[i + 1..].iter().all(|s| self.adjacent(s.vertex, u))
        }) {
            word.remove(i);
        }
        self.normalize(&word)
    }

    /// Parses `v0:3; v2:x1 x2^-1`. The empty string and `e` denote the
    /// identity.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Syllable>> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "e" {
            return Ok(Vec::new());
        }
        let mut word = Vec::new();
        let mut offset = 0;
        for part in text.split(';') {
            let lead = offset + (part.len() - part.trim_start().len());
            let body = part.trim();
            if body.is_empty() {
                return Err(Error::parse(lead, "empty syllable"));
            }
            let (head, element) = body
                .split_once(':')
                .ok_or_else(|| Error::parse(lead, format!("expected `v<id>:<element>`, got `{body}`")))?;
            let vertex: usize = head
                .trim()
                .strip_prefix('v')
                .and_then(|id| id.parse().ok())
                .ok_or_else(|| Error::parse(lead, format!("expected vertex like v0, got `{head}`")))?;
            let group = self.group(vertex)?;
            let element = group.parse_element(element, lead + head.len() + 1)?;
            word.push(Syllable::new(vertex, element));
            offset += part.len() + 1;
        }
        Ok(word)
    }
}
