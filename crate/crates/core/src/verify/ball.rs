use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::GraphSpec;
use crate::word::{NormalForm, Syllable};

/// Word-metric ball around the identity, with respect to the union of the
/// vertex generating sets.
#[derive(Clone, Debug)]
pub struct Ball {
    pub radius: usize,
    pub cap: usize,
    /// Sorted by (word length, canonical text).
    pub elements: Vec<NormalForm>,
    pub lengths: Vec<usize>,
    /// A geodesic spelling of each element as generator syllables.
    pub spellings: Vec<Vec<Syllable>>,
    /// Set when the cap stopped the enumeration before the radius did.
    pub truncated: bool,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Indices of the elements at word length exactly `r`.
    pub fn sphere(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.lengths[i] == r)
    }

    /// Largest radius whose sphere is known to be fully enumerated.
    pub fn complete_radius(&self) -> usize {
        if self.truncated {
            self.lengths.last().map_or(0, |&r| r.saturating_sub(1))
        } else {
            self.radius
        }
    }
}

/// All generators of all vertex groups, as single-syllable words.
pub fn generator_syllables(graph: &GraphSpec) -> Vec<Syllable> {
    graph
        .groups()
        .iter()
        .enumerate()
        .flat_map(|(v, g)| g.generators().into_iter().map(move |a| Syllable::new(v, a)))
        .collect()
}

/// Breadth-first closure of the identity under right multiplication by
/// generators, stopping at `radius` or once `cap` elements are known.
pub fn enumerate_ball(graph: &GraphSpec, radius: usize, cap: usize) -> Result<Ball> {
    if cap == 0 {
        return Err(Error::InvalidParameter("ball cap must be at least 1".into()));
    }
    let generators = generator_syllables(graph);
    let mut seen: HashSet<NormalForm> = HashSet::from([NormalForm::identity()]);
    let mut entries: Vec<(NormalForm, usize, Vec<Syllable>)> =
        vec![(NormalForm::identity(), 0, Vec::new())];
    let mut frontier = vec![0usize];
    let mut truncated = false;

    'layers: for r in 1..=radius {
        let mut next = Vec::new();
        for &parent in &frontier {
            for s in &generators {
                let mut word = entries[parent].0.syllables().to_vec();
                word.push(s.clone());
                let g = graph.normalize(&word)?;
                if seen.contains(&g) {
                    continue;
                }
                if entries.len() == cap {
                    truncated = true;
                    break 'layers;
                }
                let mut spelling = entries[parent].2.clone();
                spelling.push(s.clone());
                seen.insert(g.clone());
                next.push(entries.len());
                entries.push((g, r, spelling));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }

    let mut keyed: Vec<_> = entries
        .into_iter()
        .map(|(g, r, spelling)| ((r, g.to_string()), g, spelling))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let mut ball = Ball {
        radius,
        cap,
        elements: Vec::with_capacity(keyed.len()),
        lengths: Vec::with_capacity(keyed.len()),
        spellings: Vec::with_capacity(keyed.len()),
        truncated,
    };
    for ((r, _), g, spelling) in keyed {
        ball.elements.push(g);
        ball.lengths.push(r);
        ball.spellings.push(spelling);
    }
    Ok(ball)
}
