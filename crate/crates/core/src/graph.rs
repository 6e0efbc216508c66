use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupKind;

/// A finite simple graph with one vertex group per vertex.
///
/// Vertex ids are `0..n` and their numeric order is the tie-breaking order
/// used by canonical forms. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    groups: Vec<GroupKind>,
    adjacency: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    /// Rejects loops, repeated edges (in either orientation) and endpoints
    /// outside `0..groups.len()`.
    pub fn new(groups: Vec<GroupKind>, edges: &[(usize, usize)]) -> Result<Self> {
        for g in &groups {
            g.validate()?;
        }
        let n = groups.len();
        let mut adjacency = vec![vec![false; n]; n];
        let mut stored = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::InvalidVertex(a));
            }
            if b >= n {
                return Err(Error::InvalidVertex(b));
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            if adjacency[a][b] {
                return Err(Error::DuplicateEdge(a, b));
            }
            adjacency[a][b] = true;
            adjacency[b][a] = true;
            stored.push((a.min(b), a.max(b)));
        }
        stored.sort_unstable();
        Ok(GraphSpec {
            groups,
            adjacency,
            edges: stored,
        })
    }

    pub fn edgeless(groups: Vec<GroupKind>) -> Result<Self> {
        Self::new(groups, &[])
    }

    pub fn complete(groups: Vec<GroupKind>) -> Result<Self> {
        let n = groups.len();
        let edges: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Self::new(groups, &edges)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(groups: Vec<GroupKind>) -> Result<Self> {
        let edges: Vec<_> = (1..groups.len()).map(|b| (b - 1, b)).collect();
        Self::new(groups, &edges)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; needs at least three vertices.
    pub fn cycle(groups: Vec<GroupKind>) -> Result<Self> {
        let n = groups.len();
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|a| (a, (a + 1) % n)).collect();
        Self::new(groups, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[GroupKind] {
        &self.groups
    }

    /// Edges as `(min, max)` pairs in sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn group(&self, v: usize) -> Result<&GroupKind> {
        self.groups.get(v).ok_or(Error::InvalidVertex(v))
    }

    /// True iff `[v, w]` is an edge. Never true for `v == w`.
    #[inline]
    pub fn adjacent(&self, v: usize, w: usize) -> bool {
        self.adjacency[v][w]
    }

    /// True iff `w` lies in `st(v)`.
    #[inline]
    pub fn in_star(&self, v: usize, w: usize) -> bool {
        v == w || self.adjacency[v][w]
    }

    pub fn link(&self, v: usize) -> Result<BTreeSet<usize>> {
        let row = self.adjacency.get(v).ok_or(Error::InvalidVertex(v))?;
        Ok((0..row.len()).filter(|&w| row[w]).collect())
    }

    pub fn star(&self, v: usize) -> Result<BTreeSet<usize>> {
        let mut s = self.link(v)?;
        s.insert(v);
        Ok(s)
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    pub fn has_infinite_group(&self) -> bool {
        self.groups.iter().any(|g| !g.is_finite())
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups: Vec<_> = self.groups.iter().map(|g| g.to_string()).collect();
        let edges: Vec<_> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "[{}] edges {{{}}}", groups.join(", "), edges.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2s(n: usize) -> Vec<GroupKind> {
        vec![GroupKind::Cyclic(2); n]
    }

    #[test]
    fn star_examples() {
        let path = GraphSpec::path(z2s(3)).unwrap();
        assert_eq!(path.star(1).unwrap(), BTreeSet::from([0, 1, 2]));
        assert_eq!(path.star(0).unwrap(), BTreeSet::from([0, 1]));
        let edgeless = GraphSpec::edgeless(z2s(2)).unwrap();
        assert_eq!(edgeless.star(0).unwrap(), BTreeSet::from([0]));
        let k3 = GraphSpec::complete(z2s(3)).unwrap();
        assert_eq!(k3.star(2).unwrap(), BTreeSet::from([0, 1, 2]));
        assert_eq!(k3.star(3), Err(Error::InvalidVertex(3)));
    }

    #[test]
    fn rejects_loops_duplicates_and_bad_endpoints() {
        assert_eq!(GraphSpec::new(z2s(2), &[(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(
            GraphSpec::new(z2s(2), &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(1, 0))
        );
        assert_eq!(GraphSpec::new(z2s(2), &[(0, 2)]), Err(Error::InvalidVertex(2)));
        assert!(GraphSpec::new(vec![GroupKind::Cyclic(1)], &[]).is_err());
    }

    #[test]
    fn shape_predicates() {
        let single = GraphSpec::edgeless(z2s(1)).unwrap();
        assert!(single.is_edgeless() && single.is_complete());
        let c5 = GraphSpec::cycle(z2s(5)).unwrap();
        assert_eq!(c5.edges().len(), 5);
        assert!(!c5.is_edgeless() && !c5.is_complete());
        assert!(c5.adjacent(4, 0) && !c5.adjacent(0, 2));
        assert!(GraphSpec::cycle(z2s(2)).is_err());
    }
}
