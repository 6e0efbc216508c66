//! Brute-force rewriting oracle for syllable words over cyclic vertex groups,
//! shared by the acceptance target and the word-engine tests.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

pub type Letter = (u8, u8);

/// Closure of a word under shuffles, identity drops and adjacent merges,
/// keyed by the (length, lexicographic) least word it reaches.
pub struct RewritingOracle {
    orders: Vec<u8>,
    adjacent: Vec<Vec<bool>>,
    memo: HashMap<Vec<Letter>, Vec<Letter>>,
}

fn shortlex_min(a: Vec<Letter>, b: Vec<Letter>) -> Vec<Letter> {
    if (b.len(), &b) < (a.len(), &a) {
        b
    } else {
        a
    }
}

impl RewritingOracle {
    pub fn new(orders: &[u8], edges: &[(usize, usize)]) -> Self {
        let n = orders.len();
        let mut adjacent = vec![vec![false; n]; n];
        for &(a, b) in edges {
            adjacent[a][b] = true;
            adjacent[b][a] = true;
        }
        RewritingOracle {
            orders: orders.to_vec(),
            adjacent,
            memo: HashMap::new(),
        }
    }

    pub fn key(&mut self, word: &[Letter]) -> Vec<Letter> {
        if let Some(k) = self.memo.get(word) {
            return k.clone();
        }
        let mut class = vec![word.to_vec()];
        let mut seen: HashSet<Vec<Letter>> = class.iter().cloned().collect();
        let mut next = 0;
        while next < class.len() {
            let u = class[next].clone();
            next += 1;
            for i in 0..u.len().saturating_sub(1) {
                if self.adjacent[u[i].0 as usize][u[i + 1].0 as usize] {
                    let mut s = u.clone();
                    s.swap(i, i + 1);
                    if seen.insert(s.clone()) {
                        class.push(s);
                    }
                }
            }
        }

        let mut best = class.iter().min().unwrap().clone();
        for u in &class {
            for i in 0..u.len() {
                if u[i].1 == 0 {
                    let mut d = u.clone();
                    d.remove(i);
                    let k = self.key(&d);
                    best = shortlex_min(best, k);
                }
                if i + 1 < u.len() && u[i].0 == u[i + 1].0 {
                    let order = self.orders[u[i].0 as usize];
                    let mut m = u.clone();
                    m[i].1 = (u[i].1 + u[i + 1].1) % order;
                    m.remove(i + 1);
                    let k = self.key(&m);
                    best = shortlex_min(best, k);
                }
            }
        }
        for u in class {
            self.memo.insert(u, best.clone());
        }
        best
    }
}

pub fn all_words(alphabet: &[Letter], max_len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut grown = Vec::with_capacity(frontier.len() * alphabet.len());
        for w in &frontier {
            for &l in alphabet {
                let mut x: Vec<Letter> = w.clone();
                x.push(l);
                grown.push(x);
            }
        }
        out.extend(grown.iter().cloned());
        frontier = grown;
    }
    out
}

pub fn small_graphs() -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut graphs = Vec::new();
    for n in 1..=3usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0..1u32 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            graphs.push((n, edges));
        }
    }
    graphs
}
