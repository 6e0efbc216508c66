use std::collections::HashMap;

use graphprod::{GraphSpec, GroupKind, Syllable, VertexElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{small_graphs, Letter, RewritingOracle};

const WORDS_PER_CONFIGURATION: usize = 1500;
const MAX_WORD_LENGTH: usize = 6;

/// Random raw words of length up to six, including identity syllables: two
/// words normalize to the same text exactly when the rewriting closure
/// identifies them.
#[test]
fn sampled_words_agree_with_rewriting_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut configurations = 0;
    for (n, edges) in small_graphs() {
        for assignment in 0..1u32 << n {
            let orders: Vec<u8> = (0..n).map(|v| if assignment >> v & 1 == 1 { 3 } else { 2 }).collect();
            let groups = orders.iter().map(|&o| GroupKind::Cyclic(o as u64)).collect();
            let graph = GraphSpec::new(groups, &edges).unwrap();
            let mut oracle = RewritingOracle::new(&orders, &edges);

            let mut by_text: HashMap<String, Vec<Letter>> = HashMap::new();
            let mut by_key: HashMap<Vec<Letter>, String> = HashMap::new();
            for _ in 0..WORDS_PER_CONFIGURATION {
                let len = rng.gen_range(0..=MAX_WORD_LENGTH);
                let w: Vec<Letter> = (0..len)
                    .map(|_| {
                        let v = rng.gen_range(0..n);
                        (v as u8, rng.gen_range(0..orders[v]))
                    })
                    .collect();
                let syllables: Vec<Syllable> = w
                    .iter()
                    .map(|&(v, r)| Syllable::new(v as usize, VertexElement::Residue(r as u64)))
                    .collect();
                let form = graph.normalize(&syllables).unwrap();
                let key = oracle.key(&w);
                assert_eq!(form.len(), key.len(), "{graph}: {w:?}");
                let text = form.to_string();
                assert_eq!(by_text.entry(text.clone()).or_insert_with(|| key.clone()), &key, "{graph}: {w:?}");
                assert_eq!(by_key.entry(key).or_insert_with(|| text.clone()), &text, "{graph}: {w:?}");
            }
            configurations += 1;
        }
    }
    assert_eq!(configurations, 74);
}

#[test]
fn coset_representatives_depend_only_on_the_coset() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, edges) in small_graphs().into_iter().filter(|(n, _)| *n == 3) {
        let graph = GraphSpec::new(vec![GroupKind::Cyclic(3); n], &edges).unwrap();
        let random_word = |rng: &mut ChaCha8Rng, allowed: &[usize], len: usize| -> Vec<Syllable> {
            (0..len)
                .map(|_| {
                    let v = allowed[rng.gen_range(0..allowed.len())];
                    Syllable::new(v, VertexElement::Residue(rng.gen_range(1..3)))
                })
                .collect()
        };
        let all: Vec<usize> = (0..n).collect();
        for v in 0..n {
            let star: Vec<usize> = graph.star(v).unwrap().into_iter().collect();
            for _ in 0..200 {
                let g = graph.normalize(&random_word(&mut rng, &all, 6)).unwrap();
                let len = rng.gen_range(0..4);
                let k = graph.normalize(&random_word(&mut rng, &star, len)).unwrap();
                let gk = graph.multiply(&g, &k).unwrap();
                assert_eq!(
                    graph.coset_representative(&g, v).unwrap(),
                    graph.coset_representative(&gk, v).unwrap(),
                    "{graph}: g = {g}, k = {k}, vertex {v}"
                );
            }
        }
    }
}
