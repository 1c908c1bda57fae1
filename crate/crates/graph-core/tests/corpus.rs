//! Round-trip and integrity checks for the bundled graph6 corpora: one file
//! per order with exactly one representative of each isomorphism class, plus
//! a sample of connected graphs on nine vertices.

use graph_core::{canonical_form, emit_graph6, parse_graph6, CanonicalLabel, Graph};
use std::collections::HashSet;
use std::path::PathBuf;

fn corpus_lines(name: &str) -> Vec<String> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpora")
        .join(name);
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
        .lines()
        .map(str::to_owned)
        .collect()
}

fn load(name: &str, order: usize) -> Vec<Graph> {
    corpus_lines(name)
        .iter()
        .map(|line| {
            let g = parse_graph6(line).unwrap();
            assert_eq!(g.n(), order, "{name}: unexpected order in {line:?}");
            assert_eq!(&emit_graph6(&g).unwrap(), line, "{name}: round trip");
            g
        })
        .collect()
}

#[test]
fn full_corpora_have_exact_class_counts() {
    // Number of isomorphism classes of simple graphs on n vertices.
    let expected = [1usize, 2, 4, 11, 34, 156, 1044, 12346];
    for (n, &count) in expected.iter().enumerate().map(|(i, c)| (i + 1, c)) {
        let graphs = load(&format!("graph{n}.g6"), n);
        assert_eq!(graphs.len(), count, "graph{n}.g6");
    }
}

#[test]
fn full_corpora_are_pairwise_non_isomorphic() {
    for n in 1..=8usize {
        let graphs = load(&format!("graph{n}.g6"), n);
        let classes: HashSet<CanonicalLabel> = graphs
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(classes.len(), graphs.len(), "duplicates in graph{n}.g6");
    }
}

#[test]
fn connected_sample_is_connected_and_distinct() {
    let graphs = load("connected9_sample.g6", 9);
    assert_eq!(graphs.len(), 1000);
    let mut classes = HashSet::new();
    for g in &graphs {
        assert!(g.is_connected());
        assert!(classes.insert(canonical_form(g).unwrap()));
    }
}
