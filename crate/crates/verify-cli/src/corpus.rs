use std::path::Path;

use graph_core::{parse_graph6, Graph};

use crate::report::FailureRecord;

/// A corpus entry: the original graph6 line (kept verbatim so failures are
/// reproducible standalone) and its parsed graph.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub line: String,
    pub graph: Graph,
}

/// Reads a graph6 file line by line. Unparseable lines are collected as
/// failure records, not fatal errors, so one corrupt line cannot hide the
/// rest of a corpus.
pub fn load_graph6_file(path: &Path) -> std::io::Result<(Vec<CorpusEntry>, Vec<FailureRecord>)> {
    let text = std::fs::read_to_string(path)?;
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(graph) => entries.push(CorpusEntry { line: line.to_owned(), graph }),
            Err(e) => errors.push(FailureRecord {
                input: format!("{}: {line:?}", path.display()),
                expected: "valid graph6 line".into(),
                observed: e.to_string(),
            }),
        }
    }
    Ok((entries, errors))
}

/// Loads several corpus files into one stream, in order.
pub fn load_corpora(paths: &[impl AsRef<Path>]) -> std::io::Result<(Vec<CorpusEntry>, Vec<FailureRecord>)> {
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for path in paths {
        let (mut e, mut x) = load_graph6_file(path.as_ref())?;
        entries.append(&mut e);
        errors.append(&mut x);
    }
    Ok((entries, errors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn bad_lines_are_collected_not_fatal() {
        let dir = std::env::temp_dir().join("verify-cli-corpus-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("mixed.g6");
        let mut f = std::fs::File::create(&path).unwrap();
        writeln!(f, "Bw").unwrap();
        writeln!(f, "\u{7f}not-graph6").unwrap();
        writeln!(f, "C~").unwrap();
        drop(f);
        let (entries, errors) = load_graph6_file(&path).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].graph.n(), 3);
        assert_eq!(entries[1].graph.edge_count(), 6);
        assert_eq!(errors.len(), 1);
        std::fs::remove_file(&path).unwrap();
    }
}
