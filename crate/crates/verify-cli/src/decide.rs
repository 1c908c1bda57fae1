use std::path::Path;

use serde_json::{json, Value};

use criticality::{is_id_factor_critical_tutte, TutteDecision};
use extremal::{build_factor_extremal, build_id_extremal};
use factor_core::{
    fractional_factor_lp, fractional_factor_oracle, has_perfect_matching, DegreeBoundSpec,
    FactorReport, MatchingDecision, ORACLE_LIMIT,
};
use graph_core::{parse_graph6, Graph};

/// Which single-instance question the front door answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Factor,
    Matching,
    Critical,
}

/// Resolves the `decide` input: a built-in family spec
/// (`factor-extremal:n=5,a=2` or `id-extremal:n=12,delta=4,r=1`), a path to a
/// graph6 or `u v` edge-list file, or a graph6 literal.
pub fn resolve_input(input: &str) -> Result<Graph, String> {
    if let Some(args) = input.strip_prefix("factor-extremal:") {
        let kv = parse_builtin_args(args)?;
        let n = require_key(&kv, "n")?;
        let a = require_key(&kv, "a")?;
        return build_factor_extremal(n, a).map_err(|e| e.to_string());
    }
    if let Some(args) = input.strip_prefix("id-extremal:") {
        let kv = parse_builtin_args(args)?;
        let n = require_key(&kv, "n")?;
        let delta = require_key(&kv, "delta")?;
        let r = require_key(&kv, "r")?;
        return build_id_extremal(n, delta, r).map_err(|e| e.to_string());
    }
    let path = Path::new(input);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| format!("reading {input}: {e}"))?;
        return parse_graph_file(&text);
    }
    parse_graph6(input).map_err(|e| format!("not a builtin spec, file, or graph6 string: {e}"))
}

fn parse_builtin_args(args: &str) -> Result<Vec<(String, usize)>, String> {
    args.split(',')
        .map(|piece| {
            let (key, value) = piece
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {piece:?}"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|e| format!("builtin arg {key}: {e}"))?;
            Ok((key.trim().to_owned(), value))
        })
        .collect()
}

fn require_key(kv: &[(String, usize)], key: &str) -> Result<usize, String> {
    kv.iter()
        .find(|(k, _)| k == key)
        .map(|&(_, v)| v)
        .ok_or_else(|| format!("builtin spec is missing {key}="))
}

fn parse_graph_file(text: &str) -> Result<Graph, String> {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    if lines.is_empty() {
        return Err("empty graph file".into());
    }
    // Edge list: every line is two integers separated by whitespace.
    let as_edges: Option<Vec<(usize, usize)>> = lines
        .iter()
        .map(|line| {
            let mut it = line.split_whitespace();
            match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => Some((u.parse().ok()?, v.parse().ok()?)),
                _ => None,
            }
        })
        .collect();
    if let Some(edges) = as_edges {
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        return Graph::from_edges(n, &edges).map_err(|e| e.to_string());
    }
    parse_graph6(lines[0]).map_err(|e| format!("first line is neither edge nor graph6: {e}"))
}

/// Runs one decision task. Returns the JSON document plus the process exit
/// code: 0 for Yes, 1 for No (operational errors surface as `Err` and map to
/// exit code 2 in the binary).
pub fn run_decide(graph: &Graph, task: Task, a: u32, b: u32) -> Result<(Value, i32), String> {
    match task {
        Task::Factor => {
            let bounds =
                DegreeBoundSpec::uniform(graph.n(), a, b).map_err(|e| e.to_string())?;
            // The flow route supplies an explicit edge-weight certificate on
            // Yes; on No, the subset oracle (when within its limit) upgrades
            // the answer with a deficiency witness.
            let lp = fractional_factor_lp(graph, &bounds).map_err(|e| e.to_string())?;
            let report = if !lp.exists() && graph.n() <= ORACLE_LIMIT {
                FactorReport::from_oracle(
                    &fractional_factor_oracle(graph, &bounds).map_err(|e| e.to_string())?,
                )
            } else {
                FactorReport::from_lp(&lp)
            };
            let yes = report.decision == "yes";
            let json = serde_json::to_value(&report).map_err(|e| e.to_string())?;
            Ok((json, if yes { 0 } else { 1 }))
        }
        Task::Matching => match has_perfect_matching(graph).map_err(|e| e.to_string())? {
            MatchingDecision::Yes(matching) => {
                Ok((json!({ "decision": "yes", "matching": matching }), 0))
            }
            MatchingDecision::No(s) => {
                let s: Vec<usize> = s.iter().collect();
                Ok((json!({ "decision": "no", "tutteSet": s }), 1))
            }
        },
        Task::Critical => match is_id_factor_critical_tutte(graph).map_err(|e| e.to_string())? {
            TutteDecision::Yes => Ok((json!({ "decision": "yes" }), 0)),
            TutteDecision::No(witness) => {
                let witness = serde_json::to_value(&witness).map_err(|e| e.to_string())?;
                Ok((json!({ "decision": "no", "witness": witness }), 1))
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::emit_graph6;

    #[test]
    fn triangle_has_the_half_weight_factor() {
        let g = resolve_input("Bw").unwrap();
        assert_eq!(g.n(), 3);
        let (json, code) = run_decide(&g, Task::Factor, 1, 1).unwrap();
        assert_eq!(code, 0);
        assert_eq!(json["decision"], "yes");
        let edges = json["certificate"]["edges"].as_array().unwrap();
        assert_eq!(edges.len(), 3);
        for e in edges {
            assert!((e[2].as_f64().unwrap() - 0.5).abs() < 1e-9);
        }
    }

    #[test]
    fn star_matching_refuted_by_its_center() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let line = emit_graph6(&star).unwrap();
        let g = resolve_input(&line).unwrap();
        let (json, code) = run_decide(&g, Task::Matching, 1, 1).unwrap();
        assert_eq!(code, 1);
        assert_eq!(json["decision"], "no");
        assert_eq!(json["tutteSet"], json!([0]));
    }

    #[test]
    fn builtin_factor_extremal_spec() {
        let g = resolve_input("factor-extremal:n=5,a=2").unwrap();
        assert_eq!(g.n(), 5);
        let (json, code) = run_decide(&g, Task::Factor, 2, 3).unwrap();
        assert_eq!(code, 1);
        assert_eq!(json["decision"], "no");
        assert_eq!(json["witness"]["phi"], -1);
    }

    #[test]
    fn edge_list_files_and_criticality() {
        let dir = std::env::temp_dir().join("verify-cli-decide-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("k4.edges");
        std::fs::write(&path, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        let g = resolve_input(path.to_str().unwrap()).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        let (json, code) = run_decide(&g, Task::Critical, 1, 1).unwrap();
        assert_eq!(code, 0);
        assert_eq!(json["decision"], "yes");
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn bad_inputs_are_operational_errors() {
        assert!(resolve_input("factor-extremal:n=5").is_err());
        assert!(resolve_input("\u{7f}garbage\u{7f}").is_err());
    }
}
