//! Game description files.
//!
//! Players are numbered from 1. Table payoffs list `u_i(X)` for every
//! coalition `X` in bitmask order: entry `m` has player `j` at 1 exactly
//! when bit `j - 1` of `m` is set. Payoffs are integers or exact `"p/q"`
//! strings.

use std::path::Path;

use coordsolve::ordered::{generate, Generator};
use coordsolve::{Digraph, GameKind, Payoff, StageGame};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GameDocument {
    pub players: usize,
    #[serde(flatten)]
    pub kind: KindDocument,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KindDocument {
    Table {
        payoffs: Vec<Vec<Rational>>,
    },
    WeakestLink {
        edges: Vec<[usize; 2]>,
    },
    Threshold {
        edges: Vec<[usize; 2]>,
        k: Vec<usize>,
    },
    Aggregative {
        c: Vec<usize>,
    },
    Generator {
        generator: GeneratorDocument,
    },
}

/// Nested split graph parameters, 1-based: player `i` hears every other
/// player numbered `in_start[i]` or higher and is heard by every other
/// player numbered `out_end[i]` or lower.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorDocument {
    AlignedNsg {
        in_start: Vec<usize>,
        out_end: Vec<usize>,
    },
    OpposedNsg {
        in_start: Vec<usize>,
        out_end: Vec<usize>,
        k: Vec<usize>,
    },
}

/// Exact payoff, written as an integer or a `"p/q"` string.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawNumber", into = "RawNumber")]
pub struct Rational(pub Payoff);

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawNumber {
    Int(i64),
    Text(String),
}

impl TryFrom<RawNumber> for Rational {
    type Error = String;

    fn try_from(raw: RawNumber) -> Result<Self, String> {
        match raw {
            RawNumber::Int(v) => Ok(Rational(Payoff::from_integer(v))),
            RawNumber::Text(s) => s
                .trim()
                .parse::<Payoff>()
                .map(Rational)
                .map_err(|_| format!("\"{s}\" is not an exact rational")),
        }
    }
}

impl From<Rational> for RawNumber {
    fn from(r: Rational) -> Self {
        if r.0.is_integer() {
            RawNumber::Int(*r.0.numer())
        } else {
            RawNumber::Text(r.0.to_string())
        }
    }
}

fn zero_based_edges(n: usize, edges: &[[usize; 2]]) -> Result<Vec<(usize, usize)>, String> {
    edges
        .iter()
        .enumerate()
        .map(|(k, &[i, j])| {
            if i == 0 || j == 0 || i > n || j > n {
                Err(format!("edges[{k}]: players are numbered 1..={n}"))
            } else {
                Ok((i - 1, j - 1))
            }
        })
        .collect()
}

fn one_based_edges(g: &Digraph) -> Vec<[usize; 2]> {
    g.edges().into_iter().map(|(i, j)| [i + 1, j + 1]).collect()
}

fn check_len(field: &str, len: usize, n: usize) -> Result<(), String> {
    if len != n {
        return Err(format!("{field}: expected {n} entries, found {len}"));
    }
    Ok(())
}

impl GameDocument {
    pub fn to_game(&self) -> Result<StageGame, String> {
        let n = self.players;
        let lib = |e: coordsolve::Error| e.to_string();
        match &self.kind {
            KindDocument::Table { payoffs } => {
                check_len("payoffs", payoffs.len(), n)?;
                for (i, row) in payoffs.iter().enumerate() {
                    if n >= usize::BITS as usize || row.len() != 1usize << n {
                        return Err(format!(
                            "payoffs[{i}]: expected 2^{n} entries, found {}",
                            row.len()
                        ));
                    }
                }
                let table = payoffs
                    .iter()
                    .map(|row| row.iter().map(|r| r.0).collect())
                    .collect();
                StageGame::table(table).map_err(lib)
            }
            KindDocument::WeakestLink { edges } => {
                let g = Digraph::new(n, &zero_based_edges(n, edges)?).map_err(lib)?;
                StageGame::weakest_link(g).map_err(lib)
            }
            KindDocument::Threshold { edges, k } => {
                check_len("k", k.len(), n)?;
                let g = Digraph::new(n, &zero_based_edges(n, edges)?).map_err(lib)?;
                StageGame::threshold(g, k.clone()).map_err(lib)
            }
            KindDocument::Aggregative { c } => {
                check_len("c", c.len(), n)?;
                StageGame::aggregative(c.clone()).map_err(lib)
            }
            KindDocument::Generator { generator } => {
                let (in_start, out_end) = match generator {
                    GeneratorDocument::AlignedNsg { in_start, out_end }
                    | GeneratorDocument::OpposedNsg {
                        in_start, out_end, ..
                    } => (in_start, out_end),
                };
                check_len("generator.in_start", in_start.len(), n)?;
                check_len("generator.out_end", out_end.len(), n)?;
                if let Some(k) = in_start.iter().position(|&s| s == 0 || s > n + 1) {
                    return Err(format!(
                        "generator.in_start[{k}]: must lie in 1..={}",
                        n + 1
                    ));
                }
                if let Some(k) = out_end.iter().position(|&e| e > n) {
                    return Err(format!("generator.out_end[{k}]: must lie in 0..={n}"));
                }
                let in_start: Vec<usize> = in_start.iter().map(|s| s - 1).collect();
                let out_end = out_end.clone();
                let gen = match generator {
                    GeneratorDocument::AlignedNsg { .. } => {
                        Generator::AlignedNsg { in_start, out_end }
                    }
                    GeneratorDocument::OpposedNsg { k, .. } => {
                        check_len("generator.k", k.len(), n)?;
                        Generator::OpposedNsg {
                            in_start,
                            out_end,
                            k: k.clone(),
                        }
                    }
                };
                generate(&gen).map_err(lib)
            }
        }
    }

    /// The document describing `game`, keeping its structured form.
    pub fn from_game(game: &StageGame) -> GameDocument {
        let kind = match game.kind() {
            GameKind::Table(rows) => KindDocument::Table {
                payoffs: rows
                    .iter()
                    .map(|row| row.iter().copied().map(Rational).collect())
                    .collect(),
            },
            GameKind::WeakestLink(g) => KindDocument::WeakestLink {
                edges: one_based_edges(g),
            },
            GameKind::Threshold { graph, k } => KindDocument::Threshold {
                edges: one_based_edges(graph),
                k: k.clone(),
            },
            GameKind::Aggregative { c } => KindDocument::Aggregative { c: c.clone() },
        };
        GameDocument {
            players: game.n(),
            kind,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    players: usize,
    #[allow(dead_code)]
    kind: String,
    payoffs: Vec<Vec<Rational>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    players: usize,
    #[allow(dead_code)]
    kind: String,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    k: Option<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AggregativeFile {
    players: usize,
    #[allow(dead_code)]
    kind: String,
    c: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorFile {
    players: usize,
    #[allow(dead_code)]
    kind: String,
    generator: GeneratorDocument,
}

fn typed<T: serde::de::DeserializeOwned>(value: serde_json::Value) -> Result<T, String> {
    serde_path_to_error::deserialize(value).map_err(|e| format!("{}: {}", e.path(), e.inner()))
}

/// Parses a document, reporting the JSON path of any schema violation.
pub fn parse_game(text: &str) -> Result<StageGame, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or("kind: missing or not a string")?
        .to_string();
    let doc = match kind.as_str() {
        "table" => {
            let f: TableFile = typed(value)?;
            GameDocument {
                players: f.players,
                kind: KindDocument::Table { payoffs: f.payoffs },
            }
        }
        "weakest_link" | "threshold" => {
            let f: GraphFile = typed(value)?;
            let kind = match (kind.as_str(), f.k) {
                ("weakest_link", None) => KindDocument::WeakestLink { edges: f.edges },
                ("threshold", Some(k)) => KindDocument::Threshold { edges: f.edges, k },
                ("weakest_link", Some(_)) => return Err("k: not used by weakest_link games".into()),
                _ => return Err("k: required by threshold games".into()),
            };
            GameDocument {
                players: f.players,
                kind,
            }
        }
        "aggregative" => {
            let f: AggregativeFile = typed(value)?;
            GameDocument {
                players: f.players,
                kind: KindDocument::Aggregative { c: f.c },
            }
        }
        "generator" => {
            let f: GeneratorFile = typed(value)?;
            GameDocument {
                players: f.players,
                kind: KindDocument::Generator {
                    generator: f.generator,
                },
            }
        }
        other => {
            return Err(format!(
                "kind: unknown kind \"{other}\", expected table, weakest_link, threshold, aggregative or generator"
            ))
        }
    };
    doc.to_game()
}

pub fn emit_game(game: &StageGame) -> String {
    serde_json::to_string_pretty(&GameDocument::from_game(game)).expect("documents serialise")
}

pub fn load_game(path: &Path) -> Result<StageGame, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_game(&text).map_err(|e| format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use coordsolve::catalog;
    use coordsolve::random::{random_game, stream, GameSpec};
    use coordsolve::PlayerSet;

    fn same_payoffs(a: &StageGame, b: &StageGame) -> bool {
        a.n() == b.n()
            && PlayerSet::full(a.n())
                .subsets()
                .all(|x| (0..a.n()).all(|i| a.payoff(i, x).unwrap() == b.payoff(i, x).unwrap()))
    }

    #[test]
    fn round_trip_preserves_payoffs() {
        let mut games = vec![
            catalog::mixed_pledge_game(),
            catalog::twin_triangles(),
            catalog::spillover_game(Payoff::new(1, 2)),
            StageGame::aggregative(vec![1, 2, 2]).unwrap(),
        ];
        for seed in 0..8 {
            games.push(random_game(&mut stream(seed, 0), GameSpec::new(4)));
        }
        for g in &games {
            let back = parse_game(&emit_game(g)).unwrap();
            assert!(same_payoffs(g, &back));
            assert_eq!(back.kind(), g.kind());
        }
    }

    #[test]
    fn payoff_table_document() {
        let text = r#"{"players": 2, "kind": "table",
            "payoffs": [[1, 0, 3, 2], [1, "2", 0, "6/2"]]}"#;
        let g = parse_game(text).unwrap();
        assert!(same_payoffs(&g, &catalog::mixed_pledge_game()));
        assert!(!g.report().deviation_proof);
    }

    #[test]
    fn star_document() {
        let edges: Vec<String> = (2..=7)
            .flat_map(|l| [format!("[1,{l}]"), format!("[{l},1]")])
            .collect();
        let text = format!(
            r#"{{"players": 7, "kind": "weakest_link", "edges": [{}]}}"#,
            edges.join(",")
        );
        let g = parse_game(&text).unwrap();
        assert!(same_payoffs(&g, &catalog::star(6)));
    }

    #[test]
    fn aggregative_document() {
        let g = parse_game(r#"{"players": 3, "kind": "aggregative", "c": [2, 2, 2]}"#).unwrap();
        assert_eq!(g.kind(), &GameKind::Aggregative { c: vec![2, 2, 2] });
    }

    #[test]
    fn generator_document_matches_catalog() {
        let in_start: Vec<usize> = catalog::NESTED_SPLIT_IN.iter().map(|s| s + 1).collect();
        let doc = GameDocument {
            players: 6,
            kind: KindDocument::Generator {
                generator: GeneratorDocument::AlignedNsg {
                    in_start,
                    out_end: catalog::NESTED_SPLIT_OUT.to_vec(),
                },
            },
        };
        let g = parse_game(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert!(same_payoffs(&g, &catalog::nested_split_example()));
    }

    #[test]
    fn errors_carry_paths() {
        let e = parse_game(
            r#"{"players": 2, "kind": "table", "payoffs": [[1, 0, 3, 2], [1, "x", 0, 3]]}"#,
        )
        .unwrap_err();
        assert!(e.contains("payoffs[1][1]"), "{e}");
        let e =
            parse_game(r#"{"players": 2, "kind": "table", "payoffs": [[1, 0, 3], [1, 2, 0, 3]]}"#)
                .unwrap_err();
        assert!(e.contains("payoffs[0]"), "{e}");
        let e =
            parse_game(r#"{"players": 2, "kind": "weakest_link", "edges": [[0, 1]]}"#).unwrap_err();
        assert!(e.contains("edges[0]"), "{e}");
        assert!(parse_game(r#"{"players": 2, "kind": "mystery"}"#).is_err());
    }
}
