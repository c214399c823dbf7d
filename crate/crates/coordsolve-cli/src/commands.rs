//! One function per subcommand; each returns a JSON value with a fixed
//! schema and the equivalent human-readable text.

use std::fmt::Write as _;

use coordsolve::asynchronous::{design, ieseds};
use coordsolve::design::{candidate_horizons, intervention, strong_centrality, weak_centrality};
use coordsolve::digraph::ElimNode;
use coordsolve::game::{check_assumptions, iesds, ne_set};
use coordsolve::graphical::reduce_to_weakest_link;
use coordsolve::oracle::{enumerate_equilibria, Mode, OracleOptions, Schedule};
use coordsolve::ordered::{algorithm1, classify, tau_ordered};
use coordsolve::sync::{Options, SyncSolver};
use coordsolve::{Context, Digraph, GameKind, Partition, PlayerSet, Result, StageGame};
use serde_json::{json, Value};

pub struct Report {
    pub json: Value,
    pub text: String,
}

fn set(x: PlayerSet) -> Value {
    json!(x.one_based())
}

fn sets(xs: &[PlayerSet]) -> Value {
    Value::Array(xs.iter().map(|&x| set(x)).collect())
}

fn edges(g: &Digraph) -> Value {
    json!(g
        .edges()
        .iter()
        .map(|&(i, j)| [i + 1, j + 1])
        .collect::<Vec<_>>())
}

fn sorted(mut xs: Vec<PlayerSet>) -> Vec<PlayerSet> {
    xs.sort_by_key(|x| x.bits());
    xs
}

fn list(xs: &[PlayerSet]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn horizon(v: Option<u32>) -> String {
    v.map_or_else(|| "never".to_string(), |t| t.to_string())
}

pub fn check(game: &StageGame) -> Report {
    let r = check_assumptions(game);
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "condition": w.condition.label(),
                "player": w.player + 1,
                "lower": set(w.lower),
                "upper": set(w.upper),
            })
        })
        .collect();
    let json = json!({
        "players": game.n(),
        "single_crossing": r.single_crossing,
        "common_interests": r.common_interests,
        "deviation_proof": r.deviation_proof,
        "nondegenerate": r.nondegenerate,
        "assumption1": r.assumption1(),
        "witnesses": witnesses,
    });
    let mut text = String::new();
    let _ = writeln!(text, "players            {}", game.n());
    let _ = writeln!(text, "single-crossing    {}", r.single_crossing);
    let _ = writeln!(text, "common interests   {}", r.common_interests);
    let _ = writeln!(text, "deviation-proof    {}", r.deviation_proof);
    let _ = writeln!(text, "nondegenerate      {}", r.nondegenerate);
    for w in &r.witnesses {
        let _ = writeln!(text, "  {w}");
    }
    Report { json, text }
}

pub fn ne(game: &StageGame) -> Result<Report> {
    let ctx = Context::full(game.n());
    let all = sorted(ne_set(game, ctx)?);
    let (least, greatest) = iesds(game, ctx)?;
    let json = json!({ "equilibria": sets(&all), "least": set(least), "greatest": set(greatest) });
    let text = format!(
        "equilibria  {}\nleast       {least}\ngreatest    {greatest}\n",
        list(&all)
    );
    Ok(Report { json, text })
}

pub fn tau(game: &StageGame, target: PlayerSet, opts: Options) -> Result<Report> {
    let v = SyncSolver::new(game, opts)?.tau_opt(target)?;
    Ok(Report {
        json: json!({ "target": set(target), "tau": v }),
        text: format!("{}\n", horizon(v)),
    })
}

pub fn phi(game: &StageGame, t: usize, opts: Options) -> Result<Report> {
    let x = SyncSolver::new(game, opts)?.phi(t)?;
    Ok(Report {
        json: json!({ "t": t, "phi": set(x) }),
        text: format!("{x}\n"),
    })
}

pub fn outcomes(game: &StageGame, t: usize, opts: Options) -> Result<Report> {
    let out = sorted(SyncSolver::new(game, opts)?.outcomes(t)?);
    Ok(Report {
        json: json!({ "t": t, "outcomes": sets(&out) }),
        text: out.iter().map(|x| format!("{x}\n")).collect(),
    })
}

fn forest(nodes: &[ElimNode]) -> Value {
    Value::Array(
        nodes
            .iter()
            .map(|n| json!({ "vertex": n.vertex + 1, "children": forest(&n.children) }))
            .collect(),
    )
}

fn draw(nodes: &[ElimNode], depth: usize, out: &mut String) {
    for n in nodes {
        let _ = writeln!(out, "{}{}", "  ".repeat(depth + 1), n.vertex + 1);
        draw(&n.children, depth + 1, out);
    }
}

pub fn treedepth(game: &StageGame, t: Option<usize>, opts: Options) -> Result<Report> {
    let (source, graph) = match game.graph() {
        Some(g) => ("game", g.clone()),
        None => ("reduced", reduce_to_weakest_link(game, opts)?.graph),
    };
    let td = graph.tree_depth();
    let cells = graph.partition_from_treedepth(t.unwrap_or(td.value.max(1) as usize))?;
    let json = json!({
        "source": source,
        "edges": edges(&graph),
        "tree_depth": td.value,
        "forest": forest(&td.cert.roots),
        "cells": sets(cells.cells()),
    });
    let mut text = format!(
        "tree-depth {} ({source} graph)\nelimination forest\n",
        td.value
    );
    draw(&td.cert.roots, 0, &mut text);
    let _ = writeln!(text, "cells {}", list(cells.cells()));
    Ok(Report { json, text })
}

pub fn design_cmd(game: &StageGame, t: usize, opts: Options) -> Result<Report> {
    let d = design(game, t, opts)?;
    let json = json!({
        "t": t,
        "achieved": set(d.achieved),
        "cells": sets(d.partition.cells()),
        "graph": edges(&d.graph),
    });
    let text = format!(
        "achieved  {}\ncells     {}\n",
        d.achieved,
        list(d.partition.cells())
    );
    Ok(Report { json, text })
}

pub fn async_solve(game: &StageGame, p: &Partition, opts: Options) -> Result<Report> {
    let table = ieseds(game, p, opts)?;
    let json = json!({ "cells": sets(p.cells()), "outcome": set(table.outcome) });
    let text = format!("cells    {}\noutcome  {}\n", list(p.cells()), table.outcome);
    Ok(Report { json, text })
}

pub fn centrality(game: &StageGame, opts: Options) -> Result<Report> {
    let weak = weak_centrality(game, opts)?;
    let strong = strong_centrality(game);
    let json = json!({
        "weak": weak.iter().map(|c| json!({ "tau": c.tau, "players": set(c.players) })).collect::<Vec<_>>(),
        "strong": strong,
    });
    let mut text = String::from("weak centrality (tau of singletons)\n");
    for c in &weak {
        let _ = writeln!(text, "  {:>5}  {}", horizon(c.tau), c.players);
    }
    text.push_str("strong centrality (row plays 1 whenever column does)\n");
    for row in &strong {
        let cells: String = row.iter().map(|&b| if b { '1' } else { '.' }).collect();
        let _ = writeln!(text, "  {cells}");
    }
    Ok(Report { json, text })
}

pub fn horizons(game: &StageGame, opts: Options) -> Result<Report> {
    let l = candidate_horizons(game, opts)?;
    let json = json!({
        "candidates": l.candidates.iter().map(|(t, x)| json!({ "t": t, "phi": set(*x) })).collect::<Vec<_>>(),
        "bound": l.bound,
        "optimal_count": l.optimal_count,
    });
    let mut text = String::new();
    for (t, x) in &l.candidates {
        let _ = writeln!(text, "T = {t:<3} {x}");
    }
    let _ = writeln!(
        text,
        "optimal horizons {} (bound {})",
        l.optimal_count, l.bound
    );
    Ok(Report { json, text })
}

pub fn intervene(
    game: &StageGame,
    subsidized: PlayerSet,
    t: usize,
    opts: Options,
) -> Result<Report> {
    let r = intervention(game, subsidized, t, opts)?;
    let bounds: Vec<Value> = r
        .bounds
        .iter()
        .map(|b| json!({ "player": b.player + 1, "lower": b.lower, "whole": b.whole }))
        .collect();
    let json = json!({
        "t": t,
        "subsidized": set(subsidized),
        "baseline": set(r.baseline),
        "with_subsidy": set(r.subsidised),
        "gain": set(r.gain),
        "bounds": bounds,
    });
    let text = format!(
        "baseline      {}\nwith subsidy  {}\ngain          {}\n",
        r.baseline, r.subsidised, r.gain
    );
    Ok(Report { json, text })
}

pub fn ordered(
    game: &StageGame,
    target: PlayerSet,
    sequence: bool,
    opts: Options,
) -> Result<Report> {
    let f = classify(game, sequence, opts)?;
    let tau = if f.fast_path() {
        Some(tau_ordered(game, target, opts)?)
    } else {
        None
    };
    let two_pointer = match game.kind() {
        GameKind::Aggregative { c } => Some(algorithm1(c, game.n())?),
        _ => None,
    };
    let witnesses: Vec<Value> = f
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "condition": format!("{:?}", w.condition),
                "i": w.i + 1,
                "j": w.j + 1,
                "k": w.k.map(|k| k + 1),
                "x": set(w.x),
            })
        })
        .collect();
    let json = json!({
        "cost_ordered": f.cost_ordered,
        "strongly_cost_ordered": f.strongly_cost_ordered,
        "contribution_ordered": f.contribution_ordered,
        "contribution_natural": f.contribution_natural,
        "cost_ordered_sequence": f.cost_ordered_sequence,
        "fast_path": f.fast_path(),
        "target": set(target),
        "tau": tau,
        "algorithm1": two_pointer,
        "witnesses": witnesses,
    });
    let mut text = String::new();
    let _ = writeln!(text, "cost-ordered             {}", f.cost_ordered);
    let _ = writeln!(text, "strongly cost-ordered    {}", f.strongly_cost_ordered);
    let _ = writeln!(text, "contribution-ordered     {}", f.contribution_ordered);
    let _ = writeln!(text, "contribution natural     {}", f.contribution_natural);
    if let Some(s) = f.cost_ordered_sequence {
        let _ = writeln!(text, "cost-ordered (sequence)  {s}");
    }
    match tau {
        Some(v) => {
            let _ = writeln!(text, "tau({target}) = {v}");
        }
        None => text.push_str("no fast path\n"),
    }
    if let Some(v) = two_pointer {
        let _ = writeln!(text, "two-pointer horizon = {v}");
    }
    Ok(Report { json, text })
}

pub fn oracle(
    game: &StageGame,
    schedule: &Schedule,
    label: &str,
    mode: Mode,
    opts: OracleOptions,
) -> Result<Report> {
    let r = enumerate_equilibria(game, schedule, mode, opts)?;
    let mode_name = match mode {
        Mode::Spne => "spne",
        Mode::Mspne => "mspne",
    };
    let json = json!({
        "schedule": label,
        "mode": mode_name,
        "outcomes": sets(&r.outcomes),
        "least": r.least().map(set),
        "minimal": sets(&r.minimal()),
    });
    let mut text = format!("{mode_name} outcomes of {label}\n");
    for x in &r.outcomes {
        let _ = writeln!(text, "  {x}");
    }
    let _ = writeln!(
        text,
        "least {}",
        r.least()
            .map_or_else(|| "none".to_string(), |x| x.to_string())
    );
    Ok(Report { json, text })
}
