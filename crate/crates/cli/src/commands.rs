use std::path::{Path, PathBuf};
use std::time::Instant;

use confspace::configspace::build_complex;
use confspace::connectivity::{beta_star, connectivity_level, decompose, predict_h1};
use confspace::families;
use confspace::graph::{betti1, is_sufficiently_subdivided, sufficiently_subdivide, Graph};
use confspace::homology::{h0, h1, AbelianGroup};
use confspace::spanning::{
    default_embedding, default_root, rooted_ordered_tree, spanning_set_with, verify_spanning, CycleKind, TreeShape,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::report::{corpus_files, load_graph, Breakdown, CmdResult, InputError, Outcome, Output, RunReport, Verdict};

/// The graph the complex is built on: `g` itself, or a sufficiently
/// subdivided copy unless that is suppressed.
fn working_graph(g: &Graph, n: usize, no_subdivide: bool, out: Option<&Output>) -> Graph {
    if no_subdivide || is_sufficiently_subdivided(g, n) {
        return g.clone();
    }
    let sub = sufficiently_subdivide(g, n).graph;
    if let Some(out) = out {
        out.notice(&format!(
            "subdivided to {} vertices and {} edges for {n} particles",
            sub.vertex_count(),
            sub.edge_count()
        ));
    }
    sub
}

#[derive(Serialize)]
struct CellCounts {
    vertices: usize,
    edges: usize,
    cells0: usize,
    cells1: usize,
    cells2: usize,
}

pub fn homology(graph: &Path, n: usize, no_subdivide: bool, dump: Option<&Path>, out: &Output) -> CmdResult {
    let started = Instant::now();
    let (g, info) = load_graph(graph)?;
    let work = working_graph(&g, n, no_subdivide, Some(out));
    let c = build_complex(&work, n)?;
    let (c0, c1, c2) = c.cell_counts();
    if let Some(path) = dump {
        let text = serde_json::to_string(&c.dump()).expect("dump serializes");
        std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    }
    let mut r = RunReport::new("homology");
    r.input = Some(info);
    r.n_particles = Some(n);
    r.group = Some(h1(&c).to_string());
    r.detail("h0", h0(&c).to_string());
    r.detail("subdivided", work.vertex_count() != g.vertex_count());
    r.detail(
        "cells",
        CellCounts { vertices: work.vertex_count(), edges: work.edge_count(), cells0: c0, cells1: c1, cells2: c2 },
    );
    out.finish(r, started);
    Ok(Outcome::Success)
}

pub fn predict(graph: &Path, n: usize, out: &Output) -> CmdResult {
    let started = Instant::now();
    let (g, info) = load_graph(graph)?;
    let p = predict_h1(&g, n)?;
    let mut r = RunReport::new("predict");
    r.input = Some(info);
    r.n_particles = Some(n);
    r.predicted = Some(p.group.to_string());
    r.breakdown = Some(Breakdown::from(&p));
    out.finish(r, started);
    Ok(Outcome::Success)
}

/// Runs predictor and oracle on one graph file. `rank_offset` perturbs the
/// prediction to exercise the mismatch path.
fn compare_one(
    path: &Path,
    n: usize,
    no_subdivide: bool,
    rank_offset: i64,
    out: Option<&Output>,
) -> Result<RunReport, InputError> {
    let (g, info) = load_graph(path)?;
    let p = predict_h1(&g, n)?;
    let mut predicted = p.group.clone();
    predicted.rank =
        usize::try_from(predicted.rank as i64 + rank_offset).map_err(|_| InputError("negative rank".into()))?;
    let work = working_graph(&g, n, no_subdivide, out);
    let observed = h1(&build_complex(&work, n)?);
    let mut r = RunReport::new("compare");
    r.input = Some(info);
    r.n_particles = Some(n);
    r.predicted = Some(predicted.to_string());
    r.group = Some(observed.to_string());
    r.breakdown = Some(Breakdown::from(&p));
    r.verdict = Some(if predicted == observed { Verdict::Match } else { Verdict::Mismatch });
    Ok(r)
}

fn outcome_of(verdict: Option<Verdict>) -> Outcome {
    match verdict {
        Some(Verdict::Mismatch) => Outcome::Mismatch,
        _ => Outcome::Success,
    }
}

pub fn compare(graph: &Path, n: usize, no_subdivide: bool, rank_offset: i64, out: &Output) -> CmdResult {
    let started = Instant::now();
    let r = compare_one(graph, n, no_subdivide, rank_offset, Some(out))?;
    let outcome = outcome_of(r.verdict);
    out.finish(r, started);
    Ok(outcome)
}

#[derive(Serialize)]
struct CorpusEntry {
    file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    predicted: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    observed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// Compares every graph file in `dir`; graphs are processed in parallel and
/// reported in file-name order.
pub fn compare_corpus(dir: &Path, n: usize, no_subdivide: bool, rank_offset: i64, out: &Output) -> CmdResult {
    let started = Instant::now();
    let files: Vec<PathBuf> = corpus_files(dir)?;
    let entries: Vec<CorpusEntry> = files
        .par_iter()
        .map(|f| match compare_one(f, n, no_subdivide, rank_offset, None) {
            Ok(r) => CorpusEntry {
                file: f.display().to_string(),
                predicted: r.predicted,
                observed: r.group,
                verdict: r.verdict,
                error: None,
            },
            Err(e) => CorpusEntry {
                file: f.display().to_string(),
                predicted: None,
                observed: None,
                verdict: None,
                error: Some(e.0),
            },
        })
        .collect();
    let count = |v: Verdict| entries.iter().filter(|e| e.verdict == Some(v)).count();
    let (matches, mismatches) = (count(Verdict::Match), count(Verdict::Mismatch));
    let errors = entries.iter().filter(|e| e.error.is_some()).count();

    let mut r = RunReport::new("compare");
    r.n_particles = Some(n);
    r.detail("corpus", dir.display().to_string());
    r.detail("graphs", entries.len());
    r.detail("matches", matches);
    r.detail("mismatches", mismatches);
    r.detail("errors", errors);
    let shown: Vec<&CorpusEntry> = if out.json {
        entries.iter().collect()
    } else {
        entries.iter().filter(|e| e.verdict != Some(Verdict::Match)).collect()
    };
    r.detail("results", shown);
    r.verdict = Some(if mismatches == 0 { Verdict::Match } else { Verdict::Mismatch });
    let verdict = r.verdict;
    out.finish(r, started);
    if errors > 0 {
        return Err(InputError(format!("{errors} corpus file(s) could not be processed")));
    }
    Ok(outcome_of(verdict))
}

pub fn decompose_cmd(graph: &Path, out: &Output) -> CmdResult {
    let started = Instant::now();
    let (g, info) = load_graph(graph)?;
    let d = decompose(&g)?;
    let mut r = RunReport::new("decompose");
    r.input = Some(info);
    r.detail("beta1", betti1(&g)?);
    r.detail("connectivity", connectivity_level(&g));
    r.detail("cuts", &d.cuts);
    r.detail("components", &d.components);
    out.finish(r, started);
    Ok(Outcome::Success)
}

pub fn star(arms: usize, n: usize, out: &Output) -> CmdResult {
    let started = Instant::now();
    if arms < 1 || n < 1 {
        return Err(InputError("star needs at least one arm and one particle".into()));
    }
    let closed = beta_star(n as i64, arms as i64);
    let predicted = AbelianGroup::free(usize::try_from(closed).map_err(|_| InputError("negative closed form".into()))?);
    let g = sufficiently_subdivide(&families::star(arms), n).graph;
    let observed = h1(&build_complex(&g, n)?);
    let mut r = RunReport::new("star");
    r.n_particles = Some(n);
    r.detail("arms", arms);
    r.detail("closed_form", closed);
    r.predicted = Some(predicted.to_string());
    r.group = Some(observed.to_string());
    r.verdict = Some(if predicted == observed { Verdict::Match } else { Verdict::Mismatch });
    let outcome = outcome_of(r.verdict);
    out.finish(r, started);
    Ok(outcome)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TreeArg {
    Bfs,
    Dfs,
}

pub struct SpanningArgs<'a> {
    pub graph: &'a Path,
    pub n: usize,
    pub no_subdivide: bool,
    pub root: Option<usize>,
    pub tree: TreeArg,
    pub reverse_orders: bool,
}

pub fn spanning(a: SpanningArgs<'_>, out: &Output) -> CmdResult {
    let started = Instant::now();
    let (g, info) = load_graph(a.graph)?;
    let work = working_graph(&g, a.n, a.no_subdivide, Some(out));
    let c = build_complex(&work, a.n)?;
    let mut embedding = default_embedding(&work);
    if a.reverse_orders {
        embedding.iter_mut().for_each(|o| o.reverse());
    }
    let shape = match a.tree {
        TreeArg::Bfs => TreeShape::BreadthFirst,
        TreeArg::Dfs => TreeShape::DepthFirst,
    };
    let tree = rooted_ordered_tree(&work, a.root.unwrap_or_else(|| default_root(&work)), &embedding, &shape)?;
    let cycles = spanning_set_with(&c, &tree)?;
    let report = verify_spanning(&cycles, &c)?;

    let mut r = RunReport::new("spanning");
    r.input = Some(info);
    r.n_particles = Some(a.n);
    r.group = Some(h1(&c).to_string());
    r.detail("root", tree.root);
    r.detail("deleted_edges", &tree.deleted);
    r.detail("ab_cycles", cycles.iter().filter(|z| z.kind == CycleKind::Ab).count());
    r.detail("y_cycles", cycles.iter().filter(|z| z.kind == CycleKind::Y).count());
    r.detail("span", &report);
    if out.json {
        r.detail("cycles", &cycles);
    }
    r.verdict = Some(if report.spans { Verdict::Match } else { Verdict::Mismatch });
    let outcome = outcome_of(r.verdict);
    out.finish(r, started);
    Ok(outcome)
}
