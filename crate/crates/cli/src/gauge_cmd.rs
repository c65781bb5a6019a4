use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Subcommand;
use confspace::configspace::{build_complex, CellComplex, Chain};
use confspace::gauge::{
    ab_statistics_split, build_n_particle, cell2_fluxes, flux, is_integer, is_topological, lift_subdivision,
    reduce_mod_one, solve_from_fluxes, GaugePotential, Phase, PotentialEntry,
};
use confspace::graph::{is_sufficiently_subdivided, Graph};
use confspace::spanning::spanning_set_for;
use serde::{Deserialize, Serialize};

use crate::report::{load_graph, read_json, write_stdout, CmdResult, InputError, Outcome, Output, RunReport, Verdict};

#[derive(Debug, Subcommand)]
pub enum GaugeCommand {
    /// Topologicality and fluxes through spanning-set generators.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        potential: PathBuf,
        /// Particle count; inferred from the entries when omitted.
        #[arg(short = 'n')]
        n: Option<usize>,
    },
    /// Splits a two-particle potential into AB and statistics parts.
    Split {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        potential: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Transports a two-particle potential to the graph with edge `p q` subdivided.
    Lift {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        potential: PathBuf,
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        edge: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Builds the n-particle potential from two-particle statistics and
    /// one-particle edge phases.
    Embed {
        #[arg(long)]
        graph: PathBuf,
        /// Pure statistics two-particle potential.
        #[arg(long)]
        statistics: PathBuf,
        /// One-particle potential (entries with no spectators); zero when omitted.
        #[arg(long)]
        omega: Option<PathBuf>,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Finds a topological potential with prescribed fluxes.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        /// JSON list of `{"start": [...], "moves": [[from, to], ...], "phase": "p/q"}`.
        #[arg(long)]
        targets: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn load_potential(path: &Path, n: Option<usize>) -> Result<GaugePotential, InputError> {
    let entries: Vec<PotentialEntry> = read_json(path)?;
    let n = match (n, entries.first()) {
        (Some(n), _) => n,
        (None, Some(e)) => e.spectators.len() + 1,
        (None, None) => return Err(InputError(format!("{}: empty potential, pass -n", path.display()))),
    };
    Ok(GaugePotential::from_entries(n, &entries)?)
}

fn emit<T: Serialize>(doc: &T, out: Option<&Path>) -> Result<(), InputError> {
    let text = serde_json::to_string_pretty(doc).expect("documents serialize");
    match out {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| InputError(format!("{}: {e}", path.display()))),
        None => {
            write_stdout(&(text + "\n"));
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct GeneratorFlux {
    kind: confspace::spanning::CycleKind,
    provenance: confspace::spanning::Provenance,
    flux: String,
}

fn complex_for(g: &Graph, n: usize) -> Result<CellComplex, InputError> {
    Ok(build_complex(g, n)?)
}

pub fn run(cmd: GaugeCommand, out: &Output) -> CmdResult {
    let started = Instant::now();
    match cmd {
        GaugeCommand::Check { graph, potential, n } => {
            let (g, info) = load_graph(&graph)?;
            let p = load_potential(&potential, n)?;
            let c = complex_for(&g, p.particles())?;
            let bad = cell2_fluxes(&p, &c)?.iter().filter(|f| !is_integer(f)).count();
            let mut r = RunReport::new("gauge check");
            r.input = Some(info);
            r.n_particles = Some(p.particles());
            r.detail("topological", bad == 0);
            r.detail("non_integer_2cells", bad);
            if is_sufficiently_subdivided(&g, p.particles()) {
                let (_, cycles) = spanning_set_for(&c)?;
                let fluxes = cycles
                    .iter()
                    .map(|z| {
                        let f = flux(&p, &c, &z.chain)?;
                        Ok(GeneratorFlux {
                            kind: z.kind,
                            provenance: z.provenance.clone(),
                            flux: reduce_mod_one(&f).to_string(),
                        })
                    })
                    .collect::<Result<Vec<_>, InputError>>()?;
                r.detail("generator_fluxes", fluxes);
            } else {
                out.notice("graph is not sufficiently subdivided; generator fluxes skipped");
            }
            r.verdict = Some(if bad == 0 { Verdict::Match } else { Verdict::Mismatch });
            out.finish(r, started);
            Ok(if bad == 0 { Outcome::Success } else { Outcome::Mismatch })
        }
        GaugeCommand::Split { graph, potential, out: path } => {
            let (g, _) = load_graph(&graph)?;
            let p = load_potential(&potential, Some(2))?;
            let (ab, stat) = ab_statistics_split(&p, &g)?;
            #[derive(Serialize)]
            struct SplitDoc {
                ab: Vec<PotentialEntry>,
                statistics: Vec<PotentialEntry>,
            }
            emit(&SplitDoc { ab: ab.to_entries(), statistics: stat.to_entries() }, path.as_deref())?;
            Ok(Outcome::Success)
        }
        GaugeCommand::Lift { graph, potential, edge, out: path } => {
            let (g, _) = load_graph(&graph)?;
            let p = load_potential(&potential, Some(2))?;
            let c = complex_for(&g, 2)?;
            if !is_topological(&p, &c) {
                return Err(InputError("potential is not topological".into()));
            }
            let lift = lift_subdivision(&p, &c, edge[0], edge[1])?;
            #[derive(Serialize)]
            struct LiftDoc {
                graph: confspace::graph::GraphFile,
                new_vertex: usize,
                potential: Vec<PotentialEntry>,
            }
            let doc = LiftDoc {
                graph: lift.graph.to_file(),
                new_vertex: lift.new_vertex,
                potential: lift.potential.to_entries(),
            };
            emit(&doc, path.as_deref())?;
            Ok(Outcome::Success)
        }
        GaugeCommand::Embed { graph, statistics, omega, n, out: path } => {
            let (g, _) = load_graph(&graph)?;
            let stat = load_potential(&statistics, Some(2))?;
            let omega1: BTreeMap<(usize, usize), Phase> = match omega {
                Some(file) => {
                    load_potential(&file, Some(1))?.values().map(|(cell, v)| (cell.edge, v.clone())).collect()
                }
                None => BTreeMap::new(),
            };
            if !is_sufficiently_subdivided(&g, n) {
                return Err(InputError(format!("graph is not sufficiently subdivided for {n} particles")));
            }
            let p = build_n_particle(&stat, &omega1, &g, n)?;
            emit(&p.to_entries(), path.as_deref())?;
            Ok(Outcome::Success)
        }
        GaugeCommand::Solve { graph, targets, n, out: path } => {
            #[derive(Deserialize)]
            struct Target {
                start: Vec<usize>,
                moves: Vec<[usize; 2]>,
                phase: String,
            }
            let (g, _) = load_graph(&graph)?;
            let c = complex_for(&g, n)?;
            let raw: Vec<Target> = read_json(&targets)?;
            let mut parsed: Vec<(Chain, Phase)> = Vec::new();
            for t in raw {
                let moves: Vec<(usize, usize)> = t.moves.iter().map(|m| (m[0], m[1])).collect();
                let chain = c.path_chain(&t.start, &moves)?;
                let phase: Phase =
                    t.phase.trim().parse().map_err(|_| InputError(format!("invalid phase {:?}", t.phase)))?;
                parsed.push((chain, phase));
            }
            let p = solve_from_fluxes(&c, &parsed)?;
            emit(&p.to_entries(), path.as_deref())?;
            Ok(Outcome::Success)
        }
    }
}
