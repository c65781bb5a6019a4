//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL
//! line with its runtime; the process exits nonzero if any fails.

mod common;

use common::gauge::{chain, exchange_on_cycle, labeled, random_phase, random_potential, random_statistics, y_exchange};

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use confspace::configspace::build_complex;
use confspace::connectivity::{
    alpha_star, alpha_star_recursive, beta_star, beta_star_inclusion_exclusion, n1_of_cut, n1_two_particle, predict_h1,
};
use confspace::families;
use confspace::gauge::{
    build_n_particle, equal_mod_one, flux, is_topological, lift_subdivision, map_chain_to_subdivision, phase,
    solve_from_fluxes, GaugeError, Phase,
};
use confspace::graph::{betti1, is_sufficiently_subdivided, sufficiently_subdivide, Graph};
use confspace::homology::{h1, AbelianGroup};
use confspace::spanning::{
    default_embedding, default_root, rooted_ordered_tree, spanning_set_for, spanning_set_with, verify_spanning,
    TreeShape,
};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = Result<String, String>;

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn h1_of(g: &Graph, n: usize) -> AbelianGroup {
    h1(&build_complex(g, n).expect("complex builds"))
}

fn criterion_1() -> Check {
    ensure(h1_of(&families::cycle(3), 2) == AbelianGroup::free(1), || "triangle".into())?;
    ensure(h1_of(&families::y_graph(), 2) == AbelianGroup::free(1), || "Y".into())?;
    let lasso = families::lasso();
    ensure(h1_of(&lasso, 2) == AbelianGroup::free(2), || "lasso".into())?;
    // Tail 0, junction 1, loop 1 - 2 - 3.
    let c = build_complex(&lasso, 2).unwrap();
    let exchange = chain(&c, &exchange_on_cycle(&[1, 2, 3], 2, &[]));
    let ab = chain(&c, &exchange_on_cycle(&[1, 2, 3], 1, &[0]));
    let y = chain(&c, &y_exchange(0, 1, 2, 3, &[]));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut nontrivial = false;
    for trial in 0..20 {
        let p = random_potential(&c, &mut rng);
        let lhs = flux(&p, &c, &exchange).unwrap();
        let rhs = flux(&p, &c, &ab).unwrap() + flux(&p, &c, &y).unwrap();
        ensure(equal_mod_one(&lhs, &rhs), || format!("lasso relation fails on trial {trial}: {lhs} vs {rhs}"))?;
        nontrivial |= !equal_mod_one(&flux(&p, &c, &y).unwrap(), &Phase::zero());
    }
    ensure(nontrivial, || "exchange fluxes were all trivial".into())?;
    Ok("triangle Z, Y Z, lasso Z^2, lasso relation on 20 potentials".into())
}

fn criterion_2() -> Check {
    let expected = [
        (families::complete(5), AbelianGroup::new(6, &[2])),
        (families::complete_bipartite(3, 3), AbelianGroup::new(4, &[2])),
    ];
    let mut seen = Vec::new();
    for (g, want) in &expected {
        let got = h1_of(g, 2);
        let predicted = predict_h1(g, 2).unwrap().group;
        ensure(&got == want && &predicted == want, || format!("{:?}: SNF {got}, predicted {predicted}", g.name()))?;
        seen.push(got.to_string());
    }
    Ok(format!("K5 {}, K3,3 {}", seen[0], seen[1]))
}

fn criterion_3() -> Check {
    let planar = [families::wheel(4), families::wheel(5), families::octahedron(), families::prism()];
    let nonplanar = [families::complete(5), families::complete_bipartite(3, 3)];
    for g in planar.iter().chain(&nonplanar) {
        let b = betti1(g).unwrap();
        let want = if planar.iter().any(|p| p == g) { AbelianGroup::free(b + 1) } else { AbelianGroup::new(b, &[2]) };
        let got = h1_of(g, 2);
        let predicted = predict_h1(g, 2).unwrap().group;
        ensure(got == want && predicted == want, || {
            format!("{:?}: SNF {got}, closed form {want}, predicted {predicted}", g.name())
        })?;
    }
    Ok("W4, W5, octahedron, prism free of rank b1+1; K5, K3,3 rank b1 plus Z_2".into())
}

fn criterion_4() -> Check {
    let cases = [(3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4)];
    let results: Vec<Result<(), String>> = cases
        .par_iter()
        .map(|&(e, n)| {
            let closed = beta_star(n as i64, e as i64) as usize;
            let g = sufficiently_subdivide(&families::star(e), n).graph;
            let got = h1_of(&g, n);
            ensure(got == AbelianGroup::free(closed), || format!("S{e}, n={n}: closed {closed}, SNF {got}"))
        })
        .collect();
    results.into_iter().collect::<Result<Vec<_>, _>>()?;
    ensure(beta_star(3, 3) == 3 && beta_star(4, 5) == 71, || "anchor values".into())?;
    Ok("8 star cases, beta(3,3) = 3, beta(4,5) = 71".into())
}

fn criterion_5() -> Check {
    let mut checked = 0;
    for e in 2..=12 {
        for k in 2..=e {
            ensure(alpha_star_recursive(k, e) == alpha_star(k, e), || format!("alpha k={k} E={e}"))?;
            checked += 1;
        }
    }
    for n in 2..=8 {
        for e in 3..=8 {
            ensure(beta_star_inclusion_exclusion(n, e) == beta_star(n, e), || format!("beta n={n} E={e}"))?;
            checked += 1;
        }
    }
    for nu in 2..=12 {
        for mu in 2..=nu {
            ensure(n1_of_cut(mu, nu, 2) == n1_two_particle(mu, nu), || format!("n1 mu={mu} nu={nu}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} identities"))
}

fn criterion_6() -> Check {
    let graphs = [
        families::cycle(3),
        families::cycle(4),
        families::complete(4),
        families::wheel(4),
        families::complete_bipartite(3, 3),
    ];
    let results: Vec<Result<String, String>> = graphs
        .par_iter()
        .map(|g| {
            let two = h1_of(&sufficiently_subdivide(g, 2).graph, 2);
            let three = h1_of(&sufficiently_subdivide(g, 3).graph, 3);
            ensure(two == three, || format!("{:?}: n=2 {two}, n=3 {three}", g.name()))?;
            Ok(two.to_string())
        })
        .collect();
    let groups = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(groups.join(", "))
}

fn criterion_7() -> Check {
    let mut graphs: Vec<Graph> =
        common::connected_graphs_up_to(7).into_iter().filter(|g| g.vertex_count() >= 2).collect();
    let exhaustive = graphs.len();
    graphs.extend(common::random_connected_graphs(200, 8, 9, 0x5eed));
    let mismatches: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let oracle = h1_of(g, 2);
            let predicted = predict_h1(g, 2).ok()?.group;
            (oracle != predicted).then(|| format!("{:?}: {oracle} vs {predicted}", g.edges()))
        })
        .collect();
    let errors = graphs.par_iter().filter(|g| predict_h1(g, 2).is_err()).count();
    ensure(mismatches.is_empty() && errors == 0, || {
        format!("{} mismatches, {errors} errors, first {:?}", mismatches.len(), mismatches.first())
    })?;
    Ok(format!("{exhaustive} exhaustive + 200 random graphs, 0 mismatches"))
}

fn random_omega(g: &Graph, rng: &mut ChaCha8Rng) -> BTreeMap<(usize, usize), Phase> {
    g.edges().iter().map(|&e| (e, random_phase(rng))).collect()
}

fn lasso_recursion(n: usize, rng: &mut ChaCha8Rng) -> Result<(), String> {
    // A tail ending at the junction, then a loop of n + 1 vertices; ids are labels - 1.
    let (g, tail, junction, loop_) = match n {
        3 => (labeled(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)]), 1usize, 2usize, vec![2, 3, 4, 5]),
        4 => (labeled(8, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)]), 2, 3, vec![3, 4, 5, 6, 7]),
        _ => unreachable!(),
    };
    ensure(is_sufficiently_subdivided(&g, n), || format!("lasso for n={n} is not sufficiently subdivided"))?;
    let m = loop_.len();
    let c = build_complex(&g, n).unwrap();
    let big = chain(&c, &exchange_on_cycle(&loop_, n, &[]));
    let small = chain(&c, &exchange_on_cycle(&loop_, n - 1, &[tail]));
    // Y at the junction, arms: tail, the two loop neighbours; the rest of the loop holds n - 2 particles.
    let held: Vec<usize> = loop_[2..m - 1].to_vec();
    ensure(held.len() == n - 2, || "loop size".into())?;
    let y = chain(&c, &y_exchange(tail, junction, loop_[1], loop_[m - 1], &held));
    let mut nontrivial = false;
    for trial in 0..10 {
        let from_generators = random_potential(&c, rng);
        let stat = random_statistics(&g, rng);
        let embedded = build_n_particle(&stat, &random_omega(&g, rng), &g, n).map_err(|e| e.to_string())?;
        for p in [&from_generators, &embedded] {
            let lhs = flux(p, &c, &big).unwrap();
            let rhs = flux(p, &c, &small).unwrap() + flux(p, &c, &y).unwrap();
            ensure(equal_mod_one(&lhs, &rhs), || format!("n={n} trial {trial}: {lhs} vs {rhs}"))?;
            nontrivial |= !equal_mod_one(&flux(p, &c, &y).unwrap(), &Phase::zero());
        }
    }
    ensure(nontrivial, || format!("n={n}: exchange fluxes were all trivial"))
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut built = 0;
    for base in [families::lasso(), families::complete(4), families::wheel(4)] {
        let g = sufficiently_subdivide(&base, 3).graph;
        for n in [2, 3] {
            for _ in 0..3 {
                let stat = random_statistics(&g, &mut rng);
                let p = build_n_particle(&stat, &random_omega(&g, &mut rng), &g, n).map_err(|e| e.to_string())?;
                ensure(is_topological(&p, &build_complex(&g, n).unwrap()), || format!("{:?} n={n}", base.name()))?;
                built += 1;
            }
        }
    }
    lasso_recursion(3, &mut rng)?;
    lasso_recursion(4, &mut rng)?;

    let k4 = families::complete(4);
    let c = build_complex(&k4, 2).unwrap();
    let (_, cycles) = spanning_set_for(&c).unwrap();
    let mut pairs = 0;
    for trial in 0..50 {
        let p = random_potential(&c, &mut rng);
        let (u, v) = k4.edges()[rng.gen_range(0..k4.edge_count())];
        let lift = lift_subdivision(&p, &c, u, v).map_err(|e| format!("lift {trial}: {e}"))?;
        let new = build_complex(&lift.graph, 2).unwrap();
        ensure(is_topological(&lift.potential, &new), || format!("lift {trial} not topological"))?;
        for z in cycles.iter().map(|z| z.chain.clone()).chain((0..c.cell_counts().2).map(|s| c.cell2_boundary(s))) {
            let mapped = map_chain_to_subdivision(&z, &c, &new, u, v, lift.new_vertex).unwrap();
            let before = flux(&p, &c, &z).unwrap();
            let after = flux(&lift.potential, &new, &mapped).unwrap();
            ensure(equal_mod_one(&before, &after), || format!("lift {trial} edge ({u},{v}): {before} vs {after}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{built} embedded potentials topological, lasso recursion n=3,4, 50 lifts / {pairs} cycle pairs"))
}

fn criterion_9() -> Check {
    let c = build_complex(&families::complete(5), 2).unwrap();
    let z = chain(&c, &y_exchange(1, 0, 2, 3, &[]));
    let half = solve_from_fluxes(&c, &[(z.clone(), phase(1, 2))]).map_err(|e| e.to_string())?;
    ensure(equal_mod_one(&flux(&half, &c, &z).unwrap(), &phase(1, 2)), || "flux 1/2 not attained".into())?;
    ensure(is_topological(&half, &c), || "1/2 potential not topological".into())?;
    match solve_from_fluxes(&c, &[(z, phase(1, 3))]) {
        Err(GaugeError::UnrealizablePhase) => Ok("1/2 realized, 1/3 unrealizable phase".into()),
        Err(e) => Err(format!("1/3 failed with {e}")),
        Ok(_) => Err("1/3 was realized".into()),
    }
}

fn criterion_10() -> Check {
    let mut cases: Vec<(String, Graph, usize)> = Vec::new();
    for n in 2..=4 {
        for (name, g) in [
            ("triangle", families::cycle(3)),
            ("Y", families::y_graph()),
            ("lasso", families::lasso()),
            ("S4", families::star(4)),
            ("S5", families::star(5)),
        ] {
            cases.push((format!("{name} n={n}"), sufficiently_subdivide(&g, n).graph, n));
        }
    }
    for (name, g) in [
        ("K4", families::complete(4)),
        ("K5", families::complete(5)),
        ("W4", families::wheel(4)),
        ("K3,3", families::complete_bipartite(3, 3)),
    ] {
        cases.push((format!("{name} n=2"), g, 2));
    }
    let results: Vec<Result<(), String>> = cases
        .par_iter()
        .map(|(name, g, n)| {
            let c = build_complex(g, *n).unwrap();
            let (_, cycles) = spanning_set_for(&c).map_err(|e| format!("{name}: {e}"))?;
            let report = verify_spanning(&cycles, &c).map_err(|e| format!("{name}: {e}"))?;
            ensure(report.spans, || format!("{name} does not span"))
        })
        .collect();
    results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let example = families::spanning_example();
    let c = build_complex(&example, 3).unwrap();
    let tree =
        rooted_ordered_tree(&example, 0, &default_embedding(&example), &TreeShape::Deleted(vec![(0, 12), (7, 11)]))
            .map_err(|e| e.to_string())?;
    let report = verify_spanning(&spanning_set_with(&c, &tree).unwrap(), &c).unwrap();
    ensure(report.spans, || "13-vertex example, n=3".into())?;

    let k5 = families::complete(5);
    let c = build_complex(&k5, 2).unwrap();
    let forward = default_embedding(&k5);
    let reversed: Vec<Vec<usize>> = forward.iter().map(|o| o.iter().rev().copied().collect()).collect();
    for (label, order) in [("ascending", forward), ("descending", reversed)] {
        let tree = rooted_ordered_tree(&k5, default_root(&k5), &order, &TreeShape::BreadthFirst).unwrap();
        let report = verify_spanning(&spanning_set_with(&c, &tree).unwrap(), &c).unwrap();
        ensure(report.spans, || format!("K5 with {label} cyclic orders"))?;
    }
    Ok(format!("{} fixtures, 13-vertex example n=3, K5 under two cyclic orders", cases.len()))
}

type Criterion = (&'static str, Duration, fn() -> Check);

fn main() {
    let criteria: [Criterion; 10] = [
        ("worked examples and lasso relation", Duration::from_secs(1), criterion_1),
        ("Kuratowski pair", Duration::from_secs(10), criterion_2),
        ("3-connected dichotomy", Duration::from_secs(30), criterion_3),
        ("star closed form", Duration::from_secs(600), criterion_4),
        ("identity suite", Duration::from_secs(1), criterion_5),
        ("stabilization", Duration::from_secs(300), criterion_6),
        ("predictor-oracle corpus", Duration::from_secs(1800), criterion_7),
        ("gauge contract", Duration::from_secs(60), criterion_8),
        ("torsion-restricted phases", Duration::from_secs(10), criterion_9),
        ("spanning set", Duration::from_secs(120), criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = started.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= *budget {
                Ok(detail)
            } else {
                Err(format!("{detail}; exceeded {budget:?}"))
            }
        });
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
