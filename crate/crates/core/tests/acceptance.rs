//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

mod oracles;

use colorclass::atlas::{enumerate_connected, enumerate_connected_free};
use colorclass::canon::{canonical_form, CanonicalForm};
use colorclass::chromatic::{
    chromatic_auto, chromatic_exact, color_chordal, color_o3_free, is_chordal, solve_claw_hammer_free,
    solve_claw_p5_free, solve_p5_c4_free, solve_with_deletion_set, Coloring, Method,
};
use colorclass::classifier::{atlas_table, Status};
use colorclass::embedding::is_free;
use colorclass::gadgets::reduce_to_k14_bull_free;
use colorclass::named::{claw, gem, hammer, named};
use colorclass::{Graph, Result, VertexSet};
use oracles::*;
use rand::Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

type Outcome = std::result::Result<String, String>;
type Criterion = fn() -> Outcome;

fn form(g: &Graph) -> CanonicalForm {
    canonical_form(g).unwrap()
}

fn pair(a: &Graph, b: &Graph) -> (CanonicalForm, CanonicalForm) {
    let (x, y) = (form(a), form(b));
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let table = atlas_table(5).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(table.summary.pairs == 496, || format!("{} pairs", table.summary.pairs))?;
    let open: BTreeSet<_> =
        table.entries.iter().filter(|e| e.verdict.status == Status::Open).map(|e| pair(&e.h1, &e.h2)).collect();

    let g = |s: &str| named(s).unwrap();
    let mut expected: BTreeSet<_> =
        [pair(&g("K1,3"), &g("bull")), pair(&g("K1,3"), &g("butterfly")), pair(&g("fork"), &g("bull"))].into();
    let excluded = [form(&g("K5")), form(&gem())];
    let mut cot = 0;
    for h in enumerate_connected(5).unwrap().with_order(5) {
        if is_line_graph_of_small_leaf_forest(&h.complement()) && !excluded.contains(&form(h)) {
            cot += 1;
            expected.insert(pair(&Graph::path(5), h));
        }
    }
    ensure(cot == 10, || format!("{cot} five-vertex co(T) graphs besides K5 and gem"))?;
    ensure(open == expected, || {
        format!("{} OPEN pairs, {} expected, symmetric difference {}", open.len(), expected.len(), open.symmetric_difference(&expected).count())
    })?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "496 pairs, {} NPC, {} POLY, 13 OPEN matching the expected set, {:.2?}",
        table.summary.npc, table.summary.poly, elapsed
    ))
}

fn criterion_2() -> Outcome {
    let table = atlas_table(4).map_err(|e| e.to_string())?;
    ensure(table.summary.pairs == 55, || format!("{} pairs", table.summary.pairs))?;
    let paths: Vec<CanonicalForm> = (1..=4).map(|k| form(&Graph::path(k))).collect();
    let in_p4 = |h: &Graph| paths.contains(&form(h));
    let special = [pair(&claw(), &named("paw").unwrap()), pair(&claw(), &Graph::complete(3))];
    for e in &table.entries {
        let want_poly = in_p4(&e.h1) || in_p4(&e.h2) || special.contains(&pair(&e.h1, &e.h2));
        let want = if want_poly { Status::Polynomial } else { Status::NpComplete };
        ensure(e.verdict.status == want, || {
            format!("{:?} / {:?}: got {:?}, expected {want:?}", e.h1, e.h2, e.verdict.status)
        })?;
    }
    Ok(format!("55 pairs, 0 OPEN, {} POLYNOMIAL as predicted", table.summary.poly))
}

type Solver = fn(&Graph) -> Result<Coloring>;

/// Name, graph, its forbidden pair, expected dispatch and chromatic number when known.
type PerfInstance = (&'static str, Graph, Vec<Graph>, Method, Option<usize>);

fn check_solver(name: &str, solve: Solver, g: &Graph) -> std::result::Result<(), String> {
    let c = solve(g).map_err(|e| format!("{name} failed on {g:?}: {e}"))?;
    ensure(c.is_proper(g), || format!("{name} returned an improper coloring on {g:?}"))?;
    let want = chromatic_exact(g).unwrap().k();
    ensure(c.k() == want, || format!("{name} gave {} instead of {want} on {g:?}", c.k()))
}

fn criterion_3() -> Outcome {
    let classes: [(&str, Solver, Vec<Graph>, Vec<Graph>); 3] = [
        ("claw,P5", solve_claw_p5_free, vec![claw(), Graph::path(5)], vec![Graph::cycle(4), Graph::cycle(5)]),
        (
            "claw,hammer",
            solve_claw_hammer_free,
            vec![claw(), hammer()],
            vec![Graph::cycle(6), Graph::cycle(7), Graph::cycle(5), Graph::cycle(8)],
        ),
        ("P5,C4", solve_p5_c4_free, vec![Graph::path(5), Graph::cycle(4)], vec![Graph::cycle(5)]),
    ];
    let mut report = Vec::new();
    for (i, (name, solve, forbidden, seeds)) in classes.into_iter().enumerate() {
        let members = enumerate_connected_free(9, &forbidden).map_err(|e| e.to_string())?;
        for g in members.iter() {
            check_solver(name, solve, g)?;
        }
        let mut r = rng(300 + i as u64);
        let member = |g: &Graph| is_free(g, &forbidden);
        let mut sampled = 0;
        let mut non_chordal = 0;
        while sampled < 500 {
            let seed = &seeds[r.gen_range(0..seeds.len())];
            let target = r.gen_range(10..=13);
            let Some(g) = grow_member(&mut r, seed, target, &member) else { continue };
            check_solver(name, solve, &g)?;
            let g2 = shuffled(&mut r, &g);
            check_solver(name, solve, &g2)?;
            non_chordal += usize::from(!is_chordal(&g).0);
            sampled += 1;
        }
        report.push(format!("{name}: {} exhaustive + {sampled} sampled ({non_chordal} non-chordal)", members.len()));
    }
    Ok(report.join("; "))
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let mut done = [0usize; 2];
    while done.iter().sum::<usize>() < 600 {
        let q = r.gen_range(1..=5);
        let m = r.gen_range(1..=13 - q);
        let chordal_base = r.gen_bool(0.5);
        let base = if chordal_base {
            let nodes = r.gen_range(1..=5);
            let b = random_chordal(&mut r, m, nodes, 5);
            if independence_number(&b) > 3 {
                continue;
            }
            b
        } else {
            random_o3_free(&mut r, m)
        };
        let mut g = base;
        for _ in 0..q {
            let p = r.gen_range(0.1..0.9);
            let nbrs: Vec<usize> = (0..g.n()).filter(|_| r.gen_bool(p)).collect();
            g = with_vertex(&g, &nbrs);
        }
        let perm = permutation(&mut r, g.n());
        let g = g.relabel(&perm);
        let v = VertexSet::from_slice(g.n(), &perm[m..]);
        let c = if chordal_base {
            solve_with_deletion_set(&g, &v, 4, color_chordal)
        } else {
            solve_with_deletion_set(&g, &v, 3, color_o3_free)
        }
        .map_err(|e| format!("failed on {g:?}: {e}"))?;
        ensure(c.is_proper(&g), || format!("improper coloring on {g:?}"))?;
        let want = chromatic_dp(&g);
        ensure(want == chromatic_exact(&g).unwrap().k(), || format!("oracles disagree on {g:?}"))?;
        ensure(c.k() == want, || format!("got {} instead of {want} on {g:?} with V = {:?}", c.k(), v.to_vec()))?;
        done[usize::from(chordal_base)] += 1;
    }
    Ok(format!("{} O3-free-based and {} chordal-based instances, zero mismatches", done[0], done[1]))
}

fn criterion_5() -> Outcome {
    let mut r = rng(5);
    for _ in 0..600 {
        let n = r.gen_range(1..=13);
        let g = random_o3_free(&mut r, n);
        let c = color_o3_free(&g).map_err(|e| e.to_string())?;
        ensure(c.is_proper(&g), || format!("improper on {g:?}"))?;
        let nu = matching_number(&g.complement());
        ensure(c.k() == n - nu, || format!("k = {} but n - nu = {} on {g:?}", c.k(), n - nu))?;
        let exact = chromatic_exact(&g).unwrap().k();
        ensure(c.k() == exact, || format!("k = {} but chi = {exact} on {g:?}", c.k()))?;
        ensure(exact == chromatic_dp(&g), || format!("oracles disagree on {g:?}"))?;
    }
    Ok("600 random O3-free graphs, zero mismatches".into())
}

fn criterion_6() -> Outcome {
    let mut r = rng(6);
    let forbidden = [Graph::complete_bipartite(1, 4), named("bull").unwrap()];
    let mut inputs: Vec<Graph> = vec![chvatal(), Graph::cycle(5), Graph::cycle(7), Graph::complete(2)];
    for _ in 0..10 {
        inputs.push(shuffled(&mut r, &chvatal()));
    }
    while inputs.len() < 250 {
        let n = r.gen_range(2..=11);
        inputs.push(random_connected_triangle_free_deg4(&mut r, n));
    }
    let (mut yes, mut no) = (0, 0);
    for g in &inputs {
        let red = reduce_to_k14_bull_free(g).map_err(|e| format!("{g:?}: {e}"))?;
        let o = &red.graph;
        ensure(is_free(o, &forbidden), || format!("output of {g:?} contains K1,4 or bull"))?;
        ensure(o.n() <= 4 * g.n() && o.n() == g.n() + 3 * red.trace.len() && red.trace.len() <= g.n(), || {
            format!("size bound violated on {g:?}")
        })?;
        let before = three_colorable(g);
        ensure(before == three_colorable(o), || format!("3-colorability changed on {g:?}"))?;
        if before {
            yes += 1;
        } else {
            no += 1;
        }
    }
    ensure(no > 0, || "no non-3-colorable input was exercised".into())?;
    Ok(format!("{} inputs ({yes} 3-colorable, {no} not), all outputs K1,4- and bull-free", inputs.len()))
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let mut largest = 0;
    for _ in 0..600 {
        let n = r.gen_range(1..=40);
        let (nodes, reach) = (r.gen_range(1..=2 * n), r.gen_range(1..=8));
        let g = random_chordal(&mut r, n, nodes, reach);
        let c = color_chordal(&g).map_err(|e| e.to_string())?;
        ensure(c.is_proper(&g), || format!("improper on {g:?}"))?;
        let omega = clique_number(&g);
        ensure(c.k() == omega, || format!("{} colors but omega = {omega} on {g:?}", c.k()))?;
        largest = largest.max(omega);
    }
    Ok(format!("600 chordal graphs with n <= 40 (omega up to {largest}), all optimal"))
}

fn blown_up_cycle(k: usize, bag: usize) -> Graph {
    let n = k * bag;
    edges_of(n, |u, v| {
        let (a, b) = (u / bag, v / bag);
        a == b || (a + 1) % k == b || (b + 1) % k == a
    })
}

fn perf_instances() -> Vec<PerfInstance> {
    let c5 = blown_up_cycle(5, 6);
    let clawp5 = c5.disjoint_union(&c5);

    // C6 plus a 54-clique complete to cycle vertices 0, 1, 3, 4.
    let clawhammer = edges_of(60, |u, v| match (u < 6, v < 6) {
        (true, true) => (u + 1) % 6 == v || (v + 1) % 6 == u,
        (false, false) => true,
        (true, false) => u % 3 != 2,
        (false, true) => v % 3 != 2,
    });

    // Blown-up C5 with 8-cliques, a 3-clique complete to it, and a 17-clique joined to the 3-clique.
    let p5c4 = {
        let core = blown_up_cycle(5, 8);
        let n = 60;
        edges_of(n, |u, v| {
            let part = |x: usize| if x < 40 { 0 } else if x < 43 { 1 } else { 2 };
            match (part(u), part(v)) {
                (0, 0) => core.has_edge(u, v),
                (1, _) | (_, 1) => true,
                (2, 2) => true,
                _ => false,
            }
        })
    };
    vec![
        ("clawp5", clawp5, vec![claw(), Graph::path(5)], Method::ClawP5, Some(15)),
        ("clawhammer", clawhammer, vec![claw(), hammer()], Method::ClawHammer, Some(56)),
        ("p5c4", p5c4, vec![Graph::path(5), Graph::cycle(4)], Method::P5C4, Some(23)),
    ]
}

fn criterion_8() -> Outcome {
    let mut report = Vec::new();
    for (name, g, forbidden, method, chi) in perf_instances() {
        ensure(g.n() == 60 && g.is_connected() == (name != "clawp5"), || format!("{name}: bad construction"))?;
        ensure(is_free(&g, &forbidden), || format!("{name}: instance is not in its class"))?;
        let start = Instant::now();
        let (c, m) = chromatic_auto(&g).map_err(|e| format!("{name}: {e}"))?;
        let t = start.elapsed();
        ensure(m == method, || format!("{name}: dispatched to {m:?}"))?;
        ensure(c.is_proper(&g), || format!("{name}: improper coloring"))?;
        ensure(c.k() >= clique_number(&g), || format!("{name}: below the clique number"))?;
        if let Some(want) = chi {
            ensure(c.k() == want, || format!("{name}: chi {} instead of {want}", c.k()))?;
        }
        ensure(t < Duration::from_secs(10), || format!("{name}: took {t:?}"))?;
        report.push(format!("{name} chi={} in {t:.2?}", c.k()));
    }
    Ok(report.join(", "))
}

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("atlas of connected pairs on at most 5 vertices", criterion_1),
        ("connected pairs on at most 4 vertices", criterion_2),
        ("structural solvers agree with the exact oracle", criterion_3),
        ("deletion-set solver agrees with the exact oracle", criterion_4),
        ("O3-free coloring equals n minus matching number", criterion_5),
        ("diamond reduction contracts", criterion_6),
        ("chordal coloring uses omega colors", criterion_7),
        ("60-vertex performance smoke", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} [{:.1?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why} [{:.1?}]", i + 1, start.elapsed());
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
