//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pyrelab::search::{collect_parallel, SearchOptions};
use pyrelab::topology::boundary_matrix;
use pyrelab::{
    attribute_sources, burning_forest, config_space, enumerate_burnings, enumerate_homomorphisms,
    hom_count_bounds, homology, is_subcomplex, minimal_hom_sequence, orient, path_hom_sequence,
    smith_normal_form, spanning_tree, strong_config_space, union_hom_burning, validate,
    y_tree_sequence, Burning, BurningError, Coefficients, DecompositionError, Graph,
    IntegerMatrix, SimplicialComplex, VertexId,
};
use rand::seq::SliceRandom;
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn seqs(bs: &[Burning]) -> BTreeSet<Vec<VertexId>> {
    bs.iter().map(|b| b.sources().to_vec()).collect()
}

fn reflect(n: usize, s: &[VertexId]) -> Vec<VertexId> {
    s.iter().map(|&v| n as VertexId + 1 - v).collect()
}

fn close_under_reflection(n: usize, set: &BTreeSet<Vec<VertexId>>) -> BTreeSet<Vec<VertexId>> {
    set.iter().flat_map(|s| [s.clone(), reflect(n, s)]).collect()
}

fn set_of(lists: &[&[VertexId]]) -> BTreeSet<Vec<VertexId>> {
    lists.iter().map(|s| s.to_vec()).collect()
}

fn faces(lists: &[&[VertexId]]) -> Vec<Vec<VertexId>> {
    lists.iter().map(|s| s.to_vec()).collect()
}

fn check_hom_lemmas(b: &Burning) -> Result<(), String> {
    let s = b.sources();
    for (i, &a) in s.iter().enumerate() {
        for &c in &s[i + 1..] {
            let d = b.graph().distance(a, c).unwrap().finite();
            ensure(d.is_none_or(|d| d >= 3), || {
                format!("sources {a},{c} of {s:?} at distance {d:?}")
            })?;
        }
    }
    ensure(b.end_time() as usize == s.len() + 1, || {
        format!("{s:?}: end time {} != |S|+1", b.end_time())
    })
}

fn c1() -> Outcome {
    let start = Instant::now();
    let got = seqs(&enumerate_burnings(&path(4), None).collect::<Vec<_>>());
    within(start, Duration::from_secs(1), "P4 enumeration")?;
    let listed = set_of(&[&[1, 3], &[2, 4], &[1, 4]]);
    let want = close_under_reflection(4, &listed);
    ensure(want.len() == 6, || "reflection closure size".into())?;
    ensure(got == want, || format!("got {got:?}"))?;
    Ok(format!("{got:?}"))
}

fn c2() -> Outcome {
    match validate(&path(4), &[1, 2, 3, 4]) {
        Err(e @ BurningError::SourceAlreadyBurned(2)) => Ok(e.to_string()),
        other => Err(format!("got {other:?}")),
    }
}

fn path_hom_lists() -> Vec<(usize, BTreeSet<Vec<VertexId>>)> {
    vec![
        (2, set_of(&[&[1], &[2]])),
        (3, set_of(&[&[2]])),
        (4, set_of(&[&[1, 4], &[4, 1]])),
        (5, set_of(&[&[1, 4], &[2, 5]])),
        (6, set_of(&[&[2, 5], &[4, 1], &[3, 6]])),
        (7, set_of(&[&[3, 6], &[5, 2], &[1, 4, 7], &[7, 4, 1]])),
    ]
}

fn c3(homs: &mut Vec<Burning>) -> Outcome {
    let mut notes = Vec::new();
    for (n, listed) in path_hom_lists() {
        let start = Instant::now();
        let found: Vec<Burning> = enumerate_homomorphisms(&path(n)).collect();
        within(start, Duration::from_secs(1), &format!("P{n}"))?;
        let got = close_under_reflection(n, &seqs(&found));
        let want = close_under_reflection(n, &listed);
        ensure(got == want, || format!("P{n}: got {:?}, listed {want:?}", seqs(&found)))?;
        let raw = seqs(&found);
        if raw != listed {
            let extra: Vec<_> = raw.difference(&listed).collect();
            notes.push(format!("P{n} extra reflections {extra:?}"));
        }
        homs.extend(found);
    }
    Ok(if notes.is_empty() {
        "lists match exactly".into()
    } else {
        notes.join("; ")
    })
}

fn c4(homs: &mut Vec<Burning>) -> Outcome {
    let none: Vec<Burning> = enumerate_homomorphisms(&no_hom_tree()).collect();
    ensure(none.is_empty(), || format!("6-vertex tree: {:?}", seqs(&none)))?;
    let some: Vec<Burning> = enumerate_homomorphisms(&ambient_tree()).collect();
    let got = seqs(&some);
    ensure(got.contains(&vec![3, 7]), || format!("ambient tree: {got:?}"))?;
    homs.extend(some);
    Ok(format!("ambient tree homomorphisms {got:?}"))
}

fn c5() -> Outcome {
    for n in [3, 5, 7] {
        let found: Vec<Burning> = enumerate_homomorphisms(&cycle(n)).collect();
        ensure(found.is_empty(), || format!("C{n}: {:?}", seqs(&found)))?;
    }
    Ok("C3, C5, C7 have none".into())
}

fn corpus_50() -> Vec<Graph> {
    let mut rng = rng(0x5eed_0006);
    (0..50)
        .map(|_| {
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.0..0.6);
            random_connected(&mut rng, n, p)
        })
        .collect()
}

fn c6(homs: &mut Vec<Burning>) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for g in corpus_50() {
        if g.vertex_count() <= 2 {
            continue;
        }
        let witness = enumerate_burnings(&g, None).find(|b| !b.is_homomorphism());
        ensure(witness.is_some(), || format!("no non-homomorphism burning of {g:?}"))?;
        homs.extend(collect_parallel(&g, SearchOptions::homomorphisms()));
        checked += 1;
    }
    within(start, Duration::from_secs(60), "corpus")?;
    Ok(format!("{checked} graphs with |V|>2"))
}

fn c7(homs: &[Burning]) -> Outcome {
    ensure(!homs.is_empty(), || "no homomorphism burnings collected".into())?;
    for b in homs {
        ensure(b.is_homomorphism(), || format!("{:?} is not a homomorphism", b.sources()))?;
        check_hom_lemmas(b)?;
    }
    Ok(format!("{} homomorphism burnings", homs.len()))
}

fn c8() -> Outcome {
    let start = Instant::now();
    for n in 2..=15 {
        let bounds = hom_count_bounds(n).map_err(|e| e.to_string())?;
        let lens: Vec<usize> = collect_parallel(&path(n), SearchOptions::homomorphisms())
            .iter()
            .map(Burning::len)
            .collect();
        let (lo, hi) = (lens.iter().min(), lens.iter().max());
        ensure(lo == Some(&bounds.lower) && hi == Some(&bounds.upper), || {
            format!("P{n}: min/max {lo:?}/{hi:?}, bounds {}/{}", bounds.lower, bounds.upper)
        })?;
    }
    within(start, Duration::from_secs(300), "enumeration part")?;
    let start = Instant::now();
    let mut origins = std::collections::BTreeMap::new();
    for n in 2..=200 {
        let bounds = hom_count_bounds(n).map_err(|e| e.to_string())?;
        let g = path(n);
        let min = minimal_hom_sequence(n).map_err(|e| format!("n={n}: {e}"))?;
        let b = validate(&g, &min.sources).map_err(|e| format!("n={n}: {e}"))?;
        ensure(b.is_homomorphism() && b.len() == bounds.k, || {
            format!("n={n}: minimal {:?}, k={}", min.sources, bounds.k)
        })?;
        *origins.entry(format!("{:?}", min.origin)).or_insert(0) += 1;
        let max = path_hom_sequence(n).map_err(|e| format!("n={n}: {e}"))?;
        let b = validate(&g, &max).map_err(|e| format!("n={n}: {e}"))?;
        ensure(b.is_homomorphism() && b.len() == bounds.upper, || {
            format!("n={n}: maximal {max:?}")
        })?;
    }
    within(start, Duration::from_secs(10), "construction part")?;
    Ok(format!("minimal sequence origins {origins:?}"))
}

fn corpus_8() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 1..=8 {
        out.push((format!("P{n}"), path(n)));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), cycle(n)));
    }
    out.push(("T6".into(), no_hom_tree()));
    out.push(("Q7".into(), ambient_tree()));
    out.push(("Y8".into(), spider(3)));
    let mut rng = rng(0x5eed_0009);
    for i in 0..20 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(0.0..0.5);
        out.push((format!("R{i}"), random_connected(&mut rng, n, p)));
    }
    out
}

struct TreeCase {
    burning: Burning,
}

fn c9(tree_cases: &mut Vec<TreeCase>) -> Outcome {
    let start = Instant::now();
    let mut count = 0usize;
    for (name, g) in corpus_8() {
        for b in collect_parallel(&g, SearchOptions::burnings()) {
            let s = b.sources().to_vec();
            let fail = |e: DecompositionError| format!("{name} {s:?}: {e}");
            let a = attribute_sources(&b).map_err(fail)?;
            let f = burning_forest(&b, &a).map_err(fail)?;
            let forest = f.to_graph(&g);
            let fb = validate(&forest, &s).map_err(|e| format!("{name} {s:?} forest: {e}"))?;
            ensure(fb.is_homomorphism(), || format!("{name} {s:?}: forest burning not a homomorphism"))?;
            let t = spanning_tree(&b, &f).map_err(fail)?;
            ensure(t.is_tree() && t.is_spanning_subgraph_of(&g), || {
                format!("{name} {s:?}: {t:?} is not a spanning tree")
            })?;
            validate(&t, &s).map_err(|e| format!("{name} {s:?} tree: {e}"))?;
            if g.is_tree() {
                tree_cases.push(TreeCase { burning: b });
            }
            count += 1;
        }
    }
    within(start, Duration::from_secs(300), "corpus")?;
    Ok(format!("{count} burnings, {} on trees", tree_cases.len()))
}

fn c10(tree_cases: &[TreeCase]) -> Outcome {
    let mut hom = 0;
    for case in tree_cases {
        let b = &case.burning;
        let g = b.graph();
        let a = attribute_sources(b).map_err(|e| e.to_string())?;
        let d = orient(b, &a).map_err(|e| format!("{:?}: {e}", b.sources()))?;
        let mut undirected: Vec<(VertexId, VertexId)> =
            d.arcs.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        undirected.sort_unstable();
        ensure(undirected == g.edges(), || format!("{:?}: arcs {:?}", b.sources(), d.arcs))?;
        for &(tail, head) in &d.arcs {
            let diff = b.time(head).unwrap() as i64 - b.time(tail).unwrap() as i64;
            let ok = if b.is_homomorphism() { diff == 1 } else { diff == 0 || diff == 1 };
            ensure(ok, || format!("{:?}: arc ({tail},{head}) has difference {diff}", b.sources()))?;
        }
        hom += usize::from(b.is_homomorphism());
    }
    let c3 = validate(&cycle(3), &[1]).map_err(|e| e.to_string())?;
    let a = attribute_sources(&c3).map_err(|e| e.to_string())?;
    match orient(&c3, &a) {
        Err(DecompositionError::EqualLambdaInNonTree(..)) => {}
        other => return Err(format!("C3 (1): {other:?}")),
    }
    Ok(format!("{} tree burnings ({hom} homomorphisms); C3 refused", tree_cases.len()))
}

fn c11() -> Outcome {
    let table: [(usize, Vec<Vec<VertexId>>, Vec<Vec<VertexId>>); 4] = [
        (2, faces(&[&[1], &[2]]), faces(&[&[1], &[2]])),
        (3, faces(&[&[1, 3], &[2]]), faces(&[&[2]])),
        (4, faces(&[&[1, 3], &[1, 4], &[2, 4]]), faces(&[&[1, 4]])),
        (5, faces(&[&[1, 3, 5], &[1, 4], &[2, 4], &[2, 5]]), faces(&[&[1, 4], &[2, 5]])),
    ];
    for (n, delta, gamma) in table {
        let start = Instant::now();
        let d = config_space(&path(n));
        let g = strong_config_space(&path(n));
        within(start, Duration::from_secs(1), &format!("P{n}"))?;
        ensure(d.maximal_faces() == delta, || format!("Δ(P{n}) = {:?}", d.maximal_faces()))?;
        ensure(g.maximal_faces() == gamma, || format!("Γ(P{n}) = {:?}", g.maximal_faces()))?;
    }
    Ok("Δ and Γ of P2..P5 match".into())
}

fn c12() -> Outcome {
    let start = Instant::now();
    let gamma = strong_config_space(&path(9));
    let listed = faces(&[
        &[1, 4, 7],
        &[1, 4, 8],
        &[1, 4, 9],
        &[1, 5, 8],
        &[1, 6, 9],
        &[2, 5, 8],
        &[2, 5, 9],
        &[2, 6, 9],
        &[3, 6, 9],
    ]);
    ensure(gamma.maximal_faces() == listed, || format!("Γ(P9) = {:?}", gamma.maximal_faces()))?;
    let h = homology(&gamma, Coefficients::Integers).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(30), "Γ(P9)")?;
    ensure(h.betti == [1, 1, 0] && !h.has_torsion(), || format!("{h:?}"))?;
    Ok(format!("betti {:?}", h.betti))
}

fn c13() -> Outcome {
    let start = Instant::now();
    let gamma = strong_config_space(&spider(3));
    let h = homology(&gamma, Coefficients::Integers).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(10), "Γ(Y8)")?;
    ensure(h.betti == [1, 1, 0] && !h.has_torsion(), || format!("{h:?}"))?;
    Ok(format!("betti {:?}, maximal faces {:?}", h.betti, gamma.maximal_faces()))
}

fn c14() -> Outcome {
    let mut checked = 0;
    let graphs = corpus_8()
        .into_iter()
        .chain(corpus_50().into_iter().map(|g| ("random".to_string(), g)));
    for (name, g) in graphs {
        let gamma = strong_config_space(&g);
        if gamma.is_empty() {
            continue;
        }
        ensure(is_subcomplex(&gamma, &config_space(&g)), || format!("{name}: Γ ⊄ Δ"))?;
        checked += 1;
    }
    Ok(format!("{checked} graphs with nonempty Γ"))
}

fn c15() -> Outcome {
    for n in [3usize, 4] {
        let y = spider(n);
        let s = y_tree_sequence(n).map_err(|e| e.to_string())?;
        let b = validate(&y, &s).map_err(|e| e.to_string())?;
        ensure(b.is_homomorphism() && b.end_time() as usize == n && s.len() == n - 1, || {
            format!("Y{}: {s:?}", n * n - 1)
        })?;
    }
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in [3usize, 4] {
        let y = spider(n);
        let short: Vec<Burning> = collect_parallel(&y, SearchOptions::burnings().max_sources(n - 1))
            .into_iter()
            .filter(|b| b.len() == n - 1)
            .collect();
        ensure(!short.is_empty(), || format!("Y{}: no length {} burning", n * n - 1, n - 1))?;
        for b in &short {
            ensure(b.sources()[0] == 1, || format!("Y{}: {:?}", n * n - 1, b.sources()))?;
        }
        counts.push(short.len());
    }
    within(start, Duration::from_secs(600), "Y15 enumeration")?;
    Ok(format!("short burnings of Y8, Y15: {counts:?}, all start at 1"))
}

fn c16() -> Outcome {
    let mut rng = rng(0x5eed_0016);
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(1..=7);
        let g = if rng.gen_bool(0.5) {
            path(n as usize)
        } else {
            random_connected(&mut rng, n, 0.3)
        };
        let homs = collect_parallel(&g, SearchOptions::homomorphisms());
        let Some(bg) = homs.choose(&mut rng) else {
            continue;
        };
        let size = rng.gen_range(1..=10);
        let t = random_tree(&mut rng, size);
        let (radius, _) = t.radius_center().map_err(|e| e.to_string())?;
        if radius > bg.len() + 1 {
            continue;
        }
        let u = union_hom_burning(bg, &t).map_err(|e| format!("{:?}: {e}", bg.sources()))?;
        let b = &u.burning;
        ensure(b.is_homomorphism(), || format!("{:?} not a homomorphism", b.sources()))?;
        ensure(b.graph().vertex_count() == g.vertex_count() + t.vertex_count(), || {
            "wrong union size".into()
        })?;
        for (v, time) in bg.lambda() {
            ensure(b.time(v) == Some(time + 1), || format!("λ({v}) not shifted by one"))?;
        }
        done += 1;
    }
    Ok(format!("{done} triples"))
}

fn rp2() -> SimplicialComplex {
    SimplicialComplex::generated_by([
        [1, 2, 4],
        [1, 2, 6],
        [1, 3, 5],
        [1, 3, 6],
        [1, 4, 5],
        [2, 3, 4],
        [2, 3, 5],
        [2, 5, 6],
        [3, 4, 6],
        [4, 5, 6],
    ])
}

fn c17() -> Outcome {
    let complexes = [
        strong_config_space(&path(9)),
        strong_config_space(&spider(3)),
        config_space(&path(5)),
        config_space(&cycle(6)),
        rp2(),
    ];
    for k in &complexes {
        for q in 2..=k.dim().max(0) as usize + 1 {
            let dd = boundary_matrix(k, q - 1).mul(&boundary_matrix(k, q));
            ensure(dd.is_zero(), || format!("∂∂ ≠ 0 in degree {q} of {:?}", k.maximal_faces()))?;
        }
    }
    let snf = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
    ensure(snf.factors == [BigInt::from(2), BigInt::from(4)], || format!("{snf:?}"))?;
    let z = homology(&rp2(), Coefficients::Integers).map_err(|e| e.to_string())?;
    let f2 = homology(&rp2(), Coefficients::Prime(2)).map_err(|e| e.to_string())?;
    let f3 = homology(&rp2(), Coefficients::Prime(3)).map_err(|e| e.to_string())?;
    ensure(z.torsion[1] == [BigInt::from(2)], || format!("RP2 torsion {:?}", z.torsion))?;
    ensure(f2.betti[1] != z.betti[1], || format!("RP2 betti Z {:?}, mod 2 {:?}", z.betti, f2.betti))?;
    ensure(f3.betti == z.betti, || format!("RP2 mod 3 {:?}", f3.betti))?;
    Ok(format!(
        "RP2: Z betti {:?} torsion {:?}; mod 2 betti {:?}",
        z.betti, z.torsion, f2.betti
    ))
}

fn main() {
    let mut homs = Vec::new();
    let mut tree_cases = Vec::new();
    let mut results: Vec<(usize, &str, Outcome, Duration)> = Vec::new();
    let mut run = |id: usize, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        results.push((id, name, outcome, start.elapsed()));
    };
    run(1, "P4 burning sequences", &mut c1);
    run(2, "rejection of (1,2,3,4) on P4", &mut c2);
    run(3, "homomorphisms of P2..P7", &mut || c3(&mut homs));
    run(4, "tree without homomorphism", &mut || c4(&mut homs));
    run(5, "odd cycles", &mut c5);
    run(6, "non-homomorphism exists", &mut || c6(&mut homs));
    run(7, "homomorphism lemmas", &mut || c7(&homs));
    run(8, "path bounds sharpness", &mut c8);
    run(9, "spanning tree theorem", &mut || c9(&mut tree_cases));
    run(10, "digraph orientation", &mut || c10(&tree_cases));
    run(11, "configuration spaces of P2..P5", &mut c11);
    run(12, "Γ(P9)", &mut c12);
    run(13, "Γ(Y8)", &mut c13);
    run(14, "subcomplex inclusion", &mut c14);
    run(15, "spider family", &mut c15);
    run(16, "disjoint union", &mut c16);
    run(17, "homology oracles", &mut c17);

    let mut failed = 0;
    for (id, name, outcome, took) in &results {
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name} [{took:.2?}] {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name} [{took:.2?}] {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
