mod support;

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::{dense_fixture, heavy_fixture, s, squad_fixture, tritur, write_graph};
use tritur_core::booster::{
    certify_booster, classify_edges, graver_triangle, initial_configuration, regularise, scale_k,
};
use tritur_core::certificate::{parse_records, Record};
use tritur_core::constructions::{
    andrasfai, blowup, compose_extremal, light_vertices, pg_incidence, raise_min_degree,
    random_deletion_free, sample_tripartite, standard_weighting, ConstructionRecipe,
};
use tritur_core::graph::{BipartiteGraph, Part, TripartiteGraph};
use tritur_core::patterns::{
    contains_ktt, contains_kttt, extract_dense_core, find_triangle, meets_dense_core_bound,
    SearchConfig,
};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == t)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

fn naive_ktt(h: &BipartiteGraph, t: usize) -> bool {
    subsets(h.left_size(), t).into_iter().any(|ls| {
        (0..h.right_size())
            .filter(|&r| ls.iter().all(|&l| h.has_edge(l, r)))
            .count()
            >= t
    })
}

fn naive_kttt(g: &TripartiteGraph, t: usize) -> bool {
    let [s1, s2, _] = g.part_sizes();
    let (o1, o2) = (g.part_range(Part::V1).start, g.part_range(Part::V2).start);
    let ys: Vec<Vec<usize>> = subsets(s2, t)
        .into_iter()
        .map(|y| y.iter().map(|&i| o2 + i).collect())
        .collect();
    subsets(s1, t).into_iter().any(|x| {
        let x: Vec<usize> = x.iter().map(|&i| o1 + i).collect();
        ys.iter().any(|y| {
            x.iter().all(|&a| y.iter().all(|&b| g.has_edge(a, b)))
                && g.part_range(Part::V3)
                    .filter(|&c| x.iter().chain(y).all(|&v| g.has_edge(v, c)))
                    .count()
                    >= t
        })
    })
}

fn random_bipartite(l: usize, r: usize, p: f64, rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let edges: Vec<(usize, usize)> = (0..l)
        .flat_map(|a| (0..r).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    BipartiteGraph::from_edges(l, r, edges).unwrap()
}

/// Densities differ per part pair, so forward degrees spread over `0..=n`.
fn skewed(n: usize, probs: [f64; 3], rng: &mut ChaCha8Rng) -> TripartiteGraph {
    let g = TripartiteGraph::complete([n; 3]);
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| {
            let pair = match (g.part_of(u), g.part_of(v)) {
                (Part::V1, Part::V2) => 0,
                (Part::V2, Part::V3) => 1,
                _ => 2,
            };
            rng.gen_bool(probs[pair])
        })
        .collect();
    TripartiteGraph::from_edges([n; 3], edges).unwrap()
}

fn dense_sample(n: usize, tau: usize, rng: &mut ChaCha8Rng) -> TripartiteGraph {
    let probs = [
        rng.gen_range(0.05..1.0),
        rng.gen_range(0.05..1.0),
        rng.gen_range(0.05..1.0),
    ];
    raise_min_degree(&skewed(n, probs, rng), n + tau, rng.gen()).unwrap()
}

fn andrasfai_suite() -> Check {
    for k in 1..=10 {
        let g = andrasfai(k).map_err(|e| e.to_string())?;
        ensure!(g.order() == 3 * k - 1, "k={k}: order {}", g.order());
        ensure!(g.regular_degree() == Some(k), "k={k}: not {k}-regular");
        ensure!(g.find_triangle().is_none(), "k={k}: triangle");
    }
    Ok("k = 1..10 triangle-free, k-regular on 3k-1 vertices".into())
}

fn weighting_suite() -> Check {
    for k in 2..=8 {
        let base = andrasfai(k + 1).map_err(|e| e.to_string())?;
        let w = standard_weighting(k).map_err(|e| e.to_string())?;
        ensure!(
            w.part_totals(&base) == Some([3 * k; 3]),
            "k={k}: part totals {:?}",
            w.part_totals(&base)
        );
        let (x, y) = light_vertices(k);
        ensure!((x, y) == (0, 2 * k + 1), "k={k}: light vertices {x}, {y}");
        for v in 0..base.order() {
            let expect = if v == x || v == y { 3 * k } else { 3 * k + 1 };
            ensure!(
                w.window_sum(&base, v) == expect,
                "k={k} v={v}: window sum {}",
                w.window_sum(&base, v)
            );
        }
    }
    Ok("k = 2..8 totals 3k, windows 3k+1 except 3k at 0 and 2k+1".into())
}

fn blowup_law() -> Check {
    for k in 2..=5 {
        let base = andrasfai(k + 1).map_err(|e| e.to_string())?;
        let w = standard_weighting(k).map_err(|e| e.to_string())?;
        for sigma in 1..=4 {
            let b = blowup(&base, &w, sigma).map_err(|e| e.to_string())?;
            let n = 3 * k * sigma;
            ensure!(
                b.graph.part_sizes() == [n; 3],
                "k={k} σ={sigma}: sizes {:?}",
                b.graph.part_sizes()
            );
            let low = (0..b.graph.order())
                .filter(|&v| b.graph.degree(v) == n)
                .count();
            let high = (0..b.graph.order())
                .filter(|&v| b.graph.degree(v) == n + sigma)
                .count();
            ensure!(
                low == 2 * sigma && low + high == 3 * n,
                "k={k} σ={sigma}: {low} low, {high} high"
            );
            ensure!(
                find_triangle(&b.graph).is_none(),
                "k={k} σ={sigma}: triangle"
            );
        }
    }
    Ok("16 blowups, 2σ vertices of degree n and the rest n+σ".into())
}

fn bundle(k: usize, limit: Duration) -> Check {
    let start = Instant::now();
    let mut recipe = ConstructionRecipe::new(2, k, 7);
    recipe.q = 2;
    let b = compose_extremal(&recipe).map_err(|e| e.to_string())?;
    let n = b.n();
    ensure!(n == 21 * k, "n = {n}");
    ensure!(
        b.graph.min_degree() == Some(n + 3),
        "δ = {:?}, want {}",
        b.graph.min_degree(),
        n + 3
    );
    let w = contains_kttt(&b.graph, 2).map_err(|e| e.to_string())?;
    ensure!(w.is_none(), "K_(2,2,2) found: {}", w.unwrap());
    let took = start.elapsed();
    ensure!(took <= limit, "took {took:.2?}");
    Ok(format!("n = {n}, δ = n+3, K_(2,2,2)-free in {took:.2?}"))
}

fn bundles() -> Check {
    let a = bundle(2, Duration::from_secs(60))?;
    let b = bundle(3, Duration::from_secs(60))?;
    Ok(format!("{a}; {b}"))
}

fn gadgets() -> Check {
    for (q, e) in [(2, 21), (3, 52), (5, 186)] {
        let h = pg_incidence(q).map_err(|e| e.to_string())?;
        ensure!(h.edge_count() == e, "q={q}: {} edges", h.edge_count());
        ensure!(
            contains_ktt(&h, 2).map_err(|e| e.to_string())?.is_none(),
            "q={q}: C4"
        );
    }
    for seed in 0..20 {
        let h = random_deletion_free(12, 2, seed, &SearchConfig::default())
            .map_err(|e| e.to_string())?;
        ensure!(
            contains_ktt(&h, 2).map_err(|e| e.to_string())?.is_none(),
            "seed {seed}: C4"
        );
    }
    Ok("PG(2,q) for q = 2, 3, 5 and 20 random deletions are C4-free".into())
}

fn detector_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut hits, mut misses) = (0, 0);
    for i in 0..200 {
        let t = 1 + i % 3;
        let found = if i % 2 == 0 {
            let (l, r) = (rng.gen_range(1..=14), rng.gen_range(1..=14));
            let h = random_bipartite(l, r, rng.gen_range(0.2..0.95), &mut rng);
            let w = contains_ktt(&h, t).map_err(|e| e.to_string())?;
            if let Some(w) = &w {
                w.validate(&h).map_err(|e| format!("graph {i}: {e}"))?;
            }
            ensure!(
                w.is_some() == naive_ktt(&h, t),
                "graph {i}: K_(t,t) disagreement at t={t}"
            );
            w.is_some()
        } else {
            let sizes = [
                rng.gen_range(1..=14),
                rng.gen_range(1..=14),
                rng.gen_range(1..=14),
            ];
            let g = sample_tripartite(sizes, rng.gen_range(0.3..0.95), rng.gen());
            let w = contains_kttt(&g, t).map_err(|e| e.to_string())?;
            if let Some(w) = &w {
                w.validate(&g).map_err(|e| format!("graph {i}: {e}"))?;
            }
            ensure!(
                w.is_some() == naive_kttt(&g, t),
                "graph {i}: K_(t,t,t) disagreement at t={t}"
            );
            w.is_some()
        };
        if found {
            hits += 1;
        } else {
            misses += 1;
        }
    }
    Ok(format!(
        "200 graphs agree with enumeration ({hits} contain, {misses} free)"
    ))
}

fn booster_calculus(k_checked: &mut usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut boosters = 0;
    for i in 0..100 {
        let tau = 1 + i % 3;
        let n = rng.gen_range(tau.max(2)..=30);
        let g = dense_sample(n, tau, &mut rng);
        let reg = regularise(&g, tau as i64).map_err(|e| format!("graph {i}: {e}"))?;
        reg.validate(&g).map_err(|e| format!("graph {i}: {e}"))?;
        for v in 0..g.order() {
            let fp = tau.max(g.forward_degree(v).min(n));
            ensure!(
                reg.f_plus[v] == fp,
                "graph {i}: f+({v}) = {}, want {fp}",
                reg.f_plus[v]
            );
            ensure!(
                reg.f_plus[v] + reg.f_minus[v] == n + tau,
                "graph {i}: f+ + f- at {v}"
            );
            ensure!(
                tau <= reg.f_plus[v] && reg.f_plus[v] <= g.forward_degree(v),
                "graph {i}: f+ chain at {v}"
            );
            ensure!(
                tau <= reg.f_minus[v] && reg.f_minus[v] <= g.backward_degree(v),
                "graph {i}: f- chain at {v}"
            );
        }
        for u in 0..g.order() {
            for v in 0..g.order() {
                ensure!(
                    (reg.f_plus[u] <= reg.f_plus[v]) == (reg.f_minus[u] >= reg.f_minus[v]),
                    "graph {i}: order reversal at ({u}, {v})"
                );
            }
        }
        for l in classify_edges(&g, &reg)
            .into_iter()
            .filter(|l| l.is_booster())
        {
            let (u, v) = (l.u, l.v);
            let third = Part::third(g.part_of(u), g.part_of(v)).unwrap();
            let codeg = g
                .part_range(third)
                .filter(|&w| g.has_edge(u, w) && g.has_edge(v, w))
                .count();
            let compl = g
                .part_range(third)
                .filter(|&w| !g.has_edge(u, w) && !g.has_edge(v, w))
                .count();
            let r = (reg.f_plus[v] - reg.f_plus[u]) as i64;
            ensure!(
                codeg as i64 >= tau as i64 + r,
                "graph {i}: codegree {codeg} < τ + r at {u} -> {v}"
            );
            ensure!(
                compl as i64 <= codeg as i64 - tau as i64 - r,
                "graph {i}: complement {compl} at {u} -> {v}"
            );
            let c = certify_booster(&g, &reg, u, v).map_err(|e| format!("graph {i}: {e}"))?;
            ensure!(
                (c.codegree, c.complement) == (codeg, compl),
                "graph {i}: certificate disagrees at {u} -> {v}"
            );
            boosters += 1;
        }
        let k = initial_configuration(&g, &reg).k;
        ensure!(
            k == scale_k(&reg) && k >= tau.div_ceil(100),
            "graph {i}: k = {k}"
        );
        *k_checked += 1;
    }
    Ok(format!(
        "100 graphs, {boosters} booster edges, zero violations"
    ))
}

fn graver() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut spread = 0;
    for i in 0..200 {
        let n = rng.gen_range(1..=30);
        let g = dense_sample(n, 1, &mut rng);
        let w = graver_triangle(&g).map_err(|e| format!("graph {i}: {e}"))?;
        w.validate(&g).map_err(|e| format!("graph {i}: {e}"))?;
        let fwd: Vec<usize> = (0..g.order()).map(|v| g.forward_degree(v)).collect();
        if fwd.iter().max().unwrap() - fwd.iter().min().unwrap() >= n / 2 {
            spread += 1;
        }
    }
    Ok(format!(
        "200 validated triangles, {spread} graphs with forward degrees spread over n/2"
    ))
}

fn dense_core() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut tight = f64::INFINITY;
    let mut i = 0;
    while i < 50 {
        let t = 1 + i % 2;
        let (l, r) = (rng.gen_range(1..=40), rng.gen_range(t..=40));
        let h = random_bipartite(l, r, rng.gen_range(0.05..1.0), &mut rng);
        if h.edge_count() < t * l {
            continue;
        }
        let res = extract_dense_core(&h, t, &SearchConfig::default()).map_err(|e| e.to_string())?;
        ensure!(
            meets_dense_core_bound(res.score, h.edge_count(), l, r, t),
            "graph {i}: score {} below bound ({l}x{r}, {} edges, t={t})",
            res.score,
            h.edge_count()
        );
        let lambda = h.edge_count() as f64 / (l * r) as f64;
        tight = tight.min(
            res.score as f64 / ((lambda / std::f64::consts::E).powi(t as i32) * l as f64 / 2.0),
        );
        i += 1;
    }
    Ok(format!(
        "50 graphs meet the exact bound, smallest score/bound ratio {tight:.2}"
    ))
}

fn analyze_fixture(
    dir: &Path,
    name: &str,
    g: &TripartiteGraph,
    tau: &str,
    t: &str,
) -> Result<Vec<Record>, String> {
    let p = write_graph(dir, &format!("{name}.tri"), g);
    let out = dir.join(name);
    let r = tritur(&[
        "analyze",
        s(&p),
        "--tau",
        tau,
        "--t",
        t,
        "--initial-config",
        "--out-dir",
        s(&out),
    ]);
    ensure!(r.code == 0, "{name}: analyze exit {}: {}", r.code, r.err);
    let certs = out.join("certificates.txt");
    let v = tritur(&["verify-cert", s(&certs), s(&p)]);
    ensure!(
        v.code == 0,
        "{name}: verify-cert exit {}: {}",
        v.code,
        v.err
    );
    parse_records(&fs::read_to_string(&certs).unwrap()).map_err(|e| e.to_string())
}

fn variant_of(records: &[Record]) -> Option<String> {
    records
        .iter()
        .find(|r| r.kind == "ICFG")
        .and_then(|r| r.get("variant").ok())
        .map(str::to_owned)
}

fn initial_config(dir: &Path, k_checked: usize) -> Check {
    let dense = analyze_fixture(dir, "dense", &dense_fixture(), "5", "2")?;
    ensure!(
        variant_of(&dense).as_deref() == Some("DenseBoosters"),
        "dense fixture: {:?}",
        variant_of(&dense)
    );
    let heavy = analyze_fixture(dir, "heavy", &heavy_fixture(), "3", "2")?;
    ensure!(
        variant_of(&heavy).as_deref() == Some("HeavyVertices"),
        "heavy fixture: {:?}",
        variant_of(&heavy)
    );
    for (name, recs) in [("dense", &dense), ("heavy", &heavy)] {
        let icfg = recs.iter().find(|r| r.kind == "ICFG").unwrap();
        let (tau, k) = (icfg.int("tau").unwrap(), icfg.int("k").unwrap());
        ensure!(k >= tau.div_ceil(100), "{name}: k = {k}");
    }
    Ok(format!(
        "DenseBoosters and HeavyVertices re-validated via verify-cert; k >= ceil(τ/100) on {} graphs",
        k_checked + 2
    ))
}

/// A different value for one field, never equal to the original.
fn mutate(value: &str, rng: &mut ChaCha8Rng) -> String {
    let nums: Option<Vec<usize>> = if value.is_empty() {
        Some(Vec::new())
    } else {
        value.split(',').map(|x| x.parse().ok()).collect()
    };
    if let Some(mut xs) = nums {
        match rng.gen_range(0..4) {
            0 if !xs.is_empty() => {
                let i = rng.gen_range(0..xs.len());
                xs[i] += 1;
            }
            1 if !xs.is_empty() && xs.iter().any(|&x| x > 0) => {
                let i = *(0..xs.len())
                    .filter(|&i| xs[i] > 0)
                    .collect::<Vec<_>>()
                    .choose(rng)
                    .unwrap();
                xs[i] -= 1;
            }
            2 if !xs.is_empty() => {
                xs.remove(rng.gen_range(0..xs.len()));
            }
            _ => xs.push(xs.last().map_or(0, |x| x + 1)),
        }
        return xs
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
    }
    // a digit run somewhere inside, else a rename
    let bytes = value.as_bytes();
    let runs: Vec<(usize, usize)> = (0..bytes.len())
        .filter(|&i| bytes[i].is_ascii_digit() && (i == 0 || !bytes[i - 1].is_ascii_digit()))
        .map(|i| {
            (
                i,
                (i..bytes.len())
                    .find(|&j| !bytes[j].is_ascii_digit())
                    .unwrap_or(bytes.len()),
            )
        })
        .collect();
    if let Some(&(a, b)) = runs.choose(rng) {
        let x: usize = value[a..b].parse().unwrap();
        return format!("{}{}{}", &value[..a], x + 1, &value[b..]);
    }
    let names = ["DenseBoosters", "HeavyVertices", "Inconclusive"];
    names.iter().find(|&&n| n != value).unwrap().to_string()
}

fn mutations(dir: &Path) -> Check {
    let mut pool = Vec::new();
    for (name, g, tau, t) in [
        ("m_dense", dense_fixture(), "5", "2"),
        ("m_heavy", heavy_fixture(), "3", "2"),
        ("m_squad", squad_fixture(), "1", "1"),
    ] {
        let p = dir.join(format!("{name}.tri"));
        for rec in analyze_fixture(dir, name, &g, tau, t)? {
            pool.push((rec, p.clone()));
        }
    }
    let k222 = write_graph(dir, "m_k222.tri", &TripartiteGraph::complete([2; 3]));
    let bip = dir.join("m_c4.bip");
    fs::write(&bip, "BIP 3 3\n0 0\n0 1\n1 0\n1 1\n2 2\n").unwrap();
    for (p, pattern) in [(&k222, "kttt"), (&bip, "ktt")] {
        let r = tritur(&["check", s(p), "--pattern", pattern]);
        ensure!(r.code == 10, "check {pattern}: exit {}", r.code);
        for rec in parse_records(&r.out).map_err(|e| e.to_string())? {
            pool.push((rec, p.clone()));
        }
    }
    let mut kinds: Vec<&str> = pool.iter().map(|(r, _)| r.kind.as_str()).collect();
    kinds.sort();
    kinds.dedup();
    ensure!(
        kinds == ["BOOST", "ICFG", "KTT", "KTTT", "SQUAD"],
        "record kinds {kinds:?}"
    );

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cert = dir.join("mutated.txt");
    for m in 0..100 {
        let (rec, graph) = pool.choose(&mut rng).unwrap();
        let mut bad = rec.clone();
        let f = rng.gen_range(0..bad.fields.len());
        bad.fields[f].1 = mutate(&bad.fields[f].1, &mut rng);
        ensure!(
            bad.fields[f].1 != rec.fields[f].1,
            "mutation {m} is a no-op"
        );
        fs::write(&cert, format!("{bad}\n")).unwrap();
        let r = tritur(&["verify-cert", s(&cert), s(graph)]);
        ensure!(
            r.code == 11,
            "mutation {m} accepted (exit {}): {rec} -> {bad}",
            r.code
        );
    }
    Ok(format!(
        "100 of 100 mutations rejected across {} records of kinds {}",
        pool.len(),
        kinds.join(",")
    ))
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().unwrap();
    let mut k_checked = 0;
    let mut failed = 0;
    let mut gate = |id: usize, name: &str, limit_s: u64, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let res = f();
        let took = start.elapsed();
        let res = match res {
            Ok(_) if took > Duration::from_secs(limit_s) => {
                Err(format!("over the {limit_s} s limit"))
            }
            other => other,
        };
        let (tag, detail) = match &res {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if res.is_err() {
            failed += 1;
        }
        println!("{tag} {id:>2} {name}: {detail} [{took:.2?}, limit {limit_s} s]");
    };
    gate(1, "andrasfai suite", 1, &mut andrasfai_suite);
    gate(2, "weighting suite", 1, &mut weighting_suite);
    gate(3, "blowup degree law", 5, &mut blowup_law);
    gate(4, "extremal bundles", 120, &mut bundles);
    gate(5, "gadget freeness", 10, &mut gadgets);
    gate(6, "detector oracle", 120, &mut detector_oracle);
    gate(7, "booster calculus", 60, &mut || {
        booster_calculus(&mut k_checked)
    });
    gate(8, "graver triangle", 30, &mut graver);
    gate(9, "dense-core bound", 60, &mut dense_core);
    gate(10, "initial configuration", 10, &mut || {
        initial_config(dir.path(), k_checked)
    });
    gate(11, "mutation robustness", 10, &mut || mutations(dir.path()));
    if failed == 0 {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
