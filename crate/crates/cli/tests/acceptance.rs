//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines come out in order and unbuffered.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_integer::Integer;
use trihex::counting;
use trihex::enumeration::{self, trihex_reps};
use trihex::graph::{self, build};
use trihex::numtheory::{factorize, solve_fast, solve_naive};
use trihex::Signature;

#[rustfmt::skip]
/// (V, trihexes, graph isomorphism classes) for every V up to 360.
const PUBLISHED: [(u64, u64, u64); 90] = [
    (4,1,1), (8,1,1), (12,2,2), (16,3,3), (20,2,2), (24,4,3),
    (28,4,3), (32,5,5), (36,5,4), (40,6,4), (44,4,3), (48,10,8),
    (52,6,4), (56,8,5), (60,8,6), (64,11,9), (68,6,4), (72,13,8),
    (76,8,5), (80,14,10), (84,12,8), (88,12,7), (92,8,5), (96,20,15),
    (100,11,7), (104,14,8), (108,14,9), (112,20,13), (116,10,6), (120,24,14),
    (124,12,7), (128,21,15), (132,16,10), (136,18,10), (140,16,10), (144,31,20),
    (148,14,8), (152,20,11), (156,20,12), (160,30,20), (164,14,8), (168,32,18),
    (172,16,9), (176,28,17), (180,26,16), (184,24,13), (188,16,9), (192,42,28),
    (196,21,12), (200,31,17), (204,24,14), (208,34,20), (212,18,10), (216,40,22),
    (220,24,14), (224,40,25), (228,28,16), (232,30,16), (236,20,11), (240,56,34),
    (244,22,12), (248,32,17), (252,36,21), (256,43,27), (260,28,16), (264,48,26),
    (268,24,13), (272,42,24), (276,32,18), (280,48,26), (284,24,13), (288,65,40),
    (292,26,14), (296,38,20), (300,42,24), (304,48,27), (308,32,18), (312,56,30),
    (316,28,15), (320,62,38), (324,41,23), (328,42,22), (332,28,15), (336,76,44),
    (340,36,20), (344,44,23), (348,40,22), (352,60,35), (356,30,16), (360,78,42),
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn vertex_counts(max: u64) -> impl Iterator<Item = u64> {
    (4..=max).step_by(4)
}

fn signatures_up_to(max: u64) -> Vec<Signature> {
    vertex_counts(max)
        .flat_map(|v| enumeration::all_signatures(v).unwrap())
        .collect()
}

fn table_reproduction() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_trihex"))
        .args(["--jobs", "1", "count", "--from", "4", "--to", "360"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("count exited with {}", out.status));
    }
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap_or_default().split(',').collect();
    let col = |name: &str| {
        header
            .iter()
            .position(|&h| h == name)
            .ok_or(format!("no {name} column"))
    };
    let (cv, ct, cg) = (col("V")?, col("trihexes")?, col("gamma")?);
    let rows: Vec<(u64, u64, u64)> = lines
        .map(|l| {
            let f: Vec<u64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            (f[cv], f[ct], f[cg])
        })
        .collect();
    if rows.len() != PUBLISHED.len() {
        return Err(format!("{} rows, expected {}", rows.len(), PUBLISHED.len()));
    }
    let wrong: Vec<String> = rows
        .iter()
        .zip(PUBLISHED.iter())
        .filter(|(a, b)| a != b)
        .map(|(a, b)| format!("{a:?} != {b:?}"))
        .collect();
    if wrong.is_empty() {
        Ok(format!("{} rows match", rows.len()))
    } else {
        Err(wrong.join("; "))
    }
}

fn enumeration_oracle() -> Outcome {
    let mut n = 0;
    for v in vertex_counts(400) {
        enumeration::verify(v).map_err(|e| format!("V={v}: {e}"))?;
        n += 1;
    }
    Ok(format!("{n} vertex counts, all stream sizes match"))
}

fn congruence_solver() -> Outcome {
    for n in 1..=50_000u64 {
        let f = factorize(n).map_err(|e| e.to_string())?;
        let fast = solve_fast(&f);
        let naive = solve_naive(n).map_err(|e| e.to_string())?;
        if fast != naive {
            return Err(format!(
                "n={n}: fast {:?} naive {:?}",
                fast.roots, naive.roots
            ));
        }
        if fast.len() as u64 != f.omega_count() {
            return Err(format!(
                "n={n}: {} roots, formula {}",
                fast.len(),
                f.omega_count()
            ));
        }
    }
    Ok("n = 1..50000 agree".into())
}

fn graph_realization() -> Outcome {
    let mut n = 0;
    for v in vertex_counts(120) {
        for rep in trihex_reps(v).unwrap() {
            let g = build(rep).map_err(|e| format!("{rep}: {e}"))?;
            let vertices = g.vertex_count();
            let degree_ok = g.rotation().iter().enumerate().all(|(u, ns)| {
                ns.iter().all(|&w| w != u && g.rotation()[w].contains(&u))
                    && ns[0] != ns[1]
                    && ns[1] != ns[2]
                    && ns[0] != ns[2]
            });
            let census = g.face_census();
            let faces: usize = census.values().sum();
            let euler = vertices as i64 - g.edges().len() as i64 + faces as i64;
            let h = rep.hexagon_count() as usize;
            let census_ok = census.get(&3) == Some(&4)
                && census.get(&6).copied().unwrap_or(0) == h
                && census.len() == if h == 0 { 1 } else { 2 };
            if vertices as u64 != v || !degree_ok || !g.is_connected() || euler != 2 || !census_ok {
                return Err(format!(
                    "{rep}: V={vertices} euler={euler} census={census:?}"
                ));
            }
            n += 1;
        }
    }
    Ok(format!("{n} representatives realized"))
}

fn symmetry_correspondence() -> Outcome {
    let mut failures = Vec::new();
    for v in vertex_counts(120) {
        failures.extend(graph::check_graphs(v).map_err(|e| format!("V={v}: {e}"))?);
    }
    if failures.is_empty() {
        Ok("every graph-level check holds for V <= 120".into())
    } else {
        Err(failures
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; "))
    }
}

fn property_suites() -> Outcome {
    let sigs = signatures_up_to(400);
    for s in &sigs {
        if s.mirror().mirror() != *s || s.mirror().vertex_count() != s.vertex_count() {
            return Err(format!("mirror involution fails at {s}"));
        }
        let orbit = s.orbit().map_err(|e| e.to_string())?;
        for m in orbit.members() {
            let again = m.orbit().map_err(|e| e.to_string())?;
            if again.sorted() != orbit.sorted() {
                return Err(format!("orbit closure fails at {s} via {m}"));
            }
        }
        if s.is_coinciding() && ((s.s() + 1) % (s.b() + 1) != 0 || s.f() % (s.b() + 1) != 0) {
            return Err(format!("divisibility fails at {s}"));
        }
    }

    for n in 1..=10_000u64 {
        let both = (0..n).any(|x| (x * x + x + 1) % n == 0 && (2 * x + 1) % n == 0);
        if both != (n == 1 || n == 3) {
            return Err(format!("repeated-root characterization fails at n={n}"));
        }
    }

    let omega = |n: u64| factorize(n).unwrap().omega_count();
    for a in 1..=1000u64 {
        for b in 1..=1000u64 {
            if a.gcd(&b) == 1 && omega(a * b) != omega(a) * omega(b) {
                return Err(format!("omega not multiplicative at {a}, {b}"));
            }
        }
    }

    for v in vertex_counts(4000) {
        let sums = counting::gamma(v).map_err(|e| e.to_string())?;
        let cases = counting::gamma_by_cases(v).map_err(|e| e.to_string())?;
        if sums != cases {
            return Err(format!("gamma paths disagree at V={v}: {sums} vs {cases}"));
        }
    }
    Ok(format!(
        "{} signatures, n <= 10000, a,b <= 1000, V <= 4000",
        sigs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        (
            "table reproduction, V <= 360",
            Duration::from_secs(5),
            table_reproduction,
        ),
        (
            "formula vs enumeration, V <= 400",
            Duration::from_secs(30),
            enumeration_oracle,
        ),
        (
            "congruence solver, n <= 50000",
            Duration::from_secs(60),
            congruence_solver,
        ),
        (
            "graph realization, V <= 120",
            Duration::from_secs(120),
            graph_realization,
        ),
        (
            "symmetry correspondence, V <= 120",
            Duration::from_secs(600),
            symmetry_correspondence,
        ),
        ("property suites", Duration::from_secs(600), property_suites),
    ];
    let mut all_ok = true;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}, but over the {budget:?} budget")),
            Err(e) => (false, e),
        };
        all_ok &= ok;
        println!(
            "{} [{}] {name}: {detail} ({:.2}s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            took.as_secs_f64()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
