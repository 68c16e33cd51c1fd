//! Acceptance suite: one pass/fail line per criterion, each under its time
//! limit. Runs as a plain binary so the lines are always printed.

use std::collections::HashSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use frieze::criterion::{check_triangle_criterion, is_embeddable, valuation_violation_for_prime};
use frieze::extend::{
    admissible_choices, all_extensions, embed, extend_step, ExtensionTrace, Scripted, SmallestChoice,
};
use frieze::io;
use frieze::oracle::occurs_in_cc;
use frieze::triangulation::{enumerate_triangulations, fan, frieze_of, triangulation_of};
use frieze::Frieze;

type Outcome = Result<(), String>;
/// `(edge, [(p, i_p, residue)], expected y)` for one scripted step.
type Step = ((usize, usize), &'static [(u64, usize, u64)], &'static [u64]);
type Criterion = (&'static str, u64, fn() -> Outcome);

fn b(x: u64) -> BigUint {
    BigUint::from(x)
}

fn bs(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| b(x)).collect()
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn square() -> Frieze {
    Frieze::from_u64_rows(4, &[&[2, 26, 12], &[4, 2], &[2]]).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_frieze"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

/// Every CC frieze on `3..=n_max` vertices with its triangulation.
fn cc_friezes(n_max: usize) -> Vec<Frieze> {
    (3..=n_max)
        .flat_map(|n| enumerate_triangulations(n).unwrap())
        .map(|t| frieze_of(&t).unwrap())
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn golden_steps() -> Outcome {
    let mut f = square();
    let script: [Step; 3] = [
        ((3, 0), &[(2, 2, 1), (3, 2, 1)], &[5, 1, 3]),
        ((4, 0), &[(5, 3, 1)], &[3, 1, 7, 3]),
        ((5, 0), &[(3, 4, 2)], &[1, 1, 11, 5, 2]),
    ];
    for (step, (edge, primes, expected)) in script.into_iter().enumerate() {
        let mut choice = admissible_choices(&f, edge).map_err(|e| format!("step {}: {e}", step + 1))?;
        for &(p, ip, r) in primes {
            choice.select(&b(p), ip, &b(r)).map_err(|e| format!("step {}: {e}", step + 1))?;
        }
        let (next, trace) = extend_step(&f, &choice).map_err(|e| format!("step {}: {e}", step + 1))?;
        ensure(trace.y == bs(expected), || {
            format!("step {}: y = {:?}, expected {expected:?}", step + 1, trace.y)
        })?;
        f = next;
    }
    Ok(())
}

fn end_to_end() -> Outcome {
    let input = io::parse_frieze(&std::fs::read_to_string(data("square.fwc")).unwrap()).map_err(|e| e.to_string())?;
    let default = embed(&input, &mut SmallestChoice).map_err(|e| e.to_string())?;
    ensure(default.cc.is_conway_coxeter(), || "default embedding is not Conway-Coxeter".into())?;
    ensure(default.cc.restrict(&default.vertex_map).ok() == Some(input.clone()), || {
        "default embedding does not restrict to the input".into()
    })?;

    let choices = io::parse_choices(&std::fs::read_to_string(data("worked-example.choices")).unwrap())
        .map_err(|e| e.to_string())?;
    let e = embed(&input, &mut Scripted::new(choices)).map_err(|e| e.to_string())?;
    ensure(e.cc.n() == 10, || format!("expected a decagon, got {} vertices", e.cc.n()))?;
    ensure(e.cc.restrict(&e.vertex_map).ok() == Some(input.clone()), || {
        "scripted embedding does not restrict to the input".into()
    })?;
    let expected = io::parse_triangulation(&std::fs::read_to_string(data("decagon.tri")).unwrap())
        .map_err(|e| e.to_string())?;
    ensure(e.tri == expected, || format!("triangulation {} differs from {expected}", e.tri))?;
    ensure(e.vertex_map == vec![0, 2, 4, 6], || format!("vertex map {:?}", e.vertex_map))?;

    let (code, out) = cli(&[
        "embed",
        data("square.fwc").to_str().unwrap(),
        "--choices",
        data("worked-example.choices").to_str().unwrap(),
    ]);
    ensure(code == 0, || format!("embed exited with {code}"))?;
    let parsed = io::parse_embedding(out.trim_end()).map_err(|e| e.to_string())?;
    ensure(parsed == e, || "CLI embedding differs from the library result".into())
}

fn example_square_rejected() -> Outcome {
    let path = data("square-rejected.fwc");
    let path = path.to_str().unwrap();
    let (code, out) = cli(&["check", path]);
    ensure(code == 1, || format!("check exited with {code}"))?;
    ensure(out.contains("p=3"), || format!("no p=3 witness in {out:?}"))?;
    let (code, _) = cli(&["oracle", path, "--max-n", "9"]);
    ensure(code == 1, || format!("oracle exited with {code}"))?;
    let f = io::parse_frieze(&std::fs::read_to_string(path).unwrap()).unwrap();
    ensure(occurs_in_cc(&f, 9).unwrap().is_none(), || "oracle found the square".into())
}

fn scaled_fans() -> Outcome {
    for p in [3u64, 5, 7] {
        let n = p as usize + 1;
        let f = frieze_of(&fan(n, 0).unwrap()).unwrap().scale(&b(p)).unwrap();
        ensure(valuation_violation_for_prime(&f, p).is_some(), || format!("p={p}: no violation"))?;
        for q in [2u64, 3, 5].into_iter().filter(|&q| q < p) {
            ensure(valuation_violation_for_prime(&f, q).is_none(), || {
                format!("p={p}: unexpected violation at q={q}")
            })?;
        }
        ensure(!is_embeddable(&f).embeddable(), || format!("p={p}: criterion passes"))?;
    }
    Ok(())
}

fn divides_third(a: &BigUint, b: &BigUint, c: &BigUint) -> bool {
    c.is_multiple_of(&a.gcd(b)) && a.is_multiple_of(&b.gcd(c)) && b.is_multiple_of(&a.gcd(c))
}

fn necessity_sweep() -> Outcome {
    for cc in cc_friezes(8) {
        let n = cc.n();
        for k in [3, 4].into_iter().filter(|&k| k <= n) {
            for s in subsets(n, k) {
                let sub = cc.restrict(&s).map_err(|e| e.to_string())?;
                ensure(is_embeddable(&sub).embeddable(), || format!("subset {s:?} of\n{cc}\nfails"))?;
            }
        }
        for s in subsets(n, 3) {
            let (x, y, z) = (cc.label(s[0], s[1]), cc.label(s[1], s[2]), cc.label(s[0], s[2]));
            ensure(divides_third(x, y, z), || format!("triangle {s:?} of\n{cc}"))?;
        }
    }
    Ok(())
}

fn triangle_corollary() -> Outcome {
    for a in 1..=12u64 {
        for bb in 1..=12u64 {
            for c in 1..=12u64 {
                let Ok(f) = Frieze::triangle(a, bb, c) else { continue };
                ensure(
                    check_triangle_criterion(&b(a), &b(bb), &b(c)) == is_embeddable(&f).embeddable(),
                    || format!("disagreement on ({a}, {bb}, {c})"),
                )?;
            }
        }
    }
    for (a, bb, c) in [(1, 1, 1), (2, 2, 2), (3, 3, 6), (2, 3, 4), (4, 4, 8)] {
        let f = Frieze::triangle(a, bb, c).unwrap();
        let found = occurs_in_cc(&f, 9).map_err(|e| e.to_string())?;
        if let Some(w) = &found {
            ensure(w.verify(&f), || format!("witness for ({a}, {bb}, {c}) does not verify"))?;
        }
        ensure(found.is_some() == check_triangle_criterion(&b(a), &b(bb), &b(c)), || {
            format!("oracle and criterion disagree on ({a}, {bb}, {c})")
        })?;
    }
    Ok(())
}

fn bijection() -> Outcome {
    let expected = [1usize, 2, 5, 14, 42, 132, 429];
    for (n, &count) in (3..=9).zip(&expected) {
        let all: Vec<_> = enumerate_triangulations(n).unwrap().collect();
        ensure(all.len() == count, || format!("n={n}: {} triangulations", all.len()))?;
        for t in all {
            let f = frieze_of(&t).map_err(|e| e.to_string())?;
            ensure(f.table().verify_ptolemy().ok() && f.is_conway_coxeter(), || format!("{t}"))?;
            ensure(triangulation_of(&f).ok() == Some(t.clone()), || format!("round trip fails on {t}"))?;
        }
    }
    Ok(())
}

fn step_properties(f: &Frieze, next: &Frieze, t: &ExtensionTrace) -> Outcome {
    let n = f.n();
    ensure(next.table().verify_ptolemy().ok(), || "Ptolemy fails".into())?;
    ensure(is_embeddable(next).embeddable(), || format!("criterion fails on\n{next}"))?;
    ensure(
        !t.y0_mod_c0.is_zero() && t.y0_mod_c0 < t.c0 && t.y0_mod_c0.gcd(&t.c0).is_one(),
        || format!("y0 = {} for c0 = {}", t.y0_mod_c0, t.c0),
    )?;
    let far = t.frame[n - 1];
    for i in 0..n - 1 {
        for j in i + 1..n - 1 {
            let (vi, vj) = (t.frame[i], t.frame[j]);
            let lhs = f.entry(vi, far) * &t.y[j];
            let rhs = f.entry(vj, far) * &t.y[i] + f.entry(vi, vj);
            ensure(lhs == rhs, || format!("cross identity fails at ({i}, {j})"))?;
        }
    }
    let old: Vec<usize> = (0..n).map(|v| if v < t.new_vertex { v } else { v + 1 }).collect();
    ensure(next.restrict(&old).ok().as_ref() == Some(f), || "restriction differs from input".into())
}

fn extension_properties() -> Outcome {
    let mut corpus = HashSet::new();
    for cc in cc_friezes(7) {
        for k in 3..=cc.n() {
            for s in subsets(cc.n(), k) {
                corpus.insert(cc.restrict(&s).unwrap());
            }
        }
    }
    let mut corpus: Vec<Frieze> = corpus.into_iter().filter(|f| !f.is_conway_coxeter()).collect();
    corpus.sort_by_key(|f| (f.n(), f.rows()));
    let mut steps = 0usize;
    for f in &corpus {
        for a in (0..f.n()).filter(|&a| !f.boundary_label(a).is_one()) {
            let edge = (a, (a + 1) % f.n());
            let exts = all_extensions(f, edge).map_err(|e| format!("{e} on edge {edge:?} of\n{f}"))?;
            for (next, trace) in &exts {
                step_properties(f, next, trace).map_err(|e| format!("{e} (edge {edge:?} of\n{f})"))?;
                steps += 1;
            }
        }
    }
    ensure(steps > 0, || "empty corpus".into())?;
    println!("    {} friezes, {steps} extension steps checked", corpus.len());
    Ok(())
}

fn glide_and_tameness() -> Outcome {
    for cc in cc_friezes(7) {
        let n = cc.n() as i64;
        let window = cc.pattern_rows(-n, 3 * n as usize);
        ensure(window.check_glide(), || format!("glide fails on\n{cc}"))?;
        ensure(window.check_local_rule(), || format!("local rule fails on\n{cc}"))?;
        ensure(window.tame_check() == Ok(true), || format!("not tame:\n{cc}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("worked example extension steps", 1, golden_steps),
        ("end-to-end embedding of the square", 1, end_to_end),
        ("non-embeddable square rejected", 60, example_square_rejected),
        ("scaled fans fail at exactly p", 5, scaled_fans),
        ("necessity sweep up to 8 vertices", 120, necessity_sweep),
        ("triangle criterion and oracle agree", 120, triangle_corollary),
        ("triangulation bijection up to 9 vertices", 30, bijection),
        ("extension step properties", 120, extension_properties),
        ("glide symmetry and tameness", 10, glide_and_tameness),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(*limit), || format!("exceeded the {limit} s limit"))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({:.2} s, limit {limit} s)", k + 1, elapsed.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({:.2} s): {e}", k + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
