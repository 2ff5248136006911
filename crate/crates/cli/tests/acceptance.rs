//! Acceptance run. Prints one pass/fail line per criterion and exits nonzero
//! if any criterion fails. All comparisons are exact.

use std::process::{Command, Output};
use std::str::FromStr;
use std::time::{Duration, Instant};

use degbell_core::bell;
use degbell_core::numbers::{central_coeff, central_factorial2, central_factorial2_sum, degen_stirling2};
use degbell_core::ring::{int, rat, rational_to_pq};
use degbell_core::{LambdaPoly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn degbell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degbell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

fn dual_routes() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for n in 0..=10 {
        for k in 0..=n {
            let (a, b) = (central_factorial2(n, k), central_factorial2_sum(n, k));
            ensure(a == b, || format!("T({n},{k}): {a} vs {b}"))?;
            pairs += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{pairs} pairs agree in {:.2?}", elapsed))
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let out = degbell(&["verify", "--n-max", "8", "--seed", "1"]);
    let elapsed = start.elapsed();
    ensure(out.status.code() == Some(0), || format!("exit {:?}", out.status.code()))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    let reports: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let reports = reports.as_array().ok_or("report is not an array")?;
    let ids: Vec<&str> = reports.iter().filter_map(|r| r["check_id"].as_str()).collect();
    for id in ["L1", "T2", "C3", "Z0", "H1", "H2", "E9", "E11", "E12", "T4", "T5", "C6"] {
        ensure(ids.contains(&id), || format!("{id} missing from report"))?;
    }
    for r in reports {
        ensure(r["status"] == "pass", || format!("{} did not pass", r["check_id"]))?;
    }
    Ok(format!("{} checks pass in {:.2?}", reports.len(), elapsed))
}

fn partition_vs_gf() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut compared = 0;
    for n in 0..=10 {
        for k in 0..=n {
            for _ in 0..5 {
                let xs: Vec<Rational> = (0..n - k + 1).map(|_| random_rational(&mut rng)).collect();
                let gf = bell::incomplete_bell_degenerate(n, k, &xs).map_err(|e| e.to_string())?;
                let part =
                    bell::incomplete_bell_degenerate_partition(n, k, &xs).map_err(|e| e.to_string())?;
                ensure(gf == part, || format!("degenerate ({n},{k}) at {xs:?}"))?;
                let gf = bell::central_incomplete(n, k, &xs).map_err(|e| e.to_string())?;
                let part = bell::central_incomplete_partition(n, k, &xs).map_err(|e| e.to_string())?;
                ensure(gf == part, || format!("central ({n},{k}) at {xs:?}"))?;
                compared += 2;
            }
        }
    }
    Ok(format!("{compared} comparisons agree"))
}

fn classical_degeneration() -> Outcome {
    let zero = int(0);
    let mut s2 = vec![vec![0i64; 12]; 11];
    s2[0][0] = 1;
    for n in 0..10 {
        for k in 1..=n + 1 {
            s2[n + 1][k] = k as i64 * s2[n][k] + s2[n][k - 1];
        }
    }
    // cosh-kernel central factorial numbers: T(n,k) = T(n−2,k−2) + (k/2)² T(n−2,k)
    let mut t = vec![vec![int(0); 11]; 11];
    t[0][0] = int(1);
    t[1][1] = int(1);
    for n in 2..=10 {
        for k in 0..=n {
            let mut v = &t[n - 2][k] * rat((k * k) as i64, 4);
            if k >= 2 {
                v += &t[n - 2][k - 2];
            }
            t[n][k] = v;
        }
    }
    for n in 0..=10 {
        for k in 0..=n {
            let s = degen_stirling2(n, k).eval(&zero);
            ensure(s == int(s2[n][k]), || format!("S2({n},{k}) = {s}"))?;
            let c = central_factorial2(n, k).eval(&zero);
            ensure(c == t[n][k], || format!("T({n},{k}) = {c}"))?;
            ensure((n - k) % 2 == 0 || c == zero, || format!("T({n},{k}) should vanish"))?;
        }
    }
    ensure(central_factorial2(4, 2).eval(&zero) == int(1), || "T(4,2) != 1".into())?;
    ensure(central_factorial2(6, 2).eval(&zero) == int(1), || "T(6,2) != 1".into())?;
    let bells: Vec<Rational> = (0..=5).map(|n| bell::degenerate_bell_poly(n, &int(1)).eval(&zero)).collect();
    ensure(bells == [1, 1, 2, 5, 15, 52].map(int), || format!("Bell numbers {bells:?}"))?;
    Ok("Stirling, central factorial and Bell values recovered at lambda = 0".into())
}

fn anchors() -> Outcome {
    let l = LambdaPoly::lambda();
    let c = |v: Rational| LambdaPoly::constant(v);
    ensure(central_factorial2(2, 1) == -&l, || "T(2,1)".into())?;
    ensure(central_factorial2(3, 2) == l.scale(&int(-3)), || "T(3,2)".into())?;
    ensure(central_coeff(3) == LambdaPoly::from_ratios(&[(1, 4), (0, 1), (2, 1)]), || "c_3".into())?;
    for (x1, x2) in [(int(1), int(1)), (rat(2, 3), rat(-5, 2)), (int(-3), rat(1, 7))] {
        let got = bell::central_complete(2, &[x1.clone(), x2.clone()]).map_err(|e| e.to_string())?;
        let want = &c(&x1 * &x1) - &l.scale(&x2);
        ensure(got == want, || format!("complete n=2 at ({x1}, {x2})"))?;
    }
    for x in [int(1), rat(-1, 2), int(4)] {
        let want = &c(&x * &x) - &l.scale(&x);
        ensure(bell::degenerate_central_bell(2, &x) == want, || format!("central Bell n=2 at {x}"))?;
    }
    Ok("T(2,1), T(3,2), c_3 and both n = 2 central Bell forms match".into())
}

fn mutation() -> Outcome {
    let out = degbell(&["verify", "--n-max", "6", "--mutant", "flip-central-sign"]);
    ensure(out.status.code() == Some(1), || format!("exit {:?}", out.status.code()))?;
    let reports: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let reports = reports.as_array().ok_or("report is not an array")?;
    let mut failed = Vec::new();
    for r in reports {
        if r["status"] == "fail" {
            let cx = &r["counterexample"];
            ensure(cx.is_object() && cx["lhs"] != cx["rhs"], || {
                format!("{} fails without a counterexample", r["check_id"])
            })?;
            failed.push(r["check_id"].as_str().unwrap_or("?").to_string());
        }
    }
    for id in ["L1", "C3", "T5"] {
        ensure(failed.iter().any(|f| f == id), || format!("{id} not caught"))?;
    }
    Ok(format!("caught by {}", failed.join(", ")))
}

fn csv_rows(text: &str) -> Result<Vec<(usize, Option<usize>, LambdaPoly)>, String> {
    let mut lines = text.lines();
    ensure(lines.next() == Some("n,k,value"), || "bad CSV header".into())?;
    lines
        .map(|line| {
            let mut f = line.splitn(3, ',');
            let n = f.next().unwrap_or_default().parse().map_err(|_| line.to_string())?;
            let k = match f.next().unwrap_or_default() {
                "" => None,
                s => Some(s.parse().map_err(|_| line.to_string())?),
            };
            let v = LambdaPoly::from_str(f.next().unwrap_or_default()).map_err(|e| e.to_string())?;
            Ok((n, k, v))
        })
        .collect()
}

fn json_rows(text: &str) -> Result<Vec<(usize, Option<usize>, LambdaPoly)>, String> {
    let doc: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    doc["rows"]
        .as_array()
        .ok_or("rows missing")?
        .iter()
        .map(|r| {
            let coeffs: Vec<String> = serde_json::from_value(r["value"].clone()).map_err(|e| e.to_string())?;
            let v = LambdaPoly::from_pq_strings(&coeffs).map_err(|e| e.to_string())?;
            Ok((r["n"].as_u64().ok_or("n")? as usize, r["k"].as_u64().map(|k| k as usize), v))
        })
        .collect()
}

fn cli_formats() -> Outcome {
    let goldens: [(&[&str], &str); 3] = [
        (
            &["table", "central-factorial2", "--n-max", "2", "--lambda", "0", "--format", "csv"],
            "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,0\n2,2,1\n",
        ),
        (
            &["table", "stirling1", "--n-max", "2", "--format", "csv"],
            "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,-1\n2,2,1\n",
        ),
        (&["table", "central-factorial2", "--n-max", "0", "--format", "csv"], "n,k,value\n0,0,1\n"),
    ];
    for (args, want) in goldens {
        let out = degbell(args);
        let got = String::from_utf8_lossy(&out.stdout);
        ensure(out.status.success() && got == want, || format!("{args:?} printed {got:?}"))?;
    }

    let families = [
        "stirling1",
        "stirling2-deg",
        "central-factorial2",
        "bell-deg",
        "bell-central-deg",
        "incomplete",
        "incomplete-deg",
        "central-incomplete",
        "complete-deg",
        "central-complete",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let family = families[rng.gen_range(0..families.len())];
        let n_max = rng.gen_range(0..=5usize).to_string();
        let lambda = if rng.gen_bool(0.5) { "sym".to_string() } else { rational_to_pq(&random_rational(&mut rng)) };
        let xs: Vec<String> = (0..=5).map(|_| rational_to_pq(&random_rational(&mut rng))).collect();
        let xs = xs.join(",");
        let mut base = vec!["table", family, "--n-max", &n_max, "--lambda", &lambda];
        if family.contains("incomplete") || family.contains("complete") {
            base.extend(["--xs", &xs]);
        }
        let run = |format: &str| {
            let mut args = base.clone();
            args.extend(["--format", format]);
            let out = degbell(&args);
            ensure(out.status.success(), || format!("{args:?} exited {:?}", out.status.code()))?;
            Ok::<_, String>(String::from_utf8_lossy(&out.stdout).into_owned())
        };
        let csv = run("csv")?;
        ensure(run("csv")? == csv, || format!("{base:?} is not deterministic"))?;
        let (a, b) = (csv_rows(&csv)?, json_rows(&run("json")?)?);
        ensure(!a.is_empty() && a == b, || format!("{base:?}: CSV and JSON disagree"))?;
    }
    Ok("3 golden tables match; 20 random CSV/JSON pairs agree".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("dual-route central factorial numbers, n <= 10", dual_routes),
        ("identity suite via verify --n-max 8 --seed 1", identity_suite),
        ("partition route equals GF route, n <= 10", partition_vs_gf),
        ("classical degeneration at lambda = 0", classical_degeneration),
        ("hand-verified anchors", anchors),
        ("sign-flip mutant is detected", mutation),
        ("CLI golden tables and format equivalence", cli_formats),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
