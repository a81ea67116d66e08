//! One pass/fail line per acceptance criterion. Runtimes are printed next to
//! their desk-scale estimates and are not enforced.

mod common;

use std::time::Instant;

use common::*;
use ncmac::kostka::{self, kostka_entry, kostka_matrix};
use ncmac::ncsf::{htilde_lambda_factored, render_lambda_factored, ZSequence};
use ncmac::product_rule::{expand_product, verify_product, verify_product_range};
use ncmac::qsym::{self, denominator, gtilde_coeff, ptilde_matrix};
use ncmac::report::{CheckReport, Method};
use ncmac::statistics::Mode;
use ncmac::verify::{self, PRODUCT_BOUND};

type Outcome = Result<String, String>;
type Criterion = (&'static str, f64, fn() -> Outcome);

fn require(rep: &CheckReport) -> Result<(), String> {
    if rep.passed {
        Ok(())
    } else {
        Err(format!("{} n={} {:?}: {}", rep.check, rep.n, rep.mode, rep.counterexample.clone().unwrap_or_default()))
    }
}

fn require_method(rep: &CheckReport, symbolic: bool, points: usize) -> Result<(), String> {
    require(rep)?;
    let ok = match &rep.method {
        Method::Symbolic => symbolic,
        Method::Points { count, .. } => !symbolic && *count == points,
    };
    if ok {
        Ok(())
    } else {
        Err(format!("{} n={} {:?} decided by {:?}", rep.check, rep.n, rep.mode, rep.method))
    }
}

fn lib<T>(r: ncmac::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn golden_matrices() -> Outcome {
    for (n, mode, src) in [
        (2, Mode::Single, K2),
        (3, Mode::Single, K3),
        (4, Mode::Single, K4),
        (3, Mode::Multi, K3_MULTI),
        (4, Mode::Multi, K4_MULTI),
    ] {
        let bad = table_mismatches(&kostka_matrix(n, mode), &parse_table(src));
        if !bad.is_empty() {
            return Err(format!("K_{n} {mode:?}: {bad:?}"));
        }
        require(&kostka::monomiality_check(n, mode))?;
    }
    Ok("K_2, K_3, K_4 and multiparameter K_3, K_4 entrywise".into())
}

fn worked_entry() -> Outcome {
    let e = lib(kostka_entry(&comp("1224113"), &comp("2312312"), Mode::Single))?;
    if e == "q^15 t^9".parse().unwrap() {
        Ok(format!("K_14(I,J) = {e}"))
    } else {
        Err(format!("got {e}"))
    }
}

fn determinants() -> Outcome {
    for n in 2..=7 {
        for mode in [Mode::Single, Mode::Multi] {
            let rep = lib(kostka::det_check(n, mode, 20))?;
            let symbolic = n <= kostka::det_exact_limit(mode);
            require_method(&rep, symbolic, kostka::DET_POINTS)?;
        }
    }
    Ok("symbolic for n <= 5 single and n <= 4 multi, 5 points otherwise".into())
}

fn symmetries() -> Outcome {
    for n in 1..=7 {
        require(&kostka::symmetry_eq4(n))?;
        require(&kostka::product_identity_eq5(n))?;
    }
    let printed = kostka::product_identity_eq5_printed(3);
    let cx = printed.counterexample.clone().ok_or("printed exponent not violated")?;
    if cx["I"] != serde_json::json!([2, 1]) || cx["J"] != serde_json::json!([3]) {
        return Err(format!("unexpected first violation {cx}"));
    }
    let fixture = std::fs::read_to_string(format!("{}/tests/fixtures/eq5_printed_3.jsonl", env!("CARGO_MANIFEST_DIR")))
        .map_err(|e| e.to_string())?;
    let line: serde_json::Value = serde_json::from_str(fixture.trim()).map_err(|e| e.to_string())?;
    if line["counterexample"] != cx {
        return Err("fixture counterexample differs".into());
    }
    Ok(format!(
        "both symmetries for n <= 7; printed exponent fails at I=(2,1), J=(3): {} vs {}",
        cx["product"].as_str().unwrap_or_default(),
        cx["claimed"].as_str().unwrap_or_default()
    ))
}

fn blocks() -> Outcome {
    for n in 2..=8 {
        require(&lib(kostka::block_check(n))?)?;
    }
    Ok("recursion and submatrix property for n <= 8".into())
}

fn specializations() -> Outcome {
    for n in 1..=7 {
        require(&verify::specialize_check(n))?;
    }
    for n in 1..=6 {
        require(&verify::lattice_check(n))?;
    }
    Ok("q=0/t=1 and q=1/t=0 for n <= 7; lattice congruence for n <= 6".into())
}

fn lambda_expansion() -> Outcome {
    for n in 1..=6 {
        require(&verify::lambda_check(n))?;
    }
    let ours = render_lambda_factored(&htilde_lambda_factored(&comp("22")), true);
    let reference = H22_LAMBDA.split_once('=').unwrap().1.trim_end().trim_end_matches("\\,.");
    if squash(&ours) != squash(reference) {
        return Err(format!("H_22 renders as {ours}"));
    }
    Ok("closed form matches for n <= 6; H_22 expansion verbatim".into())
}

fn dual_side() -> Outcome {
    for (n, src) in [(3, P3), (4, P4)] {
        let bad = table_mismatches(&ptilde_matrix(n), &parse_table(src));
        if !bad.is_empty() {
            return Err(format!("P_{n}: {bad:?}"));
        }
    }
    let mut deviations = Vec::new();
    for &(a, b, want) in D3.iter().chain(D4) {
        for i in [a, b] {
            let got = lib(denominator(&comp(i)))?.to_text();
            if squash(&got) != squash(want) {
                deviations.push(format!("D_{i} = {got}"));
            }
        }
    }
    if deviations != ["D_112 = (t - q)(t^2 - q)(t^3 - q)", "D_1111 = (t - q)(t^2 - q)(t^3 - q)"] {
        return Err(format!("denominator deviations {deviations:?}"));
    }
    for n in 2..=7 {
        let rep = lib(qsym::duality_check(n, 20))?;
        require_method(&rep, n <= qsym::DUALITY_SYMBOLIC_LIMIT, qsym::DUALITY_POINTS)?;
    }
    Ok(format!("matrices exact; documented deviation {}; duality symbolic n <= 4, 5 points to n = 7", deviations[0]))
}

fn dual_numerator() -> Outcome {
    let g = lib(gtilde_coeff(&comp("1224113"), &comp("2312312")))?;
    let num = g.numerator().to_text();
    let (sign, magnitude) = match num.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("+", num.as_str()),
    };
    if magnitude == "t^14q^15" {
        Ok(format!("numerator {sign}t^14q^15"))
    } else {
        Err(format!("numerator {num}"))
    }
}

fn multiplication() -> Outcome {
    let printed = lib(verify_product(&comp("12"), 2, 0))?;
    require_method(&printed, true, 0)?;
    let terms = lib(expand_product(&comp("12"), 2, &ZSequence::symbolic(2)))?;
    for (t, &(j, want)) in terms.iter().zip(PRODUCT_12_2) {
        if t.continuation != comp(j) || squash(&t.factored(false)) != squash(want) {
            return Err(format!("H_{j}: {}", t.factored(false)));
        }
    }
    for seed in 1..=3 {
        for n in 1..PRODUCT_BOUND {
            require(&lib(verify_product_range(n, PRODUCT_BOUND, seed))?)?;
        }
    }
    Ok("I=(1,2), n=2 symbolic with the four coefficients; all |I|+n <= 6 at seeds 1, 2, 3".into())
}

fn factorization() -> Outcome {
    for n in 1..=5 {
        require(&verify::factorize_check(n))?;
    }
    Ok("T=1 factorization for n <= 5".into())
}

fn triangularity() -> Outcome {
    for n in 2..=6 {
        for mode in [Mode::Single, Mode::Multi] {
            let rep = lib(kostka::triangular_products(n, mode, 20))?;
            require_method(&rep, n <= kostka::TRIANGULAR_SYMBOLIC_LIMIT, kostka::TRIANGULAR_POINTS)?;
        }
    }
    Ok("lower and upper, symbolic n <= 4, 3 points for n = 5, 6".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("golden Kostka matrices", 1.0, golden_matrices),
        ("worked entry of K_14", 1.0, worked_entry),
        ("determinant formula", 30.0, determinants),
        ("symmetries", 10.0, symmetries),
        ("block structure", 20.0, blocks),
        ("specializations and lattice congruence", 20.0, specializations),
        ("Lambda expansion", 10.0, lambda_expansion),
        ("dual side", 60.0, dual_side),
        ("degree 14 dual numerator", 1.0, dual_numerator),
        ("multiplication rule", 60.0, multiplication),
        ("T=1 factorization", 20.0, factorization),
        ("triangularity", 30.0, triangularity),
    ];
    let mut failed = 0;
    for (idx, (title, estimate, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status} {title}: {detail} [{secs:.2}s, estimate {estimate}s]", idx + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
