//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use modring::borelweil::{
    comultiplication, dual_highest_weight_vector, highest_weight_vector, inner_product,
    verify_co_axioms_bounded, CoAxiom, Weight, WeightMonoid,
};
use modring::invariantforms::{
    build_group, build_group_in, invariant_spaces, molien_table, verify_graded_ring,
    verify_path_equality, GroupName,
};
use modring::qforms::{
    discriminant, discriminant_numerator, monomial_basis, verify_holomorphic_ring,
};
use modring::{with_group, NoRadical, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn run_tool(tool: &str, args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let exe = match tool {
        "bw" => env!("CARGO_BIN_EXE_bw"),
        "amf" => env!("CARGO_BIN_EXE_amf"),
        _ => env!("CARGO_BIN_EXE_emf"),
    };
    let out = Command::new(exe)
        .args(args)
        .output()
        .map_err(|e| format!("{tool}: {e}"))?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn run_json(tool: &str, args: &[&str]) -> Result<Value, String> {
    let (code, stdout) = run_tool(tool, args)?;
    if code != 0 {
        return Err(format!("{tool} {args:?} exited with {code}"));
    }
    serde_json::from_slice(&stdout).map_err(|e| format!("{tool}: bad JSON: {e}"))
}

fn all_checks_pass(report: &Value) -> bool {
    report["checks"]
        .as_array()
        .is_some_and(|cs| !cs.is_empty() && cs.iter().all(|c| c["status"] == "pass"))
}

/// `(1 + t^e) / ((1 − t^a)(1 − t^b))` up to `t^n`.
fn hilbert_series(a: usize, b: usize, e: usize, n: usize) -> Vec<usize> {
    let mut s = vec![0usize; n + 1];
    for x in (0..=n).step_by(a) {
        for y in (x..=n).step_by(b) {
            s[y] += 1;
            if y + e <= n {
                s[y + e] += 1;
            }
        }
    }
    s
}

/// `q·Π_{n≤N}(1 − qⁿ)^24` over the integers.
fn eta_product(precision: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); precision + 1];
    p[1] = BigInt::one();
    for n in 1..=precision {
        for _ in 0..24 {
            for i in (n..=precision).rev() {
                let t = p[i - n].clone();
                p[i] -= t;
            }
        }
    }
    p
}

fn highest_weight_norms() -> Outcome {
    for n in 0..=10u32 {
        let w = Weight(n);
        let h = highest_weight_vector::<Rational>(w);
        let hd = dual_highest_weight_vector::<Rational>(w);
        let a = inner_product(&h, &h).map_err(|e| e.to_string())?;
        let b = inner_product(&hd, &hd).map_err(|e| e.to_string())?;
        ensure(a == rat(1, n as i64 + 1), || {
            format!("<h_{n}, h_{n}> = {a}")
        })?;
        ensure(b == rat(n as i64 + 1, 1), || {
            format!("<h_{n}^v, h_{n}^v> = {b}")
        })?;
    }
    Ok(())
}

fn dual_vector_splits() -> Outcome {
    for total in 0..=10u32 {
        for m in 0..=total {
            let n = total - m;
            let mu = comultiplication::<Rational>(Weight(m), Weight(n));
            let image = mu
                .apply(&dual_highest_weight_vector(Weight(total)))
                .map_err(|e| e.to_string())?;
            // h_k^v = (k+1)·a^k, so the tensor has one entry at e_0 ⊗ e_0
            let mut expect = vec![Rational::zero(); (m as usize + 1) * (n as usize + 1)];
            expect[0] = rat((m as i64 + 1) * (n as i64 + 1), 1);
            ensure(image == expect, || {
                format!("mu_{{{m},{n}}}(h^v) = {image:?}")
            })?;
        }
    }
    Ok(())
}

fn co_axioms() -> Outcome {
    let report = verify_co_axioms_bounded::<Rational>(8, 6);
    ensure(report.all_passed(), || {
        let bad: Vec<_> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| &c.weights)
            .collect();
        format!("failing instances {bad:?}")
    })?;
    // pairs (0,n), (n,0) for n ≤ 8, plus one direct comparison with the identity
    ensure(report.count(CoAxiom::CoIdentity) == 27, || {
        "co-identity count".into()
    })?;
    ensure(report.count(CoAxiom::CoCommutativity) == 45, || {
        "co-commutativity count".into()
    })?;
    ensure(report.count(CoAxiom::CoAssociativity) == 84, || {
        "co-associativity count".into()
    })?;
    let cli = run_json(
        "bw",
        &[
            "verify-axioms",
            "--max",
            "8",
            "--max-triple",
            "6",
            "--format",
            "json",
        ],
    )?;
    ensure(all_checks_pass(&cli), || {
        "bw verify-axioms reported a failure".into()
    })?;
    ensure(cli["checks"].as_array().map(Vec::len) == Some(156), || {
        "bw check count".into()
    })
}

fn comultiplication_injective() -> Outcome {
    for total in 0..=10u32 {
        for m in 0..=total {
            let (w1, w2) = (Weight(m), Weight(total - m));
            let rank = comultiplication::<Rational>(w1, w2).comul_matrix().rank();
            ensure(rank == w1.plus(w2).dim(), || {
                format!("rank of mu_{{{m},{}}} is {rank}", total - m)
            })?;
        }
    }
    Ok(())
}

fn invariant_dimensions() -> Outcome {
    let cases = [
        ("Q8", (4, 4, 6)),
        ("2T", (6, 8, 12)),
        ("2O", (8, 12, 18)),
        ("2I", (12, 20, 30)),
    ];
    for (name, (a, b, e)) in cases {
        let oracle = hilbert_series(a, b, e, 40);
        let g = build_group(&name.parse().unwrap()).map_err(|e| e.to_string())?;
        let (ranks, chars) = with_group!(&g, g => {
            let spaces = invariant_spaces(g, 40).map_err(|e| e.to_string())?;
            let ranks: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
            (ranks, molien_table(g, 40).dims)
        });
        ensure(ranks == chars, || {
            format!("{name}: Reynolds {ranks:?} vs characters {chars:?}")
        })?;
        ensure(chars == oracle, || {
            format!("{name}: characters {chars:?} vs series {oracle:?}")
        })?;
    }
    let q8 = run_json("amf", &["molien", "--group", "Q8", "--max", "8"])?;
    let dims: Vec<u64> = q8["data"]["dims"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(Value::as_u64)
        .collect();
    ensure(dims == [1, 0, 0, 0, 2, 0, 1, 0, 3], || {
        format!("Q8 table {dims:?}")
    })?;
    let i2 = run_json("amf", &["molien", "--group", "2I", "--max", "40"])?;
    ensure(all_checks_pass(&i2), || "2I Reynolds ranks".into())?;
    let gens: Vec<u64> = i2["data"]["generator_weights"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(Value::as_u64)
        .collect();
    ensure(gens == [12, 20, 30], || {
        format!("2I generator weights {gens:?}")
    })
}

fn path_equality() -> Outcome {
    for name in [GroupName::Q8, GroupName::BinaryTetrahedral] {
        let g = build_group_in::<NoRadical>(&name).map_err(|e| e.to_string())?;
        let report = verify_path_equality(&g, 16).map_err(|e| e.to_string())?;
        ensure(report.all_passed() && !report.checks.is_empty(), || {
            format!("{name}: paths differ")
        })?;
    }
    Ok(())
}

fn graded_rings() -> Outcome {
    for name in [GroupName::Q8, GroupName::BinaryTetrahedral] {
        let g = build_group_in::<NoRadical>(&name).map_err(|e| e.to_string())?;
        let report = verify_graded_ring(&g, 16).map_err(|e| e.to_string())?;
        ensure(report.all_passed(), || {
            format!("{name}: graded ring check failed")
        })?;
    }
    Ok(())
}

fn discriminant_checks() -> Outcome {
    let d = discriminant(50).map_err(|e| e.to_string())?;
    let eta = eta_product(50);
    for (n, c) in eta.iter().enumerate() {
        ensure(d.coeff(n) == &Rational::from_integer(c.clone()), || {
            format!("c_{n}(Delta) = {}", d.coeff(n))
        })?;
    }
    let head: Vec<i64> = [0, 1, -24, 252, -1472, 4830].to_vec();
    for (n, c) in head.iter().enumerate() {
        ensure(d.coeff(n) == &rat(*c, 1), || {
            format!("c_{n} = {}", d.coeff(n))
        })?;
    }
    let num = discriminant_numerator(50).map_err(|e| e.to_string())?;
    let m = BigInt::from(1728);
    for (n, c) in num.coeffs().iter().enumerate() {
        ensure(c.is_integer() && (c.to_integer() % &m).is_zero(), || {
            format!("1728 does not divide c_{n} = {c}")
        })?;
    }
    let cli = run_json("emf", &["delta", "--prec", "10"])?;
    let coeffs: Vec<&str> = cli["data"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(Value::as_str)
        .collect();
    ensure(
        coeffs[..7] == ["0", "1", "-24", "252", "-1472", "4830", "-6048"],
        || format!("emf delta {coeffs:?}"),
    )
}

fn level_one_ring() -> Outcome {
    for k in (0..=40u32).step_by(2) {
        // dim M_k = #{(x, y) : 4x + 6y = k} at level one
        let count = (0..=k / 4).filter(|x| (k - 4 * x) % 6 == 0).count();
        let row = monomial_basis(k, 12).map_err(|e| e.to_string())?;
        ensure(row.rank == count && row.dim == count, || {
            format!("k={k}: rank {} dim {} count {count}", row.rank, row.dim)
        })?;
    }
    let report = verify_holomorphic_ring(24, 30).map_err(|e| e.to_string())?;
    ensure(report.all_passed(), || {
        "holomorphic ring check failed".into()
    })
}

fn determinism() -> Outcome {
    let runs: [(&str, &[&str]); 5] = [
        ("bw", &["verify-axioms", "--max", "8", "--max-triple", "6"]),
        (
            "bw",
            &["comul", "--left", "3", "--right", "5", "--seed", "11"],
        ),
        ("amf", &["molien", "--group", "2O", "--max", "24"]),
        ("amf", &["invariants", "--group", "2T", "--weight", "12"]),
        ("emf", &["basis", "--weight", "24", "--prec", "12"]),
    ];
    for (tool, args) in runs {
        let (c1, first) = run_tool(tool, args)?;
        let (c2, second) = run_tool(tool, args)?;
        ensure(c1 == 0 && c2 == 0, || {
            format!("{tool} {args:?} exit codes {c1}, {c2}")
        })?;
        ensure(first == second, || {
            format!("{tool} {args:?} output differs between runs")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        (
            "highest-weight norms 1/(n+1) and n+1 for n <= 10",
            highest_weight_norms,
        ),
        (
            "mu(h^v_{m+n}) = h^v_m (x) h^v_n for m+n <= 10",
            dual_vector_splits,
        ),
        (
            "co-identity, co-commutativity (<= 8), co-associativity (<= 6)",
            co_axioms,
        ),
        (
            "every mu with l1+l2 <= 10 has full column rank",
            comultiplication_injective,
        ),
        (
            "Reynolds ranks = character sums for Q8, 2T, 2O, 2I up to 40",
            invariant_dimensions,
        ),
        (
            "abstract product = classical product for Q8 and 2T up to 16",
            path_equality,
        ),
        ("graded ring checks for Q8 and 2T up to 16", graded_rings),
        (
            "Delta coefficients, eta-product oracle, 1728 divisibility",
            discriminant_checks,
        ),
        (
            "E4/E6 ranks = dimensions for k <= 40, ring checks at 24/30",
            level_one_ring,
        ),
        ("repeated CLI runs give byte-identical JSON", determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (desc, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {desc}  ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {desc}  ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.2}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
