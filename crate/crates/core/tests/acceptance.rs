//! Acceptance criteria 1-14. Each criterion gets a fresh workbench, so its
//! wall time includes building every object it needs.

use std::io::Write;
use std::time::{Duration, Instant};

use forge::verify::{registry, run_checks, select, to_json, CheckResult, Status, Workbench};
use serde_json::{json, Value};

struct Outcome {
    ok: bool,
    elapsed: Duration,
    detail: String,
}

fn run(ids: &[&str], seed: u64, jobs: usize) -> (Vec<CheckResult>, Duration) {
    let reg = registry();
    let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    let sel = select(&reg, &ids).expect("known ids");
    let wb = Workbench::new(seed, None);
    let start = Instant::now();
    let results = run_checks(&sel, &wb, jobs);
    (results, start.elapsed())
}

fn computed<'a>(results: &'a [CheckResult], id: &str) -> &'a Value {
    &results.iter().find(|r| r.check_id == id).expect("check ran").computed
}

/// Runs `ids`, then requires every check to pass, each pinned value to match,
/// and the wall time to stay under `limit`.
fn criterion(ids: &[&str], pinned: &[(&str, Value)], limit: Duration) -> Outcome {
    let (results, elapsed) = run(ids, 1, 2);
    let mut problems = Vec::new();
    for r in results.iter().filter(|r| r.status != Status::Pass) {
        problems.push(format!("{} is {:?}: {}", r.check_id, r.status, r.computed));
    }
    for (id, want) in pinned {
        let got = computed(&results, id);
        if got != want {
            problems.push(format!("{id}: got {got}, pinned {want}"));
        }
    }
    if elapsed >= limit {
        problems.push(format!("took {elapsed:?}, limit {limit:?}"));
    }
    Outcome { ok: problems.is_empty(), elapsed, detail: problems.join("; ") }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn c1() -> Outcome {
    let cases: [(&str, u64); 7] = [
        ("sp62.order", 1_451_520),
        ("su42.order", 25_920),
        ("aut.order", 51_840),
        ("o72.order", 1_451_520),
        ("go4p.order", 1152),
        ("go4m.order", 1440),
        ("co4p.order", 2304),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    let mut total = Duration::ZERO;
    for (id, order) in cases {
        let o = criterion(&[id], &[(id, json!(order))], secs(5));
        total += o.elapsed;
        if !o.ok {
            ok = false;
            detail.push(o.detail);
        }
    }
    Outcome { ok, elapsed: total, detail: detail.join("; ") }
}

fn c2() -> Outcome {
    criterion(
        &[
            "table1.sp62.classes",
            "table1.sp62.sizes",
            "table1.sp62.centralizers",
            "table1.sp62.dims",
            "table1.aut.classes",
            "table1.aut.sizes",
            "table1.aut.centralizers",
            "table1.aut.outside",
        ],
        &[
            ("table1.sp62.classes", json!({"classes": 4, "rows_match": "exact"})),
            ("table1.aut.classes", json!({"classes": 4, "rows_match": "exact"})),
            (
                "table1.sp62.dims",
                json!({
                    "a2": {"dim_cu": 6, "dim_cv": 4},
                    "b3": {"dim_cu": 4, "dim_cv": 3},
                    "b1": {"dim_cu": 4, "dim_cv": 5},
                    "c2": {"dim_cu": 4, "dim_cv": 4}
                }),
            ),
            ("table1.sp62.centralizers", json!({"a2": 4608, "b3": 384, "b1": 23040, "c2": 1536})),
            ("table1.aut.centralizers", json!({"a2": 1152, "b3": 96, "b1": 1440, "c2": 192})),
            (
                "table1.aut.outside",
                json!({"derived_order": 25920, "in_derived": {"a2": true, "b3": false, "b1": false, "c2": true}}),
            ),
        ],
        secs(60),
    )
}

fn c3() -> Outcome {
    criterion(
        &["natural.transitive", "natural.uniserial", "natural.stabilizers", "natural.actions"],
        &[
            ("natural.transitive", json!([63])),
            ("natural.uniserial", json!([1, 1, 1, 1, 1])),
            ("natural.stabilizers", json!({"N(V1)=X23": true, "N(V2)=X13": true, "N(V3)=X12": true})),
        ],
        secs(30),
    )
}

fn c4() -> Outcome {
    criterion(
        &["spin.module", "spin.orbits", "spin.fixed", "spin.line"],
        &[
            ("spin.module", json!({"dim": 8, "factor_dims": [8], "found": true})),
            ("spin.orbits", json!([135, 120])),
            ("spin.fixed", json!({"dim C_U(S)": 1, "N(C_U(S))=X12": true, "C_U(S)=C_U(O2(X12))": true})),
            ("spin.line", json!({"S-invariant 2-spaces": 1, "N(U2)=X13": true, "O^2(X1) centralizes U2": true})),
        ],
        secs(120),
    )
}

fn c5() -> Outcome {
    criterion(
        &["line.quotient", "line.threes", "line.quaternion", "line.center", "line.invariant8", "line.fusion"],
        &[
            ("line.quaternion", json!({"orders": [8, 8], "quaternion": true, "commute": true})),
            ("line.center", json!({"|Z(Q)|": 8, "|Q'|": 2, "C_T(Z(Q))=<tau1>": true, "C_Q(tau1)=Z(Q)": true})),
            ("line.invariant8", json!({"count": 3, "as listed": true})),
            ("line.fusion", json!(true)),
        ],
        secs(60),
    )
}

fn c6() -> Outcome {
    criterion(
        &["facts.order16", "facts.extraspecial128", "noover.search"],
        &[
            ("facts.order16", json!({"hits": 0})),
            ("facts.extraspecial128", json!({"hits": 0})),
            ("noover.search", json!({"hits": 0})),
        ],
        secs(120),
    )
}

fn c7() -> Outcome {
    criterion(
        &["notf.sum", "notf.control"],
        &[
            ("notf.sum", json!([{"sylow_of": "Sp6_2", "offenders": 0}, {"sylow_of": "AutSU4_2", "offenders": 0}])),
            ("notf.control", json!({"nonempty": true, "transvection": true})),
        ],
        secs(120),
    )
}

fn c8() -> Outcome {
    criterion(
        &["nonsplit.fixed"],
        &[("nonsplit.fixed", json!({"dim C_W(X)": 1, "C_W(X)=<e7>": true, "dim C_W(S) > dim C_W(X)": true}))],
        secs(10),
    )
}

fn c9() -> Outcome {
    criterion(
        &["forms.o4.singular", "forms.o4.points", "forms.o4.lines", "forms.o4.hyper"],
        &[
            ("forms.o4.singular", json!(32)),
            ("forms.o4.points", json!([16, 12, 12])),
            ("forms.o4.lines", json!(130)),
            ("forms.o4.hyper", json!({"three_spaces": 40, "with_singular_point": 40})),
        ],
        secs(5),
    )
}

fn c10() -> Outcome {
    criterion(
        &["go4.origin", "go4.sample"],
        &[(
            "go4.sample",
            json!({"sample": 100, "recovered": 100, "outcome_classes": ["plus", "minus"], "consistent": true}),
        )],
        secs(30),
    )
}

fn c11() -> Outcome {
    criterion(
        &["extraspec.types", "extraspec.involutions"],
        &[(
            "extraspec.involutions",
            json!({"groups": [{"type": "+", "fails": 0}, {"type": "-", "fails": 0}], "nonvacuous": true}),
        )],
        secs(60),
    )
}

fn c12() -> Outcome {
    criterion(
        &["chamber.count", "chamber.residues"],
        &[
            ("chamber.count", json!({"chambers": 2835, "panel_sizes": [[3], [3], [3]]})),
            (
                "chamber.residues",
                json!([
                    {"colours": [1, 2], "size": 21, "kind": "PG(2,2)"},
                    {"colours": [2, 3], "size": 45, "kind": "GQ(2,2)"},
                    {"colours": [1, 3], "size": 9, "kind": "digon"}
                ]),
            ),
        ],
        secs(60),
    )
}

fn c13() -> Outcome {
    criterion(
        &["facts.threes.sp62", "facts.b1_threes"],
        &[
            ("facts.b1_threes", json!({"centralizer": 1440, "comm_dims": [2, 2, 4, 4]})),
            (
                "facts.threes.sp62",
                json!({
                    "comm_dims": [2, 4, 6],
                    "dims_separate_classes": true,
                    "thompson_order": 27,
                    "thompson_elementary": true,
                    "unique_max_elementary": true,
                    "meets_every_class": true,
                    "generated_by_class_members": true,
                }),
            ),
        ],
        secs(60),
    )
}

fn without_runtime(results: &[CheckResult]) -> Value {
    let mut v: Value = serde_json::from_str(&to_json(results)).unwrap();
    for r in v.as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("runtime_ms");
    }
    v
}

fn c14() -> Outcome {
    let all: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let (a, ta) = run(&all, 1, 1);
    let (b, tb) = run(&all, 0x5eed, 3);
    let mut problems = Vec::new();
    if all.len() < 25 {
        problems.push(format!("only {} checks", all.len()));
    }
    let fails = a.iter().filter(|r| r.status != Status::Pass).count();
    if fails > 0 {
        problems.push(format!("{fails} checks did not pass"));
    }
    if without_runtime(&a) != without_runtime(&b) {
        problems.push("reports differ".into());
    }
    Outcome { ok: problems.is_empty(), elapsed: ta + tb, detail: problems.join("; ") }
}

/// Written past the test harness's capture so the lines show in every run.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("group orders match the order formulas", c1),
        ("involution census", c2),
        ("natural module", c3),
        ("spin module", c4),
        ("line parabolic", c5),
        ("subgroup non-existence", c6),
        ("no F-module on V + U", c7),
        ("non-split orthogonal module", c8),
        ("O4+(3) taxonomy", c9),
        ("invariant form recovery", c10),
        ("extraspecial harness", c11),
        ("chamber system", c12),
        ("order-3 structure", c13),
        ("determinism", c14),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        let tag = if o.ok { "PASS" } else { "FAIL" };
        report(format!("criterion {:>2} {tag}  {name} ({:.1} s)", i + 1, o.elapsed.as_secs_f64()));
        if !o.ok {
            report(format!("             {}", o.detail));
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
