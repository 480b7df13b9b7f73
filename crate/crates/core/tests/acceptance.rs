//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p rimhook-core --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use rimhook::crystal::verify::{verify_theorem, TheoremReport};
use rimhook::rim_hook::terminal_cores;
use rimhook::{
    adjacent, compose_quintuple, core, is_generalized_l_partition, partitions_up_to,
    removable_rim_hooks, BoxCoord, Ell, JmQuintuple, Orientation, Partition,
};

fn ell(l: usize) -> Ell {
    Ell::new(l).unwrap()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Runs `name` for each `(ell, max_n)` and collects a summary.
fn run(name: &str, cases: &[(usize, usize)]) -> Result<String, String> {
    let mut summary = Vec::new();
    let mut failures = Vec::new();
    for &(l, n) in cases {
        let report: TheoremReport = verify_theorem(name, ell(l), n).map_err(|e| e.to_string())?;
        summary.push(format!("l={l} n<={n} checked={}", report.checked));
        if !report.passed() {
            failures.push(format!(
                "{name} l={l} n<={n}: {} violations, first: {}",
                report.violations.len(),
                report.violations[0]
            ));
        }
    }
    if failures.is_empty() {
        Ok(format!("{name} [{}]", summary.join(", ")))
    } else {
        Err(failures.join("; "))
    }
}

fn run_all(jobs: &[(&str, &[(usize, usize)])]) -> Result<String, String> {
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for (name, cases) in jobs {
        match run(name, cases) {
            Ok(s) => ok.push(s),
            Err(e) => bad.push(e),
        }
    }
    if bad.is_empty() {
        Ok(ok.join("; "))
    } else {
        Err(bad.join("; "))
    }
}

const ELLS_16: &[(usize, usize)] = &[(3, 16), (4, 16), (5, 16)];
const ELLS_12: &[(usize, usize)] = &[(3, 12), (4, 12), (5, 12)];
const CRYSTAL: &[(usize, usize)] = &[(3, 10), (4, 10), (5, 8)];

fn criterion_8() -> Result<String, String> {
    let l = ell(3);
    let mut checked = 0;
    for q in partitions_up_to(12) {
        let ends = terminal_cores(&q, l);
        if ends.len() != 1 {
            return Err(format!("{q} reaches cores {ends:?}"));
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} partitions, every removal sequence ends at one core"
    ))
}

fn criterion_9() -> Result<String, String> {
    let l = ell(3);
    let big = p("10,8,3,2,2,1,1,1,1,1");
    let expected: Vec<Vec<usize>> = vec![
        vec![19, 13, 10, 8, 7, 6, 5, 4, 2, 1],
        vec![16, 10, 7, 5, 4, 3, 2, 1],
        vec![10, 4, 1],
        vec![8, 2],
        vec![7, 1],
        vec![5],
        vec![4],
        vec![3],
        vec![2],
        vec![1],
    ];
    if big.hook_table().rows() != expected.as_slice() {
        return Err(format!(
            "hook table of {big} is {:?}",
            big.hook_table().rows()
        ));
    }
    let c = core(&p("3,2,1"), l);
    if !c.is_empty() {
        return Err(format!("core of 3,2,1 is {c}"));
    }
    let hooks = removable_rim_hooks(&p("4,1,1,1"), l);
    let shape: Vec<(BoxCoord, Orientation)> =
        hooks.iter().map(|h| (h.head, h.orientation)).collect();
    let want = vec![
        (BoxCoord::new(1, 2), Orientation::Horizontal),
        (BoxCoord::new(2, 1), Orientation::Vertical),
    ];
    if shape != want {
        return Err(format!("hooks of 4,1,1,1 are {shape:?}"));
    }
    if adjacent(&hooks[0].boxes, &hooks[1].boxes) {
        return Err("the two hooks of 4,1,1,1 are adjacent".into());
    }
    if is_generalized_l_partition(&p("3,1,1,1"), l) {
        return Err("3,1,1,1 accepted as a generalized 3-partition".into());
    }
    let q = JmQuintuple::new(p("1"), 3, 2, p("2,1,1,1"), p("2,1"));
    let lam = compose_quintuple(&q, l).map_err(|e| e.to_string())?;
    if lam != p("15,10,8,6,2,2,2,2,2,1,1,1,1,1") {
        return Err(format!("{q} composes to {lam}"));
    }
    Ok("hook table, core, hooks of 4,1,1,1, 3,1,1,1 rejected, worked quintuple".into())
}

type Check = Box<dyn Fn() -> Result<String, String>>;

fn main() -> ExitCode {
    let criteria: Vec<(usize, &str, Check)> = vec![
        (
            1,
            "JM iff generalized",
            Box::new(|| run("main_theorem_JM", ELLS_16)),
        ),
        (
            2,
            "l-partition iff regular and star",
            Box::new(|| run("main_theorem_l_partitions", ELLS_16)),
        ),
        (3, "regularization", Box::new(|| run("reg_prop", ELLS_16))),
        (
            4,
            "quintuple round trips",
            Box::new(|| run("construct_JMs", ELLS_16)),
        ),
        (
            5,
            "hook lemmas",
            Box::new(|| {
                run_all(&[
                    ("rearrange", ELLS_16),
                    ("adding", ELLS_12),
                    ("JMAAR", ELLS_16),
                    ("hook_length_divisible", ELLS_16),
                ])
            }),
        ),
        (
            6,
            "crystal isomorphism",
            Box::new(|| run("isomorphism", &[(3, 10), (4, 10)])),
        ),
        (
            7,
            "crystal statements",
            Box::new(|| {
                run_all(&[
                    ("cores", CRYSTAL),
                    ("nodes_JM", CRYSTAL),
                    ("cancelation", CRYSTAL),
                    ("irreducible_nodes", CRYSTAL),
                    ("top_and_bottom", CRYSTAL),
                    ("top_and_bottom_JM", CRYSTAL),
                    ("top_and_bottom_weak", CRYSTAL),
                ])
            }),
        ),
        (8, "core well-defined", Box::new(criterion_8)),
        (9, "fixtures", Box::new(criterion_9)),
        (
            10,
            "weak detection routes agree",
            Box::new(|| run("weak_routes", &[(3, 10), (4, 10)])),
        ),
    ];

    let mut failed = 0;
    for (n, title, check) in criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {n} ({title}, {secs:.1}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {n} ({title}, {secs:.1}s): {detail}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
