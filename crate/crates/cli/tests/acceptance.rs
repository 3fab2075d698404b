//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qhankel_core::hankel::{check_random_determinants, verify_theorem, Theorem, TheoremReport};
use qhankel_core::orthopoly::{
    check_moments, check_orthogonality, check_recurrence_big_h, check_recurrence_g, check_recurrence_h,
};
use qhankel_core::rstirling::{
    check_bigphi_recurrences, check_dobinski, check_falling_expansion, check_generating_function,
    check_remark_identities,
};
use qhankel_core::{BigInt, BigRational, CheckReport, OrthKind, StirlingTable};

const R_SET: [i64; 4] = [0, 1, 2, 3];
const THEOREM_BUDGET: Duration = Duration::from_secs(60);
const VERIFY_ALL_BUDGET: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool")
        .install(f)
}

fn theorem_grid(theorem: Theorem) -> (Vec<TheoremReport>, Duration) {
    let start = Instant::now();
    let reps = single_threaded(|| verify_theorem(theorem, 6, &R_SET));
    (reps, start.elapsed())
}

fn theorem_criterion(reps: &[TheoremReport], elapsed: Duration) -> Outcome {
    let expected = 6 * R_SET.len() * 2;
    if reps.len() != expected {
        return Err(format!("{} cases, expected {expected}", reps.len()));
    }
    if let Some(bad) = reps.iter().find(|r| !r.equal || r.error.is_some()) {
        return Err(bad.summary());
    }
    if elapsed > THEOREM_BUDGET {
        return Err(format!("grid took {elapsed:.2?}, budget {THEOREM_BUDGET:?}"));
    }
    Ok(format!("{expected}/{expected} cases exact in {elapsed:.2?}"))
}

fn all_pass(reports: &[CheckReport]) -> Outcome {
    match reports.iter().find(|c| !c.passed) {
        Some(bad) => Err(bad.to_string()),
        None => Ok(format!("{} checks", reports.len())),
    }
}

fn criterion_cofactor(grids: &[&[TheoremReport]]) -> Outcome {
    let mut grid_count = 0;
    for rep in grids.iter().flat_map(|g| g.iter()).filter(|r| r.n <= 4) {
        if rep.cofactor_equal != Some(true) {
            return Err(format!("grid matrix: {}", rep.summary()));
        }
        grid_count += 1;
    }
    let random: Vec<CheckReport> = (0..4).map(|seed| check_random_determinants(seed, 50)).collect();
    all_pass(&random)?;
    Ok(format!("{grid_count} grid matrices and 200 random matrices agree"))
}

fn criterion_product_route() -> Outcome {
    let mut n_checks = 0;
    for theorem in [Theorem::T21, Theorem::T31] {
        for r in R_SET {
            for n in 1..=6 {
                let closed = theorem.closed_form(n, 0, r).map_err(|e| e.to_string())?;
                if theorem.norm_product(n, r) != closed {
                    return Err(format!("theorem {theorem} n={n} r={r}"));
                }
                n_checks += 1;
            }
        }
    }
    Ok(format!("{n_checks} norm products equal the offset-0 closed forms"))
}

fn criterion_offset_route() -> Outcome {
    let mut n_checks = 0;
    for theorem in [Theorem::T21, Theorem::T31] {
        for r in R_SET {
            for n in 1..=6 {
                if theorem.signed_constant_term(n, r) != theorem.offset_sum(n, r) {
                    return Err(format!("theorem {theorem} n={n} r={r}"));
                }
                n_checks += 1;
            }
        }
    }
    Ok(format!("{n_checks} constant terms equal the offset-1 sums"))
}

fn criterion_identities() -> Outcome {
    let mut reps = Vec::new();
    for r in R_SET {
        for n in 0..=8 {
            reps.push(check_falling_expansion(n, r));
            reps.push(check_generating_function(n, r, 12));
            reps.push(check_bigphi_recurrences(n, r));
            reps.extend(check_remark_identities(n, r));
        }
        for n in 1..=8 {
            reps.push(check_recurrence_h(n, r));
            reps.push(check_recurrence_big_h(n, r));
            reps.push(check_recurrence_g(n, r));
        }
        for n in 0..=6 {
            reps.push(check_dobinski(n, r, 12));
            for kind in [OrthKind::H, OrthKind::G, OrthKind::BigH] {
                reps.push(check_moments(kind, n, r));
                for k in 0..=n {
                    reps.push(check_orthogonality(kind, n, k, r));
                }
            }
        }
    }
    all_pass(&reps)
}

/// Set partitions of an `n`-set, counted by enumerating restricted growth
/// strings.
fn count_partitions(n: usize) -> u64 {
    fn go(pos: usize, n: usize, max: usize) -> u64 {
        if pos == n {
            return 1;
        }
        (0..=max + 1).map(|b| go(pos + 1, n, max.max(b))).sum()
    }
    if n == 0 {
        1
    } else {
        go(1, n, 0)
    }
}

/// `T(n, k) = T(n-1, k-1) + (k + r) T(n-1, k)` over the integers.
fn integer_r_stirling(n_max: usize, r: i64) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::from(0); n_max + 1]; n_max + 1];
    t[0][0] = BigInt::from(1);
    for n in 1..=n_max {
        for k in 0..=n {
            let mut v = &t[n - 1][k] * BigInt::from(k as i64 + r);
            if k > 0 {
                v += &t[n - 1][k - 1];
            }
            t[n][k] = v;
        }
    }
    t
}

fn criterion_degenerations() -> Outcome {
    let bell = [1u64, 1, 2, 5, 15, 52];
    let table = StirlingTable::new(0, 5);
    let one = BigRational::from_integer(1.into());
    let zero = BigRational::from_integer(0.into());
    for (n, &b) in bell.iter().enumerate() {
        let brute = count_partitions(n);
        let lib = table.phi(n as u32).eval_q1(&one, &zero);
        if brute != b || lib != BigRational::from_integer(b.into()) {
            return Err(format!("n={n}: brute force {brute}, library {lib}, expected {b}"));
        }
    }
    for r in R_SET {
        let oracle = integer_r_stirling(10, r);
        let table = StirlingTable::new(r, 10);
        for n in 0..=10u32 {
            for k in 0..=n {
                let got = table.get(n, k).eval_at_one();
                let want = BigRational::from_integer(oracle[n as usize][k as usize].clone());
                if got != want {
                    return Err(format!("S({n},{k},{r}) at q=1: library {got}, recurrence {want}"));
                }
            }
        }
    }
    Ok("Bell numbers 1,1,2,5,15,52 and 4 x 66 r-Stirling values match".into())
}

fn criterion_verify_all() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qhankel"))
        .args(["verify", "--suite", "all", "--parallelism", "1"])
        .env_remove("QHANKEL_FORMAT")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let last = stdout.lines().last().unwrap_or("").to_string();
    if !out.status.success() {
        return Err(format!("exit status {:?}; {last}", out.status.code()));
    }
    if elapsed > VERIFY_ALL_BUDGET {
        return Err(format!("took {elapsed:.2?}, budget {VERIFY_ALL_BUDGET:?}"));
    }
    Ok(format!("exit 0 in {elapsed:.2?} ({last})"))
}

fn main() -> ExitCode {
    let (grid21, t21) = theorem_grid(Theorem::T21);
    let (grid31, t31) = theorem_grid(Theorem::T31);
    let criteria: Vec<Criterion> = vec![
        (
            "1 phi Hankel determinants equal closed forms",
            Box::new(|| theorem_criterion(&grid21, t21)),
        ),
        (
            "2 Phi Hankel determinants equal closed forms",
            Box::new(|| theorem_criterion(&grid31, t31)),
        ),
        (
            "3 Bareiss agrees with cofactor expansion",
            Box::new(|| criterion_cofactor(&[&grid21, &grid31])),
        ),
        (
            "4 norm products equal offset-0 closed forms",
            Box::new(criterion_product_route),
        ),
        ("5 constant terms equal offset-1 sums", Box::new(criterion_offset_route)),
        ("6 identity suites", Box::new(criterion_identities)),
        ("7 q = 1 degenerations", Box::new(criterion_degenerations)),
        (
            "8 verify --suite all on the default grid",
            Box::new(criterion_verify_all),
        ),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
