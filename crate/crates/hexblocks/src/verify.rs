//! Named verification suites: each one cross-checks a slice of the
//! machinery against published values, an independent computation route,
//! or an injected-fault control, and reports one line per check.

use crate::asymptotics::{asymptotic_check, asymptotic_form, extrapolate_growth, find_roots};
use crate::classify::PolyominoClass;
use crate::enumerate;
use crate::series::{blocks_gf, build_level1_system, series_expand, solve_linear_system};
use crate::transfer::{
    check_level1_equations, check_level2_equations, count_blocks, count_cheesy,
    level1_statistics, level2_statistics, level1_identities, level2_identities, StateTable,
};
use num_bigint::BigUint;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::HashSet;

/// Counts published for areas 1..=12: column-convex and levels 1-3.
pub const PUBLISHED_COUNTS: [(u32, [u64; 12]); 4] = [
    (0, [1, 3, 11, 42, 162, 626, 2419, 9346, 36106, 139483, 538841, 2081612]),
    (1, [1, 3, 11, 44, 184, 784, 3363, 14451, 62097, 266716, 1145074, 4914448]),
    (2, [1, 3, 11, 44, 186, 810, 3582, 15952, 71242, 318441, 1423411, 6360809]),
    (3, [1, 3, 11, 44, 186, 812, 3614, 16259, 73558, 333683, 1515454, 6885303]),
];

/// Published growth constants and amplitudes for levels 1-3.
pub const PUBLISHED_ASYMPTOTICS: [(u32, f64, f64); 3] = [
    (1, 4.289698, 0.126651),
    (2, 4.462811, 0.102214),
    (3, 4.538766, 0.090504),
];

/// Growth constants of cheesy polyominoes, levels 1-3, quoted from the
/// companion enumeration of that class; external inputs here.
pub const CHEESY_GROWTH_EXTERNAL: [f64; 3] = [4.114908, 4.231836, 4.288631];

/// Column-convex growth constant, shared by both classes at level 0.
pub const COLUMN_CONVEX_GROWTH: f64 = 3.863131;

pub const DEFAULT_ORACLE_MAX_AREA: u32 = 9;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Table1,
    GfCross,
    Oracle,
    Eq1,
    Eq2,
    Reflection,
    Asymptotics,
    Extrapolate,
    All,
}

impl Suite {
    pub fn from_name(name: &str) -> Option<Suite> {
        Some(match name {
            "table1" => Suite::Table1,
            "gf-cross" => Suite::GfCross,
            "oracle" => Suite::Oracle,
            "eq1" => Suite::Eq1,
            "eq2" => Suite::Eq2,
            "reflection" => Suite::Reflection,
            "asymptotics" => Suite::Asymptotics,
            "extrapolate" => Suite::Extrapolate,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub const ALL_NAMES: [&'static str; 9] = [
        "table1", "gf-cross", "oracle", "eq1", "eq2", "reflection",
        "asymptotics", "extrapolate", "all",
    ];
}

/// Runs one suite. `oracle_max_area` caps the exhaustive-generation areas
/// (the `oracle` and `reflection` suites); everything else ignores it.
pub fn run_suite(suite: Suite, oracle_max_area: u32) -> SuiteReport {
    match suite {
        Suite::Table1 => table1_suite(),
        Suite::GfCross => gf_cross_suite(),
        Suite::Oracle => oracle_suite(oracle_max_area),
        Suite::Eq1 => eq1_suite(),
        Suite::Eq2 => eq2_suite(),
        Suite::Reflection => reflection_suite(oracle_max_area.min(8)),
        Suite::Asymptotics => asymptotics_suite(),
        Suite::Extrapolate => extrapolate_suite(),
        Suite::All => {
            let mut report = SuiteReport { suite: "all", checks: Vec::new() };
            for s in [
                Suite::Table1,
                Suite::GfCross,
                Suite::Oracle,
                Suite::Eq1,
                Suite::Eq2,
                Suite::Reflection,
                Suite::Asymptotics,
                Suite::Extrapolate,
            ] {
                report.checks.extend(run_suite(s, oracle_max_area).checks);
            }
            report
        }
    }
}

/// Transfer counts against all 48 published entries.
fn table1_suite() -> SuiteReport {
    let mut report = SuiteReport { suite: "table1", checks: Vec::new() };
    let mut matched = 0;
    let mut total = 0;
    for (m, expected) in PUBLISHED_COUNTS {
        let t = count_blocks(m, 12);
        for (i, want) in expected.iter().enumerate() {
            total += 1;
            if t.get(i + 1) == &BigUint::from(*want) {
                matched += 1;
            } else {
                report.push(
                    format!("table1 level {m} area {}", i + 1),
                    false,
                    format!("transfer count {} != published {want}", t.get(i + 1)),
                );
            }
        }
    }
    report.push(
        "table1 entries",
        matched == total,
        format!("{matched}/{total} entries matched"),
    );
    report
}

/// Closed-form expansions against transfer counts through order 30.
fn gf_cross_suite() -> SuiteReport {
    let mut report = SuiteReport { suite: "gf-cross", checks: Vec::new() };
    for m in 1..=3u32 {
        let gf = series_expand(&blocks_gf(m).unwrap(), 30).unwrap();
        let dp = count_blocks(m, 30);
        let bad = (0..=30).find(|&n| gf[n].to_biguint().as_ref() != Some(dp.get(n)));
        report.push(
            format!("gf-cross level {m}"),
            bad.is_none(),
            match bad {
                None => "closed form equals transfer counts to order 30".into(),
                Some(n) => format!(
                    "first mismatch at order {n}: gf {} vs dp {}",
                    gf[n],
                    dp.get(n)
                ),
            },
        );
    }
    report
}

/// Exhaustive-generation counts against transfer counts, for the class
/// and its incomplete companion.
fn oracle_suite(max_area: u32) -> SuiteReport {
    let mut report = SuiteReport { suite: "oracle", checks: Vec::new() };
    let max_area = max_area.min(enumerate::HARD_AREA_LIMIT);
    let mut jobs: Vec<(u32, u32)> = Vec::new();
    for m in 0..=3u32 {
        for n in 1..=max_area {
            jobs.push((m, n));
        }
    }
    let mut results: Vec<(u32, u32, bool, String)> = jobs
        .into_par_iter()
        .map(|(m, n)| {
            let table = StateTable::run(m, n as usize);
            let dp_u = table.complete_totals();
            let dp_v = table.incomplete_totals();
            let brute_u = enumerate::count_class(PolyominoClass::CheesyBlocks(m), n).unwrap();
            let brute_v =
                enumerate::count_class(PolyominoClass::IncompleteCheesyBlocks(m), n).unwrap();
            let ok_u = dp_u.get(n as usize) == &BigUint::from(brute_u);
            let ok_v = dp_v.get(n as usize) == &BigUint::from(brute_v);
            let detail = format!(
                "members {brute_u} (dp {}), incomplete {brute_v} (dp {})",
                dp_u.get(n as usize),
                dp_v.get(n as usize),
            );
            (m, n, ok_u && ok_v, detail)
        })
        .collect();
    results.sort_by_key(|&(m, n, _, _)| (m, n));
    for (m, n, ok, detail) in results {
        report.push(format!("oracle m={m} n={n}"), ok, detail);
    }
    report
}

/// Symbolic solve of the level-one system plus the identity checks on the
/// transfer statistics, with an injected-fault control.
fn eq1_suite() -> SuiteReport {
    let mut report = SuiteReport { suite: "eq1", checks: Vec::new() };

    let sys = build_level1_system();
    match solve_linear_system(&sys) {
        Err(e) => report.push("eq1 solve", false, format!("solver failed: {e}")),
        Ok(x) => {
            report.push(
                "eq1 solved E1 equals closed form",
                x[0] == blocks_gf(1).unwrap(),
                format!("E1 = {}", x[0]),
            );
            let residual_zero = sys.residual(&x).iter().all(|r| r.is_zero());
            report.push("eq1 solution residual", residual_zero, "M x - rhs == 0");

            let g = series_expand(&x[2], 20).unwrap();
            let st = level1_statistics(20);
            let g_ok = (0..=20).all(|n| g[n] == st.incomplete[n]);
            report.push(
                "eq1 solved G matches transfer incomplete totals",
                g_ok,
                "orders 0..=20",
            );
            let f = series_expand(&x[1].sub(&x[0]), 20).unwrap();
            report.push(
                "eq1 F1 - E1 nonnegative",
                f.iter().all(|c| !c.is_negative()),
                "height-weight excess is a counting series",
            );
        }
    }

    let rep = check_level1_equations(20);
    report.push(
        "eq1 identities to order 20",
        rep.passed(),
        match rep.failures.first() {
            None => format!("all equations hold to order {}", rep.checked_to),
            Some(f) => format!("{} fails at order {}", f.equation, f.order),
        },
    );

    let st = level1_statistics(10);
    let mut g = st.incomplete.clone();
    g[5] += 1;
    let control = level1_identities(&st.complete, &st.complete_height, &g);
    let first = control.failures.iter().map(|f| f.order).min();
    report.push(
        "eq1 negative control",
        first == Some(5),
        format!("perturbed series detected at order {first:?}"),
    );
    report
}

/// The four printed level-two identities, with an injected-fault control.
fn eq2_suite() -> SuiteReport {
    let mut report = SuiteReport { suite: "eq2", checks: Vec::new() };
    let rep = check_level2_equations(20);
    report.push(
        "eq2 identities to order 20",
        rep.passed(),
        match rep.failures.first() {
            None => format!("all four equations hold to order {}", rep.checked_to),
            Some(f) => format!("{} fails at order {}", f.equation, f.order),
        },
    );

    let st = level2_statistics(12);
    let first_c1 = st.c1.iter().position(|c| !c.is_zero());
    report.push(
        "eq2 two-cell-hole series starts late",
        first_c1.is_some_and(|n| n >= 4),
        format!("first nonzero order {first_c1:?}"),
    );

    let mut st = level2_statistics(10);
    st.e0[6] += 1;
    let control = level2_identities(&st);
    let first = control.failures.iter().map(|f| f.order).min();
    report.push(
        "eq2 negative control",
        first == Some(6),
        format!("perturbed series detected at order {first:?}"),
    );
    report
}

/// Reflection closure of the member set, by exhaustive generation.
fn reflection_suite(max_area: u32) -> SuiteReport {
    let mut report = SuiteReport { suite: "reflection", checks: Vec::new() };
    for n in 1..=max_area {
        let members: HashSet<String> = enumerate::generate(n, 1)
            .unwrap()
            .filter(|s| PolyominoClass::CheesyBlocks(1).matches(s))
            .map(|s| s.to_line())
            .collect();
        let reflected: HashSet<String> = enumerate::generate(n, 1)
            .unwrap()
            .filter(|s| PolyominoClass::CheesyBlocks(1).matches(s))
            .map(|s| s.reflect().to_line())
            .collect();
        report.push(
            format!("reflection closure n={n}"),
            members == reflected,
            format!("{} members", members.len()),
        );
    }
    report
}

/// Growth constants, amplitudes, the level-one root list, and the tail
/// behaviour of the exact coefficients.
fn asymptotics_suite() -> SuiteReport {
    let mut report = SuiteReport { suite: "asymptotics", checks: Vec::new() };
    for (level, growth, amplitude) in PUBLISHED_ASYMPTOTICS {
        let f = blocks_gf(level).unwrap();
        match asymptotic_form(&f, 30) {
            Err(e) => report.push(format!("asymptotics level {level}"), false, e.to_string()),
            Ok(form) => {
                report.push(
                    format!("growth level {level}"),
                    (form.growth - growth).abs() < 1e-6,
                    format!("computed {} vs published {growth}", form.growth_decimal(6)),
                );
                report.push(
                    format!("amplitude level {level}"),
                    (form.amplitude - amplitude).abs() < 1e-6,
                    format!(
                        "computed {} vs published {amplitude}",
                        form.amplitude_decimal(6)
                    ),
                );
            }
        }
    }

    let roots = find_roots(blocks_gf(1).unwrap().den(), 30).unwrap();
    let want = [
        (-6.109867, 0.0),
        (0.233117, 0.0),
        (0.449922, -0.087757),
        (0.449922, 0.087757),
        (0.988454, -1.537589),
        (0.988454, 1.537589),
    ];
    let all_found = want.iter().all(|&(re, im)| {
        roots.roots.iter().any(|r| {
            (r.approx().re - re).abs() < 1e-6 && (r.approx().im - im).abs() < 1e-6
        })
    });
    report.push(
        "level-1 denominator roots",
        all_found && roots.roots.len() == 6,
        "all six roots match the published list within 1e-6",
    );

    let err40 = asymptotic_check(&blocks_gf(1).unwrap(), 40).unwrap();
    report.push(
        "level-1 asymptotic error at n=40 (exact form)",
        err40 < 1e-3,
        format!("relative error {err40:.3e}"),
    );

    // same check against the published six-decimal constants
    let a = series_expand(&blocks_gf(1).unwrap(), 40).unwrap();
    let a40 = a[40].to_f64().unwrap();
    let published_err = (a40 / (0.126651 * 4.289698f64.powi(40)) - 1.0).abs();
    report.push(
        "level-1 asymptotic error at n=40 (published constants)",
        published_err < 1e-3,
        format!("a40 = {}, relative error {published_err:.3e}", a[40]),
    );

    let cheesy = count_cheesy(1, 101);
    let ratio = cheesy.ratio(101).unwrap();
    report.push(
        "cheesy growth sanity",
        (ratio - CHEESY_GROWTH_EXTERNAL[0]).abs() < 1e-2,
        format!("a101/a100 = {ratio:.6} vs external {}", CHEESY_GROWTH_EXTERNAL[0]),
    );
    report
}

/// The geometric extrapolation of the growth constants.
fn extrapolate_suite() -> SuiteReport {
    let mut report = SuiteReport { suite: "extrapolate", checks: Vec::new() };
    let mut blocks = vec![COLUMN_CONVEX_GROWTH];
    for (level, _, _) in PUBLISHED_ASYMPTOTICS {
        let form = asymptotic_form(&blocks_gf(level).unwrap(), 30).unwrap();
        blocks.push(form.growth);
    }
    let e = extrapolate_growth(&blocks).unwrap();
    report.push(
        "extrapolate blocks constants",
        (e.estimate - 4.590).abs() < 5e-4,
        format!("estimate {:.6} (snapped ratio {:?})", e.estimate, e.snapped_ratio),
    );

    let mut cheesy = vec![COLUMN_CONVEX_GROWTH];
    cheesy.extend(CHEESY_GROWTH_EXTERNAL);
    let e = extrapolate_growth(&cheesy).unwrap();
    report.push(
        "extrapolate cheesy constants",
        (e.estimate - 4.346).abs() < 5e-4,
        format!("estimate {:.6} (snapped ratio {:?})", e.estimate, e.snapped_ratio),
    );
    report
}
