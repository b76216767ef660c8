//! Acceptance criteria. Prints one PASS/FAIL line per criterion and fails
//! if any criterion fails. All comparisons are exact integer or polynomial
//! equality; there is no tolerance.

use gpaths::enumerate::{count, EnumSpec};
use gpaths::stats::{stat_table, StatId};
use gpaths::verify::{self, BijectionBounds, Check};
use gpaths::{FamilyKind, PathFamily, SchroderStep};
use num_bigint::BigInt;

// Reference triangles, frozen here independently of the library copy.
const U_ROWS: &[&[u64]] = &[
    &[1],
    &[5, 1],
    &[25, 9, 1],
    &[121, 61, 13, 1],
    &[593, 369, 113, 17, 1],
    &[2941, 2121, 825, 181, 21, 1],
    &[14777, 11881, 5489, 1553, 265, 25, 1],
];
const V_ROWS: &[&[u64]] = &[
    &[1],
    &[4, 1],
    &[20, 8, 1],
    &[96, 52, 12, 1],
    &[472, 308, 100, 16, 1],
    &[2348, 1752, 712, 164, 20, 1],
    &[11836, 9760, 4664, 1372, 244, 24, 1],
];
const H_ROWS: &[&[u64]] = &[
    &[1],
    &[4, 1],
    &[16, 8, 1],
    &[68, 48, 12, 1],
    &[304, 264, 96, 16, 1],
    &[1412, 1408, 652, 160, 20, 1],
    &[6752, 7432, 4080, 1296, 240, 24, 1],
];
const P_ROWS: &[&[u64]] = &[
    &[1],
    &[4, 1],
    &[15, 7, 1],
    &[63, 42, 11, 1],
    &[279, 230, 86, 15, 1],
    &[1291, 1226, 578, 146, 19, 1],
    &[6159, 6470, 3598, 1166, 222, 23, 1],
];

const TABLE_N: usize = 6;
const COUNTS_N: usize = 10;
const IDENTITIES_N: usize = 8;
const STATS_N: usize = 6;
const BALLOT_M: usize = 12;
const BALLOT_K: u32 = 15;

fn frozen(rows: &[&[u64]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Every route of every primary statistic against the frozen triangles.
fn golden_tables() -> Check {
    let mut failures = Vec::new();
    let mut compared = 0;
    for (stat, rows) in [
        (StatId::U, U_ROWS),
        (StatId::V, V_ROWS),
        (StatId::D, U_ROWS),
        (StatId::H, H_ROWS),
        (StatId::P, P_ROWS),
    ] {
        let expected = frozen(rows);
        for &method in stat.methods() {
            compared += 1;
            match stat_table(stat, method, TABLE_N) {
                Ok(t) if t.rows == expected => {}
                Ok(t) => failures.push(format!("{stat} by {method}: {:?}", t.rows)),
                Err(e) => failures.push(format!("{stat} by {method}: {e}")),
            }
        }
    }
    let library = verify::golden_tables(TABLE_N);
    if !library.passed {
        failures.push(library.detail);
    }
    Check {
        name: "golden tables",
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{compared} triangles exact, n <= {TABLE_N}")
        } else {
            failures.join("; ")
        },
    }
}

fn with_codomain_size(mut check: Check) -> Check {
    let spec = EnumSpec::new(PathFamily::new(FamilyKind::Schroder), 8);
    let size = count::<SchroderStep>(&spec).unwrap_or(0);
    if size != 41_586 {
        check.passed = false;
        check.detail = format!(
            "Schroder codomain at n=8 has {size} paths; {}",
            check.detail
        );
    }
    check
}

#[test]
fn acceptance_criteria() {
    let results = [
        ("AC1", golden_tables()),
        ("AC2", verify::specializations(COUNTS_N)),
        (
            "AC3",
            with_codomain_size(verify::bijection_certification(BijectionBounds::default())),
        ),
        ("AC4", verify::polynomial_identities(IDENTITIES_N)),
        ("AC5", verify::statistic_identities(STATS_N)),
        ("AC6", verify::restricted_statistics(STATS_N)),
        (
            "AC7",
            verify::ballot_resolution(BALLOT_M, BALLOT_K, TABLE_N),
        ),
    ];
    println!();
    for (label, check) in &results {
        println!("{label} {check}");
    }
    let failed: Vec<&str> = results
        .iter()
        .filter(|(_, c)| !c.passed)
        .map(|(l, _)| *l)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {}", failed.join(", "));
}
