//! One test per acceptance criterion. Each name states its criterion and
//! each body pins the tolerances it is allowed; a failure here means the
//! engine no longer meets its contract.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::Zero;

use mckay::chardeg::{character_degrees, DegreeMultiset};
use mckay::checker::{
    batch, check_group, degree_lists, symmetric_table, PrimeSelection, Route, Verdict, DEFAULT_CAP,
};
use mckay::matching::{brute_force_match, build_graph, kuhn_match, verify_result, MatchingResult};
use mckay::perm::{generate_elements, parse_cycles, Family, GroupSpec};
use mckay::structure::{
    linear_character_count, normalizer, sylow_subgroup, ConjugacyClasses,
};
use mckay::symfast;

const FIGURE_BUDGET: Duration = Duration::from_millis(1);
const S25_BUDGET: Duration = Duration::from_secs(1);
const TABLE_BUDGET: Duration = Duration::from_secs(300);
const INVARIANTS_BUDGET: Duration = Duration::from_secs(600);
const S9_BUDGET: Duration = Duration::from_secs(900);

fn multiset(values: &[u64]) -> DegreeMultiset {
    DegreeMultiset::from_u64s(values.to_vec()).unwrap()
}

fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../corpus/{name}"))
}

fn sym(n: u32) -> GroupSpec {
    GroupSpec::family(&format!("s{n}"), Family::Symmetric(n))
}

#[test]
fn criterion_01_worked_example_graph_and_matching() {
    let start = Instant::now();
    let a = multiset(&[6, 10, 22, 26]);
    let b = multiset(&[3, 5, 13, 2]);
    let graph = build_graph(&a, &b);
    let result = kuhn_match(&graph);
    assert!(verify_result(&graph, &result));
    let elapsed = start.elapsed();

    let mut edges = Vec::new();
    for i in 0..graph.a_len() {
        for &j in graph.neighbors(i) {
            edges.push((
                graph.a_degree(i).to_string(),
                graph.b_degree(j).to_string(),
            ));
        }
    }
    edges.sort();
    let mut expected: Vec<(String, String)> =
        [(6, 2), (6, 3), (10, 2), (10, 5), (22, 2), (26, 2), (26, 13)]
            .iter()
            .map(|&(x, y): &(u32, u32)| (x.to_string(), y.to_string()))
            .collect();
    expected.sort();
    assert_eq!(edges, expected, "divisibility graph edge set");

    let MatchingResult::Bijection { assignment } = result else {
        panic!("expected a bijection, got {result:?}");
    };
    let mut pairs: Vec<(String, String)> = assignment
        .iter()
        .enumerate()
        .map(|(i, &j)| {
            (
                graph.a_degree(i).to_string(),
                graph.b_degree(j).to_string(),
            )
        })
        .collect();
    pairs.sort();
    assert_eq!(
        pairs,
        vec![
            ("10".into(), "5".into()),
            ("22".into(), "2".into()),
            ("26".into(), "13".into()),
            ("6".into(), "3".into()),
        ]
    );
    assert!(elapsed < FIGURE_BUDGET, "took {elapsed:?}");
    println!("criterion 1: PASS (7 edges, pinned bijection, {elapsed:?})");
}

#[test]
fn criterion_02_s25_group_side_has_25_degrees() {
    let start = Instant::now();
    let lists = degree_lists(&sym(25), 5, DEFAULT_CAP).unwrap();
    let elapsed = start.elapsed();
    let a = lists.a.expect("hook lengths reach S_25");
    assert_eq!(a.len(), 25);
    assert!(lists.b.is_none());
    assert!(elapsed < S25_BUDGET, "took {elapsed:?}");
    println!("criterion 2: PASS (|A| = 25, {elapsed:?})");
}

#[test]
fn criterion_03_symmetric_table_verdict_matrix() {
    let start = Instant::now();
    let table = symmetric_table(&[2, 3, 5, 7, 11, 13, 17, 19], 19, DEFAULT_CAP).unwrap();
    let elapsed = start.elapsed();

    // T = bijection by the trivial route, Y = bijection checked,
    // N = no bijection, . = out of scale.
    let expected = [
        "YYYY....",
        "TYYN....",
        "TTYNNNNY",
        "TTTYYNYY",
        "TTTTYYNN",
        "TTTTTYYN",
        "TTTTTTYY",
        "TTTTTTTY",
    ];
    assert_eq!(table.primes, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    assert_eq!(table.columns, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    for (i, row) in expected.iter().enumerate() {
        for (j, mark) in row.chars().enumerate() {
            let cell = &table.cells[i][j];
            let got = match (cell.verdict, cell.route) {
                (Verdict::Bijection, Some(Route::Trivial)) => 'T',
                (Verdict::Bijection, _) => 'Y',
                (Verdict::NoBijection, _) => 'N',
                (Verdict::OutOfScale, _) => '.',
                (Verdict::CountMismatch, _) => '?',
            };
            assert_eq!(
                got, mark,
                "cell p={} S_{}",
                table.primes[i], table.columns[j]
            );
        }
    }
    assert!(elapsed < TABLE_BUDGET, "took {elapsed:?}");
    println!("criterion 3: PASS (64 cells, {elapsed:?})");
}

#[test]
fn criterion_04_degree_invariants_hold_corpus_wide() {
    let start = Instant::now();

    // Hook lengths against the generic engine.
    for n in 3..=6u32 {
        let table = generate_elements(&sym(n), DEFAULT_CAP).unwrap();
        assert_eq!(
            symfast::hook_degrees(n).unwrap(),
            character_degrees(&table).unwrap(),
            "S_{n}"
        );
    }

    // Every enumerable corpus group satisfies the four classical checks.
    let mut groups = 0;
    for name in ["solvable.jsonl", "nonsolvable.jsonl"] {
        let text = std::fs::read_to_string(corpus_path(name)).unwrap();
        for (line, parsed) in mckay::checker::parse_corpus(&text) {
            let entry = parsed.unwrap_or_else(|e| panic!("{name}:{line}: {e}"));
            let spec = entry.to_spec().unwrap();
            let table = generate_elements(&spec, DEFAULT_CAP).unwrap();
            let order = table.order();
            let classes = ConjugacyClasses::compute(&table);
            let degrees = character_degrees(&table).unwrap();

            assert_eq!(degrees.sum_of_squares(), order, "{name}:{line} sum of squares");
            assert_eq!(degrees.len(), classes.count(), "{name}:{line} class count");
            for d in degrees.iter() {
                assert!((&order % d).is_zero(), "{name}:{line} degree {d} | order");
            }
            let linear = degrees.iter().filter(|d| **d == BigUint::from(1u32)).count();
            assert_eq!(
                linear as u64,
                linear_character_count(&table),
                "{name}:{line} linear count"
            );
            groups += 1;
        }
    }
    assert!(groups > 200, "corpus shrank to {groups} groups");
    let elapsed = start.elapsed();
    assert!(elapsed < INVARIANTS_BUDGET, "took {elapsed:?}");
    println!("criterion 4: PASS ({groups} groups, 4 invariants each, {elapsed:?})");
}

#[test]
fn criterion_05_matching_oracle() {
    // Exhaustive: every pair of equal-size multisets over {1..6} up to
    // size 4, brute force against the deterministic matcher.
    fn multisets(size: usize) -> Vec<Vec<u64>> {
        fn rec(size: usize, min: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if size == 0 {
                out.push(prefix.clone());
                return;
            }
            for v in min..=6 {
                prefix.push(v);
                rec(size - 1, v, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, 1, &mut Vec::new(), &mut out);
        out
    }

    let mut pairs = 0u64;
    for size in 0..=4usize {
        let all = multisets(size);
        for a in &all {
            for b in &all {
                let graph = build_graph(&multiset(a), &multiset(b));
                let result = kuhn_match(&graph);
                assert!(verify_result(&graph, &result), "A = {a:?}, B = {b:?}");
                let brute = brute_force_match(&graph).unwrap();
                assert_eq!(
                    matches!(result, MatchingResult::Bijection { .. }),
                    brute.is_some(),
                    "A = {a:?}, B = {b:?}"
                );
                pairs += 1;
            }
        }
    }

    // Seeded random lists up to length 7.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2026);
    let mut violators = 0u64;
    for _ in 0..1000 {
        let size = rng.gen_range(0..=7usize);
        let a: Vec<u64> = (0..size).map(|_| rng.gen_range(1..=60u64)).collect();
        let b: Vec<u64> = (0..size).map(|_| rng.gen_range(1..=60u64)).collect();
        let graph = build_graph(&multiset(&a), &multiset(&b));
        let result = kuhn_match(&graph);
        assert!(verify_result(&graph, &result), "A = {a:?}, B = {b:?}");
        let brute = brute_force_match(&graph).unwrap();
        assert_eq!(
            matches!(result, MatchingResult::Bijection { .. }),
            brute.is_some(),
            "A = {a:?}, B = {b:?}"
        );
        if matches!(result, MatchingResult::Violator { .. }) {
            violators += 1;
        }
    }
    assert!(violators > 0, "random batch never exercised a violator");
    println!("criterion 5: PASS ({pairs} exhaustive pairs, 1000 random, {violators} violators verified)");
}

#[test]
fn criterion_06_wreath_formulas_match_enumeration() {
    // AGL(1,5) wr S_2 on 10 points, against the closed formula.
    let gens = vec![
        parse_cycles("(1,2,3,4,5)", 10).unwrap(),
        parse_cycles("(2,3,5,4)", 10).unwrap(),
        parse_cycles("(1,6)(2,7)(3,8)(4,9)(5,10)", 10).unwrap(),
    ];
    let spec = GroupSpec::from_generators("agl15wr2", gens).unwrap();
    let table = generate_elements(&spec, DEFAULT_CAP).unwrap();
    assert_eq!(table.order(), BigUint::from(800u32));
    let enumerated = character_degrees(&table).unwrap();
    let formula =
        symfast::wreath_degrees(&symfast::agl1_degrees(5).unwrap(), 2).unwrap();
    assert_eq!(formula, enumerated);

    // Normalizer degrees for S_7 at p = 3, formula against generic engine.
    let table = generate_elements(&sym(7), DEFAULT_CAP).unwrap();
    let sylow = sylow_subgroup(&table, 3).unwrap();
    let ntab = normalizer(&table, &sylow).to_table(&table);
    let generic = character_degrees(&ntab).unwrap().pprime_filter(3);
    let fast = symfast::normalizer_pprime_degrees(7, 3).unwrap();
    assert_eq!(fast, generic);
    println!("criterion 6: PASS (wreath formula and normalizer degrees match enumeration)");
}

#[test]
fn criterion_07_generic_route_bijections() {
    for (n, p) in [(4u32, 2u64), (8, 2)] {
        let report = check_group(&sym(n), p, DEFAULT_CAP).unwrap();
        assert_eq!(report.route, Some(Route::Generic), "S_{n} at p={p}");
        assert_eq!(report.verdict, Verdict::Bijection, "S_{n} at p={p}");
    }
    let start = Instant::now();
    let report = check_group(&sym(9), 3, DEFAULT_CAP).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(report.route, Some(Route::Generic));
    assert_eq!(report.verdict, Verdict::Bijection);
    assert_eq!(
        report.a_degrees.unwrap(),
        multiset(&[1, 1, 8, 8, 28, 28, 56, 56, 70])
    );
    assert!(elapsed < S9_BUDGET, "took {elapsed:?}");
    println!("criterion 7: PASS (S_4, S_8, S_9 generic bijections, S_9 in {elapsed:?})");
}

#[test]
fn criterion_08_solvable_corpus_finds_no_counterexample() {
    let text = std::fs::read_to_string(corpus_path("solvable.jsonl")).unwrap();
    let report = batch(&text, &PrimeSelection::AllDividing, DEFAULT_CAP, None).unwrap();
    assert!(report.summary.entries > 150);
    assert_eq!(report.summary.failed_entries, 0);
    assert_eq!(report.summary.no_bijection, 0);
    assert_eq!(report.summary.count_mismatch, 0);
    assert_eq!(report.summary.out_of_scale, 0);
    assert!(!report.counterexample_found());
    println!(
        "criterion 8: PASS ({} checks over {} solvable groups, all bijections)",
        report.summary.checks, report.summary.entries
    );
}

#[test]
fn criterion_09_linear_groups_have_bijections() {
    let cases = [
        (Family::Gl { n: 2, q: 2 }, 2u64),
        (Family::Gl { n: 2, q: 3 }, 3),
        (Family::Sl { n: 2, q: 3 }, 3),
        (Family::Gl { n: 2, q: 4 }, 2),
        (Family::Gl { n: 2, q: 5 }, 5),
    ];
    for (family, p) in cases {
        let id = family.to_string();
        let report = check_group(&GroupSpec::family(&id, family), p, DEFAULT_CAP).unwrap();
        assert_eq!(report.verdict, Verdict::Bijection, "{id} at p={p}");
        assert_eq!(report.route, Some(Route::Generic), "{id} at p={p}");
    }
    println!("criterion 9: PASS (5 matrix-group checks, all bijections)");
}

#[test]
fn criterion_10_reports_serialize_deterministically() {
    let json = |spec: &GroupSpec, p: u64| {
        serde_json::to_string(&check_group(spec, p, DEFAULT_CAP).unwrap()).unwrap()
    };
    assert_eq!(json(&sym(7), 3), json(&sym(7), 3));
    assert_eq!(json(&sym(5), 5), json(&sym(5), 5));
    assert_eq!(json(&sym(3), 5), json(&sym(3), 5));

    let table_json = || {
        serde_json::to_string(&symmetric_table(&[2, 3, 5, 7], 7, DEFAULT_CAP).unwrap()).unwrap()
    };
    assert_eq!(table_json(), table_json());

    // Key order is part of the format.
    let report = json(&sym(7), 3);
    assert!(report.starts_with("{\"group_id\":\"s7\",\"group_order\":\"5040\","));
    let a_pos = report.find("a_degrees").unwrap();
    let v_pos = report.find("verdict").unwrap();
    assert!(a_pos < v_pos);
    println!("criterion 10: PASS (byte-identical JSON across repeated runs)");
}
