use std::process::Command;

use dyck_poset_cli::{run, CommandResult, EXIT_DOMAIN, EXIT_LIMIT, EXIT_OK};
use serde_json::Value;

fn dyck(args: &str) -> CommandResult {
    run(std::iter::once("dyckposet").chain(args.split_whitespace()))
}

fn ok(args: &str) -> String {
    let r = dyck(args);
    assert_eq!(r.exit_code, EXIT_OK, "{args}: {}", r.payload);
    r.payload
}

fn json(args: &str) -> Value {
    let v: Value = serde_json::from_str(&ok(args)).unwrap();
    assert!(
        v["schema"].as_str().unwrap().starts_with("dyck-poset/"),
        "{args}"
    );
    v
}

#[test]
fn contains_example() {
    assert_eq!(ok("contains UUDD UDUDUD"), "true\n");
    assert_eq!(ok("contains UDUDUD UUDD"), "false\n");
    assert_eq!(json("contains UUDD UDUDUD --json")["contains"], true);
}

#[test]
fn staircase_size_example() {
    assert_eq!(ok("formula staircase_size 5"), "16\n");
    let v = json("--json formula staircase_size 5");
    assert_eq!(v["formula"], "staircase_size");
    assert_eq!(v["args"][0], "5");
    assert_eq!(v["value"], 16);
}

#[test]
fn verify_table1_passes() {
    assert!(ok("verify table1").starts_with("PASS table1"));
}

#[test]
fn verify_rejects_unknown_suite() {
    let r = dyck("verify nonsense");
    assert_eq!(r.exit_code, EXIT_DOMAIN);
    assert!(r.payload.contains("<suite>"));
}

#[test]
fn formulas_evaluate() {
    assert_eq!(ok("formula narayana 4 2"), "6\n");
    assert_eq!(ok("formula staircase_rank_count 9 7"), "127\n");
    assert_eq!(ok("formula phi0 4 6"), "50\n");
    assert_eq!(ok("formula phih 1 1 2"), "3\n");
    assert_eq!(ok("formula two_peak_size 2 3 1"), "18\n");
    assert_eq!(ok("formula mobius_pyramid 1"), "1\n");
    assert_eq!(ok("formula cover_count UDUD"), "4\n");
    assert_eq!(ok("formula embeddable UUDD 2"), "false\n");
    assert_eq!(ok("formula embeddable UUDD 3"), "true\n");
    assert_eq!(ok("formula delta_histogram 2 3"), "1 3\n2 4\n3 3\n4 0\n");
    assert_eq!(json("formula delta_histogram 3 3 --json")["value"]["3"], 6);
    assert!(ok("formula list").contains("two_peak_rank_count a b h r"));
}

#[test]
fn mobius_two_peak_swap_is_noted() {
    let text = ok("formula mobius_two_peak 3 2 1");
    assert!(text.contains("note:"));
    assert_eq!(
        text.lines().next(),
        ok("formula mobius_two_peak 2 3 1").lines().next()
    );
}

#[test]
fn formula_usage_errors_name_the_argument() {
    let r = dyck("formula phi0 4 x");
    assert_eq!(r.exit_code, EXIT_DOMAIN);
    assert!(r.payload.contains("<b>"), "{}", r.payload);
    assert_eq!(dyck("formula phi0 4").exit_code, EXIT_DOMAIN);
    assert_eq!(
        dyck("formula staircase_rank_count 3 5").exit_code,
        EXIT_DOMAIN
    );
}

#[test]
fn interval_views() {
    assert_eq!(ok("interval UD UDUDUD --ranks"), "1 1\n2 2\n3 1\n");
    assert_eq!(
        ok("interval UD UDUDUD --elements"),
        "1 UD\n2 UUDD\n2 UDUD\n3 UDUDUD\n"
    );
    assert_eq!(ok("interval UD UDUD --edges"), "UD UDUD\n");
    assert!(ok("interval UD UDUDUD --dot").starts_with("digraph"));
    let v = json("interval UD UDUDUD --json");
    assert_eq!(v["ranks"][1]["count"], 2);
    assert_eq!(v["mobius"]["UDUDUD"], 1);
    assert_eq!(
        dyck("interval UD UDUD --ranks --dot").exit_code,
        EXIT_DOMAIN
    );
}

#[test]
fn staircase_interval_ranks_match_table_row() {
    assert_eq!(
        ok("interval UD UDUDUDUDUD --ranks"),
        "1 1\n2 2\n3 5\n4 7\n5 1\n"
    );
}

#[test]
fn mobius_values() {
    assert_eq!(ok("mobius UD UUUDUDDD"), "0\n");
    assert_eq!(ok("mobius UUDD UUDUDUDD"), "4\n");
    assert_eq!(json("mobius UD UDUDUD --json")["mobius"], 1);
}

#[test]
fn domain_errors_exit_one() {
    assert_eq!(dyck("interval UDUD UUDD").exit_code, EXIT_DOMAIN);
    assert_eq!(dyck("contains UDD UD").exit_code, EXIT_DOMAIN);
    assert_eq!(dyck("stats UXD").exit_code, EXIT_DOMAIN);
    assert_eq!(
        dyck("bijection square 3 3 1 --grid 3 3").exit_code,
        EXIT_DOMAIN
    );
    assert_eq!(dyck("nosuchcommand").exit_code, EXIT_DOMAIN);
}

#[test]
fn limit_errors_exit_two() {
    let top = "UD".repeat(16);
    let r = dyck(&format!("interval UD {top}"));
    assert_eq!(r.exit_code, EXIT_LIMIT, "{}", r.payload);
    assert_eq!(
        dyck(&format!("--limit 4 mobius UD {}", "UD".repeat(5))).exit_code,
        EXIT_LIMIT
    );
    assert_eq!(
        dyck("conjecture alternating --max 5 --limit 4").exit_code,
        EXIT_LIMIT
    );
    assert_eq!(
        dyck(&format!("stats {}", "UD".repeat(33))).exit_code,
        EXIT_LIMIT
    );
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(dyck("--help").exit_code, EXIT_OK);
    assert_eq!(dyck("--version").exit_code, EXIT_OK);
}

#[test]
fn stats_output() {
    let v = json("stats UUDUDD --json");
    assert_eq!(v["word"], "UUDUDD");
    assert_eq!(v["semilength"], 3);
    assert_eq!(v["peaks"], 2);
    assert!(ok("stats UDUUDD").contains("factors 1 2\n"));
}

#[test]
fn bijections_show_both_encodings() {
    assert_eq!(
        ok("bijection motzkin ULD"),
        "dyck UUDD\nmotzkin ULD\npeakless true\n"
    );
    assert_eq!(
        ok("bijection motzkin UDUDUD").lines().nth(1),
        Some("motzkin LLL")
    );
    let v = json("bijection square 2 3 2 --grid 4 6 --json");
    assert_eq!(v["path"]["word"], "UUUUDDUUUDDDDD");
    assert_eq!(v["square"]["row"], 2);
    assert_eq!(v["square"]["col"], 3);
    assert_eq!(v["square"]["side"], 3);
    assert_eq!(v["triple"]["k"], 2);
}

#[test]
fn conjecture_reports() {
    let v = json("conjecture alternating --max 4 --json");
    assert_eq!(v["verdict"], "consistent");
    assert_eq!(v["scope"]["value"], 4);
    let batch = json("conjecture rank2max --max 2 --json");
    assert_eq!(batch["reports"].as_array().unwrap().len(), 2);
    assert_eq!(batch["reports"][1]["observed"], 4);
    assert!(ok("conjecture covercount --max 4").contains("consistent"));
    assert!(ok("conjecture rank3max --max 1").contains("observed 3, expected 3"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        "interval UD UUDUDUDD --json",
        "interval UD UUUDDUUDDD --elements",
        "conjecture rank2max --max 2",
    ] {
        assert_eq!(ok(args), ok(args), "{args}");
    }
}

#[test]
fn export_dot_writes_file() {
    let dir = std::env::temp_dir().join(format!("dyckposet-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig.dot");
    let msg = ok(&format!("export dot UD UUUDDUUUDDDD {}", path.display()));
    assert!(msg.contains("18 elements"), "{msg}");
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph \"[UD, UUUDDUUUDDDD]\""));
    assert_eq!(dot.matches("rank=same").count(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dyckposet");
    let out = Command::new(bin)
        .args(["contains", "UUDD", "UDUDUD"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "true\n");
    let out = Command::new(bin)
        .args(["mobius", "UDUD", "UUDD"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let out = Command::new(bin)
        .args(["--limit", "3", "interval", "UD", "UDUDUDUD"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
