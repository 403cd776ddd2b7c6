//! Golden-output tests for the `lingrp` binary.

use std::process::{Command, Output};

fn lingrp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lingrp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lingrp(args);
    assert!(out.status.success(), "{args:?}: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn name_and_print() {
    assert_eq!(stdout(&["name", "(xy)z=y(zx)"]), "<3|0|1|(1,3,2)>\n");
    assert_eq!(stdout(&["name", "((xy)u)v=(xu)(vy)"]), "<4|0|2|(2,4,3)>\n");
    assert_eq!(stdout(&["print", "<3|0|1|(1,3,2)>"]), "(xy)z=y(zx)\n");
    assert_eq!(stdout(&["canon", "<3|1|0|(1,2,3)>"]), "<3|0|1|(1,3,2)>\n");
}

#[test]
fn census_fields() {
    assert_eq!(stdout(&["census", "6", "--field", "l"]), "635083\n");
    assert_eq!(stdout(&["census", "3", "--field", "total"]), "16\n");
    assert_eq!(stdout(&["census", "3", "--field", "nontrivial"]), "14\n");
    let full = stdout(&["census", "4"]);
    assert!(full.contains("varieties 321"), "{full}");
    assert!(full.contains("s[4] 6"), "{full}");
}

#[test]
fn enumerate_counts() {
    assert_eq!(
        stdout(&["enumerate", "4", "--nontrivial", "--count"]),
        "320\n"
    );
    let names = stdout(&["enumerate", "3", "--nontrivial"]);
    assert_eq!(names.lines().count(), 14);
    assert!(names.contains("<3|0|1|(1,3,2)>"));
}

#[test]
fn implies_exit_codes() {
    let yes = lingrp(&["implies", "(xy)z=y(zx)", "<4|0|0|(1,3)(2,4)>"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(String::from_utf8(yes.stdout).unwrap(), "true\n");

    let no = lingrp(&["implies", "<4|3|3|(1,3)(2,4)>", "<4|3|3|(1,2,3,4)>"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(String::from_utf8(no.stdout).unwrap(), "false\n");

    let usage = lingrp(&["implies", "not an identity", "xy=yx"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn implied_set_size() {
    let out = stdout(&["implied-set", "(xy)z=y(zx)", "--m", "4"]);
    assert_eq!(out.lines().count(), 45);
    let json = stdout(&["implied-set", "(xy)z=y(zx)", "--m", "3", "--format", "json"]);
    let names: Vec<String> = serde_json::from_str(&json).unwrap();
    assert_eq!(names, ["<3|0|1|(1,3,2)>", "<3|1|0|(1,2,3)>"]);
}

#[test]
fn hedron_formats() {
    let dot = stdout(&["hedron", "(xy)z=y(zx)", "--m", "4", "--format", "dot"]);
    assert_eq!(dot.matches(" -> ").count(), 10);
    assert!(dot.starts_with("digraph hedron {"));
    assert_eq!(dot, stdout(&["hedron", "(xy)z=y(zx)", "--m", "4", "--format", "dot"]));

    let json = stdout(&["hedron", "(xy)z=y(zx)", "--m", "4", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["nodes"], 5);
    assert_eq!(parsed["arrows"].as_array().unwrap().len(), 10);
}

#[test]
fn is_nice_output() {
    let yes = lingrp(&["is-nice", "5", "(xy)z=y(zx)"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(String::from_utf8(yes.stdout).unwrap().starts_with("true\n"));

    let no = lingrp(&["is-nice", "4", "(xy)z=y(zx)", "--method", "bfs"]);
    assert_eq!(no.status.code(), Some(1));
    let text = String::from_utf8(no.stdout).unwrap();
    assert!(text.starts_with("false\n"), "{text}");
    assert!(text.contains("(1,3)(2,4)"), "{text}");
}

#[test]
fn classify_plain_rows() {
    let out = stdout(&["classify", "3"]);
    assert_eq!(out.lines().count(), 14);
    assert!(out.contains("<3|0|1|()>\t(xy)z=x(yz)\t<3|1|0|()>\tsemigroups"));
}

#[test]
fn verify_search_product_pipeline() {
    let dir = std::env::temp_dir().join("lingrp-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t3.txt");
    std::fs::write(&path, "3\n0 1 0\n0 1 2\n1 1 1\n").unwrap();
    let path = path.to_str().unwrap();

    let ok = lingrp(&["verify", path, "x(yz)=y(xz)"]);
    assert_eq!(ok.status.code(), Some(0));

    let bad = lingrp(&["verify", path, "(xy)z=y(zx)"]);
    assert_eq!(bad.status.code(), Some(1));
    let text = String::from_utf8(bad.stdout).unwrap();
    assert!(text.contains("false"), "{text}");
    assert!(text.contains("x="), "{text}");

    let product = stdout(&["product", path, path]);
    assert!(product.starts_with("9\n"), "{product}");

    let none = lingrp(&[
        "search",
        "--satisfy",
        "xy=yx",
        "--violate",
        "xy=yx",
        "--max-order",
        "2",
    ]);
    assert_eq!(none.status.code(), Some(1));

    let found = stdout(&["search", "--satisfy", "xy=yx", "--max-order", "1"]);
    assert_eq!(found, "1\n0\n");
}

#[test]
fn wreath_order_golden() {
    assert_eq!(
        stdout(&["wreath-order", "(xy)z=y(zx)", "--m", "4"]),
        "1920\n"
    );
}

#[test]
fn guard_errors_exit_2() {
    let guarded = lingrp(&["implied-set", "(xy)z=y(zx)", "--m", "9"]);
    assert_eq!(guarded.status.code(), Some(2));
    assert!(!guarded.stderr.is_empty());
}
