use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qsdl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsdl")).args(args).env_remove("QSDL_DATA").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn data_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data"))
}

#[test]
fn sieve_rows() {
    let o = qsdl(&["sieve", "--v", "12", "--y", "2..10", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].starts_with("3\t12\t22\t11\t6\t5\t"));

    let o = qsdl(&["sieve", "--v", "15", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&qsdl(&["sieve", "--v", "4"])), 2);
    assert_eq!(code(&qsdl(&["sieve", "--v", "20..10"])), 2);
    assert_eq!(code(&qsdl(&["sieve", "--v", "12", "--y", "1..3"])), 2);
    assert_eq!(code(&qsdl(&["alt", "--y-max", "11"])), 2);
    assert_eq!(code(&qsdl(&["frobnicate"])), 2);
}

#[test]
fn reduce_outputs() {
    let o = qsdl(&["reduce", "product", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let table: Vec<&str> = text.lines().skip(1).take_while(|l| !l.is_empty()).collect();
    let params: Vec<&str> = table.iter().map(|l| l.split('\t').nth(2).unwrap()).collect();
    assert_eq!(
        params,
        ["(10^2,375,45,12,5)", "(21^2,980,100,45,10)", "(111^2,165649,3025,225,55)", "(77^2,13794,456,196,15)", "(92^2,41262,1365,280,45)"]
    );

    let o = qsdl(&["reduce", "twisted"]);
    assert!(stdout(&o).contains("> 186154"));

    let o = qsdl(&["reduce", "diagonal"]);
    assert!(stdout(&o).lines().next().unwrap() == "m=2: PSL(2,5), PSL(2,7), PSL(2,9), PSL(2,8)");
}

#[test]
fn missing_catalog_is_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = qsdl(&["--seed-data", dir.path().to_str().unwrap(), "reduce", "diagonal"]);
    assert_eq!(code(&o), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_qsdl")).args(["sporadic"]).env("QSDL_DATA", dir.path()).output().unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn seed_data_directory_is_used() {
    let o = qsdl(&["--seed-data", data_dir().to_str().unwrap(), "sporadic"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), stdout(&qsdl(&["sporadic"])));
}

#[test]
fn alt_table() {
    let o = qsdl(&["alt"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(2).take(5).collect();
    assert_eq!(rows[0], "| 120 | 7 | 5,7,35 | S_n | AGL(1,7) |");
    assert_eq!(rows[4], "| 840 | 9 | 7 | S_n | AGL(2,3) |");
    assert!(text.contains("(3,56,210,45,12,9)"));
}

#[test]
fn sporadic_table() {
    let o = qsdl(&["sporadic", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).take(4).collect();
    assert!(rows[0].starts_with("(1)\t(3,12,22,11,6,5)\t11\t11\t(M11,PSL(2,11)),(M12,M11)"));
    assert!(rows[2].contains("[Zhang2023] Thm 2"));
    assert!(rows[3].contains("[Zhan2016] Thm 1"));
    assert!(text.contains("Sz(8) |Aut(N)|=87360: excluded"));
}

#[test]
fn verify_designs() {
    let o = qsdl(&["verify", "--group", "m22.gens", "--design", "m22-design.blk"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2-(22,6,5), {0,2}, flag-transitive: true"));
    let o = qsdl(&["verify", "--group", "m11.gens", "--design", "m11-design.blk"]);
    assert!(stdout(&o).contains("2-(12,6,5), {0,3}, flag-transitive: true"));
}

#[test]
fn verify_failures() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(data_dir().join("m11-design.blk")).unwrap();
    let mut lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    let first_block = lines[1];
    lines[2] = first_block;
    let dup = dir.path().join("dup.blk");
    fs::write(&dup, lines.join("\n")).unwrap();
    let o = qsdl(&["verify", "--group", "m11.gens", "--design", dup.to_str().unwrap()]);
    assert_eq!(code(&o), 1);

    // a single block orbit under the trivial group is not a 2-design
    let triv = dir.path().join("id.gens");
    fs::write(&triv, "degree 4\n1 2 3 4\n").unwrap();
    let blk = dir.path().join("two.blk");
    fs::write(&blk, "4 2 2\n1 2\n3 4\n").unwrap();
    let o = qsdl(&["verify", "--group", triv.to_str().unwrap(), "--design", blk.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a 2-design"));

    let bad = dir.path().join("bad.gens");
    fs::write(&bad, "degree 3\n1 1 2\n").unwrap();
    let o = qsdl(&["verify", "--group", bad.to_str().unwrap(), "--design", blk.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    let o = qsdl(&["verify", "--group", "nowhere.gens", "--design", blk.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
}

#[test]
fn search_writes_design() {
    let dir = tempfile::tempdir().unwrap();
    let o = qsdl(&["search", "--group", "m11.gens", "--k", "6", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let text = fs::read_to_string(dir.path().join("m11-k6-1.blk")).unwrap();
    assert_eq!(text.lines().count(), 23);
    assert!(text.starts_with("12 22 6\n"));
    let shipped = fs::read_to_string(data_dir().join("m11-design.blk")).unwrap();
    let body: String = shipped.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    assert_eq!(text, body);

    let o = qsdl(&["search", "--group", "m22.gens", "--k", "6", "--cap", "1000", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("alt.md");
    let o = qsdl(&["alt", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let written = fs::read(&path).unwrap();
    assert_eq!(written, qsdl(&["alt"]).stdout);
    assert_eq!(qsdl(&["reduce", "product"]).stdout, qsdl(&["reduce", "product"]).stdout);
    assert_eq!(qsdl(&["sieve", "--v", "8..300"]).stdout, qsdl(&["sieve", "--v", "8..300"]).stdout);
}
