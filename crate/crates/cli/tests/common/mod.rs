#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn twtie(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_twtie"))
        .args(args)
        .env_remove("TWTIE_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn twtie");
    let input = stdin.unwrap_or("").to_owned();
    let mut pipe = child.stdin.take().unwrap();
    let feeder = std::thread::spawn(move || {
        let _ = pipe.write_all(input.as_bytes());
    });
    let out = child.wait_with_output().expect("wait for twtie");
    feeder.join().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

/// Generates `spec` into `dir/name` and returns the path.
pub fn gen_into(dir: &Path, name: &str, spec: &str) -> PathBuf {
    let run = twtie(&["gen", spec], None);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let p = dir.join(name);
    std::fs::write(&p, run.stdout).unwrap();
    p
}

/// Ten scripted invocations, as `(description, expected code, observed code)`.
pub fn exit_code_scenarios(dir: &Path) -> Vec<(String, i32, i32)> {
    let grid = gen_into(dir, "grid3.gr", "grid:3,3");
    let big = gen_into(dir, "p30.gr", "path:30");
    let mid = gen_into(dir, "p15.gr", "path:15");
    let bramble = dir.join("bramble.json");
    let run = twtie(&["cert", "grid-bramble", "3"], None);
    std::fs::write(&bramble, &run.stdout).unwrap();
    let bad_bramble = dir.join("bad.json");
    std::fs::write(&bad_bramble, r#"{"kind":"bramble","elements":[[0],[8]]}"#).unwrap();
    let broken = dir.join("broken.gr");
    std::fs::write(&broken, "p tw 3 1\n1 4\n").unwrap();
    let psi = twtie(&["gen", "psi:4,2"], None).stdout;

    let (g, b, bb, big, mid, broken) = (
        path_str(&grid),
        path_str(&bramble),
        path_str(&bad_bramble),
        path_str(&big),
        path_str(&mid),
        path_str(&broken),
    );
    let cases: Vec<(&str, Vec<&str>, Option<&str>, i32)> = vec![
        ("report on psi(4,2) from stdin", vec!["report", "-"], Some(psi.as_str()), 0),
        ("verify grid bramble", vec!["verify", b, g], None, 0),
        ("verify non-touching bramble", vec!["verify", bb, g], None, 1),
        ("tw over budget", vec!["tw", big], None, 3),
        ("tw with raised budget", vec!["--budget", "tw=15", "tw", mid], None, 0),
        ("malformed .gr", vec!["tw", broken], None, 2),
        ("missing file", vec!["bw", "/nonexistent/graph.gr"], None, 2),
        ("unknown family", vec!["gen", "moebius:3"], None, 2),
        ("bad balance c", vec!["sep", g, "--c", "1/3"], None, 2),
        ("had over budget", vec!["had", big], None, 3),
    ];
    cases
        .into_iter()
        .map(|(name, args, stdin, want)| {
            let run = twtie(&args, stdin);
            (name.to_string(), want, run.code)
        })
        .collect()
}
