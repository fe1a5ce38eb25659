use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_torusfold");

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .env_remove("TORUSFOLD_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn torusfold");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(bytes) = stdin {
            pipe.write_all(bytes).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn triangulate_then_convert_through_a_pipe() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig8.tri");
    let map = fixture("figure_eight.map");
    let tg = run(&["triangulate", map.to_str().unwrap()], None);
    assert_eq!(tg.status.code(), Some(0), "{}", stderr(&tg));
    let conv = run(&["convert", "-", "-o", out.to_str().unwrap(), "--name", "fig8"], Some(&tg.stdout));
    assert_eq!(conv.status.code(), Some(0), "{}", stderr(&conv));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("% Triangulation\nfig8\n"));
    let check = run(&["verify", out.to_str().unwrap()], None);
    assert_eq!(check.status.code(), Some(0), "{}", stderr(&check));
    assert!(stdout(&check).contains("48 tetrahedra, 1 torus cusp"));
}

#[test]
fn verify_small_tg_document() {
    let o = run(&["verify", fixture("figure_eight.tg").to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.contains("2 tetrahedra, 1 torus cusp"), "{s}");
    assert!(s.contains("H1 = Z"), "{s}");
}

#[test]
fn malformed_map_line_exits_two_with_line_number() {
    let bad = b"vertices: v\nedge a v v\nedge b v v\nmap a = b a\nmap b = b q a\nboundary = a ~b ~a b\n";
    let o = run(&["decompose", "-"], Some(bad));
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains("<stdin>") && e.contains("line 5"), "{e}");
    assert!(o.stdout.is_empty());
}

#[test]
fn missing_file_exits_two() {
    let o = run(&["info", "/nonexistent/x.map"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/nonexistent/x.map"));
}

#[test]
fn failed_check_exits_one() {
    // swapping a and b reverses the boundary orientation
    let rev = b"vertices: v\nedge a v v\nedge b v v\nmap a = b\nmap b = a\nboundary = a ~b ~a b\n";
    let o = run(&["verify", "-"], Some(rev));
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
}

#[test]
fn worst_status_wins_and_good_inputs_still_run() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tg");
    std::fs::write(&bad, "T a b c\n").unwrap();
    let good = fixture("figure_eight.tg");
    let o = run(&["verify", good.to_str().unwrap(), bad.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("ok (2 tetrahedra"));
    assert!(stderr(&o).contains("bad.tg: T/G line 1"));
}

#[test]
fn outputs_are_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let map = fixture("example1.map");
    for sub in ["decompose", "triangulate", "convert", "group", "info"] {
        let out = dir.path().join(format!("{sub}.out"));
        let args = [sub, map.to_str().unwrap(), "-o", out.to_str().unwrap()];
        assert_eq!(run(&args, None).status.code(), Some(0));
        let first = std::fs::read(&out).unwrap();
        assert_eq!(run(&args, None).status.code(), Some(0));
        assert_eq!(std::fs::read(&out).unwrap(), first, "{sub}");
    }
}

#[test]
fn batch_matches_sequential_runs() {
    let dir = tempfile::tempdir().unwrap();
    let inputs = [fixture("figure_eight.map"), fixture("example1.map")];
    let names: Vec<&str> = inputs.iter().map(|p| p.to_str().unwrap()).collect();
    let batch = dir.path().join("batch");
    let mut args = vec!["convert", "-j", "4", "--out-dir", batch.to_str().unwrap()];
    args.extend(&names);
    assert_eq!(run(&args, None).status.code(), Some(0));
    for (path, stem) in names.iter().zip(["figure_eight", "example1"]) {
        let single = run(&["convert", path], None);
        assert_eq!(single.status.code(), Some(0));
        let batched = std::fs::read(batch.join(format!("{stem}.tri"))).unwrap();
        assert_eq!(batched, single.stdout, "{stem}");
    }
}

#[test]
fn multiple_inputs_on_stdout_get_headers() {
    let a = fixture("figure_eight.map");
    let b = fixture("figure_eight.tg");
    let o = run(&["group", a.to_str().unwrap(), b.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.matches("==> ").count(), 2);
    assert_eq!(s.matches("H1: Z\n").count(), 2);
}

#[test]
fn stdin_may_appear_once() {
    let o = run(&["info", "-", "-"], Some(b""));
    assert_eq!(o.status.code(), Some(2));
}
