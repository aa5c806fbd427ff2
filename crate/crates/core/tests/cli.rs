use std::io::Write;
use std::process::{Command, Output, Stdio};

fn kronforge(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kronforge"))
        .args(args)
        .env_remove("KRONFORGE_CACHE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn kron_prints_the_value() {
    let o = kronforge(&["kron", "--lam", "6x3", "--mu", "6x3", "--nu", "6x3"], None);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "1\n"));
    let o = kronforge(&["kron", "--lam", "6x2", "--mu", "6 x 2", "--nu", "2,2,2,2,2,2"], None);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn hook_table_zeros() {
    let o = kronforge(&["hook", "--d", "3", "--table"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("d\tk\tg_k"));
    let zeros: Vec<u64> = lines
        .map(|l| l.split('\t').collect::<Vec<_>>())
        .filter(|f| f[2] == "0")
        .map(|f| f[1].parse().unwrap())
        .collect();
    assert_eq!(zeros, [1, 2, 4, 6, 7]);
}

#[test]
fn certify_then_verify() {
    let cert = kronforge(&["certify", "hook", "--h", "7", "--w", "9", "--j", "20"], None);
    assert_eq!(cert.status.code(), Some(0));
    let text = stdout(&cert);
    let ok = kronforge(&["verify-cert"], Some(&text));
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("valid\t((43,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1)"));

    let tampered = text.replacen("\"triple\":[[43,", "\"triple\":[[42,1,", 1);
    assert_ne!(tampered, text);
    assert_eq!(kronforge(&["verify-cert"], Some(&tampered)).status.code(), Some(3));
    assert_eq!(kronforge(&["verify-cert"], Some("{\"schema\":\"cert-v1\"")).status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    std::fs::write(&path, &text).unwrap();
    let from_file = kronforge(&["verify-cert", "--file", path.to_str().unwrap(), "--json"], None);
    let v: serde_json::Value = serde_json::from_slice(&from_file.stdout).unwrap();
    assert_eq!(v["schema"], "verify-v1");
    assert_eq!(v["valid"], true);
}

#[test]
fn exit_codes() {
    let budget = kronforge(&["kron", "--lam", "5x6", "--mu", "5x6", "--nu", "5x6"], None);
    assert_eq!(budget.status.code(), Some(2));
    let msg = String::from_utf8(budget.stderr).unwrap();
    assert!(msg.contains("requested size 30") && msg.contains("limit 28"), "{msg}");
    assert_eq!(kronforge(&["decompose", "--nu", "3,1"], None).status.code(), Some(1));
    assert_eq!(kronforge(&["kron", "--lam", "3", "--mu", "2", "--nu", "3"], None).status.code(), Some(1));
    assert_eq!(kronforge(&["pleth", "--lam", "1,1", "--d", "1", "--n", "2"], None).status.code(), Some(0));
    assert_eq!(kronforge(&["kron", "--lam", "2,1", "--mu", "3", "--nu", "2,1", "--budget", "2"], None).status.code(), Some(2));
    assert_eq!(kronforge(&["frobnicate"], None).status.code(), Some(1));
}

#[test]
fn output_independent_of_worker_count() {
    for args in [
        &["kron", "--lam", "8,4,2,2", "--mu", "4x4", "--nu", "4x4"][..],
        &["tables", "--rho", "2,1", "--max", "4"],
        &["certify", "stretched", "--i", "5", "--m", "7", "--k", "3"],
        &["verdict", "--lam", "6", "--n", "6", "--d", "1", "--m", "1", "--json"],
    ] {
        let one = kronforge(&[args, &["--threads", "1"]].concat(), None);
        let four = kronforge(&[args, &["--threads", "4"]].concat(), None);
        assert_eq!(one.status.code(), Some(0), "{args:?}");
        assert_eq!(one.stdout, four.stdout, "{args:?}");
        assert_eq!(one.stdout, kronforge(args, None).stdout);
    }
}

#[test]
fn json_output_is_versioned() {
    for (args, schema) in [
        (&["kron", "--lam", "2,1", "--mu", "2,1", "--nu", "2,1"][..], "kron-v1"),
        (&["lr", "--lam", "2,1", "--theta", "1", "--tau", "1,1"], "lr-v1"),
        (&["limit", "--rho", "2"], "limit-v1"),
        (&["decompose", "--nu", "5,5,2"], "decompose-v1"),
        (&["saturation", "--lam", "8,6", "--d", "7"], "saturation-v1"),
        (&["verdict", "--lam", "3,3", "--n", "2", "--d", "3", "--m", "1"], "verdict-v1"),
    ] {
        let o = kronforge(&[args, &["--json"]].concat(), None);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["schema"], schema);
    }
}

#[test]
fn character_cache_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chars.bin");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_kronforge"))
            .args(["kron", "--lam", "3,2", "--mu", "3,2", "--nu", "4,1"])
            .env("KRONFORGE_CACHE", &path)
            .output()
            .unwrap()
    };
    assert_eq!(run().status.code(), Some(0));
    assert!(path.exists());
    assert_eq!(String::from_utf8(run().stdout).unwrap(), "1\n");
    std::fs::write(&path, b"garbage").unwrap();
    assert_eq!(run().status.code(), Some(1));
}

#[test]
fn quick_selftest() {
    let o = kronforge(&["selftest", "--quick"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("ok\t")), "{text}");
}
