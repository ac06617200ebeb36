use std::io::Write;
use std::process::{Command, Output, Stdio};

fn binmat(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_binmat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn text(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn convert_between_formats() {
    let o = binmat(
        &["convert", "--from", "grid", "--to", "tuple", "-"],
        Some("3\n101\n000\n111\n"),
    );
    assert!(o.status.success());
    assert_eq!(text(&o), "3\n5 0 7\n");

    let tuple = "4\n9 0 15 6\n";
    let grid = text(&binmat(
        &["convert", "--from", "tuple", "--to", "grid", "-"],
        Some(tuple),
    ));
    assert_eq!(grid, "4\n1001\n0000\n1111\n0110\n");
    let back = binmat(
        &["convert", "--from", "grid", "--to", "tuple", "-"],
        Some(&grid),
    );
    assert_eq!(text(&back), tuple);

    for (fmt, input) in [("grid", "2\n10\n01\n"), ("tuple", "2\n2 1\n")] {
        let o = binmat(&["convert", "--from", fmt, "--to", fmt, "-"], Some(input));
        assert_eq!(text(&o), input);
    }
}

#[test]
fn convert_reports_bad_lines() {
    let o = binmat(
        &["convert", "--from", "grid", "--to", "grid", "-"],
        Some("2\n10\n0\n"),
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let o = binmat(
        &["convert", "--from", "tuple", "--to", "grid", "-"],
        Some("3\n8 0 0\n"),
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = binmat(
        &[
            "convert",
            "--from",
            "grid",
            "--to",
            "tuple",
            "/nonexistent/file",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(1));

    let wide = format!("65\n{}", format!("{}\n", "0".repeat(65)).repeat(65));
    let o = binmat(
        &["convert", "--from", "grid", "--to", "tuple", "-"],
        Some(&wide),
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn powers() {
    let cycle = "3\n010\n001\n100\n";
    let id3 = "3\n100\n010\n001\n";
    assert_eq!(text(&binmat(&["power", "--k", "3", "-"], Some(cycle))), id3);
    assert_eq!(text(&binmat(&["power", "--k", "0", "-"], Some(cycle))), id3);
    assert_eq!(
        text(&binmat(&["power", "--k", "1", "-"], Some(cycle))),
        cycle
    );
    assert_eq!(
        text(&binmat(&["power", "--k", "2", "-"], Some(cycle))),
        "3\n001\n100\n010\n"
    );
    assert_eq!(text(&binmat(&["power", "--k", "9", "-"], Some(id3))), id3);
    assert_eq!(
        binmat(&["power", "--k", "-2", "-"], Some(cycle))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        binmat(&["power", "--k", "2", "-"], Some("3\n01\n"))
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn usage_errors() {
    for args in [
        &["verify", "--trials", "0"][..],
        &["bench", "--op", "bogus"],
        &["bench", "--op", "and", "--format", "json"],
        &["bench", "--op", "and", "--reps", "0"],
        &[
            "count", "--op", "product", "--impl", "dense", "--sizes", "8,16",
        ],
        &[
            "count", "--op", "product", "--impl", "both", "--sizes", "8,16,32",
        ],
        &[
            "count", "--op", "and", "--impl", "packed", "--sizes", "32,16,8",
        ],
        &[
            "count",
            "--op",
            "and",
            "--impl",
            "packed",
            "--sizes",
            "8,16,5000",
        ],
    ] {
        let o = binmat(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bench_csv_and_counts() {
    let o = binmat(
        &[
            "bench",
            "--op",
            "and",
            "--impl",
            "both",
            "--sizes",
            "8,65",
            "--reps",
            "3",
            "--count-ops",
            "--seed",
            "4",
        ],
        None,
    );
    assert!(o.status.success());
    let out = text(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "impl,op,n,reps,total_ns,ns_per_op,total_ops,seed");
    assert_eq!(lines.len(), 5);
    let row: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(&row[..4], &["packed", "and", "8", "3"]);
    assert_eq!(row[6], "32");
    assert_eq!(row[7], "4");
    let dense: Vec<&str> = lines[2].split(',').collect();
    assert_eq!(&dense[..3], &["dense", "and", "8"]);
    assert_eq!(dense[6], "256");
}

#[test]
fn count_is_deterministic() {
    let args = [
        "count",
        "--op",
        "transpose",
        "--impl",
        "packed",
        "--sizes",
        "4,8,16",
        "--seed",
        "3",
    ];
    let strip = |o: Output| -> Vec<String> {
        text(&o)
            .lines()
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                if f.len() == 8 {
                    format!("{},{},{},{}", f[0], f[1], f[2], f[6])
                } else {
                    l.to_string()
                }
            })
            .collect()
    };
    assert_eq!(strip(binmat(&args, None)), strip(binmat(&args, None)));
}
