use std::io::Write as _;

use godel::cli::run;
use godel::core::diagonal::goedel_sentence;
use godel::core::numbering::CodecScheme;

fn godel(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("godel").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = godel(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn codec_commands() {
    assert_eq!(ok(&["encode", "0=0"]), "1185\n");
    assert_eq!(ok(&["encode", "z=0"]), "20641\n");
    assert_eq!(ok(&["--scheme", "prime", "encode", "0=0"]), "2430\n");
    assert_eq!(ok(&["decode", "1185"]), "0=0\n");
    assert_eq!(ok(&["--scheme", "prime", "decode", "2430"]), "0=0\n");
    assert_eq!(
        ok(&["parse", "Ex:(x = sss0) & ~ 0=0"]),
        "Ex(x=sss0)&~(0=0)\n"
    );
    assert_eq!(ok(&["sub", "20641", "z", "2"]), "2163873\n");
    assert_eq!(ok(&["numeral", "3"]), "sss0\nsymbols=4\n");
    assert_eq!(
        ok(&["size", "0=0"]),
        "symbols=3 digits=3 materializable=true\n"
    );
}

#[test]
fn domain_errors_exit_1_naming_the_case() {
    let (code, out, err) = godel(&["sub", "1185", "z", "2"]);
    assert_eq!((code, out.as_str()), (1, ""));
    assert!(err.starts_with("VariableNotFree"), "{err}");
    let (code, _, err) = godel(&["decode", "32"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("NotDecodable"), "{err}");
    let (code, _, err) = godel(&["diagonalize", "0=0", "x"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("ArityError"), "{err}");
    let (code, _, err) = godel(&["--scheme", "prime", "goedel"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("UnsupportedScheme"), "{err}");
    let (code, _, err) = godel(&["goedel", "--materialize"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("CapExceeded"), "{err}");
}

#[test]
fn check_proof_files() {
    let dir = std::env::temp_dir().join(format!("godel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, text: &str| {
        let path = dir.join(name);
        std::fs::File::create(&path)
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
        path.to_string_lossy().into_owned()
    };
    let mp = write("mp.txt", "0=0\n0=0 -> (0=0 -> 0=0)\n0=0 -> 0=0\n");
    let bad = write("bad.txt", "0=s0\n");
    assert_eq!(ok(&["check-proof", &mp]), "valid\n");
    assert_eq!(ok(&["check-proof", &bad]), "invalid 1: not-an-axiom\n");
    let (code, _, err) = godel(&["check-proof", &dir.join("missing").to_string_lossy()]);
    assert_eq!(code, 1);
    assert!(err.starts_with("IoError"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn prove_pairs_lists_r_s() {
    assert_eq!(ok(&["prove-pairs", "1185"]), "1185 1185\n");
    assert_eq!(ok(&["prove-pairs", "1000"]), "");
    assert_eq!(
        ok(&["prove-pairs", "40000"]),
        ok(&["prove-pairs", "40000", "--sequential"])
    );
}

#[test]
fn goedel_report_matches_library() {
    let out = ok(&["goedel"]);
    let g = goedel_sentence(&CodecScheme::positional()).unwrap();
    assert_eq!(field(&out, "n"), g.n.to_string());
    assert_eq!(
        field(&out, "alpha_symbols"),
        g.alpha_code_report.symbol_count.to_string()
    );
    assert_eq!(
        field(&out, "alpha_digits"),
        g.alpha_code_report.digit_length.to_string()
    );
    assert_eq!(field(&out, "materializable"), "false");
    assert_eq!(field(&out, "fixed_point"), "pass");
    assert_eq!(field(&out, "certificate"), "impossible");
}

#[test]
fn diagonal_literal_certificate_gamma() {
    let out = ok(&["diagonalize", "w=w", "w"]);
    assert_eq!(field(&out, "fixed_point"), "pass");
    let out = ok(&["literal"]);
    assert_eq!(out.matches("fixed_point=pass").count(), 2);
    assert_eq!(out.matches("certificate=impossible").count(), 2);
    let out = ok(&["certificate", "0=0"]);
    assert_eq!(
        out,
        "formula_symbols=3\nnumeral_symbols=1186\ncertificate=impossible\n"
    );
    assert_eq!(ok(&["gamma", "1", "--s", "z=z"]), "1 41307\n");
    let rows = ok(&["gamma", "5"]);
    assert_eq!(rows.lines().count(), 5);
    let (code, _, err) = godel(&["gamma", "0"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("BoundsError"), "{err}");
}
