use subcode::report::{classify_report, double_report, info_report};
use subcode::{builtin, delta, make_css_decoder, monte_carlo, parse_code_file, CodeFile, Format, Mode, SubsystemCode};

#[test]
fn file_to_report() {
    let text = "# five-qubit code\np=2 n=5 format=pauli\nZXXZI\nIZXXZ\nZIZXX\nXZIZX\n";
    let code = parse_code_file(text).unwrap().to_code().unwrap();
    let r = info_report(&code, None).unwrap();
    let kv = r.to_key_value();
    for line in [
        "n=5 mode=exact",
        "k=1 mode=exact",
        "r=0 mode=exact",
        "d=3 mode=exact",
        "css=false",
    ] {
        assert!(kv.lines().any(|l| l == line), "missing `{line}` in\n{kv}");
    }
}

#[test]
fn doubled_file_roundtrips_through_both_formats() {
    let doubled = delta(&builtin::five_qubit());
    for format in [Format::Pauli, Format::Symplectic] {
        let text = CodeFile::from_code(&doubled.result, format).to_string();
        let back = parse_code_file(&text).unwrap().to_code().unwrap();
        assert_eq!(back, doubled.result);
    }
    let r = double_report(&doubled, None).unwrap();
    assert_eq!(r.get("doubled_k").unwrap().value, "2");
    assert_eq!(r.get("bracket_holds").unwrap().value, "true");
}

#[test]
fn qutrit_code_end_to_end() {
    let text = "p=3 n=3 format=symplectic\n1 2 0 | 0 0 0\n0 0 0 | 1 1 1\n";
    let code = parse_code_file(text).unwrap().to_code().unwrap();
    assert!(code.is_css());
    let split = code.css_split().unwrap();
    let dec = make_css_decoder(&split);
    let a = monte_carlo(&dec, 0.05, 400, 3).unwrap();
    let b = monte_carlo(&dec, 0.05, 400, 3).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.tally.trials, 400);
    let c = classify_report(&code);
    assert_eq!(c.get("region").unwrap().value, "maximal and minimal (CSS)");
}

#[test]
fn random_codes_report_consistently() {
    for seed in 0..20 {
        let code = builtin::random(3, 3, (seed % 7) as usize, seed).unwrap();
        let again = builtin::random(3, 3, (seed % 7) as usize, seed).unwrap();
        assert_eq!(code.generators(), again.generators());
        let r = info_report(&code, Some(2)).unwrap();
        let d = r.get("d").unwrap();
        match d.mode {
            Some(Mode::Exact) => assert!(d.value.parse::<usize>().unwrap() <= 2),
            Some(Mode::SearchBounded) => assert_eq!(d.value, ">=3"),
            _ => assert_eq!(d.value, "none"),
        }
        let twice = delta(&delta(&code).result).result;
        let (p, q) = (code.parameters(), twice.parameters());
        assert_eq!((q.n, q.k, q.r), (4 * p.n, 4 * p.k, 4 * p.r));
        assert!(SubsystemCode::from_subspace(twice.gauge().clone()).unwrap().is_css());
    }
}
