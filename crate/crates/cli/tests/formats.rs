use hadamard_cli::emit::csv_float;
use hadamard_cli::CommandSpec;
use proptest::prelude::*;

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        any::<f64>().prop_filter("finite", |x| x.is_finite()),
        -10.0..10.0f64,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn csv_floats_parse_back(x in finite()) {
        let back: f64 = csv_float(x).parse().unwrap();
        prop_assert!(back == x && back.is_sign_negative() == x.is_sign_negative());
    }

    #[test]
    fn verify_specs_round_trip(alpha in -0.7..0.7f64, tol in 1e-15..1.0f64, plus in any::<bool>()) {
        let family = format!("theorem1:{alpha},{},B", if plus { "+" } else { "-" });
        let tol = tol.to_string();
        let spec = CommandSpec::parse_from(["verify", "--gate", "hadamard", "--template", "hadamard", "--family", &family, "--tol", &tol]).unwrap();
        prop_assert_eq!(CommandSpec::parse_from(spec.to_args()).unwrap(), spec);
    }

    #[test]
    fn unequal_specs_round_trip(pr in finite(), pi in finite(), qr in finite(), qi in finite(), phi in finite()) {
        let gate = format!("unequal:{pr},{pi},{qr},{qi}");
        let template = format!("unequal-polar:{pr},{qi}");
        let family = format!("unequal-equatorial:{pr},{pi},{qr},{qi},-");
        let spec = CommandSpec::parse_from(["derive", "--gate", &gate, "--template", &template, "--grid", "3,2,1"]).unwrap();
        prop_assert_eq!(CommandSpec::parse_from(spec.to_args()).unwrap(), spec);
        let spec = CommandSpec::parse_from(["intersect", "--family", &family, "--circle", "polar"]).unwrap();
        prop_assert_eq!(CommandSpec::parse_from(spec.to_args()).unwrap(), spec);
        let polar = format!("polar:{phi}");
        let spec = CommandSpec::parse_from(["gates-show", &polar, "--out", "x.json"]).unwrap();
        prop_assert_eq!(CommandSpec::parse_from(spec.to_args()).unwrap(), spec);
    }
}
