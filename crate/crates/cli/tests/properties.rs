use convex_eq::error::{EXIT_INVALID_BODY, EXIT_NUMERICAL, EXIT_USAGE};
use convex_eq::{parse_body_spec, BodySpec, CliError};
use planar_equilibria::Error;
use proptest::prelude::*;

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![-1e6..1e6f64, -1.0..1.0f64, Just(0.0)]
}

proptest! {
    #[test]
    fn spec_round_trips(a0 in finite(), coeffs in proptest::collection::vec((finite(), finite()), 0..8)) {
        let (cos, sin): (Vec<f64>, Vec<f64>) = coeffs.into_iter().unzip();
        let spec = BodySpec { a0, cos, sin };
        let parsed = parse_body_spec(spec.to_json().as_bytes()).unwrap();
        prop_assert_eq!(BodySpec::from_support(&parsed), spec);
    }

    #[test]
    fn mismatched_lengths_are_schema_errors(a in 0usize..6, b in 0usize..6) {
        prop_assume!(a != b);
        let json = format!(r#"{{"a0": 1, "cos": {:?}, "sin": {:?}}}"#, vec![0.0; a], vec![0.0; b]);
        let err = parse_body_spec(json.as_bytes()).unwrap_err();
        prop_assert!(matches!(err, CliError::Schema(_)));
        prop_assert_eq!(err.exit_code(), EXIT_INVALID_BODY);
    }

    #[test]
    fn truncated_input_is_a_parse_error(cut in 1usize..40) {
        let json = r#"{"a0": 3, "cos": [0, 0.3], "sin": [0, 0]}"#;
        let cut = cut.min(json.len() - 1);
        let err = parse_body_spec(&json.as_bytes()[..cut]).unwrap_err();
        prop_assert_eq!(err.exit_code(), EXIT_INVALID_BODY);
        prop_assert!(err.to_json_line().lines().count() == 1);
    }

    #[test]
    fn core_errors_map_to_their_family(value in -10.0..10.0f64, n in 0usize..100) {
        prop_assert_eq!(CliError::from(Error::NotConvex { phi: value, rho: -value.abs() }).exit_code(), EXIT_INVALID_BODY);
        prop_assert_eq!(CliError::from(Error::NotConverged { value, samples: n }).exit_code(), EXIT_NUMERICAL);
        prop_assert_eq!(CliError::from(Error::Mismatch { direct: n, formula: n as i64 + 2 }).exit_code(), EXIT_NUMERICAL);
        prop_assert_eq!(CliError::from(Error::TooFewSamples { got: n, min: 16 }).exit_code(), EXIT_USAGE);
        prop_assert_eq!(CliError::from(Error::InvalidIncline { alpha: value }).exit_code(), EXIT_USAGE);
    }
}
