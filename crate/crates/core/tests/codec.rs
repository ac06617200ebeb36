use binmat::io::{emit_grid, emit_tuple, parse_grid, parse_tuple};
use binmat::{seeded_rng, BitMatrix, Error};
use proptest::prelude::*;

proptest! {
    #[test]
    fn grid_roundtrip(n in 1usize..=150, seed: u64) {
        let m = BitMatrix::random(n, &mut seeded_rng(seed)).unwrap();
        let text = emit_grid(&m);
        prop_assert_eq!(parse_grid(&text).unwrap(), m.clone());
        prop_assert_eq!(emit_grid(&parse_grid(&text).unwrap()), text);
    }

    #[test]
    fn tuple_matches_grid(n in 1usize..=64, seed: u64) {
        let m = BitMatrix::random(n, &mut seeded_rng(seed)).unwrap();
        let tuple = emit_tuple(&m).unwrap();
        let from_tuple = parse_tuple(&tuple).unwrap();
        prop_assert_eq!(&from_tuple, &parse_grid(&emit_grid(&m)).unwrap());
        prop_assert_eq!(from_tuple, m);
    }

    #[test]
    fn grid_parser_never_panics(s in "[0-9\n ]{0,40}") {
        let _ = parse_grid(&s);
        let _ = parse_tuple(&s);
    }
}

#[test]
fn rejects_values_past_the_row_width() {
    for n in 1..64usize {
        let mut vals = vec!["0".to_string(); n];
        vals[n - 1] = (1u64 << n).to_string();
        let text = format!("{n}\n{}\n", vals.join(" "));
        assert!(
            matches!(parse_tuple(&text), Err(Error::Parse { line: 2, .. })),
            "n={n}"
        );
    }
    assert!(parse_tuple("64\n18446744073709551616\n").is_err());
}
