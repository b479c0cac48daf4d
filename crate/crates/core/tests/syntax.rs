use polish_logic::{is_well_formed, parse_str, tokenize, Formula, OperatorTable};
use proptest::prelude::*;

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        prop::sample::select(vec!['p', 'q', 'r', 's']).prop_map(Formula::Atom),
        any::<bool>().prop_map(Formula::Const),
    ];
    leaf.prop_recursive(6, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::negation),
            (
                prop::sample::select(vec!['C', 'K', 'A']),
                inner.clone(),
                inner
            )
                .prop_map(|(op, l, r)| Formula::op(op, [l, r])),
        ]
    })
}

fn counter_valid(s: &str, table: &OperatorTable) -> bool {
    tokenize(s, table).is_ok_and(|tokens| is_well_formed(&tokens, table).is_valid())
}

proptest! {
    #[test]
    fn polish_round_trip(f in formula()) {
        let table = OperatorTable::standard();
        let text = f.to_polish();
        prop_assert_eq!(text.chars().count(), f.size());
        prop_assert_eq!(parse_str(&text, &table).unwrap(), f);
    }

    #[test]
    fn counter_matches_parser_on_random_strings(s in "[NCKApq01x ]{0,16}") {
        let table = OperatorTable::standard();
        prop_assert_eq!(counter_valid(&s, &table), parse_str(&s, &table).is_ok());
    }

    #[test]
    fn whitespace_is_insignificant(f in formula(), gaps in prop::collection::vec(0usize..3, 64)) {
        let table = OperatorTable::standard();
        let spaced: String = f
            .to_polish()
            .chars()
            .zip(gaps.iter().cycle())
            .flat_map(|(c, &n)| std::iter::repeat_n(' ', n).chain([c]))
            .collect();
        prop_assert_eq!(parse_str(&spaced, &table).unwrap(), f);
    }
}

/// Every string over `alphabet` of length at most `max_len`.
fn all_strings(alphabet: &[char], max_len: usize) -> impl Iterator<Item = String> + '_ {
    (0..=max_len).flat_map(move |len| {
        let count = alphabet.len().pow(len as u32);
        (0..count).map(move |mut index| {
            let mut s = vec![' '; len];
            for slot in s.iter_mut().rev() {
                *slot = alphabet[index % alphabet.len()];
                index /= alphabet.len();
            }
            s.into_iter().collect()
        })
    })
}

// Well-formedness depends only on the arity of each token, so one symbol per
// arity class plus an unknown character covers every case.
const REDUCED: [char; 5] = ['N', 'C', 'p', '0', 'x'];

#[test]
fn counter_matches_parser_exhaustively() {
    let table = OperatorTable::standard();
    let mut valid = 0usize;
    for s in all_strings(&REDUCED, 9) {
        let by_counter = counter_valid(&s, &table);
        assert_eq!(by_counter, parse_str(&s, &table).is_ok(), "{s:?}");
        valid += usize::from(by_counter);
    }
    assert!(valid > 1000);
}

#[test]
fn well_formed_strings_have_no_well_formed_proper_prefix() {
    let table = OperatorTable::standard();
    for s in all_strings(&REDUCED[..4], 9).filter(|s| counter_valid(s, &table)) {
        let chars: Vec<char> = s.chars().collect();
        for cut in 0..chars.len() {
            let prefix: String = chars[..cut].iter().collect();
            assert!(
                !counter_valid(&prefix, &table),
                "{prefix:?} is a prefix of {s:?}"
            );
        }
    }
}

#[test]
fn generic_arithmetic_operators() {
    let table = OperatorTable::empty().with('+', 2).unwrap();
    let right = parse_str("+a+bc", &table).unwrap();
    let left = parse_str("++abc", &table).unwrap();
    assert_ne!(left, right);
    assert_eq!(right.to_polish(), "+a+bc");
    assert_eq!(left.to_polish(), "++abc");
    assert_eq!(
        right,
        Formula::op(
            '+',
            [
                Formula::atom('a'),
                Formula::op('+', [Formula::atom('b'), Formula::atom('c')])
            ]
        )
    );
}
