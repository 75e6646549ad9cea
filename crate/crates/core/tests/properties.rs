use hangulphabet::grapheme_engine::{compose, decompose, CodepointMap};
use hangulphabet::ipa_codec::{Features, SegmentKind};
use hangulphabet::{IpaTable, Mode, Transliterator};
use proptest::prelude::*;
use unicode_normalization::UnicodeNormalization;

fn table_symbols() -> (Vec<char>, Vec<char>) {
    let t = IpaTable::builtin();
    let bases = t
        .consonants()
        .iter()
        .map(|e| e.scalar)
        .chain(t.vowels().iter().map(|e| e.scalar))
        .collect();
    let marks = t.diacritics().iter().map(|d| d.scalar).collect();
    (bases, marks)
}

/// Arbitrary text mixing table letters, diacritics, spaces, and a few stray scalars.
fn ipa_like() -> impl Strategy<Value = String> {
    let (bases, marks) = table_symbols();
    let piece = prop_oneof![
        4 => proptest::sample::select(bases).prop_map(|c| c.to_string()),
        2 => (
            proptest::sample::select(table_symbols().0),
            proptest::sample::select(marks)
        )
            .prop_map(|(b, m)| format!("{b}{m}")),
        1 => Just(" ".to_string()),
        1 => proptest::sample::select(vec!['w', '!', 'ǃ', 'ˈ', 'X']).prop_map(|c| c.to_string()),
    ];
    proptest::collection::vec(piece, 0..12).prop_map(|v| v.concat())
}

proptest! {
    #[test]
    fn sources_concatenate_to_normalized_input(text in ipa_like()) {
        let table = IpaTable::builtin();
        let segments = table.tokenize(&text).unwrap();
        let joined: String = segments.iter().map(|s| s.source.as_str()).collect();
        prop_assert_eq!(joined, text.nfc().collect::<String>());
    }

    #[test]
    fn diacritics_do_not_change_features(
        base in proptest::sample::select(table_symbols().0),
        marks in proptest::collection::vec(proptest::sample::select(table_symbols().1), 0..4),
    ) {
        let table = IpaTable::builtin();
        let text: String = std::iter::once(base).chain(marks.iter().copied()).collect();
        let segments = table.tokenize(&text).unwrap();
        prop_assert_eq!(segments.len(), 1);
        let expected = table.features_of(base).unwrap();
        let got = match segments[0].kind {
            SegmentKind::Consonant(f) => Features::Consonant(f),
            SegmentKind::Vowel(v) => Features::Vowel(v),
            SegmentKind::Passthrough(c) => panic!("passthrough {c:?}"),
        };
        prop_assert_eq!(got, expected);
        prop_assert_eq!(segments[0].diacritics.len(), marks.len());
    }

    #[test]
    fn lenient_encode_decode_is_identity(text in ipa_like()) {
        let t = Transliterator::default();
        let encoded = t.encode(&text, Mode::Lenient).unwrap();
        let decoded = t.decode(&encoded).unwrap();
        prop_assert_eq!(decoded.text, text.nfc().collect::<String>());
    }

    #[test]
    fn codepoints_decode_to_their_grapheme(cp in 0xE000u32..0xE500) {
        let map = CodepointMap::new(&IpaTable::builtin());
        match map.grapheme_of_codepoint(cp) {
            Ok(kind) => prop_assert_eq!(map.codepoint_of(&kind).unwrap() as u32, cp),
            Err(_) => prop_assert!(!map.assigned().any(|a| a == cp)),
        }
    }
}

#[test]
fn featural_transparency_for_every_official_consonant() {
    let table = IpaTable::builtin();
    for e in table.consonants() {
        assert_eq!(decompose(&compose(&e.features)).unwrap(), e.features);
    }
}
