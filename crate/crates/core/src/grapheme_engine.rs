//! Feature bundles to graphemes and graphemes to Private Use Area codepoints.
//!
//! Codepoint layout (frozen):
//!
//! * consonants: `U+E000 + (manner × 13 + place) × 2 + voiced`, i.e. `U+E000..=U+E0E9`
//! * vowels: `U+E400 + 2 × anchor + rounded`, where `anchor` counts the distinct
//!   (height, backness) positions of `vowels.tsv` in file order

use std::fmt;

use thiserror::Error;

use crate::ipa_codec::{Diacritic, IpaTable, Segment, SegmentKind, Tie};
use crate::phoneme_model::{
    check_unit, ConsonantFeatures, Manner, ModelError, Place, Voicing, VowelFeatures,
};

pub const CONSONANT_BASE: u32 = 0xE000;
pub const CONSONANT_COUNT: u32 = (Manner::COUNT * Place::COUNT * 2) as u32;
pub const VOWEL_BASE: u32 = 0xE400;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GraphemeError {
    #[error("radical index out of range: top {top}, bottom {bottom}")]
    IndexOutOfRange { top: usize, bottom: usize },
    #[error(transparent)]
    CoordinateOutOfRange(#[from] ModelError),
    #[error("{0} has no assigned codepoint")]
    NotEncodable(String),
    #[error("U+{0:04X} is not an assigned codepoint")]
    UnassignedCodepoint(u32),
    #[error("unknown grapheme name {0:?}")]
    UnknownName(String),
}

/// Manner radical stacked over place radical, with an optional voicing bar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConsonantGrapheme {
    pub top_radical: usize,
    pub bottom_radical: usize,
    pub voicing_bar: bool,
}

impl ConsonantGrapheme {
    /// Canonical ASCII name, e.g. `PLO.BLB.VLS`.
    pub fn name(&self) -> Result<String, GraphemeError> {
        Ok(canonical_name(&decompose(self)?))
    }
}

/// Which side of the breakout figure the rounding tick comes out of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VowelGrapheme {
    /// (height, backness)
    pub anchor: (f64, f64),
    pub rounding_side: Side,
}

impl VowelGrapheme {
    pub fn rounded(&self) -> bool {
        self.rounding_side == Side::Right
    }

    pub fn features(&self) -> Result<VowelFeatures, GraphemeError> {
        Ok(VowelFeatures::new(
            self.anchor.0,
            self.anchor.1,
            self.rounded(),
        )?)
    }

    /// `VOW.H<height%>.B<backness%>.<UNR|RND>`, percentages rounded to integers.
    pub fn name(&self) -> String {
        format!(
            "VOW.H{}.B{}.{}",
            (self.anchor.0 * 100.0).round() as i64,
            (self.anchor.1 * 100.0).round() as i64,
            if self.rounded() { "RND" } else { "UNR" }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphemeKind {
    Consonant(ConsonantGrapheme),
    Vowel(VowelGrapheme),
    Passthrough(char),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphemeUnit {
    pub kind: GraphemeKind,
    pub diacritics: Vec<Diacritic>,
    pub tie: Option<Tie>,
}

impl GraphemeUnit {
    pub fn bare(kind: GraphemeKind) -> Self {
        GraphemeUnit {
            kind,
            diacritics: Vec::new(),
            tie: None,
        }
    }

    pub fn consonant(f: ConsonantFeatures) -> Self {
        Self::bare(GraphemeKind::Consonant(compose(&f)))
    }

    /// Canonical name of the base grapheme; passthrough scalars print as `U+XXXX`.
    pub fn name(&self) -> String {
        match &self.kind {
            GraphemeKind::Consonant(g) => g
                .name()
                .unwrap_or_else(|_| format!("?{}.{}", g.top_radical, g.bottom_radical)),
            GraphemeKind::Vowel(v) => v.name(),
            GraphemeKind::Passthrough(c) => format!("U+{:04X}", *c as u32),
        }
    }
}

impl fmt::Display for GraphemeUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn compose(f: &ConsonantFeatures) -> ConsonantGrapheme {
    ConsonantGrapheme {
        top_radical: f.manner.index(),
        bottom_radical: f.place.index(),
        voicing_bar: f.voicing == Voicing::Voiced,
    }
}

pub fn decompose(g: &ConsonantGrapheme) -> Result<ConsonantFeatures, GraphemeError> {
    match (
        Manner::from_index(g.top_radical),
        Place::from_index(g.bottom_radical),
    ) {
        (Some(manner), Some(place)) => Ok(ConsonantFeatures::new(
            manner,
            place,
            if g.voicing_bar {
                Voicing::Voiced
            } else {
                Voicing::Voiceless
            },
        )),
        _ => Err(GraphemeError::IndexOutOfRange {
            top: g.top_radical,
            bottom: g.bottom_radical,
        }),
    }
}

pub fn compose_vowel(v: &VowelFeatures) -> Result<VowelGrapheme, GraphemeError> {
    check_unit("height", v.height())?;
    check_unit("backness", v.backness())?;
    Ok(VowelGrapheme {
        anchor: (v.height(), v.backness()),
        rounding_side: if v.rounded { Side::Right } else { Side::Left },
    })
}

pub fn compose_segment(segment: &Segment) -> Result<GraphemeUnit, GraphemeError> {
    let kind = match &segment.kind {
        SegmentKind::Consonant(f) => GraphemeKind::Consonant(compose(f)),
        SegmentKind::Vowel(v) => GraphemeKind::Vowel(compose_vowel(v)?),
        SegmentKind::Passthrough(c) => GraphemeKind::Passthrough(*c),
    };
    Ok(GraphemeUnit {
        kind,
        diacritics: segment.diacritics.clone(),
        tie: segment.tie,
    })
}

pub fn canonical_name(f: &ConsonantFeatures) -> String {
    format!(
        "{}.{}.{}",
        f.manner.code(),
        f.place.code(),
        f.voicing.code()
    )
}

pub fn parse_canonical_name(name: &str) -> Result<ConsonantFeatures, GraphemeError> {
    let unknown = || GraphemeError::UnknownName(name.to_string());
    let mut parts = name.split('.');
    let (Some(m), Some(p), Some(v), None) =
        (parts.next(), parts.next(), parts.next(), parts.next())
    else {
        return Err(unknown());
    };
    Ok(ConsonantFeatures::new(
        Manner::from_code(m).ok_or_else(unknown)?,
        Place::from_code(p).ok_or_else(unknown)?,
        Voicing::from_code(v).ok_or_else(unknown)?,
    ))
}

pub fn consonant_codepoint(g: &ConsonantGrapheme) -> Result<char, GraphemeError> {
    decompose(g)?;
    let offset = (g.top_radical * Place::COUNT + g.bottom_radical) * 2 + usize::from(g.voicing_bar);
    Ok(char::from_u32(CONSONANT_BASE + offset as u32).expect("PUA scalar"))
}

pub fn consonant_of_codepoint(cp: u32) -> Result<ConsonantGrapheme, GraphemeError> {
    if !(CONSONANT_BASE..CONSONANT_BASE + CONSONANT_COUNT).contains(&cp) {
        return Err(GraphemeError::UnassignedCodepoint(cp));
    }
    let offset = (cp - CONSONANT_BASE) as usize;
    let cell = offset / 2;
    Ok(ConsonantGrapheme {
        top_radical: cell / Place::COUNT,
        bottom_radical: cell % Place::COUNT,
        voicing_bar: offset % 2 == 1,
    })
}

/// Codepoint assignment. Vowel anchors come from the vowel table's file order.
#[derive(Debug, Clone)]
pub struct CodepointMap {
    anchors: Vec<(f64, f64)>,
}

impl CodepointMap {
    pub fn new(table: &IpaTable) -> Self {
        let mut anchors: Vec<(f64, f64)> = Vec::new();
        for v in table.vowels() {
            let a = (v.features.height(), v.features.backness());
            if !anchors.contains(&a) {
                anchors.push(a);
            }
        }
        CodepointMap { anchors }
    }

    pub fn vowel_anchors(&self) -> &[(f64, f64)] {
        &self.anchors
    }

    /// One past the last assigned vowel codepoint.
    pub fn vowel_end(&self) -> u32 {
        VOWEL_BASE + 2 * self.anchors.len() as u32
    }

    pub fn anchor_index(&self, anchor: (f64, f64)) -> Option<usize> {
        self.anchors.iter().position(|a| *a == anchor)
    }

    pub fn vowel_codepoint(&self, g: &VowelGrapheme) -> Result<char, GraphemeError> {
        let index = self
            .anchor_index(g.anchor)
            .ok_or_else(|| GraphemeError::NotEncodable(g.name()))?;
        let cp = VOWEL_BASE + 2 * index as u32 + u32::from(g.rounded());
        Ok(char::from_u32(cp).expect("PUA scalar"))
    }

    pub fn codepoint_of(&self, kind: &GraphemeKind) -> Result<char, GraphemeError> {
        match kind {
            GraphemeKind::Consonant(g) => consonant_codepoint(g),
            GraphemeKind::Vowel(v) => self.vowel_codepoint(v),
            GraphemeKind::Passthrough(c) => Err(GraphemeError::NotEncodable(format!(
                "passthrough U+{:04X}",
                *c as u32
            ))),
        }
    }

    pub fn grapheme_of_codepoint(&self, cp: u32) -> Result<GraphemeKind, GraphemeError> {
        if (CONSONANT_BASE..CONSONANT_BASE + CONSONANT_COUNT).contains(&cp) {
            return consonant_of_codepoint(cp).map(GraphemeKind::Consonant);
        }
        if (VOWEL_BASE..self.vowel_end()).contains(&cp) {
            let offset = (cp - VOWEL_BASE) as usize;
            return Ok(GraphemeKind::Vowel(VowelGrapheme {
                anchor: self.anchors[offset / 2],
                rounding_side: if offset % 2 == 1 {
                    Side::Right
                } else {
                    Side::Left
                },
            }));
        }
        Err(GraphemeError::UnassignedCodepoint(cp))
    }

    /// Every assigned codepoint in ascending order.
    pub fn assigned(&self) -> impl Iterator<Item = u32> + '_ {
        (CONSONANT_BASE..CONSONANT_BASE + CONSONANT_COUNT).chain(VOWEL_BASE..self.vowel_end())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Manner::*;
    use Place::*;
    use Voicing::*;

    fn g(top: usize, bottom: usize, bar: bool) -> ConsonantGrapheme {
        ConsonantGrapheme {
            top_radical: top,
            bottom_radical: bottom,
            voicing_bar: bar,
        }
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            compose(&ConsonantFeatures::new(Plosive, Bilabial, Voiceless)),
            g(1, 0, false)
        );
        assert_eq!(
            compose(&ConsonantFeatures::new(Plosive, Bilabial, Voiced)),
            g(1, 0, true)
        );
        assert_eq!(
            compose(&ConsonantFeatures::new(Nasal, Bilabial, Voiced)),
            g(0, 0, true)
        );
    }

    #[test]
    fn decompose_inverts_compose_on_the_whole_grid() {
        for f in ConsonantFeatures::all() {
            assert_eq!(decompose(&compose(&f)).unwrap(), f);
        }
        assert_eq!(
            decompose(&g(1, 0, false)).unwrap(),
            ConsonantFeatures::new(Plosive, Bilabial, Voiceless)
        );
        assert!(matches!(
            decompose(&g(9, 0, false)),
            Err(GraphemeError::IndexOutOfRange { top: 9, .. })
        ));
        assert!(decompose(&g(0, 13, false)).is_err());
    }

    #[test]
    fn compose_vowel_sides() {
        let i = compose_vowel(&VowelFeatures::new(0.0, 0.0, false).unwrap()).unwrap();
        assert_eq!(i.anchor, (0.0, 0.0));
        assert_eq!(i.rounding_side, Side::Left);
        let u = compose_vowel(&VowelFeatures::new(0.0, 1.0, true).unwrap()).unwrap();
        assert_eq!(u.anchor, (0.0, 1.0));
        assert_eq!(u.rounding_side, Side::Right);
        let mid = compose_vowel(&VowelFeatures::new(0.5, 0.5, false).unwrap()).unwrap();
        assert_eq!(mid.anchor, (0.5, 0.5));
        assert_eq!(mid.rounding_side, Side::Left);
    }

    #[test]
    fn consonant_codepoints() {
        assert_eq!(consonant_codepoint(&g(0, 0, true)).unwrap(), '\u{E001}');
        assert_eq!(consonant_codepoint(&g(1, 0, false)).unwrap(), '\u{E01A}');
        assert_eq!(consonant_codepoint(&g(1, 0, true)).unwrap(), '\u{E01B}');
        assert_eq!(consonant_codepoint(&g(8, 12, true)).unwrap(), '\u{E0E9}');
        assert_eq!(consonant_of_codepoint(0xE01B).unwrap(), g(1, 0, true));
        assert_eq!(
            consonant_of_codepoint(0xE0EA),
            Err(GraphemeError::UnassignedCodepoint(0xE0EA))
        );
    }

    #[test]
    fn codepoint_map_round_trip() {
        let table = IpaTable::builtin();
        let map = CodepointMap::new(&table);
        assert_eq!(
            map.grapheme_of_codepoint(0xE3FF),
            Err(GraphemeError::UnassignedCodepoint(0xE3FF))
        );
        assert!(map.grapheme_of_codepoint(map.vowel_end()).is_err());
        let mut seen = std::collections::HashSet::new();
        for cp in map.assigned() {
            let kind = map.grapheme_of_codepoint(cp).unwrap();
            assert_eq!(map.codepoint_of(&kind).unwrap() as u32, cp);
            assert!(seen.insert(cp));
        }
        assert_eq!(seen.len(), 234 + 2 * map.vowel_anchors().len());
    }

    #[test]
    fn vowel_codepoints_follow_file_order() {
        let table = IpaTable::builtin();
        let map = CodepointMap::new(&table);
        let cp = |c: char| {
            let v = table.vowel_features_of(c).unwrap();
            map.vowel_codepoint(&compose_vowel(&v).unwrap()).unwrap() as u32
        };
        assert_eq!(cp('i'), 0xE400);
        assert_eq!(cp('y'), 0xE401);
        assert_eq!(cp('ʉ'), 0xE403);
        let off_grid = VowelGrapheme {
            anchor: (0.123, 0.456),
            rounding_side: Side::Left,
        };
        assert!(matches!(
            map.vowel_codepoint(&off_grid),
            Err(GraphemeError::NotEncodable(_))
        ));
        assert!(matches!(
            map.codepoint_of(&GraphemeKind::Passthrough('!')),
            Err(GraphemeError::NotEncodable(_))
        ));
    }

    #[test]
    fn canonical_names() {
        let p = ConsonantFeatures::new(Plosive, Bilabial, Voiceless);
        assert_eq!(canonical_name(&p), "PLO.BLB.VLS");
        assert_eq!(
            parse_canonical_name("TRL.VEL.VCD").unwrap(),
            ConsonantFeatures::new(Trill, Velar, Voiced)
        );
        for f in ConsonantFeatures::all() {
            assert_eq!(parse_canonical_name(&canonical_name(&f)).unwrap(), f);
        }
        assert!(parse_canonical_name("PLO.BLB").is_err());
        assert!(parse_canonical_name("PLO.BLB.VLS.X").is_err());
        assert!(parse_canonical_name("plo.blb.vls").is_err());
    }

    #[test]
    fn voicing_minimal_pairs_differ_by_one() {
        for m in Manner::ALL {
            for p in Place::ALL {
                let a = compose(&ConsonantFeatures::new(m, p, Voiceless));
                let b = compose(&ConsonantFeatures::new(m, p, Voiced));
                assert_eq!(a.top_radical, b.top_radical);
                assert_eq!(a.bottom_radical, b.bottom_radical);
                let ca = consonant_codepoint(&a).unwrap() as u32;
                let cb = consonant_codepoint(&b).unwrap() as u32;
                assert_eq!(cb, ca + 1);
            }
        }
    }
}
