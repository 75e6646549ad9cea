//! IPA symbol tables and the tokenizer that turns IPA text into segments.
//!
//! The tables are loaded from four tab-separated files (see the `data/`
//! directory). The defaults are compiled in; [`IpaTable::from_dir`] loads a
//! replacement set at runtime.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;
use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

use crate::phoneme_model::{
    Attestation, AttestationStatus, ConsonantFeatures, ImpossibleCell, Manner, Place, Voicing,
    VowelFeatures,
};

pub const CONSONANTS_FILE: &str = "consonants.tsv";
pub const VOWELS_FILE: &str = "vowels.tsv";
pub const IMPOSSIBLE_FILE: &str = "impossible.tsv";
pub const DIACRITICS_FILE: &str = "diacritics.tsv";

const BUILTIN_CONSONANTS: &str = include_str!("../data/consonants.tsv");
const BUILTIN_VOWELS: &str = include_str!("../data/vowels.tsv");
const BUILTIN_IMPOSSIBLE: &str = include_str!("../data/impossible.tsv");
const BUILTIN_DIACRITICS: &str = include_str!("../data/diacritics.tsv");

/// Combining double inverted breve and double breve below.
pub const TIE_BARS: [char; 2] = ['\u{0361}', '\u{035C}'];

/// Malformed or inconsistent data files.
#[derive(Error, Debug)]
pub enum DataError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{file}:{line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Inconsistent(String),
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum CodecError {
    #[error("combining mark U+{:04X} at position {offset} has no preceding base letter", *.mark as u32)]
    LeadingCombiningMark { mark: char, offset: usize },
    #[error("tie bar at position {offset} does not join two letters")]
    UnpairedTieBar { offset: usize },
    #[error("unknown symbol U+{code:04X} {0:?}", code = *.0 as u32)]
    UnknownSymbol(char),
    #[error("no IPA symbol for {0}")]
    NoOfficialSymbol(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diacritic {
    pub scalar: char,
    pub name: String,
}

/// Feature bundle of a table symbol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Features {
    Consonant(ConsonantFeatures),
    Vowel(VowelFeatures),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegmentKind {
    Consonant(ConsonantFeatures),
    Vowel(VowelFeatures),
    Passthrough(char),
}

/// Membership in a tie-barred pair. The first member carries the tie mark.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tie {
    pub id: usize,
    pub mark: Option<char>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub diacritics: Vec<Diacritic>,
    /// Exact (normalized) source text of the segment, marks included.
    pub source: String,
    pub tie: Option<Tie>,
}

impl Segment {
    /// Passthrough of something that is neither whitespace nor a suprasegmental mark.
    pub fn is_unknown(&self) -> bool {
        matches!(self.kind, SegmentKind::Passthrough(c) if !is_transparent(c))
    }
}

/// Whitespace, stress, tone, and boundary marks. These pass through in strict mode too.
pub fn is_transparent(c: char) -> bool {
    c.is_whitespace()
        || matches!(
            c,
            'ˈ' | 'ˌ' | '|' | '‖' | '.' | '‿' | '↗' | '↘' | 'ꜛ' | 'ꜜ' | '\u{02E5}'..='\u{02E9}'
        )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Lenient,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConsonantEntry {
    pub scalar: char,
    pub features: ConsonantFeatures,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VowelEntry {
    pub scalar: char,
    pub features: VowelFeatures,
}

/// The loaded symbol inventory.
#[derive(Debug, Clone)]
pub struct IpaTable {
    consonants: Vec<ConsonantEntry>,
    vowels: Vec<VowelEntry>,
    diacritics: Vec<Diacritic>,
    consonant_by_scalar: HashMap<char, ConsonantFeatures>,
    scalar_by_consonant: HashMap<ConsonantFeatures, char>,
    vowel_by_scalar: HashMap<char, VowelFeatures>,
    diacritic_by_scalar: HashMap<char, usize>,
    attestation: Attestation,
}

impl IpaTable {
    pub fn builtin() -> Self {
        Self::parse(
            BUILTIN_CONSONANTS,
            BUILTIN_VOWELS,
            BUILTIN_IMPOSSIBLE,
            BUILTIN_DIACRITICS,
        )
        .expect("built-in IPA tables are valid")
    }

    pub fn from_dir(dir: &Path) -> Result<Self, DataError> {
        let read = |name: &str| {
            let path = dir.join(name);
            fs::read_to_string(&path).map_err(|source| DataError::Io { path, source })
        };
        Self::parse(
            &read(CONSONANTS_FILE)?,
            &read(VOWELS_FILE)?,
            &read(IMPOSSIBLE_FILE)?,
            &read(DIACRITICS_FILE)?,
        )
    }

    pub fn parse(
        consonants: &str,
        vowels: &str,
        impossible: &str,
        diacritics: &str,
    ) -> Result<Self, DataError> {
        let consonants = parse_consonants(consonants)?;
        let vowels = parse_vowels(vowels)?;
        let impossible = parse_impossible(impossible)?;
        let diacritics = parse_diacritics(diacritics)?;

        let mut consonant_by_scalar = HashMap::new();
        let mut scalar_by_consonant = HashMap::new();
        for entry in &consonants {
            if consonant_by_scalar
                .insert(entry.scalar, entry.features)
                .is_some()
            {
                return Err(DataError::Inconsistent(format!(
                    "consonant {} listed twice",
                    entry.scalar
                )));
            }
            if let Some(other) = scalar_by_consonant.insert(entry.features, entry.scalar) {
                return Err(DataError::Inconsistent(format!(
                    "consonants {other} and {} share the features {}",
                    entry.scalar, entry.features
                )));
            }
        }

        let mut vowel_by_scalar = HashMap::new();
        for (i, entry) in vowels.iter().enumerate() {
            if consonant_by_scalar.contains_key(&entry.scalar)
                || vowel_by_scalar
                    .insert(entry.scalar, entry.features)
                    .is_some()
            {
                return Err(DataError::Inconsistent(format!(
                    "symbol {} listed twice",
                    entry.scalar
                )));
            }
            if let Some(other) = vowels[..i].iter().find(|o| {
                o.features.same_anchor(&entry.features)
                    && o.features.rounded == entry.features.rounded
            }) {
                return Err(DataError::Inconsistent(format!(
                    "vowels {} and {} share the same position and rounding",
                    other.scalar, entry.scalar
                )));
            }
        }

        let mut diacritic_by_scalar = HashMap::new();
        for (i, d) in diacritics.iter().enumerate() {
            if TIE_BARS.contains(&d.scalar)
                || consonant_by_scalar.contains_key(&d.scalar)
                || vowel_by_scalar.contains_key(&d.scalar)
                || diacritic_by_scalar.insert(d.scalar, i).is_some()
            {
                return Err(DataError::Inconsistent(format!(
                    "diacritic U+{:04X} collides with another table entry",
                    d.scalar as u32
                )));
            }
        }

        let attestation = Attestation::new(consonants.iter().map(|e| e.features), impossible);
        for entry in &consonants {
            if attestation.is_impossible(&entry.features) {
                return Err(DataError::Inconsistent(format!(
                    "consonant {} sits in an impossible cell",
                    entry.scalar
                )));
            }
        }

        Ok(IpaTable {
            consonants,
            vowels,
            diacritics,
            consonant_by_scalar,
            scalar_by_consonant,
            vowel_by_scalar,
            diacritic_by_scalar,
            attestation,
        })
    }

    pub fn consonants(&self) -> &[ConsonantEntry] {
        &self.consonants
    }

    /// Vowel rows in file order.
    pub fn vowels(&self) -> &[VowelEntry] {
        &self.vowels
    }

    pub fn diacritics(&self) -> &[Diacritic] {
        &self.diacritics
    }

    pub fn diacritic(&self, scalar: char) -> Option<&Diacritic> {
        self.diacritic_by_scalar
            .get(&scalar)
            .map(|&i| &self.diacritics[i])
    }

    pub fn attestation(&self) -> &Attestation {
        &self.attestation
    }

    pub fn attestation_of(&self, f: &ConsonantFeatures) -> AttestationStatus {
        self.attestation.attestation_of(f)
    }

    pub fn features_of(&self, scalar: char) -> Result<Features, CodecError> {
        if let Some(f) = self.consonant_by_scalar.get(&scalar) {
            Ok(Features::Consonant(*f))
        } else if let Some(v) = self.vowel_by_scalar.get(&scalar) {
            Ok(Features::Vowel(*v))
        } else {
            Err(CodecError::UnknownSymbol(scalar))
        }
    }

    pub fn consonant_features_of(&self, scalar: char) -> Result<ConsonantFeatures, CodecError> {
        self.consonant_by_scalar
            .get(&scalar)
            .copied()
            .ok_or(CodecError::UnknownSymbol(scalar))
    }

    pub fn vowel_features_of(&self, scalar: char) -> Result<VowelFeatures, CodecError> {
        self.vowel_by_scalar
            .get(&scalar)
            .copied()
            .ok_or(CodecError::UnknownSymbol(scalar))
    }

    pub fn ipa_of(&self, features: &Features) -> Result<char, CodecError> {
        match features {
            Features::Consonant(f) => self.consonant_symbol(f),
            Features::Vowel(v) => self.vowel_symbol(v),
        }
    }

    pub fn consonant_symbol(&self, f: &ConsonantFeatures) -> Result<char, CodecError> {
        self.scalar_by_consonant
            .get(f)
            .copied()
            .ok_or_else(|| CodecError::NoOfficialSymbol(f.to_string()))
    }

    pub fn vowel_symbol(&self, v: &VowelFeatures) -> Result<char, CodecError> {
        self.vowels
            .iter()
            .find(|e| e.features == *v)
            .map(|e| e.scalar)
            .ok_or_else(|| {
                CodecError::NoOfficialSymbol(format!(
                    "vowel at height {} backness {} ({})",
                    v.height(),
                    v.backness(),
                    if v.rounded { "rounded" } else { "unrounded" }
                ))
            })
    }

    fn base_kind(&self, c: char) -> Option<SegmentKind> {
        if let Some(f) = self.consonant_by_scalar.get(&c) {
            Some(SegmentKind::Consonant(*f))
        } else {
            self.vowel_by_scalar.get(&c).map(|v| SegmentKind::Vowel(*v))
        }
    }

    /// Splits a precomposed letter that is not itself in the tables, such as
    /// `ã`, into a table base plus table diacritics.
    fn split_precomposed(&self, c: char) -> Option<(SegmentKind, Vec<Diacritic>)> {
        let mut parts = std::iter::once(c).nfd();
        let base = parts.next().filter(|&b| b != c)?;
        let kind = self.base_kind(base)?;
        let marks = parts
            .map(|m| self.diacritic(m).cloned())
            .collect::<Option<Vec<_>>>()?;
        Some((kind, marks))
    }

    /// Tokenizes after canonical composition. Unknown scalars become passthrough segments.
    pub fn tokenize(&self, text: &str) -> Result<Vec<Segment>, CodecError> {
        let text: String = text.nfc().collect();
        let mut segments: Vec<Segment> = Vec::new();
        // (tie id, position of the tie bar) while waiting for the second member
        let mut open_tie: Option<(usize, usize)> = None;
        let mut next_tie_id = 0;

        for (offset, c) in text.chars().enumerate() {
            if TIE_BARS.contains(&c) {
                let prev = match segments.last_mut() {
                    Some(prev)
                        if open_tie.is_none()
                            && prev.tie.is_none()
                            && !matches!(prev.kind, SegmentKind::Passthrough(_)) =>
                    {
                        prev
                    }
                    _ => return Err(CodecError::UnpairedTieBar { offset }),
                };
                prev.tie = Some(Tie {
                    id: next_tie_id,
                    mark: Some(c),
                });
                prev.source.push(c);
                open_tie = Some((next_tie_id, offset));
                next_tie_id += 1;
                continue;
            }

            let known_mark = self.diacritic(c).cloned();
            if known_mark.is_some() || is_combining_mark(c) {
                if let Some((_, at)) = open_tie {
                    return Err(CodecError::UnpairedTieBar { offset: at });
                }
                let Some(prev) = segments.last_mut() else {
                    return Err(CodecError::LeadingCombiningMark { mark: c, offset });
                };
                match known_mark {
                    Some(d) => {
                        prev.diacritics.push(d);
                        prev.source.push(c);
                    }
                    None => segments.push(Segment {
                        kind: SegmentKind::Passthrough(c),
                        diacritics: Vec::new(),
                        source: c.to_string(),
                        tie: None,
                    }),
                }
                continue;
            }

            let (kind, diacritics) = match self.base_kind(c) {
                Some(kind) => (kind, Vec::new()),
                None => self
                    .split_precomposed(c)
                    .unwrap_or((SegmentKind::Passthrough(c), Vec::new())),
            };
            let mut segment = Segment {
                kind,
                diacritics,
                source: c.to_string(),
                tie: None,
            };
            if let Some((id, at)) = open_tie.take() {
                if matches!(kind, SegmentKind::Passthrough(_)) {
                    return Err(CodecError::UnpairedTieBar { offset: at });
                }
                segment.tie = Some(Tie { id, mark: None });
            }
            segments.push(segment);
        }

        if let Some((_, at)) = open_tie {
            return Err(CodecError::UnpairedTieBar { offset: at });
        }
        Ok(segments)
    }

    /// Like [`IpaTable::tokenize`], but strict mode rejects the first unknown symbol.
    pub fn tokenize_with(&self, text: &str, mode: Mode) -> Result<Vec<Segment>, CodecError> {
        let segments = self.tokenize(text)?;
        if mode == Mode::Strict {
            if let Some(SegmentKind::Passthrough(c)) =
                segments.iter().find(|s| s.is_unknown()).map(|s| s.kind)
            {
                return Err(CodecError::UnknownSymbol(c));
            }
        }
        Ok(segments)
    }
}

impl Default for IpaTable {
    fn default() -> Self {
        Self::builtin()
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers, split on tabs.
fn records<'a>(text: &'a str) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, trimmed.split('\t').map(str::trim).collect()))
        }
    })
}

struct RecordCtx {
    file: &'static str,
    line: usize,
}

impl RecordCtx {
    fn err(&self, message: impl fmt::Display) -> DataError {
        DataError::Parse {
            file: self.file.to_string(),
            line: self.line,
            message: message.to_string(),
        }
    }

    fn arity(&self, fields: &[&str], allowed: &[usize]) -> Result<(), DataError> {
        if allowed.contains(&fields.len()) {
            Ok(())
        } else {
            Err(self.err(format!(
                "expected {allowed:?} tab-separated fields, found {}",
                fields.len()
            )))
        }
    }

    fn scalar(&self, hex: &str) -> Result<char, DataError> {
        u32::from_str_radix(hex, 16)
            .ok()
            .and_then(char::from_u32)
            .ok_or_else(|| self.err(format!("bad hex scalar {hex:?}")))
    }

    /// Hex column plus the literal symbol column, which must agree.
    fn symbol(&self, hex: &str, literal: &str) -> Result<char, DataError> {
        let scalar = self.scalar(hex)?;
        let mut chars = literal.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if c == scalar => Ok(scalar),
            _ => Err(self.err(format!("symbol {literal:?} does not match scalar U+{hex}"))),
        }
    }

    fn unit(&self, field: &str) -> Result<f64, DataError> {
        let value: f64 = field
            .parse()
            .map_err(|_| self.err(format!("bad number {field:?}")))?;
        if (0.0..=1.0).contains(&value) {
            Ok(value)
        } else {
            Err(self.err(format!("{value} is outside [0, 1]")))
        }
    }

    fn parse<T: std::str::FromStr>(&self, field: &str) -> Result<T, DataError>
    where
        T::Err: fmt::Display,
    {
        field.parse().map_err(|e| self.err(e))
    }
}

fn parse_consonants(text: &str) -> Result<Vec<ConsonantEntry>, DataError> {
    records(text)
        .map(|(line, f)| {
            let ctx = RecordCtx {
                file: CONSONANTS_FILE,
                line,
            };
            ctx.arity(&f, &[5])?;
            Ok(ConsonantEntry {
                scalar: ctx.symbol(f[0], f[1])?,
                features: ConsonantFeatures::new(
                    ctx.parse::<Manner>(f[2])?,
                    ctx.parse::<Place>(f[3])?,
                    ctx.parse::<Voicing>(f[4])?,
                ),
            })
        })
        .collect()
}

fn parse_vowels(text: &str) -> Result<Vec<VowelEntry>, DataError> {
    records(text)
        .map(|(line, f)| {
            let ctx = RecordCtx {
                file: VOWELS_FILE,
                line,
            };
            ctx.arity(&f, &[5])?;
            let rounded = match f[4] {
                "0" => false,
                "1" => true,
                other => return Err(ctx.err(format!("rounded must be 0 or 1, got {other:?}"))),
            };
            let features = VowelFeatures::new(ctx.unit(f[2])?, ctx.unit(f[3])?, rounded)
                .map_err(|e| ctx.err(e))?;
            Ok(VowelEntry {
                scalar: ctx.symbol(f[0], f[1])?,
                features,
            })
        })
        .collect()
}

fn parse_impossible(text: &str) -> Result<Vec<ImpossibleCell>, DataError> {
    let mut seen = HashSet::new();
    records(text)
        .map(|(line, f)| {
            let ctx = RecordCtx {
                file: IMPOSSIBLE_FILE,
                line,
            };
            ctx.arity(&f, &[2, 3])?;
            let voicing = match f.get(2) {
                None | Some(&"*") => None,
                Some(v) => Some(ctx.parse::<Voicing>(v)?),
            };
            let cell = ImpossibleCell {
                manner: ctx.parse(f[0])?,
                place: ctx.parse(f[1])?,
                voicing,
            };
            if !seen.insert(cell) {
                return Err(ctx.err("duplicate cell"));
            }
            Ok(cell)
        })
        .collect()
}

fn parse_diacritics(text: &str) -> Result<Vec<Diacritic>, DataError> {
    records(text)
        .map(|(line, f)| {
            let ctx = RecordCtx {
                file: DIACRITICS_FILE,
                line,
            };
            ctx.arity(&f, &[2])?;
            if f[1].is_empty() {
                return Err(ctx.err("empty diacritic name"));
            }
            Ok(Diacritic {
                scalar: ctx.scalar(f[0])?,
                name: f[1].to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Manner::*;
    use Place::*;
    use Voicing::*;

    fn table() -> IpaTable {
        IpaTable::builtin()
    }

    fn cons(m: Manner, p: Place, v: Voicing) -> SegmentKind {
        SegmentKind::Consonant(ConsonantFeatures::new(m, p, v))
    }

    #[test]
    fn tokenize_simple() {
        let t = table();
        let segs = t.tokenize("pa").unwrap();
        assert_eq!(segs.len(), 2);
        assert_eq!(segs[0].kind, cons(Plosive, Bilabial, Voiceless));
        assert!(
            matches!(segs[1].kind, SegmentKind::Vowel(v) if v.height() == 1.0 && v.backness() == 0.0 && !v.rounded)
        );
        assert!(t.tokenize("").unwrap().is_empty());
    }

    #[test]
    fn diacritic_attaches_to_previous_base() {
        let t = table();
        let segs = t.tokenize("b\u{0325}").unwrap();
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].kind, cons(Plosive, Bilabial, Voiced));
        assert_eq!(segs[0].diacritics.len(), 1);
        assert_eq!(segs[0].diacritics[0].name, "voiceless");
        assert_eq!(segs[0].source, "b\u{0325}");
    }

    #[test]
    fn diacritics_keep_source_order() {
        let t = table();
        let segs = t.tokenize("tʰʷː").unwrap();
        let names: Vec<_> = segs[0].diacritics.iter().map(|d| d.name.as_str()).collect();
        assert_eq!(names, ["aspirated", "labialized", "long"]);
    }

    #[test]
    fn leading_mark_is_rejected() {
        let err = table().tokenize("\u{0325}b").unwrap_err();
        assert_eq!(
            err,
            CodecError::LeadingCombiningMark {
                mark: '\u{0325}',
                offset: 0
            }
        );
        // unknown combining marks too
        assert!(matches!(
            table().tokenize("\u{20DD}").unwrap_err(),
            CodecError::LeadingCombiningMark { .. }
        ));
    }

    #[test]
    fn tie_bar_links_two_segments() {
        let t = table();
        let segs = t.tokenize("t\u{0361}s").unwrap();
        assert_eq!(segs.len(), 2);
        assert_eq!(
            segs[0].tie,
            Some(Tie {
                id: 0,
                mark: Some('\u{0361}')
            })
        );
        assert_eq!(segs[1].tie, Some(Tie { id: 0, mark: None }));
        assert_eq!(segs[0].source, "t\u{0361}");
        let segs = t.tokenize("d\u{035C}ʒa").unwrap();
        assert_eq!(segs[1].tie.map(|x| x.id), Some(0));
        assert_eq!(segs[2].tie, None);
    }

    #[test]
    fn unpaired_tie_bars() {
        let t = table();
        for bad in [
            "\u{0361}s",
            "t\u{0361}",
            "t\u{0361} s",
            "t\u{0361}\u{0361}s",
            "t\u{0361}ʰs",
            "! \u{0361}s",
        ] {
            assert!(
                matches!(t.tokenize(bad), Err(CodecError::UnpairedTieBar { .. })),
                "{bad:?}"
            );
        }
        // canonical ordering moves the ring below in front of the tie bar
        let segs = t.tokenize("t\u{0361}\u{0325}s").unwrap();
        assert_eq!(segs[0].source, "t\u{0325}\u{0361}");
        // a second tie on an already linked segment
        assert!(matches!(
            t.tokenize("t\u{0361}s\u{0361}x"),
            Err(CodecError::UnpairedTieBar { .. })
        ));
    }

    #[test]
    fn unknown_scalars_pass_through() {
        let t = table();
        let segs = t.tokenize("w!").unwrap();
        assert_eq!(segs[0].kind, SegmentKind::Passthrough('w'));
        assert_eq!(segs[1].kind, SegmentKind::Passthrough('!'));
        assert!(segs[0].is_unknown());
        assert!(matches!(
            t.tokenize_with("p w", Mode::Strict),
            Err(CodecError::UnknownSymbol('w'))
        ));
        // whitespace and stress marks are not unknown
        assert!(t.tokenize_with("ˈpa pa", Mode::Strict).is_ok());
    }

    #[test]
    fn clicks_pass_through() {
        let segs = table().tokenize("ǃʘ").unwrap();
        assert!(segs
            .iter()
            .all(|s| matches!(s.kind, SegmentKind::Passthrough(_))));
    }

    #[test]
    fn precomposed_and_decomposed_agree() {
        let t = table();
        let composed = t.tokenize("\u{00E3}").unwrap();
        let decomposed = t.tokenize("a\u{0303}").unwrap();
        assert_eq!(composed, decomposed);
        assert_eq!(composed[0].diacritics[0].name, "nasalized");
        assert!(matches!(composed[0].kind, SegmentKind::Vowel(_)));
        // ç is a table letter in its own right; c + cedilla composes to it
        let c = t.tokenize("c\u{0327}").unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].kind, cons(Fricative, Palatal, Voiceless));
    }

    #[test]
    fn features_of_named_symbols() {
        let t = table();
        assert_eq!(
            t.features_of('p').unwrap(),
            Features::Consonant(ConsonantFeatures::new(Plosive, Bilabial, Voiceless))
        );
        assert_eq!(
            t.features_of('m').unwrap(),
            Features::Consonant(ConsonantFeatures::new(Nasal, Bilabial, Voiced))
        );
        assert_eq!(
            t.features_of('ɳ').unwrap(),
            Features::Consonant(ConsonantFeatures::new(Nasal, Retroflex, Voiced))
        );
        assert_eq!(t.features_of('!'), Err(CodecError::UnknownSymbol('!')));
    }

    #[test]
    fn ipa_of_inverts_features_of() {
        let t = table();
        let b = ConsonantFeatures::new(Plosive, Bilabial, Voiced);
        assert_eq!(t.ipa_of(&Features::Consonant(b)).unwrap(), 'b');
        let velar_trill = ConsonantFeatures::new(Trill, Velar, Voiced);
        assert!(matches!(
            t.ipa_of(&Features::Consonant(velar_trill)),
            Err(CodecError::NoOfficialSymbol(_))
        ));
        for e in t.consonants() {
            assert_eq!(
                t.ipa_of(&t.features_of(e.scalar).unwrap()).unwrap(),
                e.scalar
            );
        }
        for e in t.vowels() {
            assert_eq!(
                t.ipa_of(&t.features_of(e.scalar).unwrap()).unwrap(),
                e.scalar
            );
        }
    }

    #[test]
    fn vowel_anchors() {
        let t = table();
        let i = t.vowel_features_of('i').unwrap();
        assert_eq!((i.height(), i.backness(), i.rounded), (0.0, 0.0, false));
        let u = t.vowel_features_of('u').unwrap();
        assert_eq!((u.height(), u.backness(), u.rounded), (0.0, 1.0, true));
        let y = t.vowel_features_of('y').unwrap();
        assert!(y.same_anchor(&i) && y.rounded);
        assert_eq!(
            t.vowel_features_of('p'),
            Err(CodecError::UnknownSymbol('p'))
        );
    }

    #[test]
    fn table_attestation_examples() {
        let t = table();
        assert_eq!(
            t.attestation_of(&ConsonantFeatures::new(Fricative, Glottal, Voiceless)),
            AttestationStatus::Official
        );
        assert_eq!(
            t.attestation_of(&ConsonantFeatures::new(Nasal, Glottal, Voiced)),
            AttestationStatus::Impossible
        );
        assert_eq!(
            t.attestation_of(&ConsonantFeatures::new(Trill, Velar, Voiced)),
            AttestationStatus::Impossible
        );
    }

    #[test]
    fn malformed_data_is_reported_with_line() {
        let bad = "# header\n0070\tp\tPlosive\tBilabial\n";
        let err = IpaTable::parse(bad, BUILTIN_VOWELS, BUILTIN_IMPOSSIBLE, BUILTIN_DIACRITICS)
            .unwrap_err();
        assert!(matches!(err, DataError::Parse { line: 2, .. }), "{err}");

        let mismatched = "0070\tb\tPlosive\tBilabial\tVoiceless\n";
        assert!(IpaTable::parse(
            mismatched,
            BUILTIN_VOWELS,
            BUILTIN_IMPOSSIBLE,
            BUILTIN_DIACRITICS
        )
        .is_err());

        let duplicate =
            "0070\tp\tPlosive\tBilabial\tVoiceless\n0062\tb\tPlosive\tBilabial\tVoiceless\n";
        assert!(matches!(
            IpaTable::parse(
                duplicate,
                BUILTIN_VOWELS,
                BUILTIN_IMPOSSIBLE,
                BUILTIN_DIACRITICS
            ),
            Err(DataError::Inconsistent(_))
        ));

        let official_but_impossible = "0068\th\tNasal\tGlottal\tVoiced\n";
        assert!(matches!(
            IpaTable::parse(
                official_but_impossible,
                BUILTIN_VOWELS,
                BUILTIN_IMPOSSIBLE,
                BUILTIN_DIACRITICS
            ),
            Err(DataError::Inconsistent(_))
        ));

        let bad_vowel = "0069\ti\t1.2\t0\t0\n";
        assert!(IpaTable::parse(
            BUILTIN_CONSONANTS,
            bad_vowel,
            BUILTIN_IMPOSSIBLE,
            BUILTIN_DIACRITICS
        )
        .is_err());
    }
}
