//! IPA text to Hangulphabet codepoints and back.

use std::fmt;

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use crate::grapheme_engine::{
    canonical_name, compose, compose_segment, compose_vowel, consonant_codepoint, decompose,
    parse_canonical_name, CodepointMap, GraphemeError, GraphemeKind, GraphemeUnit, Side,
    VowelGrapheme,
};
use crate::ipa_codec::{CodecError, Features, IpaTable, Mode};
use crate::phoneme_model::{AttestationStatus, ConsonantFeatures, VowelFeatures};

/// First and last scalar of the Unicode Private Use Area.
pub const PUA: std::ops::RangeInclusive<u32> = 0xE000..=0xF8FF;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum TranslitError {
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    Grapheme(#[from] GraphemeError),
    #[error("malformed code {0:?}")]
    MalformedCode(String),
}

/// One line of the IPA ↔ PUA font map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FontMapRow {
    pub ipa: char,
    pub pua: char,
    pub name: String,
}

impl fmt::Display for FontMapRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:04X}\t{:04X}\t{}",
            self.ipa as u32, self.pua as u32, self.name
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decoded {
    pub text: String,
    /// Names of graphemes that have no IPA symbol and were written as `[NAME]`.
    pub unresolved: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Subject {
    Consonant(ConsonantFeatures),
    Vowel(VowelFeatures),
}

/// Everything `inspect` reports about one symbol or canonical name.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub symbol: Option<char>,
    pub subject: Subject,
    pub attestation: AttestationStatus,
    pub codepoint: Option<char>,
    pub name: String,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.symbol {
            Some(c) => writeln!(f, "symbol:      {c} (U+{:04X})", c as u32)?,
            None => writeln!(f, "symbol:      (none)")?,
        }
        match &self.subject {
            Subject::Consonant(c) => {
                writeln!(f, "kind:        consonant")?;
                writeln!(
                    f,
                    "manner:      {} (top radical {})",
                    c.manner,
                    c.manner.index()
                )?;
                writeln!(
                    f,
                    "place:       {} (bottom radical {}, {})",
                    c.place,
                    c.place.index(),
                    c.place.macro_class().header()
                )?;
                writeln!(f, "voicing:     {}", c.voicing)?;
            }
            Subject::Vowel(v) => {
                writeln!(f, "kind:        vowel")?;
                writeln!(f, "height:      {}", v.height())?;
                writeln!(f, "backness:    {}", v.backness())?;
                writeln!(
                    f,
                    "rounded:     {}",
                    if v.rounded {
                        "yes (tick right)"
                    } else {
                        "no (tick left)"
                    }
                )?;
            }
        }
        writeln!(f, "attestation: {}", self.attestation)?;
        match self.codepoint {
            Some(cp) => writeln!(f, "codepoint:   U+{:04X}", cp as u32)?,
            None => writeln!(f, "codepoint:   (not encodable)")?,
        }
        write!(f, "name:        {}", self.name)
    }
}

#[derive(Debug, Clone)]
pub struct Transliterator {
    table: IpaTable,
    codepoints: CodepointMap,
}

impl Transliterator {
    pub fn new(table: IpaTable) -> Self {
        let codepoints = CodepointMap::new(&table);
        Transliterator { table, codepoints }
    }

    pub fn table(&self) -> &IpaTable {
        &self.table
    }

    pub fn codepoints(&self) -> &CodepointMap {
        &self.codepoints
    }

    pub fn graphemes(&self, text: &str, mode: Mode) -> Result<Vec<GraphemeUnit>, TranslitError> {
        self.table
            .tokenize_with(text, mode)?
            .iter()
            .map(|s| compose_segment(s).map_err(TranslitError::from))
            .collect()
    }

    /// Scalars of the encoded form of `unit`: the PUA codepoint (or the
    /// passthrough scalar), its diacritics, then the tie mark if it opens a pair.
    pub fn unit_scalars(&self, unit: &GraphemeUnit) -> Result<Vec<char>, TranslitError> {
        let base = match &unit.kind {
            GraphemeKind::Passthrough(c) => *c,
            kind => self.codepoints.codepoint_of(kind)?,
        };
        let mut out = vec![base];
        out.extend(unit.diacritics.iter().map(|d| d.scalar));
        out.extend(unit.tie.and_then(|t| t.mark));
        Ok(out)
    }

    /// Hangulphabet text: PUA codepoints interleaved with passthrough scalars and marks.
    pub fn encode(&self, text: &str, mode: Mode) -> Result<String, TranslitError> {
        let mut out = String::new();
        for unit in self.graphemes(text, mode)? {
            out.extend(self.unit_scalars(&unit)?);
        }
        Ok(out)
    }

    fn decode_scalar(&self, c: char, out: &mut Decoded) -> Result<(), TranslitError> {
        let cp = c as u32;
        if !PUA.contains(&cp) {
            out.text.push(c);
            return Ok(());
        }
        let resolved = match self.codepoints.grapheme_of_codepoint(cp)? {
            GraphemeKind::Consonant(g) => {
                let f = decompose(&g)?;
                self.table
                    .consonant_symbol(&f)
                    .map_err(|_| canonical_name(&f))
            }
            GraphemeKind::Vowel(v) => self
                .table
                .vowel_symbol(&v.features()?)
                .map_err(|_| v.name()),
            GraphemeKind::Passthrough(c) => Ok(c),
        };
        match resolved {
            Ok(symbol) => out.text.push(symbol),
            Err(name) => {
                out.text.push('[');
                out.text.push_str(&name);
                out.text.push(']');
                out.unresolved.push(name);
            }
        }
        Ok(())
    }

    /// Maps every assigned PUA scalar back to IPA; other scalars are copied.
    /// The result is in canonical composed form.
    pub fn decode(&self, text: &str) -> Result<Decoded, TranslitError> {
        let mut out = Decoded {
            text: String::new(),
            unresolved: Vec::new(),
        };
        for c in text.chars() {
            self.decode_scalar(c, &mut out)?;
        }
        out.text = out.text.nfc().collect();
        Ok(out)
    }

    /// Decodes either whitespace-separated `U+XXXX` codes or raw text.
    pub fn decode_input(&self, input: &str) -> Result<Decoded, TranslitError> {
        match parse_codes(input) {
            Some(scalars) => self.decode(&scalars?.into_iter().collect::<String>()),
            None => self.decode(input),
        }
    }

    pub fn font_map(&self) -> Vec<FontMapRow> {
        let mut rows: Vec<FontMapRow> = Vec::new();
        for e in self.table.consonants() {
            let g = compose(&e.features);
            rows.push(FontMapRow {
                ipa: e.scalar,
                pua: consonant_codepoint(&g).expect("in range"),
                name: canonical_name(&e.features),
            });
        }
        for e in self.table.vowels() {
            let g = compose_vowel(&e.features).expect("table vowels are in range");
            rows.push(FontMapRow {
                ipa: e.scalar,
                pua: self.codepoints.vowel_codepoint(&g).expect("table anchor"),
                name: g.name(),
            });
        }
        rows.sort_by_key(|r| r.pua);
        rows
    }

    /// Looks up an IPA symbol, a canonical consonant name, or a vowel name.
    pub fn inspect(&self, query: &str) -> Result<Report, TranslitError> {
        let query = query.trim();
        let normalized: String = query.nfc().collect();
        let mut chars = normalized.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if let Ok(features) = self.table.features_of(c) {
                return self.report(Some(c), features);
            }
        }
        if let Ok(f) = parse_canonical_name(query) {
            let symbol = self.table.consonant_symbol(&f).ok();
            return self.report(symbol, Features::Consonant(f));
        }
        if query.starts_with("VOW.") {
            if let Some(v) = self.table.vowels().iter().find(|v| {
                compose_vowel(&v.features)
                    .map(|g| g.name() == query)
                    .unwrap_or(false)
            }) {
                return self.report(Some(v.scalar), Features::Vowel(v.features));
            }
            // anchors without a table symbol for this rounding
            for &anchor in self.codepoints.vowel_anchors() {
                for side in [Side::Left, Side::Right] {
                    let g = VowelGrapheme {
                        anchor,
                        rounding_side: side,
                    };
                    if g.name() == query {
                        return self.report(None, Features::Vowel(g.features()?));
                    }
                }
            }
        }
        let first = normalized.chars().next().unwrap_or('\u{FFFD}');
        Err(CodecError::UnknownSymbol(first).into())
    }

    fn report(&self, symbol: Option<char>, features: Features) -> Result<Report, TranslitError> {
        Ok(match features {
            Features::Consonant(f) => {
                let g = compose(&f);
                Report {
                    symbol,
                    subject: Subject::Consonant(f),
                    attestation: self.table.attestation_of(&f),
                    codepoint: Some(consonant_codepoint(&g)?),
                    name: canonical_name(&f),
                }
            }
            Features::Vowel(v) => {
                let g = compose_vowel(&v)?;
                Report {
                    symbol,
                    subject: Subject::Vowel(v),
                    attestation: if symbol.is_some() {
                        AttestationStatus::Official
                    } else {
                        AttestationStatus::Unofficial
                    },
                    codepoint: self.codepoints.vowel_codepoint(&g).ok(),
                    name: g.name(),
                }
            }
        })
    }
}

impl Default for Transliterator {
    fn default() -> Self {
        Transliterator::new(IpaTable::builtin())
    }
}

/// Formats scalars as space-separated `U+XXXX` codes.
pub fn format_codes(scalars: impl IntoIterator<Item = char>) -> String {
    scalars
        .into_iter()
        .map(|c| format!("U+{:04X}", c as u32))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `Some` when every whitespace-separated token looks like `U+hex`.
pub fn parse_codes(input: &str) -> Option<Result<Vec<char>, TranslitError>> {
    let tokens: Vec<&str> = input.split_whitespace().collect();
    if tokens.is_empty()
        || !tokens
            .iter()
            .all(|t| t.len() > 2 && (t.starts_with("U+") || t.starts_with("u+")))
    {
        return None;
    }
    Some(
        tokens
            .into_iter()
            .map(|t| {
                u32::from_str_radix(&t[2..], 16)
                    .ok()
                    .and_then(char::from_u32)
                    .ok_or_else(|| TranslitError::MalformedCode(t.to_string()))
            })
            .collect(),
    )
}
