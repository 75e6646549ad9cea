//! Articulatory feature vocabulary for consonants and vowels.
//!
//! Consonants live on a 9 × 13 grid (manner rows × place columns). The index
//! order of [`Manner`] and [`Place`] is a compatibility contract: codepoint
//! assignment in [`crate::grapheme_engine`] is computed from it.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ModelError {
    #[error("unknown manner name {0:?}")]
    UnknownManner(String),
    #[error("unknown place name {0:?}")]
    UnknownPlace(String),
    #[error("unknown voicing name {0:?}")]
    UnknownVoicing(String),
    #[error("vowel coordinate {name} = {value} is outside [0, 1]")]
    CoordinateOutOfRange { name: &'static str, value: f64 },
}

/// Column header groups of the consonant grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MacroClass {
    Labial,
    Coronal,
    Dorsal,
    Radical,
    Laryngeal,
}

impl MacroClass {
    pub const ALL: [MacroClass; 5] = [
        MacroClass::Labial,
        MacroClass::Coronal,
        MacroClass::Dorsal,
        MacroClass::Radical,
        MacroClass::Laryngeal,
    ];

    pub fn header(self) -> &'static str {
        match self {
            MacroClass::Labial => "LABIAL",
            MacroClass::Coronal => "CORONAL",
            MacroClass::Dorsal => "DORSAL",
            MacroClass::Radical => "RADICAL",
            MacroClass::Laryngeal => "LARYNGEAL",
        }
    }
}

/// Place of articulation, ordered front to back as the grid's columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Bilabial,
    Labiodental,
    Dental,
    Alveolar,
    PalatoAlveolar,
    Retroflex,
    AlveoloPalatal,
    Palatal,
    Velar,
    Uvular,
    Pharyngeal,
    Epiglottal,
    Glottal,
}

impl Place {
    pub const COUNT: usize = 13;

    pub const ALL: [Place; Place::COUNT] = [
        Place::Bilabial,
        Place::Labiodental,
        Place::Dental,
        Place::Alveolar,
        Place::PalatoAlveolar,
        Place::Retroflex,
        Place::AlveoloPalatal,
        Place::Palatal,
        Place::Velar,
        Place::Uvular,
        Place::Pharyngeal,
        Place::Epiglottal,
        Place::Glottal,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Place> {
        Place::ALL.get(index).copied()
    }

    pub fn macro_class(self) -> MacroClass {
        use Place::*;
        match self {
            Bilabial | Labiodental => MacroClass::Labial,
            Dental | Alveolar | PalatoAlveolar | Retroflex | AlveoloPalatal => MacroClass::Coronal,
            Palatal | Velar | Uvular => MacroClass::Dorsal,
            Pharyngeal => MacroClass::Radical,
            Epiglottal | Glottal => MacroClass::Laryngeal,
        }
    }

    /// Name as used in the data files.
    pub fn name(self) -> &'static str {
        use Place::*;
        match self {
            Bilabial => "Bilabial",
            Labiodental => "Labiodental",
            Dental => "Dental",
            Alveolar => "Alveolar",
            PalatoAlveolar => "PalatoAlveolar",
            Retroflex => "Retroflex",
            AlveoloPalatal => "AlveoloPalatal",
            Palatal => "Palatal",
            Velar => "Velar",
            Uvular => "Uvular",
            Pharyngeal => "Pharyngeal",
            Epiglottal => "Epiglottal",
            Glottal => "Glottal",
        }
    }

    /// Column label for charts.
    pub fn label(self) -> &'static str {
        use Place::*;
        match self {
            Bilabial => "Bilabial",
            Labiodental => "Labio-dental",
            Dental => "Dental",
            Alveolar => "Alveolar",
            PalatoAlveolar => "Palato-alveolar",
            Retroflex => "Retroflex",
            AlveoloPalatal => "Alveolo-palatal",
            Palatal => "Palatal",
            Velar => "Velar",
            Uvular => "Uvular",
            Pharyngeal => "Pharyngeal",
            Epiglottal => "Epiglottal",
            Glottal => "Glottal",
        }
    }

    /// Three-letter code used in canonical grapheme names.
    pub fn code(self) -> &'static str {
        use Place::*;
        match self {
            Bilabial => "BLB",
            Labiodental => "LBD",
            Dental => "DEN",
            Alveolar => "ALV",
            PalatoAlveolar => "PAV",
            Retroflex => "RET",
            AlveoloPalatal => "ALP",
            Palatal => "PAL",
            Velar => "VEL",
            Uvular => "UVU",
            Pharyngeal => "PHA",
            Epiglottal => "EPI",
            Glottal => "GLT",
        }
    }

    pub fn from_code(code: &str) -> Option<Place> {
        Place::ALL.into_iter().find(|p| p.code() == code)
    }
}

impl FromStr for Place {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Place::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s) || p.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| ModelError::UnknownPlace(s.to_string()))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Manner of articulation, ordered as the grid's rows (nasal first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Manner {
    Nasal,
    Plosive,
    Fricative,
    Approximant,
    TapFlap,
    Trill,
    LateralFricative,
    LateralApproximant,
    LateralFlap,
}

impl Manner {
    pub const COUNT: usize = 9;

    pub const ALL: [Manner; Manner::COUNT] = [
        Manner::Nasal,
        Manner::Plosive,
        Manner::Fricative,
        Manner::Approximant,
        Manner::TapFlap,
        Manner::Trill,
        Manner::LateralFricative,
        Manner::LateralApproximant,
        Manner::LateralFlap,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Manner> {
        Manner::ALL.get(index).copied()
    }

    pub fn name(self) -> &'static str {
        use Manner::*;
        match self {
            Nasal => "Nasal",
            Plosive => "Plosive",
            Fricative => "Fricative",
            Approximant => "Approximant",
            TapFlap => "TapFlap",
            Trill => "Trill",
            LateralFricative => "LateralFricative",
            LateralApproximant => "LateralApproximant",
            LateralFlap => "LateralFlap",
        }
    }

    pub fn label(self) -> &'static str {
        use Manner::*;
        match self {
            Nasal => "Nasal",
            Plosive => "Plosive",
            Fricative => "Fricative",
            Approximant => "Approximant",
            TapFlap => "Tap, flap",
            Trill => "Trill",
            LateralFricative => "Lateral fricative",
            LateralApproximant => "Lateral approximant",
            LateralFlap => "Lateral flap",
        }
    }

    pub fn code(self) -> &'static str {
        use Manner::*;
        match self {
            Nasal => "NAS",
            Plosive => "PLO",
            Fricative => "FRI",
            Approximant => "APR",
            TapFlap => "TAP",
            Trill => "TRL",
            LateralFricative => "LFR",
            LateralApproximant => "LAP",
            LateralFlap => "LFL",
        }
    }

    pub fn from_code(code: &str) -> Option<Manner> {
        Manner::ALL.into_iter().find(|m| m.code() == code)
    }
}

impl FromStr for Manner {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Manner::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s) || m.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| ModelError::UnknownManner(s.to_string()))
    }
}

impl fmt::Display for Manner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Voicing {
    Voiceless,
    Voiced,
}

impl Voicing {
    pub const ALL: [Voicing; 2] = [Voicing::Voiceless, Voicing::Voiced];

    pub fn name(self) -> &'static str {
        match self {
            Voicing::Voiceless => "Voiceless",
            Voicing::Voiced => "Voiced",
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            Voicing::Voiceless => "VLS",
            Voicing::Voiced => "VCD",
        }
    }

    pub fn from_code(code: &str) -> Option<Voicing> {
        Voicing::ALL.into_iter().find(|v| v.code() == code)
    }
}

impl FromStr for Voicing {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Voicing::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s) || v.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| ModelError::UnknownVoicing(s.to_string()))
    }
}

impl fmt::Display for Voicing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coordinates of a consonant on the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConsonantFeatures {
    pub manner: Manner,
    pub place: Place,
    pub voicing: Voicing,
}

impl ConsonantFeatures {
    pub fn new(manner: Manner, place: Place, voicing: Voicing) -> Self {
        ConsonantFeatures {
            manner,
            place,
            voicing,
        }
    }

    /// Every expressible triple, manner-major then place then voicing.
    pub fn all() -> impl Iterator<Item = ConsonantFeatures> {
        Manner::ALL.into_iter().flat_map(|m| {
            Place::ALL
                .into_iter()
                .flat_map(move |p| Voicing::ALL.into_iter().map(move |v| Self::new(m, p, v)))
        })
    }
}

impl fmt::Display for ConsonantFeatures {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.voicing, self.place, self.manner)
    }
}

/// Tongue position on the vowel trapezoid plus lip rounding.
///
/// `height` runs from 0 (close) to 1 (open), `backness` from 0 (front) to 1 (back).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VowelFeatures {
    height: f64,
    backness: f64,
    pub rounded: bool,
}

impl VowelFeatures {
    pub fn new(height: f64, backness: f64, rounded: bool) -> Result<Self, ModelError> {
        check_unit("height", height)?;
        check_unit("backness", backness)?;
        Ok(VowelFeatures {
            height,
            backness,
            rounded,
        })
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn backness(&self) -> f64 {
        self.backness
    }

    pub fn same_anchor(&self, other: &VowelFeatures) -> bool {
        self.height == other.height && self.backness == other.backness
    }
}

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<(), ModelError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(ModelError::CoordinateOutOfRange { name, value })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AttestationStatus {
    /// An IPA symbol exists for the combination.
    Official,
    /// Expressible by combining radicals, but no IPA symbol.
    Unofficial,
    /// Judged articulatorily impossible.
    Impossible,
}

impl fmt::Display for AttestationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AttestationStatus::Official => "Official",
            AttestationStatus::Unofficial => "Unofficial",
            AttestationStatus::Impossible => "Impossible",
        })
    }
}

/// A shaded grid cell. `voicing: None` shades both halves of the cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ImpossibleCell {
    pub manner: Manner,
    pub place: Place,
    pub voicing: Option<Voicing>,
}

impl ImpossibleCell {
    pub fn covers(&self, f: &ConsonantFeatures) -> bool {
        self.manner == f.manner
            && self.place == f.place
            && self.voicing.is_none_or(|v| v == f.voicing)
    }
}

/// Attestation lookup built from the official triples and the impossible-cell list.
#[derive(Debug, Clone, Default)]
pub struct Attestation {
    official: HashSet<ConsonantFeatures>,
    impossible: Vec<ImpossibleCell>,
}

impl Attestation {
    pub fn new(
        official: impl IntoIterator<Item = ConsonantFeatures>,
        impossible: impl IntoIterator<Item = ImpossibleCell>,
    ) -> Self {
        Attestation {
            official: official.into_iter().collect(),
            impossible: impossible.into_iter().collect(),
        }
    }

    pub fn is_impossible(&self, f: &ConsonantFeatures) -> bool {
        self.impossible.iter().any(|cell| cell.covers(f))
    }

    /// Official wins over Impossible; table loading rejects data where both hold.
    pub fn attestation_of(&self, f: &ConsonantFeatures) -> AttestationStatus {
        if self.official.contains(f) {
            AttestationStatus::Official
        } else if self.is_impossible(f) {
            AttestationStatus::Impossible
        } else {
            AttestationStatus::Unofficial
        }
    }

    pub fn impossible_cells(&self) -> &[ImpossibleCell] {
        &self.impossible
    }
}

/// (manner rows, place columns) of the consonant grid.
pub const fn grid_dimensions() -> (usize, usize) {
    (Manner::COUNT, Place::COUNT)
}
