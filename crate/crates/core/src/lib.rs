//! Transliteration between IPA and the Hangulphabet, a featural alphabet whose
//! consonant graphemes stack a manner radical over a place radical and mark
//! voicing with a bar through the lower radical.
//!
//! * [`phoneme_model`]: feature vocabulary and attestation of feature combinations
//! * [`ipa_codec`]: IPA tables and the tokenizer
//! * [`grapheme_engine`]: grapheme composition and Private Use Area codepoints
//! * [`glyph_renderer`]: SVG glyphs and charts
//! * [`transliterate`]: encode/decode, inspection, and the font map

pub mod glyph_renderer;
pub mod grapheme_engine;
pub mod ipa_codec;
pub mod phoneme_model;
pub mod transliterate;

pub use glyph_renderer::{Geometry, RenderError, RenderStyle, Renderer};
pub use grapheme_engine::{
    CodepointMap, ConsonantGrapheme, GraphemeKind, GraphemeUnit, VowelGrapheme,
};
pub use ipa_codec::{CodecError, DataError, IpaTable, Mode, Segment, SegmentKind};
pub use phoneme_model::{
    AttestationStatus, ConsonantFeatures, Manner, Place, Voicing, VowelFeatures,
};
pub use transliterate::{TranslitError, Transliterator};
