//! SVG rendering of graphemes, text runs, and the consonant and vowel charts.
//!
//! Radical shapes are data: each radical is a list of polylines in the unit box
//! `[0,1]²` (y grows downwards), loaded from `geometry.json`. Place radicals
//! from the dental column onwards carry a `tongue_marker_x`, drawn as a
//! vertical stroke unless `draw_tongue_marker` is false.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grapheme_engine::{
    compose, GraphemeError, GraphemeKind, GraphemeUnit, Side, VowelGrapheme,
};
use crate::ipa_codec::{is_transparent, Diacritic, IpaTable};
use crate::phoneme_model::{
    AttestationStatus, ConsonantFeatures, MacroClass, Manner, ModelError, Place, Voicing,
};

const BUILTIN_GEOMETRY: &str = include_str!("../data/geometry.json");

pub const DEFAULT_TILT_DEGREES: f64 = 8.0;

#[derive(Error, Debug)]
pub enum RenderError {
    #[error("no geometry for radical {0:?}")]
    MissingGeometry(String),
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("cannot parse geometry: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    CoordinateOutOfRange(#[from] ModelError),
    #[error("unit {index}: {source}")]
    AtUnit {
        index: usize,
        source: Box<RenderError>,
    },
}

impl From<GraphemeError> for RenderError {
    fn from(e: GraphemeError) -> Self {
        match e {
            GraphemeError::CoordinateOutOfRange(m) => RenderError::CoordinateOutOfRange(m),
            other => RenderError::InvalidGeometry(other.to_string()),
        }
    }
}

impl RenderError {
    /// True for errors caused by the geometry data rather than the input.
    pub fn is_geometry_error(&self) -> bool {
        match self {
            RenderError::CoordinateOutOfRange(_) => false,
            RenderError::AtUnit { source, .. } => source.is_geometry_error(),
            _ => true,
        }
    }
}

pub type Point = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadicalGeometry {
    pub strokes: Vec<Vec<Point>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tongue_marker_x: Option<f64>,
    #[serde(default = "yes")]
    pub draw_tongue_marker: bool,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrapezoidSpec {
    /// Close-front, close-back, open-back, open-front, before tilting.
    pub corners: [Point; 4],
    pub tilt_degrees: f64,
    /// Half-size of the breakout window, in trapezoid units.
    pub breakout_radius: f64,
}

impl TrapezoidSpec {
    pub fn validate(&self) -> Result<(), RenderError> {
        let bad = |m: String| Err(RenderError::InvalidGeometry(m));
        if !self.tilt_degrees.is_finite() || self.tilt_degrees == 0.0 {
            return bad(format!("tilt must be non-zero, got {}", self.tilt_degrees));
        }
        if !(self.breakout_radius.is_finite() && self.breakout_radius > 0.0) {
            return bad(format!(
                "breakout radius must be positive, got {}",
                self.breakout_radius
            ));
        }
        if self.corners.iter().flatten().any(|v| !v.is_finite()) {
            return bad("trapezoid corners must be finite".into());
        }
        // shoelace area; also require a consistent turn direction (convex)
        let c = &self.corners;
        let mut area = 0.0;
        let mut signs = Vec::new();
        for i in 0..4 {
            let (a, b, d) = (c[i], c[(i + 1) % 4], c[(i + 2) % 4]);
            area += a[0] * b[1] - b[0] * a[1];
            signs.push(((b[0] - a[0]) * (d[1] - b[1]) - (b[1] - a[1]) * (d[0] - b[0])).signum());
        }
        if area.abs() / 2.0 < 1e-6 || signs.iter().any(|s| *s != signs[0]) {
            return bad("trapezoid corners do not form a convex quadrilateral".into());
        }
        Ok(())
    }

    fn centroid(&self) -> Point {
        let n = self.corners.len() as f64;
        let sx: f64 = self.corners.iter().map(|p| p[0]).sum();
        let sy: f64 = self.corners.iter().map(|p| p[1]).sum();
        [sx / n, sy / n]
    }

    fn rotate(&self, p: Point) -> Point {
        let c = self.centroid();
        let (sin, cos) = self.tilt_degrees.to_radians().sin_cos();
        let (dx, dy) = (p[0] - c[0], p[1] - c[1]);
        [c[0] + dx * cos - dy * sin, c[1] + dx * sin + dy * cos]
    }

    /// Tilted outline, in corner order.
    pub fn outline(&self) -> [Point; 4] {
        self.corners.map(|p| self.rotate(p))
    }

    /// Position of (height, backness) inside the tilted trapezoid.
    pub fn anchor_point(&self, height: f64, backness: f64) -> Point {
        let [tl, tr, br, bl] = self.corners;
        let left = lerp(tl, bl, height);
        let right = lerp(tr, br, height);
        self.rotate(lerp(left, right, backness))
    }
}

fn lerp(a: Point, b: Point, t: f64) -> Point {
    [a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t]
}

/// Liang–Barsky clip of segment `a`–`b` to an axis-aligned window.
fn clip_segment(a: Point, b: Point, min: Point, max: Point) -> Option<(Point, Point)> {
    let d = [b[0] - a[0], b[1] - a[1]];
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    for axis in 0..2 {
        for (p, q) in [
            (-d[axis], a[axis] - min[axis]),
            (d[axis], max[axis] - a[axis]),
        ] {
            if p == 0.0 {
                if q < 0.0 {
                    return None;
                }
            } else {
                let r = q / p;
                if p < 0.0 {
                    t0 = t0.max(r);
                } else {
                    t1 = t1.min(r);
                }
            }
        }
    }
    (t0 < t1).then(|| (lerp(a, b, t0), lerp(a, b, t1)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Geometry {
    /// Vertical extent of drawn tongue markers, in unit-box coordinates.
    pub tongue_marker_span: [f64; 2],
    pub radicals: BTreeMap<String, RadicalGeometry>,
    pub trapezoid: TrapezoidSpec,
}

pub fn manner_radical_id(m: Manner) -> String {
    format!("manner:{}", m.code())
}

pub fn place_radical_id(p: Place) -> String {
    format!("place:{}", p.code())
}

impl Geometry {
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_GEOMETRY).expect("built-in geometry is valid")
    }

    pub fn from_json(json: &str) -> Result<Self, RenderError> {
        let geometry: Geometry = serde_json::from_str(json)?;
        geometry.validate()?;
        Ok(geometry)
    }

    pub fn from_path(path: &Path) -> Result<Self, RenderError> {
        let json = fs::read_to_string(path).map_err(|source| RenderError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&json)
    }

    pub fn radical(&self, id: &str) -> Result<&RadicalGeometry, RenderError> {
        self.radicals
            .get(id)
            .ok_or_else(|| RenderError::MissingGeometry(id.to_string()))
    }

    pub fn place_radical(&self, place: Place) -> Result<&RadicalGeometry, RenderError> {
        self.radical(&place_radical_id(place))
    }

    /// Checks unit-box bounds and tongue-marker rules. Missing radicals are
    /// reported at render time instead.
    pub fn validate(&self) -> Result<(), RenderError> {
        let bad = |m: String| Err(RenderError::InvalidGeometry(m));
        let in_unit = |v: f64| (0.0..=1.0).contains(&v);
        let [lo, hi] = self.tongue_marker_span;
        if !(in_unit(lo) && in_unit(hi) && lo < hi) {
            return bad(format!(
                "tongue marker span {lo}..{hi} is not inside the unit box"
            ));
        }
        for (id, radical) in &self.radicals {
            for stroke in &radical.strokes {
                if stroke.len() < 2 {
                    return bad(format!("{id}: stroke with fewer than two points"));
                }
                if stroke.iter().flatten().any(|v| !in_unit(*v)) {
                    return bad(format!("{id}: stroke leaves the unit box"));
                }
            }
            if let Some(x) = radical.tongue_marker_x {
                if !in_unit(x) {
                    return bad(format!("{id}: tongue marker outside the unit box"));
                }
            }
        }
        let mut previous: Option<(Place, f64)> = None;
        for place in Place::ALL {
            let Some(radical) = self.radicals.get(&place_radical_id(place)) else {
                continue;
            };
            match (place.index() < 2, radical.tongue_marker_x) {
                (true, Some(_)) => {
                    return bad(format!(
                        "{}: labial radicals take no tongue marker",
                        place.name()
                    ))
                }
                (false, None) => return bad(format!("{}: missing tongue_marker_x", place.name())),
                (false, Some(x)) => {
                    if let Some((p, px)) = previous {
                        if x <= px {
                            return bad(format!(
                                "tongue marker of {} ({x}) is not right of {} ({px})",
                                place.name(),
                                p.name()
                            ));
                        }
                    }
                    previous = Some((place, x));
                }
                (true, None) => {}
            }
        }
        self.trapezoid.validate()
    }
}

impl Default for Geometry {
    fn default() -> Self {
        Self::builtin()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl Rect {
    pub fn map(&self, p: Point) -> Point {
        [self.x + p[0] * self.w, self.y + p[1] * self.h]
    }

    pub fn center(&self) -> Point {
        [self.x + self.w / 2.0, self.y + self.h / 2.0]
    }
}

/// Placement of the parts of one glyph cell, in glyph-local coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlyphLayout {
    pub advance: f64,
    pub height: f64,
    pub top_box: Rect,
    pub bottom_box: Rect,
    /// Square that holds a vowel's breakout figure.
    pub vowel_box: Rect,
    /// Height of the free bands above and below the radicals.
    pub band: f64,
    pub diacritic_above: Point,
    pub diacritic_below: Point,
    pub diacritic_right: Point,
}

impl GlyphLayout {
    pub fn new(size: f64) -> Self {
        let pad = 0.1 * size;
        // bands above and below hold diacritics and tie arcs
        let band = 0.3 * size;
        let side = 0.8 * size;
        let top_box = Rect {
            x: pad,
            y: band,
            w: side,
            h: side,
        };
        let bottom_box = Rect {
            y: band + side + pad,
            ..top_box
        };
        let height = 2.0 * band + 2.0 * side + pad;
        GlyphLayout {
            advance: size,
            height,
            top_box,
            bottom_box,
            vowel_box: Rect {
                x: pad,
                y: (height - side) / 2.0,
                w: side,
                h: side,
            },
            band,
            diacritic_above: [size / 2.0, band * 0.8],
            diacritic_below: [size / 2.0, height - band * 0.2],
            diacritic_right: [size - pad * 0.5, band + side * 0.2],
        }
    }

    pub fn voicing_bar(&self) -> (Point, Point) {
        let y = self.bottom_box.center()[1];
        (
            [self.bottom_box.x, y],
            [self.bottom_box.x + self.bottom_box.w, y],
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Advance width of one glyph, in SVG user units.
    pub size: f64,
    pub stroke_width: f64,
    /// Overrides the trapezoid tilt from the geometry file.
    pub tilt_degrees: Option<f64>,
    pub breakout_radius: Option<f64>,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            size: 100.0,
            stroke_width: 4.0,
            tilt_degrees: None,
            breakout_radius: None,
        }
    }
}

/// Fixed three-decimal output with trailing zeros trimmed.
fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '&' => out.push_str("&amp;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn push_stroke(out: &mut String, class: Option<&str>, points: &[Point]) {
    let class = class.map(|c| format!(" class=\"{c}\"")).unwrap_or_default();
    if let [a, b] = points {
        let _ = writeln!(
            out,
            "<line{class} x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            num(a[0]),
            num(a[1]),
            num(b[0]),
            num(b[1])
        );
    } else {
        let pts: Vec<String> = points
            .iter()
            .map(|p| format!("{},{}", num(p[0]), num(p[1])))
            .collect();
        let _ = writeln!(out, "<polyline{class} points=\"{}\"/>", pts.join(" "));
    }
}

fn open_svg(out: &mut String, width: f64, height: f64, stroke_width: f64) {
    let _ = writeln!(
        out,
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(
        out,
        "<g fill=\"none\" stroke=\"black\" stroke-width=\"{}\" stroke-linecap=\"round\" stroke-linejoin=\"round\">",
        num(stroke_width)
    );
}

fn close_svg(out: &mut String) {
    out.push_str("</g>\n</svg>\n");
}

fn is_below_mark(c: char) -> bool {
    matches!(c as u32, 0x0316..=0x0333 | 0x0339..=0x033C)
}

/// SVG renderer bound to one geometry and style.
#[derive(Debug, Clone)]
pub struct Renderer {
    geometry: Geometry,
    style: RenderStyle,
    trapezoid: TrapezoidSpec,
    layout: GlyphLayout,
}

impl Renderer {
    pub fn new(geometry: Geometry, style: RenderStyle) -> Result<Self, RenderError> {
        if !(style.size.is_finite() && style.size > 0.0) {
            return Err(RenderError::InvalidGeometry(format!(
                "glyph size must be positive, got {}",
                style.size
            )));
        }
        let mut trapezoid = geometry.trapezoid.clone();
        if let Some(t) = style.tilt_degrees {
            trapezoid.tilt_degrees = t;
        }
        if let Some(r) = style.breakout_radius {
            trapezoid.breakout_radius = r;
        }
        trapezoid.validate()?;
        let layout = GlyphLayout::new(style.size);
        Ok(Renderer {
            geometry,
            style,
            trapezoid,
            layout,
        })
    }

    pub fn layout(&self) -> &GlyphLayout {
        &self.layout
    }

    pub fn trapezoid(&self) -> &TrapezoidSpec {
        &self.trapezoid
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    fn radical_group(
        &self,
        out: &mut String,
        class: &str,
        id: &str,
        bx: &Rect,
        extra: impl FnOnce(&mut String),
    ) -> Result<(), RenderError> {
        let radical = self.geometry.radical(id)?;
        let _ = writeln!(out, "<g class=\"radical {class}\" data-radical=\"{id}\">");
        for stroke in &radical.strokes {
            let pts: Vec<Point> = stroke.iter().map(|p| bx.map(*p)).collect();
            push_stroke(out, None, &pts);
        }
        if let (Some(x), true) = (radical.tongue_marker_x, radical.draw_tongue_marker) {
            let [lo, hi] = self.geometry.tongue_marker_span;
            push_stroke(
                out,
                Some("tongue-marker"),
                &[bx.map([x, lo]), bx.map([x, hi])],
            );
        }
        extra(out);
        out.push_str("</g>\n");
        Ok(())
    }

    fn consonant_body(
        &self,
        out: &mut String,
        f: &ConsonantFeatures,
        bar: bool,
    ) -> Result<(), RenderError> {
        let l = self.layout;
        let _ = writeln!(
            out,
            "<g class=\"consonant\" data-name=\"{}\">",
            crate::grapheme_engine::canonical_name(f)
        );
        self.radical_group(
            out,
            "manner",
            &manner_radical_id(f.manner),
            &l.top_box,
            |_| {},
        )?;
        self.radical_group(
            out,
            "place",
            &place_radical_id(f.place),
            &l.bottom_box,
            |out| {
                if bar {
                    let (a, b) = l.voicing_bar();
                    push_stroke(out, Some("voicing-bar"), &[a, b]);
                }
            },
        )?;
        out.push_str("</g>\n");
        Ok(())
    }

    /// Breakout outline pieces, tick, and anchor dot of a vowel glyph.
    fn vowel_body(&self, out: &mut String, v: &VowelGrapheme) -> Result<(), RenderError> {
        let features = v.features()?;
        let t = &self.trapezoid;
        let anchor = t.anchor_point(features.height(), features.backness());
        let r = t.breakout_radius;
        let bx = self.layout.vowel_box;
        let [cx, cy] = bx.center();
        let to_box = |p: Point| {
            [
                cx + (p[0] - anchor[0]) / r * (bx.w / 2.0),
                cy + (p[1] - anchor[1]) / r * (bx.h / 2.0),
            ]
        };
        let min = [anchor[0] - r, anchor[1] - r];
        let max = [anchor[0] + r, anchor[1] + r];
        let _ = writeln!(out, "<g class=\"vowel\" data-name=\"{}\">", v.name());
        out.push_str("<g class=\"breakout\">\n");
        let outline = t.outline();
        for i in 0..4 {
            if let Some((a, b)) = clip_segment(outline[i], outline[(i + 1) % 4], min, max) {
                push_stroke(out, None, &[to_box(a), to_box(b)]);
            }
        }
        let _ = writeln!(
            out,
            "<circle class=\"anchor\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>",
            num(cx),
            num(cy),
            num(bx.w * 0.05)
        );
        out.push_str("</g>\n");
        let (near, far) = (bx.w * 0.1, bx.w * 0.45);
        let (x1, x2) = match v.rounding_side {
            Side::Left => (cx - far, cx - near),
            Side::Right => (cx + near, cx + far),
        };
        push_stroke(out, Some("rounding-tick"), &[[x1, cy], [x2, cy]]);
        out.push_str("</g>\n");
        Ok(())
    }

    /// Unknown scalars get a dashed red frame; whitespace and prosodic marks do not.
    fn passthrough_body(&self, out: &mut String, c: char) {
        let l = self.layout;
        let _ = writeln!(
            out,
            "<g class=\"passthrough\" data-scalar=\"U+{:04X}\">",
            c as u32
        );
        if !is_transparent(c) {
            let _ = writeln!(
                out,
                "<rect class=\"passthrough-flag\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" stroke-dasharray=\"4 4\" stroke=\"red\"/>",
                num(l.top_box.x),
                num(l.top_box.y),
                num(l.top_box.w),
                num(l.bottom_box.y + l.bottom_box.h - l.top_box.y)
            );
        }
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" fill=\"red\" stroke=\"none\">{}</text>\n</g>",
            num(l.advance / 2.0),
            num(l.height / 2.0 + l.advance * 0.2),
            num(l.advance * 0.6),
            escape(&c.to_string())
        );
    }

    fn diacritics(&self, out: &mut String, diacritics: &[Diacritic]) {
        let l = self.layout;
        let (mut above, mut below, mut right) = (0.0, 0.0, 0.0);
        for d in diacritics {
            let combining = unicode_normalization::char::is_combining_mark(d.scalar);
            let (anchor, stack, text) = if !combining {
                (&l.diacritic_right, &mut right, d.scalar.to_string())
            } else if is_below_mark(d.scalar) {
                (
                    &l.diacritic_below,
                    &mut below,
                    format!("\u{25CC}{}", d.scalar),
                )
            } else {
                (
                    &l.diacritic_above,
                    &mut above,
                    format!("\u{25CC}{}", d.scalar),
                )
            };
            let _ = writeln!(
                out,
                "<text class=\"diacritic\" data-name=\"{}\" x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" fill=\"black\" stroke=\"none\">{}</text>",
                escape(&d.name),
                num(anchor[0] + *stack),
                num(anchor[1]),
                num(l.advance * 0.25),
                escape(&text)
            );
            *stack += l.advance * 0.15;
        }
    }

    fn unit_body(&self, out: &mut String, unit: &GraphemeUnit) -> Result<(), RenderError> {
        match &unit.kind {
            GraphemeKind::Consonant(g) => {
                let f = crate::grapheme_engine::decompose(g)?;
                self.consonant_body(out, &f, g.voicing_bar)?;
            }
            GraphemeKind::Vowel(v) => self.vowel_body(out, v)?,
            GraphemeKind::Passthrough(c) => self.passthrough_body(out, *c),
        }
        self.diacritics(out, &unit.diacritics);
        Ok(())
    }

    /// One glyph as a standalone SVG document.
    pub fn render_grapheme(&self, unit: &GraphemeUnit) -> Result<String, RenderError> {
        let mut out = String::new();
        open_svg(
            &mut out,
            self.layout.advance,
            self.layout.height,
            self.style.stroke_width,
        );
        self.unit_body(&mut out, unit)?;
        close_svg(&mut out);
        Ok(out)
    }

    pub fn render_vowel(&self, v: &VowelGrapheme) -> Result<String, RenderError> {
        self.render_grapheme(&GraphemeUnit::bare(GraphemeKind::Vowel(*v)))
    }

    /// Left-to-right run with a fixed advance; tie-linked pairs get an arc above.
    pub fn render_text(&self, units: &[GraphemeUnit]) -> Result<String, RenderError> {
        let l = self.layout;
        let width = l.advance * units.len() as f64;
        let mut out = String::new();
        open_svg(&mut out, width, l.height, self.style.stroke_width);
        for (index, unit) in units.iter().enumerate() {
            let _ = writeln!(
                out,
                "<g class=\"unit\" transform=\"translate({} 0)\">",
                num(l.advance * index as f64)
            );
            self.unit_body(&mut out, unit)
                .map_err(|e| RenderError::AtUnit {
                    index,
                    source: Box::new(e),
                })?;
            out.push_str("</g>\n");
        }
        let mut open: BTreeMap<usize, usize> = BTreeMap::new();
        for (index, unit) in units.iter().enumerate() {
            let Some(tie) = unit.tie else { continue };
            if tie.mark.is_some() {
                open.insert(tie.id, index);
            } else if let Some(first) = open.remove(&tie.id) {
                let x1 = l.advance * (first as f64 + 0.5);
                let x2 = l.advance * (index as f64 + 0.5);
                let y = l.band * 0.5;
                let _ = writeln!(
                    out,
                    "<path class=\"tie\" d=\"M {} {} Q {} {} {} {}\"/>",
                    num(x1),
                    num(y),
                    num((x1 + x2) / 2.0),
                    num(y - l.band * 0.4),
                    num(x2),
                    num(y)
                );
            }
        }
        close_svg(&mut out);
        Ok(out)
    }

    /// The 9 × 13 consonant grid. Official cells hold their graphemes
    /// (voiceless left, voiced right); impossible cells are shaded.
    pub fn render_consonant_chart(&self, table: &IpaTable) -> Result<String, RenderError> {
        let glyph = 24.0;
        let scale = glyph / self.layout.advance;
        let glyph_h = self.layout.height * scale;
        let cell_w = 2.0 * glyph + 8.0;
        let cell_h = glyph_h + 8.0;
        let label_w = 130.0;
        let header_h = 70.0;
        let margin = 10.0;
        let width = margin * 2.0 + label_w + cell_w * Place::COUNT as f64;
        let height = margin * 2.0 + header_h + cell_h * Manner::COUNT as f64;
        let text_attrs = "fill=\"black\" stroke=\"none\" font-family=\"sans-serif\"";

        let mut out = String::new();
        open_svg(&mut out, width, height, self.style.stroke_width);
        let x0 = margin + label_w;
        let y0 = margin + header_h;

        for class in MacroClass::ALL {
            let cols: Vec<usize> = Place::ALL
                .iter()
                .filter(|p| p.macro_class() == class)
                .map(|p| p.index())
                .collect();
            let first = *cols.first().expect("every macro class has a column") as f64;
            let span = cols.len() as f64;
            let _ = writeln!(
                out,
                "<rect class=\"macro-span\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"24\" stroke-width=\"1\"/>",
                num(x0 + first * cell_w),
                num(margin),
                num(span * cell_w)
            );
            let _ = writeln!(
                out,
                "<text class=\"macro-class\" x=\"{}\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\" {text_attrs}>{}</text>",
                num(x0 + (first + span / 2.0) * cell_w),
                num(margin + 17.0),
                class.header()
            );
        }
        for place in Place::ALL {
            let _ = writeln!(
                out,
                "<text class=\"place-label\" x=\"{}\" y=\"{}\" font-size=\"9\" text-anchor=\"middle\" {text_attrs}>{}</text>",
                num(x0 + (place.index() as f64 + 0.5) * cell_w),
                num(margin + 50.0),
                place.label()
            );
        }

        for manner in Manner::ALL {
            let row_y = y0 + manner.index() as f64 * cell_h;
            let _ = writeln!(
                out,
                "<text class=\"manner-label\" x=\"{}\" y=\"{}\" font-size=\"12\" {text_attrs}>{}</text>",
                num(margin),
                num(row_y + cell_h / 2.0 + 4.0),
                manner.label()
            );
            for place in Place::ALL {
                let x = x0 + place.index() as f64 * cell_w;
                let status = Voicing::ALL
                    .map(|v| table.attestation_of(&ConsonantFeatures::new(manner, place, v)));
                let fully_impossible = status.iter().all(|s| *s == AttestationStatus::Impossible);
                let _ = writeln!(
                    out,
                    "<rect class=\"cell{}\" data-manner=\"{}\" data-place=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" stroke-width=\"1\"{}/>",
                    if fully_impossible { " impossible" } else { "" },
                    manner.name(),
                    place.name(),
                    num(x),
                    num(row_y),
                    num(cell_w),
                    num(cell_h),
                    if fully_impossible { " fill=\"#bbbbbb\"" } else { "" }
                );
                for (half, voicing) in Voicing::ALL.into_iter().enumerate() {
                    let hx = x + half as f64 * cell_w / 2.0;
                    let f = ConsonantFeatures::new(manner, place, voicing);
                    match status[half] {
                        AttestationStatus::Impossible if !fully_impossible => {
                            let _ = writeln!(
                                out,
                                "<rect class=\"half-impossible\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" stroke=\"none\" fill=\"#bbbbbb\"/>",
                                num(hx),
                                num(row_y),
                                num(cell_w / 2.0),
                                num(cell_h)
                            );
                        }
                        AttestationStatus::Official => {
                            let g = compose(&f);
                            let symbol = table.consonant_symbol(&f).unwrap_or('?');
                            let _ = writeln!(
                                out,
                                "<g class=\"cell-glyph\" data-ipa=\"{}\" transform=\"translate({} {}) scale({})\">",
                                escape(&symbol.to_string()),
                                num(hx + 4.0),
                                num(row_y + 4.0),
                                num(scale)
                            );
                            self.consonant_body(&mut out, &f, g.voicing_bar)?;
                            out.push_str("</g>\n");
                        }
                        _ => {}
                    }
                }
            }
        }
        close_svg(&mut out);
        Ok(out)
    }

    /// The tilted vowel trapezoid with one marker, label, and glyph per vowel row.
    pub fn render_vowel_chart(&self, table: &IpaTable) -> Result<String, RenderError> {
        let t = &self.trapezoid;
        let scale = 320.0;
        let margin = 70.0;
        let outline = t.outline();
        let (min_x, min_y) = outline
            .iter()
            .fold((f64::MAX, f64::MAX), |(a, b), p| (a.min(p[0]), b.min(p[1])));
        let (max_x, max_y) = outline
            .iter()
            .fold((f64::MIN, f64::MIN), |(a, b), p| (a.max(p[0]), b.max(p[1])));
        let to_chart = |p: Point| {
            [
                margin + (p[0] - min_x) * scale,
                margin + (p[1] - min_y) * scale,
            ]
        };
        let width = 2.0 * margin + (max_x - min_x) * scale;
        let height = 2.0 * margin + (max_y - min_y) * scale;
        let text_attrs = "fill=\"black\" stroke=\"none\" font-family=\"sans-serif\"";

        let mut out = String::new();
        open_svg(&mut out, width, height, self.style.stroke_width * 0.5);
        let pts: Vec<String> = outline
            .iter()
            .map(|p| {
                let q = to_chart(*p);
                format!("{},{}", num(q[0]), num(q[1]))
            })
            .collect();
        let _ = writeln!(
            out,
            "<polygon class=\"trapezoid\" data-tilt=\"{}\" points=\"{}\"/>",
            num(t.tilt_degrees),
            pts.join(" ")
        );

        let glyph = 22.0;
        let glyph_scale = glyph / self.layout.advance;
        let offset = 14.0;
        for entry in table.vowels() {
            let v = entry.features;
            let g = crate::grapheme_engine::compose_vowel(&v)?;
            let [ax, ay] = to_chart(t.anchor_point(v.height(), v.backness()));
            let dir = if v.rounded { 1.0 } else { -1.0 };
            let mx = ax + dir * offset;
            let _ = writeln!(
                out,
                "<circle class=\"vowel-anchor\" data-symbol=\"{}\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"black\"/>",
                escape(&entry.scalar.to_string()),
                num(mx),
                num(ay)
            );
            let _ = writeln!(
                out,
                "<text class=\"vowel-label\" x=\"{}\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\" {text_attrs}>{}</text>",
                num(mx),
                num(ay - 8.0),
                escape(&entry.scalar.to_string())
            );
            let gx = if v.rounded {
                mx + 4.0
            } else {
                mx - 4.0 - glyph
            };
            let _ = writeln!(
                out,
                "<g class=\"vowel-glyph\" transform=\"translate({} {}) scale({})\">",
                num(gx),
                num(ay + 4.0),
                num(glyph_scale)
            );
            self.vowel_body(&mut out, &g)?;
            out.push_str("</g>\n");
        }
        close_svg(&mut out);
        Ok(out)
    }
}

impl Default for Renderer {
    fn default() -> Self {
        Renderer::new(Geometry::builtin(), RenderStyle::default()).expect("default style is valid")
    }
}
