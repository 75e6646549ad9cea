//! `hangulphabet` command-line tool.
//!
//! Exit codes: 0 success, 1 output I/O failure, 2 input error, 3 data or geometry error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hangulphabet::glyph_renderer::{Geometry, RenderError, RenderStyle, Renderer};
use hangulphabet::ipa_codec::{is_transparent, IpaTable, Mode};
use hangulphabet::transliterate::{format_codes, TranslitError, Transliterator};
use hangulphabet::GraphemeKind;

#[derive(Parser, Debug)]
#[command(
    name = "hangulphabet",
    version,
    about = "Transliterate between IPA and the Hangulphabet"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (encode: names, codes, text, svg, tsv; decode: text, codes)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Fail on the first unknown symbol
    #[arg(long, global = true, conflicts_with = "lenient")]
    strict: bool,

    /// Pass unknown symbols through with a warning (default)
    #[arg(long, global = true)]
    lenient: bool,

    /// Directory holding consonants.tsv, vowels.tsv, impossible.tsv, diacritics.tsv
    #[arg(long, global = true, value_name = "DIR")]
    data_dir: Option<PathBuf>,

    /// Radical geometry JSON file
    #[arg(long, global = true, value_name = "FILE")]
    geometry: Option<PathBuf>,

    /// Vowel trapezoid tilt in degrees (non-zero)
    #[arg(long, global = true, allow_negative_numbers = true)]
    tilt: Option<f64>,

    /// Write output here instead of standard output
    #[arg(long, short, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// IPA text to Hangulphabet
    Encode {
        /// IPA text; read from standard input when absent
        text: Option<String>,
    },
    /// PUA text or U+XXXX codes back to IPA
    Decode {
        /// Codes or raw text; read from standard input when absent
        input: Option<String>,
    },
    /// Describe one IPA symbol or canonical name such as PLO.BLB.VLS
    Inspect { symbol: String },
    /// Render a chart as SVG
    Chart {
        #[arg(value_enum)]
        which: Chart,
    },
    /// IPA ↔ PUA mapping table for font tooling
    Fontmap,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Codes,
    Names,
    Svg,
    Tsv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Chart {
    Consonants,
    Vowels,
}

enum Failure {
    Input(String),
    Data(String),
    Output(io::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Output(_) => 1,
            Failure::Input(_) => 2,
            Failure::Data(_) => 3,
        }
    }
}

impl From<TranslitError> for Failure {
    fn from(e: TranslitError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<RenderError> for Failure {
    fn from(e: RenderError) -> Self {
        if e.is_geometry_error() {
            Failure::Data(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

struct Context {
    cli: Cli,
    engine: Transliterator,
}

impl Context {
    fn mode(&self) -> Mode {
        if self.cli.strict {
            Mode::Strict
        } else {
            Mode::Lenient
        }
    }

    fn renderer(&self) -> Result<Renderer, Failure> {
        let geometry = match &self.cli.geometry {
            Some(path) => Geometry::from_path(path).map_err(|e| Failure::Data(e.to_string()))?,
            None => Geometry::builtin(),
        };
        let style = RenderStyle {
            tilt_degrees: self.cli.tilt,
            ..RenderStyle::default()
        };
        Renderer::new(geometry, style).map_err(|e| Failure::Data(e.to_string()))
    }
}

fn read_input(arg: Option<&str>) -> Result<String, Failure> {
    match arg {
        Some(text) => Ok(text.to_string()),
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
            if buf.ends_with('\n') {
                buf.pop();
                if buf.ends_with('\r') {
                    buf.pop();
                }
            }
            Ok(buf)
        }
    }
}

fn encode(ctx: &Context, text: Option<&str>) -> Result<String, Failure> {
    let text = read_input(text)?;
    let engine = &ctx.engine;
    let units = engine.graphemes(&text, ctx.mode())?;
    for unit in &units {
        if let GraphemeKind::Passthrough(c) = unit.kind {
            if !is_transparent(c) {
                eprintln!(
                    "warning: passing through unknown symbol U+{:04X} {c:?}",
                    c as u32
                );
            }
        }
    }
    let format = ctx.cli.format.unwrap_or(Format::Names);
    let mut out = String::new();
    match format {
        Format::Names => {
            let names: Vec<String> = units
                .iter()
                .map(|u| {
                    let mut name = u.name();
                    for d in &u.diacritics {
                        name.push('+');
                        name.push_str(&d.name.replace(' ', "-"));
                    }
                    if u.tie.is_some_and(|t| t.mark.is_some()) {
                        name.push_str("+tie");
                    }
                    name
                })
                .collect();
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        Format::Codes => {
            let mut scalars = Vec::new();
            for u in &units {
                scalars.extend(engine.unit_scalars(u)?);
            }
            out.push_str(&format_codes(scalars));
            out.push('\n');
        }
        Format::Text => {
            for u in &units {
                out.extend(engine.unit_scalars(u)?);
            }
            out.push('\n');
        }
        Format::Tsv => {
            let segments = engine
                .table()
                .tokenize(&text)
                .map_err(TranslitError::from)?;
            for (segment, unit) in segments.iter().zip(&units) {
                out.push_str(&format!(
                    "{}\t{}\t{}\n",
                    segment.source,
                    format_codes(engine.unit_scalars(unit)?),
                    unit.name()
                ));
            }
        }
        Format::Svg => out = ctx.renderer()?.render_text(&units)?,
    }
    Ok(out)
}

fn decode(ctx: &Context, input: Option<&str>) -> Result<String, Failure> {
    let input = read_input(input)?;
    let decoded = ctx.engine.decode_input(&input)?;
    for name in &decoded.unresolved {
        eprintln!("warning: no IPA symbol for {name}");
    }
    match ctx.cli.format.unwrap_or(Format::Text) {
        Format::Text => Ok(decoded.text + "\n"),
        Format::Codes => Ok(format_codes(decoded.text.chars()) + "\n"),
        other => Err(Failure::Input(format!(
            "decode does not support --format {}",
            other
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
        ))),
    }
}

fn run(ctx: &Context) -> Result<String, Failure> {
    match &ctx.cli.command {
        Command::Encode { text } => encode(ctx, text.as_deref()),
        Command::Decode { input } => decode(ctx, input.as_deref()),
        Command::Inspect { symbol } => Ok(ctx.engine.inspect(symbol)?.to_string() + "\n"),
        Command::Chart { which } => {
            let renderer = ctx.renderer()?;
            let table = ctx.engine.table();
            Ok(match which {
                Chart::Consonants => renderer.render_consonant_chart(table)?,
                Chart::Vowels => renderer.render_vowel_chart(table)?,
            })
        }
        Command::Fontmap => Ok(ctx
            .engine
            .font_map()
            .iter()
            .map(|row| format!("{row}\n"))
            .collect()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let table = match &cli.data_dir {
        Some(dir) => IpaTable::from_dir(dir),
        None => Ok(IpaTable::builtin()),
    };
    let result = table
        .map_err(|e| Failure::Data(e.to_string()))
        .and_then(|table| {
            let ctx = Context {
                engine: Transliterator::new(table),
                cli,
            };
            let out = run(&ctx)?;
            match &ctx.cli.output {
                Some(path) => fs::write(path, out).map_err(Failure::Output),
                None => {
                    let mut stdout = io::stdout().lock();
                    stdout
                        .write_all(out.as_bytes())
                        .and_then(|_| stdout.flush())
                        .map_err(Failure::Output)
                }
            }
        });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Input(m) | Failure::Data(m) => eprintln!("error: {m}"),
                Failure::Output(e) => eprintln!("error: cannot write output: {e}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
