//! `%%BoundingBox` discovery in EPS headers.
//!
//! The scanner reads physical lines from the top of the file. Comment
//! lines (first non-blank character `%`) and blank lines are examined; the
//! first line of any other kind ends the scan. A `%%BoundingBox:` line
//! whose four coordinates parse ends it with a result. Anything else falls
//! back to the letter-size default box `72 72 540 720`.

mod tex;

use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use crate::dimen::{parse_decimal, parse_decimal_strict, DimenError, FixedFactor};

/// Default box used when a header declares none: US letter with one-inch
/// margins, in big points.
pub const DEFAULT_BBOX: [&str; 4] = ["72", "72", "540", "720"];

/// Magic number of a DOS binary EPS (preview) header.
const DOS_EPS_MAGIC: [u8; 4] = [0xC5, 0xD0, 0xD3, 0xC6];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("bad bounding box coordinate: {0}")]
    Coordinate(#[from] DimenError),
    #[error("malformed literal bounding box `{0}`: expected `[llx lly urx ury]file`")]
    Literal(String),
}

/// Where a bounding box came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BBoxSource {
    Header,
    LiteralOverride,
    Default,
}

impl BBoxSource {
    pub fn label(self) -> &'static str {
        match self {
            BBoxSource::Header => "header",
            BBoxSource::LiteralOverride => "literal",
            BBoxSource::Default => "defaults",
        }
    }
}

impl fmt::Display for BBoxSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One coordinate: the token exactly as written plus its scanned value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coord {
    text: String,
    value: FixedFactor,
}

impl Coord {
    pub fn parse(text: &str, strict: bool) -> Result<Coord, DimenError> {
        let value = if strict {
            parse_decimal_strict(text)?
        } else {
            parse_decimal(text)?
        };
        Ok(Coord {
            text: text.to_string(),
            value,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn value(&self) -> FixedFactor {
        self.value
    }
}

/// A parsed bounding box. Coordinate tokens are kept verbatim for the
/// special; arithmetic uses the scanned values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BBox {
    pub llx: Coord,
    pub lly: Coord,
    pub urx: Coord,
    pub ury: Coord,
    pub source: BBoxSource,
}

impl BBox {
    pub fn from_tokens<S: AsRef<str>>(
        tokens: &[S; 4],
        source: BBoxSource,
        strict: bool,
    ) -> Result<BBox, DimenError> {
        Ok(BBox {
            llx: Coord::parse(tokens[0].as_ref(), strict)?,
            lly: Coord::parse(tokens[1].as_ref(), strict)?,
            urx: Coord::parse(tokens[2].as_ref(), strict)?,
            ury: Coord::parse(tokens[3].as_ref(), strict)?,
            source,
        })
    }

    pub fn default_box() -> BBox {
        BBox::from_tokens(&DEFAULT_BBOX, BBoxSource::Default, true).expect("default box parses")
    }

    pub fn texts(&self) -> [&str; 4] {
        [
            self.llx.text(),
            self.lly.text(),
            self.urx.text(),
            self.ury.text(),
        ]
    }
}

/// Four coordinate tokens exactly as the macro would store them, which in
/// compatibility mode may be non-numeric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawBBox {
    pub tokens: [String; 4],
    pub source: BBoxSource,
}

impl RawBBox {
    fn default_box() -> RawBBox {
        RawBBox {
            tokens: DEFAULT_BBOX.map(String::from),
            source: BBoxSource::Default,
        }
    }

    /// Scans each token as the factor in `<token>\pspoints`. A token made
    /// of signs only (or nothing) leaves the dimension itself, i.e. ±1.
    pub fn resolve(&self) -> Result<BBox, DimenError> {
        let coord = |text: &str| -> Result<Coord, DimenError> {
            let unsigned = text.trim_start_matches(['+', '-']);
            let value = if unsigned.is_empty() {
                FixedFactor {
                    negative: text.bytes().filter(|&b| b == b'-').count() % 2 == 1,
                    ..FixedFactor::ONE
                }
            } else {
                parse_decimal(text)?
            };
            Ok(Coord {
                text: text.to_string(),
                value,
            })
        };
        Ok(BBox {
            llx: coord(&self.tokens[0])?,
            lly: coord(&self.tokens[1])?,
            urx: coord(&self.tokens[2])?,
            ury: coord(&self.tokens[3])?,
            source: self.source,
        })
    }

    pub fn texts(&self) -> [&str; 4] {
        [
            &self.tokens[0],
            &self.tokens[1],
            &self.tokens[2],
            &self.tokens[3],
        ]
    }
}

/// A header line after TeX-style input processing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Line {
    /// An empty or all-blank line (TeX's `\par`).
    Blank,
    /// Leading blanks skipped, trailing blanks dropped, inner runs of
    /// blanks collapsed to a single space.
    Text(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    Comment,
    Blank,
    Other,
}

/// Applies TeX's reading rules to one physical line. Spaces and tabs are
/// both blanks. Bytes that are not UTF-8 are replaced.
pub fn normalize_line(raw: &[u8]) -> Line {
    let text = String::from_utf8_lossy(raw);
    let mut out = String::with_capacity(text.len());
    for word in text.split([' ', '\t']).filter(|w| !w.is_empty()) {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    if out.is_empty() {
        Line::Blank
    } else {
        Line::Text(out)
    }
}

pub fn classify_line(line: &Line) -> LineKind {
    match line {
        Line::Blank => LineKind::Blank,
        Line::Text(t) if t.starts_with('%') => LineKind::Comment,
        Line::Text(_) => LineKind::Other,
    }
}

/// Returns the text after the first colon if the line is a
/// `%%BoundingBox:` comment. The keyword must run right up to the colon.
pub fn match_bbox(line: &Line) -> Option<&str> {
    let Line::Text(text) = line else {
        return None;
    };
    let (head, rest) = text.split_once(':')?;
    (head == "%%BoundingBox").then_some(rest)
}

/// Why a `%%BoundingBox:` line could not supply coordinates.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrabFailure {
    #[error("expected four coordinates, found {0}")]
    TooFewTokens(usize),
    #[error(transparent)]
    NotNumeric(#[from] DimenError),
}

/// Takes the first four blank-separated tokens of `rest` as the box.
/// Leading blanks are skipped and trailing tokens ignored.
pub fn grab(rest: &str, strict: bool) -> Result<BBox, GrabFailure> {
    let tokens: Vec<&str> = rest.split([' ', '\t']).filter(|t| !t.is_empty()).collect();
    let four: [&str; 4] = tokens
        .get(..4)
        .and_then(|t| t.try_into().ok())
        .ok_or(GrabFailure::TooFewTokens(tokens.len()))?;
    Ok(BBox::from_tokens(&four, BBoxSource::Header, strict)?)
}

/// Final state of a header scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanResult<B = BBox> {
    Found(B),
    DefaultsUsed { bbox: B, warning: String },
    Unreadable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutcome<B = BBox> {
    pub result: ScanResult<B>,
    /// Physical lines consumed, including the one that ended the scan.
    pub lines_scanned: usize,
}

impl<B> ScanOutcome<B> {
    /// The box to use, if the file could be read.
    pub fn bbox(&self) -> Option<&B> {
        match &self.result {
            ScanResult::Found(b) | ScanResult::DefaultsUsed { bbox: b, .. } => Some(b),
            ScanResult::Unreadable(_) => None,
        }
    }

    /// Message to show the user. The missing-box warning is only printed
    /// in verbose mode; an unreadable file is always reported.
    pub fn diagnostic(&self, verbose: bool) -> Option<&str> {
        match &self.result {
            ScanResult::Found(_) => None,
            ScanResult::DefaultsUsed { warning, .. } => verbose.then_some(warning.as_str()),
            ScanResult::Unreadable(msg) => Some(msg),
        }
    }
}

pub fn defaults_warning(name: &str) -> String {
    format!("No bounding box comment in {name}; using defaults")
}

pub fn unreadable_message(name: &str) -> String {
    format!("I couldn't open {name}, will ignore it")
}

pub fn binary_eps_message(name: &str) -> String {
    format!("{name} has a binary (DOS EPS) header; extract the PostScript section first")
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Restrict coordinates to plain decimals and reject binary EPS files.
    pub strict: bool,
}

/// A source of physical lines, without terminators.
pub trait LineSource {
    fn next_line(&mut self) -> io::Result<Option<Vec<u8>>>;
}

/// Splits a byte stream on LF, CR or CRLF.
pub struct ReaderLines<R> {
    reader: R,
}

impl<R: BufRead> ReaderLines<R> {
    pub fn new(reader: R) -> Self {
        ReaderLines { reader }
    }
}

impl<R: BufRead> LineSource for ReaderLines<R> {
    fn next_line(&mut self) -> io::Result<Option<Vec<u8>>> {
        let mut line = Vec::new();
        let mut saw_any = false;
        loop {
            let buf = self.reader.fill_buf()?;
            if buf.is_empty() {
                return Ok(saw_any.then_some(line));
            }
            saw_any = true;
            match buf.iter().position(|&b| b == b'\n' || b == b'\r') {
                Some(i) => {
                    let cr = buf[i] == b'\r';
                    line.extend_from_slice(&buf[..i]);
                    self.reader.consume(i + 1);
                    if cr {
                        let next = self.reader.fill_buf()?;
                        if next.first() == Some(&b'\n') {
                            self.reader.consume(1);
                        }
                    }
                    return Ok(Some(line));
                }
                None => {
                    let n = buf.len();
                    line.extend_from_slice(buf);
                    self.reader.consume(n);
                }
            }
        }
    }
}

/// In-memory lines.
pub struct IterLines<I>(pub I);

impl<I, S> LineSource for IterLines<I>
where
    I: Iterator<Item = S>,
    S: AsRef<[u8]>,
{
    fn next_line(&mut self) -> io::Result<Option<Vec<u8>>> {
        Ok(self.0.next().map(|s| s.as_ref().to_vec()))
    }
}

/// Scans the header of `lines` for a usable `%%BoundingBox`.
///
/// A bounding-box line whose coordinates cannot be grabbed does not end
/// the scan, so a later well-formed line in the same comment block still
/// counts. `name` is used in diagnostics.
pub fn scan_file<L: LineSource>(lines: &mut L, name: &str, opts: ScanOptions) -> ScanOutcome {
    let mut lines_scanned = 0;
    loop {
        let raw = match lines.next_line() {
            Ok(Some(raw)) => raw,
            Ok(None) => break,
            Err(_) => {
                return ScanOutcome {
                    result: ScanResult::Unreadable(unreadable_message(name)),
                    lines_scanned,
                }
            }
        };
        lines_scanned += 1;
        let line = normalize_line(&raw);
        match classify_line(&line) {
            LineKind::Blank => continue,
            LineKind::Other => break,
            LineKind::Comment => {
                if let Some(rest) = match_bbox(&line) {
                    if let Ok(bbox) = grab(rest, opts.strict) {
                        return ScanOutcome {
                            result: ScanResult::Found(bbox),
                            lines_scanned,
                        };
                    }
                }
            }
        }
    }
    ScanOutcome {
        result: ScanResult::DefaultsUsed {
            bbox: BBox::default_box(),
            warning: defaults_warning(name),
        },
        lines_scanned,
    }
}

/// Macro-exact scan: the first `%%BoundingBox:` line in the header ends
/// the scan and its tokens are stored whatever they are.
pub fn scan_file_raw<L: LineSource>(lines: &mut L, name: &str) -> ScanOutcome<RawBBox> {
    let mut lines_scanned = 0;
    loop {
        let raw = match lines.next_line() {
            Ok(Some(raw)) => raw,
            Ok(None) => break,
            Err(_) => {
                return ScanOutcome {
                    result: ScanResult::Unreadable(unreadable_message(name)),
                    lines_scanned,
                }
            }
        };
        lines_scanned += 1;
        match tex::aux(&normalize_line(&raw)) {
            tex::AuxResult::Blank | tex::AuxResult::Comment => continue,
            tex::AuxResult::Other => break,
            tex::AuxResult::BoundingBox(tokens) => {
                return ScanOutcome {
                    result: ScanResult::Found(RawBBox {
                        tokens,
                        source: BBoxSource::Header,
                    }),
                    lines_scanned,
                }
            }
        }
    }
    ScanOutcome {
        result: ScanResult::DefaultsUsed {
            bbox: RawBBox::default_box(),
            warning: defaults_warning(name),
        },
        lines_scanned,
    }
}

enum Opened {
    Lines(ReaderLines<BufReader<File>>),
    Failed(String),
}

fn open(path: &Path, name: &str, opts: ScanOptions) -> Opened {
    let Ok(file) = File::open(path) else {
        return Opened::Failed(unreadable_message(name));
    };
    let mut reader = BufReader::new(file);
    if opts.strict {
        match reader.fill_buf() {
            Ok(head) if head.starts_with(&DOS_EPS_MAGIC) => {
                return Opened::Failed(binary_eps_message(name))
            }
            Ok(_) => {}
            Err(_) => return Opened::Failed(unreadable_message(name)),
        }
    }
    Opened::Lines(ReaderLines::new(reader))
}

fn unreadable<B>(msg: String) -> ScanOutcome<B> {
    ScanOutcome {
        result: ScanResult::Unreadable(msg),
        lines_scanned: 0,
    }
}

/// Opens `path` and scans it; `name` is how the file is named in messages.
pub fn scan_path(path: impl AsRef<Path>, name: &str, opts: ScanOptions) -> ScanOutcome {
    match open(path.as_ref(), name, opts) {
        Opened::Lines(mut lines) => scan_file(&mut lines, name, opts),
        Opened::Failed(msg) => unreadable(msg),
    }
}

pub fn scan_path_raw(
    path: impl AsRef<Path>,
    name: &str,
    opts: ScanOptions,
) -> ScanOutcome<RawBBox> {
    match open(path.as_ref(), name, opts) {
        Opened::Lines(mut lines) => scan_file_raw(&mut lines, name),
        Opened::Failed(msg) => unreadable(msg),
    }
}

/// Scans any reader, e.g. standard input.
pub fn scan_reader<R: Read>(reader: R, name: &str, opts: ScanOptions) -> ScanOutcome {
    scan_file(&mut ReaderLines::new(BufReader::new(reader)), name, opts)
}

/// Splits `[llx lly urx ury]file` (or `[…]{file}`) into its parts.
/// Returns `Ok(None)` when `spec` does not start with `[`.
fn split_literal(spec: &str) -> Result<Option<(&str, &str)>, ParseError> {
    let Some(body) = spec.strip_prefix('[') else {
        return Ok(None);
    };
    let (inner, file) = body
        .split_once(']')
        .ok_or_else(|| ParseError::Literal(spec.to_string()))?;
    let file = file
        .strip_prefix('{')
        .and_then(|f| f.strip_suffix('}'))
        .unwrap_or(file);
    if file.is_empty() {
        return Err(ParseError::Literal(spec.to_string()));
    }
    Ok(Some((inner, file)))
}

/// Parses a literal bounding-box override. The file named is not opened.
pub fn parse_literal(spec: &str, strict: bool) -> Result<Option<(BBox, String)>, ParseError> {
    let Some((inner, file)) = split_literal(spec)? else {
        return Ok(None);
    };
    let tokens: Vec<&str> = inner.split([' ', '\t']).filter(|t| !t.is_empty()).collect();
    let four: [&str; 4] = tokens
        .as_slice()
        .try_into()
        .map_err(|_| ParseError::Literal(spec.to_string()))?;
    let bbox = BBox::from_tokens(&four, BBoxSource::LiteralOverride, strict)?;
    Ok(Some((bbox, file.to_string())))
}

/// Literal override with the macro's own argument matching: extra tokens
/// are dropped rather than rejected.
pub fn parse_literal_raw(spec: &str) -> Result<Option<(RawBBox, String)>, ParseError> {
    let Some((inner, file)) = split_literal(spec)? else {
        return Ok(None);
    };
    let tokens = tex::literal(inner).ok_or_else(|| ParseError::Literal(spec.to_string()))?;
    Ok(Some((
        RawBBox {
            tokens,
            source: BBoxSource::LiteralOverride,
        },
        file.to_string(),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> Line {
        Line::Text(s.into())
    }

    fn scan(lines: &[&str]) -> ScanOutcome {
        scan_file(
            &mut IterLines(lines.iter()),
            "fig.eps",
            ScanOptions::default(),
        )
    }

    fn found_texts(outcome: &ScanOutcome) -> Option<[&str; 4]> {
        match &outcome.result {
            ScanResult::Found(b) => Some(b.texts()),
            _ => None,
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize_line(b"%%BoundingBox:   10  20 110 220"),
            text("%%BoundingBox: 10 20 110 220")
        );
        assert_eq!(normalize_line(b"   "), Line::Blank);
        assert_eq!(normalize_line(b""), Line::Blank);
        assert_eq!(normalize_line(b"\t \t"), Line::Blank);
        assert_eq!(normalize_line(b"%%Title: x "), text("%%Title: x"));
        assert_eq!(normalize_line(b"  \t%%A:\tb"), text("%%A: b"));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_line(&text("%%BoundingBox: 1 2 3 4")),
            LineKind::Comment
        );
        assert_eq!(classify_line(&Line::Blank), LineKind::Blank);
        assert_eq!(classify_line(&text("/Helvetica findfont")), LineKind::Other);
    }

    #[test]
    fn match_examples() {
        assert_eq!(
            match_bbox(&text("%%BoundingBox: 10 20 110 220")),
            Some(" 10 20 110 220")
        );
        assert_eq!(match_bbox(&text("%%BoundingBox : 10 20 110 220")), None);
        assert_eq!(match_bbox(&text("%%Pages: 1")), None);
        assert_eq!(match_bbox(&text("%%BoundingBox")), None);
        assert_eq!(match_bbox(&text("%BoundingBox: 1 2 3 4")), None);
        assert_eq!(match_bbox(&text("%%HiResBoundingBox: 1 2 3 4")), None);
    }

    #[test]
    fn grab_examples() {
        assert_eq!(
            grab(" 10 20 110 220", false).unwrap().texts(),
            ["10", "20", "110", "220"]
        );
        assert_eq!(
            grab("0 0 612 792 extra junk", false).unwrap().texts(),
            ["0", "0", "612", "792"]
        );
        assert_eq!(
            grab("(atend)", false).unwrap_err(),
            GrabFailure::TooFewTokens(1)
        );
        assert!(matches!(
            grab("a b c d", false),
            Err(GrabFailure::NotNumeric(_))
        ));
        assert!(grab("1 2 3 4.", false).is_ok());
        assert!(grab("1 2 3 4.", true).is_err());
    }

    #[test]
    fn scan_examples() {
        let found = scan(&[
            "%!PS-Adobe-2.0",
            "%%BoundingBox: 0 0 100 100",
            "%%EndComments",
        ]);
        assert_eq!(found_texts(&found), Some(["0", "0", "100", "100"]));
        assert_eq!(found.lines_scanned, 2);

        let defaults = scan(&["%!PS", "newpath"]);
        match &defaults.result {
            ScanResult::DefaultsUsed { bbox, warning } => {
                assert_eq!(bbox.texts(), DEFAULT_BBOX);
                assert_eq!(bbox.source, BBoxSource::Default);
                assert_eq!(
                    warning,
                    "No bounding box comment in fig.eps; using defaults"
                );
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(defaults.lines_scanned, 2);

        let late = scan(&["%!PS", "moveto", "%%BoundingBox: 0 0 10 10"]);
        assert!(matches!(late.result, ScanResult::DefaultsUsed { .. }));
        assert_eq!(late.lines_scanned, 2);
    }

    #[test]
    fn scan_continues_past_blank_lines_and_end_comments() {
        let o = scan(&["%!PS", "", "   ", "%%EndComments", "%%BoundingBox: 1 2 3 4"]);
        assert_eq!(found_texts(&o), Some(["1", "2", "3", "4"]));
        assert_eq!(o.lines_scanned, 5);
    }

    #[test]
    fn failed_grab_keeps_scanning() {
        let o = scan(&["%!PS", "%%BoundingBox: (atend)", "%%BoundingBox: 5 6 7 8"]);
        assert_eq!(found_texts(&o), Some(["5", "6", "7", "8"]));
    }

    #[test]
    fn raw_scan_stops_at_first_bbox_line() {
        let lines = ["%!PS", "%%BoundingBox: (atend)", "%%BoundingBox: 5 6 7 8"];
        let o = scan_file_raw(&mut IterLines(lines.iter()), "f");
        match o.result {
            ScanResult::Found(raw) => assert_eq!(raw.texts(), ["(atend)", ":.", "", "."]),
            other => panic!("{other:?}"),
        }
        assert_eq!(o.lines_scanned, 2);
    }

    #[test]
    fn raw_resolve_treats_empty_factor_as_one() {
        let raw = RawBBox {
            tokens: ["-".into(), "".into(), "2.5".into(), "--3".into()],
            source: BBoxSource::Header,
        };
        let b = raw.resolve().unwrap();
        assert_eq!(
            b.llx.value(),
            FixedFactor {
                negative: true,
                ..FixedFactor::ONE
            }
        );
        assert_eq!(b.lly.value(), FixedFactor::ONE);
        assert_eq!(b.urx.value().fraction, 32768);
        assert_eq!(b.ury.value(), FixedFactor::integer(3));
        let bad = RawBBox {
            tokens: ["(atend)".into(), ":.".into(), "".into(), ".".into()],
            source: BBoxSource::Header,
        };
        assert!(bad.resolve().is_err());
    }

    #[test]
    fn line_terminators() {
        let data = b"%!PS\r%%Title: a\r\n\n%%BoundingBox: 1 2 3 4\nshowpage";
        let mut lines = ReaderLines::new(&data[..]);
        let mut got = Vec::new();
        while let Some(l) = lines.next_line().unwrap() {
            got.push(String::from_utf8(l).unwrap());
        }
        assert_eq!(
            got,
            [
                "%!PS",
                "%%Title: a",
                "",
                "%%BoundingBox: 1 2 3 4",
                "showpage"
            ]
        );

        let mut none = ReaderLines::new(&b""[..]);
        assert_eq!(none.next_line().unwrap(), None);
        let mut trailing = ReaderLines::new(&b"a\n"[..]);
        assert_eq!(trailing.next_line().unwrap(), Some(b"a".to_vec()));
        assert_eq!(trailing.next_line().unwrap(), None);
    }

    #[test]
    fn literal_examples() {
        let (bbox, file) = parse_literal("[100 100 300 300]fig.eps", false)
            .unwrap()
            .unwrap();
        assert_eq!(bbox.texts(), ["100", "100", "300", "300"]);
        assert_eq!(bbox.source, BBoxSource::LiteralOverride);
        assert_eq!(file, "fig.eps");
        assert_eq!(parse_literal("fig.eps", false).unwrap(), None);
        assert!(parse_literal("[0 0 10]fig.eps", false).is_err());
        assert!(parse_literal("[0 0 10 10 20]fig.eps", false).is_err());
        assert!(parse_literal("[0 0 10 10 fig.eps", false).is_err());
        assert!(parse_literal("[0 0 10 10]", false).is_err());
        let (_, braced) = parse_literal("[0 0 1 1]{a b.eps}", false).unwrap().unwrap();
        assert_eq!(braced, "a b.eps");
    }

    #[test]
    fn raw_literal_drops_extra_tokens() {
        let (raw, file) = parse_literal_raw("[0 0 10 10 20]fig.eps").unwrap().unwrap();
        assert_eq!(raw.texts(), ["0", "0", "10", "10"]);
        assert_eq!(file, "fig.eps");
        assert!(parse_literal_raw("[0 0 10]fig.eps").is_err());
    }

    #[test]
    fn outcome_diagnostics() {
        let o = scan(&["newpath"]);
        assert_eq!(o.diagnostic(false), None);
        assert_eq!(
            o.diagnostic(true),
            Some("No bounding box comment in fig.eps; using defaults")
        );
        let missing = scan_path("/nonexistent/x.eps", "x.eps", ScanOptions::default());
        assert_eq!(
            missing.diagnostic(false),
            Some("I couldn't open x.eps, will ignore it")
        );
        assert_eq!(missing.bbox(), None);
    }
}
