//! Token-level emulation of the header scanner macros.
//!
//! A header line is read with every special character recatcoded to
//! "other", so it tokenizes into plain characters, single space tokens and
//! (for an empty line) `\par`. The macros then split that token list with
//! delimited parameters. This module replays the same matching so the
//! verbatim tokens it produces, garbage included, are the ones TeX would
//! have stored.

use super::Line;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Tok {
    Ch(char),
    Space,
    Par,
    /// The `\\` control sequence used as a final delimiter.
    End,
}

/// What the line-classifying macro decides for one line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum AuxResult {
    Blank,
    Other,
    Comment,
    BoundingBox([String; 4]),
}

/// Tokens TeX produces for a normalized line, end-of-line space included.
pub(crate) fn tokenize(line: &Line) -> Vec<Tok> {
    match line {
        Line::Blank => vec![Tok::Par],
        Line::Text(text) => {
            let mut toks: Vec<Tok> = text
                .chars()
                .map(|c| if c == ' ' { Tok::Space } else { Tok::Ch(c) })
                .collect();
            toks.push(Tok::Space);
            toks
        }
    }
}

/// Collects tokens up to (not including) `delim`, returning the argument
/// and the position just past the delimiter.
fn take_until(toks: &[Tok], start: usize, delim: Tok) -> Option<(&[Tok], usize)> {
    let len = toks[start..].iter().position(|&t| t == delim)?;
    Some((&toks[start..start + len], start + len + 1))
}

fn text_of(toks: &[Tok]) -> String {
    toks.iter()
        .map(|t| match t {
            Tok::Ch(c) => *c,
            Tok::Space => ' ',
            Tok::Par => '\n',
            Tok::End => '\\',
        })
        .collect()
}

fn is_bbox_literal(toks: &[Tok]) -> bool {
    let lit = "%BoundingBox";
    toks.len() == lit.chars().count() && toks.iter().zip(lit.chars()).all(|(t, c)| *t == Tok::Ch(c))
}

/// `\epsfaux#1#2:#3\\` applied to `<line>:. \\`.
pub(crate) fn aux(line: &Line) -> AuxResult {
    let mut toks = tokenize(line);
    toks.extend([Tok::Ch(':'), Tok::Ch('.'), Tok::Space, Tok::End]);
    // #1 is undelimited; a line never starts with a space token.
    let first = toks[0];
    match first {
        Tok::Ch('%') => {}
        Tok::Par => return AuxResult::Blank,
        _ => return AuxResult::Other,
    }
    let (name, after) = take_until(&toks, 1, Tok::Ch(':')).expect("colon appended");
    if !is_bbox_literal(name) {
        return AuxResult::Comment;
    }
    let (rest, _) = take_until(&toks, after, Tok::End).expect("end appended");
    let mut input = rest.to_vec();
    input.extend([
        Tok::Space,
        Tok::Ch('.'),
        Tok::Space,
        Tok::Ch('.'),
        Tok::Space,
        Tok::Ch('.'),
        Tok::Space,
        Tok::End,
    ]);
    AuxResult::BoundingBox(grab(&input).expect("grab delimiters present"))
}

/// `\epsfgrab #1 #2 #3 #4 #5\\`, re-invoked as
/// `\epsfgrab #2 #3 #4 #5 .\\` while the first argument comes up empty.
/// Returns `None` if a delimiter is missing (a runaway argument in TeX).
pub(crate) fn grab(input: &[Tok]) -> Option<[String; 4]> {
    let mut toks = input.to_vec();
    loop {
        let (a1, p) = take_until(&toks, 0, Tok::Space)?;
        let (a2, p) = take_until(&toks, p, Tok::Space)?;
        let (a3, p) = take_until(&toks, p, Tok::Space)?;
        let (a4, p) = take_until(&toks, p, Tok::Space)?;
        let (a5, _) = take_until(&toks, p, Tok::End)?;
        if !a1.is_empty() {
            return Some([text_of(a1), text_of(a2), text_of(a3), text_of(a4)]);
        }
        let mut next = Vec::with_capacity(toks.len() + 2);
        for (i, arg) in [a2, a3, a4, a5].into_iter().enumerate() {
            if i > 0 {
                next.push(Tok::Space);
            }
            next.extend_from_slice(arg);
        }
        next.extend([Tok::Space, Tok::Ch('.'), Tok::End]);
        toks = next;
    }
}

/// `\epsfgetlitbb#1#2 #3 #4 #5]#6` on the bracketed part of a literal
/// spec, `inner` being the text between `[` and the first `]`.
pub(crate) fn literal(inner: &str) -> Option<[String; 4]> {
    let mut toks: Vec<Tok> = Vec::new();
    for c in inner.chars() {
        if c == ' ' || c == '\t' {
            if toks.last() != Some(&Tok::Space) {
                toks.push(Tok::Space);
            }
        } else {
            toks.push(Tok::Ch(c));
        }
    }
    toks.push(Tok::End);
    let (a2, p) = take_until(&toks, 0, Tok::Space)?;
    let (a3, p) = take_until(&toks, p, Tok::Space)?;
    let (a4, p) = take_until(&toks, p, Tok::Space)?;
    let (a5, _) = take_until(&toks, p, Tok::End)?;
    let mut input = Vec::new();
    for (i, arg) in [a2, a3, a4, a5].into_iter().enumerate() {
        if i > 0 {
            input.push(Tok::Space);
        }
        input.extend_from_slice(arg);
    }
    input.extend([Tok::Space, Tok::Ch('.'), Tok::End]);
    grab(&input)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> Line {
        Line::Text(s.to_string())
    }

    fn four(a: &str, b: &str, c: &str, d: &str) -> [String; 4] {
        [a.into(), b.into(), c.into(), d.into()]
    }

    #[test]
    fn well_formed_line() {
        assert_eq!(
            aux(&text("%%BoundingBox: 10 20 110 220")),
            AuxResult::BoundingBox(four("10", "20", "110", "220"))
        );
        assert_eq!(
            aux(&text("%%BoundingBox:10 20 110 220")),
            AuxResult::BoundingBox(four("10", "20", "110", "220"))
        );
    }

    #[test]
    fn atend_smuggles_delimiter_tokens() {
        // the doubled space after #3 yields an empty urx
        assert_eq!(
            aux(&text("%%BoundingBox: (atend)")),
            AuxResult::BoundingBox(four("(atend)", ":.", "", "."))
        );
        assert_eq!(
            aux(&text("%%BoundingBox:")),
            AuxResult::BoundingBox(four(":.", "", ".", "."))
        );
    }

    #[test]
    fn three_numbers_leave_a_garbage_ury() {
        assert_eq!(
            aux(&text("%%BoundingBox: 0 0 10")),
            AuxResult::BoundingBox(four("0", "0", "10", ":."))
        );
    }

    #[test]
    fn classification() {
        assert_eq!(aux(&Line::Blank), AuxResult::Blank);
        assert_eq!(aux(&text("newpath")), AuxResult::Other);
        assert_eq!(aux(&text("%!PS-Adobe-3.0 EPSF-3.0")), AuxResult::Comment);
        assert_eq!(aux(&text("%%BoundingBox : 1 2 3 4")), AuxResult::Comment);
        assert_eq!(aux(&text("%%BoundingBox")), AuxResult::Comment);
        assert_eq!(aux(&text("%")), AuxResult::Comment);
    }

    #[test]
    fn literal_forms() {
        assert_eq!(
            literal("100 100 300 300"),
            Some(four("100", "100", "300", "300"))
        );
        assert_eq!(literal(" 1 2 3 4 "), Some(four("1", "2", "3", "4")));
        assert_eq!(literal("1 2 3 4 5"), Some(four("1", "2", "3", "4")));
        assert_eq!(literal("0 0 10"), None);
    }
}
