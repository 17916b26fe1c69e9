//! Curve file grammar.
//!
//! Line-oriented UTF-8; blank lines and `#` comments are skipped. Every
//! coefficient is an exact rational `p/q` or `p` — float literals are
//! rejected with the offending line and column.
//!
//! Genus-5 records:
//!
//! ```text
//! curve5 v1
//! quadric
//! <i> <j> <coeff>     # one entry per line, 0 <= i <= j <= 4
//! quadric
//! ...
//! quadric
//! ...
//! point <p0> <p1> <p2> <p3> <p4>
//! ```
//!
//! Genus-6 records:
//!
//! ```text
//! curve6 v1
//! base <x> <y> <z>    # exactly four base lines
//! ...
//! sextic
//! <i> <j> <k> <coeff> # i + j + k = 6
//! point <x> <y> <z>
//! ```

use fibkit_core::curve5::{quad_from_entries, PointedCurve5};
use fibkit_core::exact::mpoly::MPoly;
use fibkit_core::exact::rat::{parse_rat, rat_str, Rat};
use num_traits::Zero;

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "line {} column {}: {}",
            self.line, self.col, self.message
        )
    }
}

/// A parsed curve file, prior to any semantic validation.
pub enum CurveFile {
    Genus5(PointedCurve5),
    Genus6 {
        base: [[Rat; 3]; 4],
        sextic: MPoly,
        point: [Rat; 3],
    },
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

struct Lines<'a> {
    rows: Vec<(usize, Vec<Token<'a>>)>,
    cursor: usize,
}

impl<'a> Lines<'a> {
    fn new(input: &'a str) -> Self {
        let mut rows = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let mut tokens = Vec::new();
            let mut col = 0usize;
            for piece in raw.split_inclusive(char::is_whitespace) {
                let trimmed = piece.trim_end_matches(char::is_whitespace);
                if !trimmed.is_empty() {
                    tokens.push(Token {
                        text: trimmed,
                        line: line_no,
                        col: col + 1,
                    });
                }
                col += piece.chars().count();
            }
            if tokens.is_empty() || tokens[0].text.starts_with('#') {
                continue;
            }
            rows.push((line_no, tokens));
        }
        Lines { rows, cursor: 0 }
    }

    fn peek(&self) -> Option<&(usize, Vec<Token<'a>>)> {
        self.rows.get(self.cursor)
    }

    fn next_row(&mut self) -> Option<&(usize, Vec<Token<'a>>)> {
        let row = self.rows.get(self.cursor);
        if row.is_some() {
            self.cursor += 1;
        }
        row
    }

    fn last_line(&self) -> usize {
        self.rows.last().map(|(l, _)| *l).unwrap_or(1)
    }
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

fn token_rat(tok: &Token) -> Result<Rat, ParseError> {
    parse_rat(tok.text).map_err(|m| err(tok.line, tok.col, m))
}

fn token_index(tok: &Token, max: u32) -> Result<u32, ParseError> {
    let v: u32 = tok.text.parse().map_err(|_| {
        err(
            tok.line,
            tok.col,
            format!("expected an index, found `{}`", tok.text),
        )
    })?;
    if v > max {
        return Err(err(tok.line, tok.col, format!("index {v} exceeds {max}")));
    }
    Ok(v)
}

pub fn parse_curve_file(input: &str) -> Result<CurveFile, ParseError> {
    let mut lines = Lines::new(input);
    let Some((line, header)) = lines.next_row() else {
        return Err(err(1, 1, "empty file"));
    };
    let line = *line;
    if header.len() != 2 || header[1].text != "v1" {
        return Err(err(line, 1, "expected header `curve5 v1` or `curve6 v1`"));
    }
    match header[0].text {
        "curve5" => parse_genus5(&mut lines),
        "curve6" => parse_genus6(&mut lines),
        other => Err(err(line, 1, format!("unknown record type `{other}`"))),
    }
}

fn parse_genus5(lines: &mut Lines) -> Result<CurveFile, ParseError> {
    let mut quadrics: Vec<MPoly> = Vec::new();
    let mut point: Option<[Rat; 5]> = None;
    while let Some((line, tokens)) = lines.next_row() {
        let line = *line;
        match tokens[0].text {
            "quadric" => {
                if quadrics.len() == 3 {
                    return Err(err(line, 1, "a genus-5 record has exactly three quadrics"));
                }
                let mut entries: Vec<(usize, usize, Rat)> = Vec::new();
                while let Some((_, next)) = lines.peek() {
                    if matches!(next[0].text, "quadric" | "point") {
                        break;
                    }
                    let (eline, toks) = lines.next_row().unwrap();
                    let eline = *eline;
                    if toks.len() != 3 {
                        return Err(err(eline, 1, "quadric entries are `<i> <j> <coeff>`"));
                    }
                    let i = token_index(&toks[0], 4)? as usize;
                    let j = token_index(&toks[1], 4)? as usize;
                    if i > j {
                        return Err(err(toks[0].line, toks[0].col, "entries require i <= j"));
                    }
                    let c = token_rat(&toks[2])?;
                    entries.push((i, j, c));
                }
                quadrics.push(quad_from_entries(&entries));
            }
            "point" => {
                if tokens.len() != 6 {
                    return Err(err(
                        line,
                        1,
                        "genus-5 point lines are `point <5 coordinates>`",
                    ));
                }
                let mut p: Vec<Rat> = Vec::with_capacity(5);
                for t in &tokens[1..] {
                    p.push(token_rat(t)?);
                }
                point = Some([
                    p[0].clone(),
                    p[1].clone(),
                    p[2].clone(),
                    p[3].clone(),
                    p[4].clone(),
                ]);
            }
            other => {
                return Err(err(
                    line,
                    tokens[0].col,
                    format!("unexpected directive `{other}`"),
                ));
            }
        }
    }
    let last = lines.last_line();
    if quadrics.len() != 3 {
        return Err(err(
            last,
            1,
            format!("expected three quadrics, found {}", quadrics.len()),
        ));
    }
    let Some(point) = point else {
        return Err(err(last, 1, "missing `point` line"));
    };
    if point.iter().all(Rat::is_zero) {
        return Err(err(
            last,
            1,
            "marked point must be a nonzero projective vector",
        ));
    }
    let curve = PointedCurve5::new(
        [
            quadrics[0].clone(),
            quadrics[1].clone(),
            quadrics[2].clone(),
        ],
        point,
    )
    .map_err(|m| err(last, 1, m))?;
    Ok(CurveFile::Genus5(curve))
}

fn parse_genus6(lines: &mut Lines) -> Result<CurveFile, ParseError> {
    let mut base: Vec<[Rat; 3]> = Vec::new();
    let mut sextic: Option<MPoly> = None;
    let mut point: Option<[Rat; 3]> = None;
    while let Some((line, tokens)) = lines.next_row() {
        let line = *line;
        match tokens[0].text {
            "base" => {
                if tokens.len() != 4 {
                    return Err(err(line, 1, "base lines are `base <x> <y> <z>`"));
                }
                if base.len() == 4 {
                    return Err(err(
                        line,
                        1,
                        "a genus-6 record has exactly four base points",
                    ));
                }
                let mut p = Vec::with_capacity(3);
                for t in &tokens[1..] {
                    p.push(token_rat(t)?);
                }
                base.push([p[0].clone(), p[1].clone(), p[2].clone()]);
            }
            "sextic" => {
                let mut poly = MPoly::zero(3);
                while let Some((_, next)) = lines.peek() {
                    if matches!(next[0].text, "point" | "base" | "sextic") {
                        break;
                    }
                    let (eline, toks) = lines.next_row().unwrap();
                    let eline = *eline;
                    if toks.len() != 4 {
                        return Err(err(eline, 1, "sextic entries are `<i> <j> <k> <coeff>`"));
                    }
                    let i = token_index(&toks[0], 6)?;
                    let j = token_index(&toks[1], 6)?;
                    let k = token_index(&toks[2], 6)?;
                    if i + j + k != 6 {
                        return Err(err(toks[0].line, toks[0].col, "exponents must sum to 6"));
                    }
                    let c = token_rat(&toks[3])?;
                    poly.add_term(vec![i, j, k], c);
                }
                sextic = Some(poly);
            }
            "point" => {
                if tokens.len() != 4 {
                    return Err(err(line, 1, "genus-6 point lines are `point <x> <y> <z>`"));
                }
                let mut p = Vec::with_capacity(3);
                for t in &tokens[1..] {
                    p.push(token_rat(t)?);
                }
                point = Some([p[0].clone(), p[1].clone(), p[2].clone()]);
            }
            other => {
                return Err(err(
                    line,
                    tokens[0].col,
                    format!("unexpected directive `{other}`"),
                ));
            }
        }
    }
    let last = lines.last_line();
    if base.len() != 4 {
        return Err(err(
            last,
            1,
            format!("expected four base points, found {}", base.len()),
        ));
    }
    let Some(sextic) = sextic else {
        return Err(err(last, 1, "missing `sextic` block"));
    };
    let Some(point) = point else {
        return Err(err(last, 1, "missing `point` line"));
    };
    if point.iter().all(Rat::is_zero) {
        return Err(err(
            last,
            1,
            "marked point must be a nonzero projective vector",
        ));
    }
    Ok(CurveFile::Genus6 {
        base: [
            base[0].clone(),
            base[1].clone(),
            base[2].clone(),
            base[3].clone(),
        ],
        sextic,
        point,
    })
}

/// Canonical emission of a genus-5 record; parsing it back gives an equal
/// curve.
pub fn print_curve5(curve: &PointedCurve5) -> String {
    let mut out = String::from("curve5 v1\n");
    for q in curve.net() {
        out.push_str("quadric\n");
        for (i, j) in fibkit_core::curve5::sym_index_pairs() {
            let c = fibkit_core::curve5::quad_coeff(q, i, j);
            if !c.is_zero() {
                out.push_str(&format!("{i} {j} {}\n", rat_str(&c)));
            }
        }
    }
    out.push_str("point");
    for c in curve.point() {
        out.push_str(&format!(" {}", rat_str(c)));
    }
    out.push('\n');
    out
}

/// Canonical emission of a genus-6 record.
pub fn print_curve6(base: &[[Rat; 3]; 4], sextic: &MPoly, point: &[Rat; 3]) -> String {
    let mut out = String::from("curve6 v1\n");
    for b in base {
        out.push_str(&format!(
            "base {} {} {}\n",
            rat_str(&b[0]),
            rat_str(&b[1]),
            rat_str(&b[2])
        ));
    }
    out.push_str("sextic\n");
    for (e, c) in sextic.terms() {
        out.push_str(&format!("{} {} {} {}\n", e[0], e[1], e[2], rat_str(c)));
    }
    out.push_str(&format!(
        "point {} {} {}\n",
        rat_str(&point[0]),
        rat_str(&point[1]),
        rat_str(&point[2])
    ));
    out
}
