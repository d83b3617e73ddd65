//! Line-oriented text formats: words, braid words, marked Gauss code,
//! presentations and Cayley tables.
//!
//! Blank lines and everything after `#` are ignored in every file format.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use mgauss_core::braid_reps::{BraidLetter, BraidWord};
use mgauss_core::diagrams::{Event, MarkedGaussDiagram, MoveSpec, Sign};
use mgauss_core::presentations::{FiniteGroup, Presentation};
use mgauss_core::words::{Generator, Word, WordContext};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] mgauss_core::Error),
}

pub type Result<T> = std::result::Result<T, FormatError>;

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// `name` or `name^k`.
fn split_power(tok: &str) -> std::result::Result<(&str, i64), String> {
    match tok.split_once('^') {
        None => Ok((tok, 1)),
        Some((name, e)) => {
            e.replace('\u{2212}', "-").parse::<i64>().map(|e| (name, e)).map_err(|_| format!("bad exponent in `{tok}`"))
        }
    }
}

fn parse_tokens(text: &str, line: usize, lookup: impl Fn(&str) -> Option<Generator>) -> Result<Word> {
    let mut raw = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, e) = split_power(tok).map_err(|m| syntax(line, m))?;
        let g = lookup(name).ok_or_else(|| syntax(line, format!("unknown generator `{name}`")))?;
        raw.push((g, e));
    }
    Ok(Word::from_raw(raw))
}

fn indexed(name: &str, prefix: char) -> Option<u32> {
    name.strip_prefix(prefix)?.parse::<u32>().ok().filter(|&k| k >= 1)
}

/// A word in the `x<k>`, `v<k>` grammar, checked against `ctx`.
pub fn parse_word(text: &str, ctx: WordContext) -> Result<Word> {
    let w = parse_tokens(text, 1, |name| {
        indexed(name, 'x').map(Generator::x).or_else(|| indexed(name, 'v').map(Generator::v))
    })?;
    ctx.check(&w)?;
    Ok(w)
}

/// A word over the generator names of `p`.
pub fn parse_word_in(text: &str, p: &Presentation) -> Result<Word> {
    let names = name_table(p);
    parse_tokens(text, 1, |name| names.get(name).copied())
}

fn name_table(p: &Presentation) -> HashMap<String, Generator> {
    let ctx = p.context();
    ctx.generators().map(|g| (p.name(g).to_string(), g)).collect()
}

/// Braid letters `s<i>`, `s<i>^-1`, `r<i>` on `n` strands.
pub fn parse_braid(text: &str, n: u32) -> Result<BraidWord> {
    parse_braid_line(text, 1, n)
}

fn parse_braid_line(text: &str, line: usize, n: u32) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, e) = split_power(tok).map_err(|m| syntax(line, m))?;
        let bad = || syntax(line, format!("unknown braid letter `{tok}`"));
        if let Some(i) = indexed(name, 's') {
            match e {
                1 => letters.push(BraidLetter::sigma(i)),
                -1 => letters.push(BraidLetter::sigma_inv(i)),
                _ => return Err(bad()),
            }
        } else if let Some(i) = indexed(name, 'r') {
            if e.abs() != 1 {
                return Err(bad());
            }
            letters.push(BraidLetter::rho(i));
        } else {
            return Err(bad());
        }
    }
    Ok(BraidWord::new(n, letters)?)
}

/// A `.braid` file: an `n=<strands>` header, then the word (possibly over
/// several lines).
pub fn parse_braid_file(text: &str) -> Result<BraidWord> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "missing `n=` header"))?;
    let n = header
        .strip_prefix("n=")
        .or_else(|| header.strip_prefix("n ="))
        .and_then(|s| s.trim().parse::<u32>().ok())
        .ok_or_else(|| syntax(hl, "expected `n=<strands>`"))?;
    let mut word = BraidWord::new(n, Vec::new())?;
    for (line, l) in lines {
        word = word.concat(&parse_braid_line(l, line, n)?);
    }
    Ok(word)
}

pub fn format_braid_file(b: &BraidWord) -> String {
    format!("n={}\n{}\n", b.strands(), b)
}

fn parse_sign(c: &str, line: usize) -> Result<Sign> {
    match c {
        "+" => Ok(Sign::Plus),
        "-" | "\u{2212}" => Ok(Sign::Minus),
        _ => Err(syntax(line, format!("bad sign `{c}`"))),
    }
}

/// Marked Gauss code: one `circle <k>: <event>*` line per circle.
pub fn parse_gauss_code(text: &str) -> Result<MarkedGaussDiagram> {
    let mut circles = Vec::new();
    let mut signs: BTreeMap<u32, (Sign, usize)> = BTreeMap::new();
    let mut seen: BTreeSet<(char, u32)> = BTreeSet::new();
    for (line, l) in content_lines(text) {
        let (head, body) = l.split_once(':').ok_or_else(|| syntax(line, "expected `circle <k>:`"))?;
        let k = head
            .trim()
            .strip_prefix("circle")
            .and_then(|s| s.trim().parse::<usize>().ok())
            .ok_or_else(|| syntax(line, "expected `circle <k>:`"))?;
        if k != circles.len() + 1 {
            return Err(syntax(line, format!("expected circle {}, found circle {k}", circles.len() + 1)));
        }
        let mut events = Vec::new();
        for tok in body.split_whitespace() {
            let mut chars = tok.char_indices();
            let (_, kind) = chars.next().expect("non-empty token");
            let split = tok.char_indices().last().map(|(i, _)| i).unwrap_or(0);
            let (mid, sign) = (&tok[kind.len_utf8()..split.max(kind.len_utf8())], &tok[split..]);
            let sign = parse_sign(sign, line)?;
            match kind {
                'N' if mid.is_empty() => events.push(Event::Node(sign)),
                'T' | 'H' => {
                    let id: u32 = mid
                        .parse()
                        .ok()
                        .filter(|&i| i >= 1)
                        .ok_or_else(|| syntax(line, format!("bad arrow id in `{tok}`")))?;
                    if !seen.insert((kind, id)) {
                        return Err(syntax(line, format!("second {kind}{id}")));
                    }
                    match signs.get(&id) {
                        Some(&(s, _)) if s != sign => {
                            return Err(syntax(line, format!("arrow {id} has signs {s} and {sign}")))
                        }
                        _ => {
                            signs.insert(id, (sign, line));
                        }
                    }
                    events.push(if kind == 'T' { Event::Tail(id) } else { Event::Head(id) });
                }
                _ => return Err(syntax(line, format!("unknown event `{tok}`"))),
            }
        }
        circles.push(events);
    }
    if circles.is_empty() {
        return Err(syntax(1, "no circles"));
    }
    for (&id, &(_, line)) in &signs {
        if !seen.contains(&('T', id)) || !seen.contains(&('H', id)) {
            return Err(syntax(line, format!("arrow {id} needs one tail and one head")));
        }
    }
    let signs = signs.into_iter().map(|(id, (s, _))| (id, s)).collect();
    Ok(MarkedGaussDiagram::new(circles, signs)?)
}

pub fn format_gauss_code(d: &MarkedGaussDiagram) -> String {
    format!("{d}\n")
}

/// Move syntax, circles numbered from 1 and gaps from 0:
///
/// ```text
/// r1add:<circle>,<gap>,<sign>,tail|head
/// r1remove:<arrow>
/// r2add:<tail circle>,<tail gap>,<head circle>,<head gap>,<sign>[,reversed]
/// r2remove:<arrow>,<arrow>
/// r3:<arrow>,<arrow>,<arrow>
/// nodeslide:<circle>,<index>
/// ```
pub fn parse_move(text: &str) -> Result<MoveSpec> {
    let bad = |m: &str| syntax(1, format!("{m} in move `{text}`"));
    let (kind, args) = text.trim().split_once(':').ok_or_else(|| bad("missing `:`"))?;
    let args: Vec<&str> = args.split(',').map(str::trim).collect();
    let num = |i: usize| -> Result<usize> {
        args.get(i).and_then(|a| a.parse::<usize>().ok()).ok_or_else(|| bad("bad number"))
    };
    let circle =
        |i: usize| -> Result<usize> { num(i)?.checked_sub(1).ok_or_else(|| bad("circles are numbered from 1")) };
    let arrow = |i: usize| -> Result<u32> { Ok(num(i)? as u32) };
    let sign = |i: usize| -> Result<Sign> { parse_sign(args.get(i).copied().unwrap_or(""), 1) };
    let arity = |k: &[usize]| -> Result<()> {
        if k.contains(&args.len()) {
            Ok(())
        } else {
            Err(bad("wrong number of arguments"))
        }
    };
    match kind {
        "r1add" => {
            arity(&[4])?;
            let tail_first = match args[3] {
                "tail" => true,
                "head" => false,
                _ => return Err(bad("expected `tail` or `head`")),
            };
            Ok(MoveSpec::R1Add { circle: circle(0)?, gap: num(1)?, sign: sign(2)?, tail_first })
        }
        "r1remove" => {
            arity(&[1])?;
            Ok(MoveSpec::R1Remove { arrow: arrow(0)? })
        }
        "r2add" => {
            arity(&[5, 6])?;
            let heads_reversed = match args.get(5) {
                None => false,
                Some(&"reversed") => true,
                Some(_) => return Err(bad("expected `reversed`")),
            };
            Ok(MoveSpec::R2Add {
                tail_circle: circle(0)?,
                tail_gap: num(1)?,
                head_circle: circle(2)?,
                head_gap: num(3)?,
                sign: sign(4)?,
                heads_reversed,
            })
        }
        "r2remove" => {
            arity(&[2])?;
            Ok(MoveSpec::R2Remove { first: arrow(0)?, second: arrow(1)? })
        }
        "r3" => {
            arity(&[3])?;
            Ok(MoveSpec::R3 { arrows: [arrow(0)?, arrow(1)?, arrow(2)?] })
        }
        "nodeslide" => {
            arity(&[2])?;
            Ok(MoveSpec::NodeNodeSlide { circle: circle(0)?, index: num(1)? })
        }
        _ => Err(bad("unknown move")),
    }
}

pub fn format_move(m: &MoveSpec) -> String {
    match *m {
        MoveSpec::R1Add { circle, gap, sign, tail_first } => {
            format!("r1add:{},{gap},{sign},{}", circle + 1, if tail_first { "tail" } else { "head" })
        }
        MoveSpec::R1Remove { arrow } => format!("r1remove:{arrow}"),
        MoveSpec::R2Add { tail_circle, tail_gap, head_circle, head_gap, sign, heads_reversed } => {
            format!(
                "r2add:{},{tail_gap},{},{head_gap},{sign}{}",
                tail_circle + 1,
                head_circle + 1,
                if heads_reversed { ",reversed" } else { "" }
            )
        }
        MoveSpec::R2Remove { first, second } => format!("r2remove:{first},{second}"),
        MoveSpec::R3 { arrows: [a, b, c] } => format!("r3:{a},{b},{c}"),
        MoveSpec::NodeNodeSlide { circle, index } => format!("nodeslide:{},{index}", circle + 1),
    }
}

/// `gens: <names>` then one `rel: <word>` line per relator. Names `v<k>`
/// are `v`-generators; every other name is an `x`-generator. Both kinds are
/// numbered in order of appearance.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut lines = content_lines(text);
    let (gl, gens) = lines.next().ok_or_else(|| syntax(1, "missing `gens:` line"))?;
    let gens = gens.strip_prefix("gens:").ok_or_else(|| syntax(gl, "expected `gens:`"))?;
    let mut x_names = Vec::new();
    let mut v_names = Vec::new();
    let mut taken = BTreeSet::new();
    for name in gens.split_whitespace() {
        if name == "1" || name.contains('^') || !taken.insert(name.to_string()) {
            return Err(syntax(gl, format!("bad or repeated generator name `{name}`")));
        }
        if indexed(name, 'v').is_some() {
            v_names.push(name.to_string());
        } else {
            x_names.push(name.to_string());
        }
    }
    let mut table = HashMap::new();
    for (i, n) in x_names.iter().enumerate() {
        table.insert(n.clone(), Generator::x(i as u32 + 1));
    }
    for (i, n) in v_names.iter().enumerate() {
        table.insert(n.clone(), Generator::v(i as u32 + 1));
    }
    let mut relators = Vec::new();
    for (line, l) in lines {
        let body = l.strip_prefix("rel:").ok_or_else(|| syntax(line, "expected `rel:`"))?;
        relators.push(parse_tokens(body, line, |n| table.get(n).copied())?);
    }
    Ok(Presentation::new(x_names, v_names, relators)?)
}

pub fn format_presentation(p: &Presentation) -> String {
    format!("{p}\n")
}

/// A Cayley table: one row of whitespace-separated element indices per
/// line, `row a, column b` holding `a*b`, identity at index 0.
pub fn parse_table(text: &str) -> Result<FiniteGroup> {
    let mut rows = Vec::new();
    for (line, l) in content_lines(text) {
        let row = l
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|_| syntax(line, format!("bad entry `{t}`"))))
            .collect::<Result<Vec<u32>>>()?;
        rows.push(row);
    }
    Ok(FiniteGroup::from_table(rows)?)
}

/// What a file holds, judged from its first content line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Gauss,
    Presentation,
    Braid,
}

pub fn sniff(text: &str) -> Option<InputKind> {
    let (_, first) = content_lines(text).next()?;
    if first.starts_with("circle") {
        Some(InputKind::Gauss)
    } else if first.starts_with("gens:") {
        Some(InputKind::Presentation)
    } else if first.starts_with("n=") || first.starts_with("n =") {
        Some(InputKind::Braid)
    } else {
        None
    }
}
