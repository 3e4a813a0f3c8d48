//! The cycle file format.
//!
//! ```text
//! # the cuspidal cubic
//! ambient 2
//! component coeff=1
//! x1^3 - x0*x2^2
//! ```
//!
//! Besides `component` blocks (one generator per line) a file may use the
//! one-line shorthands `point [a,b,…]`, `hypersurface <poly>`,
//! `linear <form>, <form>, …` and `full`; each accepts an optional
//! `coeff=<k>` right after the keyword. Without an `ambient` header the
//! ambient dimension is taken from the points or the largest variable index.

use std::fmt::Write as _;
use std::path::Path;

use vogel_core::cycles::{make_full_space, make_hypersurface, make_linear_space, make_point, Chunk, Cycle};
use vogel_core::ideals::Ideal;
use vogel_core::kernel::{parse_point, Poly, PolyRing, MAX_VARS};

use crate::error::{CliError, CliResult};

#[derive(Debug)]
enum Item {
    Component { line: usize, coeff: u64, dim: Option<usize>, degree: Option<u64>, gens: Vec<(usize, String)> },
    Point { line: usize, coeff: u64, text: String },
    Hypersurface { line: usize, coeff: u64, text: String },
    Linear { line: usize, coeff: u64, text: String },
    Full { line: usize, coeff: u64 },
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Splits an optional leading `coeff=<k>` off the rest of a line.
fn take_coeff(line: usize, rest: &str) -> CliResult<(u64, &str)> {
    let rest = rest.trim();
    match rest.strip_prefix("coeff=") {
        None => Ok((1, rest)),
        Some(tail) => {
            let (num, after) = tail.split_once(char::is_whitespace).unwrap_or((tail, ""));
            Ok((parse_coeff(line, num)?, after.trim()))
        }
    }
}

fn parse_coeff(line: usize, text: &str) -> CliResult<u64> {
    let k: i64 = text.parse().map_err(|_| CliError::at(line, format!("invalid coefficient {:?}", text)))?;
    if k <= 0 {
        return Err(CliError::at(line, vogel_core::Error::NonPositiveCoefficient(k)));
    }
    Ok(k as u64)
}

fn parse_component_header(line: usize, rest: &str) -> CliResult<Item> {
    let (mut coeff, mut dim, mut degree) = (1, None, None);
    for field in rest.split_whitespace() {
        let (key, value) = field.split_once('=').ok_or_else(|| CliError::at(line, format!("expected key=value, got {:?}", field)))?;
        let bad = || CliError::at(line, format!("invalid value in {:?}", field));
        match key {
            "coeff" => coeff = parse_coeff(line, value)?,
            "dim" => dim = Some(value.parse().map_err(|_| bad())?),
            "degree" => degree = Some(value.parse().map_err(|_| bad())?),
            _ => return Err(CliError::at(line, format!("unknown attribute {:?}", key))),
        }
    }
    Ok(Item::Component { line, coeff, dim, degree, gens: Vec::new() })
}

fn max_var_index(line: usize, text: &str) -> CliResult<Option<usize>> {
    let wide = PolyRing::new(MAX_VARS).map_err(|e| CliError::at(line, e))?;
    let f = wide.parse(text).map_err(|e| CliError::at(line, e))?;
    Ok((0..MAX_VARS).rev().find(|&v| f.involves(v)))
}

fn parse_in(ring: &PolyRing, line: usize, text: &str) -> CliResult<Poly> {
    let wide = PolyRing::new(MAX_VARS).map_err(|e| CliError::at(line, e))?;
    let f = wide.parse(text).map_err(|e| CliError::at(line, e))?;
    if let Some(v) = (ring.nvars()..MAX_VARS).find(|&v| f.involves(v)) {
        return Err(CliError::at(line, format!("variable x{} outside the ambient space", v)));
    }
    let map: Vec<usize> = (0..MAX_VARS).map(|i| i.min(ring.nvars() - 1)).collect();
    Ok(f.remap(ring.nvars(), &map))
}

fn homogeneous(line: usize, f: Poly) -> CliResult<Poly> {
    if f.is_homogeneous() {
        Ok(f)
    } else {
        Err(CliError::at(line, vogel_core::Error::NotHomogeneous(f.to_string())))
    }
}

/// Parses a cycle file's contents.
pub fn parse_cycle(text: &str) -> CliResult<Cycle> {
    let mut ambient: Option<usize> = None;
    let mut items: Vec<Item> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw);
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        match keyword {
            "ambient" => {
                if ambient.is_some() || !items.is_empty() {
                    return Err(CliError::at(line, "the ambient header must come first and only once"));
                }
                let n: usize = rest.trim().parse().map_err(|_| CliError::at(line, format!("invalid ambient {:?}", rest.trim())))?;
                if n == 0 || n + 1 > MAX_VARS {
                    return Err(CliError::at(line, format!("ambient dimension {} out of range", n)));
                }
                ambient = Some(n);
            }
            "component" => items.push(parse_component_header(line, rest)?),
            "point" => {
                let (coeff, text) = take_coeff(line, rest)?;
                items.push(Item::Point { line, coeff, text: text.to_string() });
            }
            "hypersurface" => {
                let (coeff, text) = take_coeff(line, rest)?;
                items.push(Item::Hypersurface { line, coeff, text: text.to_string() });
            }
            "linear" => {
                let (coeff, text) = take_coeff(line, rest)?;
                items.push(Item::Linear { line, coeff, text: text.to_string() });
            }
            "full" => {
                let (coeff, text) = take_coeff(line, rest)?;
                if !text.is_empty() {
                    return Err(CliError::at(line, "unexpected text after `full`"));
                }
                items.push(Item::Full { line, coeff });
            }
            _ => match items.last_mut() {
                Some(Item::Component { gens, .. }) => gens.push((line, content.to_string())),
                _ => return Err(CliError::at(line, format!("unexpected line {:?}", content))),
            },
        }
    }

    let n = match ambient {
        Some(n) => n,
        None => infer_ambient(&items)?,
    };
    let ring = PolyRing::projective(n).map_err(|e| CliError::at(0, e))?;
    let mut cycle = Cycle::zero(n);
    for item in &items {
        let (piece, coeff) = build(&ring, item)?;
        for ch in piece.chunks() {
            cycle.push(ch.with_coefficient(ch.coefficient() * coeff));
        }
    }
    Ok(cycle)
}

fn infer_ambient(items: &[Item]) -> CliResult<usize> {
    let mut n = 1usize;
    let mut seen_full = None;
    for item in items {
        match item {
            Item::Point { line, text, .. } => {
                let p = parse_point(text).map_err(|e| CliError::at(*line, e))?;
                n = n.max(p.ambient_dim());
            }
            Item::Hypersurface { line, text, .. } => {
                n = n.max(max_var_index(*line, text)?.unwrap_or(0));
            }
            Item::Linear { line, text, .. } => {
                for form in text.split(',') {
                    n = n.max(max_var_index(*line, form)?.unwrap_or(0));
                }
            }
            Item::Component { gens, .. } => {
                for (line, g) in gens {
                    n = n.max(max_var_index(*line, g)?.unwrap_or(0));
                }
            }
            Item::Full { line, .. } => seen_full = Some(*line),
        }
    }
    if let Some(line) = seen_full {
        return Err(CliError::at(line, "`full` needs an `ambient` header"));
    }
    Ok(n)
}

fn build(ring: &PolyRing, item: &Item) -> CliResult<(Cycle, u64)> {
    let n = ring.nvars() - 1;
    match item {
        Item::Point { line, coeff, text } => {
            let p = parse_point(text).map_err(|e| CliError::at(*line, e))?;
            if p.ambient_dim() != n {
                return Err(CliError::at(*line, vogel_core::Error::AmbientMismatch(n, p.ambient_dim())));
            }
            Ok((make_point(&p).map_err(|e| CliError::at(*line, e))?, *coeff))
        }
        Item::Hypersurface { line, coeff, text } => {
            let f = homogeneous(*line, parse_in(ring, *line, text)?)?;
            Ok((make_hypersurface(&f, 1).map_err(|e| CliError::at(*line, e))?, *coeff))
        }
        Item::Linear { line, coeff, text } => {
            let forms = text.split(',').map(|t| parse_in(ring, *line, t)).collect::<CliResult<Vec<_>>>()?;
            Ok((make_linear_space(ring.nvars(), &forms).map_err(|e| CliError::at(*line, e))?, *coeff))
        }
        Item::Full { coeff, .. } => Ok((make_full_space(n), *coeff)),
        Item::Component { line, coeff, dim, degree, gens } => {
            let polys = gens
                .iter()
                .map(|(l, g)| homogeneous(*l, parse_in(ring, *l, g)?))
                .collect::<CliResult<Vec<_>>>()?;
            let ideal = Ideal::new(ring.nvars(), polys).map_err(|e| CliError::at(*line, e))?;
            let chunk = Chunk::from_ideal(&ideal, *coeff)
                .map_err(|e| CliError::at(*line, e))?
                .ok_or_else(|| CliError::at(*line, "component defines the empty set"))?;
            if chunk.ideal() != &ideal {
                return Err(CliError::at(*line, "component ideal has embedded or lower-dimensional parts"));
            }
            if dim.is_some_and(|d| d != chunk.dim()) || degree.is_some_and(|d| d != chunk.degree()) {
                return Err(CliError::at(
                    *line,
                    format!("declared dim/degree disagree with computed dim {} degree {}", chunk.dim(), chunk.degree()),
                ));
            }
            let cycle = Cycle::new(n, vec![chunk.with_coefficient(1)]).map_err(|e| CliError::at(*line, e))?;
            Ok((cycle, *coeff))
        }
    }
}

/// Reads and parses a cycle file; the label is the file stem.
pub fn read_cycle(path: &Path) -> CliResult<Cycle> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(parse_cycle(&text)?.with_label(label))
}

/// Generators of an ideal in canonical printed form.
pub fn ideal_strings(ring: &PolyRing, ideal: &Ideal) -> Vec<String> {
    ideal.gens().iter().map(|g| ring.display(&g.primitive())).collect()
}

/// Canonical text of a cycle, parseable by [`parse_cycle`].
pub fn print_cycle(c: &Cycle) -> String {
    let ring = PolyRing::projective(c.ambient()).expect("valid ambient");
    let mut out = String::new();
    writeln!(out, "ambient {}", c.ambient()).unwrap();
    for ch in c.chunks() {
        writeln!(out, "component coeff={} dim={} degree={}", ch.coefficient(), ch.dim(), ch.degree()).unwrap();
        for g in ideal_strings(&ring, ch.ideal()) {
            writeln!(out, "{}", g).unwrap();
        }
    }
    out
}

/// Parses linear forms, one per line, in the ring of ℙⁿ.
pub fn parse_forms(text: &str, n: usize) -> CliResult<Vec<Poly>> {
    let ring = PolyRing::projective(n).map_err(|e| CliError::at(0, e))?;
    let mut forms = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = strip_comment(raw);
        if content.is_empty() {
            continue;
        }
        let f = parse_in(&ring, idx + 1, content)?;
        if !f.is_linear_form() {
            return Err(CliError::at(idx + 1, vogel_core::Error::NotLinear(f.to_string())));
        }
        forms.push(f);
    }
    Ok(forms)
}

/// Parses an ideal, one generator per line.
pub fn parse_ideal(text: &str, n: usize) -> CliResult<Ideal> {
    let ring = PolyRing::projective(n).map_err(|e| CliError::at(0, e))?;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = strip_comment(raw);
        if !content.is_empty() {
            gens.push(parse_in(&ring, idx + 1, content)?);
        }
    }
    Ideal::new(n + 1, gens).map_err(|e| CliError::at(0, e))
}
