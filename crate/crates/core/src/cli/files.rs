//! The two line-oriented input formats. `#` starts a comment.
//!
//! Presentation (`.alg`):
//!
//! ```text
//! algebra T2
//! generator u degree 1 0 star U
//! generator U degree -1 0 star u
//! commute u v 0          # gᵤ gᵥ = L^0 gᵥ gᵤ; the opposite entry is implied
//! deformed               # expressions live in the quantized algebra
//! ```
//!
//! Symmetry (`.sym`), resolved against a presentation:
//!
//! ```text
//! cartan 2
//! 2 -1
//! -1 2
//! pick-h 1 2
//! x1+ : z2 -> z1
//! x1+ : w1 -> -1 w2
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{BigInt, Zero};

use crate::algebra::{Element, Generator, GradedPresentation};
use crate::symmetry::{ActionRule, CartanData, GeneratorAction, Sign, Symbol};

use super::expr::parse_expression_at;
use super::ParseError;

/// A loaded presentation. The relations are always the undeformed ones;
/// `deformed` selects the quantized algebra for expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFile {
    pub source: Arc<GradedPresentation>,
    pub deformed: bool,
}

impl PresentationFile {
    /// The algebra expressions are read in: the source, or its quantization
    /// when the file is marked `deformed`.
    pub fn algebra(&self) -> Arc<GradedPresentation> {
        if self.deformed {
            Arc::new(self.source.quantize())
        } else {
            self.source.clone()
        }
    }
}

#[derive(Clone, Debug)]
pub struct SymmetryFile {
    pub action: GeneratorAction,
}

struct Line<'a> {
    number: usize,
    words: Vec<(usize, &'a str)>,
    text: &'a str,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let text = raw.split('#').next().unwrap_or("");
        let mut words = Vec::new();
        let mut start = None;
        for (pos, c) in text
            .char_indices()
            .chain(std::iter::once((text.len(), ' ')))
        {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    words.push((text[..s].chars().count() + 1, &text[s..pos]));
                    start = None;
                }
                _ => {}
            }
        }
        (!words.is_empty()).then_some(Line {
            number: k + 1,
            words,
            text,
        })
    })
}

impl Line<'_> {
    fn err(&self, word: usize, message: impl Into<String>) -> ParseError {
        let column = self
            .words
            .get(word)
            .map(|w| w.0)
            .unwrap_or_else(|| self.text.chars().count() + 1);
        ParseError::new(self.number, column, message)
    }

    fn word(&self, k: usize, what: &str) -> Result<&str, ParseError> {
        self.words
            .get(k)
            .map(|w| w.1)
            .ok_or_else(|| self.err(k, format!("missing {what}")))
    }

    fn int<T: std::str::FromStr>(&self, k: usize, what: &str) -> Result<T, ParseError> {
        let w = self.word(k, what)?;
        w.parse()
            .map_err(|_| self.err(k, format!("expected {what}, found `{w}`")))
    }

    fn arity(&self, n: usize) -> Result<(), ParseError> {
        match self.words.get(n) {
            None => Ok(()),
            Some(_) => Err(self.err(n, format!("unexpected `{}`", self.words[n].1))),
        }
    }
}

/// Load-time failure: a syntax error, or a well-formed file that violates
/// an invariant (a non-antisymmetric commutation matrix, a wrong degree
/// shift, …).
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LoadError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error("{0}")]
    Invalid(String),
}

pub fn parse_presentation(text: &str) -> Result<PresentationFile, LoadError> {
    let mut name = None;
    let mut deformed = false;
    let mut generators: Vec<(String, i64, i64, Option<(String, Line)>)> = Vec::new();
    let mut commutes: Vec<(Line, String, String, BigInt)> = Vec::new();
    for line in lines(text) {
        match line.words[0].1 {
            "algebra" => {
                if name.is_some() {
                    return Err(line.err(0, "`algebra` given twice").into());
                }
                name = Some(line.word(1, "algebra name")?.to_string());
                line.arity(2)?;
            }
            "generator" => {
                let g = line.word(1, "generator name")?.to_string();
                if line.word(2, "`degree`")? != "degree" {
                    return Err(line.err(2, "expected `degree`").into());
                }
                let n1 = line.int(3, "integer degree")?;
                let n2 = line.int(4, "integer degree")?;
                let star = match line.words.get(5).map(|w| w.1) {
                    None => None,
                    Some("star") => {
                        let partner = line.word(6, "star partner")?.to_string();
                        line.arity(7)?;
                        Some(partner)
                    }
                    Some(_) => return Err(line.err(5, "expected `star` or end of line").into()),
                };
                generators.push((g, n1, n2, star.map(|s| (s, line))));
            }
            "commute" => {
                let g = line.word(1, "generator name")?.to_string();
                let h = line.word(2, "generator name")?.to_string();
                let c = line.int(3, "integer exponent")?;
                line.arity(4)?;
                commutes.push((line, g, h, c));
            }
            "deformed" => {
                line.arity(1)?;
                deformed = true;
            }
            other => return Err(line.err(0, format!("unknown directive `{other}`")).into()),
        }
    }
    let name = name.ok_or_else(|| ParseError::new(1, 1, "missing `algebra <name>` line"))?;
    let index: BTreeMap<String, usize> = generators
        .iter()
        .enumerate()
        .map(|(k, g)| (g.0.clone(), k))
        .collect();
    let mut gens = Vec::new();
    for (g, n1, n2, star) in &generators {
        let mut gen = Generator::new(g, *n1, *n2);
        if let Some((partner, line)) = star {
            let s = index
                .get(partner)
                .ok_or_else(|| line.err(6, format!("unknown generator `{partner}`")))?;
            gen = gen.with_star(*s);
        }
        gens.push(gen);
    }
    let n = gens.len();
    let mut explicit: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for (line, g, h, c) in &commutes {
        let lookup = |name: &str, k: usize| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| line.err(k, format!("unknown generator `{name}`")))
        };
        let (a, b) = (lookup(g, 1)?, lookup(h, 2)?);
        if explicit.insert((a, b), c.clone()).is_some() {
            return Err(line
                .err(0, format!("relation between `{g}` and `{h}` given twice"))
                .into());
        }
    }
    let mut matrix = vec![vec![BigInt::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            matrix[a][b] = match (explicit.get(&(a, b)), explicit.get(&(b, a))) {
                (Some(c), _) => c.clone(),
                (None, Some(c)) => -c,
                (None, None) => BigInt::zero(),
            };
        }
    }
    let source = GradedPresentation::new(&name, gens, matrix)
        .map_err(|e| LoadError::Invalid(e.to_string()))?;
    Ok(PresentationFile {
        source: Arc::new(source),
        deformed,
    })
}

pub fn render_presentation(file: &PresentationFile) -> String {
    let p = &file.source;
    let mut out = format!("algebra {}\n", p.name());
    for g in p.generators() {
        out += &format!(
            "generator {} degree {} {}",
            g.name, g.degree.n1, g.degree.n2
        );
        if let Some(s) = g.star {
            out += &format!(" star {}", p.generators()[s].name);
        }
        out.push('\n');
    }
    for a in 0..p.len() {
        for b in 0..a {
            let c = p.commutation(a, b);
            if !c.is_zero() {
                out += &format!(
                    "commute {} {} {c}\n",
                    p.generators()[a].name,
                    p.generators()[b].name
                );
            }
        }
    }
    if file.deformed {
        out += "deformed\n";
    }
    out
}

fn parse_x(word: &str) -> Option<(usize, Sign)> {
    let rest = word.strip_prefix('x').or_else(|| word.strip_prefix('X'))?;
    let (digits, sign) = match rest.chars().last()? {
        '+' => (&rest[..rest.len() - 1], Sign::Plus),
        '-' => (&rest[..rest.len() - 1], Sign::Minus),
        _ => return None,
    };
    match digits.parse::<usize>() {
        Ok(i) if i >= 1 => Some((i - 1, sign)),
        _ => None,
    }
}

/// Parses a symmetry file acting on `p` (the undeformed source).
pub fn parse_symmetry(text: &str, p: &Arc<GradedPresentation>) -> Result<SymmetryFile, LoadError> {
    let all: Vec<Line> = lines(text).collect();
    let mut matrix: Option<Vec<Vec<i64>>> = None;
    let mut picks = (0, 1);
    let mut rules = Vec::new();
    let mut k = 0;
    while k < all.len() {
        let line = &all[k];
        match line.words[0].1 {
            "cartan" => {
                if matrix.is_some() {
                    return Err(line.err(0, "`cartan` given twice").into());
                }
                let r: usize = line.int(1, "rank")?;
                line.arity(2)?;
                let mut rows = Vec::new();
                for row in 0..r {
                    let Some(l) = all.get(k + 1 + row) else {
                        return Err(line
                            .err(0, format!("expected {r} rows of the Cartan matrix"))
                            .into());
                    };
                    if l.words.len() != r {
                        return Err(l
                            .err(l.words.len().min(r), format!("expected {r} integers"))
                            .into());
                    }
                    rows.push(
                        (0..r)
                            .map(|c| l.int(c, "integer"))
                            .collect::<Result<Vec<i64>, _>>()?,
                    );
                }
                matrix = Some(rows);
                k += r;
            }
            "pick-h" => {
                let i: usize = line.int(1, "Cartan index")?;
                let j: usize = line.int(2, "Cartan index")?;
                line.arity(3)?;
                if i == 0 || j == 0 {
                    return Err(line.err(1, "Cartan indices start at 1").into());
                }
                picks = (i - 1, j - 1);
            }
            w => {
                let (index, sign) =
                    parse_x(w).ok_or_else(|| line.err(0, format!("unknown directive `{w}`")))?;
                if line.word(1, "`:`")? != ":" {
                    return Err(line.err(1, "expected `:`").into());
                }
                let g = line.word(2, "generator name")?;
                let generator = p
                    .generator_index(g)
                    .ok_or_else(|| line.err(2, format!("unknown generator `{g}`")))?;
                if line.word(3, "`->`")? != "->" {
                    return Err(line.err(3, "expected `->`").into());
                }
                let column = line
                    .words
                    .get(4)
                    .map(|w| w.0)
                    .ok_or_else(|| line.err(4, "missing image"))?;
                let image_text: String = line.text.chars().skip(column - 1).collect();
                let image = parse_expression_at(&image_text, p, line.number, column)?;
                rules.push(ActionRule {
                    index,
                    sign,
                    generator,
                    image,
                });
            }
        }
        k += 1;
    }
    let matrix = matrix.ok_or_else(|| ParseError::new(1, 1, "missing `cartan <rank>` block"))?;
    let cartan = CartanData::new(matrix, picks).map_err(|e| LoadError::Invalid(e.to_string()))?;
    let action =
        GeneratorAction::new(cartan, p, rules).map_err(|e| LoadError::Invalid(e.to_string()))?;
    Ok(SymmetryFile { action })
}

pub fn render_symmetry(file: &SymmetryFile) -> String {
    let a = &file.action;
    let cd = a.cartan();
    let p = a.presentation();
    let mut out = format!("cartan {}\n", cd.rank());
    for row in cd.matrix() {
        out += &row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        out.push('\n');
    }
    out += &format!("pick-h {} {}\n", cd.picks().0 + 1, cd.picks().1 + 1);
    for i in 0..cd.rank() {
        for sign in Sign::both() {
            for g in 0..p.len() {
                let image: &Element = a.image(i, sign, g);
                if !image.is_zero() {
                    let x = Symbol::X(i, sign).to_string().to_lowercase();
                    out += &format!("{x} : {} -> {image}\n", p.generators()[g].name);
                }
            }
        }
    }
    out
}
