use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num::BigRational;

use crate::algebra::{
    check_associativity, check_involution, check_star_associativity, check_star_product, Element,
    GradedPresentation, Quantization,
};
use crate::calculus::{check_calculus, check_form_action, sample_forms, TwistedFormAction};
use crate::check::{CheckEntry, Status};
use crate::sampling::SampleSpec;
use crate::spectral::{
    check_boundedness_and_isospectrality, check_crossproduct_equivariance, check_isometry,
    check_relations, check_representation, SpectralModel,
};
use crate::symmetry::{
    check_lie_relations, check_serre, CartanData, GeneratorAction, OpWord, Symbol,
};
use crate::twist::{
    check_hopf_axioms, check_module_algebra, check_r_matrix, check_star_compat, check_twist,
    generator_symbols, HopfStructure, Twist, TwistedAction,
};

use super::bundled;
use super::files::{parse_presentation, parse_symmetry, PresentationFile};
use super::{CheckReport, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Hopf,
    Calculus,
    Spectral,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Hopf => "hopf",
            Suite::Calculus => "calculus",
            Suite::Spectral => "spectral",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "algebra" => Suite::Algebra,
            "hopf" => Suite::Hopf,
            "calculus" => Suite::Calculus,
            "spectral" => Suite::Spectral,
            "all" => Suite::All,
            _ => {
                return Err(CliError::Usage(format!(
                    "unknown suite `{s}` (algebra, hopf, calculus, spectral, all)"
                )))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub sample: SampleSpec,
    pub cutoff: i64,
    pub theta: BigRational,
    /// Record wall time in the report (makes it nondeterministic).
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            sample: SampleSpec::default(),
            cutoff: 8,
            theta: BigRational::new(1.into(), 5.into()),
            timing: false,
        }
    }
}

/// A named input file's contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Input {
    pub name: String,
    pub text: String,
}

impl Input {
    /// Reads `path`, falling back to a bundled fixture of the same file name
    /// (`T2.alg`, `C3.alg`, `A2.sym`) when no such file exists.
    pub fn load(path: &str) -> Result<Self, CliError> {
        match std::fs::read_to_string(path) {
            Ok(text) => Ok(Self {
                name: path.to_string(),
                text,
            }),
            Err(e) => {
                let file = std::path::Path::new(path)
                    .file_name()
                    .and_then(|f| f.to_str())
                    .unwrap_or(path);
                match bundled::text(file) {
                    Some(text) if !std::path::Path::new(path).exists() => Ok(Self {
                        name: file.to_string(),
                        text: text.to_string(),
                    }),
                    _ => Err(CliError::Io(format!("{path}: {e}"))),
                }
            }
        }
    }

    fn bundled(name: &str) -> Self {
        Self {
            name: name.to_string(),
            text: bundled::text(name).expect("bundled fixture").to_string(),
        }
    }

    fn is_symmetry(&self) -> bool {
        if self.name.ends_with(".sym") {
            return true;
        }
        if self.name.ends_with(".alg") {
            return false;
        }
        let first = self
            .text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty());
        first.is_some_and(|l| l.starts_with("cartan"))
    }
}

struct Resolved {
    presentations: Vec<(String, PresentationFile)>,
    symmetry: Option<Input>,
}

fn load_presentation(input: &Input) -> Result<(String, PresentationFile), CliError> {
    parse_presentation(&input.text)
        .map(|p| (input.name.clone(), p))
        .map_err(|error| CliError::Load {
            file: input.name.clone(),
            error,
        })
}

fn resolve(inputs: &[Input]) -> Result<Resolved, CliError> {
    let mut presentations = Vec::new();
    let mut symmetry = None;
    for input in inputs {
        if input.is_symmetry() {
            if symmetry.is_some() {
                return Err(CliError::Usage(
                    "at most one symmetry file may be given".into(),
                ));
            }
            symmetry = Some(input.clone());
        } else {
            presentations.push(load_presentation(input)?);
        }
    }
    Ok(Resolved {
        presentations,
        symmetry,
    })
}

/// Presentation plus classical action for the symmetry-level suites.
fn symmetric_setup(r: &Resolved) -> Result<(Vec<String>, GeneratorAction), CliError> {
    let (name, file) = match r.presentations.first() {
        Some(p) => p.clone(),
        None => load_presentation(&Input::bundled("C3.alg"))?,
    };
    let sym = match (&r.symmetry, r.presentations.is_empty()) {
        (Some(s), _) => Some(s.clone()),
        (None, true) => Some(Input::bundled("A2.sym")),
        (None, false) => None,
    };
    let mut names = vec![name];
    let action = match sym {
        Some(s) => {
            names.push(s.name.clone());
            parse_symmetry(&s.text, &file.source)
                .map_err(|error| CliError::Load {
                    file: s.name.clone(),
                    error,
                })?
                .action
        }
        None => GeneratorAction::new(CartanData::a2(), &file.source, [])
            .map_err(|e| CliError::Usage(e.to_string()))?,
    };
    Ok((names, action))
}

fn expect_failure(id: &str, entries: &[CheckEntry], why: &str) -> CheckEntry {
    match entries.iter().find(|e| e.status == Status::Fail) {
        Some(_) => CheckEntry::pass(id),
        None => CheckEntry::fail(id, why),
    }
}

fn algebra_entries(
    presentations: &[(String, PresentationFile)],
    spec: &SampleSpec,
) -> Vec<CheckEntry> {
    let mut entries = Vec::new();
    for (_, file) in presentations {
        let q = Quantization::new(&file.source);
        let triples = spec.elements(&file.source, 3);
        let lifted: Vec<Vec<Element>> = triples
            .iter()
            .map(|t| {
                t.iter()
                    .map(|a| q.lift(a).expect("source element"))
                    .collect()
            })
            .collect();
        entries.push(check_associativity(&file.source, &triples));
        entries.push(check_associativity(q.target(), &lifted));
        entries.push(check_star_associativity(&q, &triples));
        entries.push(check_star_product(
            &q,
            &spec.homogeneous_tuples(&file.source, 2),
        ));
        entries.extend(check_involution(&q, &triples));
    }
    entries
}

fn hopf_entries(action: &GeneratorAction, spec: &SampleSpec) -> Vec<CheckEntry> {
    let p = action.presentation();
    let cd = action.cartan().clone();
    let symbols = generator_symbols(&cd, action.has_x());
    let triples = spec.homogeneous_tuples(p, 3);
    let hopf = HopfStructure::twisted(cd.clone());
    let twisted = TwistedAction::new(action.clone());
    let mut entries = check_lie_relations(action, spec.max_degree);
    entries.extend(
        check_serre(action, spec.max_degree)
            .into_iter()
            .filter(|_| action.has_x()),
    );
    entries.extend(check_twist(&Twist::cartan()));
    entries.extend(check_hopf_axioms(&hopf, action, &symbols, &triples));
    entries.extend(check_module_algebra(&twisted, &hopf, &symbols, &triples));
    if action.has_x() {
        let classical =
            check_module_algebra(&twisted, &HopfStructure::classical(cd), &symbols, &triples);
        entries.push(expect_failure(
            "control:module-classical",
            &classical,
            "the untwisted coproduct satisfied the module-algebra identity on every sample",
        ));
    }
    if p.has_involution() {
        entries.extend(check_star_compat(&twisted, &hopf, &symbols, &triples));
    }
    entries.extend(check_r_matrix(
        &Twist::cartan(),
        &hopf,
        action,
        &symbols,
        &triples,
    ));
    entries
}

fn calculus_entries(action: &GeneratorAction, spec: &SampleSpec) -> Vec<CheckEntry> {
    let p = action.presentation();
    let symbols = generator_symbols(action.cartan(), action.has_x());
    let forms = sample_forms(p, spec, 3, 3);
    let tw = TwistedFormAction::new(action.clone());
    let hopf = HopfStructure::twisted(action.cartan().clone());
    let mut entries = check_calculus(&tw, &forms);
    entries.extend(check_form_action(&tw, &hopf, &symbols, &forms));
    entries
}

fn spectral_entries(
    p: &Arc<GradedPresentation>,
    options: &Options,
    report: &mut CheckReport,
) -> Vec<CheckEntry> {
    let n = options.cutoff;
    let cutoffs: Vec<i64> = [n / 2, n, 2 * n].into_iter().filter(|&k| k >= 1).collect();
    report.cutoffs = cutoffs.clone();
    report.theta = Some(options.theta.to_string());
    let model = match SpectralModel::new(p, n, options.theta.clone()) {
        Ok(m) => m,
        Err(e) => return vec![CheckEntry::error("spectral:model", e.to_string())],
    };
    let mut entries = check_isometry(&model);
    let (bounded, summary) = check_boundedness_and_isospectrality(&model, &cutoffs);
    entries.extend(bounded);
    report.spectral = Some(summary);
    entries.push(check_relations(&model));
    // products of two samples must stay within the shift budget
    let spec = SampleSpec {
        max_degree: options.sample.max_degree.min(n as u32 / 2),
        ..options.sample
    };
    entries.extend(check_representation(&model, &spec));
    let torus = GeneratorAction::new(CartanData::a2(), p, []).expect("Cartan-only action is valid");
    let words = [
        OpWord::single(Symbol::H(0)),
        OpWord::single(Symbol::H(1)),
        OpWord(vec![Symbol::H(0), Symbol::H(1)]),
        OpWord::single(Symbol::exp(0, 1)),
        OpWord::single(Symbol::exp(1, -2)),
    ];
    let mut elements = vec![Element::unit(p)];
    elements.extend((0..p.len().min(2)).map(|g| Element::generator(p, g)));
    if p.len() >= 2 {
        elements.push(&Element::generator(p, 0) * &Element::generator(p, 1));
    }
    for w in &words {
        for a in &elements {
            entries.push(check_crossproduct_equivariance(&model, &torus, w, a));
        }
    }
    entries
}

/// Runs `suite` on `inputs` (bundled fixtures stand in for missing ones).
pub fn run_suite(
    suite: Suite,
    inputs: &[Input],
    options: &Options,
) -> Result<CheckReport, CliError> {
    let start = Instant::now();
    let resolved = resolve(inputs)?;
    let spec = &options.sample;
    let mut report = CheckReport::new(suite.name(), Vec::new());
    report.seed = spec.seed;
    report.max_degree = spec.max_degree;
    report.trials = spec.trials;
    let mut names: Vec<String> = Vec::new();
    let mut add_names = |ns: &[String]| {
        for n in ns {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
    };
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let mut entries = Vec::new();
    if wants(Suite::Algebra) {
        let presentations = if resolved.presentations.is_empty() {
            vec![
                load_presentation(&Input::bundled("T2.alg"))?,
                load_presentation(&Input::bundled("C3.alg"))?,
            ]
        } else {
            resolved.presentations.clone()
        };
        add_names(
            &presentations
                .iter()
                .map(|p| p.0.clone())
                .collect::<Vec<_>>(),
        );
        entries.extend(algebra_entries(&presentations, spec));
    }
    if wants(Suite::Hopf) || wants(Suite::Calculus) {
        let (ns, action) = symmetric_setup(&resolved)?;
        add_names(&ns);
        if wants(Suite::Hopf) {
            entries.extend(hopf_entries(&action, spec));
        }
        if wants(Suite::Calculus) {
            entries.extend(calculus_entries(&action, spec));
        }
    }
    if wants(Suite::Spectral) {
        let (name, file) = match resolved.presentations.first() {
            Some(p) => p.clone(),
            None => load_presentation(&Input::bundled("T2.alg"))?,
        };
        add_names(&[name]);
        entries.extend(spectral_entries(&file.source, options, &mut report));
    }
    report.inputs = names;
    report.entries = entries;
    report.finish();
    if options.timing {
        report.wall_time = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}
