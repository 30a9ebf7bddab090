//! Library half of the `certiroot` binary: argument types, input parsing, report types and the
//! command dispatcher.

pub mod args;
pub mod dto;
pub mod error;
pub mod input;
pub mod report;

use std::str::FromStr;

use certiroot::errbounds::{
    eval_tolerance, lipschitz_constant, perturbation_bound, small_value_threshold, ApproxContext,
};
use certiroot::rational::{pow2, to_fraction_string, Rational};
use certiroot::rootenum::{intersect, root_enum_coeffs};
use certiroot::spectrum::{default_schedule, interleave, y_bits_per_stage, BitString, StageSchedule, DEFAULT_BIT_BUDGET};
use certiroot::sturm::{cauchy_bound, SturmChain};
use certiroot::{Polynomial, PrecisionParams, Threshold};

use args::{BoundsArgs, Cli, Command, Format, IntersectArgs, Precision, RootsArgs, SpectrumArgs, SturmArgs};
use dto::CandidateListDto;
use error::CliError;
use input::{parse_rational, read_poly_file, read_text, PolyFile};
use report::{BoundsReport, EnumReport, IntervalCount, Report, SpectrumReport, SturmReport, ThresholdDto, ThresholdSource};

pub const FORMAT_VERSION: u32 = 1;

const HEURISTIC_WARNING: &str =
    "no roots or separation block: threshold defaults to 2^-dr and the 6d^2 length bound is heuristic";

/// Runs one command and renders its report.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let report = execute(&cli.command)?;
    Ok(match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    })
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Roots(a) => roots(a).map(Report::Enum),
        Command::Intersect(a) => intersection(a).map(Report::Enum),
        Command::Sturm(a) => sturm(a).map(Report::Sturm),
        Command::Bounds(a) => bounds(a).map(Report::Bounds),
        Command::Spectrum(a) => spectrum(a).map(Report::Spectrum),
    }
}

fn fractions(coeffs: &[Rational]) -> Vec<String> {
    coeffs.iter().map(to_fraction_string).collect()
}

fn explicit_threshold(p: &Precision) -> Result<Option<Threshold>, CliError> {
    p.threshold.as_deref().map(|s| Ok(Threshold::new(parse_rational("threshold", s)?)?)).transpose()
}

fn default_threshold(d: usize, r: u32) -> Threshold {
    Threshold::new(pow2(-(d.max(1) as i64) * i64::from(r))).expect("powers of two are positive")
}

fn roots(a: &RootsArgs) -> Result<EnumReport, CliError> {
    let file: PolyFile = read_poly_file(&a.poly)?;
    let r = a.precision.precision;
    let d = file.coeffs.len() - 1;
    let poly = Polynomial::new(file.coeffs.clone());
    let mut warnings = Vec::new();
    let (gamma, source) = match (explicit_threshold(&a.precision)?, file.effective_separation()) {
        (Some(g), _) => (g, ThresholdSource::Explicit),
        (None, Some(sep)) => {
            let ctx = ApproxContext::new(r, d.max(1))?;
            (small_value_threshold(&poly, &sep, &ctx, file.rootless_floor.as_ref())?, ThresholdSource::Separation)
        }
        (None, None) => {
            warnings.push(HEURISTIC_WARNING.to_string());
            (default_threshold(d, r), ThresholdSource::Default)
        }
    };
    let params = PrecisionParams { r, gamma };
    let list = root_enum_coeffs(&file.coeffs, &params)?;
    Ok(EnumReport {
        format: FORMAT_VERSION,
        command: "roots".into(),
        polynomial: fractions(&file.coeffs),
        polynomial_text: poly.to_string(),
        precision: r,
        threshold: ThresholdDto { value: to_fraction_string(params.gamma.gamma()), source },
        warnings,
        result: CandidateListDto::from(&list),
    })
}

fn intersection(a: &IntersectArgs) -> Result<EnumReport, CliError> {
    let pa = Polynomial::new(read_poly_file(&a.a)?.coeffs);
    let pb = Polynomial::new(read_poly_file(&a.b)?.coeffs);
    let r = a.precision.precision;
    let diff = &pa - &pb;
    let mut warnings = Vec::new();
    let (gamma, source) = match explicit_threshold(&a.precision)? {
        Some(g) => (g, ThresholdSource::Explicit),
        None => {
            if diff.degree().unwrap_or(0) > 0 {
                warnings.push(HEURISTIC_WARNING.to_string());
            }
            (default_threshold(diff.degree().unwrap_or(1), r), ThresholdSource::Default)
        }
    };
    let params = PrecisionParams { r, gamma };
    let list = intersect(&pa, &pb, &params)?;
    Ok(EnumReport {
        format: FORMAT_VERSION,
        command: "intersect".into(),
        polynomial: fractions(diff.coeffs()),
        polynomial_text: diff.to_string(),
        precision: r,
        threshold: ThresholdDto { value: to_fraction_string(params.gamma.gamma()), source },
        warnings,
        result: CandidateListDto::from(&list),
    })
}

fn sturm(a: &SturmArgs) -> Result<SturmReport, CliError> {
    let poly = Polynomial::new(read_poly_file(&a.poly)?.coeffs);
    let chain = SturmChain::new(&poly)?;
    let intervals = if a.interval.is_empty() {
        let beta = cauchy_bound(&poly)?;
        vec![(-beta.clone(), beta)]
    } else {
        a.interval
            .chunks(2)
            .map(|w| Ok((parse_rational("interval", &w[0])?, parse_rational("interval", &w[1])?)))
            .collect::<Result<Vec<_>, CliError>>()?
    };
    let counts = intervals
        .iter()
        .map(|(lo, hi)| {
            Ok(IntervalCount {
                lo: to_fraction_string(lo),
                hi: to_fraction_string(hi),
                count: chain.count_roots(lo, hi)?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(SturmReport {
        format: FORMAT_VERSION,
        command: "sturm".into(),
        chain: chain.polys().iter().map(|p| fractions(p.coeffs())).collect(),
        chain_text: chain.polys().iter().map(|p| p.to_string()).collect(),
        counts,
    })
}

fn bounds(a: &BoundsArgs) -> Result<BoundsReport, CliError> {
    let poly = Polynomial::new(read_poly_file(&a.poly)?.coeffs);
    let x = parse_rational("x", &a.x)?;
    let d = poly.degree_at_least(1)?;
    let ctx = ApproxContext::new(a.precision, d)?;
    Ok(BoundsReport {
        format: FORMAT_VERSION,
        command: "bounds".into(),
        x: to_fraction_string(&x),
        precision: a.precision,
        lipschitz_constant: to_fraction_string(&lipschitz_constant(&poly)),
        cauchy_bound: to_fraction_string(&cauchy_bound(&poly)?),
        eval_tolerance: to_fraction_string(&eval_tolerance(&poly, &x, a.precision)?),
        perturbation_bound: to_fraction_string(&perturbation_bound(&x, &ctx)),
    })
}

fn read_bits(path: &std::path::Path) -> Result<BitString, CliError> {
    let text = read_text(path)?;
    BitString::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn spectrum(a: &SpectrumArgs) -> Result<SpectrumReport, CliError> {
    let s = parse_rational("s", &a.s)?;
    let sched = match &a.stages {
        Some(stages) => StageSchedule::new(stages.clone(), s)?,
        None => default_schedule(a.stage_count, s, DEFAULT_BIT_BUDGET)?,
    };
    let y = read_bits(&a.y)?;
    let coeffs = a.coeffs.iter().map(|p| read_bits(p)).collect::<Result<Vec<_>, _>>()?;
    let total = usize::try_from(sched.total_len()).map_err(|_| CliError::Parse("schedule too long".into()))?;
    let n = a.length.unwrap_or(total);
    let bits = interleave(&y, &coeffs, &sched, n)?;
    Ok(SpectrumReport {
        format: FORMAT_VERSION,
        command: "spectrum".into(),
        stages: sched.stages().to_vec(),
        s: to_fraction_string(sched.s()),
        length: n,
        y_bits_per_stage: y_bits_per_stage(&sched),
        bits: bits.to_string(),
    })
}
