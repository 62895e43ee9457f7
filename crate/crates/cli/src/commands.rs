use anyhow::{bail, Context, Result};
use binvert_core::apps::{
    anti_mean, fib_antimean_identity, one_click, polygonal, polygonal_identities_check,
    pyramidal_terms, rbonacci, rbonacci_bell_check, rbonacci_cross_order_check,
    rbonacci_ladder_step, Order2Spec,
};
use binvert_core::operators::{binomial_stream, invert_stream};
use binvert_core::pipeline::{i_construct, i_deconstruct, l_construct, l_deconstruct};
use binvert_core::{Field, FieldSpec, Lrs, Pipeline, Poly, QuadExt, Rat};

use crate::report::{Output, Report, StepReport};
use crate::{tables, Command, Common, Mode, Seq, Suite};

/// Runs `$f::<F>(args…)` with `F` chosen from a [`FieldSpec`].
macro_rules! in_field {
    ($field:expr, $f:ident($($arg:expr),* $(,)?)) => {
        match $field {
            FieldSpec::Rational => $f::<Rat>($($arg),*),
            FieldSpec::Quadratic(_) => $f::<QuadExt>($($arg),*),
        }
    };
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Eval {
            poly,
            init,
            count,
            common,
        } => in_field!(common.field, eval(poly, init.as_deref(), *count, common)),
        Command::Transform {
            pipeline,
            input,
            poly,
            init,
            count,
            left_to_right,
            common,
        } => {
            let args = TransformArgs {
                pipeline,
                input,
                poly: poly.as_deref(),
                init: init.as_deref(),
                count: *count,
                left_to_right: *left_to_right,
            };
            in_field!(common.field, transform(&args, common))
        }
        Command::Construct {
            mode,
            zeros,
            coeffs,
            count,
            common,
        } => {
            let list = match mode {
                Mode::L => zeros.as_deref(),
                Mode::I => coeffs.as_deref(),
            };
            let list = list.context("missing --zeros or --coeffs")?;
            in_field!(common.field, construct(*mode, list, *count, common))
        }
        Command::Deconstruct {
            mode,
            poly,
            zeros,
            count,
            common,
        } => in_field!(
            common.field,
            deconstruct(*mode, poly, zeros.as_deref(), *count, common)
        ),
        Command::Verify { suite } => verify(suite),
        Command::Table { table } => tables::run(table),
        Command::Seq { seq } => sequence(seq),
    }
}

pub fn parse_list<F: Field>(text: &str, field: FieldSpec) -> Result<Vec<F>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            F::parse_in(item.trim(), field)
                .with_context(|| format!("invalid value `{}`", item.trim()))
        })
        .collect()
}

fn parse_poly<F: Field>(text: &str, field: FieldSpec) -> Result<Poly<F>> {
    Poly::parse_in(text, field).with_context(|| format!("invalid polynomial `{text}`"))
}

pub fn strings<F: Field>(v: &[F]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn lrs_from<F: Field>(poly: &str, init: Option<&str>, field: FieldSpec) -> Result<Lrs<F>> {
    let f = parse_poly(poly, field)?;
    let s = match init {
        Some(init) => Lrs::new(f, parse_list(init, field)?)?,
        None => Lrs::impulse(f)?,
    };
    Ok(s)
}

fn eval<F: Field>(poly: &str, init: Option<&str>, count: usize, common: &Common) -> Result<Output> {
    let s: Lrs<F> = lrs_from(poly, init, common.field)?;
    let mut report = Report::new("eval");
    report.terms = strings(&s.terms(count));
    report.char_poly = Some(s.char_poly().to_string());
    Ok(report.render(common.json))
}

struct TransformArgs<'a> {
    pipeline: &'a str,
    input: &'a str,
    poly: Option<&'a str>,
    init: Option<&'a str>,
    count: usize,
    left_to_right: bool,
}

enum Input<F: Field> {
    Lrs(Lrs<F>),
    Literal(Vec<F>),
}

fn parse_input<F: Field>(args: &TransformArgs, field: FieldSpec) -> Result<Input<F>> {
    if let Some(poly) = args.poly {
        return Ok(Input::Lrs(lrs_from(poly, args.init, field)?));
    }
    let input = args.input.trim();
    if input == "startsequence" {
        Ok(Input::Lrs(Lrs::startsequence()))
    } else if let Some(poly) = input.strip_prefix("impulse:") {
        Ok(Input::Lrs(lrs_from(poly, None, field)?))
    } else if let Some(list) = input.strip_prefix("literal:") {
        Ok(Input::Literal(parse_list(list, field)?))
    } else {
        bail!("unknown input `{input}`; expected startsequence, impulse:<poly> or literal:<list>")
    }
}

fn transform<F: Field>(args: &TransformArgs, common: &Common) -> Result<Output> {
    let field = common.field;
    let pipeline: Pipeline<F> = if args.left_to_right {
        Pipeline::parse_left_to_right(args.pipeline, field)
    } else {
        Pipeline::parse_in(args.pipeline, field)
    }
    .with_context(|| format!("invalid pipeline `{}`", args.pipeline))?;
    let mut report = Report::new("transform");
    report.pipeline = Some(pipeline.to_string());
    match parse_input::<F>(args, field)? {
        Input::Lrs(s) => {
            let trace = pipeline.trace(&s);
            report.steps = trace
                .states
                .iter()
                .map(|(step, state)| StepReport {
                    op: step.to_string(),
                    char_poly: Some(state.char_poly().to_string()),
                })
                .collect();
            report.terms = strings(&trace.output().terms(args.count));
            report.char_poly = Some(trace.output().char_poly().to_string());
        }
        Input::Literal(a) => {
            let mut current = a;
            for step in pipeline.steps() {
                current = step.apply_stream(&current);
                report.steps.push(StepReport {
                    op: step.to_string(),
                    char_poly: None,
                });
            }
            current.truncate(args.count);
            report.terms = strings(&current);
        }
    }
    Ok(report.render(common.json))
}

fn trace_report<F: Field>(
    command: &str,
    pipeline: &Pipeline<F>,
    start: &Lrs<F>,
    target: &Lrs<F>,
    count: usize,
) -> Report {
    let trace = pipeline.trace(start);
    let mut report = Report::new(command);
    report.pipeline = Some(pipeline.to_string());
    report.steps = trace
        .states
        .iter()
        .map(|(step, state)| StepReport {
            op: step.to_string(),
            char_poly: Some(state.char_poly().to_string()),
        })
        .collect();
    report.terms = strings(&trace.output().terms(count));
    report.char_poly = Some(trace.output().char_poly().to_string());
    report.ok = trace.output() == target;
    report
}

fn construct<F: Field>(mode: Mode, list: &str, count: usize, common: &Common) -> Result<Output> {
    let values: Vec<F> = parse_list(list, common.field)?;
    if values.is_empty() {
        bail!("need at least one value");
    }
    let (pipeline, target) = match mode {
        Mode::L => (l_construct(&values), Poly::from_roots(&values)),
        Mode::I => {
            // t^r − h_1 t^{r−1} − … − h_r
            let mut coeffs: Vec<F> = values.iter().rev().map(|h| -h.clone()).collect();
            coeffs.push(F::one());
            (i_construct(&values), Poly::new(coeffs))
        }
    };
    let target = Lrs::impulse(target)?;
    let report = trace_report(
        "construct",
        &pipeline,
        &Lrs::startsequence(),
        &target,
        count,
    );
    Ok(report.render(common.json))
}

fn deconstruct<F: Field>(
    mode: Mode,
    poly: &str,
    zeros: Option<&str>,
    count: usize,
    common: &Common,
) -> Result<Output> {
    let s: Lrs<F> = Lrs::impulse(parse_poly(poly, common.field)?)?;
    let pipeline = match mode {
        Mode::L => {
            let zeros: Vec<F> = parse_list(zeros.context("L mode needs --zeros")?, common.field)?;
            l_deconstruct(&s, &zeros)?
        }
        Mode::I => i_deconstruct(&s)?,
    };
    let report = trace_report("deconstruct", &pipeline, &s, &Lrs::startsequence(), count);
    Ok(report.render(common.json))
}

fn verify(suite: &Suite) -> Result<Output> {
    match suite {
        Suite::FibAntimean { n, output } => {
            let mut report = Report::new("verify fib-antimean");
            for m in 0..=*n {
                report.check(
                    format!("sum binom(2n,i) (-1/2)^(2n-i) F_i = 0 at n = {m}"),
                    fib_antimean_identity(m).is_zero(),
                );
            }
            let fib = Order2Spec::new(Rat::from(0), Rat::from(1), Rat::from(1), Rat::from(-1));
            let len = 2 * n + 2;
            let stream = binomial_stream(&fib.lrs().terms(len), &fib.anti_mean_param());
            report.check(
                "anti-mean closed form for Fibonacci",
                anti_mean(&fib, len) == stream,
            );
            Ok(report.render(output.json))
        }
        Suite::RbonacciLadder { r, count, output } => {
            if *r == 0 {
                bail!("--r must be at least 1");
            }
            let mut report = Report::new("verify rbonacci-ladder");
            let u: Vec<Rat> = Lrs::startsequence().terms(*count);
            report.check(
                "I(u) = F^(1)",
                invert_stream(&u, &Rat::one()) == rbonacci::<Rat>(1, *count),
            );
            let bell_n = count.saturating_sub(1).min(12);
            for k in 1..=*r {
                report.check(
                    format!("I(rho(F^({k}))) = F^({})", k + 1),
                    rbonacci_ladder_step(k, *count),
                );
                report.check(
                    format!("Bell identity for F^({})", k + 1),
                    rbonacci_bell_check(k, bell_n),
                );
                report.check(
                    format!("cross-order recurrence for F^({})", k + 1),
                    rbonacci_cross_order_check(k + 1, *count),
                );
            }
            Ok(report.render(output.json))
        }
        Suite::Polygonal { q, count, output } => {
            let mut report = Report::new("verify polygonal");
            report.check(
                format!("L^(1) identities for P_{q} over {count} terms"),
                polygonal_identities_check(*q, *count)?,
            );
            let qi = *q as i64;
            let half = |v: i64| Rat::new(v, 2).expect("nonzero");
            let p = Poly::new(vec![Rat::zero(), half(4 - qi), half(qi - 2)]);
            let oc = one_click(&p, *count);
            let mut expected = vec![Rat::zero(); *count];
            for (i, v) in [0, 1, qi - 2].into_iter().enumerate().take(*count) {
                expected[i] = Rat::from(v);
            }
            report.check(
                "one-click deconstruction gives (0, 1, q-2, 0, ...)",
                oc.holds() && oc.deconstructed == expected,
            );
            let linear: Vec<Rat> = pyramidal_terms(*q, 1, *count)?;
            let mut running = Rat::zero();
            let sums: Vec<Rat> = linear
                .iter()
                .map(|v| {
                    running = running.clone() + v.clone();
                    running.clone()
                })
                .collect();
            let closed: Vec<Rat> = (0..*count as u64)
                .map(|n| polygonal(*q, n))
                .collect::<Result<_, _>>()?;
            report.check("closed form equals partial sums", sums == closed);
            Ok(report.render(output.json))
        }
    }
}

fn sequence(seq: &Seq) -> Result<Output> {
    let (command, terms, json) = match seq {
        Seq::Polygonal { q, count, output } => {
            let terms: Vec<Rat> = (0..*count as u64)
                .map(|n| polygonal(*q, n))
                .collect::<Result<_, _>>()?;
            ("seq polygonal", terms, output.json)
        }
        Seq::Pyramidal {
            q,
            d,
            count,
            output,
        } => (
            "seq pyramidal",
            pyramidal_terms(*q, *d, *count)?,
            output.json,
        ),
        Seq::Rbonacci { r, count, output } => {
            if *r == 0 {
                bail!("--r must be at least 1");
            }
            ("seq rbonacci", rbonacci(*r, *count), output.json)
        }
    };
    let mut report = Report::new(command);
    report.terms = strings(&terms);
    Ok(report.render(json))
}
