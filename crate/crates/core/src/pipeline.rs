//! Operator pipelines and the construction/deconstruction calculus for
//! impulse sequences.
//!
//! A [`Pipeline`] stores its steps in application order. Its text form uses
//! function-composition notation instead, so the rightmost step runs first:
//! `I(1) . rho . I(1)` means `I(ρ(I(a)))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Field, FieldSpec};
use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::lrs::Lrs;
use crate::operators::OperatorStep;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pipeline<F: Field> {
    steps: Vec<OperatorStep<F>>,
}

impl<F: Field> Default for Pipeline<F> {
    fn default() -> Self {
        Pipeline { steps: Vec::new() }
    }
}

/// Every intermediate sequence of a pipeline run on an [`Lrs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace<F: Field> {
    pub input: Lrs<F>,
    pub states: Vec<(OperatorStep<F>, Lrs<F>)>,
}

impl<F: Field> Trace<F> {
    pub fn output(&self) -> &Lrs<F> {
        self.states.last().map_or(&self.input, |(_, s)| s)
    }
}

impl<F: Field> Pipeline<F> {
    /// Steps in application order.
    pub fn new(steps: Vec<OperatorStep<F>>) -> Self {
        Pipeline { steps }
    }

    pub fn steps(&self) -> &[OperatorStep<F>] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// The pipeline that undoes this one, for pipelines built from `L`, `I`,
    /// and `ρ` steps on impulse sequences.
    pub fn inverse(&self) -> Self {
        Pipeline {
            steps: self.steps.iter().rev().map(OperatorStep::inverse).collect(),
        }
    }

    pub fn apply(&self, s: &Lrs<F>) -> Lrs<F> {
        self.steps
            .iter()
            .fold(s.clone(), |acc, step| step.apply_lrs(&acc))
    }

    /// Apply and keep the sequence after every step.
    pub fn trace(&self, s: &Lrs<F>) -> Trace<F> {
        let mut states = Vec::with_capacity(self.steps.len());
        let mut current = s.clone();
        for step in &self.steps {
            current = step.apply_lrs(&current);
            states.push((step.clone(), current.clone()));
        }
        Trace {
            input: s.clone(),
            states,
        }
    }

    /// Apply to a finite prefix. `σ` shortens and `ρ` lengthens it by one.
    pub fn apply_stream(&self, a: &[F]) -> Vec<F> {
        self.steps
            .iter()
            .fold(a.to_vec(), |acc, step| step.apply_stream(&acc))
    }

    /// Parse composition notation (rightmost step applied first).
    pub fn parse_in(text: &str, field: FieldSpec) -> Result<Self> {
        let mut steps = parse_steps(text, field)?;
        steps.reverse();
        Ok(Pipeline { steps })
    }

    /// Parse with steps listed in application order.
    pub fn parse_left_to_right(text: &str, field: FieldSpec) -> Result<Self> {
        Ok(Pipeline {
            steps: parse_steps(text, field)?,
        })
    }
}

impl<F: Field> fmt::Display for Pipeline<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("id");
        }
        for (i, step) in self.steps.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" . ")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

fn parse_steps<F: Field>(text: &str, field: FieldSpec) -> Result<Vec<OperatorStep<F>>> {
    if text.trim().is_empty() || text.trim() == "id" {
        return Ok(Vec::new());
    }
    let mut steps = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse(i, "unbalanced `)`"))?
            }
            '.' if depth == 0 => {
                steps.push(parse_step(&text[start..i], start, field)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::parse(text.len(), "unclosed `(`"));
    }
    steps.push(parse_step(&text[start..], start, field)?);
    Ok(steps)
}

fn parse_step<F: Field>(raw: &str, offset: usize, field: FieldSpec) -> Result<OperatorStep<F>> {
    let lead = raw.len() - raw.trim_start().len();
    let pos = offset + lead;
    let s = raw.trim();
    match s {
        "" => return Err(Error::parse(pos, "empty step")),
        "sigma" => return Ok(OperatorStep::Sigma),
        "rho" => return Ok(OperatorStep::Rho),
        _ => {}
    }
    let (name, rest) = s.split_at(s.find('(').unwrap_or(s.len()));
    let make: fn(F) -> OperatorStep<F> = match name.trim() {
        "I" => OperatorStep::Invert,
        "L" => OperatorStep::Binomial,
        other => return Err(Error::parse(pos, format!("unknown operator `{other}`"))),
    };
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(pos, format!("`{name}` needs a parenthesised parameter")))?;
    let inner_pos = pos + name.len() + 1;
    F::parse_in(inner, field)
        .map(make)
        .map_err(|e| e.offset(inner_pos))
}

/// JSON form of one step: `{"op": "I", "param": "1"}` or `{"op": "rho"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub op: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
}

impl StepDoc {
    pub fn from_step<F: Field>(step: &OperatorStep<F>) -> Self {
        StepDoc {
            op: step.name().to_string(),
            param: step.param().map(ToString::to_string),
        }
    }

    pub fn to_step<F: Field>(&self, field: FieldSpec) -> Result<OperatorStep<F>> {
        let param = || -> Result<F> {
            let p = self
                .param
                .as_deref()
                .ok_or_else(|| Error::InvalidParameter(format!("`{}` needs a param", self.op)))?;
            F::parse_in(p, field)
        };
        match (self.op.as_str(), &self.param) {
            ("sigma", None) => Ok(OperatorStep::Sigma),
            ("rho", None) => Ok(OperatorStep::Rho),
            ("I", _) => Ok(OperatorStep::Invert(param()?)),
            ("L", _) => Ok(OperatorStep::Binomial(param()?)),
            ("sigma" | "rho", Some(_)) => Err(Error::InvalidParameter(format!(
                "`{}` takes no parameter",
                self.op
            ))),
            (other, _) => Err(Error::InvalidParameter(format!(
                "unknown operator `{other}`"
            ))),
        }
    }
}

/// JSON array form, in application order.
pub fn pipeline_to_docs<F: Field>(p: &Pipeline<F>) -> Vec<StepDoc> {
    p.steps.iter().map(StepDoc::from_step).collect()
}

pub fn pipeline_from_docs<F: Field>(docs: &[StepDoc], field: FieldSpec) -> Result<Pipeline<F>> {
    docs.iter()
        .map(|d| d.to_step(field))
        .collect::<Result<Vec<_>>>()
        .map(Pipeline::new)
}

/// Increments `z_1 … z_r` of the L-construction for the given zeros: the
/// last step's parameter is `zeros[0]`, and each earlier one adds the gap to
/// the next zero, so `z_r + … + z_{r−j} = zeros[j]`.
pub fn l_construct_params<F: Field>(zeros: &[F]) -> Vec<F> {
    let r = zeros.len();
    let mut z = vec![F::zero(); r];
    if r == 0 {
        return z;
    }
    z[r - 1] = zeros[0].clone();
    for j in 1..r {
        z[r - 1 - j] = zeros[j].clone() - zeros[j - 1].clone();
    }
    z
}

/// Pipeline `L(z_1), ρ, L(z_2), …, ρ, L(z_r)` taking the startsequence to the
/// impulse sequence with characteristic polynomial `Π (t − α)` over `zeros`.
/// Identity steps `L(0)` are omitted.
pub fn l_construct<F: Field>(zeros: &[F]) -> Pipeline<F> {
    let z = l_construct_params(zeros);
    let mut steps = Vec::new();
    for (k, zk) in z.into_iter().enumerate() {
        if k > 0 {
            steps.push(OperatorStep::Rho);
        }
        if !zk.is_zero() {
            steps.push(OperatorStep::Binomial(zk));
        }
    }
    Pipeline::new(steps)
}

/// Pipeline `L(−z_r), σ, L(−z_{r−1}), …, σ, L(−z_1)` reducing the impulse
/// sequence `s` to the startsequence. `zeros` must be the zeros of `s`'s
/// characteristic polynomial; the result is checked by application.
pub fn l_deconstruct<F: Field>(s: &Lrs<F>, zeros: &[F]) -> Result<Pipeline<F>> {
    if !s.is_impulse() {
        return Err(Error::NotImpulse);
    }
    if Poly::from_roots(zeros) != *s.char_poly() {
        return Err(Error::ZerosMismatch);
    }
    let pipe = l_construct(zeros).inverse();
    verify_reaches_start(&pipe, s)?;
    Ok(pipe)
}

/// Pipeline `I(h_1), ρ, I(h_2), …, ρ, I(h_r)` taking the startsequence to the
/// impulse sequence of `t^r − h_1 t^{r−1} − … − h_r`. Identity steps `I(0)`
/// are omitted.
pub fn i_construct<F: Field>(h: &[F]) -> Pipeline<F> {
    let mut steps = Vec::new();
    for (k, hk) in h.iter().enumerate() {
        if k > 0 {
            steps.push(OperatorStep::Rho);
        }
        if !hk.is_zero() {
            steps.push(OperatorStep::Invert(hk.clone()));
        }
    }
    Pipeline::new(steps)
}

/// Pipeline `I(−h_r), σ, …, σ, I(−h_1)` reducing an impulse sequence to the
/// startsequence.
pub fn i_deconstruct<F: Field>(s: &Lrs<F>) -> Result<Pipeline<F>> {
    if !s.is_impulse() {
        return Err(Error::NotImpulse);
    }
    let pipe = i_construct(&s.recurrence_coeffs()).inverse();
    verify_reaches_start(&pipe, s)?;
    Ok(pipe)
}

fn verify_reaches_start<F: Field>(pipe: &Pipeline<F>, s: &Lrs<F>) -> Result<()> {
    if pipe.apply(s) == Lrs::startsequence() {
        Ok(())
    } else {
        Err(Error::ZerosMismatch)
    }
}

/// `v^{(k)}_n` after `k` L-construction steps with parameters
/// `z = (z_1, …, z_k)`, evaluated as the explicit nested binomial sum
/// over `n ≥ h_{k−1} > h_{k−2} > … > h_1 ≥ 1`.
pub fn v_explicit<F: Field>(z: &[F], n: u64) -> Result<F> {
    let k = z.len();
    if k == 0 {
        return Err(Error::InvalidParameter(
            "need at least one parameter".into(),
        ));
    }
    if k == 1 {
        return Ok(z[0].pow(n));
    }
    // level j sums over h_j given h_{j+1} = upper
    fn level<F: Field>(z: &[F], j: usize, upper: u64) -> F {
        let mut acc = F::zero();
        for h in j as u64..upper {
            let weight = F::from_int(binomial(upper as i64 - 1, h)) * z[j].pow(upper - h - 1);
            let rest = if j == 1 {
                z[0].pow(h - 1)
            } else {
                level(z, j - 1, h)
            };
            acc = acc + weight * rest;
        }
        acc
    }
    let mut acc = F::zero();
    for h in (k as u64 - 1)..=n {
        let weight = F::from_int(binomial(n as i64, h)) * z[k - 1].pow(n - h);
        let rest = if k == 2 {
            z[0].pow(h - 1)
        } else {
            level(z, k - 2, h)
        };
        acc = acc + weight * rest;
    }
    Ok(acc)
}
