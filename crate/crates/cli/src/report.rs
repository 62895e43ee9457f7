use serde::Serialize;

/// JSON report shared by every sequence-producing command.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub steps: Vec<StepReport>,
    pub terms: Vec<String>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pipeline: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StepReport {
    pub op: String,
    /// `None` when the step acted on a bare list of terms.
    pub char_poly: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub ok: bool,
}

/// What `main` prints, and whether the process should exit with success.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            steps: Vec::new(),
            terms: Vec::new(),
            ok: true,
            pipeline: None,
            char_poly: None,
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.ok &= ok;
        self.checks.push(CheckReport {
            name: name.into(),
            ok,
        });
    }

    pub fn render(&self, json: bool) -> Output {
        let text = if json {
            let mut s = serde_json::to_string_pretty(self).expect("report serializes");
            s.push('\n');
            s
        } else {
            self.text()
        };
        Output { text, ok: self.ok }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        if let Some(p) = &self.pipeline {
            out.push_str(&format!("pipeline: {p}\n"));
        }
        let width = self.steps.iter().map(|s| s.op.len()).max().unwrap_or(0);
        for (i, step) in self.steps.iter().enumerate() {
            let poly = step.char_poly.as_deref().unwrap_or("-");
            out.push_str(&format!("step {}: {:<width$}  {poly}\n", i + 1, step.op));
        }
        if !self.terms.is_empty() {
            out.push_str(&format!("terms: {}\n", self.terms.join(", ")));
        }
        if let Some(p) = &self.char_poly {
            out.push_str(&format!("char_poly: {p}\n"));
        }
        for c in &self.checks {
            let mark = if c.ok { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {}\n", c.name));
        }
        if !self.checks.is_empty() {
            let passed = self.checks.iter().filter(|c| c.ok).count();
            out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        }
        out
    }
}
