//! Report types: the constants ladder and the inequality verdicts, with
//! JSON and aligned-table rendering.

use crate::Result;

/// One named constant with its defining expression.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ConstantEntry {
    pub name: String,
    pub value: f64,
    /// Defining expression in the parameters, spelled out so a report is
    /// auditable without the source.
    pub definition: String,
}

/// Verdict of one inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    /// Observed value satisfies the bound.
    Satisfied,
    /// Observed value violates the bound.
    Violated,
    /// No observed value was supplied, or a precondition (compactness,
    /// connectedness, genus threshold) does not apply.
    NotChecked,
    /// The inequality holds trivially (e.g. area bounds on a non-compact
    /// surface of infinite area).
    Vacuous,
}

/// One inequality: its bound value, the observed quantity when available,
/// and the verdict.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct InequalityEntry {
    pub name: String,
    /// The inequality spelled out in the named constants.
    pub definition: String,
    pub bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<f64>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Full report: the constants ladder plus the inequality verdicts.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct BoundsReport {
    pub constants: Vec<ConstantEntry>,
    pub inequalities: Vec<InequalityEntry>,
}

impl BoundsReport {
    pub fn violated(&self) -> bool {
        self.inequalities
            .iter()
            .any(|entry| entry.status == CheckStatus::Violated)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self)
            .map_err(|e| crate::Error::Parse(format!("report serialization failed: {e}")))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| crate::Error::Parse(format!("report deserialization failed: {e}")))
    }

    /// Aligned two-section table for terminals.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let name_w = self
            .constants
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(8)
            .max("constant".len());
        out.push_str(&format!("{:<name_w$}  {:>16}  definition\n", "constant", "value"));
        for c in &self.constants {
            out.push_str(&format!(
                "{:<name_w$}  {:>16.9}  {}\n",
                c.name, c.value, c.definition
            ));
        }
        out.push('\n');
        let ineq_w = self
            .inequalities
            .iter()
            .map(|i| i.name.len())
            .max()
            .unwrap_or(10)
            .max("inequality".len());
        out.push_str(&format!(
            "{:<ineq_w$}  {:>16}  {:>16}  {:<11}  definition\n",
            "inequality", "bound", "observed", "status"
        ));
        for i in &self.inequalities {
            let observed = match i.observed {
                Some(v) => format!("{v:>16.9}"),
                None => format!("{:>16}", "-"),
            };
            let status = match i.status {
                CheckStatus::Satisfied => "satisfied",
                CheckStatus::Violated => "VIOLATED",
                CheckStatus::NotChecked => "not-checked",
                CheckStatus::Vacuous => "vacuous",
            };
            out.push_str(&format!(
                "{:<ineq_w$}  {:>16.9}  {}  {:<11}  {}\n",
                i.name, i.bound, observed, status, i.definition
            ));
            if let Some(note) = &i.note {
                out.push_str(&format!("{:<ineq_w$}  note: {}\n", "", note));
            }
        }
        out
    }
}
