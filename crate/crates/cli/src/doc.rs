//! Matrix documents: the on-disk representation of a matrix, either as bare
//! CSV rows or as a small JSON object. Entries are kept as text so exact
//! fractions like `1/3` survive until parsing.

use pcm_core::PairwiseComparisonMatrix;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DocFormat {
    /// `n` lines of `n` comma-separated fields, no header.
    Csv,
    /// One object: `{"label": ..., "entries": [[...], ...]}`.
    Json,
}

#[derive(Debug, Clone)]
pub struct MatrixDocument {
    pub label: Option<String>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn parse(text: &str, format: DocFormat) -> Result<Self, CliError> {
        match format {
            DocFormat::Csv => Self::parse_csv(text),
            DocFormat::Json => Self::parse_json(text),
        }
    }

    fn parse_csv(text: &str) -> Result<Self, CliError> {
        let entries: Vec<Vec<String>> = text
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty())
            .map(|line| line.split(',').map(|f| f.trim().to_string()).collect())
            .collect();
        if entries.is_empty() {
            return Err(CliError::Validation("the matrix file is empty".into()));
        }
        Ok(Self {
            label: None,
            entries,
        })
    }

    fn parse_json(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| CliError::Validation(format!("invalid JSON document: {e}")))?;
        let label = value
            .get("label")
            .and_then(|l| l.as_str())
            .map(str::to_string);
        let rows = value
            .get("entries")
            .and_then(|e| e.as_array())
            .ok_or_else(|| {
                CliError::Validation("JSON document needs an \"entries\" array".into())
            })?;
        let mut entries = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let fields = row.as_array().ok_or_else(|| {
                CliError::Validation(format!("row {}: expected an array of entries", i + 1))
            })?;
            let mut out = Vec::with_capacity(fields.len());
            for (j, field) in fields.iter().enumerate() {
                let text = match field {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Number(v) => v.to_string(),
                    other => {
                        return Err(CliError::Validation(format!(
                            "row {}, column {}: entry {other} is neither a number nor a string",
                            i + 1,
                            j + 1
                        )))
                    }
                };
                out.push(text);
            }
            entries.push(out);
        }
        if entries.is_empty() {
            return Err(CliError::Validation("the matrix document is empty".into()));
        }
        Ok(Self { label, entries })
    }

    pub fn from_matrix(a: &PairwiseComparisonMatrix, label: Option<String>) -> Self {
        let entries = a
            .to_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.to_string()).collect())
            .collect();
        Self { label, entries }
    }

    /// Parses every entry (decimals and `p/q` fractions) and validates the
    /// resulting matrix; diagnostics carry one-based row and column numbers.
    pub fn to_matrix(&self) -> Result<PairwiseComparisonMatrix, CliError> {
        let mut rows = Vec::with_capacity(self.entries.len());
        for (i, row) in self.entries.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, field) in row.iter().enumerate() {
                let value = parse_entry(field).map_err(|why| {
                    CliError::Validation(format!("row {}, column {}: {why}", i + 1, j + 1))
                })?;
                out.push(value);
            }
            rows.push(out);
        }
        PairwiseComparisonMatrix::from_rows(&rows)
            .map_err(|e| CliError::Validation(e.to_string()))
    }

    pub fn render(&self, format: DocFormat) -> String {
        match format {
            DocFormat::Csv => {
                let mut out = String::new();
                for row in &self.entries {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
                out
            }
            DocFormat::Json => {
                let mut object = serde_json::Map::new();
                if let Some(label) = &self.label {
                    object.insert("label".into(), serde_json::Value::String(label.clone()));
                }
                object.insert(
                    "entries".into(),
                    serde_json::Value::Array(
                        self.entries
                            .iter()
                            .map(|row| {
                                serde_json::Value::Array(
                                    row.iter()
                                        .map(|e| serde_json::Value::String(e.clone()))
                                        .collect(),
                                )
                            })
                            .collect(),
                    ),
                );
                let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(object))
                    .expect("document serialization cannot fail");
                text.push('\n');
                text
            }
        }
    }
}

/// A decimal number or a fraction `p/q`.
fn parse_entry(text: &str) -> Result<f64, String> {
    let text = text.trim();
    if let Some((numerator, denominator)) = text.split_once('/') {
        let p: f64 = numerator
            .trim()
            .parse()
            .map_err(|_| format!("cannot parse '{text}' as a fraction"))?;
        let q: f64 = denominator
            .trim()
            .parse()
            .map_err(|_| format!("cannot parse '{text}' as a fraction"))?;
        if q == 0.0 {
            return Err(format!("fraction '{text}' divides by zero"));
        }
        Ok(p / q)
    } else {
        text.parse()
            .map_err(|_| format!("cannot parse '{text}' as a number or fraction"))
    }
}
