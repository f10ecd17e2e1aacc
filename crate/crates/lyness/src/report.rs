//! Output formatting shared by the CLI and the examples: CSV with a
//! versioned schema line, minimal JSON objects carrying a `schema_version`
//! field, and aligned text tables. Floating values are printed with 17
//! significant digits in CSV/JSON (lossless for f64) and rounded to 6 in
//! tables, so identical inputs always produce byte-identical output.

use std::fmt::Write as _;

/// 17 significant digits: round-trips every f64 exactly.
pub fn fmt_f64_full(x: f64) -> String {
    format!("{x:.16e}")
}

/// Table rounding.
pub fn fmt_f64_table(x: f64) -> String {
    format!("{x:.6}")
}

/// A CSV document with a schema comment line and a header row.
pub struct Csv {
    buf: String,
    columns: usize,
}

impl Csv {
    pub fn new(schema: &str, header: &[&str]) -> Self {
        let mut buf = String::new();
        let _ = writeln!(buf, "# schema: {schema}");
        let _ = writeln!(buf, "{}", header.join(","));
        Csv {
            buf,
            columns: header.len(),
        }
    }

    pub fn row(&mut self, fields: &[String]) {
        debug_assert_eq!(fields.len(), self.columns);
        let _ = writeln!(self.buf, "{}", fields.join(","));
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

/// A JSON value; floats are rendered with [`fmt_f64_full`].
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    UInt(u64),
    Float(f64),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(String, Json)>),
}

impl Json {
    pub fn object(fields: Vec<(&str, Json)>) -> Json {
        Json::Object(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }

    /// An object with the leading `schema_version` field.
    pub fn command_object(schema: &str, fields: Vec<(&str, Json)>) -> Json {
        let mut all = vec![("schema_version".to_string(), Json::Str(schema.to_string()))];
        all.extend(fields.into_iter().map(|(k, v)| (k.to_string(), v)));
        Json::Object(all)
    }

    pub fn render(&self) -> String {
        let mut buf = String::new();
        self.write(&mut buf, 0);
        buf.push('\n');
        buf
    }

    fn write(&self, buf: &mut String, indent: usize) {
        match self {
            Json::Null => buf.push_str("null"),
            Json::Bool(b) => {
                let _ = write!(buf, "{b}");
            }
            Json::Int(i) => {
                let _ = write!(buf, "{i}");
            }
            Json::UInt(u) => {
                let _ = write!(buf, "{u}");
            }
            Json::Float(x) => {
                if x.is_finite() {
                    // {:.16e} emits a valid JSON number with 17 significant digits.
                    let _ = write!(buf, "{}", fmt_f64_full(*x));
                } else {
                    buf.push_str("null");
                }
            }
            Json::Str(s) => {
                let _ = write!(buf, "\"{}\"", escape(s));
            }
            Json::Array(items) => {
                if items.is_empty() {
                    buf.push_str("[]");
                    return;
                }
                buf.push_str("[\n");
                for (k, item) in items.iter().enumerate() {
                    pad(buf, indent + 1);
                    item.write(buf, indent + 1);
                    if k + 1 < items.len() {
                        buf.push(',');
                    }
                    buf.push('\n');
                }
                pad(buf, indent);
                buf.push(']');
            }
            Json::Object(fields) => {
                if fields.is_empty() {
                    buf.push_str("{}");
                    return;
                }
                buf.push_str("{\n");
                for (k, (key, value)) in fields.iter().enumerate() {
                    pad(buf, indent + 1);
                    let _ = write!(buf, "\"{}\": ", escape(key));
                    value.write(buf, indent + 1);
                    if k + 1 < fields.len() {
                        buf.push(',');
                    }
                    buf.push('\n');
                }
                pad(buf, indent);
                buf.push('}');
            }
        }
    }
}

fn pad(buf: &mut String, indent: usize) {
    for _ in 0..indent {
        buf.push_str("  ");
    }
}

fn escape(s: &str) -> String {
    s.chars()
        .flat_map(|c| match c {
            '"' => "\\\"".chars().collect::<Vec<_>>(),
            '\\' => "\\\\".chars().collect(),
            '\n' => "\\n".chars().collect(),
            c => vec![c],
        })
        .collect()
}

/// Left-aligned text table.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (k, cell) in row.iter().enumerate() {
            if k < widths.len() {
                widths[k] = widths[k].max(cell.len());
            }
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: Vec<String>, widths: &[usize]| -> String {
        let mut line = String::new();
        for (k, cell) in cells.iter().enumerate() {
            let _ = write!(line, "{:<width$}", cell, width = widths[k]);
            if k + 1 < cells.len() {
                line.push_str("  ");
            }
        }
        line.trim_end().to_string()
    };
    out.push_str(&fmt_row(header.iter().map(|s| s.to_string()).collect(), &widths));
    out.push('\n');
    let total: usize = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
    out.push_str(&"-".repeat(total));
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_row(row.clone(), &widths));
        out.push('\n');
    }
    out
}
