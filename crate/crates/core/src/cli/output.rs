use serde::Serialize;
use serde_json::Value;

/// Exit status and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    pub fn text(code: i32, stdout: String) -> Self {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    pub fn error(code: i32, stderr: String) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr,
        }
    }

    pub fn json(code: i32, value: &Value) -> Self {
        Output::text(code, serde_json::to_string_pretty(value).unwrap() + "\n")
    }
}

fn cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One-row CSV from a flat object; arrays become `key_0, key_1, ...` columns.
pub fn object_to_csv(value: &Value) -> String {
    let mut header = Vec::new();
    let mut row = Vec::new();
    if let Value::Object(map) = value {
        for (k, v) in map {
            match v {
                Value::Array(items) => {
                    for (i, item) in items.iter().enumerate() {
                        header.push(format!("{k}_{i}"));
                        row.push(cell(item));
                    }
                }
                other => {
                    header.push(k.clone());
                    row.push(cell(other));
                }
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).unwrap();
    w.write_record(&row).unwrap();
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

/// CSV with a header from a slice of flat records.
pub fn rows_to_csv_table<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
