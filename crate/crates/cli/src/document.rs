use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok { Status::Pass } else { Status::Fail }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table { headers: headers.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub heading: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
}

impl Section {
    pub fn new(heading: impl Into<String>) -> Self {
        Section { heading: heading.into(), status: None, notes: Vec::new(), table: None }
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = Some(status);
        self
    }
}

/// A render-only result: every command builds one of these and the chosen format decides
/// how it is printed.
#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub title: String,
    pub sections: Vec<Section>,
}

impl Document {
    pub fn new(title: impl Into<String>) -> Self {
        Document { title: title.into(), sections: Vec::new() }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn failed(&self) -> bool {
        self.sections.iter().any(|s| s.status == Some(Status::Fail))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            Format::Markdown => self.markdown(),
            Format::Csv => self.csv(),
        }
    }

    fn markdown(&self) -> String {
        let mut out = format!("# {}\n", self.title);
        for s in &self.sections {
            out.push('\n');
            match s.status {
                Some(st) => writeln!(out, "## {}: {}", s.heading, st.label()),
                None => writeln!(out, "## {}", s.heading),
            }
            .unwrap();
            if !s.notes.is_empty() {
                out.push('\n');
                for n in &s.notes {
                    writeln!(out, "{n}").unwrap();
                }
            }
            if let Some(t) = &s.table {
                out.push('\n');
                writeln!(out, "| {} |", t.headers.join(" | ")).unwrap();
                writeln!(out, "|{}", "---|".repeat(t.headers.len())).unwrap();
                for r in &t.rows {
                    writeln!(out, "| {} |", r.join(" | ")).unwrap();
                }
            }
        }
        out
    }

    /// One block per table, each row prefixed by its section heading.
    fn csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        let mut first = true;
        for s in &self.sections {
            let Some(t) = &s.table else { continue };
            if !first {
                w.write_record(None::<&[u8]>).unwrap();
            }
            first = false;
            let mut header = vec!["section".to_string()];
            header.extend(t.headers.iter().cloned());
            w.write_record(&header).unwrap();
            for r in &t.rows {
                w.write_record(std::iter::once(&s.heading).chain(r)).unwrap();
            }
        }
        String::from_utf8(w.into_inner().unwrap()).expect("utf-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Document {
        let mut t = Table::new(["λ", "value"]);
        t.push(vec!["(2,1)".into(), "2".into()]);
        let mut d = Document::new("demo");
        d.push(Section::new("numbers").note("a note").with_table(t).with_status(Status::Pass));
        d.push(Section::new("empty"));
        d
    }

    #[test]
    fn markdown_layout() {
        let md = sample().render(Format::Markdown);
        assert!(md.starts_with("# demo\n"));
        assert!(md.contains("## numbers: PASS"));
        assert!(md.contains("| λ | value |\n|---|---|\n| (2,1) | 2 |"));
    }

    #[test]
    fn csv_quotes_commas() {
        let csv = sample().render(Format::Csv);
        assert_eq!(csv, "section,λ,value\nnumbers,\"(2,1)\",2\n");
    }

    #[test]
    fn json_has_status() {
        let v: serde_json::Value = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        assert_eq!(v["sections"][0]["status"], "PASS");
        assert!(v["sections"][1].get("table").is_none());
        assert!(!sample().failed());
    }
}
