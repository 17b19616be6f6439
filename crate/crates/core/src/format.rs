//! Plain-text documents: `key: value` lines in a fixed field order, blank lines
//! between documents, `#` comments ignored. A value may continue onto following
//! lines that do not themselves start with `key:`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::oracle::GoodnessReport;
use crate::ring::RingDescriptor;
use crate::twin::{Method, TwinCertificate, TwoSumDecomposition};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    fields: Vec<(String, String)>,
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    pub fn parse(text: &str) -> Result<Document> {
        let mut docs = Document::parse_many(text)?;
        match docs.len() {
            1 => Ok(docs.pop().unwrap()),
            0 => Err(Error::Parse("empty document".into())),
            n => Err(Error::Parse(format!("expected one document, found {n}"))),
        }
    }

    pub fn parse_many(text: &str) -> Result<Vec<Document>> {
        let mut docs = Vec::new();
        let mut cur = Document::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                if !cur.fields.is_empty() {
                    docs.push(std::mem::take(&mut cur));
                }
                continue;
            }
            match split_key(line) {
                Some((k, v)) => {
                    cur.push(k, v);
                }
                None => match cur.fields.last_mut() {
                    Some((_, v)) => {
                        v.push(' ');
                        v.push_str(line);
                    }
                    None => {
                        return Err(Error::Parse(format!("line {}: expected `key: value`", lineno + 1)))
                    }
                },
            }
        }
        if !cur.fields.is_empty() {
            docs.push(cur);
        }
        Ok(docs)
    }
}

fn split_key(line: &str) -> Option<(&str, &str)> {
    let (k, v) = line.split_once(':')?;
    let ok = !k.is_empty() && k.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_');
    ok.then(|| (k, v.trim()))
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.fields {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

/// Joins documents with blank lines.
pub fn render_documents(docs: &[Document]) -> String {
    docs.iter().map(Document::to_string).collect::<Vec<_>>().join("\n")
}

pub fn matrix_document(m: &Matrix) -> Document {
    let mut d = Document::new();
    d.push("ring", m.ring().to_string()).push("rows", m.format_rows());
    d
}

pub fn matrix_from_document(doc: &Document) -> Result<Matrix> {
    let ring: RingDescriptor = doc.require("ring")?.parse()?;
    Matrix::parse_rows(&ring, doc.require("rows")?)
}

pub fn parse_matrix_file(text: &str) -> Result<Matrix> {
    matrix_from_document(&Document::parse(text)?)
}

pub fn certificate_document(cert: &TwinCertificate) -> Document {
    let two = cert.two_sum();
    let mut d = Document::new();
    d.push("kind", "twin-certificate")
        .push("ring", cert.matrix.ring().to_string())
        .push("method", cert.method.as_str())
        .push("m", cert.matrix.format_rows())
        .push("u", cert.unit.format_rows())
        .push("u_inv", cert.unit_inv.format_rows())
        .push("m_plus_u_inv", cert.plus_inv.format_rows())
        .push("m_minus_u_inv", cert.minus_inv.format_rows())
        .push("u1", two.first.format_rows())
        .push("u2", two.second.format_rows())
        .push("verified", cert.verify().to_string());
    d
}

/// Document for a matrix with no twin unit; includes a 2-sum when one exists.
pub fn obstruction_document(m: &Matrix, err: &Error, two_sum: Option<&TwoSumDecomposition>) -> Document {
    let mut d = Document::new();
    d.push("kind", "obstruction").push("ring", m.ring().to_string()).push("m", m.format_rows());
    if let Error::NotTwinGood { component, residue_field } = err {
        d.push("component", component.as_str()).push("residue_field", residue_field.as_str());
    }
    d.push("reason", err.to_string());
    match two_sum {
        Some(s) => {
            d.push("two_good", "true").push("u1", s.first.format_rows()).push("u2", s.second.format_rows());
        }
        None => {
            d.push("two_good", "false");
        }
    }
    d
}

/// Outcome of replaying a certificate document.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Replay {
    /// All six products and the 2-sum fields check out.
    pub recomputed: bool,
    /// The document's own `verified` flag.
    pub claimed: bool,
}

impl Replay {
    pub fn agrees(&self) -> bool {
        self.recomputed == self.claimed
    }
}

/// Re-checks a certificate document from its matrices alone.
pub fn replay_certificate(doc: &Document) -> Result<Replay> {
    if doc.require("kind")? != "twin-certificate" {
        return Err(Error::Parse(format!("not a twin certificate: kind {}", doc.require("kind")?)));
    }
    let ring: RingDescriptor = doc.require("ring")?.parse()?;
    let mat = |key: &str| Matrix::parse_rows(&ring, doc.require(key)?);
    let claimed = match doc.require("verified")? {
        "true" => true,
        "false" => false,
        other => return Err(Error::Parse(format!("verified must be true or false, got {other:?}"))),
    };
    let cert = TwinCertificate {
        matrix: mat("m")?,
        unit: mat("u")?,
        unit_inv: mat("u_inv")?,
        plus_inv: mat("m_plus_u_inv")?,
        minus_inv: mat("m_minus_u_inv")?,
        method: doc.require("method")?.parse::<Method>()?,
    };
    let (u1, u2) = (mat("u1")?, mat("u2")?);
    let sums_ok = cert.matrix.is_square()
        && cert.unit.rows() == cert.matrix.rows()
        && u1.checked_add(&u2).is_ok_and(|s| s == cert.matrix)
        && u2 == cert.unit.neg();
    Ok(Replay { recomputed: sums_ok && cert.verify(), claimed })
}

fn report_fields(ring: &RingDescriptor, outcome: &Result<GoodnessReport>) -> Vec<(&'static str, String)> {
    let mut f = vec![("ring", ring.to_string())];
    match outcome {
        Ok(r) => {
            let k_good: Vec<String> = r.k_good_status.iter().map(|(k, b)| format!("{k}={b}")).collect();
            f.push(("twin_good", r.twin_good.to_string()));
            f.push((
                "twin_failure_witness",
                r.twin_failure_witness.as_ref().map_or("none".into(), |x| ring.format_element(x)),
            ));
            f.push(("k_good", k_good.join(" ")));
            f.push(("unit_sum_number", r.unit_sum_number.to_string()));
            f.push(("criterion_prediction", r.criterion_prediction.to_string()));
            f.push(("agreement", r.agreement.to_string()));
        }
        Err(e) => f.push(("error", e.to_string())),
    }
    f
}

pub fn report_document(ring: &RingDescriptor, outcome: &Result<GoodnessReport>) -> Document {
    let mut d = Document::new();
    d.push("kind", "goodness-report");
    for (k, v) in report_fields(ring, outcome) {
        d.push(k, v);
    }
    d
}

pub const TABLE_HEADER: &str = "ring\ttwin_good\tusn\tprediction\tagreement\terror";

/// One tab-separated row per ring, preceded by [`TABLE_HEADER`].
pub fn report_table(rows: &[(RingDescriptor, Result<GoodnessReport>)]) -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for (ring, outcome) in rows {
        let doc = report_document(ring, outcome);
        let cell = |k: &str| doc.get(k).unwrap_or("-").to_string();
        let cols = [
            cell("ring"),
            cell("twin_good"),
            cell("unit_sum_number"),
            cell("criterion_prediction"),
            cell("agreement"),
            cell("error"),
        ];
        out.push_str(&cols.join("\t"));
        out.push('\n');
    }
    out
}
