//! JSON structure-constant documents.
//!
//! ```json
//! {"dim": 2, "parity": [0, 0], "unit": ["1", "0"],
//!  "table": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]}
//! ```
//!
//! Indices are 0-based and scalars are `"num/den"` strings. A Lie document
//! has no `unit`; a coordinate document embeds an algebra document `A`, a Lie
//! document `D`, sparse `action` matrices and `form` quadruples.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::assembly::CoordinateData;
use crate::coordalg::AssocSuperalgebra;
use crate::error::{Error, Result};
use crate::lie::LieSuperalgebra;
use crate::linalg::{Field, Matrix};

type Quad = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub parity: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    pub table: Vec<Quad>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordinateDoc {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "A")]
    pub a: AlgebraDoc,
    #[serde(rename = "D")]
    pub d: AlgebraDoc,
    /// One sparse matrix per basis element of `D`, entries `[row, col, value]`.
    pub action: Vec<Vec<(usize, usize, String)>>,
    /// `[i, j, t, value]`: component `t` of `⟨a_i | a_j⟩`.
    pub form: Vec<Quad>,
}

/// Any of the three document kinds.
#[derive(Clone, Debug)]
pub enum Document<F> {
    Assoc(AssocSuperalgebra<F>),
    Lie(LieSuperalgebra<F>),
    Coordinates(CoordinateData<F>),
}

fn scalar<F: Field>(s: &str, field: &str) -> Result<F> {
    F::parse_scalar(s).ok_or_else(|| Error::Schema(format!("{field}: '{s}' is not a rational scalar")))
}

fn check_header(doc: &AlgebraDoc, what: &str) -> Result<()> {
    if doc.parity.len() != doc.dim {
        return Err(Error::Schema(format!(
            "{what}parity: expected {} entries, found {}",
            doc.dim,
            doc.parity.len()
        )));
    }
    if let Some(p) = doc.parity.iter().position(|&p| p > 1) {
        return Err(Error::Schema(format!("{what}parity[{p}]: must be 0 or 1")));
    }
    if let Some(l) = &doc.labels {
        if l.len() != doc.dim {
            return Err(Error::Schema(format!("{what}labels: expected {} entries, found {}", doc.dim, l.len())));
        }
    }
    Ok(())
}

fn quads<F: Field>(doc: &AlgebraDoc, what: &str) -> Result<Vec<(usize, usize, usize, F)>> {
    doc.table
        .iter()
        .enumerate()
        .map(|(r, (i, j, k, v))| {
            if *i >= doc.dim || *j >= doc.dim || *k >= doc.dim {
                return Err(Error::Schema(format!("{what}table[{r}]: index out of range for dim {}", doc.dim)));
            }
            Ok((*i, *j, *k, scalar(v, &format!("{what}table[{r}]"))?))
        })
        .collect()
}

fn quads_out<F: Field>(q: Vec<(usize, usize, usize, F)>) -> Vec<Quad> {
    q.into_iter().map(|(i, j, k, v)| (i, j, k, v.to_scalar_string())).collect()
}

impl AlgebraDoc {
    pub fn from_assoc<F: Field>(a: &AssocSuperalgebra<F>) -> Self {
        Self {
            dim: a.dim(),
            parity: a.parity().to_vec(),
            unit: Some(a.unit().iter().map(|x| x.to_scalar_string()).collect()),
            table: quads_out(a.quadruples()),
            labels: a.labels().map(|l| l.to_vec()),
        }
    }

    pub fn from_lie<F: Field>(l: &LieSuperalgebra<F>) -> Self {
        Self {
            dim: l.dim(),
            parity: l.parity().to_vec(),
            unit: None,
            table: quads_out(l.quadruples()),
            labels: l.labels().map(|l| l.to_vec()),
        }
    }

    pub fn to_assoc<F: Field>(&self) -> Result<AssocSuperalgebra<F>> {
        self.to_assoc_in("")
    }

    fn to_assoc_in<F: Field>(&self, what: &str) -> Result<AssocSuperalgebra<F>> {
        check_header(self, what)?;
        let unit = self
            .unit
            .as_ref()
            .ok_or_else(|| Error::Schema(format!("{what}unit: missing")))?;
        if unit.len() != self.dim {
            return Err(Error::Schema(format!("{what}unit: expected {} entries, found {}", self.dim, unit.len())));
        }
        let unit = unit
            .iter()
            .enumerate()
            .map(|(i, s)| scalar(s, &format!("{what}unit[{i}]")))
            .collect::<Result<Vec<F>>>()?;
        let a = AssocSuperalgebra::from_quadruples(self.parity.clone(), &quads(self, what)?, unit)?;
        match &self.labels {
            Some(l) => a.with_labels(l.clone()),
            None => Ok(a),
        }
    }

    pub fn to_lie<F: Field>(&self) -> Result<LieSuperalgebra<F>> {
        self.to_lie_in("")
    }

    fn to_lie_in<F: Field>(&self, what: &str) -> Result<LieSuperalgebra<F>> {
        check_header(self, what)?;
        if self.unit.is_some() {
            return Err(Error::Schema(format!("{what}unit: a Lie document has no unit")));
        }
        let l = LieSuperalgebra::from_quadruples(self.parity.clone(), &quads(self, what)?)?;
        match &self.labels {
            Some(lb) => l.with_labels(lb.clone()),
            None => Ok(l),
        }
    }
}

impl CoordinateDoc {
    pub fn from_data<F: Field>(cd: &CoordinateData<F>) -> Self {
        let na = cd.coord_algebra().dim();
        let action = cd
            .action()
            .iter()
            .map(|m| {
                let mut e = Vec::new();
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if !m[(r, c)].is_zero() {
                            e.push((r, c, m[(r, c)].to_scalar_string()));
                        }
                    }
                }
                e
            })
            .collect();
        let mut form = Vec::new();
        for (x, v) in cd.form().iter().enumerate() {
            for (t, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    form.push((x / na, x % na, t, c.to_scalar_string()));
                }
            }
        }
        Self {
            m: cd.m(),
            n: cd.n(),
            a: AlgebraDoc::from_assoc(cd.coord_algebra()),
            d: AlgebraDoc::from_lie(cd.d_algebra()),
            action,
            form,
        }
    }

    pub fn to_data<F: Field>(&self) -> Result<CoordinateData<F>> {
        let a = self.a.to_assoc_in("A.")?;
        let d = self.d.to_lie_in("D.")?;
        let (na, nd) = (a.dim(), d.dim());
        if self.action.len() != nd {
            return Err(Error::Schema(format!("action: expected {nd} matrices, found {}", self.action.len())));
        }
        let mut action = Vec::with_capacity(nd);
        for (t, entries) in self.action.iter().enumerate() {
            let mut m: Matrix<F> = Matrix::zeros(na, na);
            for (x, (r, c, v)) in entries.iter().enumerate() {
                if *r >= na || *c >= na {
                    return Err(Error::Schema(format!("action[{t}][{x}]: index out of range for dim {na}")));
                }
                m[(*r, *c)] = m[(*r, *c)].clone() + scalar::<F>(v, &format!("action[{t}][{x}]"))?;
            }
            action.push(m);
        }
        let mut form = vec![vec![F::zero(); nd]; na * na];
        for (x, (i, j, t, v)) in self.form.iter().enumerate() {
            if *i >= na || *j >= na || *t >= nd {
                return Err(Error::Schema(format!("form[{x}]: index out of range")));
            }
            let e = &mut form[i * na + j][*t];
            *e = e.clone() + scalar::<F>(v, &format!("form[{x}]"))?;
        }
        CoordinateData::new(self.m, self.n, a, d, action, form)
    }
}

impl<F: Field> Document<F> {
    pub fn to_json(&self) -> String {
        let v = match self {
            Document::Assoc(a) => serde_json::to_string_pretty(&AlgebraDoc::from_assoc(a)),
            Document::Lie(l) => serde_json::to_string_pretty(&AlgebraDoc::from_lie(l)),
            Document::Coordinates(c) => serde_json::to_string_pretty(&CoordinateDoc::from_data(c)),
        };
        v.expect("documents serialize")
    }

    /// Parses any document kind, telling them apart by the presence of the
    /// `A` and `unit` fields, and validates all type invariants.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Schema("top level: expected an object".into()))?;
        // re-parse from text so that diagnostics carry line and column
        if obj.contains_key("A") {
            let doc: CoordinateDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
            Ok(Document::Coordinates(doc.to_data()?))
        } else {
            let doc: AlgebraDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
            if doc.unit.is_some() {
                Ok(Document::Assoc(doc.to_assoc()?))
            } else {
                Ok(Document::Lie(doc.to_lie()?))
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Assoc(_) => "associative superalgebra",
            Document::Lie(_) => "Lie superalgebra",
            Document::Coordinates(_) => "coordinate data",
        }
    }
}

pub fn load_document<F: Field>(path: impl AsRef<Path>) -> Result<Document<F>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Document::from_json(&text)
}

pub fn save_document<F: Field>(doc: &Document<F>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, doc.to_json() + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::model_la_data;
    use crate::coordalg::{grassmann, matrix_super};
    use crate::Rational;

    #[test]
    fn grassmann_round_trip_is_bit_exact() {
        let a = grassmann::<Rational>(2).unwrap();
        let text = Document::Assoc(a.clone()).to_json();
        let back = Document::<Rational>::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        match back {
            Document::Assoc(b) => assert_eq!(b, a),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn coordinate_round_trip() {
        let cd = model_la_data(&matrix_super::<Rational>(1, 1).unwrap(), 1, 0).unwrap();
        let text = Document::Coordinates(cd.clone()).to_json();
        let back = Document::<Rational>::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        match back {
            Document::Coordinates(b) => assert!(b.same_structure(&cd)),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn errors() {
        let parity = r#"{"dim": 2, "parity": [0, 1], "unit": ["1", "0"],
            "table": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 1, "1"]]}"#;
        assert_eq!(
            Document::<Rational>::from_json(parity).unwrap_err(),
            Error::ParityViolation { i: 1, j: 1, k: 1 }
        );
        let unit = r#"{"dim": 1, "parity": [0], "unit": ["2"], "table": [[0, 0, 0, "1"]]}"#;
        assert!(matches!(Document::<Rational>::from_json(unit), Err(Error::UnitAxiom(_))));
        let bad = r#"{"dim": 1, "parity": [0], "unit": ["1"], "table": [[0, 0, 0, "x"]]}"#;
        assert!(matches!(Document::<Rational>::from_json(bad), Err(Error::Schema(m)) if m.contains("table[0]")));
        let missing = "{\"dim\": 1,\n \"unit\": [\"1\"], \"table\": []}";
        assert!(matches!(Document::<Rational>::from_json(missing), Err(Error::Schema(m)) if m.contains("parity") && m.contains("line")));
    }
}
