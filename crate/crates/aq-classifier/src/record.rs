//! Flat per-class records and the JSON / CSV / LaTeX / text emitters.
//!
//! A [`ClassRecord`] collects everything the library computes about one
//! class into plain serializable data: the pair (I, F) as coefficient
//! vectors, the discrete-series flags, the Blattner and lowest K-type
//! parameters, the compact dual with its Betti numbers, the bigraded
//! polynomial, and the witness. JSON and CSV carry identical records;
//! the LaTeX emitter is the only pretty-printer.

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::classify::{blattner, is_discrete, is_holomorphic_ds, lowest_k_type};
use crate::cohomology::{identify_yq_from_phi, phi_q_and_gamma, poincare_two_var, BigradedPoly};
use crate::error::Error;
use crate::parabolic::{enumerate_classes, induced_class, ParabolicClass};
use crate::roots::{CVector, HermitianRootData, Root};

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "aq-classifier/1";

/// One classified parabolic class, flattened for serialization.
///
/// Root sets are lists of simple-root coefficient vectors in canonical
/// order; rationals are "num/den" strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub index: usize,
    pub m: u32,
    #[serde(rename = "I")]
    pub ideal: Vec<Vec<i64>>,
    #[serde(rename = "F")]
    pub filter: Vec<Vec<i64>>,
    #[serde(rename = "R_plus")]
    pub r_plus: usize,
    #[serde(rename = "R_minus")]
    pub r_minus: usize,
    pub is_discrete: bool,
    pub is_holomorphic_ds: bool,
    /// Blattner parameter coefficients, absent for non-discrete classes.
    pub blattner: Option<Vec<i64>>,
    pub lowest_k_type: Vec<i64>,
    #[serde(rename = "Yq_name")]
    pub yq_name: String,
    #[serde(rename = "Yq_betti")]
    pub yq_betti: Vec<u64>,
    /// Sparse polynomial as [p, q, coeff] triples, ascending in (p, q).
    #[serde(rename = "P_q")]
    pub p_q: Vec<(u32, u32, u64)>,
    pub witness: Vec<String>,
    #[serde(rename = "Phi_q")]
    pub phi_q: Vec<Vec<i64>>,
    #[serde(rename = "Gamma")]
    pub gamma: Vec<Vec<i64>>,
}

impl ClassRecord {
    /// Rebuild the bigraded polynomial from the stored triples.
    pub fn poly(&self) -> BigradedPoly {
        BigradedPoly::from_triples(self.p_q.iter().copied())
    }

    /// Parse the stored witness strings back into an exact vector.
    pub fn witness_cvector(&self) -> Result<CVector, Error> {
        let mut out = Vec::with_capacity(self.witness.len());
        for s in &self.witness {
            out.push(parse_rational(s)?);
        }
        Ok(CVector(out))
    }
}

/// Top-level JSON document: schema tag, rank parameter, record list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub schema: String,
    pub m: u32,
    pub count: usize,
    pub classes: Vec<ClassRecord>,
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<num_bigint::BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational component '{t}'")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == num_bigint::BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
        None => Ok(BigRational::from(parse_int(s)?)),
    }
}

fn coeff_rows(roots: &[Root]) -> Vec<Vec<i64>> {
    roots.iter().map(|r| r.coeffs.clone()).collect()
}

fn coeff_rows_ref(roots: &[&Root]) -> Vec<Vec<i64>> {
    roots.iter().map(|r| r.coeffs.clone()).collect()
}

/// Build the record for one class. `index` is the class's position in the
/// canonical enumeration order.
pub fn build_record(
    data: &HermitianRootData,
    class: &ParabolicClass,
    index: usize,
) -> Result<ClassRecord, Error> {
    let phi = phi_q_and_gamma(data, class)?;
    let descriptor = identify_yq_from_phi(data, class, &phi)?;
    let poly = poincare_two_var(data, class);
    let blattner_coeffs = match blattner(data, class) {
        Ok(root) => Some(root.coeffs),
        Err(Error::NotDiscrete) => None,
        Err(e) => return Err(e),
    };
    Ok(ClassRecord {
        index,
        m: class.m,
        ideal: coeff_rows_ref(&class.ideal_roots(data)),
        filter: coeff_rows_ref(&class.filter_roots(data)),
        r_plus: class.r_plus(),
        r_minus: class.r_minus(),
        is_discrete: is_discrete(data, class),
        is_holomorphic_ds: is_holomorphic_ds(data, class),
        blattner: blattner_coeffs,
        lowest_k_type: lowest_k_type(data, class).coeffs,
        yq_name: descriptor.name(),
        yq_betti: crate::cohomology::betti_from_ideals(data, class),
        p_q: poly.triples(),
        witness: class.witness.0.iter().map(rational_string).collect(),
        phi_q: coeff_rows(&phi.phi_q),
        gamma: coeff_rows(&phi.gamma),
    })
}

/// Enumerate all classes for `data` and build their records in canonical
/// order.
pub fn build_records(data: &HermitianRootData) -> Result<Vec<ClassRecord>, Error> {
    enumerate_classes(data)
        .iter()
        .enumerate()
        .map(|(i, class)| build_record(data, class, i))
        .collect()
}

/// Wrap records in a schema-tagged document.
pub fn document(m: u32, classes: Vec<ClassRecord>) -> Document {
    Document { schema: SCHEMA.to_string(), m, count: classes.len(), classes }
}

/// Pretty-printed JSON for the full document.
pub fn to_json(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("document serialization cannot fail")
}

/// Parse and validate a JSON document; rejects unknown schema tags.
pub fn from_json(text: &str) -> Result<Document, Error> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("json: {e}")))?;
    if doc.schema != SCHEMA {
        return Err(Error::Parse(format!(
            "unsupported schema '{}', expected '{SCHEMA}'",
            doc.schema
        )));
    }
    if doc.count != doc.classes.len() {
        return Err(Error::Parse(format!(
            "count field says {} but {} classes present",
            doc.count,
            doc.classes.len()
        )));
    }
    Ok(doc)
}

const CSV_COLUMNS: [&str; 16] = [
    "index",
    "m",
    "I",
    "F",
    "R_plus",
    "R_minus",
    "is_discrete",
    "is_holomorphic_ds",
    "blattner",
    "lowest_k_type",
    "Yq_name",
    "Yq_betti",
    "P_q",
    "witness",
    "Phi_q",
    "Gamma",
];

fn json_cell<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("cell serialization cannot fail")
}

fn parse_cell<T: for<'de> Deserialize<'de>>(cell: &str, column: &str) -> Result<T, Error> {
    serde_json::from_str(cell).map_err(|e| Error::Parse(format!("csv column {column}: {e}")))
}

/// CSV with one row per record; list-valued cells hold compact JSON so the
/// encoding stays lossless.
pub fn to_csv(records: &[ClassRecord]) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(CSV_COLUMNS).expect("csv header");
    for r in records {
        let blattner_cell = match &r.blattner {
            Some(v) => json_cell(v),
            None => String::new(),
        };
        let row = [
            r.index.to_string(),
            r.m.to_string(),
            json_cell(&r.ideal),
            json_cell(&r.filter),
            r.r_plus.to_string(),
            r.r_minus.to_string(),
            r.is_discrete.to_string(),
            r.is_holomorphic_ds.to_string(),
            blattner_cell,
            json_cell(&r.lowest_k_type),
            r.yq_name.clone(),
            json_cell(&r.yq_betti),
            json_cell(&r.p_q),
            json_cell(&r.witness),
            json_cell(&r.phi_q),
            json_cell(&r.gamma),
        ];
        wtr.write_record(&row).expect("csv row");
    }
    String::from_utf8(wtr.into_inner().expect("csv flush")).expect("csv utf8")
}

/// Parse CSV produced by [`to_csv`] back into records.
pub fn from_csv(text: &str) -> Result<Vec<ClassRecord>, Error> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr
        .headers()
        .map_err(|e| Error::Parse(format!("csv header: {e}")))?
        .clone();
    let mut pos = Vec::with_capacity(CSV_COLUMNS.len());
    for name in CSV_COLUMNS {
        let idx = headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Parse(format!("csv missing column {name}")))?;
        pos.push(idx);
    }
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| Error::Parse(format!("csv row: {e}")))?;
        let cell = |k: usize| row.get(pos[k]).unwrap_or("");
        let parse_usize = |k: usize| {
            cell(k)
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("csv column {}: not an integer", CSV_COLUMNS[k])))
        };
        let parse_bool = |k: usize| {
            cell(k)
                .parse::<bool>()
                .map_err(|_| Error::Parse(format!("csv column {}: not a boolean", CSV_COLUMNS[k])))
        };
        let blattner = if cell(8).is_empty() {
            None
        } else {
            Some(parse_cell(cell(8), "blattner")?)
        };
        out.push(ClassRecord {
            index: parse_usize(0)?,
            m: cell(1)
                .parse::<u32>()
                .map_err(|_| Error::Parse("csv column m: not an integer".to_string()))?,
            ideal: parse_cell(cell(2), "I")?,
            filter: parse_cell(cell(3), "F")?,
            r_plus: parse_usize(4)?,
            r_minus: parse_usize(5)?,
            is_discrete: parse_bool(6)?,
            is_holomorphic_ds: parse_bool(7)?,
            blattner,
            lowest_k_type: parse_cell(cell(9), "lowest_k_type")?,
            yq_name: cell(10).to_string(),
            yq_betti: parse_cell(cell(11), "Yq_betti")?,
            p_q: parse_cell(cell(12), "P_q")?,
            witness: parse_cell(cell(13), "witness")?,
            phi_q: parse_cell(cell(14), "Phi_q")?,
            gamma: parse_cell(cell(15), "Gamma")?,
        });
    }
    Ok(out)
}

fn nc_indices(data: &HermitianRootData, rows: &[Vec<i64>]) -> Result<BTreeSet<usize>, Error> {
    let mut out = BTreeSet::new();
    for row in rows {
        let idx = data
            .nc_index(&Root::new(row.clone()))
            .ok_or(Error::NotARoot)?;
        out.insert(idx);
    }
    Ok(out)
}

fn maximal_elements(data: &HermitianRootData, set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter()
        .copied()
        .filter(|&i| !set.iter().any(|&j| j != i && data.leq_nc(i, j)))
        .collect()
}

fn minimal_elements(data: &HermitianRootData, set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter()
        .copied()
        .filter(|&i| !set.iter().any(|&j| j != i && data.leq_nc(j, i)))
        .collect()
}

fn generators_latex(
    data: &HermitianRootData,
    indices: &[usize],
    relation: &str,
) -> String {
    let parts: Vec<String> = indices
        .iter()
        .map(|&i| format!("\\beta {relation} {}", data.noncompact_pos[i].latex_string()))
        .collect();
    format!("\\{{{}\\}}", parts.join(",\\ "))
}

fn roots_latex(rows: &[Vec<i64>]) -> String {
    if rows.is_empty() {
        return "\\varnothing".to_string();
    }
    let parts: Vec<String> = rows
        .iter()
        .map(|r| Root::new(r.clone()).latex_string())
        .collect();
    format!("\\{{{}\\}}", parts.join(",\\ "))
}

fn name_latex(name: &str) -> String {
    format!("\\mathrm{{{}}}", name.replace(")x", ")\\times "))
}

/// LaTeX tabular mirroring the report layout: down-set and up-set columns
/// described by their generators, then the simple roots, the marked set,
/// the compact dual, and the polynomial.
pub fn to_latex(data: &HermitianRootData, records: &[ClassRecord]) -> Result<String, Error> {
    let mut out = String::new();
    out.push_str("\\begin{tabular}{llllll}\n\\hline\n");
    out.push_str(
        "$\\Delta(\\mathfrak{u}\\cap\\mathfrak{p}_-)$ / $R_-$ & $\\Phi_{\\mathfrak{q}}$ & \
         $\\Delta(\\mathfrak{u}\\cap\\mathfrak{p}_+)$ / $R_+$ & $\\Gamma$ & \
         $Y_{\\mathfrak{q}}$ & $P_{\\mathfrak{q}}(x,t)$ \\\\\n\\hline\n",
    );
    for r in records {
        let ideal = nc_indices(data, &r.ideal)?;
        let filter = nc_indices(data, &r.filter)?;
        let ideal_cell = if ideal.is_empty() {
            "$\\varnothing$".to_string()
        } else {
            format!(
                "$-{}$",
                generators_latex(data, &maximal_elements(data, &ideal), "\\le")
            )
        };
        let filter_cell = if filter.is_empty() {
            "$\\varnothing$".to_string()
        } else {
            format!(
                "${}$",
                generators_latex(data, &minimal_elements(data, &filter), "\\ge")
            )
        };
        out.push_str(&format!(
            "{} ($R_-={}$) & ${}$ & {} ($R_+={}$) & ${}$ & ${}$ & ${}$ \\\\\n",
            ideal_cell,
            r.r_minus,
            roots_latex(&r.phi_q),
            filter_cell,
            r.r_plus,
            roots_latex(&r.gamma),
            name_latex(&r.yq_name),
            r.poly().latex(),
        ));
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    Ok(out)
}

fn coeff_set_text(rows: &[Vec<i64>]) -> String {
    let parts: Vec<String> = rows
        .iter()
        .map(|r| {
            let inner: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            format!("[{}]", inner.join(","))
        })
        .collect();
    format!("[{}]", parts.join(","))
}

/// One line per class with the machine-facing fields spelled out.
pub fn to_text(records: &[ClassRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let mut flags = Vec::new();
        if r.is_discrete {
            flags.push("discrete");
        }
        if r.is_holomorphic_ds {
            flags.push("holomorphic");
        }
        let flag_str = if flags.is_empty() {
            String::new()
        } else {
            format!("  [{}]", flags.join(", "))
        };
        out.push_str(&format!(
            "#{:<3} I={} F={} (R+,R-)=({},{}){}  Y={}  P = {}\n",
            r.index,
            coeff_set_text(&r.ideal),
            coeff_set_text(&r.filter),
            r.r_plus,
            r.r_minus,
            flag_str,
            r.yq_name,
            r.poly(),
        ));
    }
    out
}

/// Consistency check used by tests and the CLI: a record's witness must
/// re-induce exactly its (I, F).
pub fn witness_reinduces(data: &HermitianRootData, record: &ClassRecord) -> Result<bool, Error> {
    let c = record.witness_cvector()?;
    let induced = induced_class(data, &c)?;
    Ok(coeff_rows_ref(&induced.ideal_roots(data)) == record.ideal
        && coeff_rows_ref(&induced.filter_roots(data)) == record.filter)
}
