//! Coefficient tables as CSV (`exponent,coefficient`) or JSON
//! (`[{"e": 0, "c": "1"}, ...]`). Coefficients are decimal strings since
//! they outgrow native integer widths.

use std::io::{self, Write};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRecord {
    pub e: usize,
    pub c: String,
}

impl CoeffRecord {
    pub fn new(e: usize, c: &BigInt) -> Self {
        CoeffRecord {
            e,
            c: c.to_string(),
        }
    }

    pub fn value(&self) -> Result<BigInt> {
        self.c
            .parse()
            .map_err(|_| Error::Config(format!("`{}` is not an integer", self.c)))
    }
}

pub fn records<'a>(rows: impl IntoIterator<Item = (usize, &'a BigInt)>) -> Vec<CoeffRecord> {
    rows.into_iter()
        .map(|(e, c)| CoeffRecord::new(e, c))
        .collect()
}

pub fn write_csv<W: Write>(w: W, rows: &[CoeffRecord]) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["exponent", "coefficient"])?;
    for r in rows {
        out.write_record([r.e.to_string(), r.c.clone()])?;
    }
    out.flush()
}

pub fn write_json<W: Write>(mut w: W, rows: &[CoeffRecord]) -> io::Result<()> {
    serde_json::to_writer(&mut w, rows)?;
    writeln!(w)
}

pub fn write_plain<W: Write>(mut w: W, rows: &[CoeffRecord]) -> io::Result<()> {
    for r in rows {
        writeln!(w, "{} {}", r.e, r.c)?;
    }
    Ok(())
}

pub fn read_csv(text: &str) -> Result<Vec<CoeffRecord>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| Error::Config(e.to_string()))?;
        let e = row
            .get(0)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Config(format!("bad exponent in {row:?}")))?;
        let c = row
            .get(1)
            .ok_or_else(|| Error::Config(format!("missing coefficient in {row:?}")))?;
        out.push(CoeffRecord {
            e,
            c: c.to_string(),
        });
    }
    Ok(out)
}

pub fn read_json(text: &str) -> Result<Vec<CoeffRecord>> {
    serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
}
