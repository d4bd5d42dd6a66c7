use std::io::{Read, Write};

use crate::{Error, Result};

/// Transfer function `B(z)/A(z)` in powers of `z^-1`, with `a[0] == 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct IirCoefficients {
    b: Vec<f64>,
    a: Vec<f64>,
}

impl IirCoefficients {
    /// Normalizes by `a[0]` and checks that the filter is stable.
    pub fn new(b: Vec<f64>, a: Vec<f64>) -> Result<Self> {
        let coeffs = Self::new_unchecked(b, a)?;
        if !coeffs.is_stable() {
            return Err(Error::UnstableFilter);
        }
        Ok(coeffs)
    }

    /// Normalizes by `a[0]` without the stability check.
    pub fn new_unchecked(mut b: Vec<f64>, mut a: Vec<f64>) -> Result<Self> {
        if b.is_empty() || a.is_empty() {
            return Err(Error::invalid("coefficient vectors must be non-empty"));
        }
        if b.iter().chain(&a).any(|c| !c.is_finite()) {
            return Err(Error::invalid("coefficients must be finite"));
        }
        let a0 = a[0];
        if a0 == 0.0 {
            return Err(Error::invalid("a[0] must be nonzero"));
        }
        if a0 != 1.0 {
            b.iter_mut().for_each(|c| *c /= a0);
            a.iter_mut().for_each(|c| *c /= a0);
        }
        Ok(Self { b, a })
    }

    pub fn identity() -> Self {
        Self {
            b: vec![1.0],
            a: vec![1.0],
        }
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn order(&self) -> usize {
        self.a.len().max(self.b.len()) - 1
    }

    /// All roots of `A(z)` strictly inside the unit circle, decided with the
    /// Schur-Cohn step-down recursion on the reflection coefficients.
    pub fn is_stable(&self) -> bool {
        let mut poly: Vec<f64> = self.a.clone();
        while poly.len() > 1 && *poly.last().unwrap() == 0.0 {
            poly.pop();
        }
        while poly.len() > 1 {
            let m = poly.len() - 1;
            let k = poly[m] / poly[0];
            // NaN fails too.
            if k.is_nan() || k.abs() >= 1.0 {
                return false;
            }
            let denom = 1.0 - k * k;
            let next: Vec<f64> = (0..m)
                .map(|i| (poly[i] - k * poly[m - i]) / denom)
                .collect();
            poly = next;
        }
        true
    }

    /// Two rows, `b,...` then `a,...`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
        for (tag, row) in [("b", &self.b), ("a", &self.a)] {
            let mut rec = vec![tag.to_string()];
            rec.extend(row.iter().map(f64::to_string));
            w.write_record(&rec)?;
        }
        w.flush().map_err(|e| Error::io("coefficient csv", e))
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut rd = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .from_reader(input);
        let (mut b, mut a) = (None, None);
        for rec in rd.records() {
            let rec = rec?;
            let tag = rec.get(0).unwrap_or("").trim();
            let values = rec
                .iter()
                .skip(1)
                .map(|v| {
                    v.trim()
                        .parse::<f64>()
                        .map_err(|e| Error::invalid(format!("coefficient '{v}': {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            match tag {
                "b" => b = Some(values),
                "a" => a = Some(values),
                other => return Err(Error::invalid(format!("unknown coefficient row '{other}'"))),
            }
        }
        match (b, a) {
            (Some(b), Some(a)) => Self::new(b, a),
            _ => Err(Error::invalid(
                "coefficient csv needs both 'b' and 'a' rows",
            )),
        }
    }
}
